//! Extract a focal family from a family above the size threshold.

use sunforge::bounds::upper_ff;
use sunforge::detect::{extract_focal_from_large, is_focal};
use sunforge::Family;

fn main() -> sunforge::Result<()> {
    for (n, r) in [(6, 3), (9, 4), (12, 5)] {
        let cube = Family::cube(n)?;
        let w = extract_focal_from_large(&cube, r)?;
        let members: Vec<String> = w
            .petals
            .iter()
            .map(|&p| cube.members()[p].to_string())
            .collect();
        println!(
            "n={n} r={r}: |F|={} > {}; focus {} petals {:?} valid={}",
            cube.len(),
            upper_ff(n, r)?,
            cube.members()[w.focus],
            members,
            is_focal(&cube, w.focus, &w.petals)?
        );
    }
    Ok(())
}
