//! Focal-free Reed-Solomon families over small fields.

use sunforge::construct::{reed_solomon_family, rs_degree, Field, RsOptions};
use sunforge::detect::find_focal_q;

fn main() -> sunforge::Result<()> {
    for (q, n, r) in [(5, 4, 3), (3, 3, 4), (4, 4, 3), (7, 6, 4)] {
        let field = Field::for_order(q)?;
        let fam = reed_solomon_family(&field, n, r, RsOptions::default())?;
        println!(
            "q={q} n={n} r={r}: degree < {}, {} members, focal {:?}",
            rs_degree(n, r),
            fam.len(),
            find_focal_q(&fam, r)?
        );
    }
    let f5 = Field::for_order(5)?;
    print!(
        "{}",
        reed_solomon_family(&f5, 4, 3, RsOptions::default())?.to_text()
    );
    Ok(())
}
