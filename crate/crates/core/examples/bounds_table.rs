//! Closed-form bounds over a small grid.

use sunforge::bounds::{bounds_table, BoundsGrid};

fn main() -> sunforge::Result<()> {
    let grid = BoundsGrid {
        n: vec![20],
        r: vec![3, 4],
        q: vec![2, 5],
        k: vec![4],
    };
    for row in bounds_table(&grid)? {
        let rate = row.rate.map_or_else(String::new, |r| format!("{r:.6}"));
        println!(
            "{:<24} {:<14} {:>16.6e} {:>10}  {}",
            row.name, row.params, row.approx, rate, row.provenance
        );
    }
    Ok(())
}
