//! Set-size inequality for families with pairwise-intersecting symmetric
//! differences.

use sunforge::bounds::{theorem_k_rate, theorem_k_sum};
use sunforge::detect::theorem_k_inequality_check;
use sunforge::Family;

fn main() -> sunforge::Result<()> {
    let fano = Family::from_strs(&[
        "1101000", "0110100", "0011010", "0001101", "1000110", "0100011", "1010001",
    ])?;
    let rep = theorem_k_inequality_check(&fano)?;
    println!("{}", serde_json::to_string_pretty(&rep)?);

    for k in [4, 8, 16] {
        let sums: Vec<String> = (0..=k)
            .map(|t| theorem_k_sum(k, t).map(|s| s.to_string()))
            .collect::<sunforge::Result<_>>()?;
        println!("k={k}: {}", sums.join(" "));
    }
    let rate = theorem_k_rate();
    println!("x* = {:.12}, base = {:.9}", rate.x_star, rate.base);
    Ok(())
}
