//! One-sided focal-free families: exact optima, own-subsets and the bound.

use num_rational::Ratio;
use sunforge::bounds::{focal_exponent, log2_rational, one_sided_total_upper};
use sunforge::search::{exact_g_uniform, own_subset_fraction};
use sunforge::Kind;

fn main() -> sunforge::Result<()> {
    for r in [3, 4] {
        let (n, k) = (6, 3);
        let res = exact_g_uniform(n, k, r, Kind::Bff1)?;
        let s = focal_exponent(k, r);
        let worst = (0..res.witness.len())
            .map(|m| own_subset_fraction(&res.witness, m, s))
            .collect::<sunforge::Result<Vec<_>>>()?
            .into_iter()
            .min()
            .unwrap_or(Ratio::from_integer(1));
        println!(
            "r={r} n={n} k={k}: optimum {} members, smallest own-subset fraction {worst}",
            res.value
        );
    }
    for n in [50, 200, 800] {
        let total = one_sided_total_upper(n, 3)?;
        println!(
            "n={n}: (1/n) log2 bound = {:.5}, log2 base = {:.5}",
            log2_rational(&total.sum) / n as f64,
            total.asymptotic_base.log2()
        );
    }
    Ok(())
}
