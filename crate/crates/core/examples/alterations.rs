//! Random choice with alterations at the optimal inclusion probability.

use sunforge::construct::{optimal_p, random_with_alterations};
use sunforge::detect::find_near_sunflower;
use sunforge::Kind;

fn main() -> sunforge::Result<()> {
    let (n, r) = (10, 4);
    let p = optimal_p(n, r, Kind::Ns)?;
    println!("n={n} r={r} p={p:.6}");
    for seed in 0..5 {
        let (fam, trace) = random_with_alterations(n, r, Kind::Ns, seed, None)?;
        assert!(find_near_sunflower(&fam, r)?.is_none());
        println!("{}", serde_json::to_string(&trace)?);
    }
    let (fam, trace) = random_with_alterations(12, 5, Kind::Ff, 1, None)?;
    println!(
        "focal-free, n=12 r=5: {} members ({} removed)",
        fam.len(),
        trace.removals
    );
    Ok(())
}
