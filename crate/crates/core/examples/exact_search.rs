//! Exact extremal values for tiny lengths.

use sunforge::search::exact_g;
use sunforge::Kind;

fn main() -> sunforge::Result<()> {
    for r in [3, 4] {
        for n in 1..=4 {
            let vals: Vec<String> = [Kind::Ns, Kind::Ff, Kind::Bff0, Kind::Bff1]
                .iter()
                .map(|&k| {
                    let res = exact_g(n, r, k)?;
                    Ok(format!("{k}={} ({} nodes)", res.value, res.nodes_explored))
                })
                .collect::<sunforge::Result<_>>()?;
            println!("r={r} n={n}: {}", vals.join(", "));
        }
    }
    let res = exact_g(4, 3, Kind::Ff)?;
    print!(
        "extremal focal-free family, n=4 r=3:\n{}",
        res.witness.to_text()
    );
    Ok(())
}
