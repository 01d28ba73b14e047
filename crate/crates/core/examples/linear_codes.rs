//! Focal 4-families inside random binary linear codes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sunforge::detect::{focal_from_linear, gf2_rank};
use sunforge::BitVector;

fn main() -> sunforge::Result<()> {
    let (n, dim) = (24, 12);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for trial in 0..5 {
        let basis = loop {
            let b: Vec<BitVector> = (0..dim)
                .map(|_| {
                    BitVector::from_bits(&(0..n).map(|_| rng.gen_bool(0.5)).collect::<Vec<_>>())
                })
                .collect::<sunforge::Result<_>>()?;
            if gf2_rank(&b) == dim {
                break b;
            }
        };
        match focal_from_linear(&basis) {
            Ok(lf) => {
                let petals: Vec<String> = lf
                    .witness
                    .petals
                    .iter()
                    .map(|&p| lf.code.members()[p].to_string())
                    .collect();
                println!("code {trial}: petals {petals:?}");
            }
            Err(e) => println!("code {trial}: {e}"),
        }
    }
    Ok(())
}
