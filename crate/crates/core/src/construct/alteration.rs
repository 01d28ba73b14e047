use crate::bitfam::{BitVector, Family};
use crate::bounds::factorial;
use crate::detect::{check_r, find_focal_in, find_near_sunflower, Side};
use crate::{Error, Kind, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Largest expected initial sample `2^n * p` accepted by
/// [`random_with_alterations`].
pub const ALTERATION_SIZE_CAP: f64 = 4096.0;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlterationTrace {
    pub seed: u64,
    pub n: usize,
    pub r: usize,
    pub kind: Kind,
    pub p_used: f64,
    pub initial_size: usize,
    pub removals: usize,
    pub final_size: usize,
}

/// Maximiser of `2^n p - M p^r` over `(0, 1]`, where `M` is the tuple count
/// bound `(2r+2)^n / r!` (near-sunflowers) or `(2r)^n / (r-1)!` (focal).
///
/// The unconstrained maximiser is `(2^n / (r M))^(1/(r-1))`; it is computed
/// in log space and clamped to 1.
pub fn optimal_p(n: usize, r: usize, kind: Kind) -> Result<f64> {
    check_r(r)?;
    let (base, fact) = match kind {
        Kind::Ns => {
            if r == 3 {
                log::warn!(
                    "every triple is a near-sunflower; r = 3 gives a degenerate construction"
                );
            }
            (2 * r + 2, factorial(r))
        }
        Kind::Ff => (2 * r, factorial(r - 1)),
        other => {
            return Err(Error::InvalidParams(format!(
                "no tuple count for kind {other}"
            )))
        }
    };
    let log2_m = n as f64 * (base as f64).log2() - crate::bounds::log2_biguint(&fact);
    let log2_p = (n as f64 - (r as f64).log2() - log2_m) / (r - 1) as f64;
    Ok(2f64.powf(log2_p.min(0.0)))
}

fn find_violation(family: &Family, r: usize, kind: Kind) -> Result<Option<Vec<usize>>> {
    Ok(match kind {
        Kind::Ns => find_near_sunflower(family, r)?.map(|w| w.indices),
        Kind::Ff | Kind::Bff0 | Kind::Bff1 => {
            let side = match kind {
                Kind::Ff => Side::Both,
                Kind::Bff0 => Side::Zero,
                _ => Side::One,
            };
            find_focal_in(family, r, side)?.map(|w| {
                let mut all = w.petals;
                all.push(w.focus);
                all
            })
        }
    })
}

/// Random choice with alterations.
///
/// Each of the `2^n` vectors, in lexicographic order, is kept with
/// probability `p` (default [`optimal_p`]). Randomness is a ChaCha8 stream
/// seeded with `seed` via `seed_from_u64`, one `f64` draw per vector. Then,
/// while the family holds a forbidden `r`-tuple, the highest-index member of
/// the first such tuple is deleted.
pub fn random_with_alterations(
    n: usize,
    r: usize,
    kind: Kind,
    seed: u64,
    p: Option<f64>,
) -> Result<(Family, AlterationTrace)> {
    check_r(r)?;
    let p = match p {
        Some(p) if !(0.0..=1.0).contains(&p) => {
            return Err(Error::InvalidParams(format!(
                "probability {p} outside [0, 1]"
            )))
        }
        Some(p) => p,
        None => optimal_p(n, r, kind)?,
    };
    if n == 0 || n > 24 || (n as f64).exp2() * p > ALTERATION_SIZE_CAP {
        return Err(Error::CapExceeded(format!(
            "expected sample 2^{n} * {p} exceeds {ALTERATION_SIZE_CAP}"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut family = Family::new(n)?;
    for x in 0..1u64 << n {
        if rng.gen::<f64>() < p {
            family.insert(BitVector::from_index(n, x)?)?;
        }
    }
    let initial_size = family.len();
    let mut removals = 0;
    while let Some(tuple) = find_violation(&family, r, kind)? {
        let victim = *tuple.iter().max().expect("tuple is nonempty");
        family = family.without(victim)?;
        removals += 1;
    }
    let trace = AlterationTrace {
        seed,
        n,
        r,
        kind,
        p_used: p,
        initial_size,
        removals,
        final_size: family.len(),
    };
    Ok((family, trace))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn optimal_p_closed_forms() {
        let p = optimal_p(0, 3, Kind::Ff).unwrap();
        assert!((p - (2.0f64 / 3.0).sqrt()).abs() < 1e-12);
        assert!((p - 0.8165).abs() < 1e-4);
        let p = optimal_p(12, 4, Kind::Ns).unwrap();
        let expected = (4096.0 * 24.0 / (4.0 * 1e12f64)).powf(1.0 / 3.0);
        assert!((p / expected - 1.0).abs() < 1e-12);
    }

    #[test]
    fn optimal_p_decays_geometrically() {
        let ratio = 5f64.powf(-1.0 / 3.0);
        for n in 10..20 {
            let a = optimal_p(n, 4, Kind::Ns).unwrap();
            let b = optimal_p(n + 1, 4, Kind::Ns).unwrap();
            assert!((b / a - ratio).abs() < 1e-12);
        }
    }

    #[test]
    fn zero_probability_is_empty() {
        let (fam, trace) = random_with_alterations(8, 4, Kind::Ns, 1, Some(0.0)).unwrap();
        assert!(fam.is_empty());
        assert_eq!((trace.initial_size, trace.removals), (0, 0));
    }

    #[test]
    fn output_is_violation_free_and_reproducible() {
        for kind in [Kind::Ns, Kind::Ff] {
            let (fam, trace) = random_with_alterations(8, 4, kind, 9, Some(0.2)).unwrap();
            assert_eq!(trace.final_size, trace.initial_size - trace.removals);
            assert_eq!(find_violation(&fam, 4, kind).unwrap(), None);
            let (again, _) = random_with_alterations(8, 4, kind, 9, Some(0.2)).unwrap();
            assert_eq!(fam, again);
        }
    }

    #[test]
    fn rejects_oversized_samples() {
        assert!(matches!(
            random_with_alterations(16, 4, Kind::Ns, 0, Some(1.0)),
            Err(Error::CapExceeded(_))
        ));
        assert!(random_with_alterations(4, 4, Kind::Ns, 0, Some(1.5)).is_err());
    }
}
