use super::field::{Field, FieldElement};
use crate::bitfam::{QFamily, QVector, MAX_Q};
use crate::bounds::focal_exponent;
use crate::detect::check_r;
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

/// Limits for [`reed_solomon_family`].
#[derive(Clone, Copy, Debug)]
pub struct RsOptions {
    /// Largest family emitted in full.
    pub cap: u64,
    /// When the full family exceeds `cap`, draw this many distinct
    /// polynomials uniformly with the given seed instead of failing.
    pub sample: Option<(u64, usize)>,
}

impl Default for RsOptions {
    fn default() -> Self {
        RsOptions {
            cap: 1 << 20,
            sample: None,
        }
    }
}

/// Polynomial degree bound `d = ceil((r-2)n/(r-1))`.
pub fn rs_degree(n: usize, r: usize) -> usize {
    focal_exponent(n, r)
}

/// Evaluations of every polynomial of degree below `d = ceil((r-2)n/(r-1))`
/// at the first `n` field elements.
///
/// Two distinct polynomials of degree below `d` agree on fewer than `d`
/// points, while a focal family of size `r` would force some petal to agree
/// with the focus on at least `d` coordinates. The family is therefore
/// focal-free and has `q^d` members.
///
/// Polynomials are enumerated with coefficient vectors in base-`q` counting
/// order, constant term least significant.
pub fn reed_solomon_family(field: &Field, n: usize, r: usize, opts: RsOptions) -> Result<QFamily> {
    check_r(r)?;
    let q = field.q();
    if (q as usize) < n {
        return Err(Error::InvalidParams(format!(
            "q = {q} is smaller than n = {n}"
        )));
    }
    if q > MAX_Q {
        return Err(Error::InvalidParams(format!(
            "q = {q} above the supported {MAX_Q}"
        )));
    }
    let d = rs_degree(n, r);
    let points: Vec<FieldElement> = field.elements().take(n).collect();
    let encode = |coeffs: &[FieldElement]| -> Result<QVector> {
        QVector::new(
            q,
            points
                .iter()
                .map(|&a| field.eval_poly(coeffs, a).0 as u8)
                .collect(),
        )
    };
    let full = u64::from(q)
        .checked_pow(d as u32)
        .filter(|&size| size <= opts.cap);

    let mut family = QFamily::new(n, q)?;
    match (full, opts.sample) {
        (Some(size), _) => {
            let mut coeffs = vec![FieldElement(0); d];
            for idx in 0..size {
                let mut rest = idx;
                for c in coeffs.iter_mut() {
                    *c = FieldElement((rest % u64::from(q)) as u32);
                    rest /= u64::from(q);
                }
                family.insert(encode(&coeffs)?)?;
            }
        }
        (None, Some((seed, count))) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut seen = HashSet::new();
            while family.len() < count {
                let coeffs: Vec<FieldElement> =
                    (0..d).map(|_| FieldElement(rng.gen_range(0..q))).collect();
                if seen.insert(coeffs.clone()) {
                    family.insert(encode(&coeffs)?)?;
                }
            }
        }
        (None, None) => {
            return Err(Error::CapExceeded(format!(
                "{q}^{d} members exceed the cap of {}",
                opts.cap
            )))
        }
    }
    Ok(family)
}
