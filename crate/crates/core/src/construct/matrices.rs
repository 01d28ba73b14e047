use crate::detect::check_r;
use crate::{Error, Kind, Result};
use num_bigint::BigUint;

/// Largest `r * n` for which matrices are enumerated one by one.
pub const MATRIX_ENUM_CAP: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMode {
    Enumerate,
    ClosedForm,
}

/// Whether an `r`-entry column (bit `i` = row `i`) is allowed.
///
/// Near-sunflowers allow `0, 1, r-1` or `r` ones. Focal families need the
/// first entry repeated at least `r-2` times among the other `r-1`.
pub fn column_allowed(column: u32, r: usize, kind: Kind) -> bool {
    let ones = column.count_ones() as usize;
    match kind {
        Kind::Ns => ones <= 1 || ones + 1 >= r,
        _ => {
            let first = column & 1;
            let rest = column >> 1;
            let agree = if first == 1 {
                rest.count_ones() as usize
            } else {
                r - 1 - rest.count_ones() as usize
            };
            agree + 2 >= r
        }
    }
}

/// Number of `r x n` binary matrices whose every column is allowed.
///
/// `Enumerate` walks all `2^(rn)` matrices; `ClosedForm` returns
/// `(2r+2)^n` or `(2r)^n`.
pub fn count_matrices(n: usize, r: usize, kind: Kind, mode: CountMode) -> Result<BigUint> {
    check_r(r)?;
    if !matches!(kind, Kind::Ns | Kind::Ff) {
        return Err(Error::InvalidParams(format!(
            "no matrix count for kind {kind}"
        )));
    }
    match mode {
        CountMode::ClosedForm => {
            let base = if kind == Kind::Ns { 2 * r + 2 } else { 2 * r };
            Ok(BigUint::from(base).pow(n as u32))
        }
        CountMode::Enumerate => {
            if r * n > MATRIX_ENUM_CAP {
                return Err(Error::CapExceeded(format!("2^{} matrices", r * n)));
            }
            // Row i occupies bits i*n .. (i+1)*n.
            let count = (0..1u64 << (r * n))
                .filter(|&m| {
                    (0..n).all(|j| {
                        let column =
                            (0..r).fold(0u32, |c, i| c | ((m >> (i * n + j) & 1) as u32) << i);
                        column_allowed(column, r, kind)
                    })
                })
                .count();
            Ok(BigUint::from(count))
        }
    }
}
