//! Closed-form bounds on focal-free and near-sunflower-free families.
//!
//! Integer and rational values are exact (`BigUint` / `BigRational`).
//! Real-valued rates are plain `f64`; `o(1)` terms are never folded in.

use crate::detect::check_r;
use crate::{Error, Kind, Result};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

/// Upper limit on the set-size growth base.
pub const SET_SIZE_BASE_LIMIT: f64 = 2.148;

pub fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// `ceil((r-2) * len / (r-1))`.
pub fn focal_exponent(len: usize, r: usize) -> usize {
    ceil_div((r - 2) * len, r - 1)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// `log2` of a positive big integer, accurate to `f64` precision.
pub fn log2_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap().log2();
    }
    let shift = bits - 64;
    (x >> shift).to_f64().unwrap().log2() + shift as f64
}

/// `log2` of a positive rational.
pub fn log2_rational(x: &BigRational) -> f64 {
    let num = x.numer().to_biguint().expect("positive");
    let den = x.denom().to_biguint().expect("positive");
    log2_biguint(&num) - log2_biguint(&den)
}

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `(r-1) * 2^ceil((r-2)n/(r-1))`, the upper bound on focal-free (and hence
/// near-sunflower-free) binary families.
pub fn upper_ff(n: usize, r: usize) -> Result<BigUint> {
    check_r(r)?;
    Ok(BigUint::from(r - 1) << focal_exponent(n, r))
}

/// Per-coordinate growth rate of [`upper_ff`]: `2^((r-2)/(r-1))`.
pub fn upper_ff_rate(r: usize) -> Result<f64> {
    check_r(r)?;
    Ok(2f64.powf((r - 2) as f64 / (r - 1) as f64))
}

/// Per-coordinate base of the alteration lower bound:
/// `2 / (r+1)^(1/(r-1))` for near-sunflowers, `2 / r^(1/(r-1))` for focal
/// families.
pub fn lower_rate(r: usize, kind: Kind) -> Result<f64> {
    check_r(r)?;
    let e = 1.0 / (r - 1) as f64;
    match kind {
        Kind::Ns => Ok(2.0 / ((r + 1) as f64).powf(e)),
        Kind::Ff => Ok(2.0 / (r as f64).powf(e)),
        other => Err(Error::InvalidParams(format!(
            "no lower rate for kind {other}"
        ))),
    }
}

/// Lower-bound base and exact upper bound for q-ary focal-free families.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QBounds {
    /// `q / ((q-1)(r-1)+1)^(1/(r-1))`.
    pub lower_rate: f64,
    /// `(r-1) * q^ceil((r-2)n/(r-1))`.
    #[serde(with = "decimal")]
    pub upper: BigUint,
}

pub fn q_bounds(n: usize, r: usize, q: u32) -> Result<QBounds> {
    check_r(r)?;
    if q < 2 {
        return Err(Error::InvalidParams(format!(
            "q = {q} but q >= 2 is required"
        )));
    }
    let denom = (q as usize - 1) * (r - 1) + 1;
    let lower_rate = q as f64 / (denom as f64).powf(1.0 / (r - 1) as f64);
    let upper = BigUint::from(r - 1) * BigUint::from(q).pow(focal_exponent(n, r) as u32);
    Ok(QBounds { lower_rate, upper })
}

/// `h(x) = -x log2 x - (1-x) log2 (1-x)`, with `h(0) = h(1) = 0`.
pub fn binary_entropy(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::InvalidParams(format!(
            "entropy argument {x} outside [0, 1]"
        )));
    }
    let term = |p: f64| if p == 0.0 { 0.0 } else { -p * p.log2() };
    Ok(term(x) + term(1.0 - x))
}

/// Exponent of the linear-programming bound for codes with relative
/// distance above `delta`: `h(1/2 - sqrt(delta (1 - delta)))`.
pub fn mrrw_rate(delta: f64) -> Result<f64> {
    if !(0.0..=0.5).contains(&delta) {
        return Err(Error::InvalidParams(format!(
            "delta {delta} outside [0, 1/2]"
        )));
    }
    binary_entropy((0.5 - (delta * (1.0 - delta)).sqrt()).max(0.0))
}

/// `(r-1) * C(n, m) / C(k, m)` with `m = ceil((r-2)k/(r-1))`: the own-subset
/// bound for k-uniform 1-focal-free families.
pub fn one_sided_uniform_upper(n: usize, k: usize, r: usize) -> Result<BigRational> {
    check_r(r)?;
    if k > n {
        return Err(Error::InvalidParams(format!("k = {k} exceeds n = {n}")));
    }
    let m = focal_exponent(k, r);
    Ok(ratio(BigUint::from(r - 1) * binomial(n, m), binomial(k, m)))
}

/// `1 + (r-2) / (r-1)^((r-1)/(r-2))`.
pub fn one_sided_base(r: usize) -> Result<f64> {
    check_r(r)?;
    let (a, b) = ((r - 1) as f64, (r - 2) as f64);
    Ok(1.0 + b / a.powf(a / b))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OneSidedTotal {
    /// Sum of [`one_sided_uniform_upper`] over `k = 0..=n`.
    #[serde(serialize_with = "ser_rational")]
    pub sum: BigRational,
    pub asymptotic_base: f64,
}

pub fn one_sided_total_upper(n: usize, r: usize) -> Result<OneSidedTotal> {
    check_r(r)?;
    let mut sum = BigRational::zero();
    for k in 0..=n {
        sum += one_sided_uniform_upper(n, k, r)?;
    }
    Ok(OneSidedTotal {
        sum,
        asymptotic_base: one_sided_base(r)?,
    })
}

/// `2^(2h(x)/(1+2x))`, the growth base of the set-size bound as a function
/// of `x = t / (2(k-t))`.
pub fn set_size_base_at(x: f64) -> Result<f64> {
    Ok(2f64.powf(2.0 * binary_entropy(x)? / (1.0 + 2.0 * x)))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SetSizeRate {
    /// Root of `x = (1-x)^3` in `(0, 1/2)`.
    pub x_star: f64,
    /// `2^(2h(x*)/(1+2x*))`.
    pub base: f64,
}

/// Maximiser of [`set_size_base_at`] on `(0, 1/2)`, located by bisection on
/// `x - (1-x)^3` down to adjacent doubles.
pub fn theorem_k_rate() -> SetSizeRate {
    let g = |x: f64| x - (1.0 - x).powi(3);
    let (mut lo, mut hi) = (0.0f64, 0.5f64);
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let x_star = if g(lo).abs() <= g(hi).abs() { lo } else { hi };
    SetSizeRate {
        x_star,
        base: set_size_base_at(x_star).expect("x* lies in (0, 1/2)"),
    }
}

/// `sum_{j=0}^{t+1} C(2(k-t), j)`.
pub fn theorem_k_sum(k: usize, t: usize) -> Result<BigUint> {
    if t > k {
        return Err(Error::InvalidParams(format!("t = {t} exceeds k = {k}")));
    }
    let m = 2 * (k - t);
    Ok((0..=t + 1).map(|j| binomial(m, j)).sum())
}

/// Upper bound on the number of forbidden r-tuples in the full cube:
/// `(2r+2)^n / r!` for near-sunflowers, `(2r)^n / (r-1)!` for focal families.
pub fn count_bound(n: usize, r: usize, kind: Kind) -> Result<BigRational> {
    check_r(r)?;
    let (base, fact) = match kind {
        Kind::Ns => (2 * r + 2, factorial(r)),
        Kind::Ff => (2 * r, factorial(r - 1)),
        other => {
            return Err(Error::InvalidParams(format!(
                "no count bound for kind {other}"
            )))
        }
    };
    Ok(ratio(BigUint::from(base).pow(n as u32), fact))
}

/// Serde adapter writing a `BigUint` as a decimal string.
pub(crate) mod decimal {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

fn ser_rational<S: serde::Serializer>(
    x: &BigRational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// One row of a bounds table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub name: String,
    pub params: String,
    /// Exact value as a decimal integer or `num/den`, or a decimal real.
    pub value: String,
    /// `f64` approximation of `value`.
    pub approx: f64,
    /// Closed-form per-coordinate growth base, where one exists.
    pub rate: Option<f64>,
    /// The formula the value comes from.
    pub provenance: String,
}

fn int_row(name: &str, params: String, v: &BigUint, rate: Option<f64>, prov: &str) -> BoundReport {
    BoundReport {
        name: name.into(),
        params,
        value: v.to_string(),
        approx: 2f64.powf(log2_biguint(v)),
        rate,
        provenance: prov.into(),
    }
}

fn rational_row(
    name: &str,
    params: String,
    v: &BigRational,
    rate: Option<f64>,
    prov: &str,
) -> BoundReport {
    BoundReport {
        name: name.into(),
        params,
        value: v.to_string(),
        approx: if v.is_zero() {
            0.0
        } else {
            2f64.powf(log2_rational(v))
        },
        rate,
        provenance: prov.into(),
    }
}

fn real_row(name: &str, params: String, v: f64, prov: &str) -> BoundReport {
    BoundReport {
        name: name.into(),
        params,
        value: format!("{v:.12}"),
        approx: v,
        rate: None,
        provenance: prov.into(),
    }
}

fn rate_row(name: &str, params: String, v: f64, prov: &str) -> BoundReport {
    BoundReport {
        rate: Some(v),
        ..real_row(name, params, v, prov)
    }
}

/// Grid of parameter values for [`bounds_table`].
#[derive(Clone, Debug, Default)]
pub struct BoundsGrid {
    pub n: Vec<usize>,
    pub r: Vec<usize>,
    pub q: Vec<u32>,
    pub k: Vec<usize>,
}

/// Every bound over the grid. Rows that need `r` are skipped when the grid
/// has no `r` values; an empty grid gives an empty table.
pub fn bounds_table(grid: &BoundsGrid) -> Result<Vec<BoundReport>> {
    let mut rows = Vec::new();
    for &r in &grid.r {
        check_r(r)?;
        rows.push(rate_row(
            "upper_ff_rate",
            format!("r={r}"),
            upper_ff_rate(r)?,
            "2^((r-2)/(r-1))",
        ));
        rows.push(rate_row(
            "lower_rate_ns",
            format!("r={r}"),
            lower_rate(r, Kind::Ns)?,
            "2/(r+1)^(1/(r-1))",
        ));
        rows.push(rate_row(
            "lower_rate_ff",
            format!("r={r}"),
            lower_rate(r, Kind::Ff)?,
            "2/r^(1/(r-1))",
        ));
        rows.push(rate_row(
            "one_sided_base",
            format!("r={r}"),
            one_sided_base(r)?,
            "1+(r-2)/(r-1)^((r-1)/(r-2))",
        ));
        for &n in &grid.n {
            rows.push(int_row(
                "upper_ff",
                format!("n={n} r={r}"),
                &upper_ff(n, r)?,
                Some(upper_ff_rate(r)?),
                "(r-1)*2^ceil((r-2)n/(r-1))",
            ));
            for (kind, prov, base) in [
                (Kind::Ns, "(2r+2)^n/r!", 2 * r + 2),
                (Kind::Ff, "(2r)^n/(r-1)!", 2 * r),
            ] {
                rows.push(rational_row(
                    &format!("count_bound_{kind}"),
                    format!("n={n} r={r}"),
                    &count_bound(n, r, kind)?,
                    Some(base as f64),
                    prov,
                ));
            }
            for &q in &grid.q {
                let qb = q_bounds(n, r, q)?;
                rows.push(int_row(
                    "q_upper",
                    format!("n={n} r={r} q={q}"),
                    &qb.upper,
                    Some((q as f64).powf((r - 2) as f64 / (r - 1) as f64)),
                    "(r-1)*q^ceil((r-2)n/(r-1))",
                ));
                rows.push(rate_row(
                    "q_lower_rate",
                    format!("r={r} q={q}"),
                    qb.lower_rate,
                    "q/((q-1)(r-1)+1)^(1/(r-1))",
                ));
            }
            for &k in grid.k.iter().filter(|&&k| k <= n) {
                rows.push(rational_row(
                    "one_sided_uniform_upper",
                    format!("n={n} k={k} r={r}"),
                    &one_sided_uniform_upper(n, k, r)?,
                    None,
                    "(r-1)*C(n,m)/C(k,m), m=ceil((r-2)k/(r-1))",
                ));
            }
            let total = one_sided_total_upper(n, r)?;
            rows.push(rational_row(
                "one_sided_total_upper",
                format!("n={n} r={r}"),
                &total.sum,
                Some(total.asymptotic_base),
                "(r-1)*sum_k C(n,m_k)/C(k,m_k)",
            ));
        }
    }
    if !grid.r.is_empty() {
        let sk = theorem_k_rate();
        rows.push(real_row(
            "set_size_x_star",
            String::new(),
            sk.x_star,
            "root of x=(1-x)^3 in (0,1/2)",
        ));
        rows.push(rate_row(
            "set_size_base",
            String::new(),
            sk.base,
            "2^(2h(x*)/(1+2x*))",
        ));
        for delta in [0.213, 0.287] {
            rows.push(real_row(
                "mrrw_rate",
                format!("delta={delta}"),
                mrrw_rate(delta)?,
                "h(1/2-sqrt(delta(1-delta)))",
            ));
        }
        for &k in &grid.k {
            for t in 0..=k {
                rows.push(int_row(
                    "set_size_sum",
                    format!("k={k} t={t}"),
                    &theorem_k_sum(k, t)?,
                    None,
                    "sum_{j<=t+1} C(2(k-t),j)",
                ));
            }
        }
    }
    Ok(rows)
}
