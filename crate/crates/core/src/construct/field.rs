use crate::{Error, Result};
use std::fmt;

fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Polynomial over GF(p), coefficients low degree first, no trailing zeros.
type Poly = Vec<u32>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    // p is prime, so a^(p-2) is the inverse.
    let (mut base, mut exp, mut acc) = (u64::from(a), p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % u64::from(p);
        }
        base = base * base % u64::from(p);
        exp >>= 1;
    }
    acc as u32
}

/// Remainder of `a` modulo `b` over GF(p); `b` nonzero.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Poly {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let lead_inv = u64::from(inv_mod_p(*b.last().unwrap(), p));
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let factor = u64::from(*r.last().unwrap()) * lead_inv % u64::from(p);
        for (i, &bc) in b.iter().enumerate() {
            let sub = factor * u64::from(bc) % u64::from(p);
            r[shift + i] = ((u64::from(r[shift + i]) + u64::from(p) - sub) % u64::from(p)) as u32;
        }
        r = trim(r);
    }
    r
}

/// Irreducible moduli shipped with the crate, coefficients low degree first.
fn table_modulus(p: u32, m: u32) -> Option<Poly> {
    let from_bits = |bits: u32| (0..=m).map(|i| bits >> i & 1).collect::<Poly>();
    match (p, m) {
        (2, 2) => Some(from_bits(0x7)),
        (2, 3) => Some(from_bits(0xB)),
        (2, 4) => Some(from_bits(0x13)),
        (2, 5) => Some(from_bits(0x25)),
        (2, 6) => Some(from_bits(0x43)),
        (2, 7) => Some(from_bits(0x83)),
        (2, 8) => Some(from_bits(0x11D)),
        (2, 9) => Some(from_bits(0x211)),
        (2, 10) => Some(from_bits(0x409)),
        (2, 11) => Some(from_bits(0x805)),
        (2, 12) => Some(from_bits(0x1053)),
        (2, 13) => Some(from_bits(0x201B)),
        (2, 14) => Some(from_bits(0x4443)),
        (2, 15) => Some(from_bits(0x8003)),
        (2, 16) => Some(from_bits(0x1100B)),
        (3, 2) | (7, 2) | (11, 2) => Some(vec![1, 0, 1]),
        (5, 2) | (13, 2) => Some(vec![2, 0, 1]),
        _ => None,
    }
}

/// Description of GF(p^m) by an irreducible monic modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    p: u32,
    m: u32,
    modulus: Vec<u32>,
}

impl FieldSpec {
    /// GF(p) for a prime `p`.
    pub fn prime(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::UnsupportedField(format!("{p} is not prime")));
        }
        Ok(FieldSpec {
            p,
            m: 1,
            modulus: vec![0, 1],
        })
    }

    /// GF(p^m) from the built-in modulus table: `p = 2, m <= 16` or
    /// `m = 2, p <= 13`.
    pub fn extension(p: u32, m: u32) -> Result<Self> {
        if m == 1 {
            return Self::prime(p);
        }
        let modulus = table_modulus(p, m).ok_or_else(|| {
            Error::UnsupportedField(format!("GF({p}^{m}) is not in the modulus table"))
        })?;
        Self::with_modulus(p, modulus)
    }

    /// GF(p^m) with a caller-supplied monic modulus of degree `m`, checked
    /// for irreducibility by trial division.
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::UnsupportedField(format!("{p} is not prime")));
        }
        let modulus = trim(modulus);
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::UnsupportedField(
                "modulus must be monic of degree >= 1 over GF(p)".into(),
            ));
        }
        let m = (modulus.len() - 1) as u32;
        if u64::from(p).checked_pow(m).is_none_or(|q| q > 1 << 16) {
            return Err(Error::UnsupportedField(format!("GF({p}^{m}) is too large")));
        }
        let spec = FieldSpec { p, m, modulus };
        if !spec.modulus_irreducible() {
            return Err(Error::UnsupportedField(format!(
                "modulus {:?} is reducible over GF({p})",
                spec.modulus
            )));
        }
        Ok(spec)
    }

    /// The field of order `q`, if `q` is a supported prime power.
    pub fn for_order(q: u32) -> Result<Self> {
        let p = (2..=q)
            .find(|d| q.is_multiple_of(*d))
            .ok_or_else(|| Error::UnsupportedField(format!("{q} is not a prime power")))?;
        let mut m = 0;
        let mut rest = q;
        while rest.is_multiple_of(p) {
            rest /= p;
            m += 1;
        }
        if rest != 1 {
            return Err(Error::UnsupportedField(format!("{q} is not a prime power")));
        }
        Self::extension(p, m)
    }

    fn modulus_irreducible(&self) -> bool {
        // Any factorisation has a monic factor of degree <= m/2.
        for deg in 1..=self.m / 2 {
            let count = self.p.pow(deg);
            for low in 0..count {
                let mut cand: Poly = (0..deg).map(|i| low / self.p.pow(i) % self.p).collect();
                cand.push(1);
                if poly_rem(&self.modulus, &cand, self.p).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn order(&self) -> u32 {
        self.p.pow(self.m)
    }
}

/// A field element, encoded as `sum c_i p^i` over its coefficient vector.
///
/// The encoding orders elements lexicographically by coefficient vector with
/// the constants `0..p` first; it is also the symbol written into q-ary
/// vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(pub u32);

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Arithmetic in GF(q). Fields of order at most 256 use lookup tables.
#[derive(Clone, Debug)]
pub struct Field {
    spec: FieldSpec,
    mul_table: Option<Vec<u8>>,
}

impl Field {
    pub fn new(spec: FieldSpec) -> Self {
        let mut f = Field {
            spec,
            mul_table: None,
        };
        let q = f.q();
        if q <= 256 {
            let mut table = vec![0u8; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    table[(a * q + b) as usize] =
                        f.mul_slow(FieldElement(a), FieldElement(b)).0 as u8;
                }
            }
            f.mul_table = Some(table);
        }
        f
    }

    pub fn for_order(q: u32) -> Result<Self> {
        Ok(Self::new(FieldSpec::for_order(q)?))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn q(&self) -> u32 {
        self.spec.order()
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// The `i`-th element in canonical order.
    pub fn element(&self, i: u32) -> Result<FieldElement> {
        if i >= self.q() {
            return Err(Error::InvalidParams(format!(
                "element {i} outside GF({})",
                self.q()
            )));
        }
        Ok(FieldElement(i))
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q()).map(FieldElement)
    }

    pub fn coefficients(&self, a: FieldElement) -> Vec<u32> {
        let p = self.spec.p;
        (0..self.spec.m).map(|i| a.0 / p.pow(i) % p).collect()
    }

    fn pack(&self, coeffs: &[u32]) -> FieldElement {
        let p = self.spec.p;
        FieldElement(coeffs.iter().rev().fold(0, |acc, &c| acc * p + c))
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.spec.m == 1 {
            return FieldElement((a.0 + b.0) % self.spec.p);
        }
        let p = self.spec.p;
        let (ca, cb) = (self.coefficients(a), self.coefficients(b));
        let sum: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % p).collect();
        self.pack(&sum)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = self.spec.p;
        let c: Vec<u32> = self.coefficients(a).iter().map(|&x| (p - x) % p).collect();
        self.pack(&c)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    fn mul_slow(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = u64::from(self.spec.p);
        let (ca, cb) = (self.coefficients(a), self.coefficients(b));
        let mut prod = vec![0u32; ca.len() + cb.len()];
        for (i, &x) in ca.iter().enumerate() {
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = ((u64::from(prod[i + j]) + u64::from(x) * u64::from(y)) % p) as u32;
            }
        }
        let mut rem = poly_rem(&prod, &self.spec.modulus, self.spec.p);
        rem.resize(self.spec.m as usize, 0);
        self.pack(&rem)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.mul_table {
            Some(t) => FieldElement(u32::from(t[(a.0 * self.q() + b.0) as usize])),
            None => self.mul_slow(a, b),
        }
    }

    pub fn pow(&self, a: FieldElement, mut exp: u64) -> FieldElement {
        let (mut base, mut acc) = (a, self.one());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, u64::from(self.q()) - 2))
    }

    /// `sum coeffs[i] * a^i` by Horner's rule.
    pub fn eval_poly(&self, coeffs: &[FieldElement], a: FieldElement) -> FieldElement {
        coeffs
            .iter()
            .rev()
            .fold(self.zero(), |acc, &c| self.add(self.mul(acc, a), c))
    }
}
