//! Packed binary vectors, q-ary vectors, families of them, and column
//! analytics.
//!
//! Coordinates are 0-based in the API. The text format and reports print
//! vectors left to right, so the leftmost character is coordinate 1 in the
//! usual `[n]` numbering.

use crate::{Error, Result};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

/// Largest supported vector length.
pub const MAX_N: usize = 4096;

/// Largest supported alphabet; symbols are stored one per byte.
pub const MAX_Q: u32 = 256;

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

fn check_len(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::BadLength(n));
    }
    Ok(())
}

/// A length-`n` binary vector packed into 64-bit words.
///
/// Bits past position `n` in the last word are always zero, so derived
/// equality and hashing only see the `n` real coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(n: usize) -> Result<Self> {
        check_len(n)?;
        Ok(BitVector {
            len: n,
            words: vec![0; words_for(n)],
        })
    }

    pub fn ones(n: usize) -> Result<Self> {
        Ok(Self::zeros(n)?.complement())
    }

    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        let mut v = Self::zeros(bits.len())?;
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.words[i / WORD] |= 1 << (i % WORD);
            }
        }
        Ok(v)
    }

    /// Vector with ones exactly at the given 0-based coordinates.
    pub fn from_coords<I: IntoIterator<Item = usize>>(n: usize, coords: I) -> Result<Self> {
        let mut v = Self::zeros(n)?;
        for i in coords {
            if i >= n {
                return Err(Error::InvalidParams(format!(
                    "coordinate {i} out of range for length {n}"
                )));
            }
            v.words[i / WORD] |= 1 << (i % WORD);
        }
        Ok(v)
    }

    /// Vector whose coordinate `i` is bit `n - 1 - i` of `x`.
    ///
    /// Numeric order of `x` is then lexicographic order of the printed
    /// strings, which is the order [`Family::cube`] uses.
    pub fn from_index(n: usize, x: u64) -> Result<Self> {
        if n > 64 || (n < 64 && x >> n != 0) {
            return Err(Error::InvalidParams(format!(
                "index {x} does not fit length {n}"
            )));
        }
        Self::from_coords(n, (0..n).filter(|&i| x >> (n - 1 - i) & 1 == 1))
    }

    /// Inverse of [`BitVector::from_index`] for `n <= 64`.
    pub fn to_index(&self) -> Option<u64> {
        if self.len > 64 {
            return None;
        }
        Some(
            self.iter_ones()
                .fold(0u64, |acc, i| acc | 1 << (self.len - 1 - i)),
        )
    }

    pub fn len(&self) -> usize {
        self.len
    }

    /// Always false; vectors have at least one coordinate.
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "coordinate {i} out of range");
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "coordinate {i} out of range");
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    /// Number of ones.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + b)
            })
        })
    }

    fn last_mask(&self) -> u64 {
        match self.len % WORD {
            0 => !0,
            rem => (1u64 << rem) - 1,
        }
    }

    fn same_len(&self, other: &Self) -> Result<()> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                left: self.len,
                right: other.len,
            });
        }
        Ok(())
    }

    fn zip(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Result<Self> {
        self.same_len(other)?;
        let mut out = BitVector {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        };
        out.canonicalize();
        Ok(out)
    }

    fn canonicalize(&mut self) {
        let mask = self.last_mask();
        if let Some(last) = self.words.last_mut() {
            *last &= mask;
        }
    }

    /// Coordinate-wise exclusive-or; its weight is the Hamming distance.
    pub fn symmetric_difference(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a ^ b)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a & b)
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a | b)
    }

    pub fn complement(&self) -> Self {
        let mut out = BitVector {
            len: self.len,
            words: self.words.iter().map(|w| !w).collect(),
        };
        out.canonicalize();
        out
    }

    pub fn distance(&self, other: &Self) -> Result<usize> {
        self.same_len(other)?;
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum())
    }

    pub fn intersection_weight(&self, other: &Self) -> Result<usize> {
        self.same_len(other)?;
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum())
    }

    pub fn is_disjoint(&self, other: &Self) -> Result<bool> {
        self.same_len(other)?;
        Ok(self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0))
    }

    pub fn is_subset_of(&self, other: &Self) -> Result<bool> {
        self.same_len(other)?;
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0))
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse {
                    line: 0,
                    msg: format!("unexpected character `{other}` in binary vector"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_bits(&bits)
    }
}

/// Per-column number of ones among `r` selected vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnProfile {
    r: usize,
    counts: Vec<u32>,
}

impl ColumnProfile {
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// True iff every column count is one of `allowed`.
    pub fn all_in(&self, allowed: &[u32]) -> bool {
        self.counts.iter().all(|c| allowed.contains(c))
    }
}

/// Validates a tuple of member indices against a family of `size` members.
pub(crate) fn check_indices(size: usize, indices: &[usize]) -> Result<()> {
    for (pos, &i) in indices.iter().enumerate() {
        if i >= size {
            return Err(Error::IndexOutOfRange { index: i, size });
        }
        if indices[..pos].contains(&i) {
            return Err(Error::DuplicateIndex(i));
        }
    }
    Ok(())
}

/// Column counts of the selected members.
///
/// The counts are accumulated word-parallel in bit-sliced form: plane `k`
/// holds bit `k` of every column's running count, and adding a vector is a
/// ripple-carry add across the planes.
pub fn column_profile(family: &Family, indices: &[usize]) -> Result<ColumnProfile> {
    check_indices(family.len(), indices)?;
    if indices.is_empty() {
        return Err(Error::InvalidParams("empty index tuple".into()));
    }
    let r = indices.len();
    let nwords = words_for(family.n());
    let depth = (usize::BITS - r.leading_zeros()) as usize;
    let mut planes = vec![vec![0u64; nwords]; depth];
    for &i in indices {
        for (w, &x) in family.members[i].words.iter().enumerate() {
            let mut carry = x;
            for plane in planes.iter_mut() {
                if carry == 0 {
                    break;
                }
                let sum = plane[w] ^ carry;
                carry &= plane[w];
                plane[w] = sum;
            }
        }
    }
    let counts = (0..family.n())
        .map(|c| {
            planes.iter().enumerate().fold(0u32, |acc, (k, plane)| {
                acc | (((plane[c / WORD] >> (c % WORD)) & 1) as u32) << k
            })
        })
        .collect();
    Ok(ColumnProfile { r, counts })
}

/// An ordered family of distinct binary vectors sharing one length.
///
/// Insertion order is kept so witnesses can refer to members by index.
#[derive(Clone)]
pub struct Family {
    n: usize,
    members: Vec<BitVector>,
    lookup: HashMap<BitVector, usize>,
}

impl Family {
    pub fn new(n: usize) -> Result<Self> {
        check_len(n)?;
        Ok(Family {
            n,
            members: Vec::new(),
            lookup: HashMap::new(),
        })
    }

    /// Builds a family, rejecting duplicates.
    pub fn from_vectors<I: IntoIterator<Item = BitVector>>(n: usize, vectors: I) -> Result<Self> {
        let mut fam = Self::new(n)?;
        for v in vectors {
            if !fam.insert(v.clone())? {
                return Err(Error::DuplicateMember(v.to_string()));
            }
        }
        Ok(fam)
    }

    /// Parses members written as 0/1 strings, e.g. `["010", "111"]`.
    pub fn from_strs(members: &[&str]) -> Result<Self> {
        let vectors = members
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<BitVector>>>()?;
        let n = vectors.first().map_or(0, BitVector::len);
        Self::from_vectors(n, vectors)
    }

    /// All `2^n` vectors in lexicographic order.
    pub fn cube(n: usize) -> Result<Self> {
        if n > 24 {
            return Err(Error::CapExceeded(format!("cube of dimension {n}")));
        }
        Self::from_vectors(
            n,
            (0..1u64 << n).map(|x| BitVector::from_index(n, x).unwrap()),
        )
    }

    /// Appends `v` unless already present; returns whether it was added.
    pub fn insert(&mut self, v: BitVector) -> Result<bool> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: v.len(),
            });
        }
        if self.lookup.contains_key(&v) {
            return Ok(false);
        }
        self.lookup.insert(v.clone(), self.members.len());
        self.members.push(v);
        Ok(true)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[BitVector] {
        &self.members
    }

    pub fn get(&self, i: usize) -> Option<&BitVector> {
        self.members.get(i)
    }

    pub fn index_of(&self, v: &BitVector) -> Option<usize> {
        self.lookup.get(v).copied()
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.lookup.contains_key(v)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BitVector> {
        self.members.iter()
    }

    /// Family without the member at `index`; later indices shift down by one.
    pub fn without(&self, index: usize) -> Result<Self> {
        check_indices(self.len(), &[index])?;
        Self::from_vectors(
            self.n,
            self.members
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != index)
                .map(|(_, v)| v.clone()),
        )
    }

    /// Sub-family of the given members, in the given order.
    pub fn select(&self, indices: &[usize]) -> Result<Self> {
        check_indices(self.len(), indices)?;
        Self::from_vectors(self.n, indices.iter().map(|&i| self.members[i].clone()))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n={} q=2\n", self.n);
        for v in &self.members {
            out.push_str(&v.to_string());
            out.push('\n');
        }
        out
    }
}

impl PartialEq for Family {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.members == other.members
    }
}

impl Eq for Family {}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Family")
            .field("n", &self.n)
            .field("members", &self.members)
            .finish()
    }
}

impl<'a> IntoIterator for &'a Family {
    type Item = &'a BitVector;
    type IntoIter = std::slice::Iter<'a, BitVector>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// Every member complemented in all `n` coordinates, order preserved.
pub fn complement_family(f: &Family) -> Family {
    Family::from_vectors(f.n, f.members.iter().map(BitVector::complement))
        .expect("complement is a bijection")
}

/// A length-`n` vector over the alphabet `{0, .., q-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QVector {
    q: u32,
    symbols: Vec<u8>,
}

impl QVector {
    pub fn new(q: u32, symbols: Vec<u8>) -> Result<Self> {
        if !(2..=MAX_Q).contains(&q) {
            return Err(Error::InvalidParams(format!(
                "alphabet size {q} outside 2..=256"
            )));
        }
        check_len(symbols.len())?;
        if let Some(&s) = symbols.iter().find(|&&s| u32::from(s) >= q) {
            return Err(Error::SymbolOutOfRange {
                symbol: s.into(),
                q,
            });
        }
        Ok(QVector { q, symbols })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    /// Coordinates where the two vectors differ.
    pub fn diff_mask(&self, other: &Self) -> Result<BitVector> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        BitVector::from_coords(
            self.len(),
            (0..self.len()).filter(|&i| self.symbols[i] != other.symbols[i]),
        )
    }

    /// Number of coordinates where the two vectors agree.
    pub fn agreements(&self, other: &Self) -> usize {
        self.symbols
            .iter()
            .zip(&other.symbols)
            .filter(|(a, b)| a == b)
            .count()
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// An ordered family of distinct q-ary vectors.
#[derive(Clone, Debug)]
pub struct QFamily {
    n: usize,
    q: u32,
    members: Vec<QVector>,
    lookup: HashMap<Vec<u8>, usize>,
}

impl QFamily {
    pub fn new(n: usize, q: u32) -> Result<Self> {
        check_len(n)?;
        if !(2..=MAX_Q).contains(&q) {
            return Err(Error::InvalidParams(format!(
                "alphabet size {q} outside 2..=256"
            )));
        }
        Ok(QFamily {
            n,
            q,
            members: Vec::new(),
            lookup: HashMap::new(),
        })
    }

    pub fn from_vectors<I: IntoIterator<Item = QVector>>(
        n: usize,
        q: u32,
        vectors: I,
    ) -> Result<Self> {
        let mut fam = Self::new(n, q)?;
        for v in vectors {
            if !fam.insert(v.clone())? {
                return Err(Error::DuplicateMember(v.to_string()));
            }
        }
        Ok(fam)
    }

    pub fn insert(&mut self, v: QVector) -> Result<bool> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: v.len(),
            });
        }
        if v.q != self.q {
            return Err(Error::InvalidParams(format!(
                "alphabet {} does not match family alphabet {}",
                v.q, self.q
            )));
        }
        if self.lookup.contains_key(&v.symbols) {
            return Ok(false);
        }
        self.lookup.insert(v.symbols.clone(), self.members.len());
        self.members.push(v);
        Ok(true)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[QVector] {
        &self.members
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n={} q={}\n", self.n, self.q);
        for v in &self.members {
            out.push_str(&v.to_string());
            out.push('\n');
        }
        out
    }
}

impl PartialEq for QFamily {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.q == other.q && self.members == other.members
    }
}

impl Eq for QFamily {}

/// Parameter bundle shared by the constructions, bounds and the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Params {
    pub n: usize,
    pub r: usize,
    pub q: u32,
    pub k: usize,
    pub b: u8,
}

impl Params {
    pub fn validate(&self) -> Result<()> {
        if self.r < 3 {
            return Err(Error::InvalidParams(format!(
                "r = {} but r >= 3 is required",
                self.r
            )));
        }
        if self.q < 2 {
            return Err(Error::InvalidParams(format!(
                "q = {} but q >= 2 is required",
                self.q
            )));
        }
        if self.k > self.n {
            return Err(Error::InvalidParams(format!(
                "k = {} exceeds n = {}",
                self.k, self.n
            )));
        }
        if self.b > 1 {
            return Err(Error::InvalidParams(format!("b = {} is not a bit", self.b)));
        }
        Ok(())
    }
}

impl Default for Params {
    fn default() -> Self {
        Params {
            n: 1,
            r: 3,
            q: 2,
            k: 0,
            b: 1,
        }
    }
}

/// Contents of a family text file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyFile {
    Binary(Family),
    Qary(QFamily),
}

impl FamilyFile {
    pub fn len(&self) -> usize {
        match self {
            FamilyFile::Binary(f) => f.len(),
            FamilyFile::Qary(f) => f.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn to_text(&self) -> String {
        match self {
            FamilyFile::Binary(f) => f.to_text(),
            FamilyFile::Qary(f) => f.to_text(),
        }
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses the family text format.
///
/// ```text
/// # comment
/// n=3 q=2
/// 010
/// 111
/// ```
///
/// With `q > 2` each line holds comma-separated decimal symbols instead.
/// Blank lines are ignored and duplicate members are an error.
pub fn parse_family_text(text: &str) -> Result<FamilyFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| parse_err(0, "missing header"))?;
    let (mut n, mut q) = (None, None);
    for tok in header.split_whitespace() {
        let (key, value) = tok
            .split_once('=')
            .ok_or_else(|| parse_err(hline, format!("bad header token `{tok}`")))?;
        let value: usize = value
            .parse()
            .map_err(|_| parse_err(hline, format!("bad header value `{tok}`")))?;
        match key {
            "n" => n = Some(value),
            "q" => q = Some(value),
            _ => return Err(parse_err(hline, format!("unknown header key `{key}`"))),
        }
    }
    let n = n.ok_or_else(|| parse_err(hline, "header lacks n="))?;
    let q = q.ok_or_else(|| parse_err(hline, "header lacks q="))?;
    if n == 0 || n > MAX_N {
        return Err(parse_err(hline, format!("n = {n} outside 1..={MAX_N}")));
    }
    if !(2..=MAX_Q as usize).contains(&q) {
        return Err(parse_err(hline, format!("q = {q} outside 2..=256")));
    }

    if q == 2 {
        let mut fam = Family::new(n)?;
        for (lno, line) in lines {
            let v: BitVector = line.parse().map_err(|e| match e {
                Error::Parse { msg, .. } => parse_err(lno, msg),
                other => parse_err(lno, other.to_string()),
            })?;
            if v.len() != n {
                return Err(parse_err(
                    lno,
                    format!("expected {n} coordinates, got {}", v.len()),
                ));
            }
            if !fam.insert(v)? {
                return Err(parse_err(lno, "duplicate member"));
            }
        }
        Ok(FamilyFile::Binary(fam))
    } else {
        let q = q as u32;
        let mut fam = QFamily::new(n, q)?;
        for (lno, line) in lines {
            let symbols = line
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<u32>()
                        .ok()
                        .filter(|&x| x < q)
                        .map(|x| x as u8)
                        .ok_or_else(|| parse_err(lno, format!("bad symbol `{}`", s.trim())))
                })
                .collect::<Result<Vec<u8>>>()?;
            if symbols.len() != n {
                return Err(parse_err(
                    lno,
                    format!("expected {n} coordinates, got {}", symbols.len()),
                ));
            }
            if !fam.insert(QVector::new(q, symbols)?)? {
                return Err(parse_err(lno, "duplicate member"));
            }
        }
        Ok(FamilyFile::Qary(fam))
    }
}
