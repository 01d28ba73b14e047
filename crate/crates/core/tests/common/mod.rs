//! Independent oracles: literal definitions on plain `Vec<bool>` rows, with no
//! code shared with the library's bit-sliced and mask-based paths.

#![allow(dead_code)]

use rand::Rng;
use sunforge::{BitVector, Family, Kind};

pub fn rows(family: &Family, indices: &[usize]) -> Vec<Vec<bool>> {
    indices
        .iter()
        .map(|&i| {
            let v = &family.members()[i];
            (0..v.len()).map(|c| v.get(c)).collect()
        })
        .collect()
}

pub fn column_counts(rows: &[Vec<bool>]) -> Vec<u32> {
    let n = rows.first().map_or(0, Vec::len);
    (0..n)
        .map(|c| rows.iter().filter(|row| row[c]).count() as u32)
        .collect()
}

/// Every column holds 0, 1 or r ones.
pub fn literal_sunflower(rows: &[Vec<bool>]) -> bool {
    let r = rows.len() as u32;
    column_counts(rows).iter().all(|&c| c <= 1 || c == r)
}

/// Every column holds 0, 1, r-1 or r ones.
pub fn literal_near_sunflower(rows: &[Vec<bool>]) -> bool {
    let r = rows.len() as u32;
    column_counts(rows).iter().all(|&c| c <= 1 || c + 1 >= r)
}

/// Row 0 is the focus: in each coordinate at most one other row differs
/// from it.
pub fn literal_focal(rows: &[Vec<bool>]) -> bool {
    let focus = &rows[0];
    (0..focus.len()).all(|c| rows[1..].iter().filter(|row| row[c] != focus[c]).count() <= 1)
}

/// Row 0 is the focus: in each coordinate where the focus equals `b`, at
/// most one other row differs from it.
pub fn literal_b_focal(rows: &[Vec<bool>], b: bool) -> bool {
    let focus = &rows[0];
    (0..focus.len())
        .filter(|&c| focus[c] == b)
        .all(|c| rows[1..].iter().filter(|row| row[c] != b).count() <= 1)
}

/// Literal test of `kind` on vectors given as little-endian bitmasks of
/// length `n`; for focal kinds any member may serve as focus.
pub fn literal_violates(tuple: &[u32], n: usize, kind: Kind) -> bool {
    let rows: Vec<Vec<bool>> = tuple
        .iter()
        .map(|&x| (0..n).map(|c| x >> c & 1 == 1).collect())
        .collect();
    if kind == Kind::Ns {
        return literal_near_sunflower(&rows);
    }
    (0..rows.len()).any(|f| {
        let mut ordered = vec![rows[f].clone()];
        ordered.extend(
            rows.iter()
                .enumerate()
                .filter(|&(i, _)| i != f)
                .map(|(_, r)| r.clone()),
        );
        match kind {
            Kind::Ff => literal_focal(&ordered),
            Kind::Bff0 => literal_b_focal(&ordered, false),
            Kind::Bff1 => literal_b_focal(&ordered, true),
            Kind::Ns => unreachable!(),
        }
    })
}

/// All `k`-subsets of `0..m` in lexicographic order.
pub fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// Unpruned maximum: the largest subset of the cube `{0,1}^n` (n <= 4)
/// containing no violating `r`-subset, by scanning all `2^(2^n)` subsets.
pub fn unpruned_max(n: usize, r: usize, kind: Kind) -> usize {
    assert!(n <= 4);
    let size = 1usize << n;
    let bad: Vec<u32> = subsets(size, r)
        .into_iter()
        .filter(|t| {
            let tuple: Vec<u32> = t.iter().map(|&x| x as u32).collect();
            literal_violates(&tuple, n, kind)
        })
        .map(|t| t.iter().fold(0u32, |m, &x| m | 1 << x))
        .collect();
    (0..1u64 << size)
        .filter(|&mask| {
            let mask = mask as u32;
            bad.iter().all(|&t| t & mask != t)
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Counts `r x n` matrices with distinct rows in which every column passes
/// the literal condition, divided by the row orderings of one tuple: `r!`
/// for near-sunflowers, `(r-1)!` for focal families (focus = row 0).
pub fn matrix_count(n: usize, r: usize, kind: Kind) -> u64 {
    assert!(r * n <= 24);
    let mut total = 0u64;
    for m in 0..1u64 << (r * n) {
        let rows: Vec<u64> = (0..r).map(|i| m >> (i * n) & ((1 << n) - 1)).collect();
        let distinct = (0..r).all(|i| (i + 1..r).all(|j| rows[i] != rows[j]));
        if !distinct {
            continue;
        }
        let bools: Vec<Vec<bool>> = rows
            .iter()
            .map(|&x| (0..n).map(|c| x >> c & 1 == 1).collect())
            .collect();
        let ok = match kind {
            Kind::Ns => literal_near_sunflower(&bools),
            Kind::Ff => literal_focal(&bools),
            _ => unreachable!(),
        };
        total += u64::from(ok);
    }
    let perms: u64 = match kind {
        Kind::Ns => (1..=r as u64).product(),
        _ => (1..r as u64).product(),
    };
    assert_eq!(total % perms, 0);
    total / perms
}

pub fn random_vector<R: Rng>(rng: &mut R, n: usize, density: f64) -> BitVector {
    let bits: Vec<bool> = (0..n).map(|_| rng.gen_bool(density)).collect();
    BitVector::from_bits(&bits).unwrap()
}

/// A family of `size` distinct random vectors of length `n`.
pub fn random_family<R: Rng>(rng: &mut R, n: usize, size: usize, density: f64) -> Family {
    assert!(size as f64 <= (n as f64).exp2());
    let mut family = Family::new(n).unwrap();
    while family.len() < size {
        family.insert(random_vector(rng, n, density)).unwrap();
    }
    family
}

/// Uniformly random `k`-subset of `0..n` as a vector.
pub fn random_k_set<R: Rng>(rng: &mut R, n: usize, k: usize) -> BitVector {
    let coords = rand::seq::index::sample(rng, n, k);
    BitVector::from_coords(n, coords).unwrap()
}
