//! Predicates and witness finders.
//!
//! Every focal-type test is done on difference masks: a tuple with focus
//! `x0` is focal iff the masks `x_j ^ x0` of the petals are pairwise
//! disjoint, i.e. each coordinate has at most one petal that disagrees with
//! the focus. The one-sided variants first intersect each mask with the
//! coordinates where the focus equals `b`.
//!
//! Near-sunflower tests use two saturating per-column counters. A column is
//! allowed to hold `0, 1, r-1` or `r` ones, which is the same as saying it
//! does not hold two ones *and* two zeros.

use crate::bitfam::{check_indices, BitVector, Family, QFamily};
use crate::bounds;
use crate::{Error, Result};
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

pub(crate) fn check_r(r: usize) -> Result<()> {
    if r < 3 {
        return Err(Error::InvalidParams(format!(
            "r = {r} but r >= 3 is required"
        )));
    }
    Ok(())
}

/// Which coordinates a focal condition looks at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Every coordinate (two-sided focal family).
    Both,
    /// Coordinates where the focus is 0.
    Zero,
    /// Coordinates where the focus is 1.
    One,
}

impl Side {
    pub fn from_bit(b: u8) -> Result<Side> {
        match b {
            0 => Ok(Side::Zero),
            1 => Ok(Side::One),
            _ => Err(Error::InvalidParams(format!("b = {b} is not a bit"))),
        }
    }

    pub fn flip(self) -> Side {
        match self {
            Side::Both => Side::Both,
            Side::Zero => Side::One,
            Side::One => Side::Zero,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NearSunflowerWitness {
    pub indices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FocalWitness {
    pub focus: usize,
    /// Sorted ascending.
    pub petals: Vec<usize>,
    pub side: Side,
}

impl FocalWitness {
    pub fn r(&self) -> usize {
        self.petals.len() + 1
    }
}

/// Three pairs of members whose symmetric differences are pairwise disjoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisjointPairsWitness {
    pub pairs: [(usize, usize); 3],
}

impl DisjointPairsWitness {
    pub fn indices(&self) -> Vec<usize> {
        self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect()
    }

    /// Symmetric differences of the three pairs, in pair order.
    pub fn differences(&self, family: &Family) -> Result<[BitVector; 3]> {
        check_indices(family.len(), &[self.pairs[0].0, self.pairs[0].1])?;
        let d = |(a, b): (usize, usize)| -> Result<BitVector> {
            check_indices(family.len(), &[a, b])?;
            family.members()[a].symmetric_difference(&family.members()[b])
        };
        Ok([d(self.pairs[0])?, d(self.pairs[1])?, d(self.pairs[2])?])
    }

    /// Re-checks the witness against `family` under `policy`.
    pub fn is_valid(&self, family: &Family, policy: MemberPolicy) -> bool {
        let Ok(diffs) = self.differences(family) else {
            return false;
        };
        if policy == MemberPolicy::SixDistinct
            && check_indices(family.len(), &self.indices()).is_err()
        {
            return false;
        }
        !diffs.iter().any(BitVector::is_zero)
            && diffs[0].is_disjoint(&diffs[1]).unwrap()
            && diffs[0].is_disjoint(&diffs[2]).unwrap()
            && diffs[1].is_disjoint(&diffs[2]).unwrap()
    }
}

/// Serialized witness form shared by every report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub kind: String,
    pub indices: Vec<usize>,
    pub focus: Option<usize>,
    pub petals: Option<Vec<usize>>,
}

impl From<&NearSunflowerWitness> for WitnessJson {
    fn from(w: &NearSunflowerWitness) -> Self {
        WitnessJson {
            kind: "near_sunflower".into(),
            indices: w.indices.clone(),
            focus: None,
            petals: None,
        }
    }
}

impl From<&FocalWitness> for WitnessJson {
    fn from(w: &FocalWitness) -> Self {
        let kind = match w.side {
            Side::Both => "focal",
            Side::Zero => "focal0",
            Side::One => "focal1",
        };
        WitnessJson {
            kind: kind.into(),
            indices: std::iter::once(w.focus)
                .chain(w.petals.iter().copied())
                .collect(),
            focus: Some(w.focus),
            petals: Some(w.petals.clone()),
        }
    }
}

impl From<&DisjointPairsWitness> for WitnessJson {
    fn from(w: &DisjointPairsWitness) -> Self {
        WitnessJson {
            kind: "disjoint_symdiffs".into(),
            indices: w.indices(),
            focus: None,
            petals: None,
        }
    }
}

// ---------------------------------------------------------------------------
// Predicates

/// Sunflower test: every column count is `0`, `1` or `r`.
pub fn is_sunflower(family: &Family, indices: &[usize]) -> Result<bool> {
    check_r(indices.len())?;
    let profile = crate::bitfam::column_profile(family, indices)?;
    Ok(profile.all_in(&[0, 1, indices.len() as u32]))
}

/// Saturating column counters for "at least one / at least two" ones and
/// zeros among the vectors added so far.
#[derive(Clone)]
struct SatCounters {
    ones1: Vec<u64>,
    ones2: Vec<u64>,
    zeros1: Vec<u64>,
    zeros2: Vec<u64>,
}

impl SatCounters {
    fn new(nwords: usize) -> Self {
        SatCounters {
            ones1: vec![0; nwords],
            ones2: vec![0; nwords],
            zeros1: vec![0; nwords],
            zeros2: vec![0; nwords],
        }
    }

    fn add(&mut self, v: &BitVector) {
        let last = v.words().len() - 1;
        let tail = match v.len() % 64 {
            0 => !0u64,
            rem => (1u64 << rem) - 1,
        };
        for (w, &x) in v.words().iter().enumerate() {
            let z = !x & if w == last { tail } else { !0 };
            self.ones2[w] |= self.ones1[w] & x;
            self.ones1[w] |= x;
            self.zeros2[w] |= self.zeros1[w] & z;
            self.zeros1[w] |= z;
        }
    }

    /// Some column already has two ones and two zeros.
    fn dead(&self) -> bool {
        self.ones2.iter().zip(&self.zeros2).any(|(a, b)| a & b != 0)
    }
}

/// Near-sunflower test: every column count is `0`, `1`, `r-1` or `r`.
pub fn is_near_sunflower(family: &Family, indices: &[usize]) -> Result<bool> {
    check_r(indices.len())?;
    check_indices(family.len(), indices)?;
    let mut c = SatCounters::new(family.n().div_ceil(64));
    for &i in indices {
        c.add(&family.members()[i]);
    }
    Ok(!c.dead())
}

/// Source of difference masks for focal tests over binary or q-ary families.
pub trait FocalSource: Sync {
    fn size(&self) -> usize;

    /// Coordinates on which `petal` differs from `focus`, restricted by `side`.
    fn diff_mask(&self, focus: usize, petal: usize, side: Side) -> Result<BitVector>;
}

impl FocalSource for Family {
    fn size(&self) -> usize {
        self.len()
    }

    fn diff_mask(&self, focus: usize, petal: usize, side: Side) -> Result<BitVector> {
        let f = &self.members()[focus];
        let d = self.members()[petal].symmetric_difference(f)?;
        match side {
            Side::Both => Ok(d),
            Side::One => d.intersection(f),
            Side::Zero => d.intersection(&f.complement()),
        }
    }
}

impl FocalSource for QFamily {
    fn size(&self) -> usize {
        self.len()
    }

    fn diff_mask(&self, focus: usize, petal: usize, side: Side) -> Result<BitVector> {
        if side != Side::Both {
            return Err(Error::InvalidParams(
                "one-sided focal families are only defined for binary vectors".into(),
            ));
        }
        self.members()[petal].diff_mask(&self.members()[focus])
    }
}

fn masks_pairwise_disjoint(masks: &[BitVector]) -> bool {
    let Some(first) = masks.first() else {
        return true;
    };
    let mut union = vec![0u64; first.words().len()];
    for m in masks {
        for (u, &w) in union.iter_mut().zip(m.words()) {
            if *u & w != 0 {
                return false;
            }
            *u |= w;
        }
    }
    true
}

/// Focal-type test on any [`FocalSource`].
pub fn is_focal_in<S: FocalSource + ?Sized>(
    source: &S,
    focus: usize,
    petals: &[usize],
    side: Side,
) -> Result<bool> {
    check_r(petals.len() + 1)?;
    let mut all = vec![focus];
    all.extend_from_slice(petals);
    check_indices(source.size(), &all)?;
    let masks = petals
        .iter()
        .map(|&p| source.diff_mask(focus, p, side))
        .collect::<Result<Vec<_>>>()?;
    Ok(masks_pairwise_disjoint(&masks))
}

/// Focal test: at every coordinate at most one petal differs from the focus.
pub fn is_focal(family: &Family, focus: usize, petals: &[usize]) -> Result<bool> {
    is_focal_in(family, focus, petals, Side::Both)
}

/// One-sided focal test on the coordinates where the focus equals `b`.
pub fn is_b_focal(family: &Family, focus: usize, petals: &[usize], b: u8) -> Result<bool> {
    is_focal_in(family, focus, petals, Side::from_bit(b)?)
}

/// Focal test for q-ary vectors.
pub fn is_focal_q(family: &QFamily, focus: usize, petals: &[usize]) -> Result<bool> {
    is_focal_in(family, focus, petals, Side::Both)
}

// ---------------------------------------------------------------------------
// Finders

fn near_sunflower_from(
    family: &Family,
    r: usize,
    chosen: &mut Vec<usize>,
    counters: &SatCounters,
) -> bool {
    if chosen.len() == r {
        return true;
    }
    let next = chosen.last().map_or(0, |&i| i + 1);
    let need = r - chosen.len();
    for i in next..=family.len().saturating_sub(need) {
        let mut c = counters.clone();
        c.add(&family.members()[i]);
        if c.dead() {
            continue;
        }
        chosen.push(i);
        if near_sunflower_from(family, r, chosen, &c) {
            return true;
        }
        chosen.pop();
    }
    false
}

fn near_sunflower_with_first(
    family: &Family,
    r: usize,
    first: usize,
) -> Option<NearSunflowerWitness> {
    let mut c = SatCounters::new(family.n().div_ceil(64));
    c.add(&family.members()[first]);
    let mut chosen = vec![first];
    near_sunflower_from(family, r, &mut chosen, &c)
        .then_some(NearSunflowerWitness { indices: chosen })
}

/// Lexicographically first near-sunflower of size `r`, if any.
///
/// A partial tuple is abandoned as soon as some column holds two ones and
/// two zeros: its count then lies in `[2, r-2]` and the remaining picks can
/// never lift it to `r-1`.
pub fn find_near_sunflower(family: &Family, r: usize) -> Result<Option<NearSunflowerWitness>> {
    check_r(r)?;
    if family.len() < r {
        return Ok(None);
    }
    Ok((0..=family.len() - r).find_map(|first| near_sunflower_with_first(family, r, first)))
}

/// [`find_near_sunflower`] with the outer loop spread over the current rayon
/// pool. Returns the same witness as the sequential version.
pub fn find_near_sunflower_par(family: &Family, r: usize) -> Result<Option<NearSunflowerWitness>> {
    check_r(r)?;
    if family.len() < r {
        return Ok(None);
    }
    Ok((0..=family.len() - r)
        .into_par_iter()
        .find_map_first(|first| near_sunflower_with_first(family, r, first)))
}

/// Depth-first search for `need` pairwise-disjoint masks, in index order.
fn disjoint_masks_from(
    masks: &[(usize, BitVector)],
    start: usize,
    need: usize,
    union: &mut [u64],
    chosen: &mut Vec<usize>,
) -> bool {
    if need == 0 {
        return true;
    }
    for pos in start..masks.len() {
        if masks.len() - pos < need {
            return false;
        }
        let m = masks[pos].1.words();
        if union.iter().zip(m).any(|(u, w)| u & w != 0) {
            continue;
        }
        for (u, &w) in union.iter_mut().zip(m) {
            *u |= w;
        }
        chosen.push(masks[pos].0);
        if disjoint_masks_from(masks, pos + 1, need - 1, union, chosen) {
            return true;
        }
        chosen.pop();
        for (u, &w) in union.iter_mut().zip(m) {
            *u &= !w;
        }
    }
    false
}

fn focal_with_focus<S: FocalSource + ?Sized>(
    source: &S,
    r: usize,
    focus: usize,
    side: Side,
) -> Result<Option<FocalWitness>> {
    let masks = (0..source.size())
        .filter(|&j| j != focus)
        .map(|j| Ok((j, source.diff_mask(focus, j, side)?)))
        .collect::<Result<Vec<_>>>()?;
    let nwords = masks.first().map_or(0, |(_, m)| m.words().len());
    let mut union = vec![0u64; nwords];
    let mut petals = Vec::with_capacity(r - 1);
    Ok(
        disjoint_masks_from(&masks, 0, r - 1, &mut union, &mut petals).then_some(FocalWitness {
            focus,
            petals,
            side,
        }),
    )
}

/// First focal-type family of size `r` in (focus, petals) lexicographic order.
pub fn find_focal_in<S: FocalSource + ?Sized>(
    source: &S,
    r: usize,
    side: Side,
) -> Result<Option<FocalWitness>> {
    check_r(r)?;
    if source.size() < r {
        return Ok(None);
    }
    for focus in 0..source.size() {
        if let Some(w) = focal_with_focus(source, r, focus, side)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// [`find_focal_in`] with foci spread over the current rayon pool.
pub fn find_focal_in_par<S: FocalSource + ?Sized>(
    source: &S,
    r: usize,
    side: Side,
) -> Result<Option<FocalWitness>> {
    check_r(r)?;
    if source.size() < r {
        return Ok(None);
    }
    (0..source.size())
        .into_par_iter()
        .map(|focus| focal_with_focus(source, r, focus, side))
        .find_map_first(|res| match res {
            Ok(None) => None,
            other => Some(other),
        })
        .unwrap_or(Ok(None))
}

pub fn find_focal(family: &Family, r: usize) -> Result<Option<FocalWitness>> {
    find_focal_in(family, r, Side::Both)
}

pub fn find_b_focal(family: &Family, r: usize, b: u8) -> Result<Option<FocalWitness>> {
    find_focal_in(family, r, Side::from_bit(b)?)
}

pub fn find_focal_q(family: &QFamily, r: usize) -> Result<Option<FocalWitness>> {
    find_focal_in(family, r, Side::Both)
}

// ---------------------------------------------------------------------------
// Extraction from families above the upper bound

/// Consecutive blocks of sizes `floor(n/parts)` or `ceil(n/parts)`, larger
/// blocks first.
pub fn balanced_partition(n: usize, parts: usize) -> Vec<std::ops::Range<usize>> {
    let (base, extra) = (n / parts, n % parts);
    let mut start = 0;
    (0..parts)
        .map(|j| {
            let len = base + usize::from(j < extra);
            let range = start..start + len;
            start += len;
            range
        })
        .collect()
}

/// Extracts a focal family of size `r` from a family larger than
/// `(r-1) * 2^ceil((r-2)n/(r-1))`.
///
/// Coordinates are cut into `r-1` blocks. For block `j`, members are grouped
/// by their projection onto the other blocks; a member alone in its group is
/// unique for that block. The bound guarantees a member that is unique for
/// no block, and any other member of its group for block `j` differs from it
/// only inside block `j`. Those petals have disjoint difference masks.
pub fn extract_focal_from_large(family: &Family, r: usize) -> Result<FocalWitness> {
    check_r(r)?;
    let bound = bounds::upper_ff(family.n(), r)?;
    if BigUint::from(family.len()) <= bound {
        return Err(Error::Precondition(format!(
            "family of size {} does not exceed the bound {bound}",
            family.len()
        )));
    }
    let n = family.n();
    let blocks = balanced_partition(n, r - 1);
    let groupings: Vec<(HashMap<BitVector, Vec<usize>>, BitVector)> = blocks
        .iter()
        .map(|block| {
            let outside = BitVector::from_coords(n, (0..n).filter(|c| !block.contains(c)))?;
            let mut groups: HashMap<BitVector, Vec<usize>> = HashMap::new();
            for (i, v) in family.iter().enumerate() {
                groups.entry(v.intersection(&outside)?).or_default().push(i);
            }
            Ok((groups, outside))
        })
        .collect::<Result<_>>()?;

    for (x0, v) in family.iter().enumerate() {
        let mut petals = Vec::with_capacity(r - 1);
        for (groups, outside) in &groupings {
            let group = &groups[&v.intersection(outside)?];
            match group.iter().find(|&&j| j != x0) {
                Some(&j) => petals.push(j),
                None => break,
            }
        }
        if petals.len() == r - 1 {
            petals.sort_unstable();
            let witness = FocalWitness {
                focus: x0,
                petals,
                side: Side::Both,
            };
            assert!(
                is_focal(family, witness.focus, &witness.petals)?,
                "extracted tuple is not focal"
            );
            return Ok(witness);
        }
    }
    unreachable!("a family above the bound always has a member that is unique for no block")
}

// ---------------------------------------------------------------------------
// Three pairwise-disjoint symmetric differences

/// Whether the three pairs must use six distinct members.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MemberPolicy {
    /// All six members distinct.
    #[default]
    SixDistinct,
    /// Only the two members within each pair must differ.
    PairsDistinct,
}

/// Pair of members with the smallest Hamming distance, first in index order.
fn min_distance_pair(family: &Family, members: &[usize]) -> Option<(usize, usize)> {
    let vs = family.members();
    let mut best: Option<(usize, (usize, usize))> = None;
    for (p, &i) in members.iter().enumerate() {
        let a = vs[i].words();
        for &j in &members[p + 1..] {
            let d: u32 = a
                .iter()
                .zip(vs[j].words())
                .map(|(x, y)| (x ^ y).count_ones())
                .sum();
            if best.is_none_or(|(bd, _)| (d as usize) < bd) {
                best = Some((d as usize, (i, j)));
            }
        }
    }
    best.map(|(_, pair)| pair)
}

/// Groups `members` by intersection with `mask`, groups in order of first
/// appearance.
fn group_by_mask(family: &Family, members: &[usize], mask: &BitVector) -> Vec<Vec<usize>> {
    let mut pos: HashMap<BitVector, usize> = HashMap::new();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &i in members {
        let key = family.members()[i].intersection(mask).unwrap();
        let g = *pos.entry(key).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[g].push(i);
    }
    groups
}

fn staged_disjoint_symdiffs(family: &Family, policy: MemberPolicy) -> Option<DisjointPairsWitness> {
    let all: Vec<usize> = (0..family.len()).collect();
    let vs = family.members();

    let (a, b) = min_distance_pair(family, &all)?;
    let m1 = vs[a].symmetric_difference(&vs[b]).unwrap();

    let rest: Vec<usize> = match policy {
        MemberPolicy::SixDistinct => all.iter().copied().filter(|&i| i != a && i != b).collect(),
        MemberPolicy::PairsDistinct => all.clone(),
    };
    let groups = group_by_mask(family, &rest, &m1);
    // max_by_key keeps the last maximum; reverse to prefer the earliest group.
    let largest = groups.iter().rev().max_by_key(|g| g.len())?;
    let (c, d) = min_distance_pair(family, largest)?;
    let m2 = vs[c].symmetric_difference(&vs[d]).unwrap();

    let used = m1.union(&m2).unwrap();
    let rest: Vec<usize> = match policy {
        MemberPolicy::SixDistinct => all
            .iter()
            .copied()
            .filter(|i| ![a, b, c, d].contains(i))
            .collect(),
        MemberPolicy::PairsDistinct => all,
    };
    let group = group_by_mask(family, &rest, &used)
        .into_iter()
        .find(|g| g.len() >= 2)?;
    Some(DisjointPairsWitness {
        pairs: [(a, b), (c, d), (group[0], group[1])],
    })
}

/// Largest family for which the exhaustive fallback runs.
pub const EXHAUSTIVE_SYMDIFF_CAP: usize = 512;

fn exhaustive_disjoint_symdiffs(
    family: &Family,
    policy: MemberPolicy,
) -> Option<DisjointPairsWitness> {
    let vs = family.members();
    let m = family.len();
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .collect();
    let masks: Vec<BitVector> = pairs
        .iter()
        .map(|&(i, j)| vs[i].symmetric_difference(&vs[j]).unwrap())
        .collect();
    let compatible = |p: usize, q: usize| {
        masks[p].is_disjoint(&masks[q]).unwrap()
            && (policy == MemberPolicy::PairsDistinct || {
                let (a, b) = pairs[p];
                let (c, d) = pairs[q];
                a != c && a != d && b != c && b != d
            })
    };
    for p1 in 0..pairs.len() {
        let later: Vec<usize> = (p1 + 1..pairs.len())
            .filter(|&p| compatible(p1, p))
            .collect();
        for (x, &p2) in later.iter().enumerate() {
            if let Some(&p3) = later[x + 1..].iter().find(|&&p3| compatible(p2, p3)) {
                return Some(DisjointPairsWitness {
                    pairs: [pairs[p1], pairs[p2], pairs[p3]],
                });
            }
        }
    }
    None
}

/// Looks for three member pairs with pairwise-disjoint symmetric differences.
///
/// Follows the distance argument: take a closest pair `(A, B)`, keep the
/// largest class of members agreeing on `A △ B`, take a closest pair
/// `(C, D)` inside it (so `C △ D` avoids `A △ B`), then find two members
/// agreeing on `(A △ B) ∪ (C △ D)`. If that fails and the family has at most
/// [`EXHAUSTIVE_SYMDIFF_CAP`] members, an exhaustive search decides.
pub fn find_three_disjoint_symdiffs_with(
    family: &Family,
    policy: MemberPolicy,
) -> Option<DisjointPairsWitness> {
    if let Some(w) = staged_disjoint_symdiffs(family, policy) {
        debug_assert!(w.is_valid(family, policy));
        return Some(w);
    }
    if family.len() <= EXHAUSTIVE_SYMDIFF_CAP {
        return exhaustive_disjoint_symdiffs(family, policy);
    }
    None
}

/// [`find_three_disjoint_symdiffs_with`] requiring six distinct members.
pub fn find_three_disjoint_symdiffs(family: &Family) -> Option<DisjointPairsWitness> {
    find_three_disjoint_symdiffs_with(family, MemberPolicy::SixDistinct)
}

// ---------------------------------------------------------------------------
// Linear codes

/// Largest code dimension [`focal_from_linear`] will span.
pub const MAX_LINEAR_DIM: usize = 20;

/// Rank of a list of vectors over GF(2).
pub fn gf2_rank(vectors: &[BitVector]) -> usize {
    let mut rows: Vec<BitVector> = vectors.to_vec();
    let Some(n) = rows.first().map(BitVector::len) else {
        return 0;
    };
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row.get(col) {
                *row = row.symmetric_difference(&pivot).unwrap();
            }
        }
        rank += 1;
    }
    rank
}

/// All `2^k` codewords spanned by `basis`; codeword `m` is the sum of the
/// basis vectors selected by the bits of `m`, so index 0 is the zero word.
pub fn span(basis: &[BitVector]) -> Result<Family> {
    let n = basis
        .first()
        .map(BitVector::len)
        .ok_or_else(|| Error::InvalidParams("empty basis".into()))?;
    if basis.len() > MAX_LINEAR_DIM {
        return Err(Error::CapExceeded(format!(
            "dimension {} above {MAX_LINEAR_DIM}",
            basis.len()
        )));
    }
    if let Some(v) = basis.iter().find(|v| v.len() != n) {
        return Err(Error::LengthMismatch {
            left: n,
            right: v.len(),
        });
    }
    if gf2_rank(basis) < basis.len() {
        return Err(Error::DependentBasis);
    }
    let mut words = vec![BitVector::zeros(n)?];
    for b in basis {
        let shifted: Vec<BitVector> = words
            .iter()
            .map(|w| w.symmetric_difference(b).unwrap())
            .collect();
        words.extend(shifted);
    }
    Family::from_vectors(n, words)
}

/// A linear code together with a focal 4-family inside it.
#[derive(Clone, Debug)]
pub struct LinearFocal {
    pub code: Family,
    pub witness: FocalWitness,
}

/// Finds a focal family of size 4 with the zero codeword as focus.
///
/// The code is closed under symmetric difference, so three disjoint pair
/// differences are themselves three pairwise-disjoint nonzero codewords.
pub fn focal_from_linear(basis: &[BitVector]) -> Result<LinearFocal> {
    let code = span(basis)?;
    let w = find_three_disjoint_symdiffs(&code).ok_or_else(|| {
        Error::NoWitness(format!(
            "no three disjoint symmetric differences in a [{}, {}] code",
            code.n(),
            basis.len()
        ))
    })?;
    let diffs = w.differences(&code)?;
    let mut petals = diffs
        .iter()
        .map(|d| code.index_of(d).expect("code is closed under addition"))
        .collect::<Vec<_>>();
    petals.sort_unstable();
    let witness = FocalWitness {
        focus: 0,
        petals,
        side: Side::Both,
    };
    assert!(is_focal(&code, 0, &witness.petals)?);
    Ok(LinearFocal { code, witness })
}

// ---------------------------------------------------------------------------
// Families with pairwise-intersecting symmetric differences

/// First two member pairs on four distinct members whose symmetric
/// differences are disjoint.
pub fn find_disjoint_pair_of_pairs(family: &Family) -> Option<(usize, usize, usize, usize)> {
    let m = family.len();
    let vs = family.members();
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .collect();
    let masks: Vec<BitVector> = pairs
        .iter()
        .map(|&(i, j)| vs[i].symmetric_difference(&vs[j]).unwrap())
        .collect();
    for p in 0..pairs.len() {
        let (a, b) = pairs[p];
        for q in p + 1..pairs.len() {
            let (c, d) = pairs[q];
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if masks[p].is_disjoint(&masks[q]).unwrap() {
                return Some((a, b, c, d));
            }
        }
    }
    None
}

/// True iff `(A △ B) ∩ (C △ D)` is nonempty for all distinct `A, B, C, D`.
pub fn check_pairwise_symdiff_condition(family: &Family) -> bool {
    find_disjoint_pair_of_pairs(family).is_none()
}

/// `[E]_t`: `E` itself when `|E| <= t`, else its `t+1` smallest coordinates.
pub fn truncate_to(e: &BitVector, t: usize) -> BitVector {
    if e.weight() <= t {
        return e.clone();
    }
    BitVector::from_coords(e.len(), e.iter_ones().take(t + 1)).unwrap()
}

/// Result of checking the set-size inequality on a concrete family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetSizeReport {
    pub k: usize,
    pub size: usize,
    /// Largest intersection of two distinct members.
    pub t: usize,
    /// The pair attaining `t`.
    pub pair: Option<(usize, usize)>,
    /// `sum_{j=0}^{t+1} C(2(k-t), j)`.
    #[serde(with = "crate::bounds::decimal")]
    pub rhs: BigUint,
    /// `|F| - 2 <= rhs`.
    pub holds: bool,
    /// The map `C -> [C ∩ (A △ B)]_t` on the other members is injective.
    pub map_injective: bool,
}

/// Checks `|F| - 2 <= sum_{j<=t+1} C(2(k-t), j)` on a k-uniform family with
/// pairwise-intersecting symmetric differences, and the injectivity of the
/// truncation map behind it.
pub fn theorem_k_inequality_check(family: &Family) -> Result<SetSizeReport> {
    let k = family.members().first().map_or(0, BitVector::weight);
    if family.iter().any(|v| v.weight() != k) {
        return Err(Error::NonUniform(k));
    }
    if let Some((a, b, c, d)) = find_disjoint_pair_of_pairs(family) {
        return Err(Error::ConditionViolated(a, b, c, d));
    }
    let vs = family.members();
    let mut best: Option<(usize, (usize, usize))> = None;
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let t = vs[i].intersection_weight(&vs[j])?;
            if best.is_none_or(|(bt, _)| t > bt) {
                best = Some((t, (i, j)));
            }
        }
    }
    let (t, pair) = match best {
        Some((t, p)) => (t, Some(p)),
        None => (0, None),
    };
    let rhs = bounds::theorem_k_sum(k, t)?;
    let holds = family.len() < 2 || BigUint::from(family.len() - 2) <= rhs;

    let map_injective = match pair {
        None => true,
        Some((a, b)) => {
            let ab = vs[a].symmetric_difference(&vs[b])?;
            let mut seen = std::collections::HashSet::new();
            (0..vs.len())
                .filter(|&c| c != a && c != b)
                .all(|c| seen.insert(truncate_to(&vs[c].intersection(&ab).unwrap(), t)))
        }
    };
    Ok(SetSizeReport {
        k,
        size: family.len(),
        t,
        pair,
        rhs,
        holds,
        map_injective,
    })
}
