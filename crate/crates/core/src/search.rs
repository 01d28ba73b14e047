//! Exact extremal values for tiny lengths.
//!
//! Vectors of length `n <= 5` are handled as bitmasks in a `u32`. The search
//! is a depth-first include/exclude walk over the cube in lexicographic order
//! that keeps, at every node, the list of remaining vectors still compatible
//! with the partial family. A branch is cut when the partial family plus all
//! compatible candidates cannot beat the best family found so far.

use crate::bitfam::{BitVector, Family};
use crate::bounds::{binomial, upper_ff};
use crate::detect::check_r;
use crate::{Error, Kind, Result};
use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

/// Largest length accepted by [`exact_g`].
pub const MAX_SEARCH_N: usize = 5;

/// Largest universe accepted by [`exact_g_uniform`].
pub const MAX_UNIFORM_UNIVERSE: usize = 24;

/// Largest number of r-subsets [`brute_force_count`] will walk.
pub const MAX_BRUTE_TUPLES: u64 = 50_000_000;

/// Whether the tuple (as bitmasks over `n` coordinates) is forbidden.
pub fn violates(tuple: &[u32], n: usize, kind: Kind) -> bool {
    let full = if n == 32 { !0 } else { (1u32 << n) - 1 };
    match kind {
        Kind::Ns => {
            let (mut o1, mut o2, mut z1, mut z2) = (0u32, 0u32, 0u32, 0u32);
            for &x in tuple {
                let z = !x & full;
                o2 |= o1 & x;
                o1 |= x;
                z2 |= z1 & z;
                z1 |= z;
            }
            o2 & z2 == 0
        }
        Kind::Ff | Kind::Bff0 | Kind::Bff1 => (0..tuple.len()).any(|f| focal_at(tuple, f, n, kind)),
    }
}

/// Whether `tuple` is focal-type with `tuple[focus]` as focus.
fn focal_at(tuple: &[u32], focus: usize, n: usize, kind: Kind) -> bool {
    let full = if n == 32 { !0 } else { (1u32 << n) - 1 };
    let f = tuple[focus];
    let side = match kind {
        Kind::Bff0 => !f & full,
        Kind::Bff1 => f,
        _ => full,
    };
    let mut union = 0u32;
    for (j, &x) in tuple.iter().enumerate() {
        if j == focus {
            continue;
        }
        let m = (x ^ f) & side;
        if union & m != 0 {
            return false;
        }
        union |= m;
    }
    true
}

/// Calls `visit` on every `size`-subset of `items` until it returns true.
fn any_subset(
    items: &[u32],
    size: usize,
    buf: &mut Vec<u32>,
    visit: &mut impl FnMut(&[u32]) -> bool,
) -> bool {
    if size == 0 {
        return visit(buf);
    }
    if items.len() < size {
        return false;
    }
    for i in 0..=items.len() - size {
        buf.push(items[i]);
        let hit = any_subset(&items[i + 1..], size - 1, buf, visit);
        buf.pop();
        if hit {
            return true;
        }
    }
    false
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub n: usize,
    pub r: usize,
    /// Set for searches restricted to weight-`k` vectors.
    pub k: Option<usize>,
    pub kind: Kind,
    pub value: usize,
    pub witness: Family,
    pub nodes_explored: u64,
}

/// Serialized form of a [`SearchResult`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResultJson {
    pub n: usize,
    pub r: usize,
    pub k: Option<usize>,
    pub kind: Kind,
    pub value: usize,
    pub witness: Vec<String>,
    pub nodes_explored: u64,
}

impl SearchResult {
    pub fn to_json(&self) -> SearchResultJson {
        SearchResultJson {
            n: self.n,
            r: self.r,
            k: self.k,
            kind: self.kind,
            value: self.value,
            witness: self.witness.iter().map(|v| v.to_string()).collect(),
            nodes_explored: self.nodes_explored,
        }
    }

    pub fn from_json(json: &SearchResultJson) -> Result<Self> {
        let vectors = json
            .witness
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<BitVector>>>()?;
        Ok(SearchResult {
            n: json.n,
            r: json.r,
            k: json.k,
            kind: json.kind,
            value: json.value,
            witness: Family::from_vectors(json.n, vectors)?,
            nodes_explored: json.nodes_explored,
        })
    }
}

struct Searcher {
    n: usize,
    r: usize,
    kind: Kind,
    limit: usize,
    best: Vec<u32>,
    nodes: u64,
}

impl Searcher {
    /// Whether adding `c` to `chosen` (which already holds the newest member
    /// `v`) creates a forbidden tuple through both `v` and `c`.
    fn clashes(&self, rest: &[u32], v: u32, c: u32) -> bool {
        let mut buf = Vec::with_capacity(self.r);
        let (n, kind) = (self.n, self.kind);
        any_subset(rest, self.r - 2, &mut buf, &mut |sub| {
            let mut tuple = sub.to_vec();
            tuple.push(v);
            tuple.push(c);
            violates(&tuple, n, kind)
        })
    }

    fn dfs(&mut self, chosen: &mut Vec<u32>, cands: &[u32]) {
        self.nodes += 1;
        if chosen.len() > self.best.len() {
            self.best = chosen.clone();
        }
        for (idx, &v) in cands.iter().enumerate() {
            if self.best.len() >= self.limit || chosen.len() + cands.len() - idx <= self.best.len()
            {
                return;
            }
            let next: Vec<u32> = cands[idx + 1..]
                .iter()
                .copied()
                .filter(|&c| !self.clashes(chosen, v, c))
                .collect();
            chosen.push(v);
            self.dfs(chosen, &next);
            chosen.pop();
        }
    }
}

fn to_family(n: usize, members: &[u32]) -> Result<Family> {
    Family::from_vectors(
        n,
        members
            .iter()
            .map(|&x| BitVector::from_index(n, u64::from(x)))
            .collect::<Result<Vec<_>>>()?,
    )
}

fn run_search(
    n: usize,
    r: usize,
    kind: Kind,
    universe: Vec<u32>,
    limit: usize,
    first_fixed: bool,
) -> Result<(Vec<u32>, u64)> {
    let mut s = Searcher {
        n,
        r,
        kind,
        limit,
        best: Vec::new(),
        nodes: 0,
    };
    if first_fixed && !universe.is_empty() {
        // Pairs never form an r-tuple, so every vector is compatible with one.
        let mut chosen = vec![universe[0]];
        s.dfs(&mut chosen, &universe[1..]);
    } else {
        s.dfs(&mut Vec::new(), &universe);
    }
    Ok((s.best, s.nodes))
}

/// Largest subfamily of `{0,1}^n` with no forbidden `r`-tuple of `kind`.
///
/// Near-sunflower and focal conditions are unchanged when every vector is
/// XOR-ed with a fixed vector, so for those kinds the search only considers
/// families containing the zero vector. The one-sided kinds have no such
/// symmetry and are searched in full.
pub fn exact_g(n: usize, r: usize, kind: Kind) -> Result<SearchResult> {
    check_r(r)?;
    if n == 0 || n > MAX_SEARCH_N {
        return Err(Error::CapExceeded(format!(
            "exact search needs 1 <= n <= {MAX_SEARCH_N}, got {n}"
        )));
    }
    let universe: Vec<u32> = (0..1u32 << n).collect();
    let cap = upper_ff(n, r)?.to_usize().unwrap_or(usize::MAX);
    let limit = cap.min(universe.len());
    let translation_invariant = matches!(kind, Kind::Ns | Kind::Ff);
    let (best, nodes) = run_search(n, r, kind, universe, limit, translation_invariant)?;
    Ok(SearchResult {
        n,
        r,
        k: None,
        kind,
        value: best.len(),
        witness: to_family(n, &best)?,
        nodes_explored: nodes,
    })
}

/// Largest family of weight-`k` vectors of length `n` with no forbidden
/// `r`-tuple of `kind`.
pub fn exact_g_uniform(n: usize, k: usize, r: usize, kind: Kind) -> Result<SearchResult> {
    check_r(r)?;
    if n == 0 || n > 24 || k > n {
        return Err(Error::InvalidParams(format!(
            "need 0 <= k <= n <= 24, got n = {n}, k = {k}"
        )));
    }
    let universe: Vec<u32> = (0..1u32 << n)
        .filter(|x| x.count_ones() as usize == k)
        .collect();
    if universe.len() > MAX_UNIFORM_UNIVERSE {
        return Err(Error::CapExceeded(format!(
            "{} weight-{k} vectors exceed {MAX_UNIFORM_UNIVERSE}",
            universe.len()
        )));
    }
    let limit = universe.len();
    let (best, nodes) = run_search(n, r, kind, universe, limit, false)?;
    Ok(SearchResult {
        n,
        r,
        k: Some(k),
        kind,
        value: best.len(),
        witness: to_family(n, &best)?,
        nodes_explored: nodes,
    })
}

/// Number of forbidden `r`-tuples in `{0,1}^n`: unordered for
/// near-sunflowers, (focus, unordered petals) for the focal kinds.
pub fn brute_force_count(n: usize, r: usize, kind: Kind) -> Result<u64> {
    check_r(r)?;
    if n > 20 {
        return Err(Error::CapExceeded(format!("cube of dimension {n}")));
    }
    let tuples = binomial(1 << n, r);
    if tuples > BigUint::from(MAX_BRUTE_TUPLES) {
        return Err(Error::CapExceeded(format!("{tuples} tuples")));
    }
    let cube: Vec<u32> = (0..1u32 << n).collect();
    let mut count = 0u64;
    let mut buf = Vec::with_capacity(r);
    any_subset(&cube, r, &mut buf, &mut |t| {
        count += match kind {
            Kind::Ns => u64::from(violates(t, n, kind)),
            _ => (0..r).filter(|&f| focal_at(t, f, n, kind)).count() as u64,
        };
        false
    });
    Ok(count)
}

/// Fraction of the `s`-subsets of member `member` that lie in no other
/// member (its own-subsets).
pub fn own_subset_fraction(family: &Family, member: usize, s: usize) -> Result<Ratio<u64>> {
    crate::bitfam::check_indices(family.len(), &[member])?;
    let a = &family.members()[member];
    let k = a.weight();
    if family.iter().any(|v| v.weight() != k) {
        return Err(Error::NonUniform(k));
    }
    if s > k {
        return Err(Error::InvalidParams(format!("s = {s} exceeds k = {k}")));
    }
    let total = binomial(k, s)
        .to_u64()
        .filter(|&t| t <= 10_000_000)
        .ok_or_else(|| Error::CapExceeded(format!("C({k}, {s}) subsets")))?;
    let support: Vec<usize> = a.iter_ones().collect();
    let others: Vec<&BitVector> = family
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != member)
        .map(|(_, v)| v)
        .collect();
    let mut own = 0u64;
    let mut idx: Vec<usize> = (0..s).collect();
    loop {
        let sub = BitVector::from_coords(family.n(), idx.iter().map(|&i| support[i]))?;
        if !others.iter().any(|b| sub.is_subset_of(b).unwrap()) {
            own += 1;
        }
        // Next combination in lexicographic order.
        let Some(pos) = (0..s).rev().find(|&p| idx[p] < k - s + p) else {
            break;
        };
        idx[pos] += 1;
        for p in pos + 1..s {
            idx[p] = idx[p - 1] + 1;
        }
    }
    Ok(Ratio::new(own, total))
}
