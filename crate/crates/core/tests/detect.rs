mod common;

use common::*;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sunforge::bounds::upper_ff;
use sunforge::detect::*;
use sunforge::{BitVector, Error, Family};

#[test]
fn extractor_on_random_large_families() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..60 {
        let r = rng.gen_range(3..=5);
        let n = rng.gen_range(4..=12);
        let threshold = upper_ff(n, r).unwrap().to_usize().unwrap();
        if threshold >= 1 << n {
            continue;
        }
        let size = rng.gen_range(threshold + 1..=1 << n);
        let fam = random_family(&mut rng, n, size, 0.5);
        let w = extract_focal_from_large(&fam, r).unwrap();
        assert_eq!(w.r(), r);
        let all: Vec<usize> = [&[w.focus][..], &w.petals].concat();
        assert!(literal_focal(&rows(&fam, &all)), "n={n} r={r} size={size}");
    }
}

#[test]
fn extractor_needs_a_large_family() {
    let fam = Family::from_strs(&["000", "011", "101"]).unwrap();
    assert!(matches!(
        extract_focal_from_large(&fam, 3),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn partition_is_balanced_and_covering() {
    for n in 0..30 {
        for parts in 1..6 {
            let blocks = balanced_partition(n, parts);
            assert_eq!(blocks.len(), parts);
            assert_eq!(blocks.first().unwrap().start, 0);
            assert_eq!(blocks.last().unwrap().end, n);
            let lens: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
            assert!(lens.iter().max().unwrap() - lens.iter().min().unwrap() <= 1);
            assert!(blocks.windows(2).all(|w| w[0].end == w[1].start));
        }
    }
}

/// Brute force over all triples of member pairs.
fn brute_disjoint_pairs(fam: &Family, six_distinct: bool) -> bool {
    let m = fam.len();
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .collect();
    let diff = |&(a, b): &(usize, usize)| {
        fam.members()[a]
            .symmetric_difference(&fam.members()[b])
            .unwrap()
    };
    for t in subsets(pairs.len(), 3) {
        let ps: Vec<(usize, usize)> = t.iter().map(|&i| pairs[i]).collect();
        if six_distinct {
            let mut ends: Vec<usize> = ps.iter().flat_map(|&(a, b)| [a, b]).collect();
            ends.sort_unstable();
            ends.dedup();
            if ends.len() < 6 {
                continue;
            }
        }
        let d: Vec<BitVector> = ps.iter().map(diff).collect();
        if d[0].is_disjoint(&d[1]).unwrap()
            && d[0].is_disjoint(&d[2]).unwrap()
            && d[1].is_disjoint(&d[2]).unwrap()
        {
            return true;
        }
    }
    false
}

#[test]
fn disjoint_symdiffs_match_brute_force_on_small_families() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..150 {
        let n = rng.gen_range(3..=7);
        let size = rng.gen_range(2..=(1usize << n).min(12));
        let fam = random_family(&mut rng, n, size, 0.5);
        for (policy, six) in [
            (MemberPolicy::SixDistinct, true),
            (MemberPolicy::PairsDistinct, false),
        ] {
            let found = find_three_disjoint_symdiffs_with(&fam, policy);
            assert_eq!(
                found.is_some(),
                brute_disjoint_pairs(&fam, six),
                "{fam:?} {policy:?}"
            );
            if let Some(w) = found {
                assert!(w.is_valid(&fam, policy));
            }
        }
    }
}

#[test]
fn linear_code_errors_and_span() {
    let e = |s: &str| s.parse::<BitVector>().unwrap();
    let dependent = [e("1100"), e("0110"), e("1010")];
    assert!(matches!(
        focal_from_linear(&dependent),
        Err(Error::DependentBasis)
    ));
    assert_eq!(gf2_rank(&dependent), 2);

    let code = span(&[e("1100"), e("0011")]).unwrap();
    assert_eq!(code.len(), 4);
    assert!(code.members()[0].is_zero());
    // Only two nonzero disjoint codewords exist here.
    assert!(matches!(
        focal_from_linear(&[e("1100"), e("0011")]),
        Err(Error::NoWitness(_))
    ));

    let identity: Vec<BitVector> = (0..3)
        .map(|i| BitVector::from_coords(6, [2 * i, 2 * i + 1]).unwrap())
        .collect();
    let lf = focal_from_linear(&identity).unwrap();
    assert_eq!(lf.witness.focus, 0);
    assert!(is_focal(&lf.code, 0, &lf.witness.petals).unwrap());
}

#[test]
fn set_size_check_on_fano_lines() {
    // Lines of the Fano plane: 3-uniform, any two meet in one point.
    let lines = [
        "1101000", "0110100", "0011010", "0001101", "1000110", "0100011", "1010001",
    ];
    let fam = Family::from_strs(&lines).unwrap();
    let rep = theorem_k_inequality_check(&fam).unwrap();
    assert_eq!((rep.k, rep.t, rep.size), (3, 1, 7));
    assert!(rep.holds);
    assert!(rep.map_injective);

    let broken = Family::from_strs(&["110000", "101000", "000110", "000101"]).unwrap();
    assert!(matches!(
        theorem_k_inequality_check(&broken),
        Err(Error::ConditionViolated(..))
    ));
    let mixed = Family::from_strs(&["110", "100"]).unwrap();
    assert!(matches!(
        theorem_k_inequality_check(&mixed),
        Err(Error::NonUniform(_))
    ));
}
