use num_bigint::BigUint;
use sunforge::bounds::*;
use sunforge::Kind;

fn total_log2(n: usize, r: usize) -> f64 {
    log2_rational(&one_sided_total_upper(n, r).unwrap().sum)
}

#[test]
fn one_sided_total_converges_to_base() {
    for r in [3, 4, 5] {
        let base = one_sided_base(r).unwrap().log2();
        let gap = |n: usize| total_log2(n, r) - n as f64 * base;
        let (g200, g400, g800) = (gap(200), gap(400), gap(800));
        assert!(g800 / 800.0 < 0.01, "r={r}: rate gap {}", g800 / 800.0);
        assert!(g200 > 0.0 && g400 > 0.0 && g800 > 0.0);
        // Excess grows like a fixed power of n: doubling n adds a bounded amount.
        for step in [g400 - g200, g800 - g400] {
            assert!((0.0..1.5).contains(&step), "r={r}: step {step}");
        }
    }
}

#[test]
fn set_size_rate_is_grid_maximum() {
    let rate = theorem_k_rate();
    let x = rate.x_star;
    assert!((x - (1.0 - x).powi(3)).abs() < 1e-12);
    assert!(rate.base > 2.14 && rate.base < SET_SIZE_BASE_LIMIT);
    let mut best = 0.0f64;
    let mut at = 0.0;
    for i in 1..5000 {
        let x = i as f64 * 1e-4;
        let b = set_size_base_at(x).unwrap();
        if b > best {
            best = b;
            at = x;
        }
    }
    assert!(best <= rate.base + 1e-12);
    assert!((at - x).abs() <= 1e-4);
}

#[test]
fn mrrw_strictly_decreasing() {
    let mut prev = f64::INFINITY;
    for i in 1..=5000 {
        let v = mrrw_rate(i as f64 * 1e-4).unwrap();
        assert!(v < prev, "not decreasing at {}", i as f64 * 1e-4);
        prev = v;
    }
    assert!(mrrw_rate(0.213).unwrap() < 0.44);
    assert!(mrrw_rate(0.287).unwrap() < 0.28);
}

#[test]
fn binary_case_of_q_bounds() {
    for r in 3..8 {
        let lower = q_bounds(1, r, 2).unwrap().lower_rate;
        assert_eq!(lower, lower_rate(r, Kind::Ff).unwrap());
        for n in 0..40 {
            assert_eq!(q_bounds(n, r, 2).unwrap().upper, upper_ff(n, r).unwrap());
        }
    }
}

#[test]
fn r4_headline_rates() {
    assert!((upper_ff_rate(4).unwrap() - 2f64.powf(2.0 / 3.0)).abs() < 1e-9);
    assert!((lower_rate(4, Kind::Ns).unwrap() - 1.6f64.cbrt()).abs() < 1e-9);
    assert!((lower_rate(4, Kind::Ff).unwrap() - 2f64.cbrt()).abs() < 1e-9);
    assert_eq!(one_sided_base(3).unwrap(), 1.25);
    let l4 = one_sided_base(4).unwrap().log2();
    assert!(l4 > 0.469 && l4 < 0.470);
}

#[test]
fn theorem_k_sum_values() {
    // t = k: only the empty sum of C(0, j).
    assert_eq!(theorem_k_sum(3, 3).unwrap(), BigUint::from(1u32));
    // k = 3, t = 1: C(4,0) + C(4,1) + C(4,2) = 11.
    assert_eq!(theorem_k_sum(3, 1).unwrap(), BigUint::from(11u32));
    assert!(theorem_k_sum(2, 3).is_err());
}

#[test]
fn table_rows() {
    let grid = BoundsGrid {
        n: vec![12],
        r: vec![4],
        q: vec![2, 5],
        k: vec![3],
    };
    let rows = bounds_table(&grid).unwrap();
    let names: Vec<&str> = rows.iter().map(|r| r.name.as_str()).collect();
    assert!(
        rows.iter().any(|r| r
            .rate
            .is_some_and(|x| (x - 2f64.powf(2.0 / 3.0)).abs() < 1e-9)),
        "{names:?}"
    );
    assert!(
        rows.iter()
            .any(|r| r.rate.is_some_and(|x| (x - 1.6f64.cbrt()).abs() < 1e-9)),
        "{names:?}"
    );
    assert!(
        rows.iter()
            .any(|r| r.rate.is_some_and(|x| (x - 2f64.cbrt()).abs() < 1e-9)),
        "{names:?}"
    );
    let base = rows.iter().find(|r| r.name == "set_size_base").unwrap();
    assert!(base.approx < SET_SIZE_BASE_LIMIT);
    assert!(rows.iter().all(|r| !r.provenance.is_empty()));
    assert!(bounds_table(&BoundsGrid::default()).unwrap().is_empty());
}
