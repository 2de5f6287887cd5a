mod common;

use common::*;
use leflab_core::betti::{
    betti_ek, betti_koszul, betti_kwlp_closed_form, betti_mfull, betti_upper_bound, c_from_hilbert,
};
use leflab_core::construct::{
    almost_revlex_from_hilbert, borel_tower_from_hilbert, enumerate_borel_fixed,
    enumerate_strongly_stable, EnumerationFilter, EnumerationLimits,
};
use leflab_core::lefschetz::{k_lefschetz_last_vars, lefschetz_conditions, LefschetzMode};
use leflab_core::MonomialIdeal;
use proptest::prelude::*;

/// Numerator `(1 - t)^n * Σ h_d t^d` computed from the Hilbert function.
fn numerator(i: &MonomialIdeal) -> Vec<i64> {
    let h = i.hilbert_function().unwrap();
    let mut p: Vec<i64> = h.values().iter().map(|&v| v as i64).collect();
    for _ in 0..i.nvars() {
        let mut q = vec![0; p.len() + 1];
        for (d, &c) in p.iter().enumerate() {
            q[d] += c;
            q[d + 1] -= c;
        }
        p = q;
    }
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn small_strongly_stable() -> Vec<MonomialIdeal> {
    let limits = EnumerationLimits::default();
    let mut all = enumerate_strongly_stable(2, 5, &limits).unwrap();
    all.extend(enumerate_strongly_stable(3, 3, &limits).unwrap());
    all
}

#[test]
fn three_formulas_agree_on_strongly_stable_ideals() {
    for i in small_strongly_stable() {
        let ek = betti_ek(&i).unwrap();
        assert_eq!(betti_mfull(&i).unwrap(), ek, "({i})");
        assert_eq!(betti_koszul(&i).unwrap(), ek, "({i})");
    }
}

#[test]
fn three_formulas_agree_on_examples() {
    for i in example_ideals() {
        let koszul = betti_koszul(&i).unwrap();
        assert_eq!(koszul.hilbert_numerator(), numerator(&i), "({i})");
        if i.is_stable() {
            assert_eq!(betti_ek(&i).unwrap(), koszul, "({i})");
            assert_eq!(betti_mfull(&i).unwrap(), koszul, "({i})");
        }
    }
}

#[test]
fn generator_census_and_vanishing() {
    for i in small_strongly_stable() {
        let t = betti_koszul(&i).unwrap();
        assert_eq!(t.total(1), i.generators().len() as u64);
        assert_eq!(t.get(0, 0), 1);
        assert!(t.entries().all(|((a, _), _)| a <= i.nvars()));
    }
}

#[test]
fn last_column_law() {
    for i in small_strongly_stable() {
        if !lefschetz_conditions(&i).unwrap().wl {
            continue;
        }
        let n = i.nvars();
        let c = c_from_hilbert(&i.hilbert_function().unwrap());
        let t = betti_ek(&i).unwrap();
        for j in 0..12 {
            assert_eq!(t.get(n, j), c.get(j + 1), "({i}) j={j}");
        }
    }
}

#[test]
fn closed_form_matches_kwlp_ideals() {
    for i in small_strongly_stable() {
        let n = i.nvars();
        let h = i.hilbert_function().unwrap();
        if h.len() > 1 && h.values()[1] != n as u64 {
            // a linear generator: the quotient lives in fewer variables
            continue;
        }
        for k in 1..=n {
            if !k_lefschetz_last_vars(&i, k, LefschetzMode::Weak).unwrap() {
                break;
            }
            let base = if k < n {
                Some(betti_ek(&i.intersect_subring(k).unwrap()).unwrap())
            } else {
                None
            };
            let closed = betti_kwlp_closed_form(&h, n, k, base.as_ref()).unwrap();
            assert_eq!(closed, betti_ek(&i).unwrap(), "({i}) k={k}");
        }
    }
}

#[test]
fn upper_bound_dominates_and_is_attained() {
    for h in ["1,3,5,5,3,1", "1,3,4,4,2", "1,3,6,6,3"] {
        let h = seq(h);
        for k in 1..=3 {
            if !h.admits_k_lefschetz(3, k).unwrap() {
                continue;
            }
            let bound = betti_upper_bound(&h, 3, k).unwrap();
            let filter = EnumerationFilter::KWlp(k);
            for e in enumerate_borel_fixed(&h, 3, filter).unwrap() {
                assert!(betti_koszul(&e).unwrap().entrywise_le(&bound), "{h} k={k} ({e})");
            }
            let tower = borel_tower_from_hilbert(&h, 3, k).unwrap();
            assert_eq!(betti_ek(&tower).unwrap(), bound, "{h} k={k}");
        }
        if h.admits_k_lefschetz(3, 3).unwrap() {
            let a = almost_revlex_from_hilbert(&h, 3).unwrap();
            assert_eq!(betti_ek(&a).unwrap(), betti_upper_bound(&h, 3, 3).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    /// The Koszul oracle reproduces the Hilbert series of arbitrary ideals.
    #[test]
    fn koszul_alternating_sum(seed in any::<u64>(), n in 2usize..=3, cap in 2u32..=4) {
        let i = random_artinian(&mut rng(seed), n, cap);
        let t = betti_koszul(&i).unwrap();
        prop_assert_eq!(t.hilbert_numerator(), numerator(&i));
        prop_assert_eq!(t.total(1), i.generators().len() as u64);
    }
}
