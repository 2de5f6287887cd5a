mod common;

use std::collections::HashSet;

use common::*;
use leflab_core::construct::{
    almost_revlex_from_hilbert, borel_tower_from_hilbert, enumerate_borel_fixed,
    lex_ideal_from_hilbert, phi_inverse, EnumerationFilter,
};
use leflab_core::lefschetz::{k_lefschetz_last_vars, lefschetz_conditions, LefschetzMode};
use leflab_core::{Monomial, MonomialIdeal, OSequence, TermOrder};

fn admissible(n: usize, k: usize, socle: usize, max: u64) -> Vec<OSequence> {
    all_sequences(n as u64, socle, max)
        .into_iter()
        .filter(|h| h.admits_k_lefschetz(n, k).unwrap())
        .collect()
}

#[test]
fn almost_revlex_properties() {
    for n in 2..=4 {
        for h in admissible(n, n, 4, 8) {
            let i = almost_revlex_from_hilbert(&h, n).unwrap();
            assert_eq!(i.hilbert_function().unwrap(), h);
            assert!(i.is_almost_revlex(), "{h}");
            assert!(k_lefschetz_last_vars(&i, n, LefschetzMode::Strong).unwrap(), "{h}");
            assert_eq!(almost_revlex_from_hilbert(&h, n).unwrap(), i);
        }
    }
}

#[test]
fn almost_revlex_exists_iff_admissible() {
    for n in 3..=4 {
        let socle = if n == 3 { 5 } else { 4 };
        for h in all_sequences(n as u64, socle, 10) {
            let admits = h.admits_k_lefschetz(n, n).unwrap();
            let built = almost_revlex_from_hilbert(&h, n);
            assert_eq!(admits, built.is_ok(), "{h}: {built:?}");
            if let Err(e) = built {
                assert_eq!(e.class(), "characterization");
                assert!(e.to_string().contains("Δ^"), "{e}");
            }
        }
    }
}

#[test]
fn lex_ideal_segments() {
    for n in 2..=3 {
        for h in all_sequences(n as u64, 4, 8).into_iter().filter(OSequence::is_o_sequence) {
            let l = lex_ideal_from_hilbert(&h, n).unwrap();
            assert_eq!(l.hilbert_function().unwrap(), h);
            assert!(l.is_strongly_stable());
            // each component is a lex top segment
            for d in 0..=h.len() as u32 {
                let mut all = Monomial::all_of_degree(n, d);
                all.sort_by(|a, b| TermOrder::Lex.cmp(b, a));
                let inside: Vec<bool> = all.iter().map(|m| l.is_member(m).unwrap()).collect();
                assert!(inside.windows(2).all(|w| w[0] || !w[1]), "{h} degree {d}");
            }
        }
    }
}

#[test]
fn phi_inverse_round_trip() {
    for h in admissible(3, 1, 5, 9) {
        let dh = h.delta(1);
        for ibar in enumerate_borel_fixed(&dh, 2, EnumerationFilter::None).unwrap() {
            let lifted = phi_inverse(&ibar, &h).unwrap();
            assert_eq!(lifted.intersect_subring(1).unwrap(), ibar, "{h}");
            assert_eq!(lifted.hilbert_function().unwrap(), h);
            assert!(lefschetz_conditions(&lifted).unwrap().sl, "{h}");
            assert!(lifted.is_strongly_stable(), "{h}");
            if ibar.is_almost_revlex() {
                assert!(lifted.is_almost_revlex(), "{h}");
            }
        }
    }
}

#[test]
fn phi_inverse_preserves_strong_stability_in_four_variables() {
    for h in admissible(4, 1, 4, 10) {
        let dh = h.delta(1);
        for ibar in enumerate_borel_fixed(&dh, 3, EnumerationFilter::None).unwrap() {
            let lifted = phi_inverse(&ibar, &h).unwrap();
            assert_eq!(lifted.intersect_subring(1).unwrap(), ibar);
            assert!(lifted.is_strongly_stable(), "{h} from ({ibar})");
        }
    }
}

#[test]
fn tower_matches_certificate() {
    for k in 1..=3 {
        for h in admissible(3, k, 5, 10) {
            let t = borel_tower_from_hilbert(&h, 3, k).unwrap();
            assert_eq!(t.hilbert_function().unwrap(), h);
            assert!(t.is_strongly_stable());
            assert!(k_lefschetz_last_vars(&t, k, LefschetzMode::Strong).unwrap(), "{h} k={k}");
        }
    }
}

#[test]
fn sl_lifts_are_injective_for_quasi_symmetric() {
    for h in admissible(3, 1, 5, 8).into_iter().filter(OSequence::is_quasi_symmetric) {
        let sl = enumerate_borel_fixed(&h, 3, EnumerationFilter::Sl).unwrap();
        let images: HashSet<MonomialIdeal> =
            sl.iter().map(|i| i.intersect_subring(1).unwrap()).collect();
        assert_eq!(images.len(), sl.len(), "{h}");
    }
}

#[test]
fn nslp_borel_ideal_is_unique_in_three_variables() {
    for h in admissible(3, 3, 5, 9) {
        let all = enumerate_borel_fixed(&h, 3, EnumerationFilter::KSlp(3)).unwrap();
        assert_eq!(all, vec![almost_revlex_from_hilbert(&h, 3).unwrap()], "{h}");
    }
}

#[test]
fn nslp_borel_ideal_is_unique_for_quasi_symmetric_in_four_variables() {
    for h in admissible(4, 4, 4, 10).into_iter().filter(OSequence::is_quasi_symmetric) {
        let all = enumerate_borel_fixed(&h, 4, EnumerationFilter::KSlp(4)).unwrap();
        assert_eq!(all, vec![almost_revlex_from_hilbert(&h, 4).unwrap()], "{h}");
    }
}

#[test]
fn four_variable_examples_are_both_enumerated() {
    let h = seq("1,4,8,7");
    let found = enumerate_borel_fixed(&h, 4, EnumerationFilter::KSlp(4)).unwrap();
    let i = capped(FOUR_VAR_I, 4, 4);
    let j = capped(FOUR_VAR_J, 4, 4);
    assert!(found.contains(&i) && found.contains(&j));
}

#[test]
fn enumeration_is_exhaustive_against_order_ideal_brute_force() {
    // every strongly stable ideal with h = (1,3,3,1) found by filtering all
    // order ideals of the right shape
    let h = seq("1,3,3,1");
    let listed = enumerate_borel_fixed(&h, 3, EnumerationFilter::None).unwrap();
    let deg2 = Monomial::all_of_degree(3, 2);
    let deg3 = Monomial::all_of_degree(3, 3);
    let mut brute = Vec::new();
    for a in 0u32..(1 << deg2.len()) {
        if a.count_ones() != 3 {
            continue;
        }
        for b in 0u32..(1 << deg3.len()) {
            if b.count_ones() != 1 {
                continue;
            }
            let mut set: HashSet<Monomial> = HashSet::new();
            set.insert(Monomial::one(3));
            set.extend((0..3).map(|v| Monomial::var(3, v)));
            set.extend((0..deg2.len()).filter(|&x| a >> x & 1 == 1).map(|x| deg2[x]));
            set.extend((0..deg3.len()).filter(|&x| b >> x & 1 == 1).map(|x| deg3[x]));
            if let Ok(i) = MonomialIdeal::from_standard_set(3, &set) {
                if i.is_strongly_stable() && i.hilbert_function().unwrap() == h {
                    brute.push(i);
                }
            }
        }
    }
    assert_eq!(listed.len(), brute.len());
    for i in brute {
        assert!(listed.contains(&i));
    }
}
