#![allow(dead_code)]

use std::collections::HashSet;

use leflab_core::parse::parse_monomial_ideal;
use leflab_core::{Monomial, MonomialIdeal, OSequence, TermOrder};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn ideal(text: &str, n: usize) -> MonomialIdeal {
    parse_monomial_ideal(text, n).unwrap()
}

pub fn capped(text: &str, n: usize, d: u32) -> MonomialIdeal {
    ideal(text, n)
        .sum(&MonomialIdeal::maximal_power(n, d).unwrap())
        .unwrap()
}

pub fn seq(s: &str) -> OSequence {
    s.parse().unwrap()
}

pub const SLP_STD_MONO: &str = "x1^2, x1*x2, x2^2, x2*x3^2";
pub const NON_SLP_STD_MONO: &str = "x1^2, x1*x2, x2^3, x1*x3^2, x2^2*x3^2, x2*x3^3, x3^5";
pub const BOREL_WLP_I: &str = "x1^2, x1*x2, x2^3, x2^2*x3, x1*x3^3, x2*x3^3, x3^5";
pub const BOREL_WLP_J: &str = NON_SLP_STD_MONO;
pub const STABLE_I: &str = "x1^2, x1*x2, x2^2, x1*x3^2";
pub const STABLE_J: &str = "x1^2, x1*x2, x2^2, x2*x3^2";
pub const FOUR_VAR_I: &str = "x1^2, x1*x2, x2^3, x2^2*x3, x1*x3^2, x2*x3^2, x3^3, x2^2*x4";
pub const FOUR_VAR_J: &str = "x1^2, x1*x2, x2^3, x2^2*x3, x1*x3^2, x2*x3^2, x3^3, x1*x3*x4";

/// The worked example ideals, made Artinian.
pub fn example_ideals() -> Vec<MonomialIdeal> {
    vec![
        capped(SLP_STD_MONO, 3, 4),
        ideal(NON_SLP_STD_MONO, 3),
        ideal(BOREL_WLP_I, 3),
        capped(STABLE_I, 3, 4),
        capped(STABLE_J, 3, 4),
        capped(FOUR_VAR_I, 4, 4),
        capped(FOUR_VAR_J, 4, 4),
    ]
}

/// Random Artinian monomial ideal: a few random monomials plus `m^cap`.
pub fn random_artinian(rng: &mut ChaCha8Rng, n: usize, cap: u32) -> MonomialIdeal {
    let count = rng.gen_range(1..=2 * n);
    let mut gens = Vec::new();
    for _ in 0..count {
        let d = rng.gen_range(1..=cap);
        let mut exps = vec![0u32; n];
        for _ in 0..d {
            exps[rng.gen_range(0..n)] += 1;
        }
        gens.push(Monomial::new(&exps).unwrap());
    }
    let base = MonomialIdeal::minimalize(n, gens).unwrap();
    base.sum(&MonomialIdeal::maximal_power(n, cap).unwrap()).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All members of the ideal of degree `d`, straight from the definition.
pub fn members_of_degree(i: &MonomialIdeal, d: u32) -> Vec<Monomial> {
    Monomial::all_of_degree(i.nvars(), d)
        .into_iter()
        .filter(|m| i.is_member(m).unwrap())
        .collect()
}

/// Standard monomials by degree, computed by scanning every monomial.
pub fn standard_by_scan(i: &MonomialIdeal) -> Vec<Vec<Monomial>> {
    let mut out = Vec::new();
    for d in 0.. {
        let layer: Vec<Monomial> = Monomial::all_of_degree(i.nvars(), d)
            .into_iter()
            .filter(|m| !i.is_member(m).unwrap())
            .collect();
        if layer.is_empty() {
            break;
        }
        out.push(layer);
    }
    out
}

/// Rank of multiplication by `x_n^s` from degree `d - s` to `d` of `R/I`,
/// counted on monomial bases.
pub fn xn_power_rank(std: &[Vec<Monomial>], s: usize, d: usize) -> usize {
    if d < s || d >= std.len() {
        return 0;
    }
    let n = std[0][0].nvars();
    let target: HashSet<&Monomial> = std[d].iter().collect();
    std[d - s]
        .iter()
        .filter(|m| target.contains(&m.times_var_pow(n - 1, s as u32)))
        .count()
}

/// Lefschetz verdicts for `x_n` from explicit ranks of the multiplication maps.
pub fn rank_verdicts(i: &MonomialIdeal) -> (bool, bool) {
    let std = standard_by_scan(i);
    let c = std.len() - 1;
    let full = |s: usize| {
        (s..=c).all(|d| xn_power_rank(&std, s, d) == std[d - s].len().min(std[d].len()))
    };
    let weak = full(1);
    let strong = (1..=c.max(1)).all(full);
    (strong, weak)
}

/// Every integer sequence `(1, a_1, ..., a_c)` with `c <= max_socle`,
/// `a_1 = first` and positive entries at most `max_value`.
pub fn all_sequences(first: u64, max_socle: usize, max_value: u64) -> Vec<OSequence> {
    let mut out = vec![seq("1")];
    let mut frontier: Vec<Vec<u64>> = vec![vec![1, first]];
    while let Some(v) = frontier.pop() {
        out.push(OSequence::new(v.clone()).unwrap());
        if v.len() <= max_socle {
            for a in 1..=max_value {
                let mut w = v.clone();
                w.push(a);
                frontier.push(w);
            }
        }
    }
    out.sort();
    out
}

/// O-sequence test by lex segments: the `h_d` lex-smallest monomials of each
/// degree must have all their divisors among the lex-smallest of the degree below.
pub fn o_sequence_by_lex(h: &OSequence, n: usize) -> bool {
    if h.values()[0] != 1 {
        return false;
    }
    let mut prev: HashSet<Monomial> = HashSet::from([Monomial::one(n)]);
    for d in 1..h.len() {
        let mut all = Monomial::all_of_degree(n, d as u32);
        all.sort_by(|a, b| TermOrder::Lex.cmp(a, b));
        let want = h.values()[d] as usize;
        if want > all.len() {
            return false;
        }
        let seg: HashSet<Monomial> = all[..want].iter().copied().collect();
        for m in &seg {
            for j in 0..n {
                if let Some(q) = m.div_var(j) {
                    if !prev.contains(&q) {
                        return false;
                    }
                }
            }
        }
        prev = seg;
    }
    true
}
