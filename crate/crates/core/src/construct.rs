//! Monomial ideals built from a Hilbert function: the almost revlex ideal, the
//! lex-segment ideal, lifts along the difference tower, and exhaustive
//! enumeration of strongly stable ideals.

use std::collections::HashSet;

use serde::Serialize;

use crate::hilbert::OSequence;
use crate::ideal::MonomialIdeal;
use crate::lefschetz::{k_lefschetz_last_vars, LefschetzMode};
use crate::monomial::{check_nvars, Monomial, TermOrder};
use crate::{Error, Result};

fn characterization_error(h: &OSequence, n: usize, k: usize, fallback: String) -> Error {
    match h.lefschetz_obstruction(n, k) {
        Ok(Some(reason)) => Error::Characterization(reason),
        Err(e) => e,
        Ok(None) => Error::Characterization(fallback),
    }
}

/// The unique almost revlex ideal with Hilbert function `h` in `n` variables.
///
/// Built degree by degree: the degree-`d` monomials whose divisors are all
/// standard are ordered grevlex descending and the largest ones become
/// minimal generators until `h_d` standard monomials remain.
pub fn almost_revlex_from_hilbert(h: &OSequence, n: usize) -> Result<MonomialIdeal> {
    check_nvars(n)?;
    if h.values().first() != Some(&1) {
        return Err(Error::Characterization(format!("({h}) does not start with 1")));
    }
    if h.len() >= 2 && h.values()[1] != n as u64 {
        return Err(Error::Dimension {
            expected: n,
            found: h.values()[1] as usize,
        });
    }
    let mut gens: Vec<Monomial> = Vec::new();
    let mut standard: Vec<Monomial> = vec![Monomial::one(n)];
    for d in 1..=h.len() {
        let target = h.get(d as i64);
        let mut candidates: Vec<Monomial> = standard
            .iter()
            .flat_map(|m| (0..n).map(move |i| m.times_var(i)))
            .filter(|w| (0..n).filter_map(|j| w.div_var(j)).all(|v| standard.contains(&v)))
            .collect();
        candidates.sort_by(|a, b| TermOrder::Grevlex.cmp(b, a));
        candidates.dedup();
        let count = candidates.len() as u64;
        if count < target {
            return Err(characterization_error(
                h,
                n,
                n,
                format!("only {count} monomials available in degree {d}, need {target}"),
            ));
        }
        let split = (count - target) as usize;
        gens.extend_from_slice(&candidates[..split]);
        standard = candidates[split..].to_vec();
    }
    MonomialIdeal::minimalize(n, gens)
}

/// The lex-segment ideal with Hilbert function `h` in `n` variables.
pub fn lex_ideal_from_hilbert(h: &OSequence, n: usize) -> Result<MonomialIdeal> {
    check_nvars(n)?;
    if !h.is_o_sequence() {
        return Err(Error::Characterization(format!("({h}) is not an O-sequence")));
    }
    if h.len() >= 2 && h.values()[1] > n as u64 {
        return Err(Error::Dimension {
            expected: n,
            found: h.values()[1] as usize,
        });
    }
    let mut members = Vec::new();
    for d in 1..=h.len() {
        let mut all = Monomial::all_of_degree(n, d as u32);
        all.sort_by(|a, b| TermOrder::Lex.cmp(b, a));
        let want = h.get(d as i64) as usize;
        if want > all.len() {
            return Err(Error::Characterization(format!(
                "h_{d} = {want} exceeds the number of monomials of degree {d}"
            )));
        }
        members.extend_from_slice(&all[..all.len() - want]);
    }
    let ideal = MonomialIdeal::minimalize(n, members)?;
    if ideal.hilbert_function()? != *h {
        return Err(Error::Characterization(format!(
            "lex segments of ({h}) do not form an ideal"
        )));
    }
    Ok(ideal)
}

/// Lifts an `(n-1)`-variable ideal with Hilbert function `Δh` to an
/// `n`-variable ideal with Hilbert function `h` whose x_n-chains realize the
/// chain profile of `h`.
///
/// Standard monomials of `Ibar` of each degree are sorted grevlex ascending
/// and receive the chain lengths of that start degree in descending order.
pub fn phi_inverse(ibar: &MonomialIdeal, h: &OSequence) -> Result<MonomialIdeal> {
    let n = ibar.nvars() + 1;
    check_nvars(n)?;
    let found = ibar.hilbert_function()?;
    let expected = h.delta(1);
    if found != expected {
        return Err(Error::HilbertMismatch {
            expected: expected.to_string(),
            found: found.to_string(),
        });
    }
    if !h.is_unimodal() {
        return Err(Error::Characterization(format!("({h}) is not unimodal")));
    }
    let profile = h.chain_profile()?;
    let layers = ibar.standard_monomials_by_degree()?;
    let mut standard: HashSet<Monomial> = HashSet::new();
    for (d, layer) in layers.iter().enumerate() {
        let mut lengths: Vec<usize> = profile
            .intervals
            .iter()
            .filter(|iv| iv.0 == d)
            .map(|iv| iv.1 - iv.0 + 1)
            .collect();
        if lengths.len() != layer.len() {
            return Err(Error::Characterization(format!(
                "({h}) has {} chains starting in degree {d} but ({ibar}) has {} standard monomials there",
                lengths.len(),
                layer.len()
            )));
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        // layers are grevlex descending; walk them ascending
        for (base, &len) in layer.iter().rev().zip(&lengths) {
            let base = base.extend(n);
            for k in 0..len {
                standard.insert(base.times_var_pow(n - 1, k as u32));
            }
        }
    }
    if profile.intervals.iter().any(|iv| iv.0 >= layers.len()) {
        return Err(Error::Characterization(format!(
            "({h}) has chains starting above the socle degree of ({ibar})"
        )));
    }
    let lifted = MonomialIdeal::from_standard_set(n, &standard).map_err(|e| match e {
        Error::Argument(msg) => Error::Characterization(format!("chains do not form an order ideal: {msg}")),
        other => other,
    })?;
    debug_assert_eq!(lifted.hilbert_function().ok().as_ref(), Some(h));
    Ok(lifted)
}

/// A Borel-fixed ideal with Hilbert function `h` whose quotient has the
/// k-SLP with respect to the last variables: the lex ideal of `Δ^k h` in
/// `n - k` variables lifted `k` times with [`phi_inverse`].
///
/// For `k = n` the bottom of the tower is the one-variable lex ideal of
/// `Δ^(n-1) h`.
pub fn borel_tower_from_hilbert(h: &OSequence, n: usize, k: usize) -> Result<MonomialIdeal> {
    check_nvars(n)?;
    if k == 0 || k > n {
        return Err(Error::Argument(format!("k must be in 1..={n}, got {k}")));
    }
    let bottom = k.min(n - 1);
    let base_h = h.delta(bottom);
    let mut ideal = lex_ideal_from_hilbert(&base_h, n - bottom).map_err(|e| match e {
        Error::Characterization(msg) => Error::Characterization(format!("Δ^{bottom}h: {msg}")),
        other => other,
    })?;
    for t in (0..bottom).rev() {
        let level = h.delta(t);
        ideal = phi_inverse(&ideal, &level).map_err(|e| match e {
            Error::Characterization(msg) => Error::Characterization(format!("Δ^{t}h: {msg}")),
            other => other,
        })?;
    }
    Ok(ideal)
}

/// Which Lefschetz certificate enumerated ideals must pass.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EnumerationFilter {
    None,
    /// WL condition with x_n.
    Wl,
    /// SL condition with x_n.
    Sl,
    /// k-SLP certificate with the last k variables.
    KSlp(usize),
    /// k-WLP certificate with the last k variables.
    KWlp(usize),
}

impl EnumerationFilter {
    fn accepts(self, ideal: &MonomialIdeal) -> Result<bool> {
        match self {
            EnumerationFilter::None => Ok(true),
            EnumerationFilter::Wl => k_lefschetz_last_vars(ideal, 1, LefschetzMode::Weak),
            EnumerationFilter::Sl => k_lefschetz_last_vars(ideal, 1, LefschetzMode::Strong),
            EnumerationFilter::KSlp(k) => k_lefschetz_last_vars(ideal, k, LefschetzMode::Strong),
            EnumerationFilter::KWlp(k) => k_lefschetz_last_vars(ideal, k, LefschetzMode::Weak),
        }
    }
}

/// Size limits for the exhaustive enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_vars: usize,
    pub max_socle: usize,
    pub max_value: u64,
    pub max_results: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_vars: 5,
            max_socle: 8,
            max_value: 40,
            max_results: 200_000,
        }
    }
}

struct Search<'a> {
    n: usize,
    // `Some(h)` fixes every degree component, `None` allows any size
    target: Option<&'a OSequence>,
    max_socle: usize,
    max_results: usize,
    layers: Vec<Vec<Monomial>>,
    found: Vec<MonomialIdeal>,
}

impl Search<'_> {
    fn candidates(&self) -> Vec<Monomial> {
        let prev = self.layers.last().unwrap();
        let set: HashSet<&Monomial> = prev.iter().collect();
        let mut out: Vec<Monomial> = prev
            .iter()
            .flat_map(|m| (0..self.n).map(move |i| m.times_var(i)))
            .filter(|w| (0..self.n).filter_map(|j| w.div_var(j)).all(|v| set.contains(&v)))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    fn degree(&mut self) -> Result<()> {
        let d = self.layers.len();
        let candidates = self.candidates();
        let sizes: Vec<usize> = match self.target {
            Some(h) => vec![h.get(d as i64) as usize],
            None if d > self.max_socle => vec![0],
            None => (0..=candidates.len()).collect(),
        };
        for size in sizes {
            if size > candidates.len() {
                continue;
            }
            let mut chosen = Vec::new();
            self.choose(&candidates, 0, size, &mut chosen)?;
        }
        Ok(())
    }

    /// Picks `remaining` more candidates (grevlex ascending) so the layer stays
    /// closed under the moves `x_i -> x_{i+1}`.
    fn choose(
        &mut self,
        candidates: &[Monomial],
        next: usize,
        remaining: usize,
        chosen: &mut Vec<Monomial>,
    ) -> Result<()> {
        if remaining == 0 {
            if chosen.is_empty() {
                return self.finish();
            }
            let mut layer = chosen.clone();
            layer.sort_by(|a, b| b.cmp(a));
            self.layers.push(layer);
            let r = self.degree();
            self.layers.pop();
            return r;
        }
        if candidates.len() - next < remaining {
            return Ok(());
        }
        let m = candidates[next];
        let closed = (0..self.n - 1).all(|i| match m.div_var(i) {
            None => true,
            Some(q) => chosen.contains(&q.times_var(i + 1)),
        });
        if closed {
            chosen.push(m);
            self.choose(candidates, next + 1, remaining - 1, chosen)?;
            chosen.pop();
        }
        self.choose(candidates, next + 1, remaining, chosen)
    }

    fn finish(&mut self) -> Result<()> {
        if let Some(h) = self.target {
            if self.layers.len() != h.len() {
                return Ok(());
            }
        }
        let standard: HashSet<Monomial> = self.layers.iter().flatten().copied().collect();
        self.found.push(MonomialIdeal::from_standard_set(self.n, &standard)?);
        if self.found.len() > self.max_results {
            return Err(Error::Resource(format!(
                "more than {} ideals; tighten the bounds",
                self.max_results
            )));
        }
        Ok(())
    }
}

fn check_limits(n: usize, socle: usize, value: u64, limits: &EnumerationLimits) -> Result<()> {
    check_nvars(n)?;
    if n > limits.max_vars || socle > limits.max_socle || value > limits.max_value {
        return Err(Error::Resource(format!(
            "enumeration limited to {} variables, socle degree {} and values {}",
            limits.max_vars, limits.max_socle, limits.max_value
        )));
    }
    Ok(())
}

/// Every strongly stable Artinian ideal with Hilbert function `h` whose
/// quotient passes `filter`, in a deterministic order.
pub fn enumerate_borel_fixed(
    h: &OSequence,
    n: usize,
    filter: EnumerationFilter,
) -> Result<Vec<MonomialIdeal>> {
    enumerate_borel_fixed_with(h, n, filter, &EnumerationLimits::default())
}

pub fn enumerate_borel_fixed_with(
    h: &OSequence,
    n: usize,
    filter: EnumerationFilter,
    limits: &EnumerationLimits,
) -> Result<Vec<MonomialIdeal>> {
    check_limits(n, h.socle_degree(), h.max_value(), limits)?;
    if h.values().first() != Some(&1) {
        return Ok(Vec::new());
    }
    let mut search = Search {
        n,
        target: Some(h),
        max_socle: h.socle_degree(),
        max_results: limits.max_results,
        layers: vec![vec![Monomial::one(n)]],
        found: Vec::new(),
    };
    search.degree()?;
    let mut out = Vec::new();
    for ideal in search.found {
        if filter.accepts(&ideal)? {
            out.push(ideal);
        }
    }
    Ok(out)
}

/// Every strongly stable Artinian ideal in `n` variables with socle degree at
/// most `max_socle`, excluding the unit ideal, in a deterministic order.
pub fn enumerate_strongly_stable(
    n: usize,
    max_socle: usize,
    limits: &EnumerationLimits,
) -> Result<Vec<MonomialIdeal>> {
    check_limits(n, max_socle, 0, limits)?;
    let mut search = Search {
        n,
        target: None,
        max_socle,
        max_results: limits.max_results,
        layers: vec![vec![Monomial::one(n)]],
        found: Vec::new(),
    };
    search.degree()?;
    Ok(search.found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_monomial_ideal;

    fn ideal(text: &str, n: usize) -> MonomialIdeal {
        parse_monomial_ideal(text, n).unwrap()
    }

    fn seq(s: &str) -> OSequence {
        s.parse().unwrap()
    }

    #[test]
    fn almost_revlex_examples() {
        assert_eq!(
            almost_revlex_from_hilbert(&seq("1,3,4,3,1"), 3).unwrap(),
            ideal("x1^2, x1*x2, x2^3, x2^2*x3, x1*x3^3, x2*x3^3, x3^5", 3)
        );
        assert_eq!(
            almost_revlex_from_hilbert(&seq("1,3,3,2"), 3).unwrap(),
            ideal("x1^2, x1*x2, x2^2, x1*x3^2, x2*x3^3, x3^4", 3)
        );
        assert_eq!(
            almost_revlex_from_hilbert(&seq("1"), 4).unwrap(),
            MonomialIdeal::maximal(4).unwrap()
        );
    }

    #[test]
    fn almost_revlex_failure_names_the_difference() {
        // (1,3,5,4,5) is not unimodal
        let err = almost_revlex_from_hilbert(&seq("1,3,5,4,5"), 3).unwrap_err();
        assert_eq!(err.class(), "characterization");
        assert!(err.to_string().contains("Δ^0h"), "{err}");
    }

    #[test]
    fn lex_examples() {
        assert_eq!(
            lex_ideal_from_hilbert(&seq("1,2,1"), 2).unwrap(),
            ideal("x1^2, x1*x2, x2^3", 2)
        );
        assert_eq!(
            lex_ideal_from_hilbert(&seq("1,3,3"), 3).unwrap(),
            ideal("x1^2, x1*x2, x1*x3, x2^3, x2^2*x3, x2*x3^2, x3^3", 3)
        );
        assert_eq!(
            lex_ideal_from_hilbert(&seq("1"), 2).unwrap(),
            ideal("x1, x2", 2)
        );
        assert!(lex_ideal_from_hilbert(&seq("1,2,4"), 2).is_err());
    }

    #[test]
    fn phi_inverse_examples() {
        assert_eq!(
            phi_inverse(&ideal("x1^2, x1*x2, x2^3", 2), &seq("1,3,4,3,1")).unwrap(),
            ideal("x1^2, x1*x2, x2^3, x2^2*x3, x1*x3^3, x2*x3^3, x3^5", 3)
        );
        assert_eq!(
            phi_inverse(&ideal("x1^2, x1*x2, x2^2", 2), &seq("1,3,3,2")).unwrap(),
            ideal("x1^2, x1*x2, x2^2, x1*x3^2, x2*x3^3, x3^4", 3)
        );
        assert_eq!(
            phi_inverse(&ideal("x1", 1), &seq("1,1,1")).unwrap(),
            ideal("x1, x2^3", 2)
        );
        let err = phi_inverse(&ideal("x1, x2", 2), &seq("1,3,4,3,1")).unwrap_err();
        assert_eq!(err.class(), "hilbert-mismatch");
    }

    #[test]
    fn tower_examples() {
        let h = seq("1,3,4,3,1");
        assert_eq!(
            borel_tower_from_hilbert(&h, 3, 3).unwrap(),
            almost_revlex_from_hilbert(&h, 3).unwrap()
        );
        assert_eq!(
            borel_tower_from_hilbert(&seq("1"), 2, 1).unwrap(),
            ideal("x1, x2", 2)
        );
        let big = seq("1,5,13,20,13,5,1");
        let t = borel_tower_from_hilbert(&big, 5, 5).unwrap();
        assert_eq!(t.hilbert_function().unwrap(), big);
        assert!(t.is_strongly_stable());
        assert!(k_lefschetz_last_vars(&t, 5, LefschetzMode::Strong).unwrap());
    }

    #[test]
    fn enumeration_examples() {
        let h = seq("1,3,4,3,1");
        let i = ideal("x1^2, x1*x2, x2^3, x2^2*x3, x1*x3^3, x2*x3^3, x3^5", 3);
        let j = ideal("x1^2, x1*x2, x2^3, x1*x3^2, x2^2*x3^2, x2*x3^3, x3^5", 3);
        let wl = enumerate_borel_fixed(&h, 3, EnumerationFilter::Wl).unwrap();
        assert!(wl.contains(&i) && wl.contains(&j));
        let sl = enumerate_borel_fixed(&h, 3, EnumerationFilter::Sl).unwrap();
        assert_eq!(sl, vec![i]);
    }

    #[test]
    fn two_variable_uniqueness() {
        // in two variables there is one strongly stable ideal per Hilbert function
        for h in ["1,2,1", "1,2,3,2,1", "1,2,2,2,1", "1,2,3,1"] {
            let h = seq(h);
            let all = enumerate_borel_fixed(&h, 2, EnumerationFilter::None).unwrap();
            assert_eq!(all.len(), 1, "{h}");
            assert_eq!(all[0], lex_ideal_from_hilbert(&h, 2).unwrap());
            assert_eq!(all[0], almost_revlex_from_hilbert(&h, 2).unwrap());
        }
    }

    #[test]
    fn strongly_stable_enumeration_matches_brute_force() {
        let limits = EnumerationLimits::default();
        let all = enumerate_strongly_stable(2, 3, &limits).unwrap();
        assert!(all.iter().all(|i| i.is_strongly_stable() && i.is_artinian()));
        // brute force: order ideals of monomials of degree <= 3 in 2 variables
        let monos: Vec<Monomial> = (0..=3).flat_map(|d| Monomial::all_of_degree(2, d)).collect();
        let mut count = 0;
        for mask in 1u32..(1 << monos.len()) {
            let set: HashSet<Monomial> = (0..monos.len())
                .filter(|&b| mask >> b & 1 == 1)
                .map(|b| monos[b])
                .collect();
            if let Ok(i) = MonomialIdeal::from_standard_set(2, &set) {
                if i.is_strongly_stable() {
                    count += 1;
                }
            }
        }
        assert_eq!(all.len(), count);
    }
}
