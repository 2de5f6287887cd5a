//! Hilbert functions of graded Artinian algebras as finite integer sequences.
//!
//! Covers Macaulay's growth bound, the clamped difference operator, the
//! unimodality breakpoints, quasi-symmetry, the difference-tower test for the
//! k-SLP and the chain profile forced on an SL-compatible chain decomposition.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::{Error, Result};

/// A finite sequence `h_0, ..., h_c` with no trailing zeros.
///
/// Sequences read from user input have positive entries; sequences produced by
/// [`OSequence::delta`] may contain interior zeros, which makes them fail
/// [`OSequence::is_o_sequence`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OSequence(Vec<u64>);

/// The indices `u_1 < u_2 < ...` of a unimodal sequence: `u_1` is the first
/// index where the maximum is attained, each later `u_i` is an index where the
/// sequence strictly drops.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Breakpoints {
    pub u: Vec<usize>,
}

/// Degree intervals `[start, end]` of x_n-chains in an SL-compatible
/// decomposition, sorted by start ascending then end descending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainProfile {
    pub intervals: Vec<(usize, usize)>,
}

/// `C(a, b)`, zero when `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> u64 {
    if b < 0 || a < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// The `d`-th Macaulay representation `a = C(k_d, d) + C(k_{d-1}, d-1) + ...`
/// as pairs `(k_i, i)` with `k_d > k_{d-1} > ... >= i >= 1`.
pub fn macaulay_representation(mut a: u64, d: u32) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut i = d;
    while a > 0 && i >= 1 {
        let mut k = i as u64;
        while binomial(k as i64 + 1, i as i64) <= a {
            k += 1;
        }
        a -= binomial(k as i64, i as i64);
        out.push((k, i));
        i -= 1;
    }
    out
}

/// Macaulay's bound `a^<d>` on the next value of an O-sequence.
pub fn macaulay_bound(a: u64, d: u32) -> u64 {
    macaulay_representation(a, d)
        .into_iter()
        .map(|(k, i)| binomial(k as i64 + 1, i as i64 + 1))
        .sum()
}

impl OSequence {
    /// Validating constructor for user-supplied sequences.
    pub fn new(values: Vec<u64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Shape("empty sequence".into()));
        }
        if let Some(pos) = values.iter().position(|&v| v == 0) {
            return Err(Error::Shape(format!(
                "entries must be positive (entry {pos} is zero)"
            )));
        }
        Ok(OSequence(values))
    }

    /// Stores `values` after trimming trailing zeros.
    pub fn from_values(mut values: Vec<u64>) -> Self {
        while values.last() == Some(&0) {
            values.pop();
        }
        OSequence(values)
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `h_d`, zero outside the stored range.
    pub fn get(&self, d: i64) -> u64 {
        if d < 0 {
            0
        } else {
            self.0.get(d as usize).copied().unwrap_or(0)
        }
    }

    /// The last index `c` with `h_c != 0`.
    pub fn socle_degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn max_value(&self) -> u64 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    /// `h_0 = 1` and `h_{d+1} <= h_d^<d>` for every `d >= 1`.
    pub fn is_o_sequence(&self) -> bool {
        if self.0.first() != Some(&1) {
            return false;
        }
        (1..self.0.len().saturating_sub(1))
            .all(|d| self.0[d + 1] <= macaulay_bound(self.0[d], d as u32))
    }

    /// `(Δ h)_i = max(h_i - h_{i-1}, 0)`, applied `k` times.
    pub fn delta(&self, k: usize) -> OSequence {
        let mut cur = self.clone();
        for _ in 0..k {
            let next = (0..cur.0.len())
                .map(|i| {
                    let prev = if i == 0 { 0 } else { cur.0[i - 1] };
                    cur.0[i].saturating_sub(prev)
                })
                .collect();
            cur = OSequence::from_values(next);
        }
        cur
    }

    /// Weakly increasing up to a peak, weakly decreasing after it.
    pub fn is_unimodal(&self) -> bool {
        let v = &self.0;
        let mut i = 0;
        while i + 1 < v.len() && v[i] <= v[i + 1] {
            i += 1;
        }
        while i + 1 < v.len() && v[i] >= v[i + 1] {
            i += 1;
        }
        i + 1 >= v.len()
    }

    /// First index attaining the maximum.
    pub fn peak(&self) -> usize {
        let max = self.max_value();
        self.0.iter().position(|&v| v == max).unwrap_or(0)
    }

    pub fn breakpoints(&self) -> Result<Breakpoints> {
        if !self.is_unimodal() {
            return Err(Error::Shape(format!("({self}) is not unimodal")));
        }
        let mut u = vec![self.peak()];
        for i in u[0] + 1..self.0.len() {
            if self.0[i] < self.0[i - 1] {
                u.push(i);
            }
        }
        Ok(Breakpoints { u })
    }

    /// The index `u_2` where the first strict drop after the peak occurs,
    /// counting the drop to zero just past the socle degree.
    pub fn first_drop(&self) -> usize {
        let p = self.peak();
        (p + 1..self.0.len())
            .find(|&i| self.0[i] < self.0[i - 1])
            .unwrap_or(self.0.len())
    }

    pub fn is_quasi_symmetric(&self) -> bool {
        if !self.is_unimodal() {
            return false;
        }
        let p = self.peak();
        let head: BTreeSet<u64> = self.0[..=p].iter().copied().collect();
        self.0[p + 1..].iter().all(|v| head.contains(v))
    }

    /// Describes the first failing condition of the k-SLP difference tower,
    /// or `None` when `h` is the Hilbert function of an algebra with the k-SLP.
    pub fn lefschetz_obstruction(&self, n: usize, k: usize) -> Result<Option<String>> {
        if n == 0 || k == 0 || k > n {
            return Err(Error::Argument(format!(
                "need 1 <= k <= n, got k = {k}, n = {n}"
            )));
        }
        if self.0.len() >= 2 && self.0[1] != n as u64 {
            return Err(Error::Dimension {
                expected: n,
                found: self.0[1] as usize,
            });
        }
        for t in 0..=k {
            let d = self.delta(t);
            if !d.is_o_sequence() {
                return Ok(Some(format!("Δ^{t}h = ({d}) is not an O-sequence")));
            }
            if t < k && !d.is_unimodal() {
                return Ok(Some(format!("Δ^{t}h = ({d}) is not unimodal")));
            }
        }
        Ok(None)
    }

    /// Whether `h` is the Hilbert function of some `n`-variable algebra with
    /// the k-SLP (equivalently the k-WLP).
    pub fn admits_k_lefschetz(&self, n: usize, k: usize) -> Result<bool> {
        Ok(self.lefschetz_obstruction(n, k)?.is_none())
    }

    /// Interval `i` is `{d : h_d >= i}` for `i = 1, ..., max h`.
    pub fn chain_profile(&self) -> Result<ChainProfile> {
        if !self.is_unimodal() {
            return Err(Error::Shape(format!("({self}) is not unimodal")));
        }
        let intervals = (1..=self.max_value())
            .map(|level| {
                let start = self.0.iter().position(|&v| v >= level).unwrap();
                let end = self.0.iter().rposition(|&v| v >= level).unwrap();
                (start, end)
            })
            .collect();
        Ok(ChainProfile { intervals })
    }
}

impl ChainProfile {
    /// Number of intervals containing degree `d`.
    pub fn coverage(&self, d: usize) -> usize {
        self.intervals
            .iter()
            .filter(|(s, e)| *s <= d && d <= *e)
            .count()
    }
}

const MAX_ENUM_SOCLE: usize = 16;
const MAX_ENUM_VALUE: u64 = 256;
const MAX_ENUM_OUTPUT: usize = 2_000_000;

/// All Hilbert functions of `n`-variable algebras with the n-SLP with socle
/// degree at most `max_socle` and entries at most `max_value`.
///
/// Starts from the sequences `(1, ..., 1)` and applies `n - 1` times the
/// step "take partial sums, then append any weakly decreasing positive tail".
/// Only sequences with `h_1 = n` (and the trivial `(1)`) are returned.
pub fn enumerate_nslp_hilbert(n: usize, max_socle: usize, max_value: u64) -> Result<Vec<OSequence>> {
    if n == 0 || n > crate::MAX_VARS {
        return Err(Error::Bounds(format!("variable count {n} out of range")));
    }
    if max_socle > MAX_ENUM_SOCLE || max_value > MAX_ENUM_VALUE {
        return Err(Error::Resource(format!(
            "enumeration bounds too large (socle <= {MAX_ENUM_SOCLE}, values <= {MAX_ENUM_VALUE})"
        )));
    }
    let mut current: BTreeSet<Vec<u64>> = (1..=max_socle + 1).map(|len| vec![1; len]).collect();
    for _ in 1..n {
        let mut next = BTreeSet::new();
        for a in &current {
            let mut prefix = Vec::with_capacity(a.len());
            let mut acc = 0;
            for &v in a {
                acc += v;
                prefix.push(acc);
            }
            if acc > max_value {
                continue;
            }
            extend_with_tails(&mut prefix, acc, max_socle + 1, &mut next);
            if next.len() > MAX_ENUM_OUTPUT {
                return Err(Error::Resource("too many sequences".into()));
            }
        }
        current = next;
    }
    Ok(current
        .into_iter()
        .filter(|h| h.len() == 1 || h[1] == n as u64)
        .map(OSequence)
        .collect())
}

fn extend_with_tails(seq: &mut Vec<u64>, cap: u64, max_len: usize, out: &mut BTreeSet<Vec<u64>>) {
    out.insert(seq.clone());
    if seq.len() == max_len {
        return;
    }
    for v in 1..=cap {
        seq.push(v);
        extend_with_tails(seq, v, max_len, out);
        seq.pop();
    }
}

impl fmt::Display for OSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for OSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for OSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut values = Vec::new();
        let mut column = 1;
        for part in trimmed.split(',') {
            let v = part.trim().parse::<u64>().map_err(|e| Error::Parse {
                line: 1,
                column,
                message: format!("bad Hilbert function entry {:?}: {e}", part.trim()),
            })?;
            values.push(v);
            column += part.len() + 1;
        }
        OSequence::new(values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(v: &[u64]) -> OSequence {
        OSequence::new(v.to_vec()).unwrap()
    }

    /// Brute-force `a^<d>`: the number of degree-(d+1) monomials in the
    /// upper shadow of the first `a` lex monomials of degree `d` in many variables.
    fn lex_shadow_oracle(a: u64, d: u32) -> u64 {
        use crate::monomial::{Monomial, TermOrder};
        let nvars = 6;
        let mut mons = Monomial::all_of_degree(nvars, d);
        mons.sort_by(|x, y| TermOrder::Lex.cmp(y, x));
        // the lex ideal component whose complement has size a
        let head: std::collections::HashSet<Monomial> =
            mons[..mons.len() - a as usize].iter().copied().collect();
        let mut next: std::collections::HashSet<Monomial> = std::collections::HashSet::new();
        for m in Monomial::all_of_degree(nvars, d + 1) {
            let in_ideal = (0..nvars).any(|i| m.div_var(i).is_some_and(|q| head.contains(&q)));
            if !in_ideal {
                next.insert(m);
            }
        }
        next.len() as u64
    }

    #[test]
    fn macaulay_bound_matches_lex_oracle() {
        for d in 1..=3u32 {
            for a in 1..=12u64 {
                if a > binomial(5 + d as i64, d as i64) {
                    continue;
                }
                assert_eq!(macaulay_bound(a, d), lex_shadow_oracle(a, d), "a={a} d={d}");
            }
        }
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(0, -1), 0);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(5, 2), 10);
    }

    #[test]
    fn o_sequence_examples() {
        assert!(h(&[1, 3, 4, 3, 1]).is_o_sequence());
        assert!(!h(&[1, 2, 4]).is_o_sequence());
        assert!(h(&[1, 4, 8, 7]).is_o_sequence());
        assert!(h(&[1]).is_o_sequence());
        assert!(!h(&[2, 1]).is_o_sequence());
    }

    #[test]
    fn delta_examples() {
        assert_eq!(h(&[1, 3, 4, 3, 1]).delta(1), h(&[1, 2, 1]));
        assert_eq!(h(&[1, 1, 1]).delta(1), h(&[1]));
        assert_eq!(h(&[1, 4, 8, 7]).delta(1), h(&[1, 3, 4]));
        assert_eq!(h(&[1, 4, 8, 7]).delta(2), h(&[1, 2, 1]));
        assert_eq!(h(&[1, 4, 8, 7]).delta(0), h(&[1, 4, 8, 7]));
    }

    #[test]
    fn breakpoint_examples() {
        assert_eq!(h(&[1, 3, 4, 4, 2, 2, 1]).breakpoints().unwrap().u, vec![2, 4, 6]);
        assert_eq!(h(&[1, 3, 4, 3, 1]).breakpoints().unwrap().u, vec![2, 3, 4]);
        assert_eq!(h(&[1, 3, 2, 3]).breakpoints().unwrap_err().class(), "shape");
        // strictly increasing: u_1 = c and nothing else
        assert_eq!(h(&[1, 2, 3]).breakpoints().unwrap().u, vec![2]);
        assert_eq!(h(&[1, 2, 3]).first_drop(), 3);
    }

    #[test]
    fn quasi_symmetry_examples() {
        assert!(h(&[1, 3, 4, 3, 1]).is_quasi_symmetric());
        assert!(!h(&[1, 4, 8, 7]).is_quasi_symmetric());
        assert!(h(&[1, 3, 4, 3]).is_quasi_symmetric());
        assert!(!h(&[1, 3, 2, 3]).is_quasi_symmetric());
    }

    #[test]
    fn admits_examples() {
        assert!(h(&[1, 4, 8, 7]).admits_k_lefschetz(4, 4).unwrap());
        assert!(!h(&[1, 3, 2, 3]).admits_k_lefschetz(3, 1).unwrap());
        assert!(h(&[1, 3, 4, 3, 1]).admits_k_lefschetz(3, 3).unwrap());
        assert_eq!(
            h(&[1, 3, 4]).admits_k_lefschetz(4, 1).unwrap_err().class(),
            "dimension"
        );
        assert!(h(&[1]).admits_k_lefschetz(2, 2).unwrap());
    }

    #[test]
    fn obstruction_names_the_failing_difference() {
        // h is an O-sequence but Δh = (1,3,1,2) is not
        let msg = h(&[1, 4, 5, 7]).lefschetz_obstruction(4, 1).unwrap().unwrap();
        assert!(msg.contains("Δ^1h"), "{msg}");
    }

    #[test]
    fn chain_profile_examples() {
        assert_eq!(
            h(&[1, 3, 4, 3, 1]).chain_profile().unwrap().intervals,
            vec![(0, 4), (1, 3), (1, 3), (2, 2)]
        );
        assert_eq!(h(&[1, 1, 1]).chain_profile().unwrap().intervals, vec![(0, 2)]);
        assert_eq!(
            h(&[1, 3, 3, 2]).chain_profile().unwrap().intervals,
            vec![(0, 3), (1, 3), (1, 2)]
        );
        assert!(h(&[1, 3, 2, 3]).chain_profile().is_err());
    }

    #[test]
    fn nslp_enumeration_examples() {
        assert_eq!(
            enumerate_nslp_hilbert(1, 2, 5).unwrap(),
            vec![h(&[1]), h(&[1, 1]), h(&[1, 1, 1])]
        );
        let two = enumerate_nslp_hilbert(2, 4, 6).unwrap();
        for want in [&[1, 2, 3][..], &[1, 2, 3, 3], &[1, 2, 3, 2], &[1, 2, 3, 1], &[1, 2, 2, 1]] {
            assert!(two.contains(&h(want)), "missing {want:?}");
        }
        for seq in &two {
            assert!(seq.admits_k_lefschetz(2, 2).unwrap(), "{seq:?}");
        }
    }

    #[test]
    fn parse_and_display() {
        let s: OSequence = "1,3,4,3,1".parse().unwrap();
        assert_eq!(s.to_string(), "1,3,4,3,1");
        assert!("1,0,2".parse::<OSequence>().is_err());
        assert!("1,x".parse::<OSequence>().is_err());
    }
}
