//! x_n-chain decompositions and the combinatorial strong / weak Lefschetz
//! conditions with respect to the last variables.

use std::fmt;

use serde::Serialize;

use crate::ideal::MonomialIdeal;
use crate::{Error, Result};
use crate::monomial::Monomial;

/// A maximal run `base, base*x_n, ..., base*x_n^(length-1)` of standard monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct XnChain {
    pub base: Monomial,
    #[serde(rename = "start")]
    pub start_degree: usize,
    pub length: usize,
}

impl XnChain {
    /// Degree of the last member.
    pub fn end_degree(&self) -> usize {
        self.start_degree + self.length - 1
    }

    pub fn members(&self) -> Vec<Monomial> {
        let last = self.base.nvars() - 1;
        (0..self.length)
            .map(|k| self.base.times_var_pow(last, k as u32))
            .collect()
    }

    /// The first multiple of `base` by a power of x_n that lies in the ideal.
    pub fn end_monomial(&self) -> Monomial {
        self.base
            .times_var_pow(self.base.nvars() - 1, self.length as u32)
    }
}

/// The partition of the standard monomials into x_n-chains.
///
/// Chains are sorted by start degree ascending, then base grevlex descending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainDecomposition {
    pub chains: Vec<XnChain>,
    #[serde(skip)]
    pub ideal: MonomialIdeal,
}

impl ChainDecomposition {
    /// `(start, end)` degree intervals, sorted.
    pub fn intervals(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> = self
            .chains
            .iter()
            .map(|c| (c.start_degree, c.end_degree()))
            .collect();
        v.sort();
        v
    }

    /// Rows of chain members laid out as in the usual figure: the chain
    /// starting highest comes first and each member sits in its degree column.
    pub fn rows(&self) -> Vec<&XnChain> {
        let mut rows: Vec<&XnChain> = self.chains.iter().collect();
        // stable sort keeps grevlex-descending order within a start degree
        rows.sort_by_key(|c| std::cmp::Reverse(c.start_degree));
        rows
    }
}

impl fmt::Display for ChainDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top = self.chains.iter().map(XnChain::end_degree).max().unwrap_or(0);
        let mut width = vec![0usize; top + 1];
        for c in &self.chains {
            for (k, m) in c.members().iter().enumerate() {
                let w = &mut width[c.start_degree + k];
                *w = (*w).max(m.to_string().len());
            }
        }
        for (r, c) in self.rows().into_iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let mut line = String::new();
            for w in width.iter().take(c.start_degree) {
                line.push_str(&" ".repeat(w + 2));
            }
            for (k, m) in c.members().iter().enumerate() {
                let s = m.to_string();
                line.push_str(&s);
                line.push_str(&" ".repeat(width[c.start_degree + k] - s.len() + 2));
            }
            f.write_str(line.trim_end())?;
        }
        Ok(())
    }
}

/// Verdicts of the strong and weak Lefschetz conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LefschetzVerdict {
    pub sl: bool,
    pub wl: bool,
}

/// Strong (all powers) or weak (first power) property.
pub use crate::groebner::LefschetzMode;

/// Decomposes the standard monomials of an Artinian ideal into x_n-chains.
pub fn chain_decomposition(ideal: &MonomialIdeal) -> Result<ChainDecomposition> {
    let standard = ideal.standard_monomials_by_degree()?;
    let last = ideal.nvars() - 1;
    let mut chains = Vec::new();
    for (d, layer) in standard.iter().enumerate() {
        // layers are already grevlex descending
        for base in layer.iter().filter(|m| m.exponent(last) == 0) {
            let mut length = 1;
            while !ideal.contains(&base.times_var_pow(last, length as u32)) {
                length += 1;
            }
            chains.push(XnChain {
                base: *base,
                start_degree: d,
                length,
            });
        }
    }
    Ok(ChainDecomposition {
        chains,
        ideal: ideal.clone(),
    })
}

fn verdict_of(decomposition: &ChainDecomposition) -> Result<LefschetzVerdict> {
    let h = decomposition.ideal.hilbert_function()?;
    let ints = decomposition.intervals();
    // intervals are sorted by start; each start group must end no later than
    // every chain that started strictly earlier
    let mut sl = true;
    let mut earliest_end = usize::MAX;
    for group in ints.chunk_by(|a, b| a.0 == b.0) {
        let group_max = group.iter().map(|c| c.1).max().unwrap();
        sl &= group_max <= earliest_end;
        earliest_end = earliest_end.min(group.iter().map(|c| c.1).min().unwrap());
    }
    let wl = h.is_unimodal() && {
        let u1 = h.peak();
        let u2 = h.first_drop();
        ints.iter().all(|&(s, e)| s <= u1 && e + 1 >= u2)
    };
    Ok(LefschetzVerdict { sl, wl })
}

/// The SL and WL conditions for `(R/I, x_n)`.
///
/// For monomial ideals these are equivalent to the strong and weak Lefschetz
/// property with the linear form x_n. A non-unimodal Hilbert function gives
/// `wl = false`.
pub fn lefschetz_conditions(ideal: &MonomialIdeal) -> Result<LefschetzVerdict> {
    verdict_of(&chain_decomposition(ideal)?)
}

/// Checks the SL (or WL) condition for `I`, `I ∩ K[x1..x_{n-1}]`, and so on,
/// `k` times.
///
/// This certifies the k-SLP (k-WLP) with the forms `x_n, x_{n-1}, ...`. It is
/// exact for Borel-fixed ideals and a sufficient condition in general.
pub fn k_lefschetz_last_vars(ideal: &MonomialIdeal, k: usize, mode: LefschetzMode) -> Result<bool> {
    let n = ideal.nvars();
    if k == 0 || k > n {
        return Err(Error::Argument(format!("k must be in 1..={n}, got {k}")));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    for t in 0..k {
        let level = if t == 0 {
            ideal.clone()
        } else {
            ideal.intersect_subring(t)?
        };
        let v = lefschetz_conditions(&level)?;
        let ok = match mode {
            LefschetzMode::Strong => v.sl,
            LefschetzMode::Weak => v.wl,
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For an m-full ideal, whether every chain `u, ..., u*x_n^(s-1)` ends just
/// below a minimal generator `u*x_n^s`.
pub fn chain_end_generators(ideal: &MonomialIdeal) -> Result<bool> {
    if !ideal.is_m_full_last() {
        return Err(Error::Hypothesis(format!(
            "({ideal}) is not m-full with respect to x{}",
            ideal.nvars()
        )));
    }
    let decomposition = chain_decomposition(ideal)?;
    Ok(decomposition
        .chains
        .iter()
        .all(|c| ideal.generators().contains(&c.end_monomial())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_monomial_ideal;

    fn ideal(text: &str, n: usize) -> MonomialIdeal {
        parse_monomial_ideal(text, n).unwrap()
    }

    fn rows(d: &ChainDecomposition) -> Vec<Vec<String>> {
        d.rows()
            .iter()
            .map(|c| c.members().iter().map(|m| m.to_string()).collect())
            .collect()
    }

    #[test]
    fn maximal_ideal_has_one_chain() {
        let m = MonomialIdeal::maximal(4).unwrap();
        let d = chain_decomposition(&m).unwrap();
        assert_eq!(d.chains.len(), 1);
        assert_eq!(d.chains[0].length, 1);
        assert_eq!(lefschetz_conditions(&m).unwrap(), LefschetzVerdict { sl: true, wl: true });
        assert!(chain_end_generators(&m).unwrap());
        assert!(k_lefschetz_last_vars(&m, 4, LefschetzMode::Strong).unwrap());
    }

    #[test]
    fn figure_rows() {
        let i = ideal("x1^2, x1*x2, x2^3, x1*x3^2, x2^2*x3^2, x2*x3^3, x3^5", 3);
        let d = chain_decomposition(&i).unwrap();
        assert_eq!(
            rows(&d),
            vec![
                vec!["x2^2", "x2^2*x3"],
                vec!["x1", "x1*x3"],
                vec!["x2", "x2*x3", "x2*x3^2"],
                vec!["1", "x3", "x3^2", "x3^3", "x3^4"],
            ]
        );
        let text = d.to_string();
        assert_eq!(text.lines().count(), 4);
        assert!(text.lines().last().unwrap().starts_with("1 "));
        assert!(text.lines().next().unwrap().starts_with(' '));
    }

    #[test]
    fn non_unimodal_fails_weak() {
        let h: crate::OSequence = "1,3,6,5,6".parse().unwrap();
        let i = crate::construct::lex_ideal_from_hilbert(&h, 3).unwrap();
        assert_eq!(i.hilbert_function().unwrap(), h);
        let v = lefschetz_conditions(&i).unwrap();
        assert!(!v.wl && !v.sl);
    }

    #[test]
    fn k_range_is_checked() {
        let m = MonomialIdeal::maximal(2).unwrap();
        assert_eq!(
            k_lefschetz_last_vars(&m, 3, LefschetzMode::Weak).unwrap_err().class(),
            "argument"
        );
    }
}
