//! Polynomials over a prime field, reduced Gröbner bases, Monte-Carlo generic
//! initial ideals and rank-based Lefschetz tests for arbitrary graded ideals.
//!
//! A large prime field stands in for a field of characteristic zero; every
//! randomized verdict carries its seed, modulus and sample count.

mod field;
mod generic;
mod poly;

pub use field::{is_prime, PrimeField, DEFAULT_PRIME};
pub use generic::{
    generic_lefschetz, lefschetz_with_forms, random_gin, random_invertible_matrix,
    symmetric_fixture, transform, GinReport, LefschetzMode, MonteCarlo, SymmetricKind,
};
pub use poly::Polynomial;

use crate::hilbert::OSequence;
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, TermOrder};
use crate::{Error, Result};

/// A reduced Gröbner basis: monic elements sorted by leading monomial ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    order: TermOrder,
    basis: Vec<Polynomial>,
}

fn check_compatible(gens: &[Polynomial]) -> Result<(usize, PrimeField, TermOrder)> {
    let first = gens
        .first()
        .ok_or_else(|| Error::Argument("empty generator list".into()))?;
    for g in gens {
        if g.nvars() != first.nvars() {
            return Err(Error::Dimension {
                expected: first.nvars(),
                found: g.nvars(),
            });
        }
        if g.field() != first.field() || g.order() != first.order() {
            return Err(Error::Argument(
                "generators use different fields or term orders".into(),
            ));
        }
    }
    Ok((first.nvars(), first.field(), first.order()))
}

/// Fully reduces `f` modulo the monic polynomials in `basis`.
fn reduce(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut p = f.clone();
    let mut rem: Vec<(Monomial, u64)> = Vec::new();
    while let Some((m, c)) = p.terms().first().copied() {
        let divisor = basis
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(&m)));
        match divisor {
            Some(g) => {
                let q = m.div(&g.leading_monomial().unwrap()).unwrap();
                p = p.sub_scaled(c, &q, g);
            }
            None => {
                rem.push((m, c));
                p = p.without_leading();
            }
        }
    }
    Polynomial::from_terms(f.nvars(), f.field(), f.order(), rem)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let lf = f.leading_monomial().unwrap();
    let lg = g.leading_monomial().unwrap();
    let l = lf.lcm(&lg);
    // both monic: l/lf * f - l/lg * g
    let a = Polynomial::zero(f.nvars(), f.field(), f.order()).sub_scaled(
        f.field().neg(1),
        &l.div(&lf).unwrap(),
        f,
    );
    a.sub_scaled(1, &l.div(&lg).unwrap(), g)
}

/// Buchberger's algorithm with the normal selection strategy and both
/// Buchberger criteria, followed by full inter-reduction.
pub fn buchberger(gens: &[Polynomial]) -> Result<GroebnerBasis> {
    let (nvars, _, order) = check_compatible(gens)?;
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();

    let push = |basis: &mut Vec<Polynomial>, pairs: &mut Vec<(usize, usize)>, p: Polynomial| {
        let idx = basis.len();
        basis.push(p.monic());
        pairs.extend((0..idx).map(|i| (i, idx)));
    };

    for g in gens {
        let r = reduce(g, &basis);
        if !r.is_zero() {
            push(&mut basis, &mut pairs, r);
        }
    }

    while !pairs.is_empty() {
        let lcm_of = |&(i, j): &(usize, usize), basis: &[Polynomial]| {
            basis[i]
                .leading_monomial()
                .unwrap()
                .lcm(&basis[j].leading_monomial().unwrap())
        };
        let pos = (0..pairs.len())
            .min_by(|&a, &b| {
                let la = lcm_of(&pairs[a], &basis);
                let lb = lcm_of(&pairs[b], &basis);
                order.cmp(&la, &lb).then(pairs[a].cmp(&pairs[b]))
            })
            .unwrap();
        let (i, j) = pairs.swap_remove(pos);
        let li = basis[i].leading_monomial().unwrap();
        let lj = basis[j].leading_monomial().unwrap();
        if li.is_coprime(&lj) {
            continue;
        }
        let l = li.lcm(&lj);
        let pending = |a: usize, b: usize| {
            let key = (a.min(b), a.max(b));
            pairs.contains(&key)
        };
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&l)
                && !pending(i, k)
                && !pending(j, k)
        });
        if chain {
            continue;
        }
        let r = reduce(&s_polynomial(&basis[i], &basis[j]), &basis);
        if !r.is_zero() {
            push(&mut basis, &mut pairs, r);
        }
    }

    Ok(GroebnerBasis {
        nvars,
        order,
        basis: interreduce(basis),
    })
}

fn interreduce(mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    basis.sort_by(|a, b| {
        let (la, lb) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
        a.order().cmp(&la, &lb)
    });
    let mut minimal: Vec<Polynomial> = Vec::new();
    for p in basis {
        let lm = p.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|q| q.leading_monomial().unwrap().divides(&lm))
        {
            minimal.push(p);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, q)| q.clone())
            .collect();
        let head = Polynomial::from_terms(
            minimal[i].nvars(),
            minimal[i].field(),
            minimal[i].order(),
            minimal[i].terms()[..1].iter().copied(),
        );
        let tail = minimal[i].sub(&head);
        reduced.push(head.add(&reduce(&tail, &others)).monic());
    }
    reduced
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn polynomials(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        reduce(f, &self.basis)
    }

    /// Ideal membership: the normal form vanishes.
    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// The minimal generators of the ideal of leading monomials.
    pub fn initial_ideal(&self) -> Result<MonomialIdeal> {
        MonomialIdeal::minimalize(
            self.nvars,
            self.basis.iter().filter_map(Polynomial::leading_monomial),
        )
    }
}

/// Hilbert function of `R / (gens)` read off the grevlex initial ideal.
pub fn quotient_hilbert(gens: &[Polynomial]) -> Result<OSequence> {
    let gens: Vec<Polynomial> = gens.iter().map(|g| g.with_order(TermOrder::Grevlex)).collect();
    buchberger(&gens)?.initial_ideal()?.hilbert_function()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomials;

    fn polys(text: &str, n: usize) -> Vec<Polynomial> {
        parse_polynomials(text, n, PrimeField::default()).unwrap()
    }

    fn gb_strings(text: &str, n: usize) -> Vec<String> {
        let mut v: Vec<String> = buchberger(&polys(text, n))
            .unwrap()
            .polynomials()
            .iter()
            .map(|p| p.to_string())
            .collect();
        v.sort();
        v
    }

    #[test]
    fn monomial_input_is_its_own_basis() {
        assert_eq!(gb_strings("x1^3, x2^3, x3^3", 3), ["x1^3", "x2^3", "x3^3"]);
    }

    #[test]
    fn one_s_pair_example() {
        assert_eq!(
            gb_strings("x1^2, x1*x2 + x2^2", 2),
            ["x1*x2 + x2^2", "x1^2", "x2^3"]
        );
        let gb = buchberger(&polys("x1^2, x1*x2 + x2^2", 2)).unwrap();
        assert_eq!(gb.initial_ideal().unwrap().to_string(), "x1^2, x1*x2, x2^3");
    }

    #[test]
    fn linear_reduction_example() {
        assert_eq!(gb_strings("x1 - x2, x2^2", 2), ["x1 - x2", "x2^2"]);
        let gb = buchberger(&polys("x1 - x2, x2^2", 2)).unwrap();
        assert_eq!(gb.initial_ideal().unwrap().to_string(), "x1, x2^2");
    }

    #[test]
    fn membership_via_normal_form() {
        let gb = buchberger(&polys("x1^2, x1*x2 + x2^2", 2)).unwrap();
        assert!(gb.contains(&polys("x2^3", 2)[0]));
        assert!(gb.contains(&polys("x1^2*x2 - 5*x1*x2^2 - 5*x2^3", 2)[0]));
        assert!(!gb.contains(&polys("x1*x2", 2)[0]));
    }

    #[test]
    fn generator_order_does_not_matter() {
        let a = buchberger(&polys("x1^2 + x2*x3, x2^2 - x1*x3, x3^2 + x1*x2", 3)).unwrap();
        let b = buchberger(&polys("x3^2 + x1*x2, x1^2 + x2*x3, x2^2 - x1*x3", 3)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn quotient_hilbert_examples() {
        assert_eq!(quotient_hilbert(&polys("x1^2, x2^2, x3^2", 3)).unwrap().values(), &[1, 3, 3, 1]);
        assert_eq!(
            quotient_hilbert(&polys("x1^3, x2^3, x3^3", 3)).unwrap().values(),
            &[1, 3, 6, 7, 6, 3, 1]
        );
        assert_eq!(quotient_hilbert(&polys("x1, x2, x3", 3)).unwrap().values(), &[1]);
        assert_eq!(
            quotient_hilbert(&polys("x1^2, x2^2", 3)).unwrap_err().class(),
            "non-artinian"
        );
    }
}
