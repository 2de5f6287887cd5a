use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

use super::field::PrimeField;
use crate::monomial::{Monomial, TermOrder};

/// Sparse polynomial over a prime field.
///
/// Terms are stored with nonzero coefficients, sorted descending in the
/// polynomial's term order, so the leading term is `terms[0]`.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    field: PrimeField,
    order: TermOrder,
    terms: Vec<(Monomial, u64)>,
}

impl Polynomial {
    pub fn zero(nvars: usize, field: PrimeField, order: TermOrder) -> Self {
        Polynomial {
            nvars,
            field,
            order,
            terms: Vec::new(),
        }
    }

    /// Sums like terms and discards zero coefficients.
    pub fn from_terms<I>(nvars: usize, field: PrimeField, order: TermOrder, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, u64)>,
    {
        let mut acc: HashMap<Monomial, u64> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            let slot = acc.entry(m).or_insert(0);
            *slot = field.add(*slot, c % field.modulus());
        }
        let mut terms: Vec<(Monomial, u64)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            nvars,
            field,
            order,
            terms,
        }
    }

    pub fn monomial(m: Monomial, field: PrimeField, order: TermOrder) -> Self {
        Polynomial {
            nvars: m.nvars(),
            field,
            order,
            terms: vec![(m, 1)],
        }
    }

    /// The variable `x_{i+1}`.
    pub fn var(nvars: usize, i: usize, field: PrimeField, order: TermOrder) -> Self {
        Self::monomial(Monomial::var(nvars, i), field, order)
    }

    /// `Σ coeffs[i] * x_{i+1}`.
    pub fn linear_form(coeffs: &[u64], field: PrimeField, order: TermOrder) -> Self {
        let n = coeffs.len();
        Self::from_terms(
            n,
            field,
            order,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (Monomial::var(n, i), c)),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn terms(&self) -> &[(Monomial, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    pub fn leading_coeff(&self) -> Option<u64> {
        self.terms.first().map(|t| t.1)
    }

    /// A single term with coefficient one.
    pub fn as_monomial(&self) -> Option<Monomial> {
        match self.terms.as_slice() {
            [(m, 1)] => Some(*m),
            _ => None,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms
            .windows(2)
            .all(|w| w[0].0.degree() == w[1].0.degree())
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    /// Re-sorts the terms for another term order.
    pub fn with_order(&self, order: TermOrder) -> Self {
        let mut out = self.clone();
        out.order = order;
        out.terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        out
    }

    pub(crate) fn without_leading(&self) -> Self {
        Polynomial {
            nvars: self.nvars,
            field: self.field,
            order: self.order,
            terms: self.terms[1..].to_vec(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(self.field.inv(c)),
        }
    }

    pub fn scale(&self, c: u64) -> Self {
        if c == 0 {
            return Self::zero(self.nvars, self.field, self.order);
        }
        let f = self.field;
        Polynomial {
            terms: self.terms.iter().map(|&(m, a)| (m, f.mul(a, c))).collect(),
            ..self.clone()
        }
    }

    /// `self - c * m * g`, merging the sorted term lists.
    pub fn sub_scaled(&self, c: u64, m: &Monomial, g: &Polynomial) -> Self {
        let f = self.field;
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g
            .terms
            .iter()
            .map(|&(t, k)| (t.mul(m), f.neg(f.mul(k, c))))
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(*a.next().unwrap()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match self.order.cmp(&x.0, &y.0) {
                    Ordering::Greater => out.push(*a.next().unwrap()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let s = f.add(x.1, y.1);
                        let m = x.0;
                        a.next();
                        b.next();
                        if s != 0 {
                            out.push((m, s));
                        }
                    }
                },
            }
        }
        Polynomial {
            nvars: self.nvars,
            field: self.field,
            order: self.order,
            terms: out,
        }
    }

    pub fn add(&self, other: &Polynomial) -> Self {
        let one = Monomial::one(self.nvars);
        self.sub_scaled(self.field.neg(1), &one, other)
    }

    pub fn sub(&self, other: &Polynomial) -> Self {
        let one = Monomial::one(self.nvars);
        self.sub_scaled(1, &one, other)
    }

    pub fn mul(&self, other: &Polynomial) -> Self {
        let f = self.field;
        Self::from_terms(
            self.nvars,
            f,
            self.order,
            self.terms.iter().flat_map(|&(m, a)| {
                other
                    .terms
                    .iter()
                    .map(move |&(n, b)| (m.mul(&n), f.mul(a, b)))
            }),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::monomial(Monomial::one(self.nvars), self.field, self.order);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let s = self.field.signed(*c);
            let mag = s.unsigned_abs();
            match (i, s < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
