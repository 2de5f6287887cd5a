//! Exponent-vector monomials and the graded term orders used throughout.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// Largest supported number of variables.
pub const MAX_VARS: usize = 16;
/// Largest supported total degree of a monomial given as input.
pub const MAX_DEGREE: u32 = 64;

/// A monomial `x1^e1 * ... * xn^en` in a fixed number of variables.
///
/// Exponents live in a fixed-size inline array so monomials are `Copy` and
/// never allocate; only the first `nvars` slots are meaningful.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    nvars: u8,
    deg: u16,
}

/// Graded term orders: both compare total degree first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TermOrder {
    Grevlex,
    Lex,
}

impl TermOrder {
    /// Compares two monomials of the same ambient ring.
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars, b.nvars);
        match a.deg.cmp(&b.deg) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let n = a.nvars as usize;
        match self {
            TermOrder::Grevlex => {
                for i in (0..n).rev() {
                    match a.exps[i].cmp(&b.exps[i]) {
                        Ordering::Equal => continue,
                        // smaller exponent in the last differing variable wins
                        ord => return ord.reverse(),
                    }
                }
                Ordering::Equal
            }
            TermOrder::Lex => {
                for i in 0..n {
                    match a.exps[i].cmp(&b.exps[i]) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// Checked comparison under `order`.
pub fn compare(order: TermOrder, a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.nvars != b.nvars {
        return Err(Error::Dimension {
            expected: a.nvars as usize,
            found: b.nvars as usize,
        });
    }
    Ok(order.cmp(a, b))
}

pub(crate) fn check_nvars(nvars: usize) -> Result<()> {
    if nvars == 0 || nvars > MAX_VARS {
        return Err(Error::Bounds(format!(
            "variable count must be in 1..={MAX_VARS}, got {nvars}"
        )));
    }
    Ok(())
}

impl Monomial {
    /// Builds a monomial from its exponent vector, enforcing the configured bounds.
    pub fn new(exponents: &[u32]) -> Result<Self> {
        check_nvars(exponents.len())?;
        let total: u64 = exponents.iter().map(|&e| e as u64).sum();
        if total > MAX_DEGREE as u64 {
            return Err(Error::Bounds(format!(
                "monomial degree {total} exceeds {MAX_DEGREE}"
            )));
        }
        let mut exps = [0u16; MAX_VARS];
        for (slot, &e) in exps.iter_mut().zip(exponents) {
            *slot = e as u16;
        }
        Ok(Monomial {
            exps,
            nvars: exponents.len() as u8,
            deg: total as u16,
        })
    }

    /// The unit monomial `1` in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS);
        Monomial {
            exps: [0; MAX_VARS],
            nvars: nvars as u8,
            deg: 0,
        }
    }

    /// The variable with zero-based index `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn degree(&self) -> u32 {
        self.deg as u32
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Exponent of the last variable.
    pub fn last_exponent(&self) -> u32 {
        self.exps[self.nvars as usize - 1] as u32
    }

    /// Zero-based index of the largest variable dividing the monomial.
    pub fn max_var(&self) -> Option<usize> {
        (0..self.nvars as usize).rev().find(|&i| self.exps[i] > 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars, other.nvars);
        self.deg <= other.deg
            && self.exps[..self.nvars as usize]
                .iter()
                .zip(&other.exps[..self.nvars as usize])
                .all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = *self;
        for i in 0..self.nvars as usize {
            out.exps[i] += other.exps[i];
        }
        out.deg += other.deg;
        out
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut out = *self;
        for i in 0..self.nvars as usize {
            out.exps[i] -= other.exps[i];
        }
        out.deg -= other.deg;
        Some(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        let mut deg = 0;
        for i in 0..self.nvars as usize {
            out.exps[i] = self.exps[i].max(other.exps[i]);
            deg += out.exps[i];
        }
        out.deg = deg;
        out
    }

    /// True when the two monomials share no variable.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..self.nvars as usize).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    pub fn times_var(&self, i: usize) -> Monomial {
        self.times_var_pow(i, 1)
    }

    pub fn times_var_pow(&self, i: usize, e: u32) -> Monomial {
        let mut out = *self;
        out.exps[i] += e as u16;
        out.deg += e as u16;
        out
    }

    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut out = *self;
        out.exps[i] -= 1;
        out.deg -= 1;
        Some(out)
    }

    /// Drops the trailing variables, keeping the first `nvars`.
    ///
    /// Returns `None` when a dropped variable divides the monomial.
    pub fn restrict(&self, nvars: usize) -> Option<Monomial> {
        if self.exps[nvars..self.nvars as usize].iter().any(|&e| e > 0) {
            return None;
        }
        let mut out = *self;
        out.nvars = nvars as u8;
        Some(out)
    }

    /// Embeds the monomial into a ring with more variables.
    pub fn extend(&self, nvars: usize) -> Monomial {
        assert!(nvars >= self.nvars as usize && nvars <= MAX_VARS);
        let mut out = *self;
        out.nvars = nvars as u8;
        out
    }

    /// Every monomial of degree `d` in `nvars` variables, grevlex descending.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = Monomial::one(nvars);
        fill_degree(&mut out, &mut cur, 0, d);
        out.sort_by(|a, b| TermOrder::Grevlex.cmp(b, a));
        out
    }
}

fn fill_degree(out: &mut Vec<Monomial>, cur: &mut Monomial, var: usize, remaining: u32) {
    let n = cur.nvars as usize;
    if var + 1 == n {
        cur.exps[var] = remaining as u16;
        cur.deg = cur.exps[..n].iter().sum();
        out.push(*cur);
        cur.exps[var] = 0;
        return;
    }
    for e in 0..=remaining {
        cur.exps[var] = e as u16;
        fill_degree(out, cur, var + 1, remaining - e);
    }
    cur.exps[var] = 0;
}

impl Ord for Monomial {
    /// Graded reverse lexicographic order.
    fn cmp(&self, other: &Self) -> Ordering {
        TermOrder::Grevlex.cmp(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
