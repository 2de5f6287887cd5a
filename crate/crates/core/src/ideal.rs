//! Monomial ideals: membership, standard monomials, Hilbert functions and the
//! stable / strongly stable / almost revlex hierarchy.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::hilbert::OSequence;
use crate::monomial::{check_nvars, Monomial, TermOrder};
use crate::{Error, Result};

/// A monomial ideal stored by its minimal generators.
///
/// Generators are kept in canonical order: degree ascending, then grevlex
/// descending. Two ideals are equal exactly when their generator lists are.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<Monomial>,
}

/// Membership of an ideal in the stability classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub stable: bool,
    pub strongly_stable: bool,
    /// Identified with strong stability (characteristic zero).
    pub borel_fixed: bool,
    pub revlex: bool,
    pub almost_revlex: bool,
}

fn canonical_cmp(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| TermOrder::Grevlex.cmp(b, a))
}

impl MonomialIdeal {
    /// Reduces `gens` to the minimal generating set of the ideal they generate.
    pub fn minimalize<I>(nvars: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        check_nvars(nvars)?;
        let mut all: Vec<Monomial> = Vec::new();
        for g in gens {
            if g.nvars() != nvars {
                return Err(Error::Dimension {
                    expected: nvars,
                    found: g.nvars(),
                });
            }
            all.push(g);
        }
        all.sort_by(canonical_cmp);
        all.dedup();
        // a divisor always has degree at most that of its multiple
        let mut minimal: Vec<Monomial> = Vec::with_capacity(all.len());
        for g in all {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        Ok(MonomialIdeal {
            nvars,
            generators: minimal,
        })
    }

    pub fn zero(nvars: usize) -> Result<Self> {
        Self::minimalize(nvars, [])
    }

    pub fn unit(nvars: usize) -> Result<Self> {
        check_nvars(nvars)?;
        Self::minimalize(nvars, [Monomial::one(nvars)])
    }

    /// The homogeneous maximal ideal `(x1, ..., xn)`.
    pub fn maximal(nvars: usize) -> Result<Self> {
        check_nvars(nvars)?;
        Self::minimalize(nvars, (0..nvars).map(|i| Monomial::var(nvars, i)))
    }

    /// `(x1, ..., xn)^d`.
    pub fn maximal_power(nvars: usize, d: u32) -> Result<Self> {
        check_nvars(nvars)?;
        Self::minimalize(nvars, Monomial::all_of_degree(nvars, d))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<Self> {
        if self.nvars != other.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Self::minimalize(
            self.nvars,
            self.generators.iter().chain(&other.generators).copied(),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Monomial::is_one)
    }

    pub fn max_generator_degree(&self) -> Option<u32> {
        self.generators.iter().map(Monomial::degree).max()
    }

    /// Membership without the dimension check.
    pub(crate) fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    pub fn is_member(&self, m: &Monomial) -> Result<bool> {
        if m.nvars() != self.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                found: m.nvars(),
            });
        }
        Ok(self.contains(m))
    }

    /// True iff the ideal contains a pure power of every variable.
    pub fn is_artinian(&self) -> bool {
        (0..self.nvars).all(|i| {
            self.generators
                .iter()
                .any(|g| g.max_var() == Some(i) && g.exponent(i) == g.degree())
                || self.is_unit()
        })
    }

    fn require_artinian(&self) -> Result<()> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        if !self.is_artinian() {
            return Err(Error::NonArtinian(format!(
                "({}) has infinitely many standard monomials",
                self
            )));
        }
        Ok(())
    }

    /// Standard monomials grouped by degree; entry `d` is grevlex descending.
    pub fn standard_monomials_by_degree(&self) -> Result<Vec<Vec<Monomial>>> {
        self.require_artinian()?;
        let mut layers = vec![vec![Monomial::one(self.nvars)]];
        loop {
            let prev = layers.last().unwrap();
            let mut next: Vec<Monomial> = prev
                .iter()
                .flat_map(|m| (0..self.nvars).map(move |i| m.times_var(i)))
                .filter(|w| !self.contains(w))
                .collect();
            if next.is_empty() {
                break;
            }
            next.sort_by(|a, b| TermOrder::Grevlex.cmp(b, a));
            next.dedup();
            layers.push(next);
        }
        Ok(layers)
    }

    /// The finite set of monomials outside the ideal, degree ascending.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        Ok(self
            .standard_monomials_by_degree()?
            .into_iter()
            .flatten()
            .collect())
    }

    pub fn hilbert_function(&self) -> Result<OSequence> {
        let layers = self.standard_monomials_by_degree()?;
        Ok(OSequence::from_values(
            layers.iter().map(|l| l.len() as u64).collect(),
        ))
    }

    /// Degree of the highest nonzero component of the quotient.
    pub fn socle_degree(&self) -> Result<u32> {
        Ok(self.standard_monomials_by_degree()?.len() as u32 - 1)
    }

    pub fn is_stable(&self) -> bool {
        self.generators.iter().all(|u| match u.max_var() {
            None => true,
            Some(m) => {
                let base = u.div_var(m).unwrap();
                (0..m).all(|i| self.contains(&base.times_var(i)))
            }
        })
    }

    pub fn is_strongly_stable(&self) -> bool {
        self.generators.iter().all(|u| {
            (0..self.nvars).all(|j| match u.div_var(j) {
                None => true,
                Some(base) => (0..j).all(|i| self.contains(&base.times_var(i))),
            })
        })
    }

    /// Every monomial of the same degree that is grevlex-larger than a
    /// minimal generator lies in the ideal.
    pub fn is_almost_revlex(&self) -> bool {
        self.generators.iter().all(|u| {
            Monomial::all_of_degree(self.nvars, u.degree())
                .iter()
                .take_while(|v| *v > u)
                .all(|v| self.contains(v))
        })
    }

    /// Every degree component is a grevlex top segment.
    ///
    /// Artinian ideals are checked exactly (through the degree where every
    /// monomial is a member). Other ideals are checked through one degree past
    /// the largest generator degree.
    pub fn is_revlex(&self) -> bool {
        let top = if self.is_unit() {
            return true;
        } else if self.is_artinian() {
            self.socle_degree().map(|c| c + 1).unwrap_or(0)
        } else {
            match self.max_generator_degree() {
                None => return true,
                Some(d) => d + 1,
            }
        };
        (0..=top).all(|d| {
            let mut seen_out = false;
            for v in Monomial::all_of_degree(self.nvars, d) {
                let inside = self.contains(&v);
                if inside && seen_out {
                    return false;
                }
                seen_out |= !inside;
            }
            true
        })
    }

    pub fn classify_stability(&self) -> StabilityReport {
        let strongly_stable = self.is_strongly_stable();
        StabilityReport {
            stable: self.is_stable(),
            strongly_stable,
            borel_fixed: strongly_stable,
            revlex: self.is_revlex(),
            almost_revlex: self.is_almost_revlex(),
        }
    }

    /// `I ∩ K[x1, ..., x_{n-drop}]`, as an ideal of the smaller ring.
    pub fn intersect_subring(&self, drop: usize) -> Result<Self> {
        if drop == 0 || drop >= self.nvars {
            return Err(Error::Argument(format!(
                "drop must be in 1..{}, got {drop}",
                self.nvars
            )));
        }
        Ok(self.restrict_unchecked(self.nvars - drop))
    }

    pub(crate) fn restrict_unchecked(&self, nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            generators: self
                .generators
                .iter()
                .filter_map(|g| g.restrict(nvars))
                .collect(),
        }
    }

    /// Embeds the ideal into a ring with more variables (same generators).
    pub fn extend(&self, nvars: usize) -> Result<Self> {
        check_nvars(nvars)?;
        if nvars < self.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                found: nvars,
            });
        }
        Ok(MonomialIdeal {
            nvars,
            generators: self.generators.iter().map(|g| g.extend(nvars)).collect(),
        })
    }

    /// Tests `m I : x_n = I`.
    pub fn is_m_full_last(&self) -> bool {
        let last = self.nvars - 1;
        // generators of m I : x_n are (x_i g) / gcd(x_i g, x_n)
        self.generators.iter().all(|g| {
            (0..self.nvars).all(|i| {
                let w = g.times_var(i);
                let q = w.div_var(last).unwrap_or(w);
                self.contains(&q)
            })
        })
    }

    /// The monomial ideal whose standard monomials are exactly `standard`.
    ///
    /// `standard` must be a finite, nonempty set closed under division.
    pub fn from_standard_set(nvars: usize, standard: &HashSet<Monomial>) -> Result<Self> {
        check_nvars(nvars)?;
        if standard.is_empty() {
            return Self::unit(nvars);
        }
        let mut gens = Vec::new();
        for s in standard {
            if s.nvars() != nvars {
                return Err(Error::Dimension {
                    expected: nvars,
                    found: s.nvars(),
                });
            }
            for j in 0..nvars {
                if let Some(d) = s.div_var(j) {
                    if !standard.contains(&d) {
                        return Err(Error::Argument(format!(
                            "{s} is listed as standard but its divisor {d} is not"
                        )));
                    }
                }
            }
            for i in 0..nvars {
                let w = s.times_var(i);
                if standard.contains(&w) {
                    continue;
                }
                let minimal = (0..nvars)
                    .filter_map(|j| w.div_var(j))
                    .all(|d| standard.contains(&d));
                if minimal {
                    gens.push(w);
                }
            }
        }
        Self::minimalize(nvars, gens)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return f.write_str("0");
        }
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self}) in {} vars", self.nvars)
    }
}
