use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::field::PrimeField;
use super::poly::Polynomial;
use super::{buchberger, check_compatible, quotient_hilbert};
use crate::hilbert::OSequence;
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, TermOrder};
use crate::{Error, Result};

// Lefschetz trials draw from a separate stream range so they never reuse gin samples.
const LEFSCHETZ_STREAM_BASE: u64 = 1 << 40;

/// Seed and sample count for a randomized computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MonteCarlo {
    pub seed: u64,
    pub samples: usize,
}

impl Default for MonteCarlo {
    fn default() -> Self {
        MonteCarlo {
            seed: 0,
            samples: 5,
        }
    }
}

fn sample_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn random_element<R: Rng>(field: PrimeField, rng: &mut R) -> u64 {
    rng.gen_range(0..field.modulus())
}

fn is_invertible(matrix: &[Vec<u64>], field: PrimeField) -> bool {
    let n = matrix.len();
    let mut a: Vec<Vec<u64>> = matrix.to_vec();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| a[r][col] != 0) else {
            return false;
        };
        a.swap(col, pivot);
        let inv = field.inv(a[col][col]);
        for r in col + 1..n {
            if a[r][col] == 0 {
                continue;
            }
            let factor = field.mul(a[r][col], inv);
            for c in col..n {
                let v = field.mul(factor, a[col][c]);
                a[r][c] = field.sub(a[r][c], v);
            }
        }
    }
    true
}

/// A uniformly random invertible `n x n` matrix over `field` (rejection sampling).
pub fn random_invertible_matrix<R: Rng>(n: usize, field: PrimeField, rng: &mut R) -> Vec<Vec<u64>> {
    loop {
        let m: Vec<Vec<u64>> = (0..n)
            .map(|_| (0..n).map(|_| random_element(field, rng)).collect())
            .collect();
        if is_invertible(&m, field) {
            return m;
        }
    }
}

/// Applies the linear change of variables `x_j -> Σ_i matrix[i][j] x_i`.
pub fn transform(f: &Polynomial, matrix: &[Vec<u64>]) -> Result<Polynomial> {
    let n = f.nvars();
    if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
        return Err(Error::Dimension {
            expected: n,
            found: matrix.len(),
        });
    }
    let (field, order) = (f.field(), f.order());
    let images: Vec<Polynomial> = (0..n)
        .map(|j| {
            let column: Vec<u64> = (0..n).map(|i| matrix[i][j]).collect();
            Polynomial::linear_form(&column, field, order)
        })
        .collect();
    let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
    let mut out = Polynomial::zero(n, field, order);
    for &(m, c) in f.terms() {
        let mut term = Polynomial::monomial(Monomial::one(n), field, order).scale(c);
        for (j, image) in images.iter().enumerate() {
            let e = m.exponent(j);
            if e == 0 {
                continue;
            }
            let p = powers.entry((j, e)).or_insert_with(|| image.pow(e));
            term = term.mul(p);
        }
        out = out.add(&term);
    }
    Ok(out)
}

/// Outcome of a Monte-Carlo generic initial ideal computation.
#[derive(Clone, Debug, Serialize)]
pub struct GinReport {
    /// The common initial ideal, present only when every sample agreed.
    pub candidate: Option<MonomialIdeal>,
    pub samples: usize,
    /// Number of samples whose initial ideal equals the most frequent one.
    pub agreements: usize,
    pub seed: u64,
    pub prime: u64,
    /// Hilbert function of the input quotient.
    pub hilbert: OSequence,
    /// Every sample reproduced the input Hilbert function.
    pub hilbert_invariant: bool,
}

/// Grevlex initial ideals of `samples` random linear coordinate changes of `gens`.
///
/// Sample `s` uses its own ChaCha stream of `seed`, so the report does not
/// depend on how rayon schedules the samples.
pub fn random_gin(gens: &[Polynomial], mc: &MonteCarlo) -> Result<GinReport> {
    let (n, field, _) = check_compatible(gens)?;
    if mc.samples == 0 {
        return Err(Error::Argument("at least one sample is required".into()));
    }
    let gens: Vec<Polynomial> = gens.iter().map(|g| g.with_order(TermOrder::Grevlex)).collect();
    let hilbert = quotient_hilbert(&gens)?;
    let results: Vec<Result<(MonomialIdeal, OSequence)>> = (0..mc.samples as u64)
        .into_par_iter()
        .map(|s| {
            let mut rng = sample_rng(mc.seed, s);
            let g = random_invertible_matrix(n, field, &mut rng);
            let moved = gens
                .iter()
                .map(|f| transform(f, &g))
                .collect::<Result<Vec<_>>>()?;
            let ini = buchberger(&moved)?.initial_ideal()?;
            let h = ini.hilbert_function()?;
            Ok((ini, h))
        })
        .collect();
    let mut ideals = Vec::with_capacity(results.len());
    let mut hilbert_invariant = true;
    for r in results {
        let (ini, h) = r?;
        hilbert_invariant &= h == hilbert;
        ideals.push(ini);
    }
    let mut counts: Vec<(&MonomialIdeal, usize)> = Vec::new();
    for ideal in &ideals {
        match counts.iter_mut().find(|(i, _)| *i == ideal) {
            Some(entry) => entry.1 += 1,
            None => counts.push((ideal, 1)),
        }
    }
    // ties go to the earliest sample
    let (best, agreements) = counts
        .iter()
        .fold((counts[0].0, counts[0].1), |acc, &(i, c)| if c > acc.1 { (i, c) } else { acc });
    let candidate = (agreements == mc.samples).then(|| best.clone());
    Ok(GinReport {
        candidate,
        samples: mc.samples,
        agreements,
        seed: mc.seed,
        prime: field.modulus(),
        hilbert,
        hilbert_invariant,
    })
}

/// Strong (all powers) or weak (first power) Lefschetz test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LefschetzMode {
    Strong,
    Weak,
}

/// Hilbert function expected when multiplication by an `s`-th power has full rank.
fn clamp_expected(h: &OSequence, s: usize) -> OSequence {
    let values = (0..h.len())
        .map(|d| h.values()[d].saturating_sub(h.get(d as i64 - s as i64)))
        .collect();
    OSequence::from_values(values)
}

/// Checks the k-SLP / k-WLP with the given linear forms `g_1, ..., g_k`.
///
/// Stage `i` works in `A_i = R / (I + (g_1, ..., g_{i-1}))` and compares the
/// Hilbert function of `A_i / g_i^s` with `max(h_d - h_{d-s}, 0)`, which holds
/// exactly when every multiplication map by `g_i^s` has full rank.
pub fn lefschetz_with_forms(
    gens: &[Polynomial],
    forms: &[Polynomial],
    mode: LefschetzMode,
) -> Result<bool> {
    let (n, field, _) = check_compatible(gens)?;
    for g in forms {
        if g.nvars() != n || g.field() != field {
            return Err(Error::Argument(
                "linear forms must live in the ring of the ideal".into(),
            ));
        }
        if g.degree() != Some(1) || !g.is_homogeneous() {
            return Err(Error::Argument(format!("{g} is not a linear form")));
        }
    }
    let mut current: Vec<Polynomial> = gens.iter().map(|g| g.with_order(TermOrder::Grevlex)).collect();
    for g in forms {
        let g = g.with_order(TermOrder::Grevlex);
        let h = quotient_hilbert(&current)?;
        let top = match mode {
            LefschetzMode::Strong => h.socle_degree().max(1),
            LefschetzMode::Weak => 1,
        };
        for s in 1..=top {
            let mut with_power = current.clone();
            with_power.push(g.pow(s as u32));
            if quotient_hilbert(&with_power)? != clamp_expected(&h, s) {
                return Ok(false);
            }
        }
        current.push(g);
    }
    Ok(true)
}

/// Monte-Carlo k-SLP / k-WLP test with random linear forms.
///
/// Returns true as soon as one trial certifies the property; false means
/// no trial among `mc.samples` succeeded.
pub fn generic_lefschetz(
    gens: &[Polynomial],
    k: usize,
    mode: LefschetzMode,
    mc: &MonteCarlo,
) -> Result<bool> {
    let (n, field, _) = check_compatible(gens)?;
    if k == 0 || k > n {
        return Err(Error::Argument(format!("k must be in 1..={n}, got {k}")));
    }
    if mc.samples == 0 {
        return Err(Error::Argument("at least one trial is required".into()));
    }
    quotient_hilbert(gens)?;
    let verdicts: Vec<Result<bool>> = (0..mc.samples as u64)
        .into_par_iter()
        .map(|t| {
            let mut rng = sample_rng(mc.seed, LEFSCHETZ_STREAM_BASE + t);
            let forms: Vec<Polynomial> = (0..k)
                .map(|_| {
                    let coeffs: Vec<u64> = (0..n).map(|_| random_element(field, &mut rng)).collect();
                    Polynomial::linear_form(&coeffs, field, TermOrder::Grevlex)
                })
                .collect();
            if forms.iter().any(Polynomial::is_zero) {
                return Ok(false);
            }
            lefschetz_with_forms(gens, &forms, mode)
        })
        .collect();
    let mut any = false;
    for v in verdicts {
        any |= v?;
    }
    Ok(any)
}

/// Symmetric function families used as test fixtures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetricKind {
    Elementary,
    PowerSum,
}

/// `e_index` or `p_index` evaluated at `(x1^power, ..., xn^power)`.
pub fn symmetric_fixture(
    kind: SymmetricKind,
    index: usize,
    power: u32,
    nvars: usize,
    field: PrimeField,
) -> Result<Polynomial> {
    crate::monomial::check_nvars(nvars)?;
    if index == 0 || power == 0 {
        return Err(Error::Argument("index and power must be positive".into()));
    }
    let mut terms = Vec::new();
    match kind {
        SymmetricKind::Elementary => {
            if index > nvars {
                return Err(Error::Argument(format!(
                    "elementary index {index} exceeds {nvars} variables"
                )));
            }
            for mask in 0u32..(1 << nvars) {
                if mask.count_ones() as usize != index {
                    continue;
                }
                let exps: Vec<u32> = (0..nvars)
                    .map(|i| if mask >> i & 1 == 1 { power } else { 0 })
                    .collect();
                terms.push((Monomial::new(&exps)?, 1));
            }
        }
        SymmetricKind::PowerSum => {
            for i in 0..nvars {
                let mut exps = vec![0; nvars];
                exps[i] = index as u32 * power;
                terms.push((Monomial::new(&exps)?, 1));
            }
        }
    }
    Ok(Polynomial::from_terms(nvars, field, TermOrder::Grevlex, terms))
}
