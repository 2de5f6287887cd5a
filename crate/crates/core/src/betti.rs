//! Graded Betti numbers of `R/I`: Eliahou-Kervaire for stable ideals, the
//! m-full recursion, closed forms for the k-WLP, the Hilbert-function upper
//! bound, and an exact Koszul-homology oracle.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::construct::lex_ideal_from_hilbert;
use crate::hilbert::{binomial, OSequence};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::{Error, Result};

/// Graded Betti numbers `β_{i,i+j}`, stored sparsely under the key `(i, j)`.
#[derive(Clone, PartialEq, Eq)]
pub struct BettiTable {
    nvars: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new(nvars: usize) -> Self {
        BettiTable {
            nvars,
            entries: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// `β_{i,i+j}`.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `β_{i,d}` indexed by internal degree `d`.
    pub fn get_graded(&self, i: usize, d: usize) -> u64 {
        d.checked_sub(i).map_or(0, |j| self.get(i, j))
    }

    pub fn add(&mut self, i: usize, j: usize, v: u64) {
        if v == 0 {
            return;
        }
        *self.entries.entry((i, j)).or_insert(0) += v;
    }

    /// Nonzero entries as `((i, j), β_{i,i+j})`, sorted by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// `Σ_j β_{i,i+j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|((a, _), _)| *a == i)
            .map(|(_, v)| v)
            .sum()
    }

    /// Every entry of `self` is at most the matching entry of `other`.
    pub fn entrywise_le(&self, other: &BettiTable) -> bool {
        self.entries.iter().all(|(&(i, j), &v)| v <= other.get(i, j))
    }

    /// Coefficients of `Σ (-1)^i β_{i,d} t^d`, the numerator of the Hilbert series.
    pub fn hilbert_numerator(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for (&(i, j), &v) in &self.entries {
            let d = i + j;
            if out.len() <= d {
                out.resize(d + 1, 0);
            }
            let v = v as i64;
            out[d] += if i % 2 == 0 { v } else { -v };
        }
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }

    fn max_i(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    fn max_j(&self) -> usize {
        self.entries.keys().map(|k| k.1).max().unwrap_or(0)
    }
}

impl fmt::Display for BettiTable {
    /// Macaulay-style grid: column `i`, row `j` holds `β_{i,i+j}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols = self.max_i() + 1;
        let rows = self.max_j() + 1;
        let cell = |s: String, w: usize| format!("{s:>w$}");
        let mut width = 1;
        for i in 0..cols {
            width = width.max(self.total(i).to_string().len()).max(i.to_string().len());
        }
        let label = (rows - 1).to_string().len().max("total".len()) + 1;
        let mut header = " ".repeat(label);
        for i in 0..cols {
            header.push(' ');
            header.push_str(&cell(i.to_string(), width));
        }
        writeln!(f, "{}", header.trim_end())?;
        let mut total = cell("total:".to_string(), label);
        for i in 0..cols {
            total.push(' ');
            total.push_str(&cell(self.total(i).to_string(), width));
        }
        write!(f, "{total}")?;
        for j in 0..rows {
            let mut line = cell(format!("{j}:"), label);
            for i in 0..cols {
                let v = self.get(i, j);
                line.push(' ');
                line.push_str(&cell(if v == 0 { ".".into() } else { v.to_string() }, width));
            }
            write!(f, "\n{line}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BettiTable(nvars={}, {:?})", self.nvars, self.entries)
    }
}

#[derive(Serialize)]
struct Triple {
    i: usize,
    j: usize,
    degree: usize,
    value: u64,
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let triples: Vec<Triple> = self
            .entries
            .iter()
            .map(|(&(i, j), &value)| Triple {
                i,
                j,
                degree: i + j,
                value,
            })
            .collect();
        let mut s = serializer.serialize_struct("BettiTable", 2)?;
        s.serialize_field("nvars", &self.nvars)?;
        s.serialize_field("entries", &triples)?;
        s.end()
    }
}

/// `c_j = max(h_{j-1} - h_j, 0)` with `h_{-1} = 0`; only nonzero values are stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CSequence {
    pub values: BTreeMap<usize, u64>,
}

impl CSequence {
    pub fn get(&self, j: usize) -> u64 {
        self.values.get(&j).copied().unwrap_or(0)
    }
}

pub fn c_from_hilbert(h: &OSequence) -> CSequence {
    let values = (1..=h.len())
        .map(|j| (j, h.get(j as i64 - 1).saturating_sub(h.get(j as i64))))
        .filter(|&(_, v)| v > 0)
        .collect();
    CSequence { values }
}

fn require_proper(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(())
}

/// Eliahou-Kervaire: `β_{i,i+j} = Σ_{deg u = j+1} C(m(u)-1, i-1)` over the
/// minimal generators, where `m(u)` is the largest variable index dividing `u`.
pub fn betti_ek(ideal: &MonomialIdeal) -> Result<BettiTable> {
    require_proper(ideal)?;
    if !ideal.is_stable() {
        return Err(Error::Hypothesis(format!(
            "({ideal}) is not stable; use the Koszul computation instead"
        )));
    }
    let mut table = BettiTable::new(ideal.nvars());
    table.add(0, 0, 1);
    for u in ideal.generators() {
        let m = u.max_var().expect("proper ideal has no constant generator") + 1;
        let j = u.degree() as usize - 1;
        for i in 1..=m {
            table.add(i, j, binomial(m as i64 - 1, i as i64 - 1));
        }
    }
    Ok(table)
}

/// Betti numbers of an ideal that is m-full with respect to the last variable
/// at every level of `I ⊃ I ∩ K[x1..x_{n-1}] ⊃ ...`:
/// `β(R/I) = β(R'/I') + C(n-1, i-1) c_{j+1}` with `c_j` counting minimal
/// generators of degree `j` divisible by `x_n`.
pub fn betti_mfull(ideal: &MonomialIdeal) -> Result<BettiTable> {
    require_proper(ideal)?;
    if !ideal.is_artinian() {
        return Err(Error::NonArtinian(format!("({ideal}) is not Artinian")));
    }
    let n = ideal.nvars();
    let mut table = BettiTable::new(n);
    table.add(0, 0, 1);
    let mut level = ideal.clone();
    loop {
        let nv = level.nvars();
        if !level.is_m_full_last() {
            return Err(Error::Hypothesis(format!(
                "({level}) in {nv} variables is not m-full with respect to x{nv}"
            )));
        }
        for u in level.generators() {
            if u.exponent(nv - 1) == 0 {
                continue;
            }
            let j = u.degree() as usize - 1;
            for i in 1..=nv {
                table.add(i, j, binomial(nv as i64 - 1, i as i64 - 1));
            }
        }
        if nv == 1 {
            break;
        }
        level = level.intersect_subring(1)?;
    }
    Ok(table)
}

/// Numerator `(1 - t)^m * Σ h_d t^d` of the Hilbert series of an Artinian
/// quotient of an `m`-variable polynomial ring.
fn expected_numerator(h: &OSequence, m: usize) -> Vec<i64> {
    let mut poly: Vec<i64> = h.values().iter().map(|&v| v as i64).collect();
    for _ in 0..m {
        let mut next = vec![0; poly.len() + 1];
        for (d, &c) in poly.iter().enumerate() {
            next[d] += c;
            next[d + 1] -= c;
        }
        poly = next;
    }
    while poly.last() == Some(&0) {
        poly.pop();
    }
    poly
}

fn check_admissible(h: &OSequence, n: usize, k: usize) -> Result<()> {
    if let Some(reason) = h.lefschetz_obstruction(n, k)? {
        return Err(Error::Characterization(reason));
    }
    Ok(())
}

/// `β_{i,i+j} = base_{i,i+j} + Σ_{t<k} C(n-1-t, i-1) c^{(Δ^t h)}_{j+1}`.
///
/// For `k < n`, `base` is the Betti table of an `(n-k)`-variable quotient with
/// Hilbert function `Δ^k h`; for `k = n` it is ignored.
pub fn betti_kwlp_closed_form(
    h: &OSequence,
    n: usize,
    k: usize,
    base: Option<&BettiTable>,
) -> Result<BettiTable> {
    check_admissible(h, n, k)?;
    let mut table = BettiTable::new(n);
    if k < n {
        let base = base.ok_or_else(|| {
            Error::Argument(format!("k = {k} < n = {n} needs the base Betti table"))
        })?;
        if base.nvars() != n - k {
            return Err(Error::Dimension {
                expected: n - k,
                found: base.nvars(),
            });
        }
        let dk = h.delta(k);
        let expected = expected_numerator(&dk, n - k);
        let found = base.hilbert_numerator();
        if expected != found {
            return Err(Error::HilbertMismatch {
                expected: format!("Hilbert function ({dk})"),
                found: format!("Hilbert series numerator {found:?}"),
            });
        }
        for ((i, j), v) in base.entries() {
            table.add(i, j, v);
        }
    } else {
        table.add(0, 0, 1);
    }
    for t in 0..k {
        let c = c_from_hilbert(&h.delta(t));
        let m = n - t;
        for (&jj, &cv) in &c.values {
            // c_{j+1} feeds β_{i,i+j}
            let j = jj - 1;
            for i in 1..=m {
                table.add(i, j, binomial(m as i64 - 1, i as i64 - 1) * cv);
            }
        }
    }
    Ok(table)
}

/// The largest Betti numbers among quotients with Hilbert function `h` having
/// the k-WLP: the closed form with the lex ideal of `Δ^k h` as base.
pub fn betti_upper_bound(h: &OSequence, n: usize, k: usize) -> Result<BettiTable> {
    check_admissible(h, n, k)?;
    if k == n {
        return betti_kwlp_closed_form(h, n, k, None);
    }
    let lex = lex_ideal_from_hilbert(&h.delta(k), n - k)?;
    let base = betti_ek(&lex)?;
    betti_kwlp_closed_form(h, n, k, Some(&base))
}

const MAX_KOSZUL_STANDARD: usize = 50_000;

/// Rank of an integer matrix by fraction-free elimination.
fn exact_rank(mut rows: Vec<Vec<i128>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for r in rank + 1..rows.len() {
            let factor = rows[r][col];
            if factor == 0 {
                continue;
            }
            let mut g = 0i128;
            for c in col..ncols {
                let v = pivot[col] * rows[r][c] - factor * pivot[c];
                rows[r][c] = v;
                g = gcd(g, v);
            }
            if g > 1 {
                for v in &mut rows[r][col..] {
                    *v /= g;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Exact Betti numbers from the homology of the Koszul complex `K(x) ⊗ R/I`.
///
/// Each multidegree `α` gives a small complex with basis `x^(α - e_F) e_F`
/// over squarefree `F` with `x^(α - e_F)` standard; ranks of its ±1
/// boundary matrices are computed exactly.
pub fn betti_koszul(ideal: &MonomialIdeal) -> Result<BettiTable> {
    require_proper(ideal)?;
    let n = ideal.nvars();
    let standard = ideal.standard_monomials()?;
    if standard.len() > MAX_KOSZUL_STANDARD {
        return Err(Error::Resource(format!(
            "{} standard monomials exceed the Koszul limit {MAX_KOSZUL_STANDARD}",
            standard.len()
        )));
    }
    let standard_set: HashSet<Monomial> = standard.iter().copied().collect();
    let subsets: Vec<u32> = (0..1u32 << n).collect();
    let face = |mask: u32| -> Monomial {
        let exps: Vec<u32> = (0..n).map(|v| mask >> v & 1).collect();
        Monomial::new(&exps).expect("squarefree monomial within bounds")
    };
    let faces: Vec<Monomial> = subsets.iter().map(|&s| face(s)).collect();

    let mut multidegrees: HashSet<Monomial> = HashSet::new();
    for m in &standard {
        for f in &faces {
            multidegrees.insert(m.mul(f));
        }
    }
    let mut multidegrees: Vec<Monomial> = multidegrees.into_iter().collect();
    multidegrees.sort();

    let mut table = BettiTable::new(n);
    for alpha in multidegrees {
        // basis of C_i(α), grouped by |F|
        let mut basis: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
        for &s in &subsets {
            if let Some(m) = alpha.div(&faces[s as usize]) {
                if standard_set.contains(&m) {
                    basis[s.count_ones() as usize].push(s);
                }
            }
        }
        // rank of d_i : C_i -> C_{i-1}
        let mut ranks = vec![0usize; n + 2];
        for i in 1..=n {
            if basis[i].is_empty() || basis[i - 1].is_empty() {
                continue;
            }
            let index: HashMap<u32, usize> =
                basis[i - 1].iter().enumerate().map(|(r, &s)| (s, r)).collect();
            let mut rows = vec![vec![0i128; basis[i].len()]; basis[i - 1].len()];
            for (c, &s) in basis[i].iter().enumerate() {
                let mut sign = 1i128;
                for v in 0..n {
                    if s >> v & 1 == 0 {
                        continue;
                    }
                    // d(e_F) = Σ ± x_v e_{F - v}; the image vanishes when x_v * m lies in I
                    if let Some(&r) = index.get(&(s & !(1 << v))) {
                        rows[r][c] = sign;
                    }
                    sign = -sign;
                }
            }
            ranks[i] = exact_rank(rows);
        }
        let degree = alpha.degree() as usize;
        for i in 0..=n {
            let dim = basis[i].len();
            let homology = dim - ranks[i] - ranks[i + 1];
            if homology > 0 {
                table.add(i, degree - i, homology as u64);
            }
        }
    }
    Ok(table)
}
