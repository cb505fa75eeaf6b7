//! Graded Betti tables and the invariants read off them.
//!
//! The default route works over the lcm lattice: for each lcm `b` of a
//! subset of generators, `β_{i,b}(I) = dim H̃_{i-1}(K^b)` where `K^b` is the
//! complex of squarefree `τ ⊆ supp(b)` with `x^{b-τ} ∈ I`. It needs no
//! polarization and agrees with Hochster's restriction formula, which is
//! kept (squarefree ideals only) as an independent oracle.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::complex::{facet_homology, stanley_reisner, HOMOLOGY_VERTEX_CAP};
use super::fp::Field;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideal::{cover_ideal, Monomial, MonomialIdeal};

/// Cap on the number of lcm-lattice elements visited.
pub const LATTICE_CAP: usize = 1 << 21;

/// `β_{i,j}` of an ideal over `F_p`; only nonzero entries are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "BettiJson", try_from = "BettiJson")]
pub struct BettiTable {
    field: u32,
    entries: BTreeMap<(usize, u32), u64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BettiJson {
    field: u32,
    entries: Vec<(usize, u32, u64)>,
}

impl From<BettiTable> for BettiJson {
    fn from(t: BettiTable) -> Self {
        BettiJson { field: t.field, entries: t.entries.into_iter().map(|((i, j), b)| (i, j, b)).collect() }
    }
}

impl TryFrom<BettiJson> for BettiTable {
    type Error = Error;

    fn try_from(j: BettiJson) -> Result<Self> {
        let mut t = BettiTable::new(j.field);
        for (i, deg, b) in j.entries {
            t.add(i, deg, b);
        }
        Ok(t)
    }
}

impl BettiTable {
    pub fn new(field: u32) -> Self {
        Self { field, entries: BTreeMap::new() }
    }

    pub fn field(&self) -> u32 {
        self.field
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, j: u32, b: u64) {
        if b > 0 {
            *self.entries.entry((i, j)).or_insert(0) += b;
        }
    }

    pub fn merge(mut self, other: &Self) -> Self {
        for (&(i, j), &b) in &other.entries {
            self.add(i, j, b);
        }
        self
    }

    /// Nonzero `((i, j), β)` entries in increasing `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, u32), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `β_i`, summed over internal degrees.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.range((i, 0)..=(i, u32::MAX)).map(|(_, b)| b).sum()
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// `max { j - i : β_{i,j} ≠ 0 }`; `None` for the empty table.
    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max()
    }

    /// Equality of entries, ignoring the field tag.
    pub fn same_numbers(&self, other: &Self) -> bool {
        self.entries == other.entries
    }

    /// Macaulay2-style table: columns are `i`, rows are `j - i`.
    pub fn render(&self) -> String {
        let Some(pd) = self.projective_dimension() else {
            return "(zero table)\n".to_string();
        };
        let rows: Vec<i64> = {
            let lo = self.entries.keys().map(|&(i, j)| j as i64 - i as i64).min().unwrap_or(0);
            let hi = self.regularity().unwrap_or(0);
            (lo..=hi).collect()
        };
        let cell = |s: &str, w: usize| format!("{s:>w$}");
        let mut cols: Vec<Vec<String>> = Vec::new();
        for i in 0..=pd {
            let mut c = vec![i.to_string(), self.total(i).to_string()];
            for &r in &rows {
                let j = r + i as i64;
                let b = if j < 0 { 0 } else { self.get(i, j as u32) };
                c.push(if b == 0 { ".".to_string() } else { b.to_string() });
            }
            cols.push(c);
        }
        let mut labels = vec![String::new(), "total:".to_string()];
        labels.extend(rows.iter().map(|r| format!("{r}:")));
        let lw = labels.iter().map(String::len).max().unwrap_or(0);
        let mut out = String::new();
        for (row, label) in labels.iter().enumerate() {
            let _ = write!(out, "{}", cell(label, lw));
            for c in &cols {
                let w = c.iter().map(String::len).max().unwrap_or(1);
                let _ = write!(out, " {}", cell(&c[row], w));
            }
            out.push('\n');
        }
        out
    }
}

/// All lcms of nonempty subsets of `gens`.
pub(crate) fn lcm_lattice(gens: &[Monomial]) -> Result<Vec<Monomial>> {
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut all: Vec<Monomial> = Vec::new();
    for g in gens {
        let before = all.len();
        for k in 0..before {
            let l = all[k].lcm(g);
            if seen.insert(l.clone()) {
                all.push(l);
            }
        }
        if seen.insert(g.clone()) {
            all.push(g.clone());
        }
        if all.len() > LATTICE_CAP {
            return Err(Error::TooLarge { what: "lcm lattice", size: all.len(), cap: LATTICE_CAP });
        }
    }
    Ok(all)
}

/// Facets of the upper Koszul complex `K^b(I)`.
fn koszul_facets(gens: &[Monomial], b: &Monomial) -> Vec<u64> {
    gens.iter()
        .filter(|g| g.divides(b))
        .map(|g| {
            g.exps()
                .iter()
                .zip(b.exps())
                .enumerate()
                .filter(|(_, (ge, be))| be > ge)
                .fold(0u64, |a, (i, _)| a | 1 << i)
        })
        .collect()
}

/// Multigraded Betti numbers at one lattice point, as `(i, β_{i,b})`.
fn betti_at(gens: &[Monomial], b: &Monomial, field: Field) -> Result<Vec<(usize, u64)>> {
    let h = facet_homology(koszul_facets(gens, b), field)?;
    Ok(h.into_iter().enumerate().filter(|(_, r)| *r > 0).collect())
}

/// The graded Betti table of `ideal` (as a module, not `R/I`) over `F_p`.
/// The zero ideal has the empty table; the unit ideal has `β_{0,0} = 1`.
pub fn betti_table(ideal: &MonomialIdeal, p: u32) -> Result<BettiTable> {
    let field = Field::new(p)?;
    let n = ideal.ring().nvars();
    if n > 64 {
        return Err(Error::TooLarge { what: "variables", size: n, cap: 64 });
    }
    let gens = ideal.generators();
    let lattice = lcm_lattice(gens)?;
    lattice
        .par_iter()
        .try_fold(
            || BettiTable::new(p),
            |mut t, b| {
                for (i, r) in betti_at(gens, b, field)? {
                    t.add(i, b.degree(), r);
                }
                Ok(t)
            },
        )
        .try_reduce(|| BettiTable::new(p), |a, b| Ok(a.merge(&b)))
}

/// Hochster's formula in restriction form for a squarefree ideal `I_Δ`:
/// `β_{i,j} = Σ_{|W| = j} dim H̃_{j-i-2}(Δ|_W)`. Visits all `2^n` subsets,
/// so it is capped at [`HOMOLOGY_VERTEX_CAP`] variables; cones collapse
/// immediately inside the homology kernel.
pub fn betti_table_hochster(ideal: &MonomialIdeal, p: u32) -> Result<BettiTable> {
    let field = Field::new(p)?;
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let n = ideal.ring().nvars();
    if n > HOMOLOGY_VERTEX_CAP {
        return Err(Error::TooLarge { what: "variables", size: n, cap: HOMOLOGY_VERTEX_CAP });
    }
    let mut table = BettiTable::new(p);
    if ideal.is_unit() {
        table.add(0, 0, 1);
        return Ok(table);
    }
    let delta: Vec<u64> = stanley_reisner(ideal)?.facets().iter().map(|f| f.low_word()).collect();
    (1u64..1 << n)
        .into_par_iter()
        .try_fold(
            || BettiTable::new(p),
            |mut t, w| {
                let restricted: Vec<u64> = delta.iter().map(|f| f & w).collect();
                let j = w.count_ones();
                for (k, r) in facet_homology(restricted, field)?.into_iter().enumerate() {
                    // k = dim + 1, and i = j - dim - 2
                    let i = j as i64 - k as i64 - 1;
                    if r > 0 && i >= 0 {
                        t.add(i as usize, j, r);
                    }
                }
                Ok(t)
            },
        )
        .try_reduce(|| BettiTable::new(p), |a, b| Ok(a.merge(&b)))
}

/// Polarize, then apply [`betti_table_hochster`]. Polarization keeps every
/// `β_{i,j}`, so this is a second route for non-squarefree ideals.
pub fn betti_table_polarized(ideal: &MonomialIdeal, p: u32) -> Result<BettiTable> {
    let (pol, _) = ideal.polarize()?;
    betti_table_hochster(&pol, p)
}

/// `reg(I)`; errors on the zero ideal.
pub fn regularity(ideal: &MonomialIdeal, p: u32) -> Result<i64> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    Ok(betti_table(ideal, p)?.regularity().expect("nonzero ideal has β_0"))
}

/// All generators share one degree `d` and every `β_{i,j}` sits at `j = i + d`.
pub fn has_linear_resolution(ideal: &MonomialIdeal, p: u32) -> Result<bool> {
    let degrees = ideal.generator_degrees();
    match degrees.as_slice() {
        [] => Ok(true),
        [d] => Ok(betti_table(ideal, p)?.entries().all(|((i, j), _)| j as usize == i + *d as usize)),
        _ => Ok(false),
    }
}

/// Componentwise linearity. Squarefree ideals use the squarefree components
/// `I_[d]`; other ideals use the truncations `I_<d>`. Degrees past the
/// largest generator degree need no check: once a component is linear,
/// multiplying by the maximal ideal keeps it linear.
pub fn is_componentwise_linear(ideal: &MonomialIdeal, p: u32) -> Result<bool> {
    if ideal.is_squarefree() {
        component_check(ideal, p, MonomialIdeal::squarefree_component)
    } else {
        componentwise_linear_by_truncation(ideal, p)
    }
}

/// The definition itself: every `I_<d>` has a linear resolution.
pub fn componentwise_linear_by_truncation(ideal: &MonomialIdeal, p: u32) -> Result<bool> {
    component_check(ideal, p, MonomialIdeal::degree_component)
}

fn component_check(
    ideal: &MonomialIdeal,
    p: u32,
    component: fn(&MonomialIdeal, u32) -> MonomialIdeal,
) -> Result<bool> {
    Field::new(p)?;
    let (Ok(lo), Ok(hi)) = (ideal.deg_min(), ideal.deg_max()) else {
        return Ok(true);
    };
    for d in lo..=hi {
        let c = component(ideal, d);
        if !has_linear_resolution(&c, p)? {
            log::debug!("component of degree {d} is not linear");
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sequential Cohen–Macaulayness of `g`, decided through componentwise
/// linearity of its cover ideal over `F_p`. Field-dependent in principle.
pub fn seq_cm_proxy(g: &Graph, p: u32) -> Result<bool> {
    is_componentwise_linear(&cover_ideal(g)?, p)
}
