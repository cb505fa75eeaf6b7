//! Monomial ideals stored by their minimal generating sets.
//!
//! Every constructor goes through [`MonomialIdeal::new`], which removes
//! redundant generators and sorts the rest by degree and then by decreasing
//! exponent vector. Two ideals are therefore equal exactly when their
//! generator lists are.

mod graph_ideals;
mod io;
mod monomial;
mod polarize;

use std::sync::Arc;

pub use graph_ideals::{cover_ideal, cover_ideal_by_intersection, edge_ideal, symbolic_power_cover, vertex_ring};
pub use io::IdealJson;
pub use monomial::{Monomial, Ring, MAX_EXPONENT};
pub use polarize::Polarization;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Arc<Ring>,
    gens: Vec<Monomial>,
}

/// Drop duplicates and divisibility-redundant monomials; canonical order.
fn minimal_generators(mut ms: Vec<Monomial>) -> Vec<Monomial> {
    ms.sort_by(|a, b| a.canonical_key().cmp(&b.canonical_key()));
    ms.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(ms.len());
    for m in ms {
        // earlier monomials have degree <= deg(m), so only they can divide m
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept
}

impl MonomialIdeal {
    /// The ideal generated by `monomials`, minimalized.
    pub fn new(ring: Arc<Ring>, monomials: Vec<Monomial>) -> Result<Self> {
        if let Some(m) = monomials.iter().find(|m| m.nvars() != ring.nvars()) {
            return Err(Error::Arity { got: m.nvars(), expected: ring.nvars() });
        }
        Ok(Self { gens: minimal_generators(monomials), ring })
    }

    /// Parse generators given as exponent rows.
    pub fn from_exponents(ring: Arc<Ring>, rows: &[Vec<u32>]) -> Result<Self> {
        let ms = rows.iter().map(|r| Monomial::from_u32(r)).collect::<Result<Vec<_>>>()?;
        Self::new(ring, ms)
    }

    /// Squarefree ideal from generator supports.
    pub fn from_supports(ring: Arc<Ring>, supports: &[BitSet]) -> Result<Self> {
        let n = ring.nvars();
        if let Some(s) = supports.iter().find(|s| s.max_element().is_some_and(|m| m >= n)) {
            return Err(Error::Arity { got: s.max_element().unwrap_or(0) + 1, expected: n });
        }
        let ms = supports.iter().map(|s| Monomial::from_support(n, s)).collect();
        Self::new(ring, ms)
    }

    pub fn zero(ring: Arc<Ring>) -> Self {
        Self { ring, gens: Vec::new() }
    }

    pub fn unit(ring: Arc<Ring>) -> Self {
        let one = Monomial::one(ring.nvars());
        Self { ring, gens: vec![one] }
    }

    /// The ideal generated by the listed variables.
    pub fn variables(ring: Arc<Ring>, vars: &[usize]) -> Self {
        let n = ring.nvars();
        let ms = vars.iter().map(|&i| Monomial::var(n, i)).collect();
        Self { gens: minimal_generators(ms), ring }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Largest degree of a minimal generator.
    pub fn deg_max(&self) -> Result<u32> {
        self.gens.iter().map(Monomial::degree).max().ok_or(Error::ZeroIdeal)
    }

    pub fn deg_min(&self) -> Result<u32> {
        self.gens.iter().map(Monomial::degree).min().ok_or(Error::ZeroIdeal)
    }

    /// Distinct generator degrees in increasing order.
    pub fn generator_degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.gens.iter().map(Monomial::degree).collect();
        d.dedup();
        d
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// `I ∩ J`: generated by pairwise lcms.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut ms = Vec::with_capacity(self.len() * other.len());
        for a in &self.gens {
            for b in &other.gens {
                ms.push(a.lcm(b));
            }
        }
        Ok(Self { ring: self.ring.clone(), gens: minimal_generators(ms) })
    }

    /// Intersection of a family; the empty family gives the unit ideal.
    pub fn intersect_all<'a>(ring: Arc<Ring>, ideals: impl IntoIterator<Item = &'a Self>) -> Result<Self> {
        let mut acc = Self::unit(ring);
        for i in ideals {
            acc = acc.intersect(i)?;
        }
        Ok(acc)
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut ms = Vec::with_capacity(self.len() * other.len());
        for a in &self.gens {
            for b in &other.gens {
                ms.push(a.mul(b)?);
            }
        }
        Ok(Self { ring: self.ring.clone(), gens: minimal_generators(ms) })
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let ms = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self { ring: self.ring.clone(), gens: minimal_generators(ms) })
    }

    /// `I^k`; `I^0` is the unit ideal.
    pub fn power(&self, k: u32) -> Result<Self> {
        let mut acc = Self::unit(self.ring.clone());
        for _ in 0..k {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// `I : (m)`, generated by `u / gcd(u, m)` over generators `u`.
    pub fn colon_by_monomial(&self, m: &Monomial) -> Result<Self> {
        if m.nvars() != self.ring.nvars() {
            return Err(Error::Arity { got: m.nvars(), expected: self.ring.nvars() });
        }
        let ms = self.gens.iter().map(|u| u.quotient_by_gcd(m)).collect();
        Ok(Self { ring: self.ring.clone(), gens: minimal_generators(ms) })
    }

    /// The Alexander dual of a squarefree ideal: the intersection, over
    /// generators `u`, of the prime generated by the support of `u`.
    pub fn alexander_dual(&self) -> Result<Self> {
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let primes: Vec<Self> = self
            .gens
            .iter()
            .map(|u| Self::variables(self.ring.clone(), &u.support().iter().collect::<Vec<_>>()))
            .collect();
        Self::intersect_all(self.ring.clone(), &primes)
    }

    /// `I_<d>`: the ideal generated by every degree-`d` monomial of `I`.
    pub fn degree_component(&self, d: u32) -> Self {
        let n = self.ring.nvars();
        let mut ms = Vec::new();
        for g in &self.gens {
            let deg = g.degree();
            if deg > d {
                continue;
            }
            for_each_monomial_of_degree(n, d - deg, &mut |m| {
                ms.push(g.mul(m).expect("exponents stay small"));
            });
        }
        Self { ring: self.ring.clone(), gens: minimal_generators(ms) }
    }

    /// `I_[d]`: the ideal generated by the squarefree degree-`d` monomials of `I`.
    pub fn squarefree_component(&self, d: u32) -> Self {
        let n = self.ring.nvars();
        let mut ms = Vec::new();
        if (d as usize) <= n {
            for_each_subset_of_size(n, d as usize, &mut |s| {
                let m = Monomial::from_support(n, s);
                if self.contains(&m) {
                    ms.push(m);
                }
            });
        }
        Self { ring: self.ring.clone(), gens: minimal_generators(ms) }
    }

    /// Move into `ring`, matching variables by name.
    pub fn embed(&self, ring: &Arc<Ring>) -> Result<Self> {
        let map: Vec<Option<usize>> = self.ring.vars().iter().map(|v| ring.index_of(v)).collect();
        let mut ms = Vec::with_capacity(self.len());
        for g in &self.gens {
            let mut e = vec![0u16; ring.nvars()];
            for (i, &x) in g.exps().iter().enumerate() {
                if x == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => e[j] = x,
                    None => return Err(Error::UnknownLabel(self.ring.var(i).to_string())),
                }
            }
            ms.push(Monomial::new(e));
        }
        Self::new(ring.clone(), ms)
    }

    /// Generators as sorted lists of `(variable name, exponent)`, sorted;
    /// compares ideals across rings.
    pub fn named_generators(&self) -> Vec<Vec<(String, u16)>> {
        let mut out: Vec<Vec<(String, u16)>> = self
            .gens
            .iter()
            .map(|g| {
                let mut v: Vec<(String, u16)> = g
                    .exps()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| (self.ring.var(i).to_string(), e))
                    .collect();
                v.sort();
                v
            })
            .collect();
        out.sort();
        out
    }

    /// `(g1, g2, ...)` with generators written as `x1^2*x3`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "(0)".to_string();
        }
        let gs: Vec<String> = self.gens.iter().map(|g| g.render(&self.ring)).collect();
        format!("({})", gs.join(", "))
    }
}

/// Visit every monomial of total degree `d` in `n` variables.
pub(crate) fn for_each_monomial_of_degree(n: usize, d: u32, f: &mut impl FnMut(&Monomial)) {
    fn rec(e: &mut Vec<u16>, i: usize, left: u32, f: &mut impl FnMut(&Monomial)) {
        if i + 1 == e.len() {
            e[i] = left as u16;
            f(&Monomial::new(e.clone()));
            e[i] = 0;
            return;
        }
        for x in (0..=left).rev() {
            e[i] = x as u16;
            rec(e, i + 1, left - x, f);
        }
        e[i] = 0;
    }
    if n == 0 {
        if d == 0 {
            f(&Monomial::one(0));
        }
        return;
    }
    rec(&mut vec![0; n], 0, d, f);
}

/// Visit every `k`-subset of `{0..n}`.
pub(crate) fn for_each_subset_of_size(n: usize, k: usize, f: &mut impl FnMut(&BitSet)) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut BitSet, f: &mut impl FnMut(&BitSet)) {
        if k == 0 {
            f(cur);
            return;
        }
        for i in start..=n - k {
            cur.insert(i);
            rec(i + 1, n, k - 1, cur, f);
            cur.remove(i);
        }
    }
    if k <= n {
        rec(0, n, k, &mut BitSet::new(), f);
    }
}
