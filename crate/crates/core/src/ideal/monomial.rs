use std::cmp::Reverse;
use std::fmt;
use std::sync::Arc;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// A polynomial ring, known only by its ordered variable names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
}

impl Ring {
    pub fn new<I, S>(vars: I) -> Result<Arc<Ring>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        let mut seen = std::collections::HashSet::new();
        for v in &vars {
            if !seen.insert(v.as_str()) {
                return Err(Error::DuplicateLabel(v.clone()));
            }
        }
        Ok(Arc::new(Ring { vars }))
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

/// Largest exponent a monomial may carry.
pub const MAX_EXPONENT: u32 = u16::MAX as u32;

/// An exponent vector. The ring is implicit; callers keep lengths consistent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn new(exps: Vec<u16>) -> Self {
        Monomial(exps)
    }

    pub fn from_u32(exps: &[u32]) -> Result<Self> {
        exps.iter()
            .map(|&e| u16::try_from(e).map_err(|_| Error::ExponentOverflow(e)))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.0[i] = 1;
        m
    }

    /// The squarefree monomial with the given support.
    pub fn from_support(n: usize, support: &BitSet) -> Self {
        let mut m = Self::one(n);
        for i in support.iter() {
            m.0[i] = 1;
        }
        m
    }

    pub fn exps(&self) -> &[u16] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> BitSet {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow(*a as u32 + *b as u32)))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    /// `self / gcd(self, other)`.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    /// If this is a single variable, its index.
    pub fn as_variable(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 if found.is_none() => found = Some(i),
                _ => return None,
            }
        }
        found
    }

    /// Sort key of the canonical generator order: total degree, then
    /// exponent vectors in decreasing lexicographic order.
    pub(crate) fn canonical_key(&self) -> (u32, Reverse<&[u16]>) {
        (self.degree(), Reverse(&self.0))
    }

    /// Render as `x1^2*x3` over the given ring.
    pub fn render(&self, ring: &Ring) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let factors: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    ring.var(i).to_string()
                } else {
                    format!("{}^{e}", ring.var(i))
                }
            })
            .collect();
        factors.join("*")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}
