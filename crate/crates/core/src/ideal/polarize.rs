//! Polarization of monomial ideals.

use std::sync::Arc;

use super::{Monomial, MonomialIdeal, Ring};
use crate::constructions::layer_label;
use crate::error::Result;

/// Records where each polarized variable came from: new variable `j` is
/// copy `layer` (1-based) of original variable `source`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polarization {
    pub ring: Arc<Ring>,
    pub origin: Vec<(usize, u16)>,
}

impl Polarization {
    /// Index of copy `layer` of original variable `source`.
    pub fn index_of(&self, source: usize, layer: u16) -> Option<usize> {
        self.origin.iter().position(|&o| o == (source, layer))
    }
}

impl MonomialIdeal {
    /// Replace `x^a` by the product of `x_1 ... x_a` in fresh variables, one
    /// per (variable, layer) pair up to the largest exponent of each variable.
    /// New variables are named `<x>_<p>`, variable-major.
    pub fn polarize(&self) -> Result<(MonomialIdeal, Polarization)> {
        let n = self.ring.nvars();
        let mut top = vec![0u16; n];
        for g in &self.gens {
            for (t, &e) in top.iter_mut().zip(g.exps()) {
                *t = (*t).max(e);
            }
        }
        let mut names = Vec::new();
        let mut origin = Vec::new();
        let mut offset = vec![0usize; n];
        for i in 0..n {
            offset[i] = origin.len();
            for p in 1..=top[i] {
                names.push(layer_label(self.ring.var(i), p as usize));
                origin.push((i, p));
            }
        }
        let ring = Ring::new(names)?;
        let m = ring.nvars();
        let ms = self
            .gens
            .iter()
            .map(|g| {
                let mut e = vec![0u16; m];
                for (i, &a) in g.exps().iter().enumerate() {
                    for p in 0..a as usize {
                        e[offset[i] + p] = 1;
                    }
                }
                Monomial::new(e)
            })
            .collect();
        let ideal = MonomialIdeal::new(ring.clone(), ms)?;
        Ok((ideal, Polarization { ring, origin }))
    }
}
