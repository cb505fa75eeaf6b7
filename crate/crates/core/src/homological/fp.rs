//! Exact rank computations over prime fields.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// A validated prime characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field(u32);

impl Field {
    pub fn new(p: u32) -> Result<Self> {
        if p < 2 || p >= 1 << 31 || !(2..).take_while(|d: &u32| (*d as u64) * (*d as u64) <= p as u64).all(|d| p % d != 0) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field(p))
    }

    pub fn characteristic(self) -> u32 {
        self.0
    }

    fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    fn inv(self, a: u32) -> u32 {
        // a^(p-2) by square-and-multiply
        let (mut base, mut e, mut acc) = (a, self.0 - 2, 1u32);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The residue of `±1`.
    pub(crate) fn sign(self, negative: bool) -> u32 {
        if negative && self.0 != 2 {
            self.0 - 1
        } else {
            1
        }
    }
}

impl Default for Field {
    fn default() -> Self {
        Field(2)
    }
}

/// Incremental row reduction. Rows are sparse `(column, value)` lists sorted
/// by column; each stored pivot row has leading coefficient one.
pub(crate) struct RowReducer {
    field: Field,
    pivots: HashMap<usize, Vec<(usize, u32)>>,
}

impl RowReducer {
    pub(crate) fn new(field: Field) -> Self {
        Self { field, pivots: HashMap::new() }
    }

    pub(crate) fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `row` against the pivots; keep it if it stays nonzero.
    pub(crate) fn push(&mut self, mut row: Vec<(usize, u32)>) {
        let p = self.field.0;
        while let Some(&(lead, c)) = row.first() {
            let Some(pivot) = self.pivots.get(&lead) else {
                let inv = self.field.inv(c);
                for e in &mut row {
                    e.1 = self.field.mul(e.1, inv);
                }
                self.pivots.insert(lead, row);
                return;
            };
            // row -= c * pivot
            let neg = p - c;
            let mut out = Vec::with_capacity(row.len() + pivot.len());
            let (mut i, mut j) = (0, 0);
            while i < row.len() || j < pivot.len() {
                let take_row = j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
                let take_piv = i == row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
                if take_row {
                    out.push(row[i]);
                    i += 1;
                } else if take_piv {
                    out.push((pivot[j].0, self.field.mul(neg, pivot[j].1)));
                    j += 1;
                } else {
                    let v = (row[i].1 + self.field.mul(neg, pivot[j].1)) % p;
                    if v != 0 {
                        out.push((row[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            row = out;
        }
    }
}

/// Rank of a dense matrix over `F_p`; used as an oracle in tests.
#[cfg(test)]
pub(crate) fn dense_rank(field: Field, mut m: Vec<Vec<u32>>) -> usize {
    let p = field.0;
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(r) = (rank..m.len()).find(|&r| m[r][c] % p != 0) else { continue };
        m.swap(rank, r);
        let inv = field.inv(m[rank][c] % p);
        for x in &mut m[rank] {
            *x = field.mul(*x % p, inv);
        }
        for r in 0..m.len() {
            if r != rank && m[r][c] % p != 0 {
                let f = m[r][c] % p;
                for k in 0..cols {
                    let sub = field.mul(f, m[rank][k]);
                    m[r][k] = (m[r][k] % p + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn primes() {
        assert!(Field::new(2).is_ok());
        assert!(Field::new(3).is_ok());
        assert!(Field::new(65537).is_ok());
        for bad in [0, 1, 4, 9, 91] {
            assert_eq!(Field::new(bad), Err(Error::NotPrime(bad)));
        }
    }

    #[test]
    fn inverse() {
        let f = Field::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    proptest! {
        #[test]
        fn sparse_rank_matches_dense(
            p in prop::sample::select(vec![2u32, 3, 5, 7]),
            rows in prop::collection::vec(prop::collection::vec(0u32..7, 6), 0..8),
        ) {
            let f = Field::new(p).unwrap();
            let mut red = RowReducer::new(f);
            for r in &rows {
                red.push(r.iter().enumerate().filter(|(_, v)| **v % p != 0).map(|(c, v)| (c, *v % p)).collect());
            }
            prop_assert_eq!(red.rank(), dense_rank(f, rows));
        }
    }
}
