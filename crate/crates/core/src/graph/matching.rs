//! Matching and induced matching numbers by memoized exhaustive search.

use std::collections::HashMap;

use super::Graph;
use crate::bitset::bits;
use crate::error::{Error, Result};

impl Graph {
    fn open_words(&self) -> Result<Vec<u64>> {
        if self.n() > 64 {
            return Err(Error::TooLarge { what: "graph for matching search", size: self.n(), cap: 64 });
        }
        Ok(self.adj.iter().map(|nb| nb.low_word()).collect())
    }

    fn all_word(&self) -> u64 {
        if self.n() == 64 {
            u64::MAX
        } else {
            (1u64 << self.n()) - 1
        }
    }

    /// Size of a largest matching.
    pub fn matching_number(&self) -> Result<usize> {
        let adj = self.open_words()?;
        Ok(max_matching(&adj, self.all_word(), &mut HashMap::new()))
    }

    /// Size of a largest induced matching: pairwise disjoint edges with no
    /// edge of the graph joining two of them.
    pub fn induced_matching_number(&self) -> Result<usize> {
        let adj = self.open_words()?;
        Ok(max_induced_matching(&adj, self.all_word(), &mut HashMap::new()))
    }

    /// Matching number equals induced matching number.
    pub fn is_cameron_walker(&self) -> Result<bool> {
        Ok(self.matching_number()? == self.induced_matching_number()?)
    }
}

fn max_matching(adj: &[u64], alive: u64, memo: &mut HashMap<u64, usize>) -> usize {
    // drop isolated vertices up front so the memo sees canonical states
    let mut alive = alive;
    for v in bits(alive) {
        if adj[v] & alive == 0 {
            alive &= !(1 << v);
        }
    }
    if alive == 0 {
        return 0;
    }
    if let Some(&m) = memo.get(&alive) {
        return m;
    }
    let v = alive.trailing_zeros() as usize;
    let mut best = max_matching(adj, alive & !(1 << v), memo);
    for u in bits(adj[v] & alive) {
        best = best.max(1 + max_matching(adj, alive & !(1 << v) & !(1 << u), memo));
    }
    memo.insert(alive, best);
    best
}

fn max_induced_matching(adj: &[u64], alive: u64, memo: &mut HashMap<u64, usize>) -> usize {
    let mut alive = alive;
    for v in bits(alive) {
        if adj[v] & alive == 0 {
            alive &= !(1 << v);
        }
    }
    if alive == 0 {
        return 0;
    }
    if let Some(&m) = memo.get(&alive) {
        return m;
    }
    let v = alive.trailing_zeros() as usize;
    let mut best = max_induced_matching(adj, alive & !(1 << v), memo);
    for u in bits(adj[v] & alive) {
        let removed = adj[v] | adj[u] | (1 << v) | (1 << u);
        best = best.max(1 + max_induced_matching(adj, alive & !removed, memo));
    }
    memo.insert(alive, best);
    best
}

#[cfg(test)]
mod tests {
    use super::super::tests::{complete, cycle, path};
    use super::*;

    /// Exhaustive oracle over edge subsets.
    fn brute(g: &Graph) -> (usize, usize) {
        let edges = g.edges();
        let mut ma = 0;
        let mut nu = 0;
        for mask in 0u32..(1 << edges.len()) {
            let chosen: Vec<(usize, usize)> =
                bits(mask as u64).map(|i| edges[i]).collect();
            let mut used = 0u64;
            let mut disjoint = true;
            for &(a, b) in &chosen {
                if used & ((1 << a) | (1 << b)) != 0 {
                    disjoint = false;
                }
                used |= (1 << a) | (1 << b);
            }
            if !disjoint {
                continue;
            }
            ma = ma.max(chosen.len());
            let induced = chosen.iter().enumerate().all(|(i, &(a, b))| {
                chosen.iter().skip(i + 1).all(|&(c, d)| {
                    !g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, c) && !g.has_edge(b, d)
                })
            });
            if induced {
                nu = nu.max(chosen.len());
            }
        }
        (ma, nu)
    }

    #[test]
    fn star_is_cameron_walker() {
        let mut star = Graph::new(["c", "a", "b", "d"]).unwrap();
        for v in 1..4 {
            star.add_edge(0, v).unwrap();
        }
        assert_eq!(star.matching_number().unwrap(), 1);
        assert_eq!(star.induced_matching_number().unwrap(), 1);
        assert!(star.is_cameron_walker().unwrap());
    }

    #[test]
    fn c4_is_not() {
        let c4 = cycle(4);
        assert_eq!(c4.matching_number().unwrap(), 2);
        assert_eq!(c4.induced_matching_number().unwrap(), 1);
        assert!(!c4.is_cameron_walker().unwrap());
    }

    #[test]
    fn against_edge_subset_oracle() {
        for g in [path(5), cycle(5), cycle(6), complete(4), complete(5), path(7)] {
            let (ma, nu) = brute(&g);
            assert_eq!(g.matching_number().unwrap(), ma);
            assert_eq!(g.induced_matching_number().unwrap(), nu);
        }
    }
}
