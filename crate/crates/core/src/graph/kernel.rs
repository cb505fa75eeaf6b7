//! Set-algebra kernels shared by the single-word and multi-word paths.

use std::ops::ControlFlow;

use crate::bitset::{bits, BitSet};

pub(crate) trait Bits: Clone + Eq {
    fn none() -> Self;
    fn is_empty(&self) -> bool;
    fn and(&self, o: &Self) -> Self;
    fn or(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn with(&self, i: usize) -> Self;
    fn without(&self, i: usize) -> Self;
    fn count(&self) -> usize;
    fn elements(&self) -> Vec<usize>;
}

impl Bits for u64 {
    fn none() -> Self {
        0
    }
    fn is_empty(&self) -> bool {
        *self == 0
    }
    fn and(&self, o: &Self) -> Self {
        self & o
    }
    fn or(&self, o: &Self) -> Self {
        self | o
    }
    fn minus(&self, o: &Self) -> Self {
        self & !o
    }
    fn with(&self, i: usize) -> Self {
        self | (1 << i)
    }
    fn without(&self, i: usize) -> Self {
        self & !(1 << i)
    }
    fn count(&self) -> usize {
        self.count_ones() as usize
    }
    fn elements(&self) -> Vec<usize> {
        bits(*self).collect()
    }
}

impl Bits for BitSet {
    fn none() -> Self {
        BitSet::new()
    }
    fn is_empty(&self) -> bool {
        BitSet::is_empty(self)
    }
    fn and(&self, o: &Self) -> Self {
        self.intersection(o)
    }
    fn or(&self, o: &Self) -> Self {
        self.union(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.difference(o)
    }
    fn with(&self, i: usize) -> Self {
        let mut s = self.clone();
        s.insert(i);
        s
    }
    fn without(&self, i: usize) -> Self {
        let mut s = self.clone();
        s.remove(i);
        s
    }
    fn count(&self) -> usize {
        self.len()
    }
    fn elements(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Bron–Kerbosch with pivoting, run on the complement: reports every maximal
/// independent set of the graph induced on `within`. `closed[v]` is `N[v]`.
pub(crate) fn maximal_independent_sets<B: Bits>(
    closed: &[B],
    within: &B,
    visit: &mut impl FnMut(&B) -> ControlFlow<()>,
) -> ControlFlow<()> {
    bk(closed, B::none(), within.clone(), B::none(), visit)
}

fn bk<B: Bits>(
    closed: &[B],
    r: B,
    mut p: B,
    mut x: B,
    visit: &mut impl FnMut(&B) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if p.is_empty() {
        if x.is_empty() {
            return visit(&r);
        }
        return ControlFlow::Continue(());
    }
    // pivot minimises the number of branches |P ∩ N[u]|
    let pivot = p
        .or(&x)
        .elements()
        .into_iter()
        .min_by_key(|&u| p.and(&closed[u]).count())
        .expect("P is nonempty");
    for v in p.and(&closed[pivot]).elements() {
        let next_p = p.minus(&closed[v]);
        let next_x = x.minus(&closed[v]);
        bk(closed, r.with(v), next_p, next_x, visit)?;
        p = p.without(v);
        x = x.with(v);
    }
    ControlFlow::Continue(())
}

/// Shedding test on the subgraph induced on `within`: `v` is shedding iff it
/// is isolated or no maximal independent set of `within \ N[v]` dominates
/// `N(v)` (such a set would be maximal in the graph minus `v`).
pub(crate) fn is_shedding<B: Bits>(closed: &[B], within: &B, v: usize) -> bool {
    let open = closed[v].and(within).without(v);
    if open.is_empty() {
        return true;
    }
    let rest = within.minus(&closed[v]);
    let nbrs = open.elements();
    let found = maximal_independent_sets(closed, &rest, &mut |s: &B| {
        let dominates = nbrs.iter().all(|&u| !closed[u].and(s).is_empty());
        if dominates {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found.is_continue()
}
