//! Linear-quotient orders: search, certificates and their consequences.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::betti::BettiTable;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::ideal::{Monomial, MonomialIdeal};

/// Limits for the exponential searches. Exceeding either is reported as
/// [`Error::BudgetExceeded`], never as a refutation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Budget {
    pub nodes: u64,
    pub time: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Self { nodes: 10_000_000, time: Duration::from_secs(600) }
    }
}

/// Node and clock accounting shared by the searches.
pub(crate) struct Meter {
    budget: Budget,
    start: Instant,
    pub(crate) nodes: u64,
}

impl Meter {
    pub(crate) fn new(budget: Budget) -> Self {
        Self { budget, start: Instant::now(), nodes: 0 }
    }

    pub(crate) fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget.nodes
            || (self.nodes % 1024 == 0 && self.start.elapsed() > self.budget.time)
        {
            return Err(Error::BudgetExceeded { nodes: self.nodes });
        }
        Ok(())
    }
}

/// An admissible order or a proof that none exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LqCertificate {
    /// `order` indexes the canonical generator list; `colon_vars[s]` are the
    /// variables generating `(u_1, ..., u_s) : u_{s+1}` (empty for `s = 0`).
    Order { order: Vec<usize>, colon_vars: Vec<Vec<usize>> },
    /// The search tree was exhausted.
    Refuted,
}

impl LqCertificate {
    pub fn is_order(&self) -> bool {
        matches!(self, LqCertificate::Order { .. })
    }
}

/// For generator `u`, data about each `w / gcd(w, u)`.
struct ColonTable {
    /// the variable index when `w / gcd(w, u)` is a single variable
    var: Vec<Vec<Option<usize>>>,
    support: Vec<Vec<BitSet>>,
}

impl ColonTable {
    fn new(gens: &[Monomial]) -> Self {
        let q = |u: &Monomial, w: &Monomial| w.quotient_by_gcd(u);
        let var = gens.iter().map(|u| gens.iter().map(|w| q(u, w).as_variable()).collect()).collect();
        let support = gens.iter().map(|u| gens.iter().map(|w| q(u, w).support()).collect()).collect();
        Self { var, support }
    }

    /// Variables generating `(prefix) : u` when that colon is generated by
    /// variables; `None` otherwise.
    fn linear_colon(&self, prefix: &[usize], u: usize) -> Option<Vec<usize>> {
        let mut vars = BitSet::new();
        for &w in prefix {
            if let Some(x) = self.var[u][w] {
                vars.insert(x);
            }
        }
        prefix
            .iter()
            .all(|&v| !self.support[u][v].is_disjoint(&vars))
            .then(|| vars.iter().collect())
    }
}

struct Search<'a> {
    gens: &'a [Monomial],
    table: ColonTable,
    dead: HashSet<BitSet>,
    meter: Meter,
}

impl Search<'_> {
    fn dfs(&mut self, placed: &mut BitSet, order: &mut Vec<usize>, colons: &mut Vec<Vec<usize>>) -> Result<bool> {
        let m = self.gens.len();
        if order.len() == m {
            return Ok(true);
        }
        if self.dead.contains(placed) {
            return Ok(false);
        }
        self.meter.tick()?;
        // whether u is addable depends only on the set already placed
        let mut next: Vec<(usize, Vec<usize>)> = (0..m)
            .filter(|&u| !placed.contains(u))
            .filter_map(|u| self.table.linear_colon(order, u).map(|c| (u, c)))
            .collect();
        next.sort_by_key(|(u, _)| (self.gens[*u].degree(), *u));
        for (u, colon) in next {
            placed.insert(u);
            order.push(u);
            colons.push(colon);
            if self.dfs(placed, order, colons)? {
                return Ok(true);
            }
            placed.remove(u);
            order.pop();
            colons.pop();
        }
        self.dead.insert(placed.clone());
        Ok(false)
    }
}

/// Search for a linear-quotient order of the minimal generators of `ideal`,
/// lowest degrees first. `Refuted` means every order was ruled out.
pub fn linear_quotients_order(ideal: &MonomialIdeal, budget: &Budget) -> Result<LqCertificate> {
    let gens = ideal.generators();
    let mut search = Search { gens, table: ColonTable::new(gens), dead: HashSet::new(), meter: Meter::new(*budget) };
    let (mut placed, mut order, mut colons) = (BitSet::new(), Vec::new(), Vec::new());
    let found = search.dfs(&mut placed, &mut order, &mut colons)?;
    log::debug!("linear quotients search: {} nodes, found = {found}", search.meter.nodes);
    Ok(if found { LqCertificate::Order { order, colon_vars: colons } } else { LqCertificate::Refuted })
}

/// Re-check an order with ideal arithmetic: each prefix colon must equal
/// the ideal of the recorded variables.
pub fn validate_lq_order(ideal: &MonomialIdeal, order: &[usize], colon_vars: &[Vec<usize>]) -> Result<()> {
    let gens = ideal.generators();
    let m = gens.len();
    let bad = |msg: String| Err(Error::InvalidCertificate(msg));
    let mut seen = vec![false; m];
    if order.len() != m || colon_vars.len() != m {
        return bad(format!("order has {} entries for {} generators", order.len(), m));
    }
    for &u in order {
        if u >= m || std::mem::replace(&mut seen[u], true) {
            return bad(format!("order is not a permutation (entry {u})"));
        }
    }
    let ring = ideal.ring().clone();
    for s in 0..m {
        let u = &gens[order[s]];
        if s == 0 {
            if !colon_vars[0].is_empty() {
                return bad("first step lists colon variables".into());
            }
            continue;
        }
        if let Some(&x) = colon_vars[s].iter().find(|&&x| x >= ring.nvars()) {
            return bad(format!("variable index {x} out of range"));
        }
        let prefix = MonomialIdeal::new(ring.clone(), order[..s].iter().map(|&i| gens[i].clone()).collect())?;
        let colon = prefix.colon_by_monomial(u)?;
        let expected = MonomialIdeal::variables(ring.clone(), &colon_vars[s]);
        if colon != expected {
            return bad(format!("step {s}: colon is {}, recorded {}", colon.render(), expected.render()));
        }
    }
    Ok(())
}

/// Independent re-check of a refutation: a breadth-first sweep over the
/// reachable prefix sets, deciding each extension by ideal arithmetic.
pub fn confirm_lq_refutation(ideal: &MonomialIdeal, budget: &Budget) -> Result<bool> {
    let gens = ideal.generators();
    let m = gens.len();
    if m == 0 {
        return Ok(false);
    }
    let ring = ideal.ring().clone();
    let mut meter = Meter::new(*budget);
    let mut layer: HashSet<BitSet> = [BitSet::new()].into_iter().collect();
    for _ in 0..m {
        let mut next = HashSet::new();
        for placed in &layer {
            meter.tick()?;
            let prefix = MonomialIdeal::new(ring.clone(), placed.iter().map(|i| gens[i].clone()).collect())?;
            for u in (0..m).filter(|&u| !placed.contains(u)) {
                let linear = placed.is_empty()
                    || prefix.colon_by_monomial(&gens[u])?.generators().iter().all(|g| g.degree() == 1);
                if linear {
                    let mut p = placed.clone();
                    p.insert(u);
                    next.insert(p);
                }
            }
        }
        if next.is_empty() {
            return Ok(true);
        }
        layer = next;
    }
    Ok(false)
}

/// Check any certificate against `ideal`. Refutations are re-derived by
/// [`confirm_lq_refutation`] within `budget`.
pub fn validate_lq(ideal: &MonomialIdeal, cert: &LqCertificate, budget: &Budget) -> Result<()> {
    match cert {
        LqCertificate::Order { order, colon_vars } => validate_lq_order(ideal, order, colon_vars),
        LqCertificate::Refuted => {
            if confirm_lq_refutation(ideal, budget)? {
                Ok(())
            } else {
                Err(Error::InvalidCertificate("an admissible order exists".into()))
            }
        }
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Betti numbers from a linear-quotient order: step `s` with `r` colon
/// variables contributes `C(r, i)` to `β_{i, deg(u_s) + i}`. They do not
/// depend on the field, so the table carries field tag 0.
pub fn betti_from_linear_quotients(ideal: &MonomialIdeal, cert: &LqCertificate) -> Result<BettiTable> {
    let LqCertificate::Order { order, colon_vars } = cert else {
        return Err(Error::InvalidCertificate("refutation carries no order".into()));
    };
    validate_lq_order(ideal, order, colon_vars)?;
    let mut t = BettiTable::new(0);
    for (&u, vars) in order.iter().zip(colon_vars) {
        let d = ideal.generators()[u].degree();
        let r = vars.len() as u64;
        for i in 0..=r {
            t.add(i as usize, d + i as u32, binomial(r, i));
        }
    }
    Ok(t)
}
