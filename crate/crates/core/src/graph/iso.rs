//! Backtracking graph isomorphism for small graphs.

use super::Graph;
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`isomorphism`].
pub const ISOMORPHISM_CAP: usize = 16;

/// A bijection `map` with `{u, v}` an edge of `g` iff `{map[u], map[v]}` is
/// an edge of `h`, or `None` if the graphs are not isomorphic.
pub fn isomorphism(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    let n = g.n().max(h.n());
    if n > ISOMORPHISM_CAP {
        return Err(Error::TooLarge { what: "graph for isomorphism", size: n, cap: ISOMORPHISM_CAP });
    }
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let deg_g: Vec<usize> = (0..g.n()).map(|v| g.adjacency(v).len()).collect();
    let deg_h: Vec<usize> = (0..h.n()).map(|v| h.adjacency(v).len()).collect();
    let mut sorted_g = deg_g.clone();
    let mut sorted_h = deg_h.clone();
    sorted_g.sort_unstable();
    sorted_h.sort_unstable();
    if sorted_g != sorted_h {
        return Ok(None);
    }
    // place high-degree vertices first: they constrain the rest the most
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(deg_g[v]));
    let mut map = vec![usize::MAX; g.n()];
    let mut used = vec![false; h.n()];
    let found = extend(g, h, &deg_g, &deg_h, &order, 0, &mut map, &mut used);
    Ok(found.then_some(map))
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    deg_g: &[usize],
    deg_h: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..h.n() {
        if used[w] || deg_h[w] != deg_g[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(g, h, deg_g, deg_h, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}
