//! Edge ideals, cover ideals and symbolic powers of cover ideals.

use std::sync::Arc;

use super::{Monomial, MonomialIdeal, Ring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// The ring with one variable per vertex, named by the vertex labels.
pub fn vertex_ring(g: &Graph) -> Arc<Ring> {
    Ring::new(g.labels().iter().cloned()).expect("vertex labels are distinct")
}

/// `I(G)`, generated by `x_u x_v` over edges.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let ring = vertex_ring(g);
    let n = ring.nvars();
    let ms = g
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let mut m = Monomial::var(n, u);
            m = m.lcm(&Monomial::var(n, v));
            m
        })
        .collect();
    MonomialIdeal::new(ring, ms).expect("arity matches")
}

/// `J(G)`, generated by the products of the minimal vertex covers. An
/// edgeless graph has the empty cover only, so `J` is the unit ideal.
pub fn cover_ideal(g: &Graph) -> Result<MonomialIdeal> {
    let j = MonomialIdeal::from_supports(vertex_ring(g), &g.minimal_vertex_covers()?)?;
    debug_assert_eq!(Ok(&j), cover_ideal_by_intersection(g).as_ref());
    Ok(j)
}

/// `J(G)` computed as the intersection of the edge primes `(x_u, x_v)`.
pub fn cover_ideal_by_intersection(g: &Graph) -> Result<MonomialIdeal> {
    symbolic_power_cover(g, 1)
}

/// `J(G)^(k)`, the intersection of `(x_u, x_v)^k` over the edges.
pub fn symbolic_power_cover(g: &Graph, k: u32) -> Result<MonomialIdeal> {
    if k < 1 {
        return Err(Error::InvalidArgument(format!("symbolic power exponent {k} (must be >= 1)")));
    }
    let ring = vertex_ring(g);
    let mut acc = MonomialIdeal::unit(ring.clone());
    for (u, v) in g.edges() {
        let prime = MonomialIdeal::variables(ring.clone(), &[u, v]);
        acc = acc.intersect(&prime.power(k)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_graph, cycle_graph, path_graph};
    use crate::ideal::tests::{ideal, ring};

    #[test]
    fn single_edge() {
        let g = complete_graph(2);
        assert_eq!(edge_ideal(&g).render(), "(x1*x2)");
        assert_eq!(cover_ideal(&g).unwrap().render(), "(x1, x2)");
    }

    #[test]
    fn four_cycle() {
        let g = cycle_graph(4).unwrap();
        let r = ring(4);
        assert_eq!(cover_ideal(&g).unwrap(), ideal(&r, &[&[1, 0, 1, 0], &[0, 1, 0, 1]]));
        assert_eq!(edge_ideal(&g).alexander_dual().unwrap(), cover_ideal(&g).unwrap());
    }

    #[test]
    fn edgeless_graph_has_unit_cover_ideal() {
        let g = Graph::new(["a", "b"]).unwrap();
        assert!(cover_ideal(&g).unwrap().is_unit());
        assert!(cover_ideal_by_intersection(&g).unwrap().is_unit());
        assert!(symbolic_power_cover(&g, 3).unwrap().is_unit());
        assert!(edge_ideal(&g).is_zero());
    }

    #[test]
    fn symbolic_power_basics() {
        let g = path_graph(3);
        assert_eq!(symbolic_power_cover(&g, 1).unwrap(), cover_ideal(&g).unwrap());
        assert!(matches!(symbolic_power_cover(&g, 0), Err(Error::InvalidArgument(_))));
        // bipartite: symbolic and ordinary powers agree
        let j = cover_ideal(&g).unwrap();
        assert_eq!(symbolic_power_cover(&g, 2).unwrap(), j.power(2).unwrap());
        // the triangle does not: x1 x2 x3 is in J^(2) but not in J^2
        let k3 = complete_graph(3);
        let j = cover_ideal(&k3).unwrap();
        let s2 = symbolic_power_cover(&k3, 2).unwrap();
        assert!(s2.contains(&Monomial::new(vec![1, 1, 1])));
        assert!(!j.power(2).unwrap().contains(&Monomial::new(vec![1, 1, 1])));
    }
}
