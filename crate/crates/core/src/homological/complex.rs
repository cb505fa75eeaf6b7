//! Simplicial complexes given by facets, and their reduced homology.

use std::collections::{BTreeMap, HashMap, HashSet};

use super::fp::{Field, RowReducer};
use crate::bitset::{bits, VertexSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideal::MonomialIdeal;

/// Ground-set cap for [`reduced_homology_ranks`].
pub const HOMOLOGY_VERTEX_CAP: usize = 20;

/// Cap on the number of faces materialized by the homology kernel.
pub const FACE_CAP: usize = 1 << 22;

/// A simplicial complex stored by its facets. No facets is the void
/// complex; a single empty facet is the complex `{∅}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground: Vec<String>,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Keeps only the inclusion-maximal sets among `faces`.
    pub fn new(ground: Vec<String>, faces: Vec<VertexSet>) -> Result<Self> {
        let n = ground.len();
        if let Some(f) = faces.iter().find(|f| f.max_element().is_some_and(|m| m >= n)) {
            return Err(Error::InvalidVertex { index: f.max_element().unwrap_or(0), n });
        }
        let mut faces = faces;
        faces.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        faces.dedup();
        let mut facets: Vec<VertexSet> = Vec::new();
        for f in faces {
            if !facets.iter().any(|g| f.is_subset(g)) {
                facets.push(f);
            }
        }
        facets.sort();
        Ok(Self { ground, facets })
    }

    pub fn void(ground: Vec<String>) -> Self {
        Self { ground, facets: Vec::new() }
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains(&self, face: &VertexSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(f))
    }

    /// Largest facet size minus one; `None` for the void complex.
    pub fn dimension(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.len() as i64 - 1).max()
    }
}

/// `Δ(G)`: the independent sets of `g`.
pub fn independence_complex(g: &Graph) -> Result<SimplicialComplex> {
    SimplicialComplex::new(g.labels().to_vec(), g.maximal_independent_sets()?)
}

/// The complex whose faces are the squarefree monomials outside `ideal`.
/// Its facets are the complements of the generators of the Alexander dual.
pub fn stanley_reisner(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    let dual = ideal.alexander_dual()?;
    let all = VertexSet::full(ideal.ring().nvars());
    let facets = dual.generators().iter().map(|g| all.difference(&g.support())).collect();
    SimplicialComplex::new(ideal.ring().vars().to_vec(), facets)
}

/// Reduced homology over `F_p`, keyed by dimension from −1 up to the
/// dimension of `c`. Every value is present, zeros included.
pub fn reduced_homology_ranks(c: &SimplicialComplex, p: u32) -> Result<BTreeMap<i64, u64>> {
    let field = Field::new(p)?;
    if c.ground.len() > HOMOLOGY_VERTEX_CAP {
        return Err(Error::TooLarge { what: "ground set", size: c.ground.len(), cap: HOMOLOGY_VERTEX_CAP });
    }
    let facets: Vec<u64> = c.facets.iter().map(VertexSet::low_word).collect();
    let ranks = facet_homology(facets, field)?;
    let top = c.dimension().unwrap_or(-1);
    Ok((-1..=top).map(|d| (d, ranks.get((d + 1) as usize).copied().unwrap_or(0))).collect())
}

/// Drop duplicates and non-maximal sets.
fn maximalize(facets: &mut Vec<u64>) {
    facets.sort_by_key(|f| std::cmp::Reverse(f.count_ones()));
    facets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(facets.len());
    for &f in facets.iter() {
        if !kept.iter().any(|&g| f & !g == 0) {
            kept.push(f);
        }
    }
    *facets = kept;
}

/// Remove dominated vertices until none remain. A vertex `v` is dominated
/// by `w` when every facet through `v` also contains `w`; deleting `v` is a
/// strong collapse and preserves the homotopy type.
fn strong_core(mut facets: Vec<u64>) -> Vec<u64> {
    loop {
        maximalize(&mut facets);
        let verts = facets.iter().fold(0u64, |a, f| a | f);
        let mut changed = false;
        for v in bits(verts) {
            let bit = 1u64 << v;
            let mut witness = verts & !bit;
            let mut any = false;
            for &f in &facets {
                if f & bit != 0 {
                    witness &= f;
                    any = true;
                }
            }
            if any && witness != 0 {
                for f in &mut facets {
                    *f &= !bit;
                }
                changed = true;
            }
        }
        if !changed {
            return facets;
        }
    }
}

/// The nerve of the facet cover, described by its own facets: for each
/// vertex, the set of facets containing it.
fn dual_facets(facets: &[u64]) -> Vec<u64> {
    let verts = facets.iter().fold(0u64, |a, f| a | f);
    bits(verts)
        .map(|v| {
            facets
                .iter()
                .enumerate()
                .filter(|(_, f)| *f & (1 << v) != 0)
                .fold(0u64, |a, (i, _)| a | 1 << i)
        })
        .collect()
}

fn face_estimate(facets: &[u64]) -> u128 {
    facets.iter().map(|f| 1u128 << f.count_ones()).sum()
}

/// Reduced Betti numbers of the complex generated by `facets`; entry `d + 1`
/// is the rank in dimension `d`. Trailing zeros may be omitted.
pub(crate) fn facet_homology(facets: Vec<u64>, field: Field) -> Result<Vec<u64>> {
    if facets.is_empty() {
        return Ok(Vec::new());
    }
    let mut facets = strong_core(facets);
    if facets.len() == 1 {
        return Ok(if facets[0] == 0 { vec![1] } else { Vec::new() });
    }
    if facets.len() <= 64 {
        let dual = strong_core(dual_facets(&facets));
        if face_estimate(&dual) < face_estimate(&facets) {
            facets = dual;
            if facets.len() == 1 {
                return Ok(Vec::new());
            }
        }
    }
    chain_homology(&facets, field)
}

fn chain_homology(facets: &[u64], field: Field) -> Result<Vec<u64>> {
    if face_estimate(facets) > (FACE_CAP as u128) * 4 {
        return Err(Error::TooLarge { what: "simplicial complex faces", size: usize::MAX, cap: FACE_CAP });
    }
    let mut faces: HashSet<u64> = HashSet::new();
    for &f in facets {
        let mut sub = f;
        loop {
            faces.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & f;
        }
        if faces.len() > FACE_CAP {
            return Err(Error::TooLarge { what: "simplicial complex faces", size: faces.len(), cap: FACE_CAP });
        }
    }
    let top = facets.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    // by_size[s] holds the faces with s vertices (dimension s - 1)
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    for layer in &mut by_size {
        layer.sort_unstable();
    }
    // rank of the boundary map out of size-s faces, s >= 1
    let mut rank = vec![0usize; top + 2];
    for s in 1..=top {
        let index: HashMap<u64, usize> = by_size[s - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut red = RowReducer::new(field);
        for &f in &by_size[s] {
            let mut row: Vec<(usize, u32)> = bits(f)
                .enumerate()
                .map(|(pos, v)| (index[&(f & !(1 << v))], field.sign(pos % 2 == 1)))
                .collect();
            row.sort_unstable_by_key(|e| e.0);
            red.push(row);
        }
        rank[s] = red.rank();
    }
    Ok((0..=top)
        .map(|s| (by_size[s].len() - rank[s] - rank[s + 1]) as u64)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{complete, cycle};

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        let ground = (1..=n).map(|i| format!("x{i}")).collect();
        SimplicialComplex::new(ground, facets.iter().map(|f| f.iter().copied().collect()).collect()).unwrap()
    }

    fn ranks(c: &SimplicialComplex, p: u32) -> Vec<u64> {
        reduced_homology_ranks(c, p).unwrap().into_values().collect()
    }

    #[test]
    fn basic_spaces() {
        // hollow triangle
        assert_eq!(ranks(&cx(3, &[&[0, 1], &[1, 2], &[0, 2]]), 2), [0, 0, 1]);
        // full simplex
        assert_eq!(ranks(&cx(3, &[&[0, 1, 2]]), 3), [0, 0, 0, 0]);
        // two points
        assert_eq!(ranks(&cx(2, &[&[0], &[1]]), 2), [0, 1]);
        // {∅} versus the void complex
        assert_eq!(ranks(&cx(2, &[&[]]), 2), [1]);
        assert_eq!(ranks(&SimplicialComplex::void(vec![]), 2), [0]);
        // hollow tetrahedron
        let sphere = cx(4, &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        assert_eq!(ranks(&sphere, 5), [0, 0, 0, 1]);
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // six-vertex triangulation of RP^2
        let rp2 = cx(
            6,
            &[
                &[0, 1, 2], &[0, 2, 3], &[0, 3, 4], &[0, 4, 5], &[0, 1, 5],
                &[1, 2, 4], &[2, 3, 5], &[1, 3, 4], &[1, 3, 5], &[2, 4, 5],
            ],
        );
        assert_eq!(ranks(&rp2, 2), [0, 0, 1, 1]);
        assert_eq!(ranks(&rp2, 3), [0, 0, 0, 0]);
    }

    #[test]
    fn independence_complexes() {
        let k3 = independence_complex(&complete(3)).unwrap();
        assert_eq!(k3.facets().len(), 3);
        assert!(k3.facets().iter().all(|f| f.len() == 1));
        let c4 = independence_complex(&cycle(4)).unwrap();
        assert_eq!(c4.facets(), &[VertexSet::from_word(0b0101), VertexSet::from_word(0b1010)]);
        assert_eq!(ranks(&c4, 2), [0, 1, 0]);
    }

    #[test]
    fn stanley_reisner_of_edge_ideal() {
        for g in [cycle(5), complete(4), cycle(6)] {
            let c = stanley_reisner(&crate::ideal::edge_ideal(&g)).unwrap();
            assert_eq!(c, independence_complex(&g).unwrap());
        }
    }

    #[test]
    fn stanley_reisner_extremes() {
        let r = crate::ideal::tests::ring(2);
        assert!(stanley_reisner(&MonomialIdeal::unit(r.clone())).unwrap().is_void());
        let full = stanley_reisner(&MonomialIdeal::zero(r)).unwrap();
        assert_eq!(full.facets(), &[VertexSet::full(2)]);
    }

    #[test]
    fn caps_and_primes() {
        assert_eq!(reduced_homology_ranks(&cx(2, &[&[0]]), 4), Err(Error::NotPrime(4)));
        let big = SimplicialComplex::void((0..21).map(|i| i.to_string()).collect());
        assert!(matches!(reduced_homology_ranks(&big, 2), Err(Error::TooLarge { .. })));
    }

    /// Homology straight from all faces, no collapsing.
    fn brute(facets: &[u64], field: Field) -> Vec<u64> {
        if facets.is_empty() {
            return Vec::new();
        }
        let mut v = chain_homology(facets, field).unwrap();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    proptest::proptest! {
        #[test]
        fn collapsing_preserves_homology(
            raw in proptest::collection::vec(0u64..(1 << 7), 0..7),
            p in proptest::sample::select(vec![2u32, 3]),
        ) {
            let field = Field::new(p).unwrap();
            let mut fast = facet_homology(raw.clone(), field).unwrap();
            while fast.last() == Some(&0) {
                fast.pop();
            }
            let mut m = raw.clone();
            maximalize(&mut m);
            proptest::prop_assert_eq!(fast, brute(&m, field));
        }
    }
}
