//! Labeled graphs on vertices `1..=n`, their `i < j` orientation, and
//! enumeration of the graphs without isolated vertices.
//!
//! Edge sets are [`RankSet`]s: an edge `{i, j}` is stored as its label
//! `rank(n, i, j)`. Label-preserving isomorphism is therefore plain set
//! equality, and the edge set of a graph is the same object as the label set
//! of the corresponding block.

use crate::error::{Error, Result};
use crate::labeling::{pair_count, rank, RankSet};

/// Default ceiling on `n` for exhaustive enumeration (`2^21` subsets at 7).
pub const DEFAULT_ENUMERATION_CAP: u32 = 7;

/// Hard ceiling: the subset scan works on 64-bit masks.
pub const MAX_ENUMERATION_N: u32 = 11;

/// Undirected labeled graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledGraph {
    edges: RankSet,
}

/// Subgraph of directed `K_n`: every arc runs from the lower label to the higher.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectedLabeledGraph {
    arcs: RankSet,
}

impl LabeledGraph {
    /// Edges may be given in either orientation. Loops, out-of-range
    /// endpoints and repeated edges are rejected.
    pub fn from_edges(n: u32, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut set = RankSet::empty(n)?;
        for (a, b) in edges {
            let (i, j) = (a.min(b), a.max(b));
            let k = rank(n, i, j)?.get() as u64;
            if !set.insert(k)? {
                return Err(Error::Domain(format!("edge {{{i}, {j}}} listed twice")));
            }
        }
        Ok(LabeledGraph { edges: set })
    }

    pub fn from_ranks(edges: RankSet) -> Self {
        LabeledGraph { edges }
    }

    pub fn n(&self) -> u32 {
        self.edges.n()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn ranks(&self) -> &RankSet {
        &self.edges
    }

    /// Edges `(i, j)` with `i < j`, in dictionary order.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        self.edges.pairs().collect()
    }

    /// Vertices incident to no edge.
    pub fn isolated_vertices(&self) -> Vec<u32> {
        self.edges.uncovered_vertices()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        !self.isolated_vertices().is_empty()
    }

    pub fn orient(&self) -> DirectedLabeledGraph {
        DirectedLabeledGraph {
            arcs: self.edges.clone(),
        }
    }
}

impl DirectedLabeledGraph {
    /// Fails with [`Error::Orientation`] on an arc `(i, j)` with `i ≥ j`.
    pub fn from_arcs(n: u32, arcs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut set = RankSet::empty(n)?;
        for (i, j) in arcs {
            if i >= j {
                return Err(Error::Orientation { i, j });
            }
            if !set.insert(rank(n, i, j)?.get() as u64)? {
                return Err(Error::Domain(format!("arc ({i}, {j}) listed twice")));
            }
        }
        Ok(DirectedLabeledGraph { arcs: set })
    }

    pub fn from_ranks(arcs: RankSet) -> Self {
        DirectedLabeledGraph { arcs }
    }

    pub fn n(&self) -> u32 {
        self.arcs.n()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn ranks(&self) -> &RankSet {
        &self.arcs
    }

    /// Arcs with their labels, ascending by label.
    pub fn labeled_arcs(&self) -> Vec<(u32, u32, u32)> {
        self.arcs
            .iter()
            .zip(self.arcs.pairs())
            .map(|(k, (i, j))| (i, j, k))
            .collect()
    }

    pub fn isolated_vertices(&self) -> Vec<u32> {
        self.arcs.uncovered_vertices()
    }

    pub fn forget_orientation(&self) -> LabeledGraph {
        LabeledGraph {
            edges: self.arcs.clone(),
        }
    }
}

/// `⌊(n+1)/2⌋ ≤ q ≤ C(n, 2)`.
pub fn check_bounds(n: u32, q: u64) -> bool {
    (n as u64).div_ceil(2) <= q && q <= pair_count(n)
}

/// Masks of the edges incident to each vertex `1..=n` (index `v - 1`).
fn incidence_masks(n: u32) -> Vec<u64> {
    let mut inc = vec![0u64; n as usize];
    let mut bit = 0;
    for i in 1..n {
        for j in i + 1..=n {
            inc[i as usize - 1] |= 1 << bit;
            inc[j as usize - 1] |= 1 << bit;
            bit += 1;
        }
    }
    inc
}

fn check_cap(n: u32, cap: u32) -> Result<()> {
    if n > cap.min(MAX_ENUMERATION_N) {
        return Err(Error::EnumerationCap {
            n,
            cap: cap.min(MAX_ENUMERATION_N),
        });
    }
    if n < 2 {
        return Err(Error::Domain(format!("need n >= 2, got n = {n}")));
    }
    Ok(())
}

/// Edge masks of all `q`-edge graphs on `n` vertices with no isolated
/// vertex, ascending as integers (bit `k-1` stands for label `k`).
pub fn enumerate_masks(n: u32, q: u64, cap: u32) -> Result<Vec<u64>> {
    check_cap(n, cap)?;
    let total = pair_count(n);
    if q > total {
        return Ok(Vec::new());
    }
    let inc = incidence_masks(n);
    let covers_all = |m: u64| inc.iter().all(|&v| m & v != 0);
    if q == 0 {
        return Ok(Vec::new());
    }
    let limit: u64 = if total == 64 {
        u64::MAX
    } else {
        (1u64 << total) - 1
    };
    let mut out = Vec::new();
    // Gosper's hack walks the q-subsets in increasing numeric order.
    let mut m: u64 = if q == 64 { u64::MAX } else { (1u64 << q) - 1 };
    loop {
        if covers_all(m) {
            out.push(m);
        }
        let c = m & m.wrapping_neg();
        let r = m.wrapping_add(c);
        if r == 0 || r > limit {
            break;
        }
        let next = (((r ^ m) >> 2) / c) | r;
        if next > limit {
            break;
        }
        m = next;
    }
    Ok(out)
}

/// All of `𝒟(n, q)`, ordered lexicographically by sorted label list.
pub fn enumerate_d(n: u32, q: u64, cap: u32) -> Result<Vec<LabeledGraph>> {
    let mut graphs = enumerate_masks(n, q, cap)?
        .into_iter()
        .map(|m| RankSet::from_mask(n, m).map(LabeledGraph::from_ranks))
        .collect::<Result<Vec<_>>>()?;
    graphs.sort_by_cached_key(|g| g.ranks().iter().collect::<Vec<u32>>());
    Ok(graphs)
}

/// `|𝒟(n, q)|` by the subset scan, without materializing graphs.
pub fn enumerate_count(n: u32, q: u64, cap: u32) -> Result<u64> {
    Ok(enumerate_masks(n, q, cap)?.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn orient_examples() {
        let g = LabeledGraph::from_edges(2, [(2, 1)]).unwrap();
        assert_eq!(g.orient().labeled_arcs(), vec![(1, 2, 1)]);

        let gf = LabeledGraph::from_edges(4, [(1, 2), (4, 1), (2, 3), (2, 4)]).unwrap();
        let arcs: Vec<_> = gf
            .orient()
            .labeled_arcs()
            .iter()
            .map(|&(i, j, _)| (i, j))
            .collect();
        assert_eq!(arcs, vec![(1, 2), (1, 4), (2, 3), (2, 4)]);

        let empty = LabeledGraph::from_edges(3, []).unwrap();
        assert_eq!(empty.orient().arc_count(), 0);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(LabeledGraph::from_edges(3, [(1, 1)]).is_err());
        assert!(LabeledGraph::from_edges(3, [(1, 4)]).is_err());
        assert!(LabeledGraph::from_edges(3, [(1, 2), (2, 1)]).is_err());
        assert_eq!(
            DirectedLabeledGraph::from_arcs(3, [(2, 1)]),
            Err(Error::Orientation { i: 2, j: 1 })
        );
    }

    #[test]
    fn isolated_vertex_examples() {
        let g = LabeledGraph::from_edges(4, [(1, 2)]).unwrap();
        assert_eq!(g.isolated_vertices(), vec![3, 4]);
        let gf = LabeledGraph::from_edges(4, [(1, 2), (1, 4), (2, 3), (2, 4)]).unwrap();
        assert!(!gf.has_isolated_vertex());
        let k2 = LabeledGraph::from_edges(2, [(1, 2)]).unwrap();
        assert!(k2.isolated_vertices().is_empty());
    }

    #[test]
    fn enumeration_examples() {
        let d21 = enumerate_d(2, 1, 7).unwrap();
        assert_eq!(d21.len(), 1);
        assert_eq!(d21[0].edges(), vec![(1, 2)]);

        // the three labeled paths on three vertices
        let d32 = enumerate_d(3, 2, 7).unwrap();
        let edge_sets: Vec<_> = d32.iter().map(LabeledGraph::edges).collect();
        assert_eq!(
            edge_sets,
            vec![
                vec![(1, 2), (1, 3)],
                vec![(1, 2), (2, 3)],
                vec![(1, 3), (2, 3)]
            ]
        );

        // the three perfect matchings of K_4
        let d42 = enumerate_d(4, 2, 7).unwrap();
        let edge_sets: Vec<_> = d42.iter().map(LabeledGraph::edges).collect();
        assert_eq!(
            edge_sets,
            vec![
                vec![(1, 2), (3, 4)],
                vec![(1, 3), (2, 4)],
                vec![(1, 4), (2, 3)]
            ]
        );
    }

    #[test]
    fn enumeration_cap() {
        assert_eq!(
            enumerate_d(8, 4, DEFAULT_ENUMERATION_CAP),
            Err(Error::EnumerationCap { n: 8, cap: 7 })
        );
        assert!(enumerate_d(12, 6, 20).is_err());
        assert!(enumerate_d(1, 0, 7).is_err());
        assert!(enumerate_d(4, 7, 7).unwrap().is_empty());
    }

    #[test]
    fn bounds_examples() {
        assert!(check_bounds(4, 2));
        assert!(!check_bounds(4, 1));
        assert!(check_bounds(5, 3));
        assert!(!check_bounds(5, 2));
        assert!(!check_bounds(4, 7));
    }

    /// Plain scan over every subset of J_N, filtered by popcount.
    fn brute_masks(n: u32, q: u32) -> Vec<u64> {
        let total = pair_count(n) as u32;
        (0u64..1 << total)
            .filter(|m| m.count_ones() == q)
            .filter(|&m| {
                RankSet::from_mask(n, m)
                    .unwrap()
                    .uncovered_vertices()
                    .is_empty()
            })
            .collect()
    }

    #[test]
    fn gosper_scan_matches_brute_force() {
        for n in 2..=5u32 {
            for q in 0..=pair_count(n) as u32 {
                assert_eq!(
                    enumerate_masks(n, q as u64, 7).unwrap(),
                    brute_masks(n, q),
                    "n={n} q={q}"
                );
            }
        }
    }

    proptest! {
        #[test]
        fn orientation_round_trip(n in 2u32..9, mask in any::<u64>()) {
            let bits = pair_count(n);
            let mask = if bits >= 64 { mask } else { mask & ((1 << bits) - 1) };
            let g = LabeledGraph::from_ranks(RankSet::from_mask(n, mask).unwrap());
            prop_assert_eq!(g.orient().forget_orientation(), g.clone());
            let d = g.orient();
            prop_assert_eq!(d.forget_orientation().orient(), d);
        }
    }
}
