//! The maps between blocks and digraphs.
//!
//! `ψ` sends the reducible `u_i` to the vertex `v_i` and the interval
//! `[u_i, u_j]` to the arc `(v_i, v_j)` labeled `rank(n, i, j)`. Restricted to
//! the intervals that are adjunct pairs of a block `F`, it yields the digraph
//! `φ(F)`; `φ⁻¹` rebuilds the block from the arc labels.

use num_bigint::BigUint;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::counting::{count_d, count_d_oracle, count_f};
use crate::error::{Error, Result};
use crate::fbb::{analyze_block_shape, build_fbb, Fbb};
use crate::graphs::{enumerate_masks, DirectedLabeledGraph};
use crate::labeling::{pair_count, rank, unrank, RankSet};

/// Member of the class associated with a block: a reducible or an interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassItem {
    Reducible(u32),
    Interval(u32, u32),
}

/// Vertex or labeled arc of directed `K_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GraphItem {
    Vertex(u32),
    Arc { i: u32, j: u32, label: u32 },
}

/// Reducibles `u_1..u_n` plus the intervals `[u_i, u_j]` that are present,
/// keyed by label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociatedClass {
    n: u32,
    intervals: RankSet,
}

impl AssociatedClass {
    /// The full class of `CF(n)`: all `C(n, 2)` intervals.
    pub fn full(n: u32) -> Result<Self> {
        Ok(AssociatedClass {
            n,
            intervals: RankSet::full(n)?,
        })
    }

    /// Intervals read off the adjunct pairs of `f`'s lattice structure.
    pub fn of_block(f: &Fbb) -> Result<Self> {
        let shape = analyze_block_shape(f.poset())?;
        if shape.reducibles.len() as u32 != f.n() {
            return Err(Error::Domain(format!(
                "block has {} reducibles, expected {}",
                shape.reducibles.len(),
                f.n()
            )));
        }
        let intervals = RankSet::from_pairs(f.n(), shape.pairs.iter().copied())?;
        if intervals.len() != shape.pairs.len() {
            return Err(Error::Domain("repeated adjunct pair".to_string()));
        }
        Ok(AssociatedClass {
            n: f.n(),
            intervals,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn intervals(&self) -> &RankSet {
        &self.intervals
    }

    pub fn items(&self) -> Vec<ClassItem> {
        (1..=self.n)
            .map(ClassItem::Reducible)
            .chain(
                self.intervals
                    .pairs()
                    .map(|(i, j)| ClassItem::Interval(i, j)),
            )
            .collect()
    }
}

/// `ψ` for a fixed `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Psi {
    n: u32,
}

pub fn psi(n: u32) -> Result<Psi> {
    rank(n, 1, 2)?;
    Ok(Psi { n })
}

impl Psi {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn apply(&self, item: ClassItem) -> Result<GraphItem> {
        match item {
            ClassItem::Reducible(i) if (1..=self.n).contains(&i) => Ok(GraphItem::Vertex(i)),
            ClassItem::Reducible(i) => Err(Error::Domain(format!(
                "no reducible u{i} when n = {}",
                self.n
            ))),
            ClassItem::Interval(i, j) => Ok(GraphItem::Arc {
                i,
                j,
                label: rank(self.n, i, j)?.get(),
            }),
        }
    }

    pub fn invert(&self, item: GraphItem) -> Result<ClassItem> {
        match item {
            GraphItem::Vertex(v) if (1..=self.n).contains(&v) => Ok(ClassItem::Reducible(v)),
            GraphItem::Vertex(v) => {
                Err(Error::Domain(format!("no vertex v{v} when n = {}", self.n)))
            }
            GraphItem::Arc { label, .. } => {
                let (i, j) = unrank(self.n, label as u64)?;
                Ok(ClassItem::Interval(i, j))
            }
        }
    }

    /// The whole bijection, reducibles first, then intervals by label.
    pub fn table(&self) -> Vec<(ClassItem, GraphItem)> {
        AssociatedClass::full(self.n)
            .expect("n validated")
            .items()
            .into_iter()
            .map(|c| (c, self.apply(c).expect("item of the full class")))
            .collect()
    }
}

/// `φ(F)`: one arc per adjunct pair, found from the lattice structure.
pub fn phi(f: &Fbb) -> Result<DirectedLabeledGraph> {
    let class = AssociatedClass::of_block(f)?;
    Ok(DirectedLabeledGraph::from_ranks(class.intervals))
}

/// `φ⁻¹(G)`: the block whose adjunct pairs are the arcs of `G`.
pub fn phi_inverse(g: &DirectedLabeledGraph) -> Result<Fbb> {
    let isolated = g.isolated_vertices();
    if !isolated.is_empty() {
        return Err(Error::Domain(format!("vertices {isolated:?} are isolated")));
    }
    build_fbb(g.n(), g.ranks())
}

/// Outcome of checking `f(n, l) = d(n, l)` on one cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub n: u32,
    pub l: u64,
    /// `|𝒟(n, l)|` by subset scan.
    pub enumerated: u64,
    /// Graphs whose `φ⁻¹` image is a fundamental basic block of nullity `l`
    /// on `n` reducibles and which survive both round trips.
    pub passed: u64,
    pub count_d: BigUint,
    pub count_d_oracle: BigUint,
    pub count_f: BigUint,
    pub mismatches: Vec<String>,
}

impl EquivalenceReport {
    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn check_graph(n: u32, l: u64, mask: u64) -> std::result::Result<(), String> {
    let ranks = RankSet::from_mask(n, mask).map_err(|e| e.to_string())?;
    let g = DirectedLabeledGraph::from_ranks(ranks);
    let f = phi_inverse(&g).map_err(|e| format!("phi_inverse({mask:#b}): {e}"))?;
    if f.nullity() as u64 != l {
        return Err(format!(
            "phi_inverse({mask:#b}) has nullity {}, expected {l}",
            f.nullity()
        ));
    }
    let red = f.poset().classify().reducible.len();
    if red != n as usize {
        return Err(format!(
            "phi_inverse({mask:#b}) has {red} reducibles, expected {n}"
        ));
    }
    if !f.is_fundamental() {
        return Err(format!(
            "phi_inverse({mask:#b}) is not a fundamental basic block"
        ));
    }
    let back = phi(&f).map_err(|e| format!("phi(phi_inverse({mask:#b})): {e}"))?;
    if back != g {
        return Err(format!("phi(phi_inverse({mask:#b})) = {:?}", back.ranks()));
    }
    let again = phi_inverse(&back).map_err(|e| e.to_string())?;
    if again != f {
        return Err(format!("phi_inverse(phi(F)) differs from F for {mask:#b}"));
    }
    Ok(())
}

/// Enumerates `𝒟(n, l)`, pushes every graph through `φ⁻¹` and back, checks
/// each image is a fundamental basic block, and compares the count with
/// both recurrences and the inclusion–exclusion oracle.
pub fn verify_equivalence(n: u32, l: u64, cap: u32) -> Result<EquivalenceReport> {
    let masks = enumerate_masks(n, l, cap)?;
    #[cfg(feature = "parallel")]
    let outcomes: Vec<std::result::Result<(), String>> =
        masks.par_iter().map(|&m| check_graph(n, l, m)).collect();
    #[cfg(not(feature = "parallel"))]
    let outcomes: Vec<std::result::Result<(), String>> =
        masks.iter().map(|&m| check_graph(n, l, m)).collect();
    let mut mismatches: Vec<String> = outcomes.iter().filter_map(|o| o.clone().err()).collect();
    let passed = outcomes.iter().filter(|o| o.is_ok()).count() as u64;

    let enumerated = masks.len() as u64;
    let (d, oracle, f) = (count_d(n, l), count_d_oracle(n, l), count_f(n, l));
    let listed = BigUint::from(enumerated);
    if d != listed {
        mismatches.push(format!(
            "d({n},{l}) = {d} by recurrence, {listed} by enumeration"
        ));
    }
    if oracle != listed {
        mismatches.push(format!(
            "d({n},{l}) = {oracle} by inclusion-exclusion, {listed} by enumeration"
        ));
    }
    if f != listed {
        mismatches.push(format!(
            "f({n},{l}) = {f} by recurrence, {listed} by enumeration"
        ));
    }
    if l > pair_count(n) && enumerated != 0 {
        mismatches.push(format!("graphs with {l} > C({n},2) edges were enumerated"));
    }
    Ok(EquivalenceReport {
        n,
        l,
        enumerated,
        passed,
        count_d: d,
        count_d_oracle: oracle,
        count_f: f,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fbb::build_cf;

    #[test]
    fn psi_examples() {
        let p4 = psi(4).unwrap();
        assert_eq!(
            p4.apply(ClassItem::Interval(2, 3)).unwrap(),
            GraphItem::Arc {
                i: 2,
                j: 3,
                label: 4
            }
        );
        assert_eq!(
            p4.apply(ClassItem::Interval(1, 2)).unwrap(),
            GraphItem::Arc {
                i: 1,
                j: 2,
                label: 1
            }
        );
        let p5 = psi(5).unwrap();
        assert_eq!(
            p5.apply(ClassItem::Interval(2, 4)).unwrap(),
            GraphItem::Arc {
                i: 2,
                j: 4,
                label: 6
            }
        );
        assert_eq!(
            p4.apply(ClassItem::Reducible(3)).unwrap(),
            GraphItem::Vertex(3)
        );
        assert!(p4.apply(ClassItem::Reducible(5)).is_err());
        assert!(psi(1).is_err());
    }

    #[test]
    fn psi_is_a_bijection() {
        for n in 2..=9 {
            let p = psi(n).unwrap();
            let table = p.table();
            assert_eq!(table.len() as u64, n as u64 + pair_count(n));
            let mut images: Vec<_> = table.iter().map(|&(_, g)| g).collect();
            images.sort();
            images.dedup();
            assert_eq!(images.len(), table.len());
            for (c, g) in table {
                assert_eq!(p.invert(g).unwrap(), c);
            }
        }
    }

    #[test]
    fn phi_examples() {
        let f = build_fbb(4, &RankSet::from_labels(4, [1, 3, 4, 5]).unwrap()).unwrap();
        let g = phi(&f).unwrap();
        let labels: Vec<u32> = g.labeled_arcs().iter().map(|&(_, _, k)| k).collect();
        assert_eq!(labels, vec![1, 3, 4, 5]);

        let k4 = phi(&build_cf(4).unwrap().into_fbb()).unwrap();
        assert_eq!(k4.ranks(), &RankSet::full(4).unwrap());

        let f2 = build_fbb(2, &RankSet::full(2).unwrap()).unwrap();
        assert_eq!(phi(&f2).unwrap().labeled_arcs(), vec![(1, 2, 1)]);
    }

    #[test]
    fn phi_inverse_examples() {
        let g = DirectedLabeledGraph::from_arcs(4, [(1, 2), (1, 4), (2, 3), (2, 4)]).unwrap();
        let f = phi_inverse(&g).unwrap();
        assert_eq!(f.ranks().iter().collect::<Vec<_>>(), vec![1, 3, 4, 5]);
        assert_eq!(f.poset().len(), 10);

        let k4 = DirectedLabeledGraph::from_ranks(RankSet::full(4).unwrap());
        assert_eq!(phi_inverse(&k4).unwrap(), build_cf(4).unwrap().into_fbb());

        let lonely = DirectedLabeledGraph::from_arcs(3, [(1, 2)]).unwrap();
        assert!(matches!(phi_inverse(&lonely), Err(Error::Domain(_))));
    }

    #[test]
    fn associated_class_sizes() {
        assert_eq!(AssociatedClass::full(5).unwrap().intervals().len(), 10);
        let f = build_fbb(4, &RankSet::from_labels(4, [1, 3, 4, 5]).unwrap()).unwrap();
        let class = AssociatedClass::of_block(&f).unwrap();
        assert_eq!(class.intervals().len(), f.nullity());
        assert_eq!(class.items().len(), 4 + 4);
    }

    #[test]
    fn equivalence_examples() {
        let r = verify_equivalence(4, 4, 7).unwrap();
        assert!(r.is_ok(), "{:?}", r.mismatches);
        assert_eq!(r.enumerated, 15);
        assert_eq!(r.count_f, BigUint::from(15u32));

        let r = verify_equivalence(2, 1, 7).unwrap();
        assert!(r.is_ok());
        assert_eq!(r.enumerated, 1);

        let r = verify_equivalence(4, 1, 7).unwrap();
        assert!(r.is_ok());
        assert_eq!(r.enumerated, 0);
        assert_eq!(r.count_d, BigUint::from(0u32));
    }
}
