//! Finite posets given by their cover relation.
//!
//! A [`Poset`] is built from an explicit cover list. The order relation is
//! derived from the covers at construction time and is never accepted as
//! input, so the two cannot disagree. Every query (comparability, joins and
//! meets, reducibility) goes through the derived relation.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::error::{Error, Result};

/// Opaque element identifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElemId(pub u32);

impl fmt::Display for ElemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// An element id together with its display name (`u3`, `x2`, `c5`, ...).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Element {
    pub id: ElemId,
    pub name: String,
}

impl Element {
    pub fn new(id: u32, name: impl Into<String>) -> Self {
        Element {
            id: ElemId(id),
            name: name.into(),
        }
    }
}

/// The cover graph of a poset, viewed as an undirected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverGraph {
    pub vertices: Vec<ElemId>,
    pub edges: Vec<(ElemId, ElemId)>,
    pub components: usize,
}

impl CoverGraph {
    /// Cycle rank `|E| - |V| + c`.
    pub fn nullity(&self) -> usize {
        self.edges.len() + self.components - self.vertices.len()
    }
}

/// Per-element reducibility classification.
///
/// `join_irreducible` and `meet_irreducible` follow the lattice definition
/// (`x` is join-reducible when `x = y ∨ z` for some `y, z` distinct from `x`).
/// `doubly_irreducible` follows the poset definition: at most one upper cover
/// and at most one lower cover. For lattices the two readings agree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReducibilityReport {
    pub reducible: BTreeSet<ElemId>,
    pub join_irreducible: BTreeSet<ElemId>,
    pub meet_irreducible: BTreeSet<ElemId>,
    pub doubly_irreducible: BTreeSet<ElemId>,
}

/// A finite poset. Immutable after construction.
#[derive(Clone)]
pub struct Poset {
    elements: Vec<Element>,
    covers: Vec<(usize, usize)>,
    index: HashMap<ElemId, usize>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
    // reflexive up-sets and down-sets, indexed like `elements`
    up: Vec<BitSet>,
    down: Vec<BitSet>,
    topo: Vec<usize>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && self.covers == other.covers
    }
}

impl Eq for Poset {}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<_> = self
            .covers
            .iter()
            .map(|&(a, b)| format!("{}<{}", self.elements[a].name, self.elements[b].name))
            .collect();
        f.debug_struct("Poset")
            .field(
                "elements",
                &self.elements.iter().map(|e| &e.name).collect::<Vec<_>>(),
            )
            .field("covers", &covers)
            .finish()
    }
}

impl Poset {
    /// Builds a poset from elements and cover pairs `(lower, upper)`.
    ///
    /// Rejects duplicate ids or names, unknown endpoints, repeated or
    /// reflexive covers, cycles, and covers implied by transitivity.
    pub fn new(mut elements: Vec<Element>, covers: Vec<(ElemId, ElemId)>) -> Result<Self> {
        elements.sort();
        let mut index = HashMap::with_capacity(elements.len());
        let mut names = HashSet::with_capacity(elements.len());
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.id, i).is_some() {
                return Err(Error::MalformedPoset(format!(
                    "duplicate element id {}",
                    e.id
                )));
            }
            if !names.insert(e.name.as_str()) {
                return Err(Error::MalformedPoset(format!(
                    "duplicate element name '{}'",
                    e.name
                )));
            }
        }

        let m = elements.len();
        let mut pairs = Vec::with_capacity(covers.len());
        for (a, b) in covers {
            let lookup = |id: ElemId| {
                index.get(&id).copied().ok_or_else(|| {
                    Error::MalformedPoset(format!("cover refers to unknown element {id}"))
                })
            };
            let (ia, ib) = (lookup(a)?, lookup(b)?);
            if ia == ib {
                return Err(Error::MalformedPoset(format!(
                    "reflexive cover on '{}'",
                    elements[ia].name
                )));
            }
            pairs.push((ia, ib));
        }
        pairs.sort_unstable();
        if let Some(w) = pairs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::MalformedPoset(format!(
                "repeated cover {} < {}",
                elements[w[0].0].name, elements[w[0].1].name
            )));
        }

        let mut lower = vec![Vec::new(); m];
        let mut upper = vec![Vec::new(); m];
        for &(a, b) in &pairs {
            upper[a].push(b);
            lower[b].push(a);
        }

        // Kahn's algorithm; leftover elements sit on a cycle.
        let mut indegree: Vec<usize> = lower.iter().map(Vec::len).collect();
        let mut stack: Vec<usize> = (0..m).rev().filter(|&i| indegree[i] == 0).collect();
        let mut topo = Vec::with_capacity(m);
        while let Some(x) = stack.pop() {
            topo.push(x);
            for &y in upper[x].iter().rev() {
                indegree[y] -= 1;
                if indegree[y] == 0 {
                    stack.push(y);
                }
            }
        }
        if topo.len() != m {
            let stuck = (0..m).find(|&i| indegree[i] > 0).unwrap_or(0);
            return Err(Error::MalformedPoset(format!(
                "cover relation has a cycle through '{}'",
                elements[stuck].name
            )));
        }

        let mut down: Vec<BitSet> = (0..m).map(|_| BitSet::new(m)).collect();
        for &x in &topo {
            let mut row = BitSet::new(m);
            row.insert(x);
            for &y in &lower[x] {
                row.union_with(&down[y]);
            }
            down[x] = row;
        }
        let mut up: Vec<BitSet> = (0..m).map(|_| BitSet::new(m)).collect();
        for &x in topo.iter().rev() {
            let mut row = BitSet::new(m);
            row.insert(x);
            for &y in &upper[x] {
                row.union_with(&up[y]);
            }
            up[x] = row;
        }

        for &(a, b) in &pairs {
            let mut between = up[a].clone();
            between.intersect_with(&down[b]);
            if between.len() != 2 {
                let via = between.iter().find(|&c| c != a && c != b).unwrap_or(a);
                return Err(Error::MalformedPoset(format!(
                    "cover {} < {} is implied through '{}'",
                    elements[a].name, elements[b].name, elements[via].name
                )));
            }
        }

        Ok(Poset {
            elements,
            covers: pairs,
            index,
            lower,
            upper,
            up,
            down,
            topo,
        })
    }

    /// Convenience constructor: ids are assigned by position in `names`.
    pub fn named(names: &[&str], covers: &[(&str, &str)]) -> Result<Self> {
        let elements: Vec<Element> = names
            .iter()
            .enumerate()
            .map(|(i, n)| Element::new(i as u32, *n))
            .collect();
        let id_of = |name: &str| {
            names
                .iter()
                .position(|n| *n == name)
                .map(|i| ElemId(i as u32))
                .ok_or_else(|| Error::UnknownElement(name.to_string()))
        };
        let covers = covers
            .iter()
            .map(|&(a, b)| Ok((id_of(a)?, id_of(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Poset::new(elements, covers)
    }

    /// The chain `elements[0] ≺ elements[1] ≺ ...`.
    pub fn chain(elements: Vec<Element>) -> Result<Self> {
        let covers = elements.windows(2).map(|w| (w[0].id, w[1].id)).collect();
        Poset::new(elements, covers)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in ascending id order.
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn ids(&self) -> impl Iterator<Item = ElemId> + '_ {
        self.elements.iter().map(|e| e.id)
    }

    pub fn contains(&self, id: ElemId) -> bool {
        self.index.contains_key(&id)
    }

    pub fn name(&self, id: ElemId) -> Option<&str> {
        self.index.get(&id).map(|&i| self.elements[i].name.as_str())
    }

    pub fn id_of(&self, name: &str) -> Option<ElemId> {
        self.elements.iter().find(|e| e.name == name).map(|e| e.id)
    }

    fn idx(&self, id: ElemId) -> Result<usize> {
        self.index
            .get(&id)
            .copied()
            .ok_or_else(|| Error::UnknownElement(id.to_string()))
    }

    /// Cover pairs `(lower, upper)`, sorted by element position.
    pub fn covers(&self) -> impl Iterator<Item = (ElemId, ElemId)> + '_ {
        self.covers
            .iter()
            .map(|&(a, b)| (self.elements[a].id, self.elements[b].id))
    }

    pub fn cover_count(&self) -> usize {
        self.covers.len()
    }

    pub fn lower_covers(&self, id: ElemId) -> Result<Vec<ElemId>> {
        let i = self.idx(id)?;
        Ok(self.lower[i].iter().map(|&j| self.elements[j].id).collect())
    }

    pub fn upper_covers(&self, id: ElemId) -> Result<Vec<ElemId>> {
        let i = self.idx(id)?;
        Ok(self.upper[i].iter().map(|&j| self.elements[j].id).collect())
    }

    pub fn is_cover(&self, a: ElemId, b: ElemId) -> bool {
        match (self.index.get(&a), self.index.get(&b)) {
            (Some(&ia), Some(&ib)) => self.upper[ia].contains(&ib),
            _ => false,
        }
    }

    /// `a ≤ b`. Unknown elements compare as unrelated.
    pub fn le(&self, a: ElemId, b: ElemId) -> bool {
        match (self.index.get(&a), self.index.get(&b)) {
            (Some(&ia), Some(&ib)) => self.up[ia].contains(ib),
            _ => false,
        }
    }

    pub fn lt(&self, a: ElemId, b: ElemId) -> bool {
        a != b && self.le(a, b)
    }

    pub fn comparable(&self, a: ElemId, b: ElemId) -> bool {
        self.le(a, b) || self.le(b, a)
    }

    /// All strictly comparable pairs `(a, b)` with `a < b`.
    pub fn transitive_order(&self) -> BTreeSet<(ElemId, ElemId)> {
        let mut out = BTreeSet::new();
        for (i, row) in self.up.iter().enumerate() {
            for j in row.iter().filter(|&j| j != i) {
                out.insert((self.elements[i].id, self.elements[j].id));
            }
        }
        out
    }

    pub fn cover_graph(&self) -> CoverGraph {
        CoverGraph {
            vertices: self.ids().collect(),
            edges: self.covers().collect(),
            components: self.component_count(),
        }
    }

    fn component_count(&self) -> usize {
        union_find_components(self.len(), &self.covers)
    }

    /// Nullity of the cover graph.
    pub fn nullity(&self) -> usize {
        self.covers.len() + self.component_count() - self.len()
    }

    fn least_of(&self, set: &BitSet) -> Option<usize> {
        set.iter().find(|&z| set.is_subset(&self.up[z]))
    }

    fn greatest_of(&self, set: &BitSet) -> Option<usize> {
        set.iter().find(|&z| set.is_subset(&self.down[z]))
    }

    fn join_idx(&self, a: usize, b: usize) -> Option<usize> {
        extreme_of(&self.up, a, b)
    }

    fn meet_idx(&self, a: usize, b: usize) -> Option<usize> {
        extreme_of(&self.down, a, b)
    }

    /// Join- and meet-reducible elements over all pairs, and whether every
    /// pair had both a join and a meet.
    fn reducibility_pass(&self) -> (BitSet, BitSet, bool) {
        let m = self.len();
        let mut join_red = BitSet::new(m);
        let mut meet_red = BitSet::new(m);
        let mut complete = m > 0;
        for a in 0..m {
            for b in a + 1..m {
                match self.join_idx(a, b) {
                    Some(j) if j != a && j != b => {
                        join_red.insert(j);
                    }
                    Some(_) => {}
                    None => complete = false,
                }
                match self.meet_idx(a, b) {
                    Some(z) if z != a && z != b => {
                        meet_red.insert(z);
                    }
                    Some(_) => {}
                    None => complete = false,
                }
            }
        }
        (join_red, meet_red, complete)
    }

    fn report_from(&self, join_red: &BitSet, meet_red: &BitSet) -> ReducibilityReport {
        let mut report = ReducibilityReport::default();
        for (i, e) in self.elements.iter().enumerate() {
            let (jr, mr) = (join_red.contains(i), meet_red.contains(i));
            if jr || mr {
                report.reducible.insert(e.id);
            }
            if !jr {
                report.join_irreducible.insert(e.id);
            }
            if !mr {
                report.meet_irreducible.insert(e.id);
            }
            if self.is_doubly_irreducible_idx(i) {
                report.doubly_irreducible.insert(e.id);
            }
        }
        report
    }

    /// Classification of a lattice in one pass, or `NotALattice`.
    pub fn classify_lattice(&self) -> Result<ReducibilityReport> {
        let (join_red, meet_red, complete) = self.reducibility_pass();
        if !complete {
            return Err(Error::NotALattice);
        }
        Ok(self.report_from(&join_red, &meet_red))
    }

    /// Least upper bound, when it exists.
    pub fn join(&self, a: ElemId, b: ElemId) -> Option<ElemId> {
        let (ia, ib) = (self.idx(a).ok()?, self.idx(b).ok()?);
        self.join_idx(ia, ib).map(|z| self.elements[z].id)
    }

    /// Greatest lower bound, when it exists.
    pub fn meet(&self, a: ElemId, b: ElemId) -> Option<ElemId> {
        let (ia, ib) = (self.idx(a).ok()?, self.idx(b).ok()?);
        self.meet_idx(ia, ib).map(|z| self.elements[z].id)
    }

    pub fn bottom(&self) -> Option<ElemId> {
        let mut all = BitSet::new(self.len());
        (0..self.len()).for_each(|i| {
            all.insert(i);
        });
        self.least_of(&all).map(|i| self.elements[i].id)
    }

    pub fn top(&self) -> Option<ElemId> {
        let mut all = BitSet::new(self.len());
        (0..self.len()).for_each(|i| {
            all.insert(i);
        });
        self.greatest_of(&all).map(|i| self.elements[i].id)
    }

    /// Every pair has a join and a meet. The empty poset is not a lattice.
    pub fn is_lattice(&self) -> bool {
        let m = self.len();
        if m == 0 {
            return false;
        }
        for a in 0..m {
            for b in a + 1..m {
                if self.join_idx(a, b).is_none() || self.meet_idx(a, b).is_none() {
                    return false;
                }
            }
        }
        true
    }

    fn is_doubly_irreducible_idx(&self, i: usize) -> bool {
        self.lower[i].len() <= 1 && self.upper[i].len() <= 1
    }

    pub fn is_doubly_irreducible(&self, id: ElemId) -> bool {
        self.index
            .get(&id)
            .is_some_and(|&i| self.is_doubly_irreducible_idx(i))
    }

    /// Doubly irreducible elements (poset definition), ascending by id.
    pub fn doubly_irreducible(&self) -> Vec<ElemId> {
        (0..self.len())
            .filter(|&i| self.is_doubly_irreducible_idx(i))
            .map(|i| self.elements[i].id)
            .collect()
    }

    /// Classifies every element. Join/meet reducibility is computed from
    /// the definition over all pairs, not from cover counts.
    pub fn classify(&self) -> ReducibilityReport {
        let (join_red, meet_red, _) = self.reducibility_pass();
        self.report_from(&join_red, &meet_red)
    }

    /// Reducible elements by the cover-count criterion, valid for lattices:
    /// at least two lower covers or at least two upper covers.
    pub fn reducible_by_covers(&self) -> BTreeSet<ElemId> {
        (0..self.len())
            .filter(|&i| self.lower[i].len() >= 2 || self.upper[i].len() >= 2)
            .map(|i| self.elements[i].id)
            .collect()
    }

    /// Induced subposet on everything except `z`. Covers are recomputed
    /// from the induced order, so `a ≺ z ≺ b` may become `a ≺ b`.
    pub fn remove_element(&self, z: ElemId) -> Result<Poset> {
        let iz = self.idx(z)?;
        let covers = self
            .covers_without(iz)
            .into_iter()
            .map(|(a, b)| (self.elements[a].id, self.elements[b].id))
            .collect();
        let elements = self
            .elements
            .iter()
            .filter(|e| e.id != z)
            .cloned()
            .collect();
        Poset::new(elements, covers)
    }

    /// Nullity of `remove_element(z)`, computed without rebuilding the order.
    pub fn nullity_without(&self, z: ElemId) -> Result<usize> {
        let iz = self.idx(z)?;
        let covers = self.covers_without(iz);
        let components = union_find_components(self.len(), &covers) - 1;
        Ok(covers.len() + components - (self.len() - 1))
    }

    /// Cover pairs (as indices) of the induced order on everything but `iz`.
    fn covers_without(&self, iz: usize) -> Vec<(usize, usize)> {
        let mut covers: Vec<(usize, usize)> = self
            .covers
            .iter()
            .filter(|&&(a, b)| a != iz && b != iz)
            .copied()
            .collect();
        for &a in &self.lower[iz] {
            for &b in &self.upper[iz] {
                // only a, z and b lie in [a, b]
                let between = self.up[a].intersection(&self.down[b]).take(4).count();
                if between == 3 {
                    covers.push((a, b));
                }
            }
        }
        covers
    }

    /// Removes every element of `ids` in order.
    pub fn remove_all(&self, ids: impl IntoIterator<Item = ElemId>) -> Result<Poset> {
        let mut p = self.clone();
        for id in ids {
            p = p.remove_element(id)?;
        }
        Ok(p)
    }

    /// Greedy dismantling: repeatedly removes the doubly irreducible element
    /// with the smallest id. Returns the removal order when the lattice
    /// shrinks to a singleton, `None` when it gets stuck.
    pub fn dismantle(&self) -> Result<Option<Vec<ElemId>>> {
        if !self.is_lattice() {
            return Err(Error::NotALattice);
        }
        let mut current = self.clone();
        let mut order = Vec::with_capacity(self.len().saturating_sub(1));
        while current.len() > 1 {
            let Some(&z) = current.doubly_irreducible().first() else {
                return Ok(None);
            };
            current = current.remove_element(z)?;
            order.push(z);
        }
        Ok(Some(order))
    }

    pub fn is_dismantlable(&self) -> Result<bool> {
        Ok(self.dismantle()?.is_some())
    }

    /// Lattice whose reducible elements are pairwise comparable.
    pub fn is_rc_lattice(&self) -> Result<bool> {
        let red: Vec<ElemId> = self.classify_lattice()?.reducible.into_iter().collect();
        Ok(red
            .iter()
            .enumerate()
            .all(|(i, &a)| red[i + 1..].iter().all(|&b| self.comparable(a, b))))
    }

    /// Length of the longest chain ending at each element, in id order.
    pub fn levels(&self) -> Vec<usize> {
        let mut level = vec![0usize; self.len()];
        for &x in &self.topo {
            level[x] = self.lower[x]
                .iter()
                .map(|&y| level[y] + 1)
                .max()
                .unwrap_or(0);
        }
        level
    }

    /// Name-based structural form: sorted names and sorted named covers.
    pub fn canonical_form(&self) -> (Vec<String>, Vec<(String, String)>) {
        let mut names: Vec<String> = self.elements.iter().map(|e| e.name.clone()).collect();
        names.sort();
        let mut covers: Vec<(String, String)> = self
            .covers
            .iter()
            .map(|&(a, b)| (self.elements[a].name.clone(), self.elements[b].name.clone()))
            .collect();
        covers.sort();
        (names, covers)
    }

    /// Equality of canonically named structure, ignoring ids.
    pub fn same_structure(&self, other: &Poset) -> bool {
        self.canonical_form() == other.canonical_form()
    }
}

/// The element `z` of `rows[a] ∩ rows[b]` with the whole intersection
/// inside `rows[z]`: the join when `rows` are up-sets, the meet for down-sets.
fn extreme_of(rows: &[BitSet], a: usize, b: usize) -> Option<usize> {
    let (ra, rb) = (rows[a].as_words(), rows[b].as_words());
    if let ([wa], [wb]) = (ra, rb) {
        let common = wa & wb;
        let mut rest = common;
        while rest != 0 {
            let z = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if common & !rows[z].as_words()[0] == 0 {
                return Some(z);
            }
        }
        return None;
    }
    rows[a]
        .intersection(&rows[b])
        .find(|&z| rows[a].intersection_is_subset(&rows[b], &rows[z]))
}

/// Connected components of the graph on `0..m` with the given edges.
fn union_find_components(m: usize, edges: &[(usize, usize)]) -> usize {
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut parent: Vec<usize> = (0..m).collect();
    let mut components = m;
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            components -= 1;
        }
    }
    components
}
