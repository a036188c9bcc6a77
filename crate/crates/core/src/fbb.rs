//! Fundamental basic blocks and the complete block `CF(n)`.
//!
//! Every block on `n` comparable reducible elements is named canonically:
//! the reducible chain is `u1 < ... < un`, the chain element strictly between
//! `u_i` and `u_{i+1}` is `x_i`, and the singleton hung between `u_i` and
//! `u_j` is `c_k` with `k = rank(n, i, j)`. A block is identified by the set
//! of labels `k` it carries, so structural equality of canonically named
//! posets stands in for lattice isomorphism.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::labeling::{pair_count, rank, RankSet};
use crate::order::{ElemId, Element, Poset};

/// Id/name of `u_i` in a block on `n` reducibles.
pub fn u_elem(n: u32, i: u32) -> Element {
    debug_assert!((1..=n).contains(&i));
    Element::new(i - 1, format!("u{i}"))
}

/// Id/name of `x_i`.
pub fn x_elem(n: u32, i: u32) -> Element {
    debug_assert!((1..n).contains(&i));
    Element::new(n + i - 1, format!("x{i}"))
}

/// Id/name of `c_k`.
pub fn c_elem(n: u32, k: u32) -> Element {
    Element::new(2 * n + k - 2, format!("c{k}"))
}

/// One adjunct step `]_a^b C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjunctTerm {
    pub a: Element,
    pub b: Element,
    pub chain: Vec<Element>,
}

/// `C_0 ]_{a_1}^{b_1} C_1 ... ]_{a_r}^{b_r} C_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjunctRepresentation {
    pub base_chain: Vec<Element>,
    pub terms: Vec<AdjunctTerm>,
}

impl AdjunctRepresentation {
    /// Glues the chains together term by term.
    pub fn assemble(&self) -> Result<Poset> {
        let mut lattice = Poset::chain(self.base_chain.clone())?;
        for term in &self.terms {
            let chain = Poset::chain(term.chain.clone())?;
            lattice = adjunct(&lattice, &chain, term.a.id, term.b.id)?;
        }
        Ok(lattice)
    }

    pub fn pairs(&self) -> Vec<(ElemId, ElemId)> {
        self.terms.iter().map(|t| (t.a.id, t.b.id)).collect()
    }
}

/// The adjunct `l1 ]_a^b l2`: `l2` is placed strictly between `a` and `b`.
///
/// Requires both operands to be lattices on disjoint ids and names, and
/// `a < b` in `l1` without `a ≺ b`.
pub fn adjunct(l1: &Poset, l2: &Poset, a: ElemId, b: ElemId) -> Result<Poset> {
    if !l1.is_lattice() || !l2.is_lattice() {
        return Err(Error::NotALattice);
    }
    let names: HashSet<&str> = l1.elements().iter().map(|e| e.name.as_str()).collect();
    if let Some(e) = l2
        .elements()
        .iter()
        .find(|e| l1.contains(e.id) || names.contains(e.name.as_str()))
    {
        return Err(Error::NotDisjoint(format!(
            "'{}' ({}) occurs in both",
            e.name, e.id
        )));
    }
    let name = |id: ElemId| {
        l1.name(id)
            .map(str::to_owned)
            .ok_or_else(|| Error::UnknownElement(id.to_string()))
    };
    let (na, nb) = (name(a)?, name(b)?);
    if !l1.lt(a, b) {
        return Err(Error::InvalidAdjunctPair(format!(
            "{na} < {nb} does not hold"
        )));
    }
    if l1.is_cover(a, b) {
        return Err(Error::InvalidAdjunctPair(format!(
            "{na} is covered by {nb}"
        )));
    }
    let bottom = l2.bottom().ok_or(Error::NotALattice)?;
    let top = l2.top().ok_or(Error::NotALattice)?;

    let elements = l1.elements().iter().chain(l2.elements()).cloned().collect();
    let mut covers: Vec<_> = l1.covers().chain(l2.covers()).collect();
    covers.push((a, bottom));
    covers.push((top, b));
    Poset::new(elements, covers)
}

/// `(⌊(n+1)/2⌋, C(n,2))`: the nullity range of blocks on `n` reducibles.
pub fn nullity_bounds(n: u32) -> (u64, u64) {
    ((n as u64).div_ceil(2), pair_count(n))
}

/// The canonical adjunct representation of the block with label set `ranks`.
///
/// `x_i` joins the base chain exactly when `rank(i, i+1)` is present; terms
/// follow in ascending label order.
pub fn block_representation(ranks: &RankSet) -> AdjunctRepresentation {
    let n = ranks.n();
    let mut base_chain = Vec::with_capacity(2 * n as usize - 1);
    for i in 1..n {
        base_chain.push(u_elem(n, i));
        if ranks.contains(consecutive_rank(n, i)) {
            base_chain.push(x_elem(n, i));
        }
    }
    base_chain.push(u_elem(n, n));
    let terms = ranks
        .iter()
        .zip(ranks.pairs())
        .map(|(k, (i, j))| AdjunctTerm {
            a: u_elem(n, i),
            b: u_elem(n, j),
            chain: vec![c_elem(n, k)],
        })
        .collect();
    AdjunctRepresentation { base_chain, terms }
}

fn consecutive_rank(n: u32, i: u32) -> u64 {
    rank(n, i, i + 1).expect("1 <= i < n").get() as u64
}

/// `CF(n)`: every pair `(u_i, u_j)` is an adjunct pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteFbb {
    n: u32,
    poset: Poset,
}

/// Builds `CF(n)` by iterating the adjunct operation over all of `J_N`.
pub fn build_cf(n: u32) -> Result<CompleteFbb> {
    let full = RankSet::full(n)?;
    let poset = block_representation(&full).assemble()?;
    Ok(CompleteFbb { n, poset })
}

impl CompleteFbb {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn representation(&self) -> AdjunctRepresentation {
        block_representation(&RankSet::full(self.n).expect("n >= 2"))
    }

    /// Deletes `c_k` for every `k` in `removed`, and `x_i` along with
    /// `c_{rank(i,i+1)}`.
    pub fn remove_ranks(&self, removed: &RankSet) -> Result<Poset> {
        if removed.n() != self.n {
            return Err(Error::Domain(format!(
                "rank set is over n = {}, block has n = {}",
                removed.n(),
                self.n
            )));
        }
        let mut doomed = Vec::new();
        for (k, (i, j)) in removed.iter().zip(removed.pairs()) {
            doomed.push(c_elem(self.n, k).id);
            if j == i + 1 {
                doomed.push(x_elem(self.n, i).id);
            }
        }
        self.poset.remove_all(doomed)
    }

    pub fn into_fbb(self) -> Fbb {
        Fbb {
            n: self.n,
            ranks: RankSet::full(self.n).expect("n >= 2"),
            poset: self.poset,
        }
    }
}

/// A fundamental basic block `F ∈ 𝓕ₙ(l)` keyed by its label set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fbb {
    n: u32,
    ranks: RankSet,
    poset: Poset,
}

/// Builds the block for `ranks` directly from its cover list.
///
/// Fails with [`Error::NotAnFbb`] when some `u_i` would not be touched by
/// any adjunct pair.
pub fn build_fbb(n: u32, ranks: &RankSet) -> Result<Fbb> {
    if ranks.n() != n {
        return Err(Error::Domain(format!(
            "rank set is over n = {}, requested n = {n}",
            ranks.n()
        )));
    }
    let uncovered = ranks.uncovered_vertices();
    if !uncovered.is_empty() {
        return Err(Error::NotAnFbb { uncovered });
    }
    let mut elements: Vec<Element> = (1..=n).map(|i| u_elem(n, i)).collect();
    let mut covers = Vec::new();
    for i in 1..n {
        let (lo, hi) = (u_elem(n, i).id, u_elem(n, i + 1).id);
        if ranks.contains(consecutive_rank(n, i)) {
            let x = x_elem(n, i);
            covers.push((lo, x.id));
            covers.push((x.id, hi));
            elements.push(x);
        } else {
            covers.push((lo, hi));
        }
    }
    for (k, (i, j)) in ranks.iter().zip(ranks.pairs()) {
        let c = c_elem(n, k);
        covers.push((u_elem(n, i).id, c.id));
        covers.push((c.id, u_elem(n, j).id));
        elements.push(c);
    }
    let poset = Poset::new(elements, covers)?;
    Ok(Fbb {
        n,
        ranks: ranks.clone(),
        poset,
    })
}

impl Fbb {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn ranks(&self) -> &RankSet {
        &self.ranks
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn nullity(&self) -> usize {
        self.poset.nullity()
    }

    pub fn is_fundamental(&self) -> bool {
        is_fundamental_basic_block(&self.poset)
    }

    pub fn adjunct_representation(&self) -> Result<AdjunctRepresentation> {
        extract_adjunct_representation(&self.poset)
    }
}

/// Basic-block test, read universally: every doubly irreducible element
/// must drop the nullity by exactly one when removed.
pub fn is_basic_block_universal(p: &Poset) -> bool {
    if p.len() == 1 {
        return true;
    }
    let irr = p.doubly_irreducible();
    if irr.is_empty() {
        return true;
    }
    let nullity = p.nullity();
    irr.into_iter()
        .all(|z| p.nullity_without(z).is_ok_and(|after| after + 1 == nullity))
}

/// Adjunct structure read off a lattice shaped like a fundamental basic
/// block, without relying on element names for anything but tie-breaking.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockShape {
    /// Reducible elements in ascending order.
    pub reducibles: Vec<ElemId>,
    pub representation: AdjunctRepresentation,
    /// Adjunct pairs as 1-based positions in `reducibles`, in term order.
    pub pairs: Vec<(u32, u32)>,
}

impl BlockShape {
    pub fn pairs_distinct(&self) -> bool {
        let set: BTreeSet<_> = self.pairs.iter().collect();
        set.len() == self.pairs.len()
    }
}

/// Decomposes an RC-lattice whose irreducible elements each hang between
/// two reducible elements (one lower cover, one upper cover, both
/// reducible). General dismantlable lattices are not handled.
pub fn analyze_block_shape(p: &Poset) -> Result<BlockShape> {
    let red_set = p.classify_lattice()?.reducible;
    let mut red: Vec<ElemId> = red_set.iter().copied().collect();
    for (i, &a) in red.iter().enumerate() {
        if let Some(&b) = red[i + 1..].iter().find(|&&b| !p.comparable(a, b)) {
            return Err(Error::ExtractionUnsupported(format!(
                "reducible elements {} and {} are incomparable",
                p.name(a).unwrap_or("?"),
                p.name(b).unwrap_or("?")
            )));
        }
    }
    if red.len() < 2 {
        return Err(Error::ExtractionUnsupported(format!(
            "need at least two reducible elements, found {}",
            red.len()
        )));
    }
    red.sort_by(|&a, &b| {
        if p.lt(a, b) {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    let position = |id: ElemId| red.iter().position(|&r| r == id).map(|i| i as u32 + 1);

    let mut hanging: BTreeMap<(u32, u32), Vec<&Element>> = BTreeMap::new();
    for e in p.elements().iter().filter(|e| !red_set.contains(&e.id)) {
        let lower = p.lower_covers(e.id)?;
        let upper = p.upper_covers(e.id)?;
        let (&[a], &[b]) = (lower.as_slice(), upper.as_slice()) else {
            return Err(Error::ExtractionUnsupported(format!(
                "'{}' does not have exactly one lower and one upper cover",
                e.name
            )));
        };
        match (position(a), position(b)) {
            (Some(i), Some(j)) => hanging.entry((i, j)).or_default().push(e),
            _ => {
                return Err(Error::ExtractionUnsupported(format!(
                    "'{}' is not hung between two reducible elements",
                    e.name
                )))
            }
        }
    }

    let element = |id: ElemId| {
        p.elements()
            .iter()
            .find(|e| e.id == id)
            .cloned()
            .expect("id taken from the poset")
    };
    let n = red.len() as u32;
    let mut base_chain = Vec::with_capacity(2 * red.len() - 1);
    for i in 1..n {
        let (lo, hi) = (red[i as usize - 1], red[i as usize]);
        base_chain.push(element(lo));
        if p.is_cover(lo, hi) {
            continue;
        }
        let group = hanging
            .get_mut(&(i, i + 1))
            .filter(|g| !g.is_empty())
            .ok_or_else(|| {
                Error::ExtractionUnsupported(format!(
                "reducible elements {} and {} are neither covering nor joined by a chain element",
                p.name(lo).unwrap_or("?"),
                p.name(hi).unwrap_or("?")
            ))
            })?;
        // prefer the canonically named chain element, else the lowest id
        let wanted = format!("x{i}");
        let at = group.iter().position(|e| e.name == wanted).unwrap_or(0);
        base_chain.push(group.remove(at).clone());
    }
    base_chain.push(element(red[n as usize - 1]));

    let mut ordered: Vec<((u32, u32), &Element)> = hanging
        .iter()
        .flat_map(|(&pair, group)| group.iter().map(move |&e| (pair, e)))
        .collect();
    ordered.sort_by_key(|&((i, j), e)| (rank(n.max(2), i, j).map(|l| l.get()).unwrap_or(0), e.id));
    let pairs = ordered.iter().map(|&(pair, _)| pair).collect();
    let terms = ordered
        .into_iter()
        .map(|((i, j), e)| AdjunctTerm {
            a: element(red[i as usize - 1]),
            b: element(red[j as usize - 1]),
            chain: vec![e.clone()],
        })
        .collect();

    Ok(BlockShape {
        reducibles: red,
        representation: AdjunctRepresentation { base_chain, terms },
        pairs,
    })
}

/// Adjunct representation of a canonically named block: base chain `C'_0`
/// and one term `(u_i, u_j, {c_k})` per label, sorted by `k`.
///
/// Fails with [`Error::ExtractionUnsupported`] when the lattice is not
/// block shaped or its names depart from the `u`/`x`/`c` scheme.
pub fn extract_adjunct_representation(p: &Poset) -> Result<AdjunctRepresentation> {
    let shape = analyze_block_shape(p)?;
    let n = shape.reducibles.len() as u32;
    let unsupported = |what: String| Err(Error::ExtractionUnsupported(what));
    for (i, &u) in shape.reducibles.iter().enumerate() {
        let want = format!("u{}", i + 1);
        if p.name(u) != Some(want.as_str()) {
            return unsupported(format!(
                "reducible '{}' should be named {want}",
                p.name(u).unwrap_or("?")
            ));
        }
    }
    let mut chain_index = 0;
    for e in &shape.representation.base_chain {
        match e.name.strip_prefix('u') {
            Some(_) => chain_index += 1,
            None if e.name == format!("x{chain_index}") => {}
            None => {
                return unsupported(format!(
                    "chain element '{}' should be named x{chain_index}",
                    e.name
                ))
            }
        }
    }
    for (term, &(i, j)) in shape.representation.terms.iter().zip(&shape.pairs) {
        let k = rank(n, i, j)?.get();
        let name = &term.chain[0].name;
        if *name != format!("c{k}") {
            return unsupported(format!(
                "element '{name}' between u{i} and u{j} should be named c{k}"
            ));
        }
    }
    Ok(shape.representation)
}

/// RC-lattice, basic block, and pairwise distinct adjunct pairs.
pub fn is_fundamental_basic_block(p: &Poset) -> bool {
    if !matches!(p.is_rc_lattice(), Ok(true)) || !is_basic_block_universal(p) {
        return false;
    }
    analyze_block_shape(p).is_ok_and(|shape| shape.pairs_distinct())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(p: &Poset) -> Vec<String> {
        let mut v: Vec<String> = p.elements().iter().map(|e| e.name.clone()).collect();
        v.sort();
        v
    }

    fn id(p: &Poset, name: &str) -> ElemId {
        p.id_of(name).unwrap()
    }

    #[test]
    fn cf2_is_the_smallest_block() {
        let cf = build_cf(2).unwrap();
        let p = cf.poset();
        assert_eq!(p.len(), 4);
        assert_eq!(p.nullity(), 1);
        assert!(p.is_cover(id(p, "u1"), id(p, "c1")));
        assert!(p.is_cover(id(p, "c1"), id(p, "u2")));
        assert!(p.is_cover(id(p, "u1"), id(p, "x1")));
        assert!(matches!(build_cf(1), Err(Error::Domain(_))));
    }

    #[test]
    fn cf4_counts() {
        let cf = build_cf(4).unwrap();
        let p = cf.poset();
        assert_eq!(p.len(), 13);
        assert_eq!(p.cover_count(), 18);
        assert_eq!(p.nullity(), 6);
        let cf5 = build_cf(5).unwrap();
        assert_eq!(cf5.poset().len(), 19);
        assert_eq!(cf5.poset().nullity(), 10);
    }

    #[test]
    fn cf4_order_and_classification() {
        let cf = build_cf(4).unwrap();
        let p = cf.poset();
        assert!(p.lt(id(p, "u1"), id(p, "c6")));
        assert!(p.lt(id(p, "c1"), id(p, "u4")));
        assert!(!p.comparable(id(p, "c1"), id(p, "c2")));
        let report = p.classify();
        let red: BTreeSet<_> = ["u1", "u2", "u3", "u4"].iter().map(|n| id(p, n)).collect();
        assert_eq!(report.reducible, red);
        let irr: BTreeSet<_> = ["x1", "x2", "x3", "c1", "c2", "c3", "c4", "c5", "c6"]
            .iter()
            .map(|n| id(p, n))
            .collect();
        assert_eq!(report.doubly_irreducible, irr);
        assert!(p.is_rc_lattice().unwrap());
        assert!(p.is_dismantlable().unwrap());
    }

    #[test]
    fn cf4_removals() {
        let cf = build_cf(4).unwrap();
        let p = cf.poset();
        let no_c6 = p.remove_element(id(p, "c6")).unwrap();
        assert_eq!(no_c6.len(), 12);
        assert_eq!(no_c6.nullity(), 5);

        // c6 still sits between u3 and u4, so no cover u3 < u4 appears
        let no_x3 = p.remove_element(id(p, "x3")).unwrap();
        assert_eq!(no_x3.cover_count(), 16);
        assert_eq!(no_x3.nullity(), 5);
        assert!(!no_x3.is_cover(id(p, "u3"), id(p, "u4")));
        assert!(no_x3.lt(id(p, "u3"), id(p, "c6")) && no_x3.lt(id(p, "c6"), id(p, "u4")));

        // an x_i with no parallel chain: its removal induces u_i < u_(i+1)
        let base = Poset::chain(
            ["u1", "x1", "u2", "x2", "u3"]
                .iter()
                .enumerate()
                .map(|(i, n)| Element::new(i as u32, *n))
                .collect(),
        )
        .unwrap();
        let c = Poset::chain(vec![Element::new(5, "c1")]).unwrap();
        let q = adjunct(&base, &c, ElemId(0), ElemId(2)).unwrap();
        let cut = q.remove_element(id(&q, "x2")).unwrap();
        assert!(cut.is_cover(id(&q, "u2"), id(&q, "u3")));
        assert_eq!(cut.nullity(), q.nullity());
    }

    #[test]
    fn adjunct_examples() {
        let base = Poset::chain(vec![
            Element::new(0, "u1"),
            Element::new(1, "x"),
            Element::new(2, "u2"),
        ])
        .unwrap();
        let single = Poset::chain(vec![Element::new(3, "c")]).unwrap();
        let l = adjunct(&base, &single, ElemId(0), ElemId(2)).unwrap();
        assert_eq!(l.nullity(), 1);
        assert!(l.is_lattice());

        let two = Poset::chain(vec![Element::new(0, "a"), Element::new(1, "b")]).unwrap();
        let other = Poset::chain(vec![Element::new(5, "p"), Element::new(6, "q")]).unwrap();
        assert!(matches!(
            adjunct(&two, &other, ElemId(0), ElemId(1)),
            Err(Error::InvalidAdjunctPair(_))
        ));
        assert!(matches!(
            adjunct(&l, &single, ElemId(0), ElemId(2)),
            Err(Error::NotDisjoint(_))
        ));
        // x and c are incomparable
        let other = Poset::chain(vec![Element::new(9, "z")]).unwrap();
        assert!(matches!(
            adjunct(&l, &other, ElemId(1), ElemId(3)),
            Err(Error::InvalidAdjunctPair(_))
        ));
    }

    #[test]
    fn four_vertex_block_with_four_pairs() {
        let ranks = RankSet::from_labels(4, [1, 3, 4, 5]).unwrap();
        let f = build_fbb(4, &ranks).unwrap();
        assert_eq!(
            names(f.poset()),
            ["c1", "c3", "c4", "c5", "u1", "u2", "u3", "u4", "x1", "x2"]
        );
        assert_eq!(f.nullity(), 4);
        assert!(f.is_fundamental());
        let rep = f.adjunct_representation().unwrap();
        let base: Vec<_> = rep.base_chain.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(base, ["u1", "x1", "u2", "x2", "u3", "u4"]);
        let terms: Vec<_> = rep.terms.iter().map(|t| t.chain[0].name.as_str()).collect();
        assert_eq!(terms, ["c1", "c3", "c4", "c5"]);
        assert_eq!(rep, block_representation(&ranks));
        assert_eq!(rep.assemble().unwrap(), *f.poset());
    }

    #[test]
    fn full_rank_set_reproduces_cf() {
        for n in 2..=6 {
            let direct = build_fbb(n, &RankSet::full(n).unwrap()).unwrap();
            let cf = build_cf(n).unwrap();
            assert_eq!(direct.poset(), cf.poset());
            assert_eq!(direct, cf.into_fbb());
        }
    }

    #[test]
    fn uncovered_vertices_are_reported() {
        let err = build_fbb(4, &RankSet::from_labels(4, [1]).unwrap()).unwrap_err();
        assert_eq!(
            err,
            Error::NotAnFbb {
                uncovered: vec![3, 4]
            }
        );
        assert!(matches!(
            build_fbb(5, &RankSet::from_labels(4, [1, 6]).unwrap()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn extraction_small_cases() {
        let f = build_fbb(2, &RankSet::full(2).unwrap()).unwrap();
        let rep = f.adjunct_representation().unwrap();
        let base: Vec<_> = rep.base_chain.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(base, ["u1", "x1", "u2"]);
        assert_eq!(rep.terms.len(), 1);
        assert_eq!(
            (rep.terms[0].a.name.as_str(), rep.terms[0].b.name.as_str()),
            ("u1", "u2")
        );

        let cf = build_cf(4).unwrap();
        let rep = extract_adjunct_representation(cf.poset()).unwrap();
        assert_eq!(rep, cf.representation());
        assert_eq!(rep.terms.len(), 6);
    }

    #[test]
    fn extraction_rejects_foreign_names() {
        // CF(2) shaped, but named like a diamond plus chain element
        let p = Poset::named(
            &["0", "a", "b", "1"],
            &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
        )
        .unwrap();
        assert!(matches!(
            extract_adjunct_representation(&p),
            Err(Error::ExtractionUnsupported(_))
        ));
        // structurally it is still a fundamental basic block (CF(2) up to names)
        assert!(is_fundamental_basic_block(&p));
    }

    #[test]
    fn spliced_chain_breaks_basic_block() {
        // CF(4) with an extra element t on top of u4
        let cf = build_cf(4).unwrap();
        let p = cf.poset();
        let mut elements = p.elements().to_vec();
        elements.push(Element::new(100, "t"));
        let mut covers: Vec<_> = p.covers().collect();
        covers.push((id(p, "u4"), ElemId(100)));
        let spliced = Poset::new(elements, covers).unwrap();
        assert!(spliced.is_lattice());
        let without_t = spliced.remove_element(ElemId(100)).unwrap();
        assert_eq!(without_t.nullity(), spliced.nullity());
        assert!(!is_basic_block_universal(&spliced));
        assert!(is_basic_block_universal(p));
        let single = Poset::named(&["s"], &[]).unwrap();
        assert!(is_basic_block_universal(&single));
    }

    #[test]
    fn repeated_adjunct_pair_is_not_fundamental() {
        // u1 < x1 < u2 with two singletons hung on (u1, u2)
        let p = Poset::named(
            &["u1", "x1", "u2", "c1", "d1"],
            &[
                ("u1", "x1"),
                ("x1", "u2"),
                ("u1", "c1"),
                ("c1", "u2"),
                ("u1", "d1"),
                ("d1", "u2"),
            ],
        )
        .unwrap();
        assert!(p.is_rc_lattice().unwrap());
        assert!(is_basic_block_universal(&p));
        let shape = analyze_block_shape(&p).unwrap();
        assert_eq!(shape.pairs, vec![(1, 2), (1, 2)]);
        assert!(!is_fundamental_basic_block(&p));
    }

    #[test]
    fn bounds() {
        assert_eq!(nullity_bounds(4), (2, 6));
        assert_eq!(nullity_bounds(5), (3, 10));
        assert_eq!(nullity_bounds(2), (1, 1));
    }

    #[test]
    fn removal_route_matches_direct_build() {
        let cf = build_cf(4).unwrap();
        let removed = RankSet::from_labels(4, [2, 6]).unwrap();
        let via_removal = cf.remove_ranks(&removed).unwrap();
        let direct = build_fbb(4, &removed.complement()).unwrap();
        assert!(via_removal.same_structure(direct.poset()));
        assert_eq!(direct.ranks().iter().collect::<Vec<_>>(), vec![1, 3, 4, 5]);
    }
}
