//! Dictionary-order edge labels for the complete graph `K_n`.
//!
//! The pairs `(i, j)` with `1 ≤ i < j ≤ n`, ordered lexicographically, form a
//! chain of length `C(n, 2)`. Its position map
//! `k = (i-1)·n - C(i,2) + j - i` is a bijection onto `J_N = {1, ..., N}`.
//! Vertices and labels are 1-based everywhere in this crate.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::error::{Error, Result};

/// Largest supported vertex count; keeps `C(n, 2)` inside `u32`.
pub const MAX_VERTICES: u32 = 1 << 15;

/// `C(n, 2)`.
pub fn pair_count(n: u32) -> u64 {
    let n = n as u64;
    n * n.saturating_sub(1) / 2
}

fn check_n(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::Domain(format!("need n >= 2, got n = {n}")));
    }
    if n > MAX_VERTICES {
        return Err(Error::Domain(format!(
            "n = {n} exceeds the limit {MAX_VERTICES}"
        )));
    }
    Ok(())
}

/// A label in `J_N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeLabel(u32);

impl EdgeLabel {
    pub fn new(n: u32, k: u64) -> Result<Self> {
        check_n(n)?;
        let max = pair_count(n);
        if k == 0 || k > max {
            return Err(Error::LabelOutOfRange { n, k, max });
        }
        Ok(EdgeLabel(k as u32))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// Position of `(r, n)`, the last pair of block `S_r`: `r·n - C(r+1, 2)`.
pub fn block_end(n: u32, r: u32) -> u64 {
    let (n, r) = (n as u64, r as u64);
    r * n - r * (r + 1) / 2
}

/// Label of the pair `(i, j)`.
pub fn rank(n: u32, i: u32, j: u32) -> Result<EdgeLabel> {
    check_n(n)?;
    if i < 1 || i >= j || j > n {
        return Err(Error::Domain(format!(
            "pair ({i}, {j}) does not satisfy 1 <= i < j <= {n}"
        )));
    }
    let (nn, ii, jj) = (n as u64, i as u64, j as u64);
    let k = (ii - 1) * nn - ii * (ii - 1) / 2 + jj - ii;
    Ok(EdgeLabel(k as u32))
}

/// The unique pair carrying label `k`.
///
/// Binary search for the first block `S_i` whose end reaches `k`.
pub fn unrank(n: u32, k: u64) -> Result<(u32, u32)> {
    let label = EdgeLabel::new(n, k)?;
    let k = label.get() as u64;
    let (mut lo, mut hi) = (1u32, n - 1);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if block_end(n, mid) >= k {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let i = lo;
    let before = block_end(n, i - 1);
    let j = (k - before) as u32 + i;
    Ok((i, j))
}

/// The chain `S` of all pairs in dictionary order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairChain {
    n: u32,
    pairs: Vec<(u32, u32)>,
}

impl PairChain {
    pub fn new(n: u32) -> Result<Self> {
        check_n(n)?;
        let pairs = (1..n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        Ok(PairChain { n, pairs })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The blocks `S_1, ..., S_{n-1}`; `S_r` holds the pairs starting at `r`.
    pub fn blocks(&self) -> Vec<&[(u32, u32)]> {
        let mut out = Vec::with_capacity(self.n as usize - 1);
        let mut start = 0usize;
        for r in 1..self.n {
            let len = (self.n - r) as usize;
            out.push(&self.pairs[start..start + len]);
            start += len;
        }
        out
    }
}

/// A set of labels drawn from `J_N`, stored as a bit mask (bit `k-1` for `k`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankSet {
    n: u32,
    bits: BitSet,
}

impl RankSet {
    pub fn empty(n: u32) -> Result<Self> {
        check_n(n)?;
        Ok(RankSet {
            n,
            bits: BitSet::new(pair_count(n) as usize),
        })
    }

    /// All of `J_N`.
    pub fn full(n: u32) -> Result<Self> {
        let mut s = RankSet::empty(n)?;
        for k in 1..=pair_count(n) as usize {
            s.bits.insert(k - 1);
        }
        Ok(s)
    }

    pub fn from_labels(n: u32, labels: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut s = RankSet::empty(n)?;
        for k in labels {
            s.insert(k)?;
        }
        Ok(s)
    }

    /// Parses a comma-separated list whose tokens are labels (`5`) or
    /// vertex pairs (`2-4`). A label listed twice is an error.
    pub fn parse(n: u32, text: &str) -> Result<Self> {
        let mut set = RankSet::empty(n)?;
        for token in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let k = match token.split_once('-') {
                Some((i, j)) => {
                    let vertex = |s: &str| {
                        s.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::Domain(format!("bad vertex in '{token}'")))
                    };
                    rank(n, vertex(i)?, vertex(j)?)?.get() as u64
                }
                None => token
                    .parse::<u64>()
                    .map_err(|_| Error::Domain(format!("bad label '{token}'")))?,
            };
            if !set.insert(k)? {
                return Err(Error::Domain(format!("label {k} listed twice")));
            }
        }
        Ok(set)
    }

    pub fn from_pairs(n: u32, pairs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut s = RankSet::empty(n)?;
        for (i, j) in pairs {
            s.insert(rank(n, i, j)?.get() as u64)?;
        }
        Ok(s)
    }

    /// Builds from the low `C(n, 2)` bits of a mask; requires `C(n, 2) ≤ 64`.
    pub fn from_mask(n: u32, mask: u64) -> Result<Self> {
        let max = pair_count(n);
        if max > 64 {
            return Err(Error::Domain(format!(
                "C({n}, 2) = {max} does not fit a 64-bit mask"
            )));
        }
        if max < 64 && mask >> max != 0 {
            return Err(Error::LabelOutOfRange {
                n,
                k: 64 - mask.leading_zeros() as u64,
                max,
            });
        }
        RankSet::from_labels(n, (0..64).filter(|b| mask >> b & 1 == 1).map(|b| b + 1))
    }

    /// The 64-bit mask form, when `C(n, 2) ≤ 64`.
    pub fn to_mask(&self) -> Option<u64> {
        (pair_count(self.n) <= 64).then(|| self.iter().fold(0u64, |m, k| m | 1 << (k - 1)))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Inserts `k`; returns whether it was new.
    pub fn insert(&mut self, k: u64) -> Result<bool> {
        let label = EdgeLabel::new(self.n, k)?;
        Ok(self.bits.insert(label.get() as usize - 1))
    }

    pub fn remove(&mut self, k: u64) -> bool {
        k >= 1 && self.bits.remove(k as usize - 1)
    }

    pub fn contains(&self, k: u64) -> bool {
        k >= 1 && self.bits.contains(k as usize - 1)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Labels in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.bits.iter().map(|b| b as u32 + 1)
    }

    /// Pairs in dictionary order.
    pub fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.iter()
            .map(|k| unrank(self.n, k as u64).expect("labels in a RankSet lie in J_N"))
    }

    /// Complement inside `J_N`.
    pub fn complement(&self) -> RankSet {
        let mut out = RankSet::full(self.n).expect("n already validated");
        for k in self.iter() {
            out.remove(k as u64);
        }
        out
    }

    /// Vertices in `1..=n` not touched by any pair of the set.
    pub fn uncovered_vertices(&self) -> Vec<u32> {
        let mut seen = vec![false; self.n as usize + 1];
        for (i, j) in self.pairs() {
            seen[i as usize] = true;
            seen[j as usize] = true;
        }
        (1..=self.n).filter(|&v| !seen[v as usize]).collect()
    }
}

impl fmt::Debug for RankSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RankSet(n={}, ", self.n)?;
        f.debug_set().entries(self.iter()).finish()?;
        write!(f, ")")
    }
}

/// Labels every arc `(i, j)` of a subgraph of directed `K_n` by its rank.
pub fn label_edges(
    n: u32,
    arcs: impl IntoIterator<Item = (u32, u32)>,
) -> Result<BTreeMap<(u32, u32), EdgeLabel>> {
    let mut out = BTreeMap::new();
    for (i, j) in arcs {
        if i >= j {
            return Err(Error::Orientation { i, j });
        }
        out.insert((i, j), rank(n, i, j)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_labels_and_pairs() {
        let a = RankSet::parse(4, "1, 3,4,5").unwrap();
        let b = RankSet::parse(4, "1-2,1-4,2-3,2-4").unwrap();
        assert_eq!(a, b);
        assert!(RankSet::parse(4, "").unwrap().is_empty());
        assert!(RankSet::parse(4, "1,1").is_err());
        assert!(RankSet::parse(4, "7").is_err());
        assert!(RankSet::parse(4, "3-2").is_err());
        assert!(RankSet::parse(4, "a").is_err());
    }

    /// Position in the explicitly enumerated dictionary order, 1-based.
    fn enumerated_rank(n: u32, i: u32, j: u32) -> u32 {
        PairChain::new(n)
            .unwrap()
            .pairs()
            .iter()
            .position(|&p| p == (i, j))
            .unwrap() as u32
            + 1
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(4, 1, 2).unwrap().get(), 1);
        assert_eq!(rank(4, 3, 4).unwrap().get(), 6);
        assert_eq!(enumerated_rank(5, 2, 4), 6);
        assert_eq!(rank(5, 2, 4).unwrap().get(), 6);
    }

    #[test]
    fn unrank_examples() {
        assert_eq!(unrank(4, 1).unwrap(), (1, 2));
        assert_eq!(unrank(4, 4).unwrap(), (2, 3));
        assert_eq!(*PairChain::new(5).unwrap().pairs().last().unwrap(), (4, 5));
        assert_eq!(unrank(5, 10).unwrap(), (4, 5));
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(rank(4, 3, 3), Err(Error::Domain(_))));
        assert!(matches!(rank(4, 2, 5), Err(Error::Domain(_))));
        assert!(matches!(rank(1, 1, 2), Err(Error::Domain(_))));
        assert!(matches!(rank(4, 0, 2), Err(Error::Domain(_))));
        assert!(matches!(unrank(4, 0), Err(Error::LabelOutOfRange { .. })));
        assert!(matches!(unrank(4, 7), Err(Error::LabelOutOfRange { .. })));
        assert!(rank(MAX_VERTICES + 1, 1, 2).is_err());
        let big = rank(MAX_VERTICES, MAX_VERTICES - 1, MAX_VERTICES).unwrap();
        assert_eq!(big.get() as u64, pair_count(MAX_VERTICES));
    }

    #[test]
    fn blocks_have_decreasing_lengths() {
        for n in 2..12 {
            let chain = PairChain::new(n).unwrap();
            assert_eq!(chain.len() as u64, pair_count(n));
            for (r, block) in chain.blocks().iter().enumerate() {
                let r = r as u32 + 1;
                assert_eq!(block.len() as u32, n - r);
                assert!(block.iter().all(|&(i, _)| i == r));
            }
        }
    }

    #[test]
    fn block_law() {
        for n in 2..30 {
            for r in 1..n {
                assert_eq!(rank(n, r, n).unwrap().get() as u64, block_end(n, r));
            }
        }
    }

    #[test]
    fn label_edges_examples() {
        let k4: Vec<_> = PairChain::new(4).unwrap().pairs().to_vec();
        let labels = label_edges(4, k4).unwrap();
        let got: Vec<u32> = labels.values().map(|l| l.get()).collect();
        assert_eq!(got, vec![1, 2, 3, 4, 5, 6]);

        let f = label_edges(4, [(1, 2), (1, 4), (2, 3), (2, 4)]).unwrap();
        let got: Vec<u32> = f.values().map(|l| l.get()).collect();
        assert_eq!(got, vec![1, 3, 4, 5]);

        assert!(label_edges(4, []).unwrap().is_empty());
        assert_eq!(
            label_edges(4, [(3, 2)]),
            Err(Error::Orientation { i: 3, j: 2 })
        );
    }

    #[test]
    fn rank_sets() {
        let s = RankSet::from_labels(4, [1, 3, 4, 5]).unwrap();
        assert_eq!(
            s.pairs().collect::<Vec<_>>(),
            vec![(1, 2), (1, 4), (2, 3), (2, 4)]
        );
        assert!(s.uncovered_vertices().is_empty());
        assert_eq!(s.to_mask(), Some(0b11101));
        assert_eq!(RankSet::from_mask(4, 0b11101).unwrap(), s);
        assert_eq!(s.complement().iter().collect::<Vec<_>>(), vec![2, 6]);
        let one = RankSet::from_labels(4, [1]).unwrap();
        assert_eq!(one.uncovered_vertices(), vec![3, 4]);
        assert!(RankSet::from_labels(4, [7]).is_err());
        assert!(RankSet::from_mask(4, 1 << 6).is_err());
    }

    proptest! {
        #[test]
        fn rank_is_monotone_in_dictionary_order(n in 2u32..60) {
            let chain = PairChain::new(n).unwrap();
            let ranks: Vec<u32> = chain.pairs().iter().map(|&(i, j)| rank(n, i, j).unwrap().get()).collect();
            let expected: Vec<u32> = (1..=pair_count(n) as u32).collect();
            prop_assert_eq!(ranks, expected);
        }

        #[test]
        fn unrank_inverts_rank(n in 2u32..2000, seed in any::<u64>()) {
            let k = seed % pair_count(n) + 1;
            let (i, j) = unrank(n, k).unwrap();
            prop_assert!(1 <= i && i < j && j <= n);
            prop_assert_eq!(rank(n, i, j).unwrap().get() as u64, k);
        }
    }
}
