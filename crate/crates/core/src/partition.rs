//! Canonical set partitions of `{0..n}` and the refinement lattice on them.
//!
//! A [`Partition`] keeps its blocks as fixed-width bitsets, sorted by least
//! element. That normal form makes structural equality coincide with equality
//! of partitions, and it is the order used when printing literals such as
//! `0 1|2`.
//!
//! The order `P ≤ Q` is refinement: every block of `P` sits inside a block of
//! `Q`. Meets intersect blocks pairwise, joins close the union of the two
//! equivalence relations with a disjoint-set forest.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_cap, Error, Result};
use crate::set::{ElementSet, WORD_BITS};
use crate::unionfind::DisjointSets;

/// Largest ground set any partition may live on.
pub const HARD_CAP: usize = WORD_BITS;

/// The ground set `{0..n}` of a partition lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroundSet {
    n: usize,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_cap(n, HARD_CAP)
    }

    /// Ground set under a caller-supplied cap, itself bounded by [`HARD_CAP`].
    pub fn with_cap(n: usize, cap: usize) -> Result<Self> {
        if cap > HARD_CAP {
            return Err(Error::HardLimit { cap, hard: HARD_CAP });
        }
        check_cap(n, cap)?;
        Ok(GroundSet { n })
    }

    pub fn n(self) -> usize {
        self.n
    }

    pub fn elements(self) -> ElementSet {
        ElementSet::full(self.n)
    }
}

/// A set partition in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    n: usize,
    blocks: Vec<ElementSet>,
}

/// Restricted-growth label string of a partition: `labels[i]` is the index of
/// the block holding `i` under canonical block order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelVector(Vec<u8>);

impl LabelVector {
    /// Accepts only genuine restricted-growth strings.
    pub fn new(labels: Vec<u8>) -> Result<Self> {
        if labels.len() > HARD_CAP {
            return Err(Error::CapExceeded {
                n: labels.len(),
                cap: HARD_CAP,
            });
        }
        let mut next = 0u8;
        for (i, &l) in labels.iter().enumerate() {
            if l > next {
                return Err(Error::Malformed(format!(
                    "label {l} at position {i} breaks restricted growth"
                )));
            }
            if l == next {
                next += 1;
            }
        }
        Ok(LabelVector(labels))
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from_rgs_unchecked(&self.0)
    }
}

impl Partition {
    /// All singletons. For `n ≤ 1` this is also the top element.
    ///
    /// # Panics
    /// If `n` exceeds [`HARD_CAP`].
    pub fn bottom(n: usize) -> Self {
        assert!(n <= HARD_CAP, "ground set {n} exceeds {HARD_CAP}");
        Partition {
            n,
            blocks: (0..n).map(ElementSet::singleton).collect(),
        }
    }

    /// The single block `{0..n}`; the empty partition when `n = 0`.
    ///
    /// # Panics
    /// If `n` exceeds [`HARD_CAP`].
    pub fn top(n: usize) -> Self {
        assert!(n <= HARD_CAP, "ground set {n} exceeds {HARD_CAP}");
        let blocks = if n == 0 { Vec::new() } else { vec![ElementSet::full(n)] };
        Partition { n, blocks }
    }

    /// Validates blocks against the ground set and puts them in canonical order.
    pub fn from_blocks(n: usize, blocks: impl IntoIterator<Item = ElementSet>) -> Result<Self> {
        GroundSet::new(n)?;
        let all = ElementSet::full(n);
        let mut seen = ElementSet::EMPTY;
        let mut out = Vec::new();
        for b in blocks {
            if b.is_empty() {
                return Err(Error::EmptyBlock);
            }
            if let Some(e) = (b - all).first() {
                return Err(Error::OutOfRange { element: e, n });
            }
            if let Some(e) = (b & seen).first() {
                return Err(Error::DuplicateElement(e));
            }
            seen = seen | b;
            out.push(b);
        }
        if let Some(e) = (all - seen).first() {
            return Err(Error::MissingElement(e));
        }
        out.sort_by_key(|b| b.first());
        Ok(Partition { n, blocks: out })
    }

    /// Builds the partition whose blocks are the classes of an arbitrary
    /// labelling: `i` and `j` share a block iff `labels[i] == labels[j]`.
    pub fn from_labels<L: Copy + Eq>(labels: &[L]) -> Result<Self> {
        let n = labels.len();
        GroundSet::new(n)?;
        let mut keys: Vec<L> = Vec::new();
        let mut blocks: Vec<ElementSet> = Vec::new();
        for (i, l) in labels.iter().enumerate() {
            match keys.iter().position(|k| k == l) {
                Some(j) => blocks[j].insert(i),
                None => {
                    keys.push(*l);
                    blocks.push(ElementSet::singleton(i));
                }
            }
        }
        // First occurrence order is least-element order.
        Ok(Partition { n, blocks })
    }

    pub(crate) fn from_rgs_unchecked(rgs: &[u8]) -> Self {
        let mut blocks: Vec<ElementSet> = Vec::new();
        for (i, &l) in rgs.iter().enumerate() {
            let l = l as usize;
            if l == blocks.len() {
                blocks.push(ElementSet::EMPTY);
            }
            blocks[l].insert(i);
        }
        Partition { n: rgs.len(), blocks }
    }

    pub(crate) fn from_sorted_blocks(n: usize, blocks: Vec<ElementSet>) -> Self {
        debug_assert!(blocks.windows(2).all(|w| w[0].first() < w[1].first()));
        Partition { n, blocks }
    }

    /// The singular partition whose only non-singleton block is `set`
    /// (all singletons when `set` has one element).
    pub fn diag(set: ElementSet, n: usize) -> Result<Self> {
        GroundSet::new(n)?;
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        if let Some(e) = (set - ElementSet::full(n)).first() {
            return Err(Error::OutOfRange { element: e, n });
        }
        let mut blocks: Vec<ElementSet> = (ElementSet::full(n) - set).iter().map(ElementSet::singleton).collect();
        blocks.push(set);
        blocks.sort_by_key(|b| b.first());
        Ok(Partition { n, blocks })
    }

    /// Parses the literal grammar `block ('|' block)*`, blocks being
    /// whitespace-separated element ids.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        GroundSet::new(n)?;
        let text = text.trim();
        if text.is_empty() {
            return if n == 0 {
                Ok(Partition::bottom(0))
            } else {
                Err(Error::EmptyBlock)
            };
        }
        let mut blocks = Vec::new();
        let mut seen = ElementSet::EMPTY;
        for raw in text.split('|') {
            let mut block = ElementSet::EMPTY;
            for tok in raw.split_whitespace() {
                let e: usize = tok
                    .parse()
                    .map_err(|_| Error::Malformed(format!("bad element id {tok:?}")))?;
                if e >= n {
                    return Err(Error::OutOfRange { element: e, n });
                }
                if seen.contains(e) {
                    return Err(Error::DuplicateElement(e));
                }
                seen.insert(e);
                block.insert(e);
            }
            if block.is_empty() {
                return Err(Error::EmptyBlock);
            }
            blocks.push(block);
        }
        Partition::from_blocks(n, blocks)
    }

    /// Parses a literal on the smallest ground set containing all of its ids.
    pub fn parse_inferred(text: &str) -> Result<Self> {
        let mut max = None::<usize>;
        for tok in text.split(|c: char| c == '|' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let e: usize = tok
                .parse()
                .map_err(|_| Error::Malformed(format!("bad element id {tok:?}")))?;
            max = Some(max.map_or(e, |m: usize| m.max(e)));
        }
        match max {
            Some(m) if m >= HARD_CAP => Err(Error::CapExceeded {
                n: m + 1,
                cap: HARD_CAP,
            }),
            Some(m) => Partition::parse(text, m + 1),
            None => Partition::parse(text, 0),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[ElementSet] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Index of the block containing `e`.
    pub fn block_of(&self, e: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(e))
    }

    /// Block sizes, largest first.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.blocks.iter().map(|b| b.len()).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }

    pub fn labels(&self) -> LabelVector {
        let mut labels = vec![0u8; self.n];
        for (i, b) in self.blocks.iter().enumerate() {
            for e in b.iter() {
                labels[e] = i as u8;
            }
        }
        LabelVector(labels)
    }

    pub fn is_bottom(&self) -> bool {
        self.blocks.len() == self.n
    }

    pub fn is_top(&self) -> bool {
        self.blocks.len() <= 1
    }

    /// Exactly one block has two or more elements.
    pub fn is_singular(&self) -> bool {
        self.blocks.iter().filter(|b| b.len() >= 2).count() == 1
    }

    fn same_ground(&self, other: &Partition) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::GroundMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }

    /// Refinement: every block of `self` lies inside a block of `other`.
    pub fn leq(&self, other: &Partition) -> Result<bool> {
        self.same_ground(other)?;
        Ok(self.leq_same(other))
    }

    pub(crate) fn leq_same(&self, other: &Partition) -> bool {
        if self.blocks.len() < other.blocks.len() {
            return false;
        }
        self.blocks.iter().all(|p| other.blocks.iter().any(|q| p.is_subset(*q)))
    }

    /// Strict refinement.
    pub fn lt(&self, other: &Partition) -> Result<bool> {
        self.same_ground(other)?;
        Ok(self.lt_same(other))
    }

    pub(crate) fn lt_same(&self, other: &Partition) -> bool {
        self.blocks.len() > other.blocks.len() && self.leq_same(other)
    }

    pub(crate) fn comparable_same(&self, other: &Partition) -> bool {
        self.leq_same(other) || other.leq_same(self)
    }

    /// Greatest lower bound: all non-empty pairwise block intersections.
    pub fn meet(&self, other: &Partition) -> Result<Partition> {
        self.same_ground(other)?;
        Ok(self.meet_same(other))
    }

    pub(crate) fn meet_same(&self, other: &Partition) -> Partition {
        let mut blocks: Vec<ElementSet> = Vec::with_capacity(self.blocks.len().max(other.blocks.len()));
        for p in &self.blocks {
            for q in &other.blocks {
                let x = *p & *q;
                if !x.is_empty() {
                    blocks.push(x);
                }
            }
        }
        blocks.sort_unstable_by_key(|b| b.first());
        Partition { n: self.n, blocks }
    }

    /// Least upper bound: connected components of the union of both relations.
    pub fn join(&self, other: &Partition) -> Result<Partition> {
        self.same_ground(other)?;
        Ok(self.join_same(other))
    }

    pub(crate) fn join_same(&self, other: &Partition) -> Partition {
        let mut ds = DisjointSets::new(self.n);
        for b in self.blocks.iter().chain(&other.blocks) {
            let mut it = b.iter();
            if let Some(first) = it.next() {
                for e in it {
                    ds.union(first, e);
                }
            }
        }
        let mut root_block: Vec<usize> = vec![usize::MAX; self.n];
        let mut blocks: Vec<ElementSet> = Vec::with_capacity(ds.components());
        for e in 0..self.n {
            let r = ds.find(e);
            if root_block[r] == usize::MAX {
                root_block[r] = blocks.len();
                blocks.push(ElementSet::EMPTY);
            }
            blocks[root_block[r]].insert(e);
        }
        Partition { n: self.n, blocks }
    }

    /// `other` is obtained from `self` by merging exactly two blocks.
    pub fn covers(&self, other: &Partition) -> Result<bool> {
        self.same_ground(other)?;
        Ok(self.covered_by_same(other))
    }

    pub(crate) fn covered_by_same(&self, other: &Partition) -> bool {
        self.blocks.len() == other.blocks.len() + 1 && self.leq_same(other)
    }

    /// Merges blocks `i` and `j` (indices in canonical order).
    pub fn merge(&self, i: usize, j: usize) -> Partition {
        assert!(i != j && i < self.blocks.len() && j < self.blocks.len());
        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
        let mut blocks = self.blocks.clone();
        let merged = blocks[lo] | blocks[hi];
        blocks.remove(hi);
        blocks[lo] = merged;
        Partition { n: self.n, blocks }
    }

    /// Every partition covering `self`, one per pair of blocks, in
    /// lexicographic order of the merged block indices.
    pub fn upper_covers(&self) -> impl Iterator<Item = Partition> + '_ {
        let m = self.blocks.len();
        (0..m).flat_map(move |i| (i + 1..m).map(move |j| self.merge(i, j)))
    }

    /// Every partition covered by `self`: one block split into two parts.
    /// Lazy; a block of size `s` contributes `2^(s−1) − 1` covers.
    pub fn lower_covers(&self) -> impl Iterator<Item = Partition> + '_ {
        self.blocks.iter().enumerate().flat_map(move |(i, &b)| {
            // Non-empty subsets of `b` minus its least element split off;
            // the part holding the least element keeps at least that one.
            let rest = b.bits() & b.bits().wrapping_sub(1);
            let subs = std::iter::successors((rest != 0).then_some(rest), move |&sub| {
                let next = (sub - 1) & rest;
                (next != 0).then_some(next)
            });
            subs.map(move |sub| {
                let t = ElementSet::from_bits(sub);
                let mut blocks = self.blocks.clone();
                blocks[i] = b - t;
                blocks.push(t);
                blocks.sort_unstable_by_key(|x| x.first());
                Partition { n: self.n, blocks }
            })
        })
    }

    /// Number of lower covers: `Σ_B (2^(|B|−1) − 1)`.
    pub fn lower_cover_count(&self) -> u128 {
        self.blocks.iter().map(|b| (1u128 << (b.len() - 1)) - 1).sum()
    }

    /// Number of upper covers: `C(m, 2)` for `m` blocks.
    pub fn upper_cover_count(&self) -> u128 {
        let m = self.blocks.len() as u128;
        m * m.saturating_sub(1) / 2
    }
}

impl Ord for Partition {
    /// Ground-set size first, then lexicographic order of label strings.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.labels().0.cmp(&other.labels().0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for (j, e) in b.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

#[derive(Serialize, Deserialize)]
struct PartitionJson {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PartitionJson {
            n: self.n,
            blocks: self.blocks.iter().map(|b| b.iter().collect()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PartitionJson::deserialize(d)?;
        let n = raw.n;
        if n > HARD_CAP {
            return Err(serde::de::Error::custom(Error::CapExceeded { n, cap: HARD_CAP }));
        }
        let mut blocks = Vec::with_capacity(raw.blocks.len());
        for b in raw.blocks {
            let mut set = ElementSet::EMPTY;
            for e in b {
                if e >= n {
                    return Err(serde::de::Error::custom(Error::OutOfRange { element: e, n }));
                }
                if set.contains(e) {
                    return Err(serde::de::Error::custom(Error::DuplicateElement(e)));
                }
                set.insert(e);
            }
            blocks.push(set);
        }
        Partition::from_blocks(n, blocks).map_err(serde::de::Error::custom)
    }
}
