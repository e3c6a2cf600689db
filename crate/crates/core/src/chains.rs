//! Chains in the partition lattice: verification, completion to maximal
//! chains, exhaustive enumeration, lifting of subset chains, and the
//! keyframe/inbetween construction on `{0,1}^k`.

use crate::error::{check_cap, Error, Result};
use crate::partition::{Partition, HARD_CAP};
use crate::set::ElementSet;

/// Default cap for [`maximal_chains`].
pub const MAXIMAL_CHAINS_CAP: usize = 6;
/// Hard limit for [`maximal_chains_with_cap`].
pub const MAXIMAL_CHAINS_HARD_CAP: usize = 8;
/// Largest bit-length for [`keyframe_chain`]; `2^7` elements fill a block word.
pub const KEYFRAME_MAX_K: usize = 7;

/// A strictly increasing sequence of partitions on one ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    members: Vec<Partition>,
}

impl Chain {
    pub fn new(members: Vec<Partition>) -> Result<Self> {
        check_common_ground(&members)?;
        if let Some(i) = (1..members.len()).find(|&i| !members[i - 1].lt_same(&members[i])) {
            return Err(Error::NotAChain(i - 1, i));
        }
        Ok(Chain { members })
    }

    /// Ground-set size, or `None` for the empty chain.
    pub fn n(&self) -> Option<usize> {
        self.members.first().map(Partition::n)
    }

    pub fn members(&self) -> &[Partition] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.members.contains(p)
    }

    pub fn into_vec(self) -> Vec<Partition> {
        self.members
    }
}

fn check_common_ground(members: &[Partition]) -> Result<()> {
    if let Some(first) = members.first() {
        if let Some(bad) = members.iter().find(|p| p.n() != first.n()) {
            return Err(Error::GroundMismatch {
                left: first.n(),
                right: bad.n(),
            });
        }
    }
    Ok(())
}

/// Why a sequence falls short of being a (saturated, maximal) chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainWitness {
    /// Consecutive members that are not strictly increasing.
    NotIncreasing { lower: usize, upper: usize },
    /// A partition strictly between members `lower` and `lower + 1`.
    Gap { lower: usize, insert: Partition },
    /// A partition that extends the chain below its least or above its
    /// greatest member.
    Extendable { insert: Partition },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub is_chain: bool,
    pub is_saturated: bool,
    pub is_maximal: bool,
    pub witness: Option<ChainWitness>,
}

/// Checks chain, saturation and maximality of an ordered sequence.
///
/// A chain of a finite lattice is maximal exactly when it runs from `⊥` to
/// `⊤` through covering pairs, so the check is linear in the chain length.
pub fn verify_chain(members: &[Partition]) -> Result<ChainReport> {
    if members.is_empty() {
        return Err(Error::InvalidArgument("a chain needs at least one partition".into()));
    }
    check_common_ground(members)?;
    for i in 1..members.len() {
        if !members[i - 1].lt_same(&members[i]) {
            return Ok(ChainReport {
                is_chain: false,
                is_saturated: false,
                is_maximal: false,
                witness: Some(ChainWitness::NotIncreasing { lower: i - 1, upper: i }),
            });
        }
    }
    for i in 1..members.len() {
        if !members[i - 1].covered_by_same(&members[i]) {
            let insert = merge_step(&members[i - 1], &members[i]);
            return Ok(ChainReport {
                is_chain: true,
                is_saturated: false,
                is_maximal: false,
                witness: Some(ChainWitness::Gap { lower: i - 1, insert }),
            });
        }
    }
    let first = &members[0];
    let last = &members[members.len() - 1];
    let witness = if !first.is_bottom() {
        first.lower_covers().next()
    } else if !last.is_top() {
        last.upper_covers().next()
    } else {
        None
    };
    Ok(ChainReport {
        is_chain: true,
        is_saturated: true,
        is_maximal: witness.is_none(),
        witness: witness.map(|insert| ChainWitness::Extendable { insert }),
    })
}

/// One covering step from `lower` toward `upper` (`lower < upper`): merges the
/// two blocks of `lower` with the smallest minima that `upper` keeps together.
fn merge_step(lower: &Partition, upper: &Partition) -> Partition {
    let owner: Vec<usize> = lower
        .blocks()
        .iter()
        .map(|b| upper.block_of(b.first().unwrap()).unwrap())
        .collect();
    for i in 0..owner.len() {
        if let Some(j) = (i + 1..owner.len()).find(|&j| owner[j] == owner[i]) {
            return lower.merge(i, j);
        }
    }
    unreachable!("merge_step called on a non-strict pair")
}

/// Completes a chain to a maximal one by adding `⊥`, `⊤` and covering steps
/// in every gap. Deterministic; a maximal chain is returned unchanged.
pub fn extend_to_maximal(chain: &Chain) -> Result<Chain> {
    let Some(n) = chain.n() else {
        return Err(Error::InvalidArgument("cannot extend an empty chain".into()));
    };
    let mut anchors: Vec<Partition> = Vec::with_capacity(chain.len() + 2);
    if !chain.members[0].is_bottom() {
        anchors.push(Partition::bottom(n));
    }
    anchors.extend(chain.members.iter().cloned());
    if !anchors.last().unwrap().is_top() {
        anchors.push(Partition::top(n));
    }
    let mut out = Vec::with_capacity(n.max(1));
    out.push(anchors[0].clone());
    for target in &anchors[1..] {
        let mut cur = out.last().unwrap().clone();
        while cur.block_count() > target.block_count() + 1 {
            cur = merge_step(&cur, target);
            out.push(cur.clone());
        }
        out.push(target.clone());
    }
    Ok(Chain { members: out })
}

/// Streams every maximal chain of the lattice on `{0..n}`, `⊥` first.
pub fn maximal_chains(n: usize) -> Result<MaximalChains> {
    maximal_chains_with_cap(n, MAXIMAL_CHAINS_CAP)
}

pub fn maximal_chains_with_cap(n: usize, cap: usize) -> Result<MaximalChains> {
    if cap > MAXIMAL_CHAINS_HARD_CAP {
        return Err(Error::HardLimit {
            cap,
            hard: MAXIMAL_CHAINS_HARD_CAP,
        });
    }
    check_cap(n, cap)?;
    let bottom = Partition::bottom(n);
    let covers: Vec<Partition> = bottom.upper_covers().collect();
    Ok(MaximalChains {
        stack: vec![Frame {
            node: bottom,
            covers,
            next: 0,
        }],
    })
}

#[derive(Debug)]
struct Frame {
    node: Partition,
    covers: Vec<Partition>,
    next: usize,
}

/// Depth-first stream of maximal chains; see [`maximal_chains`].
#[derive(Debug)]
pub struct MaximalChains {
    stack: Vec<Frame>,
}

impl Iterator for MaximalChains {
    type Item = Chain;

    fn next(&mut self) -> Option<Chain> {
        loop {
            let top = self.stack.last_mut()?;
            if top.node.is_top() {
                let members = self.stack.iter().map(|f| f.node.clone()).collect();
                self.stack.pop();
                return Some(Chain { members });
            }
            if top.next < top.covers.len() {
                let node = top.covers[top.next].clone();
                top.next += 1;
                let covers = node.upper_covers().collect();
                self.stack.push(Frame { node, covers, next: 0 });
            } else {
                self.stack.pop();
            }
        }
    }
}

/// Maps a strictly increasing family of subsets (each of size ≥ 2) to the
/// chain of singular partitions they span.
pub fn lift_subset_chain(sets: &[ElementSet], n: usize) -> Result<Chain> {
    check_cap(n, HARD_CAP)?;
    let mut members = Vec::with_capacity(sets.len());
    for (i, &s) in sets.iter().enumerate() {
        if s.len() < 2 {
            return Err(Error::BadSubsetChain(i));
        }
        if i > 0 && !(sets[i - 1].is_subset(s) && sets[i - 1] != s) {
            return Err(Error::BadSubsetChain(i));
        }
        members.push(Partition::diag(s, n)?);
    }
    Ok(Chain { members })
}

/// Layout of the keyframe construction on `n = 2^k` elements.
///
/// Element `e` stands for its `k`-bit big-endian expansion. At level `δ` the
/// keyframe groups elements by their first `δ` bits, so its blocks are
/// contiguous ranges of length `2^(k−δ)`. Blocks of a level are ordered by the
/// numeric value of their prefix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KeyframePlan {
    k: usize,
}

impl KeyframePlan {
    pub fn new(k: usize) -> Result<Self> {
        if k > KEYFRAME_MAX_K {
            return Err(Error::CapExceeded {
                n: k,
                cap: KEYFRAME_MAX_K,
            });
        }
        Ok(KeyframePlan { k })
    }

    pub fn k(self) -> usize {
        self.k
    }

    pub fn n(self) -> usize {
        1 << self.k
    }

    /// Blocks of keyframe `δ` in plan order: block `p` holds the elements
    /// whose `δ`-bit prefix equals `p`.
    pub fn block_order(self, delta: usize) -> Vec<ElementSet> {
        assert!(delta <= self.k);
        let width = 1usize << (self.k - delta);
        (0..1usize << delta)
            .map(|p| ElementSet::range(p * width, (p + 1) * width))
            .collect()
    }

    /// Keyframe `δ`: `2^δ` blocks of size `2^(k−δ)`. Level 0 is `⊤`, level `k` is `⊥`.
    pub fn keyframe(self, delta: usize) -> Partition {
        Partition::from_sorted_blocks(self.n(), self.block_order(delta))
    }

    /// Keyframe `δ` with its first `α` blocks (in plan order) split in two.
    /// `α = 0` gives keyframe `δ`, `α = 2^δ` gives keyframe `δ + 1`.
    pub fn inbetween(self, delta: usize, alpha: usize) -> Partition {
        assert!(delta < self.k && alpha <= 1 << delta);
        let fine = self.block_order(delta + 1);
        let blocks = self
            .block_order(delta)
            .into_iter()
            .enumerate()
            .flat_map(|(p, b)| {
                if p < alpha {
                    vec![fine[2 * p], fine[2 * p + 1]]
                } else {
                    vec![b]
                }
            })
            .collect();
        Partition::from_sorted_blocks(self.n(), blocks)
    }

    /// The saturated segment from keyframe `δ + 1` up to keyframe `δ`, both included.
    pub fn segment(self, delta: usize) -> Vec<Partition> {
        (0..=1usize << delta).rev().map(|a| self.inbetween(delta, a)).collect()
    }

    pub fn chain(self) -> Chain {
        let mut members = vec![Partition::bottom(self.n())];
        for delta in (0..self.k).rev() {
            for alpha in (0..1usize << delta).rev() {
                members.push(self.inbetween(delta, alpha));
            }
        }
        Chain { members }
    }
}

/// The maximal chain of length `2^k` through every keyframe on `{0,1}^k`.
pub fn keyframe_chain(k: usize) -> Result<Chain> {
    Ok(KeyframePlan::new(k)?.chain())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Partition {
        Partition::parse(s, n).unwrap()
    }

    #[test]
    fn verify_examples() {
        let bot = Partition::bottom(3);
        let top = Partition::top(3);
        let r = verify_chain(&[bot.clone(), p("0 1|2", 3), top.clone()]).unwrap();
        assert!(r.is_chain && r.is_saturated && r.is_maximal);
        assert_eq!(r.witness, None);

        let r = verify_chain(&[bot.clone(), top.clone()]).unwrap();
        assert!(r.is_chain && !r.is_saturated && !r.is_maximal);
        match r.witness {
            Some(ChainWitness::Gap { lower: 0, insert }) => {
                assert!(bot.covers(&insert).unwrap() && insert.covers(&top).unwrap());
            }
            other => panic!("unexpected witness {other:?}"),
        }

        let r = verify_chain(&[p("0 1|2", 3), p("0 2|1", 3)]).unwrap();
        assert!(!r.is_chain);
        assert_eq!(r.witness, Some(ChainWitness::NotIncreasing { lower: 0, upper: 1 }));
    }

    #[test]
    fn saturated_but_short() {
        let r = verify_chain(&[p("0 1|2", 3), Partition::top(3)]).unwrap();
        assert!(r.is_chain && r.is_saturated && !r.is_maximal);
        assert_eq!(
            r.witness,
            Some(ChainWitness::Extendable {
                insert: Partition::bottom(3)
            })
        );
        let r = verify_chain(&[Partition::bottom(3)]).unwrap();
        assert!(!r.is_maximal);
    }

    #[test]
    fn verify_errors() {
        assert!(verify_chain(&[]).is_err());
        assert_eq!(
            verify_chain(&[Partition::bottom(2), Partition::top(3)]),
            Err(Error::GroundMismatch { left: 2, right: 3 })
        );
        assert_eq!(
            Chain::new(vec![Partition::top(3), Partition::bottom(3)]),
            Err(Error::NotAChain(0, 1))
        );
    }

    #[test]
    fn extend_examples() {
        let c = Chain::new(vec![Partition::bottom(4), Partition::top(4)]).unwrap();
        let m = extend_to_maximal(&c).unwrap();
        assert_eq!(m.len(), 4);
        assert!(verify_chain(m.members()).unwrap().is_maximal);
        assert_eq!(m.members()[1], p("0 1|2|3", 4));
        assert_eq!(extend_to_maximal(&m).unwrap(), m);

        let c = Chain::new(vec![p("0 1|2 3", 4)]).unwrap();
        let m = extend_to_maximal(&c).unwrap();
        assert_eq!(m.len(), 4);
        assert!(m.contains(&p("0 1|2 3", 4)));
        assert!(verify_chain(m.members()).unwrap().is_maximal);
    }

    #[test]
    fn extend_tiny_grounds() {
        for n in 0..=1 {
            let c = Chain::new(vec![Partition::bottom(n)]).unwrap();
            let m = extend_to_maximal(&c).unwrap();
            assert_eq!(m.len(), 1);
            assert!(verify_chain(m.members()).unwrap().is_maximal);
        }
    }

    #[test]
    fn maximal_chain_counts() {
        assert_eq!(maximal_chains(2).unwrap().count(), 1);
        assert_eq!(maximal_chains(3).unwrap().count(), 3);
        // Product of C(j, 2) for j = 2..=n.
        assert_eq!(maximal_chains(4).unwrap().count(), 18);
        assert_eq!(maximal_chains(5).unwrap().count(), 180);
        let only = maximal_chains(2).unwrap().next().unwrap();
        assert_eq!(only.members(), &[Partition::bottom(2), Partition::top(2)]);
        assert!(maximal_chains(7).is_err());
        assert!(maximal_chains_with_cap(9, 9).is_err());
    }

    #[test]
    fn lift_examples() {
        let s01: ElementSet = [0, 1].into_iter().collect();
        let s012: ElementSet = [0, 1, 2].into_iter().collect();
        let c = lift_subset_chain(&[s01, s012], 4).unwrap();
        assert_eq!(c.members(), &[p("0 1|2|3", 4), p("0 1 2|3", 4)]);
        assert_eq!(lift_subset_chain(&[s012], 4).unwrap().len(), 1);
        assert_eq!(lift_subset_chain(&[s012, s01], 4), Err(Error::BadSubsetChain(1)));
        assert_eq!(lift_subset_chain(&[s01, s01], 4), Err(Error::BadSubsetChain(1)));
        assert_eq!(
            lift_subset_chain(&[ElementSet::singleton(0)], 4),
            Err(Error::BadSubsetChain(0))
        );
    }

    #[test]
    fn keyframe_examples() {
        let c = keyframe_chain(2).unwrap();
        let lits: Vec<String> = c.members().iter().map(|p| p.to_string()).collect();
        assert_eq!(lits, ["0|1|2|3", "0|1|2 3", "0 1|2 3", "0 1 2 3"]);
        assert_eq!(
            keyframe_chain(1).unwrap().members(),
            &[Partition::bottom(2), Partition::top(2)]
        );
        assert_eq!(keyframe_chain(0).unwrap().members(), &[Partition::top(1)]);
        assert!(keyframe_chain(8).is_err());
    }

    #[test]
    fn keyframe_levels() {
        let plan = KeyframePlan::new(3).unwrap();
        assert_eq!(plan.keyframe(0), Partition::top(8));
        assert_eq!(plan.keyframe(3), Partition::bottom(8));
        assert_eq!(plan.keyframe(1).to_string(), "0 1 2 3|4 5 6 7");
        assert_eq!(plan.inbetween(1, 0), plan.keyframe(1));
        assert_eq!(plan.inbetween(1, 2), plan.keyframe(2));
        assert_eq!(plan.inbetween(1, 1).to_string(), "0 1|2 3|4 5 6 7");
        let seg = plan.segment(2);
        assert_eq!(seg.len(), 5);
        assert_eq!(seg[0], plan.keyframe(3));
        assert_eq!(seg[4], plan.keyframe(2));
    }
}
