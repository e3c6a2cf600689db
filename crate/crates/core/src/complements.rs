//! Lattice complements: `P ∧ Q = ⊥` and `P ∨ Q = ⊤`.
//!
//! [`enumerate_complements`] is a backtracking search that assigns elements to
//! blocks of `Q` in restricted-growth order. Two constraints prune it:
//!
//! * a block of `Q` may hold at most one element of each block of `P`
//!   (equivalent to `P ∧ Q = ⊥`);
//! * placing one element merges at most two components of the graph whose
//!   vertices are the blocks of `P` and whose edges come from blocks of `Q`,
//!   so a branch dies once the components left exceed the elements left + 1.
//!
//! The constructive families [`split_transversal_complement`] and
//! [`injection_complement`] build complements directly from a choice of
//! representatives or an injection into a large block.

use rayon::prelude::*;

use crate::counting::{lift, power, CountScalar};
use crate::error::{check_cap, Error, Result};
use crate::lattice::RgsPartitions;
use crate::partition::Partition;
use crate::set::ElementSet;
use crate::unionfind::DisjointSets;

/// Default cap for complement enumeration.
pub const COMPLEMENTS_CAP: usize = 11;
/// Default cap for the per-partition census.
pub const CENSUS_CAP: usize = 9;
/// Hard limit shared by both.
pub const COMPLEMENTS_HARD_CAP: usize = 12;

/// `P ∧ Q = ⊥` and `P ∨ Q = ⊤`.
pub fn is_complement(p: &Partition, q: &Partition) -> Result<bool> {
    Ok(p.meet(q)?.is_bottom() && p.join_same(q).is_top())
}

struct Search<F> {
    n: usize,
    m: usize,
    owner: Vec<usize>,
    blocks: Vec<ElementSet>,
    touched: Vec<u128>,
    visit: F,
}

impl<F: FnMut(&[ElementSet])> Search<F> {
    fn components(&self) -> usize {
        let mut ds = DisjointSets::new(self.m);
        for &mask in &self.touched {
            let mut rest = mask;
            let first = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            while rest != 0 {
                ds.union(first, rest.trailing_zeros() as usize);
                rest &= rest - 1;
            }
        }
        ds.components()
    }

    fn run(&mut self, e: usize) {
        if self.m > 0 && self.components() > self.n - e + 1 {
            return;
        }
        if e == self.n {
            (self.visit)(&self.blocks);
            return;
        }
        let bit = 1u128 << self.owner[e];
        for j in 0..self.blocks.len() {
            if self.touched[j] & bit != 0 {
                continue;
            }
            self.blocks[j].insert(e);
            self.touched[j] |= bit;
            self.run(e + 1);
            self.blocks[j].remove(e);
            self.touched[j] &= !bit;
        }
        self.blocks.push(ElementSet::singleton(e));
        self.touched.push(bit);
        self.run(e + 1);
        self.blocks.pop();
        self.touched.pop();
    }
}

fn search_complements(p: &Partition, visit: impl FnMut(&[ElementSet])) {
    let n = p.n();
    let mut owner = vec![0usize; n];
    for (i, b) in p.blocks().iter().enumerate() {
        for e in b.iter() {
            owner[e] = i;
        }
    }
    let mut s = Search {
        n,
        m: p.block_count(),
        owner,
        blocks: Vec::with_capacity(n),
        touched: Vec::with_capacity(n),
        visit,
    };
    s.run(0);
}

/// All complements of `p`, in RGS order.
pub fn enumerate_complements(p: &Partition) -> Result<Vec<Partition>> {
    enumerate_complements_with_cap(p, COMPLEMENTS_CAP)
}

pub fn enumerate_complements_with_cap(p: &Partition, cap: usize) -> Result<Vec<Partition>> {
    check_limits(p.n(), cap)?;
    let mut out = Vec::new();
    search_complements(p, |blocks| {
        // Blocks are opened in order of their least element.
        out.push(Partition::from_sorted_blocks(p.n(), blocks.to_vec()));
    });
    Ok(out)
}

/// Complement counts of `p` indexed by block count: `counts[k]` complements
/// have exactly `k` blocks.
pub fn complement_counts_by_blocks(p: &Partition) -> Result<Vec<usize>> {
    check_limits(p.n(), COMPLEMENTS_CAP)?;
    Ok(counts_by_blocks(p))
}

fn counts_by_blocks(p: &Partition) -> Vec<usize> {
    let mut counts = vec![0usize; p.n() + 1];
    search_complements(p, |blocks| counts[blocks.len()] += 1);
    counts
}

fn check_limits(n: usize, cap: usize) -> Result<()> {
    if cap > COMPLEMENTS_HARD_CAP {
        return Err(Error::HardLimit {
            cap,
            hard: COMPLEMENTS_HARD_CAP,
        });
    }
    check_cap(n, cap)
}

/// Predicted number of complements of `p` with exactly `n − m + 1` blocks:
/// `|B_1|·…·|B_m| · (n − m + 1)^(m − 2)`, and 1 for `⊤`.
pub fn grieser_count<T: CountScalar>(p: &Partition) -> Result<T> {
    let n = p.n();
    let m = p.block_count();
    match m {
        0 => Err(Error::InvalidArgument(
            "the empty partition has no block count to predict from".into(),
        )),
        1 => Ok(T::one()),
        _ => {
            let mut acc: T = power(n - m + 1, m - 2)?;
            for b in p.blocks() {
                acc = acc
                    .checked_mul(&lift(b.len(), "grieser_count")?)
                    .ok_or(Error::Overflow("grieser_count"))?;
            }
            Ok(acc)
        }
    }
}

/// Representatives for the two-part transversal construction: `ι ≠ υ` from
/// one block `B₀` of `P`, and one element `γ(B)` from every other block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalChoice {
    pub iota: usize,
    pub upsilon: usize,
    pub gamma: Vec<usize>,
}

impl TransversalChoice {
    /// `B₀` is the first block with two or more elements, `ι` and `υ` its two
    /// least elements, and `γ(B)` the least element of each other block.
    pub fn least(p: &Partition) -> Result<Self> {
        let b0 = p
            .blocks()
            .iter()
            .position(|b| b.len() >= 2)
            .ok_or_else(no_eligible_block)?;
        let mut it = p.blocks()[b0].iter();
        let iota = it.next().unwrap();
        let upsilon = it.next().unwrap();
        let gamma = p
            .blocks()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != b0)
            .map(|(_, b)| b.first().unwrap())
            .collect();
        Ok(TransversalChoice { iota, upsilon, gamma })
    }
}

fn no_eligible_block() -> Error {
    Error::InvalidArgument("partition has no block with two elements (it is ⊥)".into())
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(format!("malformed transversal: {}", msg.into()))
}

/// Resolved choice: base block index and `γ` keyed by block index.
struct Transversal {
    base: usize,
    gamma: Vec<Option<usize>>,
}

fn resolve(p: &Partition, choice: &TransversalChoice) -> Result<Transversal> {
    if !p.blocks().iter().any(|b| b.len() >= 2) {
        return Err(no_eligible_block());
    }
    let n = p.n();
    for e in [choice.iota, choice.upsilon] {
        if e >= n {
            return Err(Error::OutOfRange { element: e, n });
        }
    }
    if choice.iota == choice.upsilon {
        return Err(malformed("ι and υ must differ"));
    }
    let base = p.block_of(choice.iota).unwrap();
    if p.block_of(choice.upsilon) != Some(base) {
        return Err(malformed("ι and υ must share a block"));
    }
    let mut gamma = vec![None; p.block_count()];
    for &g in &choice.gamma {
        let b = p.block_of(g).ok_or(Error::OutOfRange { element: g, n })?;
        if b == base {
            return Err(malformed(format!("γ element {g} lies in the base block")));
        }
        if gamma[b].replace(g).is_some() {
            return Err(malformed(format!("two γ elements in the block of {g}")));
        }
    }
    if let Some(b) = (0..gamma.len()).find(|&b| b != base && gamma[b].is_none()) {
        return Err(malformed(format!(
            "no γ element for block {}",
            p.blocks()[b].first().unwrap()
        )));
    }
    Ok(Transversal { base, gamma })
}

fn build_split(p: &Partition, choice: &TransversalChoice, t: &Transversal, first: &[bool]) -> Partition {
    let mut q1 = ElementSet::singleton(choice.iota);
    let mut q2 = ElementSet::singleton(choice.upsilon);
    for (b, g) in t.gamma.iter().enumerate() {
        if let Some(g) = *g {
            if first[b] {
                q1.insert(g);
            } else {
                q2.insert(g);
            }
        }
    }
    let rest = ElementSet::full(p.n()) - q1 - q2;
    let mut blocks: Vec<ElementSet> = rest.iter().map(ElementSet::singleton).collect();
    blocks.push(q1);
    blocks.push(q2);
    blocks.sort_unstable_by_key(|b| b.first());
    Partition::from_sorted_blocks(p.n(), blocks)
}

/// The complement `{Q₁, Q₂} ∪ singletons` with `Q₁ = {ι} ∪ γ(P₁)` and
/// `Q₂ = {υ} ∪ γ(P \ (P₁ ∪ {B₀}))`. `p1` lists blocks of `p` other than `B₀`.
pub fn split_transversal_complement(p: &Partition, choice: &TransversalChoice, p1: &[ElementSet]) -> Result<Partition> {
    let t = resolve(p, choice)?;
    let mut first = vec![false; p.block_count()];
    for s in p1 {
        let b = p
            .blocks()
            .iter()
            .position(|b| b == s)
            .ok_or_else(|| malformed(format!("{s:?} is not a block of the partition")))?;
        if b == t.base {
            return Err(malformed("P₁ may not contain the base block"));
        }
        if std::mem::replace(&mut first[b], true) {
            return Err(malformed(format!("block {s:?} listed twice")));
        }
    }
    Ok(build_split(p, choice, &t, &first))
}

/// The `2^(m−1)` complements obtained from every subset `P₁` of the
/// non-base blocks, ordered by the subset's bitmask over block indices.
pub fn split_transversal_family(p: &Partition, choice: &TransversalChoice) -> Result<Vec<Partition>> {
    let t = resolve(p, choice)?;
    let others: Vec<usize> = (0..p.block_count()).filter(|&b| b != t.base).collect();
    if others.len() > 24 {
        return Err(Error::CapExceeded {
            n: others.len(),
            cap: 24,
        });
    }
    let mut out = Vec::with_capacity(1 << others.len());
    for mask in 0u32..1 << others.len() {
        let mut first = vec![false; p.block_count()];
        for (k, &b) in others.iter().enumerate() {
            first[b] = mask >> k & 1 == 1;
        }
        out.push(build_split(p, choice, &t, &first));
    }
    Ok(out)
}

/// The complement pairing each element `α` outside `big_block` with `σ(α)`
/// inside it; unused elements of `big_block` stay singletons.
pub fn injection_complement(p: &Partition, big_block: ElementSet, sigma: &[(usize, usize)]) -> Result<Partition> {
    if !p.blocks().contains(&big_block) {
        return Err(Error::InvalidArgument(format!(
            "{big_block:?} is not a block of the partition"
        )));
    }
    let n = p.n();
    let residue = ElementSet::full(n) - big_block;
    let mut domain = ElementSet::EMPTY;
    let mut image = ElementSet::EMPTY;
    for &(a, s) in sigma {
        if !residue.contains(a) {
            return Err(Error::InvalidArgument(format!(
                "σ is defined at {a}, which is not outside the block"
            )));
        }
        if domain.contains(a) {
            return Err(Error::InvalidArgument(format!("σ assigns {a} twice")));
        }
        if !big_block.contains(s) {
            return Err(Error::InvalidArgument(format!("σ({a}) = {s} leaves the block")));
        }
        if image.contains(s) {
            return Err(Error::InvalidArgument(format!("σ is not injective at {s}")));
        }
        domain.insert(a);
        image.insert(s);
    }
    if let Some(a) = (residue - domain).first() {
        return Err(Error::InvalidArgument(format!("σ is undefined at {a}")));
    }
    let mut blocks: Vec<ElementSet> = sigma
        .iter()
        .map(|&(a, s)| ElementSet::singleton(a) | ElementSet::singleton(s))
        .collect();
    blocks.extend((big_block - image).iter().map(ElementSet::singleton));
    blocks.sort_unstable_by_key(|b| b.first());
    Ok(Partition::from_sorted_blocks(n, blocks))
}

/// One complement per injection from the residue into `big_block`, with
/// injections in lexicographic order of their image sequences.
pub fn injection_family(p: &Partition, big_block: ElementSet) -> Result<Vec<Partition>> {
    let residue: Vec<usize> = (ElementSet::full(p.n()) - big_block).iter().collect();
    let targets: Vec<usize> = big_block.iter().collect();
    let mut out = Vec::new();
    let mut sigma = Vec::with_capacity(residue.len());
    let mut used = vec![false; targets.len()];
    fn rec(
        p: &Partition,
        big: ElementSet,
        residue: &[usize],
        targets: &[usize],
        used: &mut [bool],
        sigma: &mut Vec<(usize, usize)>,
        out: &mut Vec<Partition>,
    ) -> Result<()> {
        let k = sigma.len();
        if k == residue.len() {
            out.push(injection_complement(p, big, sigma)?);
            return Ok(());
        }
        for (t, &s) in targets.iter().enumerate() {
            if !used[t] {
                used[t] = true;
                sigma.push((residue[k], s));
                rec(p, big, residue, targets, used, sigma, out)?;
                sigma.pop();
                used[t] = false;
            }
        }
        Ok(())
    }
    if !p.blocks().contains(&big_block) {
        return Err(Error::InvalidArgument(format!(
            "{big_block:?} is not a block of the partition"
        )));
    }
    rec(p, big_block, &residue, &targets, &mut used, &mut sigma, &mut out)?;
    Ok(out)
}

/// One census line: a partition and its complement statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow<C> {
    pub partition: Partition,
    pub m: usize,
    /// Block sizes, largest first.
    pub block_sizes: Vec<usize>,
    pub total: C,
    /// Complements with exactly `n − m + 1` blocks.
    pub count_nm1: C,
    pub grieser: C,
}

impl<C: CountScalar> CensusRow<C> {
    pub fn grieser_agrees(&self) -> bool {
        self.count_nm1 == self.grieser
    }
}

/// Complement statistics for every partition of `{0..n}`, in RGS order.
/// Rows are computed in parallel on the current rayon pool; their order does
/// not depend on scheduling.
pub fn complement_census<C: CountScalar + Send>(n: usize) -> Result<Vec<CensusRow<C>>> {
    complement_census_with_cap(n, CENSUS_CAP)
}

pub fn complement_census_with_cap<C: CountScalar + Send>(n: usize, cap: usize) -> Result<Vec<CensusRow<C>>> {
    check_limits(n, cap)?;
    if n == 0 {
        return Err(Error::InvalidArgument("the census needs n ≥ 1".into()));
    }
    let universe: Vec<Partition> = RgsPartitions::new(n)?.collect();
    universe
        .into_par_iter()
        .map(|p| {
            let m = p.block_count();
            let counts = counts_by_blocks(&p);
            let total: usize = counts.iter().sum();
            Ok(CensusRow {
                m,
                block_sizes: p.block_sizes(),
                total: lift(total, "census total")?,
                count_nm1: lift(counts[n - m + 1], "census count")?,
                grieser: grieser_count(&p)?,
                partition: p,
            })
        })
        .collect()
}
