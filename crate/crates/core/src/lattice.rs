//! Exhaustive enumeration of the partition lattice on `{0..n}`.
//!
//! Partitions are generated as restricted-growth strings in lexicographic
//! order, so the first element is `⊤` (`00…0`) and the last is `⊥`
//! (`01…(n−1)`).

use std::collections::HashMap;

use crate::error::{check_cap, Error, Result};
use crate::partition::{Partition, HARD_CAP};
use crate::set::ElementSet;

/// Default cap on materialized universes.
pub const ENUMERATE_CAP: usize = 12;
/// Hard limit for materialized universes.
pub const ENUMERATE_HARD_CAP: usize = 13;

/// Streams every partition of `{0..n}` in lexicographic RGS order.
#[derive(Debug, Clone)]
pub struct RgsPartitions {
    rgs: Vec<u8>,
    done: bool,
}

impl RgsPartitions {
    pub fn new(n: usize) -> Result<Self> {
        check_cap(n, HARD_CAP)?;
        Ok(RgsPartitions {
            rgs: vec![0; n],
            done: false,
        })
    }

    fn advance(&mut self) {
        let n = self.rgs.len();
        // Prefix maxima: position i may grow up to 1 + max(rgs[0..i]).
        let mut prefix_max = vec![0u8; n];
        for i in 1..n {
            prefix_max[i] = prefix_max[i - 1].max(self.rgs[i - 1]);
        }
        for i in (1..n).rev() {
            if self.rgs[i] <= prefix_max[i] {
                self.rgs[i] += 1;
                for x in &mut self.rgs[i + 1..] {
                    *x = 0;
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for RgsPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let p = Partition::from_rgs_unchecked(&self.rgs);
        self.advance();
        Some(p)
    }
}

/// Every partition of `{0..n}` in RGS order, with index lookup.
#[derive(Debug, Clone)]
pub struct LatticeUniverse {
    n: usize,
    elements: Vec<Partition>,
    index: HashMap<Partition, usize>,
}

impl LatticeUniverse {
    pub fn enumerate(n: usize) -> Result<Self> {
        Self::enumerate_with_cap(n, ENUMERATE_CAP)
    }

    pub fn enumerate_with_cap(n: usize, cap: usize) -> Result<Self> {
        if cap > ENUMERATE_HARD_CAP {
            return Err(Error::HardLimit {
                cap,
                hard: ENUMERATE_HARD_CAP,
            });
        }
        check_cap(n, cap)?;
        let elements: Vec<Partition> = RgsPartitions::new(n)?.collect();
        let index = elements.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        Ok(LatticeUniverse { n, elements, index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Partition] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> Option<&Partition> {
        self.elements.get(i)
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Partition> {
        self.elements.iter()
    }

    pub fn top_index(&self) -> usize {
        0
    }

    pub fn bottom_index(&self) -> usize {
        self.elements.len() - 1
    }

    /// Indices of the partitions covering element `i`.
    pub fn upper_cover_indices(&self, i: usize) -> Vec<usize> {
        self.elements[i].upper_covers().map(|q| self.index[&q]).collect()
    }

    /// All covering pairs `(lower, upper)` as indices, grouped by lower element.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|i| self.upper_cover_indices(i).into_iter().map(move |j| (i, j)))
            .collect()
    }
}

impl<'a> IntoIterator for &'a LatticeUniverse {
    type Item = &'a Partition;
    type IntoIter = std::slice::Iter<'a, Partition>;
    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// The singular partitions with a doubleton block (covers of `⊥`), in RGS order.
pub fn atoms(n: usize) -> Result<Vec<Partition>> {
    check_cap(n, HARD_CAP)?;
    if n < 2 {
        return Ok(Vec::new());
    }
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let pair = ElementSet::singleton(i) | ElementSet::singleton(j);
            out.push(Partition::diag(pair, n)?);
        }
    }
    out.sort();
    Ok(out)
}

/// The two-block partitions (partitions covered by `⊤`), in RGS order.
///
/// # Errors
/// Besides the cap, refuses `n > 64` since the list would not fit in memory.
pub fn coatoms(n: usize) -> Result<Vec<Partition>> {
    check_cap(n, 64)?;
    if n < 2 {
        return Ok(Vec::new());
    }
    let all = ElementSet::full(n);
    let rest = all - ElementSet::singleton(0);
    // The block without 0 ranges over non-empty subsets of {1..n}.
    let mut out = Vec::with_capacity((1usize << (n - 1)) - 1);
    let mut sub = rest.bits();
    while sub != 0 {
        let other = ElementSet::from_bits(sub);
        out.push(Partition::from_sorted_blocks(n, vec![all - other, other]));
        sub = (sub - 1) & rest.bits();
    }
    out.sort();
    Ok(out)
}
