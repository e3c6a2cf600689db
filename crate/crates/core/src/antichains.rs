//! Antichains: verification, maximality against the full lattice, the
//! doubleton and bipartition families, and greedy completion.

use crate::error::{check_cap, Error, Result};
use crate::lattice::{atoms, coatoms, RgsPartitions};
use crate::partition::{Partition, HARD_CAP};

/// Default cap for maximality checks, which stream the whole lattice.
pub const ANTICHAIN_CAP: usize = 10;
/// Hard limit for [`verify_antichain_with_cap`] and friends.
pub const ANTICHAIN_HARD_CAP: usize = 12;

/// Pairwise incomparable partitions on one ground set, kept in RGS order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Antichain {
    n: usize,
    members: Vec<Partition>,
}

impl Antichain {
    pub fn new(n: usize, mut members: Vec<Partition>) -> Result<Self> {
        check_ground(n, &members)?;
        members.sort();
        members.dedup();
        if let Some((i, j)) = comparable_pair(&members) {
            return Err(Error::NotAnAntichain(i, j));
        }
        Ok(Antichain { n, members })
    }

    pub fn n(&self) -> usize {
        self.n
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
        self.members.binary_search(p).is_ok()
    }

    pub fn into_vec(self) -> Vec<Partition> {
        self.members
    }
}

fn check_ground(n: usize, members: &[Partition]) -> Result<()> {
    check_cap(n, HARD_CAP)?;
    match members.iter().find(|p| p.n() != n) {
        Some(bad) => Err(Error::GroundMismatch {
            left: n,
            right: bad.n(),
        }),
        None => Ok(()),
    }
}

fn comparable_pair(members: &[Partition]) -> Option<(usize, usize)> {
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            if members[i].comparable_same(&members[j]) {
                return Some((i, j));
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AntichainWitness {
    /// Positions (in the given order) of two comparable members.
    Comparable(usize, usize),
    /// A partition outside the set that is incomparable with every member.
    Addable(Partition),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntichainReport {
    pub is_antichain: bool,
    pub is_maximal: bool,
    pub witness: Option<AntichainWitness>,
}

/// Checks that `members` is an antichain of the lattice on `{0..n}` and
/// whether it is maximal. Maximality streams the lattice, hence the cap.
pub fn verify_antichain(members: &[Partition], n: usize) -> Result<AntichainReport> {
    verify_antichain_with_cap(members, n, ANTICHAIN_CAP)
}

pub fn verify_antichain_with_cap(members: &[Partition], n: usize, cap: usize) -> Result<AntichainReport> {
    check_limits(n, cap)?;
    check_ground(n, members)?;
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            // Duplicates are one element of the set, not a comparable pair.
            if members[i] != members[j] && members[i].comparable_same(&members[j]) {
                return Ok(AntichainReport {
                    is_antichain: false,
                    is_maximal: false,
                    witness: Some(AntichainWitness::Comparable(i, j)),
                });
            }
        }
    }
    let addable = RgsPartitions::new(n)?.find(|p| members.iter().all(|m| m != p && !m.comparable_same(p)));
    Ok(AntichainReport {
        is_antichain: true,
        is_maximal: addable.is_none(),
        witness: addable.map(AntichainWitness::Addable),
    })
}

fn check_limits(n: usize, cap: usize) -> Result<()> {
    if cap > ANTICHAIN_HARD_CAP {
        return Err(Error::HardLimit {
            cap,
            hard: ANTICHAIN_HARD_CAP,
        });
    }
    check_cap(n, cap)
}

/// The singular partitions whose non-singleton block is a doubleton; these
/// are exactly the atoms, `n(n−1)/2` of them.
pub fn doubleton_antichain(n: usize) -> Result<Antichain> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "doubleton antichain needs n ≥ 2, got {n}"
        )));
    }
    Ok(Antichain { n, members: atoms(n)? })
}

/// The two-block partitions `{A, complement of A}`, `2^(n−1) − 1` of them.
pub fn bipartition_antichain(n: usize) -> Result<Antichain> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "bipartition antichain needs n ≥ 2, got {n}"
        )));
    }
    Ok(Antichain {
        n,
        members: coatoms(n)?,
    })
}

/// Greedily adds, in RGS order, every partition incomparable with all
/// members so far. The result is a maximal antichain containing `members`.
pub fn extend_to_maximal_antichain(members: &[Partition], n: usize) -> Result<Antichain> {
    extend_to_maximal_antichain_with_cap(members, n, ANTICHAIN_CAP)
}

pub fn extend_to_maximal_antichain_with_cap(members: &[Partition], n: usize, cap: usize) -> Result<Antichain> {
    check_limits(n, cap)?;
    let base = Antichain::new(n, members.to_vec())?;
    let mut out = base.members;
    let original = out.len();
    for p in RgsPartitions::new(n)? {
        if out.iter().all(|m| m != &p && !m.comparable_same(&p)) {
            out.push(p);
        }
    }
    if out.len() != original {
        out.sort();
    }
    Ok(Antichain { n, members: out })
}
