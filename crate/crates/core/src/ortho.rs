//! Orthocomplementation audit for the finite partition lattices.
//!
//! An ortho-map `a ↦ a′` must satisfy
//! (i) `a ∧ a′ = ⊥`, (ii) `a ∨ a′ = ⊤`, (iii) `(a ∧ b)′ = a′ ∨ b′`, (iv) `a″ = a`.
//! [`check_ortho_map`] audits a candidate, [`search_orthocomplementation`]
//! decides existence for small `n`, and [`non_ortho_witness`] gives the
//! counting obstruction for `n ≥ 5`: an ortho-map swaps the upper covers of
//! `⊥` with the lower covers of `⊤`, but there are `C(n,2)` of the former and
//! `2^(n−1) − 1` of the latter.

use std::fmt;

use crate::counting::{atom_count, coatom_count};
use crate::error::{check_cap, Error, Result};
use crate::lattice::LatticeUniverse;
use crate::partition::Partition;

/// Largest `n` accepted by [`check_ortho_map`].
pub const CHECK_CAP: usize = 6;
/// Largest `n` searched by default.
pub const SEARCH_CAP: usize = 4;
/// Largest `n` searched with the exhaustive flag.
pub const SEARCH_EXHAUSTIVE_CAP: usize = 5;

/// A total map on a [`LatticeUniverse`], stored as image indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrthoMap {
    n: usize,
    images: Vec<usize>,
}

impl OrthoMap {
    pub fn from_images(universe: &LatticeUniverse, images: Vec<usize>) -> Result<Self> {
        if images.len() != universe.len() {
            return Err(Error::InvalidArgument(format!(
                "partial map: {} images for {} partitions",
                images.len(),
                universe.len()
            )));
        }
        if let Some(&bad) = images.iter().find(|&&j| j >= universe.len()) {
            return Err(Error::InvalidArgument(format!("image index {bad} out of range")));
        }
        Ok(OrthoMap {
            n: universe.n(),
            images,
        })
    }

    /// Builds a map from explicit `(a, a′)` pairs. Every partition needs an image.
    pub fn from_pairs(universe: &LatticeUniverse, pairs: &[(Partition, Partition)]) -> Result<Self> {
        let mut images = vec![None; universe.len()];
        for (a, b) in pairs {
            let i = index(universe, a)?;
            let j = index(universe, b)?;
            if images[i].replace(j).is_some_and(|old| old != j) {
                return Err(Error::InvalidArgument(format!("two images for {a}")));
            }
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, j)| {
                j.ok_or_else(|| Error::InvalidArgument(format!("partial map: no image for {}", universe.elements()[i])))
            })
            .collect::<Result<_>>()?;
        Ok(OrthoMap {
            n: universe.n(),
            images,
        })
    }

    pub fn identity(universe: &LatticeUniverse) -> Self {
        OrthoMap {
            n: universe.n(),
            images: (0..universe.len()).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `(a, a′)` pairs in RGS order of `a`.
    pub fn pairs<'u>(&self, universe: &'u LatticeUniverse) -> Vec<(&'u Partition, &'u Partition)> {
        let el = universe.elements();
        self.images.iter().enumerate().map(|(i, &j)| (&el[i], &el[j])).collect()
    }
}

fn index(universe: &LatticeUniverse, p: &Partition) -> Result<usize> {
    if p.n() != universe.n() {
        return Err(Error::GroundMismatch {
            left: universe.n(),
            right: p.n(),
        });
    }
    Ok(universe.index_of(p).expect("universe holds every partition"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrthoAxiom {
    /// `a ∧ a′ = ⊥`
    MeetIsBottom,
    /// `a ∨ a′ = ⊤`
    JoinIsTop,
    /// `(a ∧ b)′ = a′ ∨ b′`
    DeMorgan,
    /// `a″ = a`
    Involution,
}

impl fmt::Display for OrthoAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrthoAxiom::MeetIsBottom => "(i) a ∧ a′ = ⊥",
            OrthoAxiom::JoinIsTop => "(ii) a ∨ a′ = ⊤",
            OrthoAxiom::DeMorgan => "(iii) (a ∧ b)′ = a′ ∨ b′",
            OrthoAxiom::Involution => "(iv) a″ = a",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthoReport {
    pub ok: bool,
    pub violated_axiom: Option<OrthoAxiom>,
    /// `(a, a′)` for (i), (ii) and (iv); `(a, b)` for (iii).
    pub witness: Option<(Partition, Partition)>,
}

impl OrthoReport {
    fn fail(axiom: OrthoAxiom, a: &Partition, b: &Partition) -> Self {
        OrthoReport {
            ok: false,
            violated_axiom: Some(axiom),
            witness: Some((a.clone(), b.clone())),
        }
    }
}

/// Checks the four axioms in order, each over all of `Π_n` (pairs for
/// (iii)), and reports the first violation found.
pub fn check_ortho_map(f: &OrthoMap, universe: &LatticeUniverse) -> Result<OrthoReport> {
    check_cap(universe.n(), CHECK_CAP)?;
    if f.n != universe.n() || f.images.len() != universe.len() {
        return Err(Error::GroundMismatch {
            left: universe.n(),
            right: f.n,
        });
    }
    let el = universe.elements();
    let img = |i: usize| &el[f.images[i]];
    for (i, a) in el.iter().enumerate() {
        if !a.meet_same(img(i)).is_bottom() {
            return Ok(OrthoReport::fail(OrthoAxiom::MeetIsBottom, a, img(i)));
        }
    }
    for (i, a) in el.iter().enumerate() {
        if !a.join_same(img(i)).is_top() {
            return Ok(OrthoReport::fail(OrthoAxiom::JoinIsTop, a, img(i)));
        }
    }
    for (i, a) in el.iter().enumerate() {
        for (j, b) in el.iter().enumerate().skip(i) {
            let m = universe.index_of(&a.meet_same(b)).unwrap();
            if *img(m) != img(i).join_same(img(j)) {
                return Ok(OrthoReport::fail(OrthoAxiom::DeMorgan, a, b));
            }
        }
    }
    for (i, a) in el.iter().enumerate() {
        if f.images[f.images[i]] != i {
            return Ok(OrthoReport::fail(OrthoAxiom::Involution, a, img(i)));
        }
    }
    Ok(OrthoReport {
        ok: true,
        violated_axiom: None,
        witness: None,
    })
}

/// Searches for an orthocomplementation of `Π_n`. Complete for `n ≤ 4`,
/// and for `n = 5` when `exhaustive` is set. Returns the first map found
/// in the search order, or `None`.
///
/// Each element is paired with a complement whose lower and upper cover
/// counts are swapped relative to its own, the pairing is kept involutive and
/// order-reversing, and every leaf is confirmed with [`check_ortho_map`].
/// Coatoms are assigned first since their images are forced to be atoms.
pub fn search_orthocomplementation(n: usize, exhaustive: bool) -> Result<Option<OrthoMap>> {
    check_cap(n, if exhaustive { SEARCH_EXHAUSTIVE_CAP } else { SEARCH_CAP })?;
    let universe = LatticeUniverse::enumerate(n)?;
    let el = universe.elements();
    let lower: Vec<u128> = el.iter().map(Partition::lower_cover_count).collect();
    let upper: Vec<u128> = el.iter().map(Partition::upper_cover_count).collect();
    let candidates: Vec<Vec<usize>> = (0..el.len())
        .map(|i| {
            (0..el.len())
                .filter(|&j| {
                    lower[i] == upper[j]
                        && upper[i] == lower[j]
                        && el[i].meet_same(&el[j]).is_bottom()
                        && el[i].join_same(&el[j]).is_top()
                })
                .collect()
        })
        .collect();
    let mut order: Vec<usize> = (0..el.len()).collect();
    order.sort_by_key(|&i| (el[i].block_count() != 2, i));

    let mut s = OrthoSearch {
        universe: &universe,
        candidates,
        order,
        images: vec![None; el.len()],
    };
    Ok(s.run(0))
}

struct OrthoSearch<'u> {
    universe: &'u LatticeUniverse,
    candidates: Vec<Vec<usize>>,
    order: Vec<usize>,
    images: Vec<Option<usize>>,
}

impl OrthoSearch<'_> {
    fn consistent(&self, i: usize, j: usize) -> bool {
        let el = self.universe.elements();
        // a ≤ x ⟺ x′ ≤ a′ on every assigned x, for both new pairs (i, j) and (j, i).
        [(i, j), (j, i)].iter().all(|&(a, a_img)| {
            self.images.iter().enumerate().all(|(x, img)| match img {
                None => true,
                Some(x_img) => {
                    el[a].leq_same(&el[x]) == el[*x_img].leq_same(&el[a_img])
                        && el[x].leq_same(&el[a]) == el[a_img].leq_same(&el[*x_img])
                }
            })
        })
    }

    fn run(&mut self, k: usize) -> Option<OrthoMap> {
        let Some(&i) = self.order.get(k) else {
            let images = self.images.iter().map(|j| j.unwrap()).collect();
            let f = OrthoMap {
                n: self.universe.n(),
                images,
            };
            let report = check_ortho_map(&f, self.universe).ok()?;
            return report.ok.then_some(f);
        };
        if self.images[i].is_some() {
            return self.run(k + 1);
        }
        for c in 0..self.candidates[i].len() {
            let j = self.candidates[i][c];
            if self.images[j].is_some() || !self.consistent(i, j) {
                continue;
            }
            self.images[i] = Some(j);
            self.images[j] = Some(i);
            if let Some(f) = self.run(k + 1) {
                return Some(f);
            }
            self.images[i] = None;
            self.images[j] = None;
        }
        None
    }
}

/// The counting obstruction for `n ≥ 5`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonOrthoWitness {
    pub n: usize,
    /// Upper covers of `⊥`: `C(n, 2)`.
    pub atom_count: u128,
    /// Lower covers of `⊤`: `2^(n−1) − 1`.
    pub coatom_count: u128,
    pub reason: String,
}

pub fn non_ortho_witness(n: usize) -> Result<NonOrthoWitness> {
    if n < 5 {
        return Err(Error::InvalidArgument(format!(
            "the counting witness needs n ≥ 5 (got {n}); use the exhaustive search instead"
        )));
    }
    check_cap(n, crate::partition::HARD_CAP)?;
    let atoms: u128 = atom_count(n)?;
    let coatoms: u128 = coatom_count(n)?;
    debug_assert!(atoms < coatoms);
    Ok(NonOrthoWitness {
        n,
        atom_count: atoms,
        coatom_count: coatoms,
        reason: format!(
            "⊥ has {atoms} upper covers but ⊤ has {coatoms} lower covers; \
             an orthocomplementation would map one set bijectively onto the other"
        ),
    })
}
