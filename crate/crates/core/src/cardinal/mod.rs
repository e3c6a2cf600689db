//! Symbolic cardinal arithmetic for the infinite partition lattices.
//!
//! Cardinals are finite or `ℵ_α` with `α` an ordinal below `ε₀`. Powers are
//! evaluated under a [`ContinuumModel`]: either GCH, where exponentiation is
//! fully determined, or a finite assignment of `2^κ` at regular cardinals,
//! where anything not forced comes back as an interval.
//!
//! No `ℵ_α = α` fixed point lies below `ε₀`, so indices in normal form
//! always give a well-defined cofinality: `cf(ℵ_α) = ℵ_α` for `α = 0` or a
//! successor, and `ℵ₀` for every limit `α`.

mod cursor;
mod expr;
mod model;
mod ordinal;

use std::cmp::max;
use std::fmt;

pub use expr::{eval, Expr, ShapeExpr};
pub use model::ContinuumModel;
pub use ordinal::{Ordinal, Term};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cardinal {
    Finite(u64),
    Aleph(Ordinal),
}

impl Cardinal {
    pub fn aleph(index: Ordinal) -> Self {
        Cardinal::Aleph(index)
    }

    pub fn aleph_n(n: u64) -> Self {
        Cardinal::Aleph(Ordinal::natural(n))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Cardinal::Finite(_))
    }

    pub fn is_infinite(&self) -> bool {
        !self.is_finite()
    }

    /// The next cardinal.
    ///
    /// # Panics
    /// On `u64` overflow of a finite cardinal or an ordinal coefficient.
    pub fn successor(&self) -> Cardinal {
        match self {
            Cardinal::Finite(n) => Cardinal::Finite(n.checked_add(1).expect("finite cardinal overflow")),
            Cardinal::Aleph(a) => Cardinal::Aleph(a.succ()),
        }
    }

    /// `cf(0) = 0`, `cf(n) = 1` for finite `n ≥ 1`, `ℵ₀` for `ℵ₀` and limit
    /// indices, and `ℵ_α` itself for successor indices.
    pub fn cofinality(&self) -> Cardinal {
        match self {
            Cardinal::Finite(0) => Cardinal::Finite(0),
            Cardinal::Finite(_) => Cardinal::Finite(1),
            Cardinal::Aleph(a) if a.is_successor() => self.clone(),
            Cardinal::Aleph(_) => Cardinal::aleph_n(0),
        }
    }

    pub fn is_regular(&self) -> bool {
        self.is_infinite() && self.cofinality() == *self
    }

    fn require_infinite(&self, what: &str) -> Result<()> {
        if self.is_finite() {
            Err(Error::InvalidArgument(format!("{what} must be infinite, got {self}")))
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinal::Finite(n) => write!(f, "fin({n})"),
            Cardinal::Aleph(a) => write!(f, "aleph({a})"),
        }
    }
}

impl fmt::Debug for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A cardinal that a model may determine only up to an interval.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum CardValue {
    Exact(Cardinal),
    /// `lower ≤ value ≤ upper`; no upper bound when `upper` is `None`.
    Interval {
        lower: Cardinal,
        upper: Option<Cardinal>,
    },
}

impl CardValue {
    pub(crate) fn between(lower: Cardinal, upper: Option<Cardinal>) -> Self {
        match upper {
            Some(u) if u == lower => CardValue::Exact(u),
            upper => CardValue::Interval { lower, upper },
        }
    }

    pub fn exact(&self) -> Option<&Cardinal> {
        match self {
            CardValue::Exact(c) => Some(c),
            CardValue::Interval { .. } => None,
        }
    }

    pub fn lower(&self) -> &Cardinal {
        match self {
            CardValue::Exact(c) | CardValue::Interval { lower: c, .. } => c,
        }
    }

    pub fn upper(&self) -> Option<&Cardinal> {
        match self {
            CardValue::Exact(c) => Some(c),
            CardValue::Interval { upper, .. } => upper.as_ref(),
        }
    }

    pub fn into_exact(self, what: &str) -> Result<Cardinal> {
        match self {
            CardValue::Exact(c) => Ok(c),
            other => Err(Error::Indeterminate(format!("{what} is only known to lie in {other}"))),
        }
    }
}

impl fmt::Display for CardValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CardValue::Exact(c) => write!(f, "{c}"),
            CardValue::Interval { lower, upper: Some(u) } => write!(f, "[{lower}, {u}]"),
            CardValue::Interval { lower, upper: None } => write!(f, "[{lower}, unbounded)"),
        }
    }
}

/// `Σ_{i∈I} κ_i = max(|I|, sup κ_i)` when the terms are non-zero and one of
/// `|I|`, `sup κ_i` is infinite.
pub fn card_sum_family(index_card: &Cardinal, sup_terms: &Cardinal) -> Result<Cardinal> {
    if *index_card == Cardinal::Finite(0) || *sup_terms == Cardinal::Finite(0) {
        return Err(Error::InvalidArgument("index set and terms must be non-empty".into()));
    }
    if index_card.is_finite() && sup_terms.is_finite() {
        return Err(Error::InvalidArgument(
            "both arguments are finite; add the integers instead".into(),
        ));
    }
    Ok(max(index_card, sup_terms).clone())
}

/// `2^κ` under `model`.
pub fn two_pow(kappa: &Cardinal, model: &ContinuumModel) -> Result<CardValue> {
    match kappa {
        Cardinal::Finite(n) => {
            let v = u32::try_from(*n)
                .ok()
                .and_then(|e| 2u64.checked_pow(e))
                .ok_or(Error::Overflow("2^n"))?;
            Ok(CardValue::Exact(Cardinal::Finite(v)))
        }
        Cardinal::Aleph(a) => Ok(model.continuum(a)),
    }
}

/// `κ^λ` under `model`.
///
/// Under GCH: `κ^0 = 1`; for infinite `κ`, `κ^λ = κ` when `0 < λ < cf κ`,
/// `κ⁺` when `cf κ ≤ λ ≤ κ`, and `λ⁺` when `λ > κ`; `n^λ = 2^λ` for finite
/// `n ≥ 2`. Under a custom model the value is exact only when forced; in
/// general `max(κ, 2^λ, κ⁺ if λ ≥ cf κ) ≤ κ^λ ≤ 2^κ` for `λ < κ`.
pub fn card_pow(base: &Cardinal, exp: &Cardinal, model: &ContinuumModel) -> Result<CardValue> {
    use Cardinal::Finite;
    let exact = |c: Cardinal| Ok(CardValue::Exact(c));
    match (base, exp) {
        (_, Finite(0)) => exact(Finite(1)),
        (Finite(0), _) => exact(Finite(0)),
        (Finite(1), _) => exact(Finite(1)),
        (Finite(b), Finite(e)) => {
            let v = u32::try_from(*e)
                .ok()
                .and_then(|e| b.checked_pow(e))
                .ok_or(Error::Overflow("finite power"))?;
            exact(Finite(v))
        }
        (Finite(_), Cardinal::Aleph(_)) => two_pow(exp, model),
        (Cardinal::Aleph(_), Finite(_)) => exact(base.clone()),
        (Cardinal::Aleph(_), Cardinal::Aleph(_)) => {
            if exp >= base {
                return two_pow(exp, model);
            }
            if model.is_gch() {
                return exact(if *exp < base.cofinality() {
                    base.clone()
                } else {
                    base.successor()
                });
            }
            let two_exp = two_pow(exp, model)?;
            let two_base = two_pow(base, model)?;
            let mut lower = max(base.clone(), two_exp.lower().clone());
            if *exp >= base.cofinality() {
                lower = max(lower, base.successor());
            }
            Ok(CardValue::between(lower, two_base.upper().cloned()))
        }
    }
}

/// `(sup κ_i)^len` for an increasing sequence of infinite cardinals of
/// length `len` with supremum `sup`.
pub fn card_tarski_product(len: &Cardinal, sup: &Cardinal, model: &ContinuumModel) -> Result<CardValue> {
    len.require_infinite("sequence length")?;
    sup.require_infinite("supremum")?;
    card_pow(sup, len, model)
}

/// `cf(value) > κ`, the constraint every `2^κ` satisfies.
pub fn konig_holds(kappa: &Cardinal, value: &Cardinal) -> bool {
    value.cofinality() > *kappa
}

/// Blocks of a partition of `κ` having cardinality `κ`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FullBlocks {
    Zero,
    One,
    Many,
}

/// Which of `⊥`, `⊤` a shape stands for, if either.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Trivial {
    Bottom,
    Top,
}

/// What the complement count of a partition of an infinite `κ` depends on.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PartitionShape {
    full_blocks: FullBlocks,
    kappa: Cardinal,
    residue: Cardinal,
    trivial: Option<Trivial>,
}

impl PartitionShape {
    /// `residue` is `|κ \ B̄|` for the single full block `B̄`; it is ignored
    /// (and stored as `κ`) for the other block counts. One full block with
    /// residue `0` is `⊤`.
    pub fn new(full_blocks: FullBlocks, kappa: Cardinal, residue: Option<Cardinal>) -> Result<Self> {
        kappa.require_infinite("κ")?;
        let residue = match (full_blocks, residue) {
            (FullBlocks::One, Some(r)) if r > kappa => {
                return Err(Error::InvalidArgument(format!("residue {r} exceeds κ = {kappa}")));
            }
            (FullBlocks::One, Some(r)) => r,
            (FullBlocks::One, None) => {
                return Err(Error::InvalidArgument("one full block needs its residue λ".into()));
            }
            (_, _) => kappa.clone(),
        };
        let trivial = (full_blocks == FullBlocks::One && residue == Cardinal::Finite(0)).then_some(Trivial::Top);
        Ok(PartitionShape {
            full_blocks,
            kappa,
            residue,
            trivial,
        })
    }

    pub fn top(kappa: Cardinal) -> Result<Self> {
        Self::new(FullBlocks::One, kappa, Some(Cardinal::Finite(0)))
    }

    /// All singletons: no full block, and exactly one complement.
    pub fn bottom(kappa: Cardinal) -> Result<Self> {
        let mut s = Self::new(FullBlocks::Zero, kappa, None)?;
        s.trivial = Some(Trivial::Bottom);
        Ok(s)
    }

    pub fn full_blocks(&self) -> FullBlocks {
        self.full_blocks
    }

    pub fn kappa(&self) -> &Cardinal {
        &self.kappa
    }

    pub fn residue(&self) -> &Cardinal {
        &self.residue
    }

    pub fn trivial(&self) -> Option<Trivial> {
        self.trivial
    }
}

/// Number of complements of a partition of `κ` with the given shape: 1 for
/// `⊥` and `⊤`, `κ^λ` with one full block and residue `λ`, `2^κ` otherwise.
pub fn complement_count_symbolic(shape: &PartitionShape, model: &ContinuumModel) -> Result<CardValue> {
    if shape.trivial.is_some() {
        return Ok(CardValue::Exact(Cardinal::Finite(1)));
    }
    match shape.full_blocks {
        FullBlocks::One => card_pow(&shape.kappa, &shape.residue, model),
        FullBlocks::Zero | FullBlocks::Many => two_pow(&shape.kappa, model),
    }
}

/// Chain cardinalities in the partition lattice of an infinite `κ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChainBounds {
    pub kappa: Cardinal,
    /// A well-ordered maximal chain has cardinality in `[cf κ, κ]`.
    pub well_ordered: (Cardinal, Cardinal),
    /// Some chain has cardinality strictly greater than this.
    pub long_chain_exceeds: Cardinal,
    /// Ground set `2^κ` under GCH.
    pub pow_ground: Cardinal,
    /// Under GCH the lattice on `2^κ` has a maximal chain of this cardinality.
    pub short_chain_in_pow: Cardinal,
}

pub fn chain_cardinality_bounds(kappa: &Cardinal) -> Result<ChainBounds> {
    kappa.require_infinite("κ")?;
    Ok(ChainBounds {
        kappa: kappa.clone(),
        well_ordered: (kappa.cofinality(), kappa.clone()),
        long_chain_exceeds: kappa.clone(),
        pow_ground: kappa.successor(),
        short_chain_in_pow: kappa.clone(),
    })
}
