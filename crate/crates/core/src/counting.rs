//! Exact counting functions over any checked integer scalar.
//!
//! Every routine here is written against [`CountScalar`], so the same code
//! runs on `u64`, `u128` or an arbitrary-precision integer. Overflow is
//! reported as [`Error::Overflow`] rather than wrapping.

use std::fmt::Debug;

use num_traits::{CheckedAdd, CheckedMul, FromPrimitive, One, Zero};

use crate::error::{Error, Result};

/// Integer type usable for exact counts.
pub trait CountScalar: Clone + Debug + Ord + Zero + One + CheckedAdd + CheckedMul + FromPrimitive {}

impl<T> CountScalar for T where T: Clone + Debug + Ord + Zero + One + CheckedAdd + CheckedMul + FromPrimitive {}

fn add<T: CountScalar>(a: &T, b: &T, what: &'static str) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

fn mul<T: CountScalar>(a: &T, b: &T, what: &'static str) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

pub(crate) fn lift<T: CountScalar>(x: usize, what: &'static str) -> Result<T> {
    T::from_usize(x).ok_or(Error::Overflow(what))
}

/// `base^exp`, with `0^0 = 1`.
pub fn power<T: CountScalar>(base: usize, exp: usize) -> Result<T> {
    let b: T = lift(base, "power")?;
    num_traits::checked_pow(b, exp).ok_or(Error::Overflow("power"))
}

/// `C(n, k)` from Pascal's rule; zero when `k > n`.
pub fn binomial<T: CountScalar>(n: usize, k: usize) -> Result<T> {
    if k > n {
        return Ok(T::zero());
    }
    let k = k.min(n - k);
    let mut row = vec![T::zero(); k + 1];
    row[0] = T::one();
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            row[j] = add(&row[j], &row[j - 1], "binomial")?;
        }
    }
    Ok(row.swap_remove(k))
}

/// Row `n` of the Stirling triangle of the second kind: `S(n, 0..=n)`.
pub fn stirling2_row<T: CountScalar>(n: usize) -> Result<Vec<T>> {
    let mut row = vec![T::one()];
    for i in 1..=n {
        let mut next = vec![T::zero(); i + 1];
        for k in 1..=i {
            let stay = if k < i {
                mul(&lift::<T>(k, "stirling2")?, &row[k], "stirling2")?
            } else {
                T::zero()
            };
            next[k] = add(&stay, &row[k - 1], "stirling2")?;
        }
        row = next;
    }
    Ok(row)
}

/// Number of partitions of an `n`-set into exactly `k` blocks.
pub fn stirling2<T: CountScalar>(n: usize, k: usize) -> Result<T> {
    if k > n {
        return Ok(T::zero());
    }
    Ok(stirling2_row::<T>(n)?.swap_remove(k))
}

/// Number of partitions of an `n`-set, computed with the Bell triangle.
pub fn bell<T: CountScalar>(n: usize) -> Result<T> {
    // Row i of the triangle starts with B_i and ends with B_{i+1}.
    if n == 0 {
        return Ok(T::one());
    }
    let mut row = vec![T::one()];
    for _ in 1..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().cloned().unwrap());
        for x in &row {
            let v = add(next.last().unwrap(), x, "bell")?;
            next.push(v);
        }
        row = next;
    }
    Ok(row.pop().unwrap())
}

/// `n·(n−1)/2`, the number of atoms of the lattice on `n` elements.
pub fn atom_count<T: CountScalar>(n: usize) -> Result<T> {
    binomial(n, 2)
}

/// `2^(n−1) − 1`, the number of coatoms; zero for `n < 2`.
pub fn coatom_count<T: CountScalar>(n: usize) -> Result<T> {
    if n < 2 {
        return Ok(T::zero());
    }
    // 2^(n−1) − 1 as the repunit 11…1 in base 2, avoiding subtraction.
    let two: T = lift(2, "coatom_count")?;
    let mut acc = T::zero();
    for _ in 1..n {
        acc = add(&mul(&acc, &two, "coatom_count")?, &T::one(), "coatom_count")?;
    }
    Ok(acc)
}
