//! Scalar fields the linear algebra is generic over.
//!
//! Every invariant in this crate is a dimension, so any field of characteristic zero gives the
//! same answers. [`BigRational`] is the canonical choice and the only one the crate relies on for
//! its results; `f64`/`f32` are supported for quick experiments and are compared against a fixed
//! tolerance when deciding whether an entry vanishes.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::linalg::{fraction_free, Matrix};

/// A field usable as matrix entries.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Whether arithmetic is exact. Inexact types pick pivots by magnitude.
    const EXACT: bool;

    fn from_i64(value: i64) -> Self;

    /// Entries for which this returns true are treated as zero and dropped.
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    /// Magnitude used for pivot selection by inexact types.
    fn magnitude(&self) -> f64;

    /// Rank of `m`. Exact types may override this with a faster elimination.
    fn rank(m: &Matrix<Self>) -> usize {
        m.echelon().pivots.len()
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }

    fn magnitude(&self) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            1.0
        }
    }

    fn rank(m: &Matrix<Self>) -> usize {
        fraction_free::rational_rank(m)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_i64(value: i64) -> Self {
        value as f64
    }

    fn is_negligible(&self) -> bool {
        self.abs() < 1e-9
    }

    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl Scalar for f32 {
    const EXACT: bool = false;

    fn from_i64(value: i64) -> Self {
        value as f32
    }

    fn is_negligible(&self) -> bool {
        self.abs() < 1e-4
    }

    fn magnitude(&self) -> f64 {
        f64::from(self.abs())
    }
}
