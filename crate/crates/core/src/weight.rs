//! Numeric weights carried by vertices and edges.
//!
//! Integer weights (`u64`) keep every quantity exact. Fractional weights use
//! `f64`; the arithmetic is the same, only the final comparisons in tests
//! need a tolerance.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul};

use serde::Serialize;

pub trait Weight:
    Copy
    + PartialEq
    + PartialOrd
    + Debug
    + Display
    + Send
    + Sync
    + Serialize
    + Add<Output = Self>
    + AddAssign
    + Mul<Output = Self>
    + Sum
    + 'static
{
    const ZERO: Self;
    const ONE: Self;

    /// `|self - other|`, without leaving the nonnegative range.
    fn abs_diff(self, other: Self) -> Self;

    /// Nonnegative and finite.
    fn is_admissible(self) -> bool;

    fn from_count(count: usize) -> Self;

    /// Equality for integers; relative tolerance `1e-9` for floats.
    fn agrees_with(self, other: Self) -> bool;
}

impl Weight for u64 {
    const ZERO: Self = 0;
    const ONE: Self = 1;

    fn abs_diff(self, other: Self) -> Self {
        u64::abs_diff(self, other)
    }

    fn is_admissible(self) -> bool {
        true
    }

    fn from_count(count: usize) -> Self {
        count as u64
    }

    fn agrees_with(self, other: Self) -> bool {
        self == other
    }
}

impl Weight for f64 {
    const ZERO: Self = 0.0;
    const ONE: Self = 1.0;

    fn abs_diff(self, other: Self) -> Self {
        (self - other).abs()
    }

    fn is_admissible(self) -> bool {
        self.is_finite() && self >= 0.0
    }

    fn from_count(count: usize) -> Self {
        count as f64
    }

    fn agrees_with(self, other: Self) -> bool {
        (self - other).abs() <= 1e-9 * self.abs().max(other.abs()).max(1.0)
    }
}
