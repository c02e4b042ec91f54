//! Exponent and coordinate vectors with unbounded integer entries.

use std::fmt;
use std::ops::Index;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;

use crate::error::{check_dim, Error, Result};

/// A point of ℕⁿ.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct NatVec(Vec<BigUint>);

impl NatVec {
    pub fn new(entries: Vec<BigUint>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::ZeroDimension);
        }
        Ok(NatVec(entries))
    }

    pub fn from_u64s(entries: &[u64]) -> Result<Self> {
        Self::new(entries.iter().map(|&e| BigUint::from(e)).collect())
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        Self::new(vec![BigUint::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigUint> {
        self.0
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [BigUint] {
        &mut self.0
    }

    /// Sum norm.
    pub fn norm(&self) -> BigUint {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &NatVec) -> Result<bool> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.0.iter().zip(&other.0).all(|(a, b)| a <= b))
    }

    pub fn checked_add(&self, other: &NatVec) -> Result<NatVec> {
        check_dim(self.dim(), other.dim())?;
        Ok(NatVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    /// Componentwise difference, `None` if some entry would go negative.
    pub fn checked_sub(&self, other: &NatVec) -> Result<Option<NatVec>> {
        check_dim(self.dim(), other.dim())?;
        if self.0.iter().zip(&other.0).any(|(a, b)| a < b) {
            return Ok(None);
        }
        Ok(Some(NatVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())))
    }

    pub fn to_signed(&self) -> IntVec {
        IntVec(self.0.iter().map(|e| BigInt::from(e.clone())).collect())
    }
}

impl Index<usize> for NatVec {
    type Output = BigUint;

    fn index(&self, i: usize) -> &BigUint {
        &self.0[i]
    }
}

impl fmt::Display for NatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// A point of ℤⁿ.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IntVec(Vec<BigInt>);

impl IntVec {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::ZeroDimension);
        }
        Ok(IntVec(entries))
    }

    pub fn from_i64s(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.0
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [BigInt] {
        &mut self.0
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|e| e.sign() != Sign::Minus)
    }

    /// Split into `(positive part, negative part)` so that `self = pos − neg`.
    pub fn split_signs(&self) -> (NatVec, NatVec) {
        let mut pos = Vec::with_capacity(self.dim());
        let mut neg = Vec::with_capacity(self.dim());
        for e in &self.0 {
            let mag = e.magnitude().clone();
            match e.sign() {
                Sign::Minus => {
                    pos.push(BigUint::zero());
                    neg.push(mag);
                }
                _ => {
                    pos.push(mag);
                    neg.push(BigUint::zero());
                }
            }
        }
        (NatVec(pos), NatVec(neg))
    }

    /// The same vector as a [`NatVec`], if no entry is negative.
    pub fn to_natural(&self) -> Option<NatVec> {
        self.0
            .iter()
            .map(|e| e.to_biguint())
            .collect::<Option<Vec<_>>>()
            .map(NatVec)
    }

    pub fn checked_sub(&self, other: &IntVec) -> Result<IntVec> {
        check_dim(self.dim(), other.dim())?;
        Ok(IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }
}

impl Index<usize> for IntVec {
    type Output = BigInt;

    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

fn write_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}
