//! The termination measure for a pair of points of ℕⁿ.
//!
//! Removing the common part `γ = min(α, β)` leaves two vectors `ᾱ`, `β̄` with
//! disjoint supports. The measure `τ = (min{|ᾱ|,|β̄|}, max{|ᾱ|,|β̄|})` has
//! first coordinate zero exactly when `α` and `β` are comparable.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{check_dim, Result};
use crate::vector::NatVec;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReducedPair {
    pub gamma: NatVec,
    pub abar: NatVec,
    pub bbar: NatVec,
}

impl ReducedPair {
    pub fn abar_norm(&self) -> BigUint {
        self.abar.norm()
    }

    pub fn bbar_norm(&self) -> BigUint {
        self.bbar.norm()
    }
}

/// `(first, second)` with `first ≤ second`, ordered lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Tau {
    first: BigUint,
    second: BigUint,
}

impl Tau {
    /// Builds the measure from the two reduced norms, in either order.
    pub fn from_norms(a: BigUint, b: BigUint) -> Self {
        if a <= b {
            Tau { first: a, second: b }
        } else {
            Tau { first: b, second: a }
        }
    }

    pub fn first(&self) -> &BigUint {
        &self.first
    }

    pub fn second(&self) -> &BigUint {
        &self.second
    }

    pub fn is_comparable(&self) -> bool {
        self.first.is_zero()
    }
}

impl fmt::Display for Tau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

/// How `α` relates to `β` in the componentwise order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Comparability {
    /// `α ≤ β`, `α ≠ β`.
    LessEq,
    /// `α ≥ β`, `α ≠ β`.
    GreaterEq,
    Equal,
    Incomparable,
}

impl Comparability {
    pub fn is_comparable(self) -> bool {
        self != Comparability::Incomparable
    }

    pub fn reversed(self) -> Self {
        match self {
            Comparability::LessEq => Comparability::GreaterEq,
            Comparability::GreaterEq => Comparability::LessEq,
            other => other,
        }
    }
}

pub fn reduce_pair(alpha: &NatVec, beta: &NatVec) -> Result<ReducedPair> {
    check_dim(alpha.dim(), beta.dim())?;
    let n = alpha.dim();
    let mut gamma = Vec::with_capacity(n);
    let mut abar = Vec::with_capacity(n);
    let mut bbar = Vec::with_capacity(n);
    for (a, b) in alpha.entries().iter().zip(beta.entries()) {
        let c = a.min(b).clone();
        abar.push(a - &c);
        bbar.push(b - &c);
        gamma.push(c);
    }
    Ok(ReducedPair {
        gamma: NatVec::new(gamma)?,
        abar: NatVec::new(abar)?,
        bbar: NatVec::new(bbar)?,
    })
}

pub fn tau(alpha: &NatVec, beta: &NatVec) -> Result<Tau> {
    check_dim(alpha.dim(), beta.dim())?;
    // |ᾱ| = Σ max(a−b, 0) and |β̄| = Σ max(b−a, 0); no need to build γ.
    let mut na = BigUint::zero();
    let mut nb = BigUint::zero();
    for (a, b) in alpha.entries().iter().zip(beta.entries()) {
        match a.cmp(b) {
            Ordering::Greater => na += a - b,
            Ordering::Less => nb += b - a,
            Ordering::Equal => {}
        }
    }
    Ok(Tau::from_norms(na, nb))
}

pub fn comparability(alpha: &NatVec, beta: &NatVec) -> Result<Comparability> {
    check_dim(alpha.dim(), beta.dim())?;
    let mut le = true;
    let mut ge = true;
    for (a, b) in alpha.entries().iter().zip(beta.entries()) {
        match a.cmp(b) {
            Ordering::Less => ge = false,
            Ordering::Greater => le = false,
            Ordering::Equal => {}
        }
    }
    Ok(match (le, ge) {
        (true, true) => Comparability::Equal,
        (true, false) => Comparability::LessEq,
        (false, true) => Comparability::GreaterEq,
        (false, false) => Comparability::Incomparable,
    })
}
