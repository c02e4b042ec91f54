//! The elementary matrices `A_{J,j}` and their products.
//!
//! `A_{J,j}` is the identity with row `j` replaced by the indicator of `J`:
//! applied to a vector it overwrites coordinate `j` with the sum of the
//! coordinates indexed by `J` and leaves the rest alone. Every such matrix
//! has non-negative entries and determinant 1, and so does every product.
//!
//! Indices are 0-based here; the CLI converts to and from 1-based indices.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{check_dim, Error, Result};
use crate::linalg;
use crate::vector::{IntVec, NatVec};

/// A pair `(J, j)` with `j ∈ J ⊆ {0, …, dim−1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Step {
    set: Vec<usize>,
    pivot: usize,
    dim: usize,
}

impl Step {
    pub fn new<I: IntoIterator<Item = usize>>(dim: usize, set: I, pivot: usize) -> Result<Self> {
        let mut set: Vec<usize> = set.into_iter().collect();
        set.sort_unstable();
        set.dedup();
        if set.is_empty() {
            return Err(Error::InvalidStep("J is empty".into()));
        }
        if let Some(&bad) = set.iter().find(|&&i| i >= dim) {
            return Err(Error::InvalidStep(format!(
                "index {bad} out of range for dimension {dim}"
            )));
        }
        if set.binary_search(&pivot).is_err() {
            return Err(Error::InvalidStep(format!("j = {pivot} is not in J = {set:?}")));
        }
        Ok(Step { set, pivot, dim })
    }

    /// `J`, sorted ascending.
    pub fn set(&self) -> &[usize] {
        &self.set
    }

    /// `j`.
    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `A_{J,j}` as a dense matrix.
    pub fn matrix(&self) -> TransformMatrix {
        step_matrix(self)
    }

    pub fn apply(&self, v: &NatVec) -> Result<NatVec> {
        apply_step(self, v)
    }

    /// Same action on signed coordinates.
    pub fn apply_signed(&self, v: &IntVec) -> Result<IntVec> {
        check_dim(self.dim, v.dim())?;
        let sum: BigInt = self.set.iter().map(|&i| &v[i]).sum();
        let mut out = v.clone();
        out.entries_mut()[self.pivot] = sum;
        Ok(out)
    }

    /// Apply in place; the caller guarantees the dimension.
    pub(crate) fn apply_in_place(&self, v: &mut NatVec) {
        let sum: BigUint = self.set.iter().map(|&i| &v[i]).sum();
        v.entries_mut()[self.pivot] = sum;
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set: Vec<String> = self.set.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "(J={{{}}}, j={})", set.join(","), self.pivot + 1)
    }
}

/// A square matrix of natural numbers.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TransformMatrix {
    rows: Vec<Vec<BigUint>>,
}

impl TransformMatrix {
    pub fn identity(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|r| {
                (0..dim)
                    .map(|c| if r == c { BigUint::one() } else { BigUint::zero() })
                    .collect()
            })
            .collect();
        TransformMatrix { rows }
    }

    pub fn from_rows(rows: Vec<Vec<BigUint>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        for r in &rows {
            check_dim(n, r.len())?;
        }
        Ok(TransformMatrix { rows })
    }

    pub fn from_u64_rows(rows: &[&[u64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigUint::from(x)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.rows
    }

    pub fn entry(&self, r: usize, c: usize) -> &BigUint {
        &self.rows[r][c]
    }

    pub fn transpose(&self) -> TransformMatrix {
        let n = self.dim();
        let rows = (0..n)
            .map(|r| (0..n).map(|c| self.rows[c][r].clone()).collect())
            .collect();
        TransformMatrix { rows }
    }

    pub fn to_signed_rows(&self) -> Vec<Vec<BigInt>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|x| BigInt::from(x.clone())).collect())
            .collect()
    }

    pub fn mul(&self, other: &TransformMatrix) -> Result<TransformMatrix> {
        check_dim(self.dim(), other.dim())?;
        let n = self.dim();
        let rows = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| (0..n).map(|k| &self.rows[r][k] * &other.rows[k][c]).sum())
                    .collect()
            })
            .collect();
        Ok(TransformMatrix { rows })
    }

    /// Product with a signed column vector.
    pub fn apply_signed(&self, v: &IntVec) -> Result<IntVec> {
        check_dim(self.dim(), v.dim())?;
        IntVec::new(
            self.rows
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(v.entries())
                        .map(|(a, x)| BigInt::from(a.clone()) * x)
                        .sum()
                })
                .collect(),
        )
    }
}

/// An ordered sequence of steps, first round first.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Trace {
    steps: Vec<Step>,
}

impl Trace {
    pub fn new() -> Self {
        Trace::default()
    }

    pub fn from_steps(steps: Vec<Step>) -> Self {
        Trace { steps }
    }

    pub fn push(&mut self, step: Step) {
        self.steps.push(step);
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Step> {
        self.steps.iter()
    }

    pub fn extend(&mut self, other: &Trace) {
        self.steps.extend_from_slice(&other.steps);
    }

    /// Replay the steps on `v` in round order.
    pub fn apply(&self, v: &NatVec) -> Result<NatVec> {
        let mut out = v.clone();
        for step in &self.steps {
            check_dim(step.dim(), out.dim())?;
            step.apply_in_place(&mut out);
        }
        Ok(out)
    }
}

impl<'a> IntoIterator for &'a Trace {
    type Item = &'a Step;
    type IntoIter = std::slice::Iter<'a, Step>;

    fn into_iter(self) -> Self::IntoIter {
        self.steps.iter()
    }
}

pub fn step_matrix(step: &Step) -> TransformMatrix {
    let mut m = TransformMatrix::identity(step.dim());
    for &s in step.set() {
        m.rows[step.pivot()][s] = BigUint::one();
    }
    m
}

pub fn apply_step(step: &Step, v: &NatVec) -> Result<NatVec> {
    check_dim(step.dim(), v.dim())?;
    let mut out = v.clone();
    step.apply_in_place(&mut out);
    Ok(out)
}

/// `A_{J_l,j_l} ⋯ A_{J_1,j_1}`, the last step leftmost.
pub fn compose_trace(trace: &Trace, dim: usize) -> Result<TransformMatrix> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut m = TransformMatrix::identity(dim);
    for step in trace {
        check_dim(dim, step.dim())?;
        // Left-multiplying by A_{J,j} replaces row j with the sum of rows in J.
        let row: Vec<BigUint> = (0..dim)
            .map(|c| step.set().iter().map(|&r| &m.rows[r][c]).sum())
            .collect();
        m.rows[step.pivot()] = row;
    }
    Ok(m)
}

pub fn apply_matrix(m: &TransformMatrix, v: &NatVec) -> Result<NatVec> {
    check_dim(m.dim(), v.dim())?;
    NatVec::new(
        m.rows
            .iter()
            .map(|row| row.iter().zip(v.entries()).map(|(a, x)| a * x).sum())
            .collect(),
    )
}

pub fn determinant(m: &TransformMatrix) -> BigInt {
    linalg::determinant(&m.to_signed_rows())
}
