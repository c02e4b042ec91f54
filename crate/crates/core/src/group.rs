//! Free ordered abelian groups of finite rank and simple Perron transforms.
//!
//! A group of rank `n` is presented by the images of its generators in
//! ℚᵐ with the lexicographic order. When the images are linearly
//! independent the coordinate map is injective, so the induced order on
//! ℤⁿ is total.
//!
//! A simple Perron transform picks `J` and its smallest element `γ_j`, and
//! replaces `γ_i` by `γ_i − γ_j` for the other `i ∈ J`. Coordinates change
//! by `A_{J,j}`, so the cone of non-negative combinations only grows, and
//! the comparability engine can drive any positive element into it.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::engine::{run_pair, Abort, Adversary, Position};
use crate::error::{check_dim, Error, Result};
use crate::linalg;
use crate::tau::Comparability;
use crate::transform::{Step, Trace};
use crate::vector::{IntVec, NatVec};

/// A vector of ℚᵐ under the lexicographic order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LexVector(Vec<BigRational>);

impl LexVector {
    pub fn new(coords: Vec<BigRational>) -> Self {
        LexVector(coords)
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        LexVector(coords.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero(len: usize) -> Self {
        LexVector(vec![BigRational::zero(); len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Sign of the first nonzero coordinate.
    pub fn signum(&self) -> Ordering {
        self.0
            .iter()
            .find(|c| !c.is_zero())
            .map_or(Ordering::Equal, |c| {
                if c.is_positive() {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            })
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn add(&self, other: &LexVector) -> LexVector {
        LexVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &LexVector) -> LexVector {
        LexVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &BigInt) -> LexVector {
        let k = BigRational::from_integer(k.clone());
        LexVector(self.0.iter().map(|a| a * &k).collect())
    }

    /// `Σ kᵢ·vᵢ`; `len` is used when `vectors` is empty.
    pub fn combination(coeffs: &[BigInt], vectors: &[LexVector], len: usize) -> LexVector {
        let mut acc = LexVector::zero(len);
        for (k, v) in coeffs.iter().zip(vectors) {
            if !k.is_zero() {
                acc = acc.add(&v.scale(k));
            }
        }
        acc
    }

    // Row scaled to integers, for rank computations.
    fn clear_denominators(&self) -> Vec<BigInt> {
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
        self.0
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect()
    }
}

impl fmt::Display for LexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Why a list of generator images does not present an ordered group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OrderViolation {
    NoGenerators,
    LengthMismatch { index: usize, expected: usize, found: usize },
    NotIndependent { rank: usize, generators: usize },
    NotPositive { index: usize },
}

impl fmt::Display for OrderViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderViolation::NoGenerators => write!(f, "no generators"),
            OrderViolation::LengthMismatch { index, expected, found } => write!(
                f,
                "image {} has length {found}, expected {expected}",
                index + 1
            ),
            OrderViolation::NotIndependent { rank, generators } => write!(
                f,
                "images not independent: rank {rank} < {generators}"
            ),
            OrderViolation::NotPositive { index } => {
                write!(f, "image {} is not positive", index + 1)
            }
        }
    }
}

/// A rank-`n` group given by the images of its generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupOrder {
    images: Vec<LexVector>,
}

impl GroupOrder {
    /// Validates the images; see [`validate_order`].
    pub fn new(images: Vec<LexVector>) -> Result<Self> {
        let order = GroupOrder { images };
        let violations = validate_order(&order);
        if violations.is_empty() {
            Ok(order)
        } else {
            Err(Error::InvalidOrder(violations))
        }
    }

    /// Skips validation.
    pub fn new_unchecked(images: Vec<LexVector>) -> Self {
        GroupOrder { images }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[LexVector] {
        &self.images
    }

    pub fn order_dim(&self) -> usize {
        self.images.first().map_or(0, LexVector::len)
    }
}

/// Checks that the images are independent over ℚ and lex-positive.
pub fn validate_order(order: &GroupOrder) -> Vec<OrderViolation> {
    let mut out = Vec::new();
    let Some(first) = order.images.first() else {
        return vec![OrderViolation::NoGenerators];
    };
    let m = first.len();
    for (index, img) in order.images.iter().enumerate() {
        if img.len() != m {
            out.push(OrderViolation::LengthMismatch { index, expected: m, found: img.len() });
        }
    }
    if !out.is_empty() {
        return out;
    }
    let rows: Vec<Vec<BigInt>> = order.images.iter().map(LexVector::clear_denominators).collect();
    let rank = linalg::rank(&rows);
    if rank < order.images.len() {
        out.push(OrderViolation::NotIndependent { rank, generators: order.images.len() });
    }
    for (index, img) in order.images.iter().enumerate() {
        if !img.is_positive() {
            out.push(OrderViolation::NotPositive { index });
        }
    }
    out
}

/// An element written in the coordinates of some [`GroupBasis`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupElement {
    coords: IntVec,
}

impl GroupElement {
    pub fn new(coords: IntVec) -> Self {
        GroupElement { coords }
    }

    pub fn from_i64s(coords: &[i64]) -> Result<Self> {
        Ok(GroupElement { coords: IntVec::from_i64s(coords)? })
    }

    pub fn coords(&self) -> &IntVec {
        &self.coords
    }
}

/// A basis of the group made of positive elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupBasis {
    /// Row `i` writes basis element `i` in the original generators.
    coords_in_original: Vec<Vec<BigInt>>,
    images: Vec<LexVector>,
}

impl GroupBasis {
    /// The generators themselves.
    pub fn standard(order: &GroupOrder) -> Self {
        let n = order.rank();
        let coords_in_original = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| if r == c { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        GroupBasis { coords_in_original, images: order.images.clone() }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[LexVector] {
        &self.images
    }

    pub fn coords_in_original(&self) -> &[Vec<BigInt>] {
        &self.coords_in_original
    }

    fn order_dim(&self) -> usize {
        self.images.first().map_or(0, LexVector::len)
    }

    /// The image of `e` in ℚᵐ.
    pub fn value(&self, e: &GroupElement) -> Result<LexVector> {
        check_dim(self.rank(), e.coords.dim())?;
        Ok(LexVector::combination(e.coords.entries(), &self.images, self.order_dim()))
    }

    pub fn compare(&self, a: &GroupElement, b: &GroupElement) -> Result<Ordering> {
        Ok(self.value(a)?.cmp(&self.value(b)?))
    }

    pub fn sign(&self, e: &GroupElement) -> Result<Ordering> {
        Ok(self.value(e)?.signum())
    }

    /// The element of `J` with the smallest image.
    pub fn perron_pivot(&self, set: &[usize]) -> Result<usize> {
        let mut best: Option<usize> = None;
        for &i in set {
            if i >= self.rank() {
                return Err(Error::InvalidStep(format!("index {i} out of range")));
            }
            match best {
                None => best = Some(i),
                Some(b) if b == i => {}
                Some(b) => match self.images[i].cmp(&self.images[b]) {
                    Ordering::Less => best = Some(i),
                    Ordering::Equal => {
                        return Err(Error::Consistency(format!(
                            "basis elements {} and {} have equal images",
                            b + 1,
                            i + 1
                        )))
                    }
                    Ordering::Greater => {}
                },
            }
        }
        best.ok_or_else(|| Error::InvalidStep("J is empty".into()))
    }

    /// `γ_i ↦ γ_i − γ_j` for `i ∈ J∖{j}`, for an arbitrary `j ∈ J`.
    ///
    /// Positivity of the new basis holds only if `γ_j` is the smallest
    /// element of `J`; [`simple_perron`] guarantees that.
    pub fn transformed(&self, step: &Step) -> Result<GroupBasis> {
        check_dim(self.rank(), step.dim())?;
        let j = step.pivot();
        let mut next = self.clone();
        for &i in step.set() {
            if i == j {
                continue;
            }
            next.images[i] = self.images[i].sub(&self.images[j]);
            for (c, pc) in next.coords_in_original[i].iter_mut().zip(&self.coords_in_original[j]) {
                *c -= pc;
            }
        }
        Ok(next)
    }

    /// Coordinates of `e` (given in this basis) after `step`.
    pub fn recoordinate(&self, step: &Step, e: &GroupElement) -> Result<GroupElement> {
        Ok(GroupElement { coords: step.apply_signed(&e.coords)? })
    }

    /// Checks unimodularity and positivity.
    pub fn check_integrity(&self) -> Result<()> {
        let det = linalg::determinant(&self.coords_in_original);
        if det.abs() != BigInt::one() {
            return Err(Error::Consistency(format!("basis determinant is {det}")));
        }
        if let Some(i) = self.images.iter().position(|g| !g.is_positive()) {
            return Err(Error::Consistency(format!("basis element {} is not positive", i + 1)));
        }
        Ok(())
    }
}

/// One simple Perron transform on `J`; returns the new basis and `(J, j)`.
pub fn simple_perron(basis: &GroupBasis, set: &[usize]) -> Result<(GroupBasis, Step)> {
    let j = basis.perron_pivot(set)?;
    let step = Step::new(basis.rank(), set.iter().copied(), j)?;
    Ok((basis.transformed(&step)?, step))
}

/// Picks the Perron pivot and tracks the basis as the engine runs.
struct PerronChooser {
    basis: GroupBasis,
    fault: Option<Error>,
}

impl Adversary for PerronChooser {
    fn choose(&mut self, position: &Position<'_>) -> Result<usize, Abort> {
        match simple_perron(&self.basis, position.set) {
            Ok((next, step)) => {
                self.basis = next;
                Ok(step.pivot())
            }
            Err(e) => {
                self.fault = Some(e);
                Err(Abort)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Positivized {
    pub basis: GroupBasis,
    pub coords: NatVec,
    pub trace: Trace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivizedAll {
    pub basis: GroupBasis,
    /// Coordinates of each input element in the final basis.
    pub coords: Vec<NatVec>,
    pub trace: Trace,
}

/// A Perron transform of `basis` in which `alpha` has non-negative
/// coordinates.
///
/// Writes `α = α₊ − α₋` by coordinate signs and runs the comparability
/// engine on `(α₊, α₋)`, choosing each `j` as the Perron pivot. The final
/// basis is positive and `α` is positive, so the pair ends with
/// `A·α₊ ≥ A·α₋`.
pub fn positivize(basis: &GroupBasis, alpha: &GroupElement) -> Result<Positivized> {
    let value = basis.value(alpha)?;
    if value.signum() == Ordering::Less {
        return Err(Error::NegativeElement { index: 0 });
    }
    if value.is_zero() {
        if !alpha.coords.entries().iter().all(Zero::is_zero) {
            return Err(Error::Consistency("nonzero coordinates with zero value".into()));
        }
        return Ok(Positivized {
            basis: basis.clone(),
            coords: NatVec::zeros(basis.rank())?,
            trace: Trace::new(),
        });
    }

    let (plus, minus) = alpha.coords.split_signs();
    let mut chooser = PerronChooser { basis: basis.clone(), fault: None };
    let run = match run_pair(&plus, &minus, &mut chooser, None) {
        Ok(run) => run,
        Err(Error::Aborted { .. }) => {
            return Err(chooser.fault.unwrap_or_else(|| Error::Consistency("chooser aborted".into())))
        }
        Err(e) => return Err(e),
    };
    if run.outcome != Comparability::GreaterEq {
        return Err(Error::Consistency(format!(
            "positive element ended with outcome {:?}",
            run.outcome
        )));
    }
    let coords = run
        .final_alpha
        .checked_sub(&run.final_beta)?
        .ok_or_else(|| Error::Consistency("A·α₊ is not above A·α₋".into()))?;
    Ok(Positivized { basis: chooser.basis, coords, trace: run.steps })
}

/// A Perron transform of `basis` in which every element has non-negative
/// coordinates. Elements are handled in order; earlier ones stay in the
/// cone because the cone only grows.
pub fn positivize_all(basis: &GroupBasis, elements: &[GroupElement]) -> Result<PositivizedAll> {
    for (index, e) in elements.iter().enumerate() {
        if basis.sign(e)? == Ordering::Less {
            return Err(Error::NegativeElement { index });
        }
    }
    let mut current: Vec<IntVec> = elements.iter().map(|e| e.coords.clone()).collect();
    let mut basis = basis.clone();
    let mut trace = Trace::new();
    for k in 0..current.len() {
        let done = positivize(&basis, &GroupElement::new(current[k].clone()))?;
        for c in current.iter_mut() {
            for step in &done.trace {
                *c = step.apply_signed(c)?;
            }
        }
        basis = done.basis;
        trace.extend(&done.trace);
    }
    let coords = current
        .iter()
        .map(|c| {
            c.to_natural()
                .ok_or_else(|| Error::Consistency(format!("coordinates {c} left the cone")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PositivizedAll { basis, coords, trace })
}
