//! Monomial substitutions that make monomials divide each other under a
//! monomial valuation.
//!
//! Variables `x₁, …, xₙ` are the toric ones; their values are rationally
//! independent and positive. A substitution
//! `xᵢ = ∏ⱼ x'ⱼ^{aᵢⱼ}` (for `i ≤ n`, `xᵢ = x'ᵢ` beyond) with a non-negative
//! unimodular matrix `(aᵢⱼ)` comes from a Perron transform of the value
//! basis: if `A` is the change of coordinates, then `a = Aᵀ` and a toric
//! exponent vector `e` becomes `A·e`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{check_dim, Error, Result};
use crate::group::{positivize, positivize_all, GroupBasis, GroupElement, GroupOrder, LexVector};
use crate::transform::{apply_matrix, compose_trace, determinant, Trace, TransformMatrix};
use crate::vector::{IntVec, NatVec};

/// Variables with their values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuedRing {
    num_toric: usize,
    values: Vec<LexVector>,
}

impl ValuedRing {
    /// `values[i]` is the value of `x_{i+1}`; the first `num_toric` must be
    /// independent, and all must be positive.
    pub fn new(num_toric: usize, values: Vec<LexVector>) -> Result<Self> {
        if values.is_empty() || num_toric == 0 {
            return Err(Error::ZeroDimension);
        }
        if num_toric > values.len() {
            return Err(Error::Precondition(format!(
                "{num_toric} toric variables but only {} variables",
                values.len()
            )));
        }
        let len = values[0].len();
        for v in &values {
            check_dim(len, v.len())?;
        }
        if let Some(i) = values.iter().position(|v| !v.is_positive()) {
            return Err(Error::Precondition(format!("value of x{} is not positive", i + 1)));
        }
        GroupOrder::new(values[..num_toric].to_vec())?;
        Ok(ValuedRing { num_toric, values })
    }

    pub fn num_vars(&self) -> usize {
        self.values.len()
    }

    pub fn num_toric(&self) -> usize {
        self.num_toric
    }

    pub fn values(&self) -> &[LexVector] {
        &self.values
    }

    pub fn order_dim(&self) -> usize {
        self.values[0].len()
    }

    fn toric_basis(&self) -> GroupBasis {
        GroupBasis::standard(&GroupOrder::new_unchecked(self.values[..self.num_toric].to_vec()))
    }

    fn with_toric_values(&self, toric: &[LexVector]) -> ValuedRing {
        let mut values = toric.to_vec();
        values.extend_from_slice(&self.values[self.num_toric..]);
        ValuedRing { num_toric: self.num_toric, values }
    }
}

/// A monic monomial, by its exponent vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial(NatVec);

impl Monomial {
    pub fn new(exponents: NatVec) -> Self {
        Monomial(exponents)
    }

    pub fn from_u64s(exponents: &[u64]) -> Result<Self> {
        Ok(Monomial(NatVec::from_u64s(exponents)?))
    }

    pub fn exponents(&self) -> &NatVec {
        &self.0
    }

    fn toric_part(&self, n: usize) -> &[BigUint] {
        &self.0.entries()[..n]
    }
}

/// `Σ exponentᵢ·ν(xᵢ)`.
pub fn monomial_value(ring: &ValuedRing, monomial: &Monomial) -> Result<LexVector> {
    check_dim(ring.num_vars(), monomial.0.dim())?;
    let coeffs: Vec<BigInt> = monomial.0.entries().iter().map(|e| BigInt::from(e.clone())).collect();
    Ok(LexVector::combination(&coeffs, &ring.values, ring.order_dim()))
}

/// A polynomial with rational coefficients in canonical form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    num_vars: usize,
    terms: BTreeMap<NatVec, BigRational>,
}

impl Polynomial {
    pub fn zero(num_vars: usize) -> Self {
        Polynomial { num_vars, terms: BTreeMap::new() }
    }

    /// Sums like terms and drops zero coefficients.
    pub fn from_terms<I>(num_vars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (NatVec, BigRational)>,
    {
        let mut p = Polynomial::zero(num_vars);
        for (e, c) in terms {
            p.add_term(e, c)?;
        }
        Ok(p)
    }

    pub fn monomial(exponents: NatVec, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        let num_vars = exponents.dim();
        if !coeff.is_zero() {
            terms.insert(exponents, coeff);
        }
        Polynomial { num_vars, terms }
    }

    pub fn add_term(&mut self, exponents: NatVec, coeff: BigRational) -> Result<()> {
        check_dim(self.num_vars, exponents.dim())?;
        let slot = self.terms.entry(exponents).or_insert_with(BigRational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
        Ok(())
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NatVec, &BigRational)> {
        self.terms.iter()
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dim(self.num_vars, other.num_vars)?;
        let mut out = Polynomial::zero(self.num_vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.checked_add(e2)?, c1 * c2)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let vars: Vec<String> = e
                .entries()
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| {
                    if x.is_one() {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{x}", i + 1)
                    }
                })
                .collect();
            match (c.is_one(), vars.is_empty()) {
                (true, false) => write!(f, "{}", vars.join("*"))?,
                (_, true) => write!(f, "{c}")?,
                (false, false) => write!(f, "{c}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

/// `xᵢ = ∏ⱼ x'ⱼ^{aᵢⱼ}` for the toric variables, identity on the rest.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Substitution {
    matrix: TransformMatrix,
    num_vars: usize,
}

impl Substitution {
    pub fn identity(num_toric: usize, num_vars: usize) -> Self {
        Substitution { matrix: TransformMatrix::identity(num_toric), num_vars }
    }

    /// From the matrix `A` that changes value-basis coordinates.
    pub fn from_coordinate_change(change: &TransformMatrix, num_vars: usize) -> Self {
        Substitution { matrix: change.transpose(), num_vars }
    }

    /// Row `i` holds the exponents of `x'` in `xᵢ`.
    pub fn matrix(&self) -> &TransformMatrix {
        &self.matrix
    }

    pub fn num_toric(&self) -> usize {
        self.matrix.dim()
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == TransformMatrix::identity(self.num_toric())
    }

    /// The exponent vector of the image of `x^e`.
    pub fn map_exponents(&self, e: &NatVec) -> Result<NatVec> {
        check_dim(self.num_vars, e.dim())?;
        let n = self.num_toric();
        let toric = NatVec::new(e.entries()[..n].to_vec())?;
        let mapped = apply_matrix(&self.matrix.transpose(), &toric)?.into_entries();
        NatVec::new(mapped.into_iter().chain(e.entries()[n..].iter().cloned()).collect())
    }

    pub fn apply_monomial(&self, m: &Monomial) -> Result<Monomial> {
        Ok(Monomial(self.map_exponents(&m.0)?))
    }

    /// The substitution that performs `self` and then `next`.
    pub fn then(&self, next: &Substitution) -> Result<Substitution> {
        check_dim(self.num_vars, next.num_vars)?;
        Ok(Substitution { matrix: self.matrix.mul(&next.matrix)?, num_vars: self.num_vars })
    }
}

pub fn apply_substitution(p: &Polynomial, s: &Substitution) -> Result<Polynomial> {
    check_dim(s.num_vars, p.num_vars)?;
    let mut terms = BTreeMap::new();
    for (e, c) in &p.terms {
        if terms.insert(s.map_exponents(e)?, c.clone()).is_some() {
            return Err(Error::Consistency("substitution merged two terms".into()));
        }
    }
    Ok(Polynomial { num_vars: p.num_vars, terms })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibilityTransform {
    pub substitution: Substitution,
    pub ring: ValuedRing,
    /// The Perron steps behind the substitution.
    pub trace: Trace,
}

/// A substitution after which `m1` divides `m2`, for `ν(m1) < ν(m2)`.
pub fn divisibility_transform(
    ring: &ValuedRing,
    m1: &Monomial,
    m2: &Monomial,
) -> Result<DivisibilityTransform> {
    let n = ring.num_toric();
    for m in [m1, m2] {
        check_dim(ring.num_vars(), m.0.dim())?;
        if m.0.entries()[n..].iter().any(|e| !e.is_zero()) {
            return Err(Error::Precondition("monomials must only involve toric variables".into()));
        }
    }
    if monomial_value(ring, m1)? >= monomial_value(ring, m2)? {
        return Err(Error::Precondition("ν(M1) must be smaller than ν(M2)".into()));
    }
    let diff = toric_difference(m2, m1, n)?;
    let out = positivize(&ring.toric_basis(), &GroupElement::new(diff))?;
    let change = compose_trace(&out.trace, n)?;
    Ok(DivisibilityTransform {
        substitution: Substitution::from_coordinate_change(&change, ring.num_vars()),
        ring: ring.with_toric_values(out.basis.images()),
        trace: out.trace,
    })
}

fn toric_difference(m: &Monomial, base: &Monomial, n: usize) -> Result<IntVec> {
    IntVec::new(
        m.toric_part(n)
            .iter()
            .zip(base.toric_part(n))
            .map(|(a, b)| BigInt::from(a.clone()) - BigInt::from(b.clone()))
            .collect(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomializationResult {
    pub substitution: Substitution,
    /// The ring in the primed variables.
    pub ring: ValuedRing,
    pub factor_exponents: NatVec,
    pub unit: Polynomial,
    pub trace: Trace,
}

impl MonomializationResult {
    /// `x'^b` as a polynomial.
    pub fn factor(&self) -> Result<Polynomial> {
        let mut e = self.factor_exponents.entries().to_vec();
        e.resize(self.unit.num_vars, BigUint::zero());
        Ok(Polynomial::monomial(NatVec::new(e)?, BigRational::one()))
    }
}

/// Writes `f = x'^b · g` after a substitution, with `g` having a term free of
/// the toric variables.
pub fn monomialize(ring: &ValuedRing, f: &Polynomial) -> Result<MonomializationResult> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    check_dim(ring.num_vars(), f.num_vars)?;
    let n = ring.num_toric();

    let mut toric: Vec<Monomial> = Vec::new();
    for e in f.terms.keys() {
        let mut t = e.entries()[..n].to_vec();
        t.resize(ring.num_vars(), BigUint::zero());
        let t = Monomial(NatVec::new(t)?);
        if !toric.contains(&t) {
            toric.push(t);
        }
    }
    let mut values = Vec::with_capacity(toric.len());
    for t in &toric {
        values.push(monomial_value(ring, t)?);
    }
    let mut lowest = 0;
    for k in 1..toric.len() {
        match values[k].cmp(&values[lowest]) {
            std::cmp::Ordering::Less => lowest = k,
            std::cmp::Ordering::Equal => {
                return Err(Error::Consistency(
                    "two toric monomials have the same value".into(),
                ))
            }
            std::cmp::Ordering::Greater => {}
        }
    }
    let base = &toric[lowest];
    let diffs = toric
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != lowest)
        .map(|(_, t)| toric_difference(t, base, n).map(GroupElement::new))
        .collect::<Result<Vec<_>>>()?;
    let out = positivize_all(&ring.toric_basis(), &diffs)?;
    let change = compose_trace(&out.trace, n)?;
    let substitution = Substitution::from_coordinate_change(&change, ring.num_vars());

    let factor_exponents = apply_matrix(&change, &NatVec::new(base.toric_part(n).to_vec())?)?;
    let image = apply_substitution(f, &substitution)?;
    let mut unit = Polynomial::zero(f.num_vars);
    for (e, c) in &image.terms {
        let mut reduced = e.entries().to_vec();
        for (r, b) in reduced.iter_mut().zip(factor_exponents.entries()) {
            if *r < *b {
                return Err(Error::Consistency("factor does not divide a term".into()));
            }
            *r -= b;
        }
        unit.add_term(NatVec::new(reduced)?, c.clone())?;
    }

    let result = MonomializationResult {
        substitution,
        ring: ring.with_toric_values(out.basis.images()),
        factor_exponents,
        unit,
        trace: out.trace,
    };
    if result.factor()?.mul(&result.unit)? != image {
        return Err(Error::Consistency("factorization does not multiply back".into()));
    }
    if !result.unit.terms.keys().any(|e| e.entries()[..n].iter().all(Zero::is_zero)) {
        return Err(Error::Consistency("unit lies in the toric ideal".into()));
    }
    if determinant(result.substitution.matrix()) != BigInt::one() {
        return Err(Error::Consistency("substitution is not unimodular".into()));
    }
    Ok(result)
}
