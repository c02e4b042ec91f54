//! Positivity in ordered groups and the monomial substitutions built on it.

use num_traits::{One, Signed, Zero};
use perron_core::{
    apply_substitution, determinant, divisibility_transform, monomialize, positivize,
    positivize_all, BigInt, BigRational, BigUint, GroupBasis, GroupElement, GroupOrder,
    LexVector, Monomial, NatVec, Polynomial, Trace, ValuedRing,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::oracle::{self, Poly};
use crate::search::check_unimodular;
use crate::{Outcome, Unimodular};

const FAILURE_CAP: usize = 20;

type Matrix = Vec<Vec<BigInt>>;

fn note(failures: &mut Vec<String>, msg: String) {
    if failures.len() < FAILURE_CAP {
        failures.push(msg);
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    BigRational::new(rng.random_range(-20..=20).into(), rng.random_range(1..=20).into())
}

/// A lex-positive rational vector with entries `p/q`, `|p|, q ≤ 20`.
fn random_positive(rng: &mut ChaCha8Rng, len: usize) -> Vec<BigRational> {
    loop {
        let v: Vec<BigRational> = (0..len).map(|_| random_rational(rng)).collect();
        if v.iter().all(Zero::is_zero) {
            continue;
        }
        return if oracle::lex_positive(&v) { v } else { v.into_iter().map(|x| -x).collect() };
    }
}

/// `count` lex-positive, linearly independent vectors of length `len`.
fn random_independent(rng: &mut ChaCha8Rng, count: usize, len: usize) -> Vec<Vec<BigRational>> {
    loop {
        let images: Vec<Vec<BigRational>> = (0..count).map(|_| random_positive(rng, len)).collect();
        if oracle::rank(&images) == count {
            return images;
        }
    }
}

fn coords(v: &LexVector) -> Vec<BigRational> {
    v.coords().to_vec()
}

fn lex(v: &[BigRational]) -> LexVector {
    LexVector::new(v.to_vec())
}

/// Replays a Perron trace from the standard basis: `j` must carry the
/// smallest image of `J`, images stay positive and the change of basis stays
/// unimodular after every step. Returns the final basis rows and images.
fn replay_basis(
    images: &[Vec<BigRational>],
    trace: &Trace,
) -> Result<(Matrix, Vec<Vec<BigRational>>), String> {
    let n = images.len();
    let mut rows = oracle::identity(n);
    let mut imgs = images.to_vec();
    for (k, s) in trace.iter().enumerate() {
        let j = s.pivot();
        for &i in s.set() {
            if i != j && oracle::lex_cmp(&imgs[i], &imgs[j]) != std::cmp::Ordering::Greater {
                return Err(format!("step {k}: image {} is not the smallest in J", j + 1));
            }
        }
        let (rj, ij) = (rows[j].clone(), imgs[j].clone());
        for &i in s.set() {
            if i == j {
                continue;
            }
            for (x, y) in rows[i].iter_mut().zip(&rj) {
                *x -= y;
            }
            for (x, y) in imgs[i].iter_mut().zip(&ij) {
                *x -= y;
            }
        }
        if let Some(i) = imgs.iter().position(|v| !oracle::lex_positive(v)) {
            return Err(format!("step {k}: image {} is not positive", i + 1));
        }
        if oracle::det(&rows).abs() != BigInt::one() {
            return Err(format!("step {k}: basis change is not unimodular"));
        }
    }
    for (r, img) in rows.iter().zip(&imgs) {
        if &oracle::combine(r, images) != img {
            return Err("images disagree with the basis rows".into());
        }
    }
    Ok((rows, imgs))
}

fn check_basis(
    images: &[Vec<BigRational>],
    trace: &Trace,
    basis: &GroupBasis,
) -> Result<Vec<Vec<BigInt>>, String> {
    let (rows, imgs) = replay_basis(images, trace)?;
    if basis.coords_in_original() != rows.as_slice() {
        return Err("basis differs from the replayed trace".into());
    }
    if basis.images().iter().map(coords).collect::<Vec<_>>() != imgs {
        return Err("basis images differ from the replayed trace".into());
    }
    Ok(rows)
}

fn check_expansion(rows: &[Vec<BigInt>], c: &NatVec, element: &[BigInt]) -> Result<(), String> {
    let n = element.len();
    let mut total = vec![BigInt::zero(); n];
    for (ci, row) in c.entries().iter().zip(rows) {
        for (t, x) in total.iter_mut().zip(row) {
            *t += BigInt::from(ci.clone()) * x;
        }
    }
    if total != element {
        return Err(format!("coords {c} expand to {total:?}, not {element:?}"));
    }
    Ok(())
}

pub fn criterion_5(um: &mut Unimodular) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e);
    let mut failures = Vec::new();
    let mut elements_checked = 0;
    let mut steps = 0;
    for k in 0..500 {
        let m = rng.random_range(1..=3);
        let n = rng.random_range(1..=m.min(4));
        let images = random_independent(&mut rng, n, m);
        let context = format!("order {k} {images:?}");
        let order = match GroupOrder::new(images.iter().map(|v| lex(v)).collect()) {
            Ok(o) => o,
            Err(e) => {
                note(&mut failures, format!("{context}: valid order rejected: {e}"));
                continue;
            }
        };
        let basis = GroupBasis::standard(&order);
        let count = rng.random_range(1..=3);
        let elements: Vec<Vec<BigInt>> = (0..count)
            .map(|_| loop {
                let e: Vec<BigInt> = (0..n).map(|_| BigInt::from(rng.random_range(-20..=20))).collect();
                if oracle::lex_positive(&oracle::combine(&e, &images)) {
                    break e;
                }
            })
            .collect();
        let group_elements: Vec<GroupElement> =
            elements.iter().map(|e| GroupElement::new(perron_core::IntVec::new(e.clone()).unwrap())).collect();

        match positivize(&basis, &group_elements[0]) {
            Ok(out) => {
                steps += out.trace.len();
                check_unimodular(&out.trace, n, um, &context);
                let verdict = check_basis(&images, &out.trace, &out.basis)
                    .and_then(|rows| check_expansion(&rows, &out.coords, &elements[0]));
                if let Err(e) = verdict {
                    note(&mut failures, format!("{context}: positivize: {e}"));
                }
                elements_checked += 1;
            }
            Err(e) => note(&mut failures, format!("{context}: positivize: {e}")),
        }
        match positivize_all(&basis, &group_elements) {
            Ok(out) => {
                steps += out.trace.len();
                check_unimodular(&out.trace, n, um, &context);
                let verdict = check_basis(&images, &out.trace, &out.basis).and_then(|rows| {
                    if out.coords.len() != elements.len() {
                        return Err("wrong number of coordinate rows".into());
                    }
                    out.coords
                        .iter()
                        .zip(&elements)
                        .try_for_each(|(c, e)| check_expansion(&rows, c, e))
                });
                if let Err(e) = verdict {
                    note(&mut failures, format!("{context}: positivize_all: {e}"));
                }
                elements_checked += elements.len();
            }
            Err(e) => note(&mut failures, format!("{context}: positivize_all: {e}")),
        }
    }
    Outcome::new(format!("500 orders, {elements_checked} elements, {steps} Perron steps"), failures)
}

fn random_ring(rng: &mut ChaCha8Rng, m: usize, n: usize, dim: usize) -> (Vec<Vec<BigRational>>, ValuedRing) {
    let mut values = random_independent(rng, n, dim);
    values.extend((n..m).map(|_| random_positive(rng, dim)));
    let ring = ValuedRing::new(n, values.iter().map(|v| lex(v)).collect()).expect("valid ring");
    (values, ring)
}

fn matrix_rows(rows: &[Vec<BigUint>]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|x| BigInt::from(x.clone())).collect()).collect()
}

/// The substitution is the transposed composite of the trace, has
/// determinant one, and the new values are positive and reproduce the old
/// ones through it.
fn check_substitution(
    a: &[Vec<BigUint>],
    trace: &Trace,
    old: &[Vec<BigRational>],
    new: &[LexVector],
    n: usize,
) -> Result<(), String> {
    let signed = matrix_rows(a);
    let composed = oracle::compose(trace, n);
    let transposed: Vec<Vec<BigInt>> =
        (0..n).map(|i| (0..n).map(|j| composed[j][i].clone()).collect()).collect();
    if signed != transposed {
        return Err("substitution is not the transposed trace product".into());
    }
    if oracle::det(&signed) != BigInt::one() {
        return Err(format!("det(a) = {}", oracle::det(&signed)));
    }
    let new: Vec<Vec<BigRational>> = new.iter().map(coords).collect();
    if let Some(j) = new[..n].iter().position(|v| !oracle::lex_positive(v)) {
        return Err(format!("ν(x'{}) is not positive", j + 1));
    }
    for i in 0..n {
        if oracle::combine(&signed[i], &new[..n]) != old[i] {
            return Err(format!("ν(x{}) is not reproduced", i + 1));
        }
    }
    if new[n..] != old[n..] {
        return Err("values of the other variables changed".into());
    }
    Ok(())
}

pub fn criterion_6(um: &mut Unimodular) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d);
    let mut failures = Vec::new();
    for k in 0..200 {
        let n = rng.random_range(1..=4);
        let m = n + rng.random_range(0..=1);
        let dim = rng.random_range(n..=4);
        let (values, ring) = random_ring(&mut rng, m, n, dim);
        let exps = |rng: &mut ChaCha8Rng| -> Vec<BigUint> {
            (0..m).map(|i| BigUint::from(if i < n { rng.random_range(0..=6u32) } else { 0 })).collect()
        };
        let nu = |e: &[BigUint]| {
            let c: Vec<BigInt> = e.iter().map(|x| BigInt::from(x.clone())).collect();
            oracle::combine(&c, &values)
        };
        let (mut e1, mut e2) = loop {
            let (a, b) = (exps(&mut rng), exps(&mut rng));
            if a != b {
                break (a, b);
            }
        };
        if oracle::lex_cmp(&nu(&e1), &nu(&e2)) == std::cmp::Ordering::Greater {
            std::mem::swap(&mut e1, &mut e2);
        }
        let context = format!("instance {k} values {values:?} M1 {e1:?} M2 {e2:?}");
        let m1 = Monomial::new(NatVec::new(e1.clone()).unwrap());
        let m2 = Monomial::new(NatVec::new(e2.clone()).unwrap());
        let out = match divisibility_transform(&ring, &m1, &m2) {
            Ok(out) => out,
            Err(e) => {
                note(&mut failures, format!("{context}: {e}"));
                continue;
            }
        };
        check_unimodular(&out.trace, n, um, &context);
        let a = out.substitution.matrix().rows();
        if determinant(out.substitution.matrix()) != BigInt::one() {
            note(&mut failures, format!("{context}: library determinant is not 1"));
        }
        if let Err(e) = check_substitution(a, &out.trace, &values, out.ring.values(), n) {
            note(&mut failures, format!("{context}: {e}"));
            continue;
        }
        let p1 = oracle::substitute_exponents(a, &e1);
        let p2 = oracle::substitute_exponents(a, &e2);
        if !oracle::le(&p1, &p2) {
            note(&mut failures, format!("{context}: primed exponents {p1:?} do not divide {p2:?}"));
        }
    }
    Outcome::new("200 instances".into(), failures)
}

fn to_poly(p: &Polynomial) -> Poly {
    p.terms().map(|(e, c)| (e.entries().to_vec(), c.clone())).collect()
}

pub fn criterion_7(um: &mut Unimodular) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7f);
    let mut failures = Vec::new();
    let mut terms_total = 0;
    for k in 0..200 {
        let m = rng.random_range(1..=5);
        let n = rng.random_range(1..=m.min(3));
        let dim = rng.random_range(n..=3);
        let (values, ring) = random_ring(&mut rng, m, n, dim);
        let f = loop {
            let count = rng.random_range(1..=6);
            let mut f = Poly::new();
            for _ in 0..count {
                let e: Vec<BigUint> = (0..m).map(|_| BigUint::from(rng.random_range(0..=4u32))).collect();
                let c = loop {
                    let c = random_rational(&mut rng);
                    if !c.is_zero() {
                        break c;
                    }
                };
                oracle::poly_add(&mut f, e, c);
            }
            if !f.is_empty() {
                break f;
            }
        };
        terms_total += f.len();
        let context = format!("polynomial {k} values {values:?} f {f:?}");
        let poly = Polynomial::from_terms(
            m,
            f.iter().map(|(e, c)| (NatVec::new(e.clone()).unwrap(), c.clone())),
        )
        .unwrap();
        let out = match monomialize(&ring, &poly) {
            Ok(out) => out,
            Err(e) => {
                note(&mut failures, format!("{context}: {e}"));
                continue;
            }
        };
        check_unimodular(&out.trace, n, um, &context);
        let a = out.substitution.matrix().rows();
        if let Err(e) = check_substitution(a, &out.trace, &values, out.ring.values(), n) {
            note(&mut failures, format!("{context}: {e}"));
            continue;
        }
        let mut image = Poly::new();
        for (e, c) in &f {
            oracle::poly_add(&mut image, oracle::substitute_exponents(a, e), c.clone());
        }
        match apply_substitution(&poly, &out.substitution) {
            Ok(lib) if to_poly(&lib) == image => {}
            Ok(_) => note(&mut failures, format!("{context}: apply_substitution differs from expansion")),
            Err(e) => note(&mut failures, format!("{context}: apply_substitution: {e}")),
        }
        let mut b = out.factor_exponents.entries().to_vec();
        if b.len() != n {
            note(&mut failures, format!("{context}: factor has {} exponents", b.len()));
            continue;
        }
        b.resize(m, BigUint::zero());
        let factor: Poly = [(b, BigRational::one())].into_iter().collect();
        let unit = to_poly(&out.unit);
        if oracle::poly_mul(&factor, &unit) != image {
            note(&mut failures, format!("{context}: factor · unit differs from the image"));
        }
        if !unit.keys().any(|e| e[..n].iter().all(Zero::is_zero)) {
            note(&mut failures, format!("{context}: unit has no term free of toric variables"));
        }
    }
    Outcome::new(format!("200 polynomials, {terms_total} terms"), failures)
}
