//! Direct evaluations of the definitions, written without the library.

use std::collections::BTreeMap;

use perron_core::{BigInt, BigRational, BigUint, NatVec, Trace};
use num_traits::{One, Signed, Zero};

pub fn entries(v: &NatVec) -> Vec<BigUint> {
    v.entries().to_vec()
}

pub fn nat(v: &[u64]) -> Vec<BigUint> {
    v.iter().map(|&x| BigUint::from(x)).collect()
}

pub fn le(a: &[BigUint], b: &[BigUint]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// `(min(|ᾱ|,|β̄|), max(|ᾱ|,|β̄|))` with the common part removed per coordinate.
pub fn tau(a: &[BigUint], b: &[BigUint]) -> (BigUint, BigUint) {
    let mut sa = BigUint::zero();
    let mut sb = BigUint::zero();
    for (x, y) in a.iter().zip(b) {
        let g = if x < y { x } else { y };
        sa += x - g;
        sb += y - g;
    }
    if sa <= sb {
        (sa, sb)
    } else {
        (sb, sa)
    }
}

/// Coordinate `j` becomes the sum over `J`; the rest stay.
pub fn step(v: &[BigUint], set: &[usize], j: usize) -> Vec<BigUint> {
    let mut w = v.to_vec();
    w[j] = set.iter().map(|&i| v[i].clone()).sum();
    w
}

pub fn step_matrix(n: usize, set: &[usize], j: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let hit = if r == j { set.contains(&c) } else { r == c };
                    BigInt::from(hit as u8)
                })
                .collect()
        })
        .collect()
}

pub fn matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = b[0].len();
    a.iter()
        .map(|row| {
            (0..n)
                .map(|c| row.iter().zip(b).map(|(x, brow)| x * &brow[c]).sum())
                .collect()
        })
        .collect()
}

pub fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|r| (0..n).map(|c| BigInt::from((r == c) as u8)).collect())
        .collect()
}

/// Product of the step matrices, the latest step leftmost.
pub fn compose(trace: &Trace, n: usize) -> Vec<Vec<BigInt>> {
    trace.iter().fold(identity(n), |acc, s| {
        matmul(&step_matrix(n, s.set(), s.pivot()), &acc)
    })
}

/// Cofactor expansion along the first row.
pub fn det(m: &[Vec<BigInt>]) -> BigInt {
    match m.len() {
        0 => BigInt::one(),
        1 => m[0][0].clone(),
        n => {
            let mut total = BigInt::zero();
            for c in 0..n {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != c)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][c] * det(&minor);
                if c % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            total
        }
    }
}

pub fn apply(m: &[Vec<BigInt>], v: &[BigUint]) -> Vec<BigInt> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, x)| a * BigInt::from(x.clone())).sum())
        .collect()
}

pub fn lex_positive(v: &[BigRational]) -> bool {
    v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive())
}

pub fn lex_cmp(a: &[BigRational], b: &[BigRational]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            std::cmp::Ordering::Equal => continue,
            other => return other,
        }
    }
    std::cmp::Ordering::Equal
}

/// `Σ cᵢ vᵢ` over rationals.
pub fn combine(coeffs: &[BigInt], vectors: &[Vec<BigRational>]) -> Vec<BigRational> {
    let len = vectors.first().map_or(0, Vec::len);
    let mut out = vec![BigRational::zero(); len];
    for (c, v) in coeffs.iter().zip(vectors) {
        let c = BigRational::from_integer(c.clone());
        for (o, x) in out.iter_mut().zip(v) {
            *o += &c * x;
        }
    }
    out
}

/// Rank by Gaussian elimination over the rationals.
pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[r][c];
                let pivot = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

pub type Poly = BTreeMap<Vec<BigUint>, BigRational>;

pub fn poly_add(p: &mut Poly, e: Vec<BigUint>, c: BigRational) {
    let slot = p.entry(e.clone()).or_insert_with(BigRational::zero);
    *slot += c;
    if slot.is_zero() {
        p.remove(&e);
    }
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            poly_add(&mut out, e, ca * cb);
        }
    }
    out
}

/// The image of `x^e` under `xᵢ = Π x'ⱼ^{a_ij}` on the first `n` variables.
pub fn substitute_exponents(a: &[Vec<BigUint>], e: &[BigUint]) -> Vec<BigUint> {
    let n = a.len();
    let mut out = e.to_vec();
    for (j, o) in out.iter_mut().enumerate().take(n) {
        *o = (0..n).map(|i| &e[i] * &a[i][j]).sum();
    }
    out
}
