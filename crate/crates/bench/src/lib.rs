//! Fixed inputs shared by the benchmarks.

use perron_core::{BigRational, LexVector, NatVec, Polynomial, ValuedRing};

pub fn pair(n: usize, scale: u64) -> (NatVec, NatVec) {
    let a: Vec<u64> = (0..n).map(|i| if i % 2 == 0 { scale * (i as u64 + 1) } else { 0 }).collect();
    let b: Vec<u64> = (0..n).map(|i| if i % 2 == 1 { scale + i as u64 } else { 1 }).collect();
    (NatVec::from_u64s(&a).unwrap(), NatVec::from_u64s(&b).unwrap())
}

pub fn game_vectors(count: usize, n: usize) -> Vec<NatVec> {
    (0..count)
        .map(|k| {
            let e: Vec<u64> = (0..n).map(|i| ((k * 7 + i * 3) % 5) as u64).collect();
            NatVec::from_u64s(&e).unwrap()
        })
        .collect()
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Two toric variables valued `(1, 0)` and `(0, 1)` plus the square root of two.
pub fn ring() -> ValuedRing {
    let sqrt2 = BigRational::new(99.into(), 70.into());
    ValuedRing::new(
        2,
        vec![LexVector::new(vec![int(1), sqrt2]), LexVector::new(vec![int(0), int(1)])],
    )
    .unwrap()
}

pub fn polynomial(terms: u64) -> Polynomial {
    let items = (0..terms).map(|k| {
        (NatVec::from_u64s(&[k, terms - k]).unwrap(), int(k as i64 + 1))
    });
    Polynomial::from_terms(2, items).unwrap()
}
