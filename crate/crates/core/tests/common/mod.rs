//! Brute-force oracles over explicit sets of vectors. Slow, small, and
//! independent of the reduction and kernel code under test.

#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use z2z4::{AdditiveCode, MixedMatrix, MixedVector, Shape};

pub type Words = BTreeSet<MixedVector>;

/// Every vector of Z2^α × Z4^β.
pub fn ambient(shape: Shape) -> Vec<MixedVector> {
    let mut out = vec![(Vec::new(), Vec::new())];
    for _ in 0..shape.alpha {
        out = out
            .into_iter()
            .flat_map(|(b, q): (Vec<u8>, Vec<u8>)| {
                (0..2u8).map(move |x| {
                    let mut b = b.clone();
                    b.push(x);
                    (b, q.clone())
                })
            })
            .collect();
    }
    for _ in 0..shape.beta {
        out = out
            .into_iter()
            .flat_map(|(b, q): (Vec<u8>, Vec<u8>)| {
                (0..4u8).map(move |x| {
                    let mut q = q.clone();
                    q.push(x);
                    (b.clone(), q)
                })
            })
            .collect();
    }
    out.into_iter().map(|(b, q)| MixedVector::new(b, q).unwrap()).collect()
}

pub fn add(u: &MixedVector, v: &MixedVector) -> MixedVector {
    let b = u.bin().iter().zip(v.bin()).map(|(x, y)| (x + y) % 2).collect();
    let q = u.quat().iter().zip(v.quat()).map(|(x, y)| (x + y) % 4).collect();
    MixedVector::new(b, q).unwrap()
}

/// 2·Σ binary products + Σ quaternary products, mod 4.
pub fn dot(u: &MixedVector, v: &MixedVector) -> u8 {
    let b: u32 = u.bin().iter().zip(v.bin()).map(|(x, y)| (x * y) as u32).sum();
    let q: u32 = u.quat().iter().zip(v.quat()).map(|(x, y)| (x * y) as u32).sum();
    ((2 * b + q) % 4) as u8
}

/// Closure of the rows under addition.
pub fn closure(shape: Shape, rows: &[MixedVector]) -> Words {
    let mut set: Words = std::iter::once(MixedVector::zero(shape)).collect();
    let mut frontier: Vec<MixedVector> = set.iter().cloned().collect();
    while let Some(v) = frontier.pop() {
        for r in rows {
            let w = add(&v, r);
            if set.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    set
}

pub fn row_space(m: &MixedMatrix) -> Words {
    closure(m.shape(), m.rows())
}

/// Vectors orthogonal to every row.
pub fn annihilator(shape: Shape, rows: &[MixedVector]) -> Words {
    ambient(shape)
        .into_iter()
        .filter(|v| rows.iter().all(|r| dot(v, r) == 0))
        .collect()
}

pub fn words(c: &AdditiveCode) -> Words {
    c.enumerate().unwrap().collect()
}

fn log2(n: usize) -> usize {
    assert!(n.is_power_of_two());
    n.trailing_zeros() as usize
}

/// (γ, δ, κ) read off the group: |C| = 2^(γ+2δ), 2^(γ+δ) words of order at
/// most two, and κ the rank of their binary projection.
pub fn group_type(shape: Shape, set: &Words) -> (usize, usize, usize) {
    let total = log2(set.len());
    let low: Vec<&MixedVector> = set.iter().filter(|v| add(v, v).is_zero()).collect();
    let low_log = log2(low.len());
    let delta = total - low_log;
    let gamma = low_log - delta;
    let proj: BTreeSet<Vec<u8>> = low.iter().map(|v| v.bin().to_vec()).collect();
    let kappa = if shape.alpha == 0 { 0 } else { log2(proj.len()) };
    (gamma, delta, kappa)
}

pub fn shape_strategy(max_alpha: usize, max_beta: usize) -> impl Strategy<Value = Shape> {
    (0..=max_alpha, 0..=max_beta)
        .prop_filter("nonempty", |(a, b)| a + b > 0)
        .prop_map(|(a, b)| Shape::new(a, b))
}

pub fn vector_strategy(shape: Shape) -> impl Strategy<Value = MixedVector> {
    (
        proptest::collection::vec(0u8..2, shape.alpha),
        proptest::collection::vec(0u8..4, shape.beta),
    )
        .prop_map(|(b, q)| MixedVector::new(b, q).unwrap())
}

pub fn matrix_in(shape: Shape, max_rows: usize) -> impl Strategy<Value = MixedMatrix> {
    proptest::collection::vec(vector_strategy(shape), 0..=max_rows)
        .prop_map(move |rows| MixedMatrix::new(shape, rows).unwrap())
}

/// A shape and a matrix over it, at most 2^16 ambient vectors.
pub fn small_matrix() -> impl Strategy<Value = MixedMatrix> {
    shape_strategy(4, 5).prop_flat_map(|s| matrix_in(s, 4))
}

/// Two matrices over a common shape.
pub fn small_pair() -> impl Strategy<Value = (MixedMatrix, MixedMatrix)> {
    shape_strategy(4, 5).prop_flat_map(|s| (matrix_in(s, 4), matrix_in(s, 4)))
}
