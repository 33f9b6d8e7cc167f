//! Exact arithmetic on elements of Z2^α × Z4^β and canonical reduction of
//! generating sets.
//!
//! A generating set is reduced to a canonical form that depends only on the
//! subgroup it generates:
//!
//! * `rows4` holds one order-four row per unit pivot. Unit pivots are found by
//!   scanning quaternary columns left to right; each pivot entry is 1 and every
//!   other row (including other pivots) is zero in that column.
//! * `rows2` holds a reduced echelon basis (over Z2) of the order-two part that
//!   vanishes on the unit pivot columns. Its pivots are searched in quaternary
//!   columns first (pivot entry 2), then binary columns (pivot entry 1).
//! * Order-four rows are reduced against `rows2`: their entries on quaternary
//!   2-pivot columns lie in {0, 1} and on binary pivot columns are 0.

use std::fmt;

use crate::error::{Error, Result};

/// The ambient split: `alpha` binary and `beta` quaternary coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    pub alpha: usize,
    pub beta: usize,
}

impl Shape {
    pub const fn new(alpha: usize, beta: usize) -> Self {
        Shape { alpha, beta }
    }

    /// Number of coordinates, α + β.
    pub fn len(&self) -> usize {
        self.alpha + self.beta
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Binary length of the Gray image, α + 2β.
    pub fn binary_length(&self) -> usize {
        self.alpha + 2 * self.beta
    }

    pub fn check(&self, other: Shape) -> Result<()> {
        if *self == other {
            Ok(())
        } else {
            Err(Error::ShapeMismatch {
                expected: *self,
                found: other,
            })
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.alpha, self.beta)
    }
}

/// An element of Z2^α × Z4^β. Binary entries are kept in {0,1} and
/// quaternary entries in {0,1,2,3}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MixedVector {
    bin: Vec<u8>,
    quat: Vec<u8>,
}

impl MixedVector {
    pub fn new(bin: Vec<u8>, quat: Vec<u8>) -> Result<Self> {
        if let Some(&value) = bin.iter().find(|&&b| b > 1) {
            return Err(Error::BadEntry {
                value,
                alphabet: "binary",
            });
        }
        if let Some(&value) = quat.iter().find(|&&q| q > 3) {
            return Err(Error::BadEntry {
                value,
                alphabet: "quaternary",
            });
        }
        Ok(MixedVector { bin, quat })
    }

    /// Builds a vector from arbitrary integers, reducing mod 2 and mod 4.
    pub fn from_ints(bin: &[i64], quat: &[i64]) -> Self {
        MixedVector {
            bin: bin.iter().map(|&b| b.rem_euclid(2) as u8).collect(),
            quat: quat.iter().map(|&q| q.rem_euclid(4) as u8).collect(),
        }
    }

    pub(crate) fn from_raw(bin: Vec<u8>, quat: Vec<u8>) -> Self {
        debug_assert!(bin.iter().all(|&b| b < 2) && quat.iter().all(|&q| q < 4));
        MixedVector { bin, quat }
    }

    pub fn zero(shape: Shape) -> Self {
        MixedVector {
            bin: vec![0; shape.alpha],
            quat: vec![0; shape.beta],
        }
    }

    /// The vector (1…1 | 2…2).
    pub fn ones_twos(shape: Shape) -> Self {
        MixedVector {
            bin: vec![1; shape.alpha],
            quat: vec![2; shape.beta],
        }
    }

    pub fn shape(&self) -> Shape {
        Shape::new(self.bin.len(), self.quat.len())
    }

    pub fn alpha(&self) -> usize {
        self.bin.len()
    }

    pub fn beta(&self) -> usize {
        self.quat.len()
    }

    pub fn bin(&self) -> &[u8] {
        &self.bin
    }

    pub fn quat(&self) -> &[u8] {
        &self.quat
    }

    /// Entry at a global 0-based coordinate (binary coordinates first).
    pub fn get(&self, coord: usize) -> u8 {
        if coord < self.bin.len() {
            self.bin[coord]
        } else {
            self.quat[coord - self.bin.len()]
        }
    }

    pub(crate) fn set(&mut self, coord: usize, value: u8) {
        let alpha = self.bin.len();
        if coord < alpha {
            self.bin[coord] = value & 1;
        } else {
            self.quat[coord - alpha] = value & 3;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.bin.iter().all(|&b| b == 0) && self.quat.iter().all(|&q| q == 0)
    }

    pub fn add(&self, other: &MixedVector) -> MixedVector {
        debug_assert_eq!(self.shape(), other.shape());
        MixedVector {
            bin: self.bin.iter().zip(&other.bin).map(|(a, b)| a ^ b).collect(),
            quat: self
                .quat
                .iter()
                .zip(&other.quat)
                .map(|(a, b)| (a + b) & 3)
                .collect(),
        }
    }

    pub fn sub(&self, other: &MixedVector) -> MixedVector {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MixedVector {
        MixedVector {
            bin: self.bin.clone(),
            quat: self.quat.iter().map(|q| (4 - q) & 3).collect(),
        }
    }

    /// Z4 scalar action: `k` acts as `k mod 2` on binary coordinates.
    pub fn scale(&self, k: u8) -> MixedVector {
        MixedVector {
            bin: self.bin.iter().map(|b| (b * k) & 1).collect(),
            quat: self.quat.iter().map(|q| (q * k) & 3).collect(),
        }
    }

    fn add_scaled_assign(&mut self, other: &MixedVector, k: u8) {
        let k = k & 3;
        if k == 0 {
            return;
        }
        if k & 1 == 1 {
            for (a, b) in self.bin.iter_mut().zip(&other.bin) {
                *a ^= b;
            }
        }
        for (a, b) in self.quat.iter_mut().zip(&other.quat) {
            *a = (*a + k * b) & 3;
        }
    }

    /// Smallest k in {1, 2, 4} with k·v = 0.
    pub fn order(&self) -> u8 {
        element_order(self)
    }

    /// Concatenation of the binary part and the quaternary part, each entry
    /// as a small integer. Used for display and sorting.
    pub fn entries(&self) -> impl Iterator<Item = u8> + '_ {
        self.bin.iter().chain(self.quat.iter()).copied()
    }
}

impl fmt::Display for MixedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bin {
            write!(f, "{b}")?;
        }
        if !self.bin.is_empty() && !self.quat.is_empty() {
            write!(f, "|")?;
        }
        for q in &self.quat {
            write!(f, "{q}")?;
        }
        Ok(())
    }
}

pub fn element_order(v: &MixedVector) -> u8 {
    if v.quat.iter().any(|q| q & 1 == 1) {
        4
    } else if v.is_zero() {
        1
    } else {
        2
    }
}

/// An ordered list of rows sharing one shape; a generator or parity-check
/// matrix. Rows may be dependent or zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MixedMatrix {
    shape: Shape,
    rows: Vec<MixedVector>,
}

impl MixedMatrix {
    pub fn new(shape: Shape, rows: Vec<MixedVector>) -> Result<Self> {
        for row in &rows {
            shape.check(row.shape())?;
        }
        Ok(MixedMatrix { shape, rows })
    }

    pub fn empty(shape: Shape) -> Self {
        MixedMatrix {
            shape,
            rows: Vec::new(),
        }
    }

    /// Builds a matrix from per-row integer slices (binary part, quaternary
    /// part). Entries are reduced mod 2 / mod 4.
    pub fn from_rows(shape: Shape, rows: &[(&[i64], &[i64])]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|(b, q)| MixedVector::from_ints(b, q))
            .collect();
        MixedMatrix::new(shape, rows)
    }

    /// Quaternary-only matrix from rows of Z4 entries.
    pub fn quaternary(rows: &[&[u8]]) -> Result<Self> {
        let beta = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| MixedVector::new(Vec::new(), r.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        MixedMatrix::new(Shape::new(0, beta), rows)
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn rows(&self) -> &[MixedVector] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<MixedVector> {
        self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn push(&mut self, row: MixedVector) -> Result<()> {
        self.shape.check(row.shape())?;
        self.rows.push(row);
        Ok(())
    }

    /// Vertical stacking `self ∥ other`.
    pub fn stack(&self, other: &MixedMatrix) -> Result<MixedMatrix> {
        self.shape.check(other.shape)?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(MixedMatrix {
            shape: self.shape,
            rows,
        })
    }
}

/// A pivot of an order-two row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pivot2 {
    /// Quaternary column (local index) holding a 2.
    Quat(usize),
    /// Binary column (local index) holding a 1.
    Bin(usize),
}

/// Canonical generators of a subgroup, as produced by [`standard_reduce`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardForm {
    pub shape: Shape,
    /// Order-four generators, ordered by pivot column.
    pub rows4: Vec<MixedVector>,
    /// Quaternary pivot column of each row of `rows4`.
    pub pivots4: Vec<usize>,
    /// Order-two generators, in pivot scan order.
    pub rows2: Vec<MixedVector>,
    pub pivots2: Vec<Pivot2>,
}

impl StandardForm {
    pub fn gamma(&self) -> usize {
        self.rows2.len()
    }

    pub fn delta(&self) -> usize {
        self.rows4.len()
    }

    /// κ: the Z2-rank of the binary restriction of the order-two subcode.
    /// The doubled order-four rows vanish on binary coordinates, so only
    /// `rows2` contributes.
    pub fn kappa(&self) -> usize {
        if self.shape.alpha == 0 {
            return 0;
        }
        z2_rank(self.rows2.iter().map(|r| r.bin().to_vec()).collect())
    }

    pub fn code_type(&self) -> CodeType {
        CodeType {
            alpha: self.shape.alpha,
            beta: self.shape.beta,
            gamma: self.gamma(),
            delta: self.delta(),
            kappa: self.kappa(),
        }
    }

    /// All generators, order-four rows first.
    pub fn matrix(&self) -> MixedMatrix {
        let mut rows = self.rows4.clone();
        rows.extend(self.rows2.iter().cloned());
        MixedMatrix {
            shape: self.shape,
            rows,
        }
    }

    /// Reduces `v` against the canonical pivots. The remainder is zero
    /// exactly when `v` lies in the generated subgroup.
    pub fn remainder(&self, v: &MixedVector) -> MixedVector {
        let mut r = v.clone();
        for (p, &c) in self.rows4.iter().zip(&self.pivots4) {
            let e = r.quat[c];
            if e != 0 {
                r.add_scaled_assign(p, 4 - e);
            }
        }
        if r.quat.iter().any(|q| q & 1 == 1) {
            return r;
        }
        for (p, pivot) in self.rows2.iter().zip(&self.pivots2) {
            let hit = match *pivot {
                Pivot2::Quat(c) => r.quat[c] == 2,
                Pivot2::Bin(c) => r.bin[c] == 1,
            };
            if hit {
                r.add_scaled_assign(p, 1);
            }
        }
        r
    }

    pub fn contains(&self, v: &MixedVector) -> bool {
        self.remainder(v).is_zero()
    }

    /// log2 of the number of codewords, γ + 2δ.
    pub fn log2_size(&self) -> usize {
        self.gamma() + 2 * self.delta()
    }
}

/// Reduces the rows of `m` to the canonical generators of the subgroup they
/// generate. Zero and dependent rows disappear.
pub fn standard_reduce(m: &MixedMatrix) -> StandardForm {
    let shape = m.shape;
    let mut free: Vec<MixedVector> = m.rows.iter().filter(|r| !r.is_zero()).cloned().collect();
    let mut rows4: Vec<MixedVector> = Vec::new();
    let mut pivots4: Vec<usize> = Vec::new();

    for c in 0..shape.beta {
        let Some(idx) = free.iter().position(|r| r.quat[c] & 1 == 1) else {
            continue;
        };
        let mut p = free.swap_remove(idx);
        if p.quat[c] == 3 {
            p = p.neg();
        }
        for r in free.iter_mut().chain(rows4.iter_mut()) {
            let e = r.quat[c];
            if e != 0 {
                r.add_scaled_assign(&p, 4 - e);
            }
        }
        rows4.push(p);
        pivots4.push(c);
    }

    // Everything left has even quaternary entries: a Z2 space.
    free.retain(|r| !r.is_zero());
    let mut rows2: Vec<MixedVector> = Vec::new();
    let mut pivots2: Vec<Pivot2> = Vec::new();
    let columns = (0..shape.beta)
        .map(Pivot2::Quat)
        .chain((0..shape.alpha).map(Pivot2::Bin));
    for pivot in columns {
        let hit = |r: &MixedVector| match pivot {
            Pivot2::Quat(c) => r.quat[c] == 2,
            Pivot2::Bin(c) => r.bin[c] == 1,
        };
        let Some(idx) = free.iter().position(hit) else {
            continue;
        };
        let p = free.swap_remove(idx);
        for r in free.iter_mut().chain(rows2.iter_mut()) {
            if hit(r) {
                r.add_scaled_assign(&p, 1);
            }
        }
        rows2.push(p);
        pivots2.push(pivot);
    }

    for (p, pivot) in rows2.iter().zip(&pivots2) {
        for q in rows4.iter_mut() {
            let hit = match *pivot {
                Pivot2::Quat(c) => q.quat[c] >= 2,
                Pivot2::Bin(c) => q.bin[c] == 1,
            };
            if hit {
                q.add_scaled_assign(p, 1);
            }
        }
    }

    StandardForm {
        shape,
        rows4,
        pivots4,
        rows2,
        pivots2,
    }
}

/// Type (α,β;γ,δ;κ) of the code generated by the rows of `m`.
pub fn compute_type(m: &MixedMatrix) -> CodeType {
    standard_reduce(m).code_type()
}

/// Rank over Z2 of a list of 0/1 vectors of equal length.
pub(crate) fn z2_rank(mut rows: Vec<Vec<u8>>) -> usize {
    let width = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..width {
        let Some(idx) = (rank..rows.len()).find(|&i| rows[i][c] == 1) else {
            continue;
        };
        rows.swap(rank, idx);
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[c] == 1 {
                for (a, b) in row.iter_mut().zip(&pivot) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// The group-structure parameters (α,β;γ,δ;κ) of an additive code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CodeType {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub delta: usize,
    pub kappa: usize,
}

impl CodeType {
    pub fn new(alpha: usize, beta: usize, gamma: usize, delta: usize, kappa: usize) -> Result<Self> {
        let t = CodeType {
            alpha,
            beta,
            gamma,
            delta,
            kappa,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn shape(&self) -> Shape {
        Shape::new(self.alpha, self.beta)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidType(msg));
        if self.kappa > self.gamma.min(self.alpha) {
            return bad(format!("kappa {} exceeds min(gamma, alpha)", self.kappa));
        }
        if self.delta > self.beta {
            return bad(format!("delta {} exceeds beta {}", self.delta, self.beta));
        }
        if self.gamma + self.delta > self.alpha + self.beta {
            return bad("gamma + delta exceeds alpha + beta".into());
        }
        if self.gamma + 2 * self.delta > self.alpha + 2 * self.beta {
            return bad("cardinality exceeds the ambient space".into());
        }
        // The order-two rows that are zero on the binary part live in the
        // quaternary order-two space, whose rank is bounded by beta - delta.
        if self.gamma - self.kappa + self.delta > self.beta {
            return bad("gamma - kappa + delta exceeds beta".into());
        }
        Ok(())
    }

    /// log2 |C| = γ + 2δ.
    pub fn log2_size(&self) -> usize {
        self.gamma + 2 * self.delta
    }
}

impl fmt::Display for CodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{};{},{};{})",
            self.alpha, self.beta, self.gamma, self.delta, self.kappa
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[u8]]) -> MixedMatrix {
        MixedMatrix::quaternary(rows).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(element_order(&MixedVector::zero(Shape::new(3, 2))), 1);
        let v = MixedVector::new(vec![1, 0], vec![2, 0]).unwrap();
        assert_eq!(element_order(&v), 2);
        let w = MixedVector::new(vec![], vec![0, 1, 2, 3]).unwrap();
        assert_eq!(element_order(&w), 4);
    }

    #[test]
    fn rejects_bad_entries() {
        assert!(MixedVector::new(vec![2], vec![]).is_err());
        assert!(MixedVector::new(vec![], vec![4]).is_err());
    }

    #[test]
    fn reduce_quaternary_examples() {
        let f = standard_reduce(&q(&[&[1, 1, 1, 1], &[0, 1, 2, 3]]));
        assert_eq!((f.gamma(), f.delta()), (0, 2));
        let f = standard_reduce(&q(&[&[0, 0, 2, 2], &[0, 2, 0, 2], &[1, 1, 1, 1]]));
        assert_eq!((f.gamma(), f.delta()), (2, 1));
    }

    #[test]
    fn duplicate_rows_collapse() {
        let v = MixedVector::new(vec![1, 0], vec![2, 1]).unwrap();
        let m = MixedMatrix::new(Shape::new(2, 2), vec![v.clone(), v.clone()]).unwrap();
        let f = standard_reduce(&m);
        assert_eq!(f.rows4, vec![v]);
        assert!(f.rows2.is_empty());

        let w = MixedVector::new(vec![1, 0], vec![2, 0]).unwrap();
        let m = MixedMatrix::new(Shape::new(2, 2), vec![w.clone(), w.clone()]).unwrap();
        let f = standard_reduce(&m);
        assert_eq!(f.rows2, vec![w]);
        assert!(f.rows4.is_empty());
    }

    #[test]
    fn additive_example_type() {
        let m = MixedMatrix::from_rows(
            Shape::new(4, 2),
            &[
                (&[1, 1, 1, 1], &[2, 2]),
                (&[0, 0, 1, 1], &[0, 2]),
                (&[0, 1, 0, 1], &[1, 1]),
            ],
        )
        .unwrap();
        assert_eq!(compute_type(&m), CodeType::new(4, 2, 2, 1, 2).unwrap());
    }

    #[test]
    fn empty_matrix_type() {
        let t = compute_type(&MixedMatrix::empty(Shape::new(3, 2)));
        assert_eq!(t, CodeType::new(3, 2, 0, 0, 0).unwrap());
    }

    #[test]
    fn quaternary_kappa_is_zero() {
        let t = compute_type(&q(&[&[2, 2, 0], &[1, 0, 3]]));
        assert_eq!(t.kappa, 0);
    }

    #[test]
    fn canonical_form_ignores_generator_choice() {
        let a = q(&[&[1, 1, 1, 1], &[0, 1, 2, 3]]);
        let b = q(&[&[1, 2, 3, 0], &[3, 3, 3, 3], &[2, 0, 2, 0]]);
        assert_eq!(standard_reduce(&a), standard_reduce(&b));
    }

    #[test]
    fn membership_by_remainder() {
        let f = standard_reduce(&q(&[&[0, 1, 2, 3]]));
        assert!(f.contains(&MixedVector::new(vec![], vec![0, 3, 2, 1]).unwrap()));
        assert!(f.contains(&MixedVector::new(vec![], vec![0, 2, 0, 2]).unwrap()));
        assert!(!f.contains(&MixedVector::new(vec![], vec![0, 2, 2, 2]).unwrap()));
    }

    #[test]
    fn type_validation() {
        assert!(CodeType::new(0, 4, 2, 1, 0).is_ok());
        assert!(CodeType::new(2, 1, 1, 2, 0).is_err());
        assert!(CodeType::new(1, 1, 1, 0, 2).is_err());
    }
}
