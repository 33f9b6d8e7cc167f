//! Parity-check matrices of Hamming, perfect and extended perfect codes,
//! the recursive doubling/quadrupling constructions, and a registry of
//! fixed reference matrices.

use crate::algebra::{MixedMatrix, MixedVector, Shape};
use crate::code::{extend_parity, Monomial};
use crate::error::{Error, Result};

fn bits_msb(value: usize, width: usize) -> impl Iterator<Item = u8> {
    (0..width).rev().map(move |k| ((value >> k) & 1) as u8)
}

/// Builds a matrix from its columns.
fn from_columns(shape: Shape, rows: usize, bin_cols: &[Vec<u8>], quat_cols: &[Vec<u8>]) -> MixedMatrix {
    let out = (0..rows)
        .map(|i| {
            let bin = bin_cols.iter().map(|c| c[i]).collect();
            let quat = quat_cols.iter().map(|c| c[i]).collect();
            MixedVector::from_raw(bin, quat)
        })
        .collect();
    MixedMatrix::new(shape, out).expect("shape")
}

/// t × (2^t − 1) binary matrix whose columns are the nonzero vectors of
/// Z2^t in lexicographic order.
pub fn hamming_parity(t: usize) -> Result<MixedMatrix> {
    if !(2..=20).contains(&t) {
        return Err(Error::OutOfRange(format!("hamming needs 2 <= t <= 20, got {t}")));
    }
    let n = (1 << t) - 1;
    let cols: Vec<Vec<u8>> = (1..=n).map(|c| bits_msb(c, t).collect()).collect();
    Ok(from_columns(Shape::new(n, 0), t, &cols, &[]))
}

/// (t+1) × 2^t binary matrix: an all-ones row over the columns of
/// `hamming_parity(t)` with a zero column prepended.
pub fn extended_hamming_parity(t: usize) -> Result<MixedMatrix> {
    if !(1..=20).contains(&t) {
        return Err(Error::OutOfRange(format!("extended hamming needs 1 <= t <= 20, got {t}")));
    }
    let n = 1 << t;
    let cols: Vec<Vec<u8>> = (0..n).map(|c| std::iter::once(1).chain(bits_msb(c, t)).collect()).collect();
    Ok(from_columns(Shape::new(n, 0), t + 1, &cols, &[]))
}

/// Dual of the extended perfect Z4-linear code of binary length 2^t with δ
/// order-four generators: γ = t+1−2δ rows of order two, then δ rows of
/// order four, the first of which is all ones. Columns are the vectors
/// (2a | 1, q), a ∈ Z2^γ, q ∈ Z4^(δ−1), in lexicographic order.
///
/// t = 3 is accepted although it is below the range where these codes are
/// pairwise non-isomorphic.
pub fn extended_perfect_z4_dual(t: usize, delta: usize) -> Result<MixedMatrix> {
    if !(3..=12).contains(&t) || delta == 0 || delta > (t + 1) / 2 {
        return Err(Error::OutOfRange(format!(
            "extended perfect Z4 code needs 3 <= t <= 12 and 1 <= delta <= (t+1)/2, got t={t}, delta={delta}"
        )));
    }
    let gamma = t + 1 - 2 * delta;
    let beta = 1 << (t - 1);
    let cols: Vec<Vec<u8>> = (0..beta)
        .map(|c| {
            let q = c & ((1 << (2 * (delta - 1))) - 1);
            let a = c >> (2 * (delta - 1));
            let mut col: Vec<u8> = bits_msb(a, gamma).map(|b| 2 * b).collect();
            col.push(1);
            col.extend((0..delta - 1).rev().map(|k| ((q >> (2 * k)) & 3) as u8));
            col
        })
        .collect();
    Ok(from_columns(Shape::new(0, beta), gamma + delta, &[], &cols))
}

fn check_tr(t: usize, r: usize) -> Result<()> {
    if r < 2 || r > t || t > 2 * r || t > 12 {
        return Err(Error::OutOfRange(format!("need 2 <= r <= t <= 2r and t <= 12, got t={t}, r={r}")));
    }
    Ok(())
}

/// Dual of the perfect Z2Z4-linear code of binary length 2^t − 1 with
/// α = 2^r − 1: γ = 2r−t rows of order two, then δ = t−r rows of order four.
/// Binary columns are the nonzero vectors of Z2^(γ+δ); quaternary columns
/// are the order-four vectors of {0,2}^γ × Z4^δ taken up to sign, each
/// represented with its first odd entry equal to 1. Both in lexicographic
/// order.
pub fn perfect_z2z4_dual(t: usize, r: usize) -> Result<MixedMatrix> {
    check_tr(t, r)?;
    let gamma = 2 * r - t;
    let delta = t - r;
    let alpha = (1 << r) - 1;
    let bin_cols: Vec<Vec<u8>> = (1..=alpha).map(|c| bits_msb(c, r).collect()).collect();
    let mut quat_cols = Vec::new();
    for a in 0..1usize << gamma {
        for q in 0..1usize << (2 * delta) {
            let v: Vec<u8> = (0..delta).rev().map(|k| ((q >> (2 * k)) & 3) as u8).collect();
            if v.iter().find(|&&x| x % 2 == 1) != Some(&1) {
                continue;
            }
            let mut col: Vec<u8> = bits_msb(a, gamma).map(|b| 2 * b).collect();
            col.extend(v);
            quat_cols.push(col);
        }
    }
    let beta = quat_cols.len();
    debug_assert_eq!(beta, (1 << (t - 1)) - (1 << (r - 1)));
    Ok(from_columns(Shape::new(alpha, beta), r, &bin_cols, &quat_cols))
}

/// Dual of the extended perfect Z2Z4-linear code: [`perfect_z2z4_dual`]
/// with a parity coordinate in front.
pub fn extended_perfect_z2z4_dual(t: usize, r: usize) -> Result<MixedMatrix> {
    Ok(extend_parity(&perfect_z2z4_dual(t, r)?))
}

/// A monomial used in a recursive construction together with the change
/// it causes in the dual type (γ, δ, κ) of the intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaMove {
    pub monomial: Monomial,
    pub gamma_step: usize,
    pub delta_step: usize,
    pub kappa_step: usize,
}

fn lemma_move(shape: Shape, cycles: &[Vec<usize>], steps: (usize, usize, usize)) -> LemmaMove {
    LemmaMove {
        monomial: Monomial::from_cycles(shape, cycles, &[]).expect("valid cycles"),
        gamma_step: steps.0,
        delta_step: steps.1,
        kappa_step: steps.2,
    }
}

fn require_quaternary(h: &MixedMatrix) -> Result<()> {
    if h.shape().alpha != 0 {
        return Err(Error::Precondition("matrix must be quaternary (alpha = 0)".into()));
    }
    Ok(())
}

fn require_additive(h: &MixedMatrix) -> Result<()> {
    if h.shape().alpha == 0 {
        return Err(Error::Precondition("matrix must have binary coordinates".into()));
    }
    Ok(())
}

fn concat(parts: &[(&[u8], &[u8])]) -> MixedVector {
    let mut bin = Vec::new();
    let mut quat = Vec::new();
    for (b, q) in parts {
        bin.extend_from_slice(b);
        quat.extend_from_slice(q);
    }
    MixedVector::from_raw(bin, quat)
}

/// [0…0 2…2 ; H H]. Dual type (0,β;γ,δ) becomes (0,2β;γ+1,δ).
pub fn double_quaternary(h: &MixedMatrix) -> Result<MixedMatrix> {
    require_quaternary(h)?;
    let b = h.shape().beta;
    let mut rows = vec![concat(&[(&[], &vec![0; b]), (&[], &vec![2; b])])];
    for r in h.rows() {
        rows.push(concat(&[(&[], r.quat()), (&[], r.quat())]));
    }
    MixedMatrix::new(Shape::new(0, 2 * b), rows)
}

/// Permutations for [`double_quaternary`] codes: Id and (1, β+1).
pub fn double_quaternary_moves(beta: usize) -> Vec<LemmaMove> {
    let s = Shape::new(0, 2 * beta);
    vec![lemma_move(s, &[], (1, 0, 0)), lemma_move(s, &[vec![1, beta + 1]], (2, 0, 0))]
}

/// [H H H H ; 0…0 1…1 2…2 3…3]. Dual type (0,β;γ,δ) becomes (0,4β;γ,δ+1).
pub fn quadruple_quaternary(h: &MixedMatrix) -> Result<MixedMatrix> {
    require_quaternary(h)?;
    let b = h.shape().beta;
    let mut rows: Vec<MixedVector> = h
        .rows()
        .iter()
        .map(|r| concat(&[(&[], r.quat()), (&[], r.quat()), (&[], r.quat()), (&[], r.quat())]))
        .collect();
    let tail: Vec<u8> = (0..4u8).flat_map(|k| std::iter::repeat(k).take(b)).collect();
    rows.push(MixedVector::from_raw(Vec::new(), tail));
    MixedMatrix::new(Shape::new(0, 4 * b), rows)
}

/// Permutations for [`quadruple_quaternary`] codes: Id, (1, β+1), (1, 2β+1).
pub fn quadruple_quaternary_moves(beta: usize) -> Vec<LemmaMove> {
    let s = Shape::new(0, 4 * beta);
    vec![
        lemma_move(s, &[], (0, 1, 0)),
        lemma_move(s, &[vec![1, beta + 1]], (0, 2, 0)),
        lemma_move(s, &[vec![1, 2 * beta + 1]], (1, 1, 0)),
    ]
}

/// [0…0 1…1 | 0…0 2…2 ; Hα Hα | Hβ Hβ]. Dual type (α,β;γ,δ) becomes
/// (2α,2β;γ+1,δ).
pub fn double_additive(h: &MixedMatrix) -> Result<MixedMatrix> {
    require_additive(h)?;
    let Shape { alpha: a, beta: b } = h.shape();
    let mut rows = vec![concat(&[(&vec![0; a], &vec![0; b]), (&vec![1; a], &vec![2; b])])];
    for r in h.rows() {
        rows.push(concat(&[(r.bin(), r.quat()), (r.bin(), r.quat())]));
    }
    MixedMatrix::new(Shape::new(2 * a, 2 * b), rows)
}

/// Permutations for [`double_additive`] codes: Id, (1, α+1) and
/// (2α+1, 2α+β+1).
pub fn double_additive_moves(alpha: usize, beta: usize) -> Vec<LemmaMove> {
    let s = Shape::new(2 * alpha, 2 * beta);
    vec![
        lemma_move(s, &[], (1, 0, 1)),
        lemma_move(s, &[vec![1, alpha + 1]], (2, 0, 2)),
        lemma_move(s, &[vec![2 * alpha + 1, 2 * alpha + beta + 1]], (2, 0, 1)),
    ]
}

/// [Hα Hα | 2Hα Hβ Hβ Hβ Hβ ; 0…0 1…1 | 1…1 0…0 1…1 2…2 3…3]. Requires the
/// first row of H to be (1…1 | 2…2) and γ = 1. Dual type (α,β;1,δ) becomes
/// (2α, α+4β; 1, δ+1).
pub fn quadruple_additive(h: &MixedMatrix) -> Result<MixedMatrix> {
    require_additive(h)?;
    let shape = h.shape();
    if h.rows().first() != Some(&MixedVector::ones_twos(shape)) {
        return Err(Error::Precondition("first row must be (1..1|2..2)".into()));
    }
    let t = crate::algebra::compute_type(h);
    if t.gamma != 1 {
        return Err(Error::Precondition(format!("dual type {t} must have gamma = 1")));
    }
    let Shape { alpha: a, beta: b } = shape;
    let mut rows = Vec::new();
    for r in h.rows() {
        let doubled: Vec<u8> = r.bin().iter().map(|&x| 2 * x).collect();
        let mut quat = doubled;
        for _ in 0..4 {
            quat.extend_from_slice(r.quat());
        }
        let mut bin = r.bin().to_vec();
        bin.extend_from_slice(r.bin());
        rows.push(MixedVector::from_raw(bin, quat));
    }
    let mut bin = vec![0; a];
    bin.extend(std::iter::repeat(1).take(a));
    let mut quat = vec![1; a];
    quat.extend((0..4u8).flat_map(|k| std::iter::repeat(k).take(b)));
    rows.push(MixedVector::from_raw(bin, quat));
    MixedMatrix::new(Shape::new(2 * a, a + 4 * b), rows)
}

/// Permutations for [`quadruple_additive`] codes: Id, (2α+1, 3α+β+1),
/// (3α+1, 3α+2β+1) and (1, α+1).
pub fn quadruple_additive_moves(alpha: usize, beta: usize) -> Vec<LemmaMove> {
    let s = Shape::new(2 * alpha, alpha + 4 * beta);
    let a = alpha;
    vec![
        lemma_move(s, &[], (0, 1, 0)),
        lemma_move(s, &[vec![2 * a + 1, 3 * a + beta + 1]], (0, 2, 0)),
        lemma_move(s, &[vec![3 * a + 1, 3 * a + 2 * beta + 1]], (1, 1, 0)),
        lemma_move(s, &[vec![1, a + 1]], (1, 1, 1)),
    ]
}

/// Parity-check matrices of two quaternary extended perfect codes of length
/// 4^m with dual types (0,4^m;0,m+1) and (0,4^m;2m,1), and transpositions
/// σ1..σm such that π_i = σ1∘…∘σi gives an intersection of dual type
/// (0,4^m;m+i,m+1).
#[derive(Clone, Debug)]
pub struct LexPair {
    pub h1: MixedMatrix,
    pub h2: MixedMatrix,
    pub sigmas: Vec<Monomial>,
}

impl LexPair {
    /// π_i = σ1∘…∘σi; π_0 is the identity.
    pub fn pi(&self, i: usize) -> Monomial {
        let mut m = Monomial::identity(self.h1.shape());
        for s in &self.sigmas[..i] {
            m = m.compose(s).expect("same shape");
        }
        m
    }
}

pub fn lemma_lex_pair(m: usize) -> Result<LexPair> {
    if !(2..=5).contains(&m) {
        return Err(Error::OutOfRange(format!("lexicographic pair needs 2 <= m <= 5, got {m}")));
    }
    let beta = 1usize << (2 * m);
    let shape = Shape::new(0, beta);
    let mut rows1 = vec![MixedVector::from_raw(Vec::new(), vec![1; beta])];
    for i in 0..m {
        let shift = 2 * (m - 1 - i);
        rows1.push(MixedVector::from_raw(Vec::new(), (0..beta).map(|c| ((c >> shift) & 3) as u8).collect()));
    }
    let ext = extended_hamming_parity(2 * m)?;
    let mut rows2: Vec<MixedVector> = ext.rows()[1..]
        .iter()
        .map(|r| MixedVector::from_raw(Vec::new(), r.bin().iter().map(|&x| 2 * x).collect()))
        .collect();
    rows2.push(MixedVector::from_raw(Vec::new(), vec![1; beta]));
    // σ_i swaps the columns whose only nonzero digit is the i-th one,
    // equal to 2 and to 3.
    let sigmas = (1..=m)
        .map(|i| {
            let unit = 1usize << (2 * (m - i));
            Monomial::from_cycles(shape, &[vec![2 * unit + 1, 3 * unit + 1]], &[])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LexPair {
        h1: MixedMatrix::new(shape, rows1)?,
        h2: MixedMatrix::new(shape, rows2)?,
        sigmas,
    })
}

/// Names accepted by [`paper_matrix`].
pub const REGISTRY: &[&str] = &[
    "ex1-perfect",
    "ex1-extended",
    "ex2",
    "qlpc-t3-H1",
    "qlpc-t3-H2",
    "exbeta4-pi12",
    "sec32-t4-H2",
    "sec32-H1",
    "sec32-H2",
    "sec4-ex-H2",
    "sec4-lemma17-H1",
];

fn digits(s: &str) -> Vec<i64> {
    s.bytes().map(|b| (b - b'0') as i64).collect()
}

fn build(alpha: usize, beta: usize, rows: &[&str]) -> MixedMatrix {
    let parsed: Vec<(Vec<i64>, Vec<i64>)> = rows
        .iter()
        .map(|r| {
            let d = digits(r);
            (d[..alpha].to_vec(), d[alpha..].to_vec())
        })
        .collect();
    let refs: Vec<(&[i64], &[i64])> = parsed.iter().map(|(b, q)| (b.as_slice(), q.as_slice())).collect();
    MixedMatrix::from_rows(Shape::new(alpha, beta), &refs).expect("registry matrix")
}

/// Reference matrices, entry for entry.
pub fn paper_matrix(name: &str) -> Result<MixedMatrix> {
    let m = match name {
        "ex1-perfect" => build(7, 4, &["00011110022", "01100110202", "10101011111"]),
        "ex1-extended" => build(8, 4, &["111111112222", "000011110022", "001100110202", "010101011111"]),
        "ex2" | "sec32-H1" => build(
            0,
            16,
            &["0000000022222222", "0000222200002222", "1111111111111111", "0123012301230123"],
        ),
        "qlpc-t3-H1" => build(0, 4, &["0022", "0202", "1111"]),
        "qlpc-t3-H2" => build(0, 4, &["1111", "0123"]),
        "exbeta4-pi12" => build(0, 4, &["1111", "0123", "1023"]),
        "sec32-t4-H2" => build(0, 8, &["00002222", "11111111", "01230123"]),
        "sec32-H2" => build(0, 16, &["1111111111111111", "0000111122223333", "0123012301230123"]),
        "sec4-ex-H2" => build(4, 2, &["111122", "001102", "010111"]),
        "sec4-lemma17-H1" => build(4, 6, &["1111222222", "0011111102", "0101012311"]),
        _ => return Err(Error::UnknownMatrix(name.to_string())),
    };
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::compute_type;
    use crate::code::AdditiveCode;

    fn gd(m: &MixedMatrix) -> (usize, usize, usize, usize) {
        let t = compute_type(m);
        (t.alpha, t.beta, t.gamma, t.delta)
    }

    #[test]
    fn hamming_shapes() {
        let h = hamming_parity(3).unwrap();
        assert_eq!(h.shape(), Shape::new(7, 0));
        assert_eq!(h.rows()[2].bin(), &[1, 0, 1, 0, 1, 0, 1]);
        let e = extended_hamming_parity(3).unwrap();
        assert_eq!(e.shape(), Shape::new(8, 0));
        assert_eq!(e.len(), 4);
        assert!(e.rows()[0].bin().iter().all(|&b| b == 1));
        assert!(hamming_parity(1).is_err());
    }

    #[test]
    fn z4_matches_example_two() {
        assert_eq!(extended_perfect_z4_dual(5, 2).unwrap(), paper_matrix("ex2").unwrap());
        assert_eq!(extended_perfect_z4_dual(3, 1).unwrap(), paper_matrix("qlpc-t3-H1").unwrap());
        assert_eq!(extended_perfect_z4_dual(3, 2).unwrap(), paper_matrix("qlpc-t3-H2").unwrap());
        assert!(extended_perfect_z4_dual(5, 4).is_err());
        assert!(extended_perfect_z4_dual(4, 0).is_err());
    }

    #[test]
    fn z2z4_matches_example_one() {
        assert_eq!(perfect_z2z4_dual(4, 3).unwrap(), paper_matrix("ex1-perfect").unwrap());
        assert_eq!(extended_perfect_z2z4_dual(4, 3).unwrap(), paper_matrix("ex1-extended").unwrap());
        assert_eq!(perfect_z2z4_dual(4, 2).unwrap().shape(), Shape::new(3, 6));
        assert_eq!(perfect_z2z4_dual(4, 4).unwrap().shape(), Shape::new(15, 0));
        assert!(perfect_z2z4_dual(5, 2).is_err());
    }

    #[test]
    fn builder_types() {
        for t in 3..=6 {
            for d in 1..=(t + 1) / 2 {
                let h = extended_perfect_z4_dual(t, d).unwrap();
                assert_eq!(gd(&h), (0, 1 << (t - 1), t + 1 - 2 * d, d));
            }
            for r in 2..=t {
                if t <= 2 * r {
                    let h = perfect_z2z4_dual(t, r).unwrap();
                    assert_eq!(gd(&h), ((1 << r) - 1, (1 << (t - 1)) - (1 << (r - 1)), 2 * r - t, t - r));
                }
            }
        }
    }

    #[test]
    fn doubling_types() {
        let h = paper_matrix("qlpc-t3-H2").unwrap();
        assert_eq!(gd(&double_quaternary(&h).unwrap()), (0, 8, 1, 2));
        assert_eq!(gd(&quadruple_quaternary(&h).unwrap()), (0, 16, 0, 3));
        let a = paper_matrix("sec4-ex-H2").unwrap();
        assert_eq!(gd(&double_additive(&a).unwrap()), (8, 4, 3, 1));
        let l = paper_matrix("sec4-lemma17-H1").unwrap();
        let q = quadruple_additive(&l).unwrap();
        assert_eq!(gd(&q), (8, 28, 1, 3));
        assert_eq!(q.shape().binary_length(), 64);
        assert!(double_quaternary(&a).is_err());
        assert!(quadruple_additive(&a).is_err());
    }

    #[test]
    fn lex_pair_types() {
        let p = lemma_lex_pair(2).unwrap();
        assert_eq!(gd(&p.h1), (0, 16, 0, 3));
        assert_eq!(gd(&p.h2), (0, 16, 4, 1));
        assert_eq!(AdditiveCode::new(&p.h2), AdditiveCode::new(&extended_perfect_z4_dual(5, 1).unwrap()));
    }

    #[test]
    fn registry_lookup() {
        for name in REGISTRY {
            paper_matrix(name).unwrap();
        }
        assert_eq!(paper_matrix("ex1-extended").unwrap().len(), 4);
        assert!(matches!(paper_matrix("nope"), Err(Error::UnknownMatrix(_))));
    }
}
