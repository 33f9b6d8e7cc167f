//! Mixed inner product and dual codes.

use crate::algebra::{standard_reduce, CodeType, MixedMatrix, MixedVector, Pivot2, Shape};
use crate::code::AdditiveCode;
use crate::error::{Error, Result};

/// ⟨u, v⟩ = 2·Σ uᵢvᵢ (binary) + Σ uⱼvⱼ (quaternary), in Z4.
pub fn inner_product(u: &MixedVector, v: &MixedVector) -> Result<u8> {
    u.shape().check(v.shape())?;
    Ok(inner_unchecked(u, v))
}

pub(crate) fn inner_unchecked(u: &MixedVector, v: &MixedVector) -> u8 {
    let b: u32 = u.bin().iter().zip(v.bin()).map(|(&x, &y)| (x & y) as u32).sum();
    let q: u32 = u.quat().iter().zip(v.quat()).map(|(&x, &y)| x as u32 * y as u32).sum();
    ((2 * b + q) % 4) as u8
}

/// The annihilator of `code` under [`inner_product`].
///
/// Binary coordinates are embedded as even Z4 coordinates, the annihilator
/// of the resulting quaternary code is solved by back-substitution on its
/// canonical pivots, and binary coordinates are reduced mod 2 again.
pub fn dual(code: &AdditiveCode) -> AdditiveCode {
    let shape = code.shape();
    let n = shape.len();
    let wide = Shape::new(0, n);
    let doubled: Vec<MixedVector> = code
        .gens()
        .rows()
        .iter()
        .map(|r| {
            let q = r.bin().iter().map(|&b| 2 * b).chain(r.quat().iter().copied()).collect();
            MixedVector::from_raw(Vec::new(), q)
        })
        .collect();
    let form = standard_reduce(&MixedMatrix::new(wide, doubled).expect("shape"));

    let mut is_unit_pivot = vec![false; n];
    for &p in &form.pivots4 {
        is_unit_pivot[p] = true;
    }
    let mut two_pivot_row = vec![None; n];
    for (j, p) in form.pivots2.iter().enumerate() {
        if let Pivot2::Quat(c) = *p {
            two_pivot_row[c] = Some(j);
        }
    }

    // h is fixed on free columns and 2-pivot columns; unit-pivot entries
    // are then forced by the order-four rows.
    let finish = |mut h: Vec<u8>| -> MixedVector {
        for (row, &p) in form.rows4.iter().zip(&form.pivots4) {
            let s: u32 = (0..n)
                .filter(|&c| c != p)
                .map(|c| row.quat()[c] as u32 * h[c] as u32)
                .sum();
            h[p] = ((4 - s % 4) % 4) as u8;
        }
        let bin = h[..shape.alpha].iter().map(|&x| x & 1).collect();
        MixedVector::from_raw(bin, h[shape.alpha..].to_vec())
    };

    let mut gens = Vec::new();
    for f in 0..n {
        if is_unit_pivot[f] || two_pivot_row[f].is_some() {
            continue;
        }
        let mut h = vec![0u8; n];
        h[f] = 1;
        for (row, p) in form.rows2.iter().zip(&form.pivots2) {
            if let Pivot2::Quat(q) = *p {
                let c = row.quat()[f] / 2;
                h[q] = (4 - c) % 4;
            }
        }
        gens.push(finish(h));
    }
    for q in 0..n {
        if two_pivot_row[q].is_some() {
            let mut h = vec![0u8; n];
            h[q] = 2;
            gens.push(finish(h));
        }
    }
    AdditiveCode::new(&MixedMatrix::new(shape, gens).expect("shape"))
}

/// Type of the dual: (α, β; α+γ−2κ, β−γ−δ+κ; α−κ).
pub fn dual_type(t: &CodeType) -> Result<CodeType> {
    t.validate()?;
    let gamma = (t.alpha + t.gamma)
        .checked_sub(2 * t.kappa)
        .ok_or_else(|| Error::InvalidType(t.to_string()))?;
    let delta = (t.beta + t.kappa)
        .checked_sub(t.gamma + t.delta)
        .ok_or_else(|| Error::InvalidType(t.to_string()))?;
    CodeType::new(t.alpha, t.beta, gamma, delta, t.alpha - t.kappa)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qcode(rows: &[&[u8]]) -> AdditiveCode {
        AdditiveCode::new(&MixedMatrix::quaternary(rows).unwrap())
    }

    #[test]
    fn inner_product_examples() {
        let u = MixedVector::new(vec![1], vec![1]).unwrap();
        assert_eq!(inner_product(&u, &u).unwrap(), 3);
        assert_eq!(inner_product(&u, &MixedVector::zero(u.shape())).unwrap(), 0);
        assert!(inner_product(&u, &MixedVector::zero(Shape::new(0, 2))).is_err());
    }

    #[test]
    fn dual_of_small_quaternary_code() {
        let c = qcode(&[&[1, 1, 1, 1], &[0, 1, 2, 3]]);
        let d = dual(&c);
        let t = d.code_type();
        assert_eq!((t.gamma, t.delta, t.kappa), (0, 2, 0));
        for g in d.gens().rows() {
            for h in c.gens().rows() {
                assert_eq!(inner_product(g, h).unwrap(), 0);
            }
        }
        assert_eq!(dual(&d), c);
    }

    #[test]
    fn dual_of_ambient_is_zero() {
        let s = Shape::new(2, 3);
        assert_eq!(dual(&AdditiveCode::ambient(s)), AdditiveCode::zero(s));
        assert_eq!(dual(&AdditiveCode::zero(s)), AdditiveCode::ambient(s));
    }

    #[test]
    fn dual_type_formula() {
        let t = CodeType::new(0, 4, 2, 1, 0).unwrap();
        assert_eq!(dual_type(&t).unwrap(), t);
        let t = CodeType::new(4, 2, 2, 1, 2).unwrap();
        assert_eq!(dual_type(&t).unwrap(), CodeType::new(4, 2, 2, 1, 2).unwrap());
        let h2 = AdditiveCode::new(
            &MixedMatrix::from_rows(
                Shape::new(4, 2),
                &[(&[1, 1, 1, 1], &[2, 2]), (&[0, 0, 1, 1], &[0, 2]), (&[0, 1, 0, 1], &[1, 1])],
            )
            .unwrap(),
        );
        assert_eq!(dual(&h2).code_type(), dual_type(&h2.code_type()).unwrap());
    }
}
