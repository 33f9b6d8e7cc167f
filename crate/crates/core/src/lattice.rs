//! Spans, intersections, intersection numbers and the bound predicates
//! that constrain them.

use std::fmt;

use crate::algebra::{CodeType, MixedMatrix};
use crate::code::AdditiveCode;
use crate::duality::dual;
use crate::error::{Error, Result};

/// ⟨C1, C2⟩: the smallest additive code containing both.
pub fn span(c1: &AdditiveCode, c2: &AdditiveCode) -> Result<AdditiveCode> {
    c1.shape().check(c2.shape())?;
    Ok(AdditiveCode::new(&c1.gens().stack(&c2.gens())?))
}

/// C1 ∩ C2, computed as the dual of ⟨C1⊥, C2⊥⟩.
pub fn intersect(c1: &AdditiveCode, c2: &AdditiveCode) -> Result<AdditiveCode> {
    Ok(dual(&span(&dual(c1), &dual(c2))?))
}

/// log2 |C1 ∩ C2| = α + 2β − log2 |⟨C1⊥, C2⊥⟩|.
pub fn log2_eta(c1: &AdditiveCode, c2: &AdditiveCode) -> Result<usize> {
    let s = span(&dual(c1), &dual(c2))?;
    Ok(c1.shape().binary_length() - s.log2_size())
}

/// |C1 ∩ C2|. Fails with `OutOfRange` if the value does not fit in a u128.
pub fn eta(c1: &AdditiveCode, c2: &AdditiveCode) -> Result<u128> {
    let k = log2_eta(c1, c2)?;
    if k >= 128 {
        return Err(Error::OutOfRange(format!("eta = 2^{k}")));
    }
    Ok(1u128 << k)
}

/// The dual type of the intersection of the codes with parity-check
/// matrices `h1` and `h2`: the type of the row space of H1 ∥ H2.
pub fn intersection_dual_type(h1: &MixedMatrix, h2: &MixedMatrix) -> Result<CodeType> {
    Ok(crate::algebra::compute_type(&h1.stack(h2)?))
}

/// An observed quantity checked against an inclusive range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub quantity: String,
    pub lower: i64,
    pub upper: i64,
    pub observed: i64,
    pub pass: bool,
}

impl BoundReport {
    pub fn new(quantity: impl Into<String>, lower: i64, upper: i64, observed: i64) -> Self {
        BoundReport {
            quantity: quantity.into(),
            lower,
            upper,
            observed,
            pass: lower <= observed && observed <= upper,
        }
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} <= {} <= {} {}",
            if self.pass { "ok  " } else { "FAIL" },
            self.lower,
            self.quantity,
            self.upper,
            self.observed
        )
    }
}

/// κ as used by the bounds: for α = 0 every order-two generator counts,
/// which turns the additive bounds into the quaternary ones.
fn kappa_eff(t: &CodeType) -> i64 {
    if t.alpha == 0 {
        t.gamma as i64
    } else {
        t.kappa as i64
    }
}

/// Bounds on δ, κ+δ and γ+δ of ⟨C1, C2⟩ in terms of the types of C1, C2.
/// For α = 0 the quaternary form (δ and γ+δ) is reported.
pub fn check_span_bounds(c1: &AdditiveCode, c2: &AdditiveCode) -> Result<Vec<BoundReport>> {
    let s = span(c1, c2)?.code_type();
    Ok(span_bounds(&c1.code_type(), &c2.code_type(), &s))
}

pub fn span_bounds(t1: &CodeType, t2: &CodeType, s: &CodeType) -> Vec<BoundReport> {
    let a = t1.alpha as i64;
    let b = t1.beta as i64;
    let (g1, d1, k1) = (t1.gamma as i64, t1.delta as i64, kappa_eff(t1));
    let (g2, d2, k2) = (t2.gamma as i64, t2.delta as i64, kappa_eff(t2));
    let (g, d) = (s.gamma as i64, s.delta as i64);
    let mut out = vec![BoundReport::new("delta", d1.max(d2), (d1 + d2).min(b), d)];
    if t1.alpha == 0 {
        out.push(BoundReport::new(
            "gamma+delta",
            d.max((g1 + d1).max(g2 + d2)),
            (g1 + g2 + d1 + d2).min(b),
            g + d,
        ));
    } else {
        let k = s.kappa as i64;
        out.push(BoundReport::new(
            "kappa+delta",
            d.max((k1 + d1).max(k2 + d2)),
            (k1 + k2 + d1 + d2).min(a + b),
            k + d,
        ));
        out.push(BoundReport::new("gamma+delta", k + d, (g1 + g2 + d1 + d2).min(a + b), g + d));
    }
    out
}

/// μ = min(γ1+γ2+2(δ1+δ2), γ1+γ2+δ1+δ2+β, δ1+δ2+α+β, α+2β).
pub fn mu(t1: &CodeType, t2: &CodeType) -> i64 {
    let (a, b) = (t1.alpha as i64, t1.beta as i64);
    let gs = (t1.gamma + t2.gamma) as i64;
    let ds = (t1.delta + t2.delta) as i64;
    (gs + 2 * ds).min(gs + ds + b).min(ds + a + b).min(a + 2 * b)
}

fn size_floor(t1: &CodeType, t2: &CodeType) -> i64 {
    let d1 = t1.delta as i64;
    let d2 = t2.delta as i64;
    (kappa_eff(t1) + d1).max(kappa_eff(t2) + d2) + d1.max(d2)
}

/// Bound on log2 |⟨C1, C2⟩| = γ + 2δ.
pub fn check_dual_size_bounds(c1: &AdditiveCode, c2: &AdditiveCode) -> Result<BoundReport> {
    let s = span(c1, c2)?.code_type();
    let (t1, t2) = (c1.code_type(), c2.code_type());
    Ok(BoundReport::new(
        "gamma+2delta",
        size_floor(&t1, &t2),
        mu(&t1, &t2),
        (s.gamma + 2 * s.delta) as i64,
    ))
}

/// Which intersection-number theorem a pair of codes falls under.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Generic,
    /// α = 0, β = 2^(t−1), both codes extended perfect.
    QuaternaryPerfect,
    /// α ≠ 0, α + 2β = 2^t, both codes extended perfect with equal dual types.
    AdditiveExtendedPerfect,
}

/// t with 2^t = n, if n is a power of two.
fn exact_log2(n: usize) -> Option<i64> {
    n.is_power_of_two().then(|| n.trailing_zeros() as i64)
}

/// Range for log2 η(C1, C2) given the dual types of the codes.
pub fn eta_range(d1: &CodeType, d2: &CodeType, family: Family) -> Result<(i64, i64)> {
    let shape = d1.shape();
    shape.check(d2.shape())?;
    let n = shape.binary_length() as i64;
    match family {
        Family::Generic => Ok((n - mu(d1, d2), n - size_floor(d1, d2))),
        Family::QuaternaryPerfect => {
            let t = exact_log2(2 * shape.beta).filter(|_| shape.alpha == 0 && shape.beta >= 4);
            let Some(t) = t else {
                return Err(Error::FamilyMismatch(format!("shape {shape} is not (0, 2^(t-1))")));
            };
            for d in [d1, d2] {
                if d.delta == 0 || (d.gamma + 2 * d.delta) as i64 != t + 1 {
                    return Err(Error::FamilyMismatch(format!(
                        "dual type {d} is not that of an extended perfect code of length 2^{t}"
                    )));
                }
            }
            let b = shape.beta as i64;
            Ok((2 * b - 2 * t, 2 * b - t - 1))
        }
        Family::AdditiveExtendedPerfect => {
            let t = exact_log2(shape.binary_length()).filter(|_| shape.alpha != 0);
            let Some(t) = t else {
                return Err(Error::FamilyMismatch(format!("shape {shape} has α = 0 or α+2β ≠ 2^t")));
            };
            if (d1.gamma, d1.delta) != (d2.gamma, d2.delta) || (d1.gamma + 2 * d1.delta) as i64 != t + 1 {
                return Err(Error::FamilyMismatch(format!(
                    "dual types {d1} and {d2} are not those of extended perfect codes of length 2^{t}"
                )));
            }
            let lower = if d1.delta == 1 { n - 2 * t } else { n - 2 * t - 1 };
            Ok((lower, n - t - 1))
        }
    }
}

/// Report on log2 η(C1, C2) against the family's bounds.
pub fn check_eta_bounds(c1: &AdditiveCode, c2: &AdditiveCode, family: Family) -> Result<BoundReport> {
    let (d1, d2) = (dual(c1), dual(c2));
    let (lo, hi) = eta_range(&d1.code_type(), &d2.code_type(), family)?;
    let observed = c1.shape().binary_length() - span(&d1, &d2)?.log2_size();
    Ok(BoundReport::new("log2 eta", lo, hi, observed as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{MixedVector, Shape};
    use crate::code::{apply_monomial, Monomial};

    fn from_h(rows: &[&[u8]]) -> AdditiveCode {
        AdditiveCode::from_parity_check(&MixedMatrix::quaternary(rows).unwrap())
    }

    fn h1() -> AdditiveCode {
        from_h(&[&[0, 0, 2, 2], &[0, 2, 0, 2], &[1, 1, 1, 1]])
    }

    fn h2() -> AdditiveCode {
        from_h(&[&[1, 1, 1, 1], &[0, 1, 2, 3]])
    }

    #[test]
    fn t3_intersection_numbers() {
        let c1 = h2();
        let c2 = h1();
        let pi = Monomial::from_cycles(c1.shape(), &[vec![1, 2]], &[]).unwrap();
        assert_eq!(eta(&c1, &c1).unwrap(), 16);
        assert_eq!(eta(&c1, &c2).unwrap(), 8);
        assert_eq!(eta(&c1, &apply_monomial(&c1, &pi).unwrap()).unwrap(), 4);
        assert_eq!(span(&dual(&c1), &dual(&c2)).unwrap().size(), Some(32));
    }

    #[test]
    fn trivial_identities() {
        let c = h1();
        assert_eq!(span(&c, &c).unwrap(), c);
        assert_eq!(intersect(&c, &c).unwrap(), c);
        let z = AdditiveCode::zero(c.shape());
        assert_eq!(span(&z, &c).unwrap(), c);
        let all = AdditiveCode::ambient(c.shape());
        assert_eq!(eta(&c, &all).unwrap(), 16);
    }

    #[test]
    fn intersection_is_contained_in_both() {
        let a = h2();
        let pi = Monomial::from_cycles(a.shape(), &[vec![1, 2]], &[]).unwrap();
        let b = apply_monomial(&a, &pi).unwrap();
        let i = intersect(&a, &b).unwrap();
        assert!(i.is_subcode_of(&a) && i.is_subcode_of(&b));
        let t = dual(&i).code_type();
        assert_eq!((t.gamma, t.delta), (0, 3));
        assert!(i.contains(&MixedVector::zero(Shape::new(0, 4))).unwrap());
    }

    #[test]
    fn eta_bounds_at_floor_and_ceiling() {
        let c = h2();
        let pi = Monomial::from_cycles(c.shape(), &[vec![1, 2]], &[]).unwrap();
        let r = check_eta_bounds(&c, &apply_monomial(&c, &pi).unwrap(), Family::QuaternaryPerfect).unwrap();
        assert_eq!((r.lower, r.upper, r.observed, r.pass), (2, 4, 2, true));
        let r = check_eta_bounds(&c, &c, Family::QuaternaryPerfect).unwrap();
        assert_eq!((r.observed, r.upper), (4, 4));
        assert!(matches!(
            check_eta_bounds(&c, &c, Family::AdditiveExtendedPerfect),
            Err(Error::FamilyMismatch(_))
        ));
    }

    #[test]
    fn span_bounds_on_identical_codes() {
        let c = dual(&h1());
        for r in check_span_bounds(&c, &c).unwrap() {
            assert!(r.pass, "{r}");
        }
        assert!(check_dual_size_bounds(&c, &c).unwrap().pass);
    }
}
