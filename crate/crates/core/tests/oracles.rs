//! Reference values checked against the brute-force oracles, then frozen.

mod common;

use std::collections::BTreeSet;

use common::*;
use z2z4::code::certify_perfect;
use z2z4::constructions::*;
use z2z4::lattice::{eta, intersect, span};
use z2z4::*;

fn parity(name: &str) -> AdditiveCode {
    AdditiveCode::from_parity_check(&paper_matrix(name).unwrap())
}

fn all_perms(shape: Shape) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(prefix.clone());
        }
        for i in 0..left.len() {
            let x = left.remove(i);
            prefix.push(x);
            rec(prefix, left, out);
            prefix.pop();
            left.insert(i, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut (0..shape.beta).collect(), &mut out);
    out.into_iter().map(|p| Monomial::new(shape, p, &[]).unwrap()).collect()
}

#[test]
fn seven_four_matrix_type() {
    let h = paper_matrix("ex1-perfect").unwrap();
    assert_eq!(group_type(h.shape(), &row_space(&h)), (2, 1, 2));
    assert_eq!(compute_type(&h), CodeType::new(7, 4, 2, 1, 2).unwrap());
}

#[test]
fn four_two_example() {
    let h = paper_matrix("sec4-ex-H2").unwrap();
    let generated = AdditiveCode::new(&h);
    assert_eq!(row_space(&h).len(), 16);
    assert_eq!(words(&generated).len(), 16);
    assert_eq!(generated.code_type(), CodeType::new(4, 2, 2, 1, 2).unwrap());
    // The annihilator of this row space has the same type.
    let ann = annihilator(h.shape(), h.rows());
    assert_eq!(group_type(h.shape(), &ann), (2, 1, 2));
    let t = CodeType::new(4, 2, 2, 1, 2).unwrap();
    assert_eq!(dual_type(&t).unwrap(), t);
    assert_eq!(dual(&generated).code_type(), t);
}

#[test]
fn parity_row_is_orthogonal_to_the_extended_rows() {
    let h = paper_matrix("ex1-extended").unwrap();
    let first = &h.rows()[0];
    for r in h.rows() {
        assert_eq!(dot(first, r), 0);
        assert_eq!(inner_product(first, r).unwrap(), 0);
    }
}

#[test]
fn dual_of_the_two_row_quaternary_code() {
    let h = paper_matrix("qlpc-t3-H2").unwrap();
    let ann = annihilator(h.shape(), h.rows());
    assert_eq!(ann.len(), 16);
    assert_eq!(group_type(h.shape(), &ann), (0, 2, 0));
    let d = dual(&AdditiveCode::new(&h));
    assert_eq!(words(&d), ann);
    assert_eq!(d.code_type(), CodeType::new(0, 4, 0, 2, 0).unwrap());
}

#[test]
fn span_of_the_t3_duals() {
    let c1 = parity("qlpc-t3-H2");
    let c2 = parity("qlpc-t3-H1");
    let d = span(&dual(&c1), &dual(&c2)).unwrap();
    assert_eq!(d.size(), Some(32));
    let mut rows = paper_matrix("qlpc-t3-H2").unwrap().into_rows();
    rows.extend(paper_matrix("qlpc-t3-H1").unwrap().into_rows());
    assert_eq!(closure(d.shape(), &rows), words(&d));
    assert_eq!(eta(&c1, &c2).unwrap() * 32, 256);
}

#[test]
fn span_types_over_quaternary_permutations() {
    let a = parity("qlpc-t3-H1");
    let b = parity("qlpc-t3-H2");
    let cases = [(&a, &b, vec![(1, 2)]), (&b, &b, vec![(0, 2), (0, 3)]), (&a, &a, vec![(2, 1)])];
    for (c1, c2, expected) in cases {
        let mut seen = BTreeSet::new();
        for m in all_perms(c1.shape()) {
            let moved = apply_monomial(c2, &m).unwrap();
            let s = span(c1, &moved).unwrap();
            let mut rows: Vec<MixedVector> = words(c1).into_iter().collect();
            rows.extend(words(&moved));
            let brute = group_type(s.shape(), &closure(s.shape(), &rows));
            let t = s.code_type();
            assert_eq!(brute, (t.gamma, t.delta, t.kappa));
            seen.insert((t.gamma, t.delta));
        }
        assert_eq!(seen, expected.into_iter().collect());
    }
}

#[test]
fn hamming_t4_code() {
    let h = hamming_parity(4).unwrap();
    let ann = annihilator(h.shape(), h.rows());
    assert_eq!(ann.len(), 2048);
    let c = AdditiveCode::from_parity_check(&h);
    assert_eq!(words(&c), ann);
    assert_eq!(certify_perfect(&c, 24).unwrap().covering, Some(true));
}

#[test]
fn extended_length_sixteen_codes() {
    let cases = [
        extended_perfect_z4_dual(4, 1).unwrap(),
        extended_perfect_z4_dual(4, 2).unwrap(),
        extended_perfect_z2z4_dual(4, 3).unwrap(),
        extended_hamming_parity(4).unwrap(),
    ];
    for h in cases {
        let ann = annihilator(h.shape(), h.rows());
        assert_eq!(ann.len(), 2048);
        let brute = ann
            .iter()
            .filter(|v| !v.is_zero())
            .map(lee_weight)
            .min()
            .unwrap();
        assert_eq!(brute, 4);
        let c = AdditiveCode::from_parity_check(&h);
        assert_eq!(c.min_distance().unwrap(), 4);
        assert_eq!(certify_perfect(&c, 24).unwrap().punctured_covering, Some(true));
    }
}

#[test]
fn constructed_types_match_the_group_oracle() {
    let mut cases: Vec<MixedMatrix> = REGISTRY.iter().map(|n| paper_matrix(n).unwrap()).collect();
    cases.push(hamming_parity(3).unwrap());
    cases.push(perfect_z2z4_dual(3, 2).unwrap());
    cases.push(perfect_z2z4_dual(3, 3).unwrap());
    cases.push(extended_perfect_z4_dual(3, 2).unwrap());
    for h in cases {
        let s = h.shape();
        if s.binary_length() > 16 {
            continue;
        }
        let t = compute_type(&h);
        assert_eq!(group_type(s, &row_space(&h)), (t.gamma, t.delta, t.kappa), "{h:?}");
        let c = AdditiveCode::from_parity_check(&h);
        let ann = annihilator(s, h.rows());
        assert_eq!(words(&c), ann);
        let ct = c.code_type();
        assert_eq!(group_type(s, &ann), (ct.gamma, ct.delta, ct.kappa));
        assert_eq!(dual_type(&t).unwrap(), ct);
    }
}

#[test]
fn t3_intersections_match_set_intersection() {
    let c1 = parity("qlpc-t3-H2");
    let c2 = parity("qlpc-t3-H1");
    for m in all_perms(c1.shape()) {
        let moved = apply_monomial(&c1, &m).unwrap();
        let brute: Words = words(&c1).intersection(&words(&moved)).cloned().collect();
        assert_eq!(words(&intersect(&c1, &moved).unwrap()), brute);
    }
    let brute: Words = words(&c1).intersection(&words(&c2)).cloned().collect();
    assert_eq!(brute.len(), 8);
}
