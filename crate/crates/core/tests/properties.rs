mod common;

use std::collections::BTreeSet;

use common::*;
use proptest::prelude::*;
use z2z4::format::{format_matrix, format_report, parse_matrix, parse_monomial, parse_report, ReportLine};
use z2z4::lattice::{intersect, span};
use z2z4::search::{enumerate_types, replay, Mode, SearchOptions};
use z2z4::*;

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(48)
}

fn monomial_strategy(shape: Shape, signs: bool) -> impl Strategy<Value = Monomial> {
    let bin: Vec<usize> = (0..shape.alpha).collect();
    let quat: Vec<usize> = (shape.alpha..shape.len()).collect();
    (
        Just(bin).prop_shuffle(),
        Just(quat).prop_shuffle(),
        proptest::collection::vec(any::<bool>(), shape.beta),
    )
        .prop_map(move |(b, q, flips)| {
            let mut perm = b;
            perm.extend(q);
            let neg: Vec<usize> = flips
                .iter()
                .enumerate()
                .filter(|(_, &f)| f && signs)
                .map(|(j, _)| shape.alpha + j)
                .collect();
            Monomial::new(shape, perm, &neg).unwrap()
        })
}

fn with_monomial(signs: bool) -> impl Strategy<Value = (MixedMatrix, Monomial)> {
    shape_strategy(4, 5).prop_flat_map(move |s| (matrix_in(s, 4), monomial_strategy(s, signs)))
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn reduction_keeps_the_generated_group(m in small_matrix()) {
        let c = AdditiveCode::new(&m);
        let brute = row_space(&m);
        prop_assert_eq!(words(&c), brute.clone());
        let t = c.code_type();
        prop_assert_eq!(group_type(m.shape(), &brute), (t.gamma, t.delta, t.kappa));
        let low = brute.iter().filter(|v| v.add(v).is_zero()).count();
        prop_assert_eq!(low, 1usize << (t.gamma + t.delta));
        if m.shape().alpha == 0 {
            prop_assert_eq!(t.kappa, 0);
        }
    }

    #[test]
    fn type_ignores_row_operations(m in small_matrix(), i in 0usize..4, j in 0usize..4) {
        let t = compute_type(&m);
        let mut rows = m.rows().to_vec();
        if rows.len() >= 2 {
            let (i, j) = (i % rows.len(), j % rows.len());
            rows.swap(i, j);
            prop_assert_eq!(compute_type(&MixedMatrix::new(m.shape(), rows.clone()).unwrap()), t);
            rows[i] = rows[i].neg();
            prop_assert_eq!(compute_type(&MixedMatrix::new(m.shape(), rows.clone()).unwrap()), t);
            if i != j {
                rows[i] = rows[i].add(&rows[j]);
                prop_assert_eq!(compute_type(&MixedMatrix::new(m.shape(), rows).unwrap()), t);
            }
        }
    }

    #[test]
    fn gray_map_is_an_isometry(pair in shape_strategy(4, 6).prop_flat_map(|s| (vector_strategy(s), vector_strategy(s)))) {
        let (u, w) = pair;
        let (gu, gw) = (gray_map(&u), gray_map(&w));
        prop_assert_eq!(gu.len(), u.shape().binary_length());
        let dist = gu.iter().zip(&gw).filter(|(a, b)| a != b).count() as u32;
        prop_assert_eq!(dist, lee_weight(&u.sub(&w)));
    }

    #[test]
    fn gray_image_is_injective(m in small_matrix()) {
        let c = AdditiveCode::new(&m);
        prop_assert_eq!(c.gray_image(24).unwrap().len(), words(&c).len());
    }

    #[test]
    fn monomials_preserve_type((m, mono) in with_monomial(true)) {
        let c = AdditiveCode::new(&m);
        let moved = apply_monomial(&c, &mono).unwrap();
        let (t, u) = (c.code_type(), moved.code_type());
        prop_assert_eq!((t.gamma, t.delta), (u.gamma, u.delta));
        let brute: Words = words(&c).iter().map(|v| mono.apply(v).unwrap()).collect();
        prop_assert_eq!(words(&moved), brute);
        let back = apply_monomial(&moved, &mono.inverse()).unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn dual_is_the_annihilator(m in small_matrix()) {
        let c = AdditiveCode::new(&m);
        let d = dual(&c);
        let s = m.shape();
        prop_assert_eq!(words(&d), annihilator(s, m.rows()));
        prop_assert_eq!(c.log2_size() + d.log2_size(), s.binary_length());
        prop_assert_eq!(dual(&d).gens(), c.gens());
        prop_assert_eq!(dual_type(&c.code_type()).unwrap(), d.code_type());
        for u in d.gens().rows() {
            for v in m.rows() {
                prop_assert_eq!(inner_product(u, v).unwrap(), 0);
                prop_assert_eq!(dot(u, v), 0);
            }
        }
    }

    #[test]
    fn intersection_matches_sets((a, b) in small_pair()) {
        let (c1, c2) = (AdditiveCode::new(&a), AdditiveCode::new(&b));
        let i = intersect(&c1, &c2).unwrap();
        let brute: Words = words(&c1).intersection(&words(&c2)).cloned().collect();
        prop_assert_eq!(words(&i), brute);
        let s = span(&dual(&c1), &dual(&c2)).unwrap();
        prop_assert_eq!(i.log2_size() + s.log2_size(), a.shape().binary_length());
        prop_assert_eq!(&intersect(&c2, &c1).unwrap(), &i);
        prop_assert_eq!(&intersect(&c1, &c1).unwrap(), &c1);
    }

    #[test]
    fn parity_checks_characterize_the_intersection((a, b) in small_pair()) {
        let c1 = AdditiveCode::from_parity_check(&a);
        let c2 = AdditiveCode::from_parity_check(&b);
        let i = intersect(&c1, &c2).unwrap();
        let stacked = a.stack(&b).unwrap();
        prop_assert_eq!(words(&i), annihilator(a.shape(), stacked.rows()));
    }

    #[test]
    fn span_laws(triple in shape_strategy(3, 4).prop_flat_map(|s| (matrix_in(s, 3), matrix_in(s, 3), matrix_in(s, 3)))) {
        let (a, b, x) = triple;
        let (c1, c2, c3) = (AdditiveCode::new(&a), AdditiveCode::new(&b), AdditiveCode::new(&x));
        let s = span(&c1, &c2).unwrap();
        let mut rows = a.rows().to_vec();
        rows.extend(b.rows().iter().cloned());
        prop_assert_eq!(words(&s), closure(a.shape(), &rows));
        prop_assert_eq!(&span(&c2, &c1).unwrap(), &s);
        prop_assert_eq!(&span(&c1, &c1).unwrap(), &c1);
        let bigger = span(&c1, &c3).unwrap();
        prop_assert!(s.is_subcode_of(&span(&bigger, &c2).unwrap()));
    }

    #[test]
    fn matrix_text_round_trips(m in small_matrix()) {
        let text = format_matrix(&m);
        let back = parse_matrix(&text).unwrap();
        prop_assert_eq!(&back, &m);
        prop_assert_eq!(format_matrix(&back), text);
    }

    #[test]
    fn monomial_text_round_trips(mono in shape_strategy(5, 6).prop_flat_map(|s| monomial_strategy(s, true)), k in 0usize..40) {
        let text = mono.to_string();
        prop_assert_eq!(&parse_monomial(&text, mono.shape()).unwrap(), &mono);
        let line = ReportLine {
            dual_type: CodeType::new(mono.shape().alpha, mono.shape().beta, 0, 0, 0).unwrap(),
            log2_eta: k,
            monomial: mono.clone(),
            seed: (k % 2 == 0).then_some(k as u64),
        };
        let report = format_report(&line);
        prop_assert_eq!(format_report(&parse_report(&report).unwrap()), report);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn exhaustive_search_laws(pair in shape_strategy(2, 3).prop_flat_map(|s| (matrix_in(s, 3), matrix_in(s, 3)))) {
        let (a, b) = pair;
        let (c1, c2) = (AdditiveCode::from_parity_check(&a), AdditiveCode::from_parity_check(&b));
        let opts = SearchOptions::default();
        let plain = enumerate_types(&c1, &c2, Mode::Exhaustive, false, &opts).unwrap();
        let signed = enumerate_types(&c1, &c2, Mode::Exhaustive, true, &opts).unwrap();
        let unpruned = enumerate_types(&c1, &c2, Mode::Exhaustive, true, &SearchOptions { prune: false, ..opts }).unwrap();
        let single = enumerate_types(&c1, &c2, Mode::Exhaustive, true, &SearchOptions { workers: 1, ..opts }).unwrap();
        let p: BTreeSet<CodeType> = plain.types.keys().copied().collect();
        let s: BTreeSet<CodeType> = signed.types.keys().copied().collect();
        prop_assert!(p.is_subset(&s));
        prop_assert_eq!(&s, &unpruned.types.keys().copied().collect());
        prop_assert_eq!(&signed, &single);
        for w in plain.types.values().chain(signed.types.values()) {
            prop_assert_eq!(replay(&c1, &c2, &w.monomial).unwrap(), (w.dual_type, w.log2_eta));
        }
    }
}
