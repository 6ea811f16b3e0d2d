//! Randomized algebraic invariants for the ring, polynomial, and code
//! layers.

use proptest::prelude::*;

use skewz4::{
    gray_image, lee_weight, plotkin_sum, DerivationKind, RCode, RVector, RingElem, SkewPoly,
    Z4Code,
};

fn elem() -> impl Strategy<Value = RingElem> {
    (0u8..4, 0u8..4).prop_map(|(a, b)| RingElem::new(a, b))
}

fn kind() -> impl Strategy<Value = DerivationKind> {
    prop_oneof![
        Just(DerivationKind::OnePlus2v),
        Just(DerivationKind::ThreePlus2v)
    ]
}

fn poly(max_deg: usize) -> impl Strategy<Value = (Vec<RingElem>, DerivationKind)> {
    (prop::collection::vec(elem(), 0..=max_deg + 1), kind())
}

fn rvector(n: usize) -> impl Strategy<Value = RVector> {
    prop::collection::vec(elem(), n).prop_map(RVector::new)
}

fn z4_rows(n: usize, max_rows: usize) -> impl Strategy<Value = Vec<Vec<u8>>> {
    prop::collection::vec(prop::collection::vec(0u8..4, n), 1..=max_rows)
}

proptest! {
    #[test]
    fn multiplication_is_associative((f, k) in poly(6), (g, _) in poly(6), (h, _) in poly(6)) {
        let f = SkewPoly::new(f, k);
        let g = SkewPoly::new(g, k);
        let h = SkewPoly::new(h, k);
        let left = f.mul(&g).unwrap().mul(&h).unwrap();
        let right = f.mul(&g.mul(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiplication_distributes((f, k) in poly(6), (g, _) in poly(6), (h, _) in poly(6)) {
        let f = SkewPoly::new(f, k);
        let g = SkewPoly::new(g, k);
        let h = SkewPoly::new(h, k);
        let sum = g.add(&h).unwrap();
        prop_assert_eq!(
            f.mul(&sum).unwrap(),
            f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap()
        );
        prop_assert_eq!(
            sum.mul(&f).unwrap(),
            g.mul(&f).unwrap().add(&h.mul(&f).unwrap()).unwrap()
        );
    }

    #[test]
    fn degree_of_a_product_with_unit_lead_adds((f, k) in poly(8), (g, _) in poly(5), lead in 0usize..4) {
        // Force a unit leading coefficient on g so no degree can drop.
        let units = [RingElem::new(1, 0), RingElem::new(3, 0), RingElem::new(1, 2), RingElem::new(3, 2)];
        let mut gc = g;
        gc.push(units[lead]);
        let f = SkewPoly::new(f, k);
        let g = SkewPoly::new(gc, k);
        if let Some(df) = f.degree() {
            let dg = g.degree().unwrap();
            prop_assert_eq!(f.mul(&g).unwrap().degree(), Some(df + dg));
        }
    }

    #[test]
    fn right_division_round_trips((f, k) in poly(10), (g, _) in poly(5), lead in 0usize..4) {
        let units = [RingElem::new(1, 0), RingElem::new(3, 0), RingElem::new(1, 2), RingElem::new(3, 2)];
        let mut gc = g;
        gc.push(units[lead]);
        let f = SkewPoly::new(f, k);
        let g = SkewPoly::new(gc, k);
        let (q, r) = f.right_divide(&g).unwrap();
        prop_assert_eq!(q.mul(&g).unwrap().add(&r).unwrap(), f);
        if let Some(dr) = r.degree() {
            prop_assert!(dr < g.degree().unwrap());
        }
    }

    #[test]
    fn central_polynomials_commute_with_everything((f, k) in poly(6), (g, _) in poly(6)) {
        let f = SkewPoly::new(f, k);
        let g = SkewPoly::new(g, k);
        if f.is_central() {
            prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        }
    }

    #[test]
    fn x_pow_minus_one_is_central_exactly_for_even_n(n in 1usize..12, k in kind()) {
        prop_assert_eq!(SkewPoly::x_pow_minus_one(n, k).is_central(), n % 2 == 0);
    }

    #[test]
    fn shift_agrees_with_multiplication_by_x(n in 1usize..10, k in kind(), seed in any::<u64>()) {
        let v = RVector::new(
            (0..n)
                .map(|i| {
                    let s = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(i as u64);
                    RingElem::new((s >> 7) as u8 % 4, (s >> 13) as u8 % 4)
                })
                .collect(),
        );
        let x = SkewPoly::monomial(RingElem::ONE, 1, k);
        let prod = x.mul(&v.to_poly(k)).unwrap();
        let (_, reduced) = prod.right_divide(&SkewPoly::x_pow_minus_one(n, k)).unwrap();
        prop_assert_eq!(v.shift(k), RVector::from_poly(&reduced, n).unwrap());
    }

    #[test]
    fn double_shift_is_rotation_by_two(n in 2usize..12, k in kind(), seed in any::<u64>()) {
        let v = RVector::new(
            (0..n)
                .map(|i| {
                    let s = seed.wrapping_mul(0x2545f4914f6cdd1d).wrapping_add(i as u64);
                    RingElem::new((s >> 5) as u8 % 4, (s >> 11) as u8 % 4)
                })
                .collect(),
        );
        prop_assert_eq!(v.shift(k).shift(k), v.rotate(2));
    }

    #[test]
    fn gray_turns_gray_weight_into_lee_weight(u in rvector(6), w in rvector(6)) {
        // The Gray map is an isometry from Gray distance on R^n to Lee
        // distance on Z4^(2n).
        let diff = RVector::new(
            u.entries()
                .iter()
                .zip(w.entries())
                .map(|(&x, &y)| x - y)
                .collect(),
        );
        let gray_dist: u32 = u
            .gray()
            .iter()
            .zip(w.gray())
            .map(|(&p, q)| lee_weight((4 + p - q) % 4))
            .sum();
        let weight: u32 = diff.entries().iter().map(|e| e.gray_weight()).sum();
        prop_assert_eq!(gray_dist, weight);
    }

    #[test]
    fn standard_form_preserves_the_row_space(rows in z4_rows(4, 4)) {
        let code = Z4Code::from_rows(4, rows.clone());
        let words: Vec<Vec<u8>> = code.codewords().collect();
        prop_assert_eq!(words.len() as u128, code.codeword_count());
        // Every original row must be a codeword of the standard form.
        for row in &rows {
            prop_assert!(words.contains(row));
        }
        // No duplicates: distinctness of the standard-form enumeration.
        let mut sorted = words;
        sorted.sort_unstable();
        sorted.dedup();
        prop_assert_eq!(sorted.len() as u128, code.codeword_count());
    }

    #[test]
    fn minimum_distance_matches_naive_enumeration(rows in z4_rows(5, 3)) {
        let code = Z4Code::from_rows(5, rows);
        if code.codeword_count() > 1 {
            let naive = code
                .codewords()
                .map(|w| w.iter().map(|&x| lee_weight(x)).sum::<u32>())
                .filter(|&w| w > 0)
                .min()
                .unwrap();
            prop_assert_eq!(code.min_lee_distance(1 << 16).unwrap(), naive);
        }
    }

    #[test]
    fn range_splits_cover_the_full_minimum(rows in z4_rows(4, 3), cut in any::<u64>()) {
        let code = Z4Code::from_rows(4, rows);
        if code.codeword_count() > 1 {
            let count = code.codeword_count() as u64;
            let split = 1 + cut % (count - 1);
            let full = code.min_lee_distance(1 << 16).unwrap();
            let parts = code
                .min_lee_distance_range(0, split)
                .into_iter()
                .chain(code.min_lee_distance_range(split, count))
                .min()
                .unwrap();
            prop_assert_eq!(parts, full);
        }
    }

    #[test]
    fn plotkin_distance_is_min_of_doubled_left_and_right(a in z4_rows(3, 2), b in z4_rows(3, 2)) {
        let a = Z4Code::from_rows(3, a);
        let b = Z4Code::from_rows(3, b);
        if a.codeword_count() > 1 && b.codeword_count() > 1 {
            let ps = plotkin_sum(&a, &b).unwrap();
            let da = a.min_lee_distance(1 << 16).unwrap();
            let db = b.min_lee_distance(1 << 16).unwrap();
            prop_assert_eq!(ps.codeword_count(), a.codeword_count() * b.codeword_count());
            prop_assert_eq!(ps.min_lee_distance(1 << 20).unwrap(), (2 * da).min(db));
        }
    }
}

#[test]
fn free_code_spans_are_closed_and_sized_16_pow_rank() {
    // x + 3 right-divides x^n - 1 at every length.
    for kind in DerivationKind::ALL {
        for n in 2..7 {
            let g = SkewPoly::new(vec![RingElem::new(3, 0), RingElem::ONE], kind);
            let code = RCode::free_from_divisor(&g, n).unwrap();
            let span = code.enumerate_span(1 << 24).unwrap();
            assert_eq!(span.len() as u128, 16u128.pow(code.free_rank().unwrap() as u32));
            let report = code.closure_check(1 << 24).unwrap();
            assert!(report.twisted_shift_closed, "kind {kind}, n {n}");
            if n % 2 == 0 {
                assert!(report.quasicyclic_2);
            } else {
                assert!(report.cyclic);
            }
        }
    }
}

#[test]
fn gray_image_cardinality_equals_span_cardinality() {
    let g = SkewPoly::new(
        vec![
            RingElem::new(1, 3),
            RingElem::new(2, 0),
            RingElem::new(3, 3),
        ],
        DerivationKind::OnePlus2v,
    );
    for k in 1..=4 {
        let code = RCode::from_shifts(&g, 4, k);
        let span = code.enumerate_span(1 << 24).unwrap();
        let gray = gray_image(&code);
        assert_eq!(gray.codeword_count(), span.len() as u128, "k = {k}");
    }
}
