//! Property tests over random inputs, checked against the oracles in `common`.

mod common;

use std::collections::BTreeSet;
use std::cmp::Ordering;

use num_traits::Signed;
use okounkov::graded_algebras::AlgebraSpec;
use okounkov::linalg::{hnf, IntMatrix, Lattice};
use okounkov::num::{rat, rat_int, Rat};
use okounkov::polyhedra::{convex_hull_i64, minkowski_sum, mixed_volume};
use okounkov::semigroup::{conductor, conductor_violations, levels, SemigroupSpec};
use okounkov::valuations::{LaurentPoly, LaurentSubspace, TermOrder};
use proptest::prelude::*;

use common::{polygon_area, polygon_mixed_area, rational_rank};

fn points(n: usize, max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-4i64..=4, n), 1..=max)
}

fn poly(n: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-3i64..=3, n), -4i64..=4), 1..=4)
        .prop_map(move |t| LaurentPoly::new(n, t.into_iter().map(|(e, c)| (e, rat_int(c)))).unwrap())
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn order2() -> impl Strategy<Value = TermOrder> {
    prop_oneof![
        Just(TermOrder::lex(2)),
        Just(TermOrder::lex_perm(vec![1, 0]).unwrap()),
        (1i64..=3, 1i64..=3).prop_map(|(a, b)| TermOrder::grlex(vec![a, b]).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hnf_is_unimodular_row_reduction(rows in prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 1..=4)) {
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let m = IntMatrix::from_i64(&refs);
        let (h, u) = hnf(&m);
        prop_assert_eq!(u.mul(&m), h.clone());
        prop_assert!(u.determinant().abs() == 1.into());
        let l = Lattice::from_i64(3, &rows);
        for r in &rows {
            prop_assert!(l.contains_i64(r));
        }
    }

    #[test]
    fn polygon_area_and_mixed_area(p in points(2, 6), q in points(2, 6)) {
        let (hp, hq) = (convex_hull_i64(&p).unwrap(), convex_hull_i64(&q).unwrap());
        prop_assert_eq!(hp.volume(), polygon_area(&p));
        for x in &p {
            prop_assert!(hp.contains_i64(x));
        }
        let v = mixed_volume(&[hp.clone(), hq.clone()]).unwrap().value;
        prop_assert_eq!(&v, &polygon_mixed_area(&p, &q));
        prop_assert_eq!(minkowski_sum(&hp, &hq).unwrap().volume(), hp.volume() + hq.volume() + rat_int(2) * &v);
        prop_assert!(hp.volume() * hq.volume() <= &v * &v);
    }

    #[test]
    fn volume_is_translation_invariant_and_homogeneous(p in points(3, 7), t in prop::collection::vec(-3i64..=3, 3)) {
        let hp = convex_hull_i64(&p).unwrap();
        let shift: Vec<Rat> = t.iter().map(|&x| rat_int(x)).collect();
        prop_assert_eq!(hp.translate(&shift).volume(), hp.volume());
        prop_assert_eq!(hp.scale(&rat(1, 2)).volume(), hp.volume() * rat(1, 8));
    }

    #[test]
    fn valuation_is_multiplicative(f in poly(2), g in poly(2), order in order2()) {
        let (vf, vg) = (f.val(&order).unwrap(), g.val(&order).unwrap());
        let vfg = (&f * &g).val(&order).unwrap();
        prop_assert_eq!(vfg, vec![vf[0] + vg[0], vf[1] + vg[1]]);
        let s = &f + &g;
        if !s.is_zero() {
            let vs = s.val(&order).unwrap();
            let lo = if order.compare(&vf, &vg) == Ordering::Greater { vg } else { vf };
            prop_assert!(order.compare(&vs, &lo) != Ordering::Less);
        }
    }

    #[test]
    fn values_count_dimension(polys in prop::collection::vec(poly(2), 1..=6), order in order2()) {
        let ls = LaurentSubspace::spanned_by(2, &polys, &order).unwrap();
        let values = ls.reduce(&order).unwrap().values;
        let distinct: BTreeSet<_> = values.iter().collect();
        prop_assert_eq!(distinct.len(), rational_rank(&polys));
        prop_assert_eq!(values.len(), ls.dim());
    }

    #[test]
    fn semigroup_levels_are_superadditive(gens in prop::collection::vec((0i64..=4, 1i64..=3), 1..=3)) {
        let s = SemigroupSpec::nonneg(gens.iter().map(|&(x, l)| vec![x, l]).collect()).unwrap();
        let ls = levels(&s, 6).unwrap();
        for j in 1..=3 {
            for k in j..=(6 - j) {
                let have: BTreeSet<&Vec<i64>> = ls[j + k].iter().collect();
                for a in &ls[j] {
                    for b in &ls[k] {
                        prop_assert!(have.contains(&vec![a[0] + b[0], a[1] + b[1]]));
                    }
                }
            }
        }
    }

    #[test]
    fn conductor_shifts_regularization_into_s(gens in prop::collection::vec((0i64..=4, 1i64..=3), 1..=3)) {
        let s = SemigroupSpec::nonneg(gens.iter().map(|&(x, l)| vec![x, l]).collect()).unwrap();
        let c = conductor(&s).unwrap();
        prop_assert!(conductor_violations(&s, &c.g0, 12).unwrap().is_empty());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn algebra_dimensions_and_superadditivity(polys in prop::collection::vec(poly(2), 1..=3)) {
        let order = TermOrder::lex(2);
        let l = LaurentSubspace::spanned_by(2, &polys, &order).unwrap();
        let a = AlgebraSpec::new(l, order, 3).unwrap();
        let powers = a.powers().unwrap();
        let values = a.values().unwrap();
        for (k, p) in powers.iter().enumerate() {
            prop_assert_eq!(p.basis.len(), values[k].len());
            prop_assert_eq!(rational_rank(&p.basis), p.basis.len());
        }
        for j in 1..=3 {
            for k in 1..=(3 - j) {
                let have: BTreeSet<&Vec<i64>> = values[j + k].iter().collect();
                for x in &values[j] {
                    for y in &values[k] {
                        prop_assert!(have.contains(&vec![x[0] + y[0], x[1] + y[1]]));
                    }
                }
            }
        }
    }
}
