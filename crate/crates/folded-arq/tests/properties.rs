use folded_arq::coxeter::enumerate_twisted_coxeter;
use folded_arq::denom::{Factor, FactorPoly};
use folded_arq::distance::{gdist_closed, SeqContext};
use folded_arq::dorey::{dorey_condition, spectral_solutions, ShapeKey, SpectralPoint};
use folded_arq::quiver::{
    coordinate_laws, folded_from_element, folded_from_json, folded_to_json, reflect_folded, FoldedARQuiver,
};
use folded_arq::rootsys::Automorphism;
use proptest::prelude::*;

fn class_of(n: usize, pick: usize) -> FoldedARQuiver {
    let elements = enumerate_twisted_coxeter(&Automorphism::d_fold(n));
    folded_from_element(&elements[pick % elements.len()]).expect("twisted element")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn spectral_condition_depends_only_on_the_shape(
        n in 3usize..8,
        orbits in (1usize..8, 1usize..8, 1usize..8),
        exps in (-20i32..20, -20i32..20, -20i32..20),
        shift in -30i32..30,
    ) {
        let (i, j, k) = (orbits.0.min(n), orbits.1.min(n), orbits.2.min(n));
        let (l, r, t) = (SpectralPoint::new(i, exps.0), SpectralPoint::new(j, exps.1), SpectralPoint::new(k, exps.2));
        let holds = dorey_condition(n, l, r, t);
        prop_assert_eq!(holds, dorey_condition(n, l.shifted(shift), r.shifted(shift), t.shifted(shift)));
        prop_assert_eq!(holds, spectral_solutions(n).contains(&ShapeKey::of(l, r, t)));
    }

    #[test]
    fn factor_lists_are_multisets(
        raw in proptest::collection::vec((any::<bool>(), 0u32..20), 0..12),
        rotate in 0usize..12,
    ) {
        let factors: Vec<Factor> = raw.iter().map(|&(neg, exp)| Factor { sign: if neg { -1 } else { 1 }, exp }).collect();
        let mut turned = factors.clone();
        if !turned.is_empty() {
            let by = rotate % turned.len();
            turned.rotate_left(by);
        }
        let (a, b) = (FactorPoly::new(factors.clone()), FactorPoly::new(turned));
        prop_assert_eq!(&a, &b);
        let (head, tail) = factors.split_at(factors.len() / 2);
        let product = FactorPoly::new(head.to_vec()).times(&FactorPoly::new(tail.to_vec()));
        prop_assert_eq!(&product, &a);
        prop_assert_eq!(product.degree(), factors.len());
    }

    #[test]
    fn closed_distance_is_symmetric_and_bounded(n in 3usize..8, pick in 0usize..128, x in 0usize..64, y in 0usize..64) {
        let f = class_of(n, pick);
        let m = f.vertices.len();
        let (a, b) = (&f.vertices[x % m].root, &f.vertices[y % m].root);
        prop_assume!(a != b);
        let g = gdist_closed(&f, a, b).unwrap();
        prop_assert_eq!(g, gdist_closed(&f, b, a).unwrap());
        prop_assert!(g <= 2);
    }

    #[test]
    fn closed_distance_matches_search_in_rank_six(pick in 0usize..32, x in 0usize..30, y in 0usize..30) {
        let f = class_of(5, pick);
        let (a, b) = (&f.vertices[x].root, &f.vertices[y].root);
        prop_assume!(a != b);
        let ctx = SeqContext::new(&f.class);
        prop_assert_eq!(ctx.gdist_pair(a, b).unwrap(), gdist_closed(&f, a, b).unwrap());
    }

    #[test]
    fn coordinate_laws_beyond_the_exhaustive_range(n in 7usize..9, pick in 0usize..256) {
        let f = class_of(n, pick);
        let laws = coordinate_laws(&f).unwrap();
        prop_assert!(laws.all_hold(), "{} {:?}", f.element, laws);
    }

    #[test]
    fn json_round_trip(n in 3usize..7, pick in 0usize..64) {
        let f = class_of(n, pick);
        let back = folded_from_json(&folded_to_json(&f)).unwrap();
        prop_assert_eq!(back.labels(), f.labels());
        prop_assert_eq!(back.element, f.element);
    }

    #[test]
    fn sink_reflections_stay_twisted_adapted(n in 3usize..7, pick in 0usize..64, steps in proptest::collection::vec(0usize..8, 1..6)) {
        let mut f = class_of(n, pick);
        for s in steps {
            let sinks: Vec<usize> = f.class.sinks().into_iter().collect();
            let i = sinks[s % sinks.len()];
            f = reflect_folded(&f, i).unwrap();
            let rebuilt = folded_from_element(&f.element).unwrap();
            prop_assert_eq!(&rebuilt.class, &f.class);
            prop_assert_eq!(f.vertices.len(), n * (n + 1));
        }
    }
}
