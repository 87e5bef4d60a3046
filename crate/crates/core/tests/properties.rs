use evoalg::algebra::{
    check_identity, eabp_from_tensor, evolve, GeneralAlgebra, Identity, InheritanceTensor, Mode, State,
};
use evoalg::dibaric::{
    classify_two_dim_quotient, dibaric_hom_from_bq, is_dibaric_via_tt1, presentation, sex_diff_algebra, QuotientCase,
};
use evoalg::exact::scalar::{int, parse, ratio, render};
use evoalg::exact::{Matrix, MultiPoly, Scalar, Subspace};
use evoalg::forms::{
    annihilator, annihilator_via_tensor, canonical_xy, classify_bq, disappearing_forms, invariant_forms,
    male_invariant_solutions, verify_bq, BqFamily,
};
use evoalg::homs::{verify_algebra_hom, AlgebraMap};
use num::Zero;
use proptest::prelude::*;

const CASES: u32 = 32;

fn normalize(w: Vec<i64>) -> Vec<Scalar> {
    let s: i64 = w.iter().sum();
    if s == 0 {
        let mut v = vec![int(0); w.len()];
        v[0] = int(1);
        return v;
    }
    w.into_iter().map(|x| ratio(x, s)).collect()
}

prop_compose! {
    fn tensor()(n in 1..=4usize, nu in 1..=4usize)
        (pf in prop::collection::vec(prop::collection::vec(0..=4i64, n), n * nu),
         pm in prop::collection::vec(prop::collection::vec(0..=4i64, nu), n * nu),
         n in Just(n), nu in Just(nu)) -> InheritanceTensor {
        let nest = |rows: Vec<Vec<i64>>| -> Vec<Vec<Vec<Scalar>>> {
            let rows: Vec<Vec<Scalar>> = rows.into_iter().map(normalize).collect();
            rows.chunks(nu).map(|c| c.to_vec()).collect()
        };
        InheritanceTensor::new(n, nu, nest(pf), nest(pm), Mode::Strict).unwrap()
    }
}

fn rational() -> impl Strategy<Value = Scalar> {
    (-12..=12i64, 1..=6i64).prop_map(|(p, q)| ratio(p, q))
}

fn state_for(n: usize, nu: usize) -> impl Strategy<Value = (Vec<Scalar>, Vec<Scalar>)> {
    (prop::collection::vec(0..=5i64, n).prop_map(normalize), prop::collection::vec(0..=5i64, nu).prop_map(normalize))
}

fn algebra_and_state() -> impl Strategy<Value = (GeneralAlgebra, Vec<Scalar>, Vec<Scalar>)> {
    tensor().prop_flat_map(|t| {
        let (n, nu) = (t.n(), t.nu());
        (Just(eabp_from_tensor(&t)), state_for(n, nu)).prop_map(|(a, (x, y))| (a, x, y))
    })
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(prop::collection::vec(rational(), cols), rows)
        .prop_map(move |r| Matrix::from_rows(r, cols).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn evolution_preserves_the_simplex((alg, x, y) in algebra_and_state()) {
        let s = State::from_parts(&alg, &x, &y).unwrap();
        let next = evolve(&alg, &s).unwrap();
        let fem: Scalar = next.female().iter().sum();
        let mal: Scalar = next.male().iter().sum();
        prop_assert_eq!(fem, int(1));
        prop_assert_eq!(mal, int(1));
    }

    #[test]
    fn commutative_and_flexible(t in tensor()) {
        let alg = eabp_from_tensor(&t);
        prop_assert!(check_identity(&alg, &Identity::Commutativity).unwrap().holds);
        prop_assert!(check_identity(&alg, &Identity::Flexibility).unwrap().holds);
    }

    #[test]
    fn male_transitions_fix_a_vector(t in tensor()) {
        for i in 0..t.n() {
            let m = t.male_transition(i).sub(&Matrix::identity(t.nu())).unwrap();
            prop_assert!(m.det().unwrap().is_zero());
        }
    }

    #[test]
    fn invariant_forms_of_x(t in tensor()) {
        let alg = eabp_from_tensor(&t);
        let xy = canonical_xy(&alg).unwrap();
        let j = invariant_forms(&alg, xy.f.coeffs()).unwrap();
        prop_assert!(j.contains(xy.g.coeffs()));
        prop_assert!(j.basis().iter().all(|v| v[..t.n()].iter().all(Zero::is_zero)));
        prop_assert!(j.intersect(&disappearing_forms(&alg)).unwrap().is_zero());
        prop_assert_eq!(&j, &male_invariant_solutions(&alg).unwrap());
        let ann = annihilator(&alg);
        prop_assert!(ann.is_subspace_of(&j.perp()));
        prop_assert!(ann.basis().iter().all(|z| xy.f.eval(z).is_zero() && xy.g.eval(z).is_zero()));
        prop_assert_eq!(ann, annihilator_via_tensor(&alg).unwrap());
    }

    #[test]
    fn xy_is_a_b12_pair_and_dibaric(t in tensor()) {
        let alg = eabp_from_tensor(&t);
        let xy = canonical_xy(&alg).unwrap();
        prop_assert!(verify_bq(&alg, &xy).unwrap().holds);
        prop_assert_eq!(classify_bq(&alg, &xy).unwrap(), BqFamily::B12);
        let hom = dibaric_hom_from_bq(&alg, &xy).unwrap();
        prop_assert!(hom.multiplicativity.holds);
        let v = is_dibaric_via_tt1(&alg, &hom.kernel()).unwrap();
        prop_assert_eq!(v.classification.case, QuotientCase::SexDiff);
        // The composed map onto the sex differentiation algebra has rank 2.
        prop_assert_eq!(v.onto.map(|m| m.rank()), Some(2));
    }

    #[test]
    fn identity_is_an_evolution_homomorphism(t in tensor()) {
        let alg = eabp_from_tensor(&t);
        prop_assert!(verify_algebra_hom(&alg, &alg, &AlgebraMap::identity(alg.dim())).unwrap().is_eabp_hom);
    }

    #[test]
    fn basis_change_matrix_is_an_isomorphism(alpha2 in rational(), m in matrix(2, 2)) {
        prop_assume!(m.rank() == 2);
        let base = presentation(alpha2);
        let moved = base.change_basis(&m).unwrap();
        let h = AlgebraMap::new(m);
        prop_assert!(verify_algebra_hom(&moved, &base, &h).unwrap().is_linear_hom);
        prop_assert!(verify_algebra_hom(&base, &moved, &h.inverse().unwrap()).unwrap().is_linear_hom);
    }

    #[test]
    fn quotient_case_is_a_basis_invariant(alpha2 in rational(), m in matrix(2, 2)) {
        prop_assume!(m.rank() == 2);
        let alg = presentation(alpha2.clone());
        let moved = alg.change_basis(&m).unwrap();
        let a = classify_two_dim_quotient(&alg).unwrap();
        let b = classify_two_dim_quotient(&moved).unwrap();
        prop_assert_eq!(a.case, b.case);
        let sign = |s: &Option<Scalar>| s.as_ref().map(|v| v.cmp(&int(0)));
        prop_assert_eq!(sign(&a.alpha2), sign(&b.alpha2));
        if let Some(iso) = b.isomorphism_exact() {
            let target = sex_diff_algebra();
            prop_assert!(verify_algebra_hom(&moved, &target, &AlgebraMap::new(iso)).unwrap().is_linear_hom);
        }
    }

    #[test]
    fn subspace_span_is_canonical(rows in prop::collection::vec(prop::collection::vec(rational(), 4), 1..5), seed in any::<u64>()) {
        let a = Subspace::span(4, rows.clone()).unwrap();
        let mut shuffled = rows.clone();
        let k = (seed as usize) % shuffled.len();
        shuffled.rotate_left(k);
        let scaled: Vec<Vec<Scalar>> = shuffled.iter().map(|r| r.iter().map(|v| v * int(3)).collect()).collect();
        let b = Subspace::span(4, scaled).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.perp().dim() + a.dim(), 4);
        prop_assert_eq!(a.perp().perp(), a);
    }

    #[test]
    fn matrix_inverse_and_rank_nullity(m in matrix(3, 3), r in matrix(3, 4)) {
        if let Some(inv) = m.inverse() {
            prop_assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(3));
            prop_assert!(!m.det().unwrap().is_zero());
        } else {
            prop_assert!(m.det().unwrap().is_zero());
        }
        prop_assert_eq!(r.rank() + r.nullspace().len(), 4);
        for v in r.nullspace() {
            prop_assert!(r.mul_vec(&v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn polynomial_evaluation_is_a_ring_map(
        a in prop::collection::vec(rational(), 3),
        b in prop::collection::vec(rational(), 3),
        point in prop::collection::vec(rational(), 3),
    ) {
        let p = &MultiPoly::linear(&a, 0) * &MultiPoly::linear(&a, 0);
        let q = &MultiPoly::linear(&b, 0) + &MultiPoly::constant(int(1));
        prop_assert_eq!((&p * &q).eval(&point), p.eval(&point) * q.eval(&point));
        prop_assert_eq!((&p - &q).eval(&point), p.eval(&point) - q.eval(&point));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(q.pow(3).eval(&point), q.eval(&point) * q.eval(&point) * q.eval(&point));
    }

    #[test]
    fn scalars_round_trip(s in rational()) {
        prop_assert_eq!(parse(&render(&s)).unwrap(), s);
    }
}

#[test]
fn decimals_are_rejected() {
    assert!(parse("0.5").is_err());
    assert_eq!(parse("-3/6").unwrap(), ratio(-1, 2));
}
