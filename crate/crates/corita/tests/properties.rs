use corita::algebra::standard::{cyclic_group, dual_numbers, matrix, upper_triangular};
use corita::algebra::{dorroh, firmness, idempotent_core, validate, Algebra, IdealWitness, Side};
use corita::bimodule::{tensor_over, validate_module, Bimodule};
use corita::coring::{dual_ring, hopf_module_coring, validate_comodule, HopfAlgebra};
use corita::exactlin::{rref_solve, Field, Mat, Subspace};
use corita::galois::comodule_catalog;
use corita::morita::standard::{matrix_context, projection_context};
use corita::morita::{swap, validate_context, MoritaContext};
use proptest::prelude::*;

const Q: Field = Field::Rational;

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Q), Just(Field::prime(5).unwrap()), Just(Field::prime(2).unwrap())]
}

fn mat(f: Field, rows: usize, cols: usize) -> impl Strategy<Value = Mat> + Clone {
    prop::collection::vec(-3i64..=3, rows * cols)
        .prop_map(move |v| Mat::from_fn(f, rows, cols, |i, j| f.int(v[i * cols + j])))
}

fn any_mat() -> impl Strategy<Value = Mat> {
    (field(), 1usize..6, 1usize..6).prop_flat_map(|(f, r, c)| mat(f, r, c))
}

fn algebra() -> impl Strategy<Value = Algebra> {
    prop_oneof![
        Just(matrix(Q, 2)),
        Just(upper_triangular(Q, 3)),
        Just(cyclic_group(Q, 3)),
        Just(dual_numbers(Q)),
    ]
}

fn element(a: &Algebra) -> impl Strategy<Value = Mat> + Clone {
    mat(a.field(), a.dim(), 1)
}

/// The two-sided ideal of a unital algebra generated by the given columns.
fn generated_ideal(a: &Algebra, gens: &Mat) -> Subspace {
    let s = Subspace::from_cols(gens);
    a.span_products(&a.whole(), &a.span_products(&s, &a.whole()))
}

fn same_space(s: &Subspace, t: &Subspace) -> bool {
    s.contains_space(t) && t.contains_space(s)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity(m in any_mat()) {
        let n = m.null_space();
        prop_assert_eq!(m.rank() + n.rows(), m.cols());
        prop_assert!(m.mul(&n.transpose()).is_zero());
    }

    #[test]
    fn rref_is_idempotent(m in any_mat()) {
        let (r, pivots) = m.rref();
        prop_assert_eq!(pivots.len(), m.rank());
        prop_assert_eq!(r.rref().0, r);
    }

    #[test]
    fn consistent_systems_are_solved((a, x) in any_mat().prop_flat_map(|a| {
        let (f, c) = (a.field(), a.cols());
        (Just(a), mat(f, c, 1))
    })) {
        let b = a.mul(&x);
        let y = rref_solve(&a, &b).unwrap();
        prop_assert!(y.is_some());
        prop_assert_eq!(a.mul(&y.unwrap()), b);
    }

    #[test]
    fn row_span_contains_its_rows(m in any_mat()) {
        let s = Subspace::from_rows(&m);
        prop_assert_eq!(s.dim(), m.rank());
        for i in 0..m.rows() {
            let row = Mat::from_fn(m.field(), m.cols(), 1, |j, _| m.get(i, j).clone());
            prop_assert!(s.contains(&row));
        }
    }

    #[test]
    fn mat_json_round_trips(m in any_mat()) {
        prop_assert_eq!(Mat::from_json(&m.to_json(), m.field()).unwrap(), m);
    }

    #[test]
    fn multiplication_is_associative_and_regular(
        (a, x, y, z) in algebra().prop_flat_map(|a| {
            let e = element(&a);
            (Just(a), e.clone(), e.clone(), e)
        })
    ) {
        let xy = a.mul(&x, &y);
        prop_assert_eq!(a.mul(&xy, &z), a.mul(&x, &a.mul(&y, &z)));
        prop_assert_eq!(a.left_mat(&xy), a.left_mat(&x).mul(&a.left_mat(&y)));
        let u = a.unit().unwrap();
        prop_assert_eq!(a.mul(u, &x), x.clone());
        prop_assert_eq!(a.mul(&x, u), x);
    }

    #[test]
    fn idempotent_core_is_idempotent(gens in mat(Q, 6, 2)) {
        let a = upper_triangular(Q, 3);
        let i = generated_ideal(&a, &gens);
        let core = idempotent_core(&a, &IdealWitness::new(i.clone(), Side::TwoSided)).unwrap();
        let c = &core.ideal.subspace;
        prop_assert!(i.contains_space(c));
        prop_assert!(same_space(&a.span_products(c, c), c));
        prop_assert!(core.iterations <= i.dim() + 1);
        prop_assert!(core.chain.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn ideals_are_algebras_with_unital_dorroh_extensions(gens in mat(Q, 6, 2)) {
        let a = upper_triangular(Q, 3);
        let i = generated_ideal(&a, &gens);
        let r = a.sub(&i, "I").unwrap();
        prop_assert!(validate(&r).ok());
        let hat = dorroh(&r);
        prop_assert!(hat.is_unital());
        prop_assert!(validate(&hat).ok());
        prop_assert_eq!(hat.dim(), r.dim() + 1);
        // A non-idempotent ideal is never firm.
        let fr = firmness(&r).unwrap();
        prop_assert!(fr.is_idempotent || !fr.is_firm);
    }

    #[test]
    fn free_modules_are_firm(a in algebra(), n in 1usize..3) {
        let m = Bimodule::free_right(&a, n);
        prop_assert!(validate_module(&m).ok());
        let t = tensor_over(&m, &a, &Bimodule::regular(&a)).unwrap();
        prop_assert_eq!(t.dim(), n * a.dim());
    }

    #[test]
    fn algebra_json_round_trips(a in algebra()) {
        let back = Algebra::from_json(&a.to_json()).unwrap();
        prop_assert_eq!(back.table(), a.table());
        prop_assert_eq!(back.unit(), a.unit());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn hopf_dual_rings_are_associative_and_catalogs_valid(n in 2usize..4) {
        let h = HopfAlgebra::cyclic_group(Q, n);
        let c = hopf_module_coring(&h).unwrap();
        prop_assert!(validate(&dual_ring(&c).unwrap().algebra).ok());
        for m in comodule_catalog(&c, &[], n).unwrap() {
            prop_assert!(validate_comodule(&m).passed());
        }
    }

    #[test]
    fn swapping_twice_is_the_identity(which in 0usize..2) {
        let ctx: MoritaContext = if which == 0 { projection_context(Q) } else { matrix_context(Q) };
        let back = swap(&swap(&ctx));
        prop_assert!(validate_context(&swap(&ctx)).unwrap().passed());
        prop_assert_eq!(back.wt, ctx.wt);
        prop_assert_eq!(back.bt, ctx.bt);
        prop_assert_eq!(back.p.dim(), ctx.p.dim());
    }
}
