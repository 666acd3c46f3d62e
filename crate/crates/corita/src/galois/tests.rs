use super::*;
use crate::algebra::standard::{diagonal, ground};
use crate::coring::{hopf_module_coring, hopf_regular_module, HopfAlgebra};
use crate::morita::validate_context;

const Q: Field = Field::Rational;

fn sweedler_sigma() -> Comodule {
    let sw = crate::coring::tests::sweedler_kxk();
    let c = &sw.coring;
    let u = c.a.unit().unwrap().clone();
    let one = sw.carrier.projection().mul(&u.kron(&u));
    Comodule::grouplike(c, &one).unwrap()
}

fn hopf(n: usize) -> (Coring, Comodule) {
    let h = HopfAlgebra::cyclic_group(Q, n);
    let c = hopf_module_coring(&h).unwrap();
    let s = hopf_regular_module(&h, &c).unwrap();
    (c, s)
}

#[test]
fn sweedler_grouplike_is_galois() {
    let sigma = sweedler_sigma();
    let con = construct_r(&sigma).unwrap();
    assert_eq!(con.datum.r.dim(), 1);
    assert!(validate_datum(&con.datum).passed(), "{}", validate_datum(&con.datum));
    let cm = comatrix(&con.datum).unwrap();
    assert!(is_iso(&cm.can));
    let cat = comodule_catalog(&sigma.coring, std::slice::from_ref(&sigma), 4).unwrap();
    let mods = crate::bimodule::catalog(&con.datum.r, 3);
    let rep = galois_checks(&cm, &cat, &mods).unwrap();
    assert!(rep.passed(), "{rep}");
    let cs = cosep_strong_structure(&cm, &cat, &mods).unwrap();
    assert!(cs.passed(), "{cs}");
}

#[test]
fn hopf_regular_module_is_galois() {
    let (c, sigma) = hopf(2);
    let con = construct_r(&sigma).unwrap();
    assert_eq!(con.datum.r.dim(), 1);
    let cm = comatrix(&con.datum).unwrap();
    assert_eq!(cm.can.rank(), 4);
    let cat = comodule_catalog(&c, std::slice::from_ref(&sigma), 8).unwrap();
    assert!(cat.len() >= 4);
    let mods = crate::bimodule::catalog(&con.datum.r, 2);
    let rep = galois_checks(&cm, &cat, &mods).unwrap();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn separable_bimodule_can_is_identity() {
    let k = ground(Q);
    let triv = Coring::trivial(&k).unwrap();
    let m = Bimodule::free_right(&k, 2);
    let sigma = Comodule::coinduced(&triv, &m).unwrap();
    let pre = GaloisDatum::assemble(&sigma, ground(Q), vec![id(Q, 2)]).unwrap();
    let cm0 = comatrix_unchecked(&pre).unwrap();
    assert_eq!(cm0.coring.dim(), 4);
    let s = cm0.sigma.unwrap();
    let con = construct_r(&s).unwrap();
    assert_eq!(con.datum.r.dim(), 1);
    let cm = comatrix(&con.datum).unwrap();
    assert!(cm.can.is_identity(), "{}", cm.can);
}

#[test]
fn trivial_coring_recovers_the_ring() {
    let a = diagonal(Q, 2);
    let c = Coring::trivial(&a).unwrap();
    let sigma = Comodule::regular(&c).unwrap();
    let con = construct_r(&sigma).unwrap();
    assert_eq!(con.datum.r.dim(), 2);
    assert!(con.datum.r.is_unital());
    let cm = comatrix(&con.datum).unwrap();
    assert!(is_iso(&cm.can));
}

#[test]
fn zero_comodule_gives_zero_datum() {
    let (c, _) = hopf(2);
    let zero = Bimodule::zero(Q, None, Some(&c.a));
    let sigma = Comodule::coinduced(&c, &zero).unwrap();
    let con = construct_r(&sigma).unwrap();
    assert!(con.datum.is_zero());
    assert_eq!(validate_datum(&con.datum).verdict, crate::report::Verdict::HypothesesUnmet);
    let cm = comatrix(&con.datum).unwrap();
    assert_eq!(cm.coring.dim(), 0);
    assert_eq!(cm.can.rank(), 0);
}

#[test]
fn comodule_contexts_are_valid() {
    let sigma = sweedler_sigma();
    let sc = context_sigma(&sigma).unwrap();
    let v = validate_context(&sc.context).unwrap();
    assert!(v.passed(), "{v}");
    let (_, h) = hopf(2);
    let hc = context_sigma(&h).unwrap();
    assert!(validate_context(&hc.context).unwrap().passed());
    let a = diagonal(Q, 2);
    let mc = context_a_mod(&Bimodule::free_right(&a, 2)).unwrap();
    assert!(validate_context(&mc.context).unwrap().passed());
    assert_eq!(mc.context.a.dim(), 8);
}

#[test]
fn two_hopf_modules_give_natural_isomorphism() {
    let (c, h) = hopf(2);
    let hh = h.direct_sum(&h).unwrap();
    let cat = vec![h.clone(), Comodule::regular(&c).unwrap()];
    let two = two_comodule_context(&h, &hh, None, &cat).unwrap();
    assert!(two.report.passed(), "{}", two.report);
    assert!(two.b.dim() > 0);
}

#[test]
fn corner_module_is_not_galois() {
    let a = diagonal(Q, 2);
    let c = Coring::trivial(&a).unwrap();
    let e0 = Mat::from_ints(Q, &[&[1], &[0]]);
    let m = Bimodule::right_regular(&a).submodule(&Subspace::from_cols(&e0), "e0A").unwrap();
    let sigma = Comodule::coinduced(&c, &m).unwrap();
    let con = construct_r(&sigma).unwrap();
    assert_eq!(con.datum.r.dim(), 1);
    let cm = comatrix(&con.datum).unwrap();
    assert_eq!(cm.can.rank(), 1);
    let cat = comodule_catalog(&c, std::slice::from_ref(&sigma), 4).unwrap();
    let mods = crate::bimodule::catalog(&con.datum.r, 2);
    let rep = galois_checks(&cm, &cat, &mods).unwrap();
    assert!(rep.passed(), "{rep}");
    assert_eq!(rep.facts["can_iso"], json!(false));
    let cs = cosep_strong_structure(&cm, &cat, &mods).unwrap();
    assert!(cs.passed(), "{cs}");
    assert_eq!(cs.find("(iii) counits bijective").unwrap().facts["holds"], json!(false));
    println!("{rep}\n{cs}");
}

#[test]
fn b_structure_on_sweedler_and_hopf() {
    let sigma = sweedler_sigma();
    let cat = comodule_catalog(&sigma.coring, std::slice::from_ref(&sigma), 4).unwrap();
    let bs = b_structure_theorem(&sigma, &cat).unwrap();
    assert!(bs.report.passed(), "{}", bs.report);
    assert!(bs.comodule.is_some());
    let (c, h) = hopf(2);
    let cat = comodule_catalog(&c, std::slice::from_ref(&h), 8).unwrap();
    let bs = b_structure_theorem(&h, &cat).unwrap();
    assert!(bs.report.passed(), "{}", bs.report);
}

#[test]
fn b_structure_of_zero_fails_at_density() {
    let (c, _) = hopf(2);
    let zero = Comodule::coinduced(&c, &Bimodule::zero(Q, None, Some(&c.a))).unwrap();
    let bs = b_structure_theorem(&zero, &[]).unwrap();
    assert_eq!(bs.b.dim(), 0);
    let cond = bs.report.find("B = *C").unwrap();
    assert_eq!(cond.facts["holds"], json!(false));
    assert_eq!(bs.report.find("structure").unwrap().verdict, crate::report::Verdict::HypothesesUnmet);
}

#[test]
fn b_structure_of_trivial_coring() {
    let a = diagonal(Q, 2);
    let c = Coring::trivial(&a).unwrap();
    let sigma = Comodule::regular(&c).unwrap();
    let cat = comodule_catalog(&c, std::slice::from_ref(&sigma), 4).unwrap();
    let bs = b_structure_theorem(&sigma, &cat).unwrap();
    assert_eq!(bs.b.dim(), 2);
    assert!(bs.report.passed(), "{}", bs.report);
}

#[test]
fn trivial_extension_collapses_to_the_comodule_context() {
    let (c, sigma) = hopf(2);
    let x = CoringExtension::trivial(&c).unwrap();
    let cat = comodule_catalog(&c, std::slice::from_ref(&sigma), 4).unwrap();
    let ec = extension_context(&x, &sigma, &cat).unwrap();
    let base = &ec.base.context;
    let ctx = &ec.context;
    assert_eq!(ctx.a.dim(), base.a.dim());
    assert_eq!(ctx.ap.dim(), base.ap.dim());
    assert_eq!(ctx.p.dim(), base.p.dim());
    assert_eq!(ctx.q.dim(), base.q.dim());
    let v = validate_context(ctx).unwrap();
    assert!(v.passed(), "{v}");
}

#[test]
fn hopf_extension_context_and_corext() {
    let h = HopfAlgebra::cyclic_group(Q, 2);
    let (c, sigma) = hopf(2);
    let x = CoringExtension::hopf(&h, &c).unwrap();
    let cat = comodule_catalog(&c, std::slice::from_ref(&sigma), 4).unwrap();
    let ec = extension_context(&x, &sigma, &cat).unwrap();
    assert!(ec.purity.passed());
    let ctx = &ec.context;
    assert_eq!((ctx.a.dim(), ctx.p.dim()), (2, 2));
    let v = validate_context(ctx).unwrap();
    assert!(v.passed(), "{v}");
    let mods = crate::bimodule::catalog(&c.a, 4);
    let rep = corext_check(&x, &sigma, &ec, &mods, &cat).unwrap();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn trivial_extension_corext_on_sweedler() {
    let sigma = sweedler_sigma();
    let x = CoringExtension::trivial(&sigma.coring).unwrap();
    let cat = comodule_catalog(&sigma.coring, std::slice::from_ref(&sigma), 4).unwrap();
    let ec = extension_context(&x, &sigma, &cat).unwrap();
    let mods = crate::bimodule::catalog(&sigma.coring.a, 4);
    let rep = corext_check(&x, &sigma, &ec, &mods, &cat).unwrap();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn zero_comodule_gives_zero_extension_context() {
    let (c, _) = hopf(2);
    let zero = Bimodule::zero(Q, None, Some(&c.a));
    let sigma = Comodule::coinduced(&c, &zero).unwrap();
    let x = CoringExtension::trivial(&c).unwrap();
    let ec = extension_context(&x, &sigma, &[]).unwrap();
    assert_eq!((ec.context.a.dim(), ec.context.p.dim(), ec.context.q.dim()), (0, 0, 0));
    let mods = crate::bimodule::catalog(&c.a, 2);
    let rep = corext_check(&x, &sigma, &ec, &mods, &[]).unwrap();
    assert_eq!(rep.verdict, crate::report::Verdict::HypothesesUnmet);
}

#[test]
fn broken_coaction_is_rejected() {
    let (c, _) = hopf(2);
    let d = Coring::trivial(&ground(Q)).unwrap();
    assert!(CoringExtension::new(&c, &d, id(Q, 4).scale(&Q.int(2))).is_err());
}
