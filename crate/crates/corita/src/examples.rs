//! The built-in examples, built in code, each with its full check suite.

use std::time::Instant;

use serde_json::json;

use crate::algebra::standard::{diagonal, ground, triangular_units, upper_triangular};
use crate::algebra::{firm_square, firmness, idempotent_core, Algebra, IdealWitness, Side};
use crate::bimodule::{catalog, Bimodule};
use crate::coring::{
    coring_from_firm_ideal, cosep_action, cosep_category_iso, coseparability_solve, extract_firm_ideal,
    firm_ideal_comparison, hopf_module_coring, hopf_regular_module, sweedler_coring, validate_coring, validate_hopf,
    verify_witness, Comodule, Coring, Coseparability, HopfAlgebra, Sweedler,
};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Mat, Subspace};
use crate::galois::{
    b_structure_theorem, comatrix, comatrix_unchecked, comodule_catalog, construct_r, corext_check,
    cosep_strong_structure, extension_context, galois_checks, validate_comatrix, CoringExtension, GaloisDatum,
};
use crate::morita::standard::{matrix_context, projection_context};
use crate::morita::{
    bar, discover_b, kato_ohtake_verify, moritafirm_checks, omegabeta_check, reduce_by_ideal, reduction_conditions,
    second_reduced, unit_map, validate_context, MoritaContext,
};
use crate::report::Report;

const Q: Field = Field::Rational;

pub const NAMES: [&str; 9] = [
    "trivial-coring",
    "projection-context",
    "matrix-context",
    "triangular-core",
    "sweedler-kxk",
    "separable-bimodule",
    "hopf-z2",
    "hopf-z3",
    "firm-ideal-coring",
];

/// Runs one example; the report carries its wall time for human output.
pub fn run(name: &str) -> Result<Report> {
    let start = Instant::now();
    let items = match name {
        "trivial-coring" => trivial_coring()?,
        "projection-context" => context_suite(&projection_context(Q))?,
        "matrix-context" => context_suite(&matrix_context(Q))?,
        "triangular-core" => triangular_core()?,
        "sweedler-kxk" => sweedler()?,
        "separable-bimodule" => separable_bimodule()?,
        "hopf-z2" => hopf(2)?,
        "hopf-z3" => hopf(3)?,
        "firm-ideal-coring" => firm_ideal()?,
        other => return Err(Error::Input(format!("unknown example \"{other}\""))),
    };
    Ok(Report::group(name, items).with_timing(start.elapsed()))
}

/// `A = k×k` over `B = k` through the diagonal, retraction onto the first factor.
pub fn sweedler_kxk(f: Field) -> Result<Sweedler> {
    let b = ground(f);
    let a = diagonal(f, 2);
    let iota = Mat::from_ints(f, &[&[1], &[1]]);
    let e = Mat::from_ints(f, &[&[1, 0]]);
    sweedler_coring(&b, &a, &iota, &e)
}

/// The grouplike `1 ⊗ 1` of a Sweedler coring as a comodule on `A`.
pub fn sweedler_comodule(sw: &Sweedler) -> Result<Comodule> {
    let c = &sw.coring;
    let u = c.a.unit().ok_or_else(|| Error::Hypotheses("A has no unit".into()))?;
    let one = sw.carrier.projection().mul(&u.kron(u));
    Comodule::grouplike(c, &one)
}

/// `k²` as a comodule over the comatrix coring of `k² ⊗ (k²)*` over `k`.
pub fn separable_comodule(f: Field) -> Result<Comodule> {
    let k = ground(f);
    let triv = Coring::trivial(&k)?;
    let sigma = Comodule::coinduced(&triv, &Bimodule::free_right(&k, 2))?;
    let pre = GaloisDatum::assemble(&sigma, ground(f), vec![Mat::identity(f, 2)])?;
    comatrix_unchecked(&pre)?.sigma.ok_or_else(|| Error::Invalid("comatrix has no comodule".into()))
}

/// The strictly upper triangular ideal of the upper triangular `n×n` matrices.
pub fn strictly_upper(n: usize) -> (Algebra, Subspace) {
    let a = upper_triangular(Q, n);
    let units = triangular_units(n);
    let rows: Vec<Vec<i64>> = units
        .iter()
        .filter(|(i, j)| i < j)
        .map(|u| units.iter().map(|v| i64::from(u == v)).collect())
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    (a, Subspace::from_rows(&Mat::from_ints(Q, &refs)))
}

pub fn cosep_suite(c: &Coring, comodules: &[Comodule]) -> Result<Report> {
    match coseparability_solve(c)? {
        Coseparability::Coseparable(w) => {
            let modules = comodules
                .iter()
                .map(|m| cosep_action(m, &w).map(|x| x.module))
                .collect::<Result<Vec<_>>>()?;
            Ok(Report::group(
                "coseparable",
                vec![verify_witness(c, &w), cosep_category_iso(c, &w, comodules, &modules)],
            ))
        }
        Coseparability::NotCoseparable { equations, unknowns, .. } => Ok(Report::unmet(
            "coseparable",
            format!("no cointegral: certificate over {equations} equations in {unknowns} unknowns"),
        )),
    }
}

pub fn galois_suite(sigma: &Comodule, comodules: &[Comodule], module_dim: usize) -> Result<Vec<Report>> {
    let con = construct_r(sigma)?;
    let mut items = vec![con.report.clone()];
    let cm = comatrix(&con.datum)?;
    let modules = catalog(&con.datum.r, module_dim);
    items.push(galois_checks(&cm, comodules, &modules)?);
    items.push(cosep_strong_structure(&cm, comodules, &modules)?);
    items.push(b_structure_theorem(sigma, comodules)?.report);
    Ok(items)
}

pub fn extension_suite(x: &CoringExtension, sigma: &Comodule, comodules: &[Comodule]) -> Result<Report> {
    let ec = extension_context(x, sigma, comodules)?;
    let modules = catalog(&x.c.a, 2 * x.c.a.dim());
    Ok(Report::group(
        format!("extension by {}", x.d.label),
        vec![ec.purity.clone(), validate_context(&ec.context)?, corext_check(x, sigma, &ec, &modules, comodules)?],
    )
    .with_fact("dim_Hom(D,T)", ec.context.a.dim())
    .with_fact("dim_End(C)", ec.context.ap.dim())
    .with_fact("dim_P", ec.context.p.dim())
    .with_fact("dim_Q", ec.context.q.dim()))
}

fn trivial_coring() -> Result<Vec<Report>> {
    let a = diagonal(Q, 2);
    let c = Coring::trivial(&a)?;
    let sigma = Comodule::regular(&c)?;
    let cat = comodule_catalog(&c, std::slice::from_ref(&sigma), 4)?;
    let mut items = vec![validate_coring(&c), cosep_suite(&c, &cat)?];
    items.extend(galois_suite(&sigma, &cat, 3)?);
    Ok(items)
}

pub fn context_suite(ctx: &MoritaContext) -> Result<Vec<Report>> {
    let b = discover_b(ctx)?;
    let red = reduce_by_ideal(ctx, &b)?;
    let barred = bar(ctx)?;
    let second = second_reduced(ctx, &b)?;
    let sc = &second.context;
    let u_item = match unit_map(sc)? {
        Some(u) => {
            let tau = sc.pq()?.carrier.descend(&sc.wt);
            Report::equal("τ∘u = id", &tau.mul(&u), &Mat::identity(Q, sc.a.dim()))
        }
        None => Report::unmet("τ∘u = id", "τ of the second-reduced context is not invertible"),
    };
    Ok(vec![
        validate_context(ctx)?,
        reduction_conditions(ctx, None)?,
        red.lemma.clone().with_fact("dim_B", b.dim()).with_fact("dim_W", red.w.subspace.dim()),
        kato_ohtake_verify(&red, &catalog(&red.context.a, 3), &catalog(&red.context.ap, 6))?,
        omegabeta_check(&barred, &catalog(&barred.a, 3))?,
        Report::group("second-reduced context", vec![validate_context(sc)?, u_item])
            .with_fact("tau_bijective", second.tau_bijective)
            .with_fact("sigma_bijective", second.sigma_bijective),
        moritafirm_checks(sc, &catalog(&sc.a, 3), &catalog(&sc.ap, 3))?,
    ])
}

fn triangular_core() -> Result<Vec<Report>> {
    let (a, n) = strictly_upper(3);
    let core = idempotent_core(&a, &IdealWitness::new(n.clone(), Side::TwoSided))?;
    let ring = a.sub(&n, "N")?;
    let nf = firmness(&ring)?;
    let sq = firm_square(&a)?;
    Ok(vec![
        Report::check("core = 0", core.ideal.subspace.dim() == 0, || json!({ "dim": core.ideal.subspace.dim() }))
            .with_fact("iterations", core.iterations)
            .with_fact("chain", core.chain.clone()),
        Report::check("N is neither idempotent nor firm", !nf.is_idempotent && !nf.is_firm, || {
            json!({ "idempotent": nf.is_idempotent, "firm": nf.is_firm })
        }),
        Report::check("A ⊗_A A is firm", firmness(&sq.algebra)?.is_firm, || json!(null)),
    ])
}

fn sweedler() -> Result<Vec<Report>> {
    let sw = sweedler_kxk(Q)?;
    let c = &sw.coring;
    let sigma = sweedler_comodule(&sw)?;
    let cat = comodule_catalog(c, std::slice::from_ref(&sigma), 4)?;
    let mut items = vec![validate_coring(c), verify_witness(c, &sw.witness), cosep_suite(c, &cat)?];
    items.extend(galois_suite(&sigma, &cat, 3)?);
    items.push(extension_suite(&CoringExtension::trivial(c)?, &sigma, &cat)?);
    Ok(items)
}

fn separable_bimodule() -> Result<Vec<Report>> {
    let sigma = separable_comodule(Q)?;
    let con = construct_r(&sigma)?;
    let cm = comatrix(&con.datum)?;
    let cat = comodule_catalog(&sigma.coring, std::slice::from_ref(&sigma), 4)?;
    let modules = catalog(&con.datum.r, 3);
    Ok(vec![
        validate_coring(&sigma.coring),
        con.report.clone(),
        validate_comatrix(&cm),
        Report::check("can = identity", cm.can.is_identity(), || json!(cm.can.to_json())),
        cosep_suite(&sigma.coring, &cat)?,
        galois_checks(&cm, &cat, &modules)?,
        cosep_strong_structure(&cm, &cat, &modules)?,
    ])
}

fn hopf(n: usize) -> Result<Vec<Report>> {
    let h = HopfAlgebra::cyclic_group(Q, n);
    let c = hopf_module_coring(&h)?;
    let sigma = hopf_regular_module(&h, &c)?;
    let cat = comodule_catalog(&c, std::slice::from_ref(&sigma), 2 * n)?;
    let mut items = vec![validate_hopf(&h), validate_coring(&c), cosep_suite(&c, &cat)?];
    items.extend(galois_suite(&sigma, &cat, 2)?);
    items.push(extension_suite(&CoringExtension::hopf(&h, &c)?, &sigma, &cat)?);
    Ok(items)
}

fn firm_ideal() -> Result<Vec<Report>> {
    let a = diagonal(Q, 2);
    let s = Subspace::from_rows(&Mat::from_ints(Q, &[&[1, 0]]));
    let fic = coring_from_firm_ideal(&a, &IdealWitness::new(s.clone(), Side::TwoSided))?;
    let ex = extract_firm_ideal(&fic.coring)?;
    let recovered = ex.d.as_ref() == Some(&fic.d);
    let modules = catalog(&fic.ring, 2);
    let comodules = comodule_catalog(&fic.coring, &[], 2)?;
    Ok(vec![
        validate_coring(&fic.coring),
        Report::equal("counit = inclusion", &fic.coring.eps, &s.inclusion()),
        ex.report.clone(),
        Report::check("extractor recovers d_R", recovered, || json!(null)),
        firm_ideal_comparison(&fic, &modules, &comodules),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_example_passes() {
        for name in NAMES {
            let r = run(name).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn triangular_core_takes_three_iterations() {
        let r = run("triangular-core").unwrap();
        let core = r.find("core = 0").unwrap();
        assert_eq!(core.facts["iterations"], json!(3));
        assert_eq!(core.facts["chain"], json!([3, 1, 0]));
    }

    #[test]
    fn unknown_example_is_an_input_error() {
        assert!(matches!(run("nope"), Err(Error::Input(_))));
    }
}
