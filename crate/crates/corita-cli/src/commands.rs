//! One report per subcommand.

use corita::algebra::{firm_square, firmness, has_right_local_units, radical_char0, validate, Algebra, Side};
use corita::bimodule::{
    catalog, is_faithfully_flat, is_projective, left_module_firmness, module_firmness, validate_module, Bimodule,
};
use corita::coring::{
    cosep_action, cosep_category_iso, coseparability_solve, dual_ring, validate_comodule, validate_coring, Comodule,
    Coring, Coseparability,
};
use corita::examples::{extension_suite, galois_suite};
use corita::exactlin::{Mat, Subspace};
use corita::galois::{
    b_structure_theorem, comatrix, comodule_catalog, cosep_strong_structure, galois_checks, validate_datum,
    CoringExtension,
};
use corita::morita::{
    bar, discover_b, image_rings, kato_ohtake_verify, omegabeta_check, reduce_by_ideal, reduction_conditions,
    validate_context, MoritaContext, ReducedContext,
};
use corita::report::Report;
use corita::{Error, Result};
use serde_json::{json, Value};

/// A report and, for commands that build something, its JSON.
pub struct Outcome {
    pub report: Report,
    pub result: Option<Value>,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome { report, result: None }
    }
}

/// Maximum dimensions for generated catalogs.
#[derive(Clone, Copy, Debug)]
pub struct Catalog {
    pub modules: usize,
    pub comodules: Option<usize>,
}

impl Catalog {
    pub fn parse(s: &str) -> Result<Catalog> {
        match s {
            "default" => Ok(Catalog { modules: 3, comodules: None }),
            _ => {
                let n = s
                    .strip_prefix("dim:")
                    .and_then(|n| n.parse().ok())
                    .ok_or_else(|| Error::Input(format!("catalog must be \"default\" or \"dim:N\", got \"{s}\"")))?;
                Ok(Catalog { modules: n, comodules: Some(n) })
            }
        }
    }

    fn comodules(&self, coring: &Coring, seeds: &[Comodule]) -> Result<Vec<Comodule>> {
        let largest = seeds.iter().map(Comodule::dim).max().unwrap_or(1);
        let dim = self.comodules.unwrap_or((2 * largest).max(coring.dim()));
        comodule_catalog(coring, seeds, dim)
    }
}

pub fn check_ring(a: &Algebra) -> Result<Outcome> {
    let v = validate(a);
    let fr = firmness(a)?;
    let lu = has_right_local_units(a);
    let square = if fr.is_idempotent {
        let sq = firm_square(a)?;
        Report::check("R ⊗_R R is firm", firmness(&sq.algebra)?.is_firm, || json!({ "dim": sq.algebra.dim() }))
    } else {
        Report::unmet("R ⊗_R R is firm", "R is not idempotent")
    };
    let mut report = Report::group(
        format!("ring {}", a.label),
        vec![
            Report::check("associativity and unit", v.ok(), || {
                json!({ "triples": v.failing_triples, "unit_ok": v.unit_ok })
            }),
            square,
        ],
    )
    .with_fact("dim", a.dim())
    .with_fact("unital", a.is_unital())
    .with_fact("idempotent", fr.is_idempotent)
    .with_fact("firm", fr.is_firm)
    .with_fact("local-units", lu.exists);
    if a.field().characteristic() == 0 {
        let rad = radical_char0(a)?;
        report = report.with_fact("radical_dim", rad.radical.dim()).with_fact("semisimple", rad.radical.dim() == 0);
    }
    Ok(report.into())
}

pub fn check_module(m: &Bimodule) -> Result<Outcome> {
    let v = validate_module(m);
    let mut report = Report::group(
        format!("module {}", m.label),
        vec![Report::check("module axioms", v.ok(), || json!(v.failures))],
    )
    .with_fact("dim", m.dim());
    if v.ok() {
        if let Some(act) = &m.right {
            report = report.with_fact("firm", module_firmness(m, &act.algebra)?.is_firm);
            if act.algebra.is_unital() {
                report = report.with_fact("projective", is_projective(m, Side::Right)?);
            }
        }
        if let Some(act) = &m.left {
            report = report.with_fact("left-firm", left_module_firmness(m, &act.algebra)?.is_firm);
            if act.algebra.is_unital() {
                let left = m.clone().forget_right();
                report = report.with_fact("left-projective", is_projective(&left, Side::Left)?);
                if m.field().characteristic() == 0 {
                    report = report.with_fact("faithfully-flat", is_faithfully_flat(&left)?.faithfully_flat);
                }
            }
        }
    }
    Ok(report.into())
}

pub fn check_context(ctx: &MoritaContext) -> Result<Outcome> {
    let (a, ap) = image_rings(ctx)?;
    let report = Report::group(
        format!("context {}", ctx.label),
        vec![validate_context(ctx)?, reduction_conditions(ctx, None)?],
    )
    .with_fact("dim_PτQ", a.subspace.dim())
    .with_fact("dim_QσP", ap.subspace.dim());
    Ok(report.into())
}

fn reduced(ctx: &MoritaContext, b: &Subspace) -> Result<(ReducedContext, Report)> {
    let red = reduce_by_ideal(ctx, b)?;
    let report = Report::group(
        format!("{}-reduced context", ctx.label),
        vec![red.lemma.clone(), validate_context(&red.context)?],
    )
    .with_fact("dim_B", red.b.subspace.dim())
    .with_fact("dim_W", red.w.subspace.dim())
    .with_fact("tau-surjective", red.tau_surjective)
    .with_fact("tau-bijective", red.tau_bijective)
    .with_fact("sigma-surjective", red.sigma_surjective)
    .with_fact("sigma-bijective", red.sigma_bijective);
    Ok((red, report))
}

pub fn reduce_context(ctx: &MoritaContext, b: &Subspace) -> Result<Outcome> {
    let (red, report) = reduced(ctx, b)?;
    Ok(Outcome { report, result: Some(red.context.to_json()) })
}

pub fn kato_ohtake(ctx: &MoritaContext, b: &Subspace, cat: Catalog) -> Result<Outcome> {
    let (red, reduction) = reduced(ctx, b)?;
    let barred = bar(ctx)?;
    let n = cat.modules;
    let report = Report::group(
        format!("Kato–Ohtake for {}", ctx.label),
        vec![
            reduction,
            kato_ohtake_verify(&red, &catalog(&red.context.a, n), &catalog(&red.context.ap, 2 * n))?,
            omegabeta_check(&barred, &catalog(&barred.a, n))?,
        ],
    );
    Ok(report.into())
}

pub fn ideal(ctx: &MoritaContext, name: &str, named: &std::collections::BTreeMap<String, Subspace>) -> Result<Subspace> {
    if name == "auto" {
        return discover_b(ctx);
    }
    named.get(name).cloned().ok_or_else(|| Error::Input(format!("no ideal named \"{name}\" in the file")))
}

pub fn check_coring(c: &Coring) -> Result<Outcome> {
    let cosep = matches!(coseparability_solve(c)?, Coseparability::Coseparable(_));
    let report = Report::group(format!("coring {}", c.label), vec![validate_coring(c)])
        .with_fact("dim", c.dim())
        .with_fact("dim_*C", dual_ring(c)?.algebra.dim())
        .with_fact("coseparable", cosep);
    Ok(report.into())
}

pub fn coseparable(c: &Coring, seeds: &[Comodule], cat: Catalog) -> Result<Outcome> {
    match coseparability_solve(c)? {
        Coseparability::Coseparable(w) => {
            let comodules = cat.comodules(c, seeds)?;
            let modules = comodules
                .iter()
                .map(|m| cosep_action(m, &w).map(|x| x.module))
                .collect::<Result<Vec<_>>>()?;
            let report = Report::group(
                format!("coseparability of {}", c.label),
                vec![corita::coring::verify_witness(c, &w), cosep_category_iso(c, &w, &comodules, &modules)],
            )
            .with_fact("coseparable", true);
            Ok(Outcome { report, result: Some(json!({ "gamma": w.gamma.to_json(), "mu": w.mu.to_json() })) })
        }
        Coseparability::NotCoseparable { equations, unknowns, certificate } => {
            let report = Report::group(format!("coseparability of {}", c.label), vec![])
                .with_detail("no cointegral; the certificate y has y·system = 0 and y·rhs = 1")
                .with_fact("coseparable", false)
                .with_fact("equations", equations)
                .with_fact("unknowns", unknowns);
            Ok(Outcome { report, result: Some(json!({ "certificate": certificate.to_json() })) })
        }
    }
}

pub fn galois(sigma: &Comodule, seeds: &[Comodule], datum: Option<&Value>, cat: Catalog) -> Result<Outcome> {
    let comodules = cat.comodules(&sigma.coring, &with_sigma(sigma, seeds))?;
    let mut items = vec![validate_comodule(sigma)];
    match datum {
        None => items.extend(galois_suite(sigma, &comodules, cat.modules)?),
        Some(v) => {
            let d = crate::load::datum(v, sigma)?;
            items.push(validate_datum(&d));
            let cm = comatrix(&d)?;
            let modules = catalog(&d.r, cat.modules);
            items.push(galois_checks(&cm, &comodules, &modules)?);
            items.push(cosep_strong_structure(&cm, &comodules, &modules)?);
        }
    }
    Ok(Report::group(format!("Galois comodule {}", sigma.label), items).into())
}

pub fn b_structure(sigma: &Comodule, seeds: &[Comodule], cat: Catalog) -> Result<Outcome> {
    let comodules = cat.comodules(&sigma.coring, &with_sigma(sigma, seeds))?;
    Ok(b_structure_theorem(sigma, &comodules)?.report.into())
}

pub fn extension(x: &CoringExtension, sigma: &Comodule, seeds: &[Comodule], cat: Catalog) -> Result<Outcome> {
    let comodules = cat.comodules(&x.c, &with_sigma(sigma, seeds))?;
    Ok(extension_suite(x, sigma, &comodules)?.into())
}

fn with_sigma(sigma: &Comodule, seeds: &[Comodule]) -> Vec<Comodule> {
    let mut out = vec![sigma.clone()];
    out.extend(seeds.iter().cloned());
    out
}

pub fn extension_input(v: &Value, c: &Coring) -> Result<CoringExtension> {
    let d = Coring::from_json(&v["D"])?;
    let rho = Mat::from_json(&v["rho"], c.field())?;
    CoringExtension::new(c, &d, rho)
}
