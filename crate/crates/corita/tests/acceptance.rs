//! Acceptance criteria 1 to 11, one line each. Every comparison is exact
//! rational arithmetic: the tolerance is zero throughout.

use std::process::ExitCode;
use std::time::Instant;

use corita::algebra::standard::{cyclic_group, diagonal, dual_numbers, ground, matrix, upper_triangular};
use corita::algebra::{firm_square, firmness, idempotent_core, Algebra, IdealWitness, Side};
use corita::bimodule::catalog;
use corita::coring::{
    comodule_end, coring_from_firm_ideal, cosep_action, cosep_category_iso, cosep_tensor_iso, coseparability_solve,
    extract_firm_ideal, firm_ideal_comparison, hopf_module_coring, hopf_regular_module, validate_coring, Comodule,
    Coseparability, HopfAlgebra, LeftComodule,
};
use corita::examples::{self, separable_comodule, strictly_upper, sweedler_comodule, sweedler_kxk};
use corita::exactlin::{Field, Mat, Subspace};
use corita::galois::{comatrix, comodule_catalog, construct_r, cosep_strong_structure, galois_checks};
use corita::morita::standard::{matrix_context, projection_context};
use corita::morita::{
    discover_b, kato_ohtake_verify, omegabeta_check, reduce_by_ideal, second_reduced, unit_map, MoritaContext,
};
use corita::report::Report;
use corita::Result;
use serde_json::Value;

const Q: Field = Field::Rational;

/// Verdict and a short summary of what was observed.
type Outcome = Result<(bool, String)>;

type Criterion = (&'static str, fn() -> Outcome);

/// Firmness by counting: `R ⊗_R R` is `R ⊗ R` modulo `xy ⊗ z - x ⊗ yz`, and the
/// multiplication map onto `R` is bijective iff `R² = R` and the quotient has dim `R`.
fn firm_by_counting(a: &Algebra) -> bool {
    let d = a.dim();
    let e = |i: usize| Mat::unit_column(Q, d, i);
    let mut relations = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let xy = a.mul(&e(i), &e(j));
            for l in 0..d {
                let yz = a.mul(&e(j), &e(l));
                relations.push(xy.kron(&e(l)).sub(&e(i).kron(&yz)));
            }
        }
    }
    let refs: Vec<&Mat> = relations.iter().collect();
    let rank = if refs.is_empty() { 0 } else { Mat::hstack(&refs, Q, d * d).rank() };
    let products: Vec<Mat> = (0..d * d).map(|k| a.mul(&e(k / d), &e(k % d))).collect();
    let prefs: Vec<&Mat> = products.iter().collect();
    let square_rank = if prefs.is_empty() { 0 } else { Mat::hstack(&prefs, Q, d).rank() };
    square_rank == d && d * d - rank == d
}

/// The span of products `x·y` with `x ∈ s`, `y ∈ t`, from the multiplication table.
fn product_span(a: &Algebra, s: &Subspace, t: &Subspace) -> Subspace {
    let (si, ti) = (s.inclusion(), t.inclusion());
    let mut cols = Vec::new();
    for i in 0..si.cols() {
        for j in 0..ti.cols() {
            cols.push(a.mul(&si.col(i), &ti.col(j)));
        }
    }
    if cols.is_empty() {
        return Subspace::zero(Q, a.dim());
    }
    let refs: Vec<&Mat> = cols.iter().collect();
    Subspace::from_cols(&Mat::hstack(&refs, Q, a.dim()))
}

fn idempotent_catalog() -> Result<Vec<Algebra>> {
    let m2 = matrix(Q, 2);
    // e11 and e21 span M2·e11; e11 and e12 span e11·M2.
    let columns = Subspace::from_rows(&Mat::from_ints(Q, &[&[1, 0, 0, 0], &[0, 0, 1, 0]]));
    let rows = Subspace::from_rows(&Mat::from_ints(Q, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]));
    Ok(vec![
        ground(Q),
        diagonal(Q, 3),
        matrix(Q, 2),
        matrix(Q, 3),
        upper_triangular(Q, 3),
        cyclic_group(Q, 3),
        dual_numbers(Q),
        m2.sub(&columns, "M2·e11")?,
        m2.sub(&rows, "e11·M2")?,
    ])
}

fn firm_square_law() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for a in idempotent_catalog()? {
        if !firmness(&a)?.is_idempotent || a.dim() > 9 {
            continue;
        }
        checked += 1;
        let sq = firm_square(&a)?.algebra;
        if !firmness(&sq)?.is_firm || !firm_by_counting(&sq) {
            bad.push(a.label.clone());
        }
    }
    Ok((checked >= 6 && bad.is_empty(), format!("{checked} idempotent algebras, failures {bad:?}")))
}

fn idempotent_core_oracle() -> Outcome {
    let (a, n) = strictly_upper(3);
    let core = idempotent_core(&a, &IdealWitness::new(n.clone(), Side::TwoSided))?;
    let mut powers = vec![n.dim()];
    let mut p = n.clone();
    while p.dim() > 0 {
        p = product_span(&a, &p, &n);
        powers.push(p.dim());
    }
    let ok = core.ideal.subspace.dim() == 0 && core.iterations == 3 && core.chain == powers;
    Ok((ok, format!("{} iterations, chain {:?}, powers I^n {:?}", core.iterations, core.chain, powers)))
}

fn contexts() -> Vec<MoritaContext> {
    vec![projection_context(Q), matrix_context(Q)]
}

fn kato_ohtake_round_trips() -> Outcome {
    let mut ok = true;
    let mut seen = Vec::new();
    for ctx in contexts() {
        let red = reduce_by_ideal(&ctx, &discover_b(&ctx)?)?;
        let cat_w = catalog(&red.context.a, 6);
        let cat_b = catalog(&red.context.ap, 6);
        let rep = kato_ohtake_verify(&red, &cat_w, &cat_b)?;
        ok &= rep.passed() && red.tau_bijective && red.sigma_bijective;
        seen.push(format!("{}: {} objects", ctx.label, cat_w.len() + cat_b.len()));
    }
    Ok((ok, format!("{}; ω̄ and β̄ bijective", seen.join(", "))))
}

fn omegabeta_table() -> Outcome {
    let ctx = projection_context(Q);
    let red = reduce_by_ideal(&ctx, &discover_b(&ctx)?)?;
    let rep = omegabeta_check(&red.context, &catalog(&red.context.a, 3))?;
    let firm: Vec<bool> = rep.items.iter().filter_map(|r| r.facts.get("firm").and_then(Value::as_bool)).collect();
    let (yes, no) = (firm.iter().filter(|&&f| f).count(), firm.iter().filter(|&&f| !f).count());
    Ok((rep.passed() && yes >= 1 && no >= 1, format!("{} rows, {yes} firm, {no} not firm", firm.len())))
}

fn sweedler_descent() -> Outcome {
    let sw = sweedler_kxk(Q)?;
    let sigma = sweedler_comodule(&sw)?;
    let witness = matches!(coseparability_solve(&sw.coring)?, Coseparability::Coseparable(_));
    let end_dim = comodule_end(&sigma)?.dim();
    let con = construct_r(&sigma)?;
    let cm = comatrix(&con.datum)?;
    let comodules = comodule_catalog(&sw.coring, std::slice::from_ref(&sigma), 4)?;
    let modules = catalog(&con.datum.r, 3);
    let rep = cosep_strong_structure(&cm, &comodules, &modules)?;
    Ok((
        witness && end_dim == 1 && rep.passed(),
        format!("witness {witness}, dim End^C(A) = {end_dim}, {} modules up to dim 3", modules.len()),
    ))
}

fn hopf_fundamental_theorem() -> Outcome {
    let h = HopfAlgebra::cyclic_group(Q, 2);
    let c = hopf_module_coring(&h)?;
    let sigma = hopf_regular_module(&h, &c)?;
    let con = construct_r(&sigma)?;
    let cm = comatrix(&con.datum)?;
    let comodules = comodule_catalog(&c, std::slice::from_ref(&sigma), 4)?;
    let modules = catalog(&con.datum.r, 2);
    let g = galois_checks(&cm, &comodules, &modules)?;
    let s = cosep_strong_structure(&cm, &comodules, &modules)?;
    let (rows, cols, rank) = (cm.can.rows(), cm.can.cols(), cm.can.rank());
    let ok = con.datum.r.dim() == 1 && rows == 4 && cols == 4 && rank == 4 && comodules.len() >= 4;
    Ok((
        ok && g.passed() && s.passed(),
        format!("can {rows}×{cols} of rank {rank}, {} Hopf modules", comodules.len()),
    ))
}

/// The coseparable examples: Sweedler `k ⊆ k×k`, the separable comatrix and `Q[Z/2]`.
fn coseparable_examples() -> Result<Vec<(String, Comodule, Vec<Comodule>)>> {
    let sw = sweedler_kxk(Q)?;
    let s1 = sweedler_comodule(&sw)?;
    let s2 = separable_comodule(Q)?;
    let h = HopfAlgebra::cyclic_group(Q, 2);
    let hc = hopf_module_coring(&h)?;
    let s3 = hopf_regular_module(&h, &hc)?;
    Ok(vec![
        ("sweedler".into(), s1.clone(), comodule_catalog(&sw.coring, &[s1], 4)?),
        ("separable".into(), s2.clone(), comodule_catalog(&s2.coring, std::slice::from_ref(&s2), 4)?),
        ("hopf-z2".into(), s3.clone(), comodule_catalog(&hc, &[s3], 4)?),
    ])
}

fn coseparable_isomorphism() -> Outcome {
    let mut ok = true;
    let mut seen = Vec::new();
    for (name, sigma, comodules) in coseparable_examples()? {
        let c = &sigma.coring;
        let Coseparability::Coseparable(w) = coseparability_solve(c)? else {
            ok = false;
            seen.push(format!("{name}: not coseparable"));
            continue;
        };
        let modules = comodules.iter().map(|m| cosep_action(m, &w).map(|x| x.module)).collect::<Result<Vec<_>>>()?;
        let iso = cosep_category_iso(c, &w, &comodules, &modules);
        let left = LeftComodule::regular(c)?;
        let tensors = comodules.iter().map(|p| cosep_tensor_iso(p, &left, &w)).collect::<Result<Vec<_>>>()?;
        ok &= iso.passed() && tensors.iter().all(Report::passed);
        seen.push(format!("{name}: {} comodules", comodules.len()));
    }
    Ok((ok, seen.join(", ")))
}

fn moritafirm_unit() -> Outcome {
    let mut ok = true;
    let mut seen = Vec::new();
    for ctx in contexts() {
        let sc = second_reduced(&ctx, &discover_b(&ctx)?)?.context;
        match unit_map(&sc)? {
            Some(u) => {
                let tau = sc.pq()?.carrier.descend(&sc.wt);
                let id = tau.mul(&u).is_identity();
                ok &= id;
                seen.push(format!("{}: τ∘u = I_{} {id}", ctx.label, sc.a.dim()));
            }
            None => {
                ok = false;
                seen.push(format!("{}: no u", ctx.label));
            }
        }
    }
    Ok((ok, seen.join(", ")))
}

fn firm_ideal_round_trip() -> Outcome {
    let a = diagonal(Q, 2);
    let s = Subspace::from_rows(&Mat::from_ints(Q, &[&[1, 0]]));
    let fic = coring_from_firm_ideal(&a, &IdealWitness::new(s.clone(), Side::TwoSided))?;
    let valid = validate_coring(&fic.coring).passed();
    let counit = fic.coring.eps == s.inclusion();
    let recovered = extract_firm_ideal(&fic.coring)?.d.as_ref() == Some(&fic.d);
    let mut modules = catalog(&fic.ring, 2);
    modules.truncate(4);
    let mut comodules = comodule_catalog(&fic.coring, &[], 2)?;
    comodules.truncate(4);
    let cmp = firm_ideal_comparison(&fic, &modules, &comodules);
    Ok((
        valid && counit && recovered && cmp.passed(),
        format!("counit = inclusion {counit}, d_R recovered {recovered}, {}+{} objects", modules.len(), comodules.len()),
    ))
}

fn holds(r: &Report, name: &str) -> Option<bool> {
    r.find(name)?.facts.get("holds")?.as_bool()
}

fn implication_chain() -> Outcome {
    let mut ok = true;
    let mut seen = Vec::new();
    for (name, sigma, comodules) in coseparable_examples()? {
        let con = construct_r(&sigma)?;
        let cm = comatrix(&con.datum)?;
        let modules = catalog(&con.datum.r, 3);
        let rep = cosep_strong_structure(&cm, &comodules, &modules)?;
        let surj = cm.can.rank() == cm.can.rows();
        let bij = surj && cm.can.rows() == cm.can.cols();
        let reported = holds(&rep, "(i) can surjective") == Some(surj) && holds(&rep, "(ii) can bijective") == Some(bij);
        ok &= (!surj || bij) && reported && rep.passed();
        seen.push(format!("{name}: surjective {surj}, bijective {bij}"));
    }
    Ok((ok, seen.join(", ")))
}

fn determinism() -> Outcome {
    let sweep = || -> Result<Vec<String>> {
        examples::NAMES.iter().map(|n| Ok(examples::run(n)?.to_json().to_string())).collect()
    };
    let (a, b) = (sweep()?, sweep()?);
    let bytes: usize = a.iter().map(String::len).sum();
    Ok((a == b, format!("{} reports, {bytes} bytes each sweep", a.len())))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("firm-square law", firm_square_law),
        ("idempotent-core oracle", idempotent_core_oracle),
        ("Kato–Ohtake round trips", kato_ohtake_round_trips),
        ("ω iso ⇔ firm table", omegabeta_table),
        ("Sweedler descent", sweedler_descent),
        ("Hopf modules", hopf_fundamental_theorem),
        ("coseparable category isomorphism", coseparable_isomorphism),
        ("τ∘u = id", moritafirm_unit),
        ("firm-ideal coring round trip", firm_ideal_round_trip),
        ("can surjective ⇒ bijective", implication_chain),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = match check() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        failed += usize::from(!ok);
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {verdict} {name}: {detail} ({:.2?})", i + 1, start.elapsed());
    }
    println!("acceptance: {} of {} criteria pass (tolerance 0, exact arithmetic)", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
