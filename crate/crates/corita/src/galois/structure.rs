//! Structure of comodules through the ring `B = QσΣ ⊆ *C`.

use serde_json::json;

use crate::algebra::{firmness, has_right_local_units, Algebra, Side};
use crate::bimodule::{
    catalog, hom, is_projective, module_firmness, tensor_maps, tensor_over, Action, Bimodule,
};
use crate::coring::{comodule_hom, dual_action, validate_comodule, Comodule};
use crate::error::{Error, Result};
use crate::exactlin::{is_iso, rref_solve, vectorize, Mat, Subspace};
use crate::par;
use crate::report::Report;

use super::contexts::{context_sigma, ideal_span, right_module_of, two_comodule_context};
use super::{hcat, id};

/// `B` with its comodule structure and the verdicts of the structure theorem.
#[derive(Clone, Debug)]
pub struct BStructure {
    /// `B` inside `*C`.
    pub b: Subspace,
    pub ring: Algebra,
    /// `B` as a right `C`-comodule, when `B = *C`.
    pub comodule: Option<Comodule>,
    pub report: Report,
}

/// Checks the equivalent conditions that make `Σ` a generator through `B`,
/// and when they hold, the comodule structure of `B`, the functor pair
/// `F_B`, `F̃_B`, the isomorphisms `α`, `β`, the equivalence `G_Σ` and the
/// right-adjoint comparison, on the given comodule catalog.
pub fn b_structure_theorem(sigma: &Comodule, comodules: &[Comodule]) -> Result<BStructure> {
    let c = &sigma.coring;
    let f = c.field();
    let a = &c.a;
    let sc = context_sigma(sigma)?;
    let dr = &sc.dual;
    let dstar = dr.algebra.dim();
    let b = Subspace::from_cols(&sc.context.bt);
    let inc = b.inclusion();
    let ring = dr.algebra.sub(&b, "B")?.with_detected_unit();
    let c_proj = is_projective(&c.c, Side::Left)?;
    let dense = b.dim() == dstar;
    let local = has_right_local_units(&ring).exists;
    let c_b = dual_action(&Comodule::regular(c)?, dr)?.restrict_right(&ring, &inc)?;
    let c_firm = module_firmness(&c_b, &ring)?.is_firm;
    let ii = c_proj && dense;
    let iii = c_proj && local && c_firm;
    let mut items = vec![Report::group(
        "conditions",
        vec![
            Report::pass("C projective as a left A-module").with_fact("holds", c_proj),
            Report::pass("B = *C").with_fact("holds", dense).with_fact("dim_B", b.dim()).with_fact("dim_*C", dstar),
            Report::pass("B has right local units").with_fact("holds", local),
            Report::pass("C firm as a right B-module").with_fact("holds", c_firm),
            Report::check("(ii) ⟺ (iii)", ii == iii, || json!({ "ii": ii, "iii": iii })),
        ],
    )];
    if !ii {
        let reason = if !c_proj { "C is not projective as a left A-module" } else { "B ≠ *C (density fails)" };
        items.push(Report::unmet("structure", reason));
        let report = Report::group(format!("B-structure of {}", sigma.label), items);
        return Ok(BStructure { b, ring, comodule: None, report });
    }

    // ρ_B(b) is the unique element with b_{[0]}(c) b_{[1]} = c_{(1)} b(c_{(2)}).
    let b_mod = dr.hom.module.clone().forget_left().submodule(&b, "B")?;
    let bc = tensor_over(&b_mod, a, &c.c)?;
    let dc = c.dim();
    let lf = c.c.left_flat()?;
    let rf = c.c.right_flat()?;
    let dflat = c.delta_flat();
    let fmaps: Vec<Mat> = (0..b.dim()).map(|i| dr.hom.element(&inc.col(i))).collect();
    let mut theta_cols = Vec::with_capacity(b.dim() * dc);
    for fb in &fmaps {
        for cc in 0..dc {
            theta_cols.push(vectorize(&lf.mul(&fb.kron(&Mat::unit_column(f, dc, cc)))));
        }
    }
    let theta = hcat(f, dc * dc, &theta_cols).mul(bc.section());
    let injective = theta.rank() == bc.dim();
    let mut rho_cols = Vec::with_capacity(b.dim());
    for fb in &fmaps {
        let target = vectorize(&rf.mul(&id(f, dc).kron(fb)).mul(&dflat));
        match rref_solve(&theta, &target)? {
            Some(x) => rho_cols.push(x),
            None => {
                items.push(Report::fail("B is a right C-comodule", json!("no coaction solves the defining equation")));
                let report = Report::group(format!("B-structure of {}", sigma.label), items);
                return Ok(BStructure { b, ring, comodule: None, report });
            }
        }
    }
    let rho_b = hcat(f, bc.dim(), &rho_cols);
    let b_com = Comodule::new(c, b_mod.clone(), rho_b, "B")?;
    items.push(Report::group(
        "B is a B-C bicomodule",
        vec![
            Report::check("B ⊗_A C -> End(C) injective", injective, || json!(null)),
            validate_comodule(&b_com),
            left_colinear(&b_com, &ring)?,
        ],
    ));

    // σ: Q ⊗ Σ -> B is colinear, and γ(y) = y·(-) ∈ Hom^C(B, Σ).
    let sflat = sigma.coaction_flat();
    let bad_q = sc.q_maps.iter().position(|qm| {
        let bq = b.coords(qm);
        b_com.rho.mul(&bq) != bc.projection().mul(&bq.kron(&id(f, dc))).mul(&sflat)
    });
    items.push(Report::check("σ colinear", bad_q.is_none(), || json!({ "q": bad_q })));
    let sigma_b = dual_action(sigma, dr)?.restrict_right(&ring, &inc)?;
    let acts = sigma_b.right_mats()?;
    let hbs = comodule_hom(&b_com, sigma)?;
    let gammas: Vec<Mat> = (0..sigma.dim())
        .map(|y| {
            let e = Mat::unit_column(f, sigma.dim(), y);
            hcat(f, sigma.dim(), &acts.iter().map(|g| g.mul(&e)).collect::<Vec<_>>())
        })
        .collect();
    let bad_y = gammas.iter().position(|g| hbs.coords(g).is_none());
    items.push(Report::check("γ(y) ∈ Hom^C(B, Σ)", bad_y.is_none(), || json!({ "y": bad_y })));

    items.push(functor_round_trips(&b_com, &ring, &inc, comodules)?);
    items.push(alpha_beta(sigma, &b_com, &ring, &sigma_b, &gammas, &sc.q_maps, &b)?);

    // G_Σ: F_B is an equivalence and Hom^C(Σ,-)W ⊗_W W ≅ Hom^C(B,-)B ⊗_B B ⊗_B Q.
    let hbb = comodule_hom(&b_com, &b_com)?;
    let lmults = (0..ring.dim())
        .map(|i| hbb.coords(&ring.left_basis(i)).ok_or_else(|| Error::Invalid("left multiplication not colinear".into())))
        .collect::<Result<Vec<_>>>()?;
    let b_ideal = Subspace::from_cols(&hcat(f, hbb.dim(), &lmults));
    let equiv = match two_comodule_context(sigma, &b_com, Some(&b_ideal), comodules) {
        Ok(two) => {
            let ok = two.report.passed();
            let mut items = vec![two.report.clone()];
            if let Some(red) = &two.reduced {
                items.push(right_adjoint(sigma, red)?);
            }
            Report::group("G_Σ equivalence", items).with_fact("nat_iso", ok)
        }
        Err(e) => Report::fail("G_Σ equivalence", json!(e.to_string())),
    };
    items.push(equiv);
    let report = Report::group(format!("B-structure of {}", sigma.label), items)
        .with_detail("certified on the supplied catalog");
    Ok(BStructure { b, ring, comodule: Some(b_com), report })
}

/// Left multiplication by `B` is colinear on `B`.
fn left_colinear(b_com: &Comodule, ring: &Algebra) -> Result<Report> {
    let h = comodule_hom(b_com, b_com)?;
    let bad = (0..ring.dim()).find(|&i| h.coords(&ring.left_basis(i)).is_none());
    Ok(Report::check("left B-action colinear", bad.is_none(), || json!({ "basis": bad })))
}

/// `F_B(N) = N ⊗_B B` and `F̃_B(M) = M` with `m·b = m_{[0]} b(m_{[1]})` are mutually inverse.
fn functor_round_trips(b_com: &Comodule, ring: &Algebra, inc: &Mat, comodules: &[Comodule]) -> Result<Report> {
    let c = &b_com.coring;
    let f = c.field();
    let dr = crate::coring::dual_ring(c)?;
    let bb = Bimodule::new(
        f,
        b_com.dim(),
        Some(Action { algebra: ring.clone(), mats: ring.left_regular() }),
        b_com.m.right.clone(),
        "B",
    )?;
    let f_b = |n: &Bimodule| -> Result<(crate::bimodule::Tensor, Comodule)> {
        let t = tensor_over(n, ring, &bb)?;
        let module = t.module.clone().forget_left();
        let mc = tensor_over(&module, &c.a, &c.c)?;
        let rho = mc
            .projection()
            .mul(&t.projection().kron(&id(f, c.dim())))
            .mul(&id(f, n.dim()).kron(&b_com.coaction_flat()))
            .mul(t.section());
        let com = Comodule::new(c, module, rho, format!("{}⊗_BB", n.label))?;
        Ok((t, com))
    };
    let modules: Vec<Bimodule> = catalog(ring, 2 * ring.dim().max(1))
        .into_iter()
        .filter(|n| module_firmness(n, ring).map(|m| m.is_firm).unwrap_or(false))
        .collect();
    let rows_n = par::map(&modules, |n| -> Result<Report> {
        let (_, fn_) = f_b(n)?;
        let back = dual_action(&fn_, &dr)?.restrict_right(ring, inc)?;
        let mu = module_firmness(n, ring)?.mu;
        let ok = is_iso(&mu)
            && back.right_mats()?.iter().zip(n.right_mats()?).all(|(x, y)| mu.mul(x) == y.mul(&mu));
        Ok(Report::group(
            format!("N = {}", n.label),
            vec![validate_comodule(&fn_), Report::check("F̃_B F_B(N) ≅ N", ok, || json!(null))],
        ))
    });
    let rows_m = par::map(comodules, |m| -> Result<Report> {
        let mb = dual_action(m, &dr)?.restrict_right(ring, inc)?;
        let firm = module_firmness(&mb, ring)?;
        if !firm.is_firm {
            return Ok(Report::fail(format!("M = {}", m.label), json!("comodule is not firm over B")));
        }
        let (_, fm) = f_b(&mb)?;
        let mu = firm.mu;
        let colinear = tensor_maps(&fm.mc, &m.mc, &mu, &id(f, c.dim())).mul(&fm.rho) == m.rho.mul(&mu);
        Ok(Report::check(format!("M = {}", m.label), colinear, || json!("μ is not colinear"))
            .with_fact("firm", true))
    });
    let mut items = rows_n.into_iter().collect::<Result<Vec<_>>>()?;
    items.extend(rows_m.into_iter().collect::<Result<Vec<_>>>()?);
    Ok(Report::group("F_B and F̃_B mutually inverse", items))
}

/// `α: Σ ⊗_B B -> Hom^C(B,Σ) ⊗_B B` with inverse `ξ ⊗ bb' ↦ ξ(b) ⊗ b'`, and `Hom^C(Σ, B) = Q`.
fn alpha_beta(
    sigma: &Comodule,
    b_com: &Comodule,
    ring: &Algebra,
    sigma_b: &Bimodule,
    gammas: &[Mat],
    q_maps: &[Mat],
    b: &Subspace,
) -> Result<Report> {
    let f = ring.field();
    let db = ring.dim();
    let reg = Bimodule::regular(ring);
    let sb = tensor_over(sigma_b, ring, &reg)?;
    let h = comodule_hom(b_com, sigma)?;
    let lb: Vec<Mat> = (0..db).map(|i| ring.left_basis(i)).collect();
    let h_mod = right_module_of(&h, &lb, ring, "Hom^C(B,Σ)")?;
    let hb = tensor_over(&h_mod, ring, &reg)?;
    let gcols = gammas.iter().map(|g| h.coords(g).expect("γ(y) is colinear")).collect::<Vec<_>>();
    let gamma = hcat(f, h.dim(), &gcols);
    let alpha = hb.projection().mul(&gamma.kron(&id(f, db))).mul(sb.section());
    let mut items = Vec::new();
    let fr = firmness(ring)?;
    match fr.d {
        Some(d) => {
            let hm = h.maps();
            let ev = Mat::from_fn(f, sigma.dim(), hm.len() * db, |r, col| hm[col / db].get(r, col % db).clone());
            let alpha_inv = sb
                .projection()
                .mul(&ev.kron(&id(f, db)))
                .mul(&id(f, h.dim()).kron(&fr.square.section().mul(&d)))
                .mul(hb.section());
            items.push(Report::check("α⁻¹∘α = id", alpha_inv.mul(&alpha).is_identity(), || json!(null)));
            items.push(Report::check("α∘α⁻¹ = id", alpha.mul(&alpha_inv).is_identity(), || json!(null)));
        }
        None => items.push(Report::unmet("α", "B is not firm")),
    }
    let hsb = comodule_hom(sigma, b_com)?;
    let inc = b.inclusion();
    let hq: Vec<Mat> = hsb.maps().iter().map(|m| vectorize(&inc.mul(m))).collect();
    let qv: Vec<Mat> = q_maps.iter().map(vectorize).collect();
    let rows = inc.rows() * sigma.dim();
    let s1 = Subspace::from_cols(&hcat(f, rows, &hq));
    let s2 = Subspace::from_cols(&hcat(f, rows, &qv));
    let same = s1.contains_space(&s2) && s2.contains_space(&s1);
    items.push(Report::check("β: Hom^C(Σ,B) = Q", same, || json!({ "dim_hom": s1.dim(), "dim_Q": s2.dim() })));
    Ok(Report::group("α and β", items))
}

/// `N ⊗_A Σ*W ⊗_W W -> Hom_A(Σ,N)W ⊗_W W`, `n ⊗ ξ ⊗ w ↦ nξ(-) ⊗ w`, for `N ∈ {0, A}`.
fn right_adjoint(sigma: &Comodule, red: &crate::morita::ReducedContext) -> Result<Report> {
    let c = &sigma.coring;
    let f = c.field();
    let a = &c.a;
    let w = &red.context.a;
    let ts = comodule_hom(sigma, sigma)?;
    let w_inc = red.w.subspace.inclusion();
    let w_maps: Vec<Mat> = (0..w.dim()).map(|l| ts.element(&w_inc.col(l))).collect();
    let regw = Bimodule::regular(w);
    let sig = sigma.m.clone();
    let dual = hom(&sig, &Bimodule::regular(a), Side::Right)?;
    let (xd_maps, xd_right, xd_space) = ideal_span(&dual, &w_maps, w, "Σ*W")?;
    let la = a.left_regular();
    let left_mats = la
        .iter()
        .map(|l| {
            let cols = xd_maps
                .iter()
                .map(|x| {
                    dual.coords(&l.mul(x))
                        .and_then(|c| xd_space.try_coords(&c))
                        .ok_or_else(|| Error::Invalid("Σ*W not an A-module".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(hcat(f, xd_maps.len(), &cols))
        })
        .collect::<Result<Vec<_>>>()?;
    let xd_mod = Bimodule::new(
        f,
        xd_maps.len(),
        Some(Action { algebra: a.clone(), mats: left_mats }),
        xd_right.right.clone(),
        "Σ*W",
    )?;
    let inner = tensor_over(&xd_mod, w, &regw)?;
    let mut rows = Vec::new();
    for n in [Bimodule::zero(f, None, Some(a)), Bimodule::free_right(a, 1)] {
        let hn = hom(&sig, &n, Side::Right)?;
        let (_, xn_mod, xn_space) = ideal_span(&hn, &w_maps, w, "Hom(Σ,N)W")?;
        let lhs = tensor_over(&xn_mod, w, &regw)?;
        let rhs = tensor_over(&n, a, &inner.module)?;
        let rfn = n.right_flat()?;
        let mut cols = Vec::new();
        for x in 0..n.dim() {
            for xi in &xd_maps {
                let map = rfn.mul(&Mat::unit_column(f, n.dim(), x).kron(xi));
                cols.push(
                    hn.coords(&map)
                        .and_then(|c| xn_space.try_coords(&c))
                        .ok_or_else(|| Error::Invalid("nξ(-) leaves Hom(Σ,N)W".into()))?,
                );
            }
        }
        let theta = hcat(f, xn_space.dim(), &cols);
        let map = lhs
            .projection()
            .mul(&theta.kron(&id(f, w.dim())))
            .mul(&id(f, n.dim()).kron(inner.section()))
            .mul(rhs.section());
        rows.push(Report::check(format!("N = {}", n.label), is_iso(&map), || json!("comparison not bijective")));
    }
    Ok(Report::group("right adjoint Hom_A(Σ,-)W ⊗_W W ≅ - ⊗_A Σ*W ⊗_W W", rows))
}
