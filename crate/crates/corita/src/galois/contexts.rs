//! Morita contexts attached to modules and comodules, and the comparison of
//! `Hom^C(Σ, -)` with `Hom^C(Λ, -)` through a reduced context.

use serde_json::json;

use crate::algebra::{Algebra, IdealWitness, Side};
use crate::bimodule::{hom, tensor_maps, tensor_over, Action, Bimodule, Hom};
use crate::coring::{comodule_hom, dual_action, dual_ring, Comodule, DualRing};
use crate::error::{Error, Result};
use crate::exactlin::{inverse, is_iso, kernel, unvectorize, vec_left_right, Mat, SpanBuilder, Subspace};
use crate::morita::{discover_b, reduce_by_ideal, validate_context, MoritaContext, ReducedContext};
use crate::par;
use crate::report::Report;

use super::{hcat, id};

/// The context `(S, A, Σ, Σ*, τ, σ)` of a right `A`-module with `S = End_A(Σ)`.
#[derive(Clone, Debug)]
pub struct ModuleContext {
    pub context: MoritaContext,
    /// `End_A(Σ)` as maps.
    pub endomorphisms: Hom,
    /// `Σ* = Hom_A(Σ, A)`.
    pub dual: Hom,
    /// `S̄ = Σ ⊗ Σ*` inside `S`.
    pub s_bar: IdealWitness,
}

pub fn context_a_mod(sigma: &Bimodule) -> Result<ModuleContext> {
    let f = sigma.field();
    let a = sigma.right_algebra()?.clone();
    let plain = sigma.clone().forget_left();
    let sh = hom(&plain, &plain, Side::Right)?;
    let s = sh.endo_algebra(format!("End_A({})", sigma.label))?;
    let sigma_s = Bimodule::new(
        f,
        sigma.dim(),
        Some(Action { algebra: s.clone(), mats: sh.maps() }),
        plain.right.clone(),
        sigma.label.clone(),
    )?;
    let dual = hom(&sigma_s, &Bimodule::regular(&a), Side::Right)?;
    let ds = sigma.dim();
    let xis = dual.maps();
    let rf = sigma.right_flat()?;
    let mut wt_cols = Vec::with_capacity(ds * xis.len());
    for x in 0..ds {
        for xi in &xis {
            let map = rf.mul(&Mat::unit_column(f, ds, x).kron(xi));
            wt_cols.push(sh.coords(&map).ok_or_else(|| Error::Invalid("x·ξ(-) is not A-linear".into()))?);
        }
    }
    let wt = hcat(f, s.dim(), &wt_cols);
    let bt = Mat::from_fn(f, a.dim(), xis.len() * ds, |r, c| xis[c / ds].get(r, c % ds).clone());
    let s_bar = IdealWitness::new(Subspace::from_cols(&wt), Side::TwoSided);
    let context = MoritaContext::new(
        s,
        a,
        sigma_s,
        dual.module.clone().with_label(format!("{}*", sigma.label)),
        wt,
        bt,
        format!("M({})", sigma.label),
    )?;
    Ok(ModuleContext { context, endomorphisms: sh, dual, s_bar })
}

/// The context `(T, *C, Σ, Q, τ, σ)` of a comodule, with `T = End^C(Σ)` and
/// `Q ⊆ Hom_A(Σ, *C)` cut out by `q(x_{[0]})(c) x_{[1]} = c_{(1)} q(x)(c_{(2)})`.
#[derive(Clone, Debug)]
pub struct ComoduleContext {
    pub context: MoritaContext,
    pub t: Hom,
    pub dual: DualRing,
    /// Basis of `Q` as `dim *C × dim Σ` matrices.
    pub q_maps: Vec<Mat>,
}

pub fn context_sigma(sigma: &Comodule) -> Result<ComoduleContext> {
    let c = &sigma.coring;
    let f = c.field();
    let t = comodule_hom(sigma, sigma)?;
    let t_alg = t.endo_algebra(format!("End^C({})", sigma.label))?;
    let dr = dual_ring(c)?;
    let sigma_c = dual_action(sigma, &dr)?;
    let p = Bimodule::new(
        f,
        sigma.dim(),
        Some(Action { algebra: t_alg.clone(), mats: t.maps() }),
        sigma_c.right.clone(),
        sigma.label.clone(),
    )?;
    let q_space = q_solution_space(sigma, &dr)?;
    let (ds, dstar) = (sigma.dim(), dr.algebra.dim());
    let q_maps: Vec<Mat> =
        (0..q_space.dim()).map(|i| unvectorize(&q_space.inclusion().col(i), dstar, ds)).collect();
    let left: Vec<Mat> = (0..dstar).map(|i| dr.algebra.left_basis(i)).collect();
    let t_maps = t.maps();
    let q_left = act_on(&q_space, &q_maps, &left, |g, q| g.mul(q))?;
    let q_right = act_on(&q_space, &q_maps, &t_maps, |g, q| q.mul(g))?;
    let q = Bimodule::new(
        f,
        q_maps.len(),
        Some(Action { algebra: dr.algebra.clone(), mats: q_left }),
        Some(Action { algebra: t_alg.clone(), mats: q_right }),
        "Q",
    )?;
    let acts = sigma_c.right_mats()?;
    let mut wt_cols = Vec::with_capacity(ds * q_maps.len());
    for x in 0..ds {
        let ex = Mat::unit_column(f, ds, x);
        let cols: Vec<Mat> = acts.iter().map(|g| g.mul(&ex)).collect();
        let xs = hcat(f, ds, &cols);
        for qm in &q_maps {
            let map = xs.mul(qm);
            wt_cols.push(t.coords(&map).ok_or_else(|| Error::Invalid("x·q(-) is not colinear".into()))?);
        }
    }
    let wt = hcat(f, t.dim(), &wt_cols);
    let bt = Mat::from_fn(f, dstar, q_maps.len() * ds, |r, col| q_maps[col / ds].get(r, col % ds).clone());
    let context = MoritaContext::new(t_alg, dr.algebra.clone(), p, q, wt, bt, format!("M({})", sigma.label))?;
    Ok(ComoduleContext { context, t, dual: dr, q_maps })
}

fn q_solution_space(sigma: &Comodule, dr: &DualRing) -> Result<Subspace> {
    let c = &sigma.coring;
    let f = c.field();
    let (ds, dc) = (sigma.dim(), c.dim());
    let fk = dr.hom.maps();
    let dstar = fk.len();
    let flat = sigma.coaction_flat();
    let lf = c.c.left_flat()?;
    let rf = c.c.right_flat()?;
    let dflat = c.delta_flat();
    let rhs_k: Vec<Mat> = fk.iter().map(|g| rf.mul(&id(f, dc).kron(g)).mul(&dflat)).collect();
    let rows = ds * dc * dc;
    let cols = par::map_range(dstar * ds, |u| {
        let (k, y0) = (u / ds, u % ds);
        let mut out = Mat::zeros(f, rows, 1);
        for x in 0..ds {
            let v = Mat::from_fn(f, dc, 1, |cp, _| flat.get(y0 * dc + cp, x).clone());
            for cc in 0..dc {
                let mut e = lf.mul(&fk[k].col(cc).kron(&v));
                if x == y0 {
                    e = e.sub(&rhs_k[k].col(cc));
                }
                for o in 0..dc {
                    out.set((x * dc + cc) * dc + o, 0, e.get(o, 0).clone());
                }
            }
        }
        out
    });
    let colinear = hcat(f, rows, &cols);
    let mut blocks = vec![colinear];
    for (x, y) in sigma.m.right_mats()?.iter().zip(dr.hom.module.right_mats()?) {
        blocks.push(vec_left_right(&id(f, dstar), x).sub(&vec_left_right(y, &id(f, ds))));
    }
    Ok(kernel(&Mat::vstack(&blocks.iter().collect::<Vec<_>>(), f, dstar * ds)))
}

/// Matrices of `q ↦ op(g, q)` on a space of vectorised maps.
fn act_on(space: &Subspace, maps: &[Mat], elems: &[Mat], op: impl Fn(&Mat, &Mat) -> Mat) -> Result<Vec<Mat>> {
    let f = space.field();
    elems
        .iter()
        .map(|g| {
            let cols = maps
                .iter()
                .map(|q| {
                    space
                        .try_coords(&crate::exactlin::vectorize(&op(g, q)))
                        .ok_or_else(|| Error::Invalid("space is not closed under the action".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(hcat(f, maps.len(), &cols))
        })
        .collect()
}

/// `Hom^C(Λ, Σ)` as an `End^C(Σ)`-`End^C(Λ)` bimodule under composition.
fn composition_module(
    h: &Hom,
    left: (&Algebra, &[Mat]),
    right: (&Algebra, &[Mat]),
    label: &str,
) -> Result<Bimodule> {
    let maps = h.maps();
    let space = &h.space;
    let act = |elems: &[Mat], op: &dyn Fn(&Mat, &Mat) -> Mat| -> Result<Vec<Mat>> {
        elems
            .iter()
            .map(|g| {
                let cols = maps
                    .iter()
                    .map(|p| h.coords(&op(g, p)).ok_or_else(|| Error::Invalid("composition leaves Hom".into())))
                    .collect::<Result<Vec<_>>>()?;
                Ok(hcat(space.field(), h.dim(), &cols))
            })
            .collect()
    };
    let lm = act(left.1, &|g, p| g.mul(p))?;
    let rm = act(right.1, &|g, p| p.mul(g))?;
    Bimodule::new(
        space.field(),
        h.dim(),
        Some(Action { algebra: left.0.clone(), mats: lm }),
        Some(Action { algebra: right.0.clone(), mats: rm }),
        label,
    )
}

/// The context `(End^C(Σ), End^C(Λ), Hom^C(Λ,Σ), Hom^C(Σ,Λ), ∘, ∘)`, its
/// reduction by `B` and the natural isomorphism
/// `Hom^C(Σ,-)W ⊗_W W ≅ Hom^C(Λ,-)B ⊗_B B ⊗_B Hom^C(Σ,Λ)` on a catalog.
#[derive(Clone, Debug)]
pub struct TwoComoduleContext {
    pub context: MoritaContext,
    pub b: Subspace,
    pub reduced: Option<ReducedContext>,
    pub report: Report,
}

struct Frame<'a> {
    sigma: &'a Comodule,
    lambda: &'a Comodule,
    ts: Hom,
    tl: Hom,
    hp: Hom,
    hq: Hom,
}

pub fn two_comodule_context(
    sigma: &Comodule,
    lambda: &Comodule,
    b: Option<&Subspace>,
    catalog: &[Comodule],
) -> Result<TwoComoduleContext> {
    let f = sigma.coring.field();
    let ts = comodule_hom(sigma, sigma)?;
    let tl = comodule_hom(lambda, lambda)?;
    let hp = comodule_hom(lambda, sigma)?;
    let hq = comodule_hom(sigma, lambda)?;
    let s_alg = ts.endo_algebra(format!("End^C({})", sigma.label))?;
    let l_alg = tl.endo_algebra(format!("End^C({})", lambda.label))?;
    let (sm, lm) = (ts.maps(), tl.maps());
    let p = composition_module(&hp, (&s_alg, &sm), (&l_alg, &lm), "Hom^C(Λ,Σ)")?;
    let q = composition_module(&hq, (&l_alg, &lm), (&s_alg, &sm), "Hom^C(Σ,Λ)")?;
    let (pm, qm) = (hp.maps(), hq.maps());
    let mut wt_cols = Vec::new();
    for pp in &pm {
        for qq in &qm {
            wt_cols.push(ts.coords(&pp.mul(qq)).ok_or_else(|| Error::Invalid("p∘q not colinear".into()))?);
        }
    }
    let mut bt_cols = Vec::new();
    for qq in &qm {
        for pp in &pm {
            bt_cols.push(tl.coords(&qq.mul(pp)).ok_or_else(|| Error::Invalid("q∘p not colinear".into()))?);
        }
    }
    let wt = hcat(f, ts.dim(), &wt_cols);
    let bt = hcat(f, tl.dim(), &bt_cols);
    let context = MoritaContext::new(s_alg, l_alg, p, q, wt, bt, format!("M({},{})", sigma.label, lambda.label))?;
    let b = match b {
        Some(b) => b.clone(),
        None => discover_b(&context)?,
    };
    let mut items = vec![validate_context(&context)?];
    if b.dim() == 0 {
        items.push(Report::unmet("reduction", "B = 0"));
        let report = Report::group("two-comodule context", items).with_fact("dim_B", 0);
        return Ok(TwoComoduleContext { context, b, reduced: None, report });
    }
    let red = reduce_by_ideal(&context, &b)?;
    items.push(red.lemma.clone());
    let frame = Frame { sigma, lambda, ts, tl, hp, hq };
    let rows = par::map(catalog, |m| nat_eq(&frame, &red, m));
    let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
    items.push(Report::group("natural isomorphism", rows).with_detail("certified on the supplied catalog"));
    let report = Report::group("two-comodule context", items)
        .with_fact("dim_B", b.dim())
        .with_fact("dim_W", red.w.subspace.dim());
    Ok(TwoComoduleContext { context, b, reduced: Some(red), report })
}

/// `Hom(-, M)·I` for an ideal given by maps, with its right action.
pub(super) fn ideal_span(h: &Hom, ideal: &[Mat], alg: &Algebra, label: &str) -> Result<(Vec<Mat>, Bimodule, Subspace)> {
    let f = h.space.field();
    let maps = h.maps();
    let mut span = SpanBuilder::new(f, h.dim());
    for g in &maps {
        for u in ideal {
            let c = h.coords(&g.mul(u)).ok_or_else(|| Error::Invalid("φ∘u leaves Hom".into()))?;
            span.push(c.col_entries(0));
        }
    }
    let s = span.finish();
    let inc = s.inclusion();
    let xs: Vec<Mat> = (0..s.dim()).map(|i| h.element(&inc.col(i))).collect();
    let mats = ideal
        .iter()
        .map(|u| {
            let cols = xs
                .iter()
                .map(|x| {
                    h.coords(&x.mul(u))
                        .and_then(|c| s.try_coords(&c))
                        .ok_or_else(|| Error::Invalid("Hom·I is not closed".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(hcat(f, s.dim(), &cols))
        })
        .collect::<Result<Vec<_>>>()?;
    let module = Bimodule::new(f, s.dim(), None, Some(Action { algebra: alg.clone(), mats }), label)?;
    Ok((xs, module, s))
}

pub(super) fn right_module_of(h: &Hom, elems: &[Mat], alg: &Algebra, label: &str) -> Result<Bimodule> {
    let f = h.space.field();
    let maps = h.maps();
    let mats = elems
        .iter()
        .map(|u| {
            let cols = maps
                .iter()
                .map(|x| h.coords(&x.mul(u)).ok_or_else(|| Error::Invalid("φ∘u leaves Hom".into())))
                .collect::<Result<Vec<_>>>()?;
            Ok(hcat(f, h.dim(), &cols))
        })
        .collect::<Result<Vec<_>>>()?;
    Bimodule::new(f, h.dim(), None, Some(Action { algebra: alg.clone(), mats }), label)
}

fn nat_eq(fr: &Frame, red: &ReducedContext, m: &Comodule) -> Result<Report> {
    let f = m.coring.field();
    let ctx = &red.context;
    let (w, b) = (&ctx.a, &ctx.ap);
    let (dw, db) = (w.dim(), b.dim());
    let w_inc = red.w.subspace.inclusion();
    let b_inc = red.b.subspace.inclusion();
    let w_maps: Vec<Mat> = (0..dw).map(|l| fr.ts.element(&w_inc.col(l))).collect();
    let b_maps: Vec<Mat> = (0..db).map(|l| fr.tl.element(&b_inc.col(l))).collect();
    let hsm = comodule_hom(fr.sigma, m)?;
    let hlm = comodule_hom(fr.lambda, m)?;
    let (x_maps, x_mod, _) = ideal_span(&hsm, &w_maps, w, "X")?;
    let (y_maps, y_mod, y_space) = ideal_span(&hlm, &b_maps, b, "Y")?;
    let (dx, dy) = (x_maps.len(), y_maps.len());
    let (dp, dq) = (red.p_wb.dim(), red.q_bw.dim());
    let regw = Bimodule::regular(w);
    let regb = Bimodule::regular(b);
    let lhs = tensor_over(&x_mod, w, &regw)?;
    let yb = tensor_over(&y_mod, b, &regb)?;
    let rhs = tensor_over(&yb.module, b, &red.q_bw)?;
    let name = format!("M = {}", m.label);
    let facts = |r: Report| r.with_fact("dim_lhs", lhs.dim()).with_fact("dim_rhs", rhs.dim());

    // Ψ = (ω1 ⊗ B ⊗ Q)∘(X⊗_W W ⊗ τ̄)^{-1}∘(X ⊗ μ_W)^{-1}
    let xww = tensor_over(&lhs.module, w, &regw)?;
    let mu_x = lhs
        .projection()
        .mul(&id(f, dx).kron(w.table()))
        .mul(&lhs.section().kron(&id(f, dw)))
        .mul(xww.section());
    let pq = ctx.pq()?;
    let xpq = tensor_over(&lhs.module, w, &pq.module)?;
    let sq = tensor_maps(&xpq, &xww, &id(f, lhs.dim()), &ctx.tau()?);
    if !is_iso(&mu_x) || !is_iso(&sq) {
        let which = if is_iso(&mu_x) { "X⊗_W W ⊗_W τ̄" } else { "X⊗_W W ⊗_W W -> X⊗_W W" };
        return Ok(facts(Report::fail(name, json!({ "not bijective": which }))));
    }
    let p_maps = fr.hp.maps();
    let mut om1_cols = Vec::with_capacity(dx * dw * dp * db);
    for xm in &x_maps {
        for wm in &w_maps {
            let xw = xm.mul(wm);
            for pm in &p_maps {
                let xwp = xw.mul(pm);
                for bm in &b_maps {
                    let c = hlm
                        .coords(&xwp.mul(bm))
                        .and_then(|c| y_space.try_coords(&c))
                        .ok_or_else(|| Error::Invalid("x∘w∘p∘b leaves Hom(Λ,M)B".into()))?;
                    om1_cols.push(c);
                }
            }
        }
    }
    let om1 = hcat(f, dy, &om1_cols);
    let pq_flat = red.pbar.section().kron(red.qbar.section()).mul(pq.section());
    let xpq_flat = lhs.section().kron(&pq_flat).mul(xpq.section());
    let psi_top = rhs
        .projection()
        .mul(&yb.projection().kron(&id(f, dq)))
        .mul(&om1.kron(&id(f, db * dq)))
        .mul(&xpq_flat);
    let psi = psi_top.mul(&inverse(&sq)?).mul(&inverse(&mu_x)?);

    // Φ = (ω2 ⊗ ω3)∘[(Y⊗_B B ⊗ σ̄)^{-1} ⊗ Q]∘[(Y ⊗ μ_B)^{-1} ⊗ Q]
    let ybb = tensor_over(&yb.module, b, &regb)?;
    let mu_y = yb
        .projection()
        .mul(&id(f, dy).kron(b.table()))
        .mul(&yb.section().kron(&id(f, db)))
        .mul(ybb.section());
    let qp = ctx.qp()?;
    let yqp = tensor_over(&yb.module, b, &qp.module)?;
    let sb = tensor_maps(&yqp, &ybb, &id(f, yb.dim()), &ctx.sigma()?);
    if !is_iso(&mu_y) || !is_iso(&sb) {
        let which = if is_iso(&mu_y) { "Y⊗_B B ⊗_B σ̄" } else { "Y⊗_B B ⊗_B B -> Y⊗_B B" };
        return Ok(facts(Report::fail(name, json!({ "not bijective": which }))));
    }
    let ybbq = tensor_over(&ybb.module, b, &red.q_bw)?;
    let yqpq = tensor_over(&yqp.module, b, &red.q_bw)?;
    let iq = id(f, dq);
    let step1 = tensor_maps(&rhs, &ybbq, &inverse(&mu_y)?, &iq);
    let step2 = tensor_maps(&ybbq, &yqpq, &inverse(&sb)?, &iq);
    let hs_mod = right_module_of(&hsm, &w_maps, w, "Hom^C(Σ,M)")?;
    let hww = tensor_over(&hs_mod, w, &regw)?;
    let x_to_h = Mat::hstack(
        &x_maps
            .iter()
            .map(|x| hsm.coords(x).expect("X lies in Hom"))
            .collect::<Vec<_>>()
            .iter()
            .collect::<Vec<_>>(),
        f,
        hsm.dim(),
    );
    let cmp = tensor_maps(&lhs, &hww, &x_to_h, &id(f, dw));
    if !is_iso(&cmp) {
        return Ok(facts(Report::fail(name, json!({ "not bijective": "X⊗_W W -> Hom^C(Σ,M)⊗_W W" }))));
    }
    let q_maps = fr.hq.maps();
    let mut om2_cols = Vec::with_capacity(dy * db * db * dq);
    for ym in &y_maps {
        for bm in &b_maps {
            let yb_ = ym.mul(bm);
            for b1 in &b_maps {
                let ybb_ = yb_.mul(b1);
                for qm in &q_maps {
                    om2_cols.push(
                        hsm.coords(&ybb_.mul(qm)).ok_or_else(|| Error::Invalid("y∘b∘b∘q leaves Hom".into()))?,
                    );
                }
            }
        }
    }
    let om2 = hcat(f, hsm.dim(), &om2_cols);
    let mut om3_cols = Vec::with_capacity(dp * db * dq);
    for pm in &p_maps {
        for bm in &b_maps {
            let pb = pm.mul(bm);
            for qm in &q_maps {
                om3_cols.push(
                    fr.ts
                        .coords(&pb.mul(qm))
                        .and_then(|c| red.w.subspace.try_coords(&c))
                        .ok_or_else(|| Error::Invalid("p∘b∘q leaves W".into()))?,
                );
            }
        }
    }
    let om3 = hcat(f, dw, &om3_cols);
    let qp_flat = red.qbar.section().kron(red.pbar.section()).mul(qp.section());
    let yqp_flat = yb.section().kron(&qp_flat).mul(yqp.section());
    let yqpq_flat = yqp_flat.kron(&iq).mul(yqpq.section());
    let phi_top = hww.projection().mul(&om2.kron(&om3)).mul(&yqpq_flat);
    let phi = inverse(&cmp)?.mul(&phi_top).mul(&step2).mul(&step1);
    let items = vec![
        Report::check("Φ∘Ψ = id", phi.mul(&psi).is_identity(), || json!(null)),
        Report::check("Ψ∘Φ = id", psi.mul(&phi).is_identity(), || json!(null)),
    ];
    Ok(facts(Report::group(name, items)))
}
