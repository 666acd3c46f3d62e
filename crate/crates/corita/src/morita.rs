//! Morita contexts between possibly non-unital algebras.
//!
//! Connecting maps are stored flat: `wt` is `dim A x (dim P · dim Q)` on
//! `P ⊗_k Q` and `bt` is `dim A' x (dim Q · dim P)` on `Q ⊗_k P`. Maps between
//! iterated tensor products are written as flat formulas composed with the
//! sections of the balanced carriers and pushed down by their projections.

use serde_json::{json, Value};

use crate::algebra::{firm_square, firmness, idempotent_core, Algebra, FirmSquare, IdealWitness, Side};
use crate::bimodule::{
    hom, left_module_firmness, module_firmness, tensor_over, validate_module, Action, Bimodule, Hom, Tensor,
};
use crate::error::{Error, Result};
use crate::exactlin::{inverse, is_iso, vectorize, Field, Mat, Subspace};
use crate::par;
use crate::report::Report;

#[derive(Clone, Debug)]
pub struct MoritaContext {
    pub label: String,
    pub a: Algebra,
    pub ap: Algebra,
    /// `A`-`A'` bimodule.
    pub p: Bimodule,
    /// `A'`-`A` bimodule.
    pub q: Bimodule,
    pub wt: Mat,
    pub bt: Mat,
}

fn id(f: Field, n: usize) -> Mat {
    Mat::identity(f, n)
}

/// Points a bimodule's ring references at the context's `"A"`/`"Ap"` slots.
fn with_refs(mut v: Value, left: &str, right: &str) -> Value {
    v["left"] = json!(left);
    v["right"] = json!(right);
    v
}

fn span_eq(s: &Subspace, t: &Subspace) -> bool {
    s.contains_space(t) && t.contains_space(s)
}

impl MoritaContext {
    pub fn new(
        a: Algebra,
        ap: Algebra,
        p: Bimodule,
        q: Bimodule,
        wt: Mat,
        bt: Mat,
        label: impl Into<String>,
    ) -> Result<MoritaContext> {
        let sides_ok = p.left_algebra()? == &a
            && p.right_algebra()? == &ap
            && q.left_algebra()? == &ap
            && q.right_algebra()? == &a;
        if !sides_ok {
            return Err(Error::ActionMismatch("P must be an A-A' and Q an A'-A bimodule".into()));
        }
        if wt.rows() != a.dim() || wt.cols() != p.dim() * q.dim() {
            return Err(Error::Dimension(format!(
                "wt is {}x{}, expected {}x{}",
                wt.rows(),
                wt.cols(),
                a.dim(),
                p.dim() * q.dim()
            )));
        }
        if bt.rows() != ap.dim() || bt.cols() != q.dim() * p.dim() {
            return Err(Error::Dimension(format!(
                "bt is {}x{}, expected {}x{}",
                bt.rows(),
                bt.cols(),
                ap.dim(),
                q.dim() * p.dim()
            )));
        }
        Ok(MoritaContext { label: label.into(), a, ap, p, q, wt, bt })
    }

    pub fn field(&self) -> Field {
        self.a.field()
    }

    /// `P ⊗_{A'} Q` as an `A`-bimodule.
    pub fn pq(&self) -> Result<Tensor> {
        tensor_over(&self.p, &self.ap, &self.q)
    }

    /// `Q ⊗_A P` as an `A'`-bimodule.
    pub fn qp(&self) -> Result<Tensor> {
        tensor_over(&self.q, &self.a, &self.p)
    }

    /// `τ` on the carrier of `P ⊗_{A'} Q`.
    pub fn tau(&self) -> Result<Mat> {
        Ok(self.pq()?.carrier.descend(&self.wt))
    }

    /// `σ` on the carrier of `Q ⊗_A P`.
    pub fn sigma(&self) -> Result<Mat> {
        Ok(self.qp()?.carrier.descend(&self.bt))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "label": self.label,
            "A": self.a.to_json(),
            "Ap": self.ap.to_json(),
            "P": with_refs(self.p.to_json(), "A", "Ap"),
            "Q": with_refs(self.q.to_json(), "Ap", "A"),
            "wt": self.wt.to_json(),
            "bt": self.bt.to_json(),
        })
    }

    /// Reads `{"A", "Ap", "P", "Q", "wt", "bt"}`; bimodules name their rings
    /// `"A"`/`"Ap"` or give them inline.
    pub fn from_json(v: &Value) -> Result<MoritaContext> {
        let a = Algebra::from_json(&v["A"])?;
        let ap = Algebra::from_json(&v["Ap"])?;
        let field = a.field();
        let resolve = |r: &Value| -> Result<Algebra> {
            match r.as_str() {
                Some("A") => Ok(a.clone()),
                Some("Ap") => Ok(ap.clone()),
                Some(other) => Err(Error::Input(format!("unknown algebra reference \"{other}\""))),
                None => Algebra::from_json(r),
            }
        };
        let p = Bimodule::from_json(&v["P"], field, &resolve)?;
        let q = Bimodule::from_json(&v["Q"], field, &resolve)?;
        let wt = Mat::from_json(&v["wt"], field)?;
        let bt = Mat::from_json(&v["bt"], field)?;
        let label = v["label"].as_str().unwrap_or("context").to_string();
        MoritaContext::new(a, ap, p, q, wt, bt, label)
    }
}

/// `(A', A, Q, P, σ, τ)`.
pub fn swap(ctx: &MoritaContext) -> MoritaContext {
    MoritaContext {
        label: format!("{}^sw", ctx.label),
        a: ctx.ap.clone(),
        ap: ctx.a.clone(),
        p: ctx.q.clone(),
        q: ctx.p.clone(),
        wt: ctx.bt.clone(),
        bt: ctx.wt.clone(),
    }
}

fn first_failure(n: usize, ok: impl Fn(usize) -> bool + Sync + Send) -> Option<usize> {
    par::map_range(n, |i| (!ok(i)).then_some(i)).into_iter().flatten().next()
}

fn linearity_items(
    name: &str,
    form: &Mat,
    target: &Algebra,
    left_src: &[Mat],
    right_src: &[Mat],
    f: Field,
    dl: usize,
    dr: usize,
) -> Vec<Report> {
    let lreg = target.left_regular();
    let rreg = target.right_regular();
    let left = first_failure(lreg.len(), |i| form.mul(&left_src[i].kron(&id(f, dr))) == lreg[i].mul(form));
    let right = first_failure(rreg.len(), |i| form.mul(&id(f, dl).kron(&right_src[i])) == rreg[i].mul(form));
    vec![
        Report::check(format!("{name} left-linear"), left.is_none(), || json!({ "basis": left })),
        Report::check(format!("{name} right-linear"), right.is_none(), || json!({ "basis": right })),
    ]
}

/// Checks both modules, balancedness and bilinearity of both forms, and the
/// two mixed associativity squares on basis triples.
pub fn validate_context(ctx: &MoritaContext) -> Result<Report> {
    let f = ctx.field();
    let (dp, dq) = (ctx.p.dim(), ctx.q.dim());
    let mut items = Vec::new();
    for (name, m) in [("P bimodule", &ctx.p), ("Q bimodule", &ctx.q)] {
        let v = validate_module(m);
        items.push(Report::check(name, v.ok(), || json!(v.failures)));
    }
    let pq = ctx.pq()?;
    let qp = ctx.qp()?;
    let rel_pq = ctx.wt.mul(&pq.carrier.quotient.relations.inclusion());
    let rel_qp = ctx.bt.mul(&qp.carrier.quotient.relations.inclusion());
    items.push(Report::equal("τ balanced over A'", &rel_pq, &Mat::zeros(f, rel_pq.rows(), rel_pq.cols())));
    items.push(Report::equal("σ balanced over A", &rel_qp, &Mat::zeros(f, rel_qp.rows(), rel_qp.cols())));
    items.extend(linearity_items("τ", &ctx.wt, &ctx.a, ctx.p.left_mats()?, ctx.q.right_mats()?, f, dp, dq));
    items.extend(linearity_items("σ", &ctx.bt, &ctx.ap, ctx.q.left_mats()?, ctx.p.right_mats()?, f, dq, dp));

    let pl = ctx.p.left.as_ref().expect("checked in new");
    let pr = ctx.p.right.as_ref().expect("checked in new");
    let ql = ctx.q.left.as_ref().expect("checked in new");
    let qr = ctx.q.right.as_ref().expect("checked in new");
    let t1 = par::triples(dp, dq, dp);
    let bad1: Vec<_> = par::map(&t1, |&(i, j, k)| {
        let lhs = pl.of(&ctx.wt.col(i * dq + j)).col(k);
        let rhs = pr.of(&ctx.bt.col(j * dp + k)).col(i);
        (lhs != rhs).then_some([i, j, k])
    })
    .into_iter()
    .flatten()
    .collect();
    items.push(Report::check("(pτq)p' = p(qσp')", bad1.is_empty(), || json!({ "triples": bad1 })));
    let t2 = par::triples(dq, dp, dq);
    let bad2: Vec<_> = par::map(&t2, |&(i, j, k)| {
        let lhs = ql.of(&ctx.bt.col(i * dp + j)).col(k);
        let rhs = qr.of(&ctx.wt.col(j * dq + k)).col(i);
        (lhs != rhs).then_some([i, j, k])
    })
    .into_iter()
    .flatten()
    .collect();
    items.push(Report::check("(qσp)q' = q(pτq')", bad2.is_empty(), || json!({ "triples": bad2 })));
    Ok(Report::group(format!("validate_context {}", ctx.label), items))
}

/// `(PτQ, QσP)` as two-sided ideals of `A` and `A'`.
pub fn image_rings(ctx: &MoritaContext) -> Result<(IdealWitness, IdealWitness)> {
    let a = IdealWitness::new(Subspace::from_cols(&ctx.wt), Side::TwoSided);
    let ap = IdealWitness::new(Subspace::from_cols(&ctx.bt), Side::TwoSided);
    if !a.verify(&ctx.a) || !ap.verify(&ctx.ap) {
        return Err(Error::Invalid("connecting images are not ideals; validate the context first".into()));
    }
    Ok((a, ap))
}

/// The context restricted to the images of its connecting maps.
pub fn bar(ctx: &MoritaContext) -> Result<MoritaContext> {
    let (ia, iap) = image_rings(ctx)?;
    let abar = ctx.a.sub(&ia.subspace, format!("{}̄", ctx.a.label))?.with_detected_unit();
    let apbar = ctx.ap.sub(&iap.subspace, format!("{}̄", ctx.ap.label))?.with_detected_unit();
    let (inc_a, inc_ap) = (ia.subspace.inclusion(), iap.subspace.inclusion());
    let p = ctx.p.restrict_left(&abar, &inc_a)?.restrict_right(&apbar, &inc_ap)?;
    let q = ctx.q.restrict_left(&apbar, &inc_ap)?.restrict_right(&abar, &inc_a)?;
    let wt = ia.subspace.coords(&ctx.wt);
    let bt = iap.subspace.coords(&ctx.bt);
    MoritaContext::new(abar, apbar, p, q, wt, bt, format!("{}̄", ctx.label))
}

/// `ω_M : M ⊗_A P ⊗_{A'} Q -> M`, `m⊗p⊗q ↦ m·τ(p⊗q)`.
#[derive(Clone, Debug)]
pub struct Omega {
    pub mp: Tensor,
    pub mpq: Tensor,
    pub map: Mat,
}

pub fn omega(ctx: &MoritaContext, m: &Bimodule) -> Result<Omega> {
    let f = ctx.field();
    let mp = tensor_over(m, &ctx.a, &ctx.p)?;
    let mpq = tensor_over(&mp.module, &ctx.ap, &ctx.q)?;
    let map = m
        .right_flat()?
        .mul(&id(f, m.dim()).kron(&ctx.wt))
        .mul(&mp.section().kron(&id(f, ctx.q.dim())))
        .mul(mpq.section());
    Ok(Omega { mp, mpq, map })
}

/// `β_N : N ⊗_{A'} Q ⊗_A P -> N`.
pub fn beta(ctx: &MoritaContext, n: &Bimodule) -> Result<Omega> {
    omega(&swap(ctx), n)
}

/// For every catalog module: `ω_M` is bijective exactly when `M` is firm.
pub fn omegabeta_check(ctx: &MoritaContext, catalog: &[Bimodule]) -> Result<Report> {
    let name = "omega iso ⇔ firm";
    if Subspace::from_cols(&ctx.wt).dim() != ctx.a.dim() {
        return Ok(Report::unmet(name, "τ is not surjective"));
    }
    let rows = par::map(catalog, |m| -> Result<Report> {
        let firm = module_firmness(m, &ctx.a)?.is_firm;
        let iso = is_iso(&omega(ctx, m)?.map);
        Ok(Report::check(m.label.clone(), firm == iso, || json!({ "firm": firm, "omega_iso": iso }))
            .with_fact("firm", firm)
            .with_fact("omega_iso", iso))
    });
    Ok(Report::group(name, rows.into_iter().collect::<Result<_>>()?))
}

#[derive(Clone, Debug)]
pub struct ReducedContext {
    pub base: MoritaContext,
    /// Idempotent left ideal of `QσP` inside `A'`.
    pub b: IdealWitness,
    /// `W = PBτQ` inside `A`.
    pub w: IdealWitness,
    /// `P` as a `W`-`B` bimodule.
    pub p_wb: Bimodule,
    /// `Q` as a `B`-`W` bimodule.
    pub q_bw: Bimodule,
    /// `P̄ = P ⊗_B B`.
    pub pbar: Tensor,
    /// `Q̄ = B ⊗_B Q`.
    pub qbar: Tensor,
    /// `(W, B, P̄, Q̄, τ̄, σ̄)`.
    pub context: MoritaContext,
    pub lemma: Report,
    pub tau_surjective: bool,
    pub tau_bijective: bool,
    pub sigma_surjective: bool,
    pub sigma_bijective: bool,
}

/// The idempotent core of `QσP`, used when no `B` is supplied.
pub fn discover_b(ctx: &MoritaContext) -> Result<Subspace> {
    let (_, iap) = image_rings(ctx)?;
    Ok(idempotent_core(&ctx.ap, &iap)?.ideal.subspace)
}

pub fn reduce_by_ideal(ctx: &MoritaContext, b: &Subspace) -> Result<ReducedContext> {
    let f = ctx.field();
    let (dp, dq) = (ctx.p.dim(), ctx.q.dim());
    let (_, iap) = image_rings(ctx)?;
    if !iap.subspace.contains_space(b) {
        return Err(Error::Hypotheses("B is not inside QσP".into()));
    }
    if !span_eq(&ctx.ap.span_products(b, b), b) {
        return Err(Error::Hypotheses("B is not idempotent".into()));
    }
    if !b.contains_space(&ctx.ap.span_products(&iap.subspace, b)) {
        return Err(Error::Hypotheses("B is not a left ideal of QσP".into()));
    }
    let b_inc = b.inclusion();
    let bb = ctx.ap.sub(b, "B")?.with_detected_unit();
    let rf_p = ctx.p.right_flat()?;
    let lf_p = ctx.p.left_flat()?;
    let rf_q = ctx.q.right_flat()?;
    let lf_q = ctx.q.left_flat()?;
    let pb = Subspace::from_cols(&rf_p.mul(&id(f, dp).kron(&b_inc)));
    let w = Subspace::from_cols(&ctx.wt.mul(&pb.inclusion().kron(&id(f, dq))));
    let ww = ctx.a.sub(&w, "W")?.with_detected_unit();
    let w_inc = w.inclusion();

    let p_wb = ctx.p.restrict_left(&ww, &w_inc)?.restrict_right(&bb, &b_inc)?.with_label("P");
    let q_bw = ctx.q.restrict_left(&bb, &b_inc)?.restrict_right(&ww, &w_inc)?.with_label("Q");
    let pbar = tensor_over(&p_wb, &bb, &Bimodule::regular(&bb))?;
    let qbar = tensor_over(&Bimodule::regular(&bb), &bb, &q_bw)?;

    // τ̄((p⊗b)⊗(b'⊗q)) = τ(p·bb' ⊗ q)
    let m_b = bb.table().clone();
    let flat_tau = ctx
        .wt
        .mul(&p_wb.right_flat()?.mul(&id(f, dp).kron(&m_b)).kron(&id(f, dq)));
    let tbar = w.coords(&flat_tau).mul(&pbar.section().kron(qbar.section()));
    // σ̄((b⊗q)⊗(p⊗b')) = b σ(q⊗p) b'
    let m_ap = ctx.ap.table();
    let inner = m_ap.mul(&b_inc.kron(&ctx.bt));
    let flat_sigma = m_ap.mul(&inner.kron(&b_inc));
    let sbar = b.coords(&flat_sigma).mul(&qbar.section().kron(pbar.section()));
    let context = MoritaContext::new(
        ww.clone(),
        bb.clone(),
        pbar.module.clone().with_label("P̄"),
        qbar.module.clone().with_label("Q̄"),
        tbar,
        sbar,
        format!("{}/B", ctx.label),
    )?;

    let qspb = Subspace::from_cols(&ctx.bt.mul(&id(f, dq).kron(&pb.inclusion())));
    let wpb = Subspace::from_cols(&lf_p.mul(&w_inc.kron(&pb.inclusion())));
    let bq = Subspace::from_cols(&lf_q.mul(&b_inc.kron(&id(f, dq))));
    let bqw = Subspace::from_cols(&rf_q.mul(&bq.inclusion().kron(&w_inc)));
    let bprime = Subspace::from_cols(&inner);
    let pbprime = Subspace::from_cols(&rf_p.mul(&id(f, dp).kron(&bprime.inclusion())));
    let w_again = Subspace::from_cols(&ctx.wt.mul(&pbprime.inclusion().kron(&id(f, dq))));
    let dims = |s: &Subspace, t: &Subspace| json!({ "lhs_dim": s.dim(), "rhs_dim": t.dim() });
    let lemma = Report::group(
        "B-W lemma",
        vec![
            Report::check("(i) QσPB = B", span_eq(&qspb, b), || dims(&qspb, b)),
            Report::check("(ii) WPB = PB", span_eq(&wpb, &pb), || dims(&wpb, &pb)),
            Report::check("(ii) BQW = BQ", span_eq(&bqw, &bq), || dims(&bqw, &bq)),
            Report::check("(iii) W idempotent", span_eq(&ctx.a.span_products(&w, &w), &w), || {
                dims(&ctx.a.span_products(&w, &w), &w)
            }),
            Report::check("(iv) W = PB'τQ", span_eq(&w_again, &w), || dims(&w_again, &w))
                .with_fact("dim B'", bprime.dim()),
        ],
    );
    let tau = context.tau()?;
    let sigma = context.sigma()?;
    let tau_surjective = Subspace::from_cols(&tau).dim() == ww.dim();
    let sigma_surjective = Subspace::from_cols(&sigma).dim() == bb.dim();
    Ok(ReducedContext {
        base: ctx.clone(),
        b: IdealWitness::new(b.clone(), Side::Left),
        w: IdealWitness::new(w, Side::TwoSided),
        p_wb,
        q_bw,
        pbar,
        qbar,
        tau_bijective: is_iso(&tau),
        sigma_bijective: is_iso(&sigma),
        tau_surjective,
        sigma_surjective,
        context,
        lemma,
    })
}

#[derive(Clone, Debug)]
pub struct SecondReduced {
    pub reduced: ReducedContext,
    pub w_tilde: FirmSquare,
    pub b_tilde: FirmSquare,
    /// `(W̃, B̃, W̃⊗_W P⊗_B B̃, B̃⊗_B Q⊗_W W̃, τ̃, σ̃)`.
    pub context: MoritaContext,
    pub tau_bijective: bool,
    pub sigma_bijective: bool,
}

/// `R⊗_R R` as a bimodule with the ring `R̃` acting on the `tilde` side and
/// `R` on the other.
fn square_bimodule(r: &Algebra, sq: &FirmSquare, tilde_left: bool) -> Result<Bimodule> {
    let t = tensor_over(&Bimodule::regular(r), r, &Bimodule::regular(r))?;
    let dim = t.dim();
    let (left, right) = if tilde_left {
        (Some(Action { algebra: sq.algebra.clone(), mats: sq.algebra.left_regular() }), t.module.right)
    } else {
        (t.module.left, Some(Action { algebra: sq.algebra.clone(), mats: sq.algebra.right_regular() }))
    };
    Bimodule::new(r.field(), dim, left, right, sq.algebra.label.clone())
}

pub fn second_reduced(ctx: &MoritaContext, b: &Subspace) -> Result<SecondReduced> {
    let reduced = reduce_by_ideal(ctx, b)?;
    let f = ctx.field();
    let w = reduced.context.a.clone();
    let bb = reduced.context.ap.clone();
    let (dp, dq) = (ctx.p.dim(), ctx.q.dim());
    let wsq = firm_square(&w)?;
    let bsq = firm_square(&bb)?;
    let wt_w = square_bimodule(&w, &wsq, true)?;
    let w_wt = square_bimodule(&w, &wsq, false)?;
    let bt_b = square_bimodule(&bb, &bsq, true)?;
    let b_bt = square_bimodule(&bb, &bsq, false)?;

    let x = tensor_over(&wt_w, &w, &reduced.p_wb)?;
    let pt = tensor_over(&x.module, &bb, &b_bt)?;
    let y = tensor_over(&bt_b, &bb, &reduced.q_bw)?;
    let qt = tensor_over(&y.module, &w, &w_wt)?;

    let (sec_ww, proj_ww) = (wsq.carrier.section(), wsq.carrier.projection());
    let (sec_bb, proj_bb) = (bsq.carrier.section(), bsq.carrier.projection());
    // P̃ -> W⊗W⊗P⊗B⊗B and Q̃ -> B⊗B⊗Q⊗W⊗W
    let lift_p = sec_ww.kron(&id(f, dp)).mul(x.section()).kron(sec_bb).mul(pt.section());
    let lift_q = sec_bb.kron(&id(f, dq)).mul(y.section()).kron(sec_ww).mul(qt.section());

    let m_w = w.table();
    let m_b = bb.table();
    let m4_b = m_b.mul(&m_b.kron(m_b));
    let m4_w = m_w.mul(&m_w.kron(m_w));
    let w_coords = |m: &Mat| reduced.w.subspace.coords(m);
    let b_coords = |m: &Mat| reduced.b.subspace.coords(m);
    let b_inc = reduced.b.subspace.inclusion();

    // τ̃ = [w1w2 τ(p·b1b2b1'b2' ⊗ q')] ⊗ [w1'w2']
    let core_t = w_coords(&ctx.wt.mul(&reduced.p_wb.right_flat()?.mul(&id(f, dp).kron(&m4_b)).kron(&id(f, dq))));
    let left_t = m_w.mul(&m_w.kron(&core_t));
    let tt = proj_ww.mul(&left_t.kron(m_w)).mul(&lift_p.kron(&lift_q));
    // σ̃ = [b1b2] ⊗ [σ(q·w1w2w1'w2' ⊗ p')·b1'b2']
    let core_s = ctx.bt.mul(&reduced.q_bw.right_flat()?.mul(&id(f, dq).kron(&m4_w)).kron(&id(f, dp)));
    let right_s = b_coords(&ctx.ap.table().mul(&core_s.kron(&b_inc.mul(m_b))));
    let st = proj_bb.mul(&m_b.kron(&right_s)).mul(&lift_q.kron(&lift_p));

    let context = MoritaContext::new(
        wsq.algebra.clone(),
        bsq.algebra.clone(),
        pt.module.clone().with_label("P̃"),
        qt.module.clone().with_label("Q̃"),
        tt,
        st,
        format!("{}~", ctx.label),
    )?;
    let tau_bijective = is_iso(&context.tau()?);
    let sigma_bijective = is_iso(&context.sigma()?);
    Ok(SecondReduced { reduced, w_tilde: wsq, b_tilde: bsq, context, tau_bijective, sigma_bijective })
}

/// Round trips of the equivalence between firm `W`- and firm `B`-modules,
/// certified object by object on the supplied catalogs.
pub fn kato_ohtake_verify(red: &ReducedContext, cat_w: &[Bimodule], cat_b: &[Bimodule]) -> Result<Report> {
    let ctx = &red.context;
    let side = |cat: &[Bimodule], c: &MoritaContext, name: &str| -> Result<Report> {
        let rows = par::map(cat, |m| -> Result<Report> {
            let firm = module_firmness(m, &c.a)?.is_firm;
            if !firm {
                return Ok(Report::pass(m.label.clone()).with_fact("firm", false).with_detail("not firm; outside the category"));
            }
            let image = tensor_over(m, &c.a, &c.p)?;
            let image_firm = module_firmness(&image.module, &c.ap)?.is_firm;
            let round = is_iso(&omega(c, m)?.map);
            Ok(Report::group(
                m.label.clone(),
                vec![
                    Report::check("image firm", image_firm, || json!({ "image_dim": image.dim() })),
                    Report::check("round trip iso", round, || json!({ "dim": m.dim() })),
                ],
            )
            .with_fact("dim", m.dim())
            .with_fact("image_dim", image.dim()))
        });
        Ok(Report::group(name, rows.into_iter().collect::<Result<_>>()?))
    };
    let sw = swap(ctx);
    Ok(Report::group(
        format!("kato_ohtake {}", red.base.label),
        vec![side(cat_w, ctx, "W-modules via ω̄")?, side(cat_b, &sw, "B-modules via β̄")?],
    )
    .with_detail("certified on the supplied catalog"))
}

/// Materialises `B`, `B' = B·QσP` and `B̃ = B⊗_B B` and checks their claimed properties.
pub fn reduction_conditions(ctx: &MoritaContext, b: Option<&Subspace>) -> Result<Report> {
    let (_, iap) = image_rings(ctx)?;
    let b = match b {
        Some(b) => b.clone(),
        None => discover_b(ctx)?,
    };
    let ap = &ctx.ap;
    let i = &iap.subspace;
    let b_idem = span_eq(&ap.span_products(&b, &b), &b);
    let b_left = b.contains_space(&ap.span_products(i, &b)) && i.contains_space(&b);
    let bp = ap.span_products(&b, i);
    let bp_two = bp.contains_space(&ap.span_products(i, &bp)) && bp.contains_space(&ap.span_products(&bp, i));
    let bp_idem = span_eq(&ap.span_products(&bp, &bp), &bp);
    let balg = ap.sub(&b, "B")?;
    let sq = firm_square(&balg)?;
    let sq_firm = firmness(&sq.algebra)?.is_firm;
    let image = Subspace::from_cols(&b.inclusion().mul(&sq.to_ring));
    let b_firm = firmness(&balg)?.is_firm;
    Ok(Report::group(
        "reduction conditions",
        vec![
            Report::check("(i) B idempotent left ideal of QσP", b_idem && b_left, || {
                json!({ "idempotent": b_idem, "left_ideal": b_left })
            })
            .with_fact("dim B", b.dim())
            .with_fact("B firm", b_firm),
            Report::check("(ii) B' two-sided idempotent ideal", bp_two && bp_idem, || {
                json!({ "two_sided": bp_two, "idempotent": bp_idem })
            })
            .with_fact("dim B'", bp.dim()),
            Report::check("(iii) B̃ firm with image B", sq_firm && span_eq(&image, &b), || {
                json!({ "firm": sq_firm, "image_dim": image.dim() })
            })
            .with_fact("dim B̃", sq.algebra.dim()),
        ],
    ))
}

/// `u = (μ_{A,P}⊗Q)∘(A⊗τ)^{-1}∘d_A : A -> P⊗_{A'}Q` on carriers, or `None`
/// when `A⊗τ` fails to be invertible.
pub fn unit_map(ctx: &MoritaContext) -> Result<Option<Mat>> {
    let f = ctx.field();
    let firm = firmness(&ctx.a)?;
    let d = firm.d.ok_or_else(|| Error::Hypotheses(format!("{} is not firm", ctx.a.label)))?;
    let pq = ctx.pq()?;
    let tau = pq.carrier.descend(&ctx.wt);
    let apq = tensor_over(&Bimodule::regular(&ctx.a), &ctx.a, &pq.module)?;
    let da = ctx.a.dim();
    let a_tau = firm.square.ascend(&id(f, da).kron(&tau)).mul(apq.section());
    if !is_iso(&a_tau) {
        return Ok(None);
    }
    let mu = pq
        .projection()
        .mul(&ctx.p.left_flat()?.kron(&id(f, ctx.q.dim())))
        .mul(&id(f, da).kron(pq.section()))
        .mul(apq.section());
    Ok(Some(mu.mul(&inverse(&a_tau)?).mul(&d)))
}

fn ev_matrix(h: &Hom) -> Mat {
    // Q ⊗ Hom -> target, e_q ⊗ φ_i ↦ φ_i(e_q)
    let maps = h.maps();
    let (ds, dh) = (h.source_dim, h.dim());
    Mat::from_fn(h.module.field(), h.target_dim, ds * dh, |x, c| maps[c % dh].get(x, c / dh).clone())
}

/// Items (i)-(vii) for a context with firm `A` and surjective `τ`; the
/// categorical items are certified on the two catalogs of right modules.
pub fn moritafirm_checks(ctx: &MoritaContext, cat_a: &[Bimodule], cat_ap: &[Bimodule]) -> Result<Report> {
    let name = format!("firm context {}", ctx.label);
    let f = ctx.field();
    let firm = firmness(&ctx.a)?;
    if !firm.is_firm {
        return Ok(Report::unmet(name, format!("{} is not firm", ctx.a.label)));
    }
    if Subspace::from_cols(&ctx.wt).dim() != ctx.a.dim() {
        return Ok(Report::unmet(name, "τ is not surjective"));
    }
    let d = firm.d.clone().expect("firm");
    let (da, dp, dq, dap) = (ctx.a.dim(), ctx.p.dim(), ctx.q.dim(), ctx.ap.dim());
    let pq = ctx.pq()?;
    let tau = pq.carrier.descend(&ctx.wt);
    let mut items = Vec::new();

    let Some(u) = unit_map(ctx)? else {
        items.push(Report::fail("(i) A⊗τ invertible", json!(null)));
        return Ok(Report::group(name, items));
    };
    let pql = pq.module.left_mats()?;
    let pqr = pq.module.right_mats()?;
    let lreg = ctx.a.left_regular();
    let rreg = ctx.a.right_regular();
    let bimod = (0..da).all(|i| u.mul(&lreg[i]) == pql[i].mul(&u) && u.mul(&rreg[i]) == pqr[i].mul(&u));
    items.push(Report::group(
        "(i) unit",
        vec![
            Report::equal("τ∘u = id", &tau.mul(&u), &id(f, da)),
            Report::check("u is A-bilinear", bimod, || json!(null)),
        ],
    ));

    let firm_a: Vec<&Bimodule> =
        cat_a.iter().filter(|m| module_firmness(m, &ctx.a).map(|r| r.is_firm).unwrap_or(false)).collect();

    // (ii) f ↦ f⊗P on Hom spaces
    let pairs: Vec<(usize, usize)> =
        (0..firm_a.len()).flat_map(|i| (0..firm_a.len()).map(move |j| (i, j))).collect();
    let rows = par::map(&pairs, |&(i, j)| -> Result<Report> {
        let (m, n) = (firm_a[i], firm_a[j]);
        let h1 = hom(m, n, Side::Right)?;
        let tm = tensor_over(m, &ctx.a, &ctx.p)?;
        let tn = tensor_over(n, &ctx.a, &ctx.p)?;
        let h2 = hom(&tm.module, &tn.module, Side::Right)?;
        let cols = h1
            .maps()
            .iter()
            .map(|g| {
                let img = tn.projection().mul(&g.kron(&id(f, dp))).mul(tm.section());
                h2.coords(&img).ok_or_else(|| Error::Invalid("f⊗P is not A'-linear".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let rank = Mat::hstack(&cols.iter().collect::<Vec<_>>(), f, h2.dim()).rank();
        let ok = rank == h1.dim() && rank == h2.dim();
        Ok(Report::check(format!("{} -> {}", m.label, n.label), ok, || {
            json!({ "hom_A": h1.dim(), "hom_A'": h2.dim(), "rank": rank })
        }))
    });
    items.push(
        Report::group("(ii) -⊗P fully faithful", rows.into_iter().collect::<Result<_>>()?)
            .with_detail("certified on the supplied catalog"),
    );

    let aa = &firm.square;
    let sec_aa_d = aa.section().mul(&d);
    let u_flat = pq.section().mul(&u);

    // (iii) A⊗_A P ≅ A⊗_A Hom_{A'}(Q, A')
    {
        let dual = hom(&ctx.q, &Bimodule::regular(&ctx.ap), Side::Left)?;
        let theta_cols = (0..dp)
            .map(|p| {
                let phi = Mat::from_fn(f, dap, dq, |x, q| ctx.bt.get(x, q * dp + p).clone());
                dual.coords(&phi).ok_or_else(|| Error::Invalid("qσp is not left A'-linear in q".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let theta = Mat::hstack(&theta_cols.iter().collect::<Vec<_>>(), f, dual.dim());
        let ap_t = tensor_over(&Bimodule::regular(&ctx.a), &ctx.a, &ctx.p)?;
        let ah_t = tensor_over(&Bimodule::regular(&ctx.a), &ctx.a, &dual.module)?;
        let alpha = ah_t.projection().mul(&id(f, da).kron(&theta)).mul(ap_t.section());
        let ev = ev_matrix(&dual);
        let g = ctx
            .p
            .right_flat()?
            .mul(&id(f, dp).kron(&ev))
            .mul(&u_flat.kron(&id(f, dual.dim())));
        let alpha_inv = ap_t
            .projection()
            .mul(&id(f, da).kron(&g))
            .mul(&sec_aa_d.kron(&id(f, dual.dim())))
            .mul(ah_t.section());
        items.push(
            Report::group(
                "(iii) A⊗P ≅ A⊗Hom(Q,A')",
                vec![
                    Report::equal("α⁻¹∘α = id", &alpha_inv.mul(&alpha), &id(f, ap_t.dim())),
                    Report::equal("α∘α⁻¹ = id", &alpha.mul(&alpha_inv), &id(f, ah_t.dim())),
                ],
            )
            .with_fact("dim", ap_t.dim()),
        );
    }

    // (iv) N⊗Q⊗A ≅ Hom_{A'}(P, N)⊗A
    let rows = par::map(cat_ap, |n| -> Result<Report> {
        let dn = n.dim();
        let nq = tensor_over(n, &ctx.ap, &ctx.q)?;
        let nqa = tensor_over(&nq.module, &ctx.a, &Bimodule::regular(&ctx.a))?;
        let h = hom(&ctx.p, n, Side::Right)?;
        let ha = tensor_over(&h.module, &ctx.a, &Bimodule::regular(&ctx.a))?;
        let rf_n = n.right_flat()?;
        let mut theta_cols = Vec::with_capacity(dn * dq);
        for x in 0..dn {
            for q in 0..dq {
                let map = Mat::from_fn(f, dn, dp, |r, p| {
                    let s = ctx.bt.col(q * dp + p);
                    rf_n.mul(&Mat::unit_column(f, dn, x).kron(&s)).get(r, 0).clone()
                });
                theta_cols.push(h.coords(&map).ok_or_else(|| Error::Invalid("nσ(q⊗-) is not A'-linear".into()))?);
            }
        }
        let theta = Mat::hstack(&theta_cols.iter().collect::<Vec<_>>(), f, h.dim());
        let phi = ha
            .projection()
            .mul(&theta.kron(&id(f, da)))
            .mul(&nq.section().kron(&id(f, da)))
            .mul(nqa.section());
        let maps = h.maps();
        let hcols: Vec<Mat> = (0..h.dim())
            .flat_map(|i| (0..da).map(move |a| (i, a)))
            .map(|(i, a)| maps[i].kron(&id(f, dq)).mul(&u_flat.col(a)))
            .collect();
        let hh = Mat::hstack(&hcols.iter().collect::<Vec<_>>(), f, dn * dq);
        let phi_inv = nqa
            .projection()
            .mul(&nq.projection().kron(&id(f, da)))
            .mul(&hh.kron(&id(f, da)))
            .mul(&id(f, h.dim()).kron(&sec_aa_d))
            .mul(ha.section());
        Ok(Report::group(
            n.label.clone(),
            vec![
                Report::equal("Φ⁻¹∘Φ = id", &phi_inv.mul(&phi), &id(f, nqa.dim())),
                Report::equal("Φ∘Φ⁻¹ = id", &phi.mul(&phi_inv), &id(f, ha.dim())),
            ],
        )
        .with_fact("dim", nqa.dim()))
    });
    items.push(
        Report::group("(iv) -⊗Q⊗A ≅ Hom(P,-)⊗A", rows.into_iter().collect::<Result<_>>()?)
            .with_detail("certified on the supplied catalog"),
    );

    // (v) A ⊂ End_{A'}(P) left ideal, A ⊂ _{A'}End(Q)^op right ideal
    {
        let end_p = hom(&ctx.p, &ctx.p, Side::Right)?;
        let lam: Vec<Mat> = ctx.p.left_mats()?.to_vec();
        let lam_span = Subspace::from_cols(&Mat::hstack(
            &lam.iter().map(vectorize).collect::<Vec<_>>().iter().collect::<Vec<_>>(),
            f,
            dp * dp,
        ));
        let inj_p = lam_span.dim() == da;
        let ideal_p = end_p.maps().iter().all(|e| lam.iter().all(|l| lam_span.contains(&vectorize(&e.mul(l)))));
        let end_q = hom(&ctx.q, &ctx.q, Side::Left)?;
        let rho: Vec<Mat> = ctx.q.right_mats()?.to_vec();
        let rho_span = Subspace::from_cols(&Mat::hstack(
            &rho.iter().map(vectorize).collect::<Vec<_>>().iter().collect::<Vec<_>>(),
            f,
            dq * dq,
        ));
        let inj_q = rho_span.dim() == da;
        let ideal_q = end_q.maps().iter().all(|g| rho.iter().all(|r| rho_span.contains(&vectorize(&g.mul(r)))));
        items.push(Report::group(
            "(v) A as an ideal of endomorphism rings",
            vec![
                Report::check("A left ideal in End_A'(P)", inj_p && ideal_p, || {
                    json!({ "injective": inj_p, "ideal": ideal_p })
                })
                .with_fact("dim End", end_p.dim()),
                Report::check("A right ideal in A'End(Q)^op", inj_q && ideal_q, || {
                    json!({ "injective": inj_q, "ideal": ideal_q })
                })
                .with_fact("dim End", end_q.dim()),
            ],
        ));
    }

    // (vi) Q⊗_A A generates the firm catalog modules
    {
        let qa = tensor_over(&ctx.q, &ctx.a, &Bimodule::regular(&ctx.a))?;
        let rows = par::map(&firm_a, |m| -> Result<Report> {
            let h = hom(&qa.module, m, Side::Right)?;
            let maps = h.maps();
            let span = if maps.is_empty() {
                0
            } else {
                Mat::hstack(&maps.iter().collect::<Vec<_>>(), f, m.dim()).rank()
            };
            Ok(Report::check(m.label.clone(), span == m.dim(), || {
                json!({ "image_dim": span, "dim": m.dim() })
            }))
        });
        items.push(
            Report::group("(vi) Q⊗A generator", rows.into_iter().collect::<Result<_>>()?)
                .with_detail("certified on the firm modules of the supplied catalog"),
        );
    }

    // (vii)
    {
        let p_firm = left_module_firmness(&ctx.p, &ctx.a)?.is_firm;
        let q_firm = module_firmness(&ctx.q, &ctx.a)?.is_firm;
        let item = if p_firm || q_firm {
            Report::check("(vii) τ bijective", is_iso(&tau), || json!({ "carrier": pq.dim(), "rank": tau.rank() }))
        } else {
            Report::unmet("(vii) τ bijective", "neither P nor Q is firm over A")
        }
        .with_fact("P firm", p_firm)
        .with_fact("Q firm", q_firm);
        items.push(item);
    }
    Ok(Report::group(name, items))
}

#[derive(Clone, Debug)]
pub struct DualBasis {
    pub r: Algebra,
    /// `ŭ : R -> P⊗_{A'}Q` on the carrier.
    pub u_breve: Mat,
    /// `R⊗_R P` as an `R`-`A'` bimodule.
    pub rp: Tensor,
    /// `(R⊗_R P)* = Hom_{A'}(R⊗_R P, A')`.
    pub dual: Hom,
    /// `(R⊗_R P)⊗_{A'}(R⊗_R P)*`.
    pub ring: Tensor,
    /// `ĵ : R -> ring` on the carrier.
    pub j_hat: Mat,
    /// Product of `ring`, carrier ⊗ carrier -> carrier.
    pub ring_product: Mat,
    pub report: Report,
}

/// The dual-basis maps of a firm left ideal `R ⊆ PτQ`.
pub fn firm_ideal_dualbasis(ctx: &MoritaContext, r: &Subspace) -> Result<DualBasis> {
    let f = ctx.field();
    let (dp, dq) = (ctx.p.dim(), ctx.q.dim());
    let ralg = ctx.a.sub(r, "R")?;
    let rf = firmness(&ralg)?;
    let d_r = rf.d.clone().ok_or_else(|| Error::Hypotheses("R is not firm".into()))?;
    let img = Subspace::from_cols(&ctx.wt);
    if !img.contains_space(r) || !r.contains_space(&ctx.a.span_products(&img, r)) {
        return Err(Error::Hypotheses("R is not a left ideal in PτQ".into()));
    }
    let r_inc = r.inclusion();

    let red = reduce_by_ideal(&swap(ctx), r)?;
    let ctx2 = swap(&red.context);
    let u = unit_map(&ctx2)?.ok_or_else(|| Error::Hypotheses("R⊗τ̄ is not invertible".into()))?;
    let pq2 = ctx2.pq()?;
    // ctx2.p = R⊗_R P lives in red.qbar, ctx2.q = Q⊗_R R in red.pbar
    let lf_pr = ctx.p.left_flat()?.mul(&r_inc.kron(&id(f, dp)));
    let rf_qr = ctx.q.right_flat()?.mul(&id(f, dq).kron(&r_inc));
    let pq = ctx.pq()?;
    let u_breve = pq
        .projection()
        .mul(&lf_pr.kron(&rf_qr))
        .mul(&red.qbar.section().kron(red.pbar.section()))
        .mul(pq2.section())
        .mul(&u);
    let tau = pq.carrier.descend(&ctx.wt);

    let p_r = ctx.p.restrict_left(&ralg, &r_inc)?;
    let rp = tensor_over(&Bimodule::regular(&ralg), &ralg, &p_r)?;
    let dual = hom(&rp.module, &Bimodule::regular(&ctx.ap), Side::Right)?;
    let ring = tensor_over(&rp.module, &ctx.ap, &dual.module)?;
    let act_rp = lf_pr.mul(rp.section());
    let fcols = (0..dq)
        .map(|q| {
            let fq = ctx.bt.mul(&Mat::unit_column(f, dq, q).kron(&act_rp));
            dual.coords(&fq).ok_or_else(|| Error::Invalid("qσ(-) is not A'-linear".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let fmat = Mat::hstack(&fcols.iter().collect::<Vec<_>>(), f, dual.dim());
    let dr = ralg.dim();
    let j_hat = ring
        .projection()
        .mul(&rp.projection().kron(&fmat))
        .mul(&id(f, dr).kron(&pq.section().mul(&u_breve)))
        .mul(rf.square.section())
        .mul(&d_r);

    let drp = rp.dim();
    // D ⊗ (R⊗P) -> A', φ_i ⊗ e_j ↦ φ_i(e_j)
    let dmaps = dual.maps();
    let ev = Mat::from_fn(f, ctx.ap.dim(), dual.dim() * rp.dim(), |x, c| {
        dmaps[c / rp.dim()].get(x, c % rp.dim()).clone()
    });
    let rf_rp = rp.module.right_flat()?;
    let apply = rf_rp.mul(&id(f, drp).kron(&ev));
    let ring_product = ring
        .projection()
        .mul(&apply.kron(&id(f, dual.dim())))
        .mul(&ring.section().kron(ring.section()));
    let lhs = ring_product.mul(&j_hat.kron(&j_hat));
    let rhs = j_hat.mul(ralg.table());
    let act = apply.mul(&ring.section().kron(&id(f, drp)));
    let left = rp.module.left_mats()?;
    let bad_action =
        first_failure(dr, |i| act.mul(&j_hat.col(i).kron(&id(f, drp))) == left[i]);
    let report = Report::group(
        "firm ideal dual basis",
        vec![
            Report::equal("τ∘ŭ = inclusion", &tau.mul(&u_breve), &r_inc),
            Report::equal("ĵ multiplicative", &lhs, &rhs),
            Report::check("ĵ induces the left R-action", bad_action.is_none(), || json!({ "basis": bad_action })),
        ],
    )
    .with_fact("dim R", dr)
    .with_fact("dim R⊗P", drp);
    Ok(DualBasis { r: ralg, u_breve, rp, dual, ring, j_hat, ring_product, report })
}

/// Small contexts used by tests and the example catalog.
pub mod standard {
    use super::*;
    use crate::algebra::standard::{diagonal, ground, matrix};

    /// `A = k`, `A' = k×k`, `P = Q = k` through the first factor.
    pub fn projection_context(f: Field) -> MoritaContext {
        let k = ground(f);
        let kk = diagonal(f, 2);
        let one = Mat::identity(f, 1);
        let zero = Mat::zeros(f, 1, 1);
        let p = Bimodule::new(
            f,
            1,
            Some(Action { algebra: k.clone(), mats: vec![one.clone()] }),
            Some(Action { algebra: kk.clone(), mats: vec![one.clone(), zero.clone()] }),
            "P",
        )
        .expect("shapes");
        let q = Bimodule::new(
            f,
            1,
            Some(Action { algebra: kk.clone(), mats: vec![one.clone(), zero] }),
            Some(Action { algebra: k.clone(), mats: vec![one.clone()] }),
            "Q",
        )
        .expect("shapes");
        let bt = Mat::from_ints(f, &[&[1], &[0]]);
        MoritaContext::new(k, kk, p, q, one, bt, "projection").expect("shapes")
    }

    /// `A = k`, `A' = M_2`, `P` row vectors, `Q` column vectors.
    pub fn matrix_context(f: Field) -> MoritaContext {
        let k = ground(f);
        let m2 = matrix(f, 2);
        let unit = |i: usize, j: usize| {
            Mat::from_fn(f, 2, 2, |r, c| if r == i && c == j { f.one() } else { f.zero() })
        };
        // (x e_ij)_l = x_i δ_jl  and  (e_ij y)_l = δ_li y_j
        let rows: Vec<Mat> = (0..4).map(|u| unit(u % 2, u / 2)).collect();
        let cols: Vec<Mat> = (0..4).map(|u| unit(u / 2, u % 2)).collect();
        let p = Bimodule::new(
            f,
            2,
            Some(Action { algebra: k.clone(), mats: vec![Mat::identity(f, 2)] }),
            Some(Action { algebra: m2.clone(), mats: rows }),
            "rows",
        )
        .expect("shapes");
        let q = Bimodule::new(
            f,
            2,
            Some(Action { algebra: m2.clone(), mats: cols }),
            Some(Action { algebra: k.clone(), mats: vec![Mat::identity(f, 2)] }),
            "columns",
        )
        .expect("shapes");
        let wt = Mat::from_ints(f, &[&[1, 0, 0, 1]]);
        MoritaContext::new(k, m2, p, q, wt, Mat::identity(f, 4), "matrix").expect("shapes")
    }

    /// Zero bimodules between `k` and `k`.
    pub fn zero_context(f: Field) -> MoritaContext {
        let k = ground(f);
        let z = Bimodule::zero(f, Some(&k), Some(&k));
        MoritaContext::new(k.clone(), k, z.clone(), z, Mat::zeros(f, 1, 0), Mat::zeros(f, 1, 0), "zero")
            .expect("shapes")
    }
}

#[cfg(test)]
mod tests {
    use super::standard::*;
    use super::*;
    use crate::bimodule::catalog;

    const Q: Field = Field::Rational;

    #[test]
    fn validation_examples() {
        assert!(validate_context(&matrix_context(Q)).unwrap().passed());
        assert!(validate_context(&zero_context(Q)).unwrap().passed());
        // Scaling σ alone breaks both squares; scaling τ and σ together keeps them.
        let mut twice = matrix_context(Q);
        twice.bt = twice.bt.scale(&Q.int(2));
        assert!(validate_context(&twice).unwrap().failed());
        twice.wt = twice.wt.scale(&Q.int(2));
        assert!(validate_context(&twice).unwrap().passed());
        assert!(validate_context(&projection_context(Q)).unwrap().passed());
        let mut broken = matrix_context(Q);
        broken.bt.set(0, 0, Q.int(5));
        let r = validate_context(&broken).unwrap();
        assert!(r.failed());
        assert!(r.find("(pτq)p' = p(qσp')").unwrap().witness.is_some());
    }

    #[test]
    fn image_ring_examples() {
        let (a, ap) = image_rings(&matrix_context(Q)).unwrap();
        assert_eq!((a.subspace.dim(), ap.subspace.dim()), (1, 4));
        let (a, ap) = image_rings(&projection_context(Q)).unwrap();
        assert_eq!((a.subspace.dim(), ap.subspace.dim()), (1, 1));
        assert!(ap.subspace.contains(&Mat::from_ints(Q, &[&[1], &[0]])));
        let (a, ap) = image_rings(&zero_context(Q)).unwrap();
        assert_eq!((a.subspace.dim(), ap.subspace.dim()), (0, 0));
    }

    #[test]
    fn omega_examples() {
        let ctx = bar(&matrix_context(Q)).unwrap();
        let abar = Bimodule::right_regular(&ctx.a);
        assert!(is_iso(&omega(&ctx, &abar).unwrap().map));
        let z = Bimodule::zero_action_right(&ctx.a, 1);
        let o = omega(&ctx, &z).unwrap();
        assert!(!is_iso(&o.map));
        let proj = bar(&projection_context(Q)).unwrap();
        let r = omegabeta_check(&proj, &catalog(&proj.a, 3)).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn reduction_examples() {
        let proj = projection_context(Q);
        let b = discover_b(&proj).unwrap();
        assert_eq!(b.dim(), 1);
        let red = reduce_by_ideal(&proj, &b).unwrap();
        assert!(red.lemma.passed(), "{}", red.lemma);
        assert_eq!(red.w.subspace.dim(), 1);
        assert!(red.tau_bijective && red.sigma_bijective);
        assert!(validate_context(&red.context).unwrap().passed());

        let m = matrix_context(Q);
        let whole = m.ap.whole();
        let red = reduce_by_ideal(&m, &whole).unwrap();
        assert!(red.lemma.passed());
        assert_eq!(red.context.ap.dim(), 4);

        let zero = reduce_by_ideal(&proj, &Subspace::zero(Q, 2)).unwrap();
        assert_eq!((zero.context.a.dim(), zero.context.ap.dim()), (0, 0));
        assert!(zero.lemma.passed());

        let not_ideal = Subspace::from_rows(&Mat::from_ints(Q, &[&[0, 1]]));
        assert!(reduce_by_ideal(&proj, &not_ideal).is_err());
    }

    #[test]
    fn second_reduced_is_strict() {
        for ctx in [projection_context(Q), matrix_context(Q)] {
            let b = discover_b(&ctx).unwrap();
            let s = second_reduced(&ctx, &b).unwrap();
            assert!(s.tau_bijective && s.sigma_bijective, "{}", ctx.label);
            assert!(validate_context(&s.context).unwrap().passed());
        }
        let s = second_reduced(&projection_context(Q), &Subspace::zero(Q, 2)).unwrap();
        assert!(s.tau_bijective && s.sigma_bijective);
    }

    #[test]
    fn kato_ohtake_examples() {
        for ctx in [projection_context(Q), matrix_context(Q)] {
            let b = discover_b(&ctx).unwrap();
            let red = reduce_by_ideal(&ctx, &b).unwrap();
            let r = kato_ohtake_verify(&red, &catalog(&red.context.a, 3), &catalog(&red.context.ap, 6)).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn reduction_condition_examples() {
        assert!(reduction_conditions(&projection_context(Q), None).unwrap().passed());
        let r = reduction_conditions(&matrix_context(Q), None).unwrap();
        assert_eq!(r.find("(ii) B' two-sided idempotent ideal").unwrap().facts["dim B'"], json!(4));
        assert!(reduction_conditions(&projection_context(Q), Some(&Subspace::zero(Q, 2))).unwrap().passed());
    }

    #[test]
    fn moritafirm_examples() {
        let proj = projection_context(Q);
        let s = second_reduced(&proj, &discover_b(&proj).unwrap()).unwrap();
        let c = &s.context;
        let r = moritafirm_checks(c, &catalog(&c.a, 3), &catalog(&c.ap, 3)).unwrap();
        assert!(r.passed(), "{r}");
        let m = matrix_context(Q);
        let r = moritafirm_checks(&m, &catalog(&m.a, 3), &catalog(&m.ap, 4)).unwrap();
        assert!(r.passed(), "{r}");
        let u = unit_map(&m).unwrap().unwrap();
        assert_eq!(m.pq().unwrap().carrier.descend(&m.wt).mul(&u), Mat::identity(Q, 1));
    }

    #[test]
    fn dual_basis_examples() {
        let sw = swap(&projection_context(Q));
        let r = Subspace::from_rows(&Mat::from_ints(Q, &[&[1, 0]]));
        let db = firm_ideal_dualbasis(&sw, &r).unwrap();
        assert!(db.report.passed(), "{}", db.report);
        let m = matrix_context(Q);
        let db = firm_ideal_dualbasis(&m, &m.a.whole()).unwrap();
        assert!(db.report.passed(), "{}", db.report);
        let z = firm_ideal_dualbasis(&sw, &Subspace::zero(Q, 2)).unwrap();
        assert!(z.report.passed());
        assert!(z.j_hat.is_zero());
    }
}
