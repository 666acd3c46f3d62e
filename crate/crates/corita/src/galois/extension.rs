//! Coring extensions and the extended comodule context.
//!
//! Only coalgebras `D` over the ground field are handled: for `L = k` the
//! right `L`-linearity cut of `Q` and the left `L`-action on `Σ` are vacuous.

use serde_json::json;

use crate::algebra::{dorroh, firmness, idempotent_core, standard::ground, Algebra, IdealWitness, Side};
use crate::bimodule::{hom, is_projective, module_firmness, tensor_over, Action, Bimodule, Hom, Tensor};
use crate::coring::{
    comodule_hom, convolution_algebra, dual_action, intertwines, validate_coring, Comodule, Convolution, Coring,
    HopfAlgebra,
};
use crate::error::{Error, Result};
use crate::exactlin::{inverse, is_iso, kernel, unvectorize, vectorize, Field, Mat, Subspace};
use crate::morita::{firm_ideal_dualbasis, swap, MoritaContext};
use crate::par;
use crate::report::Report;

use super::contexts::{context_sigma, right_module_of, ComoduleContext};
use super::{hcat, id};

/// A coring `C` over `A` that is a right comodule over a `k`-coalgebra `D`
/// through `ρ: C -> C ⊗_k D`.
#[derive(Clone, Debug)]
pub struct CoringExtension {
    pub c: Coring,
    pub d: Coring,
    /// `dim C·dim D × dim C`, index `(c, d) ↦ c·dim D + d`.
    pub rho: Mat,
}

fn is_ground(a: &Algebra) -> bool {
    let one = id(a.field(), 1);
    a.dim() == 1 && a.table() == &one && a.unit() == Some(&one)
}

impl CoringExtension {
    pub fn new(c: &Coring, d: &Coring, rho: Mat) -> Result<CoringExtension> {
        if !is_ground(&d.a) {
            return Err(Error::Hypotheses(format!(
                "{} is a coring over {}; only coalgebras over the ground field are supported",
                d.label, d.a.label
            )));
        }
        if rho.rows() != c.dim() * d.dim() || rho.cols() != c.dim() {
            return Err(Error::Dimension(format!(
                "D-coaction is {}x{}, expected {}x{}",
                rho.rows(),
                rho.cols(),
                c.dim() * d.dim(),
                c.dim()
            )));
        }
        let x = CoringExtension { c: c.clone(), d: d.clone(), rho };
        let v = validate_extension(&x);
        if !v.passed() {
            return Err(Error::Invalid(format!("extension axioms fail:\n{v}")));
        }
        Ok(x)
    }

    /// `D = k`, `c ↦ c ⊗ 1`.
    pub fn trivial(c: &Coring) -> Result<CoringExtension> {
        let f = c.field();
        let d = Coring::trivial(&ground(f))?;
        CoringExtension::new(c, &d, id(f, c.dim()))
    }

    /// `C = H ⊗ H` over `H` extended by `D = H`, `x⊗y ↦ (x⊗y_{(1)}) ⊗ y_{(2)}`.
    pub fn hopf(hopf: &HopfAlgebra, c: &Coring) -> Result<CoringExtension> {
        let f = c.field();
        let n = hopf.h.dim();
        if c.dim() != n * n {
            return Err(Error::Dimension(format!("{} is not H ⊗ H for dim H = {n}", c.label)));
        }
        let d = hopf_coalgebra(hopf)?;
        let rho = Mat::from_fn(f, n * n * n, n * n, |r, col| {
            if r / (n * n) == col / n {
                hopf.delta.get(r % (n * n), col % n).clone()
            } else {
                f.zero()
            }
        });
        CoringExtension::new(c, &d, rho)
    }

    pub fn field(&self) -> Field {
        self.c.field()
    }
}

/// The underlying coalgebra of a Hopf algebra.
pub fn hopf_coalgebra(hopf: &HopfAlgebra) -> Result<Coring> {
    let f = hopf.h.field();
    let n = hopf.h.dim();
    let k = ground(f);
    let act = || Some(Action { algebra: k.clone(), mats: vec![id(f, n)] });
    let c = Bimodule::new(f, n, act(), act(), hopf.h.label.clone())?;
    Coring::new(k.clone(), c, hopf.delta.clone(), hopf.eps.clone(), format!("{} (coalgebra)", hopf.h.label))
}

/// `D` a coalgebra, `ρ` left `A`-linear, coassociative, counital and left `C`-colinear.
pub fn validate_extension(x: &CoringExtension) -> Report {
    let name = format!("{} extends {}", x.d.label, x.c.label);
    let items = (|| -> Result<Vec<Report>> {
        let f = x.field();
        let (ic, idd) = (id(f, x.c.dim()), id(f, x.d.dim()));
        let rho = &x.rho;
        let dd = x.d.delta_flat();
        let dc = x.c.delta_flat();
        let tgt: Vec<Mat> = x.c.c.left_mats()?.iter().map(|l| l.kron(&idd)).collect();
        let proj = x.c.cc.projection().kron(&idd);
        Ok(vec![
            validate_coring(&x.d),
            intertwines("ρ left A-linear", rho, x.c.c.left_mats()?, &tgt),
            Report::equal("ρ coassociative", &rho.kron(&idd).mul(rho), &ic.kron(&dd).mul(rho)),
            Report::equal("ρ counital", &ic.kron(&x.d.eps).mul(rho), &ic),
            Report::equal(
                "ρ left C-colinear",
                &proj.mul(&dc.kron(&idd)).mul(rho),
                &proj.mul(&ic.kron(rho)).mul(&dc),
            ),
        ])
    })();
    match items {
        Ok(items) => Report::group(name, items),
        Err(e) => Report::group(name, vec![Report::fail("structure", json!(e.to_string()))]),
    }
}

/// The equalizer `M -> M⊗C ⇉ M⊗C⊗C` tensored with `D ⊗_k D` is still an equalizer.
pub fn purity(x: &CoringExtension, m: &Comodule) -> Result<Report> {
    let f = x.field();
    let c = &x.c;
    let ic = id(f, c.dim());
    let mcc = tensor_over(&m.mc.module, &c.a, &c.c)?;
    let rho_c = mcc.projection().mul(&m.rho.kron(&ic)).mul(m.mc.section());
    let m_delta = mcc
        .projection()
        .mul(&m.mc.projection().kron(&ic))
        .mul(&id(f, m.dim()).kron(&c.delta_flat()))
        .mul(m.mc.section());
    let dd = id(f, x.d.dim() * x.d.dim());
    let e = m.rho.kron(&dd);
    let g = rho_c.sub(&m_delta).kron(&dd);
    let rank = e.rank();
    let composite = g.mul(&e).is_zero();
    let ker = kernel(&g).dim();
    let ok = rank == e.cols() && composite && ker == rank;
    Ok(Report::check(format!("purity on {}", m.label), ok, || {
        json!({ "comodule": m.label, "rank": rank, "dim": e.cols(), "kernel": ker, "composite_zero": composite })
    }))
}

/// `M̃(Σ) = (Hom(D,T), ^C End^D(C)^op, Hom^D(D,Σ), Q̃, τ̃, σ̃)`.
#[derive(Clone, Debug)]
pub struct ExtensionContext {
    pub context: MoritaContext,
    /// `M(Σ)`; its `T`, `*C` and `Q` are reused here.
    pub base: ComoduleContext,
    pub convolution: Convolution,
    /// `^C End^D(C)^op` as a subspace of `*C`.
    pub e: Subspace,
    /// Basis of `Hom^D(D,Σ)` as `dim Σ × dim D` maps.
    pub p_maps: Vec<Mat>,
    /// `Σ -> Σ ⊗_k D`, `x ↦ x^{[0]} ε(x^{[1]}_{[0]}) ⊗ x^{[1]}_{[1]}`.
    pub sigma_coaction: Mat,
    pub purity: Report,
}

/// Kernel of a linear map on `rows × cols` matrices, returned as vectorised maps.
fn solve(f: Field, rows: usize, cols: usize, residual: impl Fn(&Mat) -> Mat + Sync) -> Subspace {
    let out = par::map_range(rows * cols, |u| {
        let e = Mat::from_fn(f, rows, cols, |i, j| if i * cols + j == u { f.one() } else { f.zero() });
        vectorize(&residual(&e))
    });
    let height = out.first().map_or(0, |m| m.rows());
    kernel(&hcat(f, height, &out))
}

fn action_on(space: &Subspace, maps: &[Mat], op: impl Fn(&Mat) -> Mat) -> Result<Mat> {
    let cols = maps
        .iter()
        .map(|m| {
            space
                .try_coords(&vectorize(&op(m)))
                .ok_or_else(|| Error::Invalid("corner is not closed under the action".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(hcat(space.field(), maps.len(), &cols))
}

fn combine(f: Field, basis: &[Mat], coeffs: &Mat, rows: usize, cols: usize) -> Mat {
    basis
        .iter()
        .enumerate()
        .fold(Mat::zeros(f, rows, cols), |acc, (k, b)| acc.add(&b.scale(coeffs.get(k, 0))))
}

/// `c ↦ Σ value(c_{[1]})(c_{[0]})` as a map `C -> A`, for `value: D -> *C`.
fn twist(x: &CoringExtension, star: &Hom, values: &[Mat]) -> Mat {
    let f = x.field();
    let (dc, dd) = (x.c.dim(), x.d.dim());
    let maps: Vec<Mat> = values.iter().map(|v| star.element(v)).collect();
    let mut out = Mat::zeros(f, x.c.a.dim(), dc);
    for c in 0..dc {
        let mut col = Mat::zeros(f, x.c.a.dim(), 1);
        for c0 in 0..dc {
            for (d, m) in maps.iter().enumerate() {
                let k = x.rho.get(c0 * dd + d, c);
                if !k.is_zero() {
                    col = col.add(&m.col(c0).scale(k));
                }
            }
        }
        for r in 0..x.c.a.dim() {
            out.set(r, c, col.get(r, 0).clone());
        }
    }
    out
}

/// Builds `M̃(Σ)` after checking purity on `comodules`.
pub fn extension_context(x: &CoringExtension, sigma: &Comodule, comodules: &[Comodule]) -> Result<ExtensionContext> {
    if !sigma.coring.same(&x.c) {
        return Err(Error::ActionMismatch(format!("{} is not a {}-comodule", sigma.label, x.c.label)));
    }
    let purity = Report::group(
        "purity",
        comodules.iter().map(|m| purity(x, m)).collect::<Result<Vec<_>>>()?,
    );
    if !purity.passed() {
        return Err(Error::Hypotheses(format!("the extension is not pure:\n{purity}")));
    }
    let f = x.field();
    let (dc, dd, ds) = (x.c.dim(), x.d.dim(), sigma.dim());
    let idd = id(f, dd);
    let base = context_sigma(sigma)?;
    let t = &base.t;
    let t_alg = &base.context.a;
    let dr = &base.dual;
    let dt = t.dim();

    let k = &x.d.a;
    let triv = || Some(Action { algebra: k.clone(), mats: vec![id(f, dt)] });
    let t_mod = Bimodule::new(f, dt, triv(), triv(), "T")?;
    let conv = convolution_algebra(&x.d, t_alg, &t_mod)?;
    let g_maps = conv.hom.maps();

    let reg = Comodule::regular(&x.c)?;
    let u = dual_action(&reg, dr)?.right_mats()?.to_vec();
    let cols = par::map(&u, |uk| vectorize(&x.rho.mul(uk).sub(&uk.kron(&idd).mul(&x.rho))));
    let e = kernel(&hcat(f, dc * dd * dc, &cols));
    let e_alg = dr.algebra.sub(&e, format!("^{}End^{}({})^op", x.c.label, x.d.label, x.c.label))?.with_detected_unit();
    let e_inc = e.inclusion();

    let rf = sigma.m.right_flat()?;
    let is = id(f, ds);
    let sigma_coaction =
        rf.mul(&is.kron(&x.c.eps)).kron(&idd).mul(&is.kron(&x.rho)).mul(&sigma.coaction_flat());
    let ddf = x.d.delta_flat();
    let p_space = solve(f, ds, dd, |p| sigma_coaction.mul(p).sub(&p.kron(&idd).mul(&ddf)));
    let p_maps: Vec<Mat> = (0..p_space.dim()).map(|i| unvectorize(&p_space.inclusion().col(i), ds, dd)).collect();
    let q_maps = &base.q_maps;
    let dstar = dr.algebra.dim();
    let q_space = Subspace::from_cols(&hcat(f, dstar * ds, &q_maps.iter().map(vectorize).collect::<Vec<_>>()));

    let tm = t.maps();
    let ev_t = Mat::from_fn(f, ds, dt * ds, |r, col| tm[col / ds].get(r, col % ds).clone());
    let t_of = |g: &Mat| -> Vec<Mat> { (0..dd).map(|d| combine(f, &tm, &g.col(d), ds, ds)).collect() };

    let p_left = g_maps
        .iter()
        .map(|g| action_on(&p_space, &p_maps, |p| ev_t.mul(&g.kron(p)).mul(&ddf)))
        .collect::<Result<Vec<_>>>()?;
    let sigma_star = base.context.p.right_mats()?;
    let p_right = (0..e.dim())
        .map(|j| {
            let us = combine(f, sigma_star, &e_inc.col(j), ds, ds);
            action_on(&p_space, &p_maps, |p| us.mul(p))
        })
        .collect::<Result<Vec<_>>>()?;
    let q_left = (0..e.dim())
        .map(|j| {
            let l = dr.algebra.left_mat(&e_inc.col(j));
            action_on(&q_space, q_maps, |q| l.mul(q))
        })
        .collect::<Result<Vec<_>>>()?;
    let q_right = g_maps
        .iter()
        .map(|g| {
            let gd = t_of(g);
            let cols = q_maps
                .iter()
                .map(|q| {
                    let img = (0..ds)
                        .map(|y| {
                            let values: Vec<Mat> = gd.iter().map(|z| q.mul(&z.col(y))).collect();
                            dr.hom.coords(&twist(x, &dr.hom, &values)).ok_or_else(|| Error::Invalid("q·g leaves *C".into()))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    q_space
                        .try_coords(&vectorize(&hcat(f, dstar, &img)))
                        .ok_or_else(|| Error::Invalid("Q̃ is not closed under Hom(D,T)".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(hcat(f, q_maps.len(), &cols))
        })
        .collect::<Result<Vec<_>>>()?;

    let p = Bimodule::new(
        f,
        p_maps.len(),
        Some(Action { algebra: conv.algebra.clone(), mats: p_left }),
        Some(Action { algebra: e_alg.clone(), mats: p_right }),
        format!("Hom^D(D,{})", sigma.label),
    )?;
    let q = Bimodule::new(
        f,
        q_maps.len(),
        Some(Action { algebra: e_alg.clone(), mats: q_left }),
        Some(Action { algebra: conv.algebra.clone(), mats: q_right }),
        "Q̃",
    )?;

    let (dp, dq) = (p_maps.len(), q_maps.len());
    let base_wt = &base.context.wt;
    let tau_t = |v: &Mat, qi: usize| -> Mat {
        (0..ds).fold(Mat::zeros(f, dt, 1), |acc, x| acc.add(&base_wt.col(x * dq + qi).scale(v.get(x, 0))))
    };
    let mut wt_cols = Vec::with_capacity(dp * dq);
    for pm in &p_maps {
        for qi in 0..dq {
            let cols: Vec<Mat> = (0..dd).map(|d| tau_t(&pm.col(d), qi)).collect();
            let map = hcat(f, dt, &cols);
            wt_cols.push(conv.hom.coords(&map).ok_or_else(|| Error::Invalid("τ̃ leaves Hom(D,T)".into()))?);
        }
    }
    let wt = hcat(f, conv.hom.dim(), &wt_cols);
    let mut bt_cols = Vec::with_capacity(dp * dq);
    for qm in q_maps {
        for pm in &p_maps {
            let values: Vec<Mat> = (0..dd).map(|d| qm.mul(&pm.col(d))).collect();
            let star = dr
                .hom
                .coords(&twist(x, &dr.hom, &values))
                .and_then(|s| e.try_coords(&s))
                .ok_or_else(|| Error::Invalid("σ̃ leaves ^C End^D(C)^op".into()))?;
            bt_cols.push(star);
        }
    }
    let bt = hcat(f, e.dim(), &bt_cols);
    let context = MoritaContext::new(conv.algebra.clone(), e_alg, p, q, wt, bt, format!("M̃({})", sigma.label))?;
    Ok(ExtensionContext { context, base, convolution: conv, e, p_maps, sigma_coaction, purity })
}

/// The firm ring `R`, its action on `C` and the dual basis `r ↦ j̃_r ⊗ j_r`.
struct ExtensionTheorem<'a> {
    x: &'a CoringExtension,
    sigma: &'a Comodule,
    ec: &'a ExtensionContext,
    r_alg: Algebra,
    c_carrier: crate::tensor::Balanced,
    /// `C -> C ⊗_R R`.
    d_c: Mat,
    /// `R -> Q̃ ⊗_k P̃`, flat.
    dual_basis: Mat,
}

struct CanPair {
    h: Hom,
    hs: Tensor,
    can: Mat,
    inv: Mat,
}

impl ExtensionTheorem<'_> {
    fn can_pair(&self, n: &Bimodule) -> Result<CanPair> {
        let x = self.x;
        let f = x.field();
        let a = &x.c.a;
        let (dc, dd, ds, dn) = (x.c.dim(), x.d.dim(), self.sigma.dim(), n.dim());
        let ic = id(f, dc);
        let base = &self.ec.base;
        let t_alg = &base.context.a;
        let n = n.clone().forget_left();
        let h = hom(&self.sigma.m, &n, Side::Right)?;
        let h_t = right_module_of(&h, &base.t.maps(), t_alg, "Hom_A(Σ,N)")?;
        let sigma_t = base.context.p.clone().forget_right();
        let hs = tensor_over(&h_t, t_alg, &sigma_t)?;
        let nc = tensor_over(&n, a, &x.c.c)?;
        let sflat = self.sigma.coaction_flat();
        let hmaps = h.maps();
        let can_cols: Vec<Mat> = (0..h.dim() * ds)
            .map(|col| nc.projection().mul(&hmaps[col / ds].kron(&ic)).mul(&sflat.col(col % ds)))
            .collect();
        let can = hcat(f, nc.dim(), &can_cols).mul(hs.section());

        let rfn = n.right_flat()?;
        let star = &base.dual.hom;
        let q_maps = &base.q_maps;
        let p_maps = &self.ec.p_maps;
        let dp = p_maps.len();
        // y ↦ q(y)(c0) for each (q, c0)
        let evals: Vec<Vec<Mat>> = q_maps
            .iter()
            .map(|q| {
                let ys: Vec<Mat> = (0..ds).map(|y| star.element(&q.col(y))).collect();
                (0..dc).map(|c0| hcat(f, a.dim(), &ys.iter().map(|m| m.col(c0)).collect::<Vec<_>>())).collect()
            })
            .collect();
        let dr = self.r_alg.dim();
        let sec = self.c_carrier.section();
        let flat_dim = h.dim() * ds;
        let cols = (0..dn * dc)
            .map(|col| {
                let (nb, cb) = (col / dc, col % dc);
                let en = Mat::unit_column(f, dn, nb);
                let w = sec.mul(&self.d_c.col(cb));
                let mut acc = Mat::zeros(f, flat_dim, 1);
                for c1 in 0..dc {
                    for r in 0..dr {
                        let wc = w.get(c1 * dr + r, 0);
                        if wc.is_zero() {
                            continue;
                        }
                        for qi in 0..q_maps.len() {
                            for pj in 0..dp {
                                let kappa = self.dual_basis.get(qi * dp + pj, r);
                                if kappa.is_zero() {
                                    continue;
                                }
                                for c0 in 0..dc {
                                    for d in 0..dd {
                                        let lam = x.rho.get(c0 * dd + d, c1);
                                        if lam.is_zero() {
                                            continue;
                                        }
                                        let phi = rfn.mul(&en.kron(&evals[qi][c0]));
                                        let co = h.coords(&phi).ok_or_else(|| {
                                            Error::Invalid("n·j̃_r(-)(c) is not A-linear".into())
                                        })?;
                                        let term = co.kron(&p_maps[pj].col(d));
                                        acc = acc.add(&term.scale(&(&(wc * kappa) * lam)));
                                    }
                                }
                            }
                        }
                    }
                }
                Ok(acc)
            })
            .collect::<Result<Vec<_>>>()?;
        let inv = hs.projection().mul(&hcat(f, flat_dim, &cols)).mul(nc.section());
        Ok(CanPair { h, hs, can, inv })
    }

    fn can_item(&self, n: &Bimodule) -> Result<Report> {
        let f = self.x.field();
        let cp = self.can_pair(n)?;
        let (dn, dh) = (cp.can.rows(), cp.can.cols());
        Ok(Report::group(
            format!("can_N for {}", n.label),
            vec![
                Report::check("can_N bijective", is_iso(&cp.can), || json!({ "rows": dn, "cols": dh })),
                Report::equal("can_N ∘ can_N⁻¹ = id", &cp.can.mul(&cp.inv), &id(f, dn)),
                Report::equal("can_N⁻¹ ∘ can_N = id", &cp.inv.mul(&cp.can), &id(f, dh)),
            ],
        ))
    }

    /// The counit `Hom^C(Σ,M) ⊗_T Σ -> M` against the corestriction of `can_M⁻¹ ∘ ρ^M`.
    fn counit_item(&self, m: &Comodule) -> Result<Report> {
        let f = self.x.field();
        let ds = self.sigma.dim();
        let base = &self.ec.base;
        let t_alg = &base.context.a;
        let hc = comodule_hom(self.sigma, m)?;
        let hc_t = right_module_of(&hc, &base.t.maps(), t_alg, "Hom^C(Σ,M)")?;
        let sigma_t = base.context.p.clone().forget_right();
        let hcs = tensor_over(&hc_t, t_alg, &sigma_t)?;
        let maps = hc.maps();
        let ev = hcat(f, m.dim(), &(0..hc.dim() * ds).map(|c| maps[c / ds].col(c % ds)).collect::<Vec<_>>());
        let zeta = ev.mul(hcs.section());
        let iso = is_iso(&zeta);
        let cp = self.can_pair(&m.m)?;
        let incl_cols = maps
            .iter()
            .map(|g| cp.h.coords(g).ok_or_else(|| Error::Invalid("colinear map is not A-linear".into())))
            .collect::<Result<Vec<_>>>()?;
        let incl = hcat(f, cp.h.dim(), &incl_cols);
        let iota = cp.hs.projection().mul(&incl.kron(&id(f, ds))).mul(hcs.section());
        let explicit = cp.inv.mul(&m.rho);
        let mut items = vec![Report::check("counit bijective", iso, || json!({ "rank": zeta.rank(), "dim": m.dim() }))];
        if iso {
            items.push(Report::equal("counit⁻¹ = can_M⁻¹ ∘ ρ^M", &iota.mul(&inverse(&zeta)?), &explicit));
        }
        Ok(Report::group(format!("Hom^C(Σ,-) on {}", m.label), items))
    }
}

/// The coring-extension theorem: with `R` the idempotent core of `Im σ̃`,
/// checks the hypotheses and then `can_N` and the `T`-counit on the catalogs.
pub fn corext_check(
    x: &CoringExtension,
    sigma: &Comodule,
    ec: &ExtensionContext,
    modules: &[Bimodule],
    comodules: &[Comodule],
) -> Result<Report> {
    let name = format!("coring extension theorem for {}", sigma.label);
    let f = x.field();
    let ctx = &ec.context;
    let e_alg = &ctx.ap;
    let image = Subspace::from_cols(&ctx.bt);
    let core = idempotent_core(e_alg, &IdealWitness::new(image.clone(), Side::TwoSided))?;
    let r = core.ideal.subspace.clone();
    let r_alg = e_alg.sub(&r, "R")?.with_detected_unit();
    let r_star = ec.e.inclusion().mul(&r.inclusion());
    let r_firm = firmness(&r_alg)?.is_firm;
    let flat = if r_alg.is_unital() || r_alg.dim() == 0 {
        true
    } else {
        let hat = dorroh(&r_alg);
        let mut mats = r_alg.left_regular();
        mats.push(id(f, r_alg.dim()));
        is_projective(&Bimodule::new(f, r_alg.dim(), Some(Action { algebra: hat, mats }), None, "R")?, Side::Left)?
    };
    let reg = Comodule::regular(&x.c)?;
    let star_c = dual_action(&reg, &ec.base.dual)?;
    let star_mats = star_c.right_mats()?;
    let restrict = |mats: &[Mat], dim: usize| -> Vec<Mat> {
        (0..r_alg.dim()).map(|j| combine(f, mats, &r_star.col(j), dim, dim)).collect()
    };
    let c_r = Bimodule::new(
        f,
        x.c.dim(),
        None,
        Some(Action { algebra: r_alg.clone(), mats: restrict(star_mats, x.c.dim()) }),
        "C_R",
    )?;
    let c_firm = module_firmness(&c_r, &r_alg)?;
    let hyp = |name: &str, ok: bool| {
        if ok {
            Report::pass(name)
        } else {
            Report::unmet(name, format!("{name} does not hold"))
        }
    };
    let hyps = Report::group(
        "hypotheses",
        vec![
            hyp("R firm", r_firm),
            hyp("R flat as a left R-module", flat),
            hyp("C firm over R", c_firm.is_firm),
        ],
    )
    .with_fact("dim_image", image.dim())
    .with_fact("dim_R", r_alg.dim())
    .with_fact("core_chain", core.chain.clone());
    if !hyps.passed() {
        return Ok(Report::group(name, vec![hyps, Report::unmet("extension theorem", "R is not a firm flat ideal with C firm over R")]));
    }
    let sigma_r = Bimodule::new(
        f,
        sigma.dim(),
        None,
        Some(Action { algebra: r_alg.clone(), mats: restrict(ec.base.context.p.right_mats()?, sigma.dim()) }),
        "Σ_R",
    )?;
    let sigma_firm = module_firmness(&sigma_r, &r_alg)?.is_firm;
    let db = firm_ideal_dualbasis(&swap(ctx), &r)?;
    let qp = swap(ctx).pq()?;
    let ce = ExtensionTheorem {
        x,
        sigma,
        ec,
        r_alg: r_alg.clone(),
        c_carrier: c_firm.carrier.clone(),
        d_c: c_firm.d.clone().expect("firm"),
        dual_basis: qp.section().mul(&db.u_breve),
    };
    let unital: Vec<&Bimodule> = modules
        .iter()
        .filter(|n| {
            let u = x.c.a.unit().expect("coring over a unital ring");
            n.right_flat().map(|rf| rf.mul(&id(f, n.dim()).kron(u)) == id(f, n.dim())).unwrap_or(false)
        })
        .collect();
    let can_items = par::map(&unital, |n| ce.can_item(n)).into_iter().collect::<Result<Vec<_>>>()?;
    let counit_items = par::map(comodules, |m| ce.counit_item(m)).into_iter().collect::<Result<Vec<_>>>()?;
    Ok(Report::group(
        name,
        vec![
            hyps,
            db.report,
            Report::check("Σ firm over R", sigma_firm, || json!(null)),
            Report::group("can natural isomorphism", can_items)
                .with_detail("certified on the supplied catalog of unital modules"),
            Report::group("Hom^C(Σ,-) fully faithful", counit_items)
                .with_detail("certified on the supplied catalog"),
        ],
    )
    .with_fact("skipped_nonunital", modules.len() - unital.len()))
}
