//! Corings over a unital algebra `A`, their comodules, and coseparability.
//!
//! `C ⊗_A C`, `M ⊗_A C` and `C ⊗_A N` are the carriers produced by
//! [`tensor_over`]; coproducts and coactions are matrices into those carriers.

use serde_json::{json, Value};

use crate::algebra::{firmness, Algebra, IdealWitness, Side};
use crate::bimodule::{
    functor_j, hom, module_firmness, tensor_over, validate_module, Action, Bimodule, Hom, Tensor,
};
use crate::error::{Error, Result};
use crate::exactlin::{
    inverse, is_iso, kernel, rref_solve, unvectorize, vec_left_right, Field, Mat, Subspace,
};
use crate::par;
use crate::report::Report;

#[derive(Clone, Debug)]
pub struct Coring {
    pub label: String,
    pub a: Algebra,
    /// `C` as an `A`-`A` bimodule.
    pub c: Bimodule,
    /// `C ⊗_A C`.
    pub cc: Tensor,
    /// `C -> C ⊗_A C`, landing in the carrier of `cc`.
    pub delta: Mat,
    /// `C -> A`.
    pub eps: Mat,
}

impl Coring {
    pub fn new(a: Algebra, c: Bimodule, delta: Mat, eps: Mat, label: impl Into<String>) -> Result<Coring> {
        for act in [&c.left, &c.right] {
            if act.as_ref().map(|x| &x.algebra) != Some(&a) {
                return Err(Error::ActionMismatch(format!("{} is not an {}-bimodule", c.label, a.label)));
            }
        }
        let cc = tensor_over(&c, &a, &c)?;
        if delta.rows() != cc.dim() || delta.cols() != c.dim() {
            return Err(Error::Dimension(format!(
                "coproduct is {}x{}, expected {}x{}",
                delta.rows(),
                delta.cols(),
                cc.dim(),
                c.dim()
            )));
        }
        if eps.rows() != a.dim() || eps.cols() != c.dim() {
            return Err(Error::Dimension(format!("counit is {}x{}, expected {}x{}", eps.rows(), eps.cols(), a.dim(), c.dim())));
        }
        Ok(Coring { label: label.into(), a, c, cc, delta, eps })
    }

    pub fn field(&self) -> Field {
        self.a.field()
    }

    pub fn dim(&self) -> usize {
        self.c.dim()
    }

    /// `Δ` followed by the section, `C -> C ⊗_k C`.
    pub fn delta_flat(&self) -> Mat {
        self.cc.section().mul(&self.delta)
    }

    /// `A` with `Δ(a) = 1 ⊗ a` and `ε = id`.
    pub fn trivial(a: &Algebra) -> Result<Coring> {
        let u = unit(a)?;
        let c = Bimodule::regular(a);
        let cc = tensor_over(&c, a, &c)?;
        let delta = cc.projection().mul(&u.kron(&Mat::identity(a.field(), a.dim())));
        let eps = Mat::identity(a.field(), a.dim());
        Coring::new(a.clone(), c, delta, eps, format!("{} (trivial coring)", a.label))
    }

    pub(crate) fn same(&self, o: &Coring) -> bool {
        self.a == o.a && self.c == o.c && self.delta == o.delta && self.eps == o.eps
    }

    pub fn to_json(&self) -> Value {
        json!({
            "label": self.label,
            "A": self.a.to_json(),
            "C": self.c.to_json(),
            "delta": self.delta.to_json(),
            "eps": self.eps.to_json(),
        })
    }

    /// Reads `{"A", "C", "delta", "eps"}`; the bimodule names its ring `"A"`.
    pub fn from_json(v: &Value) -> Result<Coring> {
        let a = Algebra::from_json(&v["A"])?;
        let f = a.field();
        let c = Bimodule::from_json(&v["C"], f, &resolver(&a))?;
        let delta = Mat::from_json(&v["delta"], f)?;
        let eps = Mat::from_json(&v["eps"], f)?;
        Coring::new(a, c, delta, eps, v["label"].as_str().unwrap_or("C"))
    }
}

fn resolver(a: &Algebra) -> impl Fn(&Value) -> Result<Algebra> + '_ {
    move |r: &Value| match r.as_str() {
        Some(name) if name == "A" || name == a.label => Ok(a.clone()),
        Some(other) => Err(Error::Input(format!("unknown algebra reference \"{other}\""))),
        None => Algebra::from_json(r),
    }
}

pub(crate) fn unit(a: &Algebra) -> Result<Mat> {
    a.unit().cloned().ok_or_else(|| Error::Hypotheses(format!("{} has no unit", a.label)))
}

fn id(f: Field, n: usize) -> Mat {
    Mat::identity(f, n)
}

/// A right comodule; the module keeps only its right `A`-action.
#[derive(Clone, Debug)]
pub struct Comodule {
    pub label: String,
    pub coring: Coring,
    pub m: Bimodule,
    /// `M ⊗_A C`.
    pub mc: Tensor,
    pub rho: Mat,
}

impl Comodule {
    pub fn new(coring: &Coring, m: Bimodule, rho: Mat, label: impl Into<String>) -> Result<Comodule> {
        let m = m.forget_left();
        let mc = tensor_over(&m, &coring.a, &coring.c)?;
        if rho.rows() != mc.dim() || rho.cols() != m.dim() {
            return Err(Error::Dimension(format!(
                "coaction is {}x{}, expected {}x{}",
                rho.rows(),
                rho.cols(),
                mc.dim(),
                m.dim()
            )));
        }
        Ok(Comodule { label: label.into(), coring: coring.clone(), m, mc, rho })
    }

    pub fn dim(&self) -> usize {
        self.m.dim()
    }

    /// `ρ` followed by the section, `M -> M ⊗_k C`.
    pub fn coaction_flat(&self) -> Mat {
        self.mc.section().mul(&self.rho)
    }

    /// `C` with `ρ = Δ`.
    pub fn regular(coring: &Coring) -> Result<Comodule> {
        Comodule::new(coring, coring.c.clone(), coring.delta.clone(), format!("{}_C", coring.c.label))
    }

    /// `M ⊗_A C` with `ρ = M ⊗ Δ`.
    pub fn coinduced(coring: &Coring, m: &Bimodule) -> Result<Comodule> {
        let f = coring.field();
        let m = m.clone().forget_left();
        let x = tensor_over(&m, &coring.a, &coring.c)?;
        let xc = tensor_over(&x.module, &coring.a, &coring.c)?;
        let rho = xc
            .projection()
            .mul(&x.projection().kron(&id(f, coring.dim())))
            .mul(&id(f, m.dim()).kron(&coring.delta_flat()))
            .mul(x.section());
        let label = format!("{}⊗C", m.label);
        Comodule::new(coring, x.module, rho, label)
    }

    /// `A` with `ρ(a) = 1 ⊗ e·a` for a grouplike `e`.
    pub fn grouplike(coring: &Coring, e: &Mat) -> Result<Comodule> {
        let f = coring.field();
        let u = unit(&coring.a)?;
        if coring.delta.mul(e) != coring.cc.projection().mul(&e.kron(e)) || coring.eps.mul(e) != u {
            return Err(Error::Invalid("element is not grouplike".into()));
        }
        let m = Bimodule::right_regular(&coring.a);
        let ac = tensor_over(&m, &coring.a, &coring.c)?;
        let times_e = coring.c.right_flat()?.mul(&e.kron(&id(f, coring.a.dim())));
        let rho = ac.projection().mul(&u.kron(&times_e));
        Comodule::new(coring, m, rho, format!("{}_e", coring.a.label))
    }

    pub fn direct_sum(&self, other: &Comodule) -> Result<Comodule> {
        if !self.coring.same(&other.coring) {
            return Err(Error::ActionMismatch("comodules over different corings".into()));
        }
        let f = self.coring.field();
        let dc = self.coring.dim();
        let (dm, dn) = (self.dim(), other.dim());
        let m = self.m.direct_sum(&other.m)?;
        let sc = tensor_over(&m, &self.coring.a, &self.coring.c)?;
        let total = (dm + dn) * dc;
        let inc = |off: usize, d: usize| {
            Mat::from_fn(f, total, d * dc, |i, j| if i == j + off * dc { f.one() } else { f.zero() })
        };
        let left = inc(0, dm).mul(&self.coaction_flat());
        let right = inc(dm, dn).mul(&other.coaction_flat());
        let rho = sc.projection().mul(&Mat::hstack(&[&left, &right], f, total));
        let label = format!("{}⊕{}", self.label, other.label);
        Comodule::new(&self.coring, m, rho, label)
    }

    pub fn to_json(&self) -> Value {
        json!({ "label": self.label, "M": self.m.to_json(), "rho": self.rho.to_json() })
    }

    /// Reads `{"M", "rho"}` over a known coring; the module names its ring `"A"`.
    pub fn from_json(v: &Value, coring: &Coring) -> Result<Comodule> {
        let f = coring.field();
        let m = Bimodule::from_json(&v["M"], f, &resolver(&coring.a))?;
        let rho = Mat::from_json(&v["rho"], f)?;
        Comodule::new(coring, m, rho, v["label"].as_str().unwrap_or("M"))
    }
}

/// A left comodule; the module keeps only its left `A`-action.
#[derive(Clone, Debug)]
pub struct LeftComodule {
    pub label: String,
    pub coring: Coring,
    pub n: Bimodule,
    /// `C ⊗_A N`.
    pub cn: Tensor,
    pub lambda: Mat,
}

impl LeftComodule {
    pub fn new(coring: &Coring, n: Bimodule, lambda: Mat, label: impl Into<String>) -> Result<LeftComodule> {
        let n = n.forget_right();
        let cn = tensor_over(&coring.c, &coring.a, &n)?;
        if lambda.rows() != cn.dim() || lambda.cols() != n.dim() {
            return Err(Error::Dimension("coaction of the wrong shape".into()));
        }
        Ok(LeftComodule { label: label.into(), coring: coring.clone(), n, cn, lambda })
    }

    pub fn dim(&self) -> usize {
        self.n.dim()
    }

    pub fn coaction_flat(&self) -> Mat {
        self.cn.section().mul(&self.lambda)
    }

    pub fn regular(coring: &Coring) -> Result<LeftComodule> {
        LeftComodule::new(coring, coring.c.clone(), coring.delta.clone(), format!("C_{}", coring.c.label))
    }
}

/// Checks that `map·src[i] = tgt[i]·map` for every basis index.
pub(crate) fn intertwines(name: &str, map: &Mat, src: &[Mat], tgt: &[Mat]) -> Report {
    let bad = par::map_range(src.len(), |i| (map.mul(&src[i]) != tgt[i].mul(map)).then_some(i))
        .into_iter()
        .flatten()
        .next();
    Report::check(name, bad.is_none(), || json!({ "basis": bad }))
}

pub(crate) fn module_item(name: &str, m: &Bimodule) -> Report {
    let v = validate_module(m);
    Report::check(name, v.ok(), || json!(v.failures))
}

fn guarded(name: &str, items: Result<Vec<Report>>) -> Report {
    match items {
        Ok(items) => Report::group(name, items),
        Err(e) => Report::group(name, vec![Report::fail("structure", json!(e.to_string()))]),
    }
}

pub fn validate_coring(c: &Coring) -> Report {
    guarded(&format!("coring {}", c.label), coring_items(c))
}

fn coring_items(c: &Coring) -> Result<Vec<Report>> {
    let f = c.field();
    let (da, dc) = (c.a.dim(), c.dim());
    let l = c.c.left_mats()?;
    let r = c.c.right_mats()?;
    let ccl = c.cc.module.left_mats()?;
    let ccr = c.cc.module.right_mats()?;
    let ccc = tensor_over(&c.cc.module, &c.a, &c.c)?;
    let dflat = c.delta_flat();
    let coassoc_left = ccc.projection().mul(&c.delta.kron(&id(f, dc))).mul(&dflat);
    let coassoc_right = ccc
        .projection()
        .mul(&c.cc.projection().kron(&id(f, dc)))
        .mul(&id(f, dc).kron(&dflat))
        .mul(&dflat);
    let right_counit = c.c.right_flat()?.mul(&id(f, dc).kron(&c.eps)).mul(&dflat);
    let left_counit = c.c.left_flat()?.mul(&c.eps.kron(&id(f, dc))).mul(&dflat);
    Ok(vec![
        Report::check("unital base", c.a.is_unital() || da == 0, || json!("A has no unit")),
        module_item("bimodule", &c.c),
        intertwines("delta left A-linear", &c.delta, l, ccl),
        intertwines("delta right A-linear", &c.delta, r, ccr),
        intertwines("eps left A-linear", &c.eps, l, &c.a.left_regular()),
        intertwines("eps right A-linear", &c.eps, r, &c.a.right_regular()),
        Report::equal("coassociativity", &coassoc_left, &coassoc_right),
        Report::equal("right counit", &right_counit, &id(f, dc)),
        Report::equal("left counit", &left_counit, &id(f, dc)),
    ])
}

pub fn validate_comodule(m: &Comodule) -> Report {
    guarded(&format!("comodule {}", m.label), comodule_items(m))
}

fn comodule_items(m: &Comodule) -> Result<Vec<Report>> {
    let c = &m.coring;
    let f = c.field();
    let (dm, dc) = (m.dim(), c.dim());
    let mcc = tensor_over(&m.mc.module, &c.a, &c.c)?;
    let flat = m.coaction_flat();
    let lhs = mcc.projection().mul(&m.rho.kron(&id(f, dc))).mul(&flat);
    let rhs = mcc
        .projection()
        .mul(&m.mc.projection().kron(&id(f, dc)))
        .mul(&id(f, dm).kron(&c.delta_flat()))
        .mul(&flat);
    let counit = m.m.right_flat()?.mul(&id(f, dm).kron(&c.eps)).mul(&flat);
    Ok(vec![
        module_item("right A-module", &m.m),
        intertwines("rho right A-linear", &m.rho, m.m.right_mats()?, m.mc.module.right_mats()?),
        Report::equal("coassociativity", &lhs, &rhs),
        Report::equal("counit", &counit, &id(f, dm)),
    ])
}

pub fn validate_left_comodule(n: &LeftComodule) -> Report {
    guarded(&format!("left comodule {}", n.label), left_comodule_items(n))
}

fn left_comodule_items(n: &LeftComodule) -> Result<Vec<Report>> {
    let c = &n.coring;
    let f = c.field();
    let (dn, dc) = (n.dim(), c.dim());
    let ccn = tensor_over(&c.c, &c.a, &n.cn.module)?;
    let flat = n.coaction_flat();
    let lhs = ccn.projection().mul(&id(f, dc).kron(&n.lambda)).mul(&flat);
    let rhs = ccn
        .projection()
        .mul(&id(f, dc).kron(n.cn.projection()))
        .mul(&c.delta_flat().kron(&id(f, dn)))
        .mul(&flat);
    let counit = n.n.left_flat()?.mul(&c.eps.kron(&id(f, dn))).mul(&flat);
    Ok(vec![
        module_item("left A-module", &n.n),
        intertwines("lambda left A-linear", &n.lambda, n.n.left_mats()?, n.cn.module.left_mats()?),
        Report::equal("coassociativity", &lhs, &rhs),
        Report::equal("counit", &counit, &id(f, dn)),
    ])
}

/// Right `A`-linear colinear maps `M -> N`.
pub fn comodule_hom(m: &Comodule, n: &Comodule) -> Result<Hom> {
    if !m.coring.same(&n.coring) {
        return Err(Error::ActionMismatch("comodules over different corings".into()));
    }
    let f = m.coring.field();
    let dc = m.coring.dim();
    let (dm, dn) = (m.dim(), n.dim());
    let dnc = n.mc.dim();
    let flat = m.coaction_flat();
    let proj = n.mc.projection();
    // Column for the elementary map E_pq: ρ^N E_pq − (E_pq ⊗ C) ρ^M.
    let cols = par::map_range(dn * dm, |u| {
        let (p, q) = (u / dm, u % dm);
        let mut d = Mat::zeros(f, dnc, dm);
        for r in 0..dnc {
            d.set(r, q, n.rho.get(r, p).clone());
        }
        for c in 0..dc {
            for y in 0..dm {
                let coef = flat.get(q * dc + c, y);
                if coef.is_zero() {
                    continue;
                }
                for r in 0..dnc {
                    let pr = proj.get(r, p * dc + c);
                    if !pr.is_zero() {
                        let v = d.get(r, y) - &(pr * coef);
                        d.set(r, y, v);
                    }
                }
            }
        }
        d.entries().to_vec()
    });
    let colinear = Mat::from_fn(f, dnc * dm, dn * dm, |i, j| cols[j][i].clone());
    let mut blocks = vec![colinear];
    for (x, y) in m.m.right_mats()?.iter().zip(n.m.right_mats()?) {
        blocks.push(vec_left_right(y, &id(f, dm)).sub(&vec_left_right(&id(f, dn), x)));
    }
    let space = kernel(&Mat::vstack(&blocks.iter().collect::<Vec<_>>(), f, dn * dm));
    let dim = space.dim();
    Ok(Hom {
        space,
        source_dim: dm,
        target_dim: dn,
        module: Bimodule::plain(f, dim, format!("Hom^C({},{})", m.label, n.label)),
    })
}

/// `End^C(M)` under composition.
pub fn comodule_end(m: &Comodule) -> Result<Algebra> {
    comodule_hom(m, m)?.endo_algebra(format!("End^C({})", m.label))
}

/// `*C = _A Hom(C, A)` with `(f*g)(c) = g(c^{(1)} f(c^{(2)}))` and unit `ε`.
#[derive(Clone, Debug)]
pub struct DualRing {
    pub hom: Hom,
    pub algebra: Algebra,
}

pub fn dual_ring(c: &Coring) -> Result<DualRing> {
    let f = c.field();
    let h = hom(&c.c, &Bimodule::regular(&c.a), Side::Left)?;
    let maps = h.maps();
    let d = maps.len();
    let rf = c.c.right_flat()?;
    let dflat = c.delta_flat();
    let ic = id(f, c.dim());
    let mut table = Mat::zeros(f, d, d * d);
    for i in 0..d {
        let inner = rf.mul(&ic.kron(&maps[i])).mul(&dflat);
        for j in 0..d {
            let prod = maps[j].mul(&inner);
            let co = h.coords(&prod).ok_or_else(|| Error::Invalid("convolution leaves *C".into()))?;
            for k in 0..d {
                table.set(k, i * d + j, co.get(k, 0).clone());
            }
        }
    }
    let unit = h.coords(&c.eps);
    let algebra = Algebra::new(f, d, table, unit, format!("*{}", c.label))?;
    Ok(DualRing { hom: h, algebra })
}

/// A comodule as a right `*C`-module, `m·f = m^{[0]} f(m^{[1]})`.
pub fn dual_action(m: &Comodule, dual: &DualRing) -> Result<Bimodule> {
    let f = m.coring.field();
    let rf = m.m.right_flat()?;
    let flat = m.coaction_flat();
    let im = id(f, m.dim());
    let mats = dual.hom.maps().iter().map(|g| rf.mul(&im.kron(g)).mul(&flat)).collect();
    Bimodule::new(f, m.dim(), None, Some(Action { algebra: dual.algebra.clone(), mats }), format!("{}_*C", m.label))
}

/// `A`-bilinear maps `C -> T` under `(f*g)(c) = f(c^{(1)}) g(c^{(2)})`.
#[derive(Clone, Debug)]
pub struct Convolution {
    pub hom: Hom,
    pub algebra: Algebra,
}

/// `t_mod` is `T` viewed as an `A`-bimodule; its product must be `A`-balanced.
pub fn convolution_algebra(c: &Coring, t: &Algebra, t_mod: &Bimodule) -> Result<Convolution> {
    let f = c.field();
    let h = hom(&c.c, t_mod, Side::TwoSided)?;
    let maps = h.maps();
    let d = maps.len();
    let dflat = c.delta_flat();
    let mut table = Mat::zeros(f, d, d * d);
    for i in 0..d {
        for j in 0..d {
            let prod = t.table().mul(&maps[i].kron(&maps[j])).mul(&dflat);
            let co = h
                .coords(&prod)
                .ok_or_else(|| Error::Invalid("convolution of bilinear maps is not bilinear".into()))?;
            for k in 0..d {
                table.set(k, i * d + j, co.get(k, 0).clone());
            }
        }
    }
    let algebra = Algebra::new(f, d, table, None, format!("Conv({},{})", c.label, t.label))?.with_detected_unit();
    Ok(Convolution { hom: h, algebra })
}

#[derive(Clone, Debug)]
pub struct ImageCheck {
    pub image: Subspace,
    pub subring: bool,
    pub idempotent: bool,
    /// Set when the image is a two-sided ideal of `T`.
    pub ideal: Option<IdealWitness>,
}

/// Whether the image of `f: C -> T` is an idempotent ring.
pub fn idempotent_image(f: &Mat, t: &Algebra) -> ImageCheck {
    let image = Subspace::from_cols(f);
    let subring = t.sub(&image, "Im").is_ok();
    let idempotent = t.span_products(&image, &image) == image;
    let w = IdealWitness::new(image.clone(), Side::TwoSided);
    let ideal = w.verify(t).then_some(w);
    ImageCheck { image, subring, idempotent, ideal }
}

/// A firm two-sided ideal `R` of a unital `A` as an `A`-coring.
#[derive(Clone, Debug)]
pub struct FirmIdealCoring {
    pub coring: Coring,
    pub ring: Algebra,
    pub ideal: IdealWitness,
    /// `d_R : R -> R ⊗_R R`.
    pub d: Mat,
}

pub fn coring_from_firm_ideal(a: &Algebra, ideal: &IdealWitness) -> Result<FirmIdealCoring> {
    unit(a)?;
    if ideal.side != Side::TwoSided || !ideal.verify(a) {
        return Err(Error::Invalid("not a two-sided ideal".into()));
    }
    let s = &ideal.subspace;
    let ring = a.sub(s, "R")?;
    let fr = firmness(&ring)?;
    let d = fr.d.ok_or_else(|| Error::Hypotheses("R is not firm".into()))?;
    let c = Bimodule::regular(a).submodule(s, "R")?;
    let cc = tensor_over(&c, a, &c)?;
    let delta = cc.projection().mul(fr.square.section()).mul(&d);
    let coring = Coring::new(a.clone(), c, delta, s.inclusion(), format!("R ⊂ {}", a.label))?;
    Ok(FirmIdealCoring { coring, ring, ideal: ideal.clone(), d })
}

#[derive(Clone, Debug)]
pub struct Extracted {
    /// `C` with `x·y = x·ε(y)`.
    pub ring: Algebra,
    pub d: Option<Mat>,
    pub report: Report,
}

/// Reads a coring whose counit embeds it as an ideal back as a firm ring.
pub fn extract_firm_ideal(c: &Coring) -> Result<Extracted> {
    let f = c.field();
    let d = c.dim();
    let right = c.c.right.as_ref().ok_or_else(|| Error::ActionMismatch("no right action".into()))?;
    let acts: Vec<Mat> = (0..d).map(|j| right.of(&c.eps.col(j))).collect();
    let table = Mat::from_fn(f, d, d * d, |k, col| acts[col % d].get(k, col / d).clone());
    let ring = Algebra::new(f, d, table, None, "R")?;
    let injective = kernel(&c.eps).dim() == 0;
    let multiplicative = c.eps.mul(ring.table()) == c.a.table().mul(&c.eps.kron(&c.eps));
    let fr = firmness(&ring)?;
    let kappa = c.cc.projection().mul(fr.square.section());
    let comparison = is_iso(&kappa);
    let (d_r, firm) = if comparison {
        let dr = inverse(&kappa)?.mul(&c.delta);
        let firm = fr.mu.mul(&dr).is_identity() && dr.mul(&fr.mu).is_identity();
        (firm.then_some(dr), firm)
    } else {
        (None, false)
    };
    let report = Report::group(
        "firm ideal extraction",
        vec![
            Report::check("counit injective", injective, || json!(kernel(&c.eps).basis().to_json())),
            Report::check("counit multiplicative", multiplicative, || json!(null)),
            Report::check("R⊗_R R ≅ R⊗_A R", comparison, || json!({ "rank": kappa.rank() })),
            Report::check("coproduct inverts multiplication", firm, || json!(null)),
        ],
    );
    Ok(Extracted { ring, d: d_r, report })
}

/// A firm right `R`-module as a comodule over the firm-ideal coring.
pub fn firm_module_to_comodule(fic: &FirmIdealCoring, n: &Bimodule) -> Result<Comodule> {
    let c = &fic.coring;
    let right = IdealWitness::new(fic.ideal.subspace.clone(), Side::Right);
    let j = functor_j(n, &c.a, &right)?;
    let mf = module_firmness(n, &fic.ring)?;
    let d = mf.d.ok_or_else(|| Error::Hypotheses("module is not firm".into()))?;
    let mc = tensor_over(&j.module, &c.a, &c.c)?;
    let rho = mc.projection().mul(mf.carrier.section()).mul(&d);
    Comodule::new(c, j.module, rho, format!("{}^C", n.label))
}

/// A comodule over the firm-ideal coring restricted to `R`.
pub fn comodule_to_firm_module(fic: &FirmIdealCoring, m: &Comodule) -> Result<Bimodule> {
    m.m.restrict_right(&fic.ring, &fic.ideal.subspace.inclusion())
}

/// Firm `R`-modules against comodules over the firm-ideal coring, both ways.
pub fn firm_ideal_comparison(fic: &FirmIdealCoring, modules: &[Bimodule], comodules: &[Comodule]) -> Report {
    let mut items = par::map(modules, |n| {
        let name = format!("module {}", n.label);
        let firm = module_firmness(n, &fic.ring).map(|m| m.is_firm).unwrap_or(false);
        if !firm {
            return Report::pass(name).with_fact("firm", false).with_detail("outside the category of firm modules");
        }
        let run = || -> Result<Report> {
            let co = firm_module_to_comodule(fic, n)?;
            let back = comodule_to_firm_module(fic, &co)?;
            Ok(Report::group(
                name.clone(),
                vec![validate_comodule(&co), Report::check("round trip", back == *n, || json!(null))],
            ))
        };
        run().unwrap_or_else(|e| Report::fail(name.clone(), json!(e.to_string())))
    });
    items.extend(par::map(comodules, |m| {
        let name = format!("comodule {}", m.label);
        let run = || -> Result<Report> {
            let n = comodule_to_firm_module(fic, m)?;
            let firm = module_firmness(&n, &fic.ring)?.is_firm;
            if !firm {
                return Ok(Report::fail(name.clone(), json!("restricted module is not firm")));
            }
            let back = firm_module_to_comodule(fic, &n)?;
            Ok(Report::group(
                name.clone(),
                vec![
                    Report::check("A-action restored", back.m == m.m, || json!(null)),
                    Report::equal("coaction restored", &back.rho, &m.rho),
                ],
            ))
        };
        run().unwrap_or_else(|e| Report::fail(name.clone(), json!(e.to_string())))
    }));
    Report::group("firm modules vs comodules", items).with_detail("certified on the supplied catalog")
}

/// `P ⊗^C Q` inside the carrier of `P ⊗_A Q`.
#[derive(Clone, Debug)]
pub struct Cotensor {
    pub pq: Tensor,
    pub space: Subspace,
}

pub fn cotensor(p: &Comodule, q: &LeftComodule) -> Result<Cotensor> {
    if !p.coring.same(&q.coring) {
        return Err(Error::ActionMismatch("comodules over different corings".into()));
    }
    let c = &p.coring;
    let f = c.field();
    let (dp, dq) = (p.dim(), q.dim());
    let pq = tensor_over(&p.m, &c.a, &q.n)?;
    let pcq = tensor_over(&p.mc.module, &c.a, &q.n)?;
    let first = pcq.projection().mul(&p.rho.kron(&id(f, dq))).mul(pq.section());
    let second = pcq
        .projection()
        .mul(&p.mc.projection().kron(&id(f, dq)))
        .mul(&id(f, dp).kron(&q.coaction_flat()))
        .mul(pq.section());
    let space = kernel(&first.sub(&second));
    Ok(Cotensor { pq, space })
}

/// Cointegral `γ : C ⊗_A C -> A` and the induced retraction `μ` of `Δ`.
#[derive(Clone, Debug)]
pub struct CosepWitness {
    pub gamma: Mat,
    pub mu: Mat,
}

#[derive(Clone, Debug)]
pub enum Coseparability {
    Coseparable(CosepWitness),
    /// `certificate·system = 0` while `certificate·rhs = 1`.
    NotCoseparable { equations: usize, unknowns: usize, certificate: Mat },
}

/// The maps `γ ↦ c^{(1)}γ(c^{(2)}⊗d)` and `γ ↦ γ(c⊗d^{(1)})d^{(2)}`.
struct GammaMaps {
    rf: Mat,
    lf: Mat,
    /// `C ⊗_A C -> C ⊗_k (C ⊗_A C)`, `c⊗d ↦ c^{(1)} ⊗ [c^{(2)}⊗d]`.
    w: Mat,
    /// `C ⊗_A C -> (C ⊗_A C) ⊗_k C`, `c⊗d ↦ [c⊗d^{(1)}] ⊗ d^{(2)}`.
    v: Mat,
}

impl GammaMaps {
    fn new(c: &Coring) -> Result<GammaMaps> {
        let f = c.field();
        let dc = c.dim();
        let dflat = c.delta_flat();
        let sec = c.cc.section();
        let proj = c.cc.projection();
        let w = id(f, dc).kron(proj).mul(&dflat.kron(&id(f, dc))).mul(sec);
        let v = proj.kron(&id(f, dc)).mul(&id(f, dc).kron(&dflat)).mul(sec);
        Ok(GammaMaps { rf: c.c.right_flat()?, lf: c.c.left_flat()?, w, v })
    }

    fn left(&self, gamma: &Mat, dc: usize) -> Mat {
        self.rf.mul(&id(gamma.field(), dc).kron(gamma).mul(&self.w))
    }

    fn right(&self, gamma: &Mat, dc: usize) -> Mat {
        self.lf.mul(&gamma.kron(&id(gamma.field(), dc)).mul(&self.v))
    }
}

/// All conditions on `γ` as one list of matrices, linear in `γ`.
fn gamma_conditions(c: &Coring, maps: &GammaMaps, gamma: &Mat) -> Result<Vec<Mat>> {
    let dc = c.dim();
    let mut out = Vec::new();
    for (x, y) in c.cc.module.left_mats()?.iter().zip(c.a.left_regular()) {
        out.push(gamma.mul(x).sub(&y.mul(gamma)));
    }
    for (x, y) in c.cc.module.right_mats()?.iter().zip(c.a.right_regular()) {
        out.push(gamma.mul(x).sub(&y.mul(gamma)));
    }
    out.push(gamma.mul(&c.delta));
    out.push(maps.left(gamma, dc).sub(&maps.right(gamma, dc)));
    Ok(out)
}

pub fn coseparability_solve(c: &Coring) -> Result<Coseparability> {
    let f = c.field();
    let (da, dcc) = (c.a.dim(), c.cc.dim());
    let maps = GammaMaps::new(c)?;
    let unknowns = da * dcc;
    let zero = Mat::zeros(f, da, dcc);
    let template = gamma_conditions(c, &maps, &zero)?;
    let delta_block = 2 * da;
    let mut rhs = Vec::new();
    for (k, m) in template.iter().enumerate() {
        if k == delta_block {
            rhs.extend(c.eps.entries().iter().cloned());
        } else {
            rhs.extend(std::iter::repeat_n(f.zero(), m.rows() * m.cols()));
        }
    }
    let equations = rhs.len();
    let cols = par::map_range(unknowns, |u| -> Result<Vec<_>> {
        let mut e = zero.clone();
        e.set(u / dcc, u % dcc, f.one());
        Ok(gamma_conditions(c, &maps, &e)?.iter().flat_map(|m| m.entries().to_vec()).collect())
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let system = Mat::from_fn(f, equations, unknowns, |i, j| cols[j][i].clone());
    let b = Mat::column(f, rhs);
    match rref_solve(&system, &b)? {
        Some(x) => {
            let gamma = unvectorize(&x, da, dcc);
            let mu = maps.left(&gamma, c.dim());
            Ok(Coseparability::Coseparable(CosepWitness { gamma, mu }))
        }
        None => {
            let stacked = Mat::vstack(&[&system.transpose(), &b.transpose()], f, equations);
            let target = Mat::unit_column(f, unknowns + 1, unknowns);
            let y = rref_solve(&stacked, &target)?
                .ok_or_else(|| Error::Invalid("inconsistent system without a certificate".into()))?;
            Ok(Coseparability::NotCoseparable { equations, unknowns, certificate: y.transpose() })
        }
    }
}

/// Re-checks a cointegral: bilinearity, `γΔ = ε`, the two `μ` formulas,
/// `μΔ = id`, and bicolinearity of `μ`.
pub fn verify_witness(c: &Coring, w: &CosepWitness) -> Report {
    guarded("coseparability witness", witness_items(c, w))
}

fn witness_items(c: &Coring, w: &CosepWitness) -> Result<Vec<Report>> {
    let f = c.field();
    let dc = c.dim();
    let maps = GammaMaps::new(c)?;
    let g = &w.gamma;
    let proj = c.cc.projection();
    let sec = c.cc.section();
    let dflat = c.delta_flat();
    let mu_flat = w.mu.mul(proj);
    let right_colinear = proj.mul(&mu_flat.kron(&id(f, dc))).mul(&id(f, dc).kron(&dflat)).mul(sec);
    let left_colinear = proj.mul(&id(f, dc).kron(&mu_flat)).mul(&dflat.kron(&id(f, dc))).mul(sec);
    let delta_mu = c.delta.mul(&w.mu);
    Ok(vec![
        intertwines("gamma left A-linear", g, c.cc.module.left_mats()?, &c.a.left_regular()),
        intertwines("gamma right A-linear", g, c.cc.module.right_mats()?, &c.a.right_regular()),
        Report::equal("gamma∘Δ = ε", &g.mul(&c.delta), &c.eps),
        Report::equal("μ from the left factor", &maps.left(g, dc), &w.mu),
        Report::equal("μ from the right factor", &maps.right(g, dc), &w.mu),
        Report::equal("μ∘Δ = id", &w.mu.mul(&c.delta), &id(f, dc)),
        Report::equal("μ right colinear", &delta_mu, &right_colinear),
        Report::equal("μ left colinear", &delta_mu, &left_colinear),
    ])
}

/// `C` as a ring under `μ`.
pub fn cosep_ring(c: &Coring, w: &CosepWitness) -> Result<Algebra> {
    Algebra::new(c.field(), c.dim(), w.mu.mul(c.cc.projection()), None, format!("{}_μ", c.label))
}

/// A comodule with its right action of the ring `C`, `m·c = m^{[0]}γ(m^{[1]}⊗c)`.
#[derive(Clone, Debug)]
pub struct CosepModule {
    pub module: Bimodule,
    pub valid: bool,
    pub firm: bool,
}

pub fn cosep_action(m: &Comodule, w: &CosepWitness) -> Result<CosepModule> {
    let c = &m.coring;
    let f = c.field();
    let (dm, dc) = (m.dim(), c.dim());
    let ring = cosep_ring(c, w)?;
    let flat = m
        .m
        .right_flat()?
        .mul(&id(f, dm).kron(&w.gamma.mul(c.cc.projection())))
        .mul(&m.coaction_flat().kron(&id(f, dc)));
    let mats = (0..dc)
        .map(|j| Mat::from_fn(f, dm, dm, |r, x| flat.get(r, x * dc + j).clone()))
        .collect();
    let module = Bimodule::new(f, dm, None, Some(Action { algebra: ring.clone(), mats }), format!("{}_C", m.label))?;
    let valid = validate_module(&module).ok();
    let firm = valid && module_firmness(&module, &ring)?.is_firm;
    Ok(CosepModule { module, valid, firm })
}

/// The comodule attached to a firm right module over the ring `C`.
pub fn cosep_comodule(c: &Coring, w: &CosepWitness, n: &Bimodule) -> Result<Comodule> {
    let f = c.field();
    let dc = c.dim();
    let dn = n.dim();
    let ring = cosep_ring(c, w)?;
    let mf = module_firmness(n, &ring)?;
    let d = mf.d.ok_or_else(|| Error::Hypotheses(format!("{} is not a firm C-module", n.label)))?;
    let nc = &mf.carrier;
    let mats = c
        .c
        .right_mats()?
        .iter()
        .map(|ra| mf.mu.mul(nc.projection()).mul(&id(f, dn).kron(ra)).mul(nc.section()).mul(&d))
        .collect();
    let na = Bimodule::new(f, dn, None, Some(Action { algebra: c.a.clone(), mats }), n.label.clone())?;
    let nac = tensor_over(&na, &c.a, &c.c)?;
    let rho = nac
        .projection()
        .mul(&n.right_flat()?.kron(&id(f, dc)))
        .mul(&id(f, dn).kron(&c.delta_flat()))
        .mul(nc.section())
        .mul(&d);
    Comodule::new(c, na, rho, format!("Γ({})", n.label))
}

/// Round trips between comodules and firm `C`-modules.
pub fn cosep_category_iso(c: &Coring, w: &CosepWitness, comodules: &[Comodule], modules: &[Bimodule]) -> Report {
    let mut items = par::map(comodules, |m| {
        let name = format!("comodule {}", m.label);
        let run = || -> Result<Report> {
            let xi = cosep_action(m, w)?;
            let back = cosep_comodule(c, w, &xi.module)?;
            Ok(Report::group(
                name.clone(),
                vec![
                    Report::check("Ξ(M) firm", xi.valid && xi.firm, || json!(null)),
                    Report::check("A-action restored", back.m == m.m, || json!(null)),
                    Report::equal("coaction restored", &back.rho, &m.rho),
                ],
            ))
        };
        run().unwrap_or_else(|e| Report::fail(name.clone(), json!(e.to_string())))
    });
    items.extend(par::map(modules, |n| {
        let name = format!("module {}", n.label);
        let run = || -> Result<Report> {
            let ring = cosep_ring(c, w)?;
            if !module_firmness(n, &ring)?.is_firm {
                return Ok(Report::pass(name.clone()).with_fact("firm", false));
            }
            let g = cosep_comodule(c, w, n)?;
            let back = cosep_action(&g, w)?;
            Ok(Report::group(
                name.clone(),
                vec![
                    validate_comodule(&g),
                    Report::check("C-action restored", back.module.right_mats()? == n.right_mats()?, || json!(null)),
                ],
            ))
        };
        run().unwrap_or_else(|e| Report::fail(name.clone(), json!(e.to_string())))
    }));
    Report::group("comodules ≅ firm C-modules", items).with_detail("certified on the supplied catalog")
}

/// The left action of the ring `C` on a left comodule, `c·q = γ(c⊗q^{[-1]})q^{[0]}`.
pub fn cosep_left_action(q: &LeftComodule, w: &CosepWitness) -> Result<Bimodule> {
    let c = &q.coring;
    let f = c.field();
    let (dq, dc) = (q.dim(), c.dim());
    let ring = cosep_ring(c, w)?;
    let flat = q
        .n
        .left_flat()?
        .mul(&w.gamma.mul(c.cc.projection()).kron(&id(f, dq)))
        .mul(&id(f, dc).kron(&q.coaction_flat()));
    let mats = (0..dc)
        .map(|i| Mat::from_fn(f, dq, dq, |r, x| flat.get(r, i * dq + x).clone()))
        .collect();
    Bimodule::new(f, dq, Some(Action { algebra: ring, mats }), None, format!("C_{}", q.label))
}

/// `β : P ⊗_C Q -> P ⊗^C Q` against `π∘ι : P ⊗^C Q -> P ⊗_A Q -> P ⊗_C Q`.
pub fn cosep_tensor_iso(p: &Comodule, q: &LeftComodule, w: &CosepWitness) -> Result<Report> {
    let c = &p.coring;
    let f = c.field();
    let (dp, dq) = (p.dim(), q.dim());
    let ring = cosep_ring(c, w)?;
    let pc = cosep_action(p, w)?;
    let qc = cosep_left_action(q, w)?;
    let over_c = tensor_over(&pc.module, &ring, &qc)?;
    let cot = cotensor(p, q)?;
    let over_a = &cot.pq;
    let act_q = qc.left_flat()?;
    let beta_full = over_a
        .projection()
        .mul(&id(f, dp).kron(&act_q))
        .mul(&p.coaction_flat().kron(&id(f, dq)))
        .mul(over_c.section());
    let beta = cot.space.try_coords(&beta_full);
    let a_balanced = over_c.projection().mul(&over_a.carrier.quotient.relations.inclusion()).is_zero();
    let pi_iota = over_c.projection().mul(over_a.section()).mul(&cot.space.inclusion());
    let mut items = vec![
        Report::check("β lands in the cotensor product", beta.is_some(), || json!(null)),
        Report::check("P⊗_A Q -> P⊗_C Q well defined", a_balanced, || json!(null)),
    ];
    if let Some(beta) = beta {
        items.push(Report::equal("π∘ι∘β = id", &pi_iota.mul(&beta), &id(f, over_c.dim())));
        items.push(Report::equal("β∘π∘ι = id", &beta.mul(&pi_iota), &id(f, cot.space.dim())));
    }
    Ok(Report::group(format!("P⊗_C Q ≅ P⊗^C Q for ({}, {})", p.label, q.label), items)
        .with_fact("dim_over_C", over_c.dim())
        .with_fact("dim_cotensor", cot.space.dim()))
}

/// The Sweedler coring `A ⊗_B A` of a ring map `ι: B -> A` with retraction `E`.
#[derive(Clone, Debug)]
pub struct Sweedler {
    pub coring: Coring,
    pub witness: CosepWitness,
    /// `A ⊗_B A`.
    pub carrier: Tensor,
}

pub fn sweedler_coring(b: &Algebra, a: &Algebra, iota: &Mat, e: &Mat) -> Result<Sweedler> {
    let f = a.field();
    let da = a.dim();
    let ua = unit(a)?;
    let ub = unit(b)?;
    if iota.mul(b.table()) != a.table().mul(&iota.kron(iota)) || iota.mul(&ub) != ua {
        return Err(Error::Invalid("ι is not a unital ring map".into()));
    }
    if !e.mul(iota).is_identity() {
        return Err(Error::Hypotheses("E is not a retraction of ι".into()));
    }
    let m = Bimodule::regular(a).restrict_right(b, iota)?;
    let n = Bimodule::regular(a).restrict_left(b, iota)?;
    let aba = tensor_over(&m, b, &n)?;
    let c = aba.module.clone().with_label(format!("{}⊗_{}{}", a.label, b.label, a.label));
    let cc = tensor_over(&c, a, &c)?;
    let ia = id(f, da);
    let left_unit = aba.projection().mul(&ia.kron(&ua));
    let right_unit = aba.projection().mul(&ua.kron(&ia));
    let delta = cc.projection().mul(&left_unit.kron(&right_unit)).mul(aba.section());
    let eps = a.table().mul(aba.section());
    let coring = Coring::new(a.clone(), c, delta, eps, format!("Sweedler({}/{})", a.label, b.label))?;
    // γ((a⊗a')⊗(a''⊗a''')) = a·ιE(a'a'')·a'''
    let m_a = a.table();
    let middle = iota.mul(e).mul(m_a);
    let gamma_flat = m_a.mul(&m_a.kron(&ia)).mul(&ia.kron(&middle).kron(&ia));
    let gamma = gamma_flat.mul(&aba.section().kron(aba.section())).mul(coring.cc.section());
    let mu = GammaMaps::new(&coring)?.left(&gamma, coring.dim());
    Ok(Sweedler { coring, witness: CosepWitness { gamma, mu }, carrier: aba })
}

/// A finite-dimensional Hopf algebra on the basis of `h`.
#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    pub h: Algebra,
    /// `H -> H ⊗_k H`.
    pub delta: Mat,
    /// `H -> k`.
    pub eps: Mat,
    pub antipode: Mat,
}

impl HopfAlgebra {
    /// Group algebra of `Z/n`: `Δg = g⊗g`, `ε(g) = 1`, `S(g) = g^{-1}`.
    pub fn cyclic_group(f: Field, n: usize) -> HopfAlgebra {
        let h = crate::algebra::standard::cyclic_group(f, n);
        let delta = Mat::from_fn(f, n * n, n, |r, g| if r == g * n + g { f.one() } else { f.zero() });
        let eps = Mat::from_fn(f, 1, n, |_, _| f.one());
        let antipode = Mat::from_fn(f, n, n, |r, g| if r == (n - g) % n { f.one() } else { f.zero() });
        HopfAlgebra { h, delta, eps, antipode }
    }

    /// `k` with its trivial Hopf structure.
    pub fn ground(f: Field) -> HopfAlgebra {
        let one = Mat::identity(f, 1);
        HopfAlgebra { h: crate::algebra::standard::ground(f), delta: one.clone(), eps: one.clone(), antipode: one }
    }
}

pub fn validate_hopf(hopf: &HopfAlgebra) -> Report {
    let name = format!("Hopf algebra {}", hopf.h.label);
    let Some(u) = hopf.h.unit().cloned() else {
        return Report::group(name, vec![Report::fail("unit", json!("H has no unit"))]);
    };
    let f = hopf.h.field();
    let d = hopf.h.dim();
    let i = id(f, d);
    let m = hopf.h.table();
    let (dl, e, s) = (&hopf.delta, &hopf.eps, &hopf.antipode);
    let swap = Mat::from_fn(f, d * d, d * d, |r, c| {
        if r == (c % d) * d + c / d {
            f.one()
        } else {
            f.zero()
        }
    });
    let m2 = m.kron(m).mul(&i.kron(&swap).kron(&i));
    let one = Mat::identity(f, 1);
    Report::group(
        name,
        vec![
            Report::equal("coassociativity", &dl.kron(&i).mul(dl), &i.kron(dl).mul(dl)),
            Report::equal("left counit", &e.kron(&i).mul(dl), &i),
            Report::equal("right counit", &i.kron(e).mul(dl), &i),
            Report::equal("Δ multiplicative", &dl.mul(m), &m2.mul(&dl.kron(dl))),
            Report::equal("Δ unital", &dl.mul(&u), &u.kron(&u)),
            Report::equal("ε multiplicative", &e.mul(m), &e.kron(e)),
            Report::equal("ε unital", &e.mul(&u), &one),
            Report::equal("S * id = uε", &m.mul(&s.kron(&i)).mul(dl), &u.mul(e)),
            Report::equal("id * S = uε", &m.mul(&i.kron(s)).mul(dl), &u.mul(e)),
        ],
    )
}

/// `H ⊗_k H` as an `H`-coring whose comodules are the Hopf modules.
pub fn hopf_module_coring(hopf: &HopfAlgebra) -> Result<Coring> {
    let v = validate_hopf(hopf);
    if !v.passed() {
        return Err(Error::Invalid(format!("Hopf axioms fail:\n{v}")));
    }
    let h = &hopf.h;
    let f = h.field();
    let d = h.dim();
    let i = id(f, d);
    let u = unit(h)?;
    let lr = h.left_regular();
    let rr = h.right_regular();
    let left = lr.iter().map(|l| l.kron(&i)).collect();
    let right = (0..d)
        .map(|g| {
            let mut out = Mat::zeros(f, d * d, d * d);
            for x in 0..d {
                for y in 0..d {
                    let coef = hopf.delta.get(x * d + y, g);
                    if !coef.is_zero() {
                        out = out.add(&rr[x].kron(&rr[y]).scale(coef));
                    }
                }
            }
            out
        })
        .collect();
    let c = Bimodule::new(
        f,
        d * d,
        Some(Action { algebra: h.clone(), mats: left }),
        Some(Action { algebra: h.clone(), mats: right }),
        format!("{}⊗{}", h.label, h.label),
    )?;
    let cc = tensor_over(&c, h, &c)?;
    let split = i.kron(&u.kron(&i)).mul(&hopf.delta);
    let delta = cc.projection().mul(&i.kron(&split));
    let eps = i.kron(&hopf.eps);
    Coring::new(h.clone(), c, delta, eps, format!("Hopf({})", h.label))
}

/// The Hopf module `H`, `ρ(h) = h_{(1)} ⊗_H (1 ⊗ h_{(2)})`.
pub fn hopf_regular_module(hopf: &HopfAlgebra, coring: &Coring) -> Result<Comodule> {
    let h = &hopf.h;
    let f = h.field();
    let i = id(f, h.dim());
    let m = Bimodule::right_regular(h);
    let mc = tensor_over(&m, h, &coring.c)?;
    let rho = mc.projection().mul(&i.kron(&unit(h)?.kron(&i))).mul(&hopf.delta);
    Comodule::new(coring, m, rho, h.label.clone())
}

/// The divided-power coalgebra dual to `k[n]/(n²)`: `Δx0 = x0⊗x0`,
/// `Δx1 = x0⊗x1 + x1⊗x0`, `ε = (1, 0)`.
pub fn dual_numbers_coalgebra(f: Field) -> Result<Coring> {
    let k = crate::algebra::standard::ground(f);
    let c = Bimodule::new(
        f,
        2,
        Some(Action { algebra: k.clone(), mats: vec![id(f, 2)] }),
        Some(Action { algebra: k.clone(), mats: vec![id(f, 2)] }),
        "k[n]/n^2*",
    )?;
    let cc = tensor_over(&c, &k, &c)?;
    let flat = Mat::from_ints(f, &[&[1, 0], &[0, 1], &[0, 1], &[0, 0]]);
    let delta = cc.projection().mul(&flat);
    let eps = Mat::from_ints(f, &[&[1, 0]]);
    Coring::new(k, c, delta, eps, "(k[n]/n^2)*")
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::algebra::standard::*;
    use crate::bimodule::catalog;

    const Q: Field = Field::Rational;

    pub(crate) fn sweedler_kxk() -> Sweedler {
        let b = ground(Q);
        let a = diagonal(Q, 2);
        let iota = Mat::from_ints(Q, &[&[1], &[1]]);
        let e = Mat::from_ints(Q, &[&[1, 0]]);
        sweedler_coring(&b, &a, &iota, &e).unwrap()
    }

    fn coseparable(c: &Coring) -> CosepWitness {
        match coseparability_solve(c).unwrap() {
            Coseparability::Coseparable(w) => w,
            Coseparability::NotCoseparable { .. } => panic!("{} should be coseparable", c.label),
        }
    }

    #[test]
    fn trivial_coring_is_valid_and_coseparable() {
        let c = Coring::trivial(&diagonal(Q, 2)).unwrap();
        assert!(validate_coring(&c).passed());
        let w = coseparable(&c);
        assert!(verify_witness(&c, &w).passed());
        assert_eq!(dual_ring(&c).unwrap().algebra.dim(), 2);
    }

    #[test]
    fn sweedler_coring_of_split_inclusion() {
        let s = sweedler_kxk();
        assert_eq!(s.coring.dim(), 4);
        assert!(validate_coring(&s.coring).passed(), "{}", validate_coring(&s.coring));
        assert!(verify_witness(&s.coring, &s.witness).passed(), "{}", verify_witness(&s.coring, &s.witness));
        let w = coseparable(&s.coring);
        assert!(verify_witness(&s.coring, &w).passed());
        let e = s.carrier.projection().mul(&unit(&s.coring.a).unwrap().kron(&unit(&s.coring.a).unwrap()));
        let sigma = Comodule::grouplike(&s.coring, &e).unwrap();
        assert!(validate_comodule(&sigma).passed());
        assert_eq!(comodule_hom(&sigma, &sigma).unwrap().dim(), 1);
        let dual = dual_ring(&s.coring).unwrap();
        assert_eq!(dual.algebra.dim(), 4);
        assert!(validate_module(&dual_action(&sigma, &dual).unwrap()).ok());
    }

    #[test]
    fn doubled_coproduct_breaks_the_counit() {
        let s = sweedler_kxk();
        let mut c = s.coring.clone();
        c.delta = c.delta.scale(&Q.int(2));
        let r = validate_coring(&c);
        assert!(r.find("left counit").unwrap().failed());
        assert!(r.find("right counit").unwrap().failed());
    }

    #[test]
    fn sweedler_over_matrices_with_trace() {
        let b = ground(Q);
        let a = matrix(Q, 2);
        let iota = Mat::from_ints(Q, &[&[1], &[0], &[0], &[1]]);
        let e = Mat::from_fn(Q, 1, 4, |_, j| if j == 0 || j == 3 { Q.frac(1, 2) } else { Q.zero() });
        let s = sweedler_coring(&b, &a, &iota, &e).unwrap();
        assert!(validate_coring(&s.coring).passed());
        assert!(verify_witness(&s.coring, &s.witness).passed());
    }

    #[test]
    fn hopf_cyclic_corings() {
        for n in [2, 3] {
            let hopf = HopfAlgebra::cyclic_group(Q, n);
            assert!(validate_hopf(&hopf).passed());
            let c = hopf_module_coring(&hopf).unwrap();
            assert_eq!(c.dim(), n * n);
            assert!(validate_coring(&c).passed(), "{}", validate_coring(&c));
            let w = coseparable(&c);
            assert!(verify_witness(&c, &w).passed());
            let h = hopf_regular_module(&hopf, &c).unwrap();
            assert!(validate_comodule(&h).passed());
            assert!(cosep_action(&h, &w).unwrap().firm);
        }
    }

    #[test]
    fn non_coseparable_coalgebra_has_a_certificate() {
        let c = dual_numbers_coalgebra(Q).unwrap();
        assert!(validate_coring(&c).passed());
        let Coseparability::NotCoseparable { certificate, .. } = coseparability_solve(&c).unwrap() else {
            panic!("dual numbers coalgebra is not coseparable");
        };
        assert_eq!(certificate.rows(), 1);
    }

    #[test]
    fn firm_ideal_coring_round_trip() {
        let a = diagonal(Q, 2);
        let s = Subspace::from_rows(&Mat::from_ints(Q, &[&[1, 0]]));
        let fic = coring_from_firm_ideal(&a, &IdealWitness::new(s, Side::TwoSided)).unwrap();
        assert_eq!(fic.coring.dim(), 1);
        assert!(validate_coring(&fic.coring).passed());
        let ex = extract_firm_ideal(&fic.coring).unwrap();
        assert!(ex.report.passed());
        assert_eq!(ex.d.unwrap(), fic.d);
        let modules = catalog(&fic.ring, 2);
        let comodules = vec![Comodule::regular(&fic.coring).unwrap()];
        let r = firm_ideal_comparison(&fic, &modules, &comodules);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn non_firm_ideal_is_rejected() {
        let a = dual_numbers(Q);
        let s = Subspace::from_rows(&Mat::from_ints(Q, &[&[0, 1]]));
        let err = coring_from_firm_ideal(&a, &IdealWitness::new(s, Side::TwoSided)).unwrap_err();
        assert!(matches!(err, Error::Hypotheses(_)));
    }

    #[test]
    fn unital_ideal_gives_the_trivial_coring() {
        let a = diagonal(Q, 2);
        let fic = coring_from_firm_ideal(&a, &IdealWitness::new(a.whole(), Side::TwoSided)).unwrap();
        let t = Coring::trivial(&a).unwrap();
        assert_eq!(fic.coring.delta, t.delta);
        assert_eq!(fic.coring.eps, t.eps);
    }

    #[test]
    fn cotensor_with_the_coring_recovers_the_comodule() {
        let s = sweedler_kxk();
        let c = &s.coring;
        let p = Comodule::regular(c).unwrap();
        let q = LeftComodule::regular(c).unwrap();
        assert!(validate_left_comodule(&q).passed());
        let cot = cotensor(&p, &q).unwrap();
        assert_eq!(cot.space.dim(), q.dim());
        assert!(Subspace::from_cols(&q.lambda) == cot.space);
    }

    #[test]
    fn coseparable_category_and_tensor_isomorphisms() {
        let s = sweedler_kxk();
        let c = &s.coring;
        let w = &s.witness;
        let reg = Comodule::regular(c).unwrap();
        let sum = reg.direct_sum(&reg).unwrap();
        assert!(validate_comodule(&sum).passed());
        let xi = cosep_action(&reg, w).unwrap();
        assert!(xi.firm);
        assert_eq!(xi.module.right_mats().unwrap().len(), 4);
        let r = cosep_category_iso(c, w, &[reg.clone(), sum], &[xi.module]);
        assert!(r.passed(), "{r}");
        let q = LeftComodule::regular(c).unwrap();
        let t = cosep_tensor_iso(&reg, &q, w).unwrap();
        assert!(t.passed(), "{t}");
    }

    #[test]
    fn coinduced_comodule_is_valid() {
        let s = sweedler_kxk();
        let m = Bimodule::free_right(&s.coring.a, 1);
        let co = Comodule::coinduced(&s.coring, &m).unwrap();
        assert!(validate_comodule(&co).passed());
    }

    #[test]
    fn coring_json_round_trip() {
        let s = sweedler_kxk();
        let back = Coring::from_json(&s.coring.to_json()).unwrap();
        assert!(back.same(&s.coring));
    }
}
