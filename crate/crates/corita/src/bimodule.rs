//! Finite-dimensional modules and bimodules over possibly non-unital algebras.
//!
//! A right action is stored as one matrix per basis element of the acting
//! algebra, `m·e_i = right[i]·m`; a left action likewise, `e_i·m = left[i]·m`.

use serde_json::{json, Value};

use crate::algebra::{radical_char0, Algebra, IdealWitness, Side};
use crate::error::{Error, Result};
use crate::exactlin::{
    inverse, is_iso, kernel, quotient_by, rref_solve, vec_left_right, vectorize, unvectorize, Field, Mat,
    SpanBuilder, Subspace,
};
use crate::par;
use crate::tensor::{balanced, Balanced};

/// An algebra acting through one matrix per basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Action {
    pub algebra: Algebra,
    pub mats: Vec<Mat>,
}

impl Action {
    /// Action matrix of an arbitrary element given by its coordinates.
    pub fn of(&self, x: &Mat) -> Mat {
        let n = self.mats.first().map_or(0, |m| m.rows());
        let f = self.algebra.field();
        let mut out = Mat::zeros(f, n, n);
        for (k, m) in self.mats.iter().enumerate() {
            let c = x.get(k, 0);
            if !c.is_zero() {
                out = out.add(&m.scale(c));
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct Bimodule {
    pub label: String,
    field: Field,
    dim: usize,
    pub left: Option<Action>,
    pub right: Option<Action>,
}

impl PartialEq for Bimodule {
    fn eq(&self, o: &Self) -> bool {
        self.field == o.field && self.dim == o.dim && self.left == o.left && self.right == o.right
    }
}

impl Eq for Bimodule {}

/// Which actions a module map is claimed to commute with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Linearity {
    Left,
    Right,
    Bi,
}

#[derive(Clone, Debug)]
pub struct ModMap {
    pub source: Bimodule,
    pub target: Bimodule,
    pub map: Mat,
    pub linearity: Linearity,
}

impl ModMap {
    pub fn verify(&self) -> bool {
        let check = |a: Option<&Action>, b: Option<&Action>| match (a, b) {
            (Some(a), Some(b)) => a
                .mats
                .iter()
                .zip(&b.mats)
                .all(|(x, y)| self.map.mul(x) == y.mul(&self.map)),
            _ => false,
        };
        let l = || check(self.source.left.as_ref(), self.target.left.as_ref());
        let r = || check(self.source.right.as_ref(), self.target.right.as_ref());
        match self.linearity {
            Linearity::Left => l(),
            Linearity::Right => r(),
            Linearity::Bi => l() && r(),
        }
    }
}

/// `M ⊗_R N` with its residual outer actions.
#[derive(Clone, Debug)]
pub struct Tensor {
    pub carrier: Balanced,
    pub module: Bimodule,
}

impl Tensor {
    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn section(&self) -> &Mat {
        self.carrier.section()
    }

    pub fn projection(&self) -> &Mat {
        self.carrier.projection()
    }
}

/// `Hom` solution space with residual actions.
#[derive(Clone, Debug)]
pub struct Hom {
    /// Rows are row-major vectorised maps `source -> target`.
    pub space: Subspace,
    pub source_dim: usize,
    pub target_dim: usize,
    pub module: Bimodule,
}

impl Hom {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn map(&self, i: usize) -> Mat {
        unvectorize(&self.space.basis().select_rows(&[i]).transpose(), self.target_dim, self.source_dim)
    }

    pub fn maps(&self) -> Vec<Mat> {
        (0..self.dim()).map(|i| self.map(i)).collect()
    }

    /// Coordinates of a map lying in the space.
    pub fn coords(&self, f: &Mat) -> Option<Mat> {
        self.space.try_coords(&vectorize(f))
    }

    /// The map with the given coordinates.
    pub fn element(&self, c: &Mat) -> Mat {
        unvectorize(&self.space.inclusion().mul(c), self.target_dim, self.source_dim)
    }

    /// Endomorphism ring under composition, acting on the left of the source.
    pub fn endo_algebra(&self, label: impl Into<String>) -> Result<Algebra> {
        if self.source_dim != self.target_dim {
            return Err(Error::Invalid("composition needs endomorphisms".into()));
        }
        let maps = self.maps();
        let d = maps.len();
        let f = self.module.field;
        let mut table = Mat::zeros(f, d, d * d);
        for i in 0..d {
            for j in 0..d {
                let c = self
                    .coords(&maps[i].mul(&maps[j]))
                    .ok_or_else(|| Error::Invalid("endomorphisms not closed under composition".into()))?;
                for k in 0..d {
                    table.set(k, i * d + j, c.get(k, 0).clone());
                }
            }
        }
        let unit = self.coords(&Mat::identity(f, self.source_dim));
        Algebra::new(f, d, table, unit, label)
    }
}

#[derive(Clone, Debug)]
pub struct ModuleFirmness {
    pub carrier: Balanced,
    /// `μ_{M,R}` on the carrier of `M ⊗_R R` (or `R ⊗_R M`).
    pub mu: Mat,
    /// `MR` (or `RM`).
    pub generated: Subspace,
    pub is_firm: bool,
    pub d: Option<Mat>,
}

#[derive(Clone, Debug)]
pub struct JModule {
    pub module: Bimodule,
    /// Restricting the new action to `R` gives back the input action.
    pub restricts_back: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorLemma {
    pub dim_over_ideal: usize,
    pub dim_over_ring: usize,
    pub comparison_iso: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flatness {
    pub projective: bool,
    /// Every simple block of `R / rad` survives on `M / rad·M`.
    pub all_simples_survive: bool,
    pub faithfully_flat: bool,
}

impl Bimodule {
    pub fn new(
        field: Field,
        dim: usize,
        left: Option<Action>,
        right: Option<Action>,
        label: impl Into<String>,
    ) -> Result<Bimodule> {
        for act in left.iter().chain(right.iter()) {
            if act.mats.len() != act.algebra.dim() {
                return Err(Error::Dimension(format!(
                    "{} action matrices for an algebra of dimension {}",
                    act.mats.len(),
                    act.algebra.dim()
                )));
            }
            if act.mats.iter().any(|m| m.rows() != dim || m.cols() != dim || m.field() != field) {
                return Err(Error::Dimension(format!("action matrix is not {dim}x{dim}")));
            }
        }
        Ok(Bimodule { label: label.into(), field, dim, left, right })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// A bare vector space.
    pub fn plain(field: Field, dim: usize, label: impl Into<String>) -> Bimodule {
        Bimodule { label: label.into(), field, dim, left: None, right: None }
    }

    /// `A` as an `A`-`A` bimodule.
    pub fn regular(a: &Algebra) -> Bimodule {
        Bimodule {
            label: a.label.clone(),
            field: a.field(),
            dim: a.dim(),
            left: Some(Action { algebra: a.clone(), mats: a.left_regular() }),
            right: Some(Action { algebra: a.clone(), mats: a.right_regular() }),
        }
    }

    pub fn right_regular(a: &Algebra) -> Bimodule {
        Bimodule::regular(a).forget_left()
    }

    pub fn left_regular(a: &Algebra) -> Bimodule {
        Bimodule::regular(a).forget_right()
    }

    /// `A^n` as a right `A`-module.
    pub fn free_right(a: &Algebra, n: usize) -> Bimodule {
        let mats = a
            .right_regular()
            .iter()
            .map(|r| Mat::identity(a.field(), n).kron(r))
            .collect();
        Bimodule {
            label: format!("{}^{n}", a.label),
            field: a.field(),
            dim: n * a.dim(),
            left: None,
            right: Some(Action { algebra: a.clone(), mats }),
        }
    }

    /// A right module on `k^dim` on which every element of `a` acts by zero.
    pub fn zero_action_right(a: &Algebra, dim: usize) -> Bimodule {
        let mats = vec![Mat::zeros(a.field(), dim, dim); a.dim()];
        Bimodule {
            label: format!("k^{dim}(0)"),
            field: a.field(),
            dim,
            left: None,
            right: Some(Action { algebra: a.clone(), mats }),
        }
    }

    pub fn zero(field: Field, left: Option<&Algebra>, right: Option<&Algebra>) -> Bimodule {
        let act = |a: &Algebra| Action { algebra: a.clone(), mats: vec![Mat::zeros(field, 0, 0); a.dim()] };
        Bimodule { label: "0".into(), field, dim: 0, left: left.map(act), right: right.map(act) }
    }

    pub fn forget_left(mut self) -> Self {
        self.left = None;
        self
    }

    pub fn forget_right(mut self) -> Self {
        self.right = None;
        self
    }

    pub fn right_algebra(&self) -> Result<&Algebra> {
        self.right
            .as_ref()
            .map(|a| &a.algebra)
            .ok_or_else(|| Error::ActionMismatch(format!("{} has no right action", self.label)))
    }

    pub fn left_algebra(&self) -> Result<&Algebra> {
        self.left
            .as_ref()
            .map(|a| &a.algebra)
            .ok_or_else(|| Error::ActionMismatch(format!("{} has no left action", self.label)))
    }

    pub fn right_mats(&self) -> Result<&[Mat]> {
        Ok(&self
            .right
            .as_ref()
            .ok_or_else(|| Error::ActionMismatch(format!("{} has no right action", self.label)))?
            .mats)
    }

    pub fn left_mats(&self) -> Result<&[Mat]> {
        Ok(&self
            .left
            .as_ref()
            .ok_or_else(|| Error::ActionMismatch(format!("{} has no left action", self.label)))?
            .mats)
    }

    /// `M ⊗_k R -> M`, `m ⊗ r ↦ m·r`.
    pub fn right_flat(&self) -> Result<Mat> {
        let mats = self.right_mats()?;
        let r = mats.len();
        Ok(Mat::from_fn(self.field, self.dim, self.dim * r, |x, c| mats[c % r].get(x, c / r).clone()))
    }

    /// `R ⊗_k M -> M`, `r ⊗ m ↦ r·m`.
    pub fn left_flat(&self) -> Result<Mat> {
        let mats = self.left_mats()?;
        let d = self.dim;
        Ok(Mat::from_fn(self.field, d, d * mats.len(), |x, c| mats[c / d.max(1)].get(x, c % d.max(1)).clone()))
    }

    /// Restricts the right action along a ring map `sub -> right algebra` given by its matrix.
    pub fn restrict_right(&self, sub: &Algebra, map: &Mat) -> Result<Bimodule> {
        let act = self.right.as_ref().ok_or_else(|| Error::ActionMismatch("no right action".into()))?;
        let mats = (0..sub.dim()).map(|i| act.of(&map.col(i))).collect();
        let mut out = self.clone();
        out.right = Some(Action { algebra: sub.clone(), mats });
        Ok(out)
    }

    /// Restricts the left action along a ring map `sub -> left algebra`.
    pub fn restrict_left(&self, sub: &Algebra, map: &Mat) -> Result<Bimodule> {
        let act = self.left.as_ref().ok_or_else(|| Error::ActionMismatch("no left action".into()))?;
        let mats = (0..sub.dim()).map(|i| act.of(&map.col(i))).collect();
        let mut out = self.clone();
        out.left = Some(Action { algebra: sub.clone(), mats });
        Ok(out)
    }

    /// Direct sum; both summands must carry the same actions.
    pub fn direct_sum(&self, other: &Bimodule) -> Result<Bimodule> {
        let sum = |a: &Option<Action>, b: &Option<Action>| -> Result<Option<Action>> {
            match (a, b) {
                (None, None) => Ok(None),
                (Some(a), Some(b)) if a.algebra == b.algebra => Ok(Some(Action {
                    algebra: a.algebra.clone(),
                    mats: a.mats.iter().zip(&b.mats).map(|(x, y)| block_diag(x, y)).collect(),
                })),
                _ => Err(Error::ActionMismatch("summands carry different actions".into())),
            }
        };
        Ok(Bimodule {
            label: format!("{}⊕{}", self.label, other.label),
            field: self.field,
            dim: self.dim + other.dim,
            left: sum(&self.left, &other.left)?,
            right: sum(&self.right, &other.right)?,
        })
    }

    /// Submodule carried by a subspace stable under every action.
    pub fn submodule(&self, s: &Subspace, label: impl Into<String>) -> Result<Bimodule> {
        let inc = s.inclusion();
        let restrict = |a: &Option<Action>| -> Result<Option<Action>> {
            a.as_ref()
                .map(|a| {
                    let mats = a
                        .mats
                        .iter()
                        .map(|m| {
                            s.try_coords(&m.mul(&inc))
                                .ok_or_else(|| Error::Invalid("subspace is not a submodule".into()))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Ok(Action { algebra: a.algebra.clone(), mats })
                })
                .transpose()
        };
        Ok(Bimodule {
            label: label.into(),
            field: self.field,
            dim: s.dim(),
            left: restrict(&self.left)?,
            right: restrict(&self.right)?,
        })
    }

    pub fn to_json(&self) -> Value {
        let acts = |a: &Option<Action>| {
            a.as_ref().map_or(json!([]), |a| json!(a.mats.iter().map(Mat::to_json).collect::<Vec<_>>()))
        };
        json!({
            "left": self.left.as_ref().map(|a| json!(a.algebra.label)),
            "right": self.right.as_ref().map(|a| json!(a.algebra.label)),
            "dim": self.dim,
            "left_action": acts(&self.left),
            "right_action": acts(&self.right),
            "label": self.label,
        })
    }

    /// Parses the bimodule schema; `resolve` turns an algebra reference (a name
    /// or an inline algebra) into an algebra.
    pub fn from_json(v: &Value, field: Field, resolve: &dyn Fn(&Value) -> Result<Algebra>) -> Result<Bimodule> {
        let dim = v["dim"].as_u64().ok_or_else(|| Error::Input("bimodule needs \"dim\"".into()))? as usize;
        let side = |key: &str, acts: &str| -> Result<Option<Action>> {
            if v[key].is_null() {
                return Ok(None);
            }
            let algebra = resolve(&v[key])?;
            let mats = v[acts]
                .as_array()
                .ok_or_else(|| Error::Input(format!("bimodule needs \"{acts}\"")))?
                .iter()
                .map(|m| Mat::from_json(m, field))
                .collect::<Result<Vec<_>>>()?;
            Ok(Some(Action { algebra, mats }))
        };
        let label = v["label"].as_str().unwrap_or("M").to_string();
        Bimodule::new(field, dim, side("left", "left_action")?, side("right", "right_action")?, label)
    }
}

fn block_diag(a: &Mat, b: &Mat) -> Mat {
    let f = a.field();
    let (n, m) = (a.rows(), b.rows());
    Mat::from_fn(f, n + m, n + m, |i, j| {
        if i < n && j < n {
            a.get(i, j).clone()
        } else if i >= n && j >= n {
            b.get(i - n, j - n).clone()
        } else {
            f.zero()
        }
    })
}

/// Failed module axioms, each with its basis witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleValidity {
    pub failures: Vec<String>,
}

impl ModuleValidity {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn validate_module(m: &Bimodule) -> ModuleValidity {
    let mut failures = Vec::new();
    if let Some(r) = &m.right {
        let a = &r.algebra;
        let n = a.dim();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
        let bad = par::map(&pairs, |&(i, j)| {
            let prod = r.of(&a.table().col(i * n + j));
            (prod != r.mats[j].mul(&r.mats[i])).then(|| format!("right action: m(e{i} e{j}) ≠ (m e{i}) e{j}"))
        });
        failures.extend(bad.into_iter().flatten());
        if let Some(u) = a.unit() {
            if !r.of(u).is_identity() {
                failures.push("right action: unit does not act as identity".into());
            }
        }
    }
    if let Some(l) = &m.left {
        let a = &l.algebra;
        let n = a.dim();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
        let bad = par::map(&pairs, |&(i, j)| {
            let prod = l.of(&a.table().col(i * n + j));
            (prod != l.mats[i].mul(&l.mats[j])).then(|| format!("left action: (e{i} e{j})m ≠ e{i}(e{j} m)"))
        });
        failures.extend(bad.into_iter().flatten());
        if let Some(u) = a.unit() {
            if !l.of(u).is_identity() {
                failures.push("left action: unit does not act as identity".into());
            }
        }
    }
    if let (Some(l), Some(r)) = (&m.left, &m.right) {
        for (i, lm) in l.mats.iter().enumerate() {
            for (j, rm) in r.mats.iter().enumerate() {
                if lm.mul(rm) != rm.mul(lm) {
                    failures.push(format!("bimodule: (e{i} m) f{j} ≠ e{i} (m f{j})"));
                }
            }
        }
    }
    ModuleValidity { failures }
}

/// `M ⊗_R N`.
pub fn tensor_over(m: &Bimodule, r: &Algebra, n: &Bimodule) -> Result<Tensor> {
    let mr = m.right.as_ref().filter(|a| a.algebra == *r).ok_or_else(|| {
        Error::ActionMismatch(format!("{} is not a right {}-module", m.label, r.label))
    })?;
    let nl = n.left.as_ref().filter(|a| a.algebra == *r).ok_or_else(|| {
        Error::ActionMismatch(format!("{} is not a left {}-module", n.label, r.label))
    })?;
    let carrier = balanced(m.field, m.dim, n.dim, &mr.mats, &nl.mats)?;
    let f = m.field;
    let left = m.left.as_ref().map(|a| Action {
        algebra: a.algebra.clone(),
        mats: a
            .mats
            .iter()
            .map(|x| carrier.ascend(&x.kron(&Mat::identity(f, n.dim))).mul(carrier.section()))
            .collect(),
    });
    let right = n.right.as_ref().map(|a| Action {
        algebra: a.algebra.clone(),
        mats: a
            .mats
            .iter()
            .map(|x| carrier.ascend(&Mat::identity(f, m.dim).kron(x)).mul(carrier.section()))
            .collect(),
    });
    let module = Bimodule {
        label: format!("{}⊗{}", m.label, n.label),
        field: f,
        dim: carrier.dim(),
        left,
        right,
    };
    Ok(Tensor { carrier, module })
}

/// `f ⊗ g` between two tensor carriers.
pub fn tensor_maps(from: &Tensor, to: &Tensor, f: &Mat, g: &Mat) -> Mat {
    to.projection().mul(&f.kron(g)).mul(from.section())
}

/// For idempotent `R`: the canonical surjection `M ⊗_S N -> M ⊗_R N`, with
/// `S = R ⊗_R R` acting through multiplication, is bijective.
pub fn square_comparison(m: &Bimodule, r: &Algebra, n: &Bimodule) -> Result<bool> {
    let over_r = tensor_over(m, r, n)?;
    let sq = crate::algebra::firm_square(r)?;
    let mu = &sq.to_ring;
    let ms = m.restrict_right(&sq.algebra, mu)?;
    let ns = n.restrict_left(&sq.algebra, mu)?;
    let over_s = tensor_over(&ms, &sq.algebra, &ns)?;
    let cmp = over_r.projection().mul(over_s.section());
    Ok(is_iso(&cmp))
}

/// Homomorphisms `M -> N` commuting with the actions on the given side.
pub fn hom(m: &Bimodule, n: &Bimodule, side: Side) -> Result<Hom> {
    let f = m.field;
    let (dm, dn) = (m.dim, n.dim);
    let (am, an) = match side {
        Side::Right => (m.right.as_ref(), n.right.as_ref()),
        Side::Left => (m.left.as_ref(), n.left.as_ref()),
        Side::TwoSided => return hom_bi(m, n),
    };
    let (am, an) = match (am, an) {
        (Some(a), Some(b)) if a.algebra == b.algebra => (a, b),
        _ => {
            return Err(Error::ActionMismatch(format!(
                "{} and {} lack a common {} action",
                m.label,
                n.label,
                side.name()
            )))
        }
    };
    let blocks: Vec<Mat> = am
        .mats
        .iter()
        .zip(&an.mats)
        .map(|(x, y)| vec_left_right(y, &Mat::identity(f, dm)).sub(&vec_left_right(&Mat::identity(f, dn), x)))
        .collect();
    let space = solution_space(f, dn * dm, &blocks);
    let mut h = Hom {
        space,
        source_dim: dm,
        target_dim: dn,
        module: Bimodule::plain(f, 0, format!("Hom({},{})", m.label, n.label)),
    };
    let (pre, post) = match side {
        Side::Right => (m.left.as_ref(), n.left.as_ref()),
        _ => (m.right.as_ref(), n.right.as_ref()),
    };
    // Right-linear maps: (a·f) = a∘f from the target, (f·a) = f∘a from the source.
    // Left-linear maps: (b·f)(m) = f(m b) from the source, (f·c)(m) = f(m) c from the target.
    let (left_act, right_act) = match side {
        Side::Right => (
            post.map(|a| residual(&h, a, |x, g| x.mul(g))).transpose()?,
            pre.map(|a| residual(&h, a, |x, g| g.mul(x))).transpose()?,
        ),
        _ => (
            pre.map(|a| residual(&h, a, |x, g| g.mul(x))).transpose()?,
            post.map(|a| residual(&h, a, |x, g| x.mul(g))).transpose()?,
        ),
    };
    h.module = Bimodule {
        label: format!("Hom({},{})", m.label, n.label),
        field: f,
        dim: h.dim(),
        left: left_act,
        right: right_act,
    };
    Ok(h)
}

fn hom_bi(m: &Bimodule, n: &Bimodule) -> Result<Hom> {
    let f = m.field;
    let (dm, dn) = (m.dim, n.dim);
    let mut blocks = Vec::new();
    for (a, b) in [(&m.left, &n.left), (&m.right, &n.right)] {
        match (a, b) {
            (Some(a), Some(b)) if a.algebra == b.algebra => {
                for (x, y) in a.mats.iter().zip(&b.mats) {
                    blocks.push(
                        vec_left_right(y, &Mat::identity(f, dm)).sub(&vec_left_right(&Mat::identity(f, dn), x)),
                    );
                }
            }
            _ => return Err(Error::ActionMismatch("bilinear maps need matching actions on both sides".into())),
        }
    }
    let space = solution_space(f, dn * dm, &blocks);
    let dim = space.dim();
    Ok(Hom {
        space,
        source_dim: dm,
        target_dim: dn,
        module: Bimodule::plain(f, dim, format!("Hom({},{})", m.label, n.label)),
    })
}

fn solution_space(f: Field, unknowns: usize, blocks: &[Mat]) -> Subspace {
    if blocks.is_empty() {
        return Subspace::whole(f, unknowns);
    }
    let sys = Mat::vstack(&blocks.iter().collect::<Vec<_>>(), f, unknowns);
    kernel(&sys)
}

fn residual(h: &Hom, act: &Action, op: impl Fn(&Mat, &Mat) -> Mat) -> Result<Action> {
    let maps = h.maps();
    let mats = act
        .mats
        .iter()
        .map(|x| {
            let cols: Vec<Mat> = maps
                .iter()
                .map(|g| h.coords(&op(x, g)).ok_or_else(|| Error::Invalid("residual action leaves Hom".into())))
                .collect::<Result<_>>()?;
            Ok(Mat::hstack(&cols.iter().collect::<Vec<_>>(), h.module.field, h.dim()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Action { algebra: act.algebra.clone(), mats })
}

/// `μ_{M,R} : M ⊗_R R -> M` for a right `R`-module.
pub fn module_firmness(m: &Bimodule, r: &Algebra) -> Result<ModuleFirmness> {
    let t = tensor_over(m, r, &Bimodule::left_regular(r))?;
    let flat = m.right_flat()?;
    let mu = t.carrier.descend(&flat);
    let generated = Subspace::from_cols(&flat);
    let is_firm = is_iso(&mu);
    let d = if is_firm { Some(inverse(&mu)?) } else { None };
    Ok(ModuleFirmness { carrier: t.carrier, mu, generated, is_firm, d })
}

/// `μ : R ⊗_R M -> M` for a left `R`-module.
pub fn left_module_firmness(m: &Bimodule, r: &Algebra) -> Result<ModuleFirmness> {
    let t = tensor_over(&Bimodule::right_regular(r), r, m)?;
    let flat = m.left_flat()?;
    let mu = t.carrier.descend(&flat);
    let generated = Subspace::from_cols(&flat);
    let is_firm = is_iso(&mu);
    let d = if is_firm { Some(inverse(&mu)?) } else { None };
    Ok(ModuleFirmness { carrier: t.carrier, mu, generated, is_firm, d })
}

/// Extends a firm right `R`-module to `A ⊇ R` by `m·a = m^r (r a)`, where
/// `ideal` is a right ideal of `a` and `m` acts through `a.sub(ideal)`.
pub fn functor_j(m: &Bimodule, a: &Algebra, ideal: &IdealWitness) -> Result<JModule> {
    let r = m.right_algebra()?.clone();
    let s = &ideal.subspace;
    if r != a.sub(s, "R")? {
        return Err(Error::ActionMismatch("module is not over the given ideal".into()));
    }
    if !IdealWitness::new(s.clone(), Side::Right).verify(a) {
        return Err(Error::Invalid("not a right ideal".into()));
    }
    let firm = module_firmness(m, &r)?;
    let d = firm.d.ok_or_else(|| Error::Hypotheses("module is not firm".into()))?;
    let f = a.field();
    let inc = s.inclusion();
    let flat = m.right_flat()?;
    let mats: Vec<Mat> = (0..a.dim())
        .map(|k| {
            let rho = s.coords(&a.right_basis(k).mul(&inc));
            flat.mul(&Mat::identity(f, m.dim).kron(&rho)).mul(firm.carrier.section()).mul(&d)
        })
        .collect();
    let module = Bimodule {
        label: format!("J({})", m.label),
        field: f,
        dim: m.dim,
        left: m.left.clone(),
        right: Some(Action { algebra: a.clone(), mats }),
    };
    let restricted = module.restrict_right(&r, &inc)?;
    let restricts_back = restricted.right == m.right;
    Ok(JModule { module, restricts_back })
}

/// Compares `M ⊗_R P` with `M ⊗_A P` for a right ideal `R ⊆ A` with `MR = M`.
pub fn tensor_lemma_check(m: &Bimodule, a: &Algebra, ideal: &IdealWitness, p: &Bimodule) -> Result<TensorLemma> {
    let s = &ideal.subspace;
    let r = a.sub(s, "R")?;
    let inc = s.inclusion();
    let mr = m.restrict_right(&r, &inc)?;
    let pr = p.restrict_left(&r, &inc)?;
    let gen = module_firmness(&mr, &r)?.generated;
    if gen.dim() != m.dim {
        return Err(Error::Hypotheses("MR ≠ M".into()));
    }
    let over_r = tensor_over(&mr, &r, &pr)?;
    let over_a = tensor_over(m, a, p)?;
    let cmp = over_a.projection().mul(over_r.section());
    Ok(TensorLemma { dim_over_ideal: over_r.dim(), dim_over_ring: over_a.dim(), comparison_iso: is_iso(&cmp) })
}

/// Projectivity over a unital algebra: a splitting of the free cover `A^{dim M} -> M`.
pub fn is_projective(m: &Bimodule, side: Side) -> Result<bool> {
    let act = match side {
        Side::Right => m.right.as_ref(),
        Side::Left => m.left.as_ref(),
        Side::TwoSided => return Err(Error::Input("projectivity is one-sided".into())),
    }
    .ok_or_else(|| Error::ActionMismatch(format!("{} lacks a {} action", m.label, side.name())))?;
    let a = &act.algebra;
    if !a.is_unital() {
        return Err(Error::Hypotheses("projectivity is decided over unital algebras".into()));
    }
    let f = m.field;
    let (d, da) = (m.dim, a.dim());
    if d == 0 {
        return Ok(true);
    }
    let fd = d * da;
    // π(e_j ⊗ a_k) = e_j·a_k (or a_k·e_j)
    let pi = Mat::from_fn(f, d, fd, |x, c| act.mats[c % da].get(x, c / da).clone());
    let free: Vec<Mat> = match side {
        Side::Right => a.right_regular(),
        _ => a.left_regular(),
    }
    .iter()
    .map(|x| Mat::identity(f, d).kron(x))
    .collect();
    let mut blocks = Vec::new();
    for (fa, ma) in free.iter().zip(&act.mats) {
        blocks.push(vec_left_right(fa, &Mat::identity(f, d)).sub(&vec_left_right(&Mat::identity(f, fd), ma)));
    }
    let zeros = Mat::zeros(f, blocks.len() * fd * d, 1);
    blocks.push(vec_left_right(&pi, &Mat::identity(f, d)));
    let rhs = Mat::vstack(&[&zeros, &vectorize(&Mat::identity(f, d))], f, 1);
    let sys = Mat::vstack(&blocks.iter().collect::<Vec<_>>(), f, fd * d);
    Ok(rref_solve(&sys, &rhs)?.is_some())
}

/// Faithful flatness of a left module over a unital algebra in characteristic 0.
pub fn is_faithfully_flat(m: &Bimodule) -> Result<Flatness> {
    let act = m.left.as_ref().ok_or_else(|| Error::ActionMismatch("needs a left action".into()))?;
    let r = &act.algebra;
    let rad = radical_char0(r)?.radical;
    let projective = is_projective(m, Side::Left)?;
    let f = m.field;
    let mut jm = SpanBuilder::new(f, m.dim);
    let rinc = rad.inclusion();
    for i in 0..rad.dim() {
        jm.push_mat_rows(&act.of(&rinc.col(i)).transpose());
    }
    let q = quotient_by(m.dim, &jm.finish())?;
    let induced: Vec<Mat> = act.mats.iter().map(|x| vectorize(&q.projection.mul(x).mul(&q.section))).collect();
    let rep = Mat::hstack(&induced.iter().collect::<Vec<_>>(), f, q.dim * q.dim);
    let ann = kernel(&rep);
    let all_simples_survive = rad.contains_space(&ann);
    Ok(Flatness { projective, all_simples_survive, faithfully_flat: projective && all_simples_survive })
}

/// Default right-module catalog over `a`: free modules up to `max_dim`, the
/// zero module, `k` with zero action and the restricted Dorroh extension.
pub fn catalog(a: &Algebra, max_dim: usize) -> Vec<Bimodule> {
    let f = a.field();
    let mut out = vec![Bimodule::zero(f, None, Some(a))];
    if a.dim() > 0 {
        for n in 1..=max_dim / a.dim() {
            out.push(Bimodule::free_right(a, n));
        }
    }
    if max_dim >= 1 && a.dim() > 0 {
        out.push(Bimodule::zero_action_right(a, 1));
    }
    if a.dim() < max_dim {
        let hat = crate::algebra::dorroh(a);
        let inc = Mat::from_fn(f, a.dim() + 1, a.dim(), |i, j| if i == j { f.one() } else { f.zero() });
        if let Ok(m) = Bimodule::right_regular(&hat).forget_left().restrict_right(a, &inc) {
            out.push(m.with_label(format!("{}^|", a.label)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::standard::*;

    const Q: Field = Field::Rational;

    /// Row vectors `k^2` as a right `M_2`-module: `(x e_{ij})_l = x_i δ_{jl}`.
    pub(crate) fn rows(f: Field) -> Bimodule {
        let m2 = matrix(f, 2);
        let mats = (0..4)
            .map(|u| {
                let (i, j) = (u / 2, u % 2);
                Mat::from_fn(f, 2, 2, |l, x| if x == i && l == j { f.one() } else { f.zero() })
            })
            .collect();
        Bimodule::new(f, 2, None, Some(Action { algebra: m2, mats }), "rows").unwrap()
    }

    /// Column vectors `k^2` as a left `M_2`-module.
    pub(crate) fn columns(f: Field) -> Bimodule {
        let m2 = matrix(f, 2);
        let mats = (0..4)
            .map(|u| {
                let (i, j) = (u / 2, u % 2);
                Mat::from_fn(f, 2, 2, |l, x| if l == i && x == j { f.one() } else { f.zero() })
            })
            .collect();
        Bimodule::new(f, 2, Some(Action { algebra: m2, mats }), None, "columns").unwrap()
    }

    #[test]
    fn row_and_column_modules_are_valid() {
        assert!(validate_module(&rows(Q)).ok());
        assert!(validate_module(&columns(Q)).ok());
        assert!(validate_module(&Bimodule::regular(&upper_triangular(Q, 2))).ok());
    }

    #[test]
    fn tensor_examples() {
        let k = ground(Q);
        let kk = Bimodule::regular(&k);
        assert_eq!(tensor_over(&kk, &k, &kk).unwrap().dim(), 1);
        assert_eq!(tensor_over(&rows(Q), &matrix(Q, 2), &columns(Q)).unwrap().dim(), 1);
        let n = zero_product(Q, 1);
        let m = Bimodule::zero_action_right(&n, 1);
        let mut nl = m.clone();
        nl.left = nl.right.take();
        assert_eq!(tensor_over(&m, &n, &nl).unwrap().dim(), 1);
        assert!(tensor_over(&columns(Q), &matrix(Q, 2), &rows(Q)).is_err());
    }

    #[test]
    fn hom_examples() {
        let k = ground(Q);
        let k2 = Bimodule::free_right(&k, 2);
        let kk = Bimodule::right_regular(&k);
        assert_eq!(hom(&k2, &kk, Side::Right).unwrap().dim(), 2);
        let end = hom(&rows(Q), &rows(Q), Side::Right).unwrap();
        assert_eq!(end.dim(), 1);
        let e = end.endo_algebra("End").unwrap();
        assert!(e.is_unital());
        let n = zero_product(Q, 1);
        let z = Bimodule::zero_action_right(&n, 2);
        assert_eq!(hom(&z, &z, Side::Right).unwrap().dim(), 4);
    }

    #[test]
    fn firmness_examples() {
        let m2 = matrix(Q, 2);
        assert!(module_firmness(&rows(Q), &m2).unwrap().is_firm);
        let r = row_ideal(Q);
        let z = Bimodule::zero_action_right(&r, 1);
        let zf = module_firmness(&z, &r).unwrap();
        assert!(!zf.is_firm);
        assert_eq!(zf.generated.dim(), 0);
        // M ⊗_R R is firm for idempotent R with MR = M.
        let m = Bimodule::right_regular(&r);
        let t = tensor_over(&m, &r, &Bimodule::regular(&r)).unwrap();
        assert!(module_firmness(&t.module, &r).unwrap().is_firm);
    }

    #[test]
    fn functor_j_examples() {
        let k2 = diagonal(Q, 2);
        let ideal = IdealWitness::new(Subspace::from_rows(&Mat::from_ints(Q, &[&[1, 0]])), Side::TwoSided);
        let r = k2.sub(&ideal.subspace, "R").unwrap();
        let j = functor_j(&Bimodule::right_regular(&r), &k2, &ideal).unwrap();
        assert!(j.restricts_back);
        let mats = j.module.right_mats().unwrap();
        assert_eq!(mats[0], Mat::identity(Q, 1));
        assert!(mats[1].is_zero());
        assert!(validate_module(&j.module).ok());

        let whole = IdealWitness::new(k2.whole(), Side::TwoSided);
        let same = k2.sub(&whole.subspace, "A").unwrap().with_detected_unit();
        let m = Bimodule::right_regular(&same);
        assert!(functor_j(&m, &k2, &whole).is_err() || functor_j(&m, &k2, &whole).unwrap().restricts_back);

        let zero = Bimodule::zero(Q, None, Some(&r));
        assert_eq!(functor_j(&zero, &k2, &ideal).unwrap().module.dim(), 0);
    }

    #[test]
    fn tensor_lemma_examples() {
        let a = diagonal(Q, 2);
        let ideal = IdealWitness::new(Subspace::from_rows(&Mat::from_ints(Q, &[&[1, 0]])), Side::Right);
        let m = Bimodule::right_regular(&a).submodule(&ideal.subspace, "R").unwrap();
        let p = Bimodule::left_regular(&a);
        let t = tensor_lemma_check(&m, &a, &ideal, &p).unwrap();
        assert_eq!((t.dim_over_ideal, t.dim_over_ring, t.comparison_iso), (1, 1, true));
        let whole = IdealWitness::new(a.whole(), Side::Right);
        assert!(tensor_lemma_check(&Bimodule::right_regular(&a), &a, &whole, &p).unwrap().comparison_iso);
        let z = Bimodule::zero(Q, None, Some(&a));
        let t = tensor_lemma_check(&z, &a, &ideal, &p).unwrap();
        assert_eq!((t.dim_over_ideal, t.dim_over_ring), (0, 0));
    }

    #[test]
    fn projectivity_examples() {
        let d = dual_numbers(Q);
        assert!(is_projective(&Bimodule::right_regular(&d), Side::Right).unwrap());
        let k = Bimodule::new(
            Q,
            1,
            Some(Action { algebra: d.clone(), mats: vec![Mat::identity(Q, 1), Mat::zeros(Q, 1, 1)] }),
            None,
            "k",
        )
        .unwrap();
        assert!(!is_projective(&k, Side::Left).unwrap());
        let fl = is_faithfully_flat(&columns(Q)).unwrap();
        assert!(fl.projective && fl.faithfully_flat);
        assert!(!is_faithfully_flat(&k).unwrap().faithfully_flat);
    }

    #[test]
    fn square_comparison_on_idempotent_ring() {
        let r = row_ideal(Q);
        let m = Bimodule::right_regular(&r);
        let n = Bimodule::left_regular(&r);
        assert!(square_comparison(&m, &r, &n).unwrap());
    }
}
