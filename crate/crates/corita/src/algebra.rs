//! Finite-dimensional, possibly non-unital associative algebras given by
//! structure constants.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactlin::{
    image, intersect, inverse, is_iso, kernel, quotient_by, rref_solve, Elem, Field, Mat, SpanBuilder,
    Subspace,
};
use crate::par;
use crate::tensor::{balanced, Balanced};

/// An algebra on `k^dim`. Column `i·dim + j` of `table` is the product `e_i·e_j`.
#[derive(Clone, Debug)]
pub struct Algebra {
    pub label: String,
    field: Field,
    dim: usize,
    table: Mat,
    unit: Option<Mat>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.table == other.table
            && self.unit == other.unit
    }
}

impl Eq for Algebra {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::TwoSided => "two-sided",
        }
    }
}

/// A subspace claimed to be an ideal of the given side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealWitness {
    pub subspace: Subspace,
    pub side: Side,
}

impl IdealWitness {
    pub fn new(subspace: Subspace, side: Side) -> Self {
        IdealWitness { subspace, side }
    }

    /// Checks closure under the ambient multiplications of the claimed side(s).
    pub fn verify(&self, ambient: &Algebra) -> bool {
        let s = &self.subspace;
        let left = || ambient.span_products(&Subspace::whole(ambient.field, ambient.dim), s);
        let right = || ambient.span_products(s, &Subspace::whole(ambient.field, ambient.dim));
        match self.side {
            Side::Left => s.contains_space(&left()),
            Side::Right => s.contains_space(&right()),
            Side::TwoSided => s.contains_space(&left()) && s.contains_space(&right()),
        }
    }
}

/// Outcome of [`validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Validity {
    /// Basis triples `(i, j, l)` (0-based) with `(e_i e_j) e_l ≠ e_i (e_j e_l)`.
    pub failing_triples: Vec<(usize, usize, usize)>,
    /// `None` when no unit is declared.
    pub unit_ok: Option<bool>,
}

impl Validity {
    pub fn ok(&self) -> bool {
        self.failing_triples.is_empty() && self.unit_ok != Some(false)
    }
}

/// `μ_R : R ⊗_R R -> R` and what follows from it.
#[derive(Clone, Debug)]
pub struct FirmnessReport {
    pub square: Balanced,
    /// `dim R x dim(R ⊗_R R)`
    pub mu: Mat,
    pub square_of_ring: Subspace,
    pub is_idempotent: bool,
    pub is_firm: bool,
    /// `d_R = μ_R^{-1}` when firm.
    pub d: Option<Mat>,
}

/// `S = R ⊗_R R` as a ring, with the ring map `S -> R` induced by multiplication.
#[derive(Clone, Debug)]
pub struct FirmSquare {
    pub algebra: Algebra,
    pub carrier: Balanced,
    pub to_ring: Mat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Core {
    pub ideal: IdealWitness,
    /// Number of products `I·I_n` computed before the chain stabilised.
    pub iterations: usize,
    /// Dimensions of `I_1, I_2, ...` up to the fixpoint.
    pub chain: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Radical {
    pub radical: Subspace,
    /// The trace form of `A / rad` is nondegenerate.
    pub quotient_semisimple: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalUnits {
    pub exists: bool,
    pub witness: Option<Mat>,
}

impl Algebra {
    pub fn new(field: Field, dim: usize, table: Mat, unit: Option<Mat>, label: impl Into<String>) -> Result<Algebra> {
        if table.rows() != dim || table.cols() != dim * dim || table.field() != field {
            return Err(Error::Dimension(format!(
                "structure table {}x{} for an algebra of dimension {dim}",
                table.rows(),
                table.cols()
            )));
        }
        if let Some(u) = &unit {
            if u.rows() != dim || u.cols() != 1 {
                return Err(Error::Dimension("unit vector of the wrong length".into()));
            }
        }
        Ok(Algebra { label: label.into(), field, dim, table, unit })
    }

    /// Builds the table from `e_i·e_j = prod(i, j)`.
    pub fn from_products(
        field: Field,
        dim: usize,
        unit: Option<Vec<Elem>>,
        label: impl Into<String>,
        prod: impl Fn(usize, usize) -> Vec<Elem>,
    ) -> Algebra {
        let mut table = Mat::zeros(field, dim, dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for (k, c) in prod(i, j).into_iter().enumerate() {
                    table.set(k, i * dim + j, c);
                }
            }
        }
        let unit = unit.map(|u| Mat::column(field, u));
        Algebra { label: label.into(), field, dim, table, unit }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn table(&self) -> &Mat {
        &self.table
    }

    pub fn unit(&self) -> Option<&Mat> {
        self.unit.as_ref()
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn without_unit(mut self) -> Self {
        self.unit = None;
        self
    }

    pub fn basis_vector(&self, i: usize) -> Mat {
        Mat::unit_column(self.field, self.dim, i)
    }

    pub fn mul(&self, x: &Mat, y: &Mat) -> Mat {
        self.table.mul(&x.kron(y))
    }

    /// Matrix of `y ↦ e_i·y`.
    pub fn left_basis(&self, i: usize) -> Mat {
        self.table.select_cols(&((i * self.dim)..((i + 1) * self.dim)).collect::<Vec<_>>())
    }

    /// Matrix of `y ↦ y·e_j`.
    pub fn right_basis(&self, j: usize) -> Mat {
        self.table.select_cols(&(0..self.dim).map(|i| i * self.dim + j).collect::<Vec<_>>())
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mat(&self, x: &Mat) -> Mat {
        self.table.mul(&x.kron(&Mat::identity(self.field, self.dim)))
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_mat(&self, x: &Mat) -> Mat {
        self.table.mul(&Mat::identity(self.field, self.dim).kron(x))
    }

    pub fn left_regular(&self) -> Vec<Mat> {
        (0..self.dim).map(|i| self.left_basis(i)).collect()
    }

    pub fn right_regular(&self) -> Vec<Mat> {
        (0..self.dim).map(|j| self.right_basis(j)).collect()
    }

    /// `span{x·y : x ∈ X, y ∈ Y}`.
    pub fn span_products(&self, x: &Subspace, y: &Subspace) -> Subspace {
        let xi = x.inclusion();
        let yi = y.inclusion();
        let mut span = SpanBuilder::new(self.field, self.dim);
        for a in 0..x.dim() {
            let l = self.left_mat(&xi.col(a));
            span.push_mat_rows(&l.mul(&yi).transpose());
        }
        span.finish()
    }

    pub fn whole(&self) -> Subspace {
        Subspace::whole(self.field, self.dim)
    }

    /// The subring carried by `s`, on the reduced basis of `s`, without a unit.
    pub fn sub(&self, s: &Subspace, label: impl Into<String>) -> Result<Algebra> {
        let inc = s.inclusion();
        let d = s.dim();
        let mut table = Mat::zeros(self.field, d, d * d);
        for i in 0..d {
            for j in 0..d {
                let p = self.mul(&inc.col(i), &inc.col(j));
                let c = s.try_coords(&p).ok_or_else(|| {
                    Error::Invalid(format!("subspace not closed under multiplication at ({i}, {j})"))
                })?;
                for k in 0..d {
                    table.set(k, i * d + j, c.get(k, 0).clone());
                }
            }
        }
        Algebra::new(self.field, d, table, None, label)
    }

    /// A two-sided unit if one exists, found by solving `e·x = x = x·e` on the basis.
    pub fn find_unit(&self) -> Option<Mat> {
        let n = self.dim;
        let mut blocks = Vec::new();
        let mut rhs = Vec::new();
        for i in 0..n {
            blocks.push(self.right_basis(i));
            blocks.push(self.left_basis(i));
            rhs.push(self.basis_vector(i));
            rhs.push(self.basis_vector(i));
        }
        let a = Mat::vstack(&blocks.iter().collect::<Vec<_>>(), self.field, n);
        let b = Mat::vstack(&rhs.iter().collect::<Vec<_>>(), self.field, 1);
        rref_solve(&a, &b).ok().flatten()
    }

    pub fn with_detected_unit(mut self) -> Self {
        self.unit = self.find_unit();
        self
    }

    pub fn to_json(&self) -> Value {
        let n = self.dim;
        let mult: Vec<Vec<Vec<Value>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| self.table.get(k, i * n + j).to_json()).collect())
                    .collect()
            })
            .collect();
        json!({
            "field": self.field.to_json(),
            "dim": n,
            "mult": mult,
            "unit": self.unit.as_ref().map(|u| u.entries().iter().map(Elem::to_json).collect::<Vec<_>>()),
            "label": self.label,
        })
    }

    pub fn from_json(v: &Value) -> Result<Algebra> {
        let field = Field::from_json(&v["field"])?;
        let dim = v["dim"].as_u64().ok_or_else(|| Error::Input("algebra needs \"dim\"".into()))? as usize;
        let mult = v["mult"].as_array().ok_or_else(|| Error::Input("algebra needs \"mult\"".into()))?;
        if mult.len() != dim {
            return Err(Error::Input(format!("\"mult\" has {} rows, expected {dim}", mult.len())));
        }
        let mut table = Mat::zeros(field, dim, dim * dim);
        for (i, row) in mult.iter().enumerate() {
            let row = row.as_array().filter(|r| r.len() == dim).ok_or_else(|| {
                Error::Input(format!("\"mult\"[{i}] must list {dim} products"))
            })?;
            for (j, prod) in row.iter().enumerate() {
                let prod = prod.as_array().filter(|p| p.len() == dim).ok_or_else(|| {
                    Error::Input(format!("\"mult\"[{i}][{j}] must have {dim} coefficients"))
                })?;
                for (k, c) in prod.iter().enumerate() {
                    table.set(k, i * dim + j, field.parse_elem(c)?);
                }
            }
        }
        let unit = match &v["unit"] {
            Value::Null => None,
            Value::Array(u) if u.len() == dim => Some(Mat::column(
                field,
                u.iter().map(|c| field.parse_elem(c)).collect::<Result<Vec<_>>>()?,
            )),
            _ => return Err(Error::Input("\"unit\" must be null or a vector".into())),
        };
        let label = v["label"].as_str().unwrap_or("A").to_string();
        Algebra::new(field, dim, table, unit, label)
    }
}

/// Every failing basis triple for associativity, plus the unit check.
pub fn validate(a: &Algebra) -> Validity {
    let n = a.dim;
    let left: Vec<Mat> = a.left_regular();
    let triples = par::triples(n, n, n);
    let failing: Vec<Option<(usize, usize, usize)>> = par::map(&triples, |&(i, j, l)| {
        let ij = a.table.col(i * n + j);
        let jl = a.table.col(j * n + l);
        let lhs = a.mul(&ij, &a.basis_vector(l));
        let rhs = left[i].mul(&jl);
        (lhs != rhs).then_some((i, j, l))
    });
    let unit_ok = a.unit.as_ref().map(|u| {
        let id = Mat::identity(a.field, n);
        a.left_mat(u) == id && a.right_mat(u) == id
    });
    Validity { failing_triples: failing.into_iter().flatten().collect(), unit_ok }
}

/// `R̂ = R ⊕ k`; the adjoined unit is the last basis vector.
pub fn dorroh(r: &Algebra) -> Algebra {
    let n = r.dim;
    let f = r.field;
    let mut unit = vec![f.zero(); n + 1];
    unit[n] = f.one();
    Algebra::from_products(f, n + 1, Some(unit), format!("{}^", r.label), |i, j| {
        let mut v = vec![f.zero(); n + 1];
        match (i == n, j == n) {
            (true, true) => v[n] = f.one(),
            (true, false) => v[j] = f.one(),
            (false, true) => v[i] = f.one(),
            (false, false) => {
                for k in 0..n {
                    v[k] = r.table.get(k, i * n + j).clone();
                }
            }
        }
        v
    })
}

/// `R² = span{e_i e_j}` and whether it equals `R`.
pub fn is_idempotent(r: &Algebra) -> (bool, Subspace) {
    let sq = image(&r.table);
    (sq.dim() == r.dim, sq)
}

/// `R ⊗_R R` as a quotient of `R ⊗_k R`.
pub fn square_carrier(r: &Algebra) -> Result<Balanced> {
    balanced(r.field, r.dim, r.dim, &r.right_regular(), &r.left_regular())
}

pub fn firmness(r: &Algebra) -> Result<FirmnessReport> {
    let square = square_carrier(r)?;
    let mu = square.descend(&r.table);
    let (is_idempotent, square_of_ring) = is_idempotent(r);
    let is_firm = is_iso(&mu);
    let d = if is_firm { Some(inverse(&mu)?) } else { None };
    Ok(FirmnessReport { square, mu, square_of_ring, is_idempotent, is_firm, d })
}

/// `S = R ⊗_R R` with `(r1⊗r1')(r2⊗r2') = r1r1' ⊗ r2r2'`.
pub fn firm_square(r: &Algebra) -> Result<FirmSquare> {
    let carrier = square_carrier(r)?;
    let mu = carrier.descend(&r.table);
    let table = carrier.ascend(&mu.kron(&mu));
    let unit = r.unit.as_ref().map(|u| carrier.ascend(&u.kron(u)));
    let algebra = Algebra::new(r.field, carrier.dim(), table, unit, format!("{}⊗{}", r.label, r.label))?;
    Ok(FirmSquare { algebra, carrier, to_ring: mu })
}

/// The maximal idempotent left ideal inside `I`, via `I_{n+1} = I·I_n`.
pub fn idempotent_core(a: &Algebra, ideal: &IdealWitness) -> Result<Core> {
    let closed = IdealWitness::new(ideal.subspace.clone(), Side::Left).verify(a)
        && (ideal.side != Side::TwoSided || ideal.verify(a));
    if !closed {
        return Err(Error::Invalid(format!(
            "subspace is not a {} ideal of {}",
            ideal.side.name(),
            a.label
        )));
    }
    let i = &ideal.subspace;
    let mut current = i.clone();
    let mut chain = vec![current.dim()];
    let mut iterations = 0;
    loop {
        let next = a.span_products(i, &current);
        iterations += 1;
        if next == current {
            break;
        }
        chain.push(next.dim());
        current = next;
    }
    Ok(Core { ideal: IdealWitness::new(current, Side::Left), iterations, chain })
}

/// Jacobson radical in characteristic 0 from the trace form `tr(L_{xy})`.
pub fn radical_char0(a: &Algebra) -> Result<Radical> {
    if a.field.characteristic() != 0 {
        return Err(Error::Characteristic(a.field.characteristic()));
    }
    let gram = trace_gram(a);
    let mut rad = kernel(&gram.transpose());
    // Shrink to the largest two-sided ideal inside the form radical.
    loop {
        let inc = rad.inclusion();
        let mut keep = Subspace::whole(a.field, rad.dim());
        for i in 0..a.dim {
            for c in [a.left_basis(i).mul(&inc), a.right_basis(i).mul(&inc)] {
                keep = intersect(&keep, &kernel(&modulo(&rad, &c)))?;
            }
        }
        let next = Subspace::from_cols(&inc.mul(&keep.inclusion()));
        if next == rad {
            break;
        }
        rad = next;
    }
    let q = quotient_by(a.dim, &rad)?;
    let qt = q.projection.mul(&a.table).mul(&q.section.kron(&q.section));
    let qa = Algebra::new(a.field, q.dim, qt, None, "A/rad")?;
    let quotient_semisimple = is_iso(&trace_gram(&qa));
    Ok(Radical { radical: rad, quotient_semisimple })
}

/// Matrix whose kernel is `{x : c·x ∈ s}`.
fn modulo(s: &Subspace, c: &Mat) -> Mat {
    quotient_by(s.ambient(), s).expect("same ambient").projection.mul(c)
}

fn trace_gram(a: &Algebra) -> Mat {
    let n = a.dim;
    let traces = Mat::from_fn(a.field, 1, n, |_, k| {
        let l = a.left_basis(k);
        (0..n).fold(a.field.zero(), |acc, i| &acc + l.get(i, i))
    });
    let flat = traces.mul(&a.table);
    Mat::from_fn(a.field, n, n, |i, j| flat.get(0, i * n + j).clone())
}

/// Solves `b_i·e = b_i` for every basis element simultaneously.
pub fn has_right_local_units(b: &Algebra) -> LocalUnits {
    let n = b.dim;
    if n == 0 {
        return LocalUnits { exists: true, witness: Some(Mat::zeros(b.field, 0, 1)) };
    }
    let blocks = b.left_regular();
    let rhs: Vec<Mat> = (0..n).map(|i| b.basis_vector(i)).collect();
    let a = Mat::vstack(&blocks.iter().collect::<Vec<_>>(), b.field, n);
    let r = Mat::vstack(&rhs.iter().collect::<Vec<_>>(), b.field, 1);
    let witness = rref_solve(&a, &r).expect("shapes agree");
    LocalUnits { exists: witness.is_some(), witness }
}

pub fn opposite(a: &Algebra) -> Algebra {
    let n = a.dim;
    let table = Mat::from_fn(a.field, n, n * n, |k, c| {
        let (i, j) = (c / n, c % n);
        a.table.get(k, j * n + i).clone()
    });
    Algebra { label: format!("{}^op", a.label), field: a.field, dim: n, table, unit: a.unit.clone() }
}

/// Structure constants of a few standard algebras.
pub mod standard {
    use super::*;

    /// `k` itself.
    pub fn ground(f: Field) -> Algebra {
        Algebra::from_products(f, 1, Some(vec![f.one()]), "k", |_, _| vec![f.one()])
    }

    /// `k^dim` with zero multiplication.
    pub fn zero_product(f: Field, dim: usize) -> Algebra {
        Algebra::from_products(f, dim, None, format!("0^{dim}"), |_, _| vec![f.zero(); dim])
    }

    /// `M_n(k)` on matrix units, `e_{ij}` at index `i·n + j`.
    pub fn matrix(f: Field, n: usize) -> Algebra {
        let d = n * n;
        let unit = (0..d).map(|k| if k / n == k % n { f.one() } else { f.zero() }).collect();
        Algebra::from_products(f, d, Some(unit), format!("M{n}"), |x, y| {
            let (i, j) = (x / n, x % n);
            let (k, l) = (y / n, y % n);
            let mut v = vec![f.zero(); d];
            if j == k {
                v[i * n + l] = f.one();
            }
            v
        })
    }

    /// Upper-triangular `n x n` matrices on the units `e_{ij}`, `i ≤ j`, in
    /// row-major order.
    pub fn upper_triangular(f: Field, n: usize) -> Algebra {
        let units = triangular_units(n);
        let d = units.len();
        let pos = |i: usize, j: usize| units.iter().position(|&u| u == (i, j));
        let unit = units.iter().map(|&(i, j)| if i == j { f.one() } else { f.zero() }).collect();
        Algebra::from_products(f, d, Some(unit), format!("T{n}"), |x, y| {
            let (i, j) = units[x];
            let (k, l) = units[y];
            let mut v = vec![f.zero(); d];
            if j == k {
                v[pos(i, l).expect("upper triangular is closed")] = f.one();
            }
            v
        })
    }

    pub fn triangular_units(n: usize) -> Vec<(usize, usize)> {
        let mut u = Vec::new();
        for i in 0..n {
            for j in i..n {
                u.push((i, j));
            }
        }
        u
    }

    /// `k^n` with componentwise product.
    pub fn diagonal(f: Field, n: usize) -> Algebra {
        Algebra::from_products(f, n, Some(vec![f.one(); n]), format!("k^{n}"), |i, j| {
            let mut v = vec![f.zero(); n];
            if i == j {
                v[i] = f.one();
            }
            v
        })
    }

    /// `k[n]/(n²)` on the basis `1, n`.
    pub fn dual_numbers(f: Field) -> Algebra {
        Algebra::from_products(f, 2, Some(vec![f.one(), f.zero()]), "k[n]/n^2", |i, j| {
            let mut v = vec![f.zero(); 2];
            if i + j < 2 {
                v[i + j] = f.one();
            }
            v
        })
    }

    /// Group algebra of `Z/n` on the basis `g^0, ..., g^{n-1}`.
    pub fn cyclic_group(f: Field, n: usize) -> Algebra {
        let mut unit = vec![f.zero(); n];
        unit[0] = f.one();
        Algebra::from_products(f, n, Some(unit), format!("k[Z/{n}]"), |i, j| {
            let mut v = vec![f.zero(); n];
            v[(i + j) % n] = f.one();
            v
        })
    }

    /// The subring `span{e11, e12}` of `M_2` (a right-unital, left-ideal-like ring).
    pub fn row_ideal(f: Field) -> Algebra {
        let m2 = matrix(f, 2);
        let s = Subspace::from_rows(&Mat::from_ints(f, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]));
        m2.sub(&s, "span{e11,e12}").expect("first row is a subring")
    }
}

#[cfg(test)]
mod tests {
    use super::standard::*;
    use super::*;

    const Q: Field = Field::Rational;

    fn v(xs: &[i64]) -> Vec<Elem> {
        xs.iter().map(|&x| Q.int(x)).collect()
    }

    #[test]
    fn validate_examples() {
        assert!(validate(&matrix(Q, 2)).ok());
        let twice = Algebra::from_products(Q, 1, None, "2e", |_, _| v(&[2]));
        assert!(validate(&twice).ok());
        let bad = Algebra::from_products(Q, 2, None, "bad", |i, j| match (i, j) {
            (0, 0) => v(&[0, 1]),
            (0, 1) => v(&[1, 0]),
            _ => v(&[0, 0]),
        });
        let val = validate(&bad);
        assert!(val.failing_triples.contains(&(0, 0, 1)));
        // Oracle: expand both associations directly on basis vectors.
        let mut expected = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                for l in 0..2 {
                    let (ei, ej, el) = (bad.basis_vector(i), bad.basis_vector(j), bad.basis_vector(l));
                    if bad.mul(&bad.mul(&ei, &ej), &el) != bad.mul(&ei, &bad.mul(&ej, &el)) {
                        expected.push((i, j, l));
                    }
                }
            }
        }
        assert_eq!(val.failing_triples, expected);
    }

    #[test]
    fn dorroh_examples() {
        let z = dorroh(&zero_product(Q, 0));
        assert_eq!(z.dim(), 1);
        assert!(validate(&z).ok());
        let k2 = dorroh(&ground(Q));
        assert_eq!(k2.dim(), 2);
        assert_eq!(k2.unit().unwrap(), &Mat::column(Q, v(&[0, 1])));
        let n = dorroh(&zero_product(Q, 1));
        assert!(validate(&n).ok());
        // (a n + α)(b n + β) = (aβ + αb) n + αβ
        let x = Mat::column(Q, v(&[2, 3]));
        let y = Mat::column(Q, v(&[5, 7]));
        assert_eq!(n.mul(&x, &y), Mat::column(Q, v(&[2 * 7 + 3 * 5, 21])));
    }

    #[test]
    fn idempotency_examples() {
        assert!(is_idempotent(&matrix(Q, 2)).0);
        let (idem, sq) = is_idempotent(&zero_product(Q, 1));
        assert!(!idem);
        assert_eq!(sq.dim(), 0);
        assert!(is_idempotent(&row_ideal(Q)).0);
    }

    #[test]
    fn firmness_examples() {
        let k = firmness(&ground(Q)).unwrap();
        assert!(k.is_firm);
        assert_eq!(k.mu, Mat::identity(Q, 1));
        let n = firmness(&zero_product(Q, 1)).unwrap();
        assert!(!n.is_firm);
        assert_eq!(n.square.dim(), 1);
        assert!(n.mu.is_zero());
        let r = firmness(&row_ideal(Q)).unwrap();
        assert!(r.is_firm);
        assert_eq!(r.square.dim(), 2);
        let d = r.d.unwrap();
        assert!(r.mu.mul(&d).is_identity());
        assert!(d.mul(&r.mu).is_identity());
    }

    #[test]
    fn firm_square_examples() {
        let s = firm_square(&ground(Q)).unwrap();
        assert_eq!(s.algebra.dim(), 1);
        assert!(firmness(&s.algebra).unwrap().is_firm);
        let s = firm_square(&zero_product(Q, 1)).unwrap();
        assert_eq!(s.algebra.dim(), 1);
        assert!(s.algebra.table().is_zero());
        let s = firm_square(&row_ideal(Q)).unwrap();
        assert_eq!(s.algebra.dim(), 2);
        assert!(validate(&s.algebra).ok());
        assert!(firmness(&s.algebra).unwrap().is_firm);
    }

    #[test]
    fn idempotent_core_examples() {
        let m2 = matrix(Q, 2);
        let c = idempotent_core(&m2, &IdealWitness::new(m2.whole(), Side::TwoSided)).unwrap();
        assert_eq!((c.ideal.subspace.dim(), c.iterations), (4, 1));

        let t3 = upper_triangular(Q, 3);
        let strict = Subspace::from_rows(&Mat::from_fn(Q, 3, 6, |r, c| {
            // strictly upper units e12, e13, e23 sit at indices 1, 2, 4
            if [1, 2, 4][r] == c { Q.one() } else { Q.zero() }
        }));
        let c = idempotent_core(&t3, &IdealWitness::new(strict, Side::TwoSided)).unwrap();
        assert_eq!(c.ideal.subspace.dim(), 0);
        assert_eq!(c.iterations, 3);
        assert_eq!(c.chain, vec![3, 1, 0]);

        let k2 = diagonal(Q, 2);
        let first = Subspace::from_rows(&Mat::from_ints(Q, &[&[1, 0]]));
        let c = idempotent_core(&k2, &IdealWitness::new(first.clone(), Side::TwoSided)).unwrap();
        assert_eq!(c.ideal.subspace, first);
        assert_eq!(c.iterations, 1);

        let not_ideal = Subspace::from_rows(&Mat::from_ints(Q, &[&[0, 1, 0, 0]]));
        assert!(idempotent_core(&m2, &IdealWitness::new(not_ideal, Side::Left)).is_err());
    }

    #[test]
    fn radical_examples() {
        assert_eq!(radical_char0(&matrix(Q, 2)).unwrap().radical.dim(), 0);
        let r = radical_char0(&dual_numbers(Q)).unwrap();
        assert_eq!(r.radical, Subspace::from_rows(&Mat::from_ints(Q, &[&[0, 1]])));
        assert!(r.quotient_semisimple);
        assert_eq!(radical_char0(&diagonal(Q, 2)).unwrap().radical.dim(), 0);
        let f = Field::prime(5).unwrap();
        assert_eq!(radical_char0(&matrix(f, 2)), Err(Error::Characteristic(5)));
    }

    /// Brute force over all `e` with entries in {-2..2} on the two-dimensional ring.
    #[test]
    fn local_units_examples() {
        let m2 = matrix(Q, 2);
        let lu = has_right_local_units(&m2);
        assert!(lu.exists);
        assert_eq!(lu.witness.as_ref(), m2.unit());
        assert!(!has_right_local_units(&zero_product(Q, 1)).exists);
        let r = row_ideal(Q);
        let mut brute = false;
        for a in -2..=2 {
            for b in -2..=2 {
                let e = Mat::column(Q, v(&[a, b]));
                if (0..2).all(|i| r.mul(&r.basis_vector(i), &e) == r.basis_vector(i)) {
                    brute = true;
                }
            }
        }
        assert!(!brute);
        assert!(!has_right_local_units(&r).exists);
    }

    #[test]
    fn opposite_examples() {
        let m2 = matrix(Q, 2);
        assert!(validate(&opposite(&m2)).ok());
        let k2 = diagonal(Q, 2);
        assert_eq!(opposite(&k2), k2);
        // span{e11,e12} is a right ideal of M_2; in the opposite ring it is a left ideal.
        let s = Subspace::from_rows(&Mat::from_ints(Q, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]));
        assert!(IdealWitness::new(s.clone(), Side::Right).verify(&m2));
        assert!(IdealWitness::new(s, Side::Left).verify(&opposite(&m2)));
    }

    #[test]
    fn json_roundtrip() {
        let t = upper_triangular(Q, 2);
        let back = Algebra::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.label, "T2");
    }
}
