//! Exact dense linear algebra over the rationals and over prime fields.
//!
//! Every computation in the crate bottoms out here. Matrices act on column
//! vectors, so a map `U -> V` is stored as a `dim V x dim U` matrix. The
//! tensor basis of `U ⊗ V` is ordered by `(i, j) ↦ i·dim V + j`, which is
//! exactly the ordering produced by [`Mat::kron`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// The base field: `Q` or `F_p` for a prime `p < 2^31`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    pub fn prime(p: u32) -> Result<Field> {
        if (2..(1u32 << 31)).contains(&p) && is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::Input(format!("{p} is not a prime below 2^31")))
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Elem {
        self.int(0)
    }

    pub fn one(self) -> Elem {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Elem {
        match self {
            Field::Rational => Elem::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Elem::P(p, n.rem_euclid(p as i64) as u32),
        }
    }

    /// `n / d`; panics when `d` vanishes in the field.
    pub fn frac(self, n: i64, d: i64) -> Elem {
        &self.int(n) * &self.int(d).inv().expect("denominator vanishes in field")
    }

    pub fn parse_elem(self, v: &Value) -> Result<Elem> {
        match self {
            Field::Rational => {
                let text = match v {
                    Value::String(s) => s.clone(),
                    Value::Number(n) if n.is_i64() => n.to_string(),
                    _ => return Err(Error::Input(format!("expected rational, got {v}"))),
                };
                let (num, den) = match text.split_once('/') {
                    Some((a, b)) => (a.trim(), b.trim()),
                    None => (text.trim(), "1"),
                };
                let num: BigInt = num
                    .parse()
                    .map_err(|_| Error::Input(format!("bad rational {text:?}")))?;
                let den: BigInt = den
                    .parse()
                    .map_err(|_| Error::Input(format!("bad rational {text:?}")))?;
                if den.is_zero() {
                    return Err(Error::Input(format!("zero denominator in {text:?}")));
                }
                Ok(Elem::Q(BigRational::new(num, den)))
            }
            Field::Prime(p) => {
                let n = match v {
                    Value::Number(n) => n
                        .as_i64()
                        .ok_or_else(|| Error::Input(format!("bad residue {v}")))?,
                    Value::String(s) => s
                        .trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Input(format!("bad residue {s:?}")))?,
                    _ => return Err(Error::Input(format!("expected residue, got {v}"))),
                };
                Ok(Elem::P(p, n.rem_euclid(p as i64) as u32))
            }
        }
    }

    pub fn to_json(self) -> Value {
        match self {
            Field::Rational => json!("Q"),
            Field::Prime(p) => json!(format!("F{p}")),
        }
    }

    pub fn from_json(v: &Value) -> Result<Field> {
        match v {
            Value::String(s) if s == "Q" || s == "QQ" || s == "rationals" => Ok(Field::Rational),
            Value::String(s) => {
                let digits = s.trim_start_matches("GF").trim_start_matches('F');
                let p = digits
                    .trim_start_matches('(')
                    .trim_end_matches(')')
                    .parse::<u32>()
                    .map_err(|_| Error::Input(format!("unknown field {s:?}")))?;
                Field::prime(p)
            }
            Value::Number(n) => match n.as_u64() {
                Some(0) => Ok(Field::Rational),
                Some(p) if p < (1 << 31) => Field::prime(p as u32),
                _ => Err(Error::Input(format!("unknown field {n}"))),
            },
            _ => Err(Error::Input(format!("unknown field {v}"))),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Elem {
    Q(BigRational),
    /// `(p, residue)` with the residue in `[0, p)`.
    P(u32, u32),
}

impl Elem {
    pub fn field(&self) -> Field {
        match self {
            Elem::Q(_) => Field::Rational,
            Elem::P(p, _) => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Elem::Q(q) => q.is_zero(),
            Elem::P(_, v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Elem::Q(q) => q.is_one(),
            Elem::P(_, v) => *v == 1,
        }
    }

    pub fn inv(&self) -> Option<Elem> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Elem::Q(q) => Elem::Q(q.recip()),
            Elem::P(p, v) => Elem::P(*p, pow_mod(*v as u64, *p as u64 - 2, *p as u64) as u32),
        })
    }

    pub fn to_json(&self) -> Value {
        match self {
            Elem::Q(q) => json!(format!("{}/{}", q.numer(), q.denom())),
            Elem::P(_, v) => json!(*v),
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Q(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            Elem::Q(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Elem::P(_, v) => write!(f, "{v}"),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $qop:tt, $pop:expr) => {
        impl<'a> $tr<&'a Elem> for &'a Elem {
            type Output = Elem;
            fn $m(self, rhs: &'a Elem) -> Elem {
                match (self, rhs) {
                    (Elem::Q(a), Elem::Q(b)) => Elem::Q(a $qop b),
                    (Elem::P(p, a), Elem::P(q, b)) if p == q => {
                        let f: fn(u64, u64, u64) -> u64 = $pop;
                        Elem::P(*p, f(*a as u64, *b as u64, *p as u64) as u32)
                    }
                    _ => panic!("mixed-field arithmetic"),
                }
            }
        }
        impl $tr<Elem> for Elem {
            type Output = Elem;
            fn $m(self, rhs: Elem) -> Elem {
                (&self).$m(&rhs)
            }
        }
    };
}

binop!(Add, add, +, |a, b, p| (a + b) % p);
binop!(Sub, sub, -, |a, b, p| (a + p - b) % p);
binop!(Mul, mul, *, |a, b, p| a * b % p);

impl Neg for &Elem {
    type Output = Elem;
    fn neg(self) -> Elem {
        match self {
            Elem::Q(a) => Elem::Q(-a),
            Elem::P(p, a) => Elem::P(*p, (*p - *a) % *p),
        }
    }
}

impl Neg for Elem {
    type Output = Elem;
    fn neg(self) -> Elem {
        -&self
    }
}

/// Dense row-major matrix with canonical entries.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Mat {
        Mat { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Elem) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { field, rows, cols, data }
    }

    pub fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Mat> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if data.iter().any(|e| e.field() != field) {
            return Err(Error::Input("matrix entry from another field".into()));
        }
        Ok(Mat { field, rows, cols, data })
    }

    /// Builds a matrix from integer rows; a convenience for tests and examples.
    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Mat::from_fn(field, r, c, |i, j| field.int(rows[i][j]))
    }

    /// A single column.
    pub fn column(field: Field, entries: Vec<Elem>) -> Mat {
        let n = entries.len();
        Mat { field, rows: n, cols: 1, data: entries }
    }

    pub fn unit_column(field: Field, n: usize, i: usize) -> Mat {
        let mut m = Mat::zeros(field, n, 1);
        m.set(i, 0, field.one());
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Elem] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Mat {
        Mat::from_fn(self.field, self.rows, 1, |i, _| self.get(i, j).clone())
    }

    pub fn col_entries(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Elem::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Mat::identity(self.field, self.rows)
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Mat::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * rhs.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sum shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        Mat { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "difference shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Mat { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Elem) -> Mat {
        let data = self.data.iter().map(|a| a * s).collect();
        Mat { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// Kronecker product; row/column `(i, j)` of the factors lands at `i·n + j`.
    pub fn kron(&self, rhs: &Mat) -> Mat {
        let (br, bc) = (rhs.rows, rhs.cols);
        let mut out = Mat::zeros(self.field, self.rows * br, self.cols * bc);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..br {
                    for j2 in 0..bc {
                        let b = rhs.get(i2, j2);
                        if !b.is_zero() {
                            out.set(i1 * br + i2, j1 * bc + j2, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(parts: &[&Mat], field: Field, rows: usize) -> Mat {
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let mut off = 0;
        for m in parts {
            assert_eq!(m.rows, rows, "hstack row mismatch");
            for i in 0..rows {
                for j in 0..m.cols {
                    out.set(i, off + j, m.get(i, j).clone());
                }
            }
            off += m.cols;
        }
        out
    }

    pub fn vstack(parts: &[&Mat], field: Field, cols: usize) -> Mat {
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for m in parts {
            assert_eq!(m.cols, cols, "vstack column mismatch");
            data.extend(m.data.iter().cloned());
        }
        Mat { field, rows, cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Mat {
        Mat::from_fn(self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        Mat::from_fn(self.field, idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    /// Reduced row echelon form with leftmost pivots, and the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let sub = &f * m.get(r, j);
                    if !sub.is_zero() {
                        let v = m.get(i, j) - &sub;
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Rows of the canonical basis of the null space `{x : self·x = 0}`.
    pub fn null_space(&self) -> Mat {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Mat::zeros(self.field, free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            basis.set(k, f, self.field.one());
            for (row, &p) in pivots.iter().enumerate() {
                basis.set(k, p, -r.get(row, f));
            }
        }
        basis.rref().0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "rows": self.rows,
            "cols": self.cols,
            "entries": self.data.iter().map(Elem::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value, field: Field) -> Result<Mat> {
        let rows = v["rows"]
            .as_u64()
            .ok_or_else(|| Error::Input("matrix needs \"rows\"".into()))? as usize;
        let cols = v["cols"]
            .as_u64()
            .ok_or_else(|| Error::Input("matrix needs \"cols\"".into()))? as usize;
        let entries = v["entries"]
            .as_array()
            .ok_or_else(|| Error::Input("matrix needs \"entries\"".into()))?;
        let data = entries.iter().map(|e| field.parse_elem(e)).collect::<Result<Vec<_>>>()?;
        Mat::from_vec(field, rows, cols, data)
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Solves `a·x = b`, returning `None` when the system is inconsistent.
/// Free variables are set to zero.
pub fn rref_solve(a: &Mat, b: &Mat) -> Result<Option<Mat>> {
    if a.rows() != b.rows() {
        return Err(Error::Dimension(format!(
            "system has {} rows but right-hand side has {}",
            a.rows(),
            b.rows()
        )));
    }
    let field = a.field();
    let aug = Mat::hstack(&[a, b], field, a.rows());
    let (r, pivots) = aug.rref();
    if pivots.iter().any(|&p| p >= a.cols()) {
        return Ok(None);
    }
    let mut x = Mat::zeros(field, a.cols(), b.cols());
    for (row, &p) in pivots.iter().enumerate() {
        for j in 0..b.cols() {
            x.set(p, j, r.get(row, a.cols() + j).clone());
        }
    }
    Ok(Some(x))
}

/// A named finite-dimensional carrier space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasedSpace {
    pub dim: usize,
    pub label: String,
}

impl BasedSpace {
    pub fn new(dim: usize, label: impl Into<String>) -> Self {
        BasedSpace { dim, label: label.into() }
    }
}

/// `U ⊗ V` with basis index `(i, j) ↦ i·dim V + j`.
pub fn tensor(u: &BasedSpace, v: &BasedSpace) -> BasedSpace {
    BasedSpace::new(u.dim * v.dim, format!("{}⊗{}", u.label, v.label))
}

pub fn tensor_index(i: usize, j: usize, dim_v: usize) -> usize {
    i * dim_v + j
}

/// Subspace of `k^ambient` held by its reduced row echelon basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Mat::zeros(field, 0, ambient), pivots: vec![] }
    }

    pub fn whole(field: Field, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Mat::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    /// Span of the rows of `m`.
    pub fn from_rows(m: &Mat) -> Subspace {
        let (r, pivots) = m.rref();
        let basis = r.select_rows(&(0..pivots.len()).collect::<Vec<_>>());
        Subspace { ambient: m.cols(), basis, pivots }
    }

    /// Span of the columns of `m`.
    pub fn from_cols(m: &Mat) -> Subspace {
        Subspace::from_rows(&m.transpose())
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Basis vectors as rows, in reduced row echelon form.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Inclusion `k^dim -> k^ambient`: the basis vectors as columns.
    pub fn inclusion(&self) -> Mat {
        self.basis.transpose()
    }

    /// Residue of a column vector modulo the subspace.
    pub fn reduce(&self, v: &Mat) -> Mat {
        let mut v = v.clone();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = v.get(p, 0).clone();
            if c.is_zero() {
                continue;
            }
            for j in 0..self.ambient {
                let b = self.basis.get(r, j);
                if !b.is_zero() {
                    let nv = v.get(j, 0) - &(&c * b);
                    v.set(j, 0, nv);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &Mat) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of every column of `m` (assumed inside) in the basis.
    pub fn coords(&self, m: &Mat) -> Mat {
        m.select_rows(&self.pivots)
    }

    /// Coordinates of the columns of `m`, or `None` if some column lies outside.
    pub fn try_coords(&self, m: &Mat) -> Option<Mat> {
        let c = self.coords(m);
        if self.inclusion().mul(&c) == *m {
            Some(c)
        } else {
            None
        }
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|r| self.contains(&other.basis.select_rows(&[r]).transpose()))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::from_rows(&Mat::vstack(&[&self.basis, &other.basis], self.field(), self.ambient))
    }

    pub fn to_json(&self) -> Value {
        json!({"ambient": self.ambient, "dim": self.dim(), "basis": self.basis.to_json()})
    }
}

/// Incremental span of row vectors, kept fully reduced so that `finish` is the
/// reduced row echelon basis.
#[derive(Clone, Debug)]
pub struct SpanBuilder {
    field: Field,
    ambient: usize,
    rows: Vec<(usize, Vec<Elem>)>,
}

impl SpanBuilder {
    pub fn new(field: Field, ambient: usize) -> Self {
        SpanBuilder { field, ambient, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` to the span; returns whether the span grew.
    pub fn push(&mut self, mut v: Vec<Elem>) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        for (p, row) in &self.rows {
            let c = v[*p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x = &*x - &(&c * b);
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero pivot");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, b) in row.iter_mut().zip(&v) {
                if !b.is_zero() {
                    *x = &*x - &(&c * b);
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    pub fn push_mat_rows(&mut self, m: &Mat) {
        for i in 0..m.rows() {
            if self.rows.len() == self.ambient {
                return;
            }
            self.push(m.row(i).to_vec());
        }
    }

    pub fn merge(&mut self, other: SpanBuilder) {
        for (_, v) in other.rows {
            if self.rows.len() == self.ambient {
                return;
            }
            self.push(v);
        }
    }

    pub fn finish(mut self) -> Subspace {
        self.rows.sort_by_key(|(p, _)| *p);
        let pivots: Vec<usize> = self.rows.iter().map(|(p, _)| *p).collect();
        let data: Vec<Elem> = self.rows.into_iter().flat_map(|(_, v)| v).collect();
        let basis = Mat::from_vec(self.field, pivots.len(), self.ambient, data)
            .expect("rows have ambient length");
        Subspace { ambient: self.ambient, basis, pivots }
    }
}

/// `S1 ∩ S2` for subspaces of the same ambient space.
pub fn intersect(s1: &Subspace, s2: &Subspace) -> Result<Subspace> {
    if s1.ambient != s2.ambient {
        return Err(Error::Dimension("intersection of subspaces of different spaces".into()));
    }
    let field = s1.field();
    let u = s1.inclusion();
    let w = s2.inclusion().scale(&-field.one());
    let sys = Mat::hstack(&[&u, &w], field, s1.ambient);
    let ker = sys.null_space();
    let a = ker.transpose().select_rows(&(0..s1.dim()).collect::<Vec<_>>());
    Ok(Subspace::from_cols(&u.mul(&a)))
}

/// `V / R` with the section spanned by the standard vectors off the pivots of `R`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quotient {
    pub ambient: usize,
    pub relations: Subspace,
    pub dim: usize,
    /// `dim x ambient`
    pub projection: Mat,
    /// `ambient x dim`
    pub section: Mat,
}

pub fn quotient_by(ambient: usize, relations: &Subspace) -> Result<Quotient> {
    if relations.ambient() != ambient {
        return Err(Error::Dimension("relations live in another space".into()));
    }
    let field = relations.field();
    let pivots = relations.pivots();
    let free: Vec<usize> = (0..ambient).filter(|c| !pivots.contains(c)).collect();
    let dim = free.len();
    let mut section = Mat::zeros(field, ambient, dim);
    let mut projection = Mat::zeros(field, dim, ambient);
    for (t, &f) in free.iter().enumerate() {
        section.set(f, t, field.one());
        projection.set(t, f, field.one());
    }
    for (r, &p) in pivots.iter().enumerate() {
        for (t, &f) in free.iter().enumerate() {
            projection.set(t, p, -relations.basis().get(r, f));
        }
    }
    Ok(Quotient { ambient, relations: relations.clone(), dim, projection, section })
}

/// A linear map between named spaces.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinMap {
    pub domain: BasedSpace,
    pub codomain: BasedSpace,
    pub matrix: Mat,
}

impl LinMap {
    pub fn new(domain: BasedSpace, codomain: BasedSpace, matrix: Mat) -> Result<LinMap> {
        if matrix.rows() != codomain.dim || matrix.cols() != domain.dim {
            return Err(Error::Dimension(format!(
                "{}x{} matrix for a map {} -> {}",
                matrix.rows(),
                matrix.cols(),
                domain.dim,
                codomain.dim
            )));
        }
        Ok(LinMap { domain, codomain, matrix })
    }

    pub fn from_mat(matrix: Mat) -> LinMap {
        LinMap {
            domain: BasedSpace::new(matrix.cols(), "V"),
            codomain: BasedSpace::new(matrix.rows(), "W"),
            matrix,
        }
    }

    pub fn kernel(&self) -> Subspace {
        kernel(&self.matrix)
    }

    pub fn image(&self) -> Subspace {
        image(&self.matrix)
    }

    pub fn is_iso(&self) -> bool {
        is_iso(&self.matrix)
    }

    pub fn inverse(&self) -> Result<LinMap> {
        Ok(LinMap {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            matrix: inverse(&self.matrix)?,
        })
    }
}

pub fn kernel(m: &Mat) -> Subspace {
    let basis = m.null_space();
    Subspace::from_rows(&basis)
}

pub fn image(m: &Mat) -> Subspace {
    Subspace::from_cols(m)
}

pub fn is_iso(m: &Mat) -> bool {
    m.rows() == m.cols() && m.rank() == m.rows()
}

pub fn inverse(m: &Mat) -> Result<Mat> {
    if !is_iso(m) {
        return Err(Error::NotInvertible(format!(
            "{}x{} matrix of rank {}",
            m.rows(),
            m.cols(),
            m.rank()
        )));
    }
    let id = Mat::identity(m.field(), m.rows());
    Ok(rref_solve(m, &id)?.expect("square full-rank system is consistent"))
}

/// Matrix of `X ↦ A·X·B` on row-major vectorised `X`: `vec(A·X·B) = (A ⊗ Bᵀ)·vec(X)`.
pub fn vec_left_right(a: &Mat, b: &Mat) -> Mat {
    a.kron(&b.transpose())
}

/// Row-major vectorisation of a matrix as a column.
pub fn vectorize(m: &Mat) -> Mat {
    Mat::column(m.field(), m.entries().to_vec())
}

/// Inverse of [`vectorize`].
pub fn unvectorize(v: &Mat, rows: usize, cols: usize) -> Mat {
    Mat::from_fn(v.field(), rows, cols, |i, j| v.get(i * cols + j, 0).clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn col(v: &[i64]) -> Mat {
        Mat::column(Q, v.iter().map(|&x| Q.int(x)).collect())
    }

    #[test]
    fn solve_identity() {
        let x = rref_solve(&Mat::identity(Q, 2), &col(&[3, 5])).unwrap().unwrap();
        assert_eq!(x, col(&[3, 5]));
    }

    #[test]
    fn solve_sets_free_variables_to_zero() {
        let x = rref_solve(&Mat::from_ints(Q, &[&[1, 1]]), &col(&[0])).unwrap().unwrap();
        assert_eq!(x, col(&[0, 0]));
    }

    #[test]
    fn solve_reports_inconsistency() {
        let a = Mat::from_ints(Q, &[&[1], &[1]]);
        assert_eq!(rref_solve(&a, &col(&[1, 2])).unwrap(), None);
        assert!(rref_solve(&a, &col(&[1])).is_err());
    }

    #[test]
    fn kernel_and_image_examples() {
        let z = Mat::zeros(Q, 2, 2);
        assert_eq!((kernel(&z).dim(), image(&z).dim()), (2, 0));
        let id = Mat::identity(Q, 3);
        assert_eq!((kernel(&id).dim(), image(&id).dim()), (0, 3));
        let f = Mat::from_ints(Q, &[&[1, 1], &[2, 2]]);
        let k = kernel(&f);
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&col(&[1, -1])));
        assert_eq!(image(&f).dim(), 1);
    }

    #[test]
    fn tensor_convention() {
        assert_eq!(tensor(&BasedSpace::new(2, "U"), &BasedSpace::new(3, "V")).dim, 6);
        assert_eq!(tensor(&BasedSpace::new(0, "U"), &BasedSpace::new(5, "V")).dim, 0);
        assert_eq!(tensor_index(1, 2, 4), 6);
        let a = Mat::unit_column(Q, 3, 1);
        let b = Mat::unit_column(Q, 4, 2);
        assert_eq!(a.kron(&b), Mat::unit_column(Q, 12, 6));
    }

    #[test]
    fn quotient_examples() {
        let q = quotient_by(4, &Subspace::zero(Q, 4)).unwrap();
        assert_eq!(q.dim, 4);
        assert!(q.projection.is_identity());
        let q = quotient_by(4, &Subspace::whole(Q, 4)).unwrap();
        assert_eq!(q.dim, 0);
        let rel = Subspace::from_rows(&Mat::from_ints(Q, &[&[1, -1]]));
        let q = quotient_by(2, &rel).unwrap();
        assert_eq!(q.dim, 1);
        assert_eq!(q.projection.col(0), q.projection.col(1));
    }

    #[test]
    fn intersect_iso_inverse() {
        let w = Subspace::whole(Q, 3);
        assert_eq!(intersect(&w, &w).unwrap(), w);
        assert!(is_iso(&Mat::identity(Q, 2)));
        assert!(!is_iso(&Mat::zeros(Q, 1, 1)));
        let inv = inverse(&Mat::from_ints(Q, &[&[2]])).unwrap();
        assert_eq!(inv.get(0, 0), &Q.frac(1, 2));
        assert!(inverse(&Mat::zeros(Q, 2, 2)).is_err());
    }

    #[test]
    fn span_builder_matches_rref() {
        let m = Mat::from_ints(Q, &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1], &[1, 0, 1]]);
        let mut b = SpanBuilder::new(Q, 3);
        b.push_mat_rows(&m);
        assert_eq!(b.finish(), Subspace::from_rows(&m));
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        assert_eq!(&f.int(3) * &f.int(5), f.int(1));
        assert_eq!(f.int(3).inv().unwrap(), f.int(5));
        assert_eq!(-f.int(2), f.int(5));
        assert!(Field::prime(9).is_err());
        let m = Mat::from_ints(f, &[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn json_roundtrip() {
        let m = Mat::from_fn(Q, 2, 2, |i, j| Q.frac(i as i64 + 1, j as i64 + 2));
        let v = m.to_json();
        assert_eq!(v["entries"][0], json!("1/2"));
        assert_eq!(Mat::from_json(&v, Q).unwrap(), m);
    }
}
