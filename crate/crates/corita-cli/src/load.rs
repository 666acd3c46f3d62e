//! Reading structures from JSON files.

use std::collections::BTreeMap;
use std::path::Path;

use corita::algebra::Algebra;
use corita::bimodule::Bimodule;
use corita::coring::{Comodule, Coring};
use corita::exactlin::{Field, Mat, Subspace};
use corita::galois::GaloisDatum;
use corita::morita::MoritaContext;
use corita::{Error, Result};
use serde_json::Value;

pub fn read(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

/// `{"algebras": {name: algebra}}` or `{"algebra": algebra}` (named `"A"`).
pub fn algebras(v: &Value) -> Result<BTreeMap<String, Algebra>> {
    let mut out = BTreeMap::new();
    if let Some(map) = v["algebras"].as_object() {
        for (name, a) in map {
            out.insert(name.clone(), Algebra::from_json(a)?);
        }
    } else if !v["algebra"].is_null() {
        out.insert("A".to_string(), Algebra::from_json(&v["algebra"])?);
    } else {
        return Err(Error::Input("expected \"algebras\" or \"algebra\"".into()));
    }
    Ok(out)
}

/// A bimodule whose action fields name entries of `algebras` or are inline.
pub fn module(v: &Value) -> Result<Bimodule> {
    let algs = algebras(v)?;
    let field = algs.values().next().map(Algebra::field).ok_or_else(|| Error::Input("no algebra given".into()))?;
    let resolve = |r: &Value| -> Result<Algebra> {
        match r.as_str() {
            Some(name) => algs
                .get(name)
                .or_else(|| algs.values().find(|a| a.label == name))
                .cloned()
                .ok_or_else(|| Error::Input(format!("unknown algebra reference \"{name}\""))),
            None => Algebra::from_json(r),
        }
    };
    Bimodule::from_json(&v["module"], field, &resolve)
}

/// A context plus its named ideals of `A'`, each given by spanning rows.
pub fn context(v: &Value) -> Result<(MoritaContext, BTreeMap<String, Subspace>)> {
    let ctx = MoritaContext::from_json(v)?;
    let mut ideals = BTreeMap::new();
    if let Some(map) = v["ideals"].as_object() {
        for (name, rows) in map {
            let m = spanning_rows(rows, ctx.field())?;
            if m.cols() != ctx.ap.dim() {
                return Err(Error::Input(format!("ideal \"{name}\" has {} columns, A' has dim {}", m.cols(), ctx.ap.dim())));
            }
            ideals.insert(name.clone(), Subspace::from_rows(&m));
        }
    }
    Ok((ctx, ideals))
}

/// A list of rows or a matrix object.
fn spanning_rows(v: &Value, f: Field) -> Result<Mat> {
    let Some(rows) = v.as_array() else { return Mat::from_json(v, f) };
    let cols = rows.first().and_then(Value::as_array).map_or(0, Vec::len);
    let mut entries = Vec::new();
    for row in rows {
        match row.as_array() {
            Some(r) if r.len() == cols => entries.extend(r.iter().map(|e| f.parse_elem(e)).collect::<Result<Vec<_>>>()?),
            _ => return Err(Error::Input(format!("ideal rows must all have {cols} entries"))),
        }
    }
    Mat::from_vec(f, rows.len(), cols, entries)
}

/// `{"coring": ..., "sigma": ..., "seeds": [...]}`; the coring may also be the whole file.
pub struct ComoduleInput {
    pub coring: Coring,
    pub sigma: Option<Comodule>,
    pub seeds: Vec<Comodule>,
}

pub fn comodule_input(v: &Value) -> Result<ComoduleInput> {
    let coring = if v["coring"].is_null() { Coring::from_json(v)? } else { Coring::from_json(&v["coring"])? };
    let sigma = if v["sigma"].is_null() { None } else { Some(Comodule::from_json(&v["sigma"], &coring)?) };
    let seeds = match v["seeds"].as_array() {
        Some(list) => list.iter().map(|s| Comodule::from_json(s, &coring)).collect::<Result<Vec<_>>>()?,
        None => Vec::new(),
    };
    Ok(ComoduleInput { coring, sigma, seeds })
}

pub fn required_sigma(input: &ComoduleInput) -> Result<Comodule> {
    input.sigma.clone().ok_or_else(|| Error::Input("expected \"sigma\"".into()))
}

/// `{"R": algebra, "iota": [maps], "dual_basis": matrix}` over a comodule.
pub fn datum(v: &Value, sigma: &Comodule) -> Result<GaloisDatum> {
    let r = Algebra::from_json(&v["R"])?;
    let f = r.field();
    let iota = v["iota"]
        .as_array()
        .ok_or_else(|| Error::Input("datum needs \"iota\"".into()))?
        .iter()
        .map(|m| Mat::from_json(m, f))
        .collect::<Result<Vec<_>>>()?;
    let dual_basis = Mat::from_json(&v["dual_basis"], f)?;
    GaloisDatum::new(sigma, r, iota, dual_basis)
}
