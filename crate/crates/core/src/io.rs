//! JSON forms for algebras, Hopf algebras, module algebras and twists.
//!
//! Scalars are strings such as `"-1/2"`; plain JSON integers are accepted on
//! input. Errors name the offending location, e.g. `mult[2].terms[0].k`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::Algebra;
use crate::catalog::{self, Entry};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::{Coalgebra, HopfAlgebra, TensorElement};
use crate::linalg::Matrix;
use crate::module_algebra::HModuleAlgebra;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Term {
    pub k: usize,
    pub c: Value,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultEntry {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<Term>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<Field>,
    pub dim: usize,
    pub unit: Vec<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub mult: Vec<MultEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComultTerm {
    pub j: usize,
    pub k: usize,
    pub c: Value,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComultEntry {
    pub i: usize,
    pub terms: Vec<ComultTerm>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HopfJson {
    #[serde(flatten)]
    pub algebra: AlgebraJson,
    pub comult: Vec<ComultEntry>,
    pub counit: Vec<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<Vec<Value>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ActionEntry {
    pub h: usize,
    pub a: usize,
    pub out: Vec<Term>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModuleAlgebraJson {
    pub hopf: Value,
    pub algebra: Value,
    pub action: Vec<ActionEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairTerm {
    pub i: usize,
    pub j: usize,
    pub c: Value,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct TwistJson {
    #[serde(rename = "J", default, skip_serializing_if = "Option::is_none")]
    pub j: Option<Vec<PairTerm>>,
    #[serde(rename = "R", default, skip_serializing_if = "Option::is_none")]
    pub r: Option<Vec<PairTerm>>,
}

fn scalar(field: Field, v: &Value, loc: &str) -> Result<Scalar> {
    match v {
        Value::String(s) => field.parse(s).map_err(|e| Error::input(format!("{loc}: {e}"))),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(field.from_i64(i)),
            None => Err(Error::input(format!(
                "{loc}: non-integer number; write fractions as strings"
            ))),
        },
        _ => Err(Error::input(format!("{loc}: expected a scalar string"))),
    }
}

fn index(i: usize, n: usize, loc: &str) -> Result<usize> {
    if i >= n {
        return Err(Error::input(format!("{loc}: index {i} out of range for dimension {n}")));
    }
    Ok(i)
}

fn scalars(field: Field, vs: &[Value], n: usize, loc: &str) -> Result<Vec<Scalar>> {
    if vs.len() != n {
        return Err(Error::input(format!("{loc}: expected {n} entries, got {}", vs.len())));
    }
    vs.iter()
        .enumerate()
        .map(|(i, v)| scalar(field, v, &format!("{loc}[{i}]")))
        .collect()
}

fn text(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

fn parse<T: for<'de> Deserialize<'de>>(v: &Value, what: &str) -> Result<T> {
    serde_json::from_value(v.clone()).map_err(|e| Error::input(format!("{what}: {e}")))
}

/// Parses JSON text, reporting line and column on syntax errors.
pub fn parse_text(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::input(format!("malformed JSON: {e}")))
}

pub fn algebra_to_json(a: &Algebra) -> AlgebraJson {
    let n = a.dim();
    let mut mult = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let terms: Vec<Term> = a
                .basis_product(i, j)
                .iter()
                .map(|(k, c)| Term { k: *k, c: text(c) })
                .collect();
            if !terms.is_empty() {
                mult.push(MultEntry { i, j, terms });
            }
        }
    }
    AlgebraJson {
        field: Some(a.field()),
        dim: n,
        unit: a.unit().iter().map(text).collect(),
        labels: a.labels().map(|l| l.to_vec()),
        mult,
    }
}

/// `default_field` applies when the JSON omits `"field"`.
pub fn algebra_from_json(j: &AlgebraJson, default_field: Field) -> Result<Algebra> {
    let f = j.field.unwrap_or(default_field);
    let n = j.dim;
    let mut mult = vec![f.zero(); n * n * n];
    let mut seen = vec![false; n * n];
    for (e, entry) in j.mult.iter().enumerate() {
        let loc = format!("mult[{e}]");
        let i = index(entry.i, n, &format!("{loc}.i"))?;
        let jj = index(entry.j, n, &format!("{loc}.j"))?;
        if std::mem::replace(&mut seen[i * n + jj], true) {
            return Err(Error::input(format!("{loc}: duplicate entry for ({i},{jj})")));
        }
        for (t, term) in entry.terms.iter().enumerate() {
            let tl = format!("{loc}.terms[{t}]");
            let k = index(term.k, n, &format!("{tl}.k"))?;
            mult[(i * n + jj) * n + k] += &scalar(f, &term.c, &format!("{tl}.c"))?;
        }
    }
    let unit = scalars(f, &j.unit, n, "unit")?;
    Algebra::new(f, n, mult, unit, j.labels.clone())
}

pub fn hopf_to_json(h: &HopfAlgebra) -> HopfJson {
    let n = h.dim();
    let comult = (0..n)
        .map(|i| ComultEntry {
            i,
            terms: h
                .coalgebra()
                .comult(i)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(jk, c)| ComultTerm {
                    j: jk / n,
                    k: jk % n,
                    c: text(c),
                })
                .collect(),
        })
        .filter(|e| !e.terms.is_empty())
        .collect();
    let antipode = (0..n).map(|r| h.antipode().row(r).iter().map(text).collect()).collect();
    HopfJson {
        algebra: algebra_to_json(h.algebra()),
        comult,
        counit: h.counit().iter().map(text).collect(),
        antipode: Some(antipode),
    }
}

pub fn hopf_from_json(j: &HopfJson, default_field: Field) -> Result<HopfAlgebra> {
    let a = algebra_from_json(&j.algebra, default_field)?;
    let f = a.field();
    let n = a.dim();
    let mut comult = vec![vec![f.zero(); n * n]; n];
    for (e, entry) in j.comult.iter().enumerate() {
        let loc = format!("comult[{e}]");
        let i = index(entry.i, n, &format!("{loc}.i"))?;
        for (t, term) in entry.terms.iter().enumerate() {
            let tl = format!("{loc}.terms[{t}]");
            let jj = index(term.j, n, &format!("{tl}.j"))?;
            let k = index(term.k, n, &format!("{tl}.k"))?;
            comult[i][jj * n + k] += &scalar(f, &term.c, &format!("{tl}.c"))?;
        }
    }
    let counit = scalars(f, &j.counit, n, "counit")?;
    let coalgebra = Coalgebra::new(n, comult, counit)?;
    match &j.antipode {
        Some(rows) => {
            if rows.len() != n {
                return Err(Error::input(format!("antipode: expected {n} rows")));
            }
            let data = rows
                .iter()
                .enumerate()
                .map(|(r, row)| scalars(f, row, n, &format!("antipode[{r}]")))
                .collect::<Result<Vec<_>>>()?;
            let s = Matrix::from_rows(f, n, data)?;
            HopfAlgebra::from_parts(a, coalgebra, s)
        }
        None => HopfAlgebra::new(a, coalgebra, None),
    }
}

/// A Hopf algebra from a catalog name (string) or a Hopf JSON object.
pub fn hopf_from_value(v: &Value, field: Field) -> Result<HopfAlgebra> {
    match v {
        Value::String(name) => match catalog::lookup(name, field)? {
            Entry::Hopf(h) => Ok(h),
            _ => Err(Error::input(format!("'{name}' is not a Hopf algebra"))),
        },
        _ => hopf_from_json(&parse(v, "hopf")?, field),
    }
}

/// An algebra from a catalog name or an Algebra JSON object.
pub fn algebra_from_value(v: &Value, field: Field) -> Result<Algebra> {
    match v {
        Value::String(name) => Ok(catalog::lookup(name, field)?.algebra().clone()),
        _ => algebra_from_json(&parse(v, "algebra")?, field),
    }
}

pub fn module_algebra_to_json(ma: &HModuleAlgebra) -> Value {
    let n = ma.algebra().dim();
    let mut action = Vec::new();
    for (h, rho) in ma.action().iter().enumerate() {
        for a in 0..n {
            let out: Vec<Term> = rho
                .column(a)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| Term { k, c: text(c) })
                .collect();
            if !out.is_empty() {
                action.push(ActionEntry { h, a, out });
            }
        }
    }
    serde_json::to_value(ModuleAlgebraJson {
        hopf: serde_json::to_value(hopf_to_json(ma.hopf())).expect("serializable"),
        algebra: serde_json::to_value(algebra_to_json(ma.algebra())).expect("serializable"),
        action,
    })
    .expect("serializable")
}

pub fn module_algebra_from_json(j: &ModuleAlgebraJson, field: Field) -> Result<HModuleAlgebra> {
    let h = hopf_from_value(&j.hopf, field)?;
    let a = algebra_from_value(&j.algebra, h.field())?;
    let f = a.field();
    let (m, n) = (h.dim(), a.dim());
    let mut action = vec![Matrix::zeros(f, n, n); m];
    for (e, entry) in j.action.iter().enumerate() {
        let loc = format!("action[{e}]");
        let hj = index(entry.h, m, &format!("{loc}.h"))?;
        let ai = index(entry.a, n, &format!("{loc}.a"))?;
        for (t, term) in entry.out.iter().enumerate() {
            let tl = format!("{loc}.out[{t}]");
            let k = index(term.k, n, &format!("{tl}.k"))?;
            let v = action[hj].get(k, ai) + &scalar(f, &term.c, &format!("{tl}.c"))?;
            action[hj].set(k, ai, v);
        }
    }
    HModuleAlgebra::new(h, a, action)
}

/// A module algebra from a catalog name or JSON object.
pub fn module_algebra_from_value(v: &Value, field: Field) -> Result<HModuleAlgebra> {
    match v {
        Value::String(name) => match catalog::lookup(name, field)? {
            Entry::ModuleAlgebra(m) => Ok(m),
            _ => Err(Error::input(format!("'{name}' is not a module algebra"))),
        },
        _ => module_algebra_from_json(&parse(v, "module algebra")?, field),
    }
}

pub fn pair_terms(t: &TensorElement, n: usize) -> Vec<PairTerm> {
    t.support()
        .map(|(ij, c)| PairTerm {
            i: ij / n,
            j: ij % n,
            c: text(c),
        })
        .collect()
}

pub fn tensor_from_terms(terms: &[PairTerm], h: &HopfAlgebra, key: &str) -> Result<TensorElement> {
    let n = h.dim();
    let f = h.field();
    let mut coeffs = vec![f.zero(); n * n];
    for (e, t) in terms.iter().enumerate() {
        let loc = format!("{key}[{e}]");
        let i = index(t.i, n, &format!("{loc}.i"))?;
        let j = index(t.j, n, &format!("{loc}.j"))?;
        coeffs[i * n + j] += &scalar(f, &t.c, &format!("{loc}.c"))?;
    }
    Ok(TensorElement::new(2, coeffs))
}

/// `J` from a Twist JSON value.
pub fn twist_from_value(v: &Value, h: &HopfAlgebra) -> Result<TensorElement> {
    let j: TwistJson = parse(v, "twist")?;
    let terms = j.j.ok_or_else(|| Error::input("twist: missing key \"J\""))?;
    tensor_from_terms(&terms, h, "J")
}

/// `R` from an R-matrix JSON value.
pub fn r_matrix_from_value(v: &Value, h: &HopfAlgebra) -> Result<TensorElement> {
    let j: TwistJson = parse(v, "R-matrix")?;
    let terms = j.r.ok_or_else(|| Error::input("R-matrix: missing key \"R\""))?;
    tensor_from_terms(&terms, h, "R")
}

pub fn twist_to_json(j: &TensorElement, n: usize) -> Value {
    serde_json::to_value(TwistJson {
        j: Some(pair_terms(j, n)),
        r: None,
    })
    .expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::GroupTable;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn algebra_round_trip() {
        let a = catalog::matrix_algebra(q(), 2);
        let j = serde_json::to_string(&algebra_to_json(&a)).unwrap();
        let back: AlgebraJson = serde_json::from_str(&j).unwrap();
        assert_eq!(algebra_from_json(&back, q()).unwrap(), a);
    }

    #[test]
    fn hopf_round_trip() {
        for h in [
            catalog::sweedler_h4(q()).unwrap(),
            catalog::dual_group_algebra(q(), &GroupTable::s3()).unwrap(),
        ] {
            let j = serde_json::to_value(hopf_to_json(&h)).unwrap();
            assert_eq!(hopf_from_value(&j, q()).unwrap(), h);
        }
    }

    #[test]
    fn module_algebra_round_trip() {
        let ma = catalog::sweedler_dual_numbers(q()).unwrap();
        let v = module_algebra_to_json(&ma);
        assert_eq!(module_algebra_from_value(&v, q()).unwrap(), ma);
    }

    #[test]
    fn errors_name_locations() {
        let v: Value = serde_json::json!({
            "dim": 2, "unit": ["1", "0"],
            "mult": [{"i": 0, "j": 0, "terms": [{"k": 7, "c": "1"}]}]
        });
        let err = algebra_from_value(&v, q()).unwrap_err().to_string();
        assert!(err.contains("mult[0].terms[0].k"), "{err}");
        let v: Value = serde_json::json!({
            "dim": 1, "unit": ["1/0"], "mult": []
        });
        assert!(algebra_from_value(&v, q()).unwrap_err().to_string().contains("unit[0]"));
        assert!(parse_text("{ \"dim\": ").unwrap_err().to_string().contains("line 1"));
    }

    #[test]
    fn twist_json() {
        let h = catalog::group_algebra(q(), &GroupTable::cyclic(2)).unwrap();
        let one = h.tensor_one(2);
        let v = twist_to_json(&one, 2);
        assert_eq!(twist_from_value(&v, &h).unwrap(), one);
        assert!(r_matrix_from_value(&v, &h).is_err());
    }
}
