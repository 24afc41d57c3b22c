//! JSON input formats.
//!
//! Algebras come either as structure constants
//! `{"field", "basis", "unit", "table"}` or as bound quivers
//! `{"vertices", "arrows", "relations", "nilBound"}`. Split algebras wrap a
//! base with an ideal: `{"split": {"base", "ideal", "product"}}`, triangular
//! algebras are `{"triangular": {"a", "b", "m"}}`. Scalars are integers or
//! exact strings `"p/q"`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::Algebra;
use crate::bimodule::Bimodule;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{Matrix, SparseVec};
use crate::quiver::{quiver_algebra, Arrow, Quiver, Relation};
use crate::split::SplitAlgebra;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind")]
pub enum FieldSpec {
    Q,
    Fp { p: u64 },
}

impl FieldSpec {
    pub fn field(&self) -> Result<Field> {
        match self {
            FieldSpec::Q => Ok(Field::Rationals),
            FieldSpec::Fp { p } => Field::prime(*p),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Literal {
    Int(i64),
    Text(String),
}

impl Literal {
    fn scalar(&self, field: Field) -> Result<Scalar> {
        match self {
            Literal::Int(n) => Ok(field.from_int(*n)),
            Literal::Text(s) => field.parse(s),
        }
    }
}

fn vector(field: Field, lits: &[Literal]) -> Result<Vec<Scalar>> {
    lits.iter().map(|l| l.scalar(field)).collect()
}

fn sparse(field: Field, lits: &[Literal], dim: usize) -> Result<SparseVec> {
    if lits.len() != dim {
        return Err(Error::Input(format!("expected a vector of length {dim}, got {}", lits.len())));
    }
    Ok(SparseVec::from_dense(&vector(field, lits)?))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub field: Option<FieldSpec>,
    pub basis: Vec<String>,
    pub unit: Vec<Literal>,
    pub table: Vec<Vec<Vec<Literal>>>,
    #[serde(default)]
    pub idempotents: Option<Vec<Vec<Literal>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RelationFile {
    pub coeffs: Vec<Literal>,
    pub paths: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct QuiverFile {
    pub field: Option<FieldSpec>,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    #[serde(default)]
    pub relations: Vec<RelationFile>,
    pub nil_bound: usize,
}

/// Either presentation of an algebra.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraSource {
    Table(AlgebraFile),
    Quiver(QuiverFile),
}

/// Picks the field: an explicit override wins, then the file, then ℚ.
fn choose(file: &Option<FieldSpec>, over: Option<Field>) -> Result<Field> {
    match (over, file) {
        (Some(f), _) => Ok(f),
        (None, Some(spec)) => spec.field(),
        (None, None) => Ok(Field::Rationals),
    }
}

impl AlgebraSource {
    pub fn build(&self, over: Option<Field>) -> Result<Algebra> {
        match self {
            AlgebraSource::Table(t) => {
                let f = choose(&t.field, over)?;
                let n = t.basis.len();
                let table = t
                    .table
                    .iter()
                    .map(|row| row.iter().map(|v| vector(f, v)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                let alg = Algebra::new(f, t.basis.clone(), vector(f, &t.unit)?, table)?;
                match &t.idempotents {
                    Some(es) => {
                        let es = es.iter().map(|e| sparse(f, e, n)).collect::<Result<Vec<_>>>()?;
                        alg.with_idempotents(es)
                    }
                    None => Ok(alg),
                }
            }
            AlgebraSource::Quiver(q) => {
                let f = choose(&q.field, over)?;
                let quiver = Quiver::new(q.vertices.clone(), q.arrows.clone())?;
                let relations = q
                    .relations
                    .iter()
                    .map(|r| {
                        Ok(Relation {
                            coeffs: vector(f, &r.coeffs)?,
                            paths: r.paths.clone(),
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                quiver_algebra(f, &quiver, &relations, q.nil_bound)
            }
        }
    }
}

/// An explicit bimodule: `left[a][m]` and `right[m][a]` are vectors in `M`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BimoduleFile {
    pub basis: Vec<String>,
    pub left: Vec<Vec<Vec<Literal>>>,
    pub right: Vec<Vec<Vec<Literal>>>,
}

impl BimoduleFile {
    pub fn build(&self, left: &Arc<Algebra>, right: &Arc<Algebra>) -> Result<Bimodule> {
        let f = left.field();
        let d = self.basis.len();
        let action = |t: &Vec<Vec<Vec<Literal>>>| -> Result<Vec<Vec<SparseVec>>> {
            t.iter()
                .map(|row| row.iter().map(|v| sparse(f, v, d)).collect())
                .collect()
        };
        Bimodule::new(left.clone(), right.clone(), self.basis.clone(), action(&self.left)?, action(&self.right)?)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealKeyword {
    Dual,
    Regular,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IdealSpec {
    Keyword(IdealKeyword),
    /// `^fA` for an automorphism given by its matrix rows.
    Twisted { twisted: Vec<Vec<Literal>> },
    Explicit(BimoduleFile),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ProductSpec {
    Zero(String),
    /// `product[m][m']` as a vector in `M`.
    Table(Vec<Vec<Vec<Literal>>>),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SplitFile {
    pub base: AlgebraSource,
    pub ideal: IdealSpec,
    #[serde(default)]
    pub product: Option<ProductSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TriangularModule {
    /// The simple right module of `A` at a vertex (then `B = k`).
    Simple { simple_right: usize },
    Explicit(BimoduleFile),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TriangularFile {
    pub a: AlgebraSource,
    #[serde(default)]
    pub b: Option<AlgebraSource>,
    pub m: TriangularModule,
}

fn rows_to_matrix(f: Field, rows: &[Vec<Literal>]) -> Result<Matrix> {
    let n = rows.len();
    let dense = rows.iter().map(|r| vector(f, r)).collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(f, dense, n)
}

impl SplitFile {
    pub fn build(&self, over: Option<Field>) -> Result<SplitAlgebra> {
        let base = Arc::new(self.base.build(over)?);
        let f = base.field();
        let ideal = match &self.ideal {
            IdealSpec::Keyword(IdealKeyword::Dual) => Bimodule::regular(&base).dual(),
            IdealSpec::Keyword(IdealKeyword::Regular) => Bimodule::regular(&base),
            IdealSpec::Twisted { twisted } => Bimodule::twisted(&base, &rows_to_matrix(f, twisted)?)?,
            IdealSpec::Explicit(b) => b.build(&base, &base)?,
        };
        let product = match &self.product {
            None => None,
            Some(ProductSpec::Zero(s)) if s == "zero" => None,
            Some(ProductSpec::Zero(s)) => return Err(Error::Input(format!("unknown product {s:?}"))),
            Some(ProductSpec::Table(t)) => Some(
                t.iter()
                    .map(|row| row.iter().map(|v| sparse(f, v, ideal.dim())).collect())
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        SplitAlgebra::new(base, ideal, product)
    }
}

impl TriangularFile {
    pub fn build(&self, over: Option<Field>) -> Result<SplitAlgebra> {
        let (a, b, m) = self.parts(over)?;
        SplitAlgebra::triangular(&a, &b, &m)
    }

    /// `(A, B, M)` before assembling `T`.
    pub fn parts(&self, over: Option<Field>) -> Result<(Arc<Algebra>, Arc<Algebra>, Bimodule)> {
        let a = Arc::new(self.a.build(over)?);
        let b = match &self.b {
            Some(b) => Arc::new(b.build(over.or(Some(a.field())))?),
            None => Arc::new(Algebra::ground(a.field())),
        };
        let m = match &self.m {
            TriangularModule::Simple { simple_right } => {
                if b.dim() != 1 {
                    return Err(Error::Input("simple_right needs B = k".into()));
                }
                let s = SplitAlgebra::simple_right(&a, *simple_right)?;
                // re-home the left side on the given copy of k
                Bimodule::new(b.clone(), a.clone(), s.labels().to_vec(), s.left_action().to_vec(), s.right_action().to_vec())?
            }
            TriangularModule::Explicit(file) => file.build(&b, &a)?,
        };
        Ok((a, b, m))
    }
}

/// Any accepted input file.
#[derive(Clone, Debug)]
pub enum Input {
    Algebra(Arc<Algebra>),
    Split(SplitAlgebra),
    Triangular(Arc<Algebra>, Arc<Algebra>, Bimodule),
}

fn parse_value(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))
}

fn from_value<T: for<'de> Deserialize<'de>>(v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Input(e.to_string()))
}

pub fn parse_algebra(text: &str, over: Option<Field>) -> Result<Algebra> {
    from_value::<AlgebraSource>(parse_value(text)?)?.build(over)
}

pub fn parse_split(text: &str, over: Option<Field>) -> Result<SplitAlgebra> {
    match parse_input(text, over)? {
        Input::Split(s) => Ok(s),
        Input::Triangular(a, b, m) => SplitAlgebra::triangular(&a, &b, &m),
        Input::Algebra(_) => Err(Error::Input("expected a split or triangular algebra".into())),
    }
}

/// Dispatches on the top-level key.
pub fn parse_input(text: &str, over: Option<Field>) -> Result<Input> {
    let mut v = parse_value(text)?;
    let obj = v
        .as_object_mut()
        .ok_or_else(|| Error::Input("expected a JSON object".into()))?;
    if let Some(s) = obj.remove("split") {
        return Ok(Input::Split(from_value::<SplitFile>(s)?.build(over)?));
    }
    if let Some(t) = obj.remove("triangular") {
        let (a, b, m) = from_value::<TriangularFile>(t)?.parts(over)?;
        return Ok(Input::Triangular(a, b, m));
    }
    Ok(Input::Algebra(Arc::new(from_value::<AlgebraSource>(v)?.build(over)?)))
}

/// Structure constants as an [`AlgebraFile`].
pub fn algebra_file(a: &Algebra) -> AlgebraFile {
    let lit = |s: &Scalar| match s.as_i64() {
        Some(n) => Literal::Int(n),
        None => Literal::Text(s.to_string()),
    };
    let dense = |v: &SparseVec| v.to_dense(a.dim()).iter().map(lit).collect::<Vec<_>>();
    AlgebraFile {
        field: Some(match a.field() {
            Field::Rationals => FieldSpec::Q,
            Field::Prime(p) => FieldSpec::Fp { p: p as u64 },
        }),
        basis: a.labels().to_vec(),
        unit: dense(a.unit()),
        table: a.table().iter().map(|row| row.iter().map(dense).collect()).collect(),
        idempotents: a.idempotents().map(|es| es.iter().map(dense).collect()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::linear_quiver;

    #[test]
    fn quiver_file() {
        let text = r#"{"vertices": ["1", "2"], "arrows": [{"name": "a", "src": "1", "tgt": "2"}], "nilBound": 2}"#;
        let a = parse_algebra(text, None).unwrap();
        assert_eq!(a.dim(), 3);
        let f2 = parse_algebra(text, Some(Field::prime(2).unwrap())).unwrap();
        assert_eq!(f2.field(), Field::Prime(2));
    }

    #[test]
    fn table_round_trip() {
        let a = linear_quiver(Field::Rationals, 3);
        let text = serde_json::to_string(&algebra_file(&a)).unwrap();
        let b = parse_algebra(&text, None).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rational_literals() {
        let text = r#"{"field": {"kind": "Q"}, "basis": ["1"], "unit": ["2/2"], "table": [[["1"]]]}"#;
        assert_eq!(parse_algebra(text, None).unwrap().dim(), 1);
        let bad = r#"{"basis": ["1"], "unit": ["1/0"], "table": [[["1"]]]}"#;
        assert!(parse_algebra(bad, None).is_err());
    }

    #[test]
    fn split_and_triangular() {
        let base = r#"{"vertices": ["1"], "arrows": [], "nilBound": 1}"#;
        let t = parse_split(&format!(r#"{{"split": {{"base": {base}, "ideal": "dual"}}}}"#), None).unwrap();
        assert_eq!(t.total().dim(), 2);
        assert!(t.square_zero());
        let a2 = r#"{"vertices": ["1", "2"], "arrows": [{"name": "a", "src": "1", "tgt": "2"}], "nilBound": 2}"#;
        let tri = parse_split(&format!(r#"{{"triangular": {{"a": {a2}, "m": {{"simple_right": 1}}}}}}"#), None).unwrap();
        assert_eq!(tri.total().dim(), 5);
        assert!(parse_input(r#"{"split": 3}"#, None).is_err());
    }
}
