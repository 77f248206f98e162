//! JSON encodings of matrices, subspaces, algebras and the derived objects.
//!
//! Scalars are strings `"num/den"` (canonical residue over `F_p`); parsing
//! also accepts bare integers. Every encoder is deterministic, so identical
//! values produce byte-identical output.

use serde::{Deserialize, Serialize, Serializer};

use crate::algebra::{Algebra, Kind, Product};
use crate::cohomology::{Bimodule, Cocycle, Representation};
use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{Matrix, Subspace};
use crate::post::{PostAssocStructure, PostLieStructure};
use crate::rota_baxter::RbOperator;

pub(crate) fn ser_scalars<S: Serializer>(v: &[Scalar], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(Scalar::to_fraction_string))
}

pub(crate) fn ser_opt_scalars<S: Serializer>(v: &Option<Vec<Scalar>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => ser_scalars(v, s),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub field: String,
    pub entries: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub dim: usize,
    pub field: String,
    pub kind: String,
    #[serde(default)]
    pub sc: Vec<(usize, usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// Sparse product tensor entries `[i, j, k, "v"]`.
pub type TensorJson = Vec<(usize, usize, usize, String)>;

pub fn matrix_to_json(m: &Matrix) -> MatrixJson {
    MatrixJson {
        rows: m.rows(),
        cols: m.cols(),
        field: m.field().to_string(),
        entries: m.entries().iter().map(Scalar::to_fraction_string).collect(),
    }
}

pub fn matrix_from_json(j: &MatrixJson) -> Result<Matrix> {
    let field: FieldSpec = j.field.parse()?;
    let entries = j.entries.iter().map(|s| field.parse_scalar(s)).collect::<Result<Vec<_>>>()?;
    Matrix::new(field, j.rows, j.cols, entries)
}

/// A subspace is encoded as its canonical basis matrix.
pub fn subspace_to_json(s: &Subspace) -> MatrixJson {
    matrix_to_json(s.basis())
}

/// Decodes a subspace from any spanning matrix (rows span the subspace).
pub fn subspace_from_json(j: &MatrixJson) -> Result<Subspace> {
    Ok(Subspace::row_space(&matrix_from_json(j)?))
}

pub fn kind_name(kind: Kind) -> &'static str {
    match kind {
        Kind::Associative => "assoc",
        Kind::Lie => "lie",
        Kind::General => "general",
    }
}

pub fn parse_kind(s: &str) -> Result<Kind> {
    match s {
        "assoc" => Ok(Kind::Associative),
        "lie" => Ok(Kind::Lie),
        "general" => Ok(Kind::General),
        other => Err(Error::Parse(format!("unknown algebra kind {other:?}"))),
    }
}

pub fn tensor_to_json(p: &Product) -> TensorJson {
    p.entries().map(|(i, j, k, c)| (i, j, k, c.to_fraction_string())).collect()
}

pub fn tensor_from_json(field: FieldSpec, dim: usize, t: &TensorJson) -> Result<Product> {
    let entries = t
        .iter()
        .map(|(i, j, k, s)| Ok((*i, *j, *k, field.parse_scalar(s)?)))
        .collect::<Result<Vec<_>>>()?;
    Product::from_entries(field, dim, entries)
}

pub fn algebra_to_json(a: &Algebra) -> AlgebraJson {
    AlgebraJson {
        dim: a.dim(),
        field: a.field().to_string(),
        kind: kind_name(a.kind()).to_string(),
        sc: tensor_to_json(a.product()),
        labels: a.labels().map(<[String]>::to_vec),
    }
}

/// Decodes and re-verifies the declared kind.
pub fn algebra_from_json(j: &AlgebraJson) -> Result<Algebra> {
    let field: FieldSpec = j.field.parse()?;
    let product = tensor_from_json(field, j.dim, &j.sc)?;
    let alg = Algebra::new(product, parse_kind(&j.kind)?)?;
    match &j.labels {
        Some(l) => alg.with_labels(l.clone()),
        None => Ok(alg),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RbOperatorJson {
    pub weight: String,
    pub matrix: MatrixJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PostLieJson {
    pub g: AlgebraJson,
    pub n: AlgebraJson,
    #[serde(default)]
    pub prod: TensorJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PostAssocJson {
    #[serde(rename = "A")]
    pub a: AlgebraJson,
    #[serde(rename = "B")]
    pub b: AlgebraJson,
    #[serde(default)]
    pub succ: TensorJson,
    #[serde(default)]
    pub prec: TensorJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationJson {
    pub alg: AlgebraJson,
    pub mdim: usize,
    pub action: Vec<MatrixJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BimoduleJson {
    pub alg: AlgebraJson,
    pub mdim: usize,
    pub left: Vec<MatrixJson>,
    pub right: Vec<MatrixJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub ambient: AlgebraJson,
    pub s1: MatrixJson,
    pub s2: MatrixJson,
}

pub fn rb_to_json(r: &RbOperator) -> RbOperatorJson {
    RbOperatorJson {
        weight: r.weight().to_fraction_string(),
        matrix: matrix_to_json(r.matrix()),
    }
}

pub fn rb_from_json(j: &RbOperatorJson) -> Result<RbOperator> {
    let matrix = matrix_from_json(&j.matrix)?;
    let weight = matrix.field().parse_scalar(&j.weight)?;
    RbOperator::new(matrix, weight)
}

pub fn post_lie_to_json(p: &PostLieStructure) -> PostLieJson {
    PostLieJson {
        g: algebra_to_json(&p.g),
        n: algebra_to_json(&p.n),
        prod: tensor_to_json(&p.prod),
    }
}

pub fn post_lie_from_json(j: &PostLieJson) -> Result<PostLieStructure> {
    let g = algebra_from_json(&j.g)?;
    let n = algebra_from_json(&j.n)?;
    let prod = tensor_from_json(g.field(), g.dim(), &j.prod)?;
    PostLieStructure::new(g, n, prod)
}

pub fn post_assoc_to_json(p: &PostAssocStructure) -> PostAssocJson {
    PostAssocJson {
        a: algebra_to_json(&p.a),
        b: algebra_to_json(&p.b),
        succ: tensor_to_json(&p.succ),
        prec: tensor_to_json(&p.prec),
    }
}

pub fn post_assoc_from_json(j: &PostAssocJson) -> Result<PostAssocStructure> {
    let a = algebra_from_json(&j.a)?;
    let b = algebra_from_json(&j.b)?;
    let succ = tensor_from_json(a.field(), a.dim(), &j.succ)?;
    let prec = tensor_from_json(a.field(), a.dim(), &j.prec)?;
    PostAssocStructure::new(a, b, succ, prec)
}

fn matrices_from_json(ms: &[MatrixJson]) -> Result<Vec<Matrix>> {
    ms.iter().map(matrix_from_json).collect()
}

pub fn representation_to_json(r: &Representation) -> RepresentationJson {
    RepresentationJson {
        alg: algebra_to_json(&r.alg),
        mdim: r.mdim,
        action: r.action.iter().map(matrix_to_json).collect(),
    }
}

pub fn representation_from_json(j: &RepresentationJson) -> Result<Representation> {
    Representation::new(algebra_from_json(&j.alg)?, j.mdim, matrices_from_json(&j.action)?)
}

pub fn bimodule_to_json(b: &Bimodule) -> BimoduleJson {
    BimoduleJson {
        alg: algebra_to_json(&b.alg),
        mdim: b.mdim,
        left: b.left.iter().map(matrix_to_json).collect(),
        right: b.right.iter().map(matrix_to_json).collect(),
    }
}

pub fn bimodule_from_json(j: &BimoduleJson) -> Result<Bimodule> {
    Bimodule::new(algebra_from_json(&j.alg)?, j.mdim, matrices_from_json(&j.left)?, matrices_from_json(&j.right)?)
}

/// A cocycle is encoded as its `mdim x dim` matrix.
pub fn cocycle_from_json(j: &MatrixJson) -> Result<Cocycle> {
    Ok(Cocycle::new(matrix_from_json(j)?))
}

pub fn decomposition_to_json(d: &Decomposition) -> DecompositionJson {
    DecompositionJson {
        ambient: algebra_to_json(&d.ambient),
        s1: subspace_to_json(&d.s1),
        s2: subspace_to_json(&d.s2),
    }
}

pub fn decomposition_from_json(j: &DecompositionJson) -> Result<Decomposition> {
    Decomposition::new(algebra_from_json(&j.ambient)?, subspace_from_json(&j.s1)?, subspace_from_json(&j.s2)?)
}

pub fn to_pretty<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}
