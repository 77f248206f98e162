//! Decompositions `A = A1 + A2` of an algebra into two subalgebras, the
//! named so(7) and so(8) instances, the `sl_n ⋉ V(n)` counterexample, and
//! nilpotency checks on sums.

use serde::Serialize;

use crate::algebra::{products_vanish, Algebra, Fingerprint, Kind, Nilpotency};
use crate::catalog;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::{Matrix, Subspace};
use crate::report::{Report, Violation};
use crate::rota_baxter::{tower, RbOperator};

/// An ambient algebra with two subalgebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub ambient: Algebra,
    pub s1: Subspace,
    pub s2: Subspace,
}

/// Sum, properness and directness of a decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub is_sum: bool,
    pub is_proper: bool,
    pub is_direct: bool,
    pub intersection: Subspace,
}

/// Predicates evaluated on one restricted component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentClass {
    pub fingerprint: Fingerprint,
    pub semisimple: Option<bool>,
    pub abelian: bool,
    pub nilpotent: Option<Nilpotency>,
}

/// Nilpotency verdicts for both components and the ambient algebra.
///
/// `alarm` is set when both components are nilpotent but the ambient
/// algebra is not, which Kegel's theorem rules out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NilpotentSum {
    pub s1: Nilpotency,
    pub s2: Nilpotency,
    pub ambient: Nilpotency,
    pub alarm: bool,
}

impl Decomposition {
    pub fn new(ambient: Algebra, s1: Subspace, s2: Subspace) -> Result<Self> {
        for s in [&s1, &s2] {
            if s.ambient_dim() != ambient.dim() || s.field() != ambient.field() {
                return Err(Error::DimensionMismatch(format!(
                    "subspace of {}-space over {} in a {}-dimensional algebra over {}",
                    s.ambient_dim(),
                    s.field(),
                    ambient.dim(),
                    ambient.field()
                )));
            }
            if let Some((a, b)) = ambient.closure_witness(s)? {
                return Err(Error::NotSubalgebra(a, b));
            }
        }
        Ok(Decomposition { ambient, s1, s2 })
    }

    pub fn verify(&self) -> Result<DecompositionReport> {
        let intersection = self.s1.intersect(&self.s2)?;
        Ok(DecompositionReport {
            is_sum: self.s1.sum(&self.s2)?.is_full(),
            is_proper: !self.s1.is_full() && !self.s2.is_full(),
            is_direct: intersection.is_zero(),
            intersection,
        })
    }

    pub fn components(&self) -> Result<(Algebra, Algebra)> {
        Ok((self.ambient.restrict(&self.s1)?, self.ambient.restrict(&self.s2)?))
    }

    pub fn classify_components(&self) -> Result<(ComponentClass, ComponentClass)> {
        let (a, b) = self.components()?;
        Ok((classify(&a), classify(&b)))
    }

    /// Whether the components multiply to zero; meaningful for direct decompositions only.
    pub fn mutual_ideals_check(&self) -> Result<bool> {
        if !self.verify()?.is_direct {
            return Err(Error::InvalidStructure("mutual ideal check needs a direct decomposition".into()));
        }
        Ok(products_vanish(&self.ambient, &self.s1, &self.s2))
    }

    pub fn nilpotent_sum_check(&self) -> Result<NilpotentSum> {
        if self.ambient.kind() != Kind::Associative {
            return Err(Error::KindMismatch("nilpotent sums need an associative ambient algebra".into()));
        }
        let (a, b) = self.components()?;
        let s1 = a.is_nilpotent_assoc()?;
        let s2 = b.is_nilpotent_assoc()?;
        let ambient = self.ambient.is_nilpotent_assoc()?;
        Ok(NilpotentSum {
            s1,
            s2,
            ambient,
            alarm: s1.nilpotent && s2.nilpotent && !ambient.nilpotent,
        })
    }
}

fn classify(a: &Algebra) -> ComponentClass {
    let fingerprint = a.fingerprint();
    ComponentClass {
        semisimple: fingerprint.semisimple,
        abelian: a.is_abelian(),
        nilpotent: fingerprint.nilpotent,
        fingerprint,
    }
}

/// Names accepted by [`onishchik_instance`].
pub const INSTANCE_NAMES: [&str; 4] = ["B3=G2+B2", "B3=G2+B2T", "B3=G2+D3", "D4=B3+B3"];

/// The decompositions of `so(7)` as `g2` plus a block stabilizer, and, with
/// the `d4` feature, `so(8) = so(7) + spin(7)`.
pub fn onishchik_instance(name: &str) -> Result<Decomposition> {
    let q = FieldSpec::Rationals;
    let second = match name {
        "B3=G2+B2" => catalog::embed_so_stabilizer(5, 7, q)?,
        "B3=G2+B2T" => catalog::embed_so_stabilizer_with_torus(5, 7, q)?,
        "B3=G2+D3" => catalog::embed_so_stabilizer(6, 7, q)?,
        "D4=B3+B3" => return d4_instance(),
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    let g2 = catalog::make_g2(q)?;
    Decomposition::new(g2.target, g2.image, second.image)
}

#[cfg(feature = "d4")]
fn d4_instance() -> Result<Decomposition> {
    let q = FieldSpec::Rationals;
    let block = catalog::embed_so_stabilizer(7, 8, q)?;
    let spin = catalog::embed_spin7(q)?;
    Decomposition::new(block.target, block.image, spin.image)
}

#[cfg(not(feature = "d4"))]
fn d4_instance() -> Result<Decomposition> {
    Err(Error::FeatureDisabled("D4=B3+B3".into()))
}

/// `ad(x)` on `sl_n ⋉ V(n)` for `x = v_1 + ... + v_n`, and `φ = id + ad(x)`.
pub fn counterexample_maps(n: usize) -> Result<(Algebra, Matrix, Matrix)> {
    let q = FieldSpec::Rationals;
    let ambient = catalog::make_semidirect_sln_vn(n, q)?;
    let dim = ambient.dim();
    let sl_dim = n * n - 1;
    let mut x = vec![q.zero(); dim];
    for c in &mut x[sl_dim..] {
        *c = q.one();
    }
    let ad = ambient.product().left_matrix(&x);
    let phi = ad.add(&Matrix::identity(q, dim))?;
    Ok((ambient, ad, phi))
}

/// `L = sl_n + φ(sl_n)` inside `sl_n ⋉ V(n)`: a sum of two semisimple
/// subalgebras whose ambient algebra is perfect but not semisimple.
pub fn counterexample(n: usize) -> Result<Decomposition> {
    let (ambient, ad, phi) = counterexample_maps(n)?;
    if !ad.mul(&ad)?.is_zero() {
        return Err(Error::Inconsistent("ad(x)^2 is not zero".into()));
    }
    if let Some(v) = ambient.homomorphism_violations(&ambient, &phi, "automorphism").first() {
        return Err(Error::Inconsistent(format!("id + ad(x) is not an automorphism: {v}")));
    }
    let q = ambient.field();
    let s1 = Subspace::coordinate(q, ambient.dim(), &(0..n * n - 1).collect::<Vec<_>>());
    let s2 = s1.map(&phi)?;
    Decomposition::new(ambient, s1, s2)
}

/// Builds the tower of `(b, r)` and reports every level that is nilpotent.
pub fn rb_tower_nonnilpotence(b: &Algebra, r: &RbOperator, steps: usize) -> Result<Report> {
    if b.kind() != Kind::Associative {
        return Err(Error::KindMismatch("the tower check needs an associative base".into()));
    }
    if !r.weight().is_one() {
        return Err(Error::WrongWeight(r.weight().to_string()));
    }
    if !b.is_semisimple()? {
        return Err(Error::InvalidStructure("base algebra is not semisimple".into()));
    }
    let t = tower(b, r, steps)?;
    let mut out = Vec::new();
    for (level, a) in t.levels.iter().enumerate() {
        if a.is_nilpotent_assoc()?.nilpotent {
            out.push(Violation {
                law: "non-nilpotent level".into(),
                indices: vec![level],
                residual: Vec::new(),
            });
        }
    }
    Ok(Report::from_violations(out))
}
