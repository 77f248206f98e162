//! First cohomology of Lie algebras (Chevalley-Eilenberg) and associative
//! algebras (Hochschild), twisted modules along a Rota-Baxter operator, and
//! cocycle pullback.
//!
//! A linear map `d: A -> M` is stored as an `mdim x dim` matrix whose column
//! `i` is `d(b_i)`. As a coefficient vector it is flattened column by column,
//! so entry `(row, col)` sits at `col * mdim + row`.

use crate::algebra::{Algebra, Kind};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{sub_vectors, zero_vector, Matrix, Subspace, Vector};
use crate::post::from_rb_lie;
use crate::report::{record, Report};
use crate::rota_baxter::{induced_algebra, RbOperator};

/// A Lie algebra acting on `F^mdim`; `action[i]` is `ρ(b_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub alg: Algebra,
    pub mdim: usize,
    pub action: Vec<Matrix>,
}

/// An associative algebra acting on both sides of `F^mdim`: `b_i·m = left[i] m`
/// and `m·b_i = right[i] m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    pub alg: Algebra,
    pub mdim: usize,
    pub left: Vec<Matrix>,
    pub right: Vec<Matrix>,
}

/// A linear map from an algebra to a module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    pub map: Matrix,
}

/// `Z¹` and `B¹` as subspaces of the flattened map space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstCohomology {
    pub z1: Subspace,
    pub b1: Subspace,
}

impl FirstCohomology {
    pub fn h1_dim(&self) -> usize {
        self.z1.dim() - self.b1.dim()
    }
}

fn check_actions(alg: &Algebra, mdim: usize, mats: &[Matrix]) -> Result<()> {
    if mats.len() != alg.dim() {
        return Err(Error::DimensionMismatch(format!("{} action matrices for a {}-dimensional algebra", mats.len(), alg.dim())));
    }
    for m in mats {
        if m.rows() != mdim || m.cols() != mdim {
            return Err(Error::DimensionMismatch(format!("{}x{} action matrix on a {mdim}-dimensional module", m.rows(), m.cols())));
        }
        if m.field() != alg.field() {
            return Err(Error::FieldMismatch(format!("action over {} for an algebra over {}", m.field(), alg.field())));
        }
    }
    Ok(())
}

/// `Σ_i x_i mats[i]`.
fn combine(field: FieldSpec, mdim: usize, mats: &[Matrix], x: &[Scalar]) -> Matrix {
    let mut out = Matrix::zeros(field, mdim, mdim);
    for (m, c) in mats.iter().zip(x) {
        if !c.is_zero() {
            out = out.add(&m.scale(c)).expect("same shape");
        }
    }
    out
}

fn flat(m: &Matrix) -> Vector {
    m.columns().concat()
}

fn law_error(law: &str, report: Report) -> Result<()> {
    match report.violations.into_iter().next() {
        Some(v) => Err(Error::LawViolation {
            law: law.to_string(),
            witness: Box::new(v),
        }),
        None => Ok(()),
    }
}

impl Representation {
    /// Verifies `ρ([b_i, b_j]) = [ρ(b_i), ρ(b_j)]` on all basis pairs.
    pub fn new(alg: Algebra, mdim: usize, action: Vec<Matrix>) -> Result<Self> {
        if alg.kind() != Kind::Lie {
            return Err(Error::KindMismatch("representations need a Lie algebra".into()));
        }
        check_actions(&alg, mdim, &action)?;
        let rep = Representation { alg, mdim, action };
        law_error("representation", rep.violations())?;
        Ok(rep)
    }

    fn violations(&self) -> Report {
        let n = self.alg.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.act(&self.alg.product().basis_product(i, j));
                let a = &self.action[i];
                let b = &self.action[j];
                let rhs = a.mul(b).and_then(|ab| ab.sub(&b.mul(a)?)).expect("square");
                record(&mut out, "representation", &[i, j], flat(&lhs.sub(&rhs).expect("same shape")));
            }
        }
        Report::from_violations(out)
    }

    pub fn trivial(alg: &Algebra, mdim: usize) -> Result<Self> {
        let zero = Matrix::zeros(alg.field(), mdim, mdim);
        Representation::new(alg.clone(), mdim, vec![zero; alg.dim()])
    }

    pub fn adjoint(alg: &Algebra) -> Result<Self> {
        let action = (0..alg.dim()).map(|i| alg.product().left_matrix(&alg.basis_vector(i))).collect();
        Representation::new(alg.clone(), alg.dim(), action)
    }

    /// `ρ(x)`.
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        combine(self.alg.field(), self.mdim, &self.action, x)
    }

    /// Residuals of `d([x,y]) = x·d(y) - y·d(x)` on basis pairs.
    pub fn cocycle_report(&self, d: &Cocycle) -> Result<Report> {
        d.check_shape(self.mdim, &self.alg)?;
        let n = self.alg.dim();
        let cols = d.map.columns();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let lhs = d.map.mul_vec(&self.alg.product().basis_product(i, j));
                let rhs = sub_vectors(&self.action[i].mul_vec(&cols[j]), &self.action[j].mul_vec(&cols[i]));
                record(&mut out, "lie-cocycle", &[i, j], sub_vectors(&lhs, &rhs));
            }
        }
        Ok(Report::from_violations(out))
    }

    /// The coboundary `x -> x·m`.
    pub fn coboundary(&self, m: &[Scalar]) -> Cocycle {
        let cols: Vec<Vector> = self.action.iter().map(|a| a.mul_vec(m)).collect();
        Cocycle::from_columns(self.alg.field(), self.mdim, &cols)
    }
}

impl Bimodule {
    /// Verifies `L(xy) = L(x)L(y)`, `R(xy) = R(y)R(x)` and `L(x)R(y) = R(y)L(x)`.
    pub fn new(alg: Algebra, mdim: usize, left: Vec<Matrix>, right: Vec<Matrix>) -> Result<Self> {
        if alg.kind() != Kind::Associative {
            return Err(Error::KindMismatch("bimodules need an associative algebra".into()));
        }
        check_actions(&alg, mdim, &left)?;
        check_actions(&alg, mdim, &right)?;
        let bim = Bimodule { alg, mdim, left, right };
        law_error("bimodule", bim.violations())?;
        Ok(bim)
    }

    fn violations(&self) -> Report {
        let n = self.alg.dim();
        let field = self.alg.field();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let prod = self.alg.product().basis_product(i, j);
                let l = combine(field, self.mdim, &self.left, &prod).sub(&self.left[i].mul(&self.left[j]).expect("square"));
                record(&mut out, "left action", &[i, j], flat(&l.expect("same shape")));
                let r = combine(field, self.mdim, &self.right, &prod).sub(&self.right[j].mul(&self.right[i]).expect("square"));
                record(&mut out, "right action", &[i, j], flat(&r.expect("same shape")));
                let c = self.left[i].mul(&self.right[j]).and_then(|a| a.sub(&self.right[j].mul(&self.left[i])?));
                record(&mut out, "actions commute", &[i, j], flat(&c.expect("same shape")));
            }
        }
        Report::from_violations(out)
    }

    /// The algebra acting on itself by multiplication.
    pub fn regular(alg: &Algebra) -> Result<Self> {
        let p = alg.product();
        let left = (0..alg.dim()).map(|i| p.left_matrix(&alg.basis_vector(i))).collect();
        let right = (0..alg.dim()).map(|i| p.right_matrix(&alg.basis_vector(i))).collect();
        Bimodule::new(alg.clone(), alg.dim(), left, right)
    }

    /// Residuals of `d(xy) = d(x)·y + x·d(y)` on basis pairs.
    pub fn cocycle_report(&self, d: &Cocycle) -> Result<Report> {
        d.check_shape(self.mdim, &self.alg)?;
        let n = self.alg.dim();
        let cols = d.map.columns();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let lhs = d.map.mul_vec(&self.alg.product().basis_product(i, j));
                let mut rhs = self.right[j].mul_vec(&cols[i]);
                crate::linalg::axpy(&mut rhs, &self.alg.field().one(), &self.left[i].mul_vec(&cols[j]));
                record(&mut out, "hochschild-cocycle", &[i, j], sub_vectors(&lhs, &rhs));
            }
        }
        Ok(Report::from_violations(out))
    }

    /// The inner derivation `x -> x·m - m·x`.
    pub fn coboundary(&self, m: &[Scalar]) -> Cocycle {
        let cols: Vec<Vector> = (0..self.alg.dim())
            .map(|i| sub_vectors(&self.left[i].mul_vec(m), &self.right[i].mul_vec(m)))
            .collect();
        Cocycle::from_columns(self.alg.field(), self.mdim, &cols)
    }
}

impl Cocycle {
    pub fn new(map: Matrix) -> Self {
        Cocycle { map }
    }

    pub fn zero(field: FieldSpec, mdim: usize, dim: usize) -> Self {
        Cocycle::new(Matrix::zeros(field, mdim, dim))
    }

    pub fn from_columns(field: FieldSpec, mdim: usize, cols: &[Vector]) -> Self {
        Cocycle::new(Matrix::from_columns(field, mdim, cols).expect("columns of module length"))
    }

    /// Inverse of [`Cocycle::to_vector`].
    pub fn from_vector(field: FieldSpec, mdim: usize, dim: usize, v: &[Scalar]) -> Result<Self> {
        if v.len() != mdim * dim {
            return Err(Error::DimensionMismatch(format!("vector of length {} for {mdim}x{dim} maps", v.len())));
        }
        let cols: Vec<Vector> = v.chunks(mdim.max(1)).take(dim).map(<[Scalar]>::to_vec).collect();
        if mdim == 0 {
            return Ok(Cocycle::zero(field, 0, dim));
        }
        Ok(Cocycle::from_columns(field, mdim, &cols))
    }

    /// Column-major flattening.
    pub fn to_vector(&self) -> Vector {
        flat(&self.map)
    }

    fn check_shape(&self, mdim: usize, alg: &Algebra) -> Result<()> {
        if self.map.rows() != mdim || self.map.cols() != alg.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} map for a {mdim}-dimensional module over a {}-dimensional algebra",
                self.map.rows(),
                self.map.cols(),
                alg.dim()
            )));
        }
        Ok(())
    }

    /// `d ∘ R`.
    pub fn pullback(&self, r: &RbOperator) -> Result<Cocycle> {
        Ok(Cocycle::new(self.map.mul(r.matrix())?))
    }
}

/// Solution space of the linear conditions `rows(i, j)` in the flattened unknowns.
fn solve_maps(field: FieldSpec, mdim: usize, dim: usize, equations: Vec<Vector>) -> Subspace {
    let unknowns = mdim * dim;
    if equations.is_empty() {
        return Subspace::full(field, unknowns);
    }
    Matrix::from_rows(field, unknowns, &equations).expect("uniform rows").kernel()
}

/// Coefficient rows of `d(b_i b_j) - (row contributions)` for one basis pair.
struct PairEquations<'a> {
    field: FieldSpec,
    mdim: usize,
    dim: usize,
    product: &'a [Scalar],
}

impl PairEquations<'_> {
    /// Rows `r` of `d(b_i b_j) - A d(b_a) - B d(b_b)` for the given terms.
    fn rows(&self, terms: &[(&Matrix, usize)]) -> Vec<Vector> {
        (0..self.mdim)
            .map(|r| {
                let mut row = zero_vector(self.field, self.mdim * self.dim);
                for (c, coef) in self.product.iter().enumerate() {
                    if !coef.is_zero() {
                        row[c * self.mdim + r] += coef;
                    }
                }
                for (m, col) in terms {
                    for s in 0..self.mdim {
                        row[col * self.mdim + s] -= m.get(r, s);
                    }
                }
                row
            })
            .collect()
    }
}

/// `Z¹(g, M)` and `B¹(g, M)` for the convention `d([x,y]) = x·d(y) - y·d(x)`.
pub fn z1_b1_lie(rep: &Representation) -> FirstCohomology {
    let field = rep.alg.field();
    let (mdim, dim) = (rep.mdim, rep.alg.dim());
    let mut equations = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let product = rep.alg.product().basis_product(i, j);
            let neg = rep.action[j].scale(&-field.one());
            let pe = PairEquations { field, mdim, dim, product: &product };
            equations.extend(pe.rows(&[(&rep.action[i], j), (&neg, i)]));
        }
    }
    let z1 = solve_maps(field, mdim, dim, equations);
    let b1 = Subspace::span(field, mdim * dim, (0..mdim).map(|k| rep.coboundary(&crate::linalg::unit_vector(field, mdim, k)).to_vector()))
        .expect("flattened maps");
    FirstCohomology { z1, b1 }
}

/// Hochschild `Z¹(A, M)` (derivations) and `B¹(A, M)` (inner derivations).
pub fn z1_b1_assoc(bim: &Bimodule) -> FirstCohomology {
    let field = bim.alg.field();
    let (mdim, dim) = (bim.mdim, bim.alg.dim());
    let mut equations = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            let product = bim.alg.product().basis_product(i, j);
            let pe = PairEquations { field, mdim, dim, product: &product };
            equations.extend(pe.rows(&[(&bim.right[j], i), (&bim.left[i], j)]));
        }
    }
    let z1 = solve_maps(field, mdim, dim, equations);
    let b1 = Subspace::span(field, mdim * dim, (0..mdim).map(|k| bim.coboundary(&crate::linalg::unit_vector(field, mdim, k)).to_vector()))
        .expect("flattened maps");
    FirstCohomology { z1, b1 }
}

fn require_cocycle(report: Report) -> Result<()> {
    match report.violations.into_iter().next() {
        Some(v) => Err(Error::NotCocycle(Box::new(v))),
        None => Ok(()),
    }
}

fn require_weight_one(r: &RbOperator) -> Result<()> {
    if !r.weight().is_one() {
        return Err(Error::WrongWeight(r.weight().to_string()));
    }
    Ok(())
}

/// The module over `g` given by `x·m = R(x)·m`, and the cocycle `d ∘ R` on it.
pub fn twist_and_pullback_lie(rep: &Representation, r: &RbOperator, d: &Cocycle) -> Result<(Representation, Cocycle)> {
    require_weight_one(r)?;
    let g = from_rb_lie(&rep.alg, r)?.g;
    require_cocycle(rep.cocycle_report(d)?)?;
    let action: Vec<Matrix> = r.matrix().columns().iter().map(|c| rep.act(c)).collect();
    let twisted = Representation::new(g, rep.mdim, action)?;
    let pulled = d.pullback(r)?;
    if let Some(v) = twisted.cocycle_report(&pulled)?.first() {
        return Err(Error::Inconsistent(format!("pulled-back map is not a cocycle: {v}")));
    }
    Ok((twisted, pulled))
}

/// The bimodule over the induced algebra given by `x·m = R(x)·m`, `m·x = m·R(x)`,
/// and the cocycle `d ∘ R` on it.
pub fn twist_and_pullback_assoc(bim: &Bimodule, r: &RbOperator, d: &Cocycle) -> Result<(Bimodule, Cocycle)> {
    require_weight_one(r)?;
    let a = induced_algebra(&bim.alg, r)?;
    require_cocycle(bim.cocycle_report(d)?)?;
    let field = bim.alg.field();
    let cols = r.matrix().columns();
    let left = cols.iter().map(|c| combine(field, bim.mdim, &bim.left, c)).collect();
    let right = cols.iter().map(|c| combine(field, bim.mdim, &bim.right, c)).collect();
    let twisted = Bimodule::new(a, bim.mdim, left, right)?;
    let pulled = d.pullback(r)?;
    if let Some(v) = twisted.cocycle_report(&pulled)?.first() {
        return Err(Error::Inconsistent(format!("pulled-back map is not a cocycle: {v}")));
    }
    Ok((twisted, pulled))
}

/// A vector `m` with `d(x) = x·m`, for a cocycle over a semisimple Lie algebra.
pub fn whitehead_split(rep: &Representation, d: &Cocycle) -> Result<Vector> {
    if !rep.alg.is_semisimple()? {
        return Err(Error::InvalidStructure("Whitehead splitting needs a semisimple Lie algebra".into()));
    }
    require_cocycle(rep.cocycle_report(d)?)?;
    let field = rep.alg.field();
    let rows: Vec<Vector> = rep.action.iter().flat_map(Matrix::row_vectors).collect();
    if rows.is_empty() || rep.mdim == 0 {
        return Ok(zero_vector(field, rep.mdim));
    }
    let stacked = Matrix::from_rows(field, rep.mdim, &rows)?;
    stacked
        .solve(&d.to_vector())
        .ok_or_else(|| Error::Inconsistent("cocycle over a semisimple algebra is not a coboundary".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, ClassicalFamily};
    use crate::linalg::int_vector;
    use crate::rota_baxter::from_splitting;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn sl2_natural() -> Representation {
        let (mats, _) = catalog::classical_matrices(ClassicalFamily::Sl, 2, Q).unwrap();
        Representation::new(catalog::sl2(Q), 2, mats).unwrap()
    }

    fn sl2_rb() -> RbOperator {
        from_splitting(&catalog::sl2(Q), &Subspace::coordinate(Q, 3, &[0, 1]), &Subspace::coordinate(Q, 3, &[2])).unwrap()
    }

    #[test]
    fn lie_h1() {
        let sl2 = catalog::sl2(Q);
        let t = z1_b1_lie(&Representation::trivial(&sl2, 1).unwrap());
        assert_eq!((t.z1.dim(), t.b1.dim()), (0, 0));
        let ab = catalog::abelian_lie(1, Q);
        let t = z1_b1_lie(&Representation::trivial(&ab, 1).unwrap());
        assert_eq!((t.z1.dim(), t.b1.dim()), (1, 0));
        let t = z1_b1_lie(&Representation::adjoint(&sl2).unwrap());
        assert_eq!((t.z1.dim(), t.b1.dim()), (3, 3));
        let t = z1_b1_lie(&sl2_natural());
        assert_eq!(t.h1_dim(), 0);
        assert!(t.b1.is_subspace_of(&t.z1));
    }

    #[test]
    fn bad_representation_is_rejected() {
        let sl2 = catalog::sl2(Q);
        let id = Matrix::identity(Q, 1);
        assert!(matches!(
            Representation::new(sl2, 1, vec![id.clone(), id.clone(), id]),
            Err(Error::LawViolation { .. })
        ));
    }

    #[test]
    fn hochschild_h1() {
        let m2 = catalog::make_matrix_algebra(2, Q).unwrap();
        let t = z1_b1_assoc(&Bimodule::regular(&m2).unwrap());
        assert_eq!((t.z1.dim(), t.b1.dim()), (3, 3));
        let one = catalog::diagonal(1, Q).unwrap();
        let t = z1_b1_assoc(&Bimodule::regular(&one).unwrap());
        assert!(t.z1.is_zero());
        let zero = Algebra::new(crate::Product::zero(Q, 1), Kind::Associative).unwrap();
        let z = Matrix::zeros(Q, 1, 1);
        let bim = Bimodule::new(zero, 1, vec![z.clone()], vec![z]).unwrap();
        let t = z1_b1_assoc(&bim);
        assert_eq!((t.z1.dim(), t.b1.dim()), (1, 0));
    }

    #[test]
    fn flattening_is_column_major() {
        let d = Cocycle::new(Matrix::from_ints(Q, &[&[1, 2], &[3, 4]]));
        assert_eq!(d.to_vector(), int_vector(Q, &[1, 3, 2, 4]));
        assert_eq!(Cocycle::from_vector(Q, 2, 2, &d.to_vector()).unwrap(), d);
    }

    #[test]
    fn lie_twists() {
        let sl2 = catalog::sl2(Q);
        let adj = Representation::adjoint(&sl2).unwrap();
        let d = adj.coboundary(&int_vector(Q, &[1, 2, -1]));
        let (tw, dr) = twist_and_pullback_lie(&adj, &sl2_rb(), &d).unwrap();
        assert!(tw.cocycle_report(&dr).unwrap().pass());

        let (tw, dr) = twist_and_pullback_lie(&adj, &RbOperator::zero(Q, 3, Q.one()), &d).unwrap();
        assert!(tw.action.iter().all(Matrix::is_zero) && dr.map.is_zero());

        let neg = RbOperator::negative_weight_identity(Q, 3, Q.one());
        let (tw, dr) = twist_and_pullback_lie(&adj, &neg, &d).unwrap();
        assert_eq!(tw.action[0], adj.action[0].scale(&Q.int(-1)));
        assert_eq!(dr.map, d.map.scale(&Q.int(-1)));

        let not_cocycle = Cocycle::new(Matrix::from_ints(Q, &[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]));
        assert!(matches!(twist_and_pullback_lie(&adj, &sl2_rb(), &not_cocycle), Err(Error::NotCocycle(_))));
    }

    #[test]
    fn assoc_twists() {
        let m2 = catalog::make_matrix_algebra(2, Q).unwrap();
        let bim = Bimodule::regular(&m2).unwrap();
        let r = from_splitting(&m2, &Subspace::coordinate(Q, 4, &[0, 1, 3]), &Subspace::coordinate(Q, 4, &[2])).unwrap();
        let d = bim.coboundary(&int_vector(Q, &[0, 1, 0, 0]));
        let (tw, dr) = twist_and_pullback_assoc(&bim, &r, &d).unwrap();
        assert!(tw.cocycle_report(&dr).unwrap().pass());
        let (tw, dr) = twist_and_pullback_assoc(&bim, &RbOperator::zero(Q, 4, Q.one()), &d).unwrap();
        assert!(tw.left.iter().chain(&tw.right).all(Matrix::is_zero) && dr.map.is_zero());
        let neg = RbOperator::negative_weight_identity(Q, 4, Q.one());
        let (tw, _) = twist_and_pullback_assoc(&bim, &neg, &d).unwrap();
        assert_eq!(tw.left[1], bim.left[1].scale(&Q.int(-1)));
    }

    #[test]
    fn whitehead() {
        let sl2 = catalog::sl2(Q);
        let adj = Representation::adjoint(&sl2).unwrap();
        let h = int_vector(Q, &[0, 1, 0]);
        assert_eq!(whitehead_split(&adj, &adj.coboundary(&h)).unwrap(), h);
        assert_eq!(whitehead_split(&adj, &Cocycle::zero(Q, 3, 3)).unwrap(), zero_vector(Q, 3));
        let sum = Algebra::direct_sum(&sl2, &sl2).unwrap();
        let triv = Representation::trivial(&sum, 1).unwrap();
        assert!(z1_b1_lie(&triv).z1.is_zero());
        assert_eq!(whitehead_split(&triv, &Cocycle::zero(Q, 1, 6)).unwrap(), zero_vector(Q, 1));
        let ab = catalog::abelian_lie(1, Q);
        let rep = Representation::trivial(&ab, 1).unwrap();
        assert!(whitehead_split(&rep, &Cocycle::zero(Q, 1, 1)).is_err());
    }
}
