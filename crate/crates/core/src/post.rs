//! Post-Lie and post-associative structures: axiom checks, the structures
//! induced by Rota-Baxter operators, commutator descent, and recovery of the
//! operator from a structure on a unital algebra.

use serde::Serialize;

use crate::algebra::{Algebra, Kind, Product};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::{axpy, sub_vectors, Matrix, Vector};
use crate::par::map_indices;
use crate::report::{record, Report, Violation};
use crate::rota_baxter::{induced_algebra, require_rb, RbOperator};

/// A product `x·y` linking two Lie brackets `[,]` (on `g`) and `{,}` (on `n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PostLieStructure {
    pub g: Algebra,
    pub n: Algebra,
    pub prod: Product,
}

/// Products `≻`, `≺` linking two associative products `∗` (on `a`) and `∘` (on `b`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PostAssocStructure {
    pub a: Algebra,
    pub b: Algebra,
    pub succ: Product,
    pub prec: Product,
}

/// Axiom report for a post-associative structure. The derived identity
/// `(x≻y)≺z = x≻(y≺z)` is kept apart from the six defining axioms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PostAssocReport {
    pub axioms: Report,
    pub derived: Report,
}

impl PostAssocReport {
    pub fn pass(&self) -> bool {
        self.axioms.pass()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MatrixCase {
    ZeroBranch,
    NegationBranch,
    Other,
}

fn same_space(dim: usize, field: FieldSpec, what: &str, others: &[(usize, FieldSpec)]) -> Result<()> {
    for (d, f) in others {
        if *d != dim {
            return Err(Error::DimensionMismatch(format!("{what}: dimensions {dim} and {d}")));
        }
        if *f != field {
            return Err(Error::FieldMismatch(format!("{what}: fields {field} and {f}")));
        }
    }
    Ok(())
}

fn require_kind(a: &Algebra, kind: Kind, role: &str) -> Result<()> {
    if a.kind() != kind {
        return Err(Error::KindMismatch(format!("{role} must be {kind}, found {}", a.kind())));
    }
    Ok(())
}

fn table(p: &Product) -> Vec<Vec<Vector>> {
    let n = p.dim();
    (0..n).map(|i| (0..n).map(|j| p.basis_product(i, j)).collect()).collect()
}

fn first_violation(law: &str, report: &Report) -> Result<()> {
    match report.first() {
        Some(v) => Err(Error::LawViolation {
            law: law.to_string(),
            witness: Box::new(v.clone()),
        }),
        None => Ok(()),
    }
}

impl PostLieStructure {
    pub fn new(g: Algebra, n: Algebra, prod: Product) -> Result<Self> {
        require_kind(&g, Kind::Lie, "g")?;
        require_kind(&n, Kind::Lie, "n")?;
        same_space(g.dim(), g.field(), "post-Lie structure", &[(n.dim(), n.field()), (prod.dim(), prod.field())])?;
        Ok(PostLieStructure { g, n, prod })
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    /// Checks `post1` on basis pairs and `post2`, `post3` on basis triples.
    pub fn verify(&self) -> Report {
        let d = self.dim();
        let p = &self.prod;
        let nb = self.n.product();
        let pt = table(p);
        let gt = table(self.g.product());
        let nt = table(nb);
        let chunks = map_indices(d, |i| {
            let mut out = Vec::new();
            for j in 0..d {
                let mut r = sub_vectors(&pt[i][j], &pt[j][i]);
                r = sub_vectors(&r, &gt[i][j]);
                axpy(&mut r, &p.field().one(), &nt[i][j]);
                record(&mut out, "post1", &[i, j], r);
                for k in 0..d {
                    let mut r = sub_vectors(&p.apply_basis_right(&gt[i][j], k), &p.apply_basis_left(i, &pt[j][k]));
                    axpy(&mut r, &p.field().one(), &p.apply_basis_left(j, &pt[i][k]));
                    record(&mut out, "post2", &[i, j, k], r);

                    let r = sub_vectors(
                        &sub_vectors(&p.apply_basis_left(i, &nt[j][k]), &nb.apply_basis_right(&pt[i][j], k)),
                        &nb.apply_basis_left(j, &pt[i][k]),
                    );
                    record(&mut out, "post3", &[i, j, k], r);
                }
            }
            out
        });
        Report::from_violations(chunks.into_iter().flatten().collect())
    }
}

impl PostAssocStructure {
    pub fn new(a: Algebra, b: Algebra, succ: Product, prec: Product) -> Result<Self> {
        require_kind(&a, Kind::Associative, "A")?;
        require_kind(&b, Kind::Associative, "B")?;
        same_space(
            a.dim(),
            a.field(),
            "post-associative structure",
            &[(b.dim(), b.field()), (succ.dim(), succ.field()), (prec.dim(), prec.field())],
        )?;
        Ok(PostAssocStructure { a, b, succ, prec })
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    /// Checks `postAs1` on basis pairs, `postAs2`-`postAs6` on basis triples,
    /// and separately the derived identity `postAs7`.
    pub fn verify(&self) -> PostAssocReport {
        let d = self.dim();
        let (s, p) = (&self.succ, &self.prec);
        let circ = self.b.product();
        let st = table(self.a.product());
        let ct = table(circ);
        let sut = table(s);
        let pt = table(p);
        let chunks = map_indices(d, |i| {
            let mut axioms = Vec::new();
            let mut derived = Vec::new();
            for j in 0..d {
                let r = sub_vectors(&sub_vectors(&sub_vectors(&st[i][j], &ct[i][j]), &sut[i][j]), &pt[i][j]);
                record(&mut axioms, "postAs1", &[i, j], r);
                for k in 0..d {
                    let idx = [i, j, k];
                    record(
                        &mut axioms,
                        "postAs2",
                        &idx,
                        sub_vectors(&s.apply_basis_right(&st[i][j], k), &s.apply_basis_left(i, &sut[j][k])),
                    );
                    record(
                        &mut axioms,
                        "postAs3",
                        &idx,
                        sub_vectors(&p.apply_basis_left(i, &st[j][k]), &p.apply_basis_right(&pt[i][j], k)),
                    );
                    record(
                        &mut axioms,
                        "postAs4",
                        &idx,
                        sub_vectors(&s.apply_basis_left(i, &ct[j][k]), &circ.apply_basis_right(&sut[i][j], k)),
                    );
                    record(
                        &mut axioms,
                        "postAs5",
                        &idx,
                        sub_vectors(&p.apply_basis_right(&ct[i][j], k), &circ.apply_basis_left(i, &pt[j][k])),
                    );
                    record(
                        &mut axioms,
                        "postAs6",
                        &idx,
                        sub_vectors(&circ.apply_basis_right(&pt[i][j], k), &circ.apply_basis_left(i, &sut[j][k])),
                    );
                    record(
                        &mut derived,
                        "postAs7",
                        &idx,
                        sub_vectors(&p.apply_basis_right(&sut[i][j], k), &s.apply_basis_left(i, &pt[j][k])),
                    );
                }
            }
            (axioms, derived)
        });
        let (axioms, derived): (Vec<_>, Vec<_>) = chunks.into_iter().unzip();
        PostAssocReport {
            axioms: Report::from_violations(axioms.into_iter().flatten().collect()),
            derived: Report::from_violations(derived.into_iter().flatten().collect()),
        }
    }

    fn require_valid(&self) -> Result<()> {
        first_violation("post-associative axioms", &self.verify().axioms)
    }
}

fn require_weight_one(r: &RbOperator) -> Result<()> {
    if !r.weight().is_one() {
        return Err(Error::WrongWeight(r.weight().to_string()));
    }
    Ok(())
}

/// `x·y = {R(x), y}` on `n`, with `[x,y] = x·y - y·x + {x,y}`.
pub fn from_rb_lie(n: &Algebra, r: &RbOperator) -> Result<PostLieStructure> {
    require_kind(n, Kind::Lie, "n")?;
    require_weight_one(r)?;
    require_rb(n, r)?;
    let cols = r.matrix().columns();
    let nb = n.product();
    let prod = Product::from_fn(n.field(), n.dim(), |i, j| nb.apply_basis_right(&cols[i], j));
    let g_product = Product::from_fn(n.field(), n.dim(), |i, j| {
        let mut v = sub_vectors(&prod.basis_product(i, j), &prod.basis_product(j, i));
        axpy(&mut v, &n.field().one(), &nb.basis_product(i, j));
        v
    });
    let mut g = Algebra::new(g_product, Kind::Lie)?;
    if let Some(l) = n.labels() {
        g = g.with_labels(l.to_vec())?;
    }
    let out = PostLieStructure::new(g, n.clone(), prod)?;
    first_violation("post-Lie axioms", &out.verify())?;
    Ok(out)
}

/// `x≻y = R(x)∘y`, `x≺y = x∘R(y)`, and `x∗y = x≻y + x≺y + x∘y`.
pub fn from_rb_assoc(b: &Algebra, r: &RbOperator) -> Result<PostAssocStructure> {
    require_kind(b, Kind::Associative, "B")?;
    require_weight_one(r)?;
    let a = induced_algebra(b, r)?;
    let cols = r.matrix().columns();
    let circ = b.product();
    let succ = Product::from_fn(b.field(), b.dim(), |i, j| circ.apply_basis_right(&cols[i], j));
    let prec = Product::from_fn(b.field(), b.dim(), |i, j| circ.apply_basis_left(i, &cols[j]));
    let out = PostAssocStructure::new(a, b.clone(), succ, prec)?;
    out.require_valid()?;
    Ok(out)
}

/// The post-Lie structure `x·y = x≻y - y≺x` on the commutator algebras.
pub fn commutator_descent(p: &PostAssocStructure) -> Result<PostLieStructure> {
    p.require_valid()?;
    let prod = Product::from_fn(p.b.field(), p.dim(), |i, j| {
        sub_vectors(&p.succ.basis_product(i, j), &p.prec.basis_product(j, i))
    });
    let out = PostLieStructure::new(p.a.commutator_algebra()?, p.b.commutator_algebra()?, prod)?;
    first_violation("post-Lie axioms", &out.verify())?;
    Ok(out)
}

/// The map `D_x(a) = x≻a - a≺x`.
pub fn derivation_map(p: &PostAssocStructure, x: &[crate::Scalar]) -> Matrix {
    let d = p.dim();
    let cols: Vec<Vector> = (0..d)
        .map(|a| sub_vectors(&p.succ.apply_basis_right(x, a), &p.prec.apply_basis_left(a, x)))
        .collect();
    Matrix::from_columns(p.b.field(), d, &cols).expect("square")
}

/// Whether `D_x` is a derivation of the commutator algebra of `B`.
pub fn derivation_map_check(p: &PostAssocStructure, x: &[crate::Scalar]) -> Result<bool> {
    p.require_valid()?;
    if x.len() != p.dim() {
        return Err(Error::DimensionMismatch(format!("vector of length {} for dimension {}", x.len(), p.dim())));
    }
    let lie = p.b.commutator_algebra()?;
    let dx = derivation_map(p, x);
    let cols = dx.columns();
    let br = lie.product();
    let d = p.dim();
    Ok((0..d).all(|a| {
        (0..d).all(|b| {
            let lhs = dx.mul_vec(&br.basis_product(a, b));
            let mut rhs = br.apply_basis_right(&cols[a], b);
            axpy(&mut rhs, &p.b.field().one(), &br.apply_basis_left(a, &cols[b]));
            lhs == rhs
        })
    }))
}

/// Recovers `R(x) = x≻1` and certifies that the structure is the one `R` induces.
pub fn extract_rb(p: &PostAssocStructure) -> Result<RbOperator> {
    p.require_valid()?;
    let unit = p.b.find_unit().ok_or(Error::NonUnital)?;
    let d = p.dim();
    let field = p.b.field();
    let cols: Vec<Vector> = (0..d).map(|i| p.succ.apply_basis_left(i, &unit)).collect();
    let r = RbOperator::new(Matrix::from_columns(field, d, &cols)?, field.one())?;
    let circ = p.b.product();
    let mut out = Vec::new();
    for i in 0..d {
        for j in 0..d {
            record(
                &mut out,
                "succ reconstruction",
                &[i, j],
                sub_vectors(&p.succ.basis_product(i, j), &circ.apply_basis_right(&cols[i], j)),
            );
            record(
                &mut out,
                "prec reconstruction",
                &[i, j],
                sub_vectors(&p.prec.basis_product(i, j), &circ.apply_basis_left(i, &cols[j])),
            );
        }
    }
    let mut report = Report::from_violations(out);
    report = report.merge(crate::rota_baxter::verify_rb(&p.b, &r)?);
    match report.first() {
        Some(v) => Err(Error::NotRbDerived(Box::new(v.clone()))),
        None => Ok(r),
    }
}

/// Which of the two branches allowed on `M_n` the structure falls into.
pub fn classify_matrix_case(p: &PostAssocStructure) -> Result<MatrixCase> {
    p.require_valid()?;
    if p.succ.is_zero() && p.prec.is_zero() && p.a.product() == p.b.product() {
        return Ok(MatrixCase::ZeroBranch);
    }
    let neg = Product::combine(&[(-p.b.field().one(), p.b.product())])?;
    if p.a.product() == &neg && p.succ == neg && p.prec == neg {
        return Ok(MatrixCase::NegationBranch);
    }
    Ok(MatrixCase::Other)
}

/// The first obstruction to the structure being induced by an operator, if any.
pub fn rb_derivation_witness(p: &PostAssocStructure) -> Result<Option<Violation>> {
    match extract_rb(p) {
        Ok(_) => Ok(None),
        Err(Error::NotRbDerived(v)) => Ok(Some(*v)),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::{int_vector, Subspace};
    use crate::rota_baxter::{from_splitting, induced_algebra};

    const Q: FieldSpec = FieldSpec::Rationals;

    fn sl2_rb() -> RbOperator {
        let sl2 = catalog::sl2(Q);
        from_splitting(&sl2, &Subspace::coordinate(Q, 3, &[0, 1]), &Subspace::coordinate(Q, 3, &[2])).unwrap()
    }

    fn m2() -> Algebra {
        catalog::make_matrix_algebra(2, Q).unwrap()
    }

    fn m2_rb() -> RbOperator {
        from_splitting(&m2(), &Subspace::coordinate(Q, 4, &[0, 1, 3]), &Subspace::coordinate(Q, 4, &[2])).unwrap()
    }

    fn neg_id(dim: usize) -> RbOperator {
        RbOperator::negative_weight_identity(Q, dim, Q.one())
    }

    #[test]
    fn post_lie_basics() {
        let sl2 = catalog::sl2(Q);
        let trivial = PostLieStructure::new(sl2.clone(), sl2.clone(), Product::zero(Q, 3)).unwrap();
        assert!(trivial.verify().pass());

        let p = from_rb_lie(&sl2, &sl2_rb()).unwrap();
        assert!(p.verify().pass());
        assert_eq!(p.g.product(), induced_algebra(&sl2, &sl2_rb()).unwrap().product());

        let ab = catalog::abelian_lie(3, Q);
        let bad = PostLieStructure::new(sl2.clone(), ab, Product::zero(Q, 3)).unwrap();
        let report = bad.verify();
        assert!(report.for_law("post1").next().is_some());

        let z = from_rb_lie(&sl2, &RbOperator::zero(Q, 3, Q.one())).unwrap();
        assert!(z.prod.is_zero());
        assert_eq!(z.g, sl2);

        let n = from_rb_lie(&sl2, &neg_id(3)).unwrap();
        let minus = Product::combine(&[(Q.int(-1), sl2.product())]).unwrap();
        assert_eq!(n.prod, minus);
        assert_eq!(n.g.product(), &minus);
    }

    #[test]
    fn post_assoc_basics() {
        let b = m2();
        let trivial = PostAssocStructure::new(b.clone(), b.clone(), Product::zero(Q, 4), Product::zero(Q, 4)).unwrap();
        assert!(trivial.verify().pass());
        assert_eq!(classify_matrix_case(&trivial).unwrap(), MatrixCase::ZeroBranch);

        let p = from_rb_assoc(&b, &m2_rb()).unwrap();
        let report = p.verify();
        assert!(report.pass() && report.derived.pass());
        assert!(!p.a.radical_assoc().unwrap().is_zero());
        assert_eq!(classify_matrix_case(&p).unwrap(), MatrixCase::Other);

        let swapped = PostAssocStructure::new(p.a.clone(), p.b.clone(), p.prec.clone(), p.succ.clone()).unwrap();
        let bad = swapped.verify();
        assert!(["postAs2", "postAs3", "postAs4", "postAs5", "postAs6"]
            .iter()
            .any(|law| bad.axioms.for_law(law).next().is_some()));
    }

    #[test]
    fn negation_branch() {
        let b = m2();
        let p = from_rb_assoc(&b, &neg_id(4)).unwrap();
        let minus = Product::combine(&[(Q.int(-1), b.product())]).unwrap();
        assert_eq!(p.succ, minus);
        assert_eq!(p.prec, minus);
        assert_eq!(classify_matrix_case(&p).unwrap(), MatrixCase::NegationBranch);
        assert_eq!(extract_rb(&p).unwrap(), neg_id(4));
        let z = from_rb_assoc(&b, &RbOperator::zero(Q, 4, Q.one())).unwrap();
        assert_eq!(z.a, b);
        assert!(extract_rb(&z).unwrap().matrix().is_zero());
    }

    #[test]
    fn descent_square_commutes() {
        let b = m2();
        for r in [m2_rb(), neg_id(4), RbOperator::zero(Q, 4, Q.one())] {
            let p = from_rb_assoc(&b, &r).unwrap();
            let down = commutator_descent(&p).unwrap();
            let direct = from_rb_lie(&b.commutator_algebra().unwrap(), &r).unwrap();
            assert_eq!(down.prod, direct.prod);
            assert_eq!(down.g.product(), direct.g.product());
            assert_eq!(down.n.product(), direct.n.product());
        }
    }

    #[test]
    fn derivation_maps() {
        let p = from_rb_assoc(&m2(), &m2_rb()).unwrap();
        assert!(derivation_map_check(&p, &int_vector(Q, &[0, 1, 0, 0])).unwrap());
        for i in 0..4 {
            assert!(derivation_map_check(&p, &p.b.basis_vector(i)).unwrap());
        }
        let b = m2();
        let zero = PostAssocStructure::new(b.clone(), b, Product::zero(Q, 4), Product::zero(Q, 4)).unwrap();
        assert!(derivation_map(&zero, &int_vector(Q, &[1, 2, 3, 4])).is_zero());
    }

    #[test]
    fn units() {
        assert_eq!(m2().find_unit(), Some(int_vector(Q, &[1, 0, 0, 1])));
        assert_eq!(catalog::strictly_upper_triangular(3, Q).unwrap().find_unit(), None);
        assert_eq!(catalog::diagonal(2, Q).unwrap().find_unit(), Some(int_vector(Q, &[1, 1])));
    }

    #[test]
    fn extraction_round_trip() {
        let p = from_rb_assoc(&m2(), &m2_rb()).unwrap();
        assert_eq!(extract_rb(&p).unwrap(), m2_rb());

        let sut = catalog::strictly_upper_triangular(3, Q).unwrap();
        let z = PostAssocStructure::new(sut.clone(), sut, Product::zero(Q, 3), Product::zero(Q, 3)).unwrap();
        assert!(matches!(extract_rb(&z), Err(Error::NonUnital)));
    }

    #[test]
    fn zero_structure_is_rb_derived() {
        let b = catalog::diagonal(2, Q).unwrap();
        let p = from_rb_assoc(&b, &RbOperator::zero(Q, 2, Q.one())).unwrap();
        assert!(rb_derivation_witness(&p).unwrap().is_none());
    }
}
