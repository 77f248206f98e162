//! Rota-Baxter operators: verification, construction from splittings, the
//! induced product and its towers, kernel chains, spectra, and exhaustive
//! search over small prime fields.

use crate::algebra::{Algebra, Product};
use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{axpy, sub_vectors, unit_vector, zero_vector, Matrix, Subspace, Vector};
use crate::par::{map_indices, IntoParallelIterator};
#[cfg(feature = "parallel")]
use crate::par::ParallelIterator;
use crate::report::{record, Report, Violation};

/// Default cap on the number of candidate matrices in [`search_rb_exhaustive`].
pub const DEFAULT_SEARCH_BUDGET: u64 = 100_000_000;

/// A linear operator `R` together with its weight `λ`, meant to satisfy
/// `R(x)R(y) = R(R(x)y + xR(y) + λxy)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RbOperator {
    matrix: Matrix,
    weight: Scalar,
}

impl RbOperator {
    pub fn new(matrix: Matrix, weight: Scalar) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch(format!("operator matrix is {}x{}", matrix.rows(), matrix.cols())));
        }
        if weight.field() != matrix.field() {
            return Err(Error::FieldMismatch(format!("weight over {} for a matrix over {}", weight.field(), matrix.field())));
        }
        Ok(RbOperator { matrix, weight })
    }

    pub fn zero(field: FieldSpec, dim: usize, weight: Scalar) -> Self {
        RbOperator::new(Matrix::zeros(field, dim, dim), weight).expect("square zero matrix")
    }

    /// `c * id` with the given weight.
    pub fn scalar(field: FieldSpec, dim: usize, c: &Scalar, weight: Scalar) -> Self {
        RbOperator::new(Matrix::identity(field, dim).scale(c), weight).expect("square identity")
    }

    /// `-λ id`, a Rota-Baxter operator of weight `λ` on every algebra.
    pub fn negative_weight_identity(field: FieldSpec, dim: usize, weight: Scalar) -> Self {
        let c = -weight.clone();
        RbOperator::scalar(field, dim, &c, weight)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn weight(&self) -> &Scalar {
        &self.weight
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn field(&self) -> FieldSpec {
        self.matrix.field()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.mul_vec(v)
    }

    /// `R + λ id`.
    pub fn shifted(&self) -> Matrix {
        self.matrix.shift(&self.weight).expect("square")
    }

    fn require_weight_one(&self) -> Result<()> {
        if !self.weight.is_one() {
            return Err(Error::WrongWeight(self.weight.to_string()));
        }
        Ok(())
    }
}

fn check_compatible(a: &Algebra, r: &RbOperator) -> Result<()> {
    if r.dim() != a.dim() {
        return Err(Error::DimensionMismatch(format!("{}x{} operator on a {}-dimensional algebra", r.dim(), r.dim(), a.dim())));
    }
    if r.field() != a.field() {
        return Err(Error::FieldMismatch(format!("operator over {} on an algebra over {}", r.field(), a.field())));
    }
    Ok(())
}

/// Residual `R(b_i)R(b_j) - R(R(b_i)b_j + b_iR(b_j) + λb_ib_j)` for basis pair `(i, j)`.
fn rb_residual(p: &Product, r: &Matrix, weight: &Scalar, cols: &[Vector], i: usize, j: usize) -> Vector {
    let lhs = p.apply(&cols[i], &cols[j]);
    let mut inner = p.apply_basis_right(&cols[i], j);
    axpy(&mut inner, &p.field().one(), &p.apply_basis_left(i, &cols[j]));
    axpy(&mut inner, weight, &p.basis_product(i, j));
    sub_vectors(&lhs, &r.mul_vec(&inner))
}

/// Checks the Rota-Baxter identity on every basis pair.
pub fn verify_rb(a: &Algebra, r: &RbOperator) -> Result<Report> {
    check_compatible(a, r)?;
    let n = a.dim();
    let cols = r.matrix.columns();
    let chunks = map_indices(n, |i| {
        let mut out = Vec::new();
        for j in 0..n {
            record(&mut out, "rota-baxter", &[i, j], rb_residual(a.product(), &r.matrix, &r.weight, &cols, i, j));
        }
        out
    });
    Ok(Report::from_violations(chunks.into_iter().flatten().collect()))
}

pub(crate) fn require_rb(a: &Algebra, r: &RbOperator) -> Result<()> {
    let report = verify_rb(a, r)?;
    match report.first() {
        Some(v) => Err(Error::NotRotaBaxter(Box::new(v.clone()))),
        None => Ok(()),
    }
}

/// Weight-1 operator `R = -π₂` for a direct splitting `a = s1 ⊕ s2` into
/// subalgebras, where `π₂` projects onto `s2` along `s1`.
pub fn from_splitting(a: &Algebra, s1: &Subspace, s2: &Subspace) -> Result<RbOperator> {
    for s in [s1, s2] {
        if let Some((x, y)) = a.closure_witness(s)? {
            return Err(Error::NotSubalgebra(x, y));
        }
    }
    if !s1.intersect(s2)?.is_zero() || !s1.sum(s2)?.is_full() {
        return Err(Error::NotDirectSum);
    }
    let n = a.dim();
    let field = a.field();
    let mut adapted = s1.basis_vectors();
    adapted.extend(s2.basis_vectors());
    let p = Matrix::from_columns(field, n, &adapted)?;
    let k = s1.dim();
    // Column c of -π₂: solve P x = e_c, keep the s2 coordinates.
    let cols: Vec<Vector> = (0..n)
        .map(|c| {
            let x = p.solve(&unit_vector(field, n, c)).expect("adapted basis is invertible");
            let mut v = zero_vector(field, n);
            for (t, coef) in x.iter().enumerate().skip(k) {
                axpy(&mut v, &-coef.clone(), &adapted[t]);
            }
            v
        })
        .collect();
    let r = RbOperator::new(Matrix::from_columns(field, n, &cols)?, field.one())?;
    if let Some(v) = verify_rb(a, &r)?.first() {
        return Err(Error::Inconsistent(format!("splitting operator fails the Rota-Baxter identity: {v}")));
    }
    Ok(r)
}

/// The product `x∘y = R(x)y + xR(y) + λxy`, without any checks.
pub fn induced_product(p: &Product, r: &RbOperator) -> Product {
    let cols = r.matrix.columns();
    let field = p.field();
    Product::from_fn(field, p.dim(), |i, j| {
        let mut v = p.apply_basis_right(&cols[i], j);
        axpy(&mut v, &field.one(), &p.apply_basis_left(i, &cols[j]));
        axpy(&mut v, &r.weight, &p.basis_product(i, j));
        v
    })
}

/// The algebra `(V, ∘)`; refuses unless `R` is Rota-Baxter, and re-checks
/// that the result satisfies the same law as `a`.
pub fn induced_algebra(a: &Algebra, r: &RbOperator) -> Result<Algebra> {
    require_rb(a, r)?;
    let out = Algebra::new(induced_product(a.product(), r), a.kind())?;
    match a.labels() {
        Some(l) => out.with_labels(l.to_vec()),
        None => Ok(out),
    }
}

/// Violations of `R` and `R + λ id` being homomorphisms `(V, ∘) -> a`.
fn homomorphism_violations(induced: &Algebra, base: &Algebra, r: &RbOperator) -> Vec<Violation> {
    let mut v = induced.homomorphism_violations(base, &r.matrix, "R-homomorphism");
    v.extend(induced.homomorphism_violations(base, &r.shifted(), "(R+λid)-homomorphism"));
    v
}

/// Confirms that `R` and `R + λ id` map the induced algebra homomorphically to `a`.
pub fn check_rb_homomorphisms(a: &Algebra, r: &RbOperator) -> Result<Report> {
    let induced = induced_algebra(a, r)?;
    Ok(Report::from_violations(homomorphism_violations(&induced, a, r)))
}

/// Homomorphism residuals without requiring `R` to be Rota-Baxter; used to
/// show that a non-RB matrix breaks at least one of the two maps.
pub fn homomorphism_report_unchecked(a: &Algebra, r: &RbOperator) -> Result<Report> {
    check_compatible(a, r)?;
    let induced = Algebra::general(induced_product(a.product(), r));
    Ok(Report::from_violations(homomorphism_violations(&induced, a, r)))
}

/// `a = im(R) + im(R + id)` for a weight-1 operator.
pub fn image_decomposition(a: &Algebra, r: &RbOperator) -> Result<Decomposition> {
    r.require_weight_one()?;
    require_rb(a, r)?;
    let s1 = r.matrix.image();
    let s2 = r.shifted().image();
    Decomposition::new(a.clone(), s1, s2)
}

/// The algebras `A_0 = base`, `A_{i+1} = (V, ∘_{i+1})` with
/// `x ∘_{i+1} y = R(x) ∘_i y + x ∘_i R(y) + λ x ∘_i y`.
#[derive(Clone, Debug)]
pub struct Tower {
    pub base: Algebra,
    pub rb: RbOperator,
    pub levels: Vec<Algebra>,
}

impl Tower {
    pub fn steps(&self) -> usize {
        self.levels.len() - 1
    }
}

/// Builds `steps` induced levels above `a`, re-verifying at every level that
/// `R` is Rota-Baxter, that the new level satisfies the law of `a`, and that
/// `R`, `R + λ id` are homomorphisms from the new level to the previous one.
pub fn tower(a: &Algebra, r: &RbOperator, steps: usize) -> Result<Tower> {
    check_compatible(a, r)?;
    let mut levels = vec![a.clone()];
    for level in 0..steps {
        let prev = &levels[level];
        let report = verify_rb(prev, r)?;
        if let Some(v) = report.first() {
            return Err(Error::TowerFailure {
                level,
                reason: format!("not a Rota-Baxter operator: {v}"),
            });
        }
        let next = Algebra::new(induced_product(prev.product(), r), a.kind()).map_err(|e| Error::TowerFailure {
            level: level + 1,
            reason: e.to_string(),
        })?;
        if let Some(v) = homomorphism_violations(&next, prev, r).first() {
            return Err(Error::TowerFailure {
                level: level + 1,
                reason: v.to_string(),
            });
        }
        levels.push(next);
    }
    Ok(Tower {
        base: a.clone(),
        rb: r.clone(),
        levels,
    })
}

/// Checks that `ker(R^i)` and `ker((R+id)^i)` are ideals in every level `j >= i`.
pub fn kernel_chain(t: &Tower, i: usize) -> Result<Report> {
    t.rb.require_weight_one()?;
    if i < 1 || i > t.steps() {
        return Err(Error::OutOfRange(format!("kernel chain index {i} outside 1..={}", t.steps())));
    }
    let kernels = [
        ("ker(R^i) ideal", t.rb.matrix.pow(i as u32)?.kernel()),
        ("ker((R+id)^i) ideal", t.rb.shifted().pow(i as u32)?.kernel()),
    ];
    let mut out = Vec::new();
    for j in i..=t.steps() {
        for (law, k) in &kernels {
            if let Some((b, _, product)) = t.levels[j].ideal_witness(k)? {
                out.push(Violation {
                    law: law.to_string(),
                    indices: vec![i, j, b],
                    residual: product,
                });
            }
        }
    }
    Ok(Report::from_violations(out))
}

/// `(a, b)` with `char_poly(R) = t^a (t+1)^b`, if the spectrum lies in `{0, -1}`.
pub fn spectrum_split(r: &RbOperator) -> Option<(usize, usize)> {
    let cp = r.matrix.char_poly().expect("square");
    let n = r.dim();
    let field = r.field();
    let a = cp.iter().take_while(|c| c.is_zero()).count().min(n);
    let b = n - a;
    // (t+1)^b coefficients by Pascal's rule.
    let mut binom = vec![field.one()];
    for _ in 0..b {
        let mut next = zero_vector(field, binom.len() + 1);
        for (k, c) in binom.iter().enumerate() {
            next[k] += c;
            next[k + 1] += c;
        }
        binom = next;
    }
    let mut expected = zero_vector(field, n + 1);
    for (k, c) in binom.into_iter().enumerate() {
        expected[a + k] = c;
    }
    (cp == expected).then_some((a, b))
}

pub fn spectrum_check(r: &RbOperator) -> bool {
    spectrum_split(r).is_some()
}

/// Every Rota-Baxter operator of weight `weight` on `a` over `F_p`, in
/// lexicographic order of the column-major entry sequence.
///
/// Columns are fixed one at a time; a basis pair is tested as soon as every
/// column its identity touches has been fixed.
pub fn search_rb_exhaustive(a: &Algebra, weight: &Scalar, budget: u64) -> Result<Vec<RbOperator>> {
    let field = a.field();
    let FieldSpec::Prime(p) = field else {
        return Err(Error::Unsupported("exhaustive search needs a prime field".into()));
    };
    if weight.field() != field {
        return Err(Error::FieldMismatch(format!("weight over {} for an algebra over {field}", weight.field())));
    }
    let n = a.dim();
    let candidates = (p as u128).checked_pow((n * n) as u32);
    match candidates {
        Some(c) if c <= budget as u128 => {}
        _ => {
            return Err(Error::BudgetExceeded {
                candidates: candidates.map_or_else(|| format!("{p}^{}", n * n), |c| c.to_string()),
                budget,
            })
        }
    }
    if n == 0 {
        return Ok(vec![RbOperator::new(Matrix::zeros(field, 0, 0), weight.clone())?]);
    }
    let columns = all_vectors(field, n);
    let searcher = Searcher {
        product: a.product(),
        weight,
        columns: &columns,
    };
    let found: Vec<Vec<Vec<Vector>>> = (0..columns.len())
        .into_par_iter()
        .map(|first| {
            let mut acc = Vec::new();
            let mut chosen = vec![columns[first].clone()];
            if searcher.consistent(&chosen) {
                searcher.extend(&mut chosen, &mut acc);
            }
            acc
        })
        .collect();
    found
        .into_iter()
        .flatten()
        .map(|cols| RbOperator::new(Matrix::from_columns(field, n, &cols)?, weight.clone()))
        .collect()
}

/// All vectors of `F_p^n` in lexicographic order (first coordinate most significant).
fn all_vectors(field: FieldSpec, n: usize) -> Vec<Vector> {
    let elements: Vec<Scalar> = field.elements().expect("prime field").collect();
    let mut out: Vec<Vector> = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                elements.iter().map(move |e| {
                    let mut v = prefix.clone();
                    v.push(e.clone());
                    v
                })
            })
            .collect();
    }
    out
}

struct Searcher<'a> {
    product: &'a Product,
    weight: &'a Scalar,
    columns: &'a [Vector],
}

impl Searcher<'_> {
    /// Tests the pairs that become decidable once column `chosen.len() - 1` is fixed.
    fn consistent(&self, chosen: &[Vector]) -> bool {
        let c = chosen.len() - 1;
        let p = self.product;
        let field = p.field();
        for i in 0..=c {
            for j in 0..=c {
                let mut inner = p.apply_basis_right(&chosen[i], j);
                axpy(&mut inner, &field.one(), &p.apply_basis_left(i, &chosen[j]));
                axpy(&mut inner, self.weight, &p.basis_product(i, j));
                let support = inner.iter().rposition(|x| !x.is_zero()).unwrap_or(0);
                if i.max(j).max(support) != c {
                    continue;
                }
                let lhs = p.apply(&chosen[i], &chosen[j]);
                let mut rhs = zero_vector(field, p.dim());
                for (k, x) in inner.iter().enumerate().take(support + 1) {
                    axpy(&mut rhs, x, &chosen[k]);
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    fn extend(&self, chosen: &mut Vec<Vector>, acc: &mut Vec<Vec<Vector>>) {
        if chosen.len() == self.product.dim() {
            acc.push(chosen.clone());
            return;
        }
        for col in self.columns {
            chosen.push(col.clone());
            if self.consistent(chosen) {
                self.extend(chosen, acc);
            }
            chosen.pop();
        }
    }
}
