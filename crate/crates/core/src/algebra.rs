//! Finite-dimensional algebras given by structure constants.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{axpy, is_zero_vector, sub_vectors, unit_vector, zero_vector, Matrix, Subspace, Vector};
use crate::par::map_indices;
use crate::report::{record, Report, Violation};

/// Which identities an algebra is known to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Kind {
    Associative,
    Lie,
    General,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Associative => "assoc",
            Kind::Lie => "lie",
            Kind::General => "general",
        })
    }
}

/// Identity families checked on basis tuples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Law {
    Associativity,
    /// Alternating (`[x,x] = 0`, `[x,y] = -[y,x]`) plus Jacobi.
    Lie,
}

/// A bilinear map `V x V -> V` on `field^dim`, stored sparsely.
///
/// `table[i * dim + j]` lists the nonzero coordinates `(k, c)` of `b_i * b_j`
/// in increasing `k`.
#[derive(Clone, PartialEq, Eq)]
pub struct Product {
    dim: usize,
    field: FieldSpec,
    table: Vec<Vec<(usize, Scalar)>>,
}

impl fmt::Debug for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Product(dim {} over {}: ", self.dim, self.field)?;
        for (i, j, k, c) in self.entries() {
            write!(f, "({i},{j},{k})={c} ")?;
        }
        write!(f, ")")
    }
}

fn sparse(v: Vector) -> Vec<(usize, Scalar)> {
    v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

impl Product {
    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        Product {
            dim,
            field,
            table: vec![Vec::new(); dim * dim],
        }
    }

    /// From `(i, j, k, c)` entries meaning `(b_i * b_j)_k = c`. Zero entries
    /// are dropped; repeated keys are rejected.
    pub fn from_entries(field: FieldSpec, dim: usize, entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>) -> Result<Self> {
        let mut dense: Vec<Option<Vector>> = vec![None; dim * dim];
        let mut seen = std::collections::HashSet::new();
        for (i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::InvalidStructure(format!("index ({i},{j},{k}) out of range for dimension {dim}")));
            }
            if c.field() != field {
                return Err(Error::FieldMismatch(format!("structure constant over {} in an algebra over {field}", c.field())));
            }
            if !seen.insert((i, j, k)) {
                return Err(Error::InvalidStructure(format!("duplicate structure constant ({i},{j},{k})")));
            }
            dense[i * dim + j].get_or_insert_with(|| zero_vector(field, dim))[k] = c;
        }
        Ok(Product {
            dim,
            field,
            table: dense.into_iter().map(|v| v.map(sparse).unwrap_or_default()).collect(),
        })
    }

    /// Product whose value on `(b_i, b_j)` is `f(i, j)`.
    pub fn from_fn(field: FieldSpec, dim: usize, f: impl Fn(usize, usize) -> Vector + Sync + Send) -> Self {
        let table = map_indices(dim * dim, |idx| {
            let v = f(idx / dim, idx % dim);
            assert_eq!(v.len(), dim, "basis product has wrong length");
            sparse(v)
        });
        Product { dim, field, table }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Nonzero structure constants in `(i, j, k)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        self.table
            .iter()
            .enumerate()
            .flat_map(move |(idx, row)| row.iter().map(move |(k, c)| (idx / self.dim, idx % self.dim, *k, c)))
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let mut v = zero_vector(self.field, self.dim);
        for (k, c) in &self.table[i * self.dim + j] {
            v[*k] = c.clone();
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch(format!("vector of length {} for dimension {}", v.len(), self.dim)));
        }
        if let Some(bad) = v.iter().find(|s| s.field() != self.field) {
            return Err(Error::FieldMismatch(format!("vector entry over {} for an algebra over {}", bad.field(), self.field)));
        }
        Ok(())
    }

    /// Bilinear extension: `(u v)_k = sum_ij c_ij^k u_i v_j`.
    pub fn apply(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.field, self.dim);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let coef = ui * vj;
                for (k, c) in &self.table[i * self.dim + j] {
                    out[*k] += &(&coef * c);
                }
            }
        }
        out
    }

    /// `b_i * v`.
    pub fn apply_basis_left(&self, i: usize, v: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.field, self.dim);
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            for (k, c) in &self.table[i * self.dim + j] {
                out[*k] += &(vj * c);
            }
        }
        out
    }

    /// `u * b_j`.
    pub fn apply_basis_right(&self, u: &[Scalar], j: usize) -> Vector {
        let mut out = zero_vector(self.field, self.dim);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (k, c) in &self.table[i * self.dim + j] {
                out[*k] += &(ui * c);
            }
        }
        out
    }

    /// Matrix of `v -> u * v`.
    pub fn left_matrix(&self, u: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.apply_basis_right(u, j)).collect();
        Matrix::from_columns(self.field, self.dim, &cols).expect("square")
    }

    /// Matrix of `v -> v * u`.
    pub fn right_matrix(&self, u: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|i| self.apply_basis_left(i, u)).collect();
        Matrix::from_columns(self.field, self.dim, &cols).expect("square")
    }

    /// Linear combination `sum_t c_t * p_t` of products on the same space.
    pub fn combine(terms: &[(Scalar, &Product)]) -> Result<Product> {
        let first = terms.first().ok_or_else(|| Error::InvalidStructure("empty combination".into()))?.1;
        for (_, p) in terms {
            if p.dim != first.dim || p.field != first.field {
                return Err(Error::DimensionMismatch("combining products on different spaces".into()));
            }
        }
        let dim = first.dim;
        let field = first.field;
        Ok(Product::from_fn(field, dim, |i, j| {
            let mut v = zero_vector(field, dim);
            for (c, p) in terms {
                for (k, x) in &p.table[i * dim + j] {
                    v[*k] += &(c * x);
                }
            }
            v
        }))
    }

    /// `(x, y) -> y * x`.
    pub fn opposite(&self) -> Product {
        Product::from_fn(self.field, self.dim, |i, j| self.basis_product(j, i))
    }

    /// Structure constants as a flat list of canonical residues or fractions.
    pub fn to_entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        self.entries().map(|(i, j, k, c)| (i, j, k, c.clone())).collect()
    }

    /// Checks one identity family on all basis tuples.
    pub fn check_law(&self, law: Law) -> Report {
        let n = self.dim;
        match law {
            Law::Associativity => {
                let chunks = map_indices(n, |i| {
                    let mut out = Vec::new();
                    for j in 0..n {
                        let ij = self.basis_product(i, j);
                        for k in 0..n {
                            let lhs = self.apply_basis_right(&ij, k);
                            let rhs = self.apply_basis_left(i, &self.basis_product(j, k));
                            record(&mut out, "associativity", &[i, j, k], sub_vectors(&lhs, &rhs));
                        }
                    }
                    out
                });
                Report::from_violations(chunks.into_iter().flatten().collect())
            }
            Law::Lie => {
                let chunks = map_indices(n, |i| {
                    let mut out = Vec::new();
                    for j in i..n {
                        let ij = self.basis_product(i, j);
                        if i == j {
                            record(&mut out, "antisymmetry", &[i, i], ij);
                        } else {
                            let ji = self.basis_product(j, i);
                            let sum = ij.iter().zip(&ji).map(|(a, b)| a + b).collect();
                            record(&mut out, "antisymmetry", &[i, j], sum);
                        }
                    }
                    for j in 0..n {
                        for k in 0..n {
                            // [b_i,[b_j,b_k]] + [b_j,[b_k,b_i]] + [b_k,[b_i,b_j]]
                            let mut acc = self.apply_basis_left(i, &self.basis_product(j, k));
                            let t2 = self.apply_basis_left(j, &self.basis_product(k, i));
                            let t3 = self.apply_basis_left(k, &self.basis_product(i, j));
                            let one = self.field.one();
                            axpy(&mut acc, &one, &t2);
                            axpy(&mut acc, &one, &t3);
                            record(&mut out, "jacobi", &[i, j, k], acc);
                        }
                    }
                    out
                });
                Report::from_violations(chunks.into_iter().flatten().collect())
            }
        }
    }
}

/// An algebra: a product together with the law it is certified to satisfy.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Algebra {
    product: Product,
    kind: Kind,
    labels: Option<Vec<String>>,
}

/// Gram matrix of a symmetric bilinear form on the algebra's basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BilinearForm {
    pub gram: Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormKind {
    Killing,
    AssocTrace,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubstructureMode {
    Subalgebra,
    Ideal,
}

/// Result of the power-chain nilpotency test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Nilpotency {
    pub nilpotent: bool,
    /// Smallest `k` with `A^k = 0`, when nilpotent.
    pub index: Option<usize>,
}

/// Basis-independent invariants used in place of isomorphism tests.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub center_dim: usize,
    pub derived_dim: usize,
    pub semisimple: Option<bool>,
    pub nilpotent: Option<Nilpotency>,
    pub perfect: Option<bool>,
    #[serde(serialize_with = "crate::json::ser_opt_scalars")]
    pub form_char_poly: Option<Vec<Scalar>>,
}

impl Fingerprint {
    /// Entries that must agree between isomorphic algebras. The Gram
    /// characteristic polynomial depends on the basis and is left out.
    pub fn invariant_part(&self) -> (usize, usize, usize, Option<bool>, Option<Nilpotency>, Option<bool>) {
        (self.dim, self.center_dim, self.derived_dim, self.semisimple, self.nilpotent, self.perfect)
    }
}

impl Algebra {
    /// Tags `product` with `kind` after verifying the corresponding law.
    pub fn new(product: Product, kind: Kind) -> Result<Self> {
        let law = match kind {
            Kind::Associative => Some(Law::Associativity),
            Kind::Lie => Some(Law::Lie),
            Kind::General => None,
        };
        if let Some(law) = law {
            let report = product.check_law(law);
            if let Some(v) = report.first() {
                return Err(Error::LawViolation {
                    law: format!("{kind} law"),
                    witness: Box::new(v.clone()),
                });
            }
        }
        Ok(Algebra { product, kind, labels: None })
    }

    pub fn general(product: Product) -> Self {
        Algebra {
            product,
            kind: Kind::General,
            labels: None,
        }
    }

    pub fn from_structure_constants(
        field: FieldSpec,
        kind: Kind,
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        Algebra::new(Product::from_entries(field, dim, entries)?, kind)
    }

    /// Tries to certify a stronger kind; falls back to `General`.
    pub fn with_best_kind(product: Product, preferred: Kind) -> Self {
        Algebra::new(product.clone(), preferred).unwrap_or_else(|_| Algebra::general(product))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!("{} labels for dimension {}", labels.len(), self.dim())));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Index of the basis vector named `label`.
    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn product(&self) -> &Product {
        &self.product
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.product.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.product.field
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(self.field(), self.dim(), i)
    }

    pub fn multiply(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        self.product.check_vector(u)?;
        self.product.check_vector(v)?;
        Ok(self.product.apply(u, v))
    }

    pub fn check_identities(&self, law: Law) -> Report {
        self.product.check_law(law)
    }

    fn require_kind(&self, kind: Kind, op: &str) -> Result<()> {
        if self.kind != kind {
            return Err(Error::KindMismatch(format!("{op} needs a {kind} algebra, got {}", self.kind)));
        }
        Ok(())
    }

    /// `A^-` with bracket `xy - yx`.
    pub fn commutator_algebra(&self) -> Result<Algebra> {
        self.require_kind(Kind::Associative, "commutator algebra")?;
        let p = &self.product;
        let bracket = Product::from_fn(self.field(), self.dim(), |i, j| sub_vectors(&p.basis_product(i, j), &p.basis_product(j, i)));
        let mut out = Algebra::new(bracket, Kind::Lie)?;
        out.labels = self.labels.clone();
        Ok(out)
    }

    fn check_subspace(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "subspace of a {}-dimensional space in a {}-dimensional algebra",
                s.ambient_dim(),
                self.dim()
            )));
        }
        if s.field() != self.field() {
            return Err(Error::FieldMismatch(format!("subspace over {} in algebra over {}", s.field(), self.field())));
        }
        Ok(())
    }

    /// First basis pair `(a, b)` of `s` whose product leaves `s`.
    pub fn closure_witness(&self, s: &Subspace) -> Result<Option<(usize, usize)>> {
        self.check_subspace(s)?;
        let basis = s.basis_vectors();
        for (a, u) in basis.iter().enumerate() {
            for (b, v) in basis.iter().enumerate() {
                if !s.contains(&self.product.apply(u, v)) {
                    return Ok(Some((a, b)));
                }
            }
        }
        Ok(None)
    }

    pub fn substructure_test(&self, s: &Subspace, mode: SubstructureMode) -> Result<bool> {
        self.check_subspace(s)?;
        match mode {
            SubstructureMode::Subalgebra => Ok(self.closure_witness(s)?.is_none()),
            SubstructureMode::Ideal => Ok(self.ideal_witness(s)?.is_none()),
        }
    }

    /// A basis index `k`, a basis vector `u` of `s` and a product `b_k u`
    /// (or `u b_k`) that leaves `s`, if `s` is not an ideal.
    pub fn ideal_witness(&self, s: &Subspace) -> Result<Option<(usize, Vector, Vector)>> {
        self.check_subspace(s)?;
        for i in 0..self.dim() {
            for u in s.basis_vectors() {
                let left = self.product.apply_basis_left(i, &u);
                if !s.contains(&left) {
                    return Ok(Some((i, u, left)));
                }
                if self.kind != Kind::Lie {
                    let right = self.product.apply_basis_right(&u, i);
                    if !s.contains(&right) {
                        return Ok(Some((i, u, right)));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Elements annihilating `s` under the bracket (Lie) or commuting with
    /// it (other kinds).
    pub fn centralizer(&self, s: &Subspace) -> Result<Subspace> {
        self.check_subspace(s)?;
        let n = self.dim();
        let mut rows: Vec<Vector> = Vec::new();
        for v in s.basis_vectors() {
            // Column i is b_i * v (- v * b_i).
            let cols: Vec<Vector> = (0..n)
                .map(|i| {
                    let left = self.product.apply_basis_left(i, &v);
                    if self.kind == Kind::Lie {
                        left
                    } else {
                        sub_vectors(&left, &self.product.apply_basis_right(&v, i))
                    }
                })
                .collect();
            let m = Matrix::from_columns(self.field(), n, &cols)?;
            rows.extend(m.row_vectors());
        }
        Ok(Matrix::from_rows(self.field(), n, &rows)?.kernel())
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&Subspace::full(self.field(), self.dim())).expect("full space matches")
    }

    /// Span of all products `b_i * b_j`.
    pub fn derived_subspace(&self) -> Subspace {
        let n = self.dim();
        Subspace::span(self.field(), n, (0..n * n).map(|idx| self.product.basis_product(idx / n, idx % n)))
            .expect("products live in the algebra")
    }

    pub fn left_mult_matrices(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|i| self.product.left_matrix(&self.basis_vector(i))).collect()
    }

    /// Killing form `tr(ad x ad y)` or associative trace form `tr(L_x L_y)`.
    pub fn bilinear_form(&self, kind: FormKind) -> Result<BilinearForm> {
        match kind {
            FormKind::Killing => self.require_kind(Kind::Lie, "Killing form")?,
            FormKind::AssocTrace => self.require_kind(Kind::Associative, "associative trace form")?,
        }
        let mats = self.left_mult_matrices();
        let n = self.dim();
        let field = self.field();
        let gram = Matrix::from_fn(field, n, n, |i, j| {
            let (a, b) = (&mats[i], &mats[j]);
            let mut t = field.zero();
            for k in 0..n {
                for l in 0..n {
                    let x = a.get(k, l);
                    if !x.is_zero() {
                        let y = b.get(l, k);
                        if !y.is_zero() {
                            t += &(x * y);
                        }
                    }
                }
            }
            t
        });
        Ok(BilinearForm { gram })
    }

    fn require_char_zero(&self, op: &str) -> Result<()> {
        if !self.field().is_rationals() {
            return Err(Error::Unsupported(format!("{op} is only sound in characteristic zero (field {})", self.field())));
        }
        Ok(())
    }

    /// Cartan's criterion for Lie algebras, trace-form radical for
    /// associative algebras. Rationals only.
    pub fn is_semisimple(&self) -> Result<bool> {
        self.require_char_zero("semisimplicity")?;
        match self.kind {
            Kind::Lie => Ok(!self.bilinear_form(FormKind::Killing)?.gram.det()?.is_zero()),
            Kind::Associative => Ok(self.radical_assoc()?.is_zero()),
            Kind::General => Err(Error::KindMismatch("semisimplicity needs a Lie or associative algebra".into())),
        }
    }

    /// Kernel of the associative trace form; the radical in characteristic 0.
    pub fn radical_assoc(&self) -> Result<Subspace> {
        self.require_kind(Kind::Associative, "radical")?;
        self.require_char_zero("radical")?;
        Ok(self.bilinear_form(FormKind::AssocTrace)?.gram.kernel())
    }

    /// Descending chain `A ⊇ A^2 ⊇ ...` with `A^{k+1} = A^k A`.
    pub fn is_nilpotent_assoc(&self) -> Result<Nilpotency> {
        self.require_kind(Kind::Associative, "associative nilpotency")?;
        Ok(self.power_chain())
    }

    fn power_chain(&self) -> Nilpotency {
        let n = self.dim();
        let mut power = Subspace::full(self.field(), n);
        let mut k = 1;
        loop {
            if power.is_zero() {
                return Nilpotency {
                    nilpotent: true,
                    index: Some(k),
                };
            }
            let basis = power.basis_vectors();
            let next = Subspace::span(
                self.field(),
                n,
                basis.iter().flat_map(|u| (0..n).map(move |j| self.product.apply_basis_right(u, j))),
            )
            .expect("products live in the algebra");
            if next == power {
                return Nilpotency {
                    nilpotent: false,
                    index: None,
                };
            }
            power = next;
            k += 1;
        }
    }

    pub fn is_perfect_lie(&self) -> Result<bool> {
        self.require_kind(Kind::Lie, "perfectness")?;
        Ok(self.derived_subspace().is_full())
    }

    pub fn is_abelian(&self) -> bool {
        self.product.is_zero()
    }

    /// Block-diagonal sum; `a` occupies the first `a.dim()` coordinates.
    pub fn direct_sum(a: &Algebra, b: &Algebra) -> Result<Algebra> {
        if a.field() != b.field() {
            return Err(Error::FieldMismatch(format!("direct sum over {} and {}", a.field(), b.field())));
        }
        if a.kind != b.kind {
            return Err(Error::KindMismatch(format!("direct sum of {} and {} algebras", a.kind, b.kind)));
        }
        let (m, n) = (a.dim(), b.dim());
        let entries = a
            .product
            .to_entries()
            .into_iter()
            .chain(b.product.to_entries().into_iter().map(|(i, j, k, c)| (i + m, j + m, k + m, c)));
        let product = Product::from_entries(a.field(), m + n, entries)?;
        let mut out = Algebra::new(product, a.kind)?;
        if let (Some(la), Some(lb)) = (&a.labels, &b.labels) {
            out.labels = Some(la.iter().chain(lb).cloned().collect());
        }
        Ok(out)
    }

    /// The subalgebra `s` in its own canonical basis.
    pub fn restrict(&self, s: &Subspace) -> Result<Algebra> {
        if let Some((a, b)) = self.closure_witness(s)? {
            return Err(Error::NotSubalgebra(a, b));
        }
        let basis = s.basis_vectors();
        let d = basis.len();
        let product = Product::from_fn(self.field(), d, |a, b| {
            s.coordinates(&self.product.apply(&basis[a], &basis[b])).expect("closed under the product")
        });
        Algebra::new(product, self.kind)
    }

    /// Image of the basis change: the algebra transported along `basis`
    /// (columns express new basis vectors in old coordinates).
    pub fn change_basis(&self, basis: &Matrix) -> Result<Algebra> {
        let n = self.dim();
        if basis.rows() != n || basis.cols() != n {
            return Err(Error::DimensionMismatch("basis change must be square of the algebra dimension".into()));
        }
        let span = Subspace::span(self.field(), n, basis.columns())?;
        if !span.is_full() {
            return Err(Error::InvalidStructure("basis change matrix is singular".into()));
        }
        let cols = basis.columns();
        let product = Product::from_fn(self.field(), n, |i, j| {
            let v = self.product.apply(&cols[i], &cols[j]);
            basis.solve(&v).expect("invertible basis")
        });
        Algebra::new(product, self.kind)
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let char_zero = self.field().is_rationals();
        let semisimple = match self.kind {
            Kind::General => None,
            _ if !char_zero => None,
            _ => self.is_semisimple().ok(),
        };
        let nilpotent = (self.kind == Kind::Associative).then(|| self.power_chain());
        let perfect = (self.kind == Kind::Lie).then(|| self.derived_subspace().is_full());
        let form = match self.kind {
            Kind::Lie => self.bilinear_form(FormKind::Killing).ok(),
            Kind::Associative => self.bilinear_form(FormKind::AssocTrace).ok(),
            Kind::General => None,
        };
        Fingerprint {
            dim: self.dim(),
            center_dim: self.center().dim(),
            derived_dim: self.derived_subspace().dim(),
            semisimple,
            nilpotent,
            perfect,
            form_char_poly: form.map(|f| f.gram.char_poly().expect("square Gram matrix")),
        }
    }

    /// A unit vector `e` with `e x = x e = x` for all `x`, if one exists.
    pub fn find_unit(&self) -> Option<Vector> {
        let n = self.dim();
        let field = self.field();
        // Unknown u: sum_k u_k (b_k b_i) = b_i and sum_k u_k (b_i b_k) = b_i.
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for i in 0..n {
            let left = Matrix::from_columns(field, n, &(0..n).map(|k| self.product.basis_product(k, i)).collect::<Vec<_>>())
                .expect("square");
            let right = Matrix::from_columns(field, n, &(0..n).map(|k| self.product.basis_product(i, k)).collect::<Vec<_>>())
                .expect("square");
            rows.extend(left.row_vectors());
            rows.extend(right.row_vectors());
            let e = unit_vector(field, n, i);
            rhs.extend(e.iter().cloned());
            rhs.extend(e);
        }
        let m = Matrix::from_rows(field, n, &rows).expect("uniform rows");
        let u = m.solve(&rhs)?;
        // A two-sided unit is unique whenever it exists.
        Some(u)
    }

    pub fn is_unit(&self, u: &[Scalar]) -> bool {
        (0..self.dim()).all(|i| {
            let e = self.basis_vector(i);
            self.product.apply(u, &e) == e && self.product.apply(&e, u) == e
        })
    }

    /// Violations of `phi(x y) = phi(x) phi(y)` for a linear map `phi: self -> target`.
    pub fn homomorphism_violations(&self, target: &Algebra, phi: &Matrix, law: &str) -> Vec<Violation> {
        let n = self.dim();
        let images: Vec<Vector> = (0..n).map(|i| phi.mul_vec(&self.basis_vector(i))).collect();
        let chunks = map_indices(n, |i| {
            let mut out = Vec::new();
            for j in 0..n {
                let lhs = phi.mul_vec(&self.product.basis_product(i, j));
                let rhs = target.product.apply(&images[i], &images[j]);
                record(&mut out, law, &[i, j], sub_vectors(&lhs, &rhs));
            }
            out
        });
        chunks.into_iter().flatten().collect()
    }
}

/// Whether every vector of `s` is killed by the product with every vector of `t` (both orders).
pub fn products_vanish(a: &Algebra, s: &Subspace, t: &Subspace) -> bool {
    let tb = t.basis_vectors();
    s.basis_vectors().iter().all(|u| {
        tb.iter()
            .all(|v| is_zero_vector(&a.product.apply(u, v)) && is_zero_vector(&a.product.apply(v, u)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::int_vector;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn upper_triangular_2() -> Algebra {
        catalog::upper_triangular(2, Q).unwrap()
    }

    #[test]
    fn multiply_examples() {
        let sl2 = catalog::sl2(Q);
        let (e, h) = (sl2.basis_vector(0), sl2.basis_vector(1));
        assert_eq!(sl2.multiply(&h, &e).unwrap(), int_vector(Q, &[2, 0, 0]));
        let z = zero_vector(Q, 3);
        assert_eq!(sl2.multiply(&z, &h).unwrap(), z);
        let m2 = catalog::make_matrix_algebra(2, Q).unwrap();
        // e12 * e21 = e11
        assert_eq!(m2.multiply(&m2.basis_vector(1), &m2.basis_vector(2)).unwrap(), m2.basis_vector(0));
        assert!(sl2.multiply(&int_vector(Q, &[1, 0]), &h).is_err());
    }

    #[test]
    fn identity_checks() {
        assert!(catalog::sl2(Q).check_identities(Law::Lie).pass());
        let one = Product::from_entries(Q, 1, [(0, 0, 0, Q.one())]).unwrap();
        assert!(one.check_law(Law::Associativity).pass());

        let sl2 = catalog::sl2(Q);
        let broken: Vec<_> = sl2
            .product()
            .to_entries()
            .into_iter()
            .map(|(i, j, k, c)| if (i, j, k) == (1, 0, 0) { (i, j, k, Q.int(3)) } else { (i, j, k, c) })
            .collect();
        let p = Product::from_entries(Q, 3, broken).unwrap();
        let report = p.check_law(Law::Lie);
        assert!(!report.pass());
        let anti: Vec<_> = report.for_law("antisymmetry").collect();
        assert_eq!(anti.len(), 1);
        assert_eq!(anti[0].indices, vec![0, 1]);
        assert_eq!(anti[0].residual, int_vector(Q, &[1, 0, 0]));
        assert!(matches!(Algebra::new(p, Kind::Lie), Err(Error::LawViolation { .. })));
    }

    #[test]
    fn duplicate_and_out_of_range_constants_rejected() {
        assert!(Product::from_entries(Q, 2, [(0, 0, 0, Q.one()), (0, 0, 0, Q.one())]).is_err());
        assert!(Product::from_entries(Q, 2, [(0, 2, 0, Q.one())]).is_err());
    }

    #[test]
    fn commutator_examples() {
        let m2 = catalog::make_matrix_algebra(2, Q).unwrap();
        let gl2 = m2.commutator_algebra().unwrap();
        // [e12, e21] = e11 - e22
        assert_eq!(gl2.multiply(&gl2.basis_vector(1), &gl2.basis_vector(2)).unwrap(), int_vector(Q, &[1, 0, 0, -1]));
        let q1 = catalog::make_matrix_algebra(1, Q).unwrap().commutator_algebra().unwrap();
        assert!(q1.is_abelian());
        let ut = upper_triangular_2().commutator_algebra().unwrap();
        assert_eq!(ut.center().dim(), 1);
        assert_eq!(ut.derived_subspace().dim(), 1);
        assert!(catalog::sl2(Q).commutator_algebra().is_err());
    }

    #[test]
    fn substructure_examples() {
        let sl2 = catalog::sl2(Q);
        let eh = Subspace::coordinate(Q, 3, &[0, 1]);
        assert!(sl2.substructure_test(&eh, SubstructureMode::Subalgebra).unwrap());
        assert!(!sl2.substructure_test(&eh, SubstructureMode::Ideal).unwrap());
        let full = Subspace::full(Q, 3);
        assert!(sl2.substructure_test(&full, SubstructureMode::Subalgebra).unwrap());
        assert!(sl2.substructure_test(&full, SubstructureMode::Ideal).unwrap());
        // upper triangular basis (e11, e12, e22); e12 spans an ideal
        let ut = upper_triangular_2();
        let e12 = Subspace::coordinate(Q, 3, &[1]);
        assert!(ut.substructure_test(&e12, SubstructureMode::Ideal).unwrap());
        assert!(sl2.substructure_test(&Subspace::full(Q, 2), SubstructureMode::Ideal).is_err());
    }

    #[test]
    fn centralizer_examples() {
        let sl2 = catalog::sl2(Q);
        assert!(sl2.center().is_zero());
        assert!(catalog::abelian_lie(3, Q).center().is_full());
        let h = Subspace::coordinate(Q, 3, &[1]);
        assert_eq!(sl2.centralizer(&h).unwrap(), h);
        let m2 = catalog::make_matrix_algebra(2, Q).unwrap();
        assert_eq!(m2.center(), Subspace::span(Q, 4, [int_vector(Q, &[1, 0, 0, 1])]).unwrap());
    }

    #[test]
    fn forms_and_semisimplicity() {
        let sl2 = catalog::sl2(Q);
        let k = sl2.bilinear_form(FormKind::Killing).unwrap().gram;
        assert_eq!(k, Matrix::from_ints(Q, &[&[0, 0, 4], &[0, 8, 0], &[4, 0, 0]]));
        assert_eq!(k.det().unwrap(), Q.int(-128));
        assert!(sl2.is_semisimple().unwrap());
        assert!(catalog::abelian_lie(2, Q).bilinear_form(FormKind::Killing).unwrap().gram.is_zero());
        assert!(!catalog::abelian_lie(1, Q).is_semisimple().unwrap());
        let q1 = catalog::make_matrix_algebra(1, Q).unwrap();
        assert_eq!(q1.bilinear_form(FormKind::AssocTrace).unwrap().gram, Matrix::identity(Q, 1));
        assert!(sl2.bilinear_form(FormKind::AssocTrace).is_err());

        let ut = upper_triangular_2();
        assert!(!ut.is_semisimple().unwrap());
        assert_eq!(ut.radical_assoc().unwrap(), Subspace::coordinate(Q, 3, &[1]));

        let f5 = FieldSpec::prime(5).unwrap();
        assert!(matches!(catalog::sl2(f5).is_semisimple(), Err(Error::Unsupported(_))));
    }

    #[test]
    fn radical_examples() {
        assert!(catalog::make_matrix_algebra(2, Q).unwrap().radical_assoc().unwrap().is_zero());
        let sut2 = catalog::strictly_upper_triangular(2, Q).unwrap();
        assert_eq!(sut2.dim(), 1);
        assert!(sut2.radical_assoc().unwrap().is_full());
    }

    #[test]
    fn nilpotency_examples() {
        let sut3 = catalog::strictly_upper_triangular(3, Q).unwrap();
        assert_eq!(sut3.is_nilpotent_assoc().unwrap(), Nilpotency { nilpotent: true, index: Some(3) });
        assert!(!catalog::make_matrix_algebra(2, Q).unwrap().is_nilpotent_assoc().unwrap().nilpotent);
        let zero = Algebra::new(Product::zero(Q, 2), Kind::Associative).unwrap();
        let nil = zero.is_nilpotent_assoc().unwrap();
        assert!(nil.nilpotent && nil.index.unwrap() <= 2);
    }

    #[test]
    fn perfectness_examples() {
        assert!(catalog::sl2(Q).is_perfect_lie().unwrap());
        assert!(!catalog::abelian_lie(2, Q).is_perfect_lie().unwrap());
        assert!(catalog::make_semidirect_sln_vn(2, Q).unwrap().is_perfect_lie().unwrap());
    }

    #[test]
    fn direct_sum_examples() {
        let sl2 = catalog::sl2(Q);
        let d = Algebra::direct_sum(&sl2, &sl2).unwrap();
        assert_eq!(d.dim(), 6);
        for idx in [[0, 1, 2], [3, 4, 5]] {
            let s = Subspace::coordinate(Q, 6, &idx);
            assert!(d.substructure_test(&s, SubstructureMode::Ideal).unwrap());
        }
        let empty = Algebra::new(Product::zero(Q, 0), Kind::Lie).unwrap();
        assert_eq!(Algebra::direct_sum(&sl2, &empty).unwrap().product(), sl2.product());
        let qq = catalog::diagonal(2, Q).unwrap();
        assert_eq!(qq.bilinear_form(FormKind::AssocTrace).unwrap().gram, Matrix::identity(Q, 2));
        assert!(qq.is_semisimple().unwrap());
        assert!(Algebra::direct_sum(&sl2, &qq).is_err());
    }

    #[test]
    fn restrict_examples() {
        let sl2 = catalog::sl2(Q);
        let b = sl2.restrict(&Subspace::coordinate(Q, 3, &[0, 1])).unwrap();
        // basis (e, h): [h, e] = 2e
        assert_eq!(b.multiply(&b.basis_vector(1), &b.basis_vector(0)).unwrap(), int_vector(Q, &[2, 0]));
        assert_eq!(sl2.restrict(&Subspace::full(Q, 3)).unwrap().product(), sl2.product());
        let m2 = catalog::make_matrix_algebra(2, Q).unwrap();
        let ut = m2.restrict(&Subspace::coordinate(Q, 4, &[0, 1, 3])).unwrap();
        assert_eq!(ut.product(), upper_triangular_2().product());
        let err = sl2.restrict(&Subspace::coordinate(Q, 3, &[0, 2])).unwrap_err();
        assert!(matches!(err, Error::NotSubalgebra(_, _)));
    }

    #[test]
    fn fingerprint_examples() {
        let fp = catalog::sl2(Q).fingerprint();
        assert_eq!((fp.dim, fp.center_dim, fp.derived_dim), (3, 0, 3));
        assert_eq!(fp.semisimple, Some(true));
        assert_eq!(fp.perfect, Some(true));
        assert_eq!(fp.nilpotent, None);
        let fp = catalog::abelian_lie(2, Q).fingerprint();
        assert_eq!((fp.dim, fp.center_dim, fp.derived_dim), (2, 2, 0));
        assert_eq!(fp.semisimple, Some(false));
        assert_eq!(fp.perfect, Some(false));
    }

    #[test]
    fn unit_detection() {
        let m2 = catalog::make_matrix_algebra(2, Q).unwrap();
        assert_eq!(m2.find_unit().unwrap(), int_vector(Q, &[1, 0, 0, 1]));
        assert!(catalog::strictly_upper_triangular(3, Q).unwrap().find_unit().is_none());
        assert_eq!(catalog::diagonal(2, Q).unwrap().find_unit().unwrap(), int_vector(Q, &[1, 1]));
    }
}
