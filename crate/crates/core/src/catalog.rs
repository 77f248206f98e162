//! Exact constructors for the algebras and embeddings used throughout the crate.

use crate::algebra::{Algebra, Kind, Product, SubstructureMode};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{axpy, sub_vectors, zero_vector, Echelon, Matrix, Subspace, Vector};
use crate::par::map_indices;

/// A subalgebra of `target` together with the name of what it realizes.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub source_name: String,
    pub target: Algebra,
    pub image: Subspace,
}

impl Embedding {
    pub fn new(source_name: impl Into<String>, target: Algebra, image: Subspace) -> Result<Self> {
        if !target.substructure_test(&image, SubstructureMode::Subalgebra)? {
            let (a, b) = target.closure_witness(&image)?.expect("not closed");
            return Err(Error::NotSubalgebra(a, b));
        }
        Ok(Embedding {
            source_name: source_name.into(),
            target,
            image,
        })
    }

    /// The embedded algebra in its own basis.
    pub fn source(&self) -> Algebra {
        self.target.restrict(&self.image).expect("image is a subalgebra")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalFamily {
    Gl,
    Sl,
    So,
    Sp,
}

fn unit_matrix(field: FieldSpec, n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(field, n, n);
    m.set(i, j, field.one());
    m
}

fn flatten(m: &Matrix) -> Vector {
    m.entries().to_vec()
}

fn labels(names: impl IntoIterator<Item = String>) -> Vec<String> {
    names.into_iter().collect()
}

/// `M_n` with matrix units `e_ij` in row-major order; `e_ij e_kl = δ_jk e_il`.
pub fn make_matrix_algebra(n: usize, field: FieldSpec) -> Result<Algebra> {
    if n < 1 {
        return Err(Error::InvalidStructure("matrix algebra needs n >= 1".into()));
    }
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                entries.push((i * n + j, j * n + l, i * n + l, field.one()));
            }
        }
    }
    let names = (0..n * n).map(|idx| format!("e{}{}", idx / n + 1, idx % n + 1));
    Algebra::from_structure_constants(field, Kind::Associative, n * n, entries)?.with_labels(labels(names))
}

fn matrix_subalgebra(n: usize, field: FieldSpec, keep: impl Fn(usize, usize) -> bool) -> Result<Algebra> {
    let m = make_matrix_algebra(n, field)?;
    let idx: Vec<usize> = (0..n * n).filter(|&x| keep(x / n, x % n)).collect();
    let names: Vec<String> = idx.iter().map(|&x| m.labels().unwrap()[x].clone()).collect();
    m.restrict(&Subspace::coordinate(field, n * n, &idx))?.with_labels(names)
}

/// Upper-triangular `n x n` matrices, basis `e_ij` (i <= j) row-major.
pub fn upper_triangular(n: usize, field: FieldSpec) -> Result<Algebra> {
    matrix_subalgebra(n, field, |i, j| i <= j)
}

/// Strictly upper-triangular `n x n` matrices; nilpotent.
pub fn strictly_upper_triangular(n: usize, field: FieldSpec) -> Result<Algebra> {
    matrix_subalgebra(n, field, |i, j| i < j)
}

/// `K^n` with componentwise product.
pub fn diagonal(n: usize, field: FieldSpec) -> Result<Algebra> {
    let entries = (0..n).map(|i| (i, i, i, field.one()));
    Algebra::from_structure_constants(field, Kind::Associative, n, entries)
}

pub fn abelian_lie(n: usize, field: FieldSpec) -> Algebra {
    Algebra::new(Product::zero(field, n), Kind::Lie).expect("zero bracket is a Lie bracket")
}

/// Lie algebra spanned by `basis` (linearly independent matrices closed
/// under the commutator), in that basis.
pub fn lie_from_matrices(field: FieldSpec, basis: &[Matrix]) -> Result<Algebra> {
    let d = basis.len();
    let Some(size) = basis.first().map(Matrix::rows) else {
        return Algebra::new(Product::zero(field, 0), Kind::Lie);
    };
    let columns: Vec<Vector> = basis.iter().map(flatten).collect();
    let coords = Matrix::from_columns(field, size * size, &columns)?;
    if coords.rank() != d {
        return Err(Error::InvalidStructure("matrix basis is linearly dependent".into()));
    }
    let brackets: Vec<Option<Vector>> = map_indices(d * d, |idx| {
        let (a, b) = (&basis[idx / d], &basis[idx % d]);
        let c = a.mul(b).and_then(|ab| ab.sub(&b.mul(a)?)).ok()?;
        coords.solve(&flatten(&c))
    });
    let mut table = Vec::with_capacity(d * d);
    for (idx, v) in brackets.into_iter().enumerate() {
        match v {
            Some(v) => table.push(v),
            None => {
                return Err(Error::NotSubalgebra(idx / d, idx % d));
            }
        }
    }
    Algebra::new(Product::from_fn(field, d, |i, j| table[i * d + j].clone()), Kind::Lie)
}

/// Standard matrix basis of a classical Lie algebra.
///
/// `n` is the matrix size for every family; `Sp` needs `n` even and uses
/// `J = [[0, I], [-I, 0]]`. The `sl` basis lists `E_ij` (i < j), then
/// `H_i = E_ii - E_{i+1,i+1}`, then `E_ij` (i > j); for `n = 2` this is `(e, h, f)`.
pub fn classical_matrices(family: ClassicalFamily, n: usize, field: FieldSpec) -> Result<(Vec<Matrix>, Vec<String>)> {
    let e = |i, j| unit_matrix(field, n, i, j);
    let mut mats = Vec::new();
    let mut names = Vec::new();
    match family {
        ClassicalFamily::Gl => {
            if n < 1 {
                return Err(Error::InvalidStructure("gl(n) needs n >= 1".into()));
            }
            for i in 0..n {
                for j in 0..n {
                    mats.push(e(i, j));
                    names.push(format!("E{}{}", i + 1, j + 1));
                }
            }
        }
        ClassicalFamily::Sl => {
            if n < 2 {
                return Err(Error::InvalidStructure("sl(n) needs n >= 2".into()));
            }
            for i in 0..n {
                for j in i + 1..n {
                    mats.push(e(i, j));
                    names.push(format!("E{}{}", i + 1, j + 1));
                }
            }
            for i in 0..n - 1 {
                mats.push(e(i, i).sub(&e(i + 1, i + 1))?);
                names.push(format!("H{}", i + 1));
            }
            for i in 0..n {
                for j in 0..i {
                    mats.push(e(i, j));
                    names.push(format!("E{}{}", i + 1, j + 1));
                }
            }
            if n == 2 {
                names = vec!["e".into(), "h".into(), "f".into()];
            }
        }
        ClassicalFamily::So => {
            if n < 1 {
                return Err(Error::InvalidStructure("so(n) needs n >= 1".into()));
            }
            for i in 0..n {
                for j in i + 1..n {
                    mats.push(e(i, j).sub(&e(j, i))?);
                    names.push(format!("A{}{}", i + 1, j + 1));
                }
            }
        }
        ClassicalFamily::Sp => {
            if n < 2 || n % 2 != 0 {
                return Err(Error::InvalidStructure(format!("sp needs an even matrix size, got {n}")));
            }
            let m = n / 2;
            // [[A, B], [C, -A^T]] with B, C symmetric.
            for i in 0..m {
                for j in 0..m {
                    mats.push(e(i, j).sub(&e(m + j, m + i))?);
                    names.push(format!("A{}{}", i + 1, j + 1));
                }
            }
            for i in 0..m {
                for j in i..m {
                    let b = if i == j { e(i, m + i) } else { e(i, m + j).add(&e(j, m + i))? };
                    mats.push(b);
                    names.push(format!("B{}{}", i + 1, j + 1));
                }
            }
            for i in 0..m {
                for j in i..m {
                    let c = if i == j { e(m + i, i) } else { e(m + i, j).add(&e(m + j, i))? };
                    mats.push(c);
                    names.push(format!("C{}{}", i + 1, j + 1));
                }
            }
        }
    }
    Ok((mats, names))
}

pub fn make_classical_lie(family: ClassicalFamily, n: usize, field: FieldSpec) -> Result<Algebra> {
    let (mats, names) = classical_matrices(family, n, field)?;
    lie_from_matrices(field, &mats)?.with_labels(names)
}

/// `sl(2)` in the basis `(e, h, f)`.
pub fn sl2(field: FieldSpec) -> Algebra {
    make_classical_lie(ClassicalFamily::Sl, 2, field).expect("sl(2) is valid")
}

/// Position of `E_ij - E_ji` (i < j) in the `so(n)` basis.
pub fn so_index(n: usize, i: usize, j: usize) -> usize {
    assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// One Cayley-Dickson doubling: `(a,b)(c,d) = (ac - d*b, da + bc*)`, with
/// conjugation `(a,b)* = (a*, -b)`. `conj[i]` is the sign of `b_i` under `*`.
fn cayley_dickson(p: &Product, conj: &[i64]) -> (Product, Vec<i64>) {
    let m = p.dim();
    let field = p.field();
    let star = |v: &[Scalar]| -> Vector { v.iter().zip(conj).map(|(x, &s)| x * &field.int(s)).collect() };
    let split = |idx: usize| -> (Vector, Vector) {
        let mut a = zero_vector(field, m);
        let mut b = zero_vector(field, m);
        if idx < m {
            a[idx] = field.one();
        } else {
            b[idx - m] = field.one();
        }
        (a, b)
    };
    let doubled = Product::from_fn(field, 2 * m, |x, y| {
        let (a, b) = split(x);
        let (c, d) = split(y);
        let first = sub_vectors(&p.apply(&a, &c), &p.apply(&star(&d), &b));
        let mut second = p.apply(&d, &a);
        axpy(&mut second, &field.one(), &p.apply(&b, &star(&c)));
        first.into_iter().chain(second).collect()
    });
    let signs = conj.iter().copied().chain(std::iter::repeat(-1).take(m)).collect();
    (doubled, signs)
}

/// Octonions `e_0 .. e_7` from three doublings of the ground field; `e_0` is the unit.
pub fn make_octonions(field: FieldSpec) -> Result<Algebra> {
    if field.characteristic() == 2 {
        return Err(Error::Unsupported("octonions need characteristic != 2".into()));
    }
    let mut p = Product::from_entries(field, 1, [(0, 0, 0, field.one())])?;
    let mut conj = vec![1];
    for _ in 0..3 {
        (p, conj) = cayley_dickson(&p, &conj);
    }
    let names = (0..8).map(|i| format!("e{i}"));
    Algebra::general(p).with_labels(labels(names))
}

/// Linear equations on `D` (8x8, row-major unknowns `D[r][c]`, with
/// `D(e_c) = sum_r D[r][c] e_r`) expressing `D(xy) = D(x)y + xD(y)` on basis pair `(i, j)`.
fn derivation_equations(p: &Product, i: usize, j: usize) -> Vec<Vector> {
    let n = p.dim();
    let field = p.field();
    let mut eqs = vec![zero_vector(field, n * n); n];
    // D(e_i e_j): component r gets sum_k m_ij^k D[r][k]
    let ij = p.basis_product(i, j);
    for (k, c) in ij.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (r, eq) in eqs.iter_mut().enumerate() {
            eq[r * n + k] += c;
        }
    }
    for l in 0..n {
        // -D[l][i] (e_l e_j) - D[l][j] (e_i e_l)
        let lj = p.basis_product(l, j);
        let il = p.basis_product(i, l);
        for r in 0..n {
            if !lj[r].is_zero() {
                eqs[r][l * n + i] -= &lj[r];
            }
            if !il[r].is_zero() {
                eqs[r][l * n + j] -= &il[r];
            }
        }
    }
    eqs
}

/// Derivation algebra of an algebra, as `dim x dim` matrices.
pub fn derivations(a: &Algebra) -> Result<Vec<Matrix>> {
    let n = a.dim();
    let p = a.product();
    let blocks = map_indices(n * n, |idx| derivation_equations(p, idx / n, idx % n));
    let mut ech = Echelon::new(a.field(), n * n);
    for eq in blocks.into_iter().flatten() {
        ech.insert(eq);
    }
    ech.kernel()
        .basis_vectors()
        .into_iter()
        .map(|v| Matrix::new(a.field(), n, n, v))
        .collect()
}

/// `Der(O)` acting on the imaginary octonions, as a subalgebra of `so(7)`.
pub fn make_g2(field: FieldSpec) -> Result<Embedding> {
    if !field.is_rationals() {
        return Err(Error::Unsupported("g2 is built over the rationals".into()));
    }
    let oct = make_octonions(field)?;
    let ders = derivations(&oct)?;
    let so7 = make_classical_lie(ClassicalFamily::So, 7, field)?;
    let mut images = Vec::with_capacity(ders.len());
    for d in &ders {
        if (0..8).any(|r| !d.get(r, 0).is_zero() || !d.get(0, r).is_zero()) {
            return Err(Error::Inconsistent("derivation does not preserve the unit and Im O".into()));
        }
        let mut v = zero_vector(field, 21);
        for i in 0..7 {
            for j in 0..7 {
                let x = d.get(i + 1, j + 1);
                let y = d.get(j + 1, i + 1);
                if &(x + y) != &field.zero() {
                    return Err(Error::Inconsistent("derivation is not skew on Im O".into()));
                }
                if i < j {
                    v[so_index(7, i, j)] = x.clone();
                }
            }
        }
        images.push(v);
    }
    let image = Subspace::span(field, 21, images)?;
    Embedding::new("g2", so7, image)
}

/// `sl_n ⋉ V(n)`: the `sl_n` basis first, then `v_1 .. v_n` with `[X, v] = Xv`.
pub fn make_semidirect_sln_vn(n: usize, field: FieldSpec) -> Result<Algebra> {
    if n < 2 {
        return Err(Error::InvalidStructure("sl_n ⋉ V(n) needs n >= 2".into()));
    }
    let sl = make_classical_lie(ClassicalFamily::Sl, n, field)?;
    let (mats, mut names) = classical_matrices(ClassicalFamily::Sl, n, field)?;
    let d = sl.dim();
    let mut entries = sl.product().to_entries();
    for (a, x) in mats.iter().enumerate() {
        for k in 0..n {
            for r in 0..n {
                let c = x.get(r, k);
                if !c.is_zero() {
                    entries.push((a, d + k, d + r, c.clone()));
                    entries.push((d + k, a, d + r, -c));
                }
            }
        }
    }
    names.extend((1..=n).map(|k| format!("v{k}")));
    Algebra::from_structure_constants(field, Kind::Lie, d + n, entries)?.with_labels(names)
}

fn so_block(n: usize, field: FieldSpec, pairs: impl IntoIterator<Item = (usize, usize)>) -> Subspace {
    let idx: Vec<usize> = pairs.into_iter().map(|(i, j)| so_index(n, i, j)).collect();
    Subspace::coordinate(field, n * (n - 1) / 2, &idx)
}

/// `so(k)` in `so(n)` as the upper-left block (fixing the last `n - k` coordinates).
pub fn embed_so_stabilizer(k: usize, n: usize, field: FieldSpec) -> Result<Embedding> {
    if k < 1 || k > n {
        return Err(Error::InvalidStructure(format!("so({k}) does not embed in so({n}) as a block")));
    }
    let so = make_classical_lie(ClassicalFamily::So, n, field)?;
    let pairs = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j)));
    Embedding::new(format!("so({k})"), so, so_block(n, field, pairs))
}

/// `so(k) ⊕ so(2)` in `so(n)`: the upper-left block plus the rotation in the last two coordinates.
pub fn embed_so_stabilizer_with_torus(k: usize, n: usize, field: FieldSpec) -> Result<Embedding> {
    if k < 1 || k + 2 > n {
        return Err(Error::InvalidStructure(format!("so({k})+so(2) does not embed in so({n}) as blocks")));
    }
    let so = make_classical_lie(ClassicalFamily::So, n, field)?;
    let pairs = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).chain([(n - 2, n - 1)]);
    Embedding::new(format!("so({k})+so(2)"), so, so_block(n, field, pairs))
}

/// Smallest subspace containing `gens` and closed under the product.
pub fn generated_subalgebra(a: &Algebra, gens: Vec<Vector>) -> Result<Subspace> {
    let mut s = Subspace::span(a.field(), a.dim(), gens)?;
    loop {
        let basis = s.basis_vectors();
        let mut products = basis.clone();
        for u in &basis {
            for v in &basis {
                products.push(a.product().apply(u, v));
            }
        }
        let next = Subspace::span(a.field(), a.dim(), products)?;
        if next == s {
            return Ok(s);
        }
        s = next;
    }
}

/// `spin(7)` in `so(8)`, spanned by the commutators `[L_a, L_b]` of left
/// multiplications by imaginary octonions.
#[cfg(feature = "d4")]
pub fn embed_spin7(field: FieldSpec) -> Result<Embedding> {
    let oct = make_octonions(field)?;
    let so8 = make_classical_lie(ClassicalFamily::So, 8, field)?;
    let lefts: Vec<Matrix> = (1..8).map(|a| oct.product().left_matrix(&oct.basis_vector(a))).collect();
    let mut gens = Vec::new();
    for (a, la) in lefts.iter().enumerate() {
        for lb in &lefts[a + 1..] {
            let c = la.mul(lb)?.sub(&lb.mul(la)?)?;
            if !c.add(&c.transpose())?.is_zero() {
                return Err(Error::Inconsistent("commutator of left multiplications is not skew".into()));
            }
            let mut v = zero_vector(field, 28);
            for i in 0..8 {
                for j in i + 1..8 {
                    v[so_index(8, i, j)] = c.get(i, j).clone();
                }
            }
            gens.push(v);
        }
    }
    let image = generated_subalgebra(&so8, gens)?;
    Embedding::new("spin(7)", so8, image)
}

/// Resolves a registry name such as `sl:2`, `so-stab:5:7` or `g2`.
///
/// Embedding names resolve to the embedded algebra in its own basis.
pub fn by_name(name: &str, field: FieldSpec) -> Result<Algebra> {
    let unknown = || Error::UnknownName(name.to_string());
    let mut parts = name.split(':');
    let head = parts.next().ok_or_else(unknown)?;
    let args: Vec<usize> = parts.map(|p| p.parse::<usize>().map_err(|_| unknown())).collect::<Result<_>>()?;
    let one = |args: &[usize]| -> Result<usize> {
        match args {
            [n] => Ok(*n),
            _ => Err(unknown()),
        }
    };
    match head {
        "Mn" => make_matrix_algebra(one(&args)?, field),
        "gl" => make_classical_lie(ClassicalFamily::Gl, one(&args)?, field),
        "sl" => make_classical_lie(ClassicalFamily::Sl, one(&args)?, field),
        "so" => make_classical_lie(ClassicalFamily::So, one(&args)?, field),
        "sp" => make_classical_lie(ClassicalFamily::Sp, one(&args)?, field),
        "ut" => upper_triangular(one(&args)?, field),
        "sut" => strictly_upper_triangular(one(&args)?, field),
        "diag" => diagonal(one(&args)?, field),
        "abelian" => Ok(abelian_lie(one(&args)?, field)),
        "oct" if args.is_empty() => make_octonions(field),
        "g2" if args.is_empty() => Ok(make_g2(field)?.source()),
        "sl-semidirect" => make_semidirect_sln_vn(one(&args)?, field),
        "so-stab" => match args[..] {
            [k, n] => Ok(embed_so_stabilizer(k, n, field)?.source()),
            _ => Err(unknown()),
        },
        "so-stab-t" => match args[..] {
            [k, n] => Ok(embed_so_stabilizer_with_torus(k, n, field)?.source()),
            _ => Err(unknown()),
        },
        _ => Err(unknown()),
    }
}

/// Registered instance names, alphabetically, with their dimensions.
pub fn catalog_list() -> Vec<(String, usize)> {
    let mut out: Vec<(String, usize)> = Vec::new();
    for n in 1..=3 {
        out.push((format!("Mn:{n}"), n * n));
        out.push((format!("gl:{n}"), n * n));
        out.push((format!("diag:{n}"), n));
        out.push((format!("abelian:{n}"), n));
        out.push((format!("ut:{n}"), n * (n + 1) / 2));
    }
    for n in 2..=4 {
        out.push((format!("sl:{n}"), n * n - 1));
        out.push((format!("sut:{n}"), n * (n - 1) / 2));
    }
    for n in 3..=8 {
        out.push((format!("so:{n}"), n * (n - 1) / 2));
    }
    for m in 1..=3 {
        out.push((format!("sp:{}", 2 * m), m * (2 * m + 1)));
    }
    for n in 2..=3 {
        out.push((format!("sl-semidirect:{n}"), n * n - 1 + n));
    }
    out.push(("oct".into(), 8));
    out.push(("g2".into(), 14));
    out.push(("so-stab:5:7".into(), 10));
    out.push(("so-stab:6:7".into(), 15));
    out.push(("so-stab-t:5:7".into(), 11));
    out.sort();
    out
}
