//! Finite-dimensional algebras given by structure constants.

use std::fmt;
use std::sync::OnceLock;

use crate::error::Error;
use crate::exactlin::{is_zero_vec, unit_vector, Field, Mat, Scalar, Subspace};

/// Which identities an algebra satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraKind {
    pub left_leibniz: bool,
    pub right_leibniz: bool,
    pub symmetric: bool,
    pub lie: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `y ↦ [x, y]`
    Left,
    /// `y ↦ [y, x]`
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    /// `L, [L,L], [L,[L,L]], …`
    LowerCentral,
    /// `L, [L,L], [[L,L],[L,L]], …`
    Derived,
}

/// Left, right and two-sided centers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Centers {
    pub left: Subspace,
    pub right: Subspace,
    pub center: Subspace,
}

/// An algebra on a labelled basis; `[b_i, b_j] = Σ_k c[i][j][k] b_k`.
#[derive(Clone)]
pub struct Algebra {
    field: Field,
    labels: Vec<String>,
    /// Nonzero part of `[b_i, b_j]`, indexed by `i * dim + j`.
    products: Vec<Vec<(usize, Scalar)>>,
    kind: OnceLock<AlgebraKind>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.labels == other.labels && self.products == other.products
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Algebra<{}> basis {:?}", self.field, self.labels)?;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let p = &self.products[i * self.dim() + j];
                if p.is_empty() {
                    continue;
                }
                let terms: Vec<String> = p
                    .iter()
                    .map(|(k, v)| format!("{v} {}", self.labels[*k]))
                    .collect();
                writeln!(f, "  [{},{}] = {}", self.labels[i], self.labels[j], terms.join(" + "))?;
            }
        }
        Ok(())
    }
}

impl Algebra {
    /// Builds an algebra from `(i, j, k, coefficient)` contributions; repeated
    /// `(i, j, k)` triples accumulate.
    pub fn from_entries<I>(field: Field, labels: Vec<String>, entries: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let d = labels.len();
        let mut dense = vec![Scalar::zero(); d * d * d];
        for (i, j, k, v) in entries {
            if i >= d || j >= d || k >= d {
                return Err(Error::Shape(format!("index ({i},{j},{k}) outside dimension {d}")));
            }
            if !field.admits(&v) {
                return Err(Error::NotInField(field));
            }
            dense[(i * d + j) * d + k] += &v;
        }
        Algebra::from_tensor(field, labels, dense)
    }

    /// Dense tensor `c[(i*dim + j)*dim + k]`.
    pub fn from_tensor(field: Field, labels: Vec<String>, tensor: Vec<Scalar>) -> Result<Self, Error> {
        let d = labels.len();
        if tensor.len() != d * d * d {
            return Err(Error::Shape(format!(
                "tensor of length {} for dimension {d}",
                tensor.len()
            )));
        }
        if tensor.iter().any(|s| !field.admits(s)) {
            return Err(Error::NotInField(field));
        }
        let products = tensor
            .chunks(d.max(1))
            .take(d * d)
            .map(|chunk| {
                chunk
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(k, v)| (k, v.clone()))
                    .collect()
            })
            .collect();
        Ok(Algebra {
            field,
            labels,
            products,
            kind: OnceLock::new(),
        })
    }

    pub fn abelian(field: Field, dim: usize) -> Self {
        let labels = (1..=dim).map(|i| format!("x{i}")).collect();
        Algebra::from_entries(field, labels, std::iter::empty()).expect("empty tensor")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.products[i * self.dim() + j]
            .iter()
            .find(|(m, _)| *m == k)
            .map_or_else(Scalar::zero, |(_, v)| v.clone())
    }

    /// Sparse `[b_i, b_j]`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.products[i * self.dim() + j]
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (k, v) in self.basis_product(i, j) {
            out[*k] = v.clone();
        }
        out
    }

    pub fn tensor(&self) -> Vec<Scalar> {
        let d = self.dim();
        let mut t = vec![Scalar::zero(); d * d * d];
        for (ij, p) in self.products.iter().enumerate() {
            for (k, v) in p {
                t[ij * d + k] = v.clone();
            }
        }
        t
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        unit_vector(self.dim(), i)
    }

    fn check_vec(&self, v: &[Scalar]) -> Result<(), Error> {
        if v.len() != self.dim() {
            return Err(Error::Shape(format!(
                "vector of length {} in an algebra of dimension {}",
                v.len(),
                self.dim()
            )));
        }
        Ok(())
    }

    fn check_subspace(&self, s: &Subspace) -> Result<(), Error> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::AmbientMismatch(self.dim(), s.ambient_dim()));
        }
        Ok(())
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>, Error> {
        self.check_vec(x)?;
        self.check_vec(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    fn bracket_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let mut out = vec![Scalar::zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let p = &self.products[i * d + j];
                if p.is_empty() {
                    continue;
                }
                let coeff = xi * yj;
                for (k, v) in p {
                    out[*k].add_mul(&coeff, v);
                }
            }
        }
        out
    }

    /// `[b_i, v]`
    fn left_mul_basis(&self, i: usize, v: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let mut out = vec![Scalar::zero(); d];
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            for (k, c) in &self.products[i * d + j] {
                out[*k].add_mul(vj, c);
            }
        }
        out
    }

    /// `[v, b_j]`
    fn right_mul_basis(&self, v: &[Scalar], j: usize) -> Vec<Scalar> {
        let d = self.dim();
        let mut out = vec![Scalar::zero(); d];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (k, c) in &self.products[i * d + j] {
                out[*k].add_mul(vi, c);
            }
        }
        out
    }

    /// Decides each identity exhaustively on basis triples. Cached on first use.
    pub fn classify(&self) -> AlgebraKind {
        *self.kind.get_or_init(|| self.compute_kind())
    }

    fn compute_kind(&self) -> AlgebraKind {
        let d = self.dim();
        let left = self.identity_holds(|i, j, k| {
            // [x,[y,z]] − [[x,y],z] − [y,[x,z]]
            let a = self.left_mul_basis(i, &self.basis_bracket(j, k));
            let b = self.right_mul_basis(&self.basis_bracket(i, j), k);
            let c = self.left_mul_basis(j, &self.basis_bracket(i, k));
            residual(&a, &b, &c)
        });
        let right = self.identity_holds(|i, j, k| {
            // [[x,y],z] − [[x,z],y] − [x,[y,z]]
            let a = self.right_mul_basis(&self.basis_bracket(i, j), k);
            let b = self.right_mul_basis(&self.basis_bracket(i, k), j);
            let c = self.left_mul_basis(i, &self.basis_bracket(j, k));
            residual(&a, &b, &c)
        });
        let antisymmetric = (0..d).all(|i| {
            (0..d).all(|j| {
                let a = self.basis_bracket(i, j);
                let b = self.basis_bracket(j, i);
                a.iter().zip(&b).all(|(x, y)| (x + y).is_zero())
            })
        });
        AlgebraKind {
            left_leibniz: left,
            right_leibniz: right,
            symmetric: left && right,
            lie: antisymmetric && left,
        }
    }

    fn identity_holds<F>(&self, mut residual_at: F) -> bool
    where
        F: FnMut(usize, usize, usize) -> bool,
    {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| (0..d).all(|k| residual_at(i, j, k))))
    }

    /// `span{[u, v] : u ∈ U, v ∈ V}` over the stored bases.
    pub fn product_space(&self, u: &Subspace, v: &Subspace) -> Result<Subspace, Error> {
        self.check_subspace(u)?;
        self.check_subspace(v)?;
        let mut out = Subspace::zero(self.field, self.dim());
        for a in u.basis() {
            for b in v.basis() {
                let p = self.bracket_unchecked(a, b);
                if !is_zero_vec(&p) {
                    out.insert(p)?;
                }
            }
        }
        Ok(out)
    }

    pub fn whole(&self) -> Subspace {
        Subspace::full(self.field, self.dim())
    }

    /// `[L, L]`
    pub fn commutator_ideal(&self) -> Subspace {
        let whole = self.whole();
        self.product_space(&whole, &whole).expect("same ambient")
    }

    pub fn genus(&self) -> usize {
        self.commutator_ideal().dim()
    }

    /// Terms of the series up to stabilization, without repeating the stable term.
    pub fn series(&self, kind: SeriesKind) -> Vec<Subspace> {
        let whole = self.whole();
        let mut terms = vec![whole.clone()];
        loop {
            let last = terms.last().expect("nonempty");
            if last.is_zero() {
                break;
            }
            let next = match kind {
                SeriesKind::LowerCentral => self.product_space(&whole, last),
                SeriesKind::Derived => self.product_space(last, last),
            }
            .expect("same ambient");
            if next.dim() == last.dim() {
                break;
            }
            terms.push(next);
        }
        terms
    }

    /// Whether the lower central series reaches zero, and its number of nonzero terms.
    pub fn is_nilpotent(&self) -> (bool, usize) {
        class_of(&self.series(SeriesKind::LowerCentral))
    }

    /// Same for the derived series.
    pub fn is_solvable(&self) -> (bool, usize) {
        class_of(&self.series(SeriesKind::Derived))
    }

    pub fn centers(&self) -> Centers {
        let d = self.dim();
        let mut left_rows = Vec::new();
        let mut right_rows = Vec::new();
        for a in 0..d {
            for k in 0..d {
                // [x, b_a]_k = Σ_i x_i c[i][a][k]; [b_a, x]_k = Σ_j x_j c[a][j][k]
                left_rows.push((0..d).map(|i| self.structure_constant(i, a, k)).collect());
                right_rows.push((0..d).map(|j| self.structure_constant(a, j, k)).collect());
            }
        }
        let left = kernel(self.field, d, left_rows);
        let right = kernel(self.field, d, right_rows);
        let center = left.intersect(&right).expect("same ambient");
        Centers { left, right, center }
    }

    /// `Leib(L)`, spanned by `[b_i,b_j] + [b_j,b_i]` for `i ≤ j`.
    pub fn leib_ideal(&self) -> Subspace {
        let d = self.dim();
        let mut out = Subspace::zero(self.field, d);
        for i in 0..d {
            for j in i..d {
                let mut v = self.basis_bracket(i, j);
                for (k, c) in self.basis_product(j, i) {
                    v[*k] += c;
                }
                if !is_zero_vec(&v) {
                    out.insert(v).expect("length d");
                }
            }
        }
        out
    }

    pub fn is_ideal(&self, ideal: &Subspace) -> Result<bool, Error> {
        self.check_subspace(ideal)?;
        for v in ideal.basis() {
            for i in 0..self.dim() {
                if !ideal.contains_vector(&self.left_mul_basis(i, v))?
                    || !ideal.contains_vector(&self.right_mul_basis(v, i))?
                {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool, Error> {
        Ok(self.product_space(s, s)?.dim() == 0 || s.contains(&self.product_space(s, s)?)?)
    }

    /// `L / I` on the non-pivot coordinates of the canonical form of `I`.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Algebra, Error> {
        if !self.is_ideal(ideal)? {
            return Err(Error::NotAnIdeal);
        }
        let keep: Vec<usize> = (0..self.dim())
            .filter(|c| !ideal.pivots().contains(c))
            .collect();
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let mut entries = Vec::new();
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                let reduced = ideal.reduce(&self.basis_bracket(i, j))?;
                for (c, &k) in keep.iter().enumerate() {
                    if !reduced[k].is_zero() {
                        entries.push((a, b, c, reduced[k].clone()));
                    }
                }
            }
        }
        Algebra::from_entries(self.field, labels, entries)
    }

    /// Structure constants of a subalgebra w.r.t. its canonical basis.
    pub fn subalgebra(&self, s: &Subspace) -> Result<Algebra, Error> {
        self.check_subspace(s)?;
        let basis = s.basis();
        let labels = (1..=basis.len()).map(|i| format!("s{i}")).collect();
        let mut entries = Vec::new();
        for (a, u) in basis.iter().enumerate() {
            for (b, v) in basis.iter().enumerate() {
                let p = self.bracket_unchecked(u, v);
                let coords = s.coordinates(&p)?.ok_or_else(|| {
                    Error::InvalidArgument("subspace is not closed under the bracket".into())
                })?;
                for (c, val) in coords.into_iter().enumerate() {
                    if !val.is_zero() {
                        entries.push((a, b, c, val));
                    }
                }
            }
        }
        Algebra::from_entries(self.field, labels, entries)
    }

    /// Matrix of `y ↦ [x, y]` (left) or `y ↦ [y, x]` (right); column `j` is the image of `b_j`.
    pub fn adjoint(&self, x: &[Scalar], side: Side) -> Result<Mat, Error> {
        self.check_vec(x)?;
        let d = self.dim();
        let mut m = Mat::zeros(self.field, d, d);
        for j in 0..d {
            let col = match side {
                Side::Left => self.right_mul_basis(x, j),
                Side::Right => self.left_mul_basis(j, x),
            };
            for (k, v) in col.into_iter().enumerate() {
                m[(k, j)] = v;
            }
        }
        Ok(m)
    }

    /// Relabel the basis: old basis vector `i` becomes new basis vector `perm[i]`.
    pub fn permute_basis(&self, perm: &[usize]) -> Result<Algebra, Error> {
        let d = self.dim();
        if !is_permutation(perm, d) {
            return Err(Error::NotAPermutation(d));
        }
        let mut labels = vec![String::new(); d];
        for (i, &p) in perm.iter().enumerate() {
            labels[p] = self.labels[i].clone();
        }
        let mut entries = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, v) in self.basis_product(i, j) {
                    entries.push((perm[i], perm[j], perm[*k], v.clone()));
                }
            }
        }
        Algebra::from_entries(self.field, labels, entries)
    }

    pub fn with_labels(&self, labels: Vec<String>) -> Result<Algebra, Error> {
        if labels.len() != self.dim() {
            return Err(Error::Shape("label count must equal the dimension".into()));
        }
        Ok(Algebra {
            labels,
            ..self.clone()
        })
    }
}

pub(crate) fn is_permutation(perm: &[usize], d: usize) -> bool {
    if perm.len() != d {
        return false;
    }
    let mut seen = vec![false; d];
    for &p in perm {
        if p >= d || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    true
}

fn residual(a: &[Scalar], b: &[Scalar], c: &[Scalar]) -> bool {
    a.iter()
        .zip(b)
        .zip(c)
        .all(|((x, y), z)| (&(x - y) - z).is_zero())
}

fn kernel(field: Field, d: usize, rows: Vec<Vec<Scalar>>) -> Subspace {
    if rows.is_empty() {
        return Subspace::full(field, d);
    }
    let m = Mat::from_rows(field, rows).expect("rows of length d");
    m.nullspace()
}

fn class_of(series: &[Subspace]) -> (bool, usize) {
    let reaches_zero = series.last().is_some_and(Subspace::is_zero);
    (reaches_zero, series.iter().filter(|s| !s.is_zero()).count())
}
