//! Derivation, inner-derivation and almost-inner-derivation algebras.
//!
//! Matrices act on column vectors: column `j` of `D` is `D(b_j)`. Spaces of
//! `d×d` matrices are stored as subspaces of `F^{d²}` flattened row-major.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Side};
use crate::error::Error;
use crate::exactlin::{is_zero_vec, Field, Mat, Scalar, Subspace};

/// A Lie algebra of `d×d` matrices given by a canonical span.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixLieAlgebra {
    d: usize,
    span: Subspace,
    structure: Option<Algebra>,
}

impl MatrixLieAlgebra {
    /// Wraps a span of flattened matrices, checking closure under the commutator.
    pub fn from_span(d: usize, span: Subspace) -> Result<Self, Error> {
        if span.ambient_dim() != d * d {
            return Err(Error::AmbientMismatch(d * d, span.ambient_dim()));
        }
        let structure = induced(d, &span);
        Ok(MatrixLieAlgebra { d, span, structure })
    }

    pub fn from_matrices(d: usize, field: Field, mats: &[Mat]) -> Result<Self, Error> {
        MatrixLieAlgebra::from_span(d, span_of(d, field, mats)?)
    }

    /// Size of the matrices.
    pub fn ambient_dim(&self) -> usize {
        self.d
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn field(&self) -> Field {
        self.span.field()
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    pub fn closure_verified(&self) -> bool {
        self.structure.is_some()
    }

    pub fn basis(&self) -> Vec<Mat> {
        self.span
            .basis()
            .iter()
            .map(|v| unflatten(self.d, self.field(), v))
            .collect()
    }

    pub fn contains(&self, m: &Mat) -> Result<bool, Error> {
        self.check_mat(m)?;
        self.span.contains_vector(m.flat())
    }

    /// Coefficients of `m` in [`basis`](Self::basis).
    pub fn coordinates(&self, m: &Mat) -> Result<Option<Vec<Scalar>>, Error> {
        self.check_mat(m)?;
        self.span.coordinates(m.flat())
    }

    /// The matrix with the given coordinates.
    pub fn element(&self, coords: &[Scalar]) -> Mat {
        unflatten(self.d, self.field(), &self.span.combine(coords))
    }

    pub fn contains_algebra(&self, other: &MatrixLieAlgebra) -> Result<bool, Error> {
        self.span.contains(&other.span)
    }

    pub fn intersect(&self, other: &MatrixLieAlgebra) -> Result<MatrixLieAlgebra, Error> {
        MatrixLieAlgebra::from_span(self.d, self.span.intersect(&other.span)?)
    }

    /// Whether `[self, other] ⊆ other`, checked on basis pairs.
    pub fn normalizes(&self, other: &MatrixLieAlgebra) -> Result<bool, Error> {
        for a in self.basis() {
            for b in other.basis() {
                if !other.contains(&a.commutator(&b)?)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Image under `M ↦ P M P⁻¹` for the basis relabeling `perm` (old index to new index).
    pub fn conjugate_by_permutation(&self, perm: &[usize]) -> Result<MatrixLieAlgebra, Error> {
        let mats = self
            .basis()
            .iter()
            .map(|m| m.conjugate_by_permutation(perm))
            .collect::<Result<Vec<_>, _>>()?;
        MatrixLieAlgebra::from_matrices(self.d, self.field(), &mats)
    }

    /// Subspace of the abstract algebra spanned by the coordinates of `mats`.
    pub fn subspace_of(&self, mats: &[Mat]) -> Result<Subspace, Error> {
        let mut s = Subspace::zero(self.field(), self.dim());
        for m in mats {
            let c = self.coordinates(m)?.ok_or_else(|| {
                Error::InvalidArgument("matrix does not lie in the algebra".into())
            })?;
            s.insert(c)?;
        }
        Ok(s)
    }

    /// Matrices corresponding to a subspace of the abstract algebra.
    pub fn matrices_of(&self, s: &Subspace) -> Vec<Mat> {
        s.basis().iter().map(|c| self.element(c)).collect()
    }

    fn check_mat(&self, m: &Mat) -> Result<(), Error> {
        if m.rows() != self.d || m.cols() != self.d {
            return Err(Error::Shape(format!(
                "{}x{} matrix in an algebra of {}x{} matrices",
                m.rows(),
                m.cols(),
                self.d,
                self.d
            )));
        }
        Ok(())
    }
}

pub fn span_of(d: usize, field: Field, mats: &[Mat]) -> Result<Subspace, Error> {
    let mut s = Subspace::zero(field, d * d);
    for m in mats {
        if m.rows() != d || m.cols() != d {
            return Err(Error::Shape(format!("expected {d}x{d} matrices")));
        }
        s.insert(m.flat().to_vec())?;
    }
    Ok(s)
}

fn unflatten(d: usize, field: Field, v: &[Scalar]) -> Mat {
    Mat::from_flat(field, d, d, v.to_vec()).expect("length d²")
}

fn induced(d: usize, span: &Subspace) -> Option<Algebra> {
    let field = span.field();
    let mats: Vec<Mat> = span.basis().iter().map(|v| unflatten(d, field, v)).collect();
    let m = mats.len();
    let mut entries = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            let c = mats[a].commutator(&mats[b]).expect("same shape");
            let coords = span.coordinates(c.flat()).expect("length d²")?;
            for (k, v) in coords.into_iter().enumerate() {
                if !v.is_zero() {
                    entries.push((b, a, k, -&v));
                    entries.push((a, b, k, v));
                }
            }
        }
    }
    let labels = (1..=m).map(|i| format!("D{i}")).collect();
    Some(Algebra::from_entries(field, labels, entries).expect("valid indices"))
}

/// The abstract Lie algebra on the stored basis.
pub fn induced_structure(m: &MatrixLieAlgebra) -> Result<Algebra, Error> {
    m.structure.clone().ok_or(Error::ClosureNotVerified)
}

/// `D[b_i,b_j] = [D b_i, b_j] + [b_i, D b_j]` on all basis pairs.
pub fn is_derivation(dm: &Mat, l: &Algebra) -> Result<bool, Error> {
    let d = l.dim();
    if dm.rows() != d || dm.cols() != d {
        return Err(Error::Shape(format!("expected a {d}x{d} matrix")));
    }
    let cols: Vec<Vec<Scalar>> = (0..d).map(|j| dm.col(j)).collect();
    for i in 0..d {
        for j in 0..d {
            let lhs = dm.mul_vec(&l.basis_bracket(i, j))?;
            let r1 = l.bracket(&cols[i], &l.basis_vector(j))?;
            let r2 = l.bracket(&l.basis_vector(i), &cols[j])?;
            if lhs.iter().zip(&r1).zip(&r2).any(|((a, b), c)| !(&(a - b) - c).is_zero()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Rows of the linear system whose solutions are the derivations, unknowns `D[p][q]` at `p*d + q`.
fn derivation_constraints(l: &Algebra) -> Subspace {
    let d = l.dim();
    let mut rows = Subspace::zero(l.field(), d * d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let mut row = vec![Scalar::zero(); d * d];
                // D([b_i,b_j])_k
                for (m, c) in l.basis_product(i, j) {
                    row[k * d + m] += c;
                }
                // −[D b_i, b_j]_k − [b_i, D b_j]_k
                for p in 0..d {
                    let c = l.structure_constant(p, j, k);
                    if !c.is_zero() {
                        row[p * d + i] -= &c;
                    }
                    let c = l.structure_constant(i, p, k);
                    if !c.is_zero() {
                        row[p * d + j] -= &c;
                    }
                }
                if !is_zero_vec(&row) {
                    rows.insert(row).expect("length d²");
                }
            }
        }
    }
    rows
}

pub fn der_algebra(l: &Algebra) -> MatrixLieAlgebra {
    let span = derivation_constraints(l).annihilator();
    MatrixLieAlgebra::from_span(l.dim(), span).expect("ambient d²")
}

/// Span of the left multiplications.
pub fn inner_derivations(l: &Algebra) -> Result<MatrixLieAlgebra, Error> {
    if !l.classify().left_leibniz {
        return Err(Error::NotLeftLeibniz);
    }
    let mats = (0..l.dim())
        .map(|i| l.adjoint(&l.basis_vector(i), Side::Left))
        .collect::<Result<Vec<_>, _>>()?;
    MatrixLieAlgebra::from_matrices(l.dim(), l.field(), &mats)
}

/// Derivations with image in `[L,L]` that vanish on `kernel`.
fn line_valued_vanishing_on(l: &Algebra, kernel: &Subspace) -> Result<MatrixLieAlgebra, Error> {
    let d = l.dim();
    let line = l.commutator_ideal();
    let mut rows = derivation_constraints(l);
    // φ(D b_j) = 0 for every functional φ killing [L,L]
    for phi in line.annihilator().basis() {
        for j in 0..d {
            let mut row = vec![Scalar::zero(); d * d];
            for (p, v) in phi.iter().enumerate() {
                row[p * d + j] = v.clone();
            }
            rows.insert(row)?;
        }
    }
    // D k = 0
    for k in kernel.basis() {
        for p in 0..d {
            let mut row = vec![Scalar::zero(); d * d];
            for (q, v) in k.iter().enumerate() {
                row[p * d + q] = v.clone();
            }
            rows.insert(row)?;
        }
    }
    MatrixLieAlgebra::from_span(d, rows.annihilator())
}

fn require_genus_one(l: &Algebra) -> Result<(), Error> {
    match l.genus() {
        1 => Ok(()),
        g => Err(Error::GenusNotOne(g)),
    }
}

/// Almost inner derivations (`d(x) ∈ [L,x]` for all `x`) of a genus-one algebra.
///
/// `[L,x]` is zero on the right center `K` and equals `[L,L]` elsewhere, so the
/// condition is linear: image in `[L,L]` and `d(K) = 0`.
pub fn aider_genus1(l: &Algebra) -> Result<MatrixLieAlgebra, Error> {
    require_genus_one(l)?;
    line_valued_vanishing_on(l, &l.centers().right)
}

/// Derivations with `d(x) ∈ [L,x] + [x,L]` for all `x`, for a genus-one algebra.
/// Here the kernel condition is only on the two-sided center.
pub fn aider_genus1_two_sided(l: &Algebra) -> Result<MatrixLieAlgebra, Error> {
    require_genus_one(l)?;
    line_valued_vanishing_on(l, &l.centers().center)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SampleOutcome {
    /// No sampled `x` violated `d(x) ∈ [L,x]`. Not a proof.
    Pass { trials: usize },
    Witness(Vec<Scalar>),
}

/// Numerator in `-3..=3`, denominator in `{1, 2}`.
pub fn small_rational<R: Rng>(rng: &mut R) -> Scalar {
    Scalar::ratio(rng.gen_range(-3..=3), rng.gen_range(1..=2))
}

pub fn random_vector<R: Rng>(rng: &mut R, n: usize) -> Vec<Scalar> {
    (0..n).map(|_| small_rational(rng)).collect()
}

/// Randomized search for `x` with `d(x) ∉ [L,x]`.
pub fn aider_membership_sample(dm: &Mat, l: &Algebra, trials: usize, seed: u64) -> Result<SampleOutcome, Error> {
    if !is_derivation(dm, l)? {
        return Err(Error::InvalidArgument("the matrix is not a derivation".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let x = random_vector(&mut rng, l.dim());
        let image = Subspace::span(
            l.field(),
            l.dim(),
            (0..l.dim())
                .map(|i| l.bracket(&l.basis_vector(i), &x))
                .collect::<Result<Vec<_>, _>>()?,
        )?;
        if !image.contains_vector(&dm.mul_vec(&x)?)? {
            return Ok(SampleOutcome::Witness(x));
        }
    }
    Ok(SampleOutcome::Pass { trials })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{dieudonne, heisenberg_leibniz, heisenberg_lie, jordan, kronecker, BasisOrder};

    fn q(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn j(n: usize, a: i64) -> Algebra {
        heisenberg_leibniz(n, &jordan(&q(a), n), BasisOrder::Grouped).unwrap()
    }

    #[test]
    fn zero_map_and_identity() {
        let h = heisenberg_lie(1, BasisOrder::Grouped).unwrap();
        assert!(is_derivation(&Mat::zeros(Field::Q, 3, 3), &h).unwrap());
        assert!(!is_derivation(&Mat::identity(Field::Q, 3), &h).unwrap());
        assert!(is_derivation(&Mat::identity(Field::Q, 2), &h).is_err());
    }

    #[test]
    fn der_of_abelian_is_gl() {
        let ab = Algebra::abelian(Field::Q, 3);
        assert_eq!(der_algebra(&ab).dim(), 9);
        assert_eq!(inner_derivations(&ab).unwrap().dim(), 0);
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(der_algebra(&dieudonne(1).unwrap()).dim(), 6);
        assert_eq!(der_algebra(&j(2, 2)).dim(), 7);
        assert_eq!(der_algebra(&heisenberg_lie(1, BasisOrder::Grouped).unwrap()).dim(), 6);
        assert_eq!(inner_derivations(&j(2, 1)).unwrap().dim(), 3);
        assert_eq!(inner_derivations(&kronecker(2, BasisOrder::Grouped).unwrap()).unwrap().dim(), 4);
    }

    #[test]
    fn every_basis_element_is_a_derivation_and_closed() {
        let l = kronecker(3, BasisOrder::Grouped).unwrap();
        let der = der_algebra(&l);
        assert!(der.closure_verified());
        for m in der.basis() {
            assert!(is_derivation(&m, &l).unwrap());
        }
        assert!(induced_structure(&der).unwrap().classify().lie);
    }

    #[test]
    fn inclusions_and_ideal() {
        let l = j(2, 2);
        let der = der_algebra(&l);
        let inn = inner_derivations(&l).unwrap();
        let ai = aider_genus1(&l).unwrap();
        assert!(ai.contains_algebra(&inn).unwrap());
        assert!(der.contains_algebra(&ai).unwrap());
        assert!(der.normalizes(&inn).unwrap());
        assert_eq!(ai, inn);
    }

    #[test]
    fn genus_check() {
        let ab = Algebra::abelian(Field::Q, 2);
        assert_eq!(aider_genus1(&ab), Err(Error::GenusNotOne(0)));
    }

    #[test]
    fn right_center_kills_the_first_generator_at_a_equal_one() {
        // [L, e1] = 0, so e1 ↦ z is not almost inner although random samples miss e1
        let l = j(2, 1);
        let mut a1 = Mat::zeros(Field::Q, 5, 5);
        a1[(4, 0)] = q(1);
        assert!(is_derivation(&a1, &l).unwrap());
        assert!(!aider_genus1(&l).unwrap().contains(&a1).unwrap());
        assert!(aider_genus1_two_sided(&l).unwrap().contains(&a1).unwrap());
        assert_eq!(aider_membership_sample(&a1, &l, 50, 7).unwrap(), SampleOutcome::Pass { trials: 50 });
    }

    #[test]
    fn sampler_finds_witness_for_diagonal_derivation() {
        let l = j(2, 2);
        let mut x = Mat::zeros(Field::Q, 5, 5);
        for i in [0, 1, 4] {
            x[(i, i)] = q(1);
        }
        assert!(is_derivation(&x, &l).unwrap());
        assert!(matches!(aider_membership_sample(&x, &l, 20, 1).unwrap(), SampleOutcome::Witness(_)));
        let ad = l.adjoint(&l.basis_vector(2), Side::Left).unwrap();
        assert_eq!(aider_membership_sample(&ad, &l, 20, 1).unwrap(), SampleOutcome::Pass { trials: 20 });
    }

    #[test]
    fn commuting_family_is_abelian() {
        let mats = [Mat::unit(Field::Q, 3, 0, 0), Mat::unit(Field::Q, 3, 1, 1)];
        let m = MatrixLieAlgebra::from_matrices(3, Field::Q, &mats).unwrap();
        let s = induced_structure(&m).unwrap();
        assert!(s.commutator_ideal().is_zero());
    }

    #[test]
    fn non_closed_span_is_flagged() {
        let mats = [Mat::unit(Field::Q, 2, 0, 1), Mat::unit(Field::Q, 2, 1, 0)];
        let m = MatrixLieAlgebra::from_matrices(2, Field::Q, &mats).unwrap();
        assert!(!m.closure_verified());
        assert_eq!(induced_structure(&m), Err(Error::ClosureNotVerified));
    }
}
