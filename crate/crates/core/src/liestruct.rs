//! Killing form, radical, nilradical and Levi complements of Lie algebras.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, SeriesKind, Side};
use crate::derivations::random_vector;
use crate::error::Error;
use crate::exactlin::{Mat, Scalar, Subspace};

/// Gram matrix of `κ(x, y) = tr(ad_x ad_y)` on the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KillingForm {
    pub gram: Mat,
}

impl KillingForm {
    pub fn rank(&self) -> usize {
        self.gram.rank()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.rank() == self.gram.rows()
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Result<Scalar, Error> {
        let gy = self.gram.mul_vec(y)?;
        Ok(x.iter().zip(&gy).fold(Scalar::zero(), |mut acc, (a, b)| {
            acc.add_mul(a, b);
            acc
        }))
    }

    /// `{x : κ(x, s) = 0 for all s ∈ sub}`
    pub fn orthogonal(&self, sub: &Subspace) -> Result<Subspace, Error> {
        let n = self.gram.rows();
        if sub.is_zero() {
            return Ok(Subspace::full(self.gram.field(), n));
        }
        let rows = sub
            .basis()
            .iter()
            .map(|s| self.gram.mul_vec(s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Mat::from_rows(self.gram.field(), rows)?.nullspace())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeviFailure {
    NotSubalgebra,
    NotComplement,
    Degenerate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LeviStatus {
    Verified(Subspace),
    Failed(LeviFailure),
}

impl LeviStatus {
    pub fn is_verified(&self) -> bool {
        matches!(self, LeviStatus::Verified(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub dim: usize,
    pub derived_series: Vec<usize>,
    pub lower_central_series: Vec<usize>,
    pub center_dim: usize,
    pub killing_rank: usize,
    pub radical: Subspace,
    pub nilradical: Subspace,
    pub levi: Option<LeviStatus>,
}

fn require_lie(g: &Algebra) -> Result<(), Error> {
    if g.classify().lie {
        Ok(())
    } else {
        Err(Error::NotLie)
    }
}

fn ad_matrices(g: &Algebra) -> Vec<Mat> {
    (0..g.dim())
        .map(|i| g.adjoint(&g.basis_vector(i), Side::Left).expect("basis vector"))
        .collect()
}

pub fn killing(g: &Algebra) -> Result<KillingForm, Error> {
    require_lie(g)?;
    Ok(killing_unchecked(g))
}

fn killing_unchecked(g: &Algebra) -> KillingForm {
    let ads = ad_matrices(g);
    let n = g.dim();
    let mut gram = Mat::zeros(g.field(), n, n);
    for i in 0..n {
        for j in i..n {
            let v = ads[i].trace_of_product(&ads[j]);
            gram[(j, i)] = v.clone();
            gram[(i, j)] = v;
        }
    }
    KillingForm { gram }
}

pub fn is_semisimple(g: &Algebra) -> Result<bool, Error> {
    Ok(killing(g)?.is_nondegenerate())
}

/// `rad(g) = [g,g]^⊥` with respect to the Killing form.
pub fn radical(g: &Algebra) -> Result<Subspace, Error> {
    let kf = killing(g)?;
    let rad = kf.orthogonal(&g.commutator_ideal())?;
    if !g.is_ideal(&rad)? || !g.subalgebra(&rad)?.is_solvable().0 {
        return Err(Error::Internal("radical is not a solvable ideal".into()));
    }
    if !killing_unchecked(&g.quotient(&rad)?).is_nondegenerate() {
        return Err(Error::Internal("quotient by the radical is not semisimple".into()));
    }
    Ok(rad)
}

/// The largest nilpotent ideal, computed as the trace radical of the
/// associative envelope of `ad(g)`.
pub fn nilradical(g: &Algebra) -> Result<Subspace, Error> {
    nilradical_envelope(g)
}

/// Nilradical from powers of `ad_y` for random `y` in the radical.
///
/// `{x ∈ R : tr(ad_x ad_y^m) = 0, m < dim g}` contains the nilradical and equals
/// it for generic `y`; a candidate is accepted once it is a nilpotent ideal.
pub fn nilradical_generic(g: &Algebra, seed: u64) -> Result<Subspace, Error> {
    let rad = radical(g)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..8 {
        let coeffs = random_vector(&mut rng, rad.dim());
        let candidate = generic_trace_candidate(g, &rad, &rad.combine(&coeffs))?;
        if is_nilpotent_ideal(g, &candidate)? {
            return Ok(candidate);
        }
    }
    Err(Error::Internal("no generic element found".into()))
}

fn generic_trace_candidate(g: &Algebra, rad: &Subspace, y: &[Scalar]) -> Result<Subspace, Error> {
    let n = g.dim();
    let ady = g.adjoint(y, Side::Left)?;
    let ads: Vec<Mat> = rad
        .basis()
        .iter()
        .map(|r| g.adjoint(r, Side::Left))
        .collect::<Result<_, _>>()?;
    let mut power = Mat::identity(g.field(), n);
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        rows.push(ads.iter().map(|a| a.trace_of_product(&power)).collect::<Vec<_>>());
        power = power.try_mul(&ady)?;
    }
    if rad.is_zero() {
        return Ok(rad.clone());
    }
    let coords = Mat::from_rows(g.field(), rows)?.nullspace();
    coords.image_in(rad)
}

fn is_nilpotent_ideal(g: &Algebra, s: &Subspace) -> Result<bool, Error> {
    Ok(g.is_ideal(s)? && g.subalgebra(s)?.is_nilpotent().0)
}

fn nilradical_envelope(g: &Algebra) -> Result<Subspace, Error> {
    require_lie(g)?;
    let n = g.dim();
    let ads = ad_matrices(g);
    let mut env = Subspace::zero(g.field(), n * n);
    let mut frontier = Vec::new();
    for a in &ads {
        if env.insert(a.flat().to_vec())? {
            frontier.push(a.clone());
        }
    }
    while let Some(w) = frontier.pop() {
        for a in &ads {
            let p = a.try_mul(&w)?;
            if env.insert(p.flat().to_vec())? {
                frontier.push(p);
            }
        }
        if env.dim() > n * n {
            return Err(Error::Internal("associative envelope did not stabilize".into()));
        }
    }
    let basis: Vec<Mat> = env
        .basis()
        .iter()
        .map(|v| Mat::from_flat(g.field(), n, n, v.clone()))
        .collect::<Result<_, _>>()?;
    let rows: Vec<Vec<Scalar>> = basis
        .iter()
        .map(|b| ads.iter().map(|a| a.trace_of_product(b)).collect())
        .collect();
    let nil = if rows.is_empty() {
        Subspace::full(g.field(), n)
    } else {
        Mat::from_rows(g.field(), rows)?.nullspace()
    };
    if !is_nilpotent_ideal(g, &nil)? {
        return Err(Error::Internal("trace radical is not a nilpotent ideal".into()));
    }
    Ok(nil)
}

/// Checks that `s` is a Levi complement: a subalgebra complementary to the
/// radical with nondegenerate Killing form.
pub fn verify_levi(g: &Algebra, s: &Subspace) -> Result<LeviStatus, Error> {
    require_lie(g)?;
    if !g.is_subalgebra(s)? {
        return Ok(LeviStatus::Failed(LeviFailure::NotSubalgebra));
    }
    let rad = radical(g)?;
    if !s.intersect(&rad)?.is_zero() || !s.sum(&rad)?.is_full() {
        return Ok(LeviStatus::Failed(LeviFailure::NotComplement));
    }
    let sub = g.subalgebra(s)?;
    let own = killing_unchecked(&sub);
    let restricted = restrict(&killing_unchecked(g), s)?;
    if !own.is_nondegenerate() || !restricted.is_nondegenerate() {
        return Ok(LeviStatus::Failed(LeviFailure::Degenerate));
    }
    if g.product_space(s, s)? != *s {
        return Err(Error::Internal("a verified Levi complement is not perfect".into()));
    }
    Ok(LeviStatus::Verified(s.clone()))
}

fn restrict(kf: &KillingForm, s: &Subspace) -> Result<KillingForm, Error> {
    let b = s.basis();
    let mut gram = Mat::zeros(kf.gram.field(), b.len(), b.len());
    for (i, u) in b.iter().enumerate() {
        for (j, v) in b.iter().enumerate() {
            gram[(i, j)] = kf.eval(u, v)?;
        }
    }
    Ok(KillingForm { gram })
}

pub fn structure_report(g: &Algebra, levi: Option<&Subspace>) -> Result<StructureReport, Error> {
    let kf = killing(g)?;
    let dims = |k| g.series(k).iter().map(Subspace::dim).collect::<Vec<_>>();
    Ok(StructureReport {
        dim: g.dim(),
        derived_series: dims(SeriesKind::Derived),
        lower_central_series: dims(SeriesKind::LowerCentral),
        center_dim: g.centers().center.dim(),
        killing_rank: kf.rank(),
        radical: radical(g)?,
        nilradical: nilradical(g)?,
        levi: levi.map(|s| verify_levi(g, s)).transpose()?,
    })
}
