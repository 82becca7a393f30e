//! Canonical subspaces of `F^n` stored as reduced row-echelon bases.

use std::fmt;

use super::scalar::{Field, Scalar};
use crate::error::Error;

/// A subspace of `F^ambient`.
///
/// The basis is kept in reduced row-echelon form, so two equal subspaces
/// always have identical stored bases and `==` decides equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    field: Field,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            ambient,
            field,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        let rows = (0..ambient).map(|i| unit_vector(ambient, i)).collect();
        Subspace {
            ambient,
            field,
            rows,
            pivots: (0..ambient).collect(),
        }
    }

    /// Canonical basis of the span of `vectors`.
    pub fn span<I>(field: Field, ambient: usize, vectors: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut s = Subspace::zero(field, ambient);
        for v in vectors {
            s.insert(v)?;
        }
        Ok(s)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_len(&self, v: &[Scalar]) -> Result<(), Error> {
        if v.len() != self.ambient {
            return Err(Error::AmbientMismatch(self.ambient, v.len()));
        }
        Ok(())
    }

    fn check_compatible(&self, other: &Subspace) -> Result<(), Error> {
        self.field.join(other.field)?;
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    /// `v` minus its projection along the pivot coordinates; zero iff `v` is in the span.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vec<Scalar>, Error> {
        self.check_len(v)?;
        let mut v = v.to_vec();
        self.reduce_in_place(&mut v);
        Ok(v)
    }

    fn reduce_in_place(&self, v: &mut [Scalar]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (x, r) in v.iter_mut().zip(row).skip(p) {
                if !r.is_zero() {
                    *x -= &(&factor * r);
                }
            }
        }
    }

    /// Adds `v` to the span, keeping the basis fully reduced. Returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> Result<bool, Error> {
        self.check_len(&v)?;
        if v.iter().any(|s| !self.field.admits(s)) {
            return Err(Error::NotInField(self.field));
        }
        self.reduce_in_place(&mut v);
        let Some(p) = v.iter().position(|s| !s.is_zero()) else {
            return Ok(false);
        };
        let inv = v[p].inv().expect("nonzero pivot");
        for x in v.iter_mut().skip(p) {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for (x, r) in row.iter_mut().zip(&v).skip(p) {
                if !r.is_zero() {
                    *x -= &(&factor * r);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        Ok(true)
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> Result<bool, Error> {
        Ok(self.reduce(v)?.iter().all(Scalar::is_zero))
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool, Error> {
        self.check_compatible(other)?;
        for v in &other.rows {
            if !self.contains_vector(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coefficients of `v` in the stored basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>, Error> {
        if !self.contains_vector(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// Linear combination of the stored basis.
    pub fn combine(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.ambient];
        for (c, row) in coeffs.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row) {
                o.add_mul(c, r);
            }
        }
        out
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_compatible(other)?;
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v.clone())?;
        }
        Ok(s)
    }

    /// `{w : Σ w_i v_i = 0 for every v in self}`.
    pub fn annihilator(&self) -> Subspace {
        let free: Vec<usize> = (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect();
        let vectors = free.iter().map(|&f| {
            let mut w = vec![Scalar::zero(); self.ambient];
            w[f] = Scalar::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                w[p] = -&row[f];
            }
            w
        });
        // Rows of the canonical basis of a nullspace are independent already,
        // but re-spanning puts them in canonical order.
        Subspace::span(self.field, self.ambient, vectors.collect::<Vec<_>>())
            .expect("lengths match ambient")
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_compatible(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// Lift a subspace given in coordinates w.r.t. `frame` into the frame's ambient space.
    pub fn image_in(&self, frame: &Subspace) -> Result<Subspace, Error> {
        if self.ambient != frame.dim() {
            return Err(Error::AmbientMismatch(frame.dim(), self.ambient));
        }
        Subspace::span(
            frame.field,
            frame.ambient,
            self.rows.iter().map(|c| frame.combine(c)).collect::<Vec<_>>(),
        )
    }

    /// Coordinates of this subspace w.r.t. `frame`, which must contain it.
    pub fn coordinates_in(&self, frame: &Subspace) -> Result<Option<Subspace>, Error> {
        let mut coords = Vec::with_capacity(self.dim());
        for v in &self.rows {
            match frame.coordinates(v)? {
                Some(c) => coords.push(c),
                None => return Ok(None),
            }
        }
        Subspace::span(self.field, frame.dim(), coords).map(Some)
    }
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace<{}>(dim {} in {}) ", self.field, self.dim(), self.ambient)?;
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}
