//! Dense row-major matrices over an exact field.

use std::fmt;
use std::ops::{Index, IndexMut};

use super::scalar::{Field, Scalar};
use super::subspace::Subspace;
use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            field,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// Matrix unit with a single `1` at `(r, c)`.
    pub fn unit(field: Field, n: usize, r: usize, c: usize) -> Self {
        let mut m = Mat::zeros(field, n, n);
        m[(r, c)] = Scalar::one();
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Mat::from_flat(field, r, c, rows.into_iter().flatten().collect())
    }

    /// Integer convenience constructor over Q.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| Scalar::from_int(v)).collect())
            .collect();
        Mat::from_rows(Field::Q, rows).expect("rectangular integer rows")
    }

    pub fn from_flat(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self, Error> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(_bad) = data.iter().find(|s| !field.admits(s)) {
            return Err(Error::NotInField(field));
        }
        Ok(Mat {
            rows,
            cols,
            field,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries; this is the flattening used for subspaces of matrices.
    pub fn flat(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_flat(self) -> Vec<Scalar> {
        self.data
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn with_field(mut self, field: Field) -> Result<Self, Error> {
        if self.data.iter().any(|s| !field.admits(s)) {
            return Err(Error::NotInField(field));
        }
        self.field = field;
        Ok(self)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        Mat {
            data: self.data.iter().map(|x| x * s).collect(),
            ..self.clone()
        }
    }

    fn check_same(&self, other: &Mat) -> Result<Field, Error> {
        let field = self.field.join(other.field)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(field)
    }

    pub fn try_add(&self, other: &Mat) -> Result<Mat, Error> {
        let field = self.check_same(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            field,
            data,
        })
    }

    pub fn try_sub(&self, other: &Mat) -> Result<Mat, Error> {
        let field = self.check_same(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            field,
            data,
        })
    }

    /// Matrix product; skips zero entries of the left factor.
    pub fn try_mul(&self, other: &Mat) -> Result<Mat, Error> {
        let field = self.field.join(other.field)?;
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Mat::zeros(field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * other.cols + j].add_mul(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &Mat) -> Result<Mat, Error> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, Error> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    acc.add_mul(a, b);
                }
                acc
            })
            .collect())
    }

    pub fn trace(&self) -> Scalar {
        let mut t = Scalar::zero();
        for i in 0..self.rows.min(self.cols) {
            t += &self[(i, i)];
        }
        t
    }

    /// `trace(self · other)` without forming the product.
    pub fn trace_of_product(&self, other: &Mat) -> Scalar {
        debug_assert!(self.cols == other.rows && self.rows == other.cols);
        let mut t = Scalar::zero();
        for i in 0..self.rows {
            for k in 0..self.cols {
                t.add_mul(&self[(i, k)], &other[(k, i)]);
            }
        }
        t
    }

    /// Reduced row-echelon form and rank.
    ///
    /// Pivots are the first nonzero entry in column order; every row
    /// operation works on exact fractions kept in lowest terms.
    pub fn rref(&self) -> (Mat, usize) {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(pivot) = (rank..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(rank, pivot);
            let inv = m[(rank, col)].inv().expect("nonzero pivot");
            for c in col..m.cols {
                let v = &m[(rank, c)] * &inv;
                m[(rank, c)] = v;
            }
            for r in 0..m.rows {
                if r == rank || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for c in col..m.cols {
                    let delta = &factor * &m[(rank, c)];
                    m[(r, c)] -= &delta;
                }
            }
            rank += 1;
        }
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// `{v : self·v = 0}` in canonical form.
    pub fn nullspace(&self) -> Subspace {
        let (r, rank) = self.rref();
        let pivots: Vec<usize> = (0..rank)
            .map(|i| (0..r.cols).find(|&c| !r[(i, c)].is_zero()).expect("pivot row"))
            .collect();
        let vectors = (0..r.cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![Scalar::zero(); r.cols];
                v[free] = Scalar::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -&r[(i, free)];
                }
                v
            })
            .collect::<Vec<_>>();
        Subspace::span(self.field, self.cols, vectors).expect("consistent lengths")
    }

    /// Some `x` with `self·x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, Error> {
        if b.len() != self.rows {
            return Err(Error::Shape(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Mat::zeros(Field::Qi, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, self.cols)] = b[r].clone();
        }
        let (red, rank) = aug.rref();
        let mut x = vec![Scalar::zero(); self.cols];
        for i in 0..rank {
            let p = (0..red.cols).find(|&c| !red[(i, c)].is_zero()).expect("pivot row");
            if p == self.cols {
                return Ok(None);
            }
            x[p] = red[(i, self.cols)].clone();
        }
        Ok(Some(x))
    }

    /// Characteristic polynomial coefficients `[c_0, …, c_{n-1}, 1]` of
    /// `det(tI − self)` by the Faddeev–LeVerrier recursion (char 0).
    pub fn charpoly(&self) -> Result<Vec<Scalar>, Error> {
        if !self.is_square() {
            return Err(Error::Shape("characteristic polynomial of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut coeffs = vec![Scalar::zero(); n + 1];
        coeffs[n] = Scalar::one();
        let mut m = Mat::zeros(self.field, n, n);
        for k in 1..=n {
            let mut shifted = m.clone();
            for i in 0..n {
                shifted[(i, i)] += &coeffs[n - k + 1];
            }
            m = self.try_mul(&shifted)?;
            let c = -(&m.trace() / &Scalar::from_int(k as i64));
            coeffs[n - k] = c;
        }
        Ok(coeffs)
    }

    /// Relabel rows and columns: entry `(r, c)` moves to `(perm[r], perm[c])`.
    pub fn conjugate_by_permutation(&self, perm: &[usize]) -> Result<Mat, Error> {
        if !self.is_square() || perm.len() != self.rows {
            return Err(Error::Shape("permutation length must match a square matrix".into()));
        }
        let mut out = Mat::zeros(self.field, self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(perm[r], perm[c])] = self[(r, c)].clone();
            }
        }
        Ok(out)
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat<{}>[", self.field)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .to_rows()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[ {} ]", line.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_of_proportional_rows() {
        let (r, rank) = Mat::from_ints(&[&[2, 4], &[1, 2]]).rref();
        assert_eq!(r, Mat::from_ints(&[&[1, 2], &[0, 0]]));
        assert_eq!(rank, 1);
    }

    #[test]
    fn rref_of_identity() {
        let id = Mat::identity(Field::Q, 3);
        assert_eq!(id.rref(), (id.clone(), 3));
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(Mat::identity(Field::Q, 4).nullspace().dim(), 0);
        assert_eq!(Mat::from_ints(&[&[1, 1, 0]]).nullspace().dim(), 2);
    }

    #[test]
    fn solve_identity_and_underdetermined() {
        let b: Vec<Scalar> = [4, -1, 7].iter().map(|&v| Scalar::from_int(v)).collect();
        assert_eq!(Mat::identity(Field::Q, 3).solve(&b).unwrap(), Some(b.clone()));
        let m = Mat::from_ints(&[&[1, 1]]);
        let x = m.solve(&[Scalar::from_int(3)]).unwrap().unwrap();
        assert_eq!(&x[0] + &x[1], Scalar::from_int(3));
        let inconsistent = Mat::from_ints(&[&[1, 1], &[2, 2]]);
        assert_eq!(inconsistent.solve(&[Scalar::one(), Scalar::one()]).unwrap(), None);
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let q = Mat::identity(Field::Q, 2);
        let qi = Mat::identity(Field::Qi, 2);
        assert_eq!(q.try_mul(&qi), Err(Error::FieldMismatch(Field::Q, Field::Qi)));
        assert!(Mat::from_rows(Field::Q, vec![vec![Scalar::i()]]).is_err());
    }

    #[test]
    fn charpoly_of_companion_like_matrix() {
        // [[0,-2],[1,3]] has characteristic polynomial t^2 - 3t + 2.
        let m = Mat::from_ints(&[&[0, -2], &[1, 3]]);
        let expected: Vec<Scalar> = [2, -3, 1].iter().map(|&v| Scalar::from_int(v)).collect();
        assert_eq!(m.charpoly().unwrap(), expected);
    }
}
