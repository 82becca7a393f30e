//! Constructors for the genus-one nilpotent families and their parameters.

use std::fmt;
use std::str::FromStr;

use crate::algebra::Algebra;
use crate::error::Error;
use crate::exactlin::{Field, Mat, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum BasisOrder {
    /// `e1..en, f1..fn, z`
    #[default]
    Grouped,
    /// `e1, f1, …, en, fn, z`
    Interleaved,
}

impl FromStr for BasisOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "grouped" => Ok(BasisOrder::Grouped),
            "interleaved" => Ok(BasisOrder::Interleaved),
            other => Err(Error::InvalidArgument(format!("unknown basis order `{other}`"))),
        }
    }
}

impl fmt::Display for BasisOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasisOrder::Grouped => "grouped",
            BasisOrder::Interleaved => "interleaved",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    HeisenbergLie,
    HeisenbergLeibniz,
    Kronecker,
    Dieudonne,
}

/// A family member together with its parameter and basis order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub parameter: Option<Mat>,
    pub order: BasisOrder,
}

impl FamilySpec {
    /// Heisenberg Leibniz algebra with parameter `J_a`.
    pub fn jordan(n: usize, a: Scalar, order: BasisOrder) -> Self {
        FamilySpec {
            family: Family::HeisenbergLeibniz,
            n,
            parameter: Some(jordan(&a, n)),
            order,
        }
    }

    pub fn build(&self) -> Result<Algebra, Error> {
        if self.n == 0 {
            return Err(Error::InvalidArgument("n must be at least 1".into()));
        }
        match (self.family, &self.parameter) {
            (Family::HeisenbergLeibniz, Some(a)) => heisenberg_leibniz(self.n, a, self.order),
            (Family::HeisenbergLeibniz, None) => {
                Err(Error::InvalidArgument("the Heisenberg Leibniz family needs a parameter matrix".into()))
            }
            (_, Some(_)) => Err(Error::InvalidArgument("this family takes no parameter".into())),
            (Family::HeisenbergLie, None) => heisenberg_lie(self.n, self.order),
            (Family::Kronecker, None) => kronecker(self.n, self.order),
            (Family::Dieudonne, None) => {
                if self.order != BasisOrder::Grouped {
                    return Err(Error::InvalidArgument("the Dieudonné family has a single basis order".into()));
                }
                dieudonne(self.n)
            }
        }
    }
}

fn grouped_labels(n: usize) -> Vec<String> {
    (1..=n)
        .map(|i| format!("e{i}"))
        .chain((1..=n).map(|i| format!("f{i}")))
        .chain(std::iter::once("z".to_string()))
        .collect()
}

/// Old (grouped) index to new (interleaved) index on a basis `e.., f.., z`.
pub fn grouped_to_interleaved(n: usize) -> Vec<usize> {
    let mut perm = vec![0; 2 * n + 1];
    for i in 0..n {
        perm[i] = 2 * i;
        perm[n + i] = 2 * i + 1;
    }
    perm[2 * n] = 2 * n;
    perm
}

pub fn interleaved_to_grouped(n: usize) -> Vec<usize> {
    invert(&grouped_to_interleaved(n))
}

pub(crate) fn invert(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

fn reorder(l: Algebra, n: usize, order: BasisOrder) -> Result<Algebra, Error> {
    match order {
        BasisOrder::Grouped => Ok(l),
        BasisOrder::Interleaved => l.permute_basis(&grouped_to_interleaved(n)),
    }
}

/// `[e_i,f_j] = (δ_ij + a_ij) z`, `[f_j,e_i] = (−δ_ij + a_ij) z`.
pub fn heisenberg_leibniz(n: usize, a: &Mat, order: BasisOrder) -> Result<Algebra, Error> {
    if a.rows() != n || a.cols() != n {
        return Err(Error::Shape(format!(
            "parameter is {}x{}, expected {n}x{n}",
            a.rows(),
            a.cols()
        )));
    }
    let z = 2 * n;
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let delta = if i == j { Scalar::one() } else { Scalar::zero() };
            entries.push((i, n + j, z, &delta + &a[(i, j)]));
            entries.push((n + j, i, z, &a[(i, j)] - &delta));
        }
    }
    let l = Algebra::from_entries(a.field(), grouped_labels(n), entries)?;
    reorder(l, n, order)
}

pub fn heisenberg_lie(n: usize, order: BasisOrder) -> Result<Algebra, Error> {
    heisenberg_leibniz(n, &Mat::zeros(Field::Q, n, n), order)
}

/// `[e_i,f_i] = [f_i,e_i] = z`, `[e_i,f_{i−1}] = z`, `[f_{i−1},e_i] = −z`.
pub fn kronecker(n: usize, order: BasisOrder) -> Result<Algebra, Error> {
    let z = 2 * n;
    let mut entries = Vec::new();
    for i in 0..n {
        entries.push((i, n + i, z, Scalar::one()));
        entries.push((n + i, i, z, Scalar::one()));
    }
    for i in 1..n {
        entries.push((i, n + i - 1, z, Scalar::one()));
        entries.push((n + i - 1, i, z, Scalar::from_int(-1)));
    }
    let l = Algebra::from_entries(Field::Q, grouped_labels(n), entries)?;
    reorder(l, n, order)
}

/// Basis `e1..e(2n+1), z`.
pub fn dieudonne(n: usize) -> Result<Algebra, Error> {
    let labels: Vec<String> = (1..=2 * n + 1)
        .map(|i| format!("e{i}"))
        .chain(std::iter::once("z".to_string()))
        .collect();
    let z = 2 * n + 1;
    // 1-based `e_i` is index `i - 1`
    let e = |i: usize| i - 1;
    let one = Scalar::one;
    let mut entries = vec![(e(1), e(n + 2), z, one()), (e(n + 1), e(2 * n + 1), z, one())];
    for i in 2..=n {
        entries.push((e(i), e(n + i), z, one()));
        entries.push((e(i), e(n + i + 1), z, one()));
    }
    for i in n + 2..=2 * n + 1 {
        entries.push((e(i), e(i - n), z, one()));
        entries.push((e(i), e(i - n - 1), z, Scalar::from_int(-1)));
    }
    Algebra::from_entries(Field::Q, labels, entries)
}

pub fn abelian(field: Field, k: usize) -> Algebra {
    Algebra::abelian(field, k)
}

/// Lower Jordan block: `a` on the diagonal, ones below it.
pub fn jordan(a: &Scalar, n: usize) -> Mat {
    let field = if a.is_real() { Field::Q } else { Field::Qi };
    let mut m = Mat::zeros(field, n, n);
    for i in 0..n {
        m[(i, i)] = a.clone();
        if i > 0 {
            m[(i, i - 1)] = Scalar::one();
        }
    }
    m
}

/// Companion matrix of the monic `x^k + c_{k−1} x^{k−1} + … + c_0`, given `[c_0, …, c_{k−1}]`.
pub fn companion(coeffs: &[Scalar]) -> Mat {
    let k = coeffs.len();
    let field = if coeffs.iter().all(Scalar::is_real) { Field::Q } else { Field::Qi };
    let mut m = Mat::zeros(field, k, k);
    for i in 1..k {
        m[(i, i - 1)] = Scalar::one();
    }
    for (i, c) in coeffs.iter().enumerate() {
        m[(i, k - 1)] = -c;
    }
    m
}

/// Coefficients `[c_0, …, c_{n−1}]` of `(x − a)^n`.
pub fn power_of_linear(a: &Scalar, n: usize) -> Vec<Scalar> {
    // poly[k] is the coefficient of x^k
    let mut poly = vec![Scalar::one()];
    for _ in 0..n {
        let mut next = vec![Scalar::zero(); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= &(c * a);
        }
        poly = next;
    }
    poly.truncate(n);
    poly
}

/// `2n×2n` block matrix with `R = [[a, b], [−b, a]]` on the diagonal and `I₂` below it.
pub fn real_block(a: &Scalar, b: &Scalar, n: usize) -> Result<Mat, Error> {
    if !a.is_real() || !b.is_real() {
        return Err(Error::NotInField(Field::Q));
    }
    if b.is_zero() {
        return Err(Error::InvalidArgument("real_block needs b ≠ 0".into()));
    }
    let mut m = Mat::zeros(Field::Q, 2 * n, 2 * n);
    for k in 0..n {
        let r = 2 * k;
        m[(r, r)] = a.clone();
        m[(r, r + 1)] = b.clone();
        m[(r + 1, r)] = -b;
        m[(r + 1, r + 1)] = a.clone();
        if k > 0 {
            m[(r, r - 2)] = Scalar::one();
            m[(r + 1, r - 1)] = Scalar::one();
        }
    }
    Ok(m)
}

/// Entrywise `a + bi ↦ [[a, b], [−b, a]]`.
pub fn realify_matrix(m: &Mat) -> Mat {
    let mut out = Mat::zeros(Field::Q, 2 * m.rows(), 2 * m.cols());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let s = &m[(r, c)];
            let (re, im) = (s.re(), s.im());
            out[(2 * r, 2 * c)] = re.clone();
            out[(2 * r, 2 * c + 1)] = im.clone();
            out[(2 * r + 1, 2 * c)] = -&im;
            out[(2 * r + 1, 2 * c + 1)] = re;
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RealifyMode {
    /// Realify the parameter matrix of a Heisenberg Leibniz algebra: dim `2n+1 ↦ 4n+1`.
    Heisenberg,
    /// Restriction of scalars on the basis `u_k, v_k = i·u_k`: dim `d ↦ 2d`.
    ScalarRestriction,
}

/// `𝔩^{J_R}_{4n+1}` for `z = a + bi`.
pub fn realify_heisenberg(n: usize, a: &Scalar, b: &Scalar, order: BasisOrder) -> Result<Algebra, Error> {
    heisenberg_leibniz(2 * n, &real_block(a, b, n)?, order)
}

pub fn realify_algebra(l: &Algebra, mode: RealifyMode) -> Result<Algebra, Error> {
    if l.field() != Field::Qi {
        return Err(Error::FieldMismatch(Field::Qi, l.field()));
    }
    match mode {
        RealifyMode::Heisenberg => {
            let (n, param) = heisenberg_parameter(l)?;
            heisenberg_leibniz(2 * n, &realify_matrix(&param), BasisOrder::Grouped)
        }
        RealifyMode::ScalarRestriction => scalar_restriction(l),
    }
}

/// Recovers `(n, A)` from an algebra on the grouped Heisenberg basis.
pub fn heisenberg_parameter(l: &Algebra) -> Result<(usize, Mat), Error> {
    let d = l.dim();
    if d.is_multiple_of(2) {
        return Err(Error::InvalidArgument("not on a Heisenberg basis".into()));
    }
    let n = d / 2;
    let mut a = Mat::zeros(l.field(), n, n);
    for i in 0..n {
        for j in 0..n {
            let c = l.structure_constant(i, n + j, 2 * n);
            a[(i, j)] = if i == j { &c - &Scalar::one() } else { c };
        }
    }
    let rebuilt = heisenberg_leibniz(n, &a, BasisOrder::Grouped)?;
    if rebuilt.tensor() != l.tensor() {
        return Err(Error::InvalidArgument("not a Heisenberg Leibniz algebra on the grouped basis".into()));
    }
    Ok((n, a))
}

fn scalar_restriction(l: &Algebra) -> Result<Algebra, Error> {
    let d = l.dim();
    let labels = l
        .labels()
        .iter()
        .cloned()
        .chain(l.labels().iter().map(|s| format!("i{s}")))
        .collect();
    let mut entries = Vec::new();
    for j in 0..d {
        for k in 0..d {
            for (m, c) in l.basis_product(j, k) {
                let (al, be) = (c.re(), c.im());
                let (u, v) = (*m, d + *m);
                entries.push((j, k, u, al.clone()));
                entries.push((j, k, v, be.clone()));
                entries.push((j, d + k, u, -&be));
                entries.push((j, d + k, v, al.clone()));
                entries.push((d + j, k, u, -&be));
                entries.push((d + j, k, v, al.clone()));
                entries.push((d + j, d + k, u, -&al));
                entries.push((d + j, d + k, v, -&be));
            }
        }
    }
    Algebra::from_entries(Field::Q, labels, entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn br(l: &Algebra, a: &str, b: &str) -> Vec<Scalar> {
        let i = l.index_of(a).unwrap();
        let j = l.index_of(b).unwrap();
        l.basis_bracket(i, j)
    }

    fn z_times(l: &Algebra, c: i64) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); l.dim()];
        v[l.index_of("z").unwrap()] = q(c);
        v
    }

    #[test]
    fn heisenberg_n1_a2() {
        let l = heisenberg_leibniz(1, &jordan(&q(2), 1), BasisOrder::Grouped).unwrap();
        assert_eq!(br(&l, "e1", "f1"), z_times(&l, 3));
        assert_eq!(br(&l, "f1", "e1"), z_times(&l, 1));
    }

    #[test]
    fn zero_parameter_is_heisenberg_lie() {
        let l = heisenberg_leibniz(1, &jordan(&q(0), 1), BasisOrder::Grouped).unwrap();
        assert!(l.classify().lie);
        assert_eq!(l, heisenberg_lie(1, BasisOrder::Grouped).unwrap());
    }

    #[test]
    fn jordan_one_bracket_table() {
        let l = heisenberg_leibniz(2, &jordan(&q(1), 2), BasisOrder::Grouped).unwrap();
        assert_eq!(br(&l, "e2", "f1"), z_times(&l, 1));
        assert_eq!(br(&l, "f1", "e2"), z_times(&l, 1));
        assert_eq!(br(&l, "e1", "f2"), z_times(&l, 0));
        assert_eq!(br(&l, "e1", "f1"), z_times(&l, 2));
        assert_eq!(br(&l, "f1", "e1"), z_times(&l, 0));
    }

    #[test]
    fn companion_matches_jordan_charpoly() {
        for n in 1..=4 {
            for a in [q(2), Scalar::ratio(1, 2), q(-3), Scalar::i()] {
                let c = companion(&power_of_linear(&a, n));
                assert_eq!(c.charpoly().unwrap(), jordan(&a, n).charpoly().unwrap());
            }
        }
    }

    #[test]
    fn real_block_of_i() {
        assert_eq!(real_block(&q(0), &q(1), 1).unwrap(), Mat::from_ints(&[&[0, 1], &[-1, 0]]));
        assert!(real_block(&q(1), &q(0), 1).is_err());
        let m = real_block(&q(2), &q(3), 2).unwrap();
        assert_eq!(m[(2, 0)], q(1));
        assert_eq!(m[(3, 1)], q(1));
        assert_eq!(m[(2, 1)], q(0));
    }

    #[test]
    fn kronecker_n1_and_n2() {
        let k1 = kronecker(1, BasisOrder::Grouped).unwrap();
        assert_eq!(br(&k1, "e1", "f1"), z_times(&k1, 1));
        assert_eq!(br(&k1, "f1", "e1"), z_times(&k1, 1));
        let k2 = kronecker(2, BasisOrder::Grouped).unwrap();
        assert_eq!(br(&k2, "e2", "f1"), z_times(&k2, 1));
        assert_eq!(br(&k2, "f1", "e2"), z_times(&k2, -1));
        let kind = k2.classify();
        assert!(kind.symmetric && !kind.lie);
    }

    #[test]
    fn dieudonne_n1() {
        let d = dieudonne(1).unwrap();
        assert_eq!(br(&d, "e1", "e3"), z_times(&d, 1));
        assert_eq!(br(&d, "e2", "e3"), z_times(&d, 1));
        assert_eq!(br(&d, "e3", "e2"), z_times(&d, 1));
        assert_eq!(br(&d, "e3", "e1"), z_times(&d, -1));
        let nonzero = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .filter(|&(i, j)| !d.basis_product(i, j).is_empty())
            .count();
        assert_eq!(nonzero, 4);
        assert!(d.classify().left_leibniz);
    }

    #[test]
    fn families_are_genus_one_and_two_step() {
        let mut all = vec![dieudonne(3).unwrap()];
        for n in 1..=3 {
            all.push(kronecker(n, BasisOrder::Interleaved).unwrap());
            all.push(heisenberg_leibniz(n, &jordan(&Scalar::ratio(1, 2), n), BasisOrder::Grouped).unwrap());
        }
        for l in all {
            assert_eq!(l.genus(), 1);
            assert_eq!(l.is_nilpotent(), (true, 2));
            assert!(l.classify().symmetric);
            assert!(l.centers().center.contains(&l.commutator_ideal()).unwrap());
        }
    }

    #[test]
    fn interleaved_round_trip() {
        let k = kronecker(2, BasisOrder::Grouped).unwrap();
        let i = k.permute_basis(&grouped_to_interleaved(2)).unwrap();
        assert_eq!(i.labels(), ["e1", "f1", "e2", "f2", "z"]);
        assert_eq!(i, kronecker(2, BasisOrder::Interleaved).unwrap());
        assert_eq!(i.permute_basis(&interleaved_to_grouped(2)).unwrap(), k);
    }

    #[test]
    fn realification_of_l3_ji() {
        let l = heisenberg_leibniz(1, &jordan(&Scalar::i(), 1), BasisOrder::Grouped).unwrap();
        assert_eq!(l.field(), Field::Qi);
        let r = realify_algebra(&l, RealifyMode::Heisenberg).unwrap();
        assert_eq!(r, realify_heisenberg(1, &q(0), &q(1), BasisOrder::Grouped).unwrap());
        let r = r.permute_basis(&grouped_to_interleaved(2)).unwrap();
        assert_eq!(br(&r, "e1", "f1"), z_times(&r, 1));
        assert_eq!(br(&r, "f1", "e1"), z_times(&r, -1));
        assert_eq!(br(&r, "e1", "f2"), z_times(&r, 1));
        assert_eq!(br(&r, "f2", "e1"), z_times(&r, 1));
        assert_eq!(br(&r, "e2", "f1"), z_times(&r, -1));
        assert_eq!(br(&r, "f1", "e2"), z_times(&r, -1));
        let generic = realify_algebra(&l, RealifyMode::ScalarRestriction).unwrap();
        assert_eq!(generic.dim(), 6);
        assert!(generic.classify().left_leibniz);
    }

    #[test]
    fn scalar_restriction_of_real_input() {
        let l = kronecker(2, BasisOrder::Grouped).unwrap();
        let lq = Algebra::from_tensor(Field::Qi, l.labels().to_vec(), l.tensor()).unwrap();
        let r = realify_algebra(&lq, RealifyMode::ScalarRestriction).unwrap();
        assert_eq!(r.dim(), 10);
        assert_eq!(r.classify(), l.classify());
        assert!(realify_algebra(&l, RealifyMode::ScalarRestriction).is_err());
    }

    #[test]
    fn family_spec_validation() {
        let spec = FamilySpec { family: Family::Kronecker, n: 2, parameter: Some(jordan(&q(1), 2)), order: BasisOrder::Grouped };
        assert!(spec.build().is_err());
        let spec = FamilySpec::jordan(2, q(2), BasisOrder::Interleaved);
        assert_eq!(spec.build().unwrap().dim(), 5);
        let bad = FamilySpec { family: Family::HeisenbergLeibniz, n: 2, parameter: Some(jordan(&q(1), 3)), order: BasisOrder::Grouped };
        assert!(matches!(bad.build(), Err(Error::Shape(_))));
    }
}
