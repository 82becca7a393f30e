#![allow(dead_code)]

use leibder::catalog::{self, BasisOrder};
use leibder::derivations::{induced_structure, MatrixLieAlgebra};
use leibder::exactlin::{Field, Mat, Scalar, Subspace};
use leibder::{Algebra, Side};
use rand::Rng;

pub fn q(p: i64, r: i64) -> Scalar {
    Scalar::ratio(p, r)
}

/// Genus-one catalog members up to `nmax`, named.
pub fn catalog_members(nmax: usize) -> Vec<(String, Algebra)> {
    let mut out = Vec::new();
    let a_set = [q(2, 1), q(1, 2), q(-3, 1), q(1, 1), q(-1, 1), q(0, 1)];
    for n in 1..=nmax {
        for order in [BasisOrder::Grouped, BasisOrder::Interleaved] {
            out.push((format!("h n={n} {order}"), catalog::heisenberg_lie(n, order).unwrap()));
            out.push((format!("k n={n} {order}"), catalog::kronecker(n, order).unwrap()));
            for a in &a_set {
                out.push((
                    format!("J_{a} n={n} {order}"),
                    catalog::heisenberg_leibniz(n, &catalog::jordan(a, n), order).unwrap(),
                ));
            }
        }
        out.push((format!("d n={n}"), catalog::dieudonne(n).unwrap()));
    }
    out
}

/// Small complex and real members that exercise the Gaussian field and realification.
pub fn extra_members() -> Vec<(String, Algebra)> {
    let i = Scalar::i();
    vec![
        ("J_i n=1".into(), catalog::heisenberg_leibniz(1, &catalog::jordan(&i, 1), BasisOrder::Grouped).unwrap()),
        ("J_(2+i) n=2".into(), catalog::heisenberg_leibniz(2, &catalog::jordan(&(&q(2, 1) + &i), 2), BasisOrder::Grouped).unwrap()),
        ("l5R a=0".into(), catalog::realify_heisenberg(1, &q(0, 1), &q(1, 1), BasisOrder::Interleaved).unwrap()),
        ("l5R a=2".into(), catalog::realify_heisenberg(1, &q(2, 1), &q(1, 1), BasisOrder::Interleaved).unwrap()),
    ]
}

/// `D[x,y] − [Dx,y] − [x,Dy]` on every pair of basis vectors, computed from the bracket directly.
pub fn derivation_residual_zero(dm: &Mat, l: &Algebra) -> bool {
    let d = l.dim();
    for i in 0..d {
        for j in 0..d {
            let (x, y) = (l.basis_vector(i), l.basis_vector(j));
            let lhs = dm.mul_vec(&l.bracket(&x, &y).unwrap()).unwrap();
            let a = l.bracket(&dm.mul_vec(&x).unwrap(), &y).unwrap();
            let b = l.bracket(&x, &dm.mul_vec(&y).unwrap()).unwrap();
            for k in 0..d {
                if !(&(&lhs[k] - &a[k]) - &b[k]).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

pub fn ad_nilpotent(g: &Algebra, v: &[Scalar]) -> bool {
    let ad = g.adjoint(v, Side::Left).unwrap();
    let mut p = ad.clone();
    for _ in 1..g.dim().max(1) {
        p = p.try_mul(&ad).unwrap();
    }
    p.is_zero()
}

fn small<R: Rng>(rng: &mut R) -> Scalar {
    q(rng.gen_range(-2..=2), rng.gen_range(1..=2))
}

/// Lie closure of a few random upper-triangular `k × k` matrices, as an abstract algebra.
/// Upper-triangular matrices form a solvable algebra, so every closure is solvable.
pub fn random_solvable<R: Rng>(rng: &mut R, max_dim: usize) -> Algebra {
    loop {
        let k = rng.gen_range(2..=3);
        let gens: Vec<Mat> = (0..rng.gen_range(1..=3))
            .map(|_| {
                let mut m = Mat::zeros(Field::Q, k, k);
                for r in 0..k {
                    for c in r..k {
                        if rng.gen_bool(0.6) {
                            m[(r, c)] = small(rng);
                        }
                    }
                }
                m
            })
            .collect();
        let mut span = Subspace::zero(Field::Q, k * k);
        let mut mats: Vec<Mat> = Vec::new();
        let mut queue = gens;
        while let Some(m) = queue.pop() {
            if span.insert(m.flat().to_vec()).unwrap() {
                for other in &mats {
                    queue.push(m.commutator(other).unwrap());
                }
                mats.push(m);
            }
            if span.dim() > max_dim {
                break;
            }
        }
        if span.dim() == 0 || span.dim() > max_dim {
            continue;
        }
        let m = MatrixLieAlgebra::from_span(k, span).unwrap();
        return induced_structure(&m).unwrap();
    }
}
