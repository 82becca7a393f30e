use leibder::exactlin::{Field, Mat, Scalar, Subspace};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| Scalar::ratio(p, q))
}

fn gaussian() -> impl Strategy<Value = Scalar> {
    (scalar(), scalar()).prop_map(|(a, b)| Scalar::gaussian(a, b))
}

fn vectors(dim: usize, count: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    prop::collection::vec(prop::collection::vec(scalar(), dim), 0..=count)
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec(scalar(), rows * cols).prop_map(move |v| Mat::from_flat(Field::Q, rows, cols, v).unwrap())
}

proptest! {
    #[test]
    fn scalar_text_round_trip(s in gaussian()) {
        let back: Scalar = s.to_string().parse().unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn scalar_field_axioms(a in gaussian(), b in gaussian(), c in gaussian()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        if let Some(inv) = a.inv() {
            prop_assert!((&a * &inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn canonical_basis_ignores_generators(vs in vectors(5, 5), mix in matrix(5, 5)) {
        let s = Subspace::span(Field::Q, 5, vs.clone()).unwrap();
        let shuffled: Vec<Vec<Scalar>> = vs.iter().rev().cloned().collect();
        prop_assert_eq!(&Subspace::span(Field::Q, 5, shuffled).unwrap(), &s);
        // Recombine with a random matrix; the span can only shrink, and equals s when the mix is invertible.
        let k = vs.len();
        let combos: Vec<Vec<Scalar>> = (0..k)
            .map(|r| {
                let mut out = vec![Scalar::zero(); 5];
                for (c, v) in vs.iter().enumerate() {
                    for (o, x) in out.iter_mut().zip(v) {
                        o.add_mul(&mix[(r, c)], x);
                    }
                }
                out
            })
            .collect();
        let t = Subspace::span(Field::Q, 5, combos).unwrap();
        prop_assert!(s.contains(&t).unwrap());
        let sub = Mat::from_rows(Field::Q, (0..k).map(|r| (0..k).map(|c| mix[(r, c)].clone()).collect()).collect());
        if k > 0 && sub.map(|m| m.rank() == k).unwrap_or(false) {
            prop_assert_eq!(t, s);
        }
    }

    #[test]
    fn rank_nullity(m in matrix(4, 6)) {
        let null = m.nullspace();
        prop_assert_eq!(m.rank() + null.dim(), 6);
        for v in null.basis() {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn dimension_identity(u in vectors(6, 4), v in vectors(6, 4)) {
        let u = Subspace::span(Field::Q, 6, u).unwrap();
        let v = Subspace::span(Field::Q, 6, v).unwrap();
        let sum = u.sum(&v).unwrap();
        let meet = u.intersect(&v).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + v.dim());
        prop_assert!(u.contains(&meet).unwrap() && v.contains(&meet).unwrap());
        prop_assert!(sum.contains(&u).unwrap() && sum.contains(&v).unwrap());
    }

    #[test]
    fn rref_is_idempotent(m in matrix(4, 5)) {
        let (r, rank) = m.rref();
        let (rr, rank2) = r.rref();
        prop_assert_eq!(rank, rank2);
        prop_assert_eq!(rr, r);
    }
}
