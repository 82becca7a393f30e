mod common;

use common::{catalog_members, derivation_residual_zero, extra_members};
use leibder::derivations::{aider_genus1, der_algebra, inner_derivations};
use leibder::exactlin::Subspace;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn every_computed_derivation_satisfies_the_identity() {
    for (name, l) in catalog_members(3).into_iter().chain(extra_members()) {
        let der = der_algebra(&l);
        for m in der.basis() {
            assert!(derivation_residual_zero(&m, &l), "{name}");
        }
        let inn = inner_derivations(&l).unwrap();
        for m in inn.basis() {
            assert!(derivation_residual_zero(&m, &l), "{name}: inner");
        }
    }
}

#[test]
fn inn_aider_der_chain_and_inn_is_an_ideal() {
    for (name, l) in catalog_members(3).into_iter().chain(extra_members()) {
        let der = der_algebra(&l);
        let inn = inner_derivations(&l).unwrap();
        let aider = aider_genus1(&l).unwrap();
        assert!(aider.span().contains(inn.span()).unwrap(), "{name}");
        assert!(der.span().contains(aider.span()).unwrap(), "{name}");
        for d in der.basis() {
            for i in inn.basis() {
                assert!(inn.contains(&d.commutator(&i).unwrap()).unwrap(), "{name}");
            }
        }
    }
}

#[test]
fn der_commutes_with_basis_permutation() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, l) in catalog_members(2).into_iter().chain(extra_members()) {
        let mut perm: Vec<usize> = (0..l.dim()).collect();
        perm.shuffle(&mut rng);
        let permuted = der_algebra(&l.permute_basis(&perm).unwrap());
        let conjugated = der_algebra(&l).conjugate_by_permutation(&perm).unwrap();
        assert_eq!(permuted.span(), conjugated.span(), "{name}");
    }
}

#[test]
fn quotient_by_leib_is_lie() {
    for (name, l) in catalog_members(3).into_iter().chain(extra_members()) {
        let leib = l.leib_ideal();
        assert!(l.is_ideal(&leib).unwrap(), "{name}");
        let quotient = l.quotient(&leib).unwrap();
        assert!(quotient.classify().lie, "{name}");
        let whole: Subspace = l.whole();
        assert!(whole.contains(&leib).unwrap());
    }
}
