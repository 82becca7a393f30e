//! One PASS/FAIL line per acceptance criterion. Run with `--nocapture` to see them.
//!
//! Criteria the engine shows to be unattainable are still checked as stated and
//! reported as FAIL with the computed values; the test asserts that exactly
//! those criteria fail, so any other regression breaks the build.

mod common;

use std::collections::BTreeSet;

use common::{ad_nilpotent, catalog_members, derivation_residual_zero, extra_members, q, random_solvable};
use leibder::catalog::{self, BasisOrder};
use leibder::claims::named::{DieudonneNamed, HeisenbergNamed, SplitFamily, SplitNamed};
use leibder::claims::{realify_derivation, run, RunOptions, Status};
use leibder::derivations::{
    aider_genus1, aider_genus1_two_sided, der_algebra, induced_structure, inner_derivations, is_derivation, random_vector,
    span_of, MatrixLieAlgebra,
};
use leibder::dsl::{parse, serialize_algebra, to_algebra};
use leibder::exactlin::{vec_add, Field, Mat, Scalar};
use leibder::liestruct::{is_semisimple, nilradical, radical, verify_levi};
use leibder::{Algebra, SeriesKind, Side};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Criterion {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Criterion {
    fn new() -> Self {
        Criterion { failures: Vec::new(), notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, expected: T, actual: T) {
        if expected != actual {
            self.failures.push(format!("{what}: expected {expected:?}, got {actual:?}"));
        }
    }

    fn report(self, id: usize, title: &str) -> bool {
        let pass = self.failures.is_empty();
        println!("criterion {id}: {} {title}", if pass { "PASS" } else { "FAIL" });
        for f in self.failures.iter().take(6) {
            println!("    mismatch: {f}");
        }
        if self.failures.len() > 6 {
            println!("    ... {} mismatches in total", self.failures.len());
        }
        for n in &self.notes {
            println!("    note: {n}");
        }
        pass
    }
}

struct Der {
    alg: Algebra,
    der: MatrixLieAlgebra,
    lie: Algebra,
}

fn der_of(alg: Algebra) -> Der {
    let der = der_algebra(&alg);
    let lie = induced_structure(&der).unwrap();
    Der { alg, der, lie }
}

fn jordan(n: usize, a: &Scalar, order: BasisOrder) -> Der {
    der_of(catalog::heisenberg_leibniz(n, &catalog::jordan(a, n), order).unwrap())
}

fn derived_dims(g: &Algebra) -> Vec<usize> {
    g.series(SeriesKind::Derived).iter().map(|s| s.dim()).collect()
}

/// Number of nonzero terms before the derived series reaches 0.
fn solvable_class(g: &Algebra) -> Option<usize> {
    let (done, class) = g.is_solvable();
    done.then_some(class)
}

fn criterion_1() -> bool {
    let mut c = Criterion::new();
    for n in 1..=5 {
        for a in [q(2, 1), q(1, 2), q(-3, 1)] {
            let d = jordan(n, &a, BasisOrder::Grouped);
            let tag = format!("n={n} a={a}");
            let inn = inner_derivations(&d.alg).unwrap();
            let aider = aider_genus1(&d.alg).unwrap();
            c.eq(&format!("{tag} dim Der"), 3 * n + 1, d.der.dim());
            c.eq(&format!("{tag} dim Inn"), 2 * n, inn.dim());
            c.check(aider.span() == inn.span(), || format!("{tag} AIDer ≠ Inn"));
            c.eq(&format!("{tag} dim Z(Der)"), 0, d.lie.centers().center.dim());
            let d1 = d.lie.commutator_ideal();
            c.eq(&format!("{tag} dim [Der,Der]"), 2 * n, d1.dim());
            c.check(d.lie.product_space(&d1, &d1).unwrap().is_zero(), || format!("{tag} [Der,Der] not abelian"));
            c.eq(&format!("{tag} dim nilradical"), 3 * n - 1, nilradical(&d.lie).unwrap().dim());
            c.check(!d.lie.is_nilpotent().0, || format!("{tag} Der nilpotent"));
            c.eq(&format!("{tag} solvable class"), Some(2), solvable_class(&d.lie));
        }
    }
    c.report(1, "Heisenberg generic a ∈ {2, 1/2, −3}")
}

fn criterion_2() -> bool {
    let mut c = Criterion::new();
    let mut two_sided_ok = true;
    for n in 1..=5 {
        for a in [q(1, 1), q(-1, 1)] {
            let d = jordan(n, &a, BasisOrder::Grouped);
            let tag = format!("n={n} a={a}");
            let inn = inner_derivations(&d.alg).unwrap();
            let aider = aider_genus1(&d.alg).unwrap();
            c.eq(&format!("{tag} dim Inn"), 2 * n - 1, inn.dim());
            c.eq(&format!("{tag} dim AIDer"), 2 * n, aider.dim());
            c.check(aider.span().contains(inn.span()).unwrap() && aider.dim() == inn.dim() + 1, || {
                format!("{tag} AIDer ⊋ Inn with codimension 1 fails")
            });
            let two = aider_genus1_two_sided(&d.alg).unwrap();
            two_sided_ok &= two.dim() == 2 * n && two.span().contains(inn.span()).unwrap();
        }
    }
    c.notes.push(
        "with d(x) ∈ [L,x] as defined, AIDer is the set of maps into [L,L] vanishing on the right center, \
         which has the same dimension as Inn, so AIDer = Inn here"
            .into(),
    );
    c.notes.push(format!(
        "the two-sided condition d(x) ∈ [L,x] + [x,L] gives dim 2n containing Inn for every instance: {two_sided_ok}"
    ));
    c.report(2, "Heisenberg exceptional a = ±1")
}

fn split_levi(d: &Der, s: &SplitNamed) -> (bool, bool) {
    let levi = s.levi().expect("Levi generators");
    let sub = d.der.subspace_of(&levi).unwrap();
    let verified = verify_levi(&d.lie, &sub).unwrap().is_verified();
    let semisimple = sub.dim() == 3 && is_semisimple(&d.lie.subalgebra(&sub).unwrap()).unwrap();
    (verified, semisimple)
}

fn criterion_3() -> bool {
    let mut c = Criterion::new();
    let mut classes = Vec::new();
    for n in 1..=5 {
        let d = jordan(n, &Scalar::zero(), BasisOrder::Interleaved);
        let s = SplitNamed::new(SplitFamily::Heisenberg0, n);
        let tag = format!("n={n}");
        let even = n % 2 == 0;
        c.eq(&format!("{tag} dim Der"), if even { 4 * n + 1 } else { 4 * n + 2 }, d.der.dim());
        let nil = nilradical(&d.lie).unwrap();
        if even {
            c.eq(&format!("{tag} solvable class"), Some(n / 2 + 1), solvable_class(&d.lie));
            classes.push(format!("n={n}: {:?}", derived_dims(&d.lie)));
            c.eq(&format!("{tag} dim nilradical"), 4 * n - 1, nil.dim());
        } else {
            c.check(!d.lie.is_solvable().0, || format!("{tag} Der solvable"));
            let (verified, semisimple) = split_levi(&d, &s);
            c.check(verified && semisimple, || format!("{tag} Levi complement not verified"));
            c.eq(&format!("{tag} dim nilradical"), 4 * n - 2, nil.dim());
        }
        let inn = inner_derivations(&d.alg).unwrap();
        c.eq(&format!("{tag} dim Inn"), 2 * n, inn.dim());
        let inn_sub = d.der.subspace_of(&inn.basis()).unwrap();
        c.check(d.lie.product_space(&inn_sub, &inn_sub).unwrap().is_zero(), || format!("{tag} Inn not abelian"));
    }
    let h3 = der_of(catalog::heisenberg_lie(1, BasisOrder::Grouped).unwrap());
    c.eq("dim Der(h3)", 6, h3.der.dim());
    c.notes.push(format!(
        "derived series dims for even n {}; the series reaches 0 after n/2+2 nonzero terms, \
         the convention under which the Dieudonné series (3n+3, 3n+1, n, 0) is 3-step",
        classes.join(", ")
    ));
    c.report(3, "Heisenberg a = 0")
}

fn criterion_4() -> bool {
    let mut c = Criterion::new();
    let mut minus_ok = true;
    for n in 1..=5 {
        let d = der_of(catalog::kronecker(n, BasisOrder::Interleaved).unwrap());
        let s = SplitNamed::new(SplitFamily::Kronecker, n);
        let h = HeisenbergNamed::interleaved(n);
        let tag = format!("n={n}");
        let even = n % 2 == 0;
        c.eq(&format!("{tag} dim Der"), if even { 4 * n + 1 } else { 4 * n }, d.der.dim());
        if even {
            let (verified, semisimple) = split_levi(&d, &s);
            c.check(verified && semisimple, || format!("{tag} Levi complement not verified"));
        } else {
            c.eq(&format!("{tag} solvable class"), Some(n.div_ceil(2) + 1), solvable_class(&d.lie));
        }
        let inn = inner_derivations(&d.alg).unwrap();
        c.eq(&format!("{tag} dim Inn"), 2 * n, inn.dim());
        c.check(inn.span() == &span_of(2 * n + 1, Field::Q, &h.ab()).unwrap(), || format!("{tag} Inn ≠ <A,B>"));
        let ad = |idx: usize| d.alg.adjoint(&d.alg.basis_vector(idx), Side::Left).unwrap();
        for i in 1..=n {
            let mut want_e = h.b(i).clone();
            if i > 1 {
                want_e = want_e.try_add(h.b(i - 1)).unwrap();
            }
            c.check(ad(2 * (i - 1)) == want_e, || format!("{tag} ad e{i} ≠ B_(i-1) + B_i"));
            let (mut plus, mut minus) = (h.a(i).clone(), h.a(i).clone());
            if i < n {
                plus = plus.try_add(h.a(i + 1)).unwrap();
                minus = minus.try_sub(h.a(i + 1)).unwrap();
            }
            let actual = ad(2 * i - 1);
            c.check(actual == plus, || format!("{tag} ad f{i} ≠ A_i + A_(i+1)"));
            minus_ok &= actual == minus;
        }
    }
    for n in 1..=4 {
        let zero = jordan(n, &Scalar::zero(), BasisOrder::Grouped);
        let k = der_of(catalog::kronecker(n, BasisOrder::Grouped).unwrap());
        let meet = zero.der.span().intersect(k.der.span()).unwrap();
        for a in [q(2, 1), q(1, 2), q(-3, 1), q(1, 1), q(-1, 1)] {
            let ja = jordan(n, &a, BasisOrder::Grouped);
            c.check(&meet == ja.der.span(), || format!("n={n} a={a} Der(J0) ∩ Der(k) ≠ Der(Ja)"));
        }
    }
    c.notes.push(format!(
        "from [f_(i-1), e_i] = −z in the definition, ad f_i = A_i − A_(i+1); this holds for every n and i: {minus_ok}"
    ));
    c.report(4, "Kronecker")
}

fn criterion_5() -> bool {
    let mut c = Criterion::new();
    let mut two_sided = Vec::new();
    for n in 1..=5 {
        let d = der_of(catalog::dieudonne(n).unwrap());
        let dn = DieudonneNamed::new(n);
        let tag = format!("n={n}");
        c.eq(&format!("{tag} dim Der"), 3 * n + 3, d.der.dim());
        c.eq(&format!("{tag} derived dims"), vec![3 * n + 3, 3 * n + 1, n, 0], derived_dims(&d.lie));
        c.check(nilradical(&d.lie).unwrap() == d.lie.commutator_ideal(), || format!("{tag} nilradical ≠ Der'"));
        let inn = inner_derivations(&d.alg).unwrap();
        c.eq(&format!("{tag} dim Inn"), 2 * n, inn.dim());
        let mut expected: Vec<Mat> = (1..=n).map(|k| dn.a(k).try_sub(dn.a(n + 1)).unwrap()).collect();
        expected.extend(dn.a[n + 1..].iter().cloned());
        c.check(inn.span() == &span_of(2 * n + 2, Field::Q, &expected).unwrap(), || format!("{tag} Inn constraint"));
        let aider = aider_genus1(&d.alg).unwrap();
        c.eq(&format!("{tag} dim AIDer"), 2 * n + 1, aider.dim());
        let single = dn.a(n + 1);
        c.check(!inn.contains(single).unwrap(), || format!("{tag} A_(n+1) inner"));
        c.check(aider.contains(single).unwrap(), || format!("{tag} A_(n+1) not almost inner"));
        let two = aider_genus1_two_sided(&d.alg).unwrap();
        two_sided.push(format!("{}{}", two.dim(), if two.contains(single).unwrap() { "+" } else { "" }));
    }
    let mut opts = RunOptions::new(3, vec![q(2, 1)], 0);
    opts.only = Some(vec!["D5".into()]);
    let d5 = run(&opts).unwrap();
    let n3 = d5.claims.iter().find(|r| r.params.get("n").map(String::as_str) == Some("3")).unwrap();
    c.eq("D5 n=3 status", Status::Discrepancy, n3.status);
    c.notes.push(format!(
        "two-sided AIDer dims for n=1..5 (+ marks A_(n+1) inside): {}; the one-sided set equals Inn",
        two_sided.join(", ")
    ));
    c.report(5, "Dieudonné")
}

fn criterion_6() -> bool {
    let mut c = Criterion::new();
    let real = |a: i64| der_of(catalog::realify_heisenberg(1, &q(a, 1), &q(1, 1), BasisOrder::Interleaved).unwrap());
    c.eq("dim Der(l5R) a=2", 7, real(2).der.dim());
    c.eq("dim Der(l5R) a=0", 9, real(0).der.dim());
    let mut opts = RunOptions::new(1, vec![q(2, 1)], 0);
    opts.only = Some(vec!["R2".into(), "R3".into()]);
    for r in run(&opts).unwrap().claims {
        c.check(r.status == Status::Confirmed, || format!("{} {:?}: {}", r.id, r.params, r.actual));
        if r.id == "R3" {
            c.notes.extend(r.notes.iter().map(|n| format!("{:?}: {n}", r.params)));
        }
    }
    let target = real(0);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10 {
        let alpha = leibder::derivations::small_rational(&mut rng);
        let (mu, nu) = (random_vector(&mut rng, 2), random_vector(&mut rng, 2));
        let mu = Scalar::gaussian(mu[0].clone(), mu[1].clone());
        let nu = Scalar::gaussian(nu[0].clone(), nu[1].clone());
        let m = realify_derivation(&alpha, &alpha, &mu, &nu).with_field(Field::Q).unwrap();
        c.check(m[(4, 4)] == &alpha + &alpha, || "corner of the iff family is not 2α".into());
        c.check(is_derivation(&m, &target.alg).unwrap(), || format!("α = {alpha} family member not a derivation"));
    }
    c.report(6, "real case l5R")
}

fn criterion_7() -> bool {
    let mut c = Criterion::new();
    let members: Vec<(String, Algebra)> = catalog_members(3).into_iter().chain(extra_members()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (name, l) in &members {
        let der = der_algebra(l);
        let inn = inner_derivations(l).unwrap();
        // (a)
        for m in der.basis() {
            c.check(derivation_residual_zero(&m, l), || format!("(a) {name}: nonzero residual"));
        }
        // (b)
        let aider = aider_genus1(l).unwrap();
        c.check(aider.span().contains(inn.span()).unwrap(), || format!("(b) {name}: Inn ⊄ AIDer"));
        c.check(der.span().contains(aider.span()).unwrap(), || format!("(b) {name}: AIDer ⊄ Der"));
        for d in der.basis() {
            for i in inn.basis() {
                c.check(inn.contains(&d.commutator(&i).unwrap()).unwrap(), || format!("(b) {name}: [Der,Inn] ⊄ Inn"));
            }
        }
        // (c)
        let mut perm: Vec<usize> = (0..l.dim()).collect();
        perm.shuffle(&mut rng);
        let permuted = der_algebra(&l.permute_basis(&perm).unwrap());
        let conjugated = der.conjugate_by_permutation(&perm).unwrap();
        c.check(permuted.span() == conjugated.span(), || format!("(c) {name}"));
        // (e)
        c.check(l.quotient(&l.leib_ideal()).unwrap().classify().lie, || format!("(e) {name}"));
    }
    // (d)
    for round in 0..20 {
        let g = random_solvable(&mut rng, 5);
        let nil = nilradical(&g).unwrap();
        c.check(radical(&g).unwrap() == g.whole(), || format!("(d) algebra {round} not solvable"));
        for v in nil.basis() {
            c.check(ad_nilpotent(&g, v), || format!("(d) algebra {round}: nilradical vector not ad-nilpotent"));
        }
        if nil.dim() < g.dim() {
            let mut outside = 0;
            while outside < 25 {
                let w = vec_add(&random_vector(&mut rng, g.dim()), &nil.combine(&random_vector(&mut rng, nil.dim())));
                if nil.contains_vector(&w).unwrap() {
                    continue;
                }
                c.check(!ad_nilpotent(&g, &w), || format!("(d) algebra {round}: outside vector ad-nilpotent"));
                outside += 1;
            }
        }
    }
    // (f)
    for (name, l) in &members {
        let back = to_algebra(&parse(&serialize_algebra("m", l)).unwrap()).unwrap();
        c.check(&back == l, || format!("(f) {name}: round trip"));
    }
    let words = ["algebra", "basis", "field", "Q", "Qi", "[", "]", ",", "=", "x", "z", "1/0", "-2", "end", "\n"];
    for _ in 0..1000 {
        let len = rand::Rng::gen_range(&mut rng, 0..25);
        let text: Vec<&str> = (0..len).map(|_| *words.choose(&mut rng).unwrap()).collect();
        let _ = parse(&text.join(" "));
    }
    c.notes.push(format!("{} catalog members, 20 random solvable algebras, 1000 fuzzed documents", members.len()));
    c.report(7, "property suites (a)-(f)")
}

fn criterion_8() -> bool {
    let mut c = Criterion::new();
    let mut count = 0;
    let mut members: Vec<(String, Algebra)> = Vec::new();
    for n in 1..=5 {
        members.push((format!("h n={n}"), catalog::heisenberg_lie(n, BasisOrder::Grouped).unwrap()));
        members.push((format!("k n={n}"), catalog::kronecker(n, BasisOrder::Grouped).unwrap()));
        for a in [q(2, 1), q(1, 2), q(-3, 1), q(0, 1), &q(2, 1) + &Scalar::i()] {
            members.push((
                format!("J_{a} n={n}"),
                catalog::heisenberg_leibniz(n, &catalog::jordan(&a, n), BasisOrder::Grouped).unwrap(),
            ));
        }
    }
    for a in [0, 2] {
        members.push((format!("l5R a={a}"), catalog::realify_heisenberg(1, &q(a, 1), &q(1, 1), BasisOrder::Grouped).unwrap()));
    }
    for (name, l) in &members {
        assert_eq!(l.genus(), 1, "{name}");
        let aider = aider_genus1(l).unwrap();
        let inn = inner_derivations(l).unwrap();
        c.check(aider.span() == inn.span(), || format!("{name}: AIDer ≠ Inn"));
        count += 1;
    }
    c.notes.push(format!("{count} genus-one instances"));
    c.report(8, "AIDer = Inn away from l^J±1 and d_n")
}

#[test]
fn acceptance() {
    let results = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
    ];
    let failing: BTreeSet<usize> = results.iter().enumerate().filter(|(_, ok)| !**ok).map(|(i, _)| i + 1).collect();
    println!("failing criteria: {failing:?}");
    assert_eq!(failing, BTreeSet::from([2, 3, 4, 5]));
}
