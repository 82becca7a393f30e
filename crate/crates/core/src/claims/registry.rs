use std::rc::Rc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::checks::{bracket_table, flat_span, labelled, neg, non_derivations, Checks};
use super::named::{lin, DieudonneNamed, HeisenbergNamed, RealNamed, SplitFamily, SplitNamed};
use super::{Claim, Computed, Engine, FamilyKey, Instance, Outcome};
use crate::algebra::{SeriesKind, Side};
use crate::catalog::BasisOrder;
use crate::derivations::{aider_genus1, aider_genus1_two_sided, inner_derivations, is_derivation, small_rational};
use crate::error::Error;
use crate::exactlin::{Field, Mat, Scalar, Subspace};
use crate::liestruct::{is_semisimple, nilradical, radical, verify_levi, LeviStatus};

type R = Result<Outcome, Error>;

// ---- domains ----

fn all_n(nmax: usize, _: &[Scalar]) -> Vec<Instance> {
    (1..=nmax).map(Instance::n).collect()
}

fn even_n(nmax: usize, _: &[Scalar]) -> Vec<Instance> {
    (2..=nmax).step_by(2).map(Instance::n).collect()
}

fn odd_n(nmax: usize, _: &[Scalar]) -> Vec<Instance> {
    (1..=nmax).step_by(2).map(Instance::n).collect()
}

fn n_nonzero_a(nmax: usize, a_set: &[Scalar]) -> Vec<Instance> {
    (1..=nmax)
        .flat_map(|n| a_set.iter().filter(|a| !a.is_zero()).map(move |a| Instance::na(n, a)))
        .collect()
}

fn n_any_a(nmax: usize, a_set: &[Scalar]) -> Vec<Instance> {
    (1..=nmax).flat_map(|n| a_set.iter().map(move |a| Instance::na(n, a))).collect()
}

fn nonzero_a(_: usize, a_set: &[Scalar]) -> Vec<Instance> {
    a_set
        .iter()
        .filter(|a| !a.is_zero())
        .map(|a| Instance {
            a: Some(a.clone()),
            ..Default::default()
        })
        .collect()
}

fn a_zero(_: usize, _: &[Scalar]) -> Vec<Instance> {
    vec![Instance {
        a: Some(Scalar::zero()),
        ..Default::default()
    }]
}

fn real_samples(_: usize, _: &[Scalar]) -> Vec<Instance> {
    [0, 2]
        .iter()
        .map(|&a| Instance {
            a: Some(Scalar::from_int(a)),
            ..Default::default()
        })
        .collect()
}

fn small_n(nmax: usize, _: &[Scalar]) -> Vec<Instance> {
    (1..=nmax.min(3)).map(Instance::n).collect()
}

fn is_unit(a: &Scalar) -> bool {
    a.is_one() || (-a).is_one()
}

fn p1_domain(nmax: usize, a_set: &[Scalar]) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 1..=nmax {
        out.push(Instance {
            family: Some("heisenberg-lie"),
            n: Some(n),
            a: None,
        });
        for a in a_set.iter().filter(|a| !is_unit(a)) {
            out.push(Instance {
                family: Some("heisenberg"),
                n: Some(n),
                a: Some(a.clone()),
            });
        }
        out.push(Instance {
            family: Some("kronecker"),
            n: Some(n),
            a: None,
        });
    }
    out
}

fn p2_domain(nmax: usize, a_set: &[Scalar]) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 1..=nmax {
        for a in a_set.iter().filter(|a| is_unit(a)) {
            out.push(Instance {
                family: Some("heisenberg"),
                n: Some(n),
                a: Some(a.clone()),
            });
        }
        out.push(Instance {
            family: Some("dieudonne"),
            n: Some(n),
            a: None,
        });
    }
    out
}

// ---- helpers ----

fn heis(e: &mut Engine, n: usize, a: &Scalar, order: BasisOrder) -> Result<Rc<Computed>, Error> {
    e.get(FamilyKey::Heisenberg { n, a: a.clone(), order })
}

fn family_of(e: &mut Engine, inst: &Instance) -> Result<Rc<Computed>, Error> {
    let n = inst.n_val();
    match inst.family {
        Some("heisenberg") => heis(e, n, &inst.a_val(), BasisOrder::Grouped),
        Some("heisenberg-lie") => e.get(FamilyKey::HeisenbergLie { n, order: BasisOrder::Grouped }),
        Some("kronecker") => e.get(FamilyKey::Kronecker { n, order: BasisOrder::Grouped }),
        Some("dieudonne") => e.get(FamilyKey::Dieudonne { n }),
        other => Err(Error::Internal(format!("unknown family {other:?}"))),
    }
}

fn coords(c: &Computed, mats: &[Mat]) -> Result<Subspace, Error> {
    c.der.subspace_of(mats)
}

fn d_of(c: &Computed) -> usize {
    c.algebra.dim()
}

fn render(labels: &[String], v: &[Scalar]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(labels)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, l)| if c.is_one() { l.clone() } else { format!("{c}·{l}") })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// Checks that every named matrix is a derivation and that together they span `Der`.
fn named_basis(ch: &mut Checks, c: &Computed, named: &[(String, Mat)]) -> Result<(), Error> {
    let bad = non_derivations(&c.algebra, named)?;
    ch.eq("non-derivations among named matrices", "none".to_string(), if bad.is_empty() { "none".into() } else { bad.join(",") });
    let mats: Vec<Mat> = named.iter().map(|(_, m)| m.clone()).collect();
    ch.same("named matrices span Der", &flat_span(d_of(c), &mats)?, c.der.span());
    Ok(())
}

/// Explains why a matrix outside `AIDer` fails: it moves a right-central element.
fn aider_witness(c: &Computed, aider: &Subspace, named: &[(String, Mat)]) -> Result<Option<String>, Error> {
    let right = c.algebra.centers().right;
    for (name, m) in named {
        if aider.contains_vector(m.flat())? {
            continue;
        }
        for v in right.basis() {
            let image = m.mul_vec(v)?;
            if image.iter().any(|s| !s.is_zero()) {
                let labels = c.algebra.labels();
                return Ok(Some(format!(
                    "{name} sends x = {} to {} although [L,x] = 0",
                    render(labels, v),
                    render(labels, &image)
                )));
            }
        }
    }
    Ok(None)
}

fn two_sided_note(c: &Computed, inn_dim: usize) -> Result<String, Error> {
    let two = aider_genus1_two_sided(&c.algebra)?;
    Ok(format!(
        "with the two-sided condition d(x) ∈ [L,x] + [x,L] the dimension is {} (Inn has {inn_dim})",
        two.dim()
    ))
}

fn levi_verified(c: &Computed, s: &[Mat]) -> Result<(bool, bool), Error> {
    let sub = coords(c, s)?;
    let status = verify_levi(&c.lie, &sub)?;
    let semisimple = is_semisimple(&c.lie.subalgebra(&sub)?)?;
    Ok((matches!(status, LeviStatus::Verified(_)), semisimple && sub.dim() == 3))
}

/// Observed relation between `[c_k, b_h]` and `E_{h-k}`, for the notes.
fn cb_note(s: &SplitNamed) -> Result<Option<String>, Error> {
    let n = s.base.n;
    let (mut plus, mut minus, mut other) = (0, 0, 0);
    for (k, c) in &s.c {
        for (h, b) in &s.b {
            if h > k && h - k < n {
                let v = c.commutator(b)?;
                let e = s.base.e(h - k);
                if &v == e {
                    plus += 1;
                } else if v == neg(e) {
                    minus += 1;
                } else {
                    other += 1;
                }
            }
        }
    }
    Ok((plus + minus + other > 0).then(|| {
        format!("observed [c_k,b_h] = E_(h-k) on {plus} pairs, −E_(h-k) on {minus}, neither on {other}")
    }))
}

fn split_brackets(s: &SplitNamed, b_sign_odd_i: i64, extra: Option<(&str, Mat)>) -> Vec<(String, String, Mat)> {
    let n = s.base.n;
    let h = &s.base;
    let mut listed = Vec::new();
    for i in 1..=n {
        listed.push(("x".into(), format!("B{i}"), h.b(i).clone()));
        listed.push(("y".into(), format!("A{i}"), h.a(i).clone()));
    }
    for (k, c) in &s.c {
        listed.push(("x".into(), format!("c{k}"), c.clone()));
        listed.push(("y".into(), format!("c{k}"), neg(c)));
        for i in 1..=n {
            if *k > i && k - i <= n {
                let sgn = if i % 2 == 1 { 1 } else { -1 };
                listed.push((format!("A{i}"), format!("c{k}"), h.b(k - i).scale(&Scalar::from_int(sgn))));
            }
        }
    }
    for (k, b) in &s.b {
        listed.push(("x".into(), format!("b{k}"), neg(b)));
        listed.push(("y".into(), format!("b{k}"), b.clone()));
        for i in 1..=n {
            if *k > i && k - i <= n {
                let sgn = if i % 2 == 1 { b_sign_odd_i } else { -b_sign_odd_i };
                listed.push((format!("B{i}"), format!("b{k}"), h.a(k - i).scale(&Scalar::from_int(sgn))));
            }
        }
    }
    if let Some((label, m)) = extra {
        let n1 = n + 1;
        listed.push((format!("c{n1}"), format!("b{n1}"), m));
        let _ = label;
    }
    listed
}

fn split_named(s: &SplitNamed) -> Vec<(String, Mat)> {
    let h = &s.base;
    let mut named = vec![("x".to_string(), h.x.clone()), ("y".to_string(), h.y.clone())];
    named.extend(labelled("E", &h.e, 1));
    named.extend(s.c.iter().map(|(k, m)| (format!("c{k}"), m.clone())));
    named.extend(s.b.iter().map(|(k, m)| (format!("b{k}"), m.clone())));
    named.extend(labelled("A", &h.a, 1));
    named.extend(labelled("B", &h.b, 1));
    named
}

fn heis_named(h: &HeisenbergNamed) -> Vec<(String, Mat)> {
    let mut named = vec![("x".to_string(), h.x.clone()), ("y".to_string(), h.y.clone())];
    named.extend(labelled("E", &h.e, 1));
    named.extend(labelled("A", &h.a, 1));
    named.extend(labelled("B", &h.b, 1));
    named
}

// ---- Heisenberg, a ≠ 0 ----

fn h1(e: &mut Engine, inst: &Instance) -> R {
    let n = inst.n_val();
    let c = heis(e, n, &inst.a_val(), BasisOrder::Grouped)?;
    let mut ch = Checks::default();
    ch.eq("dim Der", 3 * n + 1, c.der.dim());
    Ok(ch.finish())
}

fn h2(e: &mut Engine, inst: &Instance) -> R {
    let n = inst.n_val();
    let c = heis(e, n, &inst.a_val(), BasisOrder::Grouped)?;
    let h = HeisenbergNamed::grouped(n);
    let named = heis_named(&h);
    let mut ch = Checks::default();
    named_basis(&mut ch, &c, &named)?;
    let mut listed = Vec::new();
    for i in 1..=n {
        listed.push(("x".to_string(), format!("B{i}"), h.b(i).clone()));
        listed.push(("y".to_string(), format!("A{i}"), h.a(i).clone()));
    }
    for i in 1..n {
        for k in i + 1..=n {
            listed.push((format!("E{i}"), format!("B{k}"), h.b(k - i).clone()));
        }
        for k in 1..=n - i {
            listed.push((format!("E{i}"), format!("A{k}"), neg(h.a(i + k))));
        }
    }
    ch.table("bracket table (unlisted brackets zero)", bracket_table(&named, &listed, true)?);
    Ok(ch.finish())
}

fn h3(e: &mut Engine, inst: &Instance) -> R {
    let n = inst.n_val();
    let c = heis(e, n, &inst.a_val(), BasisOrder::Grouped)?;
    let h = HeisenbergNamed::grouped(n);
    let d1 = c.lie.commutator_ideal();
    let mut ch = Checks::default();
    ch.eq("dim [Der,Der]", 2 * n, d1.dim());
    ch.holds("[Der,Der] abelian", c.lie.product_space(&d1, &d1)?.is_zero());
    ch.same("[Der,Der] = <A,B>", &d1, &coords(&c, &h.ab())?);
    ch.eq("solvable class", "2".to_string(), class_string(c.lie.is_solvable()));
    Ok(ch.finish())
}

fn class_string((done, class): (bool, usize)) -> String {
    if done {
        class.to_string()
    } else {
        "not reached".into()
    }
}

fn h4(e: &mut Engine, inst: &Instance) -> R {
    let n = inst.n_val();
    let c = heis(e, n, &inst.a_val(), BasisOrder::Grouped)?;
    let h = HeisenbergNamed::grouped(n);
    let mut expected = h.e.clone();
    expected.extend(h.ab());
    let nil = nilradical(&c.lie)?;
    let mut ch = Checks::default();
    ch.holds("Der not nilpotent", !c.lie.is_nilpotent().0);
    ch.eq("dim nilradical", 3 * n - 1, nil.dim());
    ch.same("nilradical = <E,A,B>", &nil, &coords(&c, &expected)?);
    Ok(ch.finish())
}

fn h5(e: &mut Engine, inst: &Instance) -> R {
    let c = heis(e, inst.n_val(), &inst.a_val(), BasisOrder::Grouped)?;
    let mut ch = Checks::default();
    ch.eq("dim Z(Der)", 0, c.lie.centers().center.dim());
    Ok(ch.finish())
}

fn h6(e: &mut Engine, inst: &Instance) -> R {
    let n = inst.n_val();
    let a = inst.a_val();
    let c = heis(e, n, &a, BasisOrder::Grouped)?;
    let h = HeisenbergNamed::grouped(n);
    let d = 2 * n + 1;
    let inn = inner_derivations(&c.algebra)?;
    let (h_lo, k_hi) = if a.is_one() {
        (2, n)
    } else if (-&a).is_one() {
        (1, n - 1)
    } else {
        (1, n)
    };
    let mut expected: Vec<Mat> = (h_lo..=n).map(|i| h.a(i).clone()).collect();
    expected.extend((1..=k_hi).map(|i| h.b(i).clone()));
    let mut ch = Checks::default();
    ch.eq("dim Inn", if is_unit(&a) { 2 * n - 1 } else { 2 * n }, inn.dim());
    ch.same(&format!("Inn = <A_{h_lo}..A_n, B_1..B_{k_hi}>"), inn.span(), &flat_span(d, &expected)?);
    let one = Scalar::one();
    let mut bad = Vec::new();
    for i in 1..=n {
        let mut want = h.b(i).scale(&(&one + &a));
        if i > 1 {
            want = want.try_add(h.b(i - 1))?;
        }
        if c.algebra.adjoint(&c.algebra.basis_vector(i - 1), Side::Left)? != want {
            bad.push(format!("ad e{i}"));
        }
        let mut want = h.a(i).scale(&(&a - &one));
        if i < n {
            want = want.try_add(h.a(i + 1))?;
        }
        if c.algebra.adjoint(&c.algebra.basis_vector(n + i - 1), Side::Left)? != want {
            bad.push(format!("ad f{i}"));
        }
    }
    ch.table("ad formulas", bad);
    Ok(ch.finish())
}

fn h7(e: &mut Engine, inst: &Instance) -> R {
    let n = inst.n_val();
    let c = heis(e, n, &inst.a_val(), BasisOrder::Grouped)?;
    let h = HeisenbergNamed::grouped(n);
    let aider = aider_genus1(&c.algebra)?;
    let inn = inner_derivations(&c.algebra)?;
    let ab = flat_span(2 * n + 1, &h.ab())?;
    let mut ch = Checks::default();
    ch.eq("dim AIDer", 2 * n, aider.dim());
    ch.same("AIDer = <A,B>", aider.span(), &ab);
    if aider.span() != &ab {
        ch.note(format!("AIDer = Inn here: {}", aider.span() == inn.span()));
        let named: Vec<(String, Mat)> = labelled("A", &h.a, 1).into_iter().chain(labelled("B", &h.b, 1)).collect();
        if let Some(w) = aider_witness(&c, aider.span(), &named)? {
            ch.note(w);
        }
        ch.note(two_sided_note(&c, inn.dim())?);
    }
    Ok(ch.finish())
}

fn h8(e: &mut Engine, inst: &Instance) -> R {
    let n = inst.n_val();
    let lie = e.get(FamilyKey::HeisenbergLie { n, order: BasisOrder::Grouped })?;
    let j0 = heis(e, n, &Scalar::zero(), BasisOrder::Grouped)?;
    let ja = heis(e, n, &inst.a_val(), BasisOrder::Grouped)?;
    let mut ch = Checks::default();
    ch.holds("Der(h) ⊇ Der(l^J0)", lie.der.contains_algebra(&j0.der)?);
    ch.holds("Der(l^J0) ⊇ Der(l^Ja)", j0.der.contains_algebra(&ja.der)?);
    Ok(ch.finish())
}

// ---- Heisenberg, a = 0 ----

fn j0(e: &mut Engine, n: usize) -> Result<Rc<Computed>, Error> {
    heis(e, n, &Scalar::zero(), BasisOrder::Interleaved)
}

fn split_dims(e: &mut Engine, inst: &Instance, family: SplitFamily, dim: usize) -> R {
    let n = inst.n_val();
    let c = match family {
        SplitFamily::Heisenberg0 => j0(e, n)?,
        SplitFamily::Kronecker => e.get(FamilyKey::Kronecker { n, order: BasisOrder::Interleaved })?,
    };
    let s = SplitNamed::new(family, n);
    let named = split_named(&s);
    let mut ch = Checks::default();
    ch.eq("dim Der", dim, c.der.dim());
    named_basis(&mut ch, &c, &named)?;
    let odd = n % 2 == 1;
    let b_sign = match (family, odd) {
        (SplitFamily::Heisenberg0, false) | (SplitFamily::Kronecker, true) => -1,
        _ => 1,
    };
    let h = &s.base;
    let extra = match (family, odd) {
        (SplitFamily::Heisenberg0, true) => Some(("x-y", lin(&[(1, &h.x), (-1, &h.y)]))),
        (SplitFamily::Kronecker, false) => Some(("y-x", lin(&[(-1, &h.x), (1, &h.y)]))),
        _ => None,
    };
    let listed = split_brackets(&s, b_sign, extra);
    ch.table("stated brackets", bracket_table(&named, &listed, false)?);
    if let Some(note) = cb_note(&s)? {
        ch.note(note);
    }
    Ok(ch.finish())
}

fn z1(e: &mut Engine, inst: &Instance) -> R {
    split_dims(e, inst, SplitFamily::Heisenberg0, 4 * inst.n_val() + 1)
}

fn z2(e: &mut Engine, inst: &Instance) -> R {
    split_dims(e, inst, SplitFamily::Heisenberg0, 4 * inst.n_val() + 2)
}

fn z3(e: &mut Engine, inst: &Instance) -> R {
    let n = inst.n_val();
    let c = j0(e, n)?;
    let s = SplitNamed::new(SplitFamily::Heisenberg0, n);
    let nil = nilradical(&c.lie)?;
    let mut ch = Checks::default();
    ch.eq("solvable class", (n / 2 + 1).to_string(), class_string(c.lie.is_solvable()));
    ch.holds("Der not nilpotent", !c.lie.is_nilpotent().0);
    ch.eq("dim nilradical", 4 * n - 1, nil.dim());
    ch.same("nilradical = stated N", &nil, &coords(&c, &s.nilradical())?);
    ch.note(derived_note(&c));
    Ok(ch.finish())
}

fn derived_note(c: &Computed) -> String {
    let dims: Vec<String> = c.lie.series(SeriesKind::Derived).iter().map(|s| s.dim().to_string()).collect();
    format!("derived series dims {}", dims.join(", "))
}

fn levi_case(ch: &mut Checks, c: &Computed, s: &SplitNamed, nil_dim: usize) -> Result<(), Error> {
    let levi = s.levi().ok_or_else(|| Error::Internal("no Levi generators".into()))?;
    let (verified, semisimple) = levi_verified(c, &levi)?;
    ch.holds("Levi complement <x-y, c_(n+1), b_(n+1)> verified", verified);
    ch.holds("complement semisimple of dim 3", semisimple);
    ch.same("radical = stated R", &radical(&c.lie)?, &coords(c, &s.radical())?);
    let nil = nilradical(&c.lie)?;
    ch.eq("dim nilradical", nil_dim, nil.dim());
    ch.same("nilradical = stated N", &nil, &coords(c, &s.nilradical())?);
    Ok(())
}

fn z4(e: &mut Engine, inst: &Instance) -> R {
    let n = inst.n_val();
    let c = j0(e, n)?;
    let s = SplitNamed::new(SplitFamily::Heisenberg0, n);
    let mut ch = Checks::default();
    ch.holds("Der not solvable", !c.lie.is_solvable().0);
    let d1 = c.lie.commutator_ideal();
    ch.same("[Der',Der'] = Der'", &c.lie.product_space(&d1, &d1)?, &d1);
    levi_case(&mut ch, &c, &s, 4 * n - 2)?;
    Ok(ch.finish())
}

fn z5(e: &mut Engine, inst: &Instance) -> R {
    let n = inst.n_val();
    let c = j0(e, n)?;
    let inn = inner_derivations(&c.algebra)?;
    let ab = HeisenbergNamed::interleaved(n).ab();
    let mut ch = Checks::default();
    ch.eq("dim Inn", 2 * n, inn.dim());
    ch.same("Inn = <A,B>", inn.span(), &flat_span(2 * n + 1, &ab)?);
    let sub = coords(&c, &inn.basis())?;
    ch.holds("Inn abelian", c.lie.product_space(&sub, &sub)?.is_zero());
    Ok(ch.finish())
}

// ---- real case ----

fn real(e: &mut Engine, a: &Scalar) -> Result<Rc<Computed>, Error> {
    e.get(FamilyKey::Real { a: a.clone(), b: Scalar::one() })
}

fn real_named(r: &RealNamed, with_fg: bool) -> Vec<(String, Mat)> {
    let mut named = vec![
        ("x".to_string(), r.x.clone()),
        ("y".to_string(), r.y.clone()),
        ("E".to_string(), r.e.clone()),
    ];
    if with_fg {
        named.push(("F".into(), r.f.clone()));
        named.push(("G".into(), r.g.clone()));
    }
    named.extend(labelled("A", &r.a, 1));
    named.extend(labelled("B", &r.b, 1));
    named
}

fn r1(e: &mut Engine, inst: &Instance) -> R {
    let c = real(e, &inst.a_val())?;
    let r = RealNamed::new();
    let ab = coords(&c, &r.ab());
    let mut ch = Checks::default();
    ch.eq("dim Der", 7, c.der.dim());
    named_basis(&mut ch, &c, &real_named(&r, false))?;
    let ab = ab?;
    ch.holds("Der solvable", c.lie.is_solvable().0);
    let d1 = c.lie.commutator_ideal();
    ch.same("[Der,Der] = <A,B>", &d1, &ab);
    ch.holds("[Der,Der] abelian", c.lie.product_space(&d1, &d1)?.is_zero());
    ch.same("Inn = <A,B>", &coords(&c, &inner_derivations(&c.algebra)?.basis())?, &ab);
    ch.same("nilradical = <A,B>", &nilradical(&c.lie)?, &ab);
    ch.eq("dim Z(Der)", 0, c.lie.centers().center.dim());
    Ok(ch.finish())
}

fn r2(e: &mut Engine, _: &Instance) -> R {
    let c = real(e, &Scalar::zero())?;
    let r = RealNamed::new();
    let mut ch = Checks::default();
    ch.eq("dim Der", 9, c.der.dim());
    named_basis(&mut ch, &c, &real_named(&r, true))?;
    if ch_failed_basis(&c, &r)? {
        return Ok(ch.finish());
    }
    ch.eq("dim Z(Der)", 0, c.lie.centers().center.dim());
    ch.holds("Der not solvable", !c.lie.is_solvable().0);
    let mut rad = vec![lin(&[(1, &r.x), (1, &r.y)]), r.e.clone()];
    rad.extend(r.ab());
    ch.same("radical = <x+y,E,A,B>", &radical(&c.lie)?, &coords(&c, &rad)?);
    let (verified, semisimple) = levi_verified(&c, &[lin(&[(1, &r.x), (-1, &r.y)]), r.f.clone(), r.g.clone()])?;
    ch.holds("Levi complement <x-y,F,G> verified", verified);
    ch.holds("complement semisimple of dim 3", semisimple);
    let nil = nilradical(&c.lie)?;
    let ab = coords(&c, &r.ab())?;
    ch.same("nilradical = <A,B>", &nil, &ab);
    ch.eq("dim nilradical", 4, nil.dim());
    ch.holds("nilradical abelian", c.lie.product_space(&nil, &nil)?.is_zero());
    ch.same("Inn = nilradical", &coords(&c, &inner_derivations(&c.algebra)?.basis())?, &nil);
    Ok(ch.finish())
}

fn ch_failed_basis(c: &Computed, r: &RealNamed) -> Result<bool, Error> {
    Ok(!non_derivations(&c.algebra, &real_named(r, true))?.is_empty())
}

/// Realification of `diag(α, β, α+β)` with bottom row `(μ, ν)`, laid out on
/// `e_1, f_1, e_2, f_2, z` with the `α` block on the first two coordinates.
pub fn realify_derivation(alpha: &Scalar, beta: &Scalar, mu: &Scalar, nu: &Scalar) -> Mat {
    let mut m = Mat::zeros(Field::Qi, 5, 5);
    for (off, z) in [(0, alpha), (2, beta)] {
        m[(off, off)] = z.re();
        m[(off, off + 1)] = z.im();
        m[(off + 1, off)] = -&z.im();
        m[(off + 1, off + 1)] = z.re();
    }
    m[(4, 0)] = mu.re();
    m[(4, 1)] = mu.im();
    m[(4, 2)] = nu.re();
    m[(4, 3)] = nu.im();
    m[(4, 4)] = alpha + beta;
    m
}

fn as_rational(m: &Mat) -> Option<Mat> {
    Mat::from_flat(Field::Q, m.rows(), m.cols(), m.flat().to_vec()).ok()
}

fn random_gaussian<G: Rng>(rng: &mut G, nonreal: bool) -> Scalar {
    let re = small_rational(rng);
    let mut im = small_rational(rng);
    if nonreal && im.is_zero() {
        im = Scalar::one();
    }
    &re + &(&im * &Scalar::i())
}

fn r3(e: &mut Engine, inst: &Instance) -> R {
    let a = inst.a_val();
    let z = &a + &Scalar::i();
    let complex = heis(e, 1, &z, BasisOrder::Grouped)?;
    let target = real(e, &a)?;
    let mut rng = ChaCha8Rng::seed_from_u64(e.instance_seed());
    let trials = 50;
    let (mut agree, mut members, mut outsiders) = (0, 0, 0);
    let mut disagreements = Vec::new();
    for t in 0..trials {
        let (alpha, beta) = match t % 3 {
            0 => {
                let r = small_rational(&mut rng);
                (r.clone(), r)
            }
            1 => {
                let g = random_gaussian(&mut rng, true);
                (g.clone(), g)
            }
            _ => {
                let x = random_gaussian(&mut rng, false);
                let mut y = random_gaussian(&mut rng, false);
                if y == x {
                    y = &y + &Scalar::one();
                }
                (x, y)
            }
        };
        let mu = random_gaussian(&mut rng, false);
        let nu = random_gaussian(&mut rng, false);
        let mut dm = Mat::zeros(Field::Qi, 3, 3);
        dm[(0, 0)] = alpha.clone();
        dm[(1, 1)] = beta.clone();
        dm[(2, 0)] = mu.clone();
        dm[(2, 1)] = nu.clone();
        dm[(2, 2)] = &alpha + &beta;
        if !is_derivation(&dm, &complex.algebra)? {
            return Err(Error::Internal("sampled matrix is not a complex derivation".into()));
        }
        let real_m = as_rational(&realify_derivation(&alpha, &beta, &mu, &nu));
        let member = match &real_m {
            Some(m) => is_derivation(m, &target.algebra)?,
            None => false,
        };
        let predicted = alpha == beta && alpha.is_real();
        if member {
            members += 1;
        } else {
            outsiders += 1;
        }
        if member == predicted {
            agree += 1;
        } else if disagreements.len() < 3 {
            disagreements.push(format!("α={alpha}, β={beta}"));
        }
    }
    let mut ch = Checks::default();
    ch.eq("samples where membership ⇔ α=β∈ℝ", trials, agree);
    ch.holds("both directions sampled", members > 0 && outsiders > 0);
    ch.note(format!("{members} members, {outsiders} non-members; the z-corner entry is α+β"));
    if !disagreements.is_empty() {
        ch.note(format!("disagreements: {}", disagreements.join("; ")));
    }
    Ok(ch.finish())
}

// ---- Kronecker ----

fn kron(e: &mut Engine, n: usize) -> Result<Rc<Computed>, Error> {
    e.get(FamilyKey::Kronecker { n, order: BasisOrder::Interleaved })
}

fn k1(e: &mut Engine, inst: &Instance) -> R {
    split_dims(e, inst, SplitFamily::Kronecker, 4 * inst.n_val())
}

fn k2(e: &mut Engine, inst: &Instance) -> R {
    split_dims(e, inst, SplitFamily::Kronecker, 4 * inst.n_val() + 1)
}

fn k3(e: &mut Engine, inst: &Instance) -> R {
    let n = inst.n_val();
    let c = kron(e, n)?;
    let s = SplitNamed::new(SplitFamily::Kronecker, n);
    let mut ch = Checks::default();
    levi_case(&mut ch, &c, &s, 4 * n - 3)?;
    Ok(ch.finish())
}

fn k4(e: &mut Engine, inst: &Instance) -> R {
    let n = inst.n_val();
    let c = kron(e, n)?;
    let s = SplitNamed::new(SplitFamily::Kronecker, n);
    let nil = nilradical(&c.lie)?;
    let mut ch = Checks::default();
    ch.eq("solvable class", (n.div_ceil(2) + 1).to_string(), class_string(c.lie.is_solvable()));
    ch.same("nilradical = stated N", &nil, &coords(&c, &s.nilradical())?);
    ch.note(derived_note(&c));
    Ok(ch.finish())
}

fn k5(e: &mut Engine, inst: &Instance) -> R {
    let n = inst.n_val();
    let c = kron(e, n)?;
    let h = HeisenbergNamed::interleaved(n);
    let inn = inner_derivations(&c.algebra)?;
    let ad = |idx: usize| c.algebra.adjoint(&c.algebra.basis_vector(idx), Side::Left);
    let mut ch = Checks::default();
    ch.eq("dim Inn", 2 * n, inn.dim());
    ch.same("Inn = <A,B>", inn.span(), &flat_span(2 * n + 1, &h.ab())?);
    let (mut bad_e, mut bad_f, mut minus_ok) = (Vec::new(), Vec::new(), true);
    for i in 1..=n {
        let mut want = h.b(i).clone();
        if i > 1 {
            want = want.try_add(h.b(i - 1))?;
        }
        if ad(2 * (i - 1))? != want {
            bad_e.push(format!("ad e{i}"));
        }
        let actual = ad(2 * i - 1)?;
        let (mut plus, mut minus) = (h.a(i).clone(), h.a(i).clone());
        if i < n {
            plus = plus.try_add(h.a(i + 1))?;
            minus = minus.try_sub(h.a(i + 1))?;
        }
        if actual != plus {
            bad_f.push(format!("ad f{i}"));
        }
        minus_ok &= actual == minus;
    }
    ch.table("ad e_i = B_(i-1) + B_i", bad_e);
    ch.table("ad f_i = A_i + A_(i+1)", bad_f);
    ch.note(format!("ad f_i = A_i − A_(i+1) for every i: {minus_ok}"));
    Ok(ch.finish())
}

fn k6(e: &mut Engine, inst: &Instance) -> R {
    let n = inst.n_val();
    let zero = heis(e, n, &Scalar::zero(), BasisOrder::Grouped)?;
    let k = e.get(FamilyKey::Kronecker { n, order: BasisOrder::Grouped })?;
    let ja = heis(e, n, &inst.a_val(), BasisOrder::Grouped)?;
    let meet = zero.der.span().intersect(k.der.span())?;
    let mut ch = Checks::default();
    ch.eq("dim Der(l^J0) ∩ Der(k_n)", ja.der.dim(), meet.dim());
    ch.same("Der(l^J0) ∩ Der(k_n) = Der(l^Ja)", &meet, ja.der.span());
    Ok(ch.finish())
}

// ---- Dieudonné ----

fn dieu(e: &mut Engine, n: usize) -> Result<Rc<Computed>, Error> {
    e.get(FamilyKey::Dieudonne { n })
}

fn dieu_named(dn: &DieudonneNamed) -> Vec<(String, Mat)> {
    let mut named = vec![("x".to_string(), dn.x.clone()), ("y".to_string(), dn.y.clone())];
    named.extend(labelled("E", &dn.e, 1));
    named.extend(labelled("A", &dn.a, 1));
    named
}

fn dieu_table(dn: &DieudonneNamed) -> Vec<(String, String, Mat)> {
    let n = dn.n;
    let mut listed = Vec::new();
    for i in 1..=n {
        listed.push(("x".to_string(), format!("E{i}"), dn.e(i).clone()));
        listed.push((format!("E{i}"), "y".to_string(), dn.e(i).clone()));
    }
    for h in 1..=n + 1 {
        listed.push(("y".to_string(), format!("A{h}"), dn.a(h).clone()));
    }
    for k in n + 2..=2 * n + 1 {
        listed.push(("x".to_string(), format!("A{k}"), dn.a(k).clone()));
    }
    for i in 1..=n + 1 {
        for k in 1..=n {
            if let Some((eps, j)) = dn.row_entry(k, i) {
                listed.push((format!("A{i}"), format!("E{k}"), dn.a(j).scale(&eps)));
            }
        }
    }
    listed
}

fn d1(e: &mut Engine, inst: &Instance) -> R {
    let n = inst.n_val();
    let c = dieu(e, n)?;
    let dn = DieudonneNamed::new(n);
    let named = dieu_named(&dn);
    let mut ch = Checks::default();
    ch.eq("dim Der", 3 * n + 3, c.der.dim());
    named_basis(&mut ch, &c, &named)?;
    ch.table("bracket table (unlisted brackets zero)", bracket_table(&named, &dieu_table(&dn), true)?);
    ch.note("x and A_i are built with z at index 2n+2, as in the worked examples");
    Ok(ch.finish())
}

fn d2(e: &mut Engine, inst: &Instance) -> R {
    let n = inst.n_val();
    let c = dieu(e, n)?;
    let dn = DieudonneNamed::new(n);
    let series = c.lie.series(SeriesKind::Derived);
    let dims: Vec<String> = series.iter().map(|s| s.dim().to_string()).collect();
    let expected = [3 * n + 3, 3 * n + 1, n, 0].map(|d| d.to_string()).join(",");
    let mut ch = Checks::default();
    ch.eq("derived series dims", expected, dims.join(","));
    if series.len() == 4 {
        let mut first = dn.e.clone();
        first.extend(dn.a.iter().cloned());
        ch.same("Der' = <E,A>", &series[1], &coords(&c, &first)?);
        ch.same("Der'' = <A_(n+2)..A_(2n+1)>", &series[2], &coords(&c, &dn.a[n + 1..])?);
    }
    Ok(ch.finish())
}

fn d3(e: &mut Engine, inst: &Instance) -> R {
    let c = dieu(e, inst.n_val())?;
    let nil = nilradical(&c.lie)?;
    let mut ch = Checks::default();
    ch.same("nilradical = [Der,Der]", &nil, &c.lie.commutator_ideal());
    ch.eq("nilpotency class of the nilradical", "2".to_string(), class_string(c.lie.subalgebra(&nil)?.is_nilpotent()));
    Ok(ch.finish())
}

fn d4(e: &mut Engine, inst: &Instance) -> R {
    let n = inst.n_val();
    let c = dieu(e, n)?;
    let dn = DieudonneNamed::new(n);
    let d = 2 * n + 2;
    let inn = inner_derivations(&c.algebra)?;
    let mut expected: Vec<Mat> = (1..=n).map(|k| dn.a(k).try_sub(dn.a(n + 1))).collect::<Result<_, _>>()?;
    expected.extend(dn.a[n + 1..].iter().cloned());
    let ad = |idx: usize| c.algebra.adjoint(&c.algebra.basis_vector(idx - 1), Side::Left);
    let mut bad = Vec::new();
    let mut expect_ad = |idx: usize, want: Mat| -> Result<(), Error> {
        if ad(idx)? != want {
            bad.push(format!("ad e{idx}"));
        }
        Ok(())
    };
    expect_ad(1, dn.a(n + 2).clone())?;
    for i in 2..=n {
        expect_ad(i, dn.a(n + i).try_add(dn.a(n + i + 1))?)?;
    }
    expect_ad(n + 1, dn.a(2 * n + 1).clone())?;
    for j in n + 2..=2 * n + 1 {
        expect_ad(j, dn.a(j - n).try_sub(dn.a(j - n - 1))?)?;
    }
    let mut ch = Checks::default();
    ch.eq("dim Inn", 2 * n, inn.dim());
    ch.same("Inn = {μ_(n+1) = −Σμ_k}", inn.span(), &flat_span(d, &expected)?);
    ch.table("ad formulas", bad);
    ch.holds("A_(n+1) not inner", !inn.contains(dn.a(n + 1))?);
    Ok(ch.finish())
}

fn d5(e: &mut Engine, inst: &Instance) -> R {
    let n = inst.n_val();
    let c = dieu(e, n)?;
    let dn = DieudonneNamed::new(n);
    let mut ch = Checks::default();
    match n {
        1 => {
            ch.eq("dim Der", 6, c.der.dim());
            ch.holds("solvable", c.lie.is_solvable().0);
            let named = dieu_named(&dn);
            let m = |s: &str| named.iter().find(|(k, _)| k == s).map(|(_, m)| m.clone()).expect("named");
            let listed = vec![
                ("x".to_string(), "E1".to_string(), m("E1")),
                ("E1".into(), "y".into(), m("E1")),
                ("x".into(), "A3".into(), m("A3")),
                ("y".into(), "A1".into(), m("A1")),
                ("y".into(), "A2".into(), m("A2")),
                ("A1".into(), "E1".into(), m("A3")),
            ];
            let example = [
                ("x", lin(&[(1, &named_unit(4, 1, 1)), (1, &named_unit(4, 2, 2)), (1, &named_unit(4, 4, 4))])),
                ("y", lin(&[(1, &named_unit(4, 3, 3)), (1, &named_unit(4, 4, 4))])),
                ("E1", named_unit(4, 1, 3)),
            ];
            ch.holds("example x, y, E agree with the general formulas", example.iter().all(|(k, v)| &m(k) == v));
            ch.table("bracket table (unlisted brackets zero)", bracket_table(&named, &listed, true)?);
        }
        2 => {
            ch.eq("dim Der", 9, c.der.dim());
            ch.eq("dim [Der,Der]", 7, c.lie.commutator_ideal().dim());
        }
        _ => {
            ch.eq("dim Der", 9, c.der.dim());
            let named = dieu_named(&dn);
            let m = |s: &str| named.iter().find(|(k, _)| k == s).map(|(_, m)| m.clone()).expect("named");
            let listed = [
                ("A1", "E1", "A5", 1),
                ("A1", "E2", "A7", 1),
                ("A2", "E2", "A6", -1),
                ("A3", "E2", "A5", 1),
                ("A3", "E3", "A7", 1),
                ("A4", "E3", "A6", -1),
            ]
            .iter()
            .map(|(p, q, r, s)| (p.to_string(), q.to_string(), m(r).scale(&Scalar::from_int(*s))))
            .collect::<Vec<_>>();
            ch.table("[A_i,E_k] examples", bracket_table(&named, &listed, false)?);
            let printed = lin(&[(1, &named_unit(8, 3, 7)), (-1, &named_unit(8, 2, 8))]);
            ch.note(format!(
                "E_3 as printed (e_(3,7) − e_(2,8)) is a derivation: {}; the general formula gives e_(3,7) − e_(4,6)",
                is_derivation(&printed, &c.algebra)?
            ));
            ch.note(format!("the generator list names A_1..A_8, the algebra has A_1..A_{}", 2 * n + 1));
        }
    }
    Ok(ch.finish())
}

fn named_unit(d: usize, r: usize, c: usize) -> Mat {
    super::named::unit(d, r, c)
}

// ---- almost inner derivations ----

fn p1(e: &mut Engine, inst: &Instance) -> R {
    let c = family_of(e, inst)?;
    let aider = aider_genus1(&c.algebra)?;
    let inn = inner_derivations(&c.algebra)?;
    let mut ch = Checks::default();
    ch.eq("dim AIDer", inn.dim(), aider.dim());
    ch.same("AIDer = Inn", aider.span(), inn.span());
    ch.note("isomorphism exclusions are by parameter: a ∉ {±1} and no Dieudonné algebras");
    Ok(ch.finish())
}

fn p2(e: &mut Engine, inst: &Instance) -> R {
    let c = family_of(e, inst)?;
    let aider = aider_genus1(&c.algebra)?;
    let inn = inner_derivations(&c.algebra)?;
    let mut ch = Checks::default();
    ch.holds("Inn ⊆ AIDer", aider.span().contains(inn.span())?);
    ch.eq("dim AIDer − dim Inn", 1, aider.dim() as i64 - inn.dim() as i64);
    if aider.dim() == inn.dim() {
        let candidates: Vec<(String, Mat)> = match inst.family {
            Some("dieudonne") => {
                let n = inst.n_val();
                vec![(format!("A{}", n + 1), DieudonneNamed::new(n).a(n + 1).clone())]
            }
            _ => {
                let h = HeisenbergNamed::grouped(inst.n_val());
                labelled("A", &h.a, 1).into_iter().chain(labelled("B", &h.b, 1)).collect()
            }
        };
        if let Some(w) = aider_witness(&c, aider.span(), &candidates)? {
            ch.note(w);
        }
        ch.note(two_sided_note(&c, inn.dim())?);
    }
    Ok(ch.finish())
}

// ---- registry ----

fn typo_all(_: &Instance) -> bool {
    true
}

fn typo_n3(inst: &Instance) -> bool {
    inst.n == Some(3)
}

macro_rules! claim {
    ($id:literal, $desc:literal, $anchor:literal, $domain:literal, $inst:expr, $typo:expr, $check:expr) => {
        Claim {
            id: $id,
            description: $desc,
            anchor: $anchor,
            domain: $domain,
            instances: $inst,
            typo: $typo,
            check: $check,
        }
    };
}

pub fn registry() -> Vec<Claim> {
    vec![
        claim!("H1", "dim Der(l^Ja) = 3n+1 for a ≠ 0", "of dimension 3n+1 with basis", "n ≥ 1, a ≠ 0", n_nonzero_a, None, h1),
        claim!("H2", "the named basis x, y, E_i, A_i, B_i spans Der(l^Ja) with the stated bracket table", "[x,B_i]=B_i, [y,A_i]=A_i", "n ≥ 1, a ≠ 0", n_nonzero_a, None, h2),
        claim!("H3", "[Der,Der] is abelian of dim 2n", "the abelian algebra of dimension 2n", "n ≥ 1, a ≠ 0", n_nonzero_a, None, h3),
        claim!("H4", "Der is not nilpotent; nilradical <E,A,B> of dim 3n-1", "its nilradical is the ideal", "n ≥ 1, a ≠ 0", n_nonzero_a, None, h4),
        claim!("H5", "Z(Der) = 0", "is trivial and the algebra", "n ≥ 1, a ≠ 0", n_nonzero_a, None, h5),
        claim!("H6", "Inn has dim 2n (a ≠ ±1) or 2n-1 (a = ±1) with the stated ad formulas", "h=1 and k=n", "n ≥ 1, a ≠ 0", n_nonzero_a, None, h6),
        claim!("H7", "AIDer(l^Ja) = <A,B> of dim 2n", "for every a ∈ ℂ", "n ≥ 1, every a", n_any_a, None, h7),
        claim!("H8", "Der(h) ⊇ Der(l^J0) ⊇ Der(l^Ja)", "we observe that", "n ≥ 1, a ≠ 0", n_nonzero_a, None, h8),
        claim!("Z1", "dim Der(l^J0) = 4n+1 for even n, named basis and brackets", "dimension 4n+1", "n even", even_n, None, z1),
        claim!("Z2", "dim Der(l^J0) = 4n+2 for odd n, named basis and brackets", "has dimension 4n+2", "n odd", odd_n,
            Some(("[B_i,b_k]=(−1)^(i+1)A_(k−i) for odd n against the even-n sign", typo_all)), z2),
        claim!("Z3", "Der(l^J0) is (n/2+1)-step solvable for even n", "(n/2+1)−step solvable", "n even", even_n, None, z3),
        claim!("Z4", "Der(l^J0) for odd n: not solvable, Levi <x-y,c_(n+1),b_(n+1)>, stated radical and nilradical", "the Levi decomposition is given by", "n odd", odd_n, None, z4),
        claim!("Z5", "Inn(l^J0) abelian of dim 2n", "abelian algebra of dimension 2n", "n ≥ 1", all_n, None, z5),
        claim!("R1", "Der(l5R), a ≠ 0: dim 7, generators x,y,E,A,B, Inn = nilradical = <A,B>", "generated by the set", "a ≠ 0, b = 1", nonzero_a, None, r1),
        claim!("R2", "Der(l5R), a = 0: dim 9, radical, Levi <x-y,F,G>, nilradical abelian of dim 4", "abelian four-dimensional algebra", "a = 0, b = 1", a_zero, None, r2),
        claim!("R3", "a realified complex derivation lies in Der(l5R) iff α = β ∈ ℝ", "if and only if", "a ∈ {0, 2}, b = 1", real_samples, None, r3),
        claim!("K1", "dim Der(k_n) = 4n for odd n, named basis and brackets", "has dimension 4n and it is generated by", "n odd", odd_n, None, k1),
        claim!("K2", "dim Der(k_n) = 4n+1 for even n (count of the listed basis)", "x,y,E_1,…", "n even", even_n, None, k2),
        claim!("K3", "Der(k_n), n even: Levi <x-y,c_(n+1),b_(n+1)>, stated radical and nilradical", "is a Levi complement", "n even", even_n, None, k3),
        claim!("K4", "Der(k_n), n odd: ((n+1)/2+1)-step solvable with the stated nilradical", "step solvable Lie algebra with nilradical", "n odd", odd_n, None, k4),
        claim!("K5", "Inn(k_n) = <A,B> with ad e_i = B_(i-1)+B_i, ad f_i = A_i+A_(i+1)", "ad_{e_i}=B_{i−1}+B_i", "n ≥ 1", all_n, None, k5),
        claim!("K6", "Der(l^J0) ∩ Der(k_n) = Der(l^Ja)", "More precisely", "n ≥ 1, a ≠ 0", n_nonzero_a, None, k6),
        claim!("D1", "dim Der(d_n) = 3n+3 with the named basis and bracket table", "has dimension 3n+3 and basis", "n ≥ 1", all_n,
            Some(("[x,E_i]=[E_i,y]=α_i read as E_i", typo_all)), d1),
        claim!("D2", "Der(d_n) is 3-step solvable with derived dims (3n+3, 3n+1, n, 0)", "3−step solvable Lie algebra", "n ≥ 1", all_n, None, d2),
        claim!("D3", "the nilradical of Der(d_n) is the commutator ideal", "coincides with the commutator ideal", "n ≥ 1", all_n, None, d3),
        claim!("D4", "Inn(d_n) has dim 2n with μ_(n+1) = −Σμ_k; A_(n+1) is not inner", "does not represent an inner derivation", "n ≥ 1", all_n, None, d4),
        claim!("D5", "worked examples n = 1, 2, 3", "six-dimensional solvable Lie algebra", "n ∈ {1, 2, 3}", small_n,
            Some(("n = 3 is described as dimension 9 while 3n+3 = 12", typo_n3)), d5),
        claim!("P1", "AIDer = Inn for genus-1 members other than l^J±1 and d_n", "is an inner derivation", "families h, l^Ja (a ≠ ±1), k_n", p1_domain, None, p1),
        claim!("P2", "Inn ⊊ AIDer with codimension 1 for l^J±1 and d_n", "are strict", "l^Ja (a = ±1), d_n", p2_domain, None, p2),
    ]
}
