//! Acceptance suite: exact reproduction of the two counterexample families,
//! the positive controls, and the engine property checks. Each criterion
//! prints one PASS line (run with `--nocapture` to see them).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

use subbundle::bundle::{
    self, analyze_fiber, closure_check, global_certificate, jacobian_at_zero, verdict,
    FiberStatus, Provenance, VerdictKind,
};
use subbundle::coeff::{FieldElement, FieldSpec};
use subbundle::famfile::{parse_family_file, FamilyFile};
use subbundle::ideal::{matrix_minors, normal_form, Dimension, Ideal};
use subbundle::poly::{parse_polynomial, Monomial, MonomialOrder, Polynomial, VariableContext};

fn corpus(name: &str) -> FamilyFile {
    let path = format!("{}/corpus/{name}", env!("CARGO_MANIFEST_DIR"));
    parse_family_file(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

const CORPUS: &[&str] = &[
    "cusp.fam",
    "frobenius_p2.fam",
    "frobenius_p3.fam",
    "frobenius_p5.fam",
    "graph_line.fam",
    "zero_section.fam",
    "full_bundle.fam",
    "two_lines.fam",
];

/// Parameter value `t` of a sampled cusp point, recovered from provenance or
/// from the declared coordinates `(t^2, t^3)`.
fn cusp_t(pt: &bundle::BasePoint) -> Option<FieldElement> {
    match &pt.provenance {
        Provenance::Parametrized { value, .. } => Some(value.clone()),
        Provenance::Declared => {
            // t = y/x when x != 0
            if pt.coords[0].is_zero() {
                None
            } else {
                Some(pt.coords[1].div(&pt.coords[0]).unwrap())
            }
        }
    }
}

#[test]
fn criterion_01_example1_reproduction() {
    let fam = corpus("cusp.fam");
    let v = verdict(&fam.spec).unwrap();
    assert_eq!(v.kind, VerdictKind::NotSubbundle);

    let fc = &fam.spec.fiber_context;
    for f in &v.fibers {
        if f.point.coords.iter().all(|c| c.is_zero()) {
            assert_eq!(
                f.fiber_gb,
                vec![parse_polynomial("w^2", fc, q()).unwrap()],
                "fiber ideal at the cusp point must be exactly <w^2>"
            );
            assert_eq!(f.fiber_dim, Dimension::Dim(1));
            assert_eq!(f.tangent_dim, 2);
            assert_eq!(f.status, FiberStatus::NonReduced);
        } else {
            let t = cusp_t(&f.point).expect("smooth point has t");
            assert_eq!(f.status, FiberStatus::ReducedLinear, "at {}", f.point);
            // span is the line w = t*z
            let line = Polynomial::variable(fc, 1, q())
                .sub(&Polynomial::variable(fc, 0, q()).scalar_mul(&t));
            let fiber = Ideal::new(fc, q(), f.fiber_gb.clone());
            let expected = Ideal::new(fc, q(), vec![line]);
            assert!(fiber.equal(&expected).unwrap(), "span w = t*z at {}", f.point);
        }
    }
    // points (1,1), (4,8) and samples t = -1, 1, 2 are all present
    assert_eq!(v.fibers.len(), 6);
    println!("ACCEPTANCE 1 (Example 1 reproduction): PASS");
}

#[test]
fn criterion_02_example1_certificate() {
    let fam = corpus("cusp.fam");
    let jac = jacobian_at_zero(&fam.spec).unwrap();
    let minors = matrix_minors(&jac.entries, 2).unwrap();
    let bc = &fam.spec.base_context;
    let want = parse_polynomial("x^3 - y^2", bc, q()).unwrap();
    let nonzero: Vec<&Polynomial> = minors.iter().filter(|m| !m.is_zero()).collect();
    assert_eq!(nonzero.len(), 1, "exactly one nonzero 2-minor (rows 2 and 4)");
    assert!(*nonzero[0] == want || *nonzero[0] == want.neg());
    assert!(fam.spec.base_ideal.radical_contains(nonzero[0]).unwrap());

    let cert = global_certificate(&fam.spec).unwrap();
    assert!(cert.rank_upper_ok);
    assert!(!cert.rank_lower_ok);
    let w = cert.witness.as_ref().expect("witness ideal present");
    let origin = [q().zero(), q().zero()];
    assert!(
        w.generators().iter().all(|g| g.eval(&origin).is_zero()),
        "witness variety contains the cusp point (0,0)"
    );
    println!("ACCEPTANCE 2 (Example 1 certificate): PASS");
}

#[test]
fn criterion_03_example1_kernel_exercise() {
    // The file's kernel_check block.
    let fam = corpus("cusp.fam");
    let kc = fam.kernel_check.as_ref().unwrap();
    assert!(bundle::verify_kernel_presentation(&kc.images, &kc.claimed).unwrap());

    // The same statement built directly: eliminate {t, s} from
    // <x - t^2, y - t^3, z - s, w - t*s>.
    let big = VariableContext::new(
        ["t", "s", "x", "y", "z", "w"].iter().map(|s| s.to_string()).collect(),
    )
    .unwrap();
    let p = |s: &str| parse_polynomial(s, &big, q()).unwrap();
    let graph = Ideal::new(
        &big,
        q(),
        vec![p("x - t^2"), p("y - t^3"), p("z - s"), p("w - t*s")],
    );
    let kernel = graph
        .eliminate(&["t".to_string(), "s".to_string()].into())
        .unwrap();
    let small = kernel.ctx().clone();
    let pc = |s: &str| parse_polynomial(s, &small, q()).unwrap();
    let claimed = Ideal::new(
        &small,
        q(),
        vec![
            pc("y^2 - x^3"),
            pc("y*z - x*w"),
            pc("w^2 - x*z^2"),
            pc("x^2*z - y*w"),
        ],
    );
    assert!(kernel.equal(&claimed).unwrap(), "reduced-GB identity");
    println!("ACCEPTANCE 3 (Example 1 kernel exercise): PASS");
}

#[test]
fn criterion_04_example2_reproduction() {
    for (name, p) in [
        ("frobenius_p2.fam", 2u64),
        ("frobenius_p3.fam", 3),
        ("frobenius_p5.fam", 5),
    ] {
        let fam = corpus(name);
        assert_eq!(fam.spec.points.len(), p as usize, "all base points sampled");
        let jac = jacobian_at_zero(&fam.spec).unwrap();
        assert_eq!(jac.rows(), 1);
        assert!(jac.entries[0].iter().all(|e| e.is_zero()), "J = [[0, 0]]");

        let fp = FieldSpec::prime_field(p).unwrap();
        let fc = &fam.spec.fiber_context;
        let v = verdict(&fam.spec).unwrap();
        assert_eq!(v.kind, VerdictKind::NotSubbundle, "{name}");
        for f in &v.fibers {
            assert_eq!(f.status, FiberStatus::NonReduced, "{name} at {}", f.point);
            let lambda = &f.point.coords[0];
            let line = Polynomial::variable(fc, 0, fp)
                .sub(&Polynomial::variable(fc, 1, fp).scalar_mul(lambda));
            let fiber = Ideal::new(fc, fp, f.fiber_gb.clone());
            // ideal is <(y - lambda*z)^p> and its radical is <y - lambda*z>
            let thick = Ideal::new(fc, fp, vec![line.pow(p as u32)]);
            assert!(fiber.equal(&thick).unwrap());
            assert!(fiber.radical_contains(&line).unwrap());
            assert!(!fiber.contains(&line).unwrap());
        }
    }
    println!("ACCEPTANCE 4 (Example 2 over F2, F3, F5): PASS");
}

#[test]
fn criterion_05_positive_controls() {
    let graph = verdict(&corpus("graph_line.fam").spec).unwrap();
    assert_eq!(graph.kind, VerdictKind::Subbundle);
    assert!(graph.certificate.all_ok(), "full certificate for graph_line");

    let zero = verdict(&corpus("zero_section.fam").spec).unwrap();
    assert_eq!(zero.kind, VerdictKind::Subbundle);

    let full = verdict(&corpus("full_bundle.fam").spec).unwrap();
    assert_eq!(full.kind, VerdictKind::Subbundle);
    println!("ACCEPTANCE 5 (positive controls): PASS");
}

#[test]
fn criterion_06_prop2_consistency_across_corpus() {
    for name in CORPUS {
        let fam = corpus(name);
        let v = verdict(&fam.spec).unwrap();
        let all_reduced = v.fibers.iter().all(|f| f.status == FiberStatus::ReducedLinear);
        let any_nonreduced = v.fibers.iter().any(|f| f.status == FiberStatus::NonReduced);
        if v.kind == VerdictKind::Subbundle {
            assert!(all_reduced && v.certificate.all_ok(), "{name}");
        }
        if all_reduced && v.certificate.all_ok() {
            assert_eq!(v.kind, VerdictKind::Subbundle, "{name}");
        }
        if any_nonreduced {
            assert_eq!(v.kind, VerdictKind::NotSubbundle, "{name}");
        }
    }
    println!("ACCEPTANCE 6 (reducedness/verdict consistency): PASS");
}

#[test]
fn criterion_07_tangent_contains_fiber() {
    for name in CORPUS {
        let fam = corpus(name);
        for pt in &fam.spec.points {
            let f = analyze_fiber(&fam.spec, pt).unwrap();
            if f.cone_ok {
                if let Dimension::Dim(d) = f.fiber_dim {
                    assert!(
                        f.tangent_dim >= d,
                        "{name} at {}: tangent {} < fiber {}",
                        f.point,
                        f.tangent_dim,
                        d
                    );
                }
            }
        }
    }
    println!("ACCEPTANCE 7 (fiber contained in tangent space): PASS");
}

#[test]
fn criterion_08_closure_demonstration() {
    let fam = corpus("cusp.fam");
    let g = fam.closure_by.as_ref().expect("closure block");
    let r = closure_check(&fam.spec, g).unwrap();
    assert!(r.fibers_match);

    // Explicitly: at every sampled point with t != 0 the closure's fiber
    // radical equals the original family's.
    let closed_spec = bundle::FamilySpec {
        family_ideal: r.closure.clone(),
        ..fam.spec.clone()
    };
    let mut checked = 0;
    for pt in &fam.spec.points {
        if pt.coords[0].is_zero() {
            continue;
        }
        let a = bundle::fiber_ideal(&fam.spec, pt).unwrap();
        let b = bundle::fiber_ideal(&closed_spec, pt).unwrap();
        for gen in a.generators() {
            assert!(b.radical_contains(gen).unwrap());
        }
        for gen in b.generators() {
            assert!(a.radical_contains(gen).unwrap());
        }
        checked += 1;
    }
    assert!(checked >= 5, "all t != 0 samples checked");
    println!("ACCEPTANCE 8 (closure adds nothing fiberwise): PASS");
}

fn s_poly(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (fm, fc) = f.leading(order).unwrap();
    let (gm, gc) = g.leading(order).unwrap();
    let l = fm.lcm(gm);
    let a = f.mul_term(&fm.quotient_into(&l), &fc.inv().unwrap());
    let b = g.mul_term(&gm.quotient_into(&l), &gc.inv().unwrap());
    a.sub(&b)
}

#[test]
fn criterion_09_groebner_property_suite() {
    let f5 = FieldSpec::prime_field(5).unwrap();
    let ctx = VariableContext::new(vec!["x".into(), "y".into(), "z".into()]).unwrap();
    let order = MonomialOrder::GrevLex;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5b5d);

    for round in 0..200 {
        let ngens = rng.gen_range(1..=3);
        let gens: Vec<Polynomial> = (0..ngens)
            .map(|_| {
                let nterms = rng.gen_range(1..=4);
                Polynomial::from_terms(
                    &ctx,
                    f5,
                    (0..nterms).map(|_| {
                        // exponent vector with total degree <= 2
                        let mut e = vec![0u32; 3];
                        for _ in 0..rng.gen_range(0..=2) {
                            e[rng.gen_range(0..3)] += 1;
                        }
                        (Monomial::from_exponents(e), f5.from_int(rng.gen_range(0..5)))
                    }),
                )
            })
            .collect();

        let ideal = Ideal::new(&ctx, f5, gens.clone());
        let gb = ideal.groebner_basis().unwrap().to_vec();

        for (i, a) in gb.iter().enumerate() {
            for b in gb.iter().skip(i + 1) {
                assert!(
                    normal_form(&s_poly(a, b, &order), &gb, &order).is_zero(),
                    "round {round}: S-polynomial must reduce to 0"
                );
            }
        }
        for g in &gens {
            assert!(
                normal_form(g, &gb, &order).is_zero(),
                "round {round}: generator must reduce to 0"
            );
        }

        // permutation invariance of the reduced basis
        let mut permuted = gens.clone();
        permuted.reverse();
        if permuted.len() > 1 {
            permuted.rotate_left(1);
        }
        let gb2 = Ideal::new(&ctx, f5, permuted).groebner_basis().unwrap().to_vec();
        assert_eq!(gb, gb2, "round {round}: reduced GB must be canonical");

        // normal form idempotence on a random probe
        let probe = Polynomial::from_terms(
            &ctx,
            f5,
            (0..3).map(|_| {
                let e: Vec<u32> = (0..3).map(|_| rng.gen_range(0..3)).collect();
                (Monomial::from_exponents(e), f5.from_int(rng.gen_range(0..5)))
            }),
        );
        let r = normal_form(&probe, &gb, &order);
        assert_eq!(normal_form(&r, &gb, &order), r, "round {round}: idempotence");
    }
    println!("ACCEPTANCE 9 (Groebner property suite, 200 random ideals): PASS");
}

#[test]
fn criterion_10_radical_membership_sanity() {
    let ctx = VariableContext::new(vec!["z".into(), "w".into()]).unwrap();
    let i = Ideal::new(&ctx, q(), vec![parse_polynomial("w^2", &ctx, q()).unwrap()]);
    let w = parse_polynomial("w", &ctx, q()).unwrap();
    let z = parse_polynomial("z", &ctx, q()).unwrap();
    assert!(i.radical_contains(&w).unwrap());
    let n = i.radical_witness_power(&w, 20).unwrap();
    assert!(matches!(n, Some(n) if n <= 2), "witness power <= 2, got {n:?}");
    assert!(!i.radical_contains(&z).unwrap());
    println!("ACCEPTANCE 10 (radical membership sanity): PASS");
}

/// Extra corpus-wide invariants from the operation contracts.
#[test]
fn corpus_invariants() {
    for name in CORPUS {
        let fam = corpus(name);
        // Jacobian rows agree with the degree-1 fiber components.
        let jac = jacobian_at_zero(&fam.spec).unwrap();
        let split = fam.spec.base_rank();
        for (i, g) in fam.spec.family_ideal.generators().iter().enumerate() {
            let comps = g.fiber_degree_components().unwrap();
            let lin = comps.get(1).cloned();
            let mut rebuilt = Polynomial::zero(&fam.spec.context, fam.spec.field);
            for (j, entry) in jac.entries[i].iter().enumerate() {
                let e = entry.transport(&fam.spec.context).unwrap();
                let y = Polynomial::variable(&fam.spec.context, split + j, fam.spec.field);
                rebuilt = rebuilt.add(&e.mul(&y));
            }
            match lin {
                Some(l) => assert_eq!(l, rebuilt, "{name} generator {i}"),
                None => assert!(rebuilt.is_zero()),
            }
        }

        // Certificate/point consistency and scalar-action invariance.
        let v = verdict(&fam.spec).unwrap();
        let n = fam.spec.fiber_rank();
        for f in &v.fibers {
            if v.certificate.rank_upper_ok && v.certificate.rank_lower_ok {
                assert_eq!(
                    n - f.tangent_dim,
                    n - fam.spec.expected_dim,
                    "{name}: rank J(pt) = n - d at {}",
                    f.point
                );
            }
            if f.status == FiberStatus::ReducedLinear {
                let fiber = Ideal::new(&fam.spec.fiber_context, fam.spec.field, f.fiber_gb.clone());
                for g in &f.fiber_gb {
                    for c in [2i64, 3, 7] {
                        let scaled = scale_fiber_vars(g, fam.spec.field.from_int(c));
                        assert!(
                            fiber.contains(&scaled).unwrap(),
                            "{name}: f(c*y) stays in the fiber ideal"
                        );
                    }
                }
            }
        }
    }
}

fn scale_fiber_vars(g: &Polynomial, c: FieldElement) -> Polynomial {
    // fiber-only context: scale every variable
    let ctx = g.ctx().clone();
    let images: Vec<Polynomial> = (0..ctx.len())
        .map(|i| Polynomial::variable(&ctx, i, g.field()).scalar_mul(&c))
        .collect();
    g.substitute_full(&images)
}

/// Kernel-claim soundness half checked by pure substitution, corpus-wide.
#[test]
fn kernel_claim_substitution_oracle() {
    let fam = corpus("cusp.fam");
    let kc = fam.kernel_check.as_ref().unwrap();
    assert!(bundle::kernel_claim_vanishes(&kc.images, &kc.claimed));
}

/// Elimination soundness: generators of an eliminated graph ideal vanish
/// under the defining images.
#[test]
fn elimination_substitution_oracle() {
    let big = VariableContext::new(
        ["t", "s", "x", "y", "z", "w"].iter().map(|s| s.to_string()).collect(),
    )
    .unwrap();
    let p = |s: &str| parse_polynomial(s, &big, q()).unwrap();
    let graph = Ideal::new(
        &big,
        q(),
        vec![p("x - t^2"), p("y - t^3"), p("z - s"), p("w - t*s")],
    );
    let kill: BTreeSet<String> = ["t".to_string(), "s".to_string()].into();
    let kernel = graph.eliminate(&kill).unwrap();
    assert!(!kernel.generators().is_empty());
    let tctx = VariableContext::new(vec!["t".into(), "s".into()]).unwrap();
    let pt = |s: &str| parse_polynomial(s, &tctx, q()).unwrap();
    let images = vec![pt("t^2"), pt("t^3"), pt("s"), pt("t*s")];
    for g in kernel.generators() {
        assert!(g.substitute_full(&images).is_zero());
    }
}

/// Dimension monotonicity on nested corpus ideals.
#[test]
fn dimension_monotonicity() {
    let fam = corpus("cusp.fam");
    let ctx = fam.spec.context.clone();
    let gens = fam.spec.family_ideal.generators().to_vec();
    for k in 0..=gens.len() {
        for l in k..=gens.len() {
            let a = Ideal::new(&ctx, q(), gens[..k].to_vec());
            let b = Ideal::new(&ctx, q(), gens[..l].to_vec());
            let (da, db) = (a.krull_dimension().unwrap(), b.krull_dimension().unwrap());
            if let (Dimension::Dim(da), Dimension::Dim(db)) = (da, db) {
                assert!(da >= db, "I subset J implies dim I >= dim J");
            }
        }
    }
}
