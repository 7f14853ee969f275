//! Acceptance suite: one test (and one printed pass line) per criterion.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use yoshihara_verifier::binaryforms::{
    build_parametrization, equivalent_fixing_point, identified_points_divisor,
    modular_nonequivalence_certificate, c_table_entry, pullback_form, BinaryForm, P1Point,
};
use yoshihara_verifier::construction::{
    self, omega_conditions, quartic_equation, ParameterSet,
};
use yoshihara_verifier::exactfield::{FieldDescriptor, FieldValue};
use yoshihara_verifier::picard;
use yoshihara_verifier::polyring::{
    intersection_multiplicity, solve_curve_conditions, PlaneCurve, Poly, PolyError, ProjPoint,
};
use yoshihara_verifier::infnear::intersection_multiplicity_by_blowup;

fn q() -> FieldDescriptor {
    FieldDescriptor::rationals()
}

fn params(desc: &FieldDescriptor, a: i64, b: i64, l: i64, m: i64) -> ParameterSet {
    ParameterSet::new(
        desc.clone(),
        desc.from_int(a),
        desc.from_int(b),
        desc.from_int(l),
        desc.from_int(m),
    )
    .unwrap()
}

/// The six golden parameter sets exercised across the suite.
fn acceptance_parameter_sets() -> Vec<ParameterSet> {
    let f5 = FieldDescriptor::prime_field(5).unwrap();
    let f4 = FieldDescriptor::extension_field(2, 2, None).unwrap();
    let g = f4.generator().unwrap();
    let g1 = g.add(&f4.one());
    let mut sets = vec![
        params(&q(), 1, 2, 1, 1),
        params(&q(), 1, -1, 1, 0),
        params(&f5, 1, 2, 1, 1),
    ];
    for (a, b) in [
        (f4.one(), g.clone()),
        (f4.one(), g1.clone()),
        (g, g1),
    ] {
        sets.push(ParameterSet::new(f4.clone(), a, b, f4.one(), f4.one()).unwrap());
    }
    sets
}

fn unique_system_solution(
    desc: &FieldDescriptor,
    theta: &FieldValue,
    lambda: &FieldValue,
    mu: &FieldValue,
) -> PlaneCurve {
    let conditions = omega_conditions(desc, theta, lambda, mu);
    let basis = solve_curve_conditions(desc, 4, &conditions);
    assert_eq!(
        basis.len(),
        1,
        "kernel dimension {} for theta = {theta}",
        basis.len()
    );
    basis.into_iter().next().unwrap()
}

#[test]
fn criterion_01_linear_system_uniqueness() {
    let d = q();
    // (α, λ, μ) = (1, 1, 1): the generator is z(z−x)³ + xy²((z−x) − y)
    let gen = unique_system_solution(&d, &d.from_int(1), &d.from_int(1), &d.from_int(1));
    let displayed = PlaneCurve::new(
        Poly::parse(&d, &PlaneCurve::xyz(), "z*(z-x)^3 + x*y^2*((z-x) - y)").unwrap(),
    )
    .unwrap();
    assert_eq!(gen, displayed);
    // β = 2 with the same (λ, μ)
    let gen2 = unique_system_solution(&d, &d.from_int(2), &d.from_int(1), &d.from_int(1));
    let closed2 = PlaneCurve::new(quartic_equation(
        &d.from_int(2),
        &d.from_int(1),
        &d.from_int(1),
    ))
    .unwrap();
    assert_eq!(gen2, closed2);

    // random tuples over ℚ and GF(5)
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let nonzero = |rng: &mut ChaCha8Rng, span: i64| loop {
        let v = rng.gen_range(-span..=span);
        if v != 0 {
            return v;
        }
    };
    for _ in 0..10 {
        let (t, l, m) = (
            nonzero(&mut rng, 5),
            nonzero(&mut rng, 5),
            rng.gen_range(-5..=5i64),
        );
        let gen = unique_system_solution(&d, &d.from_int(t), &d.from_int(l), &d.from_int(m));
        let closed =
            PlaneCurve::new(quartic_equation(&d.from_int(t), &d.from_int(l), &d.from_int(m)))
                .unwrap();
        assert_eq!(gen, closed, "mismatch at ({t},{l},{m}) over the rationals");
    }
    let f5 = FieldDescriptor::prime_field(5).unwrap();
    for _ in 0..10 {
        let (t, l, m) = (
            nonzero(&mut rng, 4).rem_euclid(5).max(1),
            nonzero(&mut rng, 4).rem_euclid(5).max(1),
            rng.gen_range(0..5i64),
        );
        let gen =
            unique_system_solution(&f5, &f5.from_int(t), &f5.from_int(l), &f5.from_int(m));
        let closed = PlaneCurve::new(quartic_equation(
            &f5.from_int(t),
            &f5.from_int(l),
            &f5.from_int(m),
        ))
        .unwrap();
        assert_eq!(gen, closed, "mismatch at ({t},{l},{m}) over GF(5)");
    }
    println!("ACCEPTANCE 1 (linear-system uniqueness): pass");
}

#[test]
fn criterion_02_configuration_fidelity() {
    // X: self-intersections of every configuration curve
    let expected_squares = [
        ("gamma~1", -1i64),
        ("gamma~2", -1),
        ("L~ab", -2),
        ("L~ac", -2),
        ("L~bc", -3),
        ("E~a", -2),
        ("E_a1", -1),
        ("E~b", -2),
        ("E~b1", -2),
        ("E~b2", -2),
        ("E~b3", -2),
        ("E_p_alpha", -1),
        ("E_p_beta", -1),
        ("E~q", -2),
        ("E_r", -1),
    ];
    for (name, sq) in expected_squares {
        assert_eq!(
            picard::self_intersection(&picard::configuration_class(name)),
            BigInt::from(sq),
            "self-intersection of {name}"
        );
    }
    // the [3/0] and [0/3] brackets of the two quartics with the two
    // triple-point exceptionals
    let g1 = picard::configuration_class("gamma~1");
    let g2 = picard::configuration_class("gamma~2");
    let pa = picard::configuration_class("E_p_alpha");
    let pb = picard::configuration_class("E_p_beta");
    assert_eq!(picard::pair(&g1, &pa), BigInt::from(3));
    assert_eq!(picard::pair(&g1, &pb), BigInt::from(0));
    assert_eq!(picard::pair(&g2, &pa), BigInt::from(0));
    assert_eq!(picard::pair(&g2, &pb), BigInt::from(3));
    // |R| = 9 with the lone −3 on L̃_bc
    let negatives = picard::negative_configuration_names();
    assert_eq!(negatives.len(), 9);
    let minus_three: Vec<&str> = negatives
        .iter()
        .copied()
        .filter(|n| {
            picard::self_intersection(&picard::configuration_class(n)) == BigInt::from(-3)
        })
        .collect();
    assert_eq!(minus_three, vec!["L~bc"]);
    // X′ quartic rows: self-intersection 1 and brackets (3, 1, 1, 1)
    for (gamma, triple) in [("gamma'1", "E_p_alpha"), ("gamma'2", "E_p_beta")] {
        let g = picard::xprime_configuration_class(gamma);
        assert_eq!(picard::self_intersection(&g), BigInt::from(1));
        for (other, v) in [(triple, 3i64), ("E_a1", 1), ("E_b3", 1), ("L~ab", 1)] {
            assert_eq!(
                picard::pair(&g, &picard::xprime_configuration_class(other)),
                BigInt::from(v),
                "{gamma} . {other}"
            );
        }
    }
    println!("ACCEPTANCE 2 (configuration fidelity): pass");
}

#[test]
fn criterion_03_contraction_and_degree() {
    for i in [1usize, 2] {
        let steps = picard::contract_sequence(i).expect("contraction must succeed");
        assert_eq!(steps.len(), 10);
        for s in &steps {
            assert_eq!(
                picard::self_intersection(&s.contracted),
                BigInt::from(-1),
                "stage {} of eta_{i}",
                s.stage
            );
        }
        assert_eq!(picard::image_degree(i).unwrap(), BigInt::from(39));
    }
    println!("ACCEPTANCE 3 (contraction and image degree): pass");
}

#[test]
fn criterion_04_intersection_audit() {
    let p = params(&q(), 1, 2, 1, 1);
    let (g1, g2) = construction::build_gammas(&p).unwrap();
    let ((_, f1), _) = construction::build_forms(&p, &g1, &g2).unwrap();
    let audit = construction::intersection_audit(&p, &g1, &g2, &f1).unwrap();
    assert_eq!(audit.i_a, 2);
    assert_eq!(audit.chain_total, 6);
    assert_eq!(audit.form_degree, 8);
    assert_eq!(audit.bezout_total, 16);
    assert!(audit.oracle_agrees, "Fulton and blow-up recursion disagree");
    assert!(audit.passed);
    println!("ACCEPTANCE 4 (intersection audit 2 + 6 + 8 = 16): pass");
}

#[test]
fn criterion_05_coefficient_table() {
    let d = q();
    let fv = |v: i64| d.from_int(v);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let nonzero = |rng: &mut ChaCha8Rng| loop {
        let v = rng.gen_range(-6..=6i64);
        if v != 0 {
            return v;
        }
    };
    let mut tuples = vec![(1i64, 2i64, 1i64, 1i64)];
    while tuples.len() < 6 {
        let (a, b) = (nonzero(&mut rng), nonzero(&mut rng));
        if a == b {
            continue;
        }
        tuples.push((a, b, nonzero(&mut rng), rng.gen_range(-4..=4)));
    }
    for (a, b, l, m) in tuples {
        let curve = PlaneCurve::new(quartic_equation(&fv(b), &fv(l), &fv(m))).unwrap();
        let par = build_parametrization(&fv(a), &fv(l), &fv(m)).unwrap();
        let (_, g) = pullback_form(&par, &curve, &fv(a), &fv(b), &fv(l), &fv(m)).unwrap();
        let (al, be, la, mu) = (fv(a), fv(b), fv(l), fv(m));
        let l4 = la.pow(4).unwrap();
        let l8 = la.pow(8).unwrap();
        let ab = al.mul(&be);
        let a2b2 = ab.mul(&ab);
        let mu3 = mu.pow(3).unwrap();
        let c = [
            a2b2.mul(&fv(3)),
            a2b2.mul(&fv(13)).mul(&mu),
            a2b2.mul(&fv(22)).mul(&mu.mul(&mu)),
            ab.mul(&fv(-3))
                .mul(&l4.mul(&al.add(&be)).sub(&ab.mul(&mu3).mul(&fv(6)))),
            ab.neg().mul(&mu).mul(
                &l4.mul(&be)
                    .mul(&fv(8))
                    .sub(&ab.mul(&mu3).mul(&fv(7)))
                    .add(&l4.mul(&al).mul(&fv(6))),
            ),
            ab.neg().mul(&mu.mul(&mu)).mul(
                &l4.mul(&al)
                    .mul(&fv(3))
                    .sub(&ab.mul(&mu3))
                    .add(&l4.mul(&be).mul(&fv(7))),
            ),
            // c₆ regression expression frozen from the pullback oracle:
            // λ⁴(λ⁴(αβ + α² + β²) − 2αβ²μ³)
            l4.mul(
                &l4.mul(&ab.add(&al.mul(&al)).add(&be.mul(&be)))
                    .sub(&al.mul(&be).mul(&be).mul(&mu3).mul(&fv(2))),
            ),
            l8.mul(&be.mul(&be)).mul(&mu),
        ];
        let expected = BinaryForm::new(c.iter().rev().cloned().collect()).unwrap();
        assert!(
            g.eq_up_to_scalar(&expected),
            "c-table mismatch at ({a},{b},{l},{m})"
        );
    }
    // frozen numeric fixture at (1, 2, 1, 1): c₆/c₀ = −1/12 exactly
    let curve = PlaneCurve::new(quartic_equation(&fv(2), &fv(1), &fv(1))).unwrap();
    let par = build_parametrization(&fv(1), &fv(1), &fv(1)).unwrap();
    let (_, g) = pullback_form(&par, &curve, &fv(1), &fv(2), &fv(1), &fv(1)).unwrap();
    let ratio = c_table_entry(&g, 6).div(c_table_entry(&g, 0)).unwrap();
    assert_eq!(ratio, fv(-1).div(&fv(12)).unwrap());
    println!("ACCEPTANCE 5 (coefficient table incl. frozen c6): pass");
}

#[test]
fn criterion_06_verdicts_rational_generic() {
    let p = params(&q(), 1, 2, 1, 1);
    let report = construction::full_report(&p).unwrap();
    assert!(!report.projectively_equivalent);
    assert!(!report.isomorphic);
    assert_eq!(report.type_i, [false, false]);
    // non-equivalence independently: elimination failure over ℚ plus a
    // two-good-prime modular certificate
    let (g1, g2) = construction::build_gammas(&p).unwrap();
    let ((_, f1), (_, f2)) = construction::build_forms(&p, &g1, &g2).unwrap();
    assert!(equivalent_fixing_point(&f1, &f2).is_none());
    let primes = modular_nonequivalence_certificate(&f1, &f2).expect("certificate");
    assert!(primes.len() >= 2, "need two good primes, got {primes:?}");
    println!("ACCEPTANCE 6 (verdicts over the rationals, mu = 1): pass");
}

#[test]
fn criterion_07_verdicts_mu_zero() {
    let p = params(&q(), 1, -1, 1, 0);
    let report = construction::full_report(&p).unwrap();
    assert!(report.projectively_equivalent);
    assert_eq!(
        report.projective_witness.as_deref(),
        Some("(x:y:z) -> (x:1*y:-1*z)")
    );
    // the witness swaps the quartics exactly
    let (g1, g2) = construction::build_gammas(&p).unwrap();
    let d = q();
    let xyz = PlaneCurve::xyz();
    let swapped = g1.equation().substitute(&[
        Poly::var(&d, &xyz, 0),
        Poly::var(&d, &xyz, 1),
        Poly::var(&d, &xyz, 2).scale(&d.from_int(-1)),
    ]);
    assert_eq!(PlaneCurve::new(swapped).unwrap(), g2);
    assert!(report.isomorphic);
    assert_eq!(
        report.isomorphism_witness.as_deref(),
        Some("(u:v) -> (1*u : 0*u + 1*v)")
    );
    println!("ACCEPTANCE 7 (verdicts at mu = 0): pass");
}

#[test]
fn criterion_08_characteristic_two() {
    let f4 = FieldDescriptor::extension_field(2, 2, None).unwrap();
    let g = f4.generator().unwrap();
    let g1 = g.add(&f4.one());
    for (a, b) in [
        (f4.one(), g.clone()),
        (f4.one(), g1.clone()),
        (g.clone(), g1.clone()),
    ] {
        let p = ParameterSet::new(f4.clone(), a.clone(), b.clone(), f4.one(), f4.one()).unwrap();
        let report = construction::full_report(&p).unwrap();
        assert!(!report.isomorphic, "({a}, {b}) must not be isomorphic");
        assert_eq!(report.degrees, [39, 39]);
    }
    println!("ACCEPTANCE 8 (GF(4), all three distinct nonzero pairs): pass");
}

#[test]
fn criterion_09_not_type_i() {
    for p in acceptance_parameter_sets() {
        let (g1, g2) = construction::build_gammas(&p).unwrap();
        let ((_, f1), (_, f2)) = construction::build_forms(&p, &g1, &g2).unwrap();
        for f in [&f1, &f2] {
            // (1:0) comes from v | F, (0:1) from the extra identified pair
            assert!(f.order_at_one_zero() >= 1);
            let desc = f.descriptor().clone();
            let extra = P1Point::new(desc.zero(), desc.one());
            let div = identified_points_divisor(f, &[extra]);
            assert!(
                div.support_size() >= 2,
                "support {} for field {}",
                div.support_size(),
                p.field()
            );
        }
    }
    println!("ACCEPTANCE 9 (not type I on every golden instance): pass");
}

// --------------------------------------------------------------------------
// criterion 10: property suites
// --------------------------------------------------------------------------

fn random_element(desc: &FieldDescriptor, rng: &mut ChaCha8Rng) -> FieldValue {
    if let Some(size) = desc.size() {
        let elements: Vec<FieldValue> = desc.enumerate().unwrap().collect();
        elements[rng.gen_range(0..size as usize)].clone()
    } else {
        let n = rng.gen_range(-50..=50i64);
        let d = rng.gen_range(1..=20i64);
        desc.from_int(n).div(&desc.from_int(d)).unwrap()
    }
}

fn field_axioms(desc: &FieldDescriptor, rng: &mut ChaCha8Rng, rounds: usize) {
    for _ in 0..rounds {
        let a = random_element(desc, rng);
        let b = random_element(desc, rng);
        let c = random_element(desc, rng);
        assert_eq!(a.add(&b), b.add(&a));
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        assert_eq!(a.add(&desc.zero()), a);
        assert_eq!(a.mul(&desc.one()), a);
        assert_eq!(a.sub(&a), desc.zero());
        if !a.is_zero() {
            assert_eq!(a.mul(&a.inv().unwrap()), desc.one());
        }
    }
}

fn random_curve_through_origin_chart(
    desc: &FieldDescriptor,
    rng: &mut ChaCha8Rng,
    degree: u32,
) -> Option<PlaneCurve> {
    // random homogeneous curve through (0:0:1): zero z^degree coefficient
    let xyz = PlaneCurve::xyz();
    let mut poly = Poly::zero(desc, &xyz);
    for i in 0..=degree {
        for j in 0..=(degree - i) {
            if i == 0 && j == 0 {
                continue;
            }
            let c = desc.from_int(rng.gen_range(-3..=3i64));
            poly = poly.add(&Poly::monomial(
                desc,
                &xyz,
                vec![i, j, degree - i - j],
                c,
            ));
        }
    }
    PlaneCurve::new(poly).ok().filter(|c| c.degree() == degree)
}

#[test]
fn criterion_10_property_suites() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);

    // field axioms, ≥ 1000 random triples per field
    for desc in [
        q(),
        FieldDescriptor::prime_field(5).unwrap(),
        FieldDescriptor::prime_field(7).unwrap(),
        FieldDescriptor::extension_field(2, 2, None).unwrap(),
        FieldDescriptor::extension_field(3, 2, None).unwrap(),
    ] {
        field_axioms(&desc, &mut rng, 1000);
    }

    // oracle equivalence on ≥ 50 random small curve pairs
    let d = q();
    let origin = ProjPoint::from_ints(&d, 0, 0, 1).unwrap();
    let mut compared = 0;
    while compared < 50 {
        let deg_f = rng.gen_range(2..=3u32);
        let deg_g = rng.gen_range(2..=3u32);
        let (Some(f), Some(g)) = (
            random_curve_through_origin_chart(&d, &mut rng, deg_f),
            random_curve_through_origin_chart(&d, &mut rng, deg_g),
        ) else {
            continue;
        };
        let fulton = match intersection_multiplicity(&f, &g, &origin) {
            Ok(v) => v,
            Err(PolyError::CommonComponent) => continue,
            Err(e) => panic!("unexpected error {e}"),
        };
        let oracle = match intersection_multiplicity_by_blowup(&f, &g, &origin) {
            Ok(v) => v,
            // the recursion cannot always separate conjugate tangential
            // branches; skip those samples
            Err(_) => continue,
        };
        assert_eq!(fulton, oracle, "oracle mismatch for {f:?} vs {g:?}");
        compared += 1;
    }

    // lattice signature (1, 10): the Gram matrix of the basis
    for i in 0..picard::RANK {
        for j in 0..picard::RANK {
            let mut a = [0i64; picard::RANK];
            let mut b = [0i64; picard::RANK];
            a[i] = 1;
            b[j] = 1;
            let expected = if i != j {
                0
            } else if i == 0 {
                1
            } else {
                -1
            };
            assert_eq!(
                picard::pair(
                    &picard::DivisorClass::from_i64(a),
                    &picard::DivisorClass::from_i64(b)
                ),
                BigInt::from(expected)
            );
        }
    }

    // equivalence-relation laws for the binary-form decision
    for desc in [q(), FieldDescriptor::prime_field(5).unwrap()] {
        for _ in 0..20 {
            let mut coeffs: Vec<FieldValue> =
                (0..9).map(|_| random_element(&desc, &mut rng)).collect();
            if coeffs.iter().all(|c| c.is_zero()) {
                coeffs[3] = desc.one();
            }
            let f = BinaryForm::new(coeffs).unwrap();
            // reflexivity
            assert!(equivalent_fixing_point(&f, &f).is_some());
            // invariance under a random substitution fixing (0:1),
            // in both directions (symmetry)
            let a = loop {
                let v = random_element(&desc, &mut rng);
                if !v.is_zero() {
                    break v;
                }
            };
            let dd = loop {
                let v = random_element(&desc, &mut rng);
                if !v.is_zero() {
                    break v;
                }
            };
            let c = random_element(&desc, &mut rng);
            let g = f.substitute_fixing(&a, &c, &dd);
            assert!(equivalent_fixing_point(&f, &g).is_some());
            assert!(equivalent_fixing_point(&g, &f).is_some());
        }
    }

    // pushforward respects the pairing law
    // A'·B' = A·B + (A·E)(B·E) for every (−1)-class E of the basis
    for _ in 0..100 {
        let mut a = [0i64; picard::RANK];
        let mut b = [0i64; picard::RANK];
        for i in 0..picard::RANK {
            a[i] = rng.gen_range(-4..=4);
            b[i] = rng.gen_range(-4..=4);
        }
        let a = picard::DivisorClass::from_i64(a);
        let b = picard::DivisorClass::from_i64(b);
        let mut e_coeffs = [0i64; picard::RANK];
        e_coeffs[rng.gen_range(1..picard::RANK)] = 1;
        let e = picard::DivisorClass::from_i64(e_coeffs);
        let lhs = picard::pair(&a.pushforward(&e), &b.pushforward(&e));
        let rhs =
            picard::pair(&a, &b) + picard::pair(&a, &e) * picard::pair(&b, &e);
        assert_eq!(lhs, rhs);
    }

    println!("ACCEPTANCE 10 (property suites): pass");
}
