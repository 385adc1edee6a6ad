use gorlin::divpow::{monomials, Vars};
use gorlin::fixtures::{self, EXAMPLE_0, EXAMPLE_2, EXAMPLE_3};
use gorlin::resolution::{b1_basis, b2_basis, twists};
use gorlin::verify::{self, pfaffian, submaximal_pfaffians};
use gorlin::*;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn q(s: &str) -> Polynomial {
    Polynomial::parse(s, Ring::Specialized).unwrap()
}

#[test]
fn generic_n2_is_a_graded_alternating_complex() {
    let res = build_resolution(&InverseSystem::generic(2).unwrap()).unwrap();
    assert_eq!((res.b2().nrows(), res.b2().ncols()), (5, 5));
    assert!(res.b2().is_alternating());
    for (_, _, e) in res.b2().entries() {
        if !e.is_zero() {
            assert_eq!(e.xyz_degree(), Some(1));
        }
    }
    let report = verify::full_report(&res).unwrap();
    assert!(report.passed(), "{}", report.to_text());
    assert!(
        report.get("annihilator").is_none(),
        "span checks are specialized only"
    );
}

#[test]
fn generic_b3_reindexes_b1() {
    let res = build_resolution(&InverseSystem::generic(2).unwrap()).unwrap();
    let y2 = Monomial::new(0, 2, 0);
    assert_eq!(
        res.b3().at(&Label::Dual(y2), &Label::One),
        res.b1().at(&Label::One, &Label::Sym(y2))
    );
}

#[test]
fn generic_complex_specializes_to_the_specialized_one() {
    let generic = build_resolution(&InverseSystem::generic(2).unwrap()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10 {
        let point = verify::random_assignment(2, &mut rng, 4);
        let c = verify::check_specialization_commutes(&generic, &point).unwrap();
        assert!(c.passed, "{:?}", c.witness);
    }
}

#[test]
fn twist_display_for_n2() {
    let t = twists(2);
    // C = 3
    assert_eq!(t.b3.shifts, vec![BiDegree::new(-5, -8)]);
    assert_eq!(t.b2.shifts[..2], [BiDegree::new(-3, -6); 2]);
    assert_eq!(t.b2.shifts[2..], [BiDegree::new(-3, -5); 3]);
    assert_eq!(t.b1.shifts[..2], [BiDegree::new(-2, -2); 2]);
    assert_eq!(t.b1.shifts[2..], [BiDegree::new(-2, -3); 3]);
    assert_eq!(b1_basis(4).len(), 9);
    assert_eq!(b2_basis(4).len(), 9);
}

#[test]
fn fixture_b1_examples() {
    let r0 = build_resolution(&EXAMPLE_0.inverse_system()).unwrap();
    assert_eq!(r0.b1().get(0, 0), &q("x^3 - x*y^2"));
    let r3 = build_resolution(&EXAMPLE_3.inverse_system()).unwrap();
    assert_eq!(
        r3.b1().at(&Label::One, &Label::Sym(Monomial::new(0, 3, 0))),
        Some(&q("54*y^3"))
    );
    assert_eq!(r3.b2().get(0, 1), &q("-54*x"));
    let r1 = build_resolution(&fixtures::EXAMPLE_1.inverse_system()).unwrap();
    let col: Vec<Polynomial> = (0..7).map(|i| r1.b2().get(i, 3).clone()).collect();
    assert_eq!(col, ["z", "x", "0", "0", "x", "0", "0"].map(q));
}

#[test]
fn pairing_oracle_example_entry() {
    let phi = EXAMPLE_0.inverse_system();
    let cat = Catalecticant::new(&phi).unwrap();
    let oracle = resolution::b2_pairing_oracle(&cat, &phi).unwrap();
    let row = Label::Dual(Monomial::new(0, 1, 1));
    let col = Label::Sym(Monomial::new(0, 0, 2));
    assert_eq!(oracle.at(&row, &col), Some(&q("2*x")));
}

#[test]
fn pfaffians_square_to_submaximal_determinants() {
    for f in fixtures::all() {
        let res = build_resolution(&f.inverse_system()).unwrap();
        let b2 = res.b2();
        for i in 0..7 {
            let keep: Vec<usize> = (0..7).filter(|&k| k != i).collect();
            let pf = pfaffian(b2, &keep).unwrap();
            let det = b2.submatrix(&keep, &keep).determinant().unwrap();
            assert_eq!(&pf * &pf, det, "{} row {i}", f.name);
        }
    }
}

#[test]
fn example_two_pfaffian_lies_in_b1_span() {
    let res = build_resolution(&EXAMPLE_2.inverse_system()).unwrap();
    let pf = submaximal_pfaffians(res.b2()).unwrap()[0].clone();
    assert_eq!(pf.xyz_degree(), Some(3));
    let entries: Vec<Polynomial> = (0..7).map(|j| res.b1().get(0, j).clone()).collect();
    let rows: Vec<Vec<BigRational>> = entries
        .iter()
        .map(|g| verify::form_vector(g, 3).unwrap())
        .collect();
    let mut with = rows.clone();
    with.push(verify::form_vector(&pf, 3).unwrap());
    assert_eq!(linalg::rank(&rows), linalg::rank(&with));
}

#[test]
fn example_three_combination_annihilates() {
    let phi = EXAMPLE_3.inverse_system();
    let res = build_resolution(&phi).unwrap();
    let at = |m: Monomial| res.b1().at(&Label::One, &Label::Dual(m)).unwrap().clone();
    let combo = &(&at(Monomial::new(0, 2, 0)) + &at(Monomial::new(0, 1, 1)).scale_int(2))
        + &at(Monomial::new(0, 0, 2));
    assert_eq!(combo, q("54*x^3"));
    assert!(contract(&combo, phi.phi()).unwrap().is_zero());
}

#[test]
fn corrupted_b1_is_reported_with_a_witness() {
    let res = build_resolution(&EXAMPLE_2.inverse_system()).unwrap();
    let mut b1 = res.b1().clone();
    b1.add_to(0, 4, &q("x*y^2"));
    let bad = res.with_b1(b1);
    let c = verify::check_b1_annihilates(&bad).unwrap();
    assert!(!c.passed);
    assert!(c.witness.as_deref().unwrap().contains("y^2*z"));
    let c = verify::check_annihilator(&bad).unwrap();
    assert!(!c.passed);
    assert!(c.witness.is_some());
}

#[test]
fn corrupted_b2_fails_the_complex_check() {
    let res = build_resolution(&EXAMPLE_0.inverse_system()).unwrap();
    let mut b2 = res.b2().clone();
    b2.add_to(0, 1, &q("x"));
    let bad = res.with_b2(b2);
    let report = verify::full_report(&bad).unwrap();
    assert!(!report.passed());
    for name in ["complex", "alternating", "oracle"] {
        let c = report.get(name).unwrap();
        assert!(!c.passed && c.witness.is_some(), "{name}");
    }
}

#[test]
fn degenerate_inputs() {
    let zero = InverseSystem::from_coefficients(2, &[]).unwrap();
    assert!(matches!(
        build_resolution(&zero),
        Err(Error::DegenerateInverseSystem)
    ));
    let report = verify::full_report_for(&zero).unwrap();
    assert!(!report.passed());
    assert_eq!(report.checks[0].name, "degenerate");
    // (x^4)* has δ = 0 and an annihilator larger than 2n + 1 in degree n
    let x4 = InverseSystem::from_coefficients(
        3,
        &[(Monomial::new(4, 0, 0), BigRational::from_integer(1.into()))],
    )
    .unwrap();
    assert!(Catalecticant::new(&x4).unwrap().delta().is_zero());
    assert_eq!(verify::annihilator_degree_n(&x4).unwrap().len(), 9);
}

#[test]
fn colon_membership_by_divisibility() {
    assert!(verify::in_colon_ideal(&q("54*y^3"), 3));
    assert!(!verify::in_colon_ideal(&q("x*y*z"), 3));
    for n in 2..=3 {
        let c = verify::check_colon_ideal(n).unwrap();
        assert!(c.passed, "{}", c.detail);
    }
    let phi = divpow::colon_inverse_system(3).unwrap();
    assert_eq!(phi, EXAMPLE_3.inverse_system());
}

#[test]
fn random_trials_are_reproducible() {
    let a = verify::random_trials(2, 5, 11).unwrap();
    let b = verify::random_trials(2, 5, 11).unwrap();
    assert!(a.passed());
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
    assert_eq!(monomials(Vars::Xyz, 2).len(), 6);
}

#[test]
fn json_dump_shape() {
    let res = build_resolution(&EXAMPLE_2.inverse_system()).unwrap();
    let v: serde_json::Value = serde_json::to_value(res.to_json()).unwrap();
    assert_eq!(v["delta"], "1");
    assert_eq!(v["mode"], "specialized");
    assert_eq!(v["b1"][0]["label"], "(y^2)*");
    assert_eq!(v["b1"][0]["value"], "x^3");
    assert_eq!(v["b2"]["rows"].as_array().unwrap().len(), 7);
    assert_eq!(v["b3"].as_array().unwrap().len(), 7);
    assert_eq!(v["twists"]["B3"][0]["shift"], serde_json::json!([-7, -17]));
}
