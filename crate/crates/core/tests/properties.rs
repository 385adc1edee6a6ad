use std::collections::BTreeMap;

use gorlin::divpow::{monomials, Vars};
use gorlin::linalg::{bareiss_determinant, inverse, mat_mul, RatMatrix};
use gorlin::poly::Term;
use gorlin::verify::pfaffian;
use gorlin::*;
use num_rational::BigRational;
use proptest::prelude::*;

fn int(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

fn monomial_strategy(max: u16) -> impl Strategy<Value = Monomial> {
    (0..=max, 0..=max, 0..=max).prop_map(|(a, b, c)| Monomial::new(a, b, c))
}

fn tvar_strategy() -> impl Strategy<Value = TVar> {
    prop::sample::select(monomials(Vars::Xyz, 2).elements().to_vec()).prop_map(TVar)
}

fn generic_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (
            monomial_strategy(2),
            prop::collection::vec(tvar_strategy(), 0..3),
            -4i64..=4,
        ),
        0..5,
    )
    .prop_map(|terms| {
        let terms: Vec<(Term, BigRational)> = terms
            .into_iter()
            .map(|(m, t, c)| (Term::new(m, t), int(c)))
            .collect();
        Polynomial::from_terms(Ring::Generic, terms).unwrap()
    })
}

fn specialized_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((monomial_strategy(3), -6i64..=6, 1i64..=3), 0..6).prop_map(|terms| {
        let terms: Vec<(Term, BigRational)> = terms
            .into_iter()
            .map(|(m, p, q)| {
                (
                    Term::new(m, Vec::new()),
                    BigRational::new(p.into(), q.into()),
                )
            })
            .collect();
        Polynomial::from_terms(Ring::Specialized, terms).unwrap()
    })
}

fn homogeneous_form(degree: u32) -> impl Strategy<Value = Polynomial> {
    let basis = monomials(Vars::Xyz, degree).elements().to_vec();
    prop::collection::vec(-3i64..=3, basis.len()).prop_map(move |cs| {
        basis
            .iter()
            .zip(cs)
            .fold(Polynomial::zero(Ring::Specialized), |acc, (m, c)| {
                &acc + &Polynomial::monomial(Ring::Specialized, *m).scale_int(c)
            })
    })
}

fn divided_element(degree: u32) -> impl Strategy<Value = DividedElement> {
    let basis = monomials(Vars::Xyz, degree).elements().to_vec();
    prop::collection::vec(-3i64..=3, basis.len()).prop_map(move |cs| {
        let coeffs = basis
            .iter()
            .zip(cs)
            .map(|(m, c)| (*m, Polynomial::from_int(Ring::Specialized, c)));
        DividedElement::from_coeffs(Ring::Specialized, degree, coeffs).unwrap()
    })
}

fn assignment() -> impl Strategy<Value = BTreeMap<TVar, BigRational>> {
    let vars: Vec<TVar> = monomials(Vars::Xyz, 2).iter().map(|m| TVar(*m)).collect();
    prop::collection::vec(-5i64..=5, vars.len())
        .prop_map(move |vs| vars.iter().copied().zip(vs.into_iter().map(int)).collect())
}

fn inverse_system(n: u32) -> impl Strategy<Value = InverseSystem> {
    let basis = monomials(Vars::Xyz, 2 * n - 2).elements().to_vec();
    prop::collection::vec(-3i64..=3, basis.len()).prop_map(move |cs| {
        let coeffs: Vec<(Monomial, BigRational)> =
            basis.iter().copied().zip(cs.into_iter().map(int)).collect();
        InverseSystem::from_coefficients(n, &coeffs).unwrap()
    })
}

fn nondegenerate(n: u32) -> impl Strategy<Value = InverseSystem> {
    inverse_system(n).prop_filter("catalecticant must be invertible", |phi| {
        !Catalecticant::new(phi).unwrap().delta().is_zero()
    })
}

fn int_matrix(size: usize) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec(prop::collection::vec((-4i64..=4).prop_map(int), size), size)
}

fn alternating(size: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(-4i64..=4, size * size).prop_map(move |vs| {
        PolyMatrix::from_fn(
            Ring::Specialized,
            vec![Label::One; size],
            vec![Label::One; size],
            |i, j| {
                let v = match i.cmp(&j) {
                    std::cmp::Ordering::Less => vs[i * size + j],
                    std::cmp::Ordering::Greater => -vs[j * size + i],
                    std::cmp::Ordering::Equal => 0,
                };
                Polynomial::from_int(Ring::Specialized, v)
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in generic_poly(), b in generic_poly(), c in generic_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Polynomial::zero(Ring::Generic));
        prop_assert_eq!(&a * &Polynomial::one(Ring::Generic), a.clone());
    }

    #[test]
    fn sum_of_products_matches_naive(a in generic_poly(), b in generic_poly(), c in generic_poly(), d in generic_poly()) {
        let fused = Polynomial::sum_of_products(Ring::Generic, [(&a, &b), (&c, &d)]);
        prop_assert_eq!(fused, &(&a * &b) + &(&c * &d));
    }

    #[test]
    fn specialization_is_a_ring_map(a in generic_poly(), b in generic_poly(), s in assignment()) {
        prop_assert_eq!((&a * &b).specialize(&s), &a.specialize(&s) * &b.specialize(&s));
        prop_assert_eq!((&a + &b).specialize(&s), &a.specialize(&s) + &b.specialize(&s));
    }

    #[test]
    fn bidegree_adds(a in generic_poly(), b in generic_poly()) {
        if let (Some(da), Some(db)) = (a.bidegree(), b.bidegree()) {
            prop_assert_eq!((&a * &b).bidegree(), Some(da + db));
        }
    }

    #[test]
    fn print_parse_roundtrip(a in generic_poly(), b in specialized_poly()) {
        prop_assert_eq!(Polynomial::parse(&a.to_string(), Ring::Generic).unwrap(), a);
        prop_assert_eq!(Polynomial::parse(&b.to_string(), Ring::Specialized).unwrap(), b);
    }

    #[test]
    fn contraction_is_a_module_action(f in homogeneous_form(1), g in homogeneous_form(2), phi in inverse_system(3)) {
        // the zero form has no degree, so its contraction carries the input degree
        prop_assume!(!f.is_zero() && !g.is_zero() && !(&f.pow(2) + &g).is_zero());
        let fg = contract(&(&f * &g), phi.phi()).unwrap();
        let nested = contract(&f, &contract(&g, phi.phi()).unwrap()).unwrap();
        prop_assert_eq!(fg, nested);
        let h = &f.pow(2) + &g;
        let sum = contract(&f.pow(2), phi.phi()).unwrap().add(&contract(&g, phi.phi()).unwrap()).unwrap();
        prop_assert_eq!(contract(&h, phi.phi()).unwrap(), sum);
    }

    #[test]
    fn determinant_routines_agree(m in int_matrix(4)) {
        let p = PolyMatrix::from_fn(Ring::Specialized, vec![Label::One; 4], vec![Label::One; 4], |i, j| {
            Polynomial::constant(Ring::Specialized, m[i][j].clone()).unwrap()
        });
        let det = bareiss_determinant(&m);
        prop_assert_eq!(p.determinant_cofactor().as_constant().unwrap_or_default(), det.clone());
        if let Some(inv) = inverse(&m) {
            let id = mat_mul(&m, &inv);
            for (i, row) in id.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    prop_assert_eq!(v.clone(), int((i == j) as i64));
                }
            }
        } else {
            prop_assert_eq!(det, int(0));
        }
    }

    #[test]
    fn pfaffian_squares_to_determinant(m in alternating(4), m6 in alternating(6)) {
        for mat in [m, m6] {
            let all: Vec<usize> = (0..mat.nrows()).collect();
            let pf = pfaffian(&mat, &all).unwrap();
            prop_assert_eq!(&pf * &pf, mat.determinant().unwrap());
        }
    }

    #[test]
    fn catalecticant_identities(
        phi in nondegenerate(3),
        mu in homogeneous_form(2),
        mu2 in homogeneous_form(2),
        nu in divided_element(2),
        nu2 in divided_element(2),
    ) {
        let cat = Catalecticant::new(&phi).unwrap();
        let delta = cat.delta().clone();
        let p_mu = cat.p_apply(&phi, &mu).unwrap();
        let p_mu2 = cat.p_apply(&phi, &mu2).unwrap();
        // q(p(mu)) = delta mu and p(q(nu)) = delta nu
        prop_assert_eq!(cat.q_apply(&p_mu).unwrap(), &delta * &mu);
        let q_nu = cat.q_apply(&nu).unwrap();
        prop_assert_eq!(cat.p_apply(&phi, &q_nu).unwrap(), nu.scale(&delta));
        // [p(mu)](mu') is symmetric
        prop_assert_eq!(pair(&mu2, &p_mu).unwrap(), pair(&mu, &p_mu2).unwrap());
        // Q(p(mu) ⊗ nu) = delta mu(nu) = Q(nu ⊗ p(mu))
        prop_assert_eq!(cat.qq_pair(&p_mu, &nu).unwrap(), &delta * &pair(&mu, &nu).unwrap());
        prop_assert_eq!(cat.qq_pair(&nu, &p_mu).unwrap(), &delta * &pair(&mu, &nu).unwrap());
        prop_assert_eq!(cat.qq_pair(&nu2, &nu).unwrap(), cat.qq_pair(&nu, &nu2).unwrap());
        // [q(nu)](nu') is symmetric
        let q_nu2 = cat.q_apply(&nu2).unwrap();
        prop_assert_eq!(pair(&q_nu, &nu2).unwrap(), pair(&q_nu2, &nu).unwrap());
    }

    #[test]
    fn tilde_contraction_by_yz_monomials(phi in inverse_system(3), m in prop::sample::select(monomials(Vars::Yz, 3).elements().to_vec())) {
        // m(Φ̃) = Σ_{m2} t_{m m2} (x m2)* over monomials m2 of degree n - 2
        let got = contract(&Polynomial::monomial(Ring::Specialized, m), &phi.phi_tilde()).unwrap();
        let mut want = DividedElement::zero(Ring::Specialized, 2);
        for m2 in monomials(Vars::Xyz, 1).iter() {
            want.add_term(m2.mul(&Monomial::X), &phi.coefficient(&m.mul(m2))).unwrap();
        }
        prop_assert_eq!(got, want);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_n2_complexes(phi in nondegenerate(2)) {
        let res = build_resolution(&phi).unwrap();
        let report = verify::full_report(&res).unwrap();
        prop_assert!(report.passed(), "{}", report.to_text());
    }

    #[test]
    fn random_n3_complexes(phi in nondegenerate(3)) {
        let res = build_resolution(&phi).unwrap();
        prop_assert!(res.b1().mul(res.b2()).unwrap().is_zero());
        prop_assert!(res.b2().is_alternating());
        prop_assert!(verify::check_oracle(&res).unwrap().passed);
    }
}

#[test]
fn dual_bases_pair_to_identity() {
    for r in 0..=4 {
        let basis = monomials(Vars::Xyz, r);
        for m in basis.iter() {
            for m2 in basis.iter() {
                let v = pair(
                    &Polynomial::monomial(Ring::Specialized, *m),
                    &DividedElement::dual(Ring::Specialized, *m2),
                )
                .unwrap();
                assert_eq!(
                    v,
                    Polynomial::from_int(Ring::Specialized, (m == m2) as i64),
                    "{m} against ({m2})*"
                );
            }
        }
    }
}
