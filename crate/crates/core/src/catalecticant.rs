//! The middle catalecticant `T = (t_{m1 m2})` on monomials of degree `n - 1`,
//! its determinant `δ`, classical adjoint `Q`, and the forms
//! `λ_{m2} = Σ_{m1} m1 Q_{m1, m2}`.
//!
//! `T` is the matrix of `p(μ) = μ(Φ)` and `Q` the matrix of `q`, so that
//! `q(m2*) = λ_{m2}` and `𝔔(m1* ⊗ m2*) = Q_{m1, m2}`.

use std::collections::BTreeMap;

use crate::divpow::{contract, monomials, DividedElement, InverseSystem, MonomialBasis, Vars};
use crate::error::{Error, Result};
use crate::matrix::{Label, PolyMatrix};
use crate::poly::{Monomial, Polynomial, Ring};

/// The catalecticant matrix of `Φ`: entry `(m1, m2)` is `(m1 m2)(Φ)`.
pub fn cat_matrix(phi: &InverseSystem) -> PolyMatrix {
    let basis = monomials(Vars::Xyz, phi.n() - 1);
    let labels: Vec<Label> = basis.iter().map(|m| Label::Sym(*m)).collect();
    let elements = basis.elements();
    PolyMatrix::from_fn(phi.ring(), labels.clone(), labels, |i, j| {
        phi.coefficient(&elements[i].mul(&elements[j]))
    })
}

#[derive(Clone, Debug)]
pub struct Catalecticant {
    n: u32,
    ring: Ring,
    basis: MonomialBasis,
    t: PolyMatrix,
    delta: Polynomial,
    q: PolyMatrix,
    lambdas: BTreeMap<Monomial, Polynomial>,
}

impl Catalecticant {
    pub fn new(phi: &InverseSystem) -> Result<Self> {
        let basis = monomials(Vars::Xyz, phi.n() - 1);
        let t = cat_matrix(phi);
        let delta = t.determinant()?;
        let q = t.adjoint()?;
        let mut cat = Catalecticant {
            n: phi.n(),
            ring: phi.ring(),
            basis,
            t,
            delta,
            q,
            lambdas: BTreeMap::new(),
        };
        cat.lambdas = lambdas(&cat);
        Ok(cat)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// Monomials of degree `n - 1` indexing `T` and `Q`.
    pub fn basis(&self) -> &MonomialBasis {
        &self.basis
    }

    pub fn t(&self) -> &PolyMatrix {
        &self.t
    }

    pub fn delta(&self) -> &Polynomial {
        &self.delta
    }

    pub fn q(&self) -> &PolyMatrix {
        &self.q
    }

    pub fn lambdas(&self) -> &BTreeMap<Monomial, Polynomial> {
        &self.lambdas
    }

    pub fn lambda(&self, m: &Monomial) -> &Polynomial {
        &self.lambdas[m]
    }

    /// `Q_{m1, m2}`; panics if either monomial is not of degree `n - 1`.
    pub fn q_entry(&self, m1: &Monomial, m2: &Monomial) -> &Polynomial {
        let i = self
            .basis
            .index_of(m1)
            .expect("Q row monomial of degree n - 1");
        let j = self
            .basis
            .index_of(m2)
            .expect("Q column monomial of degree n - 1");
        self.q.get(i, j)
    }

    fn check_degree(&self, nu: &DividedElement) -> Result<()> {
        if nu.degree() != self.n - 1 {
            return Err(Error::Degree(format!(
                "expected a divided element of degree {}, got degree {}",
                self.n - 1,
                nu.degree()
            )));
        }
        Ok(())
    }

    /// `q(ν) = Σ_{m2} ν_{m2} λ_{m2}`.
    pub fn q_apply(&self, nu: &DividedElement) -> Result<Polynomial> {
        self.check_degree(nu)?;
        let mut acc = Polynomial::zero(self.ring);
        for (m, c) in nu.iter() {
            acc += &(c * &self.lambdas[m]);
        }
        Ok(acc)
    }

    /// The symmetric form `𝔔(ν1 ⊗ ν2) = Σ ν1_{m1} ν2_{m2} Q_{m1, m2}`.
    pub fn qq_pair(&self, nu1: &DividedElement, nu2: &DividedElement) -> Result<Polynomial> {
        self.check_degree(nu1)?;
        self.check_degree(nu2)?;
        let mut acc = Polynomial::zero(self.ring);
        for (m1, c1) in nu1.iter() {
            for (m2, c2) in nu2.iter() {
                let q = self.q_entry(m1, m2);
                if !q.is_zero() {
                    acc += &(&(c1 * c2) * q);
                }
            }
        }
        Ok(acc)
    }

    /// `p(μ) = μ(Φ)` for a form of degree `n - 1`.
    pub fn p_apply(&self, phi: &InverseSystem, mu: &Polynomial) -> Result<DividedElement> {
        if mu.is_zero() {
            return Ok(DividedElement::zero(self.ring, self.n - 1));
        }
        if mu.xyz_degree() != Some(self.n - 1) {
            return Err(Error::Degree(format!(
                "p expects a form of degree {}",
                self.n - 1
            )));
        }
        contract(mu, phi.phi())
    }
}

/// `λ_{m2} = Σ_{m1} m1 Q_{m1, m2}` for every monomial `m2` of degree `n - 1`.
pub fn lambdas(cat: &Catalecticant) -> BTreeMap<Monomial, Polynomial> {
    let elements = cat.basis.elements();
    elements
        .iter()
        .enumerate()
        .map(|(j, m2)| {
            let mut acc = Polynomial::zero(cat.ring);
            for (i, m1) in elements.iter().enumerate() {
                acc += &cat.q.get(i, j).mul_monomial(m1);
            }
            (*m2, acc)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{BiDegree, TVar};
    use num_rational::BigRational;

    fn q(s: &str) -> Polynomial {
        Polynomial::parse(s, Ring::Specialized).unwrap()
    }

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn phi0() -> InverseSystem {
        InverseSystem::from_coefficients(
            3,
            &[
                (Monomial::new(2, 2, 0), int(1)),
                (Monomial::new(1, 1, 2), int(-1)),
                (Monomial::new(0, 0, 4), int(2)),
                (Monomial::new(4, 0, 0), int(1)),
                (Monomial::new(0, 4, 0), int(2)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn example_zero_catalecticant() {
        let cat = Catalecticant::new(&phi0()).unwrap();
        let row4: Vec<String> = (0..6).map(|j| cat.t().get(3, j).to_string()).collect();
        assert_eq!(row4, ["1", "0", "0", "2", "0", "0"]);
        assert_eq!(cat.delta(), &q("-1"));
        assert_eq!(cat.q().get(0, 0), &q("-2"));
        assert_eq!(cat.q().get(0, 3), &q("1"));
        assert_eq!(cat.lambda(&Monomial::new(2, 0, 0)), &q("-2*x^2 + y^2"));
        assert_eq!(cat.lambda(&Monomial::new(0, 1, 1)), &q("x*z"));
        let yy = DividedElement::dual(Ring::Specialized, Monomial::new(0, 2, 0));
        assert_eq!(cat.q_apply(&yy).unwrap(), q("x^2 - y^2"));
        let xx = DividedElement::dual(Ring::Specialized, Monomial::new(2, 0, 0));
        assert_eq!(cat.qq_pair(&yy, &xx).unwrap(), q("1"));
        assert!(cat
            .q_apply(&DividedElement::zero(Ring::Specialized, 2))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn q_apply_degree_error() {
        let cat = Catalecticant::new(&phi0()).unwrap();
        let bad = DividedElement::dual(Ring::Specialized, Monomial::new(0, 3, 0));
        assert!(matches!(cat.q_apply(&bad), Err(Error::Degree(_))));
        assert!(matches!(cat.qq_pair(&bad, &bad), Err(Error::Degree(_))));
    }

    #[test]
    fn generic_n2() {
        let phi = InverseSystem::generic(2).unwrap();
        let cat = Catalecticant::new(&phi).unwrap();
        // entry (x, y) is t indexed by the product xy
        assert_eq!(
            cat.t().get(0, 1),
            &Polynomial::tvar(TVar(Monomial::new(1, 1, 0)))
        );
        assert!(cat.t().is_symmetric());
        assert!(cat.q().is_symmetric());
        assert_eq!(cat.delta().bidegree(), Some(BiDegree::new(0, 3)));
        for (_, _, e) in cat.q().entries() {
            if !e.is_zero() {
                assert_eq!(e.bidegree(), Some(BiDegree::new(0, 2)));
            }
        }
        for l in cat.lambdas().values() {
            assert_eq!(l.bidegree(), Some(BiDegree::new(1, 2)));
        }
        let tq = cat.t().mul(cat.q()).unwrap();
        let expected =
            PolyMatrix::identity(Ring::Generic, cat.t().row_labels().to_vec()).scale(cat.delta());
        assert!(tq.same_entries(&expected));
    }
}
