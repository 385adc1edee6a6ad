//! Monomial bases, the divided-power module `D_N(U*)` with its contraction
//! action, and the inverse systems `Φ` and `Φ̃`.
//!
//! Only the module action of `Sym(U)` on `D(U*)` is implemented; on dual
//! monomials it is `x_i(m*) = (m / x_i)*` when `x_i | m` and `0` otherwise.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{parse_rational, Monomial, Polynomial, Ring, TVar};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Vars {
    Xyz,
    Yz,
}

/// The monomials of one degree in the chosen variables, in basis order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialBasis {
    vars: Vars,
    degree: u32,
    elements: Vec<Monomial>,
}

impl MonomialBasis {
    pub fn vars(&self) -> Vars {
        self.vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Monomial> {
        self.elements.iter()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.elements.binary_search(m).ok()
    }
}

impl<'a> IntoIterator for &'a MonomialBasis {
    type Item = &'a Monomial;
    type IntoIter = std::slice::Iter<'a, Monomial>;
    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

pub fn monomials(vars: Vars, degree: u32) -> MonomialBasis {
    let d = degree as u16;
    let mut elements = Vec::new();
    match vars {
        Vars::Xyz => {
            for a in (0..=d).rev() {
                for b in (0..=d - a).rev() {
                    elements.push(Monomial::new(a, b, d - a - b));
                }
            }
        }
        Vars::Yz => {
            for b in (0..=d).rev() {
                elements.push(Monomial::new(0, b, d - b));
            }
        }
    }
    MonomialBasis {
        vars,
        degree,
        elements,
    }
}

/// An element `Σ c_m m*` of `D_N(U*)`. Scalars are polynomials so the same
/// type serves generic (`t`-valued) and specialized (rational) coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct DividedElement {
    ring: Ring,
    degree: u32,
    coeffs: BTreeMap<Monomial, Polynomial>,
}

impl DividedElement {
    pub fn zero(ring: Ring, degree: u32) -> Self {
        DividedElement {
            ring,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The dual basis element `m*`.
    pub fn dual(ring: Ring, m: Monomial) -> Self {
        let mut e = Self::zero(ring, m.degree());
        e.coeffs.insert(m, Polynomial::one(ring));
        e
    }

    pub fn from_coeffs<I>(ring: Ring, degree: u32, coeffs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Polynomial)>,
    {
        let mut e = Self::zero(ring, degree);
        for (m, c) in coeffs {
            e.add_term(m, &c)?;
        }
        Ok(e)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Polynomial {
        self.coeffs
            .get(m)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(self.ring))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Polynomial)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: &Polynomial) -> Result<()> {
        if m.degree() != self.degree {
            return Err(Error::Degree(format!(
                "monomial {m} does not have degree {}",
                self.degree
            )));
        }
        if c.ring() != self.ring {
            return Err(Error::input("ring mismatch in divided-power coefficient"));
        }
        let sum = match self.coeffs.get(&m) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.coeffs.remove(&m);
        } else {
            self.coeffs.insert(m, sum);
        }
        Ok(())
    }

    pub fn add(&self, other: &DividedElement) -> Result<DividedElement> {
        if other.degree != self.degree {
            return Err(Error::Degree(format!(
                "cannot add divided elements of degrees {} and {}",
                self.degree, other.degree
            )));
        }
        let mut out = self.clone();
        for (m, c) in &other.coeffs {
            out.add_term(*m, c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Polynomial) -> DividedElement {
        let mut out = Self::zero(self.ring, self.degree);
        for (m, v) in &self.coeffs {
            let p = v * c;
            if !p.is_zero() {
                out.coeffs.insert(*m, p);
            }
        }
        out
    }

    /// The scalar of a degree-zero element.
    pub fn scalar(&self) -> Polynomial {
        self.coefficient(&Monomial::ONE)
    }

    /// Substitutes values for the `t` variables in every coefficient.
    pub fn specialize(&self, assignment: &BTreeMap<TVar, BigRational>) -> DividedElement {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(m, c)| (*m, c.specialize(assignment)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        DividedElement {
            ring: Ring::Specialized,
            degree: self.degree,
            coeffs,
        }
    }
}

impl fmt::Display for DividedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(m, c)| {
                if c.as_constant()
                    .is_some_and(|v| v == BigRational::from_integer(1.into()))
                {
                    format!("({m})*")
                } else {
                    format!("[{c}]*({m})*")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for DividedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The contraction `mu(nu)`: a homogeneous form of degree `k` acting on an
/// element of degree `N` gives an element of degree `N - k`.
///
/// `mu` may carry `t`-valued coefficients; they multiply through.
pub fn contract(mu: &Polynomial, nu: &DividedElement) -> Result<DividedElement> {
    if mu.ring() != nu.ring {
        return Err(Error::input("ring mismatch in contraction"));
    }
    if mu.is_zero() {
        return Ok(DividedElement::zero(nu.ring, nu.degree));
    }
    let k = mu
        .xyz_degree()
        .ok_or_else(|| Error::input(format!("contraction by non-homogeneous form {mu}")))?;
    if k > nu.degree {
        return Err(Error::Degree(format!(
            "cannot contract a degree-{k} form into degree {}",
            nu.degree
        )));
    }
    let mut out = DividedElement::zero(nu.ring, nu.degree - k);
    for (m, scalar) in mu.xyz_parts() {
        for (key, value) in &nu.coeffs {
            if let Some(q) = m.quotient_of(key) {
                out.add_term(q, &(&scalar * value))?;
            }
        }
    }
    Ok(out)
}

/// `mu(nu)` for forms of equal degree, as a scalar.
pub fn pair(mu: &Polynomial, nu: &DividedElement) -> Result<Polynomial> {
    if !mu.is_zero() && mu.xyz_degree() != Some(nu.degree) {
        return Err(Error::Degree(format!(
            "pairing needs equal degrees, got {mu} against degree {}",
            nu.degree
        )));
    }
    Ok(contract(mu, nu)?.scalar())
}

/// A Macaulay inverse system `Φ` of degree `2n - 2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InverseSystem {
    n: u32,
    phi: DividedElement,
}

impl InverseSystem {
    /// Specialized `Φ = Σ α_m m*` from a coefficient list; unlisted monomials are zero.
    pub fn from_coefficients(n: u32, coefficients: &[(Monomial, BigRational)]) -> Result<Self> {
        check_n(n)?;
        let degree = 2 * n - 2;
        let mut seen = BTreeMap::new();
        let mut phi = DividedElement::zero(Ring::Specialized, degree);
        for (m, c) in coefficients {
            if m.degree() != degree {
                return Err(Error::input(format!(
                    "monomial {m} has degree {}, expected {degree}",
                    m.degree()
                )));
            }
            if seen.insert(*m, ()).is_some() {
                return Err(Error::input(format!("duplicate coefficient for {m}")));
            }
            phi.add_term(*m, &Polynomial::constant(Ring::Specialized, c.clone())?)?;
        }
        Ok(InverseSystem { n, phi })
    }

    /// The generic inverse system `Σ t_m m*` over all monomials of degree `2n - 2`.
    pub fn generic(n: u32) -> Result<Self> {
        check_n(n)?;
        let degree = 2 * n - 2;
        let mut phi = DividedElement::zero(Ring::Generic, degree);
        for m in &monomials(Vars::Xyz, degree) {
            phi.add_term(*m, &Polynomial::tvar(TVar(*m)))?;
        }
        Ok(InverseSystem { n, phi })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn ring(&self) -> Ring {
        self.phi.ring
    }

    pub fn phi(&self) -> &DividedElement {
        &self.phi
    }

    /// The coefficient of `m*` in `Φ`: `t_m` in generic mode, `α_m` otherwise.
    /// Zero for monomials of the wrong degree.
    pub fn coefficient(&self, m: &Monomial) -> Polynomial {
        self.phi.coefficient(m)
    }

    /// `Φ̃ = Σ c_m (x m)*`, the lift with `x(Φ̃) = Φ` killed by every pure `y, z` form.
    pub fn phi_tilde(&self) -> DividedElement {
        let mut out = DividedElement::zero(self.ring(), self.phi.degree + 1);
        for (m, c) in &self.phi.coeffs {
            out.coeffs.insert(m.mul(&Monomial::X), c.clone());
        }
        out
    }

    pub fn specialize(&self, assignment: &BTreeMap<TVar, BigRational>) -> InverseSystem {
        InverseSystem {
            n: self.n,
            phi: self.phi.specialize(assignment),
        }
    }

    /// Nonzero coefficients in basis order.
    pub fn coefficients(&self) -> Vec<(Monomial, Polynomial)> {
        self.phi
            .coeffs
            .iter()
            .map(|(m, c)| (*m, c.clone()))
            .collect()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: InverseSystemFile = serde_json::from_str(text)?;
        file.into_inverse_system()
    }

    pub fn to_json_file(&self) -> Result<InverseSystemFile> {
        if self.ring() != Ring::Specialized {
            return Err(Error::input(
                "only specialized inverse systems have a file form",
            ));
        }
        let coefficients = self
            .phi
            .coeffs
            .iter()
            .map(|(m, c)| CoefficientEntry {
                exponents: m.exponents(),
                value: c
                    .as_constant()
                    .expect("specialized coefficient")
                    .to_string(),
            })
            .collect();
        Ok(InverseSystemFile {
            n: self.n,
            coefficients,
        })
    }
}

fn check_n(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::input(format!("n must be at least 2, got {n}")));
    }
    Ok(())
}

/// On-disk form of a specialized inverse system.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InverseSystemFile {
    pub n: u32,
    pub coefficients: Vec<CoefficientEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoefficientEntry {
    pub exponents: [u16; 3],
    pub value: String,
}

impl InverseSystemFile {
    pub fn into_inverse_system(self) -> Result<InverseSystem> {
        let coefficients = self
            .coefficients
            .iter()
            .map(|e| {
                let [a, b, c] = e.exponents;
                Ok((Monomial::new(a, b, c), parse_rational(&e.value)?))
            })
            .collect::<Result<Vec<_>>>()?;
        InverseSystem::from_coefficients(self.n, &coefficients)
    }
}

fn factorial(k: u32) -> BigInt {
    (1..=k).map(BigInt::from).product()
}

pub fn multinomial(n: u32, parts: &[u32]) -> BigInt {
    assert_eq!(parts.iter().sum::<u32>(), n, "parts must sum to n");
    parts
        .iter()
        .fold(factorial(n), |acc, &p| acc / factorial(p))
}

/// The inverse system of `(x^n, y^n, z^n) : (x + y + z)^(n-1)`:
/// `Σ multinomial(n-1; a, b, c) (x^(n-1-a) y^(n-1-b) z^(n-1-c))*` over `a + b + c = n - 1`.
pub fn colon_inverse_system(n: u32) -> Result<InverseSystem> {
    check_n(n)?;
    let k = n - 1;
    let mut coefficients = Vec::new();
    for a in 0..=k {
        for b in 0..=k - a {
            let c = k - a - b;
            let m = Monomial::new((k - a) as u16, (k - b) as u16, (k - c) as u16);
            coefficients.push((m, BigRational::from_integer(multinomial(k, &[a, b, c]))));
        }
    }
    coefficients.retain(|(_, c)| !c.is_zero());
    InverseSystem::from_coefficients(n, &coefficients)
}

#[cfg(test)]
mod tests {
    use super::*;

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

    fn phi2() -> InverseSystem {
        InverseSystem::from_coefficients(
            3,
            &[
                (Monomial::new(2, 2, 0), int(1)),
                (Monomial::new(1, 1, 2), int(-1)),
                (Monomial::new(0, 0, 4), int(2)),
            ],
        )
        .unwrap()
    }

    fn names(b: &MonomialBasis) -> Vec<String> {
        b.iter().map(|m| m.to_string()).collect()
    }

    #[test]
    fn bases() {
        assert_eq!(names(&monomials(Vars::Xyz, 1)), ["x", "y", "z"]);
        assert_eq!(
            names(&monomials(Vars::Yz, 3)),
            ["y^3", "y^2*z", "y*z^2", "z^3"]
        );
        assert_eq!(
            names(&monomials(Vars::Xyz, 2)),
            ["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"]
        );
        for d in 0..7 {
            assert_eq!(monomials(Vars::Xyz, d).len() as u32, (d + 2) * (d + 1) / 2);
            assert_eq!(monomials(Vars::Yz, d).len() as u32, d + 1);
            let b = monomials(Vars::Xyz, d);
            assert!(b.elements().windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn contraction_examples() {
        let yyz = DividedElement::dual(Ring::Specialized, Monomial::new(0, 2, 1));
        assert_eq!(
            contract(&q("y"), &yyz).unwrap(),
            DividedElement::dual(Ring::Specialized, Monomial::new(0, 1, 1))
        );
        let yy = DividedElement::dual(Ring::Specialized, Monomial::new(0, 2, 0));
        assert!(contract(&q("x"), &yy).unwrap().is_zero());
        assert_eq!(pair(&q("x^2*y^2"), phi0().phi()).unwrap(), q("1"));
        assert!(matches!(contract(&q("x^3"), &yy), Err(Error::Degree(_))));
    }

    #[test]
    fn phi_tilde_of_example_two() {
        let tilde = phi2().phi_tilde();
        let expected = DividedElement::from_coeffs(
            Ring::Specialized,
            5,
            [
                (Monomial::new(3, 2, 0), q("1")),
                (Monomial::new(2, 1, 2), q("-1")),
                (Monomial::new(1, 0, 4), q("2")),
            ],
        )
        .unwrap();
        assert_eq!(tilde, expected);
        assert_eq!(&contract(&q("x"), &tilde).unwrap(), phi2().phi());
        assert!(contract(&q("y^5"), &tilde).unwrap().is_zero());
    }

    #[test]
    fn build_phi_validation() {
        assert!(matches!(
            InverseSystem::from_coefficients(3, &[(Monomial::new(1, 1, 1), int(1))]),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            InverseSystem::from_coefficients(1, &[]),
            Err(Error::Input(_))
        ));
        assert!(InverseSystem::from_coefficients(3, &[])
            .unwrap()
            .phi()
            .is_zero());
        let dup = [
            (Monomial::new(2, 2, 0), int(1)),
            (Monomial::new(2, 2, 0), int(2)),
        ];
        assert!(InverseSystem::from_coefficients(3, &dup).is_err());
    }

    #[test]
    fn generic_phi_has_every_monomial() {
        let phi = InverseSystem::generic(2).unwrap();
        assert_eq!(phi.coefficients().len(), 6);
        for (m, c) in phi.coefficients() {
            assert_eq!(c, Polynomial::tvar(TVar(m)));
        }
    }

    #[test]
    fn colon_systems() {
        let n3 = colon_inverse_system(3).unwrap();
        let expected = InverseSystem::from_coefficients(
            3,
            &[
                (Monomial::new(0, 2, 2), int(1)),
                (Monomial::new(2, 0, 2), int(1)),
                (Monomial::new(2, 2, 0), int(1)),
                (Monomial::new(1, 1, 2), int(2)),
                (Monomial::new(1, 2, 1), int(2)),
                (Monomial::new(2, 1, 1), int(2)),
            ],
        )
        .unwrap();
        assert_eq!(n3, expected);
        let n2 = colon_inverse_system(2).unwrap();
        let expected = InverseSystem::from_coefficients(
            2,
            &[
                (Monomial::new(0, 1, 1), int(1)),
                (Monomial::new(1, 0, 1), int(1)),
                (Monomial::new(1, 1, 0), int(1)),
            ],
        )
        .unwrap();
        assert_eq!(n2, expected);
        assert_eq!(multinomial(2, &[1, 1, 0]), BigInt::from(2));
        assert!(colon_inverse_system(1).is_err());
    }

    #[test]
    fn json_input() {
        let text = r#"{"n": 3, "coefficients": [
            {"exponents":[2,2,0], "value":"1"},
            {"exponents":[1,1,2], "value":"-1"},
            {"exponents":[0,0,4], "value":"2"}]}"#;
        assert_eq!(InverseSystem::from_json(text).unwrap(), phi2());
        let dup = r#"{"n": 3, "coefficients": [
            {"exponents":[2,2,0], "value":"1"},
            {"exponents":[2,2,0], "value":"1/2"}]}"#;
        assert!(matches!(
            InverseSystem::from_json(dup),
            Err(Error::Input(_))
        ));
        let bad = r#"{"n": 3, "coefficients": [{"exponents":[2,2,0], "value":"one"}]}"#;
        assert!(matches!(
            InverseSystem::from_json(bad),
            Err(Error::Input(_))
        ));
        let file = phi2().to_json_file().unwrap();
        assert_eq!(file.into_inverse_system().unwrap(), phi2());
    }
}
