//! Exact sparse arithmetic in the bi-graded ring `Z[x, y, z, {t_m}]` and its
//! specializations `Q[x, y, z]`.
//!
//! `x`, `y`, `z` have bidegree `(1, 0)`; every coefficient variable `t_m` has
//! bidegree `(0, 1)`. A [`Polynomial`] carries a [`Ring`] tag: generic
//! polynomials may involve `t` variables and have integer coefficients,
//! specialized polynomials are free of `t` and have rational coefficients.

use std::cmp::Ordering;
use std::collections::hash_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap as HashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial `x^a y^b z^c`.
///
/// The total order places monomials in basis-listing order: lower degree
/// first, and within a degree graded-lex with `x > y > z` listed from the
/// largest, so degree two lists as `x^2, xy, xz, y^2, yz, z^2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Monomial {
    exps: [u16; 3],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0, 0, 0] };
    pub const X: Monomial = Monomial { exps: [1, 0, 0] };
    pub const Y: Monomial = Monomial { exps: [0, 1, 0] };
    pub const Z: Monomial = Monomial { exps: [0, 0, 1] };

    pub const fn new(a: u16, b: u16, c: u16) -> Self {
        Monomial { exps: [a, b, c] }
    }

    pub fn exponents(&self) -> [u16; 3] {
        self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: [
                self.exps[0] + other.exps[0],
                self.exps[1] + other.exps[1],
                self.exps[2] + other.exps[2],
            ],
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..3).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: [
                other.exps[0] - self.exps[0],
                other.exps[1] - self.exps[1],
                other.exps[2] - self.exps[2],
            ],
        })
    }

    pub fn involves_x(&self) -> bool {
        self.exps[0] > 0
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Monomial::ONE {
            return f.write_str("1");
        }
        let mut first = true;
        for (name, &e) in ["x", "y", "z"].iter().zip(self.exps.iter()) {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                f.write_str(name)?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The coefficient variable `t_m` attached to a monomial `m` of degree `2n - 2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TVar(pub Monomial);

impl TVar {
    pub fn monomial(&self) -> Monomial {
        self.0
    }
}

impl fmt::Display for TVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0.exps;
        write!(f, "t_{{{a}_{b}_{c}}}")
    }
}

impl fmt::Debug for TVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct BiDegree {
    pub d1: i64,
    pub d2: i64,
}

impl BiDegree {
    pub const fn new(d1: i64, d2: i64) -> Self {
        BiDegree { d1, d2 }
    }
}

impl Add for BiDegree {
    type Output = BiDegree;
    fn add(self, rhs: BiDegree) -> BiDegree {
        BiDegree::new(self.d1 + rhs.d1, self.d2 + rhs.d2)
    }
}

impl Sub for BiDegree {
    type Output = BiDegree;
    fn sub(self, rhs: BiDegree) -> BiDegree {
        BiDegree::new(self.d1 - rhs.d1, self.d2 - rhs.d2)
    }
}

impl Neg for BiDegree {
    type Output = BiDegree;
    fn neg(self) -> BiDegree {
        BiDegree::new(-self.d1, -self.d2)
    }
}

impl fmt::Display for BiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.d1, self.d2)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Homogeneity {
    Zero,
    Homogeneous(BiDegree),
    NotHomogeneous,
}

impl Homogeneity {
    pub fn bidegree(self) -> Option<BiDegree> {
        match self {
            Homogeneity::Homogeneous(d) => Some(d),
            _ => None,
        }
    }
}

/// Which ring a polynomial lives in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ring {
    /// `Z[x, y, z, {t_m}]`: integer coefficients, `t` variables allowed.
    Generic,
    /// `Q[x, y, z]`: rational coefficients, no `t` variables.
    Specialized,
}

impl Ring {
    /// Lowercase name, as used in JSON output.
    pub fn name(self) -> &'static str {
        match self {
            Ring::Generic => "generic",
            Ring::Specialized => "specialized",
        }
    }
}

/// One monomial of the bi-graded ring: an `xyz` part and a sorted multiset of `t` variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Term {
    xyz: Monomial,
    t: Vec<TVar>,
}

impl Term {
    pub fn new(xyz: Monomial, mut t: Vec<TVar>) -> Self {
        t.sort_unstable();
        Term { xyz, t }
    }

    pub fn xyz(&self) -> Monomial {
        self.xyz
    }

    pub fn tvars(&self) -> &[TVar] {
        &self.t
    }

    pub fn bidegree(&self) -> BiDegree {
        BiDegree::new(self.xyz.degree() as i64, self.t.len() as i64)
    }

    fn mul(&self, other: &Term) -> Term {
        let mut t = Vec::with_capacity(self.t.len() + other.t.len());
        let (mut i, mut j) = (0, 0);
        while i < self.t.len() && j < other.t.len() {
            if self.t[i] <= other.t[j] {
                t.push(self.t[i]);
                i += 1;
            } else {
                t.push(other.t[j]);
                j += 1;
            }
        }
        t.extend_from_slice(&self.t[i..]);
        t.extend_from_slice(&other.t[j..]);
        Term {
            xyz: self.xyz.mul(&other.xyz),
            t,
        }
    }
}

// Printing order: higher xyz-degree first, then basis order on the xyz part,
// then higher t-degree first, then lexicographic on the sorted t multiset.
impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .xyz
            .degree()
            .cmp(&self.xyz.degree())
            .then_with(|| self.xyz.cmp(&other.xyz))
            .then_with(|| other.t.len().cmp(&self.t.len()))
            .then_with(|| self.t.cmp(&other.t))
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in canonical form: terms sorted, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Term, BigRational)>,
}

impl Polynomial {
    pub fn zero(ring: Ring) -> Self {
        Polynomial {
            ring,
            terms: Vec::new(),
        }
    }

    pub fn one(ring: Ring) -> Self {
        Self::from_int(ring, 1)
    }

    pub fn from_int(ring: Ring, c: i64) -> Self {
        Self::monomial_term(
            ring,
            BigRational::from_integer(BigInt::from(c)),
            Monomial::ONE,
        )
    }

    /// A constant. Generic polynomials only accept integers.
    pub fn constant(ring: Ring, c: BigRational) -> Result<Self> {
        if ring == Ring::Generic && !c.is_integer() {
            return Err(Error::input(format!(
                "generic polynomials have integer coefficients, got {c}"
            )));
        }
        Ok(Self::monomial_term(ring, c, Monomial::ONE))
    }

    pub fn monomial(ring: Ring, m: Monomial) -> Self {
        Self::monomial_term(ring, BigRational::one(), m)
    }

    fn monomial_term(ring: Ring, c: BigRational, m: Monomial) -> Self {
        let mut p = Polynomial::zero(ring);
        if !c.is_zero() {
            p.terms.push((Term::new(m, Vec::new()), c));
        }
        p
    }

    pub fn x(ring: Ring) -> Self {
        Self::monomial(ring, Monomial::X)
    }

    pub fn y(ring: Ring) -> Self {
        Self::monomial(ring, Monomial::Y)
    }

    pub fn z(ring: Ring) -> Self {
        Self::monomial(ring, Monomial::Z)
    }

    /// The generic coefficient variable `t_m`.
    pub fn tvar(t: TVar) -> Self {
        Polynomial {
            ring: Ring::Generic,
            terms: vec![(Term::new(Monomial::ONE, vec![t]), BigRational::one())],
        }
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms<I>(ring: Ring, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Term, BigRational)>,
    {
        let mut acc: HashMap<Term, BigRational> = HashMap::default();
        for (term, c) in terms {
            if ring == Ring::Specialized && !term.t.is_empty() {
                return Err(Error::input(
                    "specialized polynomials cannot contain t variables",
                ));
            }
            if ring == Ring::Generic && !c.is_integer() {
                return Err(Error::input(format!(
                    "generic polynomials have integer coefficients, got {c}"
                )));
            }
            accumulate(&mut acc, term, c);
        }
        Ok(Self::from_map(ring, acc))
    }

    fn from_map(ring: Ring, acc: HashMap<Term, BigRational>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Polynomial { ring, terms }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Term, &BigRational)> {
        self.terms.iter().map(|(t, c)| (t, c))
    }

    /// The value of a constant polynomial (zero included).
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [(t, c)] if t.xyz == Monomial::ONE && t.t.is_empty() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    /// Reinterprets the polynomial in another ring. Fails if it does not belong there.
    pub fn into_ring(self, ring: Ring) -> Result<Self> {
        if ring == self.ring {
            return Ok(self);
        }
        Polynomial::from_terms(ring, self.terms)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::input(format!(
                "ring mismatch: {:?} vs {:?}",
                self.ring, other.ring
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.add_unchecked(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.add_unchecked(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    // Merge of two sorted term lists.
    fn add_unchecked(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => x.0.cmp(&y.0),
            };
            match ord {
                Ordering::Less => terms.push(a.next().unwrap().clone()),
                Ordering::Greater => {
                    let (t, c) = b.next().unwrap();
                    terms.push((t.clone(), if negate { -c } else { c.clone() }));
                }
                Ordering::Equal => {
                    let (t, c1) = a.next().unwrap();
                    let (_, c2) = b.next().unwrap();
                    let c = if negate { c1 - c2 } else { c1 + c2 };
                    if !c.is_zero() {
                        terms.push((t.clone(), c));
                    }
                }
            }
        }
        Polynomial {
            ring: self.ring,
            terms,
        }
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.ring);
        }
        Polynomial::sum_of_products(self.ring, [(self, other)])
    }

    /// `Σ a_k b_k` accumulated in one pass; all operands must lie in `ring`.
    pub fn sum_of_products<'a, I>(ring: Ring, pairs: I) -> Polynomial
    where
        I: IntoIterator<Item = (&'a Polynomial, &'a Polynomial)>,
    {
        let pairs: Vec<_> = pairs
            .into_iter()
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .collect();
        debug_assert!(pairs.iter().all(|(a, b)| a.ring == ring && b.ring == ring));
        let integral = pairs
            .iter()
            .all(|(a, b)| a.is_integral() && b.is_integral());
        if integral {
            // numerators only: no gcd work in the inner loop
            let mut acc: HashMap<Term, BigInt> = HashMap::default();
            for (a, b) in pairs {
                for (t1, c1) in &a.terms {
                    for (t2, c2) in &b.terms {
                        let c = c1.numer() * c2.numer();
                        match acc.entry(t1.mul(t2)) {
                            Entry::Occupied(mut e) => *e.get_mut() += c,
                            Entry::Vacant(e) => {
                                e.insert(c);
                            }
                        }
                    }
                }
            }
            let acc = acc
                .into_iter()
                .map(|(t, c)| (t, BigRational::from_integer(c)))
                .collect();
            return Polynomial::from_map(ring, acc);
        }
        let mut acc: HashMap<Term, BigRational> = HashMap::default();
        for (a, b) in pairs {
            for (t1, c1) in &a.terms {
                for (t2, c2) in &b.terms {
                    accumulate(&mut acc, t1.mul(t2), c1 * c2);
                }
            }
        }
        Polynomial::from_map(ring, acc)
    }

    fn is_integral(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring);
        }
        Polynomial {
            ring: self.ring,
            terms: self.terms.iter().map(|(t, d)| (t.clone(), d * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Polynomial {
        self.scale(&BigRational::from_integer(BigInt::from(c)))
    }

    /// Multiplies by an `xyz` monomial. Term order is preserved.
    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(t, c)| {
                    (
                        Term {
                            xyz: t.xyz.mul(m),
                            t: t.t.clone(),
                        },
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.ring);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut it = self.terms.iter().map(|(t, _)| t.bidegree());
        let Some(first) = it.next() else {
            return Homogeneity::Zero;
        };
        if it.all(|d| d == first) {
            Homogeneity::Homogeneous(first)
        } else {
            Homogeneity::NotHomogeneous
        }
    }

    /// The bidegree, or `None` when zero or not bihomogeneous.
    pub fn bidegree(&self) -> Option<BiDegree> {
        self.homogeneity().bidegree()
    }

    /// The common `xyz`-degree of all terms, if there is one.
    pub fn xyz_degree(&self) -> Option<u32> {
        let mut it = self.terms.iter().map(|(t, _)| t.xyz.degree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Groups terms by their `xyz` monomial; the values are polynomials in the `t` variables.
    pub fn xyz_parts(&self) -> BTreeMap<Monomial, Polynomial> {
        let mut parts: BTreeMap<Monomial, Vec<(Term, BigRational)>> = BTreeMap::new();
        for (t, c) in &self.terms {
            parts.entry(t.xyz).or_default().push((
                Term {
                    xyz: Monomial::ONE,
                    t: t.t.clone(),
                },
                c.clone(),
            ));
        }
        parts
            .into_iter()
            .map(|(m, mut terms)| {
                terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
                (
                    m,
                    Polynomial {
                        ring: self.ring,
                        terms,
                    },
                )
            })
            .collect()
    }

    /// Coefficient of an `xyz` monomial in a `t`-free polynomial.
    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms
            .iter()
            .find(|(t, _)| t.xyz == *m && t.t.is_empty())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn tvars(&self) -> Vec<TVar> {
        let mut vars: Vec<TVar> = self
            .terms
            .iter()
            .flat_map(|(t, _)| t.t.iter().copied())
            .collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    /// Substitutes rational values for the `t` variables, fixing `x, y, z`.
    /// Variables missing from `assignment` are sent to zero.
    pub fn specialize(&self, assignment: &BTreeMap<TVar, BigRational>) -> Polynomial {
        let mut acc: HashMap<Term, BigRational> = HashMap::default();
        'terms: for (t, c) in &self.terms {
            let mut value = c.clone();
            for v in &t.t {
                match assignment.get(v) {
                    Some(a) if !a.is_zero() => value *= a,
                    _ => continue 'terms,
                }
            }
            accumulate(&mut acc, Term::new(t.xyz, Vec::new()), value);
        }
        Polynomial::from_map(Ring::Specialized, acc)
    }

    /// Parses the text form produced by `Display`.
    pub fn parse(s: &str, ring: Ring) -> Result<Polynomial> {
        parse::parse_polynomial(s, ring)
    }
}

fn accumulate(acc: &mut HashMap<Term, BigRational>, term: Term, c: BigRational) {
    match acc.entry(term) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
        }
        Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (term, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let has_vars = term.xyz != Monomial::ONE || !term.t.is_empty();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || !has_vars {
                factors.push(abs.to_string());
            }
            if term.xyz != Monomial::ONE {
                factors.push(term.xyz.to_string());
            }
            let mut k = 0;
            while k < term.t.len() {
                let v = term.t[k];
                let run = term.t[k..].iter().take_while(|&&w| w == v).count();
                if run == 1 {
                    factors.push(v.to_string());
                } else {
                    factors.push(format!("{v}^{run}"));
                }
                k += run;
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        *self = &*self + rhs;
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring,
            terms: self.terms.iter().map(|(t, c)| (t.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Parses `"p"` or `"p/q"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::input(format!("not an integer or p/q rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::input(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

mod parse {
    use super::*;

    struct Cursor<'a> {
        src: &'a [u8],
        pos: usize,
        text: &'a str,
    }

    impl<'a> Cursor<'a> {
        fn skip_ws(&mut self) {
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            }
        }

        fn peek(&mut self) -> Option<u8> {
            self.skip_ws();
            self.src.get(self.pos).copied()
        }

        fn eat(&mut self, b: u8) -> bool {
            if self.peek() == Some(b) {
                self.pos += 1;
                true
            } else {
                false
            }
        }

        fn expect(&mut self, b: u8) -> Result<()> {
            if self.eat(b) {
                Ok(())
            } else {
                Err(self.error(&format!("expected '{}'", b as char)))
            }
        }

        fn number(&mut self) -> Result<BigInt> {
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.error("expected a number"));
            }
            Ok(self.text[start..self.pos].parse().expect("digits"))
        }

        fn small(&mut self) -> Result<u16> {
            let n = self.number()?;
            u16::try_from(n).map_err(|_| self.error("exponent out of range"))
        }

        fn error(&self, msg: &str) -> Error {
            Error::input(format!(
                "cannot parse polynomial {:?} at offset {}: {msg}",
                self.text, self.pos
            ))
        }
    }

    pub(super) fn parse_polynomial(text: &str, ring: Ring) -> Result<Polynomial> {
        let mut cur = Cursor {
            src: text.as_bytes(),
            pos: 0,
            text,
        };
        let mut terms = Vec::new();
        let mut negative = if cur.eat(b'-') {
            true
        } else {
            cur.eat(b'+');
            false
        };
        loop {
            let (term, mut c) = parse_term(&mut cur)?;
            if negative {
                c = -c;
            }
            terms.push((term, c));
            match cur.peek() {
                None => break,
                Some(b'+') => {
                    cur.pos += 1;
                    negative = false;
                }
                Some(b'-') => {
                    cur.pos += 1;
                    negative = true;
                }
                Some(_) => return Err(cur.error("expected '+' or '-'")),
            }
        }
        Polynomial::from_terms(ring, terms)
    }

    fn parse_term(cur: &mut Cursor<'_>) -> Result<(Term, BigRational)> {
        let mut coeff = BigRational::one();
        let mut xyz = Monomial::ONE;
        let mut tv = Vec::new();
        loop {
            match cur.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let p = cur.number()?;
                    let value = if cur.eat(b'/') {
                        let q = cur.number()?;
                        if q.is_zero() {
                            return Err(cur.error("zero denominator"));
                        }
                        BigRational::new(p, q)
                    } else {
                        BigRational::from_integer(p)
                    };
                    coeff *= value;
                }
                Some(b @ (b'x' | b'y' | b'z')) => {
                    cur.pos += 1;
                    let e = if cur.eat(b'^') { cur.small()? } else { 1 };
                    let mut exps = [0u16; 3];
                    exps[(b - b'x') as usize] = e;
                    xyz = xyz.mul(&Monomial { exps });
                }
                Some(b't') => {
                    cur.pos += 1;
                    cur.expect(b'_')?;
                    cur.expect(b'{')?;
                    let a = cur.small()?;
                    cur.expect(b'_')?;
                    let b = cur.small()?;
                    cur.expect(b'_')?;
                    let c = cur.small()?;
                    cur.expect(b'}')?;
                    let e = if cur.eat(b'^') { cur.small()? } else { 1 };
                    for _ in 0..e {
                        tv.push(TVar(Monomial::new(a, b, c)));
                    }
                }
                _ => return Err(cur.error("expected a factor")),
            }
            if !cur.eat(b'*') {
                break;
            }
        }
        Ok((Term::new(xyz, tv), coeff))
    }
}
