//! The complex `0 -> B3 -> B2 -> B1 -> B0` resolving `S / ann(Φ)`.
//!
//! `B2 = Sym_{n-1}(y, z) ⊕ D_n(y, z)` and `B1 = B2* = D_{n-1}(y, z) ⊕ Sym_n(y, z)`.
//! Matrices put the `B1` basis on rows and the `B2` basis on columns, in the
//! orders `(y^2)*, (yz)*, (z^2)*, y^3, …` and `y^2, yz, z^2, (y^3)*, …` (for
//! `n = 3`). Position `k` of the `B1` basis is dual to position `k` of the
//! `B2` basis.
//!
//! `b2` is built twice: [`build_b2`] uses the closed-form entries in terms of
//! `T`, `Q` and `δ`; [`b2_pairing_oracle`] evaluates the alternating pairing
//! `𝔟` on `B2` through the bilinear form `𝔔`. The two must agree.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_rational::BigRational;
use serde::Serialize;

use crate::catalecticant::Catalecticant;
use crate::divpow::{contract, monomials, pair, DividedElement, InverseSystem, Vars};
use crate::error::{Error, Result};
use crate::matrix::{Label, MatrixJson, PolyMatrix};
use crate::poly::{BiDegree, Monomial, Polynomial, Ring, TVar};

/// Largest `n` for which the symbolic complex is built.
pub const MAX_GENERIC_N: u32 = 3;

/// `binom(n + 1, 2)`, the rank of `Sym_{n-1}` in three variables.
pub fn top(n: u32) -> i64 {
    (n as i64 + 1) * n as i64 / 2
}

pub fn b1_basis(n: u32) -> Vec<Label> {
    let dual = monomials(Vars::Yz, n - 1)
        .iter()
        .map(|m| Label::Dual(*m))
        .collect::<Vec<_>>();
    let sym = monomials(Vars::Yz, n)
        .iter()
        .map(|m| Label::Sym(*m))
        .collect::<Vec<_>>();
    [dual, sym].concat()
}

pub fn b2_basis(n: u32) -> Vec<Label> {
    let sym = monomials(Vars::Yz, n - 1)
        .iter()
        .map(|m| Label::Sym(*m))
        .collect::<Vec<_>>();
    let dual = monomials(Vars::Yz, n)
        .iter()
        .map(|m| Label::Dual(*m))
        .collect::<Vec<_>>();
    [sym, dual].concat()
}

/// Shifts `(a, b)` of the summands `R(a, b)` of one free module, per basis label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Twist {
    pub labels: Vec<Label>,
    pub shifts: Vec<BiDegree>,
}

impl Twist {
    pub fn rank(&self) -> usize {
        self.labels.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Twists {
    pub b0: Twist,
    pub b1: Twist,
    pub b2: Twist,
    pub b3: Twist,
}

/// The bi-graded twists of `B0 … B3`, with `C = binom(n + 1, 2)`:
/// `B3 = R(-2n-1, -3C+1)`, `B2 = R(-n-1, -2C)^n ⊕ R(-n-1, -2C+1)^(n+1)`,
/// `B1 = R(-n, -C+1)^n ⊕ R(-n, -C)^(n+1)`, `B0 = R`.
pub fn twists(n: u32) -> Twists {
    let c = top(n);
    let n = n as i64;
    let shift_for = |labels: &[Label], sym: BiDegree, dual: BiDegree| -> Vec<BiDegree> {
        labels
            .iter()
            .map(|l| match l {
                Label::Sym(_) => sym,
                _ => dual,
            })
            .collect()
    };
    let l1 = b1_basis(n as u32);
    let l2 = b2_basis(n as u32);
    Twists {
        b0: Twist {
            labels: vec![Label::One],
            shifts: vec![BiDegree::new(0, 0)],
        },
        b1: Twist {
            shifts: shift_for(&l1, BiDegree::new(-n, -c), BiDegree::new(-n, -c + 1)),
            labels: l1,
        },
        b2: Twist {
            shifts: shift_for(
                &l2,
                BiDegree::new(-n - 1, -2 * c),
                BiDegree::new(-n - 1, -2 * c + 1),
            ),
            labels: l2,
        },
        b3: Twist {
            labels: vec![Label::One],
            shifts: vec![BiDegree::new(-2 * n - 1, -3 * c + 1)],
        },
    }
}

/// Bidegree forced on the entry of a map `R(source) -> R(target)`.
pub fn entry_bidegree(target: BiDegree, source: BiDegree) -> BiDegree {
    target - source
}

// Shorthand for the bits of Φ and Q the explicit formulas index into.
struct Ctx<'a> {
    cat: &'a Catalecticant,
    phi: &'a InverseSystem,
    ring: Ring,
    x: Polynomial,
    y: Polynomial,
    z: Polynomial,
}

impl<'a> Ctx<'a> {
    fn new(cat: &'a Catalecticant, phi: &'a InverseSystem) -> Self {
        let ring = cat.ring();
        Ctx {
            cat,
            phi,
            ring,
            x: Polynomial::x(ring),
            y: Polynomial::y(ring),
            z: Polynomial::z(ring),
        }
    }

    /// `t_{a b …}`: the Φ-coefficient of the product monomial.
    fn t(&self, factors: &[Monomial]) -> Polynomial {
        let m = factors.iter().fold(Monomial::ONE, |acc, f| acc.mul(f));
        self.phi.coefficient(&m)
    }

    fn q(&self, m1: &Monomial, m2: &Monomial) -> &Polynomial {
        self.cat.q_entry(m1, m2)
    }

    fn zero(&self) -> Polynomial {
        Polynomial::zero(self.ring)
    }
}

fn check_inputs(cat: &Catalecticant, phi: &InverseSystem) -> Result<()> {
    if cat.n() != phi.n() || cat.ring() != phi.ring() {
        return Err(Error::input(
            "catalecticant and inverse system do not match",
        ));
    }
    Ok(())
}

/// `b1`, a `1 x (2n+1)` row over the `B1` basis:
/// `b1(m*) = x λ_m` and `b1(m) = δ m - x Σ_{m1 ∈ (x,y,z)_{n-2}} λ_{x m1} t_{m1 m}`.
pub fn build_b1(cat: &Catalecticant, phi: &InverseSystem) -> Result<PolyMatrix> {
    check_inputs(cat, phi)?;
    let ctx = Ctx::new(cat, phi);
    let n = cat.n();
    let lower = monomials(Vars::Xyz, n - 2);
    let cols = b1_basis(n);
    let entries: Vec<Polynomial> = cols
        .iter()
        .map(|label| match label {
            Label::Dual(m) => &ctx.x * cat.lambda(m),
            Label::Sym(m) => {
                let mut sum = ctx.zero();
                for m1 in &lower {
                    let t = ctx.t(&[*m1, *m]);
                    if !t.is_zero() {
                        sum += &(cat.lambda(&m1.mul(&Monomial::X)) * &t);
                    }
                }
                &cat.delta().mul_monomial(m) - &(&ctx.x * &sum)
            }
            Label::One => unreachable!("B1 has no unit label"),
        })
        .collect();
    Ok(PolyMatrix::from_fn(
        ctx.ring,
        vec![Label::One],
        cols,
        |_, j| entries[j].clone(),
    ))
}

/// `b2` from the closed-form column formulas in `T`, `Q` and `δ`.
pub fn build_b2(cat: &Catalecticant, phi: &InverseSystem) -> Result<PolyMatrix> {
    check_inputs(cat, phi)?;
    let ctx = Ctx::new(cat, phi);
    let n = cat.n();
    let (x, y, z) = (Monomial::X, Monomial::Y, Monomial::Z);
    let lower = monomials(Vars::Xyz, n - 2);
    let yz_low = monomials(Vars::Yz, n - 1);
    let yz_high = monomials(Vars::Yz, n);
    let delta = cat.delta();
    let mut b2 = PolyMatrix::zeros(ctx.ring, b1_basis(n), b2_basis(n));
    let row = |b2: &PolyMatrix, l: Label| b2.row_of(&l).expect("B1 label");

    for m2 in &yz_low {
        let col = b2.col_of(&Label::Sym(*m2)).expect("B2 label");
        for m1 in &yz_low {
            let mut sum = ctx.zero();
            for big1 in &lower {
                for big2 in &lower {
                    let q = ctx.q(&x.mul(big1), &x.mul(big2));
                    if q.is_zero() {
                        continue;
                    }
                    let det = &(&ctx.t(&[*m1, *big1, y]) * &ctx.t(&[*m2, *big2, z]))
                        - &(&ctx.t(&[*m1, *big1, z]) * &ctx.t(&[*m2, *big2, y]));
                    if !det.is_zero() {
                        sum += &(q * &det);
                    }
                }
            }
            let r = row(&b2, Label::Dual(*m1));
            b2.add_to(r, col, &(&ctx.x * &sum));
        }
        for m1 in &yz_high {
            let mut sum = ctx.zero();
            for big in &lower {
                if let Some(a) = y.quotient_of(m1) {
                    sum += &(ctx.q(&a, &x.mul(big)) * &ctx.t(&[*big, *m2, z]));
                }
                if let Some(a) = z.quotient_of(m1) {
                    sum = &sum - &(ctx.q(&a, &x.mul(big)) * &ctx.t(&[*big, *m2, y]));
                }
            }
            let r = row(&b2, Label::Sym(*m1));
            b2.add_to(r, col, &(&ctx.x * &sum));
        }
        let r = row(&b2, Label::Sym(z.mul(m2)));
        b2.add_to(r, col, &(&ctx.y * delta));
        let r = row(&b2, Label::Sym(y.mul(m2)));
        b2.add_to(r, col, &-(&ctx.z * delta));
    }

    for m2 in &yz_high {
        let col = b2.col_of(&Label::Dual(*m2)).expect("B2 label");
        // (divisor, the other variable, sign, the other variable's polynomial)
        let branches = [(z, y, 1i64, &ctx.y), (y, z, -1i64, &ctx.z)];
        for (div, other, sign, other_poly) in branches {
            let Some(a) = div.quotient_of(m2) else {
                continue;
            };
            for big in &yz_low {
                let mut sum = ctx.zero();
                for m in &lower {
                    let t = ctx.t(&[other, *big, *m]);
                    if !t.is_zero() {
                        sum += &(&t * ctx.q(&x.mul(m), &a));
                    }
                }
                let r = row(&b2, Label::Dual(*big));
                b2.add_to(r, col, &(&ctx.x * &sum).scale_int(sign));
                let r = row(&b2, Label::Sym(other.mul(big)));
                b2.add_to(r, col, &(&ctx.x * ctx.q(big, &a)).scale_int(sign));
            }
            let r = row(&b2, Label::Dual(a));
            b2.add_to(r, col, &(other_poly * delta).scale_int(-sign));
        }
    }
    Ok(b2)
}

/// `b3`, the column over the `B2` basis obtained by reindexing `b1`:
/// the entry at `m` is `b1(m*)` and the entry at `m*` is `b1(m)`.
pub fn build_b3(b1: &PolyMatrix) -> Result<PolyMatrix> {
    if b1.nrows() != 1 {
        return Err(Error::Shape(format!(
            "b1 must be a single row, got {} rows",
            b1.nrows()
        )));
    }
    let rows: Vec<Label> = b1
        .col_labels()
        .iter()
        .map(|l| match l {
            Label::Dual(m) => Ok(Label::Sym(*m)),
            Label::Sym(m) => Ok(Label::Dual(*m)),
            Label::One => Err(Error::input("b1 columns must be B1 basis labels")),
        })
        .collect::<Result<_>>()?;
    Ok(PolyMatrix::from_fn(
        b1.ring(),
        rows,
        vec![Label::One],
        |i, _| b1.get(0, i).clone(),
    ))
}

/// The alternating pairing `𝔟` on `B2`, evaluated through `β1, β2, β3` and `𝔔`.
pub struct Pairing<'a> {
    ctx: Ctx<'a>,
    // (zμ)(Φ̃) and (yμ)(Φ̃) for μ in Sym_{n-1}(y, z)
    z_tilde: BTreeMap<Monomial, DividedElement>,
    y_tilde: BTreeMap<Monomial, DividedElement>,
    // z(ν) and y(ν) for ν = m* in D_n(y, z)
    z_dual: BTreeMap<Monomial, DividedElement>,
    y_dual: BTreeMap<Monomial, DividedElement>,
}

impl<'a> Pairing<'a> {
    pub fn new(cat: &'a Catalecticant, phi: &'a InverseSystem) -> Result<Self> {
        check_inputs(cat, phi)?;
        let ctx = Ctx::new(cat, phi);
        let n = cat.n();
        let tilde = phi.phi_tilde();
        let mut z_tilde = BTreeMap::new();
        let mut y_tilde = BTreeMap::new();
        for mu in &monomials(Vars::Yz, n - 1) {
            let p = Polynomial::monomial(ctx.ring, *mu);
            z_tilde.insert(*mu, contract(&(&ctx.z * &p), &tilde)?);
            y_tilde.insert(*mu, contract(&(&ctx.y * &p), &tilde)?);
        }
        let mut z_dual = BTreeMap::new();
        let mut y_dual = BTreeMap::new();
        for nu in &monomials(Vars::Yz, n) {
            let d = DividedElement::dual(ctx.ring, *nu);
            z_dual.insert(*nu, contract(&ctx.z, &d)?);
            y_dual.insert(*nu, contract(&ctx.y, &d)?);
        }
        Ok(Pairing {
            ctx,
            z_tilde,
            y_tilde,
            z_dual,
            y_dual,
        })
    }

    fn qq(&self, a: &DividedElement, b: &DividedElement) -> Result<Polynomial> {
        self.ctx.cat.qq_pair(a, b)
    }

    fn beta1(&self, nu: &Monomial, nu2: &Monomial) -> Result<Polynomial> {
        let v = &self.qq(&self.z_dual[nu], &self.y_dual[nu2])?
            - &self.qq(&self.y_dual[nu], &self.z_dual[nu2])?;
        Ok(&self.ctx.x * &v)
    }

    fn beta2(&self, mu: &Monomial, nu: &Monomial) -> Result<Polynomial> {
        let v = &self.qq(&self.z_tilde[mu], &self.y_dual[nu])?
            - &self.qq(&self.y_tilde[mu], &self.z_dual[nu])?;
        Ok(&self.ctx.x * &v)
    }

    fn beta3(&self, mu: &Monomial, mu2: &Monomial) -> Result<Polynomial> {
        let v = &self.qq(&self.z_tilde[mu], &self.y_tilde[mu2])?
            - &self.qq(&self.y_tilde[mu], &self.z_tilde[mu2])?;
        Ok(&self.ctx.x * &v)
    }

    // yδ [zμ](ν) - zδ [yμ](ν)
    fn delta_terms(&self, mu: &Monomial, nu: &Monomial) -> Result<Polynomial> {
        let ring = self.ctx.ring;
        let d = DividedElement::dual(ring, *nu);
        let zmu = pair(&Polynomial::monomial(ring, mu.mul(&Monomial::Z)), &d)?;
        let ymu = pair(&Polynomial::monomial(ring, mu.mul(&Monomial::Y)), &d)?;
        let delta = self.ctx.cat.delta();
        Ok(&(&(&self.ctx.y * delta) * &zmu) - &(&(&self.ctx.z * delta) * &ymu))
    }

    /// `𝔟(θ ∧ θ')` for basis elements of `B2` (`Sym` over degree `n-1`, `Dual` over degree `n`).
    pub fn eval(&self, a: &Label, b: &Label) -> Result<Polynomial> {
        match (a, b) {
            (Label::Sym(mu), Label::Sym(mu2)) => self.beta3(mu, mu2),
            (Label::Sym(mu), Label::Dual(nu)) => {
                Ok(&self.beta2(mu, nu)? + &self.delta_terms(mu, nu)?)
            }
            (Label::Dual(nu), Label::Sym(mu)) => {
                Ok(-(&self.beta2(mu, nu)? + &self.delta_terms(mu, nu)?))
            }
            (Label::Dual(nu), Label::Dual(nu2)) => self.beta1(nu, nu2),
            _ => Err(Error::input("pairing is defined on B2 basis labels only")),
        }
    }
}

/// `b2` with entry `(i, j) = 𝔟(e_j ∧ e_i)`, where `e_i` is the `B2` basis
/// element dual to row `i`.
pub fn b2_pairing_oracle(cat: &Catalecticant, phi: &InverseSystem) -> Result<PolyMatrix> {
    let pairing = Pairing::new(cat, phi)?;
    let n = cat.n();
    let basis = b2_basis(n);
    let mut out = PolyMatrix::zeros(cat.ring(), b1_basis(n), basis.clone());
    for (i, ei) in basis.iter().enumerate() {
        for (j, ej) in basis.iter().enumerate() {
            out.set(i, j, pairing.eval(ej, ei)?);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct ResolutionComplex {
    n: u32,
    phi: InverseSystem,
    catalecticant: Catalecticant,
    b1: PolyMatrix,
    b2: PolyMatrix,
    b3: PolyMatrix,
    twists: Twists,
}

/// Builds the complex for `Φ`. Specialized inputs need `δ ≠ 0`; generic
/// inputs are limited to `n ≤ 3`.
pub fn build_resolution(phi: &InverseSystem) -> Result<ResolutionComplex> {
    let n = phi.n();
    if phi.ring() == Ring::Generic && n > MAX_GENERIC_N {
        return Err(Error::Capacity(format!(
            "the symbolic complex is supported for n <= {MAX_GENERIC_N}, got n = {n}"
        )));
    }
    let cat = Catalecticant::new(phi)?;
    if cat.delta().is_zero() {
        return Err(Error::DegenerateInverseSystem);
    }
    let b1 = build_b1(&cat, phi)?;
    let b2 = build_b2(&cat, phi)?;
    let b3 = build_b3(&b1)?;
    Ok(ResolutionComplex {
        n,
        phi: phi.clone(),
        catalecticant: cat,
        b1,
        b2,
        b3,
        twists: twists(n),
    })
}

impl ResolutionComplex {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn ring(&self) -> Ring {
        self.phi.ring()
    }

    pub fn phi(&self) -> &InverseSystem {
        &self.phi
    }

    pub fn catalecticant(&self) -> &Catalecticant {
        &self.catalecticant
    }

    pub fn delta(&self) -> &Polynomial {
        self.catalecticant.delta()
    }

    pub fn b1(&self) -> &PolyMatrix {
        &self.b1
    }

    pub fn b2(&self) -> &PolyMatrix {
        &self.b2
    }

    pub fn b3(&self) -> &PolyMatrix {
        &self.b3
    }

    pub fn twists(&self) -> &Twists {
        &self.twists
    }

    /// Replaces `b1`; for exercising checks against altered maps.
    pub fn with_b1(mut self, b1: PolyMatrix) -> Self {
        self.b1 = b1;
        self
    }

    /// Replaces `b2`; for exercising checks against altered maps.
    pub fn with_b2(mut self, b2: PolyMatrix) -> Self {
        self.b2 = b2;
        self
    }

    /// Rebuilds the complex from a specialization of the generic inverse system.
    pub fn specialize(
        &self,
        assignment: &BTreeMap<TVar, BigRational>,
    ) -> Result<ResolutionComplex> {
        build_resolution(&self.phi.specialize(assignment))
    }

    pub fn to_json(&self) -> ResolutionJson {
        let t = &self.twists;
        let module = |tw: &Twist| -> Vec<TwistJson> {
            tw.labels
                .iter()
                .zip(&tw.shifts)
                .map(|(l, s)| TwistJson {
                    label: *l,
                    shift: [s.d1, s.d2],
                })
                .collect()
        };
        ResolutionJson {
            n: self.n,
            mode: self.ring(),
            delta: self.delta().to_string(),
            twists: TwistsJson {
                b0: module(&t.b0),
                b1: module(&t.b1),
                b2: module(&t.b2),
                b3: module(&t.b3),
            },
            t: MatrixJson::from(self.catalecticant.t()),
            q: MatrixJson::from(self.catalecticant.q()),
            b1: labeled(
                self.b1.col_labels(),
                (0..self.b1.ncols()).map(|j| self.b1.get(0, j)),
            ),
            b2: MatrixJson::from(&self.b2),
            b3: labeled(
                self.b3.row_labels(),
                (0..self.b3.nrows()).map(|i| self.b3.get(i, 0)),
            ),
        }
    }

    /// Text dump in the layout `T`, `Q`, `δ`, `b1` values, `b2` matrix.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let cat = &self.catalecticant;
        let basis: Vec<String> = cat.basis().iter().map(|m| m.to_string()).collect();
        let _ = writeln!(out, "n = {}", self.n);
        let _ = writeln!(out, "mode = {}", self.ring().name());
        let _ = writeln!(out, "T (rows and columns {}):", basis.join(", "));
        out.push_str(&cat.t().to_text());
        let _ = writeln!(out, "Q:");
        out.push_str(&cat.q().to_text());
        let _ = writeln!(out, "delta = {}", self.delta());
        for (j, label) in self.b1.col_labels().iter().enumerate() {
            let _ = writeln!(out, "b1(1 ⊗ {label}) = {}", self.b1.get(0, j));
        }
        let rows: Vec<String> = self.b2.row_labels().iter().map(|l| l.to_string()).collect();
        let cols: Vec<String> = self.b2.col_labels().iter().map(|l| l.to_string()).collect();
        let _ = writeln!(
            out,
            "b2 (rows {}; columns {}):",
            rows.join(", "),
            cols.join(", ")
        );
        out.push_str(&self.b2.to_text());
        for (i, label) in self.b3.row_labels().iter().enumerate() {
            let _ = writeln!(out, "b3(1)[{label}] = {}", self.b3.get(i, 0));
        }
        out
    }
}

fn labeled<'a>(
    labels: &[Label],
    values: impl Iterator<Item = &'a Polynomial>,
) -> Vec<LabeledEntry> {
    labels
        .iter()
        .zip(values)
        .map(|(l, v)| LabeledEntry {
            label: *l,
            value: v.to_string(),
        })
        .collect()
}

#[derive(Serialize)]
pub struct LabeledEntry {
    pub label: Label,
    pub value: String,
}

#[derive(Serialize)]
pub struct TwistJson {
    pub label: Label,
    pub shift: [i64; 2],
}

#[derive(Serialize)]
pub struct TwistsJson {
    #[serde(rename = "B0")]
    pub b0: Vec<TwistJson>,
    #[serde(rename = "B1")]
    pub b1: Vec<TwistJson>,
    #[serde(rename = "B2")]
    pub b2: Vec<TwistJson>,
    #[serde(rename = "B3")]
    pub b3: Vec<TwistJson>,
}

#[derive(Serialize)]
pub struct ResolutionJson {
    pub n: u32,
    pub mode: Ring,
    pub delta: String,
    pub twists: TwistsJson,
    #[serde(rename = "T")]
    pub t: MatrixJson,
    #[serde(rename = "Q")]
    pub q: MatrixJson,
    pub b1: Vec<LabeledEntry>,
    pub b2: MatrixJson,
    pub b3: Vec<LabeledEntry>,
}
