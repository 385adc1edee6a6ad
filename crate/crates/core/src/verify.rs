//! Checks on a built complex, each computed by a route independent of the
//! construction where one exists.
//!
//! Span checks work over `Q` on the coefficient vectors of degree-`n` forms
//! in the basis `monomials(Xyz, n)`, so they apply to specialized complexes only.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::divpow::{contract, monomials, InverseSystem, Vars};
use crate::error::{Error, Result};
use crate::linalg::{self, RatMatrix};
use crate::matrix::{Label, PolyMatrix};
use crate::poly::{BiDegree, Monomial, Polynomial, Ring, TVar};
use crate::resolution::{b2_pairing_oracle, build_resolution, ResolutionComplex, Twist};

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Informational checks do not affect [`VerificationReport::passed`].
    pub required: bool,
    pub detail: String,
    /// A failing entry or vector, when there is one.
    pub witness: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckResult {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.to_string(),
            passed,
            required: true,
            detail: detail.into(),
            witness: None,
            elapsed: Duration::ZERO,
        }
    }

    fn with_witness(mut self, witness: Option<String>) -> Self {
        self.witness = witness;
        self
    }

    fn informational(mut self) -> Self {
        self.required = false;
        self
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed || !c.required)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push_timed(&mut self, f: impl FnOnce() -> Result<CheckResult>) -> Result<()> {
        let start = Instant::now();
        let mut check = f()?;
        check.elapsed = start.elapsed();
        self.checks.push(check);
        Ok(())
    }

    /// One line per check; timings are left out so the text is reproducible.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = match (c.passed, c.required) {
                (true, _) => "PASS",
                (false, true) => "FAIL",
                (false, false) => "NOTE",
            };
            out.push_str(&format!("{status} {}: {}\n", c.name, c.detail));
            if let Some(w) = &c.witness {
                out.push_str(&format!("     witness: {w}\n"));
            }
        }
        out
    }
}

fn first_nonzero(m: &PolyMatrix) -> Option<String> {
    m.entries()
        .find(|(_, _, e)| !e.is_zero())
        .map(|(i, j, e)| format!("entry ({}, {}) = {e}", m.row_labels()[i], m.col_labels()[j]))
}

/// `b1 b2 = 0` and `b2 b3 = 0`, multiplied out symbolically.
pub fn check_complex(res: &ResolutionComplex) -> Result<CheckResult> {
    let p12 = res.b1().mul(res.b2())?;
    let p23 = res.b2().mul(res.b3())?;
    let witness = first_nonzero(&p12)
        .map(|w| format!("b1 b2 {w}"))
        .or_else(|| first_nonzero(&p23).map(|w| format!("b2 b3 {w}")));
    let passed = witness.is_none();
    Ok(CheckResult::new("complex", passed, "b1 b2 = 0 and b2 b3 = 0").with_witness(witness))
}

/// `b2` is alternating under the pairing of the `B1` and `B2` bases.
pub fn check_alternating(res: &ResolutionComplex) -> CheckResult {
    let b2 = res.b2();
    let witness = (0..b2.nrows()).find_map(|i| {
        (0..=i).find_map(|j| {
            let ok = if i == j {
                b2.get(i, i).is_zero()
            } else {
                *b2.get(i, j) == -b2.get(j, i)
            };
            (!ok).then(|| {
                format!(
                    "entries ({i}, {j}) = {} and ({j}, {i}) = {}",
                    b2.get(i, j),
                    b2.get(j, i)
                )
            })
        })
    });
    CheckResult::new(
        "alternating",
        witness.is_none(),
        "b2 is skew-symmetric with zero diagonal",
    )
    .with_witness(witness)
}

// Entry (i, j) of a map from `source` to `target` must have degree `target_i - source_j`.
fn grading_witness(
    name: &str,
    m: &PolyMatrix,
    target: &Twist,
    source: &Twist,
    ring: Ring,
) -> Option<String> {
    m.entries().find_map(|(i, j, e)| {
        let want = target.shifts[i] - source.shifts[j];
        let ok = match ring {
            Ring::Generic => e.is_zero() || e.bidegree() == Some(want),
            Ring::Specialized => e.is_zero() || e.xyz_degree() == Some(want.d1 as u32),
        };
        (!ok).then(|| format!("{name} entry ({i}, {j}) = {e} should have bidegree {want}"))
    })
}

/// Every nonzero entry is homogeneous of the degree forced by the twists.
/// Specialized complexes are checked in the `xyz` degree only.
pub fn check_grading(res: &ResolutionComplex) -> CheckResult {
    let t = res.twists();
    let ring = res.ring();
    let witness = grading_witness("b1", res.b1(), &t.b0, &t.b1, ring)
        .or_else(|| grading_witness("b2", res.b2(), &t.b1, &t.b2, ring))
        .or_else(|| grading_witness("b3", res.b3(), &t.b2, &t.b3, ring));
    let delta_ok = res.ring() == Ring::Specialized
        || res.delta().bidegree() == Some(BiDegree::new(0, crate::resolution::top(res.n())));
    let witness = witness
        .or_else(|| (!delta_ok).then(|| format!("delta = {} has the wrong bidegree", res.delta())));
    CheckResult::new(
        "grading",
        witness.is_none(),
        "entries have the bidegrees forced by the twists",
    )
    .with_witness(witness)
}

/// The closed-form `b2` equals the matrix of the pairing `𝔟`.
pub fn check_oracle(res: &ResolutionComplex) -> Result<CheckResult> {
    let oracle = b2_pairing_oracle(res.catalecticant(), res.phi())?;
    let witness = oracle.entries().find_map(|(i, j, e)| {
        (e != res.b2().get(i, j)).then(|| {
            format!(
                "entry ({i}, {j}): formula {} vs pairing {e}",
                res.b2().get(i, j)
            )
        })
    });
    Ok(CheckResult::new(
        "oracle",
        witness.is_none(),
        "closed-form b2 matches the alternating pairing",
    )
    .with_witness(witness))
}

/// `T Q = δ I`.
pub fn check_adjoint(res: &ResolutionComplex) -> Result<CheckResult> {
    let cat = res.catalecticant();
    let tq = cat.t().mul(cat.q())?;
    let witness = tq.entries().find_map(|(i, j, e)| {
        let want = if i == j {
            res.delta().clone()
        } else {
            Polynomial::zero(res.ring())
        };
        (*e != want).then(|| format!("(T Q)[{i}][{j}] = {e}"))
    });
    Ok(CheckResult::new("adjoint", witness.is_none(), "T Q = delta I").with_witness(witness))
}

/// `b3` is `b1` read through the pairing `m ↔ m*` of the bases.
pub fn check_b3_reindex(res: &ResolutionComplex) -> CheckResult {
    let witness = res
        .b1()
        .col_labels()
        .iter()
        .enumerate()
        .find_map(|(j, label)| {
            let paired = match label {
                Label::Dual(m) => Label::Sym(*m),
                Label::Sym(m) => Label::Dual(*m),
                Label::One => return Some("b1 has a unit label".to_string()),
            };
            let got = res.b3().at(&paired, &Label::One);
            (got != Some(res.b1().get(0, j)))
                .then(|| format!("b3 at {paired} differs from b1 at {label}"))
        });
    CheckResult::new(
        "b3-reindex",
        witness.is_none(),
        "b3 is b1 reindexed across the pairing",
    )
    .with_witness(witness)
}

/// Coefficient vector of a specialized degree-`d` form over `monomials(Xyz, d)`.
pub fn form_vector(f: &Polynomial, d: u32) -> Result<Vec<BigRational>> {
    if f.ring() != Ring::Specialized {
        return Err(Error::input("coefficient vectors need a specialized form"));
    }
    if !f.is_zero() && f.xyz_degree() != Some(d) {
        return Err(Error::Degree(format!(
            "expected a form of degree {d}, got {f}"
        )));
    }
    Ok(monomials(Vars::Xyz, d)
        .iter()
        .map(|m| f.coefficient(m))
        .collect())
}

fn vector_form(v: &[BigRational], d: u32) -> Polynomial {
    let mut out = Polynomial::zero(Ring::Specialized);
    for (m, c) in monomials(Vars::Xyz, d).iter().zip(v) {
        if !c.is_zero() {
            out += &Polynomial::monomial(Ring::Specialized, *m).scale(c);
        }
    }
    out
}

/// A basis of `ann(Φ)` in degree `n`, computed as the kernel of `f ↦ f(Φ)`.
pub fn annihilator_degree_n(phi: &InverseSystem) -> Result<Vec<Polynomial>> {
    if phi.ring() != Ring::Specialized {
        return Err(Error::input(
            "the annihilator is computed for specialized inverse systems",
        ));
    }
    let n = phi.n();
    let source = monomials(Vars::Xyz, n);
    let target = monomials(Vars::Xyz, n - 2);
    let mut rows: RatMatrix = vec![vec![BigRational::zero(); source.len()]; target.len()];
    for (j, m) in source.iter().enumerate() {
        let image = contract(&Polynomial::monomial(Ring::Specialized, *m), phi.phi())?;
        for (i, t) in target.iter().enumerate() {
            rows[i][j] = image.coefficient(t).as_constant().unwrap_or_default();
        }
    }
    Ok(linalg::kernel(&rows, source.len())
        .iter()
        .map(|v| vector_form(v, n))
        .collect())
}

fn span_rank(forms: &[Polynomial], d: u32) -> Result<usize> {
    let rows: RatMatrix = forms
        .iter()
        .map(|f| form_vector(f, d))
        .collect::<Result<_>>()?;
    Ok(linalg::rank(&rows))
}

fn same_span(a: &[Polynomial], b: &[Polynomial], d: u32) -> Result<(usize, usize, usize)> {
    let both: Vec<Polynomial> = a.iter().chain(b).cloned().collect();
    Ok((span_rank(a, d)?, span_rank(b, d)?, span_rank(&both, d)?))
}

// A form of one family outside the span of the other, if any.
fn span_witness(
    a: (&str, &[Polynomial]),
    b: (&str, &[Polynomial]),
    d: u32,
) -> Result<Option<String>> {
    for (x, y) in [(a, b), (b, a)] {
        let base = span_rank(y.1, d)?;
        for f in x.1 {
            let mut with: Vec<Polynomial> = y.1.to_vec();
            with.push(f.clone());
            if span_rank(&with, d)? > base {
                return Ok(Some(format!(
                    "{} form {f} is not in the span of {}",
                    x.0, y.0
                )));
            }
        }
    }
    Ok(None)
}

fn b1_entries(res: &ResolutionComplex) -> Vec<Polynomial> {
    (0..res.b1().ncols())
        .map(|j| res.b1().get(0, j).clone())
        .collect()
}

/// Each `b1` entry kills `Φ`.
pub fn check_b1_annihilates(res: &ResolutionComplex) -> Result<CheckResult> {
    let mut witness = None;
    for (j, f) in b1_entries(res).iter().enumerate() {
        if !contract(f, res.phi().phi())?.is_zero() {
            witness = Some(format!(
                "b1 at {} = {f} does not annihilate",
                res.b1().col_labels()[j]
            ));
            break;
        }
    }
    Ok(CheckResult::new(
        "b1-annihilates",
        witness.is_none(),
        "every b1 entry annihilates Phi",
    )
    .with_witness(witness))
}

/// `dim ann(Φ)_n = 2n + 1` and the `b1` entries span it.
pub fn check_annihilator(res: &ResolutionComplex) -> Result<CheckResult> {
    let n = res.n();
    let ann = annihilator_degree_n(res.phi())?;
    let entries = b1_entries(res);
    let (r_ann, r_b1, r_both) = same_span(&ann, &entries, n)?;
    let want = 2 * n as usize + 1;
    let passed = r_ann == want && r_b1 == want && r_both == want;
    let witness = if passed {
        None
    } else {
        span_witness(("annihilator", &ann), ("b1", &entries), n)?
            .or_else(|| Some(format!("dimension {r_ann} differs from {want}")))
    };
    Ok(CheckResult::new(
        "annihilator",
        passed,
        format!("dim ann_n = {r_ann}, rank b1 = {r_b1}, joint rank = {r_both}, expected {want}"),
    )
    .with_witness(witness))
}

/// Pfaffian of the principal submatrix on `subset`, by expansion along its first index.
pub fn pfaffian(m: &PolyMatrix, subset: &[usize]) -> Result<Polynomial> {
    if subset.len() % 2 == 1 {
        return Err(Error::input("pfaffian of an odd-sized matrix"));
    }
    if !m.is_alternating() {
        return Err(Error::input("pfaffian of a matrix that is not alternating"));
    }
    Ok(pfaffian_rec(m, subset))
}

fn pfaffian_rec(m: &PolyMatrix, subset: &[usize]) -> Polynomial {
    let Some((&first, rest)) = subset.split_first() else {
        return Polynomial::one(m.ring());
    };
    let mut acc = Polynomial::zero(m.ring());
    for (k, &j) in rest.iter().enumerate() {
        let a = m.get(first, j);
        if a.is_zero() {
            continue;
        }
        let remaining: Vec<usize> = rest
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != k)
            .map(|(_, &v)| v)
            .collect();
        let term = a * &pfaffian_rec(m, &remaining);
        acc = if k % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

/// Signed submaximal Pfaffians `(-1)^i Pf(b2 without row and column i)`.
pub fn submaximal_pfaffians(b2: &PolyMatrix) -> Result<Vec<Polynomial>> {
    let size = b2.nrows();
    (0..size)
        .map(|i| {
            let subset: Vec<usize> = (0..size).filter(|&k| k != i).collect();
            let pf = pfaffian(b2, &subset)?;
            Ok(if i % 2 == 0 { pf } else { -pf })
        })
        .collect()
}

/// The submaximal Pfaffians of `b2` span the same degree-`n` space as `b1`.
/// Also reports (not required) whether the two vectors are proportional.
pub fn check_pfaffian_span(res: &ResolutionComplex) -> Result<Vec<CheckResult>> {
    let n = res.n();
    if !res.b2().is_alternating() {
        let witness = check_alternating(res).witness;
        return Ok(vec![CheckResult::new(
            "pfaffian-span",
            false,
            "b2 is not alternating",
        )
        .with_witness(witness)]);
    }
    let pfs = submaximal_pfaffians(res.b2())?;
    let entries = b1_entries(res);
    let (r_pf, r_b1, r_both) = same_span(&pfs, &entries, n)?;
    let passed = r_pf == r_b1 && r_b1 == r_both && r_b1 == 2 * n as usize + 1;
    let witness = if passed {
        None
    } else {
        span_witness(("Pfaffian", &pfs), ("b1", &entries), n)?
            .or_else(|| Some(format!("rank {r_b1} differs from {}", 2 * n + 1)))
    };
    let span = CheckResult::new(
        "pfaffian-span",
        passed,
        format!("rank Pf = {r_pf}, rank b1 = {r_b1}, joint rank = {r_both}"),
    )
    .with_witness(witness);
    let ratio = proportionality(&pfs, &entries);
    let detail = match &ratio {
        Some(c) => format!("Pf = {c} * b1 entrywise"),
        None => "Pfaffians and b1 are not proportional".to_string(),
    };
    let proportional =
        CheckResult::new("pfaffian-proportional", ratio.is_some(), detail).informational();
    Ok(vec![span, proportional])
}

// The constant c with a = c b, if there is one.
fn proportionality(a: &[Polynomial], b: &[Polynomial]) -> Option<BigRational> {
    let (pa, pb) = a.iter().zip(b).find(|(_, y)| !y.is_zero())?;
    let (term, cb) = pb.terms().next()?;
    let ca = pa
        .terms()
        .find(|(t, _)| *t == term)
        .map(|(_, c)| c.clone())
        .unwrap_or_default();
    let c = ca / cb;
    a.iter().zip(b).all(|(x, y)| *x == y.scale(&c)).then_some(c)
}

/// Degree-`n` part of `(x^n, y^n, z^n) : (x + y + z)^(n-1)`, as the kernel of
/// `f ↦ f (x + y + z)^(n-1)` modulo the monomials with an exponent `≥ n`.
pub fn colon_ideal_degree_n(n: u32) -> Result<Vec<Polynomial>> {
    let ring = Ring::Specialized;
    let l = &(&Polynomial::x(ring) + &Polynomial::y(ring)) + &Polynomial::z(ring);
    let lp = l.pow(n - 1);
    let source = monomials(Vars::Xyz, n);
    // surviving monomials of degree 2n - 1: every exponent below n
    let target: Vec<Monomial> = monomials(Vars::Xyz, 2 * n - 1)
        .iter()
        .filter(|m| m.exponents().iter().all(|&e| (e as u32) < n))
        .copied()
        .collect();
    let mut rows: RatMatrix = vec![vec![BigRational::zero(); source.len()]; target.len()];
    for (j, m) in source.iter().enumerate() {
        let image = lp.mul_monomial(m);
        for (i, t) in target.iter().enumerate() {
            rows[i][j] = image.coefficient(t);
        }
    }
    Ok(linalg::kernel(&rows, source.len())
        .iter()
        .map(|v| vector_form(v, n))
        .collect())
}

/// `g (x + y + z)^(n-1) ∈ (x^n, y^n, z^n)`, decided term by term.
pub fn in_colon_ideal(g: &Polynomial, n: u32) -> bool {
    let ring = g.ring();
    let l = &(&Polynomial::x(ring) + &Polynomial::y(ring)) + &Polynomial::z(ring);
    (g * &l.pow(n - 1))
        .terms()
        .all(|(t, _)| t.xyz().exponents().iter().any(|&e| e as u32 >= n))
}

/// For the colon inverse system: every `b1` entry lies in
/// `(x^n, y^n, z^n) : (x + y + z)^(n-1)`, and the `b1` entries span both
/// `ann(Φ)_n` and the degree-`n` part of the colon ideal.
pub fn check_colon_ideal(n: u32) -> Result<CheckResult> {
    let name = format!("colon-n{n}");
    let phi = crate::divpow::colon_inverse_system(n)?;
    let res = build_resolution(&phi)?;
    let entries = b1_entries(&res);
    if let Some(g) = entries.iter().find(|g| !in_colon_ideal(g, n)) {
        return Ok(
            CheckResult::new(&name, false, "b1 entry outside the colon ideal").with_witness(Some(
                format!(
                    "{g} (x + y + z)^{} has a term outside (x^{n}, y^{n}, z^{n})",
                    n - 1
                ),
            )),
        );
    }
    let colon = colon_ideal_degree_n(n)?;
    let ann = annihilator_degree_n(&phi)?;
    let (r_colon, r_b1, r_both) = same_span(&colon, &entries, n)?;
    let (r_ann, _, r_ann_both) = same_span(&ann, &entries, n)?;
    let want = 2 * n as usize + 1;
    let passed = [r_colon, r_b1, r_both, r_ann, r_ann_both]
        .iter()
        .all(|&r| r == want);
    let witness = if passed {
        None
    } else {
        span_witness(("colon", &colon), ("b1", &entries), n)?
            .or(span_witness(("annihilator", &ann), ("b1", &entries), n)?)
            .or_else(|| Some(format!("ranks differ from {want}")))
    };
    Ok(CheckResult::new(
        &name,
        passed,
        format!(
            "delta = {}, b1 entries in the colon ideal, dim colon_n = {r_colon}, dim ann_n = {r_ann}, rank b1 = {r_b1}",
            res.delta()
        ),
    )
    .with_witness(witness))
}

/// Every check that applies to the complex's ring.
pub fn full_report(res: &ResolutionComplex) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    report.push_timed(|| check_adjoint(res))?;
    report.push_timed(|| check_complex(res))?;
    report.push_timed(|| Ok(check_alternating(res)))?;
    report.push_timed(|| Ok(check_grading(res)))?;
    report.push_timed(|| Ok(check_b3_reindex(res)))?;
    report.push_timed(|| check_oracle(res))?;
    if res.ring() == Ring::Specialized {
        report.push_timed(|| check_b1_annihilates(res))?;
        report.push_timed(|| check_annihilator(res))?;
        let start = Instant::now();
        let mut pf = check_pfaffian_span(res)?;
        for c in &mut pf {
            c.elapsed = start.elapsed();
        }
        report.checks.extend(pf);
    }
    Ok(report)
}

/// [`full_report`] from the inverse system; a vanishing `δ` becomes a failed entry.
pub fn full_report_for(phi: &InverseSystem) -> Result<VerificationReport> {
    match build_resolution(phi) {
        Ok(res) => full_report(&res),
        Err(Error::DegenerateInverseSystem) => Ok(VerificationReport {
            checks: vec![CheckResult::new(
                "degenerate",
                false,
                "catalecticant determinant vanishes",
            )
            .with_witness(Some("delta = 0".into()))],
        }),
        Err(e) => Err(e),
    }
}

/// Uniform integer coefficients in `[-bound, bound]` for every `t_m`.
pub fn random_assignment(n: u32, rng: &mut impl Rng, bound: i64) -> BTreeMap<TVar, BigRational> {
    monomials(Vars::Xyz, 2 * n - 2)
        .iter()
        .map(|m| {
            (
                TVar(*m),
                BigRational::from_integer(rng.gen_range(-bound..=bound).into()),
            )
        })
        .collect()
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct TrialSummary {
    pub n: u32,
    pub seed: u64,
    pub requested: usize,
    pub verified: usize,
    /// Draws with `δ = 0`; these are redrawn and do not count toward `verified`.
    pub degenerate: usize,
    /// `(trial index, check name, detail)`.
    pub failures: Vec<(usize, String, String)>,
}

impl TrialSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.verified == self.requested
    }
}

/// Largest number of redraws per trial before giving up on a nondegenerate `Φ`.
const MAX_REDRAWS: usize = 100;

/// Verifies `trials` random specialized inverse systems of degree `2n - 2`.
pub fn random_trials(n: u32, trials: usize, seed: u64) -> Result<TrialSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let generic = InverseSystem::generic(n)?;
    let mut summary = TrialSummary {
        n,
        seed,
        requested: trials,
        ..TrialSummary::default()
    };
    for trial in 0..trials {
        let mut built = None;
        for _ in 0..MAX_REDRAWS {
            let phi = generic.specialize(&random_assignment(n, &mut rng, 5));
            match build_resolution(&phi) {
                Ok(res) => {
                    built = Some(res);
                    break;
                }
                Err(Error::DegenerateInverseSystem) => summary.degenerate += 1,
                Err(e) => return Err(e),
            }
        }
        let Some(res) = built else {
            summary
                .failures
                .push((trial, "draw".into(), "no nondegenerate draw".into()));
            continue;
        };
        let report = full_report(&res)?;
        for c in report.checks.iter().filter(|c| c.required && !c.passed) {
            summary.failures.push((
                trial,
                c.name.clone(),
                c.witness.clone().unwrap_or_else(|| c.detail.clone()),
            ));
        }
        summary.verified += 1;
    }
    Ok(summary)
}

/// Specializing the generic complex agrees with building from the specialized `Φ`.
pub fn check_specialization_commutes(
    generic: &ResolutionComplex,
    assignment: &BTreeMap<TVar, BigRational>,
) -> Result<CheckResult> {
    if generic.ring() != Ring::Generic {
        return Err(Error::input("specialization check needs a generic complex"));
    }
    let phi = generic.phi().specialize(assignment);
    let direct = match build_resolution(&phi) {
        Err(Error::DegenerateInverseSystem) => {
            return Ok(CheckResult::new(
                "specialization",
                true,
                "skipped: delta vanishes at this point",
            )
            .informational())
        }
        other => other?,
    };
    let pairs = [
        ("b1", generic.b1(), direct.b1()),
        ("b2", generic.b2(), direct.b2()),
        ("b3", generic.b3(), direct.b3()),
    ];
    let mut witness = None;
    for (name, g, d) in pairs {
        if !g.specialize(assignment).same_entries(d) {
            witness = Some(format!("{name} differs after specialization"));
            break;
        }
    }
    if witness.is_none() && generic.delta().specialize(assignment) != *direct.delta() {
        witness = Some("delta differs after specialization".into());
    }
    Ok(CheckResult::new(
        "specialization",
        witness.is_none(),
        "generic complex specializes to the specialized one",
    )
    .with_witness(witness))
}
