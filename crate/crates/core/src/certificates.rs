//! Certificates for the univariate bounds: value-factorization bounds with
//! their Murty, Girstmair and prime-power special cases, the digit-polynomial
//! bound, and the p-adic factor-degree bound.
//!
//! A [`Certificate`] stores the witnesses of one bound. [`verify`] rebuilds
//! the certificate from those witnesses and rejects it unless every field
//! matches.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bipoly::BiPoly;
use crate::expr::{parse_poly, parse_rat_poly, parse_rational, ParsedPoly};
use crate::numeric::{factorize, is_prime_seeded};
use crate::{Config, Error, Factorization, IntPoly, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    /// Prime factors of a value `|f(m)/d|`.
    T1,
    /// Prime-power value coprime to a Taylor coefficient.
    T2,
    /// Prime factors of the number whose digits are the coefficients.
    T3,
    /// Prime value at `m >= H_f + 2`.
    TA,
    /// Value `d * p` with `p` prime, `f` primitive.
    TB,
    /// Value `d * p^k` with the extra divisibility conditions.
    TC,
    /// Factor-degree bound from p-adic valuations of the coefficients.
    TD,
    /// Bivariate: factors of `f(x, a(x))`.
    T4,
    /// Bivariate: factor-degree bound from a Newton polygon edge.
    T5,
    /// Bivariate: degree bound 1 and no factor linear in `y`, hence irreducible.
    T5X,
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// At most `bound` irreducible factors.
    FactorCount,
    /// Every factorization has a factor of degree at most `bound`.
    FactorDegree,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub digits: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value_factorization: Option<Factorization>,
    /// The witnesses refer to the reciprocal of `poly`.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub reciprocal: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subst: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu_a: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: u32,
    pub theorem: TheoremId,
    pub poly: String,
    pub witnesses: Witnesses,
    pub bound: u64,
    pub bound_kind: BoundKind,
    /// The bound says nothing a degree count would not.
    pub vacuous: bool,
    #[serde(default)]
    pub diagnostics: Vec<String>,
}

impl Certificate {
    pub(crate) fn new(theorem: TheoremId, poly: String, bound: u64, bound_kind: BoundKind) -> Self {
        Certificate {
            schema: SCHEMA_VERSION,
            theorem,
            poly,
            witnesses: Witnesses::default(),
            bound,
            bound_kind,
            vacuous: false,
            diagnostics: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Certificate> {
        serde_json::from_str(text).map_err(|e| Error::InvalidArgument(format!("certificate JSON: {e}")))
    }

    fn m(&self) -> Result<BigInt> {
        witness_int(&self.witnesses.m, "m")
    }

    fn d(&self) -> Result<BigInt> {
        witness_int(&self.witnesses.d, "d")
    }
}

fn witness_int(w: &Option<String>, name: &str) -> Result<BigInt> {
    let text = w
        .as_deref()
        .ok_or_else(|| Error::CertificateMismatch(format!("missing witness {name}")))?;
    text.parse()
        .map_err(|_| Error::CertificateMismatch(format!("witness {name} = {text:?} is not an integer")))
}

/// Vacuous for a factor count: the bound is at least the degree.
pub(crate) fn count_vacuous(bound: u64, degree: usize) -> bool {
    bound >= degree as u64
}

/// Vacuous for a degree bound: every split already has a factor of degree at
/// most `floor(degree / 2)`.
pub(crate) fn degree_vacuous(bound: u64, degree: usize) -> bool {
    bound >= (degree / 2) as u64
}

fn threshold_met(h: &BigRational, m: &BigInt, d: &BigInt) -> bool {
    BigRational::from_integer(m - d - 1u32) >= *h
}

fn check_threshold(h: &BigRational, m: &BigInt, d: &BigInt) -> Result<()> {
    if m < &BigInt::one() || d < &BigInt::one() {
        return Err(Error::InvalidArgument("m and d must be positive".into()));
    }
    if threshold_met(h, m, d) {
        Ok(())
    } else {
        let required = h + BigRational::from_integer(d + 1u32);
        Err(Error::ThresholdNotMet {
            m: m.to_string(),
            required: required.to_string(),
        })
    }
}

fn content_note(f: &IntPoly) -> Option<String> {
    let c = f.content();
    (!c.is_one()).then(|| format!("content {c}: f is not primitive"))
}

fn target_of(f: &IntPoly, reciprocal: bool) -> Result<IntPoly> {
    if reciprocal {
        if f.coeff(0).is_zero() {
            return Err(Error::InvalidArgument("reciprocal requires a_0 != 0".into()));
        }
        f.reciprocal()
    } else {
        Ok(f.clone())
    }
}

fn check_value(fact: &Factorization, value: &BigInt, cfg: &Config) -> Result<()> {
    if &fact.value() != value {
        return Err(Error::CertificateMismatch(format!(
            "stored factorization {fact} does not multiply to {value}"
        )));
    }
    for (p, _) in fact.factors() {
        if !is_prime_seeded(&BigInt::from(p.clone()), cfg.seed) {
            return Err(Error::NotPrime(p.to_string()));
        }
    }
    Ok(())
}

/// Bound from `nu = Omega(|f(m)/d|)` given the factorization of the value.
fn t1_certificate(
    f: &IntPoly,
    reciprocal: bool,
    m: &BigInt,
    d: &BigInt,
    value_fact: Factorization,
) -> Result<Certificate> {
    let target = target_of(f, reciprocal)?;
    let h = target.height()?;
    check_threshold(&h, m, d)?;
    let value = target.eval(m);
    debug_assert_eq!(value_fact.value(), value);
    let cofactor = value_fact
        .unitary_cofactor(d.magnitude())
        .ok_or_else(|| Error::NotUnitaryDivisor {
            d: d.to_string(),
            value: value.to_string(),
        })?;
    if cofactor.is_unit() {
        return Err(Error::TrivialCofactor(cofactor.magnitude().to_string()));
    }
    let nu = cofactor.big_omega();
    let note = content_note(&target);
    let theorem = if d.is_one() && nu == 1 {
        TheoremId::TA
    } else if nu == 1 && note.is_none() {
        TheoremId::TB
    } else {
        TheoremId::T1
    };
    let n = target.degree().expect("nonconstant");
    let mut cert = Certificate::new(theorem, f.to_string(), nu, BoundKind::FactorCount);
    cert.vacuous = count_vacuous(nu, n);
    cert.diagnostics.extend(note);
    cert.witnesses = Witnesses {
        m: Some(m.to_string()),
        d: Some(d.to_string()),
        value_factorization: Some(value_fact),
        reciprocal,
        ..Witnesses::default()
    };
    Ok(cert)
}

/// At most `Omega(|f(m)/d|)` irreducible factors when `m >= H_f + d + 1`,
/// `d` is a unitary divisor of `f(m)` and `|f(m)/d| > 1`.
pub fn theorem1_bound(f: &IntPoly, m: &BigInt, d: &BigInt, cfg: &Config) -> Result<Certificate> {
    let h = f.height()?;
    check_threshold(&h, m, d)?;
    let fact = factorize(&f.eval(m), cfg)?;
    t1_certificate(f, false, m, d, fact)
}

/// At most `min(k, j)` irreducible factors when `|f(m)|/d = p^k` and `j` is
/// the least index with `p` not dividing the Taylor coefficient `c_j` at `m`.
fn t2_certificate(
    f: &IntPoly,
    reciprocal: bool,
    m: &BigInt,
    d: &BigInt,
    value_fact: Factorization,
) -> Result<Certificate> {
    let target = target_of(f, reciprocal)?;
    let n = target.degree().ok_or(Error::ZeroPolynomial)?;
    if target.coeff(0).is_zero() || n == 0 {
        return Err(Error::InvalidArgument("requires a_0 * a_n != 0 and degree >= 1".into()));
    }
    let h = target.height()?;
    check_threshold(&h, m, d)?;
    let value = target.eval(m);
    let quotient = value_fact
        .quotient(d.magnitude())
        .ok_or_else(|| Error::InvalidArgument(format!("d = {d} does not divide f(m) = {value}")))?;
    let (p, k) = quotient
        .as_prime_power()
        .map(|(p, k)| (BigInt::from(p.clone()), u64::from(k)))
        .ok_or_else(|| Error::NotPrimePower(quotient.magnitude().to_string()))?;
    if d.is_multiple_of(&p) {
        return Err(Error::PrimeDividesD {
            p: p.to_string(),
            d: d.to_string(),
        });
    }
    let taylor = target.taylor_coeffs(m);
    let j = (1..=n)
        .find(|&i| !taylor.coeff(i).is_multiple_of(&p))
        .ok_or_else(|| {
            Error::HypothesisUnsatisfiable(format!("{p} divides every Taylor coefficient at m = {m}"))
        })? as u64;
    let bound = k.min(j);
    let note = content_note(&target);
    let pk = num_traits::pow(p.clone(), k as usize);
    let strong = num_integer::gcd(k, j) == 1
        && (0..j as usize).all(|i| taylor.coeff(i).is_multiple_of(&pk));
    let theorem = match (k == 1, strong, note.is_none()) {
        (true, _, true) => TheoremId::TB,
        (false, true, true) => TheoremId::TC,
        _ => TheoremId::T2,
    };
    let mut cert = Certificate::new(theorem, f.to_string(), bound, BoundKind::FactorCount);
    cert.vacuous = count_vacuous(bound, n);
    cert.diagnostics.extend(note);
    cert.witnesses = Witnesses {
        m: Some(m.to_string()),
        d: Some(d.to_string()),
        p: Some(p.to_string()),
        k: Some(k),
        j: Some(j),
        value_factorization: Some(value_fact),
        reciprocal,
        ..Witnesses::default()
    };
    Ok(cert)
}

pub fn theorem2_bound(f: &IntPoly, m: &BigInt, d: &BigInt, cfg: &Config) -> Result<Certificate> {
    let h = f.height()?;
    check_threshold(&h, m, d)?;
    let value = f.eval(m);
    if value.is_zero() {
        return Err(Error::InvalidArgument("f(m) = 0".into()));
    }
    let fact = factorize(&value, cfg)?;
    t2_certificate(f, false, m, d, fact)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Scan `m` over `ceil(H_f) + 2 ..= ceil(H_f) + 2 + m_offset`.
    pub m_offset: u64,
    /// Also scan the reciprocal polynomial with its own height.
    pub use_reciprocal: bool,
    /// Largest `d` considered.
    pub d_max: Option<BigInt>,
    /// Also try the prime-power bound at every scanned value.
    pub theorem2: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            m_offset: 100,
            use_reciprocal: false,
            d_max: None,
            theorem2: false,
        }
    }
}

/// Best certificate at each scanned `(polynomial, m)`, plus values whose
/// factorization ran out of budget.
#[derive(Clone, Debug, Default)]
pub struct Scan {
    pub entries: Vec<Certificate>,
    pub diagnostics: Vec<String>,
}

#[derive(Clone, Debug, Default)]
pub struct SearchOutcome {
    pub best: Option<Certificate>,
    pub diagnostics: Vec<String>,
}

fn rank(c: &Certificate) -> (u64, BigInt, BigInt, bool, TheoremId) {
    let num = |w: &Option<String>| w.as_deref().and_then(|s| s.parse().ok()).unwrap_or_default();
    (
        c.bound,
        num(&c.witnesses.m),
        num(&c.witnesses.d),
        c.witnesses.reciprocal,
        c.theorem,
    )
}

fn scan_point(f: &IntPoly, reciprocal: bool, m: &BigInt, opts: &SearchOptions, cfg: &Config) -> Result<(Option<Certificate>, Option<String>)> {
    let target = target_of(f, reciprocal)?;
    let h = target.height()?;
    let value = target.eval(m);
    let label = if reciprocal { "reciprocal" } else { "f" };
    let fact = match factorize(&value, cfg) {
        Ok(fact) => fact,
        Err(e) if e.is_effort_exhausted() => return Ok((None, Some(format!("{label} at m = {m}: {e}")))),
        Err(e) => return Err(e),
    };
    let mut best: Option<Certificate> = None;
    let mut consider = |c: Certificate| {
        if best.as_ref().map_or(true, |b| rank(&c) < rank(b)) {
            best = Some(c);
        }
    };
    let mut best_t1: Option<(u64, BigInt)> = None;
    for d in fact.unitary_divisors() {
        let d = BigInt::from(d);
        if opts.d_max.as_ref().is_some_and(|max| &d > max) || !threshold_met(&h, m, &d) {
            break;
        }
        let cof = fact.unitary_cofactor(d.magnitude()).expect("unitary");
        if cof.is_unit() {
            continue;
        }
        let nu = cof.big_omega();
        if best_t1.as_ref().map_or(true, |(b, _)| nu < *b) {
            best_t1 = Some((nu, d.clone()));
        }
        if opts.theorem2 && nu > 1 && cof.as_prime_power().is_some() && !target.coeff(0).is_zero() {
            match t2_certificate(f, reciprocal, m, &d, fact.clone()) {
                Ok(c) => consider(c),
                Err(Error::HypothesisUnsatisfiable(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    if let Some((_, d)) = best_t1 {
        consider(t1_certificate(f, reciprocal, m, &d, fact)?);
    }
    Ok((best, None))
}

fn scan_start(f: &IntPoly) -> Result<BigInt> {
    Ok(f.height()?.ceil().to_integer() + 2u32)
}

/// Evaluates `f` (and optionally its reciprocal) over the search window in
/// parallel; results come back in scan order whatever the schedule.
pub fn theorem1_scan(f: &IntPoly, opts: &SearchOptions, cfg: &Config) -> Result<Scan> {
    let mut tasks = Vec::new();
    let mut push_range = |target: &IntPoly, reciprocal: bool| -> Result<()> {
        let start = scan_start(target)?;
        for off in 0..=opts.m_offset {
            tasks.push((reciprocal, &start + off));
        }
        Ok(())
    };
    push_range(f, false)?;
    if opts.use_reciprocal && !f.coeff(0).is_zero() {
        push_range(&f.reciprocal()?, true)?;
    }
    let results: Vec<_> = tasks
        .par_iter()
        .map(|(rec, m)| scan_point(f, *rec, m, opts, cfg))
        .collect::<Result<_>>()?;
    let mut scan = Scan::default();
    for (cert, diag) in results {
        scan.entries.extend(cert);
        scan.diagnostics.extend(diag);
    }
    Ok(scan)
}

/// Certificate minimizing the bound over the window; ties go to the smaller
/// `m`, then the smaller `d`, then the polynomial itself over its reciprocal.
pub fn theorem1_search(f: &IntPoly, opts: &SearchOptions, cfg: &Config) -> Result<SearchOutcome> {
    let scan = theorem1_scan(f, opts, cfg)?;
    let best = scan.entries.into_iter().min_by(|a, b| rank(a).cmp(&rank(b)));
    let mut diagnostics = scan.diagnostics;
    if let Some(note) = best.as_ref().and_then(|_| content_note(f)) {
        diagnostics.push(note);
    }
    Ok(SearchOutcome { best, diagnostics })
}

/// The search with the prime-power bound also tried at every scanned value.
pub fn auto_bound(f: &IntPoly, opts: &SearchOptions, cfg: &Config) -> Result<SearchOutcome> {
    let opts = SearchOptions {
        theorem2: true,
        ..opts.clone()
    };
    theorem1_search(f, &opts, cfg)
}

/// Coefficients of `N` in base `b`, least significant first.
pub fn digits(n: &BigInt, b: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut rest = n.clone();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(b);
        out.push(r);
        rest = q;
    }
    out
}

/// Digit polynomial of `N` in base `b` with at most `Omega(N)` irreducible factors.
pub fn theorem3_digits_bound(n: &BigInt, b: &BigInt, cfg: &Config) -> Result<(IntPoly, Certificate)> {
    if n < &BigInt::from(2) || b < &BigInt::from(2) {
        return Err(Error::InvalidArgument("N and b must both be at least 2".into()));
    }
    let fact = factorize(n, cfg)?;
    t3_certificate(n, b, fact)
}

fn t3_certificate(n: &BigInt, b: &BigInt, fact: Factorization) -> Result<(IntPoly, Certificate)> {
    let ds = digits(n, b);
    let f = IntPoly::new(ds.clone());
    let nu = fact.big_omega();
    let mut cert = Certificate::new(TheoremId::T3, f.to_string(), nu, BoundKind::FactorCount);
    cert.vacuous = count_vacuous(nu, f.degree().unwrap_or(0));
    if nu == 1 {
        cert.diagnostics.push(format!("{n} is prime: the digit polynomial is irreducible"));
    }
    cert.witnesses = Witnesses {
        base: Some(b.to_string()),
        digits: Some(ds.iter().map(ToString::to_string).collect()),
        value_factorization: Some(fact),
        ..Witnesses::default()
    };
    Ok((f, cert))
}

fn valuation(a: &BigInt, p: &BigInt) -> Option<u64> {
    if a.is_zero() {
        return None;
    }
    let mut v = 0;
    let mut rest = a.clone();
    while rest.is_multiple_of(p) {
        rest /= p;
        v += 1;
    }
    Some(v)
}

/// Every factorization has a factor of degree at most `n - j + l`, where
/// `p` does not divide `a_j`, `k = min_{i<j} v_p(a_i) >= 1`, `l` is the least
/// index below `j` with `v_p(a_l) = k` and `gcd(j - l, k) = 1`.
pub fn theorem_d_degree_bound(f: &IntPoly, p: &BigInt, cfg: &Config) -> Result<Option<Certificate>> {
    if !is_prime_seeded(p, cfg.seed) || !p.is_positive() {
        return Err(Error::NotPrime(p.to_string()));
    }
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    let vals: Vec<Option<u64>> = f.coeffs().iter().map(|a| valuation(a, p)).collect();
    let mut best: Option<(u64, u64, u64, u64)> = None;
    for j in 1..=n {
        if vals[j] != Some(0) {
            continue;
        }
        let Some(k) = vals[..j].iter().flatten().copied().min() else {
            continue;
        };
        if k == 0 {
            continue;
        }
        let l = vals[..j].iter().position(|&v| v == Some(k)).expect("minimum attained");
        if num_integer::gcd((j - l) as u64, k) != 1 {
            continue;
        }
        let bound = (n - j + l) as u64;
        if best.map_or(true, |(b, ..)| bound < b) {
            best = Some((bound, j as u64, k, l as u64));
        }
    }
    Ok(best.map(|(bound, j, k, l)| {
        let mut cert = Certificate::new(TheoremId::TD, f.to_string(), bound, BoundKind::FactorDegree);
        cert.vacuous = degree_vacuous(bound, n);
        cert.witnesses = Witnesses {
            p: Some(p.to_string()),
            k: Some(k),
            j: Some(j),
            l: Some(l),
            ..Witnesses::default()
        };
        cert
    }))
}

fn univariate(cert: &Certificate) -> Result<IntPoly> {
    match parse_poly(&cert.poly)? {
        ParsedPoly::Univariate(f) => Ok(f),
        ParsedPoly::Bivariate(_) => Err(Error::CertificateMismatch("expected a polynomial in x only".into())),
    }
}

fn bivariate(cert: &Certificate) -> Result<BiPoly> {
    Ok(match parse_poly(&cert.poly)? {
        ParsedPoly::Univariate(f) => BiPoly::new(vec![(&f).into()]),
        ParsedPoly::Bivariate(f) => f,
    })
}

fn stored_factorization(cert: &Certificate) -> Result<Factorization> {
    cert.witnesses
        .value_factorization
        .clone()
        .ok_or_else(|| Error::CertificateMismatch("missing value factorization".into()))
}

/// Rebuilds the certificate from its witnesses and polynomial and checks that
/// the theorem label, bound, kind, flags and witnesses all agree. Stored
/// factorizations are checked by primality and product, not recomputed.
pub fn verify(cert: &Certificate, cfg: &Config) -> Result<()> {
    if cert.schema != SCHEMA_VERSION {
        return Err(Error::CertificateMismatch(format!("unsupported schema {}", cert.schema)));
    }
    let rebuilt = match cert.theorem {
        TheoremId::T1 | TheoremId::TA | TheoremId::TB | TheoremId::T2 | TheoremId::TC => {
            let f = univariate(cert)?;
            let (m, d) = (cert.m()?, cert.d()?);
            let target = target_of(&f, cert.witnesses.reciprocal)?;
            let fact = stored_factorization(cert)?;
            check_value(&fact, &target.eval(&m), cfg)?;
            if cert.witnesses.j.is_some() {
                t2_certificate(&f, cert.witnesses.reciprocal, &m, &d, fact)?
            } else {
                t1_certificate(&f, cert.witnesses.reciprocal, &m, &d, fact)?
            }
        }
        TheoremId::T3 => {
            let f = univariate(cert)?;
            let b = witness_int(&cert.witnesses.base, "base")?;
            if b < BigInt::from(2) {
                return Err(Error::InvalidArgument("base must be at least 2".into()));
            }
            let fact = stored_factorization(cert)?;
            let n = f.eval(&b);
            if n < BigInt::from(2) || f.coeffs().iter().any(|a| a.is_negative() || a >= &b) {
                return Err(Error::CertificateMismatch("coefficients are not base-b digits of N >= 2".into()));
            }
            check_value(&fact, &n, cfg)?;
            t3_certificate(&n, &b, fact)?.1
        }
        TheoremId::TD => {
            let f = univariate(cert)?;
            let p = witness_int(&cert.witnesses.p, "p")?;
            theorem_d_degree_bound(&f, &p, cfg)?
                .ok_or_else(|| Error::HypothesisUnsatisfiable(format!("no valid (j, k) for p = {p}")))?
        }
        TheoremId::T4 => {
            let f = bivariate(cert)?;
            let a = parse_rat_poly(
                cert.witnesses
                    .subst
                    .as_deref()
                    .ok_or_else(|| Error::CertificateMismatch("missing witness subst".into()))?,
            )?;
            let rho = parse_rational(
                cert.witnesses
                    .rho
                    .as_deref()
                    .ok_or_else(|| Error::CertificateMismatch("missing witness rho".into()))?,
            )?;
            crate::bivariate::theorem4_bound(&f, &a, &rho, cfg)?
        }
        TheoremId::T5 => {
            let f = bivariate(cert)?;
            crate::newton::theorem5_bound(&f)?
                .ok_or_else(|| Error::HypothesisUnsatisfiable("no valid (j, l)".into()))?
        }
        TheoremId::T5X => {
            let f = bivariate(cert)?;
            crate::bivariate::irreducibility_certificate(&f, cfg)?
                .ok_or_else(|| Error::HypothesisUnsatisfiable("irreducibility argument does not apply".into()))?
        }
    };
    compare(cert, rebuilt)
}

fn compare(cert: &Certificate, mut rebuilt: Certificate) -> Result<()> {
    rebuilt.poly.clone_from(&cert.poly);
    rebuilt.diagnostics.clone_from(&cert.diagnostics);
    let fields: [(&str, bool); 5] = [
        ("theorem", rebuilt.theorem == cert.theorem),
        ("bound", rebuilt.bound == cert.bound),
        ("bound_kind", rebuilt.bound_kind == cert.bound_kind),
        ("vacuous", rebuilt.vacuous == cert.vacuous),
        ("witnesses", rebuilt.witnesses == cert.witnesses),
    ];
    match fields.iter().find(|(_, ok)| !ok) {
        None => Ok(()),
        Some((name, _)) => Err(Error::CertificateMismatch(format!(
            "{name} differs from the recomputed certificate ({} bound {})",
            rebuilt.theorem, rebuilt.bound
        ))),
    }
}

/// Degree of the factor each split must contain, used to sanity-check
/// factor-degree certificates against an explicit factorization.
pub fn smallest_split_degree(factor_degrees: &[usize]) -> Option<usize> {
    let total: usize = factor_degrees.iter().sum();
    let count = factor_degrees.len();
    if count < 2 || count > 24 {
        return None;
    }
    // worst split for the bound: the one whose smaller side is largest
    let mut best = 0;
    for mask in 1..(1u32 << count) - 1 {
        let side: usize = (0..count).filter(|i| mask >> i & 1 == 1).map(|i| factor_degrees[i]).sum();
        best = best.max(side.min(total - side));
    }
    Some(best)
}
