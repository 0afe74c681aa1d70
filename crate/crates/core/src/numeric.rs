//! Arbitrary-precision primality testing and integer factorization, plus the
//! divisor functions the bound theorems are phrased in.
//!
//! Factoring runs trial division by every prime below 10^6 and then Brent's
//! variant of Pollard rho on whatever composite cofactors remain. Rho draws its
//! constants from a ChaCha stream seeded by [`Config::seed`], so a given input
//! and seed always produce the same sequence of work. When a cofactor resists
//! more than [`Config::rho_iterations`] iterations the call fails with
//! [`Error::FactorizationIncomplete`]; it never returns a partial answer.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, RandBigInt, Sign};
use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::{Config, Error, Result, DEFAULT_SEED};

/// Signed arbitrary-precision integer. Zero has no sign.
pub type Integer = BigInt;

const TRIAL_LIMIT: u32 = 1_000_000;
const MILLER_RABIN_ROUNDS: usize = 40;
const RHO_BATCH: u64 = 128;

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let limit = TRIAL_LIMIT as usize;
        let mut composite = vec![false; limit + 1];
        let mut primes = Vec::new();
        for i in 2..=limit {
            if !composite[i] {
                primes.push(i as u32);
                let mut j = i * i;
                while j <= limit {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        primes
    })
}

// ---------------------------------------------------------------------------
// Primality

/// Primality of `|n|`, using the default seed for the probabilistic range.
pub fn is_prime(n: &BigInt) -> bool {
    is_prime_seeded(n, DEFAULT_SEED)
}

/// Primality of `|n|`.
///
/// Below 2^64 the answer is exact (Miller-Rabin with the first twelve prime
/// bases). Above it, 40 Miller-Rabin rounds with seeded random bases are
/// followed by a strong Lucas test.
pub fn is_prime_seeded(n: &BigInt, seed: u64) -> bool {
    is_prime_magnitude(n.magnitude(), seed)
}

pub(crate) fn is_prime_magnitude(n: &BigUint, seed: u64) -> bool {
    match n.to_u64() {
        Some(v) => is_prime_u64(v),
        None => is_probable_prime_big(n, seed),
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn miller_rabin_round(n: &BigUint, n_minus_1: &BigUint, d: &BigUint, s: u64, a: &BigUint) -> bool {
    let mut x = a.modpow(d, n);
    if x.is_one() || &x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if &x == n_minus_1 {
            return true;
        }
    }
    false
}

/// Miller-Rabin (base 2 plus seeded random bases) followed by a strong Lucas
/// test. Valid for any `n`; used above 2^64.
pub(crate) fn is_probable_prime_big(n: &BigUint, seed: u64) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for &p in small_primes().iter().take_while(|&&p| p < 1000) {
        let p = BigUint::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    if !miller_rabin_round(n, &n_minus_1, &d, s, &two) {
        return false;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let upper = n - 2u32;
    for _ in 1..MILLER_RABIN_ROUNDS {
        let a = rng.gen_biguint_range(&two, &upper);
        if !miller_rabin_round(n, &n_minus_1, &d, s, &a) {
            return false;
        }
    }
    strong_lucas(n)
}

/// Jacobi symbol (a/n) for odd positive n.
fn jacobi(a: &BigInt, n: &BigUint) -> i32 {
    let mut n = n.clone();
    let mut a = a.mod_floor(&BigInt::from_biguint(Sign::Plus, n.clone()))
        .to_biguint()
        .expect("reduced residue is nonnegative");
    let mut result = 1;
    while !a.is_zero() {
        let tz = a.trailing_zeros().unwrap_or(0);
        a >>= tz;
        let n_mod_8 = (&n % 8u32).to_u32().unwrap();
        if tz % 2 == 1 && (n_mod_8 == 3 || n_mod_8 == 5) {
            result = -result;
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4u32).to_u32() == Some(3) && (&n % 4u32).to_u32() == Some(3) {
            result = -result;
        }
        a %= &n;
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

/// Strong Lucas probable-prime test with Selfridge's parameters (P = 1).
fn strong_lucas(n: &BigUint) -> bool {
    if n.is_even() {
        return n == &BigUint::from(2u32);
    }
    let root = n.sqrt();
    if &(&root * &root) == n {
        return false;
    }
    let modulus = BigInt::from_biguint(Sign::Plus, n.clone());
    let mut d_param = BigInt::from(5);
    loop {
        match jacobi(&d_param, n) {
            -1 => break,
            0 => {
                if d_param.magnitude() != n {
                    return false;
                }
            }
            _ => {}
        }
        d_param = if d_param.sign() == Sign::Plus {
            -(&d_param + 2u32)
        } else {
            -(&d_param - 2u32)
        };
    }
    let q: BigInt = (BigInt::one() - &d_param) / 4;
    let reduce = |v: BigInt| v.mod_floor(&modulus);
    let half = |v: BigInt| {
        let v = if v.is_odd() { v + &modulus } else { v };
        reduce(v >> 1)
    };

    let n_plus_1 = n + 1u32;
    let s = n_plus_1.trailing_zeros().unwrap_or(0);
    let d = &n_plus_1 >> s;

    // U_1 = 1, V_1 = P = 1, Q^1 = Q
    let mut u = BigInt::one();
    let mut v = BigInt::one();
    let mut qk = reduce(q.clone());
    let bits = d.bits();
    for i in (0..bits - 1).rev() {
        u = reduce(&u * &v);
        v = reduce(&v * &v - &qk * 2);
        qk = reduce(&qk * &qk);
        if d.bit(i) {
            let u_next = half(&u + &v);
            let v_next = half(&d_param * &u + &v);
            u = u_next;
            v = v_next;
            qk = reduce(&qk * &q);
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = reduce(&v * &v - &qk * 2);
        if v.is_zero() {
            return true;
        }
        qk = reduce(&qk * &qk);
    }
    false
}

// ---------------------------------------------------------------------------
// Factorization

/// Sign and prime-power decomposition of a nonzero integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FactorizationRepr", into = "FactorizationRepr")]
pub struct Factorization {
    negative: bool,
    factors: Vec<(BigUint, u32)>,
}

#[derive(Serialize, Deserialize)]
struct FactorizationRepr {
    sign: i8,
    factors: Vec<(String, u32)>,
}

impl From<Factorization> for FactorizationRepr {
    fn from(f: Factorization) -> Self {
        FactorizationRepr {
            sign: f.sign(),
            factors: f
                .factors
                .into_iter()
                .map(|(p, e)| (p.to_string(), e))
                .collect(),
        }
    }
}

impl TryFrom<FactorizationRepr> for Factorization {
    type Error = Error;

    fn try_from(repr: FactorizationRepr) -> Result<Self> {
        let negative = match repr.sign {
            1 => false,
            -1 => true,
            s => return Err(Error::InvalidArgument(format!("sign must be 1 or -1, got {s}"))),
        };
        let factors = repr
            .factors
            .into_iter()
            .map(|(p, e)| {
                p.parse::<BigUint>()
                    .map(|p| (p, e))
                    .map_err(|_| Error::InvalidArgument(format!("bad prime {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Factorization::from_parts(negative, factors)
    }
}

impl Factorization {
    /// Builds a factorization after checking every structural invariant:
    /// primes strictly increasing, each prime passes [`is_prime`], exponents positive.
    pub fn from_parts(negative: bool, factors: Vec<(BigUint, u32)>) -> Result<Self> {
        for w in factors.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::InvalidArgument(
                    "primes must be strictly increasing".into(),
                ));
            }
        }
        for (p, e) in &factors {
            if *e == 0 {
                return Err(Error::InvalidArgument(format!("zero exponent on {p}")));
            }
            if !is_prime_magnitude(p, DEFAULT_SEED) {
                return Err(Error::NotPrime(p.to_string()));
            }
        }
        Ok(Factorization { negative, factors })
    }

    /// +1 or -1.
    pub fn sign(&self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn factors(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    pub fn magnitude(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e))
    }

    pub fn value(&self) -> BigInt {
        let sign = if self.negative { Sign::Minus } else { Sign::Plus };
        BigInt::from_biguint(sign, self.magnitude())
    }

    pub fn big_omega(&self) -> u64 {
        self.factors.iter().map(|(_, e)| u64::from(*e)).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    /// `Some((p, k))` when the magnitude is `p^k` with `k >= 1`.
    pub fn as_prime_power(&self) -> Option<(&BigUint, u32)> {
        match self.factors.as_slice() {
            [(p, e)] => Some((p, *e)),
            _ => None,
        }
    }

    pub fn unitary_divisors(&self) -> Vec<BigUint> {
        let mut out = vec![BigUint::one()];
        for (p, e) in &self.factors {
            let pe = p.pow(*e);
            let extra: Vec<BigUint> = out.iter().map(|d| d * &pe).collect();
            out.extend(extra);
        }
        out.sort();
        out
    }

    pub fn divisors(&self) -> Vec<BigUint> {
        let mut out = vec![BigUint::one()];
        for (p, e) in &self.factors {
            let len = out.len();
            let mut pk = BigUint::one();
            for _ in 0..*e {
                pk *= p;
                for i in 0..len {
                    let next = &out[i] * &pk;
                    out.push(next);
                }
            }
        }
        out.sort();
        out
    }

    /// Positive factorization of `|n| / d` where `d` is a unitary divisor:
    /// the prime powers of `d` are removed wholesale.
    ///
    /// Returns `None` when `d` is not a unitary divisor.
    pub fn unitary_cofactor(&self, d: &BigUint) -> Option<Factorization> {
        let mut rest = d.clone();
        let mut kept = Vec::new();
        for (p, e) in &self.factors {
            if (&rest % p).is_zero() {
                let pe = p.pow(*e);
                if !(&rest % &pe).is_zero() {
                    return None;
                }
                rest /= pe;
                if (&rest % p).is_zero() {
                    return None;
                }
            } else {
                kept.push((p.clone(), *e));
            }
        }
        if !rest.is_one() {
            return None;
        }
        Some(Factorization {
            negative: false,
            factors: kept,
        })
    }

    /// Positive factorization of `|n| / d`, or `None` when `d` does not divide `n`.
    pub fn quotient(&self, d: &BigUint) -> Option<Factorization> {
        let mut rest = d.clone();
        let mut kept = Vec::new();
        for (p, e) in &self.factors {
            let mut e = *e;
            while e > 0 && (&rest % p).is_zero() {
                rest /= p;
                e -= 1;
            }
            if e > 0 {
                kept.push((p.clone(), e));
            }
        }
        rest.is_one().then_some(Factorization {
            negative: false,
            factors: kept,
        })
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            write!(f, "-")?;
        }
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Number of prime factors counted with multiplicity.
pub fn big_omega(fact: &Factorization) -> u64 {
    fact.big_omega()
}

/// Every `d > 0` with `d | n` and `gcd(d, n/d) = 1`, ascending.
pub fn unitary_divisors(fact: &Factorization) -> Vec<BigUint> {
    fact.unitary_divisors()
}

/// Complete factorization of a nonzero integer.
pub fn factorize(n: &BigInt, cfg: &Config) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut primes = factor_magnitude(n.magnitude(), cfg)?;
    primes.sort();
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(Factorization {
        negative: n.sign() == Sign::Minus,
        factors,
    })
}

/// All positive divisors of `|n|`, ascending.
pub fn divisors_of(n: &BigInt, cfg: &Config) -> Result<Vec<BigUint>> {
    Ok(factorize(n, cfg)?.divisors())
}

fn factor_magnitude(n: &BigUint, cfg: &Config) -> Result<Vec<BigUint>> {
    let mut found = Vec::new();
    let rest = trial_divide(n.clone(), &mut found, cfg.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut stack = vec![rest];
    while let Some(c) = stack.pop() {
        if c.is_one() {
            continue;
        }
        if is_prime_magnitude(&c, cfg.seed) {
            found.push(c);
            continue;
        }
        let d = find_factor(&c, cfg, &mut rng).ok_or_else(|| {
            Error::FactorizationIncomplete(if &c == n {
                c.to_string()
            } else {
                format!("{c} (cofactor of {n})")
            })
        })?;
        stack.push(&c / &d);
        stack.push(d);
    }
    Ok(found)
}

/// Strips every prime below [`TRIAL_LIMIT`] and returns the cofactor, which is
/// 1, a prime, or a composite free of small factors.
fn trial_divide(mut n: BigUint, out: &mut Vec<BigUint>, seed: u64) -> BigUint {
    if let Some(v) = n.to_u64() {
        return BigUint::from(trial_divide_u64(v, out));
    }
    let mut digits = n.to_u32_digits();
    for &p in small_primes() {
        if p == 1009 && is_prime_magnitude(&n, seed) {
            return n;
        }
        let pw = u64::from(p);
        loop {
            let rem = digits
                .iter()
                .rev()
                .fold(0u64, |r, &d| ((r << 32) | u64::from(d)) % pw);
            if rem != 0 {
                break;
            }
            out.push(BigUint::from(p));
            n /= p;
            digits = n.to_u32_digits();
        }
        if let Some(v) = n.to_u64() {
            return BigUint::from(trial_divide_u64(v, out));
        }
    }
    n
}

fn trial_divide_u64(mut n: u64, out: &mut Vec<BigUint>) -> u64 {
    for &p in small_primes() {
        let p = u64::from(p);
        if p * p > n {
            break;
        }
        if p == 1009 && is_prime_u64(n) {
            return n;
        }
        while n % p == 0 {
            out.push(BigUint::from(p));
            n /= p;
        }
    }
    n
}

fn find_factor(n: &BigUint, cfg: &Config, rng: &mut ChaCha8Rng) -> Option<BigUint> {
    let root = n.sqrt();
    if &(&root * &root) == n {
        return Some(root);
    }
    let mut budget = cfg.rho_iterations;
    match n.to_u64() {
        Some(v) => rho_u64(v, rng, &mut budget).map(BigUint::from),
        None => rho_big(n, rng, &mut budget),
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Brent's cycle-finding variant of Pollard rho on `x -> x^2 + c mod n`.
fn rho_u64(n: u64, rng: &mut ChaCha8Rng, budget: &mut u64) -> Option<u64> {
    if n % 2 == 0 {
        return Some(2);
    }
    while *budget > 0 {
        let c = rng.gen_range(1..n);
        let step = |x: u64| ((mul_mod(x, x, n) as u128 + c as u128) % n as u128) as u64;
        let mut y = rng.gen_range(0..n);
        let (mut x, mut ys) = (y, y);
        let (mut r, mut q, mut g) = (1u64, 1u64, 1u64);
        while g == 1 && *budget > 0 {
            x = y;
            for _ in 0..r {
                y = step(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                let batch = RHO_BATCH.min(r - k);
                for _ in 0..batch {
                    y = step(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd_u64(q, n);
                k += batch;
            }
            *budget = budget.saturating_sub(2 * r);
            r *= 2;
        }
        if g == n {
            loop {
                ys = step(ys);
                g = gcd_u64(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g > 1 && g < n {
            return Some(g);
        }
    }
    None
}

fn rho_big(n: &BigUint, rng: &mut ChaCha8Rng, budget: &mut u64) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    let one = BigUint::one();
    while *budget > 0 {
        let c = rng.gen_biguint_range(&one, n);
        let step = |x: &BigUint| (x * x + &c) % n;
        let mut y = rng.gen_biguint_below(n);
        let (mut x, mut ys) = (y.clone(), y.clone());
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut r = 1u64;
        while g.is_one() && *budget > 0 {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let batch = RHO_BATCH.min(r - k);
                for _ in 0..batch {
                    y = step(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += batch;
            }
            *budget = budget.saturating_sub(2 * r);
            r *= 2;
        }
        if &g == n {
            loop {
                ys = step(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if !g.is_one() && &g != n {
            return Some(g);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(s: &str) -> BigInt {
        s.parse().unwrap()
    }

    fn fact(n: i64) -> Factorization {
        factorize(&BigInt::from(n), &Config::default()).unwrap()
    }

    #[test]
    fn primality_examples() {
        assert!(is_prime(&BigInt::from(41)));
        assert!(!is_prime(&BigInt::from(1)));
        assert!(!is_prime(&BigInt::from(0)));
        assert!(is_prime(&BigInt::from(49207)));
        assert!(is_prime(&BigInt::from(-13)));
        assert!(is_prime(&int("179244006092537")));
        assert!(is_prime(&int("39062499999949")));
    }

    #[test]
    fn is_prime_agrees_with_sieve_below_ten_million() {
        let limit = 10_000_000usize;
        let mut composite = vec![false; limit + 1];
        composite[0] = true;
        composite[1] = true;
        let mut i = 2;
        while i * i <= limit {
            if !composite[i] {
                let mut j = i * i;
                while j <= limit {
                    composite[j] = true;
                    j += i;
                }
            }
            i += 1;
        }
        for (n, &c) in composite.iter().enumerate() {
            assert_eq!(is_prime_u64(n as u64), !c, "n = {n}");
        }
    }

    #[test]
    fn big_path_on_known_values() {
        let m89 = (BigUint::one() << 89) - 1u32;
        let m127 = (BigUint::one() << 127) - 1u32;
        let m61 = (BigUint::one() << 61) - 1u32;
        assert!(is_probable_prime_big(&m89, 7));
        assert!(is_probable_prime_big(&m127, 7));
        assert!(!is_probable_prime_big(&(&m89 * &m61), 7));
        assert!(!is_probable_prime_big(&(&m89 * &m89), 7));
        // 2^67 - 1 = 193707721 * 761838257287
        assert!(!is_probable_prime_big(&((BigUint::one() << 67) - 1u32), 7));
        // Carmichael number 3215031751 = 151 * 751 * 28351, strong pseudoprime to bases 2, 3, 5, 7
        assert!(!is_probable_prime_big(&BigUint::from(3_215_031_751u64), 7));
        assert!(strong_lucas(&BigUint::from(1_000_000_007u64)));
        assert!(!strong_lucas(&BigUint::from(1_000_000_007u64 * 3)));
    }

    #[test]
    fn factorize_examples() {
        let f = fact(65);
        assert_eq!(f.factors(), &[(BigUint::from(5u32), 1), (BigUint::from(13u32), 1)]);
        let f = fact(76_527_503);
        let primes: Vec<u64> = f.factors().iter().map(|(p, _)| p.to_u64().unwrap()).collect();
        assert_eq!(primes, vec![13, 673, 8747]);
        let f = fact(-1);
        assert_eq!(f.sign(), -1);
        assert!(f.is_unit());
        assert_eq!(factorize(&BigInt::zero(), &Config::default()), Err(Error::ZeroInput));
    }

    #[test]
    fn factorize_large_table_values() {
        // f_8(50) / 11 and f_7(21)
        let v = int("1525878906249999999999997399") / 11;
        let f = factorize(&v, &Config::default()).unwrap();
        let primes: Vec<String> = f.factors().iter().map(|(p, _)| p.to_string()).collect();
        assert_eq!(primes, vec!["2551", "1392056591", "39062499999949"]);
        let v = int("1801088519") * int("1801088563");
        let f = factorize(&v, &Config::default()).unwrap();
        assert_eq!(f.big_omega(), 2);
        assert_eq!(f.value(), v);
    }

    #[test]
    fn exhausted_budget_is_reported() {
        let cfg = Config {
            rho_iterations: 1,
            ..Config::default()
        };
        let v = int("1801088519") * int("1801088563");
        assert!(matches!(
            factorize(&v, &cfg),
            Err(Error::FactorizationIncomplete(_))
        ));
    }

    #[test]
    fn prime_squares_factor() {
        let p = int("1000000007");
        let f = factorize(&(&p * &p * &p), &Config::default()).unwrap();
        assert_eq!(f.factors(), &[(p.magnitude().clone(), 3)]);
    }

    #[test]
    fn big_omega_examples() {
        assert_eq!(fact(9841).big_omega(), 2);
        assert_eq!(fact(1).big_omega(), 0);
        assert_eq!(fact(512).big_omega(), 9);
    }

    #[test]
    fn unitary_divisor_examples() {
        let ud: Vec<u64> = fact(12).unitary_divisors().iter().map(|d| d.to_u64().unwrap()).collect();
        assert_eq!(ud, vec![1, 3, 4, 12]);
        let ud: Vec<u64> = fact(13).unitary_divisors().iter().map(|d| d.to_u64().unwrap()).collect();
        assert_eq!(ud, vec![1, 13]);
        assert_eq!(fact(1).unitary_divisors(), vec![BigUint::one()]);
    }

    fn gcd(a: u64, b: u64) -> u64 {
        gcd_u64(a, b)
    }

    #[test]
    fn unitary_divisors_match_brute_force() {
        for n in 1..=100_000u64 {
            let mut brute = Vec::new();
            let mut d = 1;
            while d * d <= n {
                if n % d == 0 {
                    for e in [d, n / d] {
                        if gcd(e, n / e) == 1 && !brute.contains(&e) {
                            brute.push(e);
                        }
                    }
                }
                d += 1;
            }
            brute.sort();
            let got: Vec<u64> = fact(n as i64)
                .unitary_divisors()
                .iter()
                .map(|d| d.to_u64().unwrap())
                .collect();
            assert_eq!(got, brute, "n = {n}");
            assert_eq!(got.len(), 1 << fact(n as i64).factors().len());
        }
    }

    #[test]
    fn unitary_cofactor_rejects_non_unitary() {
        let f = fact(12);
        assert_eq!(f.unitary_cofactor(&BigUint::from(4u32)).unwrap().magnitude(), BigUint::from(3u32));
        assert!(f.unitary_cofactor(&BigUint::from(2u32)).is_none());
        assert!(f.unitary_cofactor(&BigUint::from(5u32)).is_none());
    }

    #[test]
    fn json_round_trip_and_validation() {
        let f = fact(-713);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"sign":-1,"factors":[["23",1],["31",1]]}"#);
        let back: Factorization = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<Factorization>(r#"{"sign":1,"factors":[["21",1]]}"#).is_err());
        assert!(serde_json::from_str::<Factorization>(r#"{"sign":1,"factors":[["31",1],["23",1]]}"#).is_err());
    }

    proptest! {
        #[test]
        fn omega_is_additive(a in 1u64..=1_000_000, b in 1u64..=1_000_000) {
            let cfg = Config::default();
            let fa = factorize(&BigInt::from(a), &cfg).unwrap();
            let fb = factorize(&BigInt::from(b), &cfg).unwrap();
            let fab = factorize(&(BigInt::from(a) * BigInt::from(b)), &cfg).unwrap();
            prop_assert_eq!(fab.big_omega(), fa.big_omega() + fb.big_omega());
        }

        #[test]
        fn factorize_remultiplies(a in any::<i64>(), b in any::<i32>()) {
            prop_assume!(a != 0 && b != 0);
            let n = BigInt::from(a) * BigInt::from(b);
            let f = factorize(&n, &Config::default()).unwrap();
            prop_assert_eq!(f.value(), n);
            for (p, _) in f.factors() {
                prop_assert!(is_prime_magnitude(p, 1));
            }
        }

        #[test]
        fn big_path_matches_exact_path(n in 2u64..) {
            prop_assert_eq!(is_probable_prime_big(&BigUint::from(n), 3), is_prime_u64(n));
        }
    }
}
