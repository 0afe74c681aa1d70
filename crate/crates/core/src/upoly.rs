//! Dense univariate polynomials over the integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// `a_0 + a_1 x + ... + a_n x^n` with `a_n != 0` unless the polynomial is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// Coefficients of `f` expanded around `m`: `f(x) = sum c_i (x - m)^i`,
/// so `c_i = f^(i)(m) / i!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaylorCoeffs {
    pub center: BigInt,
    pub coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, m: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * m + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    /// `H_f = max_{i<n} |a_i| / |a_n|` as an exact rational.
    pub fn height(&self) -> Result<BigRational> {
        let n = match self.degree() {
            None => return Err(Error::ZeroPolynomial),
            Some(0) => return Err(Error::ConstantPolynomial),
            Some(n) => n,
        };
        let max = self.coeffs[..n]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default();
        Ok(BigRational::new(max, self.coeffs[n].abs()))
    }

    /// Taylor expansion at `m` by `n` rounds of synthetic division by `x - m`.
    pub fn taylor_coeffs(&self, m: &BigInt) -> TaylorCoeffs {
        let mut work = self.coeffs.clone();
        let len = work.len();
        for start in 0..len {
            // work[start..] holds the current quotient; one synthetic division
            // leaves the remainder in work[start]
            for i in (start..len - 1).rev() {
                let carry = &work[i + 1] * m;
                work[i] += carry;
            }
        }
        TaylorCoeffs {
            center: m.clone(),
            coeffs: work,
        }
    }

    /// `x^deg f * f(1/x)`.
    pub fn reciprocal(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Ok(IntPoly::new(coeffs))
    }

    /// Checks `|f(x)| >= |a_n| |x|^n / (H_f + 1)^n` exactly; requires `|x| >= H_f + 1`.
    ///
    /// Holds for every admissible `x`; this is the inequality behind the root
    /// bound `|theta| < H_f + 1`.
    pub fn root_bound_check(&self, x: &BigInt) -> Result<bool> {
        let h = self.height()?;
        let h1 = h + BigRational::one();
        if BigRational::from_integer(x.abs()) < h1 {
            return Err(Error::InvalidArgument(format!(
                "|x| = {} is below H_f + 1 = {}",
                x.abs(),
                h1
            )));
        }
        let n = self.degree().expect("height checked degree") as u32;
        let (num, den) = (h1.numer().clone(), h1.denom().clone());
        let lhs = self.eval(x).abs() * num.pow(n);
        let rhs = self.coeffs[n as usize].abs() * x.abs().pow(n) * den.pow(n);
        Ok(lhs >= rhs)
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(|l| l.sign() == Sign::Minus) {
            c = -c;
        }
        IntPoly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Quotient `self / divisor` when it exists in `Z[x]`.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let dd = divisor.degree()?;
        let Some(nd) = self.degree() else {
            return Some(IntPoly::zero());
        };
        if nd < dd {
            return None;
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(IntPoly::new(quot))
        } else {
            None
        }
    }

    /// Remainder of `lc(g)^e f` modulo `g` for some `e >= 0`.
    fn pseudo_rem(&self, g: &IntPoly) -> IntPoly {
        let dg = g.degree().expect("nonzero divisor");
        let lead = &g.coeffs[dg];
        let mut rem = self.clone();
        while let Some(dr) = rem.degree() {
            if dr < dg {
                break;
            }
            let top = rem.coeffs[dr].clone();
            let shifted = IntPoly::monomial(top, dr - dg);
            rem = &rem.scale(lead) - &(&shifted * g);
        }
        rem
    }

    /// Primitive gcd with positive leading coefficient (primitive remainder sequence).
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.primitive_part()
    }

    /// `f(x + m)`; coefficients are the Taylor coefficients at `m`.
    pub fn shift(&self, m: &BigInt) -> IntPoly {
        IntPoly::new(self.taylor_coeffs(m).coeffs)
    }

    /// `f(g(x))` by Horner's scheme.
    pub fn compose(&self, g: &IntPoly) -> IntPoly {
        self.coeffs.iter().rev().fold(IntPoly::zero(), |acc, c| {
            &(&acc * g) + &IntPoly::constant(c.clone())
        })
    }
}

impl TaylorCoeffs {
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        -&self
    }
}

/// Writes `terms` (coefficient text without sign, monomial text, negative?) in
/// the canonical `a - b*x + x^2` style.
pub(crate) fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, String, bool)>,
) -> fmt::Result {
    let mut first = true;
    for (coeff, mono, negative) in terms {
        match (first, negative) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        first = false;
        match (coeff == "1", mono.is_empty()) {
            (_, true) => write!(f, "{coeff}")?,
            (true, false) => write!(f, "{mono}")?,
            (false, false) => write!(f, "{coeff}*{mono}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

pub(crate) fn power_text(var: char, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

/// Canonical text: monomials in descending degree, e.g. `x^6 - x^2 - 2*x - 1`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (c.abs().to_string(), power_text('x', k), c.is_negative()));
        write_terms(f, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn int(s: &str) -> BigInt {
        s.parse().unwrap()
    }

    fn binomial(n: usize, k: usize) -> BigInt {
        (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[1, 0, 10, 0, 1]).eval(&BigInt::from(12)), BigInt::from(22177));
        assert_eq!(p(&[7, 3, 2]).eval(&BigInt::zero()), BigInt::from(7));
        let f = p(&[5, 0, 0, 0, 0, 0, 0, 6, 1]);
        assert_eq!(f.eval(&BigInt::from(108)), int("179244006092537") * 109);
    }

    #[test]
    fn height_examples() {
        assert_eq!(p(&[-1, -2, -1, 0, 0, 0, 1]).height().unwrap(), BigRational::from_integer(2.into()));
        assert_eq!(p(&[0, 0, 0, 1]).height().unwrap(), BigRational::zero());
        assert_eq!(p(&[1, 0, 22, 0, 1]).height().unwrap(), BigRational::from_integer(22.into()));
        assert_eq!(p(&[9, -6, -8]).height().unwrap(), BigRational::new(9.into(), 8.into()));
        assert_eq!(p(&[3]).height(), Err(Error::ConstantPolynomial));
        assert_eq!(IntPoly::zero().height(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn taylor_examples() {
        let t = p(&[-1, 3, -3, 1]).taylor_coeffs(&BigInt::from(2));
        assert_eq!(t.coeffs, vec![1, 3, 3, 1].into_iter().map(BigInt::from).collect::<Vec<_>>());
        let t = p(&[9, -6, 1, 0, -9]).taylor_coeffs(&BigInt::from(3));
        assert_eq!(t.coeff(2), BigInt::from(-485));
        assert_eq!(t.coeff(2).mod_floor(&BigInt::from(3)), BigInt::one());
    }

    #[test]
    fn reciprocal_examples() {
        let f8 = p(&[-1, -2, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        let r = f8.reciprocal().unwrap();
        assert_eq!(r.eval(&BigInt::from(3)), BigInt::from(-76_527_503));
        assert_eq!(p(&[1, 0, 2]).reciprocal().unwrap(), p(&[2, 0, 1]));
        assert_eq!(p(&[1, 3, 1]).reciprocal().unwrap(), p(&[1, 3, 1]));
        assert_eq!(IntPoly::zero().reciprocal(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn root_bound_examples() {
        // f3 at x = 3: |713| * 3^6 >= 1 * 3^6
        assert!(p(&[-1, -2, -1, 0, 0, 0, 1]).root_bound_check(&BigInt::from(3)).unwrap());
        assert!(p(&[0, 0, 0, 0, 1]).root_bound_check(&BigInt::from(-5)).unwrap());
        assert!(p(&[1, 0, 10, 0, 1]).root_bound_check(&BigInt::from(12)).unwrap());
        assert!(p(&[1, 0, 10, 0, 1]).root_bound_check(&BigInt::from(10)).is_err());
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(p(&[-1, -2, -1, 0, 0, 0, 1]).to_string(), "x^6 - x^2 - 2*x - 1");
        assert_eq!(p(&[1, 0, -1]).to_string(), "-x^2 + 1");
        assert_eq!(p(&[0, -3]).to_string(), "-3*x");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p(&[-7]).to_string(), "-7");
    }

    #[test]
    fn exact_division_and_gcd() {
        let a = p(&[-1, -1, 1]);
        let b = p(&[1, 1, 1]);
        let f = &a * &b;
        assert_eq!(f, p(&[-1, -2, -1, 0, 1]));
        assert_eq!(f.div_exact(&a), Some(b.clone()));
        assert_eq!(f.div_exact(&p(&[1, 1])), None);
        let g = &f * &a;
        assert_eq!(g.gcd(&f), f.clone());
        assert_eq!(f.scale(&BigInt::from(6)).gcd(&a.scale(&BigInt::from(-4))), a);
        assert_eq!(p(&[2, 4]).primitive_part(), p(&[1, 2]));
        assert_eq!(p(&[2, -4]).primitive_part(), p(&[-1, 2]));
    }

    fn arb_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-bound..=bound, 1..=max_deg + 1).prop_map(|c| IntPoly::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn taylor_reconstructs(f in arb_poly(12, 1_000_000), m in -1000i64..=1000) {
            let m = BigInt::from(m);
            let t = f.taylor_coeffs(&m);
            prop_assert_eq!(t.coeff(0), f.eval(&m));
            // expand sum c_i (x - m)^i with binomials
            let mut back = vec![BigInt::zero(); t.coeffs.len()];
            for (i, c) in t.coeffs.iter().enumerate() {
                for k in 0..=i {
                    let term = c * binomial(i, k) * (-&m).pow((i - k) as u32);
                    back[k] += term;
                }
            }
            prop_assert_eq!(IntPoly::new(back), f);
        }

        #[test]
        fn reciprocal_degree(f in arb_poly(10, 20).prop_filter("nonzero", |f| !f.is_zero())) {
            let r = f.reciprocal().unwrap();
            prop_assert!(r.degree() <= f.degree());
            prop_assert_eq!(r.degree() == f.degree(), !f.coeff(0).is_zero());
            if !f.coeff(0).is_zero() {
                prop_assert_eq!(r.reciprocal().unwrap(), f);
            }
        }

        #[test]
        fn nonvanishing_above_threshold(f in arb_poly(8, 50), extra in 0i64..20) {
            prop_assume!(f.degree().unwrap_or(0) >= 1);
            let h = f.height().unwrap();
            let m = (h + BigRational::from_integer(2.into())).ceil().to_integer() + extra;
            prop_assert!(!f.eval(&m).is_zero());
            prop_assert!(f.root_bound_check(&m).unwrap());
            prop_assert!(f.root_bound_check(&-m).unwrap());
        }

        #[test]
        fn gcd_divides_both(a in arb_poly(4, 9), b in arb_poly(4, 9), c in arb_poly(3, 9)) {
            prop_assume!(!c.is_zero() && !a.is_zero() && !b.is_zero());
            let fa = &a * &c;
            let fb = &b * &c;
            let g = fa.gcd(&fb);
            prop_assert!(fa.div_exact(&g).is_some());
            prop_assert!(fb.div_exact(&g).is_some());
            prop_assert!(g.div_exact(&c.primitive_part()).is_some());
        }
    }
}
