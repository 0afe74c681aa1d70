//! Bivariate polynomials over the rationals, stored as polynomials in `y`
//! whose coefficients are univariate polynomials in `x`.
//!
//! The only absolute value used on `Q[x]` is `||a|| = rho^deg a`, so every
//! height comparison reduces to exact integer exponents and exact rational
//! powers of `rho`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::upoly::{power_text, write_terms};
use crate::{Error, IntPoly, Result};

/// Dense univariate polynomial over `Q`. The zero polynomial has degree `None`
/// (the `-infinity` of the degree valuation).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Nonzero constant, i.e. a unit of `Q[x]`.
    pub fn is_unit(&self) -> bool {
        self.degree() == Some(0)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &BigRational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> RatPoly {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => RatPoly::zero(),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&nd| nd >= dd) else {
            return (RatPoly::zero(), self.clone());
        };
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = &rem[k + dd] / lead;
            if q.is_zero() {
                continue;
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    pub fn div_exact(&self, divisor: &RatPoly) -> Option<RatPoly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Monic gcd; zero only when both inputs are zero.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow(&self, k: u32) -> RatPoly {
        (0..k).fold(RatPoly::one(), |acc, _| &acc * self)
    }

    /// Splits into a rational scalar and a primitive integer polynomial with
    /// positive leading coefficient: `self = scalar * poly`.
    pub fn to_primitive_int(&self) -> (BigRational, IntPoly) {
        if self.is_zero() {
            return (BigRational::zero(), IntPoly::zero());
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let int_poly = IntPoly::new(ints);
        let prim = int_poly.primitive_part();
        // int_poly = k * prim for an integer k (sign included)
        let k = int_poly.leading().unwrap() / prim.leading().unwrap();
        (BigRational::new(k, lcm), prim)
    }
}

impl From<&IntPoly> for RatPoly {
    fn from(p: &IntPoly) -> Self {
        RatPoly::new(
            p.coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;

    fn add(self, rhs: &RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;

    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;

    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;

    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

fn rational_text(c: &BigRational) -> String {
    let a = c.abs();
    if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

/// Descending degree, like [`IntPoly`]: `x^3 - 1/2*x + 2`.
impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (rational_text(c), power_text('x', k), c.is_negative()));
        write_terms(f, terms)
    }
}

/// `a_0(x) + a_1(x) y + ... + a_n(x) y^n` with `a_n != 0` unless zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    coeffs: Vec<RatPoly>,
}

/// `H_f = rho^exponent`, kept symbolic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoHeight {
    pub rho: BigRational,
    /// `max_{i<n} deg a_i - deg a_n`; coefficients equal to zero are skipped.
    pub exponent: i64,
}

impl RhoHeight {
    pub fn value(&self) -> BigRational {
        rho_pow(&self.rho, self.exponent)
    }
}

fn rho_pow(rho: &BigRational, e: i64) -> BigRational {
    let p = num_traits::pow(rho.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

impl BiPoly {
    pub fn new(mut coeffs: Vec<RatPoly>) -> Self {
        while coeffs.last().is_some_and(RatPoly::is_zero) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    /// Coefficient rows given as integer coefficient lists in `x`.
    pub fn from_rows(rows: &[&[i64]]) -> Self {
        Self::new(rows.iter().map(|r| RatPoly::from_i64s(r)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `y`.
    pub fn y_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[RatPoly] {
        &self.coeffs
    }

    /// Largest `i + deg a_i`.
    pub fn total_degree(&self) -> Option<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter_map(|(i, a)| a.degree().map(|d| i + d))
            .max()
    }

    pub fn coeff(&self, i: usize) -> RatPoly {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    fn check_ends(&self) -> Result<usize> {
        let n = self.y_degree().ok_or(Error::ZeroPolynomial)?;
        if self.coeffs[0].is_zero() {
            return Err(Error::InvalidArgument("a_0(x) must be nonzero".into()));
        }
        Ok(n)
    }

    /// `H_f = rho^(max_{i<n} deg a_i - deg a_n)` for `rho > 1`.
    pub fn rho_height(&self, rho: &BigRational) -> Result<RhoHeight> {
        if rho <= &BigRational::one() {
            return Err(Error::InvalidArgument(format!("rho = {rho} must exceed 1")));
        }
        let n = self.check_ends()?;
        if n == 0 {
            return Err(Error::InvalidArgument("degree in y must be at least 1".into()));
        }
        let top = self.coeffs[n].degree().expect("leading coefficient nonzero") as i64;
        let max = self.coeffs[..n]
            .iter()
            .filter_map(RatPoly::degree)
            .max()
            .expect("a_0 nonzero") as i64;
        Ok(RhoHeight {
            rho: rho.clone(),
            exponent: max - top,
        })
    }

    /// `rho^deg a >= H_f + 2`, the exact form of `deg a >= log(H_f + 2) / log rho`.
    pub fn substitution_ok(&self, a: &RatPoly, rho: &BigRational) -> Result<bool> {
        let h = self.rho_height(rho)?;
        Ok(match a.degree() {
            None => false,
            Some(d) => rho_pow(rho, d as i64) >= h.value() + BigRational::from_integer(2.into()),
        })
    }

    /// `f(x, a(x))`.
    pub fn substitute(&self, a: &RatPoly) -> RatPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(RatPoly::zero(), |acc, c| &(&acc * a) + c)
    }

    /// Reverses the coefficient list in `y`.
    pub fn reciprocal_y(&self) -> Result<BiPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Ok(BiPoly::new(coeffs))
    }

    /// Specializes `x` to a rational, leaving a polynomial in `y`.
    pub fn eval_x(&self, x: &BigRational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| c.eval(x)).collect())
    }

    /// Monic gcd of the `y`-coefficients in `Q[x]`.
    pub fn content_y(&self) -> RatPoly {
        self.coeffs
            .iter()
            .fold(RatPoly::zero(), |acc, c| acc.gcd(c))
    }

    /// Quotient `self / divisor` in `Q[x][y]` when it exists.
    pub fn div_exact(&self, divisor: &BiPoly) -> Option<BiPoly> {
        let dd = divisor.y_degree()?;
        let Some(nd) = self.y_degree() else {
            return Some(BiPoly::zero());
        };
        if nd < dd {
            return None;
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![RatPoly::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            if rem[k + dd].is_zero() {
                continue;
            }
            let q = rem[k + dd].div_exact(lead)?;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = &rem[k + i] - &(&q * c);
            }
            quot[k] = q;
        }
        rem.iter()
            .all(RatPoly::is_zero)
            .then(|| BiPoly::new(quot))
    }

    pub fn pow(&self, k: u32) -> BiPoly {
        (0..k).fold(BiPoly::new(vec![RatPoly::one()]), |acc, _| &acc * self)
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::new((0..len).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::new((0..len).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![RatPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BiPoly::new(out)
    }
}

/// `y`-major ascending order, then ascending in `x`: `1 + x*y + y^5`.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.coeffs.iter().enumerate().flat_map(|(j, a)| {
            a.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(i, c)| {
                    let mono = [power_text('x', i), power_text('y', j)]
                        .into_iter()
                        .filter(|s| !s.is_empty())
                        .collect::<Vec<_>>()
                        .join("*");
                    (rational_text(c), mono, c.is_negative())
                })
        });
        write_terms(f, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    /// (x + y)^n
    fn binomial_power(n: u32) -> BiPoly {
        BiPoly::from_rows(&[&[0, 1], &[1]]).pow(n)
    }

    /// 1 + p x y + p y^n
    fn shifted_trinomial(p: i64, n: usize) -> BiPoly {
        let mut rows = vec![RatPoly::zero(); n + 1];
        rows[0] = RatPoly::from_i64s(&[1]);
        rows[1] = &rows[1] + &RatPoly::from_i64s(&[0, p]);
        rows[n] = &rows[n] + &RatPoly::from_i64s(&[p]);
        BiPoly::new(rows)
    }

    #[test]
    fn rho_height_examples() {
        for n in 1..6u32 {
            let h = binomial_power(n).rho_height(&q(2)).unwrap();
            assert_eq!(h.exponent, n as i64);
            assert_eq!(h.value(), q(1 << n));
        }
        let h = shifted_trinomial(3, 4).rho_height(&q(2)).unwrap();
        assert_eq!((h.exponent, h.value()), (1, q(2)));
        let f = BiPoly::from_rows(&[&[5], &[], &[], &[1]]);
        let h = f.rho_height(&q(2)).unwrap();
        assert!(h.exponent <= 0 && h.value() <= q(1));
        assert!(f.rho_height(&q(1)).is_err());
        assert!(BiPoly::from_rows(&[&[], &[1]]).rho_height(&q(2)).is_err());
    }

    #[test]
    fn substitution_examples() {
        for n in 1..6usize {
            let mut a = vec![0i64; n + 2];
            a[0] = 2;
            a[1] = -1;
            a[n + 1] = 1;
            assert!(binomial_power(n as u32).substitution_ok(&RatPoly::from_i64s(&a), &q(2)).unwrap());
        }
        let f = shifted_trinomial(5, 3);
        assert!(f.substitution_ok(&RatPoly::from_i64s(&[0, 0, 1]), &q(2)).unwrap());
        assert!(!f.substitution_ok(&RatPoly::from_i64s(&[0, 1]), &q(2)).unwrap());
        assert!(!f.substitution_ok(&RatPoly::from_i64s(&[7]), &q(2)).unwrap());
        assert!(!f.substitution_ok(&RatPoly::zero(), &q(2)).unwrap());
    }

    #[test]
    fn substitute_examples() {
        let g = shifted_trinomial(3, 4).substitute(&RatPoly::from_i64s(&[0, 0, 1]));
        assert_eq!(g, RatPoly::from_i64s(&[1, 0, 0, 3, 0, 0, 0, 0, 3]));
        // 1 + x y^(n-1) + y^n at a = 2x^2 gives 1 + 2^(n-1) x^(2n-1) + 2^n x^(2n)
        let n = 5;
        let mut rows = vec![RatPoly::zero(); n + 1];
        rows[0] = RatPoly::from_i64s(&[1]);
        rows[n - 1] = RatPoly::from_i64s(&[0, 1]);
        rows[n] = RatPoly::from_i64s(&[1]);
        let g = BiPoly::new(rows).substitute(&RatPoly::from_i64s(&[0, 0, 2]));
        let mut want = vec![0i64; 2 * n + 1];
        want[0] = 1;
        want[2 * n - 1] = 1 << (n - 1);
        want[2 * n] = 1 << n;
        assert_eq!(g, RatPoly::from_i64s(&want));
        let f = binomial_power(3);
        assert_eq!(f.substitute(&RatPoly::zero()), f.coeff(0));
    }

    #[test]
    fn reciprocal_examples() {
        let h = BiPoly::from_rows(&[&[1], &[0, 1], &[], &[], &[1]]);
        let want = BiPoly::from_rows(&[&[1], &[], &[], &[0, 1], &[1]]);
        assert_eq!(h.reciprocal_y().unwrap(), want);
        let sym = BiPoly::from_rows(&[&[1], &[0, 3], &[1]]);
        assert_eq!(sym.reciprocal_y().unwrap(), sym);
        let y2 = BiPoly::from_rows(&[&[], &[], &[1]]);
        assert_eq!(y2.reciprocal_y().unwrap(), BiPoly::from_rows(&[&[1]]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(BiPoly::from_rows(&[&[1], &[0, 1], &[], &[], &[], &[1]]).to_string(), "1 + x*y + y^5");
        assert_eq!(binomial_power(2).to_string(), "x^2 + 2*x*y + y^2");
        let half = BigRational::new(1.into(), 2.into());
        let r = RatPoly::new(vec![q(2), -half, q(0), q(1)]);
        assert_eq!(r.to_string(), "x^3 - 1/2*x + 2");
    }

    #[test]
    fn primitive_int_split() {
        let r = RatPoly::new(vec![BigRational::new(1.into(), 2.into()), BigRational::new((-3).into(), 4.into())]);
        let (s, p) = r.to_primitive_int();
        assert_eq!(p, IntPoly::from_i64s(&[-2, 3]));
        assert_eq!(&RatPoly::from(&p).scale(&s), &r);
    }

    fn arb_ratpoly() -> impl Strategy<Value = RatPoly> {
        prop::collection::vec(-5i64..=5, 0..5).prop_map(|c| RatPoly::from_i64s(&c))
    }

    fn arb_bipoly() -> impl Strategy<Value = BiPoly> {
        prop::collection::vec(arb_ratpoly(), 0..4).prop_map(BiPoly::new)
    }

    proptest! {
        #[test]
        fn degree_is_additive(a in arb_ratpoly(), b in arb_ratpoly()) {
            let prod = &a * &b;
            match (a.degree(), b.degree()) {
                (Some(da), Some(db)) => prop_assert_eq!(prod.degree(), Some(da + db)),
                _ => prop_assert!(prod.is_zero()),
            }
        }

        #[test]
        fn degree_is_ultrametric(a in arb_ratpoly(), b in arb_ratpoly()) {
            prop_assert!((&a + &b).degree() <= a.degree().max(b.degree()));
        }

        #[test]
        fn substitution_is_multiplicative(f in arb_bipoly(), g in arb_bipoly(), a in arb_ratpoly()) {
            let lhs = (&f * &g).substitute(&a);
            let rhs = &f.substitute(&a) * &g.substitute(&a);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn exact_division_recovers_factor(f in arb_bipoly(), g in arb_bipoly()) {
            prop_assume!(!g.is_zero());
            let prod = &f * &g;
            prop_assert_eq!(prod.div_exact(&g), Some(f));
        }
    }
}
