//! Bounds for polynomials in `Q[x][y]`: the substitution bound, the search
//! for factors linear in `y`, and the irreducibility verdict that combines a
//! factor-degree bound of 1 with the absence of such factors.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::certificates::{count_vacuous, BoundKind, Certificate, TheoremId, Witnesses};
use crate::newton::theorem5_bound;
use crate::oracle::{factor_poly, rational_roots};
use crate::{BiPoly, Config, Error, IntPoly, RatPoly, Result};

/// At most `nu_a` irreducible factors, where `nu_a` counts the nonconstant
/// irreducible factors of `f(x, a(x))` and `rho^deg a >= H_f + 2`.
pub fn theorem4_bound(f: &BiPoly, a: &RatPoly, rho: &BigRational, cfg: &Config) -> Result<Certificate> {
    let h = f.rho_height(rho)?;
    if !f.substitution_ok(a, rho)? {
        return Err(Error::HypothesisUnsatisfiable(format!(
            "rho^deg a must be at least H_f + 2 = {}",
            h.value() + BigRational::from_integer(2.into())
        )));
    }
    let g = f.substitute(a);
    if g.is_zero() {
        return Err(Error::HypothesisUnsatisfiable("f(x, a(x)) vanishes".into()));
    }
    let (scale, gi) = g.to_primitive_int();
    let nu = factor_poly(&gi, cfg)?.count();
    let mut cert = Certificate::new(TheoremId::T4, f.to_string(), nu, BoundKind::FactorCount);
    cert.vacuous = count_vacuous(nu, f.total_degree().unwrap_or(0));
    if !scale.is_one() {
        cert.diagnostics.push(format!("f(x, a(x)) = {scale} * ({gi})"));
    }
    cert.witnesses = Witnesses {
        rho: Some(rho.to_string()),
        subst: Some(a.to_string()),
        nu_a: Some(nu),
        ..Witnesses::default()
    };
    Ok(cert)
}

/// Monic divisors of a nonzero `a` in `Q[x]`, in order of degree.
fn monic_divisors(a: &RatPoly, cfg: &Config) -> Result<Vec<RatPoly>> {
    let (_, ai) = a.to_primitive_int();
    let fz = factor_poly(&ai, cfg)?;
    let mut out = vec![IntPoly::constant(BigInt::one())];
    for (g, e) in &fz.factors {
        let len = out.len();
        let mut power = IntPoly::constant(BigInt::one());
        for _ in 0..*e {
            power = &power * g;
            for i in 0..len {
                let next = &out[i] * &power;
                out.push(next);
            }
        }
    }
    let mut out: Vec<RatPoly> = out.iter().map(|p| RatPoly::from(p).monic()).collect();
    out.sort_by(|p, q| p.degree().cmp(&q.degree()).then_with(|| p.coeffs().cmp(q.coeffs())));
    Ok(out)
}

/// A factor `b_0(x) + b_1(x) y` of `f` in `Q[x, y]`, if one exists.
///
/// In a factor with coprime coefficients, `b_1` divides `a_n` and `b_0`
/// divides `a_0`. With `b_1` monic, `b_0 = c * D` for a monic divisor `D` of
/// `a_0`, and at any `x_0` avoiding the zeros of `a_0 a_n` the value
/// `-b_0(x_0) / b_1(x_0)` is a rational root of `f(x_0, y)`. That root fixes
/// `c`, so every candidate is tested by one exact division.
pub fn linear_y_factor_test(f: &BiPoly, cfg: &Config) -> Result<Option<BiPoly>> {
    let n = f.y_degree().ok_or(Error::ZeroPolynomial)?;
    let (a0, an) = (f.coeff(0), f.coeff(n));
    if a0.is_zero() {
        return Err(Error::InvalidArgument("requires a_0(x) != 0".into()));
    }
    match n {
        0 => return Ok(None),
        1 => return Ok(Some(f.clone())),
        _ => {}
    }
    let x0 = (0i64..)
        .flat_map(|t| [t, -t - 1])
        .map(|t| BigRational::from_integer(t.into()))
        .find(|t| !a0.eval(t).is_zero() && !an.eval(t).is_zero())
        .expect("finitely many zeros");
    let (_, special) = f.eval_x(&x0).to_primitive_int();
    let roots = rational_roots(&special, cfg)?;
    if roots.is_empty() {
        return Ok(None);
    }
    let lows = monic_divisors(&a0, cfg)?;
    let highs = monic_divisors(&an, cfg)?;
    for b1 in &highs {
        for d in &lows {
            let ratio = b1.eval(&x0) / d.eval(&x0);
            for r in &roots {
                let c = -(r * &ratio);
                let cand = BiPoly::new(vec![d.scale(&c), b1.clone()]);
                if f.div_exact(&cand).is_some() {
                    return Ok(Some(cand));
                }
            }
        }
    }
    Ok(None)
}

/// Irreducibility of `f` when some factor must have `y`-degree at most 1,
/// the `y`-content is a unit and no factor is linear in `y`.
pub fn irreducibility_certificate(f: &BiPoly, cfg: &Config) -> Result<Option<Certificate>> {
    let Some(t5) = theorem5_bound(f)? else {
        return Ok(None);
    };
    if t5.bound > 1 || !f.content_y().is_unit() {
        return Ok(None);
    }
    let n = f.y_degree().expect("nonzero");
    if t5.bound == 1 && n > 1 && linear_y_factor_test(f, cfg)?.is_some() {
        return Ok(None);
    }
    let mut cert = Certificate::new(TheoremId::T5X, f.to_string(), 1, BoundKind::FactorCount);
    cert.vacuous = count_vacuous(1, f.total_degree().unwrap_or(0));
    cert.witnesses = Witnesses {
        j: t5.witnesses.j,
        l: t5.witnesses.l,
        ..Witnesses::default()
    };
    cert.diagnostics.push(format!("factor of y-degree at most {}; none of y-degree 1", t5.bound));
    Ok(Some(cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificates::{theorem_d_degree_bound, verify};
    use proptest::prelude::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn rp(c: &[i64]) -> RatPoly {
        RatPoly::from_i64s(c)
    }

    /// c0 + c1 x y + cn y^n with constant c0, cn
    fn trinomial(c0: i64, c1: i64, cn: i64, n: usize) -> BiPoly {
        let mut rows = vec![RatPoly::zero(); n + 1];
        rows[0] = rp(&[c0]);
        rows[1] = &rows[1] + &rp(&[0, c1]);
        rows[n] = &rows[n] + &rp(&[cn]);
        BiPoly::new(rows)
    }

    fn binomial_power(n: u32) -> BiPoly {
        BiPoly::from_rows(&[&[0, 1], &[1]]).pow(n)
    }

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn theorem4_examples() {
        for p in [2, 3, 5, 7] {
            for n in 2..5 {
                let c = theorem4_bound(&trinomial(1, p, p, n), &rp(&[0, 0, 1]), &q(2), &cfg()).unwrap();
                assert_eq!(c.bound, 1, "p = {p}, n = {n}");
                verify(&c, &cfg()).unwrap();
            }
        }
        for n in 1..4u32 {
            let mut a = vec![0i64; n as usize + 2];
            a[0] = 2;
            a[1] = -1;
            a[n as usize + 1] = 1;
            let c = theorem4_bound(&binomial_power(n), &rp(&a), &q(2), &cfg()).unwrap();
            assert_eq!(c.witnesses.nu_a, Some(u64::from(n)));
        }
        for n in 2..7 {
            let ht = trinomial(1, 1, 1, n).reciprocal_y().unwrap();
            let c = theorem4_bound(&ht, &rp(&[0, 0, 2]), &q(2), &cfg()).unwrap();
            assert_eq!(c.bound, 1);
        }
        let err = theorem4_bound(&trinomial(1, 3, 3, 3), &rp(&[0, 1]), &q(2), &cfg());
        assert!(matches!(err, Err(Error::HypothesisUnsatisfiable(_))));
    }

    #[test]
    fn reversed_value_polynomial_degree_bound() {
        // g~(x) = 2^n + 2^(n-1) x + x^(2n) has a factor of degree <= 1 at p = 2
        for n in 2..7u32 {
            let ht = trinomial(1, 1, 1, n as usize).reciprocal_y().unwrap();
            let g = ht.substitute(&rp(&[0, 0, 2]));
            let (_, gi) = g.to_primitive_int();
            let c = theorem_d_degree_bound(&gi.reciprocal().unwrap(), &BigInt::from(2), &cfg()).unwrap().unwrap();
            assert_eq!(c.bound, 1);
        }
    }

    #[test]
    fn linear_factor_examples() {
        for n in 2..9 {
            assert_eq!(linear_y_factor_test(&trinomial(1, 1, 1, n), &cfg()).unwrap(), None);
        }
        let sq = binomial_power(2);
        assert_eq!(linear_y_factor_test(&sq, &cfg()).unwrap(), Some(binomial_power(1)));
        let lin = BiPoly::from_rows(&[&[1], &[0, 1]]);
        assert_eq!(linear_y_factor_test(&lin, &cfg()).unwrap(), Some(lin));
        // (x^2 + 3 y)(1 + x y^2)
        let f = &BiPoly::from_rows(&[&[0, 0, 1], &[3]]) * &BiPoly::from_rows(&[&[1], &[], &[0, 1]]);
        let found = linear_y_factor_test(&f, &cfg()).unwrap().unwrap();
        assert!(f.div_exact(&found).is_some());
        assert_eq!(found.y_degree(), Some(1));
    }

    #[test]
    fn composite_verdict() {
        for n in 2..9 {
            let h = trinomial(1, 1, 1, n);
            let c = irreducibility_certificate(&h, &cfg()).unwrap().unwrap();
            assert_eq!((c.theorem, c.bound), (TheoremId::T5X, 1));
            verify(&c, &cfg()).unwrap();
        }
        assert_eq!(irreducibility_certificate(&binomial_power(3), &cfg()).unwrap(), None);
    }

    fn arb_row() -> impl Strategy<Value = RatPoly> {
        prop::collection::vec(-4i64..=4, 0..4).prop_map(|c| rp(&c))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn substitution_degree_bound(rows in prop::collection::vec(arb_row(), 1..5), a in arb_row()) {
            let f = BiPoly::new(rows);
            prop_assume!(!f.is_zero());
            let g = f.substitute(&a);
            let n = f.y_degree().unwrap();
            let da = a.degree().unwrap_or(0);
            let top = f.coeffs().iter().filter_map(RatPoly::degree).max().unwrap_or(0);
            prop_assert!(g.degree().map_or(true, |dg| dg <= n * da + top));
        }

        #[test]
        fn linear_factor_found_in_products(b0 in arb_row(), b1 in arb_row(), rest in prop::collection::vec(arb_row(), 2..4)) {
            prop_assume!(!b0.is_zero() && !b1.is_zero() && b0.gcd(&b1).is_unit());
            let lin = BiPoly::new(vec![b0, b1]);
            let other = BiPoly::new(rest);
            prop_assume!(other.y_degree().is_some_and(|d| d >= 1) && !other.coeff(0).is_zero());
            let f = &lin * &other;
            let found = linear_y_factor_test(&f, &cfg()).unwrap();
            prop_assert!(found.is_some_and(|g| g.y_degree() == Some(1) && f.div_exact(&g).is_some()));
        }
    }
}
