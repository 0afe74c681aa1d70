//! Brute-force factorization of integer polynomials into irreducibles.
//!
//! Content, squarefree kernel, the factor `x`, rational roots, then
//! Kronecker interpolation for each degree `2..=deg/2`. Irreducible factors
//! are found in increasing degree, so each one found is irreducible as soon as
//! it divides. Multiplicities are recovered by repeated exact division.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::numeric::{divisors_of, factorize};
use crate::{Config, Error, IntPoly, Result};

/// `content * prod factor^multiplicity`, factors primitive with positive
/// leading coefficient, sorted by degree then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFactorization {
    pub content: BigInt,
    pub factors: Vec<(IntPoly, u32)>,
}

impl PolyFactorization {
    /// Number of irreducible nonconstant factors with multiplicity.
    pub fn count(&self) -> u64 {
        self.factors.iter().map(|(_, e)| u64::from(*e)).sum()
    }

    pub fn product(&self) -> IntPoly {
        self.factors
            .iter()
            .fold(IntPoly::constant(self.content.clone()), |acc, (g, e)| {
                (0..*e).fold(acc, |acc, _| &acc * g)
            })
    }
}

impl fmt::Display for PolyFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.content.is_one() || self.factors.is_empty() {
            parts.push(self.content.to_string());
        }
        for (g, e) in &self.factors {
            match e {
                1 => parts.push(format!("({g})")),
                _ => parts.push(format!("({g})^{e}")),
            }
        }
        f.write_str(&parts.join(" * "))
    }
}

pub fn factor_poly(f: &IntPoly, cfg: &Config) -> Result<PolyFactorization> {
    let Some(lead) = f.leading() else {
        return Err(Error::ZeroPolynomial);
    };
    let prim = f.primitive_part();
    let mut content = f.content();
    if lead.is_negative() {
        content = -content;
    }
    if prim.degree() == Some(0) {
        return Ok(PolyFactorization {
            content: lead.clone(),
            factors: Vec::new(),
        });
    }

    let kernel = prim
        .div_exact(&prim.gcd(&prim.derivative()))
        .expect("gcd divides")
        .primitive_part();
    let kd = kernel.degree().unwrap_or(0);
    if kd > cfg.oracle_degree_cap {
        return Err(Error::OracleIncomplete(format!(
            "squarefree degree {kd} exceeds cap {}",
            cfg.oracle_degree_cap
        )));
    }

    let mut search = Search { cfg, visited: 0 };
    let irreducibles = search.split_squarefree(kernel)?;

    let mut factors = Vec::new();
    let mut rest = prim;
    for g in irreducibles {
        let mut e = 0;
        while let Some(q) = rest.div_exact(&g) {
            rest = q;
            e += 1;
        }
        factors.push((g, e));
    }
    debug_assert_eq!(rest.degree(), Some(0));
    factors.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())));
    Ok(PolyFactorization { content, factors })
}

/// Sum of multiplicities of nonconstant irreducible factors.
pub fn count_irreducible_factors(f: &IntPoly, cfg: &Config) -> Result<u64> {
    Ok(factor_poly(f, cfg)?.count())
}

/// Distinct rational roots of a nonzero polynomial, ascending.
pub fn rational_roots(f: &IntPoly, cfg: &Config) -> Result<Vec<BigRational>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut k = f.primitive_part();
    let mut roots = Vec::new();
    let x = IntPoly::from_i64s(&[0, 1]);
    if k.coeff(0).is_zero() {
        roots.push(BigRational::zero());
        while k.coeff(0).is_zero() {
            k = k.div_exact(&x).expect("x divides");
        }
    }
    let mut search = Search { cfg, visited: 0 };
    for g in search.rational_roots(&k)? {
        roots.push(BigRational::new(-g.coeff(0), g.coeff(1)));
    }
    roots.sort();
    Ok(roots)
}

struct Search<'a> {
    cfg: &'a Config,
    visited: u64,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<()> {
        self.visited += 1;
        if self.visited > self.cfg.oracle_budget {
            return Err(Error::OracleIncomplete(format!(
                "interpolation budget of {} candidates exhausted",
                self.cfg.oracle_budget
            )));
        }
        Ok(())
    }

    /// Irreducible factors of a primitive squarefree polynomial with positive
    /// leading coefficient.
    fn split_squarefree(&mut self, mut k: IntPoly) -> Result<Vec<IntPoly>> {
        let mut out = Vec::new();
        let x = IntPoly::from_i64s(&[0, 1]);
        if k.coeff(0).is_zero() {
            k = k.div_exact(&x).expect("x divides");
            out.push(x);
        }
        for g in self.rational_roots(&k)? {
            k = k.div_exact(&g).expect("root factor divides");
            out.push(g);
        }
        let mut s = 2;
        while let Some(n) = k.degree().filter(|&n| 2 * s <= n) {
            match self.kronecker(&k, s, n)? {
                Some(g) => {
                    k = k.div_exact(&g).expect("candidate divides");
                    out.push(g);
                }
                None => s += 1,
            }
        }
        if k.degree().is_some_and(|n| n >= 1) {
            out.push(k);
        }
        Ok(out)
    }

    /// Linear factors `q x - p` from roots `p/q` with `p | a_0`, `q | a_n`.
    fn rational_roots(&mut self, k: &IntPoly) -> Result<Vec<IntPoly>> {
        let Some(n) = k.degree().filter(|&n| n >= 1) else {
            return Ok(Vec::new());
        };
        let a0 = k.coeff(0);
        let an = k.coeff(n);
        let ps = divisors_of(&a0, self.cfg)?;
        let qs = divisors_of(&an, self.cfg)?;
        let mut out = Vec::new();
        for q in &qs {
            for p in &ps {
                if !p.gcd(q).is_one() {
                    continue;
                }
                for sign in [Sign::Plus, Sign::Minus] {
                    self.tick()?;
                    let p = BigInt::from_biguint(sign, p.clone());
                    let q = BigInt::from(q.clone());
                    // q^n f(p/q) as an integer
                    let mut acc = BigInt::zero();
                    let mut qpow = BigInt::one();
                    for c in k.coeffs().iter().rev() {
                        acc = acc * &p + c * &qpow;
                        qpow *= &q;
                    }
                    if acc.is_zero() {
                        out.push(IntPoly::new(vec![-p, q]));
                    }
                }
            }
        }
        Ok(out)
    }

    /// A factor of degree exactly `s`, given that `k` has no factor of
    /// smaller degree and no integer roots.
    fn kronecker(&mut self, k: &IntPoly, s: usize, n: usize) -> Result<Option<IntPoly>> {
        let nodes = self.pick_nodes(k, s, n)?;
        let leads = divisors_of(&k.coeff(n), self.cfg)?;
        let mut state = Interp {
            nodes: &nodes,
            newton: Vec::with_capacity(s + 1),
        };
        for lead in leads {
            if let Some(g) = self.descend(k, &mut state, &BigInt::from(lead))? {
                return Ok(Some(g));
            }
        }
        Ok(None)
    }

    /// `s + 1` nonroot points from `0, 1, -1, 2, -2, ...` with the fewest
    /// divisors of `k(x)`, ordered by that count.
    fn pick_nodes(&mut self, k: &IntPoly, s: usize, n: usize) -> Result<Vec<Node>> {
        let pool = (2 * s + 3).max(n + 1);
        let mut cands = Vec::with_capacity(pool);
        let mut t: i64 = 0;
        while cands.len() < pool {
            let x = BigInt::from(t);
            let v = k.eval(&x);
            if !v.is_zero() {
                let divs = factorize(&v, self.cfg)?.divisors();
                cands.push(Node { x, value: v, divisors: divs });
            }
            t = if t > 0 { -t } else { 1 - t };
        }
        cands.sort_by_key(|c| c.divisors.len());
        cands.truncate(s + 1);
        Ok(cands)
    }

    fn descend(&mut self, k: &IntPoly, st: &mut Interp<'_>, lead: &BigInt) -> Result<Option<IntPoly>> {
        let t = st.newton.len();
        let s = st.nodes.len() - 1;
        if t == s {
            self.tick()?;
            let mut newton = st.newton.clone();
            newton.push(lead.clone());
            let last = &st.nodes[s];
            let v = newton_eval(st.nodes, &newton, &last.x);
            if v.is_zero() || !last.value.is_multiple_of(&v) {
                return Ok(None);
            }
            let g = newton_to_poly(st.nodes, &newton);
            if !g.is_primitive() {
                return Ok(None);
            }
            return Ok(k.div_exact(&g).map(|_| g));
        }
        let node = &st.nodes[t];
        for d in &node.divisors {
            for sign in [Sign::Plus, Sign::Minus] {
                self.tick()?;
                let v = BigInt::from_biguint(sign, d.clone());
                if let Some(c) = st.next_coeff(&v) {
                    st.newton.push(c);
                    let found = self.descend(k, st, lead)?;
                    st.newton.pop();
                    if found.is_some() {
                        return Ok(found);
                    }
                }
            }
        }
        Ok(None)
    }
}

struct Node {
    x: BigInt,
    value: BigInt,
    divisors: Vec<BigUint>,
}

struct Interp<'a> {
    nodes: &'a [Node],
    newton: Vec<BigInt>,
}

impl Interp<'_> {
    /// Next Newton coefficient when node `t` takes value `v`; divided
    /// differences of an integer polynomial at integer nodes are integers,
    /// so a non-integral one rules the branch out.
    fn next_coeff(&self, v: &BigInt) -> Option<BigInt> {
        let t = self.newton.len();
        let xt = &self.nodes[t].x;
        let mut acc = BigInt::zero();
        let mut basis = BigInt::one();
        for (u, c) in self.newton.iter().enumerate() {
            acc += c * &basis;
            basis *= xt - &self.nodes[u].x;
        }
        let (q, r) = (v - acc).div_rem(&basis);
        r.is_zero().then_some(q)
    }
}

fn newton_eval(nodes: &[Node], newton: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for (u, c) in newton.iter().enumerate().rev() {
        acc = acc * (x - &nodes[u].x) + c;
    }
    acc
}

fn newton_to_poly(nodes: &[Node], newton: &[BigInt]) -> IntPoly {
    let mut acc = IntPoly::zero();
    for (u, c) in newton.iter().enumerate().rev() {
        let lin = IntPoly::new(vec![-nodes[u].x.clone(), BigInt::one()]);
        acc = &(&acc * &lin) + &IntPoly::constant(c.clone());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn factor(c: &[i64]) -> PolyFactorization {
        factor_poly(&p(c), &Config::default()).unwrap()
    }

    #[test]
    fn known_factorizations() {
        let fz = factor(&[-1, -2, -1, 0, 1]);
        assert_eq!(fz.factors, vec![(p(&[-1, -1, 1]), 1), (p(&[1, 1, 1]), 1)]);
        assert!(fz.content.is_one());

        let fz = factor(&[1; 9]);
        assert_eq!(fz.factors, vec![(p(&[1, 1, 1]), 1), (p(&[1, 0, 0, 1, 0, 0, 1]), 1)]);

        // (3 - x + 3x^2)(-3 + x + 3x^2) = -9 + 6x - x^2 + 9x^4
        let fz = factor(&[9, -6, 1, 0, -9]);
        assert_eq!(fz.content, BigInt::from(-1));
        assert_eq!(fz.factors, vec![(p(&[-3, 1, 3]), 1), (p(&[3, -1, 3]), 1)]);
    }

    #[test]
    fn counts() {
        let cfg = Config::default();
        let cube = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[-1, 1]);
        assert_eq!(count_irreducible_factors(&cube, &cfg).unwrap(), 3);
        assert_eq!(count_irreducible_factors(&p(&[5, 0, 0, 0, 0, 0, 0, 6, 1]), &cfg).unwrap(), 2);
        assert_eq!(count_irreducible_factors(&p(&[1, 1, 1]), &cfg).unwrap(), 1);
        assert_eq!(count_irreducible_factors(&p(&[6]), &cfg).unwrap(), 0);
        assert_eq!(factor_poly(&IntPoly::zero(), &cfg), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn table_rows_small_degree() {
        // x^(2n) - (x+1)^2 = (x^n - x - 1)(x^n + x + 1); counts 2 for n = 2..6
        let cfg = Config::default();
        let want = [2u64, 2, 2, 3, 2];
        for (n, &w) in (2..=6).zip(&want) {
            let mut c = vec![0i64; 2 * n + 1];
            c[0] = -1;
            c[1] = -2;
            c[2] = -1;
            c[2 * n] = 1;
            assert_eq!(count_irreducible_factors(&p(&c), &cfg).unwrap(), w, "n = {n}");
        }
    }

    #[test]
    fn content_and_powers() {
        // 6 (x^2 + 1)^2 x
        let base = p(&[1, 0, 1]);
        let f = (&(&base * &base) * &p(&[0, 1])).scale(&BigInt::from(6));
        let fz = factor_poly(&f, &Config::default()).unwrap();
        assert_eq!(fz.content, BigInt::from(6));
        assert_eq!(fz.factors, vec![(p(&[0, 1]), 1), (base, 2)]);
        assert_eq!(fz.product(), f);
    }

    #[test]
    fn degree_cap_and_budget() {
        let mut c = vec![0i64; 18];
        c[0] = 1;
        c[17] = 1;
        let cfg = Config::default();
        assert!(matches!(factor_poly(&p(&c), &cfg), Err(Error::OracleIncomplete(_))));
        let tight = Config { oracle_budget: 3, ..cfg };
        let r = factor_poly(&p(&[1, 0, 0, 0, 1]), &tight);
        assert!(matches!(r, Err(Error::OracleIncomplete(_))));
    }

    fn arb_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-9i64..=9, 1..5).prop_map(|c| p(&c))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn product_identity_and_idempotence(a in arb_poly(), b in arb_poly()) {
            let f = &a * &b;
            prop_assume!(!f.is_zero());
            let cfg = Config::default();
            let fz = factor_poly(&f, &cfg).unwrap();
            prop_assert_eq!(fz.product(), f);
            for (g, _) in &fz.factors {
                let again = factor_poly(g, &cfg).unwrap();
                prop_assert_eq!(again.factors.len(), 1);
                prop_assert_eq!(again.count(), 1);
            }
            let lower = |q: &IntPoly| if q.degree().unwrap_or(0) > 0 { 1 } else { 0 };
            prop_assert!(fz.count() >= lower(&a) + lower(&b));
        }
    }
}
