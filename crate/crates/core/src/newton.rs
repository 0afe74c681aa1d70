//! Newton polygons of bivariate polynomials under the degree valuation
//! `v(a) = -deg a`, edge merging for products, and the factor-degree bound
//! read off a single primitive edge.

use num_integer::Integer as _;
use num_rational::Ratio;
use serde_json::{json, Value};

use crate::certificates::{degree_vacuous, BoundKind, Certificate, TheoremId, Witnesses};
use crate::{BiPoly, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub di: i64,
    pub dv: i64,
    pub slope: Ratio<i64>,
}

impl Edge {
    fn new(di: i64, dv: i64) -> Edge {
        Edge {
            di,
            dv,
            slope: Ratio::new(dv, di),
        }
    }

    /// No lattice point strictly inside the segment.
    pub fn is_primitive(&self) -> bool {
        self.di.gcd(&self.dv) == 1
    }
}

/// Lower convex hull with strictly increasing edge slopes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NewtonPolygon {
    vertices: Vec<(i64, i64)>,
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i128 {
    let (ax, ay) = ((a.0 - o.0) as i128, (a.1 - o.1) as i128);
    let (bx, by) = ((b.0 - o.0) as i128, (b.1 - o.1) as i128);
    ax * by - ay * bx
}

impl NewtonPolygon {
    /// Lower hull of points with distinct first coordinates.
    pub fn from_points(mut points: Vec<(i64, i64)>) -> NewtonPolygon {
        points.sort_unstable();
        let mut hull: Vec<(i64, i64)> = Vec::with_capacity(points.len());
        for p in points {
            while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                hull.pop();
            }
            hull.push(p);
        }
        NewtonPolygon { vertices: hull }
    }

    /// Path from `start` along `edges` in the given order, with consecutive
    /// edges of equal slope fused.
    pub fn from_edges(start: (i64, i64), edges: &[Edge]) -> NewtonPolygon {
        let mut vertices = vec![start];
        let mut last_slope = None;
        for e in edges {
            let (i, v) = *vertices.last().unwrap();
            let next = (i + e.di, v + e.dv);
            if last_slope == Some(e.slope) {
                *vertices.last_mut().unwrap() = next;
            } else {
                vertices.push(next);
            }
            last_slope = Some(e.slope);
        }
        NewtonPolygon { vertices }
    }

    pub fn vertices(&self) -> &[(i64, i64)] {
        &self.vertices
    }

    pub fn start(&self) -> Option<(i64, i64)> {
        self.vertices.first().copied()
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.vertices
            .windows(2)
            .map(|w| Edge::new(w[1].0 - w[0].0, w[1].1 - w[0].1))
            .collect()
    }

    /// `{vertices: [[i, v], ...], edges: [{di, dv, slope}, ...]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "vertices": self.vertices.iter().map(|&(i, v)| json!([i, v])).collect::<Vec<_>>(),
            "edges": self.edges().iter().map(|e| json!({
                "di": e.di,
                "dv": e.dv,
                "slope": e.slope.to_string(),
            })).collect::<Vec<_>>(),
        })
    }

    /// No support point of `f` lies strictly below the polygon.
    pub fn is_below(&self, points: &[(i64, i64)]) -> bool {
        points.iter().all(|&p| {
            self.vertices
                .windows(2)
                .filter(|w| w[0].0 <= p.0 && p.0 <= w[1].0)
                .all(|w| cross(w[0], w[1], p) >= 0)
        })
    }
}

/// Points `(i, -deg a_i)` for the nonzero coefficients.
pub fn support(f: &BiPoly) -> Vec<(i64, i64)> {
    f.coeffs()
        .iter()
        .enumerate()
        .filter_map(|(i, a)| a.degree().map(|d| (i as i64, -(d as i64))))
        .collect()
}

fn check_ends(f: &BiPoly) -> Result<usize> {
    let n = f.y_degree().ok_or(Error::ZeroPolynomial)?;
    if f.coeffs()[0].is_zero() {
        return Err(Error::InvalidArgument("requires a_0(x) != 0".into()));
    }
    Ok(n)
}

pub fn newton_polygon(f: &BiPoly) -> Result<NewtonPolygon> {
    check_ends(f)?;
    Ok(NewtonPolygon::from_points(support(f)))
}

/// Polygon built from the edges of both inputs in slope order, anchored at
/// the sum of their first vertices.
pub fn dumas_merge(p: &NewtonPolygon, q: &NewtonPolygon) -> NewtonPolygon {
    let (a, b) = (p.start().unwrap_or((0, 0)), q.start().unwrap_or((0, 0)));
    let mut edges = p.edges();
    edges.extend(q.edges());
    edges.sort_by_key(|e| e.slope);
    NewtonPolygon::from_edges((a.0 + b.0, a.1 + b.1), &edges)
}

/// Some factor has `y`-degree at most `n - j + l`, where `a_j` is a nonzero
/// constant, `l < j` is the least index maximizing `deg a_i / (j - i)` and
/// `gcd(j - l, deg a_l) = 1`. The bound is minimized over `j`.
pub fn theorem5_bound(f: &BiPoly) -> Result<Option<Certificate>> {
    let n = check_ends(f)?;
    let coeffs = f.coeffs();
    let mut best: Option<(usize, usize, usize)> = None;
    for j in 1..=n {
        if !coeffs[j].is_unit() {
            continue;
        }
        let mut top: Option<(Ratio<i64>, usize)> = None;
        for (i, a) in coeffs[..j].iter().enumerate() {
            let Some(deg) = a.degree() else { continue };
            let r = Ratio::new(deg as i64, (j - i) as i64);
            if top.map_or(true, |(t, _)| r > t) {
                top = Some((r, i));
            }
        }
        let Some((_, l)) = top else { continue };
        let deg_l = coeffs[l].degree().expect("nonzero") as u64;
        if ((j - l) as u64).gcd(&deg_l) != 1 {
            continue;
        }
        let bound = n - j + l;
        if best.map_or(true, |(b, ..)| bound < b) {
            best = Some((bound, j, l));
        }
    }
    Ok(best.map(|(bound, j, l)| {
        let mut cert = Certificate::new(TheoremId::T5, f.to_string(), bound as u64, BoundKind::FactorDegree);
        cert.vacuous = degree_vacuous(bound as u64, n);
        cert.witnesses = Witnesses {
            j: Some(j as u64),
            l: Some(l as u64),
            ..Witnesses::default()
        };
        cert
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::RatPoly;
    use proptest::prelude::*;

    /// 1 + x y + y^n
    fn h(n: usize) -> BiPoly {
        let mut rows = vec![RatPoly::zero(); n + 1];
        rows[0] = RatPoly::from_i64s(&[1]);
        rows[1] = &rows[1] + &RatPoly::from_i64s(&[0, 1]);
        rows[n] = &rows[n] + &RatPoly::from_i64s(&[1]);
        BiPoly::new(rows)
    }

    #[test]
    fn polygon_examples() {
        for n in 2..8 {
            let np = newton_polygon(&h(n)).unwrap();
            assert_eq!(np.vertices(), &[(0, 0), (1, -1), (n as i64, 0)]);
            let slopes: Vec<_> = np.edges().iter().map(|e| e.slope).collect();
            assert_eq!(slopes, vec![Ratio::from_integer(-1), Ratio::new(1, n as i64 - 1)]);
        }
        let flat = BiPoly::from_rows(&[&[3], &[1], &[], &[-2]]);
        assert_eq!(newton_polygon(&flat).unwrap().vertices(), &[(0, 0), (3, 0)]);
        let e = BiPoly::from_rows(&[&[0, 1], &[], &[1]]);
        let edges = newton_polygon(&e).unwrap().edges();
        assert_eq!(edges, vec![Edge::new(2, 1)]);
        assert_eq!(edges[0].slope, Ratio::new(1, 2));
        assert!(newton_polygon(&BiPoly::from_rows(&[&[], &[1]])).is_err());
    }

    #[test]
    fn polygon_json() {
        let v = newton_polygon(&h(3)).unwrap().to_json();
        assert_eq!(
            v.to_string(),
            r#"{"edges":[{"di":1,"dv":-1,"slope":"-1"},{"di":2,"dv":1,"slope":"1/2"}],"vertices":[[0,0],[1,-1],[3,0]]}"#
        );
    }

    #[test]
    fn merge_examples() {
        let p = NewtonPolygon::from_edges((0, 0), &[Edge::new(2, 1)]);
        let q = NewtonPolygon::from_edges((0, 0), &[Edge::new(3, 1)]);
        let m = dumas_merge(&p, &q);
        assert_eq!(m.edges(), vec![Edge::new(3, 1), Edge::new(2, 1)]);
        let point = newton_polygon(&BiPoly::from_rows(&[&[7]])).unwrap();
        assert_eq!(dumas_merge(&p, &point), p);
    }

    #[test]
    fn theorem5_examples() {
        for n in 2..9 {
            let c = theorem5_bound(&h(n)).unwrap().unwrap();
            assert_eq!((c.witnesses.j, c.witnesses.l, c.bound), (Some(n as u64), Some(1), 1));
            assert_eq!(c.bound_kind, BoundKind::FactorDegree);
        }
        for n in 2..6 {
            let f = BiPoly::from_rows(&[&[0, 1], &[1]]).pow(n);
            assert_eq!(theorem5_bound(&f).unwrap(), None);
        }
        // a_1 = x is not a constant, so no j qualifies
        assert_eq!(theorem5_bound(&BiPoly::from_rows(&[&[1], &[0, 1]])).unwrap(), None);
    }

    #[test]
    fn edge_lattice_points() {
        for di in 1..30i64 {
            for dv in -30..30i64 {
                let interior = (1..di).any(|t| (t * dv) % di == 0);
                assert_eq!(Edge::new(di, dv).is_primitive(), !interior, "{di} {dv}");
            }
        }
    }

    fn arb_coeff() -> impl Strategy<Value = RatPoly> {
        prop::collection::vec(-3i64..=3, 0..4).prop_map(|c| RatPoly::from_i64s(&c))
    }

    fn arb_bipoly() -> impl Strategy<Value = BiPoly> {
        (prop::collection::vec(arb_coeff(), 1..5), arb_coeff(), arb_coeff()).prop_map(|(mut rows, a0, an)| {
            let nz = |r: RatPoly| if r.is_zero() { RatPoly::one() } else { r };
            rows[0] = nz(a0);
            rows.push(nz(an));
            BiPoly::new(rows)
        })
    }

    proptest! {
        #[test]
        fn merge_is_polygon_of_product(g in arb_bipoly(), h in arb_bipoly()) {
            let merged = dumas_merge(&newton_polygon(&g).unwrap(), &newton_polygon(&h).unwrap());
            prop_assert_eq!(merged, newton_polygon(&(&g * &h)).unwrap());
        }

        #[test]
        fn hull_is_below_support(f in arb_bipoly()) {
            let np = newton_polygon(&f).unwrap();
            prop_assert!(np.is_below(&support(&f)));
            let slopes: Vec<_> = np.edges().iter().map(|e| e.slope).collect();
            prop_assert!(slopes.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
