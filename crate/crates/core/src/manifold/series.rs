//! Composition of the polynomial products with Laurent series arguments,
//! as needed by the Jacobi property where one side of a product is itself
//! a vertex product `b •_x c`.

use std::collections::{BTreeMap, HashMap};

use num::Zero;

use super::{Point, VertexManifold};
use crate::enveloping::Monomial;
use crate::lca::Letter;
use crate::linalg::axpy;
use crate::scalar::Q;

type Scalar = BTreeMap<i64, Q>;

/// `Σ_s coeffs[s] z^s`, exact for exponents up to `hi`; zero below `lo`.
pub(crate) struct Series {
    pub lo: i64,
    pub hi: i64,
    pub coeffs: BTreeMap<i64, Point>,
}

impl Series {
    pub fn constant(p: &Point) -> Series {
        Series { lo: 0, hi: i64::MAX / 4, coeffs: BTreeMap::from([(0, p.clone())]) }
    }

    /// `a •_z b = Σ_n (a •_n b) z^{-n-1}` up to exponent `hi`.
    pub fn product(m: &VertexManifold, a: &Point, b: &Point, hi: i64) -> Series {
        let lo = -m.truncation_bound(a, b);
        let coeffs = (lo..=hi).map(|s| (s, m.product(a, b, -s - 1))).filter(|(_, p)| !p.is_empty()).collect();
        Series { lo, hi, coeffs }
    }

    fn letters(&self) -> Vec<Letter> {
        let mut out: Vec<Letter> = self.coeffs.values().flat_map(|p| p.keys().copied()).collect();
        out.sort();
        out.dedup();
        out
    }

    fn coordinate(&self, l: Letter) -> Scalar {
        self.coeffs.iter().filter_map(|(s, p)| p.get(&l).map(|c| (*s, c.clone()))).collect()
    }
}

fn mul(a: &Scalar, b: &Scalar, cap: i64) -> Scalar {
    let mut out = Scalar::new();
    for (s, x) in a {
        for (t, y) in b {
            if s + t > cap {
                break;
            }
            let e = out.entry(s + t).or_insert_with(Q::zero);
            *e += x * y;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

struct Powers<'a> {
    series: &'a Series,
    cap: i64,
    memo: HashMap<Monomial, Scalar>,
    coords: HashMap<Letter, Scalar>,
}

impl<'a> Powers<'a> {
    fn new(series: &'a Series, cap: i64) -> Self {
        Powers { series, cap, memo: HashMap::new(), coords: HashMap::new() }
    }

    /// `X(z)^k` truncated above `cap`.
    fn get(&mut self, k: &Monomial) -> Scalar {
        if let Some(s) = self.memo.get(k) {
            return s.clone();
        }
        let out = match k.split_last() {
            None => Scalar::from([(0, Q::from_integer(1.into()))]),
            Some((l, rest)) => {
                let head = self.get(&rest.iter().copied().collect());
                let series = self.series;
                let c = self.coords.entry(*l).or_insert_with(|| series.coordinate(*l)).clone();
                mul(&head, &c, self.cap)
            }
        };
        self.memo.insert(k.clone(), out.clone());
        out
    }
}

/// Coefficient of `z^e` in `F^p(X(z), Y(z))`.
pub(crate) fn compose(m: &VertexManifold, x: &Series, y: &Series, p: i64, e: i64) -> Point {
    let n = m.degree() as i64;
    let v = x.lo.min(y.lo).min(0);
    let cap = e - (n - 1) * v;
    assert!(x.hi >= cap && y.hi >= cap, "series truncated below the needed order");
    let (mut px, mut py) = (Powers::new(x, cap), Powers::new(y, cap));
    let mut out = Point::new();
    for (k, kp) in m.pairs_on(&x.letters(), &y.letters()) {
        let (sx, sy) = (px.get(&k), py.get(&kp));
        let mut c = Q::zero();
        for (s, a) in &sx {
            if let Some(b) = sy.get(&(e - s)) {
                c += a * b;
            }
        }
        if !c.is_zero() {
            axpy(&mut out, &c, &m.coefficient(&k, &kp, p));
        }
    }
    out
}
