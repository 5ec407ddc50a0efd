use num::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::series::{compose, Series};
use super::{Point, VertexManifold};
use crate::exec::Exec;
use crate::linalg::axpy;
use crate::render;
use crate::scalar::{binom, qr, sign, Q};

#[derive(Clone, Debug, Serialize)]
pub struct ManifoldCheck {
    pub axiom: &'static str,
    pub checked: usize,
    pub pass: bool,
    /// First failing instance, rendered.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ManifoldReport {
    pub samples: usize,
    pub seed: u64,
    pub window: (i64, i64),
    pub checks: Vec<ManifoldCheck>,
}

impl ManifoldReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Rational point supported on one to three letters of stratum at most 1,
/// with numerators in `[-bound, bound]` and denominators in `1..=3`.
pub fn random_point(m: &VertexManifold, rng: &mut ChaCha8Rng, bound: i64) -> Point {
    let letters = m.frame().letters_up_to(1);
    let size = rng.gen_range(1..=3.min(letters.len()));
    let mut out = Point::new();
    for l in letters.choose_multiple(rng, size) {
        let mut num = 0;
        while num == 0 {
            num = rng.gen_range(-bound..=bound);
        }
        out.insert(*l, qr(num, rng.gen_range(1..=3)));
    }
    out
}

fn show(m: &VertexManifold, p: &Point) -> String {
    render::coords(m.frame().presentation(), &m.vector_of(p))
}

struct Tally {
    axiom: &'static str,
    checked: usize,
    witness: Option<String>,
}

impl Tally {
    fn new(axiom: &'static str) -> Self {
        Tally { axiom, checked: 0, witness: None }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    fn finish(self) -> ManifoldCheck {
        ManifoldCheck { axiom: self.axiom, checked: self.checked, pass: self.witness.is_none(), witness: self.witness }
    }
}

fn combine(acc: &mut Point, c: &Q, p: &Point) {
    if !c.is_zero() {
        axpy(acc, c, p);
    }
}

/// Residual of the Jacobi property at `(l, t, j)`: the coefficient of
/// `x0^{-l-1} x1^{-t-1} x2^{-j-1}`. Inner products enter as whole series in
/// their variable since the outer product is not linear; each sum stops
/// where the valuation of the composed series passes the target exponent.
pub(crate) fn jacobi_residual(m: &VertexManifold, a: &Point, b: &Point, c: &Point, l: i64, t: i64, j: i64) -> Point {
    let n = m.degree() as i64;
    let mut out = Point::new();
    // last index with a possibly nonzero term, given the inner valuation
    let last = |lo: i64, shift: i64, cap: Option<i64>| {
        let hi = -n * lo.min(0) - 1 - shift;
        cap.map_or(hi, |k| hi.min(k))
    };
    let lcap = (l >= 0).then_some(l);
    let tcap = (t >= 0).then_some(t);

    let inner = |u: &Point, w: &Point, top: i64| {
        let lo = -m.truncation_bound(u, w);
        Series::product(m, u, w, top - (n - 1) * lo.min(0))
    };

    let bc = inner(b, c, -j - 1);
    let ca = Series::constant(a);
    for i in 0..=last(bc.lo, j, lcap) {
        let w = sign(i) * binom(l, i as u64);
        combine(&mut out, &w, &compose(m, &ca, &bc, t + l - i, -(j + i) - 1));
    }
    let ac = inner(a, c, -t - 1);
    let cb = Series::constant(b);
    for i in 0..=last(ac.lo, t, lcap) {
        let w = -(sign(l + i) * binom(l, i as u64));
        combine(&mut out, &w, &compose(m, &cb, &ac, j + l - i, -(t + i) - 1));
    }
    let ab = inner(a, b, -l - 1);
    let cc = Series::constant(c);
    for i in 0..=last(ab.lo, l, tcap) {
        let w = -binom(t, i as u64);
        combine(&mut out, &w, &compose(m, &ab, &cc, t + j - i, -(l + i) - 1));
    }
    out
}

/// Runs the four vertex-manifold axioms at `samples` seeded random points:
/// weak truncation (table coefficients past `N_ab`), left identity, creation
/// and the Jacobi property for `(l, t, j)` in `jacobi_range³`.
pub fn check_manifold_axioms(
    m: &VertexManifold,
    samples: usize,
    seed: u64,
    window: (i64, i64),
    coord_bound: i64,
    jacobi_range: (i64, i64),
    exec: Exec,
) -> ManifoldReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<Point> = (0..samples).map(|_| random_point(m, &mut rng, coord_bound)).collect();
    let zero = Point::new();
    let idx: Vec<usize> = (0..samples).collect();

    let mut trunc = Tally::new("weak truncation");
    let rows = exec.map(&idx, |&i| {
        let (a, b) = (&points[i], &points[(i + 1) % samples]);
        let bound = m.truncation_bound(a, b);
        let mut union = a.clone();
        union.extend(b.iter().map(|(l, c)| (*l, c.clone())));
        (bound..bound + 5)
            .map(|n| {
                let bad = m.pairs(&union, &union).into_iter().find(|(k, kp)| !m.coefficient(k, kp, n).is_empty());
                let product = m.product(a, b, n);
                (n, bad, product.is_empty(), bound)
            })
            .collect::<Vec<_>>()
    });
    for (i, row) in rows.into_iter().enumerate() {
        for (n, bad, ok_product, bound) in row {
            trunc.record(bad.is_none() && ok_product, || {
                format!("a = {}, b = {}, n = {n} >= N_ab = {bound}", show(m, &points[i]), show(m, &points[(i + 1) % samples]))
            });
        }
    }

    let mut left = Tally::new("left identity");
    let mut creation = Tally::new("creation");
    for a in &points {
        for n in window.0..=window.1 {
            let got = m.product(&zero, a, n);
            let want = if n == -1 { a.clone() } else { Point::new() };
            left.record(got == want, || format!("0 •_{n} {} = {}", show(m, a), show(m, &got)));
            if n >= -1 {
                let got = m.product(a, &zero, n);
                let want = if n == -1 { a.clone() } else { Point::new() };
                creation.record(got == want, || format!("{} •_{n} 0 = {}", show(m, a), show(m, &got)));
            }
        }
    }

    let mut jacobi = Tally::new("jacobi");
    let mut cases = Vec::new();
    for i in 0..samples {
        for l in jacobi_range.0..=jacobi_range.1 {
            for t in jacobi_range.0..=jacobi_range.1 {
                for j in jacobi_range.0..=jacobi_range.1 {
                    cases.push((i, l, t, j));
                }
            }
        }
    }
    let results = exec.map(&cases, |&(i, l, t, j)| {
        let (a, b, c) = (&points[i], &points[(i + 1) % samples], &points[(i + 2) % samples]);
        jacobi_residual(m, a, b, c, l, t, j)
    });
    for (&(i, l, t, j), r) in cases.iter().zip(results) {
        jacobi.record(r.is_empty(), || {
            format!(
                "a = {}, b = {}, c = {}, (l,t,j) = ({l},{t},{j}), residual {}",
                show(m, &points[i]),
                show(m, &points[(i + 1) % samples]),
                show(m, &points[(i + 2) % samples]),
                show(m, &r)
            )
        });
    }

    ManifoldReport {
        samples,
        seed,
        window,
        checks: vec![trunc.finish(), left.finish(), creation.finish(), jacobi.finish()],
    }
}
