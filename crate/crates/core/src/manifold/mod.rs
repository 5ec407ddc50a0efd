//! Vertex manifolds: the polynomial vertex structure on the points of a
//! nilpotent Lie conformal algebra obtained by integrating it.

mod axioms;
mod series;
mod tangent;

pub use axioms::{check_manifold_axioms, random_point, ManifoldCheck, ManifoldReport};
pub use tangent::{conf_of, TORSION_PROBE};

use std::collections::BTreeMap;
use std::sync::Arc;

use dashmap::DashMap;
use num::{One, Zero};

use crate::enveloping::{multi_factorial, Enveloping, Monomial, UElement};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::fvl::monomials;
use crate::lca::{check_lca_axioms, ConformalVector, Frame, LcaPresentation, Letter};
use crate::linalg::{axpy, SparseVec};
use crate::scalar::Q;

/// A point: finitely many coordinates in the adapted letter basis.
pub type Point = SparseVec<Letter>;

type Key = (Monomial, Monomial, i64);

pub struct VertexManifold {
    env: Arc<Enveloping>,
    degree: usize,
    table: DashMap<Key, Arc<Point>>,
    faults: BTreeMap<Key, Point>,
}

/// Integrates a nilpotent presentation. Fails with `AxiomFailure` on
/// invalid input and `NotNilpotent` when the series does not reach zero.
pub fn integrate(p: &LcaPresentation) -> Result<VertexManifold> {
    let report = check_lca_axioms(p);
    if !report.passed() {
        return Err(Error::AxiomFailure(report.failed_axioms().join(", ")));
    }
    let frame = Frame::adapted(Arc::new(p.clone()))?;
    let degree = crate::lca::Filtration::new(p)?.degree();
    Ok(VertexManifold {
        env: Arc::new(Enveloping::new(Arc::new(frame))),
        degree,
        table: DashMap::new(),
        faults: BTreeMap::new(),
    })
}

fn power(x: &Q, e: usize) -> Q {
    let mut out = Q::one();
    for _ in 0..e {
        out *= x;
    }
    out
}

/// `a^k` for a multi-index written as a sorted monomial.
fn evaluate(p: &Point, m: &Monomial) -> Q {
    let mut out = Q::one();
    let mut i = 0;
    while i < m.len() {
        let mut j = i;
        while j < m.len() && m[j] == m[i] {
            j += 1;
        }
        out *= power(&p.get(&m[i]).cloned().unwrap_or_else(Q::zero), j - i);
        i = j;
    }
    out
}

impl VertexManifold {
    /// Nilpotency degree `N` of the integrated algebra.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn enveloping(&self) -> &Arc<Enveloping> {
        &self.env
    }

    pub fn frame(&self) -> &Arc<Frame> {
        self.env.frame()
    }

    /// Adds `delta` to one coefficient; used to test that the axiom
    /// checks notice a damaged structure.
    pub fn inject_fault(&mut self, k: Monomial, kp: Monomial, n: i64, delta: Point) {
        self.faults.insert((k, kp, n), delta);
    }

    /// `π(e_k (n) e_k') / (k! k'!)` in letter coordinates.
    pub fn coefficient(&self, k: &Monomial, kp: &Monomial, n: i64) -> Arc<Point> {
        let key = (k.clone(), kp.clone(), n);
        if let Some(v) = self.table.get(&key) {
            return v.clone();
        }
        let u = UElement::monomial(k.clone(), Q::one());
        let v = UElement::monomial(kp.clone(), Q::one());
        let norm = multi_factorial(k) * multi_factorial(kp);
        let mut out: Point = self.env.nth_product(&u, &v, n).linear_part().into_iter().map(|(l, c)| (l, c / &norm)).collect();
        if let Some(d) = self.faults.get(&key) {
            axpy(&mut out, &Q::one(), d);
        }
        let out = Arc::new(out);
        self.table.insert(key, out.clone());
        out
    }

    /// Θ-weight of a monomial: the sum of the strata of its letters.
    fn theta_weight(m: &Monomial) -> usize {
        m.iter().map(|l| l.theta() as usize).sum()
    }

    /// Multi-indices on the given supports whose combined Θ-weight is at
    /// most `N`; every other pair projects to zero.
    pub(crate) fn pairs_on(&self, sa: &[Letter], sb: &[Letter]) -> Vec<(Monomial, Monomial)> {
        let ma: Vec<Monomial> = monomials(sa, self.degree).into_iter().filter(|k| Self::theta_weight(k) <= self.degree).collect();
        let mb: Vec<Monomial> = monomials(sb, self.degree).into_iter().filter(|k| Self::theta_weight(k) <= self.degree).collect();
        let mut out = Vec::new();
        for k in &ma {
            for kp in &mb {
                if Self::theta_weight(k) + Self::theta_weight(kp) <= self.degree {
                    out.push((k.clone(), kp.clone()));
                }
            }
        }
        out
    }

    fn pairs(&self, a: &Point, b: &Point) -> Vec<(Monomial, Monomial)> {
        let sa: Vec<Letter> = a.keys().copied().collect();
        let sb: Vec<Letter> = b.keys().copied().collect();
        self.pairs_on(&sa, &sb)
    }

    /// `a •_n b`
    pub fn product(&self, a: &Point, b: &Point, n: i64) -> Point {
        let mut out = Point::new();
        for (k, kp) in self.pairs(a, b) {
            let w = evaluate(a, &k) * evaluate(b, &kp);
            if w.is_zero() {
                continue;
            }
            axpy(&mut out, &w, &self.coefficient(&k, &kp, n));
        }
        out
    }

    /// `a •_n b` for every `n` in the window.
    pub fn product_window(&self, a: &Point, b: &Point, window: (i64, i64), exec: Exec) -> BTreeMap<i64, Point> {
        let ns: Vec<i64> = (window.0..=window.1).collect();
        ns.iter().copied().zip(exec.map(&ns, |n| self.product(a, b, *n))).collect()
    }

    /// `1 + max λ-degree of [e_k λ e_k']` over multi-indices supported on
    /// the union of the supports; zero if all vanish.
    pub fn truncation_bound(&self, a: &Point, b: &Point) -> i64 {
        let mut union = a.clone();
        for (l, c) in b {
            union.insert(*l, c.clone());
        }
        let mut bound = 0;
        for (k, kp) in self.pairs(&union, &union) {
            let u = UElement::monomial(k, Q::one());
            let v = UElement::monomial(kp, Q::one());
            bound = bound.max(self.env.product_bound(&u, &v));
        }
        bound
    }

    /// Point with the letter coordinates of a user-basis vector.
    pub fn point_of(&self, v: &ConformalVector) -> Point {
        self.frame().coords(v)
    }

    /// The vector of `R` with the given letter coordinates.
    pub fn vector_of(&self, p: &Point) -> ConformalVector {
        let mut out = ConformalVector::zero();
        for (l, c) in p {
            out.add_scaled(&self.frame().vector(*l), c);
        }
        out
    }

    /// Lines `l: Θ` and the basis change for letters up to `depth`.
    pub fn letter_table(&self, depth: u32) -> Vec<(Letter, u32, ConformalVector)> {
        self.frame()
            .letters_up_to(depth)
            .into_iter()
            .map(|l| (l, l.theta(), self.frame().vector(l)))
            .collect()
    }
}
