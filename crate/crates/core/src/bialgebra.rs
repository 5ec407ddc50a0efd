//! Cocommutative bialgebra structure of `U(R)`: letters are primitive and
//! the coproduct is a vertex algebra map into `U(R) ⊗ U(R)`.

use std::collections::BTreeMap;

use num::{One, Zero};
use serde::Serialize;

use crate::enveloping::{render, render_monomial, Enveloping, Monomial, UElement};
use crate::lca::Letter;
use crate::linalg::{kernel, SparseVec};
use crate::scalar::Q;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorUElement {
    terms: BTreeMap<(Monomial, Monomial), Q>,
}

impl TensorUElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: (Monomial, Monomial), c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, other: &TensorUElement, c: &Q) {
        for (k, x) in &other.terms {
            self.add_term(k.clone(), x * c);
        }
    }

    /// `c * u ⊗ v`
    pub fn add_tensor(&mut self, u: &UElement, v: &UElement, c: &Q) {
        for (m1, c1) in u.iter() {
            for (m2, c2) in v.iter() {
                self.add_term((m1.clone(), m2.clone()), c * c1 * c2);
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &Q)> {
        self.terms.iter()
    }

    /// `τ(u ⊗ v) = v ⊗ u`
    pub fn flip(&self) -> TensorUElement {
        let mut out = TensorUElement::zero();
        for ((a, b), c) in &self.terms {
            out.add_term((b.clone(), a.clone()), c.clone());
        }
        out
    }
}

pub fn render_tensor(env: &Enveloping, t: &TensorUElement) -> String {
    if t.is_zero() {
        return "0".into();
    }
    t.iter()
        .map(|((a, b), c)| {
            let body = format!("{} ⊗ {}", render_monomial(env, a), render_monomial(env, b));
            if c.is_one() {
                body
            } else {
                format!("{}*({})", crate::scalar::fmt_q(c), body)
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// `Δ` on a PBW monomial: sum over splittings of its letters.
fn coproduct_mono(env: &Enveloping, m: &Monomial) -> TensorUElement {
    let n = m.len();
    let mut out = TensorUElement::zero();
    for mask in 0u32..(1 << n) {
        let left: Vec<Letter> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| m[i]).collect();
        let right: Vec<Letter> = (0..n).filter(|i| mask & (1 << i) == 0).map(|i| m[i]).collect();
        out.add_tensor(&env.straighten(&left), &env.straighten(&right), &Q::one());
    }
    out
}

pub fn coproduct(env: &Enveloping, u: &UElement) -> TensorUElement {
    let mut out = TensorUElement::zero();
    for (m, c) in u.iter() {
        out.add_scaled(&coproduct_mono(env, m), c);
    }
    out
}

/// Coefficient of the vacuum.
pub fn counit(u: &UElement) -> Q {
    u.coeff(&[])
}

/// `(u1⊗u2)_(n)(v1⊗v2) = Σ_m (u1)_(m) v1 ⊗ (u2)_(n-m-1) v2`
pub fn tensor_nth_product(env: &Enveloping, s: &TensorUElement, t: &TensorUElement, n: i64) -> TensorUElement {
    let mut out = TensorUElement::zero();
    for ((u1, u2), cs) in s.iter() {
        for ((v1, v2), ct) in t.iter() {
            let (u1, u2) = (UElement::monomial(u1.clone(), Q::one()), UElement::monomial(u2.clone(), Q::one()));
            let (v1, v2) = (UElement::monomial(v1.clone(), Q::one()), UElement::monomial(v2.clone(), Q::one()));
            let n1 = env.product_bound(&u1, &v1);
            let n2 = env.product_bound(&u2, &v2);
            for m in (n - n2)..n1 {
                let left = env.nth_product(&u1, &v1, m);
                if left.is_zero() {
                    continue;
                }
                let right = env.nth_product(&u2, &v2, n - m - 1);
                out.add_tensor(&left, &right, &(cs * ct));
            }
        }
    }
    out
}

fn primitive_defect(env: &Enveloping, u: &UElement) -> TensorUElement {
    let mut d = coproduct(env, u);
    let one = UElement::vacuum();
    d.add_tensor(u, &one, &-Q::one());
    d.add_tensor(&one, u, &-Q::one());
    d
}

pub fn is_primitive(env: &Enveloping, u: &UElement) -> bool {
    primitive_defect(env, u).is_zero()
}

/// PBW monomials of length at most `max_len` in letters of stratum at most `depth`.
pub fn monomials_up_to(env: &Enveloping, max_len: usize, depth: u32) -> Vec<Monomial> {
    let letters = env.letters_up_to(depth);
    let mut out = vec![Monomial::new()];
    let mut layer = vec![Monomial::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for m in &layer {
            for l in &letters {
                if m.last().is_none_or(|x| x <= l) {
                    let mut w = m.clone();
                    w.push(*l);
                    next.push(w);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Basis of the primitive elements spanned by PBW monomials of length at
/// most `max_len` over letters of stratum at most `depth`.
pub fn primitives_up_to(env: &Enveloping, max_len: usize, depth: u32) -> Vec<UElement> {
    let monos = monomials_up_to(env, max_len, depth);
    let images: Vec<SparseVec<(Monomial, Monomial)>> = monos
        .iter()
        .map(|m| {
            primitive_defect(env, &UElement::monomial(m.clone(), Q::one()))
                .iter()
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect()
        })
        .collect();
    kernel(&images)
        .into_iter()
        .map(|k| {
            let mut u = UElement::zero();
            for (i, c) in k {
                u.add_term(monos[i].clone(), c);
            }
            u
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct BialgebraCheck {
    pub sample: String,
    pub n: Option<i64>,
    pub pass: bool,
    pub residual: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct BialgebraReport {
    pub checks: Vec<BialgebraCheck>,
}

impl BialgebraReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// `Δ(u_(n) v) = Δu_(n) Δv` and `ε(u_(n) v) = δ_{n,-1} ε(u) ε(v)` on
/// each sample pair and each `n` in the window.
pub fn check_delta_is_vertex_hom(env: &Enveloping, samples: &[(UElement, UElement)], window: (i64, i64)) -> BialgebraReport {
    let mut report = BialgebraReport::default();
    for (u, v) in samples {
        let (du, dv) = (coproduct(env, u), coproduct(env, v));
        let label = format!("{} , {}", render(env, u), render(env, v));
        for n in window.0..=window.1 {
            let prod = env.nth_product(u, v, n);
            let mut res = coproduct(env, &prod);
            res.add_scaled(&tensor_nth_product(env, &du, &dv, n), &-Q::one());
            let mut eps = counit(&prod);
            if n == -1 {
                eps -= counit(u) * counit(v);
            }
            let pass = res.is_zero() && eps.is_zero();
            let residual = if res.is_zero() {
                crate::scalar::fmt_q(&eps)
            } else {
                render_tensor(env, &res)
            };
            report.checks.push(BialgebraCheck { sample: label.clone(), n: Some(n), pass, residual });
        }
    }
    report
}

fn triple(env: &Enveloping, t: &TensorUElement, left: bool) -> BTreeMap<(Monomial, Monomial, Monomial), Q> {
    let mut out: BTreeMap<(Monomial, Monomial, Monomial), Q> = BTreeMap::new();
    for ((a, b), c) in t.iter() {
        let split = if left { a } else { b };
        for ((x, y), d) in coproduct_mono(env, split).iter() {
            let key = if left {
                (x.clone(), y.clone(), b.clone())
            } else {
                (a.clone(), x.clone(), y.clone())
            };
            *out.entry(key).or_insert_with(Q::zero) += c * d;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Coassociativity, cocommutativity and the counit laws on every PBW
/// monomial of length at most `max_len` over letters of stratum at most `depth`.
pub fn check_coalgebra_laws(env: &Enveloping, max_len: usize, depth: u32) -> BialgebraReport {
    let mut report = BialgebraReport::default();
    for m in monomials_up_to(env, max_len, depth) {
        let u = UElement::monomial(m.clone(), Q::one());
        let d = coproduct(env, &u);
        let label = render_monomial(env, &m);
        let coassoc = triple(env, &d, true) == triple(env, &d, false);
        report.checks.push(BialgebraCheck { sample: label.clone(), n: None, pass: coassoc, residual: "coassociativity".into() });
        let cocomm = d.flip() == d;
        report.checks.push(BialgebraCheck { sample: label.clone(), n: None, pass: cocomm, residual: "cocommutativity".into() });
        let mut left = UElement::zero();
        let mut right = UElement::zero();
        for ((a, b), c) in d.iter() {
            if a.is_empty() {
                left.add_term(b.clone(), c.clone());
            }
            if b.is_empty() {
                right.add_term(a.clone(), c.clone());
            }
        }
        let counit_ok = left == u && right == u;
        report.checks.push(BialgebraCheck { sample: label, n: None, pass: counit_ok, residual: "counit".into() });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enveloping::monomial;
    use crate::golden;
    use crate::scalar::q;

    fn heis() -> Enveloping {
        Enveloping::raw(&golden::heisenberg())
    }

    #[test]
    fn coproduct_of_square() {
        let env = heis();
        let a = env.frame().parse_letter("a").unwrap();
        let aa = UElement::monomial(monomial(&[a, a]), q(1));
        let d = coproduct(&env, &aa);
        // Δ(:aa:) = :aa:⊗1 + 2 a⊗a + 1⊗:aa:
        assert_eq!(render_tensor(&env, &d), "1 ⊗ :a a: + 2*(:a: ⊗ :a:) + :a a: ⊗ 1");
    }

    #[test]
    fn tensor_product_golden() {
        let env = heis();
        let a = UElement::letter(env.frame().parse_letter("a").unwrap());
        let k = UElement::letter(env.frame().parse_letter("k").unwrap());
        let mut s = TensorUElement::zero();
        s.add_tensor(&a, &UElement::vacuum(), &q(1));
        let mut expect = TensorUElement::zero();
        expect.add_tensor(&k, &UElement::vacuum(), &q(1));
        assert_eq!(tensor_nth_product(&env, &s, &s, 1), expect);
    }

    #[test]
    fn letters_are_primitive() {
        let env = Enveloping::raw(&golden::virasoro());
        for l in env.letters_up_to(2) {
            assert!(is_primitive(&env, &UElement::letter(l)));
        }
        let l = env.letters_up_to(0)[0];
        assert!(!is_primitive(&env, &UElement::monomial(monomial(&[l, l]), q(1))));
        assert!(!is_primitive(&env, &UElement::vacuum()));
    }

    #[test]
    fn primitives_are_the_letters() {
        let env = heis();
        let prims = primitives_up_to(&env, 3, 1);
        assert_eq!(prims.len(), env.letters_up_to(1).len());
        assert!(prims.iter().all(|p| p.max_len() == 1));
    }

    #[test]
    fn coalgebra_laws_small() {
        let env = Enveloping::raw(&golden::n3());
        assert!(check_coalgebra_laws(&env, 3, 0).passed());
    }

    #[test]
    fn delta_commutes_with_products() {
        let env = heis();
        let ls = env.letters_up_to(1);
        let samples = vec![
            (UElement::letter(ls[0]), UElement::monomial(monomial(&[ls[0], ls[1]]), q(1))),
            (UElement::monomial(monomial(&[ls[0], ls[0]]), q(1)), UElement::letter(ls[0])),
        ];
        let r = check_delta_is_vertex_hom(&env, &samples, (-3, 3));
        assert!(r.passed(), "{:?}", r.checks.iter().find(|c| !c.pass));
    }
}
