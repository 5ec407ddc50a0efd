//! Slow reference implementations. They share no code with the closed
//! forms they check, beyond the stored structure constants.

use num::One;

use crate::enveloping::{Enveloping, UElement};
use crate::lca::{BasisIndex, ConformalVector, LambdaPoly, LcaPresentation, Letter};
use crate::scalar::{q, Q};

/// `[a_λ b]` on basis vectors, moving one `∂` at a time through the bracket.
pub fn bracket(p: &LcaPresentation, a: BasisIndex, b: BasisIndex) -> LambdaPoly {
    if a.depth > 0 {
        let inner = bracket(p, BasisIndex::new(a.gen, a.depth - 1), b);
        // [∂x_λ y] = -λ[x_λ y]
        let mut out = LambdaPoly::zero();
        for (n, c) in inner.coeffs().iter().enumerate() {
            out.add_at(n + 1, c, &(-Q::one() / q(a.depth as i64)));
        }
        return out;
    }
    if b.depth > 0 {
        let inner = bracket(p, a, BasisIndex::new(b.gen, b.depth - 1));
        // [x_λ ∂y] = (∂+λ)[x_λ y]
        let mut out = LambdaPoly::zero();
        let k = Q::one() / q(b.depth as i64);
        for (n, c) in inner.coeffs().iter().enumerate() {
            out.add_at(n + 1, c, &k);
            out.add_at(n, &p.apply_partial(c, 1), &k);
        }
        return out;
    }
    if a.gen <= b.gen {
        return p.brackets().get(&(a.gen, b.gen)).cloned().unwrap_or_default();
    }
    // expand -(-λ-∂)^m c by repeated multiplication
    let stored = p.brackets().get(&(b.gen, a.gen)).cloned().unwrap_or_default();
    let mut out = LambdaPoly::zero();
    for (m, c) in stored.coeffs().iter().enumerate() {
        let mut power = LambdaPoly::constant(c.clone());
        for _ in 0..m {
            let mut next = LambdaPoly::zero();
            for (n, x) in power.coeffs().iter().enumerate() {
                next.add_at(n + 1, x, &-Q::one());
                next.add_at(n, &p.apply_partial(x, 1), &-Q::one());
            }
            power = next;
        }
        out.add(&power.scaled(&-Q::one()));
    }
    out
}

/// Bilinear extension of [`bracket`].
pub fn bracket_vectors(p: &LcaPresentation, v: &ConformalVector, w: &ConformalVector) -> LambdaPoly {
    let mut out = LambdaPoly::zero();
    for (a, x) in v.iter() {
        for (b, y) in w.iter() {
            out.add(&bracket(p, *a, *b).scaled(&(x * y)));
        }
    }
    out
}

/// PBW normal form of a word by adjacent swaps `xy -> yx + [x,y]`, i.e. in
/// the free algebra modulo commutators.
pub fn straighten(env: &Enveloping, w: Vec<Letter>) -> UElement {
    let p = env.presentation();
    match (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
        None => UElement::monomial(w.into_iter().collect(), Q::one()),
        Some(i) => {
            let mut swapped = w.clone();
            swapped.swap(i, i + 1);
            let mut out = straighten(env, swapped);
            let lie = p.lie_bracket(&env.frame().vector(w[i]), &env.frame().vector(w[i + 1]));
            for (z, c) in env.frame().coords(&lie) {
                let mut shorter = w[..i].to_vec();
                shorter.push(z);
                shorter.extend_from_slice(&w[i + 2..]);
                out.add_scaled(&straighten(env, shorter), &c);
            }
            out
        }
    }
}

/// Every word of length `<= max_len` over `alphabet`, shortest first.
pub fn words(alphabet: &[Letter], max_len: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![vec![]];
    let mut layer: Vec<Vec<Letter>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for l in alphabet {
                let mut x = w.clone();
                x.push(*l);
                next.push(x);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}
