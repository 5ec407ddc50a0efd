use std::collections::BTreeMap;
use std::hash::Hash;
use std::sync::Arc;

use dashmap::DashMap;
use num::One;

use super::element::{Monomial, UElement, ULambdaPoly};
use crate::lca::{ConformalVector, Frame, LcaPresentation, Letter};
use crate::linalg::SparseVec;
use crate::scalar::{factorial, Q};

type Cache<K, V> = DashMap<K, Arc<V>>;

fn cached<K: Eq + Hash + Clone, V>(cache: &Cache<K, V>, key: &K, f: impl FnOnce() -> V) -> Arc<V> {
    if let Some(v) = cache.get(key) {
        return v.clone();
    }
    let v = Arc::new(f());
    cache.insert(key.clone(), v.clone());
    v
}

fn tail(m: &[Letter]) -> Monomial {
    m[1..].iter().copied().collect()
}

fn single(l: Letter) -> Monomial {
    smallvec::smallvec![l]
}

/// The universal enveloping vertex algebra `U(R)` in a PBW basis over the
/// letters of a frame. All products are memoized; the struct is shared
/// across threads.
pub struct Enveloping {
    frame: Arc<Frame>,
    kappa: u32,
    brackets: Cache<(Letter, Letter), Vec<SparseVec<Letter>>>,
    lies: Cache<(Letter, Letter), SparseVec<Letter>>,
    partials: Cache<(Letter, u32), SparseVec<Letter>>,
    mul: Cache<(Letter, Monomial), UElement>,
    dpartial: Cache<(Monomial, u32), UElement>,
    lb: Cache<(Monomial, Monomial), ULambdaPoly>,
    nop: Cache<(Monomial, Monomial), UElement>,
}

impl Enveloping {
    pub fn new(frame: Arc<Frame>) -> Enveloping {
        let kappa = frame.presentation().kappa();
        Enveloping {
            frame,
            kappa,
            brackets: DashMap::new(),
            lies: DashMap::new(),
            partials: DashMap::new(),
            mul: DashMap::new(),
            dpartial: DashMap::new(),
            lb: DashMap::new(),
            nop: DashMap::new(),
        }
    }

    /// PBW basis over the raw divided-power letters.
    pub fn raw(p: &LcaPresentation) -> Enveloping {
        Enveloping::new(Arc::new(Frame::raw(Arc::new(p.clone()))))
    }

    pub fn frame(&self) -> &Arc<Frame> {
        &self.frame
    }

    pub fn presentation(&self) -> &LcaPresentation {
        self.frame.presentation()
    }

    pub fn kappa(&self) -> u32 {
        self.kappa
    }

    /// Weight of a monomial in the filtration used by truncation guards:
    /// each letter counts its stratum plus `κ`.
    pub fn weight(&self, m: &[Letter]) -> i64 {
        m.iter().map(|l| (self.frame.stratum(*l) + self.kappa) as i64).sum()
    }

    pub fn letters_up_to(&self, cap: u32) -> Vec<Letter> {
        self.frame.letters_up_to(cap)
    }

    pub fn embed(&self, v: &ConformalVector) -> UElement {
        UElement::from_letters(&self.frame.coords(v))
    }

    /// Projection `π` onto `R`: the length-one part, as a vector.
    pub fn pi(&self, u: &UElement) -> ConformalVector {
        let mut out = ConformalVector::zero();
        for (l, c) in u.linear_part() {
            out.add_scaled(&self.frame.vector(l), &c);
        }
        out
    }

    // ---- letters ----

    pub fn letter_bracket(&self, x: Letter, y: Letter) -> Arc<Vec<SparseVec<Letter>>> {
        cached(&self.brackets, &(x, y), || {
            let p = self.presentation();
            p.lambda_bracket(&self.frame.vector(x), &self.frame.vector(y))
                .coeffs()
                .iter()
                .map(|c| self.frame.coords(c))
                .collect()
        })
    }

    fn letter_lie(&self, x: Letter, y: Letter) -> Arc<SparseVec<Letter>> {
        cached(&self.lies, &(x, y), || {
            let p = self.presentation();
            self.frame.coords(&p.lie_bracket(&self.frame.vector(x), &self.frame.vector(y)))
        })
    }

    fn letter_partial(&self, x: Letter, j: u32) -> Arc<SparseVec<Letter>> {
        cached(&self.partials, &(x, j), || self.frame.partial(x, j))
    }

    // ---- associative structure ----

    /// `x · m` for a letter and a PBW monomial.
    fn mul_letter_mono(&self, x: Letter, m: &Monomial) -> Arc<UElement> {
        if m.is_empty() || x <= m[0] {
            let mut w = Monomial::with_capacity(m.len() + 1);
            w.push(x);
            w.extend_from_slice(m);
            return Arc::new(UElement::monomial(w, Q::one()));
        }
        cached(&self.mul, &(x, m.clone()), || {
            // x y r = y (x r) + [x, y] r
            let y = m[0];
            let rest = tail(m);
            let mut out = self.mul_letter(y, &self.mul_letter_mono(x, &rest));
            for (z, c) in self.letter_lie(x, y).iter() {
                out.add_scaled(&self.mul_letter_mono(*z, &rest), c);
            }
            out
        })
    }

    pub fn mul_letter(&self, x: Letter, u: &UElement) -> UElement {
        let mut out = UElement::zero();
        for (m, c) in u.iter() {
            out.add_scaled(&self.mul_letter_mono(x, m), c);
        }
        out
    }

    fn mul_combo(&self, combo: &SparseVec<Letter>, u: &UElement) -> UElement {
        let mut out = UElement::zero();
        for (z, c) in combo {
            out.add_scaled(&self.mul_letter(*z, u), c);
        }
        out
    }

    /// Associative product in the PBW basis.
    pub fn assoc_mul(&self, u: &UElement, v: &UElement) -> UElement {
        let mut out = UElement::zero();
        for (m1, c1) in u.iter() {
            for (m2, c2) in v.iter() {
                let mut acc = UElement::monomial(m2.clone(), c1 * c2);
                for x in m1.iter().rev() {
                    acc = self.mul_letter(*x, &acc);
                }
                out.add(&acc);
            }
        }
        out
    }

    /// PBW normal form of an arbitrary word of letters.
    pub fn straighten(&self, word: &[Letter]) -> UElement {
        let mut acc = UElement::vacuum();
        for x in word.iter().rev() {
            acc = self.mul_letter(*x, &acc);
        }
        acc
    }

    // ---- derivation ----

    fn divided_partial_mono(&self, m: &Monomial, j: u32) -> Arc<UElement> {
        if j == 0 {
            return Arc::new(UElement::monomial(m.clone(), Q::one()));
        }
        if m.is_empty() {
            return Arc::new(UElement::zero());
        }
        cached(&self.dpartial, &(m.clone(), j), || {
            // ∂^{(j)}(x r) = Σ_i ∂^{(i)}x · ∂^{(j-i)} r
            let x = m[0];
            let rest = tail(m);
            let mut out = UElement::zero();
            for i in 0..=j {
                let r = self.divided_partial_mono(&rest, j - i);
                if r.is_zero() {
                    continue;
                }
                if i == 0 {
                    out.add(&self.mul_letter(x, &r));
                } else {
                    out.add(&self.mul_combo(&self.letter_partial(x, i), &r));
                }
            }
            out
        })
    }

    /// `∂^{(j)} u = ∂^j u / j!`
    pub fn divided_partial(&self, u: &UElement, j: u32) -> UElement {
        let mut out = UElement::zero();
        for (m, c) in u.iter() {
            out.add_scaled(&self.divided_partial_mono(m, j), c);
        }
        out
    }

    pub fn partial(&self, u: &UElement) -> UElement {
        self.divided_partial(u, 1)
    }

    // ---- vertex structure ----

    fn lb_mono(&self, u: &Monomial, v: &Monomial) -> Arc<ULambdaPoly> {
        if u.is_empty() || v.is_empty() {
            return Arc::new(ULambdaPoly::zero());
        }
        cached(&self.lb, &(u.clone(), v.clone()), || {
            if u.len() == 1 {
                self.lb_left_letter(u[0], v)
            } else {
                self.lb_right_wick(u, v)
            }
        })
    }

    /// `[a_λ :b c:]` by the left Wick formula.
    fn lb_left_letter(&self, a: Letter, v: &Monomial) -> ULambdaPoly {
        let mut out = ULambdaPoly::zero();
        if v.len() == 1 {
            for (n, combo) in self.letter_bracket(a, v[0]).iter().enumerate() {
                out.add_at(n, &UElement::from_letters(combo), &Q::one());
            }
            return out;
        }
        let b = v[0];
        let c = tail(v);
        let cu = UElement::monomial(c.clone(), Q::one());
        let ab = self.letter_bracket(a, b);
        for (n, combo) in ab.iter().enumerate() {
            out.add_at(n, &self.mul_combo(combo, &cu), &Q::one());
        }
        for (n, x) in self.lb_mono(&single(a), &c).coeffs().iter().enumerate() {
            out.add_at(n, &self.mul_letter(b, x), &Q::one());
        }
        // ∫_0^λ [[a_λ b]_μ c] dμ
        for (n, combo) in ab.iter().enumerate() {
            for (z, cz) in combo {
                for (m, zz) in self.lb_mono(&single(*z), &c).coeffs().iter().enumerate() {
                    out.add_at(n + m + 1, zz, &(cz / Q::from_integer((m as i64 + 1).into())));
                }
            }
        }
        out
    }

    /// `[:a w:_λ v]` by the right Wick formula.
    fn lb_right_wick(&self, u: &Monomial, v: &Monomial) -> ULambdaPoly {
        let a = u[0];
        let w = tail(u);
        let wu = UElement::monomial(w.clone(), Q::one());
        let mut out = ULambdaPoly::zero();
        // :(e^{∂ d/dλ} a) [w_λ v]:
        for (n, x) in self.lb_mono(&w, v).coeffs().iter().enumerate() {
            for k in 0..=n {
                let coef = factorial(n as u64) / factorial((n - k) as u64);
                let t = if k == 0 {
                    self.mul_letter(a, x)
                } else {
                    self.mul_combo(&self.letter_partial(a, k as u32), x)
                };
                out.add_at(n - k, &t, &coef);
            }
        }
        // :(e^{∂ d/dλ} w) [a_λ v]:
        let av = self.lb_mono(&single(a), v);
        for (n, y) in av.coeffs().iter().enumerate() {
            for k in 0..=n {
                let coef = factorial(n as u64) / factorial((n - k) as u64);
                let dw = self.divided_partial_mono(&w, k as u32);
                out.add_at(n - k, &self.nop(&dw, y), &coef);
            }
        }
        // ∫_0^λ [w_μ [a_{λ-μ} v]] dμ
        for (p, y) in av.coeffs().iter().enumerate() {
            for (q, z) in self.lambda_bracket(&wu, y).coeffs().iter().enumerate() {
                let coef = factorial(p as u64) * factorial(q as u64) / factorial((p + q + 1) as u64);
                out.add_at(p + q + 1, z, &coef);
            }
        }
        out
    }

    pub fn lambda_bracket(&self, u: &UElement, v: &UElement) -> ULambdaPoly {
        let mut out = ULambdaPoly::zero();
        for (m1, c1) in u.iter() {
            for (m2, c2) in v.iter() {
                out.add_scaled(&self.lb_mono(m1, m2), &(c1 * c2));
            }
        }
        out
    }

    fn nop_mono(&self, u: &Monomial, v: &Monomial) -> Arc<UElement> {
        if u.is_empty() {
            return Arc::new(UElement::monomial(v.clone(), Q::one()));
        }
        if u.len() == 1 {
            return self.mul_letter_mono(u[0], v);
        }
        cached(&self.nop, &(u.clone(), v.clone()), || {
            // :(:a w:) v: = :a :w v:: + Σ_m :(∂^{(m+1)} a)(w_(m) v): + :(∂^{(m+1)} w)(a_(m) v):
            let a = u[0];
            let w = tail(u);
            let mut out = self.mul_letter(a, &self.nop_mono(&w, v));
            for (m, x) in self.lb_mono(&w, v).coeffs().iter().enumerate() {
                let xm = x.scaled(&factorial(m as u64));
                out.add(&self.mul_combo(&self.letter_partial(a, m as u32 + 1), &xm));
            }
            for (m, y) in self.lb_mono(&single(a), v).coeffs().iter().enumerate() {
                let ym = y.scaled(&factorial(m as u64));
                let dw = self.divided_partial_mono(&w, m as u32 + 1);
                out.add(&self.nop(&dw, &ym));
            }
            out
        })
    }

    /// Normally ordered product `:u v: = u_(-1) v`.
    pub fn nop(&self, u: &UElement, v: &UElement) -> UElement {
        let mut out = UElement::zero();
        for (m1, c1) in u.iter() {
            for (m2, c2) in v.iter() {
                out.add_scaled(&self.nop_mono(m1, m2), &(c1 * c2));
            }
        }
        out
    }

    /// `u_(n) v` for any integer `n`.
    pub fn nth_product(&self, u: &UElement, v: &UElement, n: i64) -> UElement {
        if n >= 0 {
            self.lambda_bracket(u, v).coeff(n as usize).scaled(&factorial(n as u64))
        } else {
            self.nop(&self.divided_partial(u, (-n - 1) as u32), v)
        }
    }

    /// Smallest `N` with `u_(n) v = 0` for all `n >= N`.
    pub fn product_bound(&self, u: &UElement, v: &UElement) -> i64 {
        self.lambda_bracket(u, v).degree().map_or(0, |d| d as i64 + 1)
    }

    /// `u_(n) v` for `n` in `lo..=hi`, with the truncation bound.
    pub fn y_window(&self, u: &UElement, v: &UElement, lo: i64, hi: i64) -> (BTreeMap<i64, UElement>, i64) {
        let lb = self.lambda_bracket(u, v);
        let mut out = BTreeMap::new();
        for n in lo..=hi {
            let x = if n >= 0 {
                lb.coeff(n as usize).scaled(&factorial(n as u64))
            } else {
                self.nth_product(u, v, n)
            };
            out.insert(n, x);
        }
        (out, lb.degree().map_or(0, |d| d as i64 + 1))
    }

    pub fn cache_sizes(&self) -> usize {
        self.mul.len() + self.lb.len() + self.nop.len() + self.dpartial.len()
    }
}
