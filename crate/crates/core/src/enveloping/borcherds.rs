use super::algebra::Enveloping;
use super::element::UElement;
use crate::scalar::{binom, sign, Q};

/// Residual of the Borcherds identity
///
/// `Σ_i (-1)^i C(l,i) u_(t+l-i)(v_(j+i) w) - Σ_i (-1)^{l+i} C(l,i) v_(j+l-i)(u_(t+i) w)
///  = Σ_i C(t,i) (u_(l+i) v)_(t+j-i) w`
///
/// with every sum cut off where the inner product vanishes.
pub fn borcherds_residual(env: &Enveloping, u: &UElement, v: &UElement, w: &UElement, l: i64, t: i64, j: i64) -> UElement {
    let upper = |base: i64, n_bound: i64, binom_top: i64| -> i64 {
        // i ranges over 0..=hi with base + i < n_bound, and i <= top when top >= 0
        let mut hi = n_bound - 1 - base;
        if binom_top >= 0 {
            hi = hi.min(binom_top);
        }
        hi
    };
    let mut res = UElement::zero();

    let n_vw = env.product_bound(v, w);
    for i in 0..=upper(j, n_vw, l) {
        let c = sign(i) * binom(l, i as u64);
        let inner = env.nth_product(v, w, j + i);
        res.add_scaled(&env.nth_product(u, &inner, t + l - i), &c);
    }
    let n_uw = env.product_bound(u, w);
    for i in 0..=upper(t, n_uw, l) {
        let c = sign(l + i) * binom(l, i as u64);
        let inner = env.nth_product(u, w, t + i);
        res.add_scaled(&env.nth_product(v, &inner, j + l - i), &-c);
    }
    let n_uv = env.product_bound(u, v);
    for i in 0..=upper(l, n_uv, t) {
        let c: Q = binom(t, i as u64);
        let inner = env.nth_product(u, v, l + i);
        res.add_scaled(&env.nth_product(&inner, w, t + j - i), &-c);
    }
    res
}

/// Whether the Borcherds identity holds exactly at `(l, t, j)`.
pub fn borcherds_check(env: &Enveloping, u: &UElement, v: &UElement, w: &UElement, l: i64, t: i64, j: i64) -> (bool, UElement) {
    let r = borcherds_residual(env, u, v, w, l, t, j);
    (r.is_zero(), r)
}
