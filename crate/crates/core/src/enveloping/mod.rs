//! The universal enveloping vertex algebra of a Lie conformal algebra.

mod algebra;
mod borcherds;
mod element;

pub use algebra::Enveloping;
pub use borcherds::{borcherds_check, borcherds_residual};
pub use element::{monomial, multi_factorial, Monomial, UElement, ULambdaPoly};

use num::{One, Signed};

use crate::lca::Letter;
use crate::scalar::fmt_q;

/// Letter name for PBW text: bare generator for depth 0 in raw and graded
/// frames, `g[d]` otherwise.
pub fn short_letter(env: &Enveloping, l: Letter) -> String {
    let name = env.frame().letter_name(l);
    match name.strip_suffix("[0]") {
        Some(bare) => bare.to_string(),
        None => name,
    }
}

pub fn render_monomial(env: &Enveloping, m: &[Letter]) -> String {
    if m.is_empty() {
        return "1".into();
    }
    let names: Vec<String> = m.iter().map(|l| short_letter(env, *l)).collect();
    format!(":{}:", names.join(" "))
}

pub fn render(env: &Enveloping, u: &UElement) -> String {
    if u.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in u.iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        if !a.is_one() {
            out.push_str(&fmt_q(&a));
            out.push('*');
        }
        out.push_str(&render_monomial(env, m));
    }
    out
}

pub fn render_lambda(env: &Enveloping, p: &ULambdaPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (n, x) in p.coeffs().iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let body = render(env, x);
        parts.push(match n {
            0 => format!("({body})"),
            1 => format!("lambda*({body})"),
            n => format!("lambda^{n}*({body})"),
        });
    }
    parts.join(" + ")
}
