//! Canonical text forms. Vectors and λ-polynomials print in the input
//! language, so the output of one command can be pasted into a `.lca` file.

use num::{One, Signed};

use crate::lca::{BasisIndex, ConformalVector, LambdaMuPoly, LambdaPoly, LcaPresentation};
use crate::scalar::{factorial, fmt_q, Q};

fn monomial(p: &LcaPresentation, lambda: usize, idx: BasisIndex) -> String {
    let mut parts = Vec::new();
    match lambda {
        0 => {}
        1 => parts.push("lambda".to_string()),
        n => parts.push(format!("lambda^{n}")),
    }
    match idx.depth {
        0 => {}
        1 => parts.push("D".to_string()),
        d => parts.push(format!("D^{d}")),
    }
    parts.push(p.generators()[idx.gen as usize].name.clone());
    parts.join("*")
}

fn join_terms(terms: Vec<(Q, String)>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (c, body)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !a.is_one() {
            out.push_str(&fmt_q(&a));
            out.push('*');
        }
        out.push_str(&body);
    }
    out
}

/// `c ∂^{(d)} g` prints as `c/d! * D^d * g`.
pub fn vector(p: &LcaPresentation, v: &ConformalVector) -> String {
    let terms = v
        .iter()
        .map(|(idx, c)| (c / factorial(idx.depth as u64), monomial(p, 0, *idx)))
        .collect();
    join_terms(terms)
}

pub fn lambda_poly(p: &LcaPresentation, poly: &LambdaPoly) -> String {
    let mut terms: Vec<(BasisIndex, usize, Q)> = Vec::new();
    for (n, v) in poly.coeffs().iter().enumerate() {
        for (idx, c) in v.iter() {
            terms.push((*idx, n, c / factorial(idx.depth as u64)));
        }
    }
    terms.sort_by_key(|t| (t.0, t.1));
    join_terms(terms.into_iter().map(|(idx, n, c)| (c, monomial(p, n, idx))).collect())
}

/// `Σ λ^p μ^q v_{pq}`, terms ordered by basis index then powers.
pub fn lambda_mu_poly(p: &LcaPresentation, poly: &LambdaMuPoly) -> String {
    let mut terms: Vec<(BasisIndex, u32, u32, Q)> = Vec::new();
    for ((i, j), v) in poly.iter() {
        for (idx, c) in v.iter() {
            terms.push((*idx, *i, *j, c / factorial(idx.depth as u64)));
        }
    }
    terms.sort_by_key(|t| (t.0, t.1, t.2));
    let body = |lam: u32, mu: u32, idx: BasisIndex| {
        let inner = monomial(p, lam as usize, idx);
        match mu {
            0 => inner,
            1 => format!("mu*{inner}"),
            m => format!("mu^{m}*{inner}"),
        }
    };
    join_terms(terms.into_iter().map(|(idx, i, j, c)| (c, body(i, j, idx))).collect())
}

/// Point-style coordinates: `a[0]=3/2, k[0]=-1`.
pub fn coords(p: &LcaPresentation, v: &ConformalVector) -> String {
    if v.is_zero() {
        return "0".into();
    }
    v.iter()
        .map(|(idx, c)| format!("{}[{}]={}", p.generators()[idx.gen as usize].name, idx.depth, fmt_q(c)))
        .collect::<Vec<_>>()
        .join(", ")
}
