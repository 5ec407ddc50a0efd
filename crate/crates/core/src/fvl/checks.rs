use num::One;
use serde::Serialize;

use super::table::FvlTable;
use crate::enveloping::Monomial;
use crate::lca::Letter;
use crate::scalar::fmt_q;

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub left: Option<String>,
    pub right: Option<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.left.is_none() && self.right.is_none()
    }
}

fn describe(t: &FvlTable, l: Letter, n: i64, what: &str) -> String {
    format!("{} at l = {}, n = {}", what, t.name(l), n)
}

/// `F(0, Y) = Y` in the `n = -1` slice and zero elsewhere; `F(X, 0)` has
/// no `n >= 0` terms and equals `X` in the `n = -1` slice.
pub fn check_identities(t: &FvlTable) -> IdentityReport {
    let mut left = None;
    let mut right = None;
    for ((l, n), cell) in &t.entries {
        for ((k, kp), c) in cell {
            let diag = |m: &Monomial| m.len() == 1 && m[0] == *l && c.is_one();
            if left.is_none() && k.is_empty() && !(*n == -1 && diag(kp)) {
                left = Some(describe(t, *l, *n, &format!("unexpected coefficient {}", fmt_q(c))));
            }
            if right.is_none() && kp.is_empty() && *n >= -1 && !(*n == -1 && diag(k)) {
                right = Some(describe(t, *l, *n, &format!("unexpected coefficient {}", fmt_q(c))));
            }
        }
    }
    if t.in_window(-1) {
        for l in t.positions.keys() {
            let unit: Monomial = smallvec::smallvec![*l];
            if left.is_none() && !t.coeff(*l, -1, &Monomial::new(), &unit).is_one() {
                left = Some(describe(t, *l, -1, "missing identity term"));
            }
            if right.is_none() && !t.coeff(*l, -1, &unit, &Monomial::new()).is_one() {
                right = Some(describe(t, *l, -1, "missing identity term"));
            }
        }
    }
    IdentityReport { left, right }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConvergenceReport {
    /// Smallest `N` such that no entry of degree at most `r` supported on
    /// the chosen positions is nonzero for `n >= N`.
    pub bound: i64,
    pub within_window: bool,
    pub witness: Option<String>,
}

/// The truncation bound on monomials of degree at most `r` whose letters
/// all lie in `support`.
pub fn check_convergence_bound(t: &FvlTable, r: u32, support: &[Letter]) -> ConvergenceReport {
    let inside = |m: &Monomial| m.iter().all(|l| support.contains(l));
    let mut bound = 0;
    let mut witness = None;
    for ((l, n), cell) in &t.entries {
        for ((k, kp), c) in cell {
            if k.len() + kp.len() <= r as usize && inside(k) && inside(kp) && *n + 1 > bound {
                bound = *n + 1;
                witness = Some(format!(
                    "l = {}, n = {}, k = {:?}, k' = {:?}, coeff {}",
                    t.name(*l),
                    n,
                    k.iter().map(|x| t.name(*x)).collect::<Vec<_>>(),
                    kp.iter().map(|x| t.name(*x)).collect::<Vec<_>>(),
                    fmt_q(c)
                ));
            }
        }
    }
    ConvergenceReport { bound, within_window: bound <= t.window.1, witness }
}
