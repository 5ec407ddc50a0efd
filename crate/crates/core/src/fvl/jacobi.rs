use std::collections::{BTreeMap, HashMap};

use num::One;
use serde::Serialize;

use super::poly::Poly3;
use super::table::FvlTable;
use crate::enveloping::Monomial;
use crate::error::{Error, Result, TruncationNeed};
use crate::exec::Exec;
use crate::lca::Letter;
use crate::scalar::{binom, sign, Q};

/// Laurent series in one formal variable; keys are exponents of `x`.
type Series = BTreeMap<i64, Poly3>;

/// Truncation envelope: total degree, target stratum and the largest
/// exponent of `x` that can still matter.
struct Ctx<'a> {
    t: &'a FvlTable,
    degree: usize,
    cap: u32,
    e_cap: i64,
    ue: i64,
}

impl Ctx<'_> {
    fn inside(&self, m: &Monomial) -> bool {
        m.iter().all(|l| self.t.stratum(*l) <= self.cap)
    }

    fn mul(&self, a: &Poly3, b: &Poly3) -> Poly3 {
        a.mul(b, self.degree)
    }

    /// `Σ_q F_i^q(P, Q) x^{-q-1}` with `P, Q` in the given slots.
    fn inner(&self, i: Letter, slots: (usize, usize)) -> Series {
        let mut out = Series::new();
        for n in self.t.window.0..=self.t.window.1 {
            let e = -n - 1;
            if e > self.e_cap {
                continue;
            }
            let Some(cell) = self.t.entries.get(&(i, n)) else { continue };
            let mut p = Poly3::default();
            for ((mu, nu), c) in cell {
                if mu.len() + nu.len() <= self.degree && self.inside(mu) && self.inside(nu) {
                    let term = self.mul(&Poly3::var(slots.0, mu), &Poly3::var(slots.1, nu));
                    p.add_scaled(&term, c);
                }
            }
            if !p.is_zero() {
                out.insert(e, p);
            }
        }
        out
    }

    fn mul_series(&self, a: &Series, b: &Series) -> Series {
        let mut out = Series::new();
        for (ea, pa) in a {
            for (eb, pb) in b {
                if ea + eb > self.e_cap {
                    continue;
                }
                let prod = self.mul(pa, pb);
                if !prod.is_zero() {
                    out.entry(ea + eb).or_default().add_scaled(&prod, &Q::one());
                }
            }
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    fn product(&self, k: &Monomial, slots: (usize, usize), memo: &mut HashMap<(Monomial, usize, usize), Series>) -> Series {
        if k.is_empty() {
            return Series::from([(0, Poly3::one())]);
        }
        let key = (k.clone(), slots.0, slots.1);
        if let Some(s) = memo.get(&key) {
            return s.clone();
        }
        let rest: Monomial = k[1..].iter().copied().collect();
        let head = self.inner(k[0], slots);
        let out = self.mul_series(&head, &self.product(&rest, slots, memo));
        memo.insert(key, out.clone());
        out
    }

    /// `[x^{-p-1}]` of `F_o^m(A, B)` where one argument is the inner law
    /// series in `inner_slots` and the other is the plain variable set
    /// `plain_slot`.
    fn outer(
        &self,
        o: Letter,
        m: i64,
        p: i64,
        inner_first: bool,
        plain_slot: usize,
        inner_slots: (usize, usize),
        memo: &mut HashMap<(Monomial, usize, usize), Series>,
    ) -> Poly3 {
        let mut out = Poly3::default();
        if m > self.ue - p - 2 - self.t.kappa as i64 {
            return out;
        }
        let Some(cell) = self.t.entries.get(&(o, m)) else { return out };
        for ((k, kp), c) in cell {
            let (plain, nested) = if inner_first { (kp, k) } else { (k, kp) };
            if !self.inside(plain) || plain.len() + nested.len() > self.degree {
                continue;
            }
            let prod = self.product(nested, inner_slots, memo);
            if let Some(coef) = prod.get(&(-p - 1)) {
                out.add_scaled(&self.mul(&Poly3::var(plain_slot, plain), coef), c);
            }
        }
        out
    }
}

/// One summand family of the identity: coefficient, outer index, inner index.
struct Term {
    inner_first: bool,
    plain_slot: usize,
    inner_slots: (usize, usize),
    indices: Vec<(Q, i64, i64)>,
}

fn terms(l: i64, t: i64, j: i64, pmax: i64) -> [Term; 3] {
    let range = |base: i64, top: i64| -> Vec<i64> {
        let mut hi = pmax - base;
        if top >= 0 {
            hi = hi.min(top);
        }
        (0..=hi).collect()
    };
    // F(x1)(X, F(x2)(Y, Z))
    let a = range(j, l).into_iter().map(|i| (sign(i) * binom(l, i as u64), t + l - i, j + i)).collect();
    // F(x2)(Y, F(x1)(X, Z))
    let b = range(t, l).into_iter().map(|i| (-sign(l + i) * binom(l, i as u64), j + l - i, t + i)).collect();
    // F(x2)(F(x0)(X, Y), Z)
    let c = range(l, t).into_iter().map(|i| (-binom(t, i as u64), t + j - i, l + i)).collect();
    [
        Term { inner_first: false, plain_slot: 0, inner_slots: (1, 2), indices: a },
        Term { inner_first: false, plain_slot: 1, inner_slots: (0, 2), indices: b },
        Term { inner_first: true, plain_slot: 2, inner_slots: (0, 1), indices: c },
    ]
}

struct Plan {
    need: TruncationNeed,
    e_cap: i64,
    ue: i64,
    pmax: i64,
}

/// What the table must cover for the identity at `samples`, checked in
/// total degree `degree` with targets of stratum at most `cap`.
fn plan(t: &FvlTable, samples: &[(i64, i64, i64)], degree: u32, cap: u32) -> Plan {
    let kappa = t.kappa as i64;
    let ue = degree as i64 * (cap as i64 + kappa);
    let pmax = (ue - 1 - kappa).max(-1);
    let qmax = ue - kappa - 1;
    let mut lo = i64::MAX;
    let mut hi = qmax;
    let mut p_min = i64::MAX;
    let mut depth = cap as i64;
    for &(l, tt, j) in samples {
        for term in terms(l, tt, j, pmax) {
            for (_, m, p) in term.indices {
                p_min = p_min.min(p);
                depth = depth.max(ue - p - 1 - kappa);
                if m <= ue - p - 2 - kappa {
                    lo = lo.min(m);
                    hi = hi.max(m);
                }
            }
        }
    }
    if p_min == i64::MAX {
        p_min = 0;
    }
    let e_cap = -p_min - 1 + (degree as i64 - 1).max(0) * (qmax + 1).max(0);
    let lo = lo.min(-e_cap - 1);
    Plan {
        need: TruncationNeed { what: "Jacobi check".into(), depth: depth.max(0) as u32, window: (lo, hi), degree },
        e_cap,
        ue,
        pmax,
    }
}

fn covers(t: &FvlTable, need: &TruncationNeed) -> bool {
    t.degree >= need.degree && t.depth >= need.depth && t.window.0 <= need.window.0 && t.window.1 >= need.window.1
}

#[derive(Clone, Debug, Serialize)]
pub struct JacobiFailure {
    pub sample: (i64, i64, i64),
    pub output: String,
    pub residual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct JacobiReport {
    pub degree: u32,
    pub target_depth: u32,
    pub checked: usize,
    pub failures: Vec<JacobiFailure>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the Jacobi identity of the law as a formal series identity in
/// `X, Y, Z` up to total degree `degree`, for each `(l, t, j)` sample.
///
/// Targets are the positions of the largest stratum the table supports; if
/// it cannot support even stratum 0 the required truncation is reported.
pub fn check_fvl_jacobi(t: &FvlTable, samples: &[(i64, i64, i64)], degree: u32, exec: Exec) -> Result<JacobiReport> {
    let mut chosen = None;
    for cap in (0..=t.depth).rev() {
        let pl = plan(t, samples, degree, cap);
        if covers(t, &pl.need) {
            chosen = Some((cap, pl));
            break;
        }
    }
    let Some((cap, pl)) = chosen else {
        return Err(Error::TruncationInsufficient(plan(t, samples, degree, 0).need));
    };
    let ctx = Ctx { t, degree: degree as usize, cap, e_cap: pl.e_cap, ue: pl.ue };
    let outputs: Vec<Letter> = t.positions.keys().copied().filter(|l| t.stratum(*l) <= cap).collect();
    let results = exec.map(&outputs, |o| {
        let mut memo = HashMap::new();
        let mut fails = Vec::new();
        for &(l, tt, j) in samples {
            let mut res = Poly3::default();
            for term in terms(l, tt, j, pl.pmax) {
                for (c, m, p) in &term.indices {
                    let x = ctx.outer(*o, *m, *p, term.inner_first, term.plain_slot, term.inner_slots, &mut memo);
                    res.add_scaled(&x, c);
                }
            }
            if !res.is_zero() {
                fails.push(JacobiFailure { sample: (l, tt, j), output: t.name(*o).to_string(), residual: res.render(t) });
            }
        }
        fails
    });
    Ok(JacobiReport {
        degree,
        target_depth: cap,
        checked: outputs.len() * samples.len(),
        failures: results.into_iter().flatten().collect(),
    })
}
