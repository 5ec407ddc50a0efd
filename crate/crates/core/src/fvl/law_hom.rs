use std::collections::BTreeMap;

use serde::Serialize;

use super::poly::Poly3;
use super::table::FvlTable;
use crate::enveloping::Monomial;
use crate::lca::Letter;
use crate::scalar::Q;

/// A formal map between laws: each target position is a power series
/// without constant term in the source positions.
#[derive(Clone, Debug, Default)]
pub struct LawMap {
    pub components: BTreeMap<Letter, BTreeMap<Monomial, Q>>,
}

impl LawMap {
    /// `x_l ↦ c_l x_l` on the given positions.
    pub fn diagonal(scales: &[(Letter, Q)]) -> LawMap {
        let mut components = BTreeMap::new();
        for (l, c) in scales {
            components.insert(*l, BTreeMap::from([(smallvec::smallvec![*l], c.clone())]));
        }
        LawMap { components }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LawHomReport {
    pub compared: Vec<i64>,
    /// Indices whose left side would need source entries outside the window.
    pub skipped: Vec<i64>,
    pub failures: Vec<String>,
}

impl LawHomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

type Series = BTreeMap<i64, Poly3>;

fn law_series(t: &FvlTable, i: Letter, degree: usize) -> Series {
    let mut out = Series::new();
    for n in t.window.0..=t.window.1 {
        let Some(cell) = t.entries.get(&(i, n)) else { continue };
        let mut p = Poly3::default();
        for ((k, kp), c) in cell {
            if k.len() + kp.len() <= degree {
                p.add_scaled(&Poly3::var(0, k).mul(&Poly3::var(1, kp), degree), c);
            }
        }
        if !p.is_zero() {
            out.insert(-n - 1, p);
        }
    }
    out
}

fn mul_series(a: &Series, b: &Series, degree: usize) -> Series {
    let mut out = Series::new();
    for (ea, pa) in a {
        for (eb, pb) in b {
            out.entry(ea + eb).or_default().add_scaled(&pa.mul(pb, degree), &Q::from_integer(1.into()));
        }
    }
    out.retain(|_, p| !p.is_zero());
    out
}

fn substitute(alpha: &LawMap, l: Letter, slot: usize) -> Poly3 {
    let mut p = Poly3::default();
    if let Some(series) = alpha.components.get(&l) {
        for (m, c) in series {
            p.add_scaled(&Poly3::var(slot, m), c);
        }
    }
    p
}

/// Checks `α(F(x)(X, Y)) = G(x)(α(X), α(Y))` coefficient-wise up to the
/// common degree, on the common window.
pub fn check_law_hom(alpha: &LawMap, src: &FvlTable, dst: &FvlTable) -> LawHomReport {
    let degree = src.degree.min(dst.degree) as usize;
    let lo = src.window.0.max(dst.window.0);
    let hi = src.window.1.min(dst.window.1);
    let max_r = alpha.components.values().flat_map(|s| s.keys().map(|m| m.len())).max().unwrap_or(1).max(1) as i64;
    let mut report = LawHomReport { compared: Vec::new(), skipped: Vec::new(), failures: Vec::new() };
    let mut cache: BTreeMap<Letter, Series> = BTreeMap::new();
    for n in lo..=hi {
        // the factors of a product of r series can need indices down to this
        if n - (max_r - 1) * (src.window.1 + 1) < src.window.0 {
            report.skipped.push(n);
            continue;
        }
        report.compared.push(n);
        for j in dst.positions.keys() {
            let mut lhs = Poly3::default();
            if let Some(series) = alpha.components.get(j) {
                for (m, c) in series {
                    let mut prod = Series::from([(0, Poly3::one())]);
                    for i in m {
                        let f = cache.entry(*i).or_insert_with(|| law_series(src, *i, degree)).clone();
                        prod = mul_series(&prod, &f, degree);
                    }
                    if let Some(p) = prod.get(&(-n - 1)) {
                        lhs.add_scaled(p, c);
                    }
                }
            }
            let mut rhs = Poly3::default();
            if let Some(cell) = dst.entries.get(&(*j, n)) {
                for ((k, kp), c) in cell {
                    let mut term = Poly3::one();
                    for i in k {
                        term = term.mul(&substitute(alpha, *i, 0), degree);
                    }
                    for i in kp {
                        term = term.mul(&substitute(alpha, *i, 1), degree);
                    }
                    rhs.add_scaled(&term, c);
                }
            }
            rhs.add_scaled(&lhs, &-Q::from_integer(1.into()));
            if !rhs.is_zero() {
                report.failures.push(format!("l = {}, n = {}: {}", dst.name(*j), n, rhs.render(dst)));
            }
        }
    }
    report
}
