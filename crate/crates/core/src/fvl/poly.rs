use std::collections::BTreeMap;

use num::{One, Zero};

use crate::enveloping::Monomial;
use crate::scalar::{fmt_q, Q};

use super::table::FvlTable;

/// Polynomial in three sets of variables `X, Y, Z`, each indexed by positions.
pub type Key = [Monomial; 3];

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Poly3(pub BTreeMap<Key, Q>);

impl Poly3 {
    pub fn one() -> Poly3 {
        let mut p = Poly3::default();
        p.0.insert(Default::default(), Q::one());
        p
    }

    pub fn var(slot: usize, m: &Monomial) -> Poly3 {
        let mut key: Key = Default::default();
        key[slot] = m.clone();
        let mut p = Poly3::default();
        p.0.insert(key, Q::one());
        p
    }

    pub fn add_scaled(&mut self, other: &Poly3, c: &Q) {
        for (k, x) in &other.0 {
            let slot = self.0.entry(k.clone()).or_insert_with(Q::zero);
            *slot += x * c;
            if slot.is_zero() {
                self.0.remove(k);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn merge(a: &Monomial, b: &Monomial) -> Monomial {
    let mut m: Monomial = a.iter().chain(b.iter()).copied().collect();
    m.sort();
    m
}

impl Poly3 {
    pub fn mul(&self, b: &Poly3, degree: usize) -> Poly3 {
        let mut out = Poly3::default();
        for (ka, ca) in &self.0 {
            let da: usize = ka.iter().map(|m| m.len()).sum();
            for (kb, cb) in &b.0 {
                let db: usize = kb.iter().map(|m| m.len()).sum();
                if da + db > degree {
                    continue;
                }
                let key = [merge(&ka[0], &kb[0]), merge(&ka[1], &kb[1]), merge(&ka[2], &kb[2])];
                let slot = out.0.entry(key.clone()).or_insert_with(Q::zero);
                *slot += ca * cb;
                if slot.is_zero() {
                    out.0.remove(&key);
                }
            }
        }
        out
    }

    pub fn render(&self, t: &FvlTable) -> String {
        let mut parts = Vec::new();
        for (key, c) in self.0.iter().take(8) {
            let mut vars = Vec::new();
            for (slot, name) in ["X", "Y", "Z"].iter().enumerate() {
                for l in &key[slot] {
                    vars.push(format!("{}_{}", name, t.name(*l)));
                }
            }
            parts.push(format!("{}*{}", fmt_q(c), vars.join("*")));
        }
        if self.0.len() > 8 {
            parts.push("...".into());
        }
        parts.join(" + ")
    }
}
