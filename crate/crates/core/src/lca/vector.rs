use std::collections::BTreeMap;

use num::{One, Zero};

use crate::scalar::Q;

/// A basis element `∂^{(depth)} g` of the free `Q[∂]`-module on the generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisIndex {
    pub gen: u32,
    pub depth: u32,
}

impl BasisIndex {
    pub fn new(gen: u32, depth: u32) -> Self {
        BasisIndex { gen, depth }
    }
}

/// Finite `Q`-linear combination of basis elements. Zero coefficients are
/// never stored, so structural equality is mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ConformalVector {
    terms: BTreeMap<BasisIndex, Q>,
}

impl ConformalVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit(idx: BasisIndex) -> Self {
        Self::term(idx, Q::one())
    }

    pub fn term(idx: BasisIndex, c: Q) -> Self {
        let mut v = Self::zero();
        v.add_term(idx, c);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, idx: BasisIndex, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(idx).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&idx);
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, other: &ConformalVector, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (idx, x) in &other.terms {
            self.add_term(*idx, x * c);
        }
    }

    pub fn add(&mut self, other: &ConformalVector) {
        self.add_scaled(other, &Q::one());
    }

    pub fn scaled(&self, c: &Q) -> ConformalVector {
        let mut out = ConformalVector::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn neg(&self) -> ConformalVector {
        self.scaled(&-Q::one())
    }

    pub fn coeff(&self, idx: BasisIndex) -> Q {
        self.terms.get(&idx).cloned().unwrap_or_else(Q::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisIndex, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_depth(&self) -> Option<u32> {
        self.terms.keys().map(|i| i.depth).max()
    }
}

impl FromIterator<(BasisIndex, Q)> for ConformalVector {
    fn from_iter<T: IntoIterator<Item = (BasisIndex, Q)>>(iter: T) -> Self {
        let mut v = ConformalVector::zero();
        for (i, c) in iter {
            v.add_term(i, c);
        }
        v
    }
}

/// Polynomial in `λ` with coefficients in `R`; `coeffs[n]` multiplies `λ^n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LambdaPoly {
    coeffs: Vec<ConformalVector>,
}

impl LambdaPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(v: ConformalVector) -> Self {
        let mut p = Self::zero();
        p.add_at(0, &v, &Q::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest power of `λ` with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, n: usize) -> ConformalVector {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[ConformalVector] {
        &self.coeffs
    }

    /// `self += c * λ^n * v`
    pub fn add_at(&mut self, n: usize, v: &ConformalVector, c: &Q) {
        if v.is_zero() || c.is_zero() {
            return;
        }
        if self.coeffs.len() <= n {
            self.coeffs.resize(n + 1, ConformalVector::zero());
        }
        self.coeffs[n].add_scaled(v, c);
        self.trim();
    }

    pub fn add(&mut self, other: &LambdaPoly) {
        for (n, v) in other.coeffs.iter().enumerate() {
            self.add_at(n, v, &Q::one());
        }
    }

    pub fn scaled(&self, c: &Q) -> LambdaPoly {
        let mut out = LambdaPoly::zero();
        for (n, v) in self.coeffs.iter().enumerate() {
            out.add_at(n, v, c);
        }
        out
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|v| v.is_zero()) {
            self.coeffs.pop();
        }
    }
}

/// Polynomial in `λ, μ` with coefficients in `R`, used for Jacobi residuals.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LambdaMuPoly {
    terms: BTreeMap<(u32, u32), ConformalVector>,
}

impl LambdaMuPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `self += c * λ^p μ^q * v`
    pub fn add_at(&mut self, p: u32, q: u32, v: &ConformalVector, c: &Q) {
        if v.is_zero() || c.is_zero() {
            return;
        }
        let slot = self.terms.entry((p, q)).or_default();
        slot.add_scaled(v, c);
        if slot.is_zero() {
            self.terms.remove(&(p, q));
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32), &ConformalVector)> {
        self.terms.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    #[test]
    fn cancellation_removes_terms() {
        let i = BasisIndex::new(0, 1);
        let mut v = ConformalVector::term(i, q(2));
        v.add_term(i, q(-2));
        assert!(v.is_zero());
        assert_eq!(v, ConformalVector::zero());
    }

    #[test]
    fn lambda_poly_trims() {
        let v = ConformalVector::unit(BasisIndex::new(0, 0));
        let mut p = LambdaPoly::zero();
        p.add_at(3, &v, &q(1));
        assert_eq!(p.degree(), Some(3));
        p.add_at(3, &v, &q(-1));
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
    }
}
