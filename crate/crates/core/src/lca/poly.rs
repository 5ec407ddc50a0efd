use num::{One, Zero};

use crate::scalar::Q;

/// Dense polynomial in `∂` over `Q`, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DPoly(Vec<Q>);

impl DPoly {
    pub fn zero() -> Self {
        DPoly(Vec::new())
    }

    pub fn monomial(c: Q, d: usize) -> Self {
        let mut v = vec![Q::zero(); d + 1];
        v[d] = c;
        let mut p = DPoly(v);
        p.trim();
        p
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.0
    }

    pub fn lead(&self) -> Option<&Q> {
        self.0.last()
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn add_monomial(&mut self, c: &Q, d: usize) {
        if self.0.len() <= d {
            self.0.resize(d + 1, Q::zero());
        }
        self.0[d] += c;
        self.trim();
    }

    /// `self -= q * other`
    pub fn sub_mul(&mut self, q: &DPoly, other: &DPoly) {
        for (i, a) in q.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                self.add_monomial(&-(a * b), i + j);
            }
        }
    }

    pub fn scale(&mut self, c: &Q) {
        for x in &mut self.0 {
            *x *= c;
        }
        self.trim();
    }

    /// Quotient and remainder; `d` must be nonzero.
    pub fn divrem(&self, d: &DPoly) -> (DPoly, DPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = Q::one() / d.lead().unwrap();
        let mut r = self.clone();
        let mut q = DPoly::zero();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = r.lead().unwrap() * &lead_inv;
            let t = DPoly::monomial(c, rd - dd);
            r.sub_mul(&t, d);
            q.add_monomial(t.lead().unwrap(), rd - dd);
        }
        (q, r)
    }
}
