use std::collections::BTreeMap;

use num::{One, Zero};
use smallvec::SmallVec;

use crate::lca::Letter;
use crate::linalg::SparseVec;
use crate::scalar::{factorial, Q};

/// A PBW monomial: letters in non-decreasing order. The empty monomial is
/// the vacuum.
pub type Monomial = SmallVec<[Letter; 4]>;

pub fn monomial(letters: &[Letter]) -> Monomial {
    let mut m: Monomial = letters.iter().copied().collect();
    m.sort();
    m
}

/// `k!` of the multi-index underlying a monomial: product of the factorials
/// of the letter multiplicities.
pub fn multi_factorial(m: &[Letter]) -> Q {
    let mut out = Q::one();
    let mut i = 0;
    while i < m.len() {
        let mut j = i;
        while j < m.len() && m[j] == m[i] {
            j += 1;
        }
        out *= factorial((j - i) as u64);
        i = j;
    }
    out
}

/// Element of the enveloping vertex algebra in the PBW basis.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UElement {
    terms: BTreeMap<Monomial, Q>,
}

impl UElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn vacuum() -> Self {
        Self::monomial(Monomial::new(), Q::one())
    }

    pub fn monomial(m: Monomial, c: Q) -> Self {
        let mut u = Self::zero();
        u.add_term(m, c);
        u
    }

    pub fn letter(l: Letter) -> Self {
        Self::monomial(smallvec::smallvec![l], Q::one())
    }

    /// Length-one element with the given letter coordinates.
    pub fn from_letters(v: &SparseVec<Letter>) -> Self {
        let mut u = Self::zero();
        for (l, c) in v {
            u.add_term(smallvec::smallvec![*l], c.clone());
        }
        u
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, other: &UElement, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn add(&mut self, other: &UElement) {
        self.add_scaled(other, &Q::one());
    }

    pub fn sub(&mut self, other: &UElement) {
        self.add_scaled(other, &-Q::one());
    }

    pub fn scaled(&self, c: &Q) -> UElement {
        let mut out = UElement::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &[Letter]) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    /// Coefficients of the length-one monomials.
    pub fn linear_part(&self) -> SparseVec<Letter> {
        self.terms
            .iter()
            .filter(|(m, _)| m.len() == 1)
            .map(|(m, c)| (m[0], c.clone()))
            .collect()
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }
}

/// Polynomial in `λ` with coefficients in `U(R)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ULambdaPoly {
    coeffs: Vec<UElement>,
}

impl ULambdaPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, n: usize) -> UElement {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[UElement] {
        &self.coeffs
    }

    /// `self += c * λ^n * u`
    pub fn add_at(&mut self, n: usize, u: &UElement, c: &Q) {
        if u.is_zero() || c.is_zero() {
            return;
        }
        if self.coeffs.len() <= n {
            self.coeffs.resize(n + 1, UElement::zero());
        }
        self.coeffs[n].add_scaled(u, c);
        while self.coeffs.last().is_some_and(|x| x.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn add_scaled(&mut self, other: &ULambdaPoly, c: &Q) {
        for (n, u) in other.coeffs.iter().enumerate() {
            self.add_at(n, u, c);
        }
    }
}
