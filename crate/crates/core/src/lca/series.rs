use super::presentation::LcaPresentation;
use super::submodule::Submodule;
use super::vector::{BasisIndex, ConformalVector};
use crate::error::{Error, Result};
use crate::render;

/// Longest series computed before giving up on stabilization.
pub const MAX_SERIES_LEN: usize = 64;

#[derive(Clone, Debug)]
pub struct LowerCentralSeries {
    /// `R^1 ⊇ R^2 ⊇ ...`; ends in the zero module when nilpotent, otherwise
    /// at the first term equal to its successor.
    pub terms: Vec<Submodule>,
    pub nilpotent: bool,
}

impl LowerCentralSeries {
    /// `max { n : R^n ≠ 0 }` for nilpotent algebras.
    pub fn degree(&self) -> Option<usize> {
        self.nilpotent.then(|| self.terms.len() - 1)
    }
}

pub fn lower_central_series(p: &LcaPresentation) -> LowerCentralSeries {
    let gens: Vec<ConformalVector> =
        (0..p.rank() as u32).map(|g| ConformalVector::unit(BasisIndex::new(g, 0))).collect();
    let mut terms = vec![Submodule::whole(p)];
    loop {
        let last = terms.last().unwrap();
        if last.is_zero() {
            return LowerCentralSeries { terms, nilpotent: true };
        }
        if terms.len() >= MAX_SERIES_LEN {
            return LowerCentralSeries { terms, nilpotent: false };
        }
        let mut products = Vec::new();
        for g in &gens {
            for h in last.generators() {
                products.extend(p.lambda_bracket(g, &h).coeffs().iter().cloned());
            }
        }
        let next = Submodule::generated(p, &products);
        if &next == last {
            return LowerCentralSeries { terms, nilpotent: false };
        }
        terms.push(next);
    }
}

/// Lower central series of a nilpotent algebra, with the filtration degree.
#[derive(Clone, Debug)]
pub struct Filtration {
    pub series: Vec<Submodule>,
}

impl Filtration {
    pub fn new(p: &LcaPresentation) -> Result<Filtration> {
        let s = lower_central_series(p);
        if !s.nilpotent {
            let stable = s.terms.last().unwrap();
            let shown: Vec<String> = stable.generators().iter().map(|v| render::vector(p, v)).collect();
            return Err(Error::NotNilpotent { stable: format!("<{}>", shown.join(", ")) });
        }
        Ok(Filtration { series: s.terms })
    }

    /// Nilpotency degree `N`.
    pub fn degree(&self) -> usize {
        self.series.len() - 1
    }

    /// `R^j` for `j >= 1`; zero beyond `N`.
    pub fn term(&self, j: usize) -> &Submodule {
        &self.series[(j.max(1) - 1).min(self.series.len() - 1)]
    }

    /// Largest `j` with `v ∈ R^j`; `None` for `v = 0`.
    pub fn theta(&self, v: &ConformalVector) -> Option<u32> {
        if v.is_zero() {
            return None;
        }
        let mut j = 1;
        while j < self.series.len() && self.series[j].contains(v) {
            j += 1;
        }
        Some(j as u32)
    }
}

/// `Θ(v)`; fails on algebras that are not nilpotent.
pub fn theta(p: &LcaPresentation, v: &ConformalVector) -> Result<Option<u32>> {
    Ok(Filtration::new(p)?.theta(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden;

    fn e(g: u32, d: u32) -> ConformalVector {
        ConformalVector::unit(BasisIndex::new(g, d))
    }

    #[test]
    fn degrees() {
        for (p, n) in golden::nilpotent() {
            assert_eq!(lower_central_series(&p).degree(), Some(n), "{}", p.name());
        }
        assert_eq!(lower_central_series(&golden::split_center()).degree(), Some(2));
        assert_eq!(lower_central_series(&golden::mixed_depth()).degree(), Some(2));
    }

    #[test]
    fn heisenberg_series() {
        let p = golden::heisenberg();
        let s = lower_central_series(&p);
        assert_eq!(s.terms.len(), 3);
        assert_eq!(s.terms[1].generators(), vec![e(1, 0)]);
        assert!(s.terms[2].is_zero());
    }

    #[test]
    fn virasoro_stabilizes() {
        let p = golden::virasoro();
        let s = lower_central_series(&p);
        assert!(!s.nilpotent);
        assert!(s.terms.last().unwrap().contains(&e(0, 0)));
        assert!(matches!(Filtration::new(&p), Err(Error::NotNilpotent { .. })));
        assert!(theta(&p, &e(0, 0)).is_err());
    }

    #[test]
    fn theta_values() {
        let p = golden::n3();
        let f = Filtration::new(&p).unwrap();
        assert_eq!(f.theta(&e(0, 0)), Some(1));
        assert_eq!(f.theta(&e(2, 4)), Some(2));
        assert_eq!(f.theta(&e(3, 1)), Some(3));
        assert_eq!(f.theta(&ConformalVector::zero()), None);
        let h = Filtration::new(&golden::heisenberg()).unwrap();
        assert_eq!(h.theta(&e(1, 0)), Some(2));
    }

    #[test]
    fn brackets_respect_filtration() {
        for (p, _) in golden::nilpotent().into_iter().chain([(golden::mixed_depth(), 2)]) {
            let f = Filtration::new(&p).unwrap();
            let basis = p.basis_up_to(2);
            for a in &basis {
                for b in &basis {
                    let (va, vb) = (e(a.gen, a.depth), e(b.gen, b.depth));
                    let (ta, tb) = (f.theta(&va).unwrap(), f.theta(&vb).unwrap());
                    for c in p.lambda_bracket(&va, &vb).coeffs() {
                        assert!(f.term((ta + tb) as usize).contains(c) || c.is_zero());
                    }
                }
            }
        }
    }
}
