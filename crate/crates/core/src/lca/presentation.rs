use std::collections::{BTreeMap, HashSet};

use num::One;

use super::vector::{BasisIndex, ConformalVector, LambdaPoly};
use crate::error::{Error, Result};
use crate::scalar::{binom, factorial, sign, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    Free,
    /// `∂^m g = 0`
    Torsion(u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSpec {
    pub name: String,
    pub kind: GenKind,
}

impl GeneratorSpec {
    pub fn free(name: &str) -> Self {
        GeneratorSpec { name: name.to_string(), kind: GenKind::Free }
    }

    pub fn torsion(name: &str, m: u32) -> Self {
        GeneratorSpec { name: name.to_string(), kind: GenKind::Torsion(m) }
    }
}

/// A finitely generated Lie conformal algebra given by generators and the
/// λ-brackets `[g_i λ g_j]` for `i <= j`. The remaining brackets follow from
/// skew-symmetry and are tabulated on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcaPresentation {
    name: String,
    generators: Vec<GeneratorSpec>,
    brackets: BTreeMap<(u32, u32), LambdaPoly>,
    table: Vec<LambdaPoly>,
}

impl LcaPresentation {
    pub fn new(
        name: &str,
        generators: Vec<GeneratorSpec>,
        brackets: BTreeMap<(u32, u32), LambdaPoly>,
    ) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidPresentation("no generators".into()));
        }
        let mut seen = HashSet::new();
        for g in &generators {
            if !seen.insert(g.name.as_str()) {
                return Err(Error::InvalidPresentation(format!("duplicate generator {}", g.name)));
            }
            if g.kind == GenKind::Torsion(0) {
                return Err(Error::InvalidPresentation(format!("torsion order of {} must be positive", g.name)));
            }
        }
        let rank = generators.len() as u32;
        let mut pres = LcaPresentation {
            name: name.to_string(),
            generators,
            brackets: BTreeMap::new(),
            table: Vec::new(),
        };
        for ((i, j), p) in brackets {
            if i > j || j >= rank {
                return Err(Error::InvalidPresentation(format!("bracket key ({i},{j}) is not an ordered pair of generators")));
            }
            let mut reduced = LambdaPoly::zero();
            for (n, v) in p.coeffs().iter().enumerate() {
                if v.iter().any(|(b, _)| b.gen >= rank) {
                    return Err(Error::InvalidPresentation("bracket mentions an unknown generator".into()));
                }
                reduced.add_at(n, &pres.reduce(v), &Q::one());
            }
            if !reduced.is_zero() {
                pres.brackets.insert((i, j), reduced);
            }
        }
        let mut table = vec![LambdaPoly::zero(); (rank * rank) as usize];
        for ((i, j), p) in &pres.brackets {
            table[(i * rank + j) as usize] = p.clone();
            if i != j {
                table[(j * rank + i) as usize] = pres.skew(p);
            }
        }
        pres.table = table;
        Ok(pres)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[GeneratorSpec] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn brackets(&self) -> &BTreeMap<(u32, u32), LambdaPoly> {
        &self.brackets
    }

    pub fn gen_index(&self, name: &str) -> Option<u32> {
        self.generators.iter().position(|g| g.name == name).map(|i| i as u32)
    }

    pub fn kind(&self, gen: u32) -> GenKind {
        self.generators[gen as usize].kind
    }

    /// Whether `∂^{(depth)} g` survives the torsion relations.
    pub fn is_live(&self, idx: BasisIndex) -> bool {
        match self.kind(idx.gen) {
            GenKind::Free => true,
            GenKind::Torsion(m) => idx.depth < m,
        }
    }

    pub fn reduce(&self, v: &ConformalVector) -> ConformalVector {
        v.iter().filter(|(i, _)| self.is_live(**i)).map(|(i, c)| (*i, c.clone())).collect()
    }

    /// Basis of the slice of vectors of depth at most `cap`, in `(gen, depth)` order.
    pub fn basis_up_to(&self, cap: u32) -> Vec<BasisIndex> {
        let mut out = Vec::new();
        for g in 0..self.rank() as u32 {
            for d in 0..=cap {
                let idx = BasisIndex::new(g, d);
                if self.is_live(idx) {
                    out.push(idx);
                }
            }
        }
        out
    }

    /// `∂^{(j)} v`
    pub fn apply_partial(&self, v: &ConformalVector, j: u32) -> ConformalVector {
        let mut out = ConformalVector::zero();
        for (idx, c) in v.iter() {
            let next = BasisIndex::new(idx.gen, idx.depth + j);
            if self.is_live(next) {
                out.add_term(next, c * binom((idx.depth + j) as i64, j as u64));
            }
        }
        out
    }

    /// `[g_λ h]` for generators, stored or derived.
    pub fn generator_bracket(&self, g: u32, h: u32) -> &LambdaPoly {
        &self.table[(g as usize) * self.rank() + h as usize]
    }

    /// `p(λ) ↦ p(-λ-∂)`, with `∂` acting on the coefficients.
    pub fn substitute_reflected(&self, p: &LambdaPoly) -> LambdaPoly {
        let mut out = LambdaPoly::zero();
        for (m, c) in p.coeffs().iter().enumerate() {
            for s in 0..=m {
                let k = binom(m as i64, s as u64) * sign(m as i64) * factorial(s as u64);
                out.add_at(m - s, &self.apply_partial(c, s as u32), &k);
            }
        }
        out
    }

    /// `[b_λ a] = -[a_{-λ-∂} b]`
    fn skew(&self, p: &LambdaPoly) -> LambdaPoly {
        self.substitute_reflected(p).scaled(&-Q::one())
    }

    /// Bilinear extension of the generator brackets by sesquilinearity.
    pub fn lambda_bracket(&self, v: &ConformalVector, w: &ConformalVector) -> LambdaPoly {
        let mut out = LambdaPoly::zero();
        for (a, ca) in v.iter() {
            for (b, cb) in w.iter() {
                let base = self.generator_bracket(a.gen, b.gen);
                if base.is_zero() {
                    continue;
                }
                let (d, e) = (a.depth as usize, b.depth as usize);
                let pre = ca * cb * sign(d as i64) / factorial(d as u64);
                for (m, cm) in base.coeffs().iter().enumerate() {
                    for s in 0..=e {
                        let k = &pre / factorial((e - s) as u64);
                        out.add_at(d + e - s + m, &self.apply_partial(cm, s as u32), &k);
                    }
                }
            }
        }
        out
    }

    /// `v_(n) w = n! [λ^n][v_λ w]`, defined for `n >= 0` only.
    pub fn nth_product(&self, v: &ConformalVector, w: &ConformalVector, n: i64) -> Result<ConformalVector> {
        if n < 0 {
            return Err(Error::NegativeIndex(n));
        }
        Ok(self.lambda_bracket(v, w).coeff(n as usize).scaled(&factorial(n as u64)))
    }

    /// The Lie bracket `∫_{-∂}^0 [v_λ w] dλ` on `R/∂R`-lifts.
    pub fn lie_bracket(&self, v: &ConformalVector, w: &ConformalVector) -> ConformalVector {
        let mut out = ConformalVector::zero();
        for (n, c) in self.lambda_bracket(v, w).coeffs().iter().enumerate() {
            let k = sign(n as i64) * factorial(n as u64);
            out.add_scaled(&self.apply_partial(c, n as u32 + 1), &k);
        }
        out
    }

    /// One more than the largest `λ`-power plus coefficient depth over all
    /// generator pairs; the weight offset used by truncation guards.
    pub fn kappa(&self) -> u32 {
        let mut best = 0;
        for p in &self.table {
            for (m, c) in p.coeffs().iter().enumerate() {
                if let Some(d) = c.max_depth() {
                    best = best.max(m as u32 + d + 1);
                }
            }
        }
        best.max(1)
    }

    pub fn is_one(&self, v: &ConformalVector, idx: BasisIndex) -> bool {
        v.len() == 1 && v.coeff(idx).is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden;
    use crate::scalar::{q, qr};

    fn e(g: u32, d: u32) -> ConformalVector {
        ConformalVector::unit(BasisIndex::new(g, d))
    }

    #[test]
    fn closed_form_matches_oracle() {
        for p in golden::all() {
            let basis = p.basis_up_to(3);
            for a in &basis {
                for b in &basis {
                    assert_eq!(
                        p.lambda_bracket(&ConformalVector::unit(*a), &ConformalVector::unit(*b)),
                        crate::oracle::bracket(&p, *a, *b),
                        "{} {:?} {:?}",
                        p.name(),
                        a,
                        b
                    );
                }
            }
        }
    }

    #[test]
    fn heisenberg_values() {
        let p = golden::heisenberg();
        let lk = p.lambda_bracket(&e(0, 0), &e(0, 0));
        assert_eq!(lk.degree(), Some(1));
        assert_eq!(lk.coeff(1), e(1, 0));
        assert_eq!(p.nth_product(&e(0, 0), &e(0, 0), 1).unwrap(), e(1, 0));
        assert_eq!(p.nth_product(&e(0, 0), &e(0, 0), 0).unwrap(), ConformalVector::zero());
        assert!(matches!(p.nth_product(&e(0, 0), &e(0, 0), -1), Err(Error::NegativeIndex(-1))));
        assert!(p.lie_bracket(&e(0, 0), &e(0, 0)).is_zero());
    }

    #[test]
    fn virasoro_products() {
        let p = golden::virasoro();
        let l = e(0, 0);
        assert_eq!(p.nth_product(&l, &l, 0).unwrap(), e(0, 1));
        assert_eq!(p.nth_product(&l, &l, 1).unwrap(), e(0, 0).scaled(&q(2)));
        assert_eq!(p.nth_product(&l, &l, 3).unwrap(), e(1, 0).scaled(&qr(1, 2)));
    }

    fn lie_by_integration(p: &LcaPresentation, v: &ConformalVector, w: &ConformalVector) -> ConformalVector {
        // ∫_{-∂}^0 λ^n dλ = (-1)^n ∂^{n+1}/(n+1), with plain powers of ∂
        let mut out = ConformalVector::zero();
        for (n, c) in p.lambda_bracket(v, w).coeffs().iter().enumerate() {
            let mut x = c.clone();
            for _ in 0..=n {
                x = p.apply_partial(&x, 1);
            }
            out.add_scaled(&x, &(sign(n as i64) / q(n as i64 + 1)));
        }
        out
    }

    #[test]
    fn lie_bracket_matches_integration() {
        for p in golden::all() {
            let basis = p.basis_up_to(2);
            for a in &basis {
                for b in &basis {
                    let (va, vb) = (ConformalVector::unit(*a), ConformalVector::unit(*b));
                    assert_eq!(p.lie_bracket(&va, &vb), lie_by_integration(&p, &va, &vb));
                }
            }
        }
    }

    #[test]
    fn current_algebra_lie_bracket() {
        let p = golden::n3();
        // [x_λ y] = z gives [x, y] = ∂z
        assert_eq!(p.lie_bracket(&e(0, 0), &e(1, 0)), e(2, 1));
    }

    #[test]
    fn torsion_kills_derivatives() {
        let p = golden::heisenberg();
        assert!(p.apply_partial(&e(1, 0), 1).is_zero());
        assert_eq!(p.apply_partial(&e(0, 1), 2), e(0, 3).scaled(&q(3)));
    }

    #[test]
    fn rejects_bad_keys() {
        let gens = vec![GeneratorSpec::free("a"), GeneratorSpec::free("b")];
        let mut br = BTreeMap::new();
        br.insert((1, 0), LambdaPoly::constant(e(0, 0)));
        assert!(LcaPresentation::new("bad", gens, br).is_err());
    }

    #[test]
    fn kappa_values() {
        assert_eq!(golden::heisenberg().kappa(), 2);
        assert_eq!(golden::n3().kappa(), 1);
        assert_eq!(golden::virasoro().kappa(), 4);
        assert_eq!(golden::abelian(1).kappa(), 1);
    }
}
