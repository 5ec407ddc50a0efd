use super::presentation::LcaPresentation;
use super::vector::{BasisIndex, ConformalVector, LambdaMuPoly, LambdaPoly};
use num::One;

use crate::scalar::{binom, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Residual {
    Lambda(LambdaPoly),
    LambdaMu(LambdaMuPoly),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    /// First offending generator tuple and the nonzero residual there.
    pub witness: Option<(Vec<u32>, Residual)>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }

    pub fn failed_axioms(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| !c.passed()).map(|c| c.axiom).collect()
    }
}

fn gen(g: u32) -> ConformalVector {
    ConformalVector::unit(BasisIndex::new(g, 0))
}

/// `[a_λ b] + [b_{-λ-∂} a]` for a stored pair `a <= b`.
pub fn skew_residual(p: &LcaPresentation, a: u32, b: u32) -> LambdaPoly {
    let mut r = p.brackets().get(&(a, b)).cloned().unwrap_or_default();
    r.add(&p.substitute_reflected(p.generator_bracket(b, a)));
    r
}

/// `[[a_λ b]_{λ+μ} c] + [b_μ [a_λ c]] - [a_λ [b_μ c]]`
pub fn jacobi_residual(p: &LcaPresentation, a: u32, b: u32, c: u32) -> LambdaMuPoly {
    let (va, vb, vc) = (gen(a), gen(b), gen(c));
    let one = Q::one();
    let mut out = LambdaMuPoly::zero();
    for (q, x) in p.lambda_bracket(&vb, &vc).coeffs().iter().enumerate() {
        for (pp, y) in p.lambda_bracket(&va, x).coeffs().iter().enumerate() {
            out.add_at(pp as u32, q as u32, y, &-one.clone());
        }
    }
    for (q, x) in p.lambda_bracket(&va, &vc).coeffs().iter().enumerate() {
        for (pp, y) in p.lambda_bracket(&vb, x).coeffs().iter().enumerate() {
            out.add_at(q as u32, pp as u32, y, &one);
        }
    }
    for (pp, z) in p.lambda_bracket(&va, &vb).coeffs().iter().enumerate() {
        for (r, w) in p.lambda_bracket(z, &vc).coeffs().iter().enumerate() {
            // λ^p (λ+μ)^r
            for s in 0..=r {
                out.add_at((pp + s) as u32, (r - s) as u32, w, &binom(r as i64, s as u64));
            }
        }
    }
    out
}

/// Skew-symmetry on every stored and diagonal pair, Jacobi on every
/// ordered generator triple.
pub fn check_lca_axioms(p: &LcaPresentation) -> AxiomReport {
    let n = p.rank() as u32;
    let mut skew = None;
    'outer: for a in 0..n {
        for b in a..n {
            let r = skew_residual(p, a, b);
            if !r.is_zero() {
                skew = Some((vec![a, b], Residual::Lambda(r)));
                break 'outer;
            }
        }
    }
    let mut jac = None;
    'outer2: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let r = jacobi_residual(p, a, b, c);
                if !r.is_zero() {
                    jac = Some((vec![a, b, c], Residual::LambdaMu(r)));
                    break 'outer2;
                }
            }
        }
    }
    AxiomReport {
        checks: vec![
            AxiomCheck { axiom: "antisymmetry", witness: skew },
            AxiomCheck { axiom: "jacobi", witness: jac },
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden;
    use crate::scalar::q;

    #[test]
    fn golden_pass() {
        for p in golden::all() {
            assert!(check_lca_axioms(&p).passed(), "{}", p.name());
        }
        assert!(check_lca_axioms(&golden::split_center()).passed());
        assert!(check_lca_axioms(&golden::mixed_depth()).passed());
    }

    #[test]
    fn faults_detected() {
        for (p, axiom) in golden::faulty() {
            let r = check_lca_axioms(&p);
            assert_eq!(r.failed_axioms().first().copied(), Some(axiom), "{}", p.name());
        }
    }

    #[test]
    fn missing_lambda_residual_is_2k() {
        let (p, _) = golden::faulty().remove(0);
        let r = skew_residual(&p, 0, 0);
        assert_eq!(r, LambdaPoly::constant(gen(1).scaled(&q(2))));
    }
}
