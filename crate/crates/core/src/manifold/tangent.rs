use std::collections::BTreeMap;

use num::One;

use super::{Point, VertexManifold};
use crate::enveloping::Monomial;
use crate::error::Result;
use crate::lca::{BasisIndex, ConformalVector, GenKind, GeneratorSpec, LambdaPoly, LcaPresentation};
use crate::linalg::axpy;
use crate::scalar::{factorial, Q};

/// Largest torsion order that tangent recovery looks for.
pub const TORSION_PROBE: u32 = 16;

fn apply_derivation(m: &VertexManifold, p: &Point) -> Point {
    // ∂ e_i = π(e_i (-2) 1)
    let mut out = Point::new();
    for (l, c) in p {
        let k: Monomial = smallvec::smallvec![*l];
        axpy(&mut out, c, &m.coefficient(&k, &Monomial::new(), -2));
    }
    out
}

/// Recovers a presentation of the tangent Lie conformal algebra from the
/// degree-(1,1) slice of the product tables and the translation in the
/// creation slice, written back in the generators of the integrated input.
pub fn conf_of(m: &VertexManifold) -> Result<LcaPresentation> {
    let input = m.frame().presentation().clone();
    let rank = input.rank() as u32;
    let gen_point = |g: u32| m.point_of(&ConformalVector::unit(BasisIndex::new(g, 0)));
    let mut gens = Vec::new();
    for (g, spec) in input.generators().iter().enumerate() {
        let mut p = gen_point(g as u32);
        let mut kind = GenKind::Free;
        for order in 1..=TORSION_PROBE {
            p = apply_derivation(m, &p);
            if p.is_empty() {
                kind = GenKind::Torsion(order);
                break;
            }
        }
        gens.push(GeneratorSpec { name: spec.name.clone(), kind });
    }
    let mut brackets = BTreeMap::new();
    for g in 0..rank {
        for h in g..rank {
            let (pg, ph) = (gen_point(g), gen_point(h));
            let mut poly = LambdaPoly::zero();
            for n in 0..m.truncation_bound(&pg, &ph) {
                let mut coeff = Point::new();
                for (x, cx) in &pg {
                    for (y, cy) in &ph {
                        let k: Monomial = smallvec::smallvec![*x];
                        let kp: Monomial = smallvec::smallvec![*y];
                        axpy(&mut coeff, &(cx * cy), &m.coefficient(&k, &kp, n));
                    }
                }
                let v = m.vector_of(&coeff);
                if !v.is_zero() {
                    poly.add_at(n as usize, &v, &(Q::one() / factorial(n as u64)));
                }
            }
            if !poly.is_zero() {
                brackets.insert((g, h), poly);
            }
        }
    }
    LcaPresentation::new(input.name(), gens, brackets)
}
