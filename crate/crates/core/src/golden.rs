//! Reference presentations used throughout the tests and benches.

use std::collections::BTreeMap;

use crate::lca::{BasisIndex, ConformalVector, GeneratorSpec, LambdaPoly, LcaPresentation};
use crate::scalar::{q, qr};

fn e(g: u32, d: u32) -> ConformalVector {
    ConformalVector::unit(BasisIndex::new(g, d))
}

/// Rank-`n` abelian algebra on free generators `a, b, c, ...`.
pub fn abelian(n: usize) -> LcaPresentation {
    let gens = (0..n)
        .map(|i| GeneratorSpec::free(&((b'a' + i as u8) as char).to_string()))
        .collect();
    LcaPresentation::new(&format!("Abelian{n}"), gens, BTreeMap::new()).unwrap()
}

/// `[a_λ a] = λ k`, `k` central and `∂k = 0`.
pub fn heisenberg() -> LcaPresentation {
    let mut br = BTreeMap::new();
    let mut p = LambdaPoly::zero();
    p.add_at(1, &e(1, 0), &q(1));
    br.insert((0, 0), p);
    let gens = vec![GeneratorSpec::free("a"), GeneratorSpec::torsion("k", 1)];
    LcaPresentation::new("Heisenberg", gens, br).unwrap()
}

/// `[L_λ L] = (∂ + 2λ) L + λ^3 C / 12`
pub fn virasoro() -> LcaPresentation {
    let mut p = LambdaPoly::zero();
    p.add_at(0, &e(0, 1), &q(1));
    p.add_at(1, &e(0, 0), &q(2));
    p.add_at(3, &e(1, 0), &qr(1, 12));
    let mut br = BTreeMap::new();
    br.insert((0, 0), p);
    let gens = vec![GeneratorSpec::free("L"), GeneratorSpec::torsion("C", 1)];
    LcaPresentation::new("Virasoro", gens, br).unwrap()
}

/// Current algebra of the 4-dimensional filiform Lie algebra:
/// `[x_λ y] = z`, `[x_λ z] = w`. Nilpotent of degree 3.
pub fn n3() -> LcaPresentation {
    let mut br = BTreeMap::new();
    br.insert((0, 1), LambdaPoly::constant(e(2, 0)));
    br.insert((0, 2), LambdaPoly::constant(e(3, 0)));
    let gens = ["x", "y", "z", "w"].iter().map(|n| GeneratorSpec::free(n)).collect();
    LcaPresentation::new("N3", gens, br).unwrap()
}

/// Nilpotent algebra whose lower central series is not spanned by
/// generators: `[a_λ a] = λ(b + c)` with `b, c` torsion of order 1.
pub fn split_center() -> LcaPresentation {
    let mut v = e(1, 0);
    v.add(&e(2, 0));
    let mut p = LambdaPoly::zero();
    p.add_at(1, &v, &q(1));
    let mut br = BTreeMap::new();
    br.insert((0, 0), p);
    let gens = vec![
        GeneratorSpec::free("a"),
        GeneratorSpec::torsion("b", 1),
        GeneratorSpec::torsion("c", 1),
    ];
    LcaPresentation::new("SplitCenter", gens, br).unwrap()
}

/// `[a_λ a] = (∂ + 2λ)(∂b + c)`, `b, c` free and central. The commutator
/// mixes depths, so the adapted basis is not made of generator derivatives.
pub fn mixed_depth() -> LcaPresentation {
    let mut f = e(1, 1);
    f.add(&e(2, 0));
    let mut f1 = e(1, 2).scaled(&q(2));
    f1.add(&e(2, 1));
    let mut p = LambdaPoly::zero();
    p.add_at(0, &f1, &q(1));
    p.add_at(1, &f, &q(2));
    let mut br = BTreeMap::new();
    br.insert((0, 0), p);
    let gens = vec![GeneratorSpec::free("a"), GeneratorSpec::free("b"), GeneratorSpec::free("c")];
    LcaPresentation::new("MixedDepth", gens, br).unwrap()
}

/// The five reference algebras.
pub fn all() -> Vec<LcaPresentation> {
    vec![abelian(1), abelian(2), heisenberg(), virasoro(), n3()]
}

/// Nilpotent reference algebras together with their nilpotency degree.
pub fn nilpotent() -> Vec<(LcaPresentation, usize)> {
    vec![(abelian(1), 1), (abelian(2), 1), (heisenberg(), 2), (n3(), 3)]
}

/// Presentations that must fail the axiom check, with the axiom that breaks.
pub fn faulty() -> Vec<(LcaPresentation, &'static str)> {
    // [a_λ a] = k violates skew-symmetry
    let mut br = BTreeMap::new();
    br.insert((0, 0), LambdaPoly::constant(e(1, 0)));
    let h = LcaPresentation::new(
        "HeisenbergNoLambda",
        vec![GeneratorSpec::free("a"), GeneratorSpec::torsion("k", 1)],
        br,
    )
    .unwrap();

    // (∂ + 3λ)L is not skew-symmetric
    let mut p = LambdaPoly::zero();
    p.add_at(0, &e(0, 1), &q(1));
    p.add_at(1, &e(0, 0), &q(3));
    let mut br = BTreeMap::new();
    br.insert((0, 0), p);
    let v = LcaPresentation::new("VirasoroWrongWeight", vec![GeneratorSpec::free("L")], br).unwrap();

    // current algebra of [x,y]=y, [x,z]=z, [y,z]=x, which is not a Lie algebra
    let mut br = BTreeMap::new();
    br.insert((0, 1), LambdaPoly::constant(e(1, 0)));
    br.insert((0, 2), LambdaPoly::constant(e(2, 0)));
    br.insert((1, 2), LambdaPoly::constant(e(0, 0)));
    let j = LcaPresentation::new(
        "BrokenJacobi",
        ["x", "y", "z"].iter().map(|n| GeneratorSpec::free(n)).collect(),
        br,
    )
    .unwrap();

    vec![(h, "antisymmetry"), (v, "antisymmetry"), (j, "jacobi")]
}
