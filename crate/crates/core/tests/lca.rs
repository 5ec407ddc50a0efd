use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vxa_core::lca::{check_lca_axioms, ConformalVector, LambdaPoly, LcaPresentation};
use vxa_core::scalar::{q, qr};
use vxa_core::{golden, oracle};

fn algebras() -> Vec<LcaPresentation> {
    let mut v = golden::all();
    v.push(golden::split_center());
    v.push(golden::mixed_depth());
    v
}

fn vector(p: &LcaPresentation, rng: &mut ChaCha8Rng) -> ConformalVector {
    let basis = p.basis_up_to(3);
    let mut v = ConformalVector::zero();
    for _ in 0..rng.gen_range(1..=3) {
        v.add_term(basis[rng.gen_range(0..basis.len())], qr(rng.gen_range(-5..=5), rng.gen_range(1..=4)));
    }
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bracket_matches_sesquilinearity(seed: u64, which in 0usize..7) {
        let p = &algebras()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (v, w) = (vector(p, &mut rng), vector(p, &mut rng));
        prop_assert_eq!(p.lambda_bracket(&v, &w), oracle::bracket_vectors(p, &v, &w));
    }

    #[test]
    fn antisymmetry_on_vectors(seed: u64, which in 0usize..7) {
        let p = &algebras()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (v, w) = (vector(p, &mut rng), vector(p, &mut rng));
        let mut r = p.lambda_bracket(&v, &w);
        r.add(&p.substitute_reflected(&p.lambda_bracket(&w, &v)));
        prop_assert!(r.is_zero());
    }

    #[test]
    fn zeroth_product_is_a_left_derivation(seed: u64, which in 0usize..7) {
        // a_(0)(b_(0)c) = (a_(0)b)_(0)c + b_(0)(a_(0)c)
        let p = &algebras()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (vector(p, &mut rng), vector(p, &mut rng), vector(p, &mut rng));
        let z = |x: &ConformalVector, y: &ConformalVector| p.nth_product(x, y, 0).unwrap();
        let mut rhs = z(&z(&a, &b), &c);
        rhs.add(&z(&b, &z(&a, &c)));
        prop_assert_eq!(z(&a, &z(&b, &c)), rhs);
    }

    #[test]
    fn nth_products_are_bracket_coefficients(seed: u64, which in 0usize..7) {
        // [v_λ w] = Σ λ^n/n! v_(n) w
        let p = &algebras()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (v, w) = (vector(p, &mut rng), vector(p, &mut rng));
        let mut rebuilt = LambdaPoly::zero();
        let mut fact = q(1);
        for n in 0..12 {
            if n > 0 {
                fact *= q(n);
            }
            rebuilt.add_at(n as usize, &p.nth_product(&v, &w, n).unwrap(), &(q(1) / fact.clone()));
        }
        prop_assert_eq!(rebuilt, p.lambda_bracket(&v, &w));
    }
}

#[test]
fn negative_products_are_rejected() {
    let p = golden::heisenberg();
    let a = vector(&p, &mut ChaCha8Rng::seed_from_u64(0));
    assert!(p.nth_product(&a, &a, -1).is_err());
}

#[test]
fn axiom_suite_on_references() {
    for p in algebras() {
        assert!(check_lca_axioms(&p).passed(), "{}", p.name());
    }
    for (p, axiom) in golden::faulty() {
        assert!(check_lca_axioms(&p).failed_axioms().contains(&axiom), "{}", p.name());
    }
}
