use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vxa_core::bialgebra::{check_delta_is_vertex_hom, coproduct, counit, primitives_up_to, TensorUElement};
use vxa_core::enveloping::{monomial, Enveloping, UElement};
use vxa_core::lca::LcaPresentation;
use vxa_core::scalar::{q, qr};
use vxa_core::golden;

fn algebras() -> Vec<LcaPresentation> {
    vec![golden::heisenberg(), golden::virasoro(), golden::n3(), golden::split_center()]
}

fn element(env: &Enveloping, rng: &mut ChaCha8Rng) -> UElement {
    let letters = env.letters_up_to(1);
    let mut u = UElement::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let mut ls: Vec<_> = (0..rng.gen_range(0..=2)).map(|_| letters[rng.gen_range(0..letters.len())]).collect();
        ls.sort();
        u.add(&UElement::monomial(monomial(&ls), qr(rng.gen_range(-4..=4), rng.gen_range(1..=3))));
    }
    u
}

fn unit(m: &vxa_core::enveloping::Monomial) -> UElement {
    UElement::monomial(m.clone(), q(1))
}

// (a ⊗ b)(c ⊗ d) = ac ⊗ bd
fn tensor_mul(env: &Enveloping, s: &TensorUElement, t: &TensorUElement) -> TensorUElement {
    let mut out = TensorUElement::zero();
    for ((a, b), x) in s.iter() {
        for ((c, d), y) in t.iter() {
            let left = env.assoc_mul(&unit(a), &unit(c));
            let right = env.assoc_mul(&unit(b), &unit(d));
            out.add_tensor(&left, &right, &(x * y));
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn delta_is_an_algebra_map(seed: u64, which in 0usize..4) {
        let env = Enveloping::raw(&algebras()[which]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (u, v) = (element(&env, &mut rng), element(&env, &mut rng));
        let lhs = coproduct(&env, &env.assoc_mul(&u, &v));
        prop_assert_eq!(lhs, tensor_mul(&env, &coproduct(&env, &u), &coproduct(&env, &v)));
    }

    #[test]
    fn delta_is_a_vertex_map(seed: u64, which in 0usize..4) {
        let env = Enveloping::raw(&algebras()[which]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let samples = vec![(element(&env, &mut rng), element(&env, &mut rng))];
        let r = check_delta_is_vertex_hom(&env, &samples, (-2, 2));
        prop_assert!(r.passed(), "{:?}", r.checks.iter().find(|c| !c.pass));
    }

    #[test]
    fn counit_is_multiplicative(seed: u64, which in 0usize..4) {
        let env = Enveloping::raw(&algebras()[which]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (u, v) = (element(&env, &mut rng), element(&env, &mut rng));
        prop_assert_eq!(counit(&env.assoc_mul(&u, &v)), counit(&u) * counit(&v));
    }
}

#[test]
fn primitives_are_linear() {
    for p in algebras() {
        let env = Enveloping::raw(&p);
        let prims = primitives_up_to(&env, 3, 1);
        assert_eq!(prims.len(), env.letters_up_to(1).len(), "{}", p.name());
        assert!(prims.iter().all(|u| u.max_len() == 1), "{}", p.name());
    }
}
