use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vxa_core::enveloping::{borcherds_check, monomial, render, Enveloping, UElement};
use vxa_core::lca::LcaPresentation;
use vxa_core::scalar::{q, qr};
use vxa_core::golden;

fn algebras() -> Vec<LcaPresentation> {
    vec![golden::heisenberg(), golden::virasoro(), golden::n3(), golden::mixed_depth()]
}

fn element(env: &Enveloping, max_len: usize, rng: &mut ChaCha8Rng) -> UElement {
    let letters = env.letters_up_to(1);
    let mut u = UElement::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let mut ls: Vec<_> = (0..rng.gen_range(0..=max_len)).map(|_| letters[rng.gen_range(0..letters.len())]).collect();
        ls.sort();
        u.add(&UElement::monomial(monomial(&ls), qr(rng.gen_range(1..=5), rng.gen_range(1..=3))));
    }
    u
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn assoc_mul_is_associative(seed: u64, which in 0usize..4) {
        let env = Enveloping::raw(&algebras()[which]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (u, v, w) = (element(&env, 2, &mut rng), element(&env, 2, &mut rng), element(&env, 2, &mut rng));
        prop_assert_eq!(env.assoc_mul(&env.assoc_mul(&u, &v), &w), env.assoc_mul(&u, &env.assoc_mul(&v, &w)));
    }

    #[test]
    fn borcherds_identity(seed: u64, which in 0usize..4, l in -2i64..=2, t in -2i64..=2, j in -2i64..=2) {
        let env = Enveloping::raw(&algebras()[which]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (u, v, w) = (element(&env, 2, &mut rng), element(&env, 2, &mut rng), element(&env, 1, &mut rng));
        let (ok, r) = borcherds_check(&env, &u, &v, &w, l, t, j);
        prop_assert!(ok, "residual {}", render(&env, &r));
    }

    #[test]
    fn skew_symmetry_of_products(seed: u64, which in 0usize..4, n in -3i64..=3) {
        // v_(n) u = Σ_j (-1)^{n+j+1} ∂^{(j)} (u_(n+j) v)
        let env = Enveloping::raw(&algebras()[which]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (u, v) = (element(&env, 2, &mut rng), element(&env, 2, &mut rng));
        let bound = env.product_bound(&u, &v);
        let mut rhs = UElement::zero();
        for j in 0..=(bound - n).max(0) {
            let sign = if (n + j + 1) % 2 == 0 { q(1) } else { q(-1) };
            rhs.add_scaled(&env.divided_partial(&env.nth_product(&u, &v, n + j), j as u32), &sign);
        }
        prop_assert_eq!(env.nth_product(&v, &u, n), rhs);
    }

    #[test]
    fn y_window_matches_products(seed: u64, which in 0usize..4) {
        let env = Enveloping::raw(&algebras()[which]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (u, v) = (element(&env, 2, &mut rng), element(&env, 2, &mut rng));
        let (w, bound) = env.y_window(&u, &v, -3, 4);
        prop_assert_eq!(bound, env.product_bound(&u, &v));
        for (n, x) in w {
            prop_assert_eq!(x, env.nth_product(&u, &v, n));
        }
    }
}

#[test]
fn normal_ordered_product_is_minus_one() {
    for p in algebras() {
        let env = Enveloping::raw(&p);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..10 {
            let (u, v) = (element(&env, 2, &mut rng), element(&env, 2, &mut rng));
            assert_eq!(env.nop(&u, &v), env.nth_product(&u, &v, -1), "{}", p.name());
        }
    }
}

#[test]
fn product_of_letters_in_pbw_order_is_the_monomial() {
    let env = Enveloping::raw(&golden::n3());
    let mut ls = env.letters_up_to(1);
    ls.truncate(4);
    let mut prod = UElement::vacuum();
    for l in &ls {
        prod = env.assoc_mul(&prod, &UElement::letter(*l));
    }
    assert_eq!(prod, UElement::monomial(monomial(&ls), q(1)));
}
