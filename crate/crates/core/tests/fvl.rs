use std::sync::Arc;

use vxa_core::enveloping::Enveloping;
use vxa_core::exec::Exec;
use vxa_core::fvl::{check_identities, check_fvl_jacobi, extract_fvl, fvl_from_json, fvl_to_json};
use vxa_core::lca::{Frame, LcaPresentation};
use vxa_core::{golden, Error};

fn env(p: LcaPresentation) -> Enveloping {
    Enveloping::new(Arc::new(Frame::auto(Arc::new(p))))
}

#[test]
fn sequential_and_parallel_tables_agree() {
    for p in [golden::heisenberg(), golden::n3(), golden::virasoro()] {
        let e = env(p);
        let a = extract_fvl(&e, 2, 1, (-3, 3), Exec::Sequential);
        let b = extract_fvl(&e, 2, 1, (-3, 3), Exec::Parallel);
        assert_eq!(a, b);
    }
}

#[test]
fn json_is_stable_for_every_reference() {
    for p in golden::all() {
        let e = env(p);
        let t = extract_fvl(&e, 2, 1, (-2, 2), Exec::Parallel);
        assert!(check_identities(&t).passed());
        let j = fvl_to_json(&t);
        assert_eq!(fvl_from_json(&j, &e).unwrap(), t);
        assert_eq!(j["algebra"], e.presentation().name());
        assert_eq!(j["window"], serde_json::json!([-2, 2]));
    }
}

#[test]
fn jacobi_sequential_and_parallel_agree() {
    let e = env(golden::heisenberg());
    let t = extract_fvl(&e, 2, 2, (-6, 6), Exec::Parallel);
    let s = [(0, 0, 0), (-1, 1, 0), (1, -1, -1)];
    let a = check_fvl_jacobi(&t, &s, 2, Exec::Sequential).unwrap();
    let b = check_fvl_jacobi(&t, &s, 2, Exec::Parallel).unwrap();
    assert!(a.passed() && b.passed());
    assert_eq!(a.checked, b.checked);
}

#[test]
fn too_small_window_asks_for_more() {
    let e = env(golden::n3());
    let t = extract_fvl(&e, 3, 0, (-1, 1), Exec::Parallel);
    match check_fvl_jacobi(&t, &[(0, 0, 0)], 3, Exec::Parallel) {
        Err(Error::TruncationInsufficient(need)) => assert!(need.window.0 < -1 || need.depth > 0),
        other => panic!("expected a truncation error, got {other:?}"),
    }
}
