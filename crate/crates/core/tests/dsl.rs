use proptest::prelude::*;

use vxa_core::dsl::ast::{Expr, ExprKind};
use vxa_core::dsl::{load_algebra, parse_algebra, parse_expr, print_algebra, print_expr, print_presentation, SourceSpan};
use vxa_core::scalar::qr;
use vxa_core::{golden, Error};

fn node(kind: ExprKind) -> Expr {
    Expr { kind, span: SourceSpan::default() }
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0i64..20, 1i64..5).prop_map(|(n, d)| node(ExprKind::Num(qr(n, d)))),
        Just(node(ExprKind::Lambda)),
        Just(node(ExprKind::D)),
        prop_oneof![Just("a"), Just("k"), Just("L2")].prop_map(|s| node(ExprKind::Ident(s.into()))),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| node(ExprKind::Neg(Box::new(e)))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| node(ExprKind::Add(Box::new(a), Box::new(b)))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| node(ExprKind::Sub(Box::new(a), Box::new(b)))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| node(ExprKind::Mul(Box::new(a), Box::new(b)))),
            (inner, 1u32..4).prop_map(|(a, k)| node(ExprKind::Pow(Box::new(a), k))),
        ]
    })
}

proptest! {
    #[test]
    fn printed_expressions_parse_back(e in expr()) {
        let text = print_expr(&e);
        let back = parse_expr(&text).map_err(|d| TestCaseError::fail(format!("{text}: {d:?}")))?;
        prop_assert_eq!(&back, &e, "{}", text);
        prop_assert_eq!(print_expr(&back), text);
    }
}

fn golden_src(name: &str) -> String {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../golden");
    std::fs::read_to_string(dir.join(format!("{name}.lca"))).unwrap()
}

#[test]
fn golden_files_match_references() {
    for (file, p) in ["abelian1", "abelian2", "heisenberg", "virasoro", "n3"].iter().zip(golden::all()) {
        let lowered = load_algebra(&golden_src(file)).unwrap();
        assert!(lowered.warnings.is_empty(), "{file}");
        assert_eq!(lowered.presentation.brackets(), p.brackets(), "{file}");
        assert_eq!(lowered.presentation.generators(), p.generators(), "{file}");
    }
}

#[test]
fn files_round_trip_through_the_printer() {
    for file in ["abelian1", "abelian2", "heisenberg", "virasoro", "n3"] {
        let ast = parse_algebra(&golden_src(file)).unwrap();
        let text = print_algebra(&ast);
        assert_eq!(parse_algebra(&text).unwrap(), ast, "{file}");
        let p = load_algebra(&text).unwrap().presentation;
        let canon = print_presentation(&p);
        assert_eq!(load_algebra(&canon).unwrap().presentation, p, "{file}");
    }
}

#[test]
fn errors_carry_positions() {
    let src = "algebra X {\n  generators { a: free; }\n  bracket [a, a] = lambda * * a;\n}\n";
    match load_algebra(src) {
        Err(Error::Parse(ds)) => {
            assert_eq!(ds[0].span.line, 3);
            assert!(ds[0].message.starts_with("expected one of"), "{}", ds[0].message);
        }
        other => panic!("expected a parse error, got {other:?}"),
    }
}
