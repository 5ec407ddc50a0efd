use super::*;
use crate::golden;
use crate::lca::{BasisIndex, ConformalVector};
use crate::scalar::q;

fn golden_file(name: &str) -> String {
    std::fs::read_to_string(format!("{}/../../golden/{name}.lca", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn errors(src: &str) -> Vec<Diagnostic> {
    match load_algebra(src) {
        Err(Error::Parse(d)) => d,
        other => panic!("expected diagnostics, got {other:?}"),
    }
}

#[test]
fn golden_files_lower_to_references() {
    let cases = [
        ("abelian1", golden::abelian(1)),
        ("abelian2", golden::abelian(2)),
        ("heisenberg", golden::heisenberg()),
        ("virasoro", golden::virasoro()),
        ("n3", golden::n3()),
    ];
    for (file, want) in cases {
        let l = load_algebra(&golden_file(file)).unwrap();
        assert!(l.warnings.is_empty());
        assert_eq!(l.presentation, want, "{file}");
    }
}

#[test]
fn golden_files_round_trip() {
    for file in ["abelian1", "abelian2", "heisenberg", "virasoro", "n3"] {
        let f = parse_algebra(&golden_file(file)).unwrap();
        assert_eq!(parse_algebra(&print_algebra(&f)).unwrap(), f, "{file}");
    }
}

#[test]
fn normalization() {
    let src = "algebra V { generators { L: free; C: torsion(1); } bracket [L,L] = (D + 2*lambda)*L + (1/12)*lambda^3*C; }";
    let p = load_algebra(src).unwrap().presentation;
    let b = p.generator_bracket(0, 0);
    assert_eq!(b.coeff(0), ConformalVector::unit(BasisIndex::new(0, 1)));
    assert_eq!(b.coeff(1), ConformalVector::term(BasisIndex::new(0, 0), q(2)));
    // D^2 L = 2 ∂^(2) L
    let src = "algebra X { generators { L: free; } bracket [L,L] = D^2*L - 2*D*lambda*L; }";
    let p = load_algebra(src).unwrap().presentation;
    assert_eq!(p.generator_bracket(0, 0).coeff(0), ConformalVector::term(BasisIndex::new(0, 2), q(2)));
}

#[test]
fn torsion_terms_are_dropped_with_a_warning() {
    let src = "algebra X { generators { a: free; k: torsion(1); } bracket [a,a] = lambda*k + D^2*k; }";
    let l = load_algebra(src).unwrap();
    assert_eq!(l.presentation.brackets(), golden::heisenberg().brackets());
    assert_eq!(l.warnings.len(), 1);
    assert!(l.warnings[0].message.contains("annihilates k"));
}

#[test]
fn validation_rules() {
    let d = errors("algebra X { generators { a: free; } bracket [a,a] = lambda; }");
    assert_eq!(d[0].message, "every monomial must contain exactly one generator");
    let d = errors("algebra X { generators { a: free; b: free; } bracket [b,a] = a; }");
    assert!(d[0].message.contains("state [a, b] instead"), "{}", d[0].message);
    let d = errors("algebra X { generators { a: free; b: free; } bracket [a,b] = a*b; }");
    assert_eq!(d[0].message, "every monomial must contain exactly one generator");
    let d = errors("algebra X { generators { a: free; } bracket [a,a] = a*D; }");
    assert_eq!(d[0].message, "D must be applied to a generator from the left");
    let d = errors("algebra X { generators { a: free; a: free; } }");
    assert_eq!(d[0].message, "duplicate generator `a`");
    let d = errors("algebra X { generators { a: free; } bracket [a,a] = q; }");
    assert_eq!(d[0].message, "unknown identifier `q`");
    let d = errors("algebra X { generators { a: free; } bracket [a,c] = a; }");
    assert_eq!(d[0].message, "unknown generator `c`");
    let d = errors("algebra X { generators { a: free; } bracket [a,a] = a; bracket [a,a] = a; }");
    assert_eq!(d[0].message, "bracket [a, a] is defined twice");
    let d = errors("algebra X { generators { a: torsion(0); } }");
    assert_eq!(d[0].message, "torsion order must be positive");
}

#[test]
fn spans_lie_within_source() {
    let bad = [
        "algebra",
        "algebra X { generators { a: free } }",
        "algebra X { generators { a: free; } bracket [a,a] = (lambda*a; }",
        "algebra X { generators { a: free; } bracket [a,a] = lambda; }",
        "algebra X { generators { a: free; } }\nextra",
        "algebra X { generators { a: free; } bracket [a,a] = 1/0*a; }",
    ];
    for src in bad {
        for d in errors(src) {
            assert!(d.span.start <= d.span.end && d.span.end <= src.len(), "{src}: {d}");
        }
    }
}
