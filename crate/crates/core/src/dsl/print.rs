//! Canonical text for parsed files; reparsing the output gives an equal AST.

use std::fmt::Write;

use super::ast::*;
use crate::lca::{GenKind, LcaPresentation};
use crate::render;
use crate::scalar::fmt_q;

// precedence levels: sum < product < unary < power < atom
fn prec(e: &Expr) -> u8 {
    match &e.kind {
        ExprKind::Add(..) | ExprKind::Sub(..) => 0,
        ExprKind::Mul(..) => 1,
        ExprKind::Neg(_) => 2,
        ExprKind::Pow(..) => 3,
        ExprKind::Num(q) if !q.is_integer() => 3,
        _ => 4,
    }
}

fn wrap(e: &Expr, min: u8, out: &mut String) {
    if prec(e) < min {
        out.push('(');
        write_expr(e, out);
        out.push(')');
    } else {
        write_expr(e, out);
    }
}

fn write_expr(e: &Expr, out: &mut String) {
    match &e.kind {
        ExprKind::Num(q) => out.push_str(&fmt_q(q)),
        ExprKind::Lambda => out.push_str("lambda"),
        ExprKind::D => out.push('D'),
        ExprKind::Ident(s) => out.push_str(s),
        ExprKind::Neg(x) => {
            out.push('-');
            wrap(x, 2, out);
        }
        ExprKind::Add(a, b) | ExprKind::Sub(a, b) => {
            wrap(a, 0, out);
            out.push_str(if matches!(e.kind, ExprKind::Add(..)) { " + " } else { " - " });
            wrap(b, 1, out);
        }
        ExprKind::Mul(a, b) => {
            wrap(a, 1, out);
            out.push('*');
            wrap(b, 2, out);
        }
        ExprKind::Pow(a, n) => {
            wrap(a, 4, out);
            write!(out, "^{n}").unwrap();
        }
    }
}

pub fn print_expr(e: &Expr) -> String {
    let mut out = String::new();
    write_expr(e, &mut out);
    out
}

pub fn print_algebra(f: &AlgebraFile) -> String {
    let mut out = format!("algebra {} {{\n  generators {{\n", f.name);
    for g in &f.generators {
        match g.kind {
            KindDecl::Free => writeln!(out, "    {}: free;", g.name),
            KindDecl::Torsion(m) => writeln!(out, "    {}: torsion({m});", g.name),
        }
        .unwrap();
    }
    out.push_str("  }\n");
    for b in &f.brackets {
        writeln!(out, "  bracket [{}, {}] = {};", b.left, b.right, print_expr(&b.rhs)).unwrap();
    }
    out.push_str("}\n");
    out
}

/// `.lca` source for a presentation; loading it gives back an equal one.
pub fn print_presentation(p: &LcaPresentation) -> String {
    let mut out = format!("algebra {} {{\n  generators {{\n", p.name());
    for g in p.generators() {
        match g.kind {
            GenKind::Free => writeln!(out, "    {}: free;", g.name),
            GenKind::Torsion(m) => writeln!(out, "    {}: torsion({m});", g.name),
        }
        .unwrap();
    }
    out.push_str("  }\n");
    for ((i, j), b) in p.brackets() {
        let names = p.generators();
        let (l, r) = (&names[*i as usize].name, &names[*j as usize].name);
        writeln!(out, "  bracket [{l}, {r}] = {};", render::lambda_poly(p, b)).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::super::parser::{parse_algebra, parse_expr};
    use super::*;

    #[test]
    fn expression_round_trip() {
        for src in [
            "(D + 2*lambda)*L + 1/12*lambda^3*C",
            "a - (b - c)",
            "-(a*b)",
            "-a*b",
            "(1/2)^2*x",
            "(-a)^2",
            "2*(a + b)*c",
            "lambda^2*(D*k)",
        ] {
            let e = parse_expr(src).unwrap();
            let printed = print_expr(&e);
            assert_eq!(parse_expr(&printed).unwrap(), e, "{src} -> {printed}");
        }
        assert_eq!(print_expr(&parse_expr("(a)*((b))").unwrap()), "a*b");
    }

    #[test]
    fn file_round_trip() {
        let src = "algebra V { generators { L: free; C: torsion(1); } bracket [L,L] = (D+2*lambda)*L + (1/12)*lambda^3*C; }";
        let f = parse_algebra(src).unwrap();
        let text = print_algebra(&f);
        assert_eq!(parse_algebra(&text).unwrap(), f);
        assert!(text.contains("bracket [L, L] = (D + 2*lambda)*L + 1/12*lambda^3*C;"));
    }

    #[test]
    fn presentations_reload() {
        let mut all = crate::golden::all();
        all.push(crate::golden::mixed_depth());
        all.push(crate::golden::split_center());
        for p in all {
            let text = print_presentation(&p);
            assert_eq!(super::super::load_algebra(&text).unwrap().presentation, p, "{text}");
        }
    }
}
