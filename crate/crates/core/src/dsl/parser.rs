//! Recursive-descent parser for `.lca` files and bare expressions.
//!
//! ```text
//! file    := "algebra" IDENT "{" gens bracket* "}"
//! gens    := "generators" "{" (IDENT ":" kind ";")* "}"
//! kind    := "free" | "torsion" "(" INT ")"
//! bracket := "bracket" "[" IDENT "," IDENT "]" "=" expr ";"
//! expr    := term (("+" | "-") term)*
//! term    := factor ("*" factor)*
//! factor  := "-" factor | atom ("^" INT)?
//! atom    := INT ("/" INT)? | "lambda" | "D" | IDENT | "(" expr ")"
//! ```

use num::{BigInt, Zero};

use super::ast::*;
use super::lexer::{lex, Tok, Token};
use super::{Diagnostic, SourceSpan};
use crate::scalar::Q;

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

type PResult<T> = Result<T, Diagnostic>;

fn join(a: SourceSpan, b: SourceSpan) -> SourceSpan {
    SourceSpan { end: b.end.max(a.end), ..a }
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> Diagnostic {
        let t = self.peek();
        let message = match expected {
            [one] => format!("expected {one}, found {}", t.tok),
            _ => format!("expected one of {}, found {}", expected.join(", "), t.tok),
        };
        Diagnostic { span: t.span, message }
    }

    fn is_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn is_word(&self, w: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == w)
    }

    fn sym(&mut self, c: char) -> PResult<SourceSpan> {
        if self.is_sym(c) {
            Ok(self.bump().span)
        } else {
            Err(self.error(&[&format!("`{c}`")]))
        }
    }

    fn word(&mut self, w: &str) -> PResult<SourceSpan> {
        if self.is_word(w) {
            Ok(self.bump().span)
        } else {
            Err(self.error(&[&format!("`{w}`")]))
        }
    }

    fn ident(&mut self) -> PResult<(String, SourceSpan)> {
        match &self.peek().tok {
            Tok::Ident(s) => {
                let s = s.clone();
                Ok((s, self.bump().span))
            }
            _ => Err(self.error(&["identifier"])),
        }
    }

    fn int(&mut self) -> PResult<(BigInt, SourceSpan)> {
        match &self.peek().tok {
            Tok::Int(s) => {
                let n: BigInt = s.parse().unwrap();
                Ok((n, self.bump().span))
            }
            _ => Err(self.error(&["integer"])),
        }
    }

    fn small_int(&mut self) -> PResult<(u32, SourceSpan)> {
        let (n, span) = self.int()?;
        let n = u32::try_from(n).map_err(|_| Diagnostic { span, message: "integer too large".into() })?;
        Ok((n, span))
    }

    fn file(&mut self) -> PResult<AlgebraFile> {
        let start = self.word("algebra")?;
        let (name, _) = self.ident()?;
        self.sym('{')?;
        self.word("generators")?;
        self.sym('{')?;
        let mut generators = Vec::new();
        while !self.is_sym('}') {
            let (name, span) = self.ident().map_err(|_| self.error(&["generator name", "`}`"]))?;
            self.sym(':')?;
            let kind = if self.is_word("free") {
                self.bump();
                KindDecl::Free
            } else if self.is_word("torsion") {
                self.bump();
                self.sym('(')?;
                let (m, _) = self.small_int()?;
                self.sym(')')?;
                KindDecl::Torsion(m)
            } else {
                return Err(self.error(&["`free`", "`torsion`"]));
            };
            let end = self.sym(';')?;
            generators.push(GenDecl { name, kind, span: join(span, end) });
        }
        self.sym('}')?;
        let mut brackets = Vec::new();
        while self.is_word("bracket") {
            let head = self.bump().span;
            self.sym('[')?;
            let (left, _) = self.ident()?;
            self.sym(',')?;
            let (right, _) = self.ident()?;
            let close = self.sym(']')?;
            self.sym('=')?;
            let rhs = self.expr()?;
            self.sym(';')?;
            brackets.push(BracketDecl { left, right, rhs, span: join(head, close) });
        }
        if !self.is_sym('}') {
            return Err(self.error(&["`bracket`", "`}`"]));
        }
        let end = self.bump().span;
        if self.peek().tok != Tok::Eof {
            return Err(self.error(&["end of input"]));
        }
        Ok(AlgebraFile { name, generators, brackets, span: join(start, end) })
    }

    pub fn expr(&mut self) -> PResult<Expr> {
        let mut lhs = self.term()?;
        loop {
            let add = if self.is_sym('+') {
                true
            } else if self.is_sym('-') {
                false
            } else {
                return Ok(lhs);
            };
            self.bump();
            let rhs = self.term()?;
            let span = join(lhs.span, rhs.span);
            let (l, r) = (Box::new(lhs), Box::new(rhs));
            lhs = Expr { kind: if add { ExprKind::Add(l, r) } else { ExprKind::Sub(l, r) }, span };
        }
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut lhs = self.factor()?;
        while self.is_sym('*') {
            self.bump();
            let rhs = self.factor()?;
            let span = join(lhs.span, rhs.span);
            lhs = Expr { kind: ExprKind::Mul(Box::new(lhs), Box::new(rhs)), span };
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> PResult<Expr> {
        if self.is_sym('-') {
            let start = self.bump().span;
            let inner = self.factor()?;
            let span = join(start, inner.span);
            return Ok(Expr { kind: ExprKind::Neg(Box::new(inner)), span });
        }
        let base = self.atom()?;
        if self.is_sym('^') {
            self.bump();
            let (e, end) = self.small_int()?;
            let span = join(base.span, end);
            return Ok(Expr { kind: ExprKind::Pow(Box::new(base), e), span });
        }
        Ok(base)
    }

    fn atom(&mut self) -> PResult<Expr> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Int(_) => {
                let (n, span) = self.int()?;
                if self.is_sym('/') {
                    self.bump();
                    let (d, end) = self.int()?;
                    if d.is_zero() {
                        return Err(Diagnostic { span: end, message: "division by zero".into() });
                    }
                    return Ok(Expr { kind: ExprKind::Num(Q::new(n, d)), span: join(span, end) });
                }
                Ok(Expr { kind: ExprKind::Num(Q::from_integer(n)), span })
            }
            Tok::Ident(s) => {
                self.bump();
                let kind = match s.as_str() {
                    "lambda" => ExprKind::Lambda,
                    "D" => ExprKind::D,
                    _ => ExprKind::Ident(s.clone()),
                };
                Ok(Expr { kind, span: t.span })
            }
            Tok::Sym('(') => {
                self.bump();
                let inner = self.expr()?;
                let end = self.sym(')')?;
                Ok(Expr { span: join(t.span, end), ..inner })
            }
            _ => Err(self.error(&["number", "`lambda`", "`D`", "identifier", "`(`", "`-`"])),
        }
    }
}

pub fn parse_algebra(src: &str) -> Result<AlgebraFile, Diagnostic> {
    Parser { toks: lex(src)?, pos: 0 }.file()
}

/// A single expression spanning the whole input.
pub fn parse_expr(src: &str) -> Result<Expr, Diagnostic> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let e = p.expr()?;
    if p.peek().tok != Tok::Eof {
        return Err(p.error(&["operator", "end of input"]));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qr;

    const HEIS: &str = "algebra Heisenberg {\n  generators { a: free; k: torsion(1); }\n  bracket [a,a] = lambda*k;\n}\n";

    #[test]
    fn parses_heisenberg() {
        let f = parse_algebra(HEIS).unwrap();
        assert_eq!(f.name, "Heisenberg");
        assert_eq!(f.generators.len(), 2);
        assert_eq!(f.generators[1].kind, KindDecl::Torsion(1));
        assert_eq!((f.brackets[0].left.as_str(), f.brackets[0].right.as_str()), ("a", "a"));
        assert_eq!(f.brackets[0].span.line, 3);
    }

    #[test]
    fn precedence() {
        let e = parse_expr("(D + 2*lambda)*L + 1/12*lambda^3*C").unwrap();
        let ExprKind::Add(l, r) = &e.kind else { panic!() };
        assert!(matches!(l.kind, ExprKind::Mul(_, _)));
        let ExprKind::Mul(r1, _) = &r.kind else { panic!() };
        let ExprKind::Mul(n, p) = &r1.kind else { panic!() };
        assert_eq!(n.kind, ExprKind::Num(qr(1, 12)));
        assert!(matches!(p.kind, ExprKind::Pow(_, 3)));
        // spans are ignored by equality
        assert_eq!(parse_expr("a*b").unwrap(), parse_expr(" a * b ").unwrap());
    }

    #[test]
    fn expected_sets() {
        let e = parse_algebra("algebra X { generators { a: fre; } }").unwrap_err();
        assert_eq!(e.message, "expected one of `free`, `torsion`, found `fre`");
        assert_eq!((e.span.line, e.span.col), (1, 29));
        let e = parse_expr("lambda*").unwrap_err();
        assert!(e.message.starts_with("expected one of number"));
        let e = parse_algebra("algebra X { generators { a: free; } bracket [a,a] = lambda*a }").unwrap_err();
        assert_eq!(e.message, "expected `;`, found `}`");
    }
}
