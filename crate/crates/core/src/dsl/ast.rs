//! Abstract syntax of `.lca` files. Equality ignores spans.

use super::SourceSpan;
use crate::scalar::Q;

#[derive(Clone, Debug)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: SourceSpan,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    Num(Q),
    Lambda,
    D,
    Ident(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KindDecl {
    Free,
    Torsion(u32),
}

#[derive(Clone, Debug)]
pub struct GenDecl {
    pub name: String,
    pub kind: KindDecl,
    pub span: SourceSpan,
}

impl PartialEq for GenDecl {
    fn eq(&self, other: &Self) -> bool {
        (&self.name, &self.kind) == (&other.name, &other.kind)
    }
}

#[derive(Clone, Debug)]
pub struct BracketDecl {
    pub left: String,
    pub right: String,
    pub rhs: Expr,
    /// Span of the `[left, right]` head.
    pub span: SourceSpan,
}

impl PartialEq for BracketDecl {
    fn eq(&self, other: &Self) -> bool {
        (&self.left, &self.right, &self.rhs) == (&other.left, &other.right, &other.rhs)
    }
}

#[derive(Clone, Debug)]
pub struct AlgebraFile {
    pub name: String,
    pub generators: Vec<GenDecl>,
    pub brackets: Vec<BracketDecl>,
    pub span: SourceSpan,
}

impl PartialEq for AlgebraFile {
    fn eq(&self, other: &Self) -> bool {
        (&self.name, &self.generators, &self.brackets) == (&other.name, &other.generators, &other.brackets)
    }
}
