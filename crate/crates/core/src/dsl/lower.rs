use std::collections::{BTreeMap, HashMap};

use num::{One, Zero};

use super::ast::*;
use super::{Diagnostic, SourceSpan};
use crate::error::{Error, Result};
use crate::lca::{BasisIndex, ConformalVector, GenKind, GeneratorSpec, LambdaPoly, LcaPresentation};
use crate::scalar::{factorial, Q};

const ONE_GENERATOR: &str = "every monomial must contain exactly one generator";

/// `c · λ^lam · D^d · gen`; `gens` counts generator factors seen so far.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Mono {
    lam: u32,
    d: u32,
    gen: Option<u32>,
    gens: u32,
}

const UNIT: Mono = Mono { lam: 0, d: 0, gen: None, gens: 0 };

type Poly = BTreeMap<Mono, Q>;

fn diag(span: SourceSpan, message: impl Into<String>) -> Diagnostic {
    Diagnostic { span, message: message.into() }
}

fn single(m: Mono, c: Q) -> Poly {
    BTreeMap::from([(m, c)])
}

fn add_into(acc: &mut Poly, p: &Poly, s: &Q) {
    for (m, c) in p {
        let e = acc.entry(*m).or_insert_with(Q::zero);
        *e += c * s;
        if e.is_zero() {
            acc.remove(m);
        }
    }
}

fn mul(a: &Poly, b: &Poly, b_span: SourceSpan, span: SourceSpan) -> std::result::Result<Poly, Diagnostic> {
    let mut out = Poly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            if ma.gens > 0 && mb.d > 0 {
                return Err(diag(b_span, "D must be applied to a generator from the left"));
            }
            if ma.gens + mb.gens > 1 {
                return Err(diag(span, ONE_GENERATOR));
            }
            let m = Mono { lam: ma.lam + mb.lam, d: ma.d + mb.d, gen: ma.gen.or(mb.gen), gens: ma.gens + mb.gens };
            add_into(&mut out, &single(m, Q::one()), &(ca * cb));
        }
    }
    Ok(out)
}

fn expand(e: &Expr, gens: &HashMap<&str, u32>) -> std::result::Result<Poly, Diagnostic> {
    Ok(match &e.kind {
        ExprKind::Num(q) => {
            let mut p = Poly::new();
            add_into(&mut p, &single(UNIT, q.clone()), &Q::one());
            p
        }
        ExprKind::Lambda => single(Mono { lam: 1, ..UNIT }, Q::one()),
        ExprKind::D => single(Mono { d: 1, ..UNIT }, Q::one()),
        ExprKind::Ident(s) => match gens.get(s.as_str()) {
            Some(g) => single(Mono { gen: Some(*g), gens: 1, ..UNIT }, Q::one()),
            None => return Err(diag(e.span, format!("unknown identifier `{s}`"))),
        },
        ExprKind::Neg(x) => {
            let mut p = Poly::new();
            add_into(&mut p, &expand(x, gens)?, &-Q::one());
            p
        }
        ExprKind::Add(a, b) | ExprKind::Sub(a, b) => {
            let mut p = expand(a, gens)?;
            let s = if matches!(e.kind, ExprKind::Add(..)) { Q::one() } else { -Q::one() };
            add_into(&mut p, &expand(b, gens)?, &s);
            p
        }
        ExprKind::Mul(a, b) => mul(&expand(a, gens)?, &expand(b, gens)?, b.span, e.span)?,
        ExprKind::Pow(a, n) => {
            let base = expand(a, gens)?;
            let mut p = single(UNIT, Q::one());
            for _ in 0..*n {
                p = mul(&p, &base, a.span, e.span)?;
            }
            p
        }
    })
}

struct Ctx<'a> {
    index: HashMap<&'a str, u32>,
    kinds: Vec<GenKind>,
    names: Vec<String>,
}

impl Ctx<'_> {
    /// λ-power → vector, with torsion-killed terms reported as warnings.
    fn to_poly(&self, e: &Expr, warnings: &mut Vec<Diagnostic>) -> std::result::Result<LambdaPoly, Diagnostic> {
        let mut out = LambdaPoly::zero();
        for (m, c) in expand(e, &self.index)? {
            let Some(g) = m.gen else {
                return Err(diag(e.span, ONE_GENERATOR));
            };
            if let GenKind::Torsion(order) = self.kinds[g as usize] {
                if m.d >= order {
                    warnings.push(diag(
                        e.span,
                        format!("D^{} annihilates {} (torsion of order {order}); the term is dropped", m.d, self.names[g as usize]),
                    ));
                    continue;
                }
            }
            let v = ConformalVector::term(BasisIndex::new(g, m.d), c * factorial(m.d as u64));
            out.add_at(m.lam as usize, &v, &Q::one());
        }
        Ok(out)
    }
}

/// Result of lowering: the presentation and any warnings.
#[derive(Debug)]
pub struct Lowered {
    pub presentation: LcaPresentation,
    pub warnings: Vec<Diagnostic>,
}

pub fn lower(f: &AlgebraFile) -> Result<Lowered> {
    let mut errors = Vec::new();
    let mut warnings = Vec::new();
    let mut ctx = Ctx { index: HashMap::new(), kinds: Vec::new(), names: Vec::new() };
    let mut specs = Vec::new();
    for g in &f.generators {
        if ctx.index.contains_key(g.name.as_str()) {
            errors.push(diag(g.span, format!("duplicate generator `{}`", g.name)));
            continue;
        }
        if matches!(g.name.as_str(), "lambda" | "D") {
            errors.push(diag(g.span, format!("`{}` is reserved", g.name)));
            continue;
        }
        let kind = match g.kind {
            KindDecl::Free => GenKind::Free,
            KindDecl::Torsion(0) => {
                errors.push(diag(g.span, "torsion order must be positive"));
                continue;
            }
            KindDecl::Torsion(m) => GenKind::Torsion(m),
        };
        ctx.index.insert(&g.name, specs.len() as u32);
        ctx.kinds.push(kind);
        ctx.names.push(g.name.clone());
        specs.push(GeneratorSpec { name: g.name.clone(), kind });
    }
    let mut brackets = BTreeMap::new();
    for b in &f.brackets {
        let (Some(&i), Some(&j)) = (ctx.index.get(b.left.as_str()), ctx.index.get(b.right.as_str())) else {
            let bad = if ctx.index.contains_key(b.left.as_str()) { &b.right } else { &b.left };
            errors.push(diag(b.span, format!("unknown generator `{bad}`")));
            continue;
        };
        if i > j {
            errors.push(diag(
                b.span,
                format!("[{}, {}] follows from antisymmetry; state [{}, {}] instead", b.left, b.right, b.right, b.left),
            ));
            continue;
        }
        if brackets.contains_key(&(i, j)) {
            errors.push(diag(b.span, format!("bracket [{}, {}] is defined twice", b.left, b.right)));
            continue;
        }
        match ctx.to_poly(&b.rhs, &mut warnings) {
            Ok(p) => {
                brackets.insert((i, j), p);
            }
            Err(d) => errors.push(d),
        }
    }
    if !errors.is_empty() {
        return Err(Error::Parse(errors));
    }
    if specs.is_empty() {
        return Err(Error::Parse(vec![diag(f.span, "at least one generator is required")]));
    }
    let presentation = LcaPresentation::new(&f.name, specs, brackets)?;
    Ok(Lowered { presentation, warnings })
}

/// Lowers a λ-free expression such as `D*a + 2*k` to a vector of `p`.
pub fn lower_vector(e: &Expr, p: &LcaPresentation) -> Result<ConformalVector> {
    let ctx = Ctx {
        index: p.generators().iter().enumerate().map(|(i, g)| (g.name.as_str(), i as u32)).collect(),
        kinds: p.generators().iter().map(|g| g.kind).collect(),
        names: p.generators().iter().map(|g| g.name.clone()).collect(),
    };
    if expand(e, &ctx.index).map_err(|d| Error::Parse(vec![d]))?.keys().any(|m| m.lam > 0) {
        return Err(Error::Parse(vec![diag(e.span, "lambda is not allowed in a vector")]));
    }
    let poly = ctx.to_poly(e, &mut Vec::new()).map_err(|d| Error::Parse(vec![d]))?;
    Ok(p.reduce(&poly.coeff(0)))
}
