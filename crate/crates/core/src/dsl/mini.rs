//! Command-line mini-grammars: vector expressions, points (`a[0]=3/2, k[0]=-1`)
//! and PBW elements (`2*:a a[1]: - 1/2*:k: + 1`).

use num::One;

use super::lower::lower_vector;
use super::parser::parse_expr;
use super::{Diagnostic, SourceSpan};
use crate::enveloping::{Enveloping, UElement};
use crate::error::{Error, Result};
use crate::lca::{BasisIndex, ConformalVector, LcaPresentation};
use crate::scalar::{parse_q, Q};

fn err(start: usize, end: usize, message: impl Into<String>) -> Error {
    Error::Parse(vec![Diagnostic { span: SourceSpan { start, end, line: 1, col: start + 1 }, message: message.into() }])
}

/// Pieces of `s` split on `sep` at the top level, with their byte offsets.
fn split(s: &str, sep: impl Fn(char, bool) -> bool) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let (mut start, mut inside) = (0, false);
    for (i, c) in s.char_indices() {
        if c == ':' {
            inside = !inside;
        }
        if sep(c, inside) && i > start {
            out.push((start, &s[start..i]));
            start = i;
        } else if sep(c, inside) {
            start = i;
        }
    }
    out.push((start, &s[start..]));
    out
}

pub fn parse_vector(src: &str, p: &LcaPresentation) -> Result<ConformalVector> {
    let e = parse_expr(src).map_err(|d| Error::Parse(vec![d]))?;
    lower_vector(&e, p)
}

/// Point in generator coordinates; `0` or an empty string is the origin.
pub fn parse_point(src: &str, p: &LcaPresentation) -> Result<ConformalVector> {
    let mut out = ConformalVector::zero();
    if matches!(src.trim(), "" | "0") {
        return Ok(out);
    }
    let mut seen = std::collections::HashSet::new();
    for (off, piece) in src.split(',').scan(0, |pos, s| {
        let off = *pos;
        *pos += s.len() + 1;
        Some((off, s))
    }) {
        let end = off + piece.len();
        let Some((lhs, rhs)) = piece.split_once('=') else {
            return Err(err(off, end, "expected `name[depth]=value`"));
        };
        let (name, depth) = match lhs.trim().split_once('[') {
            Some((n, d)) => {
                let d = d.strip_suffix(']').and_then(|d| d.trim().parse::<u32>().ok());
                (n.trim(), d.ok_or_else(|| err(off, end, "expected `[depth]` with a natural number"))?)
            }
            None => (lhs.trim(), 0),
        };
        let g = p.gen_index(name).ok_or_else(|| err(off, end, format!("unknown generator `{name}`")))?;
        let c = parse_q(rhs).ok_or_else(|| err(off, end, format!("`{}` is not a rational number", rhs.trim())))?;
        if !seen.insert((g, depth)) {
            return Err(err(off, end, format!("coordinate {name}[{depth}] given twice")));
        }
        let idx = BasisIndex::new(g, depth);
        if !p.is_live(idx) {
            return Err(err(off, end, format!("{name}[{depth}] is zero by torsion")));
        }
        out.add_term(idx, c);
    }
    Ok(out)
}

/// PBW element; monomials are straightened into normal order.
pub fn parse_pbw(src: &str, env: &Enveloping) -> Result<UElement> {
    let mut out = UElement::zero();
    if src.trim().is_empty() {
        return Err(err(0, src.len(), "empty PBW element"));
    }
    for (off, term) in split(src, |c, inside| !inside && (c == '+' || c == '-')) {
        let end = off + term.len();
        let (neg, body) = match term.trim_start().strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, term.trim_start().strip_prefix('+').unwrap_or(term.trim_start())),
        };
        let body = body.trim();
        if body.is_empty() {
            return Err(err(off, end, "missing term"));
        }
        let (coef, word) = match body.find(':') {
            Some(i) => {
                let head = body[..i].trim();
                let head = head.strip_suffix('*').unwrap_or(head).trim();
                let rest = body[i + 1..].strip_suffix(':').ok_or_else(|| err(off, end, "unclosed `:`"))?;
                if rest.contains(':') {
                    return Err(err(off, end, "one monomial per term"));
                }
                let c = if head.is_empty() { Some(Q::one()) } else { parse_q(head) };
                (c, Some(rest))
            }
            None => {
                let body = body.strip_suffix("*1").unwrap_or(body);
                (parse_q(body), None)
            }
        };
        let mut c = coef.ok_or_else(|| err(off, end, "expected a rational coefficient"))?;
        if neg {
            c = -c;
        }
        let mut letters = Vec::new();
        for name in word.unwrap_or("").split_whitespace() {
            letters.push(env.frame().parse_letter(name).ok_or_else(|| err(off, end, format!("unknown letter `{name}`")))?);
        }
        out.add_scaled(&env.straighten(&letters), &c);
    }
    Ok(out)
}
