use std::fmt;

use super::{Diagnostic, SourceSpan};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(String),
    Sym(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(s) => write!(f, "number {s}"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub span: SourceSpan,
}

const SYMBOLS: &str = "{}[](),;:=+-*/^";

pub fn lex(src: &str) -> Result<Vec<Token>, Diagnostic> {
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut it = src.char_indices().peekable();
    while let Some(&(i, c)) = it.peek() {
        let start = SourceSpan { start: i, end: i + c.len_utf8(), line, col };
        if c == '\n' {
            it.next();
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            it.next();
            col += 1;
        } else if c == '#' {
            while let Some(&(_, c)) = it.peek() {
                if c == '\n' {
                    break;
                }
                it.next();
            }
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut end = i;
            while let Some(&(j, c)) = it.peek() {
                if !(c.is_ascii_alphanumeric() || c == '_') {
                    break;
                }
                end = j + 1;
                col += 1;
                it.next();
            }
            out.push(Token { tok: Tok::Ident(src[i..end].to_string()), span: SourceSpan { end, ..start } });
        } else if c.is_ascii_digit() {
            let mut end = i;
            while let Some(&(j, c)) = it.peek() {
                if !c.is_ascii_digit() {
                    break;
                }
                end = j + 1;
                col += 1;
                it.next();
            }
            out.push(Token { tok: Tok::Int(src[i..end].to_string()), span: SourceSpan { end, ..start } });
        } else if SYMBOLS.contains(c) {
            it.next();
            col += 1;
            out.push(Token { tok: Tok::Sym(c), span: start });
        } else {
            return Err(Diagnostic { span: start, message: format!("unexpected character `{c}`") });
        }
    }
    let end = src.len();
    out.push(Token { tok: Tok::Eof, span: SourceSpan { start: end, end, line, col } });
    Ok(out)
}
