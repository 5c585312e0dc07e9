//! Lexer, parser and elaborator for the ASCII surface syntax.
//!
//! ```text
//! type  ::= 0 | 1 | <numeral> | B<n> | type + type | type * type | ( type )
//! comb  ::= prim | x | cx | ccx | name | cif(comb, comb) | cif atom atom
//!         | inv(comb) | comb ; comb | comb (+) comb | comb (*) comb
//!         | ( comb ) | ( comb : type <-> type )
//! def   ::= name : type <-> type = comb
//! ```
//!
//! `;` binds loosest, then `(+)`, then `(*)`; all three nest to the right.
//! Types on primitive leaves are inferred by unification.

use std::collections::HashMap;

use thiserror::Error;

use super::gates;
use super::unify::{schema, Subst, TyTerm};
use super::{Comb, PiType, Prim, Value};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("{line}:{col}: syntax error: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{line}:{col}: type error: {msg}")]
    Type { line: usize, col: usize, msg: String },
}

/// One `name : A <-> B = c` line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Definition {
    pub name: String,
    pub comb: Comb,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(usize),
    LParen,
    RParen,
    Semi,
    Colon,
    Comma,
    Eq,
    Arrow,
    OPlus,
    OTimes,
    Plus,
    Star,
    Eof,
}

const STEMS: [&str; 5] = ["unite", "uniti", "swap", "assocl", "assocr"];
const KEYWORDS: [&str; 5] = ["x", "cx", "ccx", "cif", "inv"];

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, (usize, String)> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i];
        let start = i;
        match ch {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'#' => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
                continue;
            }
            b'(' if src[i..].starts_with("(+)") => {
                out.push((Tok::OPlus, start));
                i += 3;
            }
            b'(' if src[i..].starts_with("(*)") => {
                out.push((Tok::OTimes, start));
                i += 3;
            }
            b'<' if src[i..].starts_with("<->") => {
                out.push((Tok::Arrow, start));
                i += 3;
            }
            b'(' => {
                out.push((Tok::LParen, start));
                i += 1;
            }
            b')' => {
                out.push((Tok::RParen, start));
                i += 1;
            }
            b';' => {
                out.push((Tok::Semi, start));
                i += 1;
            }
            b':' => {
                out.push((Tok::Colon, start));
                i += 1;
            }
            b',' => {
                out.push((Tok::Comma, start));
                i += 1;
            }
            b'=' => {
                out.push((Tok::Eq, start));
                i += 1;
            }
            b'+' => {
                out.push((Tok::Plus, start));
                i += 1;
            }
            b'*' => {
                out.push((Tok::Star, start));
                i += 1;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = src[start..i].parse().map_err(|_| (start, "numeral too large".to_string()))?;
                out.push((Tok::Num(n), start));
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let ident_char = |c: u8| c.is_ascii_alphanumeric() || matches!(c, b'_' | b'\'' | b'-' | b'[' | b']');
                while i < bytes.len() && ident_char(bytes[i]) {
                    i += 1;
                }
                if STEMS.contains(&&src[start..i]) && i < bytes.len() && matches!(bytes[i], b'+' | b'*') {
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                        i += 1;
                    }
                }
                out.push((Tok::Ident(src[start..i].to_string()), start));
            }
            _ => {
                let c = src[i..].chars().next().unwrap_or('?');
                return Err((start, format!("unexpected character `{c}`")));
            }
        }
    }
    out.push((Tok::Eof, src.len()));
    Ok(out)
}

#[derive(Clone, Debug)]
enum ExprKind {
    Prim(Prim),
    Ref(String),
    Seq(Box<Expr>, Box<Expr>),
    Plus(Box<Expr>, Box<Expr>),
    Times(Box<Expr>, Box<Expr>),
    Cif(Box<Expr>, Box<Expr>),
    Inv(Box<Expr>),
    Ascribe(Box<Expr>, PiType, PiType),
}

#[derive(Clone, Debug)]
struct Expr {
    kind: ExprKind,
    start: usize,
    end: usize,
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

fn line_col(src: &str, offset: usize) -> (usize, usize) {
    let before = &src[..offset.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rfind('\n').map_or(before.len(), |nl| before.len() - nl - 1) + 1;
    (line, col)
}

fn syntax_error(src: &str, offset: usize, msg: impl Into<String>) -> ParseError {
    let (line, col) = line_col(src, offset);
    ParseError::Syntax { line, col, msg: msg.into() }
}

fn type_error(src: &str, offset: usize, msg: impl Into<String>) -> ParseError {
    let (line, col) = line_col(src, offset);
    ParseError::Type { line, col, msg: msg.into() }
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self, ParseError> {
        let toks = lex(src).map_err(|(off, msg)| syntax_error(src, off, msg))?;
        Ok(Parser { src, toks, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    /// End offset of the previously consumed token.
    fn last_end(&self) -> usize {
        if self.pos == 0 {
            return 0;
        }
        let (tok, off) = &self.toks[self.pos - 1];
        off + match tok {
            Tok::Ident(s) => s.len(),
            Tok::Num(n) => n.to_string().len(),
            Tok::Arrow | Tok::OPlus | Tok::OTimes => 3,
            Tok::Eof => 0,
            _ => 1,
        }
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        syntax_error(self.src, self.offset(), msg)
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    fn ty(&mut self) -> Result<PiType, ParseError> {
        let left = self.ty_prod()?;
        if *self.peek() == Tok::Plus {
            self.bump();
            Ok(PiType::sum(left, self.ty()?))
        } else {
            Ok(left)
        }
    }

    fn ty_prod(&mut self) -> Result<PiType, ParseError> {
        let left = self.ty_atom()?;
        if *self.peek() == Tok::Star {
            self.bump();
            Ok(PiType::prod(left, self.ty_prod()?))
        } else {
            Ok(left)
        }
    }

    fn ty_atom(&mut self) -> Result<PiType, ParseError> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                Ok(PiType::numeral(n))
            }
            Tok::Ident(s) if s.len() > 1 && s.starts_with('B') && s[1..].bytes().all(|b| b.is_ascii_digit()) => {
                let n: usize = s[1..].parse().map_err(|_| self.err("bit width too large"))?;
                self.bump();
                Ok(PiType::bits(n))
            }
            Tok::LParen => {
                self.bump();
                let t = self.ty()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            _ => Err(self.err("expected a type")),
        }
    }

    fn signature(&mut self) -> Result<(PiType, PiType), ParseError> {
        let a = self.ty()?;
        self.expect(Tok::Arrow, "`<->`")?;
        let b = self.ty()?;
        Ok((a, b))
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let start = self.offset();
        let left = self.plus_expr()?;
        if *self.peek() == Tok::Semi {
            self.bump();
            let right = self.expr()?;
            Ok(Expr { kind: ExprKind::Seq(Box::new(left), Box::new(right)), start, end: self.last_end() })
        } else {
            Ok(left)
        }
    }

    fn plus_expr(&mut self) -> Result<Expr, ParseError> {
        let start = self.offset();
        let left = self.times_expr()?;
        if matches!(self.peek(), Tok::OPlus | Tok::Plus) {
            self.bump();
            let right = self.plus_expr()?;
            Ok(Expr { kind: ExprKind::Plus(Box::new(left), Box::new(right)), start, end: self.last_end() })
        } else {
            Ok(left)
        }
    }

    fn times_expr(&mut self) -> Result<Expr, ParseError> {
        let start = self.offset();
        let left = self.atom()?;
        if matches!(self.peek(), Tok::OTimes | Tok::Star) {
            self.bump();
            let right = self.times_expr()?;
            Ok(Expr { kind: ExprKind::Times(Box::new(left), Box::new(right)), start, end: self.last_end() })
        } else {
            Ok(left)
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let start = self.offset();
        let kind = match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                let kind = if *self.peek() == Tok::Colon {
                    self.bump();
                    let (a, b) = self.signature()?;
                    ExprKind::Ascribe(Box::new(inner), a, b)
                } else {
                    inner.kind
                };
                self.expect(Tok::RParen, "`)`")?;
                kind
            }
            Tok::Ident(name) => {
                self.bump();
                match name.as_str() {
                    "cif" => self.cif_args()?,
                    "inv" => {
                        self.expect(Tok::LParen, "`(` after `inv`")?;
                        let inner = self.expr()?;
                        self.expect(Tok::RParen, "`)`")?;
                        ExprKind::Inv(Box::new(inner))
                    }
                    _ => match Prim::from_name(&name) {
                        Some(p) => ExprKind::Prim(p),
                        None => ExprKind::Ref(name),
                    },
                }
            }
            _ => return Err(self.err("expected a combinator")),
        };
        Ok(Expr { kind, start, end: self.last_end() })
    }

    /// Either `cif(c1, c2)` or `cif atom atom`.
    fn cif_args(&mut self) -> Result<ExprKind, ParseError> {
        if *self.peek() == Tok::LParen {
            let save = self.pos;
            self.bump();
            let first = self.expr()?;
            if *self.peek() == Tok::Comma {
                self.bump();
                let second = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                return Ok(ExprKind::Cif(Box::new(first), Box::new(second)));
            }
            // Not the two-argument form: reparse as a parenthesized atom.
            self.pos = save;
        }
        let first = self.atom()?;
        let second = self.atom()?;
        Ok(ExprKind::Cif(Box::new(first), Box::new(second)))
    }

    fn at_eof(&self) -> bool {
        *self.peek() == Tok::Eof
    }

    fn value(&mut self) -> Result<Value, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) if s == "tt" => {
                self.bump();
                Ok(Value::Tt)
            }
            Tok::Ident(s) if s == "inl" || s == "inr" => {
                self.bump();
                let v = self.value()?;
                Ok(if s == "inl" { Value::inl(v) } else { Value::inr(v) })
            }
            Tok::LParen => {
                self.bump();
                let a = self.value()?;
                let v = if *self.peek() == Tok::Comma {
                    self.bump();
                    Value::pair(a, self.value()?)
                } else {
                    a
                };
                self.expect(Tok::RParen, "`)`")?;
                Ok(v)
            }
            _ => Err(self.err("expected a value")),
        }
    }
}

/// Typed tree with metavariables, produced before resolution.
enum ETree {
    Prim { op: Prim, src: TyTerm, tgt: TyTerm, at: usize },
    Seq(Box<ETree>, Box<ETree>),
    Plus(Box<ETree>, Box<ETree>),
    Times(Box<ETree>, Box<ETree>),
}

impl ETree {
    fn from_comb(c: &Comb, at: usize) -> ETree {
        match c {
            Comb::Prim { op, src, tgt } => ETree::Prim { op: *op, src: src.into(), tgt: tgt.into(), at },
            Comb::Seq(a, b) => ETree::Seq(Box::new(ETree::from_comb(a, at)), Box::new(ETree::from_comb(b, at))),
            Comb::Plus(a, b) => ETree::Plus(Box::new(ETree::from_comb(a, at)), Box::new(ETree::from_comb(b, at))),
            Comb::Times(a, b) => ETree::Times(Box::new(ETree::from_comb(a, at)), Box::new(ETree::from_comb(b, at))),
        }
    }

    fn invert(self) -> ETree {
        match self {
            ETree::Prim { op, src, tgt, at } => ETree::Prim { op: op.inverse(), src: tgt, tgt: src, at },
            ETree::Seq(a, b) => ETree::Seq(Box::new(b.invert()), Box::new(a.invert())),
            ETree::Plus(a, b) => ETree::Plus(Box::new(a.invert()), Box::new(b.invert())),
            ETree::Times(a, b) => ETree::Times(Box::new(a.invert()), Box::new(b.invert())),
        }
    }
}

struct Elab<'a> {
    src: &'a str,
    env: &'a HashMap<String, Comb>,
    subst: Subst,
}

impl Elab<'_> {
    fn text(&self, e: &Expr) -> &str {
        self.src[e.start..e.end.max(e.start)].trim()
    }

    fn prim(&mut self, op: Prim, at: usize) -> (ETree, TyTerm, TyTerm) {
        let (s, t) = schema(op, &mut self.subst);
        (ETree::Prim { op, src: s.clone(), tgt: t.clone(), at }, s, t)
    }

    fn elab(&mut self, e: &Expr) -> Result<(ETree, TyTerm, TyTerm), ParseError> {
        match &e.kind {
            ExprKind::Prim(op) => Ok(self.prim(*op, e.start)),
            ExprKind::Ref(name) => {
                let c = match name.as_str() {
                    "x" => gates::x(),
                    "cx" => gates::cx(),
                    "ccx" => gates::ccx(),
                    _ => self
                        .env
                        .get(name)
                        .cloned()
                        .ok_or_else(|| type_error(self.src, e.start, format!("unknown combinator `{name}`")))?,
                };
                let (s, t) = (TyTerm::from(&c.source()), TyTerm::from(&c.target()));
                Ok((ETree::from_comb(&c, e.start), s, t))
            }
            ExprKind::Seq(a, b) => {
                let (ta, s1, t1) = self.elab(a)?;
                let (tb, s2, t2) = self.elab(b)?;
                if !self.subst.unify(&t1, &s2) {
                    return Err(type_error(
                        self.src,
                        e.start,
                        format!(
                            "in `{}`: `{}` produces {} but `{}` expects {}",
                            self.text(e),
                            self.text(a),
                            self.subst.show(&t1),
                            self.text(b),
                            self.subst.show(&s2)
                        ),
                    ));
                }
                Ok((ETree::Seq(Box::new(ta), Box::new(tb)), s1, t2))
            }
            ExprKind::Plus(a, b) => {
                let (ta, s1, t1) = self.elab(a)?;
                let (tb, s2, t2) = self.elab(b)?;
                Ok((ETree::Plus(Box::new(ta), Box::new(tb)), TyTerm::sum(s1, s2), TyTerm::sum(t1, t2)))
            }
            ExprKind::Times(a, b) => {
                let (ta, s1, t1) = self.elab(a)?;
                let (tb, s2, t2) = self.elab(b)?;
                Ok((ETree::Times(Box::new(ta), Box::new(tb)), TyTerm::prod(s1, s2), TyTerm::prod(t1, t2)))
            }
            ExprKind::Cif(a, b) => {
                let (ta, s1, t1) = self.elab(a)?;
                let (tb, s2, t2) = self.elab(b)?;
                let ok = self.subst.unify(&s1, &t1) && self.subst.unify(&s2, &t2) && self.subst.unify(&s1, &s2);
                if !ok {
                    return Err(type_error(
                        self.src,
                        e.start,
                        format!("in `{}`: both branches of cif must have one type A <-> A", self.text(e)),
                    ));
                }
                let one = || TyTerm::One;
                let two = TyTerm::sum(one(), one());
                let a_ty = s1;
                let branch = TyTerm::prod(one(), a_ty.clone());
                let whole = TyTerm::prod(two, a_ty.clone());
                let split = TyTerm::sum(branch.clone(), branch.clone());
                let id1 = || ETree::Prim { op: Prim::Id, src: one(), tgt: one(), at: e.start };
                let dist = ETree::Prim { op: Prim::Dist, src: whole.clone(), tgt: split.clone(), at: e.start };
                let factor = ETree::Prim { op: Prim::Factor, src: split, tgt: whole.clone(), at: e.start };
                let body = ETree::Plus(
                    Box::new(ETree::Times(Box::new(id1()), Box::new(ta))),
                    Box::new(ETree::Times(Box::new(id1()), Box::new(tb))),
                );
                let tree = ETree::Seq(Box::new(dist), Box::new(ETree::Seq(Box::new(body), Box::new(factor))));
                Ok((tree, whole.clone(), whole))
            }
            ExprKind::Inv(a) => {
                let (t, s, g) = self.elab(a)?;
                Ok((t.invert(), g, s))
            }
            ExprKind::Ascribe(a, src, tgt) => {
                let (t, s, g) = self.elab(a)?;
                self.ascribe(&s, &g, src, tgt, e)?;
                Ok((t, s, g))
            }
        }
    }

    fn ascribe(&mut self, s: &TyTerm, g: &TyTerm, src: &PiType, tgt: &PiType, e: &Expr) -> Result<(), ParseError> {
        let (ws, wg) = (self.subst.show(s), self.subst.show(g));
        if self.subst.unify(s, &src.into()) && self.subst.unify(g, &tgt.into()) {
            Ok(())
        } else {
            Err(type_error(
                self.src,
                e.start,
                format!("`{}` has type {ws} <-> {wg}, which does not match {src} <-> {tgt}", self.text(e)),
            ))
        }
    }

    fn resolve(&self, t: &ETree) -> Result<Comb, ParseError> {
        Ok(match t {
            ETree::Prim { op, src, tgt, at } => {
                match (self.subst.resolve(src), self.subst.resolve(tgt)) {
                    (Some(src), Some(tgt)) => Comb::Prim { op: *op, src, tgt },
                    _ => {
                        return Err(type_error(
                            self.src,
                            *at,
                            format!(
                                "cannot infer the type of `{}` (found {} <-> {}); add an ascription",
                                op.name(),
                                self.subst.show(src),
                                self.subst.show(tgt)
                            ),
                        ))
                    }
                }
            }
            ETree::Seq(a, b) => Comb::seq(self.resolve(a)?, self.resolve(b)?),
            ETree::Plus(a, b) => Comb::plus(self.resolve(a)?, self.resolve(b)?),
            ETree::Times(a, b) => Comb::times(self.resolve(a)?, self.resolve(b)?),
        })
    }
}

fn elaborate(
    src: &str,
    env: &HashMap<String, Comb>,
    e: &Expr,
    sig: Option<&(PiType, PiType)>,
) -> Result<Comb, ParseError> {
    let mut el = Elab { src, env, subst: Subst::default() };
    let (tree, s, t) = el.elab(e)?;
    if let Some((a, b)) = sig {
        el.ascribe(&s, &t, a, b, e)?;
    }
    let c = el.resolve(&tree)?;
    // Elaboration only produces well-typed terms; this guards the invariant.
    c.typecheck().map_err(|err| type_error(src, e.start, err.to_string()))?;
    Ok(c)
}

fn parse_definition(p: &mut Parser<'_>, env: &HashMap<String, Comb>) -> Result<Definition, ParseError> {
    let at = p.offset();
    let name = match p.bump() {
        Tok::Ident(n) => n,
        _ => return Err(syntax_error(p.src, at, "expected a definition name")),
    };
    if Prim::from_name(&name).is_some() || KEYWORDS.contains(&name.as_str()) {
        return Err(syntax_error(p.src, at, format!("`{name}` is reserved")));
    }
    if env.contains_key(&name) {
        return Err(syntax_error(p.src, at, format!("`{name}` is already defined")));
    }
    p.expect(Tok::Colon, "`:`")?;
    let sig = p.signature()?;
    p.expect(Tok::Eq, "`=`")?;
    let body = p.expr()?;
    let comb = elaborate(p.src, env, &body, Some(&sig))?;
    Ok(Definition { name, comb })
}

/// Parses a whole program: one definition per line, `#` comments. Later
/// definitions may refer to earlier ones by name.
pub fn parse_program(text: &str) -> Result<Vec<Definition>, ParseError> {
    let mut p = Parser::new(text)?;
    let mut env = HashMap::new();
    let mut defs = Vec::new();
    while !p.at_eof() {
        let def = parse_definition(&mut p, &env)?;
        env.insert(def.name.clone(), def.comb.clone());
        defs.push(def);
    }
    Ok(defs)
}

/// Parses a single combinator: `c`, `c : A <-> B`, or `name : A <-> B = c`.
pub fn parse_comb(text: &str) -> Result<Comb, ParseError> {
    parse_comb_in(text, &HashMap::new())
}

/// Like [`parse_comb`], resolving names against `env`.
pub fn parse_comb_in(text: &str, env: &HashMap<String, Comb>) -> Result<Comb, ParseError> {
    let mut p = Parser::new(text)?;
    let is_def = matches!(p.peek(), Tok::Ident(_)) && *p.peek_at(1) == Tok::Colon;
    let comb = if is_def && !text.contains('=') {
        // `c : A <-> B` where `c` is a single name.
        let e = p.expr()?;
        p.expect(Tok::Colon, "`:`")?;
        let sig = p.signature()?;
        elaborate(text, env, &e, Some(&sig))?
    } else if is_def {
        parse_definition(&mut p, env)?.comb
    } else {
        let e = p.expr()?;
        let sig = if *p.peek() == Tok::Colon {
            p.bump();
            Some(p.signature()?)
        } else {
            None
        };
        elaborate(text, env, &e, sig.as_ref())?
    };
    if !p.at_eof() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(comb)
}

pub fn parse_type(text: &str) -> Result<PiType, ParseError> {
    let mut p = Parser::new(text)?;
    let t = p.ty()?;
    if !p.at_eof() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(t)
}

pub fn parse_value(text: &str) -> Result<Value, ParseError> {
    let mut p = Parser::new(text)?;
    let v = p.value()?;
    if !p.at_eof() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

impl std::str::FromStr for PiType {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_type(s)
    }
}

impl std::str::FromStr for Value {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_value(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::print::{print_comb, print_definition};

    #[test]
    fn swap_plus_at_two() {
        let c = parse_comb("swap+ : 1 + 1 <-> 1 + 1").unwrap();
        assert_eq!(c, Comb::prim(Prim::SwapPlus, PiType::two()).unwrap());
    }

    #[test]
    fn types_parse_with_precedence() {
        let t = parse_type("1 + 1 * 0 + 1").unwrap();
        let expected = PiType::sum(PiType::One, PiType::sum(PiType::prod(PiType::One, PiType::Zero), PiType::One));
        assert_eq!(t, expected);
        assert_eq!(parse_type("B3").unwrap(), PiType::bits(3));
        assert_eq!(parse_type("2 * 2").unwrap(), PiType::bits(2));
        assert_eq!(parse_type("(1 + 0) + 0").unwrap().to_string(), "(1 + 0) + 0");
    }

    #[test]
    fn ill_typed_sequence_names_the_subterm() {
        let err = parse_comb("seq_bad : 2 <-> 2 = swap+ ; swap*").unwrap_err();
        match err {
            ParseError::Type { msg, line, col } => {
                assert_eq!((line, col), (1, 21));
                assert!(msg.contains("swap+ ; swap*"), "{msg}");
            }
            other => panic!("expected a type error, got {other}"),
        }
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_program("a : 2 <-> 2 = swap+\nb : 2 <-> 2 = ; id\n").unwrap_err();
        assert_eq!(err, ParseError::Syntax { line: 2, col: 15, msg: "expected a combinator".into() });
        assert!(matches!(parse_comb("swap+ @"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn ambiguous_types_are_rejected() {
        let err = parse_comb("swap+").unwrap_err();
        assert!(err.to_string().contains("cannot infer"), "{err}");
        let err = parse_comb("factorzl ; absorbr : 0 <-> 0").unwrap_err();
        assert!(err.to_string().contains("factorzl"), "{err}");
        assert!(parse_comb("(factorzl : 0 <-> 0 * 1) ; absorbr : 0 <-> 0").is_ok());
    }

    #[test]
    fn cif_forms_agree() {
        let a = parse_comb("cif (x * id) cx : 2 * (2 * 2) <-> B3").unwrap();
        let b = parse_comb("cif(x (*) id, cx) : B3 <-> B3").unwrap();
        assert_eq!(a, b);
        let expected = gates::cif(
            Comb::times(gates::x(), Comb::id(PiType::two())),
            gates::cx(),
        )
        .unwrap();
        assert_eq!(a, expected);
    }

    #[test]
    fn program_with_references_and_inverse() {
        let src = "\
# reshuffle then undo
r : 2 * (2 * 2) <-> (2 * 2) * 2 = (id (*) swap*) ; assocl*
back : (2 * 2) * 2 <-> B3 = inv(r)
";
        let defs = parse_program(src).unwrap();
        assert_eq!(defs.len(), 2);
        assert_eq!(defs[1].comb, defs[0].comb.invert());
        let redefined = parse_program("a : 2 <-> 2 = id\na : 2 <-> 2 = id\n");
        assert!(redefined.is_err());
    }

    #[test]
    fn printing_round_trips() {
        let src = "t : (1 + 0) * 2 <-> 2 = dist ; (unite*l (+) (absorbr ; (factorzl : 0 <-> 0 * 2) ; absorbr)) ; unite+r";
        let c = parse_comb(src).unwrap();
        let printed = print_comb(&c);
        assert_eq!(parse_comb(&printed).unwrap(), c);
        let def = print_definition("t", &c);
        assert_eq!(parse_program(&def).unwrap()[0].comb, c);
    }

    #[test]
    fn values() {
        let v = parse_value("(inl tt, inr (tt, tt))").unwrap();
        assert_eq!(v, Value::pair(Value::inl(Value::Tt), Value::inr(Value::pair(Value::Tt, Value::Tt))));
        assert_eq!(parse_value(&v.to_string()).unwrap(), v);
        assert!(parse_value("inl").is_err());
    }
}
