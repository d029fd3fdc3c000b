//! Text input and output: variable naming, the ideal-expression grammar
//! `(x*y^2, y*z)`, and the edge-list format (one edge per line).

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::hypergraph::Hypergraph;
use crate::ideal::IdealOf;
use crate::monomial::{default_name, MonomialOf};
use crate::prime::MonomialPrime;
use crate::varset::{VarSet, MAX_VARS};

/// Names for the variables of a ring, indexed from 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VarNames(Vec<String>);

impl VarNames {
    /// `x1, .., xd`.
    pub fn standard(d: usize) -> Self {
        VarNames((0..d).map(default_name).collect())
    }

    /// Explicit names. Each must be a valid identifier and appear once.
    pub fn new(names: Vec<String>) -> Result<Self> {
        let mut seen = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::usage(format!("invalid variable name {n:?}")));
            }
            if seen.insert(n.as_str(), i).is_some() {
                return Err(Error::usage(format!("duplicate variable {n:?}")));
            }
        }
        if names.len() > MAX_VARS {
            return Err(Error::Resource { what: "variables", needed: names.len() as u64, limit: MAX_VARS as u64 });
        }
        Ok(VarNames(names))
    }

    /// Parses a comma- or whitespace-separated list such as `x,y,z`.
    pub fn parse_list(s: &str) -> Result<Self> {
        Self::new(
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(str::to_owned)
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, v: usize) -> String {
        self.0.get(v).cloned().unwrap_or_else(|| default_name(v))
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// Closure form accepted by the `display_with` methods.
    pub fn namer(&self) -> impl Fn(usize) -> String + '_ {
        move |v| self.name(v)
    }

    /// Assigns indices to names in the order they were first seen. If every
    /// name has the form `x<k>` with `k >= 1`, index `k-1` is used instead,
    /// so `x3` alone lives in a ring of dimension 3.
    fn infer(seen: &[String]) -> Result<Self> {
        let numbered: Option<Vec<usize>> = seen.iter().map(|n| standard_index(n)).collect();
        match numbered {
            Some(idx) => {
                let d = idx.iter().map(|i| i + 1).max().unwrap_or(0);
                if d > MAX_VARS {
                    return Err(Error::Resource { what: "variables", needed: d as u64, limit: MAX_VARS as u64 });
                }
                Ok(VarNames::standard(d))
            }
            None => VarNames::new(seen.to_vec()),
        }
    }

    fn resolve(&self, name: &str) -> Option<usize> {
        self.index_of(name)
    }

    fn write_monomial<E: Exponent>(&self, m: &MonomialOf<E>, out: &mut String) {
        let _ = write!(out, "{}", m.display_with(&self.namer()));
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn standard_index(name: &str) -> Option<usize> {
    let digits = name.strip_prefix('x')?;
    if digits.is_empty() || digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse::<usize>().ok().map(|k| k - 1)
}

/// Which grammar an input is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    EdgeList,
    IdealExpr,
}

impl Format {
    /// Ideal expressions start with `(`; anything else is an edge list.
    pub fn detect(src: &str) -> Format {
        let first = src
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim_start())
            .find(|l| !l.is_empty());
        match first {
            Some(l) if l.starts_with('(') => Format::IdealExpr,
            _ => Format::EdgeList,
        }
    }
}

/// Result of [`parse_input`].
#[derive(Debug, Clone, PartialEq)]
pub enum Parsed {
    Ideal(IdealOf<u16>),
    Hypergraph(Hypergraph),
}

impl Parsed {
    /// The input as a monomial ideal (edge ideal for hypergraphs).
    pub fn into_ideal(self) -> IdealOf<u16> {
        match self {
            Parsed::Ideal(i) => i,
            Parsed::Hypergraph(h) => h.edge_ideal(),
        }
    }

    /// The input as a hypergraph. Fails unless the ideal is square-free and proper.
    pub fn into_hypergraph(self) -> Result<Hypergraph> {
        match self {
            Parsed::Hypergraph(h) => Ok(h),
            Parsed::Ideal(i) => Hypergraph::of_ideal(&i),
        }
    }
}

/// Parses either format, auto-detecting it when `format` is `None`.
pub fn parse_input(src: &str, format: Option<Format>, names: Option<&VarNames>) -> Result<(VarNames, Parsed)> {
    match format.unwrap_or_else(|| Format::detect(src)) {
        Format::IdealExpr => parse_ideal::<u16>(src, names).map(|(n, i)| (n, Parsed::Ideal(i))),
        Format::EdgeList => parse_edge_list(src, names).map(|(n, h)| (n, Parsed::Hypergraph(h))),
    }
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
}

impl Cursor {
    fn new(src: &str) -> Self {
        Cursor { chars: src.chars().collect(), pos: 0, line: 1, col: 1 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c == '#' {
                while !matches!(self.peek(), None | Some('\n')) {
                    self.bump();
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.line, col: self.col, msg: msg.into() }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.err(format!("expected '{want}', found '{c}'"))),
            None => Err(self.err(format!("expected '{want}', found end of input"))),
        }
    }

    fn ident(&mut self) -> Option<String> {
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
            _ => return None,
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.bump();
        }
        Some(self.chars[start..self.pos].iter().collect())
    }

    fn number(&mut self) -> Option<u64> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return None;
        }
        self.chars[start..self.pos].iter().collect::<String>().parse().ok()
    }
}

/// A factor `name^k` with the position it started at, kept until names
/// are resolved to indices.
struct RawFactor {
    name: String,
    exp: u64,
    line: usize,
    col: usize,
}

/// Parses `(m1, m2, ...)` where each `m` is `1`, `0`, or a `*`-product of
/// `name` / `name^k` factors. `()` and `(0)` denote the zero ideal.
pub fn parse_ideal<E: Exponent>(src: &str, names: Option<&VarNames>) -> Result<(VarNames, IdealOf<E>)> {
    let mut cur = Cursor::new(src);
    cur.expect('(')?;
    let mut raw: Vec<Option<Vec<RawFactor>>> = Vec::new();
    cur.skip_ws();
    if cur.peek() == Some(')') {
        cur.bump();
    } else {
        loop {
            cur.skip_ws();
            raw.push(parse_product(&mut cur)?);
            cur.skip_ws();
            match cur.bump() {
                Some(',') => continue,
                Some(')') => break,
                Some(c) => {
                    return Err(Error::Parse { line: cur.line, col: cur.col - 1, msg: format!("expected ',' or ')', found '{c}'") })
                }
                None => return Err(cur.err("unclosed '('")),
            }
        }
    }
    cur.skip_ws();
    if let Some(c) = cur.peek() {
        return Err(cur.err(format!("unexpected '{c}' after ideal")));
    }

    let mut order: Vec<String> = Vec::new();
    for f in raw.iter().flatten().flatten() {
        if !order.contains(&f.name) {
            order.push(f.name.clone());
        }
    }
    let names = match names {
        Some(n) => n.clone(),
        None => VarNames::infer(&order)?,
    };
    let d = names.len();
    let mut gens = Vec::new();
    for product in raw {
        // `None` marks a literal 0, which contributes nothing.
        let Some(factors) = product else { continue };
        let mut exps = vec![0u64; d];
        for f in factors {
            let v = names
                .resolve(&f.name)
                .ok_or_else(|| Error::Parse { line: f.line, col: f.col, msg: format!("unknown variable {:?}", f.name) })?;
            exps[v] = exps[v]
                .checked_add(f.exp)
                .ok_or(Error::Parse { line: f.line, col: f.col, msg: "exponent too large".into() })?;
        }
        let m = MonomialOf::<E>::from_u64s(&exps)
            .map_err(|_| Error::Parse { line: 1, col: 1, msg: "exponent too large for this exponent type".into() })?;
        gens.push(m);
    }
    Ok((names, IdealOf::minimalize(d, gens)?))
}

fn parse_product(cur: &mut Cursor) -> Result<Option<Vec<RawFactor>>> {
    let mut factors = Vec::new();
    if matches!(cur.peek(), Some(c) if c.is_ascii_digit()) {
        let (line, col) = (cur.line, cur.col);
        return match cur.number() {
            Some(1) => Ok(Some(factors)),
            Some(0) => Ok(None),
            _ => Err(Error::Parse { line, col, msg: "only the constants 0 and 1 are allowed".into() }),
        };
    }
    loop {
        cur.skip_ws();
        let (line, col) = (cur.line, cur.col);
        let name = cur.ident().ok_or_else(|| match cur.peek() {
            Some(c) => cur.err(format!("expected a variable name, found '{c}'")),
            None => cur.err("expected a variable name, found end of input"),
        })?;
        cur.skip_ws();
        let mut exp = 1;
        if cur.peek() == Some('^') {
            cur.bump();
            cur.skip_ws();
            exp = cur.number().ok_or_else(|| cur.err("expected an exponent after '^'"))?;
        }
        factors.push(RawFactor { name, exp, line, col });
        cur.skip_ws();
        if cur.peek() == Some('*') {
            cur.bump();
        } else {
            return Ok(Some(factors));
        }
    }
}

/// Parses a comma-separated list of monomials (no parentheses) over known
/// variable names, keeping every entry as written.
pub fn parse_monomial_list(src: &str, names: &VarNames) -> Result<Vec<MonomialOf<u16>>> {
    let mut cur = Cursor::new(src);
    let mut out = Vec::new();
    loop {
        cur.skip_ws();
        let product = parse_product(&mut cur)?;
        let mut exps = vec![0u64; names.len()];
        for f in product.into_iter().flatten() {
            let v = names
                .resolve(&f.name)
                .ok_or_else(|| Error::Parse { line: f.line, col: f.col, msg: format!("unknown variable {:?}", f.name) })?;
            exps[v] = exps[v].saturating_add(f.exp);
        }
        out.push(MonomialOf::from_u64s(&exps)?);
        cur.skip_ws();
        match cur.bump() {
            None => return Ok(out),
            Some(',') => continue,
            Some(c) => return Err(Error::Parse { line: cur.line, col: cur.col - 1, msg: format!("unexpected '{c}'") }),
        }
    }
}

/// Parses an edge list: one edge per line (or separated by `/`), vertex
/// tokens separated by whitespace or commas, `#` starting a comment.
pub fn parse_edge_list(src: &str, names: Option<&VarNames>) -> Result<(VarNames, Hypergraph)> {
    // (tokens with positions) per edge, plus the position the edge starts at
    let mut raw: Vec<(usize, usize, Vec<(String, usize, usize)>)> = Vec::new();
    for (li, line) in src.lines().enumerate() {
        let line_no = li + 1;
        let body = line.split('#').next().unwrap_or("");
        let mut col = 1;
        let mut edge_start = None;
        let mut tokens: Vec<(String, usize, usize)> = Vec::new();
        let mut chars = body.chars().peekable();
        let flush = |tokens: &mut Vec<(String, usize, usize)>, start: Option<usize>, end_col: usize, raw: &mut Vec<_>, sep: bool| -> Result<()> {
            if tokens.is_empty() {
                if sep {
                    return Err(Error::Parse { line: line_no, col: end_col, msg: "empty edge".into() });
                }
                return Ok(());
            }
            raw.push((line_no, start.unwrap_or(1), std::mem::take(tokens)));
            Ok(())
        };
        while let Some(c) = chars.next() {
            if c == '/' {
                flush(&mut tokens, edge_start.take(), col, &mut raw, true)?;
                col += 1;
            } else if c.is_whitespace() || c == ',' {
                col += 1;
            } else if c.is_ascii_alphanumeric() || c == '_' {
                let start = col;
                let mut tok = String::from(c);
                col += 1;
                while let Some(&n) = chars.peek() {
                    if n.is_ascii_alphanumeric() || n == '_' {
                        tok.push(n);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                if !is_identifier(&tok) {
                    return Err(Error::Parse { line: line_no, col: start, msg: format!("invalid vertex name {tok:?}") });
                }
                edge_start.get_or_insert(start);
                tokens.push((tok, line_no, start));
            } else {
                return Err(Error::Parse { line: line_no, col, msg: format!("unexpected '{c}'") });
            }
        }
        let had_sep = body.contains('/');
        flush(&mut tokens, edge_start.take(), col, &mut raw, had_sep)?;
    }
    if raw.is_empty() {
        return Err(Error::Parse { line: 1, col: 1, msg: "no edges".into() });
    }

    let mut order: Vec<String> = Vec::new();
    for (_, _, toks) in &raw {
        for (t, _, _) in toks {
            if !order.contains(t) {
                order.push(t.clone());
            }
        }
    }
    let names = match names {
        Some(n) => n.clone(),
        None => VarNames::infer(&order)?,
    };

    let mut edges: Vec<(usize, usize, VarSet)> = Vec::new();
    for (line, col, toks) in raw {
        let mut e = VarSet::EMPTY;
        for (t, tl, tc) in toks {
            let v = names
                .resolve(&t)
                .ok_or_else(|| Error::Parse { line: tl, col: tc, msg: format!("unknown variable {t:?}") })?;
            if e.contains(v) {
                return Err(Error::Parse { line: tl, col: tc, msg: format!("duplicate variable {t:?} in edge") });
            }
            e.insert(v);
        }
        if let Some((pl, _, _)) = edges.iter().find(|(_, _, f)| f.is_subset(e) || e.is_subset(*f)) {
            let msg = if edges.iter().any(|(_, _, f)| *f == e) {
                format!("repeated edge (first at line {pl})")
            } else {
                format!("edge is comparable with the edge at line {pl}; edges must form a clutter")
            };
            return Err(Error::Parse { line, col, msg });
        }
        edges.push((line, col, e));
    }
    let h = Hypergraph::new(names.len(), edges.into_iter().map(|(_, _, e)| e))?;
    Ok((names, h))
}

/// Canonical ideal text, e.g. `(x1*x2, x2^2)`.
pub fn render_ideal<E: Exponent>(ideal: &IdealOf<E>, names: &VarNames) -> String {
    ideal.display_with(&names.namer()).to_string()
}

pub fn render_monomial<E: Exponent>(m: &MonomialOf<E>, names: &VarNames) -> String {
    let mut s = String::new();
    names.write_monomial(m, &mut s);
    s
}

pub fn render_prime(p: &MonomialPrime, names: &VarNames) -> String {
    p.display_with(&names.namer()).to_string()
}

/// Edge-list text, one edge per line in canonical edge order.
pub fn render_edge_list(h: &Hypergraph, names: &VarNames) -> String {
    let mut out = String::new();
    for e in h.edges() {
        let toks: Vec<String> = e.iter().map(|v| names.name(v)).collect();
        out.push_str(&toks.join(" "));
        out.push('\n');
    }
    out
}
