//! Session files: a `ring` line, `ideal` and `element` declarations, then one
//! command. Statements end at a newline or a `;` outside parentheses; `#`
//! starts a comment.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use seqcm_core::{Error as EngineError, MonomialIdeal, Polynomial, Ring, SequenceKind};

/// Diagnostic with a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    Cm,
    Gcm,
    Scm,
    Sgcm,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::Cm => "cm",
            Property::Gcm => "gcm",
            Property::Scm => "scm",
            Property::Sgcm => "sgcm",
        }
    }

    fn parse(s: &str) -> Option<Property> {
        match s {
            "cm" => Some(Property::Cm),
            "gcm" => Some(Property::Gcm),
            "scm" => Some(Property::Scm),
            "sgcm" => Some(Property::Sgcm),
            _ => None,
        }
    }

    fn needs_monomial(self) -> bool {
        matches!(self, Property::Scm | Property::Sgcm)
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A declared ideal. `monomial` is set when the ideal is monomial.
#[derive(Clone, Debug)]
pub struct IdealDecl {
    pub name: String,
    pub generators: Vec<Polynomial>,
    pub monomial: Option<MonomialIdeal>,
}

#[derive(Clone, Debug)]
pub enum Command {
    Profile,
    Classify(Polynomial),
    CheckSeq(SequenceKind, Vec<Polynomial>),
    FindSeq(SequenceKind, usize),
    Decide(Property),
    Invariants,
    Harness,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Profile => "profile",
            Command::Classify(_) => "classify",
            Command::CheckSeq(..) => "check-seq",
            Command::FindSeq(..) => "find-seq",
            Command::Decide(_) => "decide",
            Command::Invariants => "invariants",
            Command::Harness => "harness",
        }
    }

    fn needs_monomial(&self) -> bool {
        match self {
            Command::Profile | Command::Invariants | Command::Harness => true,
            Command::Decide(p) => p.needs_monomial(),
            _ => false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SessionInput {
    pub ring: Arc<Ring>,
    pub ideals: BTreeMap<String, IdealDecl>,
    pub elements: BTreeMap<String, Polynomial>,
    /// Ideal the command runs on.
    pub target: String,
    pub command: Command,
}

impl SessionInput {
    pub fn target(&self) -> &IdealDecl {
        &self.ideals[&self.target]
    }
}

pub fn parse_input(text: &str) -> Result<SessionInput, ParseError> {
    Parser::new(text).run()
}

/// One statement: its text and the byte offset where it starts.
struct Stmt<'a> {
    text: &'a str,
    base: usize,
}

/// `text` with comments blanked out, so offsets are unchanged.
fn strip_comments(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut comment = false;
    for c in text.chars() {
        match c {
            '\n' => {
                comment = false;
                out.push(c);
            }
            '#' => {
                comment = true;
                out.push(' ');
            }
            _ if comment => out.extend(std::iter::repeat_n(' ', c.len_utf8())),
            _ => out.push(c),
        }
    }
    out
}

fn split_statements(text: &str) -> Vec<Stmt<'_>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut push = |from: usize, to: usize| {
        let s = &text[from..to];
        let (lead, t) = ltrim(s);
        let t = t.trim_end();
        if !t.is_empty() {
            out.push(Stmt { text: t, base: from + lead });
        }
    };
    for (i, c) in text.bytes().enumerate() {
        match c {
            b'(' | b'[' => depth += 1,
            b')' | b']' => depth -= 1,
            b'\n' | b';' if depth <= 0 => {
                push(start, i);
                start = i + 1;
                depth = 0;
            }
            _ => {}
        }
    }
    push(start, text.len());
    out
}

struct Parser<'a> {
    text: &'a str,
    line_starts: Vec<usize>,
    ring: Option<Arc<Ring>>,
    ideals: BTreeMap<String, IdealDecl>,
    elements: BTreeMap<String, Polynomial>,
    command: Option<(String, String, Command)>,
}

fn is_ident(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

/// Splits at top-level occurrences of any of `seps`, returning pieces with
/// their offsets relative to `s`.
fn split_top<'s>(s: &'s str, seps: &[u8]) -> Vec<(usize, &'s str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.bytes().enumerate() {
        match c {
            b'(' | b'[' => depth += 1,
            b')' | b']' => depth -= 1,
            _ if depth == 0 && seps.contains(&c) => {
                out.push((start, &s[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, &s[start..]));
    out
}

/// Offset of the parenthesis closing the one at `open`.
fn matching_paren(s: &str, open: usize) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in s.bytes().enumerate().skip(open) {
        match c {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

/// `s` with leading whitespace removed and how much was removed.
fn ltrim(s: &str) -> (usize, &str) {
    let t = s.trim_start();
    (s.len() - t.len(), t)
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        let mut line_starts = vec![0];
        line_starts.extend(text.match_indices('\n').map(|(i, _)| i + 1));
        Parser { text, line_starts, ring: None, ideals: BTreeMap::new(), elements: BTreeMap::new(), command: None }
    }

    fn error(&self, offset: usize, message: impl Into<String>) -> ParseError {
        let line = self.line_starts.partition_point(|&s| s <= offset);
        let start = self.line_starts[line - 1];
        let col = self.text[start..offset.min(self.text.len())].chars().count() + 1;
        ParseError { line, col, message: message.into() }
    }

    fn run(mut self) -> Result<SessionInput, ParseError> {
        let code = strip_comments(self.text);
        for stmt in split_statements(&code) {
            if let Some((name, _, _)) = &self.command {
                return Err(self.error(stmt.base, format!("statement after the `{name}` command; one command per file")));
            }
            self.statement(&stmt)?;
        }
        let end = self.text.trim_end().len();
        let ring = self.ring.clone().ok_or_else(|| self.error(end, "missing `ring Q[...]` declaration"))?;
        let (_, target, command) = self.command.take().ok_or_else(|| self.error(end, "missing command"))?;
        Ok(SessionInput { ring, ideals: self.ideals, elements: self.elements, target, command })
    }

    fn statement(&mut self, stmt: &Stmt<'_>) -> Result<(), ParseError> {
        let (kw, rest) = stmt.text.split_once(char::is_whitespace).unwrap_or((stmt.text, ""));
        let (lead, rest) = ltrim(rest);
        let rest_base = stmt.base + kw.len() + 1 + lead;
        match kw {
            "ring" => self.ring_decl(rest, rest_base, stmt.base),
            "ideal" => self.ideal_decl(rest, rest_base),
            "element" => self.element_decl(rest, rest_base),
            "profile" | "classify" | "check-seq" | "find-seq" | "decide" | "invariants" | "harness" => {
                self.command(kw, rest, rest_base, stmt.base)
            }
            _ => Err(self.error(stmt.base, format!("unknown statement `{kw}`"))),
        }
    }

    fn ring_decl(&mut self, rest: &str, base: usize, kw_base: usize) -> Result<(), ParseError> {
        if self.ring.is_some() {
            return Err(self.error(kw_base, "ring declared twice"));
        }
        let inner = rest
            .strip_prefix("Q[")
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| self.error(base, format!("expected `Q[v1,...,vn]`, found `{rest}`")))?;
        let mut names = Vec::new();
        for (off, piece) in split_top(inner, b",") {
            let (lead, name) = ltrim(piece);
            let name = name.trim_end();
            if !is_ident(name) {
                return Err(self.error(base + 2 + off + lead, format!("bad variable name `{name}`")));
            }
            names.push(name.to_string());
        }
        let ring = Ring::new(&names).map_err(|e| self.error(base, e.to_string()))?;
        self.ring = Some(ring);
        Ok(())
    }

    fn need_ring(&self, rhs: &str, base: usize) -> Result<Arc<Ring>, ParseError> {
        if let Some(r) = &self.ring {
            return Ok(r.clone());
        }
        // point at the first identifier the missing ring would declare
        let mut i = 0;
        let bytes = rhs.as_bytes();
        while i < bytes.len() {
            if bytes[i].is_ascii_alphabetic() {
                let end = rhs[i..].find(|c: char| !(c.is_ascii_alphanumeric() || c == '_')).map_or(rhs.len(), |e| i + e);
                let word = &rhs[i..end];
                if word != "intersect" && !self.ideals.contains_key(word) {
                    return Err(self.error(base + i, format!("undeclared name `{word}`: no ring declared")));
                }
                i = end;
            } else {
                i += 1;
            }
        }
        Err(self.error(base, "no ring declared"))
    }

    fn name_and_rhs<'s>(&self, rest: &'s str, base: usize, what: &str) -> Result<(&'s str, &'s str, usize), ParseError> {
        let (name, rhs) = rest.split_once('=').ok_or_else(|| self.error(base, format!("expected `{what} NAME = ...`")))?;
        let name = name.trim();
        if !is_ident(name) {
            return Err(self.error(base, format!("bad {what} name `{name}`")));
        }
        if self.ideals.contains_key(name) || self.elements.contains_key(name) {
            return Err(self.error(base, format!("`{name}` declared twice")));
        }
        if self.ring.as_ref().is_some_and(|r| r.index_of(name).is_some()) {
            return Err(self.error(base, format!("`{name}` is a ring variable")));
        }
        let (lead, rhs) = ltrim(rhs);
        let rhs_base = base + (rest.len() - rest[rest.find('=').unwrap() + 1..].len()) + lead;
        if rhs.is_empty() {
            return Err(self.error(rhs_base, format!("empty right-hand side for `{name}`")));
        }
        Ok((name, rhs, rhs_base))
    }

    fn ideal_decl(&mut self, rest: &str, base: usize) -> Result<(), ParseError> {
        let (name, rhs, rhs_base) = self.name_and_rhs(rest, base, "ideal")?;
        let ring = self.need_ring(rhs, rhs_base)?;
        let (generators, monomial) = self.ideal_expr(&ring, rhs, rhs_base)?;
        self.ideals.insert(name.to_string(), IdealDecl { name: name.to_string(), generators, monomial });
        Ok(())
    }

    fn element_decl(&mut self, rest: &str, base: usize) -> Result<(), ParseError> {
        let (name, rhs, rhs_base) = self.name_and_rhs(rest, base, "element")?;
        let ring = self.need_ring(rhs, rhs_base)?;
        let f = self.element(&ring, rhs, rhs_base)?;
        self.elements.insert(name.to_string(), f);
        Ok(())
    }

    fn poly(&self, ring: &Arc<Ring>, s: &str, base: usize) -> Result<Polynomial, ParseError> {
        Polynomial::parse(ring, s).map_err(|e| match e {
            EngineError::Parse { offset, message } => self.error(base + offset, message),
            other => self.error(base, other.to_string()),
        })
    }

    /// An element: a declared element name or a homogeneous polynomial of
    /// positive degree.
    fn element(&self, ring: &Arc<Ring>, s: &str, base: usize) -> Result<Polynomial, ParseError> {
        let (lead, t) = ltrim(s);
        let t = t.trim_end();
        let base = base + lead;
        if t.is_empty() {
            return Err(self.error(base, "missing element"));
        }
        if is_ident(t) && ring.index_of(t).is_none() {
            return self
                .elements
                .get(t)
                .cloned()
                .ok_or_else(|| self.error(base, format!("undeclared name `{t}`")));
        }
        let f = self.poly(ring, t, base)?;
        if !f.is_homogeneous() {
            return Err(self.error(base, format!("element `{t}` is not homogeneous")));
        }
        if f.degree().is_none_or(|d| d == 0) {
            return Err(self.error(base, format!("element `{t}` has degree zero")));
        }
        Ok(f)
    }

    fn ideal_expr(
        &self,
        ring: &Arc<Ring>,
        s: &str,
        base: usize,
    ) -> Result<(Vec<Polynomial>, Option<MonomialIdeal>), ParseError> {
        let mut gens = Vec::new();
        let mut all_monomial = true;
        let mut sum: Option<MonomialIdeal> = None;
        for (off, piece) in split_top(s, b"+") {
            let (lead, t) = ltrim(piece);
            let t = t.trim_end();
            let tb = base + off + lead;
            if t.is_empty() {
                return Err(self.error(tb, "missing ideal"));
            }
            let (g, m) = self.ideal_term(ring, t, tb)?;
            gens.extend(g);
            match (m, sum.take()) {
                (Some(m), Some(acc)) => sum = Some(acc.sum(&m)),
                (Some(m), None) if all_monomial => sum = Some(m),
                _ => all_monomial = false,
            }
        }
        let monomial = if all_monomial { sum } else { MonomialIdeal::from_polynomials(ring, &gens).ok() };
        Ok((gens, monomial))
    }

    fn ideal_term(
        &self,
        ring: &Arc<Ring>,
        t: &str,
        base: usize,
    ) -> Result<(Vec<Polynomial>, Option<MonomialIdeal>), ParseError> {
        if let Some(args) = t.strip_prefix("intersect") {
            let (lead, args) = ltrim(args);
            let ab = base + "intersect".len() + lead;
            if !args.starts_with('(') || matching_paren(args, 0) != Some(args.len() - 1) {
                return Err(self.error(ab, "expected `intersect(IDEAL; IDEAL; ...)`"));
            }
            let inner = &args[1..args.len() - 1];
            let mut parts = Vec::new();
            for (off, piece) in split_top(inner, b";,") {
                let (lead, p) = ltrim(piece);
                let pb = ab + 1 + off + lead;
                let (_, m) = self.ideal_expr(ring, p.trim_end(), pb)?;
                let m = m.ok_or_else(|| self.error(pb, format!("`{}` is not a monomial ideal; intersect needs monomial ideals", p.trim_end())))?;
                parts.push(m);
            }
            let m = seqcm_core::monomial::monomial_intersect(ring, &parts);
            return Ok((m.to_polynomials(), Some(m)));
        }
        if t.starts_with('(') {
            if matching_paren(t, 0) != Some(t.len() - 1) {
                return Err(self.error(base, "unbalanced parentheses"));
            }
            let inner = &t[1..t.len() - 1];
            let mut gens = Vec::new();
            if !inner.trim().is_empty() {
                for (off, piece) in split_top(inner, b",") {
                    let (lead, p) = ltrim(piece);
                    let pb = base + 1 + off + lead;
                    if p.trim().is_empty() {
                        return Err(self.error(pb, "empty generator"));
                    }
                    gens.push(self.poly(ring, p.trim_end(), pb)?);
                }
            }
            let monomial = match MonomialIdeal::from_polynomials(ring, &gens) {
                Ok(m) => Some(m),
                Err(EngineError::NotMonomial(_)) => None,
                Err(e) => return Err(self.error(base, e.to_string())),
            };
            return Ok((gens, monomial));
        }
        if is_ident(t) {
            return self
                .ideals
                .get(t)
                .map(|d| (d.generators.clone(), d.monomial.clone()))
                .ok_or_else(|| self.error(base, format!("undeclared name `{t}`")));
        }
        Err(self.error(base, format!("expected an ideal, found `{t}`")))
    }

    fn ideal_ref<'s>(&self, rest: &'s str, base: usize) -> Result<(&'s str, &'s str, usize), ParseError> {
        let (name, tail) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
        if name.is_empty() {
            return Err(self.error(base, "missing ideal name"));
        }
        if !self.ideals.contains_key(name) {
            return Err(self.error(base, format!("undeclared name `{name}`")));
        }
        let (lead, tail) = ltrim(tail);
        Ok((name, tail, base + name.len() + 1 + lead))
    }

    fn kind(&self, s: &str, base: usize) -> Result<SequenceKind, ParseError> {
        s.parse::<SequenceKind>().map_err(|_| {
            let names: Vec<&str> = SequenceKind::ALL.iter().map(|k| k.name()).collect();
            self.error(base, format!("unknown sequence kind `{s}`; expected one of {}", names.join(", ")))
        })
    }

    fn command(&mut self, kw: &str, rest: &str, base: usize, kw_base: usize) -> Result<(), ParseError> {
        let ring = self.ring.clone().ok_or_else(|| self.error(kw_base, format!("`{kw}` before any ring declaration")))?;
        let (target, command, target_base) = match kw {
            "decide" => {
                let (prop, tail) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                let p = Property::parse(prop)
                    .ok_or_else(|| self.error(base, format!("unknown property `{prop}`; expected cm, gcm, scm or sgcm")))?;
                let (lead, tail) = ltrim(tail);
                let tb = base + prop.len() + 1 + lead;
                let (name, extra, eb) = self.ideal_ref(tail, tb)?;
                self.no_extra(extra, eb)?;
                (name, Command::Decide(p), tb)
            }
            _ => {
                let (name, tail, tb) = self.ideal_ref(rest, base)?;
                let command = match kw {
                    "profile" | "invariants" | "harness" => {
                        self.no_extra(tail, tb)?;
                        match kw {
                            "profile" => Command::Profile,
                            "invariants" => Command::Invariants,
                            _ => Command::Harness,
                        }
                    }
                    "classify" => Command::Classify(self.element(&ring, tail, tb)?),
                    "check-seq" => {
                        let (k, list) = tail.split_once(char::is_whitespace).unwrap_or((tail, ""));
                        let kind = self.kind(k, tb)?;
                        let (lead, list) = ltrim(list);
                        let lb = tb + k.len() + 1 + lead;
                        let mut fs = Vec::new();
                        if !list.is_empty() {
                            for (off, piece) in split_top(list, b",") {
                                fs.push(self.element(&ring, piece, lb + off)?);
                            }
                        }
                        Command::CheckSeq(kind, fs)
                    }
                    _ => {
                        let (k, n) = tail.split_once(char::is_whitespace).unwrap_or((tail, ""));
                        let kind = self.kind(k, tb)?;
                        let (lead, n) = ltrim(n);
                        let nb = tb + k.len() + 1 + lead;
                        let length = n
                            .trim_end()
                            .parse::<usize>()
                            .map_err(|_| self.error(nb, format!("expected a sequence length, found `{}`", n.trim_end())))?;
                        Command::FindSeq(kind, length)
                    }
                };
                (name, command, base)
            }
        };
        if command.needs_monomial() && self.ideals[target].monomial.is_none() {
            return Err(self.error(target_base, format!("ideal `{target}` is not monomial; `{kw}` needs a monomial ideal")));
        }
        self.command = Some((kw.to_string(), target.to_string(), command));
        Ok(())
    }

    fn no_extra(&self, s: &str, base: usize) -> Result<(), ParseError> {
        if s.trim().is_empty() {
            Ok(())
        } else {
            Err(self.error(base, format!("unexpected `{}`", s.trim())))
        }
    }
}
