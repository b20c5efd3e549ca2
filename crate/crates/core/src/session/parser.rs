//! Line-oriented session files.
//!
//! ```text
//! version 1
//! ring q[x,y]                  # or ring f<101>[x,y]
//! ideal I = x^2, x*y, y^2
//! poly u = x*y
//! family F(m) = x^(m+1), x^m*y
//! task rees I J nrange=1..6
//! ```

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, ParseError, Result};
use crate::groebner::Ideal;
use crate::ring::{CoefficientField, Polynomial, Ring, RingDescriptor};

use super::expr::{parse_list, parse_list_with, parse_one, Span};

/// Version of the session grammar accepted and emitted.
pub const SESSION_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TaskKind {
    Length,
    Rees,
    Reduction,
    Spread,
    Grade,
    Dseq,
    Radcolon,
    Mult,
    Filtration,
    Verify,
}

impl TaskKind {
    pub const ALL: [TaskKind; 10] = [
        TaskKind::Length,
        TaskKind::Rees,
        TaskKind::Reduction,
        TaskKind::Spread,
        TaskKind::Grade,
        TaskKind::Dseq,
        TaskKind::Radcolon,
        TaskKind::Mult,
        TaskKind::Filtration,
        TaskKind::Verify,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TaskKind::Length => "length",
            TaskKind::Rees => "rees",
            TaskKind::Reduction => "reduction",
            TaskKind::Spread => "spread",
            TaskKind::Grade => "grade",
            TaskKind::Dseq => "dseq",
            TaskKind::Radcolon => "radcolon",
            TaskKind::Mult => "mult",
            TaskKind::Filtration => "filtration",
            TaskKind::Verify => "verify",
        }
    }

    fn from_name(s: &str) -> Option<TaskKind> {
        TaskKind::ALL.into_iter().find(|k| k.name() == s)
    }

    fn allowed_options(self) -> &'static [&'static str] {
        match self {
            TaskKind::Length => &["krange"],
            TaskKind::Rees => &["nrange", "window", "nmax"],
            TaskKind::Reduction => &["nmax", "nrange"],
            TaskKind::Spread | TaskKind::Grade | TaskKind::Dseq => &[],
            TaskKind::Radcolon => &["nmax"],
            TaskKind::Mult => &["nrange", "nmax", "nstab", "window"],
            TaskKind::Filtration => &["weights", "mrange", "levels", "d", "nmax"],
            TaskKind::Verify => &["nrange", "nmax"],
        }
    }
}

impl fmt::Display for TaskKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Typed task options; unset options take per-task defaults at run time.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TaskOptions {
    pub nmax: Option<u32>,
    pub nrange: Option<(u32, u32)>,
    pub krange: Option<(u32, u32)>,
    pub mrange: Option<(u32, u32)>,
    pub window: Option<usize>,
    pub d: Option<u32>,
    pub weights: Option<Vec<u32>>,
    pub levels: Option<u32>,
    pub nstab: Option<u32>,
}

impl TaskOptions {
    fn render(&self) -> Vec<String> {
        let range = |k: &str, r: &Option<(u32, u32)>| r.map(|(a, b)| format!("{k}={a}..{b}"));
        let mut out = Vec::new();
        out.extend(self.nmax.map(|v| format!("nmax={v}")));
        out.extend(range("nrange", &self.nrange));
        out.extend(range("krange", &self.krange));
        out.extend(range("mrange", &self.mrange));
        out.extend(self.window.map(|v| format!("window={v}")));
        out.extend(self.d.map(|v| format!("d={v}")));
        if let Some(w) = &self.weights {
            out.push(format!("weights={}", w.iter().map(u32::to_string).collect::<Vec<_>>().join(",")));
        }
        out.extend(self.levels.map(|v| format!("levels={v}")));
        out.extend(self.nstab.map(|v| format!("nstab={v}")));
        out
    }
}

#[derive(Clone, Debug)]
pub struct Task {
    pub kind: TaskKind,
    pub args: Vec<String>,
    pub options: TaskOptions,
    /// 1-based source line; not part of equality.
    pub line: usize,
}

impl PartialEq for Task {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.args == other.args && self.options == other.options
    }
}

/// An ideal family `F(m)` given by a template in one integer parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    pub param: String,
    pub template: String,
}

impl Family {
    /// The ideal at parameter value `m`.
    pub fn at(&self, ring: &Ring, m: i64) -> Result<Ideal> {
        let params = [(self.param.clone(), m)];
        let span = Span { line: 1, offset: 0, source: &self.template };
        let gens = parse_list_with(ring, &self.template, span, &params).map_err(Error::Parse)?;
        Ideal::new(ring, gens)
    }
}

#[derive(Clone, Debug)]
pub enum Binding {
    Ideal(Ideal),
    Poly(Polynomial),
    Family(Family),
}

impl PartialEq for Binding {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Binding::Ideal(a), Binding::Ideal(b)) => a.generators() == b.generators(),
            (Binding::Poly(a), Binding::Poly(b)) => a == b,
            (Binding::Family(a), Binding::Family(b)) => a == b,
            _ => false,
        }
    }
}

impl Binding {
    fn keyword(&self) -> &'static str {
        match self {
            Binding::Ideal(_) => "ideal",
            Binding::Poly(_) => "poly",
            Binding::Family(_) => "family",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Session {
    pub ring: Ring,
    /// Bindings in declaration order.
    pub bindings: Vec<(String, Binding)>,
    pub tasks: Vec<Task>,
}

impl Session {
    pub fn binding(&self, name: &str) -> Option<&Binding> {
        self.bindings.iter().find(|(n, _)| n == name).map(|(_, b)| b)
    }

    pub fn ideal(&self, name: &str) -> Result<&Ideal> {
        match self.binding(name) {
            Some(Binding::Ideal(i)) => Ok(i),
            Some(b) => Err(Error::invalid(format!("'{name}' is a {}, not an ideal", b.keyword()))),
            None => Err(Error::invalid(format!("unbound name '{name}'"))),
        }
    }

    pub fn family(&self, name: &str) -> Result<&Family> {
        match self.binding(name) {
            Some(Binding::Family(f)) => Ok(f),
            Some(b) => Err(Error::invalid(format!("'{name}' is a {}, not a family", b.keyword()))),
            None => Err(Error::invalid(format!("unbound name '{name}'"))),
        }
    }

    /// Canonical text; parsing it yields an equal session.
    pub fn to_canonical_string(&self) -> String {
        let mut out = format!("version {SESSION_VERSION}\n{}\n", self.ring.session_header());
        for (name, b) in &self.bindings {
            match b {
                Binding::Ideal(i) => out.push_str(&format!("ideal {name} = {}\n", i.generators_string())),
                Binding::Poly(p) => out.push_str(&format!("poly {name} = {p}\n")),
                Binding::Family(f) => out.push_str(&format!("family {name}({}) = {}\n", f.param, f.template)),
            }
        }
        for t in &self.tasks {
            let mut parts = vec!["task".to_string(), t.kind.name().to_string()];
            parts.extend(t.args.iter().cloned());
            parts.extend(t.options.render());
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        out
    }
}

struct Line<'a> {
    number: usize,
    source: &'a str,
}

impl<'a> Line<'a> {
    fn err(&self, byte: usize, msg: impl Into<String>) -> Error {
        Error::Parse(ParseError {
            line: self.number,
            column: self.source[..byte.min(self.source.len())].chars().count() + 1,
            message: msg.into(),
            source_line: self.source.to_string(),
        })
    }

    fn span(&self, byte: usize) -> Span<'a> {
        Span { line: self.number, offset: self.source[..byte].chars().count(), source: self.source }
    }
}

/// Whitespace-separated words with their byte offsets.
fn words(s: &str, base: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(b)) => {
                out.push((base + b, &s[b..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(b) = start {
        out.push((base + b, &s[b..]));
    }
    out
}

fn valid_name(s: &str) -> bool {
    let mut cs = s.chars();
    cs.next().is_some_and(|c| c.is_ascii_alphabetic()) && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_ring(line: &Line<'_>, at: usize, text: &str) -> Result<Ring> {
    let open = text.find('[').ok_or_else(|| line.err(at + text.len(), "expected '[' after the field"))?;
    if !text.ends_with(']') {
        return Err(line.err(at + text.len(), "expected ']' closing the variable list"));
    }
    let field_text = &text[..open];
    let field = if field_text == "q" || field_text == "QQ" {
        CoefficientField::Rationals
    } else if let Some(p) = field_text.strip_prefix("f<").and_then(|r| r.strip_suffix('>')) {
        let p: u64 = p.parse().map_err(|_| line.err(at + 2, format!("invalid characteristic '{p}'")))?;
        CoefficientField::prime_field(p).map_err(|e| line.err(at + 2, e.to_string()))?
    } else {
        return Err(line.err(at, format!("unknown field '{field_text}'; expected q or f<p>")));
    };
    let inner = &text[open + 1..text.len() - 1];
    let vars: Vec<&str> = inner.split(',').map(str::trim).collect();
    RingDescriptor::new(vars, field).map_err(|e| line.err(at + open + 1, e.to_string()))
}

fn parse_u32(line: &Line<'_>, at: usize, s: &str) -> Result<u32> {
    s.parse().map_err(|_| line.err(at, format!("expected a nonnegative integer, found '{s}'")))
}

fn parse_range(line: &Line<'_>, at: usize, s: &str) -> Result<(u32, u32)> {
    let (a, b) = s.split_once("..").ok_or_else(|| line.err(at, format!("expected a range a..b, found '{s}'")))?;
    let a = parse_u32(line, at, a)?;
    let b = parse_u32(line, at + s.find("..").unwrap() + 2, b)?;
    if a < 1 || b < a {
        return Err(line.err(at, format!("range {a}..{b} must satisfy 1 ≤ a ≤ b")));
    }
    if b > 200 {
        return Err(line.err(at, "range end exceeds 200"));
    }
    Ok((a, b))
}

fn parse_option(line: &Line<'_>, at: usize, word: &str, kind: TaskKind, opts: &mut TaskOptions) -> Result<()> {
    let (key, value) = word.split_once('=').unwrap();
    if !kind.allowed_options().contains(&key) {
        return Err(line.err(
            at,
            format!("option '{key}' is not accepted by task {kind}; allowed: {}", kind.allowed_options().join(", ")),
        ));
    }
    let vat = at + key.len() + 1;
    match key {
        "nmax" => opts.nmax = Some(parse_u32(line, vat, value)?),
        "nrange" => opts.nrange = Some(parse_range(line, vat, value)?),
        "krange" => opts.krange = Some(parse_range(line, vat, value)?),
        "mrange" => opts.mrange = Some(parse_range(line, vat, value)?),
        "window" => {
            let w = parse_u32(line, vat, value)?;
            if w < 3 {
                return Err(line.err(vat, "window must be at least 3"));
            }
            opts.window = Some(w as usize);
        }
        "d" => opts.d = Some(parse_u32(line, vat, value)?),
        "levels" => {
            let l = parse_u32(line, vat, value)?;
            if !(1..=200).contains(&l) {
                return Err(line.err(vat, "levels must lie in 1..=200"));
            }
            opts.levels = Some(l);
        }
        "nstab" => {
            let v = parse_u32(line, vat, value)?;
            if v < 2 {
                return Err(line.err(vat, "nstab must be at least 2"));
            }
            opts.nstab = Some(v);
        }
        "weights" => {
            let ws = value
                .split(',')
                .map(|w| parse_u32(line, vat, w))
                .collect::<Result<Vec<_>>>()?;
            if ws.contains(&0) {
                return Err(line.err(vat, "weights must be positive"));
            }
            opts.weights = Some(ws);
        }
        _ => unreachable!(),
    }
    Ok(())
}

fn expect_kinds(
    line: &Line<'_>,
    kind: TaskKind,
    args: &[(usize, &str)],
    bindings: &HashMap<String, &'static str>,
) -> Result<()> {
    let first_at = args.first().map(|a| a.0).unwrap_or(line.source.len());
    let (min, max, want, named) = match kind {
        TaskKind::Length => (1, 2, "ideal", &args[..]),
        TaskKind::Rees | TaskKind::Reduction | TaskKind::Radcolon | TaskKind::Mult | TaskKind::Verify => {
            (2, 2, "ideal", &args[..])
        }
        TaskKind::Spread | TaskKind::Grade => (1, 1, "ideal", &args[..]),
        TaskKind::Dseq => {
            let want = if args.len() == 1 && bindings.get(args[0].1) == Some(&"ideal") { "ideal" } else { "poly" };
            (1, usize::MAX, want, &args[..])
        }
        TaskKind::Filtration => match args.first().map(|a| a.1) {
            Some("power") => {
                if args.len() < 3 || args.len() % 2 == 0 {
                    return Err(line.err(first_at, "power filtration needs pairs: power I1 J1 [I2 J2 ...]"));
                }
                (3, usize::MAX, "ideal", &args[1..])
            }
            Some("explicit") => (3, 3, "family", &args[1..]),
            Some(other) => {
                return Err(line.err(first_at, format!("filtration mode must be power or explicit, found '{other}'")))
            }
            None => return Err(line.err(first_at, "filtration needs a mode: power or explicit")),
        },
    };
    if args.len() < min || args.len() > max {
        let count = match (min, max) {
            (a, b) if a == b => format!("{a}"),
            (a, usize::MAX) => format!("at least {a}"),
            (a, b) => format!("{a} to {b}"),
        };
        return Err(line.err(first_at, format!("task {kind} takes {count} argument(s), got {}", args.len())));
    }
    for &(at, name) in named {
        match bindings.get(name) {
            None => return Err(line.err(at, format!("unbound name '{name}'"))),
            Some(&b) if b != want => {
                return Err(line.err(at, format!("'{name}' is a {b}; task {kind} expects a {want} here")));
            }
            _ => {}
        }
    }
    Ok(())
}

/// Parses a session file.
pub fn parse_session(text: &str) -> Result<Session> {
    let mut ring: Option<Ring> = None;
    let mut bindings: Vec<(String, Binding)> = Vec::new();
    let mut kinds: HashMap<String, &'static str> = HashMap::new();
    let mut tasks = Vec::new();
    let mut seen_version = false;
    for (k, raw) in text.lines().enumerate() {
        let line = Line { number: k + 1, source: raw };
        let content = raw.find('#').map_or(raw, |h| &raw[..h]);
        let ws = words(content, 0);
        let Some(&(kw_at, keyword)) = ws.first() else { continue };
        match keyword {
            "version" => {
                if seen_version || ring.is_some() || !bindings.is_empty() || !tasks.is_empty() {
                    return Err(line.err(kw_at, "version must be the first statement"));
                }
                let Some(&(at, v)) = ws.get(1) else {
                    return Err(line.err(content.len(), "expected a version number"));
                };
                if parse_u32(&line, at, v)? != SESSION_VERSION || ws.len() > 2 {
                    return Err(line.err(at, format!("unsupported session version '{v}'; this tool reads version {SESSION_VERSION}")));
                }
                seen_version = true;
            }
            "ring" => {
                if ring.is_some() {
                    return Err(line.err(kw_at, "ring is already declared"));
                }
                let rest = content[kw_at + 4..].trim();
                if rest.is_empty() {
                    return Err(line.err(content.len(), "expected a ring such as q[x,y]"));
                }
                let at = kw_at + 4 + content[kw_at + 4..].find(rest).unwrap();
                let compact: String = rest.chars().filter(|c| !c.is_whitespace()).collect();
                ring = Some(parse_ring(&line, at, &compact)?);
            }
            "ideal" | "poly" | "family" => {
                let r = ring.as_ref().ok_or_else(|| line.err(kw_at, "declare the ring first"))?;
                let eq = content.find('=').ok_or_else(|| line.err(content.len(), "expected '='"))?;
                let head = content[kw_at + keyword.len()..eq].trim();
                let head_at = kw_at + keyword.len() + content[kw_at + keyword.len()..eq].find(head).unwrap_or(0);
                let (name, param) = if keyword == "family" {
                    let (n, rest) = head
                        .split_once('(')
                        .ok_or_else(|| line.err(head_at + head.len(), "expected NAME(param)"))?;
                    let p = rest.strip_suffix(')').ok_or_else(|| line.err(head_at + head.len(), "expected ')'"))?;
                    (n.trim(), Some(p.trim()))
                } else {
                    (head, None)
                };
                if !valid_name(name) {
                    return Err(line.err(head_at, format!("invalid name '{name}'")));
                }
                if r.var_index(name).is_some() {
                    return Err(line.err(head_at, format!("'{name}' is a ring variable")));
                }
                if kinds.contains_key(name) {
                    return Err(line.err(head_at, format!("duplicate name '{name}'")));
                }
                let body = &content[eq + 1..];
                let body_at = eq + 1 + (body.len() - body.trim_start().len());
                let body = body.trim();
                if body.is_empty() {
                    return Err(line.err(content.len(), "expected an expression"));
                }
                let binding = match param {
                    None if keyword == "ideal" => {
                        let gens = parse_list(r, body, line.span(body_at)).map_err(Error::Parse)?;
                        Binding::Ideal(Ideal::new(r, gens)?)
                    }
                    None => Binding::Poly(parse_one(r, body, line.span(body_at)).map_err(Error::Parse)?),
                    Some(p) => {
                        if !valid_name(p) || r.var_index(p).is_some() {
                            return Err(line.err(head_at, format!("invalid family parameter '{p}'")));
                        }
                        // instantiate once so errors point into this line
                        let params = [(p.to_string(), 1)];
                        parse_list_with(r, body, line.span(body_at), &params).map_err(Error::Parse)?;
                        Binding::Family(Family { param: p.to_string(), template: body.to_string() })
                    }
                };
                kinds.insert(name.to_string(), binding.keyword());
                bindings.push((name.to_string(), binding));
            }
            "task" => {
                if ring.is_none() {
                    return Err(line.err(kw_at, "declare the ring first"));
                }
                let Some(&(kind_at, kind_name)) = ws.get(1) else {
                    return Err(line.err(content.len(), "expected a task kind"));
                };
                let kind = TaskKind::from_name(kind_name).ok_or_else(|| {
                    let all: Vec<&str> = TaskKind::ALL.iter().map(|k| k.name()).collect();
                    line.err(kind_at, format!("unknown task '{kind_name}'; expected one of {}", all.join(", ")))
                })?;
                let mut args = Vec::new();
                let mut options = TaskOptions::default();
                for &(at, w) in &ws[2..] {
                    if w.contains('=') {
                        parse_option(&line, at, w, kind, &mut options)?;
                    } else {
                        args.push((at, w));
                    }
                }
                expect_kinds(&line, kind, &args, &kinds)?;
                tasks.push(Task {
                    kind,
                    args: args.iter().map(|a| a.1.to_string()).collect(),
                    options,
                    line: line.number,
                });
            }
            other => {
                return Err(line.err(
                    kw_at,
                    format!("unknown statement '{other}'; expected version, ring, ideal, poly, family or task"),
                ));
            }
        }
    }
    let ring = ring.ok_or_else(|| {
        Error::Parse(ParseError {
            line: text.lines().count().max(1),
            column: 1,
            message: "missing ring declaration".into(),
            source_line: String::new(),
        })
    })?;
    Ok(Session { ring, bindings, tasks })
}
