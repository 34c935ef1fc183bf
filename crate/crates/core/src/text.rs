//! Text forms of rings, elements and problem files.
//!
//! Problem files are line oriented; `#` starts a comment.
//!
//! ```text
//! ring ZZ/2 x ZZ/4 x ZZ/8
//! vars X Y
//! order lex
//! rank 2
//! module_order pot
//! gen (0,2,1)*X*Y^2*e2 + (0,1,0)*e2
//! ```
//!
//! `ring` and `vars` are required; `order` defaults to `lex`, `rank` to 1 and
//! `module_order` to `pot`. Variable precedence follows declaration order.
//! A term is `[coeff][*var[^exp]]...[*e<k>]` with terms joined by `+` or `-`.
//! A coefficient is an integer (embedded diagonally) or a tuple `(a,b,...)`
//! with one entry per ring component. The basis marker may be omitted when
//! the rank is 1.

use std::fmt;

use crate::coeff::{RingElement, RingSpec};
use crate::order::{ModuleOrder, MonomialOrder, MonomialOrderKind};
use crate::poly::{FreeModule, ModuleElement, Monomial, Term};
use crate::scalar::Int;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ErrorCode {
    Syntax,
    UnknownVariable,
    BasisOutOfRange,
    ArityMismatch,
    ZeroGenerator,
    UnknownDirective,
    DuplicateDirective,
    MissingDirective,
    MissingBasisMarker,
    InvalidRing,
}

impl ErrorCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorCode::Syntax => "syntax",
            ErrorCode::UnknownVariable => "unknown-variable",
            ErrorCode::BasisOutOfRange => "basis-out-of-range",
            ErrorCode::ArityMismatch => "arity-mismatch",
            ErrorCode::ZeroGenerator => "zero-generator",
            ErrorCode::UnknownDirective => "unknown-directive",
            ErrorCode::DuplicateDirective => "duplicate-directive",
            ErrorCode::MissingDirective => "missing-directive",
            ErrorCode::MissingBasisMarker => "missing-basis-marker",
            ErrorCode::InvalidRing => "invalid-ring",
        }
    }
}

/// A diagnostic with a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub code: ErrorCode,
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub expected: Option<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}: error[{}]: {}",
            self.line,
            self.column,
            self.code.as_str(),
            self.message
        )?;
        if let Some(e) = &self.expected {
            write!(f, " (expected {e})")?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = std::result::Result<T, ParseError>;

fn err(code: ErrorCode, line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        code,
        line,
        column,
        message: message.into(),
        expected: None,
    }
}

fn expected(line: usize, column: usize, found: &str, what: &str) -> ParseError {
    ParseError {
        code: ErrorCode::Syntax,
        line,
        column,
        message: format!("unexpected {found}"),
        expected: Some(what.to_string()),
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Character cursor that knows its position in the source file.
struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col0: usize,
}

impl Cursor {
    fn new(src: &str, line: usize, col0: usize) -> Self {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
            line,
            col0,
        }
    }

    fn column(&self) -> usize {
        self.col0 + self.pos + 1
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn describe(&self) -> String {
        match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".into(),
        }
    }

    fn fail(&self, what: &str) -> ParseError {
        expected(self.line, self.column(), &self.describe(), what)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn integer<I: Int>(&mut self) -> PResult<I> {
        let col = self.column();
        let neg = self.eat('-');
        let Some(d) = self.digits() else {
            return Err(self.fail("integer"));
        };
        let v: I = d.parse().map_err(|_| {
            err(
                ErrorCode::Syntax,
                self.line,
                col,
                format!("integer {d} is out of range"),
            )
        })?;
        Ok(if neg { -v } else { v })
    }

    fn ident(&mut self) -> Option<String> {
        if !self.peek().is_some_and(is_ident_start) {
            return None;
        }
        let start = self.pos;
        while self.peek().is_some_and(is_ident_char) {
            self.pos += 1;
        }
        Some(self.chars[start..self.pos].iter().collect())
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }
}

/// Parses `ZZ | ZZ/<N>` components joined by `x`.
pub fn parse_ring<I: Int>(text: &str) -> std::result::Result<RingSpec<I>, ParseError> {
    parse_ring_at(text, 1, 0)
}

fn parse_ring_at<I: Int>(text: &str, line: usize, col0: usize) -> PResult<RingSpec<I>> {
    let mut moduli = Vec::new();
    let mut offset = 0;
    for part in text.split('x') {
        let lead = part.len() - part.trim_start().len();
        let column = col0 + offset + lead + 1;
        let p = part.trim();
        let modulus = if p == "ZZ" {
            I::zero()
        } else if let Some(n) = p.strip_prefix("ZZ/") {
            let n: I = n
                .parse()
                .map_err(|_| err(ErrorCode::InvalidRing, line, column, format!("bad modulus in '{p}'")))?;
            if n < I::from_i64_exact(2) {
                return Err(err(
                    ErrorCode::InvalidRing,
                    line,
                    column,
                    format!("modulus in '{p}' must be at least 2"),
                ));
            }
            n
        } else {
            return Err(ParseError {
                code: ErrorCode::InvalidRing,
                line,
                column,
                message: format!("bad ring component '{p}'"),
                expected: Some("ZZ or ZZ/<N>".into()),
            });
        };
        moduli.push(modulus);
        offset += part.chars().count() + 1;
    }
    RingSpec::new(moduli).map_err(|e| err(ErrorCode::InvalidRing, line, col0 + 1, e.to_string()))
}

/// Parses an element of `module`.
pub fn parse_element<I: Int>(module: &FreeModule<I>, text: &str) -> std::result::Result<ModuleElement<I>, ParseError> {
    parse_element_at(module, text, 1, 0)
}

fn parse_coeff<I: Int>(module: &FreeModule<I>, cur: &mut Cursor) -> PResult<RingElement<I>> {
    let ring = module.ring();
    let col = cur.column();
    if cur.eat('(') {
        let mut comps = Vec::new();
        loop {
            cur.skip_ws();
            comps.push(cur.integer::<I>()?);
            cur.skip_ws();
            if cur.eat(')') {
                break;
            }
            if !cur.eat(',') {
                return Err(cur.fail("',' or ')'"));
            }
        }
        if comps.len() != ring.len() {
            return Err(err(
                ErrorCode::ArityMismatch,
                cur.line,
                col,
                format!("coefficient has {} components, ring has {}", comps.len(), ring.len()),
            ));
        }
        Ok(ring.normalize(comps).expect("arity checked"))
    } else {
        Ok(ring.from_int(cur.integer::<I>()?))
    }
}

fn parse_term<I: Int>(module: &FreeModule<I>, cur: &mut Cursor, negate: bool) -> PResult<Term<I>> {
    let ring = module.ring();
    let term_col = cur.column();
    let mut coeff = None;
    let mut exps = vec![0u32; module.nvars()];
    let mut basis: Option<usize> = None;
    let mut first = true;
    loop {
        cur.skip_ws();
        let col = cur.column();
        match cur.peek() {
            Some(c) if first && (c == '(' || c == '-' || c.is_ascii_digit()) => {
                coeff = Some(parse_coeff(module, cur)?);
            }
            Some(c) if is_ident_start(c) => {
                let name = cur.ident().expect("identifier start");
                if let Some(v) = module.vars().iter().position(|x| *x == name) {
                    let mut e = 1u32;
                    cur.skip_ws();
                    if cur.eat('^') {
                        cur.skip_ws();
                        let ecol = cur.column();
                        let d = cur.digits().ok_or_else(|| cur.fail("exponent"))?;
                        e = d.parse().map_err(|_| {
                            err(
                                ErrorCode::Syntax,
                                cur.line,
                                ecol,
                                format!("exponent {d} is out of range"),
                            )
                        })?;
                    }
                    exps[v] = exps[v]
                        .checked_add(e)
                        .ok_or_else(|| err(ErrorCode::Syntax, cur.line, col, "exponent overflow"))?;
                } else if let Some(k) = basis_index(module.basis_symbol(), &name) {
                    if basis.is_some() {
                        return Err(err(ErrorCode::Syntax, cur.line, col, "second basis marker in one term"));
                    }
                    if k == 0 || k > module.rank() {
                        return Err(err(
                            ErrorCode::BasisOutOfRange,
                            cur.line,
                            col,
                            format!("basis element {name} is outside 1..={}", module.rank()),
                        ));
                    }
                    basis = Some(k - 1);
                } else {
                    return Err(err(
                        ErrorCode::UnknownVariable,
                        cur.line,
                        col,
                        format!("unknown variable '{name}'"),
                    ));
                }
            }
            _ => {
                return Err(cur.fail(if first {
                    "coefficient, variable or basis marker"
                } else {
                    "variable or basis marker"
                }))
            }
        }
        first = false;
        cur.skip_ws();
        if !cur.eat('*') {
            break;
        }
    }
    let basis = match basis {
        Some(b) => b,
        None if module.rank() == 1 => 0,
        None => {
            return Err(err(
                ErrorCode::MissingBasisMarker,
                cur.line,
                term_col,
                format!(
                    "term needs a basis marker {}1..{}{}",
                    module.basis_symbol(),
                    module.basis_symbol(),
                    module.rank()
                ),
            ))
        }
    };
    let mut c = coeff.unwrap_or_else(|| ring.one());
    if negate {
        c = ring.neg(&c);
    }
    Ok(Term::new(c, Monomial::new(exps), basis))
}

fn basis_index(symbol: &str, name: &str) -> Option<usize> {
    let digits = name.strip_prefix(symbol)?;
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    Some(digits.parse().unwrap_or(usize::MAX))
}

fn parse_element_at<I: Int>(module: &FreeModule<I>, text: &str, line: usize, col0: usize) -> PResult<ModuleElement<I>> {
    let mut cur = Cursor::new(text, line, col0);
    let mut terms = Vec::new();
    cur.skip_ws();
    let mut negate = false;
    if cur.peek() == Some('-') && !cur.chars.get(cur.pos + 1).is_some_and(|c| c.is_ascii_digit()) {
        cur.pos += 1;
        negate = true;
    }
    loop {
        terms.push(parse_term(module, &mut cur, negate)?);
        cur.skip_ws();
        if cur.at_end() {
            break;
        }
        negate = if cur.eat('+') {
            false
        } else if cur.eat('-') {
            true
        } else {
            return Err(cur.fail("'+', '-', '*' or end of element"));
        };
    }
    Ok(module.element(terms).expect("terms are built against the module"))
}

/// Renders an element so that [`parse_element`] reads it back identically.
pub fn render_element<I: Int>(module: &FreeModule<I>, f: &ModuleElement<I>) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let ring = module.ring();
    let mut out = String::new();
    for (idx, t) in f.terms().iter().enumerate() {
        let comps = t.coeff.components();
        let negative = comps.iter().all(|c| !c.is_positive()) && comps.iter().any(|c| c.is_negative());
        let shown = if negative { ring.neg(&t.coeff) } else { t.coeff.clone() };
        match (idx, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mut factors = Vec::new();
        let trivial = t.mono.is_one() && module.rank() == 1;
        if shown != ring.one() || trivial {
            factors.push(shown.to_string());
        }
        for (v, &e) in t.mono.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(module.vars()[v].clone()),
                _ => factors.push(format!("{}^{e}", module.vars()[v])),
            }
        }
        if module.rank() > 1 {
            factors.push(format!("{}{}", module.basis_symbol(), t.basis + 1));
        }
        out.push_str(&factors.join("*"));
    }
    out
}

/// A parsed problem: ambient module plus generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemFile<I> {
    pub module: FreeModule<I>,
    pub generators: Vec<ModuleElement<I>>,
}

fn module_order_keyword(order: &ModuleOrder) -> &'static str {
    match order {
        ModuleOrder::TermOverPosition(_) => "top",
        _ => "pot",
    }
}

impl<I: Int> ProblemFile<I> {
    /// Canonical text form; parses back to an identical problem.
    pub fn render(&self) -> String {
        let m = &self.module;
        let mut out = format!(
            "ring {}\nvars {}\norder {}\nrank {}\nmodule_order {}\n",
            m.ring(),
            m.vars().join(" "),
            m.base_order().kind(),
            m.rank(),
            module_order_keyword(m.order())
        );
        for g in &self.generators {
            out.push_str("gen ");
            out.push_str(&render_element(m, g));
            out.push('\n');
        }
        out
    }
}

struct Header<T> {
    value: Option<(T, usize)>,
}

impl<T> Header<T> {
    fn set(&mut self, v: T, line: usize, name: &str) -> PResult<()> {
        if let Some((_, first)) = &self.value {
            return Err(err(
                ErrorCode::DuplicateDirective,
                line,
                1,
                format!("'{name}' already given on line {first}"),
            ));
        }
        self.value = Some((v, line));
        Ok(())
    }
}

fn keyword<T: Copy>(word: &str, options: &[(&str, T)], line: usize, column: usize) -> PResult<T> {
    options
        .iter()
        .find(|(k, _)| *k == word)
        .map(|(_, v)| *v)
        .ok_or_else(|| {
            expected(
                line,
                column,
                &format!("'{word}'"),
                &options.iter().map(|(k, _)| *k).collect::<Vec<_>>().join(" | "),
            )
        })
}

/// Parses a problem file.
pub fn parse_problem<I: Int>(text: &str) -> std::result::Result<ProblemFile<I>, ParseError> {
    let mut ring: Header<RingSpec<I>> = Header { value: None };
    let mut vars: Header<Vec<String>> = Header { value: None };
    let mut order: Header<MonomialOrderKind> = Header { value: None };
    let mut rank: Header<usize> = Header { value: None };
    let mut module_order: Header<bool> = Header { value: None };
    let mut gens: Vec<(usize, usize, String)> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let body = raw.split('#').next().unwrap_or("");
        let lead = body.len() - body.trim_start().len();
        let trimmed = body.trim();
        if trimmed.is_empty() {
            continue;
        }
        let word_len = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let (word, rest) = trimmed.split_at(word_len);
        let rest_lead = rest.len() - rest.trim_start().len();
        let rest_col = lead + word_len + rest_lead;
        let rest = rest.trim();
        match word {
            "ring" => ring.set(parse_ring_at(rest, line, rest_col)?, line, word)?,
            "vars" => {
                let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                for (k, n) in names.iter().enumerate() {
                    let ok = n.chars().next().is_some_and(is_ident_start) && n.chars().all(is_ident_char);
                    if !ok || basis_index("e", n).is_some() || names[..k].contains(n) {
                        return Err(err(
                            ErrorCode::Syntax,
                            line,
                            rest_col + 1,
                            format!("invalid or repeated variable name '{n}'"),
                        ));
                    }
                }
                vars.set(names, line, word)?
            }
            "order" => {
                let k = keyword(
                    rest,
                    &[
                        ("lex", MonomialOrderKind::Lex),
                        ("grlex", MonomialOrderKind::GrLex),
                        ("grevlex", MonomialOrderKind::GrevLex),
                    ],
                    line,
                    rest_col + 1,
                )?;
                order.set(k, line, word)?
            }
            "rank" => {
                let r: usize = rest
                    .parse()
                    .ok()
                    .filter(|r| *r > 0)
                    .ok_or_else(|| expected(line, rest_col + 1, &format!("'{rest}'"), "positive integer"))?;
                rank.set(r, line, word)?
            }
            "module_order" => {
                let top = keyword(rest, &[("pot", false), ("top", true)], line, rest_col + 1)?;
                module_order.set(top, line, word)?
            }
            "gen" => gens.push((line, rest_col, rest.to_string())),
            other => {
                return Err(ParseError {
                    code: ErrorCode::UnknownDirective,
                    line,
                    column: lead + 1,
                    message: format!("unknown directive '{other}'"),
                    expected: Some("ring | vars | order | rank | module_order | gen".into()),
                })
            }
        }
    }
    let end = last_line + 1;
    let (ring, _) = ring
        .value
        .ok_or_else(|| err(ErrorCode::MissingDirective, end, 1, "missing 'ring' directive"))?;
    let (vars, _) = vars
        .value
        .ok_or_else(|| err(ErrorCode::MissingDirective, end, 1, "missing 'vars' directive"))?;
    let kind = order.value.map_or(MonomialOrderKind::Lex, |(k, _)| k);
    let rank = rank.value.map_or(1, |(r, _)| r);
    let base = MonomialOrder::new(kind, vars.len());
    let mo = if module_order.value.is_some_and(|(t, _)| t) {
        ModuleOrder::top(base)
    } else {
        ModuleOrder::pot(base)
    };
    let module = FreeModule::new(ring, vars, rank, mo).map_err(|e| err(ErrorCode::Syntax, 1, 1, e.to_string()))?;
    let mut generators = Vec::with_capacity(gens.len());
    for (line, col0, src) in gens {
        let g = parse_element_at(&module, &src, line, col0)?;
        if g.is_zero() {
            return Err(err(ErrorCode::ZeroGenerator, line, col0 + 1, "generator is zero"));
        }
        generators.push(g);
    }
    Ok(ProblemFile { module, generators })
}
