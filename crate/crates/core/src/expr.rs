//! Text syntax for rational symbols.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := base ('^' integer)?
//! base  := literal | 'z' | 'zbar' | 'conj' '(' expr ')' | 'B' '(' literal ')' | '(' expr ')'
//! ```
//!
//! Literals are decimals with optional exponent and optional trailing `i`
//! (`0.5`, `2i`, `1e-3`, `i`). A full complex literal such as `1+2i` is a
//! single token when it forms a whole parenthesized group or the whole
//! input, as in `(1+2i)*z` or `B(0.3-0.4i)`. A `-` in prefix position
//! directly followed by a digit belongs to the literal, so `-2^2` is `4`
//! and `-(2^2)` is `-4`.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Result, ToeplitzError};
use crate::rational::RationalFunction;
use crate::symbol::ToeplitzSymbol;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Complex64),
    Var,
    VarBar,
    Conj(Box<Expr>),
    Blaschke(Complex64),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
}

/// Parsed expression together with its source text.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolExpression {
    pub source: String,
    pub ast: Expr,
}

impl SymbolExpression {
    pub fn lower(&self) -> Result<RationalFunction> {
        lower(&self.ast)
    }

    pub fn to_symbol(&self) -> Result<ToeplitzSymbol> {
        ToeplitzSymbol::new(self.lower()?)
    }
}

impl fmt::Display for SymbolExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ast)
    }
}

/// Parse an expression in the disc variable `z`.
pub fn parse_expression(text: &str) -> Result<SymbolExpression> {
    parse_with(text, Variable::Disc)
}

/// Parse an expression in the half-plane variable `s`; `zbar`, `conj` and
/// `B` are disc notions and are rejected.
pub fn parse_halfplane_expression(text: &str) -> Result<SymbolExpression> {
    parse_with(text, Variable::HalfPlane)
}

/// Parse and lower in one step.
pub fn parse_rational(text: &str) -> Result<RationalFunction> {
    parse_expression(text)?.lower()
}

pub fn parse_symbol(text: &str) -> Result<ToeplitzSymbol> {
    parse_expression(text)?.to_symbol()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Variable {
    Disc,
    HalfPlane,
}

fn parse_with(text: &str, var: Variable) -> Result<SymbolExpression> {
    let tokens = lex(text)?;
    let mut p = Parser { tokens, pos: 0, var };
    if p.peek().kind == Tok::End {
        return Err(syntax(0, "empty expression"));
    }
    let ast = p.expr()?;
    let t = p.peek();
    if t.kind != Tok::End {
        return Err(syntax(t.pos, &format!("unexpected {}", t.kind.describe())));
    }
    Ok(SymbolExpression {
        source: text.to_string(),
        ast,
    })
}

fn syntax(position: usize, message: &str) -> ToeplitzError {
    ToeplitzError::Syntax {
        position,
        message: message.to_string(),
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Complex64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(_) => "number".into(),
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }

    /// A following `-` would be a prefix sign rather than subtraction.
    fn opens_operand(&self) -> bool {
        matches!(
            self,
            Tok::Plus | Tok::Minus | Tok::Star | Tok::Slash | Tok::Caret | Tok::LParen
        )
    }
}

#[derive(Clone, Debug)]
struct Token {
    kind: Tok,
    pos: usize,
    /// The literal was written as an integer (no point, exponent or `i`).
    integral: bool,
}

/// Scan `[sign] digits [. digits] [e [sign] digits]` starting at `i`.
fn scan_decimal(b: &[u8], mut i: usize) -> Option<usize> {
    if i < b.len() && (b[i] == b'+' || b[i] == b'-') {
        i += 1;
    }
    let start = i;
    while i < b.len() && b[i].is_ascii_digit() {
        i += 1;
    }
    if i < b.len() && b[i] == b'.' {
        i += 1;
        while i < b.len() && b[i].is_ascii_digit() {
            i += 1;
        }
    }
    if i == start || (i == start + 1 && b[start] == b'.') {
        return None;
    }
    if i < b.len() && (b[i] == b'e' || b[i] == b'E') {
        let mut j = i + 1;
        if j < b.len() && (b[j] == b'+' || b[j] == b'-') {
            j += 1;
        }
        let digits = j;
        while j < b.len() && b[j].is_ascii_digit() {
            j += 1;
        }
        if j > digits {
            i = j;
        }
    }
    Some(i)
}

fn parse_f64(text: &str, pos: usize) -> Result<f64> {
    text.parse::<f64>()
        .map_err(|_| syntax(pos, &format!("malformed number '{text}'")))
}

/// `a+bi` / `a-bi` filling a whole group: must be followed by `)` or the end.
fn scan_complex(text: &str, i: usize) -> Option<(usize, Complex64)> {
    let b = text.as_bytes();
    let re_end = scan_decimal(b, i)?;
    if re_end >= b.len() || !(b[re_end] == b'+' || b[re_end] == b'-') {
        return None;
    }
    let im_end = scan_decimal(b, re_end)?;
    if im_end >= b.len() || b[im_end] != b'i' {
        return None;
    }
    let after = im_end + 1;
    if after < b.len() && (b[after].is_ascii_alphanumeric() || b[after] == b'_') {
        return None;
    }
    let rest = text[after..].trim_start();
    if !(rest.is_empty() || rest.starts_with(')')) {
        return None;
    }
    let re = text[i..re_end].parse().ok()?;
    let im = text[re_end..im_end].parse().ok()?;
    Some((after, Complex64::new(re, im)))
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let b = text.as_bytes();
    let mut out: Vec<Token> = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let prefix = out.last().is_none_or(|t| t.kind.opens_operand());
        let whole_group = out.last().is_none_or(|t| t.kind == Tok::LParen);
        if whole_group {
            if let Some((end, v)) = scan_complex(text, i) {
                out.push(Token { kind: Tok::Num(v), pos: i, integral: false });
                i = end;
                continue;
            }
        }
        let signed_literal = c == b'-'
            && prefix
            && b.get(i + 1).is_some_and(|d| d.is_ascii_digit() || *d == b'.');
        if c.is_ascii_digit() || c == b'.' || signed_literal {
            let end = scan_decimal(b, i).ok_or_else(|| syntax(i, "malformed number"))?;
            let x = parse_f64(&text[i..end], i)?;
            let integral = text[i..end].bytes().all(|d| d.is_ascii_digit() || d == b'-');
            let (kind, end, integral) = if b.get(end) == Some(&b'i')
                && !b.get(end + 1).is_some_and(|d| d.is_ascii_alphanumeric())
            {
                (Tok::Num(Complex64::new(0.0, x)), end + 1, false)
            } else {
                (Tok::Num(Complex64::new(x, 0.0)), end, integral)
            };
            out.push(Token { kind, pos: i, integral });
            i = end;
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            out.push(Token {
                kind: Tok::Ident(text[start..i].to_string()),
                pos: start,
                integral: false,
            });
            continue;
        }
        let kind = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(syntax(i, &format!("unexpected character '{ch}'")));
            }
        };
        out.push(Token { kind, pos: i, integral: false });
        i += 1;
    }
    out.push(Token { kind: Tok::End, pos: text.len(), integral: false });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    var: Variable,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.kind != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, kind: Tok) -> Result<Token> {
        let t = self.next();
        if t.kind == kind {
            Ok(t)
        } else {
            Err(syntax(
                t.pos,
                &format!("expected {}, found {}", kind.describe(), t.kind.describe()),
            ))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek().kind {
                Tok::Plus => {
                    self.next();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.next();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek().kind {
                Tok::Star => {
                    self.next();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Slash => {
                    self.next();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek().kind == Tok::Minus {
            self.next();
            return Ok(match self.unary()? {
                Expr::Num(c) => Expr::Num(-c),
                e => Expr::Neg(Box::new(e)),
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.base()?;
        if self.peek().kind != Tok::Caret {
            return Ok(base);
        }
        self.next();
        let n = self.exponent()?;
        Ok(Expr::Pow(Box::new(base), n))
    }

    fn exponent(&mut self) -> Result<i32> {
        let t = self.next();
        match t.kind {
            Tok::LParen => {
                let n = self.exponent()?;
                self.expect(Tok::RParen)?;
                Ok(n)
            }
            Tok::Minus => Ok(-self.exponent()?),
            Tok::Num(c) if t.integral && c.im == 0.0 && c.re.abs() <= i32::MAX as f64 => {
                Ok(c.re as i32)
            }
            Tok::Num(_) => Err(syntax(
                t.pos,
                "exponents must be integers; fractional powers are not rational",
            )),
            other => Err(syntax(
                t.pos,
                &format!("expected integer exponent, found {}", other.describe()),
            )),
        }
    }

    fn base(&mut self) -> Result<Expr> {
        let t = self.next();
        match t.kind {
            Tok::Num(c) => Ok(Expr::Num(c)),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name) => self.identifier(&name, t.pos),
            other => Err(syntax(t.pos, &format!("unexpected {}", other.describe()))),
        }
    }

    fn identifier(&mut self, name: &str, pos: usize) -> Result<Expr> {
        let disc = self.var == Variable::Disc;
        match name {
            "i" => Ok(Expr::Num(Complex64::new(0.0, 1.0))),
            "z" if disc => Ok(Expr::Var),
            "s" if !disc => Ok(Expr::Var),
            "zbar" if disc => Ok(Expr::VarBar),
            "conj" if disc => {
                self.expect(Tok::LParen)?;
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(Expr::Conj(Box::new(e)))
            }
            "B" if disc => {
                self.expect(Tok::LParen)?;
                let t = self.next();
                let a = match t.kind {
                    Tok::Num(a) => a,
                    Tok::Ident(ref s) if s == "i" => Complex64::new(0.0, 1.0),
                    other => {
                        return Err(syntax(
                            t.pos,
                            &format!("B(...) takes a complex literal, found {}", other.describe()),
                        ))
                    }
                };
                if a.norm() >= 1.0 {
                    return Err(ToeplitzError::BlaschkeParameterOutOfDisc { position: t.pos });
                }
                self.expect(Tok::RParen)?;
                Ok(Expr::Blaschke(a))
            }
            "z" | "zbar" | "conj" | "B" => Err(syntax(
                pos,
                &format!("'{name}' is a disc notion; half-plane expressions use the variable s"),
            )),
            "s" => Err(syntax(pos, "unknown variable 's'; disc expressions use z")),
            _ => Err(syntax(
                pos,
                &format!(
                    "'{name}' is not a rational primitive; only z, zbar, conj(...), B(a) and i are available"
                ),
            )),
        }
    }
}

pub fn lower(e: &Expr) -> Result<RationalFunction> {
    Ok(match e {
        Expr::Num(c) => RationalFunction::constant(*c),
        Expr::Var => RationalFunction::z(),
        Expr::VarBar => RationalFunction::z_power(-1),
        Expr::Conj(x) => lower(x)?.circle_conjugate(),
        Expr::Blaschke(a) => {
            let num = RationalFunction::linear(*a);
            // 1 - conj(a) z
            let den = if *a == Complex64::new(0.0, 0.0) {
                RationalFunction::one()
            } else {
                RationalFunction::linear(Complex64::new(1.0, 0.0) / a.conj()).scale(-a.conj())
            };
            num.checked_div(&den)?
        }
        Expr::Neg(x) => -&lower(x)?,
        Expr::Add(a, b) => lower(a)? + lower(b)?,
        Expr::Sub(a, b) => lower(a)? - lower(b)?,
        Expr::Mul(a, b) => lower(a)? * lower(b)?,
        Expr::Div(a, b) => lower(a)?.checked_div(&lower(b)?)?,
        Expr::Pow(x, n) => lower(x)?.powi(*n)?,
    })
}

fn real_literal(x: f64) -> String {
    let s = format!("{x:?}");
    s.strip_suffix(".0").map(str::to_string).unwrap_or(s)
}

/// Exact (round-trippable) literal, parenthesized when it is not a single
/// unsigned token.
fn literal(c: Complex64) -> String {
    let (re, im) = (c.re + 0.0, c.im + 0.0);
    if im == 0.0 {
        if re.is_sign_negative() {
            format!("({})", real_literal(re))
        } else {
            real_literal(re)
        }
    } else if re == 0.0 {
        if im < 0.0 {
            format!("({}i)", real_literal(im))
        } else {
            format!("{}i", real_literal(im))
        }
    } else {
        let sign = if im < 0.0 { '-' } else { '+' };
        format!("({}{sign}{}i)", real_literal(re), real_literal(im.abs()))
    }
}

fn precedence(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) | Expr::Div(..) => 2,
        Expr::Neg(..) => 3,
        Expr::Pow(..) => 4,
        _ => 5,
    }
}

fn write_child(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if precedence(e) < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(c) => f.write_str(&literal(*c)),
            Expr::Var => f.write_str("z"),
            Expr::VarBar => f.write_str("zbar"),
            Expr::Conj(x) => write!(f, "conj({x})"),
            Expr::Blaschke(a) => {
                let lit = literal(*a);
                let inner = lit
                    .strip_prefix('(')
                    .and_then(|s| s.strip_suffix(')'))
                    .unwrap_or(&lit);
                write!(f, "B({inner})")
            }
            Expr::Neg(x) => {
                // a bare literal after the sign would be absorbed into it
                f.write_str("-")?;
                write_child(f, x, 5)
            }
            Expr::Add(a, b) => {
                write_child(f, a, 1)?;
                f.write_str("+")?;
                write_child(f, b, 2)
            }
            Expr::Sub(a, b) => {
                write_child(f, a, 1)?;
                f.write_str("-")?;
                write_child(f, b, 2)
            }
            Expr::Mul(a, b) => {
                write_child(f, a, 2)?;
                f.write_str("*")?;
                write_child(f, b, 3)
            }
            Expr::Div(a, b) => {
                write_child(f, a, 2)?;
                f.write_str("/")?;
                write_child(f, b, 3)
            }
            Expr::Pow(x, n) => {
                write_child(f, x, 5)?;
                if *n < 0 {
                    write!(f, "^({n})")
                } else {
                    write!(f, "^{n}")
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn round_trip(text: &str) {
        let a = parse_expression(text).unwrap();
        let printed = a.to_string();
        let b = parse_expression(&printed).unwrap();
        assert_eq!(a.ast, b.ast, "{text} -> {printed}");
    }

    #[test]
    fn zbar_squared() {
        let s = parse_symbol("zbar^2").unwrap();
        assert!(s.value().approx_eq(&RationalFunction::z_power(-2), 0.0));
        assert_eq!(s.winding(), Some(-2));
    }

    #[test]
    fn conj_blaschke_times_zbar() {
        let r = parse_rational("conj(B(0.5))*zbar").unwrap();
        let b = RationalFunction::linear(c(0.5, 0.0))
            .checked_div(&RationalFunction::linear(c(2.0, 0.0)).scale(c(-0.5, 0.0)))
            .unwrap();
        let expected = &b.circle_conjugate() * &RationalFunction::z_power(-1);
        assert!(r.approx_eq(&expected, 1e-15));
        round_trip("conj(B(0.5))*zbar");
    }

    #[test]
    fn ratio_of_linears() {
        let r = parse_rational("(z+0.5)/(1+0.5*z)").unwrap();
        let expected = RationalFunction::linear(c(-0.5, 0.0))
            .checked_div(&RationalFunction::linear(c(-2.0, 0.0)).scale(c(0.5, 0.0)))
            .unwrap();
        assert!(r.approx_eq(&expected, 1e-15));
    }

    #[test]
    fn complex_literals() {
        assert_eq!(parse_expression("1+2i").unwrap().ast, Expr::Num(c(1.0, 2.0)));
        assert_eq!(
            parse_expression("(1-2i)*z").unwrap().ast,
            Expr::Mul(Box::new(Expr::Num(c(1.0, -2.0))), Box::new(Expr::Var))
        );
        assert_eq!(parse_expression("B(0.3-0.4i)").unwrap().ast, Expr::Blaschke(c(0.3, -0.4)));
        assert_eq!(parse_expression("2.5e-1i").unwrap().ast, Expr::Num(c(0.0, 0.25)));
        // not a whole group: ordinary sum
        let r = parse_rational("z-1+2i").unwrap();
        assert!((r.eval(c(0.0, 0.0)) - c(-1.0, 2.0)).norm() < 1e-15);
    }

    #[test]
    fn signed_literals() {
        assert_eq!(parse_expression("-2^2").unwrap().ast, Expr::Pow(Box::new(Expr::Num(c(-2.0, 0.0))), 2));
        assert!((parse_rational("-(2^2)").unwrap().gain() - c(-4.0, 0.0)).norm() == 0.0);
        assert!((parse_rational("3--2").unwrap().gain() - c(5.0, 0.0)).norm() == 0.0);
        assert_eq!(
            parse_expression("z^-2").unwrap().ast,
            Expr::Pow(Box::new(Expr::Var), -2)
        );
        assert_eq!(
            parse_expression("-z").unwrap().ast,
            Expr::Neg(Box::new(Expr::Var))
        );
    }

    #[test]
    fn printer_round_trips() {
        for text in [
            "zbar^2",
            "-2^2",
            "-(2^2)",
            "(z+0.5)/(1+0.5*z)",
            "conj((1-2i)*z+i)/B(0.25i)",
            "1/(z-0.3)^(-3)",
            "-z*(-0.5)",
            "z-(z-1)",
            "z/(z/2)",
            "(-1.5e-7-2i)*z^3",
            "-(1+z)^2",
        ] {
            round_trip(text);
        }
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_expression("z + exp(z)").unwrap_err();
        assert_eq!(err.code(), "SyntaxError");
        assert_eq!(err.position(), Some(4));
        assert!(parse_expression("z^0.5").is_err());
        assert!(parse_expression("sqrt(z)").is_err());
        assert!(parse_expression("").is_err());
        assert!(parse_expression("(z+1").is_err());
        assert!(parse_expression("z $ 2").is_err());
        assert_eq!(
            parse_expression("B(1.5)").unwrap_err(),
            ToeplitzError::BlaschkeParameterOutOfDisc { position: 2 }
        );
        assert_eq!(parse_rational("1/(z-z)"), Err(ToeplitzError::ZeroFunction));
    }

    #[test]
    fn halfplane_variable() {
        let r = parse_halfplane_expression("1/(s+i)^2").unwrap().lower().unwrap();
        assert_eq!(r.pole_count(), 2);
        assert!(parse_halfplane_expression("zbar").is_err());
        assert!(parse_expression("s").is_err());
    }

    #[test]
    fn canonical_print_parses_back() {
        for text in ["(z+0.5)/(2+z)", "(1i)-z", "1/z^2", "(1-2i)+z", "-0.5*z+z^2"] {
            let r = parse_rational(text).unwrap();
            let back = parse_rational(&r.to_string()).unwrap();
            assert!(back.approx_eq(&r, 1e-12), "{text}: {r}");
        }
    }
}
