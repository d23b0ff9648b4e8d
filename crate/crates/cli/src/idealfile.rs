//! Plain-text ideal files.
//!
//! ```text
//! # comment
//! ring n=3 field=q
//! x2^4
//! x0*x2^3 + x1^3*x3
//! ```
//!
//! Variables are `x0..xN`. Coefficients are integers; terms are products
//! joined by `*`, powers use `^`, and every line must be homogeneous.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use raocurve::{Field, GradedIdeal, Monomial, Polynomial, Rational, Zp32003};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}: polynomial is not homogeneous")]
    NotHomogeneous { line: usize },
    #[error("line {line}, column {col}: variable x{index} out of range for n={n}")]
    VariableOutOfRange { line: usize, col: usize, index: usize, n: usize },
    #[error("missing `ring n=<N> field=<q|zp:P>` header")]
    MissingHeader,
    #[error("unsupported field `{0}` (use q or zp:32003)")]
    UnsupportedField(String),
}

/// Coefficient field named in the header.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldTag {
    Rational,
    Zp32003,
}

impl FieldTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            FieldTag::Rational => "q",
            FieldTag::Zp32003 => "zp:32003",
        }
    }
}

/// Integer polynomial as read from a file: `(exponents, coefficient)` pairs.
pub type RawPoly = Vec<(Vec<u32>, BigInt)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFile {
    /// Projective dimension; the ring has `n + 1` variables.
    pub n: usize,
    pub field: FieldTag,
    pub polys: Vec<RawPoly>,
}

/// Fields whose elements can be read from arbitrary integers.
pub trait FromInteger: Field {
    fn from_bigint(v: &BigInt) -> Self;
}

impl FromInteger for Rational {
    fn from_bigint(v: &BigInt) -> Self {
        Rational::from_integer(v.clone())
    }
}

impl FromInteger for Zp32003 {
    fn from_bigint(v: &BigInt) -> Self {
        let r = (v % BigInt::from(32003)).to_i64().unwrap();
        Zp32003::new(r)
    }
}

impl IdealFile {
    pub fn nvars(&self) -> usize {
        self.n + 1
    }

    pub fn polynomials<F: FromInteger>(&self) -> Vec<Polynomial<F>> {
        self.polys
            .iter()
            .map(|p| {
                Polynomial::from_terms(
                    self.nvars(),
                    p.iter().map(|(e, c)| (Monomial::from_exponents(e), F::from_bigint(c))).collect(),
                )
            })
            .collect()
    }

    pub fn ideal<F: FromInteger>(&self) -> raocurve::Result<GradedIdeal<F>> {
        GradedIdeal::new(self.nvars(), self.polynomials())
    }
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
    line: usize,
}

impl Lexer<'_> {
    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax { line: self.line, col: self.pos + 1, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && (self.s[self.pos] == b' ' || self.s[self.pos] == b'\t') {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }
}

fn parse_poly(text: &str, line: usize, nvars: usize) -> Result<RawPoly, ParseError> {
    let mut lx = Lexer { s: text.as_bytes(), pos: 0, line };
    let mut terms: RawPoly = Vec::new();
    let mut first = true;
    loop {
        let mut sign = 1;
        match lx.peek() {
            None if first => return Err(lx.err("empty polynomial")),
            None => break,
            Some(b'+') | Some(b'-') => {
                if lx.s[lx.pos] == b'-' {
                    sign = -1;
                }
                lx.pos += 1;
            }
            Some(_) if first => {}
            Some(c) => return Err(lx.err(format!("expected `+` or `-`, found `{}`", c as char))),
        }
        first = false;
        let mut coef = BigInt::from(sign);
        let mut exps = vec![0u32; nvars];
        let mut factors = 0;
        loop {
            match lx.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let d = lx.digits().unwrap();
                    coef *= d.parse::<BigInt>().unwrap();
                }
                Some(b'x') => {
                    let col = lx.pos + 1;
                    lx.pos += 1;
                    let idx: usize = lx.digits().ok_or_else(|| lx.err("expected a variable index after `x`"))?.parse().map_err(|_| lx.err("variable index too large"))?;
                    if idx >= nvars {
                        return Err(ParseError::VariableOutOfRange { line, col, index: idx, n: nvars - 1 });
                    }
                    let mut e = 1u32;
                    if lx.peek() == Some(b'^') {
                        lx.pos += 1;
                        lx.skip_ws();
                        e = lx.digits().ok_or_else(|| lx.err("expected an exponent after `^`"))?.parse().map_err(|_| lx.err("exponent too large"))?;
                    }
                    exps[idx] += e;
                }
                Some(c) => return Err(lx.err(format!("unexpected `{}`", c as char))),
                None => return Err(lx.err("expected a factor")),
            }
            factors += 1;
            match lx.peek() {
                Some(b'*') => {
                    lx.pos += 1;
                }
                Some(b'+') | Some(b'-') | None => break,
                Some(c) if c.is_ascii_digit() || c == b'x' => {
                    return Err(lx.err("juxtaposition is not allowed; use `*`"));
                }
                Some(c) => return Err(lx.err(format!("unexpected `{}`", c as char))),
            }
        }
        debug_assert!(factors > 0);
        if !coef.is_zero() {
            terms.push((exps, coef));
        }
    }
    // combine equal monomials
    terms.sort_by(|a, b| a.0.cmp(&b.0));
    let mut out: RawPoly = Vec::with_capacity(terms.len());
    for (e, c) in terms {
        match out.last_mut() {
            Some((le, lc)) if *le == e => *lc += c,
            _ => out.push((e, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    let mut degs = out.iter().map(|(e, _)| e.iter().sum::<u32>());
    if let Some(d0) = degs.next() {
        if degs.any(|d| d != d0) {
            return Err(ParseError::NotHomogeneous { line });
        }
    }
    Ok(out)
}

fn parse_header(text: &str, line: usize) -> Result<(usize, FieldTag), ParseError> {
    let err = |msg: &str| ParseError::Syntax { line, col: 1, msg: msg.to_string() };
    let mut words = text.split_whitespace();
    if words.next() != Some("ring") {
        return Err(ParseError::MissingHeader);
    }
    let mut n = None;
    let mut field = FieldTag::Rational;
    for w in words {
        if let Some(v) = w.strip_prefix("n=") {
            n = Some(v.parse::<usize>().map_err(|_| err("bad value for n"))?);
        } else if let Some(v) = w.strip_prefix("field=") {
            field = match v {
                "q" => FieldTag::Rational,
                "zp:32003" => FieldTag::Zp32003,
                other => return Err(ParseError::UnsupportedField(other.to_string())),
            };
        } else {
            return Err(err(&format!("unknown header entry `{w}`")));
        }
    }
    let n = n.ok_or_else(|| err("header is missing n=<N>"))?;
    if n + 1 > raocurve::monomial::MAX_VARS {
        return Err(err(&format!("at most {} variables are supported", raocurve::monomial::MAX_VARS)));
    }
    Ok((n, field))
}

pub fn parse(text: &str) -> Result<IdealFile, ParseError> {
    let mut header = None;
    let mut polys = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap().trim();
        if body.is_empty() {
            continue;
        }
        match header {
            None => header = Some(parse_header(body, line)?),
            Some((n, _)) => polys.push(parse_poly(body, line, n + 1)?),
        }
    }
    let (n, field) = header.ok_or(ParseError::MissingHeader)?;
    Ok(IdealFile { n, field, polys })
}

/// Render polynomials with integer coefficients (rationals are cleared of denominators).
pub fn emit<F: Field>(n: usize, field: FieldTag, gens: &[Polynomial<F>], comments: &[String]) -> String {
    let mut s = String::new();
    for c in comments {
        writeln!(s, "# {c}").unwrap();
    }
    writeln!(s, "ring n={n} field={}", field.as_str()).unwrap();
    for g in gens {
        writeln!(s, "{}", render(g)).unwrap();
    }
    s
}

fn render<F: Field>(p: &Polynomial<F>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let v = integer_value(c);
        let (neg, abs) = (v.is_negative(), v.abs());
        if k == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            write!(s, "{abs}").unwrap();
        } else if abs == BigInt::from(1) {
            write!(s, "{m}").unwrap();
        } else {
            write!(s, "{abs}*{m}").unwrap();
        }
    }
    s
}

fn integer_value<F: Field>(c: &F) -> BigInt {
    let t = c.to_string();
    t.parse::<BigInt>().unwrap_or_else(|_| panic!("coefficient {t} is not an integer"))
}

/// Scale rational generators to primitive integer polynomials.
pub fn integral(gens: &[Polynomial<Rational>]) -> Vec<Polynomial<Rational>> {
    gens.iter().map(|g| g.primitive_integer()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_generators() {
        let f = parse("ring n=3 field=q\nx2^4\nx0*x2^3 + x1^3*x3\n").unwrap();
        assert_eq!(f.polys.len(), 2);
        let i = f.ideal::<Rational>().unwrap();
        assert_eq!(i.generators().len(), 2);
    }

    #[test]
    fn rejects_inhomogeneous() {
        assert_eq!(parse("ring n=3 field=q\nx0*x1 + x2\n"), Err(ParseError::NotHomogeneous { line: 2 }));
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(parse("ring n=3 field=q\nx9^2\n"), Err(ParseError::VariableOutOfRange { index: 9, .. })));
    }

    #[test]
    fn rejects_juxtaposition() {
        assert!(matches!(parse("ring n=3 field=q\n2x0\n"), Err(ParseError::Syntax { line: 2, col: 2, .. })));
        assert!(matches!(parse("ring n=3 field=q\nx0 x1\n"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn comments_and_signs() {
        let f = parse("# hi\nring n=2 field=q # trailing\n-x0^2 + 3*x1*x2 - x0*x2 # c\n").unwrap();
        let p = &f.polynomials::<Rational>()[0];
        assert_eq!(p.to_string(), "-x0^2 - x0*x2 + 3*x1*x2");
    }

    #[test]
    fn unsupported_prime() {
        assert_eq!(parse("ring n=3 field=zp:101\n"), Err(ParseError::UnsupportedField("zp:101".into())));
    }

    #[test]
    fn round_trip() {
        let src = "ring n=3 field=q\nx2^4\n-x0*x2^3 + 12*x1^3*x3\nx2*x3\n";
        let f = parse(src).unwrap();
        let gens = f.polynomials::<Rational>();
        let out = emit(3, FieldTag::Rational, &gens, &[]);
        let g = parse(&out).unwrap();
        assert_eq!(g.polynomials::<Rational>(), gens);
    }
}
