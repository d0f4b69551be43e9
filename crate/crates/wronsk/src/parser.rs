//! Recursive-descent parsers for Laurent-polynomial, rational-function and
//! curve expressions in the variable `t`.
//!
//! Laurent grammar (whitespace insignificant, exponents signed decimal):
//!
//! ```text
//! laurent := sign? term (sign term)*
//! term    := coeff ('*'? tpart)?  |  coeff '/' 't' ('^' posint)?  |  tpart
//! tpart   := 't' ('^' sint)?
//! coeff   := int ('/' posint)?
//! ```
//!
//! Rational functions are accepted either as plain Laurent expressions or
//! as `num / den` with `den` a product of linear factors `(t - beta)^m`
//! and/or `t^m`; full factorization is out of scope, so non-linear
//! denominator factors are rejected.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::laurent::LaurentPoly;
use crate::ratfun::RationalFunction;
use crate::rational::Rational;

/// A syntax problem at a byte offset, with the token kinds that would have
/// been accepted there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDiagnostic {
    pub offset: usize,
    pub message: String,
    pub expected: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Diagnostic(ParseDiagnostic),
    /// A literal coefficient denominator of zero.
    DivisionByZero { offset: usize },
    /// A denominator factor that is not linear in `t`.
    NonLinearDenominatorFactor { offset: usize },
    /// A curve needs at least two components.
    TooFewComponents { found: usize },
    /// An error inside one component of a curve expression.
    Component { index: usize, source: Box<ParseError> },
}

impl ParseError {
    fn diag(offset: usize, message: impl Into<String>, expected: &[&str]) -> Self {
        ParseError::Diagnostic(ParseDiagnostic {
            offset,
            message: message.into(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        })
    }

    /// Byte offset the error points at, when it has one.
    pub fn offset(&self) -> Option<usize> {
        match self {
            ParseError::Diagnostic(d) => Some(d.offset),
            ParseError::DivisionByZero { offset }
            | ParseError::NonLinearDenominatorFactor { offset } => Some(*offset),
            ParseError::TooFewComponents { .. } => None,
            ParseError::Component { source, .. } => source.offset(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Diagnostic(d) => {
                write!(f, "at byte {}: {}", d.offset, d.message)?;
                if !d.expected.is_empty() {
                    write!(f, " (expected {})", d.expected.join(", "))?;
                }
                Ok(())
            }
            ParseError::DivisionByZero { offset } => {
                write!(f, "at byte {}: division by zero", offset)
            }
            ParseError::NonLinearDenominatorFactor { offset } => write!(
                f,
                "at byte {}: denominator factors must be linear in t",
                offset
            ),
            ParseError::TooFewComponents { found } => {
                write!(f, "a curve needs at least 2 components, found {}", found)
            }
            ParseError::Component { index, source } => {
                write!(f, "component {}: {}", index + 1, source)
            }
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    T,
    Caret,
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    offset: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let value: BigInt = text[start..i].parse().expect("digits parse");
                out.push(Token {
                    tok: Tok::Int(value),
                    offset: start,
                });
            }
            b't' => {
                out.push(Token {
                    tok: Tok::T,
                    offset: i,
                });
                i += 1;
            }
            b'^' | b'+' | b'-' | b'*' | b'/' | b'(' | b')' => {
                let tok = match c {
                    b'^' => Tok::Caret,
                    b'+' => Tok::Plus,
                    b'-' => Tok::Minus,
                    b'*' => Tok::Star,
                    b'/' => Tok::Slash,
                    b'(' => Tok::LParen,
                    _ => Tok::RParen,
                };
                out.push(Token { tok, offset: i });
                i += 1;
            }
            _ => {
                return Err(ParseError::diag(
                    i,
                    format!("unexpected character {:?}", text[i..].chars().next().unwrap()),
                    &["digit", "t", "+", "-", "*", "/", "^", "(", ")"],
                ))
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    end_offset: usize,
}

impl<'a> Parser<'a> {
    fn new(tokens: &'a [Token], end_offset: usize) -> Self {
        Parser {
            tokens,
            pos: 0,
            end_offset,
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn offset(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map_or(self.end_offset, |t| t.offset)
    }

    fn bump(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_int(&mut self, what: &str) -> Result<(BigInt, usize), ParseError> {
        let offset = self.offset();
        match self.bump() {
            Some(Token {
                tok: Tok::Int(v), ..
            }) => Ok((v.clone(), offset)),
            _ => Err(ParseError::diag(
                offset,
                format!("expected {}", what),
                &["integer"],
            )),
        }
    }

    fn parse_laurent(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut terms: Vec<(i64, Rational)> = Vec::new();
        let mut negative = false;
        if self.eat(&Tok::Minus) {
            negative = true;
        } else {
            self.eat(&Tok::Plus);
        }
        loop {
            let (e, c) = self.parse_term()?;
            terms.push((e, if negative { -c } else { c }));
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    negative = false;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    negative = true;
                }
                None => break,
                Some(_) => {
                    return Err(ParseError::diag(
                        self.offset(),
                        "expected end of expression or another term",
                        &["+", "-"],
                    ))
                }
            }
        }
        Ok(LaurentPoly::from_terms(terms))
    }

    fn parse_term(&mut self) -> Result<(i64, Rational), ParseError> {
        match self.peek() {
            Some(Tok::T) => {
                self.pos += 1;
                let e = self.parse_exponent()?;
                Ok((e, Rational::one()))
            }
            Some(Tok::Int(_)) => {
                let (numer, _) = self.expect_int("a coefficient")?;
                let mut coeff = Rational::from_integer(numer);
                // A slash can extend the coefficient ("3/4") or flip the
                // variable into the denominator ("3/t^2").
                if self.peek() == Some(&Tok::Slash) {
                    match self.tokens.get(self.pos + 1).map(|t| &t.tok) {
                        Some(Tok::Int(_)) => {
                            self.pos += 1;
                            let (den, offset) = self.expect_int("a denominator")?;
                            if den.is_zero() {
                                return Err(ParseError::DivisionByZero { offset });
                            }
                            coeff /= Rational::from_integer(den);
                        }
                        Some(Tok::T) => {
                            self.pos += 2;
                            let e = self.parse_reciprocal_exponent()?;
                            return Ok((-e, coeff));
                        }
                        _ => {
                            return Err(ParseError::diag(
                                self.tokens
                                    .get(self.pos + 1)
                                    .map_or(self.end_offset, |t| t.offset),
                                "expected a denominator or t after '/'",
                                &["integer", "t"],
                            ))
                        }
                    }
                }
                // Optional multiplication with a t-part, '*' optional.
                let starred = self.eat(&Tok::Star);
                match self.peek() {
                    Some(Tok::T) => {
                        self.pos += 1;
                        if self.peek() == Some(&Tok::Slash)
                            && matches!(
                                self.tokens.get(self.pos + 1).map(|t| &t.tok),
                                Some(Tok::T)
                            )
                        {
                            self.pos += 2;
                            let e = self.parse_reciprocal_exponent()?;
                            return Ok((1 - e, coeff));
                        }
                        let e = self.parse_exponent()?;
                        Ok((e, coeff))
                    }
                    _ if starred => Err(ParseError::diag(
                        self.offset(),
                        "expected t after '*'",
                        &["t"],
                    )),
                    _ => Ok((0, coeff)),
                }
            }
            _ => Err(ParseError::diag(
                self.offset(),
                "expected a term",
                &["integer", "t"],
            )),
        }
    }

    /// Optional `^` with a signed integer exponent; 1 when absent.
    fn parse_exponent(&mut self) -> Result<i64, ParseError> {
        if !self.eat(&Tok::Caret) {
            return Ok(1);
        }
        let negative = if self.eat(&Tok::Minus) {
            true
        } else {
            self.eat(&Tok::Plus);
            false
        };
        let (v, offset) = self.expect_int("an exponent")?;
        let e = big_to_i64(&v, offset)?;
        Ok(if negative { -e } else { e })
    }

    /// Optional `^` with a positive integer, for `coeff / t^k`.
    fn parse_reciprocal_exponent(&mut self) -> Result<i64, ParseError> {
        if !self.eat(&Tok::Caret) {
            return Ok(1);
        }
        let (v, offset) = self.expect_int("a positive exponent")?;
        if v.is_zero() || v.is_negative() {
            return Err(ParseError::diag(
                offset,
                "exponent after '/t^' must be a positive integer",
                &["positive integer"],
            ));
        }
        big_to_i64(&v, offset)
    }

    fn at_end(&self) -> bool {
        self.pos == self.tokens.len()
    }
}

fn big_to_i64(v: &BigInt, offset: usize) -> Result<i64, ParseError> {
    i64::try_from(v.clone()).map_err(|_| {
        ParseError::diag(offset, "exponent out of range", &["64-bit integer"])
    })
}

/// Parses a Laurent polynomial; like terms are combined.
pub fn parse_laurent(text: &str) -> Result<LaurentPoly, ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError::diag(0, "empty expression", &["integer", "t"]));
    }
    let tokens = tokenize(text)?;
    let mut parser = Parser::new(&tokens, text.len());
    parser.parse_laurent()
}

/// Parses a rational function: either a plain Laurent expression (negative
/// exponents become a pole at the origin) or `num / den` with a factored
/// linear denominator.
pub fn parse_rational(text: &str) -> Result<RationalFunction, ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError::diag(0, "empty expression", &["integer", "t"]));
    }
    let laurent_attempt = parse_laurent(text);
    if let Ok(p) = &laurent_attempt {
        return Ok(RationalFunction::from_laurent(p));
    }
    let tokens = tokenize(text)?;
    let mut best_err: Option<ParseError> = None;
    let mut depth = 0usize;
    for i in 0..tokens.len() {
        match tokens[i].tok {
            Tok::LParen => depth += 1,
            Tok::RParen => depth = depth.saturating_sub(1),
            Tok::Slash if depth == 0 => {
                match try_num_den_split(&tokens, i, text.len()) {
                    Ok(rf) => return Ok(rf),
                    Err(e) => keep_furthest(&mut best_err, e),
                }
            }
            _ => {}
        }
    }
    if let Err(e) = laurent_attempt {
        keep_furthest(&mut best_err, e);
    }
    Err(best_err.expect("at least the Laurent error is recorded"))
}

/// Semantic errors (the syntax was understood but the content is invalid)
/// outrank syntax diagnostics; among equals the larger offset wins.
fn error_rank(e: &ParseError) -> (u8, usize) {
    let semantic = matches!(
        e,
        ParseError::DivisionByZero { .. } | ParseError::NonLinearDenominatorFactor { .. }
    );
    (u8::from(semantic), e.offset().unwrap_or(0))
}

fn keep_furthest(best: &mut Option<ParseError>, candidate: ParseError) {
    let further = match best {
        None => true,
        Some(current) => error_rank(&candidate) > error_rank(current),
    };
    if further {
        *best = Some(candidate);
    }
}

fn try_num_den_split(
    tokens: &[Token],
    slash: usize,
    end_offset: usize,
) -> Result<RationalFunction, ParseError> {
    let num_tokens = &tokens[..slash];
    let den_tokens = &tokens[slash + 1..];
    if num_tokens.is_empty() {
        return Err(ParseError::diag(
            tokens[slash].offset,
            "missing numerator before '/'",
            &["expression"],
        ));
    }
    let numerator = parse_parenthesizable_laurent(num_tokens, tokens[slash].offset)?;
    let (factors, scale) = parse_denominator(den_tokens, end_offset)?;
    let num_rf = RationalFunction::from_laurent(&numerator);
    let den_rf = RationalFunction::new(scale, LaurentPoly::one(), factors);
    Ok(num_rf.mul(&den_rf))
}

/// A Laurent expression, optionally wrapped in one pair of parentheses.
fn parse_parenthesizable_laurent(
    tokens: &[Token],
    end_offset: usize,
) -> Result<LaurentPoly, ParseError> {
    if tokens.first().map(|t| &t.tok) == Some(&Tok::LParen)
        && tokens.last().map(|t| &t.tok) == Some(&Tok::RParen)
        && matching_paren(tokens, 0) == Some(tokens.len() - 1)
    {
        let inner = &tokens[1..tokens.len() - 1];
        let mut parser = Parser::new(inner, tokens.last().unwrap().offset);
        let p = parser.parse_laurent()?;
        if !parser.at_end() {
            return Err(ParseError::diag(
                parser.offset(),
                "trailing input inside parentheses",
                &["+", "-"],
            ));
        }
        return Ok(p);
    }
    let mut parser = Parser::new(tokens, end_offset);
    let p = parser.parse_laurent()?;
    if !parser.at_end() {
        return Err(ParseError::diag(
            parser.offset(),
            "trailing input in numerator",
            &["+", "-"],
        ));
    }
    Ok(p)
}

fn matching_paren(tokens: &[Token], open: usize) -> Option<usize> {
    let mut depth = 0usize;
    for (i, t) in tokens.iter().enumerate().skip(open) {
        match t.tok {
            Tok::LParen => depth += 1,
            Tok::RParen => {
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

/// Denominator: a product of factors `t^m` and `(linear)^m`, optionally
/// wrapped in one outer pair of parentheses. Returns the pole list and the
/// reciprocal scale contributed by non-monic linear factors.
fn parse_denominator(
    tokens: &[Token],
    end_offset: usize,
) -> Result<(Vec<(Rational, u32)>, Rational), ParseError> {
    if tokens.is_empty() {
        return Err(ParseError::diag(
            end_offset,
            "missing denominator after '/'",
            &["t", "("],
        ));
    }
    match parse_factor_product(tokens, end_offset) {
        Ok(done) => Ok(done),
        Err(outer_err) => {
            if tokens.first().map(|t| &t.tok) == Some(&Tok::LParen)
                && matching_paren(tokens, 0) == Some(tokens.len() - 1)
            {
                let inner = &tokens[1..tokens.len() - 1];
                parse_factor_product(inner, tokens.last().unwrap().offset)
                    .map_err(|inner_err| furthest(outer_err, inner_err))
            } else {
                Err(outer_err)
            }
        }
    }
}

// Ties go to `b`, the error from the stripped-parentheses retry, which is
// the more specific of the two attempts.
fn furthest(a: ParseError, b: ParseError) -> ParseError {
    if error_rank(&b) >= error_rank(&a) {
        b
    } else {
        a
    }
}

fn parse_factor_product(
    tokens: &[Token],
    end_offset: usize,
) -> Result<(Vec<(Rational, u32)>, Rational), ParseError> {
    let mut factors: Vec<(Rational, u32)> = Vec::new();
    let mut scale = Rational::one();
    let mut pos = 0usize;
    while pos < tokens.len() {
        match &tokens[pos].tok {
            Tok::T => {
                pos += 1;
                let order = parse_factor_order(tokens, &mut pos, end_offset)?;
                factors.push((Rational::zero(), order));
            }
            Tok::LParen => {
                let open = pos;
                let close = matching_paren(tokens, open).ok_or_else(|| {
                    ParseError::diag(tokens[open].offset, "unmatched '('", &[")"])
                })?;
                let inner = &tokens[open + 1..close];
                let mut parser = Parser::new(inner, tokens[close].offset);
                let poly = parser.parse_laurent()?;
                if !parser.at_end() {
                    return Err(ParseError::diag(
                        parser.offset(),
                        "trailing input inside factor",
                        &["+", "-"],
                    ));
                }
                if poly.is_zero() {
                    return Err(ParseError::DivisionByZero {
                        offset: tokens[open].offset,
                    });
                }
                if poly.degree_max() != Some(1) || !poly.is_polynomial() {
                    return Err(ParseError::NonLinearDenominatorFactor {
                        offset: tokens[open].offset,
                    });
                }
                pos = close + 1;
                let order = parse_factor_order(tokens, &mut pos, end_offset)?;
                let a = poly.coeff(1);
                let b = poly.coeff(0);
                let beta = -(b / &a);
                for _ in 0..order {
                    scale /= &a;
                }
                factors.push((beta, order));
            }
            Tok::Star => {
                pos += 1;
            }
            _ => {
                return Err(ParseError::diag(
                    tokens[pos].offset,
                    "expected a denominator factor",
                    &["t", "("],
                ))
            }
        }
    }
    if factors.is_empty() {
        return Err(ParseError::diag(
            end_offset,
            "missing denominator factor",
            &["t", "("],
        ));
    }
    Ok((factors, scale))
}

fn parse_factor_order(
    tokens: &[Token],
    pos: &mut usize,
    end_offset: usize,
) -> Result<u32, ParseError> {
    if tokens.get(*pos).map(|t| &t.tok) != Some(&Tok::Caret) {
        return Ok(1);
    }
    *pos += 1;
    let offset = tokens.get(*pos).map_or(end_offset, |t| t.offset);
    match tokens.get(*pos).map(|t| &t.tok) {
        Some(Tok::Int(v)) if !v.is_zero() => {
            *pos += 1;
            u32::try_from(v.clone()).map_err(|_| {
                ParseError::diag(offset, "factor order out of range", &["positive integer"])
            })
        }
        _ => Err(ParseError::diag(
            offset,
            "factor orders must be positive integers",
            &["positive integer"],
        )),
    }
}

/// Parses a curve given as semicolon-separated expressions or as a JSON
/// array of expression strings. At least two components are required.
pub fn parse_curve(text: &str) -> Result<Vec<LaurentPoly>, ParseError> {
    let trimmed = text.trim();
    let pieces: Vec<String> = if trimmed.starts_with('[') {
        serde_json::from_str::<Vec<String>>(trimmed).map_err(|e| {
            ParseError::diag(0, format!("invalid JSON array: {}", e), &["[\"expr\", ...]"])
        })?
    } else {
        trimmed.split(';').map(|s| s.to_string()).collect()
    };
    if pieces.len() < 2 {
        return Err(ParseError::TooFewComponents {
            found: pieces.len(),
        });
    }
    pieces
        .iter()
        .enumerate()
        .map(|(index, piece)| {
            parse_laurent(piece).map_err(|e| ParseError::Component {
                index,
                source: Box::new(e),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn p(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(pairs.iter().map(|&(e, c)| (e, rat_int(c))))
    }

    #[test]
    fn laurent_basics() {
        assert_eq!(parse_laurent("t^2 + t").unwrap(), p(&[(2, 1), (1, 1)]));
        assert_eq!(parse_laurent("1/t^3").unwrap(), p(&[(-3, 1)]));
        assert_eq!(
            parse_laurent("t^2 - 1 + t^-1").unwrap(),
            p(&[(2, 1), (0, -1), (-1, 1)])
        );
        assert_eq!(parse_laurent("2t^2").unwrap(), p(&[(2, 2)]));
        assert_eq!(parse_laurent("2*t^2").unwrap(), p(&[(2, 2)]));
        assert_eq!(parse_laurent("-t").unwrap(), p(&[(1, -1)]));
        assert_eq!(parse_laurent("5").unwrap(), p(&[(0, 5)]));
        assert_eq!(parse_laurent("1/2").unwrap(), LaurentPoly::constant(rat(1, 2)));
        assert_eq!(
            parse_laurent("1/2t^2").unwrap(),
            LaurentPoly::monomial(2, rat(1, 2))
        );
        assert_eq!(parse_laurent("3/t").unwrap(), p(&[(-1, 3)]));
        assert_eq!(parse_laurent("t^+3").unwrap(), p(&[(3, 1)]));
        // like terms combine
        assert_eq!(parse_laurent("t + t - t^2").unwrap(), p(&[(1, 2), (2, -1)]));
        assert_eq!(parse_laurent("t - t").unwrap(), LaurentPoly::zero());
    }

    #[test]
    fn laurent_rejections() {
        assert!(matches!(
            parse_laurent("1/0"),
            Err(ParseError::DivisionByZero { offset: 2 })
        ));
        assert!(parse_laurent("").is_err());
        assert!(parse_laurent("t t").is_err());
        assert!(parse_laurent("x + 1").is_err());
        assert!(parse_laurent("3/t^-2").is_err());
        assert!(parse_laurent("3/t^0").is_err());
        assert!(parse_laurent("t^").is_err());
        assert!(parse_laurent("2*").is_err());
        let err = parse_laurent("t^2 + + 3").unwrap_err();
        match err {
            ParseError::Diagnostic(d) => assert_eq!(d.offset, 6),
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn render_parse_roundtrip() {
        let samples = [
            p(&[(0, -8)]),
            p(&[(-5, 12), (-3, -16), (-2, -24), (-1, -6), (0, 2)]),
            LaurentPoly::monomial(2, rat(-3, 7)),
            p(&[(1, 1)]),
            LaurentPoly::zero(),
        ];
        for f in &samples {
            assert_eq!(&parse_laurent(&f.to_string()).unwrap(), f);
        }
    }

    #[test]
    fn rational_basics() {
        let rf = parse_rational("1 / (t^1)").unwrap();
        assert_eq!(rf.poles(), &[(rat_int(0), 1)]);

        let rf = parse_rational("1 / ((t-1)^2)").unwrap();
        assert_eq!(rf.poles(), &[(rat_int(1), 2)]);

        let rf = parse_rational("(t^2+1) / (t (t-1))").unwrap();
        assert_eq!(rf.poles(), &[(rat_int(0), 1), (rat_int(1), 1)]);
        assert_eq!(rf.scaled_numerator(), p(&[(2, 1), (0, 1)]));

        // plain Laurent expressions embed with a pole at the origin
        let rf = parse_rational("1/t^3").unwrap();
        assert_eq!(rf.poles(), &[(rat_int(0), 3)]);
        let rf = parse_rational("t^2").unwrap();
        assert!(rf.poles().is_empty());

        // non-monic linear factors contribute a scalar
        let rf = parse_rational("1/(2t - 1)").unwrap();
        assert_eq!(rf.poles(), &[(rat(1, 2), 1)]);
        assert_eq!(rf.scalar(), &rat(1, 2));

        let rf = parse_rational("1/(t+3)").unwrap();
        assert_eq!(rf.poles(), &[(rat_int(-3), 1)]);
    }

    #[test]
    fn rational_rejections() {
        assert!(matches!(
            parse_rational("1/((t^2-1))"),
            Err(ParseError::NonLinearDenominatorFactor { .. })
        ));
        assert!(matches!(
            parse_rational("1/(t^2 - 1)"),
            Err(ParseError::NonLinearDenominatorFactor { .. })
        ));
        assert!(matches!(
            parse_rational("1/(0)"),
            Err(ParseError::DivisionByZero { .. })
        ));
        assert!(parse_rational("1/(t-1)^").is_err());
        assert!(parse_rational("/ (t-1)").is_err());
    }

    #[test]
    fn rational_display_roundtrip() {
        for text in ["1/t", "1/t^2", "1/(t - 1)^2", "(1 + t^2)/(t (t - 1))", "-1/2/(t + 1/2)"] {
            let rf = parse_rational(text).unwrap();
            assert_eq!(parse_rational(&rf.to_string()).unwrap(), rf);
        }
    }

    #[test]
    fn curve_parsing() {
        let c = parse_curve("t; t^2-t; t^2+1").unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c[0], p(&[(1, 1)]));

        let c = parse_curve("t^3; t^3+t^2; t^2-2").unwrap();
        assert_eq!(c.len(), 3);

        let c = parse_curve(r#"["t", "t^2"]"#).unwrap();
        assert_eq!(c, vec![p(&[(1, 1)]), p(&[(2, 1)])]);

        assert_eq!(
            parse_curve("t"),
            Err(ParseError::TooFewComponents { found: 1 })
        );
        match parse_curve("t; y") {
            Err(ParseError::Component { index: 1, .. }) => {}
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn diagnostics_have_bounded_offsets() {
        for text in ["t^2 +", "((", "1/", "t^^2", "9/t^", "t %"] {
            if let Err(e) = parse_laurent(text) {
                if let Some(off) = e.offset() {
                    assert!(off <= text.len(), "offset {} beyond {:?}", off, text);
                }
            }
            if let Err(e) = parse_rational(text) {
                if let Some(off) = e.offset() {
                    assert!(off <= text.len(), "offset {} beyond {:?}", off, text);
                }
            }
        }
    }
}
