use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::element::Element;
use crate::error::AlgebraError;
use crate::monomial::Monomial;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the source text.
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Expected(&'static str),
    UnexpectedChar(char),
    UnexpectedEnd,
    IndexOutOfRange { index: usize, n: usize },
    ZeroDenominator,
    Algebra(AlgebraError),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Expected(what) => write!(f, "expected {what}")?,
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}")?,
            ParseErrorKind::UnexpectedEnd => f.write_str("unexpected end of input")?,
            ParseErrorKind::IndexOutOfRange { index, n } => {
                write!(f, "generator i{index} outside i1..i{n}")?
            }
            ParseErrorKind::ZeroDenominator => f.write_str("zero denominator")?,
            ParseErrorKind::Algebra(e) => write!(f, "{e}")?,
        }
        write!(f, " at position {}", self.position)
    }
}

impl std::error::Error for ParseError {}

/// Parses the text form of an element of `P_n`.
///
/// ```text
/// element := [sign] term (sign term)*
/// term    := coef | coef '*' mono | mono
/// coef    := int ['/' int] | '(' [sign] rational [sign rational '*' 'sqrt' '(' int ')'] ')'
///                          | '(' [sign] rational '*' 'sqrt' '(' int ')' ')'
/// mono    := 'i' int ('*' 'i' int)*
/// ```
///
/// Whitespace is ignored between tokens. A monomial that repeats a generator evaluates to
/// zero, as `ik*ik = 0`.
pub fn parse(text: &str, n: usize) -> Result<Element, ParseError> {
    let mut parser = Parser {
        src: text,
        chars: text.char_indices().collect(),
        at: 0,
        n,
    };
    Element::zero(n).map_err(|e| parser.error_here(ParseErrorKind::Algebra(e)))?;
    let terms = parser.element()?;
    Element::from_terms(n, terms).map_err(|e| ParseError {
        position: 0,
        kind: ParseErrorKind::Algebra(e),
    })
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<(usize, char)>,
    at: usize,
    n: usize,
}

impl Parser<'_> {
    fn offset(&self) -> usize {
        self.chars.get(self.at).map_or(self.src.len(), |(o, _)| *o)
    }

    fn error_here(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            position: self.offset(),
            kind,
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.at).is_some_and(|(_, c)| c.is_whitespace()) {
            self.at += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.at).map(|(_, c)| *c)
    }

    fn eat(&mut self, want: char) -> bool {
        if self.peek() == Some(want) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, want: char, what: &'static str) -> Result<(), ParseError> {
        if self.eat(want) {
            Ok(())
        } else {
            Err(self.unexpected(what))
        }
    }

    fn unexpected(&mut self, what: &'static str) -> ParseError {
        match self.peek() {
            None => self.error_here(ParseErrorKind::UnexpectedEnd),
            Some(c) if what.is_empty() => self.error_here(ParseErrorKind::UnexpectedChar(c)),
            Some(_) => self.error_here(ParseErrorKind::Expected(what)),
        }
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.at += 1;
                Some(false)
            }
            Some('-') => {
                self.at += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn element(&mut self) -> Result<Vec<(Monomial, Scalar)>, ParseError> {
        let mut terms = Vec::new();
        let negative = self.sign().unwrap_or(false);
        terms.extend(self.term(negative)?);
        while self.peek().is_some() {
            let Some(negative) = self.sign() else {
                return Err(self.unexpected("'+' or '-'"));
            };
            terms.extend(self.term(negative)?);
        }
        Ok(terms)
    }

    /// `None` when the monomial repeats a generator.
    fn term(&mut self, negative: bool) -> Result<Option<(Monomial, Scalar)>, ParseError> {
        let (coef, mono) = match self.peek() {
            Some('i') => (Scalar::one(), self.monomial()?),
            Some(c) if c.is_ascii_digit() || c == '(' => {
                let coef = self.coefficient()?;
                let mono = if self.eat('*') {
                    if self.peek() != Some('i') {
                        return Err(self.unexpected("generator such as i1"));
                    }
                    self.monomial()?
                } else {
                    Some(Monomial::UNIT)
                };
                (coef, mono)
            }
            _ => return Err(self.unexpected("term")),
        };
        let coef = if negative { -coef } else { coef };
        Ok(mono.map(|m| (m, coef)))
    }

    fn monomial(&mut self) -> Result<Option<Monomial>, ParseError> {
        let mut bits = Some(Monomial::UNIT);
        loop {
            self.expect('i', "generator such as i1")?;
            let start = self.offset();
            let index = self
                .integer()?
                .to_usize()
                .filter(|k| (1..=self.n).contains(k))
                .ok_or_else(|| ParseError {
                    position: start,
                    kind: ParseErrorKind::IndexOutOfRange {
                        index: self.src[start..self.offset()].parse().unwrap_or(usize::MAX),
                        n: self.n,
                    },
                })?;
            let g = Monomial::generator(index);
            bits = bits.and_then(|m| m.is_disjoint(g).then(|| m.union(g)));
            // a '*' followed by anything but a generator is a syntax error
            let save = self.at;
            if !self.eat('*') {
                break;
            }
            if self.peek() != Some('i') {
                self.at = save + 1;
                return Err(self.unexpected("generator such as i1"));
            }
        }
        Ok(bits)
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.at;
        while self.chars.get(self.at).is_some_and(|(_, c)| c.is_ascii_digit()) {
            self.at += 1;
        }
        if start == self.at {
            return Err(self.unexpected("digits"));
        }
        let from = self.chars[start].0;
        let to = self.offset();
        Ok(self.src[from..to].parse().expect("ascii digits"))
    }

    fn rational(&mut self) -> Result<BigRational, ParseError> {
        let numer = self.integer()?;
        if !self.eat('/') {
            return Ok(BigRational::from_integer(numer));
        }
        self.skip_ws();
        let at = self.offset();
        let denom = self.integer()?;
        if denom.is_zero() {
            return Err(ParseError {
                position: at,
                kind: ParseErrorKind::ZeroDenominator,
            });
        }
        Ok(BigRational::new(numer, denom))
    }

    fn coefficient(&mut self) -> Result<Scalar, ParseError> {
        if !self.eat('(') {
            return Ok(Scalar::Rational(self.rational()?));
        }
        let negative = self.sign().unwrap_or(false);
        let first = self.rational()?;
        let first = if negative { -first } else { first };
        let (rational, radical, radicand) = if self.peek() == Some('*') {
            self.at += 1;
            let d = self.sqrt()?;
            (BigRational::zero(), first, d)
        } else if let Some(negative) = self.sign() {
            let q = self.rational()?;
            self.expect('*', "'*sqrt('")?;
            let d = self.sqrt()?;
            (first, if negative { -q } else { q }, d)
        } else {
            self.expect(')', "')'")?;
            return Ok(Scalar::Rational(first));
        };
        self.expect(')', "')'")?;
        Scalar::quadratic(rational, radical, radicand.0)
            .map_err(|e| ParseError {
                position: radicand.1,
                kind: ParseErrorKind::Algebra(e),
            })
    }

    /// `sqrt(d)`; returns the radicand and its offset.
    fn sqrt(&mut self) -> Result<(u64, usize), ParseError> {
        self.skip_ws();
        for c in "sqrt".chars() {
            if self.chars.get(self.at).map(|(_, x)| *x) != Some(c) {
                return Err(self.unexpected("'sqrt'"));
            }
            self.at += 1;
        }
        self.expect('(', "'('")?;
        self.skip_ws();
        let at = self.offset();
        let d = self.integer()?.to_u64().ok_or(ParseError {
            position: at,
            kind: ParseErrorKind::Expected("radicand below 2^64"),
        })?;
        self.expect(')', "')'")?;
        Ok((d, at))
    }
}
