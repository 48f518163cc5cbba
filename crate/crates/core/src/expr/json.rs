//! Machine format:
//!
//! ```json
//! {"n":2,"terms":[{"mono":[1,2],"coef":"1"}]}
//! ```
//!
//! `mono` lists generator indices in ascending order; `coef` is a rational string `"a/b"`
//! (or `"a"`), or `{"p":"a/b","q":"c/e","d":k}` for `p + q*sqrt(k)`. Terms appear in
//! canonical monomial order.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::element::Element;
use crate::error::AlgebraError;
use crate::monomial::Monomial;
use crate::scalar::Scalar;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("invalid element: {0}")]
    Invalid(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ElementRepr {
    n: usize,
    terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermRepr {
    mono: Vec<usize>,
    coef: CoefRepr,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoefRepr {
    Rational(String),
    Quadratic(QuadRepr),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct QuadRepr {
    p: String,
    q: String,
    d: u64,
}

fn repr(p: &Element) -> ElementRepr {
    ElementRepr {
        n: p.n(),
        terms: p
            .terms()
            .map(|(m, c)| TermRepr {
                mono: m.indices().collect(),
                coef: match c {
                    Scalar::Rational(r) => CoefRepr::Rational(r.to_string()),
                    Scalar::Quadratic(q) => CoefRepr::Quadratic(QuadRepr {
                        p: q.rational().to_string(),
                        q: q.radical().to_string(),
                        d: q.radicand(),
                    }),
                },
            })
            .collect(),
    }
}

pub fn to_json(p: &Element) -> String {
    serde_json::to_string(&repr(p)).expect("serializable")
}

/// The JSON form as a [`serde_json::Value`], for embedding in larger documents.
pub fn to_json_value(p: &Element) -> serde_json::Value {
    serde_json::to_value(repr(p)).expect("serializable")
}

pub fn from_json(text: &str) -> Result<Element, JsonError> {
    let repr: ElementRepr = serde_json::from_str(text)?;
    from_repr(repr)
}

pub fn from_json_value(value: serde_json::Value) -> Result<Element, JsonError> {
    from_repr(serde_json::from_value(value)?)
}

fn from_repr(repr: ElementRepr) -> Result<Element, JsonError> {
    let n = repr.n;
    Element::zero(n)?;
    let mut seen = BTreeSet::new();
    let mut terms = Vec::with_capacity(repr.terms.len());
    for term in repr.terms {
        if term.mono.windows(2).any(|w| w[0] >= w[1]) {
            return Err(JsonError::Invalid(format!(
                "monomial {:?} is not strictly ascending",
                term.mono
            )));
        }
        if let Some(&k) = term.mono.iter().find(|&&k| k == 0 || k > n) {
            return Err(AlgebraError::IndexOutOfRange { index: k, n }.into());
        }
        let mono = Monomial::from_indices(term.mono.iter().copied()).expect("validated");
        if !seen.insert(mono) {
            return Err(JsonError::Invalid(format!("duplicate monomial {mono}")));
        }
        let coef = match term.coef {
            CoefRepr::Rational(s) => Scalar::Rational(rational(&s)?),
            CoefRepr::Quadratic(q) => {
                let radical = rational(&q.q)?;
                if radical.is_zero() {
                    return Err(JsonError::Invalid(format!(
                        "quadratic coefficient of {mono} has zero radical part"
                    )));
                }
                Scalar::quadratic(rational(&q.p)?, radical, q.d)?
            }
        };
        if coef.is_zero() {
            return Err(JsonError::Invalid(format!("zero coefficient for {mono}")));
        }
        terms.push((mono, coef));
    }
    Ok(Element::from_terms(n, terms)?)
}

fn rational(text: &str) -> Result<BigRational, JsonError> {
    let bad = || JsonError::Invalid(format!("not a rational number: {text:?}"));
    let (numer, denom) = match text.split_once('/') {
        Some((a, b)) => (a, b),
        None => (text, "1"),
    };
    let numer: BigInt = numer.parse().map_err(|_| bad())?;
    let denom: BigInt = denom.parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(numer, denom))
}
