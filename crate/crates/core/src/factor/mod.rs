//! Primality and prime factorization.
//!
//! An element is prime when it is nonzero, not invertible, and not a product of two
//! non-invertible elements. Every linear element (degree 1) is prime. On at most three
//! generators nothing else is. On four generators an element of degree at least 2 is prime
//! exactly when its quadratic part is a path `al ia ib + be ia ic + ga ib id` or a
//! four-cycle `al ia ib + be ia ic + ga ib id + de ic id` with `al be ga de < 0`.
//!
//! Primality is insensitive to unused generators, so elements of larger algebras are
//! handled after relabeling their support; beyond four used generators only the linear
//! case is decided.
//!
//! Factorizations are not unique. [`factor`] returns one, built from explicit splittings,
//! and never reports it without multiplying it back out.

mod construct;
mod pattern;
mod support;

use std::cmp::Ordering;
use std::fmt;

use crate::element::{Degree, Element};
use crate::error::AlgebraError;
use crate::monomial::Monomial;
use crate::scalar::Scalar;

pub use construct::cubic_cofactor;
pub use pattern::{classify_degree2, Degree2Pattern, PatternClass};
pub use support::{reduce_support, support_generators, SupportMap};

/// Field over which factors are expressed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    /// `Q(sqrt(d))`
    QuadraticExtension(u64),
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => f.write_str("rational"),
            Field::QuadraticExtension(d) => write!(f, "sqrt({d})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationResult {
    /// Prime factors, ordered by descending degree and then by [`Element::canonical_cmp`].
    pub factors: Vec<Element>,
    pub field: Field,
    /// Product of the factors equals the input and no factor is invertible.
    pub verified: bool,
    /// The input was already prime; `factors` is the input itself.
    pub input_is_prime: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Prime,
    Decomposable,
    /// Prime over `Q` but splits over a real quadratic field.
    DecomposableOverExtension,
    /// Support exceeds four generators and the degree is at least 2.
    Unsupported,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Prime => "prime",
            Verdict::Decomposable => "decomposable",
            Verdict::DecomposableOverExtension => "decomposable-over-extension",
            Verdict::Unsupported => "unsupported",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimalityVerdict {
    pub verdict: Verdict,
    /// Verified factorization backing every decomposable verdict.
    pub witness: Option<FactorizationResult>,
    /// Quadratic-part pattern, when the verdict depended on it.
    pub pattern: Option<Degree2Pattern>,
    pub reason: String,
}

fn check_domain(p: &Element) -> Result<(), AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::Domain("zero is neither prime nor decomposable".into()));
    }
    if p.is_invertible() {
        return Err(AlgebraError::Domain(format!(
            "{p} is invertible; primality concerns non-invertible elements"
        )));
    }
    Ok(())
}

pub fn is_prime(p: &Element) -> Result<PrimalityVerdict, AlgebraError> {
    check_domain(p)?;
    if p.degree() == Degree::Finite(1) {
        return Ok(PrimalityVerdict {
            verdict: Verdict::Prime,
            witness: None,
            pattern: None,
            reason: "degree 1".into(),
        });
    }
    let (reduced, _) = reduce_support(p)?;
    let m = reduced.n();
    if m > 4 {
        return Ok(PrimalityVerdict {
            verdict: Verdict::Unsupported,
            witness: None,
            pattern: None,
            reason: format!("degree >= 2 on {m} generators; decided only up to 4"),
        });
    }
    if m < 4 {
        return Ok(PrimalityVerdict {
            verdict: Verdict::Decomposable,
            witness: Some(factor(p)?),
            pattern: None,
            reason: format!("degree >= 2 on {m} generators"),
        });
    }
    let pattern = classify_degree2(&p.homogeneous_component(2)?)?;
    if pattern.is_prime_pattern() {
        let reason = match pattern.class {
            PatternClass::FourCycle => "four-cycle pattern, coefficient product < 0".to_owned(),
            class => format!("{class} pattern"),
        };
        return Ok(PrimalityVerdict {
            verdict: Verdict::Prime,
            witness: None,
            pattern: Some(pattern),
            reason,
        });
    }
    let witness = factor(p)?;
    let (verdict, reason) = match (pattern.class, witness.field) {
        (PatternClass::FourCycle, Field::QuadraticExtension(d)) => (
            Verdict::DecomposableOverExtension,
            format!("four-cycle pattern, coefficient product > 0, splits over Q(sqrt({d}))"),
        ),
        (PatternClass::FourCycle, Field::Rational) => (
            Verdict::Decomposable,
            "four-cycle pattern, coefficient product > 0".to_owned(),
        ),
        (class, _) => (Verdict::Decomposable, format!("{class} pattern")),
    };
    Ok(PrimalityVerdict {
        verdict,
        witness: Some(witness),
        pattern: Some(pattern),
        reason,
    })
}

/// Factors a nonzero non-invertible element into primes.
///
/// Elements of `P_n` with `n > 4` are factored through their support, which must span at
/// most four generators unless the element is linear.
pub fn factor(p: &Element) -> Result<FactorizationResult, AlgebraError> {
    check_domain(p)?;
    let (factors, input_is_prime) = if p.degree() == Degree::Finite(1) {
        (vec![p.clone()], true)
    } else if p.n() <= 4 {
        factor_small(p)?
    } else {
        let (reduced, map) = reduce_support(p)?;
        if reduced.n() > 4 {
            return Err(AlgebraError::Unsupported(format!(
                "factorization of degree >= 2 elements on {} generators",
                reduced.n()
            )));
        }
        let (factors, prime) = factor_small(&reduced)?;
        let lifted = factors
            .iter()
            .map(|f| map.lift(f))
            .collect::<Result<Vec<_>, _>>()?;
        (lifted, prime)
    };
    finish(p, factors, input_is_prime)
}

fn finish(
    p: &Element,
    mut factors: Vec<Element>,
    input_is_prime: bool,
) -> Result<FactorizationResult, AlgebraError> {
    factors.sort_by(|a, b| b.degree().cmp(&a.degree()).then_with(|| a.canonical_cmp(b)));
    let field = factors
        .iter()
        .find_map(Element::radicand)
        .map_or(Field::Rational, Field::QuadraticExtension);
    let mut result = FactorizationResult {
        factors,
        field,
        verified: false,
        input_is_prime,
    };
    if !verify_factorization(p, &result) {
        return Err(AlgebraError::ConstructionFailed(format!(
            "factors of {p} do not multiply back"
        )));
    }
    result.verified = true;
    Ok(result)
}

/// True when the factors multiply to `p` exactly and none of them is invertible.
pub fn verify_factorization(p: &Element, f: &FactorizationResult) -> bool {
    if f.factors.is_empty() || f.factors.iter().any(|x| x.n() != p.n() || x.is_invertible()) {
        return false;
    }
    let mut product = f.factors[0].clone();
    for x in &f.factors[1..] {
        match product.mul(x) {
            Ok(next) => product = next,
            Err(_) => return false,
        }
    }
    product == *p
}

/// Factors an element of `P_n`, `n <= 4`, of degree at least 1. The flag reports a prime
/// input.
fn factor_small(p: &Element) -> Result<(Vec<Element>, bool), AlgebraError> {
    debug_assert!(p.n() <= 4 && !p.is_zero() && !p.is_invertible());
    if p.degree() == Degree::Finite(1) {
        return Ok((vec![p.clone()], true));
    }
    match p.n() {
        2 => Ok((split_monomial(p)?, false)),
        3 => Ok((factor_three(p)?, false)),
        4 => factor_four(p),
        n => Err(AlgebraError::Contract(format!("no element of degree >= 2 in P_{n}"))),
    }
}

/// `l * ik1 * ik2 * ...` as `(l ik1) * ik2 * ...`.
fn split_monomial(p: &Element) -> Result<Vec<Element>, AlgebraError> {
    let mut terms = p.terms();
    let (Some((mono, coef)), None) = (terms.next(), terms.next()) else {
        return Err(AlgebraError::Contract(format!("{p} is not a single monomial")));
    };
    let mut factors = mono
        .indices()
        .map(|k| Element::generator(p.n(), k))
        .collect::<Result<Vec<_>, _>>()?;
    factors[0] = factors[0].scale(coef)?;
    Ok(factors)
}

/// Degree >= 2 in `P_3`: `f + de i1 i2 i3` with `f = t*s`, `t = i1 + ...`, becomes
/// `t * (s + de i2 i3)`.
fn factor_three(p: &Element) -> Result<Vec<Element>, AlgebraError> {
    let f = p.homogeneous_component(2)?;
    if f.is_zero() {
        return split_monomial(p);
    }
    let c = |a: usize, b: usize| f.coeff(Monomial::from_indices([a, b]).expect("distinct"));
    let (t, s) = construct::triple_split(3, [1, 2, 3], &c(1, 2), &c(1, 3), &c(2, 3), false)?;
    let top = Element::term(3, Monomial::from_bits(0b110), p.coeff(Monomial::from_bits(0b111)))?;
    Ok(vec![t, s.add(&top)?])
}

/// Degree >= 2 in `P_4`, written `q + r + th i1 i2 i3 i4` by degree.
///
/// With `q = t*s` where `t` has three nonzero coefficients, solve `t*z = r` and pick a
/// generator `ik` with coefficient `tk != 0` in `t`; then
/// `p = t * (s + z + (th/tk) * (product of the other three generators))`.
fn factor_four(p: &Element) -> Result<(Vec<Element>, bool), AlgebraError> {
    let q = p.homogeneous_component(2)?;
    let r = p.homogeneous_component(3)?;
    let theta = p.coeff(Monomial::from_bits(0b1111));
    let pattern = classify_degree2(&q)?;
    if pattern.is_prime_pattern() {
        return Ok((vec![p.clone()], true));
    }
    if q.is_zero() {
        if r.is_zero() {
            return Ok((split_monomial(p)?, false));
        }
        let (reduced, map) = reduce_support(p)?;
        if reduced.n() < 4 {
            let (factors, prime) = factor_small(&reduced)?;
            let lifted = factors.iter().map(|f| map.lift(f)).collect::<Result<_, _>>()?;
            return Ok((lifted, prime));
        }
        return factor_cubic_leading(p, &r, &theta);
    }
    let (t, s) = construct::split_quadratic(&q, &pattern)?;
    let cofactor = s.add(&completion(&t, &r, &theta)?)?;
    Ok((vec![t, cofactor], false))
}

/// `z + (th/tk) * (other generators)` with `t*z = r`.
fn completion(t: &Element, r: &Element, theta: &Scalar) -> Result<Element, AlgebraError> {
    let z = cubic_cofactor(t, r)?;
    let (g, tk) = t
        .terms()
        .next()
        .ok_or_else(|| AlgebraError::Contract("zero linear factor".into()))?;
    let others = Monomial::from_bits(0b1111 & !g.bits());
    z.add(&Element::term(4, others, theta / tk)?)
}

/// `q = 0`, `r != 0`, full support: `p = t * (z + (th/tk) ...)` and the cofactor, now of
/// degree 2, is factored in turn. Linear factors are tried in a fixed order and the first
/// that keeps every factor rational wins.
fn factor_cubic_leading(
    p: &Element,
    r: &Element,
    theta: &Scalar,
) -> Result<(Vec<Element>, bool), AlgebraError> {
    const CANDIDATES: [u32; 5] = [0b0111, 0b1011, 0b1101, 0b1110, 0b1111];
    let mut fallback = None;
    for bits in CANDIDATES {
        let t = Element::from_terms(
            4,
            Monomial::from_bits(bits).indices().map(|k| (Monomial::generator(k), Scalar::one())),
        )?;
        let cofactor = completion(&t, r, theta)?;
        let (mut rest, _) = factor_small(&cofactor)?;
        rest.insert(0, t);
        if rest.iter().all(Element::is_rational) || !p.is_rational() {
            return Ok((rest, false));
        }
        fallback.get_or_insert(rest);
    }
    Ok((fallback.expect("at least one candidate"), false))
}

impl FactorizationResult {
    /// Renders as `(f1) * (f2) * ...`.
    pub fn product_string(&self) -> String {
        self.factors
            .iter()
            .map(|f| format!("({f})"))
            .collect::<Vec<_>>()
            .join(" * ")
    }
}

impl PartialOrd for Field {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Field {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Field::Rational, Field::Rational) => Ordering::Equal,
            (Field::Rational, _) => Ordering::Less,
            (_, Field::Rational) => Ordering::Greater,
            (Field::QuadraticExtension(a), Field::QuadraticExtension(b)) => a.cmp(b),
        }
    }
}
