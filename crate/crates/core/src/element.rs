//! Elements of the Pimenov algebra `P_n`: the commutative unital algebra generated by
//! `i1..in` subject to `ik*ik = 0` and `ik*il = il*ik`.
//!
//! Every element has a unique standard form: a scalar plus a combination of square-free
//! monomials. [`Element`] stores that form directly as a map from [`Monomial`] to nonzero
//! [`Scalar`], so structural equality is algebraic equality.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use crate::error::AlgebraError;
use crate::monomial::Monomial;
use crate::scalar::Scalar;

/// Largest supported generator count.
pub const MAX_GENERATORS: usize = 24;

/// Degree of an element: the shortest monomial length in its standard form.
///
/// Zero for elements with a nonzero real part and [`Degree::Infinite`] for the zero element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    Finite(usize),
    Infinite,
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::Infinite => None,
        }
    }
}

impl Add for Degree {
    type Output = Degree;

    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::Infinite,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Finite(d) => write!(f, "{d}"),
            Degree::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    n: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

fn check_n(n: usize) -> Result<(), AlgebraError> {
    if (1..=MAX_GENERATORS).contains(&n) {
        Ok(())
    } else {
        Err(AlgebraError::GeneratorCount {
            n,
            max: MAX_GENERATORS,
        })
    }
}

impl Element {
    pub fn zero(n: usize) -> Result<Self, AlgebraError> {
        check_n(n)?;
        Ok(Element {
            n,
            terms: BTreeMap::new(),
        })
    }

    pub fn one(n: usize) -> Result<Self, AlgebraError> {
        Self::constant(n, Scalar::one())
    }

    pub fn constant(n: usize, value: Scalar) -> Result<Self, AlgebraError> {
        Self::term(n, Monomial::UNIT, value)
    }

    /// The generator `i<k>` of `P_n`.
    pub fn generator(n: usize, k: usize) -> Result<Self, AlgebraError> {
        check_n(n)?;
        if !(1..=n).contains(&k) {
            return Err(AlgebraError::IndexOutOfRange { index: k, n });
        }
        Self::term(n, Monomial::generator(k), Scalar::one())
    }

    /// A single term `coef * mono`.
    pub fn term(n: usize, mono: Monomial, coef: Scalar) -> Result<Self, AlgebraError> {
        Self::from_terms(n, [(mono, coef)])
    }

    /// Sums the given terms; like monomials combine and zero results are dropped.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        check_n(n)?;
        let mut out = Element {
            n,
            terms: BTreeMap::new(),
        };
        let mut radicand = None;
        for (mono, coef) in terms {
            if mono.max_index() > n {
                return Err(AlgebraError::IndexOutOfRange {
                    index: mono.max_index(),
                    n,
                });
            }
            if let Some(d) = coef.radicand() {
                match radicand {
                    Some(r) if r != d => {
                        return Err(AlgebraError::FieldMismatch { left: r, right: d })
                    }
                    _ => radicand = Some(d),
                }
            }
            out.accumulate(mono, coef);
        }
        Ok(out)
    }

    fn accumulate(&mut self, mono: Monomial, coef: Scalar) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(slot) => {
                slot.insert(coef);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get() + &coef;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    /// Generator count `n` of the ambient algebra.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Terms in canonical monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &Scalar)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    /// Coefficient of `mono` (zero if absent).
    pub fn coeff(&self, mono: Monomial) -> Scalar {
        self.terms.get(&mono).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of monomials in the standard form.
    pub fn monomial_count(&self) -> usize {
        self.terms.len()
    }

    /// Radicand shared by the quadratic coefficients, `None` if all are rational.
    pub fn radicand(&self) -> Option<u64> {
        self.terms.values().find_map(Scalar::radicand)
    }

    pub fn is_rational(&self) -> bool {
        self.radicand().is_none()
    }

    /// Union of the generators used by any stored monomial.
    pub fn support(&self) -> Monomial {
        self.terms
            .keys()
            .fold(Monomial::UNIT, |acc, m| acc.union(*m))
    }

    fn check_compatible(&self, other: &Element) -> Result<(), AlgebraError> {
        if self.n != other.n {
            return Err(AlgebraError::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        match (self.radicand(), other.radicand()) {
            (Some(a), Some(b)) if a != b => Err(AlgebraError::FieldMismatch { left: a, right: b }),
            _ => Ok(()),
        }
    }

    pub fn add(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(*m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        Element {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    /// `lambda * self`.
    pub fn scale(&self, lambda: &Scalar) -> Result<Element, AlgebraError> {
        if let (Some(a), Some(b)) = (self.radicand(), lambda.radicand()) {
            if a != b {
                return Err(AlgebraError::FieldMismatch { left: a, right: b });
            }
        }
        if lambda.is_zero() {
            return Element::zero(self.n);
        }
        Ok(Element {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c * lambda))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        })
    }

    /// Product in `P_n`: monomials with a common generator annihilate, disjoint ones merge.
    pub fn mul(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check_compatible(other)?;
        let mut out = Element {
            n: self.n,
            terms: BTreeMap::new(),
        };
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma.is_disjoint(*mb) {
                    out.accumulate(ma.union(*mb), ca * cb);
                }
            }
        }
        Ok(out)
    }

    /// `self^m`, with `self^0 = 1`.
    pub fn power(&self, m: usize) -> Element {
        let mut acc = Element::one(self.n).expect("valid n");
        for _ in 0..m {
            if acc.is_zero() {
                break;
            }
            acc = acc.mul(self).expect("same algebra");
        }
        acc
    }

    /// Coefficient of the unit monomial.
    pub fn real_part(&self) -> Scalar {
        self.coeff(Monomial::UNIT)
    }

    /// Everything except the real part.
    pub fn imag_part(&self) -> Element {
        let mut out = self.clone();
        out.terms.remove(&Monomial::UNIT);
        out
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .next()
            .map_or(Degree::Infinite, |m| Degree::Finite(m.len()))
    }

    /// Sum of the terms of length exactly `t`.
    pub fn homogeneous_component(&self, t: usize) -> Result<Element, AlgebraError> {
        if t > self.n {
            return Err(AlgebraError::DegreeOutOfRange { t, n: self.n });
        }
        Ok(Element {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.len() == t)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        })
    }

    /// True when every stored monomial has length `t` (and the element is nonzero).
    pub fn is_homogeneous(&self, t: usize) -> bool {
        !self.is_zero() && self.terms.keys().all(|m| m.len() == t)
    }

    pub fn is_invertible(&self) -> bool {
        !self.real_part().is_zero()
    }

    /// Re-embeds the element in `P_m` for `m` at least its largest used index.
    pub fn with_generator_count(&self, m: usize) -> Result<Element, AlgebraError> {
        check_n(m)?;
        let top = self.support().max_index();
        if top > m {
            return Err(AlgebraError::IndexOutOfRange { index: top, n: m });
        }
        Ok(Element {
            n: m,
            terms: self.terms.clone(),
        })
    }

    /// Total order used for deterministic listings: term sequences compared monomial by
    /// monomial in canonical order; on a shared monomial the larger coefficient comes first.
    pub fn canonical_cmp(&self, other: &Element) -> Ordering {
        let mut lhs = self.terms.iter();
        let mut rhs = other.terms.iter();
        loop {
            match (lhs.next(), rhs.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((ma, ca)), Some((mb, cb))) => {
                    let by_coefficient = if ca.compatible(cb) {
                        (cb - ca).sign()
                    } else {
                        ca.to_string().cmp(&cb.to_string())
                    };
                    match ma.cmp(mb).then(by_coefficient) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
            }
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element(n={}, {})", self.n, crate::expr::print(self))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::expr::print(self))
    }
}
