//! Inversion of elements with nonzero real part.
//!
//! Writing `p = a + u` with `a = Re p` and `u = Im p`, the imaginary part is nilpotent, so
//! `p^-1 = (1/a) * sum_{m=0..M} (-u/a)^m` is a finite sum. `M` is the last exponent for
//! which `u^M` can be nonzero.

use crate::element::Element;
use crate::error::AlgebraError;
use crate::monomial::Monomial;
use crate::scalar::Scalar;

/// Upper bound `M` on the last nonvanishing power of the imaginary part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct NilpotencyBound(pub usize);

/// `min(floor(n / deg(Im p)), number of monomials in Im p)`.
///
/// A product of `m` monomials of length at least `t` is zero once `m*t > n`, and a power
/// `u^m` needs `m` pairwise disjoint monomials of `u`, hence the second bound.
pub fn nilpotency_bound(p: &Element) -> Result<NilpotencyBound, AlgebraError> {
    let imag = p.imag_part();
    let Some(t) = imag.degree().finite() else {
        return Err(AlgebraError::Degenerate(
            "imaginary part is zero; use M = 0".into(),
        ));
    };
    Ok(NilpotencyBound((p.n() / t).min(imag.monomial_count())))
}

pub fn invert(p: &Element) -> Result<Element, AlgebraError> {
    let real = p.real_part();
    let Some(real_inv) = real.inv() else {
        return Err(AlgebraError::NotInvertible);
    };
    let bound = match nilpotency_bound(p) {
        Ok(NilpotencyBound(m)) => m,
        Err(AlgebraError::Degenerate(_)) => 0,
        Err(e) => return Err(e),
    };
    let step = p.imag_part().scale(&-&real_inv)?;
    let mut term = Element::one(p.n())?;
    let mut sum = term.clone();
    for _ in 0..bound {
        term = term.mul(&step)?;
        if term.is_zero() {
            break;
        }
        sum = sum.add(&term)?;
    }
    sum.scale(&real_inv)
}

/// Coefficient of `i_S` in `a^-1` from the explicit formulas for `|S| <= 3`:
///
/// ```text
/// b0     = 1/a0
/// bk     = -ak / a0^2
/// bkl    = (2 ak al - a0 akl) / a0^3
/// bklm   = (2 a0 (ak alm + al akm + am akl) - 6 ak al am - a0^2 aklm) / a0^4
/// ```
pub fn inverse_coeff_closed_form(a: &Element, s: Monomial) -> Result<Scalar, AlgebraError> {
    let a0 = a.real_part();
    if a0.is_zero() {
        return Err(AlgebraError::NotInvertible);
    }
    if s.max_index() > a.n() {
        return Err(AlgebraError::IndexOutOfRange {
            index: s.max_index(),
            n: a.n(),
        });
    }
    let c = |ix: &[usize]| a.coeff(Monomial::from_indices(ix.iter().copied()).expect("distinct"));
    let two = Scalar::from_integer(2);
    let ix: Vec<usize> = s.indices().collect();
    let value = match ix.as_slice() {
        [] => a0.inv().expect("nonzero"),
        [k] => -&c(&[*k]) / &(&a0 * &a0),
        [k, l] => {
            let numer = &(&two * &(c(&[*k]) * c(&[*l]))) - &(&a0 * &c(&[*k, *l]));
            numer / (&a0 * &a0 * &a0)
        }
        [k, l, m] => {
            let pairs = c(&[*k]) * c(&[*l, *m]) + c(&[*l]) * c(&[*k, *m]) + c(&[*m]) * c(&[*k, *l]);
            let numer = &two * &a0 * pairs
                - Scalar::from_integer(6) * c(&[*k]) * c(&[*l]) * c(&[*m])
                - &a0 * &a0 * c(&[*k, *l, *m]);
            numer / (&a0 * &a0 * &a0 * &a0)
        }
        _ => {
            return Err(AlgebraError::Unsupported(format!(
                "closed-form inverse coefficients are available up to three indices, got {}",
                ix.len()
            )))
        }
    };
    Ok(value)
}
