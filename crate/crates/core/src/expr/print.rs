use std::fmt::Write;

use num_traits::{One, Signed};

use crate::element::Element;
use crate::monomial::Monomial;
use crate::scalar::Scalar;

/// Output alphabet for [`print_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Style {
    /// `1/2 - 1/4*i1 + i2*i3`; the form accepted by [`crate::expr::parse`].
    #[default]
    Ascii,
    /// `1/2 − 1/4·ι1 + ι2ι3`; display only.
    Unicode,
}

/// Canonical text form: terms in canonical monomial order joined by ` + ` / ` - `.
pub fn print(p: &Element) -> String {
    print_with(p, Style::Ascii)
}

pub fn print_with(p: &Element, style: Style) -> String {
    if p.is_zero() {
        return "0".to_owned();
    }
    let minus = match style {
        Style::Ascii => "-",
        Style::Unicode => "−",
    };
    let mut out = String::new();
    for (i, (mono, coef)) in p.terms().enumerate() {
        let (negative, magnitude) = match coef {
            Scalar::Rational(r) if r.is_negative() => (true, Scalar::Rational(-r.clone())),
            other => (false, other.clone()),
        };
        match (i, negative) {
            (0, false) => {}
            (0, true) => out.push_str(minus),
            (_, false) => out.push_str(" + "),
            (_, true) => {
                out.push(' ');
                out.push_str(minus);
                out.push(' ');
            }
        }
        let unit_magnitude = matches!(&magnitude, Scalar::Rational(r) if r.is_one());
        if mono.is_unit() {
            write!(out, "{magnitude}").unwrap();
            continue;
        }
        if !unit_magnitude {
            write!(out, "{magnitude}").unwrap();
            out.push_str(match style {
                Style::Ascii => "*",
                Style::Unicode => "·",
            });
        }
        push_monomial(&mut out, mono, style);
    }
    out
}

fn push_monomial(out: &mut String, mono: Monomial, style: Style) {
    for (j, k) in mono.indices().enumerate() {
        match style {
            Style::Ascii => {
                if j > 0 {
                    out.push('*');
                }
                write!(out, "i{k}").unwrap();
            }
            Style::Unicode => write!(out, "ι{k}").unwrap(),
        }
    }
}
