//! Fixed inputs shared by the benchmarks.

use pimenov_core::testkit::{random_element, Profile};
use pimenov_core::{parse, Element};

/// Seeded invertible elements of `P_n`.
pub fn invertible_batch(n: usize, count: u64) -> Vec<Element> {
    (0..count).map(|seed| random_element(n, seed, Profile::Invertible)).collect()
}

/// Elements of `P_4` exercising each factorization route.
pub fn factorization_inputs() -> Vec<(&'static str, Element)> {
    [
        ("single-monomial", "i1*i2"),
        ("two-disjoint", "i1*i2 + i3*i4"),
        ("hub", "i1*i2 + i1*i3 + i1*i4 + i2*i3 + i2*i4 + i3*i4"),
        ("rational-cycle", "i1*i2 + i1*i3 + i2*i4 + i3*i4"),
        ("irrational-cycle", "i1*i2 + i1*i3 + 2*i2*i4 + i3*i4"),
        ("cubic-leading", "i1*i2*i3 + i2*i3*i4 + 3*i1*i2*i3*i4"),
        ("full", "2*i1*i2 - i1*i3 + i2*i3 + i3*i4 + 5*i1*i2*i4 - i1*i2*i3*i4"),
    ]
    .into_iter()
    .map(|(name, text)| (name, parse(text, 4).expect("fixture parses")))
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_valid() {
        assert_eq!(invertible_batch(5, 3).len(), 3);
        for (name, x) in factorization_inputs() {
            assert!(pimenov_core::factor(&x).unwrap().verified, "{name}");
        }
    }
}
