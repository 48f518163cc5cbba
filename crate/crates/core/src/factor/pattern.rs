//! Shape classification of homogeneous quadratic parts.
//!
//! A homogeneous element of degree 2 is a weighted graph on the generators: each monomial
//! `ia*ib` is an edge `a-b`. On at most four generators the graph shape decides whether
//! the element splits into two linear factors.

use std::cmp::Ordering;
use std::fmt;

use crate::element::Element;
use crate::error::AlgebraError;
use crate::monomial::Monomial;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternClass {
    Zero,
    /// `l*ia*ib`
    SingleMonomial,
    /// `al*ia*ib + be*ia*ic`
    SharedGenerator,
    /// `al*ia*ib + si*ic*id`, no generator in common
    TwoDisjoint,
    /// `al*ia*ib + be*ia*ic + ga*ib*ic`
    Triangle,
    /// `al*ia*ib + be*ia*ic + ga*ia*id`
    Star,
    /// `al*ia*ib + be*ia*ic + ga*ib*id`; prime
    Path,
    /// `al*ia*ib + be*ia*ic + ga*ib*id + de*ic*id`; prime iff `al*be*ga*de < 0`
    FourCycle,
    /// Four or more monomials with one generator appearing in three of them.
    GeneratorInThree,
}

impl PatternClass {
    pub fn name(self) -> &'static str {
        match self {
            PatternClass::Zero => "zero",
            PatternClass::SingleMonomial => "single-monomial",
            PatternClass::SharedGenerator => "two-shared-generator",
            PatternClass::TwoDisjoint => "two-disjoint",
            PatternClass::Triangle => "triangle",
            PatternClass::Star => "star",
            PatternClass::Path => "path",
            PatternClass::FourCycle => "four-cycle",
            PatternClass::GeneratorInThree => "generator-in-three-monomials",
        }
    }
}

impl fmt::Display for PatternClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Pattern of a homogeneous quadratic element together with the labeling that realizes it.
///
/// `labels` and `coefficients` depend on the class:
///
/// | class | labels | coefficients |
/// |---|---|---|
/// | single-monomial | `a b` | `ab` |
/// | two-shared-generator | `a b c` | `ab ac` |
/// | two-disjoint | `a b c d` | `ab cd` |
/// | triangle | `a b c` | `ab ac bc` |
/// | star | `a b c d` | `ab ac ad` |
/// | path | `a b c d` | `ab ac bd` |
/// | four-cycle | `a b c d` | `ab ac bd cd` |
/// | generator-in-three | `g x y z` | `gx gy gz xy xz yz` (zeros kept) |
///
/// Labels are generator indices of the input element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degree2Pattern {
    pub class: PatternClass,
    pub labels: Vec<usize>,
    pub coefficients: Vec<Scalar>,
}

impl Degree2Pattern {
    /// Sign of the product of the four cycle coefficients; `None` for other classes.
    pub fn cycle_sign(&self) -> Option<Ordering> {
        if self.class != PatternClass::FourCycle {
            return None;
        }
        let product = self
            .coefficients
            .iter()
            .fold(Scalar::one(), |acc, c| &acc * c);
        Some(product.sign())
    }

    /// Whether the pattern alone makes the element prime.
    pub fn is_prime_pattern(&self) -> bool {
        match self.class {
            PatternClass::Path => true,
            PatternClass::FourCycle => self.cycle_sign() == Some(Ordering::Less),
            _ => false,
        }
    }
}

/// Classifies a homogeneous degree-2 element (or zero) supported on at most four generators.
pub fn classify_degree2(q: &Element) -> Result<Degree2Pattern, AlgebraError> {
    if q.is_zero() {
        return Ok(Degree2Pattern {
            class: PatternClass::Zero,
            labels: Vec::new(),
            coefficients: Vec::new(),
        });
    }
    if !q.is_homogeneous(2) {
        return Err(AlgebraError::Contract(format!(
            "expected a homogeneous element of degree 2, got {q}"
        )));
    }
    let support: Vec<usize> = q.support().indices().collect();
    if support.len() > 4 {
        return Err(AlgebraError::Contract(format!(
            "quadratic part uses {} generators; classification covers at most 4",
            support.len()
        )));
    }
    let edge = |a: usize, b: usize| q.coeff(Monomial::from_indices([a, b]).expect("distinct"));
    let edges: Vec<(usize, usize)> = q
        .terms()
        .map(|(m, _)| {
            let ix: Vec<usize> = m.indices().collect();
            (ix[0], ix[1])
        })
        .collect();
    let valence = |v: usize| edges.iter().filter(|(a, b)| *a == v || *b == v).count();
    let neighbours = |v: usize| -> Vec<usize> {
        let mut out: Vec<usize> = edges
            .iter()
            .filter_map(|&(a, b)| match v {
                _ if a == v => Some(b),
                _ if b == v => Some(a),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out
    };
    let hub = support.iter().copied().find(|&v| valence(v) == 3);
    let pattern = |class, labels: Vec<usize>, pairs: &[(usize, usize)]| Degree2Pattern {
        class,
        coefficients: pairs.iter().map(|&(x, y)| edge(labels[x], labels[y])).collect(),
        labels,
    };

    let result = match edges.len() {
        1 => {
            let (a, b) = edges[0];
            pattern(PatternClass::SingleMonomial, vec![a, b], &[(0, 1)])
        }
        2 => {
            let (a1, b1) = edges[0];
            let (a2, b2) = edges[1];
            if let Some(shared) = [a1, b1].into_iter().find(|v| *v == a2 || *v == b2) {
                let others = neighbours(shared);
                pattern(
                    PatternClass::SharedGenerator,
                    vec![shared, others[0], others[1]],
                    &[(0, 1), (0, 2)],
                )
            } else {
                // canonical order puts the edge holding the smallest index first
                pattern(PatternClass::TwoDisjoint, vec![a1, b1, a2, b2], &[(0, 1), (2, 3)])
            }
        }
        3 => {
            if let Some(g) = hub {
                let o = neighbours(g);
                pattern(PatternClass::Star, vec![g, o[0], o[1], o[2]], &[(0, 1), (0, 2), (0, 3)])
            } else if support.len() == 3 {
                let (x, y, z) = (support[0], support[1], support[2]);
                pattern(PatternClass::Triangle, vec![x, y, z], &[(0, 1), (0, 2), (1, 2)])
            } else {
                let middle: Vec<usize> = support.iter().copied().filter(|&v| valence(v) == 2).collect();
                let (a, b) = (middle[0], middle[1]);
                let leaf = |v: usize, other: usize| {
                    neighbours(v).into_iter().find(|&w| w != other).expect("path leaf")
                };
                let (c, d) = (leaf(a, b), leaf(b, a));
                pattern(PatternClass::Path, vec![a, b, c, d], &[(0, 1), (0, 2), (1, 3)])
            }
        }
        _ => {
            if let Some(g) = hub {
                let o = neighbours(g);
                let mut others: Vec<usize> = support.iter().copied().filter(|&v| v != g).collect();
                others.sort_unstable();
                debug_assert_eq!(o, others);
                pattern(
                    PatternClass::GeneratorInThree,
                    vec![g, others[0], others[1], others[2]],
                    &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
                )
            } else {
                // every vertex has valence two: a 4-cycle a-b-d-c-a
                let a = support[0];
                let nb = neighbours(a);
                let (b, c) = (nb[0], nb[1]);
                let d = support.iter().copied().find(|v| ![a, b, c].contains(v)).expect("4 vertices");
                pattern(PatternClass::FourCycle, vec![a, b, c, d], &[(0, 1), (0, 2), (1, 3), (2, 3)])
            }
        }
    };
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn classify(text: &str) -> Degree2Pattern {
        classify_degree2(&parse(text, 4).unwrap()).unwrap()
    }

    #[test]
    fn path_labeling() {
        let p = classify("i1*i2 + i1*i3 + i2*i4");
        assert_eq!(p.class, PatternClass::Path);
        assert_eq!(p.labels, vec![1, 2, 3, 4]);
        let p = classify("2*i1*i4 + 3*i3*i4 - i2*i3");
        assert_eq!(p.class, PatternClass::Path);
        // middle edge i3*i4; leaves i2 (on 3) and i1 (on 4)
        assert_eq!(p.labels, vec![3, 4, 2, 1]);
        assert_eq!(
            p.coefficients,
            vec![Scalar::from_integer(3), Scalar::from_integer(-1), Scalar::from_integer(2)]
        );
    }

    #[test]
    fn small_shapes() {
        assert_eq!(classify("i1*i2 + i1*i3 + i2*i3").class, PatternClass::Triangle);
        assert_eq!(classify("i1*i2 + i3*i4").class, PatternClass::TwoDisjoint);
        assert_eq!(classify("i1*i4 + i2*i3").labels, vec![1, 4, 2, 3]);
        assert_eq!(classify("i2*i4").class, PatternClass::SingleMonomial);
        let shared = classify("i1*i3 + 5*i3*i4");
        assert_eq!(shared.class, PatternClass::SharedGenerator);
        assert_eq!(shared.labels, vec![3, 1, 4]);
        let star = classify("i1*i4 + i2*i4 + i3*i4");
        assert_eq!(star.class, PatternClass::Star);
        assert_eq!(star.labels, vec![4, 1, 2, 3]);
        assert_eq!(classify_degree2(&Element::zero(4).unwrap()).unwrap().class, PatternClass::Zero);
    }

    #[test]
    fn four_cycles_and_signs() {
        let c = classify("i1*i2 + i1*i3 + i2*i4 - i3*i4");
        assert_eq!(c.class, PatternClass::FourCycle);
        assert_eq!(c.labels, vec![1, 2, 3, 4]);
        assert_eq!(c.cycle_sign(), Some(Ordering::Less));
        assert!(c.is_prime_pattern());
        let c = classify("i1*i2 + i1*i3 + i2*i4 + i3*i4");
        assert_eq!(c.cycle_sign(), Some(Ordering::Greater));
        assert!(!c.is_prime_pattern());
        // cycle 1-3-2-4-1
        let c = classify("i1*i3 + i2*i3 + i2*i4 + i1*i4");
        assert_eq!(c.class, PatternClass::FourCycle);
        assert_eq!(c.labels, vec![1, 3, 4, 2]);
    }

    #[test]
    fn dense_quadratics_have_a_hub() {
        for text in [
            "i1*i2 + i1*i3 + i1*i4 + i2*i3",
            "i1*i2 + i2*i3 + i2*i4 + i3*i4 + i1*i4",
            "i1*i2 + i1*i3 + i1*i4 + i2*i3 + i2*i4 + i3*i4",
        ] {
            assert_eq!(classify(text).class, PatternClass::GeneratorInThree, "{text}");
        }
        let p = classify("i1*i4 + i2*i4 + i3*i4 + i1*i2");
        assert_eq!(p.labels, vec![4, 1, 2, 3]);
    }

    #[test]
    fn rejects_non_quadratic() {
        assert!(classify_degree2(&parse("i1 + i1*i2", 4).unwrap()).is_err());
        assert!(classify_degree2(&parse("i1*i2 + i3*i4 + i5*i6", 6).unwrap()).is_err());
    }
}
