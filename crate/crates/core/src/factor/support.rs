use crate::element::Element;
use crate::error::AlgebraError;
use crate::monomial::Monomial;

/// Order-preserving relabeling from `P_m` (the used generators) back into `P_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportMap {
    /// `generators[j]` is the original index of reduced generator `j + 1`.
    pub generators: Vec<usize>,
    pub original_n: usize,
}

impl SupportMap {
    fn map_monomial(&self, m: Monomial) -> Monomial {
        Monomial::from_indices(m.indices().map(|k| self.generators[k - 1])).expect("injective map")
    }

    /// Moves an element of the reduced algebra back to the original one.
    pub fn lift(&self, e: &Element) -> Result<Element, AlgebraError> {
        if e.n() != self.generators.len() {
            return Err(AlgebraError::DimensionMismatch {
                left: e.n(),
                right: self.generators.len(),
            });
        }
        Element::from_terms(
            self.original_n,
            e.terms().map(|(m, c)| (self.map_monomial(m), c.clone())),
        )
    }
}

/// Generators used by at least one monomial, ascending.
pub fn support_generators(p: &Element) -> Vec<usize> {
    p.support().indices().collect()
}

/// Rewrites `p` over its support only: the used generators become `i1..im` in order.
///
/// A scalar has empty support and is placed in `P_1`.
pub fn reduce_support(p: &Element) -> Result<(Element, SupportMap), AlgebraError> {
    let generators = support_generators(p);
    let m = generators.len().max(1);
    let position = |k: usize| generators.binary_search(&k).expect("in support") + 1;
    let reduced = Element::from_terms(
        m,
        p.terms().map(|(mono, c)| {
            let relabeled = Monomial::from_indices(mono.indices().map(position)).expect("distinct");
            (relabeled, c.clone())
        }),
    )?;
    Ok((
        reduced,
        SupportMap {
            generators,
            original_n: p.n(),
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    #[test]
    fn relabels_in_order() {
        let x = parse("i2*i5 + i5*i7", 7).unwrap();
        assert_eq!(support_generators(&x), vec![2, 5, 7]);
        let (reduced, map) = reduce_support(&x).unwrap();
        assert_eq!(reduced, parse("i1*i2 + i2*i3", 3).unwrap());
        assert_eq!(map.lift(&reduced).unwrap(), x);
    }

    #[test]
    fn scalars_and_dense_elements() {
        let (r, map) = reduce_support(&parse("3", 5).unwrap()).unwrap();
        assert_eq!(r, parse("3", 1).unwrap());
        assert!(map.generators.is_empty());
        let x = parse("1 + i1 + i2*i3", 3).unwrap();
        assert_eq!(reduce_support(&x).unwrap().0, x);
    }
}
