use std::cmp::Ordering;
use std::fmt;

/// Square-free product of generators, stored as a bitset (bit `k-1` is `i<k>`).
///
/// The empty set is the unit monomial. Monomials order canonically: by length first, then
/// lexicographically by ascending index sequence, so `1 < i1 < i2 < i1*i2 < i1*i3 < i2*i3`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(u32);

impl Monomial {
    pub const UNIT: Monomial = Monomial(0);

    pub const fn from_bits(bits: u32) -> Self {
        Monomial(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// Generator `i<k>`, `k` counted from 1. Panics unless `1 <= k <= 32`.
    pub fn generator(k: usize) -> Self {
        assert!((1..=32).contains(&k), "generator index {k} out of range");
        Monomial(1 << (k - 1))
    }

    /// Product of the listed generators, or `None` if an index repeats (the product is
    /// then zero) or falls outside `1..=32`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Option<Self> {
        let mut bits = 0u32;
        for k in indices {
            if !(1..=32).contains(&k) {
                return None;
            }
            let bit = 1 << (k - 1);
            if bits & bit != 0 {
                return None;
            }
            bits |= bit;
        }
        Some(Monomial(bits))
    }

    /// Number of generators in the monomial.
    #[allow(clippy::len_without_is_empty)] // is_unit plays that role
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_unit(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, k: usize) -> bool {
        (1..=32).contains(&k) && self.0 & (1 << (k - 1)) != 0
    }

    /// Generator indices in ascending order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |b| bits & (1 << b) != 0).map(|b| b + 1)
    }

    /// Largest generator index, 0 for the unit.
    pub fn max_index(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    pub fn is_disjoint(self, other: Monomial) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: Monomial) -> Monomial {
        Monomial(self.0 | other.0)
    }

    pub fn is_subset(self, other: Monomial) -> bool {
        self.0 & !other.0 == 0
    }

    /// All monomials over `n` generators in canonical order.
    pub fn all(n: usize) -> Vec<Monomial> {
        assert!(n <= 24, "enumerating 2^{n} monomials");
        let mut all: Vec<Monomial> = (0..1u32 << n).map(Monomial).collect();
        all.sort();
        all
    }

    /// Monomials of length exactly `t` over `n` generators, in canonical order.
    pub fn of_length(n: usize, t: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        fn go(start: usize, n: usize, left: usize, acc: u32, out: &mut Vec<Monomial>) {
            if left == 0 {
                out.push(Monomial(acc));
                return;
            }
            for k in start..=n {
                if n - k + 1 < left {
                    break;
                }
                go(k + 1, n, left - 1, acc | 1 << (k - 1), out);
            }
        }
        go(1, n, t, 0, &mut out);
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                // lowest differing index belongs to self
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        for (i, k) in self.indices().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "i{k}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(ix: &[usize]) -> Monomial {
        Monomial::from_indices(ix.iter().copied()).unwrap()
    }

    #[test]
    fn canonical_order() {
        let got = Monomial::all(3);
        let want = vec![
            m(&[]),
            m(&[1]),
            m(&[2]),
            m(&[3]),
            m(&[1, 2]),
            m(&[1, 3]),
            m(&[2, 3]),
            m(&[1, 2, 3]),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn same_length_order_is_lexicographic() {
        // brute force over all pairs of 2-subsets of 1..=5
        let subsets = Monomial::of_length(5, 2);
        for a in &subsets {
            for b in &subsets {
                let sa: Vec<_> = a.indices().collect();
                let sb: Vec<_> = b.indices().collect();
                assert_eq!(a.cmp(b), sa.cmp(&sb), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn repeated_index_is_rejected() {
        assert_eq!(Monomial::from_indices([1, 1]), None);
        assert_eq!(Monomial::from_indices([0]), None);
        assert_eq!(m(&[3, 1]).to_string(), "i1*i3");
        assert_eq!(m(&[2, 7]).max_index(), 7);
    }

    #[test]
    fn length_filtered_enumeration() {
        assert_eq!(Monomial::of_length(4, 2).len(), 6);
        assert_eq!(Monomial::of_length(4, 3).len(), 4);
        assert_eq!(Monomial::of_length(4, 0), vec![Monomial::UNIT]);
        assert!(Monomial::of_length(2, 3).is_empty());
    }
}
