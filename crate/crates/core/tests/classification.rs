use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pimenov_core::testkit::{random_element, Profile};
use pimenov_core::{factor, is_prime, parse, Element, Monomial, Scalar, Verdict};

fn p(text: &str) -> Element {
    parse(text, 4).unwrap()
}

fn term(bits: u32, c: i64) -> (Monomial, Scalar) {
    (Monomial::from_bits(bits), Scalar::from_integer(c))
}

const AB: u32 = 0b0011;
const AC: u32 = 0b0101;
const BD: u32 = 0b1010;
const CD: u32 = 0b1100;

fn nonzero_small() -> impl Iterator<Item = i64> + Clone {
    (-3..=3).filter(|c| *c != 0)
}

#[test]
fn four_cycle_sign_law() {
    let values = nonzero_small();
    for al in values.clone() {
        for be in values.clone() {
            for ga in values.clone() {
                for de in values.clone() {
                    let x = Element::from_terms(4, [term(AB, al), term(AC, be), term(BD, ga), term(CD, de)])
                        .unwrap();
                    let v = is_prime(&x).unwrap().verdict;
                    if al * be * ga * de < 0 {
                        assert_eq!(v, Verdict::Prime, "{x}");
                    } else {
                        assert_ne!(v, Verdict::Prime, "{x}");
                        let f = factor(&x).unwrap();
                        assert!(f.verified, "{x}");
                    }
                }
            }
        }
    }
}

#[test]
fn path_law() {
    for (al, be, ga) in [(1, 1, 1), (2, -3, 1), (-1, -1, -1), (3, 2, -2)] {
        let x = Element::from_terms(4, [term(AB, al), term(AC, be), term(BD, ga)]).unwrap();
        assert_eq!(is_prime(&x).unwrap().verdict, Verdict::Prime, "{x}");
        for drop in 0..3 {
            let terms: Vec<_> = [term(AB, al), term(AC, be), term(BD, ga)]
                .into_iter()
                .enumerate()
                .filter(|(i, _)| *i != drop)
                .map(|(_, t)| t)
                .collect();
            let y = Element::from_terms(4, terms).unwrap();
            assert_eq!(is_prime(&y).unwrap().verdict, Verdict::Decomposable, "{y}");
        }
    }
}

#[test]
fn higher_terms_keep_prime_patterns_prime() {
    for base in ["i1*i2 + i1*i3 + i2*i4", "i1*i2 + i1*i3 + i2*i4 - i3*i4"] {
        for seed in 0..40 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut x = p(base);
            for m in Monomial::all(4).into_iter().filter(|m| m.len() >= 3) {
                if rng.random_bool(0.5) {
                    let c = Scalar::from_ratio(rng.random_range(-4..=4), rng.random_range(1..=3));
                    x = x.add(&Element::term(4, m, c).unwrap()).unwrap();
                }
            }
            let v = is_prime(&x).unwrap();
            assert_eq!(v.verdict, Verdict::Prime, "{x}");
            let f = factor(&x).unwrap();
            assert!(f.input_is_prime);
            assert_eq!(f.factors, vec![x]);
        }
    }
}

fn permute(x: &Element, perm: &[usize; 4]) -> Element {
    Element::from_terms(
        4,
        x.terms().map(|(m, c)| {
            (Monomial::from_indices(m.indices().map(|k| perm[k - 1])).unwrap(), c.clone())
        }),
    )
    .unwrap()
}

fn permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 1..=4 {
        for b in 1..=4 {
            for c in 1..=4 {
                for d in 1..=4 {
                    let v = [a, b, c, d];
                    if (1..=4).all(|k| v.contains(&k)) {
                        out.push(v);
                    }
                }
            }
        }
    }
    out
}

#[test]
fn verdicts_are_invariant_under_relabeling_and_units() {
    let samples = [
        "i1*i2 + i1*i3 + i2*i4",
        "i1*i2 + i1*i3 + i2*i4 - i3*i4",
        "i1*i2 + i1*i3 + i2*i4 + i3*i4",
        "i1*i2 + i1*i3 + 2*i2*i4 + i3*i4",
        "i1*i2 + i3*i4 + i1*i2*i3",
        "i1*i2 + i1*i3 + i1*i4 + i2*i3 - i2*i4",
        "2*i1*i2*i3 - i1*i2*i4",
    ];
    for text in samples {
        let x = p(text);
        let want = is_prime(&x).unwrap().verdict;
        for perm in permutations() {
            let y = permute(&x, &perm);
            assert_eq!(is_prime(&y).unwrap().verdict, want, "{text} under {perm:?}");
        }
        for seed in 0..20 {
            let u = random_element(4, seed, Profile::Invertible);
            let y = u.mul(&x).unwrap();
            assert_eq!(is_prime(&y).unwrap().verdict, want, "({u}) * ({text})");
        }
    }
}

#[test]
fn random_linear_pairs_never_hit_primes() {
    let primes = [
        p("i1*i2 + i1*i3 + i2*i4"),
        p("i1*i2 + i1*i3 + i2*i4 - i3*i4"),
        p("3*i1*i2 - 1/2*i1*i3 + 2*i2*i4 + i3*i4"),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let linear = |rng: &mut ChaCha8Rng| {
        Element::from_terms(
            4,
            (1..=4).map(|k| {
                (Monomial::generator(k), Scalar::from_ratio(rng.random_range(-6..=6), rng.random_range(1..=4)))
            }),
        )
        .unwrap()
    };
    for _ in 0..20_000 {
        let t = linear(&mut rng);
        let s = linear(&mut rng);
        let product = t.mul(&s).unwrap();
        for x in &primes {
            assert_ne!(&product, x, "({t}) * ({s})");
        }
    }
}

#[test]
fn random_four_generator_factorizations() {
    for seed in 0..300 {
        let x = random_element(4, 5_000 + seed, Profile::NonInvertible);
        let f = factor(&x).unwrap();
        assert!(f.verified, "{x}");
        for g in &f.factors {
            assert_eq!(is_prime(g).unwrap().verdict, Verdict::Prime, "{g} in {x}");
        }
        if f.input_is_prime {
            assert_eq!(is_prime(&x).unwrap().verdict, Verdict::Prime, "{x}");
        }
    }
}

#[test]
fn wide_elements_factor_through_their_support() {
    let x = parse("i3*i8 + i3*i11 + i8*i12 + i11*i12", 12).unwrap();
    let v = is_prime(&x).unwrap();
    assert_eq!(v.verdict, Verdict::Decomposable);
    let f = v.witness.unwrap();
    assert!(f.factors.iter().all(|g| g.n() == 12 && g.support().indices().all(|k| [3, 8, 11, 12].contains(&k))));
}
