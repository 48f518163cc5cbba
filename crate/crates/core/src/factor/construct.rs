//! Explicit two-factor splittings of quadratic parts, and the linear solve that extends a
//! splitting to the cubic part.
//!
//! Every routine here returns candidate factors only; [`super::factor`] multiplies them
//! back out before anything is reported.

use crate::element::Element;
use crate::error::AlgebraError;
use crate::linalg::{self, Matrix};
use crate::monomial::Monomial;
use crate::scalar::{sqrt_rational, Scalar};

use super::pattern::{Degree2Pattern, PatternClass};

/// Free-parameter pairs tried, in order, by the parameterized splittings.
///
/// Starts with `(0,0), (1,0), (0,1), (1,1), (1,-1), (2,1)` and continues through the
/// integer square of radius `h` for `h = 2, 3, ...`.
pub(crate) fn parameter_pairs() -> impl Iterator<Item = (i64, i64)> {
    const PREFIX: [(i64, i64); 6] = [(0, 0), (1, 0), (0, 1), (1, 1), (1, -1), (2, 1)];
    let rings = (2i64..).flat_map(|h| {
        (-h..=h).flat_map(move |a| (-h..=h).map(move |b| (a, b)))
            .filter(move |(a, b)| a.abs().max(b.abs()) == h)
    });
    PREFIX
        .into_iter()
        .chain(rings.filter(|pair| !PREFIX.contains(pair)))
}

/// Upper bound on parameter pairs examined before giving up.
const PARAMETER_BUDGET: usize = 1_000;

fn linear(n: usize, coefficients: &[(usize, Scalar)]) -> Result<Element, AlgebraError> {
    Element::from_terms(
        n,
        coefficients
            .iter()
            .map(|(k, c)| (Monomial::generator(*k), c.clone())),
    )
}

fn s(v: i64) -> Scalar {
    Scalar::from_integer(v)
}

/// Splits `al*ix*iy + be*ix*iz + ga*iy*iz` as `t*s` with `t = ix + a2*iy + a*iz` and
/// `s = b*ix + b2*iy + b3*iz`, where `(a, b)` are free and
///
/// ```text
/// a2 = (ga - a*al) / (be - 2ab)
/// b2 = (al*be - b*ga - a*b*al) / (be - 2ab)
/// b3 = be - a*b
/// ```
///
/// With `full_support`, parameters are skipped until all three coefficients of `t` are
/// nonzero.
pub(crate) fn triple_split(
    n: usize,
    [x, y, z]: [usize; 3],
    alpha: &Scalar,
    beta: &Scalar,
    gamma: &Scalar,
    full_support: bool,
) -> Result<(Element, Element), AlgebraError> {
    for (a, b) in parameter_pairs().take(PARAMETER_BUDGET) {
        let (sa, sb) = (s(a), s(b));
        let denom = beta - &(s(2) * &sa * &sb);
        if denom.is_zero() {
            continue;
        }
        let a2 = (gamma - &(&sa * alpha)) / &denom;
        if full_support && (a == 0 || a2.is_zero()) {
            continue;
        }
        let b2 = (alpha * beta - &sb * gamma - &sa * &sb * alpha) / &denom;
        let b3 = beta - &(&sa * &sb);
        let t = linear(n, &[(x, Scalar::one()), (y, a2), (z, sa)])?;
        let s = linear(n, &[(x, sb), (y, b2), (z, b3)])?;
        return Ok((t, s));
    }
    Err(AlgebraError::ConstructionFailed(
        "no admissible parameters for the three-generator splitting".into(),
    ))
}

/// `l*ia*ib = (ia + ib + ic) * (l/2)(ia + ib - ic)`.
fn single_monomial_split(
    n: usize,
    a: usize,
    b: usize,
    lambda: &Scalar,
) -> Result<(Element, Element), AlgebraError> {
    let c = (1..=n)
        .find(|k| *k != a && *k != b)
        .ok_or_else(|| AlgebraError::Contract("need a third generator".into()))?;
    let half = lambda / &s(2);
    let t = linear(n, &[(a, Scalar::one()), (b, Scalar::one()), (c, Scalar::one())])?;
    let s = linear(n, &[(a, half.clone()), (b, half.clone()), (c, -half)])?;
    Ok((t, s))
}

/// `al*ia*ib + si*ic*id` with `t = ia + al/(2b) ib + a ic - si/(2ab) id` and
/// `s = b ia + al/2 ib - ab ic + si/(2a) id`, for nonzero `a`, `b`.
fn disjoint_split(
    n: usize,
    [la, lb, lc, ld]: [usize; 4],
    alpha: &Scalar,
    sigma: &Scalar,
) -> Result<(Element, Element), AlgebraError> {
    let (a, b) = parameter_pairs()
        .find(|(a, b)| *a != 0 && *b != 0)
        .expect("infinite parameter list");
    let (sa, sb, two) = (s(a), s(b), s(2));
    let t = linear(
        n,
        &[
            (la, Scalar::one()),
            (lb, alpha / &(&two * &sb)),
            (lc, sa.clone()),
            (ld, -(sigma / &(&two * &sa * &sb))),
        ],
    )?;
    let s = linear(
        n,
        &[
            (la, sb.clone()),
            (lb, alpha / &two),
            (lc, -(&sa * &sb)),
            (ld, sigma / &(&two * &sa)),
        ],
    )?;
    Ok((t, s))
}

/// Quadratic part with a generator `g` in three monomials, labels `g x y z` and
/// coefficients `al be ga de rh si` on `gx gy gz xy xz yz`:
///
/// ```text
/// (al ix + be iy + ga iz) * (ig + cx ix + cy iy + cz iz)
/// cx = (ga de + be rh - al si) / (2 be ga)
/// cy = (ga de - be rh + al si) / (2 al ga)
/// cz = (be rh + al si - ga de) / (2 al be)
/// ```
fn hub_split(n: usize, labels: &[usize], c: &[Scalar]) -> Result<(Element, Element), AlgebraError> {
    let [g, x, y, z] = [labels[0], labels[1], labels[2], labels[3]];
    let (al, be, ga, de, rh, si) = (&c[0], &c[1], &c[2], &c[3], &c[4], &c[5]);
    let two = s(2);
    let gd = ga * de;
    let br = be * rh;
    let as_ = al * si;
    let cx = (&gd + &br - &as_) / (&two * be * ga);
    let cy = (&gd - &br + &as_) / (&two * al * ga);
    let cz = (&br + &as_ - &gd) / (&two * al * be);
    let t = linear(n, &[(x, al.clone()), (y, be.clone()), (z, ga.clone())])?;
    let s = linear(n, &[(g, Scalar::one()), (x, cx), (y, cy), (z, cz)])?;
    Ok((t, s))
}

/// Four-cycle `al ia ib + be ia ic + rh ib id + si ic id` with `al be rh si > 0`.
///
/// With `t = ia + a2 ib + a ic + a4 id`, `s = b ia + b2 ib + b3 ic + b4 id` and
/// `D = be - 2ab`, the system closes exactly when `D^2 = al be si / rh`:
///
/// ```text
/// a2 = -a al / D    a4 = si / D
/// b2 = al (be - ab) / D    b3 = be - ab    b4 = -b si / D
/// ```
///
/// We take `a = 1` and `D = +sqrt(al be si / rh)`, which lies in `Q` or in `Q(sqrt(d))`.
fn cycle_split(n: usize, labels: &[usize], c: &[Scalar]) -> Result<(Element, Element), AlgebraError> {
    let [la, lb, lc, ld] = [labels[0], labels[1], labels[2], labels[3]];
    let (al, be, rh, si) = (&c[0], &c[1], &c[2], &c[3]);
    let ratio = al * be * si / rh;
    let Some(ratio) = ratio.as_rational() else {
        return Err(AlgebraError::Unsupported(
            "four-cycle whose coefficient ratio is itself irrational".into(),
        ));
    };
    let root = sqrt_rational(ratio)?.ok_or_else(|| {
        AlgebraError::Domain("four-cycle with negative coefficient product is prime".into())
    })?;
    if !root.compatible(al) {
        return Err(AlgebraError::Unsupported(
            "four-cycle needs a second, different square root".into(),
        ));
    }
    let a = Scalar::one();
    let b = (be - &root) / &s(2);
    let ab = &a * &b;
    let t = linear(
        n,
        &[(la, Scalar::one()), (lb, -(&a * al / &root)), (lc, a.clone()), (ld, si / &root)],
    )?;
    let s = linear(
        n,
        &[
            (la, b.clone()),
            (lb, al * &(be - &ab) / &root),
            (lc, be - &ab),
            (ld, -(&b * si / &root)),
        ],
    )?;
    Ok((t, s))
}

/// Splits a decomposable quadratic part of an element of `P_4` as `t*s` where `t` has at
/// least three nonzero coefficients.
pub(crate) fn split_quadratic(
    q: &Element,
    pattern: &Degree2Pattern,
) -> Result<(Element, Element), AlgebraError> {
    let n = q.n();
    let l = &pattern.labels;
    let c = &pattern.coefficients;
    match pattern.class {
        PatternClass::SingleMonomial => single_monomial_split(n, l[0], l[1], &c[0]),
        PatternClass::SharedGenerator => {
            triple_split(n, [l[0], l[1], l[2]], &c[0], &c[1], &Scalar::zero(), true)
        }
        PatternClass::Triangle => triple_split(n, [l[0], l[1], l[2]], &c[0], &c[1], &c[2], true),
        PatternClass::TwoDisjoint => disjoint_split(n, [l[0], l[1], l[2], l[3]], &c[0], &c[1]),
        PatternClass::Star => {
            let t = linear(n, &[(l[1], c[0].clone()), (l[2], c[1].clone()), (l[3], c[2].clone())])?;
            Ok((t, Element::generator(n, l[0])?))
        }
        PatternClass::GeneratorInThree => hub_split(n, l, c),
        PatternClass::FourCycle => cycle_split(n, l, c),
        PatternClass::Path | PatternClass::Zero => Err(AlgebraError::Domain(format!(
            "{} quadratic part has no two-factor splitting",
            pattern.class
        ))),
    }
}

/// Finds a homogeneous quadratic `v` with `u*v = w` in `P_4`.
///
/// `u` is linear with at least three nonzero coefficients and `w` is homogeneous cubic (or
/// zero). Multiplication by such a `u` maps the six quadratic monomials onto the four
/// cubic ones with rank 4, so a solution always exists; the one returned sets the free
/// unknowns to zero.
pub fn cubic_cofactor(u: &Element, w: &Element) -> Result<Element, AlgebraError> {
    if u.n() != 4 || w.n() != 4 {
        return Err(AlgebraError::Contract("cofactor solve works in P_4".into()));
    }
    if !u.is_homogeneous(1) || u.monomial_count() < 3 {
        return Err(AlgebraError::Contract(format!(
            "linear factor needs at least three nonzero coefficients, got {u}"
        )));
    }
    if !w.is_zero() && !w.is_homogeneous(3) {
        return Err(AlgebraError::Contract(format!(
            "target must be homogeneous of degree 3, got {w}"
        )));
    }
    let cols = Monomial::of_length(4, 2);
    let rows = Monomial::of_length(4, 3);
    let mut matrix = Matrix::zeros(rows.len(), cols.len());
    for (j, v) in cols.iter().enumerate() {
        for (g, coef) in u.terms() {
            if g.is_disjoint(*v) {
                let i = rows.iter().position(|r| *r == g.union(*v)).expect("cubic monomial");
                matrix.set(i, j, coef.clone());
            }
        }
    }
    let rhs: Vec<Scalar> = rows.iter().map(|r| w.coeff(*r)).collect();
    let solution = linalg::solve(&matrix, &rhs);
    let Some(x) = solution.particular else {
        return Err(AlgebraError::ConstructionFailed(format!(
            "no quadratic v with ({u}) * v = {w}"
        )));
    };
    Element::from_terms(4, cols.into_iter().zip(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;
    use crate::factor::pattern::classify_degree2;

    fn p(text: &str, n: usize) -> Element {
        parse(text, n).unwrap()
    }

    fn nonzero_linear_coefficients(e: &Element) -> usize {
        e.terms().filter(|(m, _)| m.len() == 1).count()
    }

    #[test]
    fn parameter_list_prefix_and_uniqueness() {
        let first: Vec<_> = parameter_pairs().take(8).collect();
        assert_eq!(&first[..6], &[(0, 0), (1, 0), (0, 1), (1, 1), (1, -1), (2, 1)]);
        let many: Vec<_> = parameter_pairs().take(200).collect();
        let mut dedup = many.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), many.len());
    }

    #[test]
    fn three_generator_splitting_uses_first_parameters() {
        // be != 0, so (a, b) = (0, 0): (i1 + ga/be i2)(al i2 + be i3)
        let (t, s) = triple_split(
            3,
            [1, 2, 3],
            &Scalar::from_integer(2),
            &Scalar::from_integer(3),
            &Scalar::from_integer(5),
            false,
        )
        .unwrap();
        assert_eq!(t, p("i1 + 5/3*i2", 3));
        assert_eq!(s, p("2*i2 + 3*i3", 3));
    }

    #[test]
    fn enriched_single_monomial() {
        let q = p("i1*i2", 4);
        let (t, s) = split_quadratic(&q, &classify_degree2(&q).unwrap()).unwrap();
        assert_eq!(t, p("i1 + i2 + i3", 4));
        assert_eq!(s, p("1/2*i1 + 1/2*i2 - 1/2*i3", 4));
        assert_eq!(t.mul(&s).unwrap(), q);
    }

    #[test]
    fn disjoint_pair_with_unit_parameters() {
        let q = p("i1*i2 + i3*i4", 4);
        let (t, s) = split_quadratic(&q, &classify_degree2(&q).unwrap()).unwrap();
        assert_eq!(t, p("i1 + 1/2*i2 + i3 - 1/2*i4", 4));
        assert_eq!(s, p("i1 + 1/2*i2 - i3 + 1/2*i4", 4));
        assert_eq!(t.mul(&s).unwrap(), q);
    }

    #[test]
    fn every_splittable_shape_multiplies_back() {
        for text in [
            "3*i2*i4",
            "i1*i2 - 2*i1*i3",
            "i2*i3 + i2*i4",
            "i1*i2 + i2*i3",
            "i1*i2 + i1*i3 + i2*i3",
            "2*i2*i3 - i2*i4 + 7*i3*i4",
            "i1*i4 - 3*i2*i3",
            "i1*i2 + i1*i3 + i1*i4",
            "i1*i2 + 2*i1*i3 - i1*i4 + 5*i2*i3",
            "i1*i2 + i1*i3 + i1*i4 + i2*i3 + i2*i4 + i3*i4",
            "i1*i2 - i1*i3 + 4*i1*i4 + i2*i3 - 1/3*i2*i4 + i3*i4",
            "i1*i2 + i1*i3 + i2*i4 + i3*i4",
            "2*i1*i2 + 3*i1*i3 + 6*i2*i4 + i3*i4",
            "i1*i2 + i1*i3 + 2*i2*i4 + i3*i4",
        ] {
            let q = p(text, 4);
            let pattern = classify_degree2(&q).unwrap();
            let (t, s) = split_quadratic(&q, &pattern).unwrap();
            assert_eq!(t.mul(&s).unwrap(), q, "{text} via {:?}", pattern.class);
            assert!(nonzero_linear_coefficients(&t) >= 3, "{text}: t = {t}");
            assert!(t.is_homogeneous(1) && s.is_homogeneous(1), "{text}");
        }
    }

    #[test]
    fn irrational_cycle_uses_extension() {
        let q = p("i1*i2 + i1*i3 + 2*i2*i4 + i3*i4", 4);
        let (t, s) = split_quadratic(&q, &classify_degree2(&q).unwrap()).unwrap();
        assert_eq!(t.radicand(), Some(2));
        assert_eq!(t.mul(&s).unwrap(), q);
    }

    #[test]
    fn cofactor_for_top_cubic() {
        let u = p("i1 + i2 + i3", 4);
        let w = p("i1*i2*i3", 4);
        let v = cubic_cofactor(&u, &w).unwrap();
        assert!(v.is_homogeneous(2));
        assert_eq!(u.mul(&v).unwrap(), w);
        // i2*i3 is another valid choice
        assert_eq!(u.mul(&p("i2*i3", 4)).unwrap(), w);
        assert!(cubic_cofactor(&u, &Element::zero(4).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn cofactor_solvable_for_any_cubic() {
        let u = p("2*i1 - i2 + 1/3*i3", 4);
        for k in 0..16u32 {
            let w = Element::from_terms(
                4,
                Monomial::of_length(4, 3)
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| k & (1 << i) != 0)
                    .map(|(i, m)| (m, Scalar::from_integer(i as i64 + 1))),
            )
            .unwrap();
            let v = cubic_cofactor(&u, &w).unwrap();
            assert_eq!(u.mul(&v).unwrap(), w);
        }
    }

    #[test]
    fn cofactor_preconditions() {
        let w = p("i1*i2*i3", 4);
        assert!(matches!(cubic_cofactor(&p("i1 + i2", 4), &w), Err(AlgebraError::Contract(_))));
        assert!(matches!(cubic_cofactor(&p("i1 + i2 + i3", 4), &p("i1*i2", 4)), Err(AlgebraError::Contract(_))));
        assert!(matches!(cubic_cofactor(&p("i1 + i2 + i3", 3), &p("i1*i2*i3", 3)), Err(AlgebraError::Contract(_))));
    }
}
