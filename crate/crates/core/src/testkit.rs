//! Verification helpers that do not share code paths with the algorithms they check:
//! seeded random elements, small-grid enumeration, and a brute-force search for linear
//! factor pairs.
//!
//! The brute-force search only ever establishes decomposability. Finding nothing on a grid
//! is evidence of primality, never a proof.

use std::cmp::Ordering;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::element::{Element, MAX_GENERATORS};
use crate::error::AlgebraError;
use crate::factor::{is_prime, PatternClass, Verdict};
use crate::monomial::Monomial;
use crate::scalar::Scalar;

/// Default cap on candidate factor pairs examined by [`brute_force_factor_search`].
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Profile {
    /// Nonzero real part and nonzero imaginary part.
    Invertible,
    /// Zero real part, at least one term.
    NonInvertible,
    /// Every monomial of length `t`.
    Homogeneous(usize),
}

/// Deterministic random element of `P_n`.
///
/// Terms are sparse (at most eight besides the real part) with small rational
/// coefficients. For `Homogeneous(t)` with `t > n` the only such element is zero.
///
/// # Panics
///
/// When `n` is 0 or above [`MAX_GENERATORS`].
pub fn random_element(n: usize, seed: u64, profile: Profile) -> Element {
    assert!((1..=MAX_GENERATORS).contains(&n), "generator count {n} out of range");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = rng.random_range(1..=8usize);
    let mut terms = Vec::with_capacity(count + 1);
    match profile {
        Profile::Invertible => {
            terms.push((Monomial::UNIT, random_coefficient(&mut rng)));
            for _ in 0..count {
                let len = rng.random_range(1..=n);
                terms.push((random_monomial(&mut rng, n, len), random_coefficient(&mut rng)));
            }
        }
        Profile::NonInvertible => {
            for _ in 0..count {
                let len = rng.random_range(1..=n);
                terms.push((random_monomial(&mut rng, n, len), random_coefficient(&mut rng)));
            }
        }
        Profile::Homogeneous(t) if t > n => {}
        Profile::Homogeneous(t) => {
            for _ in 0..count {
                terms.push((random_monomial(&mut rng, n, t), random_coefficient(&mut rng)));
            }
        }
    }
    // repeated monomials add up and may cancel; retry with a derived seed
    let e = Element::from_terms(n, terms).expect("valid random terms");
    let wanted = match profile {
        Profile::Invertible => e.is_invertible() && !e.imag_part().is_zero(),
        Profile::NonInvertible => !e.is_zero(),
        Profile::Homogeneous(t) => t > n || !e.is_zero(),
    };
    if wanted {
        e
    } else {
        random_element(n, seed.wrapping_mul(6_364_136_223_846_793_005).wrapping_add(1), profile)
    }
}

fn random_coefficient(rng: &mut ChaCha8Rng) -> Scalar {
    let mut num = rng.random_range(-6..=5i64);
    if num >= 0 {
        num += 1;
    }
    Scalar::from_ratio(num, rng.random_range(1..=4))
}

/// Uniform subset of `{1..n}` of size `len`.
fn random_monomial(rng: &mut ChaCha8Rng, n: usize, len: usize) -> Monomial {
    let mut chosen: Vec<usize> = (1..=n).collect();
    for i in 0..len {
        let j = rng.random_range(i..n);
        chosen.swap(i, j);
    }
    Monomial::from_indices(chosen[..len].iter().copied()).expect("distinct indices")
}

/// Which monomials an enumerated element may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeFilter {
    Any,
    /// Only monomials of exactly this length.
    Homogeneous(usize),
    /// Only monomials of at least this length.
    AtLeast(usize),
}

/// Finite coefficient grid over `P_n`.
///
/// Zero is always part of the grid, whether listed or not: enumerated elements and factor
/// candidates may leave any coefficient out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub coefficients: Vec<BigRational>,
    pub n: usize,
    pub degree: DegreeFilter,
    /// Cap on candidate factor pairs for the brute-force search.
    pub budget: u64,
}

impl GridSpec {
    pub fn new(coefficients: Vec<BigRational>, n: usize, degree: DegreeFilter) -> Self {
        GridSpec {
            coefficients,
            n,
            degree,
            budget: DEFAULT_BUDGET,
        }
    }

    /// Grid from small integer ratios, e.g. `&[(-1, 2), (1, 1)]`.
    pub fn from_ratios(values: &[(i64, i64)], n: usize, degree: DegreeFilter) -> Self {
        let coefficients = values
            .iter()
            .map(|&(p, q)| BigRational::new(p.into(), q.into()))
            .collect();
        GridSpec::new(coefficients, n, degree)
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    /// Distinct values, zero first, then in listed order.
    pub fn values(&self) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero()];
        for c in &self.coefficients {
            if !out.contains(c) {
                out.push(c.clone());
            }
        }
        out
    }

    /// Monomials admitted by the degree filter, canonically ordered.
    pub fn monomials(&self) -> Vec<Monomial> {
        Monomial::all(self.n)
            .into_iter()
            .filter(|m| match self.degree {
                DegreeFilter::Any => true,
                DegreeFilter::Homogeneous(t) => m.len() == t,
                DegreeFilter::AtLeast(t) => m.len() >= t,
            })
            .collect()
    }

    /// Number of nonzero elements [`GridSpec::elements`] yields; saturates at `u128::MAX`.
    pub fn size(&self) -> u128 {
        let g = self.values().len() as u128;
        let m = self.monomials().len() as u32;
        g.checked_pow(m).map_or(u128::MAX, |total| total - 1)
    }

    /// Every nonzero element whose admitted coefficients all lie in the grid, in odometer
    /// order with the last monomial varying fastest.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        let values = self.values();
        let monomials = self.monomials();
        let scalars: Vec<Scalar> = values.iter().cloned().map(Scalar::from_rational).collect();
        let mut digits = vec![0usize; monomials.len()];
        let mut done = scalars.len() == 1 || monomials.is_empty();
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            // advance first so the all-zero start is skipped
            let mut i = digits.len();
            loop {
                if i == 0 {
                    done = true;
                    return None;
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < scalars.len() {
                    break;
                }
                digits[i] = 0;
            }
            let terms = monomials
                .iter()
                .zip(&digits)
                .map(|(m, &d)| (*m, scalars[d].clone()));
            Some(Element::from_terms(self.n, terms).expect("grid element"))
        })
    }
}

/// Searches the grid for linear `t`, `s` with `t*s = p`.
///
/// `p` must be homogeneous of degree 2. `t` is normalized so that its first nonzero
/// coefficient is 1; its later coefficients and all of `s` range over the grid. Returns
/// the first pair found in enumeration order, verified by exact multiplication.
pub fn brute_force_factor_search(
    p: &Element,
    grid: &GridSpec,
) -> Result<Option<(Element, Element)>, AlgebraError> {
    if p.n() != grid.n {
        return Err(AlgebraError::DimensionMismatch {
            left: p.n(),
            right: grid.n,
        });
    }
    if !p.is_homogeneous(2) {
        return Err(AlgebraError::Contract(format!(
            "brute-force search expects a homogeneous quadratic target, got {p}"
        )));
    }
    if !p.is_rational() {
        // rational factors cannot produce an irrational coefficient
        return Ok(None);
    }
    let n = p.n();
    let values = grid.values();
    let g = values.len() as u128;
    let t_count: u128 = (0..n as u32).map(|k| g.saturating_pow(k)).fold(0, u128::saturating_add);
    let nominal = t_count.saturating_mul(g.saturating_pow(n as u32));
    if nominal > grid.budget as u128 {
        return Err(AlgebraError::Resource(format!(
            "{nominal} candidate pairs exceed the budget of {}",
            grid.budget
        )));
    }
    let problem = ScaledProblem::new(p, &values)?;
    let mut t = vec![0i128; n];
    for lead in 0..n {
        t.iter_mut().for_each(|x| *x = 0);
        t[lead] = problem.scale;
        let free = n - lead - 1;
        let mut digits = vec![0usize; free];
        loop {
            for (slot, &d) in t[lead + 1..].iter_mut().zip(&digits) {
                *slot = problem.values[d];
            }
            let mut s = vec![0i128; n];
            if problem.search_s(&t, &mut s, 0) {
                let to_element = |v: &[i128]| {
                    Element::from_terms(
                        n,
                        v.iter().enumerate().map(|(i, &x)| {
                            let r = BigRational::new(BigInt::from(x), problem.scale.into());
                            (Monomial::generator(i + 1), Scalar::from_rational(r))
                        }),
                    )
                };
                let (te, se) = (to_element(&t)?, to_element(&s)?);
                if te.mul(&se)? == *p {
                    return Ok(Some((te, se)));
                }
                return Err(AlgebraError::ConstructionFailed(format!(
                    "scaled search accepted ({te}) * ({se}) which does not multiply to {p}"
                )));
            }
            if !odometer(&mut digits, values.len()) {
                break;
            }
        }
    }
    Ok(None)
}

fn odometer(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Integer form of `t*s = p`: grid values are scaled by `L` (lcm of their denominators)
/// and the target by `D` (lcm of its denominators), so `t_i s_j + t_j s_i = p_ij` becomes
/// `D (T_i S_j + T_j S_i) = L^2 P_ij`.
struct ScaledProblem {
    scale: i128,
    values: Vec<i128>,
    target_scale: i128,
    /// `L^2 P_ij`, indexed `[i][j]`.
    rhs: Vec<Vec<i128>>,
}

impl ScaledProblem {
    fn new(p: &Element, values: &[BigRational]) -> Result<Self, AlgebraError> {
        let too_large = || AlgebraError::Resource("grid or target too large for the integer search".into());
        let l = values.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let coefficients: Vec<(Monomial, BigRational)> = p
            .terms()
            .map(|(m, c)| (m, c.as_rational().expect("rational target").clone()))
            .collect();
        let d = coefficients.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let scaled: Vec<BigInt> = values.iter().map(|v| v.numer() * (&l / v.denom())).collect();
        let max_value = scaled.iter().map(|v| v.abs()).max().unwrap_or_default().max(l.clone());
        // |D (T_i S_j + T_j S_i)| <= 2 D max^2 must fit comfortably
        let bound = BigInt::from(2) * &d * &max_value * &max_value;
        let mut rhs = vec![vec![0i128; p.n()]; p.n()];
        let l2 = &l * &l;
        for (m, c) in &coefficients {
            let ix: Vec<usize> = m.indices().collect();
            let v = (&l2 * c.numer() * (&d / c.denom())).to_i128().ok_or_else(too_large)?;
            if BigInt::from(v).abs() > BigInt::from(i128::MAX / 4) {
                return Err(too_large());
            }
            rhs[ix[0] - 1][ix[1] - 1] = v;
            rhs[ix[1] - 1][ix[0] - 1] = v;
        }
        if bound > BigInt::from(i128::MAX / 4) {
            return Err(too_large());
        }
        Ok(ScaledProblem {
            scale: l.to_i128().ok_or_else(too_large)?,
            values: scaled.iter().map(|v| v.to_i128().ok_or_else(too_large)).collect::<Result<_, _>>()?,
            target_scale: d.to_i128().ok_or_else(too_large)?,
            rhs,
        })
    }

    /// Depth-first assignment of `s[k..]`, checking every equation `(i, k)`, `i < k`, as
    /// soon as both sides are fixed.
    fn search_s(&self, t: &[i128], s: &mut [i128], k: usize) -> bool {
        if k == s.len() {
            return true;
        }
        for &v in &self.values {
            s[k] = v;
            let consistent = (0..k).all(|i| {
                self.target_scale * (t[i] * s[k] + t[k] * s[i]) == self.rhs[i][k]
            });
            if consistent && self.search_s(t, s, k + 1) {
                return true;
            }
        }
        false
    }
}

/// Outcome of classifying one grid instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceRecord {
    pub element: Element,
    pub verdict: Verdict,
    pub pattern: Option<PatternClass>,
    /// Sign of the cycle coefficient product, for four-cycles.
    pub cycle_sign: Option<Ordering>,
    /// The classifier produced a factorization that multiplies back.
    pub witness_verified: bool,
    pub grid_witness: Option<(Element, Element)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub element: Element,
    pub verdict: Option<Verdict>,
    pub pattern: Option<PatternClass>,
    pub detail: String,
}

/// Result of [`exhaustive_classifier_check`]. Reports over disjoint instance sets merge by
/// concatenation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassifierReport {
    pub records: Vec<InstanceRecord>,
    pub discrepancies: Vec<Discrepancy>,
}

impl ClassifierReport {
    pub fn is_empty(&self) -> bool {
        self.records.is_empty() && self.discrepancies.is_empty()
    }

    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }

    pub fn merge(mut self, other: ClassifierReport) -> ClassifierReport {
        self.records.extend(other.records);
        self.discrepancies.extend(other.discrepancies);
        self
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.records.iter().filter(|r| r.verdict == verdict).count()
    }

    /// Summary counts followed by one line per discrepancy.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "instances: {}\nprime: {}\ndecomposable: {}\ndecomposable over extension: {}\nunsupported: {}\ngrid witnesses: {}\ndiscrepancies: {}\n",
            self.records.len(),
            self.count(Verdict::Prime),
            self.count(Verdict::Decomposable),
            self.count(Verdict::DecomposableOverExtension),
            self.count(Verdict::Unsupported),
            self.records.iter().filter(|r| r.grid_witness.is_some()).count(),
            self.discrepancies.len(),
        );
        for d in &self.discrepancies {
            let verdict = d.verdict.map_or("error".to_owned(), |v| v.to_string());
            let _ = writeln!(out, "DISCREPANCY {}: {verdict}: {}", d.element, d.detail);
        }
        out
    }

    /// One JSON object per discrepancy, newline-terminated.
    pub fn to_json_lines(&self) -> String {
        self.discrepancies
            .iter()
            .map(|d| {
                let record = serde_json::json!({
                    "element": crate::expr::to_json_value(&d.element),
                    "text": d.element.to_string(),
                    "verdict": d.verdict.map(|v| v.to_string()),
                    "pattern": d.pattern.map(|p| p.name()),
                    "detail": d.detail,
                });
                format!("{record}\n")
            })
            .collect()
    }
}

/// Compares [`is_prime`] against [`brute_force_factor_search`] on every nonzero
/// homogeneous quadratic of `P_4` with coefficients in `grid`, using the same grid for the
/// search.
pub fn exhaustive_classifier_check(grid: &GridSpec) -> Result<ClassifierReport, AlgebraError> {
    exhaustive_classifier_check_with(grid, grid)
}

/// As [`exhaustive_classifier_check`], with a separate grid for the factor search.
///
/// A discrepancy is a prime (or over-extension) verdict with a rational grid witness, a
/// decomposable verdict without a verified witness, or an unsupported verdict or error.
pub fn exhaustive_classifier_check_with(
    instances: &GridSpec,
    oracle: &GridSpec,
) -> Result<ClassifierReport, AlgebraError> {
    if instances.n != 4 || instances.degree != DegreeFilter::Homogeneous(2) {
        return Err(AlgebraError::Contract(
            "classifier check runs on homogeneous quadratics of P_4".into(),
        ));
    }
    let mut report = ClassifierReport::default();
    for element in instances.elements() {
        let grid_witness = brute_force_factor_search(&element, oracle)?;
        let verdict = match is_prime(&element) {
            Ok(v) => v,
            Err(e) => {
                report.discrepancies.push(Discrepancy {
                    element,
                    verdict: None,
                    pattern: None,
                    detail: format!("classifier error: {e}"),
                });
                continue;
            }
        };
        let pattern = verdict.pattern.as_ref().map(|p| p.class);
        let cycle_sign = verdict.pattern.as_ref().and_then(|p| p.cycle_sign());
        let witness_verified = verdict.witness.as_ref().is_some_and(|w| w.verified);
        let problem = match verdict.verdict {
            Verdict::Prime | Verdict::DecomposableOverExtension => grid_witness
                .as_ref()
                .map(|(t, s)| format!("grid factorization ({t}) * ({s})")),
            Verdict::Decomposable if !witness_verified => {
                Some("decomposable without a verified witness".to_owned())
            }
            Verdict::Decomposable => None,
            Verdict::Unsupported => Some("unsupported on four generators".to_owned()),
        };
        if let Some(detail) = problem {
            report.discrepancies.push(Discrepancy {
                element: element.clone(),
                verdict: Some(verdict.verdict),
                pattern,
                detail,
            });
        }
        report.records.push(InstanceRecord {
            element,
            verdict: verdict.verdict,
            pattern,
            cycle_sign,
            witness_verified,
            grid_witness,
        });
    }
    Ok(report)
}
