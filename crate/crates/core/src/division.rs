//! Solving `a*x = b`.
//!
//! Multiplication by `a` is linear on the `2^n`-dimensional coefficient space, so the full
//! solution set is found by exact elimination on that operator: a particular solution plus
//! the annihilator `{x : a*x = 0}`.

use crate::element::Element;
use crate::error::AlgebraError;
use crate::linalg::{self, Matrix};
use crate::monomial::Monomial;
use crate::scalar::Scalar;

/// Largest generator count for which the dense `2^n x 2^n` operator is materialized.
pub const MATRIX_GENERATOR_CAP: usize = 10;

/// Matrix of `x -> a*x` in the canonical monomial basis.
///
/// Column `j` holds the coefficients of `a * basis[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MulOperatorMatrix {
    basis: Vec<Monomial>,
    matrix: Matrix,
}

impl MulOperatorMatrix {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        self.matrix.get(row, col)
    }

    /// Matrix-vector product.
    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim());
        (0..self.dim())
            .map(|r| {
                (0..self.dim())
                    .filter(|&c| !x[c].is_zero())
                    .fold(Scalar::zero(), |acc, c| &acc + &(self.get(r, c) * &x[c]))
            })
            .collect()
    }

    /// Coefficient vector of `x` in this basis.
    pub fn coordinates(&self, x: &Element) -> Vec<Scalar> {
        self.basis.iter().map(|m| x.coeff(*m)).collect()
    }

    pub fn rank(&self) -> usize {
        linalg::solve(&self.matrix, &vec![Scalar::zero(); self.dim()]).rank
    }
}

pub fn mul_operator_matrix(a: &Element) -> Result<MulOperatorMatrix, AlgebraError> {
    let n = a.n();
    if n > MATRIX_GENERATOR_CAP {
        return Err(AlgebraError::Resource(format!(
            "dense multiplication operator for n = {n} exceeds the cap of {MATRIX_GENERATOR_CAP} generators"
        )));
    }
    let basis = Monomial::all(n);
    let position = |m: Monomial| basis.binary_search(&m).expect("basis covers all monomials");
    let mut matrix = Matrix::zeros(basis.len(), basis.len());
    for (col, t) in basis.iter().enumerate() {
        for (u, c) in a.terms() {
            if u.is_disjoint(*t) {
                matrix.set(position(u.union(*t)), col, c.clone());
            }
        }
    }
    Ok(MulOperatorMatrix { basis, matrix })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DivisionStatus {
    /// `a` is invertible and `x = a^-1 b`.
    Unique,
    /// Solutions form `particular + span(kernel_basis)`.
    AffineFamily,
    NoSolution,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionSolution {
    pub status: DivisionStatus,
    pub particular: Option<Element>,
    /// Basis of the annihilator of `a`, in reduced echelon form over the canonical basis.
    pub kernel_basis: Vec<Element>,
    /// Whether the solutions are invertible. Either all are or none is; `None` when there is
    /// no solution or when `a = b = 0` (every element solves).
    pub solutions_invertible: Option<bool>,
    /// Rank of the multiplication operator; the solution set has dimension `2^n - rank`.
    pub rank: usize,
}

pub fn solve_division(a: &Element, b: &Element) -> Result<DivisionSolution, AlgebraError> {
    if a.n() != b.n() {
        return Err(AlgebraError::DimensionMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    // surfaces a field mismatch before any work
    a.add(b)?;
    let n = a.n();
    let op = mul_operator_matrix(a)?;
    let to_element = |v: &[Scalar]| {
        Element::from_terms(n, op.basis.iter().copied().zip(v.iter().cloned()))
    };
    let solution = linalg::solve(&op.matrix, &op.coordinates(b));
    let kernel_basis = solution
        .kernel
        .iter()
        .map(|v| to_element(v))
        .collect::<Result<Vec<_>, _>>()?;

    let Some(particular) = solution.particular else {
        return Ok(DivisionSolution {
            status: DivisionStatus::NoSolution,
            particular: None,
            kernel_basis,
            solutions_invertible: None,
            rank: solution.rank,
        });
    };
    let particular = to_element(&particular)?;
    let status = if kernel_basis.is_empty() {
        DivisionStatus::Unique
    } else {
        DivisionStatus::AffineFamily
    };
    // For a != 0 every kernel element has zero real part, so the solutions share the
    // real part of the particular one; invertibility holds exactly when deg a = deg b.
    let solutions_invertible = (!a.is_zero()).then(|| a.degree() == b.degree());
    debug_assert!(
        solutions_invertible.is_none() || solutions_invertible == Some(particular.is_invertible())
    );
    Ok(DivisionSolution {
        status,
        particular: Some(particular),
        kernel_basis,
        solutions_invertible,
        rank: solution.rank,
    })
}
