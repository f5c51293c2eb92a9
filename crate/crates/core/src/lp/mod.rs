//! Exact rational linear programming.
//!
//! Problems are `minimize c·x subject to A x ≥ b, x ≥ 0`, solved by a dense
//! two-phase simplex with Bland's rule over arbitrary-precision rationals.

mod simplex;
mod text;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use text::{format_rational, parse_lp};

/// Exact fraction; always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

pub const MAX_VARIABLES: usize = 64;
pub const MAX_CONSTRAINTS: usize = 4096;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `minimize objective·x` subject to `rows[i]·x ≥ rhs[i]` and `x ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    objective: Vec<Rational>,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
}

impl LinearProgram {
    pub fn new(objective: Vec<Rational>, rows: Vec<Vec<Rational>>, rhs: Vec<Rational>) -> Result<Self> {
        let n = objective.len();
        if n > MAX_VARIABLES {
            return Err(Error::DimensionMismatch(format!(
                "{n} variables exceed the limit of {MAX_VARIABLES}"
            )));
        }
        if rows.len() > MAX_CONSTRAINTS {
            return Err(Error::DimensionMismatch(format!(
                "{} constraints exceed the limit of {MAX_CONSTRAINTS}",
                rows.len()
            )));
        }
        if rows.len() != rhs.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} rows but {} right-hand sides",
                rows.len(),
                rhs.len()
            )));
        }
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "row {i} has {} coefficients, expected {n}",
                r.len()
            )));
        }
        Ok(LinearProgram { objective, rows, rhs })
    }

    pub fn num_variables(&self) -> usize {
        self.objective.len()
    }

    pub fn num_constraints(&self) -> usize {
        self.rows.len()
    }

    pub fn objective(&self) -> &[Rational] {
        &self.objective
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.rhs
    }

    pub fn is_feasible_point(&self, x: &[Rational]) -> bool {
        x.len() == self.num_variables()
            && x.iter().all(|v| !v.is_negative())
            && self
                .rows
                .iter()
                .zip(&self.rhs)
                .all(|(row, b)| dot(row, x) >= *b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub value: Rational,
    pub primal: Vec<Rational>,
    /// One multiplier per constraint; optimal for the dual
    /// `maximize b·y subject to Aᵀy ≤ c, y ≥ 0`.
    pub dual: Vec<Rational>,
}

impl LpSolution {
    /// Re-checks primal feasibility, dual feasibility and strong duality by
    /// direct substitution.
    pub fn certify(&self, lp: &LinearProgram) -> Result<()> {
        if !lp.is_feasible_point(&self.primal) {
            return Err(Error::Inconsistent("primal solution is infeasible".into()));
        }
        if dot(&lp.objective, &self.primal) != self.value {
            return Err(Error::Inconsistent("primal value does not match objective".into()));
        }
        if self.dual.len() != lp.num_constraints() || self.dual.iter().any(|y| y.is_negative()) {
            return Err(Error::Inconsistent("dual multipliers must be nonnegative".into()));
        }
        for j in 0..lp.num_variables() {
            let col: Rational = lp
                .rows
                .iter()
                .zip(&self.dual)
                .map(|(row, y)| &row[j] * y)
                .fold(Rational::zero(), |a, b| a + b);
            if col > lp.objective[j] {
                return Err(Error::Inconsistent(format!("dual constraint {j} violated")));
            }
        }
        if dot(&lp.rhs, &self.dual) != self.value {
            return Err(Error::Inconsistent("primal and dual values differ".into()));
        }
        Ok(())
    }

    pub fn dual_value(&self, lp: &LinearProgram) -> Rational {
        dot(&lp.rhs, &self.dual)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal(LpSolution),
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn status(&self) -> &'static str {
        match self {
            LpOutcome::Optimal(_) => "OPTIMAL",
            LpOutcome::Infeasible => "INFEASIBLE",
            LpOutcome::Unbounded => "UNBOUNDED",
        }
    }

    pub fn optimal(&self) -> Option<&LpSolution> {
        match self {
            LpOutcome::Optimal(s) => Some(s),
            _ => None,
        }
    }
}

/// Solves the program exactly. Optimal solutions come with a certified dual.
pub fn solve_min(lp: &LinearProgram) -> Result<LpOutcome> {
    let outcome = simplex::solve(lp);
    if let LpOutcome::Optimal(sol) = &outcome {
        sol.certify(lp)?;
    }
    Ok(outcome)
}

/// Whether `point` is a convex combination of `vertices`, decided by an
/// exact feasibility program over the barycentric weights.
pub fn point_in_hull(point: &[Rational], vertices: &[Vec<Rational>]) -> Result<bool> {
    let d = point.len();
    if let Some(v) = vertices.iter().find(|v| v.len() != d) {
        return Err(Error::DimensionMismatch(format!(
            "vertex of dimension {} for a point of dimension {d}",
            v.len()
        )));
    }
    if vertices.is_empty() {
        return Ok(false);
    }
    let n = vertices.len();
    let mut rows = Vec::with_capacity(2 * (d + 1));
    let mut rhs = Vec::with_capacity(2 * (d + 1));
    let mut push_eq = |coeffs: Vec<Rational>, b: Rational| {
        rows.push(coeffs.iter().map(|c| -c).collect());
        rhs.push(-b.clone());
        rows.push(coeffs);
        rhs.push(b);
    };
    push_eq(vec![Rational::one(); n], Rational::one());
    for (axis, coord) in point.iter().enumerate() {
        push_eq(vertices.iter().map(|v| v[axis].clone()).collect(), coord.clone());
    }
    let lp = LinearProgram::new(vec![Rational::zero(); n], rows, rhs)?;
    Ok(matches!(solve_min(&lp)?, LpOutcome::Optimal(_)))
}

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).fold(Rational::zero(), |acc, v| acc + v)
}
