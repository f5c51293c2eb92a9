use num_traits::{One, Signed, Zero};

use super::{LinearProgram, LpOutcome, LpSolution, Rational};

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    /// Reduced costs for every column.
    cost: Vec<Rational>,
    /// Negated objective value.
    cost_rhs: Rational,
}

enum Phase {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for v in self.rows[r].iter_mut() {
            *v *= &inv;
        }
        self.rhs[r] *= &inv;
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (v, p) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
            self.rhs[i] -= &f * &pivot_rhs;
        }
        if !self.cost[c].is_zero() {
            let f = self.cost[c].clone();
            for (v, p) in self.cost.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
            self.cost_rhs -= &f * &pivot_rhs;
        }
        self.basis[r] = c;
    }

    fn set_costs(&mut self, costs: &[Rational]) {
        self.cost = costs.to_vec();
        self.cost_rhs = Rational::zero();
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = costs[b].clone();
            if cb.is_zero() {
                continue;
            }
            for (v, t) in self.cost.iter_mut().zip(&self.rows[i]) {
                *v -= &cb * t;
            }
            self.cost_rhs -= &cb * &self.rhs[i];
        }
    }

    /// Bland's rule: least eligible column with negative reduced cost enters;
    /// ties in the ratio test go to the least basic variable.
    fn run(&mut self, eligible: usize) -> Phase {
        loop {
            let Some(c) = (0..eligible).find(|&j| self.cost[j].is_negative()) else {
                return Phase::Optimal;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, c),
                None => return Phase::Unbounded,
            }
        }
    }
}

/// Columns: `n` structural, `m` surplus, `m` artificial.
pub(super) fn solve(lp: &LinearProgram) -> LpOutcome {
    let n = lp.num_variables();
    let m = lp.num_constraints();
    let width = n + 2 * m;
    let mut signs = Vec::with_capacity(m);
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for (i, (row, b)) in lp.rows().iter().zip(lp.rhs()).enumerate() {
        let sign = if b.is_negative() { -Rational::one() } else { Rational::one() };
        let mut r = vec![Rational::zero(); width];
        for (j, a) in row.iter().enumerate() {
            r[j] = a * &sign;
        }
        r[n + i] = -sign.clone();
        r[n + m + i] = Rational::one();
        rows.push(r);
        rhs.push(b * &sign);
        signs.push(sign);
    }
    let mut t = Tableau {
        rows,
        rhs,
        basis: (n + m..n + 2 * m).collect(),
        cost: Vec::new(),
        cost_rhs: Rational::zero(),
    };

    let mut phase1 = vec![Rational::zero(); width];
    for c in phase1.iter_mut().skip(n + m) {
        *c = Rational::one();
    }
    t.set_costs(&phase1);
    t.run(width);
    if !t.cost_rhs.is_zero() {
        return LpOutcome::Infeasible;
    }
    // drive zero-level artificials out of the basis where possible
    for r in 0..m {
        if t.basis[r] >= n + m {
            if let Some(c) = (0..n + m).find(|&j| !t.rows[r][j].is_zero()) {
                t.pivot(r, c);
            }
        }
    }

    let mut phase2 = vec![Rational::zero(); width];
    phase2[..n].clone_from_slice(lp.objective());
    t.set_costs(&phase2);
    if let Phase::Unbounded = t.run(n + m) {
        return LpOutcome::Unbounded;
    }

    let mut primal = vec![Rational::zero(); n];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < n {
            primal[b] = t.rhs[i].clone();
        }
    }
    // the reduced cost of artificial i is minus the i-th simplex multiplier
    let dual = (0..m).map(|i| -(&t.cost[n + m + i] * &signs[i])).collect();
    LpOutcome::Optimal(LpSolution {
        value: -t.cost_rhs,
        primal,
        dual,
    })
}
