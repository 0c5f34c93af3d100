//! Exact rational linear-program feasibility via phase-1 simplex.
//!
//! The only client is the separating-hyperplane search: given three finite
//! point sets, find an affine functional that is zero on one, at most -1 on
//! the second and at least +1 on the third. Strict separation of finitely
//! many integer points can always be rescaled to margin 1, so feasibility of
//! this system is equivalent to the existence of a strict separator.
//!
//! Bland's rule keeps the pivoting finite; all arithmetic is in BigRational,
//! so the answer is exact.

use num::{BigRational, One, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Relation {
    Eq,
    Le,
}

/// One row `<coefficients, y> (=|<=) rhs` over free variables `y`.
pub(crate) struct Constraint {
    pub coefficients: Vec<i64>,
    pub relation: Relation,
    pub rhs: i64,
}

/// Find any rational solution of the system, or None when infeasible.
///
/// Free variables are split into positive and negative parts, slacks are
/// added for inequalities and artificials for every row; phase-1 simplex
/// minimizes the artificial sum.
pub(crate) fn feasible_point(num_vars: usize, constraints: &[Constraint]) -> Option<Vec<BigRational>> {
    let m = constraints.len();
    if m == 0 {
        return Some(vec![BigRational::zero(); num_vars]);
    }
    let slack_count = constraints
        .iter()
        .filter(|c| c.relation == Relation::Le)
        .count();
    // Columns: y+ (num_vars), y- (num_vars), slacks, artificials.
    let cols = 2 * num_vars + slack_count + m;
    let art_start = 2 * num_vars + slack_count;

    let rat = |x: i64| BigRational::from_integer(x.into());

    // Tableau rows augmented with the rhs in the last position.
    let mut tableau: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    let mut basis: Vec<usize> = Vec::with_capacity(m);
    let mut slack_idx = 0;
    for (i, c) in constraints.iter().enumerate() {
        assert_eq!(c.coefficients.len(), num_vars);
        let flip = c.rhs < 0;
        let sign = if flip { -1 } else { 1 };
        let mut row = vec![BigRational::zero(); cols + 1];
        for (j, &a) in c.coefficients.iter().enumerate() {
            row[j] = rat(sign * a);
            row[num_vars + j] = rat(-sign * a);
        }
        if c.relation == Relation::Le {
            row[2 * num_vars + slack_idx] = rat(sign);
            slack_idx += 1;
        }
        row[art_start + i] = BigRational::one();
        row[cols] = rat(sign * c.rhs);
        tableau.push(row);
        basis.push(art_start + i);
    }

    // Objective: minimize the artificial sum. Expressed over the starting
    // basis (all artificials), the w-row is the column sum over the
    // non-artificial columns, with zero reduced cost on the basic artificials
    // and the current value Sum(b_i) in the rhs slot.
    let mut objective = vec![BigRational::zero(); cols + 1];
    for row in &tableau {
        for j in (0..art_start).chain([cols]) {
            objective[j] += &row[j];
        }
    }

    loop {
        // Bland: entering column is the lowest-index non-artificial one with
        // a positive reduced cost; increasing it decreases w.
        let entering = (0..art_start).find(|&j| objective[j].is_positive());
        let Some(entering) = entering else { break };
        // Ratio test, Bland tie-break on the basic variable index.
        let mut leaving: Option<(usize, BigRational)> = None;
        for (i, row) in tableau.iter().enumerate() {
            if row[entering].is_positive() {
                let ratio = &row[cols] / &row[entering];
                let better = match &leaving {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && basis[i] < basis[*li])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
        }
        let (pivot_row, _) = leaving.expect("phase-1 objective is bounded below by zero");
        pivot(&mut tableau, &mut objective, pivot_row, entering);
        basis[pivot_row] = entering;
    }

    if !objective[cols].is_zero() {
        return None;
    }

    // Artificials can linger in the basis at value zero; the solution in the
    // original variables is still valid.
    let mut solution = vec![BigRational::zero(); num_vars];
    for (i, &b) in basis.iter().enumerate() {
        if b < num_vars {
            solution[b] += &tableau[i][cols];
        } else if b < 2 * num_vars {
            solution[b - num_vars] -= &tableau[i][cols];
        }
    }
    Some(solution)
}

fn pivot(
    tableau: &mut [Vec<BigRational>],
    objective: &mut [BigRational],
    pivot_row: usize,
    pivot_col: usize,
) {
    let factor = tableau[pivot_row][pivot_col].clone();
    for value in tableau[pivot_row].iter_mut() {
        *value /= &factor;
    }
    let pivot_values = tableau[pivot_row].clone();
    for (i, row) in tableau.iter_mut().enumerate() {
        if i == pivot_row || row[pivot_col].is_zero() {
            continue;
        }
        let scale = row[pivot_col].clone();
        for (a, p) in row.iter_mut().zip(&pivot_values) {
            *a -= &scale * p;
        }
    }
    if !objective[pivot_col].is_zero() {
        let scale = objective[pivot_col].clone();
        for (o, p) in objective.iter_mut().zip(&pivot_values) {
            *o -= &scale * p;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(solution: &[BigRational], constraints: &[Constraint]) {
        let rat = |x: i64| BigRational::from_integer(x.into());
        for c in constraints {
            let value: BigRational = c
                .coefficients
                .iter()
                .zip(solution)
                .map(|(&a, y)| rat(a) * y)
                .sum();
            match c.relation {
                Relation::Eq => assert_eq!(value, rat(c.rhs)),
                Relation::Le => assert!(value <= rat(c.rhs)),
            }
        }
    }

    #[test]
    fn solves_simple_systems() {
        // x + y = 3, x - y <= 1 has solutions.
        let cs = vec![
            Constraint { coefficients: vec![1, 1], relation: Relation::Eq, rhs: 3 },
            Constraint { coefficients: vec![1, -1], relation: Relation::Le, rhs: 1 },
        ];
        let sol = feasible_point(2, &cs).expect("feasible");
        check(&sol, &cs);
    }

    #[test]
    fn detects_infeasibility() {
        // x <= -1 and -x <= -1 together force x <= -1 and x >= 1.
        let cs = vec![
            Constraint { coefficients: vec![1], relation: Relation::Le, rhs: -1 },
            Constraint { coefficients: vec![-1], relation: Relation::Le, rhs: -1 },
        ];
        assert!(feasible_point(1, &cs).is_none());
    }

    #[test]
    fn handles_negative_solutions() {
        let cs = vec![
            Constraint { coefficients: vec![1], relation: Relation::Eq, rhs: -5 },
        ];
        let sol = feasible_point(1, &cs).expect("feasible");
        assert_eq!(sol[0], BigRational::from_integer((-5).into()));
    }

    #[test]
    fn equality_chain() {
        // y1 = 1, y2 = 2, y1 + y2 <= 3 (tight).
        let cs = vec![
            Constraint { coefficients: vec![1, 0], relation: Relation::Eq, rhs: 1 },
            Constraint { coefficients: vec![0, 1], relation: Relation::Eq, rhs: 2 },
            Constraint { coefficients: vec![1, 1], relation: Relation::Le, rhs: 3 },
        ];
        let sol = feasible_point(2, &cs).expect("feasible");
        check(&sol, &cs);
    }

    #[test]
    fn strict_separation_system() {
        // Separate {(0,1),(1,0)} (level) from (1,1) above and (0,0) below:
        // c1, c2, L with c2 - L = 0, c1 - L = 0, c1 + c2 - L >= 1, -L <= -... build directly:
        let cs = vec![
            Constraint { coefficients: vec![0, 1, -1], relation: Relation::Eq, rhs: 0 },
            Constraint { coefficients: vec![1, 0, -1], relation: Relation::Eq, rhs: 0 },
            Constraint { coefficients: vec![-1, -1, 1], relation: Relation::Le, rhs: -1 },
            Constraint { coefficients: vec![0, 0, 1], relation: Relation::Le, rhs: 1 },
        ];
        let sol = feasible_point(3, &cs).expect("feasible");
        check(&sol, &cs);
    }
}
