//! Exact linear programming over the rationals.
//!
//! A dense two-phase tableau simplex. Pivot selection follows Bland's rule
//! (lowest eligible index for both entering and leaving variables), so the
//! method terminates on degenerate problems. Problem sizes here are tiny
//! (tens of rows and columns), which keeps exact arithmetic affordable.

use num_traits::{Signed, Zero};

use crate::rational::{Point, Rational};

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { x: Point, value: Rational },
    Unbounded,
    Infeasible,
}

impl LpOutcome {
    pub fn point(&self) -> Option<&Point> {
        match self {
            LpOutcome::Optimal { x, .. } => Some(x),
            _ => None,
        }
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn rhs(&self) -> usize {
        self.ncols
    }

    fn pivot(&mut self, p: usize, q: usize, objectives: &mut [&mut Vec<Rational>]) {
        let inv = Rational::from_integer(1.into()) / &self.rows[p][q];
        for v in self.rows[p].iter_mut() {
            *v *= &inv;
        }
        let prow = self.rows[p].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != p && !row[q].is_zero() {
                let f = row[q].clone();
                for (v, pv) in row.iter_mut().zip(&prow) {
                    *v -= &f * pv;
                }
            }
        }
        for obj in objectives.iter_mut() {
            if !obj[q].is_zero() {
                let f = obj[q].clone();
                for (v, pv) in obj.iter_mut().zip(&prow) {
                    *v -= &f * pv;
                }
            }
        }
        self.basis[p] = q;
    }

    /// Runs Bland-rule pivots on `obj` (maximization). `banned` columns never enter.
    /// Returns false if the objective is unbounded.
    fn optimize(&mut self, obj: &mut Vec<Rational>, other: &mut Vec<Rational>, banned: Option<usize>) -> bool {
        let rhs = self.rhs();
        loop {
            let entering = (0..self.ncols).find(|&j| Some(j) != banned && obj[j].is_positive());
            let Some(q) = entering else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[q].is_positive() {
                    let ratio = &row[rhs] / &row[q];
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            let Some((p, _)) = best else {
                return false;
            };
            self.pivot(p, q, &mut [obj, other]);
        }
    }
}

/// Maximizes `c . x` subject to `a x <= b` and `x >= 0`.
pub fn maximize(c: &[Rational], a: &[Vec<Rational>], b: &[Rational]) -> LpOutcome {
    let n = c.len();
    let m = a.len();
    // columns: originals, slacks, artificial x0
    let x0 = n + m;
    let ncols = n + m + 1;
    let mut rows = Vec::with_capacity(m);
    for (i, (ai, bi)) in a.iter().zip(b).enumerate() {
        debug_assert_eq!(ai.len(), n);
        let mut row = vec![Rational::zero(); ncols + 1];
        row[..n].clone_from_slice(ai);
        row[n + i] = Rational::from_integer(1.into());
        row[x0] = Rational::from_integer((-1).into());
        row[ncols] = bi.clone();
        rows.push(row);
    }
    let mut tab = Tableau { rows, basis: (n..n + m).collect(), ncols };

    let mut phase2 = vec![Rational::zero(); ncols + 1];
    phase2[..n].clone_from_slice(c);

    let most_negative = (0..m)
        .filter(|&i| tab.rows[i][ncols].is_negative())
        .min_by(|&i, &j| tab.rows[i][ncols].cmp(&tab.rows[j][ncols]));
    if let Some(p) = most_negative {
        let mut phase1 = vec![Rational::zero(); ncols + 1];
        phase1[x0] = Rational::from_integer((-1).into());
        tab.pivot(p, x0, &mut [&mut phase1, &mut phase2]);
        let bounded = tab.optimize(&mut phase1, &mut phase2, None);
        debug_assert!(bounded, "phase one is bounded above by zero");
        // phase-one optimum is -phase1[rhs]; feasibility requires it to be zero
        if !phase1[ncols].is_zero() {
            return LpOutcome::Infeasible;
        }
        if let Some(p) = tab.basis.iter().position(|&v| v == x0) {
            match (0..ncols).find(|&j| j != x0 && !tab.rows[p][j].is_zero()) {
                Some(q) => tab.pivot(p, q, &mut [&mut phase1, &mut phase2]),
                None => {
                    tab.rows.remove(p);
                    tab.basis.remove(p);
                }
            }
        }
    }
    for row in tab.rows.iter_mut() {
        row[x0] = Rational::zero();
    }
    phase2[x0] = Rational::zero();
    let mut scratch = vec![Rational::zero(); ncols + 1];
    if !tab.optimize(&mut phase2, &mut scratch, Some(x0)) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Rational::zero(); n];
    for (row, &bv) in tab.rows.iter().zip(&tab.basis) {
        if bv < n {
            x[bv] = row[ncols].clone();
        }
    }
    LpOutcome::Optimal { x, value: -phase2[ncols].clone() }
}

/// Like [`maximize`] but with unrestricted-sign variables.
pub fn maximize_free(c: &[Rational], a: &[Vec<Rational>], b: &[Rational]) -> LpOutcome {
    let split = |v: &[Rational]| -> Vec<Rational> { v.iter().cloned().chain(v.iter().map(|x| -x)).collect() };
    let a2: Vec<Vec<Rational>> = a.iter().map(|r| split(r)).collect();
    match maximize(&split(c), &a2, b) {
        LpOutcome::Optimal { x, value } => {
            let n = c.len();
            let x = (0..n).map(|i| &x[i] - &x[i + n]).collect();
            LpOutcome::Optimal { x, value }
        }
        other => other,
    }
}

/// Finds a point with `a x <= b`, variables free, if one exists.
pub fn feasible_point(a: &[Vec<Rational>], b: &[Rational], nvars: usize) -> Option<Point> {
    let c = vec![Rational::zero(); nvars];
    match maximize_free(&c, a, b) {
        LpOutcome::Optimal { x, .. } => Some(x),
        _ => None,
    }
}

/// Farkas membership test: returns nonnegative multipliers `l` with
/// `sum_i l_i g_i = target`, or `None` when `target` is not in `cone(generators)`.
pub fn conic_combination(generators: &[Point], target: &[Rational]) -> Option<Point> {
    let k = generators.len();
    let dim = target.len();
    let mut a = Vec::with_capacity(2 * dim);
    let mut b = Vec::with_capacity(2 * dim);
    for coord in 0..dim {
        let row: Vec<Rational> = generators.iter().map(|g| g[coord].clone()).collect();
        a.push(row.iter().map(|v| -v).collect());
        b.push(-target[coord].clone());
        a.push(row);
        b.push(target[coord].clone());
    }
    match maximize(&vec![Rational::zero(); k], &a, &b) {
        LpOutcome::Optimal { x, .. } => Some(x),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ipoint, rat};

    #[test]
    fn textbook_optimum() {
        // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18  ->  36 at (2, 6)
        let a = vec![ipoint(&[1, 0]), ipoint(&[0, 2]), ipoint(&[3, 2])];
        match maximize(&ipoint(&[3, 5]), &a, &ipoint(&[4, 12, 18])) {
            LpOutcome::Optimal { x, value } => {
                assert_eq!(value, int(36));
                assert_eq!(x, ipoint(&[2, 6]));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn needs_phase_one() {
        // max -x - y with x + y >= 2, x <= 3  ->  -2
        let a = vec![ipoint(&[-1, -1]), ipoint(&[1, 0])];
        match maximize(&ipoint(&[-1, -1]), &a, &ipoint(&[-2, 3])) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, int(-2)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        let a = vec![ipoint(&[1]), ipoint(&[-1])];
        assert_eq!(maximize(&ipoint(&[1]), &a, &ipoint(&[1, -2])), LpOutcome::Infeasible);
        let a = vec![ipoint(&[-1, 1])];
        assert_eq!(maximize(&ipoint(&[1, 0]), &a, &ipoint(&[0])), LpOutcome::Unbounded);
    }

    #[test]
    fn degenerate_cycling_example_terminates() {
        // Beale's example, which cycles under the largest-coefficient rule.
        let a = vec![
            vec![rat(1, 4), int(-60), rat(-1, 25), int(9)],
            vec![rat(1, 2), int(-90), rat(-1, 50), int(3)],
            vec![int(0), int(0), int(1), int(0)],
        ];
        let c = vec![rat(3, 4), int(-150), rat(1, 50), int(-6)];
        match maximize(&c, &a, &ipoint(&[0, 0, 1])) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat(1, 20)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn free_variables() {
        // max x s.t. x <= -3 with x free
        match maximize_free(&ipoint(&[1]), &[ipoint(&[1])], &ipoint(&[-3])) {
            LpOutcome::Optimal { x, value } => {
                assert_eq!(value, int(-3));
                assert_eq!(x, ipoint(&[-3]));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn farkas_membership() {
        let gens = vec![ipoint(&[1, 0]), ipoint(&[0, 1])];
        let l = conic_combination(&gens, &ipoint(&[2, 3])).unwrap();
        assert_eq!(l, ipoint(&[2, 3]));
        assert!(conic_combination(&gens, &ipoint(&[-1, 1])).is_none());
        assert!(conic_combination(&[], &ipoint(&[0, 0])).is_some());
    }
}
