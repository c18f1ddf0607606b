//! Exact two-phase simplex with Bland's rule.
//!
//! Solves max c·x subject to A·x ≤ b with x free, splitting x = x⁺ − x⁻.

use num_traits::{Signed, Zero};

use super::linalg::Q;

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { value: Q, point: Vec<Q> },
    Unbounded,
    Infeasible,
}

impl LpOutcome {
    pub fn value(&self) -> Option<&Q> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }
}

struct Tableau {
    rows: Vec<Vec<Q>>,
    basis: Vec<usize>,
    /// Reduced-cost row; the last entry holds the objective value.
    obj: Vec<Q>,
    cols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            *x /= &p;
        }
        let prow = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        if !self.obj[c].is_zero() {
            let f = self.obj[c].clone();
            for (x, y) in self.obj.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Runs to optimality over the columns `allowed`; false when unbounded.
    fn optimize(&mut self, allowed: usize) -> bool {
        loop {
            let Some(c) = (0..allowed).find(|&j| self.obj[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(usize, Q)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = &row[self.cols] / &row[c];
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
                None => return false,
            }
        }
    }

    fn set_objective(&mut self, costs: &[Q]) {
        // obj = −c + c_B·rows
        let mut obj: Vec<Q> = (0..=self.cols)
            .map(|j| if j < costs.len() { -costs[j].clone() } else { Q::zero() })
            .collect();
        for (i, row) in self.rows.iter().enumerate() {
            let cb = costs.get(self.basis[i]).cloned().unwrap_or_else(Q::zero);
            if cb.is_zero() {
                continue;
            }
            for (x, y) in obj.iter_mut().zip(row) {
                *x += &cb * y;
            }
        }
        self.obj = obj;
    }
}

/// Maximizes `c·x` over `{x : a·x ≤ b}`.
pub fn maximize(a: &[Vec<Q>], b: &[Q], c: &[Q]) -> LpOutcome {
    let m = a.len();
    let d = c.len();
    let n_art = b.iter().filter(|x| x.is_negative()).count();
    let slack0 = 2 * d;
    let art0 = slack0 + m;
    let cols = art0 + n_art;
    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut next_art = art0;
    for i in 0..m {
        let mut row = vec![Q::zero(); cols + 1];
        let flip = b[i].is_negative();
        let s = |x: &Q| if flip { -x.clone() } else { x.clone() };
        for j in 0..d {
            row[j] = s(&a[i][j]);
            row[d + j] = -row[j].clone();
        }
        row[slack0 + i] = if flip {
            -Q::from_integer(1.into())
        } else {
            Q::from_integer(1.into())
        };
        row[cols] = s(&b[i]);
        if flip {
            row[next_art] = Q::from_integer(1.into());
            basis.push(next_art);
            next_art += 1;
        } else {
            basis.push(slack0 + i);
        }
        rows.push(row);
    }
    let mut t = Tableau {
        rows,
        basis,
        obj: Vec::new(),
        cols,
    };

    if n_art > 0 {
        let mut phase1 = vec![Q::zero(); cols];
        for x in &mut phase1[art0..] {
            *x = -Q::from_integer(1.into());
        }
        t.set_objective(&phase1);
        t.optimize(cols);
        if t.obj[cols].is_negative() {
            return LpOutcome::Infeasible;
        }
        // Drive zero-level artificials out of the basis.
        let mut r = 0;
        while r < t.rows.len() {
            if t.basis[r] >= art0 {
                match (0..art0).find(|&j| !t.rows[r][j].is_zero()) {
                    Some(j) => t.pivot(r, j),
                    None => {
                        t.rows.remove(r);
                        t.basis.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
    }

    let mut costs = vec![Q::zero(); art0];
    for j in 0..d {
        costs[j] = c[j].clone();
        costs[d + j] = -c[j].clone();
    }
    t.set_objective(&costs);
    if !t.optimize(art0) {
        return LpOutcome::Unbounded;
    }
    let mut vals = vec![Q::zero(); cols];
    for (i, &bv) in t.basis.iter().enumerate() {
        vals[bv] = t.rows[i][cols].clone();
    }
    let point = (0..d).map(|j| &vals[j] - &vals[d + j]).collect();
    LpOutcome::Optimal {
        value: t.obj[cols].clone(),
        point,
    }
}
