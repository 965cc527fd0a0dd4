//! Exact convex-hull membership by a phase-one simplex over the rationals.

use num_traits::{Signed, Zero};

use crate::rational::{one, zero, Q};

/// True iff `target` is a convex combination of `points`.
///
/// Solves `Σ t_i p_i = target, Σ t_i = 1, t ≥ 0` for feasibility with
/// Bland's rule, so it terminates on degenerate inputs.
pub fn in_convex_hull(points: &[Vec<Q>], target: &[Q]) -> bool {
    if points.is_empty() {
        return false;
    }
    let dim = target.len();
    let k = points.len();
    let m = dim + 1;
    let width = k + m;

    let mut rows: Vec<Vec<Q>> = Vec::with_capacity(m);
    let mut rhs: Vec<Q> = Vec::with_capacity(m);
    for r in 0..m {
        let mut row: Vec<Q> = (0..k)
            .map(|j| if r < dim { points[j][r].clone() } else { one() })
            .collect();
        let mut b = if r < dim { target[r].clone() } else { one() };
        if b.is_negative() {
            row.iter_mut().for_each(|x| *x = -x.clone());
            b = -b;
        }
        row.extend((0..m).map(|a| if a == r { one() } else { zero() }));
        rows.push(row);
        rhs.push(b);
    }
    let mut basis: Vec<usize> = (k..width).collect();

    loop {
        // reduced cost of minimising the sum of the artificial variables
        let entering = (0..width).find(|&j| {
            let cost = if j >= k { one() } else { zero() };
            let reduced: Q = cost
                - (0..m)
                    .filter(|&i| basis[i] >= k)
                    .map(|i| rows[i][j].clone())
                    .sum::<Q>();
            reduced.is_negative()
        });
        let Some(j) = entering else { break };
        let leaving = (0..m)
            .filter(|&i| rows[i][j].is_positive())
            .min_by(|&a, &b| {
                let ra = &rhs[a] / &rows[a][j];
                let rb = &rhs[b] / &rows[b][j];
                ra.cmp(&rb).then(basis[a].cmp(&basis[b]))
            });
        let Some(i) = leaving else {
            // unbounded direction; cannot occur for this bounded objective
            break;
        };
        let pv = rows[i][j].clone();
        rows[i].iter_mut().for_each(|x| *x /= &pv);
        rhs[i] /= &pv;
        let pivot_row = rows[i].clone();
        let pivot_rhs = rhs[i].clone();
        for r in 0..m {
            if r == i || rows[r][j].is_zero() {
                continue;
            }
            let f = rows[r][j].clone();
            for (x, y) in rows[r].iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
            rhs[r] -= &f * &pivot_rhs;
        }
        basis[i] = j;
    }

    (0..m)
        .filter(|&i| basis[i] >= k)
        .all(|i| rhs[i].is_zero())
}
