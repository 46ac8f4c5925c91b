//! Dense phase-1 simplex for feasibility of `{x : a_i·x ≤ b_i}`.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Optimal phase-1 objective at or below this counts as feasible.
pub const FEASIBILITY_TOLERANCE: f64 = 1e-9;

const PIVOT_EPS: f64 = 1e-12;
const MAX_PIVOTS: usize = 100_000;

/// Finds a point of `{x ∈ ℝ^n : a_i·x ≤ b_i}` or reports infeasibility.
///
/// Free variables are split as `x = x⁺ − x⁻` and one artificial `x₀ ≥ 0`
/// relaxes every row to `a_i·x − x₀ ≤ b_i`; the system is feasible iff the
/// minimum of `x₀` is at most [`FEASIBILITY_TOLERANCE`]. Bland's rule
/// prevents cycling.
pub fn find_feasible_point(rows: &[(&[f64], f64)], n: usize) -> Result<Option<Vec<f64>>> {
    let m = rows.len();
    if m == 0 {
        return Ok(Some(vec![0.0; n]));
    }
    if rows.iter().all(|(_, b)| *b >= 0.0) {
        return Ok(Some(vec![0.0; n]));
    }
    // Columns: x⁺ (n), x⁻ (n), x₀, slacks (m), rhs.
    let x0 = 2 * n;
    let cols = 2 * n + 1 + m;
    let width = cols + 1;
    let mut tab = vec![0.0; m * width];
    for (i, (a, b)) in rows.iter().enumerate() {
        if a.len() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: a.len(),
            });
        }
        let row = &mut tab[i * width..(i + 1) * width];
        for j in 0..n {
            row[j] = a[j];
            row[n + j] = -a[j];
        }
        row[x0] = -1.0;
        row[x0 + 1 + i] = 1.0;
        row[cols] = *b;
    }
    let mut basis: Vec<usize> = (0..m).map(|i| x0 + 1 + i).collect();

    // Entering x₀ at the most violated row makes every rhs nonnegative.
    let worst = (0..m)
        .min_by(|&i, &j| tab[i * width + cols].total_cmp(&tab[j * width + cols]))
        .expect("m > 0");
    pivot(&mut tab, width, worst, x0, &mut basis);

    // Reduced costs for minimizing x₀: c = e_{x₀} minus the basic row of x₀.
    let mut obj = vec![0.0; width];
    obj[x0] = 1.0;
    for (i, &bv) in basis.iter().enumerate() {
        if bv == x0 {
            let row = &tab[i * width..(i + 1) * width];
            for (o, r) in obj.iter_mut().zip(row) {
                *o -= r;
            }
        }
    }

    for _ in 0..MAX_PIVOTS {
        let objective = -obj[cols];
        if objective <= FEASIBILITY_TOLERANCE {
            break;
        }
        let Some(enter) = (0..cols).find(|&j| obj[j] < -PIVOT_EPS) else {
            break;
        };
        let mut leave: Option<(usize, f64)> = None;
        for i in 0..m {
            let coef = tab[i * width + enter];
            if coef > PIVOT_EPS {
                let ratio = tab[i * width + cols] / coef;
                leave = match leave {
                    None => Some((i, ratio)),
                    Some((li, lr)) => {
                        if ratio < lr - PIVOT_EPS
                            || (ratio <= lr + PIVOT_EPS && basis[i] < basis[li])
                        {
                            Some((i, ratio))
                        } else {
                            Some((li, lr))
                        }
                    }
                };
            }
        }
        let Some((row, _)) = leave else {
            return Err(Error::LinearProgram(alloc::string::String::from(
                "phase-1 objective unbounded below",
            )));
        };
        pivot(&mut tab, width, row, enter, &mut basis);
        let factor = obj[enter];
        let prow = &tab[row * width..(row + 1) * width];
        for (o, p) in obj.iter_mut().zip(prow) {
            *o -= factor * p;
        }
    }
    if -obj[cols] > FEASIBILITY_TOLERANCE {
        if (0..cols).any(|j| obj[j] < -PIVOT_EPS) {
            return Err(Error::LinearProgram(alloc::string::String::from(
                "pivot limit reached",
            )));
        }
        return Ok(None);
    }
    let mut x = vec![0.0; n];
    for (i, &bv) in basis.iter().enumerate() {
        let v = tab[i * width + cols];
        if bv < n {
            x[bv] += v;
        } else if bv < 2 * n {
            x[bv - n] -= v;
        }
    }
    Ok(Some(x))
}

/// True iff `{x : a_i·x ≤ b_i}` is nonempty.
pub fn is_feasible(rows: &[(&[f64], f64)], n: usize) -> Result<bool> {
    Ok(find_feasible_point(rows, n)?.is_some())
}

fn pivot(tab: &mut [f64], width: usize, row: usize, col: usize, basis: &mut [usize]) {
    let m = tab.len() / width;
    let inv = 1.0 / tab[row * width + col];
    for v in &mut tab[row * width..(row + 1) * width] {
        *v *= inv;
    }
    let prow: Vec<f64> = tab[row * width..(row + 1) * width].to_vec();
    for i in 0..m {
        if i == row {
            continue;
        }
        let factor = tab[i * width + col];
        if factor != 0.0 {
            let r = &mut tab[i * width..(i + 1) * width];
            for (v, p) in r.iter_mut().zip(&prow) {
                *v -= factor * p;
            }
        }
    }
    basis[row] = col;
}
