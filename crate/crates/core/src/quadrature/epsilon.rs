//! Acceleration of partial sums: Wynn's epsilon algorithm, and a fit for
//! remainders with a known power-law expansion.

use num_complex::Complex64;

/// Extrapolated limit of `seq` with a crude error estimate: the spread of
/// the last two entries in the highest even column that could be formed.
pub(crate) fn wynn_epsilon(seq: &[Complex64]) -> (Complex64, f64) {
    let n = seq.len();
    match n {
        0 => return (Complex64::new(0.0, 0.0), f64::INFINITY),
        1 => return (seq[0], f64::INFINITY),
        2 => return (seq[1], (seq[1] - seq[0]).norm()),
        _ => {}
    }
    // prev = column j-1, cur = column j
    let mut prev: Vec<Complex64> = vec![Complex64::new(0.0, 0.0); n + 1];
    let mut cur: Vec<Complex64> = seq.to_vec();
    let mut best = (seq[n - 1], (seq[n - 1] - seq[n - 2]).norm());
    let mut j = 0;
    while cur.len() >= 2 {
        let mut next = Vec::with_capacity(cur.len() - 1);
        let mut broke = false;
        for k in 0..cur.len() - 1 {
            let d = cur[k + 1] - cur[k];
            if d.norm() == 0.0 || !d.norm().is_finite() {
                broke = true;
                break;
            }
            next.push(prev[k + 1] + d.inv());
        }
        if broke {
            break;
        }
        prev = cur;
        cur = next;
        j += 1;
        if j % 2 == 0 && cur.len() >= 2 {
            let m = cur.len();
            let est = cur[m - 1];
            let err = (cur[m - 1] - cur[m - 2]).norm();
            if err.is_finite() && err <= best.1 {
                best = (est, err);
            }
        }
    }
    best
}

/// Most correction terms fitted; beyond this round-off dominates.
const MAX_TERMS: usize = 6;

/// Limit of partial sums `s_j` taken at cut-offs `u_j`, when the remainder
/// expands as `Σ c_k u^-(s + k)`: fit the limit and `m` correction terms
/// through the last `m + 1` sums. The error estimate is the change when the
/// window is moved back by one; the `m` with the smallest is returned.
pub(crate) fn power_law_limit(seq: &[Complex64], cutoffs: &[f64], s: f64) -> (Complex64, f64) {
    let n = seq.len();
    debug_assert_eq!(n, cutoffs.len());
    if n < 3 || !(s > 0.0) || !s.is_finite() {
        return wynn_epsilon(seq);
    }
    let mut best = (seq[n - 1], (seq[n - 1] - seq[n - 2]).norm());
    for m in 1..=MAX_TERMS.min(n - 2) {
        let fit = |end: usize| fit_limit(&seq[end - m - 1..end], &cutoffs[end - m - 1..end], s);
        let (a, b) = (fit(n), fit(n - 1));
        let err = (a - b).norm();
        if err.is_finite() && err <= best.1 {
            best = (a, err);
        }
    }
    best
}

/// Solves `S + Σ_{k<m} c_k (u_ref/u_i)^(s+k) = s_i` for `S` over `m + 1`
/// points by Gaussian elimination with partial pivoting.
fn fit_limit(sums: &[Complex64], cutoffs: &[f64], s: f64) -> Complex64 {
    let n = sums.len();
    let u_ref = cutoffs[n - 1];
    let mut a: Vec<Vec<f64>> = cutoffs
        .iter()
        .map(|&u| {
            let h = u_ref / u;
            std::iter::once(1.0).chain((0..n - 1).map(|k| h.powf(s + k as f64))).collect()
        })
        .collect();
    let mut rhs = sums.to_vec();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs())).unwrap();
        a.swap(col, piv);
        rhs.swap(col, piv);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= f * a[col][k];
            }
            let r = rhs[col] * f;
            rhs[row] -= r;
        }
    }
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    for row in (0..n).rev() {
        let mut acc = rhs[row];
        for k in row + 1..n {
            acc -= x[k] * a[row][k];
        }
        x[row] = acc / a[row][row];
    }
    x[0]
}
