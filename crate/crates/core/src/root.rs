//! Scalar bracketing helpers shared by the solvers.

/// Bisection on a sign-changing bracket. `f` may refuse a point by
/// returning `None`, in which case the search is abandoned.
///
/// Stops when the bracket is narrower than `rel_tol * max(|lo|, |hi|)` or
/// when floating point can no longer split it.
pub(crate) fn bisect<F>(mut f: F, mut lo: f64, mut hi: f64, rel_tol: f64) -> Option<f64>
where
    F: FnMut(f64) -> Option<f64>,
{
    let mut flo = f(lo)?;
    let fhi = f(hi)?;
    if flo == 0.0 {
        return Some(lo);
    }
    if fhi == 0.0 {
        return Some(hi);
    }
    if flo.signum() == fhi.signum() {
        return None;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo.min(hi) || mid >= lo.max(hi) {
            break;
        }
        let fm = f(mid)?;
        if fm == 0.0 {
            return Some(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if (hi - lo).abs() <= rel_tol * lo.abs().max(hi.abs()) {
            break;
        }
    }
    Some(0.5 * (lo + hi))
}

/// Every root of `f` bracketed by consecutive grid points where `f` is
/// defined and changes sign, refined by bisection.
pub(crate) fn roots_on_grid<F>(mut f: F, grid: &[f64], rel_tol: f64) -> Vec<f64>
where
    F: FnMut(f64) -> Option<f64>,
{
    let values: Vec<Option<f64>> = grid.iter().map(|&x| f(x)).collect();
    let mut roots = Vec::new();
    for i in 0..grid.len().saturating_sub(1) {
        let (Some(a), Some(b)) = (values[i], values[i + 1]) else {
            continue;
        };
        if a == 0.0 {
            roots.push(grid[i]);
            continue;
        }
        if a.signum() != b.signum() && b != 0.0 {
            if let Some(r) = bisect(&mut f, grid[i], grid[i + 1], rel_tol) {
                roots.push(r);
            }
        }
    }
    if let (Some(&x), Some(Some(v))) = (grid.last(), values.last()) {
        if *v == 0.0 {
            roots.push(x);
        }
    }
    roots
}

pub(crate) fn geomspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (l, h) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| (l + (h - l) * i as f64 / (n - 1) as f64).exp())
        .collect()
}

pub(crate) fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}
