//! Sign-change scanning and bisection for scalar functions on an interval.

use rayon::prelude::*;

/// Bisection stops once the bracket is narrower than this.
pub const BISECTION_TOL: f64 = 1e-12;

/// Sample values this close to zero count as roots at the sample itself.
pub const ZERO_AT_SAMPLE: f64 = 1e-12;

/// Root of `f` in `[lo, hi]` given `f(lo)` and `f(hi)` of opposite signs.
pub fn bisect<F: Fn(f64) -> f64>(f: &F, mut lo: f64, mut hi: f64, mut f_lo: f64) -> f64 {
    while hi - lo > BISECTION_TOL {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Evenly spaced samples `lo, ..., hi` (inclusive), `n ≥ 2`.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let n = n.max(2);
    (0..n)
        .map(|i| if i == n - 1 { hi } else { lo + (hi - lo) * i as f64 / (n - 1) as f64 })
        .collect()
}

/// All roots of `f` on `[lo, hi]` found by scanning `samples` points and
/// bisecting every sign change. Samples evaluated to NaN are skipped. The
/// scan runs in parallel; roots are returned in ascending order.
pub fn scan_roots<F>(f: F, lo: f64, hi: f64, samples: usize) -> Vec<f64>
where
    F: Fn(f64) -> f64 + Sync,
{
    let xs = linspace(lo, hi, samples);
    let ys: Vec<f64> = xs.par_iter().map(|&x| f(x)).collect();
    let mut roots = Vec::new();
    let mut prev: Option<(f64, f64)> = None;
    for (&x, &y) in xs.iter().zip(&ys) {
        if y.is_nan() {
            prev = None;
            continue;
        }
        if y.abs() <= ZERO_AT_SAMPLE {
            roots.push(x);
            prev = None;
            continue;
        }
        if let Some((px, py)) = prev {
            if (py < 0.0) != (y < 0.0) {
                roots.push(bisect(&f, px, x, py));
            }
        }
        prev = Some((x, y));
    }
    roots
}
