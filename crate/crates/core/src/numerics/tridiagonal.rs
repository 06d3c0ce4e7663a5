//! Symmetric tridiagonal matrices: Sturm counts and lowest eigenpairs.

use crate::error::{Error, Result};
use crate::real::{ksum, Real};

/// Symmetric tridiagonal matrix together with the grid spacing used to
/// build it (the spacing defines the discrete L² weight `step·Σv²`).
#[derive(Clone, Debug)]
pub struct Tridiagonal<T: Real> {
    diag: Vec<T>,
    offdiag: Vec<T>,
    step: T,
}

impl<T: Real> Tridiagonal<T> {
    pub fn new(diag: Vec<T>, offdiag: Vec<T>, step: T) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::input("tridiagonal: empty diagonal"));
        }
        if offdiag.len() + 1 != diag.len() {
            return Err(Error::input(format!(
                "tridiagonal: offdiag length {} must be diag length {} minus one",
                offdiag.len(),
                diag.len()
            )));
        }
        if !(step > T::zero()) || !step.is_finite() {
            return Err(Error::input("tridiagonal: step must be positive and finite"));
        }
        if diag.iter().chain(offdiag.iter()).any(|x| !x.is_finite()) {
            return Err(Error::input("tridiagonal: non-finite entry"));
        }
        Ok(Tridiagonal { diag, offdiag, step })
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[T] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[T] {
        &self.offdiag
    }

    pub fn step(&self) -> T {
        self.step
    }

    /// Gershgorin bounds (lo, hi) enclosing the whole spectrum.
    pub fn gershgorin(&self) -> (T, T) {
        let n = self.n();
        let mut lo = T::infinity();
        let mut hi = T::neg_infinity();
        for i in 0..n {
            let left = if i > 0 { self.offdiag[i - 1].abs() } else { T::zero() };
            let right = if i < n - 1 { self.offdiag[i].abs() } else { T::zero() };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo - T::one(), hi + T::one())
    }

    /// `‖T‖_∞` (max absolute row sum).
    pub fn norm_inf(&self) -> T {
        let n = self.n();
        let mut m = T::zero();
        for i in 0..n {
            let left = if i > 0 { self.offdiag[i - 1].abs() } else { T::zero() };
            let right = if i < n - 1 { self.offdiag[i].abs() } else { T::zero() };
            m = m.max(self.diag[i].abs() + left + right);
        }
        m
    }

    /// y = T v.
    pub fn matvec(&self, v: &[T]) -> Vec<T> {
        let n = self.n();
        let mut y = vec![T::zero(); n];
        for i in 0..n {
            let mut s = self.diag[i] * v[i];
            if i > 0 {
                s = s + self.offdiag[i - 1] * v[i - 1];
            }
            if i < n - 1 {
                s = s + self.offdiag[i] * v[i + 1];
            }
            y[i] = s;
        }
        y
    }
}

/// Number of eigenvalues of `t` strictly below `threshold`.
///
/// LDLT pivot recurrence: the number of negative pivots of `T − threshold·I`
/// equals the number of eigenvalues below the threshold (Sylvester inertia).
/// Exact (deterministic sign count), no tolerance involved.
pub fn sturm_count_below<T: Real>(t: &Tridiagonal<T>, threshold: T) -> Result<usize> {
    if !threshold.is_finite() {
        return Err(Error::input("sturm_count_below: non-finite threshold"));
    }
    let off = &t.offdiag;
    Ok(sturm_kernel(
        t.n(),
        |i| t.diag[i],
        |i| off[i],
        threshold,
    ))
}

/// Streaming variant of [`sturm_count_below`] for grids too large to
/// materialize: diagonal and off-diagonal entries are produced on the fly.
///
/// Same recurrence, same arithmetic order, so it agrees bit-for-bit with the
/// materialized version.
pub fn sturm_count_below_fn<T: Real>(
    n: usize,
    diag: impl Fn(usize) -> T,
    offdiag: impl Fn(usize) -> T,
    threshold: T,
) -> Result<usize> {
    if !threshold.is_finite() {
        return Err(Error::input("sturm_count_below: non-finite threshold"));
    }
    Ok(sturm_kernel(n, diag, offdiag, threshold))
}

/// Pivot guard: far below any meaningful scale but representable in `T`.
fn tiny_pivot<T: Real>() -> T {
    T::min_positive_value() * T::of(1e8)
}

fn sturm_kernel<T: Real>(
    n: usize,
    diag: impl Fn(usize) -> T,
    offdiag: impl Fn(usize) -> T,
    threshold: T,
) -> usize {
    if n == 0 {
        return 0;
    }
    let tiny = tiny_pivot::<T>();
    let mut count = 0usize;
    let mut d = diag(0) - threshold;
    if d < T::zero() {
        count += 1;
    }
    for i in 1..n {
        let safe = if d.abs() < tiny {
            if d >= T::zero() {
                tiny
            } else {
                -tiny
            }
        } else {
            d
        };
        let e = offdiag(i - 1);
        d = (diag(i) - threshold) - e * e / safe;
        if d < T::zero() {
            count += 1;
        }
    }
    count
}

/// Smallest eigenvalue (within `tol`, by bisection on Sturm counts) and the
/// matching eigenvector from inverse iteration.
///
/// The vector is unit in the weighted discrete norm `step·Σv² = 1` and its
/// first significant component (first `|v_i| ≥ 10⁻³·max|v|`) is nonnegative,
/// which makes repeated runs byte-identical.
pub fn lowest_eigenpair<T: Real>(t: &Tridiagonal<T>, tol: T) -> Result<(T, Vec<T>)> {
    if !(tol > T::zero()) {
        return Err(Error::input("lowest_eigenpair: tol must be positive"));
    }
    let n = t.n();
    let (mut lo, mut hi) = t.gershgorin();
    for _ in 0..300 {
        if hi - lo <= tol {
            break;
        }
        let mid = T::of(0.5) * (lo + hi);
        if sturm_kernel(n, |i| t.diag[i], |i| t.offdiag[i], mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let value = T::of(0.5) * (lo + hi);

    // Inverse iteration with the bisection value as shift.  The shift sits
    // within tol of the eigenvalue, so a couple of sweeps suffice; the
    // Rayleigh quotient is tracked only as a convergence monitor.
    let mut v = vec![T::one() / T::of_usize(n).sqrt(); n];
    let mut rq_prev = T::infinity();
    let norm_inf = t.norm_inf();
    let mut converged = false;
    for _ in 0..12 {
        let mut w = solve_shifted(t, value, &v);
        let norm = ksum(w.iter().map(|x| *x * *x)).sqrt();
        if !(norm > T::zero()) || !norm.is_finite() {
            return Err(Error::numerical(
                "lowest_eigenpair: inverse iteration produced a degenerate vector",
            ));
        }
        for x in w.iter_mut() {
            *x = *x / norm;
        }
        v = w;
        let tv = t.matvec(&v);
        let rq = ksum(v.iter().zip(tv.iter()).map(|(a, b)| *a * *b));
        if (rq - rq_prev).abs() <= T::of(1e-12) * norm_inf.max(T::one()) {
            converged = true;
            break;
        }
        rq_prev = rq;
    }
    if !converged {
        let tv = t.matvec(&v);
        let res = ksum(
            tv.iter()
                .zip(v.iter())
                .map(|(a, b)| (*a - value * *b) * (*a - value * *b)),
        )
        .sqrt();
        return Err(Error::numerical(format!(
            "lowest_eigenpair: inverse iteration did not converge; residual {res:e} vs norm {norm_inf:e}"
        )));
    }

    // Weighted normalization and sign convention.
    let norm2 = ksum(v.iter().map(|x| *x * *x));
    let scale = T::one() / (t.step * norm2).sqrt();
    for x in v.iter_mut() {
        *x = *x * scale;
    }
    let vmax = v.iter().fold(T::zero(), |m, x| m.max(x.abs()));
    let cut = T::of(1e-3) * vmax;
    if let Some(first) = v.iter().find(|x| x.abs() >= cut) {
        if *first < T::zero() {
            for x in v.iter_mut() {
                *x = -*x;
            }
        }
    }
    Ok((value, v))
}

/// Solve (T − σ) x = rhs by the Thomas algorithm with a zero-pivot guard.
/// Near-singular systems are exactly what inverse iteration wants: the
/// solution blows up along the eigenvector and is renormalized outside.
fn solve_shifted<T: Real>(t: &Tridiagonal<T>, sigma: T, rhs: &[T]) -> Vec<T> {
    let n = t.n();
    let tiny = tiny_pivot::<T>();
    let guard = |x: T| {
        if x.abs() < tiny {
            if x >= T::zero() {
                tiny
            } else {
                -tiny
            }
        } else {
            x
        }
    };
    let mut c = vec![T::zero(); n];
    let mut d = vec![T::zero(); n];
    let mut beta = guard(t.diag[0] - sigma);
    if n > 1 {
        c[0] = t.offdiag[0] / beta;
    }
    d[0] = rhs[0] / beta;
    for i in 1..n {
        beta = guard((t.diag[i] - sigma) - t.offdiag[i - 1] * c[i - 1]);
        if i < n - 1 {
            c[i] = t.offdiag[i] / beta;
        }
        d[i] = (rhs[i] - t.offdiag[i - 1] * d[i - 1]) / beta;
    }
    let mut x = vec![T::zero(); n];
    x[n - 1] = d[n - 1];
    for i in (0..n - 1).rev() {
        x[i] = d[i] - c[i] * x[i + 1];
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(diag: &[f64], off: &[f64]) -> Tridiagonal<f64> {
        Tridiagonal::new(diag.to_vec(), off.to_vec(), 1.0).unwrap()
    }

    #[test]
    fn decoupled_diagonal() {
        let t = tri(&[1.0, 3.0], &[0.0]);
        assert_eq!(sturm_count_below(&t, 2.0).unwrap(), 1);
    }

    #[test]
    fn laplacian_3x3_counts() {
        // eigenvalues 2-sqrt2, 2, 2+sqrt2
        let t = tri(&[2.0, 2.0, 2.0], &[-1.0, -1.0]);
        assert_eq!(sturm_count_below(&t, 2.0).unwrap(), 1);
        assert_eq!(sturm_count_below(&t, 0.5).unwrap(), 0);
        assert_eq!(sturm_count_below(&t, 3.5).unwrap(), 3);
    }

    #[test]
    fn gershgorin_floor_is_zero_count() {
        let t = tri(&[2.0, -1.0, 4.0], &[0.5, -0.25]);
        let thr = -1.0 - 2.0 * 0.5 - 1.0;
        assert_eq!(sturm_count_below(&t, thr).unwrap(), 0);
    }

    #[test]
    fn non_finite_threshold_is_input_error() {
        let t = tri(&[1.0, 2.0], &[0.1]);
        assert!(sturm_count_below(&t, f64::NAN).unwrap_err().is_input());
    }

    #[test]
    fn streaming_matches_materialized() {
        let diag = [0.3, -1.2, 4.0, 2.5, 0.0];
        let off = [1.0, -0.5, 0.7, 2.0];
        let t = tri(&diag, &off);
        for thr in [-3.0, -0.5, 0.0, 1.7, 6.0] {
            assert_eq!(
                sturm_count_below(&t, thr).unwrap(),
                sturm_count_below_fn(5, |i| diag[i], |i| off[i], thr).unwrap()
            );
        }
    }

    #[test]
    fn lowest_pair_decoupled() {
        let t = tri(&[1.0, 3.0], &[0.0]);
        let (val, vec) = lowest_eigenpair(&t, 1e-12).unwrap();
        assert!((val - 1.0).abs() < 1e-12);
        assert!((vec[0] - 1.0).abs() < 1e-10);
        assert!(vec[1].abs() < 1e-10);
    }

    #[test]
    fn lowest_pair_laplacian() {
        let t = tri(&[2.0, 2.0, 2.0], &[-1.0, -1.0]);
        let (val, _) = lowest_eigenpair(&t, 1e-11).unwrap();
        assert!((val - (2.0 - 2.0f64.sqrt())).abs() < 1e-10);
    }

    #[test]
    fn lowest_pair_deterministic() {
        let t = tri(&[0.4, 1.9, -0.3, 2.2], &[0.6, -0.8, 0.1]);
        let a = lowest_eigenpair(&t, 1e-10).unwrap();
        let b = lowest_eigenpair(&t, 1e-10).unwrap();
        assert_eq!(a.0.to_bits(), b.0.to_bits());
        for (x, y) in a.1.iter().zip(b.1.iter()) {
            assert_eq!(x.to_bits(), y.to_bits());
        }
    }

    #[test]
    fn residual_bound() {
        let t = tri(&[0.4, 1.9, -0.3, 2.2, 1.1], &[0.6, -0.8, 0.1, 0.9]);
        let tol = 1e-10;
        let (val, v) = lowest_eigenpair(&t, tol).unwrap();
        // v is weighted-unit; rescale to euclidean unit for the residual bound
        let n2: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        let tv = t.matvec(&v);
        let res: f64 = tv
            .iter()
            .zip(v.iter())
            .map(|(a, b)| (a - val * b) * (a - val * b))
            .sum::<f64>()
            .sqrt()
            / n2;
        assert!(res <= 10.0 * tol * t.norm_inf(), "residual {res:e}");
    }
}
