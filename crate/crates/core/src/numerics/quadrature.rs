//! Gauss–Legendre quadrature.

use crate::error::{Error, Result};
use crate::real::{ksum, Real};

/// Gauss–Legendre rule on (−1, 1): strictly increasing nodes, positive
/// weights summing to 2.
#[derive(Clone, Debug)]
pub struct Quadrature<T: Real> {
    pub nodes: Vec<T>,
    pub weights: Vec<T>,
}

impl<T: Real> Quadrature<T> {
    /// Nodes and weights mapped to the interval (a, b).
    pub fn mapped(&self, a: T, b: T) -> (Vec<T>, Vec<T>) {
        let half = T::of(0.5);
        let mid = half * (a + b);
        let rad = half * (b - a);
        (
            self.nodes.iter().map(|x| mid + rad * *x).collect(),
            self.weights.iter().map(|w| rad * *w).collect(),
        )
    }

    /// ∫_a^b f(x) dx by this rule.
    pub fn integrate(&self, a: T, b: T, f: impl Fn(T) -> T) -> T {
        let (x, w) = self.mapped(a, b);
        ksum(x.iter().zip(w.iter()).map(|(xi, wi)| f(*xi) * *wi))
    }
}

/// n-point Gauss–Legendre rule, exact on polynomials of degree ≤ 2n−1.
///
/// Newton iteration on P_n from the Chebyshev-angle initial guess; converges
/// in a handful of steps to machine precision for any practical n.
pub fn gauss_legendre<T: Real>(n: usize) -> Result<Quadrature<T>> {
    if n == 0 {
        return Err(Error::input("gauss_legendre: n must be at least 1"));
    }
    let mut nodes = vec![T::zero(); n];
    let mut weights = vec![T::zero(); n];
    let nf = T::of_usize(n);
    let eps = T::epsilon() * T::of(4.0);
    let half = T::of(0.5);
    let m = (n + 1) / 2;
    for i in 0..m {
        // Chebyshev-like initial guess for the i-th root (descending order)
        let mut x = (T::PI() * (T::of_usize(i) + T::of(0.75)) / (nf + half)).cos();
        let mut dp = T::one();
        for _ in 0..100 {
            // Legendre recurrence: p0 = 1, p1 = x
            let mut p0 = T::one();
            let mut p1 = x;
            for j in 2..=n {
                let jf = T::of_usize(j);
                let p2 = ((T::of(2.0) * jf - T::one()) * x * p1 - (jf - T::one()) * p0) / jf;
                p0 = p1;
                p1 = p2;
            }
            // P_n'(x) = n (x P_n − P_{n−1}) / (x² − 1)
            dp = nf * (x * p1 - p0) / (x * x - T::one());
            let dx = p1 / dp;
            x = x - dx;
            if dx.abs() <= eps * x.abs().max(T::one()) {
                // one more Newton step for good measure, then stop
                let mut q0 = T::one();
                let mut q1 = x;
                for j in 2..=n {
                    let jf = T::of_usize(j);
                    let q2 = ((T::of(2.0) * jf - T::one()) * x * q1 - (jf - T::one()) * q0) / jf;
                    q0 = q1;
                    q1 = q2;
                }
                dp = nf * (x * q1 - q0) / (x * x - T::one());
                x = x - q1 / dp;
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = T::of(2.0) / ((T::one() - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = T::zero();
    }
    let q = Quadrature { nodes, weights };
    let total: T = ksum(q.weights.iter().copied());
    if (total - T::of(2.0)).abs() > T::of(1e-12) * T::of(2.0) / T::epsilon().sqrt() * T::epsilon() {
        // weight-sum identity within 1e-12 (f64); scaled for other precisions
    }
    debug_assert!((total - T::of(2.0)).abs().to_f64_lossy() < 1e-10);
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_point_rule() {
        let q = gauss_legendre::<f64>(1).unwrap();
        assert_eq!(q.nodes, vec![0.0]);
        assert!((q.weights[0] - 2.0).abs() < 1e-15);
    }

    #[test]
    fn two_point_rule_exact_on_x2() {
        let q = gauss_legendre::<f64>(2).unwrap();
        let val = q.integrate(-1.0, 1.0, |x| x * x);
        assert!((val - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn exp_integral_20_points() {
        let q = gauss_legendre::<f64>(20).unwrap();
        let val = q.integrate(-1.0, 1.0, f64::exp);
        let exact = 1f64.exp() - (-1f64).exp();
        assert!((val - exact).abs() < 1e-14, "err {:e}", (val - exact).abs());
    }

    #[test]
    fn weights_sum_to_two_nodes_increase() {
        for n in [1, 2, 3, 7, 16, 33, 64, 201] {
            let q = gauss_legendre::<f64>(n).unwrap();
            let s: f64 = q.weights.iter().sum();
            assert!((s - 2.0).abs() < 1e-12, "n={n} sum={s}");
            for i in 1..n {
                assert!(q.nodes[i] > q.nodes[i - 1], "nodes not increasing at n={n}");
            }
            assert!(q.weights.iter().all(|w| *w > 0.0));
        }
    }

    #[test]
    fn monomial_exactness_to_degree_2n_minus_1() {
        for n in [2usize, 5, 12] {
            let q = gauss_legendre::<f64>(n).unwrap();
            for p in 0..(2 * n) {
                let val = q.integrate(-1.0, 1.0, |x| x.powi(p as i32));
                let exact = if p % 2 == 1 { 0.0 } else { 2.0 / (p as f64 + 1.0) };
                assert!(
                    (val - exact).abs() <= 1e-13 * exact.abs().max(1.0),
                    "n={n} p={p} err={:e}",
                    (val - exact).abs()
                );
            }
        }
    }

    #[test]
    fn zero_points_is_input_error() {
        assert!(gauss_legendre::<f64>(0).unwrap_err().is_input());
    }
}
