//! Weighted Hermitian matrices and their eigenvalue counts.
//!
//! A [`HermitianGram`] is a discretized integral operator: kernel values on
//! quadrature nodes plus the positive quadrature weights.  Its spectrum is
//! that of `W^{1/2} A W^{1/2}` with `W = diag(weights)`.  Counting is done
//! through one real symmetric code path: the complex n×n matrix is embedded
//! into the 2n×2n real symmetric `[[Re, −Im], [Im, Re]]`, which carries every
//! eigenvalue with multiplicity doubled, reduced to tridiagonal form by
//! Householder reflections and counted by a Sturm sequence.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::real::Real;

use super::tridiagonal::{sturm_count_below, Tridiagonal};

/// Hermitian kernel matrix with quadrature weights and the k-nodes the
/// kernel was evaluated on.
#[derive(Clone, Debug)]
pub struct HermitianGram<T: Real> {
    n: usize,
    entries: Vec<Complex<T>>,
    weights: Vec<T>,
    nodes: Vec<T>,
}

impl<T: Real> HermitianGram<T> {
    /// Build from row-major entries.  Roundoff asymmetry is symmetrized away;
    /// genuine asymmetry is rejected.
    pub fn new(entries: Vec<Complex<T>>, weights: Vec<T>, nodes: Vec<T>) -> Result<Self> {
        let n = weights.len();
        if entries.len() != n * n {
            return Err(Error::input(format!(
                "hermitian gram: {} entries for dimension {n}",
                entries.len()
            )));
        }
        if nodes.len() != n {
            return Err(Error::input("hermitian gram: nodes/weights length mismatch"));
        }
        if weights.iter().any(|w| !(*w > T::zero()) || !w.is_finite()) {
            return Err(Error::input("hermitian gram: weights must be positive"));
        }
        if entries.iter().any(|e| !e.re.is_finite() || !e.im.is_finite()) {
            return Err(Error::input("hermitian gram: non-finite entry"));
        }
        let mut m = entries;
        let mut scale = T::zero();
        for e in m.iter() {
            scale = scale.max(e.norm_sqr().sqrt());
        }
        let tol = T::of(1e-8) * scale.max(T::one());
        for i in 0..n {
            for j in (i + 1)..n {
                let a = m[i * n + j];
                let b = m[j * n + i].conj();
                if (a - b).norm_sqr().sqrt() > tol {
                    return Err(Error::input("hermitian gram: entries are not Hermitian"));
                }
                let avg = (a + b) * Complex::new(T::of(0.5), T::zero());
                m[i * n + j] = avg;
                m[j * n + i] = avg.conj();
            }
            m[i * n + i] = Complex::new(m[i * n + i].re, T::zero());
        }
        Ok(HermitianGram {
            n,
            entries: m,
            weights,
            nodes,
        })
    }

    pub fn zero(nodes: Vec<T>, weights: Vec<T>) -> Result<Self> {
        let n = nodes.len();
        Self::new(vec![Complex::new(T::zero(), T::zero()); n * n], weights, nodes)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex<T> {
        self.entries[i * self.n + j]
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    /// `W^{1/2} A W^{1/2}` as a dense complex matrix (row-major).
    pub fn weighted(&self) -> Vec<Complex<T>> {
        let n = self.n;
        let sw: Vec<T> = self.weights.iter().map(|w| w.sqrt()).collect();
        let mut m = self.entries.clone();
        for i in 0..n {
            for j in 0..n {
                let s = sw[i] * sw[j];
                m[i * n + j] = m[i * n + j] * Complex::new(s, T::zero());
            }
        }
        m
    }
}

/// Number of eigenvalues of the weighted matrix strictly above `s`.
///
/// The 2n×2n real embedding doubles every eigenvalue, so the embedded count
/// must be even; an odd count means an eigenvalue sits within the splitting
/// tolerance of `s` and the caller must perturb `s`.
pub fn hermitian_count_above<T: Real>(g: &HermitianGram<T>, s: T) -> Result<usize> {
    if !(s > T::zero()) || !s.is_finite() {
        return Err(Error::input("hermitian_count_above: s must be positive and finite"));
    }
    let n = g.n();
    let w = g.weighted();
    // [[Re, -Im], [Im, Re]]
    let m = 2 * n;
    let mut a = vec![T::zero(); m * m];
    for i in 0..n {
        for j in 0..n {
            let z = w[i * n + j];
            a[i * m + j] = z.re;
            a[i * m + (n + j)] = -z.im;
            a[(n + i) * m + j] = z.im;
            a[(n + i) * m + (n + j)] = z.re;
        }
    }
    let (diag, off) = householder_tridiagonalize(&mut a, m);
    let tri = Tridiagonal::new(diag, off, T::one())?;
    let below = sturm_count_below(&tri, s)?;
    let above = m - below;
    if above % 2 != 0 {
        return Err(Error::numerical(format!(
            "hermitian_count_above: odd embedded count {above}; an eigenvalue lies within \
             splitting tolerance of s = {s} — perturb s"
        )));
    }
    Ok(above / 2)
}

/// Householder reduction of a dense real symmetric matrix (row-major,
/// destroyed) to tridiagonal form.  Returns (diagonal, sub-diagonal).
pub(crate) fn householder_tridiagonalize<T: Real>(a: &mut [T], n: usize) -> (Vec<T>, Vec<T>) {
    assert_eq!(a.len(), n * n);
    let mut e = vec![T::zero(); n];
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = T::zero();
        if l > 0 {
            let mut scale = T::zero();
            for k in 0..=l {
                scale = scale + a[i * n + k].abs();
            }
            if scale == T::zero() {
                e[i] = a[i * n + l];
            } else {
                for k in 0..=l {
                    a[i * n + k] = a[i * n + k] / scale;
                    h = h + a[i * n + k] * a[i * n + k];
                }
                let f = a[i * n + l];
                let gsign = if f >= T::zero() { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * gsign;
                h = h - f * gsign;
                a[i * n + l] = f - gsign;
                let mut fsum = T::zero();
                for j in 0..=l {
                    let mut gacc = T::zero();
                    for k in 0..=j {
                        gacc = gacc + a[j * n + k] * a[i * n + k];
                    }
                    for k in (j + 1)..=l {
                        gacc = gacc + a[k * n + j] * a[i * n + k];
                    }
                    e[j] = gacc / h;
                    fsum = fsum + e[j] * a[i * n + j];
                }
                let hh = fsum / (h + h);
                for j in 0..=l {
                    let fj = a[i * n + j];
                    let gj = e[j] - hh * fj;
                    e[j] = gj;
                    for k in 0..=j {
                        a[j * n + k] = a[j * n + k] - (fj * e[k] + gj * a[i * n + k]);
                    }
                }
            }
        } else {
            e[i] = a[i * n + l];
        }
    }
    let diag: Vec<T> = (0..n).map(|i| a[i * n + i]).collect();
    let off: Vec<T> = (1..n).map(|i| e[i]).collect();
    (diag, off)
}
