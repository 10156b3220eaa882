use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::poly::CharPoly;
use crate::error::{Error, Result};
use crate::graphcore::Graph;

/// Default cap on the vertex count accepted by [`charpoly`].
pub const DEFAULT_CHARPOLY_LIMIT: usize = 24;

/// Default relative tolerance for eigenvalue assertions.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// `L = D - A` as a dense row-major integer matrix.
pub fn laplacian(g: &Graph) -> Vec<Vec<i64>> {
    let n = g.n();
    let mut l = vec![vec![0i64; n]; n];
    for (u, v) in g.edges() {
        l[u][v] = -1;
        l[v][u] = -1;
        l[u][u] += 1;
        l[v][v] += 1;
    }
    l
}

pub fn charpoly(g: &Graph) -> Result<CharPoly> {
    charpoly_with_limit(g, DEFAULT_CHARPOLY_LIMIT)
}

/// `det(xI - L)` by Faddeev-LeVerrier. Every division in the recurrence is
/// exact; a remainder means arithmetic went wrong and is reported as such.
pub fn charpoly_with_limit(g: &Graph, limit: usize) -> Result<CharPoly> {
    if g.n() > limit {
        return Err(Error::SizeLimit {
            what: "characteristic polynomial",
            n: g.n(),
            limit,
        });
    }
    let l = laplacian(g);
    match faddeev_leverrier_i128(&l) {
        Some(c) => Ok(CharPoly::from_coeffs(c.into_iter().map(BigInt::from).collect())),
        None => faddeev_leverrier_big(&l).map(CharPoly::from_coeffs),
    }
}

/// Fixed-width attempt; `None` on overflow or an inexact division.
fn faddeev_leverrier_i128(a: &[Vec<i64>]) -> Option<Vec<i128>> {
    let n = a.len();
    let mut c = vec![0i128; n + 1];
    c[n] = 1;
    let mut m = vec![vec![0i128; n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for (l, &a_il) in a[i].iter().enumerate() {
                if a_il == 0 {
                    continue;
                }
                for j in 0..n {
                    let term = m[l][j].checked_mul(a_il as i128)?;
                    next[i][j] = next[i][j].checked_add(term)?;
                }
            }
            next[i][i] = next[i][i].checked_add(c[n - k + 1])?;
        }
        m = next;
        // c_{n-k} = -tr(A M_k) / k
        let mut trace = 0i128;
        for i in 0..n {
            for (l, &a_il) in a[i].iter().enumerate() {
                if a_il != 0 {
                    trace = trace.checked_add(m[l][i].checked_mul(a_il as i128)?)?;
                }
            }
        }
        let (q, r) = trace.div_rem(&(k as i128));
        if r != 0 {
            return None;
        }
        c[n - k] = q.checked_neg()?;
    }
    Some(c)
}

fn faddeev_leverrier_big(a: &[Vec<i64>]) -> Result<Vec<BigInt>> {
    let n = a.len();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::from(1);
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for (l, &a_il) in a[i].iter().enumerate() {
                if a_il == 0 {
                    continue;
                }
                for j in 0..n {
                    next[i][j] += &m[l][j] * a_il;
                }
            }
            next[i][i] += &c[n - k + 1];
        }
        m = next;
        let mut trace = BigInt::zero();
        for i in 0..n {
            for (l, &a_il) in a[i].iter().enumerate() {
                if a_il != 0 {
                    trace += &m[l][i] * a_il;
                }
            }
        }
        let (q, r) = trace.div_rem(&BigInt::from(k));
        if !r.is_zero() {
            return Err(Error::Inconsistent(format!(
                "Faddeev-LeVerrier trace not divisible by {k}"
            )));
        }
        c[n - k] = -q;
    }
    Ok(c)
}

/// Floating-point Laplacian spectrum, sorted descending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumNumeric {
    pub values: Vec<f64>,
    pub tolerance: f64,
}

impl SpectrumNumeric {
    pub fn max(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    /// Absolute slack used for comparisons: `tolerance * max(1, |lambda_max|)`.
    pub fn slack(&self) -> f64 {
        self.tolerance * self.max().abs().max(1.0)
    }

    /// Checks length, non-negativity, a zero minimum and the trace `2|E|`.
    pub fn check(&self, g: &Graph) -> Result<()> {
        let slack = self.slack();
        let bad = |why: String| Err(Error::Inconsistent(why));
        if self.values.len() != g.n() {
            return bad(format!("{} eigenvalues for {} vertices", self.values.len(), g.n()));
        }
        if let Some(&min) = self.values.last() {
            if min.abs() > slack {
                return bad(format!("smallest eigenvalue {min} is not zero"));
            }
        }
        let trace: f64 = self.values.iter().sum();
        let expected = 2.0 * g.edge_count() as f64;
        if (trace - expected).abs() > slack * g.n().max(1) as f64 {
            return bad(format!("eigenvalue sum {trace} differs from 2|E| = {expected}"));
        }
        Ok(())
    }
}

pub fn spectrum_numeric(g: &Graph, tolerance: f64) -> Result<SpectrumNumeric> {
    let n = g.n();
    let l = laplacian(g);
    let matrix = DMatrix::from_fn(n, n, |i, j| l[i][j] as f64);
    let eigen = SymmetricEigen::try_new(matrix, f64::EPSILON, 10_000).ok_or(Error::NoConvergence)?;
    let mut values: Vec<f64> = eigen.eigenvalues.iter().copied().collect();
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::NoConvergence);
    }
    values.sort_by(|a, b| b.total_cmp(a));
    let spectrum = SpectrumNumeric { values, tolerance };
    spectrum.check(g)?;
    Ok(spectrum)
}

/// Largest Laplacian eigenvalue.
pub fn lambda_max(g: &Graph) -> Result<f64> {
    Ok(spectrum_numeric(g, DEFAULT_TOLERANCE)?.max())
}
