//! Minimal dense linear algebra for the small matrices this crate needs:
//! k x k Fisher information blocks (k <= 4) and the Hessian used for
//! standard errors (a dozen rows at most).

/// Square matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    pub n: usize,
    pub data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix { n, data: vec![0.0; n * n] }
    }

    pub fn from_diag(diag: &[f64]) -> Self {
        let n = diag.len();
        let mut m = Matrix::zeros(n);
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    pub fn is_diagonal(&self, tol: f64) -> bool {
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j && self[(i, j)].abs() > tol {
                    return false;
                }
            }
        }
        true
    }

    pub fn mat_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    /// Inverse by Gauss-Jordan elimination with partial pivoting.
    /// Returns `None` when a pivot is numerically zero.
    pub fn inverse(&self) -> Option<Matrix> {
        let n = self.n;
        let mut a = self.data.clone();
        let mut inv = Matrix::from_diag(&vec![1.0; n]).data;
        for col in 0..n {
            let mut pivot = col;
            for r in col + 1..n {
                if a[r * n + col].abs() > a[pivot * n + col].abs() {
                    pivot = r;
                }
            }
            let p = a[pivot * n + col];
            if !p.is_finite() || p.abs() < 1e-300 {
                return None;
            }
            if pivot != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot * n + j);
                    inv.swap(col * n + j, pivot * n + j);
                }
            }
            let p = a[col * n + col];
            for j in 0..n {
                a[col * n + j] /= p;
                inv[col * n + j] /= p;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[r * n + col];
                if factor == 0.0 {
                    continue;
                }
                for j in 0..n {
                    a[r * n + j] -= factor * a[col * n + j];
                    inv[r * n + j] -= factor * inv[col * n + j];
                }
            }
        }
        Some(Matrix { n, data: inv })
    }

    /// Lower-triangular Cholesky factor L with A = L L^T.
    /// Returns `None` when the matrix is not positive definite.
    pub fn cholesky_lower(&self) -> Option<Matrix> {
        let n = self.n;
        let mut l = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                let mut s = self[(i, j)];
                for k in 0..j {
                    s -= l[(i, k)] * l[(j, k)];
                }
                if i == j {
                    if !(s > 0.0) || !s.is_finite() {
                        return None;
                    }
                    l[(i, i)] = s.sqrt();
                } else {
                    l[(i, j)] = s / l[(j, j)];
                }
            }
        }
        Some(l)
    }

    /// One-norm (maximum absolute column sum).
    pub fn norm_one(&self) -> f64 {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| self[(i, j)].abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// One-norm condition number estimate ||A||_1 * ||A^-1||_1.
    pub fn condition_one(&self, inverse: &Matrix) -> f64 {
        self.norm_one() * inverse.norm_one()
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.n + j]
    }
}

/// Solves A x = b for symmetric positive definite A via Cholesky.
pub fn solve_spd(a: &Matrix, b: &[f64]) -> Option<Vec<f64>> {
    let l = a.cholesky_lower()?;
    let n = a.n;
    // Forward substitution L y = b.
    let mut y = vec![0.0; n];
    for i in 0..n {
        let mut s = b[i];
        for k in 0..i {
            s -= l[(i, k)] * y[k];
        }
        y[i] = s / l[(i, i)];
    }
    // Back substitution L^T x = y.
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut s = y[i];
        for k in i + 1..n {
            s -= l[(k, i)] * x[k];
        }
        x[i] = s / l[(i, i)];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_known_matrix() {
        let a = Matrix { n: 2, data: vec![4.0, 7.0, 2.0, 6.0] };
        let inv = a.inverse().unwrap();
        let want = [0.6, -0.7, -0.2, 0.4];
        for (g, w) in inv.data.iter().zip(want) {
            assert!((g - w).abs() < 1e-12);
        }
    }

    #[test]
    fn cholesky_reconstructs() {
        let a = Matrix { n: 3, data: vec![4.0, 2.0, 0.6, 2.0, 5.0, 1.0, 0.6, 1.0, 3.0] };
        let l = a.cholesky_lower().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let mut s = 0.0;
                for k in 0..3 {
                    s += l[(i, k)] * l[(j, k)];
                }
                assert!((s - a[(i, j)]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn cholesky_rejects_indefinite() {
        let a = Matrix { n: 2, data: vec![1.0, 2.0, 2.0, 1.0] };
        assert!(a.cholesky_lower().is_none());
    }

    #[test]
    fn solve_spd_matches_inverse() {
        let a = Matrix { n: 2, data: vec![3.0, 1.0, 1.0, 2.0] };
        let x = solve_spd(&a, &[5.0, 5.0]).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-12);
        assert!((x[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let a = Matrix { n: 2, data: vec![1.0, 2.0, 2.0, 4.0] };
        assert!(a.inverse().is_none());
    }
}
