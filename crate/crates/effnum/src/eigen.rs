//! Symmetric eigensolvers: Householder tridiagonalization (tred2) and
//! implicit-shift QL with eigenvector accumulation (tql2), ported from the
//! EISPACK/JAMA routines.
//!
//! Matrices are row-major `Vec<Vec<f64>>`; eigenvector `j` is column `j` of
//! the accumulated transformation.

use crate::error::{Error, Result};

const MAX_QL_ITER: usize = 50;

/// Implicit-shift QL on a symmetric tridiagonal matrix.
///
/// `d` holds the diagonal, `e[i]` the coupling between sites `i` and `i+1`
/// (`e[n-1]` is workspace and must be 0). `v` is the matrix the rotations are
/// accumulated into: pass the identity to get eigenvectors of the
/// tridiagonal matrix itself, or the tred2 output for a dense solve.
/// On return `d` holds unordered eigenvalues.
pub(crate) fn tql2(d: &mut [f64], e: &mut [f64], v: &mut [Vec<f64>]) -> Result<()> {
    let n = d.len();
    if n == 0 {
        return Ok(());
    }
    let mut f = 0.0f64;
    let mut tst1 = 0.0f64;
    let eps = 2.0f64.powi(-52);

    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n {
            if e[m].abs() <= eps * tst1 {
                break;
            }
            m += 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > MAX_QL_ITER {
                    return Err(Error::NoConvergence(format!(
                        "QL exceeded {MAX_QL_ITER} iterations at index {l}"
                    )));
                }

                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for item in d.iter_mut().take(n).skip(l + 2) {
                    *item -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0f64;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0f64;
                let mut s2 = 0.0f64;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let gi = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * gi;
                    d[i + 1] = h + s * (c * gi + s * d[i]);

                    for row in v.iter_mut() {
                        let h = row[i + 1];
                        row[i + 1] = s * row[i] + c * h;
                        row[i] = c * row[i] - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;

                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}

/// Householder reduction of a symmetric matrix to tridiagonal form.
///
/// On return `v` holds the orthogonal transformation, `d` the diagonal and
/// `e` the subdiagonal in the convention of [`tql2`] (`e[i]` couples `i` and
/// `i+1`, `e[n-1] = 0`).
pub(crate) fn tred2(v: &mut [Vec<f64>], d: &mut [f64], e: &mut [f64]) {
    let n = d.len();
    d.copy_from_slice(&v[n - 1]);

    for i in (1..n).rev() {
        let mut scale = 0.0f64;
        let mut h = 0.0f64;
        for item in d.iter().take(i) {
            scale += item.abs();
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[i - 1][j];
                v[i][j] = 0.0;
                v[j][i] = 0.0;
            }
        } else {
            for item in d.iter_mut().take(i) {
                *item /= scale;
                h += *item * *item;
            }
            let mut f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for item in e.iter_mut().take(i) {
                *item = 0.0;
            }

            for j in 0..i {
                f = d[j];
                v[j][i] = f;
                g = e[j] + v[j][j] * f;
                for k in j + 1..i {
                    g += v[k][j] * d[k];
                    e[k] += v[k][j] * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    v[k][j] -= f * e[k] + g * d[k];
                }
                d[j] = v[i - 1][j];
                v[i][j] = 0.0;
            }
        }
        d[i] = h;
    }

    // accumulate transformations
    for i in 0..n - 1 {
        v[n - 1][i] = v[i][i];
        v[i][i] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for (dk, row) in d.iter_mut().zip(v.iter()).take(i + 1) {
                *dk = row[i + 1] / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for row in v.iter().take(i + 1) {
                    g += row[i + 1] * row[j];
                }
                for (row, dk) in v.iter_mut().zip(d.iter()).take(i + 1) {
                    row[j] -= g * dk;
                }
            }
        }
        for row in v.iter_mut().take(i + 1) {
            row[i + 1] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[n - 1][j];
        v[n - 1][j] = 0.0;
    }
    v[n - 1][n - 1] = 1.0;

    // shift the subdiagonal into tql2's convention
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity(n: usize) -> Vec<Vec<f64>> {
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect()
    }

    #[test]
    fn two_site_chain() {
        // H = [[0, -1], [-1, 0]] -> eigenvalues ±1
        let mut d = vec![0.0, 0.0];
        let mut e = vec![-1.0, 0.0];
        let mut v = identity(2);
        tql2(&mut d, &mut e, &mut v).unwrap();
        d.sort_by(f64::total_cmp);
        assert!((d[0] + 1.0).abs() < 1e-14);
        assert!((d[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn diagonal_matrix_keeps_basis_vectors() {
        let mut d = vec![2.0, -3.0];
        let mut e = vec![0.0, 0.0];
        let mut v = identity(2);
        tql2(&mut d, &mut e, &mut v).unwrap();
        assert_eq!(d, vec![2.0, -3.0]);
        assert_eq!(v, identity(2));
    }

    #[test]
    fn dense_route_matches_tridiagonal_route() {
        // random-ish symmetric tridiagonal solved both ways
        let n = 12;
        let diag: Vec<f64> = (0..n).map(|i| ((i * 7 % 5) as f64) - 2.0).collect();
        let off: Vec<f64> = (0..n - 1).map(|i| -1.0 - 0.1 * (i as f64)).collect();

        let mut d1 = diag.clone();
        let mut e1 = off.clone();
        e1.push(0.0);
        let mut v1 = identity(n);
        tql2(&mut d1, &mut e1, &mut v1).unwrap();
        d1.sort_by(f64::total_cmp);

        let mut a = vec![vec![0.0; n]; n];
        for i in 0..n {
            a[i][i] = diag[i];
            if i + 1 < n {
                a[i][i + 1] = off[i];
                a[i + 1][i] = off[i];
            }
        }
        let mut d2 = vec![0.0; n];
        let mut e2 = vec![0.0; n];
        tred2(&mut a, &mut d2, &mut e2);
        tql2(&mut d2, &mut e2, &mut a).unwrap();
        d2.sort_by(f64::total_cmp);

        for (x, y) in d1.iter().zip(&d2) {
            assert!((x - y).abs() < 1e-12, "{x} vs {y}");
        }
    }
}
