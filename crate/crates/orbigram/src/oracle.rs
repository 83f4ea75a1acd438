//! Independent verification routes.
//!
//! Nothing here shares code with the production kernels it exists to check:
//! [`jacobi_eigenvalues`] is a classical two-sided cyclic Jacobi eigensolver
//! (the production SVD is one-sided), and [`brute_force_min_residual`] scans an
//! explicit grid of rotations with hand-written scalar loops instead of solving
//! the orthogonal alignment problem in closed form.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::image::LabeledImage;
use crate::tol::MAX_JACOBI_SWEEPS;

/// Search grid for [`brute_force_min_residual`].
#[derive(Debug, Clone)]
pub struct GridSpec {
    /// Number of evenly spaced rotation angles in the plane. Must be >= 4.
    pub angle_count: usize,
    /// Also scan the improper coset (rotation composed with a fixed reflection).
    pub include_reflections: bool,
    /// Number of random rotations sampled in 3-space. Must be >= 1.
    pub sample_count: usize,
}

impl GridSpec {
    pub fn new(angle_count: usize, include_reflections: bool, sample_count: usize) -> Self {
        let spec = Self {
            angle_count,
            include_reflections,
            sample_count,
        };
        spec.assert_valid();
        spec
    }

    fn assert_valid(&self) {
        assert!(self.angle_count >= 4, "angle_count must be at least 4");
        assert!(self.sample_count >= 1, "sample_count must be at least 1");
    }
}

/// Eigenvalues of a symmetric matrix, sorted nonincreasing, by classical
/// cyclic Jacobi rotations. Input must be symmetric to about 1e-12 relative.
pub fn jacobi_eigenvalues(matrix: &DMatrix<f64>) -> Result<Vec<f64>> {
    let m = matrix.nrows();
    assert_eq!(m, matrix.ncols(), "matrix must be square");
    let scale = matrix.iter().fold(0.0f64, |acc, &v| acc.max(v.abs()));
    for i in 0..m {
        for j in (i + 1)..m {
            assert!(
                (matrix[(i, j)] - matrix[(j, i)]).abs() <= 1e-12 * (1.0 + scale),
                "matrix must be symmetric"
            );
        }
    }

    // Work on a plain row-major copy; a[i][j] stays symmetric throughout.
    let mut a: Vec<Vec<f64>> = (0..m)
        .map(|i| (0..m).map(|j| matrix[(i, j)]).collect())
        .collect();

    let frob: f64 = a
        .iter()
        .flat_map(|row| row.iter())
        .map(|v| v * v)
        .sum::<f64>()
        .sqrt();
    let stop = 1e-15 * (1.0 + frob);

    for _ in 0..MAX_JACOBI_SWEEPS {
        let mut off = 0.0f64;
        for (i, row) in a.iter().enumerate() {
            for v in &row[(i + 1)..] {
                off += 2.0 * v * v;
            }
        }
        if off.sqrt() <= stop {
            let mut eigs: Vec<f64> = (0..m).map(|i| a[i][i]).collect();
            eigs.sort_by(|x, y| y.partial_cmp(x).unwrap());
            return Ok(eigs);
        }

        for p in 0..m {
            for q in (p + 1)..m {
                let apq = a[p][q];
                if apq.abs() <= f64::MIN_POSITIVE {
                    continue;
                }
                // Rotation angle that annihilates a[p][q].
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                for row in a.iter_mut() {
                    let aip = row[p];
                    let aiq = row[q];
                    row[p] = c * aip - s * aiq;
                    row[q] = s * aip + c * aiq;
                }
                let (head, tail) = a.split_at_mut(q);
                let (row_p, row_q) = (&mut head[p], &mut tail[0]);
                for (api, aqi) in row_p.iter_mut().zip(row_q.iter_mut()) {
                    let (x, y) = (*api, *aqi);
                    *api = c * x - s * y;
                    *aqi = s * x + c * y;
                }
            }
        }
    }
    Err(Error::ConvergenceFailure {
        sweeps: MAX_JACOBI_SWEEPS,
    })
}

/// Minimum of `||center(Y1) R^T - center(Y2)||_F` over a finite set of
/// orthogonal matrices `R`: an evenly spaced angle grid in the plane, or
/// `sample_count` quaternion-sampled rotations in 3-space (fixed internal
/// seed, so the scan is deterministic). With `include_reflections` the
/// improper coset is scanned as well. Supports `k` in {2, 3} only.
pub fn brute_force_min_residual(
    y1: &LabeledImage,
    y2: &LabeledImage,
    grid: &GridSpec,
) -> Result<f64> {
    grid.assert_valid();
    assert_eq!(y1.n(), y2.n(), "images must have the same number of points");
    assert_eq!(y1.k(), y2.k(), "images must share an ambient dimension");
    let k = y1.k();
    let c1 = centered_rows(y1);
    let c2 = centered_rows(y2);
    match k {
        2 => Ok(scan_plane(&c1, &c2, grid)),
        3 => Ok(scan_space(&c1, &c2, grid)),
        other => Err(Error::UnsupportedDimension(other)),
    }
}

fn centered_rows(y: &LabeledImage) -> Vec<Vec<f64>> {
    let (n, k) = (y.n(), y.k());
    let m = y.matrix();
    let mut mean = vec![0.0f64; k];
    for i in 0..n {
        for (j, mj) in mean.iter_mut().enumerate() {
            *mj += m[(i, j)];
        }
    }
    for mj in &mut mean {
        *mj /= n as f64;
    }
    (0..n)
        .map(|i| (0..k).map(|j| m[(i, j)] - mean[j]).collect())
        .collect()
}

fn scan_plane(c1: &[Vec<f64>], c2: &[Vec<f64>], grid: &GridSpec) -> f64 {
    let mut best = f64::INFINITY;
    for j in 0..grid.angle_count {
        let theta = 2.0 * std::f64::consts::PI * (j as f64) / (grid.angle_count as f64);
        let (s, c) = theta.sin_cos();
        let mut rot = 0.0f64;
        let mut refl = 0.0f64;
        for (p, q) in c1.iter().zip(c2.iter()) {
            let (x, y) = (p[0], p[1]);
            // Proper: R(theta) p. Improper: R(theta) applied to (x, -y).
            let dxr = c * x - s * y - q[0];
            let dyr = s * x + c * y - q[1];
            rot += dxr * dxr + dyr * dyr;
            if grid.include_reflections {
                let dxf = c * x + s * y - q[0];
                let dyf = s * x - c * y - q[1];
                refl += dxf * dxf + dyf * dyf;
            }
        }
        best = best.min(rot);
        if grid.include_reflections {
            best = best.min(refl);
        }
    }
    best.sqrt()
}

fn scan_space(c1: &[Vec<f64>], c2: &[Vec<f64>], grid: &GridSpec) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6f72_6269_6772_616d);
    let mut best = f64::INFINITY;
    for _ in 0..grid.sample_count {
        let r = random_quaternion_rotation(&mut rng);
        best = best.min(residual_space(c1, c2, &r, false));
        if grid.include_reflections {
            best = best.min(residual_space(c1, c2, &r, true));
        }
    }
    best.sqrt()
}

/// Rotation matrix from a uniformly random unit quaternion.
fn random_quaternion_rotation(rng: &mut ChaCha8Rng) -> [[f64; 3]; 3] {
    loop {
        // Gaussian components via Box-Muller keeps this route independent of
        // the library's samplers.
        let mut q = [0.0f64; 4];
        for pair in 0..2 {
            let u1: f64 = rng.random::<f64>().max(f64::MIN_POSITIVE);
            let u2: f64 = rng.random();
            let r = (-2.0 * u1.ln()).sqrt();
            let phi = 2.0 * std::f64::consts::PI * u2;
            q[2 * pair] = r * phi.cos();
            q[2 * pair + 1] = r * phi.sin();
        }
        let norm = q.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm < 1e-6 {
            continue;
        }
        let [w, x, y, z] = [q[0] / norm, q[1] / norm, q[2] / norm, q[3] / norm];
        return [
            [
                1.0 - 2.0 * (y * y + z * z),
                2.0 * (x * y - z * w),
                2.0 * (x * z + y * w),
            ],
            [
                2.0 * (x * y + z * w),
                1.0 - 2.0 * (x * x + z * z),
                2.0 * (y * z - x * w),
            ],
            [
                2.0 * (x * z - y * w),
                2.0 * (y * z + x * w),
                1.0 - 2.0 * (x * x + y * y),
            ],
        ];
    }
}

fn residual_space(c1: &[Vec<f64>], c2: &[Vec<f64>], r: &[[f64; 3]; 3], reflect: bool) -> f64 {
    let mut sum = 0.0f64;
    for (p, q) in c1.iter().zip(c2.iter()) {
        let pz = if reflect { -p[2] } else { p[2] };
        for (row, qi) in r.iter().zip(q.iter()) {
            let ri = row[0] * p[0] + row[1] * p[1] + row[2] * pz;
            let d = ri - qi;
            sum += d * d;
        }
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::dmatrix;

    #[test]
    fn jacobi_two_point_gram() {
        // Centered [[1,1],[3,3]] has Gram [[2,-2],[-2,2]] with eigenvalues (4, 0).
        let g = dmatrix![2.0, -2.0; -2.0, 2.0];
        let eigs = jacobi_eigenvalues(&g).unwrap();
        assert!((eigs[0] - 4.0).abs() <= 1e-12);
        assert!(eigs[1].abs() <= 1e-12);
    }

    #[test]
    fn jacobi_tridiagonal_toeplitz() {
        // Eigenvalues of tridiag(1, 2, 1) at size 3 are 2 + sqrt(2), 2, 2 - sqrt(2).
        let a = dmatrix![2.0, 1.0, 0.0; 1.0, 2.0, 1.0; 0.0, 1.0, 2.0];
        let eigs = jacobi_eigenvalues(&a).unwrap();
        let expected = [2.0 + 2f64.sqrt(), 2.0, 2.0 - 2f64.sqrt()];
        for (got, want) in eigs.iter().zip(expected.iter()) {
            assert!((got - want).abs() <= 1e-12, "{got} vs {want}");
        }
    }

    #[test]
    fn jacobi_leaves_diagonal_input_alone() {
        let a = DMatrix::from_diagonal(&nalgebra::dvector![3.0, 1.0, -2.0]);
        assert_eq!(jacobi_eigenvalues(&a).unwrap(), vec![3.0, 1.0, -2.0]);
    }

    #[test]
    #[should_panic(expected = "symmetric")]
    fn jacobi_rejects_asymmetric_input() {
        let a = dmatrix![1.0, 2.0; 0.0, 1.0];
        let _ = jacobi_eigenvalues(&a);
    }

    fn triangle() -> LabeledImage {
        LabeledImage::from_rows(&[vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 2.0]]).unwrap()
    }

    #[test]
    fn plane_grid_hits_an_exact_grid_rotation() {
        let y1 = triangle();
        let count = 360;
        let theta = 2.0 * std::f64::consts::PI * 45.0 / count as f64;
        let (s, c) = theta.sin_cos();
        let rotated: Vec<Vec<f64>> = y1
            .rows()
            .iter()
            .map(|p| vec![c * p[0] - s * p[1], s * p[0] + c * p[1]])
            .collect();
        let y2 = LabeledImage::from_rows(&rotated).unwrap();
        let min = brute_force_min_residual(&y1, &y2, &GridSpec::new(count, false, 1)).unwrap();
        assert!(min <= 1e-12, "on-grid rotation should be found exactly, got {min}");
    }

    #[test]
    fn plane_grid_separates_mirror_without_reflections() {
        // Frozen chirality fact: the mirrored full-rank triangle stays far from
        // every pure rotation, but the improper coset reaches it exactly.
        let y1 = triangle();
        let mirrored: Vec<Vec<f64>> = y1.rows().iter().map(|p| vec![-p[0], p[1]]).collect();
        let y2 = LabeledImage::from_rows(&mirrored).unwrap();
        let rot_only =
            brute_force_min_residual(&y1, &y2, &GridSpec::new(720, false, 1)).unwrap();
        assert!(rot_only > 0.5, "mirror must stay distant from SO(2), got {rot_only}");
        let with_refl =
            brute_force_min_residual(&y1, &y2, &GridSpec::new(720, true, 1)).unwrap();
        assert!(with_refl <= 1e-12, "mirror lies on the improper grid, got {with_refl}");
    }

    #[test]
    fn space_scan_is_deterministic_and_monotone() {
        let y1 = LabeledImage::from_rows(&[
            vec![0.0, 0.0, 0.0],
            vec![1.0, 0.0, 0.0],
            vec![0.0, 2.0, 0.0],
            vec![0.0, 0.0, 3.0],
        ])
        .unwrap();
        // 90-degree rotation about the z axis.
        let rotated: Vec<Vec<f64>> = y1.rows().iter().map(|p| vec![-p[1], p[0], p[2]]).collect();
        let y2 = LabeledImage::from_rows(&rotated).unwrap();
        let coarse = brute_force_min_residual(&y1, &y2, &GridSpec::new(4, false, 200)).unwrap();
        let again = brute_force_min_residual(&y1, &y2, &GridSpec::new(4, false, 200)).unwrap();
        assert_eq!(coarse, again, "fixed seed must make the scan deterministic");
        let fine = brute_force_min_residual(&y1, &y2, &GridSpec::new(4, false, 20_000)).unwrap();
        assert!(fine <= coarse, "a superset of samples cannot do worse");
        // The internal seed is fixed, so this value is deterministic (~0.201;
        // the best of 20k samples lands ~0.06 rad from the target on a
        // configuration of scale ~3.2). Any rotation far from the optimum
        // leaves a residual above 2, so the bound still certifies closeness.
        assert!(fine < 0.25, "20k samples should get near a 90-degree rotation, got {fine}");
    }

    #[test]
    fn unsupported_dimension_is_reported() {
        let y = LabeledImage::from_rows(&[vec![0.0; 4], vec![1.0; 4]]).unwrap();
        assert!(matches!(
            brute_force_min_residual(&y, &y, &GridSpec::new(8, false, 1)),
            Err(Error::UnsupportedDimension(4))
        ));
    }

    #[test]
    fn quaternion_rotations_are_orthogonal() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..32 {
            let r = random_quaternion_rotation(&mut rng);
            for i in 0..3 {
                for j in 0..3 {
                    let dot: f64 = (0..3).map(|l| r[l][i] * r[l][j]).sum();
                    let want = if i == j { 1.0 } else { 0.0 };
                    assert!((dot - want).abs() <= 1e-12);
                }
            }
            let det = r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
                - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
                + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
            assert!((det - 1.0).abs() <= 1e-12, "quaternions give proper rotations");
        }
    }
}
