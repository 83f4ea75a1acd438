//! Deterministic numeric kernels: centering, a one-sided Jacobi thin SVD,
//! numerical rank, and multiplicity grouping of spectra.
//!
//! The SVD is hand-rolled rather than delegated so that its output is
//! bit-reproducible for a fixed input on every platform: fixed cyclic sweep
//! order, no data-dependent pivoting, and a pinned sign convention (the
//! largest-magnitude entry of each left singular vector is positive, ties
//! broken by lowest row index).

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::image::LabeledImage;
use crate::tol::MAX_JACOBI_SWEEPS;

/// Mean of the point rows, as a `k`-vector.
pub fn centroid(y: &LabeledImage) -> DVector<f64> {
    let m = y.matrix();
    let n = y.n() as f64;
    DVector::from_fn(y.k(), |j, _| m.column(j).sum() / n)
}

/// The centered image `Y - 1_n c^T` where `c` is the centroid. Row means of
/// the result vanish to rounding; an already-centered image passes through
/// bit-identically.
pub fn center(y: &LabeledImage) -> LabeledImage {
    let c = centroid(y);
    let m = y.matrix();
    let out = DMatrix::from_fn(y.n(), y.k(), |i, j| m[(i, j)] - c[j]);
    LabeledImage::new(out).expect("centering preserves finiteness")
}

/// A thin singular value decomposition `M = U diag(s) V^T` with `s = min(n, k)`
/// columns in each factor and singular values sorted nonincreasing.
#[derive(Debug, Clone)]
pub struct ThinSvd {
    /// `n x s`, orthonormal columns.
    pub left: DMatrix<f64>,
    /// Length `s`, nonincreasing, all `>= 0`.
    pub singulars: Vec<f64>,
    /// `k x s`, orthonormal columns.
    pub right: DMatrix<f64>,
}

impl ThinSvd {
    /// `U diag(s) V^T`, for reconstruction checks.
    pub fn reconstruct(&self) -> DMatrix<f64> {
        let s = DMatrix::from_diagonal(&DVector::from_vec(self.singulars.clone()));
        &self.left * s * self.right.transpose()
    }
}

/// Thin SVD by one-sided Jacobi orthogonalization.
///
/// Deterministic for a fixed input. Fails with `ConvergenceFailure` if the
/// cyclic sweeps do not settle within the sweep budget (which finite input
/// does not trigger in practice; the bound is a safety net).
pub fn thin_svd(m: &DMatrix<f64>) -> Result<ThinSvd> {
    let (n, k) = m.shape();
    assert!(n > 0 && k > 0, "matrix must be nonempty");
    let mut svd = if n >= k {
        let (u, s, v) = one_sided_jacobi(m.clone())?;
        ThinSvd {
            left: u,
            singulars: s,
            right: v,
        }
    } else {
        // Factor the transpose, then swap the roles of the factors.
        let (u, s, v) = one_sided_jacobi(m.transpose())?;
        ThinSvd {
            left: v,
            singulars: s,
            right: u,
        }
    };
    apply_sign_convention(&mut svd.left, &mut svd.right);
    Ok(svd)
}

/// One-sided Jacobi on a tall matrix `a` (rows >= cols). Returns
/// `(U, s, V)` with `a = U diag(s) V^T`, `U` the normalized (and, for zero
/// singular values, orthonormally completed) column set, `V` accumulated from
/// the plane rotations.
fn one_sided_jacobi(
    mut a: DMatrix<f64>,
) -> Result<(DMatrix<f64>, Vec<f64>, DMatrix<f64>)> {
    let (n, k) = a.shape();
    debug_assert!(n >= k);
    let mut v = DMatrix::<f64>::identity(k, k);

    // Columns this far below the matrix scale carry numerical zeros. They are
    // excluded from rotations (two noise columns never look orthogonal to the
    // relative cosine test, which would stall convergence) and their left
    // vectors are replaced by an orthonormal completion afterwards.
    let zero_floor = 1e-15 * a.norm();
    let floor_sq = zero_floor * zero_floor;

    let mut converged = false;
    for _ in 0..MAX_JACOBI_SWEEPS {
        let mut rotated = false;
        for i in 0..k {
            for j in (i + 1)..k {
                let mut alpha = 0.0f64;
                let mut beta = 0.0f64;
                let mut gamma = 0.0f64;
                for r in 0..n {
                    let ai = a[(r, i)];
                    let aj = a[(r, j)];
                    alpha += ai * ai;
                    beta += aj * aj;
                    gamma += ai * aj;
                }
                if alpha <= floor_sq || beta <= floor_sq {
                    continue;
                }
                // Columns count as orthogonal once the cosine drops to rounding level.
                if gamma.abs() <= 1e-15 * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let sign = if zeta >= 0.0 { -1.0 } else { 1.0 };
                let t = sign / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for r in 0..n {
                    let ai = a[(r, i)];
                    let aj = a[(r, j)];
                    a[(r, i)] = c * ai + s * aj;
                    a[(r, j)] = -s * ai + c * aj;
                }
                for r in 0..k {
                    let vi = v[(r, i)];
                    let vj = v[(r, j)];
                    v[(r, i)] = c * vi + s * vj;
                    v[(r, j)] = -s * vi + c * vj;
                }
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::ConvergenceFailure {
            sweeps: MAX_JACOBI_SWEEPS,
        });
    }

    // Sort by column norm, descending; ties keep original column order.
    let norms: Vec<f64> = (0..k).map(|j| a.column(j).norm()).collect();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&p, &q| norms[q].partial_cmp(&norms[p]).unwrap().then(p.cmp(&q)));

    let singulars: Vec<f64> = order.iter().map(|&j| norms[j]).collect();
    let mut left = DMatrix::<f64>::zeros(n, k);
    let mut right = DMatrix::<f64>::zeros(k, k);
    let mut missing = Vec::new();
    for (slot, &j) in order.iter().enumerate() {
        right.set_column(slot, &v.column(j));
        if norms[j] > zero_floor {
            left.set_column(slot, &(a.column(j) / norms[j]));
        } else {
            missing.push(slot);
        }
    }
    complete_orthonormal(&mut left, &missing);
    Ok((left, singulars, right))
}

/// Fills the listed columns of `u` with an orthonormal completion of the
/// remaining columns. Each gap takes the standard basis vector with the
/// largest residual after projecting out everything placed so far (ties by
/// lowest index), so the completion is deterministic.
fn complete_orthonormal(u: &mut DMatrix<f64>, missing: &[usize]) {
    if missing.is_empty() {
        return;
    }
    let n = u.nrows();
    let filled: Vec<usize> = (0..u.ncols()).filter(|c| !missing.contains(c)).collect();
    let mut placed: Vec<DVector<f64>> = filled.iter().map(|&c| u.column(c).into()).collect();
    for &slot in missing {
        let mut best: Option<(f64, DVector<f64>)> = None;
        for b in 0..n {
            let mut cand = DVector::zeros(n);
            cand[b] = 1.0;
            for p in &placed {
                let coef = p.dot(&cand);
                cand -= p * coef;
            }
            let norm = cand.norm();
            if best.as_ref().is_none_or(|(bn, _)| norm > *bn) {
                best = Some((norm, cand));
            }
        }
        let (norm, mut vec) = best.expect("n >= 1");
        debug_assert!(norm > 0.0, "completion always has room");
        vec /= norm;
        // One re-orthogonalization pass for numerical hygiene.
        for p in &placed {
            let coef = p.dot(&vec);
            vec -= p * coef;
        }
        vec /= vec.norm();
        u.set_column(slot, &vec);
        placed.push(vec);
    }
}

/// Makes the largest-magnitude entry of each left column positive (ties broken
/// by lowest row index), negating the paired right column to preserve the
/// product.
fn apply_sign_convention(left: &mut DMatrix<f64>, right: &mut DMatrix<f64>) {
    for j in 0..left.ncols() {
        let mut arg = 0usize;
        let mut best = -1.0f64;
        for i in 0..left.nrows() {
            let mag = left[(i, j)].abs();
            if mag > best {
                best = mag;
                arg = i;
            }
        }
        if left[(arg, j)] < 0.0 {
            for i in 0..left.nrows() {
                left[(i, j)] = -left[(i, j)];
            }
            for i in 0..right.nrows() {
                right[(i, j)] = -right[(i, j)];
            }
        }
    }
}

/// Number of singular values above `tol_rel * sigma_1`. Zero when the leading
/// value vanishes. Input must be sorted nonincreasing.
pub fn numerical_rank(singulars: &[f64], tol_rel: f64) -> usize {
    debug_assert!(singulars.windows(2).all(|w| w[0] >= w[1]));
    match singulars.first() {
        None => 0,
        Some(&s1) if s1 <= 0.0 => 0,
        Some(&s1) => singulars.iter().take_while(|&&s| s > tol_rel * s1).count(),
    }
}

/// One block of (numerically) equal spectrum values.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumBlock {
    /// Mean of the member values.
    pub value: f64,
    pub multiplicity: usize,
}

/// A spectrum partitioned into strictly decreasing blocks of equal values,
/// with trailing numerical zeros counted separately.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiplicityBlocks {
    pub blocks: Vec<SpectrumBlock>,
    pub zero_count: usize,
}

impl MultiplicityBlocks {
    /// Block multiplicities plus the zero count: the length of the input spectrum.
    pub fn total(&self) -> usize {
        self.blocks.iter().map(|b| b.multiplicity).sum::<usize>() + self.zero_count
    }
}

/// Greedy left-to-right grouping of a nonincreasing, nonnegative spectrum.
/// A value joins the open block when it differs from that block's first
/// element by at most `tol_group_rel * sigma_1`; each block reports the mean
/// of its members. A trailing block indistinguishable from zero at the same
/// tolerance becomes `zero_count`.
pub fn group_multiplicities(singulars: &[f64], tol_group_rel: f64) -> MultiplicityBlocks {
    debug_assert!(singulars.windows(2).all(|w| w[0] >= w[1]));
    debug_assert!(singulars.iter().all(|&s| s >= 0.0));
    if singulars.is_empty() {
        return MultiplicityBlocks {
            blocks: Vec::new(),
            zero_count: 0,
        };
    }
    let width = tol_group_rel * singulars[0];
    let mut groups: Vec<(f64, Vec<f64>)> = Vec::new();
    for &s in singulars {
        match groups.last_mut() {
            Some((first, members)) if *first - s <= width => members.push(s),
            _ => groups.push((s, vec![s])),
        }
    }
    let mut blocks = Vec::new();
    let mut zero_count = 0;
    for (_, members) in groups {
        let mean = members.iter().sum::<f64>() / members.len() as f64;
        if mean <= width {
            zero_count += members.len();
        } else {
            blocks.push(SpectrumBlock {
                value: mean,
                multiplicity: members.len(),
            });
        }
    }
    debug_assert!(blocks.windows(2).all(|w| w[0].value > w[1].value));
    MultiplicityBlocks { blocks, zero_count }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::jacobi_eigenvalues;
    use crate::random::{haar_orthogonal, random_image};
    use nalgebra::dmatrix;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn max_abs(m: &DMatrix<f64>) -> f64 {
        m.iter().fold(0.0f64, |acc, v| acc.max(v.abs()))
    }

    fn orthonormality_defect(m: &DMatrix<f64>) -> f64 {
        let gram = m.transpose() * m;
        max_abs(&(gram - DMatrix::identity(m.ncols(), m.ncols())))
    }

    fn check_svd(m: &DMatrix<f64>) -> ThinSvd {
        let svd = thin_svd(m).unwrap();
        let s = m.nrows().min(m.ncols());
        assert_eq!(svd.left.shape(), (m.nrows(), s));
        assert_eq!(svd.right.shape(), (m.ncols(), s));
        assert_eq!(svd.singulars.len(), s);
        assert!(svd.singulars.windows(2).all(|w| w[0] >= w[1]));
        assert!(svd.singulars.iter().all(|&x| x >= 0.0));
        assert!(orthonormality_defect(&svd.left) <= 1e-10);
        assert!(orthonormality_defect(&svd.right) <= 1e-10);
        let recon_err = (svd.reconstruct() - m).norm();
        assert!(
            recon_err <= 1e-10 * (1.0 + m.norm()),
            "reconstruction error {recon_err}"
        );
        // Pinned sign convention on the left factor.
        for j in 0..s {
            let col = svd.left.column(j);
            let mut arg = 0usize;
            let mut best = -1.0f64;
            for i in 0..col.len() {
                if col[i].abs() > best {
                    best = col[i].abs();
                    arg = i;
                }
            }
            assert!(col[arg] > 0.0, "column {j} violates the sign convention");
        }
        svd
    }

    #[test]
    fn centroid_and_center_basics() {
        let y = LabeledImage::from_rows(&[vec![0.0, 0.0], vec![2.0, 2.0]]).unwrap();
        assert_eq!(centroid(&y), nalgebra::dvector![1.0, 1.0]);

        let y = LabeledImage::from_rows(&[vec![1.0, 1.0], vec![3.0, 3.0]]).unwrap();
        let c = center(&y);
        assert_eq!(
            c.matrix(),
            &dmatrix![-1.0, -1.0; 1.0, 1.0],
            "integer means subtract exactly"
        );
        // Already centered input passes through bit-identically.
        assert_eq!(center(&c).matrix(), c.matrix());
    }

    #[test]
    fn center_kills_row_means_for_random_input() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let y = random_image(6, 4, &mut rng).scaled(37.5);
            let c = center(&y);
            let scale = 1.0 + y.matrix().norm();
            for j in 0..y.k() {
                let mean: f64 = c.matrix().column(j).sum() / y.n() as f64;
                assert!(mean.abs() <= 1e-13 * scale);
            }
            let twice = center(&c);
            assert!(max_abs(&(twice.matrix() - c.matrix())) <= 1e-13 * scale);
        }
    }

    #[test]
    fn svd_of_simple_known_matrices() {
        let m = dmatrix![3.0, 0.0; 0.0, 1.0; 0.0, 0.0];
        let svd = check_svd(&m);
        assert!((svd.singulars[0] - 3.0).abs() <= 1e-12);
        assert!((svd.singulars[1] - 1.0).abs() <= 1e-12);

        // Rank one: centered [[1,1],[3,3]] has singular values (2, 0).
        let m = dmatrix![-1.0, -1.0; 1.0, 1.0];
        let svd = check_svd(&m);
        assert!((svd.singulars[0] - 2.0).abs() <= 1e-12);
        assert!(svd.singulars[1].abs() <= 1e-12);

        // Zero matrix: completion must still deliver orthonormal factors.
        let svd = check_svd(&DMatrix::zeros(3, 2));
        assert_eq!(svd.singulars, vec![0.0, 0.0]);

        // Single column and single row.
        check_svd(&dmatrix![3.0; 4.0]);
        check_svd(&dmatrix![3.0, 4.0]);
    }

    #[test]
    fn svd_agrees_with_eigensolver_oracle() {
        // Independent route: eigenvalues of M^T M from the two-sided Jacobi
        // oracle must equal squared singular values.
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for trial in 0..60 {
            let (n, k) = ((trial % 7) + 1, (trial % 4) + 1);
            let y = random_image(n.max(k), k, &mut rng);
            let m = if trial % 2 == 0 {
                y.matrix().clone()
            } else {
                y.matrix().transpose()
            };
            let svd = check_svd(&m);
            let gram = m.transpose() * &m;
            let eigs = jacobi_eigenvalues(&gram).unwrap();
            let lead = eigs[0].max(f64::MIN_POSITIVE);
            for (i, &s) in svd.singulars.iter().enumerate() {
                assert!(
                    (s * s - eigs[i]).abs() <= 1e-9 * lead + 1e-12,
                    "sigma_{i}^2 = {} vs eigenvalue {}",
                    s * s,
                    eigs[i]
                );
            }
        }
    }

    #[test]
    fn svd_example_shape_7x3() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let y = random_image(7, 3, &mut rng);
        let svd = check_svd(y.matrix());
        let gram = y.matrix().transpose() * y.matrix();
        let eigs = jacobi_eigenvalues(&gram).unwrap();
        for i in 0..3 {
            assert!((svd.singulars[i].powi(2) - eigs[i]).abs() <= 1e-9 * eigs[0]);
        }
    }

    #[test]
    fn svd_is_deterministic() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let y = random_image(5, 4, &mut rng);
        let a = thin_svd(y.matrix()).unwrap();
        let b = thin_svd(y.matrix()).unwrap();
        assert_eq!(a.left, b.left);
        assert_eq!(a.singulars, b.singulars);
        assert_eq!(a.right, b.right);
    }

    #[test]
    fn singular_values_are_orthogonally_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..20 {
            let y = random_image(6, 3, &mut rng);
            let q = haar_orthogonal(6, &mut rng);
            let r = haar_orthogonal(3, &mut rng);
            let base = thin_svd(y.matrix()).unwrap().singulars;
            let rotated = thin_svd(&(&q * y.matrix())).unwrap().singulars;
            let mixed = thin_svd(&(y.matrix() * &r)).unwrap().singulars;
            let lead = base[0].max(f64::MIN_POSITIVE);
            for i in 0..base.len() {
                assert!((base[i] - rotated[i]).abs() <= 1e-9 * lead);
                assert!((base[i] - mixed[i]).abs() <= 1e-9 * lead);
            }
        }
    }

    #[test]
    fn centered_rank_is_bounded() {
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        for n in 1..=6usize {
            for k in 1..=5usize {
                let y = random_image(n, k, &mut rng);
                let svd = thin_svd(center(&y).matrix()).unwrap();
                let rank = numerical_rank(&svd.singulars, crate::tol::TOL_RANK_REL);
                assert!(rank <= (n - 1).min(k), "rank {rank} for n={n} k={k}");
            }
        }
    }

    #[test]
    fn rank_counts_above_relative_cutoff() {
        assert_eq!(numerical_rank(&[2.0, 0.0], 1e-10), 1);
        assert_eq!(numerical_rank(&[0.0, 0.0], 1e-10), 0);
        assert_eq!(numerical_rank(&[1.0, 1e-11], 1e-10), 1);
        assert_eq!(numerical_rank(&[1.0, 1e-9], 1e-10), 2);
        assert_eq!(numerical_rank(&[], 1e-10), 0);
    }

    #[test]
    fn grouping_matches_worked_example() {
        // (5 + 1e-12, 5, 1, 0) at tol 1e-9: blocks (5, x2) and (1, x1), one zero.
        let s = [5.0 + 1e-12, 5.0, 1.0, 0.0];
        let g = group_multiplicities(&s, 1e-9);
        assert_eq!(g.blocks.len(), 2);
        assert_eq!(g.blocks[0].multiplicity, 2);
        assert!((g.blocks[0].value - 5.0).abs() <= 1e-12);
        assert_eq!(g.blocks[1].multiplicity, 1);
        assert!((g.blocks[1].value - 1.0).abs() <= 1e-15);
        assert_eq!(g.zero_count, 1);
        assert_eq!(g.total(), 4);
    }

    #[test]
    fn grouping_edges() {
        let g = group_multiplicities(&[0.0, 0.0], 1e-8);
        assert!(g.blocks.is_empty());
        assert_eq!(g.zero_count, 2);

        let g = group_multiplicities(&[1.0, 1.0 - 5e-9, 1.0 - 2e-8], 1e-8);
        assert_eq!(g.blocks.len(), 2, "chain breaks against the first element");
        assert_eq!(g.blocks[0].multiplicity, 2);
        assert_eq!(g.blocks[1].multiplicity, 1);

        let g = group_multiplicities(&[], 1e-8);
        assert_eq!(g.total(), 0);
    }
}
