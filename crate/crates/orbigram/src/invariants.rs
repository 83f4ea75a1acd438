//! Complete invariants for motion and similarity orbits of labeled images.
//!
//! The motion invariant of an image `Y` is the `n x n` Gram matrix of its
//! centered rows, `G = center(Y) center(Y)^T`. Two images with the same shape
//! are related by a motion exactly when their Gram invariants are equal, and
//! `G` determines the centered image up to an orthogonal change of frame, so
//! nothing about the orbit is lost. For the similarity group the same holds
//! after normalizing the overall scale by one of three interchangeable
//! conventions ([`NormalizationScheme`]).

use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::image::LabeledImage;
use crate::linalg::{center, group_multiplicities, numerical_rank, thin_svd, MultiplicityBlocks};
use crate::tol::{TOL_GROUP_REL, TOL_RANK_REL, TOL_SVD_RECONSTRUCT};

/// The `n x n` Gram matrix of the centered image: symmetric, positive
/// semidefinite, rows summing to zero, rank at most `min(n - 1, k)`.
///
/// `k_ambient` remembers the ambient dimension of the image the matrix came
/// from; the matrix itself carries no trace of `k` beyond its rank.
#[derive(Debug, Clone, PartialEq)]
pub struct GramInvariant {
    matrix: DMatrix<f64>,
    k_ambient: usize,
}

impl GramInvariant {
    /// Validates squareness, symmetry, and the zero-row-sum kernel property.
    pub fn new(matrix: DMatrix<f64>, k_ambient: usize) -> Result<Self> {
        let n = matrix.nrows();
        if matrix.ncols() != n || n == 0 || k_ambient == 0 {
            return Err(Error::InvalidImage(format!(
                "gram matrix must be square and nonempty, got {}x{} with k_ambient {}",
                n,
                matrix.ncols(),
                k_ambient
            )));
        }
        let scale = matrix.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        for i in 0..n {
            for j in (i + 1)..n {
                if (matrix[(i, j)] - matrix[(j, i)]).abs() > 1e-12 * (1.0 + scale) {
                    return Err(Error::InvalidImage(format!(
                        "gram matrix is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        let frob = matrix.norm();
        for i in 0..n {
            let row_sum: f64 = matrix.row(i).sum();
            if row_sum.abs() > 1e-10 * (1.0 + frob) {
                return Err(Error::InvalidImage(format!(
                    "gram matrix row {i} sums to {row_sum:.3e}, not zero"
                )));
            }
        }
        Ok(Self { matrix, k_ambient })
    }

    pub fn n(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn k_ambient(&self) -> usize {
        self.k_ambient
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.matrix.norm()
    }

    /// Ellipsoid semi-axis lengths encoded by this matrix: square roots of its
    /// leading `s = min(n, k_ambient)` eigenvalues, nonincreasing.
    pub fn axis_lengths(&self) -> Result<Vec<f64>> {
        Ok(self.spectrum()?.0)
    }

    /// (axis lengths, numerical rank). The rank cutoff is applied on the
    /// eigenvalue scale, where the noise floor of a computed zero sits at
    /// rounding level; on the length scale it would be amplified to ~1e-8.
    fn spectrum(&self) -> Result<(Vec<f64>, usize)> {
        let svd = thin_svd(&self.matrix)?;
        let s = self.n().min(self.k_ambient);
        let eigs = &svd.singulars[..s];
        let rank = numerical_rank(eigs, TOL_RANK_REL);
        Ok((eigs.iter().map(|&e| e.sqrt()).collect(), rank))
    }
}

/// Computes the motion invariant `center(Y) center(Y)^T`.
pub fn gram_invariant(y: &LabeledImage) -> GramInvariant {
    let c = center(y);
    let matrix = c.matrix() * c.matrix().transpose();
    GramInvariant::new(matrix, y.k()).expect("gram construction satisfies its own invariants")
}

/// The centered image's singular structure: semi-axis lengths of the
/// realization ellipsoid, grouped into multiplicity blocks, with the principal
/// axes as an orthonormal frame in `R^n`.
///
/// Individual axis columns are canonical only up to rotation inside a
/// multiplicity block (and up to sign in singleton blocks, pinned here by the
/// SVD sign convention); the span of each block is the invariant object.
#[derive(Debug, Clone)]
pub struct EllipsoidSpectrum {
    /// `s = min(n, k)` values, nonincreasing.
    pub axis_lengths: Vec<f64>,
    /// `n x s`, orthonormal columns, i-th column paired with i-th length.
    pub axes: DMatrix<f64>,
    /// Lengths grouped at the default grouping tolerance.
    pub blocks: MultiplicityBlocks,
}

/// Singular values and left frame of the centered image, with multiplicity
/// grouping at the default tolerance.
pub fn ellipsoid_spectrum(y: &LabeledImage) -> Result<EllipsoidSpectrum> {
    let c = center(y);
    let svd = thin_svd(c.matrix())?;
    let blocks = group_multiplicities(&svd.singulars, TOL_GROUP_REL);
    Ok(EllipsoidSpectrum {
        axis_lengths: svd.singulars,
        axes: svd.left,
        blocks,
    })
}

/// Scale-fixing convention for similarity invariants. All three yield the same
/// equivalence decisions; they differ only in which functional of the axis
/// lengths is pinned to one.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum NormalizationScheme {
    /// Largest axis length becomes 1.
    #[serde(rename = "max")]
    MaxAxis,
    /// Arithmetic mean of all `s` axis lengths (zeros included) becomes 1.
    #[serde(rename = "mean")]
    MeanAxis,
    /// Geometric mean of the nonzero axis lengths becomes 1.
    #[default]
    #[serde(rename = "gmean")]
    GeomMeanAxis,
}

impl fmt::Display for NormalizationScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::MaxAxis => "max",
            Self::MeanAxis => "mean",
            Self::GeomMeanAxis => "gmean",
        };
        f.write_str(s)
    }
}

impl FromStr for NormalizationScheme {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "max" => Ok(Self::MaxAxis),
            "mean" => Ok(Self::MeanAxis),
            "gmean" => Ok(Self::GeomMeanAxis),
            other => Err(format!(
                "unknown scheme '{other}' (expected max, mean, or gmean)"
            )),
        }
    }
}

/// The complete similarity invariant: the Gram invariant rescaled so the
/// chosen axis-length functional equals one, together with the scale divided
/// out.
#[derive(Debug, Clone)]
pub struct SimilarityInvariant {
    normalized_gram: GramInvariant,
    scheme: NormalizationScheme,
    scale: f64,
}

impl SimilarityInvariant {
    pub fn normalized_gram(&self) -> &GramInvariant {
        &self.normalized_gram
    }

    pub fn scheme(&self) -> NormalizationScheme {
        self.scheme
    }

    /// The positive factor `c` with `G = c^2 G_normalized`.
    pub fn scale(&self) -> f64 {
        self.scale
    }
}

/// Divides the scale out of a Gram invariant. Since scaling an image by `a`
/// scales its Gram matrix by `a^2`, the normalized matrix is constant along
/// each similarity orbit. Fails with `DegenerateImage` when the matrix is
/// zero (all points coincide) and no scale can be fixed.
pub fn similarity_normalize(
    gram: &GramInvariant,
    scheme: NormalizationScheme,
) -> Result<SimilarityInvariant> {
    let (lengths, rank) = gram.spectrum()?;
    let s1 = lengths[0];
    if s1 <= 0.0 {
        return Err(Error::DegenerateImage);
    }
    let c = match scheme {
        NormalizationScheme::MaxAxis => s1,
        // Zeros contribute exactly zero to the mean. Summing the raw computed
        // lengths instead would pollute the constant with the square roots of
        // rounding-level eigenvalues, which sit around 1e-8 relative.
        NormalizationScheme::MeanAxis => {
            lengths[..rank].iter().sum::<f64>() / lengths.len() as f64
        }
        NormalizationScheme::GeomMeanAxis => {
            let logs: f64 = lengths[..rank].iter().map(|&l| l.ln()).sum();
            (logs / rank as f64).exp()
        }
    };
    debug_assert!(c > 0.0);
    let normalized_gram = GramInvariant::new(gram.matrix() / (c * c), gram.k_ambient())?;
    Ok(SimilarityInvariant {
        normalized_gram,
        scheme,
        scale: c,
    })
}

/// Orthonormal basis of the subspace of `R^n` orthogonal to the all-ones
/// vector, as an `n x (n-1)` matrix (columns 1.. of the Householder reflector
/// exchanging `e_1` with `1_n / sqrt(n)`). Centered images live in its span.
pub fn centered_basis(n: usize) -> DMatrix<f64> {
    assert!(n >= 1);
    if n == 1 {
        return DMatrix::zeros(1, 0);
    }
    let w = 1.0 / (n as f64).sqrt();
    let mut v = DVector::from_element(n, -w);
    v[0] += 1.0;
    let vtv = v.dot(&v);
    let h = DMatrix::identity(n, n) - (&v * v.transpose()) * (2.0 / vtv);
    h.columns(1, n - 1).into()
}

/// Realizes a target spectrum: builds `Y = left diag(lengths) right^T`, an
/// image whose centered SVD reproduces the given axis lengths and block spans.
/// `left` must have orthonormal columns orthogonal to the all-ones vector
/// (see [`centered_basis`]) and `right` orthonormal columns in `R^k`.
pub fn synthesize_from_spectrum(
    axis_lengths: &[f64],
    left: &DMatrix<f64>,
    right: &DMatrix<f64>,
) -> Result<LabeledImage> {
    let r = axis_lengths.len();
    let n = left.nrows();
    let k = right.nrows();
    if left.ncols() != r || right.ncols() != r {
        return Err(Error::InvalidImage(format!(
            "frames must have one column per axis length: lengths {r}, left {}, right {}",
            left.ncols(),
            right.ncols()
        )));
    }
    if axis_lengths.iter().any(|&l| !l.is_finite() || l < 0.0) {
        return Err(Error::InvalidImage(
            "axis lengths must be finite and nonnegative".into(),
        ));
    }
    for (name, frame, check_centered) in [("left", left, true), ("right", right, false)] {
        let gram = frame.transpose() * frame;
        let defect = (gram - DMatrix::identity(r, r))
            .iter()
            .fold(0.0f64, |m, v| m.max(v.abs()));
        if defect > TOL_SVD_RECONSTRUCT {
            return Err(Error::InvalidImage(format!(
                "{name} frame is not orthonormal (defect {defect:.3e})"
            )));
        }
        if check_centered {
            for j in 0..r {
                let col_sum: f64 = frame.column(j).sum();
                if col_sum.abs() > TOL_SVD_RECONSTRUCT * (n as f64).sqrt() {
                    return Err(Error::InvalidImage(format!(
                        "left frame column {j} is not orthogonal to the ones vector"
                    )));
                }
            }
        }
    }
    let mut y = DMatrix::zeros(n, k);
    for (i, &len) in axis_lengths.iter().enumerate() {
        if len > 0.0 {
            y += left.column(i) * right.column(i).transpose() * len;
        }
    }
    LabeledImage::new(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::jacobi_eigenvalues;
    use crate::random::{haar_orthogonal, random_image, random_motion, random_scale};
    use nalgebra::dmatrix;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn gram_of_two_collinear_points() {
        let y = LabeledImage::from_rows(&[vec![1.0, 1.0], vec![3.0, 3.0]]).unwrap();
        let g = gram_invariant(&y);
        assert_eq!(g.matrix(), &dmatrix![2.0, -2.0; -2.0, 2.0]);
        // Oracle confirmation of the spectrum: eigenvalues (4, 0), axis (2, 0).
        let eigs = jacobi_eigenvalues(g.matrix()).unwrap();
        assert!((eigs[0] - 4.0).abs() <= 1e-12 && eigs[1].abs() <= 1e-12);
        let lengths = g.axis_lengths().unwrap();
        assert!((lengths[0] - 2.0).abs() <= 1e-12);
        assert!(lengths[1].abs() <= 1e-12);
    }

    #[test]
    fn single_point_has_zero_invariant() {
        let y = LabeledImage::from_rows(&[vec![4.0, -7.0, 0.5]]).unwrap();
        let g = gram_invariant(&y);
        assert_eq!(g.n(), 1);
        assert_eq!(g.matrix()[(0, 0)], 0.0);
    }

    #[test]
    fn gram_is_psd_with_zero_row_sums() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for trial in 0..40 {
            let (n, k) = (trial % 7 + 1, trial % 5 + 1);
            let y = random_image(n, k, &mut rng);
            let g = gram_invariant(&y);
            let eigs = jacobi_eigenvalues(g.matrix()).unwrap();
            let trace: f64 = g.matrix().diagonal().sum();
            assert!(eigs.iter().all(|&e| e >= -1e-10 * trace.max(1e-300)));
            let rank = numerical_rank(
                &thin_svd(g.matrix()).unwrap().singulars,
                TOL_RANK_REL,
            );
            assert!(rank <= (n - 1).min(k));
        }
    }

    #[test]
    fn gram_is_motion_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for trial in 0..40 {
            let (n, k) = (trial % 6 + 1, trial % 5 + 1);
            let y = random_image(n, k, &mut rng);
            let g = random_motion(k, &mut rng, 10.0, trial % 2 == 0);
            let moved = g.act_on_image(&y).unwrap();
            let d = (gram_invariant(&moved).matrix() - gram_invariant(&y).matrix()).norm();
            assert!(
                d <= 1e-10 * (1.0 + gram_invariant(&y).frobenius_norm()),
                "gram moved by {d}"
            );
        }
    }

    #[test]
    fn gram_obeys_the_scaling_law() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for trial in 0..40 {
            let (n, k) = (trial % 6 + 1, trial % 4 + 1);
            let y = random_image(n, k, &mut rng);
            let a = random_scale(&mut rng, 0.1, 10.0);
            let lhs = gram_invariant(&y.scaled(a));
            let rhs = gram_invariant(&y);
            let d = (lhs.matrix() - rhs.matrix() * (a * a)).norm();
            assert!(d <= 1e-12 * a * a * rhs.frobenius_norm().max(f64::MIN_POSITIVE) || d == 0.0);
        }
    }

    #[test]
    fn equilateral_triangle_has_a_double_axis() {
        let h = 3f64.sqrt() / 2.0;
        let y = LabeledImage::from_rows(&[vec![1.0, 0.0], vec![-0.5, h], vec![-0.5, -h]]).unwrap();
        let spec = ellipsoid_spectrum(&y).unwrap();
        assert_eq!(spec.axis_lengths.len(), 2);
        let want = 1.5f64.sqrt();
        for &l in &spec.axis_lengths {
            assert!((l - want).abs() <= 1e-12);
        }
        assert_eq!(spec.blocks.blocks.len(), 1);
        assert_eq!(spec.blocks.blocks[0].multiplicity, 2);
        assert_eq!(spec.blocks.zero_count, 0);
        let defect = (spec.axes.transpose() * &spec.axes - DMatrix::identity(2, 2))
            .iter()
            .fold(0.0f64, |m, v| m.max(v.abs()));
        assert!(defect <= 1e-10);
    }

    #[test]
    fn axis_lengths_square_to_gram_eigenvalues() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for trial in 0..30 {
            let (n, k) = (trial % 6 + 2, trial % 5 + 1);
            let y = random_image(n, k, &mut rng);
            let spec = ellipsoid_spectrum(&y).unwrap();
            let eigs = jacobi_eigenvalues(gram_invariant(&y).matrix()).unwrap();
            let lead = eigs[0].max(f64::MIN_POSITIVE);
            for (i, &l) in spec.axis_lengths.iter().enumerate() {
                assert!((l * l - eigs[i]).abs() <= 1e-9 * lead);
            }
        }
    }

    #[test]
    fn synthesis_realizes_spectra_with_repeats_and_zeros() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        // Wide case (n <= k): 4 points in R^5; attainable rank is 3.
        let target = [3.0, 3.0, 1.0];
        let (n, k) = (4usize, 5usize);
        let u = &centered_basis(n) * haar_orthogonal(n - 1, &mut rng).columns(0, 3);
        let v_full = haar_orthogonal(k, &mut rng);
        let v = v_full.columns(0, 3).into_owned();
        let y = synthesize_from_spectrum(&target, &u.into_owned(), &v).unwrap();
        let spec = ellipsoid_spectrum(&y).unwrap();
        assert_eq!(spec.axis_lengths.len(), 4);
        let want = [3.0, 3.0, 1.0, 0.0];
        for (got, want) in spec.axis_lengths.iter().zip(want.iter()) {
            assert!((got - want).abs() <= 1e-9 * 3.0, "{got} vs {want}");
        }
        assert_eq!(spec.blocks.blocks[0].multiplicity, 2);
        assert_eq!(spec.blocks.zero_count, 1);

        // Block spans are reproduced: projector onto the double block matches.
        let u_block = y.matrix() * v_full.columns(0, 2);
        let mut p_target = DMatrix::zeros(n, n);
        for j in 0..2 {
            let col = u_block.column(j) / u_block.column(j).norm();
            p_target += &col * col.transpose();
        }
        let mut p_got = DMatrix::zeros(n, n);
        for j in 0..2 {
            let col = spec.axes.column(j);
            p_got += col * col.transpose();
        }
        assert!((p_target - p_got).norm() <= 1e-9);
    }

    #[test]
    fn synthesis_validates_frames() {
        let bad = DMatrix::from_row_slice(3, 1, &[1.0, 0.0, 0.0]);
        let v = DMatrix::from_row_slice(2, 1, &[1.0, 0.0]);
        // e_1 is orthonormal but not orthogonal to the ones vector.
        assert!(synthesize_from_spectrum(&[1.0], &bad, &v).is_err());
        let skew = DMatrix::from_row_slice(2, 1, &[1.0, 1.0]);
        let u = centered_basis(2);
        assert!(synthesize_from_spectrum(&[1.0], &u, &skew).is_err());
    }

    fn image_with_lengths(lengths: &[f64], n: usize, k: usize) -> LabeledImage {
        let r = lengths.len();
        let u = centered_basis(n).columns(0, r).into_owned();
        let v = DMatrix::identity(k, k).columns(0, r).into_owned();
        synthesize_from_spectrum(lengths, &u, &v).unwrap()
    }

    #[test]
    fn normalization_schemes_match_worked_examples() {
        // Axes (2, 1), max scheme: scale 2, normalized lengths (1, 0.5).
        let g = gram_invariant(&image_with_lengths(&[2.0, 1.0], 3, 2));
        let inv = similarity_normalize(&g, NormalizationScheme::MaxAxis).unwrap();
        assert!((inv.scale() - 2.0).abs() <= 1e-12);
        let lengths = inv.normalized_gram().axis_lengths().unwrap();
        assert!((lengths[0] - 1.0).abs() <= 1e-10);
        assert!((lengths[1] - 0.5).abs() <= 1e-10);

        // Axes (3, 1), mean scheme: scale (3+1)/2 = 2, normalized (1.5, 0.5).
        let g = gram_invariant(&image_with_lengths(&[3.0, 1.0], 3, 2));
        let inv = similarity_normalize(&g, NormalizationScheme::MeanAxis).unwrap();
        assert!((inv.scale() - 2.0).abs() <= 1e-12);
        let lengths = inv.normalized_gram().axis_lengths().unwrap();
        assert!((lengths[0] - 1.5).abs() <= 1e-10);
        assert!((lengths[1] - 0.5).abs() <= 1e-10);

        // Axes (4, 1, 0) in R^3 embedded with n = 4: geometric mean over the
        // two nonzero lengths gives scale 2; the zero stays zero.
        let g = gram_invariant(&image_with_lengths(&[4.0, 1.0], 4, 3));
        let inv = similarity_normalize(&g, NormalizationScheme::GeomMeanAxis).unwrap();
        assert!((inv.scale() - 2.0).abs() <= 1e-10);
        let lengths = inv.normalized_gram().axis_lengths().unwrap();
        assert!((lengths[0] - 2.0).abs() <= 1e-10);
        assert!((lengths[1] - 0.5).abs() <= 1e-10);
        // Lengths are square roots of eigenvalues, so a rounding-level zero
        // eigenvalue surfaces around 1e-7; the rank cutoff (applied on the
        // eigenvalue scale) still counts it as zero.
        assert!(lengths[2].abs() <= 1e-6);
        let rank = numerical_rank(
            &thin_svd(inv.normalized_gram().matrix()).unwrap().singulars,
            TOL_RANK_REL,
        );
        assert_eq!(rank, 2);
    }

    #[test]
    fn scheme_constraints_hold_on_random_images() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for trial in 0..30 {
            let (n, k) = (trial % 5 + 2, trial % 4 + 1);
            let y = random_image(n, k, &mut rng).scaled(random_scale(&mut rng, 0.1, 10.0));
            let g = gram_invariant(&y);
            for scheme in [
                NormalizationScheme::MaxAxis,
                NormalizationScheme::MeanAxis,
                NormalizationScheme::GeomMeanAxis,
            ] {
                let inv = similarity_normalize(&g, scheme).unwrap();
                let lengths = inv.normalized_gram().axis_lengths().unwrap();
                let rank = numerical_rank(
                    &thin_svd(inv.normalized_gram().matrix()).unwrap().singulars,
                    TOL_RANK_REL,
                );
                // Constraint statistics treat sub-rank lengths as the zeros
                // they represent, mirroring the normalization itself.
                let stat = match scheme {
                    NormalizationScheme::MaxAxis => lengths[0],
                    NormalizationScheme::MeanAxis => {
                        lengths[..rank].iter().sum::<f64>() / lengths.len() as f64
                    }
                    NormalizationScheme::GeomMeanAxis => {
                        (lengths[..rank].iter().map(|&l| l.ln()).sum::<f64>() / rank as f64).exp()
                    }
                };
                assert!((stat - 1.0).abs() <= 1e-10, "{scheme} constraint off: {stat}");
            }
        }
    }

    #[test]
    fn normalized_gram_is_scale_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for trial in 0..20 {
            let (n, k) = (trial % 5 + 2, trial % 4 + 1);
            let y = random_image(n, k, &mut rng);
            let a = random_scale(&mut rng, 0.2, 5.0);
            for scheme in [
                NormalizationScheme::MaxAxis,
                NormalizationScheme::MeanAxis,
                NormalizationScheme::GeomMeanAxis,
            ] {
                let base = similarity_normalize(&gram_invariant(&y), scheme).unwrap();
                let scaled = similarity_normalize(&gram_invariant(&y.scaled(a)), scheme).unwrap();
                let d = (base.normalized_gram().matrix() - scaled.normalized_gram().matrix())
                    .norm();
                assert!(d <= 1e-9 * (1.0 + base.normalized_gram().frobenius_norm()));
                assert!((scaled.scale() / base.scale() - a).abs() <= 1e-9 * a);
            }
        }
    }

    #[test]
    fn coincident_points_cannot_be_normalized() {
        let y = LabeledImage::from_rows(&[vec![1.0, 2.0], vec![1.0, 2.0], vec![1.0, 2.0]]).unwrap();
        let g = gram_invariant(&y);
        assert!(matches!(
            similarity_normalize(&g, NormalizationScheme::default()),
            Err(Error::DegenerateImage)
        ));
    }

    #[test]
    fn scheme_parsing_round_trips() {
        for scheme in [
            NormalizationScheme::MaxAxis,
            NormalizationScheme::MeanAxis,
            NormalizationScheme::GeomMeanAxis,
        ] {
            assert_eq!(scheme.to_string().parse::<NormalizationScheme>(), Ok(scheme));
        }
        assert!("median".parse::<NormalizationScheme>().is_err());
        assert_eq!(NormalizationScheme::default(), NormalizationScheme::GeomMeanAxis);
    }
}
