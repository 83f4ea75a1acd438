//! Affine, motion, and similarity transformations of `R^k` and their action
//! on labeled images.
//!
//! Elements compose by `(A, u) . (B, w) = (A B, A w + u)` and invert by
//! `(A, u)^-1 = (A^-1, -A^-1 u)`. The action on an image is the left action
//! applied row-wise: every point `y_i` becomes `A y_i + u`, in matrix form
//! `Y A^T + 1_n u^T`. Labels never move.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::image::LabeledImage;
use crate::linalg::{numerical_rank, thin_svd};
use crate::tol::{TOL_ORTH, TOL_RANK_REL};

/// An invertible affine transformation `x -> A x + u` of `R^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineElement {
    linear: DMatrix<f64>,
    translation: DVector<f64>,
}

impl AffineElement {
    /// Validates that `linear` is square, matches the translation dimension,
    /// and has full numerical rank.
    pub fn new(linear: DMatrix<f64>, translation: DVector<f64>) -> Result<Self> {
        let k = linear.nrows();
        if linear.ncols() != k {
            return Err(Error::DimensionMismatch {
                expected: k,
                actual: linear.ncols(),
            });
        }
        if translation.len() != k {
            return Err(Error::DimensionMismatch {
                expected: k,
                actual: translation.len(),
            });
        }
        let svd = thin_svd(&linear)?;
        if numerical_rank(&svd.singulars, TOL_RANK_REL) < k {
            return Err(Error::SingularLinearPart);
        }
        Ok(Self {
            linear,
            translation,
        })
    }

    pub fn identity(k: usize) -> Self {
        Self {
            linear: DMatrix::identity(k, k),
            translation: DVector::zeros(k),
        }
    }

    pub fn k(&self) -> usize {
        self.linear.nrows()
    }

    pub fn linear(&self) -> &DMatrix<f64> {
        &self.linear
    }

    pub fn translation(&self) -> &DVector<f64> {
        &self.translation
    }

    /// `(A, u) . (B, w) = (A B, A w + u)`. Both elements must share a dimension.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.k(), other.k(), "group elements must share a dimension");
        Self {
            linear: &self.linear * &other.linear,
            translation: &self.linear * &other.translation + &self.translation,
        }
    }

    /// `(A, u)^-1 = (A^-1, -A^-1 u)`.
    pub fn inverse(&self) -> Result<Self> {
        let inv = self
            .linear
            .clone()
            .try_inverse()
            .ok_or(Error::SingularLinearPart)?;
        let translation = -(&inv * &self.translation);
        Ok(Self {
            linear: inv,
            translation,
        })
    }

    /// `x -> A x + u`.
    pub fn apply_to_point(&self, x: &DVector<f64>) -> Result<DVector<f64>> {
        if x.len() != self.k() {
            return Err(Error::DimensionMismatch {
                expected: self.k(),
                actual: x.len(),
            });
        }
        Ok(&self.linear * x + &self.translation)
    }

    /// Left action on an image: `Y -> Y A^T + 1_n u^T`.
    pub fn act_on_image(&self, y: &LabeledImage) -> Result<LabeledImage> {
        if y.k() != self.k() {
            return Err(Error::DimensionMismatch {
                expected: self.k(),
                actual: y.k(),
            });
        }
        let mut out = y.matrix() * self.linear.transpose();
        for i in 0..out.nrows() {
            for j in 0..out.ncols() {
                out[(i, j)] += self.translation[j];
            }
        }
        LabeledImage::new(out)
    }

    /// The `(k+1) x (k+1)` homogeneous matrix `[[A, u], [0, 1]]`. Composition
    /// of elements becomes multiplication of these matrices.
    pub fn embed_homogeneous(&self) -> DMatrix<f64> {
        let k = self.k();
        let mut h = DMatrix::zeros(k + 1, k + 1);
        h.view_mut((0, 0), (k, k)).copy_from(&self.linear);
        for i in 0..k {
            h[(i, k)] = self.translation[i];
        }
        h[(k, k)] = 1.0;
        h
    }
}

/// A motion `x -> Q x + u` with `Q` orthogonal. `proper` records whether `Q`
/// preserves orientation (`det Q = +1`).
#[derive(Debug, Clone, PartialEq)]
pub struct MotionElement {
    rotation: DMatrix<f64>,
    translation: DVector<f64>,
    proper: bool,
}

impl MotionElement {
    /// Validates orthogonality: `max |Q^T Q - I|` must not exceed the
    /// orthogonality tolerance. The proper flag is derived from `det Q`.
    pub fn new(rotation: DMatrix<f64>, translation: DVector<f64>) -> Result<Self> {
        let k = rotation.nrows();
        if rotation.ncols() != k {
            return Err(Error::DimensionMismatch {
                expected: k,
                actual: rotation.ncols(),
            });
        }
        if translation.len() != k {
            return Err(Error::DimensionMismatch {
                expected: k,
                actual: translation.len(),
            });
        }
        let deviation = orthogonality_deviation(&rotation);
        if deviation > TOL_ORTH {
            return Err(Error::NotOrthogonal {
                deviation,
                tol: TOL_ORTH,
            });
        }
        let proper = rotation.determinant() > 0.0;
        Ok(Self {
            rotation,
            translation,
            proper,
        })
    }

    pub fn identity(k: usize) -> Self {
        Self {
            rotation: DMatrix::identity(k, k),
            translation: DVector::zeros(k),
            proper: true,
        }
    }

    pub fn k(&self) -> usize {
        self.rotation.nrows()
    }

    pub fn rotation(&self) -> &DMatrix<f64> {
        &self.rotation
    }

    pub fn translation(&self) -> &DVector<f64> {
        &self.translation
    }

    pub fn proper(&self) -> bool {
        self.proper
    }

    /// Motions are closed under composition; the result is proper exactly when
    /// both factors agree in orientation.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.k(), other.k(), "group elements must share a dimension");
        let rotation = &self.rotation * &other.rotation;
        debug_assert!(orthogonality_deviation(&rotation) <= TOL_ORTH);
        Self {
            rotation,
            translation: &self.rotation * &other.translation + &self.translation,
            proper: self.proper == other.proper,
        }
    }

    /// `(Q, u)^-1 = (Q^T, -Q^T u)`; orientation is unchanged.
    pub fn inverse(&self) -> Self {
        let qt = self.rotation.transpose();
        let translation = -(&qt * &self.translation);
        Self {
            rotation: qt,
            translation,
            proper: self.proper,
        }
    }

    pub fn apply_to_point(&self, x: &DVector<f64>) -> Result<DVector<f64>> {
        self.as_affine().apply_to_point(x)
    }

    pub fn act_on_image(&self, y: &LabeledImage) -> Result<LabeledImage> {
        self.as_affine().act_on_image(y)
    }

    pub fn embed_homogeneous(&self) -> DMatrix<f64> {
        self.as_affine().embed_homogeneous()
    }

    /// View as a general affine element (orthogonal matrices are invertible,
    /// so no revalidation happens).
    pub fn as_affine(&self) -> AffineElement {
        AffineElement {
            linear: self.rotation.clone(),
            translation: self.translation.clone(),
        }
    }
}

fn orthogonality_deviation(q: &DMatrix<f64>) -> f64 {
    let k = q.nrows();
    let gram = q.transpose() * q;
    let mut dev = 0.0f64;
    for i in 0..k {
        for j in 0..k {
            let want = if i == j { 1.0 } else { 0.0 };
            dev = dev.max((gram[(i, j)] - want).abs());
        }
    }
    dev
}
