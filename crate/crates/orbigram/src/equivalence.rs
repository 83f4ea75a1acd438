//! Orbit equivalence decisions, optimal alignment, and orbit-space metrics.
//!
//! Equivalence is decided entirely through the Gram invariant, so it needs no
//! search over transformations; alignment solves the orthogonal Procrustes
//! problem in closed form and is verified against the brute-force oracle in
//! the test suite rather than trusted on faith.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::MotionElement;
use crate::image::LabeledImage;
use crate::invariants::{gram_invariant, similarity_normalize, NormalizationScheme};
use crate::linalg::{center, centroid, numerical_rank, thin_svd};
use crate::tol::{TOL_CENTER, TOL_RANK_REL};

/// Which transformation group an equivalence, alignment, or distance refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum GroupTag {
    /// All isometries: rotations, reflections, translations.
    #[serde(rename = "motion")]
    Motion,
    /// Orientation-preserving isometries only.
    #[serde(rename = "proper")]
    ProperMotion,
    /// Isometries composed with positive uniform scaling.
    #[serde(rename = "similarity")]
    Similarity,
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::Motion => "motion",
            Self::ProperMotion => "proper",
            Self::Similarity => "similarity",
        };
        f.write_str(s)
    }
}

impl FromStr for GroupTag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "motion" => Ok(Self::Motion),
            "proper" => Ok(Self::ProperMotion),
            "similarity" => Ok(Self::Similarity),
            other => Err(format!(
                "unknown group '{other}' (expected motion, proper, or similarity)"
            )),
        }
    }
}

/// An optimal transformation carrying one image onto another, with the
/// Frobenius residual it achieves.
#[derive(Debug, Clone)]
pub struct AlignmentResult {
    /// Optimal rotation (or reflection) and translation.
    pub transform: MotionElement,
    /// Optimal positive scale; present only for [`GroupTag::Similarity`].
    pub scale: Option<f64>,
    /// `||apply(Y1) - Y2||_F` for the returned transform.
    pub residual: f64,
    /// The group the transform was optimized over.
    pub group: GroupTag,
}

impl AlignmentResult {
    /// Applies the transform (scale first, then the motion) to an image.
    pub fn apply(&self, y: &LabeledImage) -> Result<LabeledImage> {
        self.transform.act_on_image(&y.scaled(self.scale.unwrap_or(1.0)))
    }
}

/// Which metric an [`OrbitDistance`] value was computed with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum DistanceKind {
    /// Frobenius distance between Gram invariants; a true metric on the orbit
    /// space of n-point images (ambient dimensions may differ).
    #[serde(rename = "gram")]
    GramFrobenius,
    /// Residual of the optimal alignment.
    #[serde(rename = "procrustes")]
    Procrustes,
}

impl fmt::Display for DistanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::GramFrobenius => "gram",
            Self::Procrustes => "procrustes",
        };
        f.write_str(s)
    }
}

impl FromStr for DistanceKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "gram" => Ok(Self::GramFrobenius),
            "procrustes" => Ok(Self::Procrustes),
            other => Err(format!(
                "unknown metric '{other}' (expected gram or procrustes)"
            )),
        }
    }
}

/// A distance between two orbits.
#[derive(Debug, Clone, Copy)]
pub struct OrbitDistance {
    pub value: f64,
    pub kind: DistanceKind,
    pub group: GroupTag,
}

fn ensure_same_shape(y1: &LabeledImage, y2: &LabeledImage) -> Result<()> {
    if y1.n() != y2.n() || y1.k() != y2.k() {
        return Err(Error::ShapeMismatch {
            left_n: y1.n(),
            left_k: y1.k(),
            right_n: y2.n(),
            right_k: y2.k(),
        });
    }
    Ok(())
}

fn ensure_same_n(y1: &LabeledImage, y2: &LabeledImage) -> Result<()> {
    if y1.n() != y2.n() {
        return Err(Error::ShapeMismatch {
            left_n: y1.n(),
            left_k: y1.k(),
            right_n: y2.n(),
            right_k: y2.k(),
        });
    }
    Ok(())
}

/// True when some motion (rotation or reflection plus translation) carries
/// `y1` onto `y2`: the Gram invariants agree within `tol * (1 + ||G1||_F)`.
pub fn motion_equivalent(y1: &LabeledImage, y2: &LabeledImage, tol: f64) -> Result<bool> {
    ensure_same_shape(y1, y2)?;
    let g1 = gram_invariant(y1);
    let g2 = gram_invariant(y2);
    let d = (g1.matrix() - g2.matrix()).norm();
    Ok(d <= tol * (1.0 + g1.frobenius_norm()))
}

/// True when an orientation-preserving motion carries `y1` onto `y2`.
///
/// Given motion equivalence, orientation only obstructs full-rank images: a
/// rank-deficient centered image is fixed by a reflection of the unused
/// directions, so any improper alignment can be repaired. For full-rank
/// images the optimal orthogonal factor is unique and its determinant decides.
pub fn proper_motion_equivalent(y1: &LabeledImage, y2: &LabeledImage, tol: f64) -> Result<bool> {
    if !motion_equivalent(y1, y2, tol)? {
        return Ok(false);
    }
    let svd = thin_svd(center(y1).matrix())?;
    if numerical_rank(&svd.singulars, TOL_RANK_REL) < y1.k() {
        return Ok(true);
    }
    let alignment = align(y1, y2, GroupTag::Motion)?;
    Ok(alignment.transform.proper())
}

/// True when a similarity (motion plus positive scaling) carries `y1` onto
/// `y2`: the scale-normalized Gram invariants agree within
/// `tol * (1 + ||N1||_F)`. The decision does not depend on the scheme.
pub fn similarity_equivalent(
    y1: &LabeledImage,
    y2: &LabeledImage,
    scheme: NormalizationScheme,
    tol: f64,
) -> Result<bool> {
    ensure_same_shape(y1, y2)?;
    for y in [y1, y2] {
        if is_degenerate(y) {
            return Err(Error::DegenerateImage);
        }
    }
    let n1 = similarity_normalize(&gram_invariant(y1), scheme)?;
    let n2 = similarity_normalize(&gram_invariant(y2), scheme)?;
    let d = (n1.normalized_gram().matrix() - n2.normalized_gram().matrix()).norm();
    Ok(d <= tol * (1.0 + n1.normalized_gram().frobenius_norm()))
}

/// All points coincide up to centering roundoff.
fn is_degenerate(y: &LabeledImage) -> bool {
    center(y).matrix().norm() <= TOL_CENTER * (1.0 + y.matrix().norm())
}

/// Solves the Procrustes problem for the chosen group: the returned transform
/// minimizes `||c Q y_i + u - y2_i||` over the group, through the SVD of the
/// cross matrix `M = center(Y1)^T center(Y2)`.
///
/// * `Motion`: `Q = V U^T` from `M = U S V^T`, scale fixed at 1.
/// * `ProperMotion`: if `det(V U^T) < 0` the column of `V` paired with the
///   smallest singular value is flipped.
/// * `Similarity`: the motion solution with the optimal scale
///   `c = trace(Q M) / ||center(Y1)||_F^2`; degenerate when `M = 0`, since no
///   positive scale attains the infimum there.
pub fn align(y1: &LabeledImage, y2: &LabeledImage, group: GroupTag) -> Result<AlignmentResult> {
    ensure_same_shape(y1, y2)?;
    let k = y1.k();
    let c1 = center(y1);
    let c2 = center(y2);
    let m = c1.matrix().transpose() * c2.matrix();
    let svd = thin_svd(&m)?;

    let mut right = svd.right.clone();
    let mut q = &right * svd.left.transpose();
    if group == GroupTag::ProperMotion && q.determinant() < 0.0 {
        let last = k - 1;
        for i in 0..k {
            right[(i, last)] = -right[(i, last)];
        }
        q = &right * svd.left.transpose();
    }

    let scale = match group {
        GroupTag::Similarity => {
            let denom = c1.matrix().norm_squared();
            if denom <= TOL_CENTER * TOL_CENTER || m.norm() == 0.0 {
                return Err(Error::DegenerateImage);
            }
            let c = (&q * &m).trace() / denom;
            debug_assert!(c > 0.0, "positive because M is nonzero and Q is optimal");
            Some(c)
        }
        _ => None,
    };

    let c = scale.unwrap_or(1.0);
    let u = centroid(y2) - &q * centroid(y1) * c;
    let transform = MotionElement::new(q, u)?;
    let moved = transform.act_on_image(&y1.scaled(c))?;
    let residual = (moved.matrix() - y2.matrix()).norm();
    Ok(AlignmentResult {
        transform,
        scale,
        residual,
        group,
    })
}

/// Frobenius distance between Gram invariants. A true metric on motion orbits
/// of `n`-point images; the ambient dimensions of the two images may differ.
pub fn orbit_distance_gram(y1: &LabeledImage, y2: &LabeledImage) -> Result<OrbitDistance> {
    ensure_same_n(y1, y2)?;
    let value = (gram_invariant(y1).matrix() - gram_invariant(y2).matrix()).norm();
    Ok(OrbitDistance {
        value,
        kind: DistanceKind::GramFrobenius,
        group: GroupTag::Motion,
    })
}

/// Residual of the optimal alignment under the chosen group.
pub fn orbit_distance_procrustes(
    y1: &LabeledImage,
    y2: &LabeledImage,
    group: GroupTag,
) -> Result<OrbitDistance> {
    let alignment = align(y1, y2, group)?;
    Ok(OrbitDistance {
        value: alignment.residual,
        kind: DistanceKind::Procrustes,
        group,
    })
}
