//! Seeded sampling of images, orthogonal matrices, and group elements.
//!
//! Everything takes the RNG by argument; fixture generation that promises
//! byte-identical output pins a `ChaCha8Rng`, whose stream is stable across
//! platforms and releases.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::group::MotionElement;
use crate::image::LabeledImage;

fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    StandardNormal.sample(rng)
}

/// An image with independent standard normal coordinates.
pub fn random_image<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> LabeledImage {
    let m = DMatrix::from_fn(n, k, |_, _| standard_normal(rng));
    LabeledImage::new(m).expect("gaussian entries are finite")
}

/// Haar-distributed orthogonal matrix: QR of a Gaussian matrix with the signs
/// of the R diagonal folded into Q. Covers both orientation components.
pub fn haar_orthogonal<R: Rng + ?Sized>(k: usize, rng: &mut R) -> DMatrix<f64> {
    let g = DMatrix::from_fn(k, k, |_, _| standard_normal(rng));
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..k {
        if r[(j, j)] < 0.0 {
            for i in 0..k {
                q[(i, j)] = -q[(i, j)];
            }
        }
    }
    q
}

/// Haar-distributed rotation (determinant +1): the last column of a Haar
/// orthogonal sample is flipped when the orientation comes out reversed.
pub fn special_orthogonal<R: Rng + ?Sized>(k: usize, rng: &mut R) -> DMatrix<f64> {
    let mut q = haar_orthogonal(k, rng);
    if q.determinant() < 0.0 {
        for i in 0..k {
            q[(i, k - 1)] = -q[(i, k - 1)];
        }
    }
    q
}

/// Uniform point in the closed ball of radius `bound`.
pub fn random_translation<R: Rng + ?Sized>(k: usize, rng: &mut R, bound: f64) -> DVector<f64> {
    loop {
        let dir = DVector::from_fn(k, |_, _| standard_normal(rng));
        let norm = dir.norm();
        if norm < 1e-12 {
            continue;
        }
        let radius = bound * rng.random::<f64>().powf(1.0 / k as f64);
        return dir * (radius / norm);
    }
}

/// A random motion with rotation Haar on the orthogonal group (or on the
/// rotation subgroup when `proper_only`) and translation uniform in the ball
/// of radius `translation_bound`.
pub fn random_motion<R: Rng + ?Sized>(
    k: usize,
    rng: &mut R,
    translation_bound: f64,
    proper_only: bool,
) -> MotionElement {
    let q = if proper_only {
        special_orthogonal(k, rng)
    } else {
        haar_orthogonal(k, rng)
    };
    let t = random_translation(k, rng, translation_bound);
    MotionElement::new(q, t).expect("sampled rotations are orthogonal")
}

/// A positive scale, log-uniform on `[lo, hi]`.
pub fn random_scale<R: Rng + ?Sized>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    debug_assert!(0.0 < lo && lo <= hi);
    (lo.ln() + rng.random::<f64>() * (hi.ln() - lo.ln())).exp()
}
