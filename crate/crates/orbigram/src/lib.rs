//! Orbit invariants for labeled point configurations.
//!
//! An image here is an ordered list of `n` labeled points in `R^k`, stored as
//! the rows of an `n x k` matrix. The crate answers, exactly rather than by
//! search, when two images are the same up to a rigid motion (rotations,
//! reflections, translations), up to an orientation-preserving motion, or up
//! to a similarity (motion plus positive uniform scaling); it recovers an
//! optimal aligning transformation in closed form and measures distances
//! between orbits.
//!
//! The workhorse is the Gram invariant `G = center(Y) center(Y)^T`: two images
//! of the same shape are motion equivalent exactly when their Gram invariants
//! coincide, and dividing out one scalar makes the same matrix decide
//! similarity equivalence. Everything else (axis lengths, multiplicity
//! structure, alignment, metrics) is read off `G` or the SVD of the centered
//! matrix.
//!
//! # Layout
//!
//! * [`image`]: the [`LabeledImage`] container (row order is meaning; nothing
//!   here ever reorders points).
//! * [`group`]: affine and motion elements, composition, inverses, the action
//!   on images, homogeneous embedding.
//! * [`linalg`]: centering, a deterministic one-sided Jacobi thin SVD,
//!   numerical rank, multiplicity grouping.
//! * [`invariants`]: Gram invariant, ellipsoid spectrum, similarity
//!   normalization schemes, spectrum synthesis.
//! * [`equivalence`]: equivalence decisions, Procrustes alignment, orbit
//!   metrics.
//! * [`oracle`]: independently coded slow routes (two-sided Jacobi
//!   eigensolver, brute-force rotation grid) used to cross-check the fast
//!   ones.
//! * [`random`]: seeded generators for images and group elements.
//! * [`io`] / [`record`]: CSV/JSON image files and deterministic
//!   17-significant-digit result records.
//! * [`selftest`]: seeded end-to-end property checks.
//!
//! # Example
//!
//! ```
//! use orbigram::{align, motion_equivalent, GroupTag, LabeledImage, MotionElement};
//! use nalgebra::{dmatrix, dvector};
//!
//! let y1 = LabeledImage::from_rows(&[vec![0.0, 0.0], vec![2.0, 0.0], vec![0.0, 1.0]])?;
//! let quarter_turn = MotionElement::new(dmatrix![0.0, -1.0; 1.0, 0.0], dvector![5.0, -1.0])?;
//! let y2 = quarter_turn.act_on_image(&y1)?;
//!
//! assert!(motion_equivalent(&y1, &y2, orbigram::tol::TOL_EQ)?);
//! let alignment = align(&y1, &y2, GroupTag::ProperMotion)?;
//! assert!(alignment.residual < 1e-10);
//! # Ok::<(), orbigram::Error>(())
//! ```

pub mod equivalence;
pub mod error;
pub mod group;
pub mod image;
pub mod invariants;
pub mod io;
pub mod linalg;
pub mod oracle;
pub mod random;
pub mod record;
pub mod selftest;
pub mod tol;

pub use equivalence::{
    align, motion_equivalent, orbit_distance_gram, orbit_distance_procrustes,
    proper_motion_equivalent, similarity_equivalent, AlignmentResult, DistanceKind, GroupTag,
    OrbitDistance,
};
pub use error::{Error, Result};
pub use group::{AffineElement, MotionElement};
pub use image::LabeledImage;
pub use invariants::{
    centered_basis, ellipsoid_spectrum, gram_invariant, similarity_normalize,
    synthesize_from_spectrum, EllipsoidSpectrum, GramInvariant, NormalizationScheme,
    SimilarityInvariant,
};
pub use linalg::{
    center, centroid, group_multiplicities, numerical_rank, thin_svd, MultiplicityBlocks,
    SpectrumBlock, ThinSvd,
};
pub use selftest::{run_selftest, PropertyReport};
