//! Default numerical tolerances, pinned in one place.
//!
//! Every constant here is relative unless the name says otherwise. Callers can
//! override the decision tolerances (`TOL_EQ`, `TOL_RANK_REL`, `TOL_GROUP_REL`)
//! through function arguments or CLI flags; the structural tolerances are fixed
//! properties of the numeric kernels and are not configurable.

/// Orthogonality check for rotation matrices: `max|Q^T Q - I| <= TOL_ORTH`.
pub const TOL_ORTH: f64 = 1e-9;

/// Numerical rank: singular values above `TOL_RANK_REL * sigma_1` count.
pub const TOL_RANK_REL: f64 = 1e-10;

/// Multiplicity grouping: values within `TOL_GROUP_REL * sigma_1` of a block's
/// first element join that block.
pub const TOL_GROUP_REL: f64 = 1e-8;

/// Equivalence decisions: Gram matrices within `TOL_EQ * (1 + ||G1||_F)` in
/// Frobenius norm are declared equal.
pub const TOL_EQ: f64 = 1e-8;

/// Group axioms (associativity, inverses, identity) hold to this absolute
/// level for elements with O(1) entries.
pub const TOL_GROUP_AXIOM: f64 = 1e-12;

/// Thin SVD reconstruction: `||U S V^T - M||_F <= TOL_SVD_RECONSTRUCT * (1 + ||M||_F)`,
/// and both factors are orthonormal to the same level.
pub const TOL_SVD_RECONSTRUCT: f64 = 1e-10;

/// Centering: row means of a centered image vanish within
/// `TOL_CENTER * (1 + ||Y||_F)`. Also the threshold below which a centered
/// image counts as degenerate (all points coincide).
pub const TOL_CENTER: f64 = 1e-13;

/// Sweep budget for the one-sided Jacobi SVD and the cyclic Jacobi eigensolver.
pub const MAX_JACOBI_SWEEPS: usize = 100;
