//! Ordered configurations of labeled points.

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// An ordered configuration of `n` labeled points in `R^k`, stored as an
/// `n x k` matrix whose i-th row is the i-th point.
///
/// Row order is semantic: the label of a point is its row index, and no
/// operation in this crate ever reorders rows. Two images related by a row
/// permutation are different images.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledImage {
    matrix: DMatrix<f64>,
}

impl LabeledImage {
    /// Wraps an `n x k` matrix. Requires `n >= 1`, `k >= 1`, and finite entries.
    pub fn new(matrix: DMatrix<f64>) -> Result<Self> {
        if matrix.nrows() == 0 || matrix.ncols() == 0 {
            return Err(Error::InvalidImage(format!(
                "image must have at least one point and one coordinate, got {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        if let Some((i, j)) = first_nonfinite(&matrix) {
            return Err(Error::InvalidImage(format!(
                "entry ({i}, {j}) is not finite"
            )));
        }
        Ok(Self { matrix })
    }

    /// Builds an image from point rows. All rows must have equal length.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidImage("no points".into()));
        }
        let k = rows[0].len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != k {
                return Err(Error::InvalidImage(format!(
                    "row {i} has {} coordinates, expected {k}",
                    row.len()
                )));
            }
        }
        Self::new(DMatrix::from_fn(n, k, |i, j| rows[i][j]))
    }

    /// Number of points.
    pub fn n(&self) -> usize {
        self.matrix.nrows()
    }

    /// Ambient dimension.
    pub fn k(&self) -> usize {
        self.matrix.ncols()
    }

    /// The underlying `n x k` matrix.
    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    /// The i-th point as a column vector.
    pub fn point(&self, i: usize) -> nalgebra::DVector<f64> {
        self.matrix.row(i).transpose()
    }

    /// Point rows as plain vectors, in label order.
    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.n())
            .map(|i| self.matrix.row(i).iter().copied().collect())
            .collect()
    }

    /// The image scaled by a finite factor `a` (every point multiplied by `a`).
    pub fn scaled(&self, a: f64) -> Self {
        debug_assert!(a.is_finite());
        Self {
            matrix: &self.matrix * a,
        }
    }

    /// The same points embedded in `R^{k + extra}` by appending zero coordinates.
    pub fn zero_padded(&self, extra: usize) -> Self {
        let mut m = DMatrix::zeros(self.n(), self.k() + extra);
        m.view_mut((0, 0), (self.n(), self.k()))
            .copy_from(&self.matrix);
        Self { matrix: m }
    }
}

fn first_nonfinite(m: &DMatrix<f64>) -> Option<(usize, usize)> {
    (0..m.nrows())
        .flat_map(|i| (0..m.ncols()).map(move |j| (i, j)))
        .find(|&(i, j)| !m[(i, j)].is_finite())
}
