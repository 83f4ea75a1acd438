// The inverse direction: prescribe axis lengths and build a point set
// realizing them. Any nonincreasing list fits, as long as there are at most
// min(n - 1, k) nonzero entries.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use orbigram::invariants::{centered_basis, ellipsoid_spectrum, synthesize_from_spectrum};
use orbigram::random::haar_orthogonal;

fn realized(y: &orbigram::LabeledImage) -> orbigram::Result<String> {
    let spectrum = ellipsoid_spectrum(y)?;
    Ok(spectrum
        .axis_lengths
        .iter()
        .map(|a| format!("{a:.6}"))
        .collect::<Vec<_>>()
        .join(", "))
}

fn main() -> orbigram::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);

    // Five points in the plane with axes 3 and 1. The row frame lives in
    // the centered hyperplane (columns orthonormal and summing to zero),
    // the column frame picks the directions in ambient space.
    let left = &centered_basis(5) * haar_orthogonal(4, &mut rng).columns(0, 2);
    let right = haar_orthogonal(2, &mut rng).columns(0, 2).into_owned();
    let y = synthesize_from_spectrum(&[3.0, 1.0], &left, &right)?;
    println!("five points in the plane, target [3, 1]:");
    println!("{:.3}", y.matrix());
    println!("realized: [{}]", realized(&y)?);

    // Three points in five dimensions: n < k caps the rank at n - 1 = 2,
    // so the spectrum [2, 2] plus one forced zero.
    let left = &centered_basis(3) * haar_orthogonal(2, &mut rng).columns(0, 2);
    let right = haar_orthogonal(5, &mut rng).columns(0, 2).into_owned();
    let y = synthesize_from_spectrum(&[2.0, 2.0], &left, &right)?;
    println!("three points in five dimensions, target [2, 2]:");
    println!("realized: [{}]", realized(&y)?);
    let blocks = ellipsoid_spectrum(&y)?.blocks;
    println!(
        "multiplicity: {:.4}x{}, forced zeros: {}",
        blocks.blocks[0].value, blocks.blocks[0].multiplicity, blocks.zero_count
    );

    // A single prescribed axis in 3-space yields collinear points.
    let left = &centered_basis(4) * haar_orthogonal(3, &mut rng).columns(0, 1);
    let right = haar_orthogonal(3, &mut rng).columns(0, 1).into_owned();
    let y = synthesize_from_spectrum(&[4.0], &left, &right)?;
    println!("four points, one axis of length 4 in k = 3:");
    println!("realized: [{}]", realized(&y)?);
    Ok(())
}
