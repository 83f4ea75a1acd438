// How the three groups carve up shape space, on one scalene triangle.
// Reflections separate the motion group from its proper subgroup, and an
// extra ambient dimension dissolves the distinction.

use orbigram::equivalence::{motion_equivalent, proper_motion_equivalent, similarity_equivalent};
use orbigram::invariants::NormalizationScheme;
use orbigram::tol::TOL_EQ;
use orbigram::LabeledImage;

fn main() -> orbigram::Result<()> {
    let triangle = LabeledImage::from_rows(&[vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 2.0]])?;
    let mirrored = LabeledImage::from_rows(&[vec![0.0, 0.0], vec![-1.0, 0.0], vec![0.0, 2.0]])?;
    let doubled = triangle.scaled(2.0);
    let scheme = NormalizationScheme::default();

    println!("triangle vs its mirror image:");
    println!("  motion     {}", motion_equivalent(&triangle, &mirrored, TOL_EQ)?);
    println!(
        "  proper     {}",
        proper_motion_equivalent(&triangle, &mirrored, TOL_EQ)?
    );
    println!(
        "  similarity {}",
        similarity_equivalent(&triangle, &mirrored, scheme, TOL_EQ)?
    );

    println!("triangle vs its doubled copy:");
    println!("  motion     {}", motion_equivalent(&triangle, &doubled, TOL_EQ)?);
    println!(
        "  similarity {}",
        similarity_equivalent(&triangle, &doubled, scheme, TOL_EQ)?
    );

    // In the plane no rotation reaches the mirror image. Embedded in three
    // dimensions the same two triangles are connected by a half turn about
    // the y axis, so the proper group suffices there.
    println!(
        "mirror pair padded to k = 3, proper: {}",
        proper_motion_equivalent(&triangle.zero_padded(1), &mirrored.zero_padded(1), TOL_EQ)?
    );

    // Labels matter: swapping two rows is a different image unless the
    // shape happens to be symmetric under that relabeling.
    let swapped = LabeledImage::from_rows(&[vec![1.0, 0.0], vec![0.0, 0.0], vec![0.0, 2.0]])?;
    println!(
        "triangle vs row-swapped copy, motion: {}",
        motion_equivalent(&triangle, &swapped, TOL_EQ)?
    );
    Ok(())
}
