// From raw coordinates to the complete motion invariant: the centered gram
// matrix, its axis lengths, and the multiplicity structure.

use orbigram::invariants::{ellipsoid_spectrum, gram_invariant};
use orbigram::LabeledImage;

fn describe(name: &str, y: &LabeledImage) -> orbigram::Result<()> {
    let spectrum = ellipsoid_spectrum(y)?;
    print!("{name}: axes [");
    for (i, a) in spectrum.axis_lengths.iter().enumerate() {
        if i > 0 {
            print!(", ");
        }
        print!("{a:.4}");
    }
    print!("], blocks");
    for block in &spectrum.blocks.blocks {
        print!(" {:.4}x{}", block.value, block.multiplicity);
    }
    println!(", zero axes {}", spectrum.blocks.zero_count);
    Ok(())
}

fn main() -> orbigram::Result<()> {
    // A square has one doubled axis; stretching it splits the block.
    let square = LabeledImage::from_rows(&[
        vec![1.0, 1.0],
        vec![-1.0, 1.0],
        vec![-1.0, -1.0],
        vec![1.0, -1.0],
    ])?;
    let rectangle = LabeledImage::from_rows(&[
        vec![2.0, 1.0],
        vec![-2.0, 1.0],
        vec![-2.0, -1.0],
        vec![2.0, -1.0],
    ])?;
    describe("square   ", &square)?;
    describe("rectangle", &rectangle)?;

    // The gram matrix itself is the invariant: n x n, symmetric, rows sum
    // to zero, independent of where the square sits in the plane.
    let g = gram_invariant(&square);
    println!("gram matrix of the square:");
    println!("{:.3}", g.matrix());

    // Scaling the points by a scales the invariant by a^2.
    let scaled = gram_invariant(&square.scaled(3.0));
    println!(
        "scaling law gap at a = 3: {:.3e}",
        (scaled.matrix() - g.matrix() * 9.0).norm()
    );

    // Degenerate configurations are first-class: collinear points lose an
    // axis, coincident points lose both.
    let collinear =
        LabeledImage::from_rows(&[vec![0.0, 0.0], vec![1.0, 2.0], vec![2.0, 4.0], vec![3.0, 6.0]])?;
    describe("collinear", &collinear)?;
    Ok(())
}
