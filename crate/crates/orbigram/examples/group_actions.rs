// Rigid motions as explicit (rotation, translation) pairs: composition,
// inversion, action on labeled point sets, and the homogeneous embedding.

use nalgebra::{dmatrix, dvector, DMatrix};
use orbigram::{LabeledImage, MotionElement};

fn main() -> orbigram::Result<()> {
    let quarter = MotionElement::new(dmatrix![0.0, -1.0; 1.0, 0.0], dvector![0.0, 0.0])?;
    let shift = MotionElement::new(DMatrix::identity(2, 2), dvector![3.0, -1.0])?;

    // Composition applies the right factor first.
    let g = shift.compose(&quarter);
    let y = LabeledImage::from_rows(&[vec![1.0, 0.0], vec![0.0, 1.0], vec![-1.0, 0.0]])?;
    let moved = g.act_on_image(&y)?;
    println!("g = shift after quarter turn, acting on three points:");
    println!("{:.3}", moved.matrix());

    // The inverse undoes the action to rounding error.
    let back = g.inverse().act_on_image(&moved)?;
    println!(
        "round trip gap |g^-1(g(y)) - y| = {:.3e}",
        (back.matrix() - y.matrix()).norm()
    );

    // Embedding into (k+1) x (k+1) matrices turns composition into a product.
    let homomorphism_gap =
        (g.embed_homogeneous() - shift.embed_homogeneous() * quarter.embed_homogeneous()).norm();
    println!("homogeneous embedding gap       = {homomorphism_gap:.3e}");

    // Reflections are motions too, flagged as improper.
    let mirror = MotionElement::new(dmatrix![-1.0, 0.0; 0.0, 1.0], dvector![0.0, 0.0])?;
    println!("quarter turn is proper: {}", quarter.proper());
    println!("mirror is proper:       {}", mirror.proper());

    // Orthogonality is validated at construction; a shear is rejected.
    let shear = MotionElement::new(dmatrix![1.0, 0.5; 0.0, 1.0], dvector![0.0, 0.0]);
    println!("shear accepted as motion: {}", shear.is_ok());
    Ok(())
}
