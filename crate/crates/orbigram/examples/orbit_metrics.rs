// Two metrics on the space of shapes-up-to-motion: the gram distance needs
// no alignment, the procrustes distance is the best-alignment residual.
// They have the same zero set.

use nalgebra::{dmatrix, dvector};
use orbigram::equivalence::{orbit_distance_gram, orbit_distance_procrustes, GroupTag};
use orbigram::{LabeledImage, MotionElement};

fn main() -> orbigram::Result<()> {
    // A family of quadrilaterals flattening a square into a segment.
    let family: Vec<LabeledImage> = (0..=4)
        .map(|i| {
            let h = 1.0 - i as f64 / 4.0;
            LabeledImage::from_rows(&[
                vec![1.0, h],
                vec![-1.0, h],
                vec![-1.0, -h],
                vec![1.0, -h],
            ])
        })
        .collect::<orbigram::Result<_>>()?;

    println!("gram distances across the flattening family:");
    print!("      ");
    for j in 0..family.len() {
        print!("  h={:.2}", 1.0 - j as f64 / 4.0);
    }
    println!();
    for (i, a) in family.iter().enumerate() {
        print!("h={:.2}", 1.0 - i as f64 / 4.0);
        for b in &family {
            print!("  {:6.3}", orbit_distance_gram(a, b)?.value);
        }
        println!();
    }

    // Placement is invisible to both metrics.
    let g = MotionElement::new(
        dmatrix![0.6, -0.8; 0.8, 0.6],
        dvector![5.0, -2.0],
    )?;
    let moved = g.act_on_image(&family[0])?;
    println!(
        "square vs moved square:  gram {:.3e}, procrustes {:.3e}",
        orbit_distance_gram(&family[0], &moved)?.value,
        orbit_distance_procrustes(&family[0], &moved, GroupTag::Motion)?.value
    );
    println!(
        "square vs flat segment:  gram {:.3}, procrustes {:.3}",
        orbit_distance_gram(&family[0], &family[4])?.value,
        orbit_distance_procrustes(&family[0], &family[4], GroupTag::Motion)?.value
    );

    // The gram metric compares invariants directly, so it even spans
    // different ambient dimensions; only the point count must match.
    let segment_in_3d = family[4].zero_padded(1);
    println!(
        "flat segment, k=2 vs k=3: gram {:.3e}",
        orbit_distance_gram(&family[4], &segment_in_3d)?.value
    );
    Ok(())
}
