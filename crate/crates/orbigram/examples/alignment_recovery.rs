// Recover a hidden transformation from labeled correspondences alone.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use orbigram::equivalence::{align, GroupTag};
use orbigram::random::{random_image, random_motion, random_scale};

fn main() -> orbigram::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);

    let y1 = random_image(6, 3, &mut rng);
    let hidden = random_motion(3, &mut rng, 5.0, true);
    let y2 = hidden.act_on_image(&y1)?;

    // Full-rank generic images pin the optimal motion uniquely, so the
    // recovered element matches the hidden one entrywise.
    let found = align(&y1, &y2, GroupTag::ProperMotion)?;
    println!(
        "rotation gap    {:.3e}",
        (found.transform.rotation() - hidden.rotation()).norm()
    );
    println!(
        "translation gap {:.3e}",
        (found.transform.translation() - hidden.translation()).norm()
    );
    println!("residual        {:.3e}", found.residual);
    println!("proper          {}", found.transform.proper());

    // The recovered element really maps y1 onto y2.
    let mapped = found.apply(&y1)?;
    println!(
        "apply gap       {:.3e}",
        (mapped.matrix() - y2.matrix()).norm()
    );

    // Similarity alignment additionally reports the scale.
    let scale = random_scale(&mut rng, 0.5, 2.0);
    let y3 = hidden.act_on_image(&y1.scaled(scale))?;
    let sim = align(&y1, &y3, GroupTag::Similarity)?;
    println!(
        "hidden scale {:.6}, recovered {:.6}",
        scale,
        sim.scale.expect("similarity alignment carries a scale")
    );

    // Alignment is least-squares, so it degrades gracefully: perturb the
    // target and the residual tracks the perturbation instead of blowing up.
    let bumped = {
        let mut m = y2.matrix().clone();
        m[(0, 0)] += 0.05;
        orbigram::LabeledImage::new(m)?
    };
    let noisy = align(&y1, &bumped, GroupTag::Motion)?;
    println!("residual after a 0.05 bump: {:.4}", noisy.residual);
    Ok(())
}
