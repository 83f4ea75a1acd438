//! Randomized self-checks over the library's own contracts.
//!
//! Each property draws its trials from a seed derived from the caller's seed,
//! so a run is reproducible as a whole and each property is reproducible in
//! isolation. Two of the properties check the main numeric routes against
//! independently coded oracles rather than against the library itself.

use std::f64::consts::TAU;

use nalgebra::DMatrix;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::equivalence::{align, motion_equivalent, orbit_distance_gram, GroupTag};
use crate::invariants::{gram_invariant, similarity_normalize, NormalizationScheme};
use crate::linalg::{center, thin_svd};
use crate::oracle::{brute_force_min_residual, jacobi_eigenvalues, GridSpec};
use crate::random::{random_image, random_motion, random_scale};
use crate::tol;

/// Outcome of one property: how many trials ran and how many met the bound.
#[derive(Debug, Clone)]
pub struct PropertyReport {
    pub name: &'static str,
    pub trials: usize,
    pub passed: usize,
}

impl PropertyReport {
    /// Vacuously true at zero trials.
    pub fn ok(&self) -> bool {
        self.passed == self.trials
    }
}

fn property_rng(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(index.wrapping_mul(0x9E37_79B9_7F4A_7C15)))
}

fn random_shape(rng: &mut ChaCha8Rng, min_n: usize) -> (usize, usize) {
    (rng.random_range(min_n..=8), rng.random_range(1..=5))
}

/// Runs every property for `trials` trials each. Any failed trial marks the
/// whole property failed; the report still says how many trials survived.
pub fn run_selftest(trials: usize, seed: u64) -> Vec<PropertyReport> {
    vec![
        gram_motion_invariance(trials, property_rng(seed, 1)),
        gram_scaling_law(trials, property_rng(seed, 2)),
        gram_metric_symmetry_triangle(trials, property_rng(seed, 3)),
        align_round_trip(trials, property_rng(seed, 4)),
        svd_matches_eigensolver_oracle(trials, property_rng(seed, 5)),
        procrustes_matches_grid_oracle(trials, property_rng(seed, 6)),
        scheme_decisions_agree(trials, property_rng(seed, 7)),
    ]
}

fn gram_motion_invariance(trials: usize, mut rng: ChaCha8Rng) -> PropertyReport {
    let mut passed = 0;
    for _ in 0..trials {
        let (n, k) = random_shape(&mut rng, 1);
        let y = random_image(n, k, &mut rng);
        let g = gram_invariant(&y);
        let motion = random_motion(k, &mut rng, 10.0, false);
        let Ok(moved) = motion.act_on_image(&y) else {
            continue;
        };
        let gap = (g.matrix() - gram_invariant(&moved).matrix()).norm();
        if gap <= 1e-10 * (1.0 + g.frobenius_norm()) {
            passed += 1;
        }
    }
    PropertyReport {
        name: "gram_motion_invariance",
        trials,
        passed,
    }
}

fn gram_scaling_law(trials: usize, mut rng: ChaCha8Rng) -> PropertyReport {
    let mut passed = 0;
    for _ in 0..trials {
        let (n, k) = random_shape(&mut rng, 1);
        let y = random_image(n, k, &mut rng);
        let a = random_scale(&mut rng, 1.0 / 3.0, 3.0);
        let g = gram_invariant(&y);
        let g_scaled = gram_invariant(&y.scaled(a));
        let expected = g.matrix() * (a * a);
        let gap = (g_scaled.matrix() - &expected).norm();
        if gap <= 1e-12 * (1.0 + expected.norm()) {
            passed += 1;
        }
    }
    PropertyReport {
        name: "gram_scaling_law",
        trials,
        passed,
    }
}

fn gram_metric_symmetry_triangle(trials: usize, mut rng: ChaCha8Rng) -> PropertyReport {
    let mut passed = 0;
    for _ in 0..trials {
        let (n, k) = random_shape(&mut rng, 1);
        let y1 = random_image(n, k, &mut rng);
        let y2 = random_image(n, k, &mut rng);
        let y3 = random_image(n, k, &mut rng);
        let d12 = orbit_distance_gram(&y1, &y2).unwrap().value;
        let d21 = orbit_distance_gram(&y2, &y1).unwrap().value;
        let d13 = orbit_distance_gram(&y1, &y3).unwrap().value;
        let d23 = orbit_distance_gram(&y2, &y3).unwrap().value;
        let slack = 1e-12 * (1.0 + d12 + d23);
        if d12 == d21 && d13 <= d12 + d23 + slack {
            passed += 1;
        }
    }
    PropertyReport {
        name: "gram_metric_symmetry_triangle",
        trials,
        passed,
    }
}

fn align_round_trip(trials: usize, mut rng: ChaCha8Rng) -> PropertyReport {
    let mut passed = 0;
    for _ in 0..trials {
        let (n, k) = random_shape(&mut rng, 1);
        let y1 = random_image(n, k, &mut rng);
        let motion = random_motion(k, &mut rng, 10.0, false);
        let Ok(y2) = motion.act_on_image(&y1) else {
            continue;
        };
        let Ok(result) = align(&y1, &y2, GroupTag::Motion) else {
            continue;
        };
        let Ok(realigned) = result.apply(&y1) else {
            continue;
        };
        let gap = (realigned.matrix() - y2.matrix()).norm();
        let ok_residual = gap <= 1e-9 * (1.0 + y2.matrix().norm());
        let ok_equiv = motion_equivalent(&y1, &y2, tol::TOL_EQ).unwrap_or(false);
        if ok_residual && ok_equiv {
            passed += 1;
        }
    }
    PropertyReport {
        name: "align_round_trip",
        trials,
        passed,
    }
}

fn svd_matches_eigensolver_oracle(trials: usize, mut rng: ChaCha8Rng) -> PropertyReport {
    let mut passed = 0;
    for _ in 0..trials {
        let n = rng.random_range(1..=8);
        let k = rng.random_range(1..=5);
        let m = DMatrix::from_fn(n, k, |_, _| rng.random_range(-4.0..4.0));
        let Ok(svd) = thin_svd(&m) else { continue };
        let gram = m.transpose() * &m;
        let Ok(eigs) = jacobi_eigenvalues(&gram) else {
            continue;
        };
        let top = eigs.first().copied().unwrap_or(0.0).max(0.0);
        let ok = svd
            .singulars
            .iter()
            .zip(eigs.iter())
            .all(|(s, lambda)| (s * s - lambda).abs() <= 1e-9 * top + 1e-12);
        if ok {
            passed += 1;
        }
    }
    PropertyReport {
        name: "svd_matches_eigensolver_oracle",
        trials,
        passed,
    }
}

fn procrustes_matches_grid_oracle(trials: usize, mut rng: ChaCha8Rng) -> PropertyReport {
    let angle_count = 2048;
    let grid = GridSpec::new(angle_count, true, 1);
    let mut passed = 0;
    for _ in 0..trials {
        let n = rng.random_range(2..=6);
        let y1 = random_image(n, 2, &mut rng);
        let y2 = random_image(n, 2, &mut rng);
        let Ok(solved) = align(&y1, &y2, GroupTag::Motion).map(|r| r.residual) else {
            continue;
        };
        let Ok(brute) = brute_force_min_residual(&y1, &y2, &grid) else {
            continue;
        };
        // A grid of m angles lands within pi/m of the optimal angle, and the
        // residual is Lipschitz in the angle with constant <= ||center(Y1)||_F.
        let spacing = TAU * center(&y1).matrix().norm() / angle_count as f64;
        let close = brute <= solved + spacing + 1e-12;
        let dominates = brute >= solved - 1e-10;
        if close && dominates {
            passed += 1;
        }
    }
    PropertyReport {
        name: "procrustes_matches_grid_oracle",
        trials,
        passed,
    }
}

fn scheme_decisions_agree(trials: usize, mut rng: ChaCha8Rng) -> PropertyReport {
    let schemes = [
        NormalizationScheme::MaxAxis,
        NormalizationScheme::MeanAxis,
        NormalizationScheme::GeomMeanAxis,
    ];
    let mut passed = 0;
    for trial in 0..trials {
        let (n, k) = random_shape(&mut rng, 2);
        let y1 = random_image(n, k, &mut rng);
        let y2 = if trial % 2 == 0 {
            let motion = random_motion(k, &mut rng, 10.0, false);
            match motion.act_on_image(&y1) {
                Ok(moved) => moved.scaled(random_scale(&mut rng, 1.0 / 3.0, 3.0)),
                Err(_) => continue,
            }
        } else {
            random_image(n, k, &mut rng)
        };
        let g1 = gram_invariant(&y1);
        let g2 = gram_invariant(&y2);
        let verdicts: Vec<bool> = schemes
            .iter()
            .map(|&scheme| {
                let n1 = similarity_normalize(&g1, scheme).unwrap();
                let n2 = similarity_normalize(&g2, scheme).unwrap();
                let d = (n1.normalized_gram().matrix() - n2.normalized_gram().matrix()).norm();
                d <= tol::TOL_EQ * (1.0 + n1.normalized_gram().frobenius_norm())
            })
            .collect();
        if verdicts.iter().all(|&v| v == verdicts[0]) {
            passed += 1;
        }
    }
    PropertyReport {
        name: "scheme_decisions_agree",
        trials,
        passed,
    }
}
