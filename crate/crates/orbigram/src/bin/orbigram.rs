//! Command-line front end. Parses arguments, calls the library, prints one
//! compact JSON record on stdout. Exit codes: 0 success (and "equivalent" for
//! compare), 1 not-equivalent or property failure, 2 usage, parse, or shape
//! errors.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use orbigram::equivalence::{
    align, motion_equivalent, orbit_distance_gram, orbit_distance_procrustes,
    proper_motion_equivalent, similarity_equivalent, DistanceKind, GroupTag,
};
use orbigram::error::Result;
use orbigram::image::LabeledImage;
use orbigram::invariants::{gram_invariant, similarity_normalize, NormalizationScheme};
use orbigram::io::{read_image, read_manifest, write_json_image, ImageData};
use orbigram::linalg::centroid;
use orbigram::random::{random_image, random_motion, random_scale};
use orbigram::record::{
    blocks_out, sig17_matrix, sig17_vec, AlignResults, CompareResults, DistMatrixResults,
    GenResults, InvariantResults, PropertyOut, ResultRecord, SelftestResults, Sig17,
    ToleranceReport, TransformFile,
};
use orbigram::selftest::run_selftest;
use orbigram::tol::{TOL_EQ, TOL_RANK_REL};

#[derive(Parser)]
#[command(name = "orbigram", version, about = "Motion and similarity orbit invariants for labeled point sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report centroid, axis lengths, multiplicity blocks, and rank of one image
    Invariant {
        file: PathBuf,
        /// Skip the first CSV line
        #[arg(long)]
        header: bool,
        /// Include the full Gram matrix in the record
        #[arg(long)]
        full_gram: bool,
        /// Relative cutoff for the numerical rank
        #[arg(long, default_value_t = TOL_RANK_REL)]
        tol_rank: f64,
    },
    /// Decide whether two images lie on the same orbit
    Compare {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value_t = GroupTag::Motion)]
        group: GroupTag,
        /// Scale normalization (similarity group only)
        #[arg(long, default_value_t = NormalizationScheme::GeomMeanAxis)]
        scheme: NormalizationScheme,
        /// Relative equivalence tolerance
        #[arg(long, default_value_t = TOL_EQ)]
        tol: f64,
        #[arg(long)]
        header: bool,
    },
    /// Recover the optimal transformation carrying one image onto another
    Align {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value_t = GroupTag::Motion)]
        group: GroupTag,
        #[arg(long)]
        header: bool,
    },
    /// Pairwise orbit distances for every image in a manifest
    DistMatrix {
        manifest: PathBuf,
        #[arg(long, default_value_t = GroupTag::Motion)]
        group: GroupTag,
        #[arg(long, default_value_t = DistanceKind::GramFrobenius)]
        metric: DistanceKind,
        #[arg(long)]
        header: bool,
    },
    /// Generate a seeded random image pair with ground-truth transform
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = TransformKind::Motion)]
        transform: TransformKind,
        /// Standard deviation of Gaussian noise added after the transform
        #[arg(long, default_value_t = 0.0)]
        noise: f64,
        /// Output directory
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Run the randomized property suite
    Selftest {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum TransformKind {
    Motion,
    Proper,
    Similarity,
    None,
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::Motion => "motion",
            Self::Proper => "proper",
            Self::Similarity => "similarity",
            Self::None => "none",
        };
        f.write_str(s)
    }
}

impl FromStr for TransformKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "motion" => Ok(Self::Motion),
            "proper" => Ok(Self::Proper),
            "similarity" => Ok(Self::Similarity),
            "none" => Ok(Self::None),
            other => Err(format!(
                "unknown transform '{other}' (expected motion, proper, similarity, or none)"
            )),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Invariant {
            file,
            header,
            full_gram,
            tol_rank,
        } => cmd_invariant(&file, header, full_gram, tol_rank),
        Command::Compare {
            a,
            b,
            group,
            scheme,
            tol,
            header,
        } => cmd_compare(&a, &b, group, scheme, tol, header),
        Command::Align { a, b, group, header } => cmd_align(&a, &b, group, header),
        Command::DistMatrix {
            manifest,
            group,
            metric,
            header,
        } => cmd_dist_matrix(&manifest, group, metric, header),
        Command::Gen {
            n,
            k,
            seed,
            transform,
            noise,
            out,
        } => cmd_gen(n, k, seed, transform, noise, &out),
        Command::Selftest { trials, seed } => cmd_selftest(trials, seed),
    }
}

fn emit<T: serde::Serialize>(record: &ResultRecord<T>) -> Result<()> {
    println!("{}", record.to_json()?);
    Ok(())
}

fn cmd_invariant(file: &Path, header: bool, full_gram: bool, tol_rank: f64) -> Result<ExitCode> {
    let data = read_image(file, header)?;
    let spec = orbigram::invariants::ellipsoid_spectrum(&data.image)?;
    let rank = orbigram::linalg::numerical_rank(&spec.axis_lengths, tol_rank);
    let gram = full_gram.then(|| sig17_matrix(gram_invariant(&data.image).matrix()));
    let record = ResultRecord {
        command: "invariant",
        inputs: vec![file.display().to_string()],
        group: None,
        scheme: None,
        tolerances: ToleranceReport {
            tol_eq: Sig17(TOL_EQ),
            tol_rank: Sig17(tol_rank),
        },
        results: InvariantResults {
            n: data.image.n(),
            k: data.image.k(),
            centroid: sig17_vec(centroid(&data.image).as_slice()),
            axis_lengths: sig17_vec(&spec.axis_lengths),
            blocks: blocks_out(&spec.blocks),
            zero_count: spec.blocks.zero_count,
            rank,
            labels: data.labels,
            gram,
        },
        verdicts: None,
    };
    emit(&record)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_compare(
    a: &Path,
    b: &Path,
    group: GroupTag,
    scheme: NormalizationScheme,
    tol: f64,
    header: bool,
) -> Result<ExitCode> {
    let y1 = read_image(a, header)?.image;
    let y2 = read_image(b, header)?.image;
    let equivalent = match group {
        GroupTag::Motion => motion_equivalent(&y1, &y2, tol)?,
        GroupTag::ProperMotion => proper_motion_equivalent(&y1, &y2, tol)?,
        GroupTag::Similarity => similarity_equivalent(&y1, &y2, scheme, tol)?,
    };
    let gram_distance = orbit_distance_gram(&y1, &y2)?.value;
    let procrustes_distance = orbit_distance_procrustes(&y1, &y2, group)?.value;
    let normalized_gram_distance = match group {
        GroupTag::Similarity => {
            let n1 = similarity_normalize(&gram_invariant(&y1), scheme)?;
            let n2 = similarity_normalize(&gram_invariant(&y2), scheme)?;
            Some(Sig17(
                (n1.normalized_gram().matrix() - n2.normalized_gram().matrix()).norm(),
            ))
        }
        _ => None,
    };
    let record = ResultRecord {
        command: "compare",
        inputs: vec![a.display().to_string(), b.display().to_string()],
        group: Some(group),
        scheme: (group == GroupTag::Similarity).then_some(scheme),
        tolerances: ToleranceReport {
            tol_eq: Sig17(tol),
            tol_rank: Sig17(TOL_RANK_REL),
        },
        results: CompareResults {
            equivalent,
            gram_distance: Sig17(gram_distance),
            procrustes_distance: Sig17(procrustes_distance),
            normalized_gram_distance,
        },
        verdicts: Some(BTreeMap::from([("equivalent", equivalent)])),
    };
    emit(&record)?;
    Ok(if equivalent {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_align(a: &Path, b: &Path, group: GroupTag, header: bool) -> Result<ExitCode> {
    let y1 = read_image(a, header)?.image;
    let y2 = read_image(b, header)?.image;
    let result = align(&y1, &y2, group)?;
    let record = ResultRecord {
        command: "align",
        inputs: vec![a.display().to_string(), b.display().to_string()],
        group: Some(group),
        scheme: None,
        tolerances: ToleranceReport::default(),
        results: AlignResults {
            rotation: sig17_matrix(result.transform.rotation()),
            translation: sig17_vec(result.transform.translation().as_slice()),
            scale: result.scale.map(Sig17),
            proper: result.transform.proper(),
            residual: Sig17(result.residual),
        },
        verdicts: None,
    };
    emit(&record)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_dist_matrix(
    manifest: &Path,
    group: GroupTag,
    metric: DistanceKind,
    header: bool,
) -> Result<ExitCode> {
    let paths = read_manifest(manifest)?;
    // Atomic loading: report every unreadable file, then fail as a whole.
    let mut images: Vec<ImageData> = Vec::with_capacity(paths.len());
    let mut load_failed = false;
    for (i, path) in paths.iter().enumerate() {
        match read_image(path, header) {
            Ok(data) => images.push(data),
            Err(e) => {
                eprintln!("images[{i}] ({}): {e}", path.display());
                load_failed = true;
            }
        }
    }
    if load_failed {
        return Ok(ExitCode::from(2));
    }
    for (i, data) in images.iter().enumerate() {
        let same = match metric {
            DistanceKind::GramFrobenius => data.image.n() == images[0].image.n(),
            DistanceKind::Procrustes => {
                data.image.n() == images[0].image.n() && data.image.k() == images[0].image.k()
            }
        };
        if !same {
            eprintln!(
                "images[{i}] ({}): shape {}x{} does not match images[0]",
                paths[i].display(),
                data.image.n(),
                data.image.k()
            );
            return Ok(ExitCode::from(2));
        }
    }

    let m = images.len();
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| ((i + 1)..m).map(move |j| (i, j)))
        .collect();
    let values: Result<Vec<f64>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let d = match metric {
                DistanceKind::GramFrobenius => {
                    orbit_distance_gram(&images[i].image, &images[j].image)?
                }
                DistanceKind::Procrustes => {
                    orbit_distance_procrustes(&images[i].image, &images[j].image, group)?
                }
            };
            Ok(d.value)
        })
        .collect();
    let values = values?;

    // Assemble by index so the record is independent of execution order.
    let mut matrix = vec![vec![0.0f64; m]; m];
    for (&(i, j), &v) in pairs.iter().zip(values.iter()) {
        matrix[i][j] = v;
        matrix[j][i] = v;
    }
    let record = ResultRecord {
        command: "dist-matrix",
        inputs: vec![manifest.display().to_string()],
        group: (metric == DistanceKind::Procrustes).then_some(group),
        scheme: None,
        tolerances: ToleranceReport::default(),
        results: DistMatrixResults {
            metric,
            files: paths.iter().map(|p| p.display().to_string()).collect(),
            matrix: matrix
                .iter()
                .map(|row| row.iter().copied().map(Sig17).collect())
                .collect(),
        },
        verdicts: None,
    };
    emit(&record)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_gen(
    n: usize,
    k: usize,
    seed: u64,
    transform: TransformKind,
    noise: f64,
    out: &Path,
) -> Result<ExitCode> {
    if !noise.is_finite() || noise < 0.0 {
        eprintln!("error: --noise must be finite and nonnegative, got {noise}");
        return Ok(ExitCode::from(2));
    }
    std::fs::create_dir_all(out)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let y1 = random_image(n, k, &mut rng);

    let (motion, scale) = match transform {
        TransformKind::None => (orbigram::group::MotionElement::identity(k), 1.0),
        TransformKind::Motion => (random_motion(k, &mut rng, 10.0, false), 1.0),
        TransformKind::Proper => (random_motion(k, &mut rng, 10.0, true), 1.0),
        TransformKind::Similarity => {
            let g = random_motion(k, &mut rng, 10.0, false);
            let s = random_scale(&mut rng, 1.0 / 3.0, 3.0);
            (g, s)
        }
    };
    let mut y2 = motion.act_on_image(&y1.scaled(scale))?;
    if noise > 0.0 {
        let mut m = y2.matrix().clone();
        for v in m.iter_mut() {
            let z: f64 = rng.sample(rand_distr::StandardNormal);
            *v += noise * z;
        }
        y2 = LabeledImage::new(m)?;
    }

    let path_a = out.join("image_a.json");
    let path_b = out.join("image_b.json");
    let path_t = out.join("transform.json");
    write_json_image(&path_a, &ImageData { image: y1, labels: None })?;
    write_json_image(&path_b, &ImageData { image: y2, labels: None })?;
    let truth = TransformFile {
        rotation: sig17_matrix(motion.rotation()),
        translation: sig17_vec(motion.translation().as_slice()),
        scale: Sig17(scale),
        proper: motion.proper(),
        noise: Sig17(noise),
    };
    let mut text = serde_json::to_string(&truth)?;
    text.push('\n');
    std::fs::write(&path_t, text)?;

    let record = ResultRecord {
        command: "gen",
        inputs: Vec::new(),
        group: None,
        scheme: None,
        tolerances: ToleranceReport::default(),
        results: GenResults {
            n,
            k,
            seed,
            transform: transform.to_string(),
            noise: Sig17(noise),
            files: vec![
                path_a.display().to_string(),
                path_b.display().to_string(),
                path_t.display().to_string(),
            ],
        },
        verdicts: None,
    };
    emit(&record)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_selftest(trials: usize, seed: u64) -> Result<ExitCode> {
    let reports = run_selftest(trials, seed);
    let all_passed = reports.iter().all(|r| r.ok());
    for report in reports.iter().filter(|r| !r.ok()) {
        eprintln!(
            "property {} failed: {}/{} trials passed",
            report.name, report.passed, report.trials
        );
    }
    let record = ResultRecord {
        command: "selftest",
        inputs: Vec::new(),
        group: None,
        scheme: None,
        tolerances: ToleranceReport::default(),
        results: SelftestResults {
            trials,
            seed,
            properties: reports
                .iter()
                .map(|r| PropertyOut {
                    name: r.name,
                    trials: r.trials,
                    passed: r.passed,
                })
                .collect(),
            all_passed,
        },
        verdicts: Some(BTreeMap::from([("all_passed", all_passed)])),
    };
    emit(&record)?;
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
