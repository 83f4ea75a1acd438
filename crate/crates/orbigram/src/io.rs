//! Reading and writing image files.
//!
//! Two formats, chosen by extension: CSV (`.csv` or anything non-JSON; one
//! point per row, exactly `k` comma-separated numeric fields) and JSON
//! (`{"points": [[...], ...], "labels": [...]?}`). Labels ride along for
//! reporting and are never computed on. All floats are written with 17
//! significant digits, so a read-write-read cycle reproduces every coordinate
//! bit for bit.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::image::LabeledImage;
use crate::record::Sig17;

/// An image plus optional per-point display labels (label i names row i).
#[derive(Debug, Clone)]
pub struct ImageData {
    pub image: LabeledImage,
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileFormat {
    Csv,
    Json,
}

/// `.json` means JSON; everything else is treated as CSV.
pub fn detect_format(path: &Path) -> FileFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some(ext) if ext.eq_ignore_ascii_case("json") => FileFormat::Json,
        _ => FileFormat::Csv,
    }
}

/// Reads an image in the format implied by the extension. `header` skips the
/// first CSV line and is ignored for JSON.
pub fn read_image(path: &Path, header: bool) -> Result<ImageData> {
    match detect_format(path) {
        FileFormat::Csv => read_csv_image(path, header),
        FileFormat::Json => read_json_image(path),
    }
}

pub fn read_csv_image(path: &Path, header: bool) -> Result<ImageData> {
    let text = fs::read_to_string(path)?;
    let display = path.display().to_string();
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut k: Option<usize> = None;
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        if header && idx == 0 {
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if let Some(k) = k {
            if fields.len() != k {
                return Err(Error::Parse {
                    path: display,
                    line: line_no,
                    field: fields.len().min(k) + 1,
                    message: format!("expected {k} fields, found {}", fields.len()),
                });
            }
        } else {
            k = Some(fields.len());
        }
        let mut row = Vec::with_capacity(fields.len());
        for (f_idx, raw) in fields.iter().enumerate() {
            let trimmed = raw.trim();
            let value: f64 = trimmed.parse().map_err(|_| Error::Parse {
                path: display.clone(),
                line: line_no,
                field: f_idx + 1,
                message: format!("'{trimmed}' is not a number"),
            })?;
            if !value.is_finite() {
                return Err(Error::Parse {
                    path: display.clone(),
                    line: line_no,
                    field: f_idx + 1,
                    message: format!("'{trimmed}' is not finite"),
                });
            }
            row.push(value);
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Parse {
            path: display,
            line: 1,
            field: 1,
            message: "no data rows".into(),
        });
    }
    Ok(ImageData {
        image: LabeledImage::from_rows(&rows)?,
        labels: None,
    })
}

#[derive(Deserialize)]
struct ImageJsonIn {
    points: Vec<Vec<f64>>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

#[derive(Serialize)]
struct ImageJsonOut<'a> {
    points: Vec<Vec<Sig17>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<&'a Vec<String>>,
}

pub fn read_json_image(path: &Path) -> Result<ImageData> {
    let text = fs::read_to_string(path)?;
    let display = path.display().to_string();
    let parsed: ImageJsonIn = serde_json::from_str(&text)?;
    if parsed.points.is_empty() {
        return Err(Error::Parse {
            path: display,
            line: 1,
            field: 1,
            message: "'points' is empty".into(),
        });
    }
    let k = parsed.points[0].len();
    for (i, row) in parsed.points.iter().enumerate() {
        if row.len() != k {
            return Err(Error::Parse {
                path: display,
                line: i + 1,
                field: row.len().min(k) + 1,
                message: format!("point {i} has {} coordinates, expected {k}", row.len()),
            });
        }
        if let Some(j) = row.iter().position(|v| !v.is_finite()) {
            return Err(Error::Parse {
                path: display,
                line: i + 1,
                field: j + 1,
                message: format!("point {i} coordinate {j} is not finite"),
            });
        }
    }
    if let Some(labels) = &parsed.labels {
        if labels.len() != parsed.points.len() {
            return Err(Error::Parse {
                path: display,
                line: 1,
                field: 1,
                message: format!(
                    "{} labels for {} points",
                    labels.len(),
                    parsed.points.len()
                ),
            });
        }
    }
    Ok(ImageData {
        image: LabeledImage::from_rows(&parsed.points)?,
        labels: parsed.labels,
    })
}

/// One point per line, `k` comma-separated fields, 17 significant digits.
/// Labels are not representable in CSV and are dropped.
pub fn write_csv_image(path: &Path, data: &ImageData) -> Result<()> {
    let mut out = String::new();
    for row in data.image.rows() {
        let fields: Vec<String> = row.iter().map(|v| format!("{v:.16e}")).collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    fs::write(path, out)?;
    Ok(())
}

pub fn write_json_image(path: &Path, data: &ImageData) -> Result<()> {
    let doc = ImageJsonOut {
        points: data
            .image
            .rows()
            .into_iter()
            .map(|row| row.into_iter().map(Sig17).collect())
            .collect(),
        labels: data.labels.as_ref(),
    };
    let mut text = serde_json::to_string(&doc)?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

#[derive(Deserialize)]
struct ManifestJson {
    images: Vec<String>,
}

/// Reads a `{"images": [...]}` manifest. Relative entries resolve against the
/// manifest's own directory, so manifests can move with their data.
pub fn read_manifest(path: &Path) -> Result<Vec<PathBuf>> {
    let text = fs::read_to_string(path)?;
    let parsed: ManifestJson = serde_json::from_str(&text)?;
    if parsed.images.is_empty() {
        return Err(Error::Parse {
            path: path.display().to_string(),
            line: 1,
            field: 1,
            message: "'images' is empty".into(),
        });
    }
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    Ok(parsed
        .images
        .iter()
        .map(|entry| {
            let p = Path::new(entry);
            if p.is_absolute() {
                p.to_path_buf()
            } else {
                base.join(p)
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tmp() -> tempfile::TempDir {
        tempfile::tempdir().unwrap()
    }

    #[test]
    fn csv_json_round_trip_is_bit_exact() {
        let dir = tmp();
        let csv_path = dir.path().join("points.csv");
        let json_path = dir.path().join("points.json");
        let back_path = dir.path().join("back.csv");
        fs::write(
            &csv_path,
            "0.1,-3.75\n1e-17,6.02214076e23\n0.30000000000000004,-0.0\n",
        )
        .unwrap();

        let a = read_csv_image(&csv_path, false).unwrap();
        write_json_image(&json_path, &a).unwrap();
        let b = read_json_image(&json_path).unwrap();
        assert_eq!(a.image.matrix(), b.image.matrix(), "json round trip");
        for (x, y) in a
            .image
            .matrix()
            .iter()
            .zip(b.image.matrix().iter())
        {
            assert_eq!(x.to_bits(), y.to_bits());
        }

        write_csv_image(&back_path, &b).unwrap();
        let c = read_csv_image(&back_path, false).unwrap();
        for (x, y) in a.image.matrix().iter().zip(c.image.matrix().iter()) {
            assert_eq!(x.to_bits(), y.to_bits());
        }
    }

    #[test]
    fn csv_errors_carry_positions() {
        let dir = tmp();
        let path = dir.path().join("bad.csv");
        fs::write(&path, "1.0,2.0\n3.0,oops\n").unwrap();
        match read_csv_image(&path, false) {
            Err(Error::Parse { line, field, .. }) => {
                assert_eq!((line, field), (2, 2));
            }
            other => panic!("expected parse error, got {other:?}"),
        }

        fs::write(&path, "1.0,2.0\n3.0\n").unwrap();
        match read_csv_image(&path, false) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected field-count error, got {other:?}"),
        }

        fs::write(&path, "1.0,inf\n").unwrap();
        assert!(matches!(
            read_csv_image(&path, false),
            Err(Error::Parse { line: 1, field: 2, .. })
        ));
    }

    #[test]
    fn header_rows_are_skipped_on_request() {
        let dir = tmp();
        let path = dir.path().join("with_header.csv");
        fs::write(&path, "x,y\n1.0,2.0\n").unwrap();
        assert!(read_csv_image(&path, false).is_err());
        let data = read_csv_image(&path, true).unwrap();
        assert_eq!(data.image.n(), 1);
    }

    #[test]
    fn json_labels_are_carried_and_validated() {
        let dir = tmp();
        let path = dir.path().join("labeled.json");
        fs::write(
            &path,
            r#"{"points": [[0.0, 0.0], [1.0, 0.0]], "labels": ["anchor", "tip"]}"#,
        )
        .unwrap();
        let data = read_json_image(&path).unwrap();
        assert_eq!(data.labels.as_deref().unwrap(), ["anchor", "tip"]);

        fs::write(&path, r#"{"points": [[0.0, 0.0]], "labels": ["a", "b"]}"#).unwrap();
        assert!(read_json_image(&path).is_err());

        fs::write(&path, r#"{"points": [[0.0], [1.0, 2.0]]}"#).unwrap();
        assert!(matches!(
            read_json_image(&path),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn manifest_paths_resolve_relative_to_the_manifest() {
        let dir = tmp();
        let sub = dir.path().join("data");
        fs::create_dir(&sub).unwrap();
        let manifest = sub.join("set.json");
        fs::write(&manifest, r#"{"images": ["a.csv", "deeper/b.json"]}"#).unwrap();
        let paths = read_manifest(&manifest).unwrap();
        assert_eq!(paths[0], sub.join("a.csv"));
        assert_eq!(paths[1], sub.join("deeper/b.json"));

        fs::write(&manifest, r#"{"images": []}"#).unwrap();
        assert!(read_manifest(&manifest).is_err());
    }
}
