//! Matrix and grid file formats: JSON matrices, grids as CSV, JSON or gnuplot columns.
//!
//! Floats are written in their shortest round-trip form, so every emitter is inverted exactly by
//! its parser.

use std::fmt::Write as _;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::WignerGrid;
use crate::linalg::ComplexMatrix;
use crate::two_qubit::{Grid, PairWignerGrid};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    dim: usize,
    re: Vec<Vec<f64>>,
    im: Vec<Vec<f64>>,
}

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { location: location.into(), message: message.into() }
}

/// Parses `{"dim": N, "re": [[..]], "im": [[..]]}`.
pub fn parse_matrix(text: &str) -> Result<ComplexMatrix> {
    let file: MatrixFile = serde_json::from_str(text)
        .map_err(|e| parse_err(format!("line {}, column {}", e.line(), e.column()), e.to_string()))?;
    let n = file.dim;
    for (name, part) in [("re", &file.re), ("im", &file.im)] {
        if part.len() != n {
            return Err(parse_err(name, format!("expected {n} rows for dim {n}, got {}", part.len())));
        }
        for (i, row) in part.iter().enumerate() {
            if row.len() != n {
                return Err(parse_err(format!("{name}[{i}]"), format!("expected {n} entries, got {}", row.len())));
            }
        }
    }
    let data = (0..n * n).map(|k| Complex64::new(file.re[k / n][k % n], file.im[k / n][k % n])).collect();
    ComplexMatrix::new(n, data)
}

/// Inverse of [`parse_matrix`].
pub fn serialize_matrix(m: &ComplexMatrix) -> String {
    let n = m.dim();
    let part = |f: fn(&Complex64) -> f64| (0..n).map(|i| (0..n).map(|j| f(&m[(i, j)])).collect()).collect();
    let file = MatrixFile { dim: n, re: part(|z| z.re), im: part(|z| z.im) };
    serde_json::to_string(&file).expect("finite matrices serialize")
}

/// Output format for grids.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridFormat {
    Csv,
    Json,
    Gnuplot,
}

impl FromStr for GridFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            "gnuplot" => Ok(Self::Gnuplot),
            _ => Err(Error::Format(s.to_string())),
        }
    }
}

impl From<WignerGrid> for Grid {
    fn from(w: WignerGrid) -> Self {
        Grid::Wigner(w)
    }
}

impl From<PairWignerGrid> for Grid {
    fn from(w: PairWignerGrid) -> Self {
        Grid::Pair(w)
    }
}

const SINGLE_COLUMNS: [&str; 3] = ["mu", "nu", "w"];
const PAIR_COLUMNS: [&str; 5] = ["mu1", "nu1", "mu2", "nu2", "w"];

fn rows(grid: &Grid) -> (&'static [&'static str], Vec<(Vec<usize>, f64)>) {
    match grid {
        Grid::Wigner(w) => {
            let n = w.dim();
            (&SINGLE_COLUMNS, w.values().iter().enumerate().map(|(k, &v)| (vec![k / n, k % n], v)).collect())
        }
        Grid::Pair(p) => (&PAIR_COLUMNS, p.points().map(|(idx, v)| (idx.to_vec(), v)).collect()),
    }
}

fn float(x: f64) -> String {
    format!("{x:?}")
}

/// Lexicographically ordered grid text in the requested format.
pub fn emit_grid(grid: &Grid, format: GridFormat) -> String {
    let (columns, rows) = rows(grid);
    let mut out = String::new();
    match format {
        GridFormat::Csv => {
            out.push_str(&columns.join(","));
            out.push('\n');
            for (idx, w) in &rows {
                for i in idx {
                    write!(out, "{i},").unwrap();
                }
                writeln!(out, "{}", float(*w)).unwrap();
            }
        }
        GridFormat::Gnuplot => {
            writeln!(out, "# {}", columns.join(" ")).unwrap();
            for (k, (idx, w)) in rows.iter().enumerate() {
                if k > 0 && rows[k - 1].0[0] != idx[0] {
                    out.push('\n');
                }
                for i in idx {
                    write!(out, "{i} ").unwrap();
                }
                writeln!(out, "{}", float(*w)).unwrap();
            }
        }
        GridFormat::Json => {
            let rows: Vec<serde_json::Value> = rows
                .iter()
                .map(|(idx, w)| {
                    let mut r: Vec<serde_json::Value> = idx.iter().map(|&i| i.into()).collect();
                    r.push((*w).into());
                    serde_json::Value::Array(r)
                })
                .collect();
            out = serde_json::json!({ "columns": columns, "rows": rows }).to_string();
            out.push('\n');
        }
    }
    out
}

fn build_grid(columns: &[String], rows: Vec<(usize, Vec<f64>)>) -> Result<Grid> {
    let pair = if columns == PAIR_COLUMNS {
        true
    } else if columns == SINGLE_COLUMNS {
        false
    } else {
        return Err(parse_err("header", format!("unexpected columns {columns:?}")));
    };
    let width = columns.len();
    let count = rows.len();
    let n = if pair {
        2
    } else {
        let n = (count as f64).sqrt().round() as usize;
        if n < 2 || n * n != count {
            return Err(parse_err("rows", format!("expected N² rows with N ≥ 2, got {count}")));
        }
        n
    };
    if pair && count != 16 {
        return Err(parse_err("rows", format!("expected 16 rows, got {count}")));
    }
    let mut values = Vec::with_capacity(count);
    for (k, (line, row)) in rows.into_iter().enumerate() {
        if row.len() != width {
            return Err(parse_err(format!("line {line}"), format!("expected {width} fields, got {}", row.len())));
        }
        let expected: Vec<usize> =
            if pair { vec![k >> 3 & 1, k >> 2 & 1, k >> 1 & 1, k & 1] } else { vec![k / n, k % n] };
        let got = &row[..width - 1];
        if got.iter().zip(&expected).any(|(&g, &e)| g != e as f64) {
            return Err(parse_err(
                format!("line {line}"),
                format!("expected indices {expected:?} in lexicographic order"),
            ));
        }
        values.push(row[width - 1]);
    }
    Ok(if pair { Grid::Pair(PairWignerGrid::new(values)?) } else { Grid::Wigner(WignerGrid::new(n, values)?) })
}

fn parse_fields<'a>(line: usize, fields: impl Iterator<Item = &'a str>) -> Result<Vec<f64>> {
    fields
        .map(|f| f.trim().parse::<f64>().map_err(|e| parse_err(format!("line {line}"), format!("{f:?}: {e}"))))
        .collect()
}

/// Inverse of [`emit_grid`].
pub fn parse_grid(text: &str, format: GridFormat) -> Result<Grid> {
    match format {
        GridFormat::Json => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct GridFile {
                columns: Vec<String>,
                rows: Vec<Vec<f64>>,
            }
            let file: GridFile = serde_json::from_str(text)
                .map_err(|e| parse_err(format!("line {}, column {}", e.line(), e.column()), e.to_string()))?;
            build_grid(&file.columns, file.rows.into_iter().enumerate().map(|(k, r)| (k + 1, r)).collect())
        }
        GridFormat::Csv => {
            let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, l)).filter(|(_, l)| !l.trim().is_empty());
            let (_, header) = lines.next().ok_or_else(|| parse_err("line 1", "empty input"))?;
            let columns: Vec<String> = header.split(',').map(|s| s.trim().to_string()).collect();
            let rows = lines.map(|(k, l)| Ok((k, parse_fields(k, l.split(','))?))).collect::<Result<Vec<_>>>()?;
            build_grid(&columns, rows)
        }
        GridFormat::Gnuplot => {
            let mut columns = None;
            let mut rows = Vec::new();
            for (k, l) in text.lines().enumerate().map(|(k, l)| (k + 1, l.trim())) {
                if let Some(h) = l.strip_prefix('#') {
                    columns.get_or_insert_with(|| h.split_whitespace().map(str::to_string).collect::<Vec<_>>());
                } else if !l.is_empty() {
                    rows.push((k, parse_fields(k, l.split_whitespace())?));
                }
            }
            let columns = columns.ok_or_else(|| parse_err("header", "missing '# mu nu w' header"))?;
            build_grid(&columns, rows)
        }
    }
}
