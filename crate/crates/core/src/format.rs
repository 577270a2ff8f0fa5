//! Text format for co-partitions and the comparison report.
//!
//! A co-partition file holds two data lines: the row labels, then the column
//! labels, each whitespace-separated positive integers. Optional directives
//! before the data lines declare cluster counts larger than the largest
//! label:
//!
//! ```text
//! #rows-clusters=3
//! #cols-clusters=4
//! 1 2 2 2 1
//! 1 1 2 1 1 2
//! ```
//!
//! Blank lines are ignored.

use std::fmt::Write as _;

use crate::ari::ari;
use crate::cari::cari;
use crate::ce::{classification_error, CeMode, CeSolver};
use crate::error::{Error, ParseError, Result};
use crate::mi::extended_mi;
use crate::partition::{ensure_same_grid, CoPartition, Partition};

const ROWS_DIRECTIVE: &str = "rows-clusters";
const COLS_DIRECTIVE: &str = "cols-clusters";

pub fn parse_copartition(text: &str) -> Result<CoPartition, ParseError> {
    let mut declared: [Option<usize>; 2] = [None, None];
    let mut data: Vec<(usize, Vec<usize>)> = Vec::with_capacity(2);
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(directive) = line.strip_prefix('#') {
            if !data.is_empty() {
                return Err(ParseError::at_line(
                    line_no,
                    "directives must precede the data lines",
                ));
            }
            let (key, value) = directive.split_once('=').ok_or_else(|| {
                ParseError::at_line(line_no, format!("malformed directive {line:?}"))
            })?;
            let slot = match key.trim() {
                ROWS_DIRECTIVE => 0,
                COLS_DIRECTIVE => 1,
                other => {
                    return Err(ParseError::at_line(
                        line_no,
                        format!("unknown directive {other:?}"),
                    ))
                }
            };
            let count = value
                .trim()
                .parse::<usize>()
                .ok()
                .filter(|&k| k > 0)
                .ok_or_else(|| {
                    ParseError::at_line(
                        line_no,
                        format!(
                            "cluster count must be a positive integer, got {:?}",
                            value.trim()
                        ),
                    )
                })?;
            declared[slot] = Some(count);
            continue;
        }
        if data.len() == 2 {
            return Err(ParseError::at_line(
                line_no,
                "expected exactly two data lines (row labels, column labels)",
            ));
        }
        let labels = line
            .split_whitespace()
            .enumerate()
            .map(|(t, tok)| parse_label(tok).map_err(|m| ParseError::at_token(line_no, t + 1, m)))
            .collect::<Result<Vec<_>, _>>()?;
        data.push((line_no, labels));
    }

    if data.len() != 2 {
        return Err(ParseError::at_line(
            last_line.max(1),
            format!(
                "expected exactly two data lines (row labels, column labels), found {}",
                data.len()
            ),
        ));
    }
    let mut parts = data
        .into_iter()
        .zip(declared)
        .map(|((line_no, labels), declared)| build(line_no, labels, declared));
    let rows = parts.next().expect("two data lines")?;
    let cols = parts.next().expect("two data lines")?;
    Ok(CoPartition::new(rows, cols))
}

fn parse_label(tok: &str) -> std::result::Result<usize, String> {
    match tok.parse::<i128>() {
        Ok(v) if v >= 1 => usize::try_from(v).map_err(|_| format!("label {tok} is too large")),
        Ok(_) => Err(format!("label {tok} must be a positive integer")),
        Err(_) => Err(format!("{tok:?} is not an integer")),
    }
}

fn build(
    line_no: usize,
    labels: Vec<usize>,
    declared: Option<usize>,
) -> Result<Partition, ParseError> {
    let max = labels.iter().copied().max().unwrap_or(0);
    let k = declared.unwrap_or(max);
    if let Some(pos) = labels.iter().position(|&l| l > k) {
        return Err(ParseError::at_token(
            line_no,
            pos + 1,
            format!(
                "label {} exceeds the declared cluster count {k}",
                labels[pos]
            ),
        ));
    }
    Partition::new(labels, k).map_err(|e| ParseError::at_line(line_no, e.to_string()))
}

/// Serializes a co-partition; `parse_copartition` reads it back unchanged.
pub fn write_copartition(c: &CoPartition) -> String {
    let mut out = String::new();
    for (key, p) in [(ROWS_DIRECTIVE, c.rows()), (COLS_DIRECTIVE, c.cols())] {
        if p.labels().iter().copied().max() != Some(p.cluster_count()) {
            let _ = writeln!(out, "#{key}={}", p.cluster_count());
        }
    }
    for p in [c.rows(), c.cols()] {
        let line: Vec<String> = p.labels().iter().map(|l| l.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// All indices for one comparison of two co-partitions.
#[derive(Debug, Clone, PartialEq)]
pub struct IndexReport {
    pub cari: f64,
    /// `None` when the grid has a single row.
    pub ari_rows: Option<f64>,
    /// `None` when the grid has a single column.
    pub ari_cols: Option<f64>,
    pub ce: f64,
    pub one_minus_ce: f64,
    pub extended_mi: f64,
    pub dims: Dims,
    pub ce_solver: CeSolver,
}

/// `(I, J, H, L, H', L')`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dims {
    pub rows: usize,
    pub cols: usize,
    pub row_clusters: (usize, usize),
    pub col_clusters: (usize, usize),
}

impl IndexReport {
    pub fn compare(u: &CoPartition, v: &CoPartition, solver: &CeSolver) -> Result<Self> {
        ensure_same_grid(u, v)?;
        let (rows, cols) = u.grid();
        let optional = |r: Result<f64>| match r {
            Ok(x) => Ok(Some(x)),
            Err(Error::UndefinedIndex(_)) => Ok(None),
            Err(e) => Err(e),
        };
        let ce = classification_error(u, v, solver)?;
        Ok(Self {
            cari: cari(u, v)?,
            ari_rows: optional(ari(u.rows(), v.rows()))?,
            ari_cols: optional(ari(u.cols(), v.cols()))?,
            ce,
            one_minus_ce: 1.0 - ce,
            extended_mi: extended_mi(u, v)?,
            dims: Dims {
                rows,
                cols,
                row_clusters: (u.rows().cluster_count(), v.rows().cluster_count()),
                col_clusters: (u.cols().cluster_count(), v.cols().cluster_count()),
            },
            ce_solver: *solver,
        })
    }

    /// JSON object with fixed six-decimal numbers.
    pub fn to_json(&self) -> String {
        let num = |x: f64| fixed6(x);
        let opt = |x: Option<f64>| x.map_or_else(|| "null".to_string(), fixed6);
        let d = &self.dims;
        let mode = match self.ce_solver.mode {
            CeMode::Exhaustive => "exhaustive",
            CeMode::Assignment => "assignment",
        };
        let mut s = String::from("{\n");
        let _ = writeln!(s, "  \"cari\": {},", num(self.cari));
        let _ = writeln!(s, "  \"ari_rows\": {},", opt(self.ari_rows));
        let _ = writeln!(s, "  \"ari_cols\": {},", opt(self.ari_cols));
        let _ = writeln!(s, "  \"ce\": {},", num(self.ce));
        let _ = writeln!(s, "  \"one_minus_ce\": {},", num(self.one_minus_ce));
        let _ = writeln!(s, "  \"extended_mi\": {},", num(self.extended_mi));
        let _ = writeln!(
            s,
            "  \"dims\": {{\"rows\": {}, \"cols\": {}, \"row_clusters\": [{}, {}], \"col_clusters\": [{}, {}]}},",
            d.rows, d.cols, d.row_clusters.0, d.row_clusters.1, d.col_clusters.0, d.col_clusters.1
        );
        let _ = writeln!(s, "  \"ce_solver\": \"{mode}\"");
        s.push('}');
        s
    }
}

/// Six decimals, period separator, no negative zero.
pub fn fixed6(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}
