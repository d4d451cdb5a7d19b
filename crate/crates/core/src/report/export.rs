//! CSV and JSON renderings of analysis results, plus the reader that turns a
//! figure's sidecar CSV back into [`FigureData`].
//!
//! Means, spreads and correlations are written with two decimals, counts as
//! integers. Missing correlation entries are empty cells.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lexicon::{RankedWord, TokenCountTable};
use crate::mood::{GenreCount, GenreProfile};
use crate::network::{CentralityRow, CoocNetwork, Edge};
use crate::report::figure::{FigureData, FigureKind, Series};
use crate::stats::{linear_fit, AnnualSeries, CorrelationMatrix, FeatureSummary};

fn write_csv<I>(header: &[&str], rows: I) -> String
where
    I: IntoIterator<Item = Vec<String>>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
}

fn f2(v: f64) -> String {
    super::figure::fmt_value(v, 2)
}

pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn summaries_csv(summaries: &[FeatureSummary]) -> String {
    write_csv(
        &["feature", "mean", "std", "min", "max", "n_valid", "n_missing"],
        summaries.iter().map(|s| {
            vec![
                s.feature.name().to_string(),
                f2(s.mean),
                f2(s.std),
                f2(s.min),
                f2(s.max),
                s.n_valid.to_string(),
                s.n_missing.to_string(),
            ]
        }),
    )
}

pub fn annual_csv(series: &[AnnualSeries]) -> String {
    write_csv(
        &["feature", "year", "mean", "n"],
        series.iter().flat_map(|s| {
            s.points.iter().map(move |p| {
                vec![
                    s.feature.name().to_string(),
                    p.year.to_string(),
                    f2(p.mean),
                    p.n.to_string(),
                ]
            })
        }),
    )
}

/// Long-form `series,x,y` table, the sidecar format of line charts.
pub fn series_csv(series: &[AnnualSeries]) -> String {
    write_csv(
        &["series", "x", "y"],
        series.iter().flat_map(|s| {
            s.points.iter().map(move |p| {
                vec![s.feature.name().to_string(), p.year.to_string(), f2(p.mean)]
            })
        }),
    )
}

/// `x,y` pairs at full precision, the sidecar format of scatter plots.
pub fn pairs_csv(x: &[f64], y: &[f64]) -> String {
    write_csv(
        &["x", "y"],
        x.iter().zip(y).map(|(a, b)| vec![a.to_string(), b.to_string()]),
    )
}

pub fn correlation_csv(m: &CorrelationMatrix) -> String {
    let mut header = vec!["feature"];
    header.extend(m.features.iter().map(|f| f.name()));
    write_csv(
        &header,
        m.features.iter().zip(&m.r).map(|(f, row)| {
            let mut cells = vec![f.name().to_string()];
            cells.extend(row.iter().map(|r| r.map(f2).unwrap_or_default()));
            cells
        }),
    )
}

pub fn ranked_csv(words: &[RankedWord]) -> String {
    write_csv(
        &["word", "count", "relative_frequency"],
        words.iter().map(|w| {
            vec![
                w.word.clone(),
                w.count.to_string(),
                format!("{:.6}", w.relative_frequency),
            ]
        }),
    )
}

#[derive(Serialize)]
struct TokenStats {
    total_tokens: u64,
    vocab_size: usize,
    n_documents: usize,
}

pub fn token_stats_json(table: &TokenCountTable) -> String {
    to_json(&TokenStats {
        total_tokens: table.total_tokens,
        vocab_size: table.vocab_size,
        n_documents: table.n_documents,
    })
}

pub fn adjacency_csv(net: &CoocNetwork) -> String {
    let mut header = vec!["word"];
    header.extend(net.words.iter().map(String::as_str));
    write_csv(
        &header,
        net.words.iter().zip(&net.adjacency).map(|(w, row)| {
            let mut cells = vec![w.clone()];
            cells.extend(row.iter().map(u64::to_string));
            cells
        }),
    )
}

pub fn edges_csv(edges: &[Edge]) -> String {
    write_csv(
        &["word_a", "word_b", "count"],
        edges
            .iter()
            .map(|e| vec![e.word_a.clone(), e.word_b.clone(), e.count.to_string()]),
    )
}

/// Centralities alongside each word's corpus count.
pub fn centralities_csv(rows: &[CentralityRow], table: &TokenCountTable) -> String {
    write_csv(
        &["word", "count", "simple_degree", "weighted_degree"],
        rows.iter().map(|r| {
            vec![
                r.word.clone(),
                table.count(&r.word).to_string(),
                r.simple_degree.to_string(),
                r.weighted_degree.to_string(),
            ]
        }),
    )
}

pub fn genre_means_csv(profiles: &[GenreProfile]) -> String {
    write_csv(
        &["genre", "feature", "mean", "n"],
        profiles.iter().map(|p| {
            vec![
                p.genre.clone(),
                p.feature.name().to_string(),
                f2(p.mean),
                p.n.to_string(),
            ]
        }),
    )
}

pub fn genre_counts_csv(counts: &[GenreCount]) -> String {
    write_csv(
        &["genre", "count"],
        counts.iter().map(|g| vec![g.genre.clone(), g.count.to_string()]),
    )
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Figure(msg.into())
}

fn read_rows(text: &str) -> Result<(Vec<String>, Vec<Vec<String>>)> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut records = reader.records();
    let header = records
        .next()
        .ok_or_else(|| bad("data CSV has no header row"))??
        .iter()
        .map(|h| h.trim().to_string())
        .collect();
    let rows = records
        .map(|r| r.map(|r| r.iter().map(|c| c.trim().to_string()).collect()))
        .collect::<std::result::Result<_, _>>()?;
    Ok((header, rows))
}

fn number(cell: &str) -> Result<f64> {
    cell.parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| bad(format!("expected a number, found {cell:?}")))
}

fn decimals_for<'a>(values: impl IntoIterator<Item = &'a f64>) -> usize {
    if values.into_iter().all(|v| v.fract() == 0.0) {
        0
    } else {
        2
    }
}

fn column(header: &[String], name: &str, fallback: usize) -> usize {
    header.iter().position(|h| h == name).unwrap_or(fallback)
}

fn cell(row: &[String], i: usize) -> Result<&str> {
    row.get(i)
        .map(String::as_str)
        .ok_or_else(|| bad(format!("row {row:?} has no column {}", i + 1)))
}

/// Parses a sidecar CSV into the data a figure of `kind` plots.
///
/// * `hbar`: first column is the label; the value is the first later column
///   whose cells are all numeric.
/// * `line`: `series,x,y` rows, grouped by series in first-seen order.
/// * `scatter_fit`: `x,y` pairs; the fit is computed from them.
/// * `heatmap`: a matrix with a label column and a header row of column
///   labels; empty cells are absent values.
pub fn figure_data_from_csv(kind: FigureKind, text: &str) -> Result<FigureData> {
    let (header, rows) = read_rows(text)?;
    if rows.is_empty() {
        return Err(bad("data CSV has no rows"));
    }
    match kind {
        FigureKind::Hbar => {
            let value_col = (1..header.len())
                .find(|&i| rows.iter().all(|r| r.get(i).is_some_and(|c| number(c).is_ok())))
                .ok_or_else(|| bad("no numeric column for bar values"))?;
            let bars = rows
                .iter()
                .map(|r| Ok((cell(r, 0)?.to_string(), number(cell(r, value_col)?)?)))
                .collect::<Result<Vec<_>>>()?;
            let decimals = decimals_for(bars.iter().map(|(_, v)| v));
            Ok(FigureData::bars(bars, decimals))
        }
        FigureKind::Line => {
            let (si, xi, yi) = (
                column(&header, "series", 0),
                column(&header, "x", 1),
                column(&header, "y", 2),
            );
            let mut series: Vec<Series> = Vec::new();
            for r in &rows {
                let name = cell(r, si)?;
                let point = (number(cell(r, xi)?)?, number(cell(r, yi)?)?);
                match series.iter_mut().find(|s| s.name == name) {
                    Some(s) => s.points.push(point),
                    None => series.push(Series {
                        name: name.to_string(),
                        points: vec![point],
                    }),
                }
            }
            Ok(FigureData::Lines {
                series,
                x_label: header.get(xi).cloned().unwrap_or_default(),
                y_label: header.get(yi).cloned().unwrap_or_default(),
            })
        }
        FigureKind::ScatterFit => {
            let (xi, yi) = (column(&header, "x", 0), column(&header, "y", 1));
            let mut x = Vec::with_capacity(rows.len());
            let mut y = Vec::with_capacity(rows.len());
            for r in &rows {
                x.push(number(cell(r, xi)?)?);
                y.push(number(cell(r, yi)?)?);
            }
            let fit = linear_fit(&x, &y)?;
            Ok(FigureData::Scatter {
                x,
                y,
                fit,
                x_label: header.get(xi).cloned().unwrap_or_default(),
                y_label: header.get(yi).cloned().unwrap_or_default(),
            })
        }
        FigureKind::Heatmap => {
            let cols: Vec<String> = header.iter().skip(1).cloned().collect();
            let mut labels = Vec::with_capacity(rows.len());
            let mut cells = Vec::with_capacity(rows.len());
            for r in &rows {
                labels.push(cell(r, 0)?.to_string());
                let row = (1..=cols.len())
                    .map(|i| match r.get(i).map(String::as_str) {
                        None | Some("") => Ok(None),
                        Some(c) => number(c).map(Some),
                    })
                    .collect::<Result<Vec<_>>>()?;
                cells.push(row);
            }
            let decimals = decimals_for(cells.iter().flatten().flatten());
            Ok(FigureData::Heatmap {
                rows: labels,
                cols,
                cells,
                decimals,
            })
        }
    }
}
