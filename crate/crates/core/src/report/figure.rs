//! Deterministic, self-contained SVG charts.
//!
//! Four chart kinds cover every figure the report emits: horizontal bars
//! with value labels, line charts with point markers and dashed gridlines,
//! scatter plots with a dashed least-squares line and its `r`, and annotated
//! heatmaps. Colors are grayscale plus one accent.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::network::CoocNetwork;
use crate::stats::{linear_fit, AnnualSeries, CorrelationMatrix, LinearFit};

const ACCENT: (u8, u8, u8) = (31, 119, 180);
const SERIES_COLORS: [&str; 4] = ["#1f77b4", "#222222", "#777777", "#aaaaaa"];
const FONT: &str = "sans-serif";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureKind {
    Hbar,
    Line,
    ScatterFit,
    Heatmap,
}

impl FigureKind {
    pub fn name(self) -> &'static str {
        match self {
            FigureKind::Hbar => "hbar",
            FigureKind::Line => "line",
            FigureKind::ScatterFit => "scatter_fit",
            FigureKind::Heatmap => "heatmap",
        }
    }
}

impl FromStr for FigureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hbar" => Ok(FigureKind::Hbar),
            "line" => Ok(FigureKind::Line),
            "scatter_fit" | "scatter" => Ok(FigureKind::ScatterFit),
            "heatmap" => Ok(FigureKind::Heatmap),
            _ => Err(Error::Figure(format!("unknown figure kind {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FigureSpec {
    pub kind: FigureKind,
    pub title: String,
    pub width_px: u32,
    pub height_px: u32,
    /// Print values on bars and heatmap cells.
    pub annotate: bool,
}

impl FigureSpec {
    pub fn new(kind: FigureKind, title: impl Into<String>) -> Self {
        FigureSpec {
            kind,
            title: title.into(),
            width_px: 960,
            height_px: 600,
            annotate: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Bar {
    pub label: String,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub name: String,
    pub points: Vec<(f64, f64)>,
}

/// The data behind one figure. Each variant pairs with one [`FigureKind`].
#[derive(Debug, Clone, PartialEq)]
pub enum FigureData {
    Bars {
        bars: Vec<Bar>,
        decimals: usize,
    },
    Lines {
        series: Vec<Series>,
        x_label: String,
        y_label: String,
    },
    Scatter {
        x: Vec<f64>,
        y: Vec<f64>,
        fit: LinearFit,
        x_label: String,
        y_label: String,
    },
    Heatmap {
        rows: Vec<String>,
        cols: Vec<String>,
        cells: Vec<Vec<Option<f64>>>,
        decimals: usize,
    },
}

impl FigureData {
    pub fn bars<S: Into<String>>(items: impl IntoIterator<Item = (S, f64)>, decimals: usize) -> Self {
        FigureData::Bars {
            bars: items
                .into_iter()
                .map(|(label, value)| Bar {
                    label: label.into(),
                    value,
                })
                .collect(),
            decimals,
        }
    }

    pub fn annual(series: &[AnnualSeries]) -> Self {
        FigureData::Lines {
            series: series
                .iter()
                .map(|s| Series {
                    name: s.feature.name().to_string(),
                    points: s.points.iter().map(|p| (f64::from(p.year), p.mean)).collect(),
                })
                .collect(),
            x_label: "year".into(),
            y_label: "mean".into(),
        }
    }

    /// Scatter of paired values with their least-squares fit.
    pub fn scatter(x: Vec<f64>, y: Vec<f64>, x_label: &str, y_label: &str) -> Result<Self> {
        let fit = linear_fit(&x, &y)?;
        Ok(FigureData::Scatter {
            x,
            y,
            fit,
            x_label: x_label.into(),
            y_label: y_label.into(),
        })
    }

    pub fn cooc(net: &CoocNetwork) -> Self {
        FigureData::Heatmap {
            rows: net.words.clone(),
            cols: net.words.clone(),
            cells: net
                .adjacency
                .iter()
                .map(|row| row.iter().map(|&c| Some(c as f64)).collect())
                .collect(),
            decimals: 0,
        }
    }

    pub fn correlation(m: &CorrelationMatrix) -> Self {
        let names: Vec<String> = m.features.iter().map(|f| f.name().to_string()).collect();
        FigureData::Heatmap {
            rows: names.clone(),
            cols: names,
            cells: m.r.clone(),
            decimals: 2,
        }
    }

    fn kind(&self) -> FigureKind {
        match self {
            FigureData::Bars { .. } => FigureKind::Hbar,
            FigureData::Lines { .. } => FigureKind::Line,
            FigureData::Scatter { .. } => FigureKind::ScatterFit,
            FigureData::Heatmap { .. } => FigureKind::Heatmap,
        }
    }

    fn validate(&self) -> Result<()> {
        let empty = || Err(Error::Figure("no data to plot".into()));
        match self {
            FigureData::Bars { bars, .. } => {
                if bars.is_empty() {
                    return empty();
                }
                if bars.iter().any(|b| !b.value.is_finite()) {
                    return Err(Error::Figure("non-finite bar value".into()));
                }
            }
            FigureData::Lines { series, .. } => {
                if series.iter().all(|s| s.points.is_empty()) {
                    return empty();
                }
                if series
                    .iter()
                    .flat_map(|s| &s.points)
                    .any(|(x, y)| !x.is_finite() || !y.is_finite())
                {
                    return Err(Error::Figure("non-finite point".into()));
                }
            }
            FigureData::Scatter { x, y, .. } => {
                if x.is_empty() {
                    return empty();
                }
                if x.len() != y.len() {
                    return Err(Error::Figure(format!(
                        "scatter has {} x values and {} y values",
                        x.len(),
                        y.len()
                    )));
                }
            }
            FigureData::Heatmap { rows, cols, cells, .. } => {
                if rows.is_empty() || cols.is_empty() {
                    return empty();
                }
                if cells.len() != rows.len() || cells.iter().any(|r| r.len() != cols.len()) {
                    return Err(Error::Figure(format!(
                        "heatmap cells are not {}x{}",
                        rows.len(),
                        cols.len()
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Renders a standalone SVG document.
pub fn render_figure(spec: &FigureSpec, data: &FigureData) -> Result<String> {
    if spec.width_px < 100 || spec.height_px < 100 {
        return Err(Error::Figure(format!(
            "figure size {}x{} below 100px",
            spec.width_px, spec.height_px
        )));
    }
    if data.kind() != spec.kind {
        return Err(Error::Figure(format!(
            "{} figure cannot plot {} data",
            spec.kind.name(),
            data.kind().name()
        )));
    }
    data.validate()?;
    let mut svg = Svg::new(spec);
    match data {
        FigureData::Bars { bars, decimals } => hbar(&mut svg, spec, bars, *decimals),
        FigureData::Lines { series, x_label, y_label } => line(&mut svg, series, x_label, y_label),
        FigureData::Scatter { x, y, fit, x_label, y_label } => {
            scatter(&mut svg, x, y, fit, x_label, y_label)
        }
        FigureData::Heatmap { rows, cols, cells, decimals } => {
            heatmap(&mut svg, spec, rows, cols, cells, *decimals)
        }
    }
    Ok(svg.finish())
}

pub(crate) fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            _ => out.push(c),
        }
    }
    out
}

/// Coordinates are written with two decimals so output is stable.
fn c(v: f64) -> String {
    let s = format!("{v:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

pub(crate) fn fmt_value(v: f64, decimals: usize) -> String {
    let s = format!("{v:.decimals$}");
    if s.starts_with('-') && s[1..].chars().all(|ch| ch == '0' || ch == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

struct Plot {
    left: f64,
    top: f64,
    width: f64,
    height: f64,
}

struct Svg {
    out: String,
    width: f64,
    height: f64,
}

impl Svg {
    fn new(spec: &FigureSpec) -> Self {
        let mut out = String::new();
        let (w, h) = (spec.width_px, spec.height_px);
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="{FONT}">"#
        );
        let _ = writeln!(out, r##"<rect x="0" y="0" width="{w}" height="{h}" fill="#ffffff"/>"##);
        let _ = writeln!(
            out,
            r#"<text class="title" x="{}" y="28" font-size="18" text-anchor="middle">{}</text>"#,
            c(f64::from(w) / 2.0),
            escape(&spec.title)
        );
        Svg {
            out,
            width: f64::from(w),
            height: f64::from(h),
        }
    }

    fn text(&mut self, class: &str, x: f64, y: f64, anchor: &str, size: u32, body: &str) {
        let _ = writeln!(
            self.out,
            r#"<text class="{class}" x="{}" y="{}" font-size="{size}" text-anchor="{anchor}">{}</text>"#,
            c(x),
            c(y),
            escape(body)
        );
    }

    fn line(&mut self, class: &str, (x1, y1): (f64, f64), (x2, y2): (f64, f64), stroke: &str, dash: Option<&str>) {
        let dash = dash
            .map(|d| format!(r#" stroke-dasharray="{d}""#))
            .unwrap_or_default();
        let _ = writeln!(
            self.out,
            r#"<line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{stroke}" stroke-width="1"{dash}/>"#,
            c(x1),
            c(y1),
            c(x2),
            c(y2)
        );
    }

    fn finish(mut self) -> String {
        self.out.push_str("</svg>\n");
        self.out
    }
}

/// Tick positions at a 1/2/5 × 10^k step covering `[lo, hi]`.
fn nice_ticks(lo: f64, hi: f64, target: usize) -> (f64, f64, Vec<f64>) {
    let (lo, hi) = if hi > lo { (lo, hi) } else { (lo - 1.0, hi + 1.0) };
    let raw = (hi - lo) / target.max(1) as f64;
    let mag = 10f64.powf(raw.log10().floor());
    let step = [1.0, 2.0, 5.0, 10.0]
        .iter()
        .map(|m| m * mag)
        .find(|s| *s >= raw)
        .unwrap_or(10.0 * mag);
    let start = (lo / step).floor() * step;
    let end = (hi / step).ceil() * step;
    let count = ((end - start) / step).round() as usize;
    let ticks = (0..=count).map(|i| start + i as f64 * step).collect();
    (start, end, ticks)
}

fn tick_label(v: f64, ticks: &[f64]) -> String {
    let step = if ticks.len() > 1 { ticks[1] - ticks[0] } else { 1.0 };
    let decimals = if step >= 1.0 { 0 } else { (-step.log10().floor()) as usize };
    fmt_value(v, decimals)
}

fn hbar(svg: &mut Svg, spec: &FigureSpec, bars: &[Bar], decimals: usize) {
    let longest = bars.iter().map(|b| b.label.chars().count()).max().unwrap_or(0) as f64;
    let left = (longest * 7.5 + 20.0).clamp(60.0, svg.width * 0.4);
    let plot = Plot {
        left,
        top: 50.0,
        width: svg.width - left - 70.0,
        height: svg.height - 90.0,
    };
    let lo = bars.iter().map(|b| b.value).fold(0.0, f64::min);
    let hi = bars.iter().map(|b| b.value).fold(0.0, f64::max);
    let (lo, hi, ticks) = nice_ticks(lo, hi, 5);
    let sx = |v: f64| plot.left + (v - lo) / (hi - lo) * plot.width;
    let bottom = plot.top + plot.height;

    for t in &ticks {
        svg.line("grid", (sx(*t), plot.top), (sx(*t), bottom), "#cccccc", Some("4 3"));
        svg.text("tick", sx(*t), bottom + 18.0, "middle", 11, &tick_label(*t, &ticks));
    }

    let band = plot.height / bars.len() as f64;
    let bar_h = band * 0.7;
    for (i, bar) in bars.iter().enumerate() {
        let y = plot.top + i as f64 * band + (band - bar_h) / 2.0;
        let (x0, x1) = (sx(0.0).min(sx(bar.value)), sx(0.0).max(sx(bar.value)));
        let _ = writeln!(
            svg.out,
            r#"<rect class="bar" x="{}" y="{}" width="{}" height="{}" fill="rgb{ACCENT:?}"/>"#,
            c(x0),
            c(y),
            c(x1 - x0),
            c(bar_h)
        );
        let mid = y + bar_h / 2.0 + 4.0;
        svg.text("bar-label", plot.left - 6.0, mid, "end", 12, &bar.label);
        if spec.annotate {
            let (x, anchor) = if bar.value < 0.0 { (x0 - 4.0, "end") } else { (x1 + 4.0, "start") };
            svg.text("bar-value", x, mid, anchor, 11, &fmt_value(bar.value, decimals));
        }
    }
    svg.line("axis", (sx(0.0), plot.top), (sx(0.0), bottom), "#000000", None);
}

fn axes(svg: &mut Svg, plot: &Plot, x_label: &str, y_label: &str) {
    let bottom = plot.top + plot.height;
    svg.line("axis", (plot.left, bottom), (plot.left + plot.width, bottom), "#000000", None);
    svg.line("axis", (plot.left, plot.top), (plot.left, bottom), "#000000", None);
    svg.text("axis-label", plot.left + plot.width / 2.0, bottom + 40.0, "middle", 13, x_label);
    let (x, y) = (plot.left - 50.0, plot.top + plot.height / 2.0);
    let _ = writeln!(
        svg.out,
        r#"<text class="axis-label" x="{}" y="{}" font-size="13" text-anchor="middle" transform="rotate(-90 {} {})">{}</text>"#,
        c(x),
        c(y),
        c(x),
        c(y),
        escape(y_label)
    );
}

fn grid(svg: &mut Svg, plot: &Plot, xt: &[f64], yt: &[f64], sx: &dyn Fn(f64) -> f64, sy: &dyn Fn(f64) -> f64) {
    let bottom = plot.top + plot.height;
    for t in xt {
        svg.line("grid", (sx(*t), plot.top), (sx(*t), bottom), "#cccccc", Some("4 3"));
        svg.text("tick", sx(*t), bottom + 18.0, "middle", 11, &tick_label(*t, xt));
    }
    for t in yt {
        svg.line("grid", (plot.left, sy(*t)), (plot.left + plot.width, sy(*t)), "#cccccc", Some("4 3"));
        svg.text("tick", plot.left - 6.0, sy(*t) + 4.0, "end", 11, &tick_label(*t, yt));
    }
}

fn standard_plot(svg: &Svg) -> Plot {
    Plot {
        left: 80.0,
        top: 50.0,
        width: svg.width - 80.0 - 150.0,
        height: svg.height - 50.0 - 70.0,
    }
}

fn line(svg: &mut Svg, series: &[Series], x_label: &str, y_label: &str) {
    let plot = standard_plot(svg);
    let pts = || series.iter().flat_map(|s| s.points.iter());
    let (xmin, xmax) = pts().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), p| (a.min(p.0), b.max(p.0)));
    let (ymin, ymax) = pts().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), p| (a.min(p.1), b.max(p.1)));
    let (x0, x1, xt) = nice_ticks(xmin, xmax, 10);
    let (y0, y1, yt) = nice_ticks(ymin, ymax, 6);
    let sx = |v: f64| plot.left + (v - x0) / (x1 - x0) * plot.width;
    let sy = |v: f64| plot.top + plot.height - (v - y0) / (y1 - y0) * plot.height;
    grid(svg, &plot, &xt, &yt, &sx, &sy);
    axes(svg, &plot, x_label, y_label);

    for (i, s) in series.iter().enumerate() {
        let color = SERIES_COLORS[i % SERIES_COLORS.len()];
        let path: Vec<String> = s.points.iter().map(|(x, y)| format!("{},{}", c(sx(*x)), c(sy(*y)))).collect();
        let _ = writeln!(
            svg.out,
            r#"<polyline class="series" points="{}" fill="none" stroke="{color}" stroke-width="2"/>"#,
            path.join(" ")
        );
        for (x, y) in &s.points {
            let _ = writeln!(
                svg.out,
                r#"<circle class="marker" cx="{}" cy="{}" r="4" fill="{color}"/>"#,
                c(sx(*x)),
                c(sy(*y))
            );
        }
        let ly = plot.top + 10.0 + i as f64 * 20.0;
        let lx = plot.left + plot.width + 15.0;
        svg.line("legend", (lx, ly), (lx + 20.0, ly), color, None);
        let _ = writeln!(
            svg.out,
            r#"<circle class="legend-marker" cx="{}" cy="{}" r="4" fill="{color}"/>"#,
            c(lx + 10.0),
            c(ly)
        );
        svg.text("legend-label", lx + 26.0, ly + 4.0, "start", 12, &s.name);
    }
}

fn scatter(svg: &mut Svg, x: &[f64], y: &[f64], fit: &LinearFit, x_label: &str, y_label: &str) {
    let plot = standard_plot(svg);
    let (xmin, xmax) = x.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| (a.min(*v), b.max(*v)));
    let (ymin, ymax) = y.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| (a.min(*v), b.max(*v)));
    let (x0, x1, xt) = nice_ticks(xmin, xmax, 8);
    let fit_lo = fit.predict(xmin).min(fit.predict(xmax));
    let fit_hi = fit.predict(xmin).max(fit.predict(xmax));
    let (y0, y1, yt) = nice_ticks(ymin.min(fit_lo), ymax.max(fit_hi), 6);
    let sx = |v: f64| plot.left + (v - x0) / (x1 - x0) * plot.width;
    let sy = |v: f64| plot.top + plot.height - (v - y0) / (y1 - y0) * plot.height;
    grid(svg, &plot, &xt, &yt, &sx, &sy);
    axes(svg, &plot, x_label, y_label);

    for (a, b) in x.iter().zip(y) {
        let _ = writeln!(
            svg.out,
            r##"<circle class="point" cx="{}" cy="{}" r="3.5" fill="#555555" fill-opacity="0.6"/>"##,
            c(sx(*a)),
            c(sy(*b))
        );
    }
    svg.line(
        "fit",
        (sx(xmin), sy(fit.predict(xmin))),
        (sx(xmax), sy(fit.predict(xmax))),
        SERIES_COLORS[0],
        Some("8 5"),
    );
    svg.text(
        "fit-label",
        plot.left + 10.0,
        plot.top + 18.0,
        "start",
        13,
        &format!("r = {}", fmt_value(fit.r, 2)),
    );
}

fn heatmap(
    svg: &mut Svg,
    spec: &FigureSpec,
    rows: &[String],
    cols: &[String],
    cells: &[Vec<Option<f64>>],
    decimals: usize,
) {
    let longest = rows.iter().chain(cols).map(|l| l.chars().count()).max().unwrap_or(0) as f64;
    let margin = (longest * 7.5 + 20.0).clamp(50.0, svg.width * 0.3);
    let avail_w = svg.width - margin - 30.0;
    let avail_h = svg.height - 50.0 - margin;
    let cell = (avail_w / cols.len() as f64).min(avail_h / rows.len() as f64).max(1.0);
    let left = margin;
    let top = 50.0;

    let values = cells.iter().flatten().flatten().copied();
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| (a.min(v), b.max(v)));
    let shade = |v: f64| -> f64 {
        if hi > lo {
            (v - lo) / (hi - lo)
        } else {
            0.5
        }
    };

    for (i, row) in cells.iter().enumerate() {
        for (j, value) in row.iter().enumerate() {
            let (x, y) = (left + j as f64 * cell, top + i as f64 * cell);
            let (fill, text_color) = match value {
                Some(v) => {
                    let t = shade(*v);
                    let mix = |a: u8| (255.0 + (f64::from(a) - 255.0) * t).round() as u8;
                    let fill = format!("rgb({},{},{})", mix(ACCENT.0), mix(ACCENT.1), mix(ACCENT.2));
                    (fill, if t > 0.6 { "#ffffff" } else { "#000000" })
                }
                None => ("#eeeeee".to_string(), "#555555"),
            };
            let _ = writeln!(
                svg.out,
                r##"<rect class="cell" x="{}" y="{}" width="{}" height="{}" fill="{fill}" stroke="#ffffff"/>"##,
                c(x),
                c(y),
                c(cell),
                c(cell)
            );
            if spec.annotate {
                let label = value.map_or_else(|| "n/a".to_string(), |v| fmt_value(v, decimals));
                let size = (cell / 4.0).clamp(6.0, 14.0).round() as u32;
                let _ = writeln!(
                    svg.out,
                    r#"<text class="cell-text" x="{}" y="{}" font-size="{size}" text-anchor="middle" fill="{text_color}">{}</text>"#,
                    c(x + cell / 2.0),
                    c(y + cell / 2.0 + f64::from(size) / 3.0),
                    escape(&label)
                );
            }
        }
    }
    for (i, label) in rows.iter().enumerate() {
        svg.text("row-label", left - 6.0, top + (i as f64 + 0.5) * cell + 4.0, "end", 12, label);
    }
    let label_y = top + rows.len() as f64 * cell + 14.0;
    for (j, label) in cols.iter().enumerate() {
        let x = left + (j as f64 + 0.5) * cell;
        let _ = writeln!(
            svg.out,
            r#"<text class="col-label" x="{}" y="{}" font-size="12" text-anchor="end" transform="rotate(-40 {} {})">{}</text>"#,
            c(x),
            c(label_y),
            c(x),
            c(label_y),
            escape(label)
        );
    }
}
