//! Descriptive statistics, annual means, Pearson correlation and
//! least-squares fits over audio features.
//!
//! All spreads use the sample (n − 1) standard deviation. Correlations drop
//! an index whenever either value is missing (pairwise-complete deletion)
//! and report a typed error instead of NaN when the coefficient is undefined.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::corpus::{Corpus, Feature};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FeatureSummary {
    pub feature: Feature,
    pub mean: f64,
    /// Sample standard deviation (n − 1 denominator); 0 for a single value.
    pub std: f64,
    pub min: f64,
    pub max: f64,
    pub n_valid: usize,
    pub n_missing: usize,
    /// Set when only one valid value exists, so `std` carries no information.
    pub degenerate: bool,
}

pub fn summarize(corpus: &Corpus, feature: Feature) -> Result<FeatureSummary> {
    corpus.require_non_empty()?;
    let values: Vec<f64> = corpus.column(feature).into_iter().flatten().collect();
    if values.is_empty() {
        return Err(Error::NoValidValues(feature.name().to_string()));
    }
    let n = values.len();
    let mean = mean(&values);
    let std = if n > 1 {
        (sum_sq_dev(&values, mean) / (n - 1) as f64).sqrt()
    } else {
        0.0
    };
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Ok(FeatureSummary {
        feature,
        mean: mean.clamp(min, max),
        std,
        min,
        max,
        n_valid: n,
        n_missing: corpus.len() - n,
        degenerate: n == 1,
    })
}

/// Summaries for all eight features, in canonical feature order.
pub fn summarize_all(corpus: &Corpus) -> Result<Vec<FeatureSummary>> {
    Feature::ALL.iter().map(|f| summarize(corpus, *f)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AnnualPoint {
    pub year: i32,
    pub mean: f64,
    pub n: usize,
}

/// Per-year means of one feature. Years without a valid value are omitted.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnnualSeries {
    pub feature: Feature,
    pub points: Vec<AnnualPoint>,
}

impl AnnualSeries {
    pub fn get(&self, year: i32) -> Option<&AnnualPoint> {
        self.points.iter().find(|p| p.year == year)
    }
}

pub fn annual_means(corpus: &Corpus, feature: Feature) -> Result<AnnualSeries> {
    corpus.require_non_empty()?;
    let mut by_year: BTreeMap<i32, (f64, usize)> = BTreeMap::new();
    for song in corpus {
        if let Some(v) = song.features.get(feature) {
            let acc = by_year.entry(song.year).or_default();
            acc.0 += v;
            acc.1 += 1;
        }
    }
    if by_year.is_empty() {
        return Err(Error::NoValidValues(feature.name().to_string()));
    }
    let points = by_year
        .into_iter()
        .map(|(year, (sum, n))| AnnualPoint {
            year,
            mean: sum / n as f64,
            n,
        })
        .collect();
    Ok(AnnualSeries { feature, points })
}

fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

fn sum_sq_dev(values: &[f64], mean: f64) -> f64 {
    values.iter().map(|v| (v - mean) * (v - mean)).sum()
}

fn is_constant(values: &[f64]) -> bool {
    values.windows(2).all(|w| w[0] == w[1])
}

/// Centered sums shared by [`pearson`] and [`linear_fit`].
struct Moments {
    n: usize,
    mean_x: f64,
    mean_y: f64,
    sxx: f64,
    syy: f64,
    sxy: f64,
}

impl Moments {
    fn of(x: &[f64], y: &[f64]) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::LengthMismatch {
                left: x.len(),
                right: y.len(),
            });
        }
        let n = x.len();
        if n < 2 {
            return Err(Error::InsufficientData { n });
        }
        if is_constant(x) || is_constant(y) {
            return Err(Error::UndefinedCorrelation);
        }
        let mean_x = mean(x);
        let mean_y = mean(y);
        let sxy = x
            .iter()
            .zip(y)
            .map(|(a, b)| (a - mean_x) * (b - mean_y))
            .sum();
        Ok(Moments {
            n,
            mean_x,
            mean_y,
            sxx: sum_sq_dev(x, mean_x),
            syy: sum_sq_dev(y, mean_y),
            sxy,
        })
    }

    fn r(&self) -> f64 {
        // (n-1)·σx·σy with sample deviations reduces to sqrt(Sxx·Syy).
        let r = self.sxy / (self.sxx * self.syy).sqrt();
        debug_assert!(r.abs() <= 1.0 + 1e-12, "correlation overshoot {r}");
        r.clamp(-1.0, 1.0)
    }

    fn std_x(&self) -> f64 {
        (self.sxx / (self.n - 1) as f64).sqrt()
    }

    fn std_y(&self) -> f64 {
        (self.syy / (self.n - 1) as f64).sqrt()
    }
}

/// Pearson correlation of two equal-length, fully observed series.
pub fn pearson(x: &[f64], y: &[f64]) -> Result<f64> {
    Moments::of(x, y).map(|m| m.r())
}

/// Keeps the index positions where both values are present.
pub fn complete_pairs(x: &[Option<f64>], y: &[Option<f64>]) -> Result<(Vec<f64>, Vec<f64>)> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(x.iter()
        .zip(y)
        .filter_map(|(a, b)| Some(((*a)?, (*b)?)))
        .unzip())
}

/// Pearson correlation over the pairwise-complete sample. Returns the
/// coefficient and the number of pairs it was computed from.
pub fn pearson_pairwise(x: &[Option<f64>], y: &[Option<f64>]) -> Result<(f64, usize)> {
    let (x, y) = complete_pairs(x, y)?;
    Ok((pearson(&x, &y)?, x.len()))
}

/// Symmetric matrix of pairwise Pearson coefficients over all features.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorrelationMatrix {
    pub features: Vec<Feature>,
    /// `None` where the coefficient is undefined.
    pub r: Vec<Vec<Option<f64>>>,
    /// Pairwise-complete sample size of each entry.
    pub n_pairs: Vec<Vec<usize>>,
}

impl CorrelationMatrix {
    pub fn get(&self, a: Feature, b: Feature) -> Option<f64> {
        let i = self.features.iter().position(|f| *f == a)?;
        let j = self.features.iter().position(|f| *f == b)?;
        self.r[i][j]
    }
}

pub fn correlation_matrix(corpus: &Corpus) -> Result<CorrelationMatrix> {
    corpus.require_non_empty()?;
    let features = Feature::ALL.to_vec();
    let columns: Vec<Vec<Option<f64>>> = features.iter().map(|f| corpus.column(*f)).collect();
    let k = features.len();
    let mut r = vec![vec![None; k]; k];
    let mut n_pairs = vec![vec![0; k]; k];
    for i in 0..k {
        for j in i..k {
            let (x, y) = complete_pairs(&columns[i], &columns[j])?;
            let value = pearson(&x, &y).ok();
            r[i][j] = value;
            r[j][i] = value;
            n_pairs[i][j] = x.len();
            n_pairs[j][i] = x.len();
        }
    }
    Ok(CorrelationMatrix {
        features,
        r,
        n_pairs,
    })
}

/// Ordinary least-squares line `y = slope·x + intercept`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    pub r: f64,
    pub n: usize,
}

impl LinearFit {
    pub fn predict(&self, x: f64) -> f64 {
        self.slope * x + self.intercept
    }
}

pub fn linear_fit(x: &[f64], y: &[f64]) -> Result<LinearFit> {
    let m = Moments::of(x, y)?;
    let r = m.r();
    let slope = r * m.std_y() / m.std_x();
    Ok(LinearFit {
        slope,
        intercept: m.mean_y - slope * m.mean_x,
        r,
        n: m.n,
    })
}
