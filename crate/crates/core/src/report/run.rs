use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Serialize;

use crate::corpus::{Corpus, Feature};
use crate::error::{Error, Result};
use crate::lexicon::{count_corpus, ranked, top_n};
use crate::mood::{genre_counts, genre_means};
use crate::network::{build_network, centralities, export_edges};
use crate::report::export;
use crate::report::figure::{render_figure, FigureData, FigureKind, FigureSpec};
use crate::stats::{annual_means, complete_pairs, correlation_matrix, summarize_all};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Analysis {
    Stats,
    Trends,
    Corr,
    Tokens,
    Cooc,
    Mood,
}

impl Analysis {
    pub const ALL: [Analysis; 6] = [
        Analysis::Stats,
        Analysis::Trends,
        Analysis::Corr,
        Analysis::Tokens,
        Analysis::Cooc,
        Analysis::Mood,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Analysis::Stats => "stats",
            Analysis::Trends => "trends",
            Analysis::Corr => "corr",
            Analysis::Tokens => "tokens",
            Analysis::Cooc => "cooc",
            Analysis::Mood => "mood",
        }
    }
}

impl fmt::Display for Analysis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A set of analyses, parsed from a comma-separated list or `all`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisSet(BTreeSet<Analysis>);

impl AnalysisSet {
    pub fn all() -> Self {
        AnalysisSet(Analysis::ALL.into_iter().collect())
    }

    pub fn contains(&self, a: Analysis) -> bool {
        self.0.contains(&a)
    }

    pub fn iter(&self) -> impl Iterator<Item = Analysis> + '_ {
        self.0.iter().copied()
    }
}

impl FromStr for AnalysisSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut set = BTreeSet::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                return Ok(AnalysisSet::all());
            }
            let a = Analysis::ALL
                .into_iter()
                .find(|a| a.name() == part)
                .ok_or_else(|| Error::UnknownAnalysis(part.to_string()))?;
            set.insert(a);
        }
        if set.is_empty() {
            return Err(Error::UnknownAnalysis(s.to_string()));
        }
        Ok(AnalysisSet(set))
    }
}

impl fmt::Display for AnalysisSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.iter().map(Analysis::name).collect();
        f.write_str(&names.join(","))
    }
}

#[derive(Debug, Clone)]
pub struct ReportOptions {
    pub out_dir: PathBuf,
    pub analyses: AnalysisSet,
    /// Words in the frequency table and co-occurrence network.
    pub top_words: usize,
    /// Feature profiled by genre in the mood analysis.
    pub feature: Feature,
    pub force: bool,
    /// Also export the whole ranked vocabulary.
    pub full_vocab: bool,
}

impl ReportOptions {
    pub fn new(out_dir: impl Into<PathBuf>) -> Self {
        ReportOptions {
            out_dir: out_dir.into(),
            analyses: AnalysisSet::all(),
            top_words: 10,
            feature: Feature::Valence,
            force: false,
            full_vocab: false,
        }
    }
}

/// Record of one report run. Output paths are relative to the output
/// directory so identical runs produce identical manifests.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub input_path: String,
    pub parameters: BTreeMap<String, String>,
    pub outputs: Vec<String>,
    pub tool_version: String,
}

pub const MANIFEST_FILE: &str = "manifest.json";

struct Artifact {
    name: String,
    contents: String,
}

fn artifact(name: impl Into<String>, contents: String) -> Artifact {
    Artifact {
        name: name.into(),
        contents,
    }
}

fn figure(name: &str, kind: FigureKind, title: &str, data: &FigureData) -> Result<Artifact> {
    Ok(artifact(name, render_figure(&FigureSpec::new(kind, title), data)?))
}

fn stats(corpus: &Corpus) -> Result<Vec<Artifact>> {
    let summaries = summarize_all(corpus)?;
    Ok(vec![
        artifact("feature_summary.csv", export::summaries_csv(&summaries)),
        artifact("feature_summary.json", export::to_json(&summaries)),
    ])
}

fn trends(corpus: &Corpus) -> Result<Vec<Artifact>> {
    let all = Feature::ALL
        .iter()
        .map(|f| annual_means(corpus, *f))
        .collect::<Result<Vec<_>>>()?;
    let plotted: Vec<_> = all
        .iter()
        .filter(|s| matches!(s.feature, Feature::Energy | Feature::Danceability | Feature::Valence))
        .cloned()
        .collect();
    let (x, y) = complete_pairs(
        &corpus.column(Feature::Energy),
        &corpus.column(Feature::Danceability),
    )?;
    let scatter = FigureData::scatter(x.clone(), y.clone(), "energy", "danceability")?;
    Ok(vec![
        artifact("annual_means.csv", export::annual_csv(&all)),
        artifact("fig2_trends.csv", export::series_csv(&plotted)),
        figure(
            "fig2_trends.svg",
            FigureKind::Line,
            "Annual mean energy, danceability and valence",
            &FigureData::annual(&plotted),
        )?,
        artifact("fig3_energy_danceability.csv", export::pairs_csv(&x, &y)),
        figure(
            "fig3_energy_danceability.svg",
            FigureKind::ScatterFit,
            "Energy vs danceability",
            &scatter,
        )?,
    ])
}

fn corr(corpus: &Corpus) -> Result<Vec<Artifact>> {
    let m = correlation_matrix(corpus)?;
    Ok(vec![
        artifact("correlation_matrix.csv", export::correlation_csv(&m)),
        figure(
            "correlation_heatmap.svg",
            FigureKind::Heatmap,
            "Pearson correlation of audio features",
            &FigureData::correlation(&m),
        )?,
    ])
}

fn tokens(corpus: &Corpus, opts: &ReportOptions) -> Result<Vec<Artifact>> {
    let table = count_corpus(corpus);
    let top = top_n(&table, opts.top_words);
    let mut out = vec![
        artifact("token_stats.json", export::token_stats_json(&table)),
        artifact("top_words.csv", export::ranked_csv(&top)),
        figure(
            "fig4_top_words.svg",
            FigureKind::Hbar,
            &format!("Top {} words in lyrics", top.len()),
            &FigureData::bars(top.iter().map(|w| (w.word.as_str(), w.count as f64)), 0),
        )?,
    ];
    if opts.full_vocab {
        out.push(artifact("vocabulary.csv", export::ranked_csv(&ranked(&table))));
    }
    Ok(out)
}

fn cooc(corpus: &Corpus, opts: &ReportOptions) -> Result<Vec<Artifact>> {
    let table = count_corpus(corpus);
    let words: Vec<String> = top_n(&table, opts.top_words)
        .into_iter()
        .map(|w| w.word)
        .collect();
    let net = build_network(corpus, &words)?;
    Ok(vec![
        artifact("cooc_adjacency.csv", export::adjacency_csv(&net)),
        artifact("cooc_edges.csv", export::edges_csv(&export_edges(&net))),
        artifact(
            "centralities.csv",
            export::centralities_csv(&centralities(&net), &table),
        ),
        figure(
            "fig5_cooc_heatmap.svg",
            FigureKind::Heatmap,
            "Song-level co-occurrence of top words",
            &FigureData::cooc(&net),
        )?,
    ])
}

fn mood(corpus: &Corpus, opts: &ReportOptions) -> Result<Vec<Artifact>> {
    let counts = genre_counts(corpus);
    let profiles = genre_means(corpus, opts.feature)?;
    let feature = opts.feature.name();
    Ok(vec![
        artifact("genre_counts.csv", export::genre_counts_csv(&counts)),
        figure(
            "fig1_genre_counts.svg",
            FigureKind::Hbar,
            "Songs per genre",
            &FigureData::bars(counts.iter().map(|g| (g.genre.as_str(), g.count as f64)), 0),
        )?,
        artifact("genre_means.csv", export::genre_means_csv(&profiles)),
        figure(
            &format!("fig6_genre_{feature}.svg"),
            FigureKind::Hbar,
            &format!("Mean {feature} by genre"),
            &FigureData::bars(profiles.iter().map(|p| (p.genre.as_str(), p.mean)), 2),
        )?,
    ])
}

fn run_one(analysis: Analysis, corpus: &Corpus, opts: &ReportOptions) -> Result<Vec<Artifact>> {
    match analysis {
        Analysis::Stats => stats(corpus),
        Analysis::Trends => trends(corpus),
        Analysis::Corr => corr(corpus),
        Analysis::Tokens => tokens(corpus, opts),
        Analysis::Cooc => cooc(corpus, opts),
        Analysis::Mood => mood(corpus, opts),
    }
    .map_err(|e| Error::Analysis {
        analysis: analysis.name(),
        source: Box::new(e),
    })
}

fn write(dir: &Path, name: &str, contents: &str) -> Result<()> {
    let path = dir.join(name);
    fs::write(&path, contents).map_err(|e| Error::io(path, e))
}

/// Runs the requested analyses and writes every artifact, then the manifest.
///
/// Nothing is written unless every analysis succeeds.
pub fn run_report(corpus: &Corpus, input_path: &str, opts: &ReportOptions) -> Result<RunManifest> {
    corpus.require_non_empty()?;
    if opts.out_dir.exists() && !opts.force {
        return Err(Error::OutputExists(opts.out_dir.clone()));
    }

    let requested: Vec<Analysis> = opts.analyses.iter().collect();
    let results: Vec<Result<Vec<Artifact>>> = std::thread::scope(|s| {
        let handles: Vec<_> = requested
            .iter()
            .map(|a| s.spawn(move || run_one(*a, corpus, opts)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("analysis thread panicked"))
            .collect()
    });
    let mut artifacts = Vec::new();
    for r in results {
        artifacts.extend(r?);
    }

    fs::create_dir_all(&opts.out_dir).map_err(|e| Error::io(&opts.out_dir, e))?;
    for a in &artifacts {
        write(&opts.out_dir, &a.name, &a.contents)?;
    }

    let mut parameters = BTreeMap::new();
    parameters.insert("analyses".to_string(), opts.analyses.to_string());
    parameters.insert("top_words".to_string(), opts.top_words.to_string());
    parameters.insert("feature".to_string(), opts.feature.name().to_string());
    parameters.insert("full_vocab".to_string(), opts.full_vocab.to_string());
    let manifest = RunManifest {
        command: "report".to_string(),
        input_path: input_path.to_string(),
        parameters,
        outputs: artifacts.into_iter().map(|a| a.name).collect(),
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
    };
    write(&opts.out_dir, MANIFEST_FILE, &export::to_json(&manifest))?;
    Ok(manifest)
}
