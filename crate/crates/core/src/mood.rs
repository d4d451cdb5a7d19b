//! Genre-level feature profiles.
//!
//! Genres are grouped by their exact trimmed label, so composite labels such
//! as `Pop/R&B` form their own group.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::corpus::{Corpus, Feature};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GenreProfile {
    pub genre: String,
    pub feature: Feature,
    pub mean: f64,
    pub n: usize,
}

/// Mean of `feature` per genre, highest first (ties by genre name).
pub fn genre_means(corpus: &Corpus, feature: Feature) -> Result<Vec<GenreProfile>> {
    corpus.require_non_empty()?;
    let mut groups: BTreeMap<&str, (f64, usize)> = BTreeMap::new();
    for song in corpus {
        if let Some(v) = song.features.get(feature) {
            let acc = groups.entry(song.genre.trim()).or_default();
            acc.0 += v;
            acc.1 += 1;
        }
    }
    if groups.is_empty() {
        return Err(Error::NoValidValues(feature.name().to_string()));
    }
    let mut profiles: Vec<GenreProfile> = groups
        .into_iter()
        .map(|(genre, (sum, n))| GenreProfile {
            genre: genre.to_string(),
            feature,
            mean: sum / n as f64,
            n,
        })
        .collect();
    profiles.sort_by(|a, b| b.mean.total_cmp(&a.mean).then_with(|| a.genre.cmp(&b.genre)));
    Ok(profiles)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenreCount {
    pub genre: String,
    pub count: usize,
}

/// Songs per genre, most common first (ties by genre name).
pub fn genre_counts(corpus: &Corpus) -> Vec<GenreCount> {
    let mut groups: BTreeMap<&str, usize> = BTreeMap::new();
    for song in corpus {
        *groups.entry(song.genre.trim()).or_default() += 1;
    }
    let mut counts: Vec<GenreCount> = groups
        .into_iter()
        .map(|(genre, count)| GenreCount {
            genre: genre.to_string(),
            count,
        })
        .collect();
    counts.sort_by(|a, b| b.count.cmp(&a.count).then_with(|| a.genre.cmp(&b.genre)));
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{AudioFeatures, SongRecord};
    use crate::stats::summarize;

    fn song(genre: &str, valence: Option<f64>) -> SongRecord {
        SongRecord {
            id: 0,
            title: String::new(),
            artist: String::new(),
            genre: genre.into(),
            year: 2015,
            features: AudioFeatures {
                valence,
                ..Default::default()
            },
            lyrics: String::new(),
        }
    }

    #[test]
    fn two_genres_ranked() {
        let c = Corpus::new(
            vec![song("X", Some(10.0)), song("Y", Some(30.0)), song("X", Some(20.0))],
            "t",
        );
        let p = genre_means(&c, Feature::Valence).unwrap();
        let flat: Vec<(&str, f64, usize)> = p.iter().map(|g| (g.genre.as_str(), g.mean, g.n)).collect();
        assert_eq!(flat, vec![("Y", 30.0, 1), ("X", 15.0, 2)]);
    }

    #[test]
    fn single_genre_matches_summary() {
        let c = Corpus::new(
            vec![song("Pop", Some(12.5)), song("Pop", Some(40.0)), song("Pop", None)],
            "t",
        );
        let p = genre_means(&c, Feature::Valence).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].mean, summarize(&c, Feature::Valence).unwrap().mean);
        assert_eq!(p[0].n, 2);
    }

    #[test]
    fn composite_labels_kept_and_ties_alphabetical() {
        let c = Corpus::new(
            vec![song("Pop/R&B", Some(50.0)), song("Pop", Some(50.0)), song(" Pop ", Some(50.0))],
            "t",
        );
        let p = genre_means(&c, Feature::Valence).unwrap();
        let names: Vec<&str> = p.iter().map(|g| g.genre.as_str()).collect();
        assert_eq!(names, ["Pop", "Pop/R&B"]);
        assert_eq!(p[0].n, 2);
    }

    #[test]
    fn genres_without_values_omitted() {
        let c = Corpus::new(vec![song("A", None), song("B", Some(1.0))], "t");
        let p = genre_means(&c, Feature::Valence).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].genre, "B");
    }

    #[test]
    fn all_missing_is_an_error() {
        let c = Corpus::new(vec![song("A", None)], "t");
        assert!(matches!(
            genre_means(&c, Feature::Valence),
            Err(Error::NoValidValues(_))
        ));
    }

    #[test]
    fn counts_by_genre() {
        let c = Corpus::new(vec![song("B", None), song("A", None), song("B", None)], "t");
        assert_eq!(
            genre_counts(&c),
            vec![
                GenreCount { genre: "B".into(), count: 2 },
                GenreCount { genre: "A".into(), count: 1 },
            ]
        );
    }
}
