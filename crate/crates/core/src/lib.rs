#![forbid(unsafe_code)]
//! Analytics over a corpus of songs that carry audio descriptors and lyrics.
//!
//! The pipeline reads a CSV corpus ([`corpus`]), summarizes and correlates
//! the audio features ([`stats`]), counts lyric tokens ([`lexicon`]), links
//! the most frequent words by the songs they share ([`network`]), profiles
//! genres by mood ([`mood`]) and writes tables and SVG figures ([`report`]).
//!
//! ```
//! use songscope::{parse_corpus, ColumnMap, Feature};
//!
//! let csv = "title,artist,genre,year,energy,danceability,loudness,liveness,valence,acousticness,speechiness,popularity,lyrics
//! One,A,Pop,2010,80,70,-5,10,60,20,5,50,i love you
//! Two,B,Pop,2011,60,65,-8,20,40,N/A,10,70,you and i
//! ";
//! let (corpus, report) = parse_corpus(csv, &ColumnMap::default()).unwrap();
//! assert_eq!(report.rows_accepted, 2);
//!
//! let energy = songscope::stats::summarize(&corpus, Feature::Energy).unwrap();
//! assert_eq!(energy.mean, 70.0);
//! ```

pub mod corpus;
pub mod error;
pub mod lexicon;
pub mod mood;
pub mod network;
pub mod report;
pub mod stats;

pub use corpus::{
    load_corpus, parse_corpus, year_of, AudioFeatures, ColumnMap, Corpus, Feature, Field,
    IngestReport, SongRecord,
};
pub use error::{Error, Result};
pub use lexicon::{count_corpus, tokenize, top_n, RankedWord, TokenCountTable};
pub use mood::{genre_means, GenreProfile};
pub use network::{build_network, centralities, export_edges, CentralityRow, CoocNetwork, Edge};
pub use stats::{
    annual_means, correlation_matrix, linear_fit, pearson, summarize, AnnualSeries,
    CorrelationMatrix, FeatureSummary, LinearFit,
};
