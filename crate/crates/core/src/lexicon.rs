//! Lyric tokenization and corpus-wide word counts.
//!
//! A token is a maximal run of the ASCII letters `a`–`z` after Unicode
//! lowercasing. Everything else, including apostrophes, digits and accented
//! letters, separates tokens. Stopwords are kept.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::corpus::Corpus;

/// Splits text into lowercase ASCII-letter tokens, in order.
pub fn tokenize(text: &str) -> Vec<String> {
    let lower = text.to_lowercase();
    lower
        .split(|c: char| !c.is_ascii_lowercase())
        .filter(|t| !t.is_empty())
        .map(str::to_owned)
        .collect()
}

/// True if `word` could have been produced by [`tokenize`].
pub fn is_token(word: &str) -> bool {
    !word.is_empty() && word.bytes().all(|b| b.is_ascii_lowercase())
}

/// Corpus-wide occurrence counts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TokenCountTable {
    pub counts: BTreeMap<String, u64>,
    pub total_tokens: u64,
    pub vocab_size: usize,
    pub n_documents: usize,
}

impl TokenCountTable {
    /// Counts the tokens of a sequence of documents.
    pub fn from_documents<'a>(docs: impl IntoIterator<Item = &'a str>) -> Self {
        let mut table = TokenCountTable::default();
        for doc in docs {
            table.add_document(doc);
        }
        table
    }

    pub fn add_document(&mut self, text: &str) {
        for token in tokenize(text) {
            *self.counts.entry(token).or_insert(0) += 1;
            self.total_tokens += 1;
        }
        self.vocab_size = self.counts.len();
        self.n_documents += 1;
    }

    /// Adds another table's counts into this one.
    pub fn merge(&mut self, other: &TokenCountTable) {
        for (word, count) in &other.counts {
            *self.counts.entry(word.clone()).or_insert(0) += count;
        }
        self.total_tokens += other.total_tokens;
        self.n_documents += other.n_documents;
        self.vocab_size = self.counts.len();
    }

    pub fn count(&self, word: &str) -> u64 {
        self.counts.get(word).copied().unwrap_or(0)
    }
}

/// Counts tokens over every song's lyrics. Songs without lyrics still count
/// as documents.
pub fn count_corpus(corpus: &Corpus) -> TokenCountTable {
    TokenCountTable::from_documents(corpus.iter().map(|s| s.lyrics.as_str()))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankedWord {
    pub word: String,
    pub count: u64,
    /// `count / total_tokens` of the source table.
    pub relative_frequency: f64,
}

/// The whole vocabulary ranked by count descending, ties alphabetical.
pub fn ranked(table: &TokenCountTable) -> Vec<RankedWord> {
    let mut words: Vec<(&String, &u64)> = table.counts.iter().collect();
    words.sort_by(|a, b| b.1.cmp(a.1).then_with(|| a.0.cmp(b.0)));
    words
        .into_iter()
        .map(|(word, &count)| RankedWord {
            word: word.clone(),
            count,
            relative_frequency: count as f64 / table.total_tokens as f64,
        })
        .collect()
}

/// The `n` most frequent words. Returns fewer when the vocabulary is smaller.
pub fn top_n(table: &TokenCountTable, n: usize) -> Vec<RankedWord> {
    let mut all = ranked(table);
    all.truncate(n);
    all
}
