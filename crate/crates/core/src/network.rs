//! Song-level word co-occurrence network.
//!
//! Two words are linked with weight `k` when `k` songs contain both of them
//! (presence in the song's token set, not a product of token counts). The
//! diagonal is always zero; per-word document frequency is kept separately.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::corpus::Corpus;
use crate::error::{Error, Result};
use crate::lexicon::{is_token, tokenize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoocNetwork {
    pub words: Vec<String>,
    /// Symmetric, zero diagonal.
    pub adjacency: Vec<Vec<u64>>,
    /// Number of songs containing each word, aligned with `words`.
    pub doc_freq: Vec<u64>,
    pub n_documents: usize,
}

impl CoocNetwork {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn index_of(&self, word: &str) -> Option<usize> {
        self.words.iter().position(|w| w == word)
    }

    pub fn weight(&self, a: &str, b: &str) -> Option<u64> {
        Some(self.adjacency[self.index_of(a)?][self.index_of(b)?])
    }

    pub fn doc_freq_of(&self, word: &str) -> Option<u64> {
        self.index_of(word).map(|i| self.doc_freq[i])
    }
}

fn validate_words(words: &[String]) -> Result<HashMap<&str, usize>> {
    if words.is_empty() {
        return Err(Error::EmptyWordList);
    }
    let mut index = HashMap::with_capacity(words.len());
    for (i, w) in words.iter().enumerate() {
        if !is_token(w) {
            return Err(Error::InvalidWord(w.clone()));
        }
        if index.insert(w.as_str(), i).is_some() {
            return Err(Error::DuplicateWord(w.clone()));
        }
    }
    Ok(index)
}

/// Builds the network over an arbitrary sequence of documents.
pub fn build_network_from_documents<'a>(
    docs: impl IntoIterator<Item = &'a str>,
    words: &[String],
) -> Result<CoocNetwork> {
    let index = validate_words(words)?;
    let n = words.len();
    let mut adjacency = vec![vec![0u64; n]; n];
    let mut doc_freq = vec![0u64; n];
    let mut n_documents = 0;
    for doc in docs {
        n_documents += 1;
        let present: BTreeSet<usize> = tokenize(doc)
            .iter()
            .filter_map(|t| index.get(t.as_str()).copied())
            .collect();
        let present: Vec<usize> = present.into_iter().collect();
        for (k, &i) in present.iter().enumerate() {
            doc_freq[i] += 1;
            for &j in &present[k + 1..] {
                adjacency[i][j] += 1;
                adjacency[j][i] += 1;
            }
        }
    }
    Ok(CoocNetwork {
        words: words.to_vec(),
        adjacency,
        doc_freq,
        n_documents,
    })
}

/// Builds the network over every song's lyrics.
pub fn build_network(corpus: &Corpus, words: &[String]) -> Result<CoocNetwork> {
    corpus.require_non_empty()?;
    build_network_from_documents(corpus.iter().map(|s| s.lyrics.as_str()), words)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralityRow {
    pub word: String,
    /// Neighbors with positive weight.
    pub simple_degree: usize,
    /// Sum of incident weights.
    pub weighted_degree: u64,
}

pub fn centralities(net: &CoocNetwork) -> Vec<CentralityRow> {
    net.words
        .iter()
        .enumerate()
        .map(|(i, word)| {
            let row = net.adjacency[i]
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i);
            let (simple_degree, weighted_degree) = row.fold((0, 0), |(d, w), (_, &a)| {
                (d + usize::from(a > 0), w + a)
            });
            CentralityRow {
                word: word.clone(),
                simple_degree,
                weighted_degree,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub word_a: String,
    pub word_b: String,
    pub count: u64,
}

/// Positive-weight pairs, `word_a < word_b`, heaviest first.
pub fn export_edges(net: &CoocNetwork) -> Vec<Edge> {
    let n = net.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let count = net.adjacency[i][j];
            if count == 0 {
                continue;
            }
            let (a, b) = if net.words[i] < net.words[j] { (i, j) } else { (j, i) };
            edges.push(Edge {
                word_a: net.words[a].clone(),
                word_b: net.words[b].clone(),
                count,
            });
        }
    }
    edges.sort_by(|x, y| {
        y.count
            .cmp(&x.count)
            .then_with(|| x.word_a.cmp(&y.word_a))
            .then_with(|| x.word_b.cmp(&y.word_b))
    });
    edges
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(ws: &[&str]) -> Vec<String> {
        ws.iter().map(|w| w.to_string()).collect()
    }

    fn abc() -> CoocNetwork {
        build_network_from_documents(["a b", "a c", "a b c"], &words(&["a", "b", "c"])).unwrap()
    }

    #[test]
    fn three_document_adjacency() {
        let net = abc();
        assert_eq!(net.adjacency, vec![vec![0, 2, 2], vec![2, 0, 1], vec![2, 1, 0]]);
        assert_eq!(net.doc_freq, vec![3, 2, 2]);
        assert_eq!(net.n_documents, 3);
    }

    #[test]
    fn presence_not_count() {
        let net =
            build_network_from_documents(["a a a b b", "a"], &words(&["a", "b"])).unwrap();
        assert_eq!(net.weight("a", "b"), Some(1));
        assert_eq!(net.doc_freq_of("a"), Some(2));
    }

    #[test]
    fn disjoint_words() {
        let net = build_network_from_documents(["a", "b"], &words(&["a", "b"])).unwrap();
        assert_eq!(net.weight("a", "b"), Some(0));
        assert!(export_edges(&net).is_empty());
    }

    #[test]
    fn degrees_on_three_words() {
        let rows = centralities(&abc());
        assert_eq!((rows[0].simple_degree, rows[0].weighted_degree), (2, 4));
        assert_eq!((rows[1].simple_degree, rows[1].weighted_degree), (2, 3));
        assert_eq!((rows[2].simple_degree, rows[2].weighted_degree), (2, 3));
    }

    #[test]
    fn zero_adjacency_degrees() {
        let net = build_network_from_documents(["x y"], &words(&["a", "b", "c"])).unwrap();
        assert!(centralities(&net)
            .iter()
            .all(|r| r.simple_degree == 0 && r.weighted_degree == 0));
    }

    #[test]
    fn edges_sorted() {
        let edges = export_edges(&abc());
        let flat: Vec<(&str, &str, u64)> = edges
            .iter()
            .map(|e| (e.word_a.as_str(), e.word_b.as_str(), e.count))
            .collect();
        assert_eq!(flat, vec![("a", "b", 2), ("a", "c", 2), ("b", "c", 1)]);
    }

    #[test]
    fn edge_endpoints_ordered_lexicographically() {
        let net = build_network_from_documents(["z a"], &words(&["z", "a"])).unwrap();
        let e = &export_edges(&net)[0];
        assert_eq!((e.word_a.as_str(), e.word_b.as_str()), ("a", "z"));
    }

    #[test]
    fn single_word_network_has_no_edges() {
        let net = build_network_from_documents(["a"], &words(&["a"])).unwrap();
        assert!(export_edges(&net).is_empty());
        assert_eq!(net.adjacency, vec![vec![0]]);
    }

    #[test]
    fn word_list_errors() {
        assert!(matches!(
            build_network_from_documents(["a"], &[]),
            Err(Error::EmptyWordList)
        ));
        assert!(matches!(
            build_network_from_documents(["a"], &words(&["a", "a"])),
            Err(Error::DuplicateWord(_))
        ));
        assert!(matches!(
            build_network_from_documents(["a"], &words(&["Love"])),
            Err(Error::InvalidWord(_))
        ));
    }
}
