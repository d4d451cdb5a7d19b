//! Song corpus data model and CSV ingestion.
//!
//! A corpus is read from a CSV document with a header row. A [`ColumnMap`]
//! says which header holds each logical field, so the same code can ingest
//! datasets with different naming conventions. Rows that fail validation are
//! skipped and tallied in an [`IngestReport`]; only structural problems (no
//! header, a mapped header that does not exist) abort ingestion.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// The eight per-song audio descriptors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Feature {
    Energy,
    Danceability,
    Loudness,
    Liveness,
    Valence,
    Acousticness,
    Speechiness,
    Popularity,
}

impl Feature {
    pub const ALL: [Feature; 8] = [
        Feature::Energy,
        Feature::Danceability,
        Feature::Loudness,
        Feature::Liveness,
        Feature::Valence,
        Feature::Acousticness,
        Feature::Speechiness,
        Feature::Popularity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Feature::Energy => "energy",
            Feature::Danceability => "danceability",
            Feature::Loudness => "loudness",
            Feature::Liveness => "liveness",
            Feature::Valence => "valence",
            Feature::Acousticness => "acousticness",
            Feature::Speechiness => "speechiness",
            Feature::Popularity => "popularity",
        }
    }

    /// Inclusive range of admissible values. Loudness is in decibels, the
    /// rest are 0–100 scores.
    pub fn range(self) -> (f64, f64) {
        match self {
            Feature::Loudness => (-60.0, 0.0),
            _ => (0.0, 100.0),
        }
    }

    pub fn contains(self, value: f64) -> bool {
        let (lo, hi) = self.range();
        (lo..=hi).contains(&value)
    }
}

impl fmt::Display for Feature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Feature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        Feature::ALL
            .into_iter()
            .find(|f| f.name() == s || (s == "loudness_db" && *f == Feature::Loudness))
            .ok_or(Error::UnknownField(s))
    }
}

/// Audio descriptors of one song; `None` marks a missing cell.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct AudioFeatures {
    pub energy: Option<f64>,
    pub danceability: Option<f64>,
    pub loudness_db: Option<f64>,
    pub liveness: Option<f64>,
    pub valence: Option<f64>,
    pub acousticness: Option<f64>,
    pub speechiness: Option<f64>,
    pub popularity: Option<f64>,
}

impl AudioFeatures {
    pub fn get(&self, feature: Feature) -> Option<f64> {
        match feature {
            Feature::Energy => self.energy,
            Feature::Danceability => self.danceability,
            Feature::Loudness => self.loudness_db,
            Feature::Liveness => self.liveness,
            Feature::Valence => self.valence,
            Feature::Acousticness => self.acousticness,
            Feature::Speechiness => self.speechiness,
            Feature::Popularity => self.popularity,
        }
    }

    pub fn set(&mut self, feature: Feature, value: Option<f64>) {
        let slot = match feature {
            Feature::Energy => &mut self.energy,
            Feature::Danceability => &mut self.danceability,
            Feature::Loudness => &mut self.loudness_db,
            Feature::Liveness => &mut self.liveness,
            Feature::Valence => &mut self.valence,
            Feature::Acousticness => &mut self.acousticness,
            Feature::Speechiness => &mut self.speechiness,
            Feature::Popularity => &mut self.popularity,
        };
        *slot = value;
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SongRecord {
    /// Position of the record in input order.
    pub id: usize,
    pub title: String,
    pub artist: String,
    pub genre: String,
    pub year: i32,
    pub features: AudioFeatures,
    pub lyrics: String,
}

impl SongRecord {
    pub fn year(&self) -> i32 {
        self.year
    }
}

/// Free-function form of [`SongRecord::year`].
pub fn year_of(record: &SongRecord) -> i32 {
    record.year
}

/// An ordered, immutable collection of songs.
#[derive(Debug, Clone, PartialEq)]
pub struct Corpus {
    songs: Vec<SongRecord>,
    source_name: String,
}

impl Corpus {
    /// Builds a corpus, renumbering ids to match positions.
    pub fn new(mut songs: Vec<SongRecord>, source_name: impl Into<String>) -> Self {
        for (i, song) in songs.iter_mut().enumerate() {
            song.id = i;
        }
        Corpus {
            songs,
            source_name: source_name.into(),
        }
    }

    pub fn songs(&self) -> &[SongRecord] {
        &self.songs
    }

    pub fn source_name(&self) -> &str {
        &self.source_name
    }

    pub fn len(&self) -> usize {
        self.songs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.songs.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SongRecord> {
        self.songs.iter()
    }

    /// All values of one feature in corpus order, missing cells included.
    pub fn column(&self, feature: Feature) -> Vec<Option<f64>> {
        self.songs.iter().map(|s| s.features.get(feature)).collect()
    }

    pub(crate) fn require_non_empty(&self) -> Result<()> {
        if self.songs.is_empty() {
            Err(Error::EmptyCorpus)
        } else {
            Ok(())
        }
    }

    /// Serializes the corpus with the default column names. Re-parsing the
    /// output with [`ColumnMap::default`] yields an identical corpus.
    pub fn to_csv(&self) -> String {
        let map = ColumnMap::default();
        let mut w = csv::Writer::from_writer(Vec::new());
        let header: Vec<&str> = Field::ALL.iter().map(|f| map.header(*f)).collect();
        w.write_record(&header).expect("in-memory write");
        for song in &self.songs {
            let mut row = vec![
                song.title.clone(),
                song.artist.clone(),
                song.genre.clone(),
                song.year.to_string(),
            ];
            for feature in Feature::ALL {
                row.push(
                    song.features
                        .get(feature)
                        .map(|v| v.to_string())
                        .unwrap_or_default(),
                );
            }
            row.push(song.lyrics.clone());
            w.write_record(&row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }
}

impl<'a> IntoIterator for &'a Corpus {
    type Item = &'a SongRecord;
    type IntoIter = std::slice::Iter<'a, SongRecord>;

    fn into_iter(self) -> Self::IntoIter {
        self.songs.iter()
    }
}

/// Logical fields a [`ColumnMap`] can assign to headers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Field {
    Title,
    Artist,
    Genre,
    Year,
    Feature(Feature),
    Lyrics,
}

impl Field {
    pub const ALL: [Field; 13] = [
        Field::Title,
        Field::Artist,
        Field::Genre,
        Field::Year,
        Field::Feature(Feature::Energy),
        Field::Feature(Feature::Danceability),
        Field::Feature(Feature::Loudness),
        Field::Feature(Feature::Liveness),
        Field::Feature(Feature::Valence),
        Field::Feature(Feature::Acousticness),
        Field::Feature(Feature::Speechiness),
        Field::Feature(Feature::Popularity),
        Field::Lyrics,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Field::Title => "title",
            Field::Artist => "artist",
            Field::Genre => "genre",
            Field::Year => "year",
            Field::Feature(f) => f.name(),
            Field::Lyrics => "lyrics",
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        match key.as_str() {
            "title" => Ok(Field::Title),
            "artist" => Ok(Field::Artist),
            "genre" => Ok(Field::Genre),
            "year" => Ok(Field::Year),
            "lyrics" => Ok(Field::Lyrics),
            _ => key.parse().map(Field::Feature),
        }
    }
}

/// Assignment of logical fields to CSV header names.
///
/// Every field defaults to a header of the same name (`energy`, `genre`, ...).
/// The lyrics column is optional unless it was set explicitly: if the default
/// `lyrics` header is absent, every song gets empty lyrics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnMap {
    headers: BTreeMap<Field, String>,
    lyrics_explicit: bool,
}

impl Default for ColumnMap {
    fn default() -> Self {
        ColumnMap {
            headers: Field::ALL
                .iter()
                .map(|f| (*f, f.name().to_string()))
                .collect(),
            lyrics_explicit: false,
        }
    }
}

impl ColumnMap {
    pub fn header(&self, field: Field) -> &str {
        &self.headers[&field]
    }

    pub fn set(&mut self, field: Field, header: impl Into<String>) -> &mut Self {
        if field == Field::Lyrics {
            self.lyrics_explicit = true;
        }
        self.headers.insert(field, header.into());
        self
    }

    /// Applies one `logical=header` assignment.
    pub fn apply(&mut self, spec: &str) -> Result<&mut Self> {
        let (field, header) = spec
            .split_once('=')
            .ok_or_else(|| Error::BadColumnSpec(spec.to_string()))?;
        let header = header.trim();
        if header.is_empty() {
            return Err(Error::BadColumnSpec(spec.to_string()));
        }
        Ok(self.set(field.parse()?, header))
    }

    /// Parses a mapping file: one `logical=header` per line, blank lines and
    /// `#` comments ignored. Unlisted fields keep their defaults.
    pub fn from_mapping_text(text: &str) -> Result<Self> {
        let mut map = ColumnMap::default();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            map.apply(line)?;
        }
        Ok(map)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Rejection {
    /// 1-based data row number (the header is row 0).
    pub row: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IngestReport {
    pub rows_read: usize,
    pub rows_accepted: usize,
    pub rows_rejected: usize,
    pub rejections: Vec<Rejection>,
    /// Missing cells per feature, over accepted rows.
    pub missing_cells: BTreeMap<String, usize>,
}

impl IngestReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }
}

fn is_missing_token(cell: &str) -> bool {
    cell.is_empty() || cell.eq_ignore_ascii_case("n/a")
}

/// Extracts a release year from a year or date cell.
///
/// A bare run of four digits is taken as-is. Anything else (a full date in
/// any layout) must contain exactly one four-digit run in 1900–2099.
pub fn extract_year(cell: &str) -> Option<i32> {
    let cell = cell.trim();
    if cell.len() == 4 && cell.bytes().all(|b| b.is_ascii_digit()) {
        let year: i32 = cell.parse().ok()?;
        return (year > 0).then_some(year);
    }
    let mut found = None;
    for run in cell.split(|c: char| !c.is_ascii_digit()) {
        if run.len() != 4 {
            continue;
        }
        let year: i32 = run.parse().ok()?;
        if (1900..=2099).contains(&year) {
            if found.is_some() {
                return None;
            }
            found = Some(year);
        }
    }
    found
}

fn parse_feature(feature: Feature, cell: &str) -> std::result::Result<Option<f64>, String> {
    let cell = cell.trim();
    if is_missing_token(cell) {
        return Ok(None);
    }
    let value: f64 = cell
        .parse()
        .map_err(|_| format!("{feature}: non-numeric value {cell:?}"))?;
    if !value.is_finite() {
        return Err(format!("{feature}: non-finite value {cell:?}"));
    }
    if !feature.contains(value) {
        let (lo, hi) = feature.range();
        return Err(format!("{feature}: value {value} outside [{lo}, {hi}]"));
    }
    Ok(Some(value))
}

struct Columns {
    title: usize,
    artist: usize,
    genre: usize,
    year: usize,
    features: [usize; 8],
    lyrics: Option<usize>,
}

impl Columns {
    fn resolve(header: &csv::StringRecord, map: &ColumnMap) -> Result<Self> {
        let names: Vec<&str> = header
            .iter()
            .enumerate()
            .map(|(i, h)| {
                let h = if i == 0 { h.trim_start_matches('\u{feff}') } else { h };
                h.trim()
            })
            .collect();
        let find = |field: Field| -> Option<usize> {
            let wanted = map.header(field).trim();
            names.iter().position(|h| *h == wanted)
        };
        let require = |field: Field| -> Result<usize> {
            find(field).ok_or_else(|| Error::UnknownColumn {
                field: field.name().to_string(),
                header: map.header(field).to_string(),
            })
        };
        let mut features = [0; 8];
        for (slot, feature) in features.iter_mut().zip(Feature::ALL) {
            *slot = require(Field::Feature(feature))?;
        }
        let lyrics = if map.lyrics_explicit {
            Some(require(Field::Lyrics)?)
        } else {
            find(Field::Lyrics)
        };
        Ok(Columns {
            title: require(Field::Title)?,
            artist: require(Field::Artist)?,
            genre: require(Field::Genre)?,
            year: require(Field::Year)?,
            features,
            lyrics,
        })
    }

    fn width(&self) -> usize {
        let fixed = [self.title, self.artist, self.genre, self.year];
        fixed
            .iter()
            .chain(self.features.iter())
            .chain(self.lyrics.iter())
            .max()
            .map_or(0, |m| m + 1)
    }

    fn record(&self, row: &csv::StringRecord, id: usize) -> std::result::Result<SongRecord, String> {
        if row.len() < self.width() {
            return Err(format!(
                "row has {} fields, expected at least {}",
                row.len(),
                self.width()
            ));
        }
        let genre = row[self.genre].trim();
        if genre.is_empty() {
            return Err("empty genre".to_string());
        }
        let year_cell = &row[self.year];
        let year =
            extract_year(year_cell).ok_or_else(|| format!("malformed year {:?}", year_cell.trim()))?;
        let mut features = AudioFeatures::default();
        for (col, feature) in self.features.iter().zip(Feature::ALL) {
            features.set(feature, parse_feature(feature, &row[*col])?);
        }
        Ok(SongRecord {
            id,
            title: row[self.title].trim().to_string(),
            artist: row[self.artist].trim().to_string(),
            genre: genre.to_string(),
            year,
            features,
            lyrics: self.lyrics.map(|c| row[c].to_string()).unwrap_or_default(),
        })
    }
}

/// Parses a CSV document into a corpus plus an account of every row.
pub fn parse_corpus(csv_document: &str, column_map: &ColumnMap) -> Result<(Corpus, IngestReport)> {
    parse_named(csv_document, column_map, "<memory>")
}

/// Reads and parses a CSV file; the corpus is named after the path.
pub fn load_corpus(path: impl AsRef<Path>, column_map: &ColumnMap) -> Result<(Corpus, IngestReport)> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_named(&text, column_map, &path.display().to_string())
}

fn parse_named(
    csv_document: &str,
    column_map: &ColumnMap,
    source_name: &str,
) -> Result<(Corpus, IngestReport)> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(csv_document.as_bytes());
    let mut records = reader.records();
    let header = match records.next() {
        Some(h) => h?,
        None => return Err(Error::MissingHeader),
    };
    let columns = Columns::resolve(&header, column_map)?;

    let mut songs = Vec::new();
    let mut report = IngestReport {
        rows_read: 0,
        rows_accepted: 0,
        rows_rejected: 0,
        rejections: Vec::new(),
        missing_cells: Feature::ALL.iter().map(|f| (f.name().to_string(), 0)).collect(),
    };
    for record in records {
        let record = record?;
        report.rows_read += 1;
        match columns.record(&record, songs.len()) {
            Ok(song) => {
                for feature in Feature::ALL {
                    if song.features.get(feature).is_none() {
                        *report.missing_cells.get_mut(feature.name()).expect("seeded") += 1;
                    }
                }
                songs.push(song);
                report.rows_accepted += 1;
            }
            Err(reason) => {
                report.rows_rejected += 1;
                report.rejections.push(Rejection {
                    row: report.rows_read,
                    reason,
                });
            }
        }
    }
    Ok((Corpus::new(songs, source_name), report))
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEADER: &str =
        "title,artist,genre,year,energy,danceability,loudness,liveness,valence,acousticness,speechiness,popularity,lyrics";

    fn doc(rows: &[&str]) -> String {
        let mut s = String::from(HEADER);
        for r in rows {
            s.push('\n');
            s.push_str(r);
        }
        s
    }

    #[test]
    fn three_clean_rows() {
        let text = doc(&[
            "A,X,Pop,2010,80,70,-5,10,60,20,5,50,la la",
            "B,Y,Pop,2011,60,65,-8,20,40,30,10,70,la di",
            "C,Z,Dance,2012,70,90,-4,15,90,10,8,60,",
        ]);
        let (corpus, report) = parse_corpus(&text, &ColumnMap::default()).unwrap();
        assert_eq!(corpus.len(), 3);
        assert_eq!(report.rows_rejected, 0);
        assert_eq!(report.rows_accepted, 3);
        let ids: Vec<usize> = corpus.iter().map(|s| s.id).collect();
        assert_eq!(ids, vec![0, 1, 2]);
        assert_eq!(corpus.songs()[2].lyrics, "");
    }

    #[test]
    fn na_cell_is_missing() {
        let text = doc(&["A,X,Pop,2010,80,70,-5,10,60,N/A,5,50,hi"]);
        let (corpus, report) = parse_corpus(&text, &ColumnMap::default()).unwrap();
        assert_eq!(corpus.songs()[0].features.acousticness, None);
        assert_eq!(report.missing_cells["acousticness"], 1);
        assert_eq!(report.missing_cells["energy"], 0);

        let text = doc(&["A,X,Pop,2010,80,70,-5,10,60,n/a,,50,hi"]);
        let (_, report) = parse_corpus(&text, &ColumnMap::default()).unwrap();
        assert_eq!(report.missing_cells["acousticness"], 1);
        assert_eq!(report.missing_cells["speechiness"], 1);
    }

    #[test]
    fn out_of_range_rejected() {
        let text = doc(&["A,X,Pop,2010,250,70,-5,10,60,20,5,50,hi"]);
        let (corpus, report) = parse_corpus(&text, &ColumnMap::default()).unwrap();
        assert!(corpus.is_empty());
        assert_eq!(report.rows_read, 1);
        assert_eq!(report.rows_accepted, 0);
        assert_eq!(report.rows_rejected, 1);
        assert!(report.rejections[0].reason.contains("energy"));
        assert!(report.rejections[0].reason.contains("outside"));
    }

    #[test]
    fn loudness_range_is_decibels() {
        let text = doc(&[
            "A,X,Pop,2010,80,70,5,10,60,20,5,50,",
            "B,X,Pop,2010,80,70,-61,10,60,20,5,50,",
            "C,X,Pop,2010,80,70,-60,10,60,20,5,50,",
        ]);
        let (corpus, report) = parse_corpus(&text, &ColumnMap::default()).unwrap();
        assert_eq!(corpus.len(), 1);
        assert_eq!(corpus.songs()[0].title, "C");
        assert_eq!(report.rows_rejected, 2);
    }

    #[test]
    fn non_numeric_token_is_rejected_not_missing() {
        let text = doc(&["A,X,Pop,2010,high,70,-5,10,60,20,5,50,"]);
        let (_, report) = parse_corpus(&text, &ColumnMap::default()).unwrap();
        assert_eq!(report.rows_rejected, 1);
        assert!(report.rejections[0].reason.contains("non-numeric"));
    }

    #[test]
    fn malformed_year_and_empty_genre_rejected() {
        let text = doc(&[
            "A,X,Pop,twenty,80,70,-5,10,60,20,5,50,",
            "B,X,  ,2010,80,70,-5,10,60,20,5,50,",
            "C,X,Pop,2010,80,70,-5,10,60,20,5,50,",
        ]);
        let (corpus, report) = parse_corpus(&text, &ColumnMap::default()).unwrap();
        assert_eq!(corpus.len(), 1);
        assert_eq!(corpus.songs()[0].id, 0);
        assert_eq!(report.rejections[0].row, 1);
        assert!(report.rejections[0].reason.contains("year"));
        assert_eq!(report.rejections[1].row, 2);
        assert!(report.rejections[1].reason.contains("genre"));
    }

    #[test]
    fn short_row_rejected() {
        let text = doc(&["A,X,Pop,2010,80"]);
        let (_, report) = parse_corpus(&text, &ColumnMap::default()).unwrap();
        assert_eq!(report.rows_rejected, 1);
    }

    #[test]
    fn missing_header_is_fatal() {
        assert!(matches!(
            parse_corpus("", &ColumnMap::default()),
            Err(Error::MissingHeader)
        ));
    }

    #[test]
    fn unknown_mapped_header_is_fatal() {
        let mut map = ColumnMap::default();
        map.apply("energy=nrgy").unwrap();
        let err = parse_corpus(&doc(&[]), &map).unwrap_err();
        assert!(matches!(err, Error::UnknownColumn { ref header, .. } if header == "nrgy"));
    }

    #[test]
    fn lyrics_column_optional_unless_explicit() {
        let header = HEADER.trim_end_matches(",lyrics");
        let text = format!("{header}\nA,X,Pop,2010,80,70,-5,10,60,20,5,50");
        let (corpus, _) = parse_corpus(&text, &ColumnMap::default()).unwrap();
        assert_eq!(corpus.songs()[0].lyrics, "");

        let mut map = ColumnMap::default();
        map.apply("lyrics=lyrics").unwrap();
        assert!(parse_corpus(&text, &map).is_err());
    }

    #[test]
    fn custom_headers_via_mapping_text() {
        let text = "top genre,title,artist,year,nrgy,dnce,dB,live,val,acous,spch,pop\n\
                    Pop,A,X,2019-07-04,80,70,-5,10,60,20,5,50\n";
        let map = ColumnMap::from_mapping_text(
            "# short names\ngenre=top genre\nenergy=nrgy\ndanceability=dnce\n\
             loudness=dB\nliveness=live\nvalence=val\nacousticness=acous\n\
             speechiness=spch\npopularity=pop\n",
        )
        .unwrap();
        let (corpus, report) = parse_corpus(text, &map).unwrap();
        assert_eq!(report.rows_accepted, 1);
        let song = &corpus.songs()[0];
        assert_eq!(song.genre, "Pop");
        assert_eq!(year_of(song), 2019);
        assert_eq!(song.features.energy, Some(80.0));
    }

    #[test]
    fn bad_column_specs() {
        let mut map = ColumnMap::default();
        assert!(matches!(map.apply("energy"), Err(Error::BadColumnSpec(_))));
        assert!(matches!(map.apply("energy="), Err(Error::BadColumnSpec(_))));
        assert!(matches!(map.apply("tempo=bpm"), Err(Error::UnknownField(_))));
    }

    #[test]
    fn year_extraction() {
        assert_eq!(extract_year("2013"), Some(2013));
        assert_eq!(extract_year(" 2013 "), Some(2013));
        assert_eq!(extract_year("2019-07-04"), Some(2019));
        assert_eq!(extract_year("04/07/2019"), Some(2019));
        assert_eq!(extract_year("July 4, 2019"), Some(2019));
        assert_eq!(extract_year("2019-2020"), None);
        assert_eq!(extract_year("19"), None);
        assert_eq!(extract_year(""), None);
        assert_eq!(extract_year("0000"), None);
    }

    // Independent scan: the only whitespace/punctuation-delimited 4-digit
    // token between 1900 and 2099.
    fn year_oracle(cell: &str) -> Option<i32> {
        let hits: Vec<i32> = cell
            .split(['/', '-', '.', ' ', ','])
            .filter(|t| t.len() == 4)
            .filter_map(|t| t.parse().ok())
            .filter(|y| (1900..=2099).contains(y))
            .collect();
        (hits.len() == 1).then(|| hits[0])
    }

    #[test]
    fn year_extraction_matches_oracle_on_date_layouts() {
        for cell in ["04/07/2019", "2019-07-04", "4.7.2015", "12/31/1999", "2001/01/02"] {
            assert_eq!(extract_year(cell), year_oracle(cell), "{cell}");
        }
    }

    #[test]
    fn bom_in_header_tolerated() {
        let text = format!("\u{feff}{}", doc(&["A,X,Pop,2010,80,70,-5,10,60,20,5,50,"]));
        let (corpus, _) = parse_corpus(&text, &ColumnMap::default()).unwrap();
        assert_eq!(corpus.len(), 1);
    }

    #[test]
    fn feature_names_parse() {
        for f in Feature::ALL {
            assert_eq!(f.name().parse::<Feature>().unwrap(), f);
        }
        assert_eq!("Loudness_dB".parse::<Feature>().unwrap(), Feature::Loudness);
    }
}
