use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_songscope"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn ingest_clean_fixture() {
    let f = fixture("three_songs.csv");
    let o = run(&["ingest", "--input", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("\"rows_accepted\": 3"));
    assert!(stderr(&o).is_empty());
}

#[test]
fn ingest_missing_file() {
    let o = run(&["ingest", "--input", "/nonexistent/songs.csv"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("error"));
    assert!(stdout(&o).is_empty());
}

#[test]
fn ingest_strict_rejects_bad_row() {
    let f = fixture("one_bad_row.csv");
    let lenient = run(&["ingest", "--input", f.to_str().unwrap()]);
    assert_eq!(lenient.status.code(), Some(0));
    assert!(stderr(&lenient).contains("row 2 rejected"));
    let strict = run(&["ingest", "--input", f.to_str().unwrap(), "--strict"]);
    assert_eq!(strict.status.code(), Some(2));
}

#[test]
fn ingest_with_column_flags_and_map_file() {
    let tmp = tempfile::tempdir().unwrap();
    let csv = tmp.path().join("short.csv");
    fs::write(
        &csv,
        "title,artist,top genre,year,nrgy,dnce,dB,live,val,acous,spch,pop\n\
         A,X,dance pop,2010,80,70,-5,10,60,20,5,50\n",
    )
    .unwrap();
    let map = tmp.path().join("cols.map");
    fs::write(
        &map,
        "genre=top genre\nenergy=nrgy\ndanceability=dnce\nloudness=dB\nliveness=live\n\
         valence=val\nacousticness=acous\nspeechiness=spch\n",
    )
    .unwrap();
    let o = run(&[
        "ingest", "--input", csv.to_str().unwrap(),
        "--map", map.to_str().unwrap(),
        "--col", "popularity=pop",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("\"rows_accepted\": 1"));

    let o = run(&["ingest", "--input", csv.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown header"));

    let o = run(&["ingest", "--input", csv.to_str().unwrap(), "--col", "energy"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["report"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    let f = fixture("three_songs.csv");
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().join("r");
    let o = run(&[
        "report", "--input", f.to_str().unwrap(), "--out", out.to_str().unwrap(),
        "--analyses", "stats,astrology",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!out.exists());
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn report_corr_only() {
    let f = fixture("three_songs.csv");
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().join("r");
    let o = run(&[
        "report", "--input", f.to_str().unwrap(), "--out", out.to_str().unwrap(),
        "--analyses", "corr",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let mut names: Vec<String> = fs::read_dir(&out)
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    names.sort();
    assert_eq!(names, ["correlation_heatmap.svg", "correlation_matrix.csv", "manifest.json"]);

    let again = run(&[
        "report", "--input", f.to_str().unwrap(), "--out", out.to_str().unwrap(),
        "--analyses", "corr",
    ]);
    assert_eq!(again.status.code(), Some(3));
    let forced = run(&[
        "report", "--input", f.to_str().unwrap(), "--out", out.to_str().unwrap(),
        "--analyses", "corr", "--force",
    ]);
    assert_eq!(forced.status.code(), Some(0));
}

#[test]
fn report_all_lists_outputs_in_manifest() {
    let f = fixture("three_songs.csv");
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().join("r");
    let o = run(&[
        "report", "--input", f.to_str().unwrap(), "--out", out.to_str().unwrap(),
        "--analyses", "all", "--top-words", "5", "--feature", "energy", "--full-vocab",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let manifest = fs::read_to_string(out.join("manifest.json")).unwrap();
    assert_eq!(manifest.trim_end(), stdout(&o).trim_end());
    assert!(manifest.contains("fig6_genre_energy.svg"));
    assert!(manifest.contains("vocabulary.csv"));
    assert!(manifest.contains("\"top_words\": \"5\""));
}

#[test]
fn plot_from_sidecars() {
    let f = fixture("three_songs.csv");
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().join("r");
    let o = run(&["report", "--input", f.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));

    let cases = [
        ("hbar", "genre_means.csv", "bar"),
        ("hbar", "top_words.csv", "bar"),
        ("line", "fig2_trends.csv", "marker"),
        ("scatter_fit", "fig3_energy_danceability.csv", "fit"),
        ("heatmap", "cooc_adjacency.csv", "cell-text"),
        ("heatmap", "correlation_matrix.csv", "cell-text"),
    ];
    for (kind, data, class) in cases {
        let svg = tmp.path().join(format!("{kind}-{data}.svg"));
        let o = run(&[
            "plot", "--kind", kind,
            "--data", out.join(data).to_str().unwrap(),
            "--out", svg.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{kind} {data}: {}", stderr(&o));
        let text = fs::read_to_string(&svg).unwrap();
        let doc = roxmltree::Document::parse(&text).unwrap();
        assert!(
            doc.descendants().any(|n| n.attribute("class") == Some(class)),
            "{kind} {data} has no {class}"
        );
    }
}

#[test]
fn plot_reproduces_report_heatmap() {
    let f = fixture("three_songs.csv");
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().join("r");
    run(&["report", "--input", f.to_str().unwrap(), "--out", out.to_str().unwrap(), "--analyses", "cooc"]);
    let svg = tmp.path().join("again.svg");
    let o = run(&[
        "plot", "--kind", "heatmap",
        "--data", out.join("cooc_adjacency.csv").to_str().unwrap(),
        "--out", svg.to_str().unwrap(),
        "--title", "Song-level co-occurrence of top words",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(
        fs::read(&svg).unwrap(),
        fs::read(out.join("fig5_cooc_heatmap.svg")).unwrap()
    );
}

#[test]
fn plot_errors() {
    let tmp = tempfile::tempdir().unwrap();
    let data = tmp.path().join("d.csv");
    fs::write(&data, "label,value\na,x\n").unwrap();
    let svg = tmp.path().join("o.svg");
    let o = run(&["plot", "--kind", "hbar", "--data", data.to_str().unwrap(), "--out", svg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["plot", "--kind", "pie", "--data", data.to_str().unwrap(), "--out", svg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["plot", "--kind", "hbar", "--data", "/nonexistent.csv", "--out", svg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(!svg.exists());
}
