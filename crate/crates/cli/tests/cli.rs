use std::path::Path;
use std::process::{Command, Output};

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_straightness"))
        .args(args)
        .current_dir(dir)
        .env_remove("STRAIGHTNESS_THREADS")
        .output()
        .unwrap()
}

fn read(dir: &Path, name: &str) -> String {
    std::fs::read_to_string(dir.join(name)).unwrap()
}

fn graph_counts(dir: &Path, name: &str) -> (usize, usize) {
    let doc: serde_json::Value = serde_json::from_str(&read(dir, name)).unwrap();
    (
        doc["nodes"].as_array().unwrap().len(),
        doc["edges"].as_array().unwrap().len(),
    )
}

#[test]
fn gen_commands() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let out = run(d, &["gen", "rect", "--size", "4", "--out", "g.json"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        "nodes: 25, edges: 40"
    );
    assert_eq!(graph_counts(d, "g.json"), (25, 40));
    assert!(!read(d, "g.json").contains("length"));

    assert!(run(
        d,
        &["gen", "radial", "--radii", "4", "--rings", "1", "-o", "r.json"]
    )
    .status
    .success());
    assert_eq!(graph_counts(d, "r.json"), (5, 8));

    let bad = run(
        d,
        &[
            "gen", "radial", "--radii", "2", "--rings", "1", "-o", "bad.json",
        ],
    );
    assert_eq!(bad.status.code(), Some(1));
    assert!(!d.join("bad.json").exists());
}

#[test]
fn curve_rows() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert!(run(
        d,
        &["curve", "--steps", "5", "-o", "c.csv", "--svg", "c.svg"]
    )
    .status
    .success());
    let csv = read(d, "c.csv");
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("alpha,straightness,network,k"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 25);
    assert_eq!(rows[0], ["0", "1.00000000", "rectilinear", "4"]);
    let k4_end = rows
        .iter()
        .find(|r| r[3] == "4" && r[2] == "radial" && r[0] == "0.785398163397")
        .unwrap();
    assert_eq!(k4_end[1], "0.414213562");

    let value = |k: &str, i: usize| -> f64 {
        rows.iter()
            .filter(|r| r[2] == "radial" && r[3] == k)
            .nth(i)
            .unwrap()[1]
            .parse()
            .unwrap()
    };
    for i in 0..5 {
        assert!(value("16", i) >= value("3", i));
    }

    let svg = read(d, "c.svg");
    assert_eq!(svg.matches("<polyline").count(), 5);
    assert!(svg.contains("stroke-dasharray"));
}

#[test]
fn curve_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(
        run(d, &["curve", "--steps", "1", "-o", "c.csv"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(d, &["curve", "--kinds", "hex", "-o", "c.csv"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(d, &["curve", "--kinds", "2", "-o", "c.csv"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn sweeps() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert!(run(d, &["sweep-rect", "--sizes", "1..2", "-o", "rect.csv"])
        .status
        .success());
    assert_eq!(
        read(d, "rect.csv").lines().take(2).collect::<Vec<_>>(),
        [
            "squares_per_side,pair_count,mean,std_dev,skipped",
            "1,6,0.902368927,0.138071187,0"
        ]
    );

    assert!(run(
        d,
        &[
            "sweep-radial",
            "--radii",
            "4..5",
            "--rings",
            "1",
            "-o",
            "radial.csv",
            "--svg",
            "radial.svg"
        ]
    )
    .status
    .success());
    let csv = read(d, "radial.csv");
    let lines: Vec<_> = csv.lines().collect();
    assert_eq!(lines[0], "radii,rings,pair_count,mean,std_dev,skipped");
    assert!(lines[1].starts_with("4,1,10,1.00000000,"));
    assert_eq!(lines.len(), 3);
    // one ring count: the series is a single polyline
    assert_eq!(read(d, "radial.svg").matches("<polyline").count(), 1);

    assert_eq!(
        run(d, &["sweep-rect", "--sizes", "1..51", "-o", "x.csv"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(d, &["sweep-radial", "--radii", "2..4", "-o", "x.csv"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn straightness_of_imported_graph() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    std::fs::write(
        d.join("split.json"),
        r#"{"nodes":[{"id":0,"x":0,"y":0},{"id":1,"x":1,"y":0},{"id":2,"x":1,"y":1},{"id":3,"x":5,"y":5}],
            "edges":[{"u":0,"v":1},{"u":1,"v":2}]}"#,
    )
    .unwrap();
    let out = run(d, &["straightness", "split.json", "--pairs", "pairs.csv"]);
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("pairs: 3 (skipped 3)"), "{stdout}");
    let pairs = read(d, "pairs.csv");
    assert!(pairs.starts_with("u,v,d_spatial,d_geodesic,straightness\n"));
    assert!(pairs.contains("\n0,3,7.07106781187,inf,\n"), "{pairs}");

    assert_eq!(
        run(d, &["straightness", "split.json", "--strict"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(d, &["straightness", "missing.json"]).status.code(),
        Some(3)
    );
    std::fs::write(d.join("bad.json"), "{").unwrap();
    assert_eq!(run(d, &["straightness", "bad.json"]).status.code(), Some(1));
}

#[test]
fn validate_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["validate"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    for name in [
        "symmetry",
        "rotation",
        "oracle",
        "limit",
        "center-curve",
        "center-radial",
        "homothety",
    ] {
        assert!(stdout.contains(name), "{stdout}");
    }
}

#[test]
fn plot_command() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    std::fs::write(
        d.join("t.csv"),
        "n,value,label\n1,0.5,a\n2,0.6,a\n1,0.7,b\n",
    )
    .unwrap();
    let out = run(
        d,
        &[
            "plot", "t.csv", "-o", "t.svg", "--x", "n", "--y", "value", "--group", "label",
        ],
    );
    assert!(out.status.success());
    let svg = read(d, "t.svg");
    assert_eq!(svg.matches("<polyline").count(), 1);
    assert_eq!(svg.matches("<circle").count(), 1);

    assert_eq!(
        run(d, &["plot", "t.csv", "-o", "u.svg"]).status.code(),
        Some(1)
    );
    assert_eq!(
        run(d, &["plot", "t.csv", "-o", "u.svg", "--x", "n"])
            .status
            .code(),
        Some(1)
    );
    std::fs::write(d.join("empty.csv"), "n,value\n").unwrap();
    assert_eq!(
        run(
            d,
            &[
                "plot",
                "empty.csv",
                "-o",
                "e.svg",
                "--x",
                "n",
                "--y",
                "value"
            ]
        )
        .status
        .code(),
        Some(1)
    );
}

#[test]
fn thread_variable_is_validated() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_straightness"))
        .args(["gen", "rect", "--size", "1", "-o", "g.json"])
        .current_dir(dir.path())
        .env("STRAIGHTNESS_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
