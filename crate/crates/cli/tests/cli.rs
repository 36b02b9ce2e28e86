use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use pmc_core::graph::ConflictGraph;
use pmc_core::instance::{write_instance, Instance};
use pmc_core::oracle::brute_force_makespan;

fn pmc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pmc"))
        .args(args)
        .env("PMC_LOG", "quiet")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, inst: &Instance) -> String {
    let path = dir.join(name);
    fs::write(&path, write_instance(inst)).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn triangle_on_two_machines_is_infeasible() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = Instance::new("k3", ConflictGraph::complete(3), vec![1, 2, 3], 2).unwrap();
    let file = write(dir.path(), "k3", &k3);
    let out = pmc(&["solve", &file]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("infeasible"));
}

#[test]
fn solve_matches_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let g = ConflictGraph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
    let inst = Instance::new("path6", g, vec![4, 7, 2, 5, 3, 6], 2).unwrap();
    let expected = brute_force_makespan(&inst).unwrap().unwrap();
    let file = write(dir.path(), "path6", &inst);
    for formulation in ["af", "rf"] {
        let out = pmc(&["solve", &file, "--formulation", formulation, "--csv", "--time-limit", "30"]);
        assert_eq!(out.status.code(), Some(0));
        let text = stdout(&out);
        let mut rd = csv::Reader::from_reader(text.as_bytes());
        let rec = rd.records().next().unwrap().unwrap();
        assert_eq!(&rec[3], "optimal");
        assert_eq!(rec[4].parse::<u64>().unwrap(), expected);
    }
    let oracle = pmc(&["oracle", &file]);
    assert_eq!(stdout(&oracle).trim(), format!("optimal {expected}"));
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(pmc(&["solve", "x", "--no-such-flag"]).status.code(), Some(64));
    assert_eq!(pmc(&["solve", "x", "--cuts", "sometimes"]).status.code(), Some(64));
    assert_eq!(pmc(&["generate", "gnp", "--n", "5", "--d", "1.5", "--m", "2"]).status.code(), Some(64));
    assert_eq!(pmc(&["solve", "/nonexistent/file"]).status.code(), Some(1));
}

#[test]
fn generated_files_are_reproducible() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for dir in [&a, &b] {
        let out = pmc(&[
            "generate", "gnp", "--n", "25", "--d", "0.5", "--interval", "a", "--m", "5", "--count", "10", "--seed", "7",
            "--out", dir.path().to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    for j in 1..=10 {
        let name = format!("rand_25_0.5_a_{j}");
        let x = fs::read_to_string(a.path().join(&name)).unwrap();
        assert_eq!(x, fs::read_to_string(b.path().join(&name)).unwrap());
    }
    assert_eq!(fs::read_dir(a.path()).unwrap().count(), 10);
}

#[test]
fn bipartite_generator_builds_the_complete_case() {
    let dir = tempfile::tempdir().unwrap();
    let out = pmc(&["generate", "bip", "--n", "100", "--d", "1", "--m", "3", "--out", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    let text = fs::read_to_string(dir.path().join("bip_100_1_1")).unwrap();
    let inst = pmc_core::parse_instance(&text).unwrap();
    assert_eq!(inst.graph().edge_count(), 50 * 50);
    assert_eq!(inst.machines(), 3);
    assert!(inst.times().iter().all(|&t| t == 1));
}

fn bench_rows(dir: &Path, extra: &[&str]) -> Vec<Vec<String>> {
    let mut args = vec!["bench", dir.to_str().unwrap(), "--time-limit", "20"];
    args.extend_from_slice(extra);
    let out = pmc(&args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    let mut rd = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(
        rd.headers().unwrap().iter().collect::<Vec<_>>(),
        ["instance", "formulation", "cuts", "status", "primal", "dual", "gap_pct", "nodes", "cuts_added", "time_s", "seed"]
    );
    rd.records().map(|r| r.unwrap().iter().map(String::from).collect()).collect()
}

#[test]
fn bench_reports_rows_and_summaries() {
    let dir = tempfile::tempdir().unwrap();
    let out = pmc(&[
        "generate", "gnp", "--n", "8", "--d", "0.3", "--m", "3", "--count", "5", "--seed", "3", "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    fs::write(dir.path().join("broken"), "p pmc 2\n").unwrap();

    let rows = bench_rows(dir.path(), &[]);
    let (data, summary): (Vec<_>, Vec<_>) = rows.into_iter().partition(|r| !r[0].starts_with("summary"));
    assert_eq!(data.len(), 6);
    let broken = data.iter().find(|r| r[0] == "broken").unwrap();
    assert_eq!(broken[3], "error");
    assert_eq!(summary.len(), 1);
    assert_eq!(summary[0][3], "unsolved=0/5");
    assert_eq!(summary[0][6], "");

    let two = bench_rows(dir.path(), &["--config", "rf:clique", "--config", "af:none"]);
    let data: Vec<_> = two.iter().filter(|r| !r[0].starts_with("summary")).collect();
    assert_eq!(data.len(), 12);
    assert!(data[..6].iter().all(|r| r[1] == "rf"));
    assert!(data[6..].iter().all(|r| r[1] == "af" && r[2] == "none"));

    // everything but the timing column repeats
    let strip = |rows: &[Vec<String>]| -> Vec<Vec<String>> {
        rows.iter().map(|r| r.iter().enumerate().filter(|(i, _)| *i != 9).map(|(_, v)| v.clone()).collect()).collect()
    };
    let again = bench_rows(dir.path(), &["--config", "rf:clique", "--config", "af:none", "--jobs", "2"]);
    assert_eq!(strip(&two), strip(&again));
}

#[test]
fn export_writes_mps() {
    let dir = tempfile::tempdir().unwrap();
    let inst = Instance::new("c5", ConflictGraph::cycle(5), vec![1; 5], 3).unwrap();
    let file = write(dir.path(), "c5", &inst);
    let out_path = dir.path().join("c5.mps");
    let out = pmc(&["export", &file, "--formulation", "af", "-o", out_path.to_str().unwrap()]);
    assert!(out.status.success());
    let mps = fs::read_to_string(out_path).unwrap();
    assert!(mps.starts_with("NAME"));
    assert!(mps.contains("ENDATA"));
}
