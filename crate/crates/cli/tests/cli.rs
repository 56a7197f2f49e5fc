//! End-to-end tests of the binary: output formats, exit codes, the result
//! cache, and scheduling determinism.

use powideal_cli::cache::VerificationRecord;
use powideal_cli::output::*;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_powideal"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn assert_code(out: &Output, code: i32) {
    assert_eq!(out.status.code(), Some(code), "stdout: {} stderr: {}", stdout(out), stderr(out));
}

#[test]
fn hf_table_text_is_the_bare_value_list() {
    let out = run(&["hf", "--n", "3", "--k", "2", "--d", "5"]);
    assert_code(&out, 0);
    assert_eq!(stdout(&out).trim(), "1,4,10,20,35,48,52,40,15,0");
}

#[test]
fn hf_single_degree() {
    let out = run(&["hf", "--n", "2", "--k", "4", "--d", "8", "--degree", "28"]);
    assert_code(&out, 0);
    assert_eq!(stdout(&out).trim(), "195");
    assert!(stderr(&out).contains("conjectured"));
}

#[test]
fn hf_json_schema_and_round_trip() {
    let out = run(&["hf", "--n", "3", "--k", "2", "--d", "5", "--format", "json"]);
    assert_code(&out, 0);
    let text = stdout(&out);
    let report: HfReport = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(report.params, ParamsOut { n: 3, k: 2, d: 5 });
    assert_eq!(report.method, "proved-k2");
    assert!(!report.conjectural);
    assert_eq!(report.values.len(), 10);
    assert_eq!(report.values[6], "52");
    // parse(print(x)) = x
    assert_eq!(serde_json::to_string(&report).unwrap(), text.trim());

    let out = run(&["hf", "--n", "2", "--k", "4", "--d", "8", "--degree", "28", "--format", "json"]);
    let report: HfReport = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!(report.conjectural);
    assert_eq!(report.degree, Some(28));
    assert_eq!(report.values, vec!["195".to_string()]);
}

#[test]
fn json_round_trips_for_every_report_type() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["series", "--n", "2", "--k", "2", "--d", "4", "--format", "json"],
        vec!["betti", "--n", "3", "--k", "2", "--d", "2", "--format", "json"],
        vec!["gens", "--n", "2", "--k", "4", "--d", "3", "--format", "json"],
        vec!["fatpoints", "--n", "2", "--k", "2", "--d", "2", "--format", "json"],
        vec!["fatpoints", "--n", "2", "--k", "2", "--d", "2", "--gens", "--format", "json"],
        vec!["fatpoints", "--n", "2", "--k", "2", "--d", "1", "--degree", "2", "--format", "json"],
        vec!["verify", "--n", "1", "--k", "2", "--d", "2:4", "--format", "json"],
    ];
    for args in cases {
        let out = run(&args);
        assert_code(&out, 0);
        let text = stdout(&out);
        let trimmed = text.trim();
        let reparsed = match args[0] {
            "series" => serde_json::to_string(&serde_json::from_str::<SeriesReport>(trimmed).unwrap()).unwrap(),
            "betti" => serde_json::to_string(&serde_json::from_str::<BettiReport>(trimmed).unwrap()).unwrap(),
            "gens" => serde_json::to_string(&serde_json::from_str::<GensReport>(trimmed).unwrap()).unwrap(),
            "verify" => serde_json::to_string(&serde_json::from_str::<VerifyReport>(trimmed).unwrap()).unwrap(),
            "fatpoints" if args.contains(&"--gens") => {
                serde_json::to_string(&serde_json::from_str::<FatGensReport>(trimmed).unwrap()).unwrap()
            }
            "fatpoints" if args.contains(&"--degree") => {
                serde_json::to_string(&serde_json::from_str::<HfReport>(trimmed).unwrap()).unwrap()
            }
            "fatpoints" => serde_json::to_string(&serde_json::from_str::<SeriesReport>(trimmed).unwrap()).unwrap(),
            other => panic!("unhandled case {other}"),
        };
        assert_eq!(reparsed, trimmed, "round trip for {args:?}");
    }
}

#[test]
fn csv_has_the_fixed_header() {
    for args in [
        vec!["hf", "--n", "1", "--k", "2", "--d", "2", "--format", "csv"],
        vec!["gens", "--n", "2", "--k", "4", "--d", "3", "--format", "csv"],
        vec!["betti", "--n", "2", "--k", "2", "--d", "2", "--format", "csv"],
        vec!["verify", "--n", "1", "--k", "3", "--d", "3", "--format", "csv"],
    ] {
        let out = run(&args);
        assert_code(&out, 0);
        let text = stdout(&out);
        assert!(text.starts_with("n,k,d,degree,method,value\n"), "{args:?} -> {text}");
    }
    let out = run(&["gens", "--n", "2", "--k", "4", "--d", "3", "--format", "csv"]);
    assert_eq!(stdout(&out).trim(), "n,k,d,degree,method,value\n2,4,3,9,gens,16");
}

#[test]
fn series_examples() {
    let out = run(&["series", "--n", "1", "--k", "2", "--d", "3"]);
    assert_code(&out, 0);
    assert_eq!(stdout(&out).trim(), "1,0,0,-2,0,0,1");
    // closed form out of range -> exit 4; --from-hf rescues it
    let out = run(&["series", "--n", "4", "--k", "2", "--d", "5"]);
    assert_code(&out, 4);
    let out = run(&["series", "--n", "4", "--k", "2", "--d", "5", "--from-hf"]);
    assert_code(&out, 0);
    // conjectured table behind --from-hf for k > 2
    let out = run(&["series", "--n", "2", "--k", "3", "--d", "2", "--from-hf", "--format", "json"]);
    assert_code(&out, 0);
    let report: SeriesReport = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!(report.conjectural);
    assert_eq!(report.denom_exponent, 3);
}

#[test]
fn invalid_parameters_exit_2() {
    assert_code(&run(&["hf", "--n", "2", "--k", "1", "--d", "3"]), 2);
    assert_code(&run(&["hf", "--n", "2", "--k", "2", "--d", "0"]), 2);
    assert_code(&run(&["hf", "--n", "2", "--k", "3", "--d", "3", "--method", "nope"]), 2);
    assert_code(&run(&["hf", "--n", "2", "--k", "3", "--d", "3", "--method", "proved-k2"]), 2);
    assert_code(&run(&["betti", "--n", "0", "--k", "2", "--d", "1"]), 2);
    assert_code(&run(&["fatpoints", "--n", "2", "--k", "2", "--d", "1", "--oracle"]), 2);
    assert_code(&run(&["verify", "--n", "2", "--k", "2", "--d", "5:3"]), 2);
    assert_code(&run(&["verify", "--n", "2", "--k", "2", "--d", "3", "--methods", "bogus"]), 2);
    assert_code(&run(&["hf", "--n", "2", "--k", "2", "--d", "3", "--jobs", "0"]), 2);
    // clap usage errors
    assert_code(&run(&["hf", "--n", "2"]), 2);
    assert_code(&run(&["frobnicate"]), 2);
}

#[test]
fn resource_guard_exit_3() {
    let out = run(&["hf", "--n", "3", "--k", "2", "--d", "5", "--method", "oracle", "--max-block-entries", "10"]);
    assert_code(&out, 3);
    assert!(stderr(&out).contains("resource guard"));
    // verify without --skip-guarded fails, with it succeeds
    let out = run(&["verify", "--n", "3", "--k", "2", "--d", "5", "--methods", "proved-k2,oracle", "--max-block-entries", "10"]);
    assert_code(&out, 3);
    let out = run(&[
        "verify", "--n", "3", "--k", "2", "--d", "5", "--methods", "proved-k2,oracle", "--max-block-entries", "10",
        "--skip-guarded",
    ]);
    assert_code(&out, 0);
    assert!(stdout(&out).contains("guarded="));
}

#[test]
fn oracle_method_agrees_through_the_cli() {
    let out = run(&["hf", "--n", "2", "--k", "2", "--d", "3", "--method", "oracle"]);
    assert_code(&out, 0);
    assert_eq!(stdout(&out).trim(), "1,3,6,6,3,0");
}

#[test]
fn verify_writes_reads_and_resumes_the_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("sweep.jsonl");
    let args = |c: &Path| {
        vec![
            "verify".to_string(),
            "--n".into(), "1:2".into(),
            "--k".into(), "2:3".into(),
            "--d".into(), "2:4".into(),
            "--methods".into(), "conjectured,comp,duality".into(),
            "--cache".into(), c.display().to_string(),
        ]
    };
    let out = bin().args(args(&cache)).output().unwrap();
    assert_code(&out, 0);
    let first = stdout(&out);
    assert!(first.contains("disagreements=0"));
    assert!(first.contains("cached=0"));
    let bytes_after_first = std::fs::metadata(&cache).unwrap().len();
    assert!(bytes_after_first > 0);

    // every record parses; records on the comparison window carry
    // agreement info (methods outside their window have no partners)
    let raw = std::fs::read_to_string(&cache).unwrap();
    let mut n_records = 0;
    for line in raw.lines() {
        let rec: VerificationRecord = serde_json::from_str(line).unwrap();
        assert!(!rec.value.is_empty());
        let gen_degree = (rec.k - 1) * rec.d;
        let in_window = rec.degree >= gen_degree && rec.degree + 2 <= rec.k * rec.d;
        if in_window {
            assert!(rec.agrees_with.as_ref().is_some_and(|a| !a.is_empty()), "{rec:?}");
        }
        n_records += 1;
    }
    assert!(n_records > 0);

    // second run: everything cached, nothing appended, byte-identical file
    let out = bin().args(args(&cache)).output().unwrap();
    assert_code(&out, 0);
    assert!(stdout(&out).contains("computed=0"));
    assert_eq!(std::fs::metadata(&cache).unwrap().len(), bytes_after_first);

    // corrupt trailing line is tolerated, warned about, and healed
    {
        use std::io::Write;
        let mut f = std::fs::OpenOptions::new().append(true).open(&cache).unwrap();
        f.write_all(b"{\"half a rec").unwrap();
    }
    let out = bin().args(args(&cache)).output().unwrap();
    assert_code(&out, 0);
    assert!(stderr(&out).contains("corrupt trailing cache line"));
    assert_eq!(std::fs::metadata(&cache).unwrap().len(), bytes_after_first);
}

#[test]
fn poisoned_cache_value_surfaces_as_disagreement() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("poison.jsonl");
    let rec = VerificationRecord {
        n: 1,
        k: 3,
        d: 3,
        degree: 6,
        method: "conjectured".into(),
        value: "999".into(),
        agrees_with: None,
        timestamp: 0,
        tool_version: "test".into(),
    };
    std::fs::write(&cache, format!("{}\n", serde_json::to_string(&rec).unwrap())).unwrap();
    let out = bin()
        .args([
            "verify", "--n", "1", "--k", "3", "--d", "3", "--methods", "conjectured,comp",
            "--cache", cache.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_code(&out, 1);
    let text = stdout(&out);
    assert!(text.contains("disagreements=1"), "{text}");
    assert!(text.contains("disagreement: n=1 k=3 d=3 degree=6"), "{text}");
    assert!(text.contains("reproduce: powideal verify"), "{text}");
}

#[test]
fn parallel_and_serial_sweeps_print_identical_output() {
    let args = [
        "verify", "--n", "1:3", "--k", "2:4", "--d", "2:8", "--methods", "conjectured,comp,duality",
    ];
    let serial = bin().args(args).args(["--jobs", "1"]).output().unwrap();
    let parallel = bin().args(args).args(["--jobs", "4"]).output().unwrap();
    assert_code(&serial, 0);
    assert_code(&parallel, 0);
    assert_eq!(stdout(&serial), stdout(&parallel));
    let csv_serial = bin().args(args).args(["--jobs", "1", "--format", "csv"]).output().unwrap();
    let csv_parallel = bin().args(args).args(["--jobs", "4", "--format", "csv"]).output().unwrap();
    assert_eq!(stdout(&csv_serial), stdout(&csv_parallel));
}

#[test]
fn cache_path_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("env.jsonl");
    let out = bin()
        .args(["verify", "--n", "1", "--k", "2", "--d", "3", "--methods", "conjectured,comp"])
        .env("POWIDEAL_CACHE", &cache)
        .output()
        .unwrap();
    assert_code(&out, 0);
    assert!(cache.exists());

    // explicit flag wins over the environment
    let flagged = dir.path().join("flagged.jsonl");
    let out = bin()
        .args([
            "verify", "--n", "1", "--k", "2", "--d", "4", "--methods", "conjectured,comp",
            "--cache", flagged.to_str().unwrap(),
        ])
        .env("POWIDEAL_CACHE", dir.path().join("ignored.jsonl"))
        .output()
        .unwrap();
    assert_code(&out, 0);
    assert!(flagged.exists());
    assert!(!dir.path().join("ignored.jsonl").exists());
}

#[test]
fn fatpoints_series_and_oracle_agree_via_cli() {
    let out = run(&["fatpoints", "--n", "2", "--k", "2", "--d", "2"]);
    assert_code(&out, 0);
    assert_eq!(stdout(&out).trim(), "1,0,0,0,-3,0,2");
    for m in ["0", "3", "5", "8"] {
        let series = run(&["fatpoints", "--n", "2", "--k", "2", "--d", "2", "--degree", m]);
        let oracle = run(&["fatpoints", "--n", "2", "--k", "2", "--d", "2", "--degree", m, "--oracle"]);
        assert_eq!(stdout(&series), stdout(&oracle), "m={m}");
    }
}
