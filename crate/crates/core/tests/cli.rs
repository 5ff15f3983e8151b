use std::process::{Command, Output};

fn topolab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_topolab"))
        .args(args)
        .env_remove("TOPOLAB_ORDER_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn classify_json_a5() {
    let out = topolab(&["classify", "A5", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["order"], 60);
    assert_eq!(v["flags"]["arnautov"], true);
    assert_eq!(v["normal_subgroups"].as_array().unwrap().len(), 2);
}

#[test]
fn seed_is_echoed() {
    let out = topolab(&["--seed", "42", "classify", "C6", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["seed"], 42);
    assert_eq!(v["flags"]["taimanov"], false);
}

#[test]
fn classify_text_lists_witnesses() {
    let out = topolab(&["classify", "S4"]);
    let text = stdout(&out);
    assert!(text.contains("taimanov         yes"));
    assert!(text.contains("not arnautov: witness N#3"));
}

#[test]
fn semitop_with_steps() {
    let out = topolab(&["semitop", "Heis(3)", "--from", "0", "--to", "4", "--steps"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("semitopological  no"));
    assert!(text.contains("min steps        2"));

    let text = stdout(&topolab(&[
        "semitop", "S3", "--from", "0", "--to", "2", "--steps",
    ]));
    assert!(text.contains("min steps        none"));
}

#[test]
fn semitop_rejects_bad_index_and_incomparable_pair() {
    let out = topolab(&["semitop", "S3", "--from", "0", "--to", "9"]);
    assert_eq!(out.status.code(), Some(1));
    let out = topolab(&["semitop", "C2 x C2", "--from", "1", "--to", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not comparable"));
}

#[test]
fn lattice_writes_dot() {
    let path = std::env::temp_dir().join(format!("topolab-cli-{}.dot", std::process::id()));
    let out = topolab(&["lattice", "Heis(3)", "--dot", path.to_str().unwrap()]);
    assert!(out.status.success());
    let dot = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("semi:2"));
    assert_eq!(
        stdout(&out).lines().count(),
        dot.matches("[label = \"N#").count()
    );
}

#[test]
fn perm_lemma_and_oracle() {
    let out = topolab(&[
        "perm",
        "--degree",
        "4",
        "--gens",
        "(0 1)",
        "--check-lemma",
        "--oracle",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("trivial centralizer (criterion)  no"));
    assert!(text.contains("centralizing witness (2 3)"));
    assert!(text.contains("centralizer order (exhaustive)   4"));

    let out = topolab(&[
        "perm",
        "--degree",
        "5",
        "--gens",
        "(0 1),(0 1 2 3 4)",
        "--check-lemma",
    ]);
    assert!(stdout(&out).contains("trivial centralizer (criterion)  yes"));
}

#[test]
fn exit_codes() {
    assert_eq!(topolab(&["classify", "Heis("]).status.code(), Some(2));
    assert_eq!(topolab(&["classify", "D7"]).status.code(), Some(2));
    assert_eq!(
        topolab(&["perm", "--degree", "3", "--gens", "(0 1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        topolab(&["perm", "--degree", "9", "--gens", "(0 1)", "--oracle"])
            .status
            .code(),
        Some(3)
    );
    let out = Command::new(env!("CARGO_BIN_EXE_topolab"))
        .args(["classify", "S5"])
        .env("TOPOLAB_ORDER_CAP", "50")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn catalog_text_and_bound() {
    let text = stdout(&topolab(&["catalog", "--max-order", "8"]));
    assert!(text.lines().any(|l| l.starts_with("Q8 ")));
    assert!(!text.contains("A5"));
    let out = topolab(&["catalog", "--max-order", "12", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["order"].as_u64().unwrap() <= 12));
}
