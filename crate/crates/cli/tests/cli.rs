use std::process::{Command, Output};

fn gapped(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gapped")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_repeats_of_aaa() {
    let o = gapped(&["enumerate", "--kind", "repeats", "--alpha", "2", "--text", "aaa"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "{\"left_beg\":1,\"left_end\":2,\"right_beg\":2,\"right_end\":3,\"period\":1,\"gap\":-1,\"arm_len\":2}\n\
         {\"left_beg\":1,\"left_end\":1,\"right_beg\":3,\"right_end\":3,\"period\":2,\"gap\":1,\"arm_len\":1}\n"
    );
    let o = gapped(&["enumerate", "--kind", "repeats", "--alpha", "2", "--text", "aaa", "--format", "tsv"]);
    assert_eq!(stdout(&o), "1\t2\t2\t3\t1\t-1\t2\n1\t1\t3\t3\t2\t1\t1\n");
}

#[test]
fn enumerate_ordinary_and_runs() {
    let o = gapped(&["enumerate", "--kind", "ordinary", "--text", "aba", "--format", "tsv"]);
    assert_eq!(stdout(&o), "1\t1\n1\t3\n3\t3\n");
    let o = gapped(&["enumerate", "--kind", "runs", "--text", "abaab"]);
    assert_eq!(stdout(&o), "{\"beg\":3,\"end\":4,\"period\":1,\"exponent\":\"2\"}\n");
}

#[test]
fn enumerate_palindromes_and_file_input() {
    let dir = std::env::temp_dir().join(format!("gapped-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("w.txt");
    std::fs::write(&path, "abcdba").unwrap();
    let o = gapped(&["enumerate", "--kind", "palindromes", "--alpha", "4", "--file", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("{\"left_beg\":1,\"left_end\":2,\"right_beg\":5,\"right_end\":6,\"period\":4,\"gap\":2,\"arm_len\":2}"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_and_io_errors_exit_2() {
    assert_eq!(gapped(&["enumerate", "--kind", "runs", "--file", "/definitely/not/here"]).status.code(), Some(2));
    assert_eq!(gapped(&["enumerate", "--kind", "nope", "--text", "a"]).status.code(), Some(2));
    assert_eq!(gapped(&["enumerate", "--kind", "runs"]).status.code(), Some(2));
    assert_eq!(gapped(&["enumerate", "--kind", "runs", "--text", "a", "--random", "3", "2", "1"]).status.code(), Some(2));
    assert_eq!(gapped(&["enumerate", "--kind", "repeats", "--alpha", "1/2", "--text", "aa"]).status.code(), Some(2));
    assert_eq!(gapped(&["points", "--which", "phi", "--gamma", "2", "--text", "aa"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let o = gapped(&["verify", "--alpha", "2", "--text", "aaa"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["all_pass"], true);
    assert_eq!(report["counts"]["repeats"], 2);
    assert_eq!(report["schema_version"], 1);

    assert_eq!(gapped(&["verify", "--alpha", "1", "--text", "aaa"]).status.code(), Some(2));
    assert_eq!(gapped(&["verify", "--alpha", "1.5", "--random", "1000", "2", "42"]).status.code(), Some(0));
    assert_eq!(
        gapped(&["verify", "--alpha", "2", "--beta-palindromes", "1/2", "--text", "aaa"]).status.code(),
        Some(2)
    );
}

#[test]
fn fuzz_passes_and_catches_injected_fault() {
    let o = gapped(&["fuzz", "--trials", "500", "--max-n", "40", "--sigma", "2", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = gapped(&["fuzz", "--trials", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("trials=0"));

    let o = gapped(&["fuzz", "--trials", "20", "--inject-fault"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let repro = text.lines().find_map(|l| l.strip_prefix("reproduce: gapped ")).expect("repro line");
    let again = gapped(&repro.split(' ').collect::<Vec<_>>());
    assert_eq!(again.status.code(), Some(1));
}

#[test]
fn points_examples() {
    let o = gapped(&["points", "--which", "phi", "--alpha", "2", "--text", "aaa"]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines[..2], ["{\"x\":2,\"y\":1}", "{\"x\":1,\"y\":2}"]);
    assert!(lines[2].contains("\"conflicts\":"));

    let o = gapped(&["points", "--which", "phi_t", "--alpha", "4", "--text", "abcdba", "--beta", "6/7", "--gamma", "1/28"]);
    assert_eq!(stdout(&o), "{\"x\":2,\"y\":3}\n{\"points\":1,\"gamma\":\"1/28\",\"conflicts\":0}\n");

    let o = gapped(&["points", "--which", "phi_t", "--alpha", "2", "--text", "ab", "--format", "tsv"]);
    assert_eq!(stdout(&o), "# points=0 gamma=1/14 conflicts=0\n");
}

#[test]
fn output_is_deterministic() {
    let args = ["enumerate", "--kind", "palindromes", "--alpha", "3", "--random", "300", "3", "11"];
    assert_eq!(gapped(&args).stdout, gapped(&args).stdout);
    let args = ["fuzz", "--trials", "30", "--seed", "3", "--inject-fault"];
    let a = gapped(&args);
    assert_eq!(a.stdout, gapped(&args).stdout);
    let mut single = std::process::Command::new(env!("CARGO_BIN_EXE_gapped"));
    single.env("GW_THREADS", "1").args(args);
    assert_eq!(a.stdout, single.output().unwrap().stdout);
}
