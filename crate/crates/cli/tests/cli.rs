use std::fs;
use std::process::{Command, Output};

use lcsk_cli::report::PairReport;
use lcsk_core::Params;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn lcsk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lcsk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn pairwise_scores() {
    let o = lcsk(&["lcsk", "--k", "2", "--a", "TGCGTGTG", "--b", "GTTGTGCC"]);
    assert_eq!(o.status.code(), Some(0));
    let r: PairReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.score, 2);

    let o = lcsk(&[
        "edk", "--k", "2", "--a", "CTGCTTTG", "--b", "CTTGCTTT", "--format", "tsv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "metric\tk\tscore\nedk\t2\t3\n");

    let o = lcsk(&[
        "edk", "--k", "2", "--a", "TGCGTGTG", "--b", "GTTGTGCC", "--mode", "indel",
    ]);
    let r: PairReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.score, 8);
}

#[test]
fn degenerate_k_warns_but_succeeds() {
    let o = lcsk(&["lcsk", "--k", "5", "--a", "AB", "--b", "AB"]);
    assert_eq!(o.status.code(), Some(0));
    let r: PairReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.score, 0);
    assert!(
        stderr(&o).contains("exceeds the shorter input"),
        "{}",
        stderr(&o)
    );
}

#[test]
fn traceback_json_round_trips() {
    let (a, b) = ("CTGCTTTG", "CTTGCTTT");
    let p = Params::new(2).unwrap();
    let o = lcsk(&["lcsk", "--k", "2", "--a", a, "--b", b, "--traceback"]);
    let r: PairReport = serde_json::from_str(&stdout(&o)).unwrap();
    let chain = r.lcsk_result().unwrap();
    assert_eq!(chain.length, 3);
    chain.validate(a.as_bytes(), b.as_bytes(), p).unwrap();

    let o = lcsk(&["edk", "--k", "2", "--a", a, "--b", b, "--traceback"]);
    let text = stdout(&o);
    assert!(text.contains("\"op\":\"kmatch\""));
    let r: PairReport = serde_json::from_str(&text).unwrap();
    let script = r.edk_result().unwrap().unwrap();
    assert_eq!(script.distance, 3);
    script.validate(a.as_bytes(), b.as_bytes(), p).unwrap();
}

#[test]
fn file_inputs_and_uppercase() {
    let dir = tempfile::tempdir().unwrap();
    let fa = dir.path().join("a.fa");
    let txt = dir.path().join("b.txt");
    fs::write(&fa, ">x some description\ntgcg\ntgtg\n").unwrap();
    fs::write(&txt, "GTTGTGCC\n").unwrap();
    let a = format!("@{}", fa.display());
    let b = format!("@{}", txt.display());
    let o = lcsk(&["--uppercase", "lcsk", "--k", "2", "--a", &a, "--b", &b]);
    let r: PairReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.score, 2);
    let o = lcsk(&["lcsk", "--k", "2", "--a", &a, "--b", &b]);
    let r: PairReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.score, 0);
}

#[test]
fn exit_codes() {
    assert_eq!(
        lcsk(&["lcsk", "--k", "0", "--a", "A", "--b", "A"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        lcsk(&["lcsk", "--a", "A", "--b", "A"]).status.code(),
        Some(1)
    );
    assert_eq!(lcsk(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(lcsk(&["--help"]).status.code(), Some(0));
    let o = lcsk(&[
        "lcsk",
        "--k",
        "2",
        "--a",
        "@/nonexistent/seq.txt",
        "--b",
        "A",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn matrix_output() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.fa");
    fs::write(&input, ">s1\nTGCGTGTG\n>s2\nGTTGTGCC\n").unwrap();
    let o = lcsk(&["matrix", "--k", "2", "--input", input.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "id\ts1\ts2\ns1\t4\t2\ns2\t2\t4\n");

    let out = dir.path().join("m.tsv");
    let o = lcsk(&[
        "matrix",
        "--metric",
        "edk",
        "--k",
        "2",
        "--input",
        input.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        fs::read_to_string(&out).unwrap(),
        "id\ts1\ts2\ns1\t0\t6\ns2\t6\t0\n"
    );

    let o = lcsk(&[
        "matrix",
        "--k",
        "2",
        "--input",
        input.to_str().unwrap(),
        "--out",
        "/nonexistent-dir/m.tsv",
    ]);
    assert_eq!(o.status.code(), Some(2));

    fs::write(&input, ">a\nAC\n>a\nGT\n").unwrap();
    let o = lcsk(&["matrix", "--k", "2", "--input", input.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("duplicate"));
}

#[test]
fn matrix_is_deterministic_across_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("rand.fa");
    let mut rng = StdRng::seed_from_u64(20);
    let mut fasta = String::new();
    for r in 0..20 {
        let len = rng.random_range(20..80);
        let s: String = (0..len)
            .map(|_| ['A', 'C', 'G', 'T'][rng.random_range(0..4)])
            .collect();
        fasta.push_str(&format!(">r{r}\n{s}\n"));
    }
    fs::write(&input, fasta).unwrap();
    for metric in ["lcsk", "edk"] {
        let run = |jobs: &str| {
            let o = lcsk(&[
                "matrix",
                "--metric",
                metric,
                "--k",
                "3",
                "--jobs",
                jobs,
                "--input",
                input.to_str().unwrap(),
            ]);
            assert_eq!(o.status.code(), Some(0));
            o.stdout
        };
        let one = run("1");
        assert_eq!(one, run("8"));
        assert_eq!(String::from_utf8(one).unwrap().lines().count(), 21);
    }
}

#[test]
fn oracle_check_runs() {
    let o = lcsk(&[
        "oracle-check",
        "--metric",
        "lcsk",
        "--k",
        "1,2,3",
        "--max-len",
        "6",
        "--alphabet",
        "AC",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("mismatches\t0"));

    let o = lcsk(&[
        "oracle-check",
        "--metric",
        "edk",
        "--k",
        "2",
        "--max-len",
        "8",
        "--trials",
        "10000",
        "--seed",
        "42",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("comparisons\t10000"));

    let o = lcsk(&["oracle-check", "--max-len", "30"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bench_single_size() {
    let o = lcsk(&["bench", "--sizes", "500", "--repeats", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(2).collect();
    assert_eq!(rows.len(), 1);
    assert!(rows[0].starts_with("500\t"));
    assert!(rows[0].ends_with("\t-"));
    assert_eq!(
        lcsk(&["bench", "--sizes", "2000,1000"]).status.code(),
        Some(1)
    );
}
