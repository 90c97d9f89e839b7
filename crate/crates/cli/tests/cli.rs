use std::process::{Command, Output};

fn lcseq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lcseq"))
        .args(args)
        .env_remove("LCSEQ_MAX_ORACLE")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = lcseq(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    lcseq(args).status.code().unwrap()
}

#[test]
fn lc_of_impulse_at_end() {
    assert_eq!(stdout(&["lc", "--p", "2", "--seq", "0 0 1"]), "3\n");
    assert_eq!(
        stdout(&["lc", "--p", "2", "--seq", "0 0 1", "--oracle"]),
        "3\n"
    );
}

#[test]
fn count_ball() {
    assert_eq!(
        stdout(&["count", "--q", "2", "--n", "5", "--r", "2", "--method", "closed"]),
        "11\n"
    );
    for method in ["recur", "sum", "brute"] {
        assert_eq!(
            stdout(&["count", "--q", "2", "--n", "5", "--r", "2", "--method", method]),
            "11\n"
        );
    }
    assert_eq!(
        stdout(&["count", "--q", "2", "--n", "5", "--r", "2", "--exact"]),
        "8\n"
    );
    assert_eq!(
        stdout(&["count", "--q", "2", "--n", "5", "--r", "2", "--u", "0"]),
        "6\n"
    );
    assert_eq!(
        stdout(&["count", "--q", "2", "--n", "5", "--r", "2", "--u", "1", "--method", "brute"]),
        "4\n"
    );
}

#[test]
fn histogram_methods_agree() {
    let closed = stdout(&["count", "--q", "2", "--n", "4"]);
    assert_eq!(closed, "0,1\n1,2\n2,8\n3,4\n4,1\n");
    for method in ["recur", "sum", "brute"] {
        assert_eq!(
            stdout(&["count", "--q", "2", "--n", "4", "--method", method]),
            closed
        );
    }
    let q4 = stdout(&["count", "--q", "4", "--n", "3"]);
    assert_eq!(
        stdout(&["count", "--q", "4", "--n", "3", "--method", "brute"]),
        q4
    );
}

#[test]
fn distance() {
    assert_eq!(
        stdout(&["dist", "--p", "2", "--a", "1 1 1 1", "--b", "1 1 1 1"]),
        "0\n"
    );
    assert_eq!(
        stdout(&["dist", "--p", "2", "--a", "1 1 1 1", "--b", "1 1 1 0"]),
        "4\n"
    );
    assert_eq!(code(&["dist", "--p", "2", "--a", "1 1", "--b", "1 1 1"]), 1);
}

#[test]
fn bm_report() {
    assert_eq!(
        stdout(&["bm", "--p", "2", "--seq", "1 1 0 1 1 0"]),
        "L: 2\nconnection: 1 1 1\nfeedback: 1 1 1\n"
    );
}

#[test]
fn generate() {
    assert_eq!(
        stdout(&["gen", "--p", "3", "--coeffs", "2", "--init", "1", "--n", "4"]),
        "1 2 1 2\n"
    );
    assert_eq!(
        stdout(&[
            "gen",
            "--p",
            "2",
            "--m",
            "2",
            "--modulus",
            "1,1,1",
            "--coeffs",
            "[0,1]",
            "--init",
            "[1,0]",
            "--n",
            "4"
        ]),
        "[1,0] [0,1] [1,1] [1,0]\n"
    );
}

#[test]
fn oss_round_trip_and_failure() {
    assert_eq!(
        stdout(&["oss", "encode", "--p", "2", "--n", "6", "--k", "2", "--msg", "1 1"]),
        "0 0 0 0 1 1\n"
    );
    assert_eq!(
        stdout(&[
            "oss",
            "decode",
            "--p",
            "2",
            "--n",
            "6",
            "--k",
            "2",
            "--seq",
            "1 0 1 0 0 1"
        ]),
        "message: 1 1\nerror: 1 0 1 0 1 0\ncodeword: 0 0 0 0 1 1\n"
    );
    assert_eq!(
        code(&[
            "oss",
            "decode",
            "--p",
            "2",
            "--n",
            "6",
            "--k",
            "2",
            "--seq",
            "0 0 0 1 1 1"
        ]),
        2
    );
}

#[test]
fn rs_round_trip_and_failure() {
    assert_eq!(
        stdout(&["rs", "encode", "--p", "5", "--k", "1", "--msg", "2"]),
        "2 2 2 2\n"
    );
    assert_eq!(
        stdout(&["rs", "decode", "--p", "5", "--k", "1", "--seq", "3 2 2 2"]),
        "message: 2\nerror: 1 0 0 0\ncodeword: 2 2 2 2\n"
    );
    assert_eq!(
        code(&["rs", "decode", "--p", "5", "--k", "1", "--seq", "3 3 2 2"]),
        2
    );
}

#[test]
fn bounds() {
    assert_eq!(
        stdout(&["bound", "--sphere", "--q", "2", "--n", "7", "--d", "3"]),
        "42\n"
    );
    assert_eq!(
        stdout(&["bound", "--singleton", "--q", "2", "--n", "7", "--d", "3"]),
        "32\n"
    );
    assert_eq!(code(&["bound", "--q", "2", "--n", "7", "--d", "3"]), 1);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["lc", "--p", "2", "--seq", "0 2"]), 1);
    assert_eq!(code(&["lc", "--p", "4", "--seq", "1"]), 1);
    assert_eq!(code(&["nonsense"]), 1);
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(
        code(&["count", "--q", "2", "--n", "30", "--method", "brute"]),
        3
    );
    assert_eq!(code(&["verify", "--suite", "bogus"]), 1);
}

#[test]
fn guard_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_lcseq"))
        .args(["count", "--q", "2", "--n", "6", "--method", "brute"])
        .env("LCSEQ_MAX_ORACLE", "32")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let forced = Command::new(env!("CARGO_BIN_EXE_lcseq"))
        .args([
            "--force", "count", "--q", "2", "--n", "6", "--method", "brute",
        ])
        .env("LCSEQ_MAX_ORACLE", "32")
        .output()
        .unwrap();
    assert_eq!(forced.status.code(), Some(0));
}

#[test]
fn non_prime_power_warns() {
    let out = lcseq(&["count", "--q", "6", "--n", "3", "--r", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a prime power"));
}

#[test]
fn sequence_file_input() {
    let dir = std::env::temp_dir().join(format!("lcseq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("seqs.txt");
    std::fs::write(&path, "# binary\n0 0 1\n1 1 1 1\n\n1 0 1 1\n").unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&["lc", "--p", "2", "--in", p]), "3\n1\n2\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn deterministic_output() {
    let args = ["count", "--q", "3", "--n", "7", "--method", "sum"];
    assert_eq!(lcseq(&args).stdout, lcseq(&args).stdout);
    let args = ["bm", "--p", "5", "--seq", "1 4 2 0 3 3 1"];
    assert_eq!(lcseq(&args).stdout, lcseq(&args).stdout);
}

#[test]
fn verify_all_passes() {
    let out = lcseq(&["verify", "--suite", "all"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.lines().count() >= 10);
    assert!(text.lines().all(|l| l.starts_with("PASS ")));
}
