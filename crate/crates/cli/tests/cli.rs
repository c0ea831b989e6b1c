use std::process::{Command, Output};

fn tribo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tribo"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = tribo(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    tribo(args).status.code().unwrap()
}

#[test]
fn encode_zt_with_trace() {
    let out = stdout(&["encode-zt", "263", "--trace"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "110101010");
    assert!(lines.contains(&"floors 149 81 24 7 2"));
    assert!(lines.contains(&"indices 8 7 5 3 1"));
    assert!(lines.contains(&"remainders 263 114 33 9 2 0"));
}

#[test]
fn decoders() {
    assert_eq!(stdout(&["decode-zt", "10010110"]), "100\n");
    assert_eq!(stdout(&["decode-abc", "10020"]), "38\n");
    assert_eq!(stdout(&["encode-abc", "38"]), "10020\n");
}

#[test]
fn abc_chain() {
    assert_eq!(
        stdout(&["encode-abc", "38", "--chain"]),
        "10020\n[A, 11]\n[B, 6]\n[B, 3]\n[C, 0]\n[B, 0]\n"
    );
}

#[test]
fn convert_both_ways() {
    assert_eq!(stdout(&["convert", "--from", "zt", "100110"]), "02010\n");
    assert_eq!(stdout(&["convert", "--from", "abc", "02010"]), "100110\n");
    assert_eq!(
        stdout(&["convert", "--from", "zt", "100110", "--show-stages"]),
        "zt 100110\nhat 00110010\nabdx Bxx.BAB\nabc 02010\n"
    );
}

#[test]
fn tables_match_library() {
    let t3 = stdout(&["table", "3"]);
    assert_eq!(t3.lines().next(), Some("1 10"));
    assert_eq!(t3, tribo::tables::table3().unwrap());
    assert_eq!(stdout(&["table", "1"]), tribo::tables::table1().unwrap());
    assert_eq!(stdout(&["table", "2"]), tribo::tables::table2().unwrap());
}

#[test]
fn word_and_seq() {
    assert_eq!(stdout(&["word", "--len", "13"]), "0102010010201\n");
    assert_eq!(
        stdout(&["seq", "C", "--from", "0", "--to", "2"]),
        "0 3\n1 10\n2 16\n"
    );
    assert_eq!(stdout(&["seq", "B0", "--to", "0"]), "0 6\n");
    assert_eq!(stdout(&["seq", "B1", "--to", "0"]), "0 0\n");
    assert_eq!(stdout(&["seq", "B2", "--from", "3", "--to", "3"]), "3 22\n");
}

#[test]
fn validation_errors_exit_1() {
    assert_eq!(code(&["encode-zt", "0"]), 1);
    assert_eq!(code(&["decode-zt", "0111"]), 1);
    assert_eq!(code(&["decode-abc", "0100"]), 1);
    assert_eq!(code(&["convert", "--from", "abc", "0"]), 1);
    assert_eq!(code(&["encode-zt", "100", "--max-n", "99"]), 1);
    let err = String::from_utf8(tribo(&["encode-zt", "0"]).stderr).unwrap();
    assert!(err.contains("no ZT representation"));
}

#[test]
fn usage_errors_exit_3() {
    assert_eq!(code(&["frobnicate"]), 3);
    assert_eq!(code(&["table", "4"]), 3);
    assert_eq!(code(&["encode-zt", "abc"]), 3);
    assert_eq!(code(&["verify", "--checks", "nope"]), 3);
    assert_eq!(code(&["oeis", "--id", "A000045"]), 3);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn verify_text_and_json() {
    let out = stdout(&["verify", "--checks", "prop10,lemma9", "--limit", "500"]);
    assert!(out.starts_with("PASS prop10 [0, 500] violations=0"));
    assert!(out.contains("PASS lemma9"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let json = stdout(&[
        "verify",
        "--checks",
        "equivalence",
        "--limit",
        "200",
        "--json",
        "--output",
        path.to_str().unwrap(),
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v[0]["check_id"], "equivalence");
    assert_eq!(v[0]["passed"], true);
    assert_eq!(v[0]["violation_count"], 0);
    let written: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written[0]["range"]["end"], 200);
}

#[test]
fn oeis_bundled_and_custom_files() {
    let out = stdout(&["oeis", "--id", "A278040", "--limit", "100"]);
    assert!(out.starts_with("PASS oeis:A278040 [0, 99] violations=0"));

    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.txt");
    std::fs::write(&good, "# A278040\r\n0 1\r\n1 5\r\n2 8\r\n").unwrap();
    stdout(&["oeis", "--id", "A278040", "--bfile", good.to_str().unwrap()]);

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "0 1\n1 6\n").unwrap();
    assert_eq!(
        code(&["oeis", "--id", "A278040", "--bfile", bad.to_str().unwrap()]),
        2
    );

    let broken = dir.path().join("broken.txt");
    std::fs::write(&broken, "0 x\n").unwrap();
    assert_eq!(
        code(&[
            "oeis",
            "--id",
            "A278040",
            "--bfile",
            broken.to_str().unwrap()
        ]),
        1
    );
}

#[test]
fn oeis_data_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("b278039.txt"), "0 0\n1 2\n2 4\n3 6\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_tribo"))
        .args(["oeis", "--id", "A278039"])
        .env("TRIBO_DATA_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("PASS oeis:A278039 [0, 3]"));
}
