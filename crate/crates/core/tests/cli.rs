use std::process::Command;

fn randmis(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_randmis"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn field<'a>(stdout: &'a str, key: &str) -> &'a str {
    stdout
        .lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(' ')))
        .unwrap_or_else(|| panic!("no {key} in {stdout}"))
}

#[test]
fn gen_writes_the_reference_graph() {
    let (code, out, _) = randmis(&["gen", "--n", "4", "--p", "0.5", "--seed", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "4 2\n1 2\n1 3\n");
}

#[test]
fn mis_algorithms_agree_on_a_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    let path = path.to_str().unwrap();
    assert_eq!(
        randmis(&["gen", "--n", "15", "--p", "0.4", "--seed", "9", "--out", path]).0,
        0
    );
    let sizes: Vec<String> = ["branch", "brute", "oracle"]
        .iter()
        .map(|algo| {
            let (code, out, err) = randmis(&["mis", "--input", path, "--p", "0.4", "--algo", algo]);
            assert_eq!(code, 0, "{err}");
            field(&out, "size").to_string()
        })
        .collect();
    assert!(sizes.windows(2).all(|w| w[0] == w[1]), "{sizes:?}");
}

#[test]
fn exit_codes() {
    assert_eq!(randmis(&["mis", "--n", "30", "--algo", "brute"]).0, 2);
    assert_eq!(
        randmis(&["lcs", "--n", "12", "--m", "12", "--brute", "--cap", "8"]).0,
        2
    );
    assert_eq!(randmis(&["mis", "--no-such-flag"]).0, 1);
    assert_eq!(
        randmis(&["mis", "--n", "5", "--p", "0.5", "--epsilon", "0.7"]).0,
        1
    );
    assert_eq!(randmis(&["mis", "--input", "/nonexistent/graph.txt"]).0, 1);
    assert_eq!(randmis(&["--help"]).0, 0);
}

#[test]
fn malformed_edge_list_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "3 2\n0 1\n1 1\n").unwrap();
    let (code, _, err) = randmis(&["mis", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn decide_lcs_approx_and_mc_run() {
    let (code, out, _) = randmis(&[
        "decide",
        "--n",
        "5",
        "--p",
        "0.5",
        "--epsilon",
        "0.25",
        "--k",
        "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "answer"), "yes");

    let (code, out, _) = randmis(&["lcs", "--n", "5", "--m", "4", "--seed", "3"]);
    assert_eq!(code, 0);
    assert!(field(&out, "size").parse::<usize>().unwrap() >= 1);

    let (code, out, _) = randmis(&["approx", "--n", "16"]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "block_count"), "4");

    let (code, out, _) = randmis(&[
        "mc",
        "--quantity",
        "good",
        "--n",
        "64",
        "--epsilon",
        "0.1",
        "--trials",
        "50",
    ]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "observed"), "1");
}

#[test]
fn sweep_writes_csv_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    let (code, _, err) = randmis(&[
        "sweep",
        "--n",
        "8,10",
        "--p",
        "0.5",
        "--trials",
        "3",
        "--algo",
        "exact,oracle",
        "--threads",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    let records = randmis::harness::read_records(std::fs::File::open(&path).unwrap()).unwrap();
    assert_eq!(records.len(), 2 * 2 * 3);
    assert_eq!(randmis(&["sweep", "--n", "8", "--algo", "quantum"]).0, 1);
}
