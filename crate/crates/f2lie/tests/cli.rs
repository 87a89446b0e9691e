use std::path::PathBuf;
use std::process::{Command, Output};

fn f2lie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_f2lie"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data(file: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data/catalog")
        .join(file)
}

#[test]
fn idempotents_of_l31() {
    let o = f2lie(&["idempotents", "L_3_1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1 x [1,2]"), "{}", stdout(&o));
}

#[test]
fn subalgebra_row_of_l61() {
    let o = f2lie(&["subalgebras", "L_6_1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "algebra\trow\tdim 1\tdim 2\tdim 3\tdim 4\tdim 5\n\
         L_6_1\tall\t5\t5\t3\t1\t0\n\
         L_6_1\tmax\t0\t0\t1\t1\t0\n"
    );
}

#[test]
fn subalgebra_row_of_l72_as_json() {
    let o = f2lie(&["subalgebras", "L_7_2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["partial"], false);
    assert_eq!(
        v["rows"][0],
        serde_json::json!(["L_7_2", "all", 43, 43, 26, 9, 2, 0])
    );
    assert_eq!(
        v["rows"][1],
        serde_json::json!(["L_7_2", "max", 0, 0, 4, 5, 2, 0])
    );
}

#[test]
fn oracle_matches_on_l31() {
    let o = f2lie(&["oracle", "L_3_1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("match: 12 subalgebras"));
    let o = f2lie(&["oracle", "L_9_1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn hasse_of_l31_has_twelve_vertices() {
    let o = f2lie(&["hasse", "L_3_1"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert!(dot.trim_end().ends_with('}'));
    assert_eq!(dot.matches("[label=").count(), 12);
    assert_eq!(dot.matches(" -> ").count(), 7 + 3 * 3 + 3);
    let o = f2lie(&["hasse", "L_3_1", "--orbits"]);
    assert_eq!(stdout(&o).matches("[label=").count(), 6);
}

#[test]
fn other_commands() {
    let o = f2lie(&["verify", "L_7_1"]);
    assert_eq!(
        stdout(&o),
        "algebra\tdim\taxioms\tsimple\tcenter dim\tperfect\nL_7_1\t7\tok\ttrue\t0\ttrue\n"
    );
    let o = f2lie(&["aut", "L_3_1"]);
    assert!(stdout(&o).starts_with("algebra\torder\tgenerators\nL_3_1\t6\t"));
    let o = f2lie(&["superize", "L_7_1"]);
    assert!(stdout(&o).contains("L_7_1\t2 x [3,4]\t9,9\ttrue"));
    let o = f2lie(&["subquotients", "L_7_1"]);
    assert!(stdout(&o).contains("L_7_1\tL_3_1\t"));
}

#[test]
fn file_inputs_and_group_files() {
    let file = data("L_7_1.json");
    let o = f2lie(&["idempotents", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2 x [3,4]"));

    let dir = tempfile::tempdir().unwrap();
    let group = dir.path().join("g.txt");
    // the identity alone: every nonzero vector is its own orbit
    std::fs::write(&group, "100\n010\n001\n").unwrap();
    let o = f2lie(&[
        "subalgebras",
        "L_3_1",
        "--group-file",
        group.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("L_3_1\tall\t7\t3"));
    std::fs::write(&group, "001\n010\n100\n").unwrap();
    let o = f2lie(&[
        "subalgebras",
        "L_3_1",
        "--group-file",
        group.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not an automorphism"));
}

#[test]
fn errors_and_budgets() {
    let o = f2lie(&["verify", "L_99_1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown algebra"));

    let o = f2lie(&["subalgebras", "L_7_1", "--budget-nodes", "50"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("partial"));

    let o = f2lie(&["subalgebras", "L_3_1", "--budget-nodes", "0"]);
    assert_eq!(o.status.code(), Some(2));

    let o = f2lie(&["verify", "L_3_1", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(1));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"dim": 2, "brackets": [[0, 0, [1]]]}"#).unwrap();
    let o = f2lie(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("alternating"));
}

#[test]
fn catalog_dir_flag() {
    let dir = tempfile::tempdir().unwrap();
    let o = f2lie(&[
        "verify",
        "L_7_1",
        "--catalog-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = f2lie(&[
        "verify",
        "L_7_1",
        "--catalog-dir",
        data("").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    for args in [
        ["subalgebras", "L_8_2"],
        ["aut", "L_7_2"],
        ["hasse", "L_6_1"],
    ] {
        let a = f2lie(&args);
        let b = f2lie(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
