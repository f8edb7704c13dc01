use cordial::cli::{run, EXIT_FAILS, EXIT_HOLDS, EXIT_INPUT};
use cordial::edgelist::{self, EdgeList};
use cordial::named::{alternating_path, petersen};
use cordial::report::{RunReport, Value};

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cordial(args: &[&str], stdin: &str) -> Output {
    let mut input = stdin.as_bytes();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("cordial").chain(args.iter().copied());
    let code = run(argv, &mut input, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn json(args: &[&str], stdin: &str) -> (i32, RunReport) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = cordial(&full, stdin);
    (o.code, RunReport::from_json(&o.stdout).expect(&o.stdout))
}

#[test]
fn gen_alternating_path_piped_into_check_digraph() {
    let generated = cordial(&["gen", "alternating_path", "10"], "");
    assert_eq!(generated.code, EXIT_HOLDS);
    let checked = cordial(&["check-digraph", "-"], &generated.stdout);
    assert_eq!(checked.code, EXIT_FAILS);
    assert!(checked.stdout.contains("no cordial labeling"));
    assert!(checked.stdout.contains("labelings_scanned: 252"));
}

#[test]
fn gen_output_reingests_to_identical_graphs() {
    let g = cordial(&["gen", "petersen"], "");
    assert_eq!(
        edgelist::parse(&g.stdout).unwrap(),
        EdgeList::Undirected(petersen())
    );
    let d = cordial(&["gen", "alternating_path", "22"], "");
    assert_eq!(
        edgelist::parse(&d.stdout).unwrap(),
        EdgeList::Directed(alternating_path(22).unwrap())
    );
}

#[test]
fn check_graph_petersen_fails() {
    let o = cordial(&["check-graph", "petersen"], "");
    assert_eq!(o.code, EXIT_FAILS);
    assert!(o.stdout.contains("not (2,3)-orientable"));
}

#[test]
fn check_graph_reports_witness() {
    let (code, r) = json(&["check-graph", "path:6"], "");
    assert_eq!(code, EXIT_HOLDS);
    assert_eq!(r.get("orientable"), Some(&Value::Bool(true)));
    assert!(matches!(r.get("orientation"), Some(Value::Bits(b)) if b.len() == 5));
    assert!(matches!(r.get("gamma"), Some(Value::Gamma(_))));
}

#[test]
fn check_digraph_from_file() {
    let dir = std::env::temp_dir().join(format!("cordial-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("arc.txt");
    std::fs::write(&path, "# one arc\n2 1\n0 > 1\n").unwrap();
    let (code, r) = json(&["check-digraph", path.to_str().unwrap()], "");
    assert_eq!(code, EXIT_HOLDS);
    assert_eq!(r.get("labeling"), Some(&Value::Bits("10".into())));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bounds_six() {
    let o = cordial(&["bounds", "6"], "");
    assert_eq!(o.code, EXIT_HOLDS);
    assert!(o.stdout.contains("z: 6\n"));
    assert!(o.stdout.contains("e_max: 14\n"));
}

#[test]
fn search_with_symmetry_flags() {
    let (code, r) = json(&["search", "path:10", "--fix-first-arc"], "");
    assert_eq!(code, EXIT_FAILS);
    assert_eq!(r.get("orientations_scanned"), Some(&Value::Count(256)));
    assert_eq!(
        r.get("noncordial"),
        Some(&Value::List(vec![Value::Bits("010101010".into())]))
    );
    let (code, _) = json(
        &["search", "path:6", "--fix-first-arc", "--fix-first-label"],
        "",
    );
    assert_eq!(code, EXIT_HOLDS);
}

#[test]
fn jobs_flag_does_not_change_output() {
    let (_, a) = json(&["--jobs", "1", "search", "complete:5"], "");
    let (_, b) = json(&["--jobs", "3", "search", "complete:5"], "");
    assert_eq!(a.verdicts, b.verdicts);
}

#[test]
fn scan_and_tournaments() {
    let (code, r) = json(&["scan-alternating", "22"], "");
    assert_eq!(code, EXIT_FAILS);
    assert_eq!(
        r.get("noncordial_n"),
        Some(&Value::List(vec![Value::Count(10), Value::Count(22)]))
    );
    assert_eq!(cordial(&["scan-alternating", "8"], "").code, EXIT_HOLDS);
    assert_eq!(cordial(&["tournaments", "5"], "").code, EXIT_HOLDS);
    assert_eq!(cordial(&["tournaments", "4"], "").code, EXIT_FAILS);
    assert_eq!(cordial(&["tournaments", "9"], "").code, EXIT_INPUT);
}

#[test]
fn verify_bound_reports() {
    let (code, r) = json(&["verify-bound", "6"], "");
    assert_eq!(code, EXIT_HOLDS);
    assert_eq!(r.get("violations"), Some(&Value::Count(0)));
    assert_eq!(r.get("tight_edges"), Some(&Value::Count(14)));
    let (code, r) = json(&["verify-bound", "7"], "");
    assert_eq!(code, EXIT_FAILS);
    assert_eq!(r.get("violations"), Some(&Value::Count(210)));
    assert_eq!(cordial(&["verify-bound", "5"], "").code, EXIT_INPUT);
}

#[test]
fn qcheck_with_builtin_and_file_tables() {
    let (code, r) = json(
        &["qcheck", "alternating_path:10", "--table", "z3_minus"],
        "",
    );
    assert_eq!(code, EXIT_FAILS);
    assert_eq!(r.get("cordial"), Some(&Value::Bool(false)));

    let dir = std::env::temp_dir().join(format!("cordial-q-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let table = dir.join("z3minus.txt");
    std::fs::write(&table, "3\n0 1 2\n2 0 1\n1 2 0\n").unwrap();
    let (code, r) = json(
        &[
            "qcheck",
            "-",
            "--table",
            table.to_str().unwrap(),
            "--subset",
            "0,1",
        ],
        "2 1\n0 > 1\n",
    );
    assert_eq!(code, EXIT_HOLDS);
    assert_eq!(
        r.get("labeling"),
        Some(&Value::List(vec![
            Value::Text("0".into()),
            Value::Text("1".into())
        ]))
    );
    let bad = dir.join("ragged.txt");
    std::fs::write(&bad, "2\n0 1\n1\n").unwrap();
    let o = cordial(
        &[
            "qcheck",
            "-",
            "--table",
            bad.to_str().unwrap(),
            "--subset",
            "0",
        ],
        "2 0\n",
    );
    assert_eq!(o.code, EXIT_INPUT);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn input_errors_exit_two() {
    let o = cordial(&["frobnicate"], "");
    assert_eq!(o.code, EXIT_INPUT);
    let o = cordial(&["check-digraph", "-"], "2 1\n0 x\n");
    assert_eq!(o.code, EXIT_INPUT);
    assert!(o.stderr.contains("parse error"));
    let o = cordial(&["check-digraph", "petersen"], "");
    assert_eq!(o.code, EXIT_INPUT);
    let o = cordial(&["gen", "alternating_path", "7"], "");
    assert_eq!(o.code, EXIT_INPUT);
    let o = cordial(&["check-graph", "no_such_graph"], "");
    assert_eq!(o.code, EXIT_INPUT);
}

#[test]
fn reports_round_trip_through_json() {
    for args in [
        &["check-graph", "counterexample_tree"][..],
        &["bounds", "7"][..],
        &["search", "path:4"][..],
    ] {
        let (_, r) = json(args, "");
        assert_eq!(RunReport::from_json(&r.to_json()).unwrap(), r);
    }
}
