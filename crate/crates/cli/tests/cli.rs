use std::io::Write;
use std::process::{Command, Output, Stdio};

fn chm(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_chm"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut input = child.stdin.take().unwrap();
    input.write_all(stdin.unwrap_or_default()).unwrap();
    drop(input);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_p9_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p9.txt");
    let built = chm(&["construct", "p9"], None);
    std::fs::write(&path, &built.stdout).unwrap();
    let o = chm(
        &["verify", "--file", path.to_str().unwrap(), "--d", "3", "--json"],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["triple"], serde_json::json!([1.0, 1.0, 1.0]));
    assert_eq!(v["flags"]["two_unitary"], true);
    assert_eq!(v["flags"]["chm"], false);
}

#[test]
fn karlsson_pipes_into_verify() {
    let k = chm(&["construct", "karlsson", "--zeta", "0.3+0.1j"], None);
    assert_eq!(k.status.code(), Some(0));
    let o = chm(&["verify", "--d", "3", "--target", "chm"], Some(&k.stdout));
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let o = chm(&["verify", "--d", "3", "--target", "2u"], Some(&k.stdout));
    assert_eq!(o.status.code(), Some(1));
    let kp = chm(&["construct", "karlsson_p9", "--zeta", "-0.5-1.2j"], None);
    let o = chm(&["verify", "--d", "3", "--target", "2u"], Some(&kp.stdout));
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn log_form_round_trips_through_verify() {
    let o = chm(&["construct", "b9_selfdual", "--log"], None);
    let text = stdout(&o);
    assert!(text.starts_with("BH 9 3\n"));
    let v = chm(
        &["verify", "--d", "3", "--target", "self-dual", "--json"],
        Some(text.as_bytes()),
    );
    assert_eq!(v.status.code(), Some(0));
    let j: serde_json::Value = serde_json::from_str(&stdout(&v)).unwrap();
    assert_eq!(j["flags"]["butson_q"], 3);
}

#[test]
fn k_unitary_target() {
    let h8 = chm(&["construct", "h8"], None);
    let o = chm(&["verify", "--d", "2", "--target", "ku", "--k", "3"], Some(&h8.stdout));
    assert_eq!(o.status.code(), Some(0));
    let o = chm(&["verify", "--d", "2", "--target", "ku"], Some(&h8.stdout));
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_and_domain_errors_exit_two() {
    assert_eq!(chm(&["construct", "nope"], None).status.code(), Some(2));
    assert_eq!(
        chm(&["construct", "karlsson", "--zeta", "-1"], None).status.code(),
        Some(2)
    );
    assert_eq!(
        chm(&["construct", "y16_2", "--params", "0.1"], None).status.code(),
        Some(2)
    );
    assert_eq!(
        chm(&["verify", "--d", "3"], Some(b"2\n1 1\n1 x\n")).status.code(),
        Some(2)
    );
    assert_eq!(chm(&["frobnicate"], None).status.code(), Some(2));
    let o = chm(
        &["search", "sinkhorn", "--n", "9", "--target", "self-dual", "--seed", "1"],
        None,
    );
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sinkhorn_search_is_deterministic() {
    let args = [
        "search", "sinkhorn", "--n", "9", "--target", "2u", "--seeds", "20", "--seed", "42",
    ];
    let a = chm(&args, None);
    let b = chm(&args, None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let lines: Vec<serde_json::Value> = stdout(&a).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 20);
    assert_eq!(lines[0]["seed"], 42);
    assert!(lines.iter().any(|l| l["converged"] == true));
}

#[test]
fn unseeded_search_reports_its_seed() {
    let o = chm(
        &["search", "sinkhorn", "--n", "9", "--max-iters", "50", "--restarts", "1"],
        None,
    );
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(v["seed"].is_u64());
}

#[test]
fn phase_walk_writes_its_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let b = chm(&["construct", "b9_selfdual"], None);
    let out = dir.path().join("res");
    let o = chm(
        &[
            "search",
            "phasewalk",
            "--n",
            "9",
            "--target",
            "2u",
            "--seed",
            "5",
            "--quantum",
            "3",
            "--conjugate",
            "--restarts",
            "30",
            "--out",
            out.to_str().unwrap(),
        ],
        Some(&b.stdout),
    );
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let file = v["matrix_file"].as_str().unwrap();
    let check = chm(&["verify", "--file", file, "--d", "3", "--target", "2u"], None);
    assert_eq!(check.status.code(), Some(0));
}

#[test]
fn scan_reports_json_lines() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path().join("bh16.txt");
    let log = chm(&["construct", "b16_1", "--log"], None);
    std::fs::write(&cat, &log.stdout).unwrap();
    let strat = dir.path().join("s.json");
    std::fs::write(&strat, r#"{"permute": "p16"}"#).unwrap();
    let args = [
        "scan",
        "--file",
        cat.to_str().unwrap(),
        "--d",
        "4",
        "--strategy",
        strat.to_str().unwrap(),
        "--jobs",
        "1",
    ];
    let o = chm(&args, None);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["index"], 1);
    assert_eq!(v["hit"], true);
    assert_eq!(o.stdout, chm(&args, None).stdout);

    std::fs::write(&strat, "{}").unwrap();
    assert_eq!(chm(&args, None).status.code(), Some(1));
    std::fs::write(&strat, "{not json").unwrap();
    assert_eq!(chm(&args, None).status.code(), Some(2));
}
