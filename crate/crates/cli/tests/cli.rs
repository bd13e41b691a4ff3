use serde_json::Value;

fn run(args: &[&str]) -> cpoly::Outcome {
    cpoly::run(std::iter::once("cpoly").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn euler_seven_from_every_pipeline() {
    let v = json(&["count", "--hat", "2", "7"]);
    assert_eq!(v["count"], "272");
    assert_eq!(v["agreement"], true);
    let names: Vec<&str> = v["pipelines"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["enumeration", "volume", "boustrophedon"]);
    assert!(v["pipelines"]
        .as_array()
        .unwrap()
        .iter()
        .all(|p| p["value"] == "272"));
}

#[test]
fn hstar_json_schema() {
    let v = json(&["hstar", "--hat", "3", "6"]);
    assert_eq!(v["family"], "hat");
    assert_eq!(v["n"], 6);
    assert_eq!(v["params"]["k"], 3);
    assert_eq!(v["hstar"], serde_json::json!(["1", "6", "6", "1"]));
    assert_eq!(v["palindromic"], true);
    assert_eq!(v["normalized_volume"], "14");
    let ehrhart = v["ehrhart"].as_array().unwrap();
    assert_eq!(ehrhart.len(), 7);
    assert_eq!(ehrhart[0], "1/1");
    assert!(ehrhart.iter().all(|c| c.as_str().unwrap().contains('/')));
}

#[test]
fn empty_chain_set_counts_all_orders() {
    let v = json(&["count", "--chainset", "", "--n", "3"]);
    assert_eq!(v["count"], "6");
    assert_eq!(v["family"], "I");
    assert_eq!(v["agreement"], true);
}

#[test]
fn sign_words_including_leading_minus() {
    let v = json(&["count", "--signword", "-+-"]);
    assert_eq!(v["family"], "tilde");
    assert_eq!(v["n"], 4);
    assert_eq!(v["params"]["signword"], "-+-");
    assert_eq!(v["agreement"], true);
    let h = json(&["hstar", "--signword=+"]);
    assert_eq!(
        h["normalized_volume"],
        json(&["count", "--signword", "+"])["count"]
    );
}

#[test]
fn parse_errors_exit_with_usage() {
    for args in [
        &["count", "--hat", "2"][..],
        &["count", "--hat", "3", "2"],
        &["count", "--hat", "0", "2"],
        &["count", "--chainset", "0-9", "--n", "3"],
        &["count", "--chainset", "0-2"],
        &["count", "--signword", "+x"],
        &["count"],
        &["count", "--hat", "2", "4", "--signword", "+"],
        &["boustrophedon", "--hat", "1", "4"],
        &["enumerate", "--parking", "2", "--hat", "1", "2"],
        &["verify", "--scale", "huge"],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(out.code, 2, "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(out.stderr.contains("Usage"), "{args:?}: {}", out.stderr);
    }
}

#[test]
fn help_is_not_an_error() {
    let out = run(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("boustrophedon"));
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    for args in [
        &["count", "--hat", "3", "7"][..],
        &["hstar", "--chainset", "0-2,1-4", "--n", "5"],
        &["table", "--n-max", "6"],
    ] {
        let base = run(args);
        for threads in ["1", "3", "8"] {
            let mut with = args.to_vec();
            with.extend(["--threads", threads]);
            assert_eq!(run(&with), base, "{with:?}");
        }
    }
}

#[test]
fn boustrophedon_rows() {
    let out = run(&["boustrophedon", "--hat", "3", "5"]);
    assert_eq!(out.code, 0);
    let rows: Vec<Vec<u64>> = out
        .stdout
        .lines()
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert!(rows
        .iter()
        .all(|r| r.len() == 4 && r[..3].iter().sum::<u64>() == 6));
    let total: u64 = rows.iter().map(|r| r[3]).sum();
    assert_eq!(
        json(&["count", "--hat", "3", "5"])["count"],
        total.to_string()
    );
    let v = json(&["boustrophedon", "--hat", "3", "5", "--format", "json"]);
    assert_eq!(v["total"], total.to_string());
    assert_eq!(v["checked"], true);
}

#[test]
fn enumeration_lists() {
    let v = json(&["enumerate", "--parking", "3"]);
    assert_eq!(v["count"], "14");
    assert_eq!(v["items"][0], serde_json::json!([0, 0, 0, 0]));
    let out = run(&["enumerate", "--hat", "2", "4", "--format", "plain"]);
    assert_eq!(out.stdout.lines().count(), 5);
    assert!(out.stdout.lines().all(|l| l.starts_with("0 ")));
    let out = run(&["enumerate", "--parking", "3", "--format", "csv"]);
    assert!(out.stdout.lines().any(|l| l == "0,1,1,3"));
}

#[test]
fn formats() {
    let csv = run(&["hstar", "--hat", "2", "5", "--format", "csv"]).stdout;
    assert_eq!(csv, "degree,coefficient\n0,1\n1,7\n2,7\n3,1\n");
    let plain = run(&["hstar", "--hat", "2", "5", "--format", "plain"]).stdout;
    assert!(plain.starts_with("h*: z^3+7z^2+7z+1\n"));
    let e = json(&["ehrhart", "--hat", "2", "3", "--dilations", "3"]);
    assert_eq!(e["values"], serde_json::json!(["1", "5", "14", "30"]));
    let count_csv = run(&["count", "--hat", "2", "4", "--format", "csv"]).stdout;
    assert_eq!(
        count_csv,
        "pipeline,value\nenumeration,5\nvolume,5\nboustrophedon,5\nagreement,true\n"
    );
}

#[test]
fn table_flags_the_misprinted_cell() {
    let v = json(&["table", "--k-min", "3", "--k-max", "3"]);
    let cells = v["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 6);
    let odd: Vec<&Value> = cells
        .iter()
        .filter(|c| c["matches_reference"] == false)
        .collect();
    assert_eq!(odd.len(), 1);
    assert_eq!(odd[0]["n"], 7);
    assert_eq!(odd[0]["known_misprint"], true);
    assert_eq!(odd[0]["polynomial"], "z^4+11z^3+23z^2+11z+1");
    assert_eq!(v["all_match"], true);
}

#[test]
fn small_verify_passes() {
    let v = json(&["verify"]);
    assert_eq!(v["scale"], "small");
    assert_eq!(v["passed"], true);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_cpoly");
    let ok = std::process::Command::new(bin)
        .args(["count", "--hat", "2", "5"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8(ok.stdout).unwrap().contains("\"16\""));
    let bad = std::process::Command::new(bin)
        .args(["count", "--hat", "x", "5"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
