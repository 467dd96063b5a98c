use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fsheaf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn dimvec_of_the_point_ideal_class() {
    let out = run(&[
        "--output",
        "text",
        "dimvec",
        "--surface",
        "P2",
        "--class",
        "1,0,0",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "(1,3,1)");
    let out = run(&["dimvec", "--surface", "P2", "--class", "1,0,0"]);
    assert_eq!(json(&out)["dimension_vector"], serde_json::json!([1, 3, 1]));
}

#[test]
fn negative_dimension_vector_is_a_check_failure() {
    let out = run(&["dimvec", "--surface", "P2", "--class", "1,0,5"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn fixed_points_for_k4_are_the_five_partitions() {
    let out = run(&["adhm", "fixed-points", "--k", "4"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let parts: Vec<Value> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["partition"].clone())
        .collect();
    assert_eq!(parts.len(), 5);
    assert_eq!(parts[0], serde_json::json!([4]));
    assert_eq!(parts[4], serde_json::json!([1, 1, 1, 1]));
}

#[test]
fn adhm_predicates_set_the_exit_code() {
    assert_eq!(
        code(&run(&[
            "adhm",
            "check",
            "--input",
            &data("three_points.json")
        ])),
        0
    );
    assert_eq!(
        code(&run(&[
            "adhm",
            "stable",
            "--input",
            &data("three_points.json")
        ])),
        0
    );
    assert_eq!(
        code(&run(&[
            "adhm",
            "check",
            "--input",
            &data("not_a_solution.json")
        ])),
        2
    );
    assert_eq!(
        code(&run(&[
            "adhm",
            "monad",
            "--input",
            &data("not_a_solution.json")
        ])),
        2
    );
}

#[test]
fn tangent_dimension_is_2kr() {
    let v = json(&run(&[
        "adhm",
        "tangent",
        "--input",
        &data("three_points.json"),
    ]));
    assert_eq!(v["tangent_dim"], 6);
    assert_eq!(v["stabilizer_dim"], 0);
}

#[test]
fn monad_output_round_trips_through_the_converters() {
    let monad = run(&["adhm", "monad", "--input", &data("three_points.json")]);
    assert_eq!(code(&monad), 0);
    let stored: Value =
        serde_json::from_str(&std::fs::read_to_string(data("three_points_monad.json")).unwrap())
            .unwrap();
    assert_eq!(json(&monad), stored);

    let rep = run(&["heart", "rep", "--input", &data("three_points_monad.json")]);
    assert_eq!(code(&rep), 0);
    assert_eq!(json(&rep)["dims"], serde_json::json!([3, 7, 3]));

    let back = run(&["heart", "monad", "--input", &data("three_points_rep.json")]);
    assert_eq!(code(&back), 0);
    assert_eq!(json(&back), stored);
}

#[test]
fn every_json_report_reparses_to_itself() {
    let commands: Vec<Vec<String>> = vec![
        vec![
            "adhm".into(),
            "from-points".into(),
            "--points".into(),
            data("points.json"),
        ],
        vec![
            "cohomology".into(),
            "hyper".into(),
            "--input".into(),
            data("three_points_monad.json"),
        ],
        vec![
            "heart".into(),
            "battery".into(),
            "--input".into(),
            data("three_points_monad.json"),
        ],
        vec![
            "heart".into(),
            "trivial".into(),
            "--input".into(),
            data("three_points_monad.json"),
        ],
        vec![
            "quiver".into(),
            "check-relations".into(),
            "--input".into(),
            data("three_points_rep.json"),
        ],
    ];
    for args in commands {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = run(&args);
        assert_eq!(code(&out), 0, "{args:?}");
        let v = json(&out);
        let printed = serde_json::to_string_pretty(&v).unwrap();
        assert_eq!(printed.trim(), stdout(&out).trim(), "{args:?}");
        assert_eq!(serde_json::from_str::<Value>(&printed).unwrap(), v);
    }
}

#[test]
fn hypercohomology_of_three_point_ideal() {
    let v = json(&run(&[
        "cohomology",
        "hyper",
        "--input",
        &data("three_points_monad.json"),
    ]));
    assert_eq!(v["h"]["0"], 0);
    assert_eq!(v["h"]["1"], 2);
}

#[test]
fn window_below_the_bound_is_rejected() {
    let out = run(&[
        "cohomology",
        "hyper",
        "--window",
        "1",
        "--input",
        &data("three_points_monad.json"),
    ]);
    assert_eq!(code(&out), 1);
    let out = run(&[
        "cohomology",
        "hyper",
        "--window",
        "9",
        "--input",
        &data("three_points_monad.json"),
    ]);
    assert_eq!(code(&out), 0);
}

#[test]
fn line_bundle_cohomology() {
    let out = run(&[
        "--output",
        "text",
        "cohomology",
        "line-bundle",
        "--space",
        "P1xP1",
        "--twist",
        "-2,1",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "h = (0,2,0)");
}

#[test]
fn triviality_and_framability() {
    let out = run(&[
        "heart",
        "trivial",
        "--input",
        &data("three_points_monad.json"),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["trivial"], true);
    let out = run(&["heart", "trivial", "--input", &data("split_bundle.json")]);
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["splitting"], serde_json::json!([1, -1]));
}

#[test]
fn hilbert_demo_passes_for_distinct_points_and_fails_for_repeated() {
    let out = run(&["demo", "hilbert", "--points", &data("points.json")]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["pass"], true);
    let out = run(&["demo", "hilbert", "--points", &data("repeated_points.json")]);
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["stable"], false);
}

#[test]
fn reports_are_byte_identical_for_a_fixed_seed() {
    let args = [
        "--seed",
        "17",
        "demo",
        "hilbert",
        "--points",
        &data("points.json"),
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn quiver_commands() {
    let rep = data("three_points_rep.json");
    assert_eq!(code(&run(&["quiver", "iso", "--input", &rep, &rep])), 0);
    let v = json(&run(&["quiver", "euler", "--d", "1,3,1", "--e", "1,3,1"]));
    assert_eq!(v["euler_form"], -1);
    let v = json(&run(&["quiver", "paths", "--from", "0", "--to", "2"]));
    assert_eq!(v["dim"], 3);
}

#[test]
fn acceptance_suite_exits_zero() {
    let out = run(&["--output", "text", "suite", "acceptance"]);
    let text = stdout(&out);
    assert_eq!(code(&out), 0, "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 12);
}

#[test]
fn usage_and_input_errors_exit_one() {
    assert_eq!(code(&run(&["no-such-command"])), 1);
    assert_eq!(
        code(&run(&["dimvec", "--surface", "P3", "--class", "1,0,0"])),
        1
    );
    assert_eq!(
        code(&run(&["adhm", "check", "--input", "/nonexistent.json"])),
        1
    );
    assert_eq!(code(&run(&["suite", "acceptance", "--only", "99"])), 1);
    assert_eq!(code(&run(&["--help"])), 0);
}
