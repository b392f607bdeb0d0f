use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;

const EXAMPLE: &str = r#"{"ring":{"vars":["x1","x2"],"field":"QQ"},"matrix":[["x2","x1^2"],["x1^3","x2"]],"group":"cGlr","task":"verdict"}"#;

struct Run {
    code: i32,
    stdout: String,
    json: Value,
}

fn matdet(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_matdet"));
    cmd.args(args)
        .env_remove("MATDET_SPAIR_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    let out = child.wait_with_output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{e}: {stdout}"));
    Run {
        code: out.status.code().unwrap(),
        stdout,
        json,
    }
}

fn gens(v: &Value) -> Vec<&str> {
    v["gens"].as_array().unwrap().iter().map(|g| g.as_str().unwrap()).collect()
}

#[test]
fn example_session_from_stdin() {
    let r = matdet(&["verdict", "--file", "-"], Some(EXAMPLE), &[]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let res = &r.json["result"];
    assert_eq!(res["verdict"]["label"], "finitely-determined");
    assert_eq!(gens(&res["upper"]), ["x1^2", "x2"]);
    assert_eq!(res["sandwich"], true);
    assert_eq!(res["exact"]["oracle"]["agrees"], true);
    assert_eq!(r.json["schema"], "1");
    assert_eq!(r.json["group"], "cglr");
}

#[test]
fn not_finitely_determined_exits_with_two() {
    let r = matdet(
        &["verdict", "--file", "-", "--ring", "x1,x2,x3"],
        Some(EXAMPLE),
        &[],
    );
    assert_eq!(r.code, 2, "{}", r.stdout);
    assert_eq!(r.json["result"]["verdict"]["label"], "not-finitely-determined");
}

#[test]
fn identity_is_stable() {
    let r = matdet(&["verdict", "--ring", "x,y", "--matrix", "1, 0; 0, 1", "--group", "cglr"], None, &[]);
    assert_eq!(r.code, 0);
    let v = &r.json["result"]["verdict"];
    assert_eq!((v["lo"].as_u64(), v["hi"].as_u64()), (Some(0), Some(0)));
}

#[test]
fn errors_exit_with_one_and_name_the_field() {
    let r = matdet(
        &["minors", "--file", "-"],
        Some(r#"{"ring":{"vars":["x","y"]},"matrix":[["x","y"],["y"]]}"#),
        &[],
    );
    assert_eq!(r.code, 1);
    assert_eq!(r.json["error"]["kind"], "structure");
    assert!(r.json["error"]["message"].as_str().unwrap().starts_with("matrix[1]"));

    let r = matdet(&["minors", "--ring", "x", "--matrix", "2x"], None, &[]);
    assert_eq!(r.code, 1);
    assert_eq!(r.json["error"]["kind"], "parse");

    let r = matdet(&["t1", "--ring", "x", "--matrix", "x", "--group", "glx"], None, &[]);
    assert_eq!(r.code, 1);
    assert_eq!(r.json["error"]["kind"], "usage");

    let r = matdet(&["t1", "--file", "-"], Some("{not json"), &[]);
    assert_eq!(r.code, 1);
    assert_eq!(r.json["error"]["kind"], "json");
}

#[test]
fn exhausted_budget_exits_with_three() {
    let budget = [("MATDET_SPAIR_BUDGET", "1")];
    let args = ["--ring", "x,y", "--matrix", "x^2+y^3, x*y; y^2, x^3", "--group", "cglr"];
    let r = matdet(&[&["verdict"], &args[..]].concat(), None, &budget);
    assert_eq!(r.code, 3, "{}", r.stdout);
    assert_eq!(r.json["result"]["verdict"]["label"], "unknown");
    assert!(r.json["result"]["heights"].is_array());
    let r = matdet(&[&["t1"], &args[..]].concat(), None, &budget);
    assert_eq!(r.code, 3);
    assert_eq!(r.json["error"]["kind"], "budget");
    let r = matdet(&[&["t1"], &args[..]].concat(), None, &[]);
    assert_eq!(r.code, 0);
}

#[test]
fn reports_are_deterministic() {
    let strip = |s: &str| -> String { s.lines().filter(|l| !l.contains("\"elapsed_ms\"")).collect() };
    let args = ["verdict", "--ring", "x,y", "--matrix", "x^2+y^3, x*y; y^2, x^3", "--group", "cglr"];
    let a = matdet(&args, None, &[]);
    let b = matdet(&args, None, &[]);
    assert_eq!(strip(&a.stdout), strip(&b.stdout));
}

#[test]
fn emitted_ideals_are_fixed_points() {
    let r = matdet(
        &["anncoker", "--ring", "x,y,z", "--matrix", "x, y, z^2; y^2, z, x*y + 3/2*z", "--field", "QQ"],
        None,
        &[],
    );
    assert_eq!(r.code, 0);
    for entry in r.json["result"]["ann_coker"].as_array().unwrap() {
        let g = gens(&entry["ideal"]);
        let again = matdet(&["loewy", "--ring", "x,y,z", "--ideal", &g.join(", ")], None, &[]);
        assert_eq!(gens(&again.json["result"]["ideal"]), g);
    }
}

#[test]
fn ideal_tasks() {
    let r = matdet(&["sat", "--ring", "x,y", "--ideal", "x^2*y, x*y^3", "--by", "x"], None, &[]);
    assert_eq!(gens(&r.json["result"]["saturation"]), ["y"]);
    assert_eq!(r.json["result"]["exponent"], 3);

    let r = matdet(&["loewy", "--ring", "x,y", "--ideal", "x^3, y^2, x*y"], None, &[]);
    assert_eq!(r.json["result"]["ideal"]["loewy"], 3);
    assert_eq!(r.json["result"]["ideal"]["oracle"]["agrees"], true);

    let r = matdet(&["sing", "--ring", "x,y,z", "--ideal", "x*y, x*z", "-r", "2"], None, &[]);
    assert_eq!(gens(&r.json["result"]["sing"]), ["x"]);

    let r = matdet(&["minors", "--ring", "x,y", "--matrix", "x, y; y, x", "-j", "2"], None, &[]);
    assert_eq!(gens(&r.json["result"]["minors"][0]["ideal"]), ["x^2 - y^2"]);

    let r = matdet(&["t1", "--ring", "x,y", "--matrix", "x^3 + y^3", "--group", "aut"], None, &[]);
    assert_eq!(gens(&r.json["result"]["t1_ann"]), ["x*y^2", "x^2*y", "x^3", "y^3"]);

    let r = matdet(&["t1", "--ring", "x", "--matrix", "x, x^2; x^2, x^5", "--space", "sym", "--group", "cgcongr"], None, &[]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(r.json["space"], "sym");
}

#[test]
fn suite_with_seed_42_passes() {
    let r = matdet(&["suite", "--seed", "42"], None, &[]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let props = r.json["result"]["properties"].as_array().unwrap();
    assert!(props.len() >= 10);
    assert!(props.iter().all(|p| p["ok"] == true));
    assert_eq!(r.json["result"]["seed"], 42);
}
