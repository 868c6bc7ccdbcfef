use std::path::{Path, PathBuf};
use std::process::Command;

use fptrace::cli::{run, Outcome};
use serde_json::{json, Value};
use tempfile::TempDir;

const R2: &str = r#"{"p":2,"generators":[{"var":"x","modulus":[0,1,0,1]}]}"#;

fn no_trace_table() -> Value {
    // F_2[x,y]/<x^2, y^2, xy> on 1, x, y
    let e = |i: usize| {
        let mut v = vec![0; 3];
        v[i] = 1;
        v
    };
    let z = vec![0; 3];
    json!({
        "p": 2,
        "dim": 3,
        "table": [[e(0), e(1), e(2)], [e(1), z, z], [e(2), z, z]],
    })
}

fn cd_doc() -> Value {
    json!({
        "algebra": {"p": 2, "generators": [{"var": "u", "modulus": [0, 1, 0, 1]}]},
        "d": [[1,0,0], [0,1,0], [1,1,0], [1,0,1], [0,1,1], [1,1,1]],
    })
}

struct Env {
    dir: TempDir,
}

impl Env {
    fn new() -> Self {
        Self {
            dir: TempDir::new().unwrap(),
        }
    }

    fn file(&self, name: &str, body: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        std::fs::write(&p, body).unwrap();
        p
    }

    fn json(&self, name: &str, v: &Value) -> PathBuf {
        self.file(name, &v.to_string())
    }
}

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("fptrace").chain(args.iter().copied()))
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn parse(out: &Outcome) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

#[test]
fn construct_r2_trace() {
    let env = Env::new();
    let f = env.file("r2.json", R2);
    let out = cli(&["trace", "construct", path(&f)]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    let v = parse(&out);
    assert_eq!(v["values"], json!([0, 0, 1]));
    assert_eq!(v["verified"], json!(true));
    let text = cli(&["--format", "text", "trace", "construct", path(&f)]);
    assert!(text.stdout.contains("verified"));
    assert!(text.stdout.contains("x + x^3"));
}

#[test]
fn search_without_trace_exits_two() {
    let env = Env::new();
    let f = env.json("r.json", &no_trace_table());
    let out = cli(&["trace", "search", path(&f), "--format", "text"]);
    assert_eq!(out.status, 2);
    assert_eq!(out.stdout.trim(), "none");
    let out = cli(&["trace", "search", path(&f)]);
    assert_eq!(parse(&out)["found"], json!(false));
}

#[test]
fn defining_sequence_code_parameters() {
    let env = Env::new();
    let f = env.json("cd.json", &cd_doc());
    let out = cli(&["code", "cd", path(&f)]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    let v = parse(&out);
    assert_eq!(
        (v["n"].clone(), v["k"].clone(), v["d"].clone()),
        (json!(6), json!(3), json!(3))
    );
    assert_eq!(v["quasicyclic"], json!(2));
    assert!(v.get("codewords").is_none());
    let with = parse(&cli(&["code", "cd", path(&f), "--codewords"]));
    assert_eq!(with["codewords"].as_array().unwrap().len(), 8);
}

#[test]
fn verify_rejects_with_witness() {
    let env = Env::new();
    let sigma = env.json(
        "s.json",
        &json!({"algebra": {"p": 2, "generators": [{"var": "u", "modulus": [1, 0, 1]}]}, "values": [1, 1]}),
    );
    let out = cli(&["trace", "verify", path(&sigma)]);
    assert_eq!(out.status, 2);
    let v = parse(&out);
    assert_eq!(v["verified"], json!(false));
    assert_eq!(v["witness"], json!([1, 1]));
    assert_eq!(v["gram_det"], json!(0));

    let tau = env.json(
        "t.json",
        &json!({"algebra": {"p": 2, "generators": [{"var": "u", "modulus": [1, 0, 1]}]}, "values": [1, 0]}),
    );
    let out = cli(&["trace", "verify", path(&tau)]);
    assert_eq!(out.status, 0);
    assert_eq!(parse(&out)["witness"], Value::Null);
}

#[test]
fn zero_functional_is_rejected_with_unit_witness() {
    let env = Env::new();
    let z = env.json(
        "z.json",
        &json!({"algebra": serde_json::from_str::<Value>(R2).unwrap(), "values": [0, 0, 0]}),
    );
    let out = cli(&["trace", "verify", path(&z)]);
    assert_eq!(out.status, 2);
    assert_eq!(parse(&out)["witness"], json!([1, 0, 0]));
}

#[test]
fn input_errors_exit_one() {
    let env = Env::new();
    let table = env.json("r.json", &no_trace_table());
    let out = cli(&["trace", "construct", path(&table)]);
    assert_eq!(out.status, 1);
    assert!(out.stderr.contains("trace search"));

    let bad = env.file(
        "bad.json",
        "{\"p\": 4, \"generators\": [{\"var\": \"x\", \"modulus\": [1, 1]}]}",
    );
    let out = cli(&["trace", "construct", path(&bad)]);
    assert_eq!(out.status, 1);
    assert!(out.stderr.contains("not prime"));
    assert_eq!(out.stderr.lines().count(), 1);

    let out = cli(&["trace", "construct", "/nonexistent/file.json"]);
    assert_eq!(out.status, 1);

    let r2 = env.file("r2.json", R2);
    let out = cli(&["trace", "construct", path(&r2), "--no-such-flag"]);
    assert_eq!(out.status, 1);
    let out = cli(&["trace", "construct", path(&r2), "--t-choice", "bogus"]);
    assert_eq!(out.status, 1);
}

#[test]
fn guard_violation_names_guard_and_override_works() {
    let env = Env::new();
    // |R|^9 = 2^27 exceeds the dual-code guard
    let rows = vec![vec![vec![0, 0, 0]; 9]];
    let code = env.json(
        "c.json",
        &json!({"algebra": serde_json::from_str::<Value>(R2).unwrap(), "rows": rows}),
    );
    let out = cli(&["code", "dual", path(&code)]);
    assert_eq!(out.status, 1);
    assert!(out.stderr.contains("dual-code"), "{}", out.stderr);
    assert!(out.stderr.contains("--unsafe-guard"));
    assert_eq!(out.stderr.lines().count(), 1);

    let table = env.json("r.json", &no_trace_table());
    let out = cli(&["trace", "search", path(&table), "--unsafe-guard", "0"]);
    assert_eq!(out.status, 1);
}

#[test]
fn every_subcommand_runs() {
    let env = Env::new();
    let r2 = env.file("r2.json", R2);
    let trace = env.file(
        "trace.json",
        &cli(&["trace", "construct", path(&r2)]).stdout,
    );
    let code = env.json(
        "code.json",
        &json!({"algebra": serde_json::from_str::<Value>(R2).unwrap(), "rows": [[[1,0,0], [0,1,0]]]}),
    );
    let target = env.file("target.json", "[1, 0, 0]");
    let runs: Vec<Vec<&str>> = vec![
        vec!["algebra", "build", path(&r2)],
        vec!["dual-basis", path(&trace)],
        vec!["discriminant", path(&trace)],
        vec!["represent", path(&trace), "--target", path(&target)],
        vec!["code", "trace-code", path(&code)],
        vec!["code", "trace-code", path(&code), "--trace", path(&trace)],
        vec!["code", "subfield-subcode", path(&code)],
        vec!["code", "subfield-code", path(&code)],
        vec!["code", "dual", path(&code)],
        vec!["check", "duality", path(&code)],
        vec!["check", "duality", path(&code), "--trace", path(&trace)],
    ];
    for args in runs {
        for fmt in ["json", "text"] {
            let mut a = args.clone();
            a.extend(["--format", fmt]);
            let out = cli(&a);
            assert_eq!(out.status, 0, "{args:?}: {}", out.stderr);
            assert!(!out.stdout.trim().is_empty());
            if fmt == "json" {
                parse(&out);
            }
        }
    }
}

#[test]
fn represent_and_discriminant_values() {
    let env = Env::new();
    let r2 = env.file("r2.json", R2);
    let trace = env.file(
        "trace.json",
        &cli(&["trace", "construct", path(&r2)]).stdout,
    );
    // τ itself is represented by 1
    let target = env.file(
        "target.json",
        &cli(&["trace", "construct", path(&r2)]).stdout,
    );
    let v = parse(&cli(&[
        "represent",
        path(&trace),
        "--target",
        path(&target),
    ]));
    assert_eq!(v["beta"], json!([1, 0, 0]));

    let elems = env.file("e.json", "[[1,0,0],[1,0,0],[0,0,1]]");
    let v = parse(&cli(&[
        "discriminant",
        path(&trace),
        "--elements",
        path(&elems),
    ]));
    assert_eq!(v["discriminant"], json!(0));
    assert_eq!(v["is_basis"], json!(false));
    let out = cli(&["dual-basis", path(&trace), "--basis", path(&elems)]);
    assert_eq!(out.status, 1);
}

#[test]
fn duality_with_foreign_trace_is_input_error() {
    let env = Env::new();
    let other = env.json(
        "t.json",
        &json!({"algebra": {"p": 2, "generators": [{"var": "u", "modulus": [1, 0, 1]}]}, "values": [1, 0]}),
    );
    let code = env.json(
        "code.json",
        &json!({"algebra": serde_json::from_str::<Value>(R2).unwrap(), "rows": [[[1,0,0]]]}),
    );
    let out = cli(&["check", "duality", path(&code), "--trace", path(&other)]);
    assert_eq!(out.status, 1);
}

#[test]
fn rejected_trace_file_exits_two_in_consumers() {
    let env = Env::new();
    let sigma = env.json(
        "s.json",
        &json!({"algebra": {"p": 2, "generators": [{"var": "u", "modulus": [1, 0, 1]}]}, "values": [1, 1]}),
    );
    for cmd in [&["dual-basis"][..], &["discriminant"]] {
        let mut a = cmd.to_vec();
        a.push(path(&sigma));
        let out = cli(&a);
        assert_eq!(out.status, 2);
        assert_eq!(parse(&out)["witness"], json!([1, 1]));
    }
}

#[test]
fn table_algebra_codes_use_searched_trace() {
    let env = Env::new();
    let built = cli(&["algebra", "build", path(&env.file("r2.json", R2))]);
    let spec: Value = parse(&built);
    let doc = env.json("cd.json", &json!({"algebra": spec, "d": cd_doc()["d"]}));
    let v = parse(&cli(&["code", "cd", path(&doc)]));
    assert_eq!(v["n"], json!(6));

    let none = env.json(
        "cd2.json",
        &json!({"algebra": no_trace_table(), "d": [[1, 0, 0]]}),
    );
    let out = cli(&["code", "cd", path(&none)]);
    assert_eq!(out.status, 2);
}

#[test]
fn outputs_round_trip_as_inputs() {
    let env = Env::new();
    let r2 = env.file("r2.json", R2);

    // algebra build -> algebra spec
    let built = env.file("built.json", &cli(&["algebra", "build", path(&r2)]).stdout);
    let searched = cli(&["trace", "search", path(&built)]);
    assert_eq!(searched.status, 0);
    assert_eq!(parse(&searched)["values"], json!([0, 0, 1]));

    // trace construct / search / verify -> functional
    let constructed = env.file("c.json", &cli(&["trace", "construct", path(&r2)]).stdout);
    let searched = env.file("s.json", &searched.stdout);
    for f in [&constructed, &searched] {
        let verified = cli(&["trace", "verify", path(f)]);
        assert_eq!(verified.status, 0);
        let again = env.file("v.json", &verified.stdout);
        assert_eq!(
            cli(&["trace", "verify", path(&again)]).stdout,
            verified.stdout
        );
    }

    // dual-basis -> basis
    let db = env.file("db.json", &cli(&["dual-basis", path(&constructed)]).stdout);
    let first = parse(&cli(&["dual-basis", path(&constructed)]));
    let back = parse(&cli(&[
        "dual-basis",
        path(&constructed),
        "--basis",
        path(&db),
    ]));
    assert_eq!(back, first);
    let dual_only = env.json("d.json", &json!({"basis": first["dual"]}));
    let twice = parse(&cli(&[
        "dual-basis",
        path(&constructed),
        "--basis",
        path(&dual_only),
    ]));
    assert_eq!(twice["dual"], first["basis"]);
    assert_eq!(
        cli(&["discriminant", path(&constructed), "--elements", path(&db)]).status,
        0
    );

    // code reports -> F-code input
    let cd = env.json("cd.json", &cd_doc());
    for extra in [&[][..], &["--codewords"]] {
        let mut a = vec!["code", "cd", path(&cd)];
        a.extend_from_slice(extra);
        let report = cli(&a);
        let f = env.file("report.json", &report.stdout);
        let mut b = vec!["code", "params", path(&f)];
        b.extend_from_slice(extra);
        assert_eq!(cli(&b).stdout, report.stdout);
    }

    // code dual -> code over R
    let code = env.json(
        "code.json",
        &json!({"algebra": serde_json::from_str::<Value>(R2).unwrap(), "rows": [[[1,0,0], [0,1,0]]]}),
    );
    let dual = env.file("dual.json", &cli(&["code", "dual", path(&code)]).stdout);
    let dd = parse(&cli(&["code", "dual", path(&dual)]));
    let orig = parse(&cli(&[
        "code",
        "dual",
        path(&env.file("dual2.json", &serde_json::to_string(&dd).unwrap())),
    ]));
    assert_eq!(
        orig["size"],
        parse(&cli(&["code", "dual", path(&dual)]))["size"]
    );

    // represent -> target
    let rep = env.file("rep.json", "{\"values\": [0, 1, 0]}");
    assert_eq!(
        cli(&["represent", path(&constructed), "--target", path(&rep)]).status,
        0
    );
}

#[test]
fn zero_code_reports_null_distance() {
    let env = Env::new();
    let f = env.file("z.json", r#"{"p": 3, "n": 4}"#);
    let v = parse(&cli(&["code", "params", path(&f)]));
    assert_eq!(v["k"], json!(0));
    assert_eq!(v["d"], Value::Null);
    let text = cli(&["code", "params", path(&f), "--format", "text"]);
    assert!(text.stdout.contains('∞'), "{}", text.stdout);

    let nonlinear = env.file(
        "n.json",
        r#"{"p": 2, "codewords": [[0, 0], [1, 0], [0, 1]]}"#,
    );
    assert_eq!(cli(&["code", "params", path(&nonlinear)]).status, 1);
}

#[test]
fn identical_inputs_give_identical_bytes() {
    let env = Env::new();
    let f = env.file(
        "h.json",
        r#"{"p":3,"generators":[{"var":"x","modulus":[2,0,1,1,0,1]},{"var":"y","modulus":[1,0,1]}]}"#,
    );
    let a = cli(&["trace", "construct", path(&f), "--seed", "5"]);
    let b = cli(&["trace", "construct", path(&f), "--seed", "5"]);
    assert_eq!(a.status, 0, "{}", a.stderr);
    assert_eq!(a, b);
    let ft = cli(&["trace", "construct", path(&f), "--t-choice", "fieldtrace"]);
    assert_eq!(ft.status, 0);
    assert_eq!(parse(&ft)["verified"], json!(true));
}

#[test]
fn seed_flag_overrides_environment() {
    use clap::Parser;
    use fptrace::cli::Cli;
    // a valid value, so concurrently running tests are unaffected
    std::env::set_var("FPTRACE_SEED", "99");
    let from_env = Cli::try_parse_from(["fptrace", "trace", "search", "x.json"]).unwrap();
    let from_flag =
        Cli::try_parse_from(["fptrace", "trace", "search", "x.json", "--seed", "3"]).unwrap();
    std::env::remove_var("FPTRACE_SEED");
    assert_eq!(from_env.seed, 99);
    assert_eq!(from_flag.seed, 3);
}

#[test]
fn binary_honours_seed_env() {
    let env = Env::new();
    let f = env.file("r2.json", R2);
    let bin = env!("CARGO_BIN_EXE_fptrace");
    let out = Command::new(bin)
        .args(["trace", "construct", path(&f)])
        .env("FPTRACE_SEED", "17")
        .output()
        .unwrap();
    assert!(out.status.success());
    let out = Command::new(bin)
        .args(["trace", "construct", path(&f)])
        .env("FPTRACE_SEED", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    let table = env.json("r.json", &no_trace_table());
    let out = Command::new(bin)
        .args(["trace", "search", path(&table)])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
