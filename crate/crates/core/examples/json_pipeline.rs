//! The command-line pipeline driven in-process: construct a trace from a JSON
//! algebra spec, feed the output back to `trace verify`, then compute the
//! parameters of a defining-sequence code.

use std::fs;

use fptrace::cli;

fn main() -> std::io::Result<()> {
    let dir = std::env::temp_dir().join(format!("fptrace-example-{}", std::process::id()));
    fs::create_dir_all(&dir)?;

    let spec = dir.join("r2.json");
    fs::write(
        &spec,
        r#"{"p":2,"generators":[{"var":"u","modulus":[0,1,0,1]}]}"#,
    )?;
    let out = cli::run(["fptrace", "trace", "construct", spec.to_str().unwrap()]);
    print!("{}", out.stdout);

    let trace = dir.join("trace.json");
    fs::write(&trace, &out.stdout)?;
    let out = cli::run([
        "fptrace",
        "--format",
        "text",
        "trace",
        "verify",
        trace.to_str().unwrap(),
    ]);
    println!("verify (exit {}):\n{}", out.status, out.stdout);

    let cd = dir.join("cd.json");
    fs::write(
        &cd,
        r#"{"algebra":{"p":2,"generators":[{"var":"u","modulus":[0,1,0,1]}]},
            "d":[[1,0,0],[0,1,0],[1,1,0],[1,0,1],[0,1,1],[1,1,1]]}"#,
    )?;
    let out = cli::run([
        "fptrace",
        "--format",
        "text",
        "code",
        "cd",
        cd.to_str().unwrap(),
    ]);
    print!("{}", out.stdout);

    fs::remove_dir_all(&dir)
}
