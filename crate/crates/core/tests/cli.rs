//! The command line, driven in-process through `cli::run`.

use freebrace::cli::{run, EXIT_DIFFERENT, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn cli(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(
        std::iter::once("freebrace").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn eval_prints_the_normal_form() {
    let (code, out, _) = cli(&["eval", "inv(x)*(x o y)*inv(y)"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "2 - x^-1*t[x] - t[y] + x^-1*t[x]t[y]\n");
    assert_eq!(cli(&["eval", "x", "*", "y"]).1, "-x + t[x] + x*t[y]\n");
    assert_eq!(cli(&["eval", "e"]).1, "1\n");
    assert_eq!(cli(&["eval", "frac(x, y)"]).1, "(t[x]) / (t[y])\n");
}

#[test]
fn eq_verdicts_and_exit_codes() {
    let (code, out, _) = cli(&["eq", "x o y :: y o x"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("EQUAL\n"), "{out}");
    assert!(out.contains("lhs: t[x]t[y]\nrhs: t[x]t[y]"));

    let (code, out, _) = cli(&["eq", "x * y", "::", "y * x"]);
    assert_eq!(code, EXIT_DIFFERENT);
    assert!(out.starts_with("DIFFERENT\n"));

    let (code, out, _) = cli(&["eq", "frac(x o y, y) :: frac(x, e)"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("EQUAL"));

    // mixed categories compare as fractions
    assert_eq!(cli(&["eq", "frac(x o y, y) :: x"]).0, EXIT_OK);
    assert_eq!(cli(&["feq", "cinv(frac(x, y)) :: frac(y, x)"]).0, EXIT_OK);
    assert_eq!(cli(&["feq", "x :: y"]).0, EXIT_DIFFERENT);
}

#[test]
fn parse_errors_exit_with_two() {
    let (code, out, err) = cli(&["eval", "x * "]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.is_empty());
    assert!(err.contains("parse error at byte 4"), "{err}");
    assert_eq!(cli(&["eq", "x o y"]).0, EXIT_USAGE);
    assert_eq!(cli(&["eq", "x :: y :: z"]).0, EXIT_USAGE);
    assert_eq!(cli(&["fox", "[x", "--wrt", "x"]).0, EXIT_USAGE);
    assert_eq!(cli(&["nonsense"]).0, EXIT_USAGE);
    assert_eq!(cli(&["eval"]).0, EXIT_USAGE);
}

#[test]
fn circle_inverse_needs_fractions() {
    let (code, _, err) = cli(&["feq", "x :: cinv(cinv(x))"]);
    assert_eq!(code, EXIT_OK, "{err}");
    let (code, out, _) = cli(&["eval", "cinv(x)"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "(1) / (t[x])\n");
}

#[test]
fn fox_and_project() {
    let word = "[x].[x o y].[x]^-1";
    assert_eq!(cli(&["fox", word, "--wrt", "x"]).1, "1 - x y\n");
    assert_eq!(cli(&["fox", word, "--wrt", "x o y"]).1, "x\n");
    assert_eq!(cli(&["fox", word, "--wrt", "[x o y]"]).1, "x\n");
    assert_eq!(cli(&["fox", word, "--wrt", "z"]).1, "0\n");
    assert_eq!(cli(&["project", word]).1, "x y\n");
    assert_eq!(cli(&["project", "e"]).1, "1\n");
    assert_eq!(
        cli(&["embed", "[x o z].[z]^-1.[y o z]"]).1,
        "-x*t[z] + t[x]t[z] + x*t[y]t[z]\n"
    );

    let (code, _, err) = cli(&["fox", word, "--wrt", "x", "--noncommutative"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("commutative alphabet"));
    assert_eq!(cli(&["project", "[x o y]", "--noncommutative"]).0, EXIT_USAGE);
}

#[test]
fn json_output() {
    let (code, out, _) = cli(&["--json", "eq", "x * y :: y * x"]);
    assert_eq!(code, EXIT_DIFFERENT);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "DIFFERENT");
    assert_eq!(v["kind"], "wire");

    let v: Value = serde_json::from_str(&cli(&["fox", "[x].[x o y].[x]^-1", "--wrt", "x", "--json"]).1).unwrap();
    assert_eq!(v["text"], "1 - x y");
    assert_eq!(v["value"]["terms"][0]["coeff"], "1");

    let v: Value = serde_json::from_str(&cli(&["--json", "eval", "x o y"]).1).unwrap();
    assert_eq!(v["value"]["terms"][0]["mono"], serde_json::json!({"x": 1, "y": 1}));

    let (code, out, _) = cli(&["--json", "eval", "x +"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(serde_json::from_str::<Value>(&out).unwrap()["error"].is_string());
}

#[test]
fn axioms_command() {
    let (code, out, _) = cli(&["axioms", "wire", "--samples", "30", "--seed", "42"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.starts_with("suite wire  seed 42  samples 30\n"));
    assert!(out.contains("first counterexample: none"));

    let (code, out, _) = cli(&["axioms", "fox", "--samples", "30", "--seed", "7", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["seed"], 7);
    assert_eq!(v["failed"], 0);

    let (code, _, err) = cli(&["axioms", "everything"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("unknown suite"));
}

#[test]
fn ringwire_command() {
    let args = [
        "ringwire",
        "--example",
        "indicator_diag",
        "--n",
        "2",
        "--mod",
        "2",
        "--E",
        "1",
        "--exhaustive",
    ];
    let (code, out, _) = cli(&args);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("|U|=4"));
    assert!(out.trim_end().ends_with("PASS"));

    let mut json_args = args.to_vec();
    json_args.push("--json");
    let v: Value = serde_json::from_str(&cli(&json_args).1).unwrap();
    let entries = v.as_array().unwrap();
    assert!(entries.iter().all(|e| e["status"] == "pass"));
    assert!(entries.iter().any(|e| e["condition"] == "right_distributivity"));
    assert!(entries[0]["witness"].is_array());

    assert_eq!(
        cli(&["ringwire", "--example", "trivial_both", "--n", "2", "--mod", "3"]).0,
        EXIT_OK
    );
    assert_eq!(cli(&["ringwire", "--example", "nope"]).0, EXIT_USAGE);
    assert_eq!(
        cli(&["ringwire", "--example", "indicator_diag", "--E", "3"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        cli(&["ringwire", "--example", "trivial_both", "--G", "half"]).0,
        EXIT_USAGE
    );
}

#[test]
fn every_builtin_passes_on_small_rings() {
    for example in ["indicator_diag", "trivial_both", "identity_p_trivial_pi"] {
        for subgroups in [
            ["trivial", "trivial"],
            ["units", "trivial"],
            ["trivial", "units"],
            ["units", "units"],
        ] {
            let (code, out, err) = cli(&[
                "ringwire",
                "--example",
                example,
                "--n",
                "2",
                "--mod",
                "3",
                "--E",
                "1",
                "--G",
                subgroups[0],
                "--H",
                subgroups[1],
            ]);
            assert_eq!(code, EXIT_OK, "{example} {subgroups:?}\n{out}{err}");
        }
    }
}
