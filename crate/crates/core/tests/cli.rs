use std::process::Command;

use divtorus::cli::{self, AlgebraReport, DerhamReport, DumpReport, IrreducibilityReport, KappaReport, ThetaReport};
use divtorus::Error;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn run(args: &str) -> cli::Outcome {
    cli::run(std::iter::once("divtorus").chain(args.split_whitespace()), None)
}

fn roundtrip<T: Serialize + DeserializeOwned>(text: &str) {
    let parsed: T = serde_json::from_str(text).unwrap();
    let mut again = serde_json::to_string_pretty(&parsed).unwrap();
    again.push('\n');
    assert_eq!(again, text);
}

#[test]
fn spec_examples_print_expected_lines() {
    let out = run("verify-algebra --N 2 --R 2");
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("jacobi: 200/200 pass"));
    assert_eq!(run("verify-algebra --R 0").code, 0);

    let out = run("kappa --N 3 --lambda 0,1,0");
    assert_eq!((out.code, out.stdout.as_str()), (0, "(1,2,1) [matches enumeration]\n"));

    let out = run("theta-strings --N 2 --lambda 1,1");
    assert!(out.stdout.starts_with("length 3, unique maximal string\n"));

    let out = run("dump-irrep --N 1 --lambda 2 --format json");
    let dump: DumpReport = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(dump.irrep.dim, 3);

    let out = run("derham --N 2 --sigma 0,0,0 --box-out 2 --box-in 1");
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("psi∘psi = 0: pass"));
    assert!(out.stdout.contains("enlarged kernel at n = (0,0,0): rank 3 (generic 1)"));
}

#[test]
fn irreducibility_predictions_hold() {
    let out = run("irreducibility --N 2 --lambda 1,1 --sigma 1/2,0,0 --box-out 2 --box-in 1");
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.contains("verdict: fills-module"));

    let out = run("irreducibility --N 2 --lambda 1,0 --seed-in W --box-out 2 --box-in 1");
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.contains("verdict: fills-known-submodule (W)"));

    let out = run("irreducibility --N 2 --lambda 1,0 --sigma 1,0,0 --seed-at -sigma --box-out 2 --box-in 1");
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.contains("verdict: fills-known-submodule (W~)"));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        "verify-algebra --sigma 1/0,0,0",
        "verify-algebra --N 0",
        "verify-algebra --N 5",
        "verify-algebra --R 4",
        "kappa --N 2 --lambda 1,0,0",
        "kappa --N 2 --lambda -1,0",
        "derham --box-out 1 --box-in 2",
        "derham --N 4 --box-out 4",
        "irreducibility --N 2 --lambda 1,1 --seed-in W",
        "irreducibility --N 2 --lambda 1,0 --seed-at -sigma",
        "irreducibility --N 2 --lambda 1,0 --sigma 1,0,0 --seed-at 0",
        "dump-irrep --N 2 --lambda 3,3",
        "no-such-command",
        "kappa --bogus",
    ] {
        let out = run(args);
        assert_eq!(out.code, 2, "{args}: {}", out.stderr);
        assert!(out.stdout.is_empty(), "{args}");
    }
    assert_eq!(run("--help").code, 0);
    assert_eq!(run("--version").code, 0);
}

#[test]
fn mathematical_failures_map_to_one() {
    assert_eq!(cli::error_code(&Error::Verification("x".into())), 1);
    assert_eq!(cli::error_code(&Error::Construction("x".into())), 1);
    assert_eq!(cli::error_code(&Error::Parse("x".into())), 2);
}

#[test]
fn json_reports_roundtrip_byte_for_byte() {
    let json = |args: &str| {
        let out = run(&format!("{args} --format json"));
        assert_eq!(out.code, 0, "{args}: {}", out.stderr);
        out.stdout
    };
    roundtrip::<AlgebraReport>(&json("verify-algebra --N 1 --R 1"));
    roundtrip::<IrreducibilityReport>(&json("irreducibility --N 1 --lambda 2 --box-out 2 --box-in 1"));
    roundtrip::<DerhamReport>(&json("derham --N 1 --sigma 1/3,-2/5 --box-out 1 --box-in 1"));
    roundtrip::<KappaReport>(&json("kappa --N 4 --lambda 1,0,2,0"));
    roundtrip::<ThetaReport>(&json("theta-strings --N 3 --lambda 1,0,1"));
    roundtrip::<DumpReport>(&json("dump-irrep --N 2 --lambda 1,1"));
}

#[test]
fn reports_embed_the_resolved_config() {
    let out = run("irreducibility --N 1 --lambda 1 --sigma 2/4,0 --box-out 2 --box-in 1 --R 1 --seed 9 --format json");
    let r: IrreducibilityReport = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(r.config.command, "irreducibility");
    assert_eq!(r.config.sigma, vec!["1/2", "0"]);
    assert_eq!((r.config.radius, r.config.box_out, r.config.box_in, r.config.seed), (1, 2, 1, 9));
    assert!(r.consistent);
}

#[test]
fn environment_seed_overrides_flag() {
    let args = ["divtorus", "verify-algebra", "--N", "1", "--seed", "5", "--format", "json"];
    let out = cli::run(args, Some("7"));
    let r: AlgebraReport = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(r.config.seed, 7);
    assert_eq!(cli::run(args, Some("x")).code, 2);

    let with_env = Command::new(env!("CARGO_BIN_EXE_divtorus"))
        .args(&args[1..])
        .env(cli::SEED_ENV, "7")
        .output()
        .unwrap();
    assert_eq!(with_env.status.code(), Some(0));
    assert_eq!(String::from_utf8(with_env.stdout).unwrap(), out.stdout);
}

#[test]
fn same_seed_same_report() {
    let a = run("irreducibility --N 2 --lambda 0,1 --sigma 1/2,0,0 --box-out 1 --box-in 1 --seed 3 --format json");
    let b = run("irreducibility --N 2 --lambda 0,1 --sigma 1/2,0,0 --box-out 1 --box-in 1 --seed 3 --format json");
    assert_eq!(a, b);
}

#[test]
fn out_flag_writes_the_report() {
    let path = std::env::temp_dir().join(format!("divtorus-kappa-{}.txt", std::process::id()));
    let out = run(&format!("kappa --N 2 --lambda 1,1 --out {}", path.display()));
    assert_eq!(out.code, 0);
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "(2,2) [matches enumeration]\n");
    std::fs::remove_file(path).unwrap();
}
