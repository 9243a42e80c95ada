use std::process::{Command, Output};
use std::sync::OnceLock;

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_g2theta"));
    c.env_remove("REGISTRY").env_remove("PCONTEXT");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn")
}

fn validator() -> &'static jsonschema::Validator {
    static V: OnceLock<jsonschema::Validator> = OnceLock::new();
    V.get_or_init(|| {
        let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../schema/g2theta-output.schema.json")).unwrap();
        jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
    })
}

/// Runs with --format json, checks the exit code and the schema.
fn json(args: &[&str], code: i32) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = run(&full);
    assert_eq!(out.status.code(), Some(code), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    let errors: Vec<String> = validator().iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{args:?}: {errors:?}");
    v
}

#[test]
fn every_command_matches_the_schema() {
    let cases: &[&[&str]] = &[
        &["rootsys"],
        &["rootsys", "--debug-forms"],
        &["decompose", "g2", "P", "1/2", "st(1)"],
        &["decompose", "g2", "Q", "1/2", "one(1)"],
        &["decompose", "g2", "B", "0", "chi2, eta2"],
        &["decompose", "pgsp6", "P13", "1/2", "sc(r, sd)"],
        &["decompose", "pgsp6", "P3", "0", "St3(1)"],
        &["decompose", "pgsp6", "P1", "1/2", "sk(rho)"],
        &["packet", "subregular(1)"],
        &["packet", "short(sc(r, sd))"],
        &["jacquet", "g2", "P"],
        &["jacquet", "pgsp6", "P2"],
        &["ie-filtration", "1/2", "field:E"],
        &["theta", "d2g", "pd(1)"],
        &["theta", "b2g", "ext(St3(1), -)"],
        &["theta", "g2p", "JQ(1; st(1))"],
        &["theta", "g2p", "pi_deg[1]"],
        &["theta", "p2g", "St_P6"],
        &["dichotomy", "pi_sc[omega2]"],
        &["ds-target", "delta_Q(sc(r, sd))"],
        &["verify", "weyl", "--size", "20"],
    ];
    for c in cases {
        json(c, 0);
    }
}

#[test]
fn weyl_orders_and_erratum_readings() {
    let v = json(&["rootsys", "--debug-forms"], 0);
    assert_eq!(v["G2"]["weyl_order"], 12);
    assert_eq!(v["PGSp6"]["weyl_order"], 48);
    assert_eq!(v["G2"]["roots"].as_array().unwrap().len(), 12);
    assert_eq!(v["forms"]["s3_squared_failures"], 0);
    assert!(v["forms"]["s3_cubed_failures"].as_u64().unwrap() >= 1);
}

#[test]
fn decompose_positions() {
    let v = json(&["decompose", "g2", "P", "3/2", "st(1)"], 0);
    let cs = v["structure"]["constituents"].as_array().unwrap();
    let find = |r: &str| cs.iter().find(|c| c["rep"] == r).map(|c| c["position"].clone());
    assert_eq!(find("St_G2"), Some("sub".into()));
    assert_eq!(find("JP(3/2; st(1))"), Some("quotient".into()));
}

#[test]
fn theta_output_fields() {
    let v = json(&["theta", "g2p", "St_G2"], 0);
    assert_eq!(v["value"], "rep");
    assert_eq!(v["target"], "St_P6");
    let z = json(&["theta", "g2p", "pi_sc[omega]"], 0);
    assert_eq!(z["value"], "zero");
    assert_eq!(z["target"], Value::Null);
}

#[test]
fn output_is_deterministic() {
    for args in [&["verify", "dichotomy", "--seed", "7", "--size", "60"][..], &["rootsys", "--debug-forms", "--seed", "3"][..]] {
        let mut full = vec!["--format", "json"];
        full.extend_from_slice(args);
        let a = run(&full).stdout;
        let b = run(&full).stdout;
        assert!(!a.is_empty());
        assert_eq!(a, b);
    }
}

#[test]
fn verify_seeded_suites_pass() {
    let v = json(&["verify", "all", "--seed", "0", "--size", "100"], 0);
    for p in v["properties"].as_array().unwrap() {
        assert_eq!(p["failed"], 0, "{p}");
    }
}

#[test]
fn exit_code_two_on_bad_input() {
    for args in [
        &["theta", "g2p", "JP(1/2; st(1)"][..],
        &["theta", "g2p", "pi_gen[frob]"][..],
        &["decompose", "g2", "X", "0", "st(1)"][..],
        &["decompose", "pgsp6", "P3", "1", "St3(1)"][..],
        &["verify", "nonsense"][..],
        &["--p", "5", "rootsys"][..],
        &["ie-filtration", "1/2", "F4"][..],
        &["no-such-command"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn syntax_errors_report_the_offset() {
    let out = run(&["theta", "g2p", "JP(1/2; st(1)"]);
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("offset 13"), "{msg}");
}

#[test]
fn p_context_from_environment_and_flag_precedence() {
    let with_env = |extra: &[&str]| {
        let mut c = bin();
        c.env("PCONTEXT", "3").args(["--format", "json"]).args(extra).args(["theta", "d2g", "pd(tau0, no)"]);
        c.output().unwrap()
    };
    let env_only = with_env(&[]);
    assert_eq!(env_only.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&env_only.stdout).unwrap();
    assert_eq!(v["value"], "zero");
    // outside p = 3 the literal is rejected, so the flag must have won
    assert_eq!(with_env(&["--p", "other"]).status.code(), Some(2));
}

#[test]
fn registry_from_file_and_environment() {
    let dir = std::env::temp_dir().join(format!("g2theta-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("reg.toml");
    std::fs::write(&path, "[[symbol]]\nname = \"xi\"\norder = 2\nramified = true\n").unwrap();
    let p = path.to_str().unwrap();

    let v = json(&["--registry", p, "theta", "g2p", "pi_gen[xi]"], 0);
    assert_eq!(v["target"], "sigma_gen[xi]");
    // chi2 is not in this registry
    assert_eq!(run(&["--registry", p, "theta", "g2p", "pi_gen[chi2]"]).status.code(), Some(2));

    let out = bin().env("REGISTRY", p).args(["dichotomy", "pi_gen[xi]"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(run(&["--registry", dir.join("missing.toml").to_str().unwrap(), "rootsys"]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn text_format_is_default() {
    let out = run(&["dichotomy", "St_G2"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "St_G2: pgsp6_side");
}
