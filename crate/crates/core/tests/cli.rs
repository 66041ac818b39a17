use num_rational::BigRational;
use serde_json::Value;
use vertexkit::algebra::{parse_rational, rat};
use vertexkit::cli::run_with;

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("vertexkit").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn enumerate_counts() {
    assert_eq!(run(&["enumerate", "--dwbc", "3"]).1.trim(), r#"{"states": 7}"#);
    let v = json(&["enumerate", "--dwbc", "2", "--render"]);
    assert_eq!(v["renders"].as_array().unwrap().len(), 2);
}

#[test]
fn symbolic_partition_text() {
    let (code, out, _) = run(&["partition", "--dwbc", "1", "--scheme", "ff", "--symbolic"]);
    assert_eq!((code, out.trim()), (0, "1 - a1*b1"));
}

#[test]
fn point_partition_matches_factored_form() {
    let point = r#"{"x1":"1","x2":"2","y1":"3","y2":"1/2","a1":"2","a2":"-1","b1":"1/3","b2":"5"}"#;
    let (code, out, _) = run(&["partition", "--dwbc", "2", "--point", point]);
    assert_eq!(code, 0);
    // (x2 + y1)(1 - a1 b1)(1 - a2 b1)(1 - a2 b2)
    let (x2, y1, a1, a2, b1, b2) = (rat(2, 1), rat(3, 1), rat(2, 1), rat(-1, 1), rat(1, 3), rat(5, 1));
    let one = rat(1, 1);
    let oracle: BigRational = (&x2 + &y1) * (&one - &a1 * &b1) * (&one - &a2 * &b1) * (&one - &a2 * &b2);
    assert_eq!(parse_rational(out.trim()).unwrap(), oracle);
}

#[test]
fn ybe_solve_reports_six_weights() {
    let v = json(&["ybe", "solve", "--orientation", "v", "--pair", "1,2", "--symbolic"]);
    assert_eq!(v["weights"].as_object().unwrap().len(), 6);
    assert_eq!(v["orientation"], "v");
}

#[test]
fn reduce_agrees_with_enumeration() {
    let v = json(&["reduce", "--model-size", "3,3", "--alpha", "3,1", "--beta", "2,1", "--points", "2", "--seed", "1", "--emit-word"]);
    assert_eq!(v["pass"], true);
    assert_eq!(v["reaches"], serde_json::json!(["(3,1)", "(2,1)"]));
    assert!(v["word"].is_string());
}

#[test]
fn factor_dwbc_is_complete_and_stable() {
    let a = run(&["schur", "factor-dwbc", "--n", "2"]);
    let b = run(&["schur", "factor-dwbc", "--n", "2"]);
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a.1).unwrap();
    assert_eq!(v["complete"], true);
    assert_eq!(v["factors"].as_array().unwrap().len(), 4);
}

#[test]
fn alternant_of_a_single_box() {
    let (code, out, _) = run(&["schur", "alternant", "--lambda", "1", "--n", "2", "--sign", "plus"]);
    assert_eq!((code, out.trim()), (0, "a2 + a1 + x2 + x1"));
}

#[test]
fn verify_reports_are_deterministic() {
    let first = run(&["verify", "proposition", "--seed", "5"]);
    let second = run(&["verify", "proposition", "--seed", "5"]);
    assert_eq!(first.0, 0);
    assert_eq!(first, second);
    let v: Value = serde_json::from_str(&first.1).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["suite"], "proposition");
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["verify", "nope", "--seed", "1"][..],
        &["partition", "--dwbc", "7", "--symbolic"],
        &["schur", "alternant", "--lambda", "1,3", "--n", "2"],
        &["partition", "--dwbc", "2", "--symbolic", "--points", "3", "--seed", "1"],
        &["bogus"],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}
