use std::process::{Command, Output};

fn stresslab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stresslab")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Output without the instance line, which names the source.
fn body(o: &Output) -> String {
    stdout(o).lines().filter(|l| !l.starts_with("instance:")).collect::<Vec<_>>().join("\n")
}

#[test]
fn build_load_recompute() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gamma.json");
    let file = path.to_str().unwrap();
    assert!(stresslab(&["build", "--builder", "stellar-cross:d=5", "--out", file]).status.success());
    for args in [vec!["betti", "--ring", "both"], vec!["socle"], vec!["gvector"], vec!["rigidity"], vec!["stress", "--degree", "2"]] {
        let mut from_builder = args.clone();
        from_builder.extend(["--builder", "stellar-cross:d=5"]);
        let mut from_file = args.clone();
        from_file.extend(["--in", file]);
        let (a, b) = (stresslab(&from_builder), stresslab(&from_file));
        assert!(a.status.success() && b.status.success(), "{args:?}");
        assert_eq!(body(&a), body(&b), "{args:?}");
    }
}

#[test]
fn stress_participation_and_dump() {
    let dir = tempfile::tempdir().unwrap();
    let dump = dir.path().join("s2.json");
    let o = stresslab(&["stress", "--builder", "cross:d=4", "--degree", "2", "--edge", "1,2", "--dump", dump.to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("dim S_2 = 2"));
    assert!(text.contains("participates: true"));
    let j: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&dump).unwrap()).unwrap();
    assert_eq!(j["degree"], 2);
    assert_eq!(j["basis"].as_array().unwrap().len(), 2);
    for v in j["squarefree"][0].as_object().unwrap().values() {
        assert!(v.as_str().unwrap().contains('/'), "exact rational expected, got {v}");
    }
}

#[test]
fn verify_exit_codes_and_seed_echo() {
    let o = stresslab(&["verify", "--claim", "Prop3.2", "--builder", "cross:d=4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("\"status\":\"verified\""));
    assert!(text.lines().any(|l| l == "seed: 0"));

    let o = stresslab(&["verify", "--claim", "Lem5.2", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "seed: 7"));
    assert!(stdout(&o).contains("seed=7"));
}

#[test]
fn input_errors_exit_two() {
    for args in [
        vec!["gvector", "--builder", "cube:d=3"],
        vec!["stress", "--builder", "cross:d=3", "--degree", "2", "--edge", "1,4"],
        vec!["verify", "--claim", "Nope"],
        vec!["betti", "--in", "/nonexistent.json"],
        vec!["socle"],
        vec!["betti", "--builder", "cross:d=3", "--ring", "q"],
    ] {
        let o = stresslab(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}
