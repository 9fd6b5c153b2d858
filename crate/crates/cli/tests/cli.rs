use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn brill(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brill"))
        .args(args)
        .env_remove("BRILL_TERM_CAP")
        .env_remove("BRILL_COLUMN_CAP")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    fs::write(&p, contents).unwrap();
    p
}

fn tsv_pattern(table: &str) -> Vec<(u32, bool)> {
    table
        .lines()
        .skip(1)
        .map(|l| {
            let cols: Vec<&str> = l.split('\t').collect();
            (cols[1].parse().unwrap(), cols[4] == "1")
        })
        .collect()
}

#[test]
fn membership_verdicts_and_exit_codes() {
    let product = scratch("m_product.json", r#"{"n":3,"grade":3,"terms":[{"c":"1","m":[1,1,1]}]}"#);
    let o = brill(&["membership", "--poly", product.to_str().unwrap(), "--d", "3", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), r#"{"brill_zero":true,"nonzero_terms":0}"#);

    let quadric = scratch(
        "m_quadric.json",
        r#"{"n":3,"grade":2,"terms":[{"c":"1","m":[1,1,0]},{"c":"1","m":[0,0,2]}]}"#,
    );
    let o = brill(&["membership", "--poly", quadric.to_str().unwrap(), "--d", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains(r#""brill_zero":false"#));

    let o = brill(&["membership", "--poly", quadric.to_str().unwrap(), "--d", "3"]);
    assert_eq!(o.status.code(), Some(2));

    let broken = scratch("m_broken.json", "{not json");
    let o = brill(&["membership", "--poly", broken.to_str().unwrap(), "--d", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_theorem_patterns() {
    let expect = [
        (2, vec![(0, false), (1, false), (2, true)]),
        (3, vec![(0, false), (1, false), (2, true), (3, false)]),
        (5, vec![(0, false), (1, false), (2, true), (3, true), (4, true), (5, true)]),
    ];
    for (d, pattern) in expect {
        let o = brill(&["verify-theorem", "--d", &d.to_string(), "--max-generic-d", "5"]);
        assert_eq!(o.status.code(), Some(0), "d = {d}");
        let table = stdout(&o);
        assert_eq!(tsv_pattern(&table), pattern);
        assert!(!table.contains("skipped"));
    }
    let o = brill(&["verify-theorem", "--d", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("skipped"));
}

#[test]
fn verify_theorem_respects_caps() {
    let o = brill(&["verify-theorem", "--d", "4", "--term-cap", "10"]);
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_brill"))
        .args(["verify-theorem", "--d", "4"])
        .env("BRILL_TERM_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn gen_writes_equations() {
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("gen_2_3.json");
    let o = brill(&["gen", "--d", "2", "--n", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("coordinates\t"));
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    let eqs = json["equations"].as_array().unwrap();
    assert!(!eqs.is_empty());
    for e in eqs {
        for t in e["poly"].as_array().unwrap() {
            let exps: Vec<u64> = t["exps"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
            assert!(exps.len() <= 6);
            assert_eq!(exps.iter().sum::<u64>(), 3);
        }
    }

    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("gen_2_2.json");
    let o = brill(&["gen", "--d", "2", "--n", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&out).unwrap().trim(), r#"{"d":2,"n":2,"equations":[]}"#);

    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("gen_4_3.json");
    let o = brill(&["gen", "--d", "4", "--n", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn representation_commands() {
    let o = brill(&["multiplicity", "--lambda", "4,2", "--k", "3", "--d", "2"]);
    assert_eq!(stdout(&o), "1\n");
    let o = brill(&["multiplicity", "--lambda", "6,3,3", "--k", "4", "--d", "3"]);
    assert_eq!(stdout(&o), "0\n");
    let o = brill(&["multiplicity", "--lambda", "6,3,3", "--k", "4", "--d", "3", "--column-cap", "3"]);
    assert_eq!(o.status.code(), Some(3));
    let o = brill(&["multiplicity", "--lambda", "3,4", "--k", "1", "--d", "7"]);
    assert_eq!(o.status.code(), Some(2));

    let o = brill(&["hwv", "--d", "2", "--j", "0"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 1);
    assert_eq!(v["grade"], serde_json::json!([2, 2]));
}

#[test]
fn pairing_table_format() {
    let o = brill(&["pairing-table", "--dmax", "3", "--max-generic-d", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let table = stdout(&o);
    let lines: Vec<&str> = table.lines().collect();
    assert_eq!(lines[0], "d\tj\tclosed_form\tgeneric\tin_image");
    assert_eq!(lines.len(), 1 + 3 + 4);
    assert!(lines[1..4].iter().all(|l| !l.contains("skipped")));
    assert!(lines[4..].iter().all(|l| l.split('\t').nth(3) == Some("skipped")));
    assert_eq!(lines[7], "3\t3\t0\tskipped\t0");
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        vec!["sample", "--d", "4", "--seed", "11"],
        vec!["sample", "--d", "3", "--seed", "11", "--kind", "generic"],
        vec!["pairing-table", "--dmax", "4"],
        vec!["hwv", "--d", "4", "--j", "3"],
    ] {
        assert_eq!(brill(&args).stdout, brill(&args).stdout, "{args:?}");
    }
    let sampled = stdout(&brill(&["sample", "--d", "3", "--seed", "5"]));
    let path = scratch("sampled.json", &sampled);
    let o = brill(&["membership", "--poly", path.to_str().unwrap(), "--d", "3"]);
    assert_eq!(o.status.code(), Some(0));
}
