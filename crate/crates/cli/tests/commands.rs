use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fakedeg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn info_reports_invariants() {
    let e8 = json(&run(&["info", "E8", "--format", "json"]));
    assert_eq!(e8["h"], 30);
    assert_eq!(e8["roots"], 240);
    let a1 = json(&run(&["info", "a1", "--format", "json"]));
    assert_eq!((a1["h"].as_u64(), a1["roots"].as_u64()), (Some(2), Some(2)));
    let i14 = json(&run(&["info", "I2(14)", "--format", "json"]));
    assert_eq!(i14["h"], 14);
    let sizes: Vec<u64> = i14["orbits"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| o["size"].as_u64().unwrap())
        .collect();
    assert_eq!(sizes, vec![14, 14]);
    assert!(stdout(&run(&["info", "E8"])).contains("degrees    2 8 12 14 18 20 24 30"));
}

#[test]
fn fakedeg_outputs() {
    let h3 = stdout(&run(&["fakedeg", "H3"]));
    assert!(h3.contains("f(q)/[h]_q  1 + q^2 + q^4\n"), "{h3}");
    let b3 = stdout(&run(&["fakedeg", "B3", "--orbit", "short"]));
    assert!(b3.contains("f(q)/[h]_q  1\n"), "{b3}");
    let a2 = json(&run(&["fakedeg", "A2", "--format", "json"]));
    assert_eq!(a2["f"], serde_json::json!({"coeffs": [1, 2, 2, 1]}));
    let c = stdout(&run(&["fakedeg", "C3", "--orbit", "long", "--format", "csv"]));
    assert_eq!(
        c,
        "type,h,orbit,f,quotient,gcd\nC3,6,long,1 + q + q^2 + q^3 + q^4 + q^5,1,1 + q^2 + q^4\n"
    );
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["info", "X9"][..],
        &["info", "D3"],
        &["fakedeg", "E6", "--orbit", "short"],
        &["fakedeg", "E6", "--orbit", "medium"],
        &["info", "E8", "--format", "csv"],
        &["verify"],
        &["table", "--max-m", "2"],
        &["frobnicate"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn table_formats() {
    let csv = stdout(&run(&["table", "--format", "csv", "--max-rank", "4", "--max-m", "6"]));
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "type,h,orbit,stabilizer,quotient,gcd");
    assert!(lines.contains(&"H3,10,all,A1 x A1,1 + q^2 + q^4,1"));
    assert!(lines.contains(&"F4,12,long,B3,1 + q^4,1 + q^6"));
    assert!(lines.contains(&"D4,6,all,A1 x A1 x A1,1 + 2*q^2 + q^4,1"));
    let families: Vec<&str> = lines[1..].iter().map(|l| l.split(',').next().unwrap()).collect();
    for t in ["A1", "A2", "A3", "B2", "B4", "D4", "E8", "H4", "I2(5)", "I2(6)"] {
        assert!(families.contains(&t), "{t}");
    }
    assert!(!families.contains(&"A5") && !families.contains(&"D5"));

    let latex = stdout(&run(&["table", "--format", "latex", "--max-rank", "4", "--max-m", "6"]));
    assert!(latex.starts_with("\\begin{tabular}"));
    assert!(latex.contains("$E_7$ & $18$ & all & $D6$ & $1 + q^{4} + q^{6} + q^{8} + q^{10} + q^{12} + q^{16}$"));
    assert!(latex.contains("$\\frac{[2]_{q^{6}} [7]_{q^{2}}}{[2]_{q^{2}}}$"));
}

#[test]
fn verify_single_types() {
    let e8 = run(&["verify", "E8"]);
    assert_eq!(e8.status.code(), Some(0));
    let report = json(&e8);
    assert_eq!(report["type"], "E8");
    let ids: Vec<&str> = report["claims"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    for id in [
        "thm1i.all",
        "thm1ii",
        "lemma2.1.all",
        "lemma3.2",
        "eq3.2",
        "table.all",
        "prop4.1",
        "prop5.1.all",
        "fU",
    ] {
        assert!(ids.contains(&id), "{id}");
    }
    let h4 = json(&run(&["verify", "H4"]));
    let thm = h4["claims"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == "thm1ii")
        .unwrap();
    assert_eq!(thm["status"], "not-applicable");
}

#[test]
fn verify_reports_failures_with_exit_one() {
    let o = run(&["verify", "D5"]);
    assert_eq!(o.status.code(), Some(1));
    let report = json(&o);
    let failed: Vec<&str> = report["claims"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert_eq!(failed, vec!["table.all"]);
}
