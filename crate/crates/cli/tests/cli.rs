use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::Arc;

use chevalley::chevgroup::{unipotent_product, GroupContext};
use chevalley::exactring::{Ring, RingValue};
use chevalley::minuscule::WeightBasis;
use chevalley::rootdata::{LieType, RootDatum};
use serde_json::{json, Value};

fn chevalley(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chevalley"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("chevalley-cli-{}-{name}", std::process::id()))
}

#[test]
fn orbit_e6_has_27_weights() {
    let v = stdout_json(&chevalley(&["orbit", "--type", "E6", "--node", "1"]));
    assert_eq!(v["size"], 27);
    assert_eq!(v["weights"][0], json!([1, 0, 0, 0, 0, 0]));
    assert_eq!(v["weights"].as_array().unwrap().len(), 27);
}

#[test]
fn orbit_b3_spin() {
    let v = stdout_json(&chevalley(&[
        "orbit", "--type", "B", "--rank", "3", "--node", "1",
    ]));
    assert_eq!(v["size"], 8);
}

#[test]
fn output_is_byte_stable() {
    let args = [
        "generators",
        "--type",
        "A",
        "--rank",
        "2",
        "--nodes",
        "1",
        "--ring",
        "gfp:5",
    ];
    let a = chevalley(&args);
    let b = chevalley(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn generators_a2_over_f5() {
    let v = stdout_json(&chevalley(&[
        "generators",
        "--type",
        "A",
        "--rank",
        "2",
        "--nodes",
        "1",
        "--ring",
        "gfp:5",
    ]));
    let docs = v.as_array().unwrap();
    // x, y, n, h per node, then one element per root.
    assert_eq!(docs.len(), 4 * 2 + 6);
    let x1 = &docs[0];
    assert_eq!(x1["metadata"]["generator"], "x_1");
    assert_eq!(
        x1["entries"],
        json!([[0, 0, "1"], [0, 1, "1"], [1, 1, "1"], [2, 2, "1"]])
    );
    let h1 = &docs[3];
    assert_eq!(h1["metadata"]["parameter"], "2");
    assert_eq!(h1["metadata"]["primitive_root"], 2);
    assert_eq!(
        h1["entries"],
        json!([[0, 0, "2"], [1, 1, "3"], [2, 2, "1"]])
    );
    assert_eq!(h1["basis"], json!([[1, 0], [-1, 1], [0, -1]]));
}

#[test]
fn verify_all_smallest_instance() {
    let out = chevalley(&[
        "verify", "--suite", "all", "--type", "A", "--rank", "1", "--nodes", "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("ok ")));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_each_suite() {
    for suite in ["serre", "braid", "commutator", "torus", "weyl"] {
        let out = chevalley(&[
            "verify", "--suite", suite, "--type", "C", "--rank", "2", "--nodes", "2", "--ring",
            "gfp:5",
        ]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{suite}: {}",
            String::from_utf8_lossy(&out.stdout)
        );
    }
}

#[test]
fn weyl_cap_exits_3() {
    let out = chevalley(&[
        "verify", "--suite", "weyl", "--type", "E7", "--nodes", "7", "--cap", "2000",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn enumerate_sl3_f2() {
    let out = chevalley(&[
        "enumerate",
        "--type",
        "A",
        "--rank",
        "2",
        "--nodes",
        "1",
        "--ring",
        "gfp:2",
    ]);
    assert_eq!(stdout_json(&out), json!({"order": 168, "completed": true}));
    let capped = chevalley(&[
        "enumerate",
        "--type",
        "A",
        "--rank",
        "2",
        "--nodes",
        "1",
        "--ring",
        "gfp:2",
        "--cap",
        "20",
    ]);
    assert_eq!(capped.status.code(), Some(3));
}

#[test]
fn center_spin8() {
    let v = stdout_json(&chevalley(&[
        "center", "--type", "D", "--rank", "4", "--nodes", "1,2", "--ring", "gfp:5",
    ]));
    assert_eq!(v["order"], 4);
    assert_eq!(v["invariant_factors"], json!([2, 2]));
    assert_eq!(v["elements"].as_array().unwrap().len(), 4);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["orbit", "--type", "A", "--nodes", "1"],
        vec!["orbit", "--type", "E8", "--nodes", "1"],
        vec!["orbit", "--type", "B", "--rank", "3", "--nodes", "2"],
        vec!["orbit", "--type", "A", "--rank", "2", "--nodes", "3"],
        vec!["orbit", "--type", "E6", "--rank", "7", "--nodes", "1"],
        vec![
            "center", "--type", "A", "--rank", "1", "--nodes", "1", "--ring", "int",
        ],
        vec![
            "center", "--type", "A", "--rank", "1", "--nodes", "1", "--ring", "gfp:4",
        ],
        vec![
            "orbit",
            "--type",
            "A",
            "--rank",
            "2",
            "--nodes",
            "1",
            "--unknown",
        ],
    ] {
        assert_eq!(chevalley(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn factorize_round_trip() {
    let ring = Ring::prime_field(7).unwrap();
    let datum = Arc::new(RootDatum::build("A3".parse::<LieType>().unwrap()).unwrap());
    let ctx = GroupContext::new(WeightBasis::build(datum, &[0]).unwrap(), ring.clone()).unwrap();
    let order: Vec<usize> = ctx.datum().positive_roots().collect();
    let coeffs: Vec<RingValue> = (0..order.len())
        .map(|k| RingValue::from_i64(&ring, k as i64 + 1))
        .collect();
    let g = unipotent_product(&ctx, &order, &coeffs).unwrap();
    let entries: Vec<Value> = g
        .matrix()
        .entries()
        .map(|(r, c, v)| json!([r, c, ring.format(v)]))
        .collect();
    let doc = json!({
        "dim": 4,
        "ring": "gfp:7",
        "entries": entries,
        "basis": ctx.basis().weights().iter().map(|w| w.0.clone()).collect::<Vec<_>>(),
        "metadata": {"type": "A3", "rank": 3, "nodes": [1], "generator": "product", "parameter": null},
    });
    let path = scratch("factor.json");
    std::fs::write(&path, doc.to_string()).unwrap();
    let v = stdout_json(&chevalley(&[
        "factorize",
        "--type",
        "A",
        "--rank",
        "3",
        "--nodes",
        "1",
        "--in",
        path.to_str().unwrap(),
    ]));
    let got: Vec<String> = v["factors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["coefficient"].as_str().unwrap().to_string())
        .collect();
    let want: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    assert_eq!(got, want);
    assert_eq!(v["factors"][0]["root"], json!([1, 0, 0]));

    // A lower triangular matrix is rejected as a verification failure.
    let lower = json!({
        "dim": 4, "ring": "gfp:7",
        "entries": [[0, 0, "1"], [1, 0, "1"], [1, 1, "1"], [2, 2, "1"], [3, 3, "1"]],
        "basis": doc["basis"], "metadata": doc["metadata"],
    });
    std::fs::write(&path, lower.to_string()).unwrap();
    let out = chevalley(&[
        "factorize",
        "--type",
        "A",
        "--rank",
        "3",
        "--nodes",
        "1",
        "--in",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let mismatch = chevalley(&[
        "factorize",
        "--type",
        "A",
        "--rank",
        "3",
        "--nodes",
        "1",
        "--ring",
        "gfp:5",
        "--in",
        path.to_str().unwrap(),
    ]);
    assert_eq!(mismatch.status.code(), Some(2));
    std::fs::remove_file(&path).ok();
}

#[test]
fn export_gap() {
    let out = chevalley(&[
        "export", "--format", "gap", "--type", "A", "--rank", "1", "--nodes", "1", "--ring",
        "gfp:3",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("x1 := [[1,1],[0,1]];"));
    assert!(text.contains("y1 := [[1,0],[1,1]];"));
    assert!(text.contains("n1 := [[0,1],[2,0]];"));
    assert!(text.contains("h1 := [[2,0],[0,2]];"));
    for line in text.lines().filter(|l| !l.starts_with('#')) {
        assert!(line.ends_with("];") && line.contains(" := [["), "{line}");
    }
}

#[test]
fn thread_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_chevalley"))
        .args([
            "enumerate",
            "--type",
            "A",
            "--rank",
            "1",
            "--nodes",
            "1",
            "--ring",
            "gfp:3",
        ])
        .env("CHEVALLEY_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(stdout_json(&out), json!({"order": 24, "completed": true}));
    let bad = Command::new(env!("CARGO_BIN_EXE_chevalley"))
        .args(["orbit", "--type", "A", "--rank", "1", "--nodes", "1"])
        .env("CHEVALLEY_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
