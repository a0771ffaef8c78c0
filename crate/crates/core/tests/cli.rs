use std::process::Command;

fn idealtop(args: &[&str]) -> (bool, Option<i32>, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_idealtop")).args(args).output().unwrap();
    (
        out.status.success(),
        out.status.code(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn analyze_primary_ideals_of_z12() {
    let (ok, _, out, _) = idealtop(&["analyze", "Z/12", "--family", "prm"]);
    assert!(ok);
    assert!(out.contains("Prm = {(4), (3), (2)}"), "{out}");
    assert!(out.contains("sober: yes (criterion: yes), spectral: yes"), "{out}");
}

#[test]
fn analyze_product_is_not_irreducible() {
    let (ok, _, out, _) = idealtop(&["analyze", "Z/2 x Z/2", "--family", "prm"]);
    assert!(ok);
    assert!(out.contains("irreducible: no"), "{out}");
}

#[test]
fn analyze_chain_ring_json() {
    let (ok, _, out, _) = idealtop(&["analyze", "GF(2)[x]/(x^3)", "--json"]);
    assert!(ok);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["ideal_count"], 4);
    assert_eq!(v["schema_version"], 1);
    let prm = v["families"].as_array().unwrap().iter().find(|f| f["family"] == "prm").unwrap();
    let prp = v["families"].as_array().unwrap().iter().find(|f| f["family"] == "prp").unwrap();
    assert_eq!(prm["members"], prp["members"]);
    let (_, _, again, _) = idealtop(&["analyze", "GF(2)[x]/(x^3)", "--json"]);
    assert_eq!(out, again);
    let echoed = v["ring"].as_str().unwrap();
    let (_, _, replayed, _) = idealtop(&["analyze", echoed, "--json"]);
    assert_eq!(out, replayed);
}

#[test]
fn parse_errors_report_position() {
    let (ok, code, _, err) = idealtop(&["analyze", "Z/4 x ?"]);
    assert!(!ok);
    assert_eq!(code, Some(2));
    assert!(err.contains("position"), "{err}");
}

#[test]
fn z_example_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let (ok, _, text, _) = idealtop(&["z-example", "--bound", "2", "--out", out]);
    assert!(ok, "{text}");
    assert!(dir.path().join("reg_z_certificate.json").exists());
    assert!(dir.path().join("prm_z_verdict.json").exists());
    let (ok, _, _, _) = idealtop(&["z-example", "--bound", "1000", "--out", out]);
    assert!(ok);
    let (ok, _, _, err) = idealtop(&["z-example", "--bound", "10000000", "--out", out]);
    assert!(!ok);
    assert!(err.contains("exceeds"), "{err}");
}

#[test]
fn verify_single_check_on_custom_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("custom.json");
    std::fs::write(&corpus, r#"{"zmod_max": 12, "poly_p_max": 2, "poly_deg_max": 1, "product_factors_max": 2, "max_ring_size": 16}"#).unwrap();
    let out = dir.path().join("reports");
    let (ok, _, text, _) = idealtop(&[
        "verify",
        "--only",
        "chk-sober-eq",
        "--corpus",
        corpus.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(ok, "{text}");
    let files: Vec<_> = std::fs::read_dir(&out).unwrap().map(|e| e.unwrap().file_name()).collect();
    assert_eq!(files.len(), 2);
    let summary: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out.join("summary.json")).unwrap()).unwrap();
    assert_eq!(summary["corpus"]["zmod_max"], 12);
    assert!(summary["corpus_size"].as_u64().unwrap() < 40);
}

#[test]
fn corpus_gen_lists_rings() {
    let (ok, _, out, _) = idealtop(&["corpus-gen"]);
    assert!(ok);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v.as_array().unwrap().len() >= 150);
}
