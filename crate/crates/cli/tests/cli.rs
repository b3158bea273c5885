use std::process::{Command, Output};

use hfold_roots::data::{D6_FIBERS, H3_PARITY};

fn hfold(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hfold")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    csv::Reader::from_reader(text.as_bytes()).records().map(|r| r.unwrap().iter().map(String::from).collect()).collect()
}

#[test]
fn fiber_table_matches_reference_rows() {
    let o = hfold(&["tables", "fibers", "--system", "h3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows.len(), 15);
    for (row, r) in rows.iter().zip(D6_FIBERS) {
        assert_eq!((row[0].as_str(), row[1].as_str(), row[2].as_str()), r);
    }
    let e8 = hfold(&["tables", "fibers", "--kind", "e8", "--format", "csv"]);
    assert_eq!(csv_rows(&stdout(&e8)).len(), 60);
}

#[test]
fn parity_table_matches_reference_values() {
    let o = hfold(&["tables", "parity", "--system", "h3", "--format", "csv"]);
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows.len(), 15);
    for (row, (label, vals)) in rows.iter().zip(H3_PARITY) {
        assert_eq!(row[0], label);
        let want: Vec<String> = vals.iter().map(|(a, b)| format!("({a},{b})")).collect();
        assert_eq!(row[1..], want[..]);
    }
}

#[test]
fn commaps_and_homotopy_row_counts() {
    let h3 = hfold(&["tables", "commaps", "--system", "h3", "--format", "csv"]);
    assert_eq!(csv_rows(&stdout(&h3)).len(), 22);
    let h4 = hfold(&["tables", "commaps", "--system", "h4", "--format", "csv"]);
    let rows = csv_rows(&stdout(&h4));
    assert_eq!(rows.len(), 24);
    assert_eq!(rows[0], ["rho0", "rho1", "", "a*c", "b*d"]);
    let cyc = hfold(&["tables", "homotopy", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&cyc)).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 63);
}

#[test]
fn invalid_selectors_exit_2() {
    for args in [
        &["tables", "parity", "--system", "h2"][..],
        &["tables", "homotopy", "--system", "h4"],
        &["tables", "fibers", "--system", "d4"],
        &["verify", "unfold", "--kind", "a4"],
        &["verify", "steinberg", "--ring", "q"],
        &["verify", "nosuch"],
    ] {
        assert_eq!(hfold(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn unwritable_output_exits_3() {
    let o = hfold(&["tables", "fibers", "--out", "/nonexistent-dir/t.md"]);
    assert_eq!(o.status.code(), Some(3));
}

fn without_elapsed(text: &str) -> serde_json::Value {
    let mut v: serde_json::Value = serde_json::from_str(text).unwrap();
    v.as_object_mut().unwrap().remove("elapsed");
    v
}

#[test]
fn reports_are_sorted_and_deterministic_across_job_counts() {
    let a = hfold(&["verify", "rootsys", "--jobs", "1"]);
    let b = hfold(&["verify", "rootsys", "--jobs", "4"]);
    assert_eq!(a.status.code(), Some(0));
    let (va, vb) = (without_elapsed(&stdout(&a)), without_elapsed(&stdout(&b)));
    assert_eq!(va, vb);
    let ids: Vec<&str> = va["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert!(va["checks"].as_array().unwrap().iter().all(|c| c["paper_anchor"].is_string() && c["status"] == "pass"));
    let t1 = hfold(&["tables", "commaps", "--system", "h3", "--jobs", "1"]);
    let t4 = hfold(&["tables", "commaps", "--system", "h3", "--jobs", "3"]);
    assert_eq!(t1.stdout, t4.stdout);
}

#[test]
fn steinberg_over_z_is_seeded() {
    let run = |seed: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_hfold")).args(["verify", "steinberg", "--system", "h3", "--ring", "z7"]).env("HFOLD_SEED", seed).output().unwrap();
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        without_elapsed(&stdout(&o))
    };
    assert_eq!(run("11"), run("11"));
    let bad = Command::new(env!("CARGO_BIN_EXE_hfold")).args(["verify", "rootsys"]).env("HFOLD_SEED", "x").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
