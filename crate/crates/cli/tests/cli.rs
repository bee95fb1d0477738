use std::process::{Command, Output};

fn latchi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latchi")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("latchi-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn catalog_list_json_has_52_entries() {
    let o = latchi(&["catalog", "list", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let entries = v.as_array().unwrap();
    assert_eq!(entries.len(), 52);
    assert_eq!(entries[0]["symbol"], "K_5");
    assert_eq!(entries[0]["voronoi"].as_array().unwrap().len(), 15);
}

#[test]
fn classify_json_names_classes() {
    let o = latchi(&["classify", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let classes = v.as_array().unwrap();
    assert_eq!(classes.len(), 16);
    assert_eq!(classes[8]["graph_name"], "V_24^n");
    assert_eq!(classes[8]["members"].as_array().unwrap().len(), 18);
    assert_eq!(classes[1]["signature"]["aut"], 144);
}

#[test]
fn invariants_of_the_cubic_lattice() {
    let o = latchi(&["invariants", "1+1+1+1"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("order   40320"), "{out}");
    assert!(out.contains("class   16 V_8^z"), "{out}");
}

#[test]
fn exit_codes_follow_agreement() {
    assert_eq!(latchi(&["chi", "dpb", "--entry", "222+", "--k", "3"]).status.code(), Some(0));
    assert_eq!(latchi(&["chi", "dpb", "--entry", "1+1+1+1", "--k", "2"]).status.code(), Some(0));
    assert_eq!(latchi(&["chi", "dtb", "--entry", "1+1+1+1", "--c", "2"]).status.code(), Some(0));
    // below chi the torus must be uncolorable, which is what is expected
    let o = latchi(&["chi", "dtb", "--entry", "C_3+C_3", "--c", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("UNSAT"));
    // a budget too small to finish is an error, not a verdict
    let o = latchi(&["--budget", "1", "chi", "dpb", "--entry", "K_{3,3}", "--k", "6"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(latchi(&["invariants", "no-such-lattice"]).status.code(), Some(2));
}

#[test]
fn full_run_for_one_entry_writes_certificates() {
    let dir = scratch("certs");
    let o = latchi(&["chi", "full", "--entry", "C_3+1+1", "--out", dir.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));
    let json = std::fs::read_to_string(dir.join("class15-C3p1p1.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["chi"], 3);
    assert_eq!(v["torus_stats"]["vertices"], 81);
    let cnf = std::fs::read_to_string(dir.join("class15-C3p1p1-dpb-k2.cnf")).unwrap();
    // 11 vertices, 16 edges, k = 2
    assert!(cnf.starts_with("p cnf 22 43\n"));
    let sol = std::fs::read_to_string(dir.join("class15-C3p1p1-dtb-c3.sol")).unwrap();
    assert!(sol.starts_with("s SATISFIABLE\n"));
}

#[test]
fn emit_and_export() {
    let cnf = scratch("edge.cnf");
    let o = latchi(&["emit-cnf", "--entry", "1+1+1+1", "--ball", "--k", "2", "--out", cnf.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&cnf).unwrap();
    assert!(text.starts_with("p cnf 18 25\n1 2 0\n"));

    let edges = scratch("torus.txt");
    let o = latchi(&["graph", "export", "--entry", "C_3+C_3", "--torus", "3", "--out", edges.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&edges).unwrap();
    assert!(text.starts_with("p 81 486\n"));
    assert_eq!(text.lines().count(), 487);

    let json = scratch("ball.json");
    let o = latchi(&["graph", "export", "--entry", "K_5", "--ball", "2", "--out", json.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v["labels"][0], serde_json::json!([0, 0, 0, 0]));

    let o = latchi(&["emit-cnf", "--entry", "K_5", "--ball", "--torus", "5", "--k", "3", "--out", "x"]);
    assert!(!o.status.success());
}

#[test]
fn demo_smoke_test() {
    let o = latchi(&["demo"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.ends_with(" ok")).count(), 7, "{out}");
}
