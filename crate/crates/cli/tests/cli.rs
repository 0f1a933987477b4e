use std::path::{Path, PathBuf};
use std::process::Command;

use posetlab::iso::is_isomorphic;
use posetlab::{catalog, format};
use serde_json::Value;
use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("bad json ({e}): {}", self.stdout))
    }
}

fn posetlab(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_posetlab")).args(args).output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn export(dir: &Path, id: &str) -> String {
    let path: PathBuf = dir.join(format!("{id}.poset"));
    let p = path.to_str().unwrap().to_string();
    assert_eq!(posetlab(&["catalog", "export", id, "-o", &p]).code, 0);
    p
}

fn strs(v: &Value) -> Vec<&str> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect()
}

#[test]
fn check_reports_witness_by_name() {
    let dir = TempDir::new().unwrap();
    let fig4 = export(dir.path(), "fig4");
    let r = posetlab(&["check", &fig4, "--property", "modular"]);
    assert_eq!(r.code, 1);
    let j = r.json();
    assert_eq!(j["holds"], false);
    assert_eq!(strs(&j["witness"]["elements"]).len(), 3);
    assert_eq!(j["forms"]["modular_lower"], false);

    let r = posetlab(&["check", &fig4, "--property", "modular", "--at", "b", "f", "c'"]);
    assert_eq!(r.code, 1);
    let j = r.json();
    assert_eq!(j["laws"][0]["outcome"], "fails");
    assert_eq!(strs(&j["laws"][0]["rhs"]), ["0", "b"]);

    let fig2 = export(dir.path(), "fig2");
    assert_eq!(posetlab(&["check", &fig2, "--property", "distributive"]).code, 0);
    let fig3 = export(dir.path(), "fig3");
    assert_eq!(posetlab(&["check", &fig3, "--property", "orthomodular"]).code, 1);
}

#[test]
fn check_input_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.poset");
    std::fs::write(&bad, "poset x\nelements a b\ncover a b\ncover b a\n").unwrap();
    let r = posetlab(&["check", bad.to_str().unwrap(), "--property", "lattice"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 4"), "{}", r.stderr);

    let fig2 = export(dir.path(), "fig2");
    assert_eq!(posetlab(&["check", &fig2, "--property", "flatness"]).code, 2);
    // orthogonality needs a complementation, which fig2's map is not
    assert_eq!(posetlab(&["check", &fig2, "--property", "orthogonal"]).code, 2);
    assert_eq!(posetlab(&["check", "/nonexistent.poset", "--property", "lattice"]).code, 2);
}

#[test]
fn classify_examples() {
    let dir = TempDir::new().unwrap();
    let j = posetlab(&["classify", &export(dir.path(), "fig1a")]).json();
    let props = &j["properties"];
    assert_eq!(props["boolean"], true);
    assert_eq!(props["lattice"], false);
    assert_eq!(props["pseudo_orthomodular"], true);

    let r = posetlab(&["classify", &export(dir.path(), "fig2")]);
    assert_eq!(r.code, 0);
    let props = &r.json()["properties"];
    assert_eq!(props["complementation"], false);
    assert_eq!(props["relatively_pseudocomplemented"], true);

    let props = posetlab(&["classify", &export(dir.path(), "chain_2")]).json()["properties"].clone();
    for (name, v) in props.as_object().unwrap() {
        assert_eq!(v, &Value::Bool(true), "{name}");
    }

    let props = posetlab(&["classify", &export(dir.path(), "chain_3")]).json()["properties"].clone();
    assert_eq!(props["complementation"], Value::Null);
    assert_eq!(props["distributive"], true);
}

#[test]
fn residuate_examples() {
    let dir = TempDir::new().unwrap();
    let fig2 = export(dir.path(), "fig2");
    let r = posetlab(&["residuate", &fig2, "--construction", "boolean", "--verify", "--at", "c", "d", "d"]);
    assert_eq!(r.code, 1);
    let j = r.json();
    assert_eq!(j["axioms"]["adjointness"]["holds"], false);
    let at = &j["at"][0];
    assert_eq!(at["law"], "adjointness");
    assert_eq!(strs(&at["lhs"]), ["0", "a", "b", "c"]);
    assert_eq!(strs(&at["rhs"]), ["0", "a", "b", "d"]);
    // M(c,d) and R(d,d) straight from the tables
    assert_eq!(strs(&j["m"][3][4]), ["0", "a", "b"]);
    assert_eq!(strs(&j["r"][4][4]), ["0", "a", "b", "d"]);

    let r = posetlab(&["residuate", &fig2, "--construction", "rpc", "--verify", "--divisibility"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(strs(&r.json()["unary"]), ["1", "b", "a", "0", "0", "0"]);

    let fig4 = export(dir.path(), "fig4");
    let r = posetlab(&["residuate", &fig4, "--construction", "pom", "--verify"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json()["axioms"]["left_residuated"], true);

    let fig3 = export(dir.path(), "fig3");
    let r = posetlab(&["residuate", &fig3, "--construction", "rpc"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("relative pseudocomplement"));
    assert_eq!(posetlab(&["residuate", &fig2, "--construction", "heyting"]).code, 2);
}

#[test]
fn hsum_examples() {
    let dir = TempDir::new().unwrap();
    let fig1b = export(dir.path(), "fig1b");
    let bool2 = export(dir.path(), "bool_2");
    let out = dir.path().join("out.poset");
    let out = out.to_str().unwrap();
    assert_eq!(posetlab(&["hsum", &fig1b, &bool2, "-o", out]).code, 0);
    assert_eq!(posetlab(&["check", out, "--property", "pseudo-orthomodular"]).code, 0);
    let sum = format::parse(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert!(is_isomorphic(&sum, &catalog::get("fig4").unwrap().poset));

    let chain2 = export(dir.path(), "chain_2");
    let r = posetlab(&["hsum", &chain2, &bool2]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("more than 2"), "{}", r.stderr);

    let r = posetlab(&["hsum", &bool2, &bool2]);
    assert_eq!(r.code, 0);
    let mo2 = format::parse(&r.stdout).unwrap();
    assert!(is_isomorphic(&mo2, &catalog::get("mo_2").unwrap().poset));
}

fn dot_counts(text: &str) -> (usize, usize) {
    let edges = text.lines().filter(|l| l.contains("->")).count();
    let nodes = text.lines().filter(|l| l.contains("rank=same")).map(|l| l.matches('"').count() / 2).sum();
    (nodes, edges)
}

#[test]
fn dot_examples() {
    let dir = TempDir::new().unwrap();
    for (id, expected) in [("fig2", (6, 8)), ("chain_2", (2, 1)), ("fig3", (10, 16))] {
        let r = posetlab(&["dot", &export(dir.path(), id)]);
        assert_eq!(r.code, 0);
        assert!(r.stdout.contains("rankdir=BT"));
        assert_eq!(dot_counts(&r.stdout), expected, "{id}");
    }
}

#[test]
fn catalog_commands() {
    let r = posetlab(&["catalog", "list"]);
    assert_eq!(r.stdout.lines().collect::<Vec<_>>(), catalog::list());
    let r = posetlab(&["catalog", "export", "fig2"]);
    let expected = "poset fig2\nelements 0 a b c d 1\nbottom 0\ntop 1\n\
        cover 0 a\ncover 0 b\ncover a c\ncover a d\ncover b c\ncover b d\ncover c 1\ncover d 1\n\
        comp 0 1\ncomp a d\ncomp b c\ncomp c b\ncomp d a\ncomp 1 0\n";
    assert_eq!(r.stdout, expected);
    let j = posetlab(&["catalog", "show", "fig3"]).json();
    assert_eq!(j["size"], 10);
    assert_eq!(j["expected"]["orthogonal"], true);
    assert_eq!(posetlab(&["catalog", "show", "fig9"]).code, 2);
}

#[test]
fn search_and_sweep() {
    let r = posetlab(&[
        "search",
        "--require",
        "orthogonal",
        "--forbid",
        "orthomodular",
        "--max-size",
        "8",
        "--unary-mode",
        "complementation",
    ]);
    assert_eq!(r.code, 0);
    let found = r.json();
    assert!(!found.as_array().unwrap().is_empty());

    let r = posetlab(&["search", "--max-size", "9"]);
    assert_eq!(r.code, 2);
    let r = posetlab(&["search", "--max-size", "4", "--require", "lattice", "--forbid", "lattice"]);
    assert_eq!(r.code, 2);
    let r = posetlab(&["search", "--max-size", "5", "--require", "shiny"]);
    assert_eq!(r.code, 2);

    let r = posetlab(&["search", "--max-size", "4", "--cap", "4", "--files", "--limit", "2"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout.matches("poset ").count(), 2);

    let out = Command::new(env!("CARGO_BIN_EXE_posetlab"))
        .args(["search", "--max-size", "5"])
        .env("POSET_MAX_SIZE", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let dir = TempDir::new().unwrap();
    let r = posetlab(&["sweep", "--max-size", "5", "--out-dir", dir.path().to_str().unwrap()]);
    assert_eq!(r.code, 0);
    let j = r.json();
    assert!(j["violations"].as_array().unwrap().is_empty());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);
    assert_eq!(posetlab(&["sweep", "--max-size", "0", "--catalog"]).code, 0);
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let fig4 = export(dir.path(), "fig4");
    let a = posetlab(&["classify", &fig4]).stdout;
    let b = posetlab(&["classify", &fig4]).stdout;
    assert_eq!(a, b);
    let a = posetlab(&["search", "--max-size", "6", "--unary-mode", "antitone-involution"]).stdout;
    let b = posetlab(&["search", "--max-size", "6", "--unary-mode", "antitone-involution"]).stdout;
    assert_eq!(a, b);
}
