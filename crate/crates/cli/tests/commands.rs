use std::path::Path;
use std::process::{Command, Output};

use fintop_cli::format::{generate, parse_poset, serialize_poset, to_json};

fn fintop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fintop")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_space(dir: &Path, file: &str, name: &str, params: &[usize]) -> String {
    let path = dir.join(file);
    std::fs::write(&path, serialize_poset(&generate(name, params).unwrap())).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn fpp_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_space(dir.path(), "p.txt", "P3323", &[]);
    let out = fintop(&["fpp", &p]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("has the fixed point property"));

    let crown = write_space(dir.path(), "c.txt", "crown", &[3]);
    let out = fintop(&["fpp", &crown, "--method", "brute"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("fixed-point-free map"));

    let out = fintop(&["fpp", &p, "--method", "criterion"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("could not decide"));

    let q = write_space(dir.path(), "q.txt", "P343_1", &[]);
    let out = fintop(&["fpp", &q, "--method", "criterion"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("C(X) and all of its regions"));
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(fintop(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(fintop(&["fpp", "x", "--method", "guess"]).status.code(), Some(2));
    assert_eq!(fintop(&["info", "/nonexistent/poset.txt"]).status.code(), Some(2));
    assert_eq!(fintop(&["gen", "Xnk", "3", "2"]).status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "elements a b\na < b\nb < a\n").unwrap();
    let out = fintop(&["info", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cycle"));
}

#[test]
fn gen_writes_files_in_both_formats() {
    let dir = tempfile::tempdir().unwrap();
    let txt = dir.path().join("x.txt");
    assert!(fintop(&["gen", "Xnk", "5", "3", "-o", txt.to_str().unwrap()]).status.success());
    let doc = parse_poset(&std::fs::read_to_string(&txt).unwrap()).unwrap();
    assert_eq!(doc, generate("Xnk", &[5, 3]).unwrap());

    let out = fintop(&["gen", "ex-easy", "--json"]);
    assert_eq!(stdout(&out), to_json(&generate("ex-easy", &[]).unwrap()));
    let json = dir.path().join("e.json");
    std::fs::write(&json, stdout(&out)).unwrap();
    assert!(stdout(&fintop(&["info", json.to_str().unwrap()])).contains("elements: 5\n"));
}

#[test]
fn cconstr_listing_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_space(dir.path(), "e.txt", "ex-easy", &[]);
    let listing = stdout(&fintop(&["cconstr", &p]));
    assert!(listing.starts_with("C(X): 9 regions\n"));
    assert!(listing.contains("  F{0,2,3,4} < U{0}\n"));
    let dot = stdout(&fintop(&["cconstr", &p, "--dot"]));
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 13);
    assert!(dot.starts_with("digraph") && dot.ends_with("}\n"));
    assert_eq!(dot.matches('{').count(), dot.matches('}').count());
    let u = stdout(&fintop(&["cconstr", &p, "--part", "u"]));
    assert!(u.starts_with("U(X): 5 regions\n"));
}

#[test]
fn core_and_grothendieck() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_space(dir.path(), "s.txt", "ex-step1", &[]);
    let core = parse_poset(&stdout(&fintop(&["core", &p]))).unwrap().to_poset().unwrap();
    assert!(fintop::iso::are_isomorphic(&core, &fintop::catalog::p3323()));

    let e = write_space(dir.path(), "e.txt", "ex-easy", &[]);
    let out = fintop(&["grothendieck", &e]);
    assert!(out.status.success());
    assert!(!stdout(&out).contains("FAIL"));
    let info = stdout(&fintop(&["info", &e]));
    assert!(info.contains("contractible: false"));
}
