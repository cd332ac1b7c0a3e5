use std::process::{Command, Output};

use kupka::classify::ComponentDescriptor;
use kupka::gkcheck::GkCertificate;

fn kupka(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kupka"))
        .args(args)
        .env_remove("KUPKA_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_code_matrix() {
    let cases: &[(&[&str], i32)] = &[
        (&["params", "-w", "7,6,4", "-l", "8", "-d", "2"], 0),
        (&["params", "-w", "2,2,1", "-l", "1", "-d", "2"], 2),
        (&["params", "-w", "7,6", "-l", "1", "-d", "2"], 2),
        (&["params", "-w", "7,6,4", "-l", "8", "-d", "0"], 2),
        (&["dim", "-w", "4,2,1", "-l", "3", "-d", "2"], 0),
        (&["dim", "-w", "7,6,4", "-l", "-20", "-d", "2"], 1),
        (&["check", "-w", "7,6,4", "-l", "8", "-d", "2"], 0),
        (&["check", "-w", "8,7,3", "-l", "1", "-d", "2"], 1),
        (&["enumerate", "-n", "3", "-d", "2", "--certify"], 0),
        (&["enumerate", "-n", "5", "-d", "2"], 2),
        (&["enumerate", "-n", "3", "-d", "1"], 2),
        (&["exceptional", "-n", "4", "-d", "1", "--certify"], 0),
        (&["chains", "-n", "2"], 2),
        (&["verify", "--table", "cor411"], 0),
        (&["verify", "--table", "nope"], 2),
        (&["frobnicate"], 2),
    ];
    for (args, code) in cases {
        let o = kupka(args);
        assert_eq!(o.status.code(), Some(*code), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn golden_outputs() {
    let o = kupka(&["params", "-w", "4,7,6", "-l", "8", "-d", "2"]);
    let s = stdout(&o);
    assert!(s.contains("τ                  25"), "{s}");
    assert!(s.contains("λ_i                -1 2 4"), "{s}");
    assert!(s.contains("7 3 1"), "{s}");

    let s = stdout(&kupka(&["params", "-w", "4,2,1", "-l", "3", "-d", "2"]));
    assert!(s.contains("τ_i                10 [0] 5"), "{s}");
    assert!(s.contains("τ_2 = 0"), "{s}");

    let s = stdout(&kupka(&["w0", "-w", "4,2,1", "-l", "3", "-d", "2"]));
    assert_eq!(
        s,
        "# (4,2,1); λ=3, d=2\ndim W_0 = 4\nY1: x1*x3 d/dx2\nY2: x1 d/dx3\nY3: x2^2 d/dx3\n\
         Y4: x1*x2*x3 d/dx1 - 1/2*x2*x3^2 d/dx3\n"
    );
    assert_eq!(stdout(&kupka(&["dim", "-w", "4,2,1", "-l", "3", "-d", "2"])), "15\n");
    assert_eq!(stdout(&kupka(&["dim", "-w", "7,6,4", "-l", "8", "-d", "2"])), "14\n");

    let s = stdout(&kupka(&["enumerate", "-n", "3", "-d", "2", "--certify", "--format", "csv"]));
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines.len(), 7, "{s}");
    assert!(lines[0].starts_with("n,d,weights,lambda"));
    assert!(lines[1..].iter().all(|l| l.contains(",certified,")));

    let s = stdout(&kupka(&["verify", "--table", "cor411"]));
    assert!(s.contains("10/10 matched"), "{s}");

    let s = stdout(&kupka(&["check", "-w", "8,7,3", "-l", "1", "-d", "2"]));
    assert!(s.contains("no condition chain holds"), "{s}");

    let s = stdout(&kupka(&["check", "-w", "7,6,4", "-l", "8", "-d", "2"]));
    assert!(s.starts_with("# seed=0 attempts=16 bound=5 budget=2000000\n"), "{s}");
}

#[test]
fn json_round_trips() {
    let o = kupka(&["enumerate", "-n", "4", "-d", "2", "--certify", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["config"]["seed"], 0);
    let comps: Vec<ComponentDescriptor> = serde_json::from_value(v["result"].clone()).unwrap();
    assert_eq!(comps.len(), 10);
    let again = serde_json::to_value(&comps).unwrap();
    assert_eq!(again, v["result"]);
    for c in &comps {
        c.replay(kupka::gkcheck::DEFAULT_BUDGET).unwrap();
    }

    let o = kupka(&["check", "-w", "6,5,2", "-l", "4", "-d", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let cert: GkCertificate = serde_json::from_value(v["result"]["certificate"].clone()).unwrap();
    assert_eq!(serde_json::to_value(&cert).unwrap(), v["result"]["certificate"]);
}

#[test]
fn certificate_files_replay() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("exc.json");
    let o = kupka(&["exceptional", "-n", "3", "-d", "2", "--certify", "--format", "json"]);
    std::fs::write(&path, &o.stdout).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(kupka(&["verify", "--certificate", p]).status.code(), Some(0));

    let tampered = String::from_utf8(o.stdout)
        .unwrap()
        .replace("\"quotient_dim\": 15", "\"quotient_dim\": 16");
    std::fs::write(&path, tampered).unwrap();
    let o = kupka(&["verify", "--certificate", p]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("replay failed"));
}

#[test]
fn deterministic_output() {
    let args = ["enumerate", "-n", "3", "-d", "3", "--certify", "--format", "json", "--seed", "7"];
    let a = kupka(&args);
    let b = kupka(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("\"seed\": 7"));
}

#[test]
fn budget_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_kupka"))
        .args(["check", "-w", "7,6,4", "-l", "8", "-d", "2"])
        .env("KUPKA_BUDGET", "123")
        .output()
        .unwrap();
    assert!(stdout(&o).contains("budget=123"));
}
