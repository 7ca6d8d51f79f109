//! Every `tests/golden/*.vb` script is run twice; both certificates must be
//! byte-identical and match the stored `.cert`. Set `UPDATE_GOLDEN=1` to
//! rewrite the stored files.

use std::fs;
use std::path::{Path, PathBuf};

use virbialg_cli::{run_source, RunConfig};

fn scripts() -> Vec<PathBuf> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut out: Vec<PathBuf> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "vb"))
        .collect();
    out.sort();
    out
}

#[test]
fn golden_certificates() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let scripts = scripts();
    assert!(scripts.len() >= 10);
    let mut mismatches = Vec::new();
    for path in scripts {
        let src = fs::read_to_string(&path).unwrap();
        let first = run_source(&src, &RunConfig::default()).unwrap().to_string();
        let second = run_source(&src, &RunConfig::default()).unwrap().to_string();
        assert_eq!(first, second, "{} is not deterministic", path.display());
        let cert = path.with_extension("cert");
        if update {
            fs::write(&cert, &first).unwrap();
        } else if fs::read_to_string(&cert).ok().as_deref() != Some(first.as_str()) {
            mismatches.push(path.display().to_string());
        }
    }
    assert!(
        mismatches.is_empty(),
        "certificate mismatch: {mismatches:?}"
    );
}

#[test]
fn verdicts_of_reference_scripts() {
    let expect = [
        ("michaelis_axioms.vb", "OK"),
        ("cybe_symmetric.vb", "FAIL"),
        ("classify_zero.vb", "TriangularCoboundary"),
        ("classify_michaelis.vb", "TriangularCoboundary"),
        ("classify_cybe_fails.vb", "CYBEFails"),
        ("reduce_counterexample.vb", "NotAntisymmetric(L(0;1))"),
        ("innerize0_nosolution.vb", "FAIL"),
    ];
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for (name, verdict) in expect {
        let src = fs::read_to_string(dir.join(name)).unwrap();
        let cert = run_source(&src, &RunConfig::default()).unwrap();
        assert_eq!(cert.verdict, verdict, "{name}");
        assert_eq!(
            cert.exit_code() == 0,
            verdict == "OK" || verdict == "TriangularCoboundary"
        );
    }
}
