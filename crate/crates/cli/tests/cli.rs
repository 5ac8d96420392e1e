use std::fs;
use std::process::{Command, Output};

fn modcurve(args: &[&str], cache: Option<&std::path::Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_modcurve"));
    cmd.args(args).env_remove("MODCURVE_CACHE_DIR");
    if let Some(dir) = cache {
        cmd.env("MODCURVE_CACHE_DIR", dir);
    }
    cmd.output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn exit_code_follows_the_verdict() {
    let ok = modcurve(&["qz7", "torsion"], None);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).lines().any(|l| l.starts_with("PASS") && l.contains("qz7.15a1.bound_k")));

    let bad = modcurve(&["b5ns7", "lpoly", "--prime", "5", "--max-k", "2"], None);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("first failing check: b5ns7.lpoly5.reduction"));
}

#[test]
fn cache_directory_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = modcurve(&["b5ns7", "lpoly", "--prime", "3", "--max-k", "3"], Some(dir.path()));
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let files: Vec<_> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    assert_eq!(files.len(), 1);
    assert!(files[0].starts_with("counts-p3-"));
}

#[test]
fn all_with_skip_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    let fixtures = dir.path().join("none.json");
    for path in [&a, &b] {
        let o = modcurve(
            &["all", "--skip-lpoly17", "--threads", "2", "--fixtures", fixtures.to_str().unwrap(), "--json", path.to_str().unwrap()],
            None,
        );
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).lines().last(), Some("PASS with 1 unchecked"));
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert!(dir.path().join("a.json.timings.json").exists());
    assert!(!fixtures.exists());
}
