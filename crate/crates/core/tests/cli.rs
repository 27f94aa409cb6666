use std::process::{Command, Output};

fn weyltrop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weyltrop")).args(args).output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    weyltrop(args).status.code().unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["--preset", "a2", "tau", "s1.0", "--base", "1.-1"]), 0);
    assert_eq!(code(&["--preset", "a2", "verify-relations", "--words", "5", "--points", "20"]), 0);
    // |q| >= 1 fails every cell
    assert_eq!(code(&["--preset", "a2", "--q", "2", "char-check", "--nu-radius", "1", "--kappa-radius", "0"]), 1);
    assert_eq!(code(&["--preset", "a2", "tau", "s9"]), 2);
    assert_eq!(code(&["--preset", "a2", "tau", "bogus"]), 2);
    assert_eq!(code(&["--k", "1,2", "--l", "1", "orbit"]), 2);
    assert_eq!(code(&["--k", "1,x", "--l", "1,1", "orbit"]), 2);
    assert_eq!(code(&["--preset", "a2", "--k", "1,1,1", "orbit"]), 2);
    assert_eq!(code(&["--preset", "a2", "--b1", "7/8", "qp-step"]), 2);
}

#[test]
fn same_seed_same_bytes() {
    let args = ["--preset", "a2", "--seed", "5", "verify-relations", "--words", "10", "--points", "50"];
    let a = weyltrop(&args);
    let b = weyltrop(&args);
    assert!(a.status.success());
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn config_file_matches_flags() {
    let dir = std::env::temp_dir().join(format!("weyltrop-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("run.conf");
    std::fs::write(&path, "# a2 orbit\npreset = a2\nmax_word_len = 2\n").unwrap();
    let from_file = weyltrop(&["--config", path.to_str().unwrap(), "orbit"]);
    let from_flags = weyltrop(&["--preset", "a2", "--max-word-len", "2", "orbit"]);
    assert!(from_file.status.success());
    assert_eq!(from_file.stdout, from_flags.stdout);
    // command line wins over the file
    let over = weyltrop(&["--config", path.to_str().unwrap(), "--max-word-len", "1", "orbit"]);
    let want = weyltrop(&["--preset", "a2", "--max-word-len", "1", "orbit"]);
    assert_eq!(over.stdout, want.stdout);
    assert_ne!(over.stdout, from_file.stdout);
    std::fs::write(&path, "preset a2\n").unwrap();
    assert_eq!(weyltrop(&["--config", path.to_str().unwrap(), "orbit"]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}
