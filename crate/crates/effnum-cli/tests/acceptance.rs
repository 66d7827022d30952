//! CLI acceptance criterion: repeating any seeded command produces bitwise
//! identical output files.

use std::path::PathBuf;
use std::process::Command;

fn effnum() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_effnum"));
    cmd.env_remove("EFFNUM_SEED");
    cmd.env_remove("SOURCE_DATE_EPOCH");
    cmd
}

fn temp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("effnum_acc_{}_{name}", std::process::id()))
}

fn run_to_file(args: &[&str], out: &PathBuf) {
    let status = effnum()
        .args(args)
        .arg("--out")
        .arg(out)
        .status()
        .expect("binary runs");
    assert!(status.code().is_some());
}

fn bytes(path: &PathBuf) -> Vec<u8> {
    std::fs::read(path).unwrap()
}

#[test]
fn criterion_cli_determinism() {
    let mut all_equal = true;
    let mut details = Vec::new();

    // seeded disorder study, CSV
    let (a, b) = (temp("loc_a.csv"), temp("loc_b.csv"));
    let args = [
        "localize",
        "--sizes",
        "16,32",
        "--ensemble",
        "4",
        "--disorder",
        "5",
        "--seed",
        "7",
        "--band",
        "mid-band",
        "--format",
        "csv",
    ];
    run_to_file(&args, &a);
    run_to_file(&args, &b);
    let equal = bytes(&a) == bytes(&b);
    all_equal &= equal;
    details.push(format!("localize csv identical: {equal}"));

    // seeded verification suite, JSON
    let (a, b) = (temp("ver_a.json"), temp("ver_b.json"));
    let args = [
        "verify",
        "participation",
        "--trials",
        "500",
        "--seed",
        "11",
        "--format",
        "json",
    ];
    run_to_file(&args, &a);
    run_to_file(&args, &b);
    let equal = bytes(&a) == bytes(&b);
    all_equal &= equal;
    details.push(format!("verify json identical: {equal}"));

    // evaluation, CSV
    let input = temp("eval_in.csv");
    std::fs::write(&input, "1.5,0.5\n1,1,1,1\n").unwrap();
    let (a, b) = (temp("eval_a.csv"), temp("eval_b.csv"));
    let args = ["eval", input.to_str().unwrap(), "--format", "csv"];
    run_to_file(&args, &a);
    run_to_file(&args, &b);
    let equal = bytes(&a) == bytes(&b);
    all_equal &= equal;
    details.push(format!("eval csv identical: {equal}"));

    println!(
        "[{}] cli-determinism: {}",
        if all_equal { "PASS" } else { "FAIL" },
        details.join("; ")
    );
    assert!(all_equal);
}
