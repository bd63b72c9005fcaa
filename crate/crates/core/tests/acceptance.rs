//! One line per acceptance criterion, PASS or FAIL. Runs without the libtest
//! harness so the lines are never captured; exits non-zero if any fail.

use square_nodal::verify;

fn main() {
    let reports: Vec<_> = verify::suite("all")
        .expect("suite exists")
        .into_iter()
        .map(|run| {
            let rep = run();
            println!("{}", rep.line());
            rep
        })
        .collect();
    let failed: Vec<u8> = reports.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    println!("acceptance: {}/{} passed", reports.len() - failed.len(), reports.len());
    if reports.len() != 9 || !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
