//! Runs every acceptance criterion, long cases included, and prints one
//! PASS/FAIL line per criterion. Run with `--nocapture` to see the lines.

use chessboard_cli::verify::{catalog, run_case, RunOptions, Status, VerifyCase, CRITERIA};

#[test]
fn acceptance() {
    let options = RunOptions { long_budget: None };
    let results: Vec<VerifyCase> = catalog().iter().map(|c| run_case(c, options)).collect();

    let mut failures = Vec::new();
    for k in CRITERIA {
        let mine: Vec<&VerifyCase> = results.iter().filter(|c| c.criterion == k.number).collect();
        let failed: Vec<&&VerifyCase> = mine.iter().filter(|c| c.status != Status::Pass).collect();
        let ms: u64 = mine.iter().map(|c| c.runtime_ms).sum();
        let over_budget = k.budget_ms.is_some_and(|b| ms > b);
        let ok = !mine.is_empty() && failed.is_empty() && !over_budget;
        let budget = k.budget_ms.map_or(String::new(), |b| format!(", budget {b} ms"));
        println!(
            "{} criterion {:>2}: {} ({} cases, {ms} ms{budget})",
            if ok { "PASS" } else { "FAIL" },
            k.number,
            k.title,
            mine.len()
        );
        for c in &failed {
            println!("      {}", chessboard_cli::verify::format_case(c));
        }
        if !ok {
            failures.push(k.number);
        }
    }
    assert!(failures.is_empty(), "failing criteria: {failures:?}");
}
