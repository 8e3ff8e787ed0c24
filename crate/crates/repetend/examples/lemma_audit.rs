//! Sweeps every digit-symmetry statement the library relies on over a small
//! range and prints the pass/fail table — the same engine behind
//! `repetend verify-lemmas`.
//!
//! ```text
//! cargo run --example lemma_audit
//! ```

use repetend::verify;

fn main() {
    let max_m = 300;
    let bases = [2u64, 10];
    println!("auditing digit symmetries for m <= {max_m}, bases {bases:?}\n");
    let mut all_passed = true;
    for report in verify::run_all(max_m, &bases) {
        let status = if report.passed() { "PASS" } else { "FAIL" };
        println!(
            "{status}  {:<32} {:>8} cases  {}",
            report.key, report.cases, report.label
        );
        for failure in &report.failures {
            println!("      counterexample: {failure}");
        }
        all_passed &= report.passed();
    }
    println!();
    println!(
        "overall: {}",
        if all_passed {
            "all checks passed"
        } else {
            "FAILURES FOUND"
        }
    );
    std::process::exit(if all_passed { 0 } else { 1 });
}
