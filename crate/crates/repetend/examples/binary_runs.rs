//! Run-length structure of binary repetends when 2 generates the units
//! modulo a prime: the run count is 2 mod 4, the run lengths repeat half a
//! turn later, and long even-position runs come with partners exactly two
//! shorter.
//!
//! ```text
//! cargo run --example binary_runs
//! ```

use repetend::expansion::expand;
use repetend::numtheory::is_prime;
use repetend::symmetry::{base2_structure_report, run_length_encode};
use repetend::Natural;

fn main() {
    for m in [11u64, 13, 19, 29] {
        let m = Natural::from(m);
        let e = expand(&m, 2).unwrap();
        let runs = run_length_encode(e.repetend());
        println!("1/{m} base 2: {}  runs: {}", e.repetend(), runs);
    }

    println!();
    println!("structure reports over the primes below 200:");
    for m in (5u64..200).filter(|&m| is_prime(&Natural::from(m))) {
        match base2_structure_report(&Natural::from(m)) {
            Ok(report) => {
                println!(
                    "  m={m:>3}  runs {}  [count mod 4: {}, half symmetry: {}, decrement pairs: {}]",
                    report.runs,
                    report.run_count_mod_four_ok,
                    report.half_symmetry_ok,
                    report.decrement_pairing_ok,
                );
                assert!(report.all_checks_pass());
            }
            Err(_) => println!("  m={m:>3}  (2 is not a primitive root; skipped)"),
        }
    }
}
