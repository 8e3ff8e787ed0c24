//! Hunting for primes with a given primitive root by scanning candidate
//! string values.
//!
//! ```text
//! cargo run --example scan_for_primes
//! ```

use repetend::certify::{Scan, ScanConfig, ScanEvent, ScanMode};

fn run_scan(mut scan: Scan, title: &str) {
    println!("{title}");
    if let Some(note) = scan.advisory() {
        println!("  note: {note}");
    }
    for event in &mut scan {
        match event.unwrap() {
            ScanEvent::Certificate(cert) => println!(
                "  a={:>6} (l={:>2})  m={:>6}  ->  p={} verified={}",
                cert.value.to_string(),
                cert.length,
                cert.modulus.to_string(),
                cert.prime,
                cert.verified,
            ),
            ScanEvent::Truncated { examined } => {
                println!("  ... budget exhausted after {examined} candidates")
            }
        }
    }
    println!(
        "  {} candidates examined, {} certificates\n",
        scan.examined(),
        scan.emitted()
    );
}

fn main() {
    // Every prime with 2 as a primitive root and p - 1 <= 12 shows up.
    run_scan(
        Scan::new(ScanConfig::exhaustive(2, 12)).unwrap(),
        "exhaustive scan, base 2, strings up to length 12:",
    );

    run_scan(
        Scan::new(ScanConfig::exhaustive(10, 6)).unwrap(),
        "exhaustive scan, base 10, strings up to length 6:",
    );

    // Square bases can't generate: the scan comes back empty, with a note.
    run_scan(
        Scan::new(ScanConfig::exhaustive(4, 6)).unwrap(),
        "exhaustive scan, base 4, strings up to length 6:",
    );

    // Random mode draws candidates from a seeded stream instead; the same
    // seed always gives the same output.
    let config = ScanConfig {
        base: 2,
        max_length: 12,
        mode: ScanMode::Random {
            seed: 42,
            draws: 2_000,
        },
        budget: None,
        workers: 1,
        options: Default::default(),
    };
    run_scan(
        Scan::new(config).unwrap(),
        "random scan, base 2, 2000 seeded draws:",
    );
}
