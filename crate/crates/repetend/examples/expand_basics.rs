//! Computing repeating expansions exactly.
//!
//! ```text
//! cargo run --example expand_basics
//! ```

use repetend::expansion::{
    digit_via_residues, expand, first_nonzero_index, quotient_value, string_value,
};
use repetend::Natural;

fn main() {
    // 1/7 in base 10 is the classic cyclic number.
    let seven = Natural::from(7u32);
    let e = expand(&seven, 10).unwrap();
    println!(
        "1/7 base 10: period {}, repetend {}",
        e.period(),
        e.repetend()
    );
    println!("repetend value: {}", string_value(e.repetend()));
    println!("(10^6 - 1)/7    = {}", quotient_value(&seven, 10).unwrap());

    // The same digits drop out of pure residue arithmetic, no division at all.
    let by_formula: Vec<u64> = (1..=6)
        .map(|k| digit_via_residues(&seven, 10, k).unwrap())
        .collect();
    println!("digits via residue formula: {by_formula:?}");

    // Binary expansions keep their leading zeros; the first nonzero digit
    // sits exactly at ceil(log2 m).
    let eleven = Natural::from(11u32);
    let e = expand(&eleven, 2).unwrap();
    println!(
        "1/11 base 2: period {}, repetend {} (value {})",
        e.period(),
        e.repetend(),
        string_value(e.repetend())
    );
    println!(
        "first nonzero digit of 1/11 base 2 is a_{}",
        first_nonzero_index(&eleven, 2).unwrap()
    );

    // Indices past the period wrap around.
    println!("digit 1 = {}, digit 11 = {}", e.digit_at(1), e.digit_at(11));
}
