//! Running the expansion backwards: from a digit string (or its integer
//! value) to the modulus whose expansion it is.
//!
//! ```text
//! cargo run --example reconstruct_modulus
//! ```

use repetend::expansion::DigitString;
use repetend::reconstruction::{reconstruct_from_integer, reconstruct_from_string};
use repetend::Natural;

fn main() {
    // 142857 pads to its own six digits, and (10^6 - 1)/142857 = 7.
    let r = reconstruct_from_integer(&Natural::from(142_857u32), 10).unwrap();
    println!(
        "142857 base 10 -> l = {}, padded {}, m = {}",
        r.length(),
        r.padded_string(),
        r.modulus()
    );

    // 93 in base 2 pads to ten digits because 2 has order 10 modulo 93.
    let r = reconstruct_from_integer(&Natural::from(93u32), 2).unwrap();
    println!(
        "93 base 2     -> l = {}, padded {}, m = {}",
        r.length(),
        r.padded_string(),
        r.modulus()
    );

    // The padded string can still be word-periodic; then the order of the
    // base modulo m is a proper divisor of l.
    let r = reconstruct_from_integer(&Natural::from(5u32), 2).unwrap();
    println!(
        "5 base 2      -> l = {}, padded {}, m = {}, order {} (word-periodic padding)",
        r.length(),
        r.padded_string(),
        r.modulus(),
        r.order_of_base_mod_m()
    );

    // Integer- and string-mode disagree exactly on leading zeros: the
    // integer 9 collapses, but the two-digit string (0,9) pins down 11.
    let r = reconstruct_from_integer(&Natural::from(9u32), 10).unwrap();
    println!(
        "9 base 10     -> m = {} (collapsed: {})",
        r.modulus(),
        r.collapsed()
    );
    let s = DigitString::new(10, vec![0, 9]).unwrap();
    let r = reconstruct_from_string(&s).unwrap();
    println!("(0,9) base 10 -> m = {}", r.modulus());

    // Strings that repeat a shorter block are rejected outright.
    let s = DigitString::new(2, vec![0, 1, 0, 1]).unwrap();
    match reconstruct_from_string(&s) {
        Err(e) => println!("(0,1,0,1) base 2 -> {e}"),
        Ok(_) => unreachable!(),
    }
}
