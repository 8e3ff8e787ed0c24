//! Rotations of a repetend walk through the residues of powers of the base,
//! and digits half a period apart complement each other.
//!
//! ```text
//! cargo run --example string_symmetries
//! ```

use repetend::expansion::expand;
use repetend::symmetry::{complement_pairs_check, cyclic_shift, orbit_residues, shift_fraction};
use repetend::Natural;

fn main() {
    let seven = Natural::from(7u32);
    let e = expand(&seven, 10).unwrap();
    println!("repetend of 1/7: {}", e.repetend());

    // Rotating by t multiplies the fraction by 10^t and keeps the
    // fractional part: sigma_t(142857) repeats to [10^t]_7 / 7.
    for t in 0..e.period() as u64 {
        let rotated = cyclic_shift(e.repetend(), t);
        let fraction = shift_fraction(&seven, 10, t).unwrap();
        println!("  sigma_{t}: {rotated}  ~  {fraction}");
    }

    // The residues form the subgroup generated by 10 modulo 7.
    let orbit = orbit_residues(&seven, 10).unwrap();
    let members: Vec<String> = orbit.iter().map(Natural::to_string).collect();
    println!("orbit of 10 mod 7: {{{}}}", members.join(", "));

    // Complement pairing: opposite digits sum to base - 1 whenever the
    // order is even. 142857 pairs (1,8), (4,5), (2,7).
    println!(
        "complement pairing for 1/7 base 10: {}",
        complement_pairs_check(&seven, 10).unwrap()
    );
    println!(
        "complement pairing for 1/11 base 10: {}",
        complement_pairs_check(&Natural::from(11u32), 10).unwrap()
    );

    // Odd order means the pairing has nothing to say.
    match complement_pairs_check(&Natural::from(13u32), 3) {
        Err(e) => println!("1/13 base 3: {e}"),
        Ok(_) => unreachable!("ord_13(3) = 3 is odd"),
    }
}
