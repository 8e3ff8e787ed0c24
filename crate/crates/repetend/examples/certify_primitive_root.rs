//! Certifying primitive roots from digit strings alone.
//!
//! ```text
//! cargo run --example certify_primitive_root
//! ```

use repetend::certify::{
    certify_value, fermat_quotient, is_primitive_root_by_expansion, CertifyOutcome,
};
use repetend::numtheory::is_prime;
use repetend::Natural;

fn main() {
    // Primitivity read off digits: 10 generates the units mod an odd prime
    // m exactly when (10^(m-1) - 1)/m, padded to m - 1 digits, repeats no
    // shorter block.
    println!("primitivity of 10 modulo small primes, decided from digit strings:");
    for m in (3u64..60).filter(|&m| m % 2 == 1 && m != 5 && is_prime(&Natural::from(m))) {
        let m = Natural::from(m);
        let alpha = fermat_quotient(&m, 10).unwrap();
        let primitive = is_primitive_root_by_expansion(&m, 10).unwrap();
        println!("  m={m:>2}  alpha={alpha:>60}  primitive: {primitive}");
    }

    println!();
    // The sufficient condition in action: a candidate value a determines
    // m = (base^l - 1)/a, and each prime p | m with (p-1) | l gets a
    // certificate.
    for (a, base) in [(142_857u64, 10u64), (47_619, 10), (93, 2), (21, 2)] {
        match certify_value(&Natural::from(a), base).unwrap() {
            CertifyOutcome::Certified(certs) => {
                println!("a={a} base {base}: m = {}", certs[0].modulus);
                for cert in &certs {
                    println!(
                        "  p={} (p^{} || m)  stated: {}  reduced: {}  verified: {}",
                        cert.prime,
                        cert.prime_exponent,
                        cert.order_condition_stated,
                        cert.order_condition_reduced,
                        cert.verified,
                    );
                }
            }
            CertifyOutcome::Rejected(rejection) => {
                println!("a={a} base {base}: rejected ({})", rejection.reason());
            }
        }
    }
}
