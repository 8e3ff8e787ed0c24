//! Exact arithmetic for base-n repeating expansions of 1/m.
//!
//! For coprime m and n, the expansion of 1/m in base n is purely periodic
//! and its period is the multiplicative order of n modulo m. This crate
//! computes those expansions exactly, checks the digit symmetries they
//! carry (rotation/residue correspondence, half-period complements, the
//! run-length structure of binary repetends), inverts the process to
//! recover m from a digit string, and certifies primes p for which the
//! base is a primitive root from nothing but a candidate string value.
//!
//! Everything is integer-exact: no floating point appears anywhere, and
//! the randomized helpers (factoring, wide primality, random scans) are
//! seeded so runs reproduce bit for bit.
//!
//! ```
//! use repetend::{certify, expansion, reconstruction, Natural};
//!
//! let seven = Natural::from(7u32);
//! let e = expansion::expand(&seven, 10).unwrap();
//! assert_eq!(e.period(), 6);
//! assert_eq!(e.repetend().digits(), &[1, 4, 2, 8, 5, 7]);
//!
//! // The reverse direction: 142857 pins down the modulus 7 ...
//! let r = reconstruction::reconstruct_from_integer(&Natural::from(142_857u32), 10).unwrap();
//! assert_eq!(r.modulus(), &seven);
//!
//! // ... and certifies that 10 is a primitive root modulo 7.
//! match certify::certify_value(&Natural::from(142_857u32), 10).unwrap() {
//!     certify::CertifyOutcome::Certified(certs) => {
//!         assert_eq!(certs[0].prime, seven);
//!         assert!(certs[0].verified);
//!     }
//!     _ => unreachable!(),
//! }
//! ```
//!
//! The `examples/` directory walks through each capability; the `repetend`
//! binary exposes the same operations as subcommands emitting one JSON
//! record per line.

pub mod certify;
pub mod cli;
pub mod error;
pub mod expansion;
pub mod numtheory;
pub mod reconstruction;
pub mod symmetry;
pub mod verify;

/// The arbitrary-precision nonnegative integer type used throughout.
pub type Natural = num_bigint::BigUint;

pub use error::{Error, Result};
pub use expansion::{DigitString, ExactFraction, Expansion};
pub use numtheory::Factorization;
pub use reconstruction::ReconstructionResult;
