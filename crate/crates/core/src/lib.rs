//! Stabilizer codes for asymmetric Pauli channels.
//!
//! The crate covers the full pipeline for short single-logical-qubit codes
//! whose correction capability is split between generic errors and extra
//! Z errors:
//!
//! * [`pauli`]: binary symplectic Pauli operators and GF(2) row spaces.
//! * [`stabilizer`]: stabilizer codes, syndromes, the `.stab` text format.
//! * [`bounds`]: quantum Hamming bounds and the correctable-pattern sets.
//! * [`designer`]: randomized construction of codes from syndrome tables.
//! * [`verifier`]: syndrome-distinctness certification and decoding tables.
//! * [`perf`]: analytic codeword error probability and Monte Carlo checks.
//!
//! ```
//! use asymqec::{catalog, stabilizer::ErrorProfile, verifier};
//!
//! let code = catalog::asym_9_1();
//! let report = verifier::verify_capability(&code, ErrorProfile::new(1, 1));
//! assert!(report.distinct);
//! assert_eq!(report.pattern_count, 208);
//! ```

pub mod bits;
pub mod bounds;
pub mod catalog;
pub mod designer;
pub mod error;
pub mod pauli;
pub mod perf;
pub mod rng;
pub mod stabilizer;
pub mod verifier;

pub use error::{Error, Result};
pub use pauli::{Pauli, PauliOperator};
pub use stabilizer::{ErrorProfile, StabilizerCode, Syndrome};
