//! Stabilizer codes for one-error quantum codes, and pasting two such codes
//! into a larger one.
//!
//! ```
//! use qpaste::catalog::{builtin, Builtin};
//! use qpaste::pasting::{augment, paste, Placement};
//!
//! let larger = augment(&builtin(Builtin::Code8), 1, Placement::Append);
//! let code13 = paste(&larger, &builtin(Builtin::Code5)).unwrap();
//! assert_eq!(code13, builtin(Builtin::Code13));
//! assert_eq!(code13.parameters().k, 7);
//! ```

pub mod bits;
pub mod catalog;
pub mod cli;
pub mod io;
pub mod kl;
pub mod par;
pub mod pasting;
pub mod pauli;
pub mod random;
pub mod stabilizer;
pub mod verification;

pub use par::Execution;
pub use pauli::{Factor, PauliError, PauliOperator, Sign};
pub use stabilizer::{CodeError, CodeParameters, StabilizerCode, Syndrome};
