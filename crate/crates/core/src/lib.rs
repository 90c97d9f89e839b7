//! Linear complexity of finite sequences over finite fields.
//!
//! The linear complexity `L(s)` of a finite sequence is the order of the
//! shortest linear feedback shift register that produces it. `L(a - b)` is a
//! metric on `F_q^n`; this crate provides Berlekamp-Massey and a brute-force
//! oracle for it, codes under that metric (Singleton bound, an optimal family
//! and its decoder), exact counts of sequences by linear complexity, and the
//! link between periodic linear complexity and Reed-Solomon codes via the
//! König-Rados theorem.

pub mod enumerate;
pub mod error;
pub mod field;
pub mod lfsr;
pub mod matrix;
pub mod oss;
pub mod poly;
pub mod rsbridge;
pub mod text;
pub mod verify;

pub use enumerate::BigCount;
pub use error::{Error, Result};
pub use field::{Fe, Field};
pub use lfsr::{BmResult, LfsrSpec, Sequence};
pub use matrix::MatrixFq;
pub use poly::Polynomial;
