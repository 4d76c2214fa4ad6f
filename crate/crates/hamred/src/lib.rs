//! Exact quantum Hamiltonian reduction of Clifford and Grassmann superalgebras
//! over the rationals.
//!
//! The crate builds the Weyl algebras of purely-odd symplectic spaces (Clifford
//! and Grassmann algebras), reduces them by quadratic Lie-algebra actions
//! (Spin(3), G2, Spin(7), Spin(8)), and certifies the resulting quotient
//! algebras and Morita witnesses with exact rational arithmetic throughout.

pub mod catalog;
pub mod fuzz;
pub mod identify;
pub mod linalg;
pub mod reduction;
pub mod report;
pub mod superblade;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact scalar type used everywhere: arbitrary-precision rationals.
pub type Rat = BigRational;

/// Shorthand for small integer rationals.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Render a rational as `p` or `p/q`.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse a rational from `p` or `p/q` form.
pub fn rat_from_str(s: &str) -> Result<Rat, Error> {
    let parse_int = |t: &str| {
        t.parse::<BigInt>().map_err(|_| Error::Parse {
            pos: 0,
            msg: format!("invalid rational `{s}`"),
        })
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d <= BigInt::from(0) {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("denominator must be positive in `{s}`"),
                });
            }
            Ok(Rat::new(parse_int(n)?, d))
        }
    }
}

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("generator index {index} out of range for signature of length {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("mismatched algebra contexts: {left} vs {right}")]
    ContextMismatch { left: String, right: String },
    #[error("syntax error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("ragged input: row {row} has length {got}, expected {expected}")]
    RaggedInput {
        row: usize,
        got: usize,
        expected: usize,
    },
    #[error("subspace is not contained in the claimed ambient span")]
    NotSubspace,
    #[error("odd generator `{0}` is not supported by the invariant pipeline")]
    OddGenerator(String),
    #[error("generator `{0}` is not parity-homogeneous")]
    InhomogeneousGenerator(String),
    #[error("the left ideal is the whole algebra; the cyclic module is zero")]
    ZeroModule,
    #[error("intersection failed the two-sided-ideal check on `{0}`")]
    TwoSidednessFailure(String),
    #[error("product of quotient representatives escaped the invariant span")]
    ClosureFailure,
    #[error("classical reduction requires an all-zero signature, found entry {0}")]
    NonzeroSignature(i8),
    #[error("catalog cross-check failed: {0}")]
    CrossCheckFailed(String),
    #[error("invalid algebra data: {0}")]
    InvalidAlgebra(String),
    #[error("quotient dimension {0} exceeds the supported bound of 128")]
    QuotientTooLarge(usize),
}
