//! Error type shared by all modules of the crate.

use std::fmt;

/// Everything that can go wrong when building a semigroup or computing one
/// of its invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The generator list was empty.
    EmptyInput,
    /// The generators do not have gcd 1, so they do not span a numerical
    /// semigroup with finite complement.
    GcdNotOne,
    /// A generator was 0 or 1; the smallest generator must exceed 1.
    ContainsOne,
    /// The given generator is a sum of the others; the system is not minimal.
    /// Only reported when normalization was not requested.
    NonMinimal(u64),
    /// An input or derived quantity exceeds the configured 64-bit-safe caps.
    Overflow,
    /// The modulus passed to an Apéry-set computation is not a positive
    /// member of the semigroup.
    NotAMember(u64),
    /// The operation requires the Frobenius number to exceed the second
    /// generator, which does not hold for this semigroup.
    WrongRegime,
    /// A Hilbert value past the proven stabilization bound differed from the
    /// multiplicity. Signals an implementation bug, never expected.
    TheoremViolation { n: u64, lambda: u64, expected: u64 },
    /// The two-part decomposition of an order level failed its internal
    /// consistency checks. Signals an implementation bug, never expected.
    PartitionViolation,
    /// The operation is only defined for semigroups with exactly two
    /// generators.
    NotPlane,
    /// The requested level lies below the range where the operation's
    /// defining identity is guaranteed to hold.
    BelowStableRange,
    /// A brute-force reference computation was asked to run beyond its hard
    /// scale caps.
    ScaleExceeded,
    /// A parameter lies outside the documented domain of the operation.
    OutOfRange,
    /// Random corpus generation gave up after too many rejected samples.
    ExhaustedRetries,
}

impl Error {
    /// Stable machine-readable name, used verbatim by the CLI on stderr.
    pub fn name(&self) -> &'static str {
        match self {
            Error::EmptyInput => "EmptyInput",
            Error::GcdNotOne => "GcdNotOne",
            Error::ContainsOne => "ContainsOne",
            Error::NonMinimal(_) => "NonMinimal",
            Error::Overflow => "Overflow",
            Error::NotAMember(_) => "NotAMember",
            Error::WrongRegime => "WrongRegime",
            Error::TheoremViolation { .. } => "TheoremViolation",
            Error::PartitionViolation => "PartitionViolation",
            Error::NotPlane => "NotPlane",
            Error::BelowStableRange => "BelowStableRange",
            Error::ScaleExceeded => "ScaleExceeded",
            Error::OutOfRange => "OutOfRange",
            Error::ExhaustedRetries => "ExhaustedRetries",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyInput => write!(f, "generator list is empty"),
            Error::GcdNotOne => write!(f, "generators must have gcd 1"),
            Error::ContainsOne => write!(f, "every generator must be at least 2"),
            Error::NonMinimal(g) => write!(
                f,
                "generator {g} is a sum of the others; pass normalize to reduce"
            ),
            Error::Overflow => write!(f, "input or derived quantity exceeds the 64-bit-safe caps"),
            Error::NotAMember(m) => write!(f, "{m} is not a positive member of the semigroup"),
            Error::WrongRegime => write!(
                f,
                "operation requires the Frobenius number to exceed the second generator"
            ),
            Error::TheoremViolation {
                n,
                lambda,
                expected,
            } => write!(
                f,
                "hilbert value {lambda} at level {n} differs from the multiplicity {expected}"
            ),
            Error::PartitionViolation => {
                write!(f, "order-level partition failed its consistency checks")
            }
            Error::NotPlane => write!(f, "operation is defined only for two-generator semigroups"),
            Error::BelowStableRange => {
                write!(f, "level lies below the operation's guaranteed range")
            }
            Error::ScaleExceeded => write!(f, "brute-force reference exceeds its scale caps"),
            Error::OutOfRange => write!(f, "parameter outside the operation's domain"),
            Error::ExhaustedRetries => write!(f, "random sampling exhausted its retry budget"),
        }
    }
}

impl std::error::Error for Error {}
