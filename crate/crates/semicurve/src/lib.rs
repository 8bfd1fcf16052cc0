//! Exact invariants of monomial curve singularities, computed from the
//! defining numerical semigroup.
//!
//! A list of coprime generators `a1 < ... < ar` (all above 1) determines the
//! curve parametrized by `t -> (t^a1, ..., t^ar)`, and everything this crate
//! computes about its singularity at the origin is pure integer
//! combinatorics on the semigroup the generators span:
//!
//! * classical semigroup data: membership, Apéry sets, Frobenius number,
//!   gaps ([`semigroup`]);
//! * the order filtration, the Hilbert-Samuel sequence `lambda(n)`, the
//!   multiplicity `a1` it stabilizes to, and the exact regularity index
//!   where stabilization starts, together with the proven upper bounds `q`
//!   and the generator-only bound ([`filtration`]);
//! * brute-force reference implementations used to certify all of the above
//!   ([`oracle`]), corpus generators ([`families`]), and a property battery
//!   wiring them together ([`verify`]).
//!
//! ```
//! use semicurve::NumericalSemigroup;
//!
//! let s = NumericalSemigroup::new(&[4, 9, 10])?;
//! assert_eq!(s.frobenius(), 15);
//! assert_eq!(s.multiplicity(), 4);
//!
//! let report = s.ri_exact()?;
//! assert_eq!(report.ri_exact, 2);
//! assert_eq!(&report.hilbert.values[..4], &[1, 3, 4, 4]);
//! # Ok::<(), semicurve::Error>(())
//! ```

pub mod error;
pub mod families;
pub mod filtration;
pub mod oracle;
pub mod semigroup;
pub mod verify;

pub use error::Error;
pub use filtration::{
    DivisionData, FiltrationLevel, HilbertFunction, OrderTable, Regime, RegularityReport,
    DEFAULT_STABILITY_MARGIN,
};
pub use semigroup::{GeneratorSet, NumericalSemigroup};
