//! Exact scalar arithmetic for the invariant pipeline.
//!
//! Two rings are supported:
//!
//! * [`Laurent`]: the generic Laurent ring ℤ\[s, s⁻¹\] (with rational
//!   coefficients), where the formal variable `s` is a fourth root of the
//!   quantum parameter, s⁴ = q. Integer powers of q live on the sublattice
//!   of exponents divisible by 4.
//! * [`Cyc`]: the cyclotomic field ℚ(ζ_ℓ) = ℚ\[x\]/Φ_ℓ(x) with x = q a
//!   primitive ℓ-th root of unity.
//!
//! [`specialize`] maps the first into the second by s ↦ q^((ℓ+1)²/4 mod ℓ)
//! (only defined for odd ℓ), and [`lift_q`]/[`lift_s`] invert that map on a
//! window of exponents, cross-checking several ℓ values.

pub mod cyclotomic;
pub mod laurent;
pub mod lift;
pub mod par;
pub mod scalar;

pub use cyclotomic::{cyc_ctx, Cyc, CycCtx};
pub use laurent::Laurent;
pub use lift::{lift_q, lift_s, specialize};
pub use scalar::{ExactError, Scalar};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}
