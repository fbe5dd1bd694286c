//! A tagged union over the two scalar rings, with checked operations.
//!
//! Internal computation is monomorphic (the Hopf/module layers work in
//! [`Cyc`], the oracles in [`Laurent`]); this wrapper is the boundary type
//! for the CLI and for callers that mix rings.

use std::fmt;

use thiserror::Error;

use crate::cyclotomic::Cyc;
use crate::laurent::Laurent;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("divisor is not invertible in the Laurent ring")]
    NonInvertible,
    #[error("ell = {0} must be odd and >= 3")]
    EvenEll(u32),
    #[error("no values supplied to lift")]
    LiftNoValues,
    #[error("lift window of {len} exponents is not pinned by any supplied ell (max ell = {max_ell})")]
    LiftWindowTooWide { len: usize, max_ell: u32 },
    #[error("supplied values are inconsistent with a single lift")]
    LiftInconsistent,
    #[error("lift system is underdetermined")]
    LiftUnderdetermined,
    #[error("lifted coefficients are not integers")]
    LiftNotIntegral,
    #[error("no solution supported on the window")]
    LiftNoSolution,
}

/// An exact number in either ℤ[s,s⁻¹] or ℚ(ζ_ℓ).
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Laurent(Laurent),
    Cyc(Cyc),
}

impl Scalar {
    pub fn add(&self, rhs: &Scalar) -> Result<Scalar, ExactError> {
        match (self, rhs) {
            (Scalar::Laurent(a), Scalar::Laurent(b)) => Ok(Scalar::Laurent(a + b)),
            (Scalar::Cyc(a), Scalar::Cyc(b)) if a.ctx.ell == b.ctx.ell => Ok(Scalar::Cyc(a + b)),
            _ => Err(ExactError::RingMismatch),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Result<Scalar, ExactError> {
        match (self, rhs) {
            (Scalar::Laurent(a), Scalar::Laurent(b)) => Ok(Scalar::Laurent(a - b)),
            (Scalar::Cyc(a), Scalar::Cyc(b)) if a.ctx.ell == b.ctx.ell => Ok(Scalar::Cyc(a - b)),
            _ => Err(ExactError::RingMismatch),
        }
    }

    pub fn mul(&self, rhs: &Scalar) -> Result<Scalar, ExactError> {
        match (self, rhs) {
            (Scalar::Laurent(a), Scalar::Laurent(b)) => Ok(Scalar::Laurent(a * b)),
            (Scalar::Cyc(a), Scalar::Cyc(b)) if a.ctx.ell == b.ctx.ell => Ok(Scalar::Cyc(a * b)),
            _ => Err(ExactError::RingMismatch),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Laurent(a) => Scalar::Laurent(-a),
            Scalar::Cyc(a) => Scalar::Cyc(-a),
        }
    }

    /// Division where defined: by any nonzero cyclotomic element, or by a
    /// unit (monomial) of the Laurent ring — general exact division is
    /// accepted too when the quotient exists.
    pub fn div(&self, rhs: &Scalar) -> Result<Scalar, ExactError> {
        match (self, rhs) {
            (Scalar::Laurent(a), Scalar::Laurent(b)) => Ok(Scalar::Laurent(a.div_exact(b)?)),
            (Scalar::Cyc(a), Scalar::Cyc(b)) if a.ctx.ell == b.ctx.ell => Ok(Scalar::Cyc(a.div(b)?)),
            _ => Err(ExactError::RingMismatch),
        }
    }

    pub fn pow(&self, n: u32) -> Scalar {
        match self {
            Scalar::Laurent(a) => Scalar::Laurent(a.pow(n)),
            Scalar::Cyc(a) => Scalar::Cyc(a.pow(n as u64)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Laurent(a) => a.is_zero(),
            Scalar::Cyc(a) => a.is_zero(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Laurent(a) => a.fmt(f),
            Scalar::Cyc(a) => a.fmt(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::cyc_ctx;

    #[test]
    fn mismatch_is_rejected() {
        let a = Scalar::Laurent(Laurent::one());
        let b = Scalar::Cyc(Cyc::one(&cyc_ctx(5)));
        assert_eq!(a.add(&b), Err(ExactError::RingMismatch));
        let c = Scalar::Cyc(Cyc::one(&cyc_ctx(7)));
        assert_eq!(b.mul(&c), Err(ExactError::RingMismatch));
    }

    #[test]
    fn division_by_zero() {
        let ctx = cyc_ctx(5);
        let a = Scalar::Cyc(Cyc::one(&ctx));
        let z = Scalar::Cyc(Cyc::zero(&ctx));
        assert_eq!(a.div(&z), Err(ExactError::DivisionByZero));
    }
}
