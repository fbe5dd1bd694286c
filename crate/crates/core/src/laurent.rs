//! Laurent polynomials in the formal variable s (s⁴ = q).
//!
//! Exponents are stored in s-units: the monomial q^e is represented with
//! exponent 4e. The term map is canonical — no zero coefficient is stored —
//! so structural equality is ring equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::ExactError;

/// A Laurent polynomial Σ c_k s^k with arbitrary-precision rational
/// coefficients, kept in canonical form (no stored zero coefficient).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Laurent {
    terms: BTreeMap<i64, BigRational>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Laurent::monomial_s(0, BigRational::one())
    }

    /// c·s^k.
    pub fn monomial_s(k: i64, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Laurent { terms }
    }

    /// c·q^e = c·s^(4e).
    pub fn monomial_q(e: i64, c: BigRational) -> Self {
        Laurent::monomial_s(4 * e, c)
    }

    /// The variable s itself.
    pub fn s() -> Self {
        Laurent::monomial_s(1, BigRational::one())
    }

    /// q = s⁴.
    pub fn q() -> Self {
        Laurent::monomial_q(1, BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Laurent::monomial_s(0, crate::rat(n))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff_s(&self, k: i64) -> BigRational {
        self.terms.get(&k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Exponent range (in s-units) of the support, `None` for zero.
    pub fn support_s(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().next()?;
        let hi = self.terms.keys().next_back()?;
        Some((*lo, *hi))
    }

    /// True when every exponent is divisible by 4, i.e. the value lies in
    /// the q-subring.
    pub fn is_q_polynomial(&self) -> bool {
        self.terms.keys().all(|k| k % 4 == 0)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    fn insert_add(&mut self, k: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(k) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// s ↦ s⁻¹ (q ↦ q⁻¹ on the q-subring); matches mirror images of links.
    pub fn invert_var(&self) -> Laurent {
        let mut out = Laurent::zero();
        for (k, c) in self.terms() {
            out.insert_add(-k, c.clone());
        }
        out
    }

    /// Multiply by the unit c·s^k.
    pub fn mul_monomial(&self, k: i64, c: &BigRational) -> Laurent {
        let mut out = Laurent::zero();
        for (e, a) in self.terms() {
            out.insert_add(e + k, a * c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Laurent {
        let mut acc = Laurent::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division, defined when `self` is a multiple of `rhs`. Since s
    /// is a unit, this is polynomial division after shifting both supports
    /// to start at exponent zero.
    pub fn div_exact(&self, rhs: &Laurent) -> Result<Laurent, ExactError> {
        if rhs.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Laurent::zero());
        }
        let (self_lo, _) = self.support_s().unwrap();
        let (rhs_lo, rhs_hi) = rhs.support_s().unwrap();
        let rhs_deg = rhs_hi - rhs_lo;
        let rhs_lead = rhs.coeff_s(rhs_hi);
        let mut rem = self.clone();
        let mut quot = Laurent::zero();
        // Quotient exponents stay at or above self_lo - rhs_lo; falling
        // below means the division is inexact.
        while let Some((lo, hi)) = rem.support_s() {
            if hi - lo < rhs_deg || lo < self_lo {
                return Err(ExactError::NonInvertible);
            }
            let k = hi - rhs_hi;
            let c = rem.coeff_s(hi) / &rhs_lead;
            let piece = Laurent::monomial_s(k, c);
            rem = &rem - &(&piece * rhs);
            quot = &quot + &piece;
        }
        Ok(quot)
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.insert_add(k, c.clone());
        }
        out
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.insert_add(k, -c.clone());
        }
        out
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (k1, c1) in self.terms() {
            for (k2, c2) in rhs.terms() {
                out.insert_add(k1 + k2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        let mut out = Laurent::zero();
        for (k, c) in self.terms() {
            out.insert_add(k, -c.clone());
        }
        out
    }
}

fn fmt_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// One term in the pinned textual form: coefficient omitted when ±1,
/// exponent omitted when 1, bare coefficient for exponent 0.
fn fmt_term(var: &str, e: i64, c: &BigRational) -> String {
    let abs = c.abs();
    if e == 0 {
        return fmt_coeff(&abs);
    }
    let var_part = if e == 1 { var.to_string() } else { format!("{var}^{e}") };
    if abs.is_one() {
        var_part
    } else {
        format!("{}*{}", fmt_coeff(&abs), var_part)
    }
}

impl fmt::Display for Laurent {
    /// Terms in ascending exponent order, `c*q^e` / `c*s^e` with ` + ` and
    /// ` - ` separators. Prints in q when the support allows it, in s
    /// otherwise. This format is pinned by the CLI golden tests.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let in_q = self.is_q_polynomial();
        let var = if in_q { "q" } else { "s" };
        let mut first = true;
        for (k, c) in self.terms() {
            let e = if in_q { k / 4 } else { k };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                write!(f, "{}", fmt_term(var, e, c))?;
                first = false;
            } else {
                write!(f, " {} {}", if c.is_negative() { "-" } else { "+" }, fmt_term(var, e, c))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i64) -> Laurent {
        Laurent::monomial_q(e, crate::rat(1))
    }

    #[test]
    fn units_cancel() {
        // s^4 * s^-4 = 1
        let a = Laurent::monomial_s(4, crate::rat(1));
        let b = Laurent::monomial_s(-4, crate::rat(1));
        assert_eq!(&a * &b, Laurent::one());
    }

    #[test]
    fn display_format() {
        let p = &(&q(-5) + &q(-1)) + &Laurent::monomial_q(-3, crate::rat(2));
        assert_eq!(p.to_string(), "q^-5 + 2*q^-3 + q^-1");

        let m = &(&q(0) - &q(1)) + &Laurent::monomial_q(2, crate::rat(3));
        assert_eq!(m.to_string(), "1 - q + 3*q^2");

        let n = &Laurent::zero() - &q(2);
        assert_eq!(n.to_string(), "-q^2");

        let s = &Laurent::monomial_s(-2, crate::rat(1)) + &Laurent::monomial_s(2, crate::rat(1));
        assert_eq!(s.to_string(), "s^-2 + s^2");

        assert_eq!(Laurent::zero().to_string(), "0");
    }

    #[test]
    fn div_exact_geometric() {
        // (s^-6 - s^6) / (s^-2 - s^2) = s^-4 + 1 + s^4
        let num = &Laurent::monomial_s(-6, crate::rat(1)) - &Laurent::monomial_s(6, crate::rat(1));
        let den = &Laurent::monomial_s(-2, crate::rat(1)) - &Laurent::monomial_s(2, crate::rat(1));
        let quot = num.div_exact(&den).unwrap();
        let expect = &(&Laurent::monomial_s(-4, crate::rat(1)) + &Laurent::one())
            + &Laurent::monomial_s(4, crate::rat(1));
        assert_eq!(quot, expect);

        let bad = Laurent::one().div_exact(&den);
        assert!(bad.is_err());
    }
}
