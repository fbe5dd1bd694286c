//! Specialization ℤ[s,s⁻¹] → ℚ(ζ_ℓ) and its inverse on an exponent window.
//!
//! For odd ℓ the variable s maps to q^((ℓ+1)²/4 mod ℓ); since (ℓ+1)² ≡ 1
//! (mod ℓ) this sends s⁴ = q to q, and consecutive s-exponents to distinct
//! q-powers. Lifting solves the resulting linear system exactly over ℚ,
//! cross-checking consistency between all supplied ℓ values.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use crate::cyclotomic::{cyc_ctx, Cyc, CycCtx};
use crate::laurent::Laurent;
use crate::scalar::ExactError;

/// The s-exponent multiplier of the specialization: s^k ↦ q^(k·m), with
/// m = (ℓ+1)²/4 mod ℓ.
fn s_multiplier(ell: u32) -> Result<i64, ExactError> {
    if ell < 3 || ell % 2 == 0 {
        return Err(ExactError::EvenEll(ell));
    }
    let l = ell as i64;
    Ok(((l + 1) * (l + 1) / 4).rem_euclid(l))
}

/// Ring homomorphism ℤ[s,s⁻¹] → ℚ(ζ_ℓ), s ↦ q^((ℓ+1)²/4 mod ℓ).
pub fn specialize(p: &Laurent, ell: u32) -> Result<Cyc, ExactError> {
    let m = s_multiplier(ell)?;
    let ctx = cyc_ctx(ell);
    let mut out = Cyc::zero(&ctx);
    for (k, c) in p.terms() {
        out = &out + &Cyc::q_pow(&ctx, k * m).scale(c);
    }
    Ok(out)
}

/// Lift values back to the unique integer Laurent polynomial supported on
/// the given s-exponents. Exponents must be pinned by at least one ℓ
/// (at most ℓ−1 of them), and all values must agree on the lift.
fn lift_on_exponents(values: &[(u32, Cyc)], exps: &[i64]) -> Result<Laurent, ExactError> {
    if values.is_empty() {
        return Err(ExactError::LiftNoValues);
    }
    let max_ell = values.iter().map(|(l, _)| *l).max().unwrap();
    if exps.len() + 1 > max_ell as usize {
        return Err(ExactError::LiftWindowTooWide { len: exps.len(), max_ell });
    }
    // Stack one row block per ℓ: columns are window exponents, right-hand
    // side is the value's residue vector.
    let mut rows: Vec<(Vec<BigRational>, BigRational)> = Vec::new();
    for (ell, value) in values {
        let m = s_multiplier(*ell)?;
        let ctx: Arc<CycCtx> = cyc_ctx(*ell);
        if value.ctx.ell != *ell {
            return Err(ExactError::RingMismatch);
        }
        let cols: Vec<&[BigRational]> = exps.iter().map(|k| ctx.xpow_reduced(k * m)).collect();
        for i in 0..ctx.phi {
            let row: Vec<BigRational> = cols.iter().map(|col| col[i].clone()).collect();
            rows.push((row, value.coeffs()[i].clone()));
        }
    }
    let sol = solve_unique(rows, exps.len())?;
    let mut out = Laurent::zero();
    for (k, c) in exps.iter().zip(sol) {
        if !c.is_integer() {
            return Err(ExactError::LiftNotIntegral);
        }
        out = &out + &Laurent::monomial_s(*k, c);
    }
    Ok(out)
}

/// Lift to an integer Laurent polynomial in q supported on `window_q`
/// (inclusive), requiring window length ≤ ℓ−1 for the largest supplied ℓ.
pub fn lift_q(values: &[(u32, Cyc)], window_q: (i64, i64)) -> Result<Laurent, ExactError> {
    let exps: Vec<i64> = (window_q.0..=window_q.1).map(|e| 4 * e).collect();
    lift_on_exponents(values, &exps)
}

/// Lift on a window of s-exponents (used when half powers of q appear,
/// e.g. rank-1 values of links with an even number of components).
pub fn lift_s(values: &[(u32, Cyc)], window_s: (i64, i64)) -> Result<Laurent, ExactError> {
    let exps: Vec<i64> = (window_s.0..=window_s.1).collect();
    lift_on_exponents(values, &exps)
}

/// Gaussian elimination demanding a unique, consistent solution.
fn solve_unique(
    mut rows: Vec<(Vec<BigRational>, BigRational)>,
    ncols: usize,
) -> Result<Vec<BigRational>, ExactError> {
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i].0[c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r].0[c].recip();
        for j in 0..ncols {
            rows[r].0[j] = &rows[r].0[j] * &inv;
        }
        rows[r].1 = &rows[r].1 * &inv;
        for i in 0..rows.len() {
            if i != r && !rows[i].0[c].is_zero() {
                let f = rows[i].0[c].clone();
                for j in 0..ncols {
                    let v = &rows[r].0[j] * &f;
                    rows[i].0[j] -= v;
                }
                let v = &rows[r].1 * &f;
                rows[i].1 -= v;
            }
        }
        pivot_of_col[c] = Some(r);
        r += 1;
    }
    // Inconsistent leftover rows mean the supplied ℓ values disagree.
    for i in r..rows.len() {
        if !rows[i].1.is_zero() {
            return Err(ExactError::LiftInconsistent);
        }
    }
    if pivot_of_col.iter().any(|p| p.is_none()) {
        return Err(ExactError::LiftUnderdetermined);
    }
    Ok(pivot_of_col.into_iter().map(|p| rows[p.unwrap()].1.clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn specialize_s4_is_q() {
        for ell in [5u32, 7] {
            let v = specialize(&Laurent::monomial_s(4, rat(1)), ell).unwrap();
            assert_eq!(v, Cyc::q_pow(&cyc_ctx(ell), 1));
        }
    }

    #[test]
    fn specialize_s_at_5_is_q4() {
        // (5+1)^2/4 = 9, and 9 mod 5 = 4
        let v = specialize(&Laurent::s(), 5).unwrap();
        assert_eq!(v, Cyc::q_pow(&cyc_ctx(5), 4));
    }

    #[test]
    fn specialize_rejects_even() {
        assert!(specialize(&Laurent::one(), 4).is_err());
        assert!(specialize(&Laurent::one(), 2).is_err());
    }

    #[test]
    fn lift_constant() {
        let ctx = cyc_ctx(5);
        let out = lift_q(&[(5, Cyc::one(&ctx))], (0, 0)).unwrap();
        assert_eq!(out, Laurent::one());
    }

    #[test]
    fn lift_roundtrip_table_row() {
        // q^-5 + 2q^-3 + q^-1 reduced at ell = 11, window [-5,-1]
        let p = &(&Laurent::monomial_q(-5, rat(1)) + &Laurent::monomial_q(-3, rat(2)))
            + &Laurent::monomial_q(-1, rat(1));
        let v = specialize(&p, 11).unwrap();
        let out = lift_q(&[(11, v)], (-5, -1)).unwrap();
        assert_eq!(out, p);
    }

    #[test]
    fn lift_detects_cross_ell_inconsistency() {
        let p = &Laurent::monomial_q(-5, rat(1)) + &Laurent::monomial_q(-1, rat(1));
        let v11 = specialize(&p, 11).unwrap();
        let v13 = specialize(&p, 13).unwrap();
        // Perturb the ell = 13 value.
        let bad = &v13 + &Cyc::q_pow(&cyc_ctx(13), 2);
        let r = lift_q(&[(11, v11), (13, bad)], (-5, -1));
        assert!(matches!(r, Err(ExactError::LiftInconsistent)));
    }

    #[test]
    fn lift_window_limit() {
        let ctx = cyc_ctx(5);
        let r = lift_q(&[(5, Cyc::one(&ctx))], (-2, 2)); // 5 exponents > 5 - 1
        assert!(matches!(r, Err(ExactError::LiftWindowTooWide { .. })));
    }

    #[test]
    fn joint_lift_window_beyond_single_ell() {
        // 11 exponents: too wide for ell = 11 alone, pinned by ell = 13.
        let mut p = Laurent::zero();
        for (e, c) in (-14..=-4).zip([1i64, -2, 3, -4, 3, -4, 3, -2, 0, 2, 1]) {
            p = &p + &Laurent::monomial_q(e, rat(c));
        }
        let v11 = specialize(&p, 11).unwrap();
        let v13 = specialize(&p, 13).unwrap();
        let out = lift_q(&[(11, v11), (13, v13)], (-14, -4)).unwrap();
        assert_eq!(out, p);
    }

    #[test]
    fn lift_s_half_powers() {
        // s^-2 + s^2 (i.e. q^-1/2 + q^1/2) survives an s-window lift.
        let p = &Laurent::monomial_s(-2, rat(1)) + &Laurent::monomial_s(2, rat(1));
        let v7 = specialize(&p, 7).unwrap();
        let out = lift_s(&[(7, v7)], (-3, 3)).unwrap();
        assert_eq!(out, p);
    }
}
