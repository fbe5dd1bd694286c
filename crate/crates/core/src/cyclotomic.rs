//! The cyclotomic field ℚ(ζ_ℓ) = ℚ[x]/Φ_ℓ(x), with x playing the role of a
//! primitive ℓ-th root of unity q.
//!
//! Elements are residue polynomials of degree < φ(ℓ) with rational
//! coefficients, always reduced, so equality is structural. Φ_ℓ is computed
//! by the classical recursion Φ_ℓ = (x^ℓ − 1) / Π_{d|ℓ, d<ℓ} Φ_d; ℓ need not
//! be prime (and need not be odd — the ribbon layer decides where odd ℓ is
//! required).

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;

use crate::scalar::ExactError;

type Poly = Vec<BigRational>; // dense, ascending degree, no trailing zeros

fn poly_trim(p: &mut Poly) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    poly_trim(&mut out);
    out
}

/// Quotient of exact polynomial division; panics if the division leaves a
/// remainder (only used on cyclotomic factors, where it is exact).
fn poly_div_exact(num: &Poly, den: &Poly) -> Poly {
    let mut rem = num.clone();
    let mut quot = vec![BigRational::zero(); num.len().saturating_sub(den.len()) + 1];
    let dl = den.len() - 1;
    let lead = &den[dl];
    while rem.len() >= den.len() {
        let k = rem.len() - den.len();
        let c = rem.last().unwrap() / lead;
        for (j, d) in den.iter().enumerate() {
            let v = &c * d;
            rem[k + j] -= v;
        }
        poly_trim(&mut rem);
        quot[k] = c;
    }
    assert!(rem.is_empty(), "polynomial division was not exact");
    poly_trim(&mut quot);
    quot
}

/// Φ_n as a dense rational polynomial (coefficients are in fact integers).
fn cyclotomic_poly(n: u32) -> Poly {
    // x^n - 1
    let mut num = vec![BigRational::zero(); n as usize + 1];
    num[0] = -BigRational::one();
    num[n as usize] = BigRational::one();
    let mut den = vec![BigRational::one()]; // constant 1
    for d in 1..n {
        if n % d == 0 {
            den = poly_mul(&den, &cyclotomic_poly(d));
        }
    }
    poly_div_exact(&num, &den)
}

/// Shared per-ℓ data: Φ_ℓ and the reductions of x^k for 0 ≤ k < 2φ−1.
pub struct CycCtx {
    pub ell: u32,
    pub phi: usize,
    phi_poly: Poly,
    /// xpow[k] = x^k mod Φ_ℓ as a length-φ coefficient vector, for
    /// k up to max(ℓ−1, 2φ−2) (covers both q-powers and product reduction).
    xpow: Vec<Vec<BigRational>>,
}

impl CycCtx {
    fn new(ell: u32) -> Self {
        assert!(ell >= 2, "need ell >= 2");
        let phi_poly = cyclotomic_poly(ell);
        let phi = phi_poly.len() - 1;
        let kmax = std::cmp::max(ell as usize - 1, 2 * phi.saturating_sub(1));
        let mut xpow: Vec<Vec<BigRational>> = Vec::with_capacity(kmax + 1);
        for k in 0..=kmax {
            if k < phi {
                let mut row = vec![BigRational::zero(); phi];
                row[k] = BigRational::one();
                xpow.push(row);
            } else {
                // x^k = x * x^(k-1), then reduce the overflow coefficient
                // using x^phi = -(Φ - x^phi) i.e. the lower part of Φ negated.
                let prev = &xpow[k - 1];
                let mut row = vec![BigRational::zero(); phi + 1];
                for (i, c) in prev.iter().enumerate() {
                    row[i + 1] = c.clone();
                }
                let top = row.pop().unwrap();
                if !top.is_zero() {
                    for i in 0..phi {
                        let v = &top * &phi_poly[i];
                        row[i] -= v;
                    }
                }
                xpow.push(row);
            }
        }
        CycCtx { ell, phi, phi_poly, xpow }
    }

    /// Φ_ℓ coefficients, ascending degree (monic, degree φ).
    pub fn phi_coeffs(&self) -> &[BigRational] {
        &self.phi_poly
    }

    /// x^k mod Φ_ℓ for any integer k (reduced mod ℓ first).
    pub fn xpow_reduced(&self, k: i64) -> &[BigRational] {
        let k = k.rem_euclid(self.ell as i64) as usize;
        &self.xpow[k]
    }
}

static CTX_REGISTRY: Lazy<Mutex<HashMap<u32, Arc<CycCtx>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Fetch (or build) the shared context for ℚ(ζ_ℓ).
pub fn cyc_ctx(ell: u32) -> Arc<CycCtx> {
    let mut reg = CTX_REGISTRY.lock().unwrap();
    reg.entry(ell).or_insert_with(|| Arc::new(CycCtx::new(ell))).clone()
}

/// An element of ℚ(ζ_ℓ), reduced mod Φ_ℓ.
#[derive(Clone)]
pub struct Cyc {
    pub ctx: Arc<CycCtx>,
    /// Length φ(ℓ), ascending powers of x.
    c: Vec<BigRational>,
}

impl Cyc {
    pub fn zero(ctx: &Arc<CycCtx>) -> Self {
        Cyc { ctx: ctx.clone(), c: vec![BigRational::zero(); ctx.phi] }
    }

    pub fn one(ctx: &Arc<CycCtx>) -> Self {
        Cyc::from_rat(ctx, BigRational::one())
    }

    pub fn from_rat(ctx: &Arc<CycCtx>, r: BigRational) -> Self {
        let mut c = vec![BigRational::zero(); ctx.phi];
        c[0] = r;
        Cyc { ctx: ctx.clone(), c }
    }

    pub fn from_int(ctx: &Arc<CycCtx>, n: i64) -> Self {
        Cyc::from_rat(ctx, crate::rat(n))
    }

    /// q^k (k any integer, reduced mod ℓ).
    pub fn q_pow(ctx: &Arc<CycCtx>, k: i64) -> Self {
        Cyc { ctx: ctx.clone(), c: ctx.xpow_reduced(k).to_vec() }
    }

    /// The paper's fractional power q^(e/4) := q^((ℓ+1)²e/4 mod ℓ).
    /// Half powers q^(e/2) are q_quarter(2e). Requires odd ℓ.
    pub fn q_quarter(ctx: &Arc<CycCtx>, e: i64) -> Self {
        assert!(ctx.ell % 2 == 1, "fractional q-powers need odd ell");
        let l = ctx.ell as i64;
        let m = ((l + 1) * (l + 1) / 4).rem_euclid(l);
        Cyc::q_pow(ctx, m * e)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn from_coeffs(ctx: &Arc<CycCtx>, mut c: Vec<BigRational>) -> Self {
        assert!(c.len() <= ctx.phi);
        c.resize(ctx.phi, BigRational::zero());
        Cyc { ctx: ctx.clone(), c }
    }

    fn same_ring(&self, rhs: &Cyc) {
        assert_eq!(self.ctx.ell, rhs.ctx.ell, "mixed cyclotomic orders");
    }

    pub fn scale(&self, r: &BigRational) -> Cyc {
        Cyc { ctx: self.ctx.clone(), c: self.c.iter().map(|x| x * r).collect() }
    }

    /// Multiply by q^k (cheap shift-and-reduce, x^ℓ = 1).
    pub fn mul_q_pow(&self, k: i64) -> Cyc {
        let phi = self.ctx.phi;
        let mut out = vec![BigRational::zero(); phi];
        for (i, ci) in self.c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, xj) in self.ctx.xpow_reduced(i as i64 + k).iter().enumerate() {
                out[j] += ci * xj;
            }
        }
        Cyc { ctx: self.ctx.clone(), c: out }
    }

    pub fn pow(&self, n: u64) -> Cyc {
        let mut acc = Cyc::one(&self.ctx);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in ℚ[x];
    /// Φ_ℓ is irreducible over ℚ, so every nonzero element is invertible.
    pub fn inv(&self) -> Result<Cyc, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let mut a = self.ctx.phi_poly.clone();
        let mut b = self.c.clone();
        poly_trim(&mut b);
        // Invariants: s_a*Φ + t_a*self = a, s_b*Φ + t_b*self = b (t tracked only).
        let mut ta: Poly = Vec::new();
        let mut tb: Poly = vec![BigRational::one()];
        while !b.is_empty() {
            // a = q*b + r
            let mut r = a.clone();
            let mut q: Poly = vec![BigRational::zero(); r.len().saturating_sub(b.len()) + 1];
            let dl = b.len() - 1;
            let lead = b[dl].clone();
            while r.len() >= b.len() {
                let k = r.len() - b.len();
                let c = r.last().unwrap() / &lead;
                for (j, d) in b.iter().enumerate() {
                    let v = &c * d;
                    r[k + j] -= v;
                }
                poly_trim(&mut r);
                q[k] = c;
            }
            poly_trim(&mut q);
            // t_r = t_a - q*t_b
            let qtb = poly_mul(&q, &tb);
            let mut tr = ta.clone();
            if tr.len() < qtb.len() {
                tr.resize(qtb.len(), BigRational::zero());
            }
            for (i, v) in qtb.iter().enumerate() {
                tr[i] -= v;
            }
            poly_trim(&mut tr);
            a = std::mem::replace(&mut b, r);
            ta = std::mem::replace(&mut tb, tr);
        }
        // a is now a nonzero constant gcd; inverse = ta / a.
        assert_eq!(a.len(), 1, "cyclotomic polynomial must be coprime to a nonzero residue");
        let scale = a[0].recip();
        let mut c: Vec<BigRational> = ta.iter().map(|x| x * &scale).collect();
        c.resize(self.ctx.phi, BigRational::zero());
        Ok(Cyc { ctx: self.ctx.clone(), c })
    }

    pub fn div(&self, rhs: &Cyc) -> Result<Cyc, ExactError> {
        self.same_ring(rhs);
        Ok(self * &rhs.inv()?)
    }

    /// The Galois automorphism q ↦ q^k (gcd(k, ℓ) must be 1).
    pub fn galois(&self, k: i64) -> Cyc {
        let ell = self.ctx.ell as i64;
        let k = k.rem_euclid(ell);
        assert_eq!(num_integer::gcd(k, ell), 1, "galois exponent must be a unit mod ell");
        let mut out = Cyc::zero(&self.ctx);
        for (i, ci) in self.c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            out = &out + &Cyc::q_pow(&self.ctx, k * i as i64).scale(ci);
        }
        out
    }
}

impl PartialEq for Cyc {
    fn eq(&self, rhs: &Cyc) -> bool {
        self.ctx.ell == rhs.ctx.ell && self.c == rhs.c
    }
}
impl Eq for Cyc {}

impl Add for &Cyc {
    type Output = Cyc;
    fn add(self, rhs: &Cyc) -> Cyc {
        self.same_ring(rhs);
        let c = self.c.iter().zip(&rhs.c).map(|(a, b)| a + b).collect();
        Cyc { ctx: self.ctx.clone(), c }
    }
}

impl Sub for &Cyc {
    type Output = Cyc;
    fn sub(self, rhs: &Cyc) -> Cyc {
        self.same_ring(rhs);
        let c = self.c.iter().zip(&rhs.c).map(|(a, b)| a - b).collect();
        Cyc { ctx: self.ctx.clone(), c }
    }
}

impl Mul for &Cyc {
    type Output = Cyc;
    fn mul(self, rhs: &Cyc) -> Cyc {
        self.same_ring(rhs);
        let phi = self.ctx.phi;
        let mut raw = vec![BigRational::zero(); 2 * phi - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] += a * b;
            }
        }
        let mut out = vec![BigRational::zero(); phi];
        for (k, v) in raw.into_iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if k < phi {
                out[k] += v;
            } else {
                for (j, xj) in self.ctx.xpow[k].iter().enumerate() {
                    out[j] += &v * xj;
                }
            }
        }
        Cyc { ctx: self.ctx.clone(), c: out }
    }
}

impl Neg for &Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc { ctx: self.ctx.clone(), c: self.c.iter().map(|x| -x).collect() }
    }
}

impl fmt::Display for Cyc {
    /// Residue polynomial in q, ascending exponents, same term format as
    /// the Laurent display.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = {
                let abs = c.abs();
                if e == 0 {
                    if abs.is_integer() {
                        abs.numer().to_string()
                    } else {
                        format!("{}/{}", abs.numer(), abs.denom())
                    }
                } else {
                    let v = if e == 1 { "q".to_string() } else { format!("q^{e}") };
                    if abs.is_one() {
                        v
                    } else if abs.is_integer() {
                        format!("{}*{}", abs.numer(), v)
                    } else {
                        format!("{}/{}*{}", abs.numer(), abs.denom(), v)
                    }
                }
            };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                write!(f, "{term}")?;
                first = false;
            } else {
                write!(f, " {} {term}", if c.is_negative() { "-" } else { "+" })?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc(ell={}, {})", self.ctx.ell, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_polys() {
        let c3 = cyc_ctx(3);
        assert_eq!(c3.phi, 2); // x^2 + x + 1
        let c9 = cyc_ctx(9);
        assert_eq!(c9.phi, 6); // x^6 + x^3 + 1
        assert!(c9.phi_coeffs().iter().enumerate().all(|(i, c)| {
            let expect = if i == 0 || i == 3 || i == 6 { 1 } else { 0 };
            *c == crate::rat(expect)
        }));
        let c15 = cyc_ctx(15);
        assert_eq!(c15.phi, 8);
    }

    #[test]
    fn root_of_unity_relations() {
        for ell in [3u32, 5, 7, 11] {
            let ctx = cyc_ctx(ell);
            // q^ell = 1
            assert_eq!(Cyc::q_pow(&ctx, ell as i64), Cyc::one(&ctx));
            // 1 + q + ... + q^(ell-1) = 0
            let mut s = Cyc::zero(&ctx);
            for k in 0..ell as i64 {
                s = &s + &Cyc::q_pow(&ctx, k);
            }
            assert!(s.is_zero());
        }
    }

    #[test]
    fn half_power_squares_to_q() {
        // (q^((ell+1)/2))^2 = q, e.g. q^3 * q^3 = q^6 = q at ell = 5
        for ell in [3i64, 5, 7, 13] {
            let ctx = cyc_ctx(ell as u32);
            let h = Cyc::q_pow(&ctx, (ell + 1) / 2);
            assert_eq!(&h * &h, Cyc::q_pow(&ctx, 1));
        }
    }

    #[test]
    fn quarter_power_fourth_is_q() {
        for ell in [3i64, 5, 7, 11] {
            let ctx = cyc_ctx(ell as u32);
            let r = Cyc::q_quarter(&ctx, 1);
            assert_eq!(r.pow(4), Cyc::q_pow(&ctx, 1));
            // q^((ell^2-1)/4) = q^(-1/4)
            assert_eq!(Cyc::q_pow(&ctx, (ell * ell - 1) / 4), Cyc::q_quarter(&ctx, -1));
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let ctx = cyc_ctx(5);
        let a = &(&Cyc::q_pow(&ctx, 1) - &Cyc::from_int(&ctx, 3)) + &Cyc::q_pow(&ctx, 3);
        let inv = a.inv().unwrap();
        assert_eq!(&a * &inv, Cyc::one(&ctx));
        assert!(Cyc::zero(&ctx).inv().is_err());
    }

    #[test]
    fn one_minus_q_times_geometric_is_zero_at_3() {
        let ctx = cyc_ctx(3);
        let a = &Cyc::one(&ctx) - &Cyc::q_pow(&ctx, 1);
        let b = &(&Cyc::one(&ctx) + &Cyc::q_pow(&ctx, 1)) + &Cyc::q_pow(&ctx, 2);
        assert!((&a * &b).is_zero());
    }

    #[test]
    fn galois_inverts_q() {
        let ctx = cyc_ctx(7);
        let a = &Cyc::q_pow(&ctx, 2) + &Cyc::from_int(&ctx, 5);
        let b = a.galois(-1);
        assert_eq!(b, &Cyc::q_pow(&ctx, -2) + &Cyc::from_int(&ctx, 5));
    }

    #[test]
    fn proper_subsets_of_powers_independent() {
        // Any ell-1 of the powers {q^0..q^(ell-1)} are linearly independent:
        // rank of their coefficient vectors is ell-1 for ell <= 13.
        for ell in [3u32, 5, 7, 11, 13] {
            let ctx = cyc_ctx(ell);
            for omit in 0..ell as i64 {
                let vecs: Vec<Vec<BigRational>> = (0..ell as i64)
                    .filter(|k| *k != omit)
                    .map(|k| Cyc::q_pow(&ctx, k).coeffs().to_vec())
                    .collect();
                assert_eq!(rank(vecs), ell as usize - 1);
            }
        }
    }

    fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut r = 0;
        for c in 0..cols {
            if let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) {
                rows.swap(r, p);
                let inv = rows[r][c].recip();
                for i in 0..rows.len() {
                    if i != r && !rows[i][c].is_zero() {
                        let f = &rows[i][c] * &inv;
                        for j in c..cols {
                            let v = &rows[r][j] * &f;
                            rows[i][j] -= v;
                        }
                    }
                }
                r += 1;
            }
        }
        r
    }
}
