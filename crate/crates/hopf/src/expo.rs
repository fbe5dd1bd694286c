//! Exponent tuples in Λ = ℤⁿ and the standard maps on them: the skew
//! bicharacter θ, the pairing ⟨·,·⟩, the * form, componentwise reduction
//! into [0, ℓ−1], Gauss binomials, and the tilde homomorphism.

use std::sync::Arc;

use taftlink_core::cyclotomic::{Cyc, CycCtx};

pub type Expo = Vec<i64>;

/// Shared parameters of one n-rank Taft algebra family member.
#[derive(Clone)]
pub struct Params {
    pub n: usize,
    pub ell: u32,
    pub ctx: Arc<CycCtx>,
}

impl Params {
    pub fn new(n: usize, ell: u32) -> Self {
        assert!(n >= 1 && ell >= 2);
        Params { n, ell, ctx: taftlink_core::cyc_ctx(ell) }
    }

    pub fn zero_expo(&self) -> Expo {
        vec![0; self.n]
    }

    pub fn eps(&self, i: usize) -> Expo {
        let mut e = vec![0; self.n];
        e[i] = 1;
        e
    }

    /// κ = (ℓ−1, …, ℓ−1).
    pub fn kappa(&self) -> Expo {
        vec![self.ell as i64 - 1; self.n]
    }

    /// 𝟏 = (1, …, 1).
    pub fn ones(&self) -> Expo {
        vec![1; self.n]
    }

    /// Componentwise reduction into [0, ℓ−1].
    pub fn reduce(&self, a: &[i64]) -> Expo {
        a.iter().map(|x| x.rem_euclid(self.ell as i64)).collect()
    }

    pub fn q_pow(&self, k: i64) -> Cyc {
        Cyc::q_pow(&self.ctx, k)
    }

    /// α*β = Σ_{i>j} α_i β_j.
    pub fn star(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for i in 1..self.n {
            for j in 0..i {
                s += a[i] * b[j];
            }
        }
        s
    }

    /// θ(α,β) = q^(α*β − β*α).
    pub fn theta(&self, a: &[i64], b: &[i64]) -> Cyc {
        self.q_pow(self.theta_exp(a, b))
    }

    /// The exponent of θ(α,β) (valued in ℤ, used mod ℓ).
    pub fn theta_exp(&self, a: &[i64], b: &[i64]) -> i64 {
        self.star(a, b) - self.star(b, a)
    }

    /// ⟨α,β⟩ = Σ α_i β_i.
    pub fn dot(&self, a: &[i64], b: &[i64]) -> i64 {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    /// |γ| = Σ γ_i.
    pub fn weight(&self, a: &[i64]) -> i64 {
        a.iter().sum()
    }

    /// The Gauss number (m)_q = 1 + q + … + q^(m−1).
    pub fn gauss_int(&self, m: i64) -> Cyc {
        let mut s = Cyc::zero(&self.ctx);
        for k in 0..m {
            s = &s + &self.q_pow(k);
        }
        s
    }

    /// The Gauss binomial (m choose j)_q: the usual q-quotient for
    /// 0 ≤ m < ℓ, and 0 otherwise (including j outside [0, m]).
    pub fn gauss_binom(&self, m: i64, j: i64) -> Cyc {
        if m < 0 || m >= self.ell as i64 || j < 0 || j > m {
            return Cyc::zero(&self.ctx);
        }
        // (m)_q! / ((m-j)_q! (j)_q!) computed as a product of exact
        // quotients Π_{k=1..j} (m-j+k)_q / (k)_q; each factor divides since
        // the whole binomial is a polynomial in q.
        let mut num = Cyc::one(&self.ctx);
        let mut den = Cyc::one(&self.ctx);
        for k in 1..=j {
            num = &num * &self.gauss_int(m - j + k);
            den = &den * &self.gauss_int(k);
        }
        num.div(&den).expect("gauss factorials are nonzero below ell")
    }

    /// Π_i (γ_i choose ξ_i)_q.
    pub fn gauss_binom_multi(&self, gamma: &[i64], xi: &[i64]) -> Cyc {
        let mut p = Cyc::one(&self.ctx);
        for i in 0..self.n {
            p = &p * &self.gauss_binom(gamma[i], xi[i]);
            if p.is_zero() {
                break;
            }
        }
        p
    }

    /// tilde: β̃_i = β_1 + … + β_i − β_{i+1} − … − β_n for i < n, β̃_n = |β|.
    pub fn tilde(&self, b: &[i64]) -> Expo {
        let n = self.n;
        (0..n)
            .map(|i| {
                if i + 1 == n {
                    b.iter().sum()
                } else {
                    let head: i64 = b[..=i].iter().sum();
                    let tail: i64 = b[i + 1..].iter().sum();
                    head - tail
                }
            })
            .collect()
    }

    /// All exponents in Λ₊^{≤bound}, in lexicographic order (first
    /// coordinate major). This is the pinned basis enumeration order.
    pub fn expos_below(&self, bound: &[i64]) -> Vec<Expo> {
        let mut out = Vec::new();
        let mut cur = vec![0i64; self.n];
        loop {
            out.push(cur.clone());
            // increment like a mixed-radix counter, last coordinate fastest
            let mut i = self.n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < bound[i] {
                    cur[i] += 1;
                    for x in cur[i + 1..].iter_mut() {
                        *x = 0;
                    }
                    break;
                }
            }
        }
    }

    /// All of Λ₊^{≤κ}.
    pub fn all_expos(&self) -> Vec<Expo> {
        self.expos_below(&self.kappa())
    }

    /// Mixed-radix index of an exponent ≤ κ in the `all_expos` order.
    pub fn expo_index(&self, g: &[i64]) -> usize {
        let ell = self.ell as usize;
        let mut ix = 0;
        for &x in g {
            debug_assert!(0 <= x && x < self.ell as i64);
            ix = ix * ell + x as usize;
        }
        ix
    }

    pub fn expo_from_index(&self, mut ix: usize) -> Expo {
        let ell = self.ell as usize;
        let mut g = vec![0i64; self.n];
        for i in (0..self.n).rev() {
            g[i] = (ix % ell) as i64;
            ix /= ell;
        }
        g
    }
}

pub fn expo_add(a: &[i64], b: &[i64]) -> Expo {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn expo_sub(a: &[i64], b: &[i64]) -> Expo {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn expo_neg(a: &[i64]) -> Expo {
    a.iter().map(|x| -x).collect()
}

/// Componentwise α ≤ β.
pub fn expo_le(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_on_basis_vectors() {
        let p = Params::new(2, 5);
        let (e1, e2) = (p.eps(0), p.eps(1));
        // θ(ε₂, ε₁) = q for i > j
        assert_eq!(p.theta(&e2, &e1), p.q_pow(1));
        assert_eq!(p.theta(&e1, &e2), p.q_pow(-1));
        assert_eq!(p.theta(&e1, &e1), p.q_pow(0));
        // skewness θ(α,β)·θ(β,α) = 1
        let a = vec![2, 3];
        let b = vec![4, 1];
        assert_eq!(&p.theta(&a, &b) * &p.theta(&b, &a), Cyc::one(&p.ctx));
        assert_eq!(p.theta(&a, &a), Cyc::one(&p.ctx));
    }

    #[test]
    fn gauss_binomials() {
        let p = Params::new(1, 5);
        assert_eq!(p.gauss_binom(3, 0), Cyc::one(&p.ctx));
        // (2 choose 1)_q = 1 + q
        assert_eq!(p.gauss_binom(2, 1), &Cyc::one(&p.ctx) + &p.q_pow(1));
        // m >= ell vanishes
        let p3 = Params::new(1, 3);
        assert!(p3.gauss_binom(3, 1).is_zero());
        assert!(p.gauss_binom(2, 3).is_zero());
        assert!(p.gauss_binom(2, -1).is_zero());
        // (4 choose 2)_q = (1+q^2)(1+q+q^2)
        let lhs = p.gauss_binom(4, 2);
        let rhs = &(&Cyc::one(&p.ctx) + &p.q_pow(2)) * &p.gauss_int(3);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn tilde_values() {
        let p1 = Params::new(1, 5);
        assert_eq!(p1.tilde(&[3]), vec![3]);
        let p2 = Params::new(2, 5);
        assert_eq!(p2.tilde(&[0, 1]), vec![-1, 1]);
        assert_eq!(p2.tilde(&[0, 0]), vec![0, 0]);
        // additivity
        let p3 = Params::new(3, 7);
        let (a, b) = (vec![1, 4, 2], vec![3, 0, 5]);
        assert_eq!(p3.tilde(&expo_add(&a, &b)), expo_add(&p3.tilde(&a), &p3.tilde(&b)));
    }

    #[test]
    fn enumeration_and_indexing() {
        let p = Params::new(2, 3);
        let all = p.all_expos();
        assert_eq!(all.len(), 9);
        assert_eq!(all[0], vec![0, 0]);
        assert_eq!(all[1], vec![0, 1]);
        assert_eq!(all[3], vec![1, 0]);
        for (i, g) in all.iter().enumerate() {
            assert_eq!(p.expo_index(g), i);
            assert_eq!(p.expo_from_index(i), *g);
        }
    }
}
