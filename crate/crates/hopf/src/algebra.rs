//! The four Hopf algebras of the construction, as lazily evaluated
//! structure-constant tables over a shared basis indexing:
//!
//! * [`Taft`] — the n-rank Taft algebra A on the monomial basis x^γ K(α);
//! * [`DualTaft`] — A* on the dual basis 𝕏^γ 𝕙(α) (all its tables are
//!   transposes of A's);
//! * [`Double`] — D(A) = (A*)^cop ⋈ A on pairs (dual index, A index);
//! * [`TensorTaft`] — the n-fold tensor power of the rank-1 Taft algebra,
//!   used by the cocycle-twist comparison.
//!
//! Basis order is lexicographic on (γ, α) with γ major, and on
//! (dual index, A index) for the double; everything downstream (golden
//! matrices, CLI output) depends on this order being stable.

use std::sync::Arc;

use dashmap::DashMap;
use taftlink_core::cyclotomic::Cyc;

use crate::elem::{Elem, Ix};
use crate::expo::{expo_add, expo_le, expo_neg, expo_sub, Expo, Params};

/// Above this dimension, basis products are recomputed instead of memoized
/// (a full product table at dimension 6561 would not fit in memory).
const MEMO_DIM_LIMIT: usize = 1024;

pub trait HopfOps: Sync {
    fn params(&self) -> &Params;
    fn dim(&self) -> usize;
    fn unit(&self) -> Elem;
    fn product_basis(&self, i: Ix, j: Ix) -> Elem;
    fn coproduct_basis(&self, i: Ix) -> Vec<(Ix, Ix, Cyc)>;
    fn counit_basis(&self, i: Ix) -> Cyc;
    fn antipode_basis(&self, i: Ix) -> Elem;
    /// Human-readable basis label for reports and witnesses.
    fn label(&self, i: Ix) -> String;

    fn one(&self) -> Cyc {
        Cyc::one(&self.params().ctx)
    }
}

fn fmt_monomial(x: &str, k: &str, g: &[i64], a: &[i64]) -> String {
    let mut s = String::new();
    for (i, e) in g.iter().enumerate() {
        match e {
            0 => {}
            1 => s.push_str(&format!("{x}{}", i + 1)),
            _ => s.push_str(&format!("{x}{}^{e}", i + 1)),
        }
    }
    if a.iter().any(|x| *x != 0) || s.is_empty() {
        s.push_str(&format!("{k}({})", a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")));
    }
    s
}

// ---- The n-rank Taft algebra ----

pub struct Taft {
    p: Params,
    dim: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum HopfError {
    #[error("dimension ell^(2n) = {0} exceeds the configured limit {1}")]
    DimensionOverflow(u128, u128),
    #[error("the double is not ribbon: no group-like square roots exist for even ell = {0}")]
    NotRibbon(u32),
}

/// Default guard for ℓ^(2n); (3,3) at 3^6 = 729 per side is the largest
/// family member the verification suites touch.
pub const DEFAULT_DIM_LIMIT: u128 = 1 << 24;

pub fn build_taft(n: usize, ell: u32) -> Result<Arc<Taft>, HopfError> {
    build_taft_with_limit(n, ell, DEFAULT_DIM_LIMIT)
}

pub fn build_taft_with_limit(n: usize, ell: u32, limit: u128) -> Result<Arc<Taft>, HopfError> {
    let d = (ell as u128).pow(2 * n as u32);
    if d > limit {
        return Err(HopfError::DimensionOverflow(d, limit));
    }
    let p = Params::new(n, ell);
    Ok(Arc::new(Taft { dim: d as usize, p }))
}

impl Taft {
    /// Index of x^γ K(α); both tuples must already lie in [0, ℓ−1]^n.
    pub fn ix(&self, gamma: &[i64], alpha: &[i64]) -> Ix {
        let half = self.half();
        (self.p.expo_index(gamma) * half + self.p.expo_index(alpha)) as Ix
    }

    pub fn ix_reduced(&self, gamma: &[i64], alpha: &[i64]) -> Ix {
        self.ix(gamma, &self.p.reduce(alpha))
    }

    pub fn expos(&self, i: Ix) -> (Expo, Expo) {
        let half = self.half();
        let g = self.p.expo_from_index(i as usize / half);
        let a = self.p.expo_from_index(i as usize % half);
        (g, a)
    }

    fn half(&self) -> usize {
        (self.p.ell as usize).pow(self.p.n as u32)
    }

    /// x^γ K(α) · x^η K(β) = θ(α,η) q^(⟨α,η⟩ + γ*η) x^(γ+η) K([α+β]),
    /// zero when the x-part overflows.
    pub fn product_monomial(&self, i: Ix, j: Ix) -> Option<(Ix, Cyc)> {
        let (g1, a1) = self.expos(i);
        let (g2, a2) = self.expos(j);
        let g = expo_add(&g1, &g2);
        if !expo_le(&g, &self.p.kappa()) {
            return None;
        }
        let e = self.p.theta_exp(&a1, &g2) + self.p.dot(&a1, &g2) + self.p.star(&g1, &g2);
        Some((self.ix_reduced(&g, &expo_add(&a1, &a2)), self.p.q_pow(e)))
    }

    /// s(x^γ K(α)) as (index, coefficient); an anti-automorphism sending
    /// x^γ K(α) to ±q^(...) x^γ K([−γ−α]).
    pub fn antipode_monomial(&self, i: Ix) -> (Ix, Cyc) {
        let (g, a) = self.expos(i);
        let k = self.ix_reduced(&g, &expo_neg(&expo_add(&g, &a)));
        (k, self.antipode_coeff(&g, &a))
    }

    /// The scalar in s(x^γ K(α)) = c · x^γ K([−γ−α]).
    fn antipode_coeff(&self, g: &[i64], a: &[i64]) -> Cyc {
        let p = &self.p;
        let half_norm = p.dot(g, &expo_add(g, &p.ones())) / 2;
        let e = -half_norm + p.theta_exp(g, a) - p.dot(a, g);
        let c = p.q_pow(e);
        if p.weight(g) % 2 == 0 {
            c
        } else {
            -&c
        }
    }

    /// s⁻¹(x^γ K(α)) = q^|γ| s(x^γ K(α)).
    pub fn antipode_inv_monomial(&self, i: Ix) -> (Ix, Cyc) {
        let (g, _) = self.expos(i);
        let (k, c) = self.antipode_monomial(i);
        (k, c.mul_q_pow(self.p.weight(&g)))
    }

    /// All (h₁, h₂, h₃, coeff) terms of the twofold coproduct Δ²(x^η K(ξ)).
    pub fn triple_coproduct(&self, i: Ix) -> Vec<(Ix, Ix, Ix, Cyc)> {
        let p = &self.p;
        let (eta, xi) = self.expos(i);
        let mut out = Vec::new();
        for nu in p.expos_below(&eta) {
            let rest = expo_sub(&eta, &nu);
            let b1 = p.gauss_binom_multi(&eta, &nu);
            if b1.is_zero() {
                continue;
            }
            for rho in p.expos_below(&rest) {
                let b2 = p.gauss_binom_multi(&rest, &rho);
                if b2.is_zero() {
                    continue;
                }
                let g1 = expo_sub(&rest, &rho);
                let e = -p.star(&rest, &nu) - p.star(&g1, &rho);
                let c = (&b1 * &b2).mul_q_pow(e);
                let h1 = self.ix_reduced(&g1, &expo_add(&expo_add(&rho, &nu), &xi));
                let h2 = self.ix_reduced(&rho, &expo_add(&nu, &xi));
                let h3 = self.ix(&nu, &xi);
                out.push((h1, h2, h3, c));
            }
        }
        out
    }
}

impl HopfOps for Taft {
    fn params(&self) -> &Params {
        &self.p
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn unit(&self) -> Elem {
        Elem::basis(0, self.one())
    }

    fn product_basis(&self, i: Ix, j: Ix) -> Elem {
        match self.product_monomial(i, j) {
            Some((k, c)) => Elem::basis(k, c),
            None => Elem::zero(),
        }
    }

    /// Δ(x^γ K(α)) = Σ_{ξ≤γ} (γ ch ξ) q^(−(γ−ξ)*ξ) x^(γ−ξ) K([ξ+α]) ⊗ x^ξ K(α).
    fn coproduct_basis(&self, i: Ix) -> Vec<(Ix, Ix, Cyc)> {
        let p = &self.p;
        let (g, a) = self.expos(i);
        let mut out = Vec::new();
        for xi in p.expos_below(&g) {
            let b = p.gauss_binom_multi(&g, &xi);
            if b.is_zero() {
                continue;
            }
            let left_g = expo_sub(&g, &xi);
            let c = b.mul_q_pow(-p.star(&left_g, &xi));
            out.push((self.ix_reduced(&left_g, &expo_add(&xi, &a)), self.ix(&xi, &a), c));
        }
        out
    }

    fn counit_basis(&self, i: Ix) -> Cyc {
        let (g, _) = self.expos(i);
        if g.iter().all(|x| *x == 0) {
            self.one()
        } else {
            Cyc::zero(&self.p.ctx)
        }
    }

    fn antipode_basis(&self, i: Ix) -> Elem {
        let (k, c) = self.antipode_monomial(i);
        Elem::basis(k, c)
    }

    fn label(&self, i: Ix) -> String {
        let (g, a) = self.expos(i);
        fmt_monomial("x", "K", &g, &a)
    }
}

// ---- The dual A* on the basis dual to the monomials ----

pub struct DualTaft {
    pub a: Arc<Taft>,
}

pub fn build_dual(a: &Arc<Taft>) -> Arc<DualTaft> {
    Arc::new(DualTaft { a: a.clone() })
}

impl DualTaft {
    /// p_{γ,α} := 𝕏^γ 𝕙(α), sharing the index scheme of x^γ K(α).
    pub fn ix(&self, gamma: &[i64], alpha: &[i64]) -> Ix {
        self.a.ix(gamma, alpha)
    }

    pub fn expos(&self, i: Ix) -> (Expo, Expo) {
        self.a.expos(i)
    }

    /// Evaluation p_{γ,α}(x^η K(β)) = δ_{γ,η} δ_{α,β}.
    pub fn eval_basis(&self, dual_ix: Ix, a_ix: Ix) -> Cyc {
        if dual_ix == a_ix {
            self.a.one()
        } else {
            Cyc::zero(&self.a.p.ctx)
        }
    }

    /// Evaluate a dual element against an A-basis monomial.
    pub fn eval(&self, p: &Elem, a_ix: Ix) -> Cyc {
        p.terms.get(&a_ix).cloned().unwrap_or_else(|| Cyc::zero(&self.a.p.ctx))
    }

    /// p_{γ,α} p_{η,β} = δ_{α,[η+β]} (γ+η ch η) q^(−γ*η) p_{γ+η,β};
    /// the transpose of A's coproduct.
    pub fn product_monomial(&self, i: Ix, j: Ix) -> Option<(Ix, Cyc)> {
        let p = &self.a.p;
        let (g1, a1) = self.expos(i);
        let (g2, a2) = self.expos(j);
        let g = expo_add(&g1, &g2);
        if !expo_le(&g, &p.kappa()) {
            return None;
        }
        if a1 != p.reduce(&expo_add(&g2, &a2)) {
            return None;
        }
        let b = p.gauss_binom_multi(&g, &g2);
        if b.is_zero() {
            return None;
        }
        Some((self.ix(&g, &a2), b.mul_q_pow(-p.star(&g1, &g2))))
    }

    /// The group-like 𝕜(α) = Σ_ω q^⟨α,ω⟩ p_{0,ω}.
    pub fn k_elem(&self, alpha: &[i64]) -> Elem {
        let p = &self.a.p;
        let mut e = Elem::zero();
        for w in p.all_expos() {
            e.add_term(self.ix(&p.zero_expo(), &w), p.q_pow(p.dot(alpha, &w)));
        }
        e
    }

    /// 𝕜̃(β) = 𝕜([β̃]).
    pub fn k_tilde_elem(&self, beta: &[i64]) -> Elem {
        self.k_elem(&self.a.p.tilde(beta))
    }

    /// 𝕜̃(β) evaluated on x^γ K(α): δ_{γ,0} θ(α,β) q^⟨α,β⟩.
    pub fn k_tilde_eval(&self, beta: &[i64], a_ix: Ix) -> Cyc {
        let p = &self.a.p;
        let (g, a) = self.a.expos(a_ix);
        if g.iter().any(|x| *x != 0) {
            return Cyc::zero(&p.ctx);
        }
        p.q_pow(p.theta_exp(&a, beta) + p.dot(&a, beta))
    }

    /// The monomial 𝕏^γ = Σ_α p_{γ,α}.
    pub fn xx_elem(&self, gamma: &[i64]) -> Elem {
        let p = &self.a.p;
        let mut e = Elem::zero();
        for a in p.all_expos() {
            e.add_term(self.ix(gamma, &a), self.a.one());
        }
        e
    }
}

impl HopfOps for DualTaft {
    fn params(&self) -> &Params {
        &self.a.p
    }

    fn dim(&self) -> usize {
        self.a.dim
    }

    /// ε_A = Σ_α p_{0,α}.
    fn unit(&self) -> Elem {
        let p = &self.a.p;
        self.k_elem(&p.zero_expo())
    }

    fn product_basis(&self, i: Ix, j: Ix) -> Elem {
        match self.product_monomial(i, j) {
            Some((k, c)) => Elem::basis(k, c),
            None => Elem::zero(),
        }
    }

    /// The transpose of A's product: Δ*(p_{ζ,ξ}) = Σ θ(α,η) q^(⟨α,η⟩+γ*η)
    /// p_{γ,α} ⊗ p_{η,[ξ−α]} over γ+η = ζ and all α.
    fn coproduct_basis(&self, i: Ix) -> Vec<(Ix, Ix, Cyc)> {
        let p = &self.a.p;
        let (z, xi) = self.expos(i);
        let mut out = Vec::new();
        for g in p.expos_below(&z) {
            let eta = expo_sub(&z, &g);
            for alpha in p.all_expos() {
                let beta = p.reduce(&expo_sub(&xi, &alpha));
                let e = p.theta_exp(&alpha, &eta) + p.dot(&alpha, &eta) + p.star(&g, &eta);
                out.push((self.ix(&g, &alpha), self.ix(&eta, &beta), p.q_pow(e)));
            }
        }
        out
    }

    /// Evaluation at 1 ∈ A.
    fn counit_basis(&self, i: Ix) -> Cyc {
        if i == 0 {
            self.one()
        } else {
            Cyc::zero(&self.a.p.ctx)
        }
    }

    /// S(p_{γ,α}) = c_s(γ, β₀) p_{γ,β₀} with β₀ = [−γ−α]; the transpose of
    /// A's antipode.
    fn antipode_basis(&self, i: Ix) -> Elem {
        let p = &self.a.p;
        let (g, a) = self.expos(i);
        let b0 = p.reduce(&expo_neg(&expo_add(&g, &a)));
        let src = self.a.ix(&g, &b0);
        let (dst, c) = self.a.antipode_monomial(src);
        debug_assert_eq!(dst, i);
        Elem::basis(self.ix(&g, &b0), c)
    }

    fn label(&self, i: Ix) -> String {
        let (g, a) = self.expos(i);
        fmt_monomial("X", "h", &g, &a)
    }
}

impl DualTaft {
    /// S⁻¹(p_{γ,α}) = c_s(γ,α)⁻¹ p_{γ,[−γ−α]}.
    pub fn antipode_inv_monomial(&self, i: Ix) -> (Ix, Cyc) {
        let p = &self.a.p;
        let (g, a) = self.expos(i);
        let b0 = p.reduce(&expo_neg(&expo_add(&g, &a)));
        let (_, c) = self.a.antipode_monomial(self.a.ix(&g, &b0));
        // c is ±q^e, so inversion is exact.
        (self.ix(&g, &b0), c.inv().expect("antipode coefficient is a unit"))
    }
}

// ---- The Drinfel'd double D(A) = (A*)^cop ⋈ A ----

pub struct Double {
    pub a: Arc<Taft>,
    pub dual: Arc<DualTaft>,
    dim: usize,
    /// Cached Δ² of every A-basis monomial (the straightening formula
    /// consults these constantly).
    triple: Vec<Vec<(Ix, Ix, Ix, Cyc)>>,
    memo: DashMap<(Ix, Ix), Arc<Elem>>,
}

pub fn build_double(a: &Arc<Taft>) -> Arc<Double> {
    let dual = build_dual(a);
    let triple = (0..a.dim() as Ix).map(|i| a.triple_coproduct(i)).collect();
    Arc::new(Double {
        a: a.clone(),
        dual,
        dim: a.dim() * a.dim(),
        triple,
        memo: DashMap::new(),
    })
}

impl Double {
    pub fn ix(&self, dual_ix: Ix, a_ix: Ix) -> Ix {
        dual_ix * self.a.dim() as Ix + a_ix
    }

    pub fn split(&self, i: Ix) -> (Ix, Ix) {
        let d = self.a.dim() as Ix;
        (i / d, i % d)
    }

    /// Embedding A → D, h ↦ ε ⊗ h.
    pub fn embed_a(&self, h: &Elem) -> Elem {
        let eps = self.dual.unit();
        let mut out = Elem::zero();
        for (i, c) in &h.terms {
            for (j, d) in &eps.terms {
                out.add_term(self.ix(*j, *i), c * d);
            }
        }
        out
    }

    /// Embedding A* → D, p ↦ p ⊗ 1.
    pub fn embed_dual(&self, p: &Elem) -> Elem {
        let mut out = Elem::zero();
        for (i, c) in &p.terms {
            out.add_term(self.ix(*i, 0), c.clone());
        }
        out
    }

    /// (p ⊗ h)(p' ⊗ h') = p (h₁ ⇀ p' ↼ s⁻¹(h₃)) ⊗ h₂ h', expanded through
    /// the cached Δ² of the A-part. Each sandwiched functional is supported
    /// on a single dual basis vector, so the result has at most one term
    /// per Δ² term.
    fn product_uncached(&self, i: Ix, j: Ix) -> Elem {
        let p = &self.a.p;
        let (pd, ha) = self.split(i);
        let (qd, ka) = self.split(j);
        let (gq, aq) = self.dual.expos(qd);
        let mut out = Elem::zero();
        for (h1, h2, h3, c123) in &self.triple[ha as usize] {
            // m3 = s⁻¹(h3), a single monomial
            let (m3, c3) = self.a.antipode_inv_monomial(*h3);
            let (g3, a3) = self.a.expos(m3);
            let (g1, a1) = self.a.expos(*h1);
            // solve m3 · y · h1 ∝ x^{γ'} K(α') for the basis monomial y
            let zeta = expo_sub(&expo_sub(&gq, &g3), &g1);
            if zeta.iter().any(|x| *x < 0) {
                continue;
            }
            let w = p.reduce(&expo_sub(&expo_sub(&aq, &a3), &a1));
            // coefficient of x^{γ'} K(α') in m3 · y · h1
            let mid_k = expo_add(&a3, &w);
            let sandwich = p.theta_exp(&a3, &zeta)
                + p.dot(&a3, &zeta)
                + p.star(&g3, &zeta)
                + p.theta_exp(&mid_k, &g1)
                + p.dot(&mid_k, &g1)
                + p.star(&expo_add(&g3, &zeta), &g1);
            // p · p_{ζ,w} in the dual
            let Some((pk, pc)) = self.dual.product_monomial(pd, self.dual.ix(&zeta, &w)) else {
                continue;
            };
            // h₂ h'
            let Some((hk, hc)) = self.a.product_monomial(*h2, ka) else {
                continue;
            };
            let coeff = &(&(&(c123 * &c3).mul_q_pow(sandwich) * &pc)) * &hc;
            out.add_term(self.ix(pk, hk), coeff);
        }
        out
    }
}

impl HopfOps for Double {
    fn params(&self) -> &Params {
        &self.a.p
    }

    fn dim(&self) -> usize {
        self.dim
    }

    /// ε ⊗ 1.
    fn unit(&self) -> Elem {
        self.embed_a(&self.a.unit())
    }

    fn product_basis(&self, i: Ix, j: Ix) -> Elem {
        if self.dim <= MEMO_DIM_LIMIT {
            if let Some(e) = self.memo.get(&(i, j)) {
                return (**e).clone();
            }
            let e = Arc::new(self.product_uncached(i, j));
            self.memo.insert((i, j), e.clone());
            (*e).clone()
        } else {
            self.product_uncached(i, j)
        }
    }

    /// Δ_D(p ⊗ h) = Σ (p₂ ⊗ h₁) ⊗ (p₁ ⊗ h₂): the coproduct of (A*)^cop ⊗ A.
    fn coproduct_basis(&self, i: Ix) -> Vec<(Ix, Ix, Cyc)> {
        let (pd, ha) = self.split(i);
        let dps = self.dual.coproduct_basis(pd);
        let aps = self.a.coproduct_basis(ha);
        let mut out = Vec::with_capacity(dps.len() * aps.len());
        for (p1, p2, cp) in &dps {
            for (h1, h2, ch) in &aps {
                out.push((self.ix(*p2, *h1), self.ix(*p1, *h2), cp * ch));
            }
        }
        out
    }

    fn counit_basis(&self, i: Ix) -> Cyc {
        let (pd, ha) = self.split(i);
        &self.dual.counit_basis(pd) * &self.a.counit_basis(ha)
    }

    /// s_D(p ⊗ h) = (ε ⊗ s(h)) · (S⁻¹(p) ⊗ 1).
    fn antipode_basis(&self, i: Ix) -> Elem {
        let (pd, ha) = self.split(i);
        let (sk, sc) = self.a.antipode_monomial(ha);
        let left = self.embed_a(&Elem::basis(sk, sc));
        let (pk, pc) = self.dual.antipode_inv_monomial(pd);
        let right = Elem::basis(self.ix(pk, 0), pc);
        crate::elem::mul(self, &left, &right)
    }

    fn label(&self, i: Ix) -> String {
        let (pd, ha) = self.split(i);
        format!("{} (x) {}", self.dual.label(pd), self.a.label(ha))
    }
}

// ---- The n-fold tensor power of the rank-1 Taft algebra ----

pub struct TensorTaft {
    p: Params,
    dim: usize,
}

pub fn build_tensor_taft(n: usize, ell: u32) -> Arc<TensorTaft> {
    let p = Params::new(n, ell);
    let dim = (ell as usize).pow(2 * n as u32);
    Arc::new(TensorTaft { p, dim })
}

impl TensorTaft {
    pub fn ix(&self, gamma: &[i64], alpha: &[i64]) -> Ix {
        let half = (self.p.ell as usize).pow(self.p.n as u32);
        (self.p.expo_index(gamma) * half + self.p.expo_index(alpha)) as Ix
    }

    pub fn expos(&self, i: Ix) -> (Expo, Expo) {
        let half = (self.p.ell as usize).pow(self.p.n as u32);
        (self.p.expo_from_index(i as usize / half), self.p.expo_from_index(i as usize % half))
    }

    /// Componentwise rank-1 products: coefficient q^⟨α,η⟩, no cross factors.
    pub fn product_monomial(&self, i: Ix, j: Ix) -> Option<(Ix, Cyc)> {
        let p = &self.p;
        let (g1, a1) = self.expos(i);
        let (g2, a2) = self.expos(j);
        let g = expo_add(&g1, &g2);
        if !expo_le(&g, &p.kappa()) {
            return None;
        }
        Some((self.ix(&g, &p.reduce(&expo_add(&a1, &a2))), p.q_pow(p.dot(&a1, &g2))))
    }

    pub fn triple_coproduct(&self, i: Ix) -> Vec<(Ix, Ix, Ix, Cyc)> {
        let p = &self.p;
        let (eta, xi) = self.expos(i);
        let mut out = Vec::new();
        for nu in p.expos_below(&eta) {
            let rest = expo_sub(&eta, &nu);
            let b1 = p.gauss_binom_multi(&eta, &nu);
            for rho in p.expos_below(&rest) {
                let b2 = p.gauss_binom_multi(&rest, &rho);
                let g1 = expo_sub(&rest, &rho);
                let c = &b1 * &b2;
                if c.is_zero() {
                    continue;
                }
                out.push((
                    self.ix(&g1, &p.reduce(&expo_add(&expo_add(&rho, &nu), &xi))),
                    self.ix(&rho, &p.reduce(&expo_add(&nu, &xi))),
                    self.ix(&nu, &xi),
                    c,
                ));
            }
        }
        out
    }
}

impl HopfOps for TensorTaft {
    fn params(&self) -> &Params {
        &self.p
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn unit(&self) -> Elem {
        Elem::basis(0, self.one())
    }

    fn product_basis(&self, i: Ix, j: Ix) -> Elem {
        match self.product_monomial(i, j) {
            Some((k, c)) => Elem::basis(k, c),
            None => Elem::zero(),
        }
    }

    /// Tensor product of n rank-1 coproducts: no star-form corrections.
    fn coproduct_basis(&self, i: Ix) -> Vec<(Ix, Ix, Cyc)> {
        let p = &self.p;
        let (g, a) = self.expos(i);
        let mut out = Vec::new();
        for xi in p.expos_below(&g) {
            let b = p.gauss_binom_multi(&g, &xi);
            if b.is_zero() {
                continue;
            }
            let left_g = expo_sub(&g, &xi);
            out.push((self.ix(&left_g, &p.reduce(&expo_add(&xi, &a))), self.ix(&xi, &a), b));
        }
        out
    }

    fn counit_basis(&self, i: Ix) -> Cyc {
        let (g, _) = self.expos(i);
        if g.iter().all(|x| *x == 0) {
            self.one()
        } else {
            Cyc::zero(&self.p.ctx)
        }
    }

    /// Componentwise rank-1 antipodes.
    fn antipode_basis(&self, i: Ix) -> Elem {
        let p = &self.p;
        let (g, a) = self.expos(i);
        let mut e: i64 = 0;
        for k in 0..p.n {
            e += -(g[k] * (g[k] + 1)) / 2 - g[k] * a[k];
        }
        let c = p.q_pow(e);
        let c = if p.weight(&g) % 2 == 0 { c } else { -&c };
        Elem::basis(self.ix(&g, &p.reduce(&expo_neg(&expo_add(&g, &a)))), c)
    }

    fn label(&self, i: Ix) -> String {
        let (g, a) = self.expos(i);
        fmt_monomial("x", "K", &g, &a)
    }
}
