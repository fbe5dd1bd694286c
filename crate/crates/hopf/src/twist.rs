//! The 2-cocycle twist comparison: the n-rank Taft algebra is the twist of
//! the n-fold tensor power of rank-1 Taft algebras by the group-supported
//! cocycle σ(K(α), K(β)) = q^(−β*α).
//!
//! The comparison map φ sends the monomial x^γ K(α) to the twisted product
//! of its generators in normal order, x₁ ·σ … ·σ x_n ·σ K(α); it rescales
//! each basis vector by a q-power. The checks verify the cocycle identities,
//! the relations of the n-rank algebra under ·σ, that φ intertwines the two
//! product tables, and that the coproducts agree through φ.

use taftlink_core::cyclotomic::Cyc;
use taftlink_core::par;

use crate::algebra::{build_taft, build_tensor_taft, HopfOps, TensorTaft};
use crate::elem::{Elem, Ix};
use crate::expo::{expo_add, Params};
use crate::rmat::Check;

/// σ on basis monomials: supported on the group-like span.
fn sigma(p: &Params, t: &TensorTaft, i: Ix, j: Ix) -> Cyc {
    let (g1, a1) = t.expos(i);
    let (g2, a2) = t.expos(j);
    if g1.iter().any(|x| *x != 0) || g2.iter().any(|x| *x != 0) {
        return Cyc::zero(&p.ctx);
    }
    p.q_pow(-p.star(&a2, &a1))
}

fn sigma_inv(p: &Params, t: &TensorTaft, i: Ix, j: Ix) -> Cyc {
    let (g1, a1) = t.expos(i);
    let (g2, a2) = t.expos(j);
    if g1.iter().any(|x| *x != 0) || g2.iter().any(|x| *x != 0) {
        return Cyc::zero(&p.ctx);
    }
    p.q_pow(p.star(&a2, &a1))
}

/// a ·σ b = σ(a₁,b₁) a₂b₂ σ⁻¹(a₃,b₃), expanded through Δ² of both sides.
pub fn twisted_product(t: &TensorTaft, a: &Elem, b: &Elem) -> Elem {
    let p = t.params();
    let mut out = Elem::zero();
    for (ia, ca) in &a.terms {
        for (ib, cb) in &b.terms {
            let c0 = ca * cb;
            for (a1, a2, a3, cda) in t.triple_coproduct(*ia) {
                for (b1, b2, b3, cdb) in t.triple_coproduct(*ib) {
                    let s1 = sigma(p, t, a1, b1);
                    if s1.is_zero() {
                        continue;
                    }
                    let s3 = sigma_inv(p, t, a3, b3);
                    if s3.is_zero() {
                        continue;
                    }
                    let Some((k, cm)) = t.product_monomial(a2, b2) else {
                        continue;
                    };
                    out.add_term(k, &(&(&(&c0 * &cda) * &cdb) * &(&s1 * &s3)) * &cm);
                }
            }
        }
    }
    out
}

/// Closed form of the twisted product on basis monomials (the triple
/// coproducts collapse because σ vanishes off the group-like span):
/// coefficient q^(−(η+β)*(γ+α) + ⟨α,η⟩ + β*α) on x^(γ+η) K(α+β).
fn twisted_product_monomial(t: &TensorTaft, i: Ix, j: Ix) -> Option<(Ix, Cyc)> {
    let p = t.params();
    let (g1, a1) = t.expos(i);
    let (g2, a2) = t.expos(j);
    let g = expo_add(&g1, &g2);
    if !crate::expo::expo_le(&g, &p.kappa()) {
        return None;
    }
    let e = -p.star(&expo_add(&g2, &a2), &expo_add(&g1, &a1)) + p.dot(&a1, &g2) + p.star(&a2, &a1);
    Some((t.ix(&g, &p.reduce(&expo_add(&a1, &a2))), p.q_pow(e)))
}

pub struct TwistReport {
    pub checks: Vec<Check>,
}

impl TwistReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub fn twist_check(n: usize, ell: u32) -> TwistReport {
    let t = build_tensor_taft(n, ell);
    let a = build_taft(n, ell).expect("twist dimensions are small");
    let p = t.params().clone();
    let mut checks = Vec::new();

    // σ normalization σ(a,1) = σ(1,a) = ε(a) on every basis monomial.
    let fails = par::failing_indices(t.dim(), |i| {
        sigma(&p, &t, i as Ix, 0) == t.counit_basis(i as Ix)
            && sigma(&p, &t, 0, i as Ix) == t.counit_basis(i as Ix)
    });
    checks.push(Check::from_failures(
        "sigma normalization",
        fails.iter().take(3).map(|i| t.label(*i as Ix)).collect(),
    ));

    // 2-cocycle identity on the group-like span:
    // σ(a₁,b₁) σ(a₂b₂,c) = σ(b₁,c₁) σ(a,b₂c₂) for group-likes a, b, c.
    let half = (ell as usize).pow(n as u32);
    let fails = par::failing_indices(half * half * half, |w| {
        let (ia, ib, ic) = (w / (half * half), (w / half) % half, w % half);
        let (ga, gb, gc) = (
            p.expo_from_index(ia),
            p.expo_from_index(ib),
            p.expo_from_index(ic),
        );
        let z = p.zero_expo();
        let (ka, kb, kc) = (t.ix(&z, &ga), t.ix(&z, &gb), t.ix(&z, &gc));
        let ab = t.ix(&z, &p.reduce(&expo_add(&ga, &gb)));
        let bc = t.ix(&z, &p.reduce(&expo_add(&gb, &gc)));
        let lhs = &sigma(&p, &t, ka, kb) * &sigma(&p, &t, ab, kc);
        let rhs = &sigma(&p, &t, kb, kc) * &sigma(&p, &t, ka, bc);
        lhs == rhs
    });
    checks.push(Check::from_failures("2-cocycle identity on group-likes", witness3(&fails)));

    // σ * σ⁻¹ = ε ⊗ ε on group-likes.
    let fails = par::failing_indices(half * half, |w| {
        let (ia, ib) = (w / half, w % half);
        let z = p.zero_expo();
        let (ka, kb) = (
            t.ix(&z, &p.expo_from_index(ia)),
            t.ix(&z, &p.expo_from_index(ib)),
        );
        &sigma(&p, &t, ka, kb) * &sigma_inv(&p, &t, ka, kb) == Cyc::one(&p.ctx)
    });
    checks.push(Check::from_failures("sigma convolution-invertible on group-likes", witness3(&fails)));

    // Closed form agrees with the Δ²-expanded twisted product.
    let fails = par::failing_indices(t.dim() * t.dim(), |w| {
        let (i, j) = ((w / t.dim()) as Ix, (w % t.dim()) as Ix);
        let generic = twisted_product(&t, &Elem::basis(i, t.one()), &Elem::basis(j, t.one()));
        match twisted_product_monomial(&t, i, j) {
            Some((k, c)) => generic == Elem::basis(k, c),
            None => generic.is_zero(),
        }
    });
    checks.push(Check::from_failures("closed form = expanded twisted product", witness3(&fails)));

    // Relations (r1)-(r4) and x_i^ell = 0 under the twisted product.
    let mut rel_fails: Vec<String> = Vec::new();
    let z = p.zero_expo();
    let one_elem = Elem::basis(t.ix(&z, &z), t.one());
    for i in 0..n {
        for j in 0..n {
            let ei = p.eps(i);
            let ej = p.eps(j);
            let kei = Elem::basis(t.ix(&z, &ei), t.one());
            let kej = Elem::basis(t.ix(&z, &ej), t.one());
            let xi = Elem::basis(t.ix(&ei, &z), t.one());
            let xj = Elem::basis(t.ix(&ej, &z), t.one());
            // (r1) K(eps_i) K(eps_j) = K(eps_i + eps_j)
            let kk = twisted_product(&t, &kei, &kej);
            let kij = Elem::basis(t.ix(&z, &p.reduce(&expo_add(&ei, &ej))), t.one());
            if kk != kij {
                rel_fails.push(format!("(r1) i={i} j={j}"));
            }
            // (r3) K(eps_i) x_j = theta(eps_i,eps_j) q^delta_ij x_j K(eps_i)
            let lhs = twisted_product(&t, &kei, &xj);
            let coeff = p.q_pow(p.theta_exp(&ei, &ej) + i64::from(i == j));
            let rhs = twisted_product(&t, &xj, &kei).scale(&coeff);
            if lhs != rhs {
                rel_fails.push(format!("(r3) i={i} j={j}"));
            }
            // (r4) x_i x_j = theta(eps_i,eps_j) x_j x_i
            let lhs = twisted_product(&t, &xi, &xj);
            let rhs = twisted_product(&t, &xj, &xi).scale(&p.theta(&ei, &ej));
            if lhs != rhs {
                rel_fails.push(format!("(r4) i={i} j={j}"));
            }
        }
        // (r2) K(eps_i)^ell = 1 and x_i^ell = 0
        let ei = p.eps(i);
        let mut kp = one_elem.clone();
        let mut xp = one_elem.clone();
        for _ in 0..ell {
            kp = twisted_product(&t, &kp, &Elem::basis(t.ix(&z, &ei), t.one()));
            xp = twisted_product(&t, &xp, &Elem::basis(t.ix(&ei, &z), t.one()));
        }
        if kp != one_elem {
            rel_fails.push(format!("(r2) i={i}"));
        }
        if !xp.is_zero() {
            rel_fails.push(format!("x_{}^ell != 0", i + 1));
        }
    }
    checks.push(Check::from_failures("(r1)-(r4), x^ell = 0 under twisted product", rel_fails));

    // φ(x^γ K(α)) = x₁^γ₁ ·σ … ·σ x_n^γ_n ·σ K(α), a q-power rescaling of
    // each basis vector.
    let phi: Vec<Elem> = par::map_indexed(t.dim(), |w| {
        let (g, al) = t.expos(w as Ix);
        let mut acc = one_elem.clone();
        for i in 0..n {
            let xi = Elem::basis(t.ix(&p.eps(i), &z), t.one());
            for _ in 0..g[i] {
                acc = twisted_product(&t, &acc, &xi);
            }
        }
        twisted_product(&t, &acc, &Elem::basis(t.ix(&z, &al), t.one()))
    });
    let diag = phi.iter().enumerate().all(|(w, e)| e.terms.len() == 1 && e.terms.contains_key(&(w as Ix)));
    checks.push(if diag {
        Check::ok("phi rescales the identified basis")
    } else {
        Check::fail("phi rescales the identified basis", "phi is not diagonal".into())
    });

    // φ intertwines the products: φ(a ·_A b) = φ(a) ·σ φ(b) on all pairs.
    let fails = par::failing_indices(t.dim() * t.dim(), |w| {
        let (i, j) = ((w / t.dim()) as Ix, (w % t.dim()) as Ix);
        let lhs = apply_phi(&phi, &a.product_basis(i, j));
        let rhs = twisted_fast(&t, &phi[i as usize], &phi[j as usize]);
        lhs == rhs
    });
    checks.push(Check::from_failures("phi is an algebra map", witness3(&fails)));

    // φ intertwines the coproducts: (φ⊗φ) Δ_A = Δ_T φ on all basis.
    let fails = par::failing_indices(t.dim(), |w| {
        let mut lhs = crate::elem::Elem2::zero();
        for (l, r, c) in a.coproduct_basis(w as Ix) {
            for (lk, lc) in &phi[l as usize].terms {
                for (rk, rc) in &phi[r as usize].terms {
                    lhs.add_term(*lk, *rk, &(&c * lc) * rc);
                }
            }
        }
        let rhs = crate::elem::coproduct(&*t, &phi[w]);
        lhs == rhs
    });
    checks.push(Check::from_failures("phi is a coalgebra map", witness3(&fails)));

    TwistReport { checks }
}

fn apply_phi(phi: &[Elem], e: &Elem) -> Elem {
    let mut out = Elem::zero();
    for (i, c) in &e.terms {
        for (k, d) in &phi[*i as usize].terms {
            out.add_term(*k, c * d);
        }
    }
    out
}

/// Twisted product through the closed form (used in the full-table scan).
fn twisted_fast(t: &TensorTaft, a: &Elem, b: &Elem) -> Elem {
    let mut out = Elem::zero();
    for (i, ca) in &a.terms {
        for (j, cb) in &b.terms {
            if let Some((k, c)) = twisted_product_monomial(t, *i, *j) {
                out.add_term(k, &(ca * cb) * &c);
            }
        }
    }
    out
}

fn witness3(fails: &[usize]) -> Vec<String> {
    fails.iter().take(3).map(|i| format!("case {i}")).collect()
}
