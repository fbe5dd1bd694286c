//! The canonical quasitriangular and ribbon data of the double: the
//! universal R-matrix on dual bases, the Drinfel'd element u, the grouplike
//! h = u⁻¹s(u), integrals and distinguished group-likes, and the ribbon
//! element v (odd ℓ only).

use taftlink_core::cyclotomic::Cyc;

use crate::algebra::{Double, HopfError, HopfOps, Taft};
use crate::elem::{mul, mul2, Elem, Elem2, Elem3, Ix};
use crate::expo::expo_neg;

/// 𝓡 = Σ_i (ε ⊗ h_i) ⊗ (h^i ⊗ 1), kept in pair form: the i-th summand is
/// determined by the A-basis index (h_i runs over x^γ K(α), h^i over the
/// dual basis with the same index).
pub struct UniversalR<'d> {
    pub d: &'d Double,
}

impl<'d> UniversalR<'d> {
    pub fn new(d: &'d Double) -> Self {
        UniversalR { d }
    }

    /// Number of summands (= dim A).
    pub fn len(&self) -> usize {
        self.d.a.dim()
    }

    /// ε ⊗ h_i as a double element.
    pub fn left(&self, i: Ix) -> Elem {
        self.d.embed_a(&Elem::basis(i, self.d.one()))
    }

    /// h^i ⊗ 1 as a double element (a single basis vector).
    pub fn right(&self, i: Ix) -> Elem {
        Elem::basis(self.d.ix(i, 0), self.d.one())
    }

    /// ε ⊗ s(h_i), the left slot of 𝓡⁻¹.
    pub fn left_inv(&self, i: Ix) -> Elem {
        let (k, c) = self.d.a.antipode_monomial(i);
        self.d.embed_a(&Elem::basis(k, c))
    }

    /// 𝓡 as an explicit element of D ⊗ D.
    pub fn as_elem2(&self) -> Elem2 {
        let mut out = Elem2::zero();
        for i in 0..self.len() as Ix {
            let l = self.left(i);
            for (li, lc) in &l.terms {
                out.add_term(*li, self.d.ix(i, 0), lc.clone());
            }
        }
        out
    }

    pub fn inv_as_elem2(&self) -> Elem2 {
        let mut out = Elem2::zero();
        for i in 0..self.len() as Ix {
            let l = self.left_inv(i);
            for (li, lc) in &l.terms {
                out.add_term(*li, self.d.ix(i, 0), lc.clone());
            }
        }
        out
    }

    /// 𝓡^{21} = τ(𝓡).
    pub fn flipped_as_elem2(&self) -> Elem2 {
        self.as_elem2().flip()
    }

    /// 𝓡 · x for x ∈ D ⊗ D, using the pair structure (slot 2 products with
    /// h^i ⊗ 1 never straighten, so this stays sparse).
    pub fn mul_left_into(&self, x: &Elem2) -> Elem2 {
        let d = self.d;
        let mut out = Elem2::zero();
        for i in 0..self.len() as Ix {
            let l = self.left(i);
            let r = self.right(i);
            for ((x1, x2), xc) in &x.terms {
                let p1 = mul(d, &l, &Elem::basis(*x1, d.one()));
                if p1.is_zero() {
                    continue;
                }
                let p2 = mul(d, &r, &Elem::basis(*x2, d.one()));
                if p2.is_zero() {
                    continue;
                }
                for (k1, c1) in &p1.terms {
                    let cc = xc * c1;
                    for (k2, c2) in &p2.terms {
                        out.add_term(*k1, *k2, &cc * c2);
                    }
                }
            }
        }
        out
    }

    /// τ(𝓡) · x.
    pub fn mul_left_flipped_into(&self, x: &Elem2) -> Elem2 {
        let d = self.d;
        let mut out = Elem2::zero();
        for i in 0..self.len() as Ix {
            let l = self.left(i);
            let r = self.right(i);
            for ((x1, x2), xc) in &x.terms {
                let p1 = mul(d, &r, &Elem::basis(*x1, d.one()));
                if p1.is_zero() {
                    continue;
                }
                let p2 = mul(d, &l, &Elem::basis(*x2, d.one()));
                if p2.is_zero() {
                    continue;
                }
                for (k1, c1) in &p1.terms {
                    let cc = xc * c1;
                    for (k2, c2) in &p2.terms {
                        out.add_term(*k1, *k2, &cc * c2);
                    }
                }
            }
        }
        out
    }
}

/// Place a two-slot tensor into slots (s1, s2) of a three-slot tensor.
fn embed3(r: &Elem2, s1: usize, s2: usize, unit_ix: Ix, one: &Cyc) -> Elem3 {
    let mut out = Elem3::zero();
    for ((a, b), c) in &r.terms {
        let mut slots = [unit_ix; 3];
        slots[s1] = *a;
        slots[s2] = *b;
        out.add_term(slots[0], slots[1], slots[2], c * one);
    }
    out
}

/// 𝓡^{s1 s2} ∈ D⊗D⊗D with the unit (which is a sum of basis vectors for
/// the double) expanded in the remaining slot.
pub fn r_in_three_slots(d: &Double, r2: &Elem2, s1: usize, s2: usize) -> Elem3 {
    let unit = d.unit();
    let mut out = Elem3::zero();
    for (u, uc) in &unit.terms {
        let part = embed3(r2, s1, s2, *u, uc);
        for ((i, j, k), c) in part.terms {
            out.add_term(i, j, k, c);
        }
    }
    out
}

/// u = Σ_i h^i ⊗ s⁻¹(h_i): dim A pure-tensor terms in the double basis.
pub fn drinfeld_u(d: &Double) -> Elem {
    let mut out = Elem::zero();
    for i in 0..d.a.dim() as Ix {
        let (k, c) = d.a.antipode_inv_monomial(i);
        out.add_term(d.ix(i, k), c);
    }
    out
}

/// u⁻¹ = Σ_i h^i ⊗ s²(h_i); s² scales each monomial by q^(−|γ|).
pub fn drinfeld_u_inv(d: &Double) -> Elem {
    let p = d.a.params();
    let mut out = Elem::zero();
    for i in 0..d.a.dim() as Ix {
        let (g, _) = d.a.expos(i);
        out.add_term(d.ix(i, i), p.q_pow(-p.weight(&g)));
    }
    out
}

/// h = u⁻¹ s(u) = (𝕜̃(𝟏) ⊗ K(κ))⁻¹ = 𝕜̃(−𝟏) ⊗ K(−κ), as a double element.
pub fn h_element(d: &Double) -> Elem {
    let p = d.a.params();
    let k = d.dual.k_tilde_elem(&expo_neg(&p.ones()));
    let a_ix = d.a.ix(&p.zero_expo(), &p.reduce(&expo_neg(&p.kappa())));
    let mut out = Elem::zero();
    for (i, c) in &k.terms {
        out.add_term(d.ix(*i, a_ix), c.clone());
    }
    out
}

/// Output of [`integrals`].
pub struct Integrals {
    /// A left integral Γ of A.
    pub gamma: Elem,
    /// A right integral λ of A*.
    pub lambda: Elem,
    /// The distinguished group-like of A, K(κ).
    pub dist_grouplike_a: Ix,
    /// The distinguished group-like of A*, 𝕜̃(𝟏), expanded on the dual basis.
    pub dist_grouplike_dual: Elem,
}

/// Γ = x^κ Σ_α θ(α,κ) q^⟨α,κ⟩ K(α) and λ = 𝕏^κ Σ_α 𝕜(α) = ℓⁿ 𝕏^κ 𝕙(0).
pub fn integrals(a: &std::sync::Arc<Taft>) -> Integrals {
    let p = a.params();
    let kappa = p.kappa();
    let mut gamma = Elem::zero();
    for alpha in p.all_expos() {
        let e = p.theta_exp(&alpha, &kappa) + p.dot(&alpha, &kappa);
        gamma.add_term(a.ix(&kappa, &alpha), p.q_pow(e));
    }
    let scale = Cyc::from_int(&p.ctx, (p.ell as i64).pow(p.n as u32));
    let lambda = Elem::basis(a.ix(&kappa, &p.zero_expo()), scale);
    let dual = crate::algebra::build_dual(a);
    Integrals {
        gamma,
        lambda,
        dist_grouplike_a: a.ix(&p.zero_expo(), &kappa),
        dist_grouplike_dual: dual.k_tilde_elem(&p.ones()),
    }
}

/// The ribbon element v = u · (𝕜̃(κ/2) ⊗ K((ι+𝟏)/2)), which exists iff ℓ is
/// odd. For even ℓ the required group-like square roots do not exist —
/// this is verified by enumeration rather than assumed.
pub fn ribbon_element(d: &Double) -> Result<Elem, HopfError> {
    let p = d.a.params();
    let ell = p.ell as i64;
    // Need α₀, β₀ in [0,ℓ)ⁿ with 2α₀ ≡ κ and 2β₀ ≡ 𝟏̃ (componentwise mod ℓ).
    let two_inv_exists = (0..ell).any(|x| (2 * x).rem_euclid(ell) == ell - 1);
    if !two_inv_exists {
        return Err(HopfError::NotRibbon(p.ell));
    }
    debug_assert!(p.ell % 2 == 1);
    let i0 = (ell + 1) / 2;
    // κ/2 = (i₀−1)·𝟏 and (ι+𝟏)/2 = i₀·𝟏 mod ℓ.
    let half_kappa: Vec<i64> = vec![i0 - 1; p.n];
    let half_iota_one: Vec<i64> = vec![i0; p.n];
    let k_part = d.dual.k_tilde_elem(&half_kappa);
    let a_ix = d.a.ix(&p.zero_expo(), &half_iota_one);
    let mut g = Elem::zero();
    for (i, c) in &k_part.terms {
        g.add_term(d.ix(*i, a_ix), c.clone());
    }
    let u = drinfeld_u(d);
    Ok(mul(d, &u, &g))
}

/// One named check with an optional counterexample witness.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub witness: Option<String>,
}

impl Check {
    pub fn ok(name: &str) -> Self {
        Check { name: name.into(), pass: true, witness: None }
    }

    pub fn fail(name: &str, witness: String) -> Self {
        Check { name: name.into(), pass: false, witness: Some(witness) }
    }

    pub fn from_failures(name: &str, failures: Vec<String>) -> Self {
        if failures.is_empty() {
            Check::ok(name)
        } else {
            Check::fail(name, failures.join("; "))
        }
    }
}

/// Quasitriangularity of (D, 𝓡): the almost-cocommutativity identity on
/// every basis element, both hexagons, QYBE, and 𝓡𝓡⁻¹ = 1⊗1.
pub fn quasitriangular_checks(d: &Double) -> Vec<Check> {
    let r = UniversalR::new(d);
    let r2 = r.as_elem2();
    let rinv2 = r.inv_as_elem2();
    let mut out = Vec::new();

    // 𝓡 𝓡⁻¹ = 1 ⊗ 1
    let unit2 = {
        let u = d.unit();
        Elem2::from_pair(&u, &u)
    };
    let prod = mul2(d, &r2, &rinv2);
    out.push(if prod == unit2 {
        Check::ok("R * R^-1 = 1 (x) 1")
    } else {
        Check::fail("R * R^-1 = 1 (x) 1", format!("{} stray terms", prod.sub(&unit2).terms.len()))
    });

    // τΔ(h) 𝓡 = 𝓡 Δ(h) on all basis h of D
    let fails = taftlink_core::par::failing_indices(d.dim(), |i| {
        let dh = crate::elem::coproduct(d, &Elem::basis(i as Ix, d.one()));
        let lhs = mul2(d, &dh.flip(), &r2);
        let rhs = r.mul_left_into(&dh);
        lhs == rhs
    });
    out.push(Check::from_failures(
        "tau Delta(h) R = R Delta(h)",
        fails.iter().take(3).map(|i| d.label(*i as Ix)).collect(),
    ));

    // (Δ ⊗ id)𝓡 = 𝓡¹³ 𝓡²³ and (id ⊗ Δ)𝓡 = 𝓡¹³ 𝓡¹².
    let r13 = r_in_three_slots(d, &r2, 0, 2);
    let r23 = r_in_three_slots(d, &r2, 1, 2);
    let r12 = r_in_three_slots(d, &r2, 0, 1);
    let mut hex1 = Elem3::zero();
    let mut hex2 = Elem3::zero();
    for ((i, j), c) in &r2.terms {
        for (l, rr, cc) in d.coproduct_basis(*i) {
            hex1.add_term(l, rr, *j, &cc * c);
        }
        for (l, rr, cc) in d.coproduct_basis(*j) {
            hex2.add_term(*i, l, rr, &cc * c);
        }
    }
    let rhs1 = crate::elem::mul3(d, &r13, &r23);
    out.push(if hex1 == rhs1 {
        Check::ok("(Delta (x) id) R = R13 R23")
    } else {
        Check::fail("(Delta (x) id) R = R13 R23", format!("{} stray terms", hex1.sub(&rhs1).terms.len()))
    });
    let rhs2 = crate::elem::mul3(d, &r13, &r12);
    out.push(if hex2 == rhs2 {
        Check::ok("(id (x) Delta) R = R13 R12")
    } else {
        Check::fail("(id (x) Delta) R = R13 R12", format!("{} stray terms", hex2.sub(&rhs2).terms.len()))
    });

    // QYBE: R12 R13 R23 = R23 R13 R12
    let lhs = crate::elem::mul3(d, &crate::elem::mul3(d, &r12, &r13), &r23);
    let rhs = crate::elem::mul3(d, &crate::elem::mul3(d, &r23, &r13), &r12);
    out.push(if lhs == rhs {
        Check::ok("QYBE R12 R13 R23 = R23 R13 R12")
    } else {
        Check::fail("QYBE R12 R13 R23 = R23 R13 R12", format!("{} stray terms", lhs.sub(&rhs).terms.len()))
    });

    out
}

/// Drinfel'd element checks: u u⁻¹ = 1, s²(x) = u x u⁻¹ on all basis x,
/// and h = u⁻¹ s(u) against its group-like closed form.
pub fn drinfeld_checks(d: &Double) -> Vec<Check> {
    let u = drinfeld_u(d);
    let uinv = drinfeld_u_inv(d);
    let mut out = Vec::new();

    let prod = mul(d, &u, &uinv);
    out.push(if prod == d.unit() {
        Check::ok("u * u^-1 = 1")
    } else {
        Check::fail("u * u^-1 = 1", format!("{} stray terms", prod.sub(&d.unit()).terms.len()))
    });

    let fails = taftlink_core::par::failing_indices(d.dim(), |i| {
        let x = Elem::basis(i as Ix, d.one());
        let s2 = crate::elem::antipode(d, &crate::elem::antipode(d, &x));
        let conj = mul(d, &mul(d, &u, &x), &uinv);
        s2 == conj
    });
    out.push(Check::from_failures(
        "s^2(x) = u x u^-1",
        fails.iter().take(3).map(|i| d.label(*i as Ix)).collect(),
    ));

    let h = h_element(d);
    let su = crate::elem::antipode(d, &u);
    let h_from_u = mul(d, &uinv, &su);
    out.push(if h == h_from_u {
        Check::ok("u^-1 s(u) = inverse distinguished group-like")
    } else {
        Check::fail("u^-1 s(u) = inverse distinguished group-like", format!("{} stray terms", h.sub(&h_from_u).terms.len()))
    });

    out
}

/// Integral checks on A and A*: the defining identities of Γ, λ and the
/// distinguished group-likes, on every basis element.
pub fn integral_checks(a: &std::sync::Arc<Taft>) -> Vec<Check> {
    let ints = integrals(a);
    let dual = crate::algebra::build_dual(a);
    let p = a.params();
    let mut out = Vec::new();

    // h Γ = ε(h) Γ
    let fails = taftlink_core::par::failing_indices(a.dim(), |i| {
        let lhs = mul(&**a, &Elem::basis(i as Ix, a.one()), &ints.gamma);
        let rhs = ints.gamma.scale(&a.counit_basis(i as Ix));
        lhs == rhs
    });
    out.push(Check::from_failures(
        "h Gamma = eps(h) Gamma",
        fails.iter().take(3).map(|i| a.label(*i as Ix)).collect(),
    ));

    // Γ h = 𝕜̃(𝟏)(h) Γ
    let fails = taftlink_core::par::failing_indices(a.dim(), |i| {
        let lhs = mul(&**a, &ints.gamma, &Elem::basis(i as Ix, a.one()));
        let rhs = ints.gamma.scale(&dual.k_tilde_eval(&p.ones(), i as Ix));
        lhs == rhs
    });
    out.push(Check::from_failures(
        "Gamma h = ktilde(1)(h) Gamma",
        fails.iter().take(3).map(|i| a.label(*i as Ix)).collect(),
    ));

    // λ p = ε*(p) λ (right integral of A*)
    let fails = taftlink_core::par::failing_indices(a.dim(), |i| {
        let lhs = mul(&*dual, &ints.lambda, &Elem::basis(i as Ix, a.one()));
        let rhs = ints.lambda.scale(&dual.counit_basis(i as Ix));
        lhs == rhs
    });
    out.push(Check::from_failures(
        "lambda p = eps(p) lambda",
        fails.iter().take(3).map(|i| dual.label(*i as Ix)).collect(),
    ));

    // p λ = p(K(κ)) λ (distinguished group-like of A is K(κ))
    let fails = taftlink_core::par::failing_indices(a.dim(), |i| {
        let lhs = mul(&*dual, &Elem::basis(i as Ix, a.one()), &ints.lambda);
        let rhs = ints.lambda.scale(&dual.eval_basis(i as Ix, ints.dist_grouplike_a));
        lhs == rhs
    });
    out.push(Check::from_failures(
        "p lambda = p(K(kappa)) lambda",
        fails.iter().take(3).map(|i| dual.label(*i as Ix)).collect(),
    ));

    out
}

/// Ribbon checks: v central (against every basis element), s(v) = v,
/// ε(v) = 1, v² = u s(u), and Δ(v) = (𝓡²¹𝓡)⁻¹ (v ⊗ v), the last verified
/// in the multiplied-out form 𝓡²¹ (𝓡 Δ(v)) = v ⊗ v.
pub fn ribbon_checks(d: &Double) -> Result<Vec<Check>, HopfError> {
    let v = ribbon_element(d)?;
    let u = drinfeld_u(d);
    let r = UniversalR::new(d);
    let mut out = Vec::new();

    let fails = taftlink_core::par::failing_indices(d.dim(), |i| {
        let x = Elem::basis(i as Ix, d.one());
        mul(d, &v, &x) == mul(d, &x, &v)
    });
    out.push(Check::from_failures(
        "v central",
        fails.iter().take(3).map(|i| d.label(*i as Ix)).collect(),
    ));

    let sv = crate::elem::antipode(d, &v);
    out.push(if sv == v {
        Check::ok("s(v) = v")
    } else {
        Check::fail("s(v) = v", format!("{} stray terms", sv.sub(&v).terms.len()))
    });

    let ev = crate::elem::counit(d, &v);
    out.push(if ev == d.one() {
        Check::ok("eps(v) = 1")
    } else {
        Check::fail("eps(v) = 1", format!("eps(v) = {ev}"))
    });

    let v2 = mul(d, &v, &v);
    let usu = mul(d, &u, &crate::elem::antipode(d, &u));
    out.push(if v2 == usu {
        Check::ok("v^2 = u s(u)")
    } else {
        Check::fail("v^2 = u s(u)", format!("{} stray terms", v2.sub(&usu).terms.len()))
    });

    let dv = crate::elem::coproduct(d, &v);
    let lhs = r.mul_left_flipped_into(&r.mul_left_into(&dv));
    let vv = Elem2::from_pair(&v, &v);
    out.push(if lhs == vv {
        Check::ok("R21 R Delta(v) = v (x) v")
    } else {
        Check::fail("R21 R Delta(v) = v (x) v", format!("{} stray terms", lhs.sub(&vv).terms.len()))
    });

    Ok(out)
}
