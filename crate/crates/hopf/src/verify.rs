//! Brute-force verification of the Hopf-algebra axioms against the
//! structure-constant tables, exhaustively for small dimensions and on
//! seeded random samples above the thresholds.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use taftlink_core::cyclotomic::Cyc;
use taftlink_core::par;

use crate::algebra::HopfOps;
use crate::elem::{coproduct, mul, mul2, Elem, Elem2, Ix};
use crate::rmat::Check;

#[derive(Clone, Copy)]
pub struct AxiomCfg {
    /// Exhaust triples when dim³ does not exceed this.
    pub max_exhaustive_triples: usize,
    /// Exhaust pairs when dim² does not exceed this.
    pub max_exhaustive_pairs: usize,
    pub sample_triples: usize,
    pub sample_pairs: usize,
    pub seed: u64,
}

impl Default for AxiomCfg {
    fn default() -> Self {
        AxiomCfg {
            max_exhaustive_triples: 700_000,
            max_exhaustive_pairs: 700_000,
            sample_triples: 10_000,
            sample_pairs: 10_000,
            seed: 0x7af7_11aa,
        }
    }
}

#[derive(Debug)]
pub struct AxiomReport {
    pub checks: Vec<Check>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn basis<H: HopfOps + ?Sized>(h: &H, i: usize) -> Elem {
    Elem::basis(i as Ix, h.one())
}

/// Check associativity on one triple of basis indices.
fn assoc_ok<H: HopfOps + ?Sized>(h: &H, i: usize, j: usize, k: usize) -> bool {
    let ab = h.product_basis(i as Ix, j as Ix);
    let bc = h.product_basis(j as Ix, k as Ix);
    mul(h, &ab, &basis(h, k)) == mul(h, &basis(h, i), &bc)
}

fn coassoc_ok<H: HopfOps + ?Sized>(h: &H, i: usize) -> bool {
    let d = h.coproduct_basis(i as Ix);
    let mut lhs = std::collections::BTreeMap::<(Ix, Ix, Ix), Cyc>::new();
    let mut rhs = lhs.clone();
    let mut add = |m: &mut std::collections::BTreeMap<(Ix, Ix, Ix), Cyc>, key: (Ix, Ix, Ix), c: Cyc| {
        let e = m.entry(key).or_insert_with(|| Cyc::zero(&h.params().ctx));
        *e = &*e + &c;
        if e.is_zero() {
            m.remove(&key);
        }
    };
    for (l, r, c) in &d {
        for (l2, r2, c2) in h.coproduct_basis(*l) {
            add(&mut lhs, (l2, r2, *r), &c2 * c);
        }
        for (l2, r2, c2) in h.coproduct_basis(*r) {
            add(&mut rhs, (*l, l2, r2), &c2 * c);
        }
    }
    lhs == rhs
}

fn counit_ok<H: HopfOps + ?Sized>(h: &H, i: usize) -> bool {
    let d = h.coproduct_basis(i as Ix);
    let mut left = Elem::zero();
    let mut right = Elem::zero();
    for (l, r, c) in &d {
        left.add_term(*r, &h.counit_basis(*l) * c);
        right.add_term(*l, &h.counit_basis(*r) * c);
    }
    left == basis(h, i) && right == basis(h, i)
}

/// m(s ⊗ id)Δ(x) = ε(x)·1 = m(id ⊗ s)Δ(x).
fn antipode_ok<H: HopfOps + ?Sized>(h: &H, i: usize) -> bool {
    let d = h.coproduct_basis(i as Ix);
    let target = h.unit().scale(&h.counit_basis(i as Ix));
    let mut lhs = Elem::zero();
    let mut rhs = Elem::zero();
    for (l, r, c) in &d {
        let sl = h.antipode_basis(*l);
        for (k, ck) in &mul(h, &sl, &basis(h, *r as usize)).terms {
            lhs.add_term(*k, ck * c);
        }
        let sr = h.antipode_basis(*r);
        for (k, ck) in &mul(h, &basis(h, *l as usize), &sr).terms {
            rhs.add_term(*k, ck * c);
        }
    }
    lhs == target && rhs == target
}

fn delta_hom_ok<H: HopfOps + ?Sized>(h: &H, i: usize, j: usize) -> bool {
    let prod = h.product_basis(i as Ix, j as Ix);
    let lhs = coproduct(h, &prod);
    let da = coproduct(h, &basis(h, i));
    let db = coproduct(h, &basis(h, j));
    let rhs = mul2(h, &da, &db);
    // counit is checked along the way: ε(ab) = ε(a)ε(b)
    let eps = crate::elem::counit(h, &prod);
    let eps2 = &h.counit_basis(i as Ix) * &h.counit_basis(j as Ix);
    lhs == rhs && eps == eps2
}

pub fn verify_hopf_axioms<H: HopfOps + ?Sized>(h: &H, cfg: &AxiomCfg) -> AxiomReport {
    let n = h.dim();
    let mut checks = Vec::new();

    // unit laws (always exhaustive)
    let one = h.unit();
    let fails = par::failing_indices(n, |i| {
        mul(h, &one, &basis(h, i)) == basis(h, i) && mul(h, &basis(h, i), &one) == basis(h, i)
    });
    checks.push(Check::from_failures("unit laws", witness(h, &fails)));

    // associativity
    if n.saturating_mul(n).saturating_mul(n) <= cfg.max_exhaustive_triples {
        let fails = par::failing_indices(n * n * n, |t| {
            let (i, j, k) = (t / (n * n), (t / n) % n, t % n);
            assoc_ok(h, i, j, k)
        });
        let w: Vec<String> = fails
            .iter()
            .take(3)
            .map(|t| {
                let (i, j, k) = (t / (n * n), (t / n) % n, t % n);
                format!("({}, {}, {})", h.label(i as Ix), h.label(j as Ix), h.label(k as Ix))
            })
            .collect();
        checks.push(Check::from_failures("associativity (exhaustive)", w));
    } else {
        let triples = sample_tuples(cfg.seed, n, 3, cfg.sample_triples);
        let fails = par::failing_indices(triples.len(), |t| {
            let s = &triples[t];
            assoc_ok(h, s[0], s[1], s[2])
        });
        let w: Vec<String> = fails
            .iter()
            .take(3)
            .map(|t| {
                let s = &triples[*t];
                format!("({}, {}, {})", h.label(s[0] as Ix), h.label(s[1] as Ix), h.label(s[2] as Ix))
            })
            .collect();
        checks.push(Check::from_failures(
            &format!("associativity (sampled, {} triples)", cfg.sample_triples),
            w,
        ));
    }

    // coassociativity + counit laws + antipode identity (per basis element)
    let fails = par::failing_indices(n, |i| coassoc_ok(h, i));
    checks.push(Check::from_failures("coassociativity", witness(h, &fails)));
    let fails = par::failing_indices(n, |i| counit_ok(h, i));
    checks.push(Check::from_failures("counit laws", witness(h, &fails)));
    let fails = par::failing_indices(n, |i| antipode_ok(h, i));
    checks.push(Check::from_failures("antipode identity", witness(h, &fails)));

    // Δ and ε are algebra maps; Δ(1) = 1 ⊗ 1
    let d1 = coproduct(h, &one);
    let unit2 = Elem2::from_pair(&one, &one);
    checks.push(if d1 == unit2 && crate::elem::counit(h, &one) == h.one() {
        Check::ok("Delta(1) = 1 (x) 1, eps(1) = 1")
    } else {
        Check::fail("Delta(1) = 1 (x) 1, eps(1) = 1", "unit image broken".into())
    });

    if n.saturating_mul(n) <= cfg.max_exhaustive_pairs {
        let fails = par::failing_indices(n * n, |t| delta_hom_ok(h, t / n, t % n));
        let w: Vec<String> = fails
            .iter()
            .take(3)
            .map(|t| format!("({}, {})", h.label((t / n) as Ix), h.label((t % n) as Ix)))
            .collect();
        checks.push(Check::from_failures("Delta, eps multiplicative (exhaustive)", w));
    } else {
        let pairs = sample_tuples(cfg.seed ^ 0x9e37_79b9, n, 2, cfg.sample_pairs);
        let fails = par::failing_indices(pairs.len(), |t| {
            let s = &pairs[t];
            delta_hom_ok(h, s[0], s[1])
        });
        let w: Vec<String> = fails
            .iter()
            .take(3)
            .map(|t| {
                let s = &pairs[*t];
                format!("({}, {})", h.label(s[0] as Ix), h.label(s[1] as Ix))
            })
            .collect();
        checks.push(Check::from_failures(
            &format!("Delta, eps multiplicative (sampled, {} pairs)", cfg.sample_pairs),
            w,
        ));
    }

    AxiomReport { checks }
}

fn witness<H: HopfOps + ?Sized>(h: &H, fails: &[usize]) -> Vec<String> {
    fails.iter().take(3).map(|i| h.label(*i as Ix)).collect()
}

fn sample_tuples(seed: u64, n: usize, arity: usize, count: usize) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| (0..arity).map(|_| rng.gen_range(0..n)).collect()).collect()
}

/// Group-like census: every candidate in the stated family is group-like,
/// the candidates are distinct, and (for algebras whose basis contains the
/// group) no other basis monomial is group-like. Returns the family size.
pub fn grouplike_count<H: HopfOps + ?Sized>(h: &H, candidates: &[Elem]) -> Result<usize, String> {
    for (idx, g) in candidates.iter().enumerate() {
        let d = coproduct(h, g);
        if d != Elem2::from_pair(g, g) {
            return Err(format!("candidate {idx} is not group-like"));
        }
        if crate::elem::counit(h, g) != h.one() {
            return Err(format!("candidate {idx} has counit != 1"));
        }
    }
    for i in 0..candidates.len() {
        for j in i + 1..candidates.len() {
            if candidates[i] == candidates[j] {
                return Err(format!("candidates {i} and {j} coincide"));
            }
        }
    }
    Ok(candidates.len())
}
