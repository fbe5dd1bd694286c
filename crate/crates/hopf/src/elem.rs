//! Sparse algebra elements over basis indices, plus tensor-square and
//! tensor-cube variants used by the quasitriangularity checks.

use std::collections::BTreeMap;

use taftlink_core::cyclotomic::Cyc;

use crate::algebra::HopfOps;

pub type Ix = u32;

/// A sparse linear combination of basis elements; no zero coefficient is
/// stored, so `==` is equality in the algebra.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Elem {
    pub terms: BTreeMap<Ix, Cyc>,
}

impl Elem {
    pub fn zero() -> Self {
        Elem { terms: BTreeMap::new() }
    }

    pub fn basis(i: Ix, one: Cyc) -> Self {
        let mut e = Elem::zero();
        e.add_term(i, one);
        e
    }

    pub fn add_term(&mut self, i: Ix, c: Cyc) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(i) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = &*o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &Elem) -> Elem {
        let mut out = self.clone();
        for (i, c) in &rhs.terms {
            out.add_term(*i, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Elem) -> Elem {
        let mut out = self.clone();
        for (i, c) in &rhs.terms {
            out.add_term(*i, -c);
        }
        out
    }

    pub fn scale(&self, c: &Cyc) -> Elem {
        let mut out = Elem::zero();
        for (i, a) in &self.terms {
            out.add_term(*i, a * c);
        }
        out
    }
}

/// a·b computed through the algebra's basis products.
pub fn mul<H: HopfOps + ?Sized>(h: &H, a: &Elem, b: &Elem) -> Elem {
    let mut out = Elem::zero();
    for (i, ca) in &a.terms {
        for (j, cb) in &b.terms {
            let c = ca * cb;
            for (k, ck) in h.product_basis(*i, *j).terms {
                out.add_term(k, &c * &ck);
            }
        }
    }
    out
}

/// Δ(a) as a sparse element of H⊗H.
pub fn coproduct<H: HopfOps + ?Sized>(h: &H, a: &Elem) -> Elem2 {
    let mut out = Elem2::zero();
    for (i, c) in &a.terms {
        for (l, r, d) in h.coproduct_basis(*i) {
            out.add_term(l, r, &d * c);
        }
    }
    out
}

pub fn antipode<H: HopfOps + ?Sized>(h: &H, a: &Elem) -> Elem {
    let mut out = Elem::zero();
    for (i, c) in &a.terms {
        for (k, d) in h.antipode_basis(*i).terms {
            out.add_term(k, &d * c);
        }
    }
    out
}

pub fn counit<H: HopfOps + ?Sized>(h: &H, a: &Elem) -> Cyc {
    let mut s = Cyc::zero(&h.params().ctx);
    for (i, c) in &a.terms {
        s = &s + &(&h.counit_basis(*i) * c);
    }
    s
}

/// Element of H⊗H.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Elem2 {
    pub terms: BTreeMap<(Ix, Ix), Cyc>,
}

impl Elem2 {
    pub fn zero() -> Self {
        Elem2 { terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, i: Ix, j: Ix, c: Cyc) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((i, j)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = &*o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &Elem2) -> Elem2 {
        let mut out = self.clone();
        for ((i, j), c) in &rhs.terms {
            out.add_term(*i, *j, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Elem2) -> Elem2 {
        let mut out = self.clone();
        for ((i, j), c) in &rhs.terms {
            out.add_term(*i, *j, -c);
        }
        out
    }

    /// Swap the tensor factors.
    pub fn flip(&self) -> Elem2 {
        let mut out = Elem2::zero();
        for ((i, j), c) in &self.terms {
            out.add_term(*j, *i, c.clone());
        }
        out
    }

    pub fn from_pair(a: &Elem, b: &Elem) -> Elem2 {
        let mut out = Elem2::zero();
        for (i, ca) in &a.terms {
            for (j, cb) in &b.terms {
                out.add_term(*i, *j, ca * cb);
            }
        }
        out
    }
}

/// Slotwise product in H⊗H.
pub fn mul2<H: HopfOps + ?Sized>(h: &H, a: &Elem2, b: &Elem2) -> Elem2 {
    let mut out = Elem2::zero();
    for ((i1, i2), ca) in &a.terms {
        for ((j1, j2), cb) in &b.terms {
            let c = ca * cb;
            let p1 = h.product_basis(*i1, *j1);
            if p1.is_zero() {
                continue;
            }
            let p2 = h.product_basis(*i2, *j2);
            if p2.is_zero() {
                continue;
            }
            for (k1, c1) in &p1.terms {
                let cc = &c * c1;
                for (k2, c2) in &p2.terms {
                    out.add_term(*k1, *k2, &cc * c2);
                }
            }
        }
    }
    out
}

/// Element of H⊗H⊗H.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Elem3 {
    pub terms: BTreeMap<(Ix, Ix, Ix), Cyc>,
}

impl Elem3 {
    pub fn zero() -> Self {
        Elem3 { terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, i: Ix, j: Ix, k: Ix, c: Cyc) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((i, j, k)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = &*o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sub(&self, rhs: &Elem3) -> Elem3 {
        let mut out = self.clone();
        for ((i, j, k), c) in &rhs.terms {
            out.add_term(*i, *j, *k, -c);
        }
        out
    }
}

/// Slotwise product in H⊗H⊗H.
pub fn mul3<H: HopfOps + ?Sized>(h: &H, a: &Elem3, b: &Elem3) -> Elem3 {
    let mut out = Elem3::zero();
    for ((i1, i2, i3), ca) in &a.terms {
        for ((j1, j2, j3), cb) in &b.terms {
            let c = ca * cb;
            let p1 = h.product_basis(*i1, *j1);
            if p1.is_zero() {
                continue;
            }
            let p2 = h.product_basis(*i2, *j2);
            if p2.is_zero() {
                continue;
            }
            let p3 = h.product_basis(*i3, *j3);
            if p3.is_zero() {
                continue;
            }
            for (k1, c1) in &p1.terms {
                for (k2, c2) in &p2.terms {
                    let cc = &(&c * c1) * c2;
                    for (k3, c3) in &p3.terms {
                        out.add_term(*k1, *k2, *k3, &cc * c3);
                    }
                }
            }
        }
    }
    out
}
