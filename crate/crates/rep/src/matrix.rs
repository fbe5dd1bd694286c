//! Sparse matrices over ℚ(ζ_ℓ) with the handful of dense routines the
//! module layer needs (Gaussian elimination, nullspaces, minimal
//! polynomials). Matrices are column-major: `col(j)` lists (row, value)
//! with rows ascending and no zero values stored.

use std::sync::Arc;

use taftlink_core::cyclotomic::{Cyc, CycCtx};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Vec<(u32, Cyc)>>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize, ctx: &Arc<CycCtx>) -> Self {
        let mut m = Mat::zero(n, n);
        for j in 0..n {
            m.data[j].push((j as u32, Cyc::one(ctx)));
        }
        m
    }

    pub fn diagonal(entries: Vec<Cyc>) -> Self {
        let n = entries.len();
        let mut m = Mat::zero(n, n);
        for (j, e) in entries.into_iter().enumerate() {
            if !e.is_zero() {
                m.data[j].push((j as u32, e));
            }
        }
        m
    }

    pub fn col(&self, j: usize) -> &[(u32, Cyc)] {
        &self.data[j]
    }

    pub fn add_entry(&mut self, r: usize, c: usize, v: Cyc) {
        if v.is_zero() {
            return;
        }
        let col = &mut self.data[c];
        match col.binary_search_by_key(&(r as u32), |e| e.0) {
            Ok(pos) => {
                let s = &col[pos].1 + &v;
                if s.is_zero() {
                    col.remove(pos);
                } else {
                    col[pos].1 = s;
                }
            }
            Err(pos) => col.insert(pos, (r as u32, v)),
        }
    }

    pub fn get(&self, r: usize, c: usize, ctx: &Arc<CycCtx>) -> Cyc {
        match self.data[c].binary_search_by_key(&(r as u32), |e| e.0) {
            Ok(pos) => self.data[c][pos].1.clone(),
            Err(_) => Cyc::zero(ctx),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_empty())
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|c| c.len()).sum()
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Mat::zero(self.rows, rhs.cols);
        for j in 0..rhs.cols {
            let mut acc: Vec<Option<Cyc>> = vec![None; self.rows];
            for (k, v) in &rhs.data[j] {
                for (r, w) in &self.data[*k as usize] {
                    let add = v * w;
                    match &mut acc[*r as usize] {
                        Some(c) => *c = &*c + &add,
                        slot @ None => *slot = Some(add),
                    }
                }
            }
            for (r, v) in acc.into_iter().enumerate() {
                if let Some(v) = v {
                    if !v.is_zero() {
                        out.data[j].push((r as u32, v));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for j in 0..rhs.cols {
            for (r, v) in &rhs.data[j] {
                out.add_entry(*r as usize, j, v.clone());
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        let mut out = self.clone();
        for j in 0..rhs.cols {
            for (r, v) in &rhs.data[j] {
                out.add_entry(*r as usize, j, -v);
            }
        }
        out
    }

    pub fn scale(&self, c: &Cyc) -> Mat {
        let mut out = Mat::zero(self.rows, self.cols);
        for j in 0..self.cols {
            for (r, v) in &self.data[j] {
                out.add_entry(*r as usize, j, v * c);
            }
        }
        out
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(self.cols, self.rows);
        for j in 0..self.cols {
            for (r, v) in &self.data[j] {
                out.add_entry(j, *r as usize, v.clone());
            }
        }
        out
    }

    pub fn trace(&self, ctx: &Arc<CycCtx>) -> Cyc {
        let mut t = Cyc::zero(ctx);
        for j in 0..self.cols.min(self.rows) {
            t = &t + &self.get(j, j, ctx);
        }
        t
    }

    /// Kronecker product in the basis order (i⊗j) ↦ i·cols(B)+j.
    pub fn kron(&self, rhs: &Mat) -> Mat {
        let mut out = Mat::zero(self.rows * rhs.rows, self.cols * rhs.cols);
        for j1 in 0..self.cols {
            for (r1, v1) in &self.data[j1] {
                for j2 in 0..rhs.cols {
                    for (r2, v2) in &rhs.data[j2] {
                        out.add_entry(
                            *r1 as usize * rhs.rows + *r2 as usize,
                            j1 * rhs.cols + j2,
                            v1 * v2,
                        );
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Cyc], ctx: &Arc<CycCtx>) -> Vec<Cyc> {
        let mut out = vec![Cyc::zero(ctx); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, w) in &self.data[j] {
                out[*r as usize] = &out[*r as usize] + &(w * x);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Mat {
        assert_eq!(self.rows, self.cols);
        let ctx = ctx_of(self);
        let mut acc = Mat::identity(self.rows, &ctx);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Inverse by Gauss-Jordan; `None` for singular matrices.
    pub fn inverse(&self, ctx: &Arc<CycCtx>) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.to_dense(ctx);
        let mut inv: Vec<Vec<Cyc>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Cyc::one(ctx) } else { Cyc::zero(ctx) }).collect())
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| !a[r][c].is_zero())?;
            a.swap(c, p);
            inv.swap(c, p);
            let f = a[c][c].inv().ok()?;
            for j in 0..n {
                a[c][j] = &a[c][j] * &f;
                inv[c][j] = &inv[c][j] * &f;
            }
            for r in 0..n {
                if r != c && !a[r][c].is_zero() {
                    let f = a[r][c].clone();
                    for j in 0..n {
                        a[r][j] = &a[r][j] - &(&a[c][j] * &f);
                        inv[r][j] = &inv[r][j] - &(&inv[c][j] * &f);
                    }
                }
            }
        }
        Some(Mat::from_dense(&inv))
    }

    /// Integer power with exact inverse for negative exponents.
    pub fn pow_i(&self, n: i64, ctx: &Arc<CycCtx>) -> Mat {
        if n >= 0 {
            self.pow(n as u32)
        } else {
            self.inverse(ctx).expect("matrix must be invertible for negative powers").pow((-n) as u32)
        }
    }

    pub fn to_dense(&self, ctx: &Arc<CycCtx>) -> Vec<Vec<Cyc>> {
        let mut d = vec![vec![Cyc::zero(ctx); self.cols]; self.rows];
        for j in 0..self.cols {
            for (r, v) in &self.data[j] {
                d[*r as usize][j] = v.clone();
            }
        }
        d
    }

    pub fn from_dense(d: &[Vec<Cyc>]) -> Mat {
        let rows = d.len();
        let cols = d.first().map_or(0, |r| r.len());
        let mut m = Mat::zero(rows, cols);
        for (i, row) in d.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    m.data[j].push((i as u32, v.clone()));
                }
            }
        }
        // columns were filled row by row; restore sort order
        for col in &mut m.data {
            col.sort_by_key(|e| e.0);
        }
        m
    }
}

fn ctx_of(m: &Mat) -> Arc<CycCtx> {
    for col in &m.data {
        if let Some((_, v)) = col.first() {
            return v.ctx.clone();
        }
    }
    panic!("cannot infer the ring of an all-zero matrix");
}

/// Row-reduce in place; returns the pivot columns.
fn rref(a: &mut Vec<Vec<Cyc>>) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let f = a[r][c].inv().expect("nonzero cyclotomic element is invertible");
        for j in 0..cols {
            a[r][j] = &a[r][j] * &f;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    a[i][j] = &a[i][j] - &(&a[r][j] * &f);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(dense: &[Vec<Cyc>]) -> usize {
    let mut a = dense.to_vec();
    rref(&mut a).len()
}

/// Basis of the right nullspace of a dense matrix.
pub fn nullspace(dense: &[Vec<Cyc>], ctx: &Arc<CycCtx>) -> Vec<Vec<Cyc>> {
    let cols = dense.first().map_or(0, |r| r.len());
    let mut a = dense.to_vec();
    let pivots = rref(&mut a);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Cyc::zero(ctx); cols];
        v[free] = Cyc::one(ctx);
        for (r, pc) in pivots.iter().enumerate() {
            v[*pc] = -&a[r][free];
        }
        basis.push(v);
    }
    basis
}

/// The least-degree monic annihilator of a square matrix, by incremental
/// linear dependence of the Krylov sequence I, M, M², … in End-space.
/// Returned as ascending coefficients ending in 1.
pub fn minimal_polynomial(m: &Mat, ctx: &Arc<CycCtx>) -> Vec<Cyc> {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    let vec_of = |p: &Mat| -> Vec<Cyc> {
        let d = p.to_dense(ctx);
        d.into_iter().flatten().collect()
    };
    // Reduced basis rows along with the coordinates expressing each power.
    let maxd = n * n + 1;
    let mut reduced: Vec<(Vec<Cyc>, Vec<Cyc>)> = Vec::new();
    let mut power = Mat::identity(n, ctx);
    for deg in 0..=maxd {
        let mut v = vec_of(&power);
        let mut combo = vec![Cyc::zero(ctx); maxd + 1];
        combo[deg] = Cyc::one(ctx);
        for (row, expr) in &reduced {
            // eliminate with the stored rows (each has a leading 1)
            let lead = row.iter().position(|x| !x.is_zero()).unwrap();
            if !v[lead].is_zero() {
                let f = v[lead].clone();
                for j in 0..v.len() {
                    v[j] = &v[j] - &(&row[j] * &f);
                }
                for j in 0..=maxd {
                    combo[j] = &combo[j] - &(&expr[j] * &f);
                }
            }
        }
        if v.iter().all(|x| x.is_zero()) {
            // Σ combo_j M^j = 0 with combo_deg = 1: the minimal polynomial.
            combo.truncate(deg + 1);
            return combo;
        }
        let lead = v.iter().position(|x| !x.is_zero()).unwrap();
        let f = v[lead].inv().unwrap();
        let row: Vec<Cyc> = v.iter().map(|x| x * &f).collect();
        let expr: Vec<Cyc> = combo.iter().map(|x| x * &f).collect();
        reduced.push((row, expr));
        power = power.mul(m);
    }
    unreachable!("every matrix satisfies a polynomial of degree <= n^2");
}

#[cfg(test)]
mod tests {
    use super::*;
    use taftlink_core::cyc_ctx;

    #[test]
    fn inverse_and_mul() {
        let ctx = cyc_ctx(5);
        let m = Mat::from_dense(&[
            vec![Cyc::q_pow(&ctx, 1), Cyc::one(&ctx)],
            vec![Cyc::zero(&ctx), Cyc::q_pow(&ctx, 3)],
        ]);
        let inv = m.inverse(&ctx).unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(2, &ctx));
    }

    #[test]
    fn minpoly_of_identity_and_nilpotent() {
        let ctx = cyc_ctx(5);
        let id = Mat::identity(3, &ctx);
        // x - 1
        assert_eq!(minimal_polynomial(&id, &ctx), vec![-&Cyc::one(&ctx), Cyc::one(&ctx)]);
        let mut nil = Mat::zero(2, 2);
        nil.add_entry(0, 1, Cyc::one(&ctx));
        // x^2
        assert_eq!(
            minimal_polynomial(&nil, &ctx),
            vec![Cyc::zero(&ctx), Cyc::zero(&ctx), Cyc::one(&ctx)]
        );
    }

    #[test]
    fn nullspace_dim() {
        let ctx = cyc_ctx(5);
        let one = Cyc::one(&ctx);
        // x + y + z = 0 has a 2-dimensional solution space
        let a = vec![vec![one.clone(), one.clone(), one.clone()]];
        let ns = nullspace(&a, &ctx);
        assert_eq!(ns.len(), 2);
        assert_eq!(rank(&a), 1);
    }
}
