//! Data-parallel helpers with a sequential fallback.
//!
//! With the (default) `parallel` feature the `*_auto` functions fan out via
//! rayon; without it they alias the sequential versions. The explicit
//! `*_seq` variants always exist so benchmarks can compare both paths in a
//! single build.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map every index in `0..n`, collecting results in index order.
pub fn map_indexed<S, F>(n: usize, f: F) -> Vec<S>
where
    S: Send,
    F: Fn(usize) -> S + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_indexed_seq(n, f)
    }
}

pub fn map_indexed_seq<S, F>(n: usize, f: F) -> Vec<S>
where
    F: Fn(usize) -> S,
{
    (0..n).map(f).collect()
}

/// Indices in `0..n` for which the check fails, in ascending order.
pub fn failing_indices<F>(n: usize, check: F) -> Vec<usize>
where
    F: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        let mut v: Vec<usize> = (0..n).into_par_iter().filter(|&i| !check(i)).collect();
        v.sort_unstable();
        v
    }
    #[cfg(not(feature = "parallel"))]
    {
        failing_indices_seq(n, check)
    }
}

pub fn failing_indices_seq<F>(n: usize, check: F) -> Vec<usize>
where
    F: Fn(usize) -> bool,
{
    (0..n).filter(|&i| !check(i)).collect()
}

/// True iff the check holds for every index in `0..n`.
pub fn all_indexed<F>(n: usize, check: F) -> bool
where
    F: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().all(check)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).all(check)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn par_and_seq_agree() {
        let f = |i: usize| i % 17 != 3;
        assert_eq!(failing_indices(100, f), failing_indices_seq(100, f));
        assert_eq!(map_indexed(20, |i| i * i), map_indexed_seq(20, |i| i * i));
        assert!(all_indexed(50, |i| i < 50));
        assert!(!all_indexed(50, |i| i != 29));
    }
}
