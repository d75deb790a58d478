//! Data-parallel helpers with a sequential fallback.
//!
//! With the default `parallel` feature the maps below run on the rayon pool;
//! without it they are plain sequential loops. `force_sequential` switches the
//! parallel build to the sequential path at runtime so the benchmark suite can
//! compare both on identical binaries. Results are always collected in index
//! order, so outputs are bit-identical regardless of thread count.

use std::sync::atomic::{AtomicBool, Ordering};

static FORCE_SEQUENTIAL: AtomicBool = AtomicBool::new(false);

/// Force the sequential path at runtime (used by benchmarks and determinism
/// tests). No-op in builds without the `parallel` feature.
pub fn force_sequential(v: bool) {
    FORCE_SEQUENTIAL.store(v, Ordering::SeqCst);
}

pub fn is_sequential() -> bool {
    cfg!(not(feature = "parallel")) || FORCE_SEQUENTIAL.load(Ordering::SeqCst)
}

/// Map `f` over `0..n`, collecting results in index order.
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if !is_sequential() {
            use rayon::prelude::*;
            return (0..n).into_par_iter().map(f).collect();
        }
    }
    (0..n).map(f).collect()
}

/// Map `f` over the items of a slice, collecting results in index order.
pub fn map_slice<'a, S, T, F>(items: &'a [S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&'a S) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if !is_sequential() {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
    }
    items.iter().map(f).collect()
}

/// Pairwise (cascade) summation: deterministic and more accurate than a
/// running sum, independent of how the inputs were produced.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    match values.len() {
        0 => 0.0,
        1 => values[0],
        2 => values[0] + values[1],
        n => {
            let mid = n / 2;
            pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_indexed_matches_sequential() {
        let par: Vec<usize> = map_indexed(100, |i| i * i);
        let seq: Vec<usize> = (0..100).map(|i| i * i).collect();
        assert_eq!(par, seq);
    }

    #[test]
    fn pairwise_sum_exact_on_integers() {
        let v: Vec<f64> = (1..=1000).map(|i| i as f64).collect();
        assert_eq!(pairwise_sum(&v), 500500.0);
    }
}
