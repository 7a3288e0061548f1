//! Order-preserving data-parallel helpers. Without the `parallel` feature
//! these run sequentially; results are identical either way.

use alloc::vec::Vec;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Indices `i < n` with `keep(i)`, ascending.
pub(crate) fn filter_range<F>(n: u32, keep: F) -> Vec<u32>
where
    F: Fn(u32) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if n >= 4096 {
            return (0..n).into_par_iter().filter(|&i| keep(i)).collect();
        }
    }
    (0..n).filter(|&i| keep(i)).collect()
}

/// `items.map(f)` keeping input order.
pub(crate) fn map_ordered<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if items.len() > 1 {
            return items.par_iter().map(f).collect();
        }
    }
    items.iter().map(f).collect()
}
