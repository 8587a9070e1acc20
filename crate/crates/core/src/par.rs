//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) batch operations run on the rayon
//! pool unless [`Exec::Sequential`] is requested; without it everything runs
//! sequentially. Results are always returned in input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    #[default]
    Parallel,
    Sequential,
}

impl Exec {
    pub fn map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    pub fn map_range<U, F>(self, range: std::ops::Range<usize>, f: F) -> Vec<U>
    where
        U: Send,
        F: Fn(usize) -> U + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            return range.into_par_iter().map(f).collect();
        }
        range.map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let xs: Vec<u32> = (0..100).collect();
        let a = Exec::Parallel.map(&xs, |x| x * 2);
        let b = Exec::Sequential.map(&xs, |x| x * 2);
        assert_eq!(a, b);
        assert_eq!(Exec::Parallel.map_range(0..5, |i| i), vec![0, 1, 2, 3, 4]);
    }
}
