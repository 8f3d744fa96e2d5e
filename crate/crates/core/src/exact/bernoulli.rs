use std::sync::{OnceLock, RwLock};

use super::{binomial, BigRat};

/// Growable table of even-index Bernoulli numbers `B_0, B_2, B_4, …`.
///
/// Readers share the table; growth takes the write lock, so only one thread
/// extends it at a time and readers never observe a partial entry.
#[derive(Debug)]
pub struct BernoulliCache {
    even: RwLock<Vec<BigRat>>,
}

impl Default for BernoulliCache {
    fn default() -> Self {
        Self::new()
    }
}

impl BernoulliCache {
    pub fn new() -> Self {
        BernoulliCache {
            even: RwLock::new(vec![BigRat::from(1)]),
        }
    }

    /// The process-wide cache behind [`bernoulli`].
    pub fn global() -> &'static BernoulliCache {
        static CACHE: OnceLock<BernoulliCache> = OnceLock::new();
        CACHE.get_or_init(BernoulliCache::new)
    }

    /// `B_m` with the convention `B_1 = −1/2`.
    pub fn get(&self, m: u32) -> BigRat {
        match m {
            0 => return BigRat::from(1),
            1 => return BigRat::from((-1, 2)),
            _ if m % 2 == 1 => return BigRat::new(),
            _ => {}
        }
        let idx = (m / 2) as usize;
        {
            let table = self.even.read().expect("bernoulli cache poisoned");
            if let Some(b) = table.get(idx) {
                return b.clone();
            }
        }
        let mut table = self.even.write().expect("bernoulli cache poisoned");
        while table.len() <= idx {
            let next = next_even(&table);
            table.push(next);
        }
        table[idx].clone()
    }

    /// Number of even-index entries currently stored.
    pub fn len(&self) -> usize {
        self.even.read().expect("bernoulli cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Solves `Σ_{j=0}^{m} C(m+1, j) B_j = 0` for `B_m`, `m = 2·len(table)`.
fn next_even(table: &[BigRat]) -> BigRat {
    let m = 2 * table.len() as u32;
    // j = 0 and j = 1 terms: 1 + (m+1)(−1/2)
    let mut acc = BigRat::from(1) - BigRat::from((m + 1, 2u32));
    for (i, b) in table.iter().enumerate().skip(1) {
        let j = 2 * i as u32;
        acc += BigRat::from(binomial(m + 1, j)) * b;
    }
    -acc / BigRat::from(m + 1)
}

/// Exact Bernoulli number `B_m` from the shared cache.
pub fn bernoulli(m: u32) -> BigRat {
    BernoulliCache::global().get(m)
}
