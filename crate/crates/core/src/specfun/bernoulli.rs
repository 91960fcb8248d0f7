use num_rational::Ratio;
use num_traits::ToPrimitive;
use std::sync::OnceLock;

/// Exact Bernoulli numbers B_2, B_4, …, B_40.
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    values: Vec<Ratio<i128>>,
    floats: Vec<f64>,
}

const EVEN_BERNOULLI: [(i128, i128); 20] = [
    (1, 6),
    (-1, 30),
    (1, 42),
    (-1, 30),
    (5, 66),
    (-691, 2730),
    (7, 6),
    (-3617, 510),
    (43867, 798),
    (-174611, 330),
    (854513, 138),
    (-236364091, 2730),
    (8553103, 6),
    (-23749461029, 870),
    (8615841276005, 14322),
    (-7709321041217, 510),
    (2577687858367, 6),
    (-26315271553053477373, 1919190),
    (2929993913841559, 6),
    (-261082718496449122051, 13530),
];

impl BernoulliTable {
    fn new() -> Self {
        let values: Vec<Ratio<i128>> = EVEN_BERNOULLI.iter().map(|&(n, d)| Ratio::new(n, d)).collect();
        let floats = values.iter().map(|r| r.to_f64().expect("table entries fit in f64")).collect();
        Self { values, floats }
    }

    /// Number of stored entries; entry `k` (1-based) is B_{2k}.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Exact B_{2k}, `k ≥ 1`.
    pub fn exact(&self, k: usize) -> Ratio<i128> {
        self.values[k - 1]
    }

    /// B_{2k} rounded to f64, `k ≥ 1`.
    pub fn b2k(&self, k: usize) -> f64 {
        self.floats[k - 1]
    }

    pub fn values(&self) -> &[Ratio<i128>] {
        &self.values
    }
}

pub fn bernoulli_table() -> &'static BernoulliTable {
    static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
    TABLE.get_or_init(BernoulliTable::new)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    // Akiyama–Tanigawa in big rationals; independent of the stored table.
    fn bernoulli_oracle(n: usize) -> BigRational {
        let mut a: Vec<BigRational> = Vec::with_capacity(n + 1);
        for m in 0..=n {
            a.push(BigRational::new(BigInt::one(), BigInt::from(m as i64 + 1)));
            for j in (1..=m).rev() {
                let diff = &a[j - 1] - &a[j];
                a[j - 1] = diff * BigRational::from_integer(BigInt::from(j as i64));
            }
        }
        a[0].clone()
    }

    #[test]
    fn leading_entries() {
        let t = bernoulli_table();
        assert!(t.len() >= 10);
        assert_eq!(t.exact(1), Ratio::new(1, 6));
        assert_eq!(t.exact(2), Ratio::new(-1, 30));
    }

    #[test]
    fn table_matches_akiyama_tanigawa() {
        let t = bernoulli_table();
        for k in 1..=t.len() {
            let b = bernoulli_oracle(2 * k);
            let stored = t.exact(k);
            let stored = BigRational::new(BigInt::from(*stored.numer()), BigInt::from(*stored.denom()));
            assert_eq!(b, stored, "B_{}", 2 * k);
            assert!(!b.is_zero());
        }
    }
}
