//! Contact points of a smooth cubic as classes in `(1/3k)Λ / Λ`.
//!
//! A point `P` with `(3k)P ∈ |O_C(k)|` sits at `offset + (n/3k)λ1 + (m/3k)λ2`,
//! where the offset is shared by every class and never represented. Such a
//! class already satisfies the condition at level `k1` iff
//! `k | k1·n` and `k | k1·m`.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::Serialize;

use crate::{Error, Result};

/// Largest level accepted by [`enumerate_contact_classes`].
pub const ENUMERATION_GUARD: u64 = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TorsionClass {
    n: u64,
    m: u64,
    k: u64,
}

impl TorsionClass {
    pub fn new(n: u64, m: u64, k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::Domain("level k must be positive".into()));
        }
        if n >= 3 * k || m >= 3 * k {
            return Err(Error::Domain(format!("({n}, {m}) out of range for level {k}")));
        }
        Ok(Self { n, m, k })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// Whether the class already lies in the level-`k1` contact set.
    pub fn lies_at_level(&self, k1: u64) -> bool {
        k1 > 0 && (k1 * self.n) % self.k == 0 && (k1 * self.m) % self.k == 0
    }
}

/// `9k²`, the number of contact points of level `k`.
pub fn contact_count(k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::Domain("contact_count needs k >= 1".into()));
    }
    Ok(9 * k * k)
}

/// `k / gcd(n, m, k)`.
pub fn minimal_level(c: &TorsionClass) -> u64 {
    c.k / c.n.gcd(&c.m).gcd(&c.k)
}

fn mobius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

fn divisors(k: u64) -> Vec<u64> {
    (1..=k).filter(|d| k % d == 0).collect()
}

/// Contact points whose minimal level is exactly `k`:
/// `Σ_{d|k} μ(d)·9(k/d)²`.
pub fn primitive_contact_count(k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::Domain("primitive_contact_count needs k >= 1".into()));
    }
    let total: i64 = divisors(k)
        .into_iter()
        .map(|d| mobius(d) * 9 * ((k / d) * (k / d)) as i64)
        .sum();
    Ok(total as u64)
}

/// Every class of level `k` with its minimal level.
pub fn enumerate_contact_classes(k: u64) -> Result<Vec<(TorsionClass, u64)>> {
    if k == 0 {
        return Err(Error::Domain("enumeration needs k >= 1".into()));
    }
    if k > ENUMERATION_GUARD {
        return Err(Error::Guard(format!("k = {k} exceeds {ENUMERATION_GUARD}")));
    }
    let mut out = Vec::with_capacity((9 * k * k) as usize);
    for n in 0..3 * k {
        for m in 0..3 * k {
            let c = TorsionClass { n, m, k };
            out.push((c, minimal_level(&c)));
        }
    }
    Ok(out)
}

/// Number of classes of level `k` per minimal level.
pub fn level_histogram(k: u64) -> Result<BTreeMap<u64, u64>> {
    let mut hist = BTreeMap::new();
    for (_, level) in enumerate_contact_classes(k)? {
        *hist.entry(level).or_insert(0) += 1;
    }
    Ok(hist)
}

/// Minimal contact level of a point of order `n` in the group whose origin
/// is a flex: `(3k)P ~ kH` iff `n | 3k`.
pub fn level_of_point_order(n: u64) -> u64 {
    n / n.gcd(&3)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_minimal_level(c: &TorsionClass) -> u64 {
        (1..=c.k()).find(|&k1| c.lies_at_level(k1)).unwrap()
    }

    fn brute_primitive(k: u64) -> u64 {
        let mut count = 0;
        for n in 0..3 * k {
            for m in 0..3 * k {
                if n.gcd(&m).gcd(&k) == 1 {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn counts() {
        assert_eq!(contact_count(1).unwrap(), 9);
        assert_eq!(contact_count(2).unwrap(), 36);
        assert_eq!(contact_count(3).unwrap(), 81);
        assert!(contact_count(0).is_err());
        assert_eq!(primitive_contact_count(1).unwrap(), 9);
        assert_eq!(primitive_contact_count(2).unwrap(), 27);
        assert_eq!(primitive_contact_count(3).unwrap(), 72);
    }

    #[test]
    fn minimal_levels() {
        let lv = |n, m, k| minimal_level(&TorsionClass::new(n, m, k).unwrap());
        assert_eq!(lv(0, 0, 5), 1);
        assert_eq!(lv(1, 1, 3), 3);
        assert_eq!(lv(3, 3, 3), 1);
        assert_eq!(lv(2, 4, 6), 3);
        assert!(TorsionClass::new(9, 0, 3).is_err());
    }

    #[test]
    fn minimal_level_matches_brute_force() {
        for k in 1..=12 {
            for (c, level) in enumerate_contact_classes(k).unwrap() {
                assert_eq!(level, brute_minimal_level(&c));
                assert_eq!(k % level, 0);
            }
        }
    }

    #[test]
    fn histograms() {
        let h1 = level_histogram(1).unwrap();
        assert_eq!(h1, BTreeMap::from([(1, 9)]));
        let h2 = level_histogram(2).unwrap();
        assert_eq!(h2, BTreeMap::from([(1, 9), (2, 27)]));
        let h6 = level_histogram(6).unwrap();
        for d in divisors(6) {
            assert_eq!(h6[&d], primitive_contact_count(d).unwrap());
        }
        assert!(matches!(enumerate_contact_classes(1001), Err(Error::Guard(_))));
    }

    #[test]
    fn mobius_matches_gcd_count_and_partitions() {
        for k in 1..=50 {
            assert_eq!(primitive_contact_count(k).unwrap(), brute_primitive(k), "k = {k}");
            let total: u64 = divisors(k).into_iter().map(|d| primitive_contact_count(d).unwrap()).sum();
            assert_eq!(total, 9 * k * k);
        }
    }

    #[test]
    fn point_orders_to_levels() {
        let levels: Vec<u64> = [1, 2, 3, 6, 9].iter().map(|&n| level_of_point_order(n)).collect();
        assert_eq!(levels, vec![1, 2, 1, 2, 3]);
    }
}
