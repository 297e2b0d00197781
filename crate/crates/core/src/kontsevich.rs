//! Numbers `N_k` of rational plane curves of degree `k` through `3k - 1`
//! general points.

use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Known values used to validate cached tables.
pub const KNOWN: [(u32, u32); 4] = [(1, 1), (2, 1), (3, 12), (4, 620)];

const CACHE_VERSION: u32 = 1;

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// One summand `k1 k2 (3k k1 k2 - 2k² + 6 k1 k2)(3k-4)! / ((3k1-1)!(3k2-1)!) N_k1 N_k2`
/// as an exact rational.
fn summand(k: u32, k1: u32, k2: u32, n1: &BigInt, n2: &BigInt) -> BigRational {
    let p = BigInt::from(k1) * BigInt::from(k2);
    let kb = BigInt::from(k);
    let bracket = BigInt::from(3) * &kb * &p - BigInt::from(2) * &kb * &kb + BigInt::from(6) * &p;
    let num = p * bracket * factorial(3 * k - 4) * n1 * n2;
    let den = factorial(3 * k1 - 1) * factorial(3 * k2 - 1);
    BigRational::new(num, den)
}

/// Extends `table` (holding `N_1..N_j`) up to `N_k`.
fn extend(table: &mut Vec<BigInt>, k: u32, use_symmetry: bool) -> Result<()> {
    if table.is_empty() {
        table.push(BigInt::one());
    }
    while (table.len() as u32) < k {
        let kk = table.len() as u32 + 1;
        let mut sum = BigRational::zero();
        if use_symmetry {
            for k1 in 1..=kk / 2 {
                let k2 = kk - k1;
                let s = summand(kk, k1, k2, &table[k1 as usize - 1], &table[k2 as usize - 1]);
                if k1 == k2 {
                    sum += s;
                } else {
                    sum += s * BigRational::from_integer(BigInt::from(2));
                }
            }
        } else {
            for k1 in 1..kk {
                let k2 = kk - k1;
                sum += summand(kk, k1, k2, &table[k1 as usize - 1], &table[k2 as usize - 1]);
            }
        }
        let half = sum / BigRational::from_integer(BigInt::from(2));
        if !half.is_integer() {
            return Err(Error::Internal(format!("N_{kk} is not an integer: {half}")));
        }
        table.push(half.to_integer());
    }
    Ok(())
}

/// `N_k` from the quadratic recursion, evaluated in exact rationals.
pub fn compute_nk(k: u32) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::Domain("N_k needs k >= 1".into()));
    }
    let mut t = Vec::new();
    extend(&mut t, k, false)?;
    Ok(t[k as usize - 1].clone())
}

/// Same recursion summing each unordered pair `{k1, k2}` once.
pub fn compute_nk_symmetric(k: u32) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::Domain("N_k needs k >= 1".into()));
    }
    let mut t = Vec::new();
    extend(&mut t, k, true)?;
    Ok(t[k as usize - 1].clone())
}

/// Contiguous table `N_1..N_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NkTable {
    values: Vec<BigInt>,
}

/// What happened to the cache file when a table was requested.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    NoCache,
    Hit,
    /// File absent or too short; (re)written.
    Written,
    /// File unreadable, wrong version or wrong values; recomputed and rewritten.
    Invalid(Error),
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    entries: Vec<(u32, String)>,
}

impl NkTable {
    pub fn compute(max_k: u32) -> Result<Self> {
        if max_k == 0 {
            return Err(Error::Domain("table needs max_k >= 1".into()));
        }
        let mut values = Vec::new();
        extend(&mut values, max_k, true)?;
        Ok(Self { values })
    }

    pub fn max_k(&self) -> u32 {
        self.values.len() as u32
    }

    pub fn get(&self, k: u32) -> Option<&BigInt> {
        k.checked_sub(1).and_then(|i| self.values.get(i as usize))
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.values.iter().enumerate().map(|(i, v)| (i as u32 + 1, v))
    }

    pub fn to_json(&self) -> String {
        let file = CacheFile {
            version: CACHE_VERSION,
            entries: self.entries().map(|(k, v)| (k, v.to_string())).collect(),
        };
        serde_json::to_string(&file).expect("serializable")
    }

    /// Parses a cache document and checks version, contiguity and the
    /// known small values.
    pub fn from_json(s: &str) -> Result<Self> {
        let file: CacheFile =
            serde_json::from_str(s).map_err(|e| Error::CacheInvalid(e.to_string()))?;
        if file.version != CACHE_VERSION {
            return Err(Error::CacheInvalid(format!("version {}", file.version)));
        }
        let mut values = Vec::with_capacity(file.entries.len());
        for (i, (k, v)) in file.entries.iter().enumerate() {
            if *k as usize != i + 1 {
                return Err(Error::CacheInvalid("entries not contiguous from k = 1".into()));
            }
            let n: BigInt = v.parse().map_err(|_| Error::CacheInvalid(format!("bad value {v:?}")))?;
            values.push(n);
        }
        if values.is_empty() {
            return Err(Error::CacheInvalid("empty table".into()));
        }
        for (k, n) in KNOWN {
            if let Some(v) = values.get(k as usize - 1) {
                if *v != BigInt::from(n) {
                    return Err(Error::CacheInvalid(format!("N_{k} = {v}, expected {n}")));
                }
            }
        }
        Ok(Self { values })
    }

    /// Table up to `max_k`, reusing a compatible cache file and rewriting it
    /// atomically when it was missing, short or invalid.
    pub fn load_or_compute(max_k: u32, cache: Option<&Path>) -> Result<(Self, CacheStatus)> {
        let Some(path) = cache else {
            return Ok((Self::compute(max_k)?, CacheStatus::NoCache));
        };
        let mut status = CacheStatus::Written;
        if path.exists() {
            match fs::read_to_string(path)
                .map_err(|e| Error::CacheInvalid(e.to_string()))
                .and_then(|s| Self::from_json(&s))
            {
                Ok(t) if t.max_k() >= max_k => {
                    let values = t.values[..max_k as usize].to_vec();
                    return Ok((Self { values }, CacheStatus::Hit));
                }
                Ok(_) => {}
                Err(e) => status = CacheStatus::Invalid(e),
            }
        }
        let table = Self::compute(max_k)?;
        write_atomic(path, &table.to_json())?;
        Ok((table, status))
    }
}

fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(format!(".tmp{}", std::process::id()));
    let tmp = std::path::PathBuf::from(tmp);
    fs::write(&tmp, contents).map_err(|e| Error::CacheInvalid(e.to_string()))?;
    fs::rename(&tmp, path).map_err(|e| Error::CacheInvalid(e.to_string()))
}
