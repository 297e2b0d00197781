//! Irreducibility certificates over the rationals from factorization
//! patterns modulo small primes.
//!
//! A polynomial is irreducible over Q when the only factor degrees
//! compatible with all of its distinct-degree factorizations mod p are 0 and
//! the full degree. A plane curve is irreducible over Q when its restriction
//! to some rational line is.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::form::{HomogeneousForm, Matrix3};
use super::rational::{int, Rational};
use super::univariate::UnivariatePoly;

type Fp = Vec<u64>;

const PRIMES: [u64; 24] = [
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191,
    193, 197, 199, 211, 223, 227,
];

fn trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

fn reduce(c: &Rational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let d = c.denom().mod_floor(&pb).to_u64()?;
    if d == 0 {
        return None;
    }
    let n = c.numer().mod_floor(&pb).to_u64()?;
    Some(n * inv_mod(d, p) % p)
}

fn sub(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

fn mul(a: &Fp, b: &Fp, p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

fn divrem(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    let mut r = a.clone();
    let db = b.len() - 1;
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let inv = inv_mod(*b.last().unwrap(), p);
    let mut q = vec![0u64; r.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db] * inv % p;
        q[i] = c;
        if c != 0 {
            for (j, bj) in b.iter().enumerate() {
                r[i + j] = (r[i + j] + p - c * bj % p) % p;
            }
        }
    }
    r.truncate(db);
    (trim(q), trim(r))
}

fn gcd(a: &Fp, b: &Fp, p: u64) -> Fp {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = divrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    if let Some(&lc) = a.last() {
        let inv = inv_mod(lc, p);
        a = a.into_iter().map(|c| c * inv % p).collect();
    }
    a
}

fn derivative(a: &Fp, p: u64) -> Fp {
    trim(a.iter().enumerate().skip(1).map(|(i, c)| (i as u64 % p) * c % p).collect())
}

fn powmod_poly(base: &Fp, mut e: u64, m: &Fp, p: u64) -> Fp {
    let mut result: Fp = vec![1];
    let mut b = divrem(base, m, p).1;
    while e > 0 {
        if e & 1 == 1 {
            result = divrem(&mul(&result, &b, p), m, p).1;
        }
        b = divrem(&mul(&b, &b, p), m, p).1;
        e >>= 1;
    }
    result
}

/// Degrees of the irreducible factors of `f` mod `p`, or `None` when `p` is
/// unsuitable (divides a denominator or the leading coefficient, or `f` is
/// not square-free mod `p`).
fn factor_degrees(f: &UnivariatePoly, p: u64) -> Option<Vec<usize>> {
    let n = f.degree()?;
    let mut fp = Vec::with_capacity(n + 1);
    for c in f.coeffs() {
        fp.push(reduce(c, p)?);
    }
    let fp = trim(fp);
    if fp.len() != n + 1 {
        return None;
    }
    if gcd(&fp, &derivative(&fp, p), p).len() != 1 {
        return None;
    }
    let x: Fp = vec![0, 1];
    let mut rest = fp;
    let mut h = x.clone();
    let mut degrees = Vec::new();
    let mut i = 1;
    while rest.len() - 1 >= 2 * i {
        h = powmod_poly(&h, p, &rest, p);
        let g = gcd(&sub(&h, &x, p), &rest, p);
        if g.len() > 1 {
            let k = (g.len() - 1) / i;
            degrees.extend(std::iter::repeat(i).take(k));
            rest = divrem(&rest, &g, p).0;
            h = divrem(&h, &rest, p).1;
        }
        i += 1;
    }
    if rest.len() > 1 {
        degrees.push(rest.len() - 1);
    }
    Some(degrees)
}

fn primitive_integer(f: &UnivariatePoly) -> Vec<BigInt> {
    let den = f.coeffs().iter().fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f.coeffs().iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &content).collect()
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Monic gcd of two nonzero polynomials by images modulo word-size primes,
/// Chinese remaindering, and an exact division check. `None` if no
/// candidate verified within the prime budget.
pub(crate) fn modular_gcd(a: &UnivariatePoly, b: &UnivariatePoly) -> Option<UnivariatePoly> {
    let (ai, bi) = (primitive_integer(a), primitive_integer(b));
    let gamma = ai.last()?.gcd(bi.last()?);
    let to_fp = |v: &[BigInt], p: u64| -> Fp {
        let pb = BigInt::from(p);
        v.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect()
    };
    let mut acc: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::from(1);
    let mut best = usize::MAX;
    let mut previous: Option<Vec<BigInt>> = None;
    let primes = (1u64 << 20..1u64 << 30).rev().filter(|&n| n % 2 == 1 && is_prime(n));
    for p in primes.take(200) {
        let (ap, bp) = (to_fp(&ai, p), to_fp(&bi, p));
        if ap.last() == Some(&0) || bp.last() == Some(&0) {
            continue;
        }
        let g = gcd(&trim(ap), &trim(bp), p);
        let deg = g.len() - 1;
        if deg > best {
            continue;
        }
        let pb = BigInt::from(p);
        let gm = gamma.mod_floor(&pb).to_u64().unwrap();
        let g: Vec<BigInt> = g.iter().map(|c| BigInt::from(c * gm % p)).collect();
        if deg < best {
            best = deg;
            acc = g;
            modulus = pb;
            previous = None;
            if best == 0 {
                return Some(UnivariatePoly::one());
            }
            continue;
        }
        let inv = BigInt::from(inv_mod(modulus.mod_floor(&pb).to_u64().unwrap(), p));
        for (x, r) in acc.iter_mut().zip(&g) {
            let t = ((r - &*x) * &inv).mod_floor(&pb);
            *x += &modulus * t;
        }
        modulus *= &pb;
        let half = &modulus / 2;
        let sym: Vec<BigInt> =
            acc.iter().map(|c| if c > &half { c - &modulus } else { c.clone() }).collect();
        if previous.as_ref() == Some(&sym) {
            let cand = UnivariatePoly::new(sym.iter().map(|c| Rational::from_integer(c.clone())).collect());
            if a.rem(&cand).is_zero() && b.rem(&cand).is_zero() {
                return Some(cand.monic());
            }
        }
        previous = Some(sym);
    }
    None
}

fn small_primes(limit: u64) -> impl Iterator<Item = u64> {
    (3..limit).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

fn eval_big(h: &[BigInt], x: &BigInt) -> BigInt {
    h.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Integer roots of a monic integer polynomial (coefficients ascending),
/// by lifting simple roots modulo a prime where it stays square-free.
pub(crate) fn integer_roots_monic(h: &[BigInt]) -> Vec<BigInt> {
    let n = h.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let bound: BigInt = h.iter().map(|c| c.abs()).max().unwrap() + 1;
    let dh: Vec<BigInt> = h.iter().enumerate().skip(1).map(|(i, c)| c * i).collect();
    for p in small_primes(20_000) {
        let pb = BigInt::from(p);
        let hp = trim(h.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect());
        if hp.len() != n + 1 || gcd(&hp, &derivative(&hp, p), p).len() != 1 {
            continue;
        }
        let mut out = Vec::new();
        for x0 in 0..p {
            let v = hp.iter().rev().fold(0u64, |acc, c| (acc * x0 + c) % p);
            if v != 0 {
                continue;
            }
            let mut x = BigInt::from(x0);
            let mut m = pb.clone();
            while m <= &bound * 2 {
                m = &m * &m;
                let d = eval_big(&dh, &x).mod_floor(&m);
                let inv = d.extended_gcd(&m).x;
                x = (&x - eval_big(h, &x) * inv).mod_floor(&m);
            }
            if &x * 2 > m {
                x -= &m;
            }
            if eval_big(h, &x).is_zero() {
                out.push(x);
            }
        }
        out.sort();
        return out;
    }
    panic!("no prime keeps the polynomial square-free");
}

/// `true` when irreducibility over Q is certified; `false` means no
/// certificate was found with the primes tried.
pub fn certify_irreducible(f: &UnivariatePoly) -> bool {
    let Some(n) = f.degree() else { return false };
    if n <= 1 {
        return n == 1;
    }
    // possible[k]: a factor of degree k is still compatible
    let mut possible = vec![true; n + 1];
    for &p in &PRIMES {
        let Some(degs) = factor_degrees(f, p) else { continue };
        let mut sums = vec![false; n + 1];
        sums[0] = true;
        for d in degs {
            for k in (d..=n).rev() {
                if sums[k - d] {
                    sums[k] = true;
                }
            }
        }
        for k in 0..=n {
            possible[k] &= sums[k];
        }
        if (1..n).all(|k| !possible[k]) {
            return true;
        }
    }
    false
}

/// Restriction of `f` to the line through `a` and `b`, parametrized as
/// `a + u·b`.
pub fn restrict_to_line(f: &HomogeneousForm, a: [i64; 3], b: [i64; 3]) -> UnivariatePoly {
    let m = Matrix3::from_columns([a.map(int), b.map(int), [int(0), int(0), int(1)]]);
    let g = f.substitute_linear(&m);
    let mut coeffs = vec![Rational::zero(); f.degree() as usize + 1];
    for (e, c) in g.terms() {
        if e[2] == 0 {
            coeffs[e[1] as usize] = c.clone();
        }
    }
    UnivariatePoly::new(coeffs)
}

/// Irreducibility over Q of a plane curve, certified by restricting to a
/// sequence of rational lines. Curves that are irreducible over Q but split
/// over a number field may fail to certify.
pub fn form_irreducible_over_q(f: &HomogeneousForm) -> bool {
    let d = f.degree() as usize;
    if f.is_zero() {
        return false;
    }
    if d <= 1 {
        return true;
    }
    let lines: [([i64; 3], [i64; 3]); 10] = [
        ([1, 2, 3], [2, -1, 5]),
        ([3, -1, 2], [1, 4, -3]),
        ([2, 5, -1], [-3, 1, 2]),
        ([1, -3, 4], [5, 2, 1]),
        ([4, 1, -2], [-1, 3, 5]),
        ([-2, 3, 7], [3, 1, -4]),
        ([5, -4, 1], [2, 7, 3]),
        ([1, 1, 6], [7, -2, 3]),
        ([6, 1, 1], [-5, 4, 9]),
        ([3, 8, -5], [2, -7, 11]),
    ];
    lines.iter().any(|(a, b)| {
        let r = restrict_to_line(f, *a, *b);
        r.degree() == Some(d) && certify_irreducible(&r)
    })
}
