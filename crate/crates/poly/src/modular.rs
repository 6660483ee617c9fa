//! Linear algebra over F_p for 31-bit primes, and the multi-modular route
//! back to exact rational kernels.

use cremona_core::rational::Q;
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Primes below 2^31, descending.
pub fn primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut n: u64 = (1 << 31) - 1;
    while out.len() < count {
        if is_prime(n) {
            out.push(n);
        }
        n -= 2;
    }
    out
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn reduce(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits")
}

pub fn reduce_q(x: &Q, p: u64) -> Option<u64> {
    let d = reduce(x.denom(), p);
    (d != 0).then(|| reduce(x.numer(), p) * inv_mod(d, p) % p)
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "inverse of zero");
    pow_mod(a, p - 2, p)
}

/// Reduced row echelon form mod p. Returns the pivot columns; `rows`
/// is left holding the nonzero reduced rows.
pub fn rref_mod(rows: &mut Vec<Vec<u64>>, ncols: usize, p: u64, reduce_above: bool) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(k) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, k);
        let inv = inv_mod(rows[r][col], p);
        for x in rows[r][col..].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot = std::mem::take(&mut rows[r]);
        let start = if reduce_above { 0 } else { r + 1 };
        for (i, row) in rows.iter_mut().enumerate().skip(start) {
            if i == r || row[col] == 0 {
                continue;
            }
            let f = p - row[col];
            for (x, y) in row[col..].iter_mut().zip(&pivot[col..]) {
                *x = (*x + f * y) % p;
            }
        }
        rows[r] = pivot;
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn reduce_matrix(rows: &[Vec<BigInt>], p: u64) -> Vec<Vec<u64>> {
    rows.iter().map(|r| r.iter().map(|x| reduce(x, p)).collect()).collect()
}

pub fn rank_mod(rows: &[Vec<BigInt>], ncols: usize, p: u64) -> usize {
    let mut m = reduce_matrix(rows, p);
    rref_mod(&mut m, ncols, p, false).len()
}

/// Canonical kernel basis from an RREF: one vector per free column with
/// that coordinate equal to 1.
pub fn kernel_from_rref(rref: &[Vec<u64>], pivots: &[usize], ncols: usize, p: u64) -> Vec<Vec<u64>> {
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0; ncols];
            v[f] = 1;
            for (row, &pc) in rref.iter().zip(pivots) {
                v[pc] = (p - row[f]) % p;
            }
            v
        })
        .collect()
}

/// Symmetric-range rational reconstruction of `u` mod `m`.
pub fn rational_reconstruct(u: &BigInt, m: &BigInt) -> Option<Q> {
    let bound = (m >> 1usize).sqrt();
    let (mut r0, mut r1) = (m.clone(), u.mod_floor(m));
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if s1.is_zero() || s1.abs() > bound || !s1.gcd(m).is_one() {
        return None;
    }
    Some(Q::new(r1, s1))
}

/// Exact check that every row annihilates `v`.
pub fn annihilates(rows: &[Vec<BigInt>], v: &[Q]) -> bool {
    let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    rows.iter().all(|row| {
        let mut acc = BigInt::zero();
        for (a, b) in row.iter().zip(&ints) {
            if a.sign() != Sign::NoSign && b.sign() != Sign::NoSign {
                acc += a * b;
            }
        }
        acc.is_zero()
    })
}

#[derive(Clone, Debug)]
pub struct ModularKernel {
    pub vectors: Vec<Vec<Q>>,
    pub primes_used: usize,
}

/// Exact kernel of an integer matrix via CRT and rational reconstruction,
/// verified over Z. Returns `None` if `max_primes` is not enough.
pub fn modular_kernel(rows: &[Vec<BigInt>], ncols: usize, max_primes: usize) -> Option<ModularKernel> {
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut acc: Vec<Vec<BigInt>> = Vec::new();
    let mut modulus = BigInt::one();
    let mut used = 0;
    for p in primes(max_primes) {
        let mut m = reduce_matrix(rows, p);
        let pivots = rref_mod(&mut m, ncols, p, true);
        let rank = pivots.len();
        let better = match &best {
            None => true,
            Some((r, piv)) => rank > *r || (rank == *r && pivots < *piv),
        };
        let same = best.as_ref().is_some_and(|(r, piv)| rank == *r && pivots == *piv);
        if !same && !better {
            continue;
        }
        let ker = kernel_from_rref(&m, &pivots, ncols, p);
        if better && !same {
            best = Some((rank, pivots));
            acc = ker.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect();
            modulus = BigInt::from(p);
            used = 1;
        } else {
            let pb = BigInt::from(p);
            let inv = BigInt::from(inv_mod(reduce(&modulus, p), p));
            for (a, k) in acc.iter_mut().zip(&ker) {
                for (x, &r) in a.iter_mut().zip(k) {
                    let diff = (BigInt::from(r) - &*x).mod_floor(&pb);
                    *x += &modulus * ((diff * &inv) % &pb);
                }
            }
            modulus *= &pb;
            used += 1;
        }
        let recon: Option<Vec<Vec<Q>>> = acc
            .iter()
            .map(|v| v.iter().map(|x| rational_reconstruct(x, &modulus)).collect())
            .collect();
        if let Some(vs) = recon {
            if vs.iter().all(|v| annihilates(rows, v)) {
                return Some(ModularKernel { vectors: vs, primes_used: used });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use cremona_core::rational::qf;

    #[test]
    fn reconstruct() {
        let m = BigInt::from(2147483647u64) * BigInt::from(2147483629u64);
        let x = qf(-355, 113);
        let u = (x.numer() * BigInt::from(inv_mod(reduce(x.denom(), 2147483647), 2147483647)))
            .mod_floor(&BigInt::from(2147483647u64));
        let v = (x.numer() * BigInt::from(inv_mod(reduce(x.denom(), 2147483629), 2147483629)))
            .mod_floor(&BigInt::from(2147483629u64));
        let inv = BigInt::from(inv_mod(2147483647 % 2147483629, 2147483629));
        let t = ((v - &u).mod_floor(&BigInt::from(2147483629u64)) * inv) % BigInt::from(2147483629u64);
        let crt = u + BigInt::from(2147483647u64) * t;
        assert_eq!(rational_reconstruct(&crt, &m), Some(x));
    }

    #[test]
    fn small_kernel() {
        let rows: Vec<Vec<BigInt>> =
            [[1, 2, 3], [2, 4, 7]].iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let k = modular_kernel(&rows, 3, 4).unwrap();
        assert_eq!(k.vectors, vec![vec![qf(-2, 1), qf(1, 1), qf(0, 1)]]);
        assert_eq!(rank_mod(&rows, 3, primes(1)[0]), 2);
    }
}
