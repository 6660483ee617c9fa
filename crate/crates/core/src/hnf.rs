//! Row-style Hermite normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Nonzero rows of the Hermite normal form of the row span of `rows`:
/// echelon shape, positive pivots, entries above each pivot reduced into
/// `[0, pivot)`.
pub fn hnf(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        loop {
            let piv = (r..m.len())
                .filter(|&i| !m[i][c].is_zero())
                .min_by(|&a, &b| m[a][c].abs().cmp(&m[b][c].abs()));
            let Some(p) = piv else { break };
            m.swap(r, p);
            let mut clean = true;
            for i in r + 1..m.len() {
                if m[i][c].is_zero() {
                    continue;
                }
                let f = m[i][c].div_floor(&m[r][c]);
                let (head, tail) = m.split_at_mut(i);
                sub_scaled(&mut tail[0], &head[r], &f);
                if !m[i][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if r < m.len() && !m[r][c].is_zero() {
            if m[r][c].is_negative() {
                for x in m[r].iter_mut() {
                    *x = -x.clone();
                }
            }
            for i in 0..r {
                let f = m[i][c].div_floor(&m[r][c]);
                if !f.is_zero() {
                    let (head, tail) = m.split_at_mut(r);
                    sub_scaled(&mut head[i], &tail[0], &f);
                }
            }
            r += 1;
        }
    }
    m.truncate(r);
    m
}

fn sub_scaled(target: &mut [BigInt], row: &[BigInt], f: &BigInt) {
    for (t, x) in target.iter_mut().zip(row) {
        if !x.is_zero() {
            *t -= f * x;
        }
    }
}

/// Membership of `v` in the row span of an HNF basis.
pub fn in_span(hnf_rows: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    let mut v = v.to_vec();
    for row in hnf_rows {
        let c = row.iter().position(|x| !x.is_zero()).expect("zero row in HNF");
        if v[..c].iter().any(|x| !x.is_zero()) {
            return false;
        }
        let (f, rem) = v[c].div_rem(&row[c]);
        if !rem.is_zero() {
            return false;
        }
        if !f.is_zero() {
            sub_scaled(&mut v, row, &f);
        }
    }
    v.iter().all(Zero::is_zero)
}
