//! Rank of the span of the set-coset indicator vectors 1_{T_{x->y}} inside
//! the rational group algebra of S_n, by exact Gaussian elimination. The
//! critical-subspace theorem predicts rank = sum_{s=0}^t (f^{(n-s,s)})^2.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// Dense exact elimination over n! coordinates is only sensible for tiny n.
pub const MAX_SPANRANK_N: usize = 7;

/// Builds the C(n,t)^2 indicator vectors of the cosets T_{x->y} (all
/// permutations mapping the t-set x onto the t-set y) in the n!-dimensional
/// rational space, and returns their rank.
pub fn coset_span_rank(n: usize, t: usize) -> Result<usize> {
    if n > MAX_SPANRANK_N {
        return Err(Error::Resource(format!(
            "coset span rank is limited to n <= {}, got n={}",
            MAX_SPANRANK_N, n
        )));
    }
    if t > n {
        return Err(Error::Input(format!("need t <= n, got t={}, n={}", t, n)));
    }
    let dim: usize = (1..=n).product();
    let subsets = t_subsets(n, t);
    // rows kept in echelon form over the integers, gcd-reduced
    let mut basis: Vec<(usize, Vec<BigInt>)> = Vec::new();
    for x in &subsets {
        for y in &subsets {
            let mut v = indicator_vector(n, t, x, y, dim);
            reduce_against_basis(&mut v, &basis);
            if let Some(pivot) = v.iter().position(|c| !c.is_zero()) {
                normalize_row(&mut v);
                let pos = basis
                    .binary_search_by(|(bp, _)| bp.cmp(&pivot))
                    .unwrap_err();
                basis.insert(pos, (pivot, v));
            }
        }
    }
    Ok(basis.len())
}

fn t_subsets(n: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, t: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, t, cur, out);
            cur.pop();
        }
    }
    rec(0, n, t, &mut cur, &mut out);
    out
}

/// 0/1 vector over the lexicographic permutation index, one coordinate per
/// element of S_n, supported on {sigma : sigma(x) = y}.
fn indicator_vector(n: usize, t: usize, x: &[usize], y: &[usize], dim: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::ZERO; dim];
    let rest_dom: Vec<usize> = (0..n).filter(|i| !x.contains(i)).collect();
    let rest_img: Vec<usize> = (0..n).filter(|i| !y.contains(i)).collect();
    let mut x_perm = y.to_vec();
    loop {
        let mut rest_perm = rest_img.clone();
        loop {
            let mut map = vec![0usize; n];
            for (i, &xi) in x.iter().enumerate() {
                map[xi] = x_perm[i];
            }
            for (i, &ri) in rest_dom.iter().enumerate() {
                map[ri] = rest_perm[i];
            }
            let one_line: Vec<usize> = map.iter().map(|&m| m + 1).collect();
            let sigma = Permutation::from_one_line(&one_line).expect("bijection");
            v[sigma.lex_index()] = BigInt::from(1);
            if !next_perm(&mut rest_perm) {
                break;
            }
        }
        if t == 0 || !next_perm(&mut x_perm) {
            break;
        }
    }
    v
}

fn next_perm(a: &mut [usize]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

fn reduce_against_basis(v: &mut [BigInt], basis: &[(usize, Vec<BigInt>)]) {
    for (pivot, row) in basis {
        let coeff = v[*pivot].clone();
        if coeff.is_zero() {
            continue;
        }
        let lead = row[*pivot].clone();
        // v <- lead * v - coeff * row, then gcd-reduce to tame growth
        for (vi, ri) in v.iter_mut().zip(row.iter()) {
            *vi = &*vi * &lead - &coeff * ri;
        }
        let mut g = BigInt::ZERO;
        for c in v.iter() {
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if g > BigInt::from(1) {
            for c in v.iter_mut() {
                *c = &*c / &g;
            }
        }
    }
}

fn normalize_row(v: &mut [BigInt]) {
    let mut g = BigInt::ZERO;
    let mut lead_negative = false;
    for c in v.iter() {
        if !c.is_zero() {
            if g.is_zero() {
                lead_negative = c.is_negative();
            }
            g = g.gcd(c);
        }
    }
    if g.is_zero() {
        return;
    }
    if lead_negative {
        g = -g;
    }
    for c in v.iter_mut() {
        *c = &*c / &g;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use crate::partition::Partition;

    fn predicted(n: usize, t: usize) -> usize {
        let mut acc = BigUint::ZERO;
        for s in 0..=t {
            let lam = if s == 0 {
                Partition::single_row(n)
            } else {
                Partition::new(vec![n - s, s]).unwrap()
            };
            let d = lam.hook_dimension().unwrap();
            acc += &d * &d;
        }
        let digits = acc.to_string();
        digits.parse().unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(coset_span_rank(4, 1).unwrap(), 10);
        assert_eq!(coset_span_rank(5, 2).unwrap(), 42);
        assert_eq!(coset_span_rank(5, 0).unwrap(), 1);
    }

    #[test]
    fn rank_matches_dimension_sum() {
        for n in 2..=6 {
            for t in 0..((n + 1) / 2) {
                assert_eq!(
                    coset_span_rank(n, t).unwrap(),
                    predicted(n, t),
                    "n={} t={}",
                    n,
                    t
                );
            }
        }
    }

    #[test]
    fn rank_matches_dimension_sum_n7() {
        for t in 1..=3 {
            assert_eq!(coset_span_rank(7, t).unwrap(), predicted(7, t), "t={}", t);
        }
    }

    #[test]
    fn ceiling() {
        assert!(coset_span_rank(8, 1).is_err());
    }
}
