//! Kostka numbers: counts of semistandard generalized tableaux of a given
//! shape and content, computed by peeling horizontal strips.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// K_{lam,mu}: the number of fillings of the Young diagram of `lam` with
/// mu_i copies of i, non-decreasing along rows and strictly increasing down
/// columns. Content given as a non-partition composition should be sorted
/// into a partition first (Kostka numbers are symmetric in content);
/// `Partition` guarantees that here.
///
/// Cells holding entries <= i always form a subdiagram, and the cells
/// holding exactly i form a horizontal strip, so the count is a sum over
/// chains of shapes growing by horizontal strips of sizes mu_1, mu_2, ...
pub fn kostka(lam: &Partition, mu: &Partition) -> Result<BigUint> {
    if lam.n() != mu.n() {
        return Err(Error::Input(format!(
            "kostka on partitions of different n: {} vs {}",
            lam.n(),
            mu.n()
        )));
    }
    // cheap dominance filter; also covers the empty case
    if !lam.dominates(mu)? {
        return Ok(BigUint::zero());
    }
    let mut memo: HashMap<(Vec<usize>, usize), BigUint> = HashMap::new();
    Ok(count_chains(lam.parts(), mu.parts().len(), mu.parts(), &mut memo))
}

/// Number of ways to build `shape` from the empty shape by adding
/// horizontal strips of sizes content[0..k], in order.
fn count_chains(
    shape: &[usize],
    k: usize,
    content: &[usize],
    memo: &mut HashMap<(Vec<usize>, usize), BigUint>,
) -> BigUint {
    if k == 0 {
        return if shape.is_empty() { BigUint::one() } else { BigUint::zero() };
    }
    let key = (shape.to_vec(), k);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let strip = content[k - 1];
    let mut total = BigUint::zero();
    let mut prev = Vec::with_capacity(shape.len());
    sum_over_strip_removals(shape, 0, strip, &mut prev, k, content, memo, &mut total);
    memo.insert(key, total.clone());
    total
}

/// Enumerates shapes `prev` obtained from `shape` by removing a horizontal
/// strip of the given size: shape_i >= prev_i >= shape_{i+1} per row.
#[allow(clippy::too_many_arguments)]
fn sum_over_strip_removals(
    shape: &[usize],
    row: usize,
    remaining: usize,
    prev: &mut Vec<usize>,
    k: usize,
    content: &[usize],
    memo: &mut HashMap<(Vec<usize>, usize), BigUint>,
    total: &mut BigUint,
) {
    if row == shape.len() {
        if remaining == 0 {
            let trimmed: Vec<usize> = prev.iter().copied().filter(|&p| p > 0).collect();
            *total += count_chains(&trimmed, k - 1, content, memo);
        }
        return;
    }
    let lo = if row + 1 < shape.len() { shape[row + 1] } else { 0 };
    let hi = shape[row];
    for new_len in lo..=hi {
        let removed = hi - new_len;
        if removed > remaining {
            continue;
        }
        prev.push(new_len);
        sum_over_strip_removals(shape, row + 1, remaining - removed, prev, k, content, memo, total);
        prev.pop();
    }
}
