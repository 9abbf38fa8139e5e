//! Counts of permutations with no cycle of length <= t, split by parity.
//!
//! Writing E and O for the even/odd counts: below 2t+2 only n-cycles can
//! occur; for 2t+2 <= n <= 3t+2 a permutation with no short cycle has at
//! most two cycles, so the counts follow from the class sizes of the
//! one- and two-cycle types; from 3t+3 on the counts satisfy
//!   E_n = (n-1) * (O_{n-1} + (n-2)(n-3)...(n-t) * X_{n-t-1})
//! where X is E for t even and O for t odd, and symmetrically for O_n.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::factorial;
use crate::partition::{partitions_with_min_part, Partition};
use crate::permutation::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParitySelector {
    Even,
    Odd,
    All,
}

impl ParitySelector {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "even" => Some(ParitySelector::Even),
            "odd" => Some(ParitySelector::Odd),
            "all" => Some(ParitySelector::All),
            _ => None,
        }
    }
}

/// Both counts (E, O) for permutations of [n] with all cycles of length > t.
/// The empty permutation counts as one even permutation.
pub fn no_short_cycle_counts(n: usize, t: usize) -> (BigUint, BigUint) {
    assert!(t >= 1, "t must be at least 1");
    let mut table: Vec<(BigUint, BigUint)> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let entry = if m == 0 {
            (BigUint::one(), BigUint::zero())
        } else if m <= t {
            (BigUint::zero(), BigUint::zero())
        } else if m <= 3 * t + 2 {
            base_counts_by_types(m, t)
        } else {
            // recurrence on m-1 and m-t-1; the tail product is
            // (m-2)(m-3)...(m-t), empty for t = 1
            let mut prod = BigUint::one();
            for j in 2..=t {
                prod *= BigUint::from(m - j);
            }
            let (e1, o1) = table[m - 1].clone();
            let (e2, o2) = table[m - t - 1].clone();
            let (tail_for_e, tail_for_o) = if t.is_multiple_of(2) { (e2, o2) } else { (o2, e2) };
            let factor = BigUint::from(m - 1);
            let e = &factor * (o1 + &prod * tail_for_e);
            let o = &factor * (e1 + &prod * tail_for_o);
            (e, o)
        };
        table.push(entry);
    }
    table.pop().unwrap()
}

/// For t < m <= 3t+2 every qualifying permutation has at most two cycles,
/// so sum class sizes of the qualifying cycle types directly. This realizes
/// the base classification: n-cycles carry parity (-1)^(m-1), two-cycle
/// types carry (-1)^m.
fn base_counts_by_types(m: usize, t: usize) -> (BigUint, BigUint) {
    let mut even = BigUint::zero();
    let mut odd = BigUint::zero();
    for ct in partitions_with_min_part(m, t + 1) {
        debug_assert!(ct.len() <= 2);
        let size = ct.class_size();
        if ct.class_sign() == 1 {
            even += size;
        } else {
            odd += size;
        }
    }
    (even, odd)
}

/// The selected count: E, O, or D = E + O.
pub fn count_no_short_cycles(n: usize, t: usize, parity: ParitySelector) -> BigUint {
    let (e, o) = no_short_cycle_counts(n, t);
    match parity {
        ParitySelector::Even => e,
        ParitySelector::Odd => o,
        ParitySelector::All => e + o,
    }
}

/// Independent oracle: enumerate S_n and count directly.
pub fn brute_force_no_short_cycle_counts(n: usize, t: usize) -> (BigUint, BigUint) {
    let mut even = BigUint::zero();
    let mut odd = BigUint::zero();
    for p in Permutation::all(n) {
        let ct: Partition = p.cycle_type();
        if ct.parts().iter().all(|&len| len > t) {
            if ct.class_sign() == 1 {
                even += 1u32;
            } else {
                odd += 1u32;
            }
        }
    }
    (even, odd)
}

/// The lower-bound constant: min{E, O} >= 2 n! / (3t+2)^2 for n >= 2t+2.
pub fn min_parity_lower_bound(n: usize, t: usize) -> (BigUint, BigUint) {
    // returned as (2 * n!, (3t+2)^2); caller compares min{E,O} * (3t+2)^2 >= 2 n!
    let denom = BigUint::from((3 * t + 2) * (3 * t + 2));
    (BigUint::from(2u32) * factorial(n), denom)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_values() {
        let (e, o) = no_short_cycle_counts(4, 1);
        assert_eq!(e, BigUint::from(3u32));
        assert_eq!(o, BigUint::from(6u32));
        assert_eq!(
            count_no_short_cycles(4, 1, ParitySelector::All),
            BigUint::from(9u32)
        );
        let (e, o) = no_short_cycle_counts(5, 2);
        assert_eq!(e, BigUint::from(24u32));
        assert_eq!(o, BigUint::zero());
        let (e, o) = no_short_cycle_counts(5, 1);
        assert_eq!(e, BigUint::from(24u32));
        assert_eq!(o, BigUint::from(20u32));
    }

    #[test]
    fn empty_and_tiny_cases() {
        assert_eq!(no_short_cycle_counts(0, 1), (BigUint::one(), BigUint::zero()));
        assert_eq!(no_short_cycle_counts(1, 1), (BigUint::zero(), BigUint::zero()));
        assert_eq!(no_short_cycle_counts(2, 2), (BigUint::zero(), BigUint::zero()));
        // n = 3, t = 2: only 3-cycles, which are even
        assert_eq!(
            no_short_cycle_counts(3, 2),
            (BigUint::from(2u32), BigUint::zero())
        );
    }

    #[test]
    fn recurrence_matches_brute_force() {
        for n in 0..=8 {
            for t in 1..=3 {
                assert_eq!(
                    no_short_cycle_counts(n, t),
                    brute_force_no_short_cycle_counts(n, t),
                    "n={} t={}",
                    n,
                    t
                );
            }
        }
    }

    #[test]
    fn parity_lower_bound() {
        for t in 1..=3usize {
            for n in (2 * t + 2)..=8 {
                let (e, o) = no_short_cycle_counts(n, t);
                let m = e.min(o);
                let (num, den) = min_parity_lower_bound(n, t);
                assert!(m * den >= num, "n={} t={}", n, t);
            }
        }
    }
}
