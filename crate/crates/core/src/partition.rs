//! Integer partitions: canonical non-increasing form, dominance and
//! lexicographic orders, transposition, hook lengths, conjugacy-class sizes
//! and the fat/tall/medium/critical classification.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::factorial;
use crate::error::{Error, Result};

/// A partition of `n`: positive parts stored in non-increasing order.
/// The empty partition is the unique partition of 0. Also used as a cycle
/// type, in which case each part is a cycle length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

impl Partition {
    /// Builds a partition from arbitrary positive parts, normalizing to
    /// non-increasing order. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::input("partition parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new(), n: 0 }
    }

    pub fn single_row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n], n }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at 1-based index `i`, reading 0 beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    fn check_same_n(&self, other: &Partition) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Input(format!(
                "partitions of different n: {} vs {}",
                self.n, other.n
            )));
        }
        Ok(())
    }

    /// Dominance order: every prefix sum of `self` is >= the corresponding
    /// prefix sum of `other` (missing parts read as 0).
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        self.check_same_n(other)?;
        let len = self.parts.len().max(other.parts.len());
        let mut acc_l = 0usize;
        let mut acc_r = 0usize;
        for i in 1..=len {
            acc_l += self.part(i);
            acc_r += other.part(i);
            if acc_l < acc_r {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Lexicographic comparison by first differing part; a total order on
    /// partitions of the same `n` refining dominance.
    pub fn lex_compare(&self, other: &Partition) -> Result<Ordering> {
        self.check_same_n(other)?;
        Ok(self.parts.cmp(&other.parts))
    }

    /// Column lengths of the Young diagram. An involution.
    pub fn transpose(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0];
        let mut t = Vec::with_capacity(cols);
        for j in 1..=cols {
            t.push(self.parts.iter().take_while(|&&p| p >= j).count());
        }
        Partition { parts: t, n: self.n }
    }

    /// Hook lengths of all cells, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let tr = self.transpose();
        let mut hooks = Vec::with_capacity(self.n);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 1..=row {
                hooks.push((row - j) + (tr.parts[j - 1] - (i + 1)) + 1);
            }
        }
        hooks
    }

    /// Dimension of the irreducible representation labelled by this
    /// partition: n! divided by the product of all hook lengths.
    pub fn hook_dimension(&self) -> Result<BigUint> {
        let mut prod = BigUint::one();
        for h in self.hook_lengths() {
            prod *= BigUint::from(h);
        }
        let fact = factorial(self.n);
        let (q, r) = num_integer::Integer::div_rem(&fact, &prod);
        if r != BigUint::ZERO {
            return Err(Error::Internal(format!(
                "hook product does not divide {}! for {}",
                self.n, self
            )));
        }
        Ok(q)
    }

    /// Size of the conjugacy class with this cycle type:
    /// n! / prod_j (j^{a_j} * a_j!) where a_j is the multiplicity of part j.
    pub fn class_size(&self) -> BigUint {
        let mut centralizer = BigUint::one();
        let mut i = 0;
        while i < self.parts.len() {
            let part = self.parts[i];
            let mut mult = 0usize;
            while i < self.parts.len() && self.parts[i] == part {
                mult += 1;
                i += 1;
            }
            centralizer *= BigUint::from(part).pow(mult as u32);
            centralizer *= factorial(mult);
        }
        factorial(self.n) / centralizer
    }

    /// Parity of any permutation with this cycle type: +1 even, -1 odd.
    pub fn class_sign(&self) -> i8 {
        if (self.n - self.parts.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Multiplicities of parts as (part, count), descending by part.
    pub fn part_multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let part = self.parts[i];
            let mut mult = 0usize;
            while i < self.parts.len() && self.parts[i] == part {
                mult += 1;
                i += 1;
            }
            out.push((part, mult));
        }
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Strict parse of the comma-separated text form, e.g. "3,2,2".
    /// Rejects non-canonical (increasing or zero) part lists rather than
    /// silently normalizing. The empty string parses to the partition of 0.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let p: usize = tok
                .trim()
                .parse()
                .map_err(|_| Error::Input(format!("bad partition part: {:?}", tok)))?;
            if p == 0 {
                return Err(Error::Input(format!("zero part in partition: {:?}", s)));
            }
            parts.push(p);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Input(format!(
                "partition parts not non-increasing: {:?}",
                s
            )));
        }
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    partitions_with_min_part(n, 1)
}

/// All partitions of `n` with every part >= `min`, decreasing lex order.
pub fn partitions_with_min_part(n: usize, min: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    gen_parts(n, n, min, &mut prefix, &mut out);
    out
}

fn gen_parts(
    rem: usize,
    max: usize,
    min: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if rem == 0 {
        out.push(Partition { parts: prefix.clone(), n: prefix.iter().sum() });
        return;
    }
    let hi = rem.min(max);
    if hi < min {
        return;
    }
    for part in (min..=hi).rev() {
        prefix.push(part);
        gen_parts(rem - part, part, min, prefix, out);
        prefix.pop();
    }
}

/// Fat partitions F_{n,k}: partitions of n with first part >= n-k, in
/// decreasing lexicographic order.
pub fn fat_partitions(n: usize, k: usize) -> Result<Vec<Partition>> {
    if n < k + 1 {
        return Err(Error::Input(format!(
            "fat index set needs n >= k+1, got n={}, k={}",
            n, k
        )));
    }
    Ok(partitions_of(n)
        .into_iter()
        .filter(|p| p.part(1) >= n - k)
        .collect())
}

/// The four partition categories used by the weight construction, relative
/// to a fixed t. A partition can satisfy both the fat and tall predicates
/// near n = 2t+1, so the raw flags are carried alongside the single `kind`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionKind {
    Critical,
    FatNoncritical,
    Tall,
    Medium,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionClass {
    pub kind: PartitionKind,
    pub is_fat: bool,
    pub is_tall: bool,
    pub is_critical: bool,
}

/// Classifies `lam` relative to `t`. Requires n > 2t so that the fat and
/// tall families are disjoint apart from the hook (t+1, 1^t) at n = 2t+1.
pub fn classify(lam: &Partition, t: usize) -> Result<PartitionClass> {
    let n = lam.n();
    if n <= 2 * t {
        return Err(Error::Input(format!(
            "classification needs n > 2t, got n={}, t={}",
            n, t
        )));
    }
    let is_fat = lam.part(1) >= n - t;
    let is_tall = lam.len() >= n - t;
    let is_critical = lam.len() <= 2 && lam.part(2) <= t;
    let kind = if is_critical {
        PartitionKind::Critical
    } else if is_fat {
        PartitionKind::FatNoncritical
    } else if is_tall {
        PartitionKind::Tall
    } else {
        PartitionKind::Medium
    };
    Ok(PartitionClass { kind, is_fat, is_tall, is_critical })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn parse_and_display() {
        let x: Partition = "3,2,2".parse().unwrap();
        assert_eq!(x.parts(), &[3, 2, 2]);
        assert_eq!(x.n(), 7);
        assert_eq!(x.to_string(), "3,2,2");
        assert!("2,3".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])).unwrap());
        assert!(!p(&[2, 2]).dominates(&p(&[3, 1])).unwrap());
        // incomparable pair
        assert!(!p(&[4, 1, 1]).dominates(&p(&[3, 3])).unwrap());
        assert!(!p(&[3, 3]).dominates(&p(&[4, 1, 1])).unwrap());
        assert!(p(&[3, 1]).dominates(&p(&[5, 1])).is_err());
    }

    #[test]
    fn lex_examples() {
        let n = 6;
        let all = partitions_of(n);
        assert_eq!(all[0], Partition::single_row(n));
        assert_eq!(all[all.len() - 1], p(&[1, 1, 1, 1, 1, 1]));
        assert_eq!(
            p(&[3, 2, 2]).lex_compare(&p(&[3, 2, 1, 1])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn lex_refines_dominance_exhaustive() {
        for n in 0..=10 {
            let all = partitions_of(n);
            for a in &all {
                for b in &all {
                    if a != b && a.dominates(b).unwrap() {
                        assert_eq!(a.lex_compare(b).unwrap(), Ordering::Greater);
                    }
                }
            }
        }
    }

    #[test]
    fn dominance_is_partial_order() {
        for n in 0..=10 {
            let all = partitions_of(n);
            for a in &all {
                assert!(a.dominates(a).unwrap());
                for b in &all {
                    if a.dominates(b).unwrap() && b.dominates(a).unwrap() {
                        assert_eq!(a, b);
                    }
                    for c in &all {
                        if a.dominates(b).unwrap()
                            && b.dominates(c).unwrap()
                            && !a.dominates(c).unwrap()
                        {
                            panic!("dominance not transitive at n={}", n);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[5]).transpose(), p(&[1, 1, 1, 1, 1]));
        assert_eq!(p(&[3, 2, 2]).transpose(), p(&[3, 3, 1]));
        assert_eq!(p(&[2, 2]).transpose(), p(&[2, 2]));
        for n in 0..=10 {
            for lam in partitions_of(n) {
                assert_eq!(lam.transpose().transpose(), lam);
            }
        }
    }

    #[test]
    fn hook_dimension_examples() {
        assert_eq!(p(&[7]).hook_dimension().unwrap(), BigUint::one());
        for n in 2..=9 {
            let mut parts = vec![n - 1, 1];
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let lam = Partition::new(parts).unwrap();
            assert_eq!(lam.hook_dimension().unwrap(), BigUint::from(n - 1));
        }
        assert_eq!(p(&[2, 2]).hook_dimension().unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn hook_dimension_transpose_invariant_and_sum_of_squares() {
        for n in 0..=10 {
            let mut total = BigUint::ZERO;
            for lam in partitions_of(n) {
                let d = lam.hook_dimension().unwrap();
                assert_eq!(d, lam.transpose().hook_dimension().unwrap());
                total += &d * &d;
            }
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 0..=10 {
            let total: BigUint = partitions_of(n).iter().map(|p| p.class_size()).sum();
            assert_eq!(total, factorial(n));
        }
        assert_eq!(p(&[4]).class_size(), BigUint::from(6u32));
        assert_eq!(p(&[1, 1, 1, 1]).class_size(), BigUint::one());
        assert_eq!(p(&[2, 2]).class_size(), BigUint::from(3u32));
    }

    #[test]
    fn classify_examples() {
        // (n-1, 1) is critical for t = 2
        let lam = p(&[7, 1]);
        let c = classify(&lam, 2).unwrap();
        assert_eq!(c.kind, PartitionKind::Critical);
        assert!(c.is_fat);
        // (1^n) is tall
        let lam = p(&[1, 1, 1, 1, 1, 1, 1, 1]);
        let c = classify(&lam, 2).unwrap();
        assert_eq!(c.kind, PartitionKind::Tall);
        // (n-3, 3) with t=2 is medium for n >= 7
        let lam = p(&[4, 3]);
        let c = classify(&lam, 2).unwrap();
        assert_eq!(c.kind, PartitionKind::Medium);
        // n <= 2t rejected
        assert!(classify(&p(&[2, 2]), 2).is_err());
        // hook shape at n = 2t+1 is both fat and tall; critical wins the kind
        let c = classify(&p(&[3, 1, 1]), 2).unwrap();
        assert!(c.is_fat && c.is_tall);
        assert_eq!(c.kind, PartitionKind::FatNoncritical);
    }

    #[test]
    fn fat_partition_counts() {
        // q_k = sum of p_s for s <= k once n >= 2k
        assert_eq!(fat_partitions(9, 2).unwrap().len(), 4);
        assert_eq!(fat_partitions(9, 3).unwrap().len(), 7);
        assert!(fat_partitions(2, 3).is_err());
    }
}
