//! Permutations of [n] in one-line form, composed right to left.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A permutation of {1, ..., n}. Stored 0-based internally; the public text
/// form is the 1-based one-line image sequence, e.g. "2 3 4 5 1".
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    map: Vec<usize>, // map[i] = image of i, 0-based
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { map: (0..n).collect() }
    }

    /// Builds from a 1-based image sequence, validating bijectivity.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut map = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for &v in images {
            if v < 1 || v > n {
                return Err(Error::Input(format!(
                    "image {} out of range 1..={}",
                    v, n
                )));
            }
            if seen[v - 1] {
                return Err(Error::Input(format!("repeated image {}", v)));
            }
            seen[v - 1] = true;
            map.push(v - 1);
        }
        Ok(Permutation { map })
    }

    /// 1-based one-line image sequence.
    pub fn one_line(&self) -> Vec<usize> {
        self.map.iter().map(|&v| v + 1).collect()
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    /// Image of a 0-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    /// Composition `self . other`: apply `other` first (right-to-left).
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::Input(format!(
                "composing permutations of different n: {} vs {}",
                self.n(),
                other.n()
            )));
        }
        Ok(Permutation {
            map: other.map.iter().map(|&i| self.map[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { map: inv }
    }

    /// Disjoint cycles (0-based), each rotated to start at its smallest
    /// element, sorted by that element. Fixed points appear as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.map.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut cur = self.map[start];
            while cur != start {
                seen[cur] = true;
                cyc.push(cur);
                cur = self.map[cur];
            }
            out.push(cyc);
        }
        out
    }

    /// Builds a permutation of [n] from disjoint cycles given 1-based;
    /// points not mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Permutation> {
        let mut map: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cyc in cycles {
            for k in 0..cyc.len() {
                let a = cyc[k];
                let b = cyc[(k + 1) % cyc.len()];
                if a < 1 || a > n || b < 1 || b > n {
                    return Err(Error::input("cycle entry out of range"));
                }
                if touched[a - 1] {
                    return Err(Error::input("cycles not disjoint"));
                }
                touched[a - 1] = true;
                map[a - 1] = b - 1;
            }
        }
        Ok(Permutation { map })
    }

    pub fn cycle_type(&self) -> Partition {
        let lens: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        Partition::new(lens).unwrap_or_else(|_| Partition::empty())
    }

    /// +1 for even permutations, -1 for odd.
    pub fn sign(&self) -> i8 {
        let cycles = self.cycles().len();
        if (self.map.len() - cycles).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    /// All permutations of [n] in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation { map: cur.clone() });
            if !next_lex(&mut cur) {
                break;
            }
        }
        out
    }

    /// Lexicographic index of this permutation within `Permutation::all(n)`,
    /// via the factorial number system.
    pub fn lex_index(&self) -> usize {
        let n = self.map.len();
        let mut idx = 0usize;
        let mut fact = 1usize;
        for k in 2..=n {
            fact *= k;
        }
        let mut remaining: Vec<usize> = (0..n).collect();
        for i in 0..n {
            if n - i > 1 {
                fact /= n - i;
            } else {
                fact = 1;
            }
            let pos = remaining.iter().position(|&v| v == self.map[i]).unwrap();
            idx += pos * fact;
            remaining.remove(pos);
        }
        idx
    }
}

fn next_lex(a: &mut [usize]) -> bool {
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

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.one_line().iter().map(|v| v.to_string()).collect();
        write!(f, "{}", strs.join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Strict parse of the space-separated one-line form "2 3 4 5 1".
    fn from_str(s: &str) -> Result<Self> {
        let images: Vec<usize> = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Input(format!("bad permutation entry: {:?}", tok)))
            })
            .collect::<Result<_>>()?;
        if images.is_empty() {
            return Err(Error::input("empty permutation text"));
        }
        Permutation::from_one_line(&images)
    }
}

/// Decides whether `p` fixes no t-subset of [n] setwise. A set is fixed iff
/// it is a union of cycles, so this is subset-sum over the cycle lengths
/// with a reachability table of size t+1.
pub fn is_t_derangement(p: &Permutation, t: usize) -> bool {
    cycle_type_is_t_derangement(&p.cycle_type(), t)
}

/// Same test on a cycle type directly.
pub fn cycle_type_is_t_derangement(cycle_type: &Partition, t: usize) -> bool {
    if t == 0 {
        return false; // the empty set is always fixed
    }
    let mut reach = vec![false; t + 1];
    reach[0] = true;
    for &len in cycle_type.parts() {
        if len > t {
            continue;
        }
        for s in (0..=(t - len)).rev() {
            if reach[s] {
                reach[s + len] = true;
            }
        }
    }
    !reach[t]
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn parse_compose_invert() {
        let p: Permutation = "2 3 4 5 1".parse().unwrap();
        assert_eq!(p.to_string(), "2 3 4 5 1");
        assert_eq!(p.cycle_type().parts(), &[5]);
        let q = p.inverse();
        let id = p.compose(&q).unwrap();
        assert_eq!(id, Permutation::identity(5));
        assert!("2 2 1".parse::<Permutation>().is_err());
        assert!("0 1".parse::<Permutation>().is_err());
    }

    #[test]
    fn composition_is_right_to_left() {
        // sigma = (1 2), pi = (2 3); (sigma pi)(2) = sigma(pi(2)) = sigma(3) = 3
        let sigma = Permutation::from_one_line(&[2, 1, 3]).unwrap();
        let pi = Permutation::from_one_line(&[1, 3, 2]).unwrap();
        let sp = sigma.compose(&pi).unwrap();
        assert_eq!(sp.one_line(), vec![2, 3, 1]);
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(
            Permutation::identity(4).cycle_type().parts(),
            &[1, 1, 1, 1]
        );
        let p: Permutation = "2 1 4 3".parse().unwrap();
        assert_eq!(p.cycle_type().parts(), &[2, 2]);
    }

    #[test]
    fn from_cycles_round_trip() {
        let p = Permutation::from_cycles(6, &[vec![5, 4, 3]]).unwrap();
        assert_eq!(p.one_line(), vec![1, 2, 5, 3, 4, 6]);
        let q = Permutation::from_cycles(6, &[vec![1, 2, 5, 6]]).unwrap();
        assert_eq!(q.one_line(), vec![2, 5, 3, 4, 6, 1]);
        assert!(Permutation::from_cycles(4, &[vec![1, 2], vec![2, 3]]).is_err());
    }

    #[test]
    fn sign_matches_transposition_count() {
        let p = Permutation::from_cycles(5, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(p.sign(), 1);
        let q = Permutation::from_cycles(5, &[vec![1, 2]]).unwrap();
        assert_eq!(q.sign(), -1);
    }

    #[test]
    fn all_has_size_factorial_and_unique_indices() {
        let all = Permutation::all(5);
        assert_eq!(all.len(), 120);
        let idx: HashSet<usize> = all.iter().map(|p| p.lex_index()).collect();
        assert_eq!(idx.len(), 120);
        for (i, p) in all.iter().enumerate() {
            assert_eq!(p.lex_index(), i);
        }
    }

    #[test]
    fn t_derangement_examples() {
        let five_cycle: Permutation = "2 3 4 5 1".parse().unwrap();
        for t in 1..5 {
            assert!(is_t_derangement(&five_cycle, t));
        }
        let p = Permutation::from_cycles(5, &[vec![1, 2, 3], vec![4, 5]]).unwrap();
        assert!(!is_t_derangement(&p, 2));
        let q = Permutation::from_cycles(6, &[vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        assert!(is_t_derangement(&q, 2));
        assert!(!is_t_derangement(&q, 3));
    }

    #[test]
    fn t_derangement_agrees_with_direct_scan() {
        // direct scan over all t-subsets testing sigma(x) = x
        for p in Permutation::all(6) {
            for t in 1..=3usize {
                let mut fixes = false;
                for mask in 0u32..(1 << 6) {
                    if mask.count_ones() as usize != t {
                        continue;
                    }
                    let image: u32 = (0..6)
                        .filter(|&i| mask & (1 << i) != 0)
                        .map(|i| 1u32 << p.apply(i))
                        .sum();
                    if image == mask {
                        fixes = true;
                        break;
                    }
                }
                assert_eq!(is_t_derangement(&p, t), !fixes, "p={} t={}", p, t);
            }
        }
    }
}
