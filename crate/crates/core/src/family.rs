//! Families of permutations, pointwise and setwise cosets, the setwise
//! agreement relation, and the Katona-style averaging certificate.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::arith::{binomial, factorial};
use crate::error::{Error, Result};
use crate::permutation::{is_t_derangement, Permutation};

/// T_{a->b}: permutations mapping the tuple a to the tuple b pointwise.
/// Stored 0-based and sorted by domain point; the pair lists stay parallel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TCoset {
    n: usize,
    domain: Vec<usize>,
    image: Vec<usize>,
}

impl TCoset {
    /// Builds from 1-based tuples of distinct points.
    pub fn new(n: usize, a: &[usize], b: &[usize]) -> Result<Self> {
        if a.len() != b.len() || a.is_empty() {
            return Err(Error::input("coset tuples must have equal positive length"));
        }
        let mut pairs = Vec::with_capacity(a.len());
        for (&ai, &bi) in a.iter().zip(b.iter()) {
            if ai < 1 || ai > n || bi < 1 || bi > n {
                return Err(Error::Input(format!(
                    "coset entry out of range 1..={}: {}->{}",
                    n, ai, bi
                )));
            }
            pairs.push((ai - 1, bi - 1));
        }
        pairs.sort_unstable();
        let domain: Vec<usize> = pairs.iter().map(|p| p.0).collect();
        let image: Vec<usize> = pairs.iter().map(|p| p.1).collect();
        if domain.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::input("coset domain entries must be distinct"));
        }
        let mut img_sorted = image.clone();
        img_sorted.sort_unstable();
        if img_sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::input("coset image entries must be distinct"));
        }
        Ok(TCoset { n, domain, image })
    }

    /// The standard coset T_{(1..t) -> (1..t)}, the pointwise stabilizer.
    pub fn standard(n: usize, t: usize) -> Result<Self> {
        let tuple: Vec<usize> = (1..=t).collect();
        TCoset::new(n, &tuple, &tuple)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.domain.len()
    }

    /// 0-based (domain, image) pairs sorted by domain.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.domain.iter().copied().zip(self.image.iter().copied())
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.n() == self.n && self.pairs().all(|(a, b)| p.apply(a) == b)
    }

    /// All (n-t)! members, in lexicographic order of the free points'
    /// images.
    pub fn members(&self) -> Vec<Permutation> {
        let free_dom: Vec<usize> = (0..self.n).filter(|i| !self.domain.contains(i)).collect();
        let free_img: Vec<usize> = {
            let mut used = vec![false; self.n];
            for &b in &self.image {
                used[b] = true;
            }
            (0..self.n).filter(|&i| !used[i]).collect()
        };
        let mut out = Vec::new();
        let k = free_dom.len();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let mut map = vec![0usize; self.n];
            for (a, b) in self.pairs() {
                map[a] = b;
            }
            for (i, &d) in free_dom.iter().enumerate() {
                map[d] = free_img[idx[i]];
            }
            let one_line: Vec<usize> = map.iter().map(|&v| v + 1).collect();
            out.push(Permutation::from_one_line(&one_line).expect("bijection"));
            if !next_index_perm(&mut idx) {
                break;
            }
        }
        out
    }

    /// The inverse coset T_{b->a}.
    pub fn inverse(&self) -> TCoset {
        let a: Vec<usize> = self.image.iter().map(|&v| v + 1).collect();
        let b: Vec<usize> = self.domain.iter().map(|&v| v + 1).collect();
        TCoset::new(self.n, &a, &b).expect("valid coset")
    }

    /// Whether every member maps the set [t] = {1..t} onto itself. True
    /// exactly when (domain = image = [t]) or, for n = 2t, when
    /// domain = image = complement of [t].
    pub fn maps_first_t_setwise(&self) -> bool {
        let t = self.t();
        let in_t = |v: usize| v < t;
        let dom_inside = self.domain.iter().all(|&a| in_t(a));
        let img_inside = self.image.iter().all(|&b| in_t(b));
        if dom_inside && img_inside {
            return true;
        }
        if self.n == 2 * t {
            let dom_outside = self.domain.iter().all(|&a| !in_t(a));
            let img_outside = self.image.iter().all(|&b| !in_t(b));
            if dom_outside && img_outside {
                return true;
            }
        }
        false
    }
}

/// T_{x->y}: permutations mapping the t-set x onto the t-set y. A disjoint
/// union of t! pointwise cosets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TSetCoset {
    n: usize,
    x: Vec<usize>,
    y: Vec<usize>,
}

impl TSetCoset {
    /// Builds from 1-based sets.
    pub fn new(n: usize, x: &[usize], y: &[usize]) -> Result<Self> {
        if x.len() != y.len() || x.is_empty() {
            return Err(Error::input("set coset sides must have equal positive size"));
        }
        let mut xv: Vec<usize> = x.iter().map(|&v| v - 1).collect();
        let mut yv: Vec<usize> = y.iter().map(|&v| v - 1).collect();
        xv.sort_unstable();
        yv.sort_unstable();
        if xv.windows(2).any(|w| w[0] == w[1])
            || yv.windows(2).any(|w| w[0] == w[1])
            || xv.iter().any(|&v| v >= n)
            || yv.iter().any(|&v| v >= n)
        {
            return Err(Error::input("set coset sides must be t-subsets of [n]"));
        }
        Ok(TSetCoset { n, x: xv, y: yv })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.x.len()
    }

    /// 1-based sorted views.
    pub fn x_set(&self) -> Vec<usize> {
        self.x.iter().map(|&v| v + 1).collect()
    }

    pub fn y_set(&self) -> Vec<usize> {
        self.y.iter().map(|&v| v + 1).collect()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        if p.n() != self.n {
            return false;
        }
        let mut img: Vec<usize> = self.x.iter().map(|&i| p.apply(i)).collect();
        img.sort_unstable();
        img == self.y
    }

    pub fn members(&self) -> Vec<Permutation> {
        let x1: Vec<usize> = self.x.iter().map(|&v| v + 1).collect();
        let y1: Vec<usize> = self.y.iter().map(|&v| v + 1).collect();
        let mut out = Vec::new();
        let mut y_perm = y1.clone();
        loop {
            let coset = TCoset::new(self.n, &x1, &y_perm).expect("valid coset");
            out.extend(coset.members());
            if !next_index_perm_vals(&mut y_perm) {
                break;
            }
        }
        out.sort();
        out
    }

    pub fn family(&self) -> Family {
        Family::from_members(self.n, self.members()).expect("coset family")
    }
}

fn next_index_perm(a: &mut Vec<usize>) -> bool {
    next_index_perm_vals(a)
}

fn next_index_perm_vals<T: Ord + Copy>(a: &mut Vec<T>) -> bool {
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

/// A set of permutations of a common [n], kept in sorted order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    n: usize,
    members: BTreeSet<Permutation>,
}

impl Family {
    pub fn new(n: usize) -> Self {
        Family { n, members: BTreeSet::new() }
    }

    pub fn from_members(n: usize, members: impl IntoIterator<Item = Permutation>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for m in members {
            if m.n() != n {
                return Err(Error::Input(format!(
                    "member of S_{} in a family over S_{}",
                    m.n(),
                    n
                )));
            }
            set.insert(m);
        }
        Ok(Family { n, members: set })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.members.contains(p)
    }

    pub fn insert(&mut self, p: Permutation) -> Result<()> {
        if p.n() != self.n {
            return Err(Error::input("member has the wrong n"));
        }
        self.members.insert(p);
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = &Permutation> {
        self.members.iter()
    }

    /// Left translate g . F = {g sigma : sigma in F}.
    pub fn translate(&self, g: &Permutation) -> Result<Family> {
        let members: Vec<Permutation> = self
            .members
            .iter()
            .map(|m| g.compose(m))
            .collect::<Result<_>>()?;
        Family::from_members(self.n, members)
    }

    /// Every pair of members setwise agrees on some t-set.
    pub fn is_pairwise_agreeing(&self, t: usize) -> Result<bool> {
        let v: Vec<&Permutation> = self.members.iter().collect();
        for i in 0..v.len() {
            for j in (i + 1)..v.len() {
                if !setwise_agree(v[i], v[j], t)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// One permutation per line in one-line notation.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for m in &self.members {
            s.push_str(&m.to_string());
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Family> {
        let mut members = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            members.push(line.parse::<Permutation>()?);
        }
        if members.is_empty() {
            return Err(Error::input("family text contains no permutations"));
        }
        let n = members[0].n();
        if members.iter().any(|m| m.n() != n) {
            return Err(Error::input("family members have differing n"));
        }
        Family::from_members(n, members)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "members": self.members.iter().map(|m| m.one_line()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Family> {
        let n = v
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::input("family JSON missing n"))? as usize;
        let arr = v
            .get("members")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::input("family JSON missing members"))?;
        let mut members = Vec::new();
        for item in arr {
            let images: Vec<usize> = item
                .as_array()
                .ok_or_else(|| Error::input("family member must be an array"))?
                .iter()
                .map(|x| {
                    x.as_u64()
                        .map(|v| v as usize)
                        .ok_or_else(|| Error::input("family member entry must be an integer"))
                })
                .collect::<Result<_>>()?;
            if images.len() != n {
                return Err(Error::input("family member has the wrong length"));
            }
            members.push(Permutation::from_one_line(&images)?);
        }
        Family::from_members(n, members)
    }
}

/// Whether some t-set has the same image under both permutations, i.e.
/// q^{-1} p fixes a t-set.
pub fn setwise_agree(p: &Permutation, q: &Permutation, t: usize) -> Result<bool> {
    if p.n() != q.n() {
        return Err(Error::Input(format!(
            "permutations of different n: {} vs {}",
            p.n(),
            q.n()
        )));
    }
    let diff = q.inverse().compose(p)?;
    Ok(!is_t_derangement(&diff, t))
}

/// Recognizes an exact set-stabilizer coset: returns (x, y) iff the family
/// equals T_{x->y}, which forces size t!(n-t)!.
pub fn is_tset_coset(f: &Family, t: usize) -> Option<TSetCoset> {
    let n = f.n();
    if t == 0 || t > n || f.is_empty() {
        return None;
    }
    let expected = factorial(t) * factorial(n - t);
    if BigUint::from(f.len()) != expected {
        return None;
    }
    let first = f.iter().next().unwrap();
    for x in t_subsets_range(n, t) {
        let mut y: Vec<usize> = x.iter().map(|&i| first.apply(i)).collect();
        y.sort_unstable();
        let all_match = f.iter().all(|p| {
            let mut img: Vec<usize> = x.iter().map(|&i| p.apply(i)).collect();
            img.sort_unstable();
            img == y
        });
        if all_match {
            let x1: Vec<usize> = x.iter().map(|&v| v + 1).collect();
            let y1: Vec<usize> = y.iter().map(|&v| v + 1).collect();
            return TSetCoset::new(n, &x1, &y1).ok();
        }
    }
    None
}

fn t_subsets_range(n: usize, t: usize) -> Vec<Vec<usize>> {
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

/// If the family is a disjoint union of pointwise t-cosets, returns one
/// such decomposition (backtracking through the smallest member each time).
pub fn tcoset_decompose(f: &Family, t: usize) -> Option<Vec<TCoset>> {
    let n = f.n();
    if t == 0 || t > n {
        return None;
    }
    let coset_size_big = factorial(n - t);
    let coset_size: usize = coset_size_big.to_string().parse().ok()?;
    if !f.len().is_multiple_of(coset_size) {
        return None;
    }
    let mut remaining: BTreeSet<Permutation> = f.iter().cloned().collect();
    let mut acc = Vec::new();
    if decompose_rec(&mut remaining, n, t, &mut acc) {
        Some(acc)
    } else {
        None
    }
}

fn decompose_rec(
    remaining: &mut BTreeSet<Permutation>,
    n: usize,
    t: usize,
    acc: &mut Vec<TCoset>,
) -> bool {
    let sigma = match remaining.iter().next() {
        Some(s) => s.clone(),
        None => return true,
    };
    for dom in t_subsets_range(n, t) {
        let a: Vec<usize> = dom.iter().map(|&v| v + 1).collect();
        let b: Vec<usize> = dom.iter().map(|&v| sigma.apply(v) + 1).collect();
        let coset = match TCoset::new(n, &a, &b) {
            Ok(c) => c,
            Err(_) => continue,
        };
        let members = coset.members();
        if members.iter().all(|m| remaining.contains(m)) {
            for m in &members {
                remaining.remove(m);
            }
            acc.push(coset);
            if decompose_rec(remaining, n, t, acc) {
                return true;
            }
            let coset = acc.pop().unwrap();
            let _ = coset;
            for m in members {
                remaining.insert(m);
            }
        }
    }
    false
}

/// For every ordered pair of t-subsets (x, y), exactly one member maps x
/// onto y. Forces |f| = C(n,t).
pub fn verify_sharply_set_transitive(f: &Family, t: usize) -> bool {
    let n = f.n();
    if t == 0 || t > n {
        return false;
    }
    let subsets = t_subsets_range(n, t);
    let index_of = |set: &[usize]| -> usize {
        subsets.binary_search_by(|probe| probe.as_slice().cmp(set)).unwrap()
    };
    let m = subsets.len();
    let mut counts = vec![0usize; m * m];
    for p in f.iter() {
        for (xi, x) in subsets.iter().enumerate() {
            let mut img: Vec<usize> = x.iter().map(|&i| p.apply(i)).collect();
            img.sort_unstable();
            counts[xi * m + index_of(&img)] += 1;
        }
    }
    counts.iter().all(|&c| c == 1)
}

/// The averaging bound t!(n-t)! = n!/C(n,t), certified by a sharply
/// t-set-transitive family: each of its left translates meets any
/// t-set-intersecting family at most once.
pub fn averaging_bound(f: &Family, t: usize) -> Result<BigUint> {
    if !verify_sharply_set_transitive(f, t) {
        return Err(Error::input(
            "certificate family is not sharply t-set-transitive",
        ));
    }
    let n = f.n();
    Ok(factorial(n) / binomial(n, t))
}

/// The ten-permutation sharply 2-set-transitive subset of S_5: the cyclic
/// shifts of 1 2 3 4 5 and of 1 3 5 2 4.
pub fn s5_sharp_two_set_transitive() -> Family {
    let rows = [
        [1, 2, 3, 4, 5],
        [2, 3, 4, 5, 1],
        [3, 4, 5, 1, 2],
        [4, 5, 1, 2, 3],
        [5, 1, 2, 3, 4],
        [1, 3, 5, 2, 4],
        [2, 4, 1, 3, 5],
        [3, 5, 2, 4, 1],
        [4, 1, 3, 5, 2],
        [5, 2, 4, 1, 3],
    ];
    let members: Vec<Permutation> = rows
        .iter()
        .map(|r| Permutation::from_one_line(r).unwrap())
        .collect();
    Family::from_members(5, members).unwrap()
}

/// The Klein-type extremal family of S_4 at t = 2: the identity and the
/// three double transpositions.
pub fn klein_family() -> Family {
    let members = vec![
        Permutation::identity(4),
        Permutation::from_cycles(4, &[vec![1, 2], vec![3, 4]]).unwrap(),
        Permutation::from_cycles(4, &[vec![1, 3], vec![2, 4]]).unwrap(),
        Permutation::from_cycles(4, &[vec![1, 4], vec![2, 3]]).unwrap(),
    ];
    Family::from_members(4, members).unwrap()
}
