//! Brute-force search for maximum t-set-intersecting families: maximum
//! cliques in the agreement graph on S_n (vertices are permutations, edges
//! are pairs agreeing on some t-set).
//!
//! The agreement relation is left-invariant, so the graph is
//! vertex-transitive and some maximum clique contains the identity; the
//! search pins it. The set-stabilizer coset through the identity seeds the
//! incumbent, and when the weighted spectrum certifies the Delsarte bound
//! t!(n-t)! the search can stop at that size.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::arith::{factorial, rat_from_uint};
use crate::error::{Error, Result};
use crate::family::{is_tset_coset, Family, TSetCoset};
use crate::permutation::{is_t_derangement, Permutation};
use crate::weights::solve_weights;

pub const MAX_SEARCH_N: usize = 6;
pub const MAX_SEARCH_N_EXTENDED: usize = 7;
pub const MAX_ENUMERATE_N: usize = 5;

#[derive(Clone, PartialEq, Eq)]
struct Bits {
    words: Vec<u64>,
}

impl Bits {
    fn empty(n: usize) -> Self {
        Bits { words: vec![0; n.div_ceil(64)] }
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    fn and_not_in_place(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }
}

/// Agreement adjacency among an explicit vertex list (no self-loops).
fn build_adjacency(vertices: &[Permutation], t: usize) -> Result<Vec<Bits>> {
    let m = vertices.len();
    let inverses: Vec<Permutation> = vertices.iter().map(|p| p.inverse()).collect();
    let mut adj = vec![Bits::empty(m); m];
    for i in 0..m {
        for j in (i + 1)..m {
            let diff = inverses[j].compose(&vertices[i])?;
            if !is_t_derangement(&diff, t) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    Ok(adj)
}

/// Greedy coloring of the candidate set: vertices listed in nondecreasing
/// color, where each color class is independent in the graph. A clique
/// meets each class at most once, so color numbers bound extensions.
fn color_order(p: &Bits, adj: &[Bits]) -> Vec<(usize, usize)> {
    let mut order = Vec::new();
    let mut uncolored = p.clone();
    let mut color = 0usize;
    while !uncolored.is_empty() {
        color += 1;
        let mut candidates = uncolored.clone();
        while let Some(v) = candidates.first() {
            candidates.remove(v);
            uncolored.remove(v);
            order.push((v, color));
            candidates.and_not_in_place(&adj[v]);
        }
    }
    order
}

struct CliqueSearch<'a> {
    adj: &'a [Bits],
    best_size: usize,
    best: Option<Vec<usize>>,
    cutoff: Option<usize>,
    done: bool,
}

impl<'a> CliqueSearch<'a> {
    fn expand(&mut self, r: &mut Vec<usize>, p: Bits) {
        if self.done {
            return;
        }
        if let Some(c) = self.cutoff {
            if self.best_size >= c {
                self.done = true;
                return;
            }
        }
        let order = color_order(&p, self.adj);
        let mut p = p;
        for &(v, color) in order.iter().rev() {
            if r.len() + color <= self.best_size {
                return;
            }
            r.push(v);
            let p_next = p.and(&self.adj[v]);
            if p_next.is_empty() {
                if r.len() > self.best_size {
                    self.best_size = r.len();
                    self.best = Some(r.clone());
                }
            } else {
                self.expand(r, p_next);
            }
            r.pop();
            p.remove(v);
            if self.done {
                return;
            }
        }
    }
}

struct CliqueEnumerator<'a> {
    adj: &'a [Bits],
    target: usize,
    found: Vec<Vec<usize>>,
}

impl<'a> CliqueEnumerator<'a> {
    fn expand(&mut self, r: &mut Vec<usize>, p: Bits) {
        if r.len() == self.target {
            self.found.push(r.clone());
            return;
        }
        let order = color_order(&p, self.adj);
        let mut p = p;
        for &(v, color) in order.iter().rev() {
            if r.len() + color < self.target {
                return;
            }
            r.push(v);
            self.expand(r, p.and(&self.adj[v]));
            r.pop();
            p.remove(v);
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub n: usize,
    pub t: usize,
    pub max_size: usize,
    pub witness: Family,
    /// Set when the weighted spectrum certified the bound, making the
    /// search a constant-time confirmation.
    pub certified_bound: Option<usize>,
}

fn search_vertices(n: usize, t: usize) -> Vec<Permutation> {
    // identity first, then its agreement neighborhood in lex order
    let id = Permutation::identity(n);
    let mut vertices = vec![id];
    for p in Permutation::all(n) {
        if p != vertices[0] && !is_t_derangement(&p, t) {
            vertices.push(p);
        }
    }
    vertices
}

fn spectral_certificate(n: usize, t: usize) -> Option<usize> {
    if n < 3 * t + 1 {
        return None;
    }
    let report = solve_weights(n, t).ok()?;
    if report.lambda_min_on_critical != Some(true) {
        return None;
    }
    let expected = rat_from_uint(&(factorial(t) * factorial(n - t)));
    if report.bound.as_ref() == Some(&expected) {
        let size: usize = (factorial(t) * factorial(n - t)).to_string().parse().ok()?;
        Some(size)
    } else {
        None
    }
}

/// Exact maximum size of a t-set-intersecting family in S_n, with a
/// witness attaining it.
pub fn max_family(n: usize, t: usize, extended: bool) -> Result<SearchOutcome> {
    if t < 1 || t >= n {
        return Err(Error::Input(format!("need 1 <= t < n, got t={}, n={}", t, n)));
    }
    let limit = if extended { MAX_SEARCH_N_EXTENDED } else { MAX_SEARCH_N };
    if n > limit {
        return Err(Error::Resource(format!(
            "exhaustive search limited to n <= {} ({} in extended mode), got n={}",
            MAX_SEARCH_N, MAX_SEARCH_N_EXTENDED, n
        )));
    }

    let incumbent = TSetCoset::new(n, &(1..=t).collect::<Vec<_>>(), &(1..=t).collect::<Vec<_>>())?
        .family();
    let incumbent_size = incumbent.len();

    let certified = spectral_certificate(n, t);
    let (max_size, witness) = if certified == Some(incumbent_size) {
        (incumbent_size, incumbent)
    } else {
        let vertices = search_vertices(n, t);
        let adj = build_adjacency(&vertices, t)?;
        let mut search = CliqueSearch {
            adj: &adj,
            best_size: incumbent_size,
            best: None,
            cutoff: certified,
            done: false,
        };
        let mut r = vec![0usize];
        search.expand(&mut r, adj[0].clone());
        match search.best {
            Some(clique) => {
                let members: Vec<Permutation> =
                    clique.iter().map(|&i| vertices[i].clone()).collect();
                (search.best_size, Family::from_members(n, members)?)
            }
            None => (incumbent_size, incumbent),
        }
    };

    if !witness.is_pairwise_agreeing(t)? {
        return Err(Error::Internal(
            "search witness fails pairwise verification".into(),
        ));
    }
    if witness.len() != max_size {
        return Err(Error::Internal("witness size mismatch".into()));
    }
    Ok(SearchOutcome { n, t, max_size, witness, certified_bound: certified })
}

#[derive(Debug, Clone)]
pub enum Classification {
    SetCoset(TSetCoset),
    Other,
}

#[derive(Debug, Clone)]
pub struct ExtremalFamily {
    pub family: Family,
    pub classification: Classification,
}

/// All maximum-size t-set-intersecting families of S_n, classified. Every
/// maximum family is a left translate of one through the identity, so the
/// search enumerates those and closes under translation.
pub fn enumerate_extremal(n: usize, t: usize) -> Result<Vec<ExtremalFamily>> {
    if n > MAX_ENUMERATE_N {
        return Err(Error::Resource(format!(
            "full enumeration limited to n <= {}, got n={}",
            MAX_ENUMERATE_N, n
        )));
    }
    let max = max_family(n, t, false)?.max_size;
    let vertices = search_vertices(n, t);
    let adj = build_adjacency(&vertices, t)?;
    let mut enumerator = CliqueEnumerator { adj: &adj, target: max, found: Vec::new() };
    let mut r = vec![0usize];
    enumerator.expand(&mut r, adj[0].clone());

    let mut seen: BTreeSet<Vec<Permutation>> = BTreeSet::new();
    let group = Permutation::all(n);
    for clique in &enumerator.found {
        let base: Vec<Permutation> = clique.iter().map(|&i| vertices[i].clone()).collect();
        let fam = Family::from_members(n, base)?;
        for g in &group {
            let translated = fam.translate(g)?;
            let key: Vec<Permutation> = translated.iter().cloned().collect();
            seen.insert(key);
        }
    }

    let mut out = Vec::new();
    for key in seen {
        let family = Family::from_members(n, key)?;
        debug_assert!(family.is_pairwise_agreeing(t)?);
        let classification = match is_tset_coset(&family, t) {
            Some(c) => Classification::SetCoset(c),
            None => Classification::Other,
        };
        out.push(ExtremalFamily { family, classification });
    }
    Ok(out)
}

/// Count of (coset, other) classifications.
pub fn classification_counts(families: &[ExtremalFamily]) -> (usize, usize) {
    let coset = families
        .iter()
        .filter(|f| matches!(f.classification, Classification::SetCoset(_)))
        .count();
    (coset, families.len() - coset)
}

/// The number of maximum families expected if every one is a set coset:
/// C(n,t)^2 distinct T_{x->y}.
pub fn coset_count(n: usize, t: usize) -> BigUint {
    let c = crate::arith::binomial(n, t);
    &c * &c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::klein_family;

    #[test]
    fn max_family_small_cases() {
        let r = max_family(4, 2, false).unwrap();
        assert_eq!(r.max_size, 4);
        let r = max_family(4, 1, false).unwrap();
        assert_eq!(r.max_size, 6);
        let r = max_family(5, 2, false).unwrap();
        assert_eq!(r.max_size, 12);
        let r = max_family(5, 1, false).unwrap();
        assert_eq!(r.max_size, 24);
        assert!(r.certified_bound.is_some());
    }

    #[test]
    fn search_ceiling() {
        assert!(max_family(7, 2, false).is_err());
        assert!(max_family(8, 2, true).is_err());
        assert!(enumerate_extremal(6, 2).is_err());
    }

    #[test]
    fn enumerate_4_2_includes_klein() {
        let fams = enumerate_extremal(4, 2).unwrap();
        let klein = klein_family();
        let found = fams.iter().find(|f| f.family == klein).expect("klein present");
        assert!(matches!(found.classification, Classification::Other));
        let (coset, other) = classification_counts(&fams);
        // n = 2t identifies T_{x->y} with T_{x^c -> y^c}: 36 pairs, 18 cosets
        assert_eq!(coset, 18);
        assert_eq!(other, 6); // the six cosets of the Klein group
        assert_eq!(fams.len(), 24);
        for f in &fams {
            assert_eq!(f.family.len(), 4);
            assert!(f.family.is_pairwise_agreeing(2).unwrap());
        }
    }

    #[test]
    fn enumerate_4_1_all_cosets() {
        let fams = enumerate_extremal(4, 1).unwrap();
        let (coset, other) = classification_counts(&fams);
        assert_eq!(other, 0);
        assert_eq!(coset, 16); // C(4,1)^2
    }

    #[test]
    fn enumerate_5_2_full_classification() {
        // 100 set cosets plus 50 parity halves of point cosets: each
        // non-coset family is parity-constant and maps one point to a
        // constant image (a translate of the alternating group on the
        // other four points)
        let fams = enumerate_extremal(5, 2).unwrap();
        let (coset, other) = classification_counts(&fams);
        assert_eq!(coset, 100);
        assert_eq!(other, 50);
        for f in &fams {
            assert_eq!(f.family.len(), 12);
            if matches!(f.classification, Classification::SetCoset(_)) {
                continue;
            }
            let members: Vec<_> = f.family.iter().collect();
            let sign = members[0].sign();
            assert!(members.iter().all(|m| m.sign() == sign));
            let constant_point = (0..5).find(|&i| {
                let img = members[0].apply(i);
                members.iter().all(|m| m.apply(i) == img)
            });
            assert!(constant_point.is_some(), "non-coset family without a constant point");
        }
    }
}
