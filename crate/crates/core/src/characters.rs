//! Permutation characters, irreducible characters via the determinantal
//! formula, full character tables, and the stable top-left minors of the
//! Kostka and permutation-character tables.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::arith::binomial;
use crate::error::{Error, Result};
use crate::partition::{fat_partitions, partitions_of, Partition};
use crate::tableaux::kostka;

/// Practical ceiling for building full character tables: the determinantal
/// sum for an l-part label costs l! terms, so the worst row of a full table
/// costs n! memoized permutation-character lookups.
pub const MAX_TABLE_N: usize = 9;

static XI_CACHE: LazyLock<Mutex<HashMap<(Partition, Partition), BigInt>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));
static CHI_CACHE: LazyLock<Mutex<HashMap<(Partition, Partition), BigInt>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));
static TABLE_CACHE: LazyLock<Mutex<HashMap<(usize, Flavor), Arc<CharacterTable>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Permutation character xi_lam evaluated on the class with cycle type mu:
/// the number of lam-tabloids fixed by any permutation of that type. A
/// tabloid is fixed iff each row is a union of cycle supports, so this
/// counts assignments of the cycle multiset to rows filling each row
/// exactly.
pub fn perm_character(lam: &Partition, mu: &Partition) -> Result<BigInt> {
    if lam.n() != mu.n() {
        return Err(Error::Input(format!(
            "permutation character on partitions of different n: {} vs {}",
            lam.n(),
            mu.n()
        )));
    }
    let key = (lam.clone(), mu.clone());
    if let Some(v) = XI_CACHE.lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let value = BigInt::from(xi_count(lam, mu));
    XI_CACHE.lock().unwrap().insert(key, value.clone());
    Ok(value)
}

fn xi_count(lam: &Partition, mu: &Partition) -> BigUint {
    let groups = mu.part_multiplicities();
    let mut caps: Vec<usize> = lam.parts().to_vec();
    let mut memo: HashMap<(Vec<usize>, usize), BigUint> = HashMap::new();
    assign_groups(&mut caps, 0, &groups, &mut memo)
}

/// Count assignments of cycle groups[g..] into rows with the given
/// remaining capacities. The count depends only on the multiset of
/// capacities, so the memo key sorts them.
fn assign_groups(
    caps: &mut Vec<usize>,
    g: usize,
    groups: &[(usize, usize)],
    memo: &mut HashMap<(Vec<usize>, usize), BigUint>,
) -> BigUint {
    if g == groups.len() {
        return if caps.iter().all(|&c| c == 0) {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    let key = {
        let mut sorted = caps.clone();
        sorted.sort_unstable();
        (sorted, g)
    };
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let (len, count) = groups[g];
    let mut total = BigUint::zero();
    distribute_group(caps, 0, len, count, BigUint::one(), g, groups, memo, &mut total);
    memo.insert(key, total.clone());
    total
}

/// Distribute `count` cycles of length `len` over rows starting at `row`.
/// Equal-length cycles act on distinct supports, so placing k of them in a
/// given row can be done in binomial(remaining, k) ways.
#[allow(clippy::too_many_arguments)]
fn distribute_group(
    caps: &mut Vec<usize>,
    row: usize,
    len: usize,
    remaining: usize,
    ways: BigUint,
    g: usize,
    groups: &[(usize, usize)],
    memo: &mut HashMap<(Vec<usize>, usize), BigUint>,
    total: &mut BigUint,
) {
    if row == caps.len() {
        if remaining == 0 {
            *total += ways * assign_groups(caps, g + 1, groups, memo);
        }
        return;
    }
    let max_here = (caps[row] / len).min(remaining);
    for k in 0..=max_here {
        let w = if k == 0 {
            ways.clone()
        } else {
            ways.clone() * binomial(remaining, k)
        };
        caps[row] -= k * len;
        distribute_group(caps, row + 1, len, remaining - k, w, g, groups, memo, total);
        caps[row] += k * len;
    }
}

/// Visits all permutations of {0,...,l-1} by Heap's algorithm, passing the
/// current array and its sign (each step is one transposition).
pub(crate) fn for_each_perm_signed<F: FnMut(&[usize], i8)>(l: usize, mut f: F) {
    let mut a: Vec<usize> = (0..l).collect();
    let mut c = vec![0usize; l];
    let mut sign = 1i8;
    f(&a, sign);
    let mut i = 0;
    while i < l {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            sign = -sign;
            f(&a, sign);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Irreducible character chi_alpha on the class of cycle type mu, by the
/// determinantal expansion into permutation characters. Only permutations
/// of the first l positions contribute (l = number of parts of alpha): any
/// permutation moving a later position sends some entry negative.
pub fn irreducible_character(alpha: &Partition, mu: &Partition) -> Result<BigInt> {
    if alpha.n() != mu.n() {
        return Err(Error::Input(format!(
            "irreducible character on partitions of different n: {} vs {}",
            alpha.n(),
            mu.n()
        )));
    }
    let key = (alpha.clone(), mu.clone());
    if let Some(v) = CHI_CACHE.lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let value = chi_determinantal(alpha, mu)?;
    CHI_CACHE.lock().unwrap().insert(key, value.clone());
    Ok(value)
}

fn chi_determinantal(alpha: &Partition, mu: &Partition) -> Result<BigInt> {
    let l = alpha.len();
    if l == 0 {
        return Ok(BigInt::one()); // n = 0
    }
    let parts = alpha.parts();
    let mut total = BigInt::zero();
    let mut err = None;
    for_each_perm_signed(l, |perm, sign| {
        if err.is_some() {
            return;
        }
        let mut entries = Vec::with_capacity(l);
        for i in 0..l {
            let e = parts[i] as i64 - i as i64 + perm[i] as i64;
            if e < 0 {
                return;
            }
            if e > 0 {
                entries.push(e as usize);
            }
        }
        entries.sort_unstable_by(|a, b| b.cmp(a));
        let beta = Partition::new(entries).expect("entries positive");
        match perm_character(&beta, mu) {
            Ok(xi) => {
                if sign == 1 {
                    total += xi;
                } else {
                    total -= xi;
                }
            }
            Err(e) => err = Some(e),
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Permutation,
    Irreducible,
}

/// A full character table of S_n: rows are character labels and columns are
/// class labels, both in decreasing lexicographic order.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub n: usize,
    pub flavor: Flavor,
    pub order: Vec<Partition>,
    pub values: Vec<Vec<BigInt>>,
}

impl CharacterTable {
    pub fn value(&self, row: &Partition, col: &Partition) -> Option<&BigInt> {
        let i = self.order.iter().position(|p| p == row)?;
        let j = self.order.iter().position(|p| p == col)?;
        Some(&self.values[i][j])
    }

    /// CSV with quoted partition labels: rows are characters, columns are
    /// classes.
    pub fn to_csv(&self) -> String {
        table_csv(&self.order, &self.order, &self.values)
    }

    /// {"order": [...], "values": [[...]]} with exact integers.
    pub fn to_json(&self) -> serde_json::Value {
        table_json(self.n, &self.order, &self.order, &self.values)
    }
}

fn table_csv(rows: &[Partition], cols: &[Partition], values: &[Vec<BigInt>]) -> String {
    let mut out = String::new();
    out.push_str("\"\"");
    for c in cols {
        out.push_str(&format!(",\"{}\"", c));
    }
    out.push('\n');
    for (i, r) in rows.iter().enumerate() {
        out.push_str(&format!("\"{}\"", r));
        for v in &values[i] {
            out.push_str(&format!(",{}", v));
        }
        out.push('\n');
    }
    out
}

fn table_json(
    n: usize,
    rows: &[Partition],
    cols: &[Partition],
    values: &[Vec<BigInt>],
) -> serde_json::Value {
    serde_json::json!({
        "n": n,
        "rows": rows.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "columns": cols.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "values": values
            .iter()
            .map(|row| row.iter().map(crate::json::bigint_json).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

/// Builds (and caches) the full table for S_n. The permutation flavor is
/// upper-triangular in this ordering, with diagonal entry prod_j a_j!
/// (a_j = multiplicity of part j), hence invertible.
pub fn character_table(n: usize, flavor: Flavor) -> Result<Arc<CharacterTable>> {
    if n > MAX_TABLE_N {
        return Err(Error::Resource(format!(
            "full character tables are limited to n <= {}, got n={}",
            MAX_TABLE_N, n
        )));
    }
    if let Some(t) = TABLE_CACHE.lock().unwrap().get(&(n, flavor)) {
        return Ok(Arc::clone(t));
    }
    let order = partitions_of(n);
    use rayon::prelude::*;
    let values: Vec<Vec<BigInt>> = order
        .par_iter()
        .map(|row| {
            order
                .iter()
                .map(|col| match flavor {
                    Flavor::Permutation => perm_character(row, col),
                    Flavor::Irreducible => irreducible_character(row, col),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let table = Arc::new(CharacterTable { n, flavor, order, values });
    TABLE_CACHE
        .lock()
        .unwrap()
        .insert((n, flavor), Arc::clone(&table));
    Ok(table)
}

/// A square minor indexed by the fat partitions F_{n,k} in decreasing
/// lexicographic order. Unit upper-triangular for both the Kostka and
/// permutation-character variants; independent of n once n > 2k.
#[derive(Debug, Clone, PartialEq)]
pub struct Minor {
    pub n: usize,
    pub k: usize,
    pub index: Vec<Partition>,
    pub values: Vec<Vec<BigInt>>,
}

impl Minor {
    /// Equality of the numeric block alone, for cross-n stability checks.
    pub fn same_values(&self, other: &Minor) -> bool {
        self.values == other.values
    }

    pub fn to_csv(&self) -> String {
        table_csv(&self.index, &self.index, &self.values)
    }

    pub fn to_json(&self) -> serde_json::Value {
        table_json(self.n, &self.index, &self.index, &self.values)
    }
}

pub fn kostka_minor(n: usize, k: usize) -> Result<Minor> {
    let index = fat_partitions(n, k)?;
    let values = index
        .iter()
        .map(|lam| {
            index
                .iter()
                .map(|mu| kostka(lam, mu).map(BigInt::from))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Minor { n, k, index, values })
}

pub fn perm_char_minor(n: usize, k: usize) -> Result<Minor> {
    let index = fat_partitions(n, k)?;
    let values = index
        .iter()
        .map(|beta| {
            index
                .iter()
                .map(|gamma| perm_character(beta, gamma))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Minor { n, k, index, values })
}

/// The signed indicator sum over S_{t+1} that makes every non-(n-t,t)
/// eigenvalue row of the fat block collapse:
///   sum_{pi in S_{t+1}} sgn(pi) * 1{pi(1) != 1 and alpha_j - j + pi(j) >= 0
///   for all j >= 2}
/// Returns whether the sum is exactly zero. Requires alpha_1 = n-t and
/// alpha != (n-t, t).
pub fn determinant_vanishing_check(alpha: &Partition, t: usize) -> Result<bool> {
    let n = alpha.n();
    if alpha.part(1) != n - t {
        return Err(Error::Input(format!(
            "first part must be n-t = {}, got {}",
            n - t,
            alpha.part(1)
        )));
    }
    if alpha.len() == 2 && alpha.part(2) == t {
        return Err(Error::input("alpha = (n-t, t) is excluded"));
    }
    let mut sum: i64 = 0;
    for_each_perm_signed(t + 1, |perm, sign| {
        if perm[0] == 0 {
            return;
        }
        for j in 1..=t {
            // 1-based: alpha_{j+1} - (j+1) + pi(j+1)
            let e = alpha.part(j + 1) as i64 - (j as i64 + 1) + (perm[j] as i64 + 1);
            if e < 0 {
                return;
            }
        }
        sum += sign as i64;
    });
    Ok(sum == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::factorial;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn perm_character_examples() {
        // one tabloid total for the single-row shape
        for mu in partitions_of(5) {
            assert_eq!(perm_character(&p(&[5]), &mu).unwrap(), BigInt::one());
        }
        // identity fixes every tabloid: n! / prod lam_i!
        let lam = p(&[3, 2]);
        let id = p(&[1, 1, 1, 1, 1]);
        assert_eq!(perm_character(&lam, &id).unwrap(), BigInt::from(10));
        // 2-subsets invariant under (12)(34) in S_5
        assert_eq!(
            perm_character(&p(&[3, 2]), &p(&[2, 2, 1])).unwrap(),
            BigInt::from(2)
        );
    }

    #[test]
    fn perm_character_diagonal_and_triangularity() {
        // The diagonal counts assignments of equal-length cycles to
        // equal-length rows: prod_j a_j! where a_j is the multiplicity of
        // part j. It is 1 exactly when all parts are distinct.
        for n in 0..=8 {
            let parts = partitions_of(n);
            for lam in &parts {
                let expected: BigInt = lam
                    .part_multiplicities()
                    .iter()
                    .map(|&(_, m)| BigInt::from(factorial(m)))
                    .product();
                assert_eq!(perm_character(lam, lam).unwrap(), expected, "lam={}", lam);
                for mu in &parts {
                    let v = perm_character(lam, mu).unwrap();
                    if !v.is_zero() {
                        assert!(lam.dominates(mu).unwrap(), "xi_{}({}) = {}", lam, mu, v);
                    }
                }
            }
        }
    }

    #[test]
    fn irreducible_character_examples() {
        // trivial character
        for mu in partitions_of(6) {
            assert_eq!(irreducible_character(&p(&[6]), &mu).unwrap(), BigInt::one());
        }
        // chi_{(3,1)} at class (2,1,1) = xi_{(3,1)} - xi_{(4)} = 2 - 1
        assert_eq!(
            irreducible_character(&p(&[3, 1]), &p(&[2, 1, 1])).unwrap(),
            BigInt::one()
        );
        // sign character
        for mu in partitions_of(6) {
            assert_eq!(
                irreducible_character(&p(&[1, 1, 1, 1, 1, 1]), &mu).unwrap(),
                BigInt::from(mu.class_sign())
            );
        }
    }

    #[test]
    fn chi_at_identity_is_hook_dimension() {
        for n in 1..=8 {
            let id = Partition::new(vec![1; n]).unwrap();
            for alpha in partitions_of(n) {
                assert_eq!(
                    irreducible_character(&alpha, &id).unwrap(),
                    BigInt::from(alpha.hook_dimension().unwrap()),
                    "alpha={}",
                    alpha
                );
            }
        }
    }

    #[test]
    fn s3_irreducible_table() {
        let t = character_table(3, Flavor::Irreducible).unwrap();
        let expect: Vec<Vec<i64>> = vec![vec![1, 1, 1], vec![-1, 0, 2], vec![1, -1, 1]];
        for (i, row) in expect.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(t.values[i][j], BigInt::from(*v));
            }
        }
    }

    #[test]
    fn chi_3_2_vanishes_on_five_cycles() {
        assert_eq!(
            irreducible_character(&p(&[3, 2]), &p(&[5])).unwrap(),
            BigInt::zero()
        );
    }

    #[test]
    fn permutation_table_upper_triangular_invertible() {
        for n in 1..=7 {
            let t = character_table(n, Flavor::Permutation).unwrap();
            for i in 0..t.order.len() {
                // positive diagonal (so the table is invertible), unit
                // exactly when the label has distinct parts
                assert!(t.values[i][i] > BigInt::zero());
                let distinct = t.order[i]
                    .part_multiplicities()
                    .iter()
                    .all(|&(_, m)| m == 1);
                assert_eq!(t.values[i][i] == BigInt::one(), distinct);
                for j in 0..i {
                    assert_eq!(t.values[i][j], BigInt::zero(), "n={} i={} j={}", n, i, j);
                }
            }
        }
    }

    #[test]
    fn orthogonality_oracle() {
        for n in 1..=7 {
            let parts = partitions_of(n);
            let table = character_table(n, Flavor::Irreducible).unwrap();
            let sizes: Vec<BigInt> = parts.iter().map(|m| BigInt::from(m.class_size())).collect();
            let fact = BigInt::from(factorial(n));
            for i in 0..parts.len() {
                for j in i..parts.len() {
                    let mut acc = BigInt::zero();
                    for k in 0..parts.len() {
                        acc += &sizes[k] * &table.values[i][k] * &table.values[j][k];
                    }
                    let expect = if i == j { fact.clone() } else { BigInt::zero() };
                    assert_eq!(acc, expect, "n={} i={} j={}", n, i, j);
                }
            }
        }
    }

    #[test]
    fn youngs_rule() {
        for n in 1..=7 {
            let parts = partitions_of(n);
            for mu in &parts {
                for nu in &parts {
                    let xi = perm_character(mu, nu).unwrap();
                    let mut acc = BigInt::zero();
                    for lam in &parts {
                        let k = BigInt::from(kostka(lam, mu).unwrap());
                        if !k.is_zero() {
                            acc += k * irreducible_character(lam, nu).unwrap();
                        }
                    }
                    assert_eq!(xi, acc, "n={} mu={} nu={}", n, mu, nu);
                }
            }
        }
    }

    #[test]
    fn transpose_sign_rule() {
        for n in 1..=7 {
            let parts = partitions_of(n);
            for lam in &parts {
                let lt = lam.transpose();
                for nu in &parts {
                    let lhs = irreducible_character(&lt, nu).unwrap();
                    let rhs =
                        irreducible_character(lam, nu).unwrap() * BigInt::from(nu.class_sign());
                    assert_eq!(lhs, rhs, "lam={} nu={}", lam, nu);
                }
            }
        }
    }

    #[test]
    fn minor_examples_and_stability() {
        let m = perm_char_minor(6, 1).unwrap();
        assert_eq!(m.values[0], vec![BigInt::one(), BigInt::one()]);
        assert_eq!(m.values[1], vec![BigInt::zero(), BigInt::one()]);
        let a = kostka_minor(7, 3).unwrap();
        let b = kostka_minor(8, 3).unwrap();
        let c = kostka_minor(9, 3).unwrap();
        assert!(a.same_values(&b) && b.same_values(&c));
        let a = perm_char_minor(7, 3).unwrap();
        let b = perm_char_minor(9, 3).unwrap();
        assert!(a.same_values(&b));
    }

    #[test]
    fn table_ceiling_enforced() {
        assert!(character_table(10, Flavor::Irreducible).is_err());
    }

    #[test]
    fn determinant_vanishing_spec_cases() {
        // alpha = (n-2,1,1), t = 2
        for n in 6..=10 {
            let alpha = Partition::new(vec![n - 2, 1, 1]).unwrap();
            assert!(determinant_vanishing_check(&alpha, 2).unwrap());
        }
        // alpha = (n-3,2,1), t = 3
        for n in 8..=12 {
            let alpha = Partition::new(vec![n - 3, 2, 1]).unwrap();
            assert!(determinant_vanishing_check(&alpha, 3).unwrap());
        }
        // preconditions
        assert!(determinant_vanishing_check(&p(&[5, 2]), 2).is_err());
        assert!(determinant_vanishing_check(&p(&[5, 2]), 3).is_err());
    }
}
