//! A desk-scale invariant suite runnable from the command line. Each check
//! is independent; a fault injected anywhere in the character stack flips
//! at least one of them.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::{big_rat, exp_lower_bound, factorial, rat_from_uint};
use crate::characters::{
    character_table, determinant_vanishing_check, irreducible_character, kostka_minor,
    perm_character, perm_char_minor, Flavor,
};
use crate::counting::{brute_force_no_short_cycle_counts, no_short_cycle_counts};
use crate::family::{averaging_bound, s5_sharp_two_set_transitive, verify_sharply_set_transitive};
use crate::partition::{fat_partitions, partitions_of, Partition};
use crate::permutation::cycle_type_is_t_derangement;
use crate::search::{classification_counts, enumerate_extremal, max_family};
use crate::spanrank::coset_span_rank;
use crate::spectral::{adjacency_spectrum, delsarte_bound, trace_identity_check, ClassFunction};
use crate::tableaux::kostka;
use crate::weights::{determine_reconstruction_check, solve_weights};
use crate::witness::{conflict_witness, verify_witness};
use crate::family::TCoset;

pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, run: impl FnOnce() -> Result<(), String>) -> CheckResult {
    match run() {
        Ok(()) => CheckResult { name, passed: true, detail: String::new() },
        Err(detail) => CheckResult { name, passed: false, detail },
    }
}

/// Runs every check; `extended` additionally runs the slower instances.
pub fn run(extended: bool) -> Vec<CheckResult> {
    let mut out = Vec::new();

    out.push(check("class sizes tile the group", || {
        for n in 0..=8 {
            let total: BigUint = partitions_of(n).iter().map(|p| p.class_size()).sum();
            if total != factorial(n) {
                return Err(format!("n={}", n));
            }
        }
        Ok(())
    }));

    out.push(check("hook dimensions square-sum to n!", || {
        for n in 0..=8 {
            let mut total = BigUint::ZERO;
            for lam in partitions_of(n) {
                let d = lam.hook_dimension().map_err(|e| e.to_string())?;
                if d != lam.transpose().hook_dimension().map_err(|e| e.to_string())? {
                    return Err(format!("transpose dimension mismatch at {}", lam));
                }
                total += &d * &d;
            }
            if total != factorial(n) {
                return Err(format!("n={}", n));
            }
        }
        Ok(())
    }));

    out.push(check("permutation-character table triangular", || {
        for n in 1..=7 {
            let t = character_table(n, Flavor::Permutation).map_err(|e| e.to_string())?;
            for i in 0..t.order.len() {
                let expected: BigInt = t.order[i]
                    .part_multiplicities()
                    .iter()
                    .map(|&(_, m)| BigInt::from(factorial(m)))
                    .product();
                if t.values[i][i] != expected {
                    return Err(format!("diagonal at {} is {}", t.order[i], t.values[i][i]));
                }
                for j in 0..i {
                    if !t.values[i][j].is_zero() {
                        return Err(format!("nonzero below diagonal at n={}", n));
                    }
                }
            }
        }
        Ok(())
    }));

    out.push(check("character orthogonality", || {
        for n in 1..=6 {
            let parts = partitions_of(n);
            let table = character_table(n, Flavor::Irreducible).map_err(|e| e.to_string())?;
            let fact = BigInt::from(factorial(n));
            for i in 0..parts.len() {
                for j in i..parts.len() {
                    let mut acc = BigInt::zero();
                    for k in 0..parts.len() {
                        acc += BigInt::from(parts[k].class_size())
                            * &table.values[i][k]
                            * &table.values[j][k];
                    }
                    let expect = if i == j { fact.clone() } else { BigInt::zero() };
                    if acc != expect {
                        return Err(format!("n={} rows {},{}", n, i, j));
                    }
                }
            }
        }
        Ok(())
    }));

    out.push(check("Young's rule", || {
        for n in 1..=6 {
            let parts = partitions_of(n);
            for mu in &parts {
                for nu in &parts {
                    let xi = perm_character(mu, nu).map_err(|e| e.to_string())?;
                    let mut acc = BigInt::zero();
                    for lam in &parts {
                        let k = BigInt::from(kostka(lam, mu).map_err(|e| e.to_string())?);
                        if !k.is_zero() {
                            acc += k * irreducible_character(lam, nu).map_err(|e| e.to_string())?;
                        }
                    }
                    if xi != acc {
                        return Err(format!("n={} mu={} nu={}", n, mu, nu));
                    }
                }
            }
        }
        Ok(())
    }));

    out.push(check("transpose-sign rule", || {
        for n in 1..=6 {
            let parts = partitions_of(n);
            for lam in &parts {
                let lt = lam.transpose();
                for nu in &parts {
                    let lhs = irreducible_character(&lt, nu).map_err(|e| e.to_string())?;
                    let rhs = irreducible_character(lam, nu).map_err(|e| e.to_string())?
                        * BigInt::from(nu.class_sign());
                    if lhs != rhs {
                        return Err(format!("lam={} nu={}", lam, nu));
                    }
                }
            }
        }
        Ok(())
    }));

    out.push(check("chi at identity equals hook dimension", || {
        for n in 1..=7 {
            let id = Partition::new(vec![1; n]).unwrap();
            for alpha in partitions_of(n) {
                let chi = irreducible_character(&alpha, &id).map_err(|e| e.to_string())?;
                let dim = BigInt::from(alpha.hook_dimension().map_err(|e| e.to_string())?);
                if chi != dim {
                    return Err(format!("alpha={}", alpha));
                }
            }
        }
        Ok(())
    }));

    out.push(check("minor stability across n", || {
        for k in 1..=2usize {
            let base_k = kostka_minor(2 * k + 1, k).map_err(|e| e.to_string())?;
            let base_n = perm_char_minor(2 * k + 1, k).map_err(|e| e.to_string())?;
            for n in (2 * k + 2)..=8 {
                if !kostka_minor(n, k).map_err(|e| e.to_string())?.same_values(&base_k) {
                    return Err(format!("kostka minor k={} n={}", k, n));
                }
                if !perm_char_minor(n, k).map_err(|e| e.to_string())?.same_values(&base_n) {
                    return Err(format!("perm-char minor k={} n={}", k, n));
                }
            }
        }
        Ok(())
    }));

    out.push(check("parity-split counts match brute force", || {
        for n in 0..=7 {
            for t in 1..=3 {
                if no_short_cycle_counts(n, t) != brute_force_no_short_cycle_counts(n, t) {
                    return Err(format!("n={} t={}", n, t));
                }
            }
        }
        Ok(())
    }));

    out.push(check("determinant-vanishing identity", || {
        for t in 1..=3usize {
            for n in (2 * t + 1)..=10 {
                for tail in partitions_of(t) {
                    if tail.len() == 1 && tail.part(1) == t && tail.len() + 1 == 2 {
                        continue; // alpha = (n-t, t) excluded
                    }
                    let mut parts = vec![n - t];
                    parts.extend_from_slice(tail.parts());
                    let alpha = match Partition::new(parts) {
                        Ok(a) if a.part(1) == n - t && a.len() >= 3 => a,
                        _ => continue,
                    };
                    if !determinant_vanishing_check(&alpha, t).map_err(|e| e.to_string())? {
                        return Err(format!("alpha={} t={}", alpha, t));
                    }
                }
            }
        }
        Ok(())
    }));

    out.push(check("derangement-graph pipeline at n=5", || {
        let s = adjacency_spectrum(5, 1).map_err(|e| e.to_string())?;
        if s.lambda_const() != &big_rat(44, 1) {
            return Err("degree".into());
        }
        if s.lambda_min() != &big_rat(-11, 1) {
            return Err("lambda_min".into());
        }
        let b = delsarte_bound(&s, &factorial(5)).map_err(|e| e.to_string())?;
        if b != big_rat(24, 1) {
            return Err("bound".into());
        }
        for n in 5..=7 {
            let s = adjacency_spectrum(n, 1).map_err(|e| e.to_string())?;
            let b = delsarte_bound(&s, &factorial(n)).map_err(|e| e.to_string())?;
            if b != rat_from_uint(&factorial(n - 1)) {
                return Err(format!("bound at n={}", n));
            }
        }
        Ok(())
    }));

    out.push(check("weight construction at (7,2)", || {
        let rep = solve_weights(7, 2).map_err(|e| e.to_string())?;
        if !rep.conditions.exact_all_hold() {
            return Err("conditions".into());
        }
        if !rep.eta_identity {
            return Err("eta identity".into());
        }
        if rep.trace_identity != Some(true) {
            return Err("trace identity".into());
        }
        if rep.nu != big_rat(-1, 20) {
            return Err("nu".into());
        }
        Ok(())
    }));

    out.push(check("trace identity on adjacency matrices", || {
        for (n, t) in [(5, 1), (5, 2), (6, 2)] {
            let w = ClassFunction::t_derangement_indicator(n, t).map_err(|e| e.to_string())?;
            if !trace_identity_check(&w).map_err(|e| e.to_string())? {
                return Err(format!("n={} t={}", n, t));
            }
        }
        Ok(())
    }));

    out.push(check("eigenvalue reconstruction from the fat triangle", || {
        for (n, t) in [(6, 1), (7, 2)] {
            let mut u = ClassFunction::zero(n);
            let mut k = 0i64;
            for mu in partitions_of(n) {
                if cycle_type_is_t_derangement(&mu, t) {
                    k += 1;
                    u.set(
                        mu,
                        BigRational::new(BigInt::from((k * 5 + 1) % 7 - 3), BigInt::from(k + 1)),
                    )
                    .map_err(|e| e.to_string())?;
                }
            }
            if !determine_reconstruction_check(&u, n, t).map_err(|e| e.to_string())? {
                return Err(format!("n={} t={}", n, t));
            }
        }
        Ok(())
    }));

    out.push(check("coset span ranks", || {
        if coset_span_rank(4, 1).map_err(|e| e.to_string())? != 10 {
            return Err("(4,1)".into());
        }
        if coset_span_rank(5, 2).map_err(|e| e.to_string())? != 42 {
            return Err("(5,2)".into());
        }
        Ok(())
    }));

    out.push(check("sharp S_5 certificate", || {
        let f = s5_sharp_two_set_transitive();
        if !verify_sharply_set_transitive(&f, 2) {
            return Err("not sharply transitive".into());
        }
        if averaging_bound(&f, 2).map_err(|e| e.to_string())? != BigUint::from(12u32) {
            return Err("bound".into());
        }
        Ok(())
    }));

    out.push(check("extremal search at n=4", || {
        if max_family(4, 2, false).map_err(|e| e.to_string())?.max_size != 4 {
            return Err("(4,2) max".into());
        }
        if max_family(4, 1, false).map_err(|e| e.to_string())?.max_size != 6 {
            return Err("(4,1) max".into());
        }
        let fams = enumerate_extremal(4, 2).map_err(|e| e.to_string())?;
        let klein = crate::family::klein_family();
        if !fams.iter().any(|f| f.family == klein) {
            return Err("klein missing".into());
        }
        let (_, other) = classification_counts(&fams);
        if other != 6 {
            return Err(format!("expected 6 non-coset families, got {}", other));
        }
        Ok(())
    }));

    out.push(check("conflict witnesses at (5,1) and (5,2)", || {
        for (n, t) in [(5usize, 1usize), (5, 2)] {
            for dom in t_subsets_1based(n, t) {
                for img in t_tuples_1based(n, t) {
                    let c = TCoset::new(n, &dom, &img).map_err(|e| e.to_string())?;
                    if c.maps_first_t_setwise() {
                        continue;
                    }
                    let (s, p) = conflict_witness(&c, n, t).map_err(|e| e.to_string())?;
                    if !verify_witness(&c, n, t, &s, &p).map_err(|e| e.to_string())? {
                        return Err(format!("witness ({:?}->{:?})", dom, img));
                    }
                }
            }
        }
        Ok(())
    }));

    out.push(check("fat-label dimension lower bound", || {
        for t in 1..=3usize {
            let ebound = exp_lower_bound(t as u32, 40);
            for n in (2 * t + 1)..=10 {
                for alpha in fat_partitions(n, t).map_err(|e| e.to_string())? {
                    if alpha.part(1) != n - t {
                        continue;
                    }
                    let f = rat_from_uint(&alpha.hook_dimension().map_err(|e| e.to_string())?);
                    let c = rat_from_uint(&crate::arith::binomial(n, t));
                    if f * ebound.clone() <= c {
                        return Err(format!("alpha={} t={}", alpha, t));
                    }
                }
            }
        }
        Ok(())
    }));

    if extended {
        out.push(check("weight construction at (8,2) and (9,2)", || {
            for n in [8usize, 9] {
                let rep = solve_weights(n, 2).map_err(|e| e.to_string())?;
                if !rep.conditions.exact_all_hold() || !rep.eta_identity {
                    return Err(format!("n={}", n));
                }
            }
            Ok(())
        }));
        out.push(check("search at (5,2) finds 12", || {
            if max_family(5, 2, false).map_err(|e| e.to_string())?.max_size != 12 {
                return Err("max".into());
            }
            Ok(())
        }));
    }

    out
}

fn t_subsets_1based(n: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(s: usize, n: usize, t: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for v in s..=n {
            cur.push(v);
            rec(v + 1, n, t, cur, out);
            cur.pop();
        }
    }
    rec(1, n, t, &mut cur, &mut out);
    out
}

fn t_tuples_1based(n: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, t: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n {
            if !cur.contains(&v) {
                cur.push(v);
                rec(n, t, cur, out);
                cur.pop();
            }
        }
    }
    rec(n, t, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass() {
        let results = run(false);
        for r in &results {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
        assert!(results.len() >= 15);
    }
}
