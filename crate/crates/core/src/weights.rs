//! The pseudoadjacency weight construction: a class function w supported on
//! t-derangements whose Cayley matrix has constant eigenvalue 1, eigenvalue
//! nu = -1/(C(n,t)-1) on every critical label (n-s,s), and eigenvalue 0 on
//! every tall label.
//!
//! The weight is assembled as w = (w+ + w-)/2 where w+/- live on even/odd
//! classes obtained by subdividing the long row of each fat label gamma in
//! F_{n,t-1} into cycles of length > t, with values solved exactly from the
//! upper-triangular permutation-character minor.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::arith::{binomial, factorial, rat_from_uint};
use crate::characters::{perm_char_minor, MAX_TABLE_N};
use crate::error::{Error, Result};
use crate::json::{biguint_json, rational_json};
use crate::partition::{
    classify, fat_partitions, partitions_of, partitions_with_min_part, Partition,
};
use crate::permutation::cycle_type_is_t_derangement;
use crate::spectral::{cayley_spectrum, delsarte_bound, ClassFunction, Spectrum};
use crate::tableaux::kostka;

/// Ceiling for the fat-only evaluation mode (extended); full-spectrum mode
/// is bounded by the character-table ceiling.
pub const MAX_FAT_ONLY_N: usize = 10;

/// nu_{n,t} = -1/(C(n,t) - 1), the eigenvalue the Delsarte bound needs on
/// the critical labels.
pub fn nu(n: usize, t: usize) -> BigRational {
    let c = BigInt::from(binomial(n, t));
    BigRational::new(BigInt::from(-1), c - BigInt::one())
}

/// epsilon_{n,t,beta} = sum_{s=1}^{t-1} K_{(n-s,s),beta} *
/// (C(n,s)-C(n,s-1)) / (C(n,t)-1), and eta = 1 - epsilon.
///
/// The sum starts at s = 1: expanding <w, xi_beta> by Young's rule, the
/// s = 0 term enters with coefficient <w, chi_(n)> = +1, which is the
/// leading 1 of eta, not part of epsilon.
pub fn epsilon_eta(n: usize, t: usize, beta: &Partition) -> Result<(BigRational, BigRational)> {
    if beta.n() != n {
        return Err(Error::Input(format!("beta must be a partition of {}", n)));
    }
    if t < 1 || beta.part(1) + (t - 1) < n {
        return Err(Error::Input(format!(
            "beta = {} is not in the fat set F_{{{},{}}}",
            beta,
            n,
            t as i64 - 1
        )));
    }
    let denom = BigRational::from_integer(BigInt::from(binomial(n, t)) - BigInt::one());
    let mut eps = BigRational::zero();
    for s in 1..t {
        let lam = Partition::new(vec![n - s, s])?;
        let k = kostka(&lam, beta)?;
        if k.is_zero() {
            continue;
        }
        let dim = BigInt::from(binomial(n, s)) - BigInt::from(binomial(n, s - 1));
        eps += BigRational::from_integer(BigInt::from(k) * dim) / denom.clone();
    }
    let eta = BigRational::one() - eps.clone();
    Ok((eps, eta))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// P_{n,t}(alpha) restricted to one parity: the cycle types obtained from a
/// fat label alpha = (n-s, tail) by subdividing the long part into parts
/// > t, together with the total size of the classes selected. Every listed
/// > type is a t-derangement class, and collections of distinct labels are
/// > disjoint (merging the long parts recovers the label).
pub fn class_collections(
    n: usize,
    t: usize,
    alpha: &Partition,
    parity: Parity,
) -> Result<(Vec<Partition>, BigUint)> {
    let (types, even_size, odd_size) = collections_with_sizes(n, t, alpha)?;
    let want = match parity {
        Parity::Even => 1,
        Parity::Odd => -1,
    };
    let selected: Vec<Partition> = types
        .into_iter()
        .filter(|ct| ct.class_sign() == want)
        .collect();
    let total = match parity {
        Parity::Even => even_size,
        Parity::Odd => odd_size,
    };
    Ok((selected, total))
}

/// All types in P_{n,t}(alpha) with the summed class sizes per parity.
pub fn collections_with_sizes(
    n: usize,
    t: usize,
    alpha: &Partition,
) -> Result<(Vec<Partition>, BigUint, BigUint)> {
    if alpha.n() != n {
        return Err(Error::Input(format!("alpha must be a partition of {}", n)));
    }
    if t < 1 || alpha.part(1) + (t - 1) < n {
        return Err(Error::Input(format!(
            "alpha = {} is not in the fat set F_{{{},{}}}",
            alpha,
            n,
            t as i64 - 1
        )));
    }
    if n < 3 * t + 1 {
        return Err(Error::Resource(format!(
            "construction regime not reached: need n >= 3t+1 = {}, got n = {}",
            3 * t + 1,
            n
        )));
    }
    let long = alpha.part(1);
    let tail: Vec<usize> = alpha.parts()[1..].to_vec();
    let mut types = Vec::new();
    let mut even_size = BigUint::zero();
    let mut odd_size = BigUint::zero();
    for sub in partitions_with_min_part(long, t + 1) {
        let mut parts = sub.parts().to_vec();
        parts.extend_from_slice(&tail);
        let ct = Partition::new(parts)?;
        debug_assert!(cycle_type_is_t_derangement(&ct, t));
        if ct.class_sign() == 1 {
            even_size += ct.class_size();
        } else {
            odd_size += ct.class_size();
        }
        types.push(ct);
    }
    Ok((types, even_size, odd_size))
}

/// Per-condition outcome for a candidate weight function. Conditions 4
/// and 5 are reported values (the asymptotic argument only needs them
/// small); the others are exact booleans.
#[derive(Debug, Clone)]
pub struct ConditionReport {
    pub support_on_t_derangements: bool,
    pub lambda_top_is_one: bool,
    pub critical_equal_nu: bool,
    pub max_abs_fat_noncritical: BigRational,
    pub max_abs_weight_times_factorial: BigRational,
    pub tall_zero: bool,
}

impl ConditionReport {
    /// Conditions (1), (2), (3), (6) — the exactly-checkable ones.
    pub fn exact_all_hold(&self) -> bool {
        self.support_on_t_derangements
            && self.lambda_top_is_one
            && self.critical_equal_nu
            && self.tall_zero
    }
}

/// Full outcome of the construction and its verification.
#[derive(Debug, Clone)]
pub struct WeightReport {
    pub n: usize,
    pub t: usize,
    pub nu: BigRational,
    pub w: ClassFunction,
    pub w_plus: Option<ClassFunction>,
    pub w_minus: Option<ClassFunction>,
    pub fat_only: bool,
    pub conditions: ConditionReport,
    /// Present in full mode only.
    pub spectrum: Option<Spectrum>,
    /// Eigenvalues on the fat labels F_{n,t}, always evaluated.
    pub fat_eigenvalues: Vec<(Partition, BigRational)>,
    pub lambda_min: Option<BigRational>,
    pub lambda_min_partitions: Vec<Partition>,
    /// Whether the minimum is attained exactly on {(n-s,s) : s in [t]}.
    pub lambda_min_on_critical: Option<bool>,
    /// min over alpha outside {(n)} and the argmin of lambda_alpha -
    /// lambda_min.
    pub spectral_gap: Option<BigRational>,
    pub bound: Option<BigRational>,
    /// <w, xi_beta> = eta_beta on F_{n,t-1}.
    pub eta_identity: bool,
    pub trace_identity: Option<bool>,
    /// Labels beta whose eta fell outside [0,1] (construction proceeds).
    pub eta_range_warnings: Vec<Partition>,
}

/// lambda_alpha = <w, chi_alpha> / f^alpha for a single label, without
/// building the full table.
pub fn eigenvalue_at(w: &ClassFunction, alpha: &Partition) -> Result<BigRational> {
    let dim = alpha.hook_dimension()?;
    Ok(w.inner_irr_char(alpha)? / rat_from_uint(&dim))
}

/// Runs the construction with full-spectrum verification.
pub fn solve_weights(n: usize, t: usize) -> Result<WeightReport> {
    solve_weights_mode(n, t, false)
}

/// Runs the construction evaluating fat labels only; condition (6) is
/// checked through the w+/w- symmetry (for fat alpha,
/// <w, chi_{alpha^T}> = (<w+, chi_alpha> - <w-, chi_alpha>)/2).
pub fn solve_weights_fat_only(n: usize, t: usize) -> Result<WeightReport> {
    solve_weights_mode(n, t, true)
}

fn solve_weights_mode(n: usize, t: usize, fat_only: bool) -> Result<WeightReport> {
    if t < 1 {
        return Err(Error::input("t must be at least 1"));
    }
    if n < 3 * t + 1 {
        return Err(Error::Resource(format!(
            "construction regime not reached: need n >= 3t+1 = {}, got n = {}",
            3 * t + 1,
            n
        )));
    }
    if fat_only {
        if n > MAX_FAT_ONLY_N {
            return Err(Error::Resource(format!(
                "fat-only construction limited to n <= {}, got n = {}",
                MAX_FAT_ONLY_N, n
            )));
        }
    } else if n > MAX_TABLE_N {
        return Err(Error::Resource(format!(
            "full-spectrum construction limited to n <= {}; n = {} needs fat-only mode",
            MAX_TABLE_N, n
        )));
    }

    let fat = fat_partitions(n, t - 1)?;
    let minor = perm_char_minor(n, t - 1)?;
    let m = fat.len();

    let mut eta = Vec::with_capacity(m);
    let mut eta_range_warnings = Vec::new();
    for beta in &fat {
        let (_, e) = epsilon_eta(n, t, beta)?;
        if e < BigRational::zero() || e > BigRational::one() {
            eta_range_warnings.push(beta.clone());
        }
        eta.push(e);
    }

    // back-substitute the upper-triangular system N y = eta; the diagonal
    // entries are the positive counts prod_j a_j!, not necessarily 1
    let mut y: Vec<BigRational> = vec![BigRational::zero(); m];
    for i in (0..m).rev() {
        let mut acc = eta[i].clone();
        for j in (i + 1)..m {
            if !minor.values[i][j].is_zero() {
                acc -= BigRational::from_integer(minor.values[i][j].clone()) * &y[j];
            }
        }
        let diag = BigRational::from_integer(minor.values[i][i].clone());
        if diag.is_zero() {
            return Err(Error::Internal(format!(
                "singular permutation-character minor at {}",
                fat[i]
            )));
        }
        y[i] = acc / diag;
    }

    let mut w_plus = ClassFunction::zero(n);
    let mut w_minus = ClassFunction::zero(n);
    for (i, gamma) in fat.iter().enumerate() {
        let (types, even_size, odd_size) = collections_with_sizes(n, t, gamma)?;
        if even_size.is_zero() || odd_size.is_zero() {
            return Err(Error::Internal(format!(
                "one-sided parity in the collection of {} at n={}, t={}",
                gamma, n, t
            )));
        }
        let x_plus = &y[i] / rat_from_uint(&even_size);
        let x_minus = &y[i] / rat_from_uint(&odd_size);
        for ct in types {
            if ct.class_sign() == 1 {
                w_plus.set(ct, x_plus.clone())?;
            } else {
                w_minus.set(ct, x_minus.clone())?;
            }
        }
    }
    let w = w_plus.average_with(&w_minus)?;

    let mut report = if fat_only {
        verify_fat_only(&w, Some((&w_plus, &w_minus)), n, t)?
    } else {
        verify_conditions(&w, n, t)?
    };
    report.w_plus = Some(w_plus);
    report.w_minus = Some(w_minus);
    report.eta_range_warnings = eta_range_warnings;
    Ok(report)
}

/// Checks the six conditions and the reporting extras against the full
/// spectrum of an arbitrary class function.
pub fn verify_conditions(w: &ClassFunction, n: usize, t: usize) -> Result<WeightReport> {
    if w.n() != n {
        return Err(Error::input("class function has the wrong n"));
    }
    if n <= 2 * t {
        return Err(Error::Input(format!(
            "verification needs n > 2t, got n={}, t={}",
            n, t
        )));
    }
    let spectrum = cayley_spectrum(w)?;
    let nu_val = nu(n, t);

    let support_on_t_derangements = w
        .support()
        .all(|(mu, _)| cycle_type_is_t_derangement(mu, t));
    let lambda_top_is_one = spectrum.entries[0].eigenvalue.is_one();
    let mut critical_equal_nu = true;
    for s in 1..=t {
        let lam = Partition::new(vec![n - s, s])?;
        if spectrum.eigenvalue(&lam) != Some(&nu_val) {
            critical_equal_nu = false;
        }
    }

    let mut max_fat_nc = BigRational::zero();
    let mut tall_zero = true;
    let mut fat_eigenvalues = Vec::new();
    for e in &spectrum.entries {
        let class = classify(&e.partition, t)?;
        if class.is_fat {
            fat_eigenvalues.push((e.partition.clone(), e.eigenvalue.clone()));
            if !class.is_critical {
                max_fat_nc = max_fat_nc.max(e.eigenvalue.abs());
            }
        }
        if class.is_tall && !e.eigenvalue.is_zero() {
            tall_zero = false;
        }
    }

    let max_abs_weight_times_factorial = w.max_abs() * rat_from_uint(&factorial(n));

    let lambda_min = spectrum.lambda_min().clone();
    let lambda_min_partitions = spectrum.lambda_min_partitions();
    let critical_nontrivial: Vec<Partition> = (1..=t)
        .map(|s| Partition::new(vec![n - s, s]))
        .collect::<Result<_>>()?;
    let lambda_min_on_critical = {
        let mut sorted_min = lambda_min_partitions.clone();
        sorted_min.sort();
        let mut sorted_crit = critical_nontrivial.clone();
        sorted_crit.sort();
        sorted_min == sorted_crit
    };
    let top = Partition::single_row(n);
    let spectral_gap = spectrum
        .entries
        .iter()
        .filter(|e| e.partition != top && !lambda_min_partitions.contains(&e.partition))
        .map(|e| &e.eigenvalue - &lambda_min)
        .min();

    let bound = delsarte_bound(&spectrum, &factorial(n)).ok();
    let eta_identity = check_eta_identity(w, n, t)?;
    let trace_identity = Some(crate::spectral::trace_identity_check(w)?);

    Ok(WeightReport {
        n,
        t,
        nu: nu_val,
        w: w.clone(),
        w_plus: None,
        w_minus: None,
        fat_only: false,
        conditions: ConditionReport {
            support_on_t_derangements,
            lambda_top_is_one,
            critical_equal_nu,
            max_abs_fat_noncritical: max_fat_nc,
            max_abs_weight_times_factorial,
            tall_zero,
        },
        spectrum: Some(spectrum),
        fat_eigenvalues,
        lambda_min: Some(lambda_min),
        lambda_min_partitions,
        lambda_min_on_critical: Some(lambda_min_on_critical),
        spectral_gap,
        bound,
        eta_identity,
        trace_identity,
        eta_range_warnings: Vec::new(),
    })
}

fn check_eta_identity(w: &ClassFunction, n: usize, t: usize) -> Result<bool> {
    for beta in fat_partitions(n, t - 1)? {
        let (_, eta) = epsilon_eta(n, t, &beta)?;
        if w.inner_perm_char(&beta)? != eta {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Fat-only verification: evaluates eigenvalues on F_{n,t} by single
/// determinantal sums (each label there has at most t+1 parts) and decides
/// the tall condition from the even/odd halves.
fn verify_fat_only(
    w: &ClassFunction,
    halves: Option<(&ClassFunction, &ClassFunction)>,
    n: usize,
    t: usize,
) -> Result<WeightReport> {
    let nu_val = nu(n, t);
    let support_on_t_derangements = w
        .support()
        .all(|(mu, _)| cycle_type_is_t_derangement(mu, t));

    let fat_set = fat_partitions(n, t)?;
    let mut fat_eigenvalues = Vec::new();
    let mut lambda_top_is_one = false;
    let mut max_fat_nc = BigRational::zero();
    for alpha in &fat_set {
        let ev = eigenvalue_at(w, alpha)?;
        if alpha.len() <= 1 {
            lambda_top_is_one = ev.is_one();
        } else if !classify(alpha, t)?.is_critical {
            max_fat_nc = max_fat_nc.max(ev.abs());
        }
        fat_eigenvalues.push((alpha.clone(), ev));
    }
    let mut critical_equal_nu = true;
    for s in 1..=t {
        let lam = Partition::new(vec![n - s, s])?;
        let ev = fat_eigenvalues
            .iter()
            .find(|(p, _)| p == &lam)
            .map(|(_, e)| e.clone())
            .expect("critical labels are fat");
        if ev != nu_val {
            critical_equal_nu = false;
        }
    }

    // every tall label is the transpose of a fat one, and
    // 2 <w, chi_{alpha^T}> = <w+, chi_alpha> - <w-, chi_alpha>
    let tall_zero = match halves {
        Some((wp, wm)) => {
            let mut ok = true;
            for alpha in &fat_set {
                if wp.inner_irr_char(alpha)? != wm.inner_irr_char(alpha)? {
                    ok = false;
                    break;
                }
            }
            ok
        }
        None => {
            let mut ok = true;
            for alpha in &fat_set {
                if !eigenvalue_at(w, &alpha.transpose())?.is_zero() {
                    ok = false;
                    break;
                }
            }
            ok
        }
    };

    let max_abs_weight_times_factorial = w.max_abs() * rat_from_uint(&factorial(n));
    let eta_identity = check_eta_identity(w, n, t)?;

    Ok(WeightReport {
        n,
        t,
        nu: nu_val,
        w: w.clone(),
        w_plus: None,
        w_minus: None,
        fat_only: true,
        conditions: ConditionReport {
            support_on_t_derangements,
            lambda_top_is_one,
            critical_equal_nu,
            max_abs_fat_noncritical: max_fat_nc,
            max_abs_weight_times_factorial,
            tall_zero,
        },
        spectrum: None,
        fat_eigenvalues,
        lambda_min: None,
        lambda_min_partitions: Vec::new(),
        lambda_min_on_critical: None,
        spectral_gap: None,
        bound: None,
        eta_identity,
        trace_identity: None,
        eta_range_warnings: Vec::new(),
    })
}

/// The determination property behind the construction: for any class
/// function u supported on t-derangement classes, the inner products
/// <u, chi_alpha> with alpha_1 = n-t are forced by those with
/// alpha_1 >= n-t+1. Reconstructs them by converting to permutation
/// characters on F_{n,t-1}, appending <u, xi_beta> = 0 for beta_1 = n-t
/// (a t-derangement fixes no such tabloid), and back-substituting the
/// unit-triangular Kostka minor over F_{n,t}. Returns whether the
/// reconstruction matches direct evaluation.
pub fn determine_reconstruction_check(u: &ClassFunction, n: usize, t: usize) -> Result<bool> {
    if u.n() != n {
        return Err(Error::input("class function has the wrong n"));
    }
    if !u
        .support()
        .all(|(mu, _)| cycle_type_is_t_derangement(mu, t))
    {
        return Err(Error::input(
            "reconstruction needs support on t-derangement classes",
        ));
    }
    let big = fat_partitions(n, t)?;
    // knowns: <u, xi_lam> for the whole fat set, using direct chi inner
    // products only on the strictly-fatter labels
    let mut xi_vals = Vec::with_capacity(big.len());
    for lam in &big {
        if lam.part(1) == n - t {
            xi_vals.push(BigRational::zero());
        } else {
            // Young's rule restricted to the fat set
            let mut acc = BigRational::zero();
            for mu in &big {
                let k = kostka(mu, lam)?;
                if !k.is_zero() {
                    acc += BigRational::from_integer(BigInt::from(k)) * u.inner_irr_char(mu)?;
                }
            }
            xi_vals.push(acc);
        }
    }
    // xi_lam = sum_{mu >= lam} K_{mu,lam} <u, chi_mu> is lower-triangular
    // in decreasing-lex indexing, with unit diagonal K_{lam,lam} = 1;
    // forward-substitute
    let m = big.len();
    let mut chi_rec: Vec<BigRational> = vec![BigRational::zero(); m];
    for i in 0..m {
        let mut acc = xi_vals[i].clone();
        for j in 0..i {
            let k = kostka(&big[j], &big[i])?;
            if !k.is_zero() {
                acc -= BigRational::from_integer(BigInt::from(k)) * &chi_rec[j];
            }
        }
        chi_rec[i] = acc;
    }
    for (i, lam) in big.iter().enumerate() {
        if lam.part(1) == n - t && u.inner_irr_char(lam)? != chi_rec[i] {
            return Ok(false);
        }
    }
    Ok(true)
}

impl WeightReport {
    pub fn to_json(&self) -> Value {
        let weights: Vec<Value> = partitions_of(self.n)
            .iter()
            .filter_map(|mu| {
                let v = self.w.get(mu);
                if v.is_zero() {
                    None
                } else {
                    let (num, den) = rational_json(&v);
                    Some(json!({
                        "cycle_type": mu.to_string(),
                        "value_num": num,
                        "value_den": den,
                    }))
                }
            })
            .collect();

        let spectrum_json: Vec<Value> = match &self.spectrum {
            Some(s) => s
                .entries
                .iter()
                .map(|e| {
                    let (num, den) = rational_json(&e.eigenvalue);
                    json!({
                        "partition": e.partition.to_string(),
                        "dimension": biguint_json(&e.dimension),
                        "eigenvalue_num": num,
                        "eigenvalue_den": den,
                        "multiplicity": biguint_json(&e.multiplicity),
                    })
                })
                .collect(),
            None => self
                .fat_eigenvalues
                .iter()
                .map(|(p, ev)| {
                    let dim = p.hook_dimension().expect("fat label dimension");
                    let (num, den) = rational_json(ev);
                    json!({
                        "partition": p.to_string(),
                        "dimension": biguint_json(&dim),
                        "eigenvalue_num": num,
                        "eigenvalue_den": den,
                        "multiplicity": biguint_json(&(&dim * &dim)),
                    })
                })
                .collect(),
        };

        let (nu_num, nu_den) = rational_json(&self.nu);
        let (c4n, c4d) = rational_json(&self.conditions.max_abs_fat_noncritical);
        let (c5n, c5d) = rational_json(&self.conditions.max_abs_weight_times_factorial);
        let mut conditions = json!({
            "mode": if self.fat_only { "fat_only" } else { "full" },
            "support_on_t_derangements": self.conditions.support_on_t_derangements,
            "lambda_top_is_one": self.conditions.lambda_top_is_one,
            "critical_eigenvalues_equal_nu": self.conditions.critical_equal_nu,
            "max_abs_fat_noncritical_num": c4n,
            "max_abs_fat_noncritical_den": c4d,
            "max_abs_weight_times_n_factorial_num": c5n,
            "max_abs_weight_times_n_factorial_den": c5d,
            "tall_eigenvalues_zero": self.conditions.tall_zero,
            "eta_identity": self.eta_identity,
            "nu_num": nu_num,
            "nu_den": nu_den,
            "eta_range_warnings": self.eta_range_warnings.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        });
        {
            let obj = conditions.as_object_mut().unwrap();
            obj.insert(
                "trace_identity".into(),
                match self.trace_identity {
                    Some(b) => Value::Bool(b),
                    None => Value::Null,
                },
            );
            if let Some(lm) = &self.lambda_min {
                let (a, b) = rational_json(lm);
                obj.insert("lambda_min_num".into(), a);
                obj.insert("lambda_min_den".into(), b);
            } else {
                obj.insert("lambda_min_num".into(), Value::Null);
                obj.insert("lambda_min_den".into(), Value::Null);
            }
            obj.insert(
                "lambda_min_on_critical".into(),
                match self.lambda_min_on_critical {
                    Some(b) => Value::Bool(b),
                    None => Value::Null,
                },
            );
            if let Some(g) = &self.spectral_gap {
                let (a, b) = rational_json(g);
                obj.insert("spectral_gap_num".into(), a);
                obj.insert("spectral_gap_den".into(), b);
            } else {
                obj.insert("spectral_gap_num".into(), Value::Null);
                obj.insert("spectral_gap_den".into(), Value::Null);
            }
        }

        let (bound_num, bound_den) = match &self.bound {
            Some(b) => {
                let (a, bden) = rational_json(b);
                (a, bden)
            }
            None => (Value::Null, Value::Null),
        };

        json!({
            "n": self.n,
            "t": self.t,
            "weights": weights,
            "spectrum": spectrum_json,
            "conditions": conditions,
            "bound_num": bound_num,
            "bound_den": bound_den,
            "lambda_min_partitions": self.lambda_min_partitions.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::big_rat;
    use crate::counting::no_short_cycle_counts;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn epsilon_eta_examples() {
        // t = 1: empty sum
        let (e, h) = epsilon_eta(7, 1, &p(&[7])).unwrap();
        assert!(e.is_zero());
        assert!(h.is_one());
        // t = 2, beta = (n): K_{(n-1,1),(n)} = 0
        let (e, h) = epsilon_eta(7, 2, &p(&[7])).unwrap();
        assert!(e.is_zero());
        assert!(h.is_one());
        // t = 2, n = 7, beta = (6,1)
        let (e, h) = epsilon_eta(7, 2, &p(&[6, 1])).unwrap();
        assert_eq!(e, big_rat(6, 20));
        assert_eq!(h, big_rat(7, 10));
        // beta not fat enough
        assert!(epsilon_eta(7, 2, &p(&[5, 2])).is_err());
    }

    #[test]
    fn class_collections_examples() {
        // t=1, alpha=(n): all types with no fixed point; even total = E_{n,1}
        let (types, even) = class_collections(7, 1, &p(&[7]), Parity::Even).unwrap();
        assert!(types.iter().all(|ct| ct.parts().iter().all(|&l| l >= 2)));
        let (e, _) = no_short_cycle_counts(7, 1);
        assert_eq!(even, e);
        // t=2, n=7, alpha=(6,1): subdivide 6 into parts >= 3
        let (types, _) = class_collections(7, 2, &p(&[6, 1]), Parity::Even).unwrap();
        let (odd_types, _) = class_collections(7, 2, &p(&[6, 1]), Parity::Odd).unwrap();
        let mut all: Vec<Partition> = types.into_iter().chain(odd_types).collect();
        all.sort();
        assert_eq!(all, vec![p(&[3, 3, 1]), p(&[6, 1])]);
        // parity split partitions the set
        let (all_types, e, o) = collections_with_sizes(7, 2, &p(&[6, 1])).unwrap();
        let total: BigUint = all_types.iter().map(|ct| ct.class_size()).sum();
        assert_eq!(e + o, total);
        // regime guard
        assert!(matches!(
            class_collections(6, 2, &p(&[6]), Parity::Even),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn collections_disjoint_across_labels() {
        use std::collections::HashSet;
        for (n, t) in [(7usize, 2usize), (8, 2), (10, 3)] {
            let mut seen: HashSet<Partition> = HashSet::new();
            for gamma in fat_partitions(n, t - 1).unwrap() {
                let (types, _, _) = collections_with_sizes(n, t, &gamma).unwrap();
                for ct in types {
                    assert!(seen.insert(ct), "collections overlap at n={} t={}", n, t);
                }
            }
        }
    }

    #[test]
    fn t1_construction_small_n() {
        // w+ uniform on even derangements, w- on odd; lambda_(n) = 1,
        // lambda_(n-1,1) = -1/(n-1), lambda_(1^n) = 0
        for n in 5..=7usize {
            let rep = solve_weights(n, 1).unwrap();
            assert!(rep.conditions.exact_all_hold(), "n={}", n);
            assert!(rep.eta_identity);
            assert_eq!(rep.trace_identity, Some(true));
            let s = rep.spectrum.as_ref().unwrap();
            assert_eq!(
                s.eigenvalue(&p(&[n - 1, 1])).unwrap(),
                &BigRational::new(BigInt::from(-1), BigInt::from(n as i64 - 1))
            );
            assert!(s
                .eigenvalue(&Partition::new(vec![1; n]).unwrap())
                .unwrap()
                .is_zero());
            // uniformity of the halves
            let wp = rep.w_plus.as_ref().unwrap();
            let (e, o) = no_short_cycle_counts(n, 1);
            let expect = BigRational::new(BigInt::one(), BigInt::from(e));
            for (_, v) in wp.support() {
                assert_eq!(v, &expect);
            }
            let wm = rep.w_minus.as_ref().unwrap();
            let expect = BigRational::new(BigInt::one(), BigInt::from(o));
            for (_, v) in wm.support() {
                assert_eq!(v, &expect);
            }
            // lambda_min sits exactly on (n-1,1) from n = 5 on, so the
            // bound collapses to (n-1)!
            assert_eq!(rep.lambda_min_on_critical, Some(true));
            assert_eq!(
                rep.lambda_min_partitions,
                vec![p(&[n - 1, 1])],
                "n={}",
                n
            );
            assert_eq!(rep.bound.clone().unwrap(), rat_from_uint(&factorial(n - 1)));
        }
    }

    #[test]
    fn t2_n7_conditions_exact() {
        let rep = solve_weights(7, 2).unwrap();
        assert!(rep.conditions.exact_all_hold());
        assert_eq!(rep.nu, big_rat(-1, 20));
        assert!(rep.eta_identity);
        assert_eq!(rep.trace_identity, Some(true));
    }

    #[test]
    fn regime_and_ceiling_errors() {
        assert!(matches!(solve_weights(3, 2), Err(Error::Resource(_))));
        assert!(matches!(solve_weights(12, 3), Err(Error::Resource(_))));
    }

    #[test]
    fn scaled_adjacency_satisfies_conditions_1_2_3_at_t1() {
        // dividing the t=1 adjacency indicator by the degree gives
        // lambda_top = 1 and lambda_(4,1) = -11/44 = -1/4 = nu
        let w = ClassFunction::t_derangement_indicator(5, 1).unwrap();
        let scaled = w.scale(&big_rat(1, 44));
        let rep = verify_conditions(&scaled, 5, 1).unwrap();
        assert!(rep.conditions.support_on_t_derangements);
        assert!(rep.conditions.lambda_top_is_one);
        assert!(rep.conditions.critical_equal_nu);
        assert_eq!(rep.nu, big_rat(-1, 4));
    }

    #[test]
    fn support_condition_fails_on_bad_class() {
        let mut w = ClassFunction::zero(5);
        // (3,1,1) fixes points, not a 1-derangement class
        w.set(p(&[3, 1, 1]), BigRational::one()).unwrap();
        let rep = verify_conditions(&w, 5, 1).unwrap();
        assert!(!rep.conditions.support_on_t_derangements);
    }

    #[test]
    fn determine_reconstruction_on_pseudo_random_weights() {
        for (n, t) in [(6, 1), (7, 2), (8, 2), (9, 3)] {
            let mut u = ClassFunction::zero(n);
            let mut k = 0i64;
            for mu in partitions_of(n) {
                if cycle_type_is_t_derangement(&mu, t) {
                    k += 1;
                    let num = (k * 7 + 3) % 11 - 5;
                    u.set(mu, BigRational::new(BigInt::from(num), BigInt::from(k + 2)))
                        .unwrap();
                }
            }
            assert!(
                determine_reconstruction_check(&u, n, t).unwrap(),
                "n={} t={}",
                n,
                t
            );
        }
        // tampering with one value on a non-derangement class is rejected
        let mut u = ClassFunction::zero(6);
        u.set(p(&[4, 1, 1]), BigRational::one()).unwrap();
        assert!(determine_reconstruction_check(&u, 6, 1).is_err());
    }

    #[test]
    fn fat_only_agrees_with_full_at_small_n() {
        let full = solve_weights(7, 2).unwrap();
        let fat = solve_weights_fat_only(7, 2).unwrap();
        assert_eq!(fat.fat_eigenvalues, full.fat_eigenvalues);
        assert_eq!(
            fat.conditions.exact_all_hold(),
            full.conditions.exact_all_hold()
        );
        assert!(fat.eta_identity);
    }
}
