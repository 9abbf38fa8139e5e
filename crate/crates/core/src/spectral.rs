//! Class functions on S_n and the exact spectra of the normal Cayley graphs
//! (and pseudoadjacency matrices) they generate.
//!
//! For a class function w, the isotypical ideal U_alpha is an eigenspace of
//! the matrix A(w)_{sigma,pi} = w(sigma^{-1} pi) with eigenvalue
//!   lambda_alpha = (1/f^alpha) * sum_mu w(mu) |X_mu| chi_alpha(mu)
//! and multiplicity (f^alpha)^2.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use rayon::prelude::*;

use crate::arith::{factorial, rat_from_uint};
use crate::characters::{character_table, Flavor, MAX_TABLE_N};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::permutation::cycle_type_is_t_derangement;

/// A rational-valued class function on S_n, keyed by cycle type. Absent
/// classes take the value 0.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<Partition, BigRational>,
}

impl ClassFunction {
    pub fn zero(n: usize) -> Self {
        ClassFunction { n, values: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set(&mut self, class: Partition, value: BigRational) -> Result<()> {
        if class.n() != self.n {
            return Err(Error::Input(format!(
                "class {} is not a partition of {}",
                class, self.n
            )));
        }
        if value.is_zero() {
            self.values.remove(&class);
        } else {
            self.values.insert(class, value);
        }
        Ok(())
    }

    pub fn get(&self, class: &Partition) -> BigRational {
        self.values.get(class).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Classes with nonzero value, in increasing partition order.
    pub fn support(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.values.iter()
    }

    /// Indicator of all t-derangement classes of S_n.
    pub fn t_derangement_indicator(n: usize, t: usize) -> Result<ClassFunction> {
        if t < 1 || t >= n {
            return Err(Error::Input(format!(
                "need 1 <= t < n, got t={}, n={}",
                t, n
            )));
        }
        let mut w = ClassFunction::zero(n);
        for mu in partitions_of(n) {
            if cycle_type_is_t_derangement(&mu, t) {
                w.set(mu, BigRational::one())?;
            }
        }
        Ok(w)
    }

    /// Pointwise scaling.
    pub fn scale(&self, factor: &BigRational) -> ClassFunction {
        let mut out = ClassFunction::zero(self.n);
        for (k, v) in &self.values {
            let val = v * factor;
            if !val.is_zero() {
                out.values.insert(k.clone(), val);
            }
        }
        out
    }

    /// (self + other) / 2, the even/odd combination used by the weight
    /// construction.
    pub fn average_with(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if self.n != other.n {
            return Err(Error::input("averaging class functions of different n"));
        }
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut out = ClassFunction::zero(self.n);
        let mut keys: Vec<&Partition> = self.values.keys().collect();
        keys.extend(other.values.keys());
        keys.sort();
        keys.dedup();
        for k in keys {
            let v = (self.get(k) + other.get(k)) * &half;
            if !v.is_zero() {
                out.values.insert(k.clone(), v);
            }
        }
        Ok(out)
    }

    /// <w, xi_beta> = sum_mu |X_mu| w(mu) xi_beta(mu), the inner product
    /// against a permutation character.
    pub fn inner_perm_char(&self, beta: &Partition) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (mu, v) in &self.values {
            let xi = crate::characters::perm_character(beta, mu)?;
            acc += v * BigRational::from_integer(xi)
                * rat_from_uint(&mu.class_size());
        }
        Ok(acc)
    }

    /// <w, chi_alpha>, the inner product against an irreducible character.
    pub fn inner_irr_char(&self, alpha: &Partition) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (mu, v) in &self.values {
            let chi = crate::characters::irreducible_character(alpha, mu)?;
            acc += v * BigRational::from_integer(chi)
                * rat_from_uint(&mu.class_size());
        }
        Ok(acc)
    }

    /// sum_mu |X_mu| w(mu)^2, the squared l2 norm over the group.
    pub fn norm_sq(&self) -> BigRational {
        let mut acc = BigRational::zero();
        for (mu, v) in &self.values {
            acc += v * v * rat_from_uint(&mu.class_size());
        }
        acc
    }

    /// max over classes of |w(mu)|.
    pub fn max_abs(&self) -> BigRational {
        self.values
            .values()
            .map(|v| v.abs())
            .max()
            .unwrap_or_else(BigRational::zero)
    }
}

#[derive(Debug, Clone)]
pub struct SpectrumEntry {
    pub partition: Partition,
    pub eigenvalue: BigRational,
    pub dimension: BigUint,
    pub multiplicity: BigUint,
}

/// The full eigenvalue list of A(w), one entry per partition of n in
/// decreasing lexicographic order.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub n: usize,
    pub entries: Vec<SpectrumEntry>,
}

impl Spectrum {
    pub fn eigenvalue(&self, alpha: &Partition) -> Option<&BigRational> {
        self.entries
            .iter()
            .find(|e| &e.partition == alpha)
            .map(|e| &e.eigenvalue)
    }

    /// Eigenvalue on the constant functions, i.e. at the single-row label.
    pub fn lambda_const(&self) -> &BigRational {
        &self.entries[0].eigenvalue
    }

    pub fn lambda_min(&self) -> &BigRational {
        self.entries
            .iter()
            .map(|e| &e.eigenvalue)
            .min()
            .expect("nonempty spectrum")
    }

    /// All partitions attaining the minimum eigenvalue.
    pub fn lambda_min_partitions(&self) -> Vec<Partition> {
        let min = self.lambda_min().clone();
        self.entries
            .iter()
            .filter(|e| e.eigenvalue == min)
            .map(|e| e.partition.clone())
            .collect()
    }

    /// Multiplicities must tile the regular representation.
    pub fn multiplicity_sum(&self) -> BigUint {
        self.entries.iter().map(|e| e.multiplicity.clone()).sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        use crate::json::{biguint_json, rational_json};
        serde_json::json!({
            "n": self.n,
            "spectrum": self.entries.iter().map(|e| {
                let (num, den) = rational_json(&e.eigenvalue);
                serde_json::json!({
                    "partition": e.partition.to_string(),
                    "dimension": biguint_json(&e.dimension),
                    "eigenvalue_num": num,
                    "eigenvalue_den": den,
                    "multiplicity": biguint_json(&e.multiplicity),
                })
            }).collect::<Vec<_>>(),
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("partition,dimension,eigenvalue_num,eigenvalue_den,multiplicity\n");
        for e in &self.entries {
            out.push_str(&format!(
                "\"{}\",{},{},{},{}\n",
                e.partition,
                e.dimension,
                e.eigenvalue.numer(),
                e.eigenvalue.denom(),
                e.multiplicity
            ));
        }
        out
    }
}

/// Exact spectrum of the pseudoadjacency matrix A(w).
pub fn cayley_spectrum(w: &ClassFunction) -> Result<Spectrum> {
    let n = w.n();
    if n > MAX_TABLE_N {
        return Err(Error::Resource(format!(
            "full spectra need the character table, limited to n <= {}; got n={}",
            MAX_TABLE_N, n
        )));
    }
    let table = character_table(n, Flavor::Irreducible)?;
    let class_sizes: Vec<BigRational> = table
        .order
        .iter()
        .map(|mu| rat_from_uint(&mu.class_size()))
        .collect();
    let weights: Vec<BigRational> = table.order.iter().map(|mu| w.get(mu)).collect();
    let entries: Vec<SpectrumEntry> = table
        .order
        .par_iter()
        .enumerate()
        .map(|(i, alpha)| {
            let mut acc = BigRational::zero();
            for (j, wv) in weights.iter().enumerate() {
                if !wv.is_zero() {
                    acc += wv
                        * &class_sizes[j]
                        * BigRational::from_integer(table.values[i][j].clone());
                }
            }
            let dim = alpha.hook_dimension()?;
            let eigenvalue = acc / rat_from_uint(&dim);
            Ok(SpectrumEntry {
                partition: alpha.clone(),
                eigenvalue,
                dimension: dim.clone(),
                multiplicity: &dim * &dim,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Spectrum { n, entries })
}

/// Spectrum of the t-derangement graph: the Cayley graph generated by all
/// t-derangements. Its top eigenvalue is the degree.
pub fn adjacency_spectrum(n: usize, t: usize) -> Result<Spectrum> {
    let w = ClassFunction::t_derangement_indicator(n, t)?;
    cayley_spectrum(&w)
}

/// The weighted Hoffman/Delsarte bound N * (-lambda_min)/(lambda_const -
/// lambda_min) on independent sets, exact.
pub fn delsarte_bound(s: &Spectrum, group_order: &BigUint) -> Result<BigRational> {
    let lc = s.lambda_const().clone();
    let lm = s.lambda_min().clone();
    if lc <= lm {
        return Err(Error::Degenerate(format!(
            "lambda_const = {} does not exceed lambda_min = {}",
            lc, lm
        )));
    }
    Ok(rat_from_uint(group_order) * (-lm.clone()) / (lc - lm))
}

/// Verifies sum_alpha (f^alpha)^2 lambda_alpha^2 = n! * sum_tau w(tau)^2
/// exactly (the trace of A(w)^2 computed both ways).
pub fn trace_identity_check(w: &ClassFunction) -> Result<bool> {
    let s = cayley_spectrum(w)?;
    let mut lhs = BigRational::zero();
    for e in &s.entries {
        lhs += rat_from_uint(&e.multiplicity) * &e.eigenvalue * &e.eigenvalue;
    }
    let rhs = rat_from_uint(&factorial(w.n())) * w.norm_sq();
    Ok(lhs == rhs)
}
