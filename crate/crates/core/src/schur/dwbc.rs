use serde_json::json;

use crate::algebra::{a, b, x, y, Polynomial};
use crate::error::Result;
use crate::lattice::Model;
use crate::partition::{partition_symbolic, Engine};
use crate::weights::WeightScheme;

/// Factors of the product formula as printed: `(x_i - y_j)` and `(1 - a_i b_j)` for `i < j`.
pub fn dwbc_product_candidate_factors(n: usize) -> Vec<Polynomial> {
    let one = Polynomial::one();
    let mut factors = Vec::new();
    for i in 1..=n as u32 {
        for j in i + 1..=n as u32 {
            factors.push(&x(i) - &y(j));
            factors.push(&one - &(&a(i) * &b(j)));
        }
    }
    factors
}

/// The product formula as printed: `prod_(i<j) (x_i - y_j)(1 - a_i b_j)`.
pub fn dwbc_product_candidate(n: usize) -> Polynomial {
    Polynomial::product(&dwbc_product_candidate_factors(n))
}

/// Binomials `x_i + y_j` and `1 - a_i b_j` with indices up to `n`, in a fixed order.
pub fn binomial_candidates(n: usize) -> Vec<Polynomial> {
    let one = Polynomial::one();
    let mut out = Vec::new();
    for i in 1..=n as u32 {
        for j in 1..=n as u32 {
            out.push(&x(i) + &y(j));
        }
    }
    for i in 1..=n as u32 {
        for j in 1..=n as u32 {
            out.push(&one - &(&a(i) * &b(j)));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct FactorReport {
    /// Candidate factors dividing the input, with multiplicities.
    pub factors: Vec<(Polynomial, u32)>,
    /// What is left after dividing every factor out.
    pub cofactor: Polynomial,
}

impl FactorReport {
    /// The factors account for everything up to a nonzero constant.
    pub fn is_complete(&self) -> bool {
        self.cofactor.is_constant() && !self.cofactor.is_zero()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let factors: Vec<_> = self
            .factors
            .iter()
            .map(|(f, k)| json!({"factor": f.to_string(), "multiplicity": k}))
            .collect();
        json!({"factors": factors, "cofactor": self.cofactor.to_string(), "complete": self.is_complete()})
    }
}

/// Divides `z` by each candidate as many times as it goes exactly.
pub fn trial_factor(z: &Polynomial, candidates: &[Polynomial]) -> FactorReport {
    let mut rest = z.clone();
    let mut factors = Vec::new();
    for f in candidates {
        let mut k = 0;
        while !rest.is_zero() {
            match rest.divide_exact(f) {
                Ok(q) => {
                    rest = q;
                    k += 1;
                }
                Err(_) => break,
            }
        }
        if k > 0 {
            factors.push((f.clone(), k));
        }
    }
    FactorReport { factors, cofactor: rest }
}

/// Symbolic DWBC partition function of size `n` and its binomial factorization.
pub fn factor_dwbc(n: usize, scheme: &dyn WeightScheme, engine: Engine) -> Result<(Polynomial, FactorReport)> {
    let z = partition_symbolic(&Model::dwbc(n)?, scheme, engine)?.value;
    let report = trial_factor(&z, &binomial_candidates(n));
    Ok((z, report))
}
