use std::fmt;

use serde::Serialize;

use crate::algebra::{a, linalg::bareiss_det, x, Polynomial};
use crate::error::{Error, Result};

/// A partition: weakly decreasing nonnegative parts with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PartitionShape(Vec<u32>);

impl PartitionShape {
    pub fn new(mut parts: Vec<u32>) -> Result<PartitionShape> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("partition {parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(PartitionShape(parts))
    }

    pub fn empty() -> PartitionShape {
        PartitionShape(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `k` (zero-based), zero past the end.
    pub fn part(&self, k: usize) -> u32 {
        self.0.get(k).copied().unwrap_or(0)
    }
}

impl fmt::Display for PartitionShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, PartialOrd, Ord)]
#[serde(rename_all = "lowercase")]
pub enum SignConvention {
    Plus,
    Minus,
}

impl SignConvention {
    pub fn name(self) -> &'static str {
        match self {
            SignConvention::Plus => "plus",
            SignConvention::Minus => "minus",
        }
    }

    pub fn parse(s: &str) -> Result<SignConvention> {
        match s {
            "plus" => Ok(SignConvention::Plus),
            "minus" => Ok(SignConvention::Minus),
            _ => Err(Error::Invalid(format!("unknown sign convention {s:?} (expected plus or minus)"))),
        }
    }
}

/// `(x_i | a)^k`: the product of `x_i + a_t` (or `x_i - a_t`) for `t = 1..k`.
pub fn shifted_power(i: u32, k: u32, sign: SignConvention) -> Polynomial {
    let factors: Vec<Polynomial> = (1..=k)
        .map(|t| match sign {
            SignConvention::Plus => &x(i) + &a(t),
            SignConvention::Minus => &x(i) - &a(t),
        })
        .collect();
    Polynomial::product(&factors)
}

fn alternant_ratio(shape: &PartitionShape, n: usize, power: &dyn Fn(u32, u32) -> Polynomial) -> Result<Polynomial> {
    if shape.len() > n {
        return Err(Error::OutOfRange {
            what: "partition length",
            value: shape.len(),
            max: n,
        });
    }
    let matrix = |shift: &dyn Fn(usize) -> u32| -> Vec<Vec<Polynomial>> {
        (1..=n as u32)
            .map(|i| (0..n).map(|j| power(i, shift(j) + (n - 1 - j) as u32)).collect())
            .collect()
    };
    let num = bareiss_det(matrix(&|j| shape.part(j)))?;
    let den = bareiss_det(matrix(&|_| 0))?;
    num.divide_exact(&den)
}

/// Factorial Schur polynomial in `x_1..x_n` with shifts `a_1, a_2, ..`, as a
/// ratio of alternants in the shifted powers.
pub fn factorial_schur_alternant(shape: &PartitionShape, n: usize, sign: SignConvention) -> Result<Polynomial> {
    alternant_ratio(shape, n, &|i, k| shifted_power(i, k, sign))
}

/// Classical Schur polynomial in `x_1..x_n` as a ratio of plain alternants.
pub fn classical_schur(shape: &PartitionShape, n: usize) -> Result<Polynomial> {
    alternant_ratio(shape, n, &|i, k| x(i).pow(k))
}
