use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::alternant::{factorial_schur_alternant, PartitionShape, SignConvention};
use crate::algebra::{Family, Point, Polynomial, VarId};
use crate::error::Result;
use crate::lattice::{BoundarySpec, GridDims, Model, Signature};
use crate::partition::{normalized_symbolic, Engine};
use crate::weights::ff_scheme;

/// How a top signature and the shift variables line up with a factorial
/// Schur polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, PartialOrd, Ord)]
pub struct Convention {
    pub sign: SignConvention,
    /// `lambda_k = alpha_k - (d - k) - offset`.
    pub offset: u32,
    /// Shift `a_t` is read as `a_(m+1-t)`.
    pub reverse_a: bool,
    /// The signature is first replaced by `m + 1 - alpha`, reversed.
    pub reflect: bool,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "sign={} offset={} reverse_a={} reflect={}",
            self.sign.name(),
            self.offset,
            self.reverse_a,
            self.reflect
        )
    }
}

/// The convention found by calibration and asserted from then on.
pub const PINNED_CONVENTION: Convention = Convention {
    sign: SignConvention::Minus,
    offset: 1,
    reverse_a: true,
    reflect: true,
};

pub fn convention_space() -> Vec<Convention> {
    let mut out = Vec::new();
    for sign in [SignConvention::Plus, SignConvention::Minus] {
        for offset in [0, 1] {
            for reverse_a in [false, true] {
                for reflect in [false, true] {
                    out.push(Convention {
                        sign,
                        offset,
                        reverse_a,
                        reflect,
                    });
                }
            }
        }
    }
    out
}

/// A grid with `alpha.len()` paths exiting on the top rows and entering on top at `alpha`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CalibrationInstance {
    pub rows: usize,
    pub cols: usize,
    pub alpha: Vec<u32>,
}

impl CalibrationInstance {
    pub fn signature(&self) -> Signature {
        Signature::new(self.alpha.clone()).expect("instances hold strict signatures")
    }

    pub fn model(&self) -> Result<Model> {
        let d = self.alpha.len() as u32;
        let boundary = BoundarySpec {
            right: (1..=d).collect(),
            top: self.signature().to_set(),
            ..Default::default()
        };
        Model::new(GridDims::new(self.rows, self.cols)?, boundary)
    }
}

impl fmt::Display for CalibrationInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} alpha={}", self.rows, self.cols, self.signature())
    }
}

/// Every signature with `1 <= d <= 2` parts on grids up to 3 rows and 4 columns.
pub fn calibration_instances() -> Vec<CalibrationInstance> {
    let mut out = Vec::new();
    for rows in 1..=3 {
        for cols in 1..=4 {
            for d in 1..=rows.min(cols).min(2) {
                for alpha in Signature::all(d, cols as u32) {
                    out.push(CalibrationInstance {
                        rows,
                        cols,
                        alpha: alpha.parts().to_vec(),
                    });
                }
            }
        }
    }
    out
}

/// Larger instances used only after calibration, to test the pinned convention.
pub fn assertion_instances() -> Vec<CalibrationInstance> {
    let mut out = calibration_instances();
    for alpha in Signature::all(3, 5) {
        out.push(CalibrationInstance {
            rows: 3,
            cols: 5,
            alpha: alpha.parts().to_vec(),
        });
    }
    out
}

/// Normalized `Z` for free-fermionic weights at `y = 0`, `b = 0`.
pub fn specialized_z(instance: &CalibrationInstance) -> Result<Polynomial> {
    let model = instance.model()?;
    let z = normalized_symbolic(&model, &ff_scheme(), Engine::Dp)?;
    let mut zero = Point::new();
    for i in 1..=instance.rows as u32 {
        zero.set(VarId::y(i), crate::algebra::rat(0, 1));
    }
    for j in 1..=instance.cols as u32 {
        zero.set(VarId::b(j), crate::algebra::rat(0, 1));
    }
    z.numerator().specialize(&zero).divide_exact(&z.denominator().specialize(&zero))
}

/// The partition a convention assigns to a signature, if it is one.
pub fn convention_shape(conv: Convention, alpha: &Signature, cols: usize) -> Option<PartitionShape> {
    let d = alpha.len() as i64;
    let parts: Vec<i64> = if conv.reflect {
        alpha.parts().iter().rev().map(|&p| cols as i64 + 1 - p as i64).collect()
    } else {
        alpha.parts().iter().map(|&p| p as i64).collect()
    };
    let lambda: Vec<i64> = parts
        .iter()
        .enumerate()
        .map(|(k, &p)| p - (d - 1 - k as i64) - conv.offset as i64)
        .collect();
    if lambda.iter().any(|&l| l < 0) {
        return None;
    }
    PartitionShape::new(lambda.into_iter().map(|l| l as u32).collect()).ok()
}

/// `q` with `z = q * s` when `q` is a single term.
pub fn monomial_quotient(z: &Polynomial, s: &Polynomial) -> Option<Polynomial> {
    let (mz, cz) = z.leading_term()?;
    let (ms, cs) = s.leading_term()?;
    let q = Polynomial::term(cz / cs, mz.checked_div(ms)?);
    (&q * s == *z).then_some(q)
}

/// The monomial prefactor relating `z` and the factorial Schur polynomial
/// under `conv`, or `None` when they do not match.
pub fn match_convention(conv: Convention, instance: &CalibrationInstance, z: &Polynomial) -> Result<Option<Polynomial>> {
    let Some(shape) = convention_shape(conv, &instance.signature(), instance.cols) else {
        return Ok(None);
    };
    let mut s = factorial_schur_alternant(&shape, instance.alpha.len(), conv.sign)?;
    if conv.reverse_a {
        let m = instance.cols as u32;
        if s.variables().iter().any(|v| v.family == Family::A && v.index > m) {
            return Ok(None);
        }
        s = s.map_vars(|v| if v.family == Family::A { VarId::a(m + 1 - v.index) } else { v });
    }
    Ok(monomial_quotient(z, &s))
}

#[derive(Debug, Clone, PartialEq)]
pub struct InstanceOutcome {
    pub instance: CalibrationInstance,
    pub z: Polynomial,
    /// Conventions matching this instance, with their prefactors.
    pub matches: Vec<(Convention, Polynomial)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CalibrationReport {
    pub outcomes: Vec<InstanceOutcome>,
    /// Conventions matching every instance.
    pub consistent: Vec<Convention>,
}

impl CalibrationReport {
    /// The unique consistent convention, if there is exactly one.
    pub fn found(&self) -> Option<Convention> {
        match self.consistent.as_slice() {
            [c] => Some(*c),
            _ => None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let instances: Vec<_> = self
            .outcomes
            .iter()
            .map(|o| {
                let matches: Vec<_> = o
                    .matches
                    .iter()
                    .map(|(c, q)| json!({"convention": c, "prefactor": q.to_string()}))
                    .collect();
                json!({"instance": o.instance, "z": o.z.to_string(), "matches": matches})
            })
            .collect();
        json!({
            "instances": instances,
            "consistent": self.consistent,
            "found": match self.found() {
                Some(c) => json!(c),
                None => json!("no match"),
            },
        })
    }
}

fn outcomes_for(instances: Vec<CalibrationInstance>, conventions: &[Convention]) -> Result<Vec<InstanceOutcome>> {
    instances
        .into_par_iter()
        .map(|instance| {
            let z = specialized_z(&instance)?;
            let mut matches = Vec::new();
            for &c in conventions {
                if let Some(q) = match_convention(c, &instance, &z)? {
                    matches.push((c, q));
                }
            }
            Ok(InstanceOutcome { instance, z, matches })
        })
        .collect()
}

/// Searches the convention space for the dictionary between specialized
/// partition functions and factorial Schur polynomials.
pub fn calibrate_schur_specialization() -> Result<CalibrationReport> {
    let space = convention_space();
    let outcomes = outcomes_for(calibration_instances(), &space)?;
    let consistent = space
        .into_iter()
        .filter(|c| outcomes.iter().all(|o| o.matches.iter().any(|(m, _)| m == c)))
        .collect();
    Ok(CalibrationReport { outcomes, consistent })
}

/// `prod_i x_i^(i-1)` over `d` rows: the prefactor left by the c2 weights
/// of the paths' turning points once `y = 0`.
pub fn staircase_prefactor(d: usize) -> Polynomial {
    let factors: Vec<Polynomial> = (1..=d as u32).map(|i| crate::algebra::x(i).pow(i - 1)).collect();
    Polynomial::product(&factors)
}

/// Checks the pinned convention, with the staircase prefactor, on every
/// assertion instance; returns the failures.
pub fn pinned_assertions() -> Result<Vec<CalibrationInstance>> {
    let outcomes = outcomes_for(assertion_instances(), &[PINNED_CONVENTION])?;
    Ok(outcomes
        .into_iter()
        .filter(|o| {
            let expect = staircase_prefactor(o.instance.alpha.len());
            !o.matches.iter().any(|(_, q)| *q == expect)
        })
        .map(|o| o.instance)
        .collect())
}
