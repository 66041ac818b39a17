use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::polynomial::Polynomial;
use super::var::{Family, VarId};
use crate::error::{Error, Result};

/// An assignment of exact rational values to spectral parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Point {
    values: BTreeMap<VarId, BigRational>,
}

impl Point {
    pub fn new() -> Point {
        Point::default()
    }

    pub fn with(mut self, v: VarId, value: BigRational) -> Point {
        self.values.insert(v, value);
        self
    }

    pub fn set(&mut self, v: VarId, value: BigRational) {
        self.values.insert(v, value);
    }

    pub fn get(&self, v: VarId) -> Result<&BigRational> {
        self.values.get(&v).ok_or(Error::UnassignedVariable(v))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VarId, &BigRational)> {
        self.values.iter()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn remap<F: Fn(VarId) -> VarId>(&self, f: F) -> Point {
        Point {
            values: self.values.iter().map(|(&v, c)| (f(v), c.clone())).collect(),
        }
    }

    /// The point with `(x_i, y_i)` and `(x_{i+1}, y_{i+1})` exchanged, so that
    /// `p.swap_rows(i)` evaluates a function at `s_i` of its row parameters.
    pub fn swap_rows(&self, i: u32) -> Point {
        self.remap(|v| v.swap_row(i))
    }

    /// The point with `(a_j, b_j)` and `(a_{j+1}, b_{j+1})` exchanged.
    pub fn swap_cols(&self, j: u32) -> Point {
        self.remap(|v| v.swap_col(j))
    }

    /// Values as canonical `num/den` strings keyed by variable name.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .values
            .iter()
            .map(|(v, c)| (v.to_string(), serde_json::Value::String(format_rational(c))))
            .collect();
        serde_json::Value::Object(map)
    }

    /// Parses `{"x1": "1/2", "a1": 3, ...}`; values may be strings or integers.
    pub fn from_json(value: &serde_json::Value) -> Result<Point> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Invalid("point must be a JSON object".into()))?;
        let mut point = Point::new();
        for (name, raw) in obj {
            let var = parse_var_name(name)
                .ok_or_else(|| Error::Invalid(format!("bad variable name {name:?}")))?;
            let value = match raw {
                serde_json::Value::String(s) => parse_rational(s)?,
                serde_json::Value::Number(n) => {
                    let k = n
                        .as_i64()
                        .ok_or_else(|| Error::Invalid(format!("non-integer number for {name}")))?;
                    BigRational::from_integer(BigInt::from(k))
                }
                _ => return Err(Error::Invalid(format!("bad value for {name}"))),
            };
            point.set(var, value);
        }
        Ok(point)
    }
}

pub(crate) fn parse_var_name(name: &str) -> Option<VarId> {
    let mut chars = name.chars();
    let family = Family::from_letter(chars.next()?)?;
    let index: u32 = chars.as_str().parse().ok()?;
    (index >= 1).then(|| VarId::new(family, index))
}

pub fn format_rational(c: &BigRational) -> String {
    if c.denom() == &BigInt::from(1) {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Invalid(format!("bad rational {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Seeded sampler for verification points.
///
/// Coordinates are drawn uniformly from `{-9..9} \ {0}` over denominators
/// `{1, 2, 3}`. A draw is rejected and repeated whenever one of the guard
/// polynomials vanishes at it.
pub struct PointSampler {
    rng: ChaCha8Rng,
}

impl PointSampler {
    pub fn new(seed: u64) -> PointSampler {
        PointSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn coordinate(&mut self) -> BigRational {
        let mut num = self.rng.gen_range(-9i64..=8);
        if num >= 0 {
            num += 1;
        }
        let den = self.rng.gen_range(1i64..=3);
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    /// Draws values for `x_i, y_i` (`i <= rows`) and `a_j, b_j` (`j <= cols`).
    pub fn sample(&mut self, rows: u32, cols: u32, guards: &[Polynomial]) -> Point {
        loop {
            let mut p = Point::new();
            for i in 1..=rows {
                p.set(VarId::x(i), self.coordinate());
                p.set(VarId::y(i), self.coordinate());
            }
            for j in 1..=cols {
                p.set(VarId::a(j), self.coordinate());
                p.set(VarId::b(j), self.coordinate());
            }
            let generic = guards
                .iter()
                .all(|g| g.evaluate(&p).map(|v| !v.is_zero()).unwrap_or(false));
            if generic {
                return p;
            }
        }
    }
}
