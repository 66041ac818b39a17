use num_rational::BigRational;
use serde::Serialize;

use super::operator::SwitchContext;
use super::word::OperatorSymbol;
use crate::algebra::Point;
use crate::error::{Error, Result};
use crate::lattice::{Model, VertexKind};
use crate::partition::{partition_at, Engine};
use crate::weights::Orientation;

/// Occupancy of the two boundary edges an exchange relation moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExchangeCase {
    BothIn,
    BothOut,
    /// Only the lower-indexed edge is occupied.
    LowerOnly,
    /// Only the higher-indexed edge is occupied.
    UpperOnly,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExchangeReport {
    pub case: ExchangeCase,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

impl ExchangeReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Checks the exchange relation moving a right-boundary exit between rows
/// `(k, k+1)` (horizontal) or a top-boundary entry between columns
/// `(k, k+1)` (vertical), at one point.
///
/// The relation needs the opposite boundary empty on those two lines.
pub fn exchange_check_at(
    ctx: &mut SwitchContext<'_>,
    model: &Model,
    orientation: Orientation,
    k: u32,
    point: &Point,
    engine: Engine,
) -> Result<ExchangeReport> {
    let b = &model.boundary;
    let (moving, opposite, limit) = match orientation {
        Orientation::Horizontal => (&b.right, &b.left, model.dims.rows),
        Orientation::Vertical => (&b.top, &b.bottom, model.dims.cols),
    };
    if k == 0 || k as usize >= limit {
        return Err(Error::OutOfRange {
            what: "exchange line",
            value: k as usize,
            max: limit.saturating_sub(1),
        });
    }
    if opposite.contains(&k) || opposite.contains(&(k + 1)) {
        return Err(Error::Invalid(format!(
            "exchange on lines ({k}, {}) needs the opposite boundary empty there",
            k + 1
        )));
    }
    let case = match (moving.contains(&k), moving.contains(&(k + 1))) {
        (true, true) => ExchangeCase::BothIn,
        (false, false) => ExchangeCase::BothOut,
        (true, false) => ExchangeCase::LowerOnly,
        (false, true) => ExchangeCase::UpperOnly,
    };
    let sym = OperatorSymbol::forward(orientation, k);
    let cross = ctx.cross_at(orientation, super::operator::operator_pair(sym), point)?;
    let scheme = ctx.scheme();
    let swapped_point = match orientation {
        Orientation::Horizontal => point.swap_rows(k),
        Orientation::Vertical => point.swap_cols(k),
    };
    let z = partition_at(model, scheme, point, engine)?.value;
    let zs = partition_at(model, scheme, &swapped_point, engine)?.value;
    let moved = || -> Result<BigRational> {
        let mut m = model.clone();
        let set = match orientation {
            Orientation::Horizontal => &mut m.boundary.right,
            Orientation::Vertical => &mut m.boundary.top,
        };
        if !set.remove(&k) {
            set.remove(&(k + 1));
            set.insert(k);
        } else {
            set.insert(k + 1);
        }
        Ok(partition_at(&m, scheme, point, engine)?.value)
    };
    use VertexKind::*;
    let w = |kind| cross.get(kind).clone();
    let (lhs, rhs) = match case {
        ExchangeCase::BothOut => (zs, z),
        ExchangeCase::BothIn => (w(A1) * zs, w(A2) * z),
        ExchangeCase::LowerOnly => (w(A1) * zs, w(B2) * moved()? + w(C1) * &z),
        ExchangeCase::UpperOnly => (w(A1) * zs, w(B1) * moved()? + w(C2) * &z),
    };
    Ok(ExchangeReport { case, lhs, rhs })
}

/// `word(f)` minus `f` at a point, for a word expected to act as the identity.
pub fn identity_residual_at(
    ctx: &mut SwitchContext<'_>,
    word: &super::word::OperatorWord,
    f: &dyn Fn(&Point) -> Result<BigRational>,
    point: &Point,
) -> Result<BigRational> {
    Ok(ctx.apply_word_at(word, f, point)? - f(point)?)
}
