use crate::algebra::Point;
use crate::error::{Error, Result};
use crate::lattice::Model;
use crate::partition::{partition_at, Engine};
use crate::weights::WeightScheme;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetryReport {
    /// Neither column carries a boundary path on top or bottom, so
    /// invariance is expected.
    pub hypothesis: bool,
    /// Both column indices exceed every top-boundary entry.
    pub beyond_top: bool,
    pub equal: bool,
}

/// Compares `Z` at `point` with `Z` after exchanging `(a_j, b_j)` and
/// `(a_(j+1), b_(j+1))`.
pub fn asymptotic_symmetry_check(
    model: &Model,
    j: u32,
    scheme: &dyn WeightScheme,
    point: &Point,
    engine: Engine,
) -> Result<SymmetryReport> {
    let m = model.dims.cols;
    if j == 0 || j as usize >= m {
        return Err(Error::OutOfRange {
            what: "swapped column",
            value: j as usize,
            max: m.saturating_sub(1),
        });
    }
    let b = &model.boundary;
    let free = |c: u32| !b.top.contains(&c) && !b.bottom.contains(&c);
    let z = partition_at(model, scheme, point, engine)?.value;
    let zs = partition_at(model, scheme, &point.swap_cols(j), engine)?.value;
    Ok(SymmetryReport {
        hypothesis: free(j) && free(j + 1),
        beyond_top: b.top.iter().all(|&t| t < j),
        equal: z == zs,
    })
}
