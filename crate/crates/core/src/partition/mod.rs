//! Partition functions: weighted sums over admissible states, evaluated
//! symbolically or at rational points, plus cross-attached models.

mod engine;
mod table;

pub use engine::{partition_brute, partition_dp, partition_with, Engine, PartitionResult};
pub use table::{Labels, SiteTable};

use num_rational::BigRational;

use crate::algebra::{Point, Polynomial, RationalFunction, Ring};
use crate::error::{Error, Result};
use crate::lattice::{GridDims, Model};
use crate::weights::{CrossWeights, Orientation, WeightScheme};

/// Largest `rows * cols` accepted in symbolic mode.
pub const SYMBOLIC_SITE_LIMIT: usize = 36;
/// Widest grid accepted in point mode.
pub const POINT_COL_LIMIT: usize = 20;

pub fn check_symbolic_size(dims: GridDims) -> Result<()> {
    if dims.sites() > SYMBOLIC_SITE_LIMIT {
        return Err(Error::SymbolicTooLarge {
            rows: dims.rows,
            cols: dims.cols,
            limit: SYMBOLIC_SITE_LIMIT,
        });
    }
    Ok(())
}

pub fn check_point_size(dims: GridDims) -> Result<()> {
    if dims.cols > POINT_COL_LIMIT {
        return Err(Error::ProfileTooWide {
            cols: dims.cols,
            limit: POINT_COL_LIMIT,
        });
    }
    Ok(())
}

/// `Z` as a polynomial in the spectral parameters.
pub fn partition_symbolic(
    model: &Model,
    scheme: &dyn WeightScheme,
    engine: Engine,
) -> Result<PartitionResult<Polynomial>> {
    check_symbolic_size(model.dims)?;
    let table = SiteTable::symbolic(scheme, model.dims, &Labels::identity(model.dims));
    Ok(partition_with(model, &table, engine))
}

/// `Z` evaluated at a rational point.
pub fn partition_at(
    model: &Model,
    scheme: &dyn WeightScheme,
    point: &Point,
    engine: Engine,
) -> Result<PartitionResult<BigRational>> {
    partition_labeled_at(model, scheme, &Labels::identity(model.dims), point, engine)
}

/// `Z` with relabelled rows and columns, evaluated at a rational point.
pub fn partition_labeled_at(
    model: &Model,
    scheme: &dyn WeightScheme,
    labels: &Labels,
    point: &Point,
    engine: Engine,
) -> Result<PartitionResult<BigRational>> {
    check_point_size(model.dims)?;
    let table = SiteTable::at_point(scheme, model.dims, labels, point)?;
    Ok(partition_with(model, &table, engine))
}

/// `Z` divided by the product of a1 over every site, so that appending
/// empty rows or columns leaves it unchanged.
pub fn normalized_symbolic(model: &Model, scheme: &dyn WeightScheme, engine: Engine) -> Result<RationalFunction> {
    check_symbolic_size(model.dims)?;
    let table = SiteTable::symbolic(scheme, model.dims, &Labels::identity(model.dims));
    let z = partition_with(model, &table, engine).value;
    RationalFunction::new(z, table.empty_product())
}

pub fn normalized_at(model: &Model, scheme: &dyn WeightScheme, point: &Point, engine: Engine) -> Result<BigRational> {
    check_point_size(model.dims)?;
    let table = SiteTable::at_point(scheme, model.dims, &Labels::identity(model.dims), point)?;
    let den = table.empty_product();
    if Ring::is_zero(&den) {
        return Err(Error::VanishingWeight {
            what: "product of a1 over all sites".into(),
        });
    }
    Ok(partition_with(model, &table, engine).value / den)
}

/// Where a cross vertex is attached: on rows `(i, i+1)` or columns `(j, j+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Attachment {
    Rows(u32),
    Cols(u32),
}

impl Attachment {
    /// Orientation and label pair of the cross used for this attachment.
    pub fn cross_pair(self) -> (Orientation, (u32, u32)) {
        match self {
            Attachment::Rows(i) => (Orientation::Horizontal, (i + 1, i)),
            Attachment::Cols(j) => (Orientation::Vertical, (j, j + 1)),
        }
    }

    fn check(self, dims: GridDims) -> Result<()> {
        let (k, max, what) = match self {
            Attachment::Rows(i) => (i, dims.rows, "attached row"),
            Attachment::Cols(j) => (j, dims.cols, "attached column"),
        };
        if k == 0 || k as usize >= max {
            return Err(Error::OutOfRange {
                what,
                value: k as usize,
                max: max.saturating_sub(1),
            });
        }
        Ok(())
    }
}

/// Side of the grid the cross sits on. For rows the outer side is the left
/// edge and the inner side the right edge; for columns, top and bottom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Outer,
    Inner,
}

fn set_edge(set: &mut std::collections::BTreeSet<u32>, k: u32, on: bool) {
    if on {
        set.insert(k);
    } else {
        set.remove(&k);
    }
}

/// Partition function of the grid with a cross vertex attached.
///
/// The external ports of the cross take the model's boundary values; the
/// ports facing the grid are summed over. On the outer side the lines have
/// passed through the cross before entering the grid, so the grid's two
/// rows (or columns) carry exchanged labels. `table_for` builds site weights
/// for a given labelling.
pub fn augmented_partition<R: Ring>(
    model: &Model,
    cross: &CrossWeights<R>,
    attachment: Attachment,
    side: Side,
    engine: Engine,
    table_for: &dyn Fn(&Labels) -> Result<SiteTable<R>>,
) -> Result<R> {
    attachment.check(model.dims)?;
    let (orientation, pair) = attachment.cross_pair();
    if cross.orientation != orientation || cross.pair != pair {
        return Err(Error::Invalid(format!(
            "attachment needs the {orientation} cross for ({}, {})",
            pair.0, pair.1
        )));
    }
    let natural = Labels::identity(model.dims);
    let b = &model.boundary;
    let mut total = R::zero();
    match (attachment, side) {
        (Attachment::Rows(i), Side::Outer) => {
            let (nw, sw) = (b.left.contains(&i), b.left.contains(&(i + 1)));
            let table = table_for(&natural.swap_rows(i))?;
            for (ne, se) in [(false, false), (false, true), (true, false), (true, true)] {
                let c = cross.at([nw, sw, ne, se]);
                if c.is_zero() {
                    continue;
                }
                let mut m = model.clone();
                set_edge(&mut m.boundary.left, i, ne);
                set_edge(&mut m.boundary.left, i + 1, se);
                total = total.plus(&c.times(&partition_with(&m, &table, engine).value));
            }
        }
        (Attachment::Rows(i), Side::Inner) => {
            let (ne, se) = (b.right.contains(&i), b.right.contains(&(i + 1)));
            let table = table_for(&natural)?;
            for (nw, sw) in [(false, false), (false, true), (true, false), (true, true)] {
                let c = cross.at([nw, sw, ne, se]);
                if c.is_zero() {
                    continue;
                }
                let mut m = model.clone();
                set_edge(&mut m.boundary.right, i, nw);
                set_edge(&mut m.boundary.right, i + 1, sw);
                total = total.plus(&partition_with(&m, &table, engine).value.times(&c));
            }
        }
        (Attachment::Cols(j), Side::Outer) => {
            let (nw, ne) = (b.top.contains(&j), b.top.contains(&(j + 1)));
            let table = table_for(&natural.swap_cols(j))?;
            for (sw, se) in [(false, false), (false, true), (true, false), (true, true)] {
                let c = cross.at([nw, ne, sw, se]);
                if c.is_zero() {
                    continue;
                }
                let mut m = model.clone();
                set_edge(&mut m.boundary.top, j, sw);
                set_edge(&mut m.boundary.top, j + 1, se);
                total = total.plus(&c.times(&partition_with(&m, &table, engine).value));
            }
        }
        (Attachment::Cols(j), Side::Inner) => {
            let (sw, se) = (b.bottom.contains(&j), b.bottom.contains(&(j + 1)));
            let table = table_for(&natural)?;
            for (nw, ne) in [(false, false), (false, true), (true, false), (true, true)] {
                let c = cross.at([nw, ne, sw, se]);
                if c.is_zero() {
                    continue;
                }
                let mut m = model.clone();
                set_edge(&mut m.boundary.bottom, j, nw);
                set_edge(&mut m.boundary.bottom, j + 1, ne);
                total = total.plus(&partition_with(&m, &table, engine).value.times(&c));
            }
        }
    }
    Ok(total)
}

/// [`augmented_partition`] at a rational point, with the cross solved there.
pub fn augmented_partition_at(
    model: &Model,
    scheme: &dyn WeightScheme,
    point: &Point,
    attachment: Attachment,
    side: Side,
    engine: Engine,
) -> Result<BigRational> {
    let (orientation, pair) = attachment.cross_pair();
    let cross = crate::weights::solve_cross_point(scheme, pair, orientation, 1, point, Default::default())?;
    augmented_partition(model, &cross, attachment, side, engine, &|labels| {
        SiteTable::at_point(scheme, model.dims, labels, point)
    })
}
