use num_rational::BigRational;

use crate::algebra::{Point, Polynomial, Ring};
use crate::error::Result;
use crate::lattice::{GridDims, VertexKind};
use crate::weights::WeightScheme;

/// Which spectral labels the grid's rows and columns carry. The identity
/// labelling gives row `i` label `i`; the train argument needs swapped ones.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labels {
    pub rows: Vec<u32>,
    pub cols: Vec<u32>,
}

impl Labels {
    pub fn identity(dims: GridDims) -> Labels {
        Labels {
            rows: (1..=dims.rows as u32).collect(),
            cols: (1..=dims.cols as u32).collect(),
        }
    }

    /// Exchanges the labels of rows `i` and `i + 1` (one-based).
    pub fn swap_rows(mut self, i: u32) -> Labels {
        self.rows.swap(i as usize - 1, i as usize);
        self
    }

    /// Exchanges the labels of columns `j` and `j + 1` (one-based).
    pub fn swap_cols(mut self, j: u32) -> Labels {
        self.cols.swap(j as usize - 1, j as usize);
        self
    }
}

/// Bulk weights for every site of a grid, `w[i * cols + j][kind]`.
#[derive(Debug, Clone)]
pub struct SiteTable<R> {
    pub dims: GridDims,
    w: Vec<[R; 6]>,
}

impl<R: Ring> SiteTable<R> {
    pub fn from_fn(dims: GridDims, mut f: impl FnMut(usize, usize) -> [R; 6]) -> SiteTable<R> {
        let mut w = Vec::with_capacity(dims.sites());
        for i in 0..dims.rows {
            for j in 0..dims.cols {
                w.push(f(i, j));
            }
        }
        SiteTable { dims, w }
    }

    /// Weight of `kind` at zero-based site `(i, j)`.
    #[inline]
    pub fn get(&self, i: usize, j: usize, kind: VertexKind) -> &R {
        &self.w[i * self.dims.cols + j][kind.index()]
    }

    /// Product of the a1 weights over all sites.
    pub fn empty_product(&self) -> R {
        self.w.iter().fold(R::one(), |acc, s| acc.times(&s[VertexKind::A1.index()]))
    }
}

impl SiteTable<Polynomial> {
    pub fn symbolic(scheme: &dyn WeightScheme, dims: GridDims, labels: &Labels) -> SiteTable<Polynomial> {
        SiteTable::from_fn(dims, |i, j| scheme.bulk_all(labels.rows[i], labels.cols[j]))
    }

    pub fn evaluate(&self, point: &Point) -> Result<SiteTable<BigRational>> {
        let w = self
            .w
            .iter()
            .map(|site| {
                let v: Vec<BigRational> = site.iter().map(|p| p.evaluate(point)).collect::<Result<_>>()?;
                Ok(v.try_into().expect("six weights"))
            })
            .collect::<Result<_>>()?;
        Ok(SiteTable { dims: self.dims, w })
    }
}

impl SiteTable<BigRational> {
    pub fn at_point(
        scheme: &dyn WeightScheme,
        dims: GridDims,
        labels: &Labels,
        point: &Point,
    ) -> Result<SiteTable<BigRational>> {
        SiteTable::symbolic(scheme, dims, labels).evaluate(point)
    }
}
