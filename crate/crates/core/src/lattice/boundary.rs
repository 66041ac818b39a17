use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridDims {
    pub rows: usize,
    pub cols: usize,
}

impl GridDims {
    pub fn new(rows: usize, cols: usize) -> Result<GridDims> {
        if rows == 0 {
            return Err(Error::OutOfRange {
                what: "row count",
                value: rows,
                max: usize::MAX,
            });
        }
        if cols == 0 {
            return Err(Error::OutOfRange {
                what: "column count",
                value: cols,
                max: usize::MAX,
            });
        }
        Ok(GridDims { rows, cols })
    }

    pub fn sites(&self) -> usize {
        self.rows * self.cols
    }
}

/// A strictly decreasing sequence of positive integers, possibly empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Signature(Vec<u32>);

impl Signature {
    pub fn new(parts: Vec<u32>) -> Result<Signature> {
        if parts.contains(&0) {
            return Err(Error::InvalidSignature {
                parts,
                reason: "parts must be positive".into(),
            });
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidSignature {
                parts,
                reason: "parts must be strictly decreasing".into(),
            });
        }
        Ok(Signature(parts))
    }

    /// `(d, d-1, .., 1)`.
    pub fn delta(d: u32) -> Signature {
        Signature((1..=d).rev().collect())
    }

    /// The signature listing the elements of `set` in decreasing order.
    pub fn from_set(set: &BTreeSet<u32>) -> Result<Signature> {
        Signature::new(set.iter().rev().copied().collect())
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

    pub fn contains(&self, k: u32) -> bool {
        self.0.contains(&k)
    }

    pub fn largest(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn to_set(&self) -> BTreeSet<u32> {
        self.0.iter().copied().collect()
    }

    /// All strictly decreasing signatures of length `d` with parts `<= max`.
    pub fn all(d: usize, max: u32) -> Vec<Signature> {
        fn go(d: usize, hi: u32, acc: &mut Vec<u32>, out: &mut Vec<Signature>) {
            if acc.len() == d {
                out.push(Signature(acc.clone()));
                return;
            }
            for p in (1..=hi).rev() {
                if (p as usize) < d - acc.len() {
                    break;
                }
                acc.push(p);
                go(d, p - 1, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(d, max, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Which boundary edges carry paths. Rows are numbered from 1 at the top,
/// columns from 1 at the left.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct BoundarySpec {
    pub left: BTreeSet<u32>,
    pub top: BTreeSet<u32>,
    pub right: BTreeSet<u32>,
    pub bottom: BTreeSet<u32>,
}

impl BoundarySpec {
    pub fn entering(&self) -> usize {
        self.left.len() + self.top.len()
    }

    pub fn exiting(&self) -> usize {
        self.right.len() + self.bottom.len()
    }
}

/// A grid together with its boundary conditions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Model {
    pub dims: GridDims,
    pub boundary: BoundarySpec,
}

#[derive(Serialize, Deserialize)]
struct ModelJson {
    rows: usize,
    cols: usize,
    #[serde(default)]
    left: Vec<u32>,
    #[serde(default)]
    top: Vec<u32>,
    #[serde(default)]
    right: Vec<u32>,
    #[serde(default)]
    bottom: Vec<u32>,
}

fn check_range(set: &BTreeSet<u32>, max: usize, what: &'static str) -> Result<()> {
    match set.iter().find(|&&k| k == 0 || k as usize > max) {
        Some(&k) => Err(Error::OutOfRange {
            what,
            value: k as usize,
            max,
        }),
        None => Ok(()),
    }
}

impl Model {
    /// Validated constructor: indices in range and as many paths enter as exit.
    pub fn new(dims: GridDims, boundary: BoundarySpec) -> Result<Model> {
        let model = Model { dims, boundary };
        model.validate()?;
        Ok(model)
    }

    pub fn validate(&self) -> Result<()> {
        check_range(&self.boundary.left, self.dims.rows, "left boundary row")?;
        check_range(&self.boundary.right, self.dims.rows, "right boundary row")?;
        check_range(&self.boundary.top, self.dims.cols, "top boundary column")?;
        check_range(&self.boundary.bottom, self.dims.cols, "bottom boundary column")?;
        let (entering, exiting) = (self.boundary.entering(), self.boundary.exiting());
        if entering != exiting {
            return Err(Error::Conservation { entering, exiting });
        }
        Ok(())
    }

    /// `n x n` grid, paths entering every top edge and leaving every right edge.
    pub fn dwbc(n: usize) -> Result<Model> {
        let dims = GridDims::new(n, n)?;
        let all: BTreeSet<u32> = (1..=n as u32).collect();
        Model::new(
            dims,
            BoundarySpec {
                top: all.clone(),
                right: all,
                ..Default::default()
            },
        )
    }

    /// Base case: exits on the top `d` rows, entries on the rightmost `d` columns.
    pub fn base(rows: usize, cols: usize, d: usize) -> Result<Model> {
        let dims = GridDims::new(rows, cols)?;
        if d > rows.min(cols) {
            return Err(Error::OutOfRange {
                what: "path count",
                value: d,
                max: rows.min(cols),
            });
        }
        Model::new(
            dims,
            BoundarySpec {
                right: (1..=d as u32).collect(),
                top: ((cols - d + 1) as u32..=cols as u32).collect(),
                ..Default::default()
            },
        )
    }

    /// Empty left and bottom boundaries, right boundary `alpha`, top boundary `beta`.
    pub fn from_signatures(dims: GridDims, alpha: &Signature, beta: &Signature) -> Result<Model> {
        Model::new(
            dims,
            BoundarySpec {
                right: sig_to_right_boundary(alpha, dims)?,
                top: sig_to_top_boundary(beta, dims)?,
                ..Default::default()
            },
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ModelJson {
            rows: self.dims.rows,
            cols: self.dims.cols,
            left: self.boundary.left.iter().copied().collect(),
            top: self.boundary.top.iter().copied().collect(),
            right: self.boundary.right.iter().copied().collect(),
            bottom: self.boundary.bottom.iter().copied().collect(),
        })
        .expect("model serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Model> {
        let raw: ModelJson = serde_json::from_value(value.clone())?;
        Model::new(
            GridDims::new(raw.rows, raw.cols)?,
            BoundarySpec {
                left: raw.left.into_iter().collect(),
                top: raw.top.into_iter().collect(),
                right: raw.right.into_iter().collect(),
                bottom: raw.bottom.into_iter().collect(),
            },
        )
    }
}

/// Rows carrying exits on the right boundary: the parts of `alpha` read as
/// row indices counted from the top.
pub fn sig_to_right_boundary(alpha: &Signature, dims: GridDims) -> Result<BTreeSet<u32>> {
    if let Some(p) = alpha.largest() {
        if p as usize > dims.rows {
            return Err(Error::OutOfRange {
                what: "right signature part",
                value: p as usize,
                max: dims.rows,
            });
        }
    }
    Ok(alpha.to_set())
}

/// Columns carrying entries on the top boundary: the parts of `beta` read as
/// column indices counted from the left.
pub fn sig_to_top_boundary(beta: &Signature, dims: GridDims) -> Result<BTreeSet<u32>> {
    if let Some(p) = beta.largest() {
        if p as usize > dims.cols {
            return Err(Error::OutOfRange {
                what: "top signature part",
                value: p as usize,
                max: dims.cols,
            });
        }
    }
    Ok(beta.to_set())
}
