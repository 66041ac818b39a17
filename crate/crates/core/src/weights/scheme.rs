use crate::algebra::{a, b, x, y, Polynomial};
use crate::error::{Error, Result};
use crate::lattice::VertexKind;

/// Bulk Boltzmann weights: one polynomial per vertex kind and site labels.
pub trait WeightScheme: Send + Sync {
    fn name(&self) -> &str;

    /// Weight of a `kind` vertex carrying row label `i` and column label `j`.
    fn bulk(&self, kind: VertexKind, i: u32, j: u32) -> Polynomial;

    /// All six weights at `(i, j)`, indexed by [`VertexKind::index`].
    fn bulk_all(&self, i: u32, j: u32) -> [Polynomial; 6] {
        VertexKind::ALL.map(|k| self.bulk(k, i, j))
    }
}

/// The free-fermionic scheme in row parameters `x, y` and column
/// parameters `a, b`.
#[derive(Debug, Clone, Copy, Default)]
pub struct FreeFermionic;

impl WeightScheme for FreeFermionic {
    fn name(&self) -> &str {
        "ff"
    }

    fn bulk(&self, kind: VertexKind, i: u32, j: u32) -> Polynomial {
        match kind {
            VertexKind::A1 => &Polynomial::one() - &(&b(j) * &x(i)),
            VertexKind::A2 => &y(i) + &a(j),
            VertexKind::B1 => &Polynomial::one() + &(&b(j) * &y(i)),
            VertexKind::B2 => &x(i) - &a(j),
            VertexKind::C1 => &Polynomial::one() - &(&a(j) * &b(j)),
            VertexKind::C2 => &x(i) + &y(i),
        }
    }
}

/// Every weight equal to 1; `Z` then counts states.
#[derive(Debug, Clone, Copy, Default)]
pub struct Uniform;

impl WeightScheme for Uniform {
    fn name(&self) -> &str {
        "ones"
    }

    fn bulk(&self, _: VertexKind, _: u32, _: u32) -> Polynomial {
        Polynomial::one()
    }
}

pub fn ff_scheme() -> FreeFermionic {
    FreeFermionic
}

/// Looks a scheme up by its command-line name.
pub fn scheme_by_name(name: &str) -> Result<Box<dyn WeightScheme>> {
    match name {
        "ff" => Ok(Box::new(FreeFermionic)),
        "ones" => Ok(Box::new(Uniform)),
        other => Err(Error::Invalid(format!("unknown weight scheme {other:?} (expected ff or ones)"))),
    }
}
