use std::fmt;

use crate::algebra::{Field, Ring};
use crate::error::{Error, Result};
use crate::lattice::VertexKind;

/// Which pair of lattice lines a cross vertex interchanges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    /// Exchanges two adjacent rows; the cross sits at the left or right edge.
    Horizontal,
    /// Exchanges two adjacent columns; the cross sits at the top or bottom edge.
    Vertical,
}

impl Orientation {
    pub fn letter(self) -> char {
        match self {
            Orientation::Horizontal => 'h',
            Orientation::Vertical => 'v',
        }
    }

    pub fn parse(s: &str) -> Result<Orientation> {
        match s {
            "h" | "H" | "horizontal" => Ok(Orientation::Horizontal),
            "v" | "V" | "vertical" => Ok(Orientation::Vertical),
            _ => Err(Error::Invalid(format!("unknown orientation {s:?} (expected h or v)"))),
        }
    }

    /// The weight fixed to 1 by the solver's normalization.
    pub fn normalized_kind(self) -> VertexKind {
        match self {
            Orientation::Horizontal => VertexKind::B2,
            Orientation::Vertical => VertexKind::B1,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A cross-vertex kind together with its orientation.
///
/// Ports are listed inputs first. Horizontal crosses read `(NW, SW, NE, SE)`
/// with paths flowing left to right; vertical crosses read `(NW, NE, SW, SE)`
/// with paths flowing downward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CrossKind {
    pub kind: VertexKind,
    pub orientation: Orientation,
}

impl CrossKind {
    pub fn ports(self) -> [bool; 4] {
        use VertexKind::*;
        let bits = match (self.orientation, self.kind) {
            (_, A1) => [0, 0, 0, 0],
            (_, A2) => [1, 1, 1, 1],
            (Orientation::Horizontal, B1) => [1, 0, 0, 1],
            (Orientation::Horizontal, B2) => [0, 1, 1, 0],
            (Orientation::Vertical, B1) => [0, 1, 1, 0],
            (Orientation::Vertical, B2) => [1, 0, 0, 1],
            (_, C1) => [1, 0, 1, 0],
            (_, C2) => [0, 1, 0, 1],
        };
        bits.map(|b| b == 1)
    }

    /// Kind whose port occupancy is `ports`, if any.
    pub fn classify(orientation: Orientation, ports: [bool; 4]) -> Option<VertexKind> {
        VertexKind::ALL
            .into_iter()
            .find(|&kind| CrossKind { kind, orientation }.ports() == ports)
    }
}

/// Six cross weights for an ordered label pair `(p, q)`.
///
/// For a horizontal cross `p` labels the line entering at SW and `q` the
/// line entering at NW; for a vertical cross `p` enters at NW and `q` at NE.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossWeights<F> {
    pub orientation: Orientation,
    pub pair: (u32, u32),
    pub w: [F; 6],
}

impl<F: Ring> CrossWeights<F> {
    pub fn get(&self, kind: VertexKind) -> &F {
        &self.w[kind.index()]
    }

    /// Weight of the configuration with the given port occupancy, zero if
    /// the configuration is not a cross kind.
    pub fn at(&self, ports: [bool; 4]) -> F {
        match CrossKind::classify(self.orientation, ports) {
            Some(k) => self.w[k.index()].clone(),
            None => F::zero(),
        }
    }

    pub fn map<G, M: Fn(&F) -> G>(&self, f: M) -> CrossWeights<G> {
        CrossWeights {
            orientation: self.orientation,
            pair: self.pair,
            w: [0, 1, 2, 3, 4, 5].map(|k| f(&self.w[k])),
        }
    }
}

impl<F: Field> CrossWeights<F> {
    /// Rescales so that the normalized kind (b2 horizontally, b1 vertically) is 1.
    pub fn normalized(&self) -> Result<CrossWeights<F>> {
        let kind = self.orientation.normalized_kind();
        let pivot = self.get(kind).clone();
        if pivot.is_zero() {
            return Err(Error::VanishingWeight {
                what: format!("{}{}({},{})", kind, self.orientation, self.pair.0, self.pair.1),
            });
        }
        let mut w = self.w.clone();
        for v in w.iter_mut() {
            *v = v.over(&pivot).expect("nonzero pivot");
        }
        Ok(CrossWeights {
            orientation: self.orientation,
            pair: self.pair,
            w,
        })
    }
}
