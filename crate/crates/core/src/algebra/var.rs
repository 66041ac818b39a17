use std::fmt;

/// Variable families. Rows carry `x_i, y_i`, columns carry `a_j, b_j`.
///
/// The declaration order is the family order used by the monomial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    X,
    Y,
    A,
    B,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::X => 'x',
            Family::Y => 'y',
            Family::A => 'a',
            Family::B => 'b',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c {
            'x' => Some(Family::X),
            'y' => Some(Family::Y),
            'a' => Some(Family::A),
            'b' => Some(Family::B),
            _ => None,
        }
    }

    /// Row families are permuted by horizontal transpositions.
    pub fn is_row(self) -> bool {
        matches!(self, Family::X | Family::Y)
    }
}

/// A spectral parameter such as `x3` or `b1`. Indices start at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId {
    pub family: Family,
    pub index: u32,
}

impl VarId {
    pub fn new(family: Family, index: u32) -> VarId {
        assert!(index >= 1, "variable indices start at 1");
        VarId { family, index }
    }

    pub fn x(i: u32) -> VarId {
        VarId::new(Family::X, i)
    }

    pub fn y(i: u32) -> VarId {
        VarId::new(Family::Y, i)
    }

    pub fn a(j: u32) -> VarId {
        VarId::new(Family::A, j)
    }

    pub fn b(j: u32) -> VarId {
        VarId::new(Family::B, j)
    }

    /// Image under the transposition of rows `i` and `i + 1`.
    pub fn swap_row(self, i: u32) -> VarId {
        if self.family.is_row() {
            VarId {
                index: transpose(self.index, i),
                ..self
            }
        } else {
            self
        }
    }

    /// Image under the transposition of columns `j` and `j + 1`.
    pub fn swap_col(self, j: u32) -> VarId {
        if self.family.is_row() {
            self
        } else {
            VarId {
                index: transpose(self.index, j),
                ..self
            }
        }
    }
}

fn transpose(index: u32, i: u32) -> u32 {
    if index == i {
        i + 1
    } else if index == i + 1 {
        i
    } else {
        index
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.index)
    }
}
