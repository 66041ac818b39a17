use std::fmt;

/// The six admissible local configurations. Paths travel right and down,
/// so a vertex is admissible exactly when inflow (left, top) equals
/// outflow (right, bottom) and a single strand never splits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    /// empty
    A1,
    /// all four edges occupied
    A2,
    /// vertical strand
    B1,
    /// horizontal strand
    B2,
    /// enters from the top, leaves to the right
    C1,
    /// enters from the left, leaves downward
    C2,
}

impl VertexKind {
    pub const ALL: [VertexKind; 6] = [
        VertexKind::A1,
        VertexKind::A2,
        VertexKind::B1,
        VertexKind::B2,
        VertexKind::C1,
        VertexKind::C2,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            VertexKind::A1 => "a1",
            VertexKind::A2 => "a2",
            VertexKind::B1 => "b1",
            VertexKind::B2 => "b2",
            VertexKind::C1 => "c1",
            VertexKind::C2 => "c2",
        }
    }

    /// Occupancy `(left, top, right, bottom)`.
    pub fn edges(self) -> (bool, bool, bool, bool) {
        match self {
            VertexKind::A1 => (false, false, false, false),
            VertexKind::A2 => (true, true, true, true),
            VertexKind::B1 => (false, true, false, true),
            VertexKind::B2 => (true, false, true, false),
            VertexKind::C1 => (false, true, true, false),
            VertexKind::C2 => (true, false, false, true),
        }
    }

    pub(crate) fn glyph(self) -> char {
        match self {
            VertexKind::A1 => '+',
            VertexKind::A2 => '*',
            VertexKind::B1 => '|',
            VertexKind::B2 => '=',
            VertexKind::C1 => 'L',
            VertexKind::C2 => '7',
        }
    }
}

impl fmt::Display for VertexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Kind of the vertex with the given edge occupancies, or `None` when the
/// configuration is inadmissible.
pub fn classify_vertex(left: bool, top: bool, right: bool, bottom: bool) -> Option<VertexKind> {
    match (left, top, right, bottom) {
        (false, false, false, false) => Some(VertexKind::A1),
        (true, true, true, true) => Some(VertexKind::A2),
        (false, true, false, true) => Some(VertexKind::B1),
        (true, false, true, false) => Some(VertexKind::B2),
        (false, true, true, false) => Some(VertexKind::C1),
        (true, false, false, true) => Some(VertexKind::C2),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_examples() {
        assert_eq!(classify_vertex(false, true, true, false), Some(VertexKind::C1));
        assert_eq!(classify_vertex(false, false, false, false), Some(VertexKind::A1));
        assert_eq!(classify_vertex(true, true, false, false), None);
    }

    #[test]
    fn exactly_six_admissible_and_all_conserve() {
        let mut count = 0;
        for bits in 0u8..16 {
            let (l, t, r, b) = (bits & 1 != 0, bits & 2 != 0, bits & 4 != 0, bits & 8 != 0);
            if let Some(k) = classify_vertex(l, t, r, b) {
                count += 1;
                assert_eq!(l as u8 + t as u8, r as u8 + b as u8);
                assert_eq!(k.edges(), (l, t, r, b));
            }
        }
        assert_eq!(count, 6);
    }
}
