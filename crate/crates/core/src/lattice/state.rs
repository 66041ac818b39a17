use serde::{Deserialize, Serialize};

use super::boundary::{GridDims, Model};
use super::vertex::{classify_vertex, VertexKind};
use crate::error::{Error, Result};

/// Occupancy of every edge of the grid.
///
/// `h[i][j]` is the horizontal edge of row `i` to the left of column `j`
/// (so `h[i][0]` is the left boundary and `h[i][m]` the right boundary).
/// `v[j][i]` is the vertical edge of column `j` above row `i`.
/// All indices here are zero-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeState {
    pub h: Vec<Vec<bool>>,
    pub v: Vec<Vec<bool>>,
}

impl LatticeState {
    pub fn dims(&self) -> GridDims {
        GridDims {
            rows: self.h.len(),
            cols: self.v.len(),
        }
    }

    /// Kind of the vertex at zero-based `(i, j)`, `None` if inadmissible.
    pub fn kind_at(&self, i: usize, j: usize) -> Option<VertexKind> {
        classify_vertex(self.h[i][j], self.v[j][i], self.h[i][j + 1], self.v[j][i + 1])
    }

    pub fn is_admissible(&self) -> bool {
        let d = self.dims();
        (0..d.rows).all(|i| (0..d.cols).all(|j| self.kind_at(i, j).is_some()))
    }

    /// Whether the boundary edges match the model's prescription.
    pub fn matches(&self, model: &Model) -> bool {
        let d = self.dims();
        if d != model.dims {
            return false;
        }
        let b = &model.boundary;
        (0..d.rows).all(|i| {
            let r = i as u32 + 1;
            self.h[i][0] == b.left.contains(&r) && self.h[i][d.cols] == b.right.contains(&r)
        }) && (0..d.cols).all(|j| {
            let c = j as u32 + 1;
            self.v[j][0] == b.top.contains(&c) && self.v[j][d.rows] == b.bottom.contains(&c)
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("state serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<LatticeState> {
        let s: LatticeState = serde_json::from_value(value.clone())?;
        let (n, m) = (s.h.len(), s.v.len());
        if n == 0 || m == 0 || s.h.iter().any(|r| r.len() != m + 1) || s.v.iter().any(|c| c.len() != n + 1)
        {
            return Err(Error::Invalid("state matrices have inconsistent shapes".into()));
        }
        if !s.is_admissible() {
            return Err(Error::Invalid("state contains an inadmissible vertex".into()));
        }
        Ok(s)
    }
}

/// Vertex kinds of an admissible state, indexed `[row][col]` from zero.
pub fn state_vertex_kinds(state: &LatticeState) -> Vec<Vec<VertexKind>> {
    let d = state.dims();
    (0..d.rows)
        .map(|i| {
            (0..d.cols)
                .map(|j| state.kind_at(i, j).expect("state is admissible"))
                .collect()
        })
        .collect()
}

/// Lazy depth-first enumeration of the admissible states of a model, cell by
/// cell in row-major order. At each cell the left and top edges are already
/// fixed, and the four `(right, bottom)` choices are tried in a fixed order.
pub struct StateIter {
    dims: GridDims,
    right: Vec<bool>,
    bottom: Vec<bool>,
    h: Vec<Vec<bool>>,
    v: Vec<Vec<bool>>,
    next_choice: Vec<u8>,
    depth: usize,
    finished: bool,
}

const CHOICES: [(bool, bool); 4] = [(false, false), (false, true), (true, false), (true, true)];

impl StateIter {
    fn new(model: &Model) -> StateIter {
        let GridDims { rows: n, cols: m } = model.dims;
        let b = &model.boundary;
        let mut h = vec![vec![false; m + 1]; n];
        let mut v = vec![vec![false; n + 1]; m];
        for (i, row) in h.iter_mut().enumerate() {
            row[0] = b.left.contains(&(i as u32 + 1));
        }
        for (j, col) in v.iter_mut().enumerate() {
            col[0] = b.top.contains(&(j as u32 + 1));
        }
        StateIter {
            dims: model.dims,
            right: (1..=n as u32).map(|r| b.right.contains(&r)).collect(),
            bottom: (1..=m as u32).map(|c| b.bottom.contains(&c)).collect(),
            h,
            v,
            next_choice: vec![0; n * m],
            depth: 0,
            // a quick global count check prunes most infeasible boundaries
            finished: b.entering() != b.exiting(),
        }
    }

    /// Tries the remaining choices at the current cell; true if one fits.
    fn advance_cell(&mut self) -> bool {
        let m = self.dims.cols;
        let (i, j) = (self.depth / m, self.depth % m);
        let (left, top) = (self.h[i][j], self.v[j][i]);
        while self.next_choice[self.depth] < 4 {
            let (r, bt) = CHOICES[self.next_choice[self.depth] as usize];
            self.next_choice[self.depth] += 1;
            if classify_vertex(left, top, r, bt).is_none() {
                continue;
            }
            if j + 1 == m && r != self.right[i] {
                continue;
            }
            if i + 1 == self.dims.rows && bt != self.bottom[j] {
                continue;
            }
            self.h[i][j + 1] = r;
            self.v[j][i + 1] = bt;
            return true;
        }
        self.next_choice[self.depth] = 0;
        false
    }
}

impl Iterator for StateIter {
    type Item = LatticeState;

    fn next(&mut self) -> Option<LatticeState> {
        let total = self.dims.sites();
        while !self.finished {
            if self.advance_cell() {
                if self.depth + 1 == total {
                    return Some(LatticeState {
                        h: self.h.clone(),
                        v: self.v.clone(),
                    });
                }
                self.depth += 1;
            } else if self.depth == 0 {
                self.finished = true;
            } else {
                self.depth -= 1;
            }
        }
        None
    }
}

/// Every admissible state of `model` exactly once, in a deterministic order.
pub fn enumerate_states(model: &Model) -> StateIter {
    StateIter::new(model)
}

fn hchar(occupied: bool) -> char {
    if occupied {
        '='
    } else {
        '-'
    }
}

fn vchar(occupied: bool) -> char {
    if occupied {
        '|'
    } else {
        ':'
    }
}

/// Text drawing with `2n + 1` lines of width `2m + 1`. Vertex lines alternate
/// horizontal edges (`=` occupied, `-` empty) with vertex glyphs; the lines
/// in between show vertical edges (`|` occupied, `:` empty).
///
/// Glyphs: `+` a1, `*` a2, `|` b1, `=` b2, `L` c1, `7` c2.
pub fn render_state(state: &LatticeState) -> String {
    let d = state.dims();
    let mut out = String::new();
    for i in 0..=d.rows {
        for j in 0..d.cols {
            out.push(' ');
            out.push(vchar(state.v[j][i]));
        }
        out.push_str(" \n");
        if i == d.rows {
            break;
        }
        out.push(hchar(state.h[i][0]));
        for j in 0..d.cols {
            out.push(state.kind_at(i, j).map_or('?', VertexKind::glyph));
            out.push(hchar(state.h[i][j + 1]));
        }
        out.push('\n');
    }
    out
}

/// Inverse of [`render_state`]. Vertex glyphs are re-derived from the edges
/// and must agree with them.
pub fn parse_state(text: &str) -> Result<LatticeState> {
    let lines: Vec<Vec<char>> = text.lines().map(|l| l.chars().collect()).collect();
    if lines.len() < 3 || lines.len() % 2 == 0 {
        return Err(Error::Invalid("expected an odd number (>= 3) of lines".into()));
    }
    let n = lines.len() / 2;
    let width = lines[0].len();
    if width < 3 || width % 2 == 0 || lines.iter().any(|l| l.len() != width) {
        return Err(Error::Invalid("lines must share one odd width >= 3".into()));
    }
    let m = width / 2;
    let bad = |line: usize, col: usize| Error::Parse {
        pos: line * (width + 1) + col,
        msg: format!("unexpected character {:?}", lines[line][col]),
    };
    let mut h = vec![vec![false; m + 1]; n];
    let mut v = vec![vec![false; n + 1]; m];
    for i in 0..=n {
        let line = 2 * i;
        for j in 0..m {
            v[j][i] = match lines[line][2 * j + 1] {
                '|' => true,
                ':' => false,
                _ => return Err(bad(line, 2 * j + 1)),
            };
        }
    }
    for i in 0..n {
        let line = 2 * i + 1;
        for j in 0..=m {
            h[i][j] = match lines[line][2 * j] {
                '=' => true,
                '-' => false,
                _ => return Err(bad(line, 2 * j)),
            };
        }
    }
    let state = LatticeState { h, v };
    for i in 0..n {
        for j in 0..m {
            let glyph = lines[2 * i + 1][2 * j + 1];
            match state.kind_at(i, j) {
                Some(k) if k.glyph() == glyph => {}
                _ => return Err(bad(2 * i + 1, 2 * j + 1)),
            }
        }
    }
    Ok(state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::BoundarySpec;
    use VertexKind::*;

    #[test]
    fn dwbc_counts() {
        let counts: Vec<usize> = (1..=4)
            .map(|n| enumerate_states(&Model::dwbc(n).unwrap()).count())
            .collect();
        assert_eq!(counts, vec![1, 2, 7, 42]);
    }

    #[test]
    fn single_vertex_is_c1() {
        let s: Vec<_> = enumerate_states(&Model::dwbc(1).unwrap()).collect();
        assert_eq!(state_vertex_kinds(&s[0]), vec![vec![C1]]);
        assert_eq!(render_state(&s[0]), " | \n-L=\n : \n");
    }

    #[test]
    fn empty_model_has_one_blank_state() {
        let m = Model::new(GridDims::new(2, 2).unwrap(), BoundarySpec::default()).unwrap();
        let states: Vec<_> = enumerate_states(&m).collect();
        assert_eq!(states.len(), 1);
        assert_eq!(state_vertex_kinds(&states[0]), vec![vec![A1, A1], vec![A1, A1]]);
        assert_eq!(render_state(&states[0]), " : : \n-+-+-\n : : \n-+-+-\n : : \n");
    }

    #[test]
    fn dwbc3_contains_first_listed_state() {
        let states: Vec<_> = enumerate_states(&Model::dwbc(3).unwrap())
            .map(|s| state_vertex_kinds(&s))
            .collect();
        let first = vec![vec![C1, A2, A2], vec![A1, C1, A2], vec![A1, A1, C1]];
        assert!(states.contains(&first));
    }

    #[test]
    fn states_are_faithful_and_round_trip() {
        let model = Model::dwbc(3).unwrap();
        let a: Vec<_> = enumerate_states(&model).collect();
        let b: Vec<_> = enumerate_states(&model).collect();
        assert_eq!(a, b);
        for s in &a {
            assert!(s.matches(&model));
            assert!(s.is_admissible());
            assert_eq!(&parse_state(&render_state(s)).unwrap(), s);
            assert_eq!(&LatticeState::from_json(&s.to_json()).unwrap(), s);
        }
    }

    #[test]
    fn infeasible_boundary_yields_nothing() {
        // one path entering at the top of column 2 cannot exit at the bottom of column 1
        let m = Model::new(
            GridDims::new(2, 2).unwrap(),
            BoundarySpec {
                top: [2].into(),
                bottom: [1].into(),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(enumerate_states(&m).count(), 0);
    }

    #[test]
    fn parse_rejects_inconsistent_glyph() {
        assert!(parse_state(" | \n-+=\n : \n").is_err());
        assert!(parse_state(" | \n-L=\n").is_err());
    }
}
