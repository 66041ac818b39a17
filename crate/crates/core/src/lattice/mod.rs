//! Grid geometry, boundary conditions and admissible states.

mod boundary;
mod state;
mod vertex;

pub use boundary::{sig_to_right_boundary, sig_to_top_boundary, BoundarySpec, GridDims, Model, Signature};
pub use state::{enumerate_states, parse_state, render_state, state_vertex_kinds, LatticeState, StateIter};
pub use vertex::{classify_vertex, VertexKind};
