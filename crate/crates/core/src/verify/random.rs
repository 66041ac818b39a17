use std::collections::BTreeSet;

use rand::seq::index::sample;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::lattice::{BoundarySpec, GridDims, Model};
use crate::partition::{partition_symbolic, Engine};
use crate::weights::Uniform;

/// A boundary edge forced to a given occupancy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeConstraint {
    Left(u32, bool),
    Top(u32, bool),
    Right(u32, bool),
    Bottom(u32, bool),
}

fn set(s: &mut BTreeSet<u32>, k: u32, on: bool) {
    if on {
        s.insert(k);
    } else {
        s.remove(&k);
    }
}

fn satisfied(b: &BoundarySpec, c: &EdgeConstraint) -> bool {
    match *c {
        EdgeConstraint::Left(k, on) => b.left.contains(&k) == on,
        EdgeConstraint::Top(k, on) => b.top.contains(&k) == on,
        EdgeConstraint::Right(k, on) => b.right.contains(&k) == on,
        EdgeConstraint::Bottom(k, on) => b.bottom.contains(&k) == on,
    }
}

/// A random model with at least one admissible state, respecting the
/// constraints. Entries are drawn edge by edge; exits are a uniform subset
/// of the matching size. Returns `None` after `tries` rejected draws.
pub fn random_boundary_model(
    rng: &mut ChaCha8Rng,
    dims: GridDims,
    constraints: &[EdgeConstraint],
    tries: usize,
) -> Option<Model> {
    let (n, m) = (dims.rows, dims.cols);
    for _ in 0..tries {
        let mut b = BoundarySpec::default();
        for i in 1..=n as u32 {
            set(&mut b.left, i, rng.gen_bool(0.5));
        }
        for j in 1..=m as u32 {
            set(&mut b.top, j, rng.gen_bool(0.5));
        }
        for c in constraints {
            match *c {
                EdgeConstraint::Left(k, on) => set(&mut b.left, k, on),
                EdgeConstraint::Top(k, on) => set(&mut b.top, k, on),
                _ => {}
            }
        }
        let k = b.entering();
        if k > n + m {
            continue;
        }
        // exit slots: right edges 1..n, then bottom edges 1..m
        for slot in sample(rng, n + m, k).into_iter() {
            if slot < n {
                b.right.insert(slot as u32 + 1);
            } else {
                b.bottom.insert((slot - n) as u32 + 1);
            }
        }
        if !constraints.iter().all(|c| satisfied(&b, c)) {
            continue;
        }
        let Ok(model) = Model::new(dims, b) else { continue };
        match partition_symbolic(&model, &Uniform, Engine::Dp) {
            Ok(r) if r.state_count > 0 => return Some(model),
            _ => continue,
        }
    }
    None
}
