use std::collections::HashMap;

use serde::Serialize;

use super::table::SiteTable;
use crate::algebra::Ring;
use crate::lattice::{classify_vertex, enumerate_states, state_vertex_kinds, Model};

/// How the weighted sum over states is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    /// Enumerate every state and sum the products.
    Brute,
    /// Broken-profile transfer over vertical-edge occupancies.
    #[default]
    Dp,
}

impl Engine {
    pub fn parse(s: &str) -> crate::Result<Engine> {
        match s {
            "brute" => Ok(Engine::Brute),
            "dp" => Ok(Engine::Dp),
            _ => Err(crate::Error::Invalid(format!("unknown engine {s:?} (expected brute or dp)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PartitionResult<R> {
    pub value: R,
    pub state_count: u128,
}

/// Sum over enumerated states of the product of site weights.
pub fn partition_brute<R: Ring>(model: &Model, table: &SiteTable<R>) -> PartitionResult<R> {
    let mut value = R::zero();
    let mut state_count = 0u128;
    for state in enumerate_states(model) {
        let kinds = state_vertex_kinds(&state);
        let mut w = R::one();
        for (i, row) in kinds.iter().enumerate() {
            for (j, &k) in row.iter().enumerate() {
                w = w.times(table.get(i, j, k));
            }
        }
        value = value.plus(&w);
        state_count += 1;
    }
    PartitionResult { value, state_count }
}

/// Frontier dynamic programme, one cell at a time in row-major order.
///
/// A frontier state is the occupancy of the vertical edges crossing the
/// current cut (bit `j` for column `j + 1`) together with the horizontal
/// edge entering the current cell. Each state keeps the weighted sum and
/// the number of partial configurations reaching it.
pub fn partition_dp<R: Ring>(model: &Model, table: &SiteTable<R>) -> PartitionResult<R> {
    let (n, m) = (model.dims.rows, model.dims.cols);
    let b = &model.boundary;
    let bits = |set: &std::collections::BTreeSet<u32>| set.iter().fold(0u64, |acc, &c| acc | 1 << (c - 1));
    let top = bits(&b.top);
    let bottom = bits(&b.bottom);

    let mut frontier: HashMap<u64, (R, u128)> = HashMap::new();
    frontier.insert(top, (R::one(), 1));
    for i in 0..n {
        let row = i as u32 + 1;
        let left = b.left.contains(&row);
        let right = b.right.contains(&row);
        // key = profile | carry << m
        let mut cur: HashMap<u64, (R, u128)> = frontier
            .into_iter()
            .map(|(p, v)| (p | (left as u64) << m, v))
            .collect();
        for j in 0..m {
            let mut next: HashMap<u64, (R, u128)> = HashMap::with_capacity(cur.len() * 2);
            for (key, (w, count)) in cur {
                let carry = key >> m & 1 == 1;
                let profile = key & !(1 << m);
                let t = profile >> j & 1 == 1;
                for (r, bt) in [(false, false), (false, true), (true, false), (true, true)] {
                    if j + 1 == m && r != right {
                        continue;
                    }
                    let Some(kind) = classify_vertex(carry, t, r, bt) else {
                        continue;
                    };
                    let weight = table.get(i, j, kind);
                    let np = (profile & !(1 << j)) | (bt as u64) << j | (r as u64) << m;
                    let add = w.times(weight);
                    next.entry(np)
                        .and_modify(|(acc, c)| {
                            *acc = acc.plus(&add);
                            *c += count;
                        })
                        .or_insert((add, count));
                }
            }
            cur = next;
        }
        // the carry equals the right boundary here, so dropping it merges nothing
        frontier = cur.into_iter().map(|(k, v)| (k & !(1 << m), v)).collect();
    }
    match frontier.remove(&bottom) {
        Some((value, state_count)) => PartitionResult { value, state_count },
        None => PartitionResult {
            value: R::zero(),
            state_count: 0,
        },
    }
}

pub fn partition_with<R: Ring>(model: &Model, table: &SiteTable<R>, engine: Engine) -> PartitionResult<R> {
    match engine {
        Engine::Brute => partition_brute(model, table),
        Engine::Dp => partition_dp(model, table),
    }
}
