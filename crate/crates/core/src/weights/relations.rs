use std::fmt::Display;

use serde::Serialize;

use super::cross::CrossWeights;
use crate::algebra::Field;
use crate::error::{Error, Result};
use crate::lattice::VertexKind::{self, *};

#[derive(Debug, Clone, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationReport {
    pub pair: (u32, u32),
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

fn record<F: Field + Display>(checks: &mut Vec<RelationCheck>, name: &str, lhs: F, rhs: F) {
    checks.push(RelationCheck {
        name: name.to_string(),
        holds: lhs == rhs,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    });
}

/// Checks the relations between the weights of the crosses for `(p, q)` and
/// `(q, p)`.
///
/// Scale-free forms are checked first. Then the `(q, p)` set is rescaled so
/// that `b2(q,p) = -b2(p,q)` and the exact forms are checked: antisymmetry of
/// `b1`, the swaps `c1(p,q) = c2(q,p)` and `c2(p,q) = c1(q,p)`, and the
/// quadratic relation `a1(p,q) a1(q,p) + b1(p,q) b2(p,q) = c1(p,q) c2(p,q)`
/// with both sides nonzero.
pub fn check_weight_relations<F: Field + Display>(
    pq: &CrossWeights<F>,
    qp: &CrossWeights<F>,
) -> Result<RelationReport> {
    let (p, q) = pq.pair;
    if p == q {
        return Err(Error::InvalidPair(p, q));
    }
    if qp.pair != (q, p) || qp.orientation != pq.orientation {
        return Err(Error::Invalid(format!(
            "expected the reversed pair ({q},{p}) in the same orientation"
        )));
    }
    let g = |w: &CrossWeights<F>, k: VertexKind| w.get(k).clone();
    let mut checks = Vec::new();
    for (w, label) in [(pq, "pq"), (qp, "qp")] {
        for k in [B1, B2] {
            checks.push(RelationCheck {
                name: format!("{k}({label}) != 0"),
                lhs: g(w, k).to_string(),
                rhs: "0".into(),
                holds: !g(w, k).is_zero(),
            });
        }
    }
    if checks.iter().any(|c| !c.holds) {
        return Ok(RelationReport { pair: pq.pair, checks });
    }

    record(
        &mut checks,
        "b1(p,q) b2(q,p) = b2(p,q) b1(q,p)",
        g(pq, B1).times(&g(qp, B2)),
        g(pq, B2).times(&g(qp, B1)),
    );
    record(
        &mut checks,
        "c1(p,q) c1(q,p) = c2(p,q) c2(q,p)",
        g(pq, C1).times(&g(qp, C1)),
        g(pq, C2).times(&g(qp, C2)),
    );

    let scale = g(pq, B2).negated().over(&g(qp, B2)).expect("b2 nonzero");
    let r = qp.map(|v| v.times(&scale));
    record(&mut checks, "b1(p,q) = -b1(q,p)", g(pq, B1), g(&r, B1).negated());
    record(&mut checks, "b2(p,q) = -b2(q,p)", g(pq, B2), g(&r, B2).negated());
    record(&mut checks, "c1(p,q) = c2(q,p)", g(pq, C1), g(&r, C2));
    record(&mut checks, "c2(p,q) = c1(q,p)", g(pq, C2), g(&r, C1));
    let lhs = g(pq, A1).times(&g(&r, A1)).plus(&g(pq, B1).times(&g(pq, B2)));
    let rhs = g(pq, C1).times(&g(pq, C2));
    checks.push(RelationCheck {
        name: "quadratic sides nonzero".into(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        holds: !lhs.is_zero() && !rhs.is_zero(),
    });
    record(&mut checks, "a1(p,q) a1(q,p) + b1(p,q) b2(p,q) = c1(p,q) c2(p,q)", lhs, rhs);
    Ok(RelationReport { pair: pq.pair, checks })
}
