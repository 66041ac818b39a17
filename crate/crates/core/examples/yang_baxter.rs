//! Solves the Yang-Baxter equation for the cross weights exchanging two
//! rows and two columns, then checks the relations between them.

use vertexkit::algebra::PointSampler;
use vertexkit::weights::{
    check_weight_relations, ff_scheme, generic_guards, solve_cross_point, solve_cross_symbolic, ybe_nullity,
    Orientation, Wiring,
};

fn main() -> vertexkit::Result<()> {
    let ff = ff_scheme();
    for orientation in [Orientation::Horizontal, Orientation::Vertical] {
        let cross = solve_cross_symbolic(&ff, (1, 2), orientation, 1, Wiring::Transport)?;
        println!("{orientation} cross for (1, 2), normalized:");
        let n = cross.normalized()?;
        for (kind, w) in vertexkit::lattice::VertexKind::ALL.iter().zip(n.w.iter()) {
            println!("  {kind} = {w}");
        }
    }

    let point = PointSampler::new(3).sample(3, 3, &generic_guards(&ff, 3, 3));
    for orientation in [Orientation::Horizontal, Orientation::Vertical] {
        let nullity = ybe_nullity(&ff, (1, 2), orientation, 2, &point, Wiring::Transport)?;
        let pq = solve_cross_point(&ff, (1, 2), orientation, 1, &point, Wiring::Transport)?;
        let qp = solve_cross_point(&ff, (2, 1), orientation, 1, &point, Wiring::Transport)?;
        let report = check_weight_relations(&pq, &qp)?;
        println!("{orientation}: solution space dimension {nullity}, relations hold: {}", report.passed());
    }
    Ok(())
}
