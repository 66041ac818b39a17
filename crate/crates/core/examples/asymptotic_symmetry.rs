//! Swapping the parameters of two columns that no boundary path touches
//! from above or below leaves `Z` unchanged.

use vertexkit::algebra::PointSampler;
use vertexkit::lattice::{GridDims, Model, Signature};
use vertexkit::partition::Engine;
use vertexkit::schur::asymptotic_symmetry_check;
use vertexkit::weights::{ff_scheme, generic_guards};

fn main() -> vertexkit::Result<()> {
    let ff = ff_scheme();
    let dims = GridDims::new(2, 5)?;
    let model = Model::from_signatures(dims, &Signature::new(vec![2, 1])?, &Signature::new(vec![3, 1])?)?;
    let point = PointSampler::new(4).sample(2, 5, &generic_guards(&ff, 2, 5));
    for j in 1..5 {
        let r = asymptotic_symmetry_check(&model, j, &ff, &point, Engine::Dp)?;
        println!("swap columns {j}, {}: untouched {}, invariant {}", j + 1, r.hypothesis, r.equal);
    }
    Ok(())
}
