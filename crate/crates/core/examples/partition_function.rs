//! Partition functions with free-fermionic weights: symbolic, at a point,
//! and normalized by the product of `a1` weights.

use vertexkit::algebra::{Point, PointSampler};
use vertexkit::lattice::{BoundarySpec, GridDims, Model};
use vertexkit::partition::{normalized_symbolic, partition_at, partition_symbolic, Engine};
use vertexkit::weights::{ff_scheme, generic_guards};

fn main() -> vertexkit::Result<()> {
    let ff = ff_scheme();

    let z2 = partition_symbolic(&Model::dwbc(2)?, &ff, Engine::Dp)?;
    println!("Z(DWBC 2) = {}  ({} states)", z2.value, z2.state_count);

    // one path entering on the left of row 2, leaving at the bottom of column 3
    let mut boundary = BoundarySpec::default();
    boundary.left.insert(2);
    boundary.bottom.insert(3);
    let model = Model::new(GridDims::new(2, 3)?, boundary)?;
    println!("Z(one path) = {}", partition_symbolic(&model, &ff, Engine::Dp)?.value);
    println!("normalized  = {}", normalized_symbolic(&model, &ff, Engine::Dp)?);

    let point: Point = PointSampler::new(1).sample(4, 4, &generic_guards(&ff, 4, 4));
    let z4 = partition_at(&Model::dwbc(4)?, &ff, &point, Engine::Dp)?;
    let brute = partition_at(&Model::dwbc(4)?, &ff, &point, Engine::Brute)?;
    println!("Z(DWBC 4) at {} = {}", serde_json::to_string(&point.to_json()).unwrap(), z4.value);
    println!("dp and brute force agree: {}", z4.value == brute.value);
    Ok(())
}
