//! Attaches a cross vertex to either side of a grid and compares the two
//! augmented partition functions.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vertexkit::algebra::PointSampler;
use vertexkit::lattice::GridDims;
use vertexkit::partition::{augmented_partition_at, Attachment, Engine, Side};
use vertexkit::verify::random_boundary_model;
use vertexkit::weights::{ff_scheme, generic_guards};

fn main() -> vertexkit::Result<()> {
    let ff = ff_scheme();
    let dims = GridDims::new(3, 3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut sampler = PointSampler::new(11);
    let model = random_boundary_model(&mut rng, dims, &[], 100).expect("an admissible model");
    println!("model: {}", model.to_json());

    for attachment in [Attachment::Rows(1), Attachment::Rows(2), Attachment::Cols(1), Attachment::Cols(2)] {
        let point = sampler.sample(3, 3, &generic_guards(&ff, 3, 3));
        let outer = augmented_partition_at(&model, &ff, &point, attachment, Side::Outer, Engine::Dp)?;
        let inner = augmented_partition_at(&model, &ff, &point, attachment, Side::Inner, Engine::Dp)?;
        println!("{attachment:?}: outer {outer}, inner {inner}, equal {}", outer == inner);
    }
    Ok(())
}
