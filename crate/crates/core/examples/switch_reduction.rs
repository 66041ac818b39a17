//! Reaches `Z_(alpha, beta)` from the base case by switch operators and
//! compares with direct enumeration.

use vertexkit::algebra::PointSampler;
use vertexkit::lattice::{GridDims, Model, Signature};
use vertexkit::partition::{partition_at, partition_symbolic, Engine};
use vertexkit::switchop::{reduce_to_base_at, reduce_to_base_symbolic, word_for_signatures, WordForm};
use vertexkit::weights::{ff_scheme, generic_guards};

fn main() -> vertexkit::Result<()> {
    let ff = ff_scheme();

    let dims = GridDims::new(5, 5)?;
    let alpha = Signature::new(vec![5, 3, 2])?;
    let beta = Signature::new(vec![4, 2, 1])?;
    let word = word_for_signatures(&alpha, &beta, dims, WordForm::Transport)?;
    println!("word ({} operators): {word}", word.len());

    let model = Model::from_signatures(dims, &alpha, &beta)?;
    let mut sampler = PointSampler::new(9);
    for _ in 0..3 {
        let point = sampler.sample(5, 5, &generic_guards(&ff, 5, 5));
        let reduced = reduce_to_base_at(&alpha, &beta, dims, &ff, &point, Engine::Dp)?;
        let direct = partition_at(&model, &ff, &point, Engine::Dp)?.value;
        println!("reduced {reduced}\ndirect  {direct}\nequal {}", reduced == direct);
    }

    // symbolically on a small grid
    let dims = GridDims::new(3, 3)?;
    let (alpha, beta) = (Signature::new(vec![3])?, Signature::new(vec![1])?);
    let reduced = reduce_to_base_symbolic(&alpha, &beta, dims, &ff, Engine::Dp)?;
    let direct = partition_symbolic(&Model::from_signatures(dims, &alpha, &beta)?, &ff, Engine::Dp)?.value;
    println!("3x3 alpha={alpha} beta={beta}: symbolic reduction equals enumeration: {}", reduced == direct);
    Ok(())
}
