//! The four exchange identities relating `Z` and the partition function
//! with two adjacent row (or column) parameters swapped.

use vertexkit::algebra::PointSampler;
use vertexkit::lattice::{GridDims, Model, Signature};
use vertexkit::partition::Engine;
use vertexkit::switchop::{exchange_check_at, SwitchContext};
use vertexkit::weights::{ff_scheme, generic_guards, Orientation};

fn main() -> vertexkit::Result<()> {
    let ff = ff_scheme();
    let dims = GridDims::new(4, 4)?;
    let point = PointSampler::new(5).sample(4, 4, &generic_guards(&ff, 4, 4));
    let mut ctx = SwitchContext::new(&ff);

    for (alpha, beta) in [(vec![3, 1], vec![4, 2]), (vec![4, 3], vec![3, 1]), (vec![2], vec![4])] {
        let (alpha, beta) = (Signature::new(alpha)?, Signature::new(beta)?);
        let model = Model::from_signatures(dims, &alpha, &beta)?;
        for (orientation, k) in [(Orientation::Horizontal, 1), (Orientation::Horizontal, 3), (Orientation::Vertical, 2)] {
            let r = exchange_check_at(&mut ctx, &model, orientation, k, &point, Engine::Dp)?;
            println!(
                "alpha={alpha} beta={beta} {orientation} k={k}: {:?}, holds {}",
                r.case,
                r.holds()
            );
        }
    }
    Ok(())
}
