//! `Z` with a dense right boundary, built from a domain-wall block and
//! vertical switch operators.

use vertexkit::algebra::PointSampler;
use vertexkit::lattice::Signature;
use vertexkit::partition::Engine;
use vertexkit::schur::{check_proposition_at, BracketSource};
use vertexkit::weights::{ff_scheme, generic_guards};

fn main() -> vertexkit::Result<()> {
    let ff = ff_scheme();
    let mut sampler = PointSampler::new(2);
    for (n, m, alpha) in [(2, 3, vec![3, 1]), (2, 4, vec![4, 2]), (3, 4, vec![4, 2, 1])] {
        let alpha = Signature::new(alpha)?;
        let point = sampler.sample(n as u32, m as u32, &generic_guards(&ff, n as u32, m as u32));
        let check = check_proposition_at(&alpha, n, m, &ff, BracketSource::Enumerated, &point, Engine::Dp)?;
        let printed = check_proposition_at(&alpha, n, m, &ff, BracketSource::Printed, &point, Engine::Dp)?;
        println!(
            "n={n} m={m} alpha={alpha}: enumerated bracket holds {}, product-formula bracket holds {}",
            check.holds(),
            printed.holds()
        );
    }
    Ok(())
}
