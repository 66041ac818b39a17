//! Factors the domain-wall partition function into binomials by exact
//! trial division.

use vertexkit::partition::Engine;
use vertexkit::schur::{dwbc_product_candidate, factor_dwbc};
use vertexkit::weights::ff_scheme;

fn main() -> vertexkit::Result<()> {
    for n in 1..=3 {
        let (z, report) = factor_dwbc(n, &ff_scheme(), Engine::Dp)?;
        println!("n = {n}: {} terms, complete: {}", z.num_terms(), report.is_complete());
        for (f, k) in &report.factors {
            println!("  ({f})^{k}");
        }
        println!("  equals the (x_i - y_j)(1 - a_i b_j) product: {}", z == dwbc_product_candidate(n));
    }
    Ok(())
}
