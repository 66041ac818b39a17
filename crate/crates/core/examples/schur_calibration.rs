//! Factorial Schur alternants, and the convention under which normalized
//! partition functions specialize to them.

use vertexkit::schur::{calibrate_schur_specialization, classical_schur, factorial_schur_alternant, pinned_assertions, PartitionShape, SignConvention};

fn main() -> vertexkit::Result<()> {
    let shape = PartitionShape::new(vec![2, 1])?;
    println!("s_{shape}(x | a) = {}", factorial_schur_alternant(&shape, 2, SignConvention::Plus)?);
    println!("s_{shape}(x)     = {}", classical_schur(&shape, 2)?);

    let report = calibrate_schur_specialization()?;
    println!("consistent conventions: {}", report.consistent.len());
    for c in &report.consistent {
        println!("  {}", serde_json::to_string(c).unwrap());
    }
    println!("pinned assertions failing: {}", pinned_assertions()?.len());
    Ok(())
}
