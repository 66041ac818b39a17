//! Counts the admissible states of domain-wall models and draws the 3x3 ones.

use vertexkit::lattice::{enumerate_states, render_state, state_vertex_kinds, Model};

fn main() -> vertexkit::Result<()> {
    for n in 1..=4 {
        let count = enumerate_states(&Model::dwbc(n)?).count();
        println!("n = {n}: {count} states");
    }

    for (k, state) in enumerate_states(&Model::dwbc(3)?).enumerate() {
        println!("\nstate {}", k + 1);
        println!("{}", render_state(&state));
        for row in state_vertex_kinds(&state) {
            let names: Vec<_> = row.iter().map(|v| v.to_string()).collect();
            println!("  {}", names.join(" "));
        }
    }
    Ok(())
}
