//! The Kripke-Kleene state: iterate the derived state operator from the
//! least precise convex set and watch the antichains tighten.

use ndaft::fixpoint::kk_state;
use ndaft::fixtures;
use ndaft::operators::{IcNdao, Ndao};

fn main() -> ndaft::Result<()> {
    for program in [fixtures::p1(), fixtures::p7(), fixtures::p6()] {
        println!("program:\n{}", program.display());
        let op = IcNdao::new(program.clone());
        let lattice = op.lattice().clone();
        let (state, trace) = kk_state(&op)?;
        for (step, s) in trace.states.iter().enumerate() {
            let lower: Vec<String> =
                s.lower_antichain().iter().map(|e| lattice.element_name(e)).collect();
            let upper: Vec<String> =
                s.upper_antichain().iter().map(|e| lattice.element_name(e)).collect();
            println!("  step {step}: lower [{}] upper [{}]", lower.join(" "), upper.join(" "));
        }
        let members = lattice.convex_members(&state)?;
        println!(
            "  convex set: {} members ({})\n",
            members.len(),
            members
                .iter()
                .map(|e| lattice.element_name(e))
                .collect::<Vec<_>>()
                .join(", ")
        );
    }
    Ok(())
}
