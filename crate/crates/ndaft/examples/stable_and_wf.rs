//! The stable operator family: complete bounds (minimal fixpoints with
//! one argument frozen), stable fixpoints, and the well-founded state.

use ndaft::fixpoint::{
    complete_bound, consistent_stable_fixpoints, wf_state, BoundSide,
};
use ndaft::fixtures;
use ndaft::operators::{IcNdao, Ndao};

fn main() -> ndaft::Result<()> {
    let guard = 1 << 16;
    for program in [fixtures::p5(), fixtures::p6(), fixtures::p8()] {
        println!("program:\n{}", program.display());
        let op = IcNdao::new(program.clone());
        let lattice = op.lattice().clone();

        // The complete lower bound against a few frozen upper bounds.
        for y in [lattice.bot(), lattice.top()] {
            let c = complete_bound(&op, BoundSide::Lower, y, guard)?;
            let names: Vec<String> = c.iter().map(|e| lattice.element_name(e)).collect();
            println!("  complete lower bound at {}: {{{}}}", lattice.element_name(y), names.join(", "));
        }

        let stable = consistent_stable_fixpoints(&op, guard)?;
        if stable.is_empty() {
            println!("  stable fixpoints: none");
        } else {
            for fp in &stable {
                println!(
                    "  stable fixpoint ({}, {})",
                    lattice.element_name(fp.lower),
                    lattice.element_name(fp.upper)
                );
            }
        }

        let (wf, trace) = wf_state(&op, guard)?;
        let members = lattice.convex_members(&wf)?;
        println!(
            "  well-founded state after {} steps: {} members ({})\n",
            trace.steps(),
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
