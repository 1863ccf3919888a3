//! The well-founded semantics with disjunction: alternate reduct-model
//! steps with closed-world filtering, then compare the fixpoint's
//! precision against the well-founded state.

use ndaft::fixpoint::{wf_state, wfsd};
use ndaft::fixtures;
use ndaft::lattice::{precision_compare, PrecisionOrdering};
use ndaft::operators::{IcNdao, Ndao};

fn main() -> ndaft::Result<()> {
    for program in [fixtures::p8(), fixtures::p5(), fixtures::p6()] {
        println!("program:\n{}", program.display());
        let op = IcNdao::new(program.clone());
        let lattice = op.lattice().clone();

        let (phi, trace) = wfsd(&program)?;
        for (step, s) in trace.states.iter().enumerate() {
            let lower: Vec<String> =
                s.lower_antichain().iter().map(|e| lattice.element_name(e)).collect();
            let upper: Vec<String> =
                s.upper_antichain().iter().map(|e| lattice.element_name(e)).collect();
            println!("  step {step}: lower [{}] upper [{}]", lower.join(" "), upper.join(" "));
        }

        let (wf, _) = wf_state(&op, 1 << 16)?;
        let verdict = match precision_compare(&lattice, &wf, &phi) {
            PrecisionOrdering::Less => "strictly less precise than",
            PrecisionOrdering::Equal => "exactly as precise as",
            PrecisionOrdering::Greater => "strictly more precise than",
            PrecisionOrdering::Incomparable => "incomparable with",
        };
        println!("  well-founded state is {verdict} the alternating-reduct fixpoint\n");
    }
    Ok(())
}
