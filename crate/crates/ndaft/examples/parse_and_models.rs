//! Parse a disjunctive program and classify its consistent
//! interpretations: models, weakly supported, supported and stable.

use ndaft::semantics::{
    enumerate_interpretations, is_model, is_supported, is_three_valued_stable,
    is_weakly_supported,
};
use ndaft::Program;

fn main() -> ndaft::Result<()> {
    let program = Program::parse(
        "p :- not p.
         q :- not r.
         r :- not q.
         q;r.",
    )?;
    let lattice = program.lattice();
    println!("program:\n{}\n", program.display());

    for i in enumerate_interpretations(&program, true, 16)? {
        let mut tags = Vec::new();
        if is_model(i, &program, false)? {
            tags.push("model");
        }
        if is_weakly_supported(i, &program)? {
            tags.push("weakly supported");
        }
        if is_supported(i, &program)? {
            tags.push("supported");
        }
        if is_three_valued_stable(i, &program)? {
            tags.push("stable");
        }
        if !tags.is_empty() {
            println!(
                "({}, {}): {}",
                lattice.element_name(i.lower),
                lattice.element_name(i.upper),
                tags.join(", ")
            );
        }
    }
    Ok(())
}
