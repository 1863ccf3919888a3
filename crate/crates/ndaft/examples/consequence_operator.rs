//! The non-deterministic consequence operator and its four-valued
//! approximation: activated heads, hitting-set families, fixpoints and
//! the information-minimal fixpoints.

use ndaft::fixpoint::{fixpoints, kk_interpretations};
use ndaft::operators::{hd_bounds, ic_two_valued, IcNdao, Ndao};
use ndaft::semantics::interpretation;
use ndaft::Program;

fn main() -> ndaft::Result<()> {
    let program = Program::parse("p;q :- not q.")?;
    let lattice = program.lattice();
    println!("program:\n{}\n", program.display());

    // Two-valued consequences: each family member is one way of
    // validating every activated disjunction.
    for x in lattice.carrier() {
        let family = ic_two_valued(&program, x, 16)?;
        let names: Vec<String> = family.iter().map(|e| lattice.element_name(e)).collect();
        println!("IC({}) = {{{}}}", lattice.element_name(x), names.join(", "));
    }

    // Four-valued bounds on the activated heads at one interpretation.
    let i = interpretation(&program, &[], &["q"])?;
    let (lo, hi) = hd_bounds(&program, i);
    println!("\nat ({{}}, {{q}}): {} lower heads, {} upper heads", lo.heads().len(), hi.heads().len());

    let op = IcNdao::new(program.clone());
    let (lower, upper) = op.apply(i.lower, i.upper)?;
    println!("lower bounds: {}", show(&lattice, &lower));
    println!("upper bounds: {}", show(&lattice, &upper));

    println!("\nfixpoints (weakly supported models):");
    for fp in fixpoints(&op, true, 1 << 16)? {
        println!(
            "  ({}, {})",
            lattice.element_name(fp.lower),
            lattice.element_name(fp.upper)
        );
    }
    println!("information-minimal fixpoints:");
    for fp in kk_interpretations(&op, true, 1 << 16)? {
        println!(
            "  ({}, {})",
            lattice.element_name(fp.lower),
            lattice.element_name(fp.upper)
        );
    }
    Ok(())
}

fn show(lattice: &ndaft::FiniteLattice, family: &ndaft::ElementFamily) -> String {
    let names: Vec<String> = family.iter().map(|e| lattice.element_name(e)).collect();
    format!("{{{}}}", names.join(", "))
}
