//! Operators over custom lattices, loaded from the node/edge and table
//! text formats: a six-node lattice whose table operator has a stable
//! fixpoint that is not truth-minimal, and a two-atom operator without
//! any consistent fixpoint.

use ndaft::fixpoint::{fixpoints, stable_fixpoints};
use ndaft::fixtures;
use ndaft::lattice::ApproxPair;
use ndaft::operators::Ndao;

fn main() -> ndaft::Result<()> {
    let guard = 1 << 16;

    let (op, names) = fixtures::six_node_ndao();
    let lattice = op.lattice().clone();
    println!("six-node lattice: {} elements, bottom {}", lattice.carrier_size(), names.bot);

    let stable = stable_fixpoints(&op, false, guard)?;
    for fp in &stable {
        println!(
            "stable fixpoint ({}, {})",
            lattice.element_name(fp.lower),
            lattice.element_name(fp.upper)
        );
    }
    let x = lattice.element_by_name(&names.x)?;
    let y = lattice.element_by_name(&names.y)?;
    let xp = lattice.element_by_name(&names.xp)?;
    let yp = lattice.element_by_name(&names.yp)?;
    let all = fixpoints(&op, false, guard)?;
    if stable.contains(&ApproxPair::new(x, y)) && all.contains(&ApproxPair::new(xp, yp)) {
        println!(
            "({}, {}) is stable yet ({}, {}) is a strictly truth-smaller fixpoint",
            names.x, names.y, names.xp, names.yp
        );
    }

    let nofp = fixtures::no_consistent_fixpoint_ndao();
    let consistent = fixpoints(&nofp, true, guard)?;
    println!(
        "\ntwo-atom operator: {} consistent fixpoints (monotone and exact, yet none exist)",
        consistent.len()
    );
    Ok(())
}
