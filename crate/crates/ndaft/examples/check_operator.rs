//! Exhaustive operator verification: precision monotonicity, exactness,
//! symmetry and consistency, with concrete counterexamples when a
//! property fails.

use ndaft::fixtures;
use ndaft::operators::{check_properties, DmtNdao, IcMinNdao, IcNdao, PropertyReport};

fn show(label: &str, report: &PropertyReport) {
    println!("{label}:");
    for (name, check) in [
        ("ai-monotone", &report.ai_monotone),
        ("exact", &report.exact),
        ("symmetric", &report.symmetric),
        ("consistent", &report.consistent),
    ] {
        match (&check.holds, &check.witness) {
            (true, _) => println!("  {name}: holds"),
            (false, Some(w)) => println!("  {name}: fails ({w})"),
            (false, None) => println!("  {name}: fails"),
        }
    }
    println!("  ({} pairs, {} comparisons)\n", report.pairs_checked, report.comparisons);
}

fn main() -> ndaft::Result<()> {
    let guard = 1 << 20;

    // The consequence approximation has all four properties.
    let p3 = fixtures::p3();
    show("consequence approximation on p3", &check_properties(&IcNdao::new(p3), guard)?);

    // Minimizing the output families destroys precision monotonicity.
    let p9 = fixtures::p9();
    show("minimized variant on p9", &check_properties(&IcMinNdao::new(p9), guard)?);

    // The interval variant is monotone and exact but not symmetric: its
    // domain is the consistent pairs, so swapped arguments fall outside.
    let p10 = fixtures::p10();
    show("interval variant on p10", &check_properties(&DmtNdao::new(p10), guard)?);
    Ok(())
}
