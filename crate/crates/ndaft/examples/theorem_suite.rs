//! The cross-check suite: operator-level results against the
//! definition-level predicates and the deterministic oracle, on a fixture
//! and on a seeded random program.

use ndaft::fixtures;
use ndaft::oracle::{random_program, run_theorem_suite, GenConfig, OperatorChoice, TheoremStatus};

fn report(label: &str, program: &ndaft::Program) -> ndaft::Result<()> {
    println!("{label}:\n{}", program.display());
    for result in run_theorem_suite(program, OperatorChoice::Ic)? {
        let status = match result.status {
            TheoremStatus::Pass => "pass",
            TheoremStatus::Fail => "FAIL",
            TheoremStatus::Skipped => "skipped",
        };
        println!("  {}: {status}", result.name);
        if result.status == TheoremStatus::Fail {
            if let Some(w) = &result.counterexample {
                println!("    counterexample: {w}");
            }
        }
    }
    println!();
    Ok(())
}

fn main() -> ndaft::Result<()> {
    report("fixture p4", &fixtures::p4())?;
    let random = random_program(&GenConfig::new(42));
    report("seeded random program", &random)?;
    Ok(())
}
