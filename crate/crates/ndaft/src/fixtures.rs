//! The canonical program corpus and the table-operator gallery shipped
//! with the crate, loaded from the `fixtures/` directory.

use crate::lattice::FiniteLattice;
use crate::operators::{Domain, TableNdao};
use crate::syntax::Program;

/// Program sources by fixture name.
pub const PROGRAM_SOURCES: [(&str, &str); 11] = [
    ("p1", include_str!("../fixtures/p1.lp")),
    ("p2", include_str!("../fixtures/p2.lp")),
    ("p3", include_str!("../fixtures/p3.lp")),
    ("p4", include_str!("../fixtures/p4.lp")),
    ("p5", include_str!("../fixtures/p5.lp")),
    ("p6", include_str!("../fixtures/p6.lp")),
    ("p7", include_str!("../fixtures/p7.lp")),
    ("p8", include_str!("../fixtures/p8.lp")),
    ("p9", include_str!("../fixtures/p9.lp")),
    ("p10", include_str!("../fixtures/p10.lp")),
    ("p11", include_str!("../fixtures/p11.lp")),
];

pub const SIX_NODE_LATTICE: &str = include_str!("../fixtures/six_node.lat");
pub const SIX_NODE_TABLE: &str = include_str!("../fixtures/six_node.tbl");
pub const FOUR_LATTICE: &str = include_str!("../fixtures/four.lat");
pub const FOUR_NONSYM_TABLE: &str = include_str!("../fixtures/four_nonsym.tbl");
pub const NO_CONSISTENT_FP_TABLE: &str = include_str!("../fixtures/no_consistent_fp.tbl");

fn parse(name: &str) -> Program {
    let src = PROGRAM_SOURCES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, s)| *s)
        .expect("known fixture");
    Program::parse(src).expect("fixture programs parse")
}

pub fn p1() -> Program {
    parse("p1")
}

pub fn p2() -> Program {
    parse("p2")
}

pub fn p3() -> Program {
    parse("p3")
}

pub fn p4() -> Program {
    parse("p4")
}

pub fn p5() -> Program {
    parse("p5")
}

pub fn p6() -> Program {
    parse("p6")
}

pub fn p7() -> Program {
    parse("p7")
}

pub fn p8() -> Program {
    parse("p8")
}

pub fn p9() -> Program {
    parse("p9")
}

pub fn p10() -> Program {
    parse("p10")
}

pub fn p11() -> Program {
    parse("p11")
}

/// All fixture programs in order.
pub fn all_programs() -> Vec<Program> {
    PROGRAM_SOURCES.iter().map(|(n, _)| parse(n)).collect()
}

/// Node names of the six-node lattice, for test readability.
pub struct SixNodeNames {
    pub bot: String,
    pub xp: String,
    pub x: String,
    pub yp: String,
    pub y: String,
    pub top: String,
}

/// The six-node table operator: it has a stable fixpoint `(x, y)` that is
/// not truth-minimal among its fixpoints. Not an approximating operator
/// (it is not precision-monotonic); shipped for the fixpoint-pathology
/// tests.
pub fn six_node_ndao() -> (TableNdao, SixNodeNames) {
    let lattice = FiniteLattice::from_text(SIX_NODE_LATTICE).expect("fixture lattice loads");
    let op =
        TableNdao::from_text(lattice, SIX_NODE_TABLE, Domain::AllPairs).expect("fixture table loads");
    let names = SixNodeNames {
        bot: "bot".into(),
        xp: "xp".into(),
        x: "x".into(),
        yp: "yp".into(),
        y: "y".into(),
        top: "top".into(),
    };
    (op, names)
}

/// The non-symmetric operator over the truth-order diamond of the four
/// Belnap values: weakly consistent but not strongly consistent at
/// `(U, T)`. Precision-monotonic on consistent pairs only.
pub fn four_nonsymmetric_ndao() -> TableNdao {
    let lattice = FiniteLattice::from_text(FOUR_LATTICE).expect("fixture lattice loads");
    TableNdao::from_text(lattice, FOUR_NONSYM_TABLE, Domain::ConsistentOnly)
        .expect("fixture table loads")
}

/// A precision-monotonic (on consistent pairs) and exact operator over the
/// powerset of `{p, q}` that admits no consistent fixpoint.
pub fn no_consistent_fixpoint_ndao() -> TableNdao {
    let lattice = FiniteLattice::powerset(["p", "q"]).expect("two atoms fit");
    TableNdao::from_text(lattice, NO_CONSISTENT_FP_TABLE, Domain::ConsistentOnly)
        .expect("fixture table loads")
}
