//! Belnap's four-valued bilattice FOUR.
//!
//! The four truth values are arranged in two lattice orders: the truth
//! order `F <=t U <=t T`, `F <=t C <=t T` (with `U` and `C` incomparable)
//! and the information order `U <=i F <=i C`, `U <=i T <=i C` (with `F`
//! and `T` incomparable).

use serde::{Deserialize, Serialize};

/// A truth value of FOUR. Deliberately not `Ord`: the two meaningful
/// orders are [`TruthValue::truth_leq`] and [`TruthValue::info_leq`],
/// both partial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TruthValue {
    /// False.
    F,
    /// Unknown (lack of information).
    U,
    /// Contradictory (too much information).
    C,
    /// True.
    T,
}

pub use TruthValue::{C, F, T, U};

impl TruthValue {
    /// Encodes a value as the pair `(at least contradictory, at least
    /// undecided)`, i.e. `(v >=t C, v >=t U)`. An atom assigned by an
    /// interpretation `(x, y)` gets exactly `(p in x, p in y)`.
    pub fn as_bounds(self) -> (bool, bool) {
        match self {
            T => (true, true),
            U => (false, true),
            F => (false, false),
            C => (true, false),
        }
    }

    pub fn from_bounds(lower: bool, upper: bool) -> Self {
        match (lower, upper) {
            (true, true) => T,
            (false, true) => U,
            (false, false) => F,
            (true, false) => C,
        }
    }

    /// The truth-order involution: swaps T and F, fixes U and C.
    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Self {
        let (l, u) = self.as_bounds();
        TruthValue::from_bounds(!u, !l)
    }

    /// Greatest lower bound in the truth order; interprets conjunction.
    pub fn and(self, other: Self) -> Self {
        let (l1, u1) = self.as_bounds();
        let (l2, u2) = other.as_bounds();
        TruthValue::from_bounds(l1 && l2, u1 && u2)
    }

    /// Least upper bound in the truth order; interprets disjunction.
    pub fn or(self, other: Self) -> Self {
        let (l1, u1) = self.as_bounds();
        let (l2, u2) = other.as_bounds();
        TruthValue::from_bounds(l1 || l2, u1 || u2)
    }

    /// Truth order `F <=t U,C <=t T`.
    pub fn truth_leq(self, other: Self) -> bool {
        let (l1, u1) = self.as_bounds();
        let (l2, u2) = other.as_bounds();
        l1 <= l2 && u1 <= u2
    }

    /// Information order `U <=i F,T <=i C`.
    pub fn info_leq(self, other: Self) -> bool {
        let (l1, u1) = self.as_bounds();
        let (l2, u2) = other.as_bounds();
        l1 <= l2 && u2 <= u1
    }

    pub fn all() -> [TruthValue; 4] {
        [F, U, C, T]
    }
}

/// Connective selector for [`truth_connective`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connective {
    Neg,
    And,
    Or,
    /// Least upper bound in the truth order (same table as `Or`).
    LubT,
    /// Greatest lower bound in the truth order (same table as `And`).
    GlbT,
}

/// Applies a connective. `b` must be present exactly for the binary ones.
pub fn truth_connective(kind: Connective, a: TruthValue, b: Option<TruthValue>) -> TruthValue {
    match kind {
        Connective::Neg => {
            assert!(b.is_none(), "neg is unary");
            a.neg()
        }
        Connective::And | Connective::GlbT => a.and(b.expect("and is binary")),
        Connective::Or | Connective::LubT => a.or(b.expect("or is binary")),
    }
}
