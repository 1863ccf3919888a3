//! Finite complete lattices, element families, the Smyth/Hoare family
//! orders, antichain-canonical convex states and their bounds.
//!
//! Two lattice kinds are supported: powerset lattices over a fixed atom
//! universe (elements are bitsets, the order is inclusion) and explicit
//! lattices loaded from a node/edge table. Atoms are sorted at lattice
//! construction and bit position equals rank, so every derived ordering is
//! deterministic.

use std::fmt;

use crate::error::{Error, Result};

/// Default ceiling on carrier size for operations that enumerate every
/// lattice element (e.g. [`FiniteLattice::convex_members`]).
pub const CARRIER_ENUMERATION_GUARD: u64 = 1 << 20;

/// A point of a finite lattice: a bitset over the atom universe for
/// powerset lattices, a node index for explicit lattices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(pub u64);

impl Element {
    pub const EMPTY: Element = Element(0);

    pub fn bits(self) -> u64 {
        self.0
    }

    /// Subset test on raw bitsets; only meaningful for powerset elements.
    pub fn subset_of(self, other: Element) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn contains_bit(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }
}

/// Which of the two element bounds to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Meet,
    Join,
}

/// Order on pairs of lattice elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairOrder {
    /// `(x1,y1) <=i (x2,y2)` iff `x1 <= x2` and `y2 <= y1`.
    Information,
    /// `(x1,y1) <=t (x2,y2)` iff `x1 <= x2` and `y1 <= y2`.
    Truth,
}

/// Order on families of lattice elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyOrder {
    /// `X ⪯S Y` iff every `y ∈ Y` has a witness `x ∈ X` with `x <= y`.
    Smyth,
    /// `X ⪯H Y` iff every `x ∈ X` has a witness `y ∈ Y` with `x <= y`.
    Hoare,
}

/// Direction selector for closures and extremal elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Up,
    Down,
}

#[derive(Debug, Clone)]
enum LatticeKind {
    /// Powerset of `atoms`; element bits index into the sorted atom list.
    Powerset { atoms: Vec<String> },
    /// Explicit lattice: `names[i]` is the display name of node `i`,
    /// `leq[a]` is the bitset of nodes `b` with `a <= b`.
    Explicit { names: Vec<String>, leq: Vec<u64>, bot: Element, top: Element },
}

/// A finite complete lattice.
#[derive(Debug, Clone)]
pub struct FiniteLattice {
    kind: LatticeKind,
}

impl FiniteLattice {
    /// Powerset lattice over the given atoms. Atoms are sorted and
    /// deduplicated; bit `i` of an element corresponds to `atoms()[i]`.
    pub fn powerset(atoms: impl IntoIterator<Item = impl Into<String>>) -> Result<FiniteLattice> {
        let mut atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        atoms.sort();
        atoms.dedup();
        if atoms.len() > 63 {
            return Err(Error::capacity(format!(
                "powerset lattice over {} atoms exceeds the 63-atom bitset width",
                atoms.len()
            )));
        }
        Ok(FiniteLattice { kind: LatticeKind::Powerset { atoms } })
    }

    /// Explicit lattice from named nodes and a covering relation given as
    /// `leq` pairs; the reflexive-transitive closure is computed here and
    /// the lattice axioms (antisymmetry, existence of meets and joins) are
    /// verified.
    pub fn explicit(
        names: Vec<String>,
        cover_pairs: &[(usize, usize)],
    ) -> Result<FiniteLattice> {
        let n = names.len();
        if n == 0 {
            return Err(Error::domain("explicit lattice needs at least one node"));
        }
        if n > 63 {
            return Err(Error::capacity(format!("explicit lattice with {n} nodes exceeds 63")));
        }
        let mut leq = vec![0u64; n];
        for (i, row) in leq.iter_mut().enumerate() {
            *row = 1 << i;
        }
        for &(a, b) in cover_pairs {
            if a >= n || b >= n {
                return Err(Error::domain(format!("leq pair ({a}, {b}) references a missing node")));
            }
            leq[a] |= 1 << b;
        }
        // Transitive closure.
        loop {
            let mut changed = false;
            for a in 0..n {
                let mut acc = leq[a];
                let mut rest = leq[a];
                while rest != 0 {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    acc |= leq[b];
                }
                if acc != leq[a] {
                    leq[a] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && leq[a] >> b & 1 == 1 && leq[b] >> a & 1 == 1 {
                    return Err(Error::domain(format!(
                        "order is not antisymmetric: {} and {} are mutually comparable",
                        names[a], names[b]
                    )));
                }
            }
        }
        let lattice = FiniteLattice {
            kind: LatticeKind::Explicit {
                names,
                leq,
                bot: Element(0),
                top: Element(0),
            },
        };
        // Every pair must have a unique meet and join; find bot and top.
        let mut bot = None;
        let mut top = None;
        for a in 0..n {
            lattice.explicit_bound(Element(a as u64), Element(a as u64), BoundKind::Meet)?;
            for b in (a + 1)..n {
                lattice.explicit_bound(Element(a as u64), Element(b as u64), BoundKind::Meet)?;
                lattice.explicit_bound(Element(a as u64), Element(b as u64), BoundKind::Join)?;
            }
            if (0..n).all(|b| lattice.raw_leq(Element(a as u64), Element(b as u64))) {
                bot = Some(Element(a as u64));
            }
            if (0..n).all(|b| lattice.raw_leq(Element(b as u64), Element(a as u64))) {
                top = Some(Element(a as u64));
            }
        }
        let (bot, top) = match (bot, top) {
            (Some(b), Some(t)) => (b, t),
            _ => return Err(Error::domain("lattice has no bottom or no top element")),
        };
        match lattice.kind {
            LatticeKind::Explicit { names, leq, .. } => {
                Ok(FiniteLattice { kind: LatticeKind::Explicit { names, leq, bot, top } })
            }
            _ => unreachable!(),
        }
    }

    /// Loads an explicit lattice from its text form: one `node NAME` line
    /// per element and `leq A B` lines for the covering relation. `%`
    /// starts a comment.
    pub fn from_text(text: &str) -> Result<FiniteLattice> {
        let mut names: Vec<String> = Vec::new();
        let mut covers: Vec<(String, String, usize)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('%').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            match parts.next() {
                Some("node") => {
                    let name = parts
                        .next()
                        .ok_or_else(|| Error::parse(lineno + 1, 1, "node line needs a name"))?;
                    if parts.next().is_some() {
                        return Err(Error::parse(lineno + 1, 1, "node line has trailing tokens"));
                    }
                    if names.iter().any(|n| n == name) {
                        return Err(Error::parse(lineno + 1, 1, format!("duplicate node {name}")));
                    }
                    names.push(name.to_string());
                }
                Some("leq") => {
                    let a = parts
                        .next()
                        .ok_or_else(|| Error::parse(lineno + 1, 1, "leq line needs two nodes"))?;
                    let b = parts
                        .next()
                        .ok_or_else(|| Error::parse(lineno + 1, 1, "leq line needs two nodes"))?;
                    if parts.next().is_some() {
                        return Err(Error::parse(lineno + 1, 1, "leq line has trailing tokens"));
                    }
                    covers.push((a.to_string(), b.to_string(), lineno + 1));
                }
                Some(tok) => {
                    return Err(Error::parse(lineno + 1, 1, format!("unknown directive {tok}")));
                }
                None => unreachable!(),
            }
        }
        let index_of = |name: &str, line: usize| -> Result<usize> {
            names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::parse(line, 1, format!("unknown node {name}")))
        };
        let mut pairs = Vec::new();
        for (a, b, line) in covers {
            pairs.push((index_of(&a, line)?, index_of(&b, line)?));
        }
        FiniteLattice::explicit(names, &pairs)
    }

    /// Number of lattice elements.
    pub fn carrier_size(&self) -> u64 {
        match &self.kind {
            LatticeKind::Powerset { atoms } => 1u64 << atoms.len(),
            LatticeKind::Explicit { names, .. } => names.len() as u64,
        }
    }

    /// Atom universe for powerset lattices.
    pub fn atoms(&self) -> Option<&[String]> {
        match &self.kind {
            LatticeKind::Powerset { atoms } => Some(atoms),
            LatticeKind::Explicit { .. } => None,
        }
    }

    pub fn is_powerset(&self) -> bool {
        matches!(self.kind, LatticeKind::Powerset { .. })
    }

    pub fn contains(&self, e: Element) -> bool {
        e.0 < self.carrier_size()
    }

    fn assert_member(&self, e: Element) {
        assert!(
            self.contains(e),
            "element {:#x} is not in the lattice carrier (size {})",
            e.0,
            self.carrier_size()
        );
    }

    pub fn bot(&self) -> Element {
        match &self.kind {
            LatticeKind::Powerset { .. } => Element(0),
            LatticeKind::Explicit { bot, .. } => *bot,
        }
    }

    pub fn top(&self) -> Element {
        match &self.kind {
            LatticeKind::Powerset { atoms } => Element((1u64 << atoms.len()) - 1),
            LatticeKind::Explicit { top, .. } => *top,
        }
    }

    fn raw_leq(&self, a: Element, b: Element) -> bool {
        match &self.kind {
            LatticeKind::Powerset { .. } => a.0 & !b.0 == 0,
            LatticeKind::Explicit { leq, .. } => leq[a.0 as usize] >> b.0 & 1 == 1,
        }
    }

    /// The lattice order.
    pub fn leq(&self, a: Element, b: Element) -> bool {
        self.assert_member(a);
        self.assert_member(b);
        self.raw_leq(a, b)
    }

    fn explicit_bound(&self, a: Element, b: Element, kind: BoundKind) -> Result<Element> {
        let n = self.carrier_size();
        let bounds: Vec<Element> = (0..n)
            .map(Element)
            .filter(|&c| match kind {
                BoundKind::Meet => self.raw_leq(c, a) && self.raw_leq(c, b),
                BoundKind::Join => self.raw_leq(a, c) && self.raw_leq(b, c),
            })
            .collect();
        // The glb/lub must itself be a bound dominating every other bound.
        bounds
            .iter()
            .copied()
            .find(|&best| {
                bounds.iter().all(|&c| match kind {
                    BoundKind::Meet => self.raw_leq(c, best),
                    BoundKind::Join => self.raw_leq(best, c),
                })
            })
            .ok_or_else(|| {
                Error::domain(format!(
                    "elements {} and {} have no {:?}",
                    self.element_name(a),
                    self.element_name(b),
                    kind
                ))
            })
    }

    /// Greatest lower bound / least upper bound of two elements.
    pub fn bound(&self, a: Element, b: Element, kind: BoundKind) -> Element {
        self.assert_member(a);
        self.assert_member(b);
        match &self.kind {
            LatticeKind::Powerset { .. } => match kind {
                BoundKind::Meet => Element(a.0 & b.0),
                BoundKind::Join => Element(a.0 | b.0),
            },
            LatticeKind::Explicit { .. } => self
                .explicit_bound(a, b, kind)
                .expect("bounds were verified at lattice construction"),
        }
    }

    pub fn meet(&self, a: Element, b: Element) -> Element {
        self.bound(a, b, BoundKind::Meet)
    }

    pub fn join(&self, a: Element, b: Element) -> Element {
        self.bound(a, b, BoundKind::Join)
    }

    /// All lattice elements in canonical (bitset integer) order.
    pub fn carrier(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.carrier_size()).map(Element)
    }

    /// Builds a powerset element from atom names.
    pub fn element_from_atoms<S: AsRef<str>>(&self, set: &[S]) -> Result<Element> {
        let atoms = self
            .atoms()
            .ok_or_else(|| Error::domain("element_from_atoms requires a powerset lattice"))?;
        let mut bits = 0u64;
        for name in set {
            let name = name.as_ref();
            let i = atoms
                .binary_search_by(|a| a.as_str().cmp(name))
                .map_err(|_| Error::domain(format!("unknown atom {name}")))?;
            bits |= 1 << i;
        }
        Ok(Element(bits))
    }

    /// Looks up an element by node name (explicit) or `{a,b}` set syntax
    /// (powerset).
    pub fn element_by_name(&self, name: &str) -> Result<Element> {
        match &self.kind {
            LatticeKind::Powerset { .. } => {
                let inner = name
                    .strip_prefix('{')
                    .and_then(|s| s.strip_suffix('}'))
                    .ok_or_else(|| {
                        Error::domain(format!("powerset element must be written {{a,b}}: {name}"))
                    })?;
                let parts: Vec<&str> =
                    inner.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
                self.element_from_atoms(&parts)
            }
            LatticeKind::Explicit { names, .. } => names
                .iter()
                .position(|n| n == name)
                .map(|i| Element(i as u64))
                .ok_or_else(|| Error::domain(format!("unknown lattice node {name}"))),
        }
    }

    /// Display name of an element.
    pub fn element_name(&self, e: Element) -> String {
        match &self.kind {
            LatticeKind::Powerset { atoms } => {
                let mut parts = Vec::new();
                for (i, atom) in atoms.iter().enumerate() {
                    if e.contains_bit(i) {
                        parts.push(atom.as_str());
                    }
                }
                format!("{{{}}}", parts.join(","))
            }
            LatticeKind::Explicit { names, .. } => names[e.0 as usize].clone(),
        }
    }

    /// Atom names of a powerset element, sorted.
    pub fn element_atoms(&self, e: Element) -> Vec<String> {
        match &self.kind {
            LatticeKind::Powerset { atoms } => atoms
                .iter()
                .enumerate()
                .filter(|(i, _)| e.contains_bit(*i))
                .map(|(_, a)| a.clone())
                .collect(),
            LatticeKind::Explicit { names, .. } => vec![names[e.0 as usize].clone()],
        }
    }

    /// All members of the convex set denoted by `state`, i.e. every `z`
    /// with some lower generator below it and some upper generator above
    /// it. Refuses carriers larger than `CARRIER_ENUMERATION_GUARD`.
    pub fn convex_members(&self, state: &State) -> Result<ElementFamily> {
        if self.carrier_size() > CARRIER_ENUMERATION_GUARD {
            return Err(Error::capacity(format!(
                "carrier of size {} exceeds the convex-member enumeration guard {}",
                self.carrier_size(),
                CARRIER_ENUMERATION_GUARD
            )));
        }
        let mut members = Vec::new();
        for z in self.carrier() {
            if state.lower.iter().any(|g| self.raw_leq(g, z))
                && state.upper.iter().any(|h| self.raw_leq(z, h))
            {
                members.push(z);
            }
        }
        Ok(ElementFamily::from_sorted(members))
    }
}

/// A finite deduplicated set of elements in canonical sorted order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ElementFamily {
    elements: Vec<Element>,
}

impl ElementFamily {
    pub fn new(mut elements: Vec<Element>) -> ElementFamily {
        elements.sort();
        elements.dedup();
        ElementFamily { elements }
    }

    fn from_sorted(elements: Vec<Element>) -> ElementFamily {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        ElementFamily { elements }
    }

    pub fn singleton(e: Element) -> ElementFamily {
        ElementFamily { elements: vec![e] }
    }

    pub fn empty() -> ElementFamily {
        ElementFamily { elements: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, e: Element) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.elements.iter().copied()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn union(&self, other: &ElementFamily) -> ElementFamily {
        let mut all = self.elements.clone();
        all.extend_from_slice(&other.elements);
        ElementFamily::new(all)
    }
}

impl FromIterator<Element> for ElementFamily {
    fn from_iter<T: IntoIterator<Item = Element>>(iter: T) -> Self {
        ElementFamily::new(iter.into_iter().collect())
    }
}

impl fmt::Display for ElementFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:#x}", e.0)?;
        }
        write!(f, "}}")
    }
}

/// A pair `(lower, upper)` approximating a single lattice element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ApproxPair {
    pub lower: Element,
    pub upper: Element,
}

impl ApproxPair {
    pub fn new(lower: Element, upper: Element) -> ApproxPair {
        ApproxPair { lower, upper }
    }

    /// A pair is consistent when it approximates at least one element.
    pub fn is_consistent(&self, lattice: &FiniteLattice) -> bool {
        lattice.leq(self.lower, self.upper)
    }
}

/// `<=i` / `<=t` on approximating pairs.
pub fn pair_leq(lattice: &FiniteLattice, p1: ApproxPair, p2: ApproxPair, order: PairOrder) -> bool {
    match order {
        PairOrder::Information => {
            lattice.leq(p1.lower, p2.lower) && lattice.leq(p2.upper, p1.upper)
        }
        PairOrder::Truth => lattice.leq(p1.lower, p2.lower) && lattice.leq(p1.upper, p2.upper),
    }
}

/// Smyth / Hoare preorder on element families. Empty families are compared
/// literally by the defining quantifiers.
pub fn family_leq(
    lattice: &FiniteLattice,
    x: &ElementFamily,
    y: &ElementFamily,
    order: FamilyOrder,
) -> bool {
    match order {
        FamilyOrder::Smyth => y.iter().all(|b| x.iter().any(|a| lattice.leq(a, b))),
        FamilyOrder::Hoare => x.iter().all(|a| y.iter().any(|b| lattice.leq(a, b))),
    }
}

/// The precision order on (lower family, upper family) pairs: Smyth on the
/// lower components, reversed Hoare on the upper ones.
pub fn ai_leq(
    lattice: &FiniteLattice,
    s1: (&ElementFamily, &ElementFamily),
    s2: (&ElementFamily, &ElementFamily),
) -> bool {
    family_leq(lattice, s1.0, s2.0, FamilyOrder::Smyth)
        && family_leq(lattice, s2.1, s1.1, FamilyOrder::Hoare)
}

/// The interval-precision order on sets of pairs: every pair on the right
/// has an `<=i`-smaller witness on the left.
pub fn si_leq(lattice: &FiniteLattice, p1: &[ApproxPair], p2: &[ApproxPair]) -> bool {
    p2.iter()
        .all(|q| p1.iter().any(|p| pair_leq(lattice, *p, *q, PairOrder::Information)))
}

/// The `<=`-minimal or `<=`-maximal members of a family; always an
/// antichain, empty iff the family is empty.
pub fn extremal_elements(
    lattice: &FiniteLattice,
    family: &ElementFamily,
    kind: Direction,
) -> ElementFamily {
    let mut out: Vec<Element> = Vec::new();
    for e in family.iter() {
        let dominated = family.iter().any(|other| {
            other != e
                && match kind {
                    Direction::Up => lattice.leq(other, e) && !lattice.leq(e, other),
                    Direction::Down => lattice.leq(e, other) && !lattice.leq(other, e),
                }
        });
        if !dominated {
            out.push(e);
        }
    }
    ElementFamily::new(out)
}

/// One half of a state: the canonical antichain generating an up- or
/// down-set, together with a membership test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureHalf {
    pub antichain: ElementFamily,
    pub direction: Direction,
}

impl ClosureHalf {
    pub fn member(&self, lattice: &FiniteLattice, z: Element) -> bool {
        match self.direction {
            Direction::Up => self.antichain.iter().any(|g| lattice.leq(g, z)),
            Direction::Down => self.antichain.iter().any(|g| lattice.leq(z, g)),
        }
    }
}

/// Up or down closure of a family, represented by its extremal antichain.
pub fn closure(lattice: &FiniteLattice, family: &ElementFamily, direction: Direction) -> ClosureHalf {
    ClosureHalf { antichain: extremal_elements(lattice, family, direction), direction }
}

/// An upward-closed family times a downward-closed family, stored as
/// (minimal antichain, maximal antichain); denotes a convex set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct State {
    lower: ElementFamily,
    upper: ElementFamily,
}

impl State {
    /// Canonicalizes arbitrary generator families into antichain form.
    pub fn new(lattice: &FiniteLattice, lower: ElementFamily, upper: ElementFamily) -> State {
        State {
            lower: extremal_elements(lattice, &lower, Direction::Up),
            upper: extremal_elements(lattice, &upper, Direction::Down),
        }
    }

    /// The least precise state `↑{⊥} × ↓{⊤}`.
    pub fn least_precise(lattice: &FiniteLattice) -> State {
        State {
            lower: ElementFamily::singleton(lattice.bot()),
            upper: ElementFamily::singleton(lattice.top()),
        }
    }

    /// The state `↑{x} × ↓{y}` generated by a single pair.
    pub fn from_pair(pair: ApproxPair) -> State {
        State {
            lower: ElementFamily::singleton(pair.lower),
            upper: ElementFamily::singleton(pair.upper),
        }
    }

    /// Minimal generators of the up-set.
    pub fn lower_antichain(&self) -> &ElementFamily {
        &self.lower
    }

    /// Maximal generators of the down-set.
    pub fn upper_antichain(&self) -> &ElementFamily {
        &self.upper
    }

    pub fn lower_half(&self) -> ClosureHalf {
        ClosureHalf { antichain: self.lower.clone(), direction: Direction::Up }
    }

    pub fn upper_half(&self) -> ClosureHalf {
        ClosureHalf { antichain: self.upper.clone(), direction: Direction::Down }
    }

    /// All members of the up-set half (enumerates the carrier).
    pub fn up_members(&self, lattice: &FiniteLattice) -> Result<Vec<Element>> {
        self.half_members(lattice, Direction::Up)
    }

    /// All members of the down-set half (enumerates the carrier).
    pub fn down_members(&self, lattice: &FiniteLattice) -> Result<Vec<Element>> {
        self.half_members(lattice, Direction::Down)
    }

    fn half_members(&self, lattice: &FiniteLattice, direction: Direction) -> Result<Vec<Element>> {
        if lattice.carrier_size() > CARRIER_ENUMERATION_GUARD {
            return Err(Error::capacity(format!(
                "carrier of size {} exceeds the member enumeration guard {}",
                lattice.carrier_size(),
                CARRIER_ENUMERATION_GUARD
            )));
        }
        let (generators, dir) = match direction {
            Direction::Up => (&self.lower, Direction::Up),
            Direction::Down => (&self.upper, Direction::Down),
        };
        let half = ClosureHalf { antichain: generators.clone(), direction: dir };
        Ok(lattice.carrier().filter(|z| half.member(lattice, *z)).collect())
    }
}

/// `⪯Ai` on canonical states.
pub fn state_ai_leq(lattice: &FiniteLattice, s1: &State, s2: &State) -> bool {
    ai_leq(lattice, (&s1.lower, &s1.upper), (&s2.lower, &s2.upper))
}

/// `⪯Ai` between a state and the state generated by a single pair.
pub fn state_approximates_pair(lattice: &FiniteLattice, s: &State, pair: ApproxPair) -> bool {
    state_ai_leq(lattice, s, &State::from_pair(pair))
}

/// Result of comparing two states for precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrecisionOrdering {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// Classifies two states by `⪯Ai` in both directions.
pub fn precision_compare(lattice: &FiniteLattice, s1: &State, s2: &State) -> PrecisionOrdering {
    match (state_ai_leq(lattice, s1, s2), state_ai_leq(lattice, s2, s1)) {
        (true, true) => PrecisionOrdering::Equal,
        (true, false) => PrecisionOrdering::Less,
        (false, true) => PrecisionOrdering::Greater,
        (false, false) => PrecisionOrdering::Incomparable,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateBoundKind {
    /// `⪯Ai`-greatest lower bound: union of up-sets times union of
    /// down-sets.
    Glb,
    /// `⪯Ai`-least upper bound: intersection of up-sets times intersection
    /// of down-sets.
    Lub,
}

/// Bound of a non-empty set of states, returned canonical.
pub fn state_bound(
    lattice: &FiniteLattice,
    states: &[State],
    kind: StateBoundKind,
) -> Result<State> {
    if states.is_empty() {
        return Err(Error::domain("state_bound needs at least one state"));
    }
    match kind {
        StateBoundKind::Glb => {
            let mut lower = ElementFamily::empty();
            let mut upper = ElementFamily::empty();
            for s in states {
                lower = lower.union(&s.lower);
                upper = upper.union(&s.upper);
            }
            Ok(State::new(lattice, lower, upper))
        }
        StateBoundKind::Lub => {
            // Intersection of up-sets is generated by pairwise joins;
            // intersection of down-sets by pairwise meets.
            let mut lower = states[0].lower.clone();
            let mut upper = states[0].upper.clone();
            for s in &states[1..] {
                lower = ElementFamily::new(
                    lower
                        .iter()
                        .flat_map(|a| s.lower.iter().map(move |b| (a, b)))
                        .map(|(a, b)| lattice.join(a, b))
                        .collect(),
                );
                upper = ElementFamily::new(
                    upper
                        .iter()
                        .flat_map(|a| s.upper.iter().map(move |b| (a, b)))
                        .map(|(a, b)| lattice.meet(a, b))
                        .collect(),
                );
            }
            Ok(State::new(lattice, lower, upper))
        }
    }
}
