//! Non-deterministic operators and their approximations: the two-valued
//! immediate consequence operator for disjunctive programs, its
//! four-valued approximation, the minimized variant, the interval-based
//! variant, table-defined operators for custom lattices, and an
//! exhaustive property checker.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::four::TruthValue;
use crate::lattice::{
    ai_leq, ApproxPair, Direction, Element, ElementFamily, extremal_elements, FiniteLattice,
};
use crate::semantics::{eval_formula, Interpretation};
use crate::syntax::Program;

/// Default ceiling on `|⋃HD|` for materializing hitting-set families.
pub const DEFAULT_FAMILY_GUARD: usize = 16;

/// A family of activated rule heads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeadFamily {
    heads: Vec<Element>,
}

impl HeadFamily {
    pub fn new(mut heads: Vec<Element>) -> HeadFamily {
        heads.sort();
        heads.dedup();
        debug_assert!(heads.iter().all(|h| h.bits() != 0), "rule heads are non-empty");
        HeadFamily { heads }
    }

    pub fn heads(&self) -> &[Element] {
        &self.heads
    }

    pub fn is_empty(&self) -> bool {
        self.heads.is_empty()
    }

    /// Union of all heads.
    pub fn union_mask(&self) -> u64 {
        self.heads.iter().fold(0, |acc, h| acc | h.bits())
    }

    /// Membership in the induced hitting-set family: `v` lies inside the
    /// head union and meets every head.
    pub fn admits(&self, v: Element) -> bool {
        v.bits() & !self.union_mask() == 0 && self.heads.iter().all(|h| h.bits() & v.bits() != 0)
    }

    /// Materializes the hitting-set family `{v ⊆ ⋃heads | ∀Δ: v∩Δ≠∅}`.
    /// For an empty head family this is `{∅}`.
    pub fn hitting_family(&self, guard: usize) -> Result<ElementFamily> {
        let union = self.union_mask();
        let width = union.count_ones() as usize;
        if width > guard {
            return Err(Error::capacity(format!(
                "activated heads span {width} atoms, exceeding the hitting-set guard {guard}"
            )));
        }
        // Enumerate submasks of the union in increasing bit order.
        let positions: Vec<u32> = (0..64).filter(|i| union >> i & 1 == 1).collect();
        let mut out = Vec::new();
        for combo in 0..1u64 << width {
            let mut v = 0u64;
            for (j, pos) in positions.iter().enumerate() {
                if combo >> j & 1 == 1 {
                    v |= 1 << pos;
                }
            }
            let v = Element(v);
            if self.admits(v) {
                out.push(v);
            }
        }
        Ok(ElementFamily::new(out))
    }
}

/// Heads of rules whose body is true under the two-valued interpretation.
pub fn hd_two_valued(program: &Program, x: Element) -> HeadFamily {
    let exact = ApproxPair::new(x, x);
    HeadFamily::new(
        program
            .rules()
            .iter()
            .filter(|r| eval_formula(exact, &r.body) == TruthValue::T)
            .map(|r| r.head)
            .collect(),
    )
}

/// The two-valued non-deterministic immediate consequence operator: all
/// interpretations inside the activated head union hitting every
/// activated head.
pub fn ic_two_valued(program: &Program, x: Element, guard: usize) -> Result<ElementFamily> {
    hd_two_valued(program, x).hitting_family(guard)
}

/// Lower and upper bounds on the activated heads under a four-valued
/// interpretation: heads whose body is at least contradictory (T or C)
/// and heads whose body is at least undecided (T or U).
pub fn hd_bounds(program: &Program, i: Interpretation) -> (HeadFamily, HeadFamily) {
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    for rule in program.rules() {
        let (at_least_c, at_least_u) = eval_formula(i, &rule.body).as_bounds();
        if at_least_c {
            lower.push(rule.head);
        }
        if at_least_u {
            upper.push(rule.head);
        }
    }
    (HeadFamily::new(lower), HeadFamily::new(upper))
}

/// Input domain of an approximating operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    AllPairs,
    ConsistentOnly,
}

/// A non-deterministic approximating operator: maps a pair of lattice
/// elements to a non-empty family of lower bounds and a non-empty family
/// of upper bounds.
pub trait Ndao {
    fn lattice(&self) -> &FiniteLattice;

    fn domain(&self) -> Domain {
        Domain::AllPairs
    }

    /// Is `(x, y)` inside the declared input domain?
    fn accepts(&self, x: Element, y: Element) -> bool {
        match self.domain() {
            Domain::AllPairs => true,
            Domain::ConsistentOnly => self.lattice().leq(x, y),
        }
    }

    fn lower(&self, x: Element, y: Element) -> Result<ElementFamily>;

    fn upper(&self, x: Element, y: Element) -> Result<ElementFamily>;

    /// Membership test for the lower family; the default materializes,
    /// implementations override with a symbolic fast path.
    fn lower_contains(&self, x: Element, y: Element, v: Element) -> Result<bool> {
        Ok(self.lower(x, y)?.contains(v))
    }

    fn upper_contains(&self, x: Element, y: Element, v: Element) -> Result<bool> {
        Ok(self.upper(x, y)?.contains(v))
    }

    fn apply(&self, x: Element, y: Element) -> Result<(ElementFamily, ElementFamily)> {
        Ok((self.lower(x, y)?, self.upper(x, y)?))
    }
}

/// The four-valued approximation of [`ic_two_valued`]: hitting-set
/// families of the lower and upper activated-head bounds.
pub struct IcNdao {
    program: Program,
    lattice: FiniteLattice,
    family_guard: usize,
}

impl IcNdao {
    pub fn new(program: Program) -> IcNdao {
        let lattice = program.lattice();
        IcNdao { program, lattice, family_guard: DEFAULT_FAMILY_GUARD }
    }

    pub fn with_family_guard(mut self, guard: usize) -> IcNdao {
        self.family_guard = guard;
        self
    }

    pub fn program(&self) -> &Program {
        &self.program
    }
}

impl Ndao for IcNdao {
    fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    fn lower(&self, x: Element, y: Element) -> Result<ElementFamily> {
        let (lo, _) = hd_bounds(&self.program, ApproxPair::new(x, y));
        lo.hitting_family(self.family_guard)
    }

    fn upper(&self, x: Element, y: Element) -> Result<ElementFamily> {
        let (_, hi) = hd_bounds(&self.program, ApproxPair::new(x, y));
        hi.hitting_family(self.family_guard)
    }

    fn lower_contains(&self, x: Element, y: Element, v: Element) -> Result<bool> {
        let (lo, _) = hd_bounds(&self.program, ApproxPair::new(x, y));
        Ok(lo.admits(v))
    }

    fn upper_contains(&self, x: Element, y: Element, v: Element) -> Result<bool> {
        let (_, hi) = hd_bounds(&self.program, ApproxPair::new(x, y));
        Ok(hi.admits(v))
    }
}

/// The minimized variant: componentwise inclusion-minimal hitting sets,
/// with the upper bound defined by symmetry `upper(x,y) = lower(y,x)`.
/// Not precision-monotonic in general; kept as a counterexample operator.
pub struct IcMinNdao {
    program: Program,
    lattice: FiniteLattice,
    family_guard: usize,
}

impl IcMinNdao {
    pub fn new(program: Program) -> IcMinNdao {
        let lattice = program.lattice();
        IcMinNdao { program, lattice, family_guard: DEFAULT_FAMILY_GUARD }
    }

    fn minimized_lower(&self, x: Element, y: Element) -> Result<ElementFamily> {
        let (lo, _) = hd_bounds(&self.program, ApproxPair::new(x, y));
        let family = lo.hitting_family(self.family_guard)?;
        Ok(extremal_elements(&self.lattice, &family, Direction::Up))
    }
}

impl Ndao for IcMinNdao {
    fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    fn lower(&self, x: Element, y: Element) -> Result<ElementFamily> {
        self.minimized_lower(x, y)
    }

    fn upper(&self, x: Element, y: Element) -> Result<ElementFamily> {
        self.minimized_lower(y, x)
    }
}

/// The interval-based approximation: lower heads are activated in every
/// two-valued interpretation of `[x, y]`, upper heads in at least one.
/// Defined on consistent pairs only.
pub struct DmtNdao {
    program: Program,
    lattice: FiniteLattice,
    family_guard: usize,
}

impl DmtNdao {
    pub fn new(program: Program) -> DmtNdao {
        let lattice = program.lattice();
        DmtNdao { program, lattice, family_guard: DEFAULT_FAMILY_GUARD }
    }

    fn check_domain(&self, x: Element, y: Element) -> Result<()> {
        if !x.subset_of(y) {
            return Err(Error::domain(format!(
                "interval operator applied to the inconsistent pair ({}, {})",
                self.lattice.element_name(x),
                self.lattice.element_name(y)
            )));
        }
        Ok(())
    }

    /// Intersection (lower) or union (upper) of `HD` over the interval.
    fn head_bound(&self, x: Element, y: Element, kind: Direction) -> Result<HeadFamily> {
        self.check_domain(x, y)?;
        let free = y.bits() & !x.bits();
        let mut acc: Option<Vec<Element>> = None;
        let mut sub = free;
        loop {
            let z = Element(x.bits() | sub);
            let hd = hd_two_valued(&self.program, z);
            acc = Some(match (acc, kind) {
                (None, _) => hd.heads().to_vec(),
                (Some(prev), Direction::Up) => {
                    // intersection for the lower bound
                    prev.into_iter().filter(|h| hd.heads().contains(h)).collect()
                }
                (Some(mut prev), Direction::Down) => {
                    prev.extend_from_slice(hd.heads());
                    prev
                }
            });
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
        Ok(HeadFamily::new(acc.unwrap_or_default()))
    }
}

impl Ndao for DmtNdao {
    fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    fn domain(&self) -> Domain {
        Domain::ConsistentOnly
    }

    fn lower(&self, x: Element, y: Element) -> Result<ElementFamily> {
        self.head_bound(x, y, Direction::Up)?.hitting_family(self.family_guard)
    }

    fn upper(&self, x: Element, y: Element) -> Result<ElementFamily> {
        self.head_bound(x, y, Direction::Down)?.hitting_family(self.family_guard)
    }

    fn lower_contains(&self, x: Element, y: Element, v: Element) -> Result<bool> {
        Ok(self.head_bound(x, y, Direction::Up)?.admits(v))
    }

    fn upper_contains(&self, x: Element, y: Element, v: Element) -> Result<bool> {
        Ok(self.head_bound(x, y, Direction::Down)?.admits(v))
    }
}

/// Fallback rule for pairs missing from a table operator.
#[derive(Debug, Clone)]
pub enum TableDefault {
    /// Missing pairs are an error: the table must be total.
    None,
    /// `O(x, y) = ({x}, {y})`.
    IdentitySingleton,
    /// A constant pair of families.
    Constant(ElementFamily, ElementFamily),
}

/// An operator given by an explicit lookup table.
pub struct TableNdao {
    lattice: FiniteLattice,
    table: BTreeMap<(Element, Element), (ElementFamily, ElementFamily)>,
    default: TableDefault,
    domain: Domain,
}

impl TableNdao {
    pub fn new(
        lattice: FiniteLattice,
        table: BTreeMap<(Element, Element), (ElementFamily, ElementFamily)>,
        default: TableDefault,
        domain: Domain,
    ) -> Result<TableNdao> {
        for ((x, y), (lo, hi)) in &table {
            if !lattice.contains(*x) || !lattice.contains(*y) {
                return Err(Error::domain("table entry references a foreign element"));
            }
            if lo.is_empty() || hi.is_empty() {
                return Err(Error::domain(format!(
                    "table entry ({}, {}) has an empty output family; operator outputs must be non-empty",
                    lattice.element_name(*x),
                    lattice.element_name(*y)
                )));
            }
        }
        if matches!(default, TableDefault::None) {
            for x in lattice.carrier() {
                for y in lattice.carrier() {
                    let in_domain = match domain {
                        Domain::AllPairs => true,
                        Domain::ConsistentOnly => lattice.leq(x, y),
                    };
                    if in_domain && !table.contains_key(&(x, y)) {
                        return Err(Error::domain(format!(
                            "table is not total: missing pair ({}, {})",
                            lattice.element_name(x),
                            lattice.element_name(y)
                        )));
                    }
                }
            }
        }
        Ok(TableNdao { lattice, table, default, domain })
    }

    /// Loads a table operator from text: `pair X Y : lower {a,b} upper {c}`
    /// lines, optionally `default identity` or
    /// `default : lower {..} upper {..}`. Elements are named per the
    /// lattice (node names, or `{a,b}` sets for powerset lattices).
    pub fn from_text(lattice: FiniteLattice, text: &str, domain: Domain) -> Result<TableNdao> {
        let mut table = BTreeMap::new();
        let mut default = TableDefault::None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('%').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::parse(lineno + 1, 1, msg.to_string());
            if let Some(rest) = line.strip_prefix("default") {
                let rest = rest.trim();
                if rest == "identity" {
                    default = TableDefault::IdentitySingleton;
                } else if let Some(families) = rest.strip_prefix(':') {
                    let (lo, hi) = parse_family_pair(&lattice, families, lineno + 1)?;
                    default = TableDefault::Constant(lo, hi);
                } else {
                    return Err(err("default needs `identity` or `: lower {..} upper {..}`"));
                }
                continue;
            }
            let rest = line.strip_prefix("pair").ok_or_else(|| err("expected `pair` or `default`"))?;
            let (pair_part, fam_part) = rest
                .split_once(':')
                .ok_or_else(|| err("expected `:` after the element pair"))?;
            let names = tokenize_elements(pair_part);
            if names.len() != 2 {
                return Err(err("expected exactly two elements before `:`"));
            }
            let x = lattice.element_by_name(&names[0])?;
            let y = lattice.element_by_name(&names[1])?;
            let (lo, hi) = parse_family_pair(&lattice, fam_part, lineno + 1)?;
            table.insert((x, y), (lo, hi));
        }
        TableNdao::new(lattice, table, default, domain)
    }
}

/// Splits `{a,b} {c}` or `x y` into element name tokens, keeping braces.
fn tokenize_elements(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0;
    for c in text.chars() {
        match c {
            '{' => {
                depth += 1;
                cur.push(c);
            }
            '}' => {
                depth -= 1;
                cur.push(c);
            }
            c if c.is_whitespace() && depth == 0 => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn parse_family_pair(
    lattice: &FiniteLattice,
    text: &str,
    line: usize,
) -> Result<(ElementFamily, ElementFamily)> {
    let lower_pos = text
        .find("lower")
        .ok_or_else(|| Error::parse(line, 1, "missing `lower` family"))?;
    let upper_pos = text
        .find("upper")
        .ok_or_else(|| Error::parse(line, 1, "missing `upper` family"))?;
    if upper_pos < lower_pos {
        return Err(Error::parse(line, 1, "`lower` must precede `upper`"));
    }
    let lower_text = &text[lower_pos + 5..upper_pos];
    let upper_text = &text[upper_pos + 5..];
    Ok((parse_family(lattice, lower_text, line)?, parse_family(lattice, upper_text, line)?))
}

fn parse_family(lattice: &FiniteLattice, text: &str, line: usize) -> Result<ElementFamily> {
    let mut elements = Vec::new();
    for token in tokenize_elements(text) {
        if lattice.is_powerset() {
            elements.push(lattice.element_by_name(&token)?);
        } else {
            // Node families may be written {a,b} or as bare names.
            let inner = token.strip_prefix('{').and_then(|s| s.strip_suffix('}'));
            match inner {
                Some(list) => {
                    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                        elements.push(lattice.element_by_name(name)?);
                    }
                }
                None => elements.push(lattice.element_by_name(&token)?),
            }
        }
    }
    if elements.is_empty() {
        return Err(Error::parse(line, 1, "family must contain at least one element"));
    }
    Ok(ElementFamily::new(elements))
}

impl Ndao for TableNdao {
    fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    fn domain(&self) -> Domain {
        self.domain
    }

    fn lower(&self, x: Element, y: Element) -> Result<ElementFamily> {
        self.apply(x, y).map(|(lo, _)| lo)
    }

    fn upper(&self, x: Element, y: Element) -> Result<ElementFamily> {
        self.apply(x, y).map(|(_, hi)| hi)
    }

    fn apply(&self, x: Element, y: Element) -> Result<(ElementFamily, ElementFamily)> {
        if !self.accepts(x, y) {
            return Err(Error::domain(format!(
                "pair ({}, {}) is outside the operator domain",
                self.lattice.element_name(x),
                self.lattice.element_name(y)
            )));
        }
        if let Some((lo, hi)) = self.table.get(&(x, y)) {
            return Ok((lo.clone(), hi.clone()));
        }
        match &self.default {
            TableDefault::None => Err(Error::internal("total table missed a pair")),
            TableDefault::IdentitySingleton => {
                Ok((ElementFamily::singleton(x), ElementFamily::singleton(y)))
            }
            TableDefault::Constant(lo, hi) => Ok((lo.clone(), hi.clone())),
        }
    }
}

/// The non-deterministic operator induced by an approximating operator on
/// exact pairs: `O(x) = lower(x, x)`.
pub struct DerivedOperator<'a> {
    ndao: &'a dyn Ndao,
}

pub fn derived_nd_operator(ndao: &dyn Ndao) -> DerivedOperator<'_> {
    DerivedOperator { ndao }
}

impl DerivedOperator<'_> {
    pub fn apply(&self, x: Element) -> Result<ElementFamily> {
        self.ndao.lower(x, x)
    }

    pub fn lattice(&self) -> &FiniteLattice {
        self.ndao.lattice()
    }
}

/// A property verdict with the first counterexample in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyCheck {
    pub holds: bool,
    pub witness: Option<String>,
}

impl PropertyCheck {
    fn pass() -> PropertyCheck {
        PropertyCheck { holds: true, witness: None }
    }

    fn fail(witness: String) -> PropertyCheck {
        PropertyCheck { holds: false, witness: Some(witness) }
    }
}

/// Exhaustive verification report for an approximating operator.
#[derive(Debug, Clone)]
pub struct PropertyReport {
    pub ai_monotone: PropertyCheck,
    pub exact: PropertyCheck,
    pub symmetric: PropertyCheck,
    pub consistent: PropertyCheck,
    /// Enumeration summary: pairs in the domain and comparisons made.
    pub pairs_checked: u64,
    pub comparisons: u64,
    pub exhaustive: bool,
}

impl PropertyReport {
    pub fn all_hold(&self) -> bool {
        self.ai_monotone.holds && self.exact.holds && self.symmetric.holds && self.consistent.holds
    }
}

/// Exhaustively verifies the defining operator properties over the
/// declared domain. Refuses carriers whose pair count exceeds the guard.
pub fn check_properties(ndao: &dyn Ndao, pair_guard: u64) -> Result<PropertyReport> {
    let lattice = ndao.lattice();
    let n = lattice.carrier_size();
    let total_pairs = n.saturating_mul(n);
    if total_pairs > pair_guard {
        return Err(Error::capacity(format!(
            "{total_pairs} element pairs exceed the property-check guard {pair_guard}"
        )));
    }
    let name = |e: Element| lattice.element_name(e);
    let pair_name =
        |x: Element, y: Element| format!("({}, {})", name(x), name(y));

    let mut pairs: Vec<(Element, Element)> = Vec::new();
    for x in lattice.carrier() {
        for y in lattice.carrier() {
            if ndao.accepts(x, y) {
                pairs.push((x, y));
            }
        }
    }
    let mut outputs: BTreeMap<(Element, Element), (ElementFamily, ElementFamily)> =
        BTreeMap::new();
    for &(x, y) in &pairs {
        let (lo, hi) = ndao.apply(x, y)?;
        if lo.is_empty() || hi.is_empty() {
            return Err(Error::domain(format!(
                "operator returned an empty family at {}; outputs must be non-empty",
                pair_name(x, y)
            )));
        }
        outputs.insert((x, y), (lo, hi));
    }

    // Exactness: lower and upper coincide on exact pairs.
    let mut exact = PropertyCheck::pass();
    for x in lattice.carrier() {
        let (lo, hi) = &outputs[&(x, x)];
        if lo != hi {
            exact = PropertyCheck::fail(format!(
                "at ({0}, {0}) the lower and upper families differ",
                name(x)
            ));
            break;
        }
    }

    // Symmetry: lower(x, y) equals upper(y, x) wherever both sides are in
    // the domain; a consistent-only operator cannot be symmetric unless
    // every domain pair is exact.
    let mut symmetric = PropertyCheck::pass();
    for &(x, y) in &pairs {
        if !ndao.accepts(y, x) {
            symmetric = PropertyCheck::fail(format!(
                "lower{} has no swapped counterpart: ({}, {}) is outside the domain",
                pair_name(x, y),
                name(y),
                name(x)
            ));
            break;
        }
        let (lo, _) = &outputs[&(x, y)];
        let (_, hi_swapped) = &outputs[&(y, x)];
        if lo != hi_swapped {
            symmetric = PropertyCheck::fail(format!(
                "lower{} differs from upper{}",
                pair_name(x, y),
                pair_name(y, x)
            ));
            break;
        }
    }

    // Precision monotonicity, scanning candidate pairs in canonical order.
    let mut ai_monotone = PropertyCheck::pass();
    let mut comparisons = 0u64;
    'outer: for &(x1, y1) in &pairs {
        for &(x2, y2) in &pairs {
            if !(lattice.leq(x1, x2) && lattice.leq(y2, y1)) {
                continue;
            }
            comparisons += 1;
            let (lo1, hi1) = &outputs[&(x1, y1)];
            let (lo2, hi2) = &outputs[&(x2, y2)];
            if !ai_leq(lattice, (lo1, hi1), (lo2, hi2)) {
                ai_monotone = PropertyCheck::fail(format!(
                    "{} <=i {} but the outputs are not precision-ordered",
                    pair_name(x1, y1),
                    pair_name(x2, y2)
                ));
                break 'outer;
            }
        }
    }

    // Consistency: some lower bound below some upper bound on every
    // consistent pair.
    let mut consistent = PropertyCheck::pass();
    for &(x, y) in &pairs {
        if !lattice.leq(x, y) {
            continue;
        }
        let (lo, hi) = &outputs[&(x, y)];
        let ok = lo.iter().any(|w| hi.iter().any(|z| lattice.leq(w, z)));
        if !ok {
            consistent = PropertyCheck::fail(format!(
                "no consistent output pair at {}",
                pair_name(x, y)
            ));
            break;
        }
    }

    Ok(PropertyReport {
        ai_monotone,
        exact,
        symmetric,
        consistent,
        pairs_checked: pairs.len() as u64,
        comparisons,
        exhaustive: true,
    })
}

/// Seeded, non-exhaustive property verification for lattices too large to
/// scan: draws `samples` domain pairs (and pairs of pairs for the
/// monotonicity check) and reports with `exhaustive: false`.
pub fn check_properties_sampled(
    ndao: &dyn Ndao,
    samples: u64,
    seed: u64,
) -> Result<PropertyReport> {
    let lattice = ndao.lattice();
    let size = lattice.carrier_size();
    let mut state = seed ^ 0x6A09E667F3BCC909;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut draw_pair = |ndao: &dyn Ndao| loop {
        let x = Element(next() % size);
        let y = Element(next() % size);
        if ndao.accepts(x, y) {
            return (x, y);
        }
    };
    let name = |e: Element| lattice.element_name(e);

    let mut exact = PropertyCheck::pass();
    let mut symmetric = PropertyCheck::pass();
    let mut consistent = PropertyCheck::pass();
    let mut ai_monotone = PropertyCheck::pass();
    let mut comparisons = 0u64;
    for _ in 0..samples {
        let (x, y) = draw_pair(ndao);
        let (lo, hi) = ndao.apply(x, y)?;
        if exact.holds {
            let (lo_x, hi_x) = ndao.apply(x, x)?;
            if lo_x != hi_x {
                exact = PropertyCheck::fail(format!("families differ at ({0}, {0})", name(x)));
            }
        }
        if symmetric.holds {
            if !ndao.accepts(y, x) {
                symmetric = PropertyCheck::fail(format!(
                    "({}, {}) is outside the domain",
                    name(y),
                    name(x)
                ));
            } else if lo != ndao.upper(y, x)? {
                symmetric = PropertyCheck::fail(format!(
                    "lower({}, {}) differs from upper({}, {})",
                    name(x),
                    name(y),
                    name(y),
                    name(x)
                ));
            }
        }
        if consistent.holds && lattice.leq(x, y) {
            let ok = lo.iter().any(|w| hi.iter().any(|z| lattice.leq(w, z)));
            if !ok {
                consistent =
                    PropertyCheck::fail(format!("no consistent output at ({}, {})", name(x), name(y)));
            }
        }
        if ai_monotone.holds {
            // A comparable partner: tighten the sampled pair.
            let (x2, y2) = draw_pair(ndao);
            let (x2, y2) = (lattice.join(x, x2), lattice.meet(y, y2));
            if ndao.accepts(x2, y2) && lattice.leq(x, x2) && lattice.leq(y2, y) {
                comparisons += 1;
                let (lo2, hi2) = ndao.apply(x2, y2)?;
                if !ai_leq(lattice, (&lo, &hi), (&lo2, &hi2)) {
                    ai_monotone = PropertyCheck::fail(format!(
                        "({}, {}) <=i ({}, {}) but the outputs are not precision-ordered",
                        name(x),
                        name(y),
                        name(x2),
                        name(y2)
                    ));
                }
            }
        }
    }
    Ok(PropertyReport {
        ai_monotone,
        exact,
        symmetric,
        consistent,
        pairs_checked: samples,
        comparisons,
        exhaustive: false,
    })
}

/// Direct precision-monotonicity test of one candidate violation: returns
/// true when `(x1,y1) <=i (x2,y2)` holds but the outputs are not
/// `⪯Ai`-ordered.
pub fn violates_ai_monotonicity(
    ndao: &dyn Ndao,
    first: (Element, Element),
    second: (Element, Element),
) -> Result<bool> {
    let lattice = ndao.lattice();
    if !(lattice.leq(first.0, second.0) && lattice.leq(second.1, first.1)) {
        return Ok(false);
    }
    let (lo1, hi1) = ndao.apply(first.0, first.1)?;
    let (lo2, hi2) = ndao.apply(second.0, second.1)?;
    Ok(!ai_leq(lattice, (&lo1, &hi1), (&lo2, &hi2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::lattice::{family_leq, FamilyOrder};

    fn fam(program: &Program, sets: &[&[&str]]) -> ElementFamily {
        let l = program.lattice();
        sets.iter().map(|s| l.element_from_atoms(s).unwrap()).collect()
    }

    fn el(program: &Program, set: &[&str]) -> Element {
        program.lattice().element_from_atoms(set).unwrap()
    }

    #[test]
    fn hd_and_ic_two_valued() {
        let p1 = fixtures::p1();
        for x in p1.lattice().carrier() {
            let hd = hd_two_valued(&p1, x);
            assert_eq!(hd.heads(), &[el(&p1, &["p", "q"])]);
            let ic = ic_two_valued(&p1, x, 16).unwrap();
            assert_eq!(ic, fam(&p1, &[&["p"], &["q"], &["p", "q"]]));
        }

        let p11 = fixtures::p11();
        let hd = hd_two_valued(&p11, el(&p11, &["r"]));
        assert_eq!(hd.heads().len(), 2);
        assert_eq!(ic_two_valued(&p11, el(&p11, &["r"]), 16).unwrap(), fam(&p11, &[&["p", "r"]]));

        let empty = Program::parse_with_extra_atoms("", &["p"]).unwrap();
        assert!(hd_two_valued(&empty, Element(0)).is_empty());
        assert_eq!(
            ic_two_valued(&empty, Element(0), 16).unwrap(),
            ElementFamily::singleton(Element(0))
        );
    }

    #[test]
    fn hd_bounds_reference_cases() {
        let p10 = fixtures::p10();
        let i = |lo: &[&str], hi: &[&str]| {
            ApproxPair::new(el(&p10, lo), el(&p10, hi))
        };
        let (lo, hi) = hd_bounds(&p10, i(&[], &[]));
        assert_eq!(lo.heads(), &[el(&p10, &["p", "q"])]);
        assert_eq!(hi.heads(), &[el(&p10, &["p", "q"])]);
        let (lo, hi) = hd_bounds(&p10, i(&[], &["q"]));
        assert!(lo.is_empty());
        assert_eq!(hi.heads(), &[el(&p10, &["p", "q"])]);

        let p7 = fixtures::p7();
        let (lo, hi) = hd_bounds(&p7, ApproxPair::new(Element(0), p7.lattice().top()));
        assert_eq!(lo.heads(), &[el(&p7, &["p", "q"])]);
        assert_eq!(hi.heads(), &[el(&p7, &["p", "q"]), el(&p7, &["r", "s"])]);
    }

    #[test]
    fn hd_bounds_symmetry_on_fixtures() {
        for p in fixtures::all_programs() {
            if p.atom_count() > 4 {
                continue;
            }
            let size = 1u64 << p.atom_count();
            for x in 0..size {
                for y in 0..size {
                    let (lo, _) = hd_bounds(&p, ApproxPair::new(Element(x), Element(y)));
                    let (_, hi) = hd_bounds(&p, ApproxPair::new(Element(y), Element(x)));
                    assert_eq!(lo, hi, "hd symmetry failed in {}", p.display());
                }
            }
        }
    }

    #[test]
    fn ic_ndao_reference_cases() {
        let p10 = fixtures::p10();
        let op = IcNdao::new(p10.clone());
        let lo = op.lower(Element(0), el(&p10, &["q"])).unwrap();
        assert_eq!(lo, ElementFamily::singleton(Element(0)));
        let hi = op.upper(Element(0), el(&p10, &["q"])).unwrap();
        assert_eq!(hi, fam(&p10, &[&["p"], &["q"], &["p", "q"]]));
        let lo = op.lower(el(&p10, &["q"]), Element(0)).unwrap();
        assert_eq!(lo, fam(&p10, &[&["p"], &["q"], &["p", "q"]]));
        let hi = op.upper(el(&p10, &["q"]), Element(0)).unwrap();
        assert_eq!(hi, ElementFamily::singleton(Element(0)));

        let p1 = fixtures::p1();
        let op = IcNdao::new(p1.clone());
        for x in p1.lattice().carrier() {
            for y in p1.lattice().carrier() {
                let (lo, hi) = op.apply(x, y).unwrap();
                assert_eq!(lo, fam(&p1, &[&["p"], &["q"], &["p", "q"]]));
                assert_eq!(lo, hi);
            }
        }
    }

    #[test]
    fn ic_membership_fast_path_agrees() {
        let p3 = fixtures::p3();
        let op = IcNdao::new(p3.clone());
        let size = 1u64 << p3.atom_count();
        for x in 0..size {
            for y in 0..size {
                let lo = op.lower(Element(x), Element(y)).unwrap();
                let hi = op.upper(Element(x), Element(y)).unwrap();
                for v in 0..size {
                    assert_eq!(
                        op.lower_contains(Element(x), Element(y), Element(v)).unwrap(),
                        lo.contains(Element(v))
                    );
                    assert_eq!(
                        op.upper_contains(Element(x), Element(y), Element(v)).unwrap(),
                        hi.contains(Element(v))
                    );
                }
            }
        }
    }

    #[test]
    fn ic_min_reference_cases() {
        let p9 = fixtures::p9();
        let op = IcMinNdao::new(p9.clone());
        let abc = p9.lattice().top();
        let ab = el(&p9, &["a", "b"]);
        assert_eq!(op.lower(Element(0), abc).unwrap(), fam(&p9, &[&["a"], &["b"]]));
        assert_eq!(op.lower(abc, Element(0)).unwrap(), fam(&p9, &[&["a"]]));
        assert_eq!(op.lower(ab, Element(0)).unwrap(), fam(&p9, &[&["a"], &["b"]]));
    }

    #[test]
    fn ic_min_is_not_precision_monotone_on_p9() {
        let p9 = fixtures::p9();
        let op = IcMinNdao::new(p9.clone());
        let report = check_properties(&op, 1 << 20).unwrap();
        assert!(!report.ai_monotone.holds);
        assert!(report.ai_monotone.witness.is_some());
        // The documented violation: (∅,{a,b,c}) <=i (∅,{a,b}).
        let witness_pair = (
            (Element(0), p9.lattice().top()),
            (Element(0), el(&p9, &["a", "b"])),
        );
        assert!(violates_ai_monotonicity(&op, witness_pair.0, witness_pair.1).unwrap());
    }

    #[test]
    fn dmt_reference_cases() {
        let p10 = fixtures::p10();
        let op = DmtNdao::new(p10.clone());
        let q = el(&p10, &["q"]);
        // q in y: the interval contains an interpretation deactivating the rule.
        assert_eq!(op.lower(Element(0), q).unwrap(), ElementFamily::singleton(Element(0)));
        // q not in x: the interval contains an interpretation activating it.
        assert_eq!(
            op.upper(Element(0), q).unwrap(),
            fam(&p10, &[&["p"], &["q"], &["p", "q"]])
        );
        assert!(op.lower(q, Element(0)).is_err());

        let p4 = fixtures::p4();
        let op4 = DmtNdao::new(p4.clone());
        assert_eq!(
            op4.lower(Element(0), p4.lattice().top()).unwrap(),
            ElementFamily::singleton(Element(0))
        );
    }

    #[test]
    fn dmt_on_normal_programs_is_the_deterministic_interval_operator() {
        // Direct implementation of the deterministic interval bounds: the
        // atoms whose rules fire in every (lower) or some (upper)
        // two-valued interpretation of [x, y].
        let det_bound = |p: &Program, x: u64, y: u64, every: bool| -> u64 {
            let free = y & !x;
            let mut acc: Option<u64> = None;
            let mut sub = free;
            loop {
                let z = x | sub;
                let mut fired = 0u64;
                for rule in p.rules() {
                    let exact = ApproxPair::new(Element(z), Element(z));
                    if eval_formula(exact, &rule.body) == TruthValue::T {
                        fired |= rule.head.bits();
                    }
                }
                acc = Some(match acc {
                    None => fired,
                    Some(prev) if every => prev & fired,
                    Some(prev) => prev | fired,
                });
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & free;
            }
            acc.unwrap_or(0)
        };
        let mut programs = vec![fixtures::p4(), fixtures::p11()];
        for seed in 0..20u64 {
            programs.push(crate::oracle::random_program(
                &crate::oracle::GenConfig::new(seed).normal(),
            ));
        }
        for p in programs {
            assert!(p.is_normal());
            let op = DmtNdao::new(p.clone());
            let size = 1u64 << p.atom_count();
            for x in 0..size {
                for y in 0..size {
                    if x & !y != 0 {
                        continue;
                    }
                    let lo = op.lower(Element(x), Element(y)).unwrap();
                    let hi = op.upper(Element(x), Element(y)).unwrap();
                    assert_eq!(lo.elements(), &[Element(det_bound(&p, x, y, true))]);
                    assert_eq!(hi.elements(), &[Element(det_bound(&p, x, y, false))]);
                }
            }
        }
    }

    #[test]
    fn dmt_properties_on_p10() {
        let p10 = fixtures::p10();
        let op = DmtNdao::new(p10);
        let report = check_properties(&op, 1 << 20).unwrap();
        assert!(report.ai_monotone.holds);
        assert!(report.exact.holds);
        assert!(report.consistent.holds);
        assert!(!report.symmetric.holds);
    }

    #[test]
    fn ic_ndao_passes_all_properties_on_fixtures() {
        for p in fixtures::all_programs() {
            if p.atom_count() > 4 {
                continue;
            }
            let op = IcNdao::new(p.clone());
            let report = check_properties(&op, 1 << 20).unwrap();
            assert!(report.all_hold(), "IC properties failed on {}", p.display());
            assert!(report.exhaustive);
        }
    }

    #[test]
    fn ic_decomposes_into_onesided_monotonicities() {
        for p in fixtures::all_programs() {
            if p.atom_count() > 3 {
                continue;
            }
            let op = IcNdao::new(p.clone());
            let l = op.lattice().clone();
            let size = l.carrier_size();
            for a in 0..size {
                for b in 0..size {
                    for c in 0..size {
                        let (a, b, c) = (Element(a), Element(b), Element(c));
                        if l.leq(b, c) {
                            // lower(., y) Smyth-monotone; lower(x, .) anti.
                            let lo_b = op.lower(b, a).unwrap();
                            let lo_c = op.lower(c, a).unwrap();
                            assert!(family_leq(&l, &lo_b, &lo_c, FamilyOrder::Smyth));
                            let lo_xb = op.lower(a, b).unwrap();
                            let lo_xc = op.lower(a, c).unwrap();
                            assert!(family_leq(&l, &lo_xc, &lo_xb, FamilyOrder::Smyth));
                            // upper(x, .) Hoare-monotone; upper(., y) anti.
                            let hi_b = op.upper(a, b).unwrap();
                            let hi_c = op.upper(a, c).unwrap();
                            assert!(family_leq(&l, &hi_b, &hi_c, FamilyOrder::Hoare));
                            let hi_yb = op.upper(b, a).unwrap();
                            let hi_yc = op.upper(c, a).unwrap();
                            assert!(family_leq(&l, &hi_yc, &hi_yb, FamilyOrder::Hoare));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn symmetric_operators_are_strongly_consistent() {
        for p in fixtures::all_programs() {
            if p.atom_count() > 4 {
                continue;
            }
            let op = IcNdao::new(p.clone());
            let l = op.lattice().clone();
            for x in l.carrier() {
                for y in l.carrier() {
                    if !l.leq(x, y) {
                        continue;
                    }
                    let (lo, hi) = op.apply(x, y).unwrap();
                    assert!(family_leq(&l, &lo, &hi, FamilyOrder::Smyth));
                    assert!(family_leq(&l, &lo, &hi, FamilyOrder::Hoare));
                }
            }
        }
    }

    #[test]
    fn derived_operator_matches_two_valued_ic() {
        for p in fixtures::all_programs() {
            let op = IcNdao::new(p.clone());
            let derived = derived_nd_operator(&op);
            for x in p.lattice().carrier() {
                assert_eq!(derived.apply(x).unwrap(), ic_two_valued(&p, x, 16).unwrap());
            }
        }
    }

    #[test]
    fn derived_operator_of_a_singleton_table_is_the_underlying_map() {
        let lattice = FiniteLattice::powerset(["p"]).unwrap();
        let mut table = BTreeMap::new();
        // A deterministic map packaged as singleton families: 0 -> {p} -> {p}.
        for x in 0..2u64 {
            for y in 0..2u64 {
                table.insert(
                    (Element(x), Element(y)),
                    (ElementFamily::singleton(Element(1)), ElementFamily::singleton(Element(1))),
                );
            }
        }
        let op = TableNdao::new(lattice, table, TableDefault::None, Domain::AllPairs).unwrap();
        let derived = derived_nd_operator(&op);
        for x in 0..2u64 {
            assert_eq!(derived.apply(Element(x)).unwrap(), ElementFamily::singleton(Element(1)));
        }
    }

    #[test]
    fn exactness_matches_two_valued_ic() {
        for p in fixtures::all_programs() {
            let op = IcNdao::new(p.clone());
            for x in p.lattice().carrier() {
                let lo = op.lower(x, x).unwrap();
                let hi = op.upper(x, x).unwrap();
                let ic = ic_two_valued(&p, x, 16).unwrap();
                assert_eq!(lo, ic);
                assert_eq!(hi, ic);
            }
        }
    }

    #[test]
    fn table_ndao_examples() {
        let (op, names) = fixtures::six_node_ndao();
        let l = op.lattice();
        let xp = l.element_by_name(&names.xp).unwrap();
        let y = l.element_by_name(&names.y).unwrap();
        let (lo, hi) = op.apply(xp, y).unwrap();
        let bot = l.bot();
        let x = l.element_by_name(&names.x).unwrap();
        assert_eq!(lo, ElementFamily::new(vec![bot, x]));
        assert_eq!(hi, ElementFamily::singleton(y));

        let four = fixtures::four_nonsymmetric_ndao();
        let l = four.lattice();
        let u = l.element_by_name("U").unwrap();
        let t = l.element_by_name("T").unwrap();
        let f = l.element_by_name("F").unwrap();
        let (lo, hi) = four.apply(u, t).unwrap();
        assert_eq!(lo, ElementFamily::new(vec![f, t]));
        assert_eq!(hi, ElementFamily::singleton(t));
        // Consistent but not strongly consistent: lower is not below upper
        // in the Hoare order at (U, T).
        let report = check_properties(&four, 1 << 10).unwrap();
        assert!(report.ai_monotone.holds && report.exact.holds && report.consistent.holds);
        assert!(!family_leq(l, &lo, &hi, FamilyOrder::Hoare));

        // Identity table on a trivial lattice.
        let l1 = FiniteLattice::explicit(vec!["only".into()], &[]).unwrap();
        let op = TableNdao::new(l1, BTreeMap::new(), TableDefault::IdentitySingleton, Domain::AllPairs)
            .unwrap();
        let e = op.lattice().bot();
        assert_eq!(op.apply(e, e).unwrap(), (ElementFamily::singleton(e), ElementFamily::singleton(e)));
    }

    #[test]
    fn sampled_property_check_is_flagged_non_exhaustive() {
        let p3 = fixtures::p3();
        let op = IcNdao::new(p3);
        let report = check_properties_sampled(&op, 500, 7).unwrap();
        assert!(!report.exhaustive);
        assert!(report.all_hold());
        // The sampler still finds the minimized operator's violation.
        let p9 = fixtures::p9();
        let op = IcMinNdao::new(p9);
        let report = check_properties_sampled(&op, 2000, 7).unwrap();
        assert!(!report.ai_monotone.holds);
    }

    #[test]
    fn table_rejects_empty_families_and_partial_tables() {
        let l = FiniteLattice::explicit(vec!["a".into(), "b".into()], &[(0, 1)]).unwrap();
        let mut table = BTreeMap::new();
        table.insert(
            (Element(0), Element(0)),
            (ElementFamily::empty(), ElementFamily::singleton(Element(0))),
        );
        assert!(TableNdao::new(l.clone(), table, TableDefault::None, Domain::AllPairs).is_err());
        assert!(TableNdao::new(l, BTreeMap::new(), TableDefault::None, Domain::AllPairs).is_err());
    }
}
