//! Fixpoint-style semantics over approximating operators: plain and
//! Kripke-Kleene fixpoints, complete and stable operators, the derived
//! state operator, Kripke-Kleene and well-founded states, and the
//! well-founded semantics with disjunction.

use crate::error::{Error, Result};
use crate::lattice::{
    ai_leq, extremal_elements, ApproxPair, Direction, Element, ElementFamily, State,
    state_ai_leq,
};
use crate::operators::{Domain, Ndao};
use crate::semantics::gl_reduct;
use crate::syntax::Program;
use crate::{semantics, PairOrder};

/// Default ceiling on carrier size for exhaustive pair scans (16 atoms).
pub const DEFAULT_SCAN_CARRIER: u64 = 1 << 16;

fn check_scan_guard(ndao: &dyn Ndao, guard: u64) -> Result<()> {
    let size = ndao.lattice().carrier_size();
    if size > guard {
        return Err(Error::capacity(format!(
            "carrier of size {size} exceeds the scan guard {guard}"
        )));
    }
    Ok(())
}

/// All pairs `(x, y)` with `x` among the produced lower bounds and `y`
/// among the produced upper bounds of the operator at `(x, y)` itself.
pub fn fixpoints(ndao: &dyn Ndao, consistent_only: bool, guard: u64) -> Result<Vec<ApproxPair>> {
    check_scan_guard(ndao, guard)?;
    let lattice = ndao.lattice();
    let mut out = Vec::new();
    for x in lattice.carrier() {
        for y in lattice.carrier() {
            if consistent_only && !lattice.leq(x, y) {
                continue;
            }
            if !ndao.accepts(x, y) {
                continue;
            }
            if ndao.lower_contains(x, y, x)? && ndao.upper_contains(x, y, y)? {
                out.push(ApproxPair::new(x, y));
            }
        }
    }
    Ok(out)
}

/// The information-minimal fixpoints.
pub fn kk_interpretations(
    ndao: &dyn Ndao,
    consistent_only: bool,
    guard: u64,
) -> Result<Vec<ApproxPair>> {
    let all = fixpoints(ndao, consistent_only, guard)?;
    let lattice = ndao.lattice();
    Ok(all
        .iter()
        .copied()
        .filter(|p| {
            !all.iter().any(|q| {
                q != p && crate::lattice::pair_leq(lattice, *q, *p, PairOrder::Information)
            })
        })
        .collect())
}

/// Which component of the stable operator to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundSide {
    Lower,
    Upper,
}

/// The complete stable operator: the `<=`-minimal fixpoints of the lower
/// operator with the upper argument frozen (or dually). May be empty for
/// table operators.
pub fn complete_bound(
    ndao: &dyn Ndao,
    side: BoundSide,
    fixed: Element,
    guard: u64,
) -> Result<ElementFamily> {
    complete_bound_impl(ndao, side, fixed, guard, false)
}

/// Like [`complete_bound`], but the fixpoint search for the free argument
/// ranges only over elements consistent with the frozen one (`v <= fixed`
/// for the lower side, `fixed <= v` for the upper side). For the lower
/// side this changes nothing beyond dropping members above the frozen
/// bound; for the upper side it keeps minimality from being decided by
/// fixpoints below the frozen lower bound, which no consistent
/// interpretation can reach.
pub fn complete_bound_consistent(
    ndao: &dyn Ndao,
    side: BoundSide,
    fixed: Element,
    guard: u64,
) -> Result<ElementFamily> {
    complete_bound_impl(ndao, side, fixed, guard, true)
}

fn complete_bound_impl(
    ndao: &dyn Ndao,
    side: BoundSide,
    fixed: Element,
    guard: u64,
    consistent_only: bool,
) -> Result<ElementFamily> {
    check_scan_guard(ndao, guard)?;
    let lattice = ndao.lattice();
    let mut fixed_points = Vec::new();
    for v in lattice.carrier() {
        let (x, y) = match side {
            BoundSide::Lower => (v, fixed),
            BoundSide::Upper => (fixed, v),
        };
        if consistent_only && !lattice.leq(x, y) {
            continue;
        }
        if !ndao.accepts(x, y) {
            continue;
        }
        let is_fp = match side {
            BoundSide::Lower => ndao.lower_contains(x, y, v)?,
            BoundSide::Upper => ndao.upper_contains(x, y, v)?,
        };
        if is_fp {
            fixed_points.push(v);
        }
    }
    Ok(extremal_elements(lattice, &ElementFamily::new(fixed_points), Direction::Up))
}

/// One application of the stable operator: minimal lower fixpoints against
/// the current upper bound, minimal upper fixpoints against the current
/// lower bound.
pub fn stable_apply(
    ndao: &dyn Ndao,
    pair: ApproxPair,
    guard: u64,
) -> Result<(ElementFamily, ElementFamily)> {
    Ok((
        complete_bound(ndao, BoundSide::Lower, pair.upper, guard)?,
        complete_bound(ndao, BoundSide::Upper, pair.lower, guard)?,
    ))
}

/// Pairs reproduced by the stable operator.
pub fn stable_fixpoints(
    ndao: &dyn Ndao,
    consistent_only: bool,
    guard: u64,
) -> Result<Vec<ApproxPair>> {
    check_scan_guard(ndao, guard)?;
    let lattice = ndao.lattice();
    let complete_lower: Vec<ElementFamily> = lattice
        .carrier()
        .map(|y| complete_bound(ndao, BoundSide::Lower, y, guard))
        .collect::<Result<_>>()?;
    let complete_upper: Vec<ElementFamily> = lattice
        .carrier()
        .map(|x| complete_bound(ndao, BoundSide::Upper, x, guard))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for x in lattice.carrier() {
        for y in lattice.carrier() {
            if consistent_only && !lattice.leq(x, y) {
                continue;
            }
            if complete_lower[y.bits() as usize].contains(x)
                && complete_upper[x.bits() as usize].contains(y)
            {
                out.push(ApproxPair::new(x, y));
            }
        }
    }
    Ok(out)
}

/// Consistent pairs reproduced by the stable operator when its minimality
/// scans range only over consistent pairs. For the consequence
/// approximation this route characterizes the three-valued stable models
/// exactly; the unrestricted route of [`stable_fixpoints`] can reject a
/// stable model whose upper bound is beaten by a fixpoint below the lower
/// bound, which no consistent interpretation can reach.
pub fn consistent_stable_fixpoints(ndao: &dyn Ndao, guard: u64) -> Result<Vec<ApproxPair>> {
    check_scan_guard(ndao, guard)?;
    let lattice = ndao.lattice();
    let complete_lower: Vec<ElementFamily> = lattice
        .carrier()
        .map(|y| complete_bound_consistent(ndao, BoundSide::Lower, y, guard))
        .collect::<Result<_>>()?;
    let complete_upper: Vec<ElementFamily> = lattice
        .carrier()
        .map(|x| complete_bound_consistent(ndao, BoundSide::Upper, x, guard))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for x in lattice.carrier() {
        for y in lattice.carrier() {
            if !lattice.leq(x, y) {
                continue;
            }
            if complete_lower[y.bits() as usize].contains(x)
                && complete_upper[x.bits() as usize].contains(y)
            {
                out.push(ApproxPair::new(x, y));
            }
        }
    }
    Ok(out)
}

/// One application of the state operator derived from an approximating
/// operator, computed over the generator antichains (sound for
/// precision-monotonic operators). Consistent-only operators skip
/// inconsistent generator pairs; if every generator pair is inconsistent
/// the operation is undefined.
pub fn state_apply(ndao: &dyn Ndao, state: &State) -> Result<State> {
    let lattice = ndao.lattice();
    let mut lower = ElementFamily::empty();
    let mut upper = ElementFamily::empty();
    let mut used = 0usize;
    for x in state.lower_antichain().iter() {
        for y in state.upper_antichain().iter() {
            if !ndao.accepts(x, y) {
                continue;
            }
            used += 1;
            let (lo, hi) = ndao.apply(x, y)?;
            lower = lower.union(&lo);
            upper = upper.union(&hi);
        }
    }
    if used == 0 {
        return Err(Error::domain(
            "state application has no generator pair inside the operator domain",
        ));
    }
    Ok(State::new(lattice, lower, upper))
}

/// A state-iteration trace: successive snapshots from the start state to
/// the fixpoint, with a flag recording whether every step was a precision
/// improvement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterationTrace {
    pub states: Vec<State>,
    pub monotone: bool,
}

impl IterationTrace {
    pub fn fixpoint(&self) -> &State {
        self.states.last().expect("traces hold at least the start state")
    }

    pub fn steps(&self) -> usize {
        self.states.len() - 1
    }
}

fn iterate_states(
    ndao: &dyn Ndao,
    start: State,
    mut step: impl FnMut(&State) -> Result<State>,
) -> Result<(State, IterationTrace)> {
    let lattice = ndao.lattice();
    let max_iters = lattice.carrier_size().saturating_mul(lattice.carrier_size()) + 1;
    let mut states = vec![start];
    let mut monotone = true;
    for _ in 0..max_iters {
        let current = states.last().unwrap();
        let next = step(current)?;
        if &next == current {
            let trace = IterationTrace { states, monotone };
            return Ok((trace.fixpoint().clone(), trace));
        }
        monotone = monotone && state_ai_leq(lattice, current, &next);
        states.push(next);
    }
    Err(Error::internal(format!(
        "state iteration did not converge within {max_iters} steps; the operator is not \
         precision-monotonic"
    )))
}

/// The Kripke-Kleene state: the precision-least fixpoint of the derived
/// state operator, reached by iterating from the least precise state.
pub fn kk_state(ndao: &dyn Ndao) -> Result<(State, IterationTrace)> {
    let start = State::least_precise(ndao.lattice());
    iterate_states(ndao, start, |s| state_apply(ndao, s))
}

/// One application of the state operator derived from the stable
/// operator. The stable operator is not precision-monotonic, so the
/// generator shortcut is unsound here; the defining union ranges over all
/// member pairs of the state, which factorizes into a lower union over
/// down-set members and an upper union over up-set members.
pub fn stable_state_apply(ndao: &dyn Ndao, state: &State, guard: u64) -> Result<State> {
    let lattice = ndao.lattice();
    let ups = state.up_members(lattice)?;
    let downs = state.down_members(lattice)?;
    let consistent_only = matches!(ndao.domain(), Domain::ConsistentOnly);
    let mut lower = ElementFamily::empty();
    let mut used_lower = false;
    for &y in &downs {
        if consistent_only && !ups.iter().any(|&x| lattice.leq(x, y)) {
            continue;
        }
        used_lower = true;
        lower = lower.union(&complete_bound(ndao, BoundSide::Lower, y, guard)?);
    }
    let mut upper = ElementFamily::empty();
    let mut used_upper = false;
    for &x in &ups {
        if consistent_only && !downs.iter().any(|&y| lattice.leq(x, y)) {
            continue;
        }
        used_upper = true;
        upper = upper.union(&complete_bound(ndao, BoundSide::Upper, x, guard)?);
    }
    if !used_lower || !used_upper {
        return Err(Error::domain(
            "stable state application has no member pair inside the operator domain",
        ));
    }
    Ok(State::new(lattice, lower, upper))
}

/// The well-founded state: the Kripke-Kleene state of the stable
/// operator.
pub fn wf_state(ndao: &dyn Ndao, guard: u64) -> Result<(State, IterationTrace)> {
    let start = State::least_precise(ndao.lattice());
    iterate_states(ndao, start, |s| stable_state_apply(ndao, s, guard))
}

/// Minimal two-valued models of the reduct: the reduct-based shortcut for
/// the complete lower stable operator of the consequence approximation.
pub fn ic_complete_fast(program: &Program, upper: Element) -> Result<ElementFamily> {
    let reduct = gl_reduct(program, ApproxPair::new(upper, upper))?;
    let models = semantics::two_valued_models(&reduct)?;
    Ok(extremal_elements(&program.lattice(), &models, Direction::Up))
}

/// Union over `X` of the minimal reduct models, deduplicated but not
/// re-minimized across distinct reducts.
pub fn gamma(program: &Program, family: &ElementFamily) -> Result<ElementFamily> {
    let mut out = ElementFamily::empty();
    for x in family.iter() {
        out = out.union(&ic_complete_fast(program, x)?);
    }
    Ok(out)
}

/// Closed-world filter: drops every member of `X` containing an atom that
/// occurs in no member of `Y`.
pub fn cwa_filter(
    universe: Element,
    x_family: &ElementFamily,
    y_family: &ElementFamily,
) -> ElementFamily {
    let covered = y_family.iter().fold(0u64, |acc, y| acc | y.bits());
    let absent = universe.bits() & !covered;
    x_family.iter().filter(|x| x.bits() & absent == 0).collect()
}

/// One application of the alternating reduct operator: new lower bounds
/// from the reduct models of the upper-bound members, new upper bounds
/// from the reduct models of the closed-world-filtered lower-bound
/// members.
pub fn phi_apply(program: &Program, state: &State) -> Result<State> {
    if !program.is_disjunctively_normal() {
        return Err(Error::domain(
            "the well-founded semantics with disjunction needs a disjunctively normal program",
        ));
    }
    let lattice = program.lattice();
    let ups = ElementFamily::new(state.up_members(&lattice)?);
    let downs = ElementFamily::new(state.down_members(&lattice)?);
    let lower = gamma(program, &downs)?;
    let filtered = cwa_filter(lattice.top(), &ups, &downs);
    let upper = gamma(program, &filtered)?;
    Ok(State::new(&lattice, lower, upper))
}

/// The well-founded semantics with disjunction: the least fixpoint of the
/// alternating reduct operator, iterated from the least precise state.
pub fn wfsd(program: &Program) -> Result<(State, IterationTrace)> {
    if !program.is_disjunctively_normal() {
        return Err(Error::domain(
            "the well-founded semantics with disjunction needs a disjunctively normal program",
        ));
    }
    let lattice = program.lattice();
    let max_iters = lattice.carrier_size().saturating_mul(lattice.carrier_size()) + 1;
    let mut states = vec![State::least_precise(&lattice)];
    let mut monotone = true;
    for _ in 0..max_iters {
        let current = states.last().unwrap();
        let next = phi_apply(program, current)?;
        if &next == current {
            let trace = IterationTrace { states, monotone };
            return Ok((trace.fixpoint().clone(), trace));
        }
        monotone = monotone && state_ai_leq(&lattice, current, &next);
        states.push(next);
    }
    Err(Error::internal(format!(
        "the alternating reduct iteration did not converge within {max_iters} steps"
    )))
}

/// `⪯Ai` between a state and a single pair, for approximation checks.
pub fn state_approximates(ndao: &dyn Ndao, state: &State, pair: ApproxPair) -> bool {
    let lattice = ndao.lattice();
    ai_leq(
        lattice,
        (state.lower_antichain(), state.upper_antichain()),
        (&ElementFamily::singleton(pair.lower), &ElementFamily::singleton(pair.upper)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::lattice::{precision_compare, PrecisionOrdering};
    use crate::operators::{IcNdao, Ndao};
    use crate::syntax::Program;

    const GUARD: u64 = DEFAULT_SCAN_CARRIER;

    fn el(p: &Program, set: &[&str]) -> Element {
        p.lattice().element_from_atoms(set).unwrap()
    }

    fn fam(p: &Program, sets: &[&[&str]]) -> ElementFamily {
        sets.iter().map(|s| el(p, s)).collect()
    }

    fn pair(p: &Program, lower: &[&str], upper: &[&str]) -> ApproxPair {
        ApproxPair::new(el(p, lower), el(p, upper))
    }

    #[test]
    fn fixpoints_of_p2_are_the_six_weakly_supported_pairs() {
        let p2 = fixtures::p2();
        let op = IcNdao::new(p2.clone());
        let fps = fixpoints(&op, true, GUARD).unwrap();
        let expected = vec![
            pair(&p2, &[], &[]),
            pair(&p2, &[], &["q"]),
            pair(&p2, &[], &["p", "q"]),
            pair(&p2, &["q"], &["q"]),
            pair(&p2, &["q"], &["p", "q"]),
            pair(&p2, &["p", "q"], &["p", "q"]),
        ];
        assert_eq!(fps, expected);
    }

    #[test]
    fn exact_fixpoints_of_p5() {
        // Exact fixpoints are the two-valued weakly supported models; for
        // this program there are four of them.
        let p5 = fixtures::p5();
        let op = IcNdao::new(p5.clone());
        let exact: Vec<ApproxPair> = fixpoints(&op, true, GUARD)
            .unwrap()
            .into_iter()
            .filter(|p| p.lower == p.upper)
            .collect();
        let expected = vec![
            pair(&p5, &["p", "q"], &["p", "q"]),
            pair(&p5, &["p", "r"], &["p", "r"]),
            pair(&p5, &["q", "r"], &["q", "r"]),
            pair(&p5, &["p", "q", "r"], &["p", "q", "r"]),
        ];
        assert_eq!(exact, expected);
    }

    #[test]
    fn table_operator_where_every_pair_is_fixed() {
        use crate::lattice::FiniteLattice;
        use crate::operators::{Domain, TableDefault, TableNdao};
        let lattice = FiniteLattice::powerset(["p"]).unwrap();
        let op = TableNdao::new(
            lattice,
            Default::default(),
            TableDefault::IdentitySingleton,
            Domain::AllPairs,
        )
        .unwrap();
        let fps = fixpoints(&op, false, GUARD).unwrap();
        assert_eq!(fps.len(), 4);
    }

    #[test]
    fn kk_interpretations_of_p1_pin_the_brute_force_value() {
        // The minimal consistent fixpoints are ({p},{p,q}) and ({q},{p,q}):
        // both are strictly below the exact pairs in the information order.
        let p1 = fixtures::p1();
        let op = IcNdao::new(p1.clone());
        let kk = kk_interpretations(&op, true, GUARD).unwrap();
        assert_eq!(kk, vec![pair(&p1, &["p"], &["p", "q"]), pair(&p1, &["q"], &["p", "q"])]);
    }

    #[test]
    fn kk_interpretations_of_p4_collapse_to_the_deterministic_fixpoint() {
        // Normal program: the unique information-minimal fixpoint is the
        // deterministic Kripke-Kleene fixpoint.
        let p4 = fixtures::p4();
        let op = IcNdao::new(p4.clone());
        let kk = kk_interpretations(&op, true, GUARD).unwrap();
        assert_eq!(kk, vec![pair(&p4, &[], &["p", "q", "r"])]);
        let det = crate::oracle::det_ic(&p4).unwrap();
        assert_eq!(kk[0], crate::oracle::det_kk(&det));
    }

    #[test]
    fn no_consistent_fixpoint_operator() {
        let op = fixtures::no_consistent_fixpoint_ndao();
        assert!(fixpoints(&op, true, GUARD).unwrap().is_empty());
        assert!(kk_interpretations(&op, true, GUARD).unwrap().is_empty());
    }

    #[test]
    fn complete_bounds_match_reference_values() {
        let p1 = fixtures::p1();
        let op = IcNdao::new(p1.clone());
        for y in p1.lattice().carrier() {
            let c = complete_bound(&op, BoundSide::Lower, y, GUARD).unwrap();
            assert_eq!(c, fam(&p1, &[&["p"], &["q"]]));
        }

        let p5 = fixtures::p5();
        let op5 = IcNdao::new(p5.clone());
        let cases: &[(&[&str], &[&[&str]])] = &[
            (&[], &[&["p", "q", "r"]]),
            (&["p"], &[&["p", "q"]]),
            (&["p", "q"], &[&["q"]]),
            (&["p", "q", "r"], &[&["p"], &["q"], &["r"]]),
        ];
        for (y, expected) in cases {
            let c = complete_bound(&op5, BoundSide::Lower, el(&p5, y), GUARD).unwrap();
            assert_eq!(c, fam(&p5, expected), "complete lower bound at {y:?}");
        }
    }

    #[test]
    fn complete_bound_may_be_empty_for_table_operators() {
        // Never happens for the consequence approximation on a finite
        // lattice, but a table operator can starve the fixpoint search.
        let op = fixtures::no_consistent_fixpoint_ndao();
        let l = op.lattice().clone();
        let p_elem = l.element_by_name("{p}").unwrap();
        assert!(complete_bound(&op, BoundSide::Lower, p_elem, GUARD).unwrap().is_empty());
    }

    #[test]
    fn stable_apply_reference_cases() {
        let p = Program::parse("p;q. p :- not r.").unwrap();
        let op = IcNdao::new(p.clone());
        let (lo, hi) = stable_apply(&op, pair(&p, &[], &["r"]), GUARD).unwrap();
        assert_eq!(lo, fam(&p, &[&["p"], &["q"]]));
        assert_eq!(hi, fam(&p, &[&["p"]]));
        let (lo, hi) = stable_apply(&op, pair(&p, &["r"], &["r"]), GUARD).unwrap();
        assert_eq!(lo, fam(&p, &[&["p"], &["q"]]));
        assert_eq!(hi, fam(&p, &[&["p"], &["q"]]));

        let p1 = fixtures::p1();
        let op1 = IcNdao::new(p1.clone());
        for x in p1.lattice().carrier() {
            for y in p1.lattice().carrier() {
                let (lo, hi) = stable_apply(&op1, ApproxPair::new(x, y), GUARD).unwrap();
                assert_eq!(lo, fam(&p1, &[&["p"], &["q"]]));
                assert_eq!(hi, fam(&p1, &[&["p"], &["q"]]));
            }
        }
    }

    #[test]
    fn stable_fixpoints_reference_cases() {
        let p1 = fixtures::p1();
        let op1 = IcNdao::new(p1.clone());
        assert_eq!(
            stable_fixpoints(&op1, true, GUARD).unwrap(),
            vec![pair(&p1, &["p"], &["p"]), pair(&p1, &["q"], &["q"])]
        );

        let p5 = fixtures::p5();
        assert!(stable_fixpoints(&IcNdao::new(p5), true, GUARD).unwrap().is_empty());

        let p4 = fixtures::p4();
        let op4 = IcNdao::new(p4.clone());
        assert_eq!(
            stable_fixpoints(&op4, true, GUARD).unwrap(),
            vec![
                pair(&p4, &[], &["p", "q"]),
                pair(&p4, &["p"], &["p"]),
                pair(&p4, &["q"], &["q"]),
            ]
        );
    }

    #[test]
    fn inconsistent_stable_fixpoints_appear_in_unrestricted_mode() {
        let p1 = fixtures::p1();
        let op = IcNdao::new(p1.clone());
        let all = stable_fixpoints(&op, false, GUARD).unwrap();
        assert!(all.contains(&pair(&p1, &["p"], &["q"])));
        assert!(all.contains(&pair(&p1, &["q"], &["p"])));
    }

    #[test]
    fn state_apply_reference_cases() {
        let p1 = fixtures::p1();
        let op = IcNdao::new(p1.clone());
        let start = State::least_precise(op.lattice());
        let next = state_apply(&op, &start).unwrap();
        assert_eq!(next.lower_antichain(), &fam(&p1, &[&["p"], &["q"]]));
        assert_eq!(next.upper_antichain(), &fam(&p1, &[&["p", "q"]]));
        // A fixpoint state maps to itself.
        assert_eq!(state_apply(&op, &next).unwrap(), next);

        // The upper family at the least precise state of this program
        // contains the full atom set (it hits both activated heads), so
        // the canonical upper antichain is {{p,q,r,s}}.
        let p7 = fixtures::p7();
        let op7 = IcNdao::new(p7.clone());
        let next = state_apply(&op7, &State::least_precise(op7.lattice())).unwrap();
        assert_eq!(next.lower_antichain(), &fam(&p7, &[&["p"], &["q"]]));
        assert_eq!(next.upper_antichain(), &fam(&p7, &[&["p", "q", "r", "s"]]));
    }

    #[test]
    fn kk_state_convex_sets() {
        let p1 = fixtures::p1();
        let op = IcNdao::new(p1.clone());
        let (state, trace) = kk_state(&op).unwrap();
        let members = op.lattice().convex_members(&state).unwrap();
        assert_eq!(members, fam(&p1, &[&["p"], &["q"], &["p", "q"]]));
        assert!(trace.monotone);

        let p6 = fixtures::p6();
        let op6 = IcNdao::new(p6.clone());
        let (state, _) = kk_state(&op6).unwrap();
        assert_eq!(op6.lattice().convex_members(&state).unwrap().len(), 16);

        // The four minimal hitting sets of the upper head family are not
        // its only members: the full atom set hits every head too, so the
        // canonical Kripke-Kleene upper half is generated by {p,q,r,s}
        // and the convex set has 12 members, not 6.
        let p7 = fixtures::p7();
        let op7 = IcNdao::new(p7.clone());
        let (state, _) = kk_state(&op7).unwrap();
        assert_eq!(state.lower_antichain(), &fam(&p7, &[&["p"], &["q"]]));
        assert_eq!(state.upper_antichain(), &fam(&p7, &[&["p", "q", "r", "s"]]));
        assert_eq!(op7.lattice().convex_members(&state).unwrap().len(), 12);
    }

    #[test]
    fn kk_state_trace_is_strictly_increasing() {
        for p in fixtures::all_programs() {
            let op = IcNdao::new(p.clone());
            let (_, trace) = kk_state(&op).unwrap();
            assert!(trace.monotone, "trace not monotone for {}", p.display());
            let l = op.lattice();
            for w in trace.states.windows(2) {
                assert!(state_ai_leq(l, &w[0], &w[1]));
                assert_ne!(w[0], w[1]);
            }
        }
    }

    #[test]
    fn kk_state_is_minimal_among_state_fixpoints_on_two_atoms() {
        // Exhaustive state search over the two-atom programs: the
        // Kripke-Kleene state is precision-below every fixpoint of the
        // derived state operator.
        for p in [fixtures::p1(), fixtures::p2(), fixtures::p10()] {
            let op = IcNdao::new(p.clone());
            let l = op.lattice().clone();
            let (kk, _) = kk_state(&op).unwrap();
            let antichains: Vec<ElementFamily> = (1u16..16)
                .map(|mask| {
                    ElementFamily::new(
                        (0..4).filter(|i| mask >> i & 1 == 1).map(|i| Element(i as u64)).collect(),
                    )
                })
                .filter(|f| extremal_elements(&l, f, Direction::Up) == *f)
                .collect();
            for lo in &antichains {
                for hi in &antichains {
                    let s = State::new(&l, lo.clone(), hi.clone());
                    if state_apply(&op, &s).unwrap() == s {
                        assert!(
                            state_ai_leq(&l, &kk, &s),
                            "kk state is not below a state fixpoint of {}",
                            p.display()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn kk_state_approximates_every_fixpoint() {
        for p in fixtures::all_programs() {
            let op = IcNdao::new(p.clone());
            let (state, _) = kk_state(&op).unwrap();
            for fp in fixpoints(&op, false, GUARD).unwrap() {
                assert!(
                    state_approximates(&op, &state, fp),
                    "kk state misses fixpoint in {}",
                    p.display()
                );
            }
            // At least one consistent pair lies inside the state.
            let l = op.lattice();
            let has_consistent = state
                .lower_antichain()
                .iter()
                .any(|x| state.upper_antichain().iter().any(|y| l.leq(x, y)));
            assert!(has_consistent);
        }
    }

    #[test]
    fn wf_state_reference_cases() {
        let p5 = fixtures::p5();
        let op5 = IcNdao::new(p5.clone());
        let (state, _) = wf_state(&op5, GUARD).unwrap();
        assert_eq!(state.lower_antichain(), &fam(&p5, &[&["p"], &["q"], &["r"]]));
        assert_eq!(state.upper_antichain(), &fam(&p5, &[&["p", "q"], &["p", "r"], &["q", "r"]]));
        let members = op5.lattice().convex_members(&state).unwrap();
        assert_eq!(
            members,
            fam(&p5, &[&["p"], &["q"], &["r"], &["p", "q"], &["p", "r"], &["q", "r"]])
        );

        let p6 = fixtures::p6();
        let op6 = IcNdao::new(p6.clone());
        let (state, _) = wf_state(&op6, GUARD).unwrap();
        assert_eq!(state.lower_antichain(), &fam(&p6, &[&["p"], &["q"]]));
        assert_eq!(state.upper_antichain(), &fam(&p6, &[&["p"], &["q"]]));

        let p8 = fixtures::p8();
        let op8 = IcNdao::new(p8.clone());
        let (state, _) = wf_state(&op8, GUARD).unwrap();
        assert_eq!(state.lower_antichain(), &fam(&p8, &[&["q"]]));
        assert_eq!(state.upper_antichain(), &fam(&p8, &[&["p"], &["q"]]));
    }

    #[test]
    fn wf_trace_is_strictly_increasing() {
        for p in fixtures::all_programs() {
            let op = IcNdao::new(p.clone());
            let (_, trace) = wf_state(&op, GUARD).unwrap();
            assert!(trace.monotone);
            for w in trace.states.windows(2) {
                assert!(state_ai_leq(op.lattice(), &w[0], &w[1]));
                assert_ne!(w[0], w[1]);
            }
        }
    }

    #[test]
    fn wf_is_at_least_as_precise_as_kk() {
        for p in fixtures::all_programs() {
            let op = IcNdao::new(p.clone());
            let (kk, _) = kk_state(&op).unwrap();
            let (wf, _) = wf_state(&op, GUARD).unwrap();
            assert!(state_ai_leq(op.lattice(), &kk, &wf), "kk !<= wf for {}", p.display());
        }
    }

    #[test]
    fn wf_approximates_every_stable_fixpoint() {
        for p in fixtures::all_programs() {
            let op = IcNdao::new(p.clone());
            let (wf, _) = wf_state(&op, GUARD).unwrap();
            for fp in stable_fixpoints(&op, true, GUARD).unwrap() {
                assert!(
                    state_approximates(&op, &wf, fp),
                    "wf state misses stable fixpoint in {}",
                    p.display()
                );
            }
        }
    }

    #[test]
    fn six_node_stable_fixpoint_is_not_truth_minimal() {
        let (op, names) = fixtures::six_node_ndao();
        let l = op.lattice().clone();
        let x = l.element_by_name(&names.x).unwrap();
        let y = l.element_by_name(&names.y).unwrap();
        let xp = l.element_by_name(&names.xp).unwrap();
        let yp = l.element_by_name(&names.yp).unwrap();
        let stable = stable_fixpoints(&op, false, GUARD).unwrap();
        assert!(stable.contains(&ApproxPair::new(x, y)));
        let fps = fixpoints(&op, false, GUARD).unwrap();
        let smaller = ApproxPair::new(xp, yp);
        assert!(fps.contains(&smaller));
        assert!(l.leq(xp, x) && l.leq(yp, y));
        assert_ne!(smaller, ApproxPair::new(x, y));
    }

    #[test]
    fn ic_complete_fast_matches_complete_bound() {
        for p in fixtures::all_programs() {
            let op = IcNdao::new(p.clone());
            for y in p.lattice().carrier() {
                let fast = ic_complete_fast(&p, y).unwrap();
                let slow = complete_bound(&op, BoundSide::Lower, y, GUARD).unwrap();
                assert_eq!(fast, slow, "reduct shortcut diverges on {}", p.display());
            }
        }
    }

    #[test]
    fn ic_complete_fast_reference_values() {
        let p5 = fixtures::p5();
        assert_eq!(ic_complete_fast(&p5, Element(0)).unwrap(), fam(&p5, &[&["p", "q", "r"]]));
        let p8 = fixtures::p8();
        assert_eq!(ic_complete_fast(&p8, el(&p8, &["p"])).unwrap(), fam(&p8, &[&["q"]]));
        // Positive programs: the reduct is the program itself.
        let pos = Program::parse("a;b. c :- a.").unwrap();
        for y in pos.lattice().carrier() {
            assert_eq!(
                ic_complete_fast(&pos, y).unwrap(),
                extremal_elements(
                    &pos.lattice(),
                    &semantics::two_valued_models(&pos).unwrap(),
                    Direction::Up
                )
            );
        }
    }

    #[test]
    fn gamma_and_cwa_filter() {
        let p8 = fixtures::p8();
        assert_eq!(gamma(&p8, &fam(&p8, &[&["p"]])).unwrap(), fam(&p8, &[&["q"]]));
        assert_eq!(
            gamma(&p8, &fam(&p8, &[&[], &["p"], &["q"]])).unwrap(),
            fam(&p8, &[&["q"]])
        );

        let universe = Element(0b111);
        let y = ElementFamily::new(vec![Element(0b001), Element(0b010)]);
        let x = ElementFamily::new(vec![Element(0b001), Element(0b010), Element(0b101)]);
        assert_eq!(
            cwa_filter(universe, &x, &y),
            ElementFamily::new(vec![Element(0b001), Element(0b010)])
        );
        // Upper bounds covering the universe filter nothing.
        let y_full = ElementFamily::singleton(universe);
        assert_eq!(cwa_filter(universe, &x, &y_full), x);
        assert_eq!(cwa_filter(universe, &ElementFamily::empty(), &y), ElementFamily::empty());
    }

    #[test]
    fn wfsd_reference_cases() {
        let p8 = fixtures::p8();
        let (state, _) = wfsd(&p8).unwrap();
        assert_eq!(state.lower_antichain(), &fam(&p8, &[&["q"]]));
        assert_eq!(state.upper_antichain(), &fam(&p8, &[&["q"]]));

        // For this program the alternating reduct iteration agrees with
        // the well-founded state.
        let p5 = fixtures::p5();
        let op5 = IcNdao::new(p5.clone());
        let (wf, _) = wf_state(&op5, GUARD).unwrap();
        let (phi, _) = wfsd(&p5).unwrap();
        assert_eq!(wf, phi);

        // Positive programs: both halves are the minimal models.
        let pos = Program::parse("a;b. c :- a.").unwrap();
        let (state, _) = wfsd(&pos).unwrap();
        let min_models = extremal_elements(
            &pos.lattice(),
            &semantics::two_valued_models(&pos).unwrap(),
            Direction::Up,
        );
        assert_eq!(state.lower_antichain(), &min_models);
        assert_eq!(state.upper_antichain(), &min_models);
    }

    #[test]
    fn wf_approximates_wfsd() {
        for p in fixtures::all_programs() {
            let op = IcNdao::new(p.clone());
            let (wf, _) = wf_state(&op, GUARD).unwrap();
            let (phi, _) = wfsd(&p).unwrap();
            assert!(
                state_ai_leq(op.lattice(), &wf, &phi),
                "wf !<= wfsd for {}",
                p.display()
            );
        }
    }

    #[test]
    fn precision_compare_on_p8() {
        let p8 = fixtures::p8();
        let op = IcNdao::new(p8.clone());
        let (wf, _) = wf_state(&op, GUARD).unwrap();
        let (phi, _) = wfsd(&p8).unwrap();
        assert_eq!(precision_compare(op.lattice(), &wf, &phi), PrecisionOrdering::Less);
    }

    #[test]
    fn dmt_state_semantics_runs_on_consistent_domain() {
        let p10 = fixtures::p10();
        let op = crate::operators::DmtNdao::new(p10.clone());
        let (kk, _) = kk_state(&op).unwrap();
        // Both settled stable fixpoints of the program lie inside.
        for fp in stable_fixpoints(&op, true, GUARD).unwrap() {
            assert!(state_approximates(&op, &kk, fp));
        }
        let (wf, _) = wf_state(&op, GUARD).unwrap();
        assert!(state_ai_leq(op.lattice(), &kk, &wf));
    }
}
