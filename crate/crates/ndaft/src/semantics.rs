//! Four-valued evaluation and the definition-level semantic predicates:
//! models, weakly supported and supported models, two-valued models,
//! the GL-reduct and three-valued stable models.

use crate::error::{Error, Result};
use crate::four::TruthValue;
use crate::lattice::{ApproxPair, Element, ElementFamily};
use crate::syntax::{Formula, Program, Rule};

/// Default atom-count guard for operations that enumerate interpretation
/// pairs exhaustively. Overridable per call site; the CLI reads
/// `NDAFT_GUARD_ATOMS`.
pub const DEFAULT_ATOM_GUARD: usize = 16;

/// A four-valued interpretation of a program: the pair `(x, y)` of atoms
/// that are at least contradictory and at least undecided, respectively.
pub type Interpretation = ApproxPair;

/// Evaluates a formula under `(x, y)`. Constants evaluate to themselves;
/// an atom is T/U/F/C according to its membership in `x` and `y`.
pub fn eval_formula(i: Interpretation, f: &Formula) -> TruthValue {
    match f {
        Formula::Atom(a) => {
            TruthValue::from_bounds(i.lower.contains_bit(*a as usize), i.upper.contains_bit(*a as usize))
        }
        Formula::Const(c) => *c,
        Formula::Not(g) => eval_formula(i, g).neg(),
        Formula::And(a, b) => eval_formula(i, a).and(eval_formula(i, b)),
        Formula::Or(a, b) => eval_formula(i, a).or(eval_formula(i, b)),
    }
}

/// Evaluates a rule head as the disjunction of its atoms.
pub fn eval_head(i: Interpretation, head: Element) -> TruthValue {
    let mut acc = TruthValue::F;
    let mut bits = head.bits();
    while bits != 0 {
        let a = bits.trailing_zeros();
        bits &= bits - 1;
        acc = acc.or(eval_formula(i, &Formula::Atom(a)));
    }
    acc
}

fn require_consistent(program: &Program, i: Interpretation, what: &str) -> Result<()> {
    if i.lower.bits() & !i.upper.bits() != 0 {
        return Err(Error::domain(format!(
            "{what} is defined for consistent interpretations only; got ({}, {})",
            program.lattice().element_name(i.lower),
            program.lattice().element_name(i.upper),
        )));
    }
    Ok(())
}

/// Three-valued model check: every rule's head evaluates at least as true
/// as its body. Inconsistent interpretations are rejected unless
/// `allow_inconsistent` is set.
pub fn is_model(i: Interpretation, program: &Program, allow_inconsistent: bool) -> Result<bool> {
    if !allow_inconsistent {
        require_consistent(program, i, "the model relation")?;
    }
    Ok(program
        .rules()
        .iter()
        .all(|r| eval_formula(i, &r.body).truth_leq(eval_head(i, r.head))))
}

/// Weakly supported model: a model where every atom of the upper bound is
/// covered by a rule whose body is at least as true as the atom.
pub fn is_weakly_supported(i: Interpretation, program: &Program) -> Result<bool> {
    require_consistent(program, i, "weak supportedness")?;
    if !is_model(i, program, false)? {
        return Ok(false);
    }
    let mut bits = i.upper.bits();
    while bits != 0 {
        let a = bits.trailing_zeros();
        bits &= bits - 1;
        let value = eval_formula(i, &Formula::Atom(a));
        let supported = program.rules().iter().any(|r| {
            r.head.contains_bit(a as usize) && value.truth_leq(eval_formula(i, &r.body))
        });
        if !supported {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Supported model: a model where every non-false atom is the unique
/// contribution of some activating rule. A true atom needs a rule with a
/// true body in which it is the only true head atom; every atom of the
/// upper bound (true or undecided) additionally needs a rule with an
/// at-least-undecided body in which it is the only head atom inside the
/// upper bound. The second clause applies to true atoms as well: without
/// it a true atom could keep an undecided companion alive through a
/// shared head, and supported models would not coincide with the
/// componentwise inclusion-minimal fixpoints of the consequence
/// approximation.
pub fn is_supported(i: Interpretation, program: &Program) -> Result<bool> {
    require_consistent(program, i, "supportedness")?;
    if !is_model(i, program, false)? {
        return Ok(false);
    }
    for a in 0..program.atom_count() as u32 {
        if i.lower.contains_bit(a as usize) {
            // Value T: a privately supporting rule within the lower bound.
            let ok = program.rules().iter().any(|r| {
                r.head.contains_bit(a as usize)
                    && eval_formula(i, &r.body) == TruthValue::T
                    && r.head.bits() & i.lower.bits() == 1 << a
            });
            if !ok {
                return Ok(false);
            }
        }
        if i.upper.contains_bit(a as usize) {
            // Value T or U: a privately supporting rule within the upper
            // bound, with a body that is at least undecided.
            let ok = program.rules().iter().any(|r| {
                let body = eval_formula(i, &r.body);
                r.head.contains_bit(a as usize)
                    && (body == TruthValue::T || body == TruthValue::U)
                    && r.head.bits() & i.upper.bits() == 1 << a
            });
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Two-valued models of a negation-free program (truth constants are
/// admitted in bodies): every `x` whose true-body rules all have their
/// heads hit by `x`.
pub fn two_valued_models(program: &Program) -> Result<ElementFamily> {
    if !program.rules().iter().all(|r| r.body.is_negation_free()) {
        return Err(Error::domain(
            "two-valued models are defined for negation-free programs; apply a reduct first",
        ));
    }
    let n = program.atom_count();
    let mut models = Vec::new();
    for bits in 0..1u64 << n {
        let x = Element(bits);
        let exact = ApproxPair::new(x, x);
        let is_model = program.rules().iter().all(|r| {
            eval_formula(exact, &r.body) != TruthValue::T || r.head.bits() & bits != 0
        });
        if is_model {
            models.push(x);
        }
    }
    Ok(ElementFamily::new(models))
}

/// The GL-transformation: replaces every negated body literal by the
/// truth constant it denotes under `i`; positive literals stay symbolic.
pub fn gl_reduct(program: &Program, i: Interpretation) -> Result<Program> {
    require_consistent(program, i, "the GL-reduct")?;
    let mut rules = Vec::with_capacity(program.rules().len());
    for (idx, rule) in program.rules().iter().enumerate() {
        if !rule.is_disjunctively_normal() {
            return Err(Error::domain(format!(
                "the GL-reduct needs disjunctively normal rules; rule {} is `{}`",
                idx + 1,
                rule.display(program.atoms())
            )));
        }
        rules.push(Rule { head: rule.head, body: reduce_body(&rule.body, i) });
    }
    Program::from_rules(program.atoms().to_vec(), rules)
}

fn reduce_body(body: &Formula, i: Interpretation) -> Formula {
    match body {
        Formula::And(a, b) => Formula::and(reduce_body(a, i), reduce_body(b, i)),
        Formula::Not(_) => Formula::Const(eval_formula(i, body)),
        other => other.clone(),
    }
}

/// Three-valued stable model: a model of its own GL-reduct that is
/// truth-minimal among the consistent models of that reduct.
pub fn is_three_valued_stable(i: Interpretation, program: &Program) -> Result<bool> {
    require_consistent(program, i, "stability")?;
    let reduct = gl_reduct(program, i)?;
    if !is_model(i, &reduct, false)? {
        return Ok(false);
    }
    for other in enumerate_interpretations(program, true, DEFAULT_ATOM_GUARD)? {
        if other != i
            && other.lower.subset_of(i.lower)
            && other.upper.subset_of(i.upper)
            && is_model(other, &reduct, false)?
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All interpretation pairs over the program universe in deterministic
/// (lower bits, upper bits) order, optionally restricted to consistent
/// ones.
pub fn enumerate_interpretations(
    program: &Program,
    consistent_only: bool,
    atom_guard: usize,
) -> Result<Vec<Interpretation>> {
    let n = program.atom_count();
    if n > atom_guard {
        return Err(Error::capacity(format!(
            "program has {n} atoms, exceeding the enumeration guard {atom_guard}"
        )));
    }
    let size = 1u64 << n;
    let mut out = Vec::new();
    for x in 0..size {
        for y in 0..size {
            if consistent_only && x & !y != 0 {
                continue;
            }
            out.push(ApproxPair::new(Element(x), Element(y)));
        }
    }
    Ok(out)
}

/// Convenience constructors for interpretations given by atom names.
pub fn interpretation(program: &Program, lower: &[&str], upper: &[&str]) -> Result<Interpretation> {
    let lattice = program.lattice();
    Ok(ApproxPair::new(lattice.element_from_atoms(lower)?, lattice.element_from_atoms(upper)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::four::TruthValue::{C, F, T, U};
    use crate::fixtures;

    fn interp(p: &Program, lower: &[&str], upper: &[&str]) -> Interpretation {
        interpretation(p, lower, upper).unwrap()
    }

    #[test]
    fn eval_matches_reference_cases() {
        let p = Program::parse("p :- not q. q :- not p. r :- r.").unwrap();
        let i = interp(&p, &[], &["p", "q", "r"]);
        let not_q = Formula::not(Formula::Atom(1));
        assert_eq!(eval_formula(i, &not_q), U);
        let j = interp(&p, &["p", "q", "r"], &[]);
        assert_eq!(eval_formula(j, &not_q), C);

        let p2 = Program::parse_with_extra_atoms("q.", &["p", "r"]).unwrap();
        let k = interp(&p2, &["q"], &["p", "q"]);
        let q_or_r = Formula::or(Formula::Atom(1), Formula::Atom(2));
        assert_eq!(eval_formula(k, &q_or_r), T);
    }

    #[test]
    fn exact_pairs_evaluate_classically() {
        let p = Program::parse("p :- q, not (r | s).").unwrap();
        let lattice = p.lattice();
        for bits in 0..1u64 << p.atom_count() {
            let i = ApproxPair::new(Element(bits), Element(bits));
            for rule in p.rules() {
                let v = eval_formula(i, &rule.body);
                assert!(v == T || v == F);
            }
            let _ = lattice;
        }
    }

    #[test]
    fn consistent_pairs_never_yield_contradiction() {
        let p = fixtures::p3();
        for i in enumerate_interpretations(&p, true, 16).unwrap() {
            for rule in p.rules() {
                assert_ne!(eval_formula(i, &rule.body), C);
            }
        }
    }

    #[test]
    fn model_checks_on_p3() {
        let p = fixtures::p3();
        assert!(!is_model(interp(&p, &[], &["p", "q", "r"]), &p, false).unwrap());
        assert!(is_model(interp(&p, &["q"], &["p", "q"]), &p, false).unwrap());
        let empty = Program::parse_with_extra_atoms("", &["p"]).unwrap();
        for i in enumerate_interpretations(&empty, true, 16).unwrap() {
            assert!(is_model(i, &empty, false).unwrap());
        }
    }

    #[test]
    fn weakly_supported_on_p3_and_p2() {
        let p3 = fixtures::p3();
        assert!(is_weakly_supported(interp(&p3, &["q"], &["p", "q"]), &p3).unwrap());
        assert!(!is_weakly_supported(interp(&p3, &["p", "q", "r"], &["p", "q", "r"]), &p3).unwrap());
        let p2 = fixtures::p2();
        assert!(is_weakly_supported(interp(&p2, &[], &[]), &p2).unwrap());
    }

    #[test]
    fn supported_on_p2() {
        let p2 = fixtures::p2();
        assert!(is_supported(interp(&p2, &["q"], &["q"]), &p2).unwrap());
        assert!(!is_supported(interp(&p2, &["p", "q"], &["p", "q"]), &p2).unwrap());
        assert!(!is_supported(interp(&p2, &["q"], &["p", "q"]), &p2).unwrap());
        // The documented borderline case: weakly supported but not supported.
        assert!(is_weakly_supported(interp(&p2, &["p", "q"], &["p", "q"]), &p2).unwrap());
    }

    #[test]
    fn supported_implies_weakly_supported_implies_model() {
        for p in fixtures::all_programs() {
            for i in enumerate_interpretations(&p, true, 16).unwrap() {
                let m = is_model(i, &p, false).unwrap();
                let w = is_weakly_supported(i, &p).unwrap();
                let s = is_supported(i, &p).unwrap();
                assert!(!s || w, "supported but not weakly supported in {}", p.display());
                assert!(!w || m, "weakly supported but not a model in {}", p.display());
            }
        }
    }

    #[test]
    fn two_valued_model_sets() {
        let p1 = fixtures::p1();
        let l = p1.lattice();
        let fam = two_valued_models(&p1).unwrap();
        let expected: ElementFamily = [&["p"][..], &["q"][..], &["p", "q"][..]]
            .iter()
            .map(|s| l.element_from_atoms(s).unwrap())
            .collect();
        assert_eq!(fam, expected);

        let reduct = Program::parse("p;q. q.").unwrap();
        let fam = two_valued_models(&reduct).unwrap();
        let l = reduct.lattice();
        let expected: ElementFamily = [&["q"][..], &["p", "q"][..]]
            .iter()
            .map(|s| l.element_from_atoms(s).unwrap())
            .collect();
        assert_eq!(fam, expected);

        let empty = Program::parse_with_extra_atoms("", &["p"]).unwrap();
        assert_eq!(two_valued_models(&empty).unwrap().len(), 2);

        assert!(two_valued_models(&fixtures::p3()).is_err());
    }

    #[test]
    fn reduct_of_p3() {
        let p3 = fixtures::p3();
        let i = interp(&p3, &["q"], &["p", "q"]);
        let reduct = gl_reduct(&p3, i).unwrap();
        let bodies: Vec<Formula> = reduct.rules().iter().map(|r| r.body.clone()).collect();
        assert_eq!(bodies[0], Formula::Const(U));
        assert_eq!(bodies[1], Formula::Const(T));
        assert_eq!(bodies[2], Formula::Const(F));
        assert_eq!(bodies[3], Formula::Const(T));
    }

    #[test]
    fn reduct_keeps_positive_literals() {
        let p6 = fixtures::p6();
        let i = interp(&p6, &[], &[]);
        let reduct = gl_reduct(&p6, i).unwrap();
        // p;q :- not s  becomes  p;q :- #true; the positive rules survive.
        assert_eq!(reduct.rules()[0].body, Formula::Const(T));
        assert!(matches!(reduct.rules()[1].body, Formula::Atom(_)));
        assert!(matches!(reduct.rules()[2].body, Formula::Atom(_)));

        let p2 = fixtures::p2();
        for i in enumerate_interpretations(&p2, true, 16).unwrap() {
            assert_eq!(gl_reduct(&p2, i).unwrap(), p2);
        }
    }

    #[test]
    fn reduct_rejects_non_disjunctively_normal() {
        let p = Program::parse("p :- not (q | r).").unwrap();
        let i = interp(&p, &[], &[]);
        let err = gl_reduct(&p, i).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
    }

    #[test]
    fn stability_reference_cases() {
        let p3 = fixtures::p3();
        assert!(is_three_valued_stable(interp(&p3, &["q"], &["p", "q"]), &p3).unwrap());
        let p2 = fixtures::p2();
        assert!(is_three_valued_stable(interp(&p2, &[], &[]), &p2).unwrap());
        assert!(!is_three_valued_stable(interp(&p2, &["q"], &["q"]), &p2).unwrap());
        let p4 = fixtures::p4();
        assert!(is_three_valued_stable(interp(&p4, &[], &["p", "q"]), &p4).unwrap());
    }

    #[test]
    fn enumeration_counts() {
        let p = Program::parse_with_extra_atoms("", &["p"]).unwrap();
        let consistent = enumerate_interpretations(&p, true, 16).unwrap();
        assert_eq!(consistent.len(), 3);
        assert_eq!(enumerate_interpretations(&p, false, 16).unwrap().len(), 4);
        let pq = Program::parse_with_extra_atoms("", &["p", "q"]).unwrap();
        assert_eq!(enumerate_interpretations(&pq, true, 16).unwrap().len(), 9);
        assert!(enumerate_interpretations(&pq, true, 1).is_err());
    }

    #[test]
    fn evaluation_switch_and_symmetry_lemmas() {
        // Over all pairs and a structured formula family on 3 atoms:
        // (x,y)(φ)=T iff (y,x)(φ)=T, =F iff =F, =C iff (y,x)(φ)=U,
        // and (y,x)(φ) in {T,C} implies (x,y)(φ) in {T,U}.
        let p = Program::parse_with_extra_atoms("", &["a", "b", "c"]).unwrap();
        let formulas = test_formulas(3);
        for x in 0..8u64 {
            for y in 0..8u64 {
                let i = ApproxPair::new(Element(x), Element(y));
                let j = ApproxPair::new(Element(y), Element(x));
                for f in &formulas {
                    let vi = eval_formula(i, f);
                    let vj = eval_formula(j, f);
                    assert_eq!(vi == T, vj == T);
                    assert_eq!(vi == F, vj == F);
                    assert_eq!(vi == C, vj == U);
                    if vj == T || vj == C {
                        assert!(vi == T || vi == U);
                    }
                    if vj == F || vj == C {
                        assert!(vi == F || vi == U);
                    }
                }
            }
        }
        let _ = p;
    }

    #[test]
    fn evaluation_is_information_monotone() {
        let formulas = test_formulas(2);
        for x1 in 0..4u64 {
            for y1 in 0..4u64 {
                for x2 in 0..4u64 {
                    for y2 in 0..4u64 {
                        let le_i = x1 & !x2 == 0 && y2 & !y1 == 0;
                        if !le_i {
                            continue;
                        }
                        let i1 = ApproxPair::new(Element(x1), Element(y1));
                        let i2 = ApproxPair::new(Element(x2), Element(y2));
                        for f in &formulas {
                            assert!(eval_formula(i1, f).info_leq(eval_formula(i2, f)));
                        }
                    }
                }
            }
        }
    }

    /// All formulas of depth <= 2 over `n` atoms and the classical
    /// constants. The middle constants are excluded here: the swap lemmas
    /// fail on them by construction (`#u` evaluates to U under both
    /// orientations), and rule bodies introduced by reducts only ever
    /// meet them in two-valued contexts.
    fn test_formulas(n: u32) -> Vec<Formula> {
        let mut depth0: Vec<Formula> = (0..n).map(Formula::Atom).collect();
        depth0.extend([T, F].map(Formula::Const));
        let mut depth1 = depth0.clone();
        for a in &depth0 {
            depth1.push(Formula::not(a.clone()));
        }
        for a in &depth0 {
            for b in &depth0 {
                depth1.push(Formula::and(a.clone(), b.clone()));
                depth1.push(Formula::or(a.clone(), b.clone()));
            }
        }
        let mut out = depth1.clone();
        for a in depth1.iter().take(40) {
            out.push(Formula::not(a.clone()));
            for b in depth1.iter().take(20) {
                out.push(Formula::and(a.clone(), b.clone()));
                out.push(Formula::or(a.clone(), b.clone()));
            }
        }
        out
    }
}
