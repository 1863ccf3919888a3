//! JSON wire forms for interpretations, states and traces, with
//! round-trip decoding back into canonical engine values.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::fixpoint::IterationTrace;
use crate::lattice::{ApproxPair, ElementFamily, FiniteLattice, State};

/// `{"lower": ["q"], "upper": ["p", "q"]}` with sorted atom arrays.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InterpretationJson {
    pub lower: Vec<String>,
    pub upper: Vec<String>,
}

pub fn interpretation_to_json(lattice: &FiniteLattice, pair: ApproxPair) -> InterpretationJson {
    InterpretationJson {
        lower: lattice.element_atoms(pair.lower),
        upper: lattice.element_atoms(pair.upper),
    }
}

pub fn interpretation_from_json(
    lattice: &FiniteLattice,
    json: &InterpretationJson,
) -> Result<ApproxPair> {
    Ok(ApproxPair::new(
        lattice.element_from_atoms(&json.lower)?,
        lattice.element_from_atoms(&json.upper)?,
    ))
}

/// Antichain-canonical state, optionally with its enumerated members.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateJson {
    pub lower_antichain: Vec<Vec<String>>,
    pub upper_antichain: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub convex_members: Option<Vec<Vec<String>>>,
}

fn family_to_json(lattice: &FiniteLattice, family: &ElementFamily) -> Vec<Vec<String>> {
    family.iter().map(|e| lattice.element_atoms(e)).collect()
}

fn family_from_json(lattice: &FiniteLattice, sets: &[Vec<String>]) -> Result<ElementFamily> {
    sets.iter().map(|s| lattice.element_from_atoms(s)).collect()
}

pub fn state_to_json(
    lattice: &FiniteLattice,
    state: &State,
    with_members: bool,
) -> Result<StateJson> {
    let convex_members = if with_members {
        Some(family_to_json(lattice, &lattice.convex_members(state)?))
    } else {
        None
    };
    Ok(StateJson {
        lower_antichain: family_to_json(lattice, state.lower_antichain()),
        upper_antichain: family_to_json(lattice, state.upper_antichain()),
        convex_members,
    })
}

/// Decodes and re-canonicalizes a state.
pub fn state_from_json(lattice: &FiniteLattice, json: &StateJson) -> Result<State> {
    Ok(State::new(
        lattice,
        family_from_json(lattice, &json.lower_antichain)?,
        family_from_json(lattice, &json.upper_antichain)?,
    ))
}

/// One trace snapshot with its step index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStepJson {
    pub step: usize,
    #[serde(flatten)]
    pub state: StateJson,
}

pub fn trace_to_json(lattice: &FiniteLattice, trace: &IterationTrace) -> Result<Vec<TraceStepJson>> {
    trace
        .states
        .iter()
        .enumerate()
        .map(|(step, s)| Ok(TraceStepJson { step, state: state_to_json(lattice, s, false)? }))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixpoint::kk_state;
    use crate::fixtures;
    use crate::operators::{IcNdao, Ndao};

    #[test]
    fn interpretation_round_trip() {
        let p = fixtures::p3();
        let lattice = p.lattice();
        let pair = ApproxPair::new(
            lattice.element_from_atoms(&["q"]).unwrap(),
            lattice.element_from_atoms(&["p", "q"]).unwrap(),
        );
        let json = interpretation_to_json(&lattice, pair);
        assert_eq!(json.lower, vec!["q"]);
        assert_eq!(json.upper, vec!["p", "q"]);
        let text = serde_json::to_string(&json).unwrap();
        let parsed: InterpretationJson = serde_json::from_str(&text).unwrap();
        assert_eq!(interpretation_from_json(&lattice, &parsed).unwrap(), pair);
    }

    #[test]
    fn state_round_trip_with_members() {
        let p = fixtures::p1();
        let op = IcNdao::new(p.clone());
        let (state, trace) = kk_state(&op).unwrap();
        let json = state_to_json(op.lattice(), &state, true).unwrap();
        assert_eq!(json.convex_members.as_ref().unwrap().len(), 3);
        let text = serde_json::to_string(&json).unwrap();
        let parsed: StateJson = serde_json::from_str(&text).unwrap();
        assert_eq!(state_from_json(op.lattice(), &parsed).unwrap(), state);

        let steps = trace_to_json(op.lattice(), &trace).unwrap();
        assert_eq!(steps.first().unwrap().step, 0);
        let text = serde_json::to_string(&steps).unwrap();
        assert!(text.contains("\"step\":0"));
    }

    #[test]
    fn unknown_atoms_are_domain_errors() {
        let p = fixtures::p1();
        let lattice = p.lattice();
        let bad = InterpretationJson { lower: vec!["zz".into()], upper: vec![] };
        assert!(interpretation_from_json(&lattice, &bad).is_err());
    }
}
