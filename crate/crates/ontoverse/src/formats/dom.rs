//! The `.dom` format: a proposition space, optionally with the states of
//! affairs of a real domain.
//!
//! ```text
//! ontoverse-domain: 1
//! id: dogs
//! props: dog_disjoint_gs, gs_breed_of_dog
//! conflict: dog_disjoint_gs, gs_breed_of_dog
//! state reality: gs_breed_of_dog
//! ```
//!
//! When `state` lines are present they must form a real domain: each state
//! a maximal consistent subset of the props.

use std::collections::BTreeMap;
use std::path::Path;

use crate::formats::{expect_header, parse_ident_list, split_keyed, FormatError};
use crate::propositions::{DomainId, PropositionId, PropositionSet, PropositionSpace};
use crate::worldview::{RealDomain, StateId};

pub const HEADER: &str = "ontoverse-domain";

/// A parsed `.dom` file.
#[derive(Debug, Clone, PartialEq)]
pub struct DomainDocument {
    pub space: PropositionSpace,
    pub real_domain: Option<RealDomain>,
}

pub fn parse(text: &str) -> Result<DomainDocument, FormatError> {
    let lines = expect_header(text, HEADER)?;

    let mut id: Option<DomainId> = None;
    let mut props: Option<(usize, Vec<PropositionId>)> = None;
    let mut conflicts: Vec<(usize, PropositionSet)> = Vec::new();
    let mut states: Vec<(usize, StateId, PropositionSet)> = Vec::new();

    for (n, line) in lines {
        let Some((head, value)) = split_keyed(line) else {
            return Err(FormatError::parse(n, format!("expected `key: value`, got `{line}`")));
        };
        let mut head_words = head.split_whitespace();
        match head_words.next().unwrap_or_default() {
            "id" => {
                if id.is_some() {
                    return Err(FormatError::parse(n, "duplicate `id:` line"));
                }
                id = Some(value.parse().map_err(|e| FormatError::parse(n, e))?);
            }
            "props" => {
                if props.is_some() {
                    return Err(FormatError::parse(n, "duplicate `props:` line"));
                }
                props = Some((n, parse_ident_list(n, value)?));
            }
            "conflict" => {
                let members: Vec<PropositionId> = parse_ident_list(n, value)?;
                conflicts.push((n, members.into_iter().collect()));
            }
            "state" => {
                let state_id: StateId = head_words
                    .next()
                    .ok_or_else(|| FormatError::parse(n, "state needs an identifier"))?
                    .parse()
                    .map_err(|e| FormatError::parse(n, e))?;
                if head_words.next().is_some() {
                    return Err(FormatError::parse(n, "unexpected token after state id"));
                }
                if states.iter().any(|(_, existing, _)| *existing == state_id) {
                    return Err(FormatError::parse(n, format!("duplicate state `{state_id}`")));
                }
                let members: Vec<PropositionId> = parse_ident_list(n, value)?;
                states.push((n, state_id, members.into_iter().collect()));
            }
            other => return Err(FormatError::parse(n, format!("unknown key `{other}`"))),
        }
    }

    let id = id.ok_or_else(|| FormatError::parse(1, "missing `id:` line"))?;
    let (props_line, props) = props.ok_or_else(|| FormatError::parse(1, "missing `props:` line"))?;

    // Build the space, pinning errors to the responsible lines.
    for (n, conflict) in &conflicts {
        if conflict.len() < 2 {
            return Err(FormatError::parse(*n, "conflict needs at least two propositions"));
        }
        for p in conflict {
            if !props.contains(p) {
                return Err(FormatError::parse(*n, format!("unknown proposition `{p}`")));
            }
        }
    }
    let space = PropositionSpace::new(id, props.clone(), conflicts.into_iter().map(|(_, c)| c))
        .map_err(|e| FormatError::parse(props_line, e))?;

    let real_domain = if states.is_empty() {
        None
    } else {
        let mut by_id: BTreeMap<StateId, PropositionSet> = BTreeMap::new();
        for (n, state_id, members) in &states {
            for p in members {
                if !space.props().contains(p) {
                    return Err(FormatError::parse(*n, format!("unknown proposition `{p}`")));
                }
            }
            by_id.insert(state_id.clone(), members.clone());
        }
        let check = crate::worldview::is_real_domain(&by_id, &space)
            .map_err(|e| FormatError::parse(props_line, e))?;
        for (n, state_id, _) in &states {
            let diagnosis = &check.states[state_id];
            if !diagnosis.is_ok() {
                return Err(FormatError::parse(
                    *n,
                    format!("state `{state_id}` is not a maximal consistent subset"),
                ));
            }
        }
        Some(RealDomain::new(&space, by_id).map_err(|e| FormatError::parse(props_line, e))?)
    };

    Ok(DomainDocument { space, real_domain })
}

pub fn load(path: &Path) -> Result<DomainDocument, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|e| FormatError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    parse(&text).map_err(|e| FormatError::in_file(path, e))
}

pub fn serialize(space: &PropositionSpace, real_domain: Option<&RealDomain>) -> String {
    let mut out = String::new();
    out.push_str(&format!("{HEADER}: 1\n"));
    out.push_str(&format!("id: {}\n", space.domain()));
    let props: Vec<String> = space.props().iter().map(|p| p.to_string()).collect();
    out.push_str(&format!("props: {}\n", props.join(", ")));
    for conflict in space.conflicts() {
        let members: Vec<String> = conflict.iter().map(|p| p.to_string()).collect();
        out.push_str(&format!("conflict: {}\n", members.join(", ")));
    }
    if let Some(domain) = real_domain {
        for (id, state) in domain.states() {
            let members: Vec<String> = state.iter().map(|p| p.to_string()).collect();
            out.push_str(&format!("state {id}: {}\n", members.join(", ")));
        }
    }
    out
}
