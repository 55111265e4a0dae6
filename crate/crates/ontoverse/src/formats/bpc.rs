//! The `.bpc` format: one behavioral profile of a conceptualization.
//!
//! ```text
//! ontoverse-bpc: 1
//! id: c1
//! domain: dogs
//! state reality: gs_breed_of_dog=true, dog_disjoint_gs=false
//! ```
//!
//! Valuations are partial: a state line may value any subset of the
//! domain's propositions, including none (`state s1:`).

use std::collections::BTreeMap;
use std::path::Path;

use crate::formats::{expect_header, split_keyed, FormatError};
use crate::propositions::{DomainId, PropositionId};
use crate::worldview::{Bpc, BpcId, StateId};

pub const HEADER: &str = "ontoverse-bpc";

pub fn parse(text: &str) -> Result<Bpc, FormatError> {
    let lines = expect_header(text, HEADER)?;

    let mut id: Option<BpcId> = None;
    let mut domain: Option<DomainId> = None;
    let mut states: BTreeMap<StateId, BTreeMap<PropositionId, bool>> = BTreeMap::new();

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
            "domain" => {
                if domain.is_some() {
                    return Err(FormatError::parse(n, "duplicate `domain:` line"));
                }
                domain = Some(value.parse().map_err(|e| FormatError::parse(n, e))?);
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
                if states.contains_key(&state_id) {
                    return Err(FormatError::parse(n, format!("duplicate state `{state_id}`")));
                }
                states.insert(state_id, parse_valuation(n, value)?);
            }
            other => return Err(FormatError::parse(n, format!("unknown key `{other}`"))),
        }
    }

    let id = id.ok_or_else(|| FormatError::parse(1, "missing `id:` line"))?;
    let domain = domain.ok_or_else(|| FormatError::parse(1, "missing `domain:` line"))?;
    if states.is_empty() {
        return Err(FormatError::parse(1, "a behavioral profile needs at least one state"));
    }
    Bpc::new(id, domain, states).map_err(|e| FormatError::parse(1, e))
}

fn parse_valuation(
    n: usize,
    text: &str,
) -> Result<BTreeMap<PropositionId, bool>, FormatError> {
    let mut valuation = BTreeMap::new();
    if text.trim().is_empty() {
        return Ok(valuation);
    }
    for item in text.split(',') {
        let item = item.trim();
        let Some((name, value)) = item.split_once('=') else {
            return Err(FormatError::parse(
                n,
                format!("expected `proposition=true|false`, got `{item}`"),
            ));
        };
        let p: PropositionId = name
            .trim()
            .parse()
            .map_err(|e| FormatError::parse(n, e))?;
        let value = match value.trim() {
            "true" => true,
            "false" => false,
            other => {
                return Err(FormatError::parse(
                    n,
                    format!("valuation must be `true` or `false`, got `{other}`"),
                ))
            }
        };
        if valuation.insert(p.clone(), value).is_some() {
            return Err(FormatError::parse(n, format!("duplicate valuation for `{p}`")));
        }
    }
    Ok(valuation)
}

pub fn load(path: &Path) -> Result<Bpc, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|e| FormatError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    parse(&text).map_err(|e| FormatError::in_file(path, e))
}

pub fn serialize(bpc: &Bpc) -> String {
    let mut out = String::new();
    out.push_str(&format!("{HEADER}: 1\n"));
    out.push_str(&format!("id: {}\n", bpc.id()));
    out.push_str(&format!("domain: {}\n", bpc.domain()));
    for (state, valuation) in bpc.states() {
        let items: Vec<String> = valuation
            .iter()
            .map(|(p, v)| format!("{p}={}", if *v { "true" } else { "false" }))
            .collect();
        out.push_str(&format!("state {state}: {}\n", items.join(", ")));
    }
    out
}
