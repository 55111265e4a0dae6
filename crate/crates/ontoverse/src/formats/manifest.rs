//! The graph manifest format: documents, their versions (by file
//! reference), and derives-from edges.
//!
//! ```text
//! ontoverse-graph: 1
//! document GO
//! version v1 file=go/v1.ovf
//! version v2 file=go/v2.ovf
//! derives v2 from v1 kind=revision
//! ```
//!
//! `version` lines attach to the most recent `document` line. File
//! references are opaque, whitespace-free tokens; the graph never loads
//! them. `derives` lines are applied after all versions are registered, so
//! they may appear anywhere after the header.

use std::path::Path;

use crate::formats::{expect_header, FormatError};
use crate::graph::{DerivationKind, VersionGraph};
use crate::ontology::{DocumentId, VersionId};

pub const HEADER: &str = "ontoverse-graph";

pub fn parse(text: &str) -> Result<VersionGraph, FormatError> {
    let lines = expect_header(text, HEADER)?;

    let mut graph = VersionGraph::new();
    let mut current_document: Option<DocumentId> = None;
    let mut derivations: Vec<(usize, VersionId, VersionId, DerivationKind)> = Vec::new();

    for (n, line) in lines {
        let mut words = line.split_whitespace();
        match words.next().unwrap_or_default() {
            "document" => {
                let id: DocumentId = words
                    .next()
                    .ok_or_else(|| FormatError::parse(n, "document needs an identifier"))?
                    .parse()
                    .map_err(|e| FormatError::parse(n, e))?;
                if words.next().is_some() {
                    return Err(FormatError::parse(n, "unexpected token after document id"));
                }
                graph.add_document(id.clone());
                current_document = Some(id);
            }
            "version" => {
                let id: VersionId = words
                    .next()
                    .ok_or_else(|| FormatError::parse(n, "version needs an identifier"))?
                    .parse()
                    .map_err(|e| FormatError::parse(n, e))?;
                let file = words
                    .next()
                    .and_then(|w| w.strip_prefix("file="))
                    .ok_or_else(|| FormatError::parse(n, "version needs `file=<path>`"))?;
                if file.is_empty() {
                    return Err(FormatError::parse(n, "version needs `file=<path>`"));
                }
                if words.next().is_some() {
                    return Err(FormatError::parse(n, "unexpected token after file reference"));
                }
                let document = current_document.clone().ok_or_else(|| {
                    FormatError::parse(n, "version line before any `document` line")
                })?;
                graph
                    .add_version(id, document, file)
                    .map_err(|e| FormatError::parse(n, e))?;
            }
            "derives" => {
                let child: VersionId = words
                    .next()
                    .ok_or_else(|| FormatError::parse(n, "derives needs a child version"))?
                    .parse()
                    .map_err(|e| FormatError::parse(n, e))?;
                if words.next() != Some("from") {
                    return Err(FormatError::parse(n, "expected `from`"));
                }
                let parent: VersionId = words
                    .next()
                    .ok_or_else(|| FormatError::parse(n, "derives needs a parent version"))?
                    .parse()
                    .map_err(|e| FormatError::parse(n, e))?;
                let kind = words
                    .next()
                    .and_then(|w| w.strip_prefix("kind="))
                    .and_then(DerivationKind::from_tag)
                    .ok_or_else(|| {
                        FormatError::parse(
                            n,
                            "derives needs `kind=revision|translation|transformation`",
                        )
                    })?;
                if words.next().is_some() {
                    return Err(FormatError::parse(n, "unexpected token after kind"));
                }
                derivations.push((n, child, parent, kind));
            }
            other => return Err(FormatError::parse(n, format!("unknown key `{other}`"))),
        }
    }

    for (n, child, parent, kind) in derivations {
        graph
            .add_derivation(&child, &parent, kind)
            .map_err(|e| FormatError::parse(n, e))?;
    }
    Ok(graph)
}

pub fn load(path: &Path) -> Result<VersionGraph, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|e| FormatError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    parse(&text).map_err(|e| FormatError::in_file(path, e))
}

pub fn serialize(graph: &VersionGraph) -> String {
    let mut out = String::new();
    out.push_str(&format!("{HEADER}: 1\n"));
    for document in graph.documents() {
        out.push_str(&format!("document {document}\n"));
        for (version, record) in graph.versions() {
            if record.document == *document {
                out.push_str(&format!("version {version} file={}\n", record.file));
            }
        }
    }
    for edge in graph.edges() {
        out.push_str(&format!(
            "derives {} from {} kind={}\n",
            edge.child, edge.parent, edge.kind
        ));
    }
    out
}
