//! The `.ovf` format: one ontology version per file.
//!
//! ```text
//! ontoverse-version: 1
//! id: e3c
//! document: dogs_demo
//! domain: dogs
//! logic: classbox
//! vocab: Dog, GermanShepherd
//! axiom a1: DisjointWith(Dog, GermanShepherd)
//! annotation c1 kind=assertive: German Shepherd is a popular breed of dog
//! interp axiom a1 -> dog_disjoint_gs
//! interp annotation c1 -> gs_breed_of_dog
//! meta creator: Fabian
//! ```
//!
//! `import: <path>` lines merge another version file (relative to the
//! importing file); a version need not contain its complete vocabulary,
//! axioms, and annotations directly. Imports form a DAG: each file is
//! loaded once, cycles are errors. Version-level fields (`id`, `document`,
//! metadata) always come from the root file; imported files must agree on
//! `domain` and `logic`.
//!
//! `interp axiom <id> -> <prop>` resolves to a sentence entry for the
//! axiom's sentence; the serializer always emits the `interp sentence`
//! form, so parsing a serialized version restores the identical value.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use crate::formats::{expect_header, parse_ident_list, sentence, split_keyed, FormatError};
use crate::logic::{Logic, Sentence, SymbolId};
use crate::ontology::{
    AnnotatedTheory, Annotation, AnnotationId, AnnotationKind, AnnotationTarget, AxiomId,
    DocumentId, InterpretationMap, OntologyVersion, VersionId,
};
use crate::propositions::{DomainId, PropositionId};

pub const HEADER: &str = "ontoverse-version";

/// One parsed file, before import resolution.
struct RawOvf {
    id: VersionId,
    document: DocumentId,
    domain: (usize, DomainId),
    logic: (usize, Logic),
    vocab: BTreeSet<SymbolId>,
    axioms: Vec<(usize, AxiomId, Sentence)>,
    annotations: Vec<(usize, AnnotationId, Annotation)>,
    interps: Vec<(usize, InterpEntry)>,
    imports: Vec<(usize, String)>,
    metadata: Vec<(String, String)>,
}

enum InterpEntry {
    Annotation(AnnotationId, PropositionId),
    Axiom(AxiomId, PropositionId),
    Sentence(Sentence, PropositionId),
}

fn is_meta_key(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

fn parse_raw(text: &str) -> Result<RawOvf, FormatError> {
    let lines = expect_header(text, HEADER)?;

    let mut id: Option<(usize, VersionId)> = None;
    let mut document: Option<(usize, DocumentId)> = None;
    let mut domain: Option<(usize, DomainId)> = None;
    let mut logic: Option<(usize, Logic)> = None;
    let mut vocab = BTreeSet::new();
    // Sentence texts wait until the logic tag is known.
    let mut axiom_lines: Vec<(usize, AxiomId, String)> = Vec::new();
    let mut annotations: Vec<(usize, AnnotationId, Annotation)> = Vec::new();
    let mut interp_lines: Vec<(usize, RawInterp)> = Vec::new();
    let mut imports = Vec::new();
    let mut metadata: Vec<(String, String)> = Vec::new();
    let mut meta_keys: BTreeSet<String> = BTreeSet::new();

    for (n, line) in lines {
        if let Some(rest) = line.strip_prefix("interp ") {
            let (lhs, prop) = rest.rsplit_once("->").ok_or_else(|| {
                FormatError::parse(n, "interpretation line needs `-> <proposition>`")
            })?;
            let prop: PropositionId = prop
                .trim()
                .parse()
                .map_err(|e| FormatError::parse(n, e))?;
            let lhs = lhs.trim();
            if let Some(aid) = lhs.strip_prefix("annotation ") {
                let aid: AnnotationId =
                    aid.trim().parse().map_err(|e| FormatError::parse(n, e))?;
                interp_lines.push((n, RawInterp::Annotation(aid, prop)));
            } else if let Some(axid) = lhs.strip_prefix("axiom ") {
                let axid: AxiomId =
                    axid.trim().parse().map_err(|e| FormatError::parse(n, e))?;
                interp_lines.push((n, RawInterp::Axiom(axid, prop)));
            } else if let Some(sentence_text) = lhs.strip_prefix("sentence ") {
                interp_lines.push((n, RawInterp::Sentence(sentence_text.trim().to_string(), prop)));
            } else {
                return Err(FormatError::parse(
                    n,
                    "expected `interp annotation`, `interp axiom`, or `interp sentence`",
                ));
            }
            continue;
        }

        let Some((head, value)) = split_keyed(line) else {
            return Err(FormatError::parse(n, format!("expected `key: value`, got `{line}`")));
        };
        let mut head_words = head.split_whitespace();
        let keyword = head_words.next().unwrap_or_default();
        match keyword {
            "id" => set_once(&mut id, n, "id", value.parse().map_err(|e| FormatError::parse(n, e))?)?,
            "document" => set_once(
                &mut document,
                n,
                "document",
                value.parse().map_err(|e| FormatError::parse(n, e))?,
            )?,
            "domain" => set_once(
                &mut domain,
                n,
                "domain",
                value.parse().map_err(|e| FormatError::parse(n, e))?,
            )?,
            "logic" => {
                let tag = Logic::from_tag(value)
                    .ok_or_else(|| FormatError::parse(n, format!("unknown logic tag `{value}`")))?;
                set_once(&mut logic, n, "logic", tag)?;
            }
            "vocab" => {
                vocab.extend(parse_ident_list::<SymbolId>(n, value)?);
            }
            "import" => {
                if value.is_empty() {
                    return Err(FormatError::parse(n, "import needs a path"));
                }
                imports.push((n, value.to_string()));
            }
            "axiom" => {
                let axiom_id: AxiomId = head_words
                    .next()
                    .ok_or_else(|| FormatError::parse(n, "axiom needs an identifier"))?
                    .parse()
                    .map_err(|e| FormatError::parse(n, e))?;
                if head_words.next().is_some() {
                    return Err(FormatError::parse(n, "unexpected token after axiom id"));
                }
                axiom_lines.push((n, axiom_id, value.to_string()));
            }
            "annotation" => {
                let (aid, annotation) = parse_annotation_head(n, &mut head_words, value)?;
                annotations.push((n, aid, annotation));
            }
            "meta" => {
                let key = head_words
                    .next()
                    .ok_or_else(|| FormatError::parse(n, "meta needs a key"))?;
                if !is_meta_key(key) || head_words.next().is_some() {
                    return Err(FormatError::parse(n, format!("invalid meta key `{key}`")));
                }
                if !meta_keys.insert(key.to_string()) {
                    return Err(FormatError::parse(n, format!("duplicate meta key `{key}`")));
                }
                metadata.push((key.to_string(), value.to_string()));
            }
            other => {
                return Err(FormatError::parse(n, format!("unknown key `{other}`")));
            }
        }
    }

    let id = id.ok_or_else(|| FormatError::parse(1, "missing `id:` line"))?.1;
    let document = document
        .ok_or_else(|| FormatError::parse(1, "missing `document:` line"))?
        .1;
    let domain = domain.ok_or_else(|| FormatError::parse(1, "missing `domain:` line"))?;
    let logic = logic.ok_or_else(|| FormatError::parse(1, "missing `logic:` line"))?;

    let mut axioms = Vec::with_capacity(axiom_lines.len());
    for (n, axiom_id, text) in axiom_lines {
        let parsed = sentence::parse(&text, logic.1).map_err(|e| FormatError::parse(n, e))?;
        axioms.push((n, axiom_id, parsed));
    }
    let mut interps = Vec::with_capacity(interp_lines.len());
    for (n, raw) in interp_lines {
        let entry = match raw {
            RawInterp::Annotation(aid, prop) => InterpEntry::Annotation(aid, prop),
            RawInterp::Axiom(axid, prop) => InterpEntry::Axiom(axid, prop),
            RawInterp::Sentence(text, prop) => {
                let parsed =
                    sentence::parse(&text, logic.1).map_err(|e| FormatError::parse(n, e))?;
                InterpEntry::Sentence(parsed, prop)
            }
        };
        interps.push((n, entry));
    }

    Ok(RawOvf {
        id,
        document,
        domain,
        logic,
        vocab,
        axioms,
        annotations,
        interps,
        imports,
        metadata,
    })
}

enum RawInterp {
    Annotation(AnnotationId, PropositionId),
    Axiom(AxiomId, PropositionId),
    Sentence(String, PropositionId),
}

fn set_once<T>(slot: &mut Option<(usize, T)>, n: usize, key: &str, value: T) -> Result<(), FormatError> {
    if slot.is_some() {
        return Err(FormatError::parse(n, format!("duplicate `{key}:` line")));
    }
    *slot = Some((n, value));
    Ok(())
}

fn parse_annotation_head(
    n: usize,
    words: &mut std::str::SplitWhitespace<'_>,
    text: &str,
) -> Result<(AnnotationId, Annotation), FormatError> {
    let aid: AnnotationId = words
        .next()
        .ok_or_else(|| FormatError::parse(n, "annotation needs an identifier"))?
        .parse()
        .map_err(|e| FormatError::parse(n, e))?;
    let mut kind = None;
    let mut target = None;
    for attr in words {
        let Some((name, value)) = attr.split_once('=') else {
            return Err(FormatError::parse(
                n,
                format!("expected `name=value` attribute, got `{attr}`"),
            ));
        };
        match name {
            "kind" => {
                if kind.is_some() {
                    return Err(FormatError::parse(n, "duplicate `kind=` attribute"));
                }
                kind = Some(AnnotationKind::from_tag(value).ok_or_else(|| {
                    FormatError::parse(n, format!("unknown annotation kind `{value}`"))
                })?);
            }
            "axiom" => {
                if target.is_some() {
                    return Err(FormatError::parse(n, "duplicate target attribute"));
                }
                let axid: AxiomId = value.parse().map_err(|e| FormatError::parse(n, e))?;
                target = Some(AnnotationTarget::Axiom(axid));
            }
            "symbol" => {
                if target.is_some() {
                    return Err(FormatError::parse(n, "duplicate target attribute"));
                }
                let symbol: SymbolId = value.parse().map_err(|e| FormatError::parse(n, e))?;
                target = Some(AnnotationTarget::Symbol(symbol));
            }
            other => {
                return Err(FormatError::parse(
                    n,
                    format!("unknown annotation attribute `{other}`"),
                ));
            }
        }
    }
    let kind = kind.ok_or_else(|| FormatError::parse(n, "annotation needs `kind=`"))?;
    Ok((
        aid,
        Annotation {
            kind,
            target,
            text: text.to_string(),
        },
    ))
}

/// Parses a self-contained version (no imports) from text.
pub fn parse(text: &str) -> Result<OntologyVersion, FormatError> {
    let raw = parse_raw(text)?;
    if let Some((n, path)) = raw.imports.first() {
        return Err(FormatError::parse(
            *n,
            format!("import `{path}` requires file-based loading"),
        ));
    }
    assemble(vec![(PathBuf::new(), raw)])
}

/// Loads a version from a file, resolving `import:` lines transitively.
pub fn load(path: &Path) -> Result<OntologyVersion, FormatError> {
    let mut files = Vec::new();
    let mut visited = BTreeSet::new();
    let mut stack = Vec::new();
    collect(path, &mut files, &mut visited, &mut stack)?;
    assemble(files)
}

fn collect(
    path: &Path,
    files: &mut Vec<(PathBuf, RawOvf)>,
    visited: &mut BTreeSet<PathBuf>,
    stack: &mut Vec<PathBuf>,
) -> Result<(), FormatError> {
    let canonical = path.canonicalize().map_err(|e| FormatError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    if visited.contains(&canonical) {
        return Ok(());
    }
    let text = std::fs::read_to_string(&canonical).map_err(|e| FormatError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    let raw = parse_raw(&text).map_err(|e| FormatError::in_file(path, e))?;

    stack.push(canonical.clone());
    let imports = raw.imports.clone();
    files.push((path.to_path_buf(), raw));
    for (n, import) in imports {
        let target = match canonical.parent() {
            Some(parent) => parent.join(&import),
            None => PathBuf::from(&import),
        };
        let target_canonical = target.canonicalize().map_err(|e| {
            FormatError::in_file(path, FormatError::parse(n, format!("import `{import}`: {e}")))
        })?;
        if stack.contains(&target_canonical) {
            return Err(FormatError::in_file(
                path,
                FormatError::parse(n, format!("import cycle through `{import}`")),
            ));
        }
        collect(&target, files, visited, stack)?;
    }
    stack.pop();
    visited.insert(canonical);
    Ok(())
}

fn assemble(files: Vec<(PathBuf, RawOvf)>) -> Result<OntologyVersion, FormatError> {
    let root_domain = files[0].1.domain.1.clone();
    let root_logic = files[0].1.logic.1;
    let located = |path: &Path, e: FormatError| -> FormatError {
        if path.as_os_str().is_empty() {
            e
        } else {
            FormatError::in_file(path, e)
        }
    };

    let mut vocab: BTreeSet<SymbolId> = BTreeSet::new();
    let mut axioms: BTreeMap<AxiomId, Sentence> = BTreeMap::new();
    let mut annotations: BTreeMap<AnnotationId, Annotation> = BTreeMap::new();

    for (path, raw) in &files {
        if raw.domain.1 != root_domain {
            return Err(located(
                path,
                FormatError::parse(
                    raw.domain.0,
                    format!("imported domain `{}` does not match `{root_domain}`", raw.domain.1),
                ),
            ));
        }
        if raw.logic.1 != root_logic {
            return Err(located(
                path,
                FormatError::parse(
                    raw.logic.0,
                    format!("imported logic `{}` does not match `{root_logic}`", raw.logic.1),
                ),
            ));
        }
        vocab.extend(raw.vocab.iter().cloned());
        for (n, id, sentence) in &raw.axioms {
            if axioms.insert(id.clone(), sentence.clone()).is_some() {
                return Err(located(
                    path,
                    FormatError::parse(*n, format!("duplicate axiom id `{id}`")),
                ));
            }
        }
        for (n, id, annotation) in &raw.annotations {
            if annotations.insert(id.clone(), annotation.clone()).is_some() {
                return Err(located(
                    path,
                    FormatError::parse(*n, format!("duplicate annotation id `{id}`")),
                ));
            }
        }
    }

    let mut interpretation = InterpretationMap::new();
    for (path, raw) in &files {
        for (n, entry) in &raw.interps {
            let result = match entry {
                InterpEntry::Annotation(id, prop) => {
                    interpretation.map_annotation(id.clone(), prop.clone())
                }
                InterpEntry::Axiom(axiom_id, prop) => {
                    let sentence = axioms.get(axiom_id).ok_or_else(|| {
                        located(
                            path,
                            FormatError::parse(
                                *n,
                                format!("unknown axiom `{axiom_id}` in interpretation"),
                            ),
                        )
                    })?;
                    interpretation.map_sentence(sentence.clone(), prop.clone())
                }
                InterpEntry::Sentence(sentence, prop) => {
                    interpretation.map_sentence(sentence.clone(), prop.clone())
                }
            };
            result.map_err(|e| located(path, FormatError::parse(*n, e)))?;
        }
    }

    let theory = AnnotatedTheory::new(root_logic, vocab, axioms, annotations)
        .map_err(|e| FormatError::parse(1, e))?;

    let (_, root) = files.into_iter().next().expect("at least the root file");
    let mut version = OntologyVersion::new(root.id, root.document, root_domain, theory, interpretation);
    for (key, value) in root.metadata {
        version = version.with_metadata(key, value);
    }
    Ok(version)
}

/// Canonical serialization. Imports are always resolved before a version
/// value exists, so the output is self-contained.
pub fn serialize(version: &OntologyVersion) -> String {
    let mut out = String::new();
    out.push_str(&format!("{HEADER}: 1\n"));
    out.push_str(&format!("id: {}\n", version.version_id()));
    out.push_str(&format!("document: {}\n", version.document_id()));
    out.push_str(&format!("domain: {}\n", version.domain_id()));
    out.push_str(&format!("logic: {}\n", version.theory().logic()));

    let vocab: Vec<String> = version
        .theory()
        .vocabulary()
        .iter()
        .map(|s| s.to_string())
        .collect();
    out.push_str(&format!("vocab: {}\n", vocab.join(", ")));

    for (id, sentence) in version.theory().axioms() {
        out.push_str(&format!("axiom {id}: {sentence}\n"));
    }
    for (id, annotation) in version.theory().annotations() {
        out.push_str(&format!("annotation {id} kind={}", annotation.kind.tag()));
        match &annotation.target {
            Some(AnnotationTarget::Axiom(axid)) => out.push_str(&format!(" axiom={axid}")),
            Some(AnnotationTarget::Symbol(symbol)) => out.push_str(&format!(" symbol={symbol}")),
            None => {}
        }
        out.push_str(&format!(": {}\n", annotation.text));
    }
    for (id, prop) in version.interpretation().annotation_entries() {
        out.push_str(&format!("interp annotation {id} -> {prop}\n"));
    }
    for (sentence, prop) in version.interpretation().sentence_entries() {
        out.push_str(&format!("interp sentence {sentence} -> {prop}\n"));
    }
    for (key, value) in version.metadata() {
        out.push_str(&format!("meta {key}: {value}\n"));
    }
    out
}
