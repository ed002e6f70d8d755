//! Text format for graphs, cut files, and label maps.
//!
//! A graph document has one directive per line; `#` starts a comment.
//!
//! ```text
//! halfedges: 1+ 1- 2+ 2-
//! iota: (1+ 1-)(2+ 2-)        # optional, defaults to pairing x+ with x-
//! sigma: (1+ 2+)(1- 2-)       # omitted tokens are fixed; the line is optional
//! grading: 1+=0 1-=1 2+=1 2-=0   # optional, missing tokens default to 0
//! ```
//!
//! Serialization is canonical: fields in the order above, tokens sorted,
//! cycles sorted by least member and started there, the pairing line omitted
//! when it is the default, single spaces, LF line endings. Parsing a
//! serialized document reproduces the graph, and serializing is stable.
//!
//! A cut file holds one arrow label or arrow source half-edge per line; a
//! label map file holds `source-half-edge=label` lines.

use crate::grading::Grading;
use crate::graph::{default_pairing, BrauerGraph};
use crate::perm::{parse_cycle_tokens, GroundSet, PermError, Permutation};
use crate::token::HalfEdgeId;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// One-based line number, when the problem is attributable to a line.
    pub line: Option<usize>,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(n) => write!(f, "line {n}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line: Some(line),
        message: message.into(),
    }
}

/// Parsed graph document: the graph plus its optional grading.
#[derive(Debug, Clone)]
pub struct ParsedGraph {
    pub graph: BrauerGraph,
    pub grading: Option<Grading>,
}

struct Directive {
    line: usize,
    rest: String,
}

fn split_directives(text: &str) -> Result<BTreeMap<&'static str, Directive>, ParseError> {
    const NAMES: [&str; 4] = ["halfedges", "sigma", "iota", "grading"];
    let mut out: BTreeMap<&'static str, Directive> = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (name, rest) = line
            .split_once(':')
            .ok_or_else(|| err(line_no, format!("expected a directive, got {line:?}")))?;
        let name = name.trim();
        let Some(&known) = NAMES.iter().find(|&&n| n == name) else {
            return Err(err(line_no, format!("unknown directive {name:?}")));
        };
        if out.contains_key(known) {
            return Err(err(line_no, format!("duplicate directive {name:?}")));
        }
        out.insert(
            known,
            Directive {
                line: line_no,
                rest: rest.trim().to_owned(),
            },
        );
    }
    Ok(out)
}

fn parse_tokens(rest: &str, line: usize) -> Result<Vec<HalfEdgeId>, ParseError> {
    let mut tokens = Vec::new();
    for word in rest.split_whitespace() {
        let tok = HalfEdgeId::new(word).map_err(|e| err(line, e.to_string()))?;
        tokens.push(tok);
    }
    Ok(tokens)
}

fn permutation_from_directive(
    ground: &Arc<GroundSet>,
    directive: &Directive,
) -> Result<Permutation, ParseError> {
    let cycles = parse_cycle_tokens(&directive.rest).map_err(|m| err(directive.line, m))?;
    let cycles: Vec<Vec<HalfEdgeId>> = cycles
        .into_iter()
        .map(|cycle| {
            cycle
                .into_iter()
                .map(|tok| {
                    HalfEdgeId::new(tok.as_str()).map_err(|e| err(directive.line, e.to_string()))
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    Permutation::from_cycles(ground, &cycles).map_err(|e| match e {
        PermError::UnknownToken(t) => err(directive.line, format!("unknown half-edge {t}")),
        other => err(directive.line, other.to_string()),
    })
}

/// Parses a graph document. Errors carry the offending line number.
pub fn parse(text: &str) -> Result<ParsedGraph, ParseError> {
    let directives = split_directives(text)?;
    let half = directives.get("halfedges").ok_or(ParseError {
        line: None,
        message: "missing halfedges directive".to_owned(),
    })?;
    let tokens = parse_tokens(&half.rest, half.line)?;
    {
        let mut sorted = tokens.clone();
        sorted.sort();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(err(half.line, format!("duplicate token {}", pair[0])));
            }
        }
    }
    let ground = GroundSet::new(tokens).map_err(|e| err(half.line, e.to_string()))?;

    let iota = match directives.get("iota") {
        Some(d) => {
            let perm = permutation_from_directive(&ground, d)?;
            if !perm.is_involution() || !perm.is_fixed_point_free() {
                let fixed = perm.fixed_points();
                let message = match fixed.first() {
                    Some(h) => format!("pairing fixes {h}"),
                    None => "pairing is not an involution".to_owned(),
                };
                return Err(err(d.line, message));
            }
            perm
        }
        None => default_pairing(&ground).map_err(|e| err(half.line, e.to_string()))?,
    };
    let sigma = match directives.get("sigma") {
        Some(d) => permutation_from_directive(&ground, d)?,
        None => Permutation::identity(Arc::clone(&ground)),
    };
    let graph = BrauerGraph::new(iota, sigma).map_err(|e| ParseError {
        line: None,
        message: e.to_string(),
    })?;

    let grading = match directives.get("grading") {
        Some(d) => {
            let mut degrees: BTreeMap<HalfEdgeId, i64> = BTreeMap::new();
            for word in d.rest.split_whitespace() {
                let (tok, value) = word
                    .split_once('=')
                    .ok_or_else(|| err(d.line, format!("expected token=degree, got {word:?}")))?;
                let h = HalfEdgeId::new(tok).map_err(|e| err(d.line, e.to_string()))?;
                if !ground.contains(&h) {
                    return Err(err(d.line, format!("unknown half-edge {tok}")));
                }
                let value: i64 = value
                    .parse()
                    .map_err(|_| err(d.line, format!("invalid degree {value:?}")))?;
                if degrees.insert(h, value).is_some() {
                    return Err(err(d.line, format!("duplicate grading entry {tok}")));
                }
            }
            Some(Grading::new(&ground, &degrees).expect("tokens checked against the ground set"))
        }
        None => None,
    };
    Ok(ParsedGraph { graph, grading })
}

fn cycles_text(p: &Permutation) -> String {
    p.cycles()
        .iter()
        .map(|cycle| {
            let members: Vec<&str> = cycle.iter().map(HalfEdgeId::as_str).collect();
            format!("({})", members.join(" "))
        })
        .collect::<Vec<_>>()
        .join("")
}

fn is_default_pairing(g: &BrauerGraph) -> bool {
    match default_pairing(g.ground()) {
        Ok(default) => default == *g.iota(),
        Err(_) => false,
    }
}

/// Canonical document for a graph and an optional grading.
pub fn serialize(g: &BrauerGraph, grading: Option<&Grading>) -> String {
    let mut out = String::new();
    let tokens: Vec<&str> = g.ground().iter().map(HalfEdgeId::as_str).collect();
    if tokens.is_empty() {
        out.push_str("halfedges:\n");
    } else {
        out.push_str(&format!("halfedges: {}\n", tokens.join(" ")));
    }
    if !is_default_pairing(g) {
        out.push_str(&format!("iota: {}\n", cycles_text(g.iota())));
    }
    let sigma = cycles_text(g.sigma());
    if sigma.is_empty() {
        out.push_str("sigma:\n");
    } else {
        out.push_str(&format!("sigma: {sigma}\n"));
    }
    if let Some(d) = grading {
        let entries: Vec<String> = g
            .ground()
            .iter()
            .map(|h| format!("{h}={}", d.degree(h)))
            .collect();
        if entries.is_empty() {
            out.push_str("grading:\n");
        } else {
            out.push_str(&format!("grading: {}\n", entries.join(" ")));
        }
    }
    out
}

/// Parses a cut file: one entry per line, `#` comments allowed. Entries are
/// returned verbatim for resolution against a quiver.
pub fn parse_cut_file(text: &str) -> Result<Vec<String>, ParseError> {
    let mut entries = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if line.split_whitespace().count() > 1 {
            return Err(err(i + 1, format!("expected one entry, got {line:?}")));
        }
        if entries.iter().any(|e| e == line) {
            return Err(err(i + 1, format!("duplicate entry {line}")));
        }
        entries.push(line.to_owned());
    }
    Ok(entries)
}

/// Parses a label map file: `source-half-edge=label` lines, `#` comments.
pub fn parse_labels_file(text: &str) -> Result<BTreeMap<String, String>, ParseError> {
    let mut map = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (source, label) = line
            .split_once('=')
            .ok_or_else(|| err(i + 1, format!("expected source=label, got {line:?}")))?;
        let source = source.trim().to_owned();
        let label = label.trim().to_owned();
        if label.is_empty() || label.chars().any(char::is_whitespace) {
            return Err(err(i + 1, format!("invalid label {label:?}")));
        }
        if map.insert(source.clone(), label).is_some() {
            return Err(err(i + 1, format!("duplicate entry for {source}")));
        }
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(t: &str) -> HalfEdgeId {
        HalfEdgeId::new(t).unwrap()
    }

    const THREE_EDGE: &str = "\
halfedges: 1+ 1- 2+ 2- 3+ 3-
sigma: (1+ 2+ 3+ 3-)(1- 2-)
";

    #[test]
    fn parses_with_default_pairing() {
        let parsed = parse(THREE_EDGE).unwrap();
        assert_eq!(parsed.graph.iota().apply(&h("1+")), h("1-"));
        assert_eq!(parsed.graph.sigma().apply(&h("3-")), h("1+"));
        assert!(parsed.grading.is_none());
    }

    #[test]
    fn serialization_is_canonical_and_stable() {
        let parsed = parse(THREE_EDGE).unwrap();
        let text = serialize(&parsed.graph, None);
        assert_eq!(text, THREE_EDGE);
        let again = parse(&text).unwrap();
        assert_eq!(again.graph, parsed.graph);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "\
# a comment
halfedges: 1+ 1-   # trailing comment

sigma: (1+ 1-)
";
        let parsed = parse(text).unwrap();
        assert_eq!(parsed.graph.sigma().apply(&h("1+")), h("1-"));
    }

    #[test]
    fn explicit_pairing_and_grading_round_trip() {
        let text = "\
halfedges: a b c d
iota: (a c)(b d)
sigma: (a b)
grading: a=1 b=0 c=0 d=1
";
        let parsed = parse(text).unwrap();
        let grading = parsed.grading.clone().unwrap();
        assert_eq!(grading.degree(&h("a")), 1);
        assert_eq!(serialize(&parsed.graph, Some(&grading)), text);
    }

    #[test]
    fn grading_defaults_missing_tokens_to_zero() {
        let text = "\
halfedges: 1+ 1-
sigma: (1+ 1-)
grading: 1+=1
";
        let parsed = parse(text).unwrap();
        assert_eq!(parsed.grading.unwrap().degree(&h("1-")), 0);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let dup = "halfedges: 1+ 1- 1+\nsigma:\n";
        assert_eq!(
            parse(dup).unwrap_err().to_string(),
            "line 1: duplicate token 1+"
        );
        let unknown = "halfedges: 1+ 1-\nsigma: (1+ 5+)\n";
        assert_eq!(
            parse(unknown).unwrap_err().to_string(),
            "line 2: unknown half-edge 5+"
        );
        let fixes = "halfedges: 1+ 1- 2+ 2-\niota: (1+ 1-)\nsigma:\n";
        assert_eq!(
            parse(fixes).unwrap_err().to_string(),
            "line 2: pairing fixes 2+"
        );
        let not_involution = "halfedges: a b c d\niota: (a b c d)\nsigma:\n";
        assert!(parse(not_involution)
            .unwrap_err()
            .to_string()
            .starts_with("line 2:"));
        let bad_grading = "halfedges: 1+ 1-\nsigma:\ngrading: 9+=1\n";
        assert_eq!(
            parse(bad_grading).unwrap_err().to_string(),
            "line 3: unknown half-edge 9+"
        );
        let no_partner = "halfedges: 1+ 2-\nsigma:\n";
        assert_eq!(
            parse(no_partner).unwrap_err().to_string(),
            "line 1: no default partner for token 1+"
        );
        let missing = "sigma: (1+ 1-)\n";
        assert_eq!(
            parse(missing).unwrap_err().to_string(),
            "missing halfedges directive"
        );
        let dup_directive = "halfedges: 1+ 1-\nsigma:\nsigma: (1+ 1-)\n";
        assert_eq!(
            parse(dup_directive).unwrap_err().to_string(),
            "line 3: duplicate directive \"sigma\""
        );
    }

    #[test]
    fn missing_sigma_line_means_identity() {
        let parsed = parse("halfedges: 1+ 1-\n").unwrap();
        assert!(parsed.graph.sigma().is_identity());
        // Canonical form always writes the sigma line.
        assert_eq!(serialize(&parsed.graph, None), "halfedges: 1+ 1-\nsigma:\n");
    }

    #[test]
    fn empty_document_is_the_empty_graph() {
        let parsed = parse("halfedges:\n").unwrap();
        assert_eq!(parsed.graph.ground().len(), 0);
        assert_eq!(serialize(&parsed.graph, None), "halfedges:\nsigma:\n");
    }

    #[test]
    fn nondefault_pairing_is_serialized() {
        let text = "\
halfedges: a b c d
iota: (a c)(b d)
sigma: (a b)
";
        let parsed = parse(text).unwrap();
        assert_eq!(serialize(&parsed.graph, None), text);
    }

    #[test]
    fn cut_and_label_files() {
        let cut = parse_cut_file("# cut\na1\n1-\n").unwrap();
        assert_eq!(cut, vec!["a1", "1-"]);
        assert!(parse_cut_file("a1\na1\n").is_err());
        assert!(parse_cut_file("a1 a2\n").is_err());
        let labels = parse_labels_file("1+=alpha\n2+ = beta\n").unwrap();
        assert_eq!(labels["1+"], "alpha");
        assert_eq!(labels["2+"], "beta");
        assert!(parse_labels_file("1+=alpha\n1+=beta\n").is_err());
        assert!(parse_labels_file("oops\n").is_err());
    }
}
