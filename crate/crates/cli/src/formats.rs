//! Text formats: edge lists, positive DNF files, gadget provenance maps and
//! path catalogs.

use std::fmt;
use std::fmt::Write as _;

use vdgame_core::kernel::{parse_word, word_string, Decoration, PathCatalog};
use vdgame_core::reductions::{DnfFormula, Gadget};
use vdgame_core::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormatErrorKind {
    MalformedHeader,
    MalformedLine,
    IndexOutOfRange,
    SelfLoop,
    DuplicateEdge,
    WrongLineCount,
    InvalidContent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormatError {
    pub kind: FormatErrorKind,
    /// 1-based; 0 when the problem is the file as a whole.
    pub line: usize,
    pub message: String,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line > 0 {
            write!(f, "line {}: {}", self.line, self.message)
        } else {
            f.write_str(&self.message)
        }
    }
}

impl std::error::Error for FormatError {}

fn fail<T>(kind: FormatErrorKind, line: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError { kind, line, message: message.into() })
}

/// Non-comment, non-blank lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn numbers(line: &str) -> Option<Vec<usize>> {
    line.split_whitespace().map(|t| t.parse().ok()).collect()
}

/// Reads "n m" followed by exactly `m` lines "u v".
pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    use FormatErrorKind::*;
    let mut lines = content_lines(text);
    let Some((hl, header)) = lines.next() else {
        return fail(MalformedHeader, 0, "missing \"n m\" header");
    };
    let (n, m) = match numbers(header).as_deref() {
        Some(&[n, m]) => (n, m),
        _ => return fail(MalformedHeader, hl, format!("expected \"n m\", got {header:?}")),
    };
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut last = hl;
    for (ln, line) in lines {
        last = ln;
        let (u, v) = match numbers(line).as_deref() {
            Some(&[u, v]) => (u, v),
            _ => return fail(MalformedLine, ln, format!("expected \"u v\", got {line:?}")),
        };
        if edges.len() == m {
            return fail(WrongLineCount, ln, format!("more than the declared {m} edges"));
        }
        if u >= n || v >= n {
            return fail(IndexOutOfRange, ln, format!("vertex {} out of range for n = {n}", u.max(v)));
        }
        if u == v {
            return fail(SelfLoop, ln, format!("self-loop on vertex {u}"));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return fail(DuplicateEdge, ln, format!("duplicate edge {u} {v}"));
        }
        edges.push((u, v));
    }
    if edges.len() < m {
        return fail(WrongLineCount, last, format!("declared {m} edges, found {}", edges.len()));
    }
    Graph::from_edges(n, &edges).or_else(|e| fail(InvalidContent, 0, e.to_string()))
}

/// Header, then sorted edges `u v` with `u < v`.
pub fn write_graph(g: &Graph) -> String {
    let mut edges = g.edge_list();
    edges.sort_unstable();
    let mut out = format!("{} {}\n", g.vertex_count(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Reads "p dnf n m" and `m` clause lines of 0-based variables.
pub fn parse_dnf(text: &str) -> Result<DnfFormula, FormatError> {
    use FormatErrorKind::*;
    let mut lines = content_lines(text);
    let Some((hl, header)) = lines.next() else {
        return fail(MalformedHeader, 0, "missing \"p dnf n m\" header");
    };
    let parts: Vec<&str> = header.split_whitespace().collect();
    let (n, m) = match parts.as_slice() {
        ["p", "dnf", n, m] => match (n.parse::<usize>(), m.parse::<usize>()) {
            (Ok(n), Ok(m)) => (n, m),
            _ => return fail(MalformedHeader, hl, format!("bad counts in {header:?}")),
        },
        _ => return fail(MalformedHeader, hl, format!("expected \"p dnf n m\", got {header:?}")),
    };
    let mut clauses = Vec::with_capacity(m);
    let mut last = hl;
    for (ln, line) in lines {
        last = ln;
        let Some(vars) = numbers(line) else {
            return fail(MalformedLine, ln, format!("expected variable indices, got {line:?}"));
        };
        if clauses.len() == m {
            return fail(WrongLineCount, ln, format!("more than the declared {m} clauses"));
        }
        if let Some(&x) = vars.iter().find(|&&x| x >= n) {
            return fail(IndexOutOfRange, ln, format!("variable {x} out of range for n = {n}"));
        }
        clauses.push(vars);
    }
    if clauses.len() < m {
        return fail(WrongLineCount, last, format!("declared {m} clauses, found {}", clauses.len()));
    }
    DnfFormula::new(n, clauses).or_else(|e| fail(InvalidContent, 0, e.to_string()))
}

pub fn write_dnf(f: &DnfFormula) -> String {
    let mut out = format!("p dnf {} {}\n", f.variable_count(), f.clauses().len());
    for c in f.clauses() {
        let line: Vec<String> = c.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

/// Tab-separated `vertex role source` lines for a gadget.
pub fn write_map(g: &Gadget) -> String {
    g.provenance_map()
}

const CATALOG_MAGIC: &str = "vdgame-catalog 1";

/// Versioned text table: magic line, `lmax N`, `alphabet LETTERS`, then
/// `key<TAB>word` per entry.
pub fn write_catalog(cat: &PathCatalog) -> String {
    let mut out = format!("{CATALOG_MAGIC}\nlmax {}\nalphabet {}\n", cat.l_max(), word_string(cat.alphabet()));
    for (key, word) in cat.entries() {
        let _ = writeln!(out, "{}\t{}", key.encode(), word_string(word));
    }
    out
}

/// Reads a catalog written by [`write_catalog`]. Every key is recomputed from
/// its word, so a stale or edited file is rejected.
pub fn parse_catalog(text: &str) -> Result<PathCatalog, FormatError> {
    use FormatErrorKind::*;
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    match lines.next() {
        Some((_, l)) if l.trim() == CATALOG_MAGIC => {}
        _ => return fail(MalformedHeader, 1, format!("expected {CATALOG_MAGIC:?}")),
    }
    let mut field = |name: &str| -> Result<String, FormatError> {
        match lines.next() {
            Some((ln, l)) => match l.trim().strip_prefix(name).map(str::trim) {
                Some(v) if !v.is_empty() => Ok(v.to_string()),
                _ => fail(MalformedHeader, ln, format!("expected \"{name} ...\", got {l:?}")),
            },
            None => fail(MalformedHeader, 0, format!("missing \"{name}\" line")),
        }
    };
    let lmax = field("lmax")?;
    let l_max: usize = lmax.parse().or_else(|_| fail(MalformedHeader, 2, format!("bad lmax {lmax:?}")))?;
    let alpha = field("alphabet")?;
    let alphabet: Vec<Decoration> =
        parse_word(&alpha).map_or_else(|| fail(MalformedHeader, 3, format!("bad alphabet {alpha:?}")), Ok)?;
    let mut entries = Vec::new();
    for (ln, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let Some((key, word)) = line.split_once('\t') else {
            return fail(MalformedLine, ln, "expected \"key<TAB>word\"");
        };
        let Some(word) = parse_word(word.trim()) else {
            return fail(MalformedLine, ln, format!("bad word {word:?}"));
        };
        entries.push((key.to_string(), word));
    }
    PathCatalog::from_entries(l_max, &alphabet, &entries).or_else(|e| fail(InvalidContent, 0, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_examples() {
        let p3 = parse_graph("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(p3.edge_list(), [(0, 1), (1, 2)]);
        assert_eq!(parse_graph("1 0\n").unwrap().vertex_count(), 1);
        assert_eq!(parse_graph("2 1\n0 0\n").unwrap_err().kind, FormatErrorKind::SelfLoop);
        assert_eq!(parse_graph("# c\n\n2 1\n0 1\n").unwrap().edge_count(), 1);
        let err = parse_graph("3 2\n0 1\n1 0\n").unwrap_err();
        assert_eq!((err.kind, err.line), (FormatErrorKind::DuplicateEdge, 3));
        assert_eq!(parse_graph("3 1\n0 3\n").unwrap_err().kind, FormatErrorKind::IndexOutOfRange);
        assert_eq!(parse_graph("3\n").unwrap_err().kind, FormatErrorKind::MalformedHeader);
        assert_eq!(parse_graph("3 2\n0 1\n").unwrap_err().kind, FormatErrorKind::WrongLineCount);
        assert_eq!(parse_graph("3 1\n0 x\n").unwrap_err().kind, FormatErrorKind::MalformedLine);
    }

    #[test]
    fn writer_is_canonical() {
        let g = parse_graph("4 3\n# star\n3 0\n0 2\n1 0\n").unwrap();
        assert_eq!(write_graph(&g), "4 3\n0 1\n0 2\n0 3\n");
        assert_eq!(write_graph(&parse_graph(&write_graph(&g)).unwrap()), write_graph(&g));
    }

    #[test]
    fn dnf_round_trip() {
        let f = parse_dnf("c ignored? no\n").unwrap_err();
        assert_eq!(f.kind, FormatErrorKind::MalformedHeader);
        let f = parse_dnf("# two clauses\np dnf 3 2\n0 1\n2\n").unwrap();
        assert_eq!(f.clauses(), [vec![0, 1], vec![2]]);
        assert_eq!(write_dnf(&f), "p dnf 3 2\n0 1\n2\n");
        assert_eq!(parse_dnf("p dnf 2 1\n0 2\n").unwrap_err().kind, FormatErrorKind::IndexOutOfRange);
    }

    #[test]
    fn catalog_round_trip() {
        let cat = PathCatalog::build(5, &[Decoration::Bare, Decoration::Leaf]).unwrap();
        let text = write_catalog(&cat);
        let back = parse_catalog(&text).unwrap();
        assert_eq!(back.len(), cat.len());
        assert_eq!(write_catalog(&back), text);
        let mut lines: Vec<&str> = text.lines().collect();
        let (key, _) = lines[3].split_once('\t').unwrap();
        let edited = format!("{key}\t1111");
        lines[3] = &edited;
        assert!(parse_catalog(&lines.join("\n")).is_err());
    }
}
