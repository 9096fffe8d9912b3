//! The line-oriented group definition format. See `docs/group-format.md`
//! for the grammar.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use crate::error::{GroupError, Result};
use crate::group::{ActionSpec, BackendKind, Elem, Group, Limits, Subgroup};
use crate::perm::Permutation;

pub const FORMAT_VERSION: u32 = 1;

/// A product of generator powers; empty for the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<(String, i64)>);

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn parse(text: &str) -> std::result::Result<Word, String> {
        let text = text.trim();
        if text == "1" {
            return Ok(Word::identity());
        }
        if text.is_empty() {
            return Err("empty word".into());
        }
        let mut factors = Vec::new();
        for factor in text.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let e: i64 = e
                        .trim()
                        .parse()
                        .map_err(|_| format!("bad exponent in {factor:?}"))?;
                    (n.trim(), e)
                }
                None => (factor, 1),
            };
            if !is_identifier(name) {
                return Err(format!("bad generator name {name:?}"));
            }
            factors.push((name.to_string(), exp));
        }
        Ok(Word(factors))
    }

    pub fn of_element(group: &Group, e: Elem) -> Word {
        let names = group.generator_names();
        Word(
            group
                .word_of(e)
                .into_iter()
                .map(|(g, k)| (names[g].clone(), k))
                .collect(),
        )
    }

    pub fn evaluate(&self, group: &Group) -> Result<Elem> {
        let mut acc = group.identity();
        for (name, exp) in &self.0 {
            let g = group
                .generator_by_name(name)
                .ok_or_else(|| GroupError::Validation(format!("undeclared generator {name:?}")))?;
            acc = group.mul(acc, group.pow(g, *exp));
        }
        Ok(acc)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (name, exp)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *exp == 1 {
                f.write_str(name)?;
            } else {
                write!(f, "{name}^{exp}")?;
            }
        }
        Ok(())
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn is_subgroup_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.')
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DocumentBody {
    Permutation {
        degree: usize,
        generators: Vec<(String, Permutation)>,
    },
    Table {
        generators: Vec<(String, u32)>,
        rows: Vec<Vec<u32>>,
    },
    Semidirect {
        normal: Box<GroupDocument>,
        acting: Box<GroupDocument>,
        /// Per acting generator: images of the normal generators.
        action: Vec<(String, Vec<Word>)>,
    },
    QuotientRef {
        parent: Box<GroupDocument>,
        kernel: Vec<Word>,
    },
}

impl DocumentBody {
    pub fn kind(&self) -> &'static str {
        match self {
            DocumentBody::Permutation { .. } => "permutation",
            DocumentBody::Table { .. } => "table",
            DocumentBody::Semidirect { .. } => "semidirect",
            DocumentBody::QuotientRef { .. } => "quotient-ref",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupDocument {
    pub format_version: u32,
    pub body: DocumentBody,
    /// Named subgroups by generator words, in declaration order.
    pub subgroups: Vec<(String, Vec<Word>)>,
    pub provenance: Option<String>,
}

/// A built document: the group and its named subgroups.
#[derive(Clone, Debug)]
pub struct LoadedGroup {
    pub group: Group,
    pub subgroups: BTreeMap<String, Subgroup>,
}

impl LoadedGroup {
    pub fn subgroup(&self, name: &str) -> Result<&Subgroup> {
        self.subgroups
            .get(name)
            .ok_or_else(|| GroupError::Validation(format!("no subgroup named {name:?}")))
    }
}

struct Line<'a> {
    number: usize,
    raw: &'a str,
    text: &'a str,
}

impl<'a> Line<'a> {
    fn column_of(&self, part: &str) -> usize {
        let base = self.raw.as_ptr() as usize;
        let at = part.as_ptr() as usize;
        if at >= base && at <= base + self.raw.len() {
            at - base + 1
        } else {
            1
        }
    }

    fn error(&self, part: &str, message: impl Into<String>) -> GroupError {
        GroupError::Parse {
            line: self.number,
            column: self.column_of(part),
            message: message.into(),
        }
    }

    /// `(keyword, rest)` with `rest` trimmed.
    fn split(&self) -> (&'a str, &'a str) {
        match self.text.split_once(char::is_whitespace) {
            Some((k, rest)) => (k, rest.trim()),
            None => (self.text, &self.text[self.text.len()..]),
        }
    }
}

fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let uncommented = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let text = uncommented.trim();
            (!text.is_empty()).then_some(Line {
                number: i + 1,
                raw,
                text,
            })
        })
        .collect()
}

fn parse_number<T: std::str::FromStr>(line: &Line, token: &str, what: &str) -> Result<T> {
    token
        .parse()
        .map_err(|_| line.error(token, format!("expected {what}, found {token:?}")))
}

fn parse_word_list(line: &Line, text: &str) -> Result<Vec<Word>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|w| Word::parse(w).map_err(|m| line.error(w.trim_start(), m)))
        .collect()
}

fn unexpected_end(context: &str) -> GroupError {
    GroupError::Parse {
        line: 0,
        column: 0,
        message: format!("unexpected end of input {context}"),
    }
}

#[derive(Default)]
struct Partial {
    format_version: Option<u32>,
    kind: Option<String>,
    degree: Option<usize>,
    perm_generators: Vec<(String, Permutation)>,
    table_order: Option<usize>,
    table_generators: Vec<(String, u32)>,
    rows: Vec<Vec<u32>>,
    nested: BTreeMap<String, GroupDocument>,
    action: Vec<(String, Vec<Word>)>,
    kernel: Option<Vec<Word>>,
    subgroups: Vec<(String, Vec<Word>)>,
    provenance: Option<String>,
}

/// Parses a complete document.
pub fn parse_document(text: &str) -> Result<GroupDocument> {
    let lines = lines(text);
    let mut pos = 0;
    let doc = parse_section(&lines, &mut pos, None)?;
    if doc.format_version == 0 {
        let first = lines.first().ok_or_else(|| unexpected_end("before format_version"))?;
        return Err(first.error(first.text, "document must start with format_version"));
    }
    Ok(doc)
}

fn parse_section(lines: &[Line], pos: &mut usize, terminator: Option<&str>) -> Result<GroupDocument> {
    let mut p = Partial::default();
    let mut last_line: Option<&Line> = None;
    loop {
        let Some(line) = lines.get(*pos) else {
            if let Some(t) = terminator {
                return Err(unexpected_end(&format!("inside section {t:?}")));
            }
            break;
        };
        *pos += 1;
        last_line = Some(line);
        let (keyword, rest) = line.split();
        let need_kind = |k: &str| -> Result<()> {
            match p.kind.as_deref() {
                Some(found) if found == k => Ok(()),
                _ => Err(line.error(keyword, format!("{keyword:?} is only valid for kind {k}"))),
            }
        };
        match keyword {
            "format_version" => {
                if terminator.is_some() {
                    return Err(line.error(keyword, "format_version belongs to the top-level document"));
                }
                let v: u32 = parse_number(line, rest, "version number")?;
                if v != FORMAT_VERSION {
                    return Err(line.error(rest, format!("unsupported format_version {v}")));
                }
                p.format_version = Some(v);
            }
            "kind" => {
                if p.kind.is_some() {
                    return Err(line.error(keyword, "kind declared twice"));
                }
                if !matches!(rest, "permutation" | "table" | "semidirect" | "quotient-ref") {
                    return Err(line.error(rest, format!("unknown kind {rest:?}")));
                }
                p.kind = Some(rest.to_string());
            }
            "degree" => {
                need_kind("permutation")?;
                p.degree = Some(parse_number(line, rest, "degree")?);
            }
            "order" => {
                need_kind("table")?;
                p.table_order = Some(parse_number(line, rest, "order")?);
            }
            "generator" => {
                let (name, value) = rest
                    .split_once(char::is_whitespace)
                    .map(|(n, v)| (n, v.trim()))
                    .unwrap_or((rest, ""));
                if !is_identifier(name) {
                    return Err(line.error(name, format!("bad generator name {name:?}")));
                }
                match p.kind.as_deref() {
                    Some("permutation") => {
                        let degree = p
                            .degree
                            .ok_or_else(|| line.error(keyword, "degree must precede generators"))?;
                        let perm = Permutation::parse_cycles(degree, value).map_err(|m| line.error(value, m))?;
                        p.perm_generators.push((name.to_string(), perm));
                    }
                    Some("table") => {
                        let index: u32 = parse_number(line, value, "element index")?;
                        p.table_generators.push((name.to_string(), index));
                    }
                    _ => {
                        return Err(line.error(keyword, "generator lines need kind permutation or table"));
                    }
                }
            }
            "row" => {
                need_kind("table")?;
                let row = rest
                    .split_whitespace()
                    .map(|t| parse_number(line, t, "element index"))
                    .collect::<Result<Vec<u32>>>()?;
                p.rows.push(row);
            }
            "begin" => {
                let section = rest;
                let expected_kind = match section {
                    "normal" | "acting" => "semidirect",
                    "parent" => "quotient-ref",
                    _ => return Err(line.error(rest, format!("unknown section {section:?}"))),
                };
                need_kind(expected_kind)?;
                if p.nested.contains_key(section) {
                    return Err(line.error(rest, format!("section {section:?} repeated")));
                }
                let mut inner = parse_section(lines, pos, Some(section))?;
                inner.format_version = FORMAT_VERSION;
                p.nested.insert(section.to_string(), inner);
            }
            "end" => {
                return match terminator {
                    Some(t) if t == rest => finish(p, line, true),
                    Some(t) => Err(line.error(rest, format!("expected \"end {t}\""))),
                    None => Err(line.error(keyword, "\"end\" without matching \"begin\"")),
                };
            }
            "action" => {
                need_kind("semidirect")?;
                let (name, images) = rest
                    .split_once(char::is_whitespace)
                    .map(|(n, v)| (n, v.trim()))
                    .unwrap_or((rest, ""));
                if !is_identifier(name) {
                    return Err(line.error(name, format!("bad generator name {name:?}")));
                }
                let words = images
                    .split_whitespace()
                    .map(|w| Word::parse(w).map_err(|m| line.error(w, m)))
                    .collect::<Result<Vec<_>>>()?;
                p.action.push((name.to_string(), words));
            }
            "kernel" => {
                need_kind("quotient-ref")?;
                p.kernel = Some(parse_word_list(line, rest)?);
            }
            "subgroup" => {
                let (name, words) = rest
                    .split_once(char::is_whitespace)
                    .map(|(n, v)| (n, v.trim()))
                    .unwrap_or((rest, ""));
                if !is_subgroup_name(name) {
                    return Err(line.error(name, format!("bad subgroup name {name:?}")));
                }
                if p.subgroups.iter().any(|(n, _)| n == name) {
                    return Err(line.error(name, format!("subgroup {name:?} declared twice")));
                }
                p.subgroups.push((name.to_string(), parse_word_list(line, words)?));
            }
            "provenance" => {
                p.provenance = Some(rest.to_string());
            }
            other => return Err(line.error(other, format!("unknown keyword {other:?}"))),
        }
    }
    match last_line {
        Some(line) => finish(p, line, false),
        None => Err(unexpected_end("in empty document")),
    }
}

fn finish(mut p: Partial, at: &Line, nested: bool) -> Result<GroupDocument> {
    let kind = p.kind.take().ok_or_else(|| at.error(at.text, "missing kind"))?;
    let body = match kind.as_str() {
        "permutation" => DocumentBody::Permutation {
            degree: p.degree.ok_or_else(|| at.error(at.text, "missing degree"))?,
            generators: p.perm_generators,
        },
        "table" => {
            let order = p.table_order.ok_or_else(|| at.error(at.text, "missing order"))?;
            if p.rows.len() != order || p.rows.iter().any(|r| r.len() != order) {
                return Err(at.error(at.text, format!("table of order {order} needs {order} rows of {order} entries")));
            }
            DocumentBody::Table {
                generators: p.table_generators,
                rows: p.rows,
            }
        }
        "semidirect" => DocumentBody::Semidirect {
            normal: Box::new(p.nested.remove("normal").ok_or_else(|| at.error(at.text, "missing normal section"))?),
            acting: Box::new(p.nested.remove("acting").ok_or_else(|| at.error(at.text, "missing acting section"))?),
            action: p.action,
        },
        "quotient-ref" => DocumentBody::QuotientRef {
            parent: Box::new(p.nested.remove("parent").ok_or_else(|| at.error(at.text, "missing parent section"))?),
            kernel: p.kernel.ok_or_else(|| at.error(at.text, "missing kernel"))?,
        },
        _ => unreachable!("kind validated when read"),
    };
    Ok(GroupDocument {
        format_version: if nested { FORMAT_VERSION } else { p.format_version.unwrap_or(0) },
        body,
        subgroups: p.subgroups,
        provenance: p.provenance,
    })
}

impl GroupDocument {
    /// Canonical text; `parse_document` of the result reproduces `self`.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        writeln!(out, "format_version {}", self.format_version).expect("string write");
        self.write_body(&mut out, "");
        out
    }

    fn write_body(&self, out: &mut String, indent: &str) {
        let mut line = |s: String| {
            out.push_str(indent);
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("kind {}", self.body.kind()));
        match &self.body {
            DocumentBody::Permutation { degree, generators } => {
                line(format!("degree {degree}"));
                for (name, perm) in generators {
                    line(format!("generator {name} {perm}"));
                }
            }
            DocumentBody::Table { generators, rows } => {
                line(format!("order {}", rows.len()));
                for (name, index) in generators {
                    line(format!("generator {name} {index}"));
                }
                for row in rows {
                    let cells: Vec<String> = row.iter().map(u32::to_string).collect();
                    line(format!("row {}", cells.join(" ")));
                }
            }
            DocumentBody::Semidirect { .. } | DocumentBody::QuotientRef { .. } => {}
        }
        let nested_indent = format!("{indent}  ");
        match &self.body {
            DocumentBody::Semidirect { normal, acting, action } => {
                out.push_str(&format!("{indent}begin normal\n"));
                normal.write_body(out, &nested_indent);
                out.push_str(&format!("{indent}end normal\n{indent}begin acting\n"));
                acting.write_body(out, &nested_indent);
                out.push_str(&format!("{indent}end acting\n"));
                for (name, images) in action {
                    let words: Vec<String> = images.iter().map(Word::to_string).collect();
                    out.push_str(&format!("{indent}action {name} {}\n", words.join(" ")));
                }
            }
            DocumentBody::QuotientRef { parent, kernel } => {
                out.push_str(&format!("{indent}begin parent\n"));
                parent.write_body(out, &nested_indent);
                out.push_str(&format!("{indent}end parent\n"));
                let words: Vec<String> = kernel.iter().map(Word::to_string).collect();
                out.push_str(&format!("{indent}kernel {}\n", words.join(", ")));
            }
            _ => {}
        }
        for (name, words) in &self.subgroups {
            let words: Vec<String> = words.iter().map(Word::to_string).collect();
            out.push_str(&format!("{indent}subgroup {name} {}\n", words.join(", ")).replace(" \n", "\n"));
        }
        if let Some(p) = &self.provenance {
            out.push_str(&format!("{indent}provenance {p}\n"));
        }
    }

    /// Describes `group` by the construction that produced it.
    pub fn from_group(group: &Group, subgroups: &[(String, Subgroup)], provenance: Option<String>) -> Result<GroupDocument> {
        let body = body_of(group)?;
        let subgroups = subgroups
            .iter()
            .map(|(name, h)| {
                group.owns(h)?;
                let words = h.generators().iter().map(|&x| Word::of_element(group, x)).collect();
                Ok((name.clone(), words))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupDocument {
            format_version: FORMAT_VERSION,
            body,
            subgroups,
            provenance,
        })
    }

    pub fn build(&self) -> Result<LoadedGroup> {
        self.build_with_limits(Limits::global())
    }

    pub fn build_with_limits(&self, limits: Limits) -> Result<LoadedGroup> {
        let group = build_body(&self.body, limits)?;
        let mut subgroups = BTreeMap::new();
        for (name, words) in &self.subgroups {
            let elems = words
                .iter()
                .map(|w| w.evaluate(&group))
                .collect::<Result<Vec<_>>>()?;
            subgroups.insert(name.clone(), group.generate(&elems)?);
        }
        Ok(LoadedGroup { group, subgroups })
    }
}

fn nested(group: &Group) -> Result<Box<GroupDocument>> {
    Ok(Box::new(GroupDocument {
        format_version: FORMAT_VERSION,
        body: body_of(group)?,
        subgroups: Vec::new(),
        provenance: None,
    }))
}

fn body_of(group: &Group) -> Result<DocumentBody> {
    let names = group.generator_names();
    Ok(match group.backend_kind() {
        BackendKind::Permutation => DocumentBody::Permutation {
            degree: group.permutation_degree().expect("permutation backend"),
            generators: group
                .generators()
                .iter()
                .zip(names)
                .map(|(&g, n)| (n.clone(), group.permutation(g).expect("permutation backend").clone()))
                .collect(),
        },
        BackendKind::Table => DocumentBody::Table {
            generators: group
                .generators()
                .iter()
                .zip(names)
                .map(|(g, n)| (n.clone(), g.index() as u32))
                .collect(),
            rows: group.table_rows(),
        },
        BackendKind::Semidirect => {
            let (normal, acting) = group.semidirect_factors().expect("semidirect backend");
            let spec = group.semidirect_action().expect("semidirect backend");
            let action = acting
                .generator_names()
                .iter()
                .zip(spec.images())
                .map(|(n, imgs)| (n.clone(), imgs.iter().map(|&x| Word::of_element(normal, x)).collect()))
                .collect();
            DocumentBody::Semidirect {
                normal: nested(normal)?,
                acting: nested(acting)?,
                action,
            }
        }
        BackendKind::Quotient => {
            let (parent, kernel) = group.quotient_source().expect("quotient backend");
            DocumentBody::QuotientRef {
                parent: nested(parent)?,
                kernel: kernel.generators().iter().map(|&x| Word::of_element(parent, x)).collect(),
            }
        }
    })
}

fn build_body(body: &DocumentBody, limits: Limits) -> Result<Group> {
    match body {
        DocumentBody::Permutation { degree, generators } => {
            check_unique(generators.iter().map(|(n, _)| n))?;
            Group::from_permutations_named(
                *degree,
                generators.iter().map(|(_, p)| p.clone()).collect(),
                generators.iter().map(|(n, _)| n.clone()).collect(),
                limits,
            )
        }
        DocumentBody::Table { generators, rows } => {
            check_unique(generators.iter().map(|(n, _)| n))?;
            let gens = generators.iter().map(|&(_, i)| Elem::new(i as usize)).collect();
            let names = generators.iter().map(|(n, _)| n.clone()).collect();
            Group::from_table_with_limits(rows, Some(gens), Some(names), limits)
        }
        DocumentBody::Semidirect { normal, acting, action } => {
            let n = build_body(&normal.body, limits)?;
            let h = build_body(&acting.body, limits)?;
            let mut images = Vec::new();
            for name in h.generator_names() {
                let (_, words) = action
                    .iter()
                    .find(|(a, _)| a == name)
                    .ok_or_else(|| GroupError::Validation(format!("no action line for acting generator {name:?}")))?;
                if words.len() != n.generators().len() {
                    return Err(GroupError::Validation(format!(
                        "action for {name:?} gives {} images for {} normal generators",
                        words.len(),
                        n.generators().len()
                    )));
                }
                images.push(words.iter().map(|w| w.evaluate(&n)).collect::<Result<Vec<_>>>()?);
            }
            if let Some((extra, _)) = action.iter().find(|(a, _)| h.generator_by_name(a).is_none()) {
                return Err(GroupError::Validation(format!("action line for unknown generator {extra:?}")));
            }
            Ok(Group::semidirect(&n, &h, &ActionSpec::new(images))?.group)
        }
        DocumentBody::QuotientRef { parent, kernel } => {
            let g = build_body(&parent.body, limits)?;
            let elems = kernel.iter().map(|w| w.evaluate(&g)).collect::<Result<Vec<_>>>()?;
            let k = g.generate(&elems)?;
            match g.quotient(&k) {
                Err(GroupError::NotNormal) => Err(GroupError::Validation("kernel is not a normal subgroup".into())),
                other => Ok(other?.group),
            }
        }
    }
}

fn check_unique<'a>(names: impl Iterator<Item = &'a String>) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for n in names {
        if !seen.insert(n) {
            return Err(GroupError::Validation(format!("generator {n:?} declared twice")));
        }
    }
    Ok(())
}

/// Parses and builds in one step.
pub fn parse_group(text: &str) -> Result<LoadedGroup> {
    parse_document(text)?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    const S3: &str = "format_version 1\nkind permutation\ndegree 3\ngenerator a (1 2)\ngenerator b (1 2 3)\nsubgroup C3 b\n";

    #[test]
    fn parses_s3() {
        let loaded = parse_group(S3).unwrap();
        assert_eq!(loaded.group.order(), 6);
        assert_eq!(loaded.subgroup("C3").unwrap().order(), 3);
    }

    #[test]
    fn empty_generator_list_is_trivial() {
        let loaded = parse_group("format_version 1\nkind permutation\ndegree 4\n").unwrap();
        assert_eq!(loaded.group.order(), 1);
    }

    #[test]
    fn words_round_trip() {
        for text in ["1", "a", "a^2*b", "g4^-1*b^3"] {
            assert_eq!(Word::parse(text).unwrap().to_string(), text);
        }
        assert!(Word::parse("a^x").is_err());
        assert!(Word::parse("2a").is_err());
    }

    #[test]
    fn reports_positions() {
        let err = parse_document("format_version 1\nkind permutation\ndegree 3\ngenerator a (1 4)\n").unwrap_err();
        match err {
            GroupError::Parse { line, column, .. } => assert_eq!((line, column), (4, 13)),
            other => panic!("unexpected {other:?}"),
        }
        let err = parse_document("format_version 1\nkind lattice\n").unwrap_err();
        assert!(matches!(err, GroupError::Parse { line: 2, column: 6, .. }));
    }

    #[test]
    fn unknown_generator_in_subgroup() {
        let text = S3.replace("subgroup C3 b", "subgroup C3 z");
        assert!(matches!(parse_group(&text), Err(GroupError::Validation(_))));
    }

    #[test]
    fn nested_documents() {
        let text = "\
format_version 1
kind quotient-ref
begin parent
  kind semidirect
  begin normal
    kind permutation
    degree 3
    generator a (1 2 3)
  end normal
  begin acting
    kind permutation
    degree 2
    generator t (1 2)
  end acting
  action t a^2
end parent
kernel a
subgroup Q t
";
        let doc = parse_document(text).unwrap();
        assert_eq!(parse_document(&doc.serialize()).unwrap(), doc);
        let loaded = doc.build().unwrap();
        assert_eq!(loaded.group.order(), 2);
        assert_eq!(loaded.subgroup("Q").unwrap().order(), 2);
    }

    #[test]
    fn unbalanced_sections() {
        let text = "format_version 1\nkind semidirect\nbegin normal\nkind permutation\ndegree 2\n";
        assert!(matches!(parse_document(text), Err(GroupError::Parse { .. })));
        let text = "format_version 1\nkind table\norder 1\nrow 0\nend normal\n";
        assert!(matches!(parse_document(text), Err(GroupError::Parse { line: 5, .. })));
    }
}
