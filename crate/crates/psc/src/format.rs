//! Line-oriented text formats: group files, poset and complex exports.
//!
//! Every file starts with a `format <name> v1` line. Points in cycle
//! notation are 1-based; poset element and complex vertex indices are 0-based.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::path::{Path, PathBuf};

use psc_core::group::Construction;
use psc_core::topology::{order_complex, FinitePoset};
use psc_core::{Group, GroupSpec, Limits, Permutation, SimplicialComplex, SubgroupPoset};

/// A parse error located at `path:line:column` (both 1-based).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{}:{line}:{column}: {message}", path.display())]
pub struct ParseError {
    pub path: PathBuf,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// Markers attached to a group header.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    /// Only used as a product factor; not analysed by corpus runs.
    Helper,
    /// Run only with `--stretch`.
    Stretch,
    /// The os-index claim must find `i_SLV(1) = 1`.
    OsIndexOne,
}

impl Tag {
    pub const ALL: [Tag; 3] = [Tag::Helper, Tag::Stretch, Tag::OsIndexOne];

    pub fn name(self) -> &'static str {
        match self {
            Tag::Helper => "helper",
            Tag::Stretch => "stretch",
            Tag::OsIndexOne => "os-index-one",
        }
    }
}

/// One named group with its tags and the comment lines directly above it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupEntry {
    pub spec: GroupSpec,
    pub tags: Vec<Tag>,
    /// Comment text without the leading `#`.
    pub comments: Vec<String>,
}

impl GroupEntry {
    pub fn has(&self, tag: Tag) -> bool {
        self.tags.contains(&tag)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupFile {
    pub entries: Vec<GroupEntry>,
    /// Comments after the last entry body.
    pub trailing: Vec<String>,
}

const GROUP_HEADER: &str = "format group v1";
const POSET_HEADER: &str = "format poset v1";
const COMPLEX_HEADER: &str = "format complex v1";

struct Cursor<'a> {
    path: &'a Path,
    line: usize,
    text: &'a str,
}

impl Cursor<'_> {
    fn err(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError { path: self.path.to_path_buf(), line: self.line, column, message: message.into() }
    }

    /// 1-based column of a subslice of the current line.
    fn col(&self, part: &str) -> usize {
        part.as_ptr() as usize - self.text.as_ptr() as usize + 1
    }

    /// Whitespace-separated words with their columns.
    fn words(&self) -> Vec<(usize, &str)> {
        self.text.split_whitespace().map(|w| (self.col(w), w)).collect()
    }
}

/// Numbered non-blank lines after the required header line.
fn body<'a>(path: &'a Path, text: &'a str, header: &str) -> Result<Vec<Cursor<'a>>, ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, t)| Cursor { path, line: i + 1, text: t });
    match lines.next() {
        Some(first) if first.text.trim_end() == header => {}
        Some(first) => return Err(first.err(1, format!("expected `{header}`"))),
        None => return Err(Cursor { path, line: 1, text: "" }.err(1, format!("empty file, expected `{header}`"))),
    }
    Ok(lines.filter(|c| !c.text.trim().is_empty()).collect())
}

fn parse_usize(c: &Cursor<'_>, (col, word): (usize, &str), what: &str) -> Result<usize, ParseError> {
    word.parse().map_err(|_| c.err(col, format!("expected {what}, found `{word}`")))
}

fn parse_perm(c: &Cursor<'_>, col: usize, text: &str, degree: usize) -> Result<Permutation, ParseError> {
    Permutation::parse(text, degree).map_err(|e| match e {
        psc_core::Error::Parse { column, message } => c.err(col + column - 1, message),
        other => c.err(col, other.to_string()),
    })
}

/// Rest of the line after the first `n` words, with its column.
fn rest_after<'a>(c: &Cursor<'a>, n: usize) -> (usize, &'a str) {
    let mut s = c.text;
    for _ in 0..n {
        s = s.trim_start();
        let end = s.find(char::is_whitespace).unwrap_or(s.len());
        s = &s[end..];
    }
    let s = s.trim();
    (if s.is_empty() { c.text.len() + 1 } else { c.col(s) }, s)
}

impl GroupFile {
    pub fn parse(path: &Path, text: &str) -> Result<Self, ParseError> {
        let mut file = GroupFile::default();
        let mut comments: Vec<String> = Vec::new();
        // degrees of explicit and already declared groups, for action parsing
        let mut degrees: BTreeMap<String, usize> = BTreeMap::new();
        let mut current: Option<(Cursor<'_>, GroupEntry, bool)> = None;

        let finish = |cur: Option<(Cursor<'_>, GroupEntry, bool)>, file: &mut GroupFile| {
            if let Some((c, entry, has_body)) = cur {
                if !has_body {
                    return Err(c.err(1, format!("group `{}` has no generators or product", entry.spec.name)));
                }
                file.entries.push(entry);
            }
            Ok(())
        };

        for c in body(path, text, GROUP_HEADER)? {
            let trimmed = c.text.trim_start();
            if let Some(comment) = trimmed.strip_prefix('#') {
                comments.push(comment.trim_end().to_string());
                continue;
            }
            let words = c.words();
            match words[0].1 {
                "group" => {
                    finish(current.take(), &mut file)?;
                    if words.len() < 4 || words[2].1 != "degree" {
                        return Err(c.err(words[0].0, "expected `group <name> degree <n> [tags]`"));
                    }
                    let name = words[1].1.to_string();
                    if degrees.contains_key(&name) {
                        return Err(c.err(words[1].0, format!("group `{name}` defined twice")));
                    }
                    let degree = parse_usize(&c, words[3], "a degree")?;
                    if degree == 0 {
                        return Err(c.err(words[3].0, "degree must be positive"));
                    }
                    let mut tags = Vec::new();
                    for &(col, w) in &words[4..] {
                        let tag = Tag::ALL
                            .into_iter()
                            .find(|t| t.name() == w)
                            .ok_or_else(|| c.err(col, format!("unknown tag `{w}`")))?;
                        if tags.contains(&tag) {
                            return Err(c.err(col, format!("tag `{w}` repeated")));
                        }
                        tags.push(tag);
                    }
                    tags.sort();
                    degrees.insert(name.clone(), degree);
                    let spec = GroupSpec { name, degree, construction: Construction::Explicit(Vec::new()) };
                    current = Some((c, GroupEntry { spec, tags, comments: std::mem::take(&mut comments) }, false));
                }
                "gen" => {
                    let Some((_, entry, has_body)) = current.as_mut() else {
                        return Err(c.err(words[0].0, "`gen` outside a group"));
                    };
                    let Construction::Explicit(gens) = &mut entry.spec.construction else {
                        return Err(c.err(words[0].0, "`gen` mixed with a product"));
                    };
                    let (col, rest) = rest_after(&c, 1);
                    gens.push(parse_perm(&c, col, rest, entry.spec.degree)?);
                    *has_body = true;
                }
                "product" => {
                    let Some((_, entry, has_body)) = current.as_mut() else {
                        return Err(c.err(words[0].0, "`product` outside a group"));
                    };
                    if *has_body {
                        return Err(c.err(words[0].0, "group already has generators or a product"));
                    }
                    let known = |&(col, w): &(usize, &str)| {
                        if w != entry.spec.name && degrees.contains_key(w) {
                            Ok(w.to_string())
                        } else {
                            Err(c.err(col, format!("unknown group `{w}` (factors must be defined earlier)")))
                        }
                    };
                    entry.spec.construction = match words.get(1).map(|w| w.1) {
                        Some("direct") if words.len() == 4 => {
                            Construction::Direct { left: known(&words[2])?, right: known(&words[3])? }
                        }
                        Some("semidirect") if words.len() >= 6 && words[4].1 == "action" => {
                            let normal = known(&words[2])?;
                            let acting = known(&words[3])?;
                            let (col, rest) = rest_after(&c, 5);
                            let action = parse_action(&c, col, rest, degrees[&normal])?;
                            Construction::SemidirectRegular { normal, acting, action }
                        }
                        _ => {
                            return Err(c.err(
                                words[0].0,
                                "expected `product direct A B` or `product semidirect N A action ...`",
                            ))
                        }
                    };
                    *has_body = true;
                }
                other => return Err(c.err(words[0].0, format!("unknown keyword `{other}`"))),
            }
        }
        finish(current.take(), &mut file)?;
        file.trailing = comments;
        Ok(file)
    }

    pub fn read(path: &Path) -> Result<Self, crate::CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| crate::CliError::io(path, e))?;
        Ok(Self::parse(path, &text)?)
    }

    pub fn entry(&self, name: &str) -> Option<&GroupEntry> {
        self.entries.iter().find(|e| e.spec.name == name)
    }

    /// Builds, in file order, the entries accepted by `keep` together with
    /// the factors they need; other slots stay `None`. A failed factor fails
    /// its dependents.
    pub fn build_selected(
        &self,
        limits: Limits,
        keep: impl Fn(&GroupEntry) -> bool,
    ) -> Vec<Option<Result<Group, psc_core::Error>>> {
        let mut need = vec![false; self.entries.len()];
        for (i, e) in self.entries.iter().enumerate() {
            if keep(e) {
                for j in self.dependencies(i) {
                    need[j] = true;
                }
            }
        }
        let mut built: Vec<Option<Result<Group, psc_core::Error>>> = Vec::with_capacity(self.entries.len());
        for (i, entry) in self.entries.iter().enumerate() {
            if !need[i] {
                built.push(None);
                continue;
            }
            let resolve = |name: &str| {
                let j = self.entries.iter().position(|e| e.spec.name == name)?;
                built.get(j)?.as_ref()?.as_ref().ok()
            };
            let result = entry.spec.build(resolve, limits);
            built.push(Some(result));
        }
        built
    }

    /// Builds the named group and, recursively, its factors.
    pub fn build(&self, name: &str, limits: Limits) -> Result<Group, psc_core::Error> {
        let index = self
            .entries
            .iter()
            .position(|e| e.spec.name == name)
            .ok_or_else(|| psc_core::Error::InvalidArgument(format!("no group named `{name}` in the file")))?;
        let needed = self.dependencies(index);
        let mut built: BTreeMap<&str, Group> = BTreeMap::new();
        for i in needed {
            let spec = &self.entries[i].spec;
            let g = spec.build(|n| built.get(n), limits)?;
            built.insert(&spec.name, g);
        }
        Ok(built.remove(name).expect("target is built last"))
    }

    /// Entry indices needed to build `index`, in file order.
    fn dependencies(&self, index: usize) -> Vec<usize> {
        let mut need = vec![false; self.entries.len()];
        let mut stack = vec![index];
        while let Some(i) = stack.pop() {
            if std::mem::replace(&mut need[i], true) {
                continue;
            }
            let deps: Vec<&str> = match &self.entries[i].spec.construction {
                Construction::Explicit(_) => vec![],
                Construction::Direct { left, right } => vec![left, right],
                Construction::SemidirectRegular { normal, acting, .. } => vec![normal, acting],
            };
            stack.extend(deps.into_iter().filter_map(|d| self.entries.iter().position(|e| e.spec.name == d)));
        }
        (0..self.entries.len()).filter(|&i| need[i]).collect()
    }
}

/// `img;img|img;img`: images of the normal factor's generators, one
/// `;`-list per acting generator, lists separated by `|`.
fn parse_action(c: &Cursor<'_>, col: usize, text: &str, degree: usize) -> Result<Vec<Vec<Permutation>>, ParseError> {
    if text.is_empty() {
        return Err(c.err(col, "empty action"));
    }
    let mut out = Vec::new();
    let mut offset = 0;
    for list in text.split('|') {
        let mut images = Vec::new();
        let mut inner = offset;
        for img in list.split(';') {
            images.push(parse_perm(c, col + inner, img, degree)?);
            inner += img.len() + 1;
        }
        out.push(images);
        offset += list.len() + 1;
    }
    Ok(out)
}

impl fmt::Display for GroupFile {
    /// Canonical form: header, then entries separated by one blank line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{GROUP_HEADER}")?;
        for entry in &self.entries {
            writeln!(f)?;
            for c in &entry.comments {
                writeln!(f, "#{c}")?;
            }
            let spec = &entry.spec;
            write!(f, "group {} degree {}", spec.name, spec.degree)?;
            for t in &entry.tags {
                write!(f, " {}", t.name())?;
            }
            writeln!(f)?;
            match &spec.construction {
                Construction::Explicit(gens) => {
                    for g in gens {
                        writeln!(f, "gen {g}")?;
                    }
                }
                Construction::Direct { left, right } => writeln!(f, "product direct {left} {right}")?,
                Construction::SemidirectRegular { normal, acting, action } => {
                    let lists: Vec<String> = action
                        .iter()
                        .map(|imgs| imgs.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(";"))
                        .collect();
                    writeln!(f, "product semidirect {normal} {acting} action {}", lists.join("|"))?;
                }
            }
        }
        if !self.trailing.is_empty() {
            writeln!(f)?;
            for c in &self.trailing {
                writeln!(f, "#{c}")?;
            }
        }
        Ok(())
    }
}

/// Poset export. Element generators are written in the ambient group's
/// cycle notation, joined by `/`.
pub fn write_poset(group: &Group, name: &str, poset: &SubgroupPoset) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{POSET_HEADER}");
    let action = poset.action();
    let _ = writeln!(
        out,
        "poset group {name} kind {} prime {} elements {} covers {} actions {}",
        poset.kind(),
        poset.prime(),
        poset.len(),
        poset.covers().len(),
        action.map_or(0, |a| a.len())
    );
    for (i, h) in poset.elements().iter().enumerate() {
        let gens: Vec<String> = h
            .generators()
            .iter()
            .map(|&g| group.permutation(g).map(|p| p.to_string()).unwrap_or_else(|_| "?".into()))
            .collect();
        let gens = if gens.is_empty() { "()".to_string() } else { gens.join("/") };
        let _ = writeln!(out, "el {i} order {} gens {gens}", h.order());
    }
    for &(a, b) in poset.covers() {
        let _ = writeln!(out, "cov {a} {b}");
    }
    for (k, images) in action.into_iter().flatten().enumerate() {
        let _ = write!(out, "act {k}");
        for j in images {
            let _ = write!(out, " {j}");
        }
        out.push('\n');
    }
    out
}

/// The order relation of an exported poset, rebuilt from its `cov` lines.
/// Element lines are checked for numbering only.
#[derive(Clone, Debug)]
pub struct ImportedPoset {
    pub relation: FinitePoset,
    pub orders: Vec<usize>,
    pub actions: Vec<Vec<u32>>,
}

pub fn read_poset(path: &Path, text: &str) -> Result<ImportedPoset, ParseError> {
    let mut orders = Vec::new();
    let mut covers = Vec::new();
    let mut actions = Vec::new();
    let mut declared: Option<(usize, usize)> = None;
    let mut last_line = 1;
    for c in body(path, text, POSET_HEADER)? {
        last_line = c.line;
        let words = c.words();
        match words[0].1 {
            "poset" => {
                let field = |key: &str| words.iter().position(|w| w.1 == key).and_then(|i| words.get(i + 1));
                let (Some(&n), Some(&m)) = (field("elements"), field("covers")) else {
                    return Err(c.err(1, "poset line needs `elements <n>` and `covers <m>`"));
                };
                declared = Some((parse_usize(&c, n, "a count")?, parse_usize(&c, m, "a count")?));
            }
            "el" => {
                if words.len() < 4 || words[2].1 != "order" {
                    return Err(c.err(1, "expected `el <index> order <k> gens ...`"));
                }
                let i = parse_usize(&c, words[1], "an element index")?;
                if i != orders.len() {
                    return Err(c.err(words[1].0, format!("expected element index {}", orders.len())));
                }
                orders.push(parse_usize(&c, words[3], "an order")?);
            }
            "cov" => {
                if words.len() != 3 {
                    return Err(c.err(1, "expected `cov <i> <j>`"));
                }
                let a = parse_usize(&c, words[1], "an element index")?;
                let b = parse_usize(&c, words[2], "an element index")?;
                for (v, w) in [(a, words[1]), (b, words[2])] {
                    if v >= orders.len() {
                        return Err(c.err(w.0, format!("element {v} not declared before use")));
                    }
                }
                covers.push((a as u32, b as u32));
            }
            "act" => {
                let images = words[2..]
                    .iter()
                    .map(|&w| parse_usize(&c, w, "an element index").map(|v| v as u32))
                    .collect::<Result<Vec<_>, _>>()?;
                if images.len() != orders.len() {
                    return Err(c.err(1, format!("action has {} images for {} elements", images.len(), orders.len())));
                }
                actions.push(images);
            }
            other => return Err(c.err(words[0].0, format!("unknown keyword `{other}`"))),
        }
    }
    let eof = Cursor { path, line: last_line, text: "" };
    if let Some((n, m)) = declared {
        if n != orders.len() || m != covers.len() {
            return Err(eof.err(1, format!("header declares {n} elements and {m} covers, found {} and {}", orders.len(), covers.len())));
        }
    }
    let relation = FinitePoset::from_covers(orders.len(), &covers).map_err(|e| eof.err(1, e.to_string()))?;
    Ok(ImportedPoset { relation, orders, actions })
}

pub fn write_complex(c: &SimplicialComplex) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{COMPLEX_HEADER}");
    let _ = writeln!(out, "vertices {}", c.vertex_count());
    for d in 0..(c.dimension() + 1) as usize {
        for s in c.simplices(d) {
            out.push('s');
            for v in s {
                let _ = write!(out, " {v}");
            }
            out.push('\n');
        }
    }
    out
}

/// Reads a complex; listed simplices are closed under faces.
pub fn read_complex(path: &Path, text: &str) -> Result<SimplicialComplex, ParseError> {
    let mut vertices: Option<usize> = None;
    let mut simplices: Vec<Vec<u32>> = Vec::new();
    let mut last_line = 1;
    for c in body(path, text, COMPLEX_HEADER)? {
        last_line = c.line;
        let words = c.words();
        match words[0].1 {
            "vertices" if words.len() == 2 && vertices.is_none() => {
                vertices = Some(parse_usize(&c, words[1], "a vertex count")?);
            }
            "s" => {
                let n = vertices.ok_or_else(|| c.err(1, "`vertices <n>` must precede simplices"))?;
                if words.len() < 2 {
                    return Err(c.err(1, "empty simplex"));
                }
                let mut s = Vec::with_capacity(words.len() - 1);
                for &w in &words[1..] {
                    let v = parse_usize(&c, w, "a vertex")?;
                    if v >= n {
                        return Err(c.err(w.0, format!("vertex {v} outside 0..{n}")));
                    }
                    s.push(v as u32);
                }
                simplices.push(s);
            }
            other => return Err(c.err(words[0].0, format!("unexpected `{other}`"))),
        }
    }
    let eof = Cursor { path, line: last_line, text: "" };
    let n = vertices.ok_or_else(|| eof.err(1, "missing `vertices <n>`"))?;
    SimplicialComplex::from_simplices(n, &simplices).map_err(|e| eof.err(1, e.to_string()))
}

/// A file accepted by the `homology` command.
pub enum HomologyInput {
    Complex(SimplicialComplex),
    Poset(ImportedPoset),
}

impl HomologyInput {
    pub fn parse(path: &Path, text: &str) -> Result<Self, ParseError> {
        let first = text.lines().next().unwrap_or("").trim_end();
        if first == POSET_HEADER {
            read_poset(path, text).map(HomologyInput::Poset)
        } else if first == COMPLEX_HEADER {
            read_complex(path, text).map(HomologyInput::Complex)
        } else {
            Err(ParseError {
                path: path.to_path_buf(),
                line: 1,
                column: 1,
                message: format!("expected `{COMPLEX_HEADER}` or `{POSET_HEADER}`"),
            })
        }
    }

    pub fn complex(&self) -> SimplicialComplex {
        match self {
            HomologyInput::Complex(c) => c.clone(),
            HomologyInput::Poset(p) => order_complex(&p.relation),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> &'static Path {
        Path::new("t.grp")
    }

    #[test]
    fn canonical_round_trip() {
        let text = "format group v1\n\n# cyclic\ngroup C3 degree 3 helper\ngen (1 2 3)\n\ngroup N degree 9 helper\ngen (1 2 3)\ngen (4 5 6)\ngen (7 8 9)\n\ngroup W degree 27 os-index-one stretch\nproduct semidirect N C3 action (4 5 6);(7 8 9);(1 2 3)\n\ngroup D degree 12\nproduct direct C3 N\n\n# end\n";
        let f = GroupFile::parse(p(), text).unwrap();
        let printed = f.to_string();
        assert_eq!(GroupFile::parse(p(), &printed).unwrap(), f);
        assert_eq!(GroupFile::parse(p(), &printed).unwrap().to_string(), printed);
        assert_eq!(f.entries[2].tags, vec![Tag::Stretch, Tag::OsIndexOne]);
        assert_eq!(f.trailing, vec![" end".to_string()]);
        let w = f.build("W", Limits::default()).unwrap();
        assert_eq!(w.order().to_string(), "81");
        let built = f.build_selected(Limits::default(), |e| e.spec.name == "D");
        assert!(built[2].is_none());
        assert_eq!(built[3].as_ref().unwrap().as_ref().unwrap().order().to_string(), "81");
    }

    #[test]
    fn non_canonical_input_normalizes() {
        let f = GroupFile::parse(p(), "format group v1\ngroup S3 degree 3\ngen (1,2,3)\n   gen (2 1)  \n").unwrap();
        assert_eq!(f.to_string(), "format group v1\n\ngroup S3 degree 3\ngen (1 2 3)\ngen (1 2)\n");
    }

    #[test]
    fn parse_errors_are_located() {
        let cases = [
            ("format group v2\n", 1, 1),
            ("format group v1\ngroup A degree 3\ngen (1 2 4)\n", 3, 10),
            ("format group v1\ngroup A degree 3\ngen (1 2\n", 3, 5),
            ("format group v1\ngen (1 2)\n", 2, 1),
            ("format group v1\ngroup A degree x\n", 2, 16),
            ("format group v1\ngroup A degree 3 shiny\n", 2, 18),
            ("format group v1\ngroup B degree 6\nproduct direct A A\n", 3, 16),
            ("format group v1\ngroup A degree 3\n", 2, 1),
            ("format group v1\ngroup A degree 2\ngen (1 2)\ngroup B degree 4\nproduct semidirect A A action (1 2)|(1 3)\n", 5, 40),
        ];
        for (text, line, column) in cases {
            let e = GroupFile::parse(p(), text).unwrap_err();
            assert_eq!((e.line, e.column), (line, column), "{text:?}: {e}");
            assert!(e.to_string().starts_with(&format!("t.grp:{line}:{column}: ")));
        }
    }

    #[test]
    fn complex_round_trip() {
        let c = SimplicialComplex::from_simplices(4, &[vec![0, 1, 2], vec![2, 3]]).unwrap();
        let text = write_complex(&c);
        assert!(text.starts_with("format complex v1\nvertices 4\ns 0\n"));
        let back = read_complex(Path::new("c"), &text).unwrap();
        assert_eq!(back.f_vector(), c.f_vector());
        assert_eq!(write_complex(&back), text);
        let e = read_complex(Path::new("c"), "format complex v1\nvertices 2\ns 0 2\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 5));
    }
}
