//! Text and JSON file formats.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use lamina::equivalence::Partition;
use lamina::generators::{CriticalPortrait, PullbackSpec};
use lamina::{Angle, Chord, Degree, Lamination};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: leaf {leaf} crosses leaf {other} (line {other_line})")]
    Crossing { line: usize, leaf: Chord, other: Chord, other_line: usize },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Lamina(#[from] lamina::Error),
}

fn syntax(line: usize, msg: impl Into<String>) -> IoError {
    IoError::Syntax { line, msg: msg.into() }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LaminationJson {
    degree: u32,
    leaves: Vec<[String; 2]>,
}

fn angle(s: &str, line: usize) -> Result<Angle, IoError> {
    s.parse().map_err(|e: lamina::Error| syntax(line, e.to_string()))
}

fn degree(s: &str, line: usize) -> Result<Degree, IoError> {
    let d: u32 = s.parse().map_err(|_| syntax(line, format!("bad degree `{s}`")))?;
    Degree::new(d).map_err(|e| syntax(line, e.to_string()))
}

/// Leaves with the line they came from; JSON input counts array positions from 1.
fn build(d: Degree, leaves: Vec<(Chord, usize)>) -> Result<Lamination, IoError> {
    match Lamination::new(d, leaves.iter().map(|(c, _)| c.clone())) {
        Ok(l) => Ok(l),
        Err(lamina::Error::Crossing(x, y)) => {
            let at = |c: &Chord| leaves.iter().find(|(k, _)| k == c).map(|(_, n)| *n).unwrap_or(0);
            let (lx, ly) = (at(&x), at(&y));
            let ((leaf, line), (other, other_line)) = if lx >= ly { ((x, lx), (y, ly)) } else { ((y, ly), (x, lx)) };
            Err(IoError::Crossing { line, leaf, other, other_line })
        }
        Err(e) => Err(e.into()),
    }
}

/// Text or JSON, told apart by a leading `{`.
pub fn parse_lamination(text: &str) -> Result<Lamination, IoError> {
    if text.trim_start().starts_with('{') {
        return parse_json(text);
    }
    let mut d = None;
    let mut leaves = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let n = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tok: Vec<&str> = line.split_whitespace().collect();
        match (tok[0], d) {
            ("degree", None) if tok.len() == 2 => d = Some(degree(tok[1], n)?),
            ("degree", Some(_)) => return Err(syntax(n, "second degree line")),
            ("leaf", Some(_)) if tok.len() == 3 => {
                let c = Chord::new(angle(tok[1], n)?, angle(tok[2], n)?).map_err(|e| syntax(n, e.to_string()))?;
                leaves.push((c, n));
            }
            ("leaf", None) => return Err(syntax(n, "leaf before the degree line")),
            _ => return Err(syntax(n, format!("expected `degree d` or `leaf p/q r/s`, got `{line}`"))),
        }
    }
    let d = d.ok_or_else(|| syntax(text.lines().count().max(1), "missing `degree d` line"))?;
    build(d, leaves)
}

fn parse_json(text: &str) -> Result<Lamination, IoError> {
    let j: LaminationJson = serde_json::from_str(text)?;
    let d = Degree::new(j.degree)?;
    let mut leaves = Vec::with_capacity(j.leaves.len());
    for (i, [x, y]) in j.leaves.iter().enumerate() {
        let c = Chord::new(angle(x, i + 1)?, angle(y, i + 1)?).map_err(|e| syntax(i + 1, e.to_string()))?;
        leaves.push((c, i + 1));
    }
    build(d, leaves)
}

/// Canonical text form: header, then leaves in ascending order.
pub fn serialize_lamination(l: &Lamination) -> String {
    let mut out = format!("degree {}\n", l.degree().get());
    for c in l.leaves() {
        out.push_str(&format!("leaf {} {}\n", c.lo(), c.hi()));
    }
    out
}

pub fn serialize_lamination_json(l: &Lamination) -> String {
    let j = LaminationJson {
        degree: l.degree().get(),
        leaves: l.leaves().iter().map(|c| [c.lo().to_string(), c.hi().to_string()]).collect(),
    };
    let mut s = serde_json::to_string_pretty(&j).expect("plain data");
    s.push('\n');
    s
}

/// JSON when the path ends in `.json`, text otherwise.
pub fn serialize_for(path: &Path, l: &Lamination) -> String {
    if path.extension().is_some_and(|e| e == "json") {
        serialize_lamination_json(l)
    } else {
        serialize_lamination(l)
    }
}

/// One class per line, angle literals separated by spaces.
pub fn parse_partition(text: &str) -> Result<Partition, IoError> {
    let mut classes = Vec::new();
    let mut seen: BTreeMap<Angle, usize> = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let n = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut class = Vec::new();
        for t in line.split_whitespace() {
            let a = angle(t, n)?;
            if let Some(prev) = seen.insert(a.clone(), n) {
                return Err(syntax(n, format!("angle {a} already in the class on line {prev}")));
            }
            class.push(a);
        }
        classes.push(class);
    }
    Ok(Partition::new(classes)?)
}

pub fn serialize_partition(p: &Partition) -> String {
    let mut out = String::new();
    for class in p.classes() {
        let words: Vec<String> = class.iter().map(|a| a.to_string()).collect();
        out.push_str(&words.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecJson {
    degree: u32,
    seed: PathBuf,
    portrait: Vec<[String; 2]>,
    depth: usize,
    #[serde(default)]
    include_portrait: bool,
}

pub fn read(path: &Path) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(|source| IoError::Read { path: path.to_path_buf(), source })
}

pub fn write(path: &Path, text: &str) -> Result<(), IoError> {
    std::fs::write(path, text).map_err(|source| IoError::Write { path: path.to_path_buf(), source })
}

/// The seed path is resolved against the directory holding the spec.
pub fn read_pullback_spec(path: &Path) -> Result<PullbackSpec, IoError> {
    let j: SpecJson = serde_json::from_str(&read(path)?)?;
    let d = Degree::new(j.degree)?;
    let seed_path = path.parent().unwrap_or(Path::new(".")).join(&j.seed);
    let seed = parse_lamination(&read(&seed_path)?)?;
    if seed.degree() != d {
        return Err(lamina::Error::DegreeMismatch(d.get(), seed.degree().get()).into());
    }
    let mut chords = Vec::with_capacity(j.portrait.len());
    for (i, [x, y]) in j.portrait.iter().enumerate() {
        chords.push(Chord::new(angle(x, i + 1)?, angle(y, i + 1)?)?);
    }
    let portrait = CriticalPortrait::new(d, chords)?;
    Ok(PullbackSpec { seed, portrait, depth: j.depth, include_portrait: j.include_portrait })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_leaf() {
        let l = parse_lamination("degree 2\nleaf 1/7 2/7\n").unwrap();
        assert_eq!(l.len(), 1);
        assert_eq!(serialize_lamination(&l), "degree 2\nleaf 1/7 2/7\n");
    }

    #[test]
    fn canonical_form() {
        let t = "# rabbit\ndegree 2\n\nleaf 4/7 1/7\nleaf 2/7 1/7\n";
        let l = parse_lamination(t).unwrap();
        assert_eq!(serialize_lamination(&l), "degree 2\nleaf 1/7 2/7\nleaf 1/7 4/7\n");
        let j = serialize_lamination_json(&l);
        assert_eq!(parse_lamination(&j).unwrap(), l);
    }

    #[test]
    fn crossing_names_both() {
        let e = parse_lamination("degree 2\nleaf 0 1/2\nleaf 1/4 3/4\n").unwrap_err();
        assert_eq!(e.to_string(), "line 3: leaf 1/4 3/4 crosses leaf 0 1/2 (line 2)");
    }

    #[test]
    fn syntax_errors() {
        let cases = [
            ("", 1),
            ("leaf 0 1/2\n", 1),
            ("degree 2\nleaf 0 2/4\n", 2),
            ("degree 2\nleaf 1/3\n", 2),
            ("degree 1\n", 1),
            ("degree 2\nleaf 1/3 1/3\n", 2),
            ("degree 2\ndegree 3\n", 2),
        ];
        for (t, line) in cases {
            match parse_lamination(t) {
                Err(IoError::Syntax { line: l, .. }) => assert_eq!(l, line, "{t:?}"),
                other => panic!("{t:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn partitions() {
        let p = parse_partition("# basilica\n1/3 2/3\n1/6 5/6\n").unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(serialize_partition(&p), "1/6 5/6\n1/3 2/3\n");
        assert!(matches!(parse_partition("1/3 2/3\n2/3\n"), Err(IoError::Syntax { line: 2, .. })));
    }
}
