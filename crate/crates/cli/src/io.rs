//! File loading for the command-line tools.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use radon_lab::hypergraph::Hypergraph;
use radon_lab::{ConvexitySpace, PointSet};

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

pub fn load_space(path: &Path) -> Result<ConvexitySpace> {
    ConvexitySpace::from_text(&read_text(path)?).with_context(|| format!("invalid space file {}", path.display()))
}

pub fn load_hypergraph(path: &Path) -> Result<Hypergraph> {
    Hypergraph::from_text(&read_text(path)?).with_context(|| format!("invalid hypergraph file {}", path.display()))
}

/// Family file: `family <n>` then one `set i1 i2 ...` line per member.
pub fn parse_family(text: &str) -> Result<(usize, Vec<PointSet>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let Some((no, header)) = lines.next() else {
        bail!("empty family file");
    };
    let words: Vec<&str> = header.split_whitespace().collect();
    if words.len() != 2 || words[0] != "family" {
        bail!("line {no}: expected `family <n>`");
    }
    let n: usize = words[1].parse().with_context(|| format!("line {no}: bad ground size"))?;
    let mut sets = Vec::new();
    for (no, line) in lines {
        let mut words = line.split_whitespace();
        if words.next() != Some("set") {
            bail!("line {no}: expected a `set` line");
        }
        let elems = words
            .map(|w| w.parse::<usize>().with_context(|| format!("line {no}: `{w}` is not an index")))
            .collect::<Result<Vec<_>>>()?;
        sets.push(PointSet::from_elements(n, elems).with_context(|| format!("line {no}"))?);
    }
    Ok((n, sets))
}

pub fn load_family(path: &Path) -> Result<(usize, Vec<PointSet>)> {
    parse_family(&read_text(path)?).with_context(|| format!("invalid family file {}", path.display()))
}

/// Comma-separated nonnegative integers; the empty string gives an empty list.
pub fn parse_list(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|w| !w.is_empty())
        .map(|w| w.parse::<usize>().with_context(|| format!("`{w}` is not a nonnegative integer")))
        .collect()
}

/// Whether a file starts with a `hypergraph` header (else it is read as a space).
pub fn is_hypergraph_text(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.starts_with("hypergraph"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_text() {
        let (n, sets) = parse_family("# pairs\nfamily 3\nset 0 1\nset\nset 2\n").unwrap();
        assert_eq!(n, 3);
        assert_eq!(sets.len(), 3);
        assert!(sets[1].is_empty());
        assert!(parse_family("family 3\nset 3\n").is_err());
        assert!(parse_family("space 3\n").is_err());
    }

    #[test]
    fn lists() {
        assert_eq!(parse_list("3, 1,4").unwrap(), vec![3, 1, 4]);
        assert!(parse_list("").unwrap().is_empty());
        assert!(parse_list("a").is_err());
    }
}
