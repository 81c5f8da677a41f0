//! Text format for permutation generators.
//!
//! ```text
//! # name: U3(3)          <- optional; comments start with '#'
//! degree 28
//! order 6048
//! (1,2,3)(4,5)           <- one generator per line, 1-based cycles
//! (1,7)(2,9,4)
//! ```
//!
//! Everything from a `#` to the end of a line is a comment. Blank lines are
//! ignored. The first two remaining lines must be `degree N` and `order M`;
//! every later line is one generator in disjoint cycle notation (`()` for
//! the identity). A full-line comment of the form `# name: X` names the
//! group.

use std::fmt;
use std::path::Path;

use crate::error::GeneratorFileError;
use crate::perm::{format_cycles, parse_cycles, CycleParseError, PermGroup, Permutation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorFile {
    pub name: Option<String>,
    pub degree: usize,
    pub order: u64,
    pub generators: Vec<Permutation>,
    /// Full-line comments other than the name directive, without the `#`.
    pub comments: Vec<String>,
}

impl GeneratorFile {
    pub fn parse(text: &str) -> Result<Self, GeneratorFileError> {
        let mut name = None;
        let mut comments = Vec::new();
        let mut degree: Option<usize> = None;
        let mut order: Option<u64> = None;
        let mut generators = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let (content, comment) = match raw.split_once('#') {
                Some((c, rest)) => (c.trim(), Some(rest.trim())),
                None => (raw.trim(), None),
            };
            if content.is_empty() {
                if let Some(c) = comment {
                    match c.strip_prefix("name:") {
                        Some(n) => name = Some(n.trim().to_string()),
                        None => comments.push(c.to_string()),
                    }
                }
                continue;
            }
            if degree.is_none() {
                degree = Some(header(content, "degree", line)?);
                continue;
            }
            if order.is_none() {
                order = Some(header(content, "order", line)?);
                continue;
            }
            let d = degree.unwrap();
            let perm = parse_cycles(d, content).map_err(|e| match e {
                CycleParseError::Malformed(reason) => {
                    GeneratorFileError::MalformedCycle { line, reason }
                }
                CycleParseError::OutOfRange(point) => GeneratorFileError::PointOutOfRange {
                    line,
                    point,
                    degree: d,
                },
                CycleParseError::Duplicate(point) => {
                    GeneratorFileError::DuplicatePoint { line, point }
                }
            })?;
            generators.push(perm);
        }
        let missing = |keyword| GeneratorFileError::MissingHeader {
            line: text.lines().count() + 1,
            keyword,
        };
        let degree = degree.ok_or_else(|| missing("degree"))?;
        let order = order.ok_or_else(|| missing("order"))?;
        if generators.is_empty() {
            return Err(GeneratorFileError::NoGenerators);
        }
        Ok(Self {
            name,
            degree,
            order,
            generators,
            comments,
        })
    }

    pub fn read(path: &Path) -> Result<Self, GeneratorFileError> {
        let text = std::fs::read_to_string(path).map_err(|source| GeneratorFileError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text)
    }

    /// Captures a group's generators and order.
    pub fn from_group(name: Option<&str>, g: &PermGroup) -> Self {
        Self {
            name: name.map(str::to_string),
            degree: g.degree(),
            order: g.order(),
            generators: g.generators().to_vec(),
            comments: Vec::new(),
        }
    }

    /// Builds the group and checks it against the declared order.
    pub fn to_group(&self) -> Result<PermGroup, GeneratorFileError> {
        let g = PermGroup::new(self.degree, self.generators.clone())
            .map_err(|_| GeneratorFileError::NoGenerators)?;
        if g.order() != self.order {
            return Err(GeneratorFileError::OrderMismatch {
                declared: self.order,
                actual: g.order(),
            });
        }
        Ok(g)
    }
}

fn header<T: std::str::FromStr>(
    content: &str,
    keyword: &'static str,
    line: usize,
) -> Result<T, GeneratorFileError> {
    let mut parts = content.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some(k), Some(v), None) if k == keyword => v
            .parse()
            .map_err(|_| GeneratorFileError::MissingHeader { line, keyword }),
        _ => Err(GeneratorFileError::MissingHeader { line, keyword }),
    }
}

impl fmt::Display for GeneratorFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            writeln!(f, "# name: {name}")?;
        }
        for c in &self.comments {
            writeln!(f, "# {c}")?;
        }
        writeln!(f, "degree {}", self.degree)?;
        writeln!(f, "order {}", self.order)?;
        for g in &self.generators {
            writeln!(f, "{}", format_cycles(g))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_file() {
        let f = GeneratorFile::parse("degree 3\norder 3\n(1,2,3)\n").unwrap();
        assert_eq!(f.degree, 3);
        assert_eq!(f.to_group().unwrap().order(), 3);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# name: C3\n# a note\n\ndegree 3  # points\norder 3\n\n(1,2,3) # gen\n";
        let f = GeneratorFile::parse(text).unwrap();
        assert_eq!(f.name.as_deref(), Some("C3"));
        assert_eq!(f.comments, vec!["a note".to_string()]);
        assert_eq!(f.generators.len(), 1);
    }

    #[test]
    fn order_mismatch() {
        // A5 generators declared with the wrong order.
        let f = GeneratorFile::parse("degree 5\norder 59\n(1,2,3)\n(1,2,3,4,5)\n").unwrap();
        assert!(matches!(
            f.to_group(),
            Err(GeneratorFileError::OrderMismatch {
                declared: 59,
                actual: 60
            })
        ));
    }

    #[test]
    fn distinct_error_kinds() {
        assert!(matches!(
            GeneratorFile::parse("degree 3\norder 3\n(1,2,3\n"),
            Err(GeneratorFileError::MalformedCycle { line: 3, .. })
        ));
        assert!(matches!(
            GeneratorFile::parse("degree 3\norder 3\n(1,4)\n"),
            Err(GeneratorFileError::PointOutOfRange {
                line: 3,
                point: 4,
                degree: 3
            })
        ));
        assert!(matches!(
            GeneratorFile::parse("degree 3\norder 3\n(1,2,1)\n"),
            Err(GeneratorFileError::DuplicatePoint { line: 3, point: 1 })
        ));
        assert!(matches!(
            GeneratorFile::parse("order 3\ndegree 3\n(1,2,3)\n"),
            Err(GeneratorFileError::MissingHeader {
                line: 1,
                keyword: "degree"
            })
        ));
        assert!(matches!(
            GeneratorFile::parse("degree 3\norder 3\n"),
            Err(GeneratorFileError::NoGenerators)
        ));
    }

    #[test]
    fn render_round_trip() {
        let f = GeneratorFile::parse("# name: S3\ndegree 3\norder 6\n(1,2)\n(1,2,3)\n").unwrap();
        assert_eq!(GeneratorFile::parse(&f.to_string()).unwrap(), f);
    }
}
