//! 1-based disjoint cycle notation, the external text form of permutations.
//!
//! Grammar (whitespace between tokens is ignored):
//!
//! ```text
//! perm   := "()" | cycle+
//! cycle  := "(" point ("," point)* ")"
//! point  := [1-9][0-9]*
//! ```
//!
//! A point may occur at most once across all cycles of a permutation.
//! Singleton cycles such as `(4)` are accepted and mean nothing.

use super::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleParseError {
    Malformed(String),
    OutOfRange(usize),
    Duplicate(usize),
}

/// Parses 1-based cycle notation into a permutation of `degree` points.
pub fn parse_cycles(degree: usize, text: &str) -> Result<Permutation, CycleParseError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(CycleParseError::Malformed("empty permutation".into()));
    }
    let mut images: Vec<usize> = (0..degree).collect();
    let mut used = vec![false; degree];
    let mut rest = compact.as_str();
    if rest == "()" {
        return Permutation::new(images).map_err(|e| CycleParseError::Malformed(e.to_string()));
    }
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| CycleParseError::Malformed(format!("expected '(' at {rest:?}")))?;
        let close = body
            .find(')')
            .ok_or_else(|| CycleParseError::Malformed("unclosed cycle".into()))?;
        let inner = &body[..close];
        rest = &body[close + 1..];
        if inner.is_empty() {
            return Err(CycleParseError::Malformed("empty cycle".into()));
        }
        let mut cycle = Vec::new();
        for tok in inner.split(',') {
            if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                return Err(CycleParseError::Malformed(format!("bad point {tok:?}")));
            }
            let point: usize = tok
                .parse()
                .map_err(|_| CycleParseError::Malformed(format!("bad point {tok:?}")))?;
            if point == 0 || point > degree {
                return Err(CycleParseError::OutOfRange(point));
            }
            if std::mem::replace(&mut used[point - 1], true) {
                return Err(CycleParseError::Duplicate(point));
            }
            cycle.push(point - 1);
        }
        for (i, &x) in cycle.iter().enumerate() {
            images[x] = cycle[(i + 1) % cycle.len()];
        }
    }
    Permutation::new(images).map_err(|e| CycleParseError::Malformed(e.to_string()))
}

/// Formats a permutation in 1-based cycle notation; the identity is `()`.
pub fn format_cycles(p: &Permutation) -> String {
    let cycles = p.cycles();
    if cycles.is_empty() {
        return "()".to_string();
    }
    let mut out = String::new();
    for c in cycles {
        out.push('(');
        let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
        out.push_str(&pts.join(","));
        out.push(')');
    }
    out
}
