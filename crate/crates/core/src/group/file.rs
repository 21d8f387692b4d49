//! Text group files.
//!
//! ```text
//! # comment
//! degree 4
//! gen (1 2 3 4)
//! gen (1 3)
//! ```
//!
//! or a Cayley table whose first row and column list the elements in order,
//! with element 1 as the identity:
//!
//! ```text
//! table 2
//! 1 2
//! 2 1
//! ```
//!
//! See `docs/group-file-format.md` for the full grammar.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::perm::Permutation;

use super::{CayleyTable, Element, Family, FiniteGroup, Presentation};

enum Header {
    Degree(usize),
    Table(usize),
}

pub fn parse_group_file(text: &str, name: &str, bound: usize) -> Result<FiniteGroup> {
    let err = |line: usize, message: String| Error::GroupFile { line, message };
    let mut header: Option<(usize, Header)> = None;
    let mut gens: Vec<Permutation> = Vec::new();
    let mut rows: Vec<Vec<usize>> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (keyword, rest) = line
            .split_once(char::is_whitespace)
            .map_or((line, ""), |(k, r)| (k, r.trim()));
        match &header {
            None => {
                let n: usize = rest.parse().map_err(|_| {
                    err(
                        line_no,
                        format!("expected `{keyword} N` with a positive integer N"),
                    )
                })?;
                if n == 0 {
                    return Err(err(line_no, "size must be positive".into()));
                }
                header = Some(match keyword {
                    "degree" => (line_no, Header::Degree(n)),
                    "table" => (line_no, Header::Table(n)),
                    _ => {
                        return Err(err(
                            line_no,
                            format!("expected header `degree N` or `table N`, found `{keyword}`"),
                        ))
                    }
                });
            }
            Some((_, Header::Degree(degree))) => {
                if keyword != "gen" {
                    return Err(err(
                        line_no,
                        format!("expected `gen <cycles>`, found `{keyword}`"),
                    ));
                }
                let perm =
                    Permutation::parse(rest, *degree).map_err(|e| err(line_no, e.to_string()))?;
                gens.push(perm);
            }
            Some((_, Header::Table(n))) => {
                if rows.len() == *n {
                    return Err(err(line_no, format!("table has more than {n} rows")));
                }
                let row = line
                    .split_whitespace()
                    .map(|tok| match tok.parse::<usize>() {
                        Ok(v) if (1..=*n).contains(&v) => Ok(v - 1),
                        _ => Err(err(line_no, format!("`{tok}` is not an index in 1..={n}"))),
                    })
                    .collect::<Result<Vec<usize>>>()?;
                if row.len() != *n {
                    return Err(err(
                        line_no,
                        format!("row has {} entries, expected {n}", row.len()),
                    ));
                }
                rows.push(row);
            }
        }
    }

    match header {
        None => Err(err(0, "missing `degree N` or `table N` header".into())),
        Some((_, Header::Degree(degree))) => FiniteGroup::new(
            name,
            Family::File,
            Presentation::Perm { degree },
            gens.into_iter().map(Element::Perm).collect(),
            bound,
        ),
        Some((line, Header::Table(n))) => {
            if rows.len() != n {
                return Err(err(
                    line,
                    format!("expected {n} rows, found {}", rows.len()),
                ));
            }
            let table = CayleyTable::new(rows).map_err(|e| err(line, e.to_string()))?;
            if n > bound {
                return Err(Error::BoundExceeded { bound });
            }
            let table = Arc::new(table);
            let generators = greedy_generators(&table);
            FiniteGroup::new(
                name,
                Family::File,
                Presentation::Table(table),
                generators,
                bound,
            )
        }
    }
}

/// Adds elements in index order whenever they fall outside the subgroup
/// generated so far.
fn greedy_generators(table: &CayleyTable) -> Vec<Element> {
    let mut gens: Vec<u32> = Vec::new();
    let mut closure: HashSet<u32> = HashSet::from([0]);
    for x in 1..table.len() as u32 {
        if closure.contains(&x) {
            continue;
        }
        gens.push(x);
        let mut frontier: Vec<u32> = closure.iter().copied().collect();
        while let Some(y) = frontier.pop() {
            for &g in &gens {
                let z = table.mul(y, g);
                if closure.insert(z) {
                    frontier.push(z);
                }
            }
        }
    }
    gens.into_iter().map(Element::Cell).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_BOUND;

    #[test]
    fn parses_generator_file() {
        let text = "# D8 on a square\n\ndegree 4\ngen (1 2 3 4)\n  gen (1 3)\n";
        let g = parse_group_file(text, "d8", DEFAULT_BOUND).unwrap();
        assert_eq!(g.order(), Ok(8));
        assert_eq!(g.generators().len(), 2);
    }

    #[test]
    fn parses_table_file() {
        // Klein four-group.
        let text = "table 4\n1 2 3 4\n2 1 4 3\n3 4 1 2\n4 3 2 1\n";
        let g = parse_group_file(text, "v4", DEFAULT_BOUND).unwrap();
        assert_eq!(g.order(), Ok(4));
        assert_eq!(g.generators().len(), 2);
        assert_eq!(g.center().unwrap().len(), 4);
        assert_eq!(g.format(&Element::Cell(2)), "3");
    }

    #[test]
    fn reports_line_numbers() {
        let cases = [
            ("degree 3\ngen (1 2\n", 2),
            ("# c\ndegree 3\ngen (1 4)\n", 3),
            ("order 3\n", 1),
            ("degree 3\nrow (1 2)\n", 2),
            ("table 2\n1 2\n2 1\n1 2\n", 4),
            ("table 2\n1 2\n2\n", 3),
            ("table 2\n1 2\n2 3\n", 3),
            ("table 2\n2 1\n1 2\n", 1),
        ];
        for (text, line) in cases {
            match parse_group_file(text, "bad", DEFAULT_BOUND) {
                Err(Error::GroupFile { line: got, .. }) => assert_eq!(got, line, "{text:?}"),
                other => panic!("{text:?}: expected a line error, got {other:?}"),
            }
        }
        assert!(matches!(
            parse_group_file("# nothing\n", "empty", DEFAULT_BOUND),
            Err(Error::GroupFile { line: 0, .. })
        ));
    }
}
