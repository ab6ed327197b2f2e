//! Plain-text ideal files.
//!
//! ```text
//! vars 4
//! labels x11 x12 x21 x22
//! 1 0 0 1
//! 0 1 1 0
//! ```
//!
//! The `labels` line is optional on input. Generators may come in any order
//! and need not be minimal; the writer always emits the labels line and the
//! canonical minimal generators.

use std::fmt::Write as _;
use std::sync::Arc;

use super::{Monomial, MonomialIdeal, VariableSet};
use crate::{Error, Result};

pub fn write_ideal(ideal: &MonomialIdeal) -> String {
    let mut out = String::new();
    let vars = ideal.ambient();
    writeln!(out, "vars {}", vars.count()).unwrap();
    writeln!(out, "labels {}", vars.labels().join(" ")).unwrap();
    for g in ideal.gens() {
        let row: Vec<String> = g.exponents().iter().map(u32::to_string).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let err = |line: usize, message: String| Error::Parse { line, message };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line_no, header) = lines
        .next()
        .ok_or_else(|| err(1, "empty input, expected `vars <count>`".into()))?;
    let count: usize = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["vars", c] => c
            .parse()
            .map_err(|_| err(line_no, format!("bad variable count {c:?}")))?,
        _ => return Err(err(line_no, "expected `vars <count>`".into())),
    };

    let mut vars = VariableSet::new(count);
    let mut gens = Vec::new();
    let mut first_body = true;
    for (line_no, line) in lines {
        let mut words = line.split_whitespace();
        if first_body && line.starts_with("labels") {
            words.next();
            let labels: Vec<&str> = words.collect();
            if labels.len() != count {
                return Err(err(
                    line_no,
                    format!("expected {count} labels, found {}", labels.len()),
                ));
            }
            vars = VariableSet::with_labels(labels).map_err(|e| err(line_no, e.to_string()))?;
            first_body = false;
            continue;
        }
        first_body = false;
        let exps = words
            .map(|w| {
                w.parse::<u32>()
                    .map_err(|_| err(line_no, format!("bad exponent {w:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        if exps.len() != count {
            return Err(err(
                line_no,
                format!("expected {count} exponents, found {}", exps.len()),
            ));
        }
        gens.push(Monomial::new(exps));
    }
    MonomialIdeal::min_gens(gens, Arc::new(vars))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn writes_canonical_form() {
        let text = "vars 3\n0 1 1\n1 1 0\n1 1 1\n";
        let ideal = parse_ideal(text).unwrap();
        assert_eq!(write_ideal(&ideal), "vars 3\nlabels x1 x2 x3\n1 1 0\n0 1 1\n");
    }

    #[test]
    fn reads_labels_and_blank_lines() {
        let text = "vars 2\nlabels a b\n\n2 0\n";
        let ideal = parse_ideal(text).unwrap();
        assert_eq!(ideal.display_gens(), vec!["a^2"]);
        let zero = parse_ideal("vars 2\n").unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn reports_line_numbers() {
        assert_eq!(
            parse_ideal("vars 2\nlabels a b\n1 x\n"),
            Err(Error::Parse {
                line: 3,
                message: "bad exponent \"x\"".into()
            })
        );
        assert!(matches!(parse_ideal("vars 2\n1 0 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_ideal("var 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_ideal(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_ideal("vars 2\nlabels a\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    proptest! {
        #[test]
        fn round_trips(gens in prop::collection::vec(prop::collection::vec(0u32..4, 5), 0..8)) {
            let vars = Arc::new(VariableSet::new(5));
            let ideal = MonomialIdeal::min_gens(
                gens.into_iter().map(Monomial::new).collect(), vars).unwrap();
            let text = write_ideal(&ideal);
            let back = parse_ideal(&text).unwrap();
            prop_assert_eq!(&back, &ideal);
            prop_assert_eq!(write_ideal(&back), text);
        }
    }
}
