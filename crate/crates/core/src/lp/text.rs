//! Plain-text LP format:
//!
//! ```text
//! # comment
//! min 1 1 1
//! row 1 1 0 >= 1
//! row 0 1/2 1 >= 1
//! ```

use num_traits::One;

use super::{LinearProgram, Rational};
use crate::error::{parse_err, Result};

pub fn parse_lp(text: &str) -> Result<LinearProgram> {
    let mut objective: Option<Vec<Rational>> = None;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line_no = no + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut words = line.split_whitespace();
        match words.next() {
            Some("min") => {
                if objective.is_some() {
                    return Err(parse_err(line_no, "duplicate objective"));
                }
                objective = Some(words.map(|w| parse_rational(w, line_no)).collect::<Result<_>>()?);
            }
            Some("row") => {
                let rest: Vec<&str> = words.collect();
                let split = rest
                    .iter()
                    .position(|w| *w == ">=")
                    .ok_or_else(|| parse_err(line_no, "row needs `>= b`"))?;
                if split + 2 != rest.len() {
                    return Err(parse_err(line_no, "expected exactly one value after `>=`"));
                }
                rows.push(
                    rest[..split]
                        .iter()
                        .map(|w| parse_rational(w, line_no))
                        .collect::<Result<Vec<_>>>()?,
                );
                rhs.push(parse_rational(rest[split + 1], line_no)?);
            }
            Some(other) => return Err(parse_err(line_no, format!("unknown directive `{other}`"))),
            None => unreachable!(),
        }
    }
    let objective = objective.ok_or_else(|| parse_err(0, "missing `min` line"))?;
    LinearProgram::new(objective, rows, rhs)
}

fn parse_rational(word: &str, line: usize) -> Result<Rational> {
    word.parse::<Rational>()
        .map_err(|_| parse_err(line, format!("bad rational `{word}`")))
}

/// `a/b`, or `a` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::{rat, solve_min};

    #[test]
    fn parses_and_solves() {
        let lp = parse_lp("# triangle\nmin 1 1 1\nrow 1 1 0 >= 1\nrow 0 1 1 >= 1\nrow 1 0 1 >= 1\n").unwrap();
        let out = solve_min(&lp).unwrap();
        assert_eq!(format_rational(&out.optimal().unwrap().value), "3/2");
        assert_eq!(format_rational(&rat(4, 2)), "2");
        assert_eq!(format_rational(&rat(-1, 3)), "-1/3");
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_lp("row 1 >= 1\n").is_err());
        assert!(parse_lp("min 1\nrow 1 1\n").is_err());
        assert!(parse_lp("min 1\nrow x >= 1\n").is_err());
        assert!(parse_lp("min 1 1\nrow 1 >= 1\n").is_err());
    }
}
