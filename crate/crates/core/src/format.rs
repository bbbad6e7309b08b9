//! Text formats for monomial ideals.
//!
//! Human form: comma-separated generators such as `x1^2*x3, x2*x4`, with
//! 1-based variable indices. `0` (or empty input) is the zero ideal and `1`
//! the unit ideal. JSON form: `{"n": 5, "gens": [[2,0,1,0,0],[0,1,0,1,0]]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub n: usize,
    pub gens: Vec<Vec<u32>>,
}

impl From<&MonomialIdeal> for IdealJson {
    fn from(i: &MonomialIdeal) -> Self {
        IdealJson {
            n: i.n(),
            gens: i.exponents(),
        }
    }
}

impl IdealJson {
    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        MonomialIdeal::from_exponents(self.n, self.gens.clone())
    }
}

pub fn to_json(i: &MonomialIdeal) -> String {
    serde_json::to_string(&IdealJson::from(i)).expect("serializable")
}

pub fn to_human(i: &MonomialIdeal) -> String {
    i.to_string()
}

/// Parse either format. `n` is required only to widen a human-form ideal
/// beyond its largest variable index.
pub fn parse_ideal(text: &str, n: Option<usize>) -> Result<MonomialIdeal> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let offset = text.len() - trimmed.len();
        let parsed = parse_json(trimmed).map_err(|e| match e {
            Error::Parse { pos, msg } => Error::Parse {
                pos: pos + offset,
                msg,
            },
            other => other,
        })?;
        if let Some(n) = n {
            if n != parsed.n() {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: parsed.n(),
                });
            }
        }
        return Ok(parsed);
    }
    parse_human(text, n)
}

fn parse_json(text: &str) -> Result<MonomialIdeal> {
    let json: IdealJson = serde_json::from_str(text).map_err(|e| Error::Parse {
        pos: byte_offset(text, e.line(), e.column()),
        msg: e.to_string(),
    })?;
    for (k, g) in json.gens.iter().enumerate() {
        if g.len() != json.n {
            return Err(Error::Parse {
                pos: 0,
                msg: format!(
                    "generator {} has {} exponents, expected n = {}",
                    k,
                    g.len(),
                    json.n
                ),
            });
        }
    }
    json.to_ideal()
}

fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    let mut pos = 0;
    for (i, l) in text.split_inclusive('\n').enumerate() {
        if i + 1 == line {
            return pos + column.saturating_sub(1);
        }
        pos += l.len();
    }
    pos
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            return Err(self.err("negative numbers are not allowed"));
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|_| Error::Parse {
                pos: start,
                msg: "number out of range".into(),
            })
    }
}

fn parse_human(text: &str, n: Option<usize>) -> Result<MonomialIdeal> {
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    // (1-based index, exponent, position) per factor, per generator
    let mut raw: Vec<Vec<(usize, u32, usize)>> = Vec::new();
    cur.skip_ws();
    if cur.peek().is_none() {
        return Ok(MonomialIdeal::zero(n.unwrap_or(0)));
    }
    let mut zero_ideal = false;
    loop {
        cur.skip_ws();
        let mut factors = Vec::new();
        loop {
            cur.skip_ws();
            match cur.peek() {
                Some(b'x') | Some(b'X') => {
                    let at = cur.pos;
                    cur.pos += 1;
                    let idx = cur.number()?;
                    if idx == 0 {
                        return Err(Error::Parse {
                            pos: at,
                            msg: "variable indices are 1-based".into(),
                        });
                    }
                    cur.skip_ws();
                    let mut e = 1u64;
                    if cur.peek() == Some(b'^') {
                        cur.pos += 1;
                        cur.skip_ws();
                        e = cur.number()?;
                    }
                    let e = u32::try_from(e).map_err(|_| cur.err("exponent too large"))?;
                    factors.push((idx as usize, e, at));
                }
                Some(c) if c.is_ascii_digit() => {
                    let at = cur.pos;
                    match cur.number()? {
                        1 => {}
                        0 => zero_ideal = true,
                        _ => {
                            return Err(Error::Parse {
                                pos: at,
                                msg: "coefficients are not allowed".into(),
                            })
                        }
                    }
                }
                Some(b'-') => return Err(cur.err("negative exponents or coefficients are not allowed")),
                _ => return Err(cur.err("expected a variable like x1 or the constant 1")),
            }
            cur.skip_ws();
            if cur.peek() == Some(b'*') {
                cur.pos += 1;
            } else {
                break;
            }
        }
        raw.push(factors);
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some(b',') => cur.pos += 1,
            Some(_) => return Err(cur.err("expected ',' or '*'")),
        }
    }
    let max_idx = raw
        .iter()
        .flat_map(|f| f.iter().map(|&(i, _, _)| i))
        .max()
        .unwrap_or(0);
    let n = match n {
        Some(n) => {
            if let Some(&(_, _, at)) = raw.iter().flatten().find(|&&(i, _, _)| i > n) {
                return Err(Error::Parse {
                    pos: at,
                    msg: format!("variable index out of range for n = {n}"),
                });
            }
            n
        }
        None => max_idx,
    };
    if zero_ideal {
        if raw.len() == 1 && raw[0].is_empty() {
            return Ok(MonomialIdeal::zero(n));
        }
        return Err(Error::Parse {
            pos: 0,
            msg: "the constant 0 must appear alone".into(),
        });
    }
    let gens = raw
        .into_iter()
        .map(|factors| {
            let mut exps = vec![0u32; n];
            for (i, e, _) in factors {
                exps[i - 1] = exps[i - 1]
                    .checked_add(e)
                    .expect("exponent overflow");
            }
            Monomial::new(exps)
        })
        .collect();
    MonomialIdeal::new(n, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn human_form() {
        let i = parse_ideal("x1^2*x3, x2*x4", Some(5)).unwrap();
        // canonical order: degree first
        assert_eq!(i.exponents(), vec![vec![0, 1, 0, 1, 0], vec![2, 0, 1, 0, 0]]);
        assert_eq!(to_human(&i), "x2*x4, x1^2*x3");
        assert_eq!(parse_ideal("x2, x1*x1", None).unwrap().n(), 2);
        assert!(parse_ideal("1", Some(3)).unwrap().is_unit());
        assert!(parse_ideal("0", Some(3)).unwrap().is_zero());
    }

    #[test]
    fn json_form() {
        let i = parse_ideal(r#"{"n": 5, "gens": [[2,0,1,0,0],[0,1,0,1,0]]}"#, None).unwrap();
        assert_eq!(to_human(&i), "x2*x4, x1^2*x3");
        assert_eq!(parse_ideal(&to_json(&i), None).unwrap(), i);
    }

    #[test]
    fn rejects_bad_input_with_positions() {
        match parse_ideal("x1^-2", None) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("{other:?}"),
        }
        match parse_ideal("x1, x7", Some(4)) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_ideal("x0", None), Err(Error::Parse { pos: 0, .. })));
        assert!(parse_ideal("x1 x2", None).is_err());
        assert!(parse_ideal(r#"{"n": 2, "gens": [[1,-1]]}"#, None).is_err());
        assert!(parse_ideal(r#"{"n": 2, "gens": [[1,1,1]]}"#, None).is_err());
    }

    proptest! {
        #[test]
        fn round_trips(gens in proptest::collection::vec(proptest::collection::vec(0u32..4, 3), 0..6)) {
            let i = MonomialIdeal::from_exponents(3, gens).unwrap();
            prop_assert_eq!(parse_ideal(&to_human(&i), Some(3)).unwrap(), i.clone());
            prop_assert_eq!(parse_ideal(&to_json(&i), None).unwrap(), i);
        }
    }
}
