//! Cycle-notation parsing and rendering.
//!
//! Grammar: `expr := "()" | cycle*`, `cycle := "(" int (sep int)+ ")"`, where
//! `sep` is any run of spaces and/or commas. Cycles in one expression must be
//! disjoint, so the order in which they are listed never matters. Positions in
//! errors are 1-based character columns.

use crate::error::{GroupError, Result};
use crate::perm::Permutation;

/// A parsed but not yet materialized cycle expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleExpression {
    pub source: String,
    pub cycles: Vec<Vec<usize>>,
    /// Largest point mentioned (0 for `()`).
    pub implied_degree: usize,
}

impl CycleExpression {
    pub fn parse(text: &str) -> Result<Self> {
        Parser::new(text).expression()
    }

    /// Materializes the expression on `degree` points, or on the implied
    /// degree when none is given.
    pub fn to_permutation(&self, degree: Option<usize>) -> Result<Permutation> {
        let n = match degree {
            Some(d) if d < self.implied_degree => {
                return Err(GroupError::Parse {
                    pos: self.position_of(self.implied_degree),
                    msg: format!("point {} exceeds degree {d}", self.implied_degree),
                })
            }
            Some(0) => {
                return Err(GroupError::Parse {
                    pos: 1,
                    msg: "degree must be positive".into(),
                })
            }
            Some(d) => d,
            None => self.implied_degree.max(1),
        };
        Permutation::from_cycles(n, &self.cycles)
    }

    fn position_of(&self, point: usize) -> usize {
        let needle = point.to_string();
        let bytes = self.source.as_bytes();
        let mut from = 0;
        while let Some(off) = self.source[from..].find(&needle) {
            let start = from + off;
            let end = start + needle.len();
            let bounded = (start == 0 || !bytes[start - 1].is_ascii_digit())
                && (end == bytes.len() || !bytes[end].is_ascii_digit());
            if bounded {
                return self.source[..start].chars().count() + 1;
            }
            from = end;
        }
        1
    }
}

struct Parser<'a> {
    text: &'a str,
    chars: Vec<(usize, char)>,
    at: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            text,
            chars: text.char_indices().collect(),
            at: 0,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(GroupError::Parse {
            pos: self.at + 1,
            msg: msg.into(),
        })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn skip(&mut self, pred: impl Fn(char) -> bool) {
        while self.peek().is_some_and(&pred) {
            self.at += 1;
        }
    }

    fn expression(mut self) -> Result<CycleExpression> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut used: Vec<usize> = Vec::new();
        self.skip(char::is_whitespace);
        if self.peek().is_none() {
            return self.err("empty expression; write () for the identity");
        }
        let mut saw_identity = false;
        while let Some(c) = self.peek() {
            if c != '(' {
                return self.err(format!("expected '(' but found {c:?}"));
            }
            self.at += 1;
            self.skip(|c| c == ' ' || c == ',');
            if self.peek() == Some(')') {
                self.at += 1;
                saw_identity = true;
                self.skip(char::is_whitespace);
                continue;
            }
            let mut cycle = Vec::new();
            loop {
                self.skip(|c| c == ' ' || c == ',');
                match self.peek() {
                    Some(')') => {
                        self.at += 1;
                        break;
                    }
                    Some(d) if d.is_ascii_digit() => {
                        let start = self.at;
                        self.skip(|c| c.is_ascii_digit());
                        let lo = self.chars[start].0;
                        let hi = self.chars.get(self.at).map_or(self.text.len(), |&(i, _)| i);
                        let value: usize = match self.text[lo..hi].parse() {
                            Ok(v) => v,
                            Err(_) => {
                                self.at = start;
                                return self.err("integer out of range");
                            }
                        };
                        if value == 0 {
                            self.at = start;
                            return self.err("points are numbered from 1");
                        }
                        if value > u16::MAX as usize {
                            self.at = start;
                            return self.err(format!("point {value} is too large"));
                        }
                        if used.contains(&value) {
                            self.at = start;
                            return self.err(format!("point {value} repeated"));
                        }
                        used.push(value);
                        cycle.push(value);
                    }
                    Some(c) => return self.err(format!("unexpected {c:?} inside cycle")),
                    None => return self.err("unterminated cycle"),
                }
            }
            if cycle.len() < 2 {
                self.at -= 1;
                return self.err("a cycle needs at least two points");
            }
            cycles.push(cycle);
            self.skip(char::is_whitespace);
        }
        if saw_identity && !cycles.is_empty() {
            return Err(GroupError::Parse {
                pos: 1,
                msg: "() cannot be combined with other cycles".into(),
            });
        }
        let implied_degree = used.iter().copied().max().unwrap_or(0);
        Ok(CycleExpression {
            source: self.text.to_string(),
            cycles,
            implied_degree,
        })
    }
}

/// Parses one disjoint-cycle expression into a permutation.
pub fn parse_cycles(text: &str, degree: Option<usize>) -> Result<Permutation> {
    CycleExpression::parse(text)?.to_permutation(degree)
}

/// Parses a `;`-separated list of cycle expressions on a common degree
/// (the largest point mentioned when `degree` is `None`).
pub fn parse_generator_list(text: &str, degree: Option<usize>) -> Result<(usize, Vec<Permutation>)> {
    let mut exprs = Vec::new();
    let mut offset = 0;
    for part in text.split(';') {
        if !part.trim().is_empty() {
            let expr = CycleExpression::parse(part).map_err(|e| shift(e, offset))?;
            exprs.push((offset, expr));
        }
        offset += part.chars().count() + 1;
    }
    let implied = exprs.iter().map(|(_, e)| e.implied_degree).max().unwrap_or(0);
    let n = degree.unwrap_or(implied.max(1));
    let perms = exprs
        .iter()
        .map(|(off, e)| e.to_permutation(Some(n)).map_err(|err| shift(err, *off)))
        .collect::<Result<Vec<_>>>()?;
    Ok((n, perms))
}

/// Product `e₁ ∘ e₂ ∘ … ∘ eₖ` of possibly overlapping expressions; the
/// rightmost factor is applied first.
pub fn parse_product(texts: &[&str], degree: Option<usize>) -> Result<Permutation> {
    let exprs = texts
        .iter()
        .map(|t| CycleExpression::parse(t))
        .collect::<Result<Vec<_>>>()?;
    let implied = exprs.iter().map(|e| e.implied_degree).max().unwrap_or(0);
    let n = degree.unwrap_or(implied.max(1));
    let mut acc = Permutation::identity(n);
    for e in &exprs {
        acc = acc.compose(&e.to_permutation(Some(n))?)?;
    }
    Ok(acc)
}

/// Canonical cycle notation.
pub fn render(p: &Permutation) -> String {
    p.to_string()
}

fn shift(err: GroupError, by: usize) -> GroupError {
    match err {
        GroupError::Parse { pos, msg } => GroupError::Parse { pos: pos + by, msg },
        other => other,
    }
}
