//! The line-oriented algebra file format.
//!
//! ```text
//! algebra b2
//! kind semiring
//! size 2
//! zero 0
//! one 1
//! op add
//! 0 1
//! 1 1
//! op mul
//! 0 0
//! 0 1
//! end
//! ```
//!
//! `#` starts a comment and blank lines are ignored. MV files omit the `one`
//! line and carry `op oplus` (binary) and `op neg` (a single row).

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::algebra::{
    AlgebraValue, BinOp, Carrier, Elem, Kind, MvAlg, ResiduatedLatticeAlg, SemiringAlg, UnOp,
    MAX_CARRIER,
};
use crate::{Error, Result};

#[derive(Debug, Clone)]
struct Token<'a> {
    text: &'a str,
    column: usize,
}

#[derive(Debug, Clone)]
struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

fn lex(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in content
            .char_indices()
            .chain(std::iter::once((content.len(), ' ')))
        {
            if ch.is_whitespace() {
                if let Some(s) = start.take() {
                    tokens.push(Token {
                        text: &content[s..pos],
                        column: s + 1,
                    });
                }
            } else if start.is_none() {
                start = Some(pos);
            }
        }
        if !tokens.is_empty() {
            out.push(Line {
                number: i + 1,
                tokens,
            });
        }
    }
    out
}

struct Parser<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    last_line: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        let last_line = text.lines().count().max(1);
        Parser {
            lines: lex(text),
            pos: 0,
            last_line,
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.lines.len()
    }

    fn peek(&self) -> Option<&Line<'a>> {
        self.lines.get(self.pos)
    }

    fn next_line(&mut self, what: &str) -> Result<Line<'a>> {
        let line = self.lines.get(self.pos).cloned().ok_or_else(|| {
            syntax(
                self.last_line,
                1,
                format!("unexpected end of input, expected {what}"),
            )
        })?;
        self.pos += 1;
        Ok(line)
    }

    /// A `<keyword> <value>` line.
    fn keyword(&mut self, keyword: &str) -> Result<Token<'a>> {
        let line = self.next_line(&format!("`{keyword}`"))?;
        let head = &line.tokens[0];
        if head.text != keyword {
            return Err(syntax(
                line.number,
                head.column,
                format!("expected `{keyword}`, found `{}`", head.text),
            ));
        }
        match line.tokens.len() {
            2 => Ok(line.tokens[1].clone()),
            1 => Err(syntax(
                line.number,
                head.column + head.text.len(),
                format!("`{keyword}` needs a value"),
            )),
            _ => Err(syntax(
                line.number,
                line.tokens[2].column,
                "unexpected extra token",
            )),
        }
    }

    fn number(line: usize, tok: &Token<'_>) -> Result<usize> {
        tok.text.parse::<usize>().map_err(|_| {
            syntax(
                line,
                tok.column,
                format!("expected a decimal index, found `{}`", tok.text),
            )
        })
    }

    fn index(line: usize, tok: &Token<'_>, size: usize) -> Result<Elem> {
        let v = Self::number(line, tok)?;
        if v >= size {
            return Err(Error::IndexOutOfRange {
                line,
                column: tok.column,
                index: v,
                size,
            });
        }
        Ok(v)
    }

    fn is_block_boundary(line: &Line<'_>) -> bool {
        matches!(line.tokens[0].text, "op" | "end" | "algebra")
    }

    fn row(
        &mut self,
        op: &str,
        size: usize,
        header_line: usize,
        expected_rows: usize,
        found: usize,
    ) -> Result<Vec<Elem>> {
        let line = match self.peek() {
            Some(l) if !Self::is_block_boundary(l) => self.next_line("table row")?,
            Some(l) => {
                return Err(Error::RowCount {
                    line: l.number,
                    op: op.to_string(),
                    expected: expected_rows,
                    found,
                })
            }
            None => {
                return Err(Error::RowCount {
                    line: header_line,
                    op: op.to_string(),
                    expected: expected_rows,
                    found,
                })
            }
        };
        if line.tokens.len() != size {
            return Err(Error::RowLength {
                line: line.number,
                op: op.to_string(),
                expected: size,
                found: line.tokens.len(),
            });
        }
        line.tokens
            .iter()
            .map(|t| Self::index(line.number, t, size))
            .collect()
    }

    fn algebra(&mut self) -> Result<AlgebraValue> {
        let name = self.keyword("algebra")?.text.to_string();
        let kind_tok = self.keyword("kind")?;
        let kind_line = self.lines[self.pos - 1].number;
        let kind: Kind = kind_tok
            .text
            .parse()
            .map_err(|m: String| syntax(kind_line, kind_tok.column, m))?;
        let size_tok = self.keyword("size")?;
        let size_line = self.lines[self.pos - 1].number;
        let size = Self::number(size_line, &size_tok)?;
        if size == 0 || size > MAX_CARRIER {
            return Err(syntax(
                size_line,
                size_tok.column,
                format!("size must be in 1..={MAX_CARRIER}"),
            ));
        }
        let zero_tok = self.keyword("zero")?;
        let zero = Self::index(self.lines[self.pos - 1].number, &zero_tok, size)?;
        let one = if kind == Kind::Mv {
            None
        } else {
            let one_tok = self.keyword("one")?;
            Some((
                Self::index(self.lines[self.pos - 1].number, &one_tok, size)?,
                self.lines[self.pos - 1].number,
            ))
        };

        let mut binary: BTreeMap<&'static str, BinOp> = BTreeMap::new();
        let mut unary: BTreeMap<&'static str, UnOp> = BTreeMap::new();
        loop {
            let line = self.next_line("`op` or `end`")?;
            let head = &line.tokens[0];
            match head.text {
                "end" => {
                    if line.tokens.len() > 1 {
                        return Err(syntax(
                            line.number,
                            line.tokens[1].column,
                            "unexpected token after `end`",
                        ));
                    }
                    break;
                }
                "op" => {
                    if line.tokens.len() != 2 {
                        return Err(syntax(line.number, head.column, "expected `op <name>`"));
                    }
                    let op_text = line.tokens[1].text;
                    let op = *kind.ops().iter().find(|o| **o == op_text).ok_or_else(|| {
                        Error::UnknownOp {
                            line: line.number,
                            op: op_text.to_string(),
                            kind,
                        }
                    })?;
                    if binary.contains_key(op) || unary.contains_key(op) {
                        return Err(Error::DuplicateOp {
                            line: line.number,
                            op: op.to_string(),
                        });
                    }
                    if kind.is_unary_op(op) {
                        let row = self.row(op, size, line.number, 1, 0)?;
                        unary.insert(op, UnOp::from_vec(row)?);
                    } else {
                        let mut table = Vec::with_capacity(size * size);
                        for found in 0..size {
                            table.extend(self.row(op, size, line.number, size, found)?);
                        }
                        binary.insert(op, BinOp::from_table(size, table)?);
                    }
                }
                other => {
                    return Err(syntax(
                        line.number,
                        head.column,
                        format!("expected `op` or `end`, found `{other}`"),
                    ))
                }
            }
        }

        for op in kind.ops() {
            if !binary.contains_key(op) && !unary.contains_key(op) {
                return Err(Error::MissingOp {
                    op: op.to_string(),
                    kind,
                });
            }
        }
        let mut take = |op: &str| binary.remove(op).expect("checked above");
        let carrier = |one: Option<(Elem, usize)>| {
            let (one, line) = one.expect("non-mv kinds declare one");
            Carrier::new(size, zero, one).map_err(|e| syntax(line, 1, e.to_string()))
        };
        Ok(match kind {
            Kind::Semiring => {
                let add = take("add");
                let mul = take("mul");
                SemiringAlg::new(name, carrier(one)?, add, mul)?.into()
            }
            Kind::Reslat => {
                let (join, meet, odot, res) =
                    (take("join"), take("meet"), take("odot"), take("res"));
                ResiduatedLatticeAlg::new(name, carrier(one)?, join, meet, odot, res)?.into()
            }
            Kind::Mv => {
                let oplus = take("oplus");
                let neg = unary.remove("neg").expect("checked above");
                MvAlg::new(name, size, zero, oplus, neg)?.into()
            }
        })
    }
}

/// Parses exactly one algebra. No laws are checked.
pub fn parse_algebra(text: &str) -> Result<AlgebraValue> {
    let mut p = Parser::new(text);
    let alg = p.algebra()?;
    if let Some(line) = p.peek() {
        return Err(syntax(
            line.number,
            line.tokens[0].column,
            "trailing content after `end`",
        ));
    }
    Ok(alg)
}

/// Parses a stream of concatenated algebra files.
pub fn parse_algebras(text: &str) -> Result<Vec<AlgebraValue>> {
    let mut p = Parser::new(text);
    let mut out = Vec::new();
    while !p.at_end() {
        out.push(p.algebra()?);
    }
    Ok(out)
}

fn emit_binop(out: &mut String, name: &str, op: &BinOp) {
    let _ = writeln!(out, "op {name}");
    for row in op.rows() {
        emit_row(out, row);
    }
}

fn emit_row(out: &mut String, row: &[Elem]) {
    for (i, v) in row.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{v}");
    }
    out.push('\n');
}

/// Renders an algebra in the file format; `parse_algebra(&emit(a))`
/// reproduces `a` exactly.
pub fn emit(alg: &AlgebraValue) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "algebra {}", alg.name());
    let _ = writeln!(out, "kind {}", alg.kind());
    let _ = writeln!(out, "size {}", alg.size());
    let _ = writeln!(out, "zero {}", alg.zero());
    if let Some(one) = alg.declared_one() {
        let _ = writeln!(out, "one {one}");
    }
    match alg {
        AlgebraValue::Semiring(a) => {
            emit_binop(&mut out, "add", &a.add);
            emit_binop(&mut out, "mul", &a.mul);
        }
        AlgebraValue::Reslat(a) => {
            emit_binop(&mut out, "join", &a.join);
            emit_binop(&mut out, "meet", &a.meet);
            emit_binop(&mut out, "odot", &a.odot);
            emit_binop(&mut out, "res", &a.res);
        }
        AlgebraValue::Mv(a) => {
            emit_binop(&mut out, "oplus", &a.oplus);
            out.push_str("op neg\n");
            emit_row(&mut out, a.neg.as_slice());
        }
    }
    out.push_str("end\n");
    out
}

/// Concatenated files separated by blank lines.
pub fn emit_stream<'a>(algs: impl IntoIterator<Item = &'a AlgebraValue>) -> String {
    algs.into_iter().map(emit).collect::<Vec<_>>().join("\n")
}
