//! The text formats for monoids and acts.
//!
//! ```text
//! monoid S2
//! elements: 1 0
//! one: 1
//! zero: 0
//! table:
//! 1 0
//! 0 0
//!
//! act W over S2 category acto
//! elements: θ a b
//! table:
//! θ a b
//! θ θ θ
//! ```
//!
//! Acts in `act0` carry a `zero:` line after `elements:`. Table rows follow
//! the monoid's element order. `#` starts a comment; blank lines are
//! ignored, and a file may hold any number of blocks.

use std::fmt::Write as _;
use std::sync::Arc;

use sact_core::{Act, Category, Error as CoreError, Monoid};

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug)]
struct Token<'a> {
    col: usize,
    text: &'a str,
}

#[derive(Debug)]
struct Line<'a> {
    no: usize,
    end_col: usize,
    tokens: Vec<Token<'a>>,
}

impl<'a> Line<'a> {
    fn err(&self, tok: usize, msg: impl Into<String>) -> CliError {
        let col = self.tokens.get(tok).map_or(self.end_col, |t| t.col);
        CliError::syntax(self.no, col, msg)
    }
}

fn tokenize(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start: Option<(usize, usize)> = None;
        let mut col = 0;
        for (byte, ch) in body.char_indices() {
            col += 1;
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some((byte, col)),
                (true, Some((b, c))) => {
                    tokens.push(Token {
                        col: c,
                        text: &body[b..byte],
                    });
                    start = None;
                }
                _ => {}
            }
        }
        if let Some((b, c)) = start {
            tokens.push(Token {
                col: c,
                text: &body[b..],
            });
        }
        if !tokens.is_empty() {
            out.push(Line {
                no: i + 1,
                end_col: col + 1,
                tokens,
            });
        }
    }
    out
}

/// A parsed block, in file order.
#[derive(Clone, Debug, PartialEq)]
pub enum Block {
    Monoid {
        name: String,
        monoid: Monoid,
    },
    Act {
        name: String,
        monoid: String,
        act: Act,
    },
}

/// Resolves monoid names while parsing acts.
pub trait MonoidLookup {
    fn monoid(&self, name: &str) -> Option<Arc<Monoid>>;
}

struct Cursor<'t, 'a> {
    lines: &'t [Line<'a>],
    pos: usize,
    last_no: usize,
}

impl<'t, 'a> Cursor<'t, 'a> {
    fn next(&mut self, what: &str) -> Result<&'t Line<'a>> {
        let line = self.lines.get(self.pos).ok_or_else(|| {
            CliError::syntax(
                self.last_no + 1,
                1,
                format!("expected {what}, found end of input"),
            )
        })?;
        self.pos += 1;
        self.last_no = line.no;
        Ok(line)
    }

    fn peek_keyword(&self) -> Option<&'a str> {
        self.lines.get(self.pos).map(|l| l.tokens[0].text)
    }

    /// A line `key: v1 v2 ...`, returning the value tokens.
    fn keyed(&mut self, key: &str) -> Result<(&'t Line<'a>, Vec<Token<'a>>)> {
        let line = self.next(&format!("`{key}:`"))?;
        let head = line.tokens[0];
        if head.text != format!("{key}:") {
            return Err(line.err(0, format!("expected `{key}:`, found `{}`", head.text)));
        }
        Ok((line, line.tokens[1..].to_vec()))
    }

    fn single(&mut self, key: &str) -> Result<(&'t Line<'a>, Token<'a>)> {
        let (line, vals) = self.keyed(key)?;
        match vals.as_slice() {
            [v] => Ok((line, *v)),
            [] => Err(line.err(1, format!("`{key}:` needs a label"))),
            _ => Err(line.err(2, format!("`{key}:` takes exactly one label"))),
        }
    }

    fn rows(
        &mut self,
        count: usize,
        width: usize,
        known: &[String],
        what: &str,
    ) -> Result<Vec<Vec<String>>> {
        let (line, rest) = self.keyed("table")?;
        if !rest.is_empty() {
            return Err(line.err(1, "`table:` stands on its own line"));
        }
        let mut rows = Vec::with_capacity(count);
        for r in 0..count {
            let line = self.next(&format!("table row {} of {count}", r + 1))?;
            if line.tokens.len() != width {
                let at = line.tokens.len().min(width);
                return Err(line.err(
                    at,
                    format!(
                        "{what} row has {} entries, expected {width}",
                        line.tokens.len()
                    ),
                ));
            }
            for (i, t) in line.tokens.iter().enumerate() {
                if !known.iter().any(|k| k == t.text) {
                    return Err(line.err(i, format!("unknown element `{}`", t.text)));
                }
            }
            rows.push(line.tokens.iter().map(|t| t.text.to_owned()).collect());
        }
        Ok(rows)
    }
}

fn labels(line: &Line<'_>, vals: &[Token<'_>]) -> Result<Vec<String>> {
    if vals.is_empty() {
        return Err(line.err(1, "`elements:` needs at least one label"));
    }
    Ok(vals.iter().map(|t| t.text.to_owned()).collect())
}

fn name_of(line: &Line<'_>, idx: usize) -> Result<String> {
    line.tokens
        .get(idx)
        .map(|t| t.text.to_owned())
        .ok_or_else(|| line.err(idx, "missing name"))
}

fn parse_monoid_block(cur: &mut Cursor<'_, '_>) -> Result<(String, Monoid)> {
    let header = cur.next("`monoid <name>`")?;
    let name = name_of(header, 1)?;
    if header.tokens.len() > 2 {
        return Err(header.err(2, "unexpected text after the monoid name"));
    }
    let (eline, evals) = cur.keyed("elements")?;
    let elements = labels(eline, &evals)?;
    let (oline, one) = cur.single("one")?;
    let (zline, zero) = cur.single("zero")?;
    for (line, tok) in [(oline, one), (zline, zero)] {
        if !elements.iter().any(|e| e == tok.text) {
            return Err(CliError::syntax(
                line.no,
                tok.col,
                format!("unknown element `{}`", tok.text),
            ));
        }
    }
    let n = elements.len();
    let rows = cur.rows(n, n, &elements, "monoid table")?;
    let monoid =
        Monoid::from_label_table(&elements, &rows, one.text, zero.text).map_err(|source| {
            CliError::Invalid {
                context: format!("monoid `{name}` (line {})", header.no),
                source,
            }
        })?;
    Ok((name, monoid))
}

fn parse_act_block(
    cur: &mut Cursor<'_, '_>,
    lookup: &dyn MonoidLookup,
) -> Result<(String, String, Act)> {
    let header = cur.next("`act <name> over <monoid> category <acto|act0>`")?;
    let name = name_of(header, 1)?;
    let shape = ["act", "", "over", "", "category", ""];
    for (i, want) in shape.iter().enumerate() {
        let Some(tok) = header.tokens.get(i) else {
            return Err(header.err(
                i,
                "expected `act <name> over <monoid> category <acto|act0>`",
            ));
        };
        if !want.is_empty() && tok.text != *want {
            return Err(header.err(i, format!("expected `{want}`, found `{}`", tok.text)));
        }
    }
    if header.tokens.len() > shape.len() {
        return Err(header.err(shape.len(), "unexpected text after the category"));
    }
    let category: Category = header.tokens[5]
        .text
        .parse()
        .map_err(|_| header.err(5, format!("unknown category `{}`", header.tokens[5].text)))?;
    let monoid_name = header.tokens[3].text.to_owned();
    let monoid = lookup
        .monoid(&monoid_name)
        .ok_or_else(|| CliError::UnknownMonoid(monoid_name.clone()))?;

    let (eline, evals) = cur.keyed("elements")?;
    let elements = labels(eline, &evals)?;
    let zero = if cur.peek_keyword() == Some("zero:") {
        let (zline, z) = cur.single("zero")?;
        if category == Category::Plain {
            return Err(zline.err(0, "`zero:` is only allowed for act0"));
        }
        if !elements.iter().any(|e| e == z.text) {
            return Err(CliError::syntax(
                zline.no,
                z.col,
                format!("unknown element `{}`", z.text),
            ));
        }
        Some(z.text.to_owned())
    } else {
        if category == Category::Zeroed {
            let at = cur.lines.get(cur.pos).unwrap_or(eline);
            return Err(at.err(0, "an act0 block needs a `zero:` line"));
        }
        None
    };
    let rows = cur.rows(monoid.size(), elements.len(), &elements, "act table")?;
    let invalid = |source| CliError::Invalid {
        context: format!("act `{name}` (line {})", header.no),
        source,
    };
    let act = Act::from_label_table(monoid, &elements, &rows, category).map_err(invalid)?;
    if let (Some(given), Some(actual)) = (zero, act.zero()) {
        if act.label(actual) != given {
            return Err(invalid(CoreError::WrongDesignatedZero {
                given,
                actual: act.label(actual).to_owned(),
            }));
        }
    }
    Ok((name, monoid_name, act))
}

/// Parses every block of a file. Acts may refer to monoids defined earlier
/// in the same text or known to `lookup`.
pub fn parse_document(text: &str, lookup: &dyn MonoidLookup) -> Result<Vec<Block>> {
    let lines = tokenize(text);
    let mut cur = Cursor {
        lines: &lines,
        pos: 0,
        last_no: 0,
    };
    let mut blocks = Vec::new();
    while let Some(kw) = cur.peek_keyword() {
        match kw {
            "monoid" => {
                let (name, monoid) = parse_monoid_block(&mut cur)?;
                blocks.push(Block::Monoid { name, monoid });
            }
            "act" => {
                let local = Chained {
                    blocks: &blocks,
                    outer: lookup,
                };
                let (name, monoid, act) = parse_act_block(&mut cur, &local)?;
                blocks.push(Block::Act { name, monoid, act });
            }
            other => {
                let line = &lines[cur.pos];
                return Err(line.err(0, format!("expected `monoid` or `act`, found `{other}`")));
            }
        }
    }
    Ok(blocks)
}

struct Chained<'b> {
    blocks: &'b [Block],
    outer: &'b dyn MonoidLookup,
}

impl MonoidLookup for Chained<'_> {
    fn monoid(&self, name: &str) -> Option<Arc<Monoid>> {
        self.blocks
            .iter()
            .rev()
            .find_map(|b| match b {
                Block::Monoid { name: n, monoid } if n == name => Some(Arc::new(monoid.clone())),
                _ => None,
            })
            .or_else(|| self.outer.monoid(name))
    }
}

struct NoMonoids;

impl MonoidLookup for NoMonoids {
    fn monoid(&self, _: &str) -> Option<Arc<Monoid>> {
        None
    }
}

/// Parses a text holding exactly one monoid block.
pub fn parse_monoid_file(text: &str) -> Result<(String, Monoid)> {
    let lines = tokenize(text);
    let mut cur = Cursor {
        lines: &lines,
        pos: 0,
        last_no: 0,
    };
    let out = parse_monoid_block(&mut cur)?;
    if let Some(extra) = lines.get(cur.pos) {
        return Err(extra.err(0, "unexpected text after the monoid block"));
    }
    Ok(out)
}

/// Parses a text holding exactly one act block.
pub fn parse_act_file(text: &str, lookup: &dyn MonoidLookup) -> Result<(String, Act)> {
    match parse_document(text, lookup)?.as_slice() {
        [Block::Act { name, act, .. }] => Ok((name.clone(), act.clone())),
        _ => Err(CliError::syntax(1, 1, "expected a single act block")),
    }
}

/// Parses a text with only monoid blocks, without any outside monoids.
pub fn parse_monoids(text: &str) -> Result<Vec<(String, Monoid)>> {
    parse_document(text, &NoMonoids)?
        .into_iter()
        .map(|b| match b {
            Block::Monoid { name, monoid } => Ok((name, monoid)),
            Block::Act { name, .. } => {
                Err(CliError::syntax(1, 1, format!("unexpected act `{name}`")))
            }
        })
        .collect()
}

pub fn print_monoid(name: &str, m: &Monoid) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "monoid {name}");
    let _ = writeln!(out, "elements: {}", m.labels().join(" "));
    let _ = writeln!(out, "one: {}", m.label(m.one()));
    let _ = writeln!(out, "zero: {}", m.label(m.zero()));
    out.push_str("table:\n");
    for x in m.elements() {
        let row: Vec<&str> = m.elements().map(|y| m.label(m.mul(x, y))).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

pub fn print_act(name: &str, monoid_name: &str, a: &Act) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "act {name} over {monoid_name} category {}",
        a.category()
    );
    let _ = writeln!(out, "elements: {}", a.labels().join(" "));
    if let Some(z) = a.zero() {
        let _ = writeln!(out, "zero: {}", a.label(z));
    }
    out.push_str("table:\n");
    for s in a.monoid().elements() {
        let row: Vec<&str> = a.row(s).iter().map(|&b| a.label(b)).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}
