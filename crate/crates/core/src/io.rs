//! Text formats: APX and TGF frameworks, and measure files over the compact
//! generic world space.

use std::fmt::Write as _;

use crate::framework::{ArgumentationFramework, FrameworkError};
use crate::generic::{GenericSpace, GenericWorld};
use crate::ranking::{Rank, RankingMeasure};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: undeclared argument `{name}`")]
    UndeclaredArgument { line: usize, name: String },
    #[error("missing `#` separator between nodes and edges")]
    MissingSeparator,
    #[error("world {0} is missing from the measure file")]
    MissingWorld(String),
    #[error(transparent)]
    Framework(#[from] FrameworkError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn is_name_char(c: char) -> bool {
    !c.is_whitespace() && !matches!(c, '(' | ')' | ',' | '.' | '%')
}

/// Incrementally collects declared arguments (duplicates are idempotent)
/// and attacks with the line they appeared on.
#[derive(Default)]
struct Builder {
    names: Vec<String>,
    attacks: Vec<(usize, String, String)>,
}

impl Builder {
    fn declare(&mut self, name: &str) {
        if !self.names.iter().any(|n| n == name) {
            self.names.push(name.to_string());
        }
    }

    fn finish(self) -> Result<ArgumentationFramework, ParseError> {
        for (line, a, b) in &self.attacks {
            for name in [a, b] {
                if !self.names.contains(name) {
                    return Err(ParseError::UndeclaredArgument {
                        line: *line,
                        name: name.clone(),
                    });
                }
            }
        }
        Ok(ArgumentationFramework::new(
            self.names,
            self.attacks.into_iter().map(|(_, a, b)| (a, b)),
        )?)
    }
}

struct Cursor<'a> {
    rest: &'a str,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        self.rest = self.rest.trim_start();
    }

    fn expect(&mut self, token: char) -> Result<(), ParseError> {
        self.skip_ws();
        match self.rest.strip_prefix(token) {
            Some(rest) => {
                self.rest = rest;
                Ok(())
            }
            None => Err(syntax(
                self.line,
                format!("expected `{token}` at `{}`", self.rest),
            )),
        }
    }

    fn name(&mut self) -> Result<&'a str, ParseError> {
        self.skip_ws();
        let end = self
            .rest
            .find(|c| !is_name_char(c))
            .unwrap_or(self.rest.len());
        if end == 0 {
            return Err(syntax(
                self.line,
                format!("expected a name at `{}`", self.rest),
            ));
        }
        let (name, rest) = self.rest.split_at(end);
        self.rest = rest;
        Ok(name)
    }
}

/// Parses `arg(NAME).` and `att(A,B).` statements. Any number of statements
/// may share a line; `%` starts a comment running to the end of the line.
pub fn parse_apx(text: &str) -> Result<ArgumentationFramework, ParseError> {
    let mut builder = Builder::default();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('%').next().unwrap_or("");
        let mut cur = Cursor {
            rest: content,
            line: i + 1,
        };
        loop {
            cur.skip_ws();
            if cur.rest.is_empty() {
                break;
            }
            let keyword = cur.name()?;
            cur.expect('(')?;
            match keyword {
                "arg" => {
                    let name = cur.name()?;
                    builder.declare(name);
                }
                "att" => {
                    let a = cur.name()?;
                    cur.expect(',')?;
                    let b = cur.name()?;
                    builder.attacks.push((i + 1, a.to_string(), b.to_string()));
                }
                other => return Err(syntax(i + 1, format!("unknown statement `{other}`"))),
            }
            cur.expect(')')?;
            cur.expect('.')?;
        }
    }
    builder.finish()
}

pub fn write_apx(framework: &ArgumentationFramework) -> String {
    let mut out = String::new();
    for name in framework.names() {
        writeln!(out, "arg({name}).").unwrap();
    }
    for (a, b) in framework.attacks() {
        writeln!(out, "att({},{}).", framework.name(a), framework.name(b)).unwrap();
    }
    out
}

/// Parses trivial graph format: one node id per line, a `#` line, then one
/// `FROM TO` pair per line. Blank lines are ignored.
pub fn parse_tgf(text: &str) -> Result<ArgumentationFramework, ParseError> {
    let mut builder = Builder::default();
    let mut in_edges = false;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line == "#" {
            if in_edges {
                return Err(syntax(i + 1, "second `#` separator"));
            }
            in_edges = true;
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if in_edges {
            match tokens.as_slice() {
                [a, b] => builder.attacks.push((i + 1, a.to_string(), b.to_string())),
                _ => return Err(syntax(i + 1, format!("expected `FROM TO`, got `{line}`"))),
            }
        } else {
            match tokens.as_slice() {
                [name] => builder.declare(name),
                _ => return Err(syntax(i + 1, format!("expected one node id, got `{line}`"))),
            }
        }
    }
    if !in_edges {
        return Err(ParseError::MissingSeparator);
    }
    builder.finish()
}

pub fn write_tgf(framework: &ArgumentationFramework) -> String {
    let mut out = String::new();
    for name in framework.names() {
        writeln!(out, "{name}").unwrap();
    }
    out.push_str("#\n");
    for (a, b) in framework.attacks() {
        writeln!(out, "{} {}", framework.name(a), framework.name(b)).unwrap();
    }
    out
}

/// Parses a measure over the compact space of `space`: one `STATE RANK`
/// line per world, where `STATE` spells the world with `-`, `Y`, `N` per
/// argument and `RANK` is an integer, a fraction `p/q`, or `inf`. Lines
/// starting with `#` or `%` are comments. Every world must appear exactly
/// once. With zero arguments the single line holds just the rank.
pub fn parse_measure(text: &str, space: &GenericSpace) -> Result<RankingMeasure, ParseError> {
    let mut ranks: Vec<Option<Rank>> = vec![None; space.len()];
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let (state, rank) = match tokens.as_slice() {
            [state, rank] => (*state, *rank),
            [rank] if space.arguments() == 0 => ("", *rank),
            _ => {
                return Err(syntax(
                    i + 1,
                    format!("expected `STATE RANK`, got `{line}`"),
                ))
            }
        };
        let world: GenericWorld = state
            .parse()
            .map_err(|c| syntax(i + 1, format!("invalid state symbol `{c}`")))?;
        let w = space.index_of(&world).ok_or_else(|| {
            syntax(
                i + 1,
                format!(
                    "state `{state}` does not have {} symbols",
                    space.arguments()
                ),
            )
        })?;
        let rank: Rank = rank.parse().map_err(|e| syntax(i + 1, format!("{e}")))?;
        if ranks[w].replace(rank).is_some() {
            return Err(syntax(i + 1, format!("world `{state}` listed twice")));
        }
    }
    let ranks = ranks
        .into_iter()
        .enumerate()
        .map(|(w, r)| r.ok_or_else(|| ParseError::MissingWorld(space.world(w).to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RankingMeasure::from_ranks(ranks))
}

pub fn write_measure(measure: &RankingMeasure, space: &GenericSpace) -> String {
    let mut out = String::new();
    for w in 0..space.len() {
        writeln!(out, "{} {}", space.world(w), measure.world_rank(w)).unwrap();
    }
    out
}
