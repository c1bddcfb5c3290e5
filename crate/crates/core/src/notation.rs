//! Text formats: chip configurations and graph files.
//!
//! Configurations come in two forms. The sparse form is whitespace-separated
//! `site:count` tokens (`-2:1 0:3 2:1`). The compact form is for the line: one
//! digit per site with the origin digit fenced by underscores, so `10_3_01`
//! is one chip at -2, three at the origin and one at 2. It only covers counts
//! up to 9.
//!
//! Graph files look like
//!
//! ```text
//! # a triangle with one sink
//! graph 3
//! edge 0 1 1
//! edge 1 2 2
//! sink 2
//! ```
//!
//! Duplicate edge lines add their multiplicities.

use std::fmt;

use thiserror::Error;

use crate::firing::{ChipConfig, FiringSystem, Multigraph, Site};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

/// Parses either config form. Sites are checked against `system`.
pub fn parse_config(text: &str, system: &FiringSystem) -> Result<ChipConfig, ParseError> {
    let trimmed = text.trim();
    let cfg = if trimmed.contains('_') && !trimmed.contains(':') {
        if !system.is_line() {
            return Err(ParseError::new(
                1,
                1,
                "compact notation is only defined on the line",
            ));
        }
        parse_compact(text)?
    } else {
        parse_sparse(text)?
    };
    if let Err(e) = system.validate(&cfg) {
        return Err(ParseError::new(1, 1, e.to_string()));
    }
    Ok(cfg)
}

fn parse_compact(text: &str) -> Result<ChipConfig, ParseError> {
    let offset = text.len() - text.trim_start().len();
    let body = text.trim();
    let parts: Vec<&str> = body.split('_').collect();
    if parts.len() != 3 {
        return Err(ParseError::new(
            1,
            offset + 1,
            "expected exactly one `_d_` origin marker",
        ));
    }
    let (left, origin, right) = (parts[0], parts[1], parts[2]);
    if origin.chars().count() != 1 {
        return Err(ParseError::new(
            1,
            offset + left.len() + 2,
            "the origin marker must enclose a single digit",
        ));
    }
    let mut cfg = ChipConfig::new();
    let mut column = offset + 1;
    let mut digit = |c: char, site: i64, column: usize| -> Result<(), ParseError> {
        let d = c
            .to_digit(10)
            .ok_or_else(|| ParseError::new(1, column, format!("expected a digit, found `{c}`")))?;
        cfg.add(Site(site), d as u64);
        Ok(())
    };
    let left_len = left.chars().count() as i64;
    for (i, c) in left.chars().enumerate() {
        digit(c, i as i64 - left_len, column)?;
        column += 1;
    }
    column += 1;
    digit(origin.chars().next().unwrap(), 0, column)?;
    column += 2;
    for (i, c) in right.chars().enumerate() {
        digit(c, i as i64 + 1, column)?;
        column += 1;
    }
    Ok(cfg)
}

fn parse_sparse(text: &str) -> Result<ChipConfig, ParseError> {
    let mut cfg = ChipConfig::new();
    let mut seen = std::collections::BTreeSet::new();
    for (line_no, line) in text.lines().enumerate() {
        let line_no = line_no + 1;
        for (column, token) in tokens(line) {
            let (site, count) = token.split_once(':').ok_or_else(|| {
                ParseError::new(line_no, column, format!("expected `site:count`, found `{token}`"))
            })?;
            let site: i64 = site
                .parse()
                .map_err(|_| ParseError::new(line_no, column, format!("bad site `{site}`")))?;
            let count_col = column + token.find(':').unwrap() + 1;
            if count.starts_with('-') {
                return Err(ParseError::new(
                    line_no,
                    count_col,
                    "chip counts cannot be negative",
                ));
            }
            let count: u64 = count
                .parse()
                .map_err(|_| ParseError::new(line_no, count_col, format!("bad count `{count}`")))?;
            if !seen.insert(site) {
                return Err(ParseError::new(
                    line_no,
                    column,
                    format!("site {site} listed twice"),
                ));
            }
            cfg.add(Site(site), count);
        }
    }
    Ok(cfg)
}

// Whitespace-separated tokens with 1-based columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out.into_iter()
}

/// Compact line notation, spanning the support and the origin. `None` when
/// some count exceeds 9.
pub fn format_compact(cfg: &ChipConfig) -> Option<String> {
    let (lo, hi) = cfg.support_bounds().unwrap_or((Site(0), Site(0)));
    let (lo, hi) = (lo.0.min(0), hi.0.max(0));
    let mut out = String::new();
    for s in lo..=hi {
        let c = cfg.get(Site(s));
        if c > 9 {
            return None;
        }
        let d = char::from_digit(c as u32, 10).unwrap();
        if s == 0 {
            out.push('_');
            out.push(d);
            out.push('_');
        } else {
            out.push(d);
        }
    }
    Some(out)
}

pub fn format_sparse(cfg: &ChipConfig) -> String {
    cfg.to_string()
}

/// Display wrapper choosing the compact form when it applies.
pub struct LineNotation<'a>(pub &'a ChipConfig);

impl fmt::Display for LineNotation<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match format_compact(self.0) {
            Some(s) => f.write_str(&s),
            None => write!(f, "{}", self.0),
        }
    }
}

/// Preferred label for a configuration of `system`.
pub fn config_label(system: &FiringSystem, cfg: &ChipConfig) -> String {
    if system.is_line() {
        LineNotation(cfg).to_string()
    } else {
        format_sparse(cfg)
    }
}

pub fn parse_graph(text: &str) -> Result<Multigraph, ParseError> {
    let mut graph: Option<Multigraph> = None;
    for (line_no, raw) in text.lines().enumerate() {
        let line_no = line_no + 1;
        let line = raw.split('#').next().unwrap_or("");
        let toks: Vec<(usize, &str)> = tokens(line).collect();
        let Some(&(col, keyword)) = toks.first() else {
            continue;
        };
        let num = |i: usize| -> Result<u64, ParseError> {
            let (c, t) = toks.get(i).copied().ok_or_else(|| {
                ParseError::new(line_no, col, format!("`{keyword}` is missing an argument"))
            })?;
            t.parse().map_err(|_| {
                ParseError::new(line_no, c, format!("expected a nonnegative integer, found `{t}`"))
            })
        };
        let arity = |n: usize| -> Result<(), ParseError> {
            match toks.get(n) {
                Some(&(c, t)) => Err(ParseError::new(line_no, c, format!("unexpected `{t}`"))),
                None => Ok(()),
            }
        };
        match keyword {
            "graph" => {
                if graph.is_some() {
                    return Err(ParseError::new(line_no, col, "duplicate `graph` header"));
                }
                let n = num(1)?;
                arity(2)?;
                graph = Some(Multigraph::new(n as usize));
            }
            "edge" | "sink" => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| ParseError::new(line_no, col, "`graph <n>` header must come first"))?;
                if keyword == "edge" {
                    let (u, v, m) = (num(1)?, num(2)?, num(3)?);
                    arity(4)?;
                    g.add_edge(u as usize, v as usize, m)
                        .map_err(|e| ParseError::new(line_no, col, e.to_string()))?;
                } else {
                    let v = num(1)?;
                    arity(2)?;
                    g.set_sink(v as usize)
                        .map_err(|e| ParseError::new(line_no, col, e.to_string()))?;
                }
            }
            other => {
                return Err(ParseError::new(
                    line_no,
                    col,
                    format!("unknown directive `{other}`"),
                ));
            }
        }
    }
    graph.ok_or_else(|| ParseError::new(1, 1, "missing `graph <n>` header"))
}

pub fn format_graph(g: &Multigraph) -> String {
    let mut out = format!("graph {}\n", g.vertex_count());
    for (u, v, m) in g.edges() {
        out.push_str(&format!("edge {u} {v} {m}\n"));
    }
    for s in g.sinks() {
        out.push_str(&format!("sink {s}\n"));
    }
    out
}
