//! Text, DOT and TikZ renderings of finite posets.
//!
//! Elements are drawn in levels by depth below the maxima. Output depends only
//! on the poset and the labels, so it is stable across runs.

use std::fmt::Write;
use std::str::FromStr;

use crate::order::FinitePoset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Dot,
    Tikz,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "dot" => Ok(Format::Dot),
            "tikz" => Ok(Format::Tikz),
            other => Err(format!("unknown format {other:?} (expected text, dot or tikz)")),
        }
    }
}

struct Layout {
    labels: Vec<String>,
    rank: Vec<usize>,
    /// Elements sorted by (rank, label).
    order: Vec<usize>,
    /// Position of each element in `order`.
    slot: Vec<usize>,
    /// (upper, lower) covers in canonical order.
    covers: Vec<(usize, usize)>,
}

impl Layout {
    fn new<L>(p: &FinitePoset<L>, label: impl Fn(&L) -> String) -> Self {
        let labels: Vec<String> = p.labels().iter().map(label).collect();
        let rank = p.depths();
        let mut order: Vec<usize> = (0..p.len()).collect();
        order.sort_by(|&a, &b| (rank[a], &labels[a], a).cmp(&(rank[b], &labels[b], b)));
        let mut slot = vec![0; p.len()];
        for (i, &x) in order.iter().enumerate() {
            slot[x] = i;
        }
        let mut covers = p.covers();
        covers.sort_by_key(|&(u, l)| (slot[u], slot[l]));
        Layout {
            labels,
            rank,
            order,
            slot,
            covers,
        }
    }
}

/// Renders `p` with each element labeled by `label`.
pub fn emit_poset<L>(p: &FinitePoset<L>, format: Format, label: impl Fn(&L) -> String) -> String {
    let layout = Layout::new(p, label);
    match format {
        Format::Text => text(&layout),
        Format::Dot => dot(&layout),
        Format::Tikz => tikz(&layout),
    }
}

fn text(l: &Layout) -> String {
    let mut out = String::new();
    writeln!(out, "elements {}", l.order.len()).unwrap();
    for &x in &l.order {
        writeln!(out, "{} {}", l.rank[x], l.labels[x]).unwrap();
    }
    writeln!(out, "covers {}", l.covers.len()).unwrap();
    for &(u, v) in &l.covers {
        writeln!(out, "{} > {}", l.labels[u], l.labels[v]).unwrap();
    }
    out
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn dot(l: &Layout) -> String {
    let mut out =
        String::from("digraph poset {\n  rankdir=TB;\n  node [shape=plaintext];\n  edge [dir=none];\n");
    for &x in &l.order {
        writeln!(out, "  n{} [label=\"{}\"];", l.slot[x], dot_escape(&l.labels[x])).unwrap();
    }
    let levels = l.rank.iter().copied().max().map_or(0, |r| r + 1);
    for r in 0..levels {
        let ids: Vec<String> = l
            .order
            .iter()
            .filter(|&&x| l.rank[x] == r)
            .map(|&x| format!("n{}", l.slot[x]))
            .collect();
        writeln!(out, "  {{ rank=same; {}; }}", ids.join("; ")).unwrap();
    }
    for &(u, v) in &l.covers {
        writeln!(out, "  n{} -> n{};", l.slot[u], l.slot[v]).unwrap();
    }
    out.push_str("}\n");
    out
}

fn tikz_escape(s: &str) -> String {
    // Compact configurations fence the origin digit with underscores; TikZ
    // shows it underlined instead.
    let fenced: Vec<&str> = s.split('_').collect();
    if let [a, b, c] = fenced[..] {
        return format!("${a}\\underline{{{b}}}{c}$");
    }
    match s.split_once('^') {
        Some((site, index)) => format!("${site}^{{{index}}}$"),
        None => s.to_string(),
    }
}

fn tikz(l: &Layout) -> String {
    let mut out = String::from("\\begin{tikzpicture}[scale=1]\n");
    let mut by_rank: Vec<Vec<usize>> = Vec::new();
    for &x in &l.order {
        if by_rank.len() <= l.rank[x] {
            by_rank.resize(l.rank[x] + 1, Vec::new());
        }
        by_rank[l.rank[x]].push(x);
    }
    for level in &by_rank {
        let width = level.len() as f64 - 1.0;
        for (i, &x) in level.iter().enumerate() {
            let xpos = 1.5 * (i as f64 - width / 2.0);
            writeln!(
                out,
                "  \\node (n{}) at ({}, {}) {{{}}};",
                l.slot[x],
                fmt_coord(xpos),
                fmt_coord(-(l.rank[x] as f64)),
                tikz_escape(&l.labels[x])
            )
            .unwrap();
        }
    }
    for &(u, v) in &l.covers {
        writeln!(out, "  \\draw (n{}) -- (n{});", l.slot[u], l.slot[v]).unwrap();
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

fn fmt_coord(v: f64) -> String {
    let s = format!("{v:.2}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}
