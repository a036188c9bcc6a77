//! Text, DOT and JSON renderings of posets, digraphs and reports.
//!
//! All output is deterministic: elements in id order, covers in element
//! order, arcs by label.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fbb::AdjunctRepresentation;
use crate::graphs::DirectedLabeledGraph;
use crate::order::{ElemId, Element, Poset};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Text,
    Dot,
    Json,
    Csv,
}

impl FromStr for RenderFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(RenderFormat::Text),
            "dot" => Ok(RenderFormat::Dot),
            "json" => Ok(RenderFormat::Json),
            "csv" => Ok(RenderFormat::Csv),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

/// JSON shape of a poset: `{elements: [{id, name}], covers: [[lower, upper]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDoc {
    pub elements: Vec<Element>,
    pub covers: Vec<[ElemId; 2]>,
}

impl PosetDoc {
    pub fn of(p: &Poset) -> Self {
        PosetDoc {
            elements: p.elements().to_vec(),
            covers: p.covers().map(|(a, b)| [a, b]).collect(),
        }
    }

    pub fn into_poset(self) -> Result<Poset> {
        Poset::new(
            self.elements,
            self.covers.into_iter().map(|[a, b]| (a, b)).collect(),
        )
    }
}

/// JSON shape of a digraph: `{n, arcs: [[i, j, label]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub n: u32,
    pub arcs: Vec<[u32; 3]>,
}

impl GraphDoc {
    pub fn of(g: &DirectedLabeledGraph) -> Self {
        GraphDoc {
            n: g.n(),
            arcs: g
                .labeled_arcs()
                .into_iter()
                .map(|(i, j, k)| [i, j, k])
                .collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

/// JSON shape of a verification report: `{checks: [{name, status, detail}]}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub checks: Vec<CheckDoc>,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn poset_json(p: &Poset) -> String {
    to_json(&PosetDoc::of(p))
}

pub fn graph_json(g: &DirectedLabeledGraph) -> String {
    to_json(&GraphDoc::of(g))
}

pub fn report_json(r: &ReportDoc) -> String {
    to_json(r)
}

/// Hasse diagram, drawn bottom-up. Elements of equal height share a rank.
pub fn poset_dot(p: &Poset, title: &str) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{title}\" {{").unwrap();
    out.push_str("  rankdir=BT;\n  node [shape=circle, fontsize=10];\n  edge [arrowhead=none];\n");
    for e in p.elements() {
        writeln!(out, "  \"{}\" [id=\"{}\"];", e.name, e.id.0).unwrap();
    }
    let mut levels: BTreeMap<usize, Vec<&str>> = BTreeMap::new();
    for (e, level) in p.elements().iter().zip(p.levels()) {
        levels.entry(level).or_default().push(&e.name);
    }
    for names in levels.values() {
        let quoted: Vec<String> = names.iter().map(|n| format!("\"{n}\";")).collect();
        writeln!(out, "  {{ rank=same; {} }}", quoted.join(" ")).unwrap();
    }
    for (a, b) in p.covers() {
        writeln!(
            out,
            "  \"{}\" -> \"{}\";",
            p.name(a).expect("cover endpoint"),
            p.name(b).expect("cover endpoint")
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn graph_dot(g: &DirectedLabeledGraph, title: &str) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{title}\" {{").unwrap();
    out.push_str("  node [shape=circle, fontsize=10];\n");
    for v in 1..=g.n() {
        writeln!(out, "  \"v{v}\";").unwrap();
    }
    for (i, j, k) in g.labeled_arcs() {
        writeln!(out, "  \"v{i}\" -> \"v{j}\" [label=\"e{k}\"];").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Reads back the elements and covers of a diagram written by [`poset_dot`].
pub fn parse_poset_dot(text: &str) -> Result<PosetDoc> {
    let bad = |line: &str| Error::UnsupportedFormat(format!("unrecognized DOT line '{line}'"));
    let unquote = |s: &str| -> Option<String> {
        s.trim()
            .strip_prefix('"')
            .and_then(|s| s.strip_suffix('"'))
            .map(str::to_owned)
    };
    let mut elements = Vec::new();
    let mut named_covers = Vec::new();
    for raw in text.lines() {
        let line = raw.trim();
        if let Some((lhs, rhs)) = line.split_once("->") {
            let rhs = rhs.trim().trim_end_matches(';');
            let a = unquote(lhs).ok_or_else(|| bad(line))?;
            let b = unquote(rhs).ok_or_else(|| bad(line))?;
            named_covers.push((a, b));
        } else if let Some(idx) = line.find(" [id=\"") {
            let name = unquote(&line[..idx]).ok_or_else(|| bad(line))?;
            let rest = &line[idx + 6..];
            let id: u32 = rest
                .split('"')
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad(line))?;
            elements.push(Element::new(id, name));
        }
    }
    let lookup = |name: &str| {
        elements
            .iter()
            .find(|e| e.name == name)
            .map(|e| e.id)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    };
    let covers = named_covers
        .iter()
        .map(|(a, b)| Ok([lookup(a)?, lookup(b)?]))
        .collect::<Result<Vec<_>>>()?;
    Ok(PosetDoc { elements, covers })
}

pub fn representation_text(rep: &AdjunctRepresentation) -> String {
    let base: Vec<&str> = rep.base_chain.iter().map(|e| e.name.as_str()).collect();
    let mut out = base.join(" < ");
    for t in &rep.terms {
        let chain: Vec<&str> = t.chain.iter().map(|e| e.name.as_str()).collect();
        write!(
            out,
            " ]{},{}[ {{{}}}",
            t.a.name,
            t.b.name,
            chain.join(" < ")
        )
        .unwrap();
    }
    out
}

/// Plain listing: elements, covers, nullity, and the adjunct
/// representation when one is supplied.
pub fn poset_text(p: &Poset, rep: Option<&AdjunctRepresentation>) -> String {
    let mut out = String::new();
    let names: Vec<&str> = p.elements().iter().map(|e| e.name.as_str()).collect();
    writeln!(out, "elements ({}): {}", p.len(), names.join(" ")).unwrap();
    writeln!(out, "covers ({}):", p.cover_count()).unwrap();
    for (a, b) in p.covers() {
        writeln!(out, "  {} < {}", p.name(a).unwrap(), p.name(b).unwrap()).unwrap();
    }
    writeln!(out, "nullity: {}", p.nullity()).unwrap();
    if let Some(rep) = rep {
        writeln!(out, "adjunct: {}", representation_text(rep)).unwrap();
    }
    out
}

pub fn graph_text(g: &DirectedLabeledGraph) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "vertices: {}",
        (1..=g.n())
            .map(|v| format!("v{v}"))
            .collect::<Vec<_>>()
            .join(" ")
    )
    .unwrap();
    writeln!(out, "arcs ({}):", g.arc_count()).unwrap();
    for (i, j, k) in g.labeled_arcs() {
        writeln!(out, "  e{k}: v{i} -> v{j}").unwrap();
    }
    out
}

/// Edge list `i,j,label` with a header line.
pub fn graph_csv(g: &DirectedLabeledGraph) -> String {
    let mut out = String::from("i,j,label\n");
    for (i, j, k) in g.labeled_arcs() {
        writeln!(out, "{i},{j},{k}").unwrap();
    }
    out
}

/// Cover list `lower,upper` by name with a header line.
pub fn poset_csv(p: &Poset) -> String {
    let mut out = String::from("lower,upper\n");
    for (a, b) in p.covers() {
        writeln!(out, "{},{}", p.name(a).unwrap(), p.name(b).unwrap()).unwrap();
    }
    out
}
