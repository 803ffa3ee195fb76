//! Text formats for posets, Euclidean and toric arrangements and graphs.
//!
//! Blank lines and lines starting with `#` are ignored everywhere. The first
//! remaining line is a header naming the format.

use std::collections::HashMap;
use std::str::FromStr;

use flagcd_core::arrangement::{AffineArrangement, AffineHyperplane};
use flagcd_core::graphs::SimpleGraph;
use flagcd_core::poset::GradedPoset;
use flagcd_core::toric::{ToricArrangement, ToricHyperplane};
use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

#[derive(Debug, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError { line, message: message.into() })
}

#[derive(Clone, Debug)]
pub enum Input {
    Poset(GradedPoset),
    Affine(AffineArrangement),
    Toric(ToricArrangement),
    Graph(SimpleGraph),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Poset(_) => "poset",
            Input::Affine(_) => "affine",
            Input::Toric(_) => "toric",
            Input::Graph(_) => "graph",
        }
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn number<T: FromStr>(line: usize, token: &str, what: &str) -> Result<T, FormatError> {
    token.parse().or_else(|_| fail(line, format!("expected {what}, found `{token}`")))
}

pub fn parse_input(text: &str) -> Result<Input, FormatError> {
    let mut lines = content_lines(text);
    let Some((line, header)) = lines.next() else {
        return fail(0, "empty input");
    };
    let words: Vec<&str> = header.split_whitespace().collect();
    let body: Vec<(usize, &str)> = lines.collect();
    match words[0] {
        "poset" => {
            let [_, n, rank] = words[..] else {
                return fail(line, "header must be `poset <n_elements> <rank>`");
            };
            let n = number(line, n, "an element count")?;
            let rank = number(line, rank, "a rank")?;
            parse_poset(line, n, rank, &body).map(Input::Poset)
        }
        kind @ ("affine" | "toric" | "graph") => {
            let [_, n] = words[..] else {
                return fail(line, format!("header must be `{kind} <n>`"));
            };
            let n: usize = number(line, n, "a dimension")?;
            match kind {
                "affine" => parse_affine(line, n, &body).map(Input::Affine),
                "toric" => parse_toric(line, n, &body).map(Input::Toric),
                _ => parse_graph(line, n, &body).map(Input::Graph),
            }
        }
        other => fail(line, format!("unknown format `{other}`; expected poset, affine, toric or graph")),
    }
}

fn parse_poset(header: usize, n: usize, rank: usize, body: &[(usize, &str)]) -> Result<GradedPoset, FormatError> {
    if body.len() < n {
        return fail(header, format!("header announces {n} elements but only {} lines follow", body.len()));
    }
    let mut index: HashMap<&str, usize> = HashMap::new();
    let mut ranks = Vec::with_capacity(n);
    for &(line, text) in &body[..n] {
        let [id, r] = text.split_whitespace().collect::<Vec<_>>()[..] else {
            return fail(line, "element lines must be `id rank`");
        };
        let r: usize = number(line, r, "a rank")?;
        if r > rank {
            return fail(line, format!("rank {r} exceeds the poset rank {rank}"));
        }
        if index.insert(id, ranks.len()).is_some() {
            return fail(line, format!("element `{id}` is listed twice"));
        }
        ranks.push(r);
    }
    let mut covers = Vec::new();
    for &(line, text) in &body[n..] {
        let [x, "<", y] = text.split_whitespace().collect::<Vec<_>>()[..] else {
            return fail(line, "cover lines must be `id < id`");
        };
        let lookup = |id: &str| index.get(id).copied().ok_or(FormatError { line, message: format!("unknown element `{id}`") });
        let (x, y) = (lookup(x)?, lookup(y)?);
        if ranks[y] != ranks[x] + 1 {
            return fail(line, format!("a cover must raise the rank by one, found {} < {}", ranks[x], ranks[y]));
        }
        covers.push((x, y));
    }
    for (r, what) in [(0, "0̂"), (rank, "1̂")] {
        if ranks.iter().filter(|&&k| k == r).count() != 1 {
            return fail(header, format!("there must be exactly one element of rank {r} to serve as {what}"));
        }
    }
    GradedPoset::new(ranks, &covers).or_else(|e| fail(header, e.to_string()))
}

// `a1 ... an | b`
fn hyperplane_line(line: usize, n: usize, text: &str) -> Result<(Vec<BigInt>, BigRational), FormatError> {
    let Some((lhs, rhs)) = text.split_once('|') else {
        return fail(line, "hyperplane lines must be `a1 ... an | b`");
    };
    let normal = lhs
        .split_whitespace()
        .map(|t| number::<BigInt>(line, t, "an integer coefficient"))
        .collect::<Result<Vec<_>, _>>()?;
    if normal.len() != n {
        return fail(line, format!("expected {n} coefficients, found {}", normal.len()));
    }
    let offset = number::<BigRational>(line, rhs.trim(), "a rational offset p/q")?;
    Ok((normal, offset))
}

fn parse_affine(header: usize, n: usize, body: &[(usize, &str)]) -> Result<AffineArrangement, FormatError> {
    let mut hs = Vec::with_capacity(body.len());
    for &(line, text) in body {
        let (normal, offset) = hyperplane_line(line, n, text)?;
        hs.push(AffineHyperplane::new(normal, offset).or_else(|e| fail(line, e.to_string()))?);
    }
    AffineArrangement::new(n, hs).or_else(|e| fail(header, e.to_string()))
}

fn parse_toric(header: usize, n: usize, body: &[(usize, &str)]) -> Result<ToricArrangement, FormatError> {
    let mut hs = Vec::with_capacity(body.len());
    for &(line, text) in body {
        let (normal, offset) = hyperplane_line(line, n, text)?;
        hs.push(ToricHyperplane::new(normal, offset).or_else(|e| fail(line, e.to_string()))?);
    }
    ToricArrangement::new(n, hs).or_else(|e| fail(header, e.to_string()))
}

fn parse_graph(header: usize, n: usize, body: &[(usize, &str)]) -> Result<SimpleGraph, FormatError> {
    let mut edges = Vec::with_capacity(body.len());
    for &(line, text) in body {
        let [u, v] = text.split_whitespace().collect::<Vec<_>>()[..] else {
            return fail(line, "edge lines must be `u v`");
        };
        let u: usize = number(line, u, "a vertex")?;
        let v: usize = number(line, v, "a vertex")?;
        if !(1..=n).contains(&u) || !(1..=n).contains(&v) {
            return fail(line, format!("vertices are numbered 1 to {n}"));
        }
        if u == v {
            return fail(line, "loops are not allowed");
        }
        if edges.contains(&(u - 1, v - 1)) || edges.contains(&(v - 1, u - 1)) {
            return fail(line, format!("edge {u} {v} is repeated"));
        }
        edges.push((u - 1, v - 1));
    }
    SimpleGraph::new(n, &edges).or_else(|e| fail(header, e.to_string()))
}
