//! Permutation representation graphs: vertices are points, and an
//! `i`-labelled edge `{a, b}` records that `ρ_i` swaps `a` and `b`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::permcore::Permutation;
use crate::sggi::{check_string, Sggi};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CprEdge {
    pub a: usize,
    pub b: usize,
    pub label: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CprGraph {
    pub rank: usize,
    pub vertex_count: usize,
    pub edges: Vec<CprEdge>,
    /// Block coordinates `(i, j)` of each vertex, for chained families.
    pub blocks: Option<Vec<(usize, usize)>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EndpointOutOfRange { edge: usize },
    Loop { edge: usize },
    LabelOutOfRange { edge: usize },
    DuplicateEdge { edge: usize },
    NotMatching { vertex: usize, label: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EndpointOutOfRange { edge } => write!(f, "edge {edge}: endpoint out of range"),
            Violation::Loop { edge } => write!(f, "edge {edge}: loop"),
            Violation::LabelOutOfRange { edge } => write!(f, "edge {edge}: label out of range"),
            Violation::DuplicateEdge { edge } => write!(f, "edge {edge}: duplicate"),
            Violation::NotMatching { vertex, label } => {
                write!(f, "vertex {vertex} has two edges labelled {label}")
            }
        }
    }
}

impl CprGraph {
    pub fn new(rank: usize, vertex_count: usize) -> CprGraph {
        CprGraph { rank, vertex_count, edges: Vec::new(), blocks: None }
    }

    pub fn add_edge(&mut self, a: usize, label: usize, b: usize) -> &mut Self {
        self.edges.push(CprEdge { a, b, label });
        self
    }

    /// Checks endpoints, labels, duplicates and that each label class is a
    /// partial matching. Edges are numbered from 1 in the report.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let mut partner = vec![vec![0usize; self.rank]; self.vertex_count + 1];
        for (idx, e) in self.edges.iter().enumerate() {
            let edge = idx + 1;
            if e.a == 0 || e.b == 0 || e.a > self.vertex_count || e.b > self.vertex_count {
                return Err(Violation::EndpointOutOfRange { edge });
            }
            if e.a == e.b {
                return Err(Violation::Loop { edge });
            }
            if e.label >= self.rank {
                return Err(Violation::LabelOutOfRange { edge });
            }
            let (pa, pb) = (partner[e.a][e.label], partner[e.b][e.label]);
            if pa == e.b && pb == e.a {
                return Err(Violation::DuplicateEdge { edge });
            }
            if pa != 0 {
                return Err(Violation::NotMatching { vertex: e.a, label: e.label });
            }
            if pb != 0 {
                return Err(Violation::NotMatching { vertex: e.b, label: e.label });
            }
            partner[e.a][e.label] = e.b;
            partner[e.b][e.label] = e.a;
        }
        Ok(())
    }

    /// `ρ_i` is the product of the transpositions on `i`-edges.
    pub fn generators(&self) -> Result<Vec<Permutation>> {
        self.validate().map_err(|v| Error::BadParameter(format!("invalid graph: {v}")))?;
        let mut images: Vec<Vec<usize>> = vec![(0..self.vertex_count).collect(); self.rank];
        for e in &self.edges {
            images[e.label][e.a - 1] = e.b - 1;
            images[e.label][e.b - 1] = e.a - 1;
        }
        images.into_iter().map(Permutation::from_images).collect()
    }

    pub fn to_sggi(&self) -> Result<Sggi> {
        check_string(self.generators()?)
    }

    /// Swaps every label `i` with `rank - 1 - i`.
    pub fn dual_labels(&self) -> CprGraph {
        let mut g = self.clone();
        for e in &mut g.edges {
            e.label = self.rank - 1 - e.label;
        }
        g
    }

    /// Same vertices and the same edge multiset, ignoring orientation and order.
    pub fn same_edges(&self, other: &CprGraph) -> bool {
        let key = |g: &CprGraph| {
            let mut v: Vec<(usize, usize, usize)> =
                g.edges.iter().map(|e| (e.a.min(e.b), e.a.max(e.b), e.label)).collect();
            v.sort_unstable();
            v
        };
        self.vertex_count == other.vertex_count && key(self) == key(other)
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("cpr rank={} vertices={}\n", self.rank, self.vertex_count);
        for e in &self.edges {
            out.push_str(&format!("{} -{}- {}\n", e.a, e.label, e.b));
        }
        out
    }

    pub fn parse(text: &str) -> Result<CprGraph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let ln = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("cpr") {
                if header.is_some() || !edges.is_empty() {
                    return Err(Error::parse(ln, "header must come first"));
                }
                header = Some(parse_header(rest, ln)?);
                continue;
            }
            edges.push(parse_edge(line, ln)?);
        }
        let (rank, vertex_count) = match header {
            Some(h) => h,
            None => (
                edges.iter().map(|e| e.label + 1).max().unwrap_or(0),
                edges.iter().map(|e| e.a.max(e.b)).max().unwrap_or(0),
            ),
        };
        Ok(CprGraph { rank, vertex_count, edges, blocks: None })
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph cpr {\n");
        for v in 1..=self.vertex_count {
            out.push_str(&format!("  {v};\n"));
        }
        for e in &self.edges {
            out.push_str(&format!("  {} -- {} [label=\"{}\"];\n", e.a, e.b, e.label));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::json!({
            "rank": self.rank,
            "vertices": self.vertex_count,
            "edges": self.edges.iter().map(|e| [e.a, e.label, e.b]).collect::<Vec<_>>(),
        });
        if let Some(b) = &self.blocks {
            v["blocks"] = serde_json::json!(b);
        }
        v
    }
}

fn parse_header(rest: &str, ln: usize) -> Result<(usize, usize)> {
    let mut rank = None;
    let mut vertices = None;
    for tok in rest.split_whitespace() {
        let (k, v) = tok.split_once('=').ok_or_else(|| Error::parse(ln, format!("bad field {tok:?}")))?;
        let v: usize = v.parse().map_err(|_| Error::parse(ln, format!("bad number {v:?}")))?;
        match k {
            "rank" => rank = Some(v),
            "vertices" => vertices = Some(v),
            _ => return Err(Error::parse(ln, format!("unknown field {k:?}"))),
        }
    }
    match (rank, vertices) {
        (Some(r), Some(v)) => Ok((r, v)),
        _ => Err(Error::parse(ln, "header needs rank= and vertices=")),
    }
}

fn parse_edge(line: &str, ln: usize) -> Result<CprEdge> {
    let err = || Error::parse(ln, format!("expected `a -i- b`, got {line:?}"));
    let (a, rest) = line.split_once('-').ok_or_else(err)?;
    let (label, b) = rest.split_once('-').ok_or_else(err)?;
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| err());
    Ok(CprEdge { a: num(a)?, label: num(label)?, b: num(b)? })
}

/// Type `{p, p}` polyhedra on `p` points for every `p ≥ 7`, with
/// `(ρ0ρ2ρ1)^6 = (2,5)(3,4)` dualizing.
pub fn family_all_p(p: usize) -> Result<CprGraph> {
    if p < 7 {
        return Err(Error::BadParameter(format!("all-p needs p >= 7, got {p}")));
    }
    let mut g = CprGraph::new(3, p);
    g.add_edge(3, 0, 4)
        .add_edge(3, 2, 4)
        .add_edge(4, 1, 5)
        .add_edge(5, 2, 1)
        .add_edge(5, 0, 6)
        .add_edge(1, 0, 2)
        .add_edge(6, 2, 2)
        .add_edge(6, 1, 7)
        .add_edge(3, 1, 2);
    for v in 7..p {
        if v % 2 == 1 {
            g.add_edge(v, 0, v + 1).add_edge(v, 2, v + 1);
        } else {
            g.add_edge(v, 1, v + 1);
        }
    }
    Ok(g)
}

/// Type `{p, p}` polyhedra (`p` even, `k` odd) whose least dualizing power
/// of `σ = (ρ0ρ2ρ1)^{p-4}` is `σ^k`. Built from `k(p-4)` copies of a block
/// on `2p-6` vertices, chained in a cycle by 1-edges.
pub fn family_even_k(p: usize, k: usize) -> Result<CprGraph> {
    if p < 6 || p % 2 == 1 || k.is_multiple_of(2) {
        return Err(Error::BadParameter(format!("even-k needs even p >= 6 and odd k, got p={p}, k={k}")));
    }
    let block = 2 * p - 6;
    let copies = k * (p - 4);
    let mut g = CprGraph::new(3, block * copies);
    let at = |i: usize, j: usize| j * block + i;
    for j in 0..copies {
        for i in 1..p - 4 {
            g.add_edge(at(i, j), if i % 2 == 1 { 1 } else { 0 }, at(i + 1, j));
        }
        g.add_edge(at(p - 4, j), 2, at(p - 3, j))
            .add_edge(at(p - 4, j), 0, at(p - 2, j))
            .add_edge(at(p - 3, j), 0, at(p - 1, j))
            .add_edge(at(p - 2, j), 2, at(p - 1, j));
        for v in p - 1..block {
            g.add_edge(at(v, j), if (v - (p - 1)).is_multiple_of(2) { 1 } else { 2 }, at(v + 1, j));
        }
    }
    for j in 0..copies {
        g.add_edge(at(p - 2, j), 1, at(p - 3, (j + 1) % copies));
    }
    g.blocks = Some((0..copies).flat_map(|j| (1..=block).map(move |i| (i, j + 1))).collect());
    Ok(g)
}

/// The shared left end of the rank-`n` graphs on `n + 3`, `n + 4` and `n + 5` points.
fn left_diamond(g: &mut CprGraph) {
    g.add_edge(3, 0, 2).add_edge(4, 0, 1).add_edge(2, 2, 1).add_edge(3, 2, 4).add_edge(4, 1, 5);
}

/// Internally self-dual rank-`n` polytopes on `n + 5` points, `n ≥ 5`.
pub fn family_rank_n(n: usize) -> Result<CprGraph> {
    if n < 5 {
        return Err(Error::BadParameter(format!("rank-n needs n >= 5, got {n}")));
    }
    let mut g = CprGraph::new(n, n + 5);
    left_diamond(&mut g);
    for v in 5..=n + 1 {
        g.add_edge(v, v - 3, v + 1);
    }
    g.add_edge(n + 2, n - 3, n + 3).add_edge(n + 2, n - 1, n + 5).add_edge(n + 3, n - 1, n + 4).add_edge(
        n + 5,
        n - 3,
        n + 4,
    );
    Ok(g)
}

/// The chain `1 -1- 2 -0- 3 -1- 4 -2- … -(n-1)- (n+2) -(n-2)- (n+3)`.
pub fn family_petrie_simplex(n: usize) -> Result<CprGraph> {
    if n < 5 {
        return Err(Error::BadParameter(format!("petrie-simplex needs n >= 5, got {n}")));
    }
    let mut g = CprGraph::new(n, n + 3);
    g.add_edge(1, 1, 2).add_edge(2, 0, 3);
    for j in 1..n {
        g.add_edge(j + 2, j, j + 3);
    }
    g.add_edge(n + 2, n - 2, n + 3);
    Ok(g)
}

/// Rank-`n` graph on `n + 3` points with symmetric group.
pub fn family_n3plus(n: usize) -> Result<CprGraph> {
    if n < 4 {
        return Err(Error::BadParameter(format!("n3plus needs n >= 4, got {n}")));
    }
    let mut g = CprGraph::new(n, n + 3);
    left_diamond(&mut g);
    for v in 5..=n + 2 {
        g.add_edge(v, v - 3, v + 1);
    }
    Ok(g)
}

/// [`family_n3plus`] with one extra `(n-2)`-edge at the right end.
pub fn family_n4plus(n: usize) -> Result<CprGraph> {
    if n < 6 {
        return Err(Error::BadParameter(format!("n4plus needs n >= 6, got {n}")));
    }
    let mut g = family_n3plus(n)?;
    g.vertex_count = n + 4;
    g.add_edge(n + 3, n - 2, n + 4);
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_with_degree(s, n).unwrap()
    }

    #[test]
    fn validate_reports_matching_violation() {
        let mut g = CprGraph::new(1, 3);
        g.add_edge(1, 0, 2).add_edge(2, 0, 3);
        assert_eq!(g.validate(), Err(Violation::NotMatching { vertex: 2, label: 0 }));
        let mut g = CprGraph::new(1, 2);
        g.add_edge(1, 0, 2).add_edge(2, 0, 1);
        assert_eq!(g.validate(), Err(Violation::DuplicateEdge { edge: 2 }));
    }

    #[test]
    fn empty_graph_validates_but_is_not_an_sggi() {
        let g = CprGraph::new(1, 1);
        assert!(g.validate().is_ok());
        assert_eq!(g.to_sggi().unwrap_err(), Error::IdentityGenerator(0));
    }

    #[test]
    fn single_edge() {
        let g = CprGraph::parse("1 -0- 2").unwrap();
        assert_eq!((g.rank, g.vertex_count), (1, 2));
        let s = g.to_sggi().unwrap();
        assert_eq!(s.order(), 2);
        let h = CprGraph::parse("cpr rank=2 vertices=3\n1 -0- 2\n").unwrap();
        assert_eq!((h.rank, h.vertex_count), (2, 3));
    }

    #[test]
    fn all_p_nine_matches_displayed_product() {
        let s = family_all_p(9).unwrap().to_sggi().unwrap();
        assert_eq!(s.evaluate(&[0, 2, 1]), p("(1,7,6)(2,4,5,3)(8,9)", 9));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let e = CprGraph::parse("cpr rank=3 vertices=4\n1 -0- 2\n1 - x - 3\n").unwrap_err();
        assert_eq!(e, Error::Parse { line: 3, msg: "expected `a -i- b`, got \"1 - x - 3\"".into() });
    }

    #[test]
    fn roundtrip_and_dot() {
        let g = family_all_p(9).unwrap();
        assert_eq!(CprGraph::parse(&g.serialize()).unwrap(), CprGraph { blocks: None, ..g.clone() });
        let dot = family_rank_n(5).unwrap().to_dot();
        assert_eq!(dot.lines().filter(|l| l.trim_end().ends_with(';') && !l.contains("--")).count(), 10);
    }

    #[test]
    fn bad_parameters() {
        assert!(family_all_p(6).is_err());
        assert!(family_even_k(7, 1).is_err());
        assert!(family_even_k(6, 2).is_err());
        assert!(family_rank_n(4).is_err());
        assert!(family_petrie_simplex(4).is_err());
        assert!(family_n3plus(3).is_err());
        assert!(family_n4plus(5).is_err());
    }
}
