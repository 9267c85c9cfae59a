//! Immutable, deduplicated hypergraph with a double CSR index.
//!
//! Vertex labels read from input are remapped to dense ids `0..n` in ascending
//! label order, so an edge's vertex list sorted by id is also sorted by label.
//! Edges keep their first-seen order.

use std::collections::HashSet;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

/// Dense vertex id, `0..n`.
pub type VertexId = u32;
/// Edge id, `0..m`, in first-seen input order.
pub type EdgeId = u32;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct IngestReport {
    pub duplicates_removed: usize,
    /// Edges with fewer than two distinct vertices.
    pub singletons_removed: usize,
    pub empty_lines_skipped: usize,
    pub comment_lines_skipped: usize,
    pub vertex_remap_size: usize,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    /// Accept inputs that contain no edge after filtering instead of failing.
    pub allow_empty: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Stats {
    pub n: usize,
    pub m: usize,
    /// Input size `n + sum |e|`.
    pub h: usize,
    pub rank: usize,
    pub max_degree: usize,
    pub avg_arity: f64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    labels: Vec<u64>,
    edge_offsets: Vec<usize>,
    edge_vertices: Vec<VertexId>,
    vertex_offsets: Vec<usize>,
    vertex_edges: Vec<EdgeId>,
    rank: usize,
}

impl Hypergraph {
    /// Build from edges given as lists of original labels.
    ///
    /// Labels repeated within an edge are collapsed, edges with fewer than two
    /// distinct labels are dropped and repeated edges (as sets) keep only their
    /// first occurrence. Labels that only occur in dropped edges do not become
    /// vertices.
    pub fn from_labeled_edges<I, E>(edges: I) -> (Hypergraph, IngestReport)
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = u64>,
    {
        let mut report = IngestReport::default();
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let mut kept: Vec<Vec<u64>> = Vec::new();
        for edge in edges {
            let mut e: Vec<u64> = edge.into_iter().collect();
            e.sort_unstable();
            e.dedup();
            if e.len() < 2 {
                report.singletons_removed += 1;
                continue;
            }
            if seen.contains(&e) {
                report.duplicates_removed += 1;
                continue;
            }
            seen.insert(e.clone());
            kept.push(e);
        }

        let mut labels: Vec<u64> = kept.iter().flatten().copied().collect();
        labels.sort_unstable();
        labels.dedup();
        report.vertex_remap_size = labels.len();

        let remapped = kept.iter().map(|e| {
            e.iter()
                .map(|l| labels.binary_search(l).expect("label collected above") as VertexId)
                .collect::<Vec<_>>()
        });
        let g = Self::from_dense(labels.clone(), remapped);
        (g, report)
    }

    /// Build from edges over dense ids `0..labels.len()`. Each edge must be
    /// strictly increasing with at least two vertices; edges must be distinct.
    fn from_dense<I>(labels: Vec<u64>, edges: I) -> Hypergraph
    where
        I: IntoIterator<Item = Vec<VertexId>>,
    {
        let n = labels.len();
        let mut edge_offsets = vec![0usize];
        let mut edge_vertices = Vec::new();
        let mut degree = vec![0usize; n];
        let mut rank = 0;
        for e in edges {
            debug_assert!(e.len() >= 2 && e.windows(2).all(|w| w[0] < w[1]));
            rank = rank.max(e.len());
            for &v in &e {
                degree[v as usize] += 1;
            }
            edge_vertices.extend_from_slice(&e);
            edge_offsets.push(edge_vertices.len());
        }

        let mut vertex_offsets = Vec::with_capacity(n + 1);
        vertex_offsets.push(0);
        for d in &degree {
            vertex_offsets.push(vertex_offsets.last().unwrap() + d);
        }
        let mut fill = vertex_offsets.clone();
        let mut vertex_edges = vec![0 as EdgeId; edge_vertices.len()];
        for e in 0..edge_offsets.len() - 1 {
            for &v in &edge_vertices[edge_offsets[e]..edge_offsets[e + 1]] {
                vertex_edges[fill[v as usize]] = e as EdgeId;
                fill[v as usize] += 1;
            }
        }

        Hypergraph {
            labels,
            edge_offsets,
            edge_vertices,
            vertex_offsets,
            vertex_edges,
            rank,
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.edge_offsets.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.m() == 0
    }

    /// Maximum arity.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `n + sum |e|`.
    pub fn input_size(&self) -> usize {
        self.n() + self.edge_vertices.len()
    }

    pub(crate) fn edge_offsets(&self) -> &[usize] {
        &self.edge_offsets
    }

    /// Vertices of `e`, ascending.
    #[inline]
    pub fn edge(&self, e: EdgeId) -> &[VertexId] {
        let e = e as usize;
        &self.edge_vertices[self.edge_offsets[e]..self.edge_offsets[e + 1]]
    }

    #[inline]
    pub fn arity(&self, e: EdgeId) -> usize {
        let e = e as usize;
        self.edge_offsets[e + 1] - self.edge_offsets[e]
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = &[VertexId]> + '_ {
        (0..self.m() as EdgeId).map(move |e| self.edge(e))
    }

    /// Edges containing `v`, ascending. Panics if `v >= n`.
    #[inline]
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        let v = v as usize;
        &self.vertex_edges[self.vertex_offsets[v]..self.vertex_offsets[v + 1]]
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        if (v as usize) >= self.n() {
            return Err(Error::domain(format!("vertex {v} out of range (n = {})", self.n())));
        }
        Ok(self.incident(v).len())
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n())
            .map(|v| self.vertex_offsets[v + 1] - self.vertex_offsets[v])
            .max()
            .unwrap_or(0)
    }

    /// Original input label of vertex `v`.
    pub fn label(&self, v: VertexId) -> u64 {
        self.labels[v as usize]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn stats(&self) -> Stats {
        let m = self.m();
        Stats {
            n: self.n(),
            m,
            h: self.input_size(),
            rank: self.rank,
            max_degree: self.max_degree(),
            avg_arity: if m == 0 {
                0.0
            } else {
                self.edge_vertices.len() as f64 / m as f64
            },
        }
    }

    /// Write the canonical edge list: one edge per line, original labels in
    /// ascending order, edges in first-seen order.
    pub fn write_edge_list<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        for e in self.edges() {
            let mut first = true;
            for &v in e {
                if !first {
                    w.write_all(b" ")?;
                }
                write!(w, "{}", self.label(v))?;
                first = false;
            }
            w.write_all(b"\n")?;
        }
        Ok(())
    }

    pub fn to_edge_list(&self) -> String {
        let mut buf = Vec::new();
        self.write_edge_list(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("edge list is ASCII")
    }
}

/// Parse a whitespace-separated edge list, one hyperedge per line.
///
/// Lines whose first non-blank character is `#` are comments.
pub fn parse_edge_list<R: BufRead>(
    reader: R,
    options: &ParseOptions,
) -> Result<(Hypergraph, IngestReport)> {
    let mut edges: Vec<Vec<u64>> = Vec::new();
    let mut empty = 0;
    let mut comments = 0;
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            empty += 1;
            continue;
        }
        if trimmed.starts_with('#') {
            comments += 1;
            continue;
        }
        let edge = trimmed
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u64>().map_err(|_| Error::Parse {
                    line: idx + 1,
                    token: tok.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        edges.push(edge);
    }
    let (g, mut report) = Hypergraph::from_labeled_edges(edges);
    report.empty_lines_skipped = empty;
    report.comment_lines_skipped = comments;
    if g.is_empty() && !options.allow_empty {
        return Err(Error::EmptyHypergraph);
    }
    Ok((g, report))
}

/// Parse an in-memory edge list. Convenience for tests and fixtures.
pub fn parse_str(text: &str) -> Result<(Hypergraph, IngestReport)> {
    parse_edge_list(text.as_bytes(), &ParseOptions::default())
}
