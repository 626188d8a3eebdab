use std::collections::BTreeSet;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..k`.
///
/// Edges are stored as `(i, j)` with `i < j`. Serialized with 1-based vertex
/// labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    k: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn empty(k: usize) -> Self {
        Graph { k, edges: BTreeSet::new() }
    }

    pub fn complete(k: usize) -> Self {
        let mut g = Self::empty(k);
        for i in 0..k {
            for j in i + 1..k {
                g.edges.insert((i, j));
            }
        }
        g
    }

    pub fn path(k: usize) -> Self {
        let mut g = Self::empty(k);
        for i in 1..k {
            g.edges.insert((i - 1, i));
        }
        g
    }

    /// Builds a graph from 0-based edges. Loops and out-of-range vertices are
    /// rejected; repeated edges collapse.
    pub fn from_edges(k: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(k);
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        if a == b {
            return Err(Error::Parse {
                what: "graph",
                detail: format!("loop at vertex {}", a + 1),
            });
        }
        if a >= self.k || b >= self.k {
            return Err(Error::Parse {
                what: "graph",
                detail: format!("edge ({}, {}) outside {} vertices", a + 1, b + 1, self.k),
            });
        }
        self.edges.insert((a.min(b), a.max(b)));
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.k
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// All graphs on `k` labelled vertices, in edge-subset order.
    pub fn all_on(k: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = Graph::complete(k).edges().collect();
        (0u64..1 << pairs.len()).map(move |mask| Graph {
            k,
            edges: pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect(),
        })
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let edges: Vec<[usize; 2]> = self.edges.iter().map(|&(a, b)| [a + 1, b + 1]).collect();
        let mut s = serializer.serialize_struct("Graph", 2)?;
        s.serialize_field("k", &self.k)?;
        s.serialize_field("edges", &edges)?;
        s.end()
    }
}
