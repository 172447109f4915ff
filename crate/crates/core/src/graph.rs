//! Finite simple graphs and the matrices `A`, `D`, `L = D − A` and
//! `ℒ = D^{-1/2} L D^{-1/2}`.
//!
//! Vertices are 1-based everywhere in this module's API.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::{re, Real};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    directed: bool,
}

impl Graph {
    /// Validates vertex range and the no-loop rule. For undirected graphs
    /// each listed pair is stored in both orientations.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>, directed: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("vertex count must be at least 1".into()));
        }
        let mut set = BTreeSet::new();
        for (i, j) in edges {
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::InvalidGraph(format!("edge ({i}, {j}) outside vertices 1..={n}")));
            }
            if i == j {
                return Err(Error::InvalidGraph(format!("loop at vertex {i}")));
            }
            set.insert((i, j));
            if !directed {
                set.insert((j, i));
            }
        }
        Ok(Self { n, edges: set, directed })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Ordered pairs `(i, j)`, both orientations for undirected graphs.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i, j))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(i, _) in &self.edges {
            deg[i - 1] += 1;
        }
        deg
    }

    pub fn adjacency<T: Real>(&self) -> DenseMatrix<T> {
        let mut a = DenseMatrix::zeros(self.n, self.n);
        for &(i, j) in &self.edges {
            a[(i - 1, j - 1)] = re(T::one());
        }
        a
    }

    pub fn degree<T: Real>(&self) -> Result<DenseMatrix<T>> {
        self.require_undirected()?;
        let mut d = DenseMatrix::zeros(self.n, self.n);
        for (i, k) in self.degrees().into_iter().enumerate() {
            d[(i, i)] = re(T::from_usize_lossy(k));
        }
        Ok(d)
    }

    pub fn laplacian<T: Real>(&self) -> Result<DenseMatrix<T>> {
        self.degree::<T>()?.sub(&self.adjacency())
    }

    pub fn normalized_laplacian<T: Real>(&self) -> Result<DenseMatrix<T>> {
        self.require_undirected()?;
        let deg = self.degrees();
        if let Some(v) = deg.iter().position(|&k| k == 0) {
            return Err(Error::IsolatedVertex(v + 1));
        }
        let mut m = DenseMatrix::identity(self.n);
        for &(i, j) in &self.edges {
            let w = T::from_usize_lossy(deg[i - 1] * deg[j - 1]).sqrt();
            m[(i - 1, j - 1)] = re(-w.recip());
        }
        Ok(m)
    }

    fn require_undirected(&self) -> Result<()> {
        if self.directed {
            Err(Error::DirectedUnsupported)
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFamily {
    Path,
    Star,
    Cycle,
    Complete,
}

impl GraphFamily {
    pub fn name(self) -> &'static str {
        match self {
            GraphFamily::Path => "path",
            GraphFamily::Star => "star",
            GraphFamily::Cycle => "cycle",
            GraphFamily::Complete => "complete",
        }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(GraphFamily::Path),
            "star" => Ok(GraphFamily::Star),
            "cycle" => Ok(GraphFamily::Cycle),
            "complete" => Ok(GraphFamily::Complete),
            other => Err(Error::Parse(format!("unknown graph family '{other}'"))),
        }
    }
}

/// Path, star (center 1), cycle (edges `(k, k+1 mod N)`) or complete graph.
/// Only the cycle has a directed variant.
pub fn standard_graph(family: GraphFamily, n: usize, directed: bool) -> Result<Graph> {
    if directed && family != GraphFamily::Cycle {
        return Err(Error::UnsupportedDirected(family.name()));
    }
    if n == 0 {
        return Err(Error::InvalidGraph("vertex count must be at least 1".into()));
    }
    let edges: Vec<(usize, usize)> = match family {
        GraphFamily::Path => (1..n).map(|k| (k, k + 1)).collect(),
        GraphFamily::Star => (2..=n).map(|k| (1, k)).collect(),
        // N = 1 would close on itself; loops are excluded.
        GraphFamily::Cycle => (1..=n).map(|k| (k, k % n + 1)).filter(|&(i, j)| i != j).collect(),
        GraphFamily::Complete => (1..=n).flat_map(|i| ((i + 1)..=n).map(move |j| (i, j))).collect(),
    };
    Graph::new(n, edges, directed)
}
