//! Finite simplicial graphs with named vertices.
//!
//! Vertices are stored in sorted name order, so vertex ids (and everything
//! derived from them, such as shortlex orders on words) do not depend on
//! the order in which vertices were declared.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};

/// Index of a vertex in a [`SimplicialGraph`].
pub type Vertex = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialGraph {
    names: Vec<String>,
    index: BTreeMap<String, Vertex>,
    adjacency: Vec<Vec<bool>>,
    neighbors: Vec<Vec<Vertex>>,
}

/// Vertex names must be nonempty and free of whitespace, `-` and `|`.
pub fn validate_vertex_name(name: &str) -> Result<()> {
    if name.is_empty() || name.chars().any(|c| c.is_whitespace() || c == '-' || c == '|') {
        return Err(Error::InvalidVertexName(name.to_string()));
    }
    Ok(())
}

impl SimplicialGraph {
    pub fn new<V, S, E, T>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: AsRef<str>,
        E: IntoIterator<Item = (T, T)>,
        T: AsRef<str>,
    {
        let mut names = BTreeSet::new();
        for v in vertices {
            let v = v.as_ref();
            validate_vertex_name(v)?;
            if !names.insert(v.to_string()) {
                return Err(Error::DuplicateVertex(v.to_string()));
            }
        }
        let names: Vec<String> = names.into_iter().collect();
        let index: BTreeMap<String, Vertex> =
            names.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();
        let mut pairs = Vec::new();
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let ia = *index.get(a).ok_or_else(|| Error::UnknownVertex(a.to_string()))?;
            let ib = *index.get(b).ok_or_else(|| Error::UnknownVertex(b.to_string()))?;
            pairs.push((ia, ib));
        }
        Self::from_index_edges(names, &pairs)
    }

    /// Builds a graph from already sorted, distinct names and index pairs.
    pub(crate) fn from_index_edges(names: Vec<String>, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        debug_assert!(names.windows(2).all(|w| w[0] < w[1]));
        let n = names.len();
        let index = names.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let mut adjacency = vec![vec![false; n]; n];
        for &(a, b) in edges {
            if a == b {
                return Err(Error::LoopEdge(names[a].clone()));
            }
            if adjacency[a][b] {
                let (x, y) = (a.min(b), a.max(b));
                return Err(Error::DuplicateEdge(names[x].clone(), names[y].clone()));
            }
            adjacency[a][b] = true;
            adjacency[b][a] = true;
        }
        let neighbors = adjacency
            .iter()
            .map(|row| (0..n).filter(|&j| row[j]).collect())
            .collect();
        Ok(SimplicialGraph { names, index, adjacency, neighbors })
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v]
    }

    pub fn vertex(&self, name: &str) -> Result<Vertex> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.adjacency[a][b]
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors[v].len()
    }

    /// Edges as index pairs `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for a in 0..self.vertex_count() {
            for &b in &self.neighbors[a] {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn edge_names(&self) -> Vec<(String, String)> {
        self.edges()
            .into_iter()
            .map(|(a, b)| (self.names[a].clone(), self.names[b].clone()))
            .collect()
    }

    /// Same vertex set; two distinct vertices are adjacent iff they are not adjacent here.
    pub fn complement(&self) -> SimplicialGraph {
        let n = self.vertex_count();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if !self.adjacency[a][b] {
                    edges.push((a, b));
                }
            }
        }
        SimplicialGraph::from_index_edges(self.names.clone(), &edges)
            .expect("complement of a simplicial graph is simplicial")
    }

    /// The subgraph induced on every vertex except `removed`.
    pub fn without_vertices(&self, removed: &[Vertex]) -> SimplicialGraph {
        let kept: Vec<Vertex> = (0..self.vertex_count()).filter(|v| !removed.contains(v)).collect();
        let mut new_index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in kept.iter().enumerate() {
            new_index[v] = i;
        }
        let names = kept.iter().map(|&v| self.names[v].clone()).collect();
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|(a, b)| new_index[*a] != usize::MAX && new_index[*b] != usize::MAX)
            .map(|(a, b)| (new_index[a], new_index[b]))
            .collect();
        SimplicialGraph::from_index_edges(names, &edges).expect("induced subgraph is simplicial")
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.neighbors[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.vertex_count()
    }

    pub fn predicates(&self) -> GraphPredicates {
        GraphPredicates {
            triangle_free: self.find_triangle().is_none(),
            cone_vertices: self.cone_vertices().iter().map(|&v| self.names[v].clone()).collect(),
            chordal: self.is_chordal(),
        }
    }

    pub fn find_triangle(&self) -> Option<[Vertex; 3]> {
        for (a, b) in self.edges() {
            for &c in &self.neighbors[b] {
                if c > b && self.adjacency[a][c] {
                    return Some([a, b, c]);
                }
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.find_triangle().is_none()
    }

    /// Vertices adjacent to every other vertex.
    pub fn cone_vertices(&self) -> Vec<Vertex> {
        let n = self.vertex_count();
        (0..n).filter(|&v| self.degree(v) + 1 == n).collect()
    }

    /// Maximum cardinality search followed by a perfect-elimination check.
    pub fn is_chordal(&self) -> bool {
        let n = self.vertex_count();
        let mut weight = vec![0usize; n];
        let mut numbered = vec![false; n];
        // order[i] = vertex numbered i-th; the reverse is a perfect elimination order
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !numbered[v])
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .expect("unnumbered vertex exists");
            numbered[v] = true;
            order.push(v);
            for &w in &self.neighbors[v] {
                if !numbered[w] {
                    weight[w] += 1;
                }
            }
        }
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        // each vertex's earlier-numbered neighbours must form a clique
        for &v in &order {
            let earlier: Vec<Vertex> =
                self.neighbors[v].iter().copied().filter(|&w| position[w] < position[v]).collect();
            if let Some(&parent) = earlier.iter().max_by_key(|&&w| position[w]) {
                for &w in &earlier {
                    if w != parent && !self.adjacency[parent][w] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphPredicates {
    pub triangle_free: bool,
    pub cone_vertices: Vec<String>,
    pub chordal: bool,
}
