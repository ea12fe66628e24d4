//! Λ-edge generators, Λ-edge words, and commuting graphs.
//!
//! The Λ-edge with orientation `(s, t)` is the element `s·t` of W_Γ; its
//! inverse is `t·s`.

use serde::Serialize;

use crate::error::Result;
use crate::graph::{SimplicialGraph, Vertex};
use crate::theta::ThetaGraph;
use crate::word::{Letter, RightAngledGroup, Semantics};

/// A word over the Λ-edges of a Θ: `generator` indexes `theta.lambda_edges()`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LambdaWord {
    pub letters: Vec<Letter>,
}

impl LambdaWord {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The same element as a word in W_Γ, two letters per Λ-edge.
    pub fn expand(&self, theta: &ThetaGraph) -> Vec<Letter> {
        self.letters.iter().flat_map(|&x| lambda_letter_image(theta, x)).collect()
    }

    /// `a-b c-d^-1`, using each edge's stored orientation.
    pub fn format(&self, theta: &ThetaGraph) -> String {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|x| {
                let label = theta.lambda_edge_label(x.generator);
                if x.inverse {
                    format!("{label}^-1")
                } else {
                    label
                }
            })
            .collect();
        parts.join(" ")
    }

    /// The traversed pairs, e.g. `(64)(42)` for `4-6^-1 2-4^-1`.
    pub fn format_pairs(&self, theta: &ThetaGraph) -> String {
        self.letters
            .iter()
            .map(|x| {
                let (s, t) = theta.lambda_edges()[x.generator];
                let (s, t) = if x.inverse { (t, s) } else { (s, t) };
                format!("({}{})", theta.name(s), theta.name(t))
            })
            .collect()
    }
}

/// Image in W_Γ of a single Λ-edge letter.
pub fn lambda_letter_image(theta: &ThetaGraph, x: Letter) -> [Letter; 2] {
    let (s, t) = theta.lambda_edges()[x.generator];
    if x.inverse {
        [Letter::new(t), Letter::new(s)]
    } else {
        [Letter::new(s), Letter::new(t)]
    }
}

/// Expand each pair `(a, a')` into the Λ-edges along the unique simple
/// Λ-path from `a` to `a'`.
pub fn lambda_edge_word(theta: &ThetaGraph, pairs: &[(Vertex, Vertex)]) -> Result<LambdaWord> {
    let mut letters = Vec::new();
    for &(a, b) in pairs {
        let path = theta.lambda_path(a, b)?;
        for step in path.windows(2) {
            let i = theta.lambda_edge_between(step[0], step[1]).expect("consecutive path vertices span a Λ-edge");
            let inverse = theta.lambda_edges()[i] != (step[0], step[1]);
            letters.push(Letter { generator: i, inverse });
        }
    }
    Ok(LambdaWord { letters })
}

/// A graph on labelled generators whose edges are commuting pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommutingGraph {
    pub labels: Vec<String>,
    #[serde(skip)]
    adjacency: Vec<Vec<bool>>,
}

impl CommutingGraph {
    pub fn new(labels: Vec<String>, edges: &[(usize, usize)]) -> Self {
        let n = labels.len();
        let mut adjacency = vec![vec![false; n]; n];
        for &(a, b) in edges {
            assert_ne!(a, b, "commuting graph edges join distinct generators");
            adjacency[a][b] = true;
            adjacency[b][a] = true;
        }
        CommutingGraph { labels, adjacency }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a][b]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].iter().filter(|&&x| x).count()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| self.adjacency[a][b]).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edges().into_iter().map(|(a, b)| (self.labels[a].clone(), self.labels[b].clone())).collect()
    }

    /// The RAAG A_Δ on this graph.
    pub fn artin_group(&self) -> RightAngledGroup {
        RightAngledGroup::from_parts(self.labels.clone(), self.adjacency.clone(), Semantics::Artin)
    }

    /// Whether the graph is a single cycle through all its vertices.
    pub fn is_cycle(&self) -> bool {
        let n = self.vertex_count();
        if n < 3 || (0..n).any(|v| self.degree(v) != 2) {
            return false;
        }
        let mut seen = vec![false; n];
        let (mut prev, mut cur, mut steps) = (usize::MAX, 0, 0);
        while !seen[cur] {
            seen[cur] = true;
            steps += 1;
            let next = (0..n).find(|&w| self.adjacency[cur][w] && w != prev).expect("degree two");
            prev = cur;
            cur = next;
        }
        steps == n
    }
}

/// Δ for the Λ-edges of Θ: two Λ-edges commute iff their endpoints span a
/// Γ-square in which each edge's endpoints are opposite corners.
pub fn commuting_graph(theta: &ThetaGraph) -> CommutingGraph {
    let edges = theta.lambda_edges();
    let gamma = theta.gamma();
    let labels: Vec<String> = (0..edges.len()).map(|i| theta.lambda_edge_label(i)).collect();
    let mut pairs = Vec::new();
    for (i, &(s, t)) in edges.iter().enumerate() {
        for (j, &(q, r)) in edges.iter().enumerate().skip(i + 1) {
            if [q, r].iter().all(|&v| gamma.has_edge(s, v) && gamma.has_edge(t, v)) {
                pairs.push((i, j));
            }
        }
    }
    CommutingGraph::new(labels, &pairs)
}

/// Δ computed by testing commutators in W_Γ with the word engine.
pub fn commuting_graph_by_words(theta: &ThetaGraph) -> CommutingGraph {
    let w = RightAngledGroup::new(theta.gamma(), Semantics::Coxeter);
    let n = theta.lambda_edges().len();
    let images: Vec<[Letter; 2]> = (0..n).map(|i| lambda_letter_image(theta, Letter::new(i))).collect();
    let labels: Vec<String> = (0..n).map(|i| theta.lambda_edge_label(i)).collect();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if w.letters_commute(&images[i], &images[j]) {
                pairs.push((i, j));
            }
        }
    }
    CommutingGraph::new(labels, &pairs)
}

/// A SimplicialGraph view of Δ with vertex names `e0, e1, …` zero-padded so
/// that sorted order matches generator order.
pub fn commuting_graph_as_simplicial(delta: &CommutingGraph) -> SimplicialGraph {
    let width = delta.vertex_count().saturating_sub(1).to_string().len();
    let names: Vec<String> = (0..delta.vertex_count()).map(|i| format!("e{i:0width$}")).collect();
    SimplicialGraph::from_index_edges(names, &delta.edges()).expect("commuting graph is simple")
}
