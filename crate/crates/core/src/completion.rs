//! The completion Ω of the Λ-edge subgroup for triangle-free Γ.
//!
//! Ω₀ is a bouquet of subdivided loops at the basepoint, one per Λ-edge
//! `(s, t)`, reading `s` then `t`. Rounds alternate between fold plus square
//! identification to saturation and one pass of square attachments. Edges
//! are unoriented since every label is an involution.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SimplicialGraph;
use crate::theta::ThetaGraph;

#[derive(Clone, Debug)]
struct Edge {
    ends: [usize; 2],
    label: usize,
    alive: bool,
}

#[derive(Clone, Debug)]
struct Square {
    /// Boundary in cyclic order.
    edges: [usize; 4],
    /// `corners[i]` joins `edges[i]` and `edges[(i + 1) % 4]`.
    corners: [usize; 4],
    alive: bool,
}

#[derive(Clone, Debug)]
pub struct LabeledComplex {
    labels: Vec<String>,
    adjacent: Vec<Vec<bool>>,
    vparent: Vec<usize>,
    /// Live edges at each root vertex; loops appear once.
    incidence: Vec<Vec<usize>>,
    edges: Vec<Edge>,
    eparent: Vec<usize>,
    squares: Vec<Square>,
    live_vertices: usize,
    live_edges: usize,
    live_squares: usize,
    basepoint: usize,
    saturated: bool,
}

/// Labeled-isomorphism invariant form: vertices numbered in breadth-first
/// order from the basepoint, visiting edges by label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalComplex {
    pub vertex_count: usize,
    /// `(v1, v2, label)` with `v1 <= v2`, sorted.
    pub edges: Vec<(usize, usize, usize)>,
    /// Each square as its sorted edge indices into `edges`, sorted.
    pub squares: Vec<[usize; 4]>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaIndex {
    pub full_valence: bool,
    pub vertex_count: usize,
    pub index: Option<u64>,
}

impl LabeledComplex {
    fn empty(gamma: &SimplicialGraph) -> Self {
        let n = gamma.vertex_count();
        let adjacent = (0..n).map(|a| (0..n).map(|b| gamma.has_edge(a, b)).collect()).collect();
        LabeledComplex {
            labels: gamma.names().to_vec(),
            adjacent,
            vparent: Vec::new(),
            incidence: Vec::new(),
            edges: Vec::new(),
            eparent: Vec::new(),
            squares: Vec::new(),
            live_vertices: 0,
            live_edges: 0,
            live_squares: 0,
            basepoint: 0,
            saturated: false,
        }
    }

    fn add_vertex(&mut self) -> usize {
        let v = self.vparent.len();
        self.vparent.push(v);
        self.incidence.push(Vec::new());
        self.live_vertices += 1;
        v
    }

    fn add_edge(&mut self, a: usize, b: usize, label: usize) -> usize {
        let e = self.edges.len();
        self.edges.push(Edge { ends: [a, b], label, alive: true });
        self.eparent.push(e);
        self.incidence[a].push(e);
        if a != b {
            self.incidence[b].push(e);
        }
        self.live_edges += 1;
        e
    }

    fn find(&mut self, v: usize) -> usize {
        let mut root = v;
        while self.vparent[root] != root {
            root = self.vparent[root];
        }
        let mut cur = v;
        while self.vparent[cur] != root {
            let next = self.vparent[cur];
            self.vparent[cur] = root;
            cur = next;
        }
        root
    }

    fn find_edge(&mut self, e: usize) -> usize {
        let mut root = e;
        while self.eparent[root] != root {
            root = self.eparent[root];
        }
        self.eparent[e] = root;
        root
    }

    fn ends(&mut self, e: usize) -> [usize; 2] {
        let [a, b] = self.edges[e].ends;
        [self.find(a), self.find(b)]
    }

    /// The endpoint of `e` other than the root `v`.
    fn other(&mut self, e: usize, v: usize) -> usize {
        let [a, b] = self.ends(e);
        if a == v {
            b
        } else {
            a
        }
    }

    fn cells(&self) -> usize {
        self.live_vertices + self.live_edges + self.live_squares
    }

    fn union(&mut self, a: usize, b: usize) -> Option<usize> {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return None;
        }
        let (keep, gone) = if self.incidence[a].len() >= self.incidence[b].len() { (a, b) } else { (b, a) };
        self.vparent[gone] = keep;
        let moved = std::mem::take(&mut self.incidence[gone]);
        let list = &mut self.incidence[keep];
        for e in moved {
            // an edge between `a` and `b` becomes a loop and is listed once
            if !list.contains(&e) {
                list.push(e);
            }
        }
        self.live_vertices -= 1;
        Some(keep)
    }

    fn duplicate_at(&self, v: usize) -> Option<(usize, usize)> {
        let list = &self.incidence[v];
        for (i, &e) in list.iter().enumerate() {
            for &f in &list[i + 1..] {
                if self.edges[e].label == self.edges[f].label {
                    return Some((e, f));
                }
            }
        }
        None
    }

    /// Identify `f` with `e`; both carry one label and meet at root `v`.
    fn fold(&mut self, v: usize, e: usize, f: usize) -> Option<usize> {
        let x1 = self.other(e, v);
        let x2 = self.other(f, v);
        for end in self.ends(f) {
            self.incidence[end].retain(|&g| g != f);
        }
        self.edges[f].alive = false;
        self.eparent[f] = e;
        self.live_edges -= 1;
        self.union(x1, x2)
    }

    fn fold_to_saturation(&mut self, rng: &mut Option<ChaCha8Rng>) -> bool {
        let mut queue: Vec<usize> = (0..self.vparent.len()).filter(|&v| self.vparent[v] == v).collect();
        if let Some(rng) = rng {
            queue.shuffle(rng);
        }
        let mut changed = false;
        while let Some(v) = queue.pop() {
            let mut v = self.find(v);
            while let Some((e, f)) = self.duplicate_at(v) {
                changed = true;
                if let Some(root) = self.fold(v, e, f) {
                    queue.push(root);
                }
                v = self.find(v);
            }
        }
        changed
    }

    fn identify_squares(&mut self) {
        let mut seen: HashSet<[usize; 4]> = HashSet::new();
        for q in 0..self.squares.len() {
            if !self.squares[q].alive {
                continue;
            }
            let mut key = self.squares[q].edges.map(|e| self.find_edge(e));
            key.sort_unstable();
            if !seen.insert(key) {
                self.squares[q].alive = false;
                self.live_squares -= 1;
            }
        }
    }

    fn corner_key(&mut self, v: usize, e: usize, f: usize) -> (usize, usize, usize) {
        let v = self.find(v);
        let (e, f) = (self.find_edge(e), self.find_edge(f));
        (v, e.min(f), e.max(f))
    }

    /// One pass of square attachments; returns the number attached, or
    /// `None` once the cell cap is exceeded.
    fn attach_squares(&mut self, rng: &mut Option<ChaCha8Rng>, cell_cap: usize) -> Option<usize> {
        let mut corners = HashSet::new();
        for q in 0..self.squares.len() {
            if !self.squares[q].alive {
                continue;
            }
            let sq = self.squares[q].clone();
            for i in 0..4 {
                let key = self.corner_key(sq.corners[i], sq.edges[i], sq.edges[(i + 1) % 4]);
                corners.insert(key);
            }
        }
        let mut candidates = Vec::new();
        for u in 0..self.vparent.len() {
            if self.vparent[u] != u {
                continue;
            }
            let list = &self.incidence[u];
            for (i, &f1) in list.iter().enumerate() {
                for &f2 in &list[i + 1..] {
                    let (l1, l2) = (self.edges[f1].label, self.edges[f2].label);
                    if self.adjacent[l1][l2] {
                        candidates.push((u, f1, f2));
                    }
                }
            }
        }
        if let Some(rng) = rng {
            candidates.shuffle(rng);
        }
        let mut attached = 0;
        for (u, f1, f2) in candidates {
            let key = self.corner_key(u, f1, f2);
            if !corners.insert(key) {
                continue;
            }
            let x1 = self.other(f1, u);
            let x2 = self.other(f2, u);
            let (l1, l2) = (self.edges[f1].label, self.edges[f2].label);
            let y = self.add_vertex();
            let c3 = self.add_edge(x2, y, l1);
            let c4 = self.add_edge(y, x1, l2);
            let sq = Square { edges: [f1, f2, c3, c4], corners: [u, x2, y, x1], alive: true };
            for i in 1..4 {
                let key = self.corner_key(sq.corners[i], sq.edges[i], sq.edges[(i + 1) % 4]);
                corners.insert(key);
            }
            self.squares.push(sq);
            self.live_squares += 1;
            attached += 1;
            if self.cells() > cell_cap {
                return None;
            }
        }
        Some(attached)
    }

    fn run(&mut self, cell_cap: usize, mut rng: Option<ChaCha8Rng>) {
        loop {
            self.fold_to_saturation(&mut rng);
            self.identify_squares();
            if self.cells() > cell_cap {
                return;
            }
            match self.attach_squares(&mut rng, cell_cap) {
                None => return,
                Some(0) => {
                    self.saturated = true;
                    return;
                }
                Some(_) => {}
            }
        }
    }

    pub fn saturated(&self) -> bool {
        self.saturated
    }

    pub fn vertex_count(&self) -> usize {
        self.live_vertices
    }

    pub fn edge_count(&self) -> usize {
        self.live_edges
    }

    pub fn square_count(&self) -> usize {
        self.live_squares
    }

    pub fn cell_count(&self) -> usize {
        self.cells()
    }

    fn roots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vparent.len()).filter(|&v| self.vparent[v] == v)
    }

    /// Every vertex carries an edge of every label.
    pub fn full_valence(&self) -> bool {
        let n = self.labels.len();
        self.roots().all(|v| {
            let mut seen = vec![false; n];
            for &e in &self.incidence[v] {
                seen[self.edges[e].label] = true;
            }
            seen.into_iter().all(|x| x)
        })
    }

    /// Every edge whose label has a Γ-neighbour among the labels at one of
    /// its endpoints lies on some square.
    pub fn attachment_exhaustive(&self) -> bool {
        let mut c = self.clone();
        let mut on_square = HashSet::new();
        for q in 0..c.squares.len() {
            if c.squares[q].alive {
                for e in c.squares[q].edges {
                    on_square.insert(c.find_edge(e));
                }
            }
        }
        for e in 0..c.edges.len() {
            if !c.edges[e].alive || on_square.contains(&e) {
                continue;
            }
            let label = c.edges[e].label;
            for end in c.ends(e) {
                if c.incidence[end].iter().any(|&f| c.adjacent[label][c.edges[f].label]) {
                    return false;
                }
            }
        }
        true
    }

    /// Breadth-first numbering of the vertices from the basepoint.
    fn numbering(&mut self) -> HashMap<usize, usize> {
        let start = self.find(self.basepoint);
        let mut number = HashMap::from([(start, 0)]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let mut list = self.incidence[v].clone();
            list.sort_by_key(|&e| (self.edges[e].label, e));
            for e in list {
                let w = self.other(e, v);
                if !number.contains_key(&w) {
                    number.insert(w, number.len());
                    queue.push_back(w);
                }
            }
        }
        number
    }

    pub fn canonical(&self) -> CanonicalComplex {
        let mut c = self.clone();
        let number = c.numbering();
        let mut edge_index = BTreeMap::new();
        for e in 0..c.edges.len() {
            if c.edges[e].alive {
                let [a, b] = c.ends(e);
                let (a, b) = (number[&a], number[&b]);
                edge_index.insert(e, (a.min(b), a.max(b), c.edges[e].label));
            }
        }
        let mut edges: Vec<_> = edge_index.values().copied().collect();
        edges.sort_unstable();
        let position = |t: &(usize, usize, usize)| edges.binary_search(t).expect("edge present");
        let mut squares = Vec::new();
        for q in 0..c.squares.len() {
            if c.squares[q].alive {
                let mut s = c.squares[q].edges.map(|e| {
                    let e = c.find_edge(e);
                    position(&edge_index[&e])
                });
                s.sort_unstable();
                squares.push(s);
            }
        }
        squares.sort_unstable();
        CanonicalComplex { vertex_count: number.len(), edges, squares }
    }

    /// Text listing in canonical numbering: vertex count, `v1 v2 label`
    /// edge lines, and `v0 v1 v2 v3 s t` square lines where `s` labels the
    /// side v0–v1 and `t` the side v1–v2.
    pub fn export(&self) -> String {
        let mut c = self.clone();
        let number = c.numbering();
        let canonical = self.canonical();
        let mut out = String::new();
        let _ = writeln!(out, "vertices {}", canonical.vertex_count);
        let _ = writeln!(out, "edges {}", canonical.edges.len());
        for &(a, b, label) in &canonical.edges {
            let _ = writeln!(out, "{a} {b} {}", c.labels[label]);
        }
        let mut quads = Vec::new();
        for q in 0..c.squares.len() {
            if c.squares[q].alive {
                let Square { edges, corners, .. } = c.squares[q].clone();
                let corners = corners.map(|v| number[&c.find(v)]);
                let labels = edges.map(|e| c.labels[c.edges[e].label].clone());
                // the least of the eight walks around the boundary
                let mut best: Option<([usize; 4], [String; 2])> = None;
                for start in 0..4 {
                    for forward in [true, false] {
                        let at = |k: usize| if forward { (start + k) % 4 } else { (start + 4 - k) % 4 };
                        let side = |k: usize| if forward { labels[(at(k) + 1) % 4].clone() } else { labels[at(k)].clone() };
                        let walk = ([at(0), at(1), at(2), at(3)].map(|i| corners[i]), [side(0), side(1)]);
                        if best.as_ref().is_none_or(|b| walk < *b) {
                            best = Some(walk);
                        }
                    }
                }
                quads.push(best.expect("eight walks"));
            }
        }
        quads.sort_unstable();
        let _ = writeln!(out, "squares {}", quads.len());
        for ([a, b, v, d], [s, t]) in quads {
            let _ = writeln!(out, "{a} {b} {v} {d} {s} {t}");
        }
        out
    }
}

fn initial_complex(theta: &ThetaGraph) -> Result<LabeledComplex> {
    let gamma = theta.gamma();
    if !gamma.is_triangle_free() {
        return Err(Error::NotTriangleFree);
    }
    let mut c = LabeledComplex::empty(gamma);
    c.basepoint = c.add_vertex();
    for &(s, t) in theta.lambda_edges() {
        let mid = c.add_vertex();
        c.add_edge(c.basepoint, mid, s);
        c.add_edge(mid, c.basepoint, t);
    }
    Ok(c)
}

/// Build Ω, stopping once more than `cell_cap` cells are live.
pub fn build_completion(theta: &ThetaGraph, cell_cap: usize) -> Result<LabeledComplex> {
    let mut c = initial_complex(theta)?;
    c.run(cell_cap, None);
    Ok(c)
}

/// As [`build_completion`], with operation order inside each phase shuffled
/// by a seeded generator.
pub fn build_completion_seeded(theta: &ThetaGraph, cell_cap: usize, seed: u64) -> Result<LabeledComplex> {
    let mut c = initial_complex(theta)?;
    c.run(cell_cap, Some(ChaCha8Rng::seed_from_u64(seed)));
    Ok(c)
}

/// Index of the subgroup: the vertex count when Ω has full valence over `gamma`.
pub fn index_report(complex: &LabeledComplex, gamma: &SimplicialGraph) -> Result<OmegaIndex> {
    if !complex.saturated {
        return Err(Error::NotSaturated);
    }
    debug_assert_eq!(complex.labels, gamma.names());
    let full_valence = complex.full_valence();
    let vertex_count = complex.vertex_count();
    Ok(OmegaIndex { full_valence, vertex_count, index: full_valence.then_some(vertex_count as u64) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_family, FamilySpec};
    use crate::theta::build_theta;

    fn theta(vertices: &[&str], gamma: &[(&str, &str)], lambda: &[(&str, &str)]) -> ThetaGraph {
        let g = SimplicialGraph::new(vertices, gamma.iter().copied()).unwrap();
        build_theta(g, lambda.iter().copied()).unwrap()
    }

    fn index_of(t: &ThetaGraph) -> OmegaIndex {
        let c = build_completion(t, 50_000).unwrap();
        assert!(c.saturated());
        index_report(&c, t.gamma()).unwrap()
    }

    #[test]
    fn path_on_edgeless_has_two_vertices() {
        let t = theta(&["1", "2", "3", "4"], &[], &[("1", "2"), ("2", "3"), ("3", "4")]);
        assert_eq!(index_of(&t), OmegaIndex { full_valence: true, vertex_count: 2, index: Some(2) });
    }

    #[test]
    fn infinite_dihedral() {
        let t = theta(&["1", "2"], &[], &[("1", "2")]);
        assert_eq!(index_of(&t).index, Some(2));
    }

    #[test]
    fn c4_diagonals_has_four_vertices() {
        let t = make_family(&FamilySpec::C4Diagonals).unwrap();
        let c = build_completion(&t, 50_000).unwrap();
        assert_eq!(index_report(&c, t.gamma()).unwrap().index, Some(4));
        assert!(c.attachment_exhaustive());
    }

    #[test]
    fn single_diagonal_lacks_valence() {
        let t = theta(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")], &[("a", "c")]);
        let r = index_of(&t);
        assert!(!r.full_valence);
        assert_eq!(r.index, None);
    }

    #[test]
    fn gamma3_is_index_four_and_confluent() {
        let t = make_family(&FamilySpec::GammaN { n: 3 }).unwrap();
        let c = build_completion(&t, 50_000).unwrap();
        assert_eq!(index_report(&c, t.gamma()).unwrap().index, Some(4));
        let canon = c.canonical();
        for seed in 0..5 {
            let other = build_completion_seeded(&t, 50_000, seed).unwrap();
            assert_eq!(other.canonical(), canon);
        }
    }

    #[test]
    fn cap_reports_unsaturated() {
        // Λ-edges of the hexagon generate an infinite-index subgroup.
        let t = make_family(&FamilySpec::Hexagon).unwrap();
        let c = build_completion(&t, 200).unwrap();
        if !c.saturated() {
            assert_eq!(index_report(&c, t.gamma()), Err(Error::NotSaturated));
        }
        let tri = theta(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")], &[]);
        assert!(matches!(build_completion(&tri, 10), Err(Error::NotTriangleFree)));
    }

    #[test]
    fn export_lists_cells() {
        let t = make_family(&FamilySpec::C4Diagonals).unwrap();
        let text = build_completion(&t, 50_000).unwrap().export();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("vertices 4"));
        assert!(text.contains("\nsquares "));
    }
}
