//! The overlay of a graph Γ with a chosen subgraph Λ of its complement.
//!
//! Λ-edges are stored oriented; the default orientation puts the smaller
//! vertex first. Components of Λ get ids in order of their smallest vertex.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{SimplicialGraph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaGraph {
    gamma: SimplicialGraph,
    lambda: SimplicialGraph,
    component_of: Vec<Option<usize>>,
    components: Vec<Vec<Vertex>>,
    /// One entry per Λ-edge, in sorted unordered-edge order: (tail, head).
    oriented: Vec<(Vertex, Vertex)>,
    edge_index: BTreeMap<(Vertex, Vertex), usize>,
    /// Λ-distances; `u32::MAX` between different components.
    distance: Vec<Vec<u32>>,
}

/// A Γ-cycle alternating between two Λ-components. Even positions hold
/// vertices of `c_component`, odd positions vertices of `d_component`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoComponentCycle {
    pub c_component: usize,
    pub d_component: usize,
    pub vertices: Vec<Vertex>,
}

impl TwoComponentCycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn c_vertices(&self) -> Vec<Vertex> {
        self.vertices.iter().step_by(2).copied().collect()
    }

    pub fn d_vertices(&self) -> Vec<Vertex> {
        self.vertices.iter().skip(1).step_by(2).copied().collect()
    }

    /// Cycle edges as (c-vertex, d-vertex) pairs.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let (u, v) = (self.vertices[i], self.vertices[(i + 1) % n]);
                if i % 2 == 0 {
                    (u, v)
                } else {
                    (v, u)
                }
            })
            .collect()
    }

    pub fn names(&self, theta: &ThetaGraph) -> Vec<String> {
        self.vertices.iter().map(|&v| theta.name(v).to_string()).collect()
    }

    /// Least sequence among the rotations and reflections that keep
    /// c-vertices at even positions.
    fn canonical(c_component: usize, d_component: usize, cyclic: &[Vertex]) -> Self {
        let n = cyclic.len();
        let mut best: Option<Vec<Vertex>> = None;
        for start in (0..n).step_by(2) {
            let forward: Vec<Vertex> = (0..n).map(|i| cyclic[(start + i) % n]).collect();
            let backward: Vec<Vertex> = (0..n).map(|i| cyclic[(start + n - i) % n]).collect();
            for cand in [forward, backward] {
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        TwoComponentCycle { c_component, d_component, vertices: best.unwrap_or_default() }
    }
}

#[derive(Clone, Debug, Default)]
pub struct CycleEnumeration {
    pub cycles: Vec<TwoComponentCycle>,
    pub truncated: bool,
}

/// Build a Θ from Γ and a list of Λ-edges given by vertex name.
pub fn build_theta<E, T>(gamma: SimplicialGraph, lambda_edges: E) -> Result<ThetaGraph>
where
    E: IntoIterator<Item = (T, T)>,
    T: AsRef<str>,
{
    let mut pairs = Vec::new();
    for (a, b) in lambda_edges {
        let ia = gamma.vertex(a.as_ref())?;
        let ib = gamma.vertex(b.as_ref())?;
        pairs.push((ia, ib));
    }
    ThetaGraph::from_index_pairs(gamma, &pairs)
}

impl ThetaGraph {
    pub(crate) fn from_index_pairs(gamma: SimplicialGraph, pairs: &[(Vertex, Vertex)]) -> Result<Self> {
        for &(a, b) in pairs {
            if a != b && gamma.has_edge(a, b) {
                let (x, y) = (a.min(b), a.max(b));
                return Err(Error::LambdaNotInComplement(
                    gamma.name(x).to_string(),
                    gamma.name(y).to_string(),
                ));
            }
        }
        let lambda = SimplicialGraph::from_index_edges(gamma.names().to_vec(), pairs)?;
        let n = gamma.vertex_count();
        let mut component_of = vec![None; n];
        let mut components = Vec::new();
        for comp in lambda.components() {
            if comp.len() < 2 {
                continue;
            }
            for &v in &comp {
                component_of[v] = Some(components.len());
            }
            components.push(comp);
        }
        let oriented = lambda.edges();
        let edge_index = oriented.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut distance = vec![vec![u32::MAX; n]; n];
        for (s, row) in distance.iter_mut().enumerate() {
            row[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in lambda.neighbors(v) {
                    if row[w] == u32::MAX {
                        row[w] = row[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        Ok(ThetaGraph { gamma, lambda, component_of, components, oriented, edge_index, distance })
    }

    pub fn gamma(&self) -> &SimplicialGraph {
        &self.gamma
    }

    pub fn lambda(&self) -> &SimplicialGraph {
        &self.lambda
    }

    pub fn name(&self, v: Vertex) -> &str {
        self.gamma.name(v)
    }

    pub fn vertex(&self, name: &str) -> Result<Vertex> {
        self.gamma.vertex(name)
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Vec<Vertex>] {
        &self.components
    }

    pub fn component(&self, id: usize) -> &[Vertex] {
        &self.components[id]
    }

    pub fn component_of(&self, v: Vertex) -> Option<usize> {
        self.component_of[v]
    }

    /// Oriented Λ-edges `(tail, head)`; the group element is `tail·head`.
    pub fn lambda_edges(&self) -> &[(Vertex, Vertex)] {
        &self.oriented
    }

    pub fn lambda_edge_label(&self, i: usize) -> String {
        let (a, b) = self.oriented[i];
        format!("{}-{}", self.name(a), self.name(b))
    }

    /// Index of the Λ-edge joining `a` and `b`, regardless of orientation.
    pub fn lambda_edge_between(&self, a: Vertex, b: Vertex) -> Option<usize> {
        self.edge_index.get(&(a.min(b), a.max(b))).copied()
    }

    /// Λ-distance between two vertices of the same component.
    pub fn lambda_distance(&self, a: Vertex, b: Vertex) -> Option<u32> {
        let d = self.distance[a][b];
        (d != u32::MAX).then_some(d)
    }

    /// Reverse the orientation of the Λ-edges with the given indices.
    pub fn with_flipped(&self, flips: &[usize]) -> ThetaGraph {
        let mut out = self.clone();
        for &i in flips {
            let (a, b) = out.oriented[i];
            out.oriented[i] = (b, a);
        }
        out
    }

    pub fn with_all_flipped(&self) -> ThetaGraph {
        let all: Vec<usize> = (0..self.oriented.len()).collect();
        self.with_flipped(&all)
    }

    /// Rename every vertex, keeping each Λ-edge's orientation.
    pub fn renamed(&self, rename: impl Fn(&str) -> String) -> Result<ThetaGraph> {
        let names: Vec<String> = self.gamma.names().iter().map(|n| rename(n)).collect();
        let edges: Vec<(String, String)> = self
            .gamma
            .edges()
            .into_iter()
            .map(|(a, b)| (names[a].clone(), names[b].clone()))
            .collect();
        let gamma = SimplicialGraph::new(&names, edges)?;
        let lam: Vec<(String, String)> =
            self.oriented.iter().map(|&(a, b)| (names[a].clone(), names[b].clone())).collect();
        let mut theta = build_theta(gamma, lam.iter().map(|(a, b)| (a.as_str(), b.as_str())))?;
        let mut flips = Vec::new();
        for (tail, head) in &lam {
            let (t, h) = (theta.vertex(tail)?, theta.vertex(head)?);
            let i = theta.lambda_edge_between(t, h).expect("edge exists");
            if theta.oriented[i] != (t, h) {
                flips.push(i);
            }
        }
        theta = theta.with_flipped(&flips);
        Ok(theta)
    }

    /// Θ over Γ with the given vertices deleted (they must not lie on Λ).
    pub fn without_gamma_vertices(&self, removed: &[Vertex]) -> Result<ThetaGraph> {
        for &v in removed {
            if self.component_of[v].is_some() {
                return Err(Error::VertexNotInLambda(self.name(v).to_string()));
            }
        }
        let gamma = self.gamma.without_vertices(removed);
        let lam: Vec<(String, String)> = self
            .oriented
            .iter()
            .map(|&(a, b)| (self.name(a).to_string(), self.name(b).to_string()))
            .collect();
        let base = build_theta(gamma, lam.iter().map(|(a, b)| (a.as_str(), b.as_str())))?;
        let mut flips = Vec::new();
        for (tail, head) in &lam {
            let (t, h) = (base.vertex(tail)?, base.vertex(head)?);
            let i = base.lambda_edge_between(t, h).expect("edge exists");
            if base.oriented[i] != (t, h) {
                flips.push(i);
            }
        }
        Ok(base.with_flipped(&flips))
    }

    /// Vertex set of the Λ-convex hull of `x`: the interval-closure fixpoint
    /// under Λ-geodesics. On a tree this is the union of the paths between
    /// members of `x`.
    pub fn hull(&self, x: &[Vertex]) -> Result<Vec<Vertex>> {
        let Some(&first) = x.first() else {
            return Ok(Vec::new());
        };
        let comp = self
            .component_of(first)
            .ok_or_else(|| Error::VertexNotInLambda(self.name(first).to_string()))?;
        for &v in x {
            match self.component_of(v) {
                None => return Err(Error::VertexNotInLambda(self.name(v).to_string())),
                Some(c) if c != comp => return Err(Error::MixedComponents),
                _ => {}
            }
        }
        let members = &self.components[comp];
        let mut set: BTreeSet<Vertex> = x.iter().copied().collect();
        loop {
            let current: Vec<Vertex> = set.iter().copied().collect();
            let mut added = false;
            for (i, &u) in current.iter().enumerate() {
                for &v in &current[i + 1..] {
                    let duv = self.distance[u][v];
                    for &z in members {
                        if !set.contains(&z)
                            && self.distance[u][z].saturating_add(self.distance[z][v]) == duv
                        {
                            set.insert(z);
                            added = true;
                        }
                    }
                }
            }
            if !added {
                return Ok(set.into_iter().collect());
            }
        }
    }

    /// The Λ-convex hull of `x` as a subgraph of Λ (induced on the hull vertices).
    pub fn lambda_convex_hull(&self, x: &[Vertex]) -> Result<SimplicialGraph> {
        let verts = self.hull(x)?;
        let names: Vec<String> = verts.iter().map(|&v| self.name(v).to_string()).collect();
        let mut edges = Vec::new();
        for (i, &a) in verts.iter().enumerate() {
            for (j, &b) in verts.iter().enumerate().skip(i + 1) {
                if self.lambda.has_edge(a, b) {
                    edges.push((i, j));
                }
            }
        }
        SimplicialGraph::from_index_edges(names, &edges)
    }

    /// Λ-edges of the subgraph induced on `verts`.
    pub fn lambda_edges_within(&self, verts: &[Vertex]) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for (i, &a) in verts.iter().enumerate() {
            for &b in &verts[i + 1..] {
                if self.lambda.has_edge(a, b) {
                    out.push((a.min(b), a.max(b)));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Whether the Λ-component with this id is a tree.
    pub fn component_is_tree(&self, id: usize) -> bool {
        let comp = &self.components[id];
        let edges: usize = comp.iter().map(|&v| self.lambda.degree(v)).sum::<usize>() / 2;
        edges + 1 == comp.len()
    }

    /// The unique simple Λ-path from `a` to `b`, endpoints included.
    pub fn lambda_path(&self, a: Vertex, b: Vertex) -> Result<Vec<Vertex>> {
        let ca = self.component_of(a).ok_or_else(|| Error::VertexNotInLambda(self.name(a).into()))?;
        let cb = self.component_of(b).ok_or_else(|| Error::VertexNotInLambda(self.name(b).into()))?;
        if ca != cb {
            return Err(Error::MixedComponents);
        }
        if !self.component_is_tree(ca) {
            return Err(Error::NotUniquePath(self.name(a).to_string()));
        }
        let mut path = vec![a];
        let mut cur = a;
        while cur != b {
            let next = self
                .lambda
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&w| self.distance[w][b] + 1 == self.distance[cur][b])
                .expect("geodesic step exists in a connected component");
            path.push(next);
            cur = next;
        }
        Ok(path)
    }

    /// Γ-neighbours of `v` inside the Λ-component `comp`.
    fn gamma_neighbors_in(&self, v: Vertex, comp: usize) -> impl Iterator<Item = Vertex> + '_ {
        self.gamma.neighbors(v).iter().copied().filter(move |&w| self.component_of[w] == Some(comp))
    }

    /// Every Γ-square `c1 d1 c2 d2` with the c's in `comp_c` and the d's in `comp_d`.
    pub fn enumerate_two_component_squares(&self, comp_c: usize, comp_d: usize) -> Vec<TwoComponentCycle> {
        assert_ne!(comp_c, comp_d, "squares need two distinct components");
        let cs = &self.components[comp_c];
        let mut out = Vec::new();
        for (i, &c1) in cs.iter().enumerate() {
            let n1: BTreeSet<Vertex> = self.gamma_neighbors_in(c1, comp_d).collect();
            if n1.len() < 2 {
                continue;
            }
            for &c2 in &cs[i + 1..] {
                let common: Vec<Vertex> =
                    self.gamma_neighbors_in(c2, comp_d).filter(|w| n1.contains(w)).collect();
                for (j, &d1) in common.iter().enumerate() {
                    for &d2 in &common[j + 1..] {
                        out.push(TwoComponentCycle::canonical(comp_c, comp_d, &[c1, d1, c2, d2]));
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Simple cycles of the bipartite graph of Γ-edges between two Λ-components.
    ///
    /// Cycles longer than `max_len` vertices are not explored and at most
    /// `max_count` cycles are returned; either cut sets `truncated`.
    pub fn enumerate_two_component_cycles(
        &self,
        comp_c: usize,
        comp_d: usize,
        max_len: usize,
        max_count: usize,
    ) -> CycleEnumeration {
        assert_ne!(comp_c, comp_d, "cycles need two distinct components");
        let mut verts: Vec<Vertex> =
            self.components[comp_c].iter().chain(&self.components[comp_d]).copied().collect();
        verts.sort_unstable();
        let adjacency: BTreeMap<Vertex, Vec<Vertex>> = verts
            .iter()
            .map(|&v| {
                let other = if self.component_of[v] == Some(comp_c) { comp_d } else { comp_c };
                (v, self.gamma_neighbors_in(v, other).collect())
            })
            .collect();

        struct Search<'a> {
            adjacency: &'a BTreeMap<Vertex, Vec<Vertex>>,
            max_len: usize,
            max_count: usize,
            path: Vec<Vertex>,
            on_path: BTreeSet<Vertex>,
            found: Vec<Vec<Vertex>>,
            truncated: bool,
        }

        impl Search<'_> {
            fn extend(&mut self, start: Vertex) {
                if self.found.len() >= self.max_count {
                    self.truncated = true;
                    return;
                }
                let last = *self.path.last().expect("path starts at start");
                let nbrs = &self.adjacency[&last];
                for &w in nbrs {
                    if w == start && self.path.len() >= 4 && self.path[1] < last {
                        if self.found.len() >= self.max_count {
                            self.truncated = true;
                            return;
                        }
                        self.found.push(self.path.clone());
                    }
                }
                for &w in nbrs {
                    if w <= start || self.on_path.contains(&w) {
                        continue;
                    }
                    if self.path.len() >= self.max_len {
                        self.truncated = true;
                        continue;
                    }
                    self.path.push(w);
                    self.on_path.insert(w);
                    self.extend(start);
                    self.on_path.remove(&w);
                    self.path.pop();
                    if self.truncated && self.found.len() >= self.max_count {
                        return;
                    }
                }
            }
        }

        let mut search = Search {
            adjacency: &adjacency,
            max_len,
            max_count,
            path: Vec::new(),
            on_path: BTreeSet::new(),
            found: Vec::new(),
            truncated: false,
        };
        for &s in &verts {
            search.path = vec![s];
            search.on_path = BTreeSet::from([s]);
            search.extend(s);
            if search.found.len() >= search.max_count && search.truncated {
                break;
            }
        }
        let mut cycles: Vec<TwoComponentCycle> = search
            .found
            .iter()
            .map(|cyc| {
                // rotate so that position 0 holds a vertex of comp_c
                let rotated: Vec<Vertex> = if self.component_of[cyc[0]] == Some(comp_c) {
                    cyc.clone()
                } else {
                    cyc[1..].iter().chain(&cyc[..1]).copied().collect()
                };
                TwoComponentCycle::canonical(comp_c, comp_d, &rotated)
            })
            .collect();
        cycles.sort_by(|a, b| (a.len(), &a.vertices).cmp(&(b.len(), &b.vertices)));
        cycles.dedup();
        CycleEnumeration { cycles, truncated: search.truncated }
    }

    /// Whether a Γ-path alternating between `comp_s` and `comp_t` joins `s` to `t`.
    pub fn exists_two_component_path(
        &self,
        comp_s: usize,
        comp_t: usize,
        s: Vertex,
        t: Vertex,
    ) -> Result<bool> {
        if self.component_of[s] != Some(comp_s) {
            return Err(Error::VertexNotInStatedComponent(self.name(s).to_string()));
        }
        if self.component_of[t] != Some(comp_t) {
            return Err(Error::VertexNotInStatedComponent(self.name(t).to_string()));
        }
        Ok(self.two_component_reachable(comp_s, comp_t, s).contains(&t))
    }

    /// Vertices reachable from `s` by Γ-paths alternating between the two components.
    pub(crate) fn two_component_reachable(&self, comp_a: usize, comp_b: usize, s: Vertex) -> BTreeSet<Vertex> {
        let mut seen = BTreeSet::from([s]);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let other = if self.component_of[v] == Some(comp_a) { comp_b } else { comp_a };
            for w in self.gamma_neighbors_in(v, other) {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }
}

/// Serializable snapshot of a Θ's components, used in reports.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ComponentSummary {
    pub id: usize,
    pub vertices: Vec<String>,
}

impl ThetaGraph {
    pub fn component_summaries(&self) -> Vec<ComponentSummary> {
        self.components
            .iter()
            .enumerate()
            .map(|(id, c)| ComponentSummary {
                id,
                vertices: c.iter().map(|&v| self.name(v).to_string()).collect(),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_family, FamilySpec};

    fn c4_diagonals() -> ThetaGraph {
        make_family(&FamilySpec::C4Diagonals).unwrap()
    }

    fn hexagon() -> ThetaGraph {
        make_family(&FamilySpec::Hexagon).unwrap()
    }

    fn gamma3() -> ThetaGraph {
        make_family(&FamilySpec::GammaN { n: 3 }).unwrap()
    }

    fn v(t: &ThetaGraph, names: &[&str]) -> Vec<Vertex> {
        names.iter().map(|n| t.vertex(n).unwrap()).collect()
    }

    #[test]
    fn build_counts_components() {
        assert_eq!(c4_diagonals().component_count(), 2);
        assert_eq!(gamma3().component_count(), 2);
    }

    #[test]
    fn build_rejects_gamma_edge_in_lambda() {
        let g = SimplicialGraph::new(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
            .unwrap();
        assert_eq!(
            build_theta(g.clone(), [("a", "b")]),
            Err(Error::LambdaNotInComplement("a".into(), "b".into()))
        );
        assert_eq!(build_theta(g.clone(), [("a", "a")]), Err(Error::LoopEdge("a".into())));
        assert_eq!(build_theta(g, [("a", "q")]), Err(Error::UnknownVertex("q".into())));
    }

    #[test]
    fn hull_examples() {
        let h = hexagon();
        assert_eq!(h.hull(&v(&h, &["1"])).unwrap(), v(&h, &["1"]));
        assert_eq!(h.hull(&v(&h, &["1", "5"])).unwrap(), v(&h, &["1", "3", "5"]));
        let g = gamma3();
        let hull = g.lambda_convex_hull(&v(&g, &["c1", "c2"])).unwrap();
        assert_eq!(hull.names(), &["c1", "c2", "x"]);
        assert_eq!(hull.edge_count(), 2);
        assert_eq!(g.hull(&v(&g, &["c1", "d1"])), Err(Error::MixedComponents));
    }

    #[test]
    fn hull_on_cyclic_component_uses_all_geodesics() {
        // Λ = 4-cycle p-q-r-s; both geodesics from p to r are included
        let g = SimplicialGraph::new(["p", "q", "r", "s"], Vec::<(&str, &str)>::new()).unwrap();
        let t = build_theta(g, [("p", "q"), ("q", "r"), ("r", "s"), ("s", "p")]).unwrap();
        assert_eq!(t.hull(&v(&t, &["p", "r"])).unwrap().len(), 4);
        assert_eq!(t.hull(&v(&t, &["p", "q"])).unwrap(), v(&t, &["p", "q"]));
    }

    #[test]
    fn square_counts() {
        assert_eq!(c4_diagonals().enumerate_two_component_squares(0, 1).len(), 1);
        assert_eq!(hexagon().enumerate_two_component_squares(0, 1).len(), 0);
        assert_eq!(gamma3().enumerate_two_component_squares(0, 1).len(), 12);
    }

    #[test]
    fn square_count_matches_brute_force_on_gamma3() {
        let t = gamma3();
        let n = t.gamma().vertex_count();
        let mut count = 0;
        // 4-subsets {c1,c2} ⊂ Λ_0, {d1,d2} ⊂ Λ_1 spanning a Γ-square c1 d1 c2 d2
        for c1 in 0..n {
            for c2 in c1 + 1..n {
                for d1 in 0..n {
                    for d2 in d1 + 1..n {
                        let ok = [c1, c2].iter().all(|&c| t.component_of(c) == Some(0))
                            && [d1, d2].iter().all(|&d| t.component_of(d) == Some(1))
                            && [(c1, d1), (d1, c2), (c2, d2), (d2, c1)]
                                .iter()
                                .all(|&(a, b)| t.gamma().has_edge(a, b));
                        if ok {
                            count += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(count, 12);
    }

    #[test]
    fn cycle_examples() {
        let c4 = c4_diagonals().enumerate_two_component_cycles(0, 1, 20, 10_000);
        assert_eq!(c4.cycles.len(), 1);
        assert!(!c4.truncated);
        let hex = hexagon();
        let cyc = hex.enumerate_two_component_cycles(0, 1, 20, 10_000);
        assert_eq!(cyc.cycles.len(), 1);
        assert_eq!(cyc.cycles[0].names(&hex), ["1", "2", "3", "4", "5", "6"]);
        let g = gamma3();
        let all = g.enumerate_two_component_cycles(0, 1, 20, 10_000);
        let want = TwoComponentCycle::canonical(0, 1, &v(&g, &["c1", "d1", "c2", "d2", "c3", "d3"]));
        assert!(all.cycles.contains(&want));
    }

    #[test]
    fn cycle_caps_set_truncation() {
        let g = gamma3();
        let capped = g.enumerate_two_component_cycles(0, 1, 4, 10_000);
        assert!(capped.truncated);
        assert!(capped.cycles.iter().all(|c| c.len() == 4));
        let counted = g.enumerate_two_component_cycles(0, 1, 20, 3);
        assert!(counted.truncated);
        assert_eq!(counted.cycles.len(), 3);
    }

    #[test]
    fn two_component_paths() {
        let c4 = c4_diagonals();
        let (a, b) = (c4.vertex("a").unwrap(), c4.vertex("b").unwrap());
        let (ca, cb) = (c4.component_of(a).unwrap(), c4.component_of(b).unwrap());
        assert!(c4.exists_two_component_path(ca, cb, a, b).unwrap());
        let h = hexagon();
        let [one, two, four] = [h.vertex("1").unwrap(), h.vertex("2").unwrap(), h.vertex("4").unwrap()];
        assert!(h.exists_two_component_path(0, 1, one, two).unwrap());
        assert!(h.exists_two_component_path(0, 1, one, four).unwrap());
        assert_eq!(
            h.exists_two_component_path(1, 0, one, two),
            Err(Error::VertexNotInStatedComponent("1".into()))
        );
    }

    #[test]
    fn lambda_paths() {
        let g = gamma3();
        assert_eq!(g.lambda_path(g.vertex("c1").unwrap(), g.vertex("c2").unwrap()).unwrap(), v(&g, &["c1", "x", "c2"]));
        let gr = SimplicialGraph::new(["p", "q", "r"], Vec::<(&str, &str)>::new()).unwrap();
        let tri = build_theta(gr, [("p", "q"), ("q", "r"), ("r", "p")]).unwrap();
        assert!(matches!(tri.lambda_path(0, 1), Err(Error::NotUniquePath(_))));
    }
}
