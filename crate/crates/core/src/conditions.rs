//! Checkers for the combinatorial conditions on Θ.
//!
//! R3, R4, R5 and the triangle configuration need Λ to be a forest and
//! return [`Error::PreconditionR1`] otherwise. R5 and the triangle
//! configuration pass vacuously with fewer than three Λ-components.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::Vertex;
use crate::theta::{ThetaGraph, TwoComponentCycle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Condition {
    R1,
    R2,
    R3,
    R4,
    R5,
    F1,
    F2,
    TriangleConfig,
}

impl Condition {
    pub const ALL: [Condition; 8] = [
        Condition::R1,
        Condition::R2,
        Condition::R3,
        Condition::R4,
        Condition::R5,
        Condition::F1,
        Condition::F2,
        Condition::TriangleConfig,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Condition::R1 => "R1",
            Condition::R2 => "R2",
            Condition::R3 => "R3",
            Condition::R4 => "R4",
            Condition::R5 => "R5",
            Condition::F1 => "F1",
            Condition::F2 => "F2",
            Condition::TriangleConfig => "TriangleConfig",
        }
    }

    fn needs_forest(self) -> bool {
        matches!(self, Condition::R3 | Condition::R4 | Condition::R5 | Condition::TriangleConfig)
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Condition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Condition::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::BadParams(format!("unknown condition {s:?}")))
    }
}

/// Failure evidence, with vertices given by name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A cycle of Λ-edges.
    LambdaCycle { cycle: Vec<String> },
    /// A Γ-edge inside one Λ-component.
    SameComponentEdge { a: String, b: String },
    /// A 2-component square whose hulls are not joined: `c` and `d` are not Γ-adjacent.
    MissingJoin { square: Vec<String>, c: String, d: String },
    /// A 2-component cycle with an edge that lies in no admissible square.
    UncoveredEdge { cycle: Vec<String>, edge: [String; 2] },
    /// An R5 configuration whose Λ-edge `edge` of T_a joins neither hull.
    R5Violation { square: Vec<String>, a: String, a_prime: String, edge: [String; 2] },
    /// A Γ-square between two components joined through a third on both sides.
    TriangleConfiguration {
        components: [usize; 3],
        square: Vec<String>,
        c_path: [String; 2],
        d_path: [String; 2],
    },
    /// A non-cone vertex on no Λ-edge.
    UncoveredVertex { vertex: String },
    /// No alternating path joins `s` and `t`.
    Unreachable { s: String, t: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    #[serde(rename = "name")]
    pub condition: Condition,
    pub passed: bool,
    pub witness: Option<Witness>,
    /// An enumeration cap was hit, so a pass is not conclusive.
    pub truncated: bool,
}

impl ConditionReport {
    fn pass(condition: Condition) -> Self {
        ConditionReport { condition, passed: true, witness: None, truncated: false }
    }

    fn fail(condition: Condition, witness: Witness) -> Self {
        ConditionReport { condition, passed: false, witness: Some(witness), truncated: false }
    }

    /// Passed with no truncation.
    pub fn conclusive_pass(&self) -> bool {
        self.passed && !self.truncated
    }
}

fn names(theta: &ThetaGraph, vs: &[Vertex]) -> Vec<String> {
    vs.iter().map(|&v| theta.name(v).to_string()).collect()
}

fn require_forest(theta: &ThetaGraph) -> Result<()> {
    if theta.lambda().is_forest() {
        Ok(())
    } else {
        Err(Error::PreconditionR1)
    }
}

fn component_pairs(theta: &ThetaGraph) -> impl Iterator<Item = (usize, usize)> {
    let k = theta.component_count();
    (0..k).flat_map(move |c| (c + 1..k).map(move |d| (c, d)))
}

pub fn check(theta: &ThetaGraph, condition: Condition, caps: &Caps) -> Result<ConditionReport> {
    match condition {
        Condition::R1 => Ok(check_r1(theta)),
        Condition::R2 => Ok(check_r2(theta)),
        Condition::R3 => check_r3(theta),
        Condition::R4 => check_r4(theta, caps),
        Condition::R5 => check_r5(theta),
        Condition::F1 => Ok(check_f1(theta)),
        Condition::F2 => Ok(check_f2(theta)),
        Condition::TriangleConfig => check_triangle_config(theta),
    }
}

/// Run the given checks in order. Checks that need R1 are skipped when it fails.
pub fn check_all(theta: &ThetaGraph, conditions: &[Condition], caps: &Caps) -> Vec<ConditionReport> {
    let forest = theta.lambda().is_forest();
    conditions
        .iter()
        .filter(|c| forest || !c.needs_forest())
        .map(|&c| check(theta, c, caps).expect("precondition checked above"))
        .collect()
}

/// Λ is a forest.
pub fn check_r1(theta: &ThetaGraph) -> ConditionReport {
    match find_lambda_cycle(theta) {
        None => ConditionReport::pass(Condition::R1),
        Some(cycle) => ConditionReport::fail(Condition::R1, Witness::LambdaCycle { cycle: names(theta, &cycle) }),
    }
}

fn find_lambda_cycle(theta: &ThetaGraph) -> Option<Vec<Vertex>> {
    let lambda = theta.lambda();
    let n = lambda.vertex_count();
    let mut parent: Vec<Option<Vertex>> = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in lambda.neighbors(v) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    parent[w] = Some(v);
                    queue.push_back(w);
                } else if parent[v] != Some(w) && parent[w] != Some(v) {
                    // non-tree edge v-w closes a cycle through their common ancestor
                    let (mut a, mut b) = (v, w);
                    let (mut left, mut right) = (vec![a], vec![b]);
                    while depth[a] > depth[b] {
                        a = parent[a].expect("non-root");
                        left.push(a);
                    }
                    while depth[b] > depth[a] {
                        b = parent[b].expect("non-root");
                        right.push(b);
                    }
                    while a != b {
                        a = parent[a].expect("non-root");
                        b = parent[b].expect("non-root");
                        left.push(a);
                        right.push(b);
                    }
                    right.pop();
                    left.extend(right.into_iter().rev());
                    return Some(left);
                }
            }
        }
    }
    None
}

/// No Γ-edge joins two vertices of one Λ-component.
pub fn check_r2(theta: &ThetaGraph) -> ConditionReport {
    for (a, b) in theta.gamma().edges() {
        if theta.component_of(a).is_some() && theta.component_of(a) == theta.component_of(b) {
            return ConditionReport::fail(
                Condition::R2,
                Witness::SameComponentEdge { a: theta.name(a).into(), b: theta.name(b).into() },
            );
        }
    }
    ConditionReport::pass(Condition::R2)
}

/// For every 2-component square, Γ contains the join of the two hulls.
pub fn check_r3(theta: &ThetaGraph) -> Result<ConditionReport> {
    require_forest(theta)?;
    for (c, d) in component_pairs(theta) {
        for square in theta.enumerate_two_component_squares(c, d) {
            let tc = theta.hull(&square.c_vertices())?;
            let td = theta.hull(&square.d_vertices())?;
            for &x in &tc {
                if let Some(&y) = td.iter().find(|&&y| !theta.gamma().has_edge(x, y)) {
                    return Ok(ConditionReport::fail(
                        Condition::R3,
                        Witness::MissingJoin {
                            square: square.names(theta),
                            c: theta.name(x).into(),
                            d: theta.name(y).into(),
                        },
                    ));
                }
            }
        }
    }
    Ok(ConditionReport::pass(Condition::R3))
}

/// Whether the Γ-edge `u v` (u in T_c, v in T_d) lies in a square with its
/// other two corners in `tc` and `td`.
fn edge_in_hull_square(theta: &ThetaGraph, u: Vertex, v: Vertex, tc: &[Vertex], td: &[Vertex]) -> bool {
    let g = theta.gamma();
    tc.iter().filter(|&&c| c != u && g.has_edge(c, v)).any(|&c| {
        td.iter().any(|&d| d != v && g.has_edge(u, d) && g.has_edge(c, d))
    })
}

fn r4_violation(theta: &ThetaGraph, cycle: &TwoComponentCycle) -> Result<Option<(Vertex, Vertex)>> {
    let tc = theta.hull(&cycle.c_vertices())?;
    let td = theta.hull(&cycle.d_vertices())?;
    Ok(cycle.edges().into_iter().find(|&(u, v)| !edge_in_hull_square(theta, u, v, &tc, &td)))
}

/// Every edge of every 2-component cycle lies in a 2-component square with
/// two corners in each hull.
pub fn check_r4(theta: &ThetaGraph, caps: &Caps) -> Result<ConditionReport> {
    require_forest(theta)?;
    let mut truncated = false;
    for (c, d) in component_pairs(theta) {
        let found = theta.enumerate_two_component_cycles(c, d, caps.cycle_max_len, caps.cycle_max_count);
        truncated |= found.truncated;
        for cycle in &found.cycles {
            if let Some((u, v)) = r4_violation(theta, cycle)? {
                return Ok(ConditionReport::fail(
                    Condition::R4,
                    Witness::UncoveredEdge {
                        cycle: cycle.names(theta),
                        edge: [theta.name(u).into(), theta.name(v).into()],
                    },
                ));
            }
        }
    }
    Ok(ConditionReport { truncated, ..ConditionReport::pass(Condition::R4) })
}

fn joined(theta: &ThetaGraph, xs: &[Vertex], ys: &[Vertex]) -> bool {
    xs.iter().all(|&x| ys.iter().all(|&y| theta.gamma().has_edge(x, y)))
}

/// Members of component `comp` Γ-adjacent to both `p` and `q`.
fn common_neighbors_in(theta: &ThetaGraph, comp: usize, p: Vertex, q: Vertex) -> Vec<Vertex> {
    theta
        .component(comp)
        .iter()
        .copied()
        .filter(|&a| theta.gamma().has_edge(a, p) && theta.gamma().has_edge(a, q))
        .collect()
}

pub fn check_r5(theta: &ThetaGraph) -> Result<ConditionReport> {
    require_forest(theta)?;
    if theta.component_count() < 3 {
        return Ok(ConditionReport::pass(Condition::R5));
    }
    for (c, d) in component_pairs(theta) {
        for square in theta.enumerate_two_component_squares(c, d) {
            let cs = square.c_vertices();
            let ds = square.d_vertices();
            let tc = theta.hull(&cs)?;
            let td = theta.hull(&ds)?;
            for a_comp in (0..theta.component_count()).filter(|&x| x != c && x != d) {
                let over_c = common_neighbors_in(theta, a_comp, cs[0], cs[1]);
                let over_d = common_neighbors_in(theta, a_comp, ds[0], ds[1]);
                for &a in &over_c {
                    for &a2 in &over_d {
                        let ta = theta.hull(&[a, a2])?;
                        for (x, y) in theta.lambda_edges_within(&ta) {
                            if !joined(theta, &[x, y], &tc) && !joined(theta, &[x, y], &td) {
                                return Ok(ConditionReport::fail(
                                    Condition::R5,
                                    Witness::R5Violation {
                                        square: square.names(theta),
                                        a: theta.name(a).into(),
                                        a_prime: theta.name(a2).into(),
                                        edge: [theta.name(x).into(), theta.name(y).into()],
                                    },
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(ConditionReport::pass(Condition::R5))
}

/// Passes when no triangle configuration exists: a Γ-square between Λ_c
/// and Λ_d whose c-corners are joined by a Λ_aΛ_c-path and whose d-corners
/// are joined by a Λ_aΛ_d-path, for a third component Λ_a.
pub fn check_triangle_config(theta: &ThetaGraph) -> Result<ConditionReport> {
    require_forest(theta)?;
    if theta.component_count() < 3 {
        return Ok(ConditionReport::pass(Condition::TriangleConfig));
    }
    for (c, d) in component_pairs(theta) {
        let squares = theta.enumerate_two_component_squares(c, d);
        for a in (0..theta.component_count()).filter(|&x| x != c && x != d) {
            for square in &squares {
                let cs = square.c_vertices();
                let ds = square.d_vertices();
                if theta.two_component_reachable(c, a, cs[0]).contains(&cs[1])
                    && theta.two_component_reachable(d, a, ds[0]).contains(&ds[1])
                {
                    return Ok(ConditionReport::fail(
                        Condition::TriangleConfig,
                        Witness::TriangleConfiguration {
                            components: [a, c, d],
                            square: square.names(theta),
                            c_path: [theta.name(cs[0]).into(), theta.name(cs[1]).into()],
                            d_path: [theta.name(ds[0]).into(), theta.name(ds[1]).into()],
                        },
                    ));
                }
            }
        }
    }
    Ok(ConditionReport::pass(Condition::TriangleConfig))
}

/// Every vertex that is not a cone vertex of Γ lies on a Λ-edge.
pub fn check_f1(theta: &ThetaGraph) -> ConditionReport {
    let cones: BTreeSet<Vertex> = theta.gamma().cone_vertices().into_iter().collect();
    for v in 0..theta.gamma().vertex_count() {
        if theta.component_of(v).is_none() && !cones.contains(&v) {
            return ConditionReport::fail(Condition::F1, Witness::UncoveredVertex { vertex: theta.name(v).into() });
        }
    }
    ConditionReport::pass(Condition::F1)
}

/// Every pair of vertices in distinct components is joined by an alternating path.
pub fn check_f2(theta: &ThetaGraph) -> ConditionReport {
    for (c, d) in component_pairs(theta) {
        for &s in theta.component(c) {
            let reach = theta.two_component_reachable(c, d, s);
            if let Some(&t) = theta.component(d).iter().find(|t| !reach.contains(t)) {
                return ConditionReport::fail(
                    Condition::F2,
                    Witness::Unreachable { s: theta.name(s).into(), t: theta.name(t).into() },
                );
            }
        }
    }
    ConditionReport::pass(Condition::F2)
}

/// Re-derive a failure witness from Θ directly: true iff the witness
/// genuinely exhibits a violation of its condition.
pub fn revalidate(theta: &ThetaGraph, report: &ConditionReport) -> Result<bool> {
    let Some(witness) = &report.witness else {
        return Ok(report.passed);
    };
    let v = |name: &str| theta.vertex(name);
    let vs = |list: &[String]| list.iter().map(|n| theta.vertex(n)).collect::<Result<Vec<_>>>();
    let g = theta.gamma();
    let is_square = |sq: &[Vertex]| sq.len() == 4 && (0..4).all(|i| g.has_edge(sq[i], sq[(i + 1) % 4]));
    Ok(match (report.condition, witness) {
        (Condition::R1, Witness::LambdaCycle { cycle }) => {
            let cyc = vs(cycle)?;
            let distinct: BTreeSet<_> = cyc.iter().collect();
            cyc.len() >= 3
                && distinct.len() == cyc.len()
                && (0..cyc.len()).all(|i| theta.lambda().has_edge(cyc[i], cyc[(i + 1) % cyc.len()]))
        }
        (Condition::R2, Witness::SameComponentEdge { a, b }) => {
            let (a, b) = (v(a)?, v(b)?);
            g.has_edge(a, b) && theta.component_of(a).is_some() && theta.component_of(a) == theta.component_of(b)
        }
        (Condition::R3, Witness::MissingJoin { square, c, d }) => {
            let sq = vs(square)?;
            let (x, y) = (v(c)?, v(d)?);
            is_square(&sq)
                && theta.hull(&[sq[0], sq[2]])?.contains(&x)
                && theta.hull(&[sq[1], sq[3]])?.contains(&y)
                && !g.has_edge(x, y)
        }
        (Condition::R4, Witness::UncoveredEdge { cycle, edge }) => {
            let cyc = vs(cycle)?;
            let (Some(c), Some(d)) = (theta.component_of(cyc[0]), theta.component_of(cyc[1])) else {
                return Ok(false);
            };
            let alternating = cyc.len() % 2 == 0
                && cyc.len() >= 4
                && cyc.iter().enumerate().all(|(i, &x)| theta.component_of(x) == Some(if i % 2 == 0 { c } else { d }))
                && (0..cyc.len()).all(|i| g.has_edge(cyc[i], cyc[(i + 1) % cyc.len()]));
            let cycle = TwoComponentCycle { c_component: c, d_component: d, vertices: cyc };
            let (u, w) = (v(&edge[0])?, v(&edge[1])?);
            let tc = theta.hull(&cycle.c_vertices())?;
            let td = theta.hull(&cycle.d_vertices())?;
            alternating && cycle.edges().contains(&(u, w)) && !edge_in_hull_square(theta, u, w, &tc, &td)
        }
        (Condition::R5, Witness::R5Violation { square, a, a_prime, edge }) => {
            let sq = vs(square)?;
            let (a, a2) = (v(a)?, v(a_prime)?);
            let (x, y) = (v(&edge[0])?, v(&edge[1])?);
            let tc = theta.hull(&[sq[0], sq[2]])?;
            let td = theta.hull(&[sq[1], sq[3]])?;
            is_square(&sq)
                && g.has_edge(a, sq[0])
                && g.has_edge(a, sq[2])
                && g.has_edge(a2, sq[1])
                && g.has_edge(a2, sq[3])
                && theta.hull(&[a, a2])?.contains(&x)
                && theta.hull(&[a, a2])?.contains(&y)
                && theta.lambda().has_edge(x, y)
                && !joined(theta, &[x, y], &tc)
                && !joined(theta, &[x, y], &td)
        }
        (Condition::TriangleConfig, Witness::TriangleConfiguration { components: [a, c, d], square, c_path, d_path }) => {
            let sq = vs(square)?;
            let (c1, c2) = (v(&c_path[0])?, v(&c_path[1])?);
            let (d1, d2) = (v(&d_path[0])?, v(&d_path[1])?);
            let distinct = a != c && a != d && c != d;
            distinct
                && is_square(&sq)
                && [c1, c2] == [sq[0], sq[2]]
                && [d1, d2] == [sq[1], sq[3]]
                && theta.component_of(c1) == Some(*c)
                && theta.component_of(d1) == Some(*d)
                && theta.two_component_reachable(*c, *a, c1).contains(&c2)
                && theta.two_component_reachable(*d, *a, d1).contains(&d2)
        }
        (Condition::F1, Witness::UncoveredVertex { vertex }) => {
            let x = v(vertex)?;
            theta.component_of(x).is_none() && g.degree(x) + 1 != g.vertex_count()
        }
        (Condition::F2, Witness::Unreachable { s, t }) => {
            let (s, t) = (v(s)?, v(t)?);
            match (theta.component_of(s), theta.component_of(t)) {
                (Some(cs), Some(ct)) if cs != ct => !theta.exists_two_component_path(cs, ct, s, t)?,
                _ => false,
            }
        }
        _ => false,
    })
}
