//! Named Θ instances used as fixtures.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::SimplicialGraph;
use crate::theta::{build_theta, ThetaGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// 2n-cycle c1 d1 … cn dn, plus x joined to every d_i and y joined to
    /// every c_i and to x. Λ = star(x; c_*) ∪ star(y; d_*).
    GammaN { n: usize },
    /// k copies of the Γ'_n block glued away from a0.
    DeltaNK { n: usize, k: usize },
    /// C6 on 1..6 with Λ = {1-3, 3-5} ∪ {2-4, 4-6}.
    Hexagon,
    /// Square c d c' d' with a over c, c' and a' over d, d'; Λ = {aa', cc', dd'}.
    R5Counterexample,
    /// The previous graph with a' also joined to c and c'.
    R5Satisfied,
    /// C4 a-b-c-d with Λ = {ac, bd}.
    C4Diagonals,
    /// Edgeless graph on 1..n with Λ the path 1-2-…-n.
    LambdaPathOnEdgeless { n: usize },
    /// Six isolated vertices with Λ = {12, 34, 56}.
    IsolatedMatching,
    /// Three components with a square between c and d and alternating
    /// paths through a (c-side length 4, d-side length 6); triangle-free.
    TriangleConfiguration,
}

pub const FAMILY_NAMES: &[&str] = &[
    "gamma_n",
    "delta_nk",
    "hexagon",
    "r5_counterexample",
    "r5_satisfied",
    "c4_diagonals",
    "lambda_path_on_edgeless",
    "isolated_matching",
    "triangle_configuration",
];

impl FamilySpec {
    /// Parse a family name and its positional integer parameters.
    pub fn from_name(name: &str, params: &[usize]) -> Result<Self> {
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::BadParams(format!("{name} takes {k} parameter(s), got {}", params.len())))
            }
        };
        let spec = match name {
            "gamma_n" => {
                want(1)?;
                FamilySpec::GammaN { n: params[0] }
            }
            "delta_nk" => {
                want(2)?;
                FamilySpec::DeltaNK { n: params[0], k: params[1] }
            }
            "lambda_path_on_edgeless" => {
                want(1)?;
                FamilySpec::LambdaPathOnEdgeless { n: params[0] }
            }
            "hexagon" => FamilySpec::Hexagon,
            "r5_counterexample" => FamilySpec::R5Counterexample,
            "r5_satisfied" => FamilySpec::R5Satisfied,
            "c4_diagonals" => FamilySpec::C4Diagonals,
            "isolated_matching" => FamilySpec::IsolatedMatching,
            "triangle_configuration" => FamilySpec::TriangleConfiguration,
            other => return Err(Error::BadParams(format!("unknown family {other}"))),
        };
        if !matches!(spec, FamilySpec::GammaN { .. } | FamilySpec::DeltaNK { .. } | FamilySpec::LambdaPathOnEdgeless { .. }) {
            want(0)?;
        }
        Ok(spec)
    }

    /// Every fixture used by the cross-module test suites.
    pub fn fixture_suite() -> Vec<FamilySpec> {
        let mut out: Vec<FamilySpec> = (3..=6).map(|n| FamilySpec::GammaN { n }).collect();
        for n in 3..=4 {
            for k in 1..=2 {
                out.push(FamilySpec::DeltaNK { n, k });
            }
        }
        out.extend([
            FamilySpec::Hexagon,
            FamilySpec::R5Counterexample,
            FamilySpec::R5Satisfied,
            FamilySpec::C4Diagonals,
            FamilySpec::LambdaPathOnEdgeless { n: 4 },
            FamilySpec::IsolatedMatching,
            FamilySpec::TriangleConfiguration,
        ]);
        out
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::GammaN { n } => write!(f, "gamma_n({n})"),
            FamilySpec::DeltaNK { n, k } => write!(f, "delta_nk({n},{k})"),
            FamilySpec::Hexagon => f.write_str("hexagon"),
            FamilySpec::R5Counterexample => f.write_str("r5_counterexample"),
            FamilySpec::R5Satisfied => f.write_str("r5_satisfied"),
            FamilySpec::C4Diagonals => f.write_str("c4_diagonals"),
            FamilySpec::LambdaPathOnEdgeless { n } => write!(f, "lambda_path_on_edgeless({n})"),
            FamilySpec::IsolatedMatching => f.write_str("isolated_matching"),
            FamilySpec::TriangleConfiguration => f.write_str("triangle_configuration"),
        }
    }
}

fn assemble(vertices: &[String], gamma: &[(String, String)], lambda: &[(String, String)]) -> Result<ThetaGraph> {
    let g = SimplicialGraph::new(vertices, gamma.iter().map(|(a, b)| (a.as_str(), b.as_str())))?;
    build_theta(g, lambda.iter().map(|(a, b)| (a.as_str(), b.as_str())))
}

fn pair(a: impl Into<String>, b: impl Into<String>) -> (String, String) {
    (a.into(), b.into())
}

fn strs(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

pub fn make_family(spec: &FamilySpec) -> Result<ThetaGraph> {
    match *spec {
        FamilySpec::GammaN { n } => {
            if n < 3 {
                return Err(Error::BadParams(format!("gamma_n needs n >= 3, got {n}")));
            }
            let c = |i: usize| format!("c{i}");
            let d = |i: usize| format!("d{i}");
            let mut vertices: Vec<String> = (1..=n).flat_map(|i| [c(i), d(i)]).collect();
            vertices.extend(strs(&["x", "y"]));
            let mut gamma = Vec::new();
            for i in 1..=n {
                gamma.push(pair(c(i), d(i)));
                gamma.push(pair(d(i), c(i % n + 1)));
                gamma.push(pair("x", d(i)));
                gamma.push(pair("y", c(i)));
            }
            gamma.push(pair("x", "y"));
            let mut lambda: Vec<(String, String)> = (1..=n).map(|i| pair("x", c(i))).collect();
            lambda.extend((1..=n).map(|i| pair("y", d(i))));
            assemble(&vertices, &gamma, &lambda)
        }
        FamilySpec::DeltaNK { n, k } => {
            if n < 3 || k < 1 {
                return Err(Error::BadParams(format!("delta_nk needs n >= 3 and k >= 1, got ({n},{k})")));
            }
            let a = |i: usize| format!("a{i}");
            let b = |i: usize| format!("b{i}");
            let a0 = |j: usize| format!("a0_{j}");
            let mut vertices: Vec<String> = (1..=n).flat_map(|i| [a(i), b(i)]).collect();
            vertices.extend((1..=k).map(a0));
            let mut gamma = Vec::new();
            for i in 1..=n {
                gamma.push(pair(a(1), b(i)));
                for j in 1..=k {
                    gamma.push(pair(a0(j), b(i)));
                }
            }
            for i in 2..=n {
                gamma.push(pair(a(i), b(i - 1)));
                gamma.push(pair(a(i), b(i)));
            }
            let mut lambda: Vec<(String, String)> = (2..=n).map(|i| pair(a(1), a(i))).collect();
            lambda.extend((1..=k).map(|j| pair(a(1), a0(j))));
            lambda.extend((1..n).map(|i| pair(b(i), b(i + 1))));
            assemble(&vertices, &gamma, &lambda)
        }
        FamilySpec::Hexagon => {
            let vertices: Vec<String> = (1..=6).map(|i| i.to_string()).collect();
            let gamma: Vec<(String, String)> = (1..=6).map(|i| pair(i.to_string(), (i % 6 + 1).to_string())).collect();
            let lambda = vec![pair("1", "3"), pair("3", "5"), pair("2", "4"), pair("4", "6")];
            assemble(&vertices, &gamma, &lambda)
        }
        FamilySpec::R5Counterexample | FamilySpec::R5Satisfied => {
            let vertices = strs(&["a", "a'", "c", "c'", "d", "d'"]);
            let mut gamma = vec![
                pair("c", "d"),
                pair("d", "c'"),
                pair("c'", "d'"),
                pair("d'", "c"),
                pair("a", "c"),
                pair("a", "c'"),
                pair("a'", "d"),
                pair("a'", "d'"),
            ];
            if *spec == FamilySpec::R5Satisfied {
                gamma.extend([pair("a'", "c"), pair("a'", "c'")]);
            }
            let lambda = vec![pair("a", "a'"), pair("c", "c'"), pair("d", "d'")];
            assemble(&vertices, &gamma, &lambda)
        }
        FamilySpec::C4Diagonals => {
            let vertices = strs(&["a", "b", "c", "d"]);
            let gamma = vec![pair("a", "b"), pair("b", "c"), pair("c", "d"), pair("d", "a")];
            assemble(&vertices, &gamma, &[pair("a", "c"), pair("b", "d")])
        }
        FamilySpec::LambdaPathOnEdgeless { n } => {
            if n < 2 {
                return Err(Error::BadParams(format!("lambda_path_on_edgeless needs n >= 2, got {n}")));
            }
            let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            let lambda: Vec<(String, String)> = (1..n).map(|i| pair(i.to_string(), (i + 1).to_string())).collect();
            assemble(&vertices, &[], &lambda)
        }
        FamilySpec::IsolatedMatching => {
            let vertices: Vec<String> = (1..=6).map(|i| i.to_string()).collect();
            assemble(&vertices, &[], &[pair("1", "2"), pair("3", "4"), pair("5", "6")])
        }
        FamilySpec::TriangleConfiguration => {
            let vertices =
                strs(&["c1", "c2", "c3", "d1", "d2", "d3", "d4", "p1", "p2", "q1", "q2", "q3"]);
            let gamma = vec![
                // c-side alternating path c1 p1 c2 p2 c3
                pair("c1", "p1"),
                pair("p1", "c2"),
                pair("c2", "p2"),
                pair("p2", "c3"),
                // d-side alternating path d1 q1 d2 q2 d3 q3 d4
                pair("d1", "q1"),
                pair("q1", "d2"),
                pair("d2", "q2"),
                pair("q2", "d3"),
                pair("d3", "q3"),
                pair("q3", "d4"),
                // square c1 d1 c3 d4
                pair("c1", "d1"),
                pair("d1", "c3"),
                pair("c3", "d4"),
                pair("d4", "c1"),
            ];
            let lambda = vec![
                pair("c1", "c2"),
                pair("c2", "c3"),
                pair("d1", "d2"),
                pair("d2", "d3"),
                pair("d3", "d4"),
                pair("p1", "p2"),
                pair("p2", "q1"),
                pair("q1", "q2"),
                pair("q2", "q3"),
            ];
            assemble(&vertices, &gamma, &lambda)
        }
    }
}

/// Theta file text for a family instance.
pub fn emit_family(spec: &FamilySpec) -> Result<String> {
    Ok(crate::format::emit_theta(&make_family(spec)?))
}
