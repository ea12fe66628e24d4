//! Shared oracles for the integration tests.
#![allow(dead_code)]

pub mod piling;

use visual_raag::caps::Caps;
use visual_raag::decision::{decide_finite_index_raag, decide_raag_system, Answer};
use visual_raag::theta::ThetaGraph;

/// Everything a verdict asserts, without vertex names.
#[derive(Debug, PartialEq, Eq)]
pub struct Signature {
    pub answer: Answer,
    pub passed: Vec<(String, bool)>,
    pub kernel_witness_len: Option<usize>,
    pub finite_index: Option<(Answer, Option<u64>)>,
}

pub fn signature(theta: &ThetaGraph, caps: &Caps) -> Signature {
    let v = decide_raag_system(theta, caps);
    let finite_index = decide_finite_index_raag(theta, caps)
        .ok()
        .map(|f| (f.answer, f.index_report.map(|r| r.omega_index)));
    Signature {
        answer: v.answer,
        passed: v.conditions.iter().map(|r| (r.condition.to_string(), r.passed)).collect(),
        kernel_witness_len: v.certificate.and_then(|c| c.kernel_witness).map(|k| k.length),
        finite_index,
    }
}

/// Names in reversed order, so the vertex order is reversed too.
pub fn reverse_names(theta: &ThetaGraph) -> ThetaGraph {
    let names: Vec<String> = theta.gamma().names().to_vec();
    theta
        .renamed(|s| {
            let i = names.iter().position(|n| n == s).expect("known vertex");
            format!("v{:03}", names.len() - i)
        })
        .expect("renaming keeps names distinct")
}

/// Flip every other Λ-edge.
pub fn alternate_flips(theta: &ThetaGraph) -> ThetaGraph {
    let flips: Vec<usize> = (0..theta.lambda_edges().len()).step_by(2).collect();
    theta.with_flipped(&flips)
}
