//! Verdicts on whether the Λ-edges form a RAAG system, and on finite index.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::caps::Caps;
use crate::completion::{build_completion, index_report};
use crate::conditions::{check_all, Condition, ConditionReport};
use crate::error::{Error, Result};
use crate::kernel::{kernel_search, KernelSearch};
use crate::lambda::{commuting_graph, lambda_letter_image, LambdaWord};
use crate::theta::ThetaGraph;
use crate::word::{Letter, RightAngledGroup, Semantics};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

/// A nontrivial element of A_Δ whose image in W_Γ is trivial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelWitness {
    /// Λ-edge letters, e.g. `1-3 2-4^-1`.
    pub word: String,
    /// The traversed ordered pairs, e.g. `(13)(42)`.
    pub pairs: String,
    pub length: usize,
    /// The expansion in W_Γ, which reduces to the identity.
    pub ambient_word: String,
    #[serde(skip)]
    pub letters: Vec<Letter>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub failed_condition: Option<ConditionReport>,
    pub kernel_witness: Option<KernelWitness>,
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub expected_index: u64,
    pub omega_index: u64,
    pub omega_vertices: usize,
    pub lambda_components: usize,
    pub cone_vertices: Vec<String>,
    /// Γ is a forest, so W_Γ is virtually free.
    pub virtually_free: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub answer: Answer,
    pub conditions: Vec<ConditionReport>,
    pub certificate: Option<Certificate>,
    pub index_report: Option<IndexReport>,
    pub kernel_search: Option<KernelSearch>,
    pub notes: Vec<String>,
}

impl Verdict {
    fn new(answer: Answer, conditions: Vec<ConditionReport>) -> Self {
        Verdict { answer, conditions, certificate: None, index_report: None, kernel_search: None, notes: Vec::new() }
    }

    fn first_failure(&self) -> Option<&ConditionReport> {
        self.conditions.iter().find(|r| !r.passed)
    }
}

const MANY_COMPONENTS_NOTE: &str = "no sufficient criterion is known for three or more lambda components; \
further necessary conditions beyond R5 and the triangle configuration are expected";

/// Search ker(A_Δ → W_Γ) for the Λ-edge assignment of Θ.
pub fn lambda_kernel_search(theta: &ThetaGraph, max_len: usize, ball_cap: usize) -> (KernelSearch, Option<KernelWitness>) {
    let delta = commuting_graph(theta);
    let ambient = RightAngledGroup::new(theta.gamma(), Semantics::Coxeter);
    let assignment: Vec<Vec<Letter>> =
        (0..theta.lambda_edges().len()).map(|i| lambda_letter_image(theta, Letter::new(i)).to_vec()).collect();
    let found = kernel_search(&delta, &assignment, &ambient, max_len, ball_cap)
        .expect("a Λ-edge s·t with s ≠ t is never trivial in W_Γ");
    let witness = found.witness.as_ref().map(|k| {
        let word = LambdaWord { letters: k.clone() };
        let expanded = word.expand(theta);
        assert!(!delta.artin_group().is_identity(k), "kernel witness must be nontrivial in A_Δ");
        assert!(ambient.is_identity(&expanded), "kernel witness must be trivial in W_Γ");
        KernelWitness {
            word: word.format(theta),
            pairs: word.format_pairs(theta),
            length: k.len(),
            ambient_word: ambient.format(&expanded),
            letters: k.clone(),
        }
    });
    (found, witness)
}

fn attach_kernel_search(verdict: &mut Verdict, theta: &ThetaGraph, caps: &Caps) {
    let (search, witness) = lambda_kernel_search(theta, caps.kernel_depth, caps.kernel_ball_cap);
    if !search.exhausted {
        verdict.notes.push(format!("kernel search stopped at length {} by the ball cap", search.searched_depth));
    }
    if let Some(w) = witness {
        if verdict.answer != Answer::No {
            verdict.notes.push("kernel witness found; the lambda edges do not form a RAAG system".into());
            verdict.answer = Answer::No;
        }
        verdict.certificate.get_or_insert_with(Certificate::default).kernel_witness = Some(w);
    }
    verdict.kernel_search = Some(search);
}

pub fn decide_raag_system(theta: &ThetaGraph, caps: &Caps) -> Verdict {
    let k = theta.component_count();
    if k <= 2 {
        let conditions = check_all(theta, &[Condition::R1, Condition::R2, Condition::R3, Condition::R4], caps);
        let mut verdict = Verdict::new(Answer::Yes, conditions);
        if let Some(fail) = verdict.first_failure().cloned() {
            verdict.answer = Answer::No;
            verdict.certificate = Some(Certificate { failed_condition: Some(fail), ..Certificate::default() });
            attach_kernel_search(&mut verdict, theta, caps);
        } else if verdict.conditions.iter().any(|r| r.truncated) {
            verdict.answer = Answer::Unknown;
            verdict.notes.push("a cycle enumeration cap was reached; raise cycle_max_len or cycle_max_count".into());
        }
        return verdict;
    }
    let all = [Condition::R1, Condition::R2, Condition::R3, Condition::R4, Condition::R5, Condition::TriangleConfig];
    let conditions = check_all(theta, &all, caps);
    let triangle_free = theta.gamma().is_triangle_free();
    let decisive = conditions
        .iter()
        .find(|r| !r.passed && (r.condition != Condition::TriangleConfig || triangle_free))
        .cloned();
    let mut verdict = Verdict::new(Answer::Unknown, conditions);
    if !triangle_free && verdict.conditions.iter().any(|r| r.condition == Condition::TriangleConfig && !r.passed) {
        verdict.notes.push("triangle configuration present but gamma has a triangle, so it is not decisive".into());
    }
    match decisive {
        Some(fail) => {
            verdict.answer = Answer::No;
            verdict.certificate = Some(Certificate { failed_condition: Some(fail), ..Certificate::default() });
        }
        None => verdict.notes.push(MANY_COMPONENTS_NOTE.into()),
    }
    attach_kernel_search(&mut verdict, theta, caps);
    verdict
}

pub fn decide_finite_index_raag(theta: &ThetaGraph, caps: &Caps) -> Result<Verdict> {
    let gamma = theta.gamma();
    if !gamma.is_triangle_free() {
        return Err(Error::NotTriangleFree);
    }
    let k = theta.component_count();
    let all = [Condition::R1, Condition::R2, Condition::R3, Condition::R4, Condition::F1, Condition::F2];
    let conditions = check_all(theta, &all, caps);
    let mut verdict = Verdict::new(Answer::Yes, conditions);
    if k > 2 {
        verdict.answer = Answer::No;
        verdict.certificate = Some(Certificate {
            reason: Some(format!(
                "lambda has {k} components; a finite-index RAAG system over a triangle-free graph has at most two"
            )),
            ..Certificate::default()
        });
        return Ok(verdict);
    }
    if let Some(fail) = verdict.first_failure().cloned() {
        verdict.answer = Answer::No;
        verdict.certificate = Some(Certificate { failed_condition: Some(fail), ..Certificate::default() });
        return Ok(verdict);
    }
    if verdict.conditions.iter().any(|r| r.truncated) {
        verdict.answer = Answer::Unknown;
        verdict.notes.push("a cycle enumeration cap was reached; raise cycle_max_len or cycle_max_count".into());
        return Ok(verdict);
    }
    let report = finite_index_report(theta, caps)?;
    if report.omega_index != 4 && !report.virtually_free {
        verdict.notes.push(format!("index {} although W_Γ is not virtually free", report.omega_index));
    }
    verdict.index_report = Some(report);
    Ok(verdict)
}

/// Index predicted from the component and cone counts, checked against the
/// completion over Γ with its cone vertices removed.
fn finite_index_report(theta: &ThetaGraph, caps: &Caps) -> Result<IndexReport> {
    let gamma = theta.gamma();
    let cones = gamma.cone_vertices();
    let cone_factor = 1u64 << cones.len();
    let expected_index = (1u64 << theta.component_count()) * cone_factor;
    let reduced = theta.without_gamma_vertices(&cones)?;
    let complex = build_completion(&reduced, caps.cell_cap)?;
    let omega = index_report(&complex, reduced.gamma())?;
    let omega_index = omega.index.map_or(0, |i| i * cone_factor);
    if omega_index != expected_index {
        return Err(Error::IndexMismatch { expected: expected_index, omega: omega_index });
    }
    Ok(IndexReport {
        expected_index,
        omega_index,
        omega_vertices: omega.vertex_count,
        lambda_components: theta.component_count(),
        cone_vertices: cones.iter().map(|&v| gamma.name(v).to_string()).collect(),
        virtually_free: gamma.is_forest(),
    })
}

/// The map to Z₂×Z₂ sending the vertices of one Λ-component to (1,0) and of
/// the other to (0,1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParityCheck {
    pub kills_lambda_edges: bool,
    pub image_order: u64,
}

/// Defined when Λ has two components covering every vertex.
pub fn bipartite_parity_check(theta: &ThetaGraph) -> Option<ParityCheck> {
    if theta.component_count() != 2 {
        return None;
    }
    let n = theta.gamma().vertex_count();
    let colour: Option<Vec<u8>> = (0..n).map(|v| theta.component_of(v).map(|c| 1u8 << c)).collect();
    let colour = colour?;
    let kills_lambda_edges = theta.lambda_edges().iter().all(|&(s, t)| colour[s] ^ colour[t] == 0);
    let mut span = vec![0u8];
    for &c in &colour {
        if !span.contains(&c) {
            let shifted: Vec<u8> = span.iter().map(|x| x ^ c).collect();
            span.extend(shifted);
        }
    }
    Some(ParityCheck { kills_lambda_edges, image_order: span.len() as u64 })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeletionReport {
    pub samples: usize,
    /// Sampled words with a shorter equal word over S.
    pub non_geodesic: usize,
    /// Radius of the S-ball used to find shorter words.
    pub ball_radius: usize,
    /// Non-geodesic words admitting no pair deletion, over `g0, g1, …`.
    pub counterexamples: Vec<String>,
}

/// Falsification harness for the deletion condition over `generators`.
///
/// Samples freely reduced words over S ∪ S⁻¹ of length at most
/// `max_word_len`. A word is non-geodesic over S when its element lies in
/// the S-ball of smaller radius; each such word must admit a pair deletion
/// giving the same element.
pub fn deletion_condition_test(
    group: &RightAngledGroup,
    generators: &[Vec<Letter>],
    samples: usize,
    max_word_len: usize,
    seed: u64,
) -> DeletionReport {
    const BALL_CAP: usize = 1_000_000;
    let alphabet: Vec<(Letter, Vec<Letter>)> = (0..generators.len())
        .flat_map(|i| [Letter::new(i), Letter::inv(i)])
        .map(|x| {
            let w = if x.inverse { group.inverse(&generators[x.generator]) } else { generators[x.generator].clone() };
            (x, w)
        })
        .collect();
    let mut distance: HashMap<Vec<Letter>, usize> = HashMap::from([(Vec::new(), 0)]);
    let mut frontier = vec![Vec::new()];
    let mut ball_radius = 0;
    while ball_radius + 1 < max_word_len && !frontier.is_empty() {
        let mut next = Vec::new();
        for e in &frontier {
            for (_, w) in &alphabet {
                let mut flat = e.clone();
                flat.extend_from_slice(w);
                let nf = group.normal_form(&flat);
                if !distance.contains_key(&nf) {
                    distance.insert(nf.clone(), ball_radius + 1);
                    next.push(nf);
                }
            }
        }
        if distance.len() > BALL_CAP {
            break;
        }
        ball_radius += 1;
        frontier = next;
    }
    let evaluate = |word: &[Letter]| -> Vec<Letter> {
        let flat: Vec<Letter> = word.iter().flat_map(|&x| alphabet[2 * x.generator + usize::from(x.inverse)].1.clone()).collect();
        group.normal_form(&flat)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = DeletionReport { samples, non_geodesic: 0, ball_radius, counterexamples: Vec::new() };
    if alphabet.is_empty() {
        return report;
    }
    for _ in 0..samples {
        let len = rng.gen_range(1..=max_word_len);
        let mut word: Vec<Letter> = Vec::with_capacity(len);
        while word.len() < len {
            let x = alphabet[rng.gen_range(0..alphabet.len())].0;
            if word.last().is_some_and(|y| y.generator == x.generator && y.inverse != x.inverse) {
                continue;
            }
            word.push(x);
        }
        let element = evaluate(&word);
        let shorter = distance.get(&element).is_some_and(|&d| d < len && d <= ball_radius);
        if !shorter {
            continue;
        }
        report.non_geodesic += 1;
        let deletable = (0..len).any(|i| {
            (i + 1..len).any(|j| {
                let rest: Vec<Letter> =
                    word.iter().enumerate().filter(|&(k, _)| k != i && k != j).map(|(_, &x)| x).collect();
                evaluate(&rest) == element
            })
        });
        if !deletable {
            let names: Vec<String> =
                word.iter().map(|x| format!("g{}{}", x.generator, if x.inverse { "^-1" } else { "" })).collect();
            report.counterexamples.push(names.join(" "));
        }
    }
    report
}
