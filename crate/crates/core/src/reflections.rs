//! Generalized reflections `w·s·w⁻¹` in a RAAG, trimming, and the RAAG
//! presentation of the subgroup they generate.
//!
//! Words over a list of reflections reuse [`Letter`], with `generator`
//! indexing the list.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::parse_edge;
use crate::graph::SimplicialGraph;
use crate::kernel::kernel_search;
use crate::lambda::CommutingGraph;
use crate::word::{Letter, RightAngledGroup, Semantics};

/// `w·s·w⁻¹` with `w` in normal form and `element` its normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reflection {
    pub w: Vec<Letter>,
    pub s: Letter,
    pub element: Vec<Letter>,
}

impl Reflection {
    /// `w: a b^-1 ; s: c`
    pub fn format(&self, group: &RightAngledGroup) -> String {
        format!("w: {} ; s: {}", group.format(&self.w), group.format(&[self.s]))
    }

    fn power(&self, group: &RightAngledGroup, inverse: bool) -> Vec<Letter> {
        if inverse {
            group.inverse(&self.element)
        } else {
            self.element.clone()
        }
    }
}

/// Strip trailing letters of `w` that commute with `s` or share its
/// generator; what remains makes `w·s·w⁻¹` reduced as written.
pub fn normalize_reflection(group: &RightAngledGroup, w: &[Letter], s: Letter) -> Reflection {
    let mut w = group.geodesic(w);
    'strip: loop {
        for i in (0..w.len()).rev() {
            let x = w[i];
            let last = w[i + 1..].iter().all(|y| y.generator != x.generator && group.generators_commute(x.generator, y.generator));
            if !last {
                continue;
            }
            if x.generator == s.generator || group.generators_commute(x.generator, s.generator) {
                w.remove(i);
                continue 'strip;
            }
        }
        break;
    }
    let w = group.normal_form(&w);
    let mut full = w.clone();
    full.push(s);
    full.extend(group.inverse(&w));
    let element = group.normal_form(&full);
    debug_assert_eq!(element.len(), 2 * w.len() + 1);
    Reflection { w, s, element }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TrimViolation {
    Duplicate { first: usize, second: usize },
    InversePair { first: usize, second: usize },
    /// `w·s^±1` of member `r` is a prefix of the conjugator of `r_prime`.
    Prefix { r: usize, r_prime: usize, inverse: bool },
}

#[derive(Clone, Debug)]
pub struct ReflectionSet {
    group: Arc<RightAngledGroup>,
    inputs: Vec<Reflection>,
    members: Vec<Reflection>,
    /// Per member: a word over the inputs evaluating to it.
    provenance: Vec<Vec<Letter>>,
    /// Per input: a word over the members evaluating to it.
    recovery: Vec<Vec<Letter>>,
}

fn free_reduce(word: Vec<Letter>) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(word.len());
    for x in word {
        if out.last().is_some_and(|y| y.generator == x.generator && y.inverse != x.inverse) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

fn free_inverse(word: &[Letter]) -> Vec<Letter> {
    word.iter().rev().map(|x| Letter { generator: x.generator, inverse: !x.inverse }).collect()
}

/// Some reduced expression of `v` begins with a reduced expression of `u`:
/// |u⁻¹·v| = |v| − |u|.
pub fn is_prefix(group: &RightAngledGroup, u: &[Letter], v: &[Letter]) -> bool {
    let (u_len, v_len) = (group.word_length(u), group.word_length(v));
    if u_len > v_len {
        return false;
    }
    let mut w = group.inverse(u);
    w.extend_from_slice(v);
    group.word_length(&w) == v_len - u_len
}

/// Evaluate a word over `list` in the ambient group.
pub fn evaluate(group: &RightAngledGroup, list: &[Reflection], word: &[Letter]) -> Vec<Letter> {
    let flat: Vec<Letter> = word.iter().flat_map(|x| list[x.generator].power(group, x.inverse)).collect();
    group.normal_form(&flat)
}

impl ReflectionSet {
    /// Normalize each `(w, s)`; inputs become the initial members.
    pub fn new(group: Arc<RightAngledGroup>, reflections: &[(Vec<Letter>, Letter)]) -> Self {
        assert_eq!(group.semantics(), Semantics::Artin, "reflections live in a RAAG");
        let inputs: Vec<Reflection> =
            reflections.iter().map(|(w, s)| normalize_reflection(&group, w, *s)).collect();
        let identity: Vec<Vec<Letter>> = (0..inputs.len()).map(|i| vec![Letter::new(i)]).collect();
        ReflectionSet { group, members: inputs.clone(), inputs, provenance: identity.clone(), recovery: identity }
    }

    pub fn group(&self) -> &Arc<RightAngledGroup> {
        &self.group
    }

    pub fn inputs(&self) -> &[Reflection] {
        &self.inputs
    }

    pub fn members(&self) -> &[Reflection] {
        &self.members
    }

    pub fn provenance(&self) -> &[Vec<Letter>] {
        &self.provenance
    }

    pub fn recovery(&self) -> &[Vec<Letter>] {
        &self.recovery
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Provenance words evaluate to the members and recovery words to the inputs.
    pub fn replay(&self) -> bool {
        let g = &self.group;
        let forward = self.members.iter().zip(&self.provenance).all(|(m, p)| evaluate(g, &self.inputs, p) == m.element);
        let back = self.inputs.iter().zip(&self.recovery).all(|(r, p)| evaluate(g, &self.members, p) == r.element);
        forward && back
    }

    /// The lexicographically least violation, if any.
    pub fn trim_violation(&self) -> Option<TrimViolation> {
        let g = &self.group;
        let n = self.members.len();
        for i in 0..n {
            for j in i + 1..n {
                if self.members[i].element == self.members[j].element {
                    return Some(TrimViolation::Duplicate { first: i, second: j });
                }
                if g.inverse(&self.members[i].element) == self.members[j].element {
                    return Some(TrimViolation::InversePair { first: i, second: j });
                }
            }
        }
        for i in 0..n {
            for j in (0..n).filter(|&j| j != i) {
                for inverse in [false, true] {
                    let r = &self.members[i];
                    let mut u = r.w.clone();
                    u.push(if inverse { g.inverse_letter(r.s) } else { r.s });
                    if is_prefix(g, &u, &self.members[j].w) {
                        return Some(TrimViolation::Prefix { r: i, r_prime: j, inverse });
                    }
                }
            }
        }
        None
    }

    pub fn is_trimmed(&self) -> bool {
        self.trim_violation().is_none()
    }

    /// Replace member `j` in recovery words: `r_j ↦ replacement` (and
    /// inverses accordingly).
    fn substitute(&mut self, j: usize, replacement: &[Letter]) {
        for word in &mut self.recovery {
            let expanded: Vec<Letter> = word
                .iter()
                .flat_map(|x| {
                    if x.generator != j {
                        vec![*x]
                    } else if x.inverse {
                        free_inverse(replacement)
                    } else {
                        replacement.to_vec()
                    }
                })
                .collect();
            *word = free_reduce(expanded);
        }
    }

    fn remove_member(&mut self, j: usize, replacement: Letter) {
        self.substitute(j, &[replacement]);
        self.members.remove(j);
        self.provenance.remove(j);
        for word in &mut self.recovery {
            for x in word.iter_mut() {
                if x.generator > j {
                    x.generator -= 1;
                }
            }
        }
    }

    /// Make the set trimmed while generating the same subgroup.
    pub fn trim(&self) -> Result<ReflectionSet> {
        let g = self.group.clone();
        let mut t = self.clone();
        let budget = t.members.iter().map(|m| m.w.len()).sum::<usize>() + 2 * t.members.len() + 1;
        for _ in 0..=budget {
            let Some(violation) = t.trim_violation() else {
                return Ok(t);
            };
            match violation {
                TrimViolation::Duplicate { first, second } => t.remove_member(second, Letter::new(first)),
                TrimViolation::InversePair { first, second } => t.remove_member(second, Letter::inv(first)),
                TrimViolation::Prefix { r, r_prime, inverse } => {
                    // with u = w·s^ε a prefix of w', r^-ε·r'·r^ε has conjugator r^-ε·w' = w·(u⁻¹w')
                    let conj = t.members[r].power(&g, !inverse);
                    let mut w_new = conj.clone();
                    w_new.extend_from_slice(&t.members[r_prime].w);
                    let replaced = normalize_reflection(&g, &w_new, t.members[r_prime].s);
                    debug_assert!(replaced.w.len() < t.members[r_prime].w.len());
                    let mut check = conj;
                    check.extend_from_slice(&t.members[r_prime].element);
                    check.extend(t.members[r].power(&g, inverse));
                    debug_assert_eq!(g.normal_form(&check), replaced.element);
                    // step = r^ε, so the new member is step⁻¹·r'·step
                    let step = Letter { generator: r, inverse };
                    let step_inv = Letter { generator: r, inverse: !inverse };
                    let (before, after) = if inverse {
                        (t.provenance[r].clone(), free_inverse(&t.provenance[r]))
                    } else {
                        (free_inverse(&t.provenance[r]), t.provenance[r].clone())
                    };
                    let p: Vec<Letter> = before.into_iter().chain(t.provenance[r_prime].iter().copied()).chain(after).collect();
                    t.provenance[r_prime] = free_reduce(p);
                    t.substitute(r_prime, &[step, Letter::new(r_prime), step_inv]);
                    t.members[r_prime] = replaced;
                }
            }
        }
        Err(Error::TrimDiverged(budget))
    }
}

#[derive(Clone, Debug)]
pub struct ReflectionPresentation {
    pub delta: CommutingGraph,
    pub trimmed: ReflectionSet,
    pub verified_to_depth: usize,
    pub exhausted: bool,
}

/// Trim, build Δ' from commuting members, and search ker(A_Δ' → G).
pub fn reflection_raag_presentation(set: &ReflectionSet, depth: usize, ball_cap: usize) -> Result<ReflectionPresentation> {
    let trimmed = set.trim()?;
    let g = trimmed.group.clone();
    let n = trimmed.len();
    let labels: Vec<String> = (0..n).map(|i| format!("r{i}")).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if g.letters_commute(&trimmed.members[i].element, &trimmed.members[j].element) {
                edges.push((i, j));
            }
        }
    }
    let delta = CommutingGraph::new(labels, &edges);
    let assignment: Vec<Vec<Letter>> = trimmed.members.iter().map(|m| m.element.clone()).collect();
    let found = kernel_search(&delta, &assignment, &g, depth, ball_cap)?;
    if let Some(k) = found.witness {
        return Err(Error::ReflectionKernelWitness(delta.artin_group().format(&k)));
    }
    Ok(ReflectionPresentation { delta, trimmed, verified_to_depth: found.searched_depth, exhausted: found.exhausted })
}

/// Parsed reflections file: the ambient RAAG and the `(w, s)` pairs.
pub struct ReflectionsInput {
    pub group: Arc<RightAngledGroup>,
    pub reflections: Vec<(Vec<Letter>, Letter)>,
}

/// ```text
/// vertices: a b c
/// gamma: a-b
/// w: a b^-1 ; s: c
/// ```
pub fn parse_reflections(text: &str) -> Result<ReflectionsInput> {
    let parse_error = |line: usize, message: String| Error::Parse { line, message };
    let mut vertices: Vec<String> = Vec::new();
    let mut declared = BTreeSet::new();
    let mut edges = Vec::new();
    let mut raw = Vec::new();
    for (i, line_text) in text.lines().enumerate() {
        let line = i + 1;
        let content = line_text.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("vertices:") {
            for v in rest.split_whitespace() {
                if !declared.insert(v.to_string()) {
                    return Err(parse_error(line, format!("vertex {v} declared twice")));
                }
                vertices.push(v.to_string());
            }
        } else if let Some(rest) = content.strip_prefix("gamma:") {
            for tok in rest.split_whitespace() {
                edges.push(parse_edge(tok, line)?);
            }
        } else if let Some(rest) = content.strip_prefix("w:") {
            let (w, s) = rest
                .split_once(';')
                .ok_or_else(|| parse_error(line, "expected `w: ... ; s: x`".into()))?;
            let s = s
                .trim()
                .strip_prefix("s:")
                .ok_or_else(|| parse_error(line, "expected `s:` after `;`".into()))?;
            raw.push((line, w.trim().to_string(), s.trim().to_string()));
        } else {
            return Err(parse_error(line, format!("unrecognized line {content:?}")));
        }
    }
    if vertices.is_empty() {
        return Err(parse_error(0, "missing `vertices:` directive".into()));
    }
    let graph = SimplicialGraph::new(&vertices, edges.iter().map(|(a, b)| (a.as_str(), b.as_str())))?;
    let group = Arc::new(RightAngledGroup::new(&graph, Semantics::Artin));
    let mut reflections = Vec::new();
    for (line, w, s) in raw {
        let w = group.parse(&w).map_err(|e| parse_error(line, e.to_string()))?;
        let s = group.parse(&s).map_err(|e| parse_error(line, e.to_string()))?;
        let [s] = s[..] else {
            return Err(parse_error(line, "`s:` must be a single letter".into()));
        };
        reflections.push((w, s));
    }
    Ok(ReflectionsInput { group, reflections })
}
