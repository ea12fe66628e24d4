//! Words in right-angled Artin and Coxeter groups.
//!
//! Reduction appends letters one at a time: a new letter cancels against the
//! last occurrence of its inverse when every letter in between commutes with
//! it. The result is geodesic; the normal form is then the shortlex-least
//! rearrangement under commutations, read off the dependency order of the
//! letters.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::SimplicialGraph;

pub const MAX_WORD_LEN: usize = 1_000_000;

/// Ordered by generator index, then positive before inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub const fn new(generator: usize) -> Self {
        Letter { generator, inverse: false }
    }

    pub const fn inv(generator: usize) -> Self {
        Letter { generator, inverse: true }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Semantics {
    /// Γ-edges commute; generators have infinite order.
    Artin,
    /// Γ-edges commute; generators are involutions.
    Coxeter,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightAngledGroup {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
    commute: Vec<Vec<bool>>,
    semantics: Semantics,
}

impl RightAngledGroup {
    pub fn new(graph: &SimplicialGraph, semantics: Semantics) -> Self {
        let n = graph.vertex_count();
        let commute = (0..n).map(|a| (0..n).map(|b| graph.has_edge(a, b)).collect()).collect();
        Self::from_parts(graph.names().to_vec(), commute, semantics)
    }

    /// Generators named by `names` (in index order); `commute` is symmetric
    /// with a false diagonal.
    pub fn from_parts(names: Vec<String>, commute: Vec<Vec<bool>>, semantics: Semantics) -> Self {
        let index = names.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        RightAngledGroup { names, index, commute, semantics }
    }

    pub fn shared(self) -> Arc<Self> {
        Arc::new(self)
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn semantics(&self) -> Semantics {
        self.semantics
    }

    pub fn generators_commute(&self, a: usize, b: usize) -> bool {
        self.commute[a][b]
    }

    /// Letters of the alphabet in letter order.
    pub fn alphabet(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for g in 0..self.generator_count() {
            out.push(Letter::new(g));
            if self.semantics == Semantics::Artin {
                out.push(Letter::inv(g));
            }
        }
        out
    }

    pub fn inverse_letter(&self, x: Letter) -> Letter {
        match self.semantics {
            Semantics::Artin => Letter { generator: x.generator, inverse: !x.inverse },
            Semantics::Coxeter => x,
        }
    }

    pub fn inverse(&self, w: &[Letter]) -> Vec<Letter> {
        w.iter().rev().map(|&x| self.inverse_letter(x)).collect()
    }

    /// Append `x` to a geodesic word, keeping it geodesic.
    pub fn append_reduced(&self, w: &mut Vec<Letter>, x: Letter) {
        let target = self.inverse_letter(x);
        for i in (0..w.len()).rev() {
            let y = w[i];
            if y == target {
                w.remove(i);
                return;
            }
            if y.generator == x.generator || !self.commute[y.generator][x.generator] {
                break;
            }
        }
        w.push(x);
    }

    /// A geodesic word for the same element (not yet canonical).
    pub fn geodesic(&self, w: &[Letter]) -> Vec<Letter> {
        let mut out = Vec::with_capacity(w.len());
        for &x in w {
            self.append_reduced(&mut out, x);
        }
        out
    }

    /// Shortlex-least rearrangement of a geodesic word under commutations.
    pub fn shortlex(&self, w: &[Letter]) -> Vec<Letter> {
        let n = w.len();
        if n < 2 {
            return w.to_vec();
        }
        if n <= 64 {
            return self.shortlex_small(w);
        }
        self.shortlex_dag(w)
    }

    /// Kahn's algorithm over the precedence DAG, least ready letter first.
    fn shortlex_dag(&self, w: &[Letter]) -> Vec<Letter> {
        let n = w.len();
        let mut last: Vec<Option<usize>> = vec![None; self.generator_count()];
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for (j, x) in w.iter().enumerate() {
            for (g, slot) in last.iter().enumerate() {
                if let Some(i) = *slot {
                    if g == x.generator || !self.commute[g][x.generator] {
                        succ[i].push(j);
                        indegree[j] += 1;
                    }
                }
            }
            last[x.generator] = Some(j);
        }
        let mut ready: BinaryHeap<Reverse<(Letter, usize)>> =
            (0..n).filter(|&j| indegree[j] == 0).map(|j| Reverse((w[j], j))).collect();
        let mut out = Vec::with_capacity(n);
        while let Some(Reverse((x, i))) = ready.pop() {
            out.push(x);
            for &j in &succ[i] {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    ready.push(Reverse((w[j], j)));
                }
            }
        }
        out
    }

    /// Same order as `shortlex`, for words short enough to track as bitmasks.
    /// `blockers[j]` holds the earlier letters that must precede letter j.
    fn shortlex_small(&self, w: &[Letter]) -> Vec<Letter> {
        let n = w.len();
        let mut blockers = [0u64; 64];
        for j in 0..n {
            for i in 0..j {
                let (a, b) = (w[i].generator, w[j].generator);
                if a == b || !self.commute[a][b] {
                    blockers[j] |= 1 << i;
                }
            }
        }
        let mut pending: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
        let mut out = Vec::with_capacity(n);
        while pending != 0 {
            let mut best: Option<usize> = None;
            let mut rest = pending;
            while rest != 0 {
                let j = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if blockers[j] & pending == 0 && best.is_none_or(|b| w[j] < w[b]) {
                    best = Some(j);
                }
            }
            let j = best.expect("the precedence relation is acyclic");
            pending &= !(1 << j);
            out.push(w[j]);
        }
        out
    }

    /// Canonical geodesic: equal elements have identical normal forms.
    pub fn normal_form(&self, w: &[Letter]) -> Vec<Letter> {
        self.shortlex(&self.geodesic(w))
    }

    pub fn is_identity(&self, w: &[Letter]) -> bool {
        self.geodesic(w).is_empty()
    }

    pub fn word_length(&self, w: &[Letter]) -> usize {
        self.geodesic(w).len()
    }

    pub fn equal(&self, u: &[Letter], v: &[Letter]) -> bool {
        let mut w = u.to_vec();
        w.extend(self.inverse(v));
        self.is_identity(&w)
    }

    pub fn letters_commute(&self, u: &[Letter], v: &[Letter]) -> bool {
        let uv: Vec<Letter> = u.iter().chain(v).copied().collect();
        let vu: Vec<Letter> = v.iter().chain(u).copied().collect();
        self.equal(&uv, &vu)
    }

    /// Parse `a b^-1 c`. Inverse letters are accepted under Coxeter
    /// semantics and normalized to the generator.
    pub fn parse(&self, text: &str) -> Result<Vec<Letter>> {
        let mut out = Vec::new();
        for token in text.split_whitespace() {
            let (name, inverse) = match token.strip_suffix("^-1") {
                Some(base) => (base, true),
                None => (token, false),
            };
            let g = *self.index.get(name).ok_or_else(|| Error::UnknownVertex(name.to_string()))?;
            out.push(Letter { generator: g, inverse: inverse && self.semantics == Semantics::Artin });
            if out.len() > MAX_WORD_LEN {
                return Err(Error::WordTooLong(MAX_WORD_LEN));
            }
        }
        Ok(out)
    }

    pub fn format(&self, w: &[Letter]) -> String {
        let parts: Vec<String> = w
            .iter()
            .map(|x| {
                if x.inverse {
                    format!("{}^-1", self.names[x.generator])
                } else {
                    self.names[x.generator].clone()
                }
            })
            .collect();
        parts.join(" ")
    }
}

/// A word together with the group it is read in.
#[derive(Clone, Debug)]
pub struct GroupWord {
    group: Arc<RightAngledGroup>,
    letters: Vec<Letter>,
}

impl GroupWord {
    pub fn new(group: Arc<RightAngledGroup>, letters: Vec<Letter>) -> Result<Self> {
        if letters.len() > MAX_WORD_LEN {
            return Err(Error::WordTooLong(MAX_WORD_LEN));
        }
        let n = group.generator_count();
        let mut letters = letters;
        for x in &mut letters {
            if x.generator >= n {
                return Err(Error::UnknownVertex(format!("#{}", x.generator)));
            }
            if group.semantics == Semantics::Coxeter {
                x.inverse = false;
            }
        }
        Ok(GroupWord { group, letters })
    }

    pub fn parse(group: Arc<RightAngledGroup>, text: &str) -> Result<Self> {
        let letters = group.parse(text)?;
        Ok(GroupWord { group, letters })
    }

    pub fn identity(group: Arc<RightAngledGroup>) -> Self {
        GroupWord { group, letters: Vec::new() }
    }

    pub fn group(&self) -> &Arc<RightAngledGroup> {
        &self.group
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_ambient(&self, other: &GroupWord) -> Result<()> {
        if Arc::ptr_eq(&self.group, &other.group) || self.group == other.group {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn reduce(&self) -> GroupWord {
        GroupWord { group: self.group.clone(), letters: self.group.normal_form(&self.letters) }
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord { group: self.group.clone(), letters: self.group.inverse(&self.letters) }
    }

    pub fn concat(&self, other: &GroupWord) -> Result<GroupWord> {
        self.check_ambient(other)?;
        if self.len() + other.len() > MAX_WORD_LEN {
            return Err(Error::WordTooLong(MAX_WORD_LEN));
        }
        let letters = self.letters.iter().chain(&other.letters).copied().collect();
        Ok(GroupWord { group: self.group.clone(), letters })
    }

    pub fn is_identity(&self) -> bool {
        self.group.is_identity(&self.letters)
    }

    pub fn equals(&self, other: &GroupWord) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.group.equal(&self.letters, &other.letters))
    }

    pub fn commutes(&self, other: &GroupWord) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.group.letters_commute(&self.letters, &other.letters))
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.group.format(&self.letters))
    }
}

pub fn reduce(w: &GroupWord) -> GroupWord {
    w.reduce()
}

pub fn equals(u: &GroupWord, v: &GroupWord) -> Result<bool> {
    u.equals(v)
}

pub fn commutes(u: &GroupWord, v: &GroupWord) -> Result<bool> {
    u.commutes(v)
}
