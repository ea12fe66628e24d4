//! Search for nontrivial elements of ker(A_Δ → G).
//!
//! Elements of A_Δ are enumerated as normal forms in length order. A kernel
//! element `k` of length L splits as `u · u'⁻¹` with |u| = ⌈L/2⌉ and
//! |u'| = ⌊L/2⌋ and φ(u) = φ(u'), so it suffices to bucket the two half
//! balls by image. The result is the same as testing every normal form of
//! length 1, 2, … in shortlex order: the shortlex-least kernel element of
//! minimal length.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lambda::CommutingGraph;
use crate::word::{Letter, RightAngledGroup};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelSearch {
    /// Normal form in A_Δ of the first kernel element found.
    #[serde(skip)]
    pub witness: Option<Vec<Letter>>,
    /// Every word up to this length was examined.
    pub searched_depth: usize,
    /// False when the ball cap stopped the search before `max_len`.
    pub exhausted: bool,
}

/// Normal forms of one length together with their images.
struct Layer {
    words: Vec<Vec<Letter>>,
    images: Vec<Vec<Letter>>,
}

fn validate_assignment(delta: &CommutingGraph, assignment: &[Vec<Letter>], ambient: &RightAngledGroup) -> Result<()> {
    if assignment.len() != delta.vertex_count() {
        return Err(Error::AssignmentSize { expected: delta.vertex_count(), got: assignment.len() });
    }
    for (i, w) in assignment.iter().enumerate() {
        if ambient.is_identity(w) {
            return Err(Error::AssignmentTrivialImage(i));
        }
    }
    Ok(())
}

fn letter_image(ambient: &RightAngledGroup, assignment: &[Vec<Letter>], x: Letter) -> Vec<Letter> {
    let w = &assignment[x.generator];
    if x.inverse {
        ambient.inverse(w)
    } else {
        w.clone()
    }
}

/// Image of a whole A_Δ word, in ambient normal form.
pub fn image(ambient: &RightAngledGroup, assignment: &[Vec<Letter>], w: &[Letter]) -> Vec<Letter> {
    let flat: Vec<Letter> = w.iter().flat_map(|&x| letter_image(ambient, assignment, x)).collect();
    ambient.normal_form(&flat)
}

struct Balls<'a> {
    source: RightAngledGroup,
    ambient: &'a RightAngledGroup,
    letter_images: Vec<(Letter, Vec<Letter>)>,
    layers: Vec<Layer>,
    total: usize,
    cap: usize,
}

impl Balls<'_> {
    /// Build the next layer; false if the cap would be exceeded.
    fn grow(&mut self) -> bool {
        let last = self.layers.last().expect("layer 0 exists");
        let mut words = Vec::new();
        let mut images = Vec::new();
        for (u, img) in last.words.iter().zip(&last.images) {
            for (x, ximg) in &self.letter_images {
                let mut ux = u.clone();
                ux.push(*x);
                if self.source.normal_form(&ux) != ux {
                    continue;
                }
                let mut flat = img.clone();
                flat.extend_from_slice(ximg);
                words.push(ux);
                images.push(self.ambient.normal_form(&flat));
                if self.total + words.len() > self.cap {
                    return false;
                }
            }
        }
        self.total += words.len();
        self.layers.push(Layer { words, images });
        true
    }
}

pub fn kernel_search(
    delta: &CommutingGraph,
    assignment: &[Vec<Letter>],
    ambient: &RightAngledGroup,
    max_len: usize,
    ball_cap: usize,
) -> Result<KernelSearch> {
    validate_assignment(delta, assignment, ambient)?;
    let source = delta.artin_group();
    let letter_images = source.alphabet().into_iter().map(|x| (x, letter_image(ambient, assignment, x))).collect();
    let mut balls = Balls {
        source,
        ambient,
        letter_images,
        layers: vec![Layer { words: vec![Vec::new()], images: vec![Vec::new()] }],
        total: 1,
        cap: ball_cap,
    };
    for len in 1..=max_len {
        let hi = len.div_ceil(2);
        while balls.layers.len() <= hi {
            if !balls.grow() {
                return Ok(KernelSearch { witness: None, searched_depth: len - 1, exhausted: false });
            }
        }
        let lo = len / 2;
        let mut buckets: HashMap<&[Letter], Vec<usize>> = HashMap::new();
        for (i, img) in balls.layers[lo].images.iter().enumerate() {
            buckets.entry(img.as_slice()).or_default().push(i);
        }
        let mut best: Option<Vec<Letter>> = None;
        for (u, img) in balls.layers[hi].words.iter().zip(&balls.layers[hi].images) {
            let Some(partners) = buckets.get(img.as_slice()) else { continue };
            for &j in partners {
                let mut k = u.clone();
                k.extend(balls.source.inverse(&balls.layers[lo].words[j]));
                let k = balls.source.normal_form(&k);
                if k.len() == len && best.as_ref().is_none_or(|b| k < *b) {
                    best = Some(k);
                }
            }
        }
        if best.is_some() {
            return Ok(KernelSearch { witness: best, searched_depth: len, exhausted: true });
        }
    }
    Ok(KernelSearch { witness: None, searched_depth: max_len, exhausted: true })
}

/// Reference implementation: test every normal form in shortlex order.
pub fn kernel_search_naive(
    delta: &CommutingGraph,
    assignment: &[Vec<Letter>],
    ambient: &RightAngledGroup,
    max_len: usize,
) -> Result<Option<Vec<Letter>>> {
    validate_assignment(delta, assignment, ambient)?;
    let source = delta.artin_group();
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 1..=max_len {
        let mut next = Vec::new();
        for u in &layer {
            for x in source.alphabet() {
                let mut ux = u.clone();
                ux.push(x);
                if source.normal_form(&ux) == ux {
                    next.push(ux);
                }
            }
        }
        next.sort();
        if let Some(k) = next.iter().find(|k| image(ambient, assignment, k).is_empty()) {
            return Ok(Some(k.clone()));
        }
        layer = next;
    }
    Ok(None)
}
