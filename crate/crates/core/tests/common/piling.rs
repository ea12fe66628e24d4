//! Pilings: one stack per generator, a canonical representative of an
//! element of a right-angled Artin or Coxeter group that does not use the
//! word engine.

use std::collections::HashMap;

use visual_raag::word::{Letter, RightAngledGroup, Semantics};

const MAX_GENERATORS: usize = 8;
const MAX_HEIGHT: usize = 16;

/// Stack entries: +1 for a generator, -1 for its inverse, 0 for a blocker.
/// Slots above each height stay zero so equal pilings compare equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Piling {
    heights: [u8; MAX_GENERATORS],
    stacks: [[i8; MAX_HEIGHT]; MAX_GENERATORS],
}

impl Piling {
    pub fn empty() -> Self {
        Piling { heights: [0; MAX_GENERATORS], stacks: [[0; MAX_HEIGHT]; MAX_GENERATORS] }
    }

    fn top(&self, g: usize) -> Option<i8> {
        let h = self.heights[g] as usize;
        (h > 0).then(|| self.stacks[g][h - 1])
    }

    fn pop(&mut self, g: usize) -> i8 {
        self.heights[g] -= 1;
        let h = self.heights[g] as usize;
        std::mem::replace(&mut self.stacks[g][h], 0)
    }

    fn push_entry(&mut self, g: usize, v: i8) {
        let h = self.heights[g] as usize;
        assert!(h < MAX_HEIGHT, "piling taller than the oracle supports");
        self.stacks[g][h] = v;
        self.heights[g] += 1;
    }
}

pub fn push(group: &RightAngledGroup, piling: &mut Piling, x: Letter) {
    assert!(group.generator_count() <= MAX_GENERATORS);
    let g = x.generator;
    let sign: i8 = if x.inverse && group.semantics() == Semantics::Artin { -1 } else { 1 };
    let cancel = match group.semantics() {
        Semantics::Artin => -sign,
        Semantics::Coxeter => 1,
    };
    let blocked = (0..group.generator_count()).filter(|&y| y != g && !group.generators_commute(g, y));
    if piling.top(g) == Some(cancel) {
        piling.pop(g);
        for y in blocked {
            let top = piling.pop(y);
            debug_assert_eq!(top, 0);
        }
    } else {
        piling.push_entry(g, sign);
        for y in blocked {
            piling.push_entry(y, 0);
        }
    }
}

pub fn piling_of(group: &RightAngledGroup, w: &[Letter]) -> Piling {
    let mut p = Piling::empty();
    for &x in w {
        push(group, &mut p, x);
    }
    p
}

/// Breadth-first Cayley-graph distances of every element within `radius`.
pub fn cayley_ball(group: &RightAngledGroup, radius: usize) -> HashMap<Piling, usize> {
    let mut dist = HashMap::from([(Piling::empty(), 0)]);
    let mut frontier = vec![Piling::empty()];
    for d in 1..=radius {
        let mut next = Vec::new();
        for p in &frontier {
            for x in group.alphabet() {
                let mut q = *p;
                push(group, &mut q, x);
                dist.entry(q).or_insert_with(|| {
                    next.push(q);
                    d
                });
            }
        }
        frontier = next;
    }
    dist
}

struct Walk<'a> {
    group: &'a RightAngledGroup,
    alphabet: Vec<Letter>,
    ball: HashMap<Piling, usize>,
    normal_forms: HashMap<Piling, Vec<Letter>>,
    mismatches: usize,
}

impl Walk<'_> {
    fn visit(&mut self, w: &mut Vec<Letter>, p: Piling, remaining: usize) {
        let nf = self.group.normal_form(w);
        if nf.len() != self.ball[&p] || piling_of(self.group, &nf) != p {
            self.mismatches += 1;
        }
        match self.normal_forms.get(&p) {
            Some(seen) if *seen != nf => self.mismatches += 1,
            Some(_) => {}
            None => {
                self.normal_forms.insert(p, nf);
            }
        }
        if remaining == 0 {
            return;
        }
        for i in 0..self.alphabet.len() {
            let x = self.alphabet[i];
            let mut q = p;
            push(self.group, &mut q, x);
            w.push(x);
            self.visit(w, q, remaining - 1);
            w.pop();
        }
    }
}

/// Mismatches between |reduce(w)| and Cayley distance, and between normal
/// forms of equal elements, over every word of length ≤ `max_len`.
pub fn geodesic_mismatches(group: &RightAngledGroup, max_len: usize) -> usize {
    let mut walk = Walk {
        group,
        alphabet: group.alphabet(),
        ball: cayley_ball(group, max_len),
        normal_forms: HashMap::new(),
        mismatches: 0,
    };
    walk.visit(&mut Vec::with_capacity(max_len), Piling::empty(), max_len);
    walk.mismatches
}

/// Every labelled graph on `n` vertices as a commutation table.
pub fn all_graphs(n: usize) -> Vec<Vec<Vec<bool>>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    (0..1u32 << pairs.len())
        .map(|mask| {
            let mut c = vec![vec![false; n]; n];
            for (k, &(a, b)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    c[a][b] = true;
                    c[b][a] = true;
                }
            }
            c
        })
        .collect()
}

pub fn group_from(commute: Vec<Vec<bool>>, semantics: Semantics) -> RightAngledGroup {
    let names = (0..commute.len()).map(|i| format!("g{i}")).collect();
    RightAngledGroup::from_parts(names, commute, semantics)
}
