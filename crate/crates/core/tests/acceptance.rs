//! Acceptance criteria: one PASS/FAIL line each. Exits nonzero on any FAIL.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use visual_raag::caps::Caps;
use visual_raag::completion::{build_completion, build_completion_seeded, index_report};
use visual_raag::conditions::{check, Condition};
use visual_raag::decision::{
    bipartite_parity_check, decide_finite_index_raag, decide_raag_system, deletion_condition_test, Answer,
};
use visual_raag::families::{make_family, FamilySpec};
use visual_raag::kernel::kernel_search;
use visual_raag::lambda::{commuting_graph, lambda_letter_image, LambdaWord};
use visual_raag::reflections::{reflection_raag_presentation, ReflectionSet};
use visual_raag::theta::ThetaGraph;
use visual_raag::word::{Letter, RightAngledGroup, Semantics};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn family(spec: FamilySpec) -> ThetaGraph {
    make_family(&spec).expect("fixture builds")
}

fn passes(theta: &ThetaGraph, conditions: &[Condition]) -> Vec<bool> {
    let caps = Caps::default();
    conditions.iter().map(|&c| check(theta, c, &caps).map(|r| r.conclusive_pass()).unwrap_or(false)).collect()
}

fn finite_index(theta: &ThetaGraph) -> Result<(Answer, Option<u64>), String> {
    let v = decide_finite_index_raag(theta, &Caps::default()).map_err(|e| e.to_string())?;
    Ok((v.answer, v.index_report.map(|r| r.omega_index)))
}

fn criterion_1() -> Outcome {
    for n in 3..=6 {
        let t = family(FamilySpec::GammaN { n });
        let answer = decide_raag_system(&t, &Caps::default()).answer;
        ensure(answer == Answer::Yes, || format!("gamma_n({n}) RAAG system verdict {answer:?}"))?;
        let fi = finite_index(&t)?;
        ensure(fi == (Answer::Yes, Some(4)), || format!("gamma_n({n}) finite index {fi:?}"))?;
        let delta = commuting_graph(&t);
        ensure(delta.is_cycle() && delta.vertex_count() == 2 * n, || format!("gamma_n({n}) Δ is not C_{}", 2 * n))?;
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    for n in 3..=4 {
        for k in 1..=2 {
            let fi = finite_index(&family(FamilySpec::DeltaNK { n, k }))?;
            ensure(fi == (Answer::Yes, Some(4)), || format!("delta_nk({n},{k}) finite index {fi:?}"))?;
        }
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    let hex = family(FamilySpec::Hexagon);
    let p = passes(&hex, &[Condition::R1, Condition::R2, Condition::R3, Condition::R4]);
    ensure(p == [true, true, true, false], || format!("hexagon R1–R4 pattern {p:?}"))?;
    let delta = commuting_graph(&hex);
    let ambient = RightAngledGroup::new(hex.gamma(), Semantics::Coxeter);
    let assignment: Vec<Vec<Letter>> =
        (0..hex.lambda_edges().len()).map(|i| lambda_letter_image(&hex, Letter::new(i)).to_vec()).collect();
    let found = kernel_search(&delta, &assignment, &ambient, 8, 1_000_000).map_err(|e| e.to_string())?;
    let k = found.witness.ok_or("no kernel witness within depth 8")?;
    ensure(!delta.artin_group().is_identity(&k), || "witness is trivial in A_Δ".into())?;
    let expanded = LambdaWord { letters: k.clone() }.expand(&hex);
    ensure(ambient.is_identity(&expanded), || "witness is nontrivial in W_C6".into())?;
    ensure(k.len() == 8, || format!("witness length {}", k.len()))
}

fn criterion_4() -> Outcome {
    let t = family(FamilySpec::R5Counterexample);
    let p = passes(&t, &[Condition::R1, Condition::R2, Condition::R3, Condition::R4, Condition::R5]);
    ensure(p == [true, true, true, true, false], || format!("R1–R5 pattern {p:?}"))?;
    let answer = decide_raag_system(&t, &Caps::default()).answer;
    ensure(answer == Answer::No, || format!("verdict {answer:?}"))
}

fn criterion_5() -> Outcome {
    let cap = Caps::default().cell_cap;
    let cases = [
        (FamilySpec::LambdaPathOnEdgeless { n: 4 }, 2),
        (FamilySpec::C4Diagonals, 4),
        (FamilySpec::GammaN { n: 3 }, 4),
    ];
    for (spec, vertices) in cases {
        let t = family(spec.clone());
        let c = build_completion(&t, cap).map_err(|e| e.to_string())?;
        ensure(c.saturated() && c.cell_count() <= cap, || format!("{spec}: not saturated under the cap"))?;
        let r = index_report(&c, t.gamma()).map_err(|e| e.to_string())?;
        ensure(r.full_valence && r.vertex_count == vertices, || format!("{spec}: {r:?}"))?;
        let canonical = c.canonical();
        for seed in 0..10 {
            let other = build_completion_seeded(&t, cap, seed).map_err(|e| e.to_string())?;
            ensure(other.canonical() == canonical, || format!("{spec}: seed {seed} gives a different Ω"))?;
        }
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut jobs = Vec::new();
    for n in 1..=4 {
        for commute in common::piling::all_graphs(n) {
            for semantics in [Semantics::Artin, Semantics::Coxeter] {
                jobs.push((commute.clone(), semantics));
            }
        }
    }
    let mismatches: usize = jobs
        .into_iter()
        .map(|(c, s)| common::piling::geodesic_mismatches(&common::piling::group_from(c, s), 6))
        .sum();
    let elapsed = start.elapsed();
    ensure(mismatches == 0, || format!("{mismatches} mismatches"))?;
    ensure(elapsed <= Duration::from_secs(60), || format!("took {elapsed:?}"))
}

fn criterion_7() -> Outcome {
    let mut checked = 0;
    for spec in FamilySpec::fixture_suite() {
        let t = family(spec.clone());
        if t.component_count() != 2 || !t.gamma().is_triangle_free() {
            continue;
        }
        let (answer, index) = finite_index(&t)?;
        if answer != Answer::Yes {
            continue;
        }
        let p = bipartite_parity_check(&t).ok_or_else(|| format!("{spec}: parity map undefined"))?;
        ensure(p.kills_lambda_edges, || format!("{spec}: Λ-edge not killed"))?;
        ensure(Some(p.image_order) == index, || format!("{spec}: image order {} vs index {index:?}", p.image_order))?;
        checked += 1;
    }
    ensure(checked >= 5, || format!("only {checked} fixtures checked"))
}

fn random_reflection_set(rng: &mut ChaCha8Rng) -> ReflectionSet {
    let n = rng.gen_range(2..=5);
    let mut commute = vec![vec![false; n]; n];
    for a in 0..n {
        for b in a + 1..n {
            let on = rng.gen_bool(0.4);
            commute[a][b] = on;
            commute[b][a] = on;
        }
    }
    let names = (0..n).map(|i| format!("v{i}")).collect();
    let group = Arc::new(RightAngledGroup::from_parts(names, commute, Semantics::Artin));
    let letter = |rng: &mut ChaCha8Rng| Letter { generator: rng.gen_range(0..n), inverse: rng.gen_bool(0.5) };
    let items: Vec<(Vec<Letter>, Letter)> = (0..rng.gen_range(1..=4))
        .map(|_| {
            let w = (0..rng.gen_range(0..=4)).map(|_| letter(rng)).collect();
            (w, letter(rng))
        })
        .collect();
    ReflectionSet::new(group, &items)
}

fn criterion_8() -> Outcome {
    let free = Arc::new(RightAngledGroup::from_parts(
        vec!["a".into(), "b".into()],
        vec![vec![false; 2]; 2],
        Semantics::Artin,
    ));
    let example = ReflectionSet::new(
        free.clone(),
        &[(vec![], Letter::new(0)), (vec![Letter::new(0)], Letter::new(1))],
    );
    let trimmed = example.trim().map_err(|e| e.to_string())?;
    let elements: Vec<String> = trimmed.members().iter().map(|m| free.format(&m.element)).collect();
    ensure(elements == ["a", "b"], || format!("trim gave {elements:?}"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut problems = Vec::new();
    for i in 0..1000 {
        let set = random_reflection_set(&mut rng);
        let t = match set.trim() {
            Ok(t) => t,
            Err(e) => {
                problems.push(format!("instance {i}: {e}"));
                continue;
            }
        };
        if !t.is_trimmed() || !t.replay() {
            problems.push(format!("instance {i}: trimmed={} replay={}", t.is_trimmed(), t.replay()));
        }
        match reflection_raag_presentation(&set, 8, 1_000_000) {
            Ok(p) if p.verified_to_depth == 8 => {}
            Ok(p) => problems.push(format!("instance {i}: kernel search only reached {}", p.verified_to_depth)),
            Err(e) => problems.push(format!("instance {i}: {e}")),
        }
        let gens: Vec<Vec<Letter>> = t.members().iter().map(|m| m.element.clone()).collect();
        let report = deletion_condition_test(t.group(), &gens, 100, 5, i);
        if !report.counterexamples.is_empty() {
            problems.push(format!("instance {i}: deletion fails for {:?}", report.counterexamples));
        }
    }
    ensure(problems.is_empty(), || format!("{} problems, first: {}", problems.len(), problems[0]))
}

fn criterion_9() -> Outcome {
    let caps = Caps::default();
    for spec in FamilySpec::fixture_suite() {
        let t = family(spec.clone());
        let base = common::signature(&t, &caps);
        let variants = [
            ("renamed", common::reverse_names(&t)),
            ("all flipped", t.with_all_flipped()),
            ("alternate flips", common::alternate_flips(&t)),
        ];
        for (what, v) in variants {
            let sig = common::signature(&v, &caps);
            ensure(sig == base, || format!("{spec} {what}: {sig:?} vs {base:?}"))?;
        }
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("gamma_n fixtures: RAAG system, index 4, Δ ≅ C_2n", criterion_1),
        ("delta_nk fixtures: finite-index RAAG system of index 4", criterion_2),
        ("hexagon: R1–R3 pass, R4 fails, depth-8 kernel witness", criterion_3),
        ("R5 fixture: R1–R4 pass, R5 fails, verdict No", criterion_4),
        ("completion: vertex counts, full valence, confluence", criterion_5),
        ("word engine: geodesic lengths match Cayley BFS", criterion_6),
        ("parity map to Z2×Z2 matches the completion index", criterion_7),
        ("reflections: trimming, replay, deletion, kernel search", criterion_8),
        ("verdicts invariant under renaming and flips", criterion_9),
    ];
    let mut failed = 0;
    for (i, (label, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS criterion {}: {label} ({secs:.1}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {}: {label}: {e} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
