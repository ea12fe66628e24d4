//! Cross-module consistency of verdicts on the fixture suite.

use visual_raag::caps::Caps;
use visual_raag::decision::{decide_finite_index_raag, decide_raag_system, lambda_kernel_search, Answer};
use visual_raag::families::{make_family, FamilySpec};
use visual_raag::lambda::{commuting_graph, commuting_graph_by_words};

fn suite() -> impl Iterator<Item = (FamilySpec, visual_raag::theta::ThetaGraph)> {
    FamilySpec::fixture_suite().into_iter().map(|s| {
        let t = make_family(&s).unwrap();
        (s, t)
    })
}

#[test]
fn yes_verdicts_have_no_short_kernel() {
    for (spec, t) in suite() {
        if decide_raag_system(&t, &Caps::default()).answer != Answer::Yes {
            continue;
        }
        let (search, witness) = lambda_kernel_search(&t, 8, 1_000_000);
        assert!(witness.is_none(), "{spec}: {witness:?}");
        assert!(search.exhausted && search.searched_depth == 8, "{spec}: {search:?}");
    }
}

#[test]
fn finite_index_implies_raag_system() {
    for (spec, t) in suite() {
        let Ok(fi) = decide_finite_index_raag(&t, &Caps::default()) else { continue };
        if fi.answer == Answer::Yes {
            assert_eq!(decide_raag_system(&t, &Caps::default()).answer, Answer::Yes, "{spec}");
        }
    }
}

#[test]
fn commuting_graph_agrees_with_word_engine() {
    for (spec, t) in suite() {
        assert_eq!(commuting_graph(&t).edges(), commuting_graph_by_words(&t).edges(), "{spec}");
    }
}

#[test]
fn no_verdicts_carry_a_certificate() {
    for (spec, t) in suite() {
        let v = decide_raag_system(&t, &Caps::default());
        if v.answer == Answer::No {
            let cert = v.certificate.expect("a No verdict explains itself");
            assert!(cert.failed_condition.is_some() || cert.kernel_witness.is_some(), "{spec}");
        }
    }
}
