//! Dual-route agreement: on chordal graphs with independence number at
//! most four, the constructive pipeline succeeds exactly when the
//! exhaustive recognizer finds a model, and both agree with quadruple
//! presence.

use chordarc::arcs::{construct_representation, ArcError};
use chordarc::catalog::paper_catalog;
use chordarc::chordal::is_chordal;
use chordarc::gen::{derive_seed, random_chordal, GenParams, SplitMix64};
use chordarc::graph::Graph;
use chordarc::obstruction::find_blocking_quadruple;
use chordarc::oracle::{
    alpha_at_most, brute_force_circular_arc, verify_representation, CircularArcOutcome,
};
use std::time::Duration;

/// Construction outcome, quadruple presence, and recognizer verdict must
/// tell one consistent story.
fn crosscheck(g: &Graph) {
    let quadruple = find_blocking_quadruple(g);
    let constructed = construct_representation(g);
    let recognized = matches!(
        brute_force_circular_arc(g, Duration::from_secs(600)),
        CircularArcOutcome::Yes(_)
    );
    match (&constructed, &quadruple) {
        (Ok(rep), None) => {
            assert!(verify_representation(g, rep).unwrap().equal);
            assert!(recognized, "constructed a model the recognizer missed: {g:?}");
        }
        (Err(ArcError::HasBlockingQuadruple(bq)), Some(_)) => {
            assert!(bq.revalidate(g));
            assert!(
                !recognized,
                "recognizer found a model despite a quadruple: {g:?}"
            );
        }
        (other, quad) => panic!(
            "construction and quadruple search disagree on {g:?}: {other:?} vs {quad:?}"
        ),
    }
}

#[test]
fn construction_agrees_with_recognizer_on_small_samples() {
    let mut checked = 0usize;
    for trial in 0..150u64 {
        let tseed = derive_seed(0xc05c, trial);
        let mut rng = SplitMix64::new(tseed);
        let n = 4 + rng.below(4); // recognizer scale
        let params = GenParams {
            n,
            tree_size: 2 + rng.below(n),
            subtree_mean: 1 + rng.below(2),
            seed: rng.next_u64(),
            alpha_max: Some(4),
            reject_limit: 30,
        };
        let Ok(g) = random_chordal(&params) else {
            continue;
        };
        assert!(is_chordal(&g).is_some());
        assert!(alpha_at_most(&g, 4));
        crosscheck(&g);
        checked += 1;
    }
    assert!(checked >= 120, "enough samples must survive the caps");
}

#[test]
fn construction_agrees_with_recognizer_on_quadruple_hosts() {
    // The catalog family instances are chordal quadruple hosts with
    // independence number four, all at recognizer scale.
    for entry in paper_catalog() {
        if !entry.name.starts_with("fig1-") {
            continue;
        }
        assert!(alpha_at_most(&entry.graph, 4), "{}", entry.name);
        crosscheck(&entry.graph);
    }
}
