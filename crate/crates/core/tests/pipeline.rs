use knot_shadow::enumerate::enumerate_shadows;
use knot_shadow::macros::library::MacroLibrary;
use knot_shadow::moves::{apply_b_all, move_c, reidemeister_apply, MoveStep};
use knot_shadow::pipeline::{
    lift_step, normalize_tail, simplify_to_trivial, to_trefoil, to_trefoil_with, verify_sequence, MoveSequence,
    PipelineError, PipelineOptions,
};
use knot_shadow::standard::trefoil;
use knot_shadow::{canonical_code, is_isomorphic};

#[test]
fn every_shadow_up_to_six_simplifies() {
    let cat = enumerate_shadows(6);
    for n in 1..=6 {
        for e in cat.stratum(n).values() {
            let t = normalize_tail(&simplify_to_trivial(&e.rep, 2).unwrap());
            assert!(t.check());
            assert!(t.peak() <= n + 2);
            assert_eq!(t.shadows[t.shadows.len() - 2].crossings(), 1, "{}", e.rep);
        }
    }
}

#[test]
fn routes_for_reduced_up_to_five() {
    let cat = enumerate_shadows(5);
    let code = canonical_code(&trefoil());
    for n in 3..=5 {
        for e in cat.stratum(n).values().filter(|e| e.reduced) {
            let seq = to_trefoil(&e.rep).unwrap();
            let report = verify_sequence(&seq, true).unwrap();
            assert_eq!(report.trace.len(), seq.steps.len() + 1);
            assert_eq!(canonical_code(&seq.end), code);
            assert_eq!(seq.delta(), 3 - n as isize);
        }
    }
}

#[test]
fn lifted_steps_land_on_the_image() {
    let cat = enumerate_shadows(5);
    for e in cat.stratum(5).values().filter(|e| e.reduced) {
        let t = normalize_tail(&simplify_to_trivial(&e.rep, 2).unwrap());
        let step = t.steps[0];
        let next = reidemeister_apply(&e.rep, &step).unwrap();
        let host = apply_b_all(&e.rep);
        let seq = MoveSequence::replay(host, lift_step(&e.rep, &step).unwrap()).unwrap();
        verify_sequence(&seq, true).unwrap();
        assert!(is_isomorphic(&seq.end, &apply_b_all(&next)));
    }
}

#[test]
fn search_fallback_without_macros() {
    let empty = MacroLibrary::default();
    let opts = PipelineOptions { slack: 2, bound: 4, library: &empty };
    let route = to_trefoil_with(&trefoil(), &opts).unwrap();
    assert_eq!(route.searches(), route.records.len());
    verify_sequence(&route.sequence, true).unwrap();
    assert_eq!(canonical_code(&route.sequence.end), canonical_code(&trefoil()));
}

#[test]
fn seqfile_round_trip_and_failures() {
    let seq = to_trefoil(&move_c(&trefoil(), 0).unwrap()).unwrap();
    let text = seq.to_seqfile();
    assert!(text.starts_with("seqfile v1\n"));
    assert!(text.lines().filter(|l| l.starts_with("step ")).all(|l| l.starts_with("step A ") || l.starts_with("step A- ")));
    assert_eq!(MoveSequence::from_seqfile(&text).unwrap(), seq);

    let mut wrong = seq.clone();
    wrong.steps[3] = MoveStep::AInv { k: 999 };
    assert!(matches!(verify_sequence(&wrong, true), Err(PipelineError::ReplayFailure { step: 4, .. })));

    let mut short = seq.clone();
    short.steps.pop();
    let e = verify_sequence(&short, true).unwrap_err();
    assert_eq!(e, PipelineError::ReplayFailure { step: seq.steps.len(), cause: "EndMismatch".into() });

    for bad in ["seqfile v2\n", "seqfile v1\nstart shadow v=0\n", "seqfile v1\nstart shadow v=0\nend shadow v=0\nstep B k=0\n"] {
        assert_eq!(MoveSequence::from_seqfile(bad).unwrap_err().name(), "SyntaxError");
    }
}

#[test]
fn invalid_inputs() {
    let cat = enumerate_shadows(4);
    for e in cat.stratum(4).values().filter(|e| !e.reduced) {
        assert_eq!(to_trefoil(&e.rep), Err(PipelineError::NotReduced));
    }
    assert_eq!(to_trefoil(&knot_shadow::Shadow::trivial()), Err(PipelineError::TrivialInput));
}
