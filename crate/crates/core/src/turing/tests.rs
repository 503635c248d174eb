use super::*;
use crate::words::{is_semaphore_code, minimal_elements, minimal_elements_prefix};

fn tm() -> TuringMachine {
    example_machine()
}

fn w(t: &TuringMachine, s: &str) -> Word {
    t.parse_omega(s).unwrap()
}

fn sym(t: &TuringMachine, s: &str) -> Letter {
    t.omega().letter(s).unwrap()
}

#[test]
fn homomorphisms() {
    let t = tm();
    let x = w(&t, "a@q0 b");
    assert_eq!(t.tape_alphabet().render(&t.tape_hom(&x)), "ab");
    assert_eq!(t.heads_count(&x), 1);
    assert_eq!(t.heads_count(&w(&t, "a b X _")), 0);
}

#[test]
fn legality() {
    let t = tm();
    assert!(!t.is_legal(&w(&t, "a@q0 b a@q1")));
    assert!(!t.is_legal(&w(&t, "a _ b")));
    assert!(!t.is_legal(&w(&t, "a _ _@q1 _ b")));
    assert!(!t.is_legal(&w(&t, "a@q1 _ b")));
    assert!(!t.is_legal(&w(&t, "_@q1 _ a")));
    assert!(!t.is_legal(&w(&t, "a _ _@q1")));
    assert!(t.is_legal(&w(&t, "_ a@q0 b _")));
    assert!(t.is_legal(&w(&t, "_ _@q2 a")));
    assert!(t.is_legal(&w(&t, "_ _@q2 _")));
    assert!(t.is_legal(&Word::empty()));
}

#[test]
fn one_move() {
    let t = tm();
    assert_eq!(t.beta(&w(&t, "a b")).unwrap(), w(&t, "a b"));
    assert_eq!(t.beta(&w(&t, "a@q0 b")).unwrap(), w(&t, "X b@q1"));
    assert_eq!(t.beta(&w(&t, "a@q4 b")).unwrap(), w(&t, "_@q4 a b"));
    assert_eq!(t.beta(&w(&t, "a a@q1")).unwrap(), w(&t, "a a _@q1"));
    assert!(matches!(
        t.beta(&w(&t, "a _ b")),
        Err(Error::IllegalWord(_))
    ));
}

#[test]
fn fixed_points() {
    let t = tm();
    let x = w(&t, "a b");
    assert_eq!(t.beta_omega(&x, 1).unwrap(), x);
    let acc = t.beta_omega(&w(&t, "_ a@q0 a b b _"), 1000).unwrap();
    assert!(acc.0.iter().any(|&s| t.state_of(s) == Some(6)));
    let rej = t.beta_omega(&w(&t, "_ a@q0 b b _"), 1000).unwrap();
    assert!(!rej.0.iter().any(|&s| t.state_of(s) == Some(6)));
}

#[test]
fn tracked_symbols() {
    let t = tm();
    let b = sym(&t, "b");
    assert_eq!(t.beta_tracked(&w(&t, "a _"), b, &Word::empty(), 3), None);
    assert_eq!(
        t.beta_tracked(&w(&t, "a@q0 a"), b, &Word::empty(), 0),
        Some(b)
    );
    let y = sym(&t, "Y");
    assert_eq!(
        t.beta_tracked_omega(&w(&t, "a@q0 a"), b, &Word::empty(), 100)
            .unwrap(),
        Some(y)
    );
    // left padding shifts the tracked index
    let a = sym(&t, "a");
    assert_eq!(
        t.beta_tracked(&w(&t, "a@q4"), a, &Word::empty(), 1),
        Some(a)
    );
}

#[test]
fn runs_on_inputs() {
    let t = tm();
    let ab = t.tape_alphabet().clone();
    let run = |s: &str| t.run_input(&ab.parse_word(s).unwrap(), 1000).unwrap().1;
    assert_eq!(run("ab"), RunVerdict::HaltedFinal);
    assert_eq!(run("aabb"), RunVerdict::HaltedFinal);
    assert_eq!(run("ba"), RunVerdict::HaltedNonfinal);
    assert_eq!(run("@eps"), RunVerdict::HaltedNonfinal);
    assert_eq!(run("aab"), RunVerdict::HaltedNonfinal);
}

#[test]
fn closed_form_examples() {
    let t = tm();
    assert!(example_nonreset_oracle(&Word::empty()));
    assert!(!example_nonreset_oracle(&w(&t, "b a")));
    assert!(!example_nonreset_oracle(&w(&t, "a@q2")));
    assert!(example_nonreset_oracle(&w(&t, "a a@q3 a b Y")));
    assert!(example_nonreset_oracle(&w(&t, "a Y b@q2 b")));
    assert!(!example_nonreset_oracle(&w(&t, "b Y b@q2")));
    assert!(!example_nonreset_oracle(&w(&t, "b Y@q3")));
}

#[test]
fn illegal_words_are_resets() {
    let t = tm();
    let b = Bounds {
        ctx_len: 2,
        n_max: 20,
    };
    let r = w(&t, "a _ a");
    assert_eq!(
        is_right_reset_bounded(&t, &r, b, None),
        ResetVerdict::Reset(ResetReason::Illegal)
    );
    assert_eq!(
        is_left_reset_bounded(&t, &r, b, None),
        ResetVerdict::Reset(ResetReason::Illegal)
    );
}

#[test]
fn witness_for_bb() {
    let t = tm();
    let r = w(&t, "b b");
    let v = is_right_reset_bounded(
        &t,
        &r,
        Bounds {
            ctx_len: 4,
            n_max: 200,
        },
        None,
    );
    let ResetVerdict::NonReset(wit) = v else {
        panic!("expected a witness, got {v:?}")
    };
    assert!(wit.replay(&t, &r).is_some());
}

#[test]
fn blank_prefixed_words_have_no_witness() {
    let t = tm();
    for s in ["_ a", "_ b", "_ a b", "_ Y b@q1"] {
        let r = w(&t, s);
        let v = is_right_reset_bounded(
            &t,
            &r,
            Bounds {
                ctx_len: 3,
                n_max: 60,
            },
            None,
        );
        assert!(!matches!(v, ResetVerdict::NonReset(_)), "{s}: {v:?}");
        let l = w(&t, &format!("{} _", &s[2..]));
        let v = is_left_reset_bounded(
            &t,
            &l,
            Bounds {
                ctx_len: 3,
                n_max: 60,
            },
            None,
        );
        assert!(!matches!(v, ResetVerdict::NonReset(_)), "{s}: {v:?}");
    }
}

#[test]
fn oracle_resets() {
    let t = tm();
    let v = is_right_reset_bounded(
        &t,
        &w(&t, "b a"),
        Bounds {
            ctx_len: 2,
            n_max: 10,
        },
        Some(&AnbnOracle),
    );
    assert_eq!(
        v,
        ResetVerdict::Reset(ResetReason::Oracle("builtin-anbn".into()))
    );
}

#[test]
fn codes_of_length_restrictions() {
    let t = tm();
    for ell in 1..=2 {
        let r = rsc_ell(&t, ell, &AnbnOracle).unwrap();
        assert!(r.words().iter().all(|x| x.len() <= ell));
        assert!(is_semaphore_code(&r));
        let ideal = res_ell_ideal(&t, ResetSide::Right, ell, &AnbnOracle).unwrap();
        assert_eq!(minimal_elements(&ideal, ell).unwrap(), r);
        let l = lsc_ell(&t, ell, &AnbnOracle).unwrap();
        let lideal = res_ell_ideal(&t, ResetSide::Left, ell, &AnbnOracle).unwrap();
        assert_eq!(minimal_elements_prefix(&lideal, ell).unwrap(), l);
    }
    assert!(res_ell_membership(&t, ResetSide::Right, &w(&t, "a b"), 2, &AnbnOracle).unwrap());
    assert!(!res_ell_membership(&t, ResetSide::Right, &w(&t, "a"), 2, &AnbnOracle).unwrap());
}

#[test]
fn output_function_path() {
    let t = tm();
    let b = sym(&t, "b");
    let y = sym(&t, "Y");
    let u = w(&t, "a@q0 a");
    let via = beta_omega_via_output(&t, &u, b, &Word::empty(), &AnbnOracle, 500).unwrap();
    assert_eq!(via, Some(y));
    assert_eq!(
        t.beta_tracked_omega(&u, b, &Word::empty(), 500).unwrap(),
        Some(y)
    );
    assert_eq!(
        beta_omega_via_output(&t, &w(&t, "a _"), b, &Word::empty(), &AnbnOracle, 500).unwrap(),
        None
    );
    assert_eq!(
        rsc_suffix(&t, &w(&t, "_ _"), &AnbnOracle).unwrap(),
        Word::empty()
    );
}

#[test]
fn small_output_determination() {
    let t = tm();
    let rep = verify_output_determination(&t, &AnbnOracle, 2, 500).unwrap();
    assert_eq!(rep.mismatch_count, 0, "{:?}", rep.mismatches);
    assert!(rep.triples > 0);
}

#[test]
fn machine_text_round_trip() {
    let t = tm();
    let text = machine_to_text(&t);
    let back = parse_machine(&text).unwrap();
    assert_eq!(machine_to_text(&back), text);
    assert!(matches!(
        parse_machine("states: q0\nfoo: 1\n"),
        Err(Error::Parse { line: 2, .. })
    ));
    let bad = text.replace("delta: q5 _ -> q6 Z L", "delta: q5 _ -> q6 _ L");
    assert!(matches!(parse_machine(&bad), Err(Error::Machine(_))));
}

#[test]
fn legal_halting_to_small_length() {
    assert_eq!(tm().check_legal_halting(4, 200), None);
}
