use std::sync::Arc;

use mvpw::cartan::Coweight;
use mvpw::error::MvError;
use mvpw::io::{lusztig_json, polytope_json, read_polytope, vertices_json};
use mvpw::polytope::{a2_braid_transition, b2_braid_transition, B2Source, BzData, Frame, MvPolytope, Reading};
use mvpw::random::random_polytopes;
use proptest::prelude::*;

fn frame(label: &str) -> Arc<Frame> {
    Frame::parse(label).unwrap()
}

#[test]
fn a2_transition_formula() {
    assert_eq!(a2_braid_transition(1, 2, 2), (3, 1, 2));
    assert_eq!(a2_braid_transition(3, 1, 2), (1, 2, 2));
    let f = frame("A2");
    for n in mvpw::random::grid(3, 3) {
        let p = MvPolytope::from_lusztig(&f, &[0, 1, 0], &n).unwrap();
        let (a, b, c) = a2_braid_transition(n[0], n[1], n[2]);
        assert_eq!(p.lusztig(&[1, 0, 1]).unwrap(), vec![a, b, c]);
    }
}

#[test]
fn b2_transition_involutive() {
    for n in mvpw::random::grid(4, 3) {
        let n = [n[0], n[1], n[2], n[3]];
        let m = b2_braid_transition(n, B2Source::OneTwo).unwrap();
        assert_eq!(b2_braid_transition(m, B2Source::TwoOne).unwrap(), n);
    }
}

#[test]
fn every_word_gives_the_same_polytope() {
    for label in ["A3", "B2", "C3"] {
        let f = frame(label);
        for p in random_polytopes(&f, 4, 3, 11).unwrap() {
            for word in f.w0_words().words.iter().step_by(7) {
                let n = p.lusztig(word).unwrap();
                assert!(n.iter().all(|&x| x >= 0), "{label}");
                assert_eq!(MvPolytope::from_lusztig(&f, word, &n).unwrap(), p, "{label}");
            }
        }
    }
}

#[test]
fn coweight_is_sum_of_edges() {
    let f = frame("B3");
    for p in random_polytopes(&f, 3, 2, 5).unwrap() {
        let word = f.default_word();
        let n = p.lusztig(&word).unwrap();
        let total = f.path_coroots(&word).iter().zip(&n).fold(Coweight::zero(3), |acc, (c, &k)| acc.add(&c.scale(k)));
        assert_eq!(&total, p.coweight());
    }
}

#[test]
fn json_forms_agree() {
    let f = frame("C2");
    for p in random_polytopes(&f, 10, 4, 3).unwrap() {
        let bz = serde_json::to_string(&polytope_json(&p)).unwrap();
        let vs = serde_json::to_string(&vertices_json(&p)).unwrap();
        assert_eq!(read_polytope(&bz, None).unwrap(), p);
        assert_eq!(read_polytope(&vs, None).unwrap(), p);
        let l = lusztig_json(&p, &[2, 1, 2, 1]).unwrap();
        let text = serde_json::to_string(&l).unwrap();
        assert_eq!(read_polytope(&text, Some("C2")).unwrap(), p);
    }
}

#[test]
fn malformed_inputs() {
    assert!(matches!(read_polytope("[1,2]", Some("A2")), Err(MvError::Schema(_))));
    assert!(matches!(read_polytope(r#"{"word":[1,2,1]}"#, Some("A2")), Err(MvError::Schema(_))));
    assert!(read_polytope(r#"{"word":[1,2,1],"n":[1,-1,0]}"#, Some("A2")).is_err());
    assert!(read_polytope(r#"{"word":[1,1,2],"n":[1,1,0]}"#, Some("A2")).is_err());
    let f = frame("A2");
    let mut bad = BzData::zero(&f);
    bad.values_mut()[0] = -3;
    assert!(MvPolytope::new(bad).is_err());
}

#[test]
fn printed_reading_is_stricter_in_b2() {
    let f = frame("B2");
    let ps = random_polytopes(&f, 60, 4, 21).unwrap();
    assert!(ps.iter().all(|p| p.bz().plucker_violations(Reading::LiteralOmegaJ).is_empty()));
    assert!(ps.iter().any(|p| !p.bz().plucker_violations(Reading::Printed).is_empty()));
}

fn lusztig_a3() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(0i64..5, 6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lusztig_round_trip(n in lusztig_a3(), k in 0usize..16) {
        let f = frame("A3");
        let words = &f.w0_words().words;
        let word = &words[k % words.len()];
        let p = MvPolytope::from_lusztig(&f, &f.default_word(), &n).unwrap();
        let m = p.lusztig(word).unwrap();
        prop_assert_eq!(MvPolytope::from_lusztig(&f, word, &m).unwrap().lusztig(&f.default_word()).unwrap(), n);
    }

    #[test]
    fn vertices_determine_bz(n in proptest::collection::vec(0i64..6, 4)) {
        let f = frame("B2");
        let p = MvPolytope::from_lusztig(&f, &f.default_word(), &n).unwrap();
        let q = BzData::from_vertices(&f, p.vertices()).unwrap();
        prop_assert_eq!(&q, p.bz());
        prop_assert!(q.is_bz_datum());
    }
}
