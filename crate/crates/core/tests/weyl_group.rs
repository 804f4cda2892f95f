use mvpw::cartan::CartanData;
use mvpw::weyl::{Side, WeylGroup};

fn group(label: &str) -> WeylGroup {
    WeylGroup::new(&CartanData::parse(label).unwrap()).unwrap()
}

#[test]
fn orders() {
    for (label, order) in
        [("A1", 2), ("A2", 6), ("A3", 24), ("A4", 120), ("B2", 8), ("C2", 8), ("B3", 48), ("C3", 48), ("D4", 192)]
    {
        let g = group(label);
        assert_eq!(g.order(), order, "{label}");
        assert_eq!(g.length(g.longest()), g.cartan().positive_roots().len(), "{label}");
    }
}

#[test]
fn unsupported_types() {
    assert!(CartanData::parse("G2").is_err());
    assert!(CartanData::parse("D3").is_err());
    assert!(CartanData::parse("X2").is_err());
}

#[test]
fn bruhat_order_agrees_with_subwords() {
    for label in ["A3", "B2", "B3"] {
        let g = group(label);
        for u in g.elements() {
            for w in g.elements() {
                assert_eq!(g.bruhat_leq(u, w), g.bruhat_leq_subword(u, w), "{label} {} {}", g.label(u), g.label(w));
            }
        }
    }
}

#[test]
fn weak_order_is_prefix_order() {
    let g = group("A3");
    for u in g.elements() {
        for w in g.elements() {
            let prefix = g.length(g.inverse(u)) + g.length(g.mul(g.inverse(u), w)) == g.length(w);
            assert_eq!(g.weak_leq(u, w, Side::Right), prefix);
            if g.weak_leq(u, w, Side::Right) {
                assert!(g.bruhat_leq(u, w));
            }
        }
    }
}

#[test]
fn rightmost_subword_matches_scan() {
    let g = group("A3");
    for word in g.reduced_words(g.longest()).into_iter().step_by(3) {
        for w in g.elements() {
            assert_eq!(g.rightmost_subword(&word, w).unwrap(), g.rightmost_subword_brute(&word, w).unwrap());
        }
    }
}

#[test]
fn demazure_product() {
    let g = group("B3");
    let els: Vec<_> = g.elements().step_by(5).collect();
    for &x in &els {
        assert_eq!(g.demazure(g.identity(), x), x);
        assert_eq!(g.demazure(x, g.longest()), g.longest());
        for &y in &els {
            let d = g.demazure(x, y);
            assert!(g.bruhat_leq(x, d) && g.bruhat_leq(y, d));
            for &z in els.iter().step_by(4) {
                assert_eq!(g.demazure(g.demazure(x, y), z), g.demazure(x, g.demazure(y, z)));
            }
        }
    }
}

#[test]
fn v_w_properties() {
    for label in ["A3", "C3"] {
        let g = group(label);
        for v in g.elements() {
            assert_eq!(g.v_w(v, g.longest()), v);
            assert_eq!(g.v_w(v, g.identity()), g.identity());
            for w in g.elements() {
                let vw = g.v_w(v, w);
                assert!(g.weak_leq(vw, v, Side::Right) && g.bruhat_leq(vw, w));
                assert_eq!(g.v_w(w, w), w);
            }
        }
    }
}

#[test]
fn star_involution() {
    let g = group("A4");
    for i in 0..4 {
        assert_eq!(g.star(i), 3 - i);
        assert_eq!(g.mul(g.gen(g.star(i)), g.longest()), g.mul(g.longest(), g.gen(i)));
    }
    let d = group("D4");
    assert!((0..4).all(|i| d.star(i) == i));
}

#[test]
fn words_round_trip_through_json() {
    let g = group("B2");
    for x in g.elements() {
        let j = g.to_json(x);
        assert_eq!(g.from_json(&j).unwrap(), x);
    }
    assert!(g.from_word_1based(&[3]).is_err());
    assert!(g.is_reduced(&[0, 0]).is_ok_and(|r| !r));
}
