//! Property-based invariants over the well-behaved algebras (MV-chains and
//! towers with two-element bottom component), where the sequence monoid
//! laws hold.

use blalg::algebra::{parse_blalg, render_blalg, Algebra};
use blalg::chang::{class_eq, class_leq, EqDecision, GroupElt, LeqDecision, Strategy as Eq};
use blalg::goodseq::GoodSeq;
use blalg::rat::q;
use blalg::Value;
use proptest::prelude::*;

fn luk() -> Algebra {
    Algebra::lukasiewicz_rational()
}

/// Run-and-tail data for a good sequence over a rational chain.
fn chain_seq() -> impl Strategy<Value = (usize, i64, i64)> {
    (0usize..4, 0i64..=12, 1i64..=12).prop_map(|(p, n, d)| (p, n.min(d), d))
}

fn build(alg: &Algebra, (p, n, d): (usize, i64, i64)) -> GoodSeq {
    let mut entries = vec![alg.top().into_value(); p];
    entries.push(Value::Rat(q(n, d)));
    GoodSeq::from_values(alg, entries).expect("run and tail is good")
}

proptest! {
    #[test]
    fn addition_is_commutative_and_associative(a in chain_seq(), b in chain_seq(), c in chain_seq()) {
        let alg = luk();
        let (a, b, c) = (build(&alg, a), build(&alg, b), build(&alg, c));
        prop_assert_eq!(a.add(&alg, &b).unwrap(), b.add(&alg, &a).unwrap());
        prop_assert_eq!(
            a.add(&alg, &b).unwrap().add(&alg, &c).unwrap(),
            a.add(&alg, &b.add(&alg, &c).unwrap()).unwrap()
        );
    }

    #[test]
    fn addition_is_conical(a in chain_seq(), b in chain_seq()) {
        let alg = luk();
        let (a, b) = (build(&alg, a), build(&alg, b));
        let s = a.add(&alg, &b).unwrap();
        prop_assert!(!s.is_zero() || (a.is_zero() && b.is_zero()));
    }

    #[test]
    fn rendering_round_trips(a in chain_seq()) {
        let alg = luk();
        let s = build(&alg, a);
        let back = GoodSeq::parse(&alg, &s.render(&alg)).unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn order_is_translation_invariant(a in chain_seq(), b in chain_seq(), c in chain_seq(), d in chain_seq(), e in chain_seq(), f in chain_seq()) {
        let alg = luk();
        let g = GroupElt::new(&alg, build(&alg, a), build(&alg, b)).unwrap();
        let h = GroupElt::new(&alg, build(&alg, c), build(&alg, d)).unwrap();
        let m = GroupElt::new(&alg, build(&alg, e), build(&alg, f)).unwrap();
        let lhs = class_leq(&alg, &g, &h, Eq::Cancellative).unwrap();
        let rhs = class_leq(
            &alg,
            &g.add(&alg, &m).unwrap(),
            &h.add(&alg, &m).unwrap(),
            Eq::Cancellative,
        )
        .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn negation_inverts(a in chain_seq(), b in chain_seq()) {
        let alg = luk();
        let g = GroupElt::new(&alg, build(&alg, a), build(&alg, b)).unwrap();
        let z = g.add(&alg, &g.negate()).unwrap();
        prop_assert_eq!(
            class_eq(&alg, &z, &GroupElt::zero(&alg), Eq::Cancellative).unwrap(),
            EqDecision::Equal
        );
    }

    #[test]
    fn finite_tables_round_trip_through_the_text_format(n in 2usize..7) {
        let a = Algebra::lukasiewicz_finite(n).unwrap();
        let text = render_blalg(&a).unwrap();
        let b = parse_blalg(&text).unwrap();
        prop_assert_eq!(render_blalg(&b).unwrap(), text);
    }
}

#[test]
fn join_is_least_upper_bound_on_sampled_classes() {
    use blalg::chang::group_join;
    use rand::SeedableRng;
    let alg = luk();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    for _ in 0..100 {
        let g = blalg::props::sample_group_elt(&alg, &mut rng, 3, 16);
        let h = blalg::props::sample_group_elt(&alg, &mut rng, 3, 16);
        let j = group_join(&alg, &g, &h).unwrap();
        assert_eq!(
            class_leq(&alg, &g, &j, Eq::Cancellative).unwrap(),
            LeqDecision::Leq
        );
        assert_eq!(
            class_leq(&alg, &h, &j, Eq::Cancellative).unwrap(),
            LeqDecision::Leq
        );
        // on a totally ordered group the join is one of its arguments
        let is_g = class_eq(&alg, &j, &g, Eq::Cancellative).unwrap() == EqDecision::Equal;
        let is_h = class_eq(&alg, &j, &h, Eq::Cancellative).unwrap() == EqDecision::Equal;
        assert!(is_g || is_h);
    }
}
