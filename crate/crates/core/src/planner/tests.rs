use super::*;
use crate::calculus::evaluate;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn reg() -> Registry {
    Registry::bundled()
}

fn group(text: &str) -> Presentation {
    text.parse().unwrap()
}

#[test]
fn admissibility_names_the_congruence() {
    let msg = |c13, c1c2, c3| match check_admissible(&ChernTriple::new(c13, c1c2, c3)) {
        Err(PlanError::Inadmissible(m)) => m,
        other => panic!("{other:?}"),
    };
    assert!(msg(1, 0, 0).contains("c13 must be even"));
    assert!(msg(0, 0, 3).contains("c3 must be even"));
    assert!(msg(0, 12, 0).contains("c1c2 must be divisible by 24"));
    assert!(check_admissible(&ChernTriple::new(2, 24, 2)).is_ok());
}

#[test]
fn exact_bases_need_no_blowups() {
    let r = realize(&Target6::simply_connected(0, 0, 0), &reg()).unwrap();
    assert_eq!(r.family, BaseFamily::W1);
    assert_eq!(r.blow_up_count(), 0);
    let r = realize(&Target6::simply_connected(180, 96, 36), &reg()).unwrap();
    assert_eq!(r.family, BaseFamily::W0);
    assert_eq!(r.blocks, vec!["Z11(9,-1)", "Z11(9,-1)"]);
    assert_eq!(r.blow_up_count(), 0);
    let r = realize(&Target6::simply_connected(-228, -120, -44), &reg()).unwrap();
    assert_eq!(r.family, BaseFamily::W2);
    assert_eq!(r.blow_up_count(), 0);
}

#[test]
fn blowups_follow_prep_point() {
    let r = realize(&Target6::simply_connected(172, 96, 38), &reg()).unwrap();
    assert!(r.prep_blow_up);
    assert_eq!(r.blow_up_count(), 1);
    assert_eq!(r.budget, BlowUpBudget::default());
}

#[test]
fn small_c1c2_uses_a_single_product() {
    let r = realize(&Target6::simply_connected(2, 24, 2), &reg()).unwrap();
    assert_eq!(r.family, BaseFamily::ProductS2);
    assert_eq!(r.blocks, vec!["E1"]);
    assert_eq!(r.achieved, ChernTriple::new(2, 24, 2));
    let r = realize(&Target6::simply_connected(0, 72, 0), &reg()).unwrap();
    assert_eq!(r.family, BaseFamily::ProductS2);
    assert_eq!(r.blocks, vec!["Z11(13,-1)"]);
}

#[test]
fn small_negative_c1c2_is_exhausted() {
    for m in 1..=4 {
        match realize(&Target6::simply_connected(0, -24 * m, 0), &reg()) {
            Err(PlanError::SearchExhausted(msg)) => assert!(msg.contains("W2 needs c1c2 <= -120"), "{msg}"),
            other => panic!("{other:?}"),
        }
    }
    assert!(realize(&Target6::simply_connected(0, -120, 0), &reg()).is_ok());
}

#[test]
fn torsion_group_small_c1c2_is_exhausted() {
    let t = Target6::new(2, 24, 2, group("a | a a"));
    match realize(&t, &reg()) {
        Err(PlanError::SearchExhausted(m)) => {
            assert!(m.contains("g + r = 2"), "{m}");
            assert!(m.contains("c1c2 >= 72"), "{m}");
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn group_targets_round_trip() {
    for (g, t) in [
        ("a | a a", (300, 240, 60)),
        ("a |", (-276, -144, -52)),
        ("a, b |", (1000, 480, -100)),
        ("a, b | a b a' b'", (-50, -480, 10)),
    ] {
        let target = Target6::new(t.0, t.1, t.2, group(g));
        let r = realize(&target, &reg()).unwrap();
        let v = evaluate(&r.recipe, &reg()).unwrap();
        assert_eq!(v.chern, Some(target.chern));
        let ab = crate::fpgroup::abelianization(&v.pi1);
        assert_eq!(ab, crate::fpgroup::abelianization(&target.group), "{g}");
    }
}

#[test]
fn random_trivial_targets_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..25 {
        let t = Target6::simply_connected(
            2 * rng.gen_range(-500..=500),
            24 * [rng.gen_range(-20..=-5), rng.gen_range(0..=20)][rng.gen_range(0..2)],
            2 * rng.gen_range(-500..=500),
        );
        let r = realize(&t, &reg()).unwrap();
        assert_eq!(r.achieved, t.chern);
        let back = Recipe::from_json(&r.recipe.to_json()).unwrap();
        assert_eq!(evaluate(&back, &reg()).unwrap().chern, Some(t.chern));
    }
}

#[test]
fn realize_4d_examples() {
    let r = realize_4d(19, 3, &group("a |"), false).unwrap();
    assert_eq!(r.nodes()[0], crate::calculus::Step::Leaf { block: "Z11(13,-5)".into() });
    let v = evaluate(&r, &reg()).unwrap().char4.unwrap();
    assert_eq!((v.c1_squared().unwrap(), v.chi_h().unwrap()), (19, 3));
    let r = realize_4d(0, 2, &Presentation::trivial(), true).unwrap();
    let v = evaluate(&r, &reg()).unwrap().char4.unwrap();
    assert!(v.spin);
    assert_eq!((v.c1_squared().unwrap(), v.chi_h().unwrap()), (0, 2));
    assert!(matches!(realize_4d(16, 2, &Presentation::trivial(), false), Err(PlanError::NotRealizable(_))));
    assert!(matches!(realize_4d(4, 2, &Presentation::trivial(), true), Err(PlanError::NotRealizable(_))));
}

#[test]
fn enumeration_small_windows() {
    let pts = enumerate_region_4d(&Window::chi(2, 2), 0, 0, false);
    assert_eq!(pts.iter().map(|p| p.c1sq).collect::<Vec<_>>(), (0..16).collect::<Vec<_>>());
    let pts = enumerate_region_4d(&Window::chi(2, 2), 0, 0, true);
    assert_eq!(pts.len(), 1);
    assert_eq!((pts[0].c1sq, pts[0].chi_h, pts[0].witness.as_str()), (0, 2, "spin(1,1)"));
    let pts = enumerate_region_4d(&Window::chi(3, 3), 1, 0, false);
    let p = pts.iter().find(|p| p.c1sq == 19).unwrap();
    assert_eq!((p.witness.as_str(), p.c1sq_as_stated), ("Z11(13,-5)", 15));
    let w = Window {
        c1sq_min: Some(4),
        c1sq_max: Some(6),
        ..Window::chi(2, 2)
    };
    assert_eq!(enumerate_region_4d(&w, 0, 0, false).len(), 3);
}

/// Points obtained by brute force over `(e, sigma)` with the region
/// inequalities written out directly.
fn oracle_points(chi: i64, k: i64) -> Vec<i64> {
    let mut v = Vec::new();
    for e in -200..=200i64 {
        for s in -200..=200i64 {
            let ok = 2 * e + 3 * s >= 0 && (e + s) % 4 == 0 && e + s >= 8 && s <= -1;
            if ok && (e + s) / 4 + k == chi {
                v.push(2 * e + 3 * s + 8 * k);
            }
        }
    }
    v.sort();
    v
}

#[test]
fn enumeration_matches_oracle() {
    for k in 0..3 {
        for chi in 0..8 {
            let pts: Vec<i64> = enumerate_region_4d(&Window::chi(chi, chi), k as usize, 0, false)
                .iter()
                .map(|p| p.c1sq)
                .collect();
            assert_eq!(pts, oracle_points(chi, k), "chi {chi} k {k}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn enumerated_points_realize(chi in 2i64..7, g in 0usize..2, spin: bool, pick in 0usize..1000) {
        let grp = if g == 0 { Presentation::trivial() } else { group("a | a a a") };
        let k = (grp.generator_count() + grp.relator_count()) as i64;
        let pts = enumerate_region_4d(&Window::chi(chi + k, chi + k), g, g, spin);
        prop_assume!(!pts.is_empty());
        let p = &pts[pick % pts.len()];
        let r = realize_4d(p.c1sq, p.chi_h, &grp, spin).unwrap();
        let v = evaluate(&r, &reg()).unwrap().char4.unwrap();
        prop_assert_eq!(v.c1_squared().unwrap(), p.c1sq);
        prop_assert_eq!(v.chi_h().unwrap(), p.chi_h);
        prop_assert_eq!((v.e, v.sigma), (p.e, p.sigma));
    }

    #[test]
    fn realized_blowups_are_minimal_for_the_base(c13 in -100i64..100, c3 in -100i64..100, m in 4i64..8) {
        let t = Target6::simply_connected(2 * c13, 24 * m, 2 * c3);
        let r = realize(&t, &reg()).unwrap();
        let plan = plan_blowups(&r.base, &t.chern).unwrap();
        prop_assert_eq!(r.blow_up_count(), cost(&plan));
        prop_assert_eq!(r.achieved, t.chern);
    }
}
