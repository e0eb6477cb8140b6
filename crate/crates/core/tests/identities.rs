use trisum_core::identities::*;
use trisum_core::local::*;
use trisum_core::reductions::{reduce, verify_reduction};
use trisum_core::TriangularTriple;

#[test]
fn theorem1_table_small_n() {
    for t in TABLE_1 {
        for n in 1..=40 {
            assert!(theorem1_check(t, n).unwrap(), "{t:?} n={n}");
        }
    }
}

#[test]
fn theorem2_table_small_n() {
    for t in TABLE_2 {
        for n in 1..=40 {
            assert!(theorem2_check(t, n).unwrap(), "{t:?} n={n}");
        }
    }
}

#[test]
fn theorem3_even_n_and_odd_failures() {
    for t in THM3_TRIPLES {
        for n in (2..=80).step_by(2) {
            assert!(theorem3_check(t, n).unwrap(), "{t:?} n={n}");
        }
        // the identity is not claimed at odd n, and it does fail there
        let odd_failures = (1..=80)
            .step_by(2)
            .filter(|&n| {
                let (l, r) = theorem_sides(TheoremId::T3, t, n, true).unwrap();
                l != r
            })
            .count();
        assert!(odd_failures > 0, "{t:?}");
    }
}

#[test]
fn theorem4_outside_one_mod_three() {
    for n in (1..=150).filter(|n| n % 3 != 1) {
        assert!(theorem4_check(n).unwrap(), "n={n}");
    }
    let (l, r) = theorem_sides(TheoremId::T4, [1, 1, 27], 1, true).unwrap();
    assert_ne!(l, r);
}

#[test]
fn bijections_small_families() {
    for v in Lemma31::ALL {
        for m in (1..=60).filter(|&m| v.admits(m)) {
            assert!(
                psi_instance(v, m).unwrap().check().unwrap().holds(),
                "{v:?} m={m}"
            );
        }
    }
    for k in 0..3 {
        for m in (8..=64).step_by(8) {
            assert!(
                chi_instance(k, m).unwrap().check().unwrap().holds(),
                "chi{k} m={m}"
            );
        }
    }
    for f in GenusFixture::all() {
        for m in 0..=10 {
            for inst in f.phi_instances(m) {
                assert!(
                    inst.check().unwrap().holds(),
                    "{:?} {} m={m}",
                    f.triple,
                    inst.name
                );
            }
        }
    }
    for n in 1..=30 {
        assert!(thm4_phi_instance(n).check().unwrap().holds(), "n={n}");
    }
}

#[test]
fn siegel_identities_small_m() {
    for f in GenusFixture::all() {
        for m in 0..=30 {
            assert!(
                f.siegel_identity_check(m).unwrap().holds(),
                "{:?} m={m}",
                f.triple
            );
        }
    }
}

#[test]
fn lemmas_small_m() {
    for v in Lemma31::ALL {
        for m in (1..=400).filter(|&m| v.admits(m)) {
            assert!(lemma31_check(v, m).unwrap());
        }
    }
    for (a, b) in LEMMA32_EQUALITY_PAIRS {
        assert_eq!(lemma32_counterexample_search(a, b, 400).unwrap(), None);
    }
}

#[test]
fn one_one_six() {
    let tt = TriangularTriple::new(1, 1, 6).unwrap();
    let f = tt.diagonal_form();
    for n in 1..=300 {
        assert!(representability_check_116(n).unwrap(), "n={n}");
        assert!(siegel_ratio_check(n).unwrap(), "n={n}");
        let diff = f.count(8 * n + 8).unwrap() as i128 - f.count(2 * n + 2).unwrap() as i128;
        assert_eq!(tt.count_direct(n).unwrap() as i128, diff);
    }
    let formula = reduce(&tt).unwrap();
    assert!(verify_reduction(&tt, 100).unwrap().all_pass(), "{formula}");
}
