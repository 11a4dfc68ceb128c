//! End-to-end invariants of the Kronecker constructions: out-of-zone
//! structure under Barker seeds, weighted-column autocorrelations, set
//! expansion, and pair constructions at composite lengths.

use zccs::analysis::{set_size_bound_check, verify_zccs};
use zccs::{
    barker, barker_weight, build_zccs, build_zcp, ccc_dft, code_accs, correlation_profile,
    expand_set, gcp, hadamard, CodeMatrix, CodeSet, SetKind, SetParams,
};

#[test]
fn barker_seed_offzone_magnitudes_are_zero_or_kn() {
    for k in [2usize, 3, 4, 5] {
        for p in [3usize, 5, 7] {
            let ccc = ccc_dft(k).unwrap();
            let b = barker(p).unwrap();
            let z = build_zccs(&ccc, b.sequence()).unwrap();
            let kn = (k * k) as f64;
            for code in z.codes() {
                let profile = code_accs(code, code).unwrap();
                for (tau, v) in profile.shifts() {
                    if tau == 0 {
                        continue;
                    }
                    let mag = v.abs();
                    assert!(
                        mag < 1e-9 || (mag - kn).abs() < 1e-9,
                        "K={k} P={p} tau={tau}: |AACS| = {mag}"
                    );
                }
            }
        }
    }
}

#[test]
fn edge_of_zone_magnitude_is_kn() {
    // |Lambda(Z)(P-1)| = K*N because the seed's end shift has modulus 1
    for (k, p) in [(3usize, 5usize), (4, 3), (5, 7)] {
        let seed = barker(p).unwrap();
        let z = build_zccs(&ccc_dft(k).unwrap(), seed.sequence()).unwrap();
        let bp = correlation_profile(seed.sequence(), seed.sequence()).unwrap();
        let expect = bp.at((p - 1) as isize).unwrap().scaled((k * k) as i64);
        for code in z.codes() {
            let profile = code_accs(code, code).unwrap();
            let v = profile.at((p - 1) as isize).unwrap();
            assert_eq!(v.exactly_equals(&expect), Some(true), "K={k} P={p}");
            assert!((v.abs() - (k * k) as f64).abs() < 1e-9, "K={k} P={p}");
        }
    }
}

#[test]
fn dft3_with_barker5_is_3_3_11_15() {
    let z = build_zccs(&ccc_dft(3).unwrap(), barker(5).unwrap().sequence()).unwrap();
    assert_eq!(z.params(), SetParams { k: 3, m: 3, z: 11, n: 15 });
    let v = verify_zccs(&z).unwrap();
    assert!(v.pass);
    assert_eq!(v.z_measured, 11);
}

#[test]
fn gcp10_with_barker7_pair() {
    let g = gcp(10).unwrap();
    let b = barker(7).unwrap();
    let (s, t) = build_zcp(&g, b.sequence());
    assert_eq!(s.len(), 70);
    let ps = correlation_profile(&s, &s).unwrap();
    let pt = correlation_profile(&t, &t).unwrap();
    // type-II zone of width 70 - 7 + 1 = 64: sums vanish for 6 < |tau| < 70
    for tau in 7..70isize {
        let mut sum = ps.at(tau).unwrap().clone();
        sum.add_assign(pt.at(tau).unwrap());
        assert_eq!(sum.exact_zero(), Some(true), "tau={tau}");
    }
    // at the zone edge |tau| = P-1 the sum is 2N * Lambda(b)(6), magnitude 20
    let mut edge = ps.at(6).unwrap().clone();
    edge.add_assign(pt.at(6).unwrap());
    assert_eq!(edge.exact_int_magnitude(), Some(20));
}

#[test]
fn weighting_preserves_verification() {
    for k in [3usize, 5] {
        let z = build_zccs(&ccc_dft(k).unwrap(), barker(3).unwrap().sequence()).unwrap();
        let w = barker_weight(&z, &barker(k).unwrap()).unwrap();
        let before = verify_zccs(&z).unwrap();
        let after = verify_zccs(&w).unwrap();
        assert_eq!(before.pass, after.pass);
        assert_eq!(before.z_measured, after.z_measured);
    }
}

#[test]
fn weighted_columns_inherit_the_weight_profile() {
    for k in [3usize, 5, 7] {
        let z = build_zccs(&ccc_dft(k).unwrap(), barker(3).unwrap().sequence()).unwrap();
        let gamma = barker(k).unwrap();
        let w = barker_weight(&z, &gamma).unwrap();
        let gp = correlation_profile(gamma.sequence(), gamma.sequence()).unwrap();
        for code in w.codes() {
            for n in 0..code.row_len() {
                let col = code.column(n);
                let cp = correlation_profile(&col, &col).unwrap();
                for (tau, v) in cp.shifts() {
                    let want = gp.at(tau).unwrap().gauss().unwrap().0.abs();
                    assert_eq!(
                        v.exact_int_magnitude(),
                        Some(want),
                        "K={k} col={n} tau={tau}"
                    );
                }
            }
        }
    }
}

#[test]
fn expansion_reaches_the_size_bound_when_r_equals_p() {
    // r = P = 4 family on a (2,2,2)-CCC: 8 = 2 * (8 - 5 + 1)
    let z = expand_set(&ccc_dft(2).unwrap(), &hadamard(4).unwrap()).unwrap();
    let bound = set_size_bound_check(&z).unwrap();
    assert_eq!(bound.k, 8);
    assert!(bound.optimal);
}

#[test]
fn golay_members_have_envelope_pmepr_at_most_two() {
    // complementarity caps the envelope peak of either member at twice
    // the mean power, a tight sanity check on the numeric PMEPR path
    for n in [2usize, 4, 8, 10, 16, 20, 26, 32, 40, 52, 64] {
        let g = gcp(n).unwrap();
        for member in [g.first(), g.second()] {
            let v = zccs::pmepr_numeric(member, 16).unwrap();
            assert!(v <= 2.0 + 1e-9, "N={n}: envelope PMEPR {v}");
            assert!(v >= 1.0 - 1e-12);
        }
    }
}

#[test]
fn mixed_alphabet_kron_lands_on_lcm() {
    let z = build_zccs(&ccc_dft(4).unwrap(), barker(3).unwrap().sequence()).unwrap();
    assert_eq!(z.alphabet_order(), 4);
    let z = build_zccs(&ccc_dft(3).unwrap(), barker(3).unwrap().sequence()).unwrap();
    assert_eq!(z.alphabet_order(), 6);
    assert!(verify_zccs(&z).unwrap().pass);
}

#[test]
fn zcs_rows_need_not_be_square() {
    // stack two Golay pairs into a 4-row complementary set of length 8
    let g = gcp(8).unwrap();
    let rows = vec![
        g.first().clone(),
        g.second().clone(),
        g.second().reversed(),
        g.first().reversed().negate(),
    ];
    let cs = CodeMatrix::new(rows).unwrap();
    let z = zccs::build_zcs(&cs, barker(4).unwrap().sequence()).unwrap();
    let set = CodeSet::new(
        vec![z],
        SetParams { k: 1, m: 4, z: 8 * 4 - 4 + 1, n: 32 },
        SetKind::TypeIiZccs,
    )
    .unwrap();
    let v = verify_zccs(&set).unwrap();
    assert!(v.pass, "{}", v.describe());
}
