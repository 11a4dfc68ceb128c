//! Property suites for the correlation identities the constructions
//! lean on: conjugate symmetry, rotation invariance, and the Kronecker
//! factorization of cross- and auto-correlations.

use proptest::prelude::*;
use zccs::{
    accs, correlation_profile, fft_correlation_profile, CorrValue, PhaseSequence,
};

fn psk_seq(q: u32, max_len: usize) -> impl Strategy<Value = PhaseSequence> {
    prop::collection::vec(0..q, 1..=max_len)
        .prop_map(move |phases| PhaseSequence::from_phases(q, phases).unwrap())
}

fn alphabet() -> impl Strategy<Value = u32> {
    prop_oneof![Just(2u32), Just(4u32)]
}

fn same_len_pair(max_len: usize) -> impl Strategy<Value = (PhaseSequence, PhaseSequence)> {
    (alphabet(), 1..=max_len).prop_flat_map(move |(q, len)| {
        (
            prop::collection::vec(0..q, len..=len),
            prop::collection::vec(0..q, len..=len),
        )
            .prop_map(move |(a, b)| {
                (
                    PhaseSequence::from_phases(q, a).unwrap(),
                    PhaseSequence::from_phases(q, b).unwrap(),
                )
            })
    })
}

proptest! {
    /// Lambda(a, a2)(-tau) = conj(Lambda(a2, a)(tau)) for all shifts.
    #[test]
    fn conjugate_symmetry((a, b) in same_len_pair(64)) {
        let l = a.len() as isize;
        for tau in -(l - 1)..l {
            let lhs = accs(&a, &b, -tau).unwrap();
            let rhs = accs(&b, &a, tau).unwrap().conj();
            prop_assert_eq!(lhs.exactly_equals(&rhs), Some(true));
        }
    }

    /// Rotating a sequence by a common phase leaves its autocorrelation
    /// untouched: exactly on the q=4 grid, within 1e-12 off-grid.
    #[test]
    fn rotation_invariance(
        seq in psk_seq(4, 32),
        quarter_turns in 0u32..4,
        theta in 0.0..std::f64::consts::TAU,
    ) {
        let base = correlation_profile(&seq, &seq).unwrap();

        let on_grid = seq.phase_rotate(quarter_turns as f64 * std::f64::consts::FRAC_PI_2);
        let rotated = correlation_profile(&on_grid, &on_grid).unwrap();
        for ((_, x), (_, y)) in base.shifts().zip(rotated.shifts()) {
            prop_assert_eq!(x.exactly_equals(y), Some(true));
        }

        let off_grid = seq.phase_rotate(theta);
        let rotated = correlation_profile(&off_grid, &off_grid).unwrap();
        for ((_, x), (_, y)) in base.shifts().zip(rotated.shifts()) {
            prop_assert!((x.to_complex() - y.to_complex()).norm() <= 1e-12 * seq.len() as f64);
        }
    }

    /// The Kronecker cross-correlation identity:
    /// Lambda(a(x)b, a2(x)b2)(Pj+k) =
    ///   Lambda(a,a2)(j) Lambda(b,b2)(k) + Lambda(a,a2)(j+1) Lambda(b,b2)(k-P).
    #[test]
    fn kronecker_cross_identity(
        (a, a2) in same_len_pair(8),
        (b, b2) in same_len_pair(8),
    ) {
        let n = a.len() as isize;
        let p = b.len() as isize;
        let c = a.kron(&b);
        let c2 = a2.kron(&b2);
        let lhs_profile = correlation_profile(&c, &c2).unwrap();
        for j in (-n + 1)..n {
            for k in 0..p {
                let mut rhs: CorrValue = accs(&a, &a2, j).unwrap()
                    .mul(&accs(&b, &b2, k).unwrap());
                rhs.add_assign(
                    &accs(&a, &a2, j + 1).unwrap().mul(&accs(&b, &b2, k - p).unwrap()),
                );
                let lhs = lhs_profile.at(p * j + k).unwrap();
                prop_assert_eq!(lhs.exactly_equals(&rhs), Some(true), "j={} k={}", j, k);
            }
        }
    }

    /// The auto-correlation specialization of the same identity.
    #[test]
    fn kronecker_auto_identity(
        (a, _) in same_len_pair(8),
        (b, _) in same_len_pair(8),
    ) {
        let n = a.len() as isize;
        let p = b.len() as isize;
        let c = a.kron(&b);
        let lhs_profile = correlation_profile(&c, &c).unwrap();
        for j in (-n + 1)..n {
            for k in 0..p {
                let mut rhs: CorrValue = accs(&a, &a, j).unwrap()
                    .mul(&accs(&b, &b, k).unwrap());
                rhs.add_assign(
                    &accs(&a, &a, j + 1).unwrap().mul(&accs(&b, &b, k - p).unwrap()),
                );
                let lhs = lhs_profile.at(p * j + k).unwrap();
                prop_assert_eq!(lhs.exactly_equals(&rhs), Some(true), "j={} k={}", j, k);
            }
        }
    }

    /// AACS peak of a unimodular sequence is its length, and the profile
    /// is conjugate-symmetric about it.
    #[test]
    fn aacs_peak_and_symmetry((a, _) in same_len_pair(64)) {
        let p = correlation_profile(&a, &a).unwrap();
        prop_assert_eq!(p.peak().gauss(), Some((a.len() as i64, 0)));
        for (tau, v) in p.shifts() {
            let mirrored = p.at(-tau).unwrap().conj();
            prop_assert_eq!(v.exactly_equals(&mirrored), Some(true));
        }
    }

    /// FFT route equals the definition sums entrywise within 1e-9 * L.
    #[test]
    fn fft_equals_naive((a, b) in same_len_pair(64)) {
        let naive = correlation_profile(&a, &b).unwrap();
        let fast = fft_correlation_profile(&a, &b).unwrap();
        let tol = 1e-9 * a.len() as f64;
        for ((_, x), (_, y)) in naive.shifts().zip(fast.shifts()) {
            prop_assert!((x.to_complex() - y.to_complex()).norm() <= tol);
        }
    }
}
