//! End-shift conditions on seed sequences: the four-term sum that zeroes
//! the autocorrelation at shift P-2, and the three-equation system that
//! pins the shift P-3 down to a unit.

use num_complex::Complex64;

use crate::corr::{accs, CorrValue};
use crate::error::{Error, Result};
use crate::seq::PhaseSequence;

/// What the tail of a seed sequence's autocorrelation looks like.
#[derive(Debug, Clone)]
pub struct TailReport {
    pub len: usize,
    /// b_0 + b_1 + b_{P-1} + b_{P-2} = +/-2.
    pub four_term_holds: bool,
    /// The three four-term equations that force |Lambda(P-3)| = 1; only
    /// evaluated for binary seeds of length >= 6.
    pub three_system_holds: Option<bool>,
    pub lambda_p2: CorrValue,
    pub lambda_p3: CorrValue,
}

impl TailReport {
    pub fn lambda_p2_is_zero(&self) -> bool {
        self.lambda_p2.is_zero(1e-10 * self.len as f64)
    }
}

fn four_term(vals: [Complex64; 4]) -> bool {
    let s: Complex64 = vals.into_iter().sum();
    (s - 2.0).norm() <= 1e-9 || (s + 2.0).norm() <= 1e-9
}

/// Evaluate the end-shift predicates on a seed of length P >= 4.
pub fn tail_conditions(b: &PhaseSequence) -> Result<TailReport> {
    let p = b.len();
    if p < 4 {
        return Err(Error::Domain(format!(
            "tail conditions need length >= 4, got {p}"
        )));
    }
    let v = |i: usize| b.value(i);
    let four_term_holds = four_term([v(0), v(1), v(p - 1), v(p - 2)]);
    let three_system_holds = if p >= 6 && b.signs().is_some() {
        let s = b.signs().unwrap();
        let t = |a: i8, b: i8, c: i8, d: i8| (a + b + c + d).abs() == 2;
        Some(
            t(s[0], s[1], s[p - 2], s[p - 1])
                && t(s[0], s[1], s[p - 3], s[p - 2])
                && t(s[1], s[2], s[p - 2], s[p - 1]),
        )
    } else {
        None
    };
    let lambda_p2 = accs(b, b, (p - 2) as isize)?;
    let lambda_p3 = accs(b, b, (p - 3) as isize)?;
    Ok(TailReport {
        len: p,
        four_term_holds,
        three_system_holds,
        lambda_p2,
        lambda_p3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::barker;

    fn pm(signs: &[i8]) -> PhaseSequence {
        PhaseSequence::from_signs(signs).unwrap()
    }

    #[test]
    fn four_term_sum_zeroes_shift_p_minus_2() {
        let b = pm(&[1, 1, -1, 1]);
        let r = tail_conditions(&b).unwrap();
        assert!(r.four_term_holds);
        assert!(r.lambda_p2_is_zero());
    }

    #[test]
    fn all_ones_fails_four_term() {
        let b = pm(&[1, 1, 1, 1]);
        let r = tail_conditions(&b).unwrap();
        assert!(!r.four_term_holds);
        assert_eq!(r.lambda_p2.gauss(), Some((2, 0)));
    }

    #[test]
    fn barker5_tail_magnitudes() {
        let b = barker(5).unwrap();
        let r = tail_conditions(b.sequence()).unwrap();
        assert!(r.lambda_p2.abs() <= 1.0);
        assert!(r.lambda_p3.abs() <= 1.0);
    }

    #[test]
    fn too_short_is_domain_error() {
        assert!(tail_conditions(&pm(&[1, 1, -1])).is_err());
    }

    #[test]
    fn four_term_equivalence_exhaustive() {
        // Over all binary sequences of lengths 4..=6, the four-term sum
        // condition holds exactly when Lambda(P-2) = 0.
        for p in 4usize..=6 {
            for mask in 0..(1u32 << p) {
                let signs: Vec<i8> =
                    (0..p).map(|i| if mask >> i & 1 == 0 { 1 } else { -1 }).collect();
                let b = pm(&signs);
                let r = tail_conditions(&b).unwrap();
                assert_eq!(
                    r.four_term_holds,
                    r.lambda_p2_is_zero(),
                    "p={p} signs={signs:?}"
                );
            }
        }
    }

    #[test]
    fn three_system_implies_unit_lambda_p3() {
        for mask in 0..(1u32 << 7) {
            let signs: Vec<i8> =
                (0..7).map(|i| if mask >> i & 1 == 0 { 1 } else { -1 }).collect();
            let r = tail_conditions(&pm(&signs)).unwrap();
            if r.three_system_holds == Some(true) {
                assert!(r.lambda_p2_is_zero());
                assert_eq!(r.lambda_p3.abs(), 1.0, "signs={signs:?}");
            }
        }
    }
}
