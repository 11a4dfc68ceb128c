//! Barker sequences and their sign/reversal transforms.

use crate::corr::correlation_profile;
use crate::error::{Error, Result};
use crate::seq::PhaseSequence;

/// The binary lengths for which a Barker sequence is known to exist.
pub const BARKER_LENGTHS: [usize; 7] = [2, 3, 4, 5, 7, 11, 13];

/// Canonical representative per length; every other Barker sequence of the
/// same length is reachable through [`BarkerTransform`] compositions.
const CANONICAL: [&[i8]; 7] = [
    &[1, 1],
    &[1, 1, -1],
    &[1, 1, -1, 1],
    &[1, 1, 1, -1, 1],
    &[1, 1, 1, -1, -1, 1, -1],
    &[1, 1, 1, -1, -1, -1, 1, -1, -1, 1, -1],
    &[1, 1, 1, 1, 1, -1, -1, 1, 1, -1, 1, -1, 1],
];

/// A binary sequence whose off-peak autocorrelation magnitudes are all 0 or 1.
#[derive(Debug, Clone, PartialEq)]
pub struct BarkerSequence(PhaseSequence);

impl BarkerSequence {
    pub fn sequence(&self) -> &PhaseSequence {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn signs(&self) -> Vec<i8> {
        self.0.signs().expect("Barker sequences are binary")
    }
}

pub fn barker_lengths() -> &'static [usize] {
    &BARKER_LENGTHS
}

/// The canonical Barker sequence of length P in {2, 3, 4, 5, 7, 11, 13}.
pub fn barker(p: usize) -> Result<BarkerSequence> {
    match BARKER_LENGTHS.iter().position(|&l| l == p) {
        Some(i) => Ok(BarkerSequence(PhaseSequence::from_signs(CANONICAL[i])?)),
        None => Err(Error::Domain(format!(
            "no Barker sequence of length {p}; legal lengths are {BARKER_LENGTHS:?}"
        ))),
    }
}

/// True iff every off-peak autocorrelation magnitude of a binary sequence
/// is 0 or 1 (exact integer check).
pub fn is_barker(a: &PhaseSequence) -> bool {
    if a.alphabet_order() != 2 {
        return false;
    }
    let profile = correlation_profile(a, a).expect("autocorrelation of a valid sequence");
    let ok = profile.shifts().all(|(tau, v)| {
        if tau == 0 {
            return true;
        }
        matches!(v.gauss(), Some((re, 0)) if re.abs() <= 1)
    });
    ok
}

/// The sequence-level transforms under which Barker sequences are unique
/// for their length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BarkerTransform {
    /// gamma_i -> -gamma_i
    Negate,
    /// gamma_i -> gamma_{N-1-i}
    Reverse,
    /// gamma_i -> (-1)^i gamma_i
    AlternateNegate,
}

/// Apply one transform; the result is again a Barker sequence.
pub fn barker_transform(g: &BarkerSequence, t: BarkerTransform) -> BarkerSequence {
    let out = match t {
        BarkerTransform::Negate => g.0.negate(),
        BarkerTransform::Reverse => g.0.reversed(),
        BarkerTransform::AlternateNegate => {
            let signs: Vec<i8> = g
                .signs()
                .iter()
                .enumerate()
                .map(|(i, &s)| if i % 2 == 0 { s } else { -s })
                .collect();
            PhaseSequence::from_signs(&signs).expect("signs stay valid")
        }
    };
    debug_assert!(is_barker(&out));
    BarkerSequence(out)
}

/// Left-to-right Kronecker product of canonical Barker sequences; length is
/// the product of the factors.
pub fn composite_barker(factors: &[usize]) -> Result<PhaseSequence> {
    if factors.is_empty() {
        return Err(Error::Domain("composite seed needs at least one factor".into()));
    }
    let mut acc: Option<PhaseSequence> = None;
    for &p in factors {
        let b = barker(p)?;
        acc = Some(match acc {
            None => b.sequence().clone(),
            Some(a) => a.kron(b.sequence()),
        });
    }
    Ok(acc.expect("non-empty factors"))
}
