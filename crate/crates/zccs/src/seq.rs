//! Unimodular sequences, stored as exact q-ary phases whenever possible.
//!
//! A `PhaseSequence` is a length-L vector of complex numbers of modulus 1.
//! On a q-PSK alphabet (`q > 0`) the entries are kept as integer phases
//! mod q, so that products and conjugates are exact integer arithmetic;
//! `q == 0` means "general complex" and falls back to `Complex64` values.

use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::error::{Error, Result};

/// Modulus tolerance for general-complex entries.
pub const UNIT_MODULUS_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
enum Repr {
    /// Entry i equals exp(2*pi*I * phases[i] / q).
    Psk { q: u32, phases: Vec<u32> },
    /// Arbitrary unimodular complex entries.
    General(Vec<Complex64>),
}

/// A unimodular sequence with an optional exact q-PSK representation.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseSequence {
    repr: Repr,
}

/// Largest alphabet order kept in exact phase-count form; merges beyond
/// this fall back to floating complex so hostile inputs cannot force huge
/// allocations.
pub(crate) const MAX_EXACT_ALPHABET: u32 = 256;

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// lcm of two alphabet orders, if it stays within the exact-arithmetic cap.
pub(crate) fn merged_alphabet(a: u32, b: u32) -> Option<u32> {
    let l = a as u64 / gcd(a as u64, b as u64) * b as u64;
    (l <= MAX_EXACT_ALPHABET as u64).then_some(l as u32)
}

pub(crate) fn root_of_unity(q: u32, p: u32) -> Complex64 {
    Complex64::from_polar(1.0, TAU * p as f64 / q as f64)
}

impl PhaseSequence {
    /// Build from integer phases mod `q` (q-PSK alphabet, `q >= 1`).
    pub fn from_phases(q: u32, phases: Vec<u32>) -> Result<Self> {
        if q == 0 {
            return Err(Error::Domain("alphabet order must be >= 1".into()));
        }
        if phases.is_empty() {
            return Err(Error::Domain("sequence length must be >= 1".into()));
        }
        if let Some(&p) = phases.iter().find(|&&p| p >= q) {
            return Err(Error::Domain(format!("phase {p} out of range for q={q}")));
        }
        Ok(Self {
            repr: Repr::Psk { q, phases },
        })
    }

    /// Build a binary (q = 2) sequence from +1/-1 signs.
    pub fn from_signs(signs: &[i8]) -> Result<Self> {
        if signs.is_empty() {
            return Err(Error::Domain("sequence length must be >= 1".into()));
        }
        let phases = signs
            .iter()
            .map(|&s| match s {
                1 => Ok(0u32),
                -1 => Ok(1u32),
                other => Err(Error::Domain(format!("sign must be +1 or -1, got {other}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            repr: Repr::Psk { q: 2, phases },
        })
    }

    /// Build a general-complex sequence; every entry must have modulus 1
    /// within [`UNIT_MODULUS_TOL`].
    pub fn try_from_complex(values: Vec<Complex64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Domain("sequence length must be >= 1".into()));
        }
        for (i, v) in values.iter().enumerate() {
            let norm = v.norm();
            if !norm.is_finite() || (norm - 1.0).abs() > UNIT_MODULUS_TOL {
                return Err(Error::Domain(format!(
                    "entry {i} has modulus {norm} (want 1)"
                )));
            }
        }
        Ok(Self {
            repr: Repr::General(values),
        })
    }

    /// The all-ones sequence on the trivial alphabet q = 1.
    pub fn all_ones(len: usize) -> Self {
        Self {
            repr: Repr::Psk {
                q: 1,
                phases: vec![0; len],
            },
        }
    }

    pub fn len(&self) -> usize {
        match &self.repr {
            Repr::Psk { phases, .. } => phases.len(),
            Repr::General(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Alphabet order q; 0 encodes "general complex".
    pub fn alphabet_order(&self) -> u32 {
        match &self.repr {
            Repr::Psk { q, .. } => *q,
            Repr::General(_) => 0,
        }
    }

    /// Integer phase of entry `i` when on a q-PSK alphabet.
    pub fn phase(&self, i: usize) -> Option<u32> {
        match &self.repr {
            Repr::Psk { phases, .. } => phases.get(i).copied(),
            Repr::General(_) => None,
        }
    }

    pub(crate) fn phases(&self) -> Option<(u32, &[u32])> {
        match &self.repr {
            Repr::Psk { q, phases } => Some((*q, phases)),
            Repr::General(_) => None,
        }
    }

    /// Entry `i` as a complex number.
    pub fn value(&self, i: usize) -> Complex64 {
        match &self.repr {
            Repr::Psk { q, phases } => root_of_unity(*q, phases[i]),
            Repr::General(v) => v[i],
        }
    }

    /// All entries as complex numbers.
    pub fn values(&self) -> Vec<Complex64> {
        (0..self.len()).map(|i| self.value(i)).collect()
    }

    /// Signs of a binary sequence (+1/-1), if q divides 2.
    pub fn signs(&self) -> Option<Vec<i8>> {
        match &self.repr {
            Repr::Psk { q: 1, phases } => Some(vec![1; phases.len()]),
            Repr::Psk { q: 2, phases } => {
                Some(phases.iter().map(|&p| if p == 0 { 1 } else { -1 }).collect())
            }
            _ => None,
        }
    }

    /// Re-express on a coarser-to-finer alphabet `q2` (a multiple of q).
    pub fn with_alphabet(&self, q2: u32) -> Result<Self> {
        match &self.repr {
            Repr::Psk { q, phases } => {
                if q2 == 0 || q2 % q != 0 {
                    return Err(Error::Domain(format!(
                        "cannot re-express q={q} sequence on alphabet q={q2}"
                    )));
                }
                let f = q2 / q;
                Ok(Self {
                    repr: Repr::Psk {
                        q: q2,
                        phases: phases.iter().map(|&p| p * f).collect(),
                    },
                })
            }
            Repr::General(_) => Err(Error::Domain(
                "general-complex sequence has no q-ary form".into(),
            )),
        }
    }

    /// Kronecker product `self (x) other`, length N*P. The alphabet order of
    /// the result is the lcm of the input orders (0 if either is general).
    pub fn kron(&self, other: &PhaseSequence) -> PhaseSequence {
        match (&self.repr, &other.repr) {
            (Repr::Psk { q: qa, phases: pa }, Repr::Psk { q: qb, phases: pb })
                if merged_alphabet(*qa, *qb).is_some() =>
            {
                let q = merged_alphabet(*qa, *qb).expect("guarded above");
                let (fa, fb) = (q / qa, q / qb);
                let mut phases = Vec::with_capacity(pa.len() * pb.len());
                for &x in pa {
                    for &y in pb {
                        phases.push((x * fa + y * fb) % q);
                    }
                }
                PhaseSequence {
                    repr: Repr::Psk { q, phases },
                }
            }
            _ => {
                let mut values = Vec::with_capacity(self.len() * other.len());
                for i in 0..self.len() {
                    let a = self.value(i);
                    for j in 0..other.len() {
                        values.push(a * other.value(j));
                    }
                }
                PhaseSequence {
                    repr: Repr::General(values),
                }
            }
        }
    }

    /// Multiply every entry by exp(i*theta). When theta lands on the
    /// sequence's own phase grid the result stays exact; otherwise it
    /// degrades to general complex.
    pub fn phase_rotate(&self, theta: f64) -> PhaseSequence {
        if let Repr::Psk { q, phases } = &self.repr {
            let steps = theta * *q as f64 / TAU;
            let rounded = steps.round();
            if (steps - rounded).abs() < 1e-12 {
                let t = rounded.rem_euclid(*q as f64) as u64 % *q as u64;
                return PhaseSequence {
                    repr: Repr::Psk {
                        q: *q,
                        phases: phases
                            .iter()
                            .map(|&p| ((p as u64 + t) % *q as u64) as u32)
                            .collect(),
                    },
                };
            }
        }
        let rot = Complex64::from_polar(1.0, theta);
        PhaseSequence {
            repr: Repr::General((0..self.len()).map(|i| self.value(i) * rot).collect()),
        }
    }

    /// Negate every entry (multiplication by -1); exact for any alphabet
    /// that can host the sign flip.
    pub fn negate(&self) -> PhaseSequence {
        match &self.repr {
            Repr::Psk { q, phases } => {
                let q2 = if q % 2 == 0 { Some(*q) } else { q.checked_mul(2) };
                match q2 {
                    Some(q2) => {
                        let f = (q2 / q) as u64;
                        PhaseSequence {
                            repr: Repr::Psk {
                                q: q2,
                                phases: phases
                                    .iter()
                                    .map(|&p| {
                                        ((p as u64 * f + q2 as u64 / 2) % q2 as u64) as u32
                                    })
                                    .collect(),
                            },
                        }
                    }
                    None => PhaseSequence {
                        repr: Repr::General((0..self.len()).map(|i| -self.value(i)).collect()),
                    },
                }
            }
            Repr::General(v) => PhaseSequence {
                repr: Repr::General(v.iter().map(|x| -x).collect()),
            },
        }
    }

    /// Reverse the order of entries.
    pub fn reversed(&self) -> PhaseSequence {
        match &self.repr {
            Repr::Psk { q, phases } => PhaseSequence {
                repr: Repr::Psk {
                    q: *q,
                    phases: phases.iter().rev().copied().collect(),
                },
            },
            Repr::General(v) => PhaseSequence {
                repr: Repr::General(v.iter().rev().copied().collect()),
            },
        }
    }
}
