//! Sources of (K,K,N) complete complementary codes: a DFT-based generic
//! construction, the stock binary (4,4,8) set, and user-supplied sets, all
//! gated through full verification.

use rayon::prelude::*;

use crate::code::{code_accs, CodeMatrix, CodeSet, SetKind, SetParams};
use crate::error::{Error, Result};
use crate::seq::PhaseSequence;

/// A verified complete complementary code set (K = M, zone the full width).
#[derive(Debug, Clone, PartialEq)]
pub struct CccSet {
    set: CodeSet,
}

impl CccSet {
    /// Accept an arbitrary code set after it passes [`verify_ccc`].
    pub fn try_from_code_set(set: CodeSet) -> Result<Self> {
        let report = verify_ccc(&set)?;
        if !report.pass {
            return Err(Error::Precondition(format!(
                "set is not a CCC: {}",
                report.describe()
            )));
        }
        Ok(Self {
            set: set.with_kind(SetKind::Ccc),
        })
    }

    pub fn as_code_set(&self) -> &CodeSet {
        &self.set
    }

    pub fn into_code_set(self) -> CodeSet {
        self.set
    }

    pub fn size(&self) -> usize {
        self.set.params().k
    }

    pub fn seq_len(&self) -> usize {
        self.set.params().n
    }
}

/// The (K,K,K)-CCC over K-th roots of unity with entries w^{(m-k)n}.
/// Every column of every code is a unimodular constant times a character
/// row, which is what the row-weighting result relies on.
pub fn ccc_dft(k: usize) -> Result<CccSet> {
    if k < 2 {
        return Err(Error::Domain(format!("DFT construction needs K >= 2, got {k}")));
    }
    let q = k as u32;
    let mut codes = Vec::with_capacity(k);
    for code in 0..k {
        let rows = (0..k)
            .map(|m| {
                let phases = (0..k)
                    .map(|n| ((m * n + (k - code) * n) % k) as u32)
                    .collect();
                PhaseSequence::from_phases(q, phases)
            })
            .collect::<Result<Vec<_>>>()?;
        codes.push(CodeMatrix::new(rows)?);
    }
    let params = SetParams { k, m: k, z: k, n: k };
    let set = CodeSet::new(codes, params, SetKind::Ccc)?;
    CccSet::try_from_code_set(set)
}

/// Row signs of the stock binary (4,4,8)-CCC.
const TABLE1: [[&str; 4]; 4] = [
    ["-++++++-", "--+-+-++", "-+--++-+", "+++--+++"],
    ["--+-+-++", "-++++++-", "---++---", "+-++--+-"],
    ["-+--++-+", "+++--+++", "-++++++-", "--+-+-++"],
    ["+++--+++", "-+--++-+", "++-+-+--", "+------+"],
];

fn signs_from_str(s: &str) -> Result<PhaseSequence> {
    let signs = s
        .chars()
        .map(|c| match c {
            '+' => Ok(1i8),
            '-' => Ok(-1i8),
            other => Err(Error::Parse(format!("bad sign character {other:?}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    PhaseSequence::from_signs(&signs)
}

/// The stock binary (4,4,8)-CCC.
pub fn ccc_table1() -> CccSet {
    let codes = TABLE1
        .iter()
        .map(|rows| {
            let rs = rows
                .iter()
                .map(|r| signs_from_str(r))
                .collect::<Result<Vec<_>>>()
                .expect("embedded table is well formed");
            CodeMatrix::new(rs).expect("embedded table is rectangular")
        })
        .collect();
    let params = SetParams { k: 4, m: 4, z: 8, n: 8 };
    let set = CodeSet::new(codes, params, SetKind::Ccc).expect("embedded table has valid shape");
    CccSet::try_from_code_set(set).expect("embedded table verifies as a CCC")
}

/// One located violation of the CCC conditions.
#[derive(Debug, Clone)]
pub struct CccViolation {
    pub code_a: usize,
    pub code_b: usize,
    pub shift: isize,
    pub magnitude: f64,
}

/// Outcome of checking the complete-complementarity conditions.
#[derive(Debug, Clone)]
pub struct CccVerification {
    pub pass: bool,
    /// K == M held, so the CCC conditions were actually applicable.
    pub square: bool,
    /// What the measured structure is when the set is not a CCC.
    pub classification: crate::analysis::SetClass,
    /// Worst |ACCS| over forbidden positions, per ordered pair (a <= b).
    pub pair_worst: Vec<((usize, usize), f64)>,
    pub worst: f64,
    pub violation: Option<CccViolation>,
    /// Every checked sum had an exact representation.
    pub exact: bool,
}

impl CccVerification {
    pub fn describe(&self) -> String {
        match (&self.violation, self.pass) {
            (_, true) => format!("pass (worst off-position |ACCS| {:.3e})", self.worst),
            (Some(v), false) => format!(
                "violation at codes ({}, {}) shift {}: |ACCS| = {}",
                v.code_a, v.code_b, v.shift, v.magnitude
            ),
            (None, false) => "fail".to_string(),
        }
    }
}

/// Check the CCC invariants of a code set: per-code AACS zero off-peak with
/// peak K*N, and pairwise ACCS zero at every shift.
pub fn verify_ccc(s: &CodeSet) -> Result<CccVerification> {
    let params = s.params();
    let eps = 1e-10 * (params.m * params.n) as f64;
    let pairs: Vec<(usize, usize)> = (0..params.k)
        .flat_map(|i| (i..params.k).map(move |j| (i, j)))
        .collect();
    let checked = pairs
        .par_iter()
        .map(|&(i, j)| {
            let profile = code_accs(s.code(i), s.code(j))?;
            let mut worst = 0.0f64;
            let mut violation = None;
            let mut exact = profile.is_exact();
            for (tau, v) in profile.shifts() {
                if i == j && tau == 0 {
                    let peak_ok = match v.gauss() {
                        Some((re, im)) => {
                            re == (params.m * params.n) as i64 && im == 0
                        }
                        None => {
                            exact = false;
                            (v.to_complex() - (params.m * params.n) as f64).norm() <= eps
                        }
                    };
                    if !peak_ok && violation.is_none() {
                        violation = Some(CccViolation {
                            code_a: i,
                            code_b: j,
                            shift: 0,
                            magnitude: v.abs(),
                        });
                    }
                    continue;
                }
                let zero = match v.exact_zero() {
                    Some(z) => z,
                    None => {
                        exact = false;
                        v.to_complex().norm() <= eps
                    }
                };
                if !zero {
                    let mag = v.abs();
                    worst = worst.max(mag);
                    if violation.is_none() {
                        violation = Some(CccViolation {
                            code_a: i,
                            code_b: j,
                            shift: tau,
                            magnitude: mag,
                        });
                    }
                }
            }
            Ok(((i, j), worst, violation, exact))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut report = CccVerification {
        pass: true,
        square: params.k == params.m,
        classification: crate::analysis::SetClass::Fail,
        pair_worst: Vec::with_capacity(checked.len()),
        worst: 0.0,
        violation: None,
        exact: true,
    };
    for (pair, worst, violation, exact) in checked {
        report.pair_worst.push((pair, worst));
        report.worst = report.worst.max(worst);
        report.exact &= exact;
        if let Some(v) = violation {
            report.pass = false;
            if report.violation.is_none() {
                report.violation = Some(v);
            }
        }
    }
    report.pass &= report.square;
    report.classification = crate::analysis::verify_zccs(s)?.classification;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dft_sizes_2_through_16_verify() {
        for k in 2..=16 {
            let ccc = ccc_dft(k).unwrap();
            assert_eq!(ccc.size(), k);
            assert_eq!(ccc.seq_len(), k);
        }
    }

    #[test]
    fn nonsquare_set_classifies_instead_of_failing_hard() {
        // a 1-code, 2-row MOGCS-shaped set: verify_ccc reports it non-square
        let g = crate::kernels::gcp(4).unwrap();
        let code = CodeMatrix::new(vec![g.first().clone(), g.second().clone()]).unwrap();
        let set = CodeSet::new(
            vec![code],
            SetParams { k: 1, m: 2, z: 4, n: 4 },
            SetKind::Raw,
        )
        .unwrap();
        let report = verify_ccc(&set).unwrap();
        assert!(!report.pass);
        assert!(!report.square);
        assert_eq!(report.classification, crate::analysis::SetClass::Mogcs);
    }

    #[test]
    fn dft_k2_is_binary() {
        let ccc = ccc_dft(2).unwrap();
        assert_eq!(ccc.as_code_set().alphabet_order(), 2);
    }

    #[test]
    fn dft_needs_k_at_least_2() {
        assert!(ccc_dft(1).is_err());
    }

    #[test]
    fn dft_columns_are_scaled_characters() {
        for k in [3usize, 4, 5] {
            let ccc = ccc_dft(k).unwrap();
            for code in ccc.as_code_set().codes() {
                for n in 0..k {
                    let col = code.column(n);
                    let scale = col.value(0); // m = 0 row carries the constant
                    for m in 0..k {
                        let character =
                            crate::seq::root_of_unity(k as u32, ((m * n) % k) as u32);
                        assert!((col.value(m) - scale * character).norm() < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn table1_first_row() {
        let ccc = ccc_table1();
        let signs = ccc.as_code_set().code(0).row(0).signs().unwrap();
        assert_eq!(signs, vec![-1, 1, 1, 1, 1, 1, 1, -1]);
    }

    #[test]
    fn table1_peak_is_32() {
        let ccc = ccc_table1();
        for code in ccc.as_code_set().codes() {
            let p = code_accs(code, code).unwrap();
            assert_eq!(p.peak().gauss(), Some((32, 0)));
        }
    }

    #[test]
    fn table1_cross_profiles_vanish() {
        let ccc = ccc_table1();
        let p = code_accs(ccc.as_code_set().code(0), ccc.as_code_set().code(1)).unwrap();
        for (_, v) in p.shifts() {
            assert_eq!(v.exact_zero(), Some(true));
        }
    }

    #[test]
    fn perturbed_table1_fails_with_location() {
        let ccc = ccc_table1();
        let mut signs: Vec<Vec<Vec<i8>>> = ccc
            .as_code_set()
            .codes()
            .iter()
            .map(|c| c.rows().iter().map(|r| r.signs().unwrap()).collect())
            .collect();
        signs[2][1][3] = -signs[2][1][3];
        let codes = signs
            .iter()
            .map(|rows| {
                CodeMatrix::new(
                    rows.iter()
                        .map(|r| PhaseSequence::from_signs(r).unwrap())
                        .collect(),
                )
                .unwrap()
            })
            .collect();
        let set = CodeSet::new(
            codes,
            SetParams { k: 4, m: 4, z: 8, n: 8 },
            SetKind::Raw,
        )
        .unwrap();
        let report = verify_ccc(&set).unwrap();
        assert!(!report.pass);
        let v = report.violation.expect("violation is located");
        assert!(v.code_a == 2 || v.code_b == 2);
    }
}
