//! Figures of merit and verification: measured zero-correlation zones,
//! the set-size bound, correlation-sum PMEPR bounds and oversampled
//! envelope PMEPR, and length-coverage enumeration.

use num_complex::Complex64;
use num_rational::Ratio;
use rayon::prelude::*;

use crate::code::{code_accs, CodeSet, SetParams};
use crate::corr::correlation_profile;
use crate::error::{Error, Result};
use crate::kernels::gcp_length_supported;
use crate::seq::PhaseSequence;

/// Default envelope oversampling factor.
pub const DEFAULT_OVERSAMPLING: usize = 16;

fn zone_eps(params: SetParams) -> f64 {
    1e-10 * (params.m * params.n) as f64
}

/// How the measured correlation structure classifies a set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetClass {
    Ccc,
    Mogcs,
    TypeIiZccs,
    Fail,
}

impl std::fmt::Display for SetClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SetClass::Ccc => "CCC",
            SetClass::Mogcs => "MOGCS",
            SetClass::TypeIiZccs => "type-II ZCCS",
            SetClass::Fail => "fail",
        };
        f.write_str(s)
    }
}

/// Result of measuring the type-II zero-correlation structure of a set.
#[derive(Debug, Clone)]
pub struct ZccsVerification {
    /// Peak, cross-at-zero and declared-zone conditions all hold.
    pub pass: bool,
    /// Largest Z such that every pair is zero for N-Z < |tau| < N.
    pub z_measured: usize,
    pub declared: SetParams,
    /// Every code has AACS peak N*M.
    pub peak_ok: bool,
    /// Every distinct pair has zero ACCS at shift 0.
    pub cross_zero_ok: bool,
    /// Worst |ACCS| inside the declared zone, with its location.
    pub worst_offzone: f64,
    pub worst_offzone_at: Option<(usize, usize, isize)>,
    /// All decisions were exact integer arithmetic.
    pub exact: bool,
    pub classification: SetClass,
}

impl ZccsVerification {
    pub fn describe(&self) -> String {
        format!(
            "{} declared {} measured Z={}{}",
            if self.pass { "pass" } else { "FAIL" },
            self.declared,
            self.z_measured,
            if self.exact { " (exact)" } else { "" }
        )
    }
}

/// Measure the type-II zero-correlation structure of a code set against
/// its declared (K, M, Z, N).
pub fn verify_zccs(s: &CodeSet) -> Result<ZccsVerification> {
    let params = s.params();
    let eps = zone_eps(params);
    let n = params.n as isize;

    struct PairScan {
        i: usize,
        j: usize,
        peak_ok: bool,
        cross_zero_ok: bool,
        /// largest |tau| >= 1 with a nonzero value, if any
        max_nonzero_shift: usize,
        exact: bool,
        zone_worst: f64,
        zone_worst_at: Option<isize>,
    }

    let pairs: Vec<(usize, usize)> = (0..params.k)
        .flat_map(|i| (i..params.k).map(move |j| (i, j)))
        .collect();
    let scans = pairs
        .par_iter()
        .map(|&(i, j)| {
            let profile = code_accs(s.code(i), s.code(j))?;
            let mut scan = PairScan {
                i,
                j,
                peak_ok: true,
                cross_zero_ok: true,
                max_nonzero_shift: 0,
                exact: true,
                zone_worst: 0.0,
                zone_worst_at: None,
            };
            for (tau, v) in profile.shifts() {
                let zero = match v.exact_zero() {
                    Some(z) => z,
                    None => {
                        scan.exact = false;
                        v.to_complex().norm() <= eps
                    }
                };
                if tau == 0 {
                    if i == j {
                        let want = (params.n * params.m) as i64;
                        scan.peak_ok = match v.gauss() {
                            Some((re, im)) => re == want && im == 0,
                            None => {
                                scan.exact = false;
                                (v.to_complex() - want as f64).norm() <= eps
                            }
                        };
                    } else {
                        scan.cross_zero_ok = zero;
                    }
                    continue;
                }
                if !zero {
                    scan.max_nonzero_shift = scan.max_nonzero_shift.max(tau.unsigned_abs());
                    if tau.unsigned_abs() as isize > n - params.z as isize {
                        let mag = v.abs();
                        if mag > scan.zone_worst {
                            scan.zone_worst = mag;
                            scan.zone_worst_at = Some(tau);
                        }
                    }
                }
            }
            Ok(scan)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut out = ZccsVerification {
        pass: true,
        z_measured: params.n,
        declared: params,
        peak_ok: true,
        cross_zero_ok: true,
        worst_offzone: 0.0,
        worst_offzone_at: None,
        exact: true,
        classification: SetClass::Fail,
    };
    let mut max_nonzero_shift = 0usize;
    for scan in scans {
        out.peak_ok &= scan.peak_ok;
        out.cross_zero_ok &= scan.cross_zero_ok;
        out.exact &= scan.exact;
        max_nonzero_shift = max_nonzero_shift.max(scan.max_nonzero_shift);
        if scan.zone_worst > out.worst_offzone {
            out.worst_offzone = scan.zone_worst;
            out.worst_offzone_at = scan.zone_worst_at.map(|tau| (scan.i, scan.j, tau));
        }
    }
    out.z_measured = params.n - max_nonzero_shift;
    out.pass = out.peak_ok && out.cross_zero_ok && out.z_measured >= params.z;
    out.classification = if !out.peak_ok || !out.cross_zero_ok {
        SetClass::Fail
    } else if out.z_measured == params.n {
        if params.k == params.m {
            SetClass::Ccc
        } else {
            SetClass::Mogcs
        }
    } else {
        SetClass::TypeIiZccs
    };
    Ok(out)
}

/// Per-code comparison of the near-end shifts against the seed scaling
/// law: Lambda(Z_i)(tau) = K * N * Lambda(b)(tau) for 0 < tau < P.
#[derive(Debug, Clone)]
pub struct OutOfZoneReport {
    pub seed_len: usize,
    pub scale: i64,
    pub per_code: Vec<OutOfZoneCode>,
    pub all_match: bool,
}

#[derive(Debug, Clone)]
pub struct OutOfZoneCode {
    pub code: usize,
    pub matches: bool,
    pub worst_deviation: f64,
}

pub fn out_of_zone_profile(s: &CodeSet, b: &PhaseSequence) -> Result<OutOfZoneReport> {
    let params = s.params();
    let p = b.len();
    if params.k != params.m
        || params.n % p != 0
        || params.z != params.n - p + 1
    {
        return Err(Error::Domain(format!(
            "set {} was not built from a square CCC with a length-{p} seed",
            params
        )));
    }
    let base_n = params.n / p;
    let scale = (params.m * base_n) as i64;
    let eps = zone_eps(params);
    let seed_profile = correlation_profile(b, b)?;
    let per_code = s
        .codes()
        .par_iter()
        .enumerate()
        .map(|(idx, code)| {
            let profile = code_accs(code, code)?;
            let mut matches = true;
            let mut worst = 0.0f64;
            for tau in 1..p as isize {
                let expect = seed_profile
                    .at(tau)
                    .expect("tau < P is in range")
                    .scaled(scale);
                let got = profile.at(tau).expect("tau < NP is in range");
                let ok = match got.exactly_equals(&expect) {
                    Some(eq) => eq,
                    None => (got.to_complex() - expect.to_complex()).norm() <= eps,
                };
                let dev = (got.to_complex() - expect.to_complex()).norm();
                worst = worst.max(dev);
                matches &= ok;
            }
            Ok(OutOfZoneCode {
                code: idx,
                matches,
                worst_deviation: worst,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OutOfZoneReport {
        seed_len: p,
        scale,
        all_match: per_code.iter().all(|c| c.matches),
        per_code,
    })
}

/// The correlation-sum PMEPR bound: (1/N) * sum over all shifts of
/// |Lambda(a)(tau)|.
pub fn pmepr_bound(a: &PhaseSequence) -> f64 {
    let profile = correlation_profile(a, a).expect("autocorrelation always well formed");
    profile.abs_sum() / a.len() as f64
}

/// Exact rational form of the bound, when every shift has an exact
/// integer magnitude (binary alphabets always do).
pub fn pmepr_bound_exact(a: &PhaseSequence) -> Option<Ratio<i64>> {
    let profile = correlation_profile(a, a).expect("autocorrelation always well formed");
    profile
        .exact_abs_sum()
        .map(|sum| Ratio::new(sum, a.len() as i64))
}

/// Oversampled envelope PMEPR: the peak of |sum_k a_k e^{2 pi I k t}|^2 / N
/// over N*oversampling uniform samples of the symbol. Needs oversampling
/// of at least 4 to trust the peak.
pub fn pmepr_numeric(a: &PhaseSequence, oversampling: usize) -> Result<f64> {
    if oversampling < 4 {
        return Err(Error::Domain(format!(
            "oversampling must be >= 4, got {oversampling}"
        )));
    }
    let n = a.len();
    let grid = n * oversampling;
    let mut buf: Vec<Complex64> = a.values();
    buf.resize(grid, Complex64::ZERO);
    let mut planner = rustfft::FftPlanner::<f64>::new();
    planner.plan_fft_forward(grid).process(&mut buf);
    let peak = buf.iter().map(|v| v.norm_sqr()).fold(0.0, f64::max);
    Ok(peak / n as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Row,
    Column,
}

impl std::fmt::Display for Axis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Axis::Row => "row",
            Axis::Column => "column",
        })
    }
}

/// PMEPR of one row or column sequence.
#[derive(Debug, Clone)]
pub struct PmeprEntry {
    pub code: usize,
    pub index: usize,
    pub len: usize,
    pub bound: f64,
    pub bound_exact: Option<Ratio<i64>>,
    pub numeric: f64,
}

/// Correlation-sum bounds plus oversampled PMEPR along one axis of every code.
#[derive(Debug, Clone)]
pub struct PmeprReport {
    pub axis: Axis,
    pub oversampling: usize,
    pub entries: Vec<PmeprEntry>,
    pub max_bound: f64,
    pub max_numeric: f64,
}

fn pmepr_report(s: &CodeSet, axis: Axis, oversampling: usize) -> Result<PmeprReport> {
    let mut jobs: Vec<(usize, usize, PhaseSequence)> = Vec::new();
    for (ci, code) in s.codes().iter().enumerate() {
        match axis {
            Axis::Row => {
                for (ri, row) in code.rows().iter().enumerate() {
                    jobs.push((ci, ri, row.clone()));
                }
            }
            Axis::Column => {
                for n in 0..code.row_len() {
                    jobs.push((ci, n, code.column(n)));
                }
            }
        }
    }
    let entries = jobs
        .par_iter()
        .map(|(ci, idx, seq)| {
            Ok(PmeprEntry {
                code: *ci,
                index: *idx,
                len: seq.len(),
                bound: pmepr_bound(seq),
                bound_exact: pmepr_bound_exact(seq),
                numeric: pmepr_numeric(seq, oversampling)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let max_bound = entries.iter().map(|e| e.bound).fold(0.0, f64::max);
    let max_numeric = entries.iter().map(|e| e.numeric).fold(0.0, f64::max);
    Ok(PmeprReport {
        axis,
        oversampling,
        entries,
        max_bound,
        max_numeric,
    })
}

/// Bounds and numeric PMEPR for every column of every code (the MC-CDMA
/// direction), plus the set-wide maxima.
pub fn column_pmepr_report(s: &CodeSet, oversampling: usize) -> Result<PmeprReport> {
    pmepr_report(s, Axis::Column, oversampling)
}

/// Bounds and numeric PMEPR for every row of every code (the OFDM
/// direction).
pub fn row_pmepr_report(s: &CodeSet, oversampling: usize) -> Result<PmeprReport> {
    pmepr_report(s, Axis::Row, oversampling)
}

/// K against the type-II ceiling M*(N - Z + 1).
#[derive(Debug, Clone, Copy)]
pub struct SetSizeBound {
    pub k: usize,
    pub bound: usize,
    pub optimal: bool,
}

/// Check the set-size bound of a verified type-II ZCCS.
pub fn set_size_bound_check(s: &CodeSet) -> Result<SetSizeBound> {
    let v = verify_zccs(s)?;
    if !v.pass {
        return Err(Error::Precondition(format!(
            "set does not verify: {}",
            v.describe()
        )));
    }
    let params = s.params();
    let bound = params.m * (params.n - params.z + 1);
    Ok(SetSizeBound {
        k: params.k,
        bound,
        optimal: params.k == bound,
    })
}

/// One achievable pair-length decomposition N*P with its zone width.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverageEntry {
    pub length: usize,
    /// Golay-pair length used.
    pub n: usize,
    /// Seed length.
    pub p: usize,
    /// NP - P + 1.
    pub zcz_width: usize,
    /// Whether the length has the form {3,7,9,14,15} * (a Golay length),
    /// the shapes the compared quadriphase family reaches.
    pub quadriphase_form: bool,
}

/// Enumerate every type-II pair length N*P <= max_len with N a supported
/// Golay-pair length and P >= 1.
pub fn length_coverage(max_len: usize) -> Result<Vec<CoverageEntry>> {
    if max_len < 2 {
        return Err(Error::Domain(format!("max_len must be >= 2, got {max_len}")));
    }
    let quadriphase_form = |len: usize| {
        [3usize, 7, 9, 14, 15]
            .iter()
            .any(|&f| len % f == 0 && gcp_length_supported(len / f))
    };
    let mut entries = Vec::new();
    for n in 2..=max_len {
        if !gcp_length_supported(n) {
            continue;
        }
        for p in 1..=(max_len / n) {
            let length = n * p;
            entries.push(CoverageEntry {
                length,
                n,
                p,
                zcz_width: length - p + 1,
                quadriphase_form: quadriphase_form(length),
            });
        }
    }
    entries.sort_by_key(|e| (e.length, e.n));
    Ok(entries)
}
