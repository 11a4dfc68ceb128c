//! Aperiodic correlation sums, in exact and floating form.
//!
//! A correlation value is an integer combination of q-th roots of unity
//! whenever both operands live on q-PSK alphabets, so zero tests and
//! magnitude comparisons are exact integer arithmetic on the alphabets the
//! constructions actually use. Everything else falls back to `Complex64`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::seq::{merged_alphabet, root_of_unity, PhaseSequence};

/// Above this length the auto-dispatching profile switches to the FFT path.
pub const FFT_LENGTH_THRESHOLD: usize = 4096;

/// One correlation sum. `Exact` stores how many product terms landed on
/// each q-th root of unity; the represented value is
/// `sum_p counts[p] * exp(2*pi*I*p/q)`.
#[derive(Debug, Clone, PartialEq)]
pub enum CorrValue {
    Exact { q: u32, counts: Vec<i64> },
    Approx(Complex64),
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl CorrValue {
    pub fn exact_zero_value() -> Self {
        CorrValue::Exact {
            q: 1,
            counts: vec![0],
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, CorrValue::Exact { .. })
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            CorrValue::Exact { q, counts } => counts
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(p, &c)| root_of_unity(*q, p as u32) * c as f64)
                .sum(),
            CorrValue::Approx(v) => *v,
        }
    }

    pub fn abs(&self) -> f64 {
        if let Some(m) = self.exact_int_magnitude() {
            m as f64
        } else {
            self.to_complex().norm()
        }
    }

    /// Divide out the common factor between q and the occupied phases, so
    /// that e.g. a sum supported on {0, q/2} is recognized as binary.
    fn normalized(&self) -> CorrValue {
        match self {
            CorrValue::Exact { q, counts } => {
                let mut g = *q as u64;
                for (p, &c) in counts.iter().enumerate() {
                    if c != 0 {
                        g = crate::seq::gcd(g, p as u64);
                    }
                }
                if g <= 1 {
                    return self.clone();
                }
                let q2 = (*q as u64 / g) as u32;
                if q2 == 0 {
                    return CorrValue::exact_zero_value();
                }
                let mut c2 = vec![0i64; q2 as usize];
                for (p, &c) in counts.iter().enumerate() {
                    if c != 0 {
                        c2[p / g as usize] += c;
                    }
                }
                CorrValue::Exact { q: q2, counts: c2 }
            }
            other => other.clone(),
        }
    }

    /// Decide zero exactly where the alphabet allows it.
    /// `Some(b)` is a proof; `None` means undecided (caller should fall
    /// back to a floating test).
    pub fn exact_zero(&self) -> Option<bool> {
        let v = self.normalized();
        let (q, c) = match &v {
            CorrValue::Exact { q, counts } => (*q, counts),
            CorrValue::Approx(_) => return None,
        };
        match q {
            1 => Some(c[0] == 0),
            2 => Some(c[0] == c[1]),
            3 => Some(c[0] == c[1] && c[1] == c[2]),
            4 => Some(c[0] == c[2] && c[1] == c[3]),
            6 => {
                // reduce by w^3 = -1, then w^2 = w - 1
                let d = [c[0] - c[3], c[1] - c[4], c[2] - c[5]];
                Some(d[0] == d[2] && d[1] == -d[2])
            }
            _ if is_prime(q) => Some(c.iter().all(|&x| x == c[0])),
            _ => {
                if c.iter().all(|&x| x == c[0]) {
                    return Some(true); // multiple of the full root sum
                }
                if q % 2 == 0 {
                    let h = (q / 2) as usize;
                    if (0..h).all(|p| c[p] == c[p + h]) {
                        return Some(true); // antipodal cancellation
                    }
                }
                None
            }
        }
    }

    /// Zero test: exact where decidable, else |value| <= eps.
    pub fn is_zero(&self, eps: f64) -> bool {
        match self.exact_zero() {
            Some(b) => b,
            None => self.to_complex().norm() <= eps,
        }
    }

    /// Gaussian-integer components when the value lives in Z[i].
    pub fn gauss(&self) -> Option<(i64, i64)> {
        let v = self.normalized();
        match &v {
            CorrValue::Exact { q: 1, counts } => Some((counts[0], 0)),
            CorrValue::Exact { q: 2, counts } => Some((counts[0] - counts[1], 0)),
            CorrValue::Exact { q: 4, counts } => {
                Some((counts[0] - counts[2], counts[1] - counts[3]))
            }
            _ => None,
        }
    }

    /// Exact integer magnitude, available when the value is (up to sign) a
    /// single root of unity times an integer.
    pub fn exact_int_magnitude(&self) -> Option<i64> {
        let v = self.normalized();
        let (q, c) = match &v {
            CorrValue::Exact { q, counts } => (*q, counts),
            CorrValue::Approx(_) => return None,
        };
        let support: Vec<usize> = (0..c.len()).filter(|&p| c[p] != 0).collect();
        match support.len() {
            0 => Some(0),
            1 => Some(c[support[0]].abs()),
            2 if q % 2 == 0 && support[1] == support[0] + (q / 2) as usize => {
                Some((c[support[0]] - c[support[1]]).abs())
            }
            _ => {
                let (re, im) = self.gauss()?;
                if re == 0 {
                    Some(im.abs())
                } else if im == 0 {
                    Some(re.abs())
                } else {
                    None
                }
            }
        }
    }

    /// Exact equality proof where available.
    pub fn exactly_equals(&self, other: &CorrValue) -> Option<bool> {
        let mut diff = self.clone();
        diff.sub_assign(other);
        diff.exact_zero()
    }

    pub fn add_assign(&mut self, other: &CorrValue) {
        self.combine(other, 1);
    }

    pub fn sub_assign(&mut self, other: &CorrValue) {
        self.combine(other, -1);
    }

    fn combine(&mut self, other: &CorrValue, sign: i64) {
        match (&mut *self, other) {
            (
                CorrValue::Exact { q: qa, counts: ca },
                CorrValue::Exact { q: qb, counts: cb },
            ) if merged_alphabet(*qa, *qb).is_some() => {
                let q = merged_alphabet(*qa, *qb).expect("guarded above");
                if q != *qa {
                    let f = (q / *qa) as usize;
                    let mut merged = vec![0i64; q as usize];
                    for (p, &c) in ca.iter().enumerate() {
                        merged[p * f] = c;
                    }
                    *qa = q;
                    *ca = merged;
                }
                let f = (q / *qb) as usize;
                for (p, &c) in cb.iter().enumerate() {
                    ca[p * f] += sign * c;
                }
            }
            (CorrValue::Approx(a), b) => {
                *a += b.to_complex() * sign as f64;
            }
            (a, b) => {
                *a = CorrValue::Approx(a.to_complex() + b.to_complex() * sign as f64);
            }
        }
    }

    /// Multiply two correlation values (used by the Kronecker identity).
    pub fn mul(&self, other: &CorrValue) -> CorrValue {
        match (self, other) {
            (
                CorrValue::Exact { q: qa, counts: ca },
                CorrValue::Exact { q: qb, counts: cb },
            ) if merged_alphabet(*qa, *qb).is_some() => {
                let q = merged_alphabet(*qa, *qb).expect("guarded above");
                let (fa, fb) = ((q / qa) as usize, (q / qb) as usize);
                let mut out = vec![0i64; q as usize];
                for (pa, &a) in ca.iter().enumerate() {
                    if a == 0 {
                        continue;
                    }
                    for (pb, &b) in cb.iter().enumerate() {
                        if b == 0 {
                            continue;
                        }
                        out[(pa * fa + pb * fb) % q as usize] += a * b;
                    }
                }
                CorrValue::Exact { q, counts: out }
            }
            _ => CorrValue::Approx(self.to_complex() * other.to_complex()),
        }
    }

    /// Scale by an integer.
    pub fn scaled(&self, k: i64) -> CorrValue {
        match self {
            CorrValue::Exact { q, counts } => CorrValue::Exact {
                q: *q,
                counts: counts.iter().map(|&c| c * k).collect(),
            },
            CorrValue::Approx(v) => CorrValue::Approx(v * k as f64),
        }
    }

    pub fn conj(&self) -> CorrValue {
        match self {
            CorrValue::Exact { q, counts } => {
                let n = *q as usize;
                let mut out = vec![0i64; n];
                for (p, &c) in counts.iter().enumerate() {
                    out[(n - p) % n] += c;
                }
                CorrValue::Exact {
                    q: *q,
                    counts: out,
                }
            }
            CorrValue::Approx(v) => CorrValue::Approx(v.conj()),
        }
    }
}

/// The 2L-1 correlation sums of a length-L pair, indexed by shift
/// tau in (-L, L) with tau = 0 at the center.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationProfile {
    seq_len: usize,
    values: Vec<CorrValue>,
}

impl CorrelationProfile {
    pub(crate) fn from_values(seq_len: usize, values: Vec<CorrValue>) -> Self {
        debug_assert_eq!(values.len(), 2 * seq_len - 1);
        Self { seq_len, values }
    }

    /// Length L of the correlated sequences.
    pub fn seq_len(&self) -> usize {
        self.seq_len
    }

    pub fn num_shifts(&self) -> usize {
        self.values.len()
    }

    /// Shifts in order tau = -(L-1) ..= L-1.
    pub fn shifts(&self) -> impl Iterator<Item = (isize, &CorrValue)> {
        let l = self.seq_len as isize;
        self.values.iter().enumerate().map(move |(i, v)| (i as isize - (l - 1), v))
    }

    /// Correlation value at shift tau, if |tau| < L.
    pub fn at(&self, tau: isize) -> Option<&CorrValue> {
        let idx = tau + self.seq_len as isize - 1;
        if idx < 0 {
            None
        } else {
            self.values.get(idx as usize)
        }
    }

    /// Complex value at shift tau; 0 outside (-L, L).
    pub fn value_at(&self, tau: isize) -> Complex64 {
        self.at(tau).map_or(Complex64::ZERO, |v| v.to_complex())
    }

    pub fn peak(&self) -> &CorrValue {
        self.at(0).expect("profile has a center shift")
    }

    pub fn is_exact(&self) -> bool {
        self.values.iter().all(|v| v.is_exact())
    }

    /// Largest |value| over tau != 0.
    pub fn max_abs_offpeak(&self) -> f64 {
        self.shifts()
            .filter(|(tau, _)| *tau != 0)
            .map(|(_, v)| v.abs())
            .fold(0.0, f64::max)
    }

    /// Sum of |value| over all shifts (the PMEPR-bound numerator).
    pub fn abs_sum(&self) -> f64 {
        self.values.iter().map(|v| v.abs()).sum()
    }

    /// Exact integer sum of magnitudes, when every shift has one.
    pub fn exact_abs_sum(&self) -> Option<i64> {
        self.values.iter().map(|v| v.exact_int_magnitude()).sum()
    }

    pub(crate) fn add_assign(&mut self, other: &CorrelationProfile) {
        debug_assert_eq!(self.seq_len, other.seq_len);
        for (a, b) in self.values.iter_mut().zip(&other.values) {
            a.add_assign(b);
        }
    }
}

fn check_lengths(a: &PhaseSequence, b: &PhaseSequence) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::Dimension(format!(
            "correlation needs equal lengths, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    Ok(a.len())
}

/// Raw product terms of one shift, accumulated exactly or in floating point.
fn accumulate(a: &PhaseSequence, b: &PhaseSequence, tau: isize, out: &mut CorrValue) {
    let l = a.len() as isize;
    // tau >= 0: sum_i a[i+tau] * conj(b[i]) over i in 0..L-tau
    // tau <  0: sum_i a[i] * conj(b[i-tau]) over i in 0..L+tau
    let (off_a, off_b, n) = if tau >= 0 {
        (tau as usize, 0usize, (l - tau) as usize)
    } else {
        (0usize, (-tau) as usize, (l + tau) as usize)
    };
    match (a.phases(), b.phases(), &mut *out) {
        (Some((qa, pa)), Some((qb, pb)), CorrValue::Exact { q, counts }) => {
            let (fa, fb) = (*q / qa, *q / qb);
            for i in 0..n {
                let x = pa[off_a + i] * fa;
                let y = pb[off_b + i] * fb;
                let p = (x + *q - y) % *q;
                counts[p as usize] += 1;
            }
        }
        _ => {
            let mut sum = out.to_complex();
            for i in 0..n {
                sum += a.value(off_a + i) * b.value(off_b + i).conj();
            }
            *out = CorrValue::Approx(sum);
        }
    }
}

fn fresh_value(a: &PhaseSequence, b: &PhaseSequence) -> CorrValue {
    match (a.phases(), b.phases()) {
        (Some((qa, _)), Some((qb, _))) => match merged_alphabet(qa, qb) {
            Some(q) => CorrValue::Exact {
                q,
                counts: vec![0; q as usize],
            },
            None => CorrValue::Approx(Complex64::ZERO),
        },
        _ => CorrValue::Approx(Complex64::ZERO),
    }
}

/// Aperiodic cross-correlation sum of `a` against `a2` at shift `tau`:
/// `sum_i a[i+tau] * conj(a2[i])` for tau >= 0 and the mirrored sum for
/// tau < 0; zero when |tau| >= L.
pub fn accs(a: &PhaseSequence, a2: &PhaseSequence, tau: isize) -> Result<CorrValue> {
    let l = check_lengths(a, a2)? as isize;
    if tau.unsigned_abs() as isize >= l {
        return Ok(if a.phases().is_some() && a2.phases().is_some() {
            CorrValue::exact_zero_value()
        } else {
            CorrValue::Approx(Complex64::ZERO)
        });
    }
    let mut out = fresh_value(a, a2);
    accumulate(a, a2, tau, &mut out);
    Ok(out)
}

/// All 2L-1 shifts of the aperiodic correlation, by the definition sums.
pub fn correlation_profile(a: &PhaseSequence, a2: &PhaseSequence) -> Result<CorrelationProfile> {
    let l = check_lengths(a, a2)?;
    let mut values = Vec::with_capacity(2 * l - 1);
    for tau in -(l as isize - 1)..=(l as isize - 1) {
        let mut v = fresh_value(a, a2);
        accumulate(a, a2, tau, &mut v);
        values.push(v);
    }
    Ok(CorrelationProfile::from_values(l, values))
}

/// FFT route to the same profile; floating-point values, entrywise within
/// 1e-9 * L of the definition sums.
pub fn fft_correlation_profile(
    a: &PhaseSequence,
    a2: &PhaseSequence,
) -> Result<CorrelationProfile> {
    let l = check_lengths(a, a2)?;
    let n = (2 * l - 1).next_power_of_two();
    let mut planner = rustfft::FftPlanner::<f64>::new();
    let fft = planner.plan_fft_forward(n);
    let ifft = planner.plan_fft_inverse(n);

    let mut fa: Vec<Complex64> = a.values();
    fa.resize(n, Complex64::ZERO);
    let mut fb: Vec<Complex64> = a2.values();
    fb.resize(n, Complex64::ZERO);
    fft.process(&mut fa);
    fft.process(&mut fb);
    for (x, y) in fa.iter_mut().zip(&fb) {
        *x *= y.conj();
    }
    ifft.process(&mut fa);
    let scale = 1.0 / n as f64;

    // circular index s = tau mod n carries Lambda(tau) after zero-padding
    let mut values = Vec::with_capacity(2 * l - 1);
    for tau in -(l as isize - 1)..=(l as isize - 1) {
        let s = tau.rem_euclid(n as isize) as usize;
        values.push(CorrValue::Approx(fa[s] * scale));
    }
    Ok(CorrelationProfile::from_values(l, values))
}

/// Definition sums up to [`FFT_LENGTH_THRESHOLD`], FFT beyond it.
pub fn profile_auto(a: &PhaseSequence, a2: &PhaseSequence) -> Result<CorrelationProfile> {
    if a.len() > FFT_LENGTH_THRESHOLD {
        fft_correlation_profile(a, a2)
    } else {
        correlation_profile(a, a2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(signs: &[i8]) -> PhaseSequence {
        PhaseSequence::from_signs(signs).unwrap()
    }

    fn real_profile(p: &CorrelationProfile) -> Vec<f64> {
        p.shifts().map(|(_, v)| v.to_complex().re).collect()
    }

    #[test]
    fn accs_barker3_hand_sums() {
        let a = pm(&[1, 1, -1]);
        assert_eq!(accs(&a, &a, 1).unwrap().gauss(), Some((0, 0)));
        assert_eq!(accs(&a, &a, 2).unwrap().gauss(), Some((-1, 0)));
        // "otherwise" branch
        assert_eq!(accs(&a, &a, 3).unwrap().gauss(), Some((0, 0)));
        assert_eq!(accs(&a, &a, -7).unwrap().gauss(), Some((0, 0)));
    }

    #[test]
    fn accs_length_mismatch() {
        let a = pm(&[1, 1]);
        let b = pm(&[1, 1, -1]);
        assert!(accs(&a, &b, 0).is_err());
    }

    #[test]
    fn profile_barker3() {
        let a = pm(&[1, 1, -1]);
        let p = correlation_profile(&a, &a).unwrap();
        assert_eq!(real_profile(&p), vec![-1.0, 0.0, 3.0, 0.0, -1.0]);
        assert!(p.is_exact());
    }

    #[test]
    fn profile_single_element() {
        let a = pm(&[1]);
        let p = correlation_profile(&a, &a).unwrap();
        assert_eq!(real_profile(&p), vec![1.0]);
    }

    #[test]
    fn profile_all_ones_triangle() {
        let a = pm(&[1, 1, 1, 1]);
        let p = correlation_profile(&a, &a).unwrap();
        assert_eq!(real_profile(&p), vec![1.0, 2.0, 3.0, 4.0, 3.0, 2.0, 1.0]);
    }

    #[test]
    fn rotation_leaves_profile_unchanged() {
        let a = pm(&[1, 1, -1]);
        let r = a.phase_rotate(std::f64::consts::FRAC_PI_2);
        let pa = correlation_profile(&a, &a).unwrap();
        let pr = correlation_profile(&r, &r).unwrap();
        for ((_, x), (_, y)) in pa.shifts().zip(pr.shifts()) {
            assert!((x.to_complex() - y.to_complex()).norm() < 1e-12);
        }
    }

    #[test]
    fn fft_matches_naive_small() {
        let a = pm(&[1, 1, -1]);
        let p = fft_correlation_profile(&a, &a).unwrap();
        let expect = [-1.0, 0.0, 3.0, 0.0, -1.0];
        for (i, (_, v)) in p.shifts().enumerate() {
            assert!((v.to_complex().re - expect[i]).abs() < 1e-9);
            assert!(v.to_complex().im.abs() < 1e-9);
        }
    }

    #[test]
    fn exact_zero_rules() {
        // q=6 sum of the three cube roots of unity: phases 0, 2, 4
        let v = CorrValue::Exact {
            q: 6,
            counts: vec![1, 0, 1, 0, 1, 0],
        };
        assert_eq!(v.exact_zero(), Some(true));
        assert!(v.to_complex().norm() < 1e-12);
        // q=5 all-equal counts
        let v = CorrValue::Exact {
            q: 5,
            counts: vec![2, 2, 2, 2, 2],
        };
        assert_eq!(v.exact_zero(), Some(true));
        // q=5 unequal counts: nonzero, decidable because 5 is prime
        let v = CorrValue::Exact {
            q: 5,
            counts: vec![3, 2, 2, 2, 2],
        };
        assert_eq!(v.exact_zero(), Some(false));
    }

    #[test]
    fn exact_magnitude_from_antipodal_pair() {
        let v = CorrValue::Exact {
            q: 10,
            counts: vec![0, 0, 0, 4, 0, 0, 0, 0, 1, 0],
        };
        assert_eq!(v.exact_int_magnitude(), Some(3));
    }

    #[test]
    fn gauss_reads_through_scaled_alphabet() {
        // phases {0, 4} inside q=8 are really binary
        let v = CorrValue::Exact {
            q: 8,
            counts: vec![5, 0, 0, 0, 2, 0, 0, 0],
        };
        assert_eq!(v.gauss(), Some((3, 0)));
    }

    #[test]
    fn auto_profile_switches_to_fft_above_threshold() {
        let small = PhaseSequence::all_ones(8);
        assert!(profile_auto(&small, &small).unwrap().is_exact());

        let big = PhaseSequence::all_ones(FFT_LENGTH_THRESHOLD + 1);
        let p = profile_auto(&big, &big).unwrap();
        assert!(!p.is_exact());
        let l = (FFT_LENGTH_THRESHOLD + 1) as f64;
        assert!((p.value_at(0).re - l).abs() < 1e-9 * l);
        assert!((p.value_at(1).re - (l - 1.0)).abs() < 1e-9 * l);
    }
}
