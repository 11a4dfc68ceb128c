//! Golay complementary pairs of every length 2^a * 10^b * 26^c.
//!
//! Pairs are grown from the three binary kernels (lengths 2, 10, 26) by
//! concatenation doubling and by the product composition, both of which
//! preserve the complementarity invariant; the 10- and 26-kernels come from
//! a one-time exhaustive search and are frozen below as constants.

use crate::corr::correlation_profile;
use crate::error::{Error, Result};
use crate::seq::PhaseSequence;

/// Two equal-length sequences whose autocorrelation sums vanish off-peak.
#[derive(Debug, Clone, PartialEq)]
pub struct GolayPair {
    s: PhaseSequence,
    t: PhaseSequence,
}

impl GolayPair {
    /// Validate the complementarity invariant and wrap the pair.
    pub fn new(s: PhaseSequence, t: PhaseSequence) -> Result<Self> {
        if s.len() != t.len() {
            return Err(Error::Dimension(format!(
                "pair members differ in length: {} vs {}",
                s.len(),
                t.len()
            )));
        }
        let ps = correlation_profile(&s, &s)?;
        let pt = correlation_profile(&t, &t)?;
        let eps = 1e-10 * (2 * s.len()) as f64;
        for ((tau, a), (_, b)) in ps.shifts().zip(pt.shifts()) {
            if tau == 0 {
                continue;
            }
            let mut sum = a.clone();
            sum.add_assign(b);
            if !sum.is_zero(eps) {
                return Err(Error::Domain(format!(
                    "not a Golay pair: AACS sum {} at shift {tau}",
                    sum.to_complex()
                )));
            }
        }
        Ok(Self { s, t })
    }

    pub fn first(&self) -> &PhaseSequence {
        &self.s
    }

    pub fn second(&self) -> &PhaseSequence {
        &self.t
    }

    pub fn len(&self) -> usize {
        self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s.is_empty()
    }

    pub fn into_parts(self) -> (PhaseSequence, PhaseSequence) {
        (self.s, self.t)
    }
}

/// Binary kernel of length 10, first solution of [`search_binary_kernel`].
const KERNEL_10: (&[i8], &[i8]) = (
    &[1, 1, -1, 1, -1, 1, -1, -1, 1, 1],
    &[1, 1, -1, 1, 1, 1, 1, 1, -1, -1],
);

/// Binary kernel of length 26, first solution of [`search_binary_kernel`].
const KERNEL_26: (&[i8], &[i8]) = (
    &[
        1, 1, 1, 1, -1, 1, 1, -1, -1, 1, -1, 1, -1, 1, -1, -1, 1, -1, 1, 1, 1, -1, -1, 1, 1, 1,
    ],
    &[
        1, 1, 1, 1, -1, 1, 1, -1, -1, 1, -1, 1, 1, 1, 1, 1, -1, 1, -1, -1, -1, 1, 1, -1, -1, -1,
    ],
);

fn signs_pair(a: &[i8], b: &[i8]) -> GolayPair {
    let s = PhaseSequence::from_signs(a).expect("kernel signs are +/-1");
    let t = PhaseSequence::from_signs(b).expect("kernel signs are +/-1");
    GolayPair::new(s, t).expect("frozen kernels satisfy the invariant")
}

/// Exhaustive both-ends search for a binary Golay pair of length `n`,
/// normalized to a[0] = b[0] = +1. Returns the first pair in lexicographic
/// DFS order. Used once to derive the frozen kernels; kept for tests.
pub fn search_binary_kernel(n: usize) -> Option<(Vec<i8>, Vec<i8>)> {
    if n < 2 || n % 2 != 0 {
        return None;
    }
    let mut a = vec![0i8; n];
    let mut b = vec![0i8; n];

    // Correlation at shift tau over currently assigned entries; all terms
    // are determined once positions [0,k] and [n-1-k, n-1] are filled and
    // tau >= n-1-k.
    fn corr(x: &[i8], tau: usize) -> i32 {
        let n = x.len();
        (0..n - tau).map(|i| (x[i + tau] * x[i]) as i32).sum()
    }

    fn dfs(a: &mut [i8], b: &mut [i8], k: usize) -> bool {
        let n = a.len();
        if k == n / 2 {
            // fully assigned; the caller re-verifies via GolayPair::new
            return (1..n).all(|tau| corr(a, tau) + corr(b, tau) == 0);
        }
        let choices: &[i8] = &[1, -1];
        for &al in choices {
            if k == 0 && al != 1 {
                continue; // normalize a[0] = 1
            }
            for &ar in choices {
                for &bl in choices {
                    if k == 0 && bl != 1 {
                        continue; // normalize b[0] = 1
                    }
                    for &br in choices {
                        // mirrored products must cancel between the pair
                        if al * ar != -(bl * br) {
                            continue;
                        }
                        a[k] = al;
                        a[n - 1 - k] = ar;
                        b[k] = bl;
                        b[n - 1 - k] = br;
                        let tau = n - 1 - k;
                        if corr(a, tau) + corr(b, tau) == 0 && dfs(a, b, k + 1) {
                            return true;
                        }
                    }
                }
            }
        }
        a[k] = 0;
        a[n - 1 - k] = 0;
        b[k] = 0;
        b[n - 1 - k] = 0;
        false
    }

    if dfs(&mut a, &mut b, 0) {
        Some((a, b))
    } else {
        None
    }
}

/// Concatenation doubling (s, t) -> (s|t, s|-t); doubles the length.
fn double(pair: &GolayPair) -> GolayPair {
    let half = |x: &PhaseSequence, y: &PhaseSequence| {
        let mut signs = Vec::new();
        let mut general = Vec::new();
        if let (Some(a), Some(b)) = (x.signs(), y.signs()) {
            signs.extend(a);
            signs.extend(b);
        } else {
            general.extend(x.values());
            general.extend(y.values());
        }
        if !signs.is_empty() {
            PhaseSequence::from_signs(&signs).expect("concatenation of signs")
        } else {
            PhaseSequence::try_from_complex(general).expect("concatenation of unimodular values")
        }
    };
    let s = half(pair.first(), pair.second());
    let t = half(pair.first(), &pair.second().negate());
    GolayPair::new(s, t).expect("doubling preserves complementarity")
}

/// Turyn product composition: pairs of lengths r and s give a pair of
/// length r*s, staying binary because (A+B)/2 and (A-B)/2 have disjoint
/// supports.
fn compose(ab: &GolayPair, cd: &GolayPair) -> GolayPair {
    let (a, b) = (ab.first().signs(), ab.second().signs());
    let (c, d) = (cd.first().signs(), cd.second().signs());
    let (a, b) = (a.expect("binary pair"), b.expect("binary pair"));
    let (c, d) = (c.expect("binary pair"), d.expect("binary pair"));
    let r = a.len();
    let s = c.len();
    let mut e = vec![0i8; r * s];
    let mut f = vec![0i8; r * s];
    for j in 0..s {
        for i in 0..r {
            let sum = (a[i] + b[i]) / 2; // a[i] where a and b agree, else 0
            let dif = (a[i] - b[i]) / 2;
            // E = C (x) (A+B)/2 + reversed(D) (x) (A-B)/2
            // F = D (x) (A+B)/2 - reversed(C) (x) (A-B)/2
            e[j * r + i] = c[j] * sum + d[s - 1 - j] * dif;
            f[j * r + i] = d[j] * sum - c[s - 1 - j] * dif;
        }
    }
    let es = PhaseSequence::from_signs(&e).expect("composition stays binary");
    let fs = PhaseSequence::from_signs(&f).expect("composition stays binary");
    GolayPair::new(es, fs).expect("composition preserves complementarity")
}

/// Exponents (a, b, c) with n = 2^a * 10^b * 26^c, if they exist.
fn decompose(n: usize) -> Option<(u32, u32, u32)> {
    let mut m = n;
    let mut twos = 0;
    let mut fives = 0;
    let mut thirteens = 0;
    while m % 2 == 0 {
        m /= 2;
        twos += 1;
    }
    while m % 5 == 0 {
        m /= 5;
        fives += 1;
    }
    while m % 13 == 0 {
        m /= 13;
        thirteens += 1;
    }
    if m != 1 || twos < fives + thirteens {
        return None;
    }
    Some((twos - fives - thirteens, fives, thirteens))
}

/// Whether `n` is a supported Golay pair length (2^a * 10^b * 26^c, n >= 2).
pub fn gcp_length_supported(n: usize) -> bool {
    n >= 2 && decompose(n).is_some()
}

/// A binary Golay complementary pair of length n = 2^a * 10^b * 26^c.
pub fn gcp(n: usize) -> Result<GolayPair> {
    if n < 2 {
        return Err(Error::Domain(format!("Golay pair length must be >= 2, got {n}")));
    }
    let (a, b, c) = decompose(n).ok_or_else(|| {
        Error::Domain(format!(
            "no Golay pair of length {n}; supported lengths are 2^a * 10^b * 26^c"
        ))
    })?;
    let trivial = GolayPair::new(PhaseSequence::all_ones(1), PhaseSequence::all_ones(1))
        .expect("length-1 pair is trivially complementary");
    let mut pair = trivial;
    for _ in 0..c {
        let k26 = signs_pair(KERNEL_26.0, KERNEL_26.1);
        pair = if pair.len() == 1 { k26 } else { compose(&pair, &k26) };
    }
    for _ in 0..b {
        let k10 = signs_pair(KERNEL_10.0, KERNEL_10.1);
        pair = if pair.len() == 1 { k10 } else { compose(&pair, &k10) };
    }
    for _ in 0..a {
        pair = double(&pair);
    }
    Ok(pair)
}
