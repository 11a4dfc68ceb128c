//! Codes (M x N matrices of row sequences) and code sets.

use serde::{Deserialize, Serialize};

use crate::corr::{profile_auto, CorrelationProfile};
use crate::error::{Error, Result};
use crate::seq::PhaseSequence;

/// An M x N code: M row sequences of common length N and alphabet order.
#[derive(Debug, Clone, PartialEq)]
pub struct CodeMatrix {
    rows: Vec<PhaseSequence>,
}

impl CodeMatrix {
    pub fn new(rows: Vec<PhaseSequence>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Dimension("a code needs at least one row".into()));
        }
        let n = rows[0].len();
        let q = rows[0].alphabet_order();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::Dimension(format!(
                    "row {i} has length {} but row 0 has {n}",
                    r.len()
                )));
            }
            if r.alphabet_order() != q {
                return Err(Error::Dimension(format!(
                    "row {i} is on alphabet q={} but row 0 is on q={q}",
                    r.alphabet_order()
                )));
            }
        }
        Ok(Self { rows })
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn row_len(&self) -> usize {
        self.rows[0].len()
    }

    pub fn alphabet_order(&self) -> u32 {
        self.rows[0].alphabet_order()
    }

    pub fn rows(&self) -> &[PhaseSequence] {
        &self.rows
    }

    pub fn row(&self, m: usize) -> &PhaseSequence {
        &self.rows[m]
    }

    /// Column n as a length-M sequence (the MC-CDMA spreading direction).
    pub fn column(&self, n: usize) -> PhaseSequence {
        let q = self.alphabet_order();
        if q > 0 {
            let phases = self.rows.iter().map(|r| r.phase(n).unwrap()).collect();
            PhaseSequence::from_phases(q, phases).expect("rows validated at construction")
        } else {
            let vals = self.rows.iter().map(|r| r.value(n)).collect();
            PhaseSequence::try_from_complex(vals).expect("rows validated at construction")
        }
    }

    /// Row-wise Kronecker product with a seed sequence.
    pub fn kron_rows(&self, b: &PhaseSequence) -> CodeMatrix {
        let rows = self.rows.iter().map(|r| r.kron(b)).collect();
        CodeMatrix::new(rows).expect("rows stay rectangular under kron")
    }
}

/// Code-level ACCS: the row-wise correlation sums added over the M rows.
pub fn code_accs(c1: &CodeMatrix, c2: &CodeMatrix) -> Result<CorrelationProfile> {
    if c1.num_rows() != c2.num_rows() || c1.row_len() != c2.row_len() {
        return Err(Error::Dimension(format!(
            "codes must share (M, N); got ({}, {}) and ({}, {})",
            c1.num_rows(),
            c1.row_len(),
            c2.num_rows(),
            c2.row_len()
        )));
    }
    let mut total: Option<CorrelationProfile> = None;
    for (a, b) in c1.rows().iter().zip(c2.rows()) {
        let p = profile_auto(a, b)?;
        match &mut total {
            None => total = Some(p),
            Some(t) => t.add_assign(&p),
        }
    }
    Ok(total.expect("at least one row"))
}

/// What a code set claims to be.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SetKind {
    Ccc,
    Mogcs,
    TypeIiZccs,
    Raw,
}

impl std::fmt::Display for SetKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SetKind::Ccc => "CCC",
            SetKind::Mogcs => "MOGCS",
            SetKind::TypeIiZccs => "type-II ZCCS",
            SetKind::Raw => "raw",
        };
        f.write_str(s)
    }
}

/// Declared (K, M, Z, N) parameters of a set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetParams {
    pub k: usize,
    pub m: usize,
    pub z: usize,
    pub n: usize,
}

impl std::fmt::Display for SetParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{},{})", self.k, self.m, self.z, self.n)
    }
}

/// K codes plus their declared parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct CodeSet {
    codes: Vec<CodeMatrix>,
    params: SetParams,
    kind: SetKind,
}

impl CodeSet {
    pub fn new(codes: Vec<CodeMatrix>, params: SetParams, kind: SetKind) -> Result<Self> {
        if codes.is_empty() {
            return Err(Error::Dimension("a code set needs at least one code".into()));
        }
        let (m, n) = (codes[0].num_rows(), codes[0].row_len());
        let q = codes[0].alphabet_order();
        for (i, c) in codes.iter().enumerate() {
            if c.num_rows() != m || c.row_len() != n {
                return Err(Error::Dimension(format!(
                    "code {i} is {}x{} but code 0 is {m}x{n}",
                    c.num_rows(),
                    c.row_len()
                )));
            }
            if c.alphabet_order() != q {
                return Err(Error::Dimension(format!(
                    "code {i} is on alphabet q={} but code 0 is on q={q}",
                    c.alphabet_order()
                )));
            }
        }
        if params.k != codes.len() || params.m != m || params.n != n {
            return Err(Error::Dimension(format!(
                "declared {params} does not match {} codes of {m}x{n}",
                codes.len()
            )));
        }
        if params.z < 1 || params.z > params.n {
            return Err(Error::Domain(format!(
                "declared Z must satisfy 1 <= Z <= N, got Z={} N={}",
                params.z, params.n
            )));
        }
        Ok(Self { codes, params, kind })
    }

    pub fn codes(&self) -> &[CodeMatrix] {
        &self.codes
    }

    pub fn code(&self, k: usize) -> &CodeMatrix {
        &self.codes[k]
    }

    pub fn params(&self) -> SetParams {
        self.params
    }

    pub fn kind(&self) -> SetKind {
        self.kind
    }

    pub fn alphabet_order(&self) -> u32 {
        self.codes[0].alphabet_order()
    }

    pub(crate) fn with_kind(mut self, kind: SetKind) -> Self {
        self.kind = kind;
        self
    }
}
