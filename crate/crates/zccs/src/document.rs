//! The on-disk formats: the versioned `zccs-doc` JSON document and the
//! sign-matrix text rendering of a set.
//!
//! Both formats round-trip exactly: phases are integers, and general
//! complex entries are serialized as full-precision re/im pairs.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::code::{CodeMatrix, CodeSet, SetKind, SetParams};
use crate::construct::ZccsRecipe;
use crate::error::{Error, Result};
use crate::seq::PhaseSequence;

pub const FORMAT_NAME: &str = "zccs-doc";
pub const FORMAT_VERSION: u32 = 1;

/// Provenance of a generated set: the recipe that rebuilds it and the
/// tool version that wrote it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub recipe: ZccsRecipe,
    pub tool: String,
}

/// A code set as stored on disk.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SetDocument {
    pub format: String,
    pub version: u32,
    /// Alphabet order q; 0 means general complex.
    pub alphabet: u32,
    pub kind: SetKind,
    pub params: SetParams,
    /// Phase integers per code row, present when alphabet > 0.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codes: Option<Vec<Vec<Vec<u32>>>>,
    /// (re, im) pairs per code row, present when alphabet == 0.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codes_complex: Option<Vec<Vec<Vec<(f64, f64)>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

impl SetDocument {
    /// Capture a set (and optionally how it was built) for writing.
    pub fn from_set(set: &CodeSet, provenance: Option<Provenance>) -> Self {
        let q = set.alphabet_order();
        let mut doc = SetDocument {
            format: FORMAT_NAME.to_string(),
            version: FORMAT_VERSION,
            alphabet: q,
            kind: set.kind(),
            params: set.params(),
            codes: None,
            codes_complex: None,
            provenance,
        };
        if q > 0 {
            doc.codes = Some(
                set.codes()
                    .iter()
                    .map(|c| {
                        c.rows()
                            .iter()
                            .map(|r| (0..r.len()).map(|i| r.phase(i).unwrap()).collect())
                            .collect()
                    })
                    .collect(),
            );
        } else {
            doc.codes_complex = Some(
                set.codes()
                    .iter()
                    .map(|c| {
                        c.rows()
                            .iter()
                            .map(|r| r.values().iter().map(|v| (v.re, v.im)).collect())
                            .collect()
                    })
                    .collect(),
            );
        }
        doc
    }

    /// Decode and validate the document payload into a code set.
    pub fn to_set(&self) -> Result<CodeSet> {
        if self.format != FORMAT_NAME {
            return Err(Error::Parse(format!("unknown format {:?}", self.format)));
        }
        if self.version != FORMAT_VERSION {
            return Err(Error::Parse(format!(
                "unsupported version {} (tool reads v{FORMAT_VERSION})",
                self.version
            )));
        }
        let codes: Vec<CodeMatrix> = match (self.alphabet, &self.codes, &self.codes_complex) {
            (0, None, Some(complex)) => complex
                .iter()
                .map(|rows| {
                    let rs = rows
                        .iter()
                        .map(|r| {
                            PhaseSequence::try_from_complex(
                                r.iter().map(|&(re, im)| Complex64::new(re, im)).collect(),
                            )
                        })
                        .collect::<Result<Vec<_>>>()?;
                    CodeMatrix::new(rs)
                })
                .collect::<Result<Vec<_>>>()?,
            (q, Some(phases), None) if q > 0 => phases
                .iter()
                .map(|rows| {
                    let rs = rows
                        .iter()
                        .map(|r| PhaseSequence::from_phases(q, r.clone()))
                        .collect::<Result<Vec<_>>>()?;
                    CodeMatrix::new(rs)
                })
                .collect::<Result<Vec<_>>>()?,
            _ => {
                return Err(Error::Parse(
                    "document must carry exactly one of codes / codes_complex, \
                     matching its alphabet"
                        .into(),
                ))
            }
        };
        CodeSet::new(codes, self.params, self.kind)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Render a set as a human-readable sign table: one line per row, codes
/// separated by blank lines, `+`/`-` glyphs for binary and phase digits
/// otherwise.
pub fn render_sign_matrix(set: &CodeSet) -> String {
    let q = set.alphabet_order();
    let params = set.params();
    let mut out = String::new();
    out.push_str(&format!(
        "# {FORMAT_NAME} v{FORMAT_VERSION} sign-matrix\n# kind={} K={} M={} Z={} N={} q={}\n",
        set.kind().header_token(),
        params.k,
        params.m,
        params.z,
        params.n,
        q
    ));
    for (i, code) in set.codes().iter().enumerate() {
        out.push_str(&format!("\n# code {}\n", i + 1));
        for row in code.rows() {
            let line: Vec<String> = (0..row.len())
                .map(|j| match (q, row.phase(j)) {
                    (2, Some(p)) => if p == 0 { "+" } else { "-" }.to_string(),
                    (_, Some(p)) => p.to_string(),
                    (_, None) => {
                        let v = row.value(j);
                        format!("{}{:+}i", v.re, v.im)
                    }
                })
                .collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
    }
    out
}

/// Parse sign-matrix text back into a set. Headers are optional; with no
/// `# kind=...` line the shape is inferred and the set is tagged raw with
/// the trivial declared zone.
pub fn parse_sign_matrix(text: &str) -> Result<CodeSet> {
    let mut declared: Option<(SetKind, SetParams, u32)> = None;
    let mut blocks: Vec<Vec<Vec<String>>> = Vec::new();
    let mut current: Vec<Vec<String>> = Vec::new();

    for raw in text.lines() {
        let line = raw.trim();
        if let Some(rest) = line.strip_prefix('#') {
            let rest = rest.trim();
            if rest.starts_with("kind=") {
                declared = Some(parse_header(rest)?);
            }
            continue;
        }
        if line.is_empty() {
            if !current.is_empty() {
                blocks.push(std::mem::take(&mut current));
            }
            continue;
        }
        // compact form ("++-") is unambiguous only for sign glyphs; digit
        // rows must be whitespace-separated ("12" is one chip, phase 12)
        let tokens: Vec<String> = if !line.contains(char::is_whitespace)
            && line.chars().all(|c| c == '+' || c == '-')
        {
            line.chars().map(|c| c.to_string()).collect()
        } else {
            line.split_whitespace().map(str::to_string).collect()
        };
        current.push(tokens);
    }
    if !current.is_empty() {
        blocks.push(current);
    }
    if blocks.is_empty() {
        return Err(Error::Parse("no code rows found".into()));
    }

    // Infer the alphabet over the whole document, not per row.
    let q = match declared {
        Some((_, _, q)) => Some(q),
        None => {
            let mut max_digit: Option<u32> = None;
            for tokens in blocks.iter().flatten() {
                for t in tokens {
                    if t != "+" && t != "-" {
                        let d: u32 = t
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad chip token {t:?}")))?;
                        max_digit = Some(max_digit.unwrap_or(0).max(d));
                    }
                }
            }
            max_digit.map(|d| d + 1)
        }
    };
    let codes = blocks
        .iter()
        .map(|rows| {
            let rs = rows
                .iter()
                .map(|tokens| parse_row(tokens, q))
                .collect::<Result<Vec<_>>>()?;
            CodeMatrix::new(rs)
        })
        .collect::<Result<Vec<CodeMatrix>>>()?;

    match declared {
        Some((kind, params, _)) => CodeSet::new(codes, params, kind),
        None => {
            let params = SetParams {
                k: codes.len(),
                m: codes[0].num_rows(),
                z: 1,
                n: codes[0].row_len(),
            };
            CodeSet::new(codes, params, SetKind::Raw)
        }
    }
}

fn parse_header(rest: &str) -> Result<(SetKind, SetParams, u32)> {
    let mut kind = SetKind::Raw;
    let mut k = None;
    let mut m = None;
    let mut z = None;
    let mut n = None;
    let mut q = None;
    for field in rest.split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("bad header field {field:?}")))?;
        match key {
            "kind" => {
                kind = match value {
                    "CCC" => SetKind::Ccc,
                    "MOGCS" => SetKind::Mogcs,
                    "type-II" => SetKind::TypeIiZccs,
                    "raw" => SetKind::Raw,
                    other => return Err(Error::Parse(format!("unknown kind {other:?}"))),
                }
            }
            _ => {
                let parsed: usize = value
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad number in {field:?}")))?;
                match key {
                    "K" => k = Some(parsed),
                    "M" => m = Some(parsed),
                    "Z" => z = Some(parsed),
                    "N" => n = Some(parsed),
                    "q" => q = Some(parsed as u32),
                    other => return Err(Error::Parse(format!("unknown header key {other:?}"))),
                }
            }
        }
    }
    let params = SetParams {
        k: k.ok_or_else(|| Error::Parse("header missing K".into()))?,
        m: m.ok_or_else(|| Error::Parse("header missing M".into()))?,
        z: z.ok_or_else(|| Error::Parse("header missing Z".into()))?,
        n: n.ok_or_else(|| Error::Parse("header missing N".into()))?,
    };
    Ok((kind, params, q.ok_or_else(|| Error::Parse("header missing q".into()))?))
}

fn parse_row(tokens: &[String], declared_q: Option<u32>) -> Result<PhaseSequence> {
    let signs: Option<Vec<i8>> = tokens
        .iter()
        .map(|t| match t.as_str() {
            "+" => Some(1i8),
            "-" => Some(-1i8),
            _ => None,
        })
        .collect();
    if let Some(signs) = signs {
        return PhaseSequence::from_signs(&signs);
    }
    let phases = tokens
        .iter()
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad chip token {t:?}")))
        })
        .collect::<Result<Vec<u32>>>()?;
    let q = match declared_q {
        Some(q) if q > 0 => q,
        _ => phases.iter().copied().max().unwrap_or(0) + 1,
    };
    PhaseSequence::from_phases(q, phases)
}

/// The sign-matrix kind token; inverse of the rendering above.
impl SetKind {
    fn header_token(self) -> &'static str {
        match self {
            SetKind::Ccc => "CCC",
            SetKind::Mogcs => "MOGCS",
            SetKind::TypeIiZccs => "type-II",
            SetKind::Raw => "raw",
        }
    }
}
