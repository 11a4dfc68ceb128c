//! The Kronecker constructions: CCC (x) seed -> type-II ZCCS, the
//! complementary-set and Golay-pair specializations, Barker row-weighting,
//! and set expansion through orthogonal families.

use serde::{Deserialize, Serialize};

use crate::ccc::CccSet;
use crate::code::{code_accs, CodeMatrix, CodeSet, SetKind, SetParams};
use crate::error::{Error, Result};
use crate::kernels::{BarkerSequence, GolayPair, OrthogonalFamily};
use crate::seq::PhaseSequence;

/// Declared parameters of a Kronecker-built set: K' = r*K codes of K rows,
/// length N*P, zone width N*P - P + 1.
pub fn kronecker_params(k: usize, m: usize, n: usize, p: usize, r: usize) -> SetParams {
    SetParams {
        k: r * k,
        m,
        z: n * p - p + 1,
        n: n * p,
    }
}

/// Kronecker each code of a CCC with a unimodular seed of length P:
/// gives a type-II (K, K, NP-P+1, NP)-ZCCS.
pub fn build_zccs(ccc: &CccSet, b: &PhaseSequence) -> Result<CodeSet> {
    let src = ccc.as_code_set();
    let params = src.params();
    let codes = src.codes().iter().map(|c| c.kron_rows(b)).collect();
    CodeSet::new(
        codes,
        kronecker_params(params.k, params.m, params.n, b.len(), 1),
        SetKind::TypeIiZccs,
    )
}

/// Kronecker a complementary set with a seed: a type-II ZCS of size
/// M x NP with zone width NP-P+1. Errors when the input is not a
/// complementary set, locating the first violated shift.
pub fn build_zcs(cs: &CodeMatrix, b: &PhaseSequence) -> Result<CodeMatrix> {
    let profile = code_accs(cs, cs)?;
    let eps = 1e-10 * (cs.num_rows() * cs.row_len()) as f64;
    for (tau, v) in profile.shifts() {
        if tau != 0 && !v.is_zero(eps) {
            return Err(Error::Domain(format!(
                "input is not a complementary set: AACS sum {} at shift {tau}",
                v.to_complex()
            )));
        }
    }
    Ok(cs.kron_rows(b))
}

/// Kronecker both members of a Golay pair with a seed: a type-II ZCP of
/// length NP with zone width NP-P+1.
pub fn build_zcp(g: &GolayPair, b: &PhaseSequence) -> (PhaseSequence, PhaseSequence) {
    (g.first().kron(b), g.second().kron(b))
}

/// Multiply row m of every code by gamma_m. Row-wise correlations keep
/// their magnitudes, so the set verifies unchanged; columns inherit the
/// weight's autocorrelation when the CCC columns are scaled characters.
pub fn barker_weight(z: &CodeSet, gamma: &BarkerSequence) -> Result<CodeSet> {
    let params = z.params();
    if gamma.len() != params.m {
        return Err(Error::Dimension(format!(
            "weight length {} must equal the number of rows {}",
            gamma.len(),
            params.m
        )));
    }
    let signs = gamma.signs();
    let codes = z
        .codes()
        .iter()
        .map(|code| {
            let rows = code
                .rows()
                .iter()
                .zip(&signs)
                .map(|(row, &s)| if s == 1 { row.clone() } else { row.negate() })
                .collect::<Vec<_>>();
            // negation of odd-alphabet rows upcasts; re-align the others
            let q = rows.iter().map(|r| r.alphabet_order()).max().unwrap_or(0);
            let rows = rows
                .into_iter()
                .map(|r| if r.alphabet_order() == q { Ok(r) } else { r.with_alphabet(q) })
                .collect::<Result<Vec<_>>>()?;
            CodeMatrix::new(rows)
        })
        .collect::<Result<Vec<_>>>()?;
    CodeSet::new(codes, params, z.kind())
}

/// Expand a CCC by a family of r mutually-orthogonal-to-conjugate seeds:
/// a type-II (rK, K, NP-P+1, NP)-ZCCS, listed family-major (all codes for
/// the first member, then the second, ...).
pub fn expand_set(ccc: &CccSet, fam: &OrthogonalFamily) -> Result<CodeSet> {
    let src = ccc.as_code_set();
    let params = src.params();
    let p = fam.member_len();
    let mut codes = Vec::with_capacity(fam.size() * params.k);
    for b in fam.members() {
        if b.len() != p {
            return Err(Error::Dimension("family members must share a length".into()));
        }
        for c in src.codes() {
            codes.push(c.kron_rows(b));
        }
    }
    CodeSet::new(
        codes,
        kronecker_params(params.k, params.m, params.n, p, fam.size()),
        SetKind::TypeIiZccs,
    )
}

/// How a set was produced; enough to regenerate it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct ZccsRecipe {
    pub source: SourceSpec,
    pub seed: SeedSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilySpec>,
    /// Barker row-weight length (equals the number of rows), when applied.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SourceSpec {
    Dft(usize),
    Table1,
    File(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeedSpec {
    Barker(usize),
    Composite(Vec<usize>),
    File(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilySpec {
    Hadamard(usize),
    File(String),
}

/// Pre-loaded contents for the `File` variants, keyed by the path string.
/// The library does no I/O; callers resolve files and hand them over.
#[derive(Debug, Default)]
pub struct ExternalInputs {
    pub sources: std::collections::BTreeMap<String, CodeSet>,
    pub seeds: std::collections::BTreeMap<String, PhaseSequence>,
    pub families: std::collections::BTreeMap<String, OrthogonalFamily>,
}

impl ZccsRecipe {
    /// Build the set this recipe describes. Deterministic; byte-identical
    /// reruns for the built-in sources. When a family is present its
    /// members are the seeds (the set-expansion route) and `seed` is
    /// not consulted.
    pub fn build(&self, ext: &ExternalInputs) -> Result<CodeSet> {
        let ccc = match &self.source {
            SourceSpec::Dft(k) => crate::ccc::ccc_dft(*k)?,
            SourceSpec::Table1 => crate::ccc::ccc_table1(),
            SourceSpec::File(path) => {
                let set = ext.sources.get(path).ok_or_else(|| {
                    Error::Precondition(format!("source file {path} not provided"))
                })?;
                CccSet::try_from_code_set(set.clone())?
            }
        };
        let mut set = match &self.family {
            None => {
                let seed = match &self.seed {
                    // barker:1 is the degenerate identity seed
                    SeedSpec::Barker(1) => PhaseSequence::all_ones(1),
                    SeedSpec::Barker(p) => crate::kernels::barker(*p)?.sequence().clone(),
                    SeedSpec::Composite(factors) => crate::kernels::composite_barker(factors)?,
                    SeedSpec::File(path) => ext
                        .seeds
                        .get(path)
                        .ok_or_else(|| {
                            Error::Precondition(format!("seed file {path} not provided"))
                        })?
                        .clone(),
                };
                build_zccs(&ccc, &seed)?
            }
            Some(spec) => {
                let fam = match spec {
                    FamilySpec::Hadamard(p) => crate::kernels::hadamard(*p)?,
                    FamilySpec::File(path) => ext
                        .families
                        .get(path)
                        .ok_or_else(|| {
                            Error::Precondition(format!("family file {path} not provided"))
                        })?
                        .clone(),
                };
                expand_set(&ccc, &fam)?
            }
        };
        if let Some(w) = self.weight {
            let gamma = crate::kernels::barker(w)?;
            set = barker_weight(&set, &gamma)?;
        }
        Ok(set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ccc::{ccc_dft, ccc_table1};
    use crate::kernels::{barker, gcp, hadamard};
    use crate::corr::correlation_profile;

    fn pm(signs: &[i8]) -> PhaseSequence {
        PhaseSequence::from_signs(signs).unwrap()
    }

    #[test]
    fn p_equal_1_returns_the_ccc() {
        let ccc = ccc_dft(4).unwrap();
        let z = build_zccs(&ccc, &PhaseSequence::all_ones(1)).unwrap();
        assert_eq!(z.codes(), ccc.as_code_set().codes());
        assert_eq!(z.params().z, z.params().n);
    }

    #[test]
    fn table2_parameters() {
        let z = build_zccs(&ccc_table1(), &pm(&[1, 1, -1])).unwrap();
        assert_eq!(z.params(), SetParams { k: 4, m: 4, z: 22, n: 24 });
    }

    #[test]
    fn zcs_from_gcp_rows() {
        let g = gcp(2).unwrap();
        let cs = CodeMatrix::new(vec![g.first().clone(), g.second().clone()]).unwrap();
        let z = build_zcs(&cs, &pm(&[1, 1, -1])).unwrap();
        assert_eq!((z.num_rows(), z.row_len()), (2, 6));
        let p = code_accs(&z, &z).unwrap();
        for (tau, v) in p.shifts() {
            if tau.unsigned_abs() >= 3 {
                assert_eq!(v.exact_zero(), Some(true), "tau={tau}");
            }
        }
    }

    #[test]
    fn zcs_identity_seed() {
        let g = gcp(4).unwrap();
        let cs = CodeMatrix::new(vec![g.first().clone(), g.second().clone()]).unwrap();
        let z = build_zcs(&cs, &PhaseSequence::all_ones(1)).unwrap();
        assert_eq!(&z, &cs);
    }

    #[test]
    fn zcs_rejects_non_complementary_input() {
        let cs = CodeMatrix::new(vec![pm(&[1, 1]), pm(&[1, 1])]).unwrap();
        let err = build_zcs(&cs, &pm(&[1, -1])).unwrap_err();
        assert!(err.to_string().contains("shift"));
    }

    #[test]
    fn four_row_stacked_gcp_zcs() {
        let g = gcp(4).unwrap();
        let rows = vec![
            g.first().clone(),
            g.second().clone(),
            g.first().negate(),
            g.second().negate(),
        ];
        let cs = CodeMatrix::new(rows).unwrap();
        let b = barker(4).unwrap();
        let z = build_zcs(&cs, b.sequence()).unwrap();
        assert_eq!((z.num_rows(), z.row_len()), (4, 16));
        let p = code_accs(&z, &z).unwrap();
        for (tau, v) in p.shifts() {
            if tau.unsigned_abs() >= 4 {
                assert_eq!(v.exact_zero(), Some(true), "tau={tau}");
            }
        }
    }

    #[test]
    fn zcp_zone_and_degenerate_seed() {
        let g = gcp(2).unwrap();
        let (s, t) = build_zcp(&g, &pm(&[1, 1, -1]));
        assert_eq!(s.len(), 6);
        let ps = correlation_profile(&s, &s).unwrap();
        let pt = correlation_profile(&t, &t).unwrap();
        for tau in 3..6isize {
            let mut sum = ps.at(tau).unwrap().clone();
            sum.add_assign(pt.at(tau).unwrap());
            assert_eq!(sum.exact_zero(), Some(true), "tau={tau}");
        }
        let g4 = gcp(4).unwrap();
        let (s, t) = build_zcp(&g4, &PhaseSequence::all_ones(1));
        assert_eq!((&s, &t), (g4.first(), g4.second()));
    }

    #[test]
    fn all_ones_weight_is_identity() {
        // the canonical length-2 Barker is all-plus, so weighting by it is a no-op
        let z = build_zccs(&ccc_dft(2).unwrap(), &pm(&[1, 1, -1])).unwrap();
        let w = barker_weight(&z, &barker(2).unwrap()).unwrap();
        assert_eq!(w.codes(), z.codes());
    }

    #[test]
    fn weight_length_mismatch_rejected() {
        let z = build_zccs(&ccc_dft(3).unwrap(), &pm(&[1, 1, -1])).unwrap();
        assert!(barker_weight(&z, &barker(5).unwrap()).is_err());
    }

    #[test]
    fn expansion_with_singleton_family_matches_plain_build() {
        let ccc = ccc_dft(2).unwrap();
        let fam = hadamard(1).unwrap();
        let seed = fam.members()[0].clone();
        let expanded = expand_set(&ccc, &fam).unwrap();
        let plain = build_zccs(&ccc, &seed).unwrap();
        assert_eq!(expanded.codes(), plain.codes());
    }

    #[test]
    fn expansion_counts_codes_family_major() {
        let ccc = ccc_dft(2).unwrap();
        let fam = hadamard(4).unwrap();
        let z = expand_set(&ccc, &fam).unwrap();
        assert_eq!(z.params(), SetParams { k: 8, m: 2, z: 5, n: 8 });
        // code 0 and code K share the first CCC member but different seeds
        let direct = ccc.as_code_set().code(0).kron_rows(&fam.members()[1]);
        assert_eq!(z.code(2), &direct);
    }

    #[test]
    fn recipe_rebuild_is_deterministic() {
        let recipe = ZccsRecipe {
            source: SourceSpec::Table1,
            seed: SeedSpec::Barker(3),
            family: None,
            weight: None,
        };
        let a = recipe.build(&ExternalInputs::default()).unwrap();
        let b = recipe.build(&ExternalInputs::default()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.params(), SetParams { k: 4, m: 4, z: 22, n: 24 });
    }

    #[test]
    fn recipe_missing_file_is_precondition_error() {
        let recipe = ZccsRecipe {
            source: SourceSpec::File("missing.json".into()),
            seed: SeedSpec::Barker(3),
            family: None,
            weight: None,
        };
        assert!(matches!(
            recipe.build(&ExternalInputs::default()),
            Err(Error::Precondition(_))
        ));
    }
}
