//! Command implementations and the small spec-string grammar behind the
//! `zccs` binary.
//!
//! Exit codes: 0 pass, 1 verification fail, 2 parse/usage error,
//! 3 precondition refusal.

use std::fs;
use std::path::Path;

use zccs::analysis::{self, Axis};
use zccs::construct::{ExternalInputs, FamilySpec, SeedSpec, SourceSpec, ZccsRecipe};
use zccs::document::{parse_sign_matrix, render_sign_matrix, Provenance, SetDocument};
use zccs::kernels::OrthogonalFamily;
use zccs::{CodeSet, Error};

pub const TOOL: &str = concat!("zccs ", env!("CARGO_PKG_VERSION"));

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAIL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_REFUSED: i32 = 3;

/// A command failure carrying the process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(_) => EXIT_PARSE,
            Error::Precondition(_) => EXIT_REFUSED,
            Error::Domain(_) | Error::Dimension(_) => EXIT_PARSE,
        };
        Failure::new(code, e.to_string())
    }
}

pub type CmdResult = std::result::Result<(), Failure>;

const SOURCE_GRAMMAR: &str = "--source takes dft:K | table1 | file:PATH";
const SEED_GRAMMAR: &str = "--seed takes barker:P | composite:P1xP2x... | file:PATH";
const FAMILY_GRAMMAR: &str = "--expand takes hadamard:P | file:PATH";
const WEIGHT_GRAMMAR: &str = "--weight takes barker:K (K = rows per code)";

fn usage(message: String) -> Failure {
    Failure::new(EXIT_PARSE, message)
}

/// Parse a `--source` spec string.
pub fn parse_source(spec: &str) -> Result<SourceSpec, Failure> {
    if spec == "table1" {
        return Ok(SourceSpec::Table1);
    }
    if let Some(k) = spec.strip_prefix("dft:") {
        let k: usize = k
            .parse()
            .map_err(|_| usage(format!("bad set size in {spec:?}; {SOURCE_GRAMMAR}")))?;
        return Ok(SourceSpec::Dft(k));
    }
    if let Some(path) = spec.strip_prefix("file:") {
        return Ok(SourceSpec::File(path.to_string()));
    }
    Err(usage(format!("unknown source {spec:?}; {SOURCE_GRAMMAR}")))
}

/// Parse a `--seed` spec string.
pub fn parse_seed(spec: &str) -> Result<SeedSpec, Failure> {
    if let Some(p) = spec.strip_prefix("barker:") {
        let p: usize = p
            .parse()
            .map_err(|_| usage(format!("bad length in {spec:?}; {SEED_GRAMMAR}")))?;
        return Ok(SeedSpec::Barker(p));
    }
    if let Some(parts) = spec.strip_prefix("composite:") {
        let factors = parts
            .split('x')
            .map(|f| f.parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| usage(format!("bad factors in {spec:?}; {SEED_GRAMMAR}")))?;
        if factors.is_empty() {
            return Err(usage(format!("empty factor list in {spec:?}; {SEED_GRAMMAR}")));
        }
        return Ok(SeedSpec::Composite(factors));
    }
    if let Some(path) = spec.strip_prefix("file:") {
        return Ok(SeedSpec::File(path.to_string()));
    }
    Err(usage(format!("unknown seed {spec:?}; {SEED_GRAMMAR}")))
}

/// Parse an `--expand` spec string.
pub fn parse_family(spec: &str) -> Result<FamilySpec, Failure> {
    if let Some(p) = spec.strip_prefix("hadamard:") {
        let p: usize = p
            .parse()
            .map_err(|_| usage(format!("bad size in {spec:?}; {FAMILY_GRAMMAR}")))?;
        return Ok(FamilySpec::Hadamard(p));
    }
    if let Some(path) = spec.strip_prefix("file:") {
        return Ok(FamilySpec::File(path.to_string()));
    }
    Err(usage(format!("unknown family {spec:?}; {FAMILY_GRAMMAR}")))
}

/// Parse a `--weight` spec string into the Barker length.
pub fn parse_weight(spec: &str) -> Result<usize, Failure> {
    if let Some(k) = spec.strip_prefix("barker:") {
        return k
            .parse()
            .map_err(|_| usage(format!("bad length in {spec:?}; {WEIGHT_GRAMMAR}")));
    }
    Err(usage(format!("unknown weight {spec:?}; {WEIGHT_GRAMMAR}")))
}

/// Read a set from a path: a zccs-doc JSON file or sign-matrix text,
/// decided by the first non-space byte.
pub fn load_set(path: &Path) -> Result<CodeSet, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))?;
    if text.trim_start().starts_with('{') {
        Ok(SetDocument::parse_json(&text)?.to_set()?)
    } else {
        Ok(parse_sign_matrix(&text)?)
    }
}

fn load_externals(recipe: &ZccsRecipe) -> Result<ExternalInputs, Failure> {
    let mut ext = ExternalInputs::default();
    if let SourceSpec::File(path) = &recipe.source {
        ext.sources.insert(path.clone(), load_set(Path::new(path))?);
    }
    if recipe.family.is_none() {
        if let SeedSpec::File(path) = &recipe.seed {
            let set = load_set(Path::new(path))?;
            if set.params().k != 1 || set.params().m != 1 {
                return Err(Failure::new(
                    EXIT_PARSE,
                    format!("seed file {path} must contain exactly one row"),
                ));
            }
            ext.seeds.insert(path.clone(), set.code(0).row(0).clone());
        }
    }
    if let Some(FamilySpec::File(path)) = &recipe.family {
        let set = load_set(Path::new(path))?;
        if set.params().k != 1 {
            return Err(Failure::new(
                EXIT_PARSE,
                format!("family file {path} must contain exactly one block of rows"),
            ));
        }
        let fam = OrthogonalFamily::new(set.code(0).rows().to_vec())?;
        ext.families.insert(path.clone(), fam);
    }
    Ok(ext)
}

/// `generate`: build a set from a recipe and write the JSON document plus
/// the sign-matrix text next to each other.
pub fn run_generate(recipe: ZccsRecipe, out_prefix: &str) -> CmdResult {
    let ext = load_externals(&recipe)?;
    let set = recipe.build(&ext)?;
    let verification = analysis::verify_zccs(&set)?;

    let doc = SetDocument::from_set(
        &set,
        Some(Provenance {
            recipe,
            tool: TOOL.to_string(),
        }),
    );
    let json_path = format!("{out_prefix}.json");
    let text_path = format!("{out_prefix}.txt");
    write_file(&json_path, &format!("{}\n", doc.to_json()))?;
    write_file(&text_path, &render_sign_matrix(&set))?;

    println!(
        "generated {} {} -> {json_path}, {text_path}",
        set.kind(),
        set.params()
    );
    println!("verification: {}", verification.describe());
    if !verification.pass {
        return Err(Failure::new(
            EXIT_VERIFY_FAIL,
            "generated set failed verification".to_string(),
        ));
    }
    Ok(())
}

/// `verify`: classify a stored set and check it against its declared
/// parameters. Exit 0 on pass, 1 on fail, 2 on parse errors.
pub fn run_verify(path: &Path) -> CmdResult {
    let set = load_set(path)?;
    let v = analysis::verify_zccs(&set)?;
    println!("classification: {}", v.classification);
    println!("declared: {} {}", set.kind(), set.params());
    println!(
        "measured: Z = {} (peak {}, cross-at-zero {}{})",
        v.z_measured,
        if v.peak_ok { "ok" } else { "BAD" },
        if v.cross_zero_ok { "ok" } else { "BAD" },
        if v.exact { ", exact" } else { "" }
    );
    if v.pass {
        let bound = analysis::set_size_bound_check(&set)?;
        println!(
            "set-size bound: K = {} <= M(N-Z+1) = {}{}",
            bound.k,
            bound.bound,
            if bound.optimal { " (optimal)" } else { "" }
        );
        println!("result: pass");
        Ok(())
    } else {
        if let Some((i, j, tau)) = v.worst_offzone_at {
            println!(
                "violation: |ACCS| = {:.6} at codes ({i}, {j}) shift {tau}",
                v.worst_offzone
            );
        }
        println!("result: fail");
        Err(Failure::new(EXIT_VERIFY_FAIL, String::new()))
    }
}

/// `analyze`: write per-sequence PMEPR bounds and numeric PMEPR along one
/// axis, plus the per-code AACS profile dump. Refuses unverified input
/// unless forced (exit 3).
pub fn run_analyze(
    path: &Path,
    axis: Axis,
    oversampling: usize,
    force: bool,
    out_prefix: &str,
) -> CmdResult {
    let set = load_set(path)?;
    let v = analysis::verify_zccs(&set)?;
    if !v.pass && !force {
        return Err(Failure::new(
            EXIT_REFUSED,
            format!(
                "input does not verify ({}); pass --force to analyze anyway",
                v.describe()
            ),
        ));
    }

    let report = match axis {
        Axis::Row => analysis::row_pmepr_report(&set, oversampling)?,
        Axis::Column => analysis::column_pmepr_report(&set, oversampling)?,
    };
    let mut csv = String::from("axis,code,index,length,bound,bound_num,bound_den,numeric\n");
    for e in &report.entries {
        let (num, den) = e
            .bound_exact
            .map(|r| (r.numer().to_string(), r.denom().to_string()))
            .unwrap_or_default();
        csv.push_str(&format!(
            "{},{},{},{},{:.12},{},{},{:.12}\n",
            report.axis, e.code, e.index, e.len, e.bound, num, den, e.numeric
        ));
    }
    let pmepr_path = format!("{out_prefix}_pmepr.csv");
    write_file(&pmepr_path, &csv)?;

    let mut dump = String::from("code,tau,re,im\n");
    for (idx, code) in set.codes().iter().enumerate() {
        let profile = zccs::code_accs(code, code)?;
        for (tau, value) in profile.shifts() {
            let c = value.to_complex();
            dump.push_str(&format!("{idx},{tau},{},{}\n", c.re, c.im));
        }
    }
    let profile_path = format!("{out_prefix}_profiles.csv");
    write_file(&profile_path, &dump)?;

    println!(
        "analyzed {} {} along {}: max bound {:.6}, max numeric {:.6} (x{} oversampling)",
        set.kind(),
        set.params(),
        report.axis,
        report.max_bound,
        report.max_numeric,
        report.oversampling
    );
    println!("wrote {pmepr_path}, {profile_path}");
    Ok(())
}

/// `coverage`: enumerate achievable type-II pair lengths up to a cap.
pub fn run_coverage(max_len: usize, out: Option<&str>) -> CmdResult {
    let entries = analysis::length_coverage(max_len)?;
    let mut csv = String::from("length,n,p,zcz_width,quadriphase_form\n");
    for e in &entries {
        csv.push_str(&format!(
            "{},{},{},{},{}\n",
            e.length, e.n, e.p, e.zcz_width, e.quadriphase_form
        ));
    }
    match out {
        Some(prefix) => {
            let path = format!("{prefix}_coverage.csv");
            write_file(&path, &csv)?;
            println!("wrote {path} ({} entries)", entries.len());
        }
        None => print!("{csv}"),
    }
    Ok(())
}

fn write_file(path: &str, content: &str) -> Result<(), Failure> {
    fs::write(path, content)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot write {path}: {e}")))
}
