//! Report builders behind the `cyclic-covers` binary.
//!
//! Every command is a pure function from validated inputs to an output
//! string, so identical inputs produce byte-identical outputs and the
//! binary is a thin argument-parsing shell. Exit codes: 0 success,
//! 2 invalid mathematical input, 3 parse error, 4 I/O error.

use serde::Serialize;

use cyclic_covers::homology::{cylinders, homological_dim_surface};
use cyclic_covers::orbit::{export_orbit, homological_dim_curve, orbit, OrbitError};
use cyclic_covers::origami::{cyclic_cover, stairs, Origami, OrigamiError, Permutation};
use cyclic_covers::params::{CoverParams, ParamError};
use cyclic_covers::spectra::{
    eigen_block, lyapunov_spectrum, minus_spectrum, SpectraError, SpectrumMultiset,
};
use cyclic_covers::Rational;

/// Failure modes mapped to process exit codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Exit 2: mathematically invalid input.
    Invalid(String),
    /// Exit 3: malformed input that could not be parsed.
    Parse(String),
    /// Exit 4: I/O failure.
    Io(String),
}

impl CliError {
    /// The process exit code for this failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Parse(_) => 3,
            CliError::Io(_) => 4,
        }
    }

    /// The message printed to stderr.
    pub fn message(&self) -> &str {
        match self {
            CliError::Invalid(m) | CliError::Parse(m) | CliError::Io(m) => m,
        }
    }
}

impl From<ParamError> for CliError {
    fn from(e: ParamError) -> Self {
        let name = match &e {
            ParamError::RangeViolation(_) => "RangeViolation",
            ParamError::GcdViolation(_) => "GcdViolation",
            ParamError::SumViolation(..) => "SumViolation",
        };
        CliError::Invalid(format!("{name}: {e}"))
    }
}

impl From<SpectraError> for CliError {
    fn from(e: SpectraError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<OrigamiError> for CliError {
    fn from(e: OrigamiError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<OrbitError> for CliError {
    fn from(e: OrbitError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

/// Parses `--a c1,c2,c3,c4`.
pub fn parse_a(s: &str) -> Result<[i64; 4], CliError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(CliError::Parse(format!(
            "--a expects four comma-separated integers, got {s:?}"
        )));
    }
    let mut a = [0i64; 4];
    for (slot, part) in a.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse()
            .map_err(|e| CliError::Parse(format!("bad integer {part:?} in --a: {e}")))?;
    }
    Ok(a)
}

/// Parses a comma-separated 1-indexed permutation image list.
pub fn parse_sigma(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|e| CliError::Parse(format!("bad integer {p:?} in --sigma: {e}")))
        })
        .collect()
}

/// Validates cover parameters, mapping violations to exit 2.
pub fn validated_params(n: i64, a: [i64; 4]) -> Result<CoverParams, CliError> {
    Ok(CoverParams::new(n, a)?)
}

#[derive(Serialize)]
struct SpectrumEntryWire {
    value: String,
    mult: u64,
}

#[derive(Serialize)]
struct SpectrumWire {
    #[serde(rename = "N")]
    n: u64,
    a: [u64; 4],
    genus: u64,
    spectrum: Vec<SpectrumEntryWire>,
}

fn spectrum_entries(spec: &SpectrumMultiset) -> Vec<SpectrumEntryWire> {
    spec.iter_desc()
        .map(|(v, m)| SpectrumEntryWire {
            value: v.to_string(),
            mult: m,
        })
        .collect()
}

/// `spectrum` command: genus plus the multiset, descending.
pub fn spectrum_text(p: &CoverParams) -> String {
    let spec = lyapunov_spectrum(p);
    format!("genus = {}\nspectrum = {}\n", p.genus(), spec)
}

/// `spectrum --format json`.
pub fn spectrum_json(p: &CoverParams) -> String {
    let spec = lyapunov_spectrum(p);
    let wire = SpectrumWire {
        n: p.n(),
        a: p.a(),
        genus: p.genus(),
        spectrum: spectrum_entries(&spec),
    };
    let mut s = serde_json::to_string(&wire).expect("spectrum reports serialize");
    s.push('\n');
    s
}

/// The lambda cell of a table row, per the spectrum algorithm:
/// `-` when `t(k) = 1`, the exponent `2 d(k)` when `t(k) = 2`,
/// `0; 0` when `t(k) = 3`.
fn lambda_cell(p: &CoverParams, k: u64) -> String {
    let block = eigen_block(p, k).expect("k in range");
    match block.t_sum {
        1 => "-".to_string(),
        3 => "0; 0".to_string(),
        2 => {
            let two = Rational::from_integer(2.into());
            let d = cyclic_covers::spectra::degree_d(p, p.n() - k)
                .expect("t(k) = 2 makes V^{1,0}(N-k) a line bundle");
            (two * d).to_string()
        }
        t => unreachable!("t(k) = {t}"),
    }
}

/// One table row in the reference-table convention: the three dims are
/// those of `V^{1,0}(N-k)`, `V^{0,1}(N-k)`, `V(N-k)`.
fn table_row(p: &CoverParams, k: u64) -> Vec<String> {
    let block = eigen_block(p, k).expect("k in range");
    let conj = eigen_block(p, p.n() - k).expect("N-k in range");
    let mut row = vec![k.to_string()];
    row.extend(block.t_parts.iter().map(|t| t.to_string()));
    row.push(block.t_sum.to_string());
    row.push(conj.dim_v10.to_string());
    row.push(conj.dim_v01.to_string());
    row.push(conj.dim_v.to_string());
    row.push(lambda_cell(p, k));
    row
}

const TABLE_HEADER: [&str; 10] = [
    "k", "t1", "t2", "t3", "t4", "t", "dimV10", "dimV01", "dimV", "lambda",
];

/// `table --format csv`: header plus one row per `k = 1..N-1`.
pub fn table_csv(p: &CoverParams) -> String {
    let mut out = TABLE_HEADER.join(",");
    out.push('\n');
    for k in 1..p.n() {
        out.push_str(&table_row(p, k).join(","));
        out.push('\n');
    }
    out
}

/// `table --format text`: the same cells, space-aligned.
pub fn table_text(p: &CoverParams) -> String {
    let rows: Vec<Vec<String>> = (1..p.n()).map(|k| table_row(p, k)).collect();
    let mut widths: Vec<usize> = TABLE_HEADER.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let fmt_row = |cells: &[String]| {
        let mut line = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(&format!("{cell:>w$}", w = w));
        }
        line.push('\n');
        line
    };
    let header: Vec<String> = TABLE_HEADER.iter().map(|s| s.to_string()).collect();
    let mut out = fmt_row(&header);
    for row in &rows {
        out.push_str(&fmt_row(row));
    }
    out
}

/// `minus` command: double-cover parameters, the anti-invariant spectrum
/// and the effective genus. Odd `N` only.
pub fn minus_text(p: &CoverParams) -> Result<String, CliError> {
    let double = p.double_cover()?;
    let (minus, g_eff) = minus_spectrum(p)?;
    Ok(format!(
        "double cover = {double}\nminus spectrum = {minus}\neffective genus = {g_eff}\n"
    ))
}

/// One scan row: parameters, genus, abelian flag, encoded spectrum and
/// the exact sum of the nonnegative exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    /// The parameters of this row.
    pub params: CoverParams,
    /// Genus of the cover.
    pub genus: u64,
    /// Whether the tuple is in the abelian case.
    pub abelian: bool,
    /// Wire-encoded spectrum multiset.
    pub spectrum: String,
    /// Exact sum over the multiset.
    pub sum_positive: Rational,
}

/// CSV header of the scan output.
pub const SCAN_HEADER: &str = "N,a1,a2,a3,a4,genus,abelian,spectrum,sum_positive";

fn scan_row(p: CoverParams) -> ScanRow {
    let spec = lyapunov_spectrum(&p);
    ScanRow {
        genus: p.genus(),
        abelian: p.is_abelian_square(),
        spectrum: spec.to_string(),
        sum_positive: spec.sum(),
        params: p,
    }
}

impl ScanRow {
    /// The CSV line for this row.
    pub fn to_csv(&self) -> String {
        let a = self.params.a();
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.params.n(),
            a[0],
            a[1],
            a[2],
            a[3],
            self.genus,
            self.abelian,
            self.spectrum,
            self.sum_positive
        )
    }
}

/// All valid tuples with `N <= max_n` in lexicographic `(N, a)` order.
/// `a4` is determined modulo `N` by the sum condition, so the scan walks
/// `(N, a1, a2, a3)` and keeps the tuples passing validation.
pub fn enumerate_params(max_n: u64, abelian_only: bool) -> Vec<CoverParams> {
    let mut out = Vec::new();
    for n in 1..=max_n as i64 {
        for a1 in 1..=n {
            for a2 in 1..=n {
                for a3 in 1..=n {
                    let a4 = n - (a1 + a2 + a3) % n;
                    if let Ok(p) = CoverParams::new(n, [a1, a2, a3, a4]) {
                        if !abelian_only || p.is_abelian_square() {
                            out.push(p);
                        }
                    }
                }
            }
        }
    }
    out
}

/// `scan` command body: deterministic CSV, independent of `jobs`.
pub fn scan_csv(max_n: u64, abelian_only: bool, jobs: usize) -> String {
    use rayon::prelude::*;
    let params = enumerate_params(max_n, abelian_only);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let rows: Vec<ScanRow> = pool.install(|| params.into_par_iter().map(scan_row).collect());
    let mut out = String::from(SCAN_HEADER);
    out.push('\n');
    for row in &rows {
        out.push_str(&row.to_csv());
        out.push('\n');
    }
    out
}

fn to_json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("wire types serialize");
    s.push('\n');
    s
}

/// `origami stairs --N n`.
pub fn origami_stairs(n: usize) -> Result<String, CliError> {
    if n < 1 {
        return Err(CliError::Invalid("stairs needs N >= 1".into()));
    }
    Ok(to_json_line(&stairs(n)))
}

/// `origami cover --N n --a ...`: the cover origami JSON.
pub fn origami_cover(p: &CoverParams) -> Result<String, CliError> {
    Ok(to_json_line(&cyclic_cover(p)?.origami))
}

/// Parses the JSON wire form of an origami (exit 3 on any failure).
pub fn parse_origami(json: &str) -> Result<Origami, CliError> {
    serde_json::from_str(json).map_err(|e| CliError::Parse(format!("bad origami JSON: {e}")))
}

/// `origami orbit`: the orbit graph as JSON, with optional DOT.
pub fn origami_orbit(o: &Origami, cap: usize) -> Result<(String, String), CliError> {
    let graph = orbit(o, cap)?;
    let json = export_orbit(&graph, "json")?;
    let dot = export_orbit(&graph, "dot")?;
    Ok((json + "\n", dot))
}

/// `origami automorphisms`: 1-indexed image arrays, sorted.
pub fn origami_automorphisms(o: &Origami) -> String {
    let mut auts: Vec<Vec<usize>> = o
        .automorphisms()
        .iter()
        .map(Permutation::to_one_indexed)
        .collect();
    auts.sort();
    to_json_line(&auts)
}

/// `origami quotient --sigma ...`.
pub fn origami_quotient(o: &Origami, sigma_images: &[usize]) -> Result<String, CliError> {
    let sigma = Permutation::from_one_indexed(sigma_images)
        .map_err(|e| CliError::Invalid(e.to_string()))?;
    Ok(to_json_line(&o.quotient(&sigma)?))
}

#[derive(Serialize)]
struct CylinderWire {
    width: usize,
    height: usize,
    rows: Vec<Vec<usize>>,
}

/// `origami cylinders`: the decomposition as JSON.
pub fn origami_cylinders(o: &Origami) -> String {
    let mut wires: Vec<CylinderWire> = cylinders(o)
        .into_iter()
        .map(|c| CylinderWire {
            width: c.width,
            height: c.height,
            rows: c
                .rows
                .iter()
                .map(|r| r.iter().map(|&s| s + 1).collect())
                .collect(),
        })
        .collect();
    wires.sort_by_key(|c| c.rows[0][0]);
    to_json_line(&wires)
}

/// `origami homdim [--orbit]`.
pub fn origami_homdim(o: &Origami, over_orbit: bool, cap: usize) -> Result<String, CliError> {
    let d = if over_orbit {
        homological_dim_curve(o, cap)?
    } else {
        homological_dim_surface(o)
    };
    Ok(format!("{d}\n"))
}

/// `origami stratum`.
pub fn origami_stratum(o: &Origami) -> String {
    to_json_line(&o.stratum())
}
