//! Command-line front end. Every command produces a single report in JSON,
//! CSV or plain text; identical arguments give byte-identical output.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::complex::{CellComplex, PartitionComplex};
use crate::construction::{build_main_matching, number_partition_label, quotient_main_matching, MatchingTower};
use crate::error::{invalid_arg, Error, Result};
use crate::homology::{verify_wedge, ChainComplex, HomologyResult};
use crate::morse::{check_equivariance, dump_matching, validate_matching};
use crate::perm::{parse_generators, PermGroup, Permutation, QuotientComplex};
use crate::verify::{verify, Check};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// f-vector and Euler characteristic of the nerve (or its orbit complex)
    Complex,
    /// Build the main matching, print certificates
    Matching,
    /// Orbit complex, quotient matching and its critical cells
    Quotient,
    /// Reduced integral homology of the nerve or orbit complex
    Homology,
    /// Run every check for one n; exit 1 if any fails
    Verify,
    /// Matching reports for every n from 3 up to --n
    Report,
}

#[derive(Clone, Debug, Parser)]
#[command(name = "partmorse", version, about = "Discrete Morse theory on partition lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    options: Options,
}

#[derive(Clone, Debug, Args)]
struct Options {
    /// Number of elements, at least 3
    #[arg(long, global = true, default_value_t = 4)]
    n: usize,
    /// Group generators in cycle notation, e.g. "(2 3),(2 3 4)"; repeatable
    #[arg(long, global = true)]
    group: Vec<String>,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Highest dimension to report
    #[arg(long, global = true)]
    max_dim: Option<usize>,
    /// Write the matching, one pair per line, to this file
    #[arg(long, global = true)]
    dump_matching: Option<PathBuf>,
}

/// Parsed command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub n: usize,
    pub group: Vec<String>,
    pub format: Format,
    pub max_dim: Option<usize>,
    pub out_path: Option<PathBuf>,
    pub dump_matching: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(command: Command, n: usize) -> Self {
        Self {
            command,
            n,
            group: Vec::new(),
            format: Format::Json,
            max_dim: None,
            out_path: None,
            dump_matching: None,
        }
    }

    pub fn parse_from<I, T>(args: I) -> std::result::Result<Self, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args)?;
        Ok(Self {
            command: cli.command,
            n: cli.options.n,
            group: cli.options.group,
            format: cli.options.format,
            max_dim: cli.options.max_dim,
            out_path: cli.options.out,
            dump_matching: cli.options.dump_matching,
        })
    }
}

/// Result of a command.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub report: String,
    pub warnings: Vec<String>,
    /// Names of failed certificates or checks.
    pub failures: Vec<String>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.failures.is_empty() {
            0
        } else {
            1
        }
    }
}

/// Exit code for an error: 2 when the configuration itself is at fault.
pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::InvalidArgument(_) | Error::Parse { .. } | Error::Unsupported(_) | Error::PreconditionViolation(_) => 2,
        _ => 1,
    }
}

fn parse_group(config: &RunConfig) -> Result<Option<PermGroup>> {
    if config.group.is_empty() {
        return Ok(None);
    }
    let mut gens = Vec::new();
    for text in &config.group {
        gens.extend(parse_generators(config.n, text)?);
    }
    Ok(Some(PermGroup::generate(config.n, &gens)?))
}

fn describe_group(g: &PermGroup) -> String {
    let gens: Vec<String> = g.generators().iter().map(Permutation::to_string).collect();
    format!("<{}>", gens.join(","))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn truncate(h: &HomologyResult, max_dim: Option<usize>) -> Vec<crate::homology::HomologyGroup> {
    h.groups()
        .iter()
        .filter(|g| max_dim.is_none_or(|m| g.dim <= m))
        .cloned()
        .collect()
}

fn homology_text(groups: &[crate::homology::HomologyGroup]) -> String {
    let mut out = String::new();
    for g in groups {
        let mut parts = Vec::new();
        if g.betti > 0 {
            parts.push(if g.betti == 1 { "Z".to_string() } else { format!("Z^{}", g.betti) });
        }
        parts.extend(g.torsion.iter().map(|t| format!("Z/{t}")));
        let body = if parts.is_empty() { "0".to_string() } else { parts.join(" + ") };
        let _ = writeln!(out, "H~{} = {}", g.dim, body);
    }
    out
}

fn homology_csv(groups: &[crate::homology::HomologyGroup]) -> String {
    let mut out = String::from("dim,betti,torsion\n");
    for g in groups {
        let t: Vec<String> = g.torsion.iter().map(u64::to_string).collect();
        let _ = writeln!(out, "{},{},{}", g.dim, g.betti, t.join(";"));
    }
    out
}

/// Runs one command. Errors are configuration problems or failed internal
/// preconditions; failed certificates are reported in [`Outcome::failures`].
pub fn run(config: &RunConfig) -> Result<Outcome> {
    if config.n < 3 {
        return Err(invalid_arg(format!("--n must be at least 3, got {}", config.n)));
    }
    let group = parse_group(config)?;
    let mut outcome = Outcome::default();
    if let Some(g) = &group {
        if !g.fixes_point(1) {
            outcome.warnings.push(format!(
                "group {} does not fix 1; matching-based results are skipped for it",
                describe_group(g)
            ));
        }
    }
    match config.command {
        Command::Complex => complex_cmd(config, group.as_ref(), &mut outcome)?,
        Command::Matching => matching_cmd(config, group.as_ref(), &mut outcome)?,
        Command::Quotient => quotient_cmd(config, group.as_ref(), &mut outcome)?,
        Command::Homology => homology_cmd(config, group.as_ref(), &mut outcome)?,
        Command::Verify => verify_cmd(config, &mut outcome)?,
        Command::Report => report_cmd(config, &mut outcome)?,
    }
    Ok(outcome)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ComplexReport {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    group: Option<String>,
    f_vector: Vec<usize>,
    euler_characteristic: i64,
}

fn complex_cmd(config: &RunConfig, group: Option<&PermGroup>, out: &mut Outcome) -> Result<()> {
    let k = PartitionComplex::partition_nerve(config.n)?;
    let (f, euler) = match group {
        Some(g) => {
            let q = QuotientComplex::new(&k, g)?;
            (q.f_vector(), q.euler_characteristic())
        }
        None => (k.f_vector(), k.euler_characteristic()),
    };
    let f: Vec<usize> = f
        .into_iter()
        .enumerate()
        .filter(|&(d, _)| config.max_dim.is_none_or(|m| d <= m))
        .map(|(_, c)| c)
        .collect();
    let report = ComplexReport {
        n: config.n,
        group: group.map(describe_group),
        f_vector: f,
        euler_characteristic: euler,
    };
    out.report = match config.format {
        Format::Json => to_json(&report),
        Format::Csv => {
            let mut s = String::from("dim,cells\n");
            for (d, c) in report.f_vector.iter().enumerate() {
                let _ = writeln!(s, "{d},{c}");
            }
            s
        }
        Format::Text => format!(
            "f-vector {:?}\nEuler characteristic {}\n",
            report.f_vector, report.euler_characteristic
        ),
    };
    Ok(())
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct MatchingReport {
    n: usize,
    is_matching: bool,
    is_acyclic: bool,
    equivariant_under: Option<String>,
    critical_counts: Vec<usize>,
    critical_set_matches: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_cycle: Option<Vec<String>>,
}

fn matching_cmd(config: &RunConfig, group: Option<&PermGroup>, out: &mut Outcome) -> Result<()> {
    let level = build_main_matching(config.n)?;
    let k = level.complex();
    let m = level.matching();
    let cert = validate_matching(k, m)?;
    let g = match group {
        Some(g) if g.fixes_point(1) => g.clone(),
        _ => level.group(),
    };
    let equivariant = check_equivariance(m, &k.cell_action(&g)?);
    let critical_set_matches = m.critical_cells() == level.sets().expected_critical();
    if let Some(path) = &config.dump_matching {
        std::fs::write(path, dump_matching(k, m))
            .map_err(|e| invalid_arg(format!("cannot write {}: {e}", path.display())))?;
    }
    let report = MatchingReport {
        n: config.n,
        is_matching: cert.is_matching,
        is_acyclic: cert.is_acyclic,
        equivariant_under: equivariant.then(|| describe_group(&g)),
        critical_counts: cert.critical_counts.clone(),
        critical_set_matches,
        witness_cycle: cert
            .witness_cycle
            .as_ref()
            .map(|w| w.iter().map(|&c| k.describe(c)).collect()),
    };
    for (name, ok) in [
        ("isMatching", cert.is_matching),
        ("isAcyclic", cert.is_acyclic),
        ("equivariant", equivariant),
        ("criticalSetMatches", critical_set_matches),
    ] {
        if !ok {
            out.failures.push(name.into());
        }
    }
    out.report = match config.format {
        Format::Json => to_json(&report),
        Format::Csv => {
            let mut s = String::from("dim,critical\n");
            for (d, c) in report.critical_counts.iter().enumerate() {
                let _ = writeln!(s, "{d},{c}");
            }
            s
        }
        Format::Text => format!(
            "matching={} acyclic={} equivariant={} critical set matches={}\ncritical counts {:?}\n",
            report.is_matching, report.is_acyclic, equivariant, critical_set_matches, report.critical_counts
        ),
    };
    Ok(())
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CriticalCell {
    dim: usize,
    cell: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct QuotientReport {
    n: usize,
    group: String,
    group_order: usize,
    f_vector: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    critical_cells: Option<Vec<CriticalCell>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    wedge_count: Option<usize>,
    homology: Vec<crate::homology::HomologyGroup>,
}

fn quotient_cmd(config: &RunConfig, group: Option<&PermGroup>, out: &mut Outcome) -> Result<()> {
    let n = config.n;
    let g = group.cloned().unwrap_or_else(|| PermGroup::point_stabilizer(n));
    let stabilizer = PermGroup::point_stabilizer(n);
    let (f_vector, h, index, critical) = if g.fixes_point(1) {
        let level = build_main_matching(n)?;
        let (q, m) = quotient_main_matching(&level, &g)?;
        let full = g.order() == stabilizer.order();
        let critical: Vec<CriticalCell> = m
            .critical_cells()
            .into_iter()
            .map(|c| CriticalCell {
                dim: q.dim(c),
                cell: q.describe(c),
                label: (full && q.dim(c) == 0).then(|| number_partition_label(&q, c)).transpose().ok().flatten(),
            })
            .collect();
        let h = ChainComplex::of(&q).reduced_homology();
        (q.f_vector(), h, Some(g.index_in(&stabilizer)?), Some(critical))
    } else {
        let k = PartitionComplex::partition_nerve(n)?;
        let q = QuotientComplex::new(&k, &g)?;
        let h = ChainComplex::of(&q).reduced_homology();
        (q.f_vector(), h, None, None)
    };
    let wedge_count = index.filter(|&i| verify_wedge(&h, n - 3, i));
    if index.is_some() && wedge_count.is_none() {
        out.failures.push("wedgeCount".into());
    }
    if let (Some(i), Some(c)) = (index, &critical) {
        if c.len() != i + 1 {
            out.failures.push("criticalCount".into());
        }
    }
    let report = QuotientReport {
        n,
        group: describe_group(&g),
        group_order: g.order(),
        f_vector,
        index,
        critical_cells: critical,
        wedge_count,
        homology: truncate(&h, config.max_dim),
    };
    out.report = match config.format {
        Format::Json => to_json(&report),
        Format::Csv => {
            let mut s = String::from("dim,cell,label\n");
            for c in report.critical_cells.iter().flatten() {
                let _ = writeln!(s, "{},\"{}\",{}", c.dim, c.cell, c.label.as_deref().unwrap_or(""));
            }
            s
        }
        Format::Text => {
            let mut s = format!("orbit complex by {} (order {})\n", report.group, report.group_order);
            for c in report.critical_cells.iter().flatten() {
                let _ = writeln!(s, "critical dim {}: {} {}", c.dim, c.cell, c.label.as_deref().unwrap_or(""));
            }
            s.push_str(&homology_text(&report.homology));
            s
        }
    };
    Ok(())
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct HomologyReport {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    group: Option<String>,
    reduced: bool,
    homology: Vec<crate::homology::HomologyGroup>,
}

fn homology_cmd(config: &RunConfig, group: Option<&PermGroup>, out: &mut Outcome) -> Result<()> {
    let k = PartitionComplex::partition_nerve(config.n)?;
    let h = match group {
        Some(g) => ChainComplex::of(&QuotientComplex::new(&k, g)?).reduced_homology(),
        None => ChainComplex::of(&k).reduced_homology(),
    };
    let groups = truncate(&h, config.max_dim);
    out.report = match config.format {
        Format::Json => to_json(&HomologyReport {
            n: config.n,
            group: group.map(describe_group),
            reduced: true,
            homology: groups,
        }),
        Format::Csv => homology_csv(&groups),
        Format::Text => homology_text(&groups),
    };
    Ok(())
}

#[derive(Serialize)]
struct VerifyReport {
    n: usize,
    passed: bool,
    checks: Vec<Check>,
}

fn verify_cmd(config: &RunConfig, out: &mut Outcome) -> Result<()> {
    let checks = verify(config.n)?;
    out.failures = checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect();
    let report = VerifyReport {
        n: config.n,
        passed: out.failures.is_empty(),
        checks,
    };
    out.report = match config.format {
        Format::Json => to_json(&report),
        Format::Csv => {
            let mut s = String::from("check,passed,detail\n");
            for c in &report.checks {
                let _ = writeln!(s, "{},{},\"{}\"", c.name, c.passed, c.detail);
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for c in &report.checks {
                let _ = writeln!(s, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
            s
        }
    };
    Ok(())
}

fn report_cmd(config: &RunConfig, out: &mut Outcome) -> Result<()> {
    let tower = MatchingTower::build(config.n)?;
    let reports = tower.levels().iter().map(|l| l.report()).collect::<Result<Vec<_>>>()?;
    for r in &reports {
        if !r.certificates.all() {
            out.failures.push(format!("certificates for n={}", r.n));
        }
    }
    out.report = match config.format {
        Format::Json => to_json(&reports),
        Format::Csv => {
            let mut s = String::from(
                "n,critical_counts,cardinality_cn,acyclic,equivariant,critical_set_matches,orbits,stabilizer_order\n",
            );
            for r in &reports {
                let counts: Vec<String> = r.critical_counts.iter().map(usize::to_string).collect();
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{},{}",
                    r.n,
                    counts.join(";"),
                    r.cardinality_cn,
                    r.certificates.acyclic,
                    r.certificates.equivariant,
                    r.certificates.critical_set_matches,
                    r.orbit_data.orbits,
                    r.orbit_data.stabilizer_order
                );
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let _ = writeln!(
                    s,
                    "n={} critical {:?} |C_n|={} certificates {}",
                    r.n,
                    r.critical_counts,
                    r.cardinality_cn,
                    if r.certificates.all() { "ok" } else { "FAILED" }
                );
            }
            s
        }
    };
    Ok(())
}

/// Parses arguments, runs, writes the report and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&config) {
        Ok(outcome) => {
            for w in &outcome.warnings {
                eprintln!("warning: {w}");
            }
            if let Some(path) = &config.out_path {
                if let Err(e) = std::fs::write(path, &outcome.report) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return 2;
                }
            } else {
                print!("{}", outcome.report);
            }
            for f in &outcome.failures {
                eprintln!("failed: {f}");
            }
            outcome.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_flags() {
        let c = RunConfig::parse_from(["partmorse", "quotient", "--n", "5", "--group", "(2 3),(2 3 4 5)", "--format", "text"])
            .unwrap();
        assert_eq!(c.command, Command::Quotient);
        assert_eq!(c.n, 5);
        assert_eq!(c.group, vec!["(2 3),(2 3 4 5)".to_string()]);
        assert_eq!(c.format, Format::Text);
        assert!(RunConfig::parse_from(["partmorse", "bogus"]).is_err());
    }

    #[test]
    fn invalid_config_is_an_error() {
        let mut c = RunConfig::new(Command::Complex, 2);
        assert!(matches!(run(&c), Err(Error::InvalidArgument(_))));
        c.n = 4;
        c.group = vec!["(1 5)".into()];
        assert_eq!(exit_code_for(&run(&c).unwrap_err()), 2);
    }

    #[test]
    fn complex_report() {
        let out = run(&RunConfig::new(Command::Complex, 4)).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.report).unwrap();
        assert_eq!(v["fVector"], serde_json::json!([13, 18]));
        assert_eq!(v["eulerCharacteristic"], -5);
    }

    #[test]
    fn quotient_by_full_stabilizer() {
        let mut c = RunConfig::new(Command::Quotient, 5);
        c.group = vec!["(2 3),(2 3 4 5)".into()];
        let out = run(&c).unwrap();
        assert!(out.failures.is_empty());
        let v: serde_json::Value = serde_json::from_str(&out.report).unwrap();
        assert_eq!(v["criticalCells"].as_array().unwrap().len(), 2);
        assert_eq!(v["wedgeCount"], 1);
        assert_eq!(v["criticalCells"][0]["label"], "1⊕4");
    }

    #[test]
    fn cyclic_torsion_with_warning() {
        let mut c = RunConfig::new(Command::Homology, 5);
        c.group = vec!["(1 2 3 4 5)".into()];
        let out = run(&c).unwrap();
        assert_eq!(out.warnings.len(), 1);
        let v: serde_json::Value = serde_json::from_str(&out.report).unwrap();
        assert_eq!(v["homology"][1]["torsion"], serde_json::json!([5]));
    }
}
