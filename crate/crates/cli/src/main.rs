//! `tropbas` — analyze tropical bases of simple matroids from the command
//! line.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid input (bad file, circuit
//! axiom violation, non-simple matroid, unknown catalog name), 3 resource
//! cap exceeded (see `--force`).

mod explore;
mod report;

use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use tropbas::catalog::{p7_available, p7_search_paths, CatalogEntry};
use tropbas::gf::matroid_from_gf_matrix;
use tropbas::graph::cycle_matroid;
use tropbas::io::{self, ParsedInput};
use tropbas::scan::ScanOpts;
use tropbas::subset::ElementSubset;
use tropbas::tropical::{self, BasisTestMethod};
use tropbas::{Error, Matroid};

#[derive(Parser, Debug)]
#[command(
    name = "tropbas",
    version,
    about = "Tropical bases of simple matroids: test, enumerate, analyze",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct GlobalOpts {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Allow subset scans past the default cap (up to the hard cap)
    #[arg(long, global = true)]
    force: bool,
    /// Worker threads for subset scans
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Seed for randomized exploration
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Include wall-clock timing in JSON output (breaks byte-for-byte
    /// reproducibility; text mode always prints timing to stderr)
    #[arg(long, global = true)]
    timings: bool,
}

impl GlobalOpts {
    fn scan_opts(&self) -> ScanOpts {
        ScanOpts { force: self.force, threads: self.threads }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full analysis: circuits, closed circuits, minimal tropical bases,
    /// uniqueness, sufficiency certificates, swaps, cocircuit recovery
    Analyze {
        /// Catalog name (see `catalog`) or path to an input file
        matroid: String,
        /// Keep at most this many minimal bases in the report
        #[arg(long, default_value_t = 64)]
        max_bases: usize,
    },
    /// Test one circuit subfamily for the tropical basis property
    CheckBasis {
        /// Catalog name or path to an input file
        matroid: String,
        /// Path to a circuit file (same `n <size>` format) listing the
        /// candidate members
        #[arg(long)]
        basis: String,
        /// Which test to run
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// List all minimal tropical bases
    Enumerate {
        /// Catalog name or path to an input file
        matroid: String,
        /// Keep at most this many bases
        #[arg(long, default_value_t = 64)]
        max_bases: usize,
    },
    /// Show the built-in catalog and accepted input formats
    Catalog,
    /// Scan a family of matroids for (non-)unique minimal bases
    Explore {
        /// Candidate family
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Largest ground set to sample
        #[arg(long, default_value_t = 9, value_parser = clap::value_parser!(u32).range(3..=64))]
        n_max: u32,
        /// Number of random candidates (ignored for `catalog`)
        #[arg(long, default_value_t = 50)]
        count: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum MethodArg {
    Definitional,
    Orthogonality,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FamilyArg {
    Gf2,
    Gf3,
    Catalog,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn from_error(err: Error) -> Self {
        let code = match &err {
            Error::ResourceCapExceeded { .. } => 3,
            _ => 2,
        };
        let mut message = err.to_string();
        if let Error::ResourceCapExceeded { force_allows: true, .. } = &err {
            message.push_str(" (pass --force to allow)");
        }
        Self { code, message }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Self::from_error(err)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version are not usage errors.
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    let started = Instant::now();
    match run(&cli) {
        Ok(stdout) => {
            print!("{stdout}");
            if !cli.global.json {
                eprintln!("elapsed: {} ms", started.elapsed().as_millis());
            }
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let opts = cli.global.scan_opts();
    let json = cli.global.json;
    match &cli.command {
        Command::Analyze { matroid, max_bases } => {
            let m = load_matroid(matroid)?;
            let started = Instant::now();
            let mut report = report::analyze(matroid, &m, *max_bases, opts)?;
            if cli.global.timings {
                report.timing_ms = Some(started.elapsed().as_millis());
            }
            if json {
                Ok(to_json(&report))
            } else {
                Ok(report.render_text())
            }
        }
        Command::CheckBasis { matroid, basis, method } => {
            let m = load_matroid(matroid)?;
            let members = load_basis_file(basis, &m)?;
            check_basis(&m, &members, *method, opts, json)
        }
        Command::Enumerate { matroid, max_bases } => {
            let m = load_matroid(matroid)?;
            let result = tropical::enumerate_minimal_tropical_bases(&m, *max_bases, opts)?;
            if json {
                #[derive(serde::Serialize)]
                struct EnumerationReport {
                    input: String,
                    count: usize,
                    truncated: bool,
                    bases: Vec<Vec<Vec<u32>>>,
                }
                Ok(to_json(&EnumerationReport {
                    input: matroid.clone(),
                    count: result.bases.len(),
                    truncated: result.truncated,
                    bases: result.bases.iter().map(|b| report::family(b)).collect(),
                }))
            } else {
                let mut out = format!(
                    "minimal tropical bases: {}{}\n",
                    result.bases.len(),
                    if result.truncated { " (truncated)" } else { "" }
                );
                for (i, basis) in result.bases.iter().enumerate() {
                    let rendered = report::family(basis);
                    out.push_str(&format!("  [{}] {}\n", i + 1, report::render_family(&rendered)));
                }
                Ok(out)
            }
        }
        Command::Catalog => Ok(catalog_text(json)),
        Command::Explore { family, n_max, count } => {
            let family = match family {
                FamilyArg::Gf2 => explore::Family::Gf2,
                FamilyArg::Gf3 => explore::Family::Gf3,
                FamilyArg::Catalog => explore::Family::Catalog,
            };
            let report = explore::explore(family, *n_max, *count, cli.global.seed, opts)?;
            if json {
                Ok(to_json(&report))
            } else {
                Ok(report.render_text())
            }
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report serialization");
    out.push('\n');
    out
}

/// A matroid argument is an existing file path, or else a catalog name.
fn load_matroid(spec: &str) -> Result<Matroid, Failure> {
    if Path::new(spec).exists() {
        let text = std::fs::read_to_string(spec).map_err(|e| Failure {
            code: 2,
            message: format!("could not read `{spec}`: {e}"),
        })?;
        let m = match io::parse_input(&text)? {
            ParsedInput::Circuits(family) => Matroid::new(family),
            ParsedInput::Matrix(matrix) => matroid_from_gf_matrix(&matrix)?,
            ParsedInput::Graph(graph) => cycle_matroid(&graph)?,
        };
        return Ok(m);
    }
    match CatalogEntry::parse(spec) {
        Ok(entry) => Ok(entry.build()?),
        Err(Error::UnknownCatalogName { .. }) => Err(Failure {
            code: 2,
            message: format!("`{spec}` is neither an existing file nor a catalog name (try `tropbas catalog`)"),
        }),
        Err(e) => Err(e.into()),
    }
}

/// The candidate family for `check-basis`: a circuit file over the same
/// ground set.
fn load_basis_file(path: &str, m: &Matroid) -> Result<Vec<ElementSubset>, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("could not read `{path}`: {e}"),
    })?;
    let (n, subsets) = io::parse_subset_list(&text)?;
    if n != m.n() {
        return Err(Failure {
            code: 2,
            message: format!(
                "candidate family is over {n} elements but the matroid has {}",
                m.n()
            ),
        });
    }
    Ok(subsets)
}

fn check_basis(
    m: &Matroid,
    members: &[ElementSubset],
    method: MethodArg,
    opts: ScanOpts,
    json: bool,
) -> Result<String, Failure> {
    let methods: &[(&str, BasisTestMethod)] = match method {
        MethodArg::Definitional => &[("definitional", BasisTestMethod::Definitional)],
        MethodArg::Orthogonality => &[("orthogonality", BasisTestMethod::Orthogonality)],
        MethodArg::Both => &[
            ("definitional", BasisTestMethod::Definitional),
            ("orthogonality", BasisTestMethod::Orthogonality),
        ],
    };
    let mut verdicts = Vec::new();
    for &(name, method) in methods {
        let verdict = tropical::is_tropical_basis(m, members, method, opts)?;
        verdicts.push((name, verdict));
    }
    if verdicts.len() == 2 {
        assert_eq!(verdicts[0].1, verdicts[1].1, "the two basis tests disagree");
    }
    let (_, verdict) = &verdicts[0];
    if json {
        #[derive(serde::Serialize)]
        struct CheckReport<'a> {
            methods: Vec<&'a str>,
            is_basis: bool,
            is_minimal: bool,
            #[serde(skip_serializing_if = "Option::is_none")]
            failure_witness: Option<Vec<u32>>,
            #[serde(skip_serializing_if = "Option::is_none")]
            redundant_member: Option<Vec<u32>>,
        }
        Ok(to_json(&CheckReport {
            methods: verdicts.iter().map(|&(n, _)| n).collect(),
            is_basis: verdict.is_basis,
            is_minimal: verdict.is_minimal,
            failure_witness: verdict.failure_witness.map(report::elems),
            redundant_member: verdict.redundant_member.map(report::elems),
        }))
    } else {
        let mut out = String::new();
        let names: Vec<&str> = verdicts.iter().map(|&(n, _)| n).collect();
        out.push_str(&format!("method: {}\n", names.join(" + ")));
        out.push_str(&format!("tropical basis: {}\n", report::yes_no(verdict.is_basis)));
        if let Some(w) = verdict.failure_witness {
            out.push_str(&format!("  uncertified non-closed set: {w}\n"));
        }
        out.push_str(&format!("minimal: {}\n", report::yes_no(verdict.is_minimal)));
        if let Some(r) = verdict.redundant_member {
            out.push_str(&format!("  redundant member: {r}\n"));
        }
        Ok(out)
    }
}

fn catalog_text(json: bool) -> String {
    let p7_status = match p7_available() {
        Some(path) => format!("available at {}", path.display()),
        None => {
            let searched: Vec<String> =
                p7_search_paths().iter().map(|p| p.display().to_string()).collect();
            format!("data file not found (searched: {})", searched.join(", "))
        }
    };
    if json {
        #[derive(serde::Serialize)]
        struct CatalogReport {
            entries: Vec<CatalogEntryReport>,
            formats: Vec<&'static str>,
        }
        #[derive(serde::Serialize)]
        struct CatalogEntryReport {
            name: &'static str,
            syntax: &'static str,
            description: &'static str,
            #[serde(skip_serializing_if = "Option::is_none")]
            status: Option<String>,
        }
        let entries = vec![
            CatalogEntryReport {
                name: "uniform",
                syntax: "uniform:R,N",
                description: "every (R+1)-subset of {1..N} is a circuit",
                status: None,
            },
            CatalogEntryReport {
                name: "fano",
                syntax: "fano",
                description: "columns of the 3x7 matrix of nonzero GF(2) vectors",
                status: None,
            },
            CatalogEntryReport {
                name: "nonfano",
                syntax: "nonfano",
                description: "the same seven columns over GF(3)",
                status: None,
            },
            CatalogEntryReport {
                name: "doubled_line_dual",
                syntax: "doubled_line_dual:K",
                description: "2K elements; circuits are the K pair complements (K >= 3)",
                status: None,
            },
            CatalogEntryReport {
                name: "graphic",
                syntax: "graphic:1-2,2-3,3-1",
                description: "cycle matroid of the listed edges (1-based vertices)",
                status: None,
            },
            CatalogEntryReport {
                name: "p7",
                syntax: "p7",
                description: "rank-3 matroid on 7 elements, loaded from a circuit data file",
                status: Some(p7_status),
            },
        ];
        let formats = vec![
            "circuit list: `n <size>` then one circuit per line (1-based elements)",
            "matrix: `gfmatrix <modulus> <rows> <cols>` then the rows",
            "graph: `graph <vertices> <edges>` then `u v` per edge",
        ];
        to_json(&CatalogReport { entries, formats })
    } else {
        let mut out = String::new();
        out.push_str("catalog entries:\n");
        out.push_str("  uniform:R,N          every (R+1)-subset of {1..N} is a circuit\n");
        out.push_str("  fano                 columns of the 3x7 matrix of nonzero GF(2) vectors\n");
        out.push_str("  nonfano              the same seven columns over GF(3)\n");
        out.push_str("  doubled_line_dual:K  2K elements; circuits are the K pair complements (K >= 3)\n");
        out.push_str("  graphic:1-2,2-3,3-1  cycle matroid of the listed edges (1-based vertices)\n");
        out.push_str(&format!("  p7                   rank-3 matroid on 7 elements; {p7_status}\n"));
        out.push_str("input file formats (first significant line picks the format):\n");
        out.push_str("  circuit list: `n <size>` then one circuit per line (1-based elements)\n");
        out.push_str("  matrix:       `gfmatrix <modulus> <rows> <cols>` then the rows\n");
        out.push_str("  graph:        `graph <vertices> <edges>` then `u v` per edge\n");
        out
    }
}
