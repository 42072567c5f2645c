//! The `dicrit` command line: analyze, generate, count and verify.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use dicrit_core::oracle::{scenarios::CellStatus, ScanConfig, VerificationReport};
use dicrit_core::{
    bound_closed_form, build_family, center_path_bound, condensation, count_closed_form, is_critical,
    metric_profile, recognize_hertz_family, run_scenario, scenario_names, structure_flags, BoundFormula,
    CountFormula, Digraph, FamilySpec, HertzClass, Invariant,
};

pub mod dot;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "dicrit", version, about = "Metric criticality of digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report invariants, bicomponents, criticality and Hertz family of a digraph file.
    Analyze {
        /// JSON document `{"n": .., "arcs": [[u, v], ..]}` or a DOT digraph.
        path: PathBuf,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Build a member of a named family.
    Generate {
        #[command(subcommand)]
        family: FamilyCmd,
        /// Emit DOT instead of JSON.
        #[arg(long, global = true)]
        dot: bool,
    },
    /// Tabulate a closed-form count or bound.
    Count(CountArgs),
    /// Run verification scenarios against the exhaustive oracle.
    Verify {
        /// Scenario names, or `all`.
        #[arg(required = true, value_delimiter = ',')]
        scenarios: Vec<String>,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        workers: Option<usize>,
        /// Write the JSON reports here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum FamilyCmd {
    /// Transitive tournament on k vertices.
    GammaK {
        #[arg(long)]
        k: usize,
    },
    /// Transitive tournament without the arc (i, i+1).
    GammaKi {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        i: usize,
    },
    /// Transitive tournament with vertex 1 cut off from the rest.
    GammaK0 {
        #[arg(long)]
        k: usize,
    },
    /// Chain of two two-vertex blocks.
    D4,
    /// Block chain with the given block sizes.
    Partition {
        #[arg(long, value_delimiter = ',', required = true)]
        blocks: Vec<usize>,
    },
    /// Blow up an acyclic digraph read from a file.
    BlowUp {
        #[arg(long)]
        hertz: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
    },
    /// Maximal digraph of radius k.
    MaxRadius {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        pos: usize,
        /// Sizes `a,b` of blocks `pos` and `pos + 1`; `b = 0` enlarges one block.
        #[arg(long)]
        split: String,
        #[arg(long)]
        reverse: bool,
    },
    /// Biconnected maximal digraph of quasi-diameter 3.
    Qd3 {
        #[arg(long)]
        sizes: String,
    },
}

#[derive(Args, Debug)]
struct CountArgs {
    /// A count (beta, q, chi, ..), a bound (g, f, lambda, ..) or center_path_bound.
    formula: String,
    /// Single value or inclusive range `a..b`.
    #[arg(long)]
    n: String,
    #[arg(long)]
    k: String,
    #[arg(long)]
    s: Option<String>,
    #[arg(long)]
    t: Option<String>,
}

/// The JSON interchange format: 1-based arcs, sorted on output.
#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct DigraphDocument {
    pub n: usize,
    pub arcs: Vec<[usize; 2]>,
}

impl DigraphDocument {
    pub fn from_digraph(g: &Digraph) -> Self {
        DigraphDocument {
            n: g.n(),
            arcs: g.arcs().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_digraph(&self) -> Result<Digraph> {
        let arcs: Vec<_> = self.arcs.iter().map(|&[u, v]| (u, v)).collect();
        Ok(Digraph::from_arc_list(self.n, &arcs)?)
    }
}

pub fn to_json(g: &Digraph) -> String {
    serde_json::to_string(&DigraphDocument::from_digraph(g)).expect("documents serialize")
}

/// Parses either format, picking JSON when the text starts with `{`.
pub fn parse_digraph(text: &str) -> Result<Digraph> {
    if text.trim_start().starts_with('{') {
        let doc: DigraphDocument = serde_json::from_str(text)
            .map_err(|e| anyhow!("parse error at line {}, column {}: {e}", e.line(), e.column()))?;
        doc.to_digraph()
    } else {
        dot::parse(text)
    }
}

fn read_digraph(path: &Path) -> Result<Digraph> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_digraph(&text)
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Analyze { path, json } => analyze(&path, json, out),
        Command::Generate { family, dot } => generate(family, dot, out),
        Command::Count(args) => count(&args, out),
        Command::Verify {
            scenarios,
            max_n,
            workers,
            out: path,
        } => verify(&scenarios, max_n, workers, path.as_deref(), out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}

// ---- analyze ----

#[derive(Serialize)]
struct CriticalityLine {
    invariant: Invariant,
    critical: bool,
    /// First missing arc that neither merges bicomponents nor lowers the invariant.
    failing_arc: Option<(usize, usize)>,
}

#[derive(Serialize)]
struct AnalyzeReport {
    n: usize,
    arcs: usize,
    profile: dicrit_core::MetricProfile,
    bicomponents: Vec<Vec<usize>>,
    hertz: DigraphDocument,
    flags: dicrit_core::StructureFlags,
    criticality: Vec<CriticalityLine>,
    hertz_family: HertzClass,
}

fn family_names(c: &HertzClass) -> Vec<String> {
    let mut names = Vec::new();
    if let Some(k) = c.transitive_tournament {
        names.push(format!("Γ_{k} (transitive tournament)"));
    }
    if let Some((k, i)) = c.gamma_ki {
        names.push(format!("Γ_{{{k},{i}}}"));
    }
    if let Some(k) = c.gamma_k0 {
        names.push(format!("Γ_{{{k},0}}"));
    }
    if let Some(b) = &c.partition {
        let sizes: Vec<_> = b.iter().map(usize::to_string).collect();
        names.push(format!("block chain ({})", sizes.join(",")));
    }
    if c.d4 {
        names.push("D4".into());
    }
    names
}

fn analyze(path: &Path, json: bool, out: &mut dyn Write) -> Result<i32> {
    let g = read_digraph(path)?;
    let c = condensation(&g);
    let criticality: Vec<_> = Invariant::ALL
        .into_iter()
        .map(|inv| {
            let v = is_critical(&g, inv);
            CriticalityLine {
                invariant: inv,
                critical: v.critical,
                failing_arc: v.first_failure().map(|e| e.arc),
            }
        })
        .collect();
    let report = AnalyzeReport {
        n: g.n(),
        arcs: g.arc_count(),
        profile: metric_profile(&g),
        bicomponents: c.components.clone(),
        hertz: DigraphDocument::from_digraph(&c.hertz),
        flags: structure_flags(&g),
        criticality,
        hertz_family: recognize_hertz_family(&c.hertz),
    };
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
        return Ok(EXIT_OK);
    }
    let p = &report.profile;
    let mut s = String::new();
    writeln!(s, "n = {}, arcs = {}", report.n, report.arcs)?;
    writeln!(s, "d = {}, d_m = {}, r = {}, r_m = {}", p.d, p.d_m, p.r, p.r_m)?;
    let comps: Vec<String> = report
        .bicomponents
        .iter()
        .map(|b| format!("{{{}}}", b.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
        .collect();
    writeln!(s, "bicomponents = {}", comps.join(" "))?;
    let harcs: Vec<String> = report.hertz.arcs.iter().map(|[u, v]| format!("{u}->{v}")).collect();
    writeln!(s, "hertz graph = {} vertices [{}]", report.hertz.n, harcs.join(" "))?;
    let f = &report.flags;
    writeln!(
        s,
        "acyclic = {}, transitive = {}, complete = {}, transitive tournament = {}, biconnected = {}",
        f.is_acyclic, f.is_transitive, f.is_complete_symmetric, f.is_transitive_tournament, f.is_biconnected
    )?;
    for line in &report.criticality {
        match line.failing_arc {
            Some((u, v)) => writeln!(s, "{}-critical = false (arc ({u},{v}) does not qualify)", line.invariant)?,
            None => writeln!(s, "{}-critical = true", line.invariant)?,
        }
    }
    let names = family_names(&report.hertz_family);
    if names.is_empty() {
        writeln!(s, "hertz family = none")?;
    }
    for name in names {
        writeln!(s, "hertz family = {name}")?;
    }
    out.write_all(s.as_bytes())?;
    Ok(EXIT_OK)
}

// ---- generate ----

fn parse_list(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|p| p.trim().parse::<usize>().with_context(|| format!("bad number {p:?} in {text:?}")))
        .collect()
}

fn generate(family: FamilyCmd, dot_out: bool, out: &mut dyn Write) -> Result<i32> {
    let spec = match family {
        FamilyCmd::GammaK { k } => FamilySpec::GammaK { k },
        FamilyCmd::GammaKi { k, i } => FamilySpec::GammaKI { k, i },
        FamilyCmd::GammaK0 { k } => FamilySpec::GammaK0 { k },
        FamilyCmd::D4 => FamilySpec::D4,
        FamilyCmd::Partition { blocks } => FamilySpec::GammaPartition {
            k: blocks.iter().sum(),
            blocks,
        },
        FamilyCmd::BlowUp { hertz, sizes } => FamilySpec::BlowUp {
            hertz: read_digraph(&hertz)?,
            sizes,
        },
        FamilyCmd::MaxRadius {
            n,
            k,
            pos,
            split,
            reverse,
        } => {
            let parts = parse_list(&split)?;
            let [a, b] = parts[..] else {
                bail!("--split takes two numbers a,b, got {split:?}");
            };
            if reverse {
                FamilySpec::ReversedMaximalRadius { n, k, p: pos, split: (a, b) }
            } else {
                FamilySpec::MaximalRadius { n, k, p: pos, split: (a, b) }
            }
        }
        FamilyCmd::Qd3 { sizes } => {
            let parts = parse_list(&sizes)?;
            let sizes: [usize; 4] = parts
                .try_into()
                .map_err(|_| anyhow!("--sizes takes four numbers, got {sizes:?}"))?;
            FamilySpec::MaximalQD3 { sizes }
        }
    };
    let g = build_family(&spec)?;
    if dot_out {
        write!(out, "{}", dot::emit(&g))?;
    } else {
        writeln!(out, "{}", to_json(&g))?;
    }
    Ok(EXIT_OK)
}

// ---- count ----

fn parse_range(text: &str) -> Result<RangeInclusive<u64>> {
    let bad = || format!("expected a number or a range a..b, got {text:?}");
    let range = match text.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            a.trim().parse().with_context(bad)?..=b.trim().parse().with_context(bad)?
        }
        None => {
            let v: u64 = text.trim().parse().with_context(bad)?;
            v..=v
        }
    };
    if range.is_empty() {
        bail!("empty range {text:?}");
    }
    Ok(range)
}

enum Formula {
    Count(CountFormula),
    Bound(BoundFormula),
    CenterPath,
}

/// Placeholder printed for parameters outside a formula's domain.
pub const OUT_OF_DOMAIN: &str = "—";

fn count(args: &CountArgs, out: &mut dyn Write) -> Result<i32> {
    let key = args.formula.replace('-', "_").to_ascii_lowercase();
    let formula = if key == "center_path_bound" {
        Formula::CenterPath
    } else if let Ok(c) = key.parse::<CountFormula>() {
        Formula::Count(c)
    } else if let Ok(b) = key.parse::<BoundFormula>() {
        Formula::Bound(b)
    } else {
        bail!("unknown formula {:?}", args.formula);
    };
    let ns = parse_range(&args.n)?;
    let ks = parse_range(&args.k)?;
    let mut s = String::new();
    match formula {
        Formula::CenterPath => {
            let (Some(ss), Some(ts)) = (&args.s, &args.t) else {
                bail!("center_path_bound needs --s and --t");
            };
            let (ss, ts) = (parse_range(ss)?, parse_range(ts)?);
            writeln!(s, "n\tk\ts\tt\tvalue")?;
            for n in ns {
                for k in ks.clone() {
                    for sv in ss.clone() {
                        for t in ts.clone() {
                            let v = center_path_bound(n, k, sv, t)
                                .map_or(OUT_OF_DOMAIN.to_string(), |v| v.to_string());
                            writeln!(s, "{n}\t{k}\t{sv}\t{t}\t{v}")?;
                        }
                    }
                }
            }
        }
        Formula::Count(_) | Formula::Bound(_) => {
            writeln!(s, "n\tk\tvalue")?;
            for n in ns {
                for k in ks.clone() {
                    let v = match formula {
                        Formula::Count(c) => count_closed_form(c, n, k).map(|v| v.to_string()),
                        Formula::Bound(b) => bound_closed_form(b, n, k).map(|v| v.to_string()),
                        Formula::CenterPath => unreachable!(),
                    };
                    writeln!(s, "{n}\t{k}\t{}", v.unwrap_or_else(|_| OUT_OF_DOMAIN.to_string()))?;
                }
            }
        }
    }
    out.write_all(s.as_bytes())?;
    Ok(EXIT_OK)
}

// ---- verify ----

fn verify(
    names: &[String],
    max_n: usize,
    workers: Option<usize>,
    path: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let known = scenario_names();
    let selected: Vec<&str> = if names.iter().any(|n| n == "all") {
        known.clone()
    } else {
        let mut v = Vec::new();
        for n in names {
            let Some(&name) = known.iter().find(|k| **k == n.as_str()) else {
                bail!("unknown scenario {n:?}; known: {}", known.join(", "));
            };
            v.push(name);
        }
        v
    };
    let cfg = workers.map_or_else(ScanConfig::default, ScanConfig::with_workers);
    let mut reports: Vec<VerificationReport> = Vec::new();
    for name in selected {
        let r = run_scenario(name, max_n, cfg)?;
        writeln!(
            err,
            "{:<28} cells {:>4}  match {:>4}  mismatch {:>3}  errata-suspected {:>3}  {} ms",
            r.scenario,
            r.cells.len(),
            r.count(CellStatus::Match),
            r.count(CellStatus::Mismatch),
            r.count(CellStatus::FormulaErrataSuspected),
            r.wall_time_ms
        )?;
        for c in r.cells.iter().filter(|c| c.status != CellStatus::Match) {
            let k = c.k.map_or(String::new(), |k| format!(", k = {k}"));
            writeln!(
                err,
                "    {:?}: {} (n = {}{k}): {}: oracle {} vs formula {}",
                c.status, c.label, c.n, c.quantity, c.oracle, c.formula
            )?;
        }
        reports.push(r);
    }
    let json = serde_json::to_string_pretty(&reports)?;
    match path {
        Some(p) => fs::write(p, json + "\n").with_context(|| format!("cannot write {}", p.display()))?,
        None => writeln!(out, "{json}")?,
    }
    Ok(if reports.iter().all(VerificationReport::passed) {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}
