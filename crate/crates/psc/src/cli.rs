//! Argument parsing and subcommand dispatch.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use psc_core::poset::{build_poset, i_reduction, p_rank};
use psc_core::topology::{poset_complex, reduced_homology};
use psc_core::verify::{lemmaprank_normal_check, retract_check, Analysis, Claim, GroupAnalysis, Verdict};
use psc_core::{arith, Group, Limits, PosetKind, Subgroup, SubgroupPoset};

use crate::corpus::{limits_config, run_corpus, yes_no, CorpusOptions, DEFAULT_CORPUS};
use crate::format::{self, GroupEntry, GroupFile, HomologyInput, Tag};
use crate::report::{Report, EXIT_ERROR, EXIT_OK};
use crate::CliError;

#[derive(Parser, Debug)]
#[command(name = "psc", version, about = "p-subgroup posets, their order complexes and claim checks")]
pub struct Cli {
    #[command(flatten)]
    pub limits: LimitArgs,
    #[command(subcommand)]
    pub command: Command,
}

/// Capacity overrides; defaults come from [`Limits::default`].
#[derive(Args, Debug, Clone)]
pub struct LimitArgs {
    /// Largest group order given a materialized element table.
    #[arg(long, global = true, value_name = "N")]
    pub max_order: Option<usize>,
    /// Largest order times degree for materialization.
    #[arg(long, global = true, value_name = "N")]
    pub max_cells: Option<usize>,
    /// Largest Sylow order for p-subgroup enumeration.
    #[arg(long, global = true, value_name = "N")]
    pub max_sylow: Option<usize>,
    /// Largest group order for full subgroup-lattice enumeration.
    #[arg(long, global = true, value_name = "N")]
    pub max_lattice: Option<usize>,
}

impl LimitArgs {
    pub fn resolve(&self) -> Limits {
        let d = Limits::default();
        Limits {
            materialize: self.max_order.unwrap_or(d.materialize),
            materialize_cells: self.max_cells.unwrap_or(d.materialize_cells),
            sylow_enumeration: self.max_sylow.unwrap_or(d.sylow_enumeration),
            subgroup_lattice: self.max_lattice.unwrap_or(d.subgroup_lattice),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Order, solvability, p-core, Sylow order and p-rank of a group.
    GroupInfo {
        file: PathBuf,
        #[arg(long)]
        group: Option<String>,
        #[arg(long, value_parser = parse_prime)]
        prime: Option<u64>,
    },
    /// Build a poset and export it.
    Poset {
        file: PathBuf,
        #[arg(long)]
        group: Option<String>,
        #[arg(long, value_parser = parse_prime)]
        prime: u64,
        #[arg(long, value_parser = parse_kind)]
        kind: PosetKind,
        /// Write the poset export here instead of standard output.
        #[arg(long, value_name = "PATH")]
        export: Option<PathBuf>,
        /// Also write the order complex in complex format.
        #[arg(long, value_name = "PATH")]
        complex: Option<PathBuf>,
    },
    /// Reduced integral homology of a complex or poset export.
    Homology { file: PathBuf },
    /// Run one claim on one group.
    Verify {
        file: PathBuf,
        #[arg(long)]
        group: Option<String>,
        #[arg(long, value_parser = parse_prime)]
        prime: Option<u64>,
        /// A claim name, `retract:<H>` or `lemmaprank:<N>` with H, N groups of the file.
        #[arg(long)]
        claim: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run claims over a corpus file (the built-in corpus by default).
    Corpus {
        file: Option<PathBuf>,
        /// `all` or a comma-separated list of claim names.
        #[arg(long, default_value = "all")]
        claims: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Include entries tagged `stretch`.
        #[arg(long)]
        stretch: bool,
        /// Exit with code 3 when any verdict was skipped for capacity.
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Write the text report here instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
    /// Also write the report as JSON.
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Print `-` for timing fields so reports are byte-identical across runs.
    #[arg(long)]
    pub no_timing: bool,
}

fn parse_prime(s: &str) -> Result<u64, String> {
    let p: u64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if arith::is_prime(p) {
        Ok(p)
    } else {
        Err(format!("{p} is not prime"))
    }
}

fn parse_kind(s: &str) -> Result<PosetKind, String> {
    let kind: PosetKind = s.parse().map_err(|e: psc_core::Error| e.to_string())?;
    if psc_core::verify::MODELS.contains(&kind) {
        Ok(kind)
    } else {
        Err(format!("`{s}` is not one of Sp, Ap, Bp, iSp, iAp"))
    }
}

/// Parses `args` (program name first) and runs the command, writing normal
/// output to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    let limits = cli.limits.resolve();
    match cli.command {
        Command::GroupInfo { file, group, prime } => {
            let gf = GroupFile::read(&file)?;
            let entry = pick(&gf, group.as_deref())?;
            let g = gf.build(&entry.spec.name, limits)?;
            emit(out, &group_info(&entry.spec.name, &g, prime)?)?;
            Ok(EXIT_OK)
        }
        Command::Poset { file, group, prime, kind, export, complex } => {
            let gf = GroupFile::read(&file)?;
            let entry = pick(&gf, group.as_deref())?;
            let g = gf.build(&entry.spec.name, limits)?;
            let poset = build_model(&g, prime, kind)?;
            let text = format::write_poset(&g, &entry.spec.name, &poset);
            match &export {
                Some(path) => {
                    write_file(path, &text)?;
                    emit(out, &format!("{}\n", poset.summary()))?;
                }
                None => emit(out, &text)?,
            }
            if let Some(path) = &complex {
                write_file(path, &format::write_complex(&poset_complex(&poset)))?;
            }
            Ok(EXIT_OK)
        }
        Command::Homology { file } => {
            let text = std::fs::read_to_string(&file).map_err(|e| CliError::io(&file, e))?;
            let input = HomologyInput::parse(&file, &text)?;
            emit(out, &homology_text(&input))?;
            Ok(EXIT_OK)
        }
        Command::Verify { file, group, prime, claim, out: o } => {
            let gf = GroupFile::read(&file)?;
            let entry = pick(&gf, group.as_deref())?;
            let g = gf.build(&entry.spec.name, limits)?;
            let start = Instant::now();
            let mut verdict = verify_one(&gf, entry, &g, prime, &claim, limits)?;
            verdict.wall_time = Some(start.elapsed());
            let mut config = vec![
                ("file".into(), file.display().to_string()),
                ("group".into(), entry.spec.name.clone()),
                ("prime".into(), prime.map_or_else(|| "-".into(), |p| p.to_string())),
                ("claim".into(), claim.clone()),
                ("timing".into(), yes_no(!o.no_timing).into()),
            ];
            config.extend(limits_config(&limits));
            let report = Report { config, verdicts: vec![verdict], errors: vec![], total: Some(start.elapsed()) };
            write_report(out, &report, &o)?;
            Ok(report.exit_code(false))
        }
        Command::Corpus { file, claims, jobs, stretch, strict, out: o } => {
            let (gf, source) = match &file {
                Some(path) => (GroupFile::read(path)?, path.display().to_string()),
                None => (GroupFile::parse(Path::new("<default corpus>"), DEFAULT_CORPUS)?, "default".into()),
            };
            let claims = parse_claims(&claims)?;
            if jobs == 0 {
                return Err(CliError::Usage("--jobs must be at least 1".into()));
            }
            let opts = CorpusOptions { claims, jobs, stretch, limits, timing: !o.no_timing };
            let mut report = run_corpus(&gf, &opts);
            report.config.insert(0, ("corpus".into(), source));
            report.config.push(("strict".into(), yes_no(strict).into()));
            write_report(out, &report, &o)?;
            Ok(report.exit_code(strict))
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(|e| CliError::io(Path::new("<stdout>"), e))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::io(path, e))
}

fn write_report(out: &mut dyn Write, report: &Report, o: &OutputArgs) -> Result<(), CliError> {
    let timing = !o.no_timing;
    let text = report.to_text(timing);
    match &o.output {
        Some(path) => write_file(path, &text)?,
        None => emit(out, &text)?,
    }
    if let Some(path) = &o.json {
        write_file(path, &report.to_json(timing))?;
    }
    Ok(())
}

/// The named entry, or the only analysable one when no name is given.
fn pick<'a>(gf: &'a GroupFile, name: Option<&str>) -> Result<&'a GroupEntry, CliError> {
    match name {
        Some(n) => gf.entry(n).ok_or_else(|| CliError::Usage(format!("no group named `{n}` in the file"))),
        None => {
            let candidates: Vec<&GroupEntry> = gf.entries.iter().filter(|e| !e.has(Tag::Helper)).collect();
            match candidates.as_slice() {
                [one] => Ok(one),
                [] => Err(CliError::Usage("the file defines no group".into())),
                _ => Err(CliError::Usage("the file defines several groups; choose one with --group".into())),
            }
        }
    }
}

fn build_model(g: &Group, p: u64, kind: PosetKind) -> Result<SubgroupPoset, CliError> {
    Ok(match kind {
        PosetKind::ISp => i_reduction(g, &build_poset(g, p, PosetKind::Sp)?)?,
        PosetKind::IAp => i_reduction(g, &build_poset(g, p, PosetKind::Ap)?)?,
        k => build_poset(g, p, k)?,
    })
}

fn group_info(name: &str, g: &Group, prime: Option<u64>) -> Result<String, CliError> {
    let mut s = String::new();
    let primes = g.prime_divisors();
    let _ = writeln!(s, "group {name}");
    let _ = writeln!(s, "degree {}", g.degree());
    let _ = writeln!(s, "order {}", g.order());
    let _ = writeln!(s, "solvable {}", yes_no(g.is_solvable()));
    let _ = writeln!(s, "materialized {}", yes_no(g.is_materialized()));
    let _ = writeln!(s, "primes {}", primes.iter().map(u64::to_string).collect::<Vec<_>>().join(","));
    let selected = match prime {
        Some(p) => vec![p],
        None => primes,
    };
    for p in selected {
        let (part, _) = arith::p_part(g.order(), p);
        let _ = writeln!(s, "prime {p}");
        let _ = writeln!(s, "  sylow_order {part}");
        let capacity = |e: psc_core::Error| if e.is_capacity() { Ok(format!("skipped ({e})")) } else { Err(e) };
        let core = g.p_core(p).map(|c| c.order().to_string()).or_else(capacity)?;
        let _ = writeln!(s, "  op_order {core}");
        let rank = p_rank(g, p).map(|w| w.rank.to_string()).or_else(capacity)?;
        let _ = writeln!(s, "  p_rank {rank}");
    }
    Ok(s)
}

/// `format homology v1`, a line describing the complex, then one line per degree.
pub fn homology_text(input: &HomologyInput) -> String {
    let c = input.complex();
    let h = reduced_homology(&c);
    let f: Vec<String> = c.f_vector().iter().map(usize::to_string).collect();
    let mut s = String::from("format homology v1\n");
    let _ = writeln!(
        s,
        "complex vertices {} dimension {} f {}",
        c.vertex_count(),
        c.dimension(),
        if f.is_empty() { "-".into() } else { f.join(":") }
    );
    if h.empty_complex {
        s.push_str("empty-complex\n");
    }
    let _ = write!(s, "{h}");
    s
}

fn parse_claims(text: &str) -> Result<Vec<Claim>, CliError> {
    if text == "all" {
        return Ok(Claim::ALL.to_vec());
    }
    let mut claims = Vec::new();
    for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let c: Claim = part.parse().map_err(|e: psc_core::Error| CliError::Usage(e.to_string()))?;
        if !claims.contains(&c) {
            claims.push(c);
        }
    }
    if claims.is_empty() {
        return Err(CliError::Usage("no claims selected".into()));
    }
    claims.sort();
    Ok(claims)
}

/// A subgroup of `g` given by another group of the file on the same points.
fn named_subgroup(gf: &GroupFile, g: &Group, name: &str, limits: Limits) -> Result<Subgroup, CliError> {
    if name == "1" {
        return Ok(Subgroup::trivial());
    }
    gf.entry(name).ok_or_else(|| CliError::Usage(format!("no group named `{name}` in the file")))?;
    let h = gf.build(name, limits)?;
    if h.degree() != g.degree() {
        return Err(CliError::Usage(format!("`{name}` has degree {}, expected {}", h.degree(), g.degree())));
    }
    Ok(g.subgroup(h.generators())?)
}

fn verify_one(
    gf: &GroupFile,
    entry: &GroupEntry,
    g: &Group,
    prime: Option<u64>,
    claim: &str,
    limits: Limits,
) -> Result<Verdict, CliError> {
    let name = &entry.spec.name;
    let need_prime = || prime.ok_or_else(|| CliError::Usage(format!("claim `{claim}` needs --prime")));
    if let Some((kind, sub)) = claim.split_once(':') {
        let p = need_prime()?;
        let a = Analysis::new(g, name, p)?;
        let h = named_subgroup(gf, g, sub, limits);
        return match kind {
            "retract" => Ok(retract_check(&a, sub, &h?)?),
            "lemmaprank" => Ok(lemmaprank_normal_check(&a, sub, &h?)?),
            _ => Err(CliError::Usage(format!("unknown claim `{claim}`"))),
        };
    }
    let c: Claim = claim.parse().map_err(|e: psc_core::Error| CliError::Usage(e.to_string()))?;
    if c.is_group_level() {
        Ok(GroupAnalysis::new(g, name).run(c, entry.has(Tag::OsIndexOne))?)
    } else {
        Ok(Analysis::new(g, name, need_prime()?)?.run(c)?)
    }
}
