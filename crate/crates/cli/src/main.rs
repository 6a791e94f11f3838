//! Command-line driver: build, label, relate, verify, count, reduce, export.

use clap::{Args, Parser, Subcommand};
use nilcomplex_core::census::{census, compare_tables, RowStatus, Scope};
use nilcomplex_core::codec::{parse_word, Letter, Word};
use nilcomplex_core::complex::{BuildConfig, Complex, PastingMode, DEFAULT_FACE_CAP, DEFAULT_LEVEL_CAP, PASTING_RULE};
use nilcomplex_core::export::{complex_dump, label_dump, plane_dot, read_relation_lines, write_relations};
use nilcomplex_core::pipeline::Family;
use nilcomplex_core::relations::{check_determinism, RelationSet};
use nilcomplex_core::rewrite::{nil_check, reduce, RewriteOutcome, DEFAULT_BUDGET};
use nilcomplex_core::{Alphabet, Labeling};
use serde::Serialize;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const CACHE_VAR: &str = "NILCOMPLEX_CACHE";

#[derive(Parser, Debug)]
#[command(name = "nilcomplex", version, about = "Pasting complexes and their square relations")]
struct Cli {
    #[command(flatten)]
    run: RunConfig,
    #[command(subcommand)]
    command: Command,
}

/// Options shared by every subcommand.
#[derive(Args, Debug, Clone)]
struct RunConfig {
    /// Complex level.
    #[arg(long, global = true, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    level: u32,
    /// Largest level a build may reach.
    #[arg(long, global = true, default_value_t = DEFAULT_LEVEL_CAP, value_parser = clap::value_parser!(u32).range(1..))]
    level_cap: u32,
    /// Largest number of faces a build may create.
    #[arg(long, global = true, default_value_t = DEFAULT_FACE_CAP)]
    face_cap: usize,
    /// Distinct words a rewrite search may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Output file or directory; stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, default_value = "recursive", value_parser = parse_mode)]
    pasting_mode: PastingMode,
}

fn parse_mode(s: &str) -> Result<PastingMode, String> {
    s.parse().map_err(|e: nilcomplex_core::Error| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build one complex and write its structure.
    Build,
    /// Label one complex and write the vertex letters.
    Label,
    /// Generate the relations of levels 2..=level as JSON lines.
    Relations,
    /// Check that the relations of levels 2..=level form a function.
    VerifyDeterminism,
    /// Count environments and compare with the reference tables.
    Census {
        /// Count every role, including the base plane's boundary.
        #[arg(long)]
        with_boundary: bool,
    },
    /// Reduce a word read from a file.
    Reduce {
        #[arg(long)]
        word: PathBuf,
        /// Relation dump to use instead of regenerating relations.
        #[arg(long)]
        relations: Option<PathBuf>,
    },
    /// Reduce the k-th power of a word read from a file.
    NilCheck {
        #[arg(long)]
        word: PathBuf,
        #[arg(long, default_value_t = 9)]
        k: usize,
        #[arg(long)]
        relations: Option<PathBuf>,
    },
    /// Write one plane as Graphviz.
    ExportDot {
        #[arg(long, default_value_t = 0)]
        plane: u32,
    },
}

/// Failure kinds mapped to exit codes.
enum Failure {
    Verification(String),
    Usage(String),
}

impl From<nilcomplex_core::Error> for Failure {
    fn from(e: nilcomplex_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

impl RunConfig {
    fn build_config(&self) -> BuildConfig {
        BuildConfig { pasting_mode: self.pasting_mode, level_cap: self.level_cap, face_cap: self.face_cap }
    }

    fn cache_path(&self, level: u32) -> Option<PathBuf> {
        let dir = std::env::var_os(CACHE_VAR)?;
        let mode = match self.pasting_mode {
            PastingMode::BaseOnly => "base-only",
            PastingMode::Recursive => "recursive",
        };
        Some(Path::new(&dir).join(format!("complex-{level}-{mode}-{}.json", self.face_cap)))
    }

    /// Build a complex, reusing the cache directory when configured.
    fn complex(&self, level: u32) -> Result<Complex, Failure> {
        let cache = self.cache_path(level);
        if let Some(path) = cache.as_ref().filter(|p| p.exists()) {
            let mut c: Complex = serde_json::from_slice(&fs::read(path)?)?;
            c.rebuild_index();
            return Ok(c);
        }
        let c = Complex::grow(level, self.build_config(), &PASTING_RULE)?;
        if let Some(path) = cache {
            if let Some(parent) = path.parent() {
                fs::create_dir_all(parent)?;
            }
            fs::write(&path, serde_json::to_vec(&c)?)?;
        }
        Ok(c)
    }

    fn family(&self) -> Result<Family, Failure> {
        let complexes = (2..=self.level.max(2)).map(|n| self.complex(n)).collect::<Result<Vec<_>, _>>()?;
        Ok(Family::from_complexes(complexes)?)
    }

    fn emit(&self, bytes: &[u8]) -> io::Result<()> {
        match &self.out {
            Some(path) => fs::write(path, bytes),
            None => io::stdout().write_all(bytes),
        }
    }

    fn emit_json<T: Serialize>(&self, value: &T) -> Outcome {
        let mut text = serde_json::to_vec_pretty(value)?;
        text.push(b'\n');
        Ok(self.emit(&text)?)
    }
}

fn read_word(path: &Path) -> Result<Word, Failure> {
    Ok(parse_word(&fs::read_to_string(path)?)?)
}

fn relation_set(family: Family, file: Option<&Path>) -> Result<Family, Failure> {
    let Some(path) = file else { return Ok(family) };
    let lines = read_relation_lines(&fs::read_to_string(path)?)?;
    let pairs = lines.into_iter().map(|l| {
        let word = |v: Vec<u32>| v.into_iter().map(Letter).collect::<Word>();
        (word(l.lhs), word(l.rhs))
    });
    Ok(Family { relations: RelationSet::from_pairs(pairs), ..family })
}

fn verdict(outcome: &RewriteOutcome) -> &'static str {
    match outcome {
        RewriteOutcome::Zero { .. } => "zero",
        RewriteOutcome::Canonical { .. } => "canonical",
        RewriteOutcome::Unknown { .. } => "unknown",
    }
}

fn run(cli: Cli) -> Outcome {
    let cfg = &cli.run;
    match cli.command {
        Command::Build => {
            let c = cfg.complex(cfg.level)?;
            eprintln!(
                "level {}: {} vertices, {} edges, {} faces, {} pastings",
                c.level,
                c.vertices.len(),
                c.edges.len(),
                c.face_count(),
                c.pastings.len()
            );
            cfg.emit_json(&complex_dump(&c))
        }
        Command::Label => {
            let c = cfg.complex(cfg.level)?;
            let mut alpha = Alphabet::new();
            let lab = Labeling::new(&c, &mut alpha);
            cfg.emit_json(&label_dump(&c, &lab, &mut alpha)?)
        }
        Command::Relations => {
            let f = cfg.family()?;
            let mut buf = Vec::new();
            let refs: Vec<&Complex> = f.complexes.iter().collect();
            write_relations(&f.relations, &refs, &mut buf)?;
            eprintln!("{} relations, {} conflicts", f.relations.len(), f.relations.conflicts.len());
            Ok(cfg.emit(&buf)?)
        }
        Command::VerifyDeterminism => {
            let f = cfg.family()?;
            let report = check_determinism(&f.relations);
            println!(
                "levels 2..={}: {} relations, {} conflicts ({} paths examined, {} skipped)",
                cfg.level, report.relations, report.conflicts, report.examined, report.skipped
            );
            if cfg.out.is_some() {
                cfg.emit_json(&f.relations.conflicts)?;
            }
            if report.conflicts == 0 {
                Ok(())
            } else {
                Err(Failure::Verification(format!("{} conflicts", report.conflicts)))
            }
        }
        Command::Census { with_boundary } => {
            let c = cfg.complex(cfg.level)?;
            let mut alpha = Alphabet::new();
            let lab = Labeling::new(&c, &mut alpha);
            let scope = if with_boundary { Scope::All } else { Scope::Unbounded };
            let report = census(&[(&c, &lab)], &alpha, scope);
            let diff = compare_tables(&report);
            for d in &diff {
                let level = d.level.map_or("-".to_string(), |l| l.to_string());
                let obs = d.observed.map_or("-".to_string(), |o| o.to_string());
                let exp = d.expected.map_or("-".to_string(), |e| e.to_string());
                eprintln!("table {} {:6} level {:>2}: observed {:>4} expected {:>4} {:?}", d.table, d.group, level, obs, exp, d.status);
            }
            let above = diff.iter().filter(|d| d.status == RowStatus::Above).count();
            eprintln!("{above} rows above the reference counts");
            #[derive(Serialize)]
            struct Out<'a> {
                report: &'a nilcomplex_core::census::CensusReport,
                diff: &'a [nilcomplex_core::census::TableCheck],
            }
            cfg.emit_json(&Out { report: &report, diff: &diff })
        }
        Command::Reduce { word, relations } => {
            let w = read_word(&word)?;
            let f = relation_set(cfg.family()?, relations.as_deref())?;
            let out = reduce(&w, &f.relations, &f.rules, &f.alphabet, cfg.budget);
            eprintln!("verdict: {}", verdict(&out));
            cfg.emit_json(&out)
        }
        Command::NilCheck { word, k, relations } => {
            let w = read_word(&word)?;
            let f = relation_set(cfg.family()?, relations.as_deref())?;
            let out = nil_check(&w, k, &f.relations, &f.rules, &f.alphabet, cfg.budget);
            eprintln!("verdict: {}", verdict(&out));
            cfg.emit_json(&out)
        }
        Command::ExportDot { plane } => {
            let c = cfg.complex(cfg.level)?;
            if plane as usize >= c.planes.len() {
                return Err(Failure::Usage(format!("plane {plane} does not exist (have {})", c.planes.len())));
            }
            let mut alpha = Alphabet::new();
            let lab = Labeling::new(&c, &mut alpha);
            Ok(cfg.emit(plane_dot(&c, plane, Some(&lab)).as_bytes())?)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(n) = cli.run.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
