//! The `spancon` command line.
//!
//! Exit codes: 0 success, 1 verification negative, 2 construction failure,
//! 3 usage or input error.

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::containers::{container_with, ContainerRequest};
use crate::error::{Error, Result};
use crate::graph::{Arrangement, SubgraphView, Vertex};
use crate::hampath::SearchBudget;
use crate::{json, verify};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_CONSTRUCTION: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "spancon",
    version,
    about = "Spanning containers in arrangement graphs A(n,k)"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Build an l-container between u and v and print it as JSON.
    Gen {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        u: String,
        #[arg(short)]
        v: String,
        #[arg(short)]
        l: usize,
        /// Output file, or "-" for stdout.
        #[arg(short, long, default_value = "-")]
        out: PathBuf,
    },
    /// Check a container JSON file; prints a JSON report.
    Verify { file: PathBuf },
    /// Build and validate containers over a grid of pairs and l.
    Sweep {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: usize,
        /// "all" or "sample:COUNT:seedN".
        #[arg(long, default_value = "all")]
        pairs: String,
        /// "full", a single l, or "A..B".
        #[arg(long = "l", default_value = "full")]
        l_range: String,
        /// Worker threads; defaults to the available cores.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Decide by exhaustive search whether an l-container exists.
    Oracle {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        u: String,
        #[arg(short)]
        v: String,
        #[arg(short)]
        l: usize,
    },
    /// Print vertex, degree, edge and cross-edge counts.
    Stats {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: usize,
    },
    /// Write the graph in Graphviz DOT form (n <= 5).
    ExportDot {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: usize,
        #[arg(short, long, default_value = "-")]
        out: PathBuf,
    },
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match dispatch(cli.cmd, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_input() {
                EXIT_USAGE
            } else {
                EXIT_CONSTRUCTION
            }
        }
    }
}

fn dispatch(cmd: Cmd, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let budget = SearchBudget::from_env();
    match cmd {
        Cmd::Gen {
            n,
            k,
            u,
            v,
            l,
            out: path,
        } => {
            let g = Arrangement::new(n, k)?;
            let (u, v) = (g.parse_vertex(&u)?, g.parse_vertex(&v)?);
            let req = ContainerRequest { graph: g, u, v, l };
            let c = container_with(&req, budget)?;
            emit(&path, &json::to_json(&c), out)?;
            Ok(EXIT_OK)
        }
        Cmd::Verify { file } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Error::input(format!("cannot read {}: {e}", file.display())))?;
            let doc = json::parse(&text)?;
            let host = SubgraphView::full(doc.graph()?);
            let report = verify::validate_raw(&host, &doc.u, &doc.v, &doc.paths, true);
            writeln!(out, "{}", report.to_json()).map_err(io)?;
            Ok(if report.ok { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Cmd::Sweep {
            n,
            k,
            pairs,
            l_range,
            jobs,
        } => {
            let cfg = SweepConfig::parse(n, k, &pairs, &l_range, jobs)?;
            let summary = sweep(&cfg, budget)?;
            for cell in summary.cells.iter().filter(|c| c.error.is_some()).take(10) {
                let g = cfg.graph()?;
                writeln!(
                    err,
                    "failed: u={} v={} l={}: {}",
                    g.format_vertex(&cell.u),
                    g.format_vertex(&cell.v),
                    cell.l,
                    cell.error.as_deref().unwrap_or("")
                )
                .map_err(io)?;
            }
            write!(out, "{}", summary.report(&cfg)).map_err(io)?;
            Ok(if summary.failed() == 0 {
                EXIT_OK
            } else {
                EXIT_CONSTRUCTION
            })
        }
        Cmd::Oracle { n, k, u, v, l } => {
            let g = Arrangement::new(n, k)?;
            let (u, v) = (g.parse_vertex(&u)?, g.parse_vertex(&v)?);
            let exists = verify::oracle_container_exists(g, &u, &v, l)?;
            writeln!(out, "{}", if exists { "exists" } else { "not-exists" }).map_err(io)?;
            Ok(if exists { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Cmd::Stats { n, k } => {
            let g = Arrangement::new(n, k)?;
            writeln!(out, "A({n},{k})").map_err(io)?;
            writeln!(out, "vertices: {}", g.vertex_count()).map_err(io)?;
            writeln!(out, "degree: {}", g.degree()).map_err(io)?;
            writeln!(out, "edges: {}", g.edge_count()).map_err(io)?;
            writeln!(out, "cross-edges per class pair: {}", g.cross_edge_count()).map_err(io)?;
            Ok(EXIT_OK)
        }
        Cmd::ExportDot { n, k, out: path } => {
            let g = Arrangement::new(n, k)?;
            emit(&path, &g.to_dot()?, out)?;
            Ok(EXIT_OK)
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::input(format!("write failed: {e}"))
}

fn emit(path: &PathBuf, text: &str, out: &mut dyn Write) -> Result<()> {
    if path.as_os_str() == "-" {
        out.write_all(text.as_bytes()).map_err(io)
    } else {
        std::fs::write(path, text).map_err(|e| Error::input(format!("cannot write {}: {e}", path.display())))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairMode {
    All,
    Sample { count: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub n: usize,
    pub k: usize,
    pub pairs: PairMode,
    pub l_range: RangeInclusive<usize>,
    pub jobs: usize,
    /// Keep each container's JSON in the summary.
    pub keep_json: bool,
}

impl SweepConfig {
    /// A sweep over every `l` in `1..=k(n-k)` with default parallelism.
    pub fn full(n: usize, k: usize, pairs: PairMode) -> Result<Self> {
        let g = Arrangement::new(n, k)?;
        let cfg = SweepConfig {
            n,
            k,
            pairs,
            l_range: 1..=g.degree(),
            jobs: rayon::current_num_threads(),
            keep_json: false,
        };
        cfg.graph()?;
        Ok(cfg)
    }

    pub fn parse(n: usize, k: usize, pairs: &str, l_range: &str, jobs: Option<usize>) -> Result<Self> {
        let mut cfg = SweepConfig::full(n, k, parse_pairs(pairs)?)?;
        let deg = cfg.l_range.end().to_owned();
        if l_range != "full" {
            let bad = || Error::input(format!("bad l range {l_range:?}; use full, L or A..B"));
            cfg.l_range = match l_range.split_once("..") {
                Some((a, b)) => a.parse().map_err(|_| bad())?..=b.parse().map_err(|_| bad())?,
                None => {
                    let l: usize = l_range.parse().map_err(|_| bad())?;
                    l..=l
                }
            };
        }
        let (a, b) = (*cfg.l_range.start(), *cfg.l_range.end());
        if a == 0 || a > b || b > deg {
            return Err(Error::input(format!("l range {a}..{b} must lie within 1..{deg}")));
        }
        if let Some(j) = jobs {
            if j == 0 {
                return Err(Error::input("jobs must be at least 1"));
            }
            cfg.jobs = j;
        }
        Ok(cfg)
    }

    /// The graph, refusing families where containers do not exist.
    pub fn graph(&self) -> Result<Arrangement> {
        let g = Arrangement::new(self.n, self.k)?;
        if g.k() > 1 && g.n() - g.k() < 2 {
            return Err(Error::input(format!(
                "A({},{}) is excluded from sweeps: n-k must be at least 2",
                g.n(),
                g.k()
            )));
        }
        if let PairMode::Sample { count: 0, .. } = self.pairs {
            return Err(Error::input("sample count must be at least 1"));
        }
        Ok(g)
    }
}

fn parse_pairs(s: &str) -> Result<PairMode> {
    if s == "all" {
        return Ok(PairMode::All);
    }
    let bad = || Error::input(format!("bad pair mode {s:?}; use all or sample:COUNT:seedN"));
    let rest = s.strip_prefix("sample:").ok_or_else(bad)?;
    let (count, seed) = rest.split_once(':').ok_or_else(bad)?;
    let count: usize = count.parse().map_err(|_| bad())?;
    let seed: u64 = seed.strip_prefix("seed").unwrap_or(seed).parse().map_err(|_| bad())?;
    if count == 0 {
        return Err(bad());
    }
    Ok(PairMode::Sample { count, seed })
}

/// Distinct ordered pairs `u != v`, drawn with a seeded generator.
pub fn sample_pairs(g: Arrangement, count: usize, seed: u64) -> Vec<(Vertex, Vertex)> {
    let total = g.vertex_count();
    let want = (count as u128).min(total * (total - 1)) as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::with_capacity(want);
    while out.len() < want {
        let a = rng.gen_range(0..total);
        let b = rng.gen_range(0..total);
        if a != b && seen.insert((a, b)) {
            out.push((g.unrank(a), g.unrank(b)));
        }
    }
    out
}

fn all_pairs(g: Arrangement) -> Vec<(Vertex, Vertex)> {
    let verts: Vec<Vertex> = g.vertices().collect();
    let mut out = Vec::new();
    for u in &verts {
        for v in &verts {
            if u != v {
                out.push((u.clone(), v.clone()));
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct Cell {
    pub u: Vertex,
    pub v: Vertex,
    pub l: usize,
    /// Construction error or validation violations.
    pub error: Option<String>,
    pub json: Option<String>,
    pub micros: u64,
}

#[derive(Clone, Debug)]
pub struct SweepSummary {
    /// In grid order: pairs as generated, then `l` ascending.
    pub cells: Vec<Cell>,
}

impl SweepSummary {
    pub fn attempted(&self) -> usize {
        self.cells.len()
    }

    pub fn failed(&self) -> usize {
        self.cells.iter().filter(|c| c.error.is_some()).count()
    }

    pub fn ok(&self) -> usize {
        self.attempted() - self.failed()
    }

    /// Build-time percentile in milliseconds.
    pub fn percentile_ms(&self, q: f64) -> f64 {
        let mut t: Vec<u64> = self.cells.iter().map(|c| c.micros).collect();
        if t.is_empty() {
            return 0.0;
        }
        t.sort_unstable();
        let idx = ((q * (t.len() - 1) as f64).round() as usize).min(t.len() - 1);
        t[idx] as f64 / 1000.0
    }

    pub fn report(&self, cfg: &SweepConfig) -> String {
        let pairs = match cfg.pairs {
            PairMode::All => "all".to_string(),
            PairMode::Sample { count, seed } => format!("sample:{count}:seed{seed}"),
        };
        format!(
            "A({},{}) pairs={} l={}..{}\nattempted {}  ok {}  failed {}\nbuild ms: p50 {:.3}  p90 {:.3}  p99 {:.3}  max {:.3}\n",
            cfg.n,
            cfg.k,
            pairs,
            cfg.l_range.start(),
            cfg.l_range.end(),
            self.attempted(),
            self.ok(),
            self.failed(),
            self.percentile_ms(0.5),
            self.percentile_ms(0.9),
            self.percentile_ms(0.99),
            self.percentile_ms(1.0),
        )
    }
}

/// Builds and validates every cell of the grid in parallel.
pub fn sweep(cfg: &SweepConfig, budget: SearchBudget) -> Result<SweepSummary> {
    let g = cfg.graph()?;
    let pairs = match cfg.pairs {
        PairMode::All => all_pairs(g),
        PairMode::Sample { count, seed } => sample_pairs(g, count, seed),
    };
    let grid: Vec<(Vertex, Vertex, usize)> = pairs
        .into_iter()
        .flat_map(|(u, v)| cfg.l_range.clone().map(move |l| (u.clone(), v.clone(), l)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::input(format!("cannot start workers: {e}")))?;
    let host = SubgraphView::full(g);
    let cells = pool.install(|| {
        grid.into_par_iter()
            .map(|(u, v, l)| {
                let start = Instant::now();
                let req = ContainerRequest {
                    graph: g,
                    u: u.clone(),
                    v: v.clone(),
                    l,
                };
                let (error, json) = match container_with(&req, budget) {
                    Ok(c) => {
                        let report = verify::validate_container(&host, &c, true);
                        let error = (!report.ok).then(|| report.to_json());
                        (error, cfg.keep_json.then(|| json::to_json(&c)))
                    }
                    Err(e) => (Some(e.to_string()), None),
                };
                let micros = start.elapsed().as_micros() as u64;
                Cell {
                    u,
                    v,
                    l,
                    error,
                    json,
                    micros,
                }
            })
            .collect()
    });
    Ok(SweepSummary { cells })
}
