//! The `f2lie` command-line front end.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use f2lie_core::autgroup::{automorphism_group, MatGroup};
use f2lie_core::catalog::Catalog;
use f2lie_core::grading::{
    find_idempotents, grading_from_idempotent, idempotent_orbits, is_simple_super, superize,
};
use f2lie_core::lie::LieAlgebra;
use f2lie_core::subalg::{
    all_subalgebras, all_subalgebras_partial, brute_force_subalgebras, simple_subquotients,
    SubalgConfig, SubalgebraLattice,
};
use f2lie_core::Budget;
use serde_json::json;

use crate::catalog_dir::{default_catalog_dir, open_catalog};
use crate::error::{Error, Result};
use crate::format::load_algebra;
use crate::groupfile::{load_group, matrix_rows};
use crate::tables::{format_orbit_summary, grading_profile, Table};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_BUDGET: i32 = 3;

/// Largest dimension the `oracle` command brute-forces.
pub const ORACLE_MAX_DIM: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "f2lie",
    version,
    about = "Lie algebras over GF(2): gradings, superizations, subalgebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Search-node budget for automorphism and orbit computations.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_nodes: Option<u64>,
    /// Wall-clock budget in seconds.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_seconds: Option<u64>,
    /// Output format; `tsv` by default, `dot` for `hasse`.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Only extend subalgebras of dimension below this.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_dim: Option<u64>,
    /// Extra catalog entries (directory with index.json).
    #[arg(long, global = true)]
    pub catalog_dir: Option<PathBuf>,
    /// Automorphism generators to use instead of searching for Aut(L).
    #[arg(long, global = true)]
    pub group_file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms and simplicity.
    Verify { input: String },
    /// Orbits of idempotents and their grading signatures.
    Idempotents { input: String },
    /// Superization dimensions and super-simplicity, one per idempotent orbit.
    Superize { input: String },
    /// Generators and order of the automorphism group.
    Aut { input: String },
    /// Orbit counts of subalgebras and maximal subalgebras by dimension.
    Subalgebras { input: String },
    /// Hasse diagram of the subalgebra lattice.
    Hasse {
        input: String,
        /// One vertex per orbit instead of one per subalgebra.
        #[arg(long)]
        orbits: bool,
    },
    /// Catalog ids of the proper simple subquotients.
    Subquotients { input: String },
    /// Cross-check the orbit method against brute force.
    Oracle { input: String },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Verify { .. } => "verify",
            Command::Idempotents { .. } => "idempotents",
            Command::Superize { .. } => "superize",
            Command::Aut { .. } => "aut",
            Command::Subalgebras { .. } => "subalgebras",
            Command::Hasse { .. } => "hasse",
            Command::Subquotients { .. } => "subquotients",
            Command::Oracle { .. } => "oracle",
        }
    }

    fn input(&self) -> &str {
        match self {
            Command::Verify { input }
            | Command::Idempotents { input }
            | Command::Superize { input }
            | Command::Aut { input }
            | Command::Subalgebras { input }
            | Command::Hasse { input, .. }
            | Command::Subquotients { input }
            | Command::Oracle { input } => input,
        }
    }
}

/// Result of one command before rendering.
enum Report {
    Table(Table),
    Text(String),
}

struct Outcome {
    report: Report,
    partial: bool,
    failed: bool,
}

impl Outcome {
    fn table(t: Table) -> Self {
        Self {
            report: Report::Table(t),
            partial: false,
            failed: false,
        }
    }
}

struct Context {
    catalog: Catalog,
    algebra: LieAlgebra,
    name: String,
    budget: Budget,
    group_file: Option<PathBuf>,
    max_dim: Option<usize>,
}

impl Context {
    fn group(&self) -> Result<MatGroup> {
        match &self.group_file {
            Some(p) => load_group(p, &self.algebra),
            None => Ok(automorphism_group(&self.algebra, &self.budget)?),
        }
    }

    fn config(&self) -> SubalgConfig {
        SubalgConfig {
            max_dim: self.max_dim,
            ..SubalgConfig::default()
        }
    }
}

fn resolve(catalog: &Catalog, input: &str) -> Result<(LieAlgebra, String)> {
    if let Some(e) = catalog.get(input) {
        return Ok((e.algebra.clone(), e.id.clone()));
    }
    let path = Path::new(input);
    if path.is_file() {
        let l = load_algebra(path)?;
        let name = if l.label().is_empty() {
            path.file_stem()
                .map_or(input.to_string(), |s| s.to_string_lossy().into_owned())
        } else {
            l.label().to_string()
        };
        return Ok((l, name));
    }
    Err(Error::UnknownInput(input.to_string()))
}

fn make_budget(cli: &Cli) -> Budget {
    let mut budget = Budget::default();
    if let Some(n) = cli.budget_nodes {
        budget = budget.with_nodes(n);
    }
    if let Some(s) = cli.budget_seconds {
        let flag = Arc::new(AtomicBool::new(false));
        let f = flag.clone();
        std::thread::spawn(move || {
            std::thread::sleep(Duration::from_secs(s));
            f.store(true, Ordering::Relaxed);
        });
        budget = budget.with_interrupt(flag);
    }
    let last = Mutex::new(Instant::now());
    budget.with_progress(Arc::new(move |stage: &str, count: u64| {
        let mut last = last.lock().expect("progress lock");
        if last.elapsed() >= Duration::from_secs(2) {
            *last = Instant::now();
            eprintln!("progress: {stage} {count}");
        }
    }))
}

/// Runs `cli`, writing the report to `out` and diagnostics to
/// `err`. Returns the exit status.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli) {
        Ok((outcome, format)) => {
            let text = match (outcome.report, format) {
                (Report::Table(t), Format::Json) => t.to_json(cli.command.name(), outcome.partial),
                (Report::Table(t), _) => t.to_tsv(),
                (Report::Text(s), _) => s,
            };
            let _ = out.write_all(text.as_bytes());
            if outcome.partial {
                let _ = writeln!(err, "warning: budget exhausted, results are partial");
                EXIT_BUDGET
            } else if outcome.failed {
                EXIT_ERROR
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_budget() {
                EXIT_BUDGET
            } else {
                EXIT_ERROR
            }
        }
    }
}

fn execute(cli: &Cli) -> Result<(Outcome, Format)> {
    let default_dir = default_catalog_dir();
    let dir = match &cli.catalog_dir {
        Some(d) => Some(d.as_path()),
        None => default_dir
            .join(crate::catalog_dir::INDEX_FILE)
            .is_file()
            .then_some(default_dir.as_path()),
    };
    let catalog = open_catalog(dir)?;
    let (algebra, name) = resolve(&catalog, cli.command.input())?;
    let ctx = Context {
        catalog,
        algebra,
        name,
        budget: make_budget(cli),
        group_file: cli.group_file.clone(),
        max_dim: cli.max_dim.map(|d| d as usize),
    };
    let format = cli.format.unwrap_or(match cli.command {
        Command::Hasse { .. } => Format::Dot,
        _ => Format::Tsv,
    });
    if format == Format::Dot && !matches!(cli.command, Command::Hasse { .. }) {
        return Err(Error::format(
            cli.command.input(),
            format!("`{}` has no dot output", cli.command.name()),
        ));
    }
    let outcome = match &cli.command {
        Command::Verify { .. } => verify(&ctx),
        Command::Idempotents { .. } => idempotents(&ctx),
        Command::Superize { .. } => superizations(&ctx),
        Command::Aut { .. } => aut(&ctx),
        Command::Subalgebras { .. } => subalgebras(&ctx),
        Command::Hasse { orbits, .. } => hasse(&ctx, *orbits, format),
        Command::Subquotients { .. } => subquotients(&ctx),
        Command::Oracle { .. } => oracle(&ctx),
    }?;
    Ok((outcome, format))
}

fn verify(ctx: &Context) -> Result<Outcome> {
    let l = &ctx.algebra;
    let report = l.validate_axioms();
    let mut t = Table::new([
        "algebra",
        "dim",
        "axioms",
        "simple",
        "center dim",
        "perfect",
    ]);
    t.push(vec![
        json!(ctx.name),
        json!(l.dim()),
        json!(if report.is_valid() {
            "ok".to_string()
        } else {
            report.to_string()
        }),
        json!(l.is_simple()),
        json!(l.center().dim()),
        json!(l.derived_algebra().dim() == l.dim()),
    ]);
    let mut o = Outcome::table(t);
    o.failed = !report.is_valid();
    Ok(o)
}

/// Idempotent orbits under Aut(L), or `None` when the group search ran out of budget.
fn orbit_data(ctx: &Context) -> Result<Option<Vec<f2lie_core::grading::IdempotentOrbit>>> {
    let a = match ctx.group() {
        Ok(a) => a,
        Err(e) if e.is_budget() => return Ok(None),
        Err(e) => return Err(e),
    };
    match idempotent_orbits(&ctx.algebra, &a, &ctx.budget) {
        Ok(o) => Ok(Some(o)),
        Err(e) if e.is_budget() => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn summary(orbits: &[f2lie_core::grading::IdempotentOrbit]) -> Vec<(usize, [usize; 2])> {
    let mut counts = std::collections::BTreeMap::new();
    for o in orbits {
        *counts.entry(o.signature).or_insert(0usize) += 1;
    }
    counts.into_iter().map(|(s, m)| (m, s)).collect()
}

fn idempotents(ctx: &Context) -> Result<Outcome> {
    let l = &ctx.algebra;
    let count = find_idempotents(l)?.iter().filter(|e| !e.central).count();
    let mut t = Table::new(["algebra", "idempotents", "gradings"]);
    let (gradings, partial) = match orbit_data(ctx)? {
        Some(orbits) => (format_orbit_summary(&summary(&orbits)), false),
        None => {
            let p = grading_profile(l)?;
            let sigs: Vec<String> = p
                .signatures
                .iter()
                .map(|[a, b]| format!("? x [{a},{b}]"))
                .collect();
            (sigs.join(", "), true)
        }
    };
    t.push(vec![json!(ctx.name), json!(count), json!(gradings)]);
    let mut o = Outcome::table(t);
    o.partial = partial;
    Ok(o)
}

fn superizations(ctx: &Context) -> Result<Outcome> {
    let l = &ctx.algebra;
    let mut t = Table::new(["algebra", "gradings", "superizations", "super-simple"]);
    let mut partial = false;
    let mut dims = Vec::new();
    let mut all_simple = true;
    let gradings = match orbit_data(ctx)? {
        Some(orbits) => {
            for o in &orbits {
                let e = find_idempotents(l)?
                    .into_iter()
                    .find(|e| e.element == o.representative)
                    .expect("representatives are idempotents");
                let s = superize(l, &grading_from_idempotent(l, &e)?)?;
                all_simple &= is_simple_super(&s)?;
                dims.push(s.dim());
            }
            format_orbit_summary(&summary(&orbits))
        }
        None => {
            partial = true;
            for e in find_idempotents(l)?.iter().filter(|e| !e.central) {
                let s = superize(l, &grading_from_idempotent(l, e)?)?;
                all_simple &= is_simple_super(&s)?;
                if !dims.contains(&s.dim()) {
                    dims.push(s.dim());
                }
            }
            String::from("?")
        }
    };
    dims.sort_unstable();
    t.push(vec![
        json!(ctx.name),
        json!(gradings),
        json!(dims),
        json!(all_simple),
    ]);
    let mut o = Outcome::table(t);
    o.partial = partial;
    Ok(o)
}

fn matrix_text(m: &f2lie_core::f2linalg::BitMatrix) -> String {
    matrix_rows(m).join(",")
}

fn aut(ctx: &Context) -> Result<Outcome> {
    let a = ctx.group()?;
    let mut t = Table::new(["algebra", "order", "generators"]);
    let gens: Vec<String> = a.generator_matrices().iter().map(matrix_text).collect();
    t.push(vec![
        json!(ctx.name),
        json!(a.order()?.to_string()),
        json!(gens.join(";")),
    ]);
    Ok(Outcome::table(t))
}

fn lattice(ctx: &Context) -> Result<SubalgebraLattice> {
    let a = ctx.group()?;
    Ok(all_subalgebras_partial(
        &ctx.algebra,
        &a,
        &ctx.config(),
        &ctx.budget,
    )?)
}

/// Columns `dim 1 .. dim n-1`; the zero subalgebra and L itself are left out.
fn dim_columns(n: usize) -> Vec<String> {
    (1..n).map(|d| format!("dim {d}")).collect()
}

fn subalgebras(ctx: &Context) -> Result<Outcome> {
    let n = ctx.algebra.dim();
    let mut columns = vec!["algebra".to_string(), "row".to_string()];
    columns.extend(dim_columns(n));
    let mut t = Table::new(columns);
    let lat = match lattice(ctx) {
        Ok(lat) => lat,
        Err(e) if e.is_budget() => {
            return Ok(Outcome {
                report: Report::Table(t),
                partial: true,
                failed: false,
            })
        }
        Err(e) => return Err(e),
    };
    let all = lat.counts_by_dim();
    let max = lat.maximal_counts_by_dim();
    for (row, counts) in [("all", &all), ("max", &max)] {
        let mut r = vec![json!(ctx.name), json!(row)];
        r.extend((1..n).map(|d| json!(counts.get(d).copied().unwrap_or(0))));
        t.push(r);
    }
    let mut o = Outcome::table(t);
    o.partial = !lat.is_complete();
    Ok(o)
}

fn hasse(ctx: &Context, orbits: bool, format: Format) -> Result<Outcome> {
    let lat = lattice(ctx)?;
    let partial = !lat.is_complete();
    let report = if format == Format::Dot {
        let expanded = if orbits || partial {
            None
        } else {
            lat.expanded_hasse().ok()
        };
        Report::Text(match expanded {
            Some(h) => h.to_dot(),
            None => lat.to_dot(),
        })
    } else {
        let mut t = Table::new(["lower", "upper", "lower dim", "upper dim"]);
        for e in lat.edges() {
            t.push(vec![
                json!(e.lower),
                json!(e.upper),
                json!(lat.reps()[e.lower].space.dim()),
                json!(lat.reps()[e.upper].space.dim()),
            ]);
        }
        Report::Table(t)
    };
    Ok(Outcome {
        report,
        partial,
        failed: false,
    })
}

fn subquotients(ctx: &Context) -> Result<Outcome> {
    let a = ctx.group()?;
    let lat = all_subalgebras(&ctx.algebra, &a, &ctx.config(), &ctx.budget)?;
    let r = simple_subquotients(&lat, &ctx.catalog, &ctx.budget)?;
    let mut t = Table::new(["algebra", "subquotients", "unknown"]);
    let unknown: Vec<String> = r
        .unknown
        .iter()
        .map(|q| format!("dim {}", q.dim()))
        .collect();
    t.push(vec![json!(ctx.name), json!(r.identified), json!(unknown)]);
    Ok(Outcome::table(t))
}

fn oracle(ctx: &Context) -> Result<Outcome> {
    let l = &ctx.algebra;
    let n = l.dim();
    if n > ORACLE_MAX_DIM {
        return Err(Error::format(
            &ctx.name,
            format!("oracle runs up to dimension {ORACLE_MAX_DIM}, got {n}"),
        ));
    }
    let a = ctx.group()?;
    let lat = all_subalgebras(l, &a, &SubalgConfig::default(), &ctx.budget)?;
    let brute = brute_force_subalgebras(l, 1 << ORACLE_MAX_DIM)?;
    let ours = lat.weighted_counts_by_dim();
    let theirs = brute.counts_by_dim(n);
    let mut t = Table::new(["algebra", "result"]);
    let ok = ours == theirs;
    let text = if ok {
        format!("match: {} subalgebras", theirs.iter().sum::<usize>())
    } else {
        format!("mismatch: orbit method {ours:?}, brute force {theirs:?}")
    };
    t.push(vec![json!(ctx.name), json!(text)]);
    let mut o = Outcome::table(t);
    o.failed = !ok;
    Ok(o)
}
