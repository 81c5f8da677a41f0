//! `samesize`: class-size invariants of finite simple groups from the
//! command line.
//!
//! Exit status: 0 on success (and when every verification check passes),
//! 1 when a check fails or an equation has no solution, 2 on usage or
//! infrastructure errors.

use std::collections::BTreeSet;
use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use samesize::catalog::{Catalog, CatalogFilter, Source};
use samesize::invariants::{conjugacy_classes, profile, InvariantProfile};
use samesize::perm::{format_cycles, DEFAULT_ENUMERATION_CAP};
use samesize::uset::pattern::symmetry_classes;
use samesize::uset::{
    instantiate_pattern, match_pattern, solve_psl2_order, PrimeAssignment, USetPattern,
};
use samesize::verify::{run_verification, Caps};

#[derive(Parser, Debug)]
#[command(
    name = "samesize",
    version,
    about = "Same-size conjugacy class sets of finite simple groups"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Largest group order whose elements may be enumerated.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP, value_parser = clap::value_parser!(u64).range(1..), global = true)]
    cap: u64,
    /// Directory of extra `.gens` generator files.
    #[arg(long, global = true)]
    data: Option<PathBuf>,
    /// Worker threads (default: one per core).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..), global = true)]
    threads: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariants of a single group.
    #[command(subcommand)]
    Group(GroupCommand),
    /// The group registry.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Catalog groups with a given U-set.
    Search {
        /// Comma-separated u-values, e.g. 1,55,120,220,264.
        #[arg(long, value_delimiter = ',', required = true)]
        uset: Vec<u64>,
    },
    /// Symbolic U-set patterns such as {1,rq,8pq,4qr,8pr}.
    #[command(subcommand)]
    Pattern(PatternCommand),
    /// Solves l(l²−1)/2 = N for l.
    #[command(name = "solve-psl2")]
    SolvePsl2 { n: u64 },
    /// Runs the verification harness.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Subcommand, Debug)]
enum GroupCommand {
    /// Order, degree and the full invariant profile.
    Info { name: String },
    /// The U-set.
    Uset { name: String },
    /// Conjugacy classes with sizes, element orders and representatives.
    Classes { name: String },
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    /// Registered groups.
    List {
        /// Only groups whose order has exactly N distinct prime divisors.
        #[arg(long)]
        k: Option<usize>,
        /// Only groups of order at most M.
        #[arg(long = "max-order")]
        max_order: Option<u64>,
    },
}

#[derive(Subcommand, Debug)]
enum PatternCommand {
    /// Evaluates a pattern at a prime assignment.
    Instantiate {
        #[arg(long)]
        pattern: String,
        /// Comma-separated `symbol=prime` pairs, e.g. p=3,q=5,r=11.
        #[arg(long, value_delimiter = ',', required = true)]
        assign: Vec<String>,
    },
    /// Finds prime assignments that turn a pattern into a target set.
    Match {
        #[arg(long)]
        pattern: String,
        #[arg(long, value_delimiter = ',', required = true)]
        target: Vec<u64>,
        /// Largest prime tried for each symbol.
        #[arg(long, default_value_t = 100)]
        bound: u64,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Every registered check.
    Paper(VerifyArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Comma-separated check ids to run instead of all of them.
    #[arg(long, value_delimiter = ',')]
    only: Option<Vec<String>>,
    /// Also write the JSON report to this file.
    #[arg(long)]
    report: Option<PathBuf>,
}

/// What a command produced, or why it could not run.
enum Failure {
    /// A negative answer: a failing check, an unsolvable equation.
    Negative,
    Usage(String),
}

impl<E: Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build_global()
        {
            eprintln!("samesize: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("samesize: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Group(cmd) => group(cli, cmd),
        Command::Catalog(CatalogCommand::List { k, max_order }) => {
            catalog_list(cli, *k, *max_order)
        }
        Command::Search { uset } => search(cli, uset),
        Command::Pattern(PatternCommand::Instantiate { pattern, assign }) => {
            instantiate(cli, pattern, assign)
        }
        Command::Pattern(PatternCommand::Match {
            pattern,
            target,
            bound,
        }) => pattern_match(cli, pattern, target, *bound),
        Command::SolvePsl2 { n } => solve(cli, *n),
        Command::Verify(VerifyCommand::Paper(args)) => verify(cli, args),
    }
}

fn load_catalog(cli: &Cli) -> Result<Catalog, Failure> {
    Ok(match &cli.data {
        Some(dir) => Catalog::with_data_dir(dir)?,
        None => Catalog::builtin()?,
    })
}

fn emit(cli: &Cli, value: &Value, text: impl FnOnce() -> String) {
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("json")),
        Format::Text => print!("{}", text()),
    }
}

fn braces<T: Display>(values: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = values.into_iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn group(cli: &Cli, cmd: &GroupCommand) -> Outcome {
    let catalog = load_catalog(cli)?;
    let (GroupCommand::Info { name }
    | GroupCommand::Uset { name }
    | GroupCommand::Classes { name }) = cmd;
    let g = catalog.get(name)?;
    let canonical = Catalog::canonical_name(name);
    match cmd {
        GroupCommand::Info { .. } => {
            let p = profile(&g, cli.cap)?;
            let value = json!({
                "name": canonical,
                "degree": g.degree(),
                "generators": g.generators().len(),
                "profile": p,
            });
            emit(cli, &value, || info_text(&canonical, g.degree(), &p));
        }
        GroupCommand::Uset { .. } => {
            let p = profile(&g, cli.cap)?;
            let value = json!({ "name": canonical, "U": p.u });
            emit(cli, &value, || format!("{}\n", braces(&p.u)));
        }
        GroupCommand::Classes { .. } => {
            let classes = conjugacy_classes(&g, cli.cap)?;
            let rows: Vec<Value> = classes
                .iter()
                .map(|c| {
                    json!({
                        "size": c.size,
                        "element_order": c.element_order,
                        "representative": format_cycles(&c.representative),
                    })
                })
                .collect();
            let value = json!({ "name": canonical, "order": g.order(), "classes": rows });
            emit(cli, &value, || {
                let mut out = format!("{:>8} {:>6}  representative\n", "size", "order");
                for c in &classes {
                    out += &format!(
                        "{:>8} {:>6}  {}\n",
                        c.size,
                        c.element_order,
                        format_cycles(&c.representative)
                    );
                }
                out
            });
        }
    }
    Ok(())
}

fn info_text(name: &str, degree: usize, p: &InvariantProfile) -> String {
    let sizes: Vec<String> = p.u_map.iter().map(|(n, u)| format!("{n}:{u}")).collect();
    format!(
        "group    {name}\norder    {}\ndegree   {degree}\nclasses  {}\nV        {}\nrank     {}\nu        {}\nU        {}\npi       {}\n",
        p.order,
        p.class_count,
        braces(&p.v),
        p.rank,
        sizes.join(" "),
        braces(&p.u),
        braces(&p.pi),
    )
}

fn catalog_list(cli: &Cli, k: Option<usize>, max_order: Option<u64>) -> Outcome {
    let catalog = load_catalog(cli)?;
    let filter = CatalogFilter {
        prime_count: k,
        max_order,
    };
    let entries = catalog.list(&filter);
    let source = |s: &Source| match s {
        Source::Constructor => "constructor",
        Source::GeneratorFile(_) => "generator file",
    };
    let rows: Vec<Value> = entries
        .iter()
        .map(|e| {
            json!({
                "name": e.name(),
                "order": e.expected_order(),
                "k": e.prime_count(),
                "source": source(e.source()),
                "provenance": e.provenance(),
            })
        })
        .collect();
    emit(cli, &Value::Array(rows), || {
        let mut out = String::new();
        for e in &entries {
            out += &format!(
                "{:<10} {:>12}  k={}  {}\n",
                e.name(),
                e.expected_order(),
                e.prime_count(),
                source(e.source())
            );
        }
        out
    });
    Ok(())
}

fn search(cli: &Cli, uset: &[u64]) -> Outcome {
    let catalog = load_catalog(cli)?;
    let target: BTreeSet<u64> = uset.iter().copied().collect();
    let mut matches = Vec::new();
    let mut skipped = Vec::new();
    for name in catalog.names() {
        let g = catalog.get(&name)?;
        if g.order() > cli.cap {
            skipped.push(name);
            continue;
        }
        if profile(&g, cli.cap)?.u == target {
            matches.push(name);
        }
    }
    let value = json!({ "uset": target, "matches": matches, "skipped": skipped });
    emit(cli, &value, || {
        let mut out: String = matches.iter().map(|m| format!("{m}\n")).collect();
        if matches.is_empty() {
            out += "no catalog group has this U-set\n";
        }
        if !skipped.is_empty() {
            out += &format!("not checked (order above --cap): {}\n", skipped.join(", "));
        }
        out
    });
    Ok(())
}

fn parse_assignment(pairs: &[String]) -> Result<PrimeAssignment, Failure> {
    let mut a = PrimeAssignment::new();
    for pair in pairs {
        let (s, v) = pair
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("expected symbol=prime, got {pair:?}")))?;
        let mut chars = s.trim().chars();
        let (Some(symbol), None) = (chars.next(), chars.next()) else {
            return Err(Failure::Usage(format!("bad symbol {s:?}")));
        };
        let value: u64 = v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("bad value {v:?}")))?;
        a.set(symbol, value)?;
    }
    Ok(a)
}

fn instantiate(cli: &Cli, pattern: &str, assign: &[String]) -> Outcome {
    let pat: USetPattern = pattern.parse()?;
    let a = parse_assignment(assign)?;
    let inst = instantiate_pattern(&pat, &a)?;
    let value = json!({
        "pattern": pat.to_string(),
        "assignment": a,
        "values": inst.values,
        "distinct": inst.is_distinct(),
        "sum": inst.sum(),
    });
    emit(cli, &value, || {
        let mut out = format!("{}\n", braces(&inst.values));
        for &(i, j) in &inst.duplicates {
            out += &format!(
                "terms {} and {} both give {}\n",
                pat.terms()[i],
                pat.terms()[j],
                inst.values[i]
            );
        }
        out
    });
    Ok(())
}

fn pattern_match(cli: &Cli, pattern: &str, target: &[u64], bound: u64) -> Outcome {
    let pat: USetPattern = pattern.parse()?;
    let target: BTreeSet<u64> = target.iter().copied().collect();
    let found = match_pattern(&pat, &target, bound);
    let classes = symmetry_classes(&pat, &found);
    let value = json!({
        "pattern": pat.to_string(),
        "target": target,
        "bound": bound,
        "assignments": found,
        "symmetry_classes": classes.len(),
    });
    emit(cli, &value, || {
        let mut out: String = found.iter().map(|a| format!("{a}\n")).collect();
        if found.is_empty() {
            out += "no match\n";
        } else if classes.len() < found.len() {
            out += &format!(
                "{} assignments, {} up to symmetries of the pattern\n",
                found.len(),
                classes.len()
            );
        }
        out
    });
    Ok(())
}

fn solve(cli: &Cli, n: u64) -> Outcome {
    let l = solve_psl2_order(n);
    emit(cli, &json!({ "n": n, "l": l }), || match l {
        Some(l) => format!("{l}\n"),
        None => format!("no l with l(l^2-1)/2 = {n}\n"),
    });
    l.map(|_| ()).ok_or(Failure::Negative)
}

fn verify(cli: &Cli, args: &VerifyArgs) -> Outcome {
    let catalog = load_catalog(cli)?;
    let selection: Option<BTreeSet<String>> = args
        .only
        .as_ref()
        .map(|ids| ids.iter().map(|s| s.trim().to_string()).collect());
    let caps = Caps {
        enumeration: cli.cap,
        ..Caps::default()
    };
    let report = run_verification(&catalog, selection.as_ref(), caps)?;
    if let Some(path) = &args.report {
        std::fs::write(path, report.to_json() + "\n")
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    match cli.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}
