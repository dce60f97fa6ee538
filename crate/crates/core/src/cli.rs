//! The `symbreak` command line.
//!
//! Exit codes: 0 success or pass, 1 verification failure, 2 usage or input
//! error, 3 inconclusive within budget.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::catalog::verify::{verify_alternating_formula, verify_exceptions, verify_orbitals, verify_sweep};
use crate::catalog::{self, Effort, Status, Sweep, VerificationReport};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::groupspec::{parse_point_set, GroupSpec};
use crate::perm::one_based;
use crate::sums;
use crate::symmetry::{self, Distinguishing, SearchMode, SearchOutcome};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "symbreak", version, about = "Permutation groups, parallel sums and distinguishing numbers")]
pub struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized searches.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Candidates a search may test before giving up.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GroupInput {
    /// Group-spec JSON file, or `-` for stdin.
    pub spec: Option<PathBuf>,
    /// A group name instead of a file: `A7`, `M12`, `L2(7)@8`, `A6^(2)`, ...
    #[arg(long, short)]
    pub group: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Order, orbits, transitivity, primitivity and fixed points.
    Info(GroupInput),
    /// Search for a set with trivial setwise stabilizer.
    RegularSet {
        #[command(flatten)]
        input: GroupInput,
        #[arg(long)]
        min: Option<usize>,
        #[arg(long)]
        max: Option<usize>,
        /// Sample random subsets instead of enumerating.
        #[arg(long)]
        randomized: bool,
    },
    /// The least number of labels that only the identity preserves.
    Distinguishing {
        #[command(flatten)]
        input: GroupInput,
        #[arg(long, default_value_t = 10)]
        k_max: u32,
    },
    /// Orbits on pairs of distinct points.
    Orbitals {
        #[command(flatten)]
        input: GroupInput,
        /// Ordered pairs instead of 2-subsets.
        #[arg(long)]
        ordered: bool,
        /// Print every class, not just sizes.
        #[arg(long)]
        list: bool,
    },
    /// Evaluate a sum expression to a plain generator spec.
    Sum(GroupInput),
    /// Split along an invariant point set and its complement.
    Decompose {
        #[command(flatten)]
        input: GroupInput,
        /// First block, e.g. `1,2,3`; defaults to the first orbit.
        #[arg(long)]
        block: Option<String>,
    },
    /// Check the catalogued tables, the alternating-group formula, the
    /// exceptional values and orbital counts. With no selector, runs all.
    VerifyPaper {
        #[arg(long, value_parser = ["1", "1b", "2"])]
        table: Vec<String>,
        #[arg(long, value_parser = ["3.2", "3.3"])]
        lemma: Vec<String>,
        #[arg(long)]
        theorem: bool,
        #[arg(long, default_value = "quick", value_parser = ["quick", "full"])]
        effort: String,
    },
    /// Catalog contents.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    /// Every entry with its claims.
    List,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn load(input: &GroupInput) -> Result<PermGroup> {
    match (&input.spec, &input.group) {
        (Some(_), Some(_)) => Err(Error::Spec("give a spec file or --group, not both".into())),
        (None, Some(name)) => catalog::build_named(name),
        (Some(path), None) => {
            let text = if path.as_os_str() == "-" {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Spec(e.to_string()))?;
                s
            } else {
                std::fs::read_to_string(path).map_err(|e| Error::Spec(format!("{}: {e}", path.display())))?
            };
            let spec: GroupSpec = serde_json::from_str(&text).map_err(|e| Error::Spec(e.to_string()))?;
            spec.build()
        }
        (None, None) => Err(Error::Spec("no group given: pass a spec file or --group NAME".into())),
    }
}

fn set_json(points: &[usize]) -> Value {
    json!(one_based(points))
}

fn emit(out: &mut dyn Write, cli: &Cli, value: Value, text: String) -> Result<()> {
    let res = if cli.json { writeln!(out, "{}", serde_json::to_string_pretty(&value).unwrap()) } else { writeln!(out, "{text}") };
    res.map_err(|e| Error::Spec(e.to_string()))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Info(input) => {
            let g = load(input)?;
            let orbits: Vec<Value> = g.orbits().iter().map(|o| set_json(o)).collect();
            let transitive = g.is_transitive();
            let primitive = if transitive { Some(g.is_primitive()?) } else { None };
            let fixed = g.fixed_points();
            let value = json!({
                "degree": g.degree(),
                "order": g.order().to_string(),
                "generators": g.generators().iter().map(|p| p.render_cycles()).collect::<Vec<_>>(),
                "orbits": orbits,
                "transitive": transitive,
                "primitive": primitive,
                "fixed_points": set_json(&fixed),
            });
            let text = format!(
                "degree {}\norder {}\norbits {}\ntransitive {transitive}\nprimitive {}\nfixed points {:?}",
                g.degree(),
                g.order(),
                g.orbits().iter().map(|o| format!("{:?}", one_based(o))).collect::<Vec<_>>().join(" "),
                primitive.map_or("n/a".to_string(), |p| p.to_string()),
                one_based(&fixed),
            );
            emit(out, cli, value, text)?;
            Ok(EXIT_OK)
        }
        Command::RegularSet { input, min, max, randomized } => {
            let g = load(input)?;
            let lo = min.unwrap_or(0);
            let hi = max.unwrap_or(g.degree());
            let mode = if *randomized { SearchMode::Randomized { seed: cli.seed } } else { SearchMode::Exhaustive };
            let budget = cli.budget.unwrap_or(10_000_000);
            let outcome = symmetry::find_regular_set(&g, lo..=hi, mode, budget);
            let seed = if *randomized { Some(cli.seed) } else { None };
            let (value, text, code) = match &outcome {
                SearchOutcome::Found(r) => (
                    json!({"result": "found", "set": set_json(&r.set), "seed": seed, "budget": budget}),
                    format!("regular set {:?}", one_based(&r.set)),
                    EXIT_OK,
                ),
                SearchOutcome::NoneExists => (
                    json!({"result": "none", "seed": seed, "budget": budget}),
                    format!("no regular set with size in {lo}..={hi}"),
                    EXIT_OK,
                ),
                SearchOutcome::Exhausted { tested } => (
                    json!({"result": "inconclusive", "tested": tested, "seed": seed, "budget": budget}),
                    format!("inconclusive: {tested} sets tested without a hit"),
                    EXIT_INCONCLUSIVE,
                ),
            };
            emit(out, cli, value, text)?;
            Ok(code)
        }
        Command::Distinguishing { input, k_max } => {
            let g = load(input)?;
            let budget = cli.budget.unwrap_or(catalog::verify::DISTINGUISHING_BUDGET);
            let result = symmetry::distinguishing_number(&g, *k_max, budget);
            let (value, text, code) = match &result {
                Distinguishing::Exact { value, witness } => (
                    json!({"result": "exact", "value": value, "witness": witness.labels(), "budget": budget}),
                    format!("{value}"),
                    EXIT_OK,
                ),
                Distinguishing::AboveLimit { k_max } => (
                    json!({"result": "above_limit", "k_max": k_max, "budget": budget}),
                    format!("more than {k_max}"),
                    EXIT_OK,
                ),
                Distinguishing::Inconclusive { lower_bound, budget } => (
                    json!({"result": "inconclusive", "lower_bound": lower_bound, "budget": budget}),
                    format!("inconclusive: at least {lower_bound}"),
                    EXIT_INCONCLUSIVE,
                ),
            };
            emit(out, cli, value, text)?;
            Ok(code)
        }
        Command::Orbitals { input, ordered, list } => {
            let g = load(input)?;
            if g.degree() < 2 {
                return Err(Error::Spec("orbitals need degree at least 2".into()));
            }
            let classes = symmetry::orbitals(&g, *ordered);
            let shown: Vec<Vec<(usize, usize)>> =
                classes.iter().map(|c| c.iter().map(|&(x, y)| (x + 1, y + 1)).collect()).collect();
            let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
            let value = if *list {
                json!({"ordered": ordered, "count": classes.len(), "classes": shown})
            } else {
                json!({"ordered": ordered, "count": classes.len(), "sizes": sizes})
            };
            let mut text = format!("{} orbitals, sizes {sizes:?}", classes.len());
            if *list {
                for c in &shown {
                    text.push_str(&format!("\n{c:?}"));
                }
            }
            emit(out, cli, value, text)?;
            Ok(EXIT_OK)
        }
        Command::Sum(input) => {
            let g = load(input)?;
            let gens: Vec<String> = g.generators().iter().map(|p| p.render_cycles()).collect();
            let spec = GroupSpec { degree: Some(g.degree()), generators: gens, name: None, prime_offset: None, sum: None };
            let value = serde_json::to_value(&spec).unwrap();
            let text = format!("{}\norder {}", serde_json::to_string(&spec).unwrap(), g.order());
            emit(out, cli, value, text)?;
            Ok(EXIT_OK)
        }
        Command::Decompose { input, block } => {
            let g = load(input)?;
            let x1 = match block {
                Some(text) => parse_point_set(text, None, g.degree())?,
                None => g.orbits().into_iter().next().unwrap_or_default(),
            };
            let x2: Vec<usize> = (0..g.degree()).filter(|x| !x1.contains(x)).collect();
            let d = sums::decompose(&g, &x1, &x2)?;
            let rebuilt = d.reconstruct()?;
            let roundtrip = rebuilt.same_group(&g);
            let value = json!({
                "blocks": [set_json(&d.block_split.0), set_json(&d.block_split.1)],
                "constituent_orders": [d.constituents.0.order().to_string(), d.constituents.1.order().to_string()],
                "kernel_orders": [d.kernels.0.order().to_string(), d.kernels.1.order().to_string()],
                "parallel": d.is_parallel(),
                "reconstructs": roundtrip,
            });
            let text = format!(
                "blocks {:?} | {:?}\nconstituents of order {}, {}\nkernels of order {}, {}\nparallel sum: {}\nreconstruction equals the group: {roundtrip}",
                one_based(&d.block_split.0),
                one_based(&d.block_split.1),
                d.constituents.0.order(),
                d.constituents.1.order(),
                d.kernels.0.order(),
                d.kernels.1.order(),
                d.is_parallel(),
            );
            emit(out, cli, value, text)?;
            Ok(if roundtrip { EXIT_OK } else { EXIT_FAIL })
        }
        Command::VerifyPaper { table, lemma, theorem, effort } => {
            let effort: Effort = effort.parse()?;
            let all = table.is_empty() && lemma.is_empty() && !theorem;
            let mut reports: Vec<VerificationReport> = Vec::new();
            let tables: Vec<&str> = if all { vec!["1", "1b", "2"] } else { table.iter().map(String::as_str).collect() };
            for t in tables {
                let sweep = match t {
                    "1" => Sweep::Doubled,
                    "1b" => Sweep::Twisted,
                    _ => Sweep::Mixed,
                };
                reports.extend(verify_sweep(sweep, effort));
            }
            let lemmas: Vec<&str> = if all { vec!["3.2", "3.3"] } else { lemma.iter().map(String::as_str).collect() };
            for l in lemmas {
                match l {
                    "3.2" => reports.extend(verify_alternating_formula()),
                    _ => reports.extend(verify_sweep(Sweep::AlternatingTwist, effort)),
                }
            }
            if all || *theorem {
                reports.extend(verify_exceptions(effort));
                reports.push(verify_orbitals());
            }
            let worst = reports.iter().map(|r| r.overall()).max().unwrap_or(Status::Pass);
            if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&reports).unwrap()).map_err(|e| Error::Spec(e.to_string()))?;
            } else {
                for r in &reports {
                    let _ = writeln!(out, "{:<14} {:<20} {:>8.2}s", r.overall().to_string(), r.id, r.elapsed.as_secs_f64());
                    for c in r.checks.iter().filter(|c| c.status != Status::Pass) {
                        let _ = writeln!(out, "    {} {}: {}", c.status, c.name, c.details);
                    }
                }
                let passed = reports.iter().filter(|r| r.passed()).count();
                let _ = writeln!(out, "{passed}/{} reports pass", reports.len());
            }
            Ok(match worst {
                Status::Pass => EXIT_OK,
                Status::Inconclusive => EXIT_INCONCLUSIVE,
                Status::Fail => EXIT_FAIL,
            })
        }
        Command::Catalog { action: CatalogAction::List } => {
            let entries = catalog::catalog().entries();
            let value = json!(entries
                .iter()
                .map(|e| json!({
                    "id": e.id, "name": e.name, "sweep": e.sweep, "group": e.group,
                    "claims": e.claims, "repairs": e.repairs
                }))
                .collect::<Vec<_>>());
            let mut text = String::new();
            for e in entries {
                let d = e.claims.d.map_or("-".to_string(), |d| d.to_string());
                text.push_str(&format!("{:<8} {:<20} order {:<10} D {d}  {}\n", e.sweep.label(), e.id, e.claims.order, e.name));
            }
            emit(out, cli, value, text.trim_end().to_string())?;
            Ok(EXIT_OK)
        }
    }
}
