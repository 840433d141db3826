//! Command-line front end: load or generate categories, enumerate s-torsion
//! pairs, emit DOT diagrams and JSON reports, and expose the bundled
//! datasets.
//!
//! Exit codes: 0 = success/verified, 1 = verification failure or lint
//! violations, 2 = usage or parse errors.

use std::path::PathBuf;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};

use storsion::{
    dataset, dataset_spec_text, enumerate_stors, gen_typea, heart_of, is_storsion,
    succ_interval_iso, verify_main_theorem_in, verify_succ_bijection, Check, FiniteExtCat,
    NegExtMode, Orientation, Quiver, StorsPoset, VerifyReport, DATASET_NAMES,
};

#[derive(Parser)]
#[command(
    name = "storsion",
    about = "s-torsion pairs in finite extriangulated categories with negative first extensions",
    version
)]
struct Cli {
    /// Size of the worker thread pool for enumeration (default: all cores)
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Load a category spec and validate its structure
    Validate(SourceArgs),
    /// Check the dimension inequalities implied by the long exact sequences
    Lint {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate the s-torsion pairs of a category
    Stors {
        #[command(flatten)]
        source: SourceArgs,
        /// Print only the number of pairs
        #[arg(long)]
        count: bool,
        #[arg(long)]
        json: bool,
    },
    /// Covering relations of the s-torsion poset
    Hasse {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// The heart of an interval of s-torsion pairs
    Heart {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        interval: IntervalArgs,
        #[arg(long)]
        json: bool,
        /// Emit the s-torsion poset of the heart as DOT
        #[arg(long)]
        dot: bool,
    },
    /// Map a pair of the interval into the heart
    Phi {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        interval: IntervalArgs,
        /// Torsion-class members of the pair to map
        #[arg(long, value_name = "MEMBERS")]
        t: String,
    },
    /// Map an s-torsion pair of the heart back into the interval
    Psi {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        interval: IntervalArgs,
        /// Torsion-class members (heart names) of the heart pair to map back
        #[arg(long, value_name = "MEMBERS")]
        x: String,
    },
    /// Verify the interval/heart correspondence; emits a JSON report
    VerifyTheorem {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_name = "MEMBERS")]
        t1: Option<String>,
        #[arg(long, value_name = "MEMBERS")]
        t2: Option<String>,
        /// Check every interval of the poset
        #[arg(long, conflicts_with_all = ["t1", "t2"])]
        all_intervals: bool,
    },
    /// Verify the successor-closed parametrization of s-torsion pairs
    VerifySucc {
        /// Orientation string of the type-A quiver, e.g. "1>2<3<4"
        #[arg(long = "gen-typea", value_name = "ORIENT")]
        gen_typea: String,
    },
    /// Emit the category of a type-A path algebra as a spec file
    GenTypea {
        /// Orientation string, e.g. "1>2<3<4" or "R L L"
        orient: String,
        #[arg(long, default_value = "ext1")]
        mode: String,
    },
    /// Successor-closed subsets of an acyclic quiver
    Succ {
        #[arg(long, value_name = "FILE")]
        quiver: PathBuf,
        #[arg(long)]
        count: bool,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// The combinatorial interval isomorphism for nested successor-closed sets
    SuccInterval {
        #[arg(long, value_name = "FILE")]
        quiver: PathBuf,
        /// Members of the smaller set, separated by spaces or semicolons
        #[arg(long, value_name = "MEMBERS")]
        i1: String,
        /// Members of the larger set
        #[arg(long, value_name = "MEMBERS")]
        i2: String,
        #[arg(long)]
        json: bool,
    },
    /// List the bundled datasets, or print one as a spec file
    Datasets { name: Option<String> },
}

#[derive(Args)]
struct SourceArgs {
    /// Path to a category spec file
    #[arg(long, value_name = "FILE")]
    cat: Option<PathBuf>,
    /// Generate a type-A category from an orientation string
    #[arg(long = "gen-typea", value_name = "ORIENT")]
    gen_typea: Option<String>,
    /// Load a bundled dataset
    #[arg(long, value_name = "NAME")]
    dataset: Option<String>,
    /// Negative-extension mode for --gen-typea: zero or ext1
    #[arg(long, default_value = "ext1")]
    mode: String,
}

impl SourceArgs {
    fn load(&self) -> anyhow::Result<FiniteExtCat> {
        let picked = u8::from(self.cat.is_some())
            + u8::from(self.gen_typea.is_some())
            + u8::from(self.dataset.is_some());
        if picked != 1 {
            bail!("exactly one of --cat, --gen-typea, --dataset must be given");
        }
        if let Some(path) = &self.cat {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            return Ok(FiniteExtCat::from_spec_str(&text)?);
        }
        if let Some(orient) = &self.gen_typea {
            let orient: Orientation = orient.parse()?;
            let mode: NegExtMode = self.mode.parse()?;
            return Ok(gen_typea(&orient, mode));
        }
        Ok(dataset(self.dataset.as_deref().unwrap())?)
    }
}

#[derive(Args)]
struct IntervalArgs {
    /// Torsion-class members of the lower pair, separated by spaces or semicolons
    #[arg(long, value_name = "MEMBERS")]
    t1: String,
    /// Torsion-class members of the upper pair
    #[arg(long, value_name = "MEMBERS")]
    t2: String,
}

/// Member lists on the command line: names separated by spaces or semicolons
/// (commas appear inside interval-module names, so they do not separate).
fn parse_members(selector: &str) -> Vec<&str> {
    selector
        .split([';', ' '])
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect()
}

fn find_pair(cat: &FiniteExtCat, poset: &StorsPoset, selector: &str) -> anyhow::Result<usize> {
    poset
        .find_by_members(cat, parse_members(selector))?
        .ok_or_else(|| anyhow!("no enumerated s-torsion pair has torsion class {{{selector}}}"))
}

fn pair_line(cat: &FiniteExtCat, pair: &storsion::STorsPair) -> String {
    format!(
        "T={{{}}} F={{{}}}",
        cat.member_names(&pair.torsion).join(","),
        cat.member_names(&pair.free).join(",")
    )
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    match cli.command {
        Command::Validate(source) => {
            let cat = source.load()?;
            let rows: usize = (0..cat.len()).map(|m| cat.conf_rows(m).len()).sum();
            println!(
                "ok: {}: {} indecomposables, {} conflation rows{}",
                if cat.label().is_empty() {
                    "(unlabeled)"
                } else {
                    cat.label()
                },
                cat.len(),
                rows,
                if cat.has_shift() { ", shift data" } else { "" }
            );
            Ok(0)
        }
        Command::Lint { source, json } => {
            let cat = source.load()?;
            let violations = cat.validate_lints();
            if json {
                println!("{}", serde_json::to_string_pretty(&violations)?);
            } else if violations.is_empty() {
                println!("no lint violations");
            } else {
                for v in &violations {
                    println!("{v}");
                }
                println!("{} violation(s)", violations.len());
            }
            Ok(if violations.is_empty() { 0 } else { 1 })
        }
        Command::Stors {
            source,
            count,
            json,
        } => {
            let cat = source.load()?;
            let poset = enumerate_stors(&cat)?;
            if count {
                println!("{}", poset.len());
            } else if json {
                print!("{}", poset.to_json_string(&cat));
            } else {
                for pair in &poset.pairs {
                    println!("{}", pair_line(&cat, pair));
                }
            }
            Ok(0)
        }
        Command::Hasse { source, dot, json } => {
            let cat = source.load()?;
            let poset = enumerate_stors(&cat)?;
            if dot {
                print!("{}", poset.to_dot(&cat));
            } else if json {
                print!("{}", poset.to_json_string(&cat));
            } else {
                for &(upper, lower) in &poset.hasse_edges {
                    println!(
                        "{} -> {}",
                        poset.label(&cat, upper),
                        poset.label(&cat, lower)
                    );
                }
            }
            Ok(0)
        }
        Command::Heart {
            source,
            interval,
            json,
            dot,
        } => {
            let cat = source.load()?;
            let poset = enumerate_stors(&cat)?;
            let i1 = find_pair(&cat, &poset, &interval.t1)?;
            let i2 = find_pair(&cat, &poset, &interval.t2)?;
            let iv = heart_of(&cat, &poset.pairs[i1], &poset.pairs[i2])?;
            let heart_poset = enumerate_stors(&iv.heart_cat)?;
            if dot {
                print!("{}", heart_poset.to_dot(&iv.heart_cat));
            } else if json {
                let value = serde_json::json!({
                    "heart": cat.member_names(&iv.heart),
                    "pairs_in_heart": heart_poset.len(),
                });
                println!("{}", serde_json::to_string_pretty(&value)?);
            } else {
                println!("heart = {{{}}}", cat.member_names(&iv.heart).join(","));
                println!("s-torsion pairs in the heart: {}", heart_poset.len());
            }
            Ok(0)
        }
        Command::Phi {
            source,
            interval,
            t,
        } => {
            let cat = source.load()?;
            let poset = enumerate_stors(&cat)?;
            let i1 = find_pair(&cat, &poset, &interval.t1)?;
            let i2 = find_pair(&cat, &poset, &interval.t2)?;
            let k = find_pair(&cat, &poset, &t)?;
            let iv = heart_of(&cat, &poset.pairs[i1], &poset.pairs[i2])?;
            let image = iv.phi(&poset.pairs[k])?;
            println!("{}", pair_line(&iv.heart_cat, &image));
            Ok(if image.flags.all() { 0 } else { 1 })
        }
        Command::Psi {
            source,
            interval,
            x,
        } => {
            let cat = source.load()?;
            let poset = enumerate_stors(&cat)?;
            let i1 = find_pair(&cat, &poset, &interval.t1)?;
            let i2 = find_pair(&cat, &poset, &interval.t2)?;
            let iv = heart_of(&cat, &poset.pairs[i1], &poset.pairs[i2])?;
            let torsion = iv.heart_cat.subcat(parse_members(&x))?;
            let heart_pair = is_storsion(&iv.heart_cat, torsion, iv.heart_cat.right_perp(&torsion));
            let back = iv.psi(&cat, &heart_pair)?;
            println!("{}", pair_line(&cat, &back));
            Ok(if back.flags.all() { 0 } else { 1 })
        }
        Command::VerifyTheorem {
            source,
            t1,
            t2,
            all_intervals,
        } => {
            let cat = source.load()?;
            let poset = enumerate_stors(&cat)?;
            let report = if all_intervals {
                let mut aggregate = VerifyReport::new();
                let mut checked = 0usize;
                let mut all_ok = true;
                for i in 0..poset.len() {
                    for j in 0..poset.len() {
                        if !poset.leq(i, j) {
                            continue;
                        }
                        checked += 1;
                        let report = verify_main_theorem_in(&cat, &poset, i, j)?;
                        if !report.passed {
                            all_ok = false;
                            aggregate.witness(format!(
                                "[{}, {}]: {}",
                                poset.label(&cat, i),
                                poset.label(&cat, j),
                                report.counterexamples.join("; ")
                            ));
                        }
                    }
                }
                aggregate.checks.push(Check {
                    name: format!("all_intervals ({checked} checked)"),
                    passed: all_ok,
                });
                aggregate.passed = all_ok;
                aggregate
            } else {
                let (Some(t1), Some(t2)) = (&t1, &t2) else {
                    bail!("give --t1 and --t2, or --all-intervals");
                };
                let i1 = find_pair(&cat, &poset, t1)?;
                let i2 = find_pair(&cat, &poset, t2)?;
                verify_main_theorem_in(&cat, &poset, i1, i2)?
            };
            print!("{}", report.to_json_string());
            Ok(if report.passed { 0 } else { 1 })
        }
        Command::VerifySucc { gen_typea } => {
            let orient: Orientation = gen_typea.parse()?;
            let report = verify_succ_bijection(&orient)?;
            print!("{}", report.to_json_string());
            Ok(if report.passed { 0 } else { 1 })
        }
        Command::GenTypea { orient, mode } => {
            let orient: Orientation = orient.parse()?;
            let mode: NegExtMode = mode.parse()?;
            print!("{}", gen_typea(&orient, mode).to_spec_string());
            Ok(0)
        }
        Command::Succ {
            quiver,
            count,
            dot,
            json,
        } => {
            let text = std::fs::read_to_string(&quiver)
                .with_context(|| format!("reading {}", quiver.display()))?;
            let quiver = Quiver::from_json(&text)?;
            let lattice = quiver.enumerate_succ()?;
            if count {
                println!("{}", lattice.len());
            } else if dot {
                print!("{}", lattice.to_dot(&quiver));
            } else if json {
                let value = serde_json::json!({
                    "sets": lattice.sets.iter().map(|&m| quiver.member_names(m)).collect::<Vec<_>>(),
                    "hasse_edges": lattice.hasse_edges,
                });
                println!("{}", serde_json::to_string_pretty(&value)?);
            } else {
                for &mask in &lattice.sets {
                    println!("{{{}}}", quiver.member_names(mask).join(","));
                }
            }
            Ok(0)
        }
        Command::SuccInterval {
            quiver,
            i1,
            i2,
            json,
        } => {
            let text = std::fs::read_to_string(&quiver)
                .with_context(|| format!("reading {}", quiver.display()))?;
            let quiver = Quiver::from_json(&text)?;
            let m1 = quiver.vertex_set(parse_members(&i1))?;
            let m2 = quiver.vertex_set(parse_members(&i2))?;
            let iso = succ_interval_iso(&quiver, m1, m2)?;
            if json {
                let value = serde_json::json!({
                    "interval": iso.interval.iter().map(|&m| quiver.member_names(m)).collect::<Vec<_>>(),
                    "restricted": iso.restricted.sets.iter()
                        .map(|&m| iso.restricted_quiver.member_names(m)).collect::<Vec<_>>(),
                    "phi": iso.phi,
                    "psi": iso.psi,
                    "verified": iso.verified,
                });
                println!("{}", serde_json::to_string_pretty(&value)?);
            } else {
                for (k, &mask) in iso.interval.iter().enumerate() {
                    println!(
                        "{{{}}} -> {{{}}}",
                        quiver.member_names(mask).join(","),
                        iso.restricted_quiver
                            .member_names(iso.restricted.sets[iso.phi[k]])
                            .join(",")
                    );
                }
                println!("verified: {}", iso.verified);
            }
            Ok(if iso.verified { 0 } else { 1 })
        }
        Command::Datasets { name } => {
            match name {
                None => {
                    for name in DATASET_NAMES {
                        println!("{name}");
                    }
                }
                Some(name) => print!("{}", dataset_spec_text(&name)?),
            }
            Ok(0)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let pool = cli.jobs.map(|jobs| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("worker pool")
    });
    let outcome = match pool {
        Some(pool) => pool.install(|| run(cli)),
        None => run(cli),
    };
    match outcome {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(2);
        }
    }
}
