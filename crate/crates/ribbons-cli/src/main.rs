//! Command-line front end for the ribbon Schur-support library.
//!
//! Exit codes: 0 success, 1 a sweep found a disagreement, 2 usage or input
//! error, 3 a sweep finished with timeouts but no disagreement.

mod sweep;

use std::collections::BTreeMap;
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use serde::Serialize;

use ribbons::{
    build_witness, contains_content, rmatrix_swap, satisfies_necessary, satisfies_sufficient,
    support, support_difference, support_oracle_with_limit, weak_necessary, JRecord, Partition,
    RibbonShape, SupportSet, Tableau, Weight, DEFAULT_ORACLE_LIMIT,
};

use sweep::SweepConfig;

#[derive(Parser)]
#[command(
    name = "ribbons",
    version,
    about = "Schur supports of ribbon diagrams: enumeration, row swaps, and classification conditions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Schur support of a ribbon as JSON.
    Support {
        /// Row lengths, top to bottom.
        #[arg(required = true)]
        rows: Vec<usize>,
        /// Use the independent monomial/Kostka oracle (small shapes only;
        /// the box limit can be overridden with RIBBON_ORACLE_LIMIT).
        #[arg(long)]
        oracle: bool,
    },
    /// Compare the supports of two ribbons: equal <ROWS_A>... -- <ROWS_B>...
    Equal {
        /// Row lengths of the first ribbon.
        #[arg(required = true)]
        rows_a: Vec<usize>,
        /// Row lengths of the second ribbon, after `--`.
        #[arg(last = true, required = true)]
        rows_b: Vec<usize>,
    },
    /// Decide whether the support survives every permutation of the rows.
    FullClass {
        /// Row lengths, top to bottom.
        #[arg(required = true)]
        rows: Vec<usize>,
    },
    /// Swap rows J and J+1 of a ribbon tableau with the R-matrix.
    Rmatrix {
        /// Tableau file: one line per row, dots for skipped inner boxes.
        file: PathBuf,
        /// Upper row of the pair to swap (1-based).
        j: usize,
    },
    /// Report the sufficient, necessary, and weak conditions for a ribbon.
    Conditions {
        /// Row lengths in any order; the report sorts them.
        #[arg(required = true)]
        rows: Vec<usize>,
    },
    /// Build the tableau separating a ribbon from its swap at cut J:
    /// witness <ROWS>... <J>
    Witness {
        /// Row lengths (sorted internally) followed by the cut point J.
        #[arg(required = true, num_args = 2..)]
        args: Vec<usize>,
    },
    /// Compare predicted and actual classification over a ribbon range,
    /// streaming one JSON record per ribbon.
    Sweep {
        /// Number of rows per ribbon (at least 3).
        #[arg(long)]
        rows: usize,
        /// Smallest total box count.
        #[arg(long = "min-n")]
        min_n: usize,
        /// Largest total box count.
        #[arg(long = "max-n")]
        max_n: usize,
        /// Per-ribbon time budget in seconds (fractions allowed).
        #[arg(long, default_value_t = 60.0)]
        budget: f64,
        /// JSON-lines record file; an existing file is resumed, completed
        /// ribbons are skipped.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            2
        }
    };
    std::process::exit(code);
}

fn run(command: Command) -> anyhow::Result<i32> {
    match command {
        Command::Support { rows, oracle } => {
            let shape = RibbonShape::from_rows(rows)?.to_skew();
            let set = if oracle {
                support_oracle_with_limit(&shape, oracle_limit()?)?
            } else {
                support(&shape)
            };
            println!("{}", serde_json::to_string(&set)?);
            Ok(0)
        }
        Command::Equal { rows_a, rows_b } => {
            let a = RibbonShape::from_rows(rows_a)?.to_skew();
            let b = RibbonShape::from_rows(rows_b)?.to_skew();
            let out = match support_difference(&a, &b) {
                None => EqualOut {
                    equal: true,
                    separating: None,
                    in_support_of: None,
                },
                Some((nu, in_a)) => EqualOut {
                    equal: false,
                    separating: Some(nu),
                    in_support_of: Some(if in_a { "a" } else { "b" }),
                },
            };
            println!("{}", serde_json::to_string(&out)?);
            Ok(0)
        }
        Command::FullClass { rows } => {
            let ribbon = RibbonShape::from_rows(rows)?;
            println!("{}", serde_json::to_string(&full_class_report(&ribbon))?);
            Ok(0)
        }
        Command::Rmatrix { file, j } => {
            let text = std::fs::read_to_string(&file)
                .with_context(|| format!("reading {}", file.display()))?;
            let tableau = Tableau::from_text(&text)?;
            print!("{}", rmatrix_swap(&tableau, j)?.to_text());
            Ok(0)
        }
        Command::Conditions { rows } => {
            let ribbon = RibbonShape::from_rows(rows)?;
            let report = satisfies_necessary(&ribbon)?;
            let out = ConditionsOut {
                ribbon: report.ribbon,
                per_j: report.per_j,
                overall: report.overall,
                sufficient: satisfies_sufficient(&ribbon)?,
                weak_necessary: weak_necessary(&ribbon),
            };
            println!("{}", serde_json::to_string(&out)?);
            Ok(0)
        }
        Command::Witness { args } => {
            let (j, rows) = args.split_last().expect("clap enforces two arguments");
            let ribbon = RibbonShape::from_rows(rows.to_vec())?.sorted_desc();
            let cert = build_witness(&ribbon, *j)?;
            let nu = cert
                .witness_content
                .to_partition()
                .expect("witness content is a partition");
            let out = WitnessOut {
                base_ribbon: &cert.base_ribbon,
                j: cert.j,
                swapped_shape: &cert.swapped_shape,
                witness_content: &cert.witness_content,
                witness_tableau: cert
                    .witness_tableau
                    .to_text()
                    .lines()
                    .map(str::to_owned)
                    .collect(),
                verified: VerifiedOut {
                    lr: cert.witness_tableau.is_littlewood_richardson(),
                    separates: !contains_content(&cert.base_ribbon.to_skew(), &nu)?,
                },
            };
            println!("{}", serde_json::to_string(&out)?);
            Ok(0)
        }
        Command::Sweep {
            rows,
            min_n,
            max_n,
            budget,
            out,
        } => {
            if rows < 3 {
                bail!("--rows must be at least 3");
            }
            if !(budget > 0.0 && budget.is_finite()) {
                bail!("--budget must be positive");
            }
            if min_n > max_n {
                bail!("--min-n must not exceed --max-n");
            }
            sweep::run(&SweepConfig {
                rows,
                min_n,
                max_n,
                budget: std::time::Duration::from_secs_f64(budget),
                out,
            })
        }
    }
}

fn oracle_limit() -> anyhow::Result<usize> {
    match std::env::var("RIBBON_ORACLE_LIMIT") {
        Ok(raw) => raw
            .parse()
            .with_context(|| format!("RIBBON_ORACLE_LIMIT must be an integer, got {raw:?}")),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_ORACLE_LIMIT),
        Err(e) => Err(e.into()),
    }
}

#[derive(Serialize)]
struct EqualOut {
    equal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    separating: Option<Partition>,
    #[serde(rename = "inSupportOf", skip_serializing_if = "Option::is_none")]
    in_support_of: Option<&'static str>,
}

#[derive(Serialize)]
struct ConditionsOut {
    ribbon: RibbonShape,
    #[serde(rename = "perJ")]
    per_j: Vec<JRecord>,
    overall: bool,
    sufficient: bool,
    #[serde(rename = "weakNecessary")]
    weak_necessary: bool,
}

#[derive(Serialize)]
struct WitnessOut<'a> {
    #[serde(rename = "baseRibbon")]
    base_ribbon: &'a RibbonShape,
    j: usize,
    #[serde(rename = "swappedShape")]
    swapped_shape: &'a RibbonShape,
    #[serde(rename = "witnessContent")]
    witness_content: &'a Weight,
    #[serde(rename = "witnessTableau")]
    witness_tableau: Vec<String>,
    verified: VerifiedOut,
}

#[derive(Serialize)]
struct VerifiedOut {
    lr: bool,
    separates: bool,
}

#[derive(Serialize)]
struct FullClassOut {
    ribbon: RibbonShape,
    #[serde(rename = "fullEquivalenceClass")]
    full_equivalence_class: bool,
    permutations: Vec<PermutationOut>,
}

#[derive(Serialize)]
struct PermutationOut {
    rows: RibbonShape,
    #[serde(rename = "supportSize")]
    support_size: usize,
    #[serde(rename = "equalsBase")]
    equals_base: bool,
}

/// Computes one support per antipodal pair (rotation preserves support) and
/// expands the summary over every distinct permutation.
fn full_class_report(ribbon: &RibbonShape) -> FullClassOut {
    let mut by_rep: BTreeMap<RibbonShape, SupportSet> = BTreeMap::new();
    let perms = ribbon.distinct_permutations();
    for perm in &perms {
        by_rep
            .entry(perm.antipodal_representative())
            .or_insert_with(|| support(&perm.to_skew()));
    }
    let base = &by_rep[&ribbon.antipodal_representative()];
    let permutations: Vec<PermutationOut> = perms
        .iter()
        .map(|perm| {
            let set = &by_rep[&perm.antipodal_representative()];
            PermutationOut {
                rows: perm.clone(),
                support_size: set.len(),
                equals_base: set == base,
            }
        })
        .collect();
    let full = permutations.iter().all(|p| p.equals_base);
    FullClassOut {
        ribbon: ribbon.clone(),
        full_equivalence_class: full,
        permutations,
    }
}
