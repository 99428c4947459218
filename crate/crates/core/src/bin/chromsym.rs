use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use chromsym::compute::{compute, What};
use chromsym::enumerate::{classify, enumerate_trees, enumerate_unicyclic, TreeClass};
use chromsym::graph::format::{parse_graph, to_graph6};
use chromsym::verify::selftest::{self, SelftestConfig};
use chromsym::verify::{
    find_collisions, verify_distinct, write_reports, CollisionClass, VerifyConfig, CSV_HEADER,
};
use chromsym::Error;

#[derive(Parser)]
#[command(name = "chromsym", version, about = "Chromatic symmetric functions of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenClass {
    Trees,
    Unicyclic,
    Spiders,
    TwoBranch,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhatArg {
    Csf,
    Invariants,
    Transform,
}

#[derive(Clone, Copy, ValueEnum)]
enum CollideClass {
    Unicyclic,
}

#[derive(Subcommand)]
enum Command {
    /// Print one graph6 line per graph in the class.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        class: GenClass,
    },
    /// Compute the CSF, tree invariants, or the F_T transform of one graph.
    Compute {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        what: WhatArg,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Check that all trees up to the given order have distinct CSFs.
    Verify {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// List non-isomorphic pairs with equal CSFs.
    Collide {
        #[arg(long, value_enum)]
        class: CollideClass,
        #[arg(long)]
        n: usize,
    },
    /// Run the identity suite.
    Selftest,
}

enum Failure {
    Check(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Lib(e.into())
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Gen { n, class } => match class {
            GenClass::Unicyclic => {
                for g in enumerate_unicyclic(n)? {
                    writeln!(out, "{}", to_graph6(&g)?)?;
                }
            }
            _ => {
                let want = match class {
                    GenClass::Spiders => Some(TreeClass::Spider),
                    GenClass::TwoBranch => Some(TreeClass::TwoBranch),
                    _ => None,
                };
                for t in enumerate_trees(n)? {
                    if want.is_none_or(|c| classify(&t) == c) {
                        writeln!(out, "{}", to_graph6(t.graph())?)?;
                    }
                }
            }
        },
        Command::Compute { input, what, json } => {
            let text = fs::read_to_string(&input)?;
            let g = parse_graph(&text)?;
            let what = match what {
                WhatArg::Csf => What::Csf,
                WhatArg::Invariants => What::Invariants,
                WhatArg::Transform => What::Transform,
            };
            let doc = serde_json::to_string_pretty(&compute(&g, what)?).expect("json") + "\n";
            match json {
                Some(path) => fs::write(path, doc)?,
                None => out.write_all(doc.as_bytes())?,
            }
        }
        Command::Verify { max_n, jobs, report } => {
            let reports = verify_distinct(&VerifyConfig { max_n, jobs })?;
            if let Some(dir) = report {
                write_reports(&dir, &reports)?;
            }
            writeln!(out, "{CSV_HEADER}")?;
            for r in &reports {
                writeln!(out, "{}", r.csv_row())?;
            }
            if let Some(r) = reports.iter().find(|r| !r.is_verified()) {
                return Err(Failure::Check(format!("collision among trees of order {}", r.order)));
            }
        }
        Command::Collide { class, n } => {
            let class = match class {
                CollideClass::Unicyclic => CollisionClass::Unicyclic,
            };
            let pairs: Vec<_> = find_collisions(class, n)?
                .into_iter()
                .map(|p| {
                    json!({
                        "left": p.left_graph6,
                        "right": p.right_graph6,
                        "csf": p.csf.to_canonical_string().lines().collect::<Vec<_>>(),
                    })
                })
                .collect();
            let doc = json!({ "n": n, "pairs": pairs });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
        }
        Command::Selftest => {
            let report = selftest::run(&SelftestConfig::default());
            for c in &report.checks {
                writeln!(out, "{}", c.summary_line())?;
            }
            if !report.passed() {
                return Err(Failure::Check("identity suite failed".into()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Capacity { .. } => 3,
                Error::Consistency(_) => 1,
                _ => 2,
            })
        }
    }
}
