//! Command-line driver: validate, enumerate, stable, solve, reduce,
//! generate, and report subcommands over instance documents.
//!
//! Exit codes: 0 success (for `stable`/`solve`, a nonempty result), 1
//! operational error, 2 empty core, 3 node budget exceeded, 64 usage error.

pub mod report;

use std::io::{Read, Write};

use affmatch_core::{
    deferred_acceptance, enumerate_matchings, generate_market, parse_market, serialize_market,
    solve, stable_set_with_threads, AffiliationPattern, CutStrategy, GeneratorSpec,
    InstabilityCertificate, Market, Objective, OracleLimits, ProfileStrategy, SolveConfig,
    SolveStatus, StabilityNotion,
};
use clap::{Parser, Subcommand, ValueEnum};

use report::{
    matching_doc, render_text, to_json, BaseOrderDoc, BlockingPairDoc, CoalitionDoc,
    EnumerateReport, MatchingVerdict, ReduceReport, Report, SolveReport, StableReport,
    ValidateReport,
};

/// Environment variable overriding both exhaustive-search bounds.
pub const MAX_N_VAR: &str = "AFFMATCH_MAX_N";

const EXIT_OK: i32 = 0;
const EXIT_ERROR: i32 = 1;
const EXIT_EMPTY_CORE: i32 = 2;
const EXIT_BOUND_EXCEEDED: i32 = 3;
const EXIT_USAGE: i32 = 64;

#[derive(Parser)]
#[command(
    name = "affmatch",
    version,
    about = "Model, validate, analyze, and clear affiliate matching markets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum NotionArg {
    Greedy,
    Strict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate an instance document
    Validate {
        /// Instance file, or `-` for stdin
        file: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// List every perfect matching of the instance in canonical order
    Enumerate {
        file: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Classify every matching under a stability notion
    Stable {
        file: String,
        #[arg(long, value_enum)]
        notion: NotionArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Worker threads for the per-matching classification
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Optimize an objective over the greedily stable matchings
    Solve {
        file: String,
        /// feasibility | min_applicant_rank_sum | min_employer_rank_sum |
        /// max_top_choices | min_egalitarian_sum
        #[arg(long, default_value = "feasibility")]
        objective: String,
        /// nogood | nogood+conditional
        #[arg(long, default_value = "nogood")]
        cuts: String,
        #[arg(long, default_value_t = 10_000_000)]
        node_budget: u64,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Run deferred acceptance on a consistent instance
    Reduce {
        file: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Emit a seeded instance document
    Generate {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: usize,
        /// candidate_first | affiliate_first | weighted | uniform_random
        #[arg(long)]
        strategy: String,
        /// Blend weight for --strategy weighted, in [0, 1]
        #[arg(long)]
        lambda: Option<f64>,
        /// bijection | random_partial
        #[arg(long, default_value = "bijection")]
        affiliation: String,
        /// Affiliation probability for --affiliation random_partial
        #[arg(long)]
        density: Option<f64>,
    },
    /// Render a machine report as text
    Report { file: String },
}

enum Failure {
    Usage(String),
    Error(String),
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure::Usage(message.into())
    }

    fn error(message: impl std::fmt::Display) -> Failure {
        Failure::Error(message.to_string())
    }
}

type CmdResult = Result<(String, i32), Failure>;

/// Runs one invocation. `args` is the full argv including the program name;
/// reports and documents go to `stdout`, diagnostics to `stderr`.
pub fn run_cli(
    args: &[String],
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let rendered = err.render().to_string();
            return if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                let _ = write!(stdout, "{rendered}");
                EXIT_OK
            } else {
                let _ = write!(stderr, "{rendered}");
                EXIT_USAGE
            };
        }
    };
    let outcome = match cli.command {
        Command::Validate { file, format } => cmd_validate(&file, format, stdin),
        Command::Enumerate { file, format } => cmd_enumerate(&file, format, stdin),
        Command::Stable {
            file,
            notion,
            format,
            threads,
        } => cmd_stable(&file, notion, format, threads, stdin),
        Command::Solve {
            file,
            objective,
            cuts,
            node_budget,
            format,
        } => cmd_solve(&file, &objective, &cuts, node_budget, format, stdin),
        Command::Reduce { file, format } => cmd_reduce(&file, format, stdin),
        Command::Generate {
            seed,
            n,
            strategy,
            lambda,
            affiliation,
            density,
        } => cmd_generate(seed, n, &strategy, lambda, &affiliation, density),
        Command::Report { file } => cmd_report(&file, stdin),
    };
    match outcome {
        Ok((text, code)) => {
            let _ = write!(stdout, "{text}");
            code
        }
        Err(Failure::Usage(message)) => {
            let _ = writeln!(stderr, "error: {message}");
            let _ = writeln!(stderr, "run `affmatch --help` for usage");
            EXIT_USAGE
        }
        Err(Failure::Error(message)) => {
            let _ = writeln!(stderr, "error: {message}");
            EXIT_ERROR
        }
    }
}

fn read_input(file: &str, stdin: &mut dyn Read) -> Result<String, Failure> {
    if file == "-" {
        let mut text = String::new();
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Failure::error(format!("reading stdin: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(file).map_err(|e| Failure::error(format!("reading `{file}`: {e}")))
    }
}

fn load_market(file: &str, stdin: &mut dyn Read) -> Result<Market, Failure> {
    let text = read_input(file, stdin)?;
    let (market, _) = parse_market(&text).map_err(Failure::error)?;
    Ok(market)
}

/// Oracle bounds, with both ceilings overridden by `AFFMATCH_MAX_N` when
/// set.
fn limits_from_env() -> Result<OracleLimits, Failure> {
    match std::env::var(MAX_N_VAR) {
        Ok(text) => {
            let max_n: usize = text.parse().map_err(|_| {
                Failure::error(format!(
                    "{MAX_N_VAR} must be an unsigned integer, got `{text}`"
                ))
            })?;
            Ok(OracleLimits::with_max_n(max_n))
        }
        Err(_) => Ok(OracleLimits::default()),
    }
}

fn emit(report: Report, format: FormatArg, code: i32) -> CmdResult {
    let text = match format {
        FormatArg::Json => to_json(&report),
        FormatArg::Text => render_text(&report),
    };
    Ok((text, code))
}

fn cmd_validate(file: &str, format: FormatArg, stdin: &mut dyn Read) -> CmdResult {
    let market = load_market(file, stdin)?;
    let report = Report::Validate(ValidateReport {
        applicants: market.size(),
        employers: market.size(),
    });
    emit(report, format, EXIT_OK)
}

fn cmd_enumerate(file: &str, format: FormatArg, stdin: &mut dyn Read) -> CmdResult {
    let market = load_market(file, stdin)?;
    let limits = limits_from_env()?;
    let matchings = enumerate_matchings(market.size(), &limits).map_err(Failure::error)?;
    let report = Report::Enumerate(EnumerateReport {
        n: market.size(),
        count: matchings.len(),
        matchings: matchings.iter().map(|m| matching_doc(&market, m)).collect(),
    });
    emit(report, format, EXIT_OK)
}

fn cmd_stable(
    file: &str,
    notion: NotionArg,
    format: FormatArg,
    threads: usize,
    stdin: &mut dyn Read,
) -> CmdResult {
    if threads == 0 {
        return Err(Failure::usage("--threads must be at least 1"));
    }
    let market = load_market(file, stdin)?;
    let limits = limits_from_env()?;
    let notion = match notion {
        NotionArg::Greedy => StabilityNotion::Greedy,
        NotionArg::Strict => StabilityNotion::Strict,
    };
    let result =
        stable_set_with_threads(&market, notion, &limits, threads).map_err(Failure::error)?;
    let mut verdicts = Vec::with_capacity(result.classifications.len());
    for c in &result.classifications {
        let mut verdict = MatchingVerdict {
            matching: matching_doc(&market, &c.matching),
            stable: c.is_stable(),
            blocking_pairs: None,
            coalition: None,
        };
        match &c.certificate {
            None => {}
            Some(InstabilityCertificate::GreedyPairs(pairs)) => {
                verdict.blocking_pairs = Some(
                    pairs
                        .iter()
                        .map(|p| {
                            let mut witness_tuple =
                                vec![market.applicant_label(p.witness_tuple.hire).to_string()];
                            witness_tuple.extend(
                                p.witness_tuple
                                    .placements
                                    .iter()
                                    .map(|&g| market.employer_label(g).to_string()),
                            );
                            BlockingPairDoc {
                                applicant: market.applicant_label(p.applicant).to_string(),
                                employer: market.employer_label(p.employer).to_string(),
                                witness_tuple,
                                witness_matching: matching_doc(&market, &p.witness_matching),
                            }
                        })
                        .collect(),
                );
            }
            Some(InstabilityCertificate::Coalition(c)) => {
                verdict.coalition = Some(CoalitionDoc {
                    applicants: c
                        .applicants
                        .iter()
                        .map(|&a| market.applicant_label(a).to_string())
                        .collect(),
                    employers: c
                        .employers
                        .iter()
                        .map(|&e| market.employer_label(e).to_string())
                        .collect(),
                    witness: matching_doc(&market, &c.witness),
                });
            }
        }
        verdicts.push(verdict);
    }
    let core_empty = result.core_empty();
    let report = Report::Stable(StableReport {
        notion: notion.name().to_string(),
        n: market.size(),
        stable_count: result.stable_indices().len(),
        core_empty,
        matchings: verdicts,
    });
    let code = if core_empty { EXIT_EMPTY_CORE } else { EXIT_OK };
    emit(report, format, code)
}

fn cmd_solve(
    file: &str,
    objective: &str,
    cuts: &str,
    node_budget: u64,
    format: FormatArg,
    stdin: &mut dyn Read,
) -> CmdResult {
    let objective = Objective::parse(objective)
        .ok_or_else(|| Failure::usage(format!("unknown objective `{objective}`")))?;
    let cuts = CutStrategy::parse(cuts)
        .ok_or_else(|| Failure::usage(format!("unknown cut strategy `{cuts}`")))?;
    if node_budget == 0 {
        return Err(Failure::usage("--node-budget must be positive"));
    }
    let market = load_market(file, stdin)?;
    let config = SolveConfig { node_budget, cuts };
    let result = solve(&market, objective, &config).map_err(Failure::error)?;
    let (status, matching, score, code) = match result.status {
        SolveStatus::Stable { matching, score } => (
            "stable",
            Some(matching_doc(&market, &matching)),
            Some(score),
            EXIT_OK,
        ),
        SolveStatus::EmptyCore => ("empty_core", None, None, EXIT_EMPTY_CORE),
        SolveStatus::BoundExceeded => ("bound_exceeded", None, None, EXIT_BOUND_EXCEEDED),
        SolveStatus::Infeasible => ("infeasible", None, None, EXIT_ERROR),
    };
    let report = Report::Solve(SolveReport {
        objective: objective.name().to_string(),
        cuts: cuts.name().to_string(),
        node_budget,
        status: status.to_string(),
        matching,
        score,
        nodes_explored: result.stats.nodes_explored,
        cuts_added: result.stats.cuts_added,
    });
    emit(report, format, code)
}

fn cmd_reduce(file: &str, format: FormatArg, stdin: &mut dyn Read) -> CmdResult {
    let market = load_market(file, stdin)?;
    let matching = deferred_acceptance(&market).map_err(Failure::error)?;
    let base_orders = market
        .employers()
        .map(|e| BaseOrderDoc {
            employer: market.employer_label(e).to_string(),
            order: market
                .infer_consistency(e)
                .expect("profiles are consistent after deferred acceptance succeeded")
                .iter()
                .map(|&a| market.applicant_label(a).to_string())
                .collect(),
        })
        .collect();
    let report = Report::Reduce(ReduceReport {
        base_orders,
        matching: matching_doc(&market, &matching),
    });
    emit(report, format, EXIT_OK)
}

fn cmd_generate(
    seed: u64,
    n: usize,
    strategy: &str,
    lambda: Option<f64>,
    affiliation: &str,
    density: Option<f64>,
) -> CmdResult {
    let strategy = match (strategy, lambda) {
        ("candidate_first", None) => ProfileStrategy::CandidateFirst,
        ("affiliate_first", None) => ProfileStrategy::AffiliateFirst,
        ("uniform_random", None) => ProfileStrategy::UniformRandom,
        ("weighted", Some(lambda)) => ProfileStrategy::Weighted { lambda },
        ("weighted", None) => {
            return Err(Failure::usage("--strategy weighted requires --lambda"));
        }
        (other, Some(_)) if other != "weighted" => {
            return Err(Failure::usage(
                "--lambda only applies to --strategy weighted",
            ));
        }
        (other, _) => {
            return Err(Failure::usage(format!("unknown strategy `{other}`")));
        }
    };
    let affiliation = match (affiliation, density) {
        ("bijection", None) => AffiliationPattern::Bijection,
        ("bijection", Some(_)) => {
            return Err(Failure::usage(
                "--density only applies to --affiliation random_partial",
            ));
        }
        ("random_partial", Some(density)) => AffiliationPattern::RandomPartial { density },
        ("random_partial", None) => {
            return Err(Failure::usage(
                "--affiliation random_partial requires --density",
            ));
        }
        (other, _) => {
            return Err(Failure::usage(format!(
                "unknown affiliation pattern `{other}`"
            )));
        }
    };
    let spec = GeneratorSpec {
        seed,
        n,
        affiliation,
        strategy,
    };
    let market = generate_market(&spec).map_err(|e| Failure::usage(e.to_string()))?;
    Ok((serialize_market(&market, Some(&spec)), EXIT_OK))
}

fn cmd_report(file: &str, stdin: &mut dyn Read) -> CmdResult {
    let text = read_input(file, stdin)?;
    let report: Report =
        serde_json::from_str(&text).map_err(|e| Failure::error(format!("parsing report: {e}")))?;
    Ok((render_text(&report), EXIT_OK))
}
