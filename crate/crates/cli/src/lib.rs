//! Command-line surface over the `chipfire` library.
//!
//! [`run`] takes the argument list and output streams and returns the exit
//! status: 0 on success, 1 when a check fails or a computation hits a cap,
//! 2 on malformed arguments or input files.

use std::collections::BTreeSet;
use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;

use chipfire::builder::{
    brute_force_move_order, build_config_poset, move_poset_from, verify_join_theorem_on, ConfigPoset,
    JoinTheoremReport, DEFAULT_SEQ_CAP, DEFAULT_STATE_CAP,
};
use chipfire::emit::{emit_poset, Format};
use chipfire::firing::{stabilize, ChipConfig, FiringPolicy, FiringSystem, DEFAULT_STEP_CAP};
use chipfire::line;
use chipfire::notation::{config_label, parse_config, parse_graph};
use chipfire::order::{self, UldOrientation};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "chipfire", version, about = "Chip-firing games and their posets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Fire until stable; print the final configuration and odometer.
    Stabilize {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Policy::Lowest)]
        policy: Policy,
        /// Seed for `--policy random`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_STEP_CAP)]
        step_cap: u64,
    },
    /// Emit the poset of reachable configurations.
    ConfigPoset {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        build: BuildOpts,
    },
    /// Emit the poset of firing moves.
    MovePoset {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        build: BuildOpts,
        /// Also derive the order from every complete firing sequence and
        /// compare.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = DEFAULT_SEQ_CAP)]
        seq_cap: usize,
    },
    /// List the join-irreducible configurations.
    JoinIrreducibles {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
        state_cap: usize,
    },
    /// Structural checks on the configuration poset.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        lattice: bool,
        #[arg(long)]
        distributive: bool,
        #[arg(long)]
        uld: bool,
        /// Check local distributivity along upper rather than lower covers.
        #[arg(long, requires = "uld")]
        upper_covers: bool,
        #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
        state_cap: usize,
    },
    /// Verify a structural theorem and print a report.
    #[command(subcommand)]
    Verify(Verify),
    /// Recompute published line examples.
    #[command(subcommand)]
    Repro(Repro),
    /// Labeled chip-firing from n labeled chips at the origin.
    LabeledRun {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
enum Verify {
    /// Join-irreducible configurations correspond to firing moves.
    JoinTheorem {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
        state_cap: usize,
    },
    /// Lattice checks for the line endgame, for each m up to --m-max.
    Endgame {
        #[arg(long)]
        m_max: u64,
    },
}

#[derive(Debug, Subcommand)]
enum Repro {
    /// Distributivity failure for n chips at the origin (n = 5 or 8).
    Counterexample {
        #[arg(long)]
        n: u64,
    },
    /// Linear extensions of the move poset that are not firing sequences.
    InvalidExtension {
        #[arg(long)]
        n: u64,
    },
}

#[derive(Debug, Args)]
struct Input {
    #[command(flatten)]
    system: SystemChoice,
    /// Initial configuration: sparse "site:count ..." or compact "10_3_01".
    #[arg(long)]
    config: String,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct SystemChoice {
    /// Fire on the integer line.
    #[arg(long)]
    line: bool,
    /// Fire on the multigraph described in FILE.
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BuildOpts {
    #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
    state_cap: usize,
    #[arg(long, value_parser = parse_format, default_value = "text")]
    format: Format,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Policy {
    Lowest,
    Highest,
    Random,
}

/// Why a command did not succeed.
enum Failure {
    /// Bad input text or file.
    Usage(String),
    /// A computation error such as an exceeded cap.
    Runtime(String),
    /// The command ran and its check came out false.
    Verification,
}

impl Failure {
    fn runtime(e: impl Display) -> Self {
        Failure::Runtime(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// Runs the CLI on `args` (including the program name) and returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let mut buf = String::new();
    let result = dispatch(cli.command, &mut buf);
    let _ = out.write_all(buf.as_bytes());
    match result {
        Ok(()) => 0,
        Err(Failure::Verification) => 1,
        Err(Failure::Runtime(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn load(input: &Input) -> Result<(FiringSystem, ChipConfig), Failure> {
    let system = match &input.system.graph {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            let g = parse_graph(&text).map_err(|e| Failure::Usage(format!("{}:{e}", path.display())))?;
            FiringSystem::Graph(g)
        }
        None => FiringSystem::Line,
    };
    let cfg = parse_config(&input.config, &system).map_err(|e| Failure::Usage(format!("--config: {e}")))?;
    Ok((system, cfg))
}

fn build(input: &Input, state_cap: usize) -> Result<ConfigPoset, Failure> {
    let (system, cfg) = load(input)?;
    build_config_poset(&system, &cfg, state_cap).map_err(Failure::runtime)
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn comment(format: Format) -> &'static str {
    match format {
        Format::Text => "#",
        Format::Dot => "//",
        Format::Tikz => "%",
    }
}

fn dispatch(command: Command, out: &mut String) -> Outcome {
    use std::fmt::Write as _;
    match command {
        Command::Stabilize {
            input,
            policy,
            seed,
            step_cap,
        } => {
            let (system, cfg) = load(&input)?;
            let policy = match policy {
                Policy::Lowest => FiringPolicy::LowestFirst,
                Policy::Highest => FiringPolicy::HighestFirst,
                Policy::Random => FiringPolicy::Random(seed),
            };
            let s = stabilize(&system, &cfg, policy, step_cap).map_err(Failure::runtime)?;
            writeln!(out, "final: {}", config_label(&system, &s.config)).unwrap();
            writeln!(out, "odometer: {}", s.odometer).unwrap();
            writeln!(out, "fires: {}", s.sequence.len()).unwrap();
            Ok(())
        }
        Command::ConfigPoset { input, build: opts } => {
            let configs = build(&input, opts.state_cap)?;
            let system = configs.system().clone();
            let p = configs.poset();
            writeln!(
                out,
                "{} configurations: {}, covers: {}",
                comment(opts.format),
                p.len(),
                p.cover_count()
            )
            .unwrap();
            out.push_str(&emit_poset(p, opts.format, |c| config_label(&system, c)));
            Ok(())
        }
        Command::MovePoset {
            input,
            build: opts,
            oracle,
            seq_cap,
        } => {
            let configs = build(&input, opts.state_cap)?;
            let moves = move_poset_from(&configs).map_err(Failure::runtime)?;
            let p = moves.poset();
            writeln!(
                out,
                "{} moves: {}, covers: {}",
                comment(opts.format),
                p.len(),
                p.cover_count()
            )
            .unwrap();
            out.push_str(&emit_poset(p, opts.format, |m| m.to_string()));
            if oracle {
                let root = configs.config(configs.root());
                let brute =
                    brute_force_move_order(configs.system(), root, seq_cap).map_err(Failure::runtime)?;
                let covers = |q: &order::FinitePoset<chipfire::firing::FiringMove>| -> BTreeSet<_> {
                    q.covers()
                        .into_iter()
                        .map(|(u, l)| (*q.label(u), *q.label(l)))
                        .collect()
                };
                let ours: BTreeSet<_> = p.labels().iter().copied().collect();
                let theirs: BTreeSet<_> = brute.labels().iter().copied().collect();
                let agree = ours == theirs && covers(p) == covers(&brute);
                writeln!(
                    out,
                    "{} oracle: {}",
                    comment(opts.format),
                    if agree { "agrees" } else { "DISAGREES" }
                )
                .unwrap();
                return verdict(agree);
            }
            Ok(())
        }
        Command::JoinIrreducibles { input, state_cap } => {
            let configs = build(&input, state_cap)?;
            let system = configs.system();
            let p = configs.poset();
            let mut irr = order::join_irreducibles(p).map_err(Failure::runtime)?;
            let depth = p.depths();
            let labels: Vec<String> = p.labels().iter().map(|c| config_label(system, c)).collect();
            irr.sort_by(|&a, &b| (depth[a], &labels[a]).cmp(&(depth[b], &labels[b])));
            writeln!(out, "join-irreducibles: {} of {}", irr.len(), p.len()).unwrap();
            for x in irr {
                let fired = configs.move_vector(x);
                let avail = chipfire::firing::available_sites(system, p.label(x));
                let mv = avail
                    .first()
                    .map(|&s| format!("{}^{}", s, fired.get(s) + 1))
                    .unwrap_or_default();
                writeln!(out, "{}  only move {}", labels[x], mv).unwrap();
            }
            Ok(())
        }
        Command::Check {
            input,
            lattice,
            distributive,
            uld,
            upper_covers,
            state_cap,
        } => {
            if !(lattice || distributive || uld) {
                return Err(Failure::Usage(
                    "check needs --lattice, --distributive or --uld".into(),
                ));
            }
            let configs = build(&input, state_cap)?;
            let system = configs.system();
            let p = configs.poset();
            let name = |x: usize| config_label(system, p.label(x));
            let mut ok = true;
            if lattice {
                let v = order::is_lattice(p);
                writeln!(out, "lattice: {}", v.holds).unwrap();
                if let Some((x, y)) = v.witness {
                    writeln!(
                        out,
                        "  witness: {} and {} have no meet or no join",
                        name(x),
                        name(y)
                    )
                    .unwrap();
                }
                ok &= v.holds;
            }
            if distributive {
                let v = order::is_distributive(p).map_err(Failure::runtime)?;
                writeln!(out, "distributive: {}", v.holds).unwrap();
                if let Some((x, y, z)) = v.witness {
                    writeln!(
                        out,
                        "  witness: x = {}, y = {}, z = {}",
                        name(x),
                        name(y),
                        name(z)
                    )
                    .unwrap();
                }
                ok &= v.holds;
            }
            if uld {
                let orientation = if upper_covers {
                    UldOrientation::UpperCovers
                } else {
                    UldOrientation::LowerCovers
                };
                let v = order::is_uld(p, orientation).map_err(Failure::runtime)?;
                writeln!(out, "uld: {}", v.holds).unwrap();
                if let Some(x) = v.witness {
                    writeln!(out, "  witness: {}", name(x)).unwrap();
                }
                ok &= v.holds;
            }
            verdict(ok)
        }
        Command::Verify(Verify::JoinTheorem { input, state_cap }) => {
            let configs = build(&input, state_cap)?;
            let report = verify_join_theorem_on(&configs).map_err(Failure::runtime)?;
            write_join_report(out, &report);
            verdict(report.passed())
        }
        Command::Verify(Verify::Endgame { m_max }) => {
            let reports = line::verify_endgame_lattice(m_max).map_err(Failure::runtime)?;
            let mut ok = true;
            for r in &reports {
                writeln!(out, "{r}").unwrap();
                ok &= r.passed();
            }
            writeln!(out, "endgame: {}", if ok { "pass" } else { "FAIL" }).unwrap();
            verdict(ok)
        }
        Command::Repro(Repro::Counterexample { n }) => {
            let t = line::reproduce_counterexample(n).map_err(|e| match e {
                line::LineError::UnsupportedN(_) => Failure::Usage(e.to_string()),
                e => Failure::runtime(e),
            })?;
            writeln!(out, "{t}").unwrap();
            verdict(t.rows_match() && t.is_counterexample())
        }
        Command::Repro(Repro::InvalidExtension { n }) => {
            let t = line::invalid_extension_demo(n).map_err(Failure::runtime)?;
            writeln!(out, "{t}").unwrap();
            Ok(())
        }
        Command::LabeledRun { n, seed } => {
            let run = line::labeled_fire_run(n, seed).map_err(|e| match e {
                line::LineError::OddN(_) | line::LineError::NoChips => Failure::Usage(e.to_string()),
                e => Failure::runtime(e),
            })?;
            writeln!(out, "final: {}", run.config).unwrap();
            writeln!(out, "fires: {}", run.sites.len()).unwrap();
            writeln!(out, "sorted: {}", run.config.is_sorted()).unwrap();
            verdict(run.config.is_sorted())
        }
    }
}

fn write_join_report(out: &mut String, r: &JoinTheoremReport) {
    use std::fmt::Write as _;
    writeln!(out, "configurations: {}", r.config_count).unwrap();
    writeln!(out, "join-irreducibles: {}", r.join_irreducible_count).unwrap();
    writeln!(out, "moves: {}", r.move_count).unwrap();
    writeln!(out, "lattice: {}", r.is_lattice).unwrap();
    writeln!(out, "only-move configurations match: {}", r.only_move_match).unwrap();
    writeln!(out, "bijective: {}", r.bijective).unwrap();
    writeln!(out, "order isomorphic: {}", r.order_isomorphic).unwrap();
    for p in &r.problems {
        writeln!(out, "  problem: {p}").unwrap();
    }
    writeln!(out, "join theorem: {}", if r.passed() { "pass" } else { "FAIL" }).unwrap();
}
