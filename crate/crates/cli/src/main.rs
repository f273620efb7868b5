use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use obstruct_core::arith::Frac;
use obstruct_core::coding_bounds::{
    brute_force_code_oracle, cor_ak_sweep, griesmer_inequality, GriesmerQuery, SweepVariant,
};
use obstruct_core::groups::{enumerate_admissible, SpaceFormGroup};
use obstruct_core::linear_actions::build_sphere_action;
use obstruct_core::obstruction_engine::{apply_all, Flag, Hypotheses};
use obstruct_core::steenrod::{adem_normalize, identities, SteenrodWord};

mod checks;

#[derive(Parser)]
#[command(name = "obstruct", version, about = "Exact checks on space-form groups, Steenrod operations and symmetry-rank obstructions")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Metacyclic groups Γ(a,b,c).
    Groups {
        #[command(subcommand)]
        command: GroupsCommand,
    },
    /// Free linear sphere actions.
    Rep {
        #[command(subcommand)]
        command: RepCommand,
    },
    /// Mod-p Steenrod algebra.
    Steenrod {
        #[command(subcommand)]
        command: SteenrodCommand,
    },
    /// Griesmer-bound inequalities and small codes.
    Coding {
        #[command(subcommand)]
        command: CodingCommand,
    },
    /// Reproduce every finite check.
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
    /// Constraints on π₁ from dimension, symmetry rank and flags.
    Obstruct(ObstructArgs),
}

#[derive(Subcommand)]
enum GroupsCommand {
    Classify { a: u64, b: u64, c: u64 },
    Enumerate {
        #[arg(long)]
        a_max: u64,
        #[arg(long)]
        b_max: u64,
        #[arg(long)]
        d: Option<u64>,
    },
    SubgroupIndex { a: u64, b: u64, c: u64 },
}

#[derive(Subcommand)]
enum RepCommand {
    Build {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u64,
        /// Exhaustively certify that no nontrivial element fixes a vector.
        #[arg(long)]
        verify_free: bool,
        /// Check that the diagonal circle of the torus acts freely.
        #[arg(long)]
        verify_hopf: bool,
    },
}

#[derive(Subcommand)]
enum SteenrodCommand {
    Normalize {
        #[arg(long)]
        p: u64,
        word: String,
    },
    Identities {
        #[arg(long)]
        p: u64,
    },
}

#[derive(Subcommand)]
enum CodingCommand {
    Sweep {
        #[arg(long, default_value = "sqrt")]
        variant: String,
        #[arg(long, default_value_t = 9)]
        n_min: u64,
        #[arg(long, default_value_t = 101)]
        n_max: u64,
        #[arg(long)]
        only_1_mod_4: bool,
    },
    Griesmer {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        s: u64,
        #[arg(long, default_value_t = 1)]
        c: u64,
        #[arg(long)]
        j: u64,
    },
    Oracle {
        #[arg(long)]
        length: usize,
        #[arg(long)]
        dimension: usize,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    PaperChecks(checks::CheckArgs),
}

#[derive(clap::Args)]
struct ObstructArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    r: u64,
    #[arg(long)]
    rational_sphere: bool,
    #[arg(long)]
    integral_sphere: bool,
    #[arg(long)]
    no_fixed_point: bool,
    #[arg(long)]
    circle_only: bool,
    /// Parameter q of the CCS bound, as NUM or NUM/DEN.
    #[arg(long)]
    q: Option<String>,
}

enum Status {
    Ok,
    CheckFailed,
}

/// Bad input: exit status 2.
struct InputError(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.into())
    }
}

type CmdResult = Result<Status, InputError>;

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) {
    use std::io::Write;
    let body = match format {
        Format::Json => serde_json::to_string_pretty(value).expect("serialisable") + "\n",
        Format::Text => text(),
    };
    // a closed pipe (`| head`) is not an error
    let _ = std::io::stdout().lock().write_all(body.as_bytes());
}

#[derive(Serialize)]
struct GroupRow {
    a: u64,
    b: u64,
    c: u64,
    d: u64,
    order: u64,
    cyclic: bool,
}

impl From<&SpaceFormGroup> for GroupRow {
    fn from(g: &SpaceFormGroup) -> Self {
        GroupRow { a: g.a(), b: g.b(), c: g.c(), d: g.d(), order: g.order(), cyclic: g.is_cyclic() }
    }
}

fn group_table(rows: &[GroupRow]) -> String {
    let mut out = format!("{:>8} {:>8} {:>8} {:>6} {:>10} {:>7}\n", "a", "b", "c", "d", "order", "cyclic");
    for r in rows {
        out.push_str(&format!("{:>8} {:>8} {:>8} {:>6} {:>10} {:>7}\n", r.a, r.b, r.c, r.d, r.order, r.cyclic));
    }
    out
}

fn cmd_groups(format: Format, cmd: GroupsCommand) -> CmdResult {
    match cmd {
        GroupsCommand::Classify { a, b, c } => {
            let g = SpaceFormGroup::new(a, b, c)?;
            let row = GroupRow::from(&g);
            emit(format, &row, || group_table(std::slice::from_ref(&row)));
        }
        GroupsCommand::Enumerate { a_max, b_max, d } => {
            let rows: Vec<GroupRow> = enumerate_admissible(a_max, b_max, d)?.iter().map(GroupRow::from).collect();
            emit(format, &rows, || group_table(&rows));
        }
        GroupsCommand::SubgroupIndex { a, b, c } => {
            let g = SpaceFormGroup::new(a, b, c)?;
            let h = g.cyclic_subgroup_index();
            #[derive(Serialize)]
            struct Index {
                a: u64,
                b: u64,
                c: u64,
                index: u64,
                subgroup_order: u64,
                generators: [String; 2],
            }
            let row = Index {
                a,
                b,
                c,
                index: h.index,
                subgroup_order: h.order,
                generators: [h.generators.0.to_string(), h.generators.1.to_string()],
            };
            emit(format, &row, || {
                format!(
                    "normal cyclic subgroup <{}, {}> of order {} and index {}\n",
                    row.generators[0], row.generators[1], row.subgroup_order, row.index
                )
            });
        }
    }
    Ok(Status::Ok)
}

fn cmd_rep(format: Format, cmd: RepCommand) -> CmdResult {
    let RepCommand::Build { p, n, verify_free, verify_hopf } = cmd;
    let bundle = build_sphere_action(p, n)?;
    let cap = obstruct_core::max_group_order_from_env();
    let summary = bundle.summary(verify_free.then_some(cap), verify_hopf)?;
    emit(format, &summary, || {
        let mut s = format!(
            "Γ({}, {}, {}) on S^{}: p = {}, torus rank {}\n",
            summary.a, summary.b, summary.c, summary.n, summary.p, summary.torus_rank
        );
        if let Some(f) = summary.free {
            s.push_str(&format!("free: {f}\n"));
        }
        if let Some(h) = summary.hopf_free {
            s.push_str(&format!("hopf_free: {h}\n"));
        }
        s
    });
    let failed = summary.free == Some(false) || summary.hopf_free == Some(false);
    Ok(if failed { Status::CheckFailed } else { Status::Ok })
}

fn cmd_steenrod(format: Format, cmd: SteenrodCommand) -> CmdResult {
    match cmd {
        SteenrodCommand::Normalize { p, word } => {
            let w = SteenrodWord::parse(p, &word)?;
            let e = adem_normalize(&w);
            #[derive(Serialize)]
            struct Normal {
                p: u64,
                input: String,
                degree: u64,
                normal_form: String,
            }
            let row = Normal { p, input: w.to_string(), degree: w.degree(), normal_form: e.to_string() };
            emit(format, &row, || format!("{}\n", row.normal_form));
            Ok(Status::Ok)
        }
        SteenrodCommand::Identities { p } => {
            let rows = identities(p)?;
            let all = rows.iter().all(|r| r.holds);
            emit(format, &rows, || {
                let w = rows.iter().map(|r| r.identity.len()).max().unwrap_or(0);
                rows.iter()
                    .map(|r| format!("{:<w$}  {}\n", r.identity, if r.holds { "PASS" } else { "FAIL" }))
                    .collect()
            });
            Ok(if all { Status::Ok } else { Status::CheckFailed })
        }
    }
}

fn cmd_coding(format: Format, cmd: CodingCommand) -> CmdResult {
    match cmd {
        CodingCommand::Sweep { variant, n_min, n_max, only_1_mod_4 } => {
            let variant: SweepVariant = variant.parse().map_err(|e: String| anyhow!(e))?;
            let rows = cor_ak_sweep(n_min, n_max, variant, only_1_mod_4)?;
            emit(format, &rows, || {
                let mut s = format!("{:>7} {:>5} {:>3} {:>6} {:>6} {:>9} {:>13}\n", "n", "s", "j", "lhs", "rhs", "griesmer", "log_threshold");
                for r in &rows {
                    s.push_str(&format!(
                        "{:>7} {:>5} {:>3} {:>6} {:>6} {:>9} {:>13}\n",
                        r.n, r.s_min, r.j, r.lhs, r.rhs, r.pass, r.log_threshold
                    ));
                }
                s
            });
            Ok(Status::Ok)
        }
        CodingCommand::Griesmer { n, s, c, j } => {
            let out = griesmer_inequality(GriesmerQuery::new(n, s, c, j)?);
            emit(format, &out, || format!("{} < {}: {}\n", out.lhs, out.rhs, out.holds));
            Ok(Status::Ok)
        }
        CodingCommand::Oracle { length, dimension } => {
            let out = brute_force_code_oracle(length, dimension)?;
            emit(format, &out, || {
                format!(
                    "[{}, {}]: best d = {}, Griesmer allows d <= {}, {} codes examined\n",
                    out.length, out.dimension, out.best_distance, out.griesmer_max_distance, out.codes_examined
                )
            });
            let ok = out.best_distance <= out.griesmer_max_distance;
            Ok(if ok { Status::Ok } else { Status::CheckFailed })
        }
    }
}

fn cmd_obstruct(format: Format, args: ObstructArgs) -> CmdResult {
    let flags = [
        (args.rational_sphere, Flag::RationalSphereCover),
        (args.integral_sphere, Flag::IntegralSphereCover),
        (args.no_fixed_point, Flag::TorusFixedPointFree),
        (args.circle_only, Flag::CircleActionOnly),
    ]
    .into_iter()
    .filter_map(|(on, f)| on.then_some(f));
    let mut h = Hypotheses::new(args.n, args.r, flags)?;
    if let Some(q) = args.q {
        let q: Frac = q.parse().map_err(|e| anyhow!("{e}")).context("--q expects NUM or NUM/DEN")?;
        h = h.with_q(q)?;
    }
    let report = apply_all(&h);
    emit(format, &report, || report.render_text());
    Ok(Status::Ok)
}

fn run(cli: Cli) -> CmdResult {
    let format = cli.format;
    match cli.command {
        Command::Groups { command } => cmd_groups(format, command),
        Command::Rep { command } => cmd_rep(format, command),
        Command::Steenrod { command } => cmd_steenrod(format, command),
        Command::Coding { command } => cmd_coding(format, command),
        Command::Verify { command: VerifyCommand::PaperChecks(args) } => checks::cmd_paper_checks(format, args),
        Command::Obstruct(args) => cmd_obstruct(format, args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::CheckFailed) => ExitCode::from(1),
        Err(InputError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
