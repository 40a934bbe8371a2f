//! `fakedeg`: root-system dumps, fake degrees, the expected table and the
//! verification suite.

mod render;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fakedeg_core::fakedeg::{
    codegree_poly, coxeter_q_int, default_types, expected_row, fake_degree, table_row, verify_all, verify_many,
    DEFAULT_BFS_BOUND,
};
use fakedeg_core::qpoly::gcd_primitive;
use fakedeg_core::rootsys::DEFAULT_MAX_DIHEDRAL;
use fakedeg_core::{GroupType, OrbitSelector, RootSystem, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "fakedeg",
    version,
    about = "Fake degrees of root orbits in finite reflection groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

#[derive(Args, Clone, Copy)]
struct Bounds {
    /// Largest rank for the A, B and D families.
    #[arg(long, default_value_t = 12)]
    max_rank: usize,
    /// Largest m for the dihedral family I2(m).
    #[arg(long, default_value_t = 30)]
    max_m: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Rank, degrees, exponents, codegrees, root count and orbits of a type.
    Info {
        /// Type such as E8, A5, C7 or I2(14).
        #[arg(value_name = "TYPE")]
        group: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Dump every root with positivity, height and orbit data as JSON.
    Roots {
        #[arg(value_name = "TYPE")]
        group: String,
    },
    /// The fake degree of a root orbit, its quotient by [h]_q and the gcd column.
    Fakedeg {
        #[arg(value_name = "TYPE")]
        group: String,
        /// all, long, short, or a union such as long+short.
        #[arg(long, default_value = "all")]
        orbit: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Computed table rows next to the expected recipes.
    Table {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Run every claim for one type, or for all types within the bounds.
    Verify {
        #[arg(value_name = "TYPE", required_unless_present = "all", conflicts_with = "all")]
        group: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        bounds: Bounds,
        /// Largest group order enumerated element by element.
        #[arg(long, default_value_t = DEFAULT_BFS_BOUND)]
        bfs_bound: u128,
    },
}

enum Failure {
    Usage(String),
    Verification(usize),
}

type CmdResult = Result<String, Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn parse_type(s: &str) -> Result<GroupType, Failure> {
    s.parse::<GroupType>().map_err(usage)
}

fn root_system(t: GroupType) -> Result<RootSystem, Failure> {
    RootSystem::new(t).map_err(usage)
}

fn unsupported(cmd: &str, format: Format) -> Failure {
    usage(format!("{cmd} does not support --format {format:?}").to_lowercase())
}

fn check_bounds(b: &Bounds) -> Result<(), Failure> {
    if b.max_rank == 0 {
        return Err(usage("--max-rank must be at least 1"));
    }
    if !(3..=DEFAULT_MAX_DIHEDRAL).contains(&b.max_m) {
        return Err(usage(format!("--max-m must lie in 3..={DEFAULT_MAX_DIHEDRAL}")));
    }
    Ok(())
}

fn cmd_info(group: &str, format: Format) -> CmdResult {
    let rs = root_system(parse_type(group)?)?;
    match format {
        Format::Text => Ok(render::info_text(&rs)),
        Format::Json => Ok(render::json(&render::Info::new(&rs))),
        f => Err(unsupported("info", f)),
    }
}

fn cmd_roots(group: &str) -> CmdResult {
    let rs = root_system(parse_type(group)?)?;
    Ok(render::json(&rs))
}

fn cmd_fakedeg(group: &str, orbit: &str, format: Format) -> CmdResult {
    let rs = root_system(parse_type(group)?)?;
    let sel: OrbitSelector = orbit.parse().map_err(usage)?;
    let f = fake_degree(&rs, &sel).map_err(usage)?;
    let quotient = f.exact_div(&coxeter_q_int(&rs)).map_err(usage)?;
    let gcd = gcd_primitive(&coxeter_q_int(&rs), &codegree_poly(&rs)).map_err(usage)?;
    let out = render::FakeDegree {
        group_type: rs.group_type(),
        h: rs.h(),
        orbit: sel.name(),
        f,
        quotient,
        gcd,
    };
    Ok(match format {
        Format::Text => out.text(),
        Format::Json => render::json(&out),
        Format::Csv => out.csv(),
        Format::Latex => out.latex(),
    })
}

fn cmd_table(format: Format, bounds: &Bounds) -> CmdResult {
    check_bounds(bounds)?;
    let mut rows = Vec::new();
    for t in default_types(bounds.max_rank, bounds.max_m) {
        let rs = root_system(t)?;
        for sel in OrbitSelector::single_orbits(&rs) {
            let computed = table_row(&rs, &sel).map_err(usage)?;
            let expected = expected_row(t, computed.orbit);
            rows.push(render::Row::new(computed, expected));
        }
    }
    let mismatches = rows.iter().filter(|r| !r.matches).count();
    let out = match format {
        Format::Text => render::table_text(&rows),
        Format::Json => render::json(&rows),
        Format::Csv => render::table_csv(&rows),
        Format::Latex => render::table_latex(&rows),
    };
    if mismatches > 0 {
        print!("{out}");
        return Err(Failure::Verification(mismatches));
    }
    Ok(out)
}

fn cmd_verify(group: Option<&str>, format: Format, bounds: &Bounds, bfs_bound: u128) -> CmdResult {
    let options = VerifyOptions { bfs_bound };
    let reports = match group {
        Some(g) => vec![verify_all(parse_type(g)?, &options)],
        None => {
            check_bounds(bounds)?;
            verify_many(&default_types(bounds.max_rank, bounds.max_m), &options)
        }
    };
    let out = match (format, group) {
        (Format::Json, Some(_)) => render::json(&reports[0]),
        (Format::Json, None) => render::json(&render::Suite::new(&reports, bounds.max_rank, bounds.max_m, bfs_bound)),
        (Format::Text, _) => reports.iter().map(ToString::to_string).collect(),
        (f, _) => return Err(unsupported("verify", f)),
    };
    let failures: usize = reports.iter().map(|r| r.failures().count()).sum();
    if failures > 0 {
        print!("{out}");
        return Err(Failure::Verification(failures));
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Info { group, format } => cmd_info(group, *format),
        Command::Roots { group } => cmd_roots(group),
        Command::Fakedeg { group, orbit, format } => cmd_fakedeg(group, orbit, *format),
        Command::Table { format, bounds } => cmd_table(*format, bounds),
        Command::Verify {
            group,
            all: _,
            format,
            bounds,
            bfs_bound,
        } => cmd_verify(group.as_deref(), *format, bounds, *bfs_bound),
    };
    match result {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(n)) => {
            eprintln!("{n} check(s) failed");
            ExitCode::from(1)
        }
    }
}
