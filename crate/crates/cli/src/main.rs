//! `trioid`: check, construct, derive, enumerate, and linearize finite
//! trioid structures from the command line.
//!
//! Output is line-oriented and byte-stable: `PASS <id>` / `FAIL <id>
//! witness=(..) lhs=.. rhs=..` lines on stdout, prose on stderr behind
//! `--verbose`. Exit codes: 0 all checks passed, 1 a check failed (FAIL
//! lines were printed), 2 usage, parse, or guard error.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use trioid_core::{
    action_trigroup, certify, check_digroup_auto, check_three_rack, check_trigroup,
    check_trimonoid, check_trisemigroup, conjugation, construct, derive_three_rack,
    enumerate_bruteforce, enumerate_trioids, group_as_trigroup, matrix_trigroup, pair_trisemigroup,
    rack_solve, serialize_three_rack, serialize_trioid, spot_check_trisemigroup, ActionSpec,
    CheckReport, ElementId, Error, FieldSpec, NumericConfig, OpTable, StructureClass, TrioidTable,
};

#[derive(Parser)]
#[command(
    name = "trioid",
    version,
    about = "Workbench for finite trioids and trigroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Structure {
    Trisemigroup,
    Trimonoid,
    Trigroup,
    Digroup,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ClassArg {
    Trisemigroup,
    Trimonoid,
    Trigroup,
}

impl From<ClassArg> for StructureClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::Trisemigroup => StructureClass::Trisemigroup,
            ClassArg::Trimonoid => StructureClass::Trimonoid,
            ClassArg::Trigroup => StructureClass::Trigroup,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check a `.trioid` file against a structure class.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "trisemigroup")]
        structure: Structure,
        /// Distinguished unit (overrides the file's `unit` line).
        #[arg(long)]
        unit: Option<usize>,
        /// Sample this many triples per axiom instead of scanning
        /// exhaustively (trisemigroup only; required above order 64).
        #[arg(long)]
        sample: Option<u64>,
        /// Seed for `--sample`.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Human-readable commentary on stderr.
        #[arg(long)]
        verbose: bool,
    },
    /// Run the full law suite on a certified trigroup file.
    Laws { file: PathBuf },
    /// Derive the conjugation 3-rack and write it as `.threerack`.
    DeriveRack {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Solve `[x,y,z] = b` for `z` in a certified trigroup.
    Solve {
        file: PathBuf,
        #[arg(long)]
        x: usize,
        #[arg(long)]
        y: usize,
        #[arg(long)]
        b: usize,
    },
    /// Build an instance and write it as `.trioid`.
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Census of small structures, written as one `.trioid` per
    /// representative plus a `census.txt` summary.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long)]
        up_to_iso: bool,
        /// Use the brute-force oracle engine (orders 1..=2).
        #[arg(long)]
        oracle: bool,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Numeric Leibniz 3-algebra checks on the smooth model.
    Leibniz {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 1e-4)]
        step: f64,
        #[arg(long, default_value_t = 1e-5)]
        tol: f64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Pair construction on G x G from the (left, right) tables of a
    /// `.trioid` file or from the cyclic group Z/n.
    Pair {
        #[arg(long, conflicts_with = "cyclic")]
        trioid: Option<PathBuf>,
        #[arg(long)]
        cyclic: Option<usize>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Action trigroup on M x H.
    Action {
        /// Size of M.
        #[arg(long)]
        m: usize,
        /// Fixed-point index in M.
        #[arg(long, default_value_t = 0)]
        e: usize,
        /// H = Z/n.
        #[arg(long, conflicts_with = "h_table")]
        h_cyclic: Option<usize>,
        /// File with |H| rows of |H| integers (a group table).
        #[arg(long)]
        h_table: Option<PathBuf>,
        /// Action rows, one per h, semicolon-separated:
        /// e.g. "0,1,2;0,2,1".
        #[arg(long)]
        action: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Scalar-matrix trigroup over GF(p)^n.
    Matrix {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// A group embedded as a trigroup.
    Group {
        #[arg(long, conflicts_with = "table")]
        cyclic: Option<usize>,
        /// File with n rows of n integers (a group table).
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn read_trioid(path: &Path) -> Result<TrioidTable, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
    trioid_core::parse_trioid(&text)
}

/// Bare operation table: n rows of n whitespace-separated integers.
fn read_bare_table(path: &Path) -> Result<OpTable, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
    let rows: Vec<Vec<usize>> = text
        .lines()
        .map(|l| match l.find('#') {
            Some(pos) => &l[..pos],
            None => l,
        })
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::Usage(format!("invalid table entry '{tok}'")))
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    OpTable::from_rows(&rows)
}

fn write_file(path: &Path, contents: &str) -> Result<(), Error> {
    fs::write(path, contents)
        .map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())))
}

/// Prints a line, exiting quietly if the consumer closed the pipe.
fn emit(line: &str) {
    let mut out = io::stdout().lock();
    if writeln!(out, "{line}").is_err() {
        std::process::exit(0);
    }
}

fn print_report(report: &CheckReport, with_counts: bool) -> bool {
    for line in report.lines(with_counts) {
        emit(&line);
    }
    report.passed()
}

fn element_arg(value: usize, order: usize, what: &str) -> Result<ElementId, Error> {
    if value >= order {
        return Err(Error::Usage(format!(
            "{what} {value} out of range for order {order}"
        )));
    }
    Ok(ElementId(value))
}

fn run(command: Command) -> Result<bool, Error> {
    match command {
        Command::Check {
            file,
            structure,
            unit,
            sample,
            seed,
            verbose,
        } => {
            let table = read_trioid(&file)?;
            let unit = unit
                .map(|u| element_arg(u, table.order(), "unit"))
                .transpose()?;
            if let Some(samples) = sample {
                if !matches!(structure, Structure::Trisemigroup) {
                    return Err(Error::Usage(
                        "--sample supports --structure trisemigroup only".into(),
                    ));
                }
                let report = spot_check_trisemigroup(&table, samples, seed);
                return Ok(print_report(&report, true));
            }
            trioid_core::axioms::ensure_exhaustive_order(table.order())?;
            let report = match structure {
                Structure::Trisemigroup => check_trisemigroup(&table),
                Structure::Trimonoid => check_trimonoid(&table),
                Structure::Trigroup => {
                    let check = check_trigroup(&table, unit.or(table.unit()));
                    if verbose {
                        if let Some(cert) = &check.cert {
                            eprintln!(
                                "certified trigroup: unit={} bar-units={:?}",
                                cert.unit,
                                cert.bar_units.iter().map(|e| e.0).collect::<Vec<_>>()
                            );
                        }
                    }
                    check.report
                }
                Structure::Digroup => {
                    check_digroup_auto(table.left(), table.right(), unit.or(table.unit()))
                }
            };
            Ok(print_report(&report, false))
        }

        Command::Laws { file } => {
            let table = read_trioid(&file)?;
            match certify(&table) {
                Err(report) => {
                    print_report(&report, false);
                    Ok(false)
                }
                Ok(cert) => {
                    let report = trioid_core::run_trigroup_laws(&table, &cert)?;
                    Ok(print_report(&report, true))
                }
            }
        }

        Command::DeriveRack { file, output } => {
            let table = read_trioid(&file)?;
            match certify(&table) {
                Err(report) => {
                    print_report(&report, false);
                    Ok(false)
                }
                Ok(cert) => {
                    let rack = derive_three_rack(&table, &cert)?;
                    write_file(&output, &serialize_three_rack(&rack))?;
                    let report = check_three_rack(&rack);
                    Ok(print_report(&report, true))
                }
            }
        }

        Command::Solve { file, x, y, b } => {
            let table = read_trioid(&file)?;
            let n = table.order();
            let (x, y, b) = (
                element_arg(x, n, "--x")?,
                element_arg(y, n, "--y")?,
                element_arg(b, n, "--b")?,
            );
            match certify(&table) {
                Err(report) => {
                    print_report(&report, false);
                    Ok(false)
                }
                Ok(cert) => {
                    let z = rack_solve(&table, &cert, x, y, b);
                    let verified = conjugation(&table, &cert, x, y, z) == b;
                    emit(&format!("z={z}"));
                    emit(&format!("verified={verified}"));
                    Ok(verified)
                }
            }
        }

        Command::Construct { what } => {
            construct_cmd(what)?;
            Ok(true)
        }

        Command::Enumerate {
            order,
            class,
            up_to_iso,
            oracle,
            output,
        } => {
            let class: StructureClass = class.into();
            if order == 4 {
                eprintln!("note: order-4 enumeration may take a long time");
            }
            let row = if oracle {
                enumerate_bruteforce(order, class)?
            } else {
                enumerate_trioids(order, class, up_to_iso)?
            };
            fs::create_dir_all(&output)
                .map_err(|e| Error::Usage(format!("cannot create {}: {e}", output.display())))?;
            for (i, rep) in row.representatives.iter().enumerate() {
                let name = format!("{}-{}-{i}.trioid", class, order);
                write_file(&output.join(name), &serialize_trioid(rep))?;
            }
            let summary = row.summary();
            write_file(&output.join("census.txt"), &format!("{summary}\n"))?;
            emit(&summary);
            Ok(true)
        }

        Command::Leibniz {
            dim,
            step,
            tol,
            samples,
            seed,
        } => {
            let cfg = NumericConfig {
                step,
                tol,
                samples,
                seed,
            };
            let mut reports = vec![
                trioid_core::check_leibniz_identity(dim, &cfg)?,
                trioid_core::check_trilinearity(dim, &cfg)?,
                trioid_core::check_bracket_oracle(dim, &cfg)?,
            ];
            let mut all_passed = true;
            for report in reports.drain(..) {
                for line in report.lines() {
                    emit(&line);
                }
                for check in &report.checks {
                    if check.max_residual >= report.tol {
                        emit(&format!(
                            "FAIL {} max_residual={:e} tol={:e}",
                            check.label, check.max_residual, report.tol
                        ));
                    }
                }
                all_passed &= report.passed();
            }
            let halving = trioid_core::jacobian_halving(dim, &cfg, 10)?;
            emit(&format!("jacobian-halving ratio={:e}", halving.ratio));
            Ok(all_passed)
        }
    }
}

fn annotated_trioid(table: &TrioidTable, names: &[String]) -> String {
    let mut out = String::new();
    for (i, name) in names.iter().enumerate() {
        out.push_str(&format!("# element {i} = {name}\n"));
    }
    out.push_str(&serialize_trioid(table));
    out
}

fn construct_cmd(what: ConstructCmd) -> Result<(), Error> {
    match what {
        ConstructCmd::Pair {
            trioid,
            cyclic,
            output,
        } => {
            let (left, right) = match (trioid, cyclic) {
                (Some(path), None) => {
                    let t = read_trioid(&path)?;
                    (t.left().clone(), t.right().clone())
                }
                (None, Some(n)) if n >= 1 => {
                    let g = OpTable::cyclic(n);
                    (g.clone(), g)
                }
                _ => {
                    return Err(Error::Usage(
                        "construct pair needs exactly one of --trioid FILE or --cyclic N".into(),
                    ))
                }
            };
            let pair = pair_trisemigroup(&left, &right)?;
            let names = construct::pair_element_names(left.order());
            write_file(&output, &annotated_trioid(&pair, &names))
        }

        ConstructCmd::Action {
            m,
            e,
            h_cyclic,
            h_table,
            action,
            output,
        } => {
            let h = match (h_cyclic, h_table) {
                (Some(n), None) if n >= 1 => OpTable::cyclic(n),
                (None, Some(path)) => read_bare_table(&path)?,
                _ => {
                    return Err(Error::Usage(
                        "construct action needs exactly one of --h-cyclic N or --h-table FILE"
                            .into(),
                    ))
                }
            };
            let rows: Vec<Vec<usize>> = action
                .split(';')
                .map(|row| {
                    row.split(|c: char| c == ',' || c.is_whitespace())
                        .filter(|tok| !tok.is_empty())
                        .map(|tok| {
                            tok.parse::<usize>().map_err(|_| {
                                Error::Usage(format!("invalid --action entry '{tok}'"))
                            })
                        })
                        .collect()
                })
                .collect::<Result<_, _>>()?;
            let spec = ActionSpec {
                m_order: m,
                e,
                h_table: h,
                action: rows,
            };
            if !spec.is_transitive_off_fixed() {
                eprintln!("warning: H does not act transitively on M - {{e}}");
            }
            let (table, _cert) = action_trigroup(&spec)?;
            let names = construct::action_element_names(&spec);
            write_file(&output, &annotated_trioid(&table, &names))
        }

        ConstructCmd::Matrix { p, n, output } => {
            let spec = FieldSpec { p, n };
            let (table, _cert) = matrix_trigroup(&spec)?;
            let names = construct::matrix_element_names(&spec);
            write_file(&output, &annotated_trioid(&table, &names))
        }

        ConstructCmd::Group {
            cyclic,
            table,
            output,
        } => {
            let g = match (cyclic, table) {
                (Some(n), None) if n >= 1 => OpTable::cyclic(n),
                (None, Some(path)) => read_bare_table(&path)?,
                _ => {
                    return Err(Error::Usage(
                        "construct group needs exactly one of --cyclic N or --table FILE".into(),
                    ))
                }
            };
            let (trigroup, _cert) = group_as_trigroup(&g)?;
            write_file(&output, &serialize_trioid(&trigroup))
        }
    }
}
