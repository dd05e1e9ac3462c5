//! Command-line driver behind the `cyclic-chroma` binary.
//!
//! Exit codes: 0 success or valid, 1 infeasible, invalid or disagreement,
//! 2 usage, parse or resource errors.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::construct::{construct, Construction};
use crate::error::Error;
use crate::model::CycleColoring;
use crate::oracle::{decompose, Searcher};
use crate::report::{brace_set, render_decomposition, render_table, table_rows, TableFormat};
use crate::theta::{contains_mode, theta};
use crate::verify::{verify, Mode, VerificationReport};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "cyclic-chroma",
    version,
    about = "Cyclically interval edge colorings of simple cycles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Cyclic,
    Interval,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Cyclic => Mode::CyclicInterval,
            ModeArg::Interval => Mode::Interval,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Markdown,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print every t admitting a coloring of C(n).
    Theta {
        #[arg(value_parser = parse_count)]
        n: usize,
        #[arg(long, value_enum, default_value = "cyclic")]
        mode: ModeArg,
        #[arg(long)]
        json: bool,
    },
    /// Print the canonical cyclically interval t-coloring of C(n).
    Make {
        #[arg(value_parser = parse_count)]
        n: usize,
        #[arg(value_parser = parse_count)]
        t: usize,
        #[arg(long)]
        json: bool,
    },
    /// Verify a coloring record read from a file or standard input.
    Check {
        /// Path to the record; standard input when absent or `-`.
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "cyclic")]
        mode: ModeArg,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustively search C(n) for every t in range.
    Oracle {
        #[arg(value_parser = parse_count)]
        n: usize,
        #[arg(long, value_parser = parse_count)]
        tmin: Option<usize>,
        #[arg(long, value_parser = parse_count)]
        tmax: Option<usize>,
        #[arg(long, value_enum, default_value = "cyclic")]
        mode: ModeArg,
        /// Also count every valid coloring.
        #[arg(long)]
        count: bool,
        /// Exit 1 if any search verdict disagrees with the closed form.
        #[arg(long)]
        assert_theorem: bool,
        #[arg(long)]
        json: bool,
    },
    /// Reference table of feasibility sets for n = 3..=nmax.
    Table {
        #[arg(value_parser = parse_count)]
        nmax: usize,
        #[arg(long, value_parser = parse_count)]
        oracle_upto: Option<usize>,
        #[arg(long, value_enum, default_value = "markdown")]
        format: FormatArg,
    },
    /// Show the run/gap decomposition of a cyclically interval coloring.
    Decompose {
        input: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

/// Decimal without sign or leading zeros.
fn parse_count(s: &str) -> Result<usize, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("{s:?} is not an unsigned decimal integer"));
    }
    if s.len() > 1 && s.starts_with('0') {
        return Err(format!("{s:?} has a leading zero"));
    }
    s.parse().map_err(|e| format!("{s:?}: {e}"))
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn usage(&mut self, msg: impl std::fmt::Display) -> u8 {
        let _ = writeln!(self.err, "error: {msg}");
        EXIT_USAGE
    }

    fn read_input(&mut self, input: &Option<PathBuf>) -> Result<String, u8> {
        let mut buf = String::new();
        let res = match input {
            Some(p) if p.as_os_str() != "-" => fs::read_to_string(p).map(|s| buf = s),
            _ => self.stdin.read_to_string(&mut buf).map(|_| ()),
        };
        match res {
            Ok(()) => Ok(buf),
            Err(e) => Err(self.usage(format!("cannot read input: {e}"))),
        }
    }

    fn read_coloring(&mut self, input: &Option<PathBuf>) -> Result<CycleColoring, u8> {
        let text = self.read_input(input)?;
        CycleColoring::from_json(&text).map_err(|e| self.usage(e))
    }
}

/// Runs the CLI with the process's standard streams.
pub fn main_with_args<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdin = io::stdin();
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(
        args,
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut io = Io { stdin, out, err };
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return if e.use_stderr() {
                let _ = write!(io.err, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(io.out, "{}", e.render());
                EXIT_OK
            };
        }
    };
    let code = match cli.command {
        Command::Theta { n, mode, json } => cmd_theta(&mut io, n, mode.into(), json),
        Command::Make { n, t, json } => cmd_make(&mut io, n, t, json),
        Command::Check { input, mode, json } => cmd_check(&mut io, &input, mode.into(), json),
        Command::Oracle {
            n,
            tmin,
            tmax,
            mode,
            count,
            assert_theorem,
            json,
        } => cmd_oracle(
            &mut io,
            OracleArgs {
                n,
                tmin,
                tmax,
                mode: mode.into(),
                count,
                assert_theorem,
                json,
            },
        ),
        Command::Table {
            nmax,
            oracle_upto,
            format,
        } => cmd_table(&mut io, nmax, oracle_upto, format),
        Command::Decompose { input, json } => cmd_decompose(&mut io, &input, json),
    };
    let _ = io.out.flush();
    code
}

fn cmd_theta(io: &mut Io, n: usize, mode: Mode, json: bool) -> u8 {
    let set = match theta(n, mode) {
        Ok(s) => s,
        Err(e) => return io.usage(e),
    };
    if json {
        let _ = writeln!(
            io.out,
            "{}",
            json!({
                "n": n,
                "mode": mode.as_str(),
                "members": set.members,
                "provenance": set.provenance,
                "min": set.min(),
                "max": set.max(),
            })
        );
        return EXIT_OK;
    }
    let (name, bounds) = match mode {
        Mode::CyclicInterval => ("Θ", ("w_cyc", "W_cyc")),
        Mode::Interval => ("θ", ("w_int", "W_int")),
    };
    let _ = write!(io.out, "{name}(C({n})) = {}", brace_set(&set.members));
    match (set.min(), set.max()) {
        (Some(lo), Some(hi)) => {
            let _ = writeln!(io.out, "  {}={lo} {}={hi}", bounds.0, bounds.1);
        }
        _ => {
            let _ = writeln!(io.out, "  (no {mode} coloring exists)");
        }
    }
    EXIT_OK
}

fn cmd_make(io: &mut Io, n: usize, t: usize, json: bool) -> u8 {
    match construct(n, t) {
        Err(e) => io.usage(e),
        Ok(Construction::Witness(c)) => {
            let _ = writeln!(io.out, "{}", c.to_json());
            EXIT_OK
        }
        Ok(Construction::Infeasible(why)) => {
            if json {
                let _ = writeln!(
                    io.out,
                    "{}",
                    json!({ "infeasible": why, "message": why.to_string() })
                );
            } else {
                let _ = writeln!(io.out, "{why}");
            }
            EXIT_FAIL
        }
    }
}

fn print_report(io: &mut Io, c: &CycleColoring, mode: Mode, report: &VerificationReport) {
    if report.mode_satisfied {
        let _ = writeln!(
            io.out,
            "valid {mode} {}-coloring of C({}): {c}",
            c.t(),
            c.n()
        );
        return;
    }
    let _ = writeln!(io.out, "invalid {mode} coloring of C({}): {c}", c.n());
    if !report.proper {
        let _ = writeln!(io.out, "  not proper");
    }
    for v in &report.violations {
        let _ = writeln!(
            io.out,
            "  v_{}: palette {{{},{}}} {}",
            v.vertex,
            v.palette[0],
            v.palette[1],
            v.reason.as_str()
        );
    }
    if !report.surjective {
        let _ = writeln!(
            io.out,
            "  missing colors {}",
            brace_set(&report.missing_colors)
        );
    }
}

fn cmd_check(io: &mut Io, input: &Option<PathBuf>, mode: Mode, json: bool) -> u8 {
    let c = match io.read_coloring(input) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let report = verify(&c, mode);
    if json {
        let _ = writeln!(io.out, "{}", report.to_json());
    } else {
        print_report(io, &c, mode, &report);
    }
    if report.mode_satisfied {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

struct OracleArgs {
    n: usize,
    tmin: Option<usize>,
    tmax: Option<usize>,
    mode: Mode,
    count: bool,
    assert_theorem: bool,
    json: bool,
}

fn searcher(io: &mut Io) -> Result<Searcher, u8> {
    Searcher::from_env().map_err(|e| io.usage(e))
}

fn cmd_oracle(io: &mut Io, args: OracleArgs) -> u8 {
    let OracleArgs { n, mode, .. } = args;
    let searcher = match searcher(io) {
        Ok(s) => s,
        Err(code) => return code,
    };
    if n < 3 {
        return io.usage(Error::Domain(format!("cycles have n >= 3, got n={n}")));
    }
    if n > searcher.max_n() {
        return io.usage(Error::SearchBound {
            n,
            max_n: searcher.max_n(),
        });
    }
    let tmin = args.tmin.unwrap_or(1);
    let tmax = args.tmax.unwrap_or(n);
    if tmin < 1 || tmax > n || tmin > tmax {
        return io.usage(format!("t range [{tmin},{tmax}] must lie within [1,{n}]"));
    }

    let mut rows = Vec::new();
    let mut all_agree = true;
    for t in tmin..=tmax {
        let found = searcher.exists(n, t, mode);
        let formula = contains_mode(n, t, mode);
        let counted = if args.count {
            searcher.count(n, t, mode).map(Some)
        } else {
            Ok(None)
        };
        let (found, formula, counted) = match (found, formula, counted) {
            (Ok(a), Ok(b), Ok(c)) => (a, b, c),
            (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => return io.usage(e),
        };
        all_agree &= found == formula;
        rows.push((t, found, formula, counted));
    }

    if args.json {
        let rows: Vec<_> = rows
            .iter()
            .map(|&(t, found, formula, counted)| {
                let mut row = json!({ "t": t, "exists": found, "formula": formula, "agree": found == formula });
                if let Some(k) = counted {
                    row["count"] = json!(k);
                }
                row
            })
            .collect();
        let _ = writeln!(
            io.out,
            "{}",
            json!({ "n": n, "mode": mode.as_str(), "rows": rows, "all_agree": all_agree })
        );
    } else {
        let _ = writeln!(io.out, "C({n}) {mode} search, t in [{tmin},{tmax}]");
        for (t, found, formula, counted) in &rows {
            let yn = |b: bool| if b { "yes" } else { "no" };
            let _ = write!(
                io.out,
                "t={t}: {:<3}  formula={:<3}",
                yn(*found),
                yn(*formula)
            );
            if let Some(k) = counted {
                let _ = write!(io.out, "  count={k}");
            }
            if found != formula {
                let _ = write!(io.out, "  DISAGREE");
            }
            let _ = writeln!(io.out);
        }
    }
    if args.assert_theorem && !all_agree {
        let _ = writeln!(io.err, "search disagrees with the closed form for C({n})");
        return EXIT_FAIL;
    }
    EXIT_OK
}

fn cmd_table(io: &mut Io, nmax: usize, oracle_upto: Option<usize>, format: FormatArg) -> u8 {
    if nmax < 3 {
        return io.usage(format!("nmax must be at least 3, got {nmax}"));
    }
    let searcher = match searcher(io) {
        Ok(s) => s,
        Err(code) => return code,
    };
    if let Some(k) = oracle_upto {
        if k.min(nmax) > searcher.max_n() {
            return io.usage(Error::SearchBound {
                n: k.min(nmax),
                max_n: searcher.max_n(),
            });
        }
    }
    let rows = match table_rows(nmax, oracle_upto, &searcher) {
        Ok(r) => r,
        Err(e) => return io.usage(e),
    };
    let format = match format {
        FormatArg::Csv => TableFormat::Csv,
        FormatArg::Markdown => TableFormat::Markdown,
    };
    let _ = write!(
        io.out,
        "{}",
        render_table(&rows, oracle_upto.is_some(), format)
    );
    EXIT_OK
}

fn cmd_decompose(io: &mut Io, input: &Option<PathBuf>, json: bool) -> u8 {
    let c = match io.read_coloring(input) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let report = verify(&c, Mode::CyclicInterval);
    if !report.mode_satisfied {
        if json {
            let _ = writeln!(io.out, "{}", report.to_json());
        } else {
            print_report(io, &c, Mode::CyclicInterval, &report);
        }
        return EXIT_FAIL;
    }
    let d = decompose(&c).expect("verified coloring decomposes");
    if json {
        let mut value = serde_json::to_value(&d).expect("decomposition serializes");
        value["psi_sum"] = json!(d.psi_sum());
        value["identity_holds"] = json!(d.identity_holds());
        let _ = writeln!(io.out, "{value}");
    } else {
        let _ = write!(io.out, "{}", render_decomposition(&d));
    }
    EXIT_OK
}
