//! `torkit` command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

pub mod verify;

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::families::{self, FamilyFile, FamilySpec, ALEXANDER, GENERALIZED_ALEXANDER, HOMFLY, JONES};
use crate::laurent::{JsonPoly, LaurentPoly};
use crate::qnumbers::QNumberKind;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "torkit", version, about = "Skein-derived polynomial invariants of torus knots T(n,2)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// [n]_q
    Q,
    /// [n]_{q,p}
    Qp,
    /// [n]_{t^3,t}
    Jones,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the invariant of T(n,2) for one family.
    Compute {
        #[arg(long)]
        family: String,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the invariants of T(1,2), T(3,2), ..., T(n_max,2).
    Table {
        #[arg(long)]
        family: String,
        #[arg(long = "n-max", allow_negative_numbers = true)]
        n_max: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the identity suite up to n_max.
    Verify {
        #[arg(long = "n-max", allow_negative_numbers = true)]
        n_max: i64,
        /// Extra family definition (JSON) to include in the suite.
        #[arg(long = "family-file")]
        family_file: Vec<std::path::PathBuf>,
    },
    /// Compute an invariant and map it into another family.
    Convert {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print a q-number, q,p-number or [n]_{t^3,t}.
    Qnum {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, value_enum, default_value = "qp")]
        kind: Kind,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// One invariant as emitted in JSON mode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputRecord {
    pub family: String,
    pub n: u32,
    pub polynomial: JsonPoly,
}

impl OutputRecord {
    pub fn new(family: &str, n: u32, poly: &LaurentPoly) -> Self {
        OutputRecord { family: family.to_string(), n, polynomial: poly.to_json() }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

struct UsageError(String);

fn odd_index(n: i64, flag: &str) -> Result<u32, UsageError> {
    if n < 1 {
        return Err(UsageError(format!("{flag} must be a positive odd integer, got {n}")));
    }
    if n % 2 == 0 {
        return Err(UsageError(format!(
            "{flag} = {n} is even: T({n},2) is a link and no base value for links is defined; use an odd n"
        )));
    }
    u32::try_from(n).map_err(|_| UsageError(format!("{flag} = {n} is too large")))
}

fn family(name: &str) -> Result<&'static FamilySpec, UsageError> {
    families::lookup(name).map_err(|_| {
        UsageError(format!(
            "unknown family `{name}`; expected one of: {ALEXANDER}, {GENERALIZED_ALEXANDER}, {JONES}, {HOMFLY}"
        ))
    })
}

/// Invariant of a registry family via its public closed-form or recurrence.
fn invariant(name: &str, n: u32) -> Result<LaurentPoly, UsageError> {
    family(name)?;
    let r = match name {
        ALEXANDER => families::alexander_torus(n),
        GENERALIZED_ALEXANDER => families::generalized_alexander_torus(n),
        JONES => families::jones_torus(n),
        HOMFLY => families::homfly_torus(n),
        _ => unreachable!("registry names"),
    };
    r.map_err(|e| UsageError(e.to_string()))
}

fn render(
    out: &mut dyn Write,
    family: &str,
    n: u32,
    poly: &LaurentPoly,
    format: Format,
) -> std::io::Result<()> {
    match format {
        Format::Text => writeln!(out, "{poly}"),
        Format::Json => writeln!(out, "{}", OutputRecord::new(family, n, poly).to_json_line()),
    }
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, UsageError> {
    let io = |e: std::io::Error| UsageError(format!("write failed: {e}"));
    match cmd {
        Command::Compute { family, n, format } => {
            let n = odd_index(n, "--n")?;
            let poly = invariant(&family, n)?;
            render(out, &family, n, &poly, format).map_err(io)?;
        }
        Command::Table { family, n_max, format } => {
            let n_max = odd_index(n_max, "--n-max")?;
            let spec = self::family(&family)?;
            let seq = spec.sequence(n_max).map_err(|e| UsageError(e.to_string()))?;
            for (n, poly) in seq.iter() {
                match format {
                    Format::Text => writeln!(out, "{n}\t{poly}").map_err(io)?,
                    Format::Json => render(out, &family, n, poly, format).map_err(io)?,
                }
            }
        }
        Command::Convert { from, to, n, format } => {
            let n = odd_index(n, "--n")?;
            let map: fn(&LaurentPoly) -> families::Result<LaurentPoly> = match (from.as_str(), to.as_str()) {
                (GENERALIZED_ALEXANDER, ALEXANDER) => families::to_alexander,
                (GENERALIZED_ALEXANDER, JONES) => families::to_jones,
                (HOMFLY, GENERALIZED_ALEXANDER) => families::homfly_to_generalized,
                _ => {
                    return Err(UsageError(format!(
                        "unsupported conversion {from} -> {to}; supported: \
                         {GENERALIZED_ALEXANDER} -> {ALEXANDER}, \
                         {GENERALIZED_ALEXANDER} -> {JONES}, \
                         {HOMFLY} -> {GENERALIZED_ALEXANDER}"
                    )))
                }
            };
            let source = invariant(&from, n)?;
            let poly = map(&source).map_err(|e| UsageError(e.to_string()))?;
            render(out, &to, n, &poly, format).map_err(io)?;
        }
        Command::Qnum { n, kind, format } => {
            let n = u32::try_from(n)
                .map_err(|_| UsageError(format!("--n must be a nonnegative integer, got {n}")))?;
            let (kind, label) = match kind {
                Kind::Q => (QNumberKind::SymmetricQ, "q-number"),
                Kind::Qp => (QNumberKind::TwoParameter, "qp-number"),
                Kind::Jones => (QNumberKind::JonesSpecial, "jones-q-number"),
            };
            render(out, label, n, &kind.build(n), format).map_err(io)?;
        }
        Command::Verify { n_max, family_file } => {
            let n_max = odd_index(n_max, "--n-max")?;
            if n_max < 3 {
                return Err(UsageError("--n-max must be at least 3".into()));
            }
            let mut extra = Vec::new();
            for path in &family_file {
                let src = std::fs::read_to_string(path)
                    .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
                let fam = FamilyFile::from_json_str(&src)
                    .and_then(|f| f.build())
                    .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
                extra.push(fam);
            }
            let suite = verify::run_suite(n_max, &extra);
            for check in &suite.checks {
                writeln!(out, "{check}").map_err(io)?;
            }
            if suite.passed() {
                writeln!(out, "all {} checks passed (n <= {n_max})", suite.checks.len()).map_err(io)?;
            } else {
                let failed = suite.checks.iter().filter(|c| !c.passed()).count();
                writeln!(out, "{failed} of {} checks failed", suite.checks.len()).map_err(io)?;
                if let Some((name, m)) = suite.first_counterexample() {
                    let at = m.n.map(|n| format!(" at n={n}")).unwrap_or_default();
                    writeln!(out, "first counterexample: {name}{at}").map_err(io)?;
                    writeln!(out, "  lhs: {}", m.lhs).map_err(io)?;
                    writeln!(out, "  rhs: {}", m.rhs).map_err(io)?;
                }
                let _ = err.flush();
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("torkit").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn compute_text() {
        assert_eq!(call(&["compute", "--family", "alexander", "--n", "1"]), (0, "1\n".into(), String::new()));
        let (code, out, _) = call(&["compute", "--family", "jones", "--n", "5"]);
        assert_eq!(code, 0);
        assert_eq!(out, "-t^7 + t^6 - t^5 + t^4 + t^2\n");
    }

    #[test]
    fn usage_errors() {
        for args in [
            &["compute", "--family", "kauffman", "--n", "3"][..],
            &["compute", "--family", "jones", "--n", "4"],
            &["compute", "--family", "jones", "--n", "-3"],
            &["table", "--family", "jones", "--n-max", "0"],
            &["convert", "--from", "jones", "--to", "homfly", "--n", "3"],
            &["verify", "--n-max", "1"],
            &["qnum", "--n", "-1"],
            &["frobnicate"],
        ] {
            let (code, out, err) = call(args);
            assert_eq!(code, 2, "{args:?}");
            assert!(out.is_empty());
            assert!(!err.is_empty());
        }
        let (_, _, err) = call(&["compute", "--family", "jones", "--n", "4"]);
        assert!(err.contains("base value"), "{err}");
    }

    #[test]
    fn qnum_kinds() {
        assert_eq!(call(&["qnum", "--n", "4", "--kind", "q"]).1, "q^3 + q + q^(-1) + q^(-3)\n");
        assert_eq!(call(&["qnum", "--n", "3"]).1, "q^2 + q*p + p^2\n");
        assert_eq!(call(&["qnum", "--n", "2", "--kind", "jones"]).1, "t^3 + t\n");
        assert_eq!(call(&["qnum", "--n", "0"]).1, "0\n");
    }
}
