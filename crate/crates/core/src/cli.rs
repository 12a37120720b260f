//! The `circloc` command line.
//!
//! ```text
//! circloc gen cp --weights 0,1,2 [-o FILE]
//! circloc gen sphere --exponents 1,1 [-o FILE]
//! circloc invariants FILE [--json]
//! circloc verify FILE --theorem 1.1|2.8 [--json]
//! circloc blowup FILE --point INDEX [-o FILE]
//! circloc consum FILE_A FILE_B --points I,J [-o FILE]
//! circloc obstruct (--manifold NAME | --file FILE | --euler E --signature S [--p1 P] [--dimension D]) [--json]
//! circloc catalog [--json]
//! ```
//!
//! `-` stands for standard input or output. Exit status is 0 on success, an
//! admissible or inconclusive obstruction verdict and a passing or
//! inapplicable theorem verdict; 1 on a failing or blocked verdict,
//! unrealizable data or inconsistent surgery bookkeeping; 2 on usage,
//! parse, validation and file errors.

use std::fs;
use std::io::{Read, Write};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use num_bigint::{BigInt, BigUint};
use serde_json::{Map, Value};

use crate::actiondata::{
    cp_action, parse, parse_invariants, serialize, sphere_action, CircleActionData,
    ManifoldInvariants,
};
use crate::error::Error;
use crate::exactalg::{ExactRational, Partition};
use crate::json::to_pretty;
use crate::localize::{invariants, verify, LocalizationReport, Outcome, Theorem, Verdict};
use crate::obstruct::{catalog, check_domain, Admissible, ObstructionVerdict, CATALOG_TEMPLATES};
use crate::surgery::{blow_up, bookkeeping, connected_sum, BookkeepingReport, SurgeryOp};
use crate::CONVENTION;

/// Subcommand grammar echoed on usage errors.
pub const GRAMMAR: &str = "\
usage:
  circloc gen cp --weights 0,1,2 [-o FILE]
  circloc gen sphere --exponents 1,1 [-o FILE]
  circloc invariants FILE [--json]
  circloc verify FILE --theorem 1.1|2.8 [--json]
  circloc blowup FILE --point INDEX [-o FILE]
  circloc consum FILE_A FILE_B --points I,J [-o FILE]
  circloc obstruct (--manifold NAME | --file FILE | --euler E --signature S [--p1 P] [--dimension D]) [--json]
  circloc catalog [--json]
FILE may be '-' for standard input or output.";

#[derive(Parser, Debug)]
#[command(
    name = "circloc",
    version,
    about = "Characteristic numbers of circle actions from fixed-point data",
    after_help = GRAMMAR
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Fixed-point data of a linear action.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Euler number, signature and Pontryagin numbers by localization.
    Invariants {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Check the vanishing (1.1) or equal-exponent signature (2.8) identity.
    Verify {
        file: String,
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        json: bool,
    },
    /// Equivariant blow-up at an isolated fixed point.
    Blowup {
        file: String,
        #[arg(long)]
        point: usize,
        #[arg(short = 'o')]
        output: Option<String>,
    },
    /// Equivariant connected sum at a pair of isolated fixed points.
    Consum {
        file_a: String,
        file_b: String,
        #[arg(long, value_delimiter = ',', num_args = 1)]
        points: Vec<usize>,
        #[arg(short = 'o')]
        output: Option<String>,
    },
    /// Harmonic-morphism domain obstructions.
    Obstruct(ObstructArgs),
    /// Named manifolds understood by `obstruct --manifold`.
    Catalog {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// Linear action on CP^n with distinct integer weights.
    Cp {
        #[arg(
            long,
            value_delimiter = ',',
            num_args = 1,
            required = true,
            allow_hyphen_values = true
        )]
        weights: Vec<BigInt>,
        #[arg(short = 'o')]
        output: Option<String>,
    },
    /// Rotation action on S^{2n} with positive exponents.
    Sphere {
        #[arg(long, value_delimiter = ',', num_args = 1, required = true)]
        exponents: Vec<BigUint>,
        #[arg(short = 'o')]
        output: Option<String>,
    },
}

#[derive(Args, Debug)]
#[group(id = "source", required = true, multiple = true, args = ["manifold", "file", "euler"])]
struct ObstructArgs {
    #[arg(long, conflicts_with_all = ["file", "euler"])]
    manifold: Option<String>,
    #[arg(long, conflicts_with = "euler")]
    file: Option<String>,
    #[arg(long, requires = "signature", allow_negative_numbers = true)]
    euler: Option<BigInt>,
    #[arg(long, requires = "euler", allow_negative_numbers = true)]
    signature: Option<BigInt>,
    #[arg(long, requires = "euler", allow_hyphen_values = true)]
    p1: Option<ExactRational>,
    #[arg(long, requires = "euler", default_value_t = 4)]
    dimension: usize,
    #[arg(long)]
    json: bool,
}

/// Failure inside a subcommand: the exit status and what to print.
struct Failure {
    status: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::NotRealizable { .. } => 1,
            _ => 2,
        };
        Failure {
            status,
            message: format!("error: {e}"),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        status: 2,
        message: format!("error: {}\n{GRAMMAR}", message.into()),
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Io<'_> {
    fn read_input(&mut self, path: &str) -> Result<Vec<u8>, Failure> {
        if path == "-" {
            let mut buf = Vec::new();
            self.stdin.read_to_end(&mut buf).map_err(Error::from)?;
            Ok(buf)
        } else {
            fs::read(path).map_err(|e| Failure {
                status: 2,
                message: format!("error: cannot read {path}: {e}"),
            })
        }
    }

    fn read_action(&mut self, path: &str) -> Result<CircleActionData, Failure> {
        let bytes = self.read_input(path)?;
        parse(&bytes).map_err(|e| Failure {
            status: 2,
            message: format!("error: {path}: {e}"),
        })
    }

    /// Writes `text` to `target` (standard output when absent or `-`); true
    /// when it went to standard output.
    fn emit(&mut self, target: Option<&str>, text: &str) -> Result<bool, Failure> {
        match target {
            None | Some("-") => {
                self.out(text)?;
                Ok(true)
            }
            Some(path) => {
                fs::write(path, text).map_err(|e| Failure {
                    status: 2,
                    message: format!("error: cannot write {path}: {e}"),
                })?;
                Ok(false)
            }
        }
    }

    fn out(&mut self, text: &str) -> Result<(), Failure> {
        self.stdout
            .write_all(text.as_bytes())
            .map_err(Error::from)?;
        Ok(())
    }

    fn err(&mut self, text: &str) -> Result<(), Failure> {
        self.stderr
            .write_all(text.as_bytes())
            .map_err(Error::from)?;
        Ok(())
    }
}

fn with_convention(mut value: Value) -> Value {
    if let Value::Object(map) = &mut value {
        map.insert("convention".into(), Value::String(CONVENTION.into()));
    }
    value
}

fn invariants_text(report: &LocalizationReport) -> String {
    let mut text = format!("{}\n", report.invariants);
    if let Some(method) = report.signature_method {
        text.push_str(&format!("signature method: {}\n", method.tag()));
    }
    if !report.integral {
        text.push_str(
            "warning: non-integral Pontryagin numbers, no genuine action has this data\n",
        );
    }
    text.push_str(&format!("convention: {CONVENTION}\n"));
    text
}

fn verdict_text(verdict: &Verdict) -> String {
    let status = match &verdict.outcome {
        Outcome::Pass => "PASS".to_string(),
        Outcome::Fail => "FAIL".to_string(),
        Outcome::Inapplicable(reason) => format!("NOT APPLICABLE ({reason})"),
    };
    let mut text = format!("theorem {}: {status}\n", verdict.theorem.tag());
    if let Value::Object(details) = &verdict.to_json()["details"] {
        for (key, value) in details {
            text.push_str(&format!("  {key}: {value}\n"));
        }
    }
    text.push_str(&format!("convention: {CONVENTION}\n"));
    text
}

fn obstruction_text(inv: &ManifoldInvariants, verdict: &ObstructionVerdict) -> String {
    format!("{inv}\n{verdict}\nconvention: {CONVENTION}\n")
}

fn bookkeeping_text(report: &BookkeepingReport) -> String {
    format!("{report}convention: {CONVENTION}\n")
}

fn cmd_gen(io: &mut Io, kind: GenKind) -> Result<i32, Failure> {
    let (data, output) = match kind {
        GenKind::Cp { weights, output } => (cp_action(&weights)?, output),
        GenKind::Sphere { exponents, output } => (sphere_action(&exponents)?, output),
    };
    io.emit(output.as_deref(), &serialize(&data))?;
    Ok(0)
}

fn cmd_invariants(io: &mut Io, file: &str, json: bool) -> Result<i32, Failure> {
    let data = io.read_action(file)?;
    let report = invariants(&data)?;
    let text = if json {
        to_pretty(&report.to_json())
    } else {
        invariants_text(&report)
    };
    io.out(&text)?;
    Ok(0)
}

fn cmd_verify(io: &mut Io, file: &str, theorem: &str, json: bool) -> Result<i32, Failure> {
    let theorem = Theorem::from_tag(theorem)
        .ok_or_else(|| usage(format!("unknown theorem '{theorem}', expected 1.1 or 2.8")))?;
    let data = io.read_action(file)?;
    let verdict = verify(&data, theorem)?;
    let text = if json {
        to_pretty(&with_convention(verdict.to_json()))
    } else {
        verdict_text(&verdict)
    };
    io.out(&text)?;
    Ok(if verdict.outcome == Outcome::Fail {
        1
    } else {
        0
    })
}

/// Data goes to `-o` (standard output by default); the bookkeeping report
/// goes to whichever stream the data did not use.
fn finish_surgery(
    io: &mut Io,
    result: &CircleActionData,
    report: &BookkeepingReport,
    output: Option<&str>,
) -> Result<i32, Failure> {
    let on_stdout = io.emit(output, &serialize(result))?;
    let text = bookkeeping_text(report);
    if on_stdout {
        io.err(&text)?;
    } else {
        io.out(&text)?;
    }
    Ok(if report.consistent() { 0 } else { 1 })
}

fn cmd_blowup(io: &mut Io, file: &str, point: usize, output: Option<&str>) -> Result<i32, Failure> {
    let data = io.read_action(file)?;
    let op = SurgeryOp::blow_up_of(&data, point)?;
    let result = blow_up(&data, point)?;
    let report = bookkeeping(&data, &result, &op);
    finish_surgery(io, &result, &report, output)
}

fn cmd_consum(
    io: &mut Io,
    file_a: &str,
    file_b: &str,
    points: &[usize],
    output: Option<&str>,
) -> Result<i32, Failure> {
    let &[ia, ib] = points else {
        return Err(usage("--points takes exactly two indices, as I,J"));
    };
    if file_a == "-" && file_b == "-" {
        return Err(usage("only one input can be standard input"));
    }
    let a = io.read_action(file_a)?;
    let b = io.read_action(file_b)?;
    let result = connected_sum(&a, ia, &b, ib)?;
    let op = SurgeryOp::ConnectedSum {
        point: ia,
        partner: b,
        partner_point: ib,
    };
    let report = bookkeeping(&a, &result, &op);
    finish_surgery(io, &result, &report, output)
}

fn manual_invariants(args: &ObstructArgs) -> Result<ManifoldInvariants, Failure> {
    let mut inv = ManifoldInvariants::new(args.dimension);
    inv.set_euler(args.euler.clone());
    inv.set_signature(args.signature.clone());
    if let Some(p1) = &args.p1 {
        if args.dimension != 4 {
            return Err(usage("--p1 is only meaningful with --dimension 4"));
        }
        inv.set_pontryagin(&Partition::single(1), Some(p1.clone()))?;
    }
    Ok(inv)
}

fn cmd_obstruct(io: &mut Io, args: &ObstructArgs) -> Result<i32, Failure> {
    let inv = if let Some(name) = &args.manifold {
        catalog(name)?
    } else if let Some(file) = &args.file {
        let bytes = io.read_input(file)?;
        parse_invariants(&bytes).map_err(|e| Failure {
            status: 2,
            message: format!("error: {file}: {e}"),
        })?
    } else {
        manual_invariants(args)?
    };
    let verdict = check_domain(&inv)?;
    let text = if args.json {
        let mut value = verdict.to_json();
        if let Value::Object(map) = &mut value {
            map.insert(
                "invariants".into(),
                crate::actiondata::invariants_to_value(&inv),
            );
        }
        to_pretty(&with_convention(value))
    } else {
        obstruction_text(&inv, &verdict)
    };
    io.out(&text)?;
    Ok(if verdict.admissible == Admissible::No {
        1
    } else {
        0
    })
}

fn cmd_catalog(io: &mut Io, json: bool) -> Result<i32, Failure> {
    let mut entries = Vec::new();
    let mut text = String::new();
    for (template, example) in CATALOG_TEMPLATES {
        let inv = catalog(example)?;
        let verdict = check_domain(&inv)?;
        let mut m = Map::new();
        m.insert("name".into(), Value::String((*template).into()));
        m.insert("example".into(), Value::String((*example).into()));
        m.insert(
            "invariants".into(),
            crate::actiondata::invariants_to_value(&inv),
        );
        m.insert(
            "admissible".into(),
            Value::String(verdict.admissible.as_str().into()),
        );
        entries.push(Value::Object(m));
        let show =
            |v: Option<&BigInt>| v.map_or_else(|| "unknown".to_string(), ToString::to_string);
        text.push_str(&format!(
            "{:<12} e.g. {:<10} dim {:<3} euler {:<8} signature {:<8} admissible {}\n",
            template,
            example,
            inv.dimension(),
            show(inv.euler()),
            show(inv.signature()),
            verdict.admissible.as_str()
        ));
    }
    if json {
        let mut root = Map::new();
        root.insert("manifolds".into(), Value::Array(entries));
        io.out(&to_pretty(&with_convention(Value::Object(root))))?;
    } else {
        text.push_str(&format!("convention: {CONVENTION}\n"));
        io.out(&text)?;
    }
    Ok(0)
}

/// Runs the command line `argv` (program name first) and returns the exit
/// status.
pub fn run<I, T>(
    argv: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(stderr, "{}\n{GRAMMAR}\n", e.render());
                    2
                }
            };
        }
    };
    let mut io = Io {
        stdin,
        stdout,
        stderr,
    };
    let result = match cli.command {
        Command::Gen { kind } => cmd_gen(&mut io, kind),
        Command::Invariants { file, json } => cmd_invariants(&mut io, &file, json),
        Command::Verify {
            file,
            theorem,
            json,
        } => cmd_verify(&mut io, &file, &theorem, json),
        Command::Blowup {
            file,
            point,
            output,
        } => cmd_blowup(&mut io, &file, point, output.as_deref()),
        Command::Consum {
            file_a,
            file_b,
            points,
            output,
        } => cmd_consum(&mut io, &file_a, &file_b, &points, output.as_deref()),
        Command::Obstruct(args) => cmd_obstruct(&mut io, &args),
        Command::Catalog { json } => cmd_catalog(&mut io, json),
    };
    match result {
        Ok(status) => status,
        Err(f) => {
            let _ = writeln!(io.stderr, "{}", f.message);
            f.status
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut stdin = input.as_bytes();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("circloc").chain(args.iter().copied());
        let status = run(argv, &mut stdin, &mut out, &mut err);
        (
            status,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn cp2_pipeline() {
        let (s, data, _) = call(&["gen", "cp", "--weights", "0,1,2"], "");
        assert_eq!(s, 0);
        let (s, out, _) = call(&["invariants", "-", "--json"], &data);
        assert_eq!(s, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["invariants"]["euler"], 3);
        assert_eq!(v["invariants"]["signature"], 1);
        assert_eq!(v["invariants"]["pontryagin"]["p1"], 3);
        assert_eq!(v["convention"], CONVENTION);
    }

    #[test]
    fn negative_weights_accepted() {
        let (s, data, err) = call(&["gen", "cp", "--weights", "-1,0,1"], "");
        assert_eq!(s, 0, "{err}");
        let (_, out, _) = call(&["invariants", "-"], &data);
        assert!(out.contains("euler:     3"));
        assert!(out.contains("convention: "));
    }

    #[test]
    fn k3_blocked() {
        let (s, out, _) = call(&["obstruct", "--manifold", "K3"], "");
        assert_eq!(s, 1);
        assert!(out.contains("signature=0"));
        assert!(out.contains("-16"));
        assert!(out.contains("Theorem 3.3"));
    }

    #[test]
    fn manual_obstruct() {
        let (s, out, _) = call(
            &["obstruct", "--euler", "0", "--signature", "0", "--json"],
            "",
        );
        assert_eq!(s, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["admissible"], "yes");
        assert_eq!(v["critical_points"], 0);
        let (s, _, _) = call(&["obstruct", "--euler", "-2", "--signature", "0"], "");
        assert_eq!(s, 1);
        let (s, _, _) = call(
            &["obstruct", "--euler", "2", "--signature", "0", "--p1", "3"],
            "",
        );
        assert_eq!(s, 2);
        let (s, _, _) = call(
            &[
                "obstruct",
                "--euler",
                "2",
                "--signature",
                "0",
                "--p1",
                "3",
                "--dimension",
                "8",
            ],
            "",
        );
        assert_eq!(s, 2);
    }

    #[test]
    fn usage_errors() {
        for args in [
            &["frobnicate"][..],
            &["obstruct"],
            &[
                "obstruct",
                "--manifold",
                "K3",
                "--euler",
                "1",
                "--signature",
                "0",
            ],
            &["obstruct", "--euler", "1"],
            &["invariants"],
            &["gen", "cp"],
            &["consum", "a", "b", "--points", "1"],
        ] {
            let (s, _, err) = call(args, "");
            assert_eq!(s, 2, "{args:?}");
            assert!(err.contains("usage:"), "{args:?}: {err}");
        }
        let (s, _, err) = call(&["verify", "-", "--theorem", "9.9"], "");
        assert_eq!(s, 2);
        assert!(err.contains("usage:"));
    }

    #[test]
    fn file_errors() {
        let (s, _, err) = call(&["invariants", "/nonexistent/x.json"], "");
        assert_eq!(s, 2);
        assert!(err.contains("cannot read"));
        let (s, _, err) = call(&["invariants", "-"], "{\"half_dimension\": 2,");
        assert_eq!(s, 2);
        assert!(err.contains("line"));
        let (s, _, _) = call(&["obstruct", "--manifold", "Klein bottle"], "");
        assert_eq!(s, 2);
    }

    #[test]
    fn verify_single_point_fails() {
        let single = r#"{"half_dimension": 2, "isolated": [{"exponents": [1, 1], "sign": 1}]}"#;
        let (s, out, _) = call(&["verify", "-", "--theorem", "1.1", "--json"], single);
        assert_eq!(s, 1);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["pass"], false);
        assert_eq!(v["details"]["sign_sum"], 1);
    }

    #[test]
    fn blowup_reports_on_stderr() {
        let (_, data, _) = call(&["gen", "sphere", "--exponents", "1,1"], "");
        let (s, out, err) = call(&["blowup", "-", "--point", "0"], &data);
        assert_eq!(s, 0, "{err}");
        assert!(out.starts_with('{'));
        assert!(err.contains("blow-up"));
        assert!(err.contains("signature"));
        let (s, _, _) = call(&["blowup", "-", "--point", "7"], &data);
        assert_eq!(s, 2);
    }

    #[test]
    fn catalog_lists_templates() {
        let (s, out, _) = call(&["catalog"], "");
        assert_eq!(s, 0);
        for (template, _) in CATALOG_TEMPLATES {
            assert!(out.contains(template));
        }
        let (s, out, _) = call(&["catalog", "--json"], "");
        assert_eq!(s, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(
            v["manifolds"].as_array().unwrap().len(),
            CATALOG_TEMPLATES.len()
        );
    }

    #[test]
    fn help_is_success() {
        let (s, out, _) = call(&["--help"], "");
        assert_eq!(s, 0);
        assert!(out.contains("obstruct"));
    }
}
