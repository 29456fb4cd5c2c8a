//! Command-line front end. [`execute`] does all the work so tests can drive
//! it without spawning a process.
//!
//! Exit codes: 0 success, 1 verification failure, 2 precondition or usage
//! failure, 3 I/O or parse error. Failures print one `error[kind]: reason`
//! line on stderr.

use std::fs;
use std::io::{Read, Write};
use std::path::Path;

use clap::{Parser, Subcommand};

use crate::catalog::{self, Builtin};
use crate::io::{format_code, FileError, StabilizerFile};
use crate::kl::{self, KlError};
use crate::pasting::{paste_correcting, PaddedCode, PasteError};
use crate::pauli::PauliOperator;
use crate::stabilizer::validate;
use crate::verification::{self, best_k, enumerate_errors, hamming_bound, BoundVerdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "qpaste", version, about = "Stabilizer codes and code pasting for one-error quantum codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a code and check that it corrects every single-qubit error.
    Verify {
        /// Stabilizer file, or `-` for stdin.
        file: String,
        /// Also brute-force the distance up to this weight.
        #[arg(long, value_name = "W", num_args = 0..=1, default_missing_value = "3")]
        distance: Option<usize>,
        /// Also run the dense error-correction-condition oracle.
        #[arg(long)]
        kl: bool,
        /// Largest n the dense oracle accepts.
        #[arg(long, default_value_t = kl::DEFAULT_QUBIT_CAP)]
        kl_cap: usize,
        /// Accept colliding syndromes when the two errors act identically.
        #[arg(long)]
        allow_degenerate: bool,
    },
    /// Paste the smaller code onto the larger one.
    Paste {
        larger: String,
        smaller: String,
        /// Identity rows appended to the larger code.
        #[arg(long, default_value_t = 0)]
        augment: usize,
        /// Identity rows prepended to the smaller code.
        #[arg(long, default_value_t = 0)]
        augment_smaller: usize,
        /// Correctable weight; only 1 is supported.
        #[arg(long, default_value_t = 1)]
        t: usize,
        #[arg(long)]
        out: Option<String>,
    },
    /// Emit a shipped code (code5, code8, code13).
    Catalog {
        name: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Emit a constructed code.
    Family {
        #[command(subcommand)]
        family: Family,
    },
    /// Quantum Hamming bound: best k for n, or the verdict for (n, k).
    Bound { n: usize, k: Option<usize> },
    /// Print every weight-≤1 error with its syndrome.
    Syndromes { file: String },
}

#[derive(Debug, Subcommand)]
enum Family {
    /// Code on 2^m qubits with X/Z rows.
    Hamming {
        m: usize,
        #[arg(long)]
        out: Option<String>,
    },
    /// j-th perfect one-error code.
    Perfect {
        j: usize,
        #[arg(long, default_value_t = catalog::DEFAULT_J_MAX)]
        j_max: usize,
        #[arg(long)]
        out: Option<String>,
    },
}

struct Failure {
    code: i32,
    kind: &'static str,
    reason: String,
}

impl Failure {
    fn io(reason: impl Into<String>) -> Self {
        Failure { code: EXIT_IO, kind: "io", reason: reason.into() }
    }
    fn parse(reason: impl Into<String>) -> Self {
        Failure { code: EXIT_IO, kind: "parse", reason: reason.into() }
    }
    fn precondition(reason: impl Into<String>) -> Self {
        Failure { code: EXIT_PRECONDITION, kind: "precondition", reason: reason.into() }
    }
    fn verify(reason: impl Into<String>) -> Self {
        Failure { code: EXIT_VERIFY, kind: "verify", reason: reason.into() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::io(e.to_string())
    }
}

struct Ctx<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn read(&mut self, path: &str) -> Result<String, Failure> {
        if path == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s)?;
            Ok(s)
        } else {
            fs::read_to_string(Path::new(path)).map_err(|e| Failure::io(format!("{path}: {e}")))
        }
    }

    fn read_file(&mut self, path: &str) -> Result<StabilizerFile, Failure> {
        let text = self.read(path)?;
        StabilizerFile::parse(&text).map_err(|e| Failure::parse(format!("{path}: {e}")))
    }

    fn emit(&mut self, out: Option<&str>, text: &str) -> Result<(), Failure> {
        match out {
            None | Some("-") => self.stdout.write_all(text.as_bytes())?,
            Some(path) => fs::write(path, text).map_err(|e| Failure::io(format!("{path}: {e}")))?,
        }
        Ok(())
    }

    fn say(&mut self, line: impl AsRef<str>) -> Result<(), Failure> {
        writeln!(self.stdout, "{}", line.as_ref())?;
        Ok(())
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the exit status.
pub fn execute<S: AsRef<str>>(
    args: &[S],
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args.iter().map(|s| s.as_ref())) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return EXIT_OK;
            }
            let first = e.to_string();
            let first = first.lines().next().unwrap_or("invalid arguments");
            let _ = writeln!(stderr, "error[usage]: {}", first.trim_start_matches("error: "));
            return EXIT_PRECONDITION;
        }
    };
    let mut ctx = Ctx { stdin, stdout };
    match run(cli.command, &mut ctx) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = ctx.stdout.flush();
            let _ = writeln!(stderr, "error[{}]: {}", f.kind, f.reason);
            f.code
        }
    }
}

fn run(command: Command, ctx: &mut Ctx<'_>) -> Result<(), Failure> {
    match command {
        Command::Verify { file, distance, kl, kl_cap, allow_degenerate } => {
            verify(ctx, &file, distance, kl.then_some(kl_cap), allow_degenerate)
        }
        Command::Paste { larger, smaller, augment, augment_smaller, t, out } => {
            paste_cmd(ctx, &larger, &smaller, augment, augment_smaller, t, out.as_deref())
        }
        Command::Catalog { name, out } => {
            let b: Builtin = name.parse().map_err(|e: catalog::CatalogError| Failure::precondition(e.to_string()))?;
            ctx.emit(out.as_deref(), &format_code(&catalog::builtin(b)))
        }
        Command::Family { family } => {
            let (code, out) = match family {
                Family::Hamming { m, out } => (catalog::hamming_class(m), out),
                Family::Perfect { j, j_max, out } => (catalog::perfect_with_limit(j, j_max), out),
            };
            let code = code.map_err(|e| Failure::precondition(e.to_string()))?;
            ctx.emit(out.as_deref(), &format_code(&code))
        }
        Command::Bound { n, k } => bound(ctx, n, k),
        Command::Syndromes { file } => syndromes(ctx, &file),
    }
}

fn perfect_note(n: usize, k: usize) -> &'static str {
    if verification::is_perfect(n, k) {
        "perfect"
    } else {
        "not perfect"
    }
}

fn verify(
    ctx: &mut Ctx<'_>,
    path: &str,
    distance: Option<usize>,
    kl_cap: Option<usize>,
    allow_degenerate: bool,
) -> Result<(), Failure> {
    let file = ctx.read_file(path)?;
    let n = file.num_qubits();
    let report = validate(n, &file.rows);
    let a = file.rows.len();
    ctx.say(format!("n={n} a={a} k={}", n.saturating_sub(a)))?;
    if file.has_placeholders() {
        let err = file.to_code().unwrap_err();
        ctx.say(format!("validate: FAIL {err}"))?;
        return Err(Failure::verify(err.to_string()));
    }
    if !report.passed() {
        ctx.say(format!("validate: FAIL {report}"))?;
        return Err(Failure::verify(format!("invalid stabilizer: {report}")));
    }
    ctx.say("validate: ok")?;
    let code = file.to_code().map_err(|e| Failure::verify(e.to_string()))?;
    let k = code.parameters().k;

    let mut failures = Vec::new();
    let d3 = verification::verify_distance3(&code, allow_degenerate);
    ctx.say(format!("distance3: {d3}"))?;
    if !d3.passed() {
        failures.push("distance3");
    }
    if d3.syndromes_bijective() {
        ctx.say("syndromes: bijective onto all 2^a values")?;
    }
    ctx.say(format!("bound: {} ({})", hamming_bound(n, k), perfect_note(n, k)))?;

    if let Some(w) = distance {
        let w = w.min(n);
        match verification::find_logical(&code, w) {
            Some(op) => {
                ctx.say(format!("distance: {} (logical {op})", op.weight()))?;
                if op.weight() < 3 {
                    failures.push("distance");
                }
            }
            None => ctx.say(format!("distance: none up to weight {w}"))?,
        }
    }

    if let Some(cap) = kl_cap {
        let errors = enumerate_errors(n, 1).expect("n >= 1");
        match kl::kl_check_with(&code, &errors, 1e-10, cap, Default::default()) {
            Ok(r) => {
                let ok = if allow_degenerate { r.passed() } else { r.nondegenerate() };
                ctx.say(format!(
                    "kl: {} (max deviation {:.3e}, rank {}/{}, {} codewords)",
                    if ok { "pass" } else { "FAIL" },
                    r.max_deviation,
                    r.rank,
                    r.c.len(),
                    r.codeword_count
                ))?;
                if !ok {
                    failures.push("kl");
                }
            }
            Err(e @ KlError::CapExceeded { .. }) => {
                ctx.say(format!("kl: refused ({e})"))?;
                return Err(Failure::precondition(format!("kl oracle refused: {e}")));
            }
            Err(e) => return Err(Failure::verify(format!("kl oracle: {e}"))),
        }
    }

    if failures.is_empty() {
        ctx.say("result: pass")?;
        Ok(())
    } else {
        ctx.say(format!("result: FAIL ({})", failures.join(", ")))?;
        Err(Failure::verify(format!("failed checks: {}", failures.join(", "))))
    }
}

fn padded_from(file: &StabilizerFile, label: &str) -> Result<PaddedCode, Failure> {
    file.to_padded().map_err(|e| match e {
        FileError::Code(c) => Failure::precondition(format!("{label}: {c}")),
        other => Failure::parse(format!("{label}: {other}")),
    })
}

fn extend_mask(padded: PaddedCode, count: usize, front: bool) -> PaddedCode {
    if count == 0 {
        return padded;
    }
    let mut mask = padded.placeholder_mask().to_vec();
    let extra = std::iter::repeat_n(true, count);
    if front {
        mask.splice(0..0, extra);
    } else {
        mask.extend(extra);
    }
    PaddedCode::with_mask(padded.base().clone(), mask).expect("only placeholders added")
}

fn paste_cmd(
    ctx: &mut Ctx<'_>,
    larger: &str,
    smaller: &str,
    augment: usize,
    augment_smaller: usize,
    t: usize,
    out: Option<&str>,
) -> Result<(), Failure> {
    let large_file = ctx.read_file(larger)?;
    let small_file = ctx.read_file(smaller)?;
    let large = extend_mask(padded_from(&large_file, "larger")?, augment, false);
    let small = extend_mask(padded_from(&small_file, "smaller")?, augment_smaller, true);
    match paste_correcting(&large, &small, t) {
        Ok(code) => {
            let text = format_code(&code);
            let p = code.parameters();
            match out {
                None | Some("-") => ctx.emit(None, &text),
                Some(path) => {
                    ctx.emit(Some(path), &text)?;
                    ctx.say(format!("pasted n={} a={} k={} -> {path}", p.n, p.a, p.k))
                }
            }
        }
        Err(PasteError::Precondition(d)) => {
            ctx.say(d.to_string())?;
            let names: Vec<&str> = d.failures().iter().map(|c| c.name()).collect();
            Err(Failure::precondition(format!("paste precondition failed: {}", names.join(", "))))
        }
        Err(e @ PasteError::MultiErrorUnsupported(_)) => Err(Failure::precondition(e.to_string())),
        Err(e @ PasteError::PostVerification(_)) => Err(Failure::verify(e.to_string())),
    }
}

fn bound(ctx: &mut Ctx<'_>, n: usize, k: Option<usize>) -> Result<(), Failure> {
    match k {
        None => match best_k(n) {
            Some(best) => ctx.say(format!("best k = {best} ({})", perfect_note(n, best))),
            None => {
                ctx.say("best k = none (bound excludes every k)")?;
                Err(Failure::verify(format!("no k satisfies the bound for n = {n}")))
            }
        },
        Some(k) => {
            let verdict = hamming_bound(n, k);
            ctx.say(format!("n={n} k={k}: {verdict} ({})", perfect_note(n, k)))?;
            if verdict == BoundVerdict::Violated {
                Err(Failure::verify(format!("bound violated for n = {n}, k = {k}")))
            } else {
                Ok(())
            }
        }
    }
}

fn syndromes(ctx: &mut Ctx<'_>, path: &str) -> Result<(), Failure> {
    let file = ctx.read_file(path)?;
    let errors = enumerate_errors(file.num_qubits(), 1).expect("n >= 1");
    let mut text = String::new();
    for e in errors.iter() {
        let bits: String = file
            .rows
            .iter()
            .map(|g: &PauliOperator| if g.commutes_with(e).expect("same length") { '0' } else { '1' })
            .collect();
        text.push_str(&format!("{e} {bits}\n"));
    }
    ctx.emit(None, &text)
}
