//! The `aka` command line.
//!
//! ```text
//! aka demo              [--variant V] [--seed N] [--order O] ...
//! aka attack replay     [--variant V] [--seed N] [--delay T] [--no-rewrite] ...
//! aka attack ephemeral  [--variant V] [--seed N] [--delay T] ...
//! aka selftest          [--seeds N] ...
//! aka keygen --id ID    [--seed N] ...
//! ```
//!
//! Exit status: 0 on completion (and a matching `--expect`), 1 when the
//! outcome differs from `--expect`, 2 on usage or configuration errors.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::group::{CurveParams, Point};
use crate::ibs::{extract_key, pkg_setup, EntityKeyPair, Identity};
use crate::protocol::{Variant, DEFAULT_WINDOW};
use crate::rng::seeded;
use crate::selftest;
use crate::sim::{MessageOrder, Role, Scenario, DEFAULT_DELAY};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "aka",
    about = "Identity-based key agreement: honest runs, attacks and self-tests"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one honest exchange and print its transcript.
    Demo {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = OrderArg::ServerFirst)]
        order: OrderArg,
    },
    /// Run a scripted attack and print its report.
    Attack {
        #[command(subcommand)]
        kind: AttackCmd,
    },
    /// Run the invariant sweeps.
    Selftest {
        #[command(flatten)]
        common: Common,
        /// Seeds per sweep.
        #[arg(long, default_value_t = 20)]
        seeds: u64,
    },
    /// Run PKG setup and extract a key pair for one identity.
    Keygen {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        id: String,
    },
}

#[derive(Debug, Subcommand)]
enum AttackCmd {
    /// Replay a captured message with its timestamp refreshed.
    Replay {
        #[command(flatten)]
        attack: AttackArgs,
        /// Replay the captured bytes unchanged.
        #[arg(long)]
        no_rewrite: bool,
    },
    /// Replay with the captured message's ephemeral secret leaked.
    Ephemeral {
        #[command(flatten)]
        attack: AttackArgs,
    },
}

#[derive(Debug, Args)]
struct AttackArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, default_value_t = DEFAULT_DELAY)]
    delay: u64,
    /// Which party receives the replayed message.
    #[arg(long, value_enum, default_value_t = VictimArg::Client)]
    victim: VictimArg,
}

#[derive(Debug, Args)]
struct Common {
    #[arg(long, value_enum, default_value_t = VariantArg::Flawed)]
    variant: VariantArg,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Freshness window in ticks.
    #[arg(long, default_value_t = DEFAULT_WINDOW)]
    window: u64,
    /// `toy` or a path to a curve parameter file.
    #[arg(long, default_value = "toy")]
    curve: String,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum)]
    expect: Option<Expect>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VariantArg {
    Flawed,
    Fixed,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Flawed => Variant::Flawed,
            VariantArg::Fixed => Variant::Fixed,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OrderArg {
    ServerFirst,
    ClientFirst,
    Parallel,
}

impl From<OrderArg> for MessageOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::ServerFirst => MessageOrder::ServerFirst,
            OrderArg::ClientFirst => MessageOrder::ClientFirst,
            OrderArg::Parallel => MessageOrder::Parallel,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VictimArg {
    Client,
    Server,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Expect {
    Succeeded,
    Defeated,
}

/// Reported when configuration cannot be loaded.
struct UsageError(String);

/// Parses `args` (program name first) and runs the command. Reports go to
/// `out` unless `--output` is given; diagnostics go to `err`.
pub fn run_cli<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(cli) {
        Ok((common_output, report, status)) => match emit(common_output, &report, out) {
            Ok(()) => status,
            Err(UsageError(msg)) => {
                let _ = writeln!(err, "error: {msg}");
                EXIT_USAGE
            }
        },
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn emit(output: Option<PathBuf>, report: &str, out: &mut dyn Write) -> Result<(), UsageError> {
    match output {
        Some(path) => fs::write(&path, report).map_err(|e| UsageError(format!("cannot write {}: {e}", path.display()))),
        None => out
            .write_all(report.as_bytes())
            .map_err(|e| UsageError(format!("cannot write report: {e}"))),
    }
}

fn status_for(expect: Option<Expect>, succeeded: bool) -> i32 {
    match expect {
        Some(Expect::Succeeded) if !succeeded => EXIT_MISMATCH,
        Some(Expect::Defeated) if succeeded => EXIT_MISMATCH,
        _ => EXIT_OK,
    }
}

/// Loads `toy` or a curve parameter file.
pub fn load_curve(spec: &str) -> Result<CurveParams, String> {
    if spec.eq_ignore_ascii_case("toy") {
        return Ok(CurveParams::toy());
    }
    let text = fs::read_to_string(spec).map_err(|e| format!("cannot read curve file {spec}: {e}"))?;
    text.parse().map_err(|e| format!("curve file {spec}: {e}"))
}

fn scenario(common: &Common) -> Result<Scenario, UsageError> {
    let curve = load_curve(&common.curve).map_err(UsageError)?;
    Ok(Scenario::new(common.seed, common.variant.into())
        .with_curve(curve)
        .with_window(common.window))
}

type Execution = (Option<PathBuf>, String, i32);

fn execute(cli: Cli) -> Result<Execution, UsageError> {
    match cli.command {
        Command::Demo { common, order } => {
            let report = scenario(&common)?
                .run_honest(order.into())
                .map_err(|e| UsageError(format!("honest exchange failed: {e}")))?;
            let status = status_for(common.expect, report.keys_match());
            Ok((common.output, report.to_json() + "\n", status))
        }
        Command::Attack { kind } => {
            let (attack, rewrite, ephemeral) = match kind {
                AttackCmd::Replay { attack, no_rewrite } => (attack, !no_rewrite, false),
                AttackCmd::Ephemeral { attack } => (attack, true, true),
            };
            let victim = match attack.victim {
                VictimArg::Client => Role::Client,
                VictimArg::Server => Role::Server,
            };
            let s = scenario(&attack.common)?
                .with_delay(attack.delay)
                .with_rewrite(rewrite)
                .with_victim(victim);
            let report = if ephemeral {
                s.run_ephemeral_compromise()
            } else {
                s.run_replay()
            };
            let status = status_for(attack.common.expect, report.outcome.succeeded());
            Ok((attack.common.output, report.to_json() + "\n", status))
        }
        Command::Selftest { common, seeds } => {
            let curve = load_curve(&common.curve).map_err(UsageError)?;
            let results = selftest::run_all(&curve, seeds);
            let mut text = String::new();
            for r in &results {
                let verdict = if r.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(text, "{verdict} {} ({})", r.name, r.detail);
            }
            let all = results.iter().all(|r| r.passed);
            let _ = writeln!(text, "{}", if all { "selftest passed" } else { "selftest FAILED" });
            let status = match common.expect {
                None if !all => EXIT_MISMATCH,
                e => status_for(e, all),
            };
            Ok((common.output, text, status))
        }
        Command::Keygen { common, id } => {
            let curve = load_curve(&common.curve).map_err(UsageError)?;
            let id = Identity::new(id).map_err(|e| UsageError(e.to_string()))?;
            let mut rng = seeded(common.seed);
            let master = pkg_setup(&curve, &mut rng);
            let keys = extract_key(&curve, &master, &id, &mut rng);
            Ok((common.output, write_key_file(&keys), EXIT_OK))
        }
    }
}

/// Renders `id`, `s`, `rx`, `ry` in the `key = value` style of curve files.
/// The private key is stored in the clear.
pub fn write_key_file(keys: &EntityKeyPair) -> String {
    let (rx, ry) = match keys.public() {
        Point::Affine { x, y } => (x.to_string(), y.to_string()),
        Point::Identity => unreachable!("extracted public keys are never the identity"),
    };
    format!(
        "# demo key material, private key in the clear\nid = {}\ns = {}\nrx = {rx}\nry = {ry}\n",
        keys.id(),
        keys.secret()
    )
}

/// Parses a key file written by [`write_key_file`]. `R` must lie on `curve`.
pub fn read_key_file(curve: &CurveParams, text: &str) -> Result<EntityKeyPair, String> {
    let mut id = None;
    let mut nums: [Option<BigUint>; 3] = Default::default();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| format!("expected `key = value`, got `{line}`"))?;
        let (k, v) = (k.trim(), v.trim());
        let slot = match k {
            "id" => {
                if id.replace(v.to_owned()).is_some() {
                    return Err("duplicate key `id`".into());
                }
                continue;
            }
            "s" => 0,
            "rx" => 1,
            "ry" => 2,
            other => return Err(format!("unknown key `{other}`")),
        };
        let n = (!v.is_empty() && v.bytes().all(|c| c.is_ascii_digit()))
            .then(|| BigUint::parse_bytes(v.as_bytes(), 10))
            .flatten()
            .ok_or_else(|| format!("`{k}` is not a decimal integer"))?;
        if nums[slot].replace(n).is_some() {
            return Err(format!("duplicate key `{k}`"));
        }
    }
    let id = Identity::new(id.ok_or("missing key `id`")?).map_err(|e| e.to_string())?;
    let [s, rx, ry] = nums;
    let s = s.ok_or("missing key `s`")?;
    if &s >= curve.order() {
        return Err("`s` is not reduced modulo q".into());
    }
    let r = Point::Affine {
        x: rx.ok_or("missing key `rx`")?,
        y: ry.ok_or("missing key `ry`")?,
    };
    if !curve.is_on_curve(&r) {
        return Err("R is not on the curve".into());
    }
    Ok(EntityKeyPair::from_parts(id, curve.scalar(s), r))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["aka"];
        argv.extend_from_slice(args);
        let code = run_cli(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(&[]).0, EXIT_USAGE);
        assert_eq!(run(&["attack", "bogus"]).0, EXIT_USAGE);
        assert_eq!(run(&["demo", "--variant", "weird"]).0, EXIT_USAGE);
        let (code, _, err) = run(&["demo", "--curve", "/nonexistent/curve"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("cannot read curve file"));
    }

    #[test]
    fn help_exits_0() {
        let (code, out, _) = run(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("attack"));
    }

    #[test]
    fn key_file_round_trip() {
        let c = CurveParams::toy();
        let mut rng = seeded(4);
        let master = pkg_setup(&c, &mut rng);
        let keys = extract_key(&c, &master, &Identity::new("server-1").unwrap(), &mut rng);
        let text = write_key_file(&keys);
        assert_eq!(read_key_file(&c, &text), Ok(keys));
        assert!(read_key_file(&c, &text.replace("s =", "t =")).is_err());
        assert!(read_key_file(&c, "id = a\ns = 1\nrx = 0\nry = 0\n").is_err());
        assert!(read_key_file(&c, "id = a\ns = 99\nrx = 5\nry = 1\n").is_err());
    }
}
