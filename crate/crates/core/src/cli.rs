//! Command-line front end. [`run`] returns the exit code and both output
//! streams so the binary and the tests share one code path.
//!
//! Exit codes: 0 when every requested check passes, 1 on a verification
//! failure, 2 on a usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::config::{parse_modulus, Config};
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::sequences::{crosscorr_all, crosscorr_distribution};
use crate::verify::{parse_suites, run_suite, search_three_valued, SearchReport, VerifyReport};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "mseqlab", version, about = "Crosscorrelation of m-sequences of periods 2^(2k)-1 and 2^k-1")]
pub struct RunConfig {
    /// Primitive modulus for GF(2^(2k)) as hex (bit i = coefficient of x^i)
    #[arg(long, global = true, value_name = "HEX")]
    pub modulus: Option<String>,
    /// TOML file with per-degree modulus overrides
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Output format; xcorr defaults to csv, everything else to text
    #[arg(long, global = true, value_enum)]
    pub output: Option<Output>,
    /// Worker threads; 0 uses every core
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    /// Report wall times as 0 so repeated runs are byte-identical
    #[arg(long, global = true)]
    pub no_timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Field parameters: modulus, generators, noncube
    FieldInfo {
        #[arg(long)]
        k: u32,
    },
    /// Crosscorrelation C_d(tau) of the long and the decimated short sequence
    Xcorr {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        d: u64,
        /// Print the value distribution instead of every shift
        #[arg(long)]
        dist: bool,
    },
    /// Exhaustive search for three-valued decimations
    Search {
        #[arg(long)]
        k: u32,
        /// Allow k = 13
        #[arg(long)]
        long_run: bool,
    },
    /// Run verification suites (comma-separated, or `all`)
    Verify {
        #[arg(long)]
        k: u32,
        #[arg(long, value_name = "NAME[,NAME...]")]
        suite: String,
    },
    /// Table of three-valued decimations for every odd k with 2k <= max-m
    Table1 {
        /// Largest m; defaults to 18, or 22 with --long-run
        #[arg(long)]
        max_m: Option<u32>,
        #[arg(long)]
        long_run: bool,
    },
}

/// Exit code and captured streams of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cfg.threads).build() {
        Ok(pool) => pool,
        Err(e) => return Outcome::usage(e),
    };
    match pool.install(|| dispatch(&cfg)) {
        Ok(out) => out,
        Err(Error::Mismatch(msg)) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(e) => Outcome::usage(e),
    }
}

fn field_for(cfg: &RunConfig, file: &Config, k: u32) -> Result<FieldCtx> {
    match &cfg.modulus {
        Some(hex) => FieldCtx::new(k, Some(parse_modulus(hex)?)),
        None => file.field(k),
    }
}

fn dispatch(cfg: &RunConfig) -> Result<Outcome> {
    let file = match &cfg.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    let fmt = |default| cfg.output.unwrap_or(default);
    let mut out = String::new();
    let mut code = 0;
    match &cfg.command {
        Command::FieldInfo { k } => {
            let ctx = field_for(cfg, &file, *k)?;
            field_info(&ctx, fmt(Output::Text), &mut out);
        }
        Command::Xcorr { k, d, dist } => {
            let ctx = field_for(cfg, &file, *k)?;
            xcorr(&ctx, *d, *dist, fmt(Output::Csv), &mut out)?;
        }
        Command::Search { k, long_run } => {
            let ctx = field_for(cfg, &file, *k)?;
            let rep = search_three_valued(&ctx, *long_run)?;
            if !(rep.conjecture_holds && rep.distributions_match) {
                code = 1;
            }
            search(&rep, fmt(Output::Text), &mut out);
        }
        Command::Verify { k, suite } => {
            let ctx = field_for(cfg, &file, *k)?;
            let mut reports = run_suite(&ctx, &parse_suites(suite)?)?;
            if cfg.no_timing {
                reports.iter_mut().for_each(|r| r.wall_time_ms = 0);
            }
            if reports.iter().any(|r| !r.pass) {
                code = 1;
            }
            verify(&reports, fmt(Output::Text), &mut out);
        }
        Command::Table1 { max_m, long_run } => {
            if cfg.modulus.is_some() {
                return Err(Error::Config("--modulus names one degree; use --config with table1".into()));
            }
            let max_m = max_m.unwrap_or(if *long_run { 22 } else { 18 });
            let mut rows = Vec::new();
            for k in (3..=max_m / 2).step_by(2) {
                let rep = search_three_valued(&file.field(k)?, *long_run)?;
                if !(rep.conjecture_holds && rep.distributions_match) {
                    code = 1;
                }
                rows.push(rep);
            }
            table1(&rows, fmt(Output::Text), &mut out);
        }
    }
    Ok(Outcome { code, stdout: out, stderr: String::new() })
}

fn field_info(ctx: &FieldCtx, fmt: Output, out: &mut String) {
    let spec = ctx.spec();
    let r = ctx.r().map(|r| r.to_hex());
    let rows = [
        ("k", spec.k.to_string()),
        ("m", spec.m.to_string()),
        ("modulus", format!("{:x}", spec.modulus)),
        ("order", ctx.order().to_string()),
        ("sub_order", ctx.sub_order().to_string()),
        ("alpha", ctx.alpha().to_hex()),
        ("beta", ctx.beta().to_hex()),
        ("r", r.clone().unwrap_or_else(|| "-".into())),
        ("log_tables", ctx.has_tables().to_string()),
    ];
    match fmt {
        Output::Json => {
            let v = json!({
                "k": spec.k,
                "m": spec.m,
                "modulus": format!("{:x}", spec.modulus),
                "order": ctx.order(),
                "sub_order": ctx.sub_order(),
                "alpha": ctx.alpha(),
                "beta": ctx.beta(),
                "r": r,
                "log_tables": ctx.has_tables(),
            });
            writeln!(out, "{v}").unwrap();
        }
        Output::Csv => rows.iter().for_each(|(key, v)| writeln!(out, "{key},{v}").unwrap()),
        Output::Text => rows.iter().for_each(|(key, v)| writeln!(out, "{key:<10} {v}").unwrap()),
    }
}

fn xcorr(ctx: &FieldCtx, d: u64, dist: bool, fmt: Output, out: &mut String) -> Result<()> {
    if dist {
        let dist = crosscorr_distribution(ctx, d)?;
        match fmt {
            Output::Json => writeln!(out, "{}", dist.to_json()).unwrap(),
            Output::Csv => out.push_str(&dist.to_csv()),
            Output::Text => {
                for (v, c) in &dist.entries {
                    writeln!(out, "C = {v:>8}  x {c}").unwrap();
                }
            }
        }
        return Ok(());
    }
    let values = crosscorr_all(ctx, d)?;
    match fmt {
        Output::Json => writeln!(out, "{}", serde_json::to_string(&values).unwrap()).unwrap(),
        Output::Csv => values.iter().enumerate().for_each(|(t, v)| writeln!(out, "{t},{v}").unwrap()),
        Output::Text => values.iter().enumerate().for_each(|(t, v)| writeln!(out, "tau = {t:>6}  C = {v}").unwrap()),
    }
    Ok(())
}

fn join(reps: &[u64], sep: &str) -> String {
    reps.iter().map(u64::to_string).collect::<Vec<_>>().join(sep)
}

fn search(rep: &SearchReport, fmt: Output, out: &mut String) {
    let predicted: Vec<u64> = rep.predicted.iter().map(|c| c.rep).collect();
    match fmt {
        Output::Json => writeln!(out, "{}", serde_json::to_string(rep).unwrap()).unwrap(),
        Output::Csv => {
            for c in &rep.found {
                writeln!(out, "{},{},{}", 2 * rep.k, c.rep, predicted.contains(&c.rep)).unwrap();
            }
        }
        Output::Text => {
            writeln!(out, "k = {}, m = {}, {} coprime cosets", rep.k, 2 * rep.k, rep.cosets_checked).unwrap();
            writeln!(out, "three-valued: {}", join(&rep.found_reps(), ", ")).unwrap();
            writeln!(out, "predicted:    {}", join(&predicted, ", ")).unwrap();
            let verdict = if rep.conjecture_holds { "equal" } else { "DIFFERENT" };
            writeln!(out, "sets are {verdict}; spectra match: {}", rep.distributions_match).unwrap();
        }
    }
}

fn verify(reports: &[VerifyReport], fmt: Output, out: &mut String) {
    match fmt {
        Output::Json => writeln!(out, "{}", serde_json::to_string(reports).unwrap()).unwrap(),
        Output::Csv => {
            for r in reports {
                let status = if r.pass { "pass" } else { "fail" };
                let n = r.counterexamples.len();
                writeln!(out, "{},{},{status},{},{n},{}", r.theorem, r.k, r.checked, r.wall_time_ms).unwrap();
            }
        }
        Output::Text => {
            for r in reports {
                let status = if r.pass { "PASS" } else { "FAIL" };
                writeln!(out, "{status} {:<12} k={} checked={} time={}ms", r.theorem, r.k, r.checked, r.wall_time_ms)
                    .unwrap();
                for c in &r.counterexamples {
                    let l = c.l.map(|l| format!(" l={l}")).unwrap_or_default();
                    let d = c.d.map(|d| format!(" d={d}")).unwrap_or_default();
                    let a = c.a.map(|a| format!(" a={a}")).unwrap_or_default();
                    writeln!(out, "    {l}{d}{a}: {}", c.detail).unwrap();
                }
            }
        }
    }
}

fn table1(rows: &[SearchReport], fmt: Output, out: &mut String) {
    match fmt {
        Output::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|r| json!({ "m": 2 * r.k, "d": r.found_reps(), "conjecture_holds": r.conjecture_holds }))
                .collect();
            writeln!(out, "{}", serde_json::Value::Array(v)).unwrap();
        }
        Output::Csv => rows.iter().for_each(|r| writeln!(out, "{},{}", 2 * r.k, join(&r.found_reps(), " ")).unwrap()),
        Output::Text => {
            writeln!(out, "{:>4}  d giving three-valued crosscorrelation", "m").unwrap();
            for r in rows {
                writeln!(out, "{:>4}  {}", 2 * r.k, join(&r.found_reps(), ", ")).unwrap();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &str) -> Outcome {
        run(std::iter::once("mseqlab").chain(args.split_whitespace()))
    }

    #[test]
    fn xcorr_distribution_csv() {
        let o = call("xcorr --k 3 --d 3 --dist");
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert_eq!(o.stdout, "-17,1\n-1,3\n7,3\n");
        let o = call("xcorr --k 3 --d 3");
        assert_eq!(o.stdout.lines().count(), 7);
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call("xcorr --k 3 --d 7").code, 2);
        assert_eq!(call("verify --k 3 --suite lemma10").code, 2);
        assert_eq!(call("field-info --k 3 --modulus 49").code, 2);
        assert_eq!(call("field-info --k 0").code, 2);
        assert_eq!(call("bogus").code, 2);
        assert_eq!(call("table1 --modulus 43").code, 2);
        assert!(call("field-info --k 3 --modulus zz").stderr.starts_with("error:"));
        assert_eq!(call("--help").code, 0);
    }

    #[test]
    fn verify_and_search() {
        let o = call("verify --k 5 --suite lemma1 --no-timing");
        assert_eq!(o.code, 0);
        assert_eq!(o.stdout, "PASS lemma1       k=5 checked=30 time=0ms\n");
        let o = call("search --k 5 --output csv");
        assert_eq!(o.stdout, "10,7,true\n10,11,true\n");
        let o = call("field-info --k 3 --output json");
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["modulus"], "43");
        assert_eq!(v["order"], 63);
    }

    #[test]
    fn thread_count_does_not_change_output() {
        let a = call("verify --k 5 --suite theorem1,lemma7 --no-timing --output json --threads 1");
        let b = call("verify --k 5 --suite theorem1,lemma7 --no-timing --output json --threads 3");
        assert_eq!(a, b);
    }
}
