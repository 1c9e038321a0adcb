//! Batch front end for the monomial-ideal engine.
//!
//! One subcommand per capability: `ass`, `v`, `vp`, `vfun`, `verify`,
//! `twovar`, `family`. Reports go to standard output (text by default,
//! `--format machine` for JSON); warnings and errors go to standard error.
//! Exit codes: 0 success (all laws pass), 1 a law or oracle comparison
//! failed, 2 input error, 3 inconclusive (window too small).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use vnum_core::asymptotics::{v_function, verify_laws, AsymptoticsConfig};
use vnum_core::primes::{associated_primes, MonomialPrime};
use vnum_core::twovar::{family_ideal, StaircaseIdeal};
use vnum_core::vnumber::{module_min_gens, v_number, v_p};
use vnum_core::{MonomialIdeal, RingContext};

pub mod csv;
pub mod parse;
pub mod report;

#[derive(Parser)]
#[command(
    name = "vnum",
    version,
    about = "v-numbers and v-functions of monomial ideals"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Args)]
struct InputOpt {
    /// Ideal description file (text or JSON form)
    #[arg(short = 'i', long = "ideal", value_name = "FILE")]
    ideal: PathBuf,
}

#[derive(Args)]
struct FormatOpt {
    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct WindowOpts {
    /// Largest power k to compute
    #[arg(long = "max-power", value_name = "K", default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
    max_power: u32,
    /// Minimum run length for a confirmed linear fit
    #[arg(long = "min-run", value_name = "N", default_value_t = 4, value_parser = clap::value_parser!(u32).range(2..))]
    min_run: u32,
    /// Trailing identical Ass sets required for a stable profile
    #[arg(long, value_name = "W", default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    window: u32,
}

impl WindowOpts {
    fn cfg(&self) -> AsymptoticsConfig {
        AsymptoticsConfig {
            k_max: self.max_power,
            min_run: self.min_run,
            window: self.window,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Associated primes of the ideal
    Ass {
        #[command(flatten)]
        input: InputOpt,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// The v-number v(I)
    V {
        #[command(flatten)]
        input: InputOpt,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// The local v-number at a prime, with the module generators
    Vp {
        #[command(flatten)]
        input: InputOpt,
        /// Prime as comma-separated variable names, e.g. `x,y`
        #[arg(long, value_name = "VARS")]
        prime: String,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// The v-function table over k = 1..=max-power
    Vfun {
        #[command(flatten)]
        input: InputOpt,
        #[command(flatten)]
        window: WindowOpts,
        /// Also write the table as CSV to this path
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Check the asymptotic laws on a finite power window
    Verify {
        #[command(flatten)]
        input: InputOpt,
        #[command(flatten)]
        window: WindowOpts,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Two-variable closed forms, diffed against the general engine
    Twovar {
        #[command(flatten)]
        input: InputOpt,
        #[command(flatten)]
        window: WindowOpts,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// The two-generator family with v(I^k) = slope*k + intercept
    Family {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        slope: u32,
        #[arg(long, allow_negative_numbers = true)]
        intercept: i64,
        #[command(flatten)]
        window: WindowOpts,
        #[command(flatten)]
        format: FormatOpt,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Parse(#[from] parse::ParseError),
    #[error("{0}")]
    Core(#[from] vnum_core::Error),
    #[error("cannot access `{path}`: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

/// Runs the CLI against the given arguments, writing reports to `out` and
/// diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                return 2;
            }
            let _ = write!(out, "{rendered}");
            return 0;
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn load_ideal(input: &InputOpt, err: &mut dyn Write) -> Result<MonomialIdeal, CliError> {
    let path = &input.ideal;
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let parsed = parse::parse_ideal(&text)?;
    for w in &parsed.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    Ok(parsed.ideal)
}

fn parse_prime(arg: &str, ctx: &RingContext) -> Result<MonomialPrime, CliError> {
    let mut vars = Vec::new();
    for name in arg.split(',') {
        let name = name.trim();
        let idx = ctx
            .names()
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| parse::ParseError {
                line: 1,
                col: 1,
                msg: format!("unknown variable `{name}` in --prime"),
            })?;
        vars.push(idx);
    }
    Ok(MonomialPrime::new(vars)?)
}

fn emit_json(out: &mut dyn Write, value: &Value) -> Result<(), CliError> {
    writeln!(out, "{value}").map_err(|source| CliError::Io {
        path: "<stdout>".to_string(),
        source,
    })
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    write!(out, "{text}").map_err(|source| CliError::Io {
        path: "<stdout>".to_string(),
        source,
    })
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let defaults = AsymptoticsConfig::default();
    match cli.cmd {
        Cmd::Ass { input, format } => {
            let ideal = load_ideal(&input, err)?;
            let ass = associated_primes(&ideal)?;
            let ctx = ideal.ctx();
            match format.format {
                Format::Text => {
                    emit(
                        out,
                        &report::header("ass", &report::ideal_parts(&ideal), &defaults),
                    )?;
                    for p in &ass {
                        emit(out, &format!("{}\n", p.label(ctx)))?;
                    }
                }
                Format::Machine => emit_json(
                    out,
                    &json!({
                        "command": "ass",
                        "ideal": report::json_ideal(&ideal),
                        "ass": ass.iter().map(|p| report::json_prime(p, ctx)).collect::<Vec<_>>(),
                    }),
                )?,
            }
            Ok(0)
        }
        Cmd::V { input, format } => {
            let ideal = load_ideal(&input, err)?;
            let v = v_number(&ideal)?;
            match format.format {
                Format::Text => {
                    emit(
                        out,
                        &report::header("v", &report::ideal_parts(&ideal), &defaults),
                    )?;
                    emit(out, &format!("{v}\n"))?;
                }
                Format::Machine => emit_json(
                    out,
                    &json!({"command": "v", "ideal": report::json_ideal(&ideal), "v": v}),
                )?,
            }
            Ok(0)
        }
        Cmd::Vp {
            input,
            prime,
            format,
        } => {
            let ideal = load_ideal(&input, err)?;
            let p = parse_prime(&prime, ideal.ctx())?;
            let value = v_p(&ideal, &p)?;
            let mg = module_min_gens(&ideal, &p)?;
            let ctx = ideal.ctx();
            match format.format {
                Format::Text => {
                    emit(
                        out,
                        &report::header("vp", &report::ideal_parts(&ideal), &defaults),
                    )?;
                    emit(out, &format!("v_{} = {}\n", p.label(ctx), value.v))?;
                    emit(out, &format!("alpha_mod = {}\n", value.alpha_mod))?;
                    emit(out, &format!("omega_mod = {}\n", value.omega_mod))?;
                    let show = |gens: &[vnum_core::Monomial]| {
                        gens.iter()
                            .map(|g| g.display(ctx))
                            .collect::<Vec<_>>()
                            .join(", ")
                    };
                    emit(out, &format!("module generators: {}\n", show(&mg.gens)))?;
                    emit(out, &format!("witnesses: {}\n", show(&mg.witnesses)))?;
                }
                Format::Machine => emit_json(
                    out,
                    &json!({
                        "command": "vp",
                        "ideal": report::json_ideal(&ideal),
                        "prime": report::json_prime(&p, ctx),
                        "v": value.v,
                        "alpha_mod": value.alpha_mod,
                        "omega_mod": value.omega_mod,
                        "module_gens": mg.gens.iter().map(|g| g.exps().to_vec()).collect::<Vec<_>>(),
                        "witnesses": mg.witnesses.iter().map(|g| g.exps().to_vec()).collect::<Vec<_>>(),
                    }),
                )?,
            }
            Ok(0)
        }
        Cmd::Vfun {
            input,
            window,
            csv: csv_path,
            format,
        } => {
            let ideal = load_ideal(&input, err)?;
            let cfg = window.cfg();
            let table = v_function(&ideal, cfg.k_max)?;
            let ctx = ideal.ctx();
            if let Some(path) = csv_path {
                let text = csv::write_csv(&table, ctx);
                std::fs::write(&path, text).map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                })?;
            }
            match format.format {
                Format::Text => {
                    emit(
                        out,
                        &report::header("vfun", &report::ideal_parts(&ideal), &cfg),
                    )?;
                    emit(out, &report::render_vfun(&table, ctx, cfg.min_run))?;
                }
                Format::Machine => emit_json(
                    out,
                    &json!({
                        "command": "vfun",
                        "ideal": report::json_ideal(&ideal),
                        "table": report::json_table(&table, ctx, cfg.min_run),
                    }),
                )?,
            }
            Ok(0)
        }
        Cmd::Verify {
            input,
            window,
            format,
        } => {
            let ideal = load_ideal(&input, err)?;
            let cfg = window.cfg();
            let law_report = verify_laws(&ideal, &cfg)?;
            let ctx = ideal.ctx();
            match format.format {
                Format::Text => {
                    emit(
                        out,
                        &report::header("verify", &report::ideal_parts(&ideal), &cfg),
                    )?;
                    emit(out, &report::render_verify(&law_report, ctx))?;
                }
                Format::Machine => emit_json(
                    out,
                    &json!({
                        "command": "verify",
                        "ideal": report::json_ideal(&ideal),
                        "report": report::json_report(&law_report, ctx),
                    }),
                )?,
            }
            Ok(report::verdict(&law_report).1)
        }
        Cmd::Twovar {
            input,
            window,
            format,
        } => {
            let ideal = load_ideal(&input, err)?;
            let cfg = window.cfg();
            run_twovar(&ideal, &cfg, format.format, out)
        }
        Cmd::Family {
            slope,
            intercept,
            window,
            format,
        } => {
            let cfg = window.cfg();
            run_family(slope, intercept, &cfg, format.format, out)
        }
    }
}

fn run_twovar(
    ideal: &MonomialIdeal,
    cfg: &AsymptoticsConfig,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let stair = StaircaseIdeal::from_ideal(ideal)?;
    let ctx = ideal.ctx();
    let full = MonomialPrime::full(2);
    let fmt_seq = |s: &[u32]| s.iter().map(u32::to_string).collect::<Vec<_>>().join(", ");
    let fmt_primes = |ps: &std::collections::BTreeSet<MonomialPrime>| {
        if ps.is_empty() {
            "(none)".to_string()
        } else {
            ps.iter()
                .map(|p| p.label(ctx))
                .collect::<Vec<_>>()
                .join(", ")
        }
    };

    let mut mismatches = 0usize;
    let mut lines = Vec::new();
    let mut checks = Vec::new();

    let ass_closed = stair.ass_closed_form();
    let ass_engine = associated_primes(ideal)?;
    let ok = ass_closed == ass_engine;
    mismatches += usize::from(!ok);
    lines.push(format!(
        "ass: closed-form {} | engine {} | {}",
        fmt_primes(&ass_closed),
        fmt_primes(&ass_engine),
        if ok { "OK" } else { "MISMATCH" }
    ));
    checks.push(json!({"what": "ass", "ok": ok}));

    let v_closed = stair.v_closed_form();
    let v_engine = v_number(ideal)?;
    let ok = v_closed == v_engine;
    mismatches += usize::from(!ok);
    lines.push(format!(
        "v: closed-form {v_closed} | engine {v_engine} | {}",
        if ok { "OK" } else { "MISMATCH" }
    ));
    checks.push(json!({"what": "v", "ok": ok}));

    if stair.m() > 1 {
        let closed = stair.v_m_closed_form().expect("not principal");
        let engine = v_p(ideal, &full)?.v;
        let ok = closed == engine;
        mismatches += usize::from(!ok);
        lines.push(format!(
            "v_m: closed-form {closed} | engine {engine} | {}",
            if ok { "OK" } else { "MISMATCH" }
        ));
        checks.push(json!({"what": "v_m", "ok": ok}));
    } else {
        lines.push("v_m: not associated (principal ideal)".to_string());
    }

    // per-power closed forms for the height-one primes
    let labelled: Vec<(MonomialPrime, String)> = [0usize, 1]
        .iter()
        .map(|&i| {
            (
                MonomialPrime::single(i),
                MonomialPrime::single(i).label(ctx),
            )
        })
        .collect();
    let mut power = ideal.clone();
    let mut closed_cols: Vec<Vec<u64>> = vec![Vec::new(), Vec::new()];
    let mut engine_cols: Vec<Vec<u64>> = vec![Vec::new(), Vec::new()];
    for k in 1..=cfg.k_max {
        if k > 1 {
            power = power.product(ideal)?;
        }
        let forms = stair.v_power_closed_forms(k);
        for (i, (p, _)) in labelled.iter().enumerate() {
            if let Some(&value) = forms.get(p) {
                closed_cols[i].push(value);
                engine_cols[i].push(v_p(&power, p)?.v);
            }
        }
    }
    for (i, (_, label)) in labelled.iter().enumerate() {
        if closed_cols[i].is_empty() {
            continue;
        }
        let ok = closed_cols[i] == engine_cols[i];
        mismatches += usize::from(!ok);
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        lines.push(format!(
            "v_{label} powers k=1..{}: closed-form {} | engine {} | {}",
            cfg.k_max,
            join(&closed_cols[i]),
            join(&engine_cols[i]),
            if ok { "OK" } else { "MISMATCH" }
        ));
        checks.push(json!({"what": format!("v_{label} powers"), "ok": ok}));
    }

    let result = if mismatches == 0 { "OK" } else { "MISMATCH" };
    match format {
        Format::Text => {
            emit(
                out,
                &report::header("twovar", &report::ideal_parts(ideal), cfg),
            )?;
            emit(out, &format!("a = {}\n", fmt_seq(stair.a())))?;
            emit(out, &format!("b = {}\n", fmt_seq(stair.b())))?;
            for line in lines {
                emit(out, &format!("{line}\n"))?;
            }
            emit(out, &format!("result: {result}\n"))?;
        }
        Format::Machine => emit_json(
            out,
            &json!({
                "command": "twovar",
                "ideal": report::json_ideal(ideal),
                "a": stair.a(),
                "b": stair.b(),
                "checks": checks,
                "result": result,
            }),
        )?,
    }
    Ok(if mismatches == 0 { 0 } else { 1 })
}

fn run_family(
    slope: u32,
    intercept: i64,
    cfg: &AsymptoticsConfig,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let ctx = RingContext::new(["x", "y"]).expect("fixed ring");
    let ideal = family_ideal(slope, intercept)?.to_ideal(&ctx)?;
    let table = v_function(&ideal, cfg.k_max)?;

    let mut mismatches = 0usize;
    let mut rows = Vec::new();
    for row in &table.rows {
        let expected = i64::from(slope) * i64::from(row.k) + intercept;
        let ok = row.v as i64 == expected;
        mismatches += usize::from(!ok);
        rows.push((row.k, row.v, expected, ok));
    }
    let result = if mismatches == 0 { "OK" } else { "MISMATCH" };

    match format {
        Format::Text => {
            let middle = vec![
                format!("slope={slope} intercept={intercept}"),
                format!("ideal: {}", ideal.display()),
            ];
            emit(out, &report::header("family", &middle, cfg))?;
            for (k, v, expected, ok) in rows {
                emit(
                    out,
                    &format!(
                        "k={k} v={v} expected={expected} {}\n",
                        if ok { "OK" } else { "MISMATCH" }
                    ),
                )?;
            }
            emit(out, &format!("result: {result}\n"))?;
        }
        Format::Machine => emit_json(
            out,
            &json!({
                "command": "family",
                "slope": slope,
                "intercept": intercept,
                "ideal": report::json_ideal(&ideal),
                "rows": rows.iter().map(|(k, v, expected, ok)| json!({
                    "k": k, "v": v, "expected": expected, "ok": ok,
                })).collect::<Vec<_>>(),
                "result": result,
            }),
        )?,
    }
    Ok(if mismatches == 0 { 0 } else { 1 })
}
