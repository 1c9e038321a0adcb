//! Deterministic report rendering. Text reports start with a `#` header
//! line carrying the effective window settings; machine output is a single
//! JSON document with sorted keys. Identical input and flags produce
//! byte-identical output.

use serde_json::{json, Value};

use vnum_core::asymptotics::{
    AsymptoticsConfig, LawCheck, LawReport, LawStatus, LinearFit, VFunctionTable,
};
use vnum_core::primes::MonomialPrime;
use vnum_core::{MonomialIdeal, RingContext};

pub fn settings(cfg: &AsymptoticsConfig) -> String {
    format!(
        "max-power={} min-run={} window={}",
        cfg.k_max, cfg.min_run, cfg.window
    )
}

pub fn header(cmd: &str, middle: &[String], cfg: &AsymptoticsConfig) -> String {
    let mut parts = vec![format!("vnum {cmd}")];
    parts.extend(middle.iter().cloned());
    parts.push(settings(cfg));
    format!("# {}\n", parts.join(" | "))
}

pub fn ideal_parts(ideal: &MonomialIdeal) -> Vec<String> {
    vec![
        format!("vars: {}", ideal.ctx().names().join(", ")),
        format!("ideal: {}", ideal.display()),
    ]
}

pub fn fit_line(label: &str, fit: Option<&LinearFit>) -> String {
    match fit {
        Some(f) => format!(
            "fit {label}: slope {} intercept {} from k={} (run {})\n",
            f.slope, f.intercept, f.onset, f.run_length
        ),
        None => format!("fit {label}: none within window\n"),
    }
}

fn law_line(name: &str, check: &LawCheck) -> String {
    match check.status {
        LawStatus::Pass { onset } => format!(
            "{name}: PASS from k={onset} (checked k={}..{})\n",
            check.k_lo, check.k_hi
        ),
        LawStatus::Fail { witness_k } => format!(
            "{name}: FAIL at k={witness_k} (checked k={}..{})\n",
            check.k_lo, check.k_hi
        ),
        LawStatus::Inconclusive { at_k } => format!(
            "{name}: INCONCLUSIVE at k={at_k} (checked k={}..{})\n",
            check.k_lo, check.k_hi
        ),
    }
}

pub fn render_vfun(table: &VFunctionTable, ctx: &RingContext, min_run: u32) -> String {
    let mut out = String::new();
    let mut cols = vec!["k".to_string(), "v".to_string()];
    cols.extend(
        table
            .primes
            .iter()
            .map(|p| format!("v_{} [alpha,omega]", p.label(ctx))),
    );
    out.push_str(&cols.join(" | "));
    out.push('\n');
    for row in &table.rows {
        let mut cells = vec![row.k.to_string(), row.v.to_string()];
        for cell in &row.cells {
            cells.push(match cell {
                Some(vv) => format!("{} [{},{}]", vv.v, vv.alpha_mod, vv.omega_mod),
                None => "-".to_string(),
            });
        }
        out.push_str(&cells.join(" | "));
        out.push('\n');
    }
    out.push_str(&format!(
        "alpha = {}, omega = {}\n",
        table.alpha, table.omega
    ));
    out.push_str(&fit_line("v", table.v_fit(min_run).as_ref()));
    for (col, p) in table.primes.iter().enumerate() {
        out.push_str(&fit_line(
            &format!("v_{}", p.label(ctx)),
            table.prime_fit(col, min_run).as_ref(),
        ));
    }
    out
}

/// Overall verdict and process exit code: failed laws beat inconclusive
/// ones; a clean report exits 0.
pub fn verdict(report: &LawReport) -> (&'static str, i32) {
    if report.any_failed() {
        ("FAIL", 1)
    } else if report.any_inconclusive() {
        ("INCONCLUSIVE", 3)
    } else {
        ("PASS", 0)
    }
}

pub fn render_verify(report: &LawReport, ctx: &RingContext) -> String {
    let mut out = String::new();
    let stable: Vec<String> = report.table.primes.iter().map(|p| p.label(ctx)).collect();
    out.push_str(&format!(
        "ass profile: stable set {} from k={} ({})\n",
        if stable.is_empty() {
            "(none)".to_string()
        } else {
            stable.join(", ")
        },
        report.ass_onset,
        if report.ass_confirmed {
            "confirmed"
        } else {
            "window too small"
        }
    ));
    out.push_str(&format!(
        "alpha = {}, omega = {}\n",
        report.table.alpha, report.table.omega
    ));
    out.push_str(&fit_line("v", report.v_fit.as_ref()));
    for (p, fit) in report.table.primes.iter().zip(&report.prime_fits) {
        out.push_str(&fit_line(&format!("v_{}", p.label(ctx)), fit.as_ref()));
    }
    for (name, check) in report.laws() {
        out.push_str(&law_line(name, check));
    }
    out.push_str(&format!("result: {}\n", verdict(report).0));
    out
}

pub fn json_prime(p: &MonomialPrime, ctx: &RingContext) -> Value {
    Value::Array(
        p.vars()
            .iter()
            .map(|&i| Value::String(ctx.var_name(i).to_string()))
            .collect(),
    )
}

pub fn json_ideal(ideal: &MonomialIdeal) -> Value {
    json!({
        "vars": ideal.ctx().names(),
        "gens": ideal.gens().iter().map(|g| g.exps().to_vec()).collect::<Vec<_>>(),
    })
}

pub fn json_fit(fit: Option<&LinearFit>) -> Value {
    match fit {
        Some(f) => json!({
            "slope": f.slope,
            "intercept": f.intercept,
            "onset": f.onset,
            "run_length": f.run_length,
        }),
        None => Value::Null,
    }
}

pub fn json_table(table: &VFunctionTable, ctx: &RingContext, min_run: u32) -> Value {
    json!({
        "k_max": table.k_max,
        "alpha": table.alpha,
        "omega": table.omega,
        "primes": table.primes.iter().map(|p| json_prime(p, ctx)).collect::<Vec<_>>(),
        "rows": table.rows.iter().map(|row| json!({
            "k": row.k,
            "v": row.v,
            "cells": row.cells.iter().map(|cell| match cell {
                Some(vv) => json!({"v": vv.v, "alpha_mod": vv.alpha_mod, "omega_mod": vv.omega_mod}),
                None => Value::Null,
            }).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "fit_v": json_fit(table.v_fit(min_run).as_ref()),
        "fit_primes": (0..table.primes.len())
            .map(|col| json_fit(table.prime_fit(col, min_run).as_ref()))
            .collect::<Vec<_>>(),
    })
}

fn json_law(check: &LawCheck) -> Value {
    let (status, k) = match check.status {
        LawStatus::Pass { onset } => ("pass", onset),
        LawStatus::Fail { witness_k } => ("fail", witness_k),
        LawStatus::Inconclusive { at_k } => ("inconclusive", at_k),
    };
    json!({"status": status, "k": k, "checked": [check.k_lo, check.k_hi]})
}

pub fn json_report(report: &LawReport, ctx: &RingContext) -> Value {
    let laws: serde_json::Map<String, Value> = report
        .laws()
        .iter()
        .map(|(name, check)| (name.to_string(), json_law(check)))
        .collect();
    json!({
        "ass_onset": report.ass_onset,
        "ass_confirmed": report.ass_confirmed,
        "stable_primes": report.table.primes.iter().map(|p| json_prime(p, ctx)).collect::<Vec<_>>(),
        "fit_v": json_fit(report.v_fit.as_ref()),
        "fit_primes": report.prime_fits.iter().map(|f| json_fit(f.as_ref())).collect::<Vec<_>>(),
        "laws": Value::Object(laws),
        "result": verdict(report).0,
    })
}
