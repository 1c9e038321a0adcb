//! The v-function `k -> v(I^k)` and the asymptotic laws it satisfies.
//!
//! For every stable prime the local v-function is eventually linear, the
//! overall v-function is eventually linear with slope `alpha(I)`, consecutive
//! values are sandwiched between `+alpha(I)` and `+omega(I)` steps, the
//! Ratliff property `(I^{k+1} : I) = I^k` holds for large `k`, and colons by
//! stable primes eventually factor as `(I^k : p) = I * (I^{k-1} : p)`.
//! None of these come with effective onset bounds, so the verifier works on
//! a finite window: it records the observed onset of each law and reports a
//! law that has not yet become true at the top of the window as
//! inconclusive, never as failed. All checks are exact integer comparisons.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::primes::{ass_profile_from_powers, power_sequence, AssProfile, MonomialPrime};
use crate::vnumber::{v_value_from_colon, VValue};

/// Window parameters shared by the table builder and the law verifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AsymptoticsConfig {
    /// Largest power to compute.
    pub k_max: u32,
    /// Minimum run length (in points) for a linear fit to count as confirmed.
    pub min_run: u32,
    /// Number of trailing identical `Ass(I^k)` sets required to call the
    /// profile stable.
    pub window: u32,
}

impl Default for AsymptoticsConfig {
    fn default() -> Self {
        Self {
            k_max: 12,
            min_run: 4,
            window: 3,
        }
    }
}

/// One row of the v-function table: `v(I^k)` plus, for each stable prime,
/// the local value and module degree bounds when the prime is associated to
/// `I^k` at that `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VRow {
    pub k: u32,
    pub v: u64,
    /// Parallel to `VFunctionTable::primes`; `None` when the prime is not in
    /// `Ass(I^k)`.
    pub cells: Vec<Option<VValue>>,
}

/// The v-function of an ideal over `k = 1..=k_max`, with per-prime columns
/// for the observed stable primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VFunctionTable {
    pub k_max: u32,
    pub alpha: u64,
    pub omega: u64,
    pub primes: Vec<MonomialPrime>,
    pub rows: Vec<VRow>,
}

impl VFunctionTable {
    pub fn v_values(&self) -> Vec<i64> {
        self.rows.iter().map(|r| r.v as i64).collect()
    }

    /// Fit of the `v(I^k)` column.
    pub fn v_fit(&self, min_run: u32) -> Option<LinearFit> {
        fit_from(1, &self.v_values(), min_run)
    }

    /// Fit of a stable prime's column over its longest contiguous present
    /// suffix.
    pub fn prime_fit(&self, col: usize, min_run: u32) -> Option<LinearFit> {
        let mut start = self.rows.len();
        while start > 0 && self.rows[start - 1].cells[col].is_some() {
            start -= 1;
        }
        let values: Vec<i64> = self.rows[start..]
            .iter()
            .map(|r| r.cells[col].as_ref().expect("suffix is present").v as i64)
            .collect();
        fit_from(start as u32 + 1, &values, min_run)
    }
}

/// A detected eventual linear form `value(k) = slope * k + intercept`,
/// holding from `k = onset` through the end of the window (`run_length`
/// points).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinearFit {
    pub slope: i64,
    pub intercept: i64,
    pub onset: u32,
    pub run_length: u32,
}

/// Finds the longest suffix of `values` (indexed from `k = start_k`) with a
/// constant first difference; `None` when it is shorter than `min_run`.
fn fit_from(start_k: u32, values: &[i64], min_run: u32) -> Option<LinearFit> {
    assert!(min_run >= 2, "a linear fit needs at least two points");
    let n = values.len();
    if n < 2 {
        return None;
    }
    let slope = values[n - 1] - values[n - 2];
    let mut i = n - 2;
    while i > 0 && values[i] - values[i - 1] == slope {
        i -= 1;
    }
    let run_length = (n - i) as u32;
    if run_length < min_run {
        return None;
    }
    let onset = start_k + i as u32;
    Some(LinearFit {
        slope,
        intercept: values[i] - slope * i64::from(onset),
        onset,
        run_length,
    })
}

/// Detects the eventual linear form of an integer sequence indexed from
/// `k = 1`: the longest suffix with constant first difference, reported when
/// it spans at least `min_run` points.
pub fn fit_eventual_linear(values: &[i64], min_run: u32) -> Option<LinearFit> {
    fit_from(1, values, min_run)
}

/// Per-power data shared by the table builder and the law checks.
struct Analysis {
    table: VFunctionTable,
    profile: AssProfile,
    /// `values[k-1]` maps every prime of `Ass(I^k)` to its local v-value.
    values: Vec<BTreeMap<MonomialPrime, VValue>>,
    /// `colons[k-1]` holds `(I^k : p)` for the same keys.
    colons: Vec<BTreeMap<MonomialPrime, MonomialIdeal>>,
}

fn analyze(ideal: &MonomialIdeal, powers: &[MonomialIdeal], window: u32) -> Result<Analysis> {
    let profile = ass_profile_from_powers(powers, window)?;
    let (alpha, omega) = ideal.alpha_omega()?;
    let primes: Vec<MonomialPrime> = profile.stable_set.iter().cloned().collect();

    let mut values = Vec::with_capacity(powers.len());
    let mut colons = Vec::with_capacity(powers.len());
    let mut rows = Vec::with_capacity(powers.len());
    for (idx, power) in powers.iter().enumerate() {
        let k = idx as u32 + 1;
        let mut value_map = BTreeMap::new();
        let mut colon_map = BTreeMap::new();
        for p in profile.ass_at(k) {
            let colon = power.colon_prime(p)?;
            let value = v_value_from_colon(power, p, &colon)?;
            value_map.insert(p.clone(), value);
            colon_map.insert(p.clone(), colon);
        }
        let v = value_map
            .values()
            .map(|vv| vv.v)
            .min()
            .ok_or(Error::MissingWitness)?;
        rows.push(VRow {
            k,
            v,
            cells: primes.iter().map(|p| value_map.get(p).cloned()).collect(),
        });
        values.push(value_map);
        colons.push(colon_map);
    }

    Ok(Analysis {
        table: VFunctionTable {
            k_max: powers.len() as u32,
            alpha,
            omega,
            primes,
            rows,
        },
        profile,
        values,
        colons,
    })
}

/// Computes the v-function table of `ideal` for `k = 1..=k_max`. Per-prime
/// columns cover the observed stable primes; `v(I^k)` itself minimizes over
/// the full `Ass(I^k)` of each power.
pub fn v_function(ideal: &MonomialIdeal, k_max: u32) -> Result<VFunctionTable> {
    if k_max < 1 {
        return Err(Error::KMaxTooSmall { min: 1 });
    }
    let powers = power_sequence(ideal, k_max)?;
    let window = AsymptoticsConfig::default().window.min(k_max);
    Ok(analyze(ideal, &powers, window)?.table)
}

/// Outcome of one law on the checked window.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LawStatus {
    /// Holds from `onset` through the top of the window.
    Pass { onset: u32 },
    /// Violated in a way the theory rules out; `witness_k` is the offending
    /// power.
    Fail { witness_k: u32 },
    /// Not (yet) true at the top of the window; a larger `k_max` may settle
    /// it.
    Inconclusive { at_k: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LawCheck {
    pub status: LawStatus,
    /// The `k` range the law was evaluated on.
    pub k_lo: u32,
    pub k_hi: u32,
}

impl LawCheck {
    pub fn passed(&self) -> bool {
        matches!(self.status, LawStatus::Pass { .. })
    }

    pub fn failed(&self) -> bool {
        matches!(self.status, LawStatus::Fail { .. })
    }

    pub fn inconclusive(&self) -> bool {
        matches!(self.status, LawStatus::Inconclusive { .. })
    }

    pub fn onset(&self) -> Option<u32> {
        match self.status {
            LawStatus::Pass { onset } => Some(onset),
            _ => None,
        }
    }
}

/// An eventual law: passes when true at the top of the window, recording the
/// smallest `k` from which it holds throughout; inconclusive otherwise.
fn eventual(checks: &[(u32, bool)], fallback_k: u32) -> LawCheck {
    let (k_lo, k_hi) = match (checks.first(), checks.last()) {
        (Some(&(lo, _)), Some(&(hi, _))) => (lo, hi),
        _ => {
            return LawCheck {
                status: LawStatus::Inconclusive { at_k: fallback_k },
                k_lo: fallback_k,
                k_hi: fallback_k,
            }
        }
    };
    if !checks.last().expect("nonempty").1 {
        return LawCheck {
            status: LawStatus::Inconclusive { at_k: k_hi },
            k_lo,
            k_hi,
        };
    }
    let mut onset = k_hi;
    for &(k, ok) in checks.iter().rev().skip(1) {
        if !ok {
            break;
        }
        onset = k;
    }
    LawCheck {
        status: LawStatus::Pass { onset },
        k_lo,
        k_hi,
    }
}

/// A law with no onset: any violation is a failure.
fn exact(checks: &[(u32, bool)]) -> LawCheck {
    let k_lo = checks.first().map_or(1, |c| c.0);
    let k_hi = checks.last().map_or(1, |c| c.0);
    match checks.iter().find(|(_, ok)| !ok) {
        Some(&(k, _)) => LawCheck {
            status: LawStatus::Fail { witness_k: k },
            k_lo,
            k_hi,
        },
        None => LawCheck {
            status: LawStatus::Pass { onset: k_lo },
            k_lo,
            k_hi,
        },
    }
}

/// The verdict on every asymptotic law, over the window it was checked on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub k_max: u32,
    pub min_run: u32,
    pub window: u32,
    pub table: VFunctionTable,
    pub ass_onset: u32,
    pub ass_confirmed: bool,
    pub v_fit: Option<LinearFit>,
    /// Parallel to `table.primes`.
    pub prime_fits: Vec<Option<LinearFit>>,
    pub monotone: LawCheck,
    pub sandwich: LawCheck,
    pub ratliff: LawCheck,
    pub colon_factorization: LawCheck,
    pub module_bounds: LawCheck,
    pub slope_equals_alpha: LawCheck,
    pub intercept_ge_minus_one: LawCheck,
    pub ass_stable: LawCheck,
}

impl LawReport {
    /// Law outcomes in report order.
    pub fn laws(&self) -> [(&'static str, &LawCheck); 8] {
        [
            ("monotone", &self.monotone),
            ("sandwich", &self.sandwich),
            ("ratliff", &self.ratliff),
            ("colon_factorization", &self.colon_factorization),
            ("module_bounds", &self.module_bounds),
            ("slope_equals_alpha", &self.slope_equals_alpha),
            ("intercept_ge_minus_one", &self.intercept_ge_minus_one),
            ("ass_stable", &self.ass_stable),
        ]
    }

    pub fn any_failed(&self) -> bool {
        self.laws().iter().any(|(_, c)| c.failed())
    }

    pub fn any_inconclusive(&self) -> bool {
        self.laws().iter().any(|(_, c)| c.inconclusive())
    }
}

/// Checks every asymptotic law on the window `k = 1..=k_max` (powers up to
/// `k_max + 1` are computed for the Ratliff colon).
///
/// Laws with an onset (monotonicity, the sandwich bounds, Ratliff, colon
/// factorization) are evaluated on the observed stable range of the Ass
/// profile. The fit-based laws use the confirmed fit of the `v(I^k)` column;
/// a confirmed fit whose slope differs from `alpha(I)` is reported
/// inconclusive, because a window that ends before the asymptote settles can
/// confirm a pre-asymptotic branch of the function.
pub fn verify_laws(ideal: &MonomialIdeal, cfg: &AsymptoticsConfig) -> Result<LawReport> {
    if cfg.k_max < 3 {
        return Err(Error::KMaxTooSmall { min: 3 });
    }
    if cfg.min_run < 2 {
        return Err(Error::BadMinRun);
    }
    if cfg.window < 1 || cfg.k_max < cfg.window {
        return Err(Error::BadWindow);
    }
    let k_max = cfg.k_max;
    let powers = power_sequence(ideal, k_max + 1)?;
    let mut analysis = analyze(ideal, &powers[..k_max as usize], cfg.window)?;
    let (alpha, omega) = (analysis.table.alpha, analysis.table.omega);
    let stable: Vec<MonomialPrime> = analysis.table.primes.clone();
    let onset = analysis.profile.onset;

    let row = |k: u32| &analysis.table.rows[(k - 1) as usize];
    let value = |k: u32, p: &MonomialPrime| -> &VValue {
        analysis.values[(k - 1) as usize]
            .get(p)
            .expect("stable prime present in stable range")
    };

    // (1) strict growth of v and of every stable local v-function
    let monotone_checks: Vec<(u32, bool)> = (onset + 1..=k_max)
        .map(|k| {
            let ok =
                row(k).v > row(k - 1).v && stable.iter().all(|p| value(k, p).v > value(k - 1, p).v);
            (k, ok)
        })
        .collect();

    // (2) v_p(I^{k-1}) + alpha <= v_p(I^k) <= v_p(I^{k-1}) + omega, and the
    // same sandwich for v itself
    let sandwich_checks: Vec<(u32, bool)> = (onset + 1..=k_max)
        .map(|k| {
            let v_ok = row(k - 1).v + alpha <= row(k).v && row(k).v <= row(k - 1).v + omega;
            let p_ok = stable.iter().all(|p| {
                let prev = value(k - 1, p).v;
                let cur = value(k, p).v;
                prev + alpha <= cur && cur <= prev + omega
            });
            (k, v_ok && p_ok)
        })
        .collect();

    // (3) (I^{k+1} : I) = I^k
    let ratliff_checks: Vec<(u32, bool)> = (onset..=k_max)
        .map(|k| {
            let quotient = powers[k as usize].colon_ideal(ideal);
            (k, quotient == powers[(k - 1) as usize])
        })
        .collect();

    // (4) (I^k : p) = I * (I^{k-1} : p) for each stable prime
    let mut colon_fact_checks: Vec<(u32, bool)> = Vec::new();
    for k in onset.max(2)..=k_max {
        let mut ok = true;
        for p in &stable {
            let current = analysis.colons[(k - 1) as usize]
                .get(p)
                .expect("stable prime in stable range");
            let prev = match analysis.colons[(k - 2) as usize].get(p) {
                Some(c) => c.clone(),
                // the prime need not be associated to I^{k-1} just below the
                // stable onset; compute the colon directly
                None => powers[(k - 2) as usize].colon_prime(p)?,
            };
            if *current != ideal.product(&prev)? {
                ok = false;
                break;
            }
        }
        colon_fact_checks.push((k, ok));
    }

    // (5) alpha_mod <= v_p <= omega_mod at every computed cell
    let module_checks: Vec<(u32, bool)> = (1..=k_max)
        .map(|k| {
            let ok = analysis.values[(k - 1) as usize]
                .values()
                .all(|vv| vv.alpha_mod <= vv.v && vv.v <= vv.omega_mod);
            (k, ok)
        })
        .collect();

    let v_fit = analysis.table.v_fit(cfg.min_run);
    let prime_fits: Vec<Option<LinearFit>> = (0..stable.len())
        .map(|col| analysis.table.prime_fit(col, cfg.min_run))
        .collect();

    // (6) the confirmed fit of v(I^k) has slope alpha(I)
    // (7) and intercept >= -1
    let fit_range = |c: LawStatus| LawCheck {
        status: c,
        k_lo: 1,
        k_hi: k_max,
    };
    let (slope_law, intercept_law) = match v_fit {
        None => (
            fit_range(LawStatus::Inconclusive { at_k: k_max }),
            fit_range(LawStatus::Inconclusive { at_k: k_max }),
        ),
        Some(fit) if fit.slope == alpha as i64 => {
            let slope_law = fit_range(LawStatus::Pass { onset: fit.onset });
            let intercept_law = if fit.intercept >= -1 {
                fit_range(LawStatus::Pass { onset: fit.onset })
            } else {
                fit_range(LawStatus::Fail {
                    witness_k: fit.onset,
                })
            };
            (slope_law, intercept_law)
        }
        // a confirmed pre-asymptotic branch: the window ended too early
        Some(_) => (
            fit_range(LawStatus::Inconclusive { at_k: k_max }),
            fit_range(LawStatus::Inconclusive { at_k: k_max }),
        ),
    };

    // (8) stability of the Ass profile itself
    let ass_stable = LawCheck {
        status: if analysis.profile.confirmed {
            LawStatus::Pass { onset }
        } else {
            LawStatus::Inconclusive { at_k: k_max }
        },
        k_lo: 1,
        k_hi: k_max,
    };

    let report = LawReport {
        k_max,
        min_run: cfg.min_run,
        window: cfg.window,
        ass_onset: onset,
        ass_confirmed: analysis.profile.confirmed,
        v_fit,
        prime_fits,
        monotone: eventual(&monotone_checks, k_max),
        sandwich: eventual(&sandwich_checks, k_max),
        ratliff: eventual(&ratliff_checks, k_max),
        colon_factorization: eventual(&colon_fact_checks, k_max),
        module_bounds: exact(&module_checks),
        slope_equals_alpha: slope_law,
        intercept_ge_minus_one: intercept_law,
        ass_stable,
        table: std::mem::replace(
            &mut analysis.table,
            VFunctionTable {
                k_max: 0,
                alpha: 0,
                omega: 0,
                primes: Vec::new(),
                rows: Vec::new(),
            },
        ),
    };
    Ok(report)
}
