//! Associated primes of monomial ideals.
//!
//! Every associated prime of a monomial ideal is generated by a subset of
//! the variables, so `Ass(I)` is computed by deciding, for each candidate
//! subset `P`, whether `P` is associated. The decision uses monomial
//! localization: restrict the generators to the `P`-coordinates (set every
//! other variable to 1); `P` is associated to `I` exactly when the restricted
//! ideal `J` has a nonzero socle in the subring, i.e. `(J : P) != J`.
//! An exhaustive witness-search oracle over the divisor lattice of
//! `lcm(G(I))` is kept alongside for cross-checking.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::ring::RingContext;

/// Candidate-subset enumeration is exponential in the variable count; keep
/// it at desk scale.
pub const MAX_ASS_VARS: usize = 6;

/// A prime ideal generated by variables, stored as the sorted set of their
/// indices. Always nonempty.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialPrime {
    vars: Vec<usize>,
}

impl MonomialPrime {
    pub fn new<I: IntoIterator<Item = usize>>(vars: I) -> Result<Self> {
        let mut vars: Vec<usize> = vars.into_iter().collect();
        vars.sort_unstable();
        vars.dedup();
        if vars.is_empty() {
            return Err(Error::EmptyPrime);
        }
        Ok(Self { vars })
    }

    /// The prime generated by a single variable.
    pub fn single(i: usize) -> Self {
        Self { vars: vec![i] }
    }

    /// The graded maximal ideal (all variables).
    pub fn full(n: usize) -> Self {
        assert!(n >= 1);
        Self {
            vars: (0..n).collect(),
        }
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn contains_var(&self, i: usize) -> bool {
        self.vars.binary_search(&i).is_ok()
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.vars.iter().all(|i| other.contains_var(*i))
    }

    /// The ideal `(x_i : i in P)` over `ctx`.
    pub fn ideal(&self, ctx: &RingContext) -> Result<MonomialIdeal> {
        let n = ctx.n();
        for &i in &self.vars {
            if i >= n {
                return Err(Error::VarIndexOutOfRange { index: i, vars: n });
            }
        }
        MonomialIdeal::new(ctx, self.vars.iter().map(|&i| Monomial::var(i, n)))
    }

    /// Renders as `(x,y)` using the ring's variable names.
    pub fn label(&self, ctx: &RingContext) -> String {
        let names: Vec<&str> = self.vars.iter().map(|&i| ctx.var_name(i)).collect();
        format!("({})", names.join(","))
    }
}

/// True when `ideal` is contained in `p`, i.e. every generator is divisible
/// by some variable of `p`.
pub fn prime_contains_ideal(p: &MonomialPrime, ideal: &MonomialIdeal) -> bool {
    ideal
        .gens()
        .iter()
        .all(|g| p.vars().iter().any(|&i| g.exps()[i] > 0))
}

/// Restricts the generators to the coordinates of `p` (all other variables
/// set to 1) and minimizes. The result is the monomial localization of the
/// ideal at `p`, read inside the full ring.
fn restrict_to_prime(ideal: &MonomialIdeal, p: &MonomialPrime) -> MonomialIdeal {
    let cands = ideal
        .gens()
        .iter()
        .map(|g| {
            let exps = g
                .exps()
                .iter()
                .enumerate()
                .map(|(i, &e)| if p.contains_var(i) { e } else { 0 })
                .collect();
            Monomial::new(exps)
        })
        .collect();
    MonomialIdeal::from_candidates(ideal.ctx().clone(), cands)
}

/// `Ass(I)` for a nonzero proper monomial ideal.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<BTreeSet<MonomialPrime>> {
    if !ideal.is_proper_nonzero() {
        return Err(Error::NotProperNonzero);
    }
    let n = ideal.ctx().n();
    if n > MAX_ASS_VARS {
        return Err(Error::TooManyVariables { max: MAX_ASS_VARS });
    }
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << n) {
        let p =
            MonomialPrime::new((0..n).filter(|i| mask & (1 << i) != 0)).expect("mask is nonzero");
        let restricted = restrict_to_prime(ideal, &p);
        if restricted.is_unit() {
            // some generator has no variable of p, so I is not inside p
            continue;
        }
        if restricted.colon_prime(&p)? != restricted {
            out.insert(p);
        }
    }
    Ok(out)
}

/// The associated primes that are maximal with respect to inclusion.
pub fn max_primes(ideal: &MonomialIdeal) -> Result<BTreeSet<MonomialPrime>> {
    let ass = associated_primes(ideal)?;
    Ok(ass
        .iter()
        .filter(|p| !ass.iter().any(|q| *p != q && p.is_subset_of(q)))
        .cloned()
        .collect())
}

/// Calls `f` on every exponent vector componentwise below `bounds`.
pub(crate) fn for_each_in_box<F: FnMut(&[u32])>(bounds: &[u32], mut f: F) {
    let n = bounds.len();
    let mut cur = vec![0u32; n];
    loop {
        f(&cur);
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            if cur[i] < bounds[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// Exhaustive reference implementation of `Ass(I)`: enumerate every monomial
/// `u` dividing `lcm(G(I))`, keep `u` outside `I`, and test whether `(I : u)`
/// is generated by variables. Independent of the localization search above;
/// intended for cross-checks at desk scale.
pub fn associated_primes_exhaustive(ideal: &MonomialIdeal) -> Result<BTreeSet<MonomialPrime>> {
    if !ideal.is_proper_nonzero() {
        return Err(Error::NotProperNonzero);
    }
    let bounds = ideal.lcm_gens().expect("nonzero ideal");
    let mut out = BTreeSet::new();
    for_each_in_box(bounds.exps(), |exps| {
        let u = Monomial::new(exps.to_vec());
        if ideal.contains(&u) {
            return;
        }
        let colon = ideal.colon_monomial(&u);
        if !colon.is_zero() && colon.gens().iter().all(|g| g.degree() == 1) {
            let vars = colon
                .gens()
                .iter()
                .map(|g| g.exps().iter().position(|&e| e == 1).expect("degree 1"));
            out.insert(MonomialPrime::new(vars).expect("nonempty"));
        }
    });
    Ok(out)
}

/// The sets `Ass(I^k)` for `k = 1..=k_max`, together with the observed
/// stabilization data.
///
/// `stable_set` and `onset` describe the longest constant suffix of the
/// sequence; `confirmed` records whether the last `window` entries agree.
/// Stabilization is guaranteed for large `k`, but no effective bound is
/// available, so an unconfirmed profile only means the window was too small.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssProfile {
    pub per_power: Vec<BTreeSet<MonomialPrime>>,
    pub stable_set: BTreeSet<MonomialPrime>,
    pub onset: u32,
    pub confirmed: bool,
    pub window: u32,
}

impl AssProfile {
    /// `Ass(I^k)`; `k` is 1-based.
    pub fn ass_at(&self, k: u32) -> &BTreeSet<MonomialPrime> {
        &self.per_power[(k - 1) as usize]
    }

    pub fn k_max(&self) -> u32 {
        self.per_power.len() as u32
    }
}

pub(crate) fn ass_profile_from_powers(powers: &[MonomialIdeal], window: u32) -> Result<AssProfile> {
    let k_max = powers.len() as u32;
    if window < 1 || k_max < window {
        return Err(Error::BadWindow);
    }
    let per_power = powers
        .iter()
        .map(associated_primes)
        .collect::<Result<Vec<_>>>()?;
    let last = per_power.last().expect("k_max >= 1");
    let mut onset = k_max;
    while onset > 1 && per_power[(onset - 2) as usize] == *last {
        onset -= 1;
    }
    let confirmed = k_max - onset + 1 >= window;
    Ok(AssProfile {
        stable_set: last.clone(),
        per_power,
        onset,
        confirmed,
        window,
    })
}

/// Computes `Ass(I^k)` for `k = 1..=k_max` and reports the observed
/// stabilization (confirmed when the last `window` entries are identical).
pub fn ass_profile(ideal: &MonomialIdeal, k_max: u32, window: u32) -> Result<AssProfile> {
    if window < 1 || k_max < window {
        return Err(Error::BadWindow);
    }
    let powers = power_sequence(ideal, k_max)?;
    ass_profile_from_powers(&powers, window)
}

/// `[I, I^2, ..., I^k_max]`, sharing the incremental products.
pub(crate) fn power_sequence(ideal: &MonomialIdeal, k_max: u32) -> Result<Vec<MonomialIdeal>> {
    let mut powers = Vec::with_capacity(k_max as usize);
    powers.push(ideal.clone());
    for _ in 1..k_max {
        let next = powers.last().expect("nonempty").product(ideal)?;
        powers.push(next);
    }
    Ok(powers)
}
