//! The v-number of a monomial ideal and its local versions.
//!
//! For an associated prime `p` of `I`, `v_p(I)` is the least degree of a
//! homogeneous `f` with `(I : f) = p`, and `v(I)` is the minimum of `v_p(I)`
//! over `Ass(I)`. The computation reduces to module generators: if `G` is a
//! minimal homogeneous generating set of `(I : p)/I`, then `v_p(I)` is the
//! least degree of a `g` in `G` with `(I : g) = p`, and this minimum is at
//! least `alpha((I : p)/I)`, with equality when `p` is maximal in `Ass(I)`.
//!
//! Monomial witnesses suffice. Lemma: for a monomial ideal `I` and a prime
//! `p` generated by variables, the minimal generators of the monomial module
//! `(I : p)/I` are exactly the monomials of `G(I : p)` outside `I`, and any
//! monomial `u` with `(I : u) = p` can be replaced by `u' = gcd(u, lcm G(I))`
//! with `deg u' <= deg u` and `(I : u') = (I : u)`. Sketch: `(I : u)` is
//! generated by `g / gcd(g, u)` over `g in G(I)`, and `gcd(g, u') = gcd(g, u)`
//! because every exponent of `g` is bounded by the corresponding exponent of
//! `lcm G(I)`; minimality of the module generators is graded Nakayama, which
//! for monomial modules says a monomial generator is non-minimal exactly when
//! it is a proper multiple of another one. Hence witness searches may be
//! restricted to the divisor lattice of `lcm(G(I))`, which is what makes the
//! exhaustive oracle below finite.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::primes::{associated_primes, for_each_in_box, MonomialPrime};

/// The minimal generators of `(I : p)/I`, with the sublist of witnesses
/// `g` satisfying `(I : g) = p`. The witness list is nonempty whenever
/// `p` is an associated prime of `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleGens {
    pub prime: MonomialPrime,
    pub gens: Vec<Monomial>,
    pub witnesses: Vec<Monomial>,
}

/// A computed local v-number together with the degree bounds of the module
/// `(I : p)/I`. Satisfies `alpha_mod <= v <= omega_mod`, with
/// `v == alpha_mod` whenever `p` is maximal in `Ass(I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VValue {
    pub prime: MonomialPrime,
    pub v: u64,
    pub alpha_mod: u64,
    pub omega_mod: u64,
}

/// Minimal generators of `(I : P)/I`: the members of `G(I : P)` outside `I`
/// (see the module lemma), each tested for being a colon witness.
pub fn module_min_gens(ideal: &MonomialIdeal, p: &MonomialPrime) -> Result<ModuleGens> {
    if !ideal.is_proper_nonzero() {
        return Err(Error::NotProperNonzero);
    }
    let colon = ideal.colon_prime(p)?;
    module_gens_from_colon(ideal, p, &colon)
}

/// As `module_min_gens`, reusing an already computed `(I : P)`.
pub(crate) fn module_gens_from_colon(
    ideal: &MonomialIdeal,
    p: &MonomialPrime,
    colon: &MonomialIdeal,
) -> Result<ModuleGens> {
    let target = p.ideal(ideal.ctx())?;
    let gens: Vec<Monomial> = colon
        .gens()
        .iter()
        .filter(|g| !ideal.contains(g))
        .cloned()
        .collect();
    let witnesses = gens
        .iter()
        .filter(|g| ideal.colon_monomial(g) == target)
        .cloned()
        .collect();
    Ok(ModuleGens {
        prime: p.clone(),
        gens,
        witnesses,
    })
}

/// As `v_p_unchecked`, reusing an already computed `(I : P)`.
pub(crate) fn v_value_from_colon(
    ideal: &MonomialIdeal,
    p: &MonomialPrime,
    colon: &MonomialIdeal,
) -> Result<VValue> {
    let mg = module_gens_from_colon(ideal, p, colon)?;
    // An associated prime always has a witness among the module generators;
    // a miss here is a bug, not bad input.
    let witness = mg.witnesses.first().ok_or(Error::MissingWitness)?;
    // gens inherit the graded order of G(I : P), so the ends carry the
    // degree extremes
    let alpha_mod = mg.gens.first().expect("witness exists").degree();
    let omega_mod = mg.gens.last().expect("witness exists").degree();
    Ok(VValue {
        prime: p.clone(),
        v: witness.degree(),
        alpha_mod,
        omega_mod,
    })
}

/// `v_p` without the `p in Ass(I)` membership check; callers guarantee it.
pub(crate) fn v_p_unchecked(ideal: &MonomialIdeal, p: &MonomialPrime) -> Result<VValue> {
    let colon = ideal.colon_prime(p)?;
    v_value_from_colon(ideal, p, &colon)
}

/// The local v-number `v_p(I)`, the least degree of a module generator of
/// `(I : p)/I` whose colon is exactly `p`. Requires `p in Ass(I)`.
pub fn v_p(ideal: &MonomialIdeal, p: &MonomialPrime) -> Result<VValue> {
    if !associated_primes(ideal)?.contains(p) {
        return Err(Error::NotAssociated);
    }
    v_p_unchecked(ideal, p)
}

/// The v-number `v(I) = min { v_p(I) : p in Ass(I) }`.
pub fn v_number(ideal: &MonomialIdeal) -> Result<u64> {
    let ass = associated_primes(ideal)?;
    let mut best: Option<u64> = None;
    for p in &ass {
        let value = v_p_unchecked(ideal, p)?.v;
        best = Some(best.map_or(value, |b| b.min(value)));
    }
    // a nonzero proper ideal has at least one associated prime
    best.ok_or(Error::MissingWitness)
}

/// Exhaustive oracle for `v_p`: scan every monomial dividing `lcm(G(I))`
/// and take the least degree with `(I : u) = p`. Independent of the module
/// generator route above; exponential in the lcm box, desk scale only.
pub fn v_p_bruteforce(ideal: &MonomialIdeal, p: &MonomialPrime) -> Result<u64> {
    if !ideal.is_proper_nonzero() {
        return Err(Error::NotProperNonzero);
    }
    let target = p.ideal(ideal.ctx())?;
    let bounds = ideal.lcm_gens().expect("nonzero ideal");
    let mut best: Option<u64> = None;
    for_each_in_box(bounds.exps(), |exps| {
        let u = Monomial::new(exps.to_vec());
        if ideal.contains(&u) {
            return;
        }
        if ideal.colon_monomial(&u) == target {
            let d = u.degree();
            best = Some(best.map_or(d, |b| b.min(d)));
        }
    });
    best.ok_or(Error::NotAssociated)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;

    fn ctx_xy() -> RingContext {
        RingContext::new(["x", "y"]).unwrap()
    }

    fn mono(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn ideal(ctx: &RingContext, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(ctx, gens.iter().map(|g| mono(g))).unwrap()
    }

    fn sample_ideal(ctx: &RingContext) -> MonomialIdeal {
        ideal(ctx, &[&[5, 0], &[4, 3], &[2, 4]])
    }

    fn p(vars: &[usize]) -> MonomialPrime {
        MonomialPrime::new(vars.iter().copied()).unwrap()
    }

    #[test]
    fn module_generators_at_the_maximal_prime() {
        let ctx = ctx_xy();
        let i = sample_ideal(&ctx);
        let mg = module_min_gens(&i, &p(&[0, 1])).unwrap();
        assert_eq!(mg.gens, vec![mono(&[3, 3]), mono(&[4, 2])]);
        assert_eq!(mg.witnesses, mg.gens);
    }

    #[test]
    fn module_generators_at_a_height_one_prime() {
        let ctx = ctx_xy();
        let i = sample_ideal(&ctx);
        let mg = module_min_gens(&i, &p(&[0])).unwrap();
        assert_eq!(mg.gens, vec![mono(&[4, 0]), mono(&[1, 4]), mono(&[3, 3])]);
        assert_eq!(mg.witnesses, vec![mono(&[1, 4])]);
    }

    #[test]
    fn module_generators_of_the_maximal_ideal_itself() {
        let ctx = ctx_xy();
        let m = ideal(&ctx, &[&[1, 0], &[0, 1]]);
        let mg = module_min_gens(&m, &p(&[0, 1])).unwrap();
        assert_eq!(mg.gens, vec![mono(&[0, 0])]);
        assert_eq!(mg.witnesses, vec![mono(&[0, 0])]);
    }

    #[test]
    fn local_v_numbers_of_the_worked_ideal() {
        let ctx = ctx_xy();
        let i = sample_ideal(&ctx);

        let at_x = v_p(&i, &p(&[0])).unwrap();
        assert_eq!(at_x.v, 5);
        assert_eq!((at_x.alpha_mod, at_x.omega_mod), (4, 6));

        let at_m = v_p(&i, &p(&[0, 1])).unwrap();
        assert_eq!(at_m.v, 6);
        // maximal prime: v equals the module's initial degree
        assert_eq!(at_m.alpha_mod, at_m.v);
    }

    #[test]
    fn v_of_the_maximal_ideal_is_zero() {
        let ctx = ctx_xy();
        let m = ideal(&ctx, &[&[1, 0], &[0, 1]]);
        assert_eq!(v_p(&m, &p(&[0, 1])).unwrap().v, 0);
        assert_eq!(v_number(&m).unwrap(), 0);
    }

    #[test]
    fn v_numbers() {
        let ctx = ctx_xy();
        assert_eq!(v_number(&sample_ideal(&ctx)).unwrap(), 5);
        assert_eq!(v_number(&ideal(&ctx, &[&[3, 0], &[2, 3]])).unwrap(), 4);
    }

    #[test]
    fn module_generators_allow_non_associated_primes() {
        let ctx = ctx_xy();
        let i = sample_ideal(&ctx);
        // p_y is not associated, so generators exist but no witness does
        let mg = module_min_gens(&i, &p(&[1])).unwrap();
        assert_eq!(mg.gens, vec![mono(&[2, 3]), mono(&[4, 2])]);
        assert!(mg.witnesses.is_empty());
    }

    #[test]
    fn v_p_requires_an_associated_prime() {
        let ctx = ctx_xy();
        let i = sample_ideal(&ctx);
        // p_y is not associated here (the pure power of x rules it out)
        assert_eq!(v_p(&i, &p(&[1])).unwrap_err(), Error::NotAssociated);
    }

    #[test]
    fn bruteforce_oracle_values() {
        let ctx = ctx_xy();
        let i = sample_ideal(&ctx);
        assert_eq!(v_p_bruteforce(&i, &p(&[0])).unwrap(), 5);
        assert_eq!(v_p_bruteforce(&i, &p(&[0, 1])).unwrap(), 6);

        let m = ideal(&ctx, &[&[1, 0], &[0, 1]]);
        assert_eq!(v_p_bruteforce(&m, &p(&[0, 1])).unwrap(), 0);

        let j = ideal(&ctx, &[&[2, 0], &[1, 1]]);
        assert_eq!(v_p_bruteforce(&j, &p(&[0, 1])).unwrap(), 1);
        assert_eq!(
            v_p_bruteforce(&j, &p(&[1])).unwrap_err(),
            Error::NotAssociated
        );
    }
}
