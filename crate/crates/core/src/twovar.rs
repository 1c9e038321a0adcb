//! Closed-form formulas for monomial ideals in two variables.
//!
//! A nonzero proper monomial ideal of `K[x,y]` is determined by its
//! staircase: a strictly decreasing sequence of x-exponents paired with a
//! strictly increasing sequence of y-exponents. In that encoding the
//! associated primes, the local v-numbers of every power, and `v(I)` itself
//! have closed forms, which makes this module an independent oracle for the
//! general engine. It also provides the constructive family realizing any
//! admissible eventual linear v-function `a*k + b` (`a >= 1`, `b >= -1`)
//! exactly from `k = 1`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::primes::MonomialPrime;
use crate::ring::RingContext;

const X: usize = 0;
const Y: usize = 1;

/// A two-variable monomial ideal in staircase form: generators
/// `x^{a_i} y^{b_i}` with `a` strictly decreasing and `b` strictly
/// increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaircaseIdeal {
    a: Vec<u32>,
    b: Vec<u32>,
}

impl StaircaseIdeal {
    /// Validates the staircase shape. The pair `a = [0], b = [0]` (the unit
    /// ideal) is rejected.
    pub fn new(a: Vec<u32>, b: Vec<u32>) -> Result<Self> {
        if a.is_empty() || a.len() != b.len() {
            return Err(Error::BadStaircase);
        }
        if !a.windows(2).all(|w| w[0] > w[1]) || !b.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::BadStaircase);
        }
        if a.len() == 1 && a[0] == 0 && b[0] == 0 {
            return Err(Error::BadStaircase);
        }
        Ok(Self { a, b })
    }

    /// Reads the staircase off a two-variable ideal. The minimality of
    /// `G(I)` guarantees the staircase shape, so a violation here is an
    /// internal error.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        let n = ideal.ctx().n();
        if n != 2 {
            return Err(Error::NotTwoVariables { found: n });
        }
        if !ideal.is_proper_nonzero() {
            return Err(Error::NotProperNonzero);
        }
        let mut pairs: Vec<(u32, u32)> = ideal
            .gens()
            .iter()
            .map(|g| (g.exps()[X], g.exps()[Y]))
            .collect();
        pairs.sort_unstable_by_key(|p| std::cmp::Reverse(p.0));
        Self::new(
            pairs.iter().map(|p| p.0).collect(),
            pairs.iter().map(|p| p.1).collect(),
        )
    }

    /// The generators `x^{a_i} y^{b_i}` as an ideal over `ctx` (which must
    /// have two variables). Round-trips with `from_ideal`.
    pub fn to_ideal(&self, ctx: &RingContext) -> Result<MonomialIdeal> {
        if ctx.n() != 2 {
            return Err(Error::NotTwoVariables { found: ctx.n() });
        }
        MonomialIdeal::new(
            ctx,
            self.a
                .iter()
                .zip(&self.b)
                .map(|(&a, &b)| Monomial::new(vec![a, b])),
        )
    }

    /// Number of generators.
    pub fn m(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[u32] {
        &self.a
    }

    pub fn b(&self) -> &[u32] {
        &self.b
    }

    /// `Ass(I)` in closed form: `(x)` iff the last x-exponent is positive,
    /// `(y)` iff the first y-exponent is positive, and `(x,y)` iff the ideal
    /// is not principal. Constant over all powers.
    pub fn ass_closed_form(&self) -> BTreeSet<MonomialPrime> {
        let mut out = BTreeSet::new();
        if *self.a.last().expect("nonempty") > 0 {
            out.insert(MonomialPrime::single(X));
        }
        if self.b[0] > 0 {
            out.insert(MonomialPrime::single(Y));
        }
        if self.m() > 1 {
            out.insert(MonomialPrime::new([X, Y]).expect("nonempty"));
        }
        out
    }

    /// The local v-numbers of `I^k` at the height-one primes, in closed
    /// form: `v_(x)(I^k) = k(a_m + b_m) - 1` when `(x)` is associated and
    /// `v_(y)(I^k) = k(a_1 + b_1) - 1` when `(y)` is. Entries are present
    /// exactly for the associated height-one primes.
    pub fn v_power_closed_forms(&self, k: u32) -> BTreeMap<MonomialPrime, u64> {
        assert!(k >= 1, "powers are indexed from 1");
        let m = self.m();
        let mut out = BTreeMap::new();
        if self.a[m - 1] > 0 {
            let deg = u64::from(self.a[m - 1]) + u64::from(self.b[m - 1]);
            out.insert(MonomialPrime::single(X), u64::from(k) * deg - 1);
        }
        if self.b[0] > 0 {
            let deg = u64::from(self.a[0]) + u64::from(self.b[0]);
            out.insert(MonomialPrime::single(Y), u64::from(k) * deg - 1);
        }
        out
    }

    /// `v_(x,y)(I) = min { a_j + b_{j+1} - 2 }` over adjacent staircase
    /// corners. Only defined when the ideal is not principal, since the
    /// maximal ideal is associated exactly then.
    pub fn v_m_closed_form(&self) -> Result<u64> {
        self.adjacent_corner_terms()
            .min()
            .ok_or(Error::NotAssociated)
    }

    /// `v(I)` in closed form: the minimum of the adjacent-corner terms and,
    /// when the corresponding height-one prime is associated, of
    /// `a_1 + b_1 - 1` and `a_m + b_m - 1`.
    pub fn v_closed_form(&self) -> u64 {
        let m = self.m();
        let mut cands: Vec<u64> = self.adjacent_corner_terms().collect();
        if self.b[0] > 0 {
            cands.push(u64::from(self.a[0]) + u64::from(self.b[0]) - 1);
        }
        if self.a[m - 1] > 0 {
            cands.push(u64::from(self.a[m - 1]) + u64::from(self.b[m - 1]) - 1);
        }
        cands.into_iter().min().expect("not the unit ideal")
    }

    /// `a_j + b_{j+1} - 2` for `j = 1..m-1`; each term is nonnegative since
    /// `a_j >= 1` and `b_{j+1} >= 1` strictly inside the staircase.
    fn adjacent_corner_terms(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.m().saturating_sub(1)).map(|j| u64::from(self.a[j]) + u64::from(self.b[j + 1]) - 2)
    }
}

/// The two-generator ideal `(x^a, x^{a-1} y^{b+2})` whose v-function is
/// exactly `a*k + b` for every `k >= 1`. Defined for `slope >= 1` and
/// `intercept >= -1`; for `slope = 1` it degenerates to `(x, y^{b+2})`.
pub fn family_ideal(slope: u32, intercept: i64) -> Result<StaircaseIdeal> {
    if slope < 1 || intercept < -1 {
        return Err(Error::BadFamilyParams);
    }
    let b2 = u32::try_from(intercept + 2).map_err(|_| Error::BadFamilyParams)?;
    StaircaseIdeal::new(vec![slope, slope - 1], vec![0, b2])
}

/// The minimal generators of the k-th power of the family ideal:
/// `x^{ka - i} y^{i(b+2)}` for `i = 0..=k`. Exactly `k + 1` generators,
/// already minimal, and equal to `power(family_ideal(a, b), k)`.
pub fn family_power_gens(slope: u32, intercept: i64, k: u32) -> Result<Vec<Monomial>> {
    if slope < 1 || intercept < -1 {
        return Err(Error::BadFamilyParams);
    }
    assert!(k >= 1, "powers are indexed from 1");
    let b2 = u32::try_from(intercept + 2).map_err(|_| Error::BadFamilyParams)?;
    let ka = slope.checked_mul(k).ok_or(Error::Overflow)?;
    (0..=k)
        .map(|i| {
            let y = i.checked_mul(b2).ok_or(Error::Overflow)?;
            Ok(Monomial::new(vec![ka - i, y]))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx_xy() -> RingContext {
        RingContext::new(["x", "y"]).unwrap()
    }

    fn ideal(ctx: &RingContext, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(ctx, gens.iter().map(|g| Monomial::new(g.to_vec()))).unwrap()
    }

    fn stair(a: &[u32], b: &[u32]) -> StaircaseIdeal {
        StaircaseIdeal::new(a.to_vec(), b.to_vec()).unwrap()
    }

    fn p(vars: &[usize]) -> MonomialPrime {
        MonomialPrime::new(vars.iter().copied()).unwrap()
    }

    #[test]
    fn staircase_from_ideal() {
        let ctx = ctx_xy();
        let j = StaircaseIdeal::from_ideal(&ideal(&ctx, &[&[5, 0], &[4, 3], &[2, 4]])).unwrap();
        assert_eq!((j.a(), j.b()), (&[5, 4, 2][..], &[0, 3, 4][..]));

        let y3 = StaircaseIdeal::from_ideal(&ideal(&ctx, &[&[0, 3]])).unwrap();
        assert_eq!((y3.a(), y3.b()), (&[0][..], &[3][..]));

        let m2 = StaircaseIdeal::from_ideal(&ideal(&ctx, &[&[2, 0], &[1, 1], &[0, 2]])).unwrap();
        assert_eq!((m2.a(), m2.b()), (&[2, 1, 0][..], &[0, 1, 2][..]));
    }

    #[test]
    fn staircase_round_trips() {
        let ctx = ctx_xy();
        let i = ideal(&ctx, &[&[5, 0], &[4, 3], &[2, 4]]);
        let j = StaircaseIdeal::from_ideal(&i).unwrap();
        assert_eq!(j.to_ideal(&ctx).unwrap(), i);
    }

    #[test]
    fn staircase_rejects_wrong_rings_and_shapes() {
        let ctx3 = RingContext::new(["x", "y", "z"]).unwrap();
        let i = MonomialIdeal::new(&ctx3, vec![Monomial::new(vec![1, 0, 0])]).unwrap();
        assert_eq!(
            StaircaseIdeal::from_ideal(&i).unwrap_err(),
            Error::NotTwoVariables { found: 3 }
        );
        assert_eq!(
            StaircaseIdeal::new(vec![1, 2], vec![0, 1]).unwrap_err(),
            Error::BadStaircase
        );
        assert_eq!(
            StaircaseIdeal::new(vec![0], vec![0]).unwrap_err(),
            Error::BadStaircase
        );
    }

    #[test]
    fn ass_closed_form_cases() {
        assert_eq!(
            stair(&[5, 4, 2], &[0, 3, 4]).ass_closed_form(),
            [p(&[0]), p(&[0, 1])].into_iter().collect()
        );
        assert_eq!(
            stair(&[1], &[1]).ass_closed_form(),
            [p(&[0]), p(&[1])].into_iter().collect()
        );
        assert_eq!(
            stair(&[1, 0], &[0, 1]).ass_closed_form(),
            [p(&[0, 1])].into_iter().collect()
        );
    }

    #[test]
    fn v_power_closed_form_values() {
        let worked = stair(&[5, 4, 2], &[0, 3, 4]);
        assert_eq!(
            worked.v_power_closed_forms(3),
            [(p(&[0]), 17)].into_iter().collect()
        );

        let both = stair(&[2, 1], &[1, 2]);
        assert_eq!(
            both.v_power_closed_forms(1),
            [(p(&[0]), 2), (p(&[1]), 2)].into_iter().collect()
        );

        let principal = stair(&[1], &[1]);
        assert_eq!(
            principal.v_power_closed_forms(4),
            [(p(&[0]), 7), (p(&[1]), 7)].into_iter().collect()
        );
    }

    #[test]
    fn v_m_closed_form_values() {
        assert_eq!(stair(&[5, 4, 2], &[0, 3, 4]).v_m_closed_form().unwrap(), 6);
        assert_eq!(stair(&[2, 1], &[0, 1]).v_m_closed_form().unwrap(), 1);
        assert_eq!(stair(&[1, 0], &[0, 1]).v_m_closed_form().unwrap(), 0);
        assert_eq!(
            stair(&[1], &[1]).v_m_closed_form().unwrap_err(),
            Error::NotAssociated
        );
    }

    #[test]
    fn v_closed_form_values() {
        assert_eq!(stair(&[5, 4, 2], &[0, 3, 4]).v_closed_form(), 5);
        assert_eq!(stair(&[3, 2], &[0, 3]).v_closed_form(), 4);
        assert_eq!(stair(&[0], &[3]).v_closed_form(), 2);
        assert_eq!(stair(&[1, 0], &[0, 1]).v_closed_form(), 0);
    }

    #[test]
    fn family_ideal_construction() {
        let f = family_ideal(3, 1).unwrap();
        assert_eq!((f.a(), f.b()), (&[3, 2][..], &[0, 3][..]));

        let degenerate = family_ideal(1, -1).unwrap();
        assert_eq!((degenerate.a(), degenerate.b()), (&[1, 0][..], &[0, 1][..]));

        assert_eq!(family_ideal(0, 0).unwrap_err(), Error::BadFamilyParams);
        assert_eq!(family_ideal(2, -2).unwrap_err(), Error::BadFamilyParams);
    }

    #[test]
    fn family_power_generators() {
        let ctx = ctx_xy();
        let gens = family_power_gens(3, 1, 2).unwrap();
        assert_eq!(
            MonomialIdeal::new(&ctx, gens).unwrap(),
            ideal(&ctx, &[&[6, 0], &[5, 3], &[4, 6]])
        );

        let cube = family_power_gens(1, -1, 3).unwrap();
        assert_eq!(
            MonomialIdeal::new(&ctx, cube).unwrap(),
            ideal(&ctx, &[&[3, 0], &[2, 1], &[1, 2], &[0, 3]])
        );

        let sq = family_power_gens(2, 0, 2).unwrap();
        assert_eq!(
            MonomialIdeal::new(&ctx, sq).unwrap(),
            ideal(&ctx, &[&[4, 0], &[3, 2], &[2, 4]])
        );
    }

    #[test]
    fn family_powers_match_the_general_engine() {
        let ctx = ctx_xy();
        let i = family_ideal(2, 0).unwrap().to_ideal(&ctx).unwrap();
        for k in 1..=6 {
            let from_formula =
                MonomialIdeal::new(&ctx, family_power_gens(2, 0, k).unwrap()).unwrap();
            assert_eq!(i.power(k).unwrap(), from_formula, "k = {k}");
            assert_eq!(from_formula.gens().len(), k as usize + 1);
        }
    }
}
