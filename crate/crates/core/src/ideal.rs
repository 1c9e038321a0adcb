use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::primes::MonomialPrime;
use crate::ring::RingContext;

/// A monomial ideal, stored as its unique minimal generating set `G(I)`.
///
/// Invariants: the generators form an antichain under componentwise `<=`
/// (no generator divides another) and are kept in graded lexicographic
/// order, so equality is structural. The zero ideal has an empty generator
/// set; the unit ideal is generated by 1 alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    ctx: RingContext,
    gens: Vec<Monomial>,
}

/// Reduces a candidate generator list to the divisibility antichain.
///
/// Candidates are sorted in graded lex order first, so any proper divisor of
/// a candidate precedes it in the scan; equal duplicates are removed up
/// front. The result is minimal and canonically ordered.
fn minimize(mut cands: Vec<Monomial>) -> Vec<Monomial> {
    cands.sort_unstable();
    cands.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for c in cands {
        if !kept.iter().any(|k| k.divides(&c)) {
            kept.push(c);
        }
    }
    kept
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, pruning non-minimal generators.
    /// This is idempotent and insensitive to the order of the input.
    pub fn new<I>(ctx: &RingContext, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let n = ctx.n();
        let gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            if g.n_vars() != n {
                return Err(Error::VariableCount {
                    expected: n,
                    found: g.n_vars(),
                });
            }
        }
        Ok(Self::from_candidates(ctx.clone(), gens))
    }

    /// Internal fast path: candidates are known to live over `ctx`.
    pub(crate) fn from_candidates(ctx: RingContext, cands: Vec<Monomial>) -> Self {
        Self {
            ctx,
            gens: minimize(cands),
        }
    }

    pub fn zero(ctx: &RingContext) -> Self {
        Self {
            ctx: ctx.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ctx: &RingContext) -> Self {
        Self {
            ctx: ctx.clone(),
            gens: vec![Monomial::one(ctx.n())],
        }
    }

    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }

    /// The minimal generating set, in graded lex order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// True for ideals with `0 != I != S`, the domain of most invariants.
    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    /// Membership: some generator divides `u`.
    pub fn contains(&self, u: &Monomial) -> bool {
        assert_eq!(u.n_vars(), self.ctx.n(), "monomial over a different ring");
        self.gens.iter().any(|g| g.divides(u))
    }

    /// Generator-set product, minimized.
    pub fn product(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.ctx, other.ctx, "ideals over different rings");
        let mut cands = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                cands.push(a.try_mul(b)?);
            }
        }
        Ok(Self::from_candidates(self.ctx.clone(), cands))
    }

    /// `I^k`, computed by iterated products with minimization after each
    /// step to keep intermediate generator sets small. By convention
    /// `power(I, 0)` is the unit ideal.
    pub fn power(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Ok(Self::unit(&self.ctx));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// The colon ideal `(I : u) = { w : w*u in I }`, computed generator by
    /// generator as `g / gcd(g, u)`.
    pub fn colon_monomial(&self, u: &Monomial) -> Self {
        assert_eq!(u.n_vars(), self.ctx.n(), "monomial over a different ring");
        let cands = self.gens.iter().map(|g| g.quotient_by_gcd(u)).collect();
        Self::from_candidates(self.ctx.clone(), cands)
    }

    /// The colon ideal `(I : P) = { w : w*P <= I }` for a prime generated by
    /// variables, as the intersection of the colons by each variable.
    pub fn colon_prime(&self, p: &MonomialPrime) -> Result<Self> {
        let n = self.ctx.n();
        for &i in p.vars() {
            if i >= n {
                return Err(Error::VarIndexOutOfRange { index: i, vars: n });
            }
        }
        let mut acc: Option<Self> = None;
        for &i in p.vars() {
            let colon = self.colon_monomial(&Monomial::var(i, n));
            acc = Some(match acc {
                None => colon,
                Some(prev) => prev.intersect(&colon),
            });
        }
        Ok(acc.expect("prime is nonempty"))
    }

    /// The colon ideal `(I : J)` as the intersection of the colons by the
    /// generators of `J`. For `J = 0` the result is the unit ideal.
    pub fn colon_ideal(&self, other: &Self) -> Self {
        assert_eq!(self.ctx, other.ctx, "ideals over different rings");
        let mut acc: Option<Self> = None;
        for g in &other.gens {
            let colon = self.colon_monomial(g);
            acc = Some(match acc {
                None => colon,
                Some(prev) => prev.intersect(&colon),
            });
        }
        acc.unwrap_or_else(|| Self::unit(&self.ctx))
    }

    /// Intersection via pairwise lcm of generators.
    pub fn intersect(&self, other: &Self) -> Self {
        assert_eq!(self.ctx, other.ctx, "ideals over different rings");
        let mut cands = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                cands.push(a.lcm(b));
            }
        }
        Self::from_candidates(self.ctx.clone(), cands)
    }

    /// The lcm of the minimal generators; `None` for the zero ideal.
    pub fn lcm_gens(&self) -> Option<Monomial> {
        let mut it = self.gens.iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, g| acc.lcm(g)))
    }

    /// Initial degree `alpha(I)` (least generator degree) and top generator
    /// degree `omega(I)`. Only defined for nonzero proper ideals.
    pub fn alpha_omega(&self) -> Result<(u64, u64)> {
        if !self.is_proper_nonzero() {
            return Err(Error::NotProperNonzero);
        }
        // gens are sorted by degree first, so min and max sit at the ends
        Ok((
            self.gens.first().expect("nonzero").degree(),
            self.gens.last().expect("nonzero").degree(),
        ))
    }

    pub fn alpha(&self) -> Result<u64> {
        Ok(self.alpha_omega()?.0)
    }

    pub fn omega(&self) -> Result<u64> {
        Ok(self.alpha_omega()?.1)
    }

    /// Renders the generator list in canonical order, e.g.
    /// `x^5, x^2*y^4, x^4*y^3`; the zero ideal renders as `0`.
    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.gens
            .iter()
            .map(|g| g.display(&self.ctx))
            .collect::<Vec<_>>()
            .join(", ")
    }
}
