use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::ring::RingContext;

/// A monomial as an exponent vector over a fixed variable set.
///
/// Ordering is graded lexicographic: total degree first, then lexicographic
/// on the exponent vector. This is the canonical order used for every
/// set-valued output in the crate, which keeps equality structural and
/// reports deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    /// The constant monomial 1.
    pub fn one(n: usize) -> Self {
        Self { exps: vec![0; n] }
    }

    /// The single variable x_i.
    pub fn var(i: usize, n: usize) -> Self {
        assert!(i < n, "variable index out of range");
        let mut exps = vec![0; n];
        exps[i] = 1;
        Self { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn n_vars(&self) -> usize {
        self.exps.len()
    }

    /// Total degree.
    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Componentwise `<=`, i.e. divisibility of monomials.
    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Product with checked exponent arithmetic; overflow is an error, never
    /// a silent wrap.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<u32>>>()?;
        Ok(Self { exps })
    }

    /// `self / gcd(self, u)`, the generator image under the colon by `u`.
    pub fn quotient_by_gcd(&self, u: &Self) -> Self {
        debug_assert_eq!(self.exps.len(), u.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&u.exps)
            .map(|(a, b)| a - a.min(b))
            .collect();
        Self { exps }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Self { exps }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.min(b))
            .collect();
        Self { exps }
    }

    /// Renders the monomial with the ring's variable names, e.g. `x^4*y^3`
    /// or `1`. The output re-parses under the expression grammar used by the
    /// command-line front end.
    pub fn display(&self, ctx: &RingContext) -> String {
        debug_assert_eq!(self.exps.len(), ctx.n());
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(ctx.var_name(i).to_string()),
                _ => parts.push(format!("{}^{}", ctx.var_name(i), e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
