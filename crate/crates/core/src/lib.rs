//! Exact combinatorial algebra for monomial ideals.
//!
//! Everything here is coefficient-free: a monomial is an exponent vector, a
//! monomial ideal is its minimal generating antichain, and all operations
//! (products, powers, colon ideals, intersections) are lattice arithmetic on
//! exponent vectors. On top of that sit the invariants this crate exists for:
//! associated primes, the v-number `v(I)` and its local versions `v_p(I)`,
//! the v-function `k -> v(I^k)` with detection of its eventual linear form,
//! and closed-form formulas for ideals in two variables that double as an
//! independent oracle for the general engine.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so concurrent use is safe and results are schedule-independent.

pub mod asymptotics;
pub mod error;
pub mod ideal;
pub mod monomial;
pub mod primes;
pub mod ring;
pub mod twovar;
pub mod vnumber;

pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use monomial::Monomial;
pub use primes::{ass_profile, associated_primes, max_primes, AssProfile, MonomialPrime};
pub use ring::RingContext;
