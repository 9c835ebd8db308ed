//! Exact commutative rings with unity carrying an order-2 automorphism `θ`.
//!
//! Every ring in the tower implements [`InvolutiveRing`]. Elements are plain
//! values with a canonical form, so equality is structural. The ring value
//! itself carries whatever runtime parameters the arithmetic needs (the
//! defining polynomial of a finite field, the truncation degree, ...).

mod any;
mod finite_field;
mod gaussian;
mod parse;
mod poly;
mod quadratic;
mod rational;
mod subring;

use std::fmt::Debug;
use std::hash::Hash;

use rand::RngCore;
use thiserror::Error;

pub use any::{AnyElem, AnyRing, RingDescriptor};
pub use finite_field::{FiniteFieldSq, GfElem};
pub use gaussian::{GaussianRational, GaussianRationals};
pub use poly::{PolyElem, PolyExt, TruncatedPoly};
pub use quadratic::{QuadElem, QuadraticExt};
pub use rational::Rational;
pub use subring::{DecidableSubring, GaussianIntegersSixth, GfSubfield};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("2 is not invertible in {0}")]
    NoHalf(String),
    #[error("3 is not invertible in {0}")]
    NoThird(String),
    #[error("{0} has no invertible element a with θ(a) = -a")]
    NoAntifixedUnit(String),
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error("unsupported ring descriptor: {0}")]
    UnsupportedDescriptor(String),
}

/// A commutative ring with unity and an involution `θ`.
///
/// Implementors guarantee `θ∘θ = id` and that `θ` is a ring homomorphism.
pub trait InvolutiveRing: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    /// Canonical descriptor string, e.g. `trunc(gaussian-rationals,3)`.
    fn name(&self) -> String;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse, if `a` is a unit.
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn theta(&self, a: &Self::Elem) -> Self::Elem;

    /// The distinguished invertible `a` with `θ(a) = -a`.
    fn antifixed_unit(&self) -> Result<Self::Elem, RingError>;

    /// Named generator used by the element parser (`i`, `g`, `a`, `t`).
    fn generator(&self, name: &str) -> Option<Self::Elem>;

    fn format(&self, a: &Self::Elem) -> String;

    /// A small pseudorandom element, used for sampled identity checks.
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn has_half(&self) -> bool {
        self.inverse(&self.from_int(2)).is_some()
    }

    fn has_third(&self) -> bool {
        self.inverse(&self.from_int(3)).is_some()
    }

    fn half(&self) -> Result<Self::Elem, RingError> {
        self.inverse(&self.from_int(2)).ok_or_else(|| RingError::NoHalf(self.name()))
    }

    fn third(&self) -> Result<Self::Elem, RingError> {
        self.inverse(&self.from_int(3)).ok_or_else(|| RingError::NoThird(self.name()))
    }

    fn try_inverse(&self, a: &Self::Elem) -> Result<Self::Elem, RingError> {
        self.inverse(a).ok_or_else(|| RingError::NotInvertible(self.format(a)))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, RingError> {
        Ok(self.mul(a, &self.try_inverse(b)?))
    }

    fn scale_int(&self, n: i64, a: &Self::Elem) -> Self::Elem {
        self.mul(&self.from_int(n), a)
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// `a^e` for signed `e`; negative powers need `a` to be a unit.
    fn pow_signed(&self, a: &Self::Elem, e: i64) -> Result<Self::Elem, RingError> {
        if e >= 0 {
            Ok(self.pow(a, e as u64))
        } else {
            Ok(self.pow(&self.try_inverse(a)?, e.unsigned_abs()))
        }
    }

    /// Membership in the fixed subring `R_θ`.
    fn is_fixed(&self, a: &Self::Elem) -> bool {
        self.theta(a) == *a
    }

    /// Membership in the antifixed part `R_θ⁻`.
    fn is_antifixed(&self, a: &Self::Elem) -> bool {
        self.theta(a) == self.neg(a)
    }

    /// `x = u + v` with `u = (x+θx)/2 ∈ R_θ` and `v = (x-θx)/2 ∈ R_θ⁻`.
    fn split_fixed_antifixed(&self, x: &Self::Elem) -> Result<(Self::Elem, Self::Elem), RingError> {
        let half = self.half()?;
        let tx = self.theta(x);
        let u = self.mul(&half, &self.add(x, &tx));
        let v = self.mul(&half, &self.sub(x, &tx));
        Ok((u, v))
    }

    /// Parse an element expression such as `3/2 - 2*i` or `(1+g)^2`.
    fn parse_elem(&self, input: &str) -> Result<Self::Elem, RingError>
    where
        Self: Sized,
    {
        parse::parse_element(self, input)
    }
}

/// The rationals with the identity involution.
///
/// Admitted for untwisted oracle computations; it has no antifixed unit.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl InvolutiveRing for Rationals {
    type Elem = Rational;

    fn name(&self) -> String {
        "rationals".into()
    }
    fn zero(&self) -> Rational {
        Rational::ZERO
    }
    fn one(&self) -> Rational {
        Rational::ONE
    }
    fn from_int(&self, n: i64) -> Rational {
        Rational::from_integer(n)
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn inverse(&self, a: &Rational) -> Option<Rational> {
        a.recip()
    }
    fn theta(&self, a: &Rational) -> Rational {
        a.clone()
    }
    fn antifixed_unit(&self) -> Result<Rational, RingError> {
        Err(RingError::NoAntifixedUnit(self.name()))
    }
    fn generator(&self, _name: &str) -> Option<Rational> {
        None
    }
    fn format(&self, a: &Rational) -> String {
        a.to_string()
    }
    fn random(&self, rng: &mut dyn RngCore) -> Rational {
        let num = (rng.next_u32() % 13) as i64 - 6;
        let den = [1, 1, 2, 3][(rng.next_u32() % 4) as usize];
        Rational::new(num, den)
    }
}

#[cfg(test)]
pub(crate) mod laws {
    //! Shared ring-law checks used by the per-ring test modules.
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    pub fn check_ring_laws<R: InvolutiveRing>(ring: &R, samples: usize, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let x = ring.random(&mut rng);
            let y = ring.random(&mut rng);
            let z = ring.random(&mut rng);
            assert_eq!(ring.theta(&ring.theta(&x)), x, "θ² ≠ id on {x:?}");
            assert_eq!(ring.theta(&ring.add(&x, &y)), ring.add(&ring.theta(&x), &ring.theta(&y)));
            assert_eq!(ring.theta(&ring.mul(&x, &y)), ring.mul(&ring.theta(&x), &ring.theta(&y)));
            assert_eq!(ring.mul(&x, &ring.add(&y, &z)), ring.add(&ring.mul(&x, &y), &ring.mul(&x, &z)));
            assert_eq!(ring.mul(&ring.mul(&x, &y), &z), ring.mul(&x, &ring.mul(&y, &z)));
            assert_eq!(ring.mul(&x, &y), ring.mul(&y, &x));
            assert_eq!(ring.add(&x, &ring.neg(&x)), ring.zero());
            if let Some(inv) = ring.inverse(&x) {
                assert_eq!(ring.mul(&x, &inv), ring.one());
            }
            if ring.has_half() {
                let (u, v) = ring.split_fixed_antifixed(&x).unwrap();
                assert!(ring.is_fixed(&u) && ring.is_antifixed(&v));
                assert_eq!(ring.add(&u, &v), x);
            }
            let shown = ring.format(&x);
            assert_eq!(ring.parse_elem(&shown).unwrap(), x, "format/parse mismatch for `{shown}`");
        }
        assert_eq!(ring.theta(&ring.one()), ring.one());
        if let Ok(a) = ring.antifixed_unit() {
            assert_eq!(ring.theta(&a), ring.neg(&a));
            assert!(ring.inverse(&a).is_some());
            let sq = ring.mul(&a, &a);
            assert_eq!(ring.mul(&a, &ring.theta(&a)), ring.neg(&sq));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_identity_involution() {
        let q = Rationals;
        let x = Rational::new(7, 5);
        assert_eq!(q.theta(&x), x);
        assert_eq!(q.antifixed_unit(), Err(RingError::NoAntifixedUnit("rationals".into())));
        laws::check_ring_laws(&q, 200, 1);
    }
}
