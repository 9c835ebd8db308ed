//! Subrings `R ⊂ S` whose membership is decidable from the canonical form
//! of an `S`-element. Only entrywise membership is needed for the
//! normalizer checks, so `R` is never materialised as a ring of its own.

use rand::RngCore;

use super::{FiniteFieldSq, GaussianRational, GaussianRationals, GfElem, InvolutiveRing, Rational, RingError};

pub trait DecidableSubring<S: InvolutiveRing>: Send + Sync {
    fn name(&self) -> String;
    fn ambient(&self) -> &S;
    fn contains(&self, x: &S::Elem) -> bool;
    /// A random element of `R`.
    fn sample(&self, rng: &mut dyn RngCore) -> S::Elem;
    /// A random element of `S` that is not in `R`.
    fn sample_outside(&self, rng: &mut dyn RngCore) -> S::Elem;
    /// A finite set of `R`-elements used as generator parameters.
    fn parameter_set(&self) -> Vec<S::Elem>;
}

/// `Z[i][1/6]` inside `Q(i)`: both parts have denominators built from 2 and 3.
#[derive(Debug, Clone, Default)]
pub struct GaussianIntegersSixth {
    ambient: GaussianRationals,
}

impl GaussianIntegersSixth {
    pub fn new() -> Self {
        Self::default()
    }

    /// Denominator used by [`DecidableSubring::sample_outside`].
    pub const OUTSIDE_DENOMINATOR: i64 = 5;
}

fn smooth_part(rng: &mut dyn RngCore) -> Rational {
    let num = (rng.next_u32() % 9) as i64 - 4;
    let den = [1, 2, 3, 4, 6][(rng.next_u32() % 5) as usize];
    Rational::new(num, den)
}

impl DecidableSubring<GaussianRationals> for GaussianIntegersSixth {
    fn name(&self) -> String {
        "gaussian-integers[1/6]".into()
    }
    fn ambient(&self) -> &GaussianRationals {
        &self.ambient
    }
    fn contains(&self, x: &GaussianRational) -> bool {
        x.re.denominator_supported_on(&[2, 3]) && x.im.denominator_supported_on(&[2, 3])
    }
    fn sample(&self, rng: &mut dyn RngCore) -> GaussianRational {
        GaussianRational::new(smooth_part(rng), smooth_part(rng))
    }
    fn sample_outside(&self, rng: &mut dyn RngCore) -> GaussianRational {
        let num = 1 + (rng.next_u32() % 4) as i64;
        let part = Rational::new(num, Self::OUTSIDE_DENOMINATOR);
        if rng.next_u32() % 2 == 0 {
            GaussianRational::new(part, Rational::ZERO)
        } else {
            GaussianRational::new(part.clone(), part)
        }
    }
    fn parameter_set(&self) -> Vec<GaussianRational> {
        let r = |n, d| Rational::new(n, d);
        vec![
            GaussianRational::new(r(1, 1), Rational::ZERO),
            GaussianRational::new(Rational::ZERO, r(1, 1)),
            GaussianRational::new(r(1, 2), Rational::ZERO),
            GaussianRational::new(Rational::ZERO, r(1, 2)),
            GaussianRational::new(r(1, 3), Rational::ZERO),
            GaussianRational::new(Rational::ZERO, r(1, 3)),
        ]
    }
}

/// `F_{p^{2j}}` inside `F_{p^{2k}}` (`k/j` odd), as the elements with `x^{p^{2j}} = x`.
///
/// When `k/j` is odd the involution `x ↦ x^{p^k}` of the big field restricts
/// to `x ↦ x^{p^j}` on the subfield, so the pair is compatible with `θ`.
#[derive(Debug, Clone)]
pub struct GfSubfield {
    ambient: FiniteFieldSq,
    sub_half_degree: u32,
    members: Vec<GfElem>,
}

impl GfSubfield {
    pub fn new(ambient: FiniteFieldSq, sub_half_degree: u32) -> Result<Self, RingError> {
        let k = ambient.half_degree();
        if sub_half_degree == 0 || k % sub_half_degree != 0 || (k / sub_half_degree) % 2 == 0 {
            return Err(RingError::UnsupportedDescriptor(format!(
                "gf({},{}) inside {}: involutions are not compatible",
                ambient.characteristic(),
                sub_half_degree,
                ambient.name()
            )));
        }
        let sub_size = (ambient.characteristic() as u64).pow(2 * sub_half_degree);
        let members = ambient.elements().filter(|x| ambient.pow(x, sub_size) == *x).collect();
        Ok(Self { ambient, sub_half_degree, members })
    }

    pub fn members(&self) -> &[GfElem] {
        &self.members
    }
}

impl DecidableSubring<FiniteFieldSq> for GfSubfield {
    fn name(&self) -> String {
        format!("gf({},{})", self.ambient.characteristic(), self.sub_half_degree)
    }
    fn ambient(&self) -> &FiniteFieldSq {
        &self.ambient
    }
    fn contains(&self, x: &GfElem) -> bool {
        self.members.binary_search(x).is_ok()
    }
    fn sample(&self, rng: &mut dyn RngCore) -> GfElem {
        self.members[rng.next_u32() as usize % self.members.len()]
    }
    fn sample_outside(&self, rng: &mut dyn RngCore) -> GfElem {
        loop {
            let x = self.ambient.random(rng);
            if !self.contains(&x) {
                return x;
            }
        }
    }
    fn parameter_set(&self) -> Vec<GfElem> {
        self.members.iter().copied().filter(|x| x.0 != 0).collect()
    }
}
