use rand::RngCore;

use super::{InvolutiveRing, Rational, RingError};

/// `re + im·i` with rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Self::new(Rational::from_integer(re), Rational::from_integer(im))
    }
}

/// `Q(i)` with complex conjugation as `θ`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GaussianRationals;

impl InvolutiveRing for GaussianRationals {
    type Elem = GaussianRational;

    fn name(&self) -> String {
        "gaussian-rationals".into()
    }
    fn zero(&self) -> GaussianRational {
        GaussianRational::default()
    }
    fn one(&self) -> GaussianRational {
        GaussianRational::from_ints(1, 0)
    }
    fn from_int(&self, n: i64) -> GaussianRational {
        GaussianRational::from_ints(n, 0)
    }
    fn add(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&a.re + &b.re, &a.im + &b.im)
    }
    fn neg(&self, a: &GaussianRational) -> GaussianRational {
        GaussianRational::new(-&a.re, -&a.im)
    }
    fn sub(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&a.re - &b.re, &a.im - &b.im)
    }
    fn mul(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        if a.im.is_zero() && b.im.is_zero() {
            return GaussianRational::new(&a.re * &b.re, Rational::ZERO);
        }
        let re = &(&a.re * &b.re) - &(&a.im * &b.im);
        let im = &(&a.re * &b.im) + &(&a.im * &b.re);
        GaussianRational::new(re, im)
    }
    fn is_zero(&self, a: &GaussianRational) -> bool {
        a.re.is_zero() && a.im.is_zero()
    }
    fn inverse(&self, a: &GaussianRational) -> Option<GaussianRational> {
        let norm = &(&a.re * &a.re) + &(&a.im * &a.im);
        let inv = norm.recip()?;
        Some(GaussianRational::new(&a.re * &inv, &(-&a.im) * &inv))
    }
    fn theta(&self, a: &GaussianRational) -> GaussianRational {
        GaussianRational::new(a.re.clone(), -&a.im)
    }
    fn antifixed_unit(&self) -> Result<GaussianRational, RingError> {
        Ok(GaussianRational::from_ints(0, 1))
    }
    fn generator(&self, name: &str) -> Option<GaussianRational> {
        (name == "i").then(|| GaussianRational::from_ints(0, 1))
    }
    fn format(&self, a: &GaussianRational) -> String {
        match (a.re.is_zero(), a.im.is_zero()) {
            (_, true) => a.re.to_string(),
            (true, false) => imag_part(&a.im),
            (false, false) => {
                let im = imag_part(&a.im);
                if im.starts_with('-') {
                    format!("{}{}", a.re, im)
                } else {
                    format!("{}+{}", a.re, im)
                }
            }
        }
    }
    fn random(&self, rng: &mut dyn RngCore) -> GaussianRational {
        let mut part = || {
            let num = (rng.next_u32() % 9) as i64 - 4;
            let den = [1, 1, 2, 3, 4][(rng.next_u32() % 5) as usize];
            Rational::new(num, den)
        };
        GaussianRational::new(part(), part())
    }
}

fn imag_part(im: &Rational) -> String {
    if *im == Rational::ONE {
        "i".into()
    } else if *im == Rational::from_integer(-1) {
        "-i".into()
    } else {
        format!("{im}*i")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::laws::check_ring_laws;

    #[test]
    fn conjugation() {
        let r = GaussianRationals;
        let x = GaussianRational::from_ints(3, 2);
        assert_eq!(r.theta(&x), GaussianRational::from_ints(3, -2));
        assert_eq!(r.format(&x), "3+2*i");
    }

    #[test]
    fn split_real_imaginary() {
        let r = GaussianRationals;
        let (u, v) = r.split_fixed_antifixed(&GaussianRational::from_ints(3, 2)).unwrap();
        assert_eq!(u, GaussianRational::from_ints(3, 0));
        assert_eq!(v, GaussianRational::from_ints(0, 2));
        let (u, v) = r.split_fixed_antifixed(&r.from_int(5)).unwrap();
        assert_eq!((u, v), (r.from_int(5), r.zero()));
    }

    #[test]
    fn antifixed_unit_is_i() {
        let r = GaussianRationals;
        assert_eq!(r.antifixed_unit().unwrap(), GaussianRational::from_ints(0, 1));
    }

    #[test]
    fn laws() {
        check_ring_laws(&GaussianRationals, 300, 7);
    }
}
