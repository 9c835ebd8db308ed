use rand::RngCore;

use super::{InvolutiveRing, RingError};

/// `re + im·a` in `B[a]/(a² - d)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadElem<E> {
    pub re: E,
    pub im: E,
}

/// `B[a]/(a² - d)` with `θ(x + y·a) = θ_B(x) - θ_B(y)·a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticExt<B> {
    base: B,
    d: i64,
}

impl<B: InvolutiveRing> QuadraticExt<B> {
    pub fn new(base: B, d: i64) -> Self {
        Self { base, d }
    }

    pub fn base(&self) -> &B {
        &self.base
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn embed(&self, x: &B::Elem) -> QuadElem<B::Elem> {
        QuadElem { re: x.clone(), im: self.base.zero() }
    }

    /// The adjoined generator `a`.
    pub fn adjoined(&self) -> QuadElem<B::Elem> {
        QuadElem { re: self.base.zero(), im: self.base.one() }
    }
}

impl<B: InvolutiveRing> InvolutiveRing for QuadraticExt<B> {
    type Elem = QuadElem<B::Elem>;

    fn name(&self) -> String {
        format!("quad({},{})", self.base.name(), self.d)
    }
    fn zero(&self) -> Self::Elem {
        self.embed(&self.base.zero())
    }
    fn one(&self) -> Self::Elem {
        self.embed(&self.base.one())
    }
    fn from_int(&self, n: i64) -> Self::Elem {
        self.embed(&self.base.from_int(n))
    }
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        QuadElem { re: self.base.add(&x.re, &y.re), im: self.base.add(&x.im, &y.im) }
    }
    fn neg(&self, x: &Self::Elem) -> Self::Elem {
        QuadElem { re: self.base.neg(&x.re), im: self.base.neg(&x.im) }
    }
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let b = &self.base;
        let dyy = b.scale_int(self.d, &b.mul(&x.im, &y.im));
        QuadElem {
            re: b.add(&b.mul(&x.re, &y.re), &dyy),
            im: b.add(&b.mul(&x.re, &y.im), &b.mul(&x.im, &y.re)),
        }
    }
    fn inverse(&self, x: &Self::Elem) -> Option<Self::Elem> {
        // (x + y a)(x - y a) = x² - d y² lies in the base ring.
        let b = &self.base;
        let norm = b.sub(&b.mul(&x.re, &x.re), &b.scale_int(self.d, &b.mul(&x.im, &x.im)));
        let inv = b.inverse(&norm)?;
        Some(QuadElem { re: b.mul(&x.re, &inv), im: b.neg(&b.mul(&x.im, &inv)) })
    }
    fn theta(&self, x: &Self::Elem) -> Self::Elem {
        QuadElem { re: self.base.theta(&x.re), im: self.base.neg(&self.base.theta(&x.im)) }
    }
    fn antifixed_unit(&self) -> Result<Self::Elem, RingError> {
        let a = self.adjoined();
        if self.inverse(&a).is_some() {
            Ok(a)
        } else {
            Err(RingError::NoAntifixedUnit(self.name()))
        }
    }
    fn generator(&self, name: &str) -> Option<Self::Elem> {
        if name == "a" {
            Some(self.adjoined())
        } else {
            self.base.generator(name).map(|g| self.embed(&g))
        }
    }
    fn format(&self, x: &Self::Elem) -> String {
        let b = &self.base;
        if b.is_zero(&x.im) {
            b.format(&x.re)
        } else if b.is_zero(&x.re) {
            format!("({})*a", b.format(&x.im))
        } else {
            format!("({})+({})*a", b.format(&x.re), b.format(&x.im))
        }
    }
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem {
        QuadElem { re: self.base.random(rng), im: self.base.random(rng) }
    }
}
