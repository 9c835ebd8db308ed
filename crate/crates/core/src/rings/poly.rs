//! Polynomial rings `B[t]` and truncated rings `B[t]/(t^k)`, with `θ(t) = t`.

use rand::RngCore;

use super::{InvolutiveRing, RingError};

/// Coefficients low degree first, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyElem<E>(pub Vec<E>);

impl<E> PolyElem<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.0
    }

    /// Degree of the highest nonzero coefficient; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }
}

fn trim<B: InvolutiveRing>(base: &B, mut v: Vec<B::Elem>) -> PolyElem<B::Elem> {
    while v.last().is_some_and(|c| base.is_zero(c)) {
        v.pop();
    }
    PolyElem(v)
}

fn add_coeffs<B: InvolutiveRing>(base: &B, x: &[B::Elem], y: &[B::Elem]) -> Vec<B::Elem> {
    let n = x.len().max(y.len());
    (0..n)
        .map(|j| match (x.get(j), y.get(j)) {
            (Some(a), Some(b)) => base.add(a, b),
            (Some(a), None) | (None, Some(a)) => a.clone(),
            (None, None) => unreachable!(),
        })
        .collect()
}

/// Product of coefficient lists, keeping only degrees below `limit`.
fn mul_coeffs<B: InvolutiveRing>(base: &B, x: &[B::Elem], y: &[B::Elem], limit: usize) -> Vec<B::Elem> {
    if x.is_empty() || y.is_empty() {
        return Vec::new();
    }
    let n = (x.len() + y.len() - 1).min(limit);
    let mut out = vec![base.zero(); n];
    for (i, a) in x.iter().enumerate().take(n) {
        if base.is_zero(a) {
            continue;
        }
        for (j, b) in y.iter().enumerate().take(n - i) {
            out[i + j] = base.add(&out[i + j], &base.mul(a, b));
        }
    }
    out
}

fn format_poly<B: InvolutiveRing>(base: &B, x: &PolyElem<B::Elem>) -> String {
    let terms: Vec<String> = x
        .0
        .iter()
        .enumerate()
        .filter(|(_, c)| !base.is_zero(c))
        .map(|(j, c)| {
            let c = base.format(c);
            match j {
                0 => format!("({c})"),
                1 => format!("({c})*t"),
                j => format!("({c})*t^{j}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// `B[t]` with `θ` acting on coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyExt<B> {
    base: B,
}

impl<B: InvolutiveRing> PolyExt<B> {
    pub fn new(base: B) -> Self {
        Self { base }
    }

    pub fn base(&self) -> &B {
        &self.base
    }

    pub fn embed(&self, c: &B::Elem) -> PolyElem<B::Elem> {
        trim(&self.base, vec![c.clone()])
    }

    pub fn var(&self) -> PolyElem<B::Elem> {
        trim(&self.base, vec![self.base.zero(), self.base.one()])
    }

    pub fn from_coeffs(&self, coeffs: Vec<B::Elem>) -> PolyElem<B::Elem> {
        trim(&self.base, coeffs)
    }

    pub fn coeff(&self, x: &PolyElem<B::Elem>, d: usize) -> B::Elem {
        x.0.get(d).cloned().unwrap_or_else(|| self.base.zero())
    }
}

impl<B: InvolutiveRing> InvolutiveRing for PolyExt<B> {
    type Elem = PolyElem<B::Elem>;

    fn name(&self) -> String {
        format!("poly({})", self.base.name())
    }
    fn zero(&self) -> Self::Elem {
        PolyElem(Vec::new())
    }
    fn one(&self) -> Self::Elem {
        self.embed(&self.base.one())
    }
    fn from_int(&self, n: i64) -> Self::Elem {
        self.embed(&self.base.from_int(n))
    }
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        trim(&self.base, add_coeffs(&self.base, &x.0, &y.0))
    }
    fn neg(&self, x: &Self::Elem) -> Self::Elem {
        PolyElem(x.0.iter().map(|c| self.base.neg(c)).collect())
    }
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        trim(&self.base, mul_coeffs(&self.base, &x.0, &y.0, usize::MAX))
    }
    fn is_zero(&self, x: &Self::Elem) -> bool {
        x.0.is_empty()
    }
    /// Only constant units are recognised; over a reduced base these are all of them.
    fn inverse(&self, x: &Self::Elem) -> Option<Self::Elem> {
        match x.0.as_slice() {
            [c] => self.base.inverse(c).map(|i| self.embed(&i)),
            _ => None,
        }
    }
    fn theta(&self, x: &Self::Elem) -> Self::Elem {
        PolyElem(x.0.iter().map(|c| self.base.theta(c)).collect())
    }
    fn antifixed_unit(&self) -> Result<Self::Elem, RingError> {
        self.base
            .antifixed_unit()
            .map(|a| self.embed(&a))
            .map_err(|_| RingError::NoAntifixedUnit(self.name()))
    }
    fn generator(&self, name: &str) -> Option<Self::Elem> {
        if name == "t" {
            Some(self.var())
        } else {
            self.base.generator(name).map(|g| self.embed(&g))
        }
    }
    fn format(&self, x: &Self::Elem) -> String {
        format_poly(&self.base, x)
    }
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem {
        let len = (rng.next_u32() % 4) as usize;
        trim(&self.base, (0..len).map(|_| self.base.random(rng)).collect())
    }
}

/// `B[t]/(t^k)` with `θ` acting on coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedPoly<B> {
    base: B,
    k: usize,
}

impl<B: InvolutiveRing> TruncatedPoly<B> {
    /// Panics if `k == 0`.
    pub fn new(base: B, k: usize) -> Self {
        assert!(k >= 1, "truncation degree must be positive");
        Self { base, k }
    }

    pub fn base(&self) -> &B {
        &self.base
    }

    pub fn degree_bound(&self) -> usize {
        self.k
    }

    pub fn embed(&self, c: &B::Elem) -> PolyElem<B::Elem> {
        self.from_coeffs(vec![c.clone()])
    }

    /// The class of `t` (zero when `k == 1`).
    pub fn var(&self) -> PolyElem<B::Elem> {
        self.from_coeffs(vec![self.base.zero(), self.base.one()])
    }

    /// `c·t^d`, truncated.
    pub fn monomial(&self, c: &B::Elem, d: usize) -> PolyElem<B::Elem> {
        let mut v = vec![self.base.zero(); d + 1];
        v[d] = c.clone();
        self.from_coeffs(v)
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<B::Elem>) -> PolyElem<B::Elem> {
        coeffs.truncate(self.k);
        trim(&self.base, coeffs)
    }

    pub fn coeff(&self, x: &PolyElem<B::Elem>, d: usize) -> B::Elem {
        x.0.get(d).cloned().unwrap_or_else(|| self.base.zero())
    }
}

impl<B: InvolutiveRing> InvolutiveRing for TruncatedPoly<B> {
    type Elem = PolyElem<B::Elem>;

    fn name(&self) -> String {
        format!("trunc({},{})", self.base.name(), self.k)
    }
    fn zero(&self) -> Self::Elem {
        PolyElem(Vec::new())
    }
    fn one(&self) -> Self::Elem {
        self.embed(&self.base.one())
    }
    fn from_int(&self, n: i64) -> Self::Elem {
        self.embed(&self.base.from_int(n))
    }
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        trim(&self.base, add_coeffs(&self.base, &x.0, &y.0))
    }
    fn neg(&self, x: &Self::Elem) -> Self::Elem {
        PolyElem(x.0.iter().map(|c| self.base.neg(c)).collect())
    }
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        trim(&self.base, mul_coeffs(&self.base, &x.0, &y.0, self.k))
    }
    fn is_zero(&self, x: &Self::Elem) -> bool {
        x.0.is_empty()
    }
    /// A truncated series is a unit iff its constant term is.
    fn inverse(&self, x: &Self::Elem) -> Option<Self::Elem> {
        let c0 = x.0.first()?;
        let c0_inv = self.base.inverse(c0)?;
        // x = c0 (1 - n) with n nilpotent; x⁻¹ = c0⁻¹ Σ n^j
        let n = self.neg(&self.mul(&self.embed(&c0_inv), &self.sub(x, &self.embed(c0))));
        let mut acc = self.one();
        let mut power = self.one();
        for _ in 1..self.k {
            power = self.mul(&power, &n);
            acc = self.add(&acc, &power);
        }
        Some(self.mul(&acc, &self.embed(&c0_inv)))
    }
    fn theta(&self, x: &Self::Elem) -> Self::Elem {
        PolyElem(x.0.iter().map(|c| self.base.theta(c)).collect())
    }
    fn antifixed_unit(&self) -> Result<Self::Elem, RingError> {
        self.base
            .antifixed_unit()
            .map(|a| self.embed(&a))
            .map_err(|_| RingError::NoAntifixedUnit(self.name()))
    }
    fn generator(&self, name: &str) -> Option<Self::Elem> {
        if name == "t" {
            Some(self.var())
        } else {
            self.base.generator(name).map(|g| self.embed(&g))
        }
    }
    fn format(&self, x: &Self::Elem) -> String {
        format_poly(&self.base, x)
    }
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem {
        self.from_coeffs((0..self.k).map(|_| self.base.random(rng)).collect())
    }
}
