//! Runtime-selected rings, built from descriptor strings such as
//! `trunc(gaussian-rationals,3)` or `quad(rationals,-1)`.

use std::fmt;
use std::str::FromStr;

use rand::RngCore;

use super::{
    FiniteFieldSq, GaussianRational, GaussianRationals, GfElem, InvolutiveRing, PolyElem, PolyExt, QuadElem,
    QuadraticExt, Rational, Rationals, RingError, TruncatedPoly,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingDescriptor {
    Rationals,
    GaussianRationals,
    /// `F_{p^{2k}}` with `θ(x) = x^{p^k}`.
    FiniteFieldSq { p: u32, k: u32 },
    Quadratic { base: Box<RingDescriptor>, d: i64 },
    Poly { base: Box<RingDescriptor> },
    Truncated { base: Box<RingDescriptor>, k: usize },
}

impl RingDescriptor {
    pub fn build(&self) -> Result<AnyRing, RingError> {
        Ok(match self {
            RingDescriptor::Rationals => AnyRing::Rationals(Rationals),
            RingDescriptor::GaussianRationals => AnyRing::Gaussian(GaussianRationals),
            RingDescriptor::FiniteFieldSq { p, k } => AnyRing::Gf(FiniteFieldSq::new(*p, *k)?),
            RingDescriptor::Quadratic { base, d } => AnyRing::Quad(Box::new(QuadraticExt::new(base.build()?, *d))),
            RingDescriptor::Poly { base } => AnyRing::Poly(Box::new(PolyExt::new(base.build()?))),
            RingDescriptor::Truncated { base, k } => {
                if *k == 0 {
                    return Err(RingError::UnsupportedDescriptor(self.to_string()));
                }
                AnyRing::Trunc(Box::new(TruncatedPoly::new(base.build()?, *k)))
            }
        })
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Rationals => write!(f, "rationals"),
            RingDescriptor::GaussianRationals => write!(f, "gaussian-rationals"),
            RingDescriptor::FiniteFieldSq { p, k } => write!(f, "gf({p},{k})"),
            RingDescriptor::Quadratic { base, d } => write!(f, "quad({base},{d})"),
            RingDescriptor::Poly { base } => write!(f, "poly({base})"),
            RingDescriptor::Truncated { base, k } => write!(f, "trunc({base},{k})"),
        }
    }
}

/// Split `name(arg1,arg2,...)` at top-level commas.
fn split_call(s: &str) -> Option<(&str, Vec<&str>)> {
    let open = s.find('(')?;
    if !s.ends_with(')') {
        return None;
    }
    let head = &s[..open];
    let inner = &s[open + 1..s.len() - 1];
    let mut args = Vec::new();
    let (mut depth, mut start) = (0i32, 0usize);
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                args.push(inner[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    args.push(inner[start..].trim());
    Some((head.trim(), args))
}

impl FromStr for RingDescriptor {
    type Err = RingError;

    fn from_str(input: &str) -> Result<Self, RingError> {
        let bad = || RingError::UnsupportedDescriptor(input.to_string());
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let s = s.to_ascii_lowercase().replace('_', "-");
        match s.as_str() {
            "rationals" | "q" => return Ok(RingDescriptor::Rationals),
            "gaussian-rationals" | "q(i)" => return Ok(RingDescriptor::GaussianRationals),
            _ => {}
        }
        let (head, args) = split_call(&s).ok_or_else(bad)?;
        match (head, args.as_slice()) {
            ("gf" | "finite-field-sq", [p, k]) => Ok(RingDescriptor::FiniteFieldSq {
                p: p.parse().map_err(|_| bad())?,
                k: k.parse().map_err(|_| bad())?,
            }),
            ("quad" | "quadratic-ext", [base, d]) => Ok(RingDescriptor::Quadratic {
                base: Box::new(base.parse()?),
                d: d.parse().map_err(|_| bad())?,
            }),
            ("poly" | "poly-ext", [base]) => Ok(RingDescriptor::Poly { base: Box::new(base.parse()?) }),
            ("trunc" | "truncated-poly", [base, k]) => Ok(RingDescriptor::Truncated {
                base: Box::new(base.parse()?),
                k: k.parse().map_err(|_| bad())?,
            }),
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone)]
pub enum AnyRing {
    Rationals(Rationals),
    Gaussian(GaussianRationals),
    Gf(FiniteFieldSq),
    Quad(Box<QuadraticExt<AnyRing>>),
    Poly(Box<PolyExt<AnyRing>>),
    Trunc(Box<TruncatedPoly<AnyRing>>),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum AnyElem {
    Rational(Rational),
    Gaussian(GaussianRational),
    Gf(GfElem),
    Quad(Box<QuadElem<AnyElem>>),
    Poly(PolyElem<AnyElem>),
}

impl FromStr for AnyRing {
    type Err = RingError;
    fn from_str(s: &str) -> Result<Self, RingError> {
        s.parse::<RingDescriptor>()?.build()
    }
}

// Elements handed to an AnyRing are always produced by that same ring, so a
// variant mismatch is a programming error.
macro_rules! unwrap_as {
    ($e:expr, $variant:ident) => {
        match $e {
            AnyElem::$variant(x) => x,
            other => panic!("element {other:?} does not belong to this ring"),
        }
    };
}

macro_rules! lift {
    ($self:expr, $r:ident => $body:expr, quad $q:ident => $qbody:expr, poly $p:ident => $pbody:expr) => {
        match $self {
            AnyRing::Rationals($r) => $body,
            AnyRing::Gaussian($r) => $body,
            AnyRing::Gf($r) => $body,
            AnyRing::Quad($q) => $qbody,
            AnyRing::Poly($p) => $pbody,
            AnyRing::Trunc($p) => $pbody,
        }
    };
}

trait Wrap: InvolutiveRing {
    fn wrap(x: Self::Elem) -> AnyElem;
    fn peel(x: &AnyElem) -> &Self::Elem;
}

impl Wrap for Rationals {
    fn wrap(x: Rational) -> AnyElem {
        AnyElem::Rational(x)
    }
    fn peel(x: &AnyElem) -> &Rational {
        unwrap_as!(x, Rational)
    }
}
impl Wrap for GaussianRationals {
    fn wrap(x: GaussianRational) -> AnyElem {
        AnyElem::Gaussian(x)
    }
    fn peel(x: &AnyElem) -> &GaussianRational {
        unwrap_as!(x, Gaussian)
    }
}
impl Wrap for FiniteFieldSq {
    fn wrap(x: GfElem) -> AnyElem {
        AnyElem::Gf(x)
    }
    fn peel(x: &AnyElem) -> &GfElem {
        unwrap_as!(x, Gf)
    }
}
impl Wrap for QuadraticExt<AnyRing> {
    fn wrap(x: QuadElem<AnyElem>) -> AnyElem {
        AnyElem::Quad(Box::new(x))
    }
    fn peel(x: &AnyElem) -> &QuadElem<AnyElem> {
        unwrap_as!(x, Quad)
    }
}
impl Wrap for PolyExt<AnyRing> {
    fn wrap(x: PolyElem<AnyElem>) -> AnyElem {
        AnyElem::Poly(x)
    }
    fn peel(x: &AnyElem) -> &PolyElem<AnyElem> {
        unwrap_as!(x, Poly)
    }
}
impl Wrap for TruncatedPoly<AnyRing> {
    fn wrap(x: PolyElem<AnyElem>) -> AnyElem {
        AnyElem::Poly(x)
    }
    fn peel(x: &AnyElem) -> &PolyElem<AnyElem> {
        unwrap_as!(x, Poly)
    }
}

/// Apply a closure generic over the concrete ring behind an `AnyRing`.
macro_rules! with_ring {
    ($self:expr, |$r:ident| $body:expr) => {
        lift!($self, $r => $body, quad $r => { let $r = &**$r; $body }, poly $r => { let $r = &**$r; $body })
    };
}

fn nullary<W: Wrap>(r: &W, f: impl FnOnce(&W) -> W::Elem) -> AnyElem {
    W::wrap(f(r))
}

impl InvolutiveRing for AnyRing {
    type Elem = AnyElem;

    fn name(&self) -> String {
        with_ring!(self, |r| r.name())
    }
    fn zero(&self) -> AnyElem {
        with_ring!(self, |r| nullary(r, |r| r.zero()))
    }
    fn one(&self) -> AnyElem {
        with_ring!(self, |r| nullary(r, |r| r.one()))
    }
    fn from_int(&self, n: i64) -> AnyElem {
        with_ring!(self, |r| nullary(r, |r| r.from_int(n)))
    }
    fn add(&self, a: &AnyElem, b: &AnyElem) -> AnyElem {
        with_ring!(self, |r| wrap_of(r, r.add(peel_of(r, a), peel_of(r, b))))
    }
    fn neg(&self, a: &AnyElem) -> AnyElem {
        with_ring!(self, |r| wrap_of(r, r.neg(peel_of(r, a))))
    }
    fn sub(&self, a: &AnyElem, b: &AnyElem) -> AnyElem {
        with_ring!(self, |r| wrap_of(r, r.sub(peel_of(r, a), peel_of(r, b))))
    }
    fn mul(&self, a: &AnyElem, b: &AnyElem) -> AnyElem {
        with_ring!(self, |r| wrap_of(r, r.mul(peel_of(r, a), peel_of(r, b))))
    }
    fn is_zero(&self, a: &AnyElem) -> bool {
        with_ring!(self, |r| r.is_zero(peel_of(r, a)))
    }
    fn inverse(&self, a: &AnyElem) -> Option<AnyElem> {
        with_ring!(self, |r| r.inverse(peel_of(r, a)).map(|x| wrap_of(r, x)))
    }
    fn theta(&self, a: &AnyElem) -> AnyElem {
        with_ring!(self, |r| wrap_of(r, r.theta(peel_of(r, a))))
    }
    fn antifixed_unit(&self) -> Result<AnyElem, RingError> {
        with_ring!(self, |r| r.antifixed_unit().map(|x| wrap_of(r, x)))
    }
    fn generator(&self, name: &str) -> Option<AnyElem> {
        with_ring!(self, |r| r.generator(name).map(|x| wrap_of(r, x)))
    }
    fn format(&self, a: &AnyElem) -> String {
        with_ring!(self, |r| r.format(peel_of(r, a)))
    }
    fn random(&self, rng: &mut dyn RngCore) -> AnyElem {
        with_ring!(self, |r| wrap_of(r, r.random(rng)))
    }
}

fn wrap_of<W: Wrap>(_: &W, x: W::Elem) -> AnyElem {
    W::wrap(x)
}

fn peel_of<'a, W: Wrap>(_: &W, x: &'a AnyElem) -> &'a W::Elem {
    W::peel(x)
}
