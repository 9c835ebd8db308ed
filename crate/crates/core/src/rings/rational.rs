//! Exact rationals with an `i64` fast path.
//!
//! Values are always reduced with a positive denominator. A value whose
//! numerator and denominator fit in `i64` is stored in the small form, so two
//! equal rationals always have the same representation and `Eq`/`Hash` can be
//! derived structurally.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Rational {
    Small { num: i64, den: i64 },
    Big(BigRational),
}

impl Rational {
    pub const ZERO: Rational = Rational::Small { num: 0, den: 1 };
    pub const ONE: Rational = Rational::Small { num: 1, den: 1 };

    pub fn from_integer(n: i64) -> Self {
        Rational::Small { num: n, den: 1 }
    }

    /// `num / den`, reduced. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(num), Ok(den)) => Rational::Small { num, den },
            _ => Rational::Big(BigRational::new(BigInt::from(n), BigInt::from(d))),
        }
    }

    fn from_big(r: BigRational) -> Self {
        // BigRational is already reduced with a positive denominator.
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(num), Some(den)) => Rational::Small { num, den },
            _ => Rational::Big(r),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small { num, den } => BigRational::new_raw(BigInt::from(*num), BigInt::from(*den)),
            Rational::Big(r) => r.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rational::Small { num, .. } => BigInt::from(*num),
            Rational::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rational::Small { den, .. } => BigInt::from(*den),
            Rational::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small { num: 0, .. })
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rational::Small { den, .. } => *den == 1,
            Rational::Big(r) => r.is_integer(),
        }
    }

    pub fn recip(&self) -> Option<Self> {
        match self {
            Rational::Small { num: 0, .. } => None,
            Rational::Small { num, den } => Some(Self::from_i128(*den as i128, *num as i128)),
            Rational::Big(r) => Some(Self::from_big(r.recip())),
        }
    }

    pub fn abs(&self) -> Self {
        match self {
            Rational::Small { num, den } if *num != i64::MIN => Rational::Small { num: num.abs(), den: *den },
            _ => Self::from_big(self.to_big().abs()),
        }
    }

    /// True when the reduced denominator has no prime factor outside `primes`.
    pub fn denominator_supported_on(&self, primes: &[u64]) -> bool {
        let mut d = self.denom();
        for &p in primes {
            let p = BigInt::from(p);
            while (&d % &p).is_zero() {
                d /= &p;
            }
        }
        d.is_one()
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational::from_big(r)
    }
}

impl<'a> Add for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &'a Rational) -> Rational {
        if let (Rational::Small { num: a, den: b }, Rational::Small { num: c, den: d }) = (self, rhs) {
            if b == d {
                return Rational::from_i128(*a as i128 + *c as i128, *b as i128);
            }
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            if let (Some(ad), Some(cb), Some(bd)) = (a.checked_mul(d), c.checked_mul(b), b.checked_mul(d)) {
                if let Some(n) = ad.checked_add(cb) {
                    return Rational::from_i128(n, bd);
                }
            }
        }
        Rational::from_big(self.to_big() + rhs.to_big())
    }
}

impl<'a> Sub for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &'a Rational) -> Rational {
        self + &(-rhs)
    }
}

impl<'a> Mul for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &'a Rational) -> Rational {
        if let (Rational::Small { num: a, den: b }, Rational::Small { num: c, den: d }) = (self, rhs) {
            if *a == 0 || *c == 0 {
                return Rational::ZERO;
            }
            // cross-cancel first so the products stay small
            let g1 = a.gcd(d);
            let g2 = c.gcd(b);
            let n = (*a / g1) as i128 * (*c / g2) as i128;
            let m = (*b / g2) as i128 * (*d / g1) as i128;
            return Rational::from_i128(n, m);
        }
        Rational::from_big(self.to_big() * rhs.to_big())
    }
}

impl<'a> Neg for &'a Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match self {
            Rational::Small { num, den } if *num != i64::MIN => Rational::Small { num: -num, den: *den },
            _ => Rational::from_big(-self.to_big()),
        }
    }
}

impl<'a> Div for &'a Rational {
    type Output = Rational;
    fn div(self, rhs: &'a Rational) -> Rational {
        self * &rhs.recip().expect("division by zero rational")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (Rational::Small { num: a, den: b }, Rational::Small { num: c, den: d }) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small { num, den: 1 } => write!(f, "{num}"),
            Rational::Small { num, den } => write!(f, "{num}/{den}"),
            Rational::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Rational::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| format!("bad rational `{s}`"))?;
        let d: BigInt = d.parse().map_err(|_| format!("bad rational `{s}`"))?;
        if d.is_zero() {
            return Err(format!("zero denominator in `{s}`"));
        }
        Ok(Rational::from_big(BigRational::new(n, d)))
    }
}
