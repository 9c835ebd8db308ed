//! `F_{p^{2k}}` with the order-2 Frobenius power `θ(x) = x^{p^k}`.
//!
//! Elements are residue polynomials over `F_p` modulo a fixed monic primitive
//! polynomial, packed as base-`p` digits into a `u32` (digit `j` is the
//! coefficient of `g^j`, where `g` is the class of the variable). The
//! modulus is the first primitive polynomial in a deterministic enumeration,
//! so `g` generates the multiplicative group. Multiplication goes through
//! power tables indexed by the packed residue.

use std::sync::Arc;

use rand::RngCore;

use super::{InvolutiveRing, RingError};

/// Largest supported field size; keeps the power tables small.
pub const MAX_FIELD_SIZE: u64 = 1 << 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct GfElem(pub u32);

#[derive(Debug)]
struct Tables {
    /// Monic modulus, coefficients low degree first (length `m + 1`).
    modulus: Vec<u32>,
    /// `exp[j] = g^j` for `0 <= j < q - 1`.
    exp: Vec<u32>,
    /// `log[x]` for nonzero packed `x`.
    log: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct FiniteFieldSq {
    p: u32,
    k: u32,
    m: u32,
    q: u32,
    tables: Arc<Tables>,
}

impl PartialEq for FiniteFieldSq {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k
    }
}
impl Eq for FiniteFieldSq {}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

impl FiniteFieldSq {
    /// `F_{p^{2k}}` with `θ(x) = x^{p^k}`.
    pub fn new(p: u32, k: u32) -> Result<Self, RingError> {
        let desc = format!("gf({p},{k})");
        if !is_prime(p) || k == 0 {
            return Err(RingError::UnsupportedDescriptor(desc));
        }
        let m = 2 * k;
        let q = (p as u64).checked_pow(m).filter(|&q| q <= MAX_FIELD_SIZE).ok_or_else(|| {
            RingError::UnsupportedDescriptor(format!("{desc}: field larger than {MAX_FIELD_SIZE}"))
        })? as u32;
        let tables = Arc::new(build_tables(p, m, q));
        Ok(Self { p, k, m, q, tables })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Half the extension degree: the field is `F_{p^{2k}}`.
    pub fn half_degree(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> u32 {
        self.q
    }

    /// Coefficients of the defining polynomial, low degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.tables.modulus
    }

    /// The stored primitive element `g`.
    pub fn primitive(&self) -> GfElem {
        GfElem(self.tables.exp[1 % (self.q as usize - 1)])
    }

    pub fn elements(&self) -> impl Iterator<Item = GfElem> {
        (0..self.q).map(GfElem)
    }

    /// `g^j`.
    pub fn power_of_primitive(&self, j: u64) -> GfElem {
        GfElem(self.tables.exp[(j % (self.q as u64 - 1)) as usize])
    }

    pub fn digits(&self, x: GfElem) -> Vec<u32> {
        let mut v = x.0;
        (0..self.m)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> GfElem {
        GfElem(pack(digits, self.p))
    }

    fn frobenius_exponent(&self) -> u64 {
        (self.p as u64).pow(self.k)
    }
}

fn pack(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0u32, |acc, &d| acc * p + d % p)
}

fn unpack(mut v: u32, p: u32, m: u32) -> Vec<u32> {
    (0..m)
        .map(|_| {
            let d = v % p;
            v /= p;
            d
        })
        .collect()
}

/// Multiply a residue by the variable modulo the monic `modulus`.
fn times_var(digits: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let m = digits.len();
    let top = digits[m - 1];
    let mut out = vec![0u32; m];
    for j in (1..m).rev() {
        out[j] = digits[j - 1];
    }
    if top != 0 {
        for (j, o) in out.iter_mut().enumerate() {
            // subtract top * modulus[j]
            *o = (*o + p - (top * modulus[j]) % p) % p;
        }
    }
    out
}

fn build_tables(p: u32, m: u32, q: u32) -> Tables {
    // Enumerate monic degree-m polynomials by their lower coefficients packed
    // in base p; accept the first one whose variable has order q - 1.
    let order = q - 1;
    for lower in 1..q {
        let mut modulus = unpack(lower, p, m);
        if modulus[0] == 0 {
            continue;
        }
        modulus.push(1);
        let mut exp = Vec::with_capacity(order as usize);
        let mut cur = {
            let mut one = vec![0u32; m as usize];
            one[0] = 1;
            one
        };
        let one_packed = 1u32;
        let mut ok = true;
        for j in 0..order {
            let packed = pack(&cur, p);
            if j > 0 && (packed == one_packed || packed == 0) {
                ok = false;
                break;
            }
            exp.push(packed);
            cur = times_var(&cur, &modulus, p);
        }
        if !ok || pack(&cur, p) != one_packed {
            continue;
        }
        let mut log = vec![u32::MAX; q as usize];
        for (j, &x) in exp.iter().enumerate() {
            log[x as usize] = j as u32;
        }
        return Tables { modulus, exp, log };
    }
    unreachable!("every finite field has a primitive polynomial")
}

impl InvolutiveRing for FiniteFieldSq {
    type Elem = GfElem;

    fn name(&self) -> String {
        format!("gf({},{})", self.p, self.k)
    }
    fn zero(&self) -> GfElem {
        GfElem(0)
    }
    fn one(&self) -> GfElem {
        GfElem(1)
    }
    fn from_int(&self, n: i64) -> GfElem {
        GfElem(n.rem_euclid(self.p as i64) as u32)
    }
    fn add(&self, a: &GfElem, b: &GfElem) -> GfElem {
        if self.m == 2 {
            let p = self.p;
            let lo = (a.0 % p + b.0 % p) % p;
            let hi = (a.0 / p + b.0 / p) % p;
            return GfElem(hi * p + lo);
        }
        let (mut x, mut y) = (a.0, b.0);
        let (mut out, mut place) = (0u32, 1u32);
        for _ in 0..self.m {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        GfElem(out)
    }
    fn neg(&self, a: &GfElem) -> GfElem {
        let mut x = a.0;
        let (mut out, mut place) = (0u32, 1u32);
        for _ in 0..self.m {
            out += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place *= self.p;
        }
        GfElem(out)
    }
    fn mul(&self, a: &GfElem, b: &GfElem) -> GfElem {
        if a.0 == 0 || b.0 == 0 {
            return GfElem(0);
        }
        let t = &self.tables;
        let s = t.log[a.0 as usize] as u64 + t.log[b.0 as usize] as u64;
        GfElem(t.exp[(s % (self.q as u64 - 1)) as usize])
    }
    fn inverse(&self, a: &GfElem) -> Option<GfElem> {
        if a.0 == 0 {
            return None;
        }
        let order = self.q - 1;
        let l = self.tables.log[a.0 as usize];
        Some(GfElem(self.tables.exp[((order - l) % order) as usize]))
    }
    fn theta(&self, a: &GfElem) -> GfElem {
        if a.0 == 0 {
            return *a;
        }
        let l = self.tables.log[a.0 as usize] as u64;
        self.power_of_primitive(l * self.frobenius_exponent())
    }
    fn antifixed_unit(&self) -> Result<GfElem, RingError> {
        (0..self.q as u64 - 1)
            .map(|j| self.power_of_primitive(j))
            .find(|a| self.theta(a) == self.neg(a) && self.neg(a) != *a)
            .ok_or_else(|| RingError::NoAntifixedUnit(self.name()))
    }
    fn generator(&self, name: &str) -> Option<GfElem> {
        (name == "g").then(|| self.primitive())
    }
    fn format(&self, a: &GfElem) -> String {
        let digits = self.digits(*a);
        let terms: Vec<String> = digits
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &d)| d != 0)
            .map(|(j, &d)| match (j, d) {
                (0, d) => d.to_string(),
                (1, 1) => "g".into(),
                (1, d) => format!("{d}*g"),
                (j, 1) => format!("g^{j}"),
                (j, d) => format!("{d}*g^{j}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
    fn random(&self, rng: &mut dyn RngCore) -> GfElem {
        GfElem(rng.next_u32() % self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::laws::check_ring_laws;

    #[test]
    fn f9_frobenius_is_cube() {
        let f = FiniteFieldSq::new(3, 1).unwrap();
        assert_eq!(f.size(), 9);
        let g = f.primitive();
        assert_eq!(f.theta(&g), f.pow(&g, 3));
        for x in f.elements() {
            assert_eq!(f.theta(&x), f.pow(&x, 3));
        }
    }

    #[test]
    fn f9_split_by_enumeration() {
        // check the split against the defining properties for every element
        let f = FiniteFieldSq::new(3, 1).unwrap();
        for x in f.elements() {
            let (u, v) = f.split_fixed_antifixed(&x).unwrap();
            assert_eq!(f.pow(&u, 3), u);
            assert_eq!(f.pow(&v, 3), f.neg(&v));
            assert_eq!(f.add(&u, &v), x);
        }
    }

    #[test]
    fn f9_antifixed_unit_squares_to_minus_one() {
        let f = FiniteFieldSq::new(3, 1).unwrap();
        let a = f.antifixed_unit().unwrap();
        // scan oracle: least power of g with a^3 = -a
        let g = f.primitive();
        let scanned = (0..8u64)
            .map(|j| f.pow(&g, j))
            .find(|x| f.pow(x, 3) == f.neg(x) && *x != f.zero())
            .unwrap();
        assert_eq!(a, scanned);
        assert_eq!(f.mul(&a, &a), f.from_int(-1));
    }

    #[test]
    fn primitive_has_full_order() {
        for (p, k) in [(3, 1), (5, 1), (3, 2), (7, 1), (3, 3)] {
            let f = FiniteFieldSq::new(p, k).unwrap();
            let g = f.primitive();
            let q = f.size() as u64;
            assert_eq!(f.pow(&g, q - 1), f.one());
            let distinct: std::collections::HashSet<_> = (0..q - 1).map(|j| f.pow(&g, j)).collect();
            assert_eq!(distinct.len() as u64, q - 1);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(FiniteFieldSq::new(4, 1).is_err());
        assert!(FiniteFieldSq::new(3, 0).is_err());
        assert!(FiniteFieldSq::new(101, 2).is_err());
    }

    #[test]
    fn char_two_has_no_half() {
        let f = FiniteFieldSq::new(2, 1).unwrap();
        assert!(!f.has_half());
    }

    #[test]
    fn laws() {
        for (p, k) in [(3, 1), (5, 1), (3, 2), (3, 3)] {
            check_ring_laws(&FiniteFieldSq::new(p, k).unwrap(), 300, p as u64 * 10 + k as u64);
        }
    }
}
