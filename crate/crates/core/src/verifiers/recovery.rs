//! Root elements recovered as linear combinations of twisted generators.

use std::time::Instant;

use serde_json::json;
use thiserror::Error;

use super::report::{record_equal, VerificationReport};
use crate::groups::{AdjointGroup, GroupError};
use crate::matrix::Matrix;
use crate::rings::{InvolutiveRing, RingError};
use crate::roots::ClassKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecoveryError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("root {member} is not in class {class}")]
    NotInClass { class: usize, member: usize },
}

/// Scalars in the recovery formulas, as `(numerator, denominator)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecoveryCoefficients {
    pub a1: (i64, i64),
    pub a1sq: (i64, i64),
    pub a2_first: (i64, i64),
    pub a2_second: (i64, i64),
    pub a2_scale: (i64, i64),
    pub middle: (i64, i64),
}

impl Default for RecoveryCoefficients {
    fn default() -> Self {
        Self { a1: (1, 2), a1sq: (1, 4), a2_first: (8, 1), a2_second: (1, 1), a2_scale: (1, 24), middle: (1, 2) }
    }
}

impl RecoveryCoefficients {
    /// Copies with one coefficient changed each, labelled by field name.
    pub fn single_mutations() -> Vec<(&'static str, Self)> {
        let d = Self::default();
        let bump = |(n, q): (i64, i64)| (n + q, q);
        vec![
            ("a1", Self { a1: bump(d.a1), ..d }),
            ("a1sq", Self { a1sq: bump(d.a1sq), ..d }),
            ("a2_first", Self { a2_first: bump(d.a2_first), ..d }),
            ("a2_second", Self { a2_second: bump(d.a2_second), ..d }),
            ("a2_scale", Self { a2_scale: bump(d.a2_scale), ..d }),
            ("middle", Self { middle: bump(d.middle), ..d }),
        ]
    }
}

fn frac<R: InvolutiveRing>(ring: &R, (n, d): (i64, i64)) -> Result<R::Elem, RingError> {
    ring.div(&ring.from_int(n), &ring.from_int(d))
}

/// `ad(X_member)` computed from generator matrices of its class only.
pub fn recover_root_element<R: InvolutiveRing>(
    group: &AdjointGroup<R>,
    class: usize,
    member: usize,
    coeffs: &RecoveryCoefficients,
) -> Result<Matrix<R::Elem>, RecoveryError> {
    let ring = group.ring();
    let cls = group.system().classes().class(class);
    if !cls.members.contains(&member) {
        return Err(RecoveryError::NotInClass { class, member });
    }
    ring.half()?;
    let x1 = |t: &R::Elem| -> Result<Matrix<R::Elem>, GroupError> { Ok(group.twisted_generator(class, t, None)?.matrix) };
    let x2 = |t: &R::Elem, u: &R::Elem| -> Result<Matrix<R::Elem>, GroupError> {
        Ok(group.twisted_generator(class, t, Some(u))?.matrix)
    };
    let (one, m1) = (ring.one(), ring.neg(&ring.one()));
    let i = |n: i64| ring.from_int(n);
    match cls.kind {
        ClassKind::A1 => Ok(x1(&one)?.sub(ring, &x1(&m1)?).scale(ring, &frac(ring, coeffs.a1)?)),
        ClassKind::A1Sq => {
            let a = ring.antifixed_unit()?;
            let ainv = ring.try_inverse(&a)?;
            let p = x1(&one)?.sub(ring, &x1(&m1)?);
            let q = x1(&a)?.sub(ring, &x1(&ring.neg(&a))?).scale(ring, &ainv);
            let combo = if member == cls.representative() { p.add(ring, &q) } else { p.sub(ring, &q) };
            Ok(combo.scale(ring, &frac(ring, coeffs.a1sq)?))
        }
        ClassKind::A2 => {
            ring.third()?;
            let a = ring.antifixed_unit()?;
            let ainv = ring.try_inverse(&a)?;
            if Some(member) == cls.middle() {
                let n = group.system().table().n(cls.bar(), cls.representative()).unwrap() as i64;
                let diff = x2(&ring.zero(), &a)?.sub(ring, &x2(&ring.zero(), &ring.neg(&a))?);
                let k = ring.mul(&ring.scale_int(n, &frac(ring, coeffs.middle)?), &ainv);
                return Ok(diff.scale(ring, &k));
            }
            let f = |t: &R::Elem, u: &R::Elem| -> Result<Matrix<R::Elem>, GroupError> { Ok(x2(t, u)?.sub(ring, &x2(&ring.neg(t), u)?)) };
            let (c1, c2) = (frac(ring, coeffs.a2_first)?, frac(ring, coeffs.a2_second)?);
            let half = ring.half()?;
            let s = f(&one, &half)?.scale(ring, &c1).sub(ring, &f(&i(2), &i(2))?.scale(ring, &c2));
            let a2 = ring.mul(&a, &a);
            let d = f(&a, &ring.neg(&ring.mul(&a2, &half)))?
                .scale(ring, &c1)
                .sub(ring, &f(&ring.scale_int(2, &a), &ring.scale_int(-2, &a2))?.scale(ring, &c2))
                .scale(ring, &ainv);
            let combo = if member == cls.representative() { s.add(ring, &d) } else { s.sub(ring, &d) };
            Ok(combo.scale(ring, &frac(ring, coeffs.a2_scale)?))
        }
    }
}

/// Recover every root of every class with `coeffs` and compare with
/// `ad(X_α)`; then confirm each single-coefficient mutation of the default
/// formulas breaks some equality.
pub fn verify_recovery<R: InvolutiveRing>(group: &AdjointGroup<R>, coeffs: &RecoveryCoefficients) -> VerificationReport {
    let start = Instant::now();
    let ring = group.ring();
    let sys = group.system();
    let classes = sys.classes();
    let system = sys.system();
    let mut report = VerificationReport::new("recovery");
    report.set_config("type", system.kind().to_string());
    report.set_config("ring", ring.name());
    report.set_config("rho", sys.rho().cycles());
    let run = |coeffs: &RecoveryCoefficients, c: usize, m: usize| recover_root_element(group, c, m, coeffs);
    let defaults = RecoveryCoefficients::default();
    for c in 0..classes.len() {
        let cls = classes.class(c);
        for &m in &cls.members {
            let id = format!("{}[{}]/{}", cls.kind, system.root(cls.representative()), system.root(m));
            match run(coeffs, c, m) {
                Ok(x) => {
                    record_equal(&mut report, ring, id, &x, &group.ad_root(m));
                }
                Err(e) => report.record(id, false, Some(json!({ "error": e.to_string() }))),
            }
        }
    }
    for (field, mutated) in RecoveryCoefficients::single_mutations() {
        let relevant = (0..classes.len()).flat_map(|c| classes.class(c).members.iter().map(move |&m| (c, m)));
        let mut exercised = false;
        let mut broken = false;
        for (c, m) in relevant {
            if let (Ok(x), Ok(y)) = (run(&mutated, c, m), run(&defaults, c, m)) {
                if x != y {
                    exercised = true;
                    broken |= x != group.ad_root(m);
                }
            }
        }
        if exercised {
            report.record(format!("mutation/{field}"), broken, None);
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}
