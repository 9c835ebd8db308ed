//! Verification engines. Each suite returns a [`VerificationReport`] and
//! never panics on a failed identity; failures are recorded with witnesses.

pub mod generation;
pub mod normalizer;
pub mod recovery;
pub mod relations;
pub mod report;
pub mod tangent;

pub use generation::{generator_set, span_closure, verify_generation, SpanClosure};
pub use normalizer::{check_normalizer_sample, conjugation_stays_in_ring, NormalizerWitness};
pub use recovery::{recover_root_element, verify_recovery, RecoveryCoefficients};
pub use relations::{verify_basis, verify_group_relations, verify_signs};
pub use report::{Check, Status, VerificationReport};
pub use tangent::{tangent_extract, verify_tangent_identities, TangentCoefficients, TangentError};

use rand::RngCore;

use crate::groups::{AdjointGroup, GroupElement, GroupError};
use crate::rings::InvolutiveRing;
use crate::roots::ClassKind;

/// `(x + θx)/2`.
pub(crate) fn fixed_part<R: InvolutiveRing>(ring: &R, x: &R::Elem) -> R::Elem {
    ring.mul(&ring.add(x, &ring.theta(x)), &ring.half().expect("1/2 checked by caller"))
}

/// `(x - θx)/2`.
pub(crate) fn antifixed_part<R: InvolutiveRing>(ring: &R, x: &R::Elem) -> R::Elem {
    ring.mul(&ring.sub(x, &ring.theta(x)), &ring.half().expect("1/2 checked by caller"))
}

/// Admissible generator parameters for a class kind built from a free `t`
/// and a free antifixed shift: `t` is made θ-fixed for `A1`, and for `A2`
/// `u = tθ(t)/2 + shift`.
pub(crate) fn admissible_params<R: InvolutiveRing>(
    ring: &R,
    kind: ClassKind,
    t: R::Elem,
    shift: &R::Elem,
) -> (R::Elem, Option<R::Elem>) {
    match kind {
        ClassKind::A1 => (fixed_part(ring, &t), None),
        ClassKind::A1Sq => (t, None),
        ClassKind::A2 => {
            let norm_half = ring.mul(&ring.mul(&t, &ring.theta(&t)), &ring.half().expect("1/2 checked by caller"));
            let u = ring.add(&norm_half, &antifixed_part(ring, shift));
            (t, Some(u))
        }
    }
}

/// A random class generator `x_[c](t[, u])` with ring-random parameters.
pub(crate) fn random_generator<R: InvolutiveRing>(
    group: &AdjointGroup<R>,
    class: usize,
    rng: &mut dyn RngCore,
) -> Result<GroupElement<R::Elem>, GroupError> {
    let ring = group.ring();
    let kind = group.system().classes().class(class).kind;
    let (t, shift) = (ring.random(rng), ring.random(rng));
    let (t, u) = admissible_params(ring, kind, t, &shift);
    group.twisted_generator(class, &t, u.as_ref())
}
