//! Run with: cargo run --example recovery_formulas
//!
//! Root elements recovered from differences of class generators, for every
//! root of ²A₄ over Q(i) and F₂₅, and what happens in characteristic 3.

use twisted_chevalley::groups::AdjointGroup;
use twisted_chevalley::rings::{FiniteFieldSq, GaussianRationals, InvolutiveRing};
use twisted_chevalley::twist::TwistedSystem;
use twisted_chevalley::verifiers::{recover_root_element, verify_recovery, RecoveryCoefficients};

fn summary<R: InvolutiveRing>(ring: R) {
    let group = AdjointGroup::new(TwistedSystem::new("A4".parse().unwrap(), ring.clone()).unwrap());
    let report = verify_recovery(&group, &RecoveryCoefficients::default());
    let (pass, fail) = report.count();
    println!("{}: {pass} checks pass, {fail} fail", ring.name());
}

fn main() {
    summary(GaussianRationals);
    summary(FiniteFieldSq::new(5, 1).unwrap());
    let f9 = FiniteFieldSq::new(3, 1).unwrap();
    let group = AdjointGroup::new(TwistedSystem::new("A4".parse().unwrap(), f9).unwrap());
    let cls = group.system().classes().class(1).clone();
    let out = recover_root_element(&group, 1, cls.representative(), &RecoveryCoefficients::default());
    println!("gf(3,1), {} class: {:?}", cls.kind, out.err());
}
