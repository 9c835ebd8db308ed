//! Run with: cargo run --example tangent_algebra
//!
//! Tangent vectors of curves over truncated polynomial rings and the
//! membership identities for every class of ²A₄.

use twisted_chevalley::groups::AdjointGroup;
use twisted_chevalley::rings::{GaussianRationals, InvolutiveRing, TruncatedPoly};
use twisted_chevalley::twist::TwistedSystem;
use twisted_chevalley::verifiers::{tangent_extract, verify_tangent_identities, TangentCoefficients};

fn main() {
    let group = AdjointGroup::new(TwistedSystem::new("A4".parse().unwrap(), GaussianRationals).unwrap());
    let tr = TruncatedPoly::new(GaussianRationals, 3);
    let curve = group.over(tr.clone()).twisted_generator(0, &tr.var(), None).unwrap();
    let x = tangent_extract(&tr, &curve.matrix).unwrap();
    let nonzero = x.entries().iter().filter(|e| !GaussianRationals.is_zero(e)).count();
    println!("tangent of x_[c0](t) has {nonzero} nonzero entries");

    let report = verify_tangent_identities(&group, &TangentCoefficients::default(), 1).unwrap();
    for c in &report.checks {
        if !c.id.starts_with("converse/") {
            println!("{:?} {}", c.status, c.id);
        }
    }
    println!("config: {}", serde_json::to_string(&report.config).unwrap());
}
