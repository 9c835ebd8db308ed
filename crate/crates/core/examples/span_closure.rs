//! Run with: cargo run --release --example span_closure
//!
//! The algebra spanned by the class generators of ²A₃ over F₉ and over the
//! Gaussian rationals fills all 15×15 matrices.

use std::time::Instant;

use twisted_chevalley::groups::AdjointGroup;
use twisted_chevalley::rings::{FiniteFieldSq, GaussianRationals, InvolutiveRing};
use twisted_chevalley::twist::TwistedSystem;
use twisted_chevalley::verifiers::{generator_set, span_closure};

fn report<R: InvolutiveRing>(ring: R) {
    let group = AdjointGroup::new(TwistedSystem::new("A3".parse().unwrap(), ring.clone()).unwrap());
    let gens = generator_set(&group).unwrap();
    let start = Instant::now();
    let closure = span_closure(&ring, group.dim(), &gens).unwrap();
    println!(
        "{}: {} generators, dimension {} of {} after {} products ({:.2?})",
        ring.name(),
        gens.len(),
        closure.dimension,
        group.dim() * group.dim(),
        closure.products,
        start.elapsed()
    );
}

fn main() {
    report(FiniteFieldSq::new(3, 1).unwrap());
    report(GaussianRationals);
}
