//! Run with: cargo run --release --example normalizer_sample
//!
//! Conjugating the generators over Z[i][1/6] by sampled group elements over
//! Q(i): words over the subring stay inside, a parameter 1/5 leaves it.

use twisted_chevalley::groups::AdjointGroup;
use twisted_chevalley::rings::{GaussianIntegersSixth, GaussianRational, GaussianRationals, Rational};
use twisted_chevalley::twist::TwistedSystem;
use twisted_chevalley::verifiers::normalizer::subring_generators;
use twisted_chevalley::verifiers::{check_normalizer_sample, conjugation_stays_in_ring};

fn main() {
    let group = AdjointGroup::new(TwistedSystem::new("A3".parse().unwrap(), GaussianRationals).unwrap());
    let sub = GaussianIntegersSixth::new();
    let gens = subring_generators(&group, &sub).unwrap();
    let fifth = GaussianRational::new(Rational::new(1, 5), Rational::ZERO);
    let a1 = group.system().classes().class_of(group.system().system().parse_root("a2").unwrap());
    let g = group.twisted_generator(a1, &fifth, None).unwrap();
    println!("x_[a2](1/5): {:?}", conjugation_stays_in_ring(&group, &g, &sub, &gens).err());

    let report = check_normalizer_sample(&group, &sub, 7, 20);
    let (pass, fail) = report.count();
    println!("{} generators, 20 samples: {pass} checks pass, {fail} fail", gens.len());
}
