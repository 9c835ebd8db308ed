//! Run with: cargo run --example group_generators
//!
//! Class generators of the twisted group ²A₄(Q(i)), their σ-fixedness,
//! and a parameter pair that breaks the A2 constraint.

use twisted_chevalley::groups::AdjointGroup;
use twisted_chevalley::rings::{GaussianRational, GaussianRationals, InvolutiveRing};
use twisted_chevalley::roots::ClassKind;
use twisted_chevalley::twist::TwistedSystem;

fn main() {
    let r = GaussianRationals;
    let group = AdjointGroup::new(TwistedSystem::new("A4".parse().unwrap(), r).unwrap());
    let classes = group.system().classes().clone();
    let t = GaussianRational::from_ints(1, 2);
    for c in 0..classes.num_positive() {
        let cls = classes.class(c);
        let g = match cls.kind {
            ClassKind::A2 => {
                let u = r.mul(&r.half().unwrap(), &r.mul(&t, &r.theta(&t)));
                group.twisted_generator(c, &t, Some(&u))
            }
            _ => group.twisted_generator(c, &t, None),
        }
        .unwrap();
        println!(
            "{} [{}]: {} factors, sigma-fixed {}, det {}",
            cls.kind,
            group.system().system().root(cls.representative()),
            g.word.len(),
            group.is_sigma_fixed(&g),
            r.format(&g.matrix.determinant(&r).unwrap())
        );
    }
    let a2 = (0..classes.len()).find(|&c| classes.class(c).kind == ClassKind::A2).unwrap();
    println!("x(1, 1) -> {:?}", group.twisted_generator(a2, &r.one(), Some(&r.one())).err());
}
