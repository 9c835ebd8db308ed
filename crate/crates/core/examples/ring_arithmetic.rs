//! Run with: cargo run --example ring_arithmetic
//!
//! Rings with involution built from descriptors, their antifixed units and
//! the split of an element into θ-fixed and θ-antifixed parts.

use twisted_chevalley::rings::{AnyRing, InvolutiveRing};

fn main() {
    for desc in ["gaussian-rationals", "gf(3,1)", "gf(5,1)", "quad(rationals,5)", "trunc(gaussian-rationals,3)"] {
        let ring: AnyRing = desc.parse().unwrap();
        let a = ring.antifixed_unit().map(|a| ring.format(&a)).unwrap_or_else(|e| e.to_string());
        println!("{:<30} 1/2: {:<5} 1/3: {:<5} a = {a}", ring.name(), ring.has_half(), ring.has_third());
    }
    let q: AnyRing = "gaussian-rationals".parse().unwrap();
    let x = q.parse_elem("3/2 + 5*i").unwrap();
    let (f, g) = q.split_fixed_antifixed(&x).unwrap();
    println!("{} = {} + {}; theta = {}", q.format(&x), q.format(&f), q.format(&g), q.format(&q.theta(&x)));
}
