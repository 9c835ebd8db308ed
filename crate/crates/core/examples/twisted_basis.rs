//! Run with: cargo run --example twisted_basis
//!
//! The σ-fixed basis of the twisted algebra of type ²A₄ over the Gaussian
//! rationals, with the Chevalley coordinates of each element.

use twisted_chevalley::rings::{GaussianRationals, InvolutiveRing};
use twisted_chevalley::twist::{twisted_basis, TwistedSystem};

fn main() {
    let sys = TwistedSystem::new("A4".parse().unwrap(), GaussianRationals).unwrap();
    let basis = twisted_basis(&sys).unwrap();
    let ring = sys.ring();
    for e in basis.elements() {
        let terms: Vec<String> = e
            .vector
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !ring.is_zero(c))
            .map(|(k, c)| format!("{}@{k}", ring.format(c)))
            .collect();
        let fixed = sys.sigma_on_algebra(&e.vector) == e.vector;
        println!("{:<18} fixed={fixed} {}", e.label.render(sys.system(), sys.classes()), terms.join(" "));
    }
    println!("{} elements for an algebra of dimension {}", basis.len(), sys.dim());
}
