//! Run with: cargo run --example structure_constants
//!
//! Sign-normalised structure constants of A3 and the signs of the diagram
//! symmetry on the Chevalley basis.

use twisted_chevalley::chevalley::{compute_structure_constants, fix_signs_for_rho};
use twisted_chevalley::roots::{DiagramPermutation, RootSystem};

fn main() {
    let system = RootSystem::new("A3".parse().unwrap()).unwrap();
    let rho = DiagramPermutation::standard(&system);
    let table = fix_signs_for_rho(&compute_structure_constants(&system), &rho).unwrap();
    for (i, j, n) in table.constants().filter(|&(i, j, _)| system.is_positive(i) && system.is_positive(j)) {
        println!("N[{}, {}] = {n:+}", system.root(i), system.root(j));
    }
    for r in 0..system.num_positive() {
        println!("eps[{}] = {:+}", system.root(r), table.epsilon(r));
    }
    println!("rho is an automorphism: {}", table.rho_is_automorphism().is_ok());
}
