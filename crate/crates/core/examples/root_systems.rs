//! Run with: cargo run --example root_systems
//!
//! Positive roots, the standard diagram symmetry and the twisted classes of
//! each supported type.

use twisted_chevalley::roots::{classify_orbits, ClassKind, DiagramPermutation, RootSystem};

fn main() {
    for kind in ["A3", "A4", "D4", "E6"] {
        let system = RootSystem::new(kind.parse().unwrap()).unwrap();
        let rho = DiagramPermutation::standard(&system);
        let classes = classify_orbits(&system, &rho);
        println!(
            "{kind}: {} roots, rho = {}, classes A1 {} / A1^2 {} / A2 {}",
            system.len(),
            rho.cycles(),
            classes.count(ClassKind::A1),
            classes.count(ClassKind::A1Sq),
            classes.count(ClassKind::A2)
        );
    }
    let a4 = RootSystem::new("A4".parse().unwrap()).unwrap();
    let classes = classify_orbits(&a4, &DiagramPermutation::standard(&a4));
    for c in 0..classes.num_positive() {
        let cls = classes.class(c);
        let members: Vec<String> = cls.members.iter().map(|&m| a4.root(m).to_string()).collect();
        println!("  A4 class {}: {}", cls.kind, members.join(", "));
    }
}
