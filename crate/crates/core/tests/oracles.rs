//! Root data, class structure and algebra dimensions against independent
//! enumerations.

use std::collections::BTreeSet;

use twisted_chevalley::chevalley::{compute_structure_constants, fix_signs_for_rho};
use twisted_chevalley::rings::GaussianRationals;
use twisted_chevalley::roots::{classify_orbits, ClassKind, DiagramPermutation, RootSystem};
use twisted_chevalley::twist::{twisted_basis, TwistedSystem};

/// Positive roots of A_n as intervals `[i, j)` of simple roots.
fn type_a_intervals(n: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..=n {
            out.push((0..n).map(|k| i32::from(k >= i && k < j)).collect());
        }
    }
    out
}

/// `(A1, A1^2, A2)` positive class counts of A_n with the reversal symmetry.
fn type_a_class_oracle(n: usize) -> (usize, usize, usize) {
    let roots: BTreeSet<Vec<i32>> = type_a_intervals(n).into_iter().collect();
    let rev = |v: &Vec<i32>| v.iter().rev().copied().collect::<Vec<_>>();
    let sum = |a: &Vec<i32>, b: &Vec<i32>| a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>();
    let mut middles = BTreeSet::new();
    let (mut a1sq, mut a2) = (0, 0);
    for r in &roots {
        let p = rev(r);
        if &p <= r {
            continue;
        }
        if roots.contains(&sum(r, &p)) {
            a2 += 1;
            middles.insert(sum(r, &p));
        } else {
            a1sq += 1;
        }
    }
    let a1 = roots.iter().filter(|r| rev(r) == **r && !middles.contains(*r)).count();
    (a1, a1sq, a2)
}

#[test]
fn type_a_roots_match_interval_enumeration() {
    for n in 2..=6 {
        let sys = RootSystem::new(format!("A{n}").parse().unwrap()).unwrap();
        let got: BTreeSet<Vec<i32>> = (0..sys.num_positive()).map(|i| sys.root(i).coords().to_vec()).collect();
        let want: BTreeSet<Vec<i32>> = type_a_intervals(n).into_iter().collect();
        assert_eq!(got, want, "A{n}");
        assert_eq!(sys.len(), n * (n + 1));
    }
}

#[test]
fn root_counts_d_and_e() {
    for (kind, n) in [("D4", 24), ("D5", 40), ("E6", 72)] {
        assert_eq!(RootSystem::new(kind.parse().unwrap()).unwrap().len(), n, "{kind}");
    }
}

#[test]
fn type_a_classes_match_oracle() {
    for n in 2..=7 {
        let sys = RootSystem::new(format!("A{n}").parse().unwrap()).unwrap();
        let classes = classify_orbits(&sys, &DiagramPermutation::standard(&sys));
        let (a1, a1sq, a2) = type_a_class_oracle(n);
        assert_eq!(
            (classes.count(ClassKind::A1), classes.count(ClassKind::A1Sq), classes.count(ClassKind::A2)),
            (2 * a1, 2 * a1sq, 2 * a2),
            "A{n}"
        );
    }
}

#[test]
fn classes_partition_the_roots() {
    for kind in ["A3", "A4", "A5", "D4", "E6"] {
        let sys = RootSystem::new(kind.parse().unwrap()).unwrap();
        let classes = classify_orbits(&sys, &DiagramPermutation::standard(&sys));
        let mut seen = vec![0; sys.len()];
        for c in classes.classes() {
            let size = match c.kind {
                ClassKind::A1 => 1,
                ClassKind::A1Sq => 2,
                ClassKind::A2 => 3,
            };
            assert_eq!(c.members.len(), size);
            for &m in &c.members {
                seen[m] += 1;
            }
        }
        assert!(seen.iter().all(|&k| k == 1), "{kind}");
    }
}

/// In type A the adjoint structure constants come from `[E_ij, E_jk] = E_ik`:
/// a pair sums to a root exactly when the intervals abut, and then `|N| = 1`.
#[test]
fn type_a_constants_match_matrix_units() {
    for n in 2..=5 {
        let sys = RootSystem::new(format!("A{n}").parse().unwrap()).unwrap();
        let table = compute_structure_constants(&sys);
        for i in 0..sys.len() {
            for j in 0..sys.len() {
                let is_root = sys.sum(i, j).is_some();
                match table.n(i, j) {
                    Some(v) => assert!(is_root && v.abs() == 1, "A{n} N({i},{j}) = {v}"),
                    None => assert!(!is_root || i == sys.negate(j)),
                }
            }
        }
    }
}

#[test]
fn antisymmetry_after_sign_fixing() {
    for kind in ["A3", "A4", "D4", "E6"] {
        let sys = RootSystem::new(kind.parse().unwrap()).unwrap();
        let table = fix_signs_for_rho(&compute_structure_constants(&sys), &DiagramPermutation::standard(&sys)).unwrap();
        for (i, j, v) in table.constants() {
            assert_eq!(table.n(j, i), Some(-v), "{kind}");
        }
    }
}

#[test]
fn twisted_basis_has_full_dimension() {
    for kind in ["A3", "A4", "A5", "D4", "E6"] {
        let sys = TwistedSystem::new(kind.parse().unwrap(), GaussianRationals).unwrap();
        assert_eq!(twisted_basis(&sys).unwrap().len(), sys.dim(), "{kind}");
    }
}
