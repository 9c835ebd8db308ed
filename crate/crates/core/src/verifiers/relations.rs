//! Sign normalisation, twisted basis and Steinberg-type relations.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::report::{record_equal, VerificationReport};
use crate::chevalley::{compute_structure_constants, fix_signs_for_rho};
use crate::groups::{AdjointGroup, Character};
use crate::matrix::rank;
use crate::rings::{InvolutiveRing, TruncatedPoly};
use crate::roots::{classify_orbits, ClassKind, DiagramPermutation, RootKind, RootSystem};
use crate::twist::{twisted_basis, TwistedSystem};

/// Sign conditions on `ε` after normalisation, and `ρ` as an automorphism
/// of the Lie algebra on all basis pairs.
pub fn verify_signs(kind: RootKind) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("signs");
    report.set_config("type", kind.to_string());
    let system = match RootSystem::new(kind) {
        Ok(s) => s,
        Err(e) => {
            report.record("root_system", false, Some(json!({ "error": e.to_string() })));
            return report;
        }
    };
    let rho = DiagramPermutation::standard(&system);
    report.set_config("rho", rho.cycles());
    let table = match fix_signs_for_rho(&compute_structure_constants(&system), &rho) {
        Ok(t) => t,
        Err(e) => {
            report.record("fix_signs", false, Some(json!({ "error": e.to_string() })));
            return report;
        }
    };
    let classes = classify_orbits(&system, &rho);
    let mut bad = [Vec::new(), Vec::new(), Vec::new()];
    for cls in classes.classes() {
        for &m in &cls.members {
            let eps = table.epsilon(m);
            let bar = classes.rho(m);
            if eps != table.epsilon(bar) {
                bad[0].push(system.root(m).to_string());
            }
            let is_middle = cls.kind == ClassKind::A2 && bar == m;
            if is_middle && eps != -1 {
                bad[1].push(system.root(m).to_string());
            }
            if !is_middle && eps != 1 {
                bad[2].push(system.root(m).to_string());
            }
        }
    }
    for (id, roots) in ["eps_equal_on_pairs", "eps_minus_one_on_a2_middle", "eps_one_elsewhere"].iter().zip(bad) {
        report.record(*id, roots.is_empty(), (!roots.is_empty()).then(|| json!({ "roots": roots })));
    }
    match table.rho_is_automorphism() {
        Ok(()) => report.pass("rho_automorphism"),
        Err((i, j)) => report.record("rho_automorphism", false, Some(json!({ "basis_pair": [i, j] }))),
    }
    let reapplied = fix_signs_for_rho(&table, &rho).map(|t| t == table).unwrap_or(false);
    report.record("idempotent", reapplied, None);
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

/// Element count, σ-fixedness of each element and full rank of the change
/// of basis.
pub fn verify_basis<R: InvolutiveRing>(sys: &TwistedSystem<R>) -> VerificationReport {
    let start = Instant::now();
    let ring = sys.ring();
    let mut report = VerificationReport::new("basis");
    report.set_config("type", sys.system().kind().to_string());
    report.set_config("ring", ring.name());
    report.set_config("rho", sys.rho().cycles());
    match twisted_basis(sys) {
        Ok(basis) => {
            let dim = sys.dim();
            report.record("count", basis.len() == dim, Some(json!({ "elements": basis.len(), "dim": dim })));
            let not_fixed: Vec<String> = basis
                .elements()
                .iter()
                .filter(|e| sys.sigma_on_algebra(&e.vector) != e.vector)
                .map(|e| e.label.render(sys.system(), sys.classes()))
                .collect();
            report.record("sigma_fixed", not_fixed.is_empty(), (!not_fixed.is_empty()).then(|| json!({ "labels": not_fixed })));
            let r = rank(ring, basis.change_matrix());
            let ok = matches!(r, Ok(k) if k == dim);
            report.record("full_rank", ok, Some(json!({ "rank": format!("{r:?}") })));
        }
        Err(e) => report.record("construct", false, Some(json!({ "error": e.to_string() }))),
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

/// Additivity, torus action and the commutator formula over
/// `R[u]/(u⁵)[t]/(t⁵)` with independent `t`, `u`, exhaustive over roots
/// and root pairs. The identities have degree at most 4 in each variable.
pub fn verify_group_relations<R: InvolutiveRing>(group: &AdjointGroup<R>, seed: u64) -> VerificationReport {
    let start = Instant::now();
    let base = group.ring().clone();
    let inner = TruncatedPoly::new(base.clone(), 5);
    let outer = TruncatedPoly::new(inner.clone(), 5);
    let grp = group.over(outer.clone());
    let (t, u) = (outer.var(), outer.embed(&inner.var()));
    let system = group.system().system().clone();
    let table = group.system().table().clone();
    let mut report = VerificationReport::new("groups");
    report.set_config("type", system.kind().to_string());
    report.set_config("ring", outer.name());

    let mut fails = Vec::new();
    for r in 0..system.len() {
        let lhs = grp.mul(&grp.exp_root(r, &t).unwrap(), &grp.exp_root(r, &u).unwrap());
        if lhs != grp.exp_root(r, &outer.add(&t, &u)).unwrap() {
            fails.push(system.root(r).to_string());
        }
    }
    report.record("additivity", fails.is_empty(), (!fails.is_empty()).then(|| json!({ "roots": fails })));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values: Vec<_> = (0..system.rank())
        .map(|_| loop {
            let x = base.random(&mut rng);
            if base.inverse(&x).is_some() {
                break outer.embed(&inner.embed(&x));
            }
        })
        .collect();
    let chi = Character { values };
    let h = grp.torus_element(&chi).unwrap();
    let hinv = grp.inverse(&h).unwrap();
    let mut fails = Vec::new();
    for r in 0..system.len() {
        let lhs = grp.product(&[h.clone(), grp.exp_root(r, &t).unwrap(), hinv.clone()]);
        let rhs = grp.exp_root(r, &outer.mul(&chi.eval(&outer, system.root(r)).unwrap(), &t)).unwrap();
        if lhs != rhs {
            fails.push(system.root(r).to_string());
        }
    }
    report.record("torus_action", fails.is_empty(), (!fails.is_empty()).then(|| json!({ "roots": fails })));

    let mut fails = Vec::new();
    let mut pairs = 0;
    for a in 0..system.len() {
        let xa = grp.exp_root(a, &t).unwrap();
        let xa_inv = grp.exp_root(a, &outer.neg(&t)).unwrap();
        for b in 0..system.len() {
            if b == a || b == system.negate(a) {
                continue;
            }
            pairs += 1;
            let xb = grp.exp_root(b, &u).unwrap();
            let xb_inv = grp.exp_root(b, &outer.neg(&u)).unwrap();
            let comm = grp.product(&[xa.clone(), xb, xa_inv.clone(), xb_inv]);
            let expect = match system.sum(a, b) {
                Some(s) => grp.exp_root(s, &outer.scale_int(table.n(a, b).unwrap() as i64, &outer.mul(&t, &u))).unwrap(),
                None => grp.identity(),
            };
            if comm != expect {
                fails.push(format!("{} {}", system.root(a), system.root(b)));
            }
        }
    }
    report.record("commutator", fails.is_empty(), Some(json!({ "pairs": pairs, "failures": fails })));
    let id = grp.identity();
    record_equal(&mut report, &outer, "identity", &id.matrix, &grp.exp_root(0, &outer.zero()).unwrap().matrix);
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}
