//! Conjugation of the twisted generators of `R` by elements over `S ⊃ R`.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use super::report::VerificationReport;
use super::{admissible_params, antifixed_part};
use crate::groups::{AdjointGroup, GroupElement, GroupError};
use crate::matrix::Matrix;
use crate::rings::{DecidableSubring, InvolutiveRing};
use crate::roots::ClassKind;

/// The first generator whose conjugate leaves `R`, and the offending entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalizerWitness {
    pub generator: usize,
    pub row: usize,
    pub col: usize,
    pub entry: String,
}

/// Class generators with parameters from the subring's declared set:
/// θ-fixed parameters for `A1`, all for `A1^2`, and `(t, tθ(t)/2)` plus
/// `(0, s)` with `s` antifixed for `A2`.
pub fn subring_generators<S: InvolutiveRing, Sub: DecidableSubring<S>>(
    group: &AdjointGroup<S>,
    subring: &Sub,
) -> Result<Vec<Matrix<S::Elem>>, GroupError> {
    let ring = group.ring();
    let classes = group.system().classes();
    let params = subring.parameter_set();
    let half = ring.half()?;
    let mut out = Vec::new();
    for c in 0..classes.len() {
        for p in &params {
            match classes.class(c).kind {
                ClassKind::A1 if ring.is_fixed(p) => out.push(group.twisted_generator(c, p, None)?.matrix),
                ClassKind::A1 => {}
                ClassKind::A1Sq => out.push(group.twisted_generator(c, p, None)?.matrix),
                ClassKind::A2 => {
                    let u = ring.mul(&half, &ring.mul(p, &ring.theta(p)));
                    out.push(group.twisted_generator(c, p, Some(&u))?.matrix);
                    if ring.is_antifixed(p) {
                        out.push(group.twisted_generator(c, &ring.zero(), Some(p))?.matrix);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Whether `g x g⁻¹` has all entries in `R` for every `x` in `gens`.
pub fn conjugation_stays_in_ring<S: InvolutiveRing, Sub: DecidableSubring<S>>(
    group: &AdjointGroup<S>,
    g: &GroupElement<S::Elem>,
    subring: &Sub,
    gens: &[Matrix<S::Elem>],
) -> Result<(), NormalizerWitness> {
    let ring = group.ring();
    let ginv = group.inverse(g).expect("words over S are invertible").matrix;
    for (k, x) in gens.iter().enumerate() {
        let conj = g.matrix.mul(ring, x).mul(ring, &ginv);
        if let Some(w) = first_outside(ring, subring, &conj) {
            return Err(NormalizerWitness { generator: k, ..w });
        }
    }
    Ok(())
}

fn first_outside<S: InvolutiveRing, Sub: DecidableSubring<S>>(ring: &S, subring: &Sub, m: &Matrix<S::Elem>) -> Option<NormalizerWitness> {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !subring.contains(m.get(i, j)) {
                return Some(NormalizerWitness { generator: 0, row: i, col: j, entry: ring.format(m.get(i, j)) });
            }
        }
    }
    None
}

/// A class generator whose parameters come from `draw`, made admissible.
fn generator_from<S: InvolutiveRing>(
    group: &AdjointGroup<S>,
    class: usize,
    t: S::Elem,
    shift: &S::Elem,
) -> GroupElement<S::Elem> {
    let ring = group.ring();
    let (t, u) = admissible_params(ring, group.system().classes().class(class).kind, t, shift);
    group.twisted_generator(class, &t, u.as_ref()).expect("admissible parameters")
}

/// `samples` seeded words of length 1 to 8 in generators over `R`, each
/// paired with a copy whose one factor takes a parameter outside `R`.
/// Inside words must pass and be σ-fixed with entries in `R`; outside words
/// must fail, and the witness is kept.
pub fn check_normalizer_sample<S: InvolutiveRing, Sub: DecidableSubring<S>>(
    group: &AdjointGroup<S>,
    subring: &Sub,
    seed: u64,
    samples: usize,
) -> VerificationReport {
    let start = Instant::now();
    let ring = group.ring();
    let classes = group.system().classes();
    let mut report = VerificationReport::new("normalizer");
    report.set_config("type", group.system().system().kind().to_string());
    report.set_config("ring", subring.name());
    report.set_config("ext", ring.name());
    report.set_config("seed", seed);
    report.set_config("samples", samples);
    if samples == 0 {
        report.elapsed_ms = start.elapsed().as_millis() as u64;
        return report;
    }
    let gens = match subring_generators(group, subring) {
        Ok(g) => g,
        Err(e) => {
            report.record("generators", false, Some(json!({ "error": e.to_string() })));
            return report;
        }
    };
    report.set_config("generators", gens.len());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for s in 0..samples {
        let len = rng.gen_range(1..=8);
        let mut inside = Vec::with_capacity(len);
        let mut params = Vec::with_capacity(len);
        for _ in 0..len {
            let c = rng.gen_range(0..classes.len());
            let (t, shift) = (subring.sample(&mut rng), subring.sample(&mut rng));
            inside.push(generator_from(group, c, t.clone(), &shift));
            params.push((c, shift));
        }
        let g = group.product(&inside);
        match conjugation_stays_in_ring(group, &g, subring, &gens) {
            Ok(()) => {
                report.pass(format!("inside/{s}"));
                let entries_ok = first_outside(ring, subring, &g.matrix);
                let fixed = group.is_sigma_fixed(&g);
                let witness = (!fixed || entries_ok.is_some()).then(|| json!({ "sigma_fixed": fixed, "entry": entries_ok }));
                report.record(format!("fixed_in_ring/{s}"), witness.is_none(), witness);
            }
            Err(w) => report.record(format!("inside/{s}"), false, Some(json!(w))),
        }

        let pos = rng.gen_range(0..len);
        let (c, shift) = &params[pos];
        let mut outside = inside.clone();
        let mut replaced = None;
        for _ in 0..64 {
            let t = subring.sample_outside(&mut rng);
            let x = generator_from(group, *c, t, &antifixed_part(ring, shift));
            let moved = x.word.iter().any(|tok| match tok {
                crate::groups::Token::X { t, .. } => !subring.contains(t),
                crate::groups::Token::Torus(_) => false,
            });
            if moved {
                replaced = Some(x);
                break;
            }
        }
        let Some(x) = replaced else {
            report.record(format!("outside/{s}"), false, Some(json!({ "error": "no outside parameter found" })));
            continue;
        };
        let param = x.word.iter().find_map(|tok| match tok {
            crate::groups::Token::X { t, .. } if !subring.contains(t) => Some(ring.format(t)),
            _ => None,
        });
        outside[pos] = x;
        let h = group.product(&outside);
        match conjugation_stays_in_ring(group, &h, subring, &gens) {
            Ok(()) => report.record(format!("outside/{s}"), false, Some(json!({ "parameter": param, "unexpected": "stays in ring" }))),
            Err(w) => report.record(format!("outside/{s}"), true, Some(json!({ "parameter": param, "witness": w }))),
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{FiniteFieldSq, GaussianIntegersSixth, GaussianRational, GaussianRationals, GfSubfield, Rational};
    use crate::twist::TwistedSystem;

    fn group<R: InvolutiveRing>(kind: &str, ring: R) -> AdjointGroup<R> {
        AdjointGroup::new(TwistedSystem::new(kind.parse().unwrap(), ring).unwrap())
    }

    #[test]
    fn identity_and_subgroup_elements_pass() {
        let grp = group("A3", GaussianRationals);
        let sub = GaussianIntegersSixth::new();
        let gens = subring_generators(&grp, &sub).unwrap();
        assert!(conjugation_stays_in_ring(&grp, &grp.identity(), &sub, &gens).is_ok());
        let g = grp.twisted_generator(0, &GaussianRational::from_ints(1, 1), None).unwrap();
        assert!(conjugation_stays_in_ring(&grp, &g, &sub, &gens).is_ok());
    }

    #[test]
    fn fifth_parameter_fails_with_denominator_five() {
        let grp = group("A3", GaussianRationals);
        let sub = GaussianIntegersSixth::new();
        let gens = subring_generators(&grp, &sub).unwrap();
        let a1 = (0..grp.system().classes().len()).find(|&c| grp.system().classes().class(c).kind == ClassKind::A1).unwrap();
        let fifth = GaussianRational::new(Rational::new(1, 5), Rational::ZERO);
        let g = grp.twisted_generator(a1, &fifth, None).unwrap();
        let w = conjugation_stays_in_ring(&grp, &g, &sub, &gens).unwrap_err();
        assert!(w.entry.contains("/5") || w.entry.contains("/25"), "{w:?}");
    }

    #[test]
    fn sampled_report_passes_and_is_deterministic() {
        let grp = group("A3", GaussianRationals);
        let sub = GaussianIntegersSixth::new();
        let a = check_normalizer_sample(&grp, &sub, 11, 12);
        assert!(a.all_pass(), "{:?}", a.failures().collect::<Vec<_>>());
        let b = check_normalizer_sample(&grp, &sub, 11, 12);
        assert_eq!(a.to_json_without_timing(), b.to_json_without_timing());
        assert!(check_normalizer_sample(&grp, &sub, 11, 0).checks.is_empty());
    }

    #[test]
    fn finite_subfield_pair() {
        let grp = group("A3", FiniteFieldSq::new(3, 3).unwrap());
        let sub = GfSubfield::new(FiniteFieldSq::new(3, 3).unwrap(), 1).unwrap();
        let rep = check_normalizer_sample(&grp, &sub, 5, 6);
        assert!(rep.all_pass(), "{:?}", rep.failures().collect::<Vec<_>>());
    }
}
