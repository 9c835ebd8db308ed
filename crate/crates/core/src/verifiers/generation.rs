//! The unital algebra spanned by products of group generators.

use std::collections::VecDeque;
use std::time::Instant;

use serde_json::json;

use super::report::VerificationReport;
use crate::groups::{AdjointGroup, GroupError};
use crate::matrix::{Matrix, MatrixError, RowEchelon};
use crate::rings::InvolutiveRing;
use crate::roots::ClassKind;

/// The closure's dimension and an echelon basis of flattened matrices.
#[derive(Debug, Clone)]
pub struct SpanClosure<R: InvolutiveRing> {
    pub dimension: usize,
    pub echelon: RowEchelon<R>,
    /// Products formed before the closure stabilised or filled up.
    pub products: usize,
}

/// Smallest subspace of `n×n` matrices containing `1` and `gens` and closed
/// under multiplication. New basis matrices are multiplied on the left by
/// each `g - 1` in order; stops early once all of `M_n` is reached.
pub fn span_closure<R: InvolutiveRing>(ring: &R, n: usize, gens: &[Matrix<R::Elem>]) -> Result<SpanClosure<R>, MatrixError> {
    let mut echelon = RowEchelon::new(ring.clone(), n * n);
    let mut queue = VecDeque::new();
    let id = Matrix::identity(ring, n);
    for m in std::iter::once(&id).chain(gens) {
        if echelon.insert(m.entries())? {
            queue.push_back(m.clone());
        }
    }
    let deltas: Vec<Matrix<R::Elem>> = gens.iter().map(|g| g.sub(ring, &id)).filter(|d| !d.is_zero(ring)).collect();
    let mut products = 0;
    'outer: while let Some(b) = queue.pop_front() {
        for d in &deltas {
            if echelon.is_full() {
                break 'outer;
            }
            let p = d.mul(ring, &b);
            products += 1;
            if echelon.insert(p.entries())? {
                queue.push_back(p);
            }
        }
    }
    Ok(SpanClosure { dimension: echelon.dimension(), echelon, products })
}

/// Generators of every class: `x(1)` for `A1`; `x(1)`, `x(a)` for `A1^2`;
/// `x(1, 1/2)`, `x(0, a)`, `x(a, -a²/2)` for `A2`.
pub fn generator_set<R: InvolutiveRing>(group: &AdjointGroup<R>) -> Result<Vec<Matrix<R::Elem>>, GroupError> {
    let ring = group.ring();
    let classes = group.system().classes();
    let half = ring.half()?;
    let one = ring.one();
    let mut out = Vec::new();
    for c in 0..classes.len() {
        match classes.class(c).kind {
            ClassKind::A1 => out.push(group.twisted_generator(c, &one, None)?.matrix),
            ClassKind::A1Sq => {
                let a = ring.antifixed_unit()?;
                out.push(group.twisted_generator(c, &one, None)?.matrix);
                out.push(group.twisted_generator(c, &a, None)?.matrix);
            }
            ClassKind::A2 => {
                let a = ring.antifixed_unit()?;
                let na2h = ring.neg(&ring.mul(&ring.mul(&a, &a), &half));
                out.push(group.twisted_generator(c, &one, Some(&half))?.matrix);
                out.push(group.twisted_generator(c, &ring.zero(), Some(&a))?.matrix);
                out.push(group.twisted_generator(c, &a, Some(&na2h))?.matrix);
            }
        }
    }
    Ok(out)
}

/// Span closure of the class generators must be all of `M_n`.
pub fn verify_generation<R: InvolutiveRing>(group: &AdjointGroup<R>) -> VerificationReport {
    let start = Instant::now();
    let ring = group.ring();
    let n = group.dim();
    let mut report = VerificationReport::new("generation");
    report.set_config("type", group.system().system().kind().to_string());
    report.set_config("ring", ring.name());
    report.set_config("rho", group.system().rho().cycles());
    report.set_config("n", n);
    report.set_config("closure", "left multiplication by g - 1, seed {1} and generators");

    let unit = span_closure(ring, n, &[]);
    let ok = matches!(&unit, Ok(s) if s.dimension == 1);
    report.record("identity_only", ok, (!ok).then(|| json!({ "result": format!("{:?}", unit.map(|s| s.dimension)) })));

    match generator_set(group) {
        Ok(gens) => {
            report.set_config("generators", gens.len());
            match span_closure(ring, n, &gens) {
                Ok(s) => {
                    let ok = s.dimension == n * n;
                    report.record(
                        "full_matrix_algebra",
                        ok,
                        Some(json!({ "dimension": s.dimension, "target": n * n, "products": s.products })),
                    );
                }
                Err(e) => report.record("full_matrix_algebra", false, Some(json!({ "error": e.to_string() }))),
            }
        }
        Err(e) => report.record("generators", false, Some(json!({ "error": e.to_string() }))),
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{FiniteFieldSq, GaussianRationals, Rationals};
    use crate::twist::TwistedSystem;

    fn group<R: InvolutiveRing>(kind: &str, ring: R) -> AdjointGroup<R> {
        AdjointGroup::new(TwistedSystem::new(kind.parse().unwrap(), ring).unwrap())
    }

    /// Dimension of the span of all words of length ≤ k in the generators,
    /// by brute force over words.
    fn words_span_dim(ring: &Rationals, gens: &[Matrix<crate::rings::Rational>], k: usize) -> usize {
        let n = gens[0].rows();
        let mut ech = RowEchelon::new(ring.clone(), n * n);
        let mut layer = vec![Matrix::identity(ring, n)];
        for m in &layer {
            ech.insert(m.entries()).unwrap();
        }
        for _ in 0..k {
            let mut next = Vec::new();
            for w in &layer {
                for g in gens {
                    let p = g.mul(ring, w);
                    ech.insert(p.entries()).unwrap();
                    next.push(p);
                }
            }
            layer = next;
        }
        ech.dimension()
    }

    #[test]
    fn identity_only_is_one_dimensional() {
        assert_eq!(span_closure(&Rationals, 5, &[]).unwrap().dimension, 1);
        assert_eq!(span_closure(&Rationals, 5, &[Matrix::identity(&Rationals, 5)]).unwrap().dimension, 1);
    }

    #[test]
    fn closure_matches_word_enumeration() {
        // 1 + E01, 1 + E12 generate span{1, E01, E12, E02}
        let r = Rationals;
        let e = |i: usize, j: usize| {
            let mut m = Matrix::identity(&r, 3);
            m.set(i, j, r.one());
            m
        };
        let gens = vec![e(0, 1), e(1, 2)];
        assert_eq!(span_closure(&r, 3, &gens).unwrap().dimension, 4);
        assert_eq!(words_span_dim(&r, &gens, 4), 4);
        let gens = vec![e(0, 1), e(1, 0)];
        let d = span_closure(&r, 3, &gens).unwrap().dimension;
        assert_eq!(d, words_span_dim(&r, &gens, 6));
        assert_eq!(d, 5);
    }

    #[test]
    fn twisted_a3_fills_matrix_algebra() {
        for rep in [verify_generation(&group("A3", GaussianRationals)), verify_generation(&group("A3", FiniteFieldSq::new(3, 1).unwrap()))] {
            assert!(rep.all_pass(), "{:?}", rep.checks);
        }
    }

    #[test]
    fn untwisted_pieces_do_not_fill() {
        let grp = group("A3", GaussianRationals);
        let gens = generator_set(&grp).unwrap();
        let d = span_closure(&GaussianRationals, grp.dim(), &gens[..1]).unwrap().dimension;
        assert!(d < 225);
    }
}
