//! Elementary root elements, twisted class generators, torus elements and
//! `σ` on the adjoint group, all as exact matrices.

use thiserror::Error;

use crate::chevalley::{ad_matrix, LieVector};
use crate::matrix::Matrix;
use crate::rings::{InvolutiveRing, RingError};
use crate::roots::{ClassKind, Root};
use crate::twist::TwistedSystem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("parameter constraint violated: {0}")]
    ParamConstraintViolated(String),
}

/// One factor of a generator word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Token<E> {
    /// `x_r(t)` for a root index `r`.
    X { root: usize, t: E },
    /// `h(χ)` given by the values `χ(α_i)`.
    Torus(Vec<E>),
}

/// An invertible matrix with the word that produced it. Equality compares
/// matrices only.
#[derive(Debug, Clone)]
pub struct GroupElement<E> {
    pub matrix: Matrix<E>,
    pub word: Vec<Token<E>>,
}

impl<E: PartialEq> PartialEq for GroupElement<E> {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl<E: Eq> Eq for GroupElement<E> {}

/// A character of the root lattice, given by its values on the simple roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character<E> {
    pub values: Vec<E>,
}

impl<E: Clone + PartialEq> Character<E> {
    pub fn trivial<R: InvolutiveRing<Elem = E>>(ring: &R, rank: usize) -> Self {
        Self { values: vec![ring.one(); rank] }
    }

    /// `χ(λ) = ∏ χ(α_i)^{c_i}` for `λ = Σ c_i α_i`.
    pub fn eval<R: InvolutiveRing<Elem = E>>(&self, ring: &R, root: &Root) -> Result<E, RingError> {
        let mut acc = ring.one();
        for (v, &c) in self.values.iter().zip(root.coords()) {
            acc = ring.mul(&acc, &ring.pow_signed(v, c as i64)?);
        }
        Ok(acc)
    }

    /// Pointwise product.
    pub fn mul<R: InvolutiveRing<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        Self { values: self.values.iter().zip(&other.values).map(|(a, b)| ring.mul(a, b)).collect() }
    }
}

/// Matrices of `ad(X_r)` and `ad(X_r)²` as sparse integer triples.
#[derive(Debug, Clone)]
struct RootPowers {
    ad: Vec<(usize, usize, i64)>,
    ad2: Vec<(usize, usize, i64)>,
}

/// The adjoint elementary group of a twisted system, with cached root matrices.
#[derive(Debug, Clone)]
pub struct AdjointGroup<R: InvolutiveRing> {
    sys: TwistedSystem<R>,
    powers: Vec<RootPowers>,
    half: Option<R::Elem>,
}

fn sparse(m: &Matrix<i64>) -> Vec<(usize, usize, i64)> {
    let mut out = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if *m.get(i, j) != 0 {
                out.push((i, j, *m.get(i, j)));
            }
        }
    }
    out
}

fn int_mul(a: &Matrix<i64>, b: &Matrix<i64>) -> Matrix<i64> {
    Matrix::from_fn(a.rows(), b.cols(), |i, j| (0..a.cols()).map(|k| a.get(i, k) * b.get(k, j)).sum())
}

impl<R: InvolutiveRing> AdjointGroup<R> {
    pub fn new(sys: TwistedSystem<R>) -> Self {
        let table = sys.table();
        let dim = table.dim();
        let powers = (0..table.system().len())
            .map(|r| {
                let mut m = Matrix::from_vec(dim, dim, vec![0i64; dim * dim]);
                for j in 0..dim {
                    for (i, c) in table.bracket_basis(table.x_index(r), j) {
                        m.set(i, j, *m.get(i, j) + c as i64);
                    }
                }
                let m2 = int_mul(&m, &m);
                RootPowers { ad: sparse(&m), ad2: sparse(&m2) }
            })
            .collect();
        let half = sys.ring().half().ok();
        Self { sys, powers, half }
    }

    /// The same group over another ring, reusing the cached matrices.
    pub fn over<S: InvolutiveRing>(&self, ring: S) -> AdjointGroup<S> {
        let half = ring.half().ok();
        AdjointGroup { sys: self.sys.over(ring), powers: self.powers.clone(), half }
    }

    pub fn system(&self) -> &TwistedSystem<R> {
        &self.sys
    }

    pub fn ring(&self) -> &R {
        self.sys.ring()
    }

    pub fn dim(&self) -> usize {
        self.sys.dim()
    }

    pub fn identity(&self) -> GroupElement<R::Elem> {
        GroupElement { matrix: Matrix::identity(self.ring(), self.dim()), word: vec![] }
    }

    /// `ad(X_r)` over the ring.
    pub fn ad_root(&self, root: usize) -> Matrix<R::Elem> {
        let ring = self.ring();
        let mut m = Matrix::zeros(ring, self.dim(), self.dim());
        for &(i, j, c) in &self.powers[root].ad {
            m.set(i, j, ring.from_int(c));
        }
        m
    }

    fn x_matrix(&self, root: usize, t: &R::Elem) -> Result<Matrix<R::Elem>, GroupError> {
        let ring = self.ring();
        let half = self.half.clone().ok_or_else(|| RingError::NoHalf(ring.name()))?;
        let mut m = Matrix::identity(ring, self.dim());
        if ring.is_zero(t) {
            return Ok(m);
        }
        let p = &self.powers[root];
        for &(i, j, c) in &p.ad {
            let v = ring.add(m.get(i, j), &ring.scale_int(c, t));
            m.set(i, j, v);
        }
        let t2h = ring.mul(&ring.mul(t, t), &half);
        for &(i, j, c) in &p.ad2 {
            let v = ring.add(m.get(i, j), &ring.scale_int(c, &t2h));
            m.set(i, j, v);
        }
        Ok(m)
    }

    /// `x_α(t) = 1 + t ad(X_α) + t² ad(X_α)²/2`.
    pub fn exp_root(&self, root: usize, t: &R::Elem) -> Result<GroupElement<R::Elem>, GroupError> {
        Ok(GroupElement { matrix: self.x_matrix(root, t)?, word: vec![Token::X { root, t: t.clone() }] })
    }

    pub fn mul(&self, a: &GroupElement<R::Elem>, b: &GroupElement<R::Elem>) -> GroupElement<R::Elem> {
        let mut word = a.word.clone();
        word.extend(b.word.iter().cloned());
        GroupElement { matrix: a.matrix.mul(self.ring(), &b.matrix), word }
    }

    pub fn product(&self, factors: &[GroupElement<R::Elem>]) -> GroupElement<R::Elem> {
        factors.iter().fold(self.identity(), |acc, f| self.mul(&acc, f))
    }

    /// Inverse through the word: `x_r(t)⁻¹ = x_r(-t)`, `h(χ)⁻¹ = h(χ⁻¹)`.
    pub fn inverse(&self, g: &GroupElement<R::Elem>) -> Result<GroupElement<R::Elem>, GroupError> {
        let ring = self.ring();
        let mut word = Vec::with_capacity(g.word.len());
        for tok in g.word.iter().rev() {
            word.push(match tok {
                Token::X { root, t } => Token::X { root: *root, t: ring.neg(t) },
                Token::Torus(v) => Token::Torus(v.iter().map(|x| ring.try_inverse(x)).collect::<Result<_, _>>()?),
            });
        }
        self.evaluate(&word)
    }

    /// Re-evaluate a word to a matrix.
    pub fn evaluate(&self, word: &[Token<R::Elem>]) -> Result<GroupElement<R::Elem>, GroupError> {
        let ring = self.ring();
        let mut m = Matrix::identity(ring, self.dim());
        for tok in word {
            let f = match tok {
                Token::X { root, t } => self.x_matrix(*root, t)?,
                Token::Torus(v) => self.torus_element(&Character { values: v.clone() })?.matrix,
            };
            m = m.mul(ring, &f);
        }
        Ok(GroupElement { matrix: m, word: word.to_vec() })
    }

    /// The class generator: `x_α(t)` (A1, `t ∈ R_θ`), `x_α(t) x_ᾱ(θt)` (A1Sq),
    /// or `x_α(t) x_ᾱ(θt) x_{α+ᾱ}(N_{ᾱ,α} u)` with `u + θu = t θt` (A2).
    pub fn twisted_generator(
        &self,
        class: usize,
        t: &R::Elem,
        u: Option<&R::Elem>,
    ) -> Result<GroupElement<R::Elem>, GroupError> {
        let ring = self.ring();
        let cls = self.sys.classes().class(class);
        let (al, bar) = (cls.representative(), cls.bar());
        let violated = |msg: String| Err(GroupError::ParamConstraintViolated(msg));
        match cls.kind {
            ClassKind::A1 => {
                if u.is_some() {
                    return violated("A1 generators take one parameter".into());
                }
                if !ring.is_fixed(t) {
                    return violated(format!("t = {} is not θ-fixed", ring.format(t)));
                }
                self.exp_root(al, t)
            }
            ClassKind::A1Sq => {
                if u.is_some() {
                    return violated("A1^2 generators take one parameter".into());
                }
                Ok(self.mul(&self.exp_root(al, t)?, &self.exp_root(bar, &ring.theta(t))?))
            }
            ClassKind::A2 => {
                let Some(u) = u else {
                    return violated("A2 generators need (t, u)".into());
                };
                let norm = ring.mul(t, &ring.theta(t));
                if ring.add(u, &ring.theta(u)) != norm {
                    return violated(format!(
                        "u + θ(u) = {} but t θ(t) = {}",
                        ring.format(&ring.add(u, &ring.theta(u))),
                        ring.format(&norm)
                    ));
                }
                let mid = cls.middle().unwrap();
                let n = self.sys.table().n(bar, al).unwrap() as i64;
                let xs = [self.exp_root(al, t)?, self.exp_root(bar, &ring.theta(t))?, self.exp_root(mid, &ring.scale_int(n, u))?];
                Ok(self.product(&xs))
            }
        }
    }

    /// `(w_α(t), h_α(t))` with `w_α(t) = x_α(t) x_{-α}(-t⁻¹) x_α(t)` and
    /// `h_α(t) = w_α(t) w_α(1)⁻¹ = w_α(t) w_α(-1)`.
    pub fn w_and_h(&self, root: usize, t: &R::Elem) -> Result<(GroupElement<R::Elem>, GroupElement<R::Elem>), GroupError> {
        let ring = self.ring();
        let tinv = ring.try_inverse(t)?;
        let neg = self.sys.system().negate(root);
        let w = |s: &R::Elem, sinv: &R::Elem| -> Result<GroupElement<R::Elem>, GroupError> {
            Ok(self.product(&[self.exp_root(root, s)?, self.exp_root(neg, &ring.neg(sinv))?, self.exp_root(root, s)?]))
        };
        let wt = w(t, &tinv)?;
        let m1 = ring.neg(&ring.one());
        let h = self.mul(&wt, &w(&m1, &m1)?);
        Ok((wt, h))
    }

    /// Diagonal `h(χ)`: 1 on the Cartan part, `χ(β)` on `X_β`.
    pub fn torus_element(&self, chi: &Character<R::Elem>) -> Result<GroupElement<R::Elem>, GroupError> {
        let ring = self.ring();
        let system = self.sys.system();
        let rank = system.rank();
        let mut m = Matrix::identity(ring, self.dim());
        for r in 0..system.len() {
            m.set(rank + r, rank + r, chi.eval(ring, system.root(r))?);
        }
        Ok(GroupElement { matrix: m, word: vec![Token::Torus(chi.values.clone())] })
    }

    /// `χ_{α,t}: λ ↦ t^{⟨λ, α⟩}`.
    pub fn root_character(&self, root: usize, t: &R::Elem) -> Result<Character<R::Elem>, GroupError> {
        let ring = self.ring();
        let system = self.sys.system();
        let values = (0..system.rank())
            .map(|i| ring.pow_signed(t, system.pairing_simple(root, i) as i64))
            .collect::<Result<_, _>>()?;
        Ok(Character { values })
    }

    /// `σ(g) = P θ(g) P`; the word is mapped factor by factor.
    pub fn sigma_on_group(&self, g: &GroupElement<R::Elem>) -> GroupElement<R::Elem> {
        let ring = self.ring();
        let classes = self.sys.classes();
        let word = g
            .word
            .iter()
            .map(|tok| match tok {
                Token::X { root, t } => Token::X {
                    root: classes.rho(*root),
                    t: ring.scale_int(self.sys.table().epsilon(*root) as i64, &ring.theta(t)),
                },
                Token::Torus(v) => Token::Torus(self.conjugate_character(&Character { values: v.clone() }).values),
            })
            .collect();
        GroupElement { matrix: self.sys.sigma_on_matrix(&g.matrix), word }
    }

    /// `χ̄_σ(λ) = θ(χ(ρ⁻¹ λ))`.
    pub fn conjugate_character(&self, chi: &Character<R::Elem>) -> Character<R::Elem> {
        let ring = self.ring();
        let rho = self.sys.rho();
        Character { values: (0..chi.values.len()).map(|i| ring.theta(&chi.values[rho.apply_simple(i)])).collect() }
    }

    /// `χ(ρ(α_i)) = θ(χ(α_i))` for every `i`.
    pub fn is_self_conjugate(&self, chi: &Character<R::Elem>) -> bool {
        *chi == self.conjugate_character(chi)
    }

    pub fn is_sigma_fixed(&self, g: &GroupElement<R::Elem>) -> bool {
        self.sys.sigma_on_matrix(&g.matrix) == g.matrix
    }

    /// `ad(x)` for a Lie vector over this ring.
    pub fn ad(&self, x: &LieVector<R::Elem>) -> Matrix<R::Elem> {
        ad_matrix(self.ring(), self.sys.table(), x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{GaussianRational, GaussianRationals, PolyElem, Rationals, TruncatedPoly};
    type Trunc2 = TruncatedPoly<TruncatedPoly<GaussianRationals>>;

    fn group(kind: &str) -> AdjointGroup<GaussianRationals> {
        AdjointGroup::new(TwistedSystem::new(kind.parse().unwrap(), GaussianRationals).unwrap())
    }

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    /// Independent parameters `t`, `u` in `Q(i)[u]/(u^5)[t]/(t^5)`. Every
    /// identity below has degree at most 4 in each, so nothing is truncated.
    fn symbolic(kind: &str) -> (AdjointGroup<Trunc2>, PolyElem<PolyElem<GaussianRational>>, PolyElem<PolyElem<GaussianRational>>) {
        let inner = TruncatedPoly::new(GaussianRationals, 5);
        let u = inner.var();
        let grp = group(kind).over(TruncatedPoly::new(inner, 5));
        let r = grp.ring().clone();
        let (t, u) = (r.var(), r.embed(&u));
        (grp, t, u)
    }

    #[test]
    fn one_parameter_subgroups() {
        let grp = group("A3");
        let r = GaussianRationals;
        let id = grp.identity();
        for root in 0..grp.system().system().len() {
            assert_eq!(grp.exp_root(root, &r.zero()).unwrap(), id);
            let (t, u) = (g(1, 2), g(-3, 1));
            let xt = grp.exp_root(root, &t).unwrap();
            assert_eq!(grp.mul(&xt, &grp.exp_root(root, &r.neg(&t)).unwrap()), id);
            assert_eq!(grp.mul(&xt, &grp.exp_root(root, &u).unwrap()), grp.exp_root(root, &r.add(&t, &u)).unwrap());
            assert!(r.is_one(&xt.matrix.determinant(&r).unwrap()));
        }
    }

    #[test]
    fn additivity_symbolic() {
        for kind in ["A3", "A4"] {
            let (grp, t, u) = symbolic(kind);
            let r = grp.ring().clone();
            for root in 0..grp.system().system().len() {
                let lhs = grp.mul(&grp.exp_root(root, &t).unwrap(), &grp.exp_root(root, &u).unwrap());
                assert_eq!(lhs, grp.exp_root(root, &r.add(&t, &u)).unwrap());
            }
        }
    }

    #[test]
    fn chevalley_commutator_formula() {
        let (grp, t, u) = symbolic("A3");
        let r = grp.ring().clone();
        let sys = grp.system().system().clone();
        let table = grp.system().table().clone();
        for a in 0..sys.len() {
            for b in 0..sys.len() {
                if b == a || b == sys.negate(a) {
                    continue;
                }
                let (xa, xb) = (grp.exp_root(a, &t).unwrap(), grp.exp_root(b, &u).unwrap());
                let comm = grp.product(&[xa.clone(), xb.clone(), grp.inverse(&xa).unwrap(), grp.inverse(&xb).unwrap()]);
                let expect = match sys.sum(a, b) {
                    Some(s) => grp.exp_root(s, &r.scale_int(table.n(a, b).unwrap() as i64, &r.mul(&t, &u))).unwrap(),
                    None => grp.identity(),
                };
                assert_eq!(comm, expect, "{} {}", sys.root(a), sys.root(b));
            }
        }
    }

    #[test]
    fn twisted_generators_are_sigma_fixed() {
        let r = GaussianRationals;
        for kind in ["A3", "A4", "D4"] {
            let grp = group(kind);
            let classes = grp.system().classes().clone();
            for c in 0..classes.len() {
                let gen = match classes.class(c).kind {
                    ClassKind::A1 => grp.twisted_generator(c, &g(3, 0), None),
                    ClassKind::A1Sq => grp.twisted_generator(c, &g(1, 2), None),
                    ClassKind::A2 => {
                        let t = g(1, 2);
                        let u = r.add(&r.mul(&r.half().unwrap(), &r.mul(&t, &r.theta(&t))), &g(0, 7));
                        grp.twisted_generator(c, &t, Some(&u))
                    }
                }
                .unwrap();
                assert!(grp.is_sigma_fixed(&gen), "{kind} class {c}");
                assert_eq!(grp.sigma_on_group(&gen), gen);
                assert!(r.is_one(&gen.matrix.determinant(&r).unwrap()));
            }
        }
    }

    #[test]
    fn generator_parameter_examples() {
        let r = GaussianRationals;
        let a3 = group("A3");
        let c = a3.system().classes().class_of(0);
        let gen = a3.twisted_generator(c, &g(0, 1), None).unwrap();
        let expect = a3.mul(&a3.exp_root(0, &g(0, 1)).unwrap(), &a3.exp_root(2, &g(0, -1)).unwrap());
        assert_eq!(gen, expect);
        let fixed_class = a3.system().classes().class_of(1);
        assert!(matches!(a3.twisted_generator(fixed_class, &g(0, 1), None), Err(GroupError::ParamConstraintViolated(_))));

        let a4 = group("A4");
        let a2 = (0..a4.system().classes().len()).find(|&c| a4.system().classes().class(c).kind == ClassKind::A2).unwrap();
        assert!(a4.twisted_generator(a2, &r.one(), Some(&r.half().unwrap())).is_ok());
        assert!(a4.twisted_generator(a2, &r.zero(), Some(&g(0, 1))).is_ok());
        assert!(matches!(a4.twisted_generator(a2, &r.one(), Some(&r.one())), Err(GroupError::ParamConstraintViolated(_))));
    }

    #[test]
    fn constraint_is_needed_for_sigma_fixedness() {
        // Build the A2 product by hand with u violating u + θu = tθt.
        let r = GaussianRationals;
        let grp = group("A4");
        let cl = grp.system().classes().clone();
        let c = (0..cl.len()).find(|&c| cl.class(c).kind == ClassKind::A2).unwrap();
        let cls = cl.class(c);
        let n = grp.system().table().n(cls.bar(), cls.representative()).unwrap() as i64;
        let bad = grp.product(&[
            grp.exp_root(cls.representative(), &r.one()).unwrap(),
            grp.exp_root(cls.bar(), &r.one()).unwrap(),
            grp.exp_root(cls.middle().unwrap(), &r.from_int(n)).unwrap(),
        ]);
        assert!(!grp.is_sigma_fixed(&bad));
    }

    #[test]
    fn w_and_h_elements() {
        let r = GaussianRationals;
        let grp = group("A3");
        let sys = grp.system().system().clone();
        for root in 0..sys.len() {
            let (_, h1) = grp.w_and_h(root, &r.one()).unwrap();
            assert_eq!(h1, grp.identity());
            let t = g(2, 1);
            let (_, h) = grp.w_and_h(root, &t).unwrap();
            assert!(h.matrix.is_diagonal(&r));
            for b in 0..sys.len() {
                let k = sys.rank() + b;
                assert_eq!(h.matrix.get(k, k), &r.pow_signed(&t, sys.pairing(b, root) as i64).unwrap());
            }
            let chi = grp.root_character(root, &t).unwrap();
            assert_eq!(grp.torus_element(&chi).unwrap(), h);
            let (w1, _) = grp.w_and_h(root, &r.one()).unwrap();
            assert!(w1.matrix.pow(&r, 4).is_identity(&r));
        }
        assert!(matches!(grp.w_and_h(0, &r.zero()), Err(GroupError::Ring(RingError::NotInvertible(_)))));
    }

    #[test]
    fn torus_action_on_root_elements() {
        for kind in ["A3", "A4"] {
            let (grp, t, _) = symbolic(kind);
            let r = grp.ring().clone();
            let samples = [g(2, 0), g(0, 1), g(1, 1), g(3, -1)];
            let rank = grp.system().system().rank();
            let chi = Character { values: (0..rank).map(|i| r.embed(&r.base().embed(&samples[i % 4]))).collect() };
            let h = grp.torus_element(&chi).unwrap();
            let hinv = grp.inverse(&h).unwrap();
            for root in 0..grp.system().system().len() {
                let lhs = grp.product(&[h.clone(), grp.exp_root(root, &t).unwrap(), hinv.clone()]);
                let scaled = r.mul(&chi.eval(&r, grp.system().system().root(root)).unwrap(), &t);
                assert_eq!(lhs, grp.exp_root(root, &scaled).unwrap());
            }
        }
    }

    #[test]
    fn torus_is_a_homomorphism_and_sigma_conjugates() {
        let r = GaussianRationals;
        let grp = group("A3");
        let c1 = Character { values: vec![g(1, 1), g(2, 0), g(0, 3)] };
        let c2 = Character { values: vec![g(1, -2), g(0, 1), g(5, 0)] };
        let prod = grp.torus_element(&c1.mul(&r, &c2)).unwrap();
        assert_eq!(prod, grp.mul(&grp.torus_element(&c1).unwrap(), &grp.torus_element(&c2).unwrap()));
        let h = grp.torus_element(&c1).unwrap();
        assert_eq!(grp.sigma_on_group(&h), grp.torus_element(&grp.conjugate_character(&c1)).unwrap());
        assert!(grp.is_self_conjugate(&Character::trivial(&r, 3)));
        let z = g(2, 3);
        assert!(grp.is_self_conjugate(&Character { values: vec![z.clone(), g(5, 0), r.theta(&z)] }));
        assert!(!grp.is_self_conjugate(&Character { values: vec![g(0, 1), g(1, 0), g(0, 1)] }));
        assert!(grp.is_sigma_fixed(&grp.torus_element(&Character { values: vec![z.clone(), g(5, 0), r.theta(&z)] }).unwrap()));
    }

    #[test]
    fn sigma_on_root_elements_symbolic() {
        let (grp, t, _) = symbolic("A4");
        let r = grp.ring().clone();
        let sys = grp.system();
        for root in 0..sys.system().len() {
            let x = grp.exp_root(root, &t).unwrap();
            let eps = sys.table().epsilon(root) as i64;
            let expect = grp.exp_root(sys.classes().rho(root), &r.scale_int(eps, &r.theta(&t))).unwrap();
            assert_eq!(grp.sigma_on_group(&x), expect);
            let via_word = grp.evaluate(&grp.sigma_on_group(&x).word).unwrap();
            assert_eq!(via_word, expect);
        }
        let q = group("A3").over(Rationals);
        assert!(q.exp_root(0, &Rationals.one()).is_ok());
    }

    #[test]
    fn words_reevaluate() {
        let r = GaussianRationals;
        let grp = group("D4");
        let g1 = grp.twisted_generator(grp.system().classes().class_of(2), &g(1, 1), None).unwrap();
        let (w, h) = grp.w_and_h(5, &g(0, 2)).unwrap();
        let p = grp.product(&[g1, w, h]);
        assert_eq!(grp.evaluate(&p.word).unwrap(), p);
        let inv = grp.inverse(&p).unwrap();
        assert!(grp.mul(&p, &inv).matrix.is_identity(&r));
    }
}
