//! The semi-automorphism `σ = ρ∘θ` of `L(Φ, R)` and the `R_θ`-basis of the
//! twisted algebra `L_σ(Φ, R)`.

use std::fmt;

use thiserror::Error;

use crate::chevalley::{compute_structure_constants, fix_signs_for_rho, ChevalleyError, LieVector, StructureTable};
use crate::matrix::Matrix;
use crate::rings::{InvolutiveRing, RingError};
use crate::roots::{classify_orbits, ClassKind, ClassTable, DiagramPermutation, RootError, RootKind, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwistError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Chevalley(#[from] ChevalleyError),
    #[error("the twisted basis is not a basis over {0}")]
    SingularBasis(String),
}

/// A root system with a diagram symmetry, its sign-fixed Chevalley basis and
/// twisted classes, over a ring with involution.
#[derive(Debug, Clone)]
pub struct TwistedSystem<R: InvolutiveRing> {
    ring: R,
    table: StructureTable,
    classes: ClassTable,
}

impl<R: InvolutiveRing> TwistedSystem<R> {
    /// The standard symmetry of `kind`.
    pub fn new(kind: RootKind, ring: R) -> Result<Self, TwistError> {
        let system = RootSystem::new(kind)?;
        let rho = DiagramPermutation::standard(&system);
        Self::with_rho(&system, &rho, ring)
    }

    pub fn with_rho(system: &RootSystem, rho: &DiagramPermutation, ring: R) -> Result<Self, TwistError> {
        let table = fix_signs_for_rho(&compute_structure_constants(system), rho)?;
        let classes = classify_orbits(system, rho);
        Ok(Self { ring, table, classes })
    }

    /// The same twisted system over another ring.
    pub fn over<S: InvolutiveRing>(&self, ring: S) -> TwistedSystem<S> {
        TwistedSystem { ring, table: self.table.clone(), classes: self.classes.clone() }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    pub fn classes(&self) -> &ClassTable {
        &self.classes
    }

    pub fn system(&self) -> &RootSystem {
        self.table.system()
    }

    pub fn rho(&self) -> &DiagramPermutation {
        self.table.rho().expect("sign-fixed table")
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn has_a2(&self) -> bool {
        self.classes.count(ClassKind::A2) > 0
    }

    /// `σ(r H_i) = θ(r) H_{ρ(i)}`, `σ(r X_α) = ε_α θ(r) X_ᾱ`.
    pub fn sigma_on_algebra(&self, x: &LieVector<R::Elem>) -> LieVector<R::Elem> {
        let ring = &self.ring;
        let mut out = LieVector::zero(ring, self.dim());
        for (k, c) in x.coords.iter().enumerate() {
            if !ring.is_zero(c) {
                let (img, s) = self.table.rho_on_basis(k);
                out.coords[img] = ring.scale_int(s as i64, &ring.theta(c));
            }
        }
        out
    }

    /// `σ(g) = P θ(g) P` with `P` the signed permutation of `ρ` on the basis.
    pub fn sigma_on_matrix(&self, g: &Matrix<R::Elem>) -> Matrix<R::Elem> {
        let ring = &self.ring;
        let perm: Vec<(usize, i32)> = (0..self.dim()).map(|k| self.table.rho_on_basis(k)).collect();
        Matrix::from_fn(g.rows(), g.cols(), |i, j| {
            let (pi, si) = perm[i];
            let (pj, sj) = perm[j];
            ring.scale_int((si * sj) as i64, &ring.theta(g.get(pi, pj)))
        })
    }

    /// The signed permutation matrix of `ρ` (an involution).
    pub fn rho_matrix(&self) -> Matrix<R::Elem> {
        let ring = &self.ring;
        let mut p = Matrix::zeros(ring, self.dim(), self.dim());
        for k in 0..self.dim() {
            let (img, s) = self.table.rho_on_basis(k);
            p.set(img, k, ring.from_int(s as i64));
        }
        p
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LabelKind {
    XPlus,
    XMinusI,
    XMinusII,
    HPlus,
    HMinus,
}

/// A twisted basis label: the element kind and the class index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisLabel {
    pub kind: LabelKind,
    pub class: usize,
}

impl BasisLabel {
    /// e.g. `X+[a1]`, `X-(II)[-a2]`, `H-[a1]`.
    pub fn render(&self, system: &RootSystem, classes: &ClassTable) -> String {
        let rep = system.root(classes.class(self.class).representative());
        let head = match self.kind {
            LabelKind::XPlus => "X+",
            LabelKind::XMinusI => "X-(I)",
            LabelKind::XMinusII => "X-(II)",
            LabelKind::HPlus => "H+",
            LabelKind::HMinus => "H-",
        };
        format!("{head}[{rep}]")
    }
}

impl fmt::Display for LabelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedBasisElement<E> {
    pub label: BasisLabel,
    pub vector: LieVector<E>,
}

/// The twisted basis together with its change-of-basis matrix and inverse.
#[derive(Debug, Clone)]
pub struct TwistedBasis<R: InvolutiveRing> {
    elements: Vec<TwistedBasisElement<R::Elem>>,
    /// Column `j` holds the Chevalley coordinates of element `j`.
    change: Matrix<R::Elem>,
    inverse: Matrix<R::Elem>,
    a: R::Elem,
}

/// The element `kind` of class `class` with antifixed unit `a`, or `None`
/// when the class kind does not carry it. `H±` are defined for every class
/// through its representative `α`: `H_α` or `H_α ± H_ᾱ`.
pub fn class_element<R: InvolutiveRing>(
    sys: &TwistedSystem<R>,
    a: &R::Elem,
    kind: LabelKind,
    class: usize,
) -> Option<LieVector<R::Elem>> {
    let (ring, table) = (sys.ring(), sys.table());
    let cls = sys.classes().class(class);
    let (al, bar) = (cls.representative(), cls.bar());
    let x = |r: usize| LieVector::x(ring, table, r);
    let h = |r: usize| LieVector::h_root(ring, table, r);
    let paired = cls.kind != ClassKind::A1;
    match kind {
        LabelKind::XPlus if paired => Some(x(al).add(ring, &x(bar))),
        LabelKind::XPlus => Some(x(al)),
        LabelKind::XMinusI if paired => Some(x(al).sub(ring, &x(bar)).scale(ring, a)),
        LabelKind::XMinusII => cls.middle().map(|m| x(m).scale(ring, a)),
        LabelKind::HPlus if paired => Some(h(al).add(ring, &h(bar))),
        LabelKind::HPlus => Some(h(al)),
        LabelKind::HMinus if paired => Some(h(al).sub(ring, &h(bar)).scale(ring, a)),
        LabelKind::XMinusI | LabelKind::HMinus => None,
    }
}

/// Build `X⁺`, `X⁻(I)`, `X⁻(II)` for every class and `H⁺`, `H⁻` for every
/// simple class, all using the ring's distinguished antifixed unit `a`.
pub fn twisted_basis<R: InvolutiveRing>(sys: &TwistedSystem<R>) -> Result<TwistedBasis<R>, TwistError> {
    let ring = sys.ring();
    ring.half()?;
    let a = ring.antifixed_unit()?;
    if sys.has_a2() {
        ring.third()?;
    }
    let classes = sys.classes();
    let dim = sys.dim();
    let mut elements = Vec::with_capacity(dim);
    let x_kinds = [LabelKind::XPlus, LabelKind::XMinusI, LabelKind::XMinusII];
    for c in 0..classes.len() {
        for kind in x_kinds {
            if let Some(vector) = class_element(sys, &a, kind, c) {
                elements.push(TwistedBasisElement { label: BasisLabel { kind, class: c }, vector });
            }
        }
    }
    for c in classes.simple_classes(sys.system()) {
        for kind in [LabelKind::HPlus, LabelKind::HMinus] {
            if let Some(vector) = class_element(sys, &a, kind, c) {
                elements.push(TwistedBasisElement { label: BasisLabel { kind, class: c }, vector });
            }
        }
    }
    if elements.len() != dim {
        return Err(TwistError::SingularBasis(ring.name()));
    }
    let change = Matrix::from_fn(dim, dim, |i, j| elements[j].vector.coords[i].clone());
    let inverse = change.inverse(ring).map_err(|_| TwistError::SingularBasis(ring.name()))?;
    Ok(TwistedBasis { elements, change, inverse, a })
}

impl<R: InvolutiveRing> TwistedBasis<R> {
    pub fn elements(&self) -> &[TwistedBasisElement<R::Elem>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn antifixed_unit(&self) -> &R::Elem {
        &self.a
    }

    pub fn change_matrix(&self) -> &Matrix<R::Elem> {
        &self.change
    }

    pub fn find(&self, kind: LabelKind, class: usize) -> Option<&TwistedBasisElement<R::Elem>> {
        self.elements.iter().find(|e| e.label == BasisLabel { kind, class })
    }

    /// Unique `R`-coefficients of `x` over the twisted basis.
    pub fn coordinates(&self, ring: &R, x: &LieVector<R::Elem>) -> Vec<R::Elem> {
        self.inverse.mul_vec(ring, &x.coords)
    }

    pub fn combine(&self, ring: &R, coeffs: &[R::Elem]) -> LieVector<R::Elem> {
        LieVector { coords: self.change.mul_vec(ring, coeffs) }
    }
}

pub fn sigma_on_algebra<R: InvolutiveRing>(sys: &TwistedSystem<R>, x: &LieVector<R::Elem>) -> LieVector<R::Elem> {
    sys.sigma_on_algebra(x)
}

pub fn coordinates_in_twisted_basis<R: InvolutiveRing>(
    basis: &TwistedBasis<R>,
    ring: &R,
    x: &LieVector<R::Elem>,
) -> Vec<R::Elem> {
    basis.coordinates(ring, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::bracket;
    use crate::matrix::rank;
    use crate::rings::{FiniteFieldSq, GaussianRational, GaussianRationals, QuadraticExt, Rationals};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gauss(kind: &str) -> TwistedSystem<GaussianRationals> {
        TwistedSystem::new(kind.parse().unwrap(), GaussianRationals).unwrap()
    }

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    #[test]
    fn sigma_examples() {
        let sys = gauss("A3");
        let r = GaussianRationals;
        let t = sys.table();
        let x2 = LieVector::x(&r, t, 1);
        assert_eq!(sys.sigma_on_algebra(&x2), x2);
        let ix1 = LieVector::x(&r, t, 0).scale(&r, &g(0, 1));
        assert_eq!(sys.sigma_on_algebra(&ix1), LieVector::x(&r, t, 2).scale(&r, &g(0, -1)));
        let a4 = gauss("A4");
        for class in a4.classes().classes() {
            if let Some(m) = class.middle() {
                let xm = LieVector::x(&r, a4.table(), m);
                assert_eq!(a4.sigma_on_algebra(&xm), xm.scale(&r, &g(-1, 0)));
            }
        }
    }

    #[test]
    fn sigma_is_semilinear_involutive_automorphism() {
        let r = GaussianRationals;
        let sys = gauss("A4");
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut rv = || LieVector { coords: (0..sys.dim()).map(|_| g(rng.gen_range(-3..4), rng.gen_range(-3..4))).collect() };
        for _ in 0..10 {
            let (x, y) = (rv(), rv());
            assert_eq!(sys.sigma_on_algebra(&sys.sigma_on_algebra(&x)), x);
            let c = g(2, -5);
            assert_eq!(sys.sigma_on_algebra(&x.scale(&r, &c)), sys.sigma_on_algebra(&x).scale(&r, &r.theta(&c)));
            let t = sys.table();
            assert_eq!(
                sys.sigma_on_algebra(&bracket(&r, t, &x, &y)),
                bracket(&r, t, &sys.sigma_on_algebra(&x), &sys.sigma_on_algebra(&y))
            );
        }
        let p = sys.rho_matrix();
        assert!(p.mul(&r, &p).is_identity(&r));
    }

    /// Counting oracle: one X⁺ per class, X⁻(I) per non-A1 class, X⁻(II) per
    /// A2 class, H⁺ per simple class and H⁻ per non-A1 simple class.
    fn counting_oracle<R: InvolutiveRing>(sys: &TwistedSystem<R>) -> usize {
        let cl = sys.classes();
        let non_a1 = |c: &crate::roots::TwistedClass| c.kind != ClassKind::A1;
        let simple = cl.simple_classes(sys.system());
        cl.len()
            + cl.classes().iter().filter(|c| non_a1(c)).count()
            + cl.count(ClassKind::A2)
            + simple.len()
            + simple.iter().filter(|&&c| non_a1(cl.class(c))).count()
    }

    #[test]
    fn basis_counts_and_sigma_fixed() {
        for (kind, n) in [("A3", 15), ("A4", 24), ("D4", 28), ("E6", 78)] {
            let sys = gauss(kind);
            let basis = twisted_basis(&sys).unwrap();
            assert_eq!(basis.len(), n);
            assert_eq!(counting_oracle(&sys), n);
            for e in basis.elements() {
                assert_eq!(sys.sigma_on_algebra(&e.vector), e.vector, "{kind}");
            }
            assert_eq!(rank(&GaussianRationals, basis.change_matrix()).unwrap(), n);
        }
        let a4 = twisted_basis(&gauss("A4")).unwrap();
        assert_eq!(a4.elements().iter().filter(|e| e.label.kind == LabelKind::XMinusII).count(), 4);
    }

    #[test]
    fn basis_over_finite_field_and_quadratic_ring() {
        let f9 = TwistedSystem::new(RootKind::A(3), FiniteFieldSq::new(3, 1).unwrap()).unwrap();
        let b = twisted_basis(&f9).unwrap();
        assert!(b.elements().iter().all(|e| f9.sigma_on_algebra(&e.vector) == e.vector));
        let q = TwistedSystem::new(RootKind::A(4), QuadraticExt::new(Rationals, 5)).unwrap();
        assert_eq!(twisted_basis(&q).unwrap().len(), 24);
    }

    #[test]
    fn preconditions() {
        let q = TwistedSystem::new(RootKind::A(3), Rationals).unwrap();
        assert!(matches!(twisted_basis(&q), Err(TwistError::Ring(RingError::NoAntifixedUnit(_)))));
        let f4 = TwistedSystem::new(RootKind::A(3), FiniteFieldSq::new(2, 1).unwrap()).unwrap();
        assert!(matches!(twisted_basis(&f4), Err(TwistError::Ring(RingError::NoHalf(_)))));
        let f9 = TwistedSystem::new(RootKind::A(4), FiniteFieldSq::new(3, 1).unwrap()).unwrap();
        assert!(matches!(twisted_basis(&f9), Err(TwistError::Ring(RingError::NoThird(_)))));
    }

    #[test]
    fn coordinates_of_a_root_vector() {
        let r = GaussianRationals;
        let sys = gauss("A3");
        let basis = twisted_basis(&sys).unwrap();
        let c = sys.classes().class_of(0);
        assert_eq!(sys.classes().class(c).kind, ClassKind::A1Sq);
        let coords = basis.coordinates(&r, &LieVector::x(&r, sys.table(), 0));
        let a = basis.antifixed_unit().clone();
        // oracle: invert [[1, a], [1, -a]] by hand
        let idx = |k| basis.elements().iter().position(|e| e.label == BasisLabel { kind: k, class: c }).unwrap();
        assert_eq!(coords[idx(LabelKind::XPlus)], r.half().unwrap());
        assert_eq!(coords[idx(LabelKind::XMinusI)], r.inverse(&r.scale_int(2, &a)).unwrap());
        let nonzero = coords.iter().filter(|x| !r.is_zero(x)).count();
        assert_eq!(nonzero, 2);
        for (k, e) in basis.elements().iter().enumerate() {
            let unit = basis.coordinates(&r, &e.vector);
            assert!(unit.iter().enumerate().all(|(j, x)| if j == k { r.is_one(x) } else { r.is_zero(x) }));
        }
    }

    #[test]
    fn fixed_and_antifixed_vectors_have_matching_coordinates() {
        let r = GaussianRationals;
        let sys = gauss("A4");
        let basis = twisted_basis(&sys).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..5 {
            let x = LieVector { coords: (0..sys.dim()).map(|_| g(rng.gen_range(-3..4), rng.gen_range(-3..4))).collect() };
            let sx = sys.sigma_on_algebra(&x);
            let fixed = x.add(&r, &sx);
            let anti = x.sub(&r, &sx);
            assert!(basis.coordinates(&r, &fixed).iter().all(|c| r.is_fixed(c)));
            assert!(basis.coordinates(&r, &anti).iter().all(|c| r.is_antifixed(c)));
            assert_eq!(basis.combine(&r, &basis.coordinates(&r, &x)), x);
        }
    }

    #[test]
    fn sigma_fixed_subspace_membership() {
        let r = GaussianRationals;
        let sys = gauss("D4");
        let basis = twisted_basis(&sys).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let mut real: Vec<GaussianRational> = (0..basis.len()).map(|_| g(rng.gen_range(-5..5), 0)).collect();
        let v = basis.combine(&r, &real);
        assert_eq!(sys.sigma_on_algebra(&v), v);
        real[3] = g(1, 1);
        let w = basis.combine(&r, &real);
        assert_ne!(sys.sigma_on_algebra(&w), w);
    }
}
