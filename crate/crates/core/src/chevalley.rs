//! Chevalley bases, structure constants and the adjoint representation.
//!
//! Basis vectors are indexed `0..rank` for `H_1, ..., H_n` and `rank + r` for
//! `X_r`, where `r` is a root index in [`RootSystem`] order.

use thiserror::Error;

use crate::matrix::Matrix;
use crate::rings::InvolutiveRing;
use crate::roots::{classify_orbits, ClassKind, DiagramPermutation, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChevalleyError {
    #[error("no sign rescaling satisfies the ρ conditions at root {0}")]
    SignFixFailed(String),
    #[error("matrix is not ad(x) for any x in the algebra")]
    NotInAdjointImage,
    #[error("the Cartan matrix is not invertible over {0}")]
    CartanNotInvertible(String),
}

/// Structure constants `N_{α,β}` of a Chevalley basis, and optionally the
/// signs `ε_α` of a diagram symmetry `ρ(X_α) = ε_α X_ᾱ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTable {
    system: RootSystem,
    /// `n[i * len + j]` is `N_{r_i, r_j}`, or 0 when `r_i + r_j` is not a root.
    n: Vec<i8>,
    rho: Option<DiagramPermutation>,
    eps: Vec<i8>,
}

/// The bimultiplicative cocycle with `ε(α_i, α_i) = -1` and, for `i > j`,
/// `ε(α_i, α_j) = -1` exactly when the nodes are adjacent.
fn cocycle(system: &RootSystem, x: &[i32], y: &[i32]) -> i8 {
    let cartan = system.cartan();
    let mut e: i64 = 0;
    for i in 0..x.len() {
        e += (x[i] * y[i]) as i64;
        for j in 0..i {
            if cartan[i][j] == -1 {
                e += (x[i] * y[j]) as i64;
            }
        }
    }
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Lowest simple root `α_p` with `γ - α_p` a root (or `-α_p` for negative `γ`),
/// returned as `(simple root index, remaining root index)`.
fn extraspecial(system: &RootSystem, g: usize) -> Option<(usize, usize)> {
    let positive = system.is_positive(g);
    (0..system.rank()).find_map(|p| {
        let s = if positive { p } else { system.negate(p) };
        system.sum(g, system.negate(s)).map(|b| (s, b))
    })
}

/// Root indices sorted by absolute height, so that induction on height can
/// visit them in order.
fn by_height(system: &RootSystem) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..system.len()).collect();
    idx.sort_by_key(|&i| (system.root(i).height().abs(), i));
    idx
}

/// Build a Chevalley basis with `[X_α, X_{-α}] = H_α`.
///
/// Signs start from the cocycle construction and are then rescaled so that
/// every extraspecial pair `(α_p, γ - α_p)` with `p` minimal has `N = +1`.
pub fn compute_structure_constants(system: &RootSystem) -> StructureTable {
    let len = system.len();
    let sgn = |i: usize| if system.is_positive(i) { 1 } else { -1 };
    let mut n = vec![0i8; len * len];
    for i in 0..len {
        for j in 0..len {
            if let Some(k) = system.sum(i, j) {
                let e = cocycle(system, system.root(i).coords(), system.root(j).coords());
                n[i * len + j] = e * sgn(i) * sgn(j) * sgn(k);
            }
        }
    }
    let mut c = vec![1i8; len];
    for g in by_height(system) {
        if system.is_positive(g) && system.root(g).height() > 1 {
            let (s, b) = extraspecial(system, g).expect("non-simple positive root");
            c[g] = n[s * len + b] * c[b];
            c[system.negate(g)] = c[g];
        }
    }
    let n = rescale(system, &n, &c);
    StructureTable { system: system.clone(), n, rho: None, eps: vec![1; len] }
}

/// Constants after `X_α ↦ c_α X_α` with `c_{-α} = c_α`.
fn rescale(system: &RootSystem, n: &[i8], c: &[i8]) -> Vec<i8> {
    let len = system.len();
    let mut out = n.to_vec();
    for i in 0..len {
        for j in 0..len {
            if let Some(k) = system.sum(i, j) {
                out[i * len + j] = n[i * len + j] * c[i] * c[j] * c[k];
            }
        }
    }
    out
}

/// The signs `ε_α` of the automorphism determined by `ρ(X_{±α_i}) = X_{±ρ(α_i)}`.
pub fn rho_signs(table: &StructureTable, rho: &DiagramPermutation) -> Vec<i8> {
    let system = &table.system;
    let rho_idx: Vec<usize> = (0..system.len()).map(|i| system.index_of(&rho.apply(system.root(i))).unwrap()).collect();
    let mut eps = vec![1i8; system.len()];
    for g in by_height(system) {
        if system.root(g).height().abs() > 1 {
            let (s, b) = extraspecial(system, g).unwrap();
            eps[g] = (table.n_raw(s, b) * eps[b] as i32 * table.n_raw(rho_idx[s], rho_idx[b])) as i8;
        }
    }
    eps
}

/// Rescale the basis so that `ρ(X_α) = ε_α X_ᾱ` with `ε_α = ε_ᾱ`, `ε_α = -1`
/// on the middle root of an A2 class and `ε_α = 1` everywhere else.
///
/// Only the non-representative member `ᾱ` of each non-fixed pair is
/// rescaled. Fixed roots cannot be rescaled and are checked instead.
pub fn fix_signs_for_rho(table: &StructureTable, rho: &DiagramPermutation) -> Result<StructureTable, ChevalleyError> {
    let system = &table.system;
    let raw = rho_signs(table, rho);
    let classes = classify_orbits(system, rho);
    let mut c = vec![1i8; system.len()];
    for class in classes.classes() {
        let (a, b) = (class.representative(), class.bar());
        if a != b {
            // ε_α ε_ᾱ = 1 because ρ² = 1, so one flip fixes both.
            c[b] = raw[a];
        }
    }
    let n = rescale(system, &table.n, &c);
    let mut fixed = StructureTable { system: system.clone(), n, rho: Some(rho.clone()), eps: vec![1; system.len()] };
    fixed.eps = rho_signs(&fixed, rho);
    for class in classes.classes() {
        for &m in &class.members {
            let want = if class.kind == ClassKind::A2 && class.middle() == Some(m) { -1 } else { 1 };
            if fixed.eps[m] != want {
                return Err(ChevalleyError::SignFixFailed(system.root(m).to_string()));
            }
        }
    }
    Ok(fixed)
}

impl StructureTable {
    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    /// `|Φ| + rank`.
    pub fn dim(&self) -> usize {
        self.system.len() + self.system.rank()
    }

    pub fn rho(&self) -> Option<&DiagramPermutation> {
        self.rho.as_ref()
    }

    fn n_raw(&self, i: usize, j: usize) -> i32 {
        self.n[i * self.system.len() + j] as i32
    }

    /// `N_{r_i, r_j}` when `r_i + r_j` is a root.
    pub fn n(&self, i: usize, j: usize) -> Option<i32> {
        self.system.sum(i, j).map(|_| self.n_raw(i, j))
    }

    /// `ε_α` for the attached symmetry (all 1 before sign fixing).
    pub fn epsilon(&self, i: usize) -> i32 {
        self.eps[i] as i32
    }

    /// All defined `(i, j, N_{r_i, r_j})`.
    pub fn constants(&self) -> impl Iterator<Item = (usize, usize, i32)> + '_ {
        let len = self.system.len();
        (0..len * len).filter_map(move |k| self.n(k / len, k % len).map(|v| (k / len, k % len, v)))
    }

    pub fn h_index(&self, i: usize) -> usize {
        i
    }

    pub fn x_index(&self, root: usize) -> usize {
        self.rank() + root
    }

    /// `[b_i, b_j]` for basis vectors, as sparse integer coordinates.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<(usize, i32)> {
        let n = self.rank();
        match (i < n, j < n) {
            (true, true) => vec![],
            (true, false) => vec![(j, self.system.pairing_simple(j - n, i))],
            (false, true) => vec![(i, -self.system.pairing_simple(i - n, j))],
            (false, false) => {
                let (a, b) = (i - n, j - n);
                if b == self.system.negate(a) {
                    self.system.root(a).coords().iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| (k, c)).collect()
                } else if let Some(s) = self.system.sum(a, b) {
                    vec![(n + s, self.n_raw(a, b))]
                } else {
                    vec![]
                }
            }
        }
    }

    /// `ρ(b_k) = sign · b_image`.
    pub fn rho_on_basis(&self, k: usize) -> (usize, i32) {
        let n = self.rank();
        let rho = self.rho.as_ref().expect("sign-fixed table");
        if k < n {
            (rho.apply_simple(k), 1)
        } else {
            let r = k - n;
            let img = self.system.index_of(&rho.apply(self.system.root(r))).unwrap();
            (n + img, self.epsilon(r))
        }
    }

    /// Check `ρ[b_i, b_j] = [ρ b_i, ρ b_j]` on all basis pairs; returns the
    /// first failing pair.
    pub fn rho_is_automorphism(&self) -> Result<(), (usize, usize)> {
        let dim = self.dim();
        let apply = |v: &[(usize, i32)]| -> Vec<(usize, i32)> {
            let mut out: Vec<(usize, i32)> = v
                .iter()
                .map(|&(k, c)| {
                    let (img, s) = self.rho_on_basis(k);
                    (img, c * s)
                })
                .collect();
            out.sort();
            out
        };
        for i in 0..dim {
            for j in 0..dim {
                let lhs = apply(&self.bracket_basis(i, j));
                let (ri, si) = self.rho_on_basis(i);
                let (rj, sj) = self.rho_on_basis(j);
                let mut rhs: Vec<(usize, i32)> =
                    self.bracket_basis(ri, rj).into_iter().map(|(k, c)| (k, c * si * sj)).collect();
                rhs.sort();
                if lhs != rhs {
                    return Err((i, j));
                }
            }
        }
        Ok(())
    }

    /// Check the Jacobi identity on the listed basis triples; returns the first failure.
    pub fn jacobi_failures(&self, triples: impl Iterator<Item = (usize, usize, usize)>) -> Option<(usize, usize, usize)> {
        let dim = self.dim();
        let br = |v: &[i64], j: usize| -> Vec<i64> {
            let mut out = vec![0i64; dim];
            for (k, &c) in v.iter().enumerate() {
                if c != 0 {
                    for (m, d) in self.bracket_basis(k, j) {
                        out[m] += c * d as i64;
                    }
                }
            }
            out
        };
        let unit = |k: usize| {
            let mut v = vec![0i64; dim];
            v[k] = 1;
            v
        };
        for (x, y, z) in triples {
            // [x,[y,z]] + [y,[z,x]] + [z,[x,y]] written with right brackets by basis vectors
            let yz = br(&unit(y), z);
            let zx = br(&unit(z), x);
            let xy = br(&unit(x), y);
            let neg = |v: Vec<i64>| v.into_iter().map(|c| -c).collect::<Vec<_>>();
            let t1 = neg(br(&yz, x));
            let t2 = neg(br(&zx, y));
            let t3 = neg(br(&xy, z));
            if (0..dim).any(|k| t1[k] + t2[k] + t3[k] != 0) {
                return Some((x, y, z));
            }
        }
        None
    }
}

/// An element of `L(Φ, R)` in the Chevalley basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LieVector<E> {
    pub coords: Vec<E>,
}

impl<E: Clone + PartialEq> LieVector<E> {
    pub fn zero<R: InvolutiveRing<Elem = E>>(ring: &R, dim: usize) -> Self {
        Self { coords: vec![ring.zero(); dim] }
    }

    pub fn basis<R: InvolutiveRing<Elem = E>>(ring: &R, dim: usize, k: usize) -> Self {
        Self::basis_scaled(ring, dim, k, ring.one())
    }

    pub fn basis_scaled<R: InvolutiveRing<Elem = E>>(ring: &R, dim: usize, k: usize, c: E) -> Self {
        let mut v = Self::zero(ring, dim);
        v.coords[k] = c;
        v
    }

    /// `H_i` (0-based simple index).
    pub fn h<R: InvolutiveRing<Elem = E>>(ring: &R, table: &StructureTable, i: usize) -> Self {
        Self::basis(ring, table.dim(), table.h_index(i))
    }

    /// `H_α = Σ c_i H_i` for `α = Σ c_i α_i`.
    pub fn h_root<R: InvolutiveRing<Elem = E>>(ring: &R, table: &StructureTable, root: usize) -> Self {
        let mut v = Self::zero(ring, table.dim());
        for (i, &c) in table.system().root(root).coords().iter().enumerate() {
            v.coords[i] = ring.from_int(c as i64);
        }
        v
    }

    /// `X_α`.
    pub fn x<R: InvolutiveRing<Elem = E>>(ring: &R, table: &StructureTable, root: usize) -> Self {
        Self::basis(ring, table.dim(), table.x_index(root))
    }

    pub fn is_zero<R: InvolutiveRing<Elem = E>>(&self, ring: &R) -> bool {
        self.coords.iter().all(|c| ring.is_zero(c))
    }

    pub fn add<R: InvolutiveRing<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        Self { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| ring.add(a, b)).collect() }
    }

    pub fn sub<R: InvolutiveRing<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        Self { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| ring.sub(a, b)).collect() }
    }

    pub fn scale<R: InvolutiveRing<Elem = E>>(&self, ring: &R, c: &E) -> Self {
        Self { coords: self.coords.iter().map(|x| ring.mul(c, x)).collect() }
    }
}

pub fn bracket<R: InvolutiveRing>(
    ring: &R,
    table: &StructureTable,
    x: &LieVector<R::Elem>,
    y: &LieVector<R::Elem>,
) -> LieVector<R::Elem> {
    let mut out = LieVector::zero(ring, table.dim());
    for (i, a) in x.coords.iter().enumerate() {
        if ring.is_zero(a) {
            continue;
        }
        for (j, b) in y.coords.iter().enumerate() {
            if ring.is_zero(b) {
                continue;
            }
            let ab = ring.mul(a, b);
            for (k, c) in table.bracket_basis(i, j) {
                out.coords[k] = ring.add(&out.coords[k], &ring.scale_int(c as i64, &ab));
            }
        }
    }
    out
}

/// `ad(x)`: column `j` holds the coordinates of `[x, b_j]`.
pub fn ad_matrix<R: InvolutiveRing>(ring: &R, table: &StructureTable, x: &LieVector<R::Elem>) -> Matrix<R::Elem> {
    let dim = table.dim();
    let mut m = Matrix::zeros(ring, dim, dim);
    for (k, a) in x.coords.iter().enumerate() {
        if ring.is_zero(a) {
            continue;
        }
        for j in 0..dim {
            for (i, c) in table.bracket_basis(k, j) {
                let v = ring.add(m.get(i, j), &ring.scale_int(c as i64, a));
                m.set(i, j, v);
            }
        }
    }
    m
}

/// Recover `x` from `ad(x)`. The Cartan part is read off the diagonal at the
/// simple roots, which needs the Cartan matrix to be invertible over the ring.
pub fn lie_vector_from_ad<R: InvolutiveRing>(
    ring: &R,
    table: &StructureTable,
    m: &Matrix<R::Elem>,
) -> Result<LieVector<R::Elem>, ChevalleyError> {
    let n = table.rank();
    let system = table.system();
    let mut x = LieVector::zero(ring, table.dim());
    for r in 0..system.len() {
        // column H_i at row X_r is -x_r ⟨r, α_i⟩; some pairing is ±1
        let i = (0..n).find(|&i| system.pairing_simple(r, i).abs() == 1).ok_or(ChevalleyError::NotInAdjointImage)?;
        let p = system.pairing_simple(r, i) as i64;
        x.coords[n + r] = ring.scale_int(-p, m.get(n + r, i));
    }
    let cartan = Matrix::from_fn(n, n, |k, i| ring.from_int(system.cartan()[k][i] as i64));
    let inv = cartan.inverse(ring).map_err(|_| ChevalleyError::CartanNotInvertible(ring.name()))?;
    let diag: Vec<R::Elem> = (0..n).map(|k| m.get(n + k, n + k).clone()).collect();
    for (i, h) in inv.mul_vec(ring, &diag).into_iter().enumerate() {
        x.coords[i] = h;
    }
    if ad_matrix(ring, table, &x) != *m {
        return Err(ChevalleyError::NotInAdjointImage);
    }
    Ok(x)
}
