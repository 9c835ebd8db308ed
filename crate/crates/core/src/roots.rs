//! Simply-laced root systems (types A, D, E6), their order-2 diagram
//! symmetries, and the classification of roots into twisted classes.
//!
//! Roots are integer coordinate vectors over the simple roots (Bourbaki
//! numbering). Positive roots are ordered by height, and within one height by
//! descending lexicographic order of the coordinates, so the simple roots come
//! first as `α_1, ..., α_n`. Negative roots follow in the same order. Most of
//! the crate refers to roots by their index in this list.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("unsupported root system kind `{0}` (expected A(n≥2), D(n≥4) or E6)")]
    UnsupportedKind(String),
    #[error("permutation {0:?} is not an order-2 diagram symmetry")]
    NotDiagramSymmetry(Vec<usize>),
    #[error("{0} is not a root of this system")]
    NotARoot(Root),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootKind {
    A(usize),
    D(usize),
    E6,
}

impl RootKind {
    pub fn rank(self) -> usize {
        match self {
            RootKind::A(n) | RootKind::D(n) => n,
            RootKind::E6 => 6,
        }
    }

    pub fn validate(self) -> Result<Self, RootError> {
        match self {
            RootKind::A(n) if n >= 2 => Ok(self),
            RootKind::D(n) if n >= 4 => Ok(self),
            RootKind::E6 => Ok(self),
            other => Err(RootError::UnsupportedKind(other.to_string())),
        }
    }

    /// Number of roots: `n(n+1)`, `2n(n-1)` or 72.
    pub fn root_count(self) -> usize {
        match self {
            RootKind::A(n) => n * (n + 1),
            RootKind::D(n) => 2 * n * (n - 1),
            RootKind::E6 => 72,
        }
    }
}

impl fmt::Display for RootKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootKind::A(n) => write!(f, "A{n}"),
            RootKind::D(n) => write!(f, "D{n}"),
            RootKind::E6 => write!(f, "E6"),
        }
    }
}

impl FromStr for RootKind {
    type Err = RootError;
    fn from_str(s: &str) -> Result<Self, RootError> {
        let bad = || RootError::UnsupportedKind(s.to_string());
        let t = s.trim().to_ascii_uppercase().replace(['(', ')'], "");
        let (letter, digits) = t.split_at(t.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
        let n: usize = digits.parse().map_err(|_| bad())?;
        let kind = match letter {
            "A" => RootKind::A(n),
            "D" => RootKind::D(n),
            "E" if n == 6 => RootKind::E6,
            _ => return Err(bad()),
        };
        kind.validate().map_err(|_| bad())
    }
}

/// A root as an integer vector over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Root(pub Vec<i32>);

impl Root {
    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn simple(rank: usize, i: usize) -> Root {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }
}

/// Written as a sum of simple roots, e.g. `a1+2a2+a3` or `-a2`.
impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.is_positive() { "" } else { "-" };
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match c.abs() {
                1 => format!("a{}", i + 1),
                m => format!("{m}a{}", i + 1),
            })
            .collect();
        write!(f, "{sign}{}", if terms.len() > 1 && !sign.is_empty() { format!("({})", terms.join("+")) } else { terms.join("+") })
    }
}

impl FromStr for Root {
    type Err = String;
    /// Accepts the display form (`a1+a2`, `-(a1+a2)`, `2a3`) or a plain
    /// coordinate list (`1,1,0`); the rank is taken from the largest index.
    fn from_str(s: &str) -> Result<Self, String> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.contains(',') || t.chars().all(|c| c.is_ascii_digit() || c == '-') {
            let v: Result<Vec<i32>, _> = t.split(',').map(|x| x.parse::<i32>()).collect();
            return v.map(Root).map_err(|_| format!("bad root `{s}`"));
        }
        let (neg, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest.trim_start_matches('(').trim_end_matches(')')),
            None => (false, t.as_str()),
        };
        let mut terms = Vec::new();
        for term in body.split('+') {
            let (m, idx) = term.split_once('a').ok_or_else(|| format!("bad root term `{term}`"))?;
            let m: i32 = if m.is_empty() { 1 } else { m.parse().map_err(|_| format!("bad coefficient `{m}`"))? };
            let idx: usize = idx.parse().map_err(|_| format!("bad index in `{term}`"))?;
            if idx == 0 {
                return Err("simple roots are numbered from 1".into());
            }
            terms.push((idx - 1, m));
        }
        let rank = terms.iter().map(|(i, _)| i + 1).max().unwrap_or(0);
        let mut v = vec![0; rank];
        for (i, m) in terms {
            v[i] += if neg { -m } else { m };
        }
        Ok(Root(v))
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    kind: RootKind,
    cartan: Vec<Vec<i32>>,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    /// `sums[i * len + j]` is the index of `roots[i] + roots[j]` when that is a root.
    sums: Vec<Option<usize>>,
}

fn cartan_matrix(kind: RootKind) -> Vec<Vec<i32>> {
    let n = kind.rank();
    let mut a = vec![vec![0; n]; n];
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match kind {
        RootKind::A(n) => (0..n - 1).for_each(|i| link(i, i + 1)),
        RootKind::D(n) => {
            (0..n - 2).for_each(|i| link(i, i + 1));
            link(n - 3, n - 1);
        }
        RootKind::E6 => {
            // Bourbaki: 1-3-4-5-6 with 2 attached to 4
            link(0, 2);
            link(2, 3);
            link(3, 4);
            link(4, 5);
            link(1, 3);
        }
    }
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    a
}

/// Two systems of the same kind are built identically.
impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for RootSystem {}

impl RootSystem {
    /// Roots are generated as the orbit of the simple roots under the
    /// simple reflections.
    pub fn new(kind: RootKind) -> Result<Self, RootError> {
        let kind = kind.validate()?;
        let n = kind.rank();
        let cartan = cartan_matrix(kind);
        let mut positives: Vec<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
        let mut seen: std::collections::HashSet<Root> = positives.iter().cloned().collect();
        let mut frontier = positives.clone();
        while let Some(beta) = frontier.pop() {
            for i in 0..n {
                let pairing: i32 = (0..n).map(|j| beta.0[j] * cartan[j][i]).sum();
                let mut img = beta.clone();
                img.0[i] -= pairing;
                if img.is_positive() && seen.insert(img.clone()) {
                    positives.push(img.clone());
                    frontier.push(img);
                }
            }
        }
        positives.sort_by(|x, y| x.height().cmp(&y.height()).then_with(|| y.0.cmp(&x.0)));
        let mut roots = positives.clone();
        roots.extend(positives.iter().map(Root::neg));
        let index: HashMap<Root, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let len = roots.len();
        let mut sums = vec![None; len * len];
        for i in 0..len {
            for j in 0..len {
                sums[i * len + j] = index.get(&roots[i].add(&roots[j])).copied();
            }
        }
        Ok(Self { kind, cartan, roots, index, sums })
    }

    pub fn kind(&self) -> RootKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.kind.rank()
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn require(&self, r: &Root) -> Result<usize, RootError> {
        self.index_of(r).ok_or_else(|| RootError::NotARoot(r.clone()))
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.num_positive()
    }

    /// Index of the `k`-th simple root (0-based).
    pub fn simple(&self, k: usize) -> usize {
        debug_assert!(self.roots[k] == Root::simple(self.rank(), k));
        k
    }

    pub fn negate(&self, i: usize) -> usize {
        let np = self.num_positive();
        if i < np {
            i + np
        } else {
            i - np
        }
    }

    /// Index of `roots[i] + roots[j]` if it is a root.
    pub fn sum(&self, i: usize, j: usize) -> Option<usize> {
        self.sums[i * self.len() + j]
    }

    /// The symmetric form `(x, y)`; equals the Cartan pairing `⟨x, y⟩` here.
    pub fn inner(&self, x: &[i32], y: &[i32]) -> i32 {
        let n = self.rank();
        (0..n).map(|i| (0..n).map(|j| x[i] * self.cartan[i][j] * y[j]).sum::<i32>()).sum()
    }

    /// `⟨roots[i], roots[j]⟩`.
    pub fn pairing(&self, i: usize, j: usize) -> i32 {
        self.inner(&self.roots[i].0, &self.roots[j].0)
    }

    /// `⟨roots[i], α_k⟩`.
    pub fn pairing_simple(&self, i: usize, k: usize) -> i32 {
        (0..self.rank()).map(|j| self.roots[i].0[j] * self.cartan[j][k]).sum()
    }

    /// Parse a root in display or coordinate form, padding to the rank.
    pub fn parse_root(&self, s: &str) -> Result<usize, RootError> {
        let mut r: Root = s.parse().map_err(|_| RootError::NotARoot(Root(vec![])))?;
        if r.0.len() < self.rank() {
            r.0.resize(self.rank(), 0);
        }
        self.require(&r)
    }

    /// `w_α(β) = β - ⟨β, α⟩ α`.
    pub fn reflect(&self, alpha: &Root, beta: &Root) -> Result<Root, RootError> {
        self.require(alpha)?;
        self.require(beta)?;
        let c = self.inner(&beta.0, &alpha.0);
        Ok(Root(beta.0.iter().zip(&alpha.0).map(|(b, a)| b - c * a).collect()))
    }
}

/// An order-2 permutation of the simple roots preserving the Dynkin diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramPermutation {
    perm: Vec<usize>,
}

impl DiagramPermutation {
    pub fn new(system: &RootSystem, perm: Vec<usize>) -> Result<Self, RootError> {
        let n = system.rank();
        let bad = || RootError::NotDiagramSymmetry(perm.clone());
        if perm.len() != n || perm.iter().any(|&p| p >= n) {
            return Err(bad());
        }
        let involutive = (0..n).all(|i| perm[perm[i]] == i);
        let nontrivial = (0..n).any(|i| perm[i] != i);
        let preserves = (0..n).all(|i| (0..n).all(|j| system.cartan[perm[i]][perm[j]] == system.cartan[i][j]));
        if !(involutive && nontrivial && preserves) {
            return Err(bad());
        }
        Ok(Self { perm })
    }

    /// The standard symmetry: reversal for A, the `α_{n-1} ↔ α_n` swap for D,
    /// and `α_1 ↔ α_6, α_3 ↔ α_5` for E6.
    pub fn standard(system: &RootSystem) -> Self {
        let n = system.rank();
        let perm: Vec<usize> = match system.kind() {
            RootKind::A(n) => (0..n).map(|i| n - 1 - i).collect(),
            RootKind::D(n) => (0..n).map(|i| if i == n - 2 { n - 1 } else if i == n - 1 { n - 2 } else { i }).collect(),
            RootKind::E6 => vec![5, 1, 4, 3, 2, 0],
        };
        debug_assert_eq!(perm.len(), n);
        Self::new(system, perm).expect("standard symmetry preserves the diagram")
    }

    /// 0-based images of the simple roots.
    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    pub fn apply_simple(&self, k: usize) -> usize {
        self.perm[k]
    }

    /// Cycle notation with 1-based indices, e.g. `(1 3)(2)`.
    pub fn cycles(&self) -> String {
        let mut out = String::new();
        for i in 0..self.perm.len() {
            let j = self.perm[i];
            if j > i {
                out += &format!("({} {})", i + 1, j + 1);
            } else if j == i {
                out += &format!("({})", i + 1);
            }
        }
        out
    }

    pub fn apply(&self, r: &Root) -> Root {
        let mut v = vec![0; r.0.len()];
        for (i, &c) in r.0.iter().enumerate() {
            v[self.perm[i]] = c;
        }
        Root(v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ClassKind {
    /// A single ρ-fixed root.
    A1,
    /// `{α, ᾱ}` with `α ≠ ᾱ` and `α + ᾱ` not a root.
    A1Sq,
    /// `{α, ᾱ, α + ᾱ}`.
    A2,
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassKind::A1 => "A1",
            ClassKind::A1Sq => "A1^2",
            ClassKind::A2 => "A2",
        })
    }
}

/// An equivalence class `[α]` of roots. `members` lists root indices as
/// `[α]`, `[α, ᾱ]` or `[α, ᾱ, α+ᾱ]`, with `α` the representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedClass {
    pub kind: ClassKind,
    pub members: Vec<usize>,
}

impl TwistedClass {
    pub fn representative(&self) -> usize {
        self.members[0]
    }

    /// `ᾱ` (equal to `α` for an A1 class).
    pub fn bar(&self) -> usize {
        match self.kind {
            ClassKind::A1 => self.members[0],
            _ => self.members[1],
        }
    }

    /// `α + ᾱ` for an A2 class.
    pub fn middle(&self) -> Option<usize> {
        (self.kind == ClassKind::A2).then(|| self.members[2])
    }
}

/// The twisted classes of `Φ` under `ρ`, positives first.
#[derive(Debug, Clone)]
pub struct ClassTable {
    classes: Vec<TwistedClass>,
    class_of: Vec<usize>,
    /// `rho[i]` is the index of `ρ(roots[i])`.
    rho: Vec<usize>,
}

impl ClassTable {
    pub fn classes(&self) -> &[TwistedClass] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &TwistedClass {
        &self.classes[c]
    }

    pub fn class_of(&self, root: usize) -> usize {
        self.class_of[root]
    }

    pub fn rho(&self, root: usize) -> usize {
        self.rho[root]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn num_positive(&self) -> usize {
        self.classes.len() / 2
    }

    /// Index of `-[α]`.
    pub fn negative_of(&self, c: usize) -> usize {
        let np = self.num_positive();
        if c < np {
            c + np
        } else {
            c - np
        }
    }

    /// Positive classes containing a simple root, in order of their representative.
    pub fn simple_classes(&self, system: &RootSystem) -> Vec<usize> {
        (0..self.num_positive())
            .filter(|&c| self.classes[c].members.iter().any(|&r| r < system.rank()))
            .collect()
    }

    pub fn count(&self, kind: ClassKind) -> usize {
        self.classes.iter().filter(|c| c.kind == kind).count()
    }
}

pub fn apply_rho(system: &RootSystem, rho: &DiagramPermutation, alpha: &Root) -> Result<Root, RootError> {
    system.require(alpha)?;
    Ok(rho.apply(alpha))
}

/// Partition `Φ` into twisted classes.
///
/// Positive classes are listed by their representative (the first member in
/// root order); the class at `i + num_positive` is the negative of class `i`.
pub fn classify_orbits(system: &RootSystem, rho: &DiagramPermutation) -> ClassTable {
    let len = system.len();
    let rho_idx: Vec<usize> =
        (0..len).map(|i| system.index_of(&rho.apply(system.root(i))).expect("ρ permutes the roots")).collect();
    let np = system.num_positive();
    let mut taken = vec![false; len];
    let mut positive = Vec::new();
    // Non-fixed pairs first, so that the sums α + ᾱ are claimed by their A2 class.
    for i in 0..np {
        let j = rho_idx[i];
        if j > i && !taken[i] {
            taken[i] = true;
            taken[j] = true;
            match system.sum(i, j) {
                Some(s) => {
                    taken[s] = true;
                    positive.push(TwistedClass { kind: ClassKind::A2, members: vec![i, j, s] });
                }
                None => positive.push(TwistedClass { kind: ClassKind::A1Sq, members: vec![i, j] }),
            }
        }
    }
    for i in 0..np {
        if !taken[i] {
            debug_assert_eq!(rho_idx[i], i);
            taken[i] = true;
            positive.push(TwistedClass { kind: ClassKind::A1, members: vec![i] });
        }
    }
    positive.sort_by_key(|c| c.representative());
    let negative: Vec<TwistedClass> = positive
        .iter()
        .map(|c| TwistedClass { kind: c.kind, members: c.members.iter().map(|&m| system.negate(m)).collect() })
        .collect();
    let mut classes = positive;
    classes.extend(negative);
    let mut class_of = vec![usize::MAX; len];
    for (c, class) in classes.iter().enumerate() {
        for &m in &class.members {
            class_of[m] = c;
        }
    }
    ClassTable { classes, class_of, rho: rho_idx }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn sys(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    /// Independent oracle: close the simple roots and their negatives under
    /// all reflections `w_α` for `α` in the current set.
    fn reflection_closure(system: &RootSystem) -> HashSet<Root> {
        let n = system.rank();
        let mut set: HashSet<Root> = (0..n).flat_map(|i| [Root::simple(n, i), Root::simple(n, i).neg()]).collect();
        loop {
            let current: Vec<Root> = set.iter().cloned().collect();
            let mut grew = false;
            for a in &current {
                for b in &current {
                    let c = system.inner(&b.0, &a.0);
                    let img = Root(b.0.iter().zip(&a.0).map(|(x, y)| x - c * y).collect());
                    grew |= set.insert(img);
                }
            }
            if !grew {
                return set;
            }
        }
    }

    #[test]
    fn root_counts() {
        assert_eq!(sys("A3").len(), 12);
        assert_eq!(sys("A4").len(), 20);
        assert_eq!(sys("D4").len(), 24);
        assert_eq!(sys("D5").len(), 40);
        assert_eq!(sys("E6").len(), 72);
        for s in ["A2", "A3", "A4", "A5", "D4", "D5", "E6"] {
            let system = sys(s);
            assert_eq!(system.len(), system.kind().root_count());
        }
    }

    #[test]
    fn e6_matches_reflection_closure_oracle() {
        let system = sys("E6");
        let oracle = reflection_closure(&system);
        assert_eq!(oracle.len(), 72);
        let ours: HashSet<Root> = system.roots().iter().cloned().collect();
        assert_eq!(ours, oracle);
    }

    #[test]
    fn order_and_sign_structure() {
        let system = sys("A3");
        assert_eq!(system.root(0), &Root(vec![1, 0, 0]));
        assert_eq!(system.root(2), &Root(vec![0, 0, 1]));
        assert_eq!(system.root(3), &Root(vec![1, 1, 0]));
        for (i, r) in system.roots().iter().enumerate() {
            assert!(r.is_positive() || r.neg().is_positive());
            assert_eq!(system.root(system.negate(i)), &r.neg());
            assert_eq!(system.is_positive(i), r.is_positive());
        }
    }

    #[test]
    fn unsupported_kinds() {
        for s in ["B2", "A1", "D3", "E7", "G2", "X"] {
            assert!(s.parse::<RootKind>().is_err(), "{s}");
        }
        assert_eq!("d4".parse::<RootKind>().unwrap(), RootKind::D(4));
    }

    #[test]
    fn reflections() {
        let system = sys("A3");
        let a1 = Root(vec![1, 0, 0]);
        let a2 = Root(vec![0, 1, 0]);
        let a3 = Root(vec![0, 0, 1]);
        assert_eq!(system.reflect(&a1, &a1).unwrap(), a1.neg());
        assert_eq!(system.reflect(&a1, &a2).unwrap(), Root(vec![1, 1, 0]));
        assert_eq!(system.reflect(&a1, &a3).unwrap(), a3);
        for a in system.roots() {
            for b in system.roots() {
                assert!(system.index_of(&system.reflect(a, b).unwrap()).is_some());
            }
        }
    }

    #[test]
    fn standard_symmetries() {
        assert_eq!(DiagramPermutation::standard(&sys("A3")).cycles(), "(1 3)(2)");
        assert_eq!(DiagramPermutation::standard(&sys("D4")).cycles(), "(1)(2)(3 4)");
        assert_eq!(DiagramPermutation::standard(&sys("E6")).cycles(), "(1 6)(2)(3 5)(4)");
        let a3 = sys("A3");
        assert!(DiagramPermutation::new(&a3, vec![1, 0, 2]).is_err());
        assert!(DiagramPermutation::new(&a3, vec![0, 1, 2]).is_err());
    }

    #[test]
    fn rho_on_roots() {
        let system = sys("A3");
        let rho = DiagramPermutation::standard(&system);
        let r = |s: &str| system.root(system.parse_root(s).unwrap()).clone();
        assert_eq!(apply_rho(&system, &rho, &Root(vec![1, 0, 0])).unwrap(), Root(vec![0, 0, 1]));
        assert_eq!(apply_rho(&system, &rho, &r("a1+a2")).unwrap(), Root(vec![0, 1, 1]));
        assert_eq!(apply_rho(&system, &rho, &Root(vec![0, 1, 0])).unwrap(), Root(vec![0, 1, 0]));
        assert!(apply_rho(&system, &rho, &Root(vec![1, 0, 1])).is_err());
    }

    fn kind_counts(s: &str) -> (usize, usize, usize) {
        let system = sys(s);
        let table = classify_orbits(&system, &DiagramPermutation::standard(&system));
        (table.count(ClassKind::A1), table.count(ClassKind::A1Sq), table.count(ClassKind::A2))
    }

    /// Orbit-enumeration oracle: count ρ-orbits directly and decide the kind
    /// from fixedness and whether `α + ᾱ` is a root.
    fn oracle_counts(s: &str) -> (usize, usize, usize) {
        let system = sys(s);
        let rho = DiagramPermutation::standard(&system);
        let roots: HashSet<Root> = system.roots().iter().cloned().collect();
        let mut middles = HashSet::new();
        let (mut a1sq, mut a2) = (0, 0);
        for r in system.roots() {
            let b = rho.apply(r);
            if b != *r && r < &b {
                let s = r.add(&b);
                if roots.contains(&s) {
                    a2 += 1;
                    middles.insert(s);
                } else {
                    a1sq += 1;
                }
            }
        }
        let a1 = system.roots().iter().filter(|r| rho.apply(r) == **r && !middles.contains(*r)).count();
        (a1, a1sq, a2)
    }

    #[test]
    fn class_kinds_match_orbit_oracle() {
        assert_eq!(kind_counts("A3"), (4, 4, 0));
        assert_eq!(kind_counts("A4"), (0, 4, 4));
        assert_eq!(kind_counts("D4"), (12, 6, 0));
        for s in ["A2", "A3", "A4", "A5", "A6", "D4", "D5", "E6"] {
            assert_eq!(kind_counts(s), oracle_counts(s), "{s}");
        }
    }

    #[test]
    fn classes_partition_and_negate() {
        for s in ["A2", "A3", "A4", "A5", "A6", "D4", "D5", "D6", "E6"] {
            let system = sys(s);
            let rho = DiagramPermutation::standard(&system);
            let table = classify_orbits(&system, &rho);
            let total: usize = table.classes().iter().map(|c| c.members.len()).sum();
            assert_eq!(total, system.len());
            let mut seen = HashSet::new();
            for (c, class) in table.classes().iter().enumerate() {
                for &m in &class.members {
                    assert!(seen.insert(m));
                    assert_eq!(table.class_of(m), c);
                    assert_eq!(table.rho(table.rho(m)), m);
                    assert_eq!(table.class_of(table.rho(m)), c);
                }
                let neg = table.class(table.negative_of(c));
                assert_eq!(neg.kind, class.kind);
                let negated: Vec<usize> = class.members.iter().map(|&m| system.negate(m)).collect();
                assert_eq!(neg.members, negated);
                if let Some(mid) = class.middle() {
                    assert_eq!(system.sum(class.representative(), class.bar()), Some(mid));
                    assert_eq!(table.rho(mid), mid);
                }
                let all_pos = class.members.iter().all(|&m| system.is_positive(m));
                assert_eq!(all_pos, c < table.num_positive());
            }
            let has_a2 = table.count(ClassKind::A2) > 0;
            assert_eq!(has_a2, matches!(system.kind(), RootKind::A(n) if n % 2 == 0), "{s}");
        }
    }

    #[test]
    fn root_display_round_trip() {
        let system = sys("D5");
        for r in system.roots() {
            let s = r.to_string();
            assert_eq!(system.root(system.parse_root(&s).unwrap()), r, "{s}");
        }
    }
}
