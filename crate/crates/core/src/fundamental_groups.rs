//! Fundamental groups of the total and orbit spaces, the covering maps
//! between them, and homomorphism-class descriptors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{self, Error, Result};
use crate::group::{eval_word, GenWord, GroupElement};

/// An integer 2×2 matrix, not necessarily invertible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntMatrix2 {
    pub a11: i64,
    pub a12: i64,
    pub a21: i64,
    pub a22: i64,
}

impl IntMatrix2 {
    pub const IDENTITY: IntMatrix2 = IntMatrix2 { a11: 1, a12: 0, a21: 0, a22: 1 };

    pub const fn new(a11: i64, a12: i64, a21: i64, a22: i64) -> Self {
        IntMatrix2 { a11, a12, a21, a22 }
    }

    pub fn det(&self) -> Result<i64> {
        error::sub(error::mul(self.a11, self.a22)?, error::mul(self.a12, self.a21)?)
    }

    pub fn mul(&self, o: &IntMatrix2) -> Result<IntMatrix2> {
        let dot = |p: i64, q: i64, r: i64, s: i64| error::add(error::mul(p, q)?, error::mul(r, s)?);
        Ok(IntMatrix2 {
            a11: dot(self.a11, o.a11, self.a12, o.a21)?,
            a12: dot(self.a11, o.a12, self.a12, o.a22)?,
            a21: dot(self.a21, o.a11, self.a22, o.a21)?,
            a22: dot(self.a21, o.a12, self.a22, o.a22)?,
        })
    }

    /// Acts on the exponent column vector `(a, b)`.
    pub fn apply(&self, a: i64, b: i64) -> Result<(i64, i64)> {
        Ok((
            error::add(error::mul(self.a11, a)?, error::mul(self.a12, b)?)?,
            error::add(error::mul(self.a21, a)?, error::mul(self.a22, b)?)?,
        ))
    }
}

impl fmt::Display for IntMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a11, self.a12, self.a21, self.a22)
    }
}

/// An element of GL₂(Z).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MatrixGL2Z(IntMatrix2);

impl MatrixGL2Z {
    /// The monodromy `[[1,1],[0,1]]` of the bundle.
    pub const A: MatrixGL2Z = MatrixGL2Z(IntMatrix2::new(1, 1, 0, 1));
    /// The monodromy `[[1,2],[0,1]]` of the orbit space.
    pub const B: MatrixGL2Z = MatrixGL2Z(IntMatrix2::new(1, 2, 0, 1));
    pub const IDENTITY: MatrixGL2Z = MatrixGL2Z(IntMatrix2::IDENTITY);

    pub fn new(m: IntMatrix2) -> Result<Self> {
        match m.det()? {
            1 | -1 => Ok(MatrixGL2Z(m)),
            d => Err(Error::NotInvertible(d)),
        }
    }

    pub fn matrix(&self) -> IntMatrix2 {
        self.0
    }

    pub fn det(&self) -> i64 {
        self.0.det().expect("determinant of a GL2(Z) matrix is ±1")
    }

    pub fn inverse(&self) -> MatrixGL2Z {
        let m = self.0;
        let d = self.det();
        MatrixGL2Z(IntMatrix2::new(d * m.a22, -d * m.a12, -d * m.a21, d * m.a11))
    }

    pub fn pow(&self, k: i64) -> Result<MatrixGL2Z> {
        let mut base = if k < 0 { self.inverse().0 } else { self.0 };
        let mut e = k.unsigned_abs();
        let mut acc = IntMatrix2::IDENTITY;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(MatrixGL2Z(acc))
    }

    /// The same automorphism written in the basis `(α⁻¹, β)`.
    pub fn in_tilde_basis(&self) -> MatrixGL2Z {
        let m = self.0;
        MatrixGL2Z(IntMatrix2::new(m.a11, -m.a12, -m.a21, m.a22))
    }
}

impl fmt::Display for MatrixGL2Z {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `DA = AD`.
pub fn commutes_check(d: &IntMatrix2, a: &MatrixGL2Z) -> bool {
    match (d.mul(&a.0), a.0.mul(d)) {
        (Ok(x), Ok(y)) => x == y,
        _ => false,
    }
}

/// Which fiber basis the exponents of an [`MAElem`] refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// `(α, β)`.
    Standard,
    /// `(α̃, β)` with `α̃ = α⁻¹`.
    Tilde,
}

/// `α^a β^b c^k` in Z² ⋊ Z. `monodromy` is always the standard-basis matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MAElem {
    pub a: i64,
    pub b: i64,
    pub k: i64,
    pub monodromy: MatrixGL2Z,
    pub basis: Basis,
}

impl MAElem {
    pub fn new(a: i64, b: i64, k: i64, monodromy: MatrixGL2Z, basis: Basis) -> Self {
        MAElem { a, b, k, monodromy, basis }
    }

    pub fn identity(monodromy: MatrixGL2Z, basis: Basis) -> Self {
        MAElem::new(0, 0, 0, monodromy, basis)
    }

    /// The matrix by which conjugation by `c` acts on the stored coordinates.
    pub fn effective_monodromy(&self) -> MatrixGL2Z {
        match self.basis {
            Basis::Standard => self.monodromy,
            Basis::Tilde => self.monodromy.in_tilde_basis(),
        }
    }

    fn same_group(&self, o: &MAElem) -> Result<()> {
        if self.monodromy != o.monodromy || self.basis != o.basis {
            return Err(Error::MonodromyMismatch);
        }
        Ok(())
    }

    pub fn mul(&self, o: &MAElem) -> Result<MAElem> {
        self.same_group(o)?;
        let (pa, pb) = self.effective_monodromy().pow(self.k)?.matrix().apply(o.a, o.b)?;
        Ok(MAElem {
            a: error::add(self.a, pa)?,
            b: error::add(self.b, pb)?,
            k: error::add(self.k, o.k)?,
            ..*self
        })
    }

    pub fn inv(&self) -> Result<MAElem> {
        let (a, b) = self.effective_monodromy().pow(-self.k)?.matrix().apply(-self.a, -self.b)?;
        Ok(MAElem { a, b, k: -self.k, ..*self })
    }

    /// Rewrites the coordinates in the other fiber basis.
    pub fn to_basis(&self, basis: Basis) -> MAElem {
        if basis == self.basis {
            *self
        } else {
            MAElem { a: -self.a, basis, ..*self }
        }
    }

    pub fn is_identity(&self) -> bool {
        self.a == 0 && self.b == 0 && self.k == 0
    }
}

impl GroupElement for MAElem {
    fn op(&self, other: &Self) -> Result<Self> {
        self.mul(other)
    }
    fn inverse(&self) -> Result<Self> {
        self.inv()
    }
    fn identity_like(&self) -> Self {
        MAElem::identity(self.monodromy, self.basis)
    }
}

impl fmt::Display for MAElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = if self.basis == Basis::Tilde { "~" } else { "" };
        write!(f, "(a{t}^{} b^{} c^{})", self.a, self.b, self.k)
    }
}

/// `α^e₁ β^e₂ c^e₃` in π₁(T³) = Z³.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct T3Elem(pub i64, pub i64, pub i64);

impl T3Elem {
    pub fn mul(&self, o: &T3Elem) -> Result<T3Elem> {
        Ok(T3Elem(error::add(self.0, o.0)?, error::add(self.1, o.1)?, error::add(self.2, o.2)?))
    }
}

impl GroupElement for T3Elem {
    fn op(&self, other: &Self) -> Result<Self> {
        self.mul(other)
    }
    fn inverse(&self) -> Result<Self> {
        Ok(T3Elem(-self.0, -self.1, -self.2))
    }
    fn identity_like(&self) -> Self {
        T3Elem::default()
    }
}

impl fmt::Display for T3Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a^{} b^{} c^{})", self.0, self.1, self.2)
    }
}

/// `a^p b^q c^r` in π₁(K² × S¹), where `b a b⁻¹ = a⁻¹` and `c` is central.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct KleinS1Elem {
    pub p: i64,
    pub q: i64,
    pub r: i64,
}

impl KleinS1Elem {
    pub fn new(p: i64, q: i64, r: i64) -> Self {
        KleinS1Elem { p, q, r }
    }

    pub fn mul(&self, o: &KleinS1Elem) -> Result<KleinS1Elem> {
        let moved = if self.q.rem_euclid(2) == 1 { -o.p } else { o.p };
        Ok(KleinS1Elem {
            p: error::add(self.p, moved)?,
            q: error::add(self.q, o.q)?,
            r: error::add(self.r, o.r)?,
        })
    }
}

impl GroupElement for KleinS1Elem {
    fn op(&self, other: &Self) -> Result<Self> {
        self.mul(other)
    }
    fn inverse(&self) -> Result<Self> {
        let p = if self.q.rem_euclid(2) == 1 { self.p } else { -self.p };
        Ok(KleinS1Elem { p, q: -self.q, r: -self.r })
    }
    fn identity_like(&self) -> Self {
        KleinS1Elem::default()
    }
}

impl fmt::Display for KleinS1Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a^{} b^{} c^{})", self.p, self.q, self.r)
    }
}

/// An element of any of the fundamental groups used by the classifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupElem {
    Ma(MAElem),
    T3(T3Elem),
    Klein(KleinS1Elem),
}

impl GroupElement for GroupElem {
    fn op(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (GroupElem::Ma(a), GroupElem::Ma(b)) => Ok(GroupElem::Ma(a.mul(b)?)),
            (GroupElem::T3(a), GroupElem::T3(b)) => Ok(GroupElem::T3(a.mul(b)?)),
            (GroupElem::Klein(a), GroupElem::Klein(b)) => Ok(GroupElem::Klein(a.mul(b)?)),
            _ => Err(Error::MonodromyMismatch),
        }
    }
    fn inverse(&self) -> Result<Self> {
        Ok(match self {
            GroupElem::Ma(a) => GroupElem::Ma(a.inv()?),
            GroupElem::T3(a) => GroupElem::T3(a.inverse()?),
            GroupElem::Klein(a) => GroupElem::Klein(a.inverse()?),
        })
    }
    fn identity_like(&self) -> Self {
        match self {
            GroupElem::Ma(a) => GroupElem::Ma(a.identity_like()),
            GroupElem::T3(_) => GroupElem::T3(T3Elem::default()),
            GroupElem::Klein(_) => GroupElem::Klein(KleinS1Elem::default()),
        }
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElem::Ma(a) => a.fmt(f),
            GroupElem::T3(a) => a.fmt(f),
            GroupElem::Klein(a) => a.fmt(f),
        }
    }
}

/// π₁(MA) in the basis `(α̃, β, c)` used by the braid projection.
pub fn ma_tilde(a: i64, b: i64, k: i64) -> MAElem {
    MAElem::new(a, b, k, MatrixGL2Z::A, Basis::Tilde)
}

/// π₁ of the orbit space of MA, generated by `a, b, ĉ` with `ĉbĉ⁻¹ = a⁻²b`.
pub fn mb_orbit(a: i64, b: i64, k: i64) -> MAElem {
    MAElem::new(a, b, k, MatrixGL2Z::B, Basis::Tilde)
}

/// Induced homomorphism of a fiber-preserving self-map of MA:
/// `α ↦ α^r`, `β ↦ α^s β^r`, `c ↦ α^u β^v c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomClassMA {
    pub r: i64,
    pub s: i64,
    pub u: i64,
    pub v: i64,
}

impl HomClassMA {
    pub fn new(r: i64, s: i64, u: i64, v: i64) -> Self {
        HomClassMA { r, s, u, v }
    }

    pub fn fiber_matrix(&self) -> IntMatrix2 {
        IntMatrix2::new(self.r, self.s, 0, self.r)
    }

    /// Images of the generators in the requested basis.
    pub fn generator_images(&self, basis: Basis) -> [MAElem; 3] {
        let e = |a, b, k| MAElem::new(a, b, k, MatrixGL2Z::A, basis);
        match basis {
            Basis::Standard => [e(self.r, 0, 0), e(self.s, self.r, 0), e(self.u, self.v, 1)],
            Basis::Tilde => [e(self.r, 0, 0), e(-self.s, self.r, 0), e(-self.u, self.v, 1)],
        }
    }

    pub fn apply(&self, g: &MAElem) -> Result<MAElem> {
        if g.monodromy != MatrixGL2Z::A {
            return Err(Error::MonodromyMismatch);
        }
        let img = self.generator_images(g.basis);
        eval_word(&g.identity_like(), &img, &[(0, g.a), (1, g.b), (2, g.k)])
    }

    /// Every relator of π₁(MA) maps to the identity, in both bases.
    pub fn is_valid(&self) -> bool {
        if !commutes_check(&self.fiber_matrix(), &MatrixGL2Z::A) {
            return false;
        }
        [(Basis::Standard, ma_standard_relators()), (Basis::Tilde, relators(GroupKind::MaTotal))]
            .into_iter()
            .all(|(basis, rels)| {
                let img = self.generator_images(basis);
                let id = MAElem::identity(MatrixGL2Z::A, basis);
                rels.iter().all(|w| eval_word(&id, &img, w).map(|g| g.is_identity()).unwrap_or(false))
            })
    }
}

impl fmt::Display for HomClassMA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r={},s={},u={},v={}", self.r, self.s, self.u, self.v)
    }
}

/// Induced homomorphism of a fiber-preserving self-map of T³:
/// `α ↦ α^r₁ β^r₂`, `β ↦ α^r₃ β^r₄`, `c ↦ α^u β^v c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HomClassT3 {
    pub r1: i64,
    pub r2: i64,
    pub r3: i64,
    pub r4: i64,
    pub u: i64,
    pub v: i64,
}

impl HomClassT3 {
    pub fn new(r1: i64, r2: i64, r3: i64, r4: i64, u: i64, v: i64) -> Self {
        HomClassT3 { r1, r2, r3, r4, u, v }
    }

    /// From the layout `[[r1, r3, u], [r2, r4, v]]`.
    pub fn from_matrix(m: [[i64; 3]; 2]) -> Self {
        HomClassT3::new(m[0][0], m[1][0], m[0][1], m[1][1], m[0][2], m[1][2])
    }

    pub fn to_matrix(&self) -> [[i64; 3]; 2] {
        [[self.r1, self.r3, self.u], [self.r2, self.r4, self.v]]
    }

    pub fn generator_images(&self) -> [T3Elem; 3] {
        [T3Elem(self.r1, self.r2, 0), T3Elem(self.r3, self.r4, 0), T3Elem(self.u, self.v, 1)]
    }

    pub fn apply(&self, g: &T3Elem) -> Result<T3Elem> {
        eval_word(&T3Elem::default(), &self.generator_images(), &[(0, g.0), (1, g.1), (2, g.2)])
    }
}

impl fmt::Display for HomClassT3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.to_matrix();
        write!(f, "{},{},{};{},{},{}", m[0][0], m[0][1], m[0][2], m[1][0], m[1][1], m[1][2])
    }
}

/// The free involutions handled by the classifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Involution {
    /// The unique free involution of MA over the circle.
    Tau,
    Tau1,
    Tau2,
}

impl Involution {
    pub fn name(self) -> &'static str {
        match self {
            Involution::Tau => "tau",
            Involution::Tau1 => "tau1",
            Involution::Tau2 => "tau2",
        }
    }
}

impl std::str::FromStr for Involution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tau" => Ok(Involution::Tau),
            "tau1" => Ok(Involution::Tau1),
            "tau2" => Ok(Involution::Tau2),
            _ => Err(Error::Parse(format!("unknown involution `{s}`"))),
        }
    }
}

/// The groups that appear as sources of the diagram homomorphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    /// π₁(MA) on `α̃, β, c`.
    MaTotal,
    /// π₁(MB) on `a, b, ĉ`.
    MbOrbit,
    /// π₁(T³) on `α, β, c`.
    T3,
    /// π₁(K² × S¹) on `a, b, c`.
    KleinS1,
}

fn ma_standard_relators() -> Vec<GenWord> {
    vec![
        vec![(0, 1), (1, 1), (0, -1), (1, -1)],
        vec![(2, 1), (0, 1), (2, -1), (0, -1)],
        vec![(2, 1), (1, 1), (2, -1), (1, -1), (0, -1)],
    ]
}

/// Defining relators as words in the three generators.
pub fn relators(kind: GroupKind) -> Vec<GenWord> {
    let comm = |i: usize, j: usize| vec![(i, 1), (j, 1), (i, -1), (j, -1)];
    match kind {
        // c β c⁻¹ β⁻¹ α̃
        GroupKind::MaTotal => vec![comm(0, 1), comm(2, 0), vec![(2, 1), (1, 1), (2, -1), (1, -1), (0, 1)]],
        // ĉ b ĉ⁻¹ b⁻¹ a²
        GroupKind::MbOrbit => vec![comm(0, 1), comm(2, 0), vec![(2, 1), (1, 1), (2, -1), (1, -1), (0, 2)]],
        GroupKind::T3 => vec![comm(0, 1), comm(0, 2), comm(1, 2)],
        GroupKind::KleinS1 => vec![vec![(0, 1), (1, 1), (0, 1), (1, -1)], comm(0, 2), comm(1, 2)],
    }
}

pub fn generators(kind: GroupKind) -> [GroupElem; 3] {
    match kind {
        GroupKind::MaTotal => [ma_tilde(1, 0, 0), ma_tilde(0, 1, 0), ma_tilde(0, 0, 1)].map(GroupElem::Ma),
        GroupKind::MbOrbit => [mb_orbit(1, 0, 0), mb_orbit(0, 1, 0), mb_orbit(0, 0, 1)].map(GroupElem::Ma),
        GroupKind::T3 => [T3Elem(1, 0, 0), T3Elem(0, 1, 0), T3Elem(0, 0, 1)].map(GroupElem::T3),
        GroupKind::KleinS1 => [
            KleinS1Elem::new(1, 0, 0),
            KleinS1Elem::new(0, 1, 0),
            KleinS1Elem::new(0, 0, 1),
        ]
        .map(GroupElem::Klein),
    }
}

pub fn generator_names(kind: GroupKind) -> [&'static str; 3] {
    match kind {
        GroupKind::MaTotal => ["alpha~", "beta", "c"],
        GroupKind::MbOrbit => ["a", "b", "c^"],
        GroupKind::T3 => ["alpha", "beta", "c"],
        GroupKind::KleinS1 => ["a", "b", "c"],
    }
}

/// Source and orbit groups of an involution.
pub fn involution_groups(inv: Involution) -> (GroupKind, GroupKind) {
    match inv {
        Involution::Tau => (GroupKind::MaTotal, GroupKind::MbOrbit),
        Involution::Tau1 => (GroupKind::T3, GroupKind::T3),
        Involution::Tau2 => (GroupKind::T3, GroupKind::KleinS1),
    }
}

/// Images of the source generators under the covering map, as orbit words.
pub fn push_words(inv: Involution) -> [GenWord; 3] {
    match inv {
        Involution::Tau | Involution::Tau1 => [vec![(0, 2)], vec![(1, 1)], vec![(2, 1)]],
        Involution::Tau2 => [vec![(1, 2)], vec![(0, 1)], vec![(2, 1)]],
    }
}

/// Values of θ_τ on the orbit generators.
pub fn theta_on_generators(inv: Involution) -> [bool; 3] {
    match inv {
        Involution::Tau | Involution::Tau1 => [true, false, false],
        Involution::Tau2 => [false, true, false],
    }
}

/// The homomorphism induced by the double cover onto the orbit space.
pub fn covering_push(inv: Involution, g: &GroupElem) -> Result<GroupElem> {
    match (inv, g) {
        (Involution::Tau, GroupElem::Ma(e)) => {
            if e.monodromy != MatrixGL2Z::A {
                return Err(Error::MonodromyMismatch);
            }
            let e = e.to_basis(Basis::Tilde);
            Ok(GroupElem::Ma(mb_orbit(error::mul(2, e.a)?, e.b, e.k)))
        }
        (Involution::Tau1, GroupElem::T3(e)) => Ok(GroupElem::T3(T3Elem(error::mul(2, e.0)?, e.1, e.2))),
        (Involution::Tau2, GroupElem::T3(e)) => Ok(GroupElem::Klein(KleinS1Elem::new(e.1, error::mul(2, e.0)?, e.2))),
        _ => Err(Error::Domain(format!("element is not in the domain of {}", inv.name()))),
    }
}

/// The Z₂-valued homomorphism on the orbit group whose kernel is the image of
/// [`covering_push`].
pub fn theta_tau(inv: Involution, g: &GroupElem) -> Result<bool> {
    match (inv, g) {
        (Involution::Tau, GroupElem::Ma(e)) if e.monodromy == MatrixGL2Z::B => {
            Ok(e.to_basis(Basis::Tilde).a.rem_euclid(2) == 1)
        }
        (Involution::Tau1, GroupElem::T3(e)) => Ok(e.0.rem_euclid(2) == 1),
        (Involution::Tau2, GroupElem::Klein(e)) => Ok(e.q.rem_euclid(2) == 1),
        _ => Err(Error::Domain(format!("element is not in the orbit group of {}", inv.name()))),
    }
}

/// Outcome of a bounded search for a fiber conjugator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SnResult {
    /// `h₂ = ω h₁ ω⁻¹` with `ω = α^a β^b`.
    Equivalent { a: i64, b: i64 },
    /// No conjugator with `|a|, |b| ≤ bound`. Not a proof of inequivalence.
    NoneWithinBound,
    Inequivalent(InequivalentReason),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InequivalentReason {
    /// `h₁(α) ≠ h₂(α)` or `h₁(β) ≠ h₂(β)`; fiber conjugation fixes these
    /// because the fiber group is abelian.
    FiberImagesDiffer,
}

/// Searches `ω = α^a β^b` with `h₂(g) = ω h₁(g) ω⁻¹` on all generators.
///
/// Conjugating by `α^a β^b` sends the class `(r, s, u, v)` to
/// `(r, s, u − b, v)`, so the expected conjugator is `β^(u₁ − u₂)`.
pub fn sn_equivalent(h1: &HomClassMA, h2: &HomClassMA, bound: i64) -> SnResult {
    let g1 = h1.generator_images(Basis::Standard);
    let g2 = h2.generator_images(Basis::Standard);
    if g1[0] != g2[0] || g1[1] != g2[1] {
        return SnResult::Inequivalent(InequivalentReason::FiberImagesDiffer);
    }
    let mut cands: Vec<(i64, i64)> = (-bound..=bound).flat_map(|a| (-bound..=bound).map(move |b| (a, b))).collect();
    cands.sort_by_key(|&(a, b)| (a.abs() + b.abs(), a, b));
    for (a, b) in cands {
        let w = MAElem::new(a, b, 0, MatrixGL2Z::A, Basis::Standard);
        let ok = (0..3).all(|i| g1[i].conj_by(&w).map(|c| c == g2[i]).unwrap_or(false));
        if ok {
            return SnResult::Equivalent { a, b };
        }
    }
    SnResult::NoneWithinBound
}

#[cfg(test)]
mod tests {
    use super::*;

    fn std_e(a: i64, b: i64, k: i64) -> MAElem {
        MAElem::new(a, b, k, MatrixGL2Z::A, Basis::Standard)
    }

    #[test]
    fn conjugation_convention() {
        let c = std_e(0, 0, 1);
        assert_eq!(std_e(1, 0, 0).conj_by(&c).unwrap(), std_e(1, 0, 0));
        assert_eq!(std_e(0, 1, 0).conj_by(&c).unwrap(), std_e(1, 1, 0));
        let g = std_e(3, -2, 5);
        assert_eq!(g.mul(&g.identity_like()).unwrap(), g);
    }

    #[test]
    fn tilde_basis_relations() {
        let c = ma_tilde(0, 0, 1);
        assert_eq!(ma_tilde(0, 1, 0).conj_by(&c).unwrap(), ma_tilde(-1, 1, 0));
        let g = std_e(2, 3, -1);
        assert_eq!(g.to_basis(Basis::Tilde).to_basis(Basis::Standard), g);
        let orbit_c = mb_orbit(0, 0, 1);
        assert_eq!(mb_orbit(0, 1, 0).conj_by(&orbit_c).unwrap(), mb_orbit(-2, 1, 0));
    }

    #[test]
    fn mismatch_is_rejected() {
        assert_eq!(ma_tilde(1, 0, 0).mul(&mb_orbit(1, 0, 0)), Err(Error::MonodromyMismatch));
        assert_eq!(ma_tilde(1, 0, 0).mul(&std_e(1, 0, 0)), Err(Error::MonodromyMismatch));
    }

    #[test]
    fn gl2z_validation() {
        assert_eq!(MatrixGL2Z::new(IntMatrix2::new(2, 0, 0, 1)), Err(Error::NotInvertible(2)));
        let m = MatrixGL2Z::new(IntMatrix2::new(2, 1, 1, 1)).unwrap();
        assert_eq!(m.pow(3).unwrap().matrix().mul(&m.pow(-3).unwrap().matrix()).unwrap(), IntMatrix2::IDENTITY);
    }

    #[test]
    fn commuting_matrices() {
        for r in -3..=3 {
            for s in -3..=3 {
                assert!(commutes_check(&IntMatrix2::new(r, s, 0, r), &MatrixGL2Z::A));
            }
        }
        assert!(!commutes_check(&IntMatrix2::new(1, 0, 1, 1), &MatrixGL2Z::A));
        assert!(commutes_check(&IntMatrix2::IDENTITY, &MatrixGL2Z::A));
    }

    #[test]
    fn hom_apply_examples() {
        let h = HomClassMA::new(2, 1, 0, 0);
        assert_eq!(h.apply(&std_e(0, 1, 0)).unwrap(), std_e(1, 2, 0));
        let id = HomClassMA::new(1, 0, 0, 0);
        let g = std_e(4, -1, 3);
        assert_eq!(id.apply(&g).unwrap(), g);
        assert!(HomClassMA::new(3, -2, 5, 1).is_valid());
    }

    #[test]
    fn tilde_images_match_basis_change() {
        let h = HomClassMA::new(3, 2, -1, 4);
        for g in [std_e(1, 0, 0), std_e(0, 1, 0), std_e(0, 0, 1), std_e(2, -3, 2)] {
            let direct = h.apply(&g).unwrap().to_basis(Basis::Tilde);
            let via = h.apply(&g.to_basis(Basis::Tilde)).unwrap();
            assert_eq!(direct, via);
        }
    }

    #[test]
    fn klein_relation() {
        let a = KleinS1Elem::new(1, 0, 0);
        let b = KleinS1Elem::new(0, 1, 0);
        let id = KleinS1Elem::default();
        assert_eq!(eval_word(&id, &[a, b], &[(0, 1), (1, 1), (0, 1), (1, -1)]).unwrap(), id);
    }

    #[test]
    fn covering_examples() {
        let push = |inv, g| covering_push(inv, &g).unwrap();
        assert_eq!(
            push(Involution::Tau2, GroupElem::T3(T3Elem(1, 0, 0))),
            GroupElem::Klein(KleinS1Elem::new(0, 2, 0))
        );
        assert_eq!(push(Involution::Tau1, GroupElem::T3(T3Elem(0, 1, 0))), GroupElem::T3(T3Elem(0, 1, 0)));
        assert_eq!(push(Involution::Tau, GroupElem::Ma(ma_tilde(1, 0, 0))), GroupElem::Ma(mb_orbit(2, 0, 0)));
        assert!(theta_tau(Involution::Tau, &GroupElem::Ma(mb_orbit(1, 0, 0))).unwrap());
        assert!(theta_tau(Involution::Tau2, &GroupElem::Klein(KleinS1Elem::new(0, 1, 0))).unwrap());
        assert!(covering_push(Involution::Tau, &GroupElem::T3(T3Elem(1, 0, 0))).is_err());
    }

    #[test]
    fn sn_examples() {
        let h = HomClassMA::new(1, 2, 3, 4);
        assert_eq!(sn_equivalent(&h, &h, 2), SnResult::Equivalent { a: 0, b: 0 });
        assert_eq!(
            sn_equivalent(&HomClassMA::new(1, 0, 0, 0), &HomClassMA::new(2, 0, 0, 0), 3),
            SnResult::Inequivalent(InequivalentReason::FiberImagesDiffer)
        );
        let h2 = HomClassMA::new(1, 2, -1, 4);
        match sn_equivalent(&h, &h2, 5) {
            SnResult::Equivalent { a, b } => assert_eq!((a, b), (0, 4)),
            other => panic!("{other:?}"),
        }
        assert_eq!(sn_equivalent(&h, &HomClassMA::new(1, 2, 3, 5), 4), SnResult::NoneWithinBound);
    }
}
