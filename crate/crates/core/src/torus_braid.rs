//! Normal forms for the pure and full 2-string braid groups of the torus.
//!
//! A pure braid is `(u; m, n)` meaning `u · w^m · z^n` with `u ∈ F(x,y)` and
//! `w`, `z` central. A full braid appends a σ-bit, with `σ² = B`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{self, Error, Result};
use crate::freegroup::{b_word, AbelianImage, FreeWord, Generator};
use crate::group::GroupElement;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PureBraidT2 {
    pub free: FreeWord,
    pub m: i64,
    pub n: i64,
}

impl PureBraidT2 {
    pub fn new(free: FreeWord, m: i64, n: i64) -> Self {
        PureBraidT2 { free, m, n }
    }

    pub fn identity() -> Self {
        PureBraidT2::default()
    }

    pub fn from_free(free: FreeWord) -> Self {
        PureBraidT2::new(free, 0, 0)
    }

    pub fn x() -> Self {
        PureBraidT2::from_free(FreeWord::x())
    }

    pub fn y() -> Self {
        PureBraidT2::from_free(FreeWord::y())
    }

    pub fn w() -> Self {
        PureBraidT2::new(FreeWord::identity(), 1, 0)
    }

    pub fn z() -> Self {
        PureBraidT2::new(FreeWord::identity(), 0, 1)
    }

    pub fn b() -> Self {
        PureBraidT2::from_free(b_word())
    }

    pub fn is_identity(&self) -> bool {
        self.free.is_identity() && self.m == 0 && self.n == 0
    }

    pub fn mul(&self, other: &PureBraidT2) -> Result<PureBraidT2> {
        Ok(PureBraidT2 {
            free: self.free.concat(&other.free)?,
            m: error::add(self.m, other.m)?,
            n: error::add(self.n, other.n)?,
        })
    }

    pub fn inv(&self) -> PureBraidT2 {
        PureBraidT2 { free: self.free.invert(), m: -self.m, n: -self.n }
    }

    /// `σ · self · σ⁻¹`.
    pub fn sigma_conjugate(&self) -> Result<PureBraidT2> {
        let bx = b_word().concat(&FreeWord::power_of(Generator::X, -1))?;
        let by = b_word().concat(&FreeWord::power_of(Generator::Y, -1))?;
        let g = self.free.gamma();
        Ok(PureBraidT2 {
            free: self.free.substitute(&bx, &by)?,
            m: error::add(self.m, g.ex)?,
            n: error::add(self.n, g.ey)?,
        })
    }

    /// The first-strand projection: `(u; m, n) ↦ (m, n)`.
    pub fn project_first_strand(&self) -> AbelianImage {
        AbelianImage::new(self.m, self.n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FullBraidT2 {
    pub pure: PureBraidT2,
    pub s: bool,
}

impl FullBraidT2 {
    pub fn new(pure: PureBraidT2, s: bool) -> Self {
        FullBraidT2 { pure, s }
    }

    pub fn identity() -> Self {
        FullBraidT2::default()
    }

    pub fn sigma() -> Self {
        FullBraidT2::new(PureBraidT2::identity(), true)
    }

    pub fn is_identity(&self) -> bool {
        !self.s && self.pure.is_identity()
    }

    pub fn mul(&self, other: &FullBraidT2) -> Result<FullBraidT2> {
        let moved = if self.s { other.pure.sigma_conjugate()? } else { other.pure.clone() };
        let mut pure = self.pure.mul(&moved)?;
        if self.s && other.s {
            pure = pure.mul(&PureBraidT2::b())?;
        }
        Ok(FullBraidT2 { pure, s: self.s ^ other.s })
    }

    pub fn inv(&self) -> Result<FullBraidT2> {
        if !self.s {
            return Ok(FullBraidT2::new(self.pure.inv(), false));
        }
        // (pσ)⁻¹ = σ⁻¹p⁻¹ = B⁻¹ · σp⁻¹σ⁻¹ · σ
        let conj = self.pure.inv().sigma_conjugate()?;
        Ok(FullBraidT2::new(PureBraidT2::b().inv().mul(&conj)?, true))
    }

    pub fn theta_sigma(&self) -> bool {
        self.s
    }

    pub fn project_first_strand(&self) -> Result<AbelianImage> {
        if self.s {
            return Err(Error::Domain("first-strand projection is undefined on braids with σ".into()));
        }
        Ok(self.pure.project_first_strand())
    }
}

impl From<PureBraidT2> for FullBraidT2 {
    fn from(pure: PureBraidT2) -> Self {
        FullBraidT2::new(pure, false)
    }
}

impl GroupElement for FullBraidT2 {
    fn op(&self, other: &Self) -> Result<Self> {
        self.mul(other)
    }

    fn inverse(&self) -> Result<Self> {
        self.inv()
    }

    fn identity_like(&self) -> Self {
        FullBraidT2::identity()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RhoIndex {
    pub strand: u8,
    pub direction: u8,
}

impl RhoIndex {
    pub fn new(strand: u8, direction: u8) -> Result<Self> {
        if !(1..=2).contains(&strand) || !(1..=2).contains(&direction) {
            return Err(Error::Domain(format!("rho index ({strand},{direction}) out of range")));
        }
        Ok(RhoIndex { strand, direction })
    }
}

/// Image of `ρ_{i,j}` in the normal form.
///
/// The second-strand generators are `x` and `y` by definition. The first-strand
/// ones are solved from `w = ρ₁₁B⁻¹ρ₂₁` and `z = ρ₁₂B⁻¹ρ₂₂`, i.e.
/// `ρ₁ⱼ = w_j · ρ₂ⱼ⁻¹ · B`.
pub fn embed_rho(idx: RhoIndex) -> FullBraidT2 {
    let (second, central) = match idx.direction {
        1 => (PureBraidT2::x(), PureBraidT2::w()),
        _ => (PureBraidT2::y(), PureBraidT2::z()),
    };
    let pure = if idx.strand == 2 {
        second
    } else {
        central
            .mul(&second.inv())
            .and_then(|p| p.mul(&PureBraidT2::b()))
            .expect("small exponents")
    };
    FullBraidT2::from(pure)
}

pub fn rho(strand: u8, direction: u8) -> FullBraidT2 {
    embed_rho(RhoIndex::new(strand, direction).expect("valid rho index"))
}

/// One checked relation of a presentation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationCheck {
    pub label: String,
    pub passed: bool,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub group: String,
    pub relations: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.relations.iter().all(|r| r.passed)
    }
}

pub fn check<T: fmt::Display + PartialEq>(label: &str, lhs: Result<T>, rhs: Result<T>) -> RelationCheck {
    match (lhs, rhs) {
        (Ok(l), Ok(r)) => RelationCheck {
            label: label.to_string(),
            passed: l == r,
            lhs: l.to_string(),
            rhs: r.to_string(),
        },
        (l, r) => RelationCheck {
            label: label.to_string(),
            passed: false,
            lhs: l.map(|v| v.to_string()).unwrap_or_else(|e| e.to_string()),
            rhs: r.map(|v| v.to_string()).unwrap_or_else(|e| e.to_string()),
        },
    }
}

fn comm(a: &FullBraidT2, b: &FullBraidT2) -> Result<FullBraidT2> {
    a.mul(b)?.mul(&a.inv()?)?.mul(&b.inv()?)
}

fn conj(g: &FullBraidT2, h: &FullBraidT2) -> Result<FullBraidT2> {
    g.mul(h)?.mul(&g.inv()?)
}

fn prod(items: &[&FullBraidT2]) -> Result<FullBraidT2> {
    let mut acc = FullBraidT2::identity();
    for it in items {
        acc = acc.mul(it)?;
    }
    Ok(acc)
}

fn pure_relations() -> Vec<RelationCheck> {
    let r11 = rho(1, 1);
    let r12 = rho(1, 2);
    let r21 = rho(2, 1);
    let r22 = rho(2, 2);
    let b = FullBraidT2::from(PureBraidT2::b());
    let binv = b.inv().unwrap();
    let inv = |g: &FullBraidT2| g.inv().unwrap();

    let mut out = vec![
        check("[r11, r12^-1] = B", comm(&r11, &inv(&r12)), Ok(b.clone())),
        check("[r21, r22^-1] = B", comm(&r21, &inv(&r22)), Ok(b.clone())),
    ];
    for (k, r1k, r2k) in [(1, &r11, &r21), (2, &r12, &r22)] {
        out.push(check(
            &format!("r2{k} r1{k} r2{k}^-1 = B r1{k} B^-1"),
            conj(r2k, r1k),
            conj(&b, r1k),
        ));
        out.push(check(
            &format!("r2{k}^-1 r1{k} r2{k} = r1{k} [B^-1, r1{k}]"),
            conj(&inv(r2k), r1k),
            r1k.mul(&comm(&binv, r1k).unwrap()),
        ));
    }
    out.push(check(
        "r21 r12 r21^-1 = B r12 [r11^-1, B]",
        conj(&r21, &r12),
        prod(&[&b, &r12, &comm(&inv(&r11), &b).unwrap()]),
    ));
    out.push(check(
        "r21^-1 r12 r21 = B^-1 [B, r11] r12 [B^-1, r11]",
        conj(&inv(&r21), &r12),
        prod(&[&binv, &comm(&b, &r11).unwrap(), &r12, &comm(&binv, &r11).unwrap()]),
    ));
    out.push(check("r22 r11 r22^-1 = r11 B^-1", conj(&r22, &r11), r11.mul(&binv)));
    out.push(check(
        "r22^-1 r11 r22 = r11 B [B^-1, r12]",
        conj(&inv(&r22), &r11),
        prod(&[&r11, &b, &comm(&binv, &r12).unwrap()]),
    ));
    out
}

/// Evaluates every relation of the pure torus braid presentation.
pub fn verify_pure_presentation() -> RelationReport {
    RelationReport { group: "P2(T2)".into(), relations: pure_relations() }
}

/// Evaluates every relation of the full torus braid presentation.
pub fn verify_full_presentation() -> RelationReport {
    let mut relations = pure_relations();
    let sigma = FullBraidT2::sigma();
    let b = FullBraidT2::from(PureBraidT2::b());
    relations.push(check("sigma^2 = B", sigma.mul(&sigma), Ok(b.clone())));
    for k in 1..=2u8 {
        let r1k = rho(1, k);
        let r2k = rho(2, k);
        relations.push(check(&format!("sigma r1{k} sigma^-1 = r2{k}"), conj(&sigma, &r1k), Ok(r2k.clone())));
        relations.push(check(
            &format!("sigma r2{k} sigma^-1 = B r1{k} B^-1"),
            conj(&sigma, &r2k),
            conj(&b, &r1k),
        ));
    }
    RelationReport { group: "B2(T2)".into(), relations }
}

/// Both reports, pure first.
pub fn verify_presentation() -> Vec<RelationReport> {
    vec![verify_pure_presentation(), verify_full_presentation()]
}

impl fmt::Display for PureBraidT2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} ; {}, {})", self.free, self.m, self.n)
    }
}

impl fmt::Display for FullBraidT2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pure)?;
        if self.s {
            f.write_str(" s")?;
        }
        Ok(())
    }
}

/// Parses `(<word> ; m, n)` and returns the remaining suffix tokens.
pub(crate) fn parse_pure_prefix(s: &str) -> Result<(PureBraidT2, &str)> {
    let t = s.trim_start();
    let rest = t
        .strip_prefix('(')
        .ok_or_else(|| Error::Parse(format!("braid must start with `(`: `{s}`")))?;
    let close = rest
        .find(')')
        .ok_or_else(|| Error::Parse(format!("missing `)` in braid `{s}`")))?;
    let inner = &rest[..close];
    let (word, coords) = inner
        .split_once(';')
        .ok_or_else(|| Error::Parse(format!("missing `;` in braid `{s}`")))?;
    let (m, n) = coords
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("missing `,` in braid `{s}`")))?;
    let parse_int = |v: &str| {
        v.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad integer `{}` in braid", v.trim())))
    };
    let pure = PureBraidT2::new(word.parse()?, parse_int(m)?, parse_int(n)?);
    Ok((pure, &rest[close + 1..]))
}

impl FromStr for PureBraidT2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (p, rest) = parse_pure_prefix(s)?;
        if !rest.trim().is_empty() {
            return Err(Error::Parse(format!("trailing input `{}`", rest.trim())));
        }
        Ok(p)
    }
}

impl FromStr for FullBraidT2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (p, rest) = parse_pure_prefix(s)?;
        match rest.trim() {
            "" => Ok(FullBraidT2::new(p, false)),
            "s" => Ok(FullBraidT2::new(p, true)),
            other => Err(Error::Parse(format!("unexpected suffix `{other}`"))),
        }
    }
}

macro_rules! serde_via_text {
    ($t:ty) => {
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
                serializer.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
                let s = String::deserialize(deserializer)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

serde_via_text!(PureBraidT2);
serde_via_text!(FullBraidT2);

#[cfg(test)]
mod tests {
    use super::*;

    fn fb(s: &str) -> FullBraidT2 {
        s.parse().unwrap()
    }

    #[test]
    fn sigma_conjugates_x() {
        let s = FullBraidT2::sigma();
        let got = conj(&s, &fb("(x ; 0, 0)")).unwrap();
        assert_eq!(got, fb("(B x^-1 ; 1, 0)"));
    }

    #[test]
    fn sigma_squared_is_b() {
        let s = FullBraidT2::sigma();
        assert_eq!(s.mul(&s).unwrap(), fb("(B ; 0, 0)"));
    }

    #[test]
    fn inverses() {
        assert_eq!(fb("(x ; 1, 0)").inv().unwrap(), fb("(x^-1 ; -1, 0)"));
        let s = FullBraidT2::sigma();
        assert!(s.inv().unwrap().mul(&s).unwrap().is_identity());
        let a = fb("(x^2 y ; 3, -1) s");
        assert!(a.mul(&a.inv().unwrap()).unwrap().is_identity());
        assert!(a.inv().unwrap().mul(&a).unwrap().is_identity());
    }

    #[test]
    fn rho_embedding() {
        assert_eq!(rho(2, 1), fb("(x ; 0, 0)"));
        assert_eq!(rho(2, 2), fb("(y ; 0, 0)"));
        assert_eq!(rho(1, 1), fb("(x^-1 B ; 1, 0)"));
        assert_eq!(rho(1, 2), fb("(y^-1 B ; 0, 1)"));
        let b = FullBraidT2::from(PureBraidT2::b());
        let w = prod(&[&rho(1, 1), &b.inv().unwrap(), &rho(2, 1)]).unwrap();
        assert_eq!(w, FullBraidT2::from(PureBraidT2::w()));
        assert!(RhoIndex::new(3, 1).is_err());
    }

    #[test]
    fn presentations_hold() {
        for report in verify_presentation() {
            for r in &report.relations {
                assert!(r.passed, "{}: {} vs {}", r.label, r.lhs, r.rhs);
            }
        }
        assert_eq!(verify_full_presentation().relations.len(), 15);
    }

    #[test]
    fn projection() {
        assert_eq!(fb("(x^5 y^-2 ; 0, 0)").project_first_strand().unwrap(), AbelianImage::ZERO);
        assert_eq!(rho(1, 1).project_first_strand().unwrap(), AbelianImage::new(1, 0));
        assert!(FullBraidT2::sigma().project_first_strand().is_err());
    }

    #[test]
    fn text_round_trip() {
        for s in ["(1 ; 0, 0)", "(x B^-1 ; 0, 0) s", "(x^-2 y ; -3, 4)"] {
            let b = fb(s);
            assert_eq!(fb(&b.to_string()), b);
        }
        assert_eq!(fb("(x y^-1 x^-1 y ; 0, 0)").to_string(), "(x y^-1 x^-1 y ; 0, 0)");
        assert!("(x ; 0)".parse::<FullBraidT2>().is_err());
        assert!("(x ; 0, 0) t".parse::<FullBraidT2>().is_err());
    }
}
