//! Parametrized braid groups of a torus bundle over the circle.
//!
//! Elements are `(u; m, n) σ^s c^k`. The generator `c` acts on the fiber braid
//! group by conjugation; only the unipotent monodromy and the trivial bundle
//! are supported.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{self, Error, Result};
use crate::freegroup::{FreeWord, Generator};
use crate::fundamental_groups::{ma_tilde, GroupElem, MatrixGL2Z, T3Elem};
use crate::group::GroupElement;
use crate::torus_braid::{check, rho, FullBraidT2, PureBraidT2, RelationCheck, RelationReport};

/// Conjugation action of the base generator on B₂(T²).
pub trait FiberAction {
    /// `c^power · a · c^-power`.
    fn conjugate(&self, a: &FullBraidT2, power: i64) -> Result<FullBraidT2>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BundleKind {
    /// Monodromy `[[1,1],[0,1]]`.
    #[serde(rename = "MA")]
    MaUnipotent,
    /// The product bundle T² × S¹.
    #[serde(rename = "T3")]
    T3Trivial,
}

impl BundleKind {
    pub fn from_monodromy(m: &MatrixGL2Z) -> Result<BundleKind> {
        if *m == MatrixGL2Z::A {
            Ok(BundleKind::MaUnipotent)
        } else if *m == MatrixGL2Z::IDENTITY {
            Ok(BundleKind::T3Trivial)
        } else {
            Err(Error::UnsupportedMonodromy(m.to_string()))
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BundleKind::MaUnipotent => "MA",
            BundleKind::T3Trivial => "T3",
        }
    }
}

impl FiberAction for BundleKind {
    fn conjugate(&self, a: &FullBraidT2, power: i64) -> Result<FullBraidT2> {
        c_conjugate(a, *self, power)
    }
}

/// `c^power · a · c^-power`.
///
/// For the unipotent bundle one application is `x ↦ x`, `y ↦ x⁻¹y` on the
/// free part and `(m, n) ↦ (m − n, n)` on the central part; σ is fixed.
pub fn c_conjugate(a: &FullBraidT2, kind: BundleKind, power: i64) -> Result<FullBraidT2> {
    if kind == BundleKind::T3Trivial || power == 0 {
        return Ok(a.clone());
    }
    let y_img = FreeWord::power_of(Generator::X, error::sub(0, power)?).concat(&FreeWord::y())?;
    let p = &a.pure;
    Ok(FullBraidT2 {
        pure: PureBraidT2 {
            free: p.free.substitute(&FreeWord::x(), &y_img)?,
            m: error::sub(p.m, error::mul(power, p.n)?)?,
            n: p.n,
        },
        s: a.s,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParamBraid {
    pub full: FullBraidT2,
    pub k: i64,
    pub kind: BundleKind,
}

impl ParamBraid {
    pub fn new(full: FullBraidT2, k: i64, kind: BundleKind) -> Self {
        ParamBraid { full, k, kind }
    }

    pub fn identity(kind: BundleKind) -> Self {
        ParamBraid::new(FullBraidT2::identity(), 0, kind)
    }

    pub fn from_pure(pure: PureBraidT2, kind: BundleKind) -> Self {
        ParamBraid::new(FullBraidT2::from(pure), 0, kind)
    }

    /// The base generator (c̃ in the pure group, c̄ in the full group).
    pub fn c(kind: BundleKind) -> Self {
        ParamBraid::new(FullBraidT2::identity(), 1, kind)
    }

    pub fn sigma(kind: BundleKind) -> Self {
        ParamBraid::new(FullBraidT2::sigma(), 0, kind)
    }

    pub fn is_identity(&self) -> bool {
        self.k == 0 && self.full.is_identity()
    }

    pub fn is_pure(&self) -> bool {
        !self.full.s
    }

    pub fn pmul(&self, o: &ParamBraid) -> Result<ParamBraid> {
        if self.kind != o.kind {
            return Err(Error::KindMismatch);
        }
        let moved = c_conjugate(&o.full, self.kind, self.k)?;
        Ok(ParamBraid {
            full: self.full.mul(&moved)?,
            k: error::add(self.k, o.k)?,
            kind: self.kind,
        })
    }

    pub fn pinv(&self) -> Result<ParamBraid> {
        let k = error::sub(0, self.k)?;
        Ok(ParamBraid { full: c_conjugate(&self.full.inv()?, self.kind, k)?, k, kind: self.kind })
    }

    /// Degree on the base circle.
    pub fn theta_c(&self) -> i64 {
        self.k
    }

    /// σ-parity.
    pub fn theta_z2(&self) -> bool {
        self.full.s
    }

    /// First-strand projection to π₁ of the total space. For MA the result is
    /// in the basis `(α̃, β, c)`; for T³ it is `(α, β, c)` with `w ↦ α`,
    /// `z ↦ β`.
    pub fn project_param(&self) -> Result<GroupElem> {
        let ab = self.full.project_first_strand()?;
        Ok(match self.kind {
            BundleKind::MaUnipotent => GroupElem::Ma(ma_tilde(ab.ex, ab.ey, self.k)),
            BundleKind::T3Trivial => GroupElem::T3(T3Elem(ab.ex, ab.ey, self.k)),
        })
    }

    pub fn parse(s: &str, kind: BundleKind) -> Result<ParamBraid> {
        let (pure, rest) = crate::torus_braid::parse_pure_prefix(s)?;
        let mut sigma = false;
        let mut k = 0i64;
        let mut tokens = rest.split_whitespace().peekable();
        if tokens.peek() == Some(&"s") {
            sigma = true;
            tokens.next();
        }
        if let Some(tok) = tokens.next() {
            k = match tok.strip_prefix("c") {
                Some("") => 1,
                Some(e) => e
                    .strip_prefix('^')
                    .and_then(|e| e.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("bad c-exponent `{tok}`")))?,
                None => return Err(Error::Parse(format!("unexpected token `{tok}`"))),
            };
        }
        if let Some(tok) = tokens.next() {
            return Err(Error::Parse(format!("trailing token `{tok}`")));
        }
        Ok(ParamBraid::new(FullBraidT2::new(pure, sigma), k, kind))
    }
}

impl GroupElement for ParamBraid {
    fn op(&self, other: &Self) -> Result<Self> {
        self.pmul(other)
    }
    fn inverse(&self) -> Result<Self> {
        self.pinv()
    }
    fn identity_like(&self) -> Self {
        ParamBraid::identity(self.kind)
    }
}

impl fmt::Display for ParamBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.full)?;
        match self.k {
            0 => Ok(()),
            1 => f.write_str(" c"),
            k => write!(f, " c^{k}"),
        }
    }
}

fn lift(b: FullBraidT2, kind: BundleKind) -> ParamBraid {
    ParamBraid::new(b, 0, kind)
}

fn conj(g: &ParamBraid, h: &ParamBraid) -> Result<ParamBraid> {
    g.pmul(h)?.pmul(&g.pinv()?)
}

/// The conjugation relations by `c̃` and `c̄` for the given bundle.
pub fn verify_param_presentation(kind: BundleKind) -> RelationReport {
    let c = ParamBraid::c(kind);
    let p = |s: &str| lift(s.parse().expect("fixture braid"), kind);
    let mut rels: Vec<RelationCheck> = Vec::new();
    let ma = kind == BundleKind::MaUnipotent;
    for k in 1..=2u8 {
        let rk1 = lift(rho(k, 1), kind);
        let rk2 = lift(rho(k, 2), kind);
        rels.push(check(&format!("c r{k}1 c^-1 = r{k}1"), conj(&c, &rk1), Ok(rk1.clone())));
        let rhs = if ma { rk1.pinv().and_then(|i| i.pmul(&rk2)) } else { Ok(rk2.clone()) };
        let label = if ma { format!("c r{k}2 c^-1 = r{k}1^-1 r{k}2") } else { format!("c r{k}2 c^-1 = r{k}2") };
        rels.push(check(&label, conj(&c, &rk2), rhs));
    }
    let sigma = ParamBraid::sigma(kind);
    rels.push(check("c sigma c^-1 = sigma", conj(&c, &sigma), Ok(sigma.clone())));
    let fixtures: [(&str, &str, &str); 5] = if ma {
        [
            ("c x c^-1 = x", "(x ; 0, 0)", "(x ; 0, 0)"),
            ("c y c^-1 = x^-1 y", "(y ; 0, 0)", "(x^-1 y ; 0, 0)"),
            ("c w c^-1 = w", "(1 ; 1, 0)", "(1 ; 1, 0)"),
            ("c z c^-1 = w^-1 z", "(1 ; 0, 1)", "(1 ; -1, 1)"),
            ("c B c^-1 = B", "(B ; 0, 0)", "(B ; 0, 0)"),
        ]
    } else {
        [
            ("c x c^-1 = x", "(x ; 0, 0)", "(x ; 0, 0)"),
            ("c y c^-1 = y", "(y ; 0, 0)", "(y ; 0, 0)"),
            ("c w c^-1 = w", "(1 ; 1, 0)", "(1 ; 1, 0)"),
            ("c z c^-1 = z", "(1 ; 0, 1)", "(1 ; 0, 1)"),
            ("c B c^-1 = B", "(B ; 0, 0)", "(B ; 0, 0)"),
        ]
    };
    for (label, a, b) in fixtures {
        rels.push(check(label, conj(&c, &p(a)), Ok(p(b))));
    }
    for (label, a, b) in [
        ("sigma x sigma^-1 = B x^-1 w", "(x ; 0, 0)", "(B x^-1 ; 1, 0)"),
        ("sigma y sigma^-1 = B y^-1 z", "(y ; 0, 0)", "(B y^-1 ; 0, 1)"),
        ("sigma w sigma^-1 = w", "(1 ; 1, 0)", "(1 ; 1, 0)"),
        ("sigma z sigma^-1 = z", "(1 ; 0, 1)", "(1 ; 0, 1)"),
    ] {
        rels.push(check(label, conj(&sigma, &p(a)), Ok(p(b))));
    }
    let group = match kind {
        BundleKind::MaUnipotent => "B2(MA)",
        BundleKind::T3Trivial => "B2(T3)",
    };
    RelationReport { group: group.into(), relations: rels }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MA: BundleKind = BundleKind::MaUnipotent;

    fn pb(s: &str) -> ParamBraid {
        ParamBraid::parse(s, MA).unwrap()
    }

    #[test]
    fn c_action_examples() {
        let f = |s: &str| s.parse::<FullBraidT2>().unwrap();
        assert_eq!(c_conjugate(&f("(y ; 0, 0)"), MA, 1).unwrap(), f("(x^-1 y ; 0, 0)"));
        assert_eq!(c_conjugate(&f("(1 ; 0, 1)"), MA, 1).unwrap(), f("(1 ; -1, 1)"));
        assert_eq!(c_conjugate(&FullBraidT2::sigma(), MA, 1).unwrap(), FullBraidT2::sigma());
        let a = f("(x^2 y^-1 x ; 3, -2) s");
        let there = c_conjugate(&a, MA, 1).unwrap();
        assert_eq!(c_conjugate(&there, MA, -1).unwrap(), a);
        assert_eq!(c_conjugate(&a, MA, 3).unwrap(), {
            let mut t = a.clone();
            for _ in 0..3 {
                t = c_conjugate(&t, MA, 1).unwrap();
            }
            t
        });
        assert_eq!(c_conjugate(&a, BundleKind::T3Trivial, 5).unwrap(), a);
    }

    #[test]
    fn products_and_inverses() {
        let c = ParamBraid::c(MA);
        let sigma = ParamBraid::sigma(MA);
        assert_eq!(conj(&c, &sigma).unwrap(), sigma);
        assert_eq!(conj(&c, &pb("(x ; 0, 0)")).unwrap(), pb("(x ; 0, 0)"));
        assert_eq!(c.pinv().unwrap(), pb("(1 ; 0, 0) c^-1"));
        let g = sigma.pmul(&c).unwrap();
        assert!(g.pinv().unwrap().pmul(&g).unwrap().is_identity());
        let h = pb("(x y^2 ; 1, -1) s c^-3");
        assert_eq!(h.pinv().unwrap().pinv().unwrap(), h);
        assert_eq!(h.pmul(&h.identity_like()).unwrap(), h);
    }

    #[test]
    fn kind_mismatch() {
        let a = ParamBraid::c(MA);
        let b = ParamBraid::c(BundleKind::T3Trivial);
        assert_eq!(a.pmul(&b), Err(Error::KindMismatch));
    }

    #[test]
    fn homomorphisms_to_base_and_z2() {
        let c3 = pb("(1 ; 0, 0) c^3");
        assert_eq!(c3.theta_c(), 3);
        assert!(pb("(1 ; 0, 0) s c").theta_z2());
        assert!(!ParamBraid::c(MA).theta_z2());
    }

    #[test]
    fn projection() {
        assert_eq!(pb("(1 ; -2, 3)").project_param().unwrap(), GroupElem::Ma(ma_tilde(-2, 3, 0)));
        assert_eq!(ParamBraid::c(MA).project_param().unwrap(), GroupElem::Ma(ma_tilde(0, 0, 1)));
        assert_eq!(pb("(x^9 ; 0, 0)").project_param().unwrap(), GroupElem::Ma(ma_tilde(0, 0, 0)));
        assert!(ParamBraid::sigma(MA).project_param().is_err());
    }

    #[test]
    fn monodromy_guard() {
        assert_eq!(BundleKind::from_monodromy(&MatrixGL2Z::A), Ok(MA));
        assert!(matches!(BundleKind::from_monodromy(&MatrixGL2Z::B), Err(Error::UnsupportedMonodromy(_))));
    }

    #[test]
    fn relations_hold() {
        for kind in [MA, BundleKind::T3Trivial] {
            let report = verify_param_presentation(kind);
            for r in &report.relations {
                assert!(r.passed, "{}: {} vs {}", r.label, r.lhs, r.rhs);
            }
        }
    }

    #[test]
    fn text_round_trip() {
        for s in ["(1 ; 0, 0)", "(x ; 1, 0) s c", "(y^-1 ; 0, 2) c^-4", "(B ; 0, 0) s"] {
            let b = pb(s);
            assert_eq!(pb(&b.to_string()), b);
        }
        assert_eq!(pb("(1 ; 0, 0) c^1"), ParamBraid::c(MA));
        assert!(ParamBraid::parse("(1 ; 0, 0) c^x", MA).is_err());
        assert!(ParamBraid::parse("(1 ; 0, 0) c s", MA).is_err());
    }
}
