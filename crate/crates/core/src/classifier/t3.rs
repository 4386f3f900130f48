use crate::error::{self, Error, Result};
use crate::freegroup::{FreeWord, Generator};
use crate::fundamental_groups::{HomClassT3, Involution};
use crate::param_braid::{BundleKind, ParamBraid};
use crate::torus_braid::{FullBraidT2, PureBraidT2};

use super::diagram::DiagramImages;

const T3: BundleKind = BundleKind::T3Trivial;

/// `(r₁, r₂, r₃, r₄)`: the induced map on the fiber torus.
pub fn restrict_t3_to_t2(cls: &HomClassT3) -> (i64, i64, i64, i64) {
    (cls.r1, cls.r2, cls.r3, cls.r4)
}

/// The Borsuk–Ulam rule for the trivial bundle. Under `tau1` no class has
/// the property. Under `tau2` a class has it iff `f(β) = α^r₃ β^r₄` is
/// nontrivial and `r₁`, `r₂` are both even.
///
/// The version with the columns exchanged (`(r₁, r₂) ≠ (0, 0)` and `r₃`, `r₄`
/// even) is false: `f(θ₁, θ₂, θ₃) = (θ₁, 0, θ₃)` has `f∘τ₂ ≠ f` everywhere,
/// yet lies in a class it would call BUP. Every class outside the BUP set here
/// gets an explicit, checked lifting diagram from [`tau2_t2_data`].
pub fn t3_has_bup(cls: &HomClassT3, inv: Involution) -> Result<bool> {
    let (r1, r2, r3, r4) = restrict_t3_to_t2(cls);
    match inv {
        Involution::Tau1 => Ok(false),
        Involution::Tau2 => Ok((r3, r4) != (0, 0) && r1.rem_euclid(2) == 0 && r2.rem_euclid(2) == 0),
        Involution::Tau => Err(Error::Domain("tau is the involution of MA, not of T3".into())),
    }
}

/// Extends fiber-level generator images to T³ with
/// `φ(c) = ψ(c) = λ^u γ^v c`, where `λ = w` and `γ = z`.
pub fn extend_t2_diagram_to_t3(phibar: &[FullBraidT2; 2], psibar: &[FullBraidT2; 2], u: i64, v: i64) -> DiagramImages {
    let c_img = ParamBraid::new(FullBraidT2::from(PureBraidT2::new(FreeWord::identity(), u, v)), 1, T3);
    let lift = |b: &FullBraidT2| ParamBraid::new(b.clone(), 0, T3);
    DiagramImages {
        phi: [lift(&phibar[0]), lift(&phibar[1]), c_img.clone()],
        psi: [lift(&psibar[0]), lift(&psibar[1]), c_img],
    }
}

/// Fiber-level data for `tau1` realising any `(r₁, r₂, r₃, r₄)`:
/// `ψ̄(α) = (x^r₁ y^r₂; 0, 0)σ`, `ψ̄(β) = (1; r₃, r₄)`, and `φ̄ = ψ̄ ∘ push`.
///
/// `ψ̄(β)` is central and σ-fixed, so the orbit relator holds; squaring
/// `ψ̄(α)` adds the exponent sums of its free part to the central
/// coordinates, which gives the projection `α^r₁ β^r₂`.
pub fn tau1_t2_data(r1: i64, r2: i64, r3: i64, r4: i64) -> Result<([FullBraidT2; 2], [FullBraidT2; 2])> {
    let a = FullBraidT2::new(PureBraidT2::from_free(FreeWord::xy_power(r1, r2)), true);
    let b = FullBraidT2::from(PureBraidT2::new(FreeWord::identity(), r3, r4));
    let phibar = [a.mul(&a)?, b.clone()];
    Ok((phibar, [a, b]))
}

/// Fiber-level data for `tau2`, for every class without the property.
///
/// Pick `u` with `u φ(u) B = 1` whose exponent sums have the parities of
/// `(r₁, r₂)`; then `ψ̄(b) = (u; m, n)σ` squares to a central braid and
/// `ψ̄(a) = Q (ψ̄(b) Q ψ̄(b)⁻¹)⁻¹` with `Q = x^-r₃ y^-r₄` satisfies the Klein
/// relation and projects to `α^r₃ β^r₄`. When `r₁, r₂` are even and
/// `r₃ = r₄ = 0` take `u = 1` and `ψ̄(a) = 1`. Returns `None` for BUP classes.
pub fn tau2_t2_data(r1: i64, r2: i64, r3: i64, r4: i64) -> Result<Option<([FullBraidT2; 2], [FullBraidT2; 2])>> {
    let x_inv = FreeWord::power_of(Generator::X, -1);
    let y_inv = FreeWord::power_of(Generator::Y, -1);
    let u = match (r1.rem_euclid(2), r2.rem_euclid(2)) {
        (0, 0) if (r3, r4) != (0, 0) => return Ok(None),
        (0, 0) => FreeWord::identity(),
        (1, 0) => x_inv,
        (0, 1) => y_inv,
        _ => FreeWord::xy_power(-2, 1).concat(&FreeWord::power_of(Generator::X, -1))?,
    };
    let base = FullBraidT2::new(PureBraidT2::from_free(u.clone()), true);
    let p = base.mul(&base)?.project_first_strand()?;
    let (dm, dn) = (error::sub(r1, p.ex)?, error::sub(r2, p.ey)?);
    if dm.rem_euclid(2) != 0 || dn.rem_euclid(2) != 0 {
        return Err(Error::Domain(format!("no square root with projection ({r1}, {r2}) over {u}")));
    }
    let b = FullBraidT2::new(PureBraidT2::new(u, dm / 2, dn / 2), true);
    let q = FullBraidT2::from(PureBraidT2::from_free(FreeWord::xy_power(error::sub(0, r3)?, error::sub(0, r4)?)));
    let a = q.mul(&b.mul(&q)?.mul(&b.inv()?)?.inv()?)?;
    Ok(Some(([b.mul(&b)?, a.clone()], [a, b])))
}

/// Fiber data for a class without the property, extended to T³.
pub fn t3_diagram(cls: &HomClassT3, inv: Involution) -> Result<Option<DiagramImages>> {
    let (r1, r2, r3, r4) = restrict_t3_to_t2(cls);
    let data = match inv {
        Involution::Tau1 => Some(tau1_t2_data(r1, r2, r3, r4)?),
        Involution::Tau2 => tau2_t2_data(r1, r2, r3, r4)?,
        Involution::Tau => return Err(Error::Domain("tau is the involution of MA, not of T3".into())),
    };
    Ok(data.map(|(phibar, psibar)| extend_t2_diagram_to_t3(&phibar, &psibar, cls.u, cls.v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::diagram::{check_diagram, DiagramSetting};

    #[test]
    fn rule_examples() {
        let any = HomClassT3::new(1, 2, 3, 4, 5, 6);
        assert!(!t3_has_bup(&any, Involution::Tau1).unwrap());
        assert!(t3_has_bup(&HomClassT3::new(0, 0, 1, 0, 0, 0), Involution::Tau2).unwrap());
        assert!(t3_has_bup(&HomClassT3::new(2, -4, 0, 3, -3, 7), Involution::Tau2).unwrap());
        assert!(!t3_has_bup(&HomClassT3::new(1, 0, 0, 0, 0, 0), Involution::Tau2).unwrap());
        assert!(!t3_has_bup(&HomClassT3::new(2, 2, 0, 0, 0, 0), Involution::Tau2).unwrap());
        assert!(!t3_has_bup(&HomClassT3::new(1, 0, 2, 0, 0, 0), Involution::Tau2).unwrap());
        assert!(t3_has_bup(&any, Involution::Tau).is_err());
    }

    #[test]
    fn restriction() {
        assert_eq!(restrict_t3_to_t2(&HomClassT3::new(1, 0, 2, 0, 5, 6)), (1, 0, 2, 0));
        assert_eq!(restrict_t3_to_t2(&HomClassT3::new(1, 0, 0, 1, 0, 0)), (1, 0, 0, 1));
        assert_eq!(restrict_t3_to_t2(&HomClassT3::new(0, 0, 0, 0, 0, 0)), (0, 0, 0, 0));
    }

    #[test]
    fn extension_of_trivial_data() {
        let (phibar, psibar) = tau1_t2_data(0, 0, 0, 0).unwrap();
        let d = extend_t2_diagram_to_t3(&phibar, &psibar, 0, 0);
        assert_eq!(d.phi[2], ParamBraid::c(T3));
        let rep = check_diagram(&d, &DiagramSetting::T3(HomClassT3::new(0, 0, 0, 0, 0, 0), Involution::Tau1)).unwrap();
        assert!(rep.passed());
    }

    #[test]
    fn lambda_projects_to_alpha() {
        let lambda = ParamBraid::from_pure(PureBraidT2::w(), T3);
        assert_eq!(
            lambda.project_param().unwrap(),
            crate::fundamental_groups::GroupElem::T3(crate::fundamental_groups::T3Elem(1, 0, 0))
        );
    }

    #[test]
    fn tau1_data_realises_every_class() {
        for cls in [HomClassT3::new(1, 0, 0, 1, 2, -1), HomClassT3::new(-2, 3, 1, -1, 0, 4)] {
            let (phibar, psibar) = tau1_t2_data(cls.r1, cls.r2, cls.r3, cls.r4).unwrap();
            let d = extend_t2_diagram_to_t3(&phibar, &psibar, cls.u, cls.v);
            let rep = check_diagram(&d, &DiagramSetting::T3(cls, Involution::Tau1)).unwrap();
            for c in &rep.checks {
                assert!(c.passed, "{}: {} vs {}", c.label, c.lhs, c.rhs);
            }
        }
    }

    #[test]
    fn tau2_data_exists_exactly_off_the_bup_set() {
        for r1 in -2..=2 {
            for r2 in -2..=2 {
                for r3 in -2..=2 {
                    for r4 in -2..=2 {
                        let cls = HomClassT3::new(r1, r2, r3, r4, r1 - r4, r2 + r3);
                        let d = t3_diagram(&cls, Involution::Tau2).unwrap();
                        assert_eq!(d.is_none(), t3_has_bup(&cls, Involution::Tau2).unwrap(), "{cls}");
                        if let Some(d) = d {
                            let rep = check_diagram(&d, &DiagramSetting::T3(cls, Involution::Tau2)).unwrap();
                            assert!(rep.passed(), "{cls}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn column_exchanged_rule_has_a_counterexample() {
        // f(θ₁, θ₂) = (θ₁, 0): f(τ₂ x) = (θ₁ + π, 0) never equals f(x)
        let cls = HomClassT3::new(1, 0, 0, 0, 0, 0);
        let d = t3_diagram(&cls, Involution::Tau2).unwrap().unwrap();
        assert!(check_diagram(&d, &DiagramSetting::T3(cls, Involution::Tau2)).unwrap().passed());
    }
}
