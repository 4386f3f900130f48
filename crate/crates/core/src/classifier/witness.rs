use serde::{Deserialize, Serialize};

use crate::error::{self, Error, Result};
use crate::freegroup::{b_word, FreeWord, Generator};
use crate::fundamental_groups::{ma_tilde, GroupElem, HomClassMA};
use crate::param_braid::{BundleKind, ParamBraid};
use crate::torus_braid::{check, PureBraidT2, RelationCheck};

const MA: BundleKind = BundleKind::MaUnipotent;

/// Three pure braids `(P₁, P₂, P₃)` of the torus, viewed in B₂(MA).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WitnessTriple {
    pub p1: ParamBraid,
    pub p2: ParamBraid,
    pub p3: ParamBraid,
}

/// Text form of a triple, one braid per field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessText {
    pub p1: String,
    pub p2: String,
    pub p3: String,
}

impl WitnessTriple {
    pub fn from_pure(p1: PureBraidT2, p2: PureBraidT2, p3: PureBraidT2) -> Self {
        WitnessTriple {
            p1: ParamBraid::from_pure(p1, MA),
            p2: ParamBraid::from_pure(p2, MA),
            p3: ParamBraid::from_pure(p3, MA),
        }
    }

    pub fn to_text(&self) -> WitnessText {
        WitnessText { p1: self.p1.to_string(), p2: self.p2.to_string(), p3: self.p3.to_string() }
    }

    pub fn from_text(t: &WitnessText) -> Result<Self> {
        Ok(WitnessTriple {
            p1: ParamBraid::parse(&t.p1, MA)?,
            p2: ParamBraid::parse(&t.p2, MA)?,
            p3: ParamBraid::parse(&t.p3, MA)?,
        })
    }

    /// All three are pure, have no `c` factor and live in the MA group.
    pub fn is_well_formed(&self) -> bool {
        [&self.p1, &self.p2, &self.p3].iter().all(|p| p.is_pure() && p.k == 0 && p.kind == MA)
    }
}

/// The explicit solution for odd `r`, with `r = 2k − 1`:
/// `P₁ = (x^r x^-k (xB⁻¹)^k; 0, 0)`, `P₂ = (1; −s, r)`, `P₃ = (1; −u, v)`.
pub fn witness_ma(cls: &HomClassMA) -> Result<WitnessTriple> {
    if cls.r.rem_euclid(2) == 0 {
        return Err(Error::Domain(format!("no witness for even r = {}", cls.r)));
    }
    let k = error::add(cls.r, 1)? / 2;
    let xbinv = FreeWord::x().concat(&b_word().invert())?;
    let free = FreeWord::power_of(Generator::X, error::sub(cls.r, k)?).concat(&xbinv.pow(k)?)?;
    Ok(WitnessTriple::from_pure(
        PureBraidT2::from_free(free),
        PureBraidT2::new(FreeWord::identity(), error::sub(0, cls.s)?, cls.r),
        PureBraidT2::new(FreeWord::identity(), error::sub(0, cls.u)?, cls.v),
    ))
}

/// `Z₁² = P₁σP₁σ⁻¹B`, the image of `α̃` under the lifted homomorphism.
pub fn z1_squared(p1: &ParamBraid) -> Result<ParamBraid> {
    let sigma = ParamBraid::sigma(MA);
    let z1 = p1.pmul(&sigma)?;
    z1.pmul(&z1)
}

fn prod(items: &[&ParamBraid]) -> Result<ParamBraid> {
    let mut acc = ParamBraid::identity(MA);
    for p in items {
        acc = acc.pmul(p)?;
    }
    Ok(acc)
}

/// Left and right sides of the three equations, in order.
pub fn system_sides(w: &WitnessTriple) -> Result<[(ParamBraid, ParamBraid); 3]> {
    let sigma = ParamBraid::sigma(MA);
    let sinv = sigma.pinv()?;
    let c = ParamBraid::c(MA);
    let cinv = c.pinv()?;
    let (p1, p2, p3) = (&w.p1, &w.p2, &w.p3);
    let eq1 = (prod(&[p1, &sigma, p2, &sinv])?, prod(&[p2, p1])?);
    let eq2 = (prod(&[p3, &c, p1, &cinv])?, prod(&[p1, &sigma, p3, &sinv])?);
    let eq3 = (prod(&[p3, &c, p2, &cinv])?, prod(&[&z1_squared(p1)?.pinv()?, p2, p3])?);
    Ok([eq1, eq2, eq3])
}

fn project(p: Result<ParamBraid>) -> Result<GroupElem> {
    p?.project_param()
}

/// Checks the three braid equations and the three projection constraints.
///
/// The equations are
/// `P₁σP₂σ⁻¹ = P₂P₁`, `P₃c̄P₁c̄⁻¹ = P₁σP₃σ⁻¹` and
/// `P₃c̄P₂c̄⁻¹ = (P₁σP₁σ⁻¹B)⁻¹P₂P₃`; the projections require
/// `P₁σP₁σ⁻¹ ↦ α̃^r`, `P₂ ↦ α̃^-s β^r` and `P₃ ↦ α̃^-u β^v`.
pub fn verify_system(w: &WitnessTriple, cls: &HomClassMA) -> Vec<RelationCheck> {
    let mut out = vec![RelationCheck {
        label: "shape".into(),
        passed: w.is_well_formed(),
        lhs: format!("{} | {} | {}", w.p1, w.p2, w.p3),
        rhs: "pure, no c factor".into(),
    }];
    if !w.is_well_formed() {
        return out;
    }
    let labels = ["system.i", "system.ii", "system.iii"];
    match system_sides(w) {
        Ok(sides) => {
            for (label, (l, r)) in labels.iter().zip(sides) {
                out.push(check(label, Ok(l), Ok(r)));
            }
        }
        Err(e) => {
            for label in labels {
                out.push(check::<ParamBraid>(label, Err(e.clone()), Err(e.clone())));
            }
        }
    }
    let sigma = ParamBraid::sigma(MA);
    let p1sp1s = prod(&[&w.p1, &sigma, &w.p1, &sigma.pinv().expect("σ is invertible")]);
    let g = |a, b| Ok(GroupElem::Ma(ma_tilde(a, b, 0)));
    out.push(check("projection.i", project(p1sp1s), g(cls.r, 0)));
    out.push(check("projection.ii", w.p2.project_param(), g(-cls.s, cls.r)));
    out.push(check("projection.iii", w.p3.project_param(), g(-cls.u, cls.v)));
    out
}

pub fn system_holds(w: &WitnessTriple, cls: &HomClassMA) -> bool {
    verify_system(w, cls).iter().all(|c| c.passed)
}
