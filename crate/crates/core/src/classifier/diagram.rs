use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fundamental_groups::{
    generator_names, involution_groups, push_words, relators, theta_on_generators, Basis, GroupElem,
    HomClassMA, HomClassT3, Involution,
};
use crate::group::eval_word;
use crate::param_braid::{BundleKind, ParamBraid};
use crate::torus_braid::{check, RelationCheck};

use super::witness::{z1_squared, WitnessTriple};

/// Generator images of the two lifted homomorphisms: `phi` on the total-space
/// group, `psi` on the orbit-space group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramImages {
    pub phi: [ParamBraid; 3],
    pub psi: [ParamBraid; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramText {
    pub phi: [String; 3],
    pub psi: [String; 3],
}

impl DiagramImages {
    pub fn to_text(&self) -> DiagramText {
        DiagramText {
            phi: self.phi.clone().map(|p| p.to_string()),
            psi: self.psi.clone().map(|p| p.to_string()),
        }
    }

    pub fn from_text(t: &DiagramText, kind: BundleKind) -> Result<Self> {
        let parse = |v: &[String; 3]| -> Result<[ParamBraid; 3]> {
            Ok([ParamBraid::parse(&v[0], kind)?, ParamBraid::parse(&v[1], kind)?, ParamBraid::parse(&v[2], kind)?])
        };
        Ok(DiagramImages { phi: parse(&t.phi)?, psi: parse(&t.psi)? })
    }
}

/// The class and involution a diagram is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramSetting {
    Ma(HomClassMA),
    T3(HomClassT3, Involution),
}

impl DiagramSetting {
    pub fn involution(&self) -> Involution {
        match self {
            DiagramSetting::Ma(_) => Involution::Tau,
            DiagramSetting::T3(_, inv) => *inv,
        }
    }

    pub fn kind(&self) -> BundleKind {
        match self {
            DiagramSetting::Ma(_) => BundleKind::MaUnipotent,
            DiagramSetting::T3(..) => BundleKind::T3Trivial,
        }
    }

    /// `f_#` on the source generators, in the basis the braid projection uses.
    fn induced_images(&self) -> [GroupElem; 3] {
        match self {
            DiagramSetting::Ma(cls) => cls.generator_images(Basis::Tilde).map(GroupElem::Ma),
            DiagramSetting::T3(cls, _) => cls.generator_images().map(GroupElem::T3),
        }
    }
}

/// The lifted homomorphisms attached to a witness:
/// `ψ(a) = P₁σ`, `ψ(b) = P₂`, `ψ(ĉ) = P₃c̄`, and `φ = ψ ∘ push`.
pub fn diagram_from_witness(w: &WitnessTriple) -> Result<DiagramImages> {
    let kind = BundleKind::MaUnipotent;
    let psi = [
        w.p1.pmul(&ParamBraid::sigma(kind))?,
        w.p2.clone(),
        w.p3.pmul(&ParamBraid::c(kind))?,
    ];
    let phi = [z1_squared(&w.p1)?, psi[1].clone(), psi[2].clone()];
    Ok(DiagramImages { phi, psi })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramReport {
    pub checks: Vec<RelationCheck>,
}

impl DiagramReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn word_label(names: &[&str; 3], w: &[(usize, i64)]) -> String {
    w.iter()
        .map(|&(i, e)| if e == 1 { names[i].to_string() } else { format!("{}^{}", names[i], e) })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Verifies commutativity of the lifting diagram on generators and relators:
/// both maps are homomorphisms, `ψ ∘ push = φ`, the first-strand projection of
/// `φ` is the induced homomorphism, `ψ` lifts θ_τ through σ-parity, and both
/// maps cover the base.
pub fn check_diagram(images: &DiagramImages, setting: &DiagramSetting) -> Result<DiagramReport> {
    let kind = setting.kind();
    for p in images.phi.iter().chain(&images.psi) {
        if p.kind != kind {
            return Err(Error::Malformed(format!("image {p} belongs to the {} group", p.kind.name())));
        }
    }
    if let Some(p) = images.phi.iter().find(|p| !p.is_pure()) {
        return Err(Error::Malformed(format!("phi image {p} is not a pure braid")));
    }
    let inv = setting.involution();
    let (src, orb) = involution_groups(inv);
    let src_names = generator_names(src);
    let orb_names = generator_names(orb);
    let id = ParamBraid::identity(kind);
    let mut checks = Vec::new();

    for (tag, imgs, group, names) in [("phi", &images.phi, src, &src_names), ("psi", &images.psi, orb, &orb_names)] {
        for rel in relators(group) {
            let label = format!("{tag}.relator {}", word_label(names, &rel));
            checks.push(check(&label, eval_word(&id, imgs, &rel), Ok(id.clone())));
        }
    }
    for (i, w) in push_words(inv).iter().enumerate() {
        let label = format!("push.{} = {}", src_names[i], word_label(&orb_names, w));
        checks.push(check(&label, eval_word(&id, &images.psi, w), Ok(images.phi[i].clone())));
    }
    let f = setting.induced_images();
    for i in 0..3 {
        let label = format!("projection.{}", src_names[i]);
        checks.push(check(&label, images.phi[i].project_param(), Ok(f[i])));
    }
    let theta = theta_on_generators(inv);
    for i in 0..3 {
        let label = format!("parity.{}", orb_names[i]);
        checks.push(check(&label, Ok(images.psi[i].theta_z2() as u8), Ok(theta[i] as u8)));
    }
    let base = |img: &ParamBraid| img.theta_c();
    for i in 0..3 {
        let expect = (i == 2) as i64;
        checks.push(check(&format!("base.phi.{}", src_names[i]), Ok(base(&images.phi[i])), Ok(expect)));
        checks.push(check(&format!("base.psi.{}", orb_names[i]), Ok(base(&images.psi[i])), Ok(expect)));
    }
    Ok(DiagramReport { checks })
}
