use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fundamental_groups::{HomClassMA, HomClassT3, Involution};
use crate::param_braid::BundleKind;
use crate::torus_braid::RelationCheck;

use super::diagram::{check_diagram, diagram_from_witness, DiagramImages, DiagramSetting, DiagramText};
use super::parity::{parity_certificate, sampled_parity, CandidateFamily, ParityReport, SampleSummary};
use super::t3::{restrict_t3_to_t2, t3_diagram, t3_has_bup};
use super::witness::{verify_system, witness_ma, WitnessText, WitnessTriple};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "BUP")]
    Bup,
    #[serde(rename = "not-BUP")]
    NotBup,
}

impl Verdict {
    pub fn from_bool(bup: bool) -> Self {
        if bup {
            Verdict::Bup
        } else {
            Verdict::NotBup
        }
    }
}

/// JSON class descriptor: `{"bundle":"MA","class":{..}}` or
/// `{"bundle":"T3","matrix":[[r1,r3,u],[r2,r4,v]]}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "bundle", deny_unknown_fields)]
pub enum ClassDescriptor {
    #[serde(rename = "MA")]
    Ma { class: HomClassMA },
    #[serde(rename = "T3")]
    T3 { matrix: [[i64; 3]; 2] },
}

impl ClassDescriptor {
    pub fn t3(cls: &HomClassT3) -> Self {
        ClassDescriptor::T3 { matrix: cls.to_matrix() }
    }

    pub fn kind(&self) -> BundleKind {
        match self {
            ClassDescriptor::Ma { .. } => BundleKind::MaUnipotent,
            ClassDescriptor::T3 { .. } => BundleKind::T3Trivial,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityEvidence {
    pub report: ParityReport,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub samples: Option<SampleSummary>,
    pub justification: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramEvidence {
    pub images: DiagramText,
    pub checks: Vec<RelationCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Evidence {
    Witness {
        triple: WitnessText,
        system: Vec<RelationCheck>,
        diagram: Vec<RelationCheck>,
    },
    Parity(ParityEvidence),
    T3Rule {
        restriction: [i64; 4],
        rule: String,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        diagram: Option<DiagramEvidence>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema_version: u32,
    pub verdict: Verdict,
    pub class: ClassDescriptor,
    pub involution: Involution,
    pub evidence: Evidence,
}

/// Extra sampled parity checks attached to BUP certificates for MA.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleOptions {
    pub seed: u64,
    pub samples: usize,
    pub max_factors: usize,
    pub max_exp: i64,
}

const PARITY_JUSTIFICATION: &str = "for every candidate of the forced shape the residual of the third equation is \
balanced and epsilon(residual) = 2*sum(t in A1) + 2*(-n1 + (k - m1)*(2*n1 + 1)) + 1, an odd number, so the \
residual is never the identity and the system has no solution";

const T3_RULE_TAU1: &str = "no class has the Borsuk-Ulam property with respect to tau1";
const T3_RULE_TAU2: &str = "BUP with respect to tau2 iff (r3, r4) != (0, 0) and r1, r2 are both even";

/// Classifies an MA class: BUP iff `r` is even.
pub fn classify_ma(cls: &HomClassMA) -> Result<Certificate> {
    classify_ma_with(cls, None)
}

pub fn classify_ma_with(cls: &HomClassMA, samples: Option<SampleOptions>) -> Result<Certificate> {
    let class = ClassDescriptor::Ma { class: *cls };
    if cls.r.rem_euclid(2) == 1 {
        let w = witness_ma(cls)?;
        let diagram = check_diagram(&diagram_from_witness(&w)?, &DiagramSetting::Ma(*cls))?;
        return Ok(Certificate {
            schema_version: SCHEMA_VERSION,
            verdict: Verdict::NotBup,
            class,
            involution: Involution::Tau,
            evidence: Evidence::Witness { triple: w.to_text(), system: verify_system(&w, cls), diagram: diagram.checks },
        });
    }
    let report = parity_certificate(cls, &CandidateFamily::trivial())?;
    let samples = match samples {
        Some(o) => Some(sampled_parity(cls, o.seed, o.samples, o.max_factors, o.max_exp)?),
        None => None,
    };
    Ok(Certificate {
        schema_version: SCHEMA_VERSION,
        verdict: Verdict::Bup,
        class,
        involution: Involution::Tau,
        evidence: Evidence::Parity(ParityEvidence { report, samples, justification: PARITY_JUSTIFICATION.into() }),
    })
}

/// Classifies a T³ class. Not-BUP certificates carry an explicit, checked
/// lifting diagram.
pub fn classify_t3(cls: &HomClassT3, inv: Involution) -> Result<Certificate> {
    let bup = t3_has_bup(cls, inv)?;
    let (r1, r2, r3, r4) = restrict_t3_to_t2(cls);
    let diagram = match t3_diagram(cls, inv)? {
        Some(images) => {
            let checks = check_diagram(&images, &DiagramSetting::T3(*cls, inv))?.checks;
            Some(DiagramEvidence { images: images.to_text(), checks })
        }
        None => None,
    };
    let rule = if inv == Involution::Tau1 { T3_RULE_TAU1 } else { T3_RULE_TAU2 };
    Ok(Certificate {
        schema_version: SCHEMA_VERSION,
        verdict: Verdict::from_bool(bup),
        class: ClassDescriptor::t3(cls),
        involution: inv,
        evidence: Evidence::T3Rule { restriction: [r1, r2, r3, r4], rule: rule.into(), diagram },
    })
}

/// Dispatches on the descriptor. `involution` defaults to `tau` for MA and is
/// required for T³.
pub fn classify(desc: &ClassDescriptor, involution: Option<Involution>) -> Result<Certificate> {
    match (desc, involution) {
        (ClassDescriptor::Ma { class }, None | Some(Involution::Tau)) => classify_ma(class),
        (ClassDescriptor::Ma { .. }, Some(inv)) => {
            Err(Error::Domain(format!("MA has only the involution tau, not {}", inv.name())))
        }
        (ClassDescriptor::T3 { matrix }, Some(inv)) => classify_t3(&HomClassT3::from_matrix(*matrix), inv),
        (ClassDescriptor::T3 { .. }, None) => Err(Error::Domain("T3 classes need an involution (tau1 or tau2)".into())),
    }
}

/// Outcome of re-checking a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub verified: bool,
    pub checks: Vec<RelationCheck>,
}

fn claim(label: &str, passed: bool, lhs: impl ToString, rhs: impl ToString) -> RelationCheck {
    RelationCheck { label: label.into(), passed, lhs: lhs.to_string(), rhs: rhs.to_string() }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Bup => "BUP",
        Verdict::NotBup => "not-BUP",
    }
}

/// Re-derives every claim in `cert` with the library's own operations.
///
/// Returns `Err` only when the embedded braids or words cannot be parsed.
pub fn verify_certificate(cert: &Certificate) -> Result<VerifyReport> {
    let mut checks = vec![claim("schema_version", cert.schema_version == SCHEMA_VERSION, cert.schema_version, SCHEMA_VERSION)];
    match (&cert.class, &cert.evidence) {
        (ClassDescriptor::Ma { class }, ev) => {
            let ok_inv = cert.involution == Involution::Tau;
            checks.push(claim("involution", ok_inv, cert.involution.name(), "tau"));
            let expected = Verdict::from_bool(class.r.rem_euclid(2) == 0);
            checks.push(claim("verdict", cert.verdict == expected, verdict_name(cert.verdict), verdict_name(expected)));
            match ev {
                Evidence::Witness { triple, system, diagram } => {
                    let w = WitnessTriple::from_text(triple)?;
                    let fresh = verify_system(&w, class);
                    checks.push(claim("system transcript", &fresh == system, "stored", "recomputed"));
                    checks.extend(fresh);
                    let d = check_diagram(&diagram_from_witness(&w)?, &DiagramSetting::Ma(*class))?;
                    checks.push(claim("diagram transcript", &d.checks == diagram, "stored", "recomputed"));
                    checks.extend(d.checks);
                }
                Evidence::Parity(p) => {
                    checks.push(claim("class", p.report.r == class.r, p.report.r, class.r));
                    if class.r.rem_euclid(2) == 0 {
                        let fresh = parity_certificate(class, &p.report.candidate)?;
                        checks.push(claim("parity report", fresh == p.report, "stored", "recomputed"));
                        checks.push(claim("gamma(residual)", fresh.gamma_residual.is_zero(), fresh.gamma_residual, "(0, 0)"));
                        checks.push(claim("epsilon(residual) odd", fresh.epsilon_odd, fresh.epsilon, "odd"));
                        if let Some(s) = &p.samples {
                            let again = sampled_parity(class, s.seed, s.samples, s.max_factors, s.max_exp)?;
                            checks.push(claim("samples", &again == s && again.all_obstructed, again.samples, s.samples));
                        }
                    }
                }
                Evidence::T3Rule { .. } => checks.push(claim("evidence kind", false, "t3-rule", "witness or parity")),
            }
        }
        (ClassDescriptor::T3 { matrix }, ev) => {
            let cls = HomClassT3::from_matrix(*matrix);
            let inv = cert.involution;
            let ok_inv = matches!(inv, Involution::Tau1 | Involution::Tau2);
            checks.push(claim("involution", ok_inv, inv.name(), "tau1 or tau2"));
            if ok_inv {
                let expected = Verdict::from_bool(t3_has_bup(&cls, inv)?);
                checks.push(claim("verdict", cert.verdict == expected, verdict_name(cert.verdict), verdict_name(expected)));
            }
            match ev {
                Evidence::T3Rule { restriction, diagram, rule } => {
                    let (r1, r2, r3, r4) = restrict_t3_to_t2(&cls);
                    checks.push(claim("restriction", *restriction == [r1, r2, r3, r4], format!("{restriction:?}"), format!("{:?}", [r1, r2, r3, r4])));
                    let expected_rule = if inv == Involution::Tau1 { T3_RULE_TAU1 } else { T3_RULE_TAU2 };
                    checks.push(claim("rule", rule == expected_rule, rule, expected_rule));
                    if cert.verdict == Verdict::NotBup && diagram.is_none() {
                        checks.push(claim("diagram present", false, "none", "a lifting diagram"));
                    }
                    if let Some(d) = diagram {
                        let applies = ok_inv && cert.verdict == Verdict::NotBup;
                        checks.push(claim("diagram applies", applies, verdict_name(cert.verdict), "not-BUP"));
                        if applies {
                            let images = DiagramImages::from_text(&d.images, BundleKind::T3Trivial)?;
                            let rep = check_diagram(&images, &DiagramSetting::T3(cls, inv))?;
                            checks.push(claim("diagram transcript", rep.checks == d.checks, "stored", "recomputed"));
                            checks.extend(rep.checks);
                        }
                    }
                }
                _ => checks.push(claim("evidence kind", false, "witness or parity", "t3-rule")),
            }
        }
    }
    Ok(VerifyReport { verified: checks.iter().all(|c| c.passed), checks })
}
