//! Borsuk–Ulam classification for the unipotent bundle MA and for T³.

pub mod certificate;
pub mod diagram;
pub mod parity;
pub mod t3;
pub mod witness;

pub use certificate::{
    classify, classify_ma, classify_ma_with, classify_t3, verify_certificate, Certificate, ClassDescriptor, Evidence,
    SampleOptions, Verdict, VerifyReport,
};
pub use diagram::{check_diagram, diagram_from_witness, DiagramImages, DiagramReport, DiagramSetting};
pub use parity::{parity_certificate, CandidateFamily, ConjFactor, ParityReport};
pub use t3::{extend_t2_diagram_to_t3, restrict_t3_to_t2, t3_has_bup};
pub use witness::{system_holds, verify_system, witness_ma, WitnessTriple};
