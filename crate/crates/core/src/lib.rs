//! Exact arithmetic in the parametrized 2-string braid groups of torus
//! bundles over the circle, and a Borsuk–Ulam classifier with checkable
//! certificates.

pub mod classifier;
pub mod error;
pub mod freegroup;
pub mod fundamental_groups;
pub mod group;
pub mod oracle;
pub mod param_braid;
pub mod torus_braid;

pub use error::{Error, Result};
pub use freegroup::{AbelianImage, FreeWord, Generator, NamedWord, Syllable};
pub use fundamental_groups::{HomClassMA, HomClassT3, Involution};
pub use group::GroupElement;
pub use param_braid::{BundleKind, ParamBraid};
pub use torus_braid::{FullBraidT2, PureBraidT2};
pub use classifier::{classify, classify_ma, classify_t3, verify_certificate, Certificate, ClassDescriptor, Verdict};
