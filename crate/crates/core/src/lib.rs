//! Finite k-linear Hopf categories by structure constants over exact fields.
//!
//! The central record is [`HopfCatData`]: a finite object set, hom objects
//! `A_{x,y}` with chosen bases, and the structure constants of composition,
//! units, comultiplication, counit and (optionally) the antipode. Everything
//! else is a construction on it or a check of an identity it should satisfy.
//! All arithmetic is exact, over the rationals or a prime field.

#![allow(clippy::needless_range_loop, clippy::too_many_arguments)]

pub mod dual;
pub mod duoidal;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod fundamental;
pub mod graded;
pub mod groupoid;
pub mod category;
pub mod linalg;
pub mod modules;
pub mod report;
pub mod scalar;
pub mod tensor;
pub mod transform;
pub mod verify;
pub mod weak_hopf;

pub use dual::{dualize, undualize, verify_dual, DualHopfCatData};
pub use error::{Error, LinalgError, Result};
pub use graded::{from_graded, GradedHopfData};
pub use groupoid::{linearize_groupoid, GroupoidData};
pub use category::HopfCatData;
pub use linalg::{LinMap, TensorIndex};
pub use report::{Report, ReportItem};
pub use scalar::{Field, Scalar};
pub use transform::{transform, Mode};
pub use verify::{check_antipode_theorems, check_strictness, verify_structure, Level};
pub use weak_hopf::{pack, pack_dual, verify_weak_hopf, WeakHopfData};
