//! The coarse lower topology on finite posets and on ideal spaces.

mod finite_space;
mod ideal_space;

pub use finite_space::{
    FiniteSpace, Irreducibility, SoberMethod, SoberWitness, SobernessVerdict, SpectralCertificate,
};
pub use ideal_space::{
    ClosedSet, IdealSpace, IrreducibilityVerdict, QuasiCompactnessReport, XRadical,
};
