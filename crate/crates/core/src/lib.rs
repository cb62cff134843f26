//! Coherence dynamics of a two-level atom inside a dissipative cavity.
//!
//! The atom–cavity pair lives in the single-excitation sector, spanned by the
//! dressed states `|E1+>`, `|E1->` and `|E0>`. The cavity leaks into a
//! zero-temperature reservoir with a Lorentzian spectrum centred on the
//! `|E1->` transition, which gives time-dependent decay rates and a closed-form
//! propagator for the dressed density matrix.
//!
//! Modules:
//!
//! * [`model`]: decay rates, memory integrals, closed-form propagation and the
//!   atom <-> dressed-basis maps.
//! * [`protocol`]: weak measurement, dissipative evolution, reversal, and the
//!   l1 / relative-entropy coherence quantifiers.
//! * [`oracle`]: a fixed-step RK4 integrator of the time-local master
//!   equation, used to check the closed form.
//! * [`nonmarkov`]: trace-distance dynamics and the BLP non-Markovianity
//!   measure.
//!
//! All rates and times are expressed in units of the system–environment
//! coupling `lambda0`.

// Small fixed-size matrix code reads better with explicit indices.
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod model;
pub mod nonmarkov;
pub mod oracle;
pub mod protocol;

pub use error::{Error, Result};
pub use model::{
    embed_atom_with_vacuum, evolve_dressed, reduce_to_atom, AtomState, DressedPropagator,
    DressedState, MemoryIntegrals, PhysicalParams,
};
pub use nonmarkov::{
    blp_measure, evolve_pair, maximize_over_pairs, trace_distance, DistanceSeries,
    NonMarkovResult, StatePair,
};
pub use oracle::{compare_closed_form, integrate, master_rhs, TimeGrid, Trajectory};
pub use protocol::{
    apply_reversal, apply_weak_measurement, coherence_l1, coherence_rel_entropy, prepare_initial,
    run_protocol, CoherenceSample, InitialPreparation, MeasurementStrengths, ProtocolConfig,
};

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;
