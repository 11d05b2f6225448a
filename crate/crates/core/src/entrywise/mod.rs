//! The entrywise calculus: psd tests, Schur products, entrywise maps,
//! moment matrices, power-preserver witnesses and metric embeddings.

mod embed;
mod maps;
mod matrix;
mod moments;
mod psd;
mod vasudeva;
mod witness;

pub use embed::{
    euclidean_distances, euclidean_embed, geodesic_distances, sphere_embed, DistanceMatrix,
    Embedding,
};
pub use maps::{apply_entrywise, schur_product, EntrywiseMap};
pub use matrix::{MatrixJson, SymMatrix};
pub use moments::{moment_matrix, AtomicMeasure, MeasureJson, MomentKind};
pub use psd::{default_tolerance, psd_check, PsdReport, DEFAULT_RELATIVE_TOL};
pub use vasudeva::{vasudeva_2x2_check, VasudevaReport};
pub use witness::{jain_matrix, jain_power_spectrum, power_preserver_witness, PowerWitness, WitnessSearch};
