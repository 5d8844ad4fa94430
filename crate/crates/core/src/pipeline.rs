//! End-to-end generation for one signature.

use crate::basis_builder::{
    build_basis, find_initial_vector, generators_for, ConfigSource, RealizedBasis, SignatureConfig,
};
use crate::clifford_rep::GeneratorSet;
use crate::exactlin::IntVector;
use crate::lie_algebra::{compute_table, verify_htype, StructureTable};
use crate::report::Report;
use crate::words::Signature;
use crate::Result;

/// Every intermediate of one generation run.
#[derive(Clone, Debug)]
pub struct Generated {
    pub config: SignatureConfig,
    pub generators: GeneratorSet,
    pub candidates: Vec<IntVector>,
    pub basis: RealizedBasis,
    pub table: StructureTable,
    pub report: Report,
}

/// Generators, initial vector (the first admissible candidate), basis,
/// table and its verification for a configuration.
pub fn generate_from(config: SignatureConfig) -> Result<Generated> {
    let generators = generators_for(&config)?;
    let candidates = find_initial_vector(&generators, &config.involutions)?;
    let basis = build_basis(&generators, &config.basis, &candidates[0])?;
    let table = compute_table(&generators, &basis)?;
    let report = verify_htype(&table);
    Ok(Generated {
        config,
        generators,
        candidates,
        basis,
        table,
        report,
    })
}

pub fn generate(sig: Signature, source: &dyn ConfigSource) -> Result<Generated> {
    generate_from(source.config(sig)?)
}

/// The table for `(r, s)` built from its own configuration.
pub fn generated_table(sig: Signature, source: &dyn ConfigSource) -> Result<StructureTable> {
    Ok(generate(sig, source)?.table)
}
