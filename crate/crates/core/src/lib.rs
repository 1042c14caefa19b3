//! Simulation and verification for the abstract Tile Assembly Model.
//!
//! * [`model`]: positions, glues, tile types, assemblies and stability.
//! * [`dynamics`]: attachment, frontiers, assembly sequences, enumeration.
//! * [`verify`]: directedness and shape self-assembly verdicts.
//! * [`io`]: document formats and renderers.
//! * [`corpus`]: the bundled example systems.

pub mod corpus;
pub mod dynamics;
pub mod io;
pub mod model;
pub mod verify;

pub use dynamics::{
    attach, attachable, enumerate, enumerate_with_jobs, frontier, is_producible, random_sequence, replay,
    AssemblyGraph, AssemblySequence, Attachment, Bounds,
};
pub use model::{
    binding_graph, glue_interaction, is_subassembly, is_tau_stable, validate_tas, Assembly, Diagnostic, Direction,
    Glue, Position, Tas, TileId, TileSet, TileType,
};
pub use verify::{finitely_self_assembles, is_directed, self_assembles, shape_of, Shape, Verdict, VerdictStatus};
