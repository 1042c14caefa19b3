//! Growth: single-tile attachment, frontiers, assembly sequences, exhaustive
//! enumeration of producible assemblies and a producibility test.

mod attach;
mod explore;
mod producible;
mod sequence;

use thiserror::Error;

use crate::model::{ModelError, Position};

pub use attach::{attach, attach_in_place, attachable, frontier, Attachment};
pub use explore::{enumerate, enumerate_with_jobs, AssemblyGraph, Bounds, Edge, ExplorationStatus, Node, NodeId};
pub(crate) use explore::{Explorer, Gate};
pub use producible::is_producible;
pub use sequence::{random_sequence, replay, replay_stages, AssemblySequence};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DynamicsError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(
        "tile {tile:?} cannot attach at {position}: {}",
        if *occupied { "position is occupied".to_owned() } else { format!("bond strength {strength} < temperature {temperature}") }
    )]
    NotAttachable { position: Position, tile: String, strength: u32, temperature: u32, occupied: bool },
    #[error("tile {tile:?} at {position} is recorded with strength {recorded} but binds with {actual}")]
    StrengthMismatch { position: Position, tile: String, recorded: u32, actual: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("sequence does not start from the seed")]
    StartMismatch,
    #[error("step {index}: {source}")]
    Step {
        index: usize,
        #[source]
        source: DynamicsError,
    },
}
