//! Static domain: lattice positions, glues, tile types, assemblies and
//! temperature stability.

mod assembly;
mod binding;
mod glue;
pub mod mincut;
mod position;
mod tas;
mod tile;

use std::fmt;

use thiserror::Error;

pub use assembly::{is_subassembly, Assembly};
pub use binding::{binding_graph, is_tau_stable, BindingGraph};
pub use glue::{glue_interaction, Glue};
pub use position::{Direction, Position};
pub use tas::{validate_tas, Tas};
pub use tile::{TileDisplay, TileId, TileSet, TileType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("unknown tile type {tile}")]
    UnknownTile { tile: String },
    #[error("coordinate overflow stepping {direction} from {position}")]
    CoordinateOverflow { position: Position, direction: Direction },
}

/// One structural problem found while validating a tile assembly system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagnostic {
    EmptyTileSet,
    EmptyTileName { index: usize },
    DuplicateTileName(String),
    GlueStrengthConflict { label: String, strengths: Vec<u32> },
    NullGlueStrength { tile: String, side: Direction, strength: u32 },
    InvalidTemperature(u32),
    EmptySeed,
    UnknownSeedTile { position: Position, tile: String },
    DuplicateSeedPosition { position: Position },
    SeedNotStable { cut: u64, temperature: u32 },
}

impl Diagnostic {
    /// Stable identifier, suitable for matching in scripts.
    pub fn code(&self) -> &'static str {
        match self {
            Diagnostic::EmptyTileSet => "EmptyTileSet",
            Diagnostic::EmptyTileName { .. } => "EmptyTileName",
            Diagnostic::DuplicateTileName(_) => "DuplicateTileName",
            Diagnostic::GlueStrengthConflict { .. } => "GlueStrengthConflict",
            Diagnostic::NullGlueStrength { .. } => "NullGlueStrength",
            Diagnostic::InvalidTemperature(_) => "InvalidTemperature",
            Diagnostic::EmptySeed => "EmptySeed",
            Diagnostic::UnknownSeedTile { .. } => "UnknownSeedTile",
            Diagnostic::DuplicateSeedPosition { .. } => "DuplicateSeedPosition",
            Diagnostic::SeedNotStable { .. } => "SeedNotStable",
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.code())?;
        match self {
            Diagnostic::EmptyTileSet => f.write_str("the tile set has no tile types"),
            Diagnostic::EmptyTileName { index } => write!(f, "tiles[{index}] has an empty name"),
            Diagnostic::DuplicateTileName(name) => write!(f, "tile name {name:?} is used more than once"),
            Diagnostic::GlueStrengthConflict { label, strengths } => {
                write!(f, "glue {label:?} appears with strengths {strengths:?}")
            }
            Diagnostic::NullGlueStrength { tile, side, strength } => {
                write!(f, "tile {tile:?} has a null glue of strength {strength} on its {side} side")
            }
            Diagnostic::InvalidTemperature(t) => write!(f, "temperature must be at least 1, got {t}"),
            Diagnostic::EmptySeed => f.write_str("the seed places no tiles"),
            Diagnostic::UnknownSeedTile { position, tile } => {
                write!(f, "seed tile at {position} names unknown tile type {tile:?}")
            }
            Diagnostic::DuplicateSeedPosition { position } => {
                write!(f, "seed places more than one tile at {position}")
            }
            Diagnostic::SeedNotStable { cut, temperature } => {
                write!(f, "seed is not stable: a cut of strength {cut} is below temperature {temperature}")
            }
        }
    }
}
