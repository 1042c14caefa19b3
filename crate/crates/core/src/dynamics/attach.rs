use std::collections::BTreeSet;

use crate::model::{Assembly, Direction, ModelError, Position, Tas, TileId, TileSet};

use super::DynamicsError;

/// A single tile binding at an empty position with the given total strength.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Attachment {
    pub position: Position,
    pub tile: TileId,
    pub strength: u32,
}

fn check_tile(ts: &TileSet, tile: TileId) -> Result<(), ModelError> {
    if ts.contains(tile) {
        Ok(())
    } else {
        Err(ModelError::UnknownTile { tile: tile.to_string() })
    }
}

/// Total bond strength `tile` would have at `position`, plus whether any
/// neighbor is occupied at all.
fn bond_strength(
    ts: &TileSet,
    assembly: &Assembly,
    position: Position,
    tile: TileId,
) -> Result<(u32, bool), ModelError> {
    let mut strength = 0;
    let mut adjacent = false;
    for side in Direction::ALL {
        let Some(q) = position.checked_step(side) else { continue };
        if let Some(other) = assembly.get(q) {
            check_tile(ts, other)?;
            adjacent = true;
            strength += ts.interaction(tile, side, other);
        }
    }
    Ok((strength, adjacent))
}

/// The attachment of `tile` at `position`, if it binds with at least the
/// system's temperature.
pub fn attachable(
    tas: &Tas,
    assembly: &Assembly,
    position: Position,
    tile: TileId,
) -> Result<Option<Attachment>, DynamicsError> {
    let ts = tas.tileset();
    check_tile(ts, tile)?;
    if assembly.contains(position) {
        return Ok(None);
    }
    let (strength, adjacent) = bond_strength(ts, assembly, position, tile)?;
    Ok((adjacent && strength >= tas.temperature()).then_some(Attachment { position, tile, strength }))
}

/// Every attachment available to `assembly`, ordered by position and then by
/// tile name. Empty exactly when the assembly is terminal.
pub fn frontier(tas: &Tas, assembly: &Assembly) -> Result<Vec<Attachment>, DynamicsError> {
    let ts = tas.tileset();
    let mut empty = BTreeSet::new();
    for p in assembly.positions() {
        for side in Direction::ALL {
            let q = p.step(side)?;
            if !assembly.contains(q) {
                empty.insert(q);
            }
        }
    }

    let mut out = Vec::new();
    let mut candidates: Vec<TileId> = Vec::new();
    for q in empty {
        candidates.clear();
        for side in Direction::ALL {
            let Some(n) = q.checked_step(side) else { continue };
            if let Some(other) = assembly.get(n) {
                check_tile(ts, other)?;
                candidates.extend_from_slice(ts.candidates_facing(side, other));
            }
        }
        candidates.sort_unstable();
        candidates.dedup();
        let start = out.len();
        for &tile in &candidates {
            let (strength, _) = bond_strength(ts, assembly, q, tile)?;
            if strength >= tas.temperature() {
                out.push(Attachment { position: q, tile, strength });
            }
        }
        out[start..].sort_by(|a, b| ts.tiles()[a.tile.index()].name.cmp(&ts.tiles()[b.tile.index()].name));
    }
    Ok(out)
}

/// Adds one tile in place.
pub fn attach_in_place(tas: &Tas, assembly: &mut Assembly, attachment: &Attachment) -> Result<(), DynamicsError> {
    let ts = tas.tileset();
    check_tile(ts, attachment.tile)?;
    let occupied = assembly.contains(attachment.position);
    let (strength, adjacent) = bond_strength(ts, assembly, attachment.position, attachment.tile)?;
    if occupied || !adjacent || strength < tas.temperature() {
        return Err(DynamicsError::NotAttachable {
            position: attachment.position,
            tile: ts.name_of(attachment.tile),
            strength,
            temperature: tas.temperature(),
            occupied,
        });
    }
    if strength != attachment.strength {
        return Err(DynamicsError::StrengthMismatch {
            position: attachment.position,
            tile: ts.name_of(attachment.tile),
            recorded: attachment.strength,
            actual: strength,
        });
    }
    assembly.insert(attachment.position, attachment.tile);
    Ok(())
}

/// `assembly` plus the attached tile. Because the new tile binds with at
/// least the temperature, a stable input yields a stable result.
pub fn attach(tas: &Tas, assembly: &Assembly, attachment: &Attachment) -> Result<Assembly, DynamicsError> {
    let mut next = assembly.clone();
    attach_in_place(tas, &mut next, attachment)?;
    Ok(next)
}
