use std::collections::{BTreeMap, BTreeSet, HashSet};

use super::binding::stability_cut;
use super::{Assembly, Diagnostic, TileSet};

/// A tile assembly system: tile types, a seed and a temperature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tas {
    tileset: TileSet,
    seed: Assembly,
    temperature: u32,
}

impl Tas {
    /// Builds a system and rejects it unless [`validate_tas`] is clean.
    pub fn new(tileset: TileSet, seed: Assembly, temperature: u32) -> Result<Self, Vec<Diagnostic>> {
        let tas = Self::new_unchecked(tileset, seed, temperature);
        let diagnostics = validate_tas(&tas);
        if diagnostics.is_empty() {
            Ok(tas)
        } else {
            Err(diagnostics)
        }
    }

    pub fn new_unchecked(tileset: TileSet, seed: Assembly, temperature: u32) -> Self {
        Self { tileset, seed, temperature }
    }

    pub fn tileset(&self) -> &TileSet {
        &self.tileset
    }

    pub fn seed(&self) -> &Assembly {
        &self.seed
    }

    pub fn temperature(&self) -> u32 {
        self.temperature
    }
}

/// Every structural problem with a system, one diagnostic per violation.
/// An empty result means the system is usable.
pub fn validate_tas(tas: &Tas) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let ts = tas.tileset();

    if ts.is_empty() {
        out.push(Diagnostic::EmptyTileSet);
    }

    let mut seen = HashSet::new();
    let mut reported = HashSet::new();
    for (index, tile) in ts.tiles().iter().enumerate() {
        if tile.name.is_empty() {
            out.push(Diagnostic::EmptyTileName { index });
        } else if !seen.insert(tile.name.as_str()) && reported.insert(tile.name.as_str()) {
            out.push(Diagnostic::DuplicateTileName(tile.name.clone()));
        }
    }

    let mut strengths: BTreeMap<&str, BTreeSet<u32>> = BTreeMap::new();
    for tile in ts.tiles() {
        for (side, glue) in tile.glues() {
            if glue.is_null() {
                if glue.strength != 0 {
                    out.push(Diagnostic::NullGlueStrength { tile: tile.name.clone(), side, strength: glue.strength });
                }
            } else {
                strengths.entry(glue.label.as_str()).or_default().insert(glue.strength);
            }
        }
    }
    for (label, s) in strengths {
        if s.len() > 1 {
            out.push(Diagnostic::GlueStrengthConflict { label: label.to_owned(), strengths: s.into_iter().collect() });
        }
    }

    if tas.temperature() == 0 {
        out.push(Diagnostic::InvalidTemperature(0));
    }

    let seed = tas.seed();
    if seed.is_empty() {
        out.push(Diagnostic::EmptySeed);
    }
    let mut seed_ok = true;
    for (position, tile) in seed.iter() {
        if !ts.contains(tile) {
            seed_ok = false;
            out.push(Diagnostic::UnknownSeedTile { position, tile: tile.to_string() });
        }
    }
    if seed_ok && tas.temperature() > 0 {
        if let Ok(Some(cut)) = stability_cut(seed, ts) {
            if cut < u64::from(tas.temperature()) {
                out.push(Diagnostic::SeedNotStable { cut, temperature: tas.temperature() });
            }
        }
    }
    out
}
