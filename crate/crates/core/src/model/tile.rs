use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Direction, Glue};

/// Optional rendering hints for a tile type.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TileDisplay {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

/// A unit square with one glue per side. Tiles never rotate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TileType {
    pub name: String,
    glues: [Glue; 4],
    pub display: Option<TileDisplay>,
}

impl TileType {
    /// A tile with null glues on every side.
    pub fn new(name: impl Into<String>) -> Self {
        Self { name: name.into(), glues: Default::default(), display: None }
    }

    pub fn with_glue(mut self, side: Direction, glue: Glue) -> Self {
        self.glues[side.index()] = glue;
        self
    }

    pub fn with_display(mut self, display: TileDisplay) -> Self {
        self.display = Some(display);
        self
    }

    pub fn north(self, label: &str, strength: u32) -> Self {
        self.with_glue(Direction::North, Glue::new(label, strength))
    }

    pub fn east(self, label: &str, strength: u32) -> Self {
        self.with_glue(Direction::East, Glue::new(label, strength))
    }

    pub fn south(self, label: &str, strength: u32) -> Self {
        self.with_glue(Direction::South, Glue::new(label, strength))
    }

    pub fn west(self, label: &str, strength: u32) -> Self {
        self.with_glue(Direction::West, Glue::new(label, strength))
    }

    pub fn glue(&self, side: Direction) -> &Glue {
        &self.glues[side.index()]
    }

    pub fn glues(&self) -> impl Iterator<Item = (Direction, &Glue)> {
        Direction::ALL.into_iter().zip(self.glues.iter())
    }

    /// The single character used by the ascii renderer.
    pub fn short_label(&self) -> char {
        self.display
            .as_ref()
            .and_then(|d| d.label.as_deref())
            .and_then(|l| l.chars().next())
            .or_else(|| self.name.chars().next())
            .unwrap_or('?')
    }
}

/// Index of a tile type inside its [`TileSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TileId(pub u32);

impl TileId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for TileId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Interned form of a glue: label id 0 is the null glue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct GlueKey {
    label: u32,
    strength: u32,
}

/// An ordered collection of tile types with the lookup tables used during
/// growth.
///
/// Construction never fails; structural problems (duplicate names,
/// inconsistent glue strengths) are reported by [`super::validate_tas`].
/// Name lookup resolves to the first tile carrying a name.
#[derive(Debug, Clone)]
pub struct TileSet {
    tiles: Vec<TileType>,
    by_name: HashMap<String, TileId>,
    keys: Vec<[GlueKey; 4]>,
    // by_side[d][label] = tiles whose side d carries that label
    by_side: [HashMap<u32, Vec<TileId>>; 4],
}

impl PartialEq for TileSet {
    fn eq(&self, other: &Self) -> bool {
        self.tiles == other.tiles
    }
}

impl Eq for TileSet {}

impl TileSet {
    pub fn new(tiles: Vec<TileType>) -> Self {
        let mut by_name = HashMap::new();
        let mut labels: HashMap<&str, u32> = HashMap::new();
        let mut keys = Vec::with_capacity(tiles.len());
        let mut by_side: [HashMap<u32, Vec<TileId>>; 4] = Default::default();
        for (i, tile) in tiles.iter().enumerate() {
            let id = TileId(i as u32);
            by_name.entry(tile.name.clone()).or_insert(id);
            let mut k = [GlueKey { label: 0, strength: 0 }; 4];
            for (side, glue) in tile.glues() {
                if glue.is_null() {
                    continue;
                }
                let next = labels.len() as u32 + 1;
                let label = *labels.entry(glue.label.as_str()).or_insert(next);
                k[side.index()] = GlueKey { label, strength: glue.strength };
                by_side[side.index()].entry(label).or_default().push(id);
            }
            keys.push(k);
        }
        Self { tiles, by_name, keys, by_side }
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn tiles(&self) -> &[TileType] {
        &self.tiles
    }

    pub fn ids(&self) -> impl Iterator<Item = TileId> {
        (0..self.tiles.len() as u32).map(TileId)
    }

    pub fn get(&self, id: TileId) -> Option<&TileType> {
        self.tiles.get(id.index())
    }

    pub fn contains(&self, id: TileId) -> bool {
        id.index() < self.tiles.len()
    }

    pub fn id_of(&self, name: &str) -> Option<TileId> {
        self.by_name.get(name).copied()
    }

    /// Name of a tile id, or a `#n` placeholder for ids outside the set.
    pub fn name_of(&self, id: TileId) -> String {
        match self.get(id) {
            Some(t) => t.name.clone(),
            None => id.to_string(),
        }
    }

    /// Bond strength between tile `a` and tile `b` sitting on `a`'s `side`.
    /// Both ids must belong to this set.
    pub fn interaction(&self, a: TileId, side: Direction, b: TileId) -> u32 {
        let ka = self.keys[a.index()][side.index()];
        let kb = self.keys[b.index()][side.opposite().index()];
        if ka.label != 0 && ka == kb {
            ka.strength
        } else {
            0
        }
    }

    /// Tiles whose `side` carries the same label as the glue that `neighbor`
    /// presents on its opposite side. These are the only tiles that can bond
    /// to `neighbor` across that edge.
    pub(crate) fn candidates_facing(&self, side: Direction, neighbor: TileId) -> &[TileId] {
        let label = self.keys[neighbor.index()][side.opposite().index()].label;
        if label == 0 {
            return &[];
        }
        self.by_side[side.index()].get(&label).map(Vec::as_slice).unwrap_or(&[])
    }
}
