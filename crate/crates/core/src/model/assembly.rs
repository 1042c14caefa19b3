use std::collections::btree_map::{self, BTreeMap};
use std::collections::BTreeSet;

use super::{Position, TileId};

/// A finite placement of tiles on the lattice.
///
/// Assemblies are anchored at absolute coordinates and kept sorted by
/// position, so two assemblies are equal (and hash equal) exactly when they
/// place the same tile types at the same positions.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assembly {
    placements: BTreeMap<Position, TileId>,
}

impl Assembly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(position: Position, tile: TileId) -> Self {
        let mut a = Self::new();
        a.placements.insert(position, tile);
        a
    }

    /// Places `tile` at `position`, returning whatever was there before.
    pub fn insert(&mut self, position: Position, tile: TileId) -> Option<TileId> {
        self.placements.insert(position, tile)
    }

    pub fn with(mut self, position: Position, tile: TileId) -> Self {
        self.insert(position, tile);
        self
    }

    pub fn remove(&mut self, position: Position) -> Option<TileId> {
        self.placements.remove(&position)
    }

    pub fn get(&self, position: Position) -> Option<TileId> {
        self.placements.get(&position).copied()
    }

    pub fn contains(&self, position: Position) -> bool {
        self.placements.contains_key(&position)
    }

    pub fn len(&self) -> usize {
        self.placements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.placements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Position, TileId)> + '_ {
        self.placements.iter().map(|(&p, &t)| (p, t))
    }

    pub fn positions(&self) -> impl Iterator<Item = Position> + '_ {
        self.placements.keys().copied()
    }

    pub fn domain(&self) -> BTreeSet<Position> {
        self.placements.keys().copied().collect()
    }

    /// `self ⊑ other`: every placement of `self` also appears in `other`.
    pub fn is_subassembly_of(&self, other: &Assembly) -> bool {
        self.len() <= other.len() && self.placements.iter().all(|(p, t)| other.placements.get(p) == Some(t))
    }

    /// Smallest and largest coordinates on each axis, or `None` when empty.
    pub fn bounding_box(&self) -> Option<(Position, Position)> {
        let mut it = self.positions();
        let first = it.next()?;
        let (mut lo, mut hi) = (first, first);
        for p in it {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        Some((lo, hi))
    }
}

impl FromIterator<(Position, TileId)> for Assembly {
    fn from_iter<I: IntoIterator<Item = (Position, TileId)>>(iter: I) -> Self {
        Self { placements: iter.into_iter().collect() }
    }
}

impl<'a> IntoIterator for &'a Assembly {
    type Item = (&'a Position, &'a TileId);
    type IntoIter = btree_map::Iter<'a, Position, TileId>;

    fn into_iter(self) -> Self::IntoIter {
        self.placements.iter()
    }
}

/// Free-function form of [`Assembly::is_subassembly_of`].
pub fn is_subassembly(a: &Assembly, b: &Assembly) -> bool {
    a.is_subassembly_of(b)
}
