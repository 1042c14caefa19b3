use std::fmt;

use serde::{Deserialize, Serialize};

use super::ModelError;

/// A point of the square lattice.
///
/// Ordering is lexicographic by `(x, y)`, which is the canonical order used
/// for assemblies, frontiers and every serialized document.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Position {
    pub x: i64,
    pub y: i64,
}

impl Position {
    pub const ORIGIN: Position = Position { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    /// The lattice neighbor in direction `dir`, or `None` if it does not fit
    /// in the coordinate range.
    pub fn checked_step(self, dir: Direction) -> Option<Position> {
        let (dx, dy) = dir.offset();
        Some(Position { x: self.x.checked_add(dx)?, y: self.y.checked_add(dy)? })
    }

    pub fn step(self, dir: Direction) -> Result<Position, ModelError> {
        self.checked_step(dir).ok_or(ModelError::CoordinateOverflow { position: self, direction: dir })
    }

    pub fn is_adjacent(self, other: Position) -> bool {
        Direction::ALL.iter().any(|&d| self.checked_step(d) == Some(other))
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl From<(i64, i64)> for Position {
    fn from((x, y): (i64, i64)) -> Self {
        Position { x, y }
    }
}

/// One of the four sides of a tile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    North,
    East,
    South,
    West,
}

impl Direction {
    pub const ALL: [Direction; 4] = [Direction::North, Direction::East, Direction::South, Direction::West];

    pub const fn opposite(self) -> Direction {
        match self {
            Direction::North => Direction::South,
            Direction::East => Direction::West,
            Direction::South => Direction::North,
            Direction::West => Direction::East,
        }
    }

    pub const fn offset(self) -> (i64, i64) {
        match self {
            Direction::North => (0, 1),
            Direction::East => (1, 0),
            Direction::South => (0, -1),
            Direction::West => (-1, 0),
        }
    }

    pub const fn index(self) -> usize {
        self as usize
    }

    pub const fn name(self) -> &'static str {
        match self {
            Direction::North => "north",
            Direction::East => "east",
            Direction::South => "south",
            Direction::West => "west",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
