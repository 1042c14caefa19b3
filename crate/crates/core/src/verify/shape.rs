use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::model::{Assembly, Direction, Position};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("shape has no points")]
    Empty,
    #[error("shape is not edge-connected: {0} is cut off from the rest")]
    Disconnected(Position),
    #[error("window has no positions")]
    EmptyWindow,
    #[error("assembly is empty")]
    EmptyAssembly,
}

/// Whether a position belongs to a shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Inside,
    Outside,
    /// Outside the window of an infinite-mode shape.
    Unknown,
}

type Predicate = Arc<dyn Fn(Position) -> bool + Send + Sync>;

/// A target shape `X ⊆ Z²`.
///
/// Finite shapes list their points. Infinite shapes are a membership test
/// that is only trusted inside a finite window; nothing is inferred about
/// positions outside it.
#[derive(Clone)]
pub enum Shape {
    Finite(BTreeSet<Position>),
    Windowed { membership: Predicate, window: BTreeSet<Position> },
}

impl fmt::Debug for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Finite(points) => f.debug_tuple("Finite").field(points).finish(),
            Shape::Windowed { window, .. } => f
                .debug_struct("Windowed")
                .field("window", &window.len())
                .field("inside", &self.target_points().len())
                .finish(),
        }
    }
}

impl Shape {
    /// A finite shape; must be nonempty and edge-connected.
    pub fn finite(points: impl IntoIterator<Item = Position>) -> Result<Shape, ShapeError> {
        let points: BTreeSet<Position> = points.into_iter().collect();
        let Some(&start) = points.first() else {
            return Err(ShapeError::Empty);
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(p) = stack.pop() {
            for d in Direction::ALL {
                if let Some(q) = p.checked_step(d) {
                    if points.contains(&q) && seen.insert(q) {
                        stack.push(q);
                    }
                }
            }
        }
        if let Some(&cut_off) = points.iter().find(|p| !seen.contains(p)) {
            return Err(ShapeError::Disconnected(cut_off));
        }
        Ok(Shape::Finite(points))
    }

    pub fn windowed(
        membership: impl Fn(Position) -> bool + Send + Sync + 'static,
        window: impl IntoIterator<Item = Position>,
    ) -> Result<Shape, ShapeError> {
        let window: BTreeSet<Position> = window.into_iter().collect();
        if window.is_empty() {
            return Err(ShapeError::EmptyWindow);
        }
        Ok(Shape::Windowed { membership: Arc::new(membership), window })
    }

    /// Axis-aligned `width × height` window with its lower-left corner at
    /// `origin`.
    pub fn rectangle(origin: Position, width: i64, height: i64) -> BTreeSet<Position> {
        let mut out = BTreeSet::new();
        for dx in 0..width.max(0) {
            for dy in 0..height.max(0) {
                out.insert(Position::new(origin.x + dx, origin.y + dy));
            }
        }
        out
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Shape::Finite(_))
    }

    pub fn membership(&self, p: Position) -> Membership {
        match self {
            Shape::Finite(points) if points.contains(&p) => Membership::Inside,
            Shape::Finite(_) => Membership::Outside,
            Shape::Windowed { membership, window } => {
                if !window.contains(&p) {
                    Membership::Unknown
                } else if membership(p) {
                    Membership::Inside
                } else {
                    Membership::Outside
                }
            }
        }
    }

    /// The points a complete assembly must occupy: all of `X` in finite mode,
    /// `X ∩ window` otherwise.
    pub fn target_points(&self) -> BTreeSet<Position> {
        match self {
            Shape::Finite(points) => points.clone(),
            Shape::Windowed { membership, window } => window.iter().copied().filter(|&p| membership(p)).collect(),
        }
    }
}

/// The domain of a nonempty, connected assembly as a finite shape.
pub fn shape_of(assembly: &Assembly) -> Result<Shape, ShapeError> {
    if assembly.is_empty() {
        return Err(ShapeError::EmptyAssembly);
    }
    Shape::finite(assembly.positions())
}
