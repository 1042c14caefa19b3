use std::fmt;

use crate::dynamics::AssemblySequence;
use crate::model::{Assembly, Position};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerdictStatus {
    Holds,
    Fails,
    /// Exploration hit a bound before the question was settled.
    Unknown,
}

impl VerdictStatus {
    /// Process exit code for this outcome: 0, 1 or 2.
    pub fn exit_code(self) -> i32 {
        match self {
            VerdictStatus::Holds => 0,
            VerdictStatus::Fails => 1,
            VerdictStatus::Unknown => 2,
        }
    }
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictStatus::Holds => "Holds",
            VerdictStatus::Fails => "Fails",
            VerdictStatus::Unknown => "Unknown",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    /// A producible assembly places a tile outside the target shape.
    OutsidePlacement,
    /// A terminal assembly whose domain differs from the target.
    TerminalMismatch,
    /// A producible assembly that can no longer grow into the target.
    CannotComplete,
    /// One of two distinct terminal assemblies.
    DistinctTerminal,
}

impl WitnessKind {
    pub fn name(self) -> &'static str {
        match self {
            WitnessKind::OutsidePlacement => "outside-placement",
            WitnessKind::TerminalMismatch => "terminal-mismatch",
            WitnessKind::CannotComplete => "cannot-complete",
            WitnessKind::DistinctTerminal => "distinct-terminal",
        }
    }
}

/// Evidence for a failed property. `trace` replays from the seed to
/// `assembly`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub kind: WitnessKind,
    pub assembly: Assembly,
    pub trace: AssemblySequence,
    pub position: Option<Position>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub witnesses: Vec<Witness>,
    pub note: Option<String>,
}

impl Verdict {
    pub fn holds(note: impl Into<String>) -> Self {
        Self { status: VerdictStatus::Holds, witnesses: Vec::new(), note: Some(note.into()) }
    }

    pub fn fails(witnesses: Vec<Witness>, note: impl Into<String>) -> Self {
        debug_assert!(!witnesses.is_empty(), "a failing verdict needs a witness");
        Self { status: VerdictStatus::Fails, witnesses, note: Some(note.into()) }
    }

    pub fn unknown(note: impl Into<String>) -> Self {
        Self { status: VerdictStatus::Unknown, witnesses: Vec::new(), note: Some(note.into()) }
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witnesses.first()
    }
}
