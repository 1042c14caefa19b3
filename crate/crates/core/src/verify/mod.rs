//! Decision procedures over the explored state space: directedness, strict
//! self-assembly and finite self-assembly of target shapes.
//!
//! Every answer is three-valued. `Holds` is only reported when the explored
//! graph is the whole producible set (or, for shapes, the whole producible
//! set inside the shape); `Fails` always comes with a replayable witness and
//! is never retracted by larger bounds; anything else is `Unknown` with a
//! note naming the bound that was hit.

mod shape;
mod verdict;

use std::collections::BTreeSet;

use crate::dynamics::{AssemblyGraph, Attachment, Bounds, DynamicsError, Explorer, Gate, NodeId};
use crate::model::{Position, Tas};

pub use shape::{shape_of, Membership, Shape, ShapeError};
pub use verdict::{Verdict, VerdictStatus, Witness, WitnessKind};

/// Verification settings shared by every check.
#[derive(Debug, Clone, Copy, Default)]
pub struct Verifier {
    /// Worker count for exploration; `None` uses rayon's global pool.
    pub jobs: Option<usize>,
}

pub fn is_directed(tas: &Tas, bounds: &Bounds) -> Result<Verdict, DynamicsError> {
    Verifier::default().is_directed(tas, bounds)
}

pub fn self_assembles(tas: &Tas, shape: &Shape, bounds: &Bounds) -> Result<Verdict, DynamicsError> {
    Verifier::default().self_assembles(tas, shape, bounds)
}

pub fn finitely_self_assembles(tas: &Tas, shape: &Shape, bounds: &Bounds) -> Result<Verdict, DynamicsError> {
    Verifier::default().finitely_self_assembles(tas, shape, bounds)
}

impl Verifier {
    pub fn with_jobs(jobs: usize) -> Self {
        Self { jobs: Some(jobs.max(1)) }
    }

    fn enumerate(&self, tas: &Tas, bounds: &Bounds) -> Result<AssemblyGraph, DynamicsError> {
        match self.jobs {
            Some(n) => crate::dynamics::enumerate_with_jobs(tas, bounds, n),
            None => crate::dynamics::enumerate(tas, bounds),
        }
    }

    /// Exactly one terminal assembly.
    pub fn is_directed(&self, tas: &Tas, bounds: &Bounds) -> Result<Verdict, DynamicsError> {
        let graph = self.enumerate(tas, bounds)?;
        let terminals: Vec<NodeId> = graph.terminals().collect();
        let summary = format!("{} terminal assemblies among {} explored", terminals.len(), graph.len());
        if terminals.len() >= 2 {
            let witnesses = terminals[..2]
                .iter()
                .map(|&id| node_witness(&graph, id, WitnessKind::DistinctTerminal, None))
                .collect();
            return Ok(Verdict::fails(witnesses, summary));
        }
        if !graph.is_exhaustive() {
            return Ok(Verdict::unknown(format!("exploration truncated ({}); {summary}", bounds.describe())));
        }
        if terminals.len() == 1 {
            Ok(Verdict::holds(summary))
        } else {
            // a finite exhaustive graph always has a sink
            Ok(Verdict::unknown(format!("no terminal assembly found; {summary}")))
        }
    }

    /// Every producible terminal assembly occupies exactly the shape.
    ///
    /// Exploration is confined to the shape and stops at the first tile
    /// placed outside it: tiles never detach, so such a placement is already
    /// a counterexample, and confinement makes finite shapes exact.
    pub fn self_assembles(&self, tas: &Tas, shape: &Shape, bounds: &Bounds) -> Result<Verdict, DynamicsError> {
        if let Some(w) = seed_outside(tas, shape) {
            return Ok(Verdict::fails(vec![w], "seed places a tile outside the shape"));
        }
        let graph = self.explore_in_shape(tas, shape, bounds, true)?;
        if let Some(w) = violation_witness(&graph) {
            let p = w.position.expect("outside placements carry a position");
            return Ok(Verdict::fails(vec![w], format!("tile placed outside the shape at {p}")));
        }

        let target = shape.target_points();
        let mismatch = graph.terminals().find(|&id| graph.node(id).assembly.domain() != target);
        if let Some(id) = mismatch {
            let domain = graph.node(id).assembly.domain();
            let missing = target.iter().find(|p| !domain.contains(p)).copied();
            let w = node_witness(&graph, id, WitnessKind::TerminalMismatch, missing);
            return Ok(Verdict::fails(vec![w], "a terminal assembly does not cover the shape"));
        }

        let terminals = graph.terminals().count();
        if !graph.is_exhaustive_within_gate() {
            return Ok(Verdict::unknown(format!(
                "exploration truncated ({}{}); {terminals} terminal assemblies found, all matching",
                bounds.describe(),
                window_note(shape)
            )));
        }
        if !shape.is_finite() {
            return Ok(Verdict::unknown(format!(
                "holds within the window: all {terminals} terminal assemblies cover the shape there"
            )));
        }
        Ok(Verdict::holds(format!(
            "all {terminals} terminal assemblies among {} producible cover the shape",
            graph.len()
        )))
    }

    /// Every finite producible assembly can still grow into one occupying
    /// exactly the shape.
    ///
    /// Runs on the assembly graph confined to the shape: nodes that cannot
    /// reach a complete node are found by marking backwards from the complete
    /// nodes.
    pub fn finitely_self_assembles(&self, tas: &Tas, shape: &Shape, bounds: &Bounds) -> Result<Verdict, DynamicsError> {
        if let Some(w) = seed_outside(tas, shape) {
            return Ok(Verdict::fails(vec![w], "seed places a tile outside the shape"));
        }
        let graph = self.explore_in_shape(tas, shape, bounds, false)?;
        let target = shape.target_points();
        let can_complete = backward_marks(&graph, &target);
        let exact = graph.is_exhaustive_within_gate();

        // Assemblies that cannot complete. A terminal one can never grow, so it
        // is a counterexample even in a truncated graph.
        let stuck = graph.ids().find(|&id| !can_complete[id.0] && (exact || graph.node(id).terminal));
        if let Some(id) = stuck {
            let at = graph.node(id).parent.map(|(_, a)| a.position);
            let w = node_witness(&graph, id, WitnessKind::CannotComplete, at);
            return Ok(Verdict::fails(vec![w], "a producible assembly can no longer grow into the shape"));
        }
        if let Some(w) = violation_witness(&graph) {
            let p = w.position.expect("outside placements carry a position");
            return Ok(Verdict::fails(vec![w], format!("tile placed outside the shape at {p}")));
        }

        if !exact {
            let open = can_complete.iter().filter(|c| !**c).count();
            return Ok(Verdict::unknown(format!(
                "exploration truncated ({}{}); {open} explored assemblies not yet shown to complete",
                bounds.describe(),
                window_note(shape)
            )));
        }
        if !shape.is_finite() {
            return Ok(Verdict::unknown(format!(
                "holds within the window: all {} producible assemblies there can complete it",
                graph.len()
            )));
        }
        Ok(Verdict::holds(format!("all {} producible assemblies can grow into the shape", graph.len())))
    }

    fn explore_in_shape(
        &self,
        tas: &Tas,
        shape: &Shape,
        bounds: &Bounds,
        stop_on_violation: bool,
    ) -> Result<AssemblyGraph, DynamicsError> {
        Explorer {
            tas,
            gate: |att: &Attachment, size: usize| match shape.membership(att.position) {
                Membership::Outside => Gate::Violation,
                Membership::Unknown => Gate::Bound,
                Membership::Inside if bounds.admits(att.position, size) => Gate::Admit,
                Membership::Inside => Gate::Bound,
            },
            max_states: bounds.max_states,
            stop_on_violation,
            jobs: self.jobs,
        }
        .run()
    }
}

fn window_note(shape: &Shape) -> &'static str {
    if shape.is_finite() {
        ""
    } else {
        ", window"
    }
}

fn seed_outside(tas: &Tas, shape: &Shape) -> Option<Witness> {
    let p = tas.seed().positions().find(|&p| shape.membership(p) == Membership::Outside)?;
    Some(Witness {
        kind: WitnessKind::OutsidePlacement,
        assembly: tas.seed().clone(),
        trace: crate::dynamics::AssemblySequence::new(tas.seed().clone()),
        position: Some(p),
    })
}

fn node_witness(graph: &AssemblyGraph, id: NodeId, kind: WitnessKind, position: Option<Position>) -> Witness {
    Witness { kind, assembly: graph.node(id).assembly.clone(), trace: graph.trace_to(id), position }
}

/// The first outside placement, as a witness that ends with the offending
/// tile attached.
fn violation_witness(graph: &AssemblyGraph) -> Option<Witness> {
    let (id, att) = graph.first_violation()?;
    let mut trace = graph.trace_to(id);
    trace.steps.push(att);
    Some(Witness {
        kind: WitnessKind::OutsidePlacement,
        assembly: graph.node(id).assembly.clone().with(att.position, att.tile),
        trace,
        position: Some(att.position),
    })
}

/// `marks[i]` is true when node `i` reaches, along graph edges, a node whose
/// domain is exactly `target`.
fn backward_marks(graph: &AssemblyGraph, target: &BTreeSet<Position>) -> Vec<bool> {
    let preds = graph.predecessors();
    let mut marks = vec![false; graph.len()];
    let mut stack: Vec<NodeId> = graph
        .ids()
        .filter(|&id| {
            let a = &graph.node(id).assembly;
            a.len() == target.len() && a.positions().all(|p| target.contains(&p))
        })
        .collect();
    for id in &stack {
        marks[id.0] = true;
    }
    while let Some(id) = stack.pop() {
        for &p in &preds[id.0] {
            if !marks[p.0] {
                marks[p.0] = true;
                stack.push(p);
            }
        }
    }
    marks
}
