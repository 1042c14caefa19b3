//! Breadth-first closure of the producible assemblies of a system.
//!
//! Exploration is level-synchronous: every node of one BFS level has its
//! frontier computed (in parallel when more than one worker is requested),
//! then the results are merged in node-id order. Node ids, edges and flags
//! therefore do not depend on the number of workers.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use crate::model::{Assembly, Position, Tas};

use super::{frontier, AssemblySequence, Attachment, DynamicsError};

/// Limits that keep exploration of unbounded systems finite.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Bounds {
    pub max_tiles: Option<usize>,
    pub region: Option<BTreeSet<Position>>,
    pub max_states: Option<usize>,
}

impl Bounds {
    pub fn unbounded() -> Self {
        Self::default()
    }

    pub fn max_tiles(k: usize) -> Self {
        Self { max_tiles: Some(k), ..Self::default() }
    }

    pub fn with_max_tiles(mut self, k: usize) -> Self {
        self.max_tiles = Some(k);
        self
    }

    pub fn with_region(mut self, region: BTreeSet<Position>) -> Self {
        self.region = Some(region);
        self
    }

    pub fn with_max_states(mut self, n: usize) -> Self {
        self.max_states = Some(n);
        self
    }

    pub fn is_unbounded(&self) -> bool {
        self.max_tiles.is_none() && self.region.is_none() && self.max_states.is_none()
    }

    /// Whether growing to `size` tiles by placing at `position` stays inside
    /// the tile and region limits.
    pub fn admits(&self, position: Position, size: usize) -> bool {
        self.max_tiles.is_none_or(|k| size <= k) && self.region.as_ref().is_none_or(|r| r.contains(&position))
    }

    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        if let Some(k) = self.max_tiles {
            parts.push(format!("max_tiles={k}"));
        }
        if let Some(r) = &self.region {
            parts.push(format!("region of {} positions", r.len()));
        }
        if let Some(n) = self.max_states {
            parts.push(format!("max_states={n}"));
        }
        if parts.is_empty() {
            "no bounds".to_owned()
        } else {
            parts.join(", ")
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub assembly: Assembly,
    /// The true frontier is empty.
    pub terminal: bool,
    /// Some attachment was withheld by a bound, or the node was never
    /// expanded because exploration stopped early.
    pub truncated: bool,
    /// BFS depth: number of tiles added to the seed.
    pub depth: usize,
    /// First edge that discovered this node.
    pub parent: Option<(NodeId, Attachment)>,
    /// First withheld attachment classified as a violation, if any.
    pub(crate) violation: Option<Attachment>,
    /// Withheld by a bound or never expanded.
    pub(crate) bounded: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub source: NodeId,
    pub attachment: Attachment,
    pub target: NodeId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExplorationStatus {
    /// Every reachable node within the bounds was expanded.
    Complete,
    /// Adding another node would have exceeded `max_states`.
    StateBudgetExceeded,
    /// Stopped at the first violating attachment.
    StoppedOnViolation,
}

/// Deduplicated graph of producible assemblies under single-tile addition.
#[derive(Debug, Clone)]
pub struct AssemblyGraph {
    nodes: Vec<Node>,
    edges: Vec<Edge>,
    index: HashMap<Assembly, NodeId>,
    status: ExplorationStatus,
}

impl AssemblyGraph {
    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id.0]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn status(&self) -> ExplorationStatus {
        self.status
    }

    pub fn budget_exceeded(&self) -> bool {
        self.status == ExplorationStatus::StateBudgetExceeded
    }

    pub fn find(&self, assembly: &Assembly) -> Option<NodeId> {
        self.index.get(assembly).copied()
    }

    pub fn ids(&self) -> impl Iterator<Item = NodeId> {
        (0..self.nodes.len()).map(NodeId)
    }

    pub fn terminals(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.ids().filter(|&id| self.nodes[id.0].terminal)
    }

    pub fn truncated_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.truncated).count()
    }

    /// True when the graph is exactly the producible set: nothing withheld,
    /// nothing left unexpanded.
    pub fn is_exhaustive(&self) -> bool {
        self.status == ExplorationStatus::Complete && self.nodes.iter().all(|n| !n.truncated)
    }

    /// Like [`Self::is_exhaustive`] but tolerating attachments withheld as
    /// violations: every admissible attachment was followed.
    pub(crate) fn is_exhaustive_within_gate(&self) -> bool {
        self.status == ExplorationStatus::Complete && self.nodes.iter().all(|n| !n.bounded)
    }

    /// Lowest-id node that withheld a violating attachment.
    pub(crate) fn first_violation(&self) -> Option<(NodeId, Attachment)> {
        self.ids().find_map(|id| self.nodes[id.0].violation.map(|v| (id, v)))
    }

    /// Assembly sequence from the seed to `id` along discovery edges.
    pub fn trace_to(&self, id: NodeId) -> AssemblySequence {
        let mut steps = Vec::new();
        let mut cur = id;
        while let Some((parent, att)) = self.nodes[cur.0].parent {
            steps.push(att);
            cur = parent;
        }
        steps.reverse();
        AssemblySequence { start: self.nodes[cur.0].assembly.clone(), steps }
    }

    pub fn successors(&self) -> Vec<Vec<NodeId>> {
        let mut out = vec![Vec::new(); self.nodes.len()];
        for e in &self.edges {
            out[e.source.0].push(e.target);
        }
        out
    }

    pub fn predecessors(&self) -> Vec<Vec<NodeId>> {
        let mut out = vec![Vec::new(); self.nodes.len()];
        for e in &self.edges {
            out[e.target.0].push(e.source);
        }
        out
    }
}

/// How exploration treats one candidate attachment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Gate {
    Admit,
    /// Withheld by an exploration limit.
    Bound,
    /// Withheld because taking it would break the property being checked.
    Violation,
}

pub(crate) struct Explorer<'a, G> {
    pub tas: &'a Tas,
    pub gate: G,
    pub max_states: Option<usize>,
    pub stop_on_violation: bool,
    pub jobs: Option<usize>,
}

struct Expansion {
    frontier: Vec<(Attachment, Gate, Option<Assembly>)>,
}

impl<G> Explorer<'_, G>
where
    G: Fn(&Attachment, usize) -> Gate + Sync,
{
    fn expand(&self, assembly: &Assembly) -> Result<Expansion, DynamicsError> {
        let size = assembly.len() + 1;
        let frontier = frontier(self.tas, assembly)?
            .into_iter()
            .map(|att| {
                let gate = (self.gate)(&att, size);
                let child = (gate == Gate::Admit).then(|| assembly.clone().with(att.position, att.tile));
                (att, gate, child)
            })
            .collect();
        Ok(Expansion { frontier })
    }

    fn expand_level(&self, nodes: &[Node], level: &[NodeId]) -> Result<Vec<Expansion>, DynamicsError> {
        let work = || -> Result<Vec<Expansion>, DynamicsError> {
            level.par_iter().map(|id| self.expand(&nodes[id.0].assembly)).collect()
        };
        match self.jobs {
            Some(1) => level.iter().map(|id| self.expand(&nodes[id.0].assembly)).collect(),
            Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n).build().expect("thread pool").install(work),
            None => work(),
        }
    }

    pub fn run(&self) -> Result<AssemblyGraph, DynamicsError> {
        let seed = self.tas.seed().clone();
        let mut graph = AssemblyGraph {
            nodes: vec![Node {
                assembly: seed.clone(),
                terminal: false,
                truncated: false,
                depth: 0,
                parent: None,
                violation: None,
                bounded: false,
            }],
            edges: Vec::new(),
            index: HashMap::from([(seed, NodeId(0))]),
            status: ExplorationStatus::Complete,
        };

        let mut level = vec![NodeId(0)];
        'outer: while !level.is_empty() {
            let expansions = self.expand_level(&graph.nodes, &level)?;
            let mut next = Vec::new();
            for (k, (&id, expansion)) in level.iter().zip(expansions).enumerate() {
                let depth = graph.nodes[id.0].depth;
                graph.nodes[id.0].terminal = expansion.frontier.is_empty();
                for (att, gate, child) in expansion.frontier {
                    match gate {
                        Gate::Bound => {
                            let node = &mut graph.nodes[id.0];
                            node.truncated = true;
                            node.bounded = true;
                        }
                        Gate::Violation => {
                            let node = &mut graph.nodes[id.0];
                            node.truncated = true;
                            node.violation.get_or_insert(att);
                        }
                        Gate::Admit => {
                            let child = child.expect("admitted attachments carry their child");
                            let target = match graph.index.get(&child) {
                                Some(&t) => t,
                                None => {
                                    if self.max_states.is_some_and(|m| graph.nodes.len() >= m) {
                                        graph.status = ExplorationStatus::StateBudgetExceeded;
                                        graph.nodes[id.0].truncated = true;
                                        graph.nodes[id.0].bounded = true;
                                        mark_unexpanded(&mut graph, &level[k + 1..], &next);
                                        break 'outer;
                                    }
                                    let t = NodeId(graph.nodes.len());
                                    graph.index.insert(child.clone(), t);
                                    graph.nodes.push(Node {
                                        assembly: child,
                                        terminal: false,
                                        truncated: false,
                                        depth: depth + 1,
                                        parent: Some((id, att)),
                                        violation: None,
                                        bounded: false,
                                    });
                                    next.push(t);
                                    t
                                }
                            };
                            graph.edges.push(Edge { source: id, attachment: att, target });
                        }
                    }
                }
                if self.stop_on_violation && graph.nodes[id.0].violation.is_some() {
                    graph.status = ExplorationStatus::StoppedOnViolation;
                    mark_unexpanded(&mut graph, &level[k + 1..], &next);
                    break 'outer;
                }
            }
            level = next;
        }
        Ok(graph)
    }
}

fn mark_unexpanded(graph: &mut AssemblyGraph, rest: &[NodeId], next: &[NodeId]) {
    for id in rest.iter().chain(next) {
        graph.nodes[id.0].truncated = true;
        graph.nodes[id.0].bounded = true;
    }
}

/// Explores every producible assembly reachable within `bounds`.
///
/// Frontiers are computed on rayon's global pool. If `max_states` would be
/// exceeded the partial graph is returned with
/// [`ExplorationStatus::StateBudgetExceeded`] and its unexpanded nodes
/// flagged truncated.
pub fn enumerate(tas: &Tas, bounds: &Bounds) -> Result<AssemblyGraph, DynamicsError> {
    explore(tas, bounds, None)
}

/// [`enumerate`] on a dedicated pool of `jobs` workers. The result is
/// identical for every worker count.
pub fn enumerate_with_jobs(tas: &Tas, bounds: &Bounds, jobs: usize) -> Result<AssemblyGraph, DynamicsError> {
    explore(tas, bounds, Some(jobs.max(1)))
}

fn explore(tas: &Tas, bounds: &Bounds, jobs: Option<usize>) -> Result<AssemblyGraph, DynamicsError> {
    Explorer {
        tas,
        gate: |att: &Attachment, size: usize| {
            if bounds.admits(att.position, size) {
                Gate::Admit
            } else {
                Gate::Bound
            }
        },
        max_states: bounds.max_states,
        stop_on_violation: false,
        jobs,
    }
    .run()
}
