use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::{Assembly, Tas};

use super::{attach_in_place, frontier, Attachment, DynamicsError, ReplayError};

/// A finite assembly sequence: a starting assembly and the tiles added to it
/// one at a time.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AssemblySequence {
    pub start: Assembly,
    pub steps: Vec<Attachment>,
}

impl AssemblySequence {
    pub fn new(start: Assembly) -> Self {
        Self { start, steps: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// The result of a sequence: the seed with every step applied in order.
pub fn replay(tas: &Tas, sequence: &AssemblySequence) -> Result<Assembly, ReplayError> {
    if &sequence.start != tas.seed() {
        return Err(ReplayError::StartMismatch);
    }
    let mut current = sequence.start.clone();
    for (index, step) in sequence.steps.iter().enumerate() {
        attach_in_place(tas, &mut current, step).map_err(|source| ReplayError::Step { index, source })?;
    }
    // The result must contain every stage. Stages only ever gain tiles, so it
    // is enough that each placement survives and the sizes add up.
    debug_assert!(sequence.start.is_subassembly_of(&current));
    debug_assert_eq!(current.len(), sequence.start.len() + sequence.steps.len());
    debug_assert!(sequence.steps.iter().all(|s| current.get(s.position) == Some(s.tile)));
    Ok(current)
}

/// Every stage of the sequence, from the seed (index 0) to the result.
pub fn replay_stages(tas: &Tas, sequence: &AssemblySequence) -> Result<Vec<Assembly>, ReplayError> {
    if &sequence.start != tas.seed() {
        return Err(ReplayError::StartMismatch);
    }
    let mut stages = Vec::with_capacity(sequence.steps.len() + 1);
    let mut current = sequence.start.clone();
    stages.push(current.clone());
    for (index, step) in sequence.steps.iter().enumerate() {
        attach_in_place(tas, &mut current, step).map_err(|source| ReplayError::Step { index, source })?;
        stages.push(current.clone());
    }
    Ok(stages)
}

/// Grows the seed by repeatedly picking a uniformly random frontier entry.
///
/// Randomness comes only from `rng_seed`, which seeds a ChaCha8 stream
/// (`rand_chacha::ChaCha8Rng::seed_from_u64`); each step draws an index with
/// `Rng::random_range(0..frontier_len)`. Stops when the frontier is empty or
/// after `max_steps` steps.
pub fn random_sequence(tas: &Tas, rng_seed: u64, max_steps: usize) -> Result<AssemblySequence, DynamicsError> {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut sequence = AssemblySequence::new(tas.seed().clone());
    let mut current = tas.seed().clone();
    while sequence.steps.len() < max_steps {
        let options = frontier(tas, &current)?;
        if options.is_empty() {
            break;
        }
        let pick = options[rng.random_range(0..options.len())];
        current.insert(pick.position, pick.tile);
        sequence.steps.push(pick);
    }
    Ok(sequence)
}
