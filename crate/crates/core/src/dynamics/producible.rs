use crate::model::Assembly;
use crate::model::Tas;

use super::{attachable, DynamicsError};

/// Whether `assembly` is producible from the seed.
///
/// Greedy fixed point: starting from the seed, keep adding any missing
/// placement of `assembly` that can currently attach. Bond strength at an
/// empty position only grows as tiles are added, so a placement attachable
/// at some stage stays attachable at every later stage below `assembly`;
/// hence the order of additions never matters and the greedy closure reaches
/// `assembly` exactly when some assembly sequence does.
pub fn is_producible(tas: &Tas, assembly: &Assembly) -> Result<bool, DynamicsError> {
    if !tas.seed().is_subassembly_of(assembly) {
        return Ok(false);
    }
    let mut current = tas.seed().clone();
    let mut pending: Vec<_> = assembly.iter().filter(|(p, _)| !current.contains(*p)).collect();
    loop {
        let before = pending.len();
        let mut i = 0;
        while i < pending.len() {
            let (p, t) = pending[i];
            if attachable(tas, &current, p, t)?.is_some() {
                current.insert(p, t);
                pending.swap_remove(i);
            } else {
                i += 1;
            }
        }
        if pending.is_empty() {
            return Ok(true);
        }
        if pending.len() == before {
            return Ok(false);
        }
    }
}
