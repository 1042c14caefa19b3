//! Shared test helpers: brute-force oracles and random system generators.
//!
//! The oracles here deliberately avoid the library's own machinery (no
//! binding graph, no min-cut, no frontier): they work from raw glue values
//! and exhaustive enumeration.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use atam_core::model::{glue_interaction, Assembly, Direction, Glue, Position, Tas, TileId, TileSet, TileType};
use atam_core::verify::Shape;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

pub fn corpus_file(name: &str) -> Vec<u8> {
    std::fs::read(corpus_dir().join(name)).unwrap_or_else(|e| panic!("reading corpus/{name}: {e}"))
}

pub fn load(name: &str) -> Tas {
    atam_core::io::parse_tileset(&corpus_file(name)).expect("corpus tileset parses")
}

/// Bond strength between two placed tiles, straight from their glues.
fn bond(ts: &TileSet, a: (Position, TileId), b: (Position, TileId)) -> u64 {
    let (pa, ta) = a;
    let (pb, tb) = b;
    let side = Direction::ALL.into_iter().find(|&d| {
        let (dx, dy) = d.offset();
        pa.x + dx == pb.x && pa.y + dy == pb.y
    });
    match side {
        None => 0,
        Some(d) => {
            let ga = ts.get(ta).unwrap().glue(d);
            let gb = ts.get(tb).unwrap().glue(d.opposite());
            u64::from(glue_interaction(ga, gb))
        }
    }
}

/// Minimum total bond strength across any split of the assembly into two
/// nonempty parts, by trying all `2^n - 2` bipartitions. `None` below two
/// tiles.
pub fn brute_min_cut(assembly: &Assembly, ts: &TileSet) -> Option<u64> {
    let tiles: Vec<(Position, TileId)> = assembly.iter().collect();
    let n = tiles.len();
    if n < 2 {
        return None;
    }
    assert!(n <= 16, "brute force is exponential");
    let mut best = u64::MAX;
    for mask in 1u32..(1 << n) - 1 {
        let mut w = 0;
        for i in 0..n {
            for j in i + 1..n {
                if (mask >> i & 1) != (mask >> j & 1) {
                    w += bond(ts, tiles[i], tiles[j]);
                }
            }
        }
        best = best.min(w);
    }
    Some(best)
}

pub fn brute_stable(assembly: &Assembly, ts: &TileSet, temperature: u32) -> bool {
    brute_min_cut(assembly, ts).is_none_or(|c| c >= u64::from(temperature))
}

/// Every (position, tile) that binds to `assembly` with at least the
/// temperature, checking every empty cell next to an occupied one against
/// every tile type.
pub fn brute_frontier(tas: &Tas, assembly: &Assembly) -> BTreeSet<(Position, TileId)> {
    let ts = tas.tileset();
    let mut cells = BTreeSet::new();
    for p in assembly.positions() {
        for (dx, dy) in [(0, 1), (1, 0), (0, -1), (-1, 0)] {
            let q = Position::new(p.x + dx, p.y + dy);
            if !assembly.contains(q) {
                cells.insert(q);
            }
        }
    }
    let mut out = BTreeSet::new();
    for p in cells {
        for t in ts.ids() {
            let total: u64 = [(0, 1), (1, 0), (0, -1), (-1, 0)]
                .into_iter()
                .map(|(dx, dy)| Position::new(p.x + dx, p.y + dy))
                .filter_map(|q| assembly.get(q).map(|u| bond(ts, (p, t), (q, u))))
                .sum();
            if total >= u64::from(tas.temperature()) {
                out.insert((p, t));
            }
        }
    }
    out
}

/// All producible assemblies by naive depth-first search over
/// [`brute_frontier`], or `None` if more than `cap` are found.
pub fn brute_producible(tas: &Tas, cap: usize) -> Option<BTreeSet<Assembly>> {
    let mut seen = BTreeSet::from([tas.seed().clone()]);
    let mut stack = vec![tas.seed().clone()];
    while let Some(a) = stack.pop() {
        for (p, t) in brute_frontier(tas, &a) {
            let b = a.clone().with(p, t);
            if seen.insert(b.clone()) {
                if seen.len() > cap {
                    return None;
                }
                stack.push(b);
            }
        }
    }
    Some(seen)
}

/// A random tile set over a small glue alphabet with consistent strengths.
/// No tile carries the same label on opposite sides, which rules out the
/// simplest unbounded rays.
pub fn random_tileset(rng: &mut ChaCha8Rng, tiles: usize, labels: usize, max_strength: u32, null_bias: f64) -> TileSet {
    let strengths: BTreeMap<usize, u32> = (0..labels).map(|l| (l, rng.random_range(1..=max_strength))).collect();
    let mut out = Vec::new();
    for i in 0..tiles {
        let mut t = TileType::new(format!("t{i}"));
        let mut chosen: [Option<usize>; 4] = [None; 4];
        for d in Direction::ALL {
            if rng.random_bool(null_bias) {
                continue;
            }
            let l = rng.random_range(0..labels);
            if chosen[d.opposite().index()] == Some(l) {
                continue;
            }
            chosen[d.index()] = Some(l);
            t = t.with_glue(d, Glue::new(format!("g{l}"), strengths[&l]));
        }
        out.push(t);
    }
    TileSet::new(out)
}

/// A random assembly of up to `max_tiles` tiles inside a `box_size` square.
pub fn random_assembly(rng: &mut ChaCha8Rng, ts: &TileSet, max_tiles: usize, box_size: i64) -> Assembly {
    let n = rng.random_range(0..=max_tiles);
    let mut a = Assembly::new();
    for _ in 0..n {
        let p = Position::new(rng.random_range(0..box_size), rng.random_range(0..box_size));
        let t = TileId(rng.random_range(0..ts.len() as u32));
        a.insert(p, t);
    }
    a
}

/// A random valid single-seed system whose producible set stays small
/// enough to enumerate: at most `cap` producible assemblies. Systems that
/// cannot grow at all are mostly skipped.
pub fn random_small_tas(rng: &mut ChaCha8Rng, cap: usize) -> (Tas, BTreeSet<Assembly>) {
    loop {
        let temperature = rng.random_range(1..=2);
        let tiles = rng.random_range(3..=6);
        let ts = random_tileset(rng, tiles, 4, 2, 0.35);
        let seed = Assembly::singleton(Position::ORIGIN, TileId(0));
        let Ok(tas) = Tas::new(ts, seed, temperature) else { continue };
        if brute_frontier(&tas, tas.seed()).is_empty() && rng.random_bool(0.9) {
            continue;
        }
        if let Some(all) = brute_producible(&tas, cap) {
            return (tas, all);
        }
    }
}

/// Producible assemblies with an empty naive frontier.
pub fn terminals(tas: &Tas, all: &BTreeSet<Assembly>) -> Vec<Assembly> {
    all.iter().filter(|a| brute_frontier(tas, a).is_empty()).cloned().collect()
}

/// Candidate target shapes: terminal and random producible domains, and
/// each of those grown or shrunk by one cell.
pub fn candidate_shapes(rng: &mut ChaCha8Rng, tas: &Tas, all: &BTreeSet<Assembly>) -> Vec<BTreeSet<Position>> {
    let mut base: Vec<BTreeSet<Position>> = terminals(tas, all).iter().map(|t| t.domain()).collect();
    let nodes: Vec<&Assembly> = all.iter().collect();
    base.push(nodes[rng.random_range(0..nodes.len())].domain());
    let mut out = BTreeSet::new();
    for d in base {
        let cells: Vec<Position> = d.iter().copied().collect();
        let c = cells[rng.random_range(0..cells.len())];
        let grown: BTreeSet<Position> = d
            .iter()
            .copied()
            .chain([Position::new(c.x + rng.random_range(-1..=1), c.y + rng.random_range(-1..=1))])
            .collect();
        let mut shrunk = d.clone();
        shrunk.remove(&cells[rng.random_range(0..cells.len())]);
        out.extend([d, grown, shrunk]);
    }
    out.into_iter().filter(|x| Shape::finite(x.iter().copied()).is_ok()).collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
