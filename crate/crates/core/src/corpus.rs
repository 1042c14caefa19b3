//! The example systems shipped in `corpus/`.
//!
//! The files on disk are generated from these builders and checked against
//! them by the golden tests, so the two never drift apart.

use std::collections::BTreeSet;

use crate::model::{Assembly, Position, Tas, TileDisplay, TileSet, TileType};

fn display(color: &str, label: &str) -> TileDisplay {
    TileDisplay { color: Some(color.to_owned()), label: Some(label.to_owned()) }
}

fn build(tiles: Vec<TileType>, seed: &[(i64, i64, &str)], temperature: u32) -> Tas {
    let ts = TileSet::new(tiles);
    let seed: Assembly = seed
        .iter()
        .map(|&(x, y, name)| (Position::new(x, y), ts.id_of(name).expect("corpus seed tile exists")))
        .collect();
    Tas::new(ts, seed, temperature).expect("corpus systems are valid")
}

/// Temperature 1 ray growing east forever.
pub fn sys_line() -> Tas {
    build(
        vec![
            TileType::new("S").east("r", 1).with_display(display("#d62728", "S")),
            TileType::new("R").west("r", 1).east("r", 1).with_display(display("#1f77b4", "R")),
        ],
        &[(0, 0, "S")],
        1,
    )
}

/// Directed three-tile L: one arm east, one arm north.
pub fn sys_l() -> Tas {
    build(
        vec![
            TileType::new("S").east("e", 1).north("n", 1).with_display(display("#d62728", "S")),
            TileType::new("E").west("e", 1).with_display(display("#1f77b4", "E")),
            TileType::new("N").south("n", 1).with_display(display("#2ca02c", "N")),
        ],
        &[(0, 0, "S")],
        1,
    )
}

/// Temperature 2 cooperative 2x2 block. Both arms bind to the seed with a
/// strength 2 glue; the corner needs both of its strength 1 bonds.
pub fn sys_coop() -> Tas {
    build(
        vec![
            TileType::new("S").east("a", 2).north("b", 2).with_display(display("#d62728", "S")),
            TileType::new("A").west("a", 2).north("c", 1).with_display(display("#1f77b4", "A")),
            TileType::new("B").south("b", 2).east("d", 1).with_display(display("#2ca02c", "B")),
            TileType::new("C").south("c", 1).west("d", 1).with_display(display("#9467bd", "C")),
        ],
        &[(0, 0, "S")],
        2,
    )
}

/// Two tiles compete for the site east of the seed; each then grows a
/// different second tile, giving two terminal assemblies.
pub fn sys_nondir() -> Tas {
    build(
        vec![
            TileType::new("S").east("a", 1).with_display(display("#d62728", "S")),
            TileType::new("P").west("a", 1).north("p", 1).with_display(display("#1f77b4", "P")),
            TileType::new("Q").west("a", 1).south("q", 1).with_display(display("#ff7f0e", "Q")),
            TileType::new("U").south("p", 1).with_display(display("#2ca02c", "U")),
            TileType::new("D").north("q", 1).with_display(display("#8c564b", "D")),
        ],
        &[(0, 0, "S")],
        1,
    )
}

/// Temperature 2 builder for the `n`×`n` square with its lower-left corner
/// at the origin.
///
/// The bottom row and left column are rulers: tile `Hi`/`Vi` sits at
/// distance `i` from the seed and binds to its predecessor with a strength 2
/// glue labelled by its index, so each arm counts up to `n - 1` and stops.
/// The interior is filled by a single tile `F` that needs both its south and
/// west neighbors (two strength 1 bonds).
pub fn sys_square(n: usize) -> Tas {
    assert!(n >= 2, "square side must be at least 2");
    let mut tiles = vec![TileType::new("S").east("h1", 2).north("v1", 2).with_display(display("#d62728", "S"))];
    for i in 1..n {
        let mut h = TileType::new(format!("H{i}"))
            .west(&format!("h{i}"), 2)
            .north("f", 1)
            .with_display(display("#1f77b4", "h"));
        let mut v = TileType::new(format!("V{i}"))
            .south(&format!("v{i}"), 2)
            .east("f", 1)
            .with_display(display("#2ca02c", "v"));
        if i + 1 < n {
            h = h.east(&format!("h{}", i + 1), 2);
            v = v.north(&format!("v{}", i + 1), 2);
        }
        tiles.push(h);
        tiles.push(v);
    }
    tiles.push(
        TileType::new("F").north("f", 1).east("f", 1).south("f", 1).west("f", 1).with_display(display("#7f7f7f", "#")),
    );
    build(tiles, &[(0, 0, "S")], 2)
}

/// Separates finite from strict self-assembly of an infinite shape. Not
/// taken from any published figure; built locally for the corpus.
///
/// Target: the two-row strip `{(x, y) : x >= 0, y in {0, 1}}`. The bottom
/// row grows east forever from the seed, each site taking either `E` or
/// `K`. Above a `K` the tile `W` binds at strength 2; the upper row then
/// extends west over `E` tiles with `V`, which needs its east neighbor and
/// the weak glue on top of `E` (or the seed). Any finite assembly can place
/// a `K` further east and complete the strip, so the strip finitely
/// self-assembles. The infinite all-`E` bottom row, however, leaves the upper
/// row empty with nothing able to attach: a terminal assembly that is not
/// the strip.
pub fn sys_fsa_sep() -> Tas {
    build(
        vec![
            TileType::new("S").east("r", 2).north("n", 1).with_display(display("#d62728", "S")),
            TileType::new("E").west("r", 2).east("r", 2).north("n", 1).with_display(display("#1f77b4", "E")),
            TileType::new("K").west("r", 2).east("r", 2).north("u", 2).with_display(display("#ff7f0e", "K")),
            TileType::new("W").south("u", 2).west("v", 1).with_display(display("#2ca02c", "W")),
            TileType::new("V").south("n", 1).east("v", 1).west("v", 1).with_display(display("#9467bd", "V")),
        ],
        &[(0, 0, "S")],
        2,
    )
}

/// Membership in the target strip of [`sys_fsa_sep`].
pub fn fsa_sep_strip(p: Position) -> bool {
    p.x >= 0 && (p.y == 0 || p.y == 1)
}

pub fn l_tromino() -> BTreeSet<Position> {
    BTreeSet::from([Position::new(0, 0), Position::new(1, 0), Position::new(0, 1)])
}

pub fn square(n: usize) -> BTreeSet<Position> {
    let n = n as i64;
    (0..n).flat_map(|x| (0..n).map(move |y| Position::new(x, y))).collect()
}

pub const SQUARE_SIZES: std::ops::RangeInclusive<usize> = 4..=8;

/// Width of the strip excerpt shipped as `fsa-sep-strip.shape`.
pub const STRIP_FILE_WIDTH: i64 = 16;

/// Every tileset file of the corpus with its builder.
pub fn tilesets() -> Vec<(String, Tas)> {
    let mut out = vec![
        ("sys-line.json".to_owned(), sys_line()),
        ("sys-l.json".to_owned(), sys_l()),
        ("sys-coop.json".to_owned(), sys_coop()),
        ("sys-nondir.json".to_owned(), sys_nondir()),
        ("sys-fsa-sep.json".to_owned(), sys_fsa_sep()),
    ];
    for n in SQUARE_SIZES {
        out.push((format!("sys-square-{n}.json"), sys_square(n)));
    }
    out
}
