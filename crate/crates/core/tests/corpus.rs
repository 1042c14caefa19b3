//! Golden tests for the shipped corpus. Run with `UPDATE_GOLDEN=1` to
//! regenerate the files from the builders in `atam_core::corpus`.

mod support;

use std::collections::BTreeSet;

use atam_core::corpus::{self, SQUARE_SIZES, STRIP_FILE_WIDTH};
use atam_core::io::{parse_shape_points, parse_tileset, write_shape_grid, write_shape_points, write_tileset};
use atam_core::model::{validate_tas, Position};
use atam_core::verify::Shape;

fn expected_files() -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> =
        corpus::tilesets().into_iter().map(|(name, tas)| (name, write_tileset(&tas))).collect();
    out.push(("l-tromino.shape".into(), write_shape_grid(&corpus::l_tromino())));
    out.push(("l-tromino.points.shape".into(), write_shape_points(&corpus::l_tromino())));
    for n in SQUARE_SIZES {
        out.push((format!("square-{n}.shape"), write_shape_grid(&corpus::square(n))));
    }
    let strip = Shape::rectangle(Position::ORIGIN, STRIP_FILE_WIDTH, 2);
    out.push(("fsa-sep-strip.shape".into(), write_shape_grid(&strip)));
    out
}

#[test]
fn corpus_files_match_builders() {
    let dir = support::corpus_dir();
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for (name, contents) in expected_files() {
        let path = dir.join(&name);
        if update {
            std::fs::write(&path, &contents).unwrap();
            continue;
        }
        let on_disk = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(on_disk, contents, "{name} is stale; rerun with UPDATE_GOLDEN=1");
    }
}

#[test]
fn corpus_tilesets_validate_clean_and_round_trip() {
    for (name, tas) in corpus::tilesets() {
        let parsed = parse_tileset(&support::corpus_file(&name)).unwrap();
        assert!(validate_tas(&parsed).is_empty(), "{name}");
        assert_eq!(parsed, tas, "{name}");
        assert_eq!(write_tileset(&parsed), write_tileset(&tas), "{name}");
    }
}

#[test]
fn both_shape_encodings_agree() {
    let grid = parse_shape_points(&support::corpus_file("l-tromino.shape")).unwrap();
    let points = parse_shape_points(&support::corpus_file("l-tromino.points.shape")).unwrap();
    assert_eq!(grid, points);
    assert_eq!(grid, corpus::l_tromino());
    for n in SQUARE_SIZES {
        let grid = parse_shape_points(&support::corpus_file(&format!("square-{n}.shape"))).unwrap();
        assert_eq!(parse_shape_points(write_shape_points(&grid).as_bytes()).unwrap(), grid);
        assert_eq!(grid.len(), n * n);
    }
}

#[test]
fn strip_file_is_the_strip_restricted_to_its_window() {
    let pts = parse_shape_points(&support::corpus_file("fsa-sep-strip.shape")).unwrap();
    let expected: BTreeSet<Position> = (0..STRIP_FILE_WIDTH)
        .flat_map(|x| [Position::new(x, 0), Position::new(x, 1)])
        .filter(|&p| corpus::fsa_sep_strip(p))
        .collect();
    assert_eq!(pts, expected);
}

#[test]
fn coop_file_has_four_tiles_at_temperature_two() {
    let tas = support::load("sys-coop.json");
    assert_eq!(tas.temperature(), 2);
    assert_eq!(tas.tileset().len(), 4);
}
