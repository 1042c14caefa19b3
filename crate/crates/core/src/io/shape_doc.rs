//! Shape documents, in either of two encodings:
//!
//! ```json
//! {"schema_version": 1, "points": [{"x": 0, "y": 0}, {"x": 1, "y": 0}]}
//! {"schema_version": 1, "origin": {"x": 0, "y": 0}, "grid": ["#.", "@#"]}
//! ```
//!
//! Grid rows run from top (largest y) to bottom. `#` is in the shape, `.` is
//! not. Exactly one anchor cell marks the position given by `origin`
//! (default `(0, 0)`): `@` for an anchor inside the shape, `+` for one
//! outside it.

use std::collections::BTreeSet;

use serde::Deserialize;

use crate::model::Position;

use super::{check_version, LoadError, SCHEMA_VERSION};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ShapeDocument {
    schema_version: u32,
    #[serde(default)]
    points: Option<Vec<Position>>,
    #[serde(default)]
    origin: Option<Position>,
    #[serde(default)]
    grid: Option<Vec<String>>,
}

pub fn parse_shape_points(bytes: &[u8]) -> Result<BTreeSet<Position>, LoadError> {
    let doc: ShapeDocument = serde_json::from_slice(bytes)?;
    check_version(doc.schema_version)?;
    match (doc.points, doc.grid) {
        (Some(points), None) => {
            if doc.origin.is_some() {
                return Err(LoadError::field("origin", "only meaningful together with \"grid\""));
            }
            let n = points.len();
            let set: BTreeSet<Position> = points.into_iter().collect();
            if set.len() != n {
                return Err(LoadError::field("points", "lists a position more than once"));
            }
            Ok(set)
        }
        (None, Some(grid)) => decode_grid(&grid, doc.origin.unwrap_or(Position::ORIGIN)),
        (Some(_), Some(_)) => Err(LoadError::field("points", "give either \"points\" or \"grid\", not both")),
        (None, None) => Err(LoadError::field("points", "one of \"points\" or \"grid\" is required")),
    }
}

fn decode_grid(rows: &[String], origin: Position) -> Result<BTreeSet<Position>, LoadError> {
    let mut anchor = None;
    let mut cells = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        for (c, ch) in row.chars().enumerate() {
            let (row_i, col_i) = (r as i64, c as i64);
            match ch {
                '#' => cells.push((row_i, col_i)),
                '.' => {}
                '@' | '+' => {
                    if anchor.is_some() {
                        return Err(LoadError::field(format!("grid[{r}]"), "more than one anchor cell"));
                    }
                    anchor = Some((row_i, col_i));
                    if ch == '@' {
                        cells.push((row_i, col_i));
                    }
                }
                other => {
                    return Err(LoadError::field(
                        format!("grid[{r}]"),
                        format!("unexpected character {other:?} in column {c}"),
                    ))
                }
            }
        }
    }
    let (ar, ac) = anchor.ok_or_else(|| LoadError::field("grid", "no anchor cell ('@' or '+')"))?;
    Ok(cells.into_iter().map(|(r, c)| Position::new(origin.x + (c - ac), origin.y + (ar - r))).collect())
}

pub fn write_shape_points(points: &BTreeSet<Position>) -> String {
    let mut s = format!("{{\n  \"schema_version\": {SCHEMA_VERSION},\n  \"points\": [\n");
    let n = points.len();
    for (i, p) in points.iter().enumerate() {
        s.push_str(&format!("    {{\"x\":{},\"y\":{}}}", p.x, p.y));
        s.push_str(if i + 1 < n { ",\n" } else { "\n" });
    }
    s.push_str("  ]\n}\n");
    s
}

/// Grid encoding anchored at the origin. The grid spans the bounding box of
/// the points and the origin.
pub fn write_shape_grid(points: &BTreeSet<Position>) -> String {
    let o = Position::ORIGIN;
    let (mut lo, mut hi) = (o, o);
    for p in points {
        lo = Position::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Position::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    let mut rows = Vec::new();
    for y in (lo.y..=hi.y).rev() {
        let row: String = (lo.x..=hi.x)
            .map(|x| {
                let p = Position::new(x, y);
                match (p == o, points.contains(&p)) {
                    (true, true) => '@',
                    (true, false) => '+',
                    (false, true) => '#',
                    (false, false) => '.',
                }
            })
            .collect();
        rows.push(format!("    \"{row}\""));
    }
    format!(
        "{{\n  \"schema_version\": {SCHEMA_VERSION},\n  \"origin\": {{\"x\":0,\"y\":0}},\n  \"grid\": [\n{}\n  ]\n}}\n",
        rows.join(",\n")
    )
}
