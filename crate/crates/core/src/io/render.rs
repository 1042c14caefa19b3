use std::fmt::Write;
use std::str::FromStr;

use crate::model::{Assembly, Direction, Position, TileId, TileSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

impl FromStr for RenderFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ascii" => Ok(RenderFormat::Ascii),
            "svg" => Ok(RenderFormat::Svg),
            other => Err(format!("unknown render format {other:?} (expected ascii or svg)")),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AsciiStyle {
    /// Wrap cells in 24-bit ANSI color escapes taken from the tile display
    /// color. Callers should leave this off when `NO_COLOR` is set.
    pub color: bool,
}

pub fn render(assembly: &Assembly, ts: &TileSet, format: RenderFormat) -> String {
    match format {
        RenderFormat::Ascii => render_ascii(assembly, ts, AsciiStyle::default()),
        RenderFormat::Svg => render_svg(assembly, ts),
    }
}

/// Frame covering the assembly and the origin.
fn frame(assembly: &Assembly) -> (Position, Position) {
    let o = Position::ORIGIN;
    match assembly.bounding_box() {
        None => (o, o),
        Some((lo, hi)) => (Position::new(lo.x.min(0), lo.y.min(0)), Position::new(hi.x.max(0), hi.y.max(0))),
    }
}

fn hex_color(s: &str) -> Option<(u8, u8, u8)> {
    let h = s.strip_prefix('#')?;
    if h.len() != 6 {
        return None;
    }
    let v = u32::from_str_radix(h, 16).ok()?;
    Some(((v >> 16) as u8, (v >> 8) as u8, v as u8))
}

const PALETTE: [&str; 8] = ["#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5"];

fn fill_color(ts: &TileSet, id: TileId) -> String {
    let declared =
        ts.get(id).and_then(|t| t.display.as_ref()).and_then(|d| d.color.as_deref()).filter(|c| hex_color(c).is_some());
    match declared {
        Some(c) => c.to_owned(),
        None => PALETTE[id.index() % PALETTE.len()].to_owned(),
    }
}

/// One character per lattice cell, rows from top (largest y) to bottom,
/// `.` for empty cells. The frame always includes the origin.
pub fn render_ascii(assembly: &Assembly, ts: &TileSet, style: AsciiStyle) -> String {
    let (lo, hi) = frame(assembly);
    let mut out = String::new();
    for y in (lo.y..=hi.y).rev() {
        for x in lo.x..=hi.x {
            match assembly.get(Position::new(x, y)) {
                None => out.push('.'),
                Some(id) => {
                    let ch = ts.get(id).map(|t| t.short_label()).unwrap_or('?');
                    let rgb = ts
                        .get(id)
                        .and_then(|t| t.display.as_ref())
                        .and_then(|d| d.color.as_deref())
                        .and_then(hex_color);
                    match (style.color, rgb) {
                        (true, Some((r, g, b))) => {
                            let _ = write!(out, "\x1b[38;2;{r};{g};{b}m{ch}\x1b[0m");
                        }
                        _ => out.push(ch),
                    }
                }
            }
        }
        out.push('\n');
    }
    out
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

const CELL: i64 = 40;
const TICK: i64 = 5;

/// One unit square per tile, filled with its display color and labelled
/// with its short label. Each side carrying a glue gets one tick mark per
/// unit of strength.
pub fn render_svg(assembly: &Assembly, ts: &TileSet) -> String {
    let (lo, hi) = frame(assembly);
    let width = (hi.x - lo.x + 1) * CELL;
    let height = (hi.y - lo.y + 1) * CELL;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    for (p, id) in assembly.iter() {
        let left = (p.x - lo.x) * CELL;
        let top = (hi.y - p.y) * CELL;
        let tile = ts.get(id);
        let name = tile.map(|t| t.name.as_str()).unwrap_or("?");
        let _ = writeln!(
            s,
            r##"  <rect x="{left}" y="{top}" width="{CELL}" height="{CELL}" fill="{}" stroke="#333333" stroke-width="1"><title>{} at ({}, {})</title></rect>"##,
            fill_color(ts, id),
            xml_escape(name),
            p.x,
            p.y
        );
        let label = tile.map(|t| t.short_label()).unwrap_or('?');
        let _ = writeln!(
            s,
            r#"  <text x="{}" y="{}" font-family="monospace" font-size="16" text-anchor="middle">{}</text>"#,
            left + CELL / 2,
            top + CELL / 2 + 6,
            xml_escape(&label.to_string())
        );
        let Some(tile) = tile else { continue };
        for side in Direction::ALL {
            let strength = i64::from(tile.glue(side).strength);
            if tile.glue(side).is_null() || strength == 0 {
                continue;
            }
            for k in 0..strength {
                // ticks spread evenly along the side, pointing inward
                let along = CELL * (k + 1) / (strength + 1);
                let (x1, y1, x2, y2) = match side {
                    Direction::North => (left + along, top, left + along, top + TICK),
                    Direction::South => (left + along, top + CELL, left + along, top + CELL - TICK),
                    Direction::West => (left, top + along, left + TICK, top + along),
                    Direction::East => (left + CELL, top + along, left + CELL - TICK, top + along),
                };
                let _ = writeln!(
                    s,
                    r##"  <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#000000" stroke-width="2"/>"##
                );
            }
        }
    }
    s.push_str("</svg>\n");
    s
}
