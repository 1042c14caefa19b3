use serde::{Deserialize, Serialize};

use crate::dynamics::{AssemblyGraph, AssemblySequence, Attachment, ExplorationStatus};
use crate::model::{
    validate_tas, Assembly, Diagnostic, Direction, Glue, Position, Tas, TileDisplay, TileSet, TileType,
};
use crate::verify::Witness;

use super::{check_version, LoadError, SCHEMA_VERSION};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TilesetDocument {
    schema_version: u32,
    temperature: u32,
    tiles: Vec<TileEntry>,
    seed: Vec<PlacementEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TileEntry {
    name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    north: Option<(String, u32)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    east: Option<(String, u32)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    south: Option<(String, u32)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    west: Option<(String, u32)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    display: Option<TileDisplay>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PlacementEntry {
    x: i64,
    y: i64,
    tile: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StepEntry {
    x: i64,
    y: i64,
    tile: String,
    strength: u32,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SnapshotDocument {
    schema_version: u32,
    placements: Vec<PlacementEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TraceDocument {
    schema_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    position: Option<Position>,
    start: Vec<PlacementEntry>,
    steps: Vec<StepEntry>,
}

/// Reads a tileset document into a validated system. Any problem, from a
/// syntax error to an unstable seed, rejects the whole document.
pub fn parse_tileset(bytes: &[u8]) -> Result<Tas, LoadError> {
    let doc: TilesetDocument = serde_json::from_slice(bytes)?;
    check_version(doc.schema_version)?;

    let tiles: Vec<TileType> = doc
        .tiles
        .into_iter()
        .map(|t| {
            let mut tile = TileType::new(t.name);
            for (side, glue) in [
                (Direction::North, t.north),
                (Direction::East, t.east),
                (Direction::South, t.south),
                (Direction::West, t.west),
            ] {
                if let Some((label, strength)) = glue {
                    tile = tile.with_glue(side, Glue::new(label, strength));
                }
            }
            tile.display = t.display;
            tile
        })
        .collect();
    let tileset = TileSet::new(tiles);

    let mut diagnostics = Vec::new();
    let mut seed = Assembly::new();
    for entry in doc.seed {
        let position = Position::new(entry.x, entry.y);
        match tileset.id_of(&entry.tile) {
            None => diagnostics.push(Diagnostic::UnknownSeedTile { position, tile: entry.tile }),
            Some(id) => {
                if seed.insert(position, id).is_some() {
                    diagnostics.push(Diagnostic::DuplicateSeedPosition { position });
                }
            }
        }
    }

    let tas = Tas::new_unchecked(tileset, seed, doc.temperature);
    diagnostics.extend(validate_tas(&tas));
    if diagnostics.is_empty() {
        Ok(tas)
    } else {
        Err(LoadError::Invalid(diagnostics))
    }
}

fn glue_entry(glue: &Glue) -> Option<(String, u32)> {
    (!glue.is_null() || glue.strength != 0).then(|| (glue.label.clone(), glue.strength))
}

fn placement_entries(assembly: &Assembly, ts: &TileSet) -> Vec<PlacementEntry> {
    assembly.iter().map(|(p, t)| PlacementEntry { x: p.x, y: p.y, tile: ts.name_of(t) }).collect()
}

fn step_entry(att: &Attachment, ts: &TileSet) -> StepEntry {
    StepEntry { x: att.position.x, y: att.position.y, tile: ts.name_of(att.tile), strength: att.strength }
}

fn compact<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("documents serialize")
}

/// Writes `"key": [` ... `]` with one record per line.
fn push_records(out: &mut Vec<String>, key: &str, records: Vec<String>) {
    if records.is_empty() {
        out.push(format!("  \"{key}\": []"));
        return;
    }
    let n = records.len();
    let mut s = format!("  \"{key}\": [\n");
    for (i, r) in records.into_iter().enumerate() {
        s.push_str("    ");
        s.push_str(&r);
        if i + 1 < n {
            s.push(',');
        }
        s.push('\n');
    }
    s.push_str("  ]");
    out.push(s);
}

fn finish(fields: Vec<String>) -> String {
    format!("{{\n{}\n}}\n", fields.join(",\n"))
}

pub fn write_tileset(tas: &Tas) -> String {
    let ts = tas.tileset();
    let tiles = ts
        .tiles()
        .iter()
        .map(|t| {
            compact(&TileEntry {
                name: t.name.clone(),
                north: glue_entry(t.glue(Direction::North)),
                east: glue_entry(t.glue(Direction::East)),
                south: glue_entry(t.glue(Direction::South)),
                west: glue_entry(t.glue(Direction::West)),
                display: t.display.clone(),
            })
        })
        .collect();
    let seed = placement_entries(tas.seed(), ts).iter().map(compact).collect();
    let mut fields =
        vec![format!("  \"schema_version\": {SCHEMA_VERSION}"), format!("  \"temperature\": {}", tas.temperature())];
    push_records(&mut fields, "tiles", tiles);
    push_records(&mut fields, "seed", seed);
    finish(fields)
}

fn resolve_placements(entries: Vec<PlacementEntry>, ts: &TileSet, field: &str) -> Result<Assembly, LoadError> {
    let mut out = Assembly::new();
    for (i, e) in entries.into_iter().enumerate() {
        let position = Position::new(e.x, e.y);
        let id = ts
            .id_of(&e.tile)
            .ok_or_else(|| LoadError::field(format!("{field}[{i}].tile"), format!("unknown tile type {:?}", e.tile)))?;
        if out.insert(position, id).is_some() {
            return Err(LoadError::field(format!("{field}[{i}]"), format!("second tile at {position}")));
        }
    }
    Ok(out)
}

/// Reads an assembly snapshot over `ts`.
pub fn parse_assembly(bytes: &[u8], ts: &TileSet) -> Result<Assembly, LoadError> {
    let doc: SnapshotDocument = serde_json::from_slice(bytes)?;
    check_version(doc.schema_version)?;
    resolve_placements(doc.placements, ts, "placements")
}

pub fn write_assembly(assembly: &Assembly, ts: &TileSet) -> String {
    let mut fields = vec![format!("  \"schema_version\": {SCHEMA_VERSION}")];
    push_records(&mut fields, "placements", placement_entries(assembly, ts).iter().map(compact).collect());
    finish(fields)
}

/// Reads a trace (or witness) document. The sequence is not replayed here.
pub fn parse_trace(bytes: &[u8], ts: &TileSet) -> Result<AssemblySequence, LoadError> {
    let doc: TraceDocument = serde_json::from_slice(bytes)?;
    check_version(doc.schema_version)?;
    let start = resolve_placements(doc.start, ts, "start")?;
    let steps = doc
        .steps
        .into_iter()
        .enumerate()
        .map(|(i, s)| {
            let tile = ts.id_of(&s.tile).ok_or_else(|| {
                LoadError::field(format!("steps[{i}].tile"), format!("unknown tile type {:?}", s.tile))
            })?;
            Ok(Attachment { position: Position::new(s.x, s.y), tile, strength: s.strength })
        })
        .collect::<Result<_, LoadError>>()?;
    Ok(AssemblySequence { start, steps })
}

fn trace_fields(sequence: &AssemblySequence, ts: &TileSet, header: Vec<String>) -> String {
    let mut fields = header;
    push_records(&mut fields, "start", placement_entries(&sequence.start, ts).iter().map(compact).collect());
    push_records(&mut fields, "steps", sequence.steps.iter().map(|s| compact(&step_entry(s, ts))).collect());
    finish(fields)
}

pub fn write_trace(sequence: &AssemblySequence, ts: &TileSet) -> String {
    trace_fields(sequence, ts, vec![format!("  \"schema_version\": {SCHEMA_VERSION}")])
}

/// A witness as a trace document annotated with its kind and position.
pub fn write_witness(witness: &Witness, ts: &TileSet) -> String {
    let mut header = vec![
        format!("  \"schema_version\": {SCHEMA_VERSION}"),
        format!("  \"kind\": {}", compact(&witness.kind.name())),
    ];
    if let Some(p) = witness.position {
        header.push(format!("  \"position\": {}", compact(&p)));
    }
    trace_fields(&witness.trace, ts, header)
}

#[derive(Serialize)]
struct NodeRecord<'a> {
    id: usize,
    depth: usize,
    terminal: bool,
    truncated: bool,
    placements: Vec<(i64, i64, &'a str)>,
}

#[derive(Serialize)]
struct EdgeRecord<'a> {
    source: usize,
    target: usize,
    x: i64,
    y: i64,
    tile: &'a str,
    strength: u32,
}

/// Machine-readable dump of an assembly graph.
pub fn write_graph(graph: &AssemblyGraph, ts: &TileSet) -> String {
    let name = |id: crate::model::TileId| ts.get(id).map(|t| t.name.as_str()).unwrap_or("?");
    let status = match graph.status() {
        ExplorationStatus::Complete => "complete",
        ExplorationStatus::StateBudgetExceeded => "state-budget-exceeded",
        ExplorationStatus::StoppedOnViolation => "stopped-on-violation",
    };
    let nodes = graph
        .ids()
        .map(|id| {
            let n = graph.node(id);
            compact(&NodeRecord {
                id: id.0,
                depth: n.depth,
                terminal: n.terminal,
                truncated: n.truncated,
                placements: n.assembly.iter().map(|(p, t)| (p.x, p.y, name(t))).collect(),
            })
        })
        .collect();
    let edges = graph
        .edges()
        .iter()
        .map(|e| {
            compact(&EdgeRecord {
                source: e.source.0,
                target: e.target.0,
                x: e.attachment.position.x,
                y: e.attachment.position.y,
                tile: name(e.attachment.tile),
                strength: e.attachment.strength,
            })
        })
        .collect();
    let mut fields = vec![format!("  \"schema_version\": {SCHEMA_VERSION}"), format!("  \"status\": \"{status}\"")];
    push_records(&mut fields, "nodes", nodes);
    push_records(&mut fields, "edges", edges);
    finish(fields)
}
